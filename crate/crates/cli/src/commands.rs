use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

use rsdp::experiment::{run_gap_experiment, write_csv, ExperimentConfig, ExperimentMode};
use rsdp::generate::{generate, FamilyParams, GraphFamily};
use rsdp::graph::io::{read_graph, write_edge_list, write_graph};
use rsdp::mechanism::{answer, AnswerRecord, BudgetLedger, LedgerState, PrivacyBudget};
use rsdp::oracle::{
    builtin_query_set, enumerate_universe, global_sensitivity_exact, local_sensitivity_exact, smooth_sensitivity_exact,
    verify_bounds, NamedQuery, VerifyConfig,
};
use rsdp::projection::ProjectionMethod;
use rsdp::query::QuerySpec;
use rsdp::sensitivity::{g_envelope, restricted_sensitivity_exact, rs_bound, smooth_upper_bound};
use rsdp::{AdjacencyModel, PrivacyParams, SensitivityKind, SensitivityReport, SmoothBoundParams};

use crate::{
    AnswerArgs, Command, ExperimentArgs, Family, GenArgs, Mode, Model, ProjectArgs, ProjectModel, SensitivityCommand,
    VerifyArgs,
};

/// A computation that ran to completion but did not establish what was
/// asked of it.
#[derive(Debug)]
pub struct Failure(pub String);

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failure {}

pub fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(err) = cause.downcast_ref::<rsdp::Error>() {
            return if err.is_computational() { 2 } else { 1 };
        }
        if cause.downcast_ref::<Failure>().is_some() {
            return 2;
        }
    }
    1
}

pub fn run(cmd: Command) -> Result<()> {
    match cmd {
        Command::Gen(a) => gen(a),
        Command::Project(a) => project(a),
        Command::Sensitivity(c) => sensitivity(c),
        Command::Answer(a) => answer_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Experiment(a) => experiment(a),
    }
}

fn family(f: Family) -> GraphFamily {
    match f {
        Family::Star => GraphFamily::Star,
        Family::Complete => GraphFamily::Complete,
        Family::CompleteBipartite => GraphFamily::CompleteBipartite,
        Family::Cycle => GraphFamily::Cycle,
        Family::UniformRandom => GraphFamily::UniformRandom,
        Family::PreferentialAttachment => GraphFamily::PreferentialAttachment,
    }
}

fn model(m: Model) -> AdjacencyModel {
    match m {
        Model::Edge => AdjacencyModel::Edge,
        Model::Vertex => AdjacencyModel::Vertex,
    }
}

fn emit(out: Option<&Path>, body: &[u8]) -> Result<()> {
    match out {
        Some(p) => fs::write(p, body).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut s = serde_json::to_vec_pretty(value)?;
    s.push(b'\n');
    Ok(s)
}

fn load_query(path: &Path) -> Result<(QuerySpec, NamedQuery)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading query {}", path.display()))?;
    let spec = QuerySpec::from_json(&text)?;
    let query = spec.to_query()?;
    let name = spec
        .id()
        .map(str::to_owned)
        .or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "query".into());
    Ok((spec, NamedQuery::new(name, query)))
}

fn gen(a: GenArgs) -> Result<()> {
    let params = FamilyParams { p: a.p, attach: a.attach, left: a.left, label_p: a.label_p };
    let g = generate(family(a.family), a.n, &params, a.seed)?;
    write_graph(&g, &a.edges, &a.labels)?;
    Ok(())
}

fn project(a: ProjectArgs) -> Result<()> {
    let g = read_graph(&a.graph.edges, &a.graph.labels)?;
    let method = match a.model {
        ProjectModel::Edge => ProjectionMethod::Edge,
        ProjectModel::Vertex => ProjectionMethod::Vertex,
        ProjectModel::Greedy => ProjectionMethod::Greedy,
    };
    let out = method.project(&g, a.k)?;
    if let Some(p) = &a.out_edges {
        write_edge_list(&out.graph, std::io::BufWriter::new(fs::File::create(p)?))?;
    }
    emit(a.out.as_deref(), &json(&out.report(method, a.k))?)
}

#[derive(Serialize)]
struct SensitivityOutput {
    query: String,
    model: AdjacencyModel,
    k: u32,
    reports: Vec<SensitivityReport>,
}

#[derive(Serialize)]
struct SmoothOutput {
    params: SmoothBoundParams,
    smooth_upper: SensitivityReport,
    /// `g(β/c)`.
    g: f64,
    /// `e^{(β/c)d̂}·g(β/c)·RS`, an upper bound on `smooth_upper`.
    envelope: f64,
}

fn sensitivity(c: SensitivityCommand) -> Result<()> {
    match c {
        SensitivityCommand::Bounds { query, k, model: m } => {
            let (_, nq) = load_query(&query)?;
            let m = model(m);
            let out = SensitivityOutput { query: nq.name, model: m, k, reports: vec![rs_bound(&nq.query, k, m)] };
            emit(None, &json(&out)?)
        }
        SensitivityCommand::Exact { query, k, model: m, n, alphabet, beta, edges, labels } => {
            let (_, nq) = load_query(&query)?;
            let m = model(m);
            let u = enumerate_universe(n, alphabet)?;
            let f = u.evaluate(&nq.query);
            let mut reports = vec![
                restricted_sensitivity_exact(u.distances(m), &f, &u.members(k))?,
                SensitivityReport::new(
                    global_sensitivity_exact(&u, &f, m),
                    SensitivityKind::GlobalExact,
                    format!("maximum local sensitivity over all {} datasets", u.len()),
                ),
            ];
            if let (Some(e), Some(l)) = (edges, labels) {
                let g = read_graph(&e, &l)?;
                let i = u.index_of(&g)?;
                reports.push(SensitivityReport::new(
                    local_sensitivity_exact(&u, &f, &g, m)?,
                    SensitivityKind::LocalExact,
                    "maximum over one-step neighbors of the graph",
                ));
                reports.push(SensitivityReport::new(
                    smooth_sensitivity_exact(&u, &f, beta, m)?[i],
                    SensitivityKind::SmoothExact,
                    format!("exact smooth sensitivity at beta = {beta}"),
                ));
            }
            emit(None, &json(&SensitivityOutput { query: nq.name, model: m, k, reports })?)
        }
        SensitivityCommand::Smooth { beta, c, rs, d_hat } => {
            let params = SmoothBoundParams { beta, c, rs, d_hat };
            let value = smooth_upper_bound(&params)?;
            let g = g_envelope(beta, c)?;
            let out = SmoothOutput {
                params,
                smooth_upper: SensitivityReport::new(
                    value,
                    SensitivityKind::SmoothUpper,
                    "maximum over integer distances at or above d_hat",
                ),
                g,
                envelope: (beta / c * d_hat).exp() * g * rs,
            };
            emit(None, &json(&out)?)
        }
    }
}

fn answer_cmd(a: AnswerArgs) -> Result<()> {
    let m = model(a.model);
    let params = PrivacyParams::new(a.epsilon, a.delta, a.seed)?;
    if m == AdjacencyModel::Vertex {
        params.beta()?;
    }
    let (spec, nq) = load_query(&a.query)?;
    let g = read_graph(&a.graph.edges, &a.graph.labels)?;

    let ledger = match &a.budget {
        Some(path) => Some(open_ledger(path, &a)?),
        None => None,
    };
    let released = answer(&nq.query, &g, a.k, &params, m)?;
    if let (Some(path), Some(ledger)) = (&a.budget, &ledger) {
        ledger.charge(params.cost(), Some(&nq.name))?;
        fs::write(path, json(&ledger.state())?).with_context(|| format!("writing {}", path.display()))?;
    }
    let query_id = spec.id().map(str::to_owned).or(Some(nq.name));
    let record = AnswerRecord::new(&released, &params, a.k, query_id, a.emit_scale);
    emit(a.out.as_deref(), &json(&record)?)
}

fn open_ledger(path: &Path, a: &AnswerArgs) -> Result<BudgetLedger> {
    let dataset = a.graph.edges.display().to_string();
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let state: LedgerState = serde_json::from_str(&text).map_err(rsdp::Error::from)?;
        if state.dataset != dataset {
            bail!("budget ledger {} belongs to dataset {:?}, not {:?}", path.display(), state.dataset, dataset);
        }
        Ok(BudgetLedger::from_state(state)?)
    } else {
        let Some(eps) = a.budget_epsilon else {
            bail!("budget ledger {} does not exist; pass --budget-epsilon to create it", path.display());
        };
        Ok(BudgetLedger::new(dataset, PrivacyBudget::new(eps, a.budget_delta)?))
    }
}

fn verify(a: VerifyArgs) -> Result<()> {
    let cfg = VerifyConfig { n: a.n, alphabet: a.alphabet, ks: a.k, beta: a.beta, queries: builtin_query_set() };
    let report = verify_bounds(&cfg)?;
    if let Some(p) = &a.report {
        fs::write(p, json(&report)?).with_context(|| format!("writing {}", p.display()))?;
    }
    emit(None, report.table().as_bytes())?;
    if !report.passed {
        return Err(Failure(format!("{} checks failed", report.failures().count())).into());
    }
    Ok(())
}

fn experiment(a: ExperimentArgs) -> Result<()> {
    let queries = if a.query.is_empty() {
        builtin_query_set()
    } else {
        a.query.iter().map(|p| load_query(p).map(|(_, q)| q)).collect::<Result<_>>()?
    };
    let cfg = ExperimentConfig {
        family: family(a.family),
        n: a.n,
        family_params: FamilyParams { p: a.p, attach: a.attach, left: a.left, label_p: a.label_p },
        ks: a.k,
        models: a.models.into_iter().map(model).collect(),
        queries,
        epsilon: a.epsilon,
        delta: a.delta,
        trials: a.trials,
        seed: a.seed,
        mode: match a.mode {
            Mode::Exact => ExperimentMode::Exact,
            Mode::Bound => ExperimentMode::Bound,
        },
    };
    let rows = run_gap_experiment(&cfg)?;
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf)?;
    emit(a.out.as_deref(), &buf)
}

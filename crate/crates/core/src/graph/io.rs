//! Edge-list and label-table files.
//!
//! The edge list holds one whitespace-separated `u v` pair per line, 0-based.
//! Blank lines and lines starting with `#` are skipped. The label table is a
//! CSV file with header `vertex,l0,l1,...`; its row count fixes `n`, so
//! vertices missing from the edge list are isolated.

use std::io::{BufRead, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::LabeledGraph;

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let tok =
                parts.next().ok_or_else(|| Error::Parse { line: i + 1, msg: format!("missing {what} endpoint") })?;
            tok.parse().map_err(|_| Error::Parse { line: i + 1, msg: format!("bad vertex id {tok:?}") })
        };
        let u = next("first")?;
        let v = next("second")?;
        if parts.next().is_some() {
            return Err(Error::Parse { line: i + 1, msg: "expected exactly two vertex ids".into() });
        }
        edges.push((u, v));
    }
    Ok(edges)
}

pub fn parse_labels<R: Read>(reader: R) -> Result<Vec<Vec<u32>>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.get(0) != Some("vertex") {
        return Err(Error::Parse { line: 1, msg: "label header must start with `vertex`".into() });
    }
    for (j, h) in headers.iter().skip(1).enumerate() {
        if h != format!("l{j}") {
            return Err(Error::Parse { line: 1, msg: format!("expected column l{j}, found {h:?}") });
        }
    }
    let dim = headers.len() - 1;
    let mut rows: Vec<Option<Vec<u32>>> = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record?;
        let line = i + 2;
        let parse = |s: &str| -> Result<u32> {
            s.parse().map_err(|_| Error::Parse { line, msg: format!("bad integer {s:?}") })
        };
        let v = parse(&record[0])? as usize;
        let values = record.iter().skip(1).map(parse).collect::<Result<Vec<_>>>()?;
        if values.len() != dim {
            return Err(Error::Parse { line, msg: format!("expected {dim} label values") });
        }
        if rows.len() <= v {
            rows.resize(v + 1, None);
        }
        if rows[v].replace(values).is_some() {
            return Err(Error::Parse { line, msg: format!("vertex {v} listed twice") });
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::LabelShape(format!("no label row for vertex {v}"))))
        .collect()
}

pub fn read_graph(edges: &Path, labels: &Path) -> Result<LabeledGraph> {
    let edge_list = parse_edge_list(std::io::BufReader::new(std::fs::File::open(edges)?))?;
    let label_rows = parse_labels(std::fs::File::open(labels)?)?;
    LabeledGraph::new(label_rows.len(), edge_list, label_rows)
}

pub fn write_edge_list<W: Write>(g: &LabeledGraph, mut w: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_labels<W: Write>(g: &LabeledGraph, w: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    let mut header = vec!["vertex".to_string()];
    header.extend((0..g.label_dim()).map(|j| format!("l{j}")));
    wtr.write_record(&header)?;
    for v in 0..g.n() {
        let mut row = vec![v.to_string()];
        row.extend(g.label(v).iter().map(u32::to_string));
        wtr.write_record(&row)?;
    }
    wtr.flush()?;
    Ok(())
}

pub fn write_graph(g: &LabeledGraph, edges: &Path, labels: &Path) -> Result<()> {
    write_edge_list(g, std::io::BufWriter::new(std::fs::File::create(edges)?))?;
    write_labels(g, std::fs::File::create(labels)?)
}

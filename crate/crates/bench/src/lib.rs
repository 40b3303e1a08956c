//! Fixed inputs shared by the benchmarks.

use rsdp::generate::{generate, FamilyParams, GraphFamily};
use rsdp::LabeledGraph;

/// Preferential-attachment graph with a fixed seed and about a third of the
/// vertices labeled 1.
pub fn power_law_graph(n: usize, attach: usize) -> LabeledGraph {
    let params = FamilyParams { attach, label_p: 0.3, ..FamilyParams::default() };
    generate(GraphFamily::PreferentialAttachment, n, &params, 0xbe7c).expect("valid benchmark parameters")
}

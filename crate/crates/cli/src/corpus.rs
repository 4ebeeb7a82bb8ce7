//! Instance generation and the independent-set reduction as files.

use serde::{Deserialize, Serialize};

use colclust_core::instance_gen::{hardness_reduction, random_complete_bicoloured, random_instance, ReductionOutput, SimpleGraph};
use colclust_core::{Colour, EdgeColouredGraph};

use crate::format::write_instance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenSpec {
    Random { n: usize, m: usize, t: Colour },
    /// Complete graph on `n` vertices with two colours.
    Complete { n: usize },
}

pub fn generate(spec: GenSpec, seed: u64) -> colclust_core::Result<EdgeColouredGraph> {
    match spec {
        GenSpec::Random { n, m, t } => random_instance(n, m, t, seed),
        GenSpec::Complete { n } => Ok(random_complete_bicoloured(n, seed)),
    }
}

/// Generates and serializes an instance with its seed in a comment.
pub fn generate_file(spec: GenSpec, seed: u64) -> colclust_core::Result<String> {
    let g = generate(spec, seed)?;
    let kind = match spec {
        GenSpec::Random { .. } => "random",
        GenSpec::Complete { .. } => "complete",
    };
    Ok(write_instance(&g, &[format!("generator={kind} seed={seed}")]))
}

/// Vertex correspondence of a reduction, with 1-based labels throughout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMapFile {
    pub source_vertices: usize,
    pub source_edges: Vec<[usize; 2]>,
    /// Proper 3-colouring of the source used to colour the gadget.
    pub psi: Vec<Colour>,
    /// Gadget label of each source vertex.
    pub original: Vec<usize>,
    /// Gadget label of the pendant of each source vertex.
    pub pendant: Vec<usize>,
    /// Gadget label of the subdivision vertex of each source edge.
    pub subdivision: Vec<usize>,
}

impl ReductionMapFile {
    pub fn from_output(red: &ReductionOutput) -> Self {
        let one_based = |ids: &[usize]| ids.iter().map(|&x| x + 1).collect();
        Self {
            source_vertices: red.source.vertex_count(),
            source_edges: red.source.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            psi: red.psi.clone(),
            original: one_based(&red.vertex_map.original),
            pendant: one_based(&red.vertex_map.pendant),
            subdivision: one_based(&red.vertex_map.subdivision),
        }
    }
}

/// Gadget instance text and its JSON vertex map.
pub fn reduce(source: &SimpleGraph) -> colclust_core::Result<(String, String)> {
    let red = hardness_reduction(source)?;
    let instance = write_instance(
        &red.gprime,
        &[format!(
            "gadget of a graph with {} vertices and {} edges; optimum = alpha + {}",
            source.vertex_count(),
            source.edges().len(),
            source.edges().len()
        )],
    );
    let map = serde_json::to_string_pretty(&ReductionMapFile::from_output(&red))
        .expect("plain data serializes");
    Ok((instance, map))
}

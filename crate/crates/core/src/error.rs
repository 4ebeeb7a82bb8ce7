use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{u},{v}}} has colour {colour}, outside 1..={t}")]
    ColourOutOfRange { u: usize, v: usize, colour: u32, t: u32 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {{{0},{1}}}")]
    ParallelEdge(usize, usize),
    #[error("colouring has {got} entries, graph has {expected} vertices")]
    ColouringLength { expected: usize, got: usize },
    #[error("vertex {vertex} has colour {colour}, outside 1..={t}")]
    VertexColourOutOfRange { vertex: usize, colour: u32, t: u32 },
    #[error("edge index {index} out of range ({m} edges)")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("parameter k = {k} needs about {trials:e} trials, beyond the 64-bit budget")]
    ParameterTooLarge { k: u64, trials: f64 },
    #[error("search space {space} exceeds the configured bound {bound}")]
    SizeLimit { space: u128, bound: u128 },
    #[error("reduction not applicable: {0}")]
    ReductionInapplicable(String),
}

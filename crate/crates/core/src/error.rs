use thiserror::Error;

/// Errors raised while building or querying a complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("vertex index {index} out of range (vertex count {vertex_count})")]
    InvalidIndex { index: usize, vertex_count: usize },

    #[error("cell {cell:?} repeats a vertex")]
    DegenerateCell { cell: Vec<usize> },

    #[error("duplicate cell {cell:?}")]
    DuplicateCell { cell: Vec<usize> },

    #[error("pentagon {pentagon:?} has a chord {chord:?}")]
    PentagonChord { pentagon: [usize; 5], chord: (usize, usize) },

    #[error("1-skeleton contains the full 4-cycle {cycle:?}")]
    Full4Cycle { cycle: [usize; 4] },

    #[error("3-clique {clique:?} of the 1-skeleton is not a triangle cell")]
    UnfilledTriangleClique { clique: [usize; 3] },

    #[error("cells {first:?} and {second:?} share more than one edge")]
    CellsShareEdges { first: Vec<usize>, second: Vec<usize> },

    #[error("edge {edge:?} lies in {cells} two-cells")]
    NonManifoldEdge { edge: (usize, usize), cells: usize },

    #[error("boundary passes through vertex {vertex} more than once")]
    NonManifoldVertex { vertex: usize },

    #[error("complex is not flag: {clique:?} is pairwise adjacent but spans no simplex")]
    FlagViolation { clique: Vec<usize> },

    #[error("vertex {vertex} is not a corner of cell {cell:?}")]
    VertexNotInCell { vertex: usize, cell: Vec<usize> },

    #[error("center {center} does not carry a 5-wheel")]
    InvalidCenter { center: usize },
}

impl TopologyError {
    pub fn is_non_manifold(&self) -> bool {
        matches!(self, TopologyError::NonManifoldEdge { .. } | TopologyError::NonManifoldVertex { .. })
    }
}

pub type Result<T> = std::result::Result<T, TopologyError>;

pub(crate) fn check_index(index: usize, vertex_count: usize) -> Result<()> {
    if index < vertex_count {
        Ok(())
    } else {
        Err(TopologyError::InvalidIndex { index, vertex_count })
    }
}

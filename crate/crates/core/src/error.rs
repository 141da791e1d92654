use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a network needs at least one node")]
    EmptyNetwork,

    #[error("edge {edge}: node {node} is out of range for a {n_nodes}-node network")]
    IndexOutOfRange { edge: usize, node: usize, n_nodes: usize },

    #[error("edge {edge}: resistance {value} must be finite and strictly positive")]
    NonPositiveResistance { edge: usize, value: String },

    #[error("edge {edge}: self-loop at node {node}")]
    SelfLoop { edge: usize, node: usize },

    #[error("source and sink are the same node ({0})")]
    SameNode(usize),

    #[error("network is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("found {found} zero eigenvalues but the network has {components} connected components")]
    MultipleZeroModes { found: usize, components: usize },

    #[error("Jacobi eigensolver did not converge in {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("grounded Kirchhoff system is singular")]
    SingularReducedSystem,

    #[error("{0}")]
    OutOfRange(String),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
}

//! Vertex energies of graphs.
//!
//! The energy of vertex `v` is `E(v) = sum_j p_vj |lambda_j|`, where `p_vj`
//! is the squared `v`-th entry of the `j`-th unit eigenvector of the
//! adjacency matrix. It is computed two ways: from an eigendecomposition, and
//! from the characteristic polynomials of `G` and `G - v` alone through a
//! Coulson-type integral along the imaginary axis.
//!
//! ```
//! use vertex_energy::{coulson_vertex_energy, make_family, Family};
//!
//! let star = make_family(Family::Star, 10).unwrap();
//! let center = coulson_vertex_energy(&star, 0, 1e-9).unwrap();
//! assert!((center - 3.0).abs() < 1e-7);
//! ```

pub mod charpoly;
pub mod compare;
pub mod coulson;
pub mod covers;
pub mod error;
pub mod graph;
pub mod poly;
pub mod quadrature;
pub mod report;
pub mod spectral;
pub mod verify;

pub use charpoly::{bipartite_coeffs, charpoly, charpoly_minus_vertex, sachs_charpoly, BipartiteCoeffs};
pub use compare::{
    compare_vertices_cross_graph, compare_vertices_same_graph, quasi_compare, CrossComparison, OrderRelation,
    Outcome, VertexComparison,
};
pub use coulson::{coulson_pendant_energy, coulson_vertex_energy, PendantForm};
pub use covers::{SubsetKind, VertexSubsetReport};
pub use error::{Error, Result};
pub use graph::{
    attach_pendant_path, make_family, parse_edge_list, parse_graph6, Bipartition, BipartitionResult, Family, Graph,
};
pub use poly::IntPolynomial;
pub use report::{energy_report, EnergyReport, Method, VertexEnergy};
pub use spectral::{decompose, vertex_energy_eigen, Spectrum};
pub use verify::{verify_graph, CheckStatus, VerifyReport};

//! Exact geodesic shortest paths on triangulated polyhedral surfaces.
//!
//! The crate implements continuous-Dijkstra wavefront propagation (interval
//! windows on edges) for exact single-source geodesic distances, an
//! instrumented section-grouped wavefront simulation, a hierarchical convex
//! hull structure with tangent bridges, and independent brute-force oracles
//! used to validate everything.
//!
//! See the `book/` guide for a narrative walk-through, or jump straight to
//! [`solver::propagate`] for distances and [`solver::extract_path`] for
//! paths.

pub mod cli;
pub mod generate;
pub mod geom;
pub mod hull;
pub mod mesh;
pub mod oracle;
pub mod search;
pub mod solver;
pub mod stats;
pub mod svg;
pub mod unfold;
pub mod wavefront;

pub use mesh::{load_mesh, parse_mesh, HalfedgeMesh, MeshFormat, SurfacePoint};

// The guide's code listings run under `cargo test --doc`; one module per
// chapter so a failing listing names its source file.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/meshes.md")]
    mod meshes {}
    #[doc = include_str!("../../../book/src/unfolding.md")]
    mod unfolding {}
    #[doc = include_str!("../../../book/src/exact-solver.md")]
    mod exact_solver {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/wavefront.md")]
    mod wavefront {}
    #[doc = include_str!("../../../book/src/hulls.md")]
    mod hulls {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! Geometry and connectivity of non-orthogonal hexahedral meshes.
//!
//! A cell is described by its 8 corner positions, from which the 12 edge
//! vectors, the 3 node vectors `b` (mean edges), the 6 oriented face
//! vectors `f`, the dual-basis matrices `beta` / `gamma` and the volume are
//! derived. Meshes add face-to-face adjacency and boundary tags, and can be
//! written to / read from a line-oriented text format with exact decimal
//! round-trip.

mod cell;
mod error;
mod io;
mod mesh;
pub mod sample;

pub use cell::{HexCell, Material, EDGE_ENDPOINTS, FACE_CORNERS};
pub use error::{GeometryError, MeshError, ParseError};
pub use io::{load_mesh, load_mesh_from_str, save_mesh, save_mesh_to_string};
pub use mesh::{
    build_structured_mesh, BoundaryCondition, BoundaryFace, Link, Mesh, StructuredSpec,
};

pub type Vec3 = nalgebra::Vector3<f64>;
pub type Mat3 = nalgebra::Matrix3<f64>;

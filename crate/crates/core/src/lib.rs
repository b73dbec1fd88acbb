pub mod cutwidth;
pub mod drawing;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod layout;
pub mod planarity;
pub mod planarizer;
pub mod sample;
pub mod solvers;

pub use cutwidth::{exact_cutwidth, exact_cutwidth_with_limit, DEFAULT_ORACLE_LIMIT};
pub use error::{Error, ErrorKind, Result};
pub use graph::{identify_vertices, Edge, Graph, GraphBuilder};
pub use layout::{cut_profile, layout_to_path_decomposition, CutProfile, LinearLayout, PathDecomposition};
pub use planarity::is_planar;

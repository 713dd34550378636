//! Ego-network structural encodings for undirected graphs.
//!
//! Every vertex `v` is described by the multiset of `(distance, degree)`
//! pairs of the vertices within `alpha` hops, with degrees measured inside
//! that induced ego-network. Graph-level encodings are the sorted multisets
//! of vertex encodings. The crate also provides 1-WL color refinement, a
//! layer-aware extension of the encoding, generators for the graph families
//! used to probe expressivity, and a survey harness that buckets a graph
//! collection by encoding.
//!
//! ```
//! use igel::{families, encode};
//!
//! let c6 = families::gen_cycle(6).unwrap();
//! let triangles = families::gen_disjoint_union(
//!     &families::gen_cycle(3).unwrap(),
//!     &families::gen_cycle(3).unwrap(),
//! );
//! // 1-WL cannot separate these two 2-regular graphs, the encoding can.
//! assert!(igel::wl::wl_joint_refine(&c6, &triangles, None).distinguished_at.is_none());
//! assert!(!encode::igel_equivalent(&c6, &triangles, 1).unwrap());
//! ```

pub mod encode;
pub mod error;
pub mod families;
pub mod gamma;
pub mod graph;
pub mod io;
pub mod par;
pub mod survey;
pub mod wl;

pub use encode::{
    encode_graph, encode_graph_concat, igel_encode_all, igel_encode_vertex, igel_equivalent,
    vectorize, GraphEncoding, SparseVector, VertexEncoding,
};
pub use error::{Error, Result};
pub use gamma::{gamma_encode_vertex, gamma_equivalent, GammaVertexEncoding};
pub use graph::{Diameter, Graph};
pub use io::{
    parse_edge_list, parse_graph6, parse_graph6_collection, write_graph6, GraphCollection,
};
pub use par::Execution;
pub use survey::{pairwise_compare, run_survey, EncoderSpec, SurveyReport, Verdict};
pub use wl::{wl_joint_refine, wl_refine, Coloring};

//! Concrete families: staircase tiles and graphs, `Q(a, b, n)` members and
//! the H provider.

pub mod hgraph;
pub mod ladders;
pub mod staircase;
pub mod strands;

pub use staircase::{
    build_q_member, build_s_graph, build_s_tile, predicted_cr, EdgeRole, QMember, StaircaseGraph, StaircaseTile,
};
pub use hgraph::{build_h_graph, build_h_tile, h_crossings, HGraph, HTile};

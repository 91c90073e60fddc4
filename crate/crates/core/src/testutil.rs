pub(crate) use crate::small_graphs::{random_connected_graph, random_graph};
use crate::vertex_set::VertexSet;

pub(crate) fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

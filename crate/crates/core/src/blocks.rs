//! Blocks (maximal nonseparable subgraphs) and cut vertices.

use alloc::vec;
use alloc::vec::Vec;

use serde::Serialize;

use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockStructure {
    /// Edge sets of the blocks, each sorted; blocks ordered by smallest edge.
    pub blocks: Vec<Vec<Edge>>,
    /// Cut vertices in ascending order.
    pub cut_vertices: Vec<usize>,
}

/// Hopcroft–Tarjan block decomposition with an explicit DFS stack.
///
/// Isolated vertices belong to no block.
pub fn blocks_and_cut_vertices(g: &Graph) -> BlockStructure {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut blocks: Vec<Vec<Edge>> = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();
    let mut clock = 0;

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut root_children = 0;
        frames.push((root, UNSEEN, 0));

        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == UNSEEN {
                    if v == root {
                        root_children += 1;
                    }
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let tree_edge = Edge::new(parent, v);
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == tree_edge {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    blocks.sort_unstable_by_key(|b| b[0]);
    BlockStructure {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Connected, at least one vertex, and no cut vertex.
pub fn is_nonseparable(g: &Graph) -> bool {
    g.is_connected() && blocks_and_cut_vertices(g).cut_vertices.is_empty()
}

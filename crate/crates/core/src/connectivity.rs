//! Connectivity predicates used to certify the gadget constructions.
//!
//! Vertex connectivity is decided by brute force over small vertex cuts;
//! edge connectivity between two vertices by unit-capacity augmenting paths.

use crate::graph::{Graph, GraphError};

/// True iff `g` has more than `k` vertices, is connected, and no removal of
/// fewer than `k` vertices disconnects it.
///
/// Every vertex subset of size `< k` is tried, so this is only meant for
/// graphs of a few hundred vertices and `k <= 3`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k || !g.is_connected() {
        return false;
    }
    let mut removed = Vec::with_capacity(k);
    cuts_leave_connected(g, k.saturating_sub(1), 0, &mut removed)
}

fn cuts_leave_connected(g: &Graph, budget: usize, from: usize, removed: &mut Vec<usize>) -> bool {
    if budget == 0 {
        return true;
    }
    for v in from..g.vertex_count() {
        removed.push(v);
        let ok = g.is_connected_without(removed) && cuts_leave_connected(g, budget - 1, v + 1, removed);
        removed.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// 2-connectivity in the multigraph sense: at least two vertices, loopless,
/// connected, and without cut vertices. Unlike
/// `vertex_connectivity_at_least(g, 2)` this accepts two-vertex graphs such
/// as the theta graph.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.vertex_count() < 2 || (0..g.edge_count()).any(|e| g.is_loop(e)) {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    if g.vertex_count() == 2 {
        return true;
    }
    (0..g.vertex_count()).all(|v| g.is_connected_without(&[v]))
}

/// Number of edge-disjoint `source`–`sink` paths, capped at `limit`.
pub fn edge_disjoint_paths(g: &Graph, source: usize, sink: usize, limit: usize) -> usize {
    if source == sink {
        return limit;
    }
    // flow[e] in {-1, 0, 1}, measured along the stored (u, v) orientation.
    let mut flow = vec![0i8; g.edge_count()];
    let mut total = 0;
    let mut via = vec![None; g.vertex_count()];
    while total < limit {
        via.iter_mut().for_each(|x| *x = None);
        let mut visited = vec![false; g.vertex_count()];
        visited[source] = true;
        let mut queue = std::collections::VecDeque::from([source]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &d in g.incident(x) {
                let e = d.edge();
                if g.is_loop(e) {
                    continue;
                }
                let residual = if d.side() == 0 { 1 - flow[e] } else { 1 + flow[e] };
                let y = g.head(d);
                if residual > 0 && !visited[y] {
                    visited[y] = true;
                    via[y] = Some(d);
                    if y == sink {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if !visited[sink] {
            break;
        }
        let mut y = sink;
        while y != source {
            let d = via[y].expect("augmenting path is linked back to the source");
            flow[d.edge()] += if d.side() == 0 { 1 } else { -1 };
            y = g.endpoint(d);
        }
        total += 1;
    }
    total
}

/// Partition of the vertices into classes of the relation "joined by three
/// edge-disjoint paths". Classes are listed by smallest member, members in
/// increasing order.
pub fn e3_classes(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[v] = id;
        let mut members = vec![v];
        for w in v + 1..n {
            if class_of[w] == usize::MAX && edge_disjoint_paths(g, v, w, 3) >= 3 {
                class_of[w] = id;
                members.push(w);
            }
        }
        classes.push(members);
    }
    Ok(classes)
}

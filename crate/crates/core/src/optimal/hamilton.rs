use crate::graph::Graph;

/// A hamilton cycle as a vertex sequence starting at vertex 0, or `None`.
///
/// Backtracking from vertex 0; a branch is cut as soon as some unvisited
/// vertex has fewer than two neighbors it could still be joined through.
pub fn hamilton_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 {
        return None;
    }
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = g.neighbors(v).filter(|&w| w != v).collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();
    let mut path = vec![0];
    let mut visited = vec![false; n];
    visited[0] = true;
    extend(&adj, &mut path, &mut visited).then_some(path)
}

fn extend(adj: &[Vec<usize>], path: &mut Vec<usize>, visited: &mut [bool]) -> bool {
    let n = adj.len();
    let last = *path.last().expect("path starts at 0");
    if path.len() == n {
        return adj[last].contains(&0);
    }
    if !feasible(adj, last, visited) {
        return false;
    }
    for &w in &adj[last] {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        if extend(adj, path, visited) {
            return true;
        }
        path.pop();
        visited[w] = false;
    }
    false
}

fn feasible(adj: &[Vec<usize>], last: usize, visited: &[bool]) -> bool {
    (0..adj.len()).filter(|&v| !visited[v]).all(|v| {
        adj[v]
            .iter()
            .filter(|&&w| !visited[w] || w == last || w == 0)
            .take(2)
            .count()
            == 2
    })
}

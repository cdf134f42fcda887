use super::SearchError;
use crate::graph::Graph;

/// Largest number of odd-degree vertices the pairing search accepts.
pub const MAX_ODD_VERTICES: usize = 16;

/// Length of a shortest closed walk using every edge: `|E|` plus a cheapest
/// pairing of the odd-degree vertices by shortest paths.
pub fn chinese_postman_length(g: &Graph) -> Result<usize, SearchError> {
    g.require_connected()?;
    let odd: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) % 2 == 1).collect();
    if odd.len() > MAX_ODD_VERTICES {
        return Err(SearchError::TooManyOddVertices {
            count: odd.len(),
            max: MAX_ODD_VERTICES,
        });
    }
    let dist: Vec<Vec<usize>> = odd
        .iter()
        .map(|&s| {
            let all = g.bfs_distances(s);
            odd.iter().map(|&t| all[t]).collect()
        })
        .collect();
    Ok(g.edge_count() + min_pairing(&dist))
}

/// Minimum-weight perfect pairing by dynamic programming over subsets; the
/// lowest unpaired index is always paired next.
fn min_pairing(dist: &[Vec<usize>]) -> usize {
    let k = dist.len();
    let full = (1usize << k) - 1;
    let mut best = vec![usize::MAX; 1 << k];
    best[0] = 0;
    for mask in 0..=full {
        if best[mask] == usize::MAX {
            continue;
        }
        let Some(i) = (0..k).find(|&i| mask & (1 << i) == 0) else {
            continue;
        };
        for j in i + 1..k {
            if mask & (1 << j) == 0 {
                let next = mask | (1 << i) | (1 << j);
                let cost = best[mask] + dist[i][j];
                if cost < best[next] {
                    best[next] = cost;
                }
            }
        }
    }
    best[full]
}

//! Test fixtures and brute-force oracles, written without the library's
//! solvers.
#![allow(dead_code)]

use std::collections::VecDeque;

use edge_outer::{Dart, Embedding, Graph, Walk};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn k4() -> Graph {
    Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// K4 with a genus 0 rotation system.
pub fn k4_plane() -> (Graph, Embedding) {
    let g = k4();
    let d = Dart::new;
    let emb = Embedding::new(
        g.clone(),
        vec![
            vec![d(0, 0), d(1, 0), d(2, 0)],
            vec![d(0, 1), d(4, 0), d(3, 0)],
            vec![d(1, 1), d(3, 1), d(5, 0)],
            vec![d(2, 1), d(5, 1), d(4, 1)],
        ],
    )
    .unwrap();
    (g, emb)
}

pub fn theta() -> Graph {
    Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).unwrap()
}

/// Connected multigraph: a random tree plus `extra` edges, loops and
/// parallels allowed.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for _ in 0..extra {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    edges.shuffle(rng);
    Graph::new(n, edges).unwrap()
}

/// Random simple 2-connected cubic graph on `n` vertices, `n` even, by the
/// pairing model with rejection.
pub fn random_cubic_2conn(rng: &mut impl Rng, n: usize) -> Graph {
    loop {
        let mut points: Vec<usize> = (0..3 * n).collect();
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0] / 3, p[1] / 3)).collect();
        let mut seen = std::collections::HashSet::new();
        let simple = edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))));
        if !simple {
            continue;
        }
        let g = Graph::new(n, edges).unwrap();
        if connected_without(&g, &[]) && (0..n).all(|v| connected_without(&g, &[v])) {
            return g;
        }
    }
}

/// Uniformly random rotation system.
pub fn random_embedding(rng: &mut impl Rng, g: &Graph) -> Embedding {
    let rot = (0..g.vertex_count())
        .map(|v| {
            let mut r = g.incident(v).to_vec();
            r.shuffle(rng);
            r
        })
        .collect();
    Embedding::new(g.clone(), rot).unwrap()
}

/// Whether `g` minus `removed` is connected (ignoring removed vertices).
pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let gone = |v: usize| removed.contains(&v);
    let Some(start) = (0..n).find(|&v| !gone(v)) else {
        return true;
    };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !gone(w) && !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n - removed.len()
}

pub fn two_connected_oracle(g: &Graph) -> bool {
    g.vertex_count() >= 3 && connected_without(g, &[]) && (0..g.vertex_count()).all(|v| connected_without(g, &[v]))
}

pub fn three_connected_oracle(g: &Graph) -> bool {
    let n = g.vertex_count();
    two_connected_oracle(g) && n >= 4 && (0..n).all(|a| (a + 1..n).all(|b| connected_without(g, &[a, b])))
}

/// Chinese postman length by trying every set of edges to duplicate.
pub fn brute_cp(g: &Graph) -> usize {
    let masks: Vec<u32> = g
        .edges()
        .iter()
        .filter(|(u, v)| u != v)
        .map(|&(u, v)| (1 << u) ^ (1 << v))
        .collect();
    assert!(masks.len() <= 24 && g.vertex_count() <= 32, "oracle too slow");
    let mut target = 0u32;
    for &m in &masks {
        target ^= m;
    }
    let mut best = usize::MAX;
    // Gray code walk over all subsets.
    let mut cur = 0u32;
    let mut size = 0usize;
    let mut chosen = vec![false; masks.len()];
    for i in 0u64..(1u64 << masks.len()) {
        if i > 0 {
            let bit = i.trailing_zeros() as usize;
            cur ^= masks[bit];
            chosen[bit] = !chosen[bit];
            if chosen[bit] {
                size += 1;
            } else {
                size -= 1;
            }
        }
        if cur == target {
            best = best.min(size);
        }
    }
    g.edge_count() + best
}

pub fn is_hamilton_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    cycle.len() == n
        && n >= 3
        && cycle.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && (0..n).all(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            g.edges().iter().any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a))
        })
}

/// Hamilton cycle by trying every permutation fixing vertex 0.
pub fn brute_hamilton(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut cycle = vec![0];
        cycle.extend(&rest);
        if is_hamilton_cycle(g, &cycle) {
            return Some(cycle);
        }
        if !next_permutation(&mut rest) {
            return None;
        }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every rotation system, the first dart at each vertex held fixed.
pub fn all_embeddings(g: &Graph) -> Vec<Embedding> {
    let per_vertex: Vec<Vec<Vec<Dart>>> = (0..g.vertex_count())
        .map(|v| {
            let darts = g.incident(v).to_vec();
            if darts.is_empty() {
                return vec![vec![]];
            }
            let mut tail: Vec<usize> = (1..darts.len()).collect();
            let mut out = Vec::new();
            loop {
                let mut r = vec![darts[0]];
                r.extend(tail.iter().map(|&i| darts[i]));
                out.push(r);
                if !next_permutation(&mut tail) {
                    break;
                }
            }
            out
        })
        .collect();
    let mut result = Vec::new();
    let mut idx = vec![0; per_vertex.len()];
    loop {
        let rot = idx.iter().enumerate().map(|(v, &i)| per_vertex[v][i].clone()).collect();
        result.push(Embedding::new(g.clone(), rot).unwrap());
        let mut v = 0;
        loop {
            if v == idx.len() {
                return result;
            }
            idx[v] += 1;
            if idx[v] < per_vertex[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// Times each edge is traversed.
pub fn usage(g: &Graph, w: &Walk) -> Vec<usize> {
    let mut u = vec![0; g.edge_count()];
    for d in w.darts() {
        u[d.edge()] += 1;
    }
    u
}

/// CPRS test for a 2-connected cubic graph: edge-spanning, orientable,
/// retraction-free, and the double edges form a perfect matching.
pub fn cprs_oracle(g: &Graph, w: &Walk) -> bool {
    let darts = w.darts();
    let n = darts.len();
    let mut dart_seen = std::collections::HashSet::new();
    let orientable = darts.iter().all(|d| dart_seen.insert(*d));
    let retraction_free = (0..n).all(|i| darts[(i + 1) % n] != darts[i].opposite());
    let u = usage(g, w);
    let mut matched = vec![0; g.vertex_count()];
    for (e, &k) in u.iter().enumerate() {
        if k == 2 {
            let (a, b) = g.edge(e);
            matched[a] += 1;
            matched[b] += 1;
        }
    }
    u.iter().all(|&k| k == 1 || k == 2) && orientable && retraction_free && matched.iter().all(|&m| m == 1)
}

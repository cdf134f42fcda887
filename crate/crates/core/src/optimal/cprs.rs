//! Chinese postman reporter strand walks of cubic graphs.
//!
//! In a cubic graph such a walk is determined by its double edges, which form
//! a perfect matching, and an orientation of each cycle of the remaining
//! solo edges. The walk enters a vertex on a solo edge, crosses its double
//! edge, and leaves on the other solo edge at the far end.

use std::collections::BTreeSet;

use super::postman::chinese_postman_length;
use super::SearchError;
use crate::connectivity::is_two_connected;
use crate::graph::{Dart, Graph};
use crate::walk::{validate_walk, Walk};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CprsCandidate {
    /// Edge ids of the intended double edges.
    pub matching: Vec<usize>,
    /// One flag per cycle of [`solo_cycles`]; `true` traverses it reversed.
    pub cycle_orientations: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceOutcome {
    /// The trace covered every solo edge once and every double edge twice.
    Complete(Walk),
    /// The trace closed up early; the short closed walk is attached.
    Premature(Walk),
}

/// All perfect matchings by backtracking on the smallest unmatched vertex.
/// Parallel edges give distinct matchings. At most `budget` matchings are
/// produced.
pub fn perfect_matchings(g: &Graph, budget: u64) -> Result<Vec<Vec<usize>>, SearchError> {
    let mut out = Vec::new();
    let mut matched = vec![false; g.vertex_count()];
    let mut chosen = Vec::new();
    if g.vertex_count().is_multiple_of(2) {
        match_from(g, 0, &mut matched, &mut chosen, &mut out, budget)?;
    }
    Ok(out)
}

fn match_from(
    g: &Graph,
    start: usize,
    matched: &mut [bool],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    budget: u64,
) -> Result<(), SearchError> {
    let Some(v) = (start..g.vertex_count()).find(|&v| !matched[v]) else {
        if out.len() as u64 >= budget {
            return Err(SearchError::BudgetExceeded {
                required: budget.saturating_add(1),
                limit: budget,
            });
        }
        let mut m = chosen.clone();
        m.sort_unstable();
        out.push(m);
        return Ok(());
    };
    matched[v] = true;
    for &d in g.incident(v) {
        let e = d.edge();
        let w = g.head(d);
        if g.is_loop(e) || matched[w] {
            continue;
        }
        matched[w] = true;
        chosen.push(e);
        match_from(g, v + 1, matched, chosen, out, budget)?;
        chosen.pop();
        matched[w] = false;
    }
    matched[v] = false;
    Ok(())
}

fn matching_mask(g: &Graph, matching: &[usize]) -> Result<Vec<bool>, SearchError> {
    let mut in_m = vec![false; g.edge_count()];
    let mut covered = vec![false; g.vertex_count()];
    for &e in matching {
        if e >= g.edge_count() || in_m[e] || g.is_loop(e) {
            return Err(SearchError::NotPerfectMatching);
        }
        in_m[e] = true;
        let (u, v) = g.edge(e);
        if covered[u] || covered[v] {
            return Err(SearchError::NotPerfectMatching);
        }
        covered[u] = true;
        covered[v] = true;
    }
    if covered.iter().any(|c| !c) {
        return Err(SearchError::NotPerfectMatching);
    }
    Ok(in_m)
}

fn require_cubic(g: &Graph) -> Result<(), SearchError> {
    if g.degree_profile().is_cubic {
        Ok(())
    } else {
        Err(SearchError::NotCubic)
    }
}

/// Cycles of the solo edges, each as a dart sequence. A cycle starts at the
/// smallest unvisited solo edge, traversed from side 0.
pub fn solo_cycles(g: &Graph, matching: &[usize]) -> Result<Vec<Vec<Dart>>, SearchError> {
    require_cubic(g)?;
    let in_m = matching_mask(g, matching)?;
    Ok(cycles_of(g, &in_m))
}

fn cycles_of(g: &Graph, in_m: &[bool]) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; g.edge_count()];
    let mut cycles = Vec::new();
    for e in 0..g.edge_count() {
        if in_m[e] || seen[e] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = Dart::new(e, 0);
        while !seen[d.edge()] {
            seen[d.edge()] = true;
            cycle.push(d);
            let back = d.opposite();
            d = *g
                .incident(g.head(d))
                .iter()
                .find(|&&x| x != back && !in_m[x.edge()])
                .expect("every vertex has two solo darts");
        }
        cycles.push(cycle);
    }
    cycles
}

/// Traces the walk forced by a candidate, starting from the smallest
/// oriented solo dart.
pub fn cprs_trace(g: &Graph, c: &CprsCandidate) -> Result<TraceOutcome, SearchError> {
    require_cubic(g)?;
    let in_m = matching_mask(g, &c.matching)?;
    let cycles = cycles_of(g, &in_m);
    if cycles.len() != c.cycle_orientations.len() {
        return Err(SearchError::OrientationCount {
            expected: cycles.len(),
            given: c.cycle_orientations.len(),
        });
    }
    Ok(trace(g, &in_m, &cycles, &c.cycle_orientations, c.matching.len()))
}

fn trace(g: &Graph, in_m: &[bool], cycles: &[Vec<Dart>], flip: &[bool], m: usize) -> TraceOutcome {
    let n = g.vertex_count();
    let mut out_solo = vec![Dart::from_index(0); n];
    let mut across = vec![Dart::from_index(0); n];
    let mut start = None::<Dart>;
    for (cycle, &rev) in cycles.iter().zip(flip) {
        for &d in cycle {
            let d = if rev { d.opposite() } else { d };
            out_solo[g.endpoint(d)] = d;
            start = Some(start.map_or(d, |s| s.min(d)));
        }
    }
    for e in (0..g.edge_count()).filter(|&e| in_m[e]) {
        let (a, b) = (Dart::new(e, 0), Dart::new(e, 1));
        across[g.endpoint(a)] = a;
        across[g.endpoint(b)] = b;
    }
    let start = start.expect("a cubic graph has solo edges");
    let mut darts = Vec::new();
    let mut d = start;
    loop {
        darts.push(d);
        let over = across[g.head(d)];
        darts.push(over);
        d = out_solo[g.head(over)];
        if d == start {
            break;
        }
    }
    let solo = g.edge_count() - m;
    let walk = Walk::from_darts_unchecked(darts);
    if walk.len() == solo + 2 * m {
        TraceOutcome::Complete(walk)
    } else {
        TraceOutcome::Premature(walk)
    }
}

/// Whether `w` is a reporter strand walk whose length equals the Chinese
/// postman length. In a cubic graph every vertex is odd, so an edge-spanning
/// closed walk repeats at least `|V|/2` edges; a walk of length `2|V|` meets
/// that bound and is checked without a pairing search.
pub fn is_cprs_walk(g: &Graph, w: &Walk) -> Result<bool, SearchError> {
    if !validate_walk(g, w).is_reporter_strand_walk() {
        return Ok(false);
    }
    if g.degree_profile().is_cubic {
        return Ok(w.len() == 2 * g.vertex_count());
    }
    Ok(w.len() == chinese_postman_length(g)?)
}

/// Every CPRS walk of a cubic 2-connected graph, one per canonical form,
/// sorted by canonical form. `budget` bounds the number of matchings.
pub fn enumerate_cprs(g: &Graph, budget: u64) -> Result<Vec<Walk>, SearchError> {
    require_cubic(g)?;
    if !is_two_connected(g) {
        return Err(SearchError::NotTwoConnected);
    }
    let mut found: BTreeSet<Vec<Dart>> = BTreeSet::new();
    for matching in perfect_matchings(g, budget)? {
        let in_m = matching_mask(g, &matching)?;
        let cycles = cycles_of(g, &in_m);
        // Reversing every cycle reverses the walk, so cycle 0 stays forward.
        let k = cycles.len();
        for bits in 0..1u64 << (k - 1) {
            let flip: Vec<bool> = (0..k).map(|i| i > 0 && bits >> (i - 1) & 1 == 1).collect();
            if let TraceOutcome::Complete(w) = trace(g, &in_m, &cycles, &flip, matching.len()) {
                found.insert(w.canonical());
            }
        }
    }
    Ok(found.into_iter().map(Walk::from_darts_unchecked).collect())
}

//! Forced passages of CPRS walks through the gadgets, and the translations
//! between hamilton cycles of `N`, CPRS walks of `P` and CPRS walks of `R`.

use std::collections::{HashMap, HashSet};

use super::build::{cwn, directed_edges};
use super::names::{NodeName, Part, Twin};
use super::{Gadget, GadgetError, Stage};
use crate::optimal::is_cprs_walk;
use crate::walk::Walk;

use NodeName::{Orig, A, C, D};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// One walk from `u` to `v` through the edge gadget.
    Single,
    /// Two closed walks, one hanging at each end.
    Double,
}

/// How a walk passes through the edge gadget of the `N`-edge `u v`, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PassageForm {
    pub u: usize,
    pub v: usize,
    pub form: Form,
    /// Single: the walk goes from `v` to `u`. Double: both hanging walks are
    /// reversed, which is the same as swapping `d(u,v)` and `d(v,u)`.
    pub reversed: bool,
    /// Single only: `d(u,v)` and `d(v,u)` are swapped.
    pub swapped: bool,
}

/// Form of a walk through one copy of A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AForm {
    /// The rails are swapped: the walk leaves through `y4` first.
    pub swapped: bool,
    pub reversed: bool,
}

/// A maximal run of inside vertices of a closed sequence, with the
/// positions of the outside vertices on either side.
struct Passage {
    before: usize,
    run: Vec<usize>,
    after: usize,
}

fn passages<T>(seq: &[T], inside: impl Fn(&T) -> bool) -> Vec<Passage> {
    let n = seq.len();
    let Some(first_out) = (0..n).find(|&i| !inside(&seq[i])) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut k = 0;
    while k < n {
        let i = (first_out + k) % n;
        let next = (i + 1) % n;
        if inside(&seq[next]) {
            let mut run = Vec::new();
            let mut j = next;
            while inside(&seq[j]) {
                run.push(j);
                j = (j + 1) % n;
            }
            k += run.len() + 1;
            out.push(Passage { before: i, run, after: j });
        } else {
            k += 1;
        }
    }
    out
}

fn names_of(seq: &[NodeName], p: &Passage) -> Vec<NodeName> {
    let mut v = vec![seq[p.before]];
    v.extend(p.run.iter().map(|&i| seq[i]));
    v.push(seq[p.after]);
    v
}

fn swap_d(u: usize, v: usize, n: NodeName) -> NodeName {
    match n {
        D(x, y) if (x, y) == (u, v) => D(v, u),
        D(x, y) if (x, y) == (v, u) => D(u, v),
        other => other,
    }
}

fn w1(u: usize, v: usize) -> Vec<NodeName> {
    vec![
        Orig(u),
        A(u, v),
        D(u, v),
        A(v, u),
        D(v, u),
        D(u, v),
        A(u, v),
        D(v, u),
        A(v, u),
        Orig(v),
    ]
}

fn w2(u: usize, v: usize) -> Vec<NodeName> {
    vec![Orig(u), A(u, v), D(u, v), D(v, u), A(u, v), Orig(u)]
}

fn reversed<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().rev().cloned().collect()
}

fn require_cprs(g: &Gadget, w: &Walk) -> Result<(), GadgetError> {
    if w.darts().iter().any(|d| d.index() >= g.graph.dart_count())
        || Walk::new(&g.graph, w.darts().to_vec()).is_err()
        || !is_cprs_walk(&g.graph, w)?
    {
        return Err(GadgetError::NotCprsWalk);
    }
    Ok(())
}

fn base_edges(g: &Gadget) -> Vec<(usize, usize)> {
    let n = g.map.base().expect("stage has a base graph").graph();
    n.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect()
}

struct Classified {
    forms: Vec<PassageForm>,
    /// Positions of the inside vertices of each single passage, by form
    /// index.
    runs: Vec<Vec<usize>>,
}

fn classify(seq: &[NodeName], edges: &[(usize, usize)]) -> Result<Classified, GadgetError> {
    let mut forms = Vec::new();
    let mut runs = Vec::new();
    for &(u, v) in edges {
        let inside: HashSet<NodeName> = [A(u, v), D(u, v), A(v, u), D(v, u)].into();
        let ps = passages(seq, |n| inside.contains(n));
        let bad = || GadgetError::Nonconforming {
            subgraph: format!("P({u},{v})"),
        };
        let got: Vec<Vec<NodeName>> = ps.iter().map(|p| names_of(seq, p)).collect();
        let form = match got.as_slice() {
            [one] => {
                let mut found = None;
                for (rev, (x, y)) in [(false, (u, v)), (true, (v, u))] {
                    let plain = w1(x, y);
                    let swapped: Vec<NodeName> = plain.iter().map(|&n| swap_d(u, v, n)).collect();
                    if *one == plain {
                        found = Some((rev, false));
                    } else if *one == swapped {
                        found = Some((rev, true));
                    }
                }
                let (reversed, swapped) = found.ok_or_else(bad)?;
                PassageForm {
                    u,
                    v,
                    form: Form::Single,
                    reversed,
                    swapped,
                }
            }
            [first, second] => {
                let fwd = [w2(u, v), w2(v, u)];
                let rev = [reversed(&fwd[0]), reversed(&fwd[1])];
                let matches = |pair: &[Vec<NodeName>; 2]| {
                    (*first == pair[0] && *second == pair[1]) || (*first == pair[1] && *second == pair[0])
                };
                let reversed = if matches(&fwd) {
                    false
                } else if matches(&rev) {
                    true
                } else {
                    return Err(bad());
                };
                PassageForm {
                    u,
                    v,
                    form: Form::Double,
                    reversed,
                    swapped: false,
                }
            }
            _ => return Err(bad()),
        };
        runs.push(if form.form == Form::Single { ps[0].run.clone() } else { Vec::new() });
        forms.push(form);
    }
    Ok(Classified { forms, runs })
}

/// Classifies how a CPRS walk of `P` passes through each edge gadget, in the
/// edge order of `N`.
pub fn classify_p_passages(p: &Gadget, w: &Walk) -> Result<Vec<PassageForm>, GadgetError> {
    p.require(Stage::P)?;
    require_cprs(p, w)?;
    Ok(classify(&p.walk_names(w), &base_edges(p))?.forms)
}

fn is_hamilton_cycle(n: &crate::graph::Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut seen = vec![false; n.vertex_count()];
    k >= 3
        && k == n.vertex_count()
        && cycle.iter().all(|&v| v < k && !std::mem::replace(&mut seen[v], true))
        && (0..k).all(|i| n.dart_between(cycle[i], cycle[(i + 1) % k]).is_some())
}

/// The CPRS walk of `P` that follows a hamilton cycle of `N`: a single
/// passage through each cycle edge, and a pair of hanging walks on every
/// other edge.
pub fn hamilton_to_cprs_p(p: &Gadget, cycle: &[usize]) -> Result<Walk, GadgetError> {
    p.require(Stage::P)?;
    let n = p.map.base().expect("P has a base graph").graph();
    if !is_hamilton_cycle(n, cycle) {
        return Err(GadgetError::NotHamiltonCycle);
    }
    let k = cycle.len();
    let mut seq = Vec::with_capacity(14 * k);
    for i in 0..k {
        let (t, u, v) = (cycle[(i + k - 1) % k], cycle[i], cycle[(i + 1) % k]);
        let w = n
            .neighbors(u)
            .find(|&x| x != t && x != v)
            .expect("cubic vertex has a third neighbor");
        seq.extend(&w2(u, w)[..5]);
        seq.extend(&w1(u, v)[..9]);
    }
    p.walk_from_names(&seq)
}

/// The hamilton cycle of `N` traced by the single passages of a CPRS walk
/// of `P`, starting at vertex 0.
pub fn cprs_p_to_hamilton(p: &Gadget, w: &Walk) -> Result<Vec<usize>, GadgetError> {
    let forms = classify_p_passages(p, w)?;
    let n = p.map.base().expect("P has a base graph").graph();
    let mut next = vec![None; n.vertex_count()];
    for f in forms.iter().filter(|f| f.form == Form::Single) {
        let (from, to) = if f.reversed { (f.v, f.u) } else { (f.u, f.v) };
        if next[from].replace(to).is_some() {
            return Err(GadgetError::NotHamiltonCycle);
        }
    }
    let mut cycle = vec![0];
    while cycle.len() <= n.vertex_count() {
        let last = *cycle.last().expect("nonempty");
        let to = next[last].ok_or(GadgetError::NotHamiltonCycle)?;
        if to == 0 {
            break;
        }
        cycle.push(to);
    }
    if !is_hamilton_cycle(n, &cycle) {
        return Err(GadgetError::NotHamiltonCycle);
    }
    Ok(cycle)
}

/// Rewrites every single passage that uses `a(u,v) d(u,v)` twice into its
/// image under the swap of `d(u,v)` and `d(v,u)`, so that every edge
/// `a(u,v) d(u,v)` becomes solo.
pub fn normalize_p(p: &Gadget, w: &Walk) -> Result<Walk, GadgetError> {
    p.require(Stage::P)?;
    require_cprs(p, w)?;
    let mut seq = p.walk_names(w);
    let c = classify(&seq, &base_edges(p))?;
    for (f, run) in c.forms.iter().zip(&c.runs) {
        if f.form == Form::Single && !f.swapped {
            for &i in run {
                seq[i] = swap_d(f.u, f.v, seq[i]);
            }
        }
    }
    p.walk_from_names(&seq)
}

/// `p x1 x2 x3 x4 x4' x3' x2' x1' p'` in the copy of B named by `name`.
pub fn wt1(name: impl Fn(Part) -> NodeName) -> Vec<NodeName> {
    let (b, m) = (Twin::Base, Twin::Mirror);
    let mut parts = vec![Part::P(b)];
    parts.extend((1..=4).map(|i| Part::X(b, i)));
    parts.extend((1..=4).rev().map(|i| Part::X(m, i)));
    parts.push(Part::P(m));
    parts.into_iter().map(name).collect()
}

/// `q y4' .. p' .. x4' x4 .. p .. y4 q` in the copy of B named by `name`.
pub fn wt2(name: impl Fn(Part) -> NodeName) -> Vec<NodeName> {
    let mut parts = vec![Part::Q];
    parts.extend(reversed(&ws2(Twin::Mirror)));
    parts.extend(ws2(Twin::Base));
    parts.push(Part::Q);
    parts.into_iter().map(name).collect()
}

fn ws1(t: Twin) -> Vec<Part> {
    let mut v = vec![Part::P(t)];
    v.extend((1..=4).map(|i| Part::X(t, i)));
    v
}

fn ws2(t: Twin) -> Vec<Part> {
    let (x, y) = (|i| Part::X(t, i), |i| Part::Y(t, i));
    vec![
        x(4),
        y(4),
        y(3),
        x(3),
        x(2),
        y(2),
        y(1),
        x(1),
        Part::P(t),
        y(1),
        y(2),
        y(3),
        y(4),
    ]
}

/// The walk in `R` replacing the step `a(u,v) -> d(u,v)` (or its reverse),
/// without its two ends. `second_forward` tells whether the walk uses
/// `a(v,w) -> d(v,w)` for `w = cwn(v,u)`.
fn t_interior(u: usize, v: usize, w: usize, forward: bool, second_forward: bool) -> Vec<NodeName> {
    let t1 = wt1(|x| NodeName::InB(u, v, x));
    let mut t2 = wt2(|x| NodeName::InB(v, w, x));
    if !second_forward {
        t2.reverse();
    }
    let mut out = Vec::with_capacity(t1.len() + t2.len() + 2);
    if forward {
        out.extend(t1);
        out.push(C(u, v));
        out.extend(t2);
        out.push(C(u, v));
    } else {
        out.push(C(u, v));
        out.extend(t2);
        out.push(C(u, v));
        out.extend(t1.into_iter().rev());
    }
    out
}

fn same_base(p: &Gadget, r: &Gadget) -> Result<(), GadgetError> {
    p.require(Stage::P)?;
    r.require(Stage::R)?;
    if p.map.base() != r.map.base() {
        return Err(GadgetError::BaseMismatch);
    }
    Ok(())
}

/// Lifts a CPRS walk of `P` in which every `a(u,v) d(u,v)` is solo to a CPRS
/// walk of `R`, replacing each such step by its walk through two copies of B.
pub fn lift_p_to_r(p: &Gadget, r: &Gadget, w: &Walk) -> Result<Walk, GadgetError> {
    same_base(p, r)?;
    require_cprs(p, w)?;
    let emb = p.map.base().expect("P has a base graph");
    let seq = p.walk_names(w);
    let k = seq.len();
    let mut forward: HashMap<(usize, usize), bool> = HashMap::new();
    let mut uses: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..k {
        match (seq[i], seq[(i + 1) % k]) {
            (A(u, v), D(x, y)) | (D(x, y), A(u, v)) if (u, v) == (x, y) => {
                forward.insert((u, v), matches!(seq[i], A(..)));
                *uses.entry((u, v)).or_default() += 1;
            }
            _ => {}
        }
    }
    for (u, v) in directed_edges(emb.graph()) {
        if uses.get(&(u, v)) != Some(&1) {
            return Err(GadgetError::NotSolo {
                edge: format!("{} {}", A(u, v), D(u, v)),
            });
        }
    }
    let mut out = Vec::with_capacity(2 * r.graph.vertex_count());
    for i in 0..k {
        out.push(seq[i]);
        if let (A(u, v), D(x, y)) | (D(x, y), A(u, v)) = (seq[i], seq[(i + 1) % k]) {
            if (u, v) == (x, y) {
                let w = cwn(emb, v, u);
                out.extend(t_interior(u, v, w, forward[&(u, v)], forward[&(v, w)]));
            }
        }
    }
    r.walk_from_names(&out)
}

/// Projects a CPRS walk of `R` back to `P`, contracting each passage
/// through the B copies to the step `a(u,v) d(u,v)` it stands for.
pub fn project_r_to_p(p: &Gadget, r: &Gadget, w: &Walk) -> Result<Walk, GadgetError> {
    same_base(p, r)?;
    require_cprs(r, w)?;
    let emb = p.map.base().expect("P has a base graph");
    let mut seq = r.walk_names(w);
    let start = seq
        .iter()
        .position(|n| matches!(n, Orig(_)))
        .ok_or(GadgetError::NotCprsWalk)?;
    seq.rotate_left(start);
    let k = seq.len();
    let at = |i: usize| seq[i % k];
    let mut out = Vec::new();
    let mut i = 0;
    while i < k {
        let cur = seq[i];
        let (u, v, fwd) = match (cur, at(i + 1)) {
            (A(u, v), NodeName::InB(x, y, Part::P(Twin::Base))) if (u, v) == (x, y) => (u, v, true),
            (D(u, v), C(x, y)) if (u, v) == (x, y) => (u, v, false),
            (C(..) | NodeName::InB(..), _) => {
                return Err(GadgetError::Nonconforming {
                    subgraph: format!("the B copies near {cur}"),
                })
            }
            _ => {
                out.push(cur);
                i += 1;
                continue;
            }
        };
        let w = cwn(emb, v, u);
        let end = if fwd { D(u, v) } else { A(u, v) };
        let matched = [true, false].into_iter().find_map(|second| {
            let body = t_interior(u, v, w, fwd, second);
            let ok = body.iter().enumerate().all(|(j, n)| at(i + 1 + j) == *n)
                && at(i + 1 + body.len()) == end;
            ok.then_some(body.len())
        });
        let Some(len) = matched else {
            return Err(GadgetError::Nonconforming {
                subgraph: format!("B({u},{v})"),
            });
        };
        out.push(cur);
        i += 1 + len;
    }
    let walk = p.walk_from_names(&out)?;
    require_cprs(p, &walk)?;
    Ok(walk)
}

fn copy_namer(g: &Gadget, copy: Option<(usize, usize)>) -> Result<impl Fn(Part) -> NodeName, GadgetError> {
    let stage = g.map.stage();
    match (stage, copy) {
        (Stage::A | Stage::B, None) => {}
        (Stage::R, Some(_)) => {}
        (Stage::R, None) => {
            return Err(GadgetError::UnknownName {
                name: "gadget copy".into(),
            })
        }
        _ => {
            return Err(GadgetError::WrongStage {
                expected: Stage::R,
                found: stage,
            })
        }
    }
    Ok(move |part| match copy {
        Some((u, v)) => NodeName::InB(u, v, part),
        None => NodeName::Part(part),
    })
}

/// The unique neighbor of `part` outside `inside`.
fn outside(g: &Gadget, inside: &HashSet<NodeName>, name: NodeName) -> Result<NodeName, GadgetError> {
    let id = g
        .map
        .id(&name)
        .ok_or_else(|| GadgetError::UnknownName { name: name.to_string() })?;
    let mut out = g.graph.neighbors(id).map(|v| g.map.name(v)).filter(|n| !inside.contains(n));
    match (out.next(), out.next()) {
        (Some(n), None) => Ok(n),
        _ => Err(GadgetError::UnknownName { name: name.to_string() }),
    }
}

fn same_pair(got: &[Vec<NodeName>], want: &[Vec<NodeName>; 2]) -> bool {
    got.len() == 2
        && ((got[0] == want[0] && got[1] == want[1]) || (got[0] == want[1] && got[1] == want[0]))
}

/// Checks that a CPRS walk passes through one copy of A as the two forced
/// walks `p0 p x1 x2 x3 x4 x5` and `x5 x4 y4 y3 x3 x2 y2 y1 x1 p y1 y2 y3 y4
/// y5`, up to swapping the rails and reversing both. `copy` names the copy
/// of B in `R`; it is `None` for the standalone completions.
pub fn classify_a_copy(g: &Gadget, w: &Walk, copy: Option<(usize, usize)>, twin: Twin) -> Result<AForm, GadgetError> {
    let name = copy_namer(g, copy)?;
    require_cprs(g, w)?;
    let inside: HashSet<NodeName> = Part::a_vertices(twin).into_iter().map(&name).collect();
    let p0 = outside(g, &inside, name(Part::P(twin)))?;
    let x5 = outside(g, &inside, name(Part::X(twin, 4)))?;
    let y5 = outside(g, &inside, name(Part::Y(twin, 4)))?;
    let seq = g.walk_names(w);
    let got: Vec<Vec<NodeName>> = passages(&seq, |n| inside.contains(n))
        .iter()
        .map(|p| names_of(&seq, p))
        .collect();
    for swapped in [false, true] {
        let f = |p: Part| name(if swapped { p.swapped() } else { p });
        let (exit1, exit2) = if swapped { (y5, x5) } else { (x5, y5) };
        let mut first = vec![p0];
        first.extend(ws1(twin).into_iter().map(f));
        first.push(exit1);
        let mut second = vec![exit1];
        second.extend(ws2(twin).into_iter().map(f));
        second.push(exit2);
        if same_pair(&got, &[first.clone(), second.clone()]) {
            return Ok(AForm { swapped, reversed: false });
        }
        if same_pair(&got, &[reversed(&first), reversed(&second)]) {
            return Ok(AForm { swapped, reversed: true });
        }
    }
    Err(GadgetError::Nonconforming {
        subgraph: match copy {
            Some((u, v)) => format!("B({u},{v}).A{}", if twin == Twin::Mirror { "'" } else { "" }),
            None => format!("A{}", if twin == Twin::Mirror { "'" } else { "" }),
        },
    })
}

/// Checks that a CPRS walk passes through a copy of B as `p0 p wt1 p' p0'`
/// and `q0 q wt2 q q0`, or both reversed; returns whether reversed.
pub fn classify_b_copy(g: &Gadget, w: &Walk, copy: Option<(usize, usize)>) -> Result<bool, GadgetError> {
    let name = copy_namer(g, copy)?;
    if g.map.stage() == Stage::A {
        return Err(GadgetError::WrongStage {
            expected: Stage::B,
            found: Stage::A,
        });
    }
    require_cprs(g, w)?;
    let inside: HashSet<NodeName> = Part::b_vertices().into_iter().map(&name).collect();
    let p0 = outside(g, &inside, name(Part::P(Twin::Base)))?;
    let p1 = outside(g, &inside, name(Part::P(Twin::Mirror)))?;
    let q0 = outside(g, &inside, name(Part::Q))?;
    let seq = g.walk_names(w);
    let got: Vec<Vec<NodeName>> = passages(&seq, |n| inside.contains(n))
        .iter()
        .map(|p| names_of(&seq, p))
        .collect();
    let mut first = vec![p0];
    first.extend(wt1(&name));
    first.push(p1);
    let mut second = vec![q0];
    second.extend(wt2(&name));
    second.push(q0);
    if same_pair(&got, &[first.clone(), second.clone()]) {
        return Ok(false);
    }
    if same_pair(&got, &[reversed(&first), reversed(&second)]) {
        return Ok(true);
    }
    Err(GadgetError::Nonconforming {
        subgraph: match copy {
            Some((u, v)) => format!("B({u},{v})"),
            None => "B".into(),
        },
    })
}

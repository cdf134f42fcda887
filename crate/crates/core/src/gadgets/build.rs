use std::collections::HashMap;

use super::names::{NodeName, Part, Twin};
use super::{Gadget, GadgetError, GadgetMap, Stage};
use crate::connectivity::vertex_connectivity_at_least;
use crate::embedding::Embedding;
use crate::graph::{Dart, Graph};

/// A simple graph given by named vertices and neighbor rotations.
#[derive(Debug, Clone, Default)]
struct PlaneGraph {
    order: Vec<NodeName>,
    rot: HashMap<NodeName, Vec<NodeName>>,
}

impl PlaneGraph {
    fn add(&mut self, name: NodeName, rot: Vec<NodeName>) {
        self.order.push(name);
        self.rot.insert(name, rot);
    }

    fn remove(&mut self, name: NodeName) {
        self.order.retain(|&n| n != name);
        self.rot.remove(&name);
    }

    fn replace(&mut self, at: NodeName, old: NodeName, new: NodeName) {
        let slot = self
            .rot
            .get_mut(&at)
            .and_then(|r| r.iter_mut().find(|n| **n == old))
            .expect("replaced neighbor exists");
        *slot = new;
    }

    fn finish(&self, stage: Stage, base: Option<&Embedding>) -> Gadget {
        let ids: HashMap<NodeName, usize> =
            self.order.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let mut edges = Vec::new();
        let mut edge_of = HashMap::new();
        for (i, name) in self.order.iter().enumerate() {
            for nb in &self.rot[name] {
                let j = ids[nb];
                debug_assert!(self.rot[nb].contains(name), "{name} -> {nb} has no reverse");
                if i < j {
                    edge_of.insert((i, j), edges.len());
                    edges.push((i, j));
                }
            }
        }
        let rotation = self
            .order
            .iter()
            .enumerate()
            .map(|(i, name)| {
                self.rot[name]
                    .iter()
                    .map(|nb| {
                        let j = ids[nb];
                        let e = edge_of[&(i.min(j), i.max(j))];
                        Dart::new(e, u8::from(i > j))
                    })
                    .collect()
            })
            .collect();
        let graph = Graph::new(self.order.len(), edges).expect("names resolve to vertices");
        let embedding = Embedding::new(graph.clone(), rotation).expect("rotations list every edge once");
        Gadget {
            graph,
            embedding,
            map: GadgetMap::new(stage, self.order.clone(), base.cloned()),
        }
    }
}

fn check_base(n: &Graph, emb: &Embedding) -> Result<(), GadgetError> {
    if emb.graph() != n {
        return Err(GadgetError::ForeignEmbedding);
    }
    n.require_connected()?;
    let profile = n.degree_profile();
    if !profile.is_cubic {
        return Err(GadgetError::NotCubic);
    }
    if !profile.is_simple {
        return Err(GadgetError::NotSimple);
    }
    let genus = emb.genus()?;
    if genus != 0 {
        return Err(GadgetError::NotPlane { genus });
    }
    if !vertex_connectivity_at_least(n, 3) {
        return Err(GadgetError::NotThreeConnected);
    }
    Ok(())
}

/// Both orientations of every edge of `n`, in edge order.
pub(crate) fn directed_edges(n: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    n.edges().iter().flat_map(|&(u, v)| [(u, v), (v, u)])
}

/// `w` with `cwn(v, u) = w`.
pub(crate) fn cwn(emb: &Embedding, v: usize, u: usize) -> usize {
    emb.clockwise_neighbor(v, u).expect("base graph is simple")
}

/// `t` with `cwn(u, t) = v`.
pub(crate) fn ccwn(emb: &Embedding, u: usize, v: usize) -> usize {
    let g = emb.graph();
    let d = g.dart_between(u, v).expect("base graph is simple");
    g.head(emb.pred(d))
}

fn p_plane(emb: &Embedding) -> PlaneGraph {
    use NodeName::{Orig, A, D};
    let n = emb.graph();
    let mut pg = PlaneGraph::default();
    for u in 0..n.vertex_count() {
        let rot = emb.rotation(u).iter().map(|&d| A(u, n.head(d))).collect();
        pg.add(Orig(u), rot);
    }
    // Read along u -> v, the side through d(u,v) is on the left.
    for &(u, v) in n.edges() {
        pg.add(A(u, v), vec![Orig(u), D(u, v), D(v, u)]);
        pg.add(D(u, v), vec![A(u, v), A(v, u), D(v, u)]);
        pg.add(A(v, u), vec![Orig(v), D(v, u), D(u, v)]);
        pg.add(D(v, u), vec![A(v, u), A(u, v), D(u, v)]);
    }
    pg
}

fn q_plane(emb: &Embedding) -> PlaneGraph {
    use NodeName::{A, B, C, D};
    let mut pg = p_plane(emb);
    for (u, v) in directed_edges(emb.graph()) {
        let t = ccwn(emb, u, v);
        let w = cwn(emb, v, u);
        pg.replace(A(u, v), D(u, v), B(u, v));
        pg.replace(D(u, v), A(u, v), C(u, v));
        pg.add(B(u, v), vec![A(u, v), C(t, u), C(u, v)]);
        pg.add(C(u, v), vec![B(u, v), B(v, w), D(u, v)]);
    }
    pg
}

/// Builds `P` from a 3-connected cubic simple graph and a plane rotation
/// system of it.
pub fn build_p(n: &Graph, emb: &Embedding) -> Result<Gadget, GadgetError> {
    check_base(n, emb)?;
    Ok(p_plane(emb).finish(Stage::P, Some(emb)))
}

pub fn build_q(n: &Graph, emb: &Embedding) -> Result<Gadget, GadgetError> {
    check_base(n, emb)?;
    Ok(q_plane(emb).finish(Stage::Q, Some(emb)))
}

/// Builds `R`. The copies of B are drawn as in [`build_b`] or all mirrored,
/// whichever keeps the rotation system plane.
pub fn build_r(n: &Graph, emb: &Embedding) -> Result<Gadget, GadgetError> {
    use NodeName::{InB, A, B, C};
    check_base(n, emb)?;
    let q = q_plane(emb);
    let b_rot = b_plus_rotations();
    let mut last = None;
    for mirror in [false, true] {
        let mut pg = q.clone();
        for (u, v) in directed_edges(n) {
            let t = ccwn(emb, u, v);
            let outside = |part: Part| match part {
                Part::P(Twin::Base) => A(u, v),
                Part::P(Twin::Mirror) => C(u, v),
                _ => C(t, u),
            };
            pg.remove(B(u, v));
            pg.replace(A(u, v), B(u, v), InB(u, v, Part::P(Twin::Base)));
            pg.replace(C(t, u), B(u, v), InB(u, v, Part::Q));
            pg.replace(C(u, v), B(u, v), InB(u, v, Part::P(Twin::Mirror)));
            for (name, rot) in &b_rot {
                let NodeName::Part(part) = *name else { continue };
                let mut rot: Vec<NodeName> = rot
                    .iter()
                    .map(|nb| match *nb {
                        NodeName::Part(x) => InB(u, v, x),
                        _ => outside(part),
                    })
                    .collect();
                if mirror {
                    rot.reverse();
                }
                pg.add(InB(u, v, part), rot);
            }
        }
        let r = pg.finish(Stage::R, Some(emb));
        if r.embedding.genus()? == 0 {
            return Ok(r);
        }
        last = Some(r);
    }
    let genus = last.expect("two attempts").embedding.genus()?;
    Err(GadgetError::NotPlane { genus })
}

fn a_edges(t: Twin) -> Vec<(Part, Part)> {
    let (x, y) = (|i| Part::X(t, i), |i| Part::Y(t, i));
    let mut edges = vec![(Part::P(t), x(1)), (Part::P(t), y(1)), (x(1), y(1))];
    for i in 1..4 {
        edges.extend([(x(i), x(i + 1)), (y(i), y(i + 1)), (x(i + 1), y(i + 1))]);
    }
    edges
}

/// Rotations of a straight-line drawing, clockwise at each vertex.
fn rotations_from_drawing(
    points: &[(NodeName, (f64, f64))],
    edges: &[(NodeName, NodeName)],
) -> Vec<(NodeName, Vec<NodeName>)> {
    let at: HashMap<NodeName, (f64, f64)> = points.iter().copied().collect();
    points
        .iter()
        .map(|&(name, (x0, y0))| {
            let mut nbs: Vec<(f64, NodeName)> = edges
                .iter()
                .filter_map(|&(a, b)| {
                    let other = if a == name { b } else if b == name { a } else { return None };
                    let (x, y) = at[&other];
                    Some(((y - y0).atan2(x - x0), other))
                })
                .collect();
            nbs.sort_by(|a, b| b.0.total_cmp(&a.0));
            (name, nbs.into_iter().map(|(_, n)| n).collect())
        })
        .collect()
}

fn part_points(t: Twin, coords: [(f64, f64); 9]) -> Vec<(NodeName, (f64, f64))> {
    Part::a_vertices(t)
        .into_iter()
        .map(NodeName::Part)
        .zip(coords)
        .collect()
}

fn a_plus_rotations() -> Vec<(NodeName, Vec<NodeName>)> {
    // A bent into a U so that p, x4 and y4 all face the apex below.
    // Order: p, x1, y1, x2, y2, x3, y3, x4, y4.
    let mut points = part_points(
        Twin::Base,
        [
            (-3.0, 0.0),
            (-4.0, 1.0),
            (-2.0, 1.0),
            (-3.0, 4.0),
            (-1.5, 2.5),
            (3.0, 4.0),
            (1.5, 2.5),
            (4.0, 1.0),
            (2.0, 1.0),
        ],
    );
    points.push((NodeName::Apex, (0.0, -5.0)));
    let mut edges: Vec<(NodeName, NodeName)> = a_edges(Twin::Base)
        .into_iter()
        .map(|(a, b)| (NodeName::Part(a), NodeName::Part(b)))
        .collect();
    for part in [Part::P(Twin::Base), Part::X(Twin::Base, 4), Part::Y(Twin::Base, 4)] {
        edges.push((NodeName::Apex, NodeName::Part(part)));
    }
    rotations_from_drawing(&points, &edges)
}

fn b_plus_rotations() -> Vec<(NodeName, Vec<NodeName>)> {
    // A on the left, its mirror image A' on the right, q between the feet,
    // apex on top.
    let left = [
        (-3.0, 5.0),
        (-4.0, 4.0),
        (-2.0, 4.0),
        (-4.0, 3.0),
        (-2.0, 3.0),
        (-4.0, 2.0),
        (-2.0, 2.0),
        (-4.0, 0.0),
        (-2.0, 1.0),
    ];
    let mut points = part_points(Twin::Base, left);
    points.extend(part_points(Twin::Mirror, left.map(|(x, y)| (-x, y))));
    points.push((NodeName::Part(Part::Q), (0.0, 0.5)));
    points.push((NodeName::Apex, (0.0, 6.0)));
    let mut parts = a_edges(Twin::Base);
    parts.extend(a_edges(Twin::Mirror));
    parts.extend([
        (Part::X(Twin::Base, 4), Part::X(Twin::Mirror, 4)),
        (Part::Y(Twin::Base, 4), Part::Q),
        (Part::Y(Twin::Mirror, 4), Part::Q),
    ]);
    let mut edges: Vec<(NodeName, NodeName)> = parts
        .into_iter()
        .map(|(a, b)| (NodeName::Part(a), NodeName::Part(b)))
        .collect();
    for part in [Part::P(Twin::Base), Part::Q, Part::P(Twin::Mirror)] {
        edges.push((NodeName::Apex, NodeName::Part(part)));
    }
    rotations_from_drawing(&points, &edges)
}

fn plane_from(rotations: Vec<(NodeName, Vec<NodeName>)>) -> PlaneGraph {
    let mut pg = PlaneGraph::default();
    for (name, rot) in rotations {
        pg.add(name, rot);
    }
    pg
}

/// The cubic completion A⁺: gadget A plus an apex `z` joined to `p`, `x4`
/// and `y4`. Removing `z` leaves A with its three attachment stubs.
pub fn build_a() -> Gadget {
    plane_from(a_plus_rotations()).finish(Stage::A, None)
}

/// The cubic completion B⁺: gadget B plus an apex `z` joined to `p`, `q`
/// and `p'`.
pub fn build_b() -> Gadget {
    plane_from(b_plus_rotations()).finish(Stage::B, None)
}

/// Mechanical checks of the claims made for each construction stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub stage: Stage,
    pub vertices: usize,
    pub edges: usize,
    pub cubic: bool,
    pub simple: bool,
    /// Genus of the returned rotation system; 0 certifies planarity.
    pub genus: usize,
    pub two_connected: bool,
    pub three_connected: bool,
}

impl StageReport {
    pub fn planar(&self) -> bool {
        self.genus == 0
    }
}

pub fn check_stage(g: &Gadget) -> Result<StageReport, GadgetError> {
    let profile = g.graph.degree_profile();
    Ok(StageReport {
        stage: g.map.stage(),
        vertices: g.graph.vertex_count(),
        edges: g.graph.edge_count(),
        cubic: profile.is_cubic,
        simple: profile.is_simple,
        genus: g.embedding.genus()?,
        two_connected: vertex_connectivity_at_least(&g.graph, 2),
        three_connected: vertex_connectivity_at_least(&g.graph, 3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4_plane() -> (Graph, Embedding) {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = |e, s| Dart::new(e, s);
        // Vertex 0 at the center, 1, 2, 3 around it.
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
        assert_eq!(emb.genus().unwrap(), 0);
        (g, emb)
    }

    #[test]
    fn gadget_completions() {
        let a = build_a();
        let r = check_stage(&a).unwrap();
        assert_eq!((r.vertices, r.edges), (10, 15));
        assert!(r.cubic && r.simple && r.planar() && r.three_connected);
        let b = build_b();
        let r = check_stage(&b).unwrap();
        assert_eq!((r.vertices, r.edges), (20, 30));
        assert!(r.cubic && r.simple && r.planar() && r.three_connected);
    }

    #[test]
    fn a_degrees() {
        let a = build_a();
        let z = a.map.id(&NodeName::Apex).unwrap();
        let mut two: Vec<String> = a
            .graph
            .neighbors(z)
            .map(|v| a.map.name(v).to_string())
            .collect();
        two.sort();
        assert_eq!(two, ["p", "x4", "y4"]);
    }

    #[test]
    fn rejects_bad_bases() {
        let (g, emb) = k4_plane();
        let twisted = Embedding::identity(g.clone());
        assert_eq!(twisted.genus().unwrap(), 1);
        assert_eq!(build_p(&g, &twisted).unwrap_err(), GadgetError::NotPlane { genus: 1 });
        let theta = Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(
            build_p(&theta, &Embedding::identity(theta.clone())).unwrap_err(),
            GadgetError::NotSimple
        );
        let tri = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            build_q(&tri, &Embedding::identity(tri.clone())).unwrap_err(),
            GadgetError::NotCubic
        );
        assert_eq!(build_r(&tri, &emb).unwrap_err(), GadgetError::ForeignEmbedding);
    }

    #[test]
    fn bracing_edges_follow_clockwise_neighbors() {
        let (g, emb) = k4_plane();
        let q = build_q(&g, &emb).unwrap();
        for (u, v) in directed_edges(&g) {
            let w = emb.clockwise_neighbor(v, u).unwrap();
            assert!(q
                .map
                .edge_between(&q.graph, &NodeName::C(u, v), &NodeName::B(v, w))
                .is_some());
        }
    }

    #[test]
    fn p_edge_gadget_sides() {
        // Along u -> v the face on the left runs u a(u,v) d(u,v) a(v,u) v.
        let (g, emb) = k4_plane();
        let p = build_p(&g, &emb).unwrap();
        let faces = p.embedding.trace_faces();
        for (u, v) in directed_edges(&g) {
            let seq = [NodeName::Orig(u), NodeName::A(u, v), NodeName::D(u, v), NodeName::A(v, u), NodeName::Orig(v)];
            let ids: Vec<usize> = seq.iter().map(|n| p.map.id(n).unwrap()).collect();
            let first = p.graph.dart_between(ids[0], ids[1]).unwrap();
            let face = faces.face(faces.face_of(first));
            let at = face.iter().position(|&d| d == first).unwrap();
            let got: Vec<usize> = (0..4).map(|k| p.graph.head(face[(at + k) % face.len()])).collect();
            assert_eq!(got, ids[1..]);
        }
    }
}

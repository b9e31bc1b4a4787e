//! Brute-force planar subdivision of an arrangement, used as ground truth.
//!
//! Vertices are all pairwise intersections, merged exactly. Each line is cut
//! at its vertices into segments plus two rays; every ray ends at its own
//! ideal point on a circle at infinity, and consecutive ideal points are
//! joined by arcs. The result is a connected plane graph in which every face,
//! bounded or not, is a closed cycle of half-edges, so faces fall out of the
//! usual "next = clockwise neighbour of the twin" rule with no bounding box.
//!
//! A face's side count is the number of maximal runs of consecutive boundary
//! edges on one line; arcs at infinity are not sides.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::geometry::{intersect, CoeffPoint, EuclidPoint};
use crate::point_set::PointSet;
use crate::rational::Rational;
use crate::vec2::V2;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Finite(usize),
    Ideal(usize),
}

#[derive(Debug, Clone)]
struct IdealPoint {
    /// Direction of the ray, scaled to unit L1 norm so parallel rays in the
    /// same direction compare equal.
    dir: V2,
    /// Signed offset of the ray's line to the left of `dir`, in the same
    /// scale; orders parallel rays along the circle.
    offset: Rational,
}

#[derive(Debug, Clone)]
struct HalfEdge {
    origin: Node,
    twin: usize,
    next: usize,
    /// `None` for arcs at infinity.
    line: Option<usize>,
    face: usize,
}

/// One face of the subdivision, boundary listed clockwise.
///
/// `corners[k]` is where `side_lines[k]` meets `side_lines[k + 1]`; for an
/// unbounded face the list is open and has one entry fewer than the sides of
/// each boundary chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub bounded: bool,
    pub side_count: usize,
    pub side_lines: Vec<CoeffPoint>,
    pub corners: Vec<EuclidPoint>,
    /// Half-edge ids, counterclockwise (face on the left).
    pub boundary: Vec<usize>,
    /// Which side of each line the face lies on (`true`: `Ax + By > 1`).
    signs: Vec<bool>,
}

impl Face {
    /// Whether the face lies on the far side of `lines[i]` from the origin.
    pub fn beyond(&self, i: usize) -> bool {
        self.signs[i]
    }

    /// Whether all turns along the boundary are strictly clockwise.
    pub fn is_strictly_convex(&self) -> bool {
        if !self.bounded {
            return true;
        }
        let n = self.corners.len();
        (0..n).all(|k| {
            let a = V2::from(&self.corners[k]);
            let b = V2::from(&self.corners[(k + 1) % n]);
            let c = V2::from(&self.corners[(k + 2) % n]);
            (&b - &a).cross(&(&c - &b)).is_negative()
        })
    }

    pub fn contains_origin(&self) -> bool {
        !self.signs.iter().any(|&s| s)
    }
}

#[derive(Debug, Clone)]
pub struct Subdivision {
    lines: Vec<CoeffPoint>,
    vertices: Vec<EuclidPoint>,
    ideal: Vec<IdealPoint>,
    half_edges: Vec<HalfEdge>,
    faces: Vec<Face>,
    /// Total number of face cycles including the one outside the circle at
    /// infinity.
    cycle_count: usize,
}

fn l1_normalized(d: V2) -> V2 {
    let n = d.x.abs() + d.y.abs();
    V2::new(&d.x / &n, &d.y / &n)
}

fn sign_of(p: &CoeffPoint, x: &V2) -> Ordering {
    p.line_value(&x.clone().into_euclid()).cmp(&Rational::zero())
}

impl Subdivision {
    pub fn build(s: &PointSet) -> Subdivision {
        let lines: Vec<CoeffPoint> = s.points().to_vec();
        let nl = lines.len();

        // vertices, merged exactly, and the vertices lying on each line
        let mut index: BTreeMap<EuclidPoint, usize> = BTreeMap::new();
        let mut vertices: Vec<EuclidPoint> = Vec::new();
        let mut on_line: Vec<Vec<usize>> = alloc::vec![Vec::new(); nl];
        for i in 0..nl {
            for j in i + 1..nl {
                let Some(v) = intersect(&lines[i], &lines[j]).expect("points are distinct") else {
                    continue;
                };
                let id = *index.entry(v.clone()).or_insert_with(|| {
                    vertices.push(v);
                    vertices.len() - 1
                });
                on_line[i].push(id);
                on_line[j].push(id);
            }
        }

        let mut half_edges: Vec<HalfEdge> = Vec::new();
        let mut ideal: Vec<IdealPoint> = Vec::new();
        let mut ideal_inward: Vec<usize> = Vec::new();
        let add_edge = |he: &mut Vec<HalfEdge>, a: Node, b: Node, line: Option<usize>| -> usize {
            let id = he.len();
            he.push(HalfEdge { origin: a, twin: id + 1, next: usize::MAX, line, face: usize::MAX });
            he.push(HalfEdge { origin: b, twin: id, next: usize::MAX, line, face: usize::MAX });
            id
        };

        for (li, line) in lines.iter().enumerate() {
            let dir = l1_normalized(V2::from(&line.line_direction()));
            let foot = V2::from(&line.foot());
            let mut on = on_line[li].clone();
            on.sort_by(|&a, &b| {
                let ta = V2::from(&vertices[a]).dot(&dir);
                let tb = V2::from(&vertices[b]).dot(&dir);
                ta.cmp(&tb)
            });
            on.dedup();
            let back_dir = -dir.clone();
            let back = ideal.len();
            ideal.push(IdealPoint { offset: back_dir.cross(&foot), dir: back_dir });
            let front = ideal.len();
            ideal.push(IdealPoint { offset: dir.cross(&foot), dir });

            let mut chain: Vec<Node> = Vec::with_capacity(on.len() + 2);
            chain.push(Node::Ideal(back));
            chain.extend(on.iter().map(|&v| Node::Finite(v)));
            chain.push(Node::Ideal(front));
            let first = half_edges.len();
            for w in chain.windows(2) {
                add_edge(&mut half_edges, w[0], w[1], Some(li));
            }
            let last = half_edges.len() - 2;
            // inward half-edges leaving each ideal point
            ideal_inward.push(first);
            ideal_inward.push(last + 1);
        }

        // circle at infinity, counterclockwise
        let mut ring: Vec<usize> = (0..ideal.len()).collect();
        ring.sort_by(|&a, &b| {
            ideal[a].dir.angle_cmp(&ideal[b].dir).then_with(|| ideal[a].offset.cmp(&ideal[b].offset))
        });
        let k = ring.len();
        // ccw_arc[p]: arc leaving ideal point p counterclockwise
        let mut ccw_arc = alloc::vec![usize::MAX; ideal.len()];
        let mut cw_arc = alloc::vec![usize::MAX; ideal.len()];
        for r in 0..k {
            let a = ring[r];
            let b = ring[(r + 1) % k];
            let id = add_edge(&mut half_edges, Node::Ideal(a), Node::Ideal(b), None);
            ccw_arc[a] = id;
            cw_arc[b] = id + 1;
        }

        // rotation system: outgoing half-edges of each node, counterclockwise
        let mut around_finite: Vec<Vec<usize>> = alloc::vec![Vec::new(); vertices.len()];
        for (id, he) in half_edges.iter().enumerate() {
            if let Node::Finite(v) = he.origin {
                around_finite[v].push(id);
            }
        }
        let direction = |id: usize, he: &[HalfEdge]| -> V2 {
            let from = match he[id].origin {
                Node::Finite(v) => V2::from(&vertices[v]),
                Node::Ideal(_) => unreachable!("only finite origins are sorted"),
            };
            match he[he[id].twin].origin {
                Node::Finite(w) => &V2::from(&vertices[w]) - &from,
                Node::Ideal(p) => ideal[p].dir.clone(),
            }
        };
        for out in around_finite.iter_mut() {
            out.sort_by(|&a, &b| direction(a, &half_edges).angle_cmp(&direction(b, &half_edges)));
        }
        let around_ideal: Vec<[usize; 3]> =
            (0..ideal.len()).map(|p| [ccw_arc[p], ideal_inward[p], cw_arc[p]]).collect();

        // next(h) = the outgoing edge just clockwise of twin(h) at h's head
        for id in 0..half_edges.len() {
            let twin = half_edges[id].twin;
            let next = match half_edges[twin].origin {
                Node::Finite(v) => {
                    let out = &around_finite[v];
                    let pos = out.iter().position(|&e| e == twin).unwrap();
                    out[(pos + out.len() - 1) % out.len()]
                }
                Node::Ideal(p) => {
                    let out = &around_ideal[p];
                    let pos = out.iter().position(|&e| e == twin).unwrap();
                    out[(pos + 2) % 3]
                }
            };
            half_edges[id].next = next;
        }

        let mut sub = Subdivision { lines, vertices, ideal, half_edges, faces: Vec::new(), cycle_count: 0 };
        sub.trace_faces();
        sub
    }

    fn trace_faces(&mut self) {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.half_edges.len() {
            if self.half_edges[start].face != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut cycle = Vec::new();
            let mut e = start;
            loop {
                self.half_edges[e].face = id;
                cycle.push(e);
                e = self.half_edges[e].next;
                if e == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        self.cycle_count = cycles.len();
        self.faces = cycles
            .into_iter()
            .filter(|c| c.iter().any(|&e| self.half_edges[e].line.is_some()))
            .map(|c| self.make_face(c))
            .collect();
    }

    fn make_face(&self, cycle: Vec<usize>) -> Face {
        let line_of = |e: usize| self.half_edges[e].line;
        let bounded = cycle.iter().all(|&e| line_of(e).is_some());

        // Split into chains of line edges separated by arcs (a bounded face
        // is one cyclic chain).
        let mut chains: Vec<Vec<usize>> = Vec::new();
        if bounded {
            let n = cycle.len();
            let start = (0..n).find(|&i| line_of(cycle[i]) != line_of(cycle[(i + n - 1) % n])).unwrap_or(0);
            let mut c = cycle.clone();
            c.rotate_left(start);
            chains.push(c.iter().map(|&e| line_of(e).unwrap()).collect());
        } else {
            let n = cycle.len();
            let start = (0..n).find(|&i| line_of(cycle[i]).is_none()).unwrap();
            let mut current: Vec<usize> = Vec::new();
            for i in 1..=n {
                match line_of(cycle[(start + i) % n]) {
                    Some(l) => current.push(l),
                    None => {
                        if !current.is_empty() {
                            chains.push(core::mem::take(&mut current));
                        }
                    }
                }
            }
        }

        let mut side_count = 0;
        let mut side_lines = Vec::new();
        let mut corners = Vec::new();
        // chains come counterclockwise; report clockwise
        for chain in chains.iter().rev() {
            let mut runs: Vec<usize> = chain.clone();
            runs.dedup();
            runs.reverse();
            side_count += runs.len();
            for w in runs.windows(2) {
                corners.push(self.corner(w[0], w[1]));
            }
            if bounded && runs.len() > 1 {
                corners.push(self.corner(runs[runs.len() - 1], runs[0]));
            }
            side_lines.extend(runs.into_iter().map(|l| self.lines[l].clone()));
        }

        let signs = self.face_signs(&cycle);
        Face { bounded, side_count, side_lines, corners, boundary: cycle, signs }
    }

    fn corner(&self, a: usize, b: usize) -> EuclidPoint {
        intersect(&self.lines[a], &self.lines[b]).expect("distinct lines").expect("adjacent sides are never parallel")
    }

    fn node_point(&self, n: Node) -> Option<V2> {
        match n {
            Node::Finite(v) => Some(V2::from(&self.vertices[v])),
            Node::Ideal(_) => None,
        }
    }

    /// Sign vector of a face from one of its line edges: a point in the
    /// relative interior of the edge is on no other line, and the face lies
    /// to the left of the edge.
    fn face_signs(&self, cycle: &[usize]) -> Vec<bool> {
        let e = *cycle.iter().find(|&&e| self.half_edges[e].line.is_some()).expect("face has a line edge");
        let he = &self.half_edges[e];
        let li = he.line.unwrap();
        let head = self.half_edges[he.twin].origin;
        let ideal_dir = |n: Node| match n {
            Node::Ideal(p) => self.ideal[p].dir.clone(),
            Node::Finite(_) => unreachable!(),
        };
        let (sample, dir) = match (self.node_point(he.origin), self.node_point(head)) {
            (Some(a), Some(b)) => {
                let mid = (&a + &b).scale(&Rational::new(1.into(), 2.into()));
                (mid, &b - &a)
            }
            (Some(a), None) => {
                let d = ideal_dir(head);
                (&a + &d, d)
            }
            (None, Some(b)) => {
                let d = ideal_dir(he.origin);
                (&b + &d, -d)
            }
            (None, None) => (V2::from(&self.lines[li].foot()), ideal_dir(head)),
        };
        let left_normal = V2::new(-dir.y.clone(), dir.x.clone());
        self.lines
            .iter()
            .enumerate()
            .map(|(j, p)| {
                if j == li {
                    (p.a() * &left_normal.x + p.b() * &left_normal.y).is_positive()
                } else {
                    match sign_of(p, &sample) {
                        Ordering::Greater => true,
                        Ordering::Less => false,
                        Ordering::Equal => unreachable!("edge interior point lies on another line"),
                    }
                }
            })
            .collect()
    }

    pub fn lines(&self) -> &[CoeffPoint] {
        &self.lines
    }

    pub fn vertices(&self) -> &[EuclidPoint] {
        &self.vertices
    }

    /// All faces of the arrangement (the exterior of the circle at infinity
    /// is not a face).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn bounded_faces(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| f.bounded).collect()
    }

    pub fn unbounded_faces(&self) -> Vec<&Face> {
        self.faces.iter().filter(|f| !f.bounded).collect()
    }

    /// Face whose interior contains `x`, matched by exact side-of-line signs.
    pub fn face_containing(&self, x: &EuclidPoint) -> Result<&Face> {
        let xv = V2::from(x);
        let mut signs = Vec::with_capacity(self.lines.len());
        for p in &self.lines {
            match sign_of(p, &xv) {
                Ordering::Equal => return Err(Error::PointOnLine),
                o => signs.push(o == Ordering::Greater),
            }
        }
        if self.lines.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(self.faces.iter().find(|f| f.signs == signs).expect("every sign vector off the lines belongs to a face"))
    }

    /// Histogram of bounded faces by side count.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in self.faces.iter().filter(|f| f.bounded) {
            *h.entry(f.side_count).or_insert(0) += 1;
        }
        h
    }

    /// Unbounded faces whose boundary is exactly two maximal collinear runs.
    pub fn two_sided_unbounded_count(&self) -> usize {
        self.faces.iter().filter(|f| !f.bounded && f.side_count == 2).count()
    }

    /// `(V, E, F)` of the compactified graph, counting ideal points, arcs at
    /// infinity and the exterior face.
    pub fn euler_counts(&self) -> (usize, usize, usize) {
        (self.vertices.len() + self.ideal.len(), self.half_edges.len() / 2, self.cycle_count)
    }

    /// `V - E + F == 2`; trivially true for an empty arrangement.
    pub fn euler_holds(&self) -> bool {
        if self.lines.is_empty() {
            return true;
        }
        let (v, e, f) = self.euler_counts();
        v + f == e + 2
    }
}

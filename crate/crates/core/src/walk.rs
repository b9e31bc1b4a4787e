//! Walking the boundary of a cell clockwise using only coefficient-plane data.
//!
//! A walk is a cyclic sequence of sides `(P_k, D_k)`: `P_k` names the line
//! carrying the k-th side and `D_k` records on which side of that line, as
//! seen while travelling clockwise, the Euclidean origin lies.
//!
//! Two facts drive everything here:
//!
//! * `D_{k+1}` equals `D_k` when `P_{k+1}` is right of `P_k` and differs
//!   from it when `P_{k+1}` is left of `P_k` ([`d_step`]).
//! * The next line is found by rotating the coefficient-plane line through
//!   `P_k` and `P_{k+1}` about `P_{k+1}` (clockwise for `D_{k+1} = R`,
//!   counterclockwise for `L`) until it meets another point of the set, never
//!   passing over the direction of the origin. Of the points met together,
//!   the first or the last one along the rotated line is the next side,
//!   depending on whether `D_k` and `D_{k+1}` differ ([`next_side`]).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::geometry::{intersect, orientation, CoeffPoint, EuclidPoint, Orientation};
use crate::point_set::PointSet;
use crate::vec2::V2;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DSide {
    L,
    R,
}

impl DSide {
    pub fn flip(self) -> Self {
        match self {
            DSide::L => DSide::R,
            DSide::R => DSide::L,
        }
    }
}

impl fmt::Display for DSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DSide::L => "L",
            DSide::R => "R",
        })
    }
}

/// One bounded cell, walked clockwise.
///
/// `vertices[k]` is the corner where side `k` meets side `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub sides: Vec<(CoeffPoint, DSide)>,
    pub vertices: Vec<EuclidPoint>,
    pub contains_origin: bool,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn d_values(&self) -> Vec<DSide> {
        self.sides.iter().map(|(_, d)| *d).collect()
    }

    /// Same cell, rotated so that the lexicographically smallest vertex comes
    /// first. Two walks of one cell have equal canonical forms.
    pub fn canonical(&self) -> FaceWalk {
        let n = self.vertices.len();
        let start = (0..n).min_by(|&i, &j| self.vertices[i].cmp(&self.vertices[j])).unwrap_or(0);
        let mut out = self.clone();
        out.sides.rotate_left(start);
        out.vertices.rotate_left(start);
        out
    }
}

/// `D_{k+1}` from `D_k`: unchanged if `P_{k+1}` is right of `P_k`, flipped if
/// it is left.
pub fn d_step(pk: &CoeffPoint, pk1: &CoeffPoint, dk: DSide) -> Result<DSide> {
    match orientation(pk, pk1) {
        Orientation::Right => Ok(dk),
        Orientation::Left => Ok(dk.flip()),
        Orientation::On => Err(Error::ParallelPair),
    }
}

/// Side of the directed line `from -> to` (which must lie along `L_P`) on
/// which the origin sits.
pub fn initial_d(p: &CoeffPoint, from: &EuclidPoint, to: &EuclidPoint) -> Result<DSide> {
    if from == to {
        return Err(Error::DegenerateDirection);
    }
    if !p.contains(from) || !p.contains(to) {
        return Err(Error::PointOffLine);
    }
    let f = V2::from(from);
    let c = (&V2::from(to) - &f).cross(&(&V2::zero() - &f));
    Ok(if c.is_positive() { DSide::L } else { DSide::R })
}

/// Whether `(p1, p2, d1)` is a genuine cell corner: no other line of `s`
/// through `L_{p1} ∩ L_{p2}` cuts the angle. When `D` stays the same across
/// the corner every point of `s` on the line `p1 p2` must lie within the
/// segment `[p1, p2]`; when it flips, the open segment must hold no point of
/// `s`.
pub fn is_cell_corner(s: &PointSet, p1: &CoeffPoint, p2: &CoeffPoint, d1: DSide) -> Result<bool> {
    if !s.contains(p1) || !s.contains(p2) {
        return Err(Error::PointNotInSet);
    }
    if p1 == p2 {
        return Err(Error::IdenticalPoints);
    }
    let d2 = d_step(p1, p2, d1)?;
    let a = V2::from(p1);
    let ab = &V2::from(p2) - &a;
    let len = ab.norm_sq();
    for z in s {
        if z == p1 || z == p2 {
            continue;
        }
        let az = &V2::from(z) - &a;
        if !ab.cross(&az).is_zero() {
            continue;
        }
        let t = ab.dot(&az);
        let within = t.is_positive() && t < len;
        if within == (d1 != d2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The line carrying the side after `L_{pk1}`, together with `D_{k+1}`.
///
/// Returns `None` when the rotation about `pk1` reaches the direction of the
/// origin before meeting another point of `s`: the boundary runs off to
/// infinity along `L_{pk1}`.
pub fn next_side(s: &PointSet, pk: &CoeffPoint, pk1: &CoeffPoint, dk: DSide) -> Result<Option<(CoeffPoint, DSide)>> {
    if !s.contains(pk) || !s.contains(pk1) {
        return Err(Error::PointNotInSet);
    }
    if pk == pk1 {
        return Err(Error::IdenticalPoints);
    }
    let dk1 = d_step(pk, pk1, dk)?;
    let clockwise = dk1 == DSide::R;

    let pivot = V2::from(pk1);
    let start = &pivot - &V2::from(pk);

    // Lines through the pivot swept by a rotation of less than a half turn
    // correspond to directions in one open half-plane of `start`. Pick the
    // representative there; `None` for the start line itself.
    let swept = |d: V2| -> Option<V2> {
        let c = start.cross(&d);
        if c.is_zero() {
            None
        } else if c.is_negative() == clockwise {
            Some(d)
        } else {
            Some(-d)
        }
    };
    // Strictly earlier in the sweep.
    let before = |a: &V2, b: &V2| -> bool {
        let c = a.cross(b);
        if clockwise {
            c.is_negative()
        } else {
            c.is_positive()
        }
    };

    // The rotation stops short of the line through the origin.
    let forbidden = swept(pivot.clone()).ok_or(Error::ParallelPair)?;

    let mut best: Option<V2> = None;
    let mut hits: Vec<&CoeffPoint> = Vec::new();
    for z in s {
        if z == pk1 {
            continue;
        }
        let Some(d) = swept(&V2::from(z) - &pivot) else {
            continue;
        };
        if !before(&d, &forbidden) {
            continue;
        }
        match &best {
            Some(b) if before(b, &d) => {}
            Some(b) if !before(&d, b) => hits.push(z),
            _ => {
                best = Some(d);
                hits.clear();
                hits.push(z);
            }
        }
    }
    let Some(dir) = best else {
        return Ok(None);
    };

    // P* is where the rotated line meets the line through pk parallel to the
    // ray O -> pk1. Solving pivot + t*dir = pk + u*pivot and crossing with
    // pivot gives t * (dir x pivot) = pk x pk1.
    let pk_v = V2::from(pk);
    let t_sign = pk_v.cross(&pivot).signum() * dir.cross(&pivot).signum();
    let toward_star = if t_sign.is_positive() { dir } else { -dir };

    // Q_1..Q_q: leave the pivot away from P*, wrap around through infinity
    // and come back from P*'s side. Parameter lambda < 0 is away from P*.
    let param = |z: &CoeffPoint| (&V2::from(z) - &pivot).dot(&toward_star);
    let mut order: Vec<(bool, crate::Rational, &CoeffPoint)> = hits
        .into_iter()
        .map(|z| {
            let l = param(z);
            (l.is_positive(), -l, z)
        })
        .collect();
    order.sort();
    let chosen = if dk == dk1 { order.last() } else { order.first() };
    Ok(chosen.map(|(_, _, z)| ((*z).clone(), dk1)))
}

/// Walks the cell whose boundary turns from `L_{p1}` onto `L_{p2}` with the
/// origin on side `d1` of `L_{p1}`.
///
/// `Ok(None)` means the cell is unbounded. A walk that has not closed after
/// `2 * |s|` steps is an internal inconsistency and is reported as an error.
pub fn walk_face(s: &PointSet, p1: &CoeffPoint, p2: &CoeffPoint, d1: DSide) -> Result<Option<FaceWalk>> {
    if !is_cell_corner(s, p1, p2, d1)? {
        return Err(Error::NotACellCorner);
    }
    let bound = 2 * s.len();
    let mut sides = alloc::vec![(p1.clone(), d1)];
    let (mut a, mut b, mut da) = (p1.clone(), p2.clone(), d1);
    for _ in 0..bound {
        let Some((c, db)) = next_side(s, &a, &b, da)? else {
            return Ok(None);
        };
        if &b == p1 && &c == p2 && db == d1 {
            return Ok(Some(close(sides)));
        }
        sides.push((b.clone(), db));
        a = b;
        b = c;
        da = db;
    }
    Err(Error::WalkBoundExceeded { steps: bound })
}

fn close(sides: Vec<(CoeffPoint, DSide)>) -> FaceWalk {
    let n = sides.len();
    let vertices: Vec<EuclidPoint> = (0..n)
        .map(|k| {
            intersect(&sides[k].0, &sides[(k + 1) % n].0).ok().flatten().expect("consecutive sides are never parallel")
        })
        .collect();
    let origin = V2::zero();
    let contains_origin = (0..n).all(|k| {
        let a = V2::from(&vertices[k]);
        let b = V2::from(&vertices[(k + 1) % n]);
        (&b - &a).cross(&(&origin - &a)).is_negative()
    });
    FaceWalk { sides, vertices, contains_origin }
}

/// Every bounded cell of the arrangement, each walked once, in canonical form
/// and sorted by vertex cycle.
///
/// Seeds are all ordered pairs of lines through each arrangement vertex with
/// both values of `D`; seeds that are not cell corners are skipped, as are
/// seeds already covered by a completed walk.
pub fn enumerate_faces(s: &PointSet) -> Result<Vec<FaceWalk>> {
    let pts = s.points();
    let mut through: BTreeMap<EuclidPoint, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if let Some(v) = intersect(&pts[i], &pts[j])? {
                let e = through.entry(v).or_default();
                e.insert(i);
                e.insert(j);
            }
        }
    }

    let mut seen: BTreeSet<(usize, usize, DSide)> = BTreeSet::new();
    let mut faces: BTreeMap<Vec<EuclidPoint>, FaceWalk> = BTreeMap::new();
    for lines in through.values() {
        for &i in lines {
            for &j in lines {
                if i == j {
                    continue;
                }
                for d in [DSide::L, DSide::R] {
                    if seen.contains(&(i, j, d)) || !is_cell_corner(s, &pts[i], &pts[j], d)? {
                        continue;
                    }
                    seen.insert((i, j, d));
                    let Some(walk) = walk_face(s, &pts[i], &pts[j], d)? else {
                        continue;
                    };
                    let n = walk.sides.len();
                    for k in 0..n {
                        let (p, dp) = &walk.sides[k];
                        let q = &walk.sides[(k + 1) % n].0;
                        let ip = s.index_of(p).unwrap();
                        let iq = s.index_of(q).unwrap();
                        seen.insert((ip, iq, *dp));
                    }
                    let walk = walk.canonical();
                    faces.entry(walk.vertices.clone()).or_insert(walk);
                }
            }
        }
    }
    Ok(faces.into_values().collect())
}

/// Number of cyclically adjacent pairs with different `D`.
pub fn d_sign_changes(d: &[DSide]) -> usize {
    let n = d.len();
    (0..n).filter(|&k| d[k] != d[(k + 1) % n]).count()
}

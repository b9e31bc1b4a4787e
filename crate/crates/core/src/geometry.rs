//! Coefficient-plane points, Euclidean points, and the predicates that tie a
//! coefficient point `P = (A, B)` to its line `L_P: Ax + By = 1`.
//!
//! "Left of `P`" always means the open half-plane to the left of the ray from
//! the origin through `P`; the sign of `A_P * B_Q - B_P * A_Q` decides it.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};
use crate::vec2::V2;
use crate::{Error, Result};

/// A point `(A, B) != (0, 0)` of the coefficient plane. Doubles as the handle
/// for the line `Ax + By = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffPoint {
    a: Rational,
    b: Rational,
}

impl CoeffPoint {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::OriginPoint);
        }
        Ok(CoeffPoint { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        CoeffPoint::new(rational::int(a), rational::int(b))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `A*x + B*y - 1`: negative on the origin's side of `L_P`, zero on it.
    pub fn line_value(&self, x: &EuclidPoint) -> Rational {
        &self.a * &x.x + &self.b * &x.y - Rational::one()
    }

    pub fn contains(&self, x: &EuclidPoint) -> bool {
        self.line_value(x).is_zero()
    }

    pub fn norm_sq(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b
    }

    /// The point of `L_P` closest to the origin, `P / |P|^2`.
    pub fn foot(&self) -> EuclidPoint {
        let n = self.norm_sq();
        EuclidPoint::new(&self.a / &n, &self.b / &n)
    }

    /// A nonzero direction vector of `L_P`.
    pub fn line_direction(&self) -> EuclidPoint {
        EuclidPoint::new(-self.b.clone(), self.a.clone())
    }
}

impl fmt::Display for CoeffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A point of the Euclidean plane where the lines live.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EuclidPoint {
    pub x: Rational,
    pub y: Rational,
}

impl EuclidPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        EuclidPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        EuclidPoint::new(rational::int(x), rational::int(y))
    }

    pub fn origin() -> Self {
        EuclidPoint::new(Rational::zero(), Rational::zero())
    }
}

impl fmt::Display for EuclidPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    On,
}

impl Orientation {
    pub fn reverse(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::On => Orientation::On,
        }
    }
}

pub(crate) fn orientation_of(c: &Rational) -> Orientation {
    if c.is_positive() {
        Orientation::Left
    } else if c.is_negative() {
        Orientation::Right
    } else {
        Orientation::On
    }
}

/// Where `q` sits relative to the ray from the origin through `p`.
pub fn orientation(p: &CoeffPoint, q: &CoeffPoint) -> Orientation {
    orientation_of(&V2::from(p).cross(&V2::from(q)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OriginSide {
    SameAsOrigin,
    OppositeOrigin,
    OnLine,
}

pub fn origin_side_of_line(p: &CoeffPoint, x: &EuclidPoint) -> OriginSide {
    let v = p.line_value(x);
    if v.is_negative() {
        OriginSide::SameAsOrigin
    } else if v.is_positive() {
        OriginSide::OppositeOrigin
    } else {
        OriginSide::OnLine
    }
}

/// `(1/A, 1/B)`, each absent when the line is parallel to that axis.
pub fn intercepts(p: &CoeffPoint) -> (Option<Rational>, Option<Rational>) {
    let inv = |c: &Rational| (!c.is_zero()).then(|| c.recip());
    (inv(&p.a), inv(&p.b))
}

/// Intersection of `L_{P1}` and `L_{P2}`; `None` when the lines are parallel,
/// i.e. when `P1`, `P2` and the origin are collinear.
///
/// Every coefficient point `Z` on the line through `P1` and `P2` names a line
/// through the returned point.
pub fn intersect(p1: &CoeffPoint, p2: &CoeffPoint) -> Result<Option<EuclidPoint>> {
    if p1 == p2 {
        return Err(Error::IdenticalPoints);
    }
    let det = &p1.a * &p2.b - &p1.b * &p2.a;
    if det.is_zero() {
        return Ok(None);
    }
    let x = (&p2.b - &p1.b) / &det;
    let y = (&p1.a - &p2.a) / &det;
    Ok(Some(EuclidPoint::new(x, y)))
}

/// `|P|^2 * dist(O, L_P)^2`, always exactly one.
///
/// The distance is measured independently of `P`'s norm: from two points of
/// the line, by the cross-product area formula.
pub fn dist_product(p: &CoeffPoint) -> Rational {
    let p1 = V2::from(&p.foot());
    let d = V2::from(&p.line_direction());
    let p2 = &p1 + &d;
    let base = &p2 - &p1;
    let to_origin = &V2::zero() - &p1;
    let area = base.cross(&to_origin);
    let dist_sq = &area * &area / base.norm_sq();
    p.norm_sq() * dist_sq
}

/// Non-degenerate linear map of the coefficient plane,
/// `[[m11, m12], [m21, m22]]` acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform2 {
    m11: Rational,
    m12: Rational,
    m21: Rational,
    m22: Rational,
}

impl Transform2 {
    pub fn new(m11: Rational, m12: Rational, m21: Rational, m22: Rational) -> Result<Self> {
        let t = Transform2 { m11, m12, m21, m22 };
        if t.det().is_zero() {
            return Err(Error::SingularTransform);
        }
        Ok(t)
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Result<Self> {
        let r = rational::int;
        Transform2::new(r(m[0][0]), r(m[0][1]), r(m[1][0]), r(m[1][1]))
    }

    pub fn identity() -> Self {
        Transform2::from_ints([[1, 0], [0, 1]]).unwrap()
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.m11, &self.m12, &self.m21, &self.m22]
    }

    pub fn det(&self) -> Rational {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    /// `M * P`. Never the origin since `M` is invertible.
    pub fn apply(&self, p: &CoeffPoint) -> CoeffPoint {
        let a = &self.m11 * &p.a + &self.m12 * &p.b;
        let b = &self.m21 * &p.a + &self.m22 * &p.b;
        CoeffPoint { a, b }
    }

    /// The induced Euclidean map `x -> (M^t)^{-1} x`, which carries `L_P`
    /// onto `L_{MP}`.
    pub fn dual_map(&self, x: &EuclidPoint) -> EuclidPoint {
        // (M^t)^{-1} = (1/det) [[m22, -m21], [-m12, m11]]
        let det = self.det();
        let nx = (&self.m22 * &x.x - &self.m21 * &x.y) / &det;
        let ny = (&self.m11 * &x.y - &self.m12 * &x.x) / &det;
        EuclidPoint::new(nx, ny)
    }
}

pub fn apply_transform(m: &Transform2, s: &[CoeffPoint]) -> Vec<CoeffPoint> {
    s.iter().map(|p| m.apply(p)).collect()
}

//! Convex hull of a coefficient point set (monotone chain, exact).

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::geometry::CoeffPoint;
use crate::vec2::V2;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hull {
    Point(CoeffPoint),
    /// Endpoints of a degenerate hull, lexicographically ordered.
    Segment(CoeffPoint, CoeffPoint),
    /// Vertices in clockwise order; collinear boundary points omitted.
    Polygon(Vec<CoeffPoint>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

pub fn convex_hull(points: &[CoeffPoint]) -> Result<Hull> {
    let mut pts: Vec<&CoeffPoint> = points.iter().collect();
    pts.sort();
    pts.dedup();
    match pts.len() {
        0 => return Err(Error::EmptyInput),
        1 => return Ok(Hull::Point(pts[0].clone())),
        _ => {}
    }
    let turn = |o: &CoeffPoint, a: &CoeffPoint, b: &CoeffPoint| {
        let o = V2::from(o);
        (&V2::from(a) - &o).cross(&(&V2::from(b) - &o))
    };
    let mut lower: Vec<&CoeffPoint> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && !turn(lower[lower.len() - 2], lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&CoeffPoint> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && !turn(upper[upper.len() - 2], upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    let mut ccw = lower;
    ccw.extend(upper);
    if ccw.len() < 3 {
        return Ok(Hull::Segment(pts[0].clone(), pts[pts.len() - 1].clone()));
    }
    Ok(Hull::Polygon(ccw.into_iter().rev().cloned().collect()))
}

impl Hull {
    pub fn vertices(&self) -> Vec<CoeffPoint> {
        match self {
            Hull::Point(p) => alloc::vec![p.clone()],
            Hull::Segment(a, b) => alloc::vec![a.clone(), b.clone()],
            Hull::Polygon(v) => v.clone(),
        }
    }

    /// Position of the coefficient-plane point `(x, y)`, which need not be a
    /// member of `P` (the origin is the usual query). For degenerate hulls
    /// every covered point is `Boundary`.
    pub fn locate(&self, q: (&crate::Rational, &crate::Rational)) -> Location {
        let q = V2::new(q.0.clone(), q.1.clone());
        match self {
            Hull::Point(p) => {
                if V2::from(p) == q {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            Hull::Segment(a, b) => {
                if on_segment(&V2::from(a), &V2::from(b), &q) {
                    Location::Boundary
                } else {
                    Location::Outside
                }
            }
            Hull::Polygon(v) => {
                let mut boundary = false;
                for i in 0..v.len() {
                    let a = V2::from(&v[i]);
                    let b = V2::from(&v[(i + 1) % v.len()]);
                    let c = (&b - &a).cross(&(&q - &a));
                    // clockwise: interior is on the right
                    if c.is_positive() {
                        return Location::Outside;
                    }
                    if c.is_zero() {
                        boundary = true;
                    }
                }
                if boundary {
                    Location::Boundary
                } else {
                    Location::Interior
                }
            }
        }
    }

    /// Whether `p` lies on the hull boundary, vertex or not.
    pub fn on_boundary(&self, p: &CoeffPoint) -> bool {
        self.locate((p.a(), p.b())) == Location::Boundary
    }
}

pub(crate) fn on_segment(a: &V2, b: &V2, q: &V2) -> bool {
    let ab = b - a;
    let aq = q - a;
    if !ab.cross(&aq).is_zero() {
        return false;
    }
    let t = ab.dot(&aq);
    !t.is_negative() && t <= ab.norm_sq()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn cp(a: i64, b: i64) -> CoeffPoint {
        CoeffPoint::from_ints(a, b).unwrap()
    }

    #[test]
    fn square() {
        let h = convex_hull(&[cp(1, 1), cp(1, 2), cp(2, 1), cp(2, 2)]).unwrap();
        assert_eq!(h, Hull::Polygon(alloc::vec![cp(1, 2), cp(2, 2), cp(2, 1), cp(1, 1)]));
    }

    #[test]
    fn collinear_points_degenerate_to_segment() {
        let h = convex_hull(&[cp(2, 2), cp(1, 1), cp(3, 3)]).unwrap();
        assert_eq!(h, Hull::Segment(cp(1, 1), cp(3, 3)));
    }

    #[test]
    fn single_point() {
        assert_eq!(convex_hull(&[cp(1, 1)]).unwrap(), Hull::Point(cp(1, 1)));
        assert_eq!(convex_hull(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn collinear_boundary_points_are_excluded_but_located() {
        let pts = [cp(1, 1), cp(2, 1), cp(3, 1), cp(3, 3), cp(1, 3)];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertices().len(), 4);
        assert!(h.on_boundary(&cp(2, 1)));
        assert!(!h.on_boundary(&cp(2, 2)));
        assert_eq!(h.locate((&int(2), &int(2))), Location::Interior);
        assert_eq!(h.locate((&int(0), &int(0))), Location::Outside);
    }
}

//! Sides of the cell containing the Euclidean origin, read off the convex hull
//! of the point set.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::geometry::{orientation, CoeffPoint, Orientation};
use crate::hull::{convex_hull, Hull, Location};
use crate::point_set::PointSet;
use crate::rational::Rational;
use crate::vec2::V2;
use crate::Result;

/// Shape of the hull `C` of `S` relative to the coefficient-plane origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HullCase {
    Singleton,
    CollinearWithOrigin,
    SegmentOffOrigin,
    OriginInterior,
    OriginOutside,
    OriginOnBoundary,
}

/// `sides` lists the lines bounding the origin's cell in clockwise order. For
/// an unbounded cell the first and last entries carry the unbounded sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OriginRegion {
    pub sides: Vec<CoeffPoint>,
    pub bounded: bool,
    pub case: HullCase,
}

pub fn origin_region(s: &PointSet) -> Result<OriginRegion> {
    let hull = convex_hull(s.points())?;
    let zero = Rational::from_integer(0.into());
    let region = |sides, bounded, case| OriginRegion { sides, bounded, case };
    Ok(match hull {
        Hull::Point(p) => region(vec![p], false, HullCase::Singleton),
        Hull::Segment(a, b) => match orientation(&a, &b) {
            Orientation::On => {
                let through_origin = V2::from(&a).dot(&V2::from(&b)).is_negative();
                if through_origin {
                    region(vec![a, b], false, HullCase::CollinearWithOrigin)
                } else {
                    let far = if a.norm_sq() >= b.norm_sq() { a } else { b };
                    region(vec![far], false, HullCase::CollinearWithOrigin)
                }
            }
            Orientation::Right => region(vec![a, b], false, HullCase::SegmentOffOrigin),
            Orientation::Left => region(vec![b, a], false, HullCase::SegmentOffOrigin),
        },
        Hull::Polygon(cw) => match hull_location(&cw, &zero) {
            Location::Interior => region(cw, true, HullCase::OriginInterior),
            Location::Boundary => {
                let n = cw.len();
                let o = V2::new(zero.clone(), zero);
                let edge = (0..n)
                    .find(|&i| {
                        let a = V2::from(&cw[i]);
                        let b = V2::from(&cw[(i + 1) % n]);
                        crate::hull::on_segment(&a, &b, &o)
                    })
                    .expect("origin lies on some hull edge");
                let mut sides = cw;
                sides.rotate_left((edge + 1) % n);
                region(sides, false, HullCase::OriginOnBoundary)
            }
            Location::Outside => region(outer_path(&cw), false, HullCase::OriginOutside),
        },
    })
}

fn hull_location(cw: &[CoeffPoint], zero: &Rational) -> Location {
    Hull::Polygon(cw.to_vec()).locate((zero, zero))
}

/// Hull vertices from the tangent point on `r1` clockwise to the tangent point
/// on `r2`, where every point of the hull is right of (or on) `r1` and left of
/// (or on) `r2`. When a tangent ray runs along a hull edge, the vertex farther
/// from the origin is the one on the outer path.
fn outer_path(cw: &[CoeffPoint]) -> Vec<CoeffPoint> {
    let n = cw.len();
    let tangent = |keep: Orientation| -> usize {
        (0..n)
            .filter(|&i| cw.iter().all(|q| matches!(orientation(&cw[i], q), o if o == keep || o == Orientation::On)))
            .max_by(|&i, &j| cw[i].norm_sq().cmp(&cw[j].norm_sq()))
            .expect("origin outside the hull has two tangent rays")
    };
    let first = tangent(Orientation::Right);
    let last = tangent(Orientation::Left);
    let mut path = Vec::new();
    let mut i = first;
    loop {
        path.push(cw[i].clone());
        if i == last {
            break;
        }
        i = (i + 1) % n;
    }
    path
}

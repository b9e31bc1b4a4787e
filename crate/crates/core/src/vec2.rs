use core::cmp::Ordering;
use core::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::geometry::{CoeffPoint, EuclidPoint};
use crate::Rational;

/// Plain 2-vector used inside predicates, for either plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct V2 {
    pub x: Rational,
    pub y: Rational,
}

impl V2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        V2 { x, y }
    }

    pub fn zero() -> Self {
        V2::new(Rational::zero(), Rational::zero())
    }

    pub fn cross(&self, o: &V2) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &V2) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> V2 {
        V2::new(&self.x * k, &self.y * k)
    }

    /// Counterclockwise angular order of direction vectors, starting at the
    /// positive x axis. Exact: half-plane split, then cross product.
    pub fn angle_cmp(&self, o: &V2) -> Ordering {
        let half = |v: &V2| -> u8 {
            if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
                0
            } else {
                1
            }
        };
        half(self).cmp(&half(o)).then_with(|| {
            let c = self.cross(o);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    }

    pub fn into_euclid(self) -> EuclidPoint {
        EuclidPoint::new(self.x, self.y)
    }
}

impl From<&CoeffPoint> for V2 {
    fn from(p: &CoeffPoint) -> Self {
        V2::new(p.a().clone(), p.b().clone())
    }
}

impl From<&EuclidPoint> for V2 {
    fn from(p: &EuclidPoint) -> Self {
        V2::new(p.x.clone(), p.y.clone())
    }
}

impl Sub for &V2 {
    type Output = V2;
    fn sub(self, o: &V2) -> V2 {
        V2::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Add for &V2 {
    type Output = V2;
    fn add(self, o: &V2) -> V2 {
        V2::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Neg for V2 {
    type Output = V2;
    fn neg(self) -> V2 {
        V2::new(-self.x, -self.y)
    }
}

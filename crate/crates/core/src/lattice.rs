//! Point sets in the coefficient plane: rectangular lattices, lattice points
//! of convex polygons, and the named counterexample families.

use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::geometry::{CoeffPoint, EuclidPoint};
use crate::hull::on_segment;
use crate::point_set::PointSet;
use crate::rational::{self, int, Rational};
use crate::vec2::V2;
use crate::{Error, Result};

/// `{(a + k*dx, b + j*dy) : 0 <= k <= n, 0 <= j <= m}` minus the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    pub a: Rational,
    pub b: Rational,
    pub dx: Rational,
    pub dy: Rational,
    pub n: u32,
    pub m: u32,
}

impl LatticeSpec {
    pub fn new(a: Rational, b: Rational, dx: Rational, dy: Rational, n: u32, m: u32) -> Result<Self> {
        let spec = LatticeSpec { a, b, dx, dy, n, m };
        spec.validate()?;
        Ok(spec)
    }

    pub fn from_ints(a: i64, b: i64, dx: i64, dy: i64, n: u32, m: u32) -> Result<Self> {
        LatticeSpec::new(int(a), int(b), int(dx), int(dy), n, m)
    }

    /// The square grid `[-n, n]^2` of integer points.
    pub fn grid(n: u32) -> Result<Self> {
        let r = i64::from(n);
        LatticeSpec::from_ints(-r, -r, 1, 1, 2 * n, 2 * n)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.dx.is_positive() || !self.dy.is_positive() {
            return Err(Error::InvalidLattice("spacings must be positive"));
        }
        for (k, j) in [(0, 0), (0, self.m), (self.n, 0), (self.n, self.m)] {
            let (x, y) = self.coords(k, j);
            if x.is_zero() && y.is_zero() {
                return Err(Error::InvalidLattice("a corner lies at the origin"));
            }
        }
        Ok(())
    }

    fn coords(&self, k: u32, j: u32) -> (Rational, Rational) {
        (&self.a + &self.dx * int(i64::from(k)), &self.b + &self.dy * int(i64::from(j)))
    }

    fn point(&self, k: u32, j: u32) -> Option<CoeffPoint> {
        let (x, y) = self.coords(k, j);
        CoeffPoint::new(x, y).ok()
    }

    pub fn label(&self) -> alloc::string::String {
        format!("lattice a={} b={} dx={} dy={} N={} M={}", self.a, self.b, self.dx, self.dy, self.n, self.m)
    }
}

pub fn generate(spec: &LatticeSpec) -> PointSet {
    let pts = (0..=spec.n).flat_map(|k| (0..=spec.m).filter_map(move |j| spec.point(k, j)));
    PointSet::new(spec.label(), pts)
}

pub fn grid(n: u32) -> PointSet {
    let spec = LatticeSpec::grid(n).expect("grid spec is always valid");
    generate(&spec).with_label(format!("grid {n}"))
}

/// Boundary points (extreme `k` or `j`) and the up-to-four corners.
pub fn boundary_and_corners(spec: &LatticeSpec) -> (PointSet, PointSet) {
    let boundary = (0..=spec.n).flat_map(|k| {
        (0..=spec.m)
            .filter(move |&j| k == 0 || k == spec.n || j == 0 || j == spec.m)
            .filter_map(move |j| spec.point(k, j))
    });
    let corners =
        [(0, 0), (0, spec.m), (spec.n, 0), (spec.n, spec.m)].into_iter().filter_map(|(k, j)| spec.point(k, j));
    (PointSet::new("boundary", boundary), PointSet::new("corners", corners))
}

/// A 3-by-3 array with unequal spacing whose arrangement has a pentagon.
pub fn pentagon_counterexample() -> PointSet {
    let coords = [-2, 2, 3];
    let pts = coords.iter().flat_map(|&a| coords.iter().map(move |&b| CoeffPoint::from_ints(a, b).unwrap()));
    PointSet::new("pentagon counterexample", pts)
}

/// `F_k` with `F_1 = F_2 = 1`.
pub fn fibonacci(k: u32) -> u64 {
    let (mut prev, mut cur) = (0u64, 1u64);
    for _ in 1..k {
        let next = prev + cur;
        prev = cur;
        cur = next;
    }
    if k == 0 {
        0
    } else {
        cur
    }
}

/// `(-3, -1)`, `(-2, -1)`, `(-3 + F_{2n+1}, -1 + F_{2n})`.
pub fn fibonacci_triangle_vertices(n: u32) -> Result<[EuclidPoint; 3]> {
    if n == 0 || n > 45 {
        return Err(Error::InvalidLattice("fibonacci triangle index must be in 1..=45"));
    }
    let far_x = fibonacci(2 * n + 1) as i64 - 3;
    let far_y = fibonacci(2 * n) as i64 - 1;
    Ok([EuclidPoint::from_ints(-3, -1), EuclidPoint::from_ints(-2, -1), EuclidPoint::from_ints(far_x, far_y)])
}

pub fn fibonacci_triangle(n: u32) -> Result<PointSet> {
    let v = fibonacci_triangle_vertices(n)?;
    Ok(lattice_in_polygon(&v)?.with_label(format!("fibonacci triangle {n}")))
}

/// Integer points of the closed convex polygon with the given vertices, minus
/// the origin. Either orientation is accepted; collinear input is treated as
/// the segment between its extreme points.
pub fn lattice_in_polygon(vertices: &[EuclidPoint]) -> Result<PointSet> {
    if vertices.is_empty() {
        return Err(Error::EmptyInput);
    }
    let vs: Vec<V2> = vertices.iter().map(V2::from).collect();
    let area2: Rational =
        (0..vs.len()).map(|i| vs[i].cross(&vs[(i + 1) % vs.len()])).fold(Rational::zero(), |acc, c| acc + c);
    let collinear = vs.iter().all(|v| vs.iter().all(|w| (v - &vs[0]).cross(&(w - &vs[0])).is_zero()));

    let inside: alloc::boxed::Box<dyn Fn(&V2) -> bool> = if collinear {
        let lo = vs.iter().min().unwrap().clone();
        let hi = vs.iter().max().unwrap().clone();
        alloc::boxed::Box::new(move |q: &V2| on_segment(&lo, &hi, q))
    } else {
        if area2.is_zero() {
            return Err(Error::NonConvexPolygon);
        }
        let sign = area2.signum();
        let n = vs.len();
        let edges: Vec<(V2, V2)> = (0..n)
            .filter_map(|i| {
                let a = vs[i].clone();
                let d = &vs[(i + 1) % n] - &a;
                (!d.is_zero()).then_some((a, d))
            })
            .collect();
        // Every edge line must support the polygon.
        for (a, d) in &edges {
            if vs.iter().any(|v| (d.cross(&(v - a)) * &sign).is_negative()) {
                return Err(Error::NonConvexPolygon);
            }
        }
        alloc::boxed::Box::new(move |q: &V2| edges.iter().all(|(a, d)| !(d.cross(&(q - a)) * &sign).is_negative()))
    };

    let to_i64 = |r: num_bigint::BigInt| r.to_i64().expect("polygon coordinates out of range");
    let xmin = to_i64(vs.iter().map(|v| rational::ceil(&v.x)).min().unwrap());
    let xmax = to_i64(vs.iter().map(|v| rational::floor(&v.x)).max().unwrap());
    let ymin = to_i64(vs.iter().map(|v| rational::ceil(&v.y)).min().unwrap());
    let ymax = to_i64(vs.iter().map(|v| rational::floor(&v.y)).max().unwrap());
    let mut pts = Vec::new();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            if (x, y) == (0, 0) {
                continue;
            }
            if inside(&V2::new(int(x), int(y))) {
                pts.push(CoeffPoint::from_ints(x, y).unwrap());
            }
        }
    }
    Ok(PointSet::new("lattice in polygon", pts))
}

/// `#{(a, b) in [-n, n]^2 \ {0} : gcd(|a|, |b|) = 1}`, with `gcd(k, 0) = |k|`.
pub fn coprime_count(n: u32) -> u64 {
    let r = i64::from(n);
    let mut count = 0;
    for a in -r..=r {
        for b in -r..=r {
            if (a, b) != (0, 0) && a.gcd(&b) == 1 {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cp(a: i64, b: i64) -> CoeffPoint {
        CoeffPoint::from_ints(a, b).unwrap()
    }

    fn set(pts: &[(i64, i64)]) -> Vec<CoeffPoint> {
        let mut v: Vec<CoeffPoint> = pts.iter().map(|&(a, b)| cp(a, b)).collect();
        v.sort();
        v
    }

    #[test]
    fn generate_examples() {
        let s = generate(&LatticeSpec::from_ints(1, 1, 1, 1, 1, 1).unwrap());
        assert_eq!(s.points(), set(&[(1, 1), (1, 2), (2, 1), (2, 2)]).as_slice());
        assert_eq!(generate(&LatticeSpec::from_ints(-4, -4, 1, 1, 8, 8).unwrap()).len(), 80);
        let s = generate(&LatticeSpec::from_ints(-1, 0, 1, 1, 2, 0).unwrap());
        assert_eq!(s.points(), set(&[(-1, 0), (1, 0)]).as_slice());
    }

    #[test]
    fn invalid_specs() {
        assert!(LatticeSpec::from_ints(1, 1, 0, 1, 1, 1).is_err());
        assert!(LatticeSpec::from_ints(1, 1, 1, -1, 1, 1).is_err());
        assert!(LatticeSpec::from_ints(0, 0, 1, 1, 2, 2).is_err());
        assert!(LatticeSpec::from_ints(-2, -2, 1, 1, 2, 2).is_err());
    }

    #[test]
    fn boundary_examples() {
        let (b, c) = boundary_and_corners(&LatticeSpec::from_ints(1, 1, 1, 1, 2, 2).unwrap());
        assert_eq!(b.len(), 8);
        assert_eq!(c.points(), set(&[(1, 1), (1, 3), (3, 1), (3, 3)]).as_slice());

        let (b, c) = boundary_and_corners(&LatticeSpec::from_ints(1, 1, 1, 1, 0, 0).unwrap());
        assert_eq!(b.points(), &[cp(1, 1)]);
        assert_eq!(c.points(), &[cp(1, 1)]);

        let (b, c) = boundary_and_corners(&LatticeSpec::from_ints(-4, -4, 1, 1, 8, 8).unwrap());
        assert_eq!(b.len(), 32);
        assert_eq!(c.points(), set(&[(-4, -4), (-4, 4), (4, -4), (4, 4)]).as_slice());
    }

    #[test]
    fn pentagon_set() {
        let s = pentagon_counterexample();
        assert_eq!(s.len(), 9);
        assert!(s.contains(&cp(-2, 3)));
        let expected = set(&[(-2, -2), (-2, 2), (-2, 3), (2, -2), (2, 2), (2, 3), (3, -2), (3, 2), (3, 3)]);
        assert_eq!(s.points(), expected.as_slice());
    }

    #[test]
    fn fibonacci_numbers() {
        let f: Vec<u64> = (1..=9).map(fibonacci).collect();
        assert_eq!(f, vec![1, 1, 2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn fibonacci_triangle_examples() {
        let s = fibonacci_triangle(2).unwrap();
        assert_eq!(s.points(), set(&[(-3, -1), (-2, -1), (-1, 0), (2, 2)]).as_slice());
        assert_eq!(fibonacci_triangle_vertices(3).unwrap()[2], EuclidPoint::from_ints(10, 7));
        assert_eq!(fibonacci_triangle_vertices(1).unwrap()[2], EuclidPoint::from_ints(-1, 0));
        assert_eq!(fibonacci_triangle_vertices(4).unwrap()[2], EuclidPoint::from_ints(31, 20));
        assert!(fibonacci_triangle(0).is_err());
    }

    #[test]
    fn polygon_examples() {
        let square = [(0, 0), (1, 0), (1, 1), (0, 1)].map(|(x, y)| EuclidPoint::from_ints(x, y));
        let s = lattice_in_polygon(&square).unwrap();
        assert_eq!(s.points(), set(&[(0, 1), (1, 0), (1, 1)]).as_slice());

        let seg = [EuclidPoint::from_ints(0, 0), EuclidPoint::from_ints(2, 2)];
        assert_eq!(lattice_in_polygon(&seg).unwrap().points(), set(&[(1, 1), (2, 2)]).as_slice());

        let single = [EuclidPoint::from_ints(3, -1)];
        assert_eq!(lattice_in_polygon(&single).unwrap().points(), &[cp(3, -1)]);

        // clockwise input is fine
        let mut rev = square;
        rev.reverse();
        assert_eq!(lattice_in_polygon(&rev).unwrap().len(), 3);
    }

    #[test]
    fn non_convex_polygons_are_rejected() {
        let dart = [(0, 0), (4, 0), (1, 1), (0, 4)].map(|(x, y)| EuclidPoint::from_ints(x, y));
        assert_eq!(lattice_in_polygon(&dart), Err(Error::NonConvexPolygon));
        // pentagram: every turn has the same sign but it winds twice
        let star = [(0, 10), (6, -8), (-10, 3), (10, 3), (-6, -8)].map(|(x, y)| EuclidPoint::from_ints(x, y));
        assert_eq!(lattice_in_polygon(&star), Err(Error::NonConvexPolygon));
    }

    #[test]
    fn coprime_counts() {
        assert_eq!(coprime_count(1), 8);
        assert_eq!(coprime_count(2), 16);
        assert_eq!(coprime_count(3), 32);
        assert_eq!(coprime_count(4), 48);
        for n in 1..10 {
            assert_eq!(coprime_count(n) % 4, 0);
        }
    }
}

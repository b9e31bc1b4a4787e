//! Seeded generators for randomized checks.

use linepat_core::geometry::{orientation, Orientation};
use linepat_core::rational::{int, ratio};
use linepat_core::{origin_region, CoeffPoint, HullCase, LatticeSpec, PointSet, Rational, Transform2};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 1729;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over fractions `p/q` in `[-max, max]` with `1 <= q <= max_den`.
pub fn rational(rng: &mut SeededRng, max: i64, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    ratio(rng.gen_range(-max * den..=max * den), den)
}

pub fn positive_rational(rng: &mut SeededRng, max_num: i64, max_den: i64) -> Rational {
    ratio(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

pub fn coeff_point(rng: &mut SeededRng, max: i64, max_den: i64) -> CoeffPoint {
    loop {
        if let Ok(p) = CoeffPoint::new(rational(rng, max, max_den), rational(rng, max, max_den)) {
            return p;
        }
    }
}

/// Between `min_len` and `max_len` distinct points with coordinates in
/// `[-3, 3]`, denominators up to 3.
pub fn point_set(rng: &mut SeededRng, min_len: usize, max_len: usize) -> PointSet {
    let target = rng.gen_range(min_len..=max_len);
    let mut pts = std::collections::BTreeSet::new();
    while pts.len() < target {
        pts.insert(coeff_point(rng, 3, 3));
    }
    PointSet::new("random", pts)
}

/// A valid lattice with `N, M <= 6`. Roughly a fifth are degenerate in one
/// direction and a fifth are placed so the lattice covers the origin.
pub fn lattice_spec(rng: &mut SeededRng) -> LatticeSpec {
    loop {
        let dx = positive_rational(rng, 5, 4);
        let dy = positive_rational(rng, 5, 4);
        let mut n = rng.gen_range(0..=6u32);
        let mut m = rng.gen_range(0..=6u32);
        let (a, b) = match rng.gen_range(0..5) {
            0 => {
                if rng.gen_bool(0.5) {
                    n = 0;
                } else {
                    m = 0;
                }
                (rational(rng, 4, 5), rational(rng, 4, 5))
            }
            1 => {
                let k = rng.gen_range(0..=n);
                let j = rng.gen_range(0..=m);
                (-(&dx * int(k.into())), -(&dy * int(j.into())))
            }
            _ => (rational(rng, 4, 5), rational(rng, 4, 5)),
        };
        if let Ok(spec) = LatticeSpec::new(a, b, dx, dy, n, m) {
            return spec;
        }
    }
}

pub fn transform(rng: &mut SeededRng) -> Transform2 {
    loop {
        let e: Vec<Rational> = (0..4).map(|_| rational(rng, 3, 4)).collect();
        if let Ok(m) = Transform2::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
            return m;
        }
    }
}

fn small_direction(rng: &mut SeededRng) -> CoeffPoint {
    loop {
        if let Ok(p) = CoeffPoint::from_ints(rng.gen_range(-3..=3), rng.gen_range(-3..=3)) {
            return p;
        }
    }
}

fn scaled(p: &CoeffPoint, t: &Rational) -> CoeffPoint {
    CoeffPoint::new(p.a() * t, p.b() * t).expect("nonzero multiple")
}

/// A random set whose hull falls in `case` relative to the origin, with up
/// to `max_len` points.
pub fn hull_case_set(rng: &mut SeededRng, case: HullCase, max_len: usize) -> PointSet {
    let max_len = max_len.max(4);
    loop {
        let mut pts = Vec::new();
        match case {
            HullCase::Singleton => pts.push(coeff_point(rng, 3, 3)),
            HullCase::CollinearWithOrigin => {
                let u = small_direction(rng);
                let count = rng.gen_range(2..=max_len);
                for _ in 0..count {
                    let t = rational(rng, 3, 2);
                    if t != int(0) {
                        pts.push(scaled(&u, &t));
                    }
                }
            }
            HullCase::SegmentOffOrigin => {
                let p = coeff_point(rng, 3, 3);
                let q = coeff_point(rng, 3, 3);
                pts.push(p.clone());
                pts.push(q.clone());
                for _ in 0..rng.gen_range(0..=max_len - 2) {
                    let t = ratio(rng.gen_range(1..=4), 5);
                    let a = p.a() + &t * (q.a() - p.a());
                    let b = p.b() + &t * (q.b() - p.b());
                    if let Ok(z) = CoeffPoint::new(a, b) {
                        pts.push(z);
                    }
                }
            }
            HullCase::OriginOnBoundary => {
                let u = small_direction(rng);
                pts.push(scaled(&u, &positive_rational(rng, 3, 2)));
                pts.push(scaled(&u, &-positive_rational(rng, 3, 2)));
                for _ in 0..rng.gen_range(1..=max_len - 2) {
                    let z = coeff_point(rng, 3, 3);
                    if orientation(&u, &z) == Orientation::Left {
                        pts.push(z);
                    }
                }
            }
            HullCase::OriginInterior | HullCase::OriginOutside => {
                let count = rng.gen_range(3..=max_len);
                pts.extend((0..count).map(|_| coeff_point(rng, 3, 3)));
            }
        }
        pts.shuffle(rng);
        let set = PointSet::new(format!("{case:?}"), pts);
        if !set.is_empty() && origin_region(&set).map(|r| r.case) == Ok(case) {
            return set;
        }
    }
}

pub const HULL_CASES: [HullCase; 6] = [
    HullCase::Singleton,
    HullCase::CollinearWithOrigin,
    HullCase::SegmentOffOrigin,
    HullCase::OriginInterior,
    HullCase::OriginOutside,
    HullCase::OriginOnBoundary,
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sets() {
        let a: Vec<_> = (0..5)
            .map({
                let mut r = rng(7);
                move |_| point_set(&mut r, 1, 7)
            })
            .collect();
        let b: Vec<_> = (0..5)
            .map({
                let mut r = rng(7);
                move |_| point_set(&mut r, 1, 7)
            })
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn every_hull_case_is_reachable() {
        let mut r = rng(3);
        for case in HULL_CASES {
            let s = hull_case_set(&mut r, case, 7);
            assert_eq!(origin_region(&s).unwrap().case, case);
        }
    }

    #[test]
    fn lattices_cover_the_degenerate_and_origin_cases() {
        let mut r = rng(11);
        let specs: Vec<_> = (0..50).map(|_| lattice_spec(&mut r)).collect();
        assert!(specs.iter().any(|s| s.n == 0 || s.m == 0));
        assert!(specs.iter().any(|s| { linepat_core::lattice::generate(s).len() as u32 == (s.n + 1) * (s.m + 1) - 1 }));
    }
}

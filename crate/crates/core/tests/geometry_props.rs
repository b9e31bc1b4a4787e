use linepat_core::geometry::{dist_product, intersect, orientation, CoeffPoint, EuclidPoint, Transform2};
use linepat_core::rational::{int, ratio};
use linepat_core::Rational;
use proptest::prelude::*;

fn rational(max: i64) -> impl Strategy<Value = Rational> {
    (1i64..=7).prop_flat_map(move |den| (-max * den..=max * den).prop_map(move |num| ratio(num, den)))
}

fn coeff_point() -> impl Strategy<Value = CoeffPoint> {
    (rational(3), rational(3)).prop_filter_map("origin", |(a, b)| CoeffPoint::new(a, b).ok())
}

fn transform() -> impl Strategy<Value = Transform2> {
    (rational(3), rational(3), rational(3), rational(3))
        .prop_filter_map("singular", |(a, b, c, d)| Transform2::new(a, b, c, d).ok())
}

proptest! {
    #[test]
    fn orientation_is_antisymmetric(p in coeff_point(), q in coeff_point()) {
        prop_assert_eq!(orientation(&p, &q), orientation(&q, &p).reverse());
    }

    #[test]
    fn intersection_is_dual_to_the_segment(
        p in coeff_point(),
        q in coeff_point(),
        t in (0i64..=12, 1i64..=12).prop_map(|(n, d)| ratio(n.min(d), d)),
    ) {
        let Ok(Some(x)) = intersect(&p, &q) else { return Ok(()) };
        let a = p.a() + &t * (q.a() - p.a());
        let b = p.b() + &t * (q.b() - p.b());
        // the segment can pass through O only when p, q are collinear with it
        let z = CoeffPoint::new(a, b).unwrap();
        prop_assert_eq!(z.a() * &x.x + z.b() * &x.y, int(1));
        prop_assert!(z.contains(&x));
    }

    #[test]
    fn distance_product_is_one(p in coeff_point()) {
        prop_assert_eq!(dist_product(&p), int(1));
    }

    #[test]
    fn transform_carries_lines_to_lines(
        m in transform(),
        s in prop::collection::vec(coeff_point(), 1..=6),
        ts in prop::collection::vec(rational(5), 3),
    ) {
        for p in &s {
            let mp = m.apply(p);
            let foot = p.foot();
            let dir = p.line_direction();
            for t in &ts {
                let x = EuclidPoint::new(&foot.x + t * &dir.x, &foot.y + t * &dir.y);
                prop_assert!(p.contains(&x));
                prop_assert!(mp.contains(&m.dual_map(&x)));
            }
        }
    }
}

use circlepack_core::geometry::{place_tangent_circle, tangency_residual};
use circlepack_core::soddy::{
    circumscribing_radius, inner_tangent_radius, inner_tangent_radius_with_line,
    third_inscribed_radii, TangentTriple,
};
use circlepack_core::{hexpack, lune, sector, square};
use circlepack_core::{Branch, PlacedCircle, Point, Tangency};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// `(a, b, R)` with `a + b <= R`.
fn valid_pair() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.01f64..0.95, 0.02f64..0.98, 0.1f64..100.0).prop_map(|(b, t, r)| {
        let a = t * (1.0 - b);
        (a * r, b * r, r)
    })
}

proptest! {
    #[test]
    fn circumscribing_round_trip((a, b, r) in valid_pair()) {
        let c = third_inscribed_radii(a, b, r).unwrap();
        let back = circumscribing_radius(&TangentTriple::new(a, b, c.c_min).unwrap()).unwrap();
        prop_assert!(rel(back, r) <= 1e-10, "{back} vs {r}");
        let back = circumscribing_radius(&TangentTriple::new(a, b, c.c_max).unwrap()).unwrap();
        prop_assert!(rel(back, r) <= 1e-10, "{back} vs {r}");
    }

    #[test]
    fn inscribed_pair_is_symmetric((a, b, r) in valid_pair()) {
        prop_assert_eq!(third_inscribed_radii(a, b, r), third_inscribed_radii(b, a, r));
    }

    #[test]
    fn inscribed_pair_ordering((a, b, r) in valid_pair()) {
        let p = third_inscribed_radii(a, b, r).unwrap();
        prop_assert!(p.c_min < a.min(b));
        prop_assert!(p.c_min <= p.c_max);
        prop_assert!(p.c_max <= (r - a.max(b)) * (1.0 + 1e-12));
    }

    #[test]
    fn scale_equivariance((a, b, r) in valid_pair(), k in 0usize..3) {
        let s = [1e-3, 1.0, 1e3][k];
        let p = third_inscribed_radii(a, b, r).unwrap();
        let q = third_inscribed_radii(s * a, s * b, s * r).unwrap();
        prop_assert!(rel(q.c_min, s * p.c_min) <= 1e-12);
        prop_assert!(rel(q.c_max, s * p.c_max) <= 1e-12);
        let t = TangentTriple::new(a, b, p.c_min).unwrap();
        let ts = TangentTriple::new(s * a, s * b, s * p.c_min).unwrap();
        prop_assert!(rel(circumscribing_radius(&ts).unwrap(), s * circumscribing_radius(&t).unwrap()) <= 1e-12);
        prop_assert!(rel(inner_tangent_radius(&ts).unwrap(), s * inner_tangent_radius(&t).unwrap()) <= 1e-12);
        prop_assert!(rel(inner_tangent_radius_with_line(s * a, s * b).unwrap(), s * inner_tangent_radius_with_line(a, b).unwrap()) <= 1e-12);
    }

    #[test]
    fn both_roots_touch_all_three_circles((a, b, r) in valid_pair()) {
        let p = third_inscribed_radii(a, b, r).unwrap();
        let outer = PlacedCircle::new(Point::ORIGIN, r).unwrap();
        let cb = PlacedCircle::new(Point::new(-(r - b), 0.0), b).unwrap();
        let ca = place_tangent_circle(&cb, &outer, a, Tangency::External, Tangency::Internal, Branch::Upper).unwrap();
        for c in [p.c_min, p.c_max] {
            let best = [Branch::Upper, Branch::Lower]
                .iter()
                .map(|&br| {
                    let n = place_tangent_circle(&cb, &outer, c, Tangency::External, Tangency::Internal, br).unwrap();
                    tangency_residual(&n, &ca, Tangency::External)
                })
                .fold(f64::INFINITY, f64::min);
            prop_assert!(best <= 1e-9 * r, "residual {best}");
        }
    }

    #[test]
    fn inner_circle_is_smallest(a in 1e-3f64..1e3, b in 1e-3f64..1e3, c in 1e-3f64..1e3) {
        let r = inner_tangent_radius(&TangentTriple::new(a, b, c).unwrap()).unwrap();
        prop_assert!(r < a.min(b).min(c));
        prop_assert!(r > 0.0);
    }

    #[test]
    fn square_recurrence_matches_soddy(t in 1e-6f64..=0.25, x in 0.1f64..100.0) {
        let r = t * x;
        let step = square::recurrence_step(r, x).unwrap();
        prop_assert!(rel(step, square::soddy_step(r, x).unwrap()) <= 1e-12);
        prop_assert!(step > 0.0 && step < r);
    }

    #[test]
    fn minor_step_specialises_to_square((t, x) in (1e-6f64..=0.25, 0.1f64..100.0)) {
        let r = t * x;
        let m = lune::minor_step(r, 0.5 * x, x).unwrap();
        prop_assert!(rel(m, square::recurrence_step(r, x).unwrap()) <= 1e-12);
    }

    #[test]
    fn lune_fixed_point(t in 0.001f64..0.999, r in 0.1f64..100.0) {
        let b = t * r;
        let m = lune::max_major_radius(b, r).unwrap();
        prop_assert!(rel(lune::major_step(m, b, r).unwrap(), m) <= 1e-12);
    }

    #[test]
    fn sector_scale_equivariance(deg in 1.0f64..179.0, s in 0.01f64..100.0) {
        let base = sector::SectorSpec { radius: 1.0, central_angle: deg.to_radians(), count: 8 };
        let scaled = sector::SectorSpec { radius: s, ..base };
        let p = sector::pack(&base).unwrap();
        let q = sector::pack(&scaled).unwrap();
        for (u, v) in p.circles.iter().zip(&q.circles) {
            prop_assert!(rel(v.radius, s * u.radius) <= 1e-12);
            prop_assert_eq!(u.angle, v.angle);
        }
    }

    #[test]
    fn residual_is_symmetric(x1 in -10.0f64..10.0, y1 in -10.0f64..10.0, r1 in 0.1f64..5.0,
                             x2 in -10.0f64..10.0, y2 in -10.0f64..10.0, r2 in 0.1f64..5.0) {
        let c1 = PlacedCircle::new(Point::new(x1, y1), r1).unwrap();
        let c2 = PlacedCircle::new(Point::new(x2, y2), r2).unwrap();
        for k in [Tangency::External, Tangency::Internal] {
            prop_assert_eq!(tangency_residual(&c1, &c2, k), tangency_residual(&c2, &c1, k));
        }
    }

    #[test]
    fn hex_lengths_scale_linearly(n in 2u64..1000, r in 0.01f64..100.0) {
        let unit = hexpack::metrics(&hexpack::HexPackSpec { n, r: 1.0 }).unwrap();
        let m = hexpack::metrics(&hexpack::HexPackSpec { n, r }).unwrap();
        prop_assert!(rel(m.side, r * unit.side) <= 1e-15);
        prop_assert!(rel(m.circumradius, r * unit.circumradius) <= 1e-15);
        prop_assert!(rel(m.string_length, r * unit.string_length) <= 1e-15);
        prop_assert_eq!(m.density.to_bits(), unit.density.to_bits());
    }
}

#[test]
fn hex_count_identities() {
    for n in 2..=10_000u64 {
        let count = hexpack::circle_count(n).unwrap();
        assert_eq!(hexpack::void_count(n).unwrap(), 2 * count + 4);
        if n >= 3 {
            assert_eq!(count - hexpack::circle_count(n - 1).unwrap(), 6 * (n - 1));
        }
    }
}

#[test]
fn hex_density_independent_of_radius() {
    for n in [2, 3, 17, 500] {
        let d: Vec<u64> = [0.1, 1.0, 7.0]
            .iter()
            .map(|&r| {
                hexpack::metrics(&hexpack::HexPackSpec { n, r })
                    .unwrap()
                    .density
                    .to_bits()
            })
            .collect();
        assert!(d.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn placement_is_deterministic() {
    let e = PlacedCircle::new(Point::new(0.5, 0.0), 0.5).unwrap();
    let b = PlacedCircle::new(Point::new(1.0, 0.0), 1.0).unwrap();
    let first = place_tangent_circle(
        &e,
        &b,
        0.1,
        Tangency::External,
        Tangency::Internal,
        Branch::Upper,
    )
    .unwrap();
    for _ in 0..10 {
        let again = place_tangent_circle(
            &e,
            &b,
            0.1,
            Tangency::External,
            Tangency::Internal,
            Branch::Upper,
        )
        .unwrap();
        assert_eq!(first.center.x.to_bits(), again.center.x.to_bits());
        assert_eq!(first.center.y.to_bits(), again.center.y.to_bits());
    }
}

//! Closed forms and chains checked against the bisection solver, which only
//! knows distances.

use circlepack_core::geometry::place_tangent_circle;
use circlepack_core::soddy::third_inscribed_radii;
use circlepack_core::verify::bisect_tangent_radius;
use circlepack_core::{lens, sector, square};
use circlepack_core::{Branch, Line, PlacedCircle, Point, Tangency};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pair(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    let r: f64 = rng.gen_range(0.1..10.0);
    let b = rng.gen_range(0.02..0.95) * r;
    let a = rng.gen_range(0.02..=1.0) * (r - b);
    (a, b, r)
}

fn crescent(a: f64, b: f64, r: f64) -> [(PlacedCircle, Tangency); 3] {
    let outer = PlacedCircle::new(Point::ORIGIN, r).unwrap();
    let cb = PlacedCircle::new(Point::new(-(r - b), 0.0), b).unwrap();
    let ca = place_tangent_circle(
        &cb,
        &outer,
        a,
        Tangency::External,
        Tangency::Internal,
        Branch::Upper,
    )
    .unwrap();
    [
        (cb, Tangency::External),
        (outer, Tangency::Internal),
        (ca, Tangency::External),
    ]
}

#[test]
fn oracle_reproduces_smaller_root() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let (a, b, r) = random_pair(&mut rng);
        let want = third_inscribed_radii(a, b, r).unwrap().c_min;
        let got = bisect_tangent_radius(
            &crescent(a, b, r),
            None,
            Some((1e-12 * r, a.min(b))),
            Branch::Upper,
        )
        .unwrap_or_else(|e| panic!("{a} {b} {r}: {e}"));
        assert!(
            (got - want).abs() <= 1e-9 * want,
            "{a} {b} {r}: {got} vs {want}"
        );
    }
}

#[test]
fn oracle_sees_square_chain() {
    let x = 1.0;
    let seq = square::pack(&square::SquareSpec {
        side: x,
        mode: square::SquareMode::A,
        count: 12,
    })
    .unwrap();
    let e = square::e_circle(x);
    let b = square::b_circle(x);
    for w in seq.circles.windows(2) {
        let fixed = [
            (e, Tangency::External),
            (b, Tangency::Internal),
            (w[0].placed(), Tangency::External),
        ];
        let r = bisect_tangent_radius(
            &fixed,
            None,
            Some((1e-6 * w[0].radius, w[0].radius)),
            Branch::Upper,
        )
        .unwrap();
        assert!((r - w[1].radius).abs() <= 1e-9 * w[1].radius);
    }
}

#[test]
fn oracle_sees_sector_chain() {
    for deg in [30.0f64, 90.0, 150.0] {
        let spec = sector::SectorSpec {
            radius: 1.0,
            central_angle: deg.to_radians(),
            count: 10,
        };
        let seq = sector::pack(&spec).unwrap();
        let arc = PlacedCircle::new(Point::ORIGIN, 1.0).unwrap();
        let ob = Line::new(Point::ORIGIN, Point::new(1.0, 0.0)).unwrap();
        for w in seq.circles.windows(2) {
            let fixed = [
                (arc, Tangency::Internal),
                (w[0].placed(), Tangency::External),
            ];
            let r = bisect_tangent_radius(
                &fixed,
                Some(&ob),
                Some((1e-4 * w[0].radius, w[0].radius)),
                Branch::Right,
            )
            .unwrap();
            assert!(
                (r - w[1].radius).abs() <= 1e-9 * w[1].radius,
                "{deg}: {r} vs {}",
                w[1].radius
            );
        }
    }
}

#[test]
fn oracle_sees_lens_chain() {
    let seq = lens::pack(&lens::LensSpec {
        radius: 1.0,
        count: 10,
    })
    .unwrap();
    let [left, right] = lens::big_circles(1.0);
    let axis = Line::new(Point::ORIGIN, Point::new(1.0, 0.0)).unwrap();
    let fixed = [(left, Tangency::External), (right, Tangency::External)];
    let r1 = bisect_tangent_radius(&fixed, Some(&axis), None, Branch::Right).unwrap();
    assert!((r1 - seq.circles[0].radius).abs() <= 1e-10);
    for w in seq.circles.windows(2) {
        let fixed = [
            (left, Tangency::External),
            (right, Tangency::External),
            (w[0].placed(), Tangency::External),
        ];
        // the next circle sits above the previous one
        let r = bisect_tangent_radius(
            &fixed,
            None,
            Some((1e-4 * w[0].radius, w[0].radius)),
            Branch::Lower,
        )
        .unwrap();
        assert!((r - w[1].radius).abs() <= 1e-9 * w[1].radius);
    }
}

#[test]
fn both_roots_close_the_crescent() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let (a, b, r) = random_pair(&mut rng);
        let [(cb, _), (outer, _), (ca, _)] = crescent(a, b, r);
        let p = third_inscribed_radii(a, b, r).unwrap();
        for c in [p.c_min, p.c_max] {
            let best = [Branch::Upper, Branch::Lower]
                .into_iter()
                .map(|br| {
                    let n = place_tangent_circle(
                        &cb,
                        &outer,
                        c,
                        Tangency::External,
                        Tangency::Internal,
                        br,
                    )
                    .unwrap();
                    circlepack_core::geometry::tangency_residual(&n, &ca, Tangency::External)
                })
                .fold(f64::INFINITY, f64::min);
            assert!(best <= 1e-9 * r, "{a} {b} {r}: {best}");
        }
    }
}

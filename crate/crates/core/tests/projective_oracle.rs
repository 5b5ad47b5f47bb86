use octoplane::projective::{
    chart_backward, chart_forward, chart_round_trip, equivalent, line_to_sphere, random_triple, separating_functional,
    sphere_to_line, Functional, LinePoint,
};
use octoplane::sampling::{random_gaussian, random_sphere_point, rng};

const TOL: f64 = 1e-9;

#[test]
fn chart_round_trips_every_level_and_axis() {
    for level in 0..=3 {
        for axis in 0..3 {
            let f = Functional::coordinate(axis);
            let mut r = rng(100 + level as u64 * 3 + axis as u64);
            let errs = chart_round_trip(&f, level, 1000, &mut r).unwrap();
            assert!(errs.max() < TOL, "level {level} axis {axis}: {errs:?}");
        }
    }
}

#[test]
fn separating_functional_on_random_pairs() {
    for level in 0..=3 {
        let mut r = rng(7 + level as u64);
        for _ in 0..250 {
            let p = random_triple(level, &mut r).unwrap();
            let q = random_triple(level, &mut r).unwrap();
            let f = separating_functional(&p, &q, TOL).unwrap();
            let (u, v) = chart_forward(&f, &p, TOL).unwrap();
            assert!(equivalent(&chart_backward(&f, &u, &v).unwrap(), &p, 1e-8));
            assert!(chart_forward(&f, &q, TOL).is_ok());
        }
    }
}

#[test]
fn sphere_map_is_the_classical_hopf_map_on_complex_pairs() {
    let mut r = rng(3);
    for _ in 0..500 {
        let x = random_gaussian(1, &mut r);
        let y = random_gaussian(1, &mut r);
        let n = (x.norm_sq() + y.norm_sq()).sqrt();
        let (z1, z2) = (
            (x.coords()[0] / n, x.coords()[1] / n),
            (y.coords()[0] / n, y.coords()[1] / n),
        );
        // 2 z1 conj(z2) and |z1|^2 - |z2|^2
        let expected = [
            2.0 * (z1.0 * z2.0 + z1.1 * z2.1),
            2.0 * (z1.1 * z2.0 - z1.0 * z2.1),
            z1.0 * z1.0 + z1.1 * z1.1 - z2.0 * z2.0 - z2.1 * z2.1,
        ];
        let p = LinePoint::new(x.scale(&(1.0 / n)), y.scale(&(1.0 / n)), TOL).unwrap();
        let got = line_to_sphere(&p);
        for (g, e) in got.iter().zip(expected) {
            assert!((g - e).abs() < 1e-12);
        }
    }
}

#[test]
fn sphere_round_trip_all_division_levels() {
    let mut r = rng(9);
    for level in 0..=3u32 {
        for _ in 0..200 {
            let s = random_sphere_point((1 << level) + 1, &mut r);
            let back = line_to_sphere(&sphere_to_line(&s, TOL).unwrap());
            for (a, b) in s.iter().zip(&back) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }
}

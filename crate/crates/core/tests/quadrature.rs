use borosmoll::quartic::{self, integrand, quartic_integral_numeric};
use borosmoll::{Int, Rational};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

// Composite Simpson on [0, 1000]; the tail beyond is below 1e-11 for m >= 1.
fn naive_truncated(m: u32, a: f64) -> f64 {
    let (lo, hi, n) = (0.0f64, 1000.0f64, 400_000usize);
    let h = (hi - lo) / n as f64;
    let mut s = integrand(lo, a, m) + integrand(hi, a, m);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * integrand(lo + k as f64 * h, a, m);
    }
    s * h / 3.0
}

#[test]
fn folded_form_matches_truncated_range() {
    for m in 1..=4 {
        for (n, d) in [(0, 1), (1, 2), (1, 1), (2, 1)] {
            let a = q(n, d);
            let folded: f64 = quartic_integral_numeric(m, &a, 1e-10).unwrap();
            let naive = naive_truncated(m, n as f64 / d as f64);
            assert!(
                (folded - naive).abs() < 1e-6,
                "m={m} a={a}: {folded} vs {naive}"
            );
        }
    }
}

#[test]
fn decreasing_in_m() {
    for (n, d) in [(0, 1), (1, 2), (1, 1), (2, 1)] {
        let a = q(n, d);
        let values: Vec<f64> = (0..8)
            .map(|m| quartic_integral_numeric(m, &a, 1e-10).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[1] < w[0]), "a={a}: {values:?}");
    }
}

#[test]
fn grid_within_tolerance() {
    for m in 0..=6 {
        for (n, d) in [(-1, 2), (0, 1), (1, 2), (1, 1), (2, 1)] {
            let r = quartic::check_integral_identity(m, &q(n, d), 1e-8).unwrap();
            assert!(r.pass, "{r:?}");
            assert_eq!(r.pass, r.rel_error <= r.tol);
        }
    }
}

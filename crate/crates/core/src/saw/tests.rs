use proptest::prelude::*;

use super::*;

const QUARTER: f64 = 0.25;

fn unit_thresholds(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64).collect()
}

fn saw(bars: &[(f64, f64)], lag: f64) -> SawFunction {
    SawFunction::new(bars, lag, (0.0, 10.0)).unwrap()
}

/// Bars with both endpoints on the integer thresholds 0..=9.
fn unit_bars(max: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((0u8..9, 1u8..10), 0..max).prop_map(|v| {
        v.into_iter()
            .map(|(b, l)| (b as f64, (b + l).min(9) as f64))
            .filter(|(b, d)| b < d)
            .collect()
    })
}

/// Trapezoid-rule integral on a fine grid, as an independent check of the
/// closed forms.
fn quadrature(f: impl Fn(f64) -> f64, lo: f64, hi: f64, steps: usize) -> f64 {
    let h = (hi - lo) / steps as f64;
    (0..steps)
        .map(|i| {
            let x = lo + h * i as f64;
            0.5 * (f(x) + f(x + h)) * h
        })
        .sum()
}

#[test]
fn default_lag_examples() {
    assert_eq!(default_lag(&unit_thresholds(10)).unwrap(), 0.25);
    assert_eq!(default_lag(&[0.0, 2.0, 4.0]).unwrap(), 0.5);
    let lag = default_lag(&[0.0, 0.1, 10.0]).unwrap();
    assert!((lag - 0.05).abs() < 1e-6);
    assert!(2.0 * lag < 0.1);
    assert!(default_lag(&[1.0]).is_err());
}

#[test]
fn generator_examples() {
    let g = Generator {
        birth: 1.0,
        death: 2.0,
        lag: QUARTER,
    };
    let got: Vec<f64> = [1.0, 1.25, 1.5, 1.75, 2.0]
        .iter()
        .map(|&t| g.eval(t))
        .collect();
    assert_eq!(got, vec![0.0, 1.0, 1.0, 1.0, 0.0]);
    assert_eq!(g.eval(0.5), 0.0);
    assert_eq!(g.eval(2.5), 0.0);
    let long = Generator {
        birth: 0.0,
        death: 4.0,
        lag: QUARTER,
    };
    assert_eq!(long.eval(0.125), 0.5);
    assert_eq!(long.eval(3.875), 0.5);
}

#[test]
fn short_bar_is_a_tent() {
    let g = Generator {
        birth: 0.0,
        death: 0.25,
        lag: QUARTER,
    };
    assert_eq!(g.eval(0.125), 0.5);
    assert_eq!(g.eval(0.0625), 0.25);
    let s = SawFunction::new(&[(0.0, 0.25)], QUARTER, (0.0, 1.0)).unwrap();
    assert_eq!(s.breakpoints(), vec![0.0, 0.125, 0.25]);
    assert!((integral(&s) - 0.25 * 0.5 * 0.5).abs() < 1e-12);
}

#[test]
fn construction_errors() {
    assert!(SawFunction::new(&[(1.0, 2.0)], 0.0, (0.0, 1.0)).is_err());
    assert!(SawFunction::new(&[(1.0, 2.0)], QUARTER, (1.0, 1.0)).is_err());
    assert!(SawFunction::new(&[(2.0, 2.0)], QUARTER, (0.0, 3.0)).is_err());
}

#[test]
fn empty_diagram_is_zero() {
    let s = saw(&[], QUARTER);
    assert_eq!(s.evaluate(3.3), 0.0);
    assert_eq!(s.signature(100).unwrap().samples, vec![0.0; 100]);
    assert_eq!(integral(&s), 0.0);
}

#[test]
fn stacked_bars() {
    for n in [1, 3, 7] {
        let s = saw(&vec![(1.0, 2.0); n], QUARTER);
        assert_eq!(s.evaluate(1.5), n as f64);
    }
}

#[test]
fn signature_examples() {
    let s = SawFunction::new(&[(1.0, 2.0)], QUARTER, (1.0, 2.0)).unwrap();
    let sig = s.signature(5).unwrap();
    assert_eq!(sig.samples, vec![0.0, 1.0, 1.0, 1.0, 0.0]);
    assert_eq!(sig.sample_points, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
    let ends = s.signature(2).unwrap();
    assert_eq!(ends.sample_points, vec![1.0, 2.0]);
    assert!(s.signature(1).is_err());
}

#[test]
fn from_diagram_uses_threshold_domain_and_clamps() {
    let pd = PersistenceDiagram::from_pairs(0, &[(0.0, 0.1)], vec![0.0, 0.1, 10.0]).unwrap();
    let s = SawFunction::from_diagram(&pd, 1.0).unwrap();
    assert!(2.0 * s.lag() < 0.1);
    assert_eq!(s.domain(), (0.0, pd.cap()));
    let d = SawFunction::with_default_lag(&pd).unwrap();
    assert_eq!(d.lag(), s.lag());
}

#[test]
fn tension_examples() {
    let counts = BirthDeathCounts {
        births: vec![3, 0],
        deaths: vec![2, 0],
    };
    assert_eq!(counts.tension(0).unwrap(), 5);
    assert_eq!(counts.tension(1).unwrap(), 0);
    assert!(counts.tension(2).is_err());
    assert_eq!(counts.tensions(), vec![5, 0]);
}

#[test]
fn counts_from_diagram() {
    let mut pd = PersistenceDiagram::from_pairs(
        0,
        &[(0.0, 2.0), (1.0, 2.0), (1.0, 3.0)],
        unit_thresholds(3),
    )
    .unwrap();
    pd.pairs[2].essential = true;
    let counts = BirthDeathCounts::from_diagram(&pd).unwrap();
    assert_eq!(counts.births, vec![1, 2, 0]);
    assert_eq!(counts.deaths, vec![0, 0, 2]);
    let off = PersistenceDiagram::from_pairs(0, &[(0.5, 2.0)], unit_thresholds(3)).unwrap();
    assert!(BirthDeathCounts::from_diagram(&off).is_err());
}

#[test]
fn distance_examples() {
    let s = saw(&[(1.0, 2.0)], QUARTER);
    let zero = saw(&[], QUARTER);
    assert_eq!(l1_distance(&s, &s), 0.0);
    assert_eq!(l1_distance(&s, &zero), 0.75);
    assert_eq!(l2_sobolev_distance(&s, &zero), 2.75);
    assert_eq!(sup_distance(&s, &zero), 1.0);
    assert_eq!(
        wasserstein(&[(1.0, 2.0)], &[], WassersteinOrder::One).unwrap(),
        0.5
    );
}

#[test]
fn sup_norm_grows_while_bottleneck_does_not() {
    let zero = saw(&[], QUARTER);
    for n in [1, 5, 25] {
        let bars = vec![(1.0, 2.0); n];
        assert_eq!(sup_distance(&saw(&bars, QUARTER), &zero), n as f64);
        assert_eq!(
            wasserstein(&bars, &[], WassersteinOrder::Infinity).unwrap(),
            0.5
        );
    }
}

#[test]
fn slopes_at_ramp_ends() {
    let g = Generator {
        birth: 1.0,
        death: 3.0,
        lag: QUARTER,
    };
    assert_eq!(g.slopes_at(1.0), (0.0, 4.0));
    assert_eq!(g.slopes_at(1.25), (4.0, 0.0));
    assert_eq!(g.slopes_at(2.75), (0.0, -4.0));
    assert_eq!(g.slopes_at(3.0), (-4.0, 0.0));
}

proptest! {
    #[test]
    fn closed_forms_match_quadrature(a in unit_bars(6), b in unit_bars(6)) {
        let (sa, sb) = (saw(&a, QUARTER), saw(&b, QUARTER));
        // grid aligned with the quarter-integer breakpoints so the rule is exact
        let steps = 4800;
        let l1 = quadrature(|t| (sa.evaluate(t) - sb.evaluate(t)).abs(), -1.0, 11.0, steps);
        // |a − b| can kink at a root between grid points, costing O(h²) per root
        prop_assert!((l1_distance(&sa, &sb) - l1).abs() < 1e-4);
        let area = quadrature(|t| sa.evaluate(t), -1.0, 11.0, steps);
        prop_assert!((integral(&sa) - area).abs() < 1e-9);
    }

    #[test]
    fn mass_identity(bars in unit_bars(20), lag in 0.01f64..0.49) {
        let s = saw(&bars, lag);
        let expected: f64 = bars.iter().map(|(b, d)| d - b).sum::<f64>() - lag * bars.len() as f64;
        prop_assert!((integral(&s) - expected).abs() < 1e-9);
    }

    #[test]
    fn stability_in_l1(a in unit_bars(12), b in unit_bars(12)) {
        let d1 = l1_distance(&saw(&a, QUARTER), &saw(&b, QUARTER));
        let w1 = wasserstein(&a, &b, WassersteinOrder::One).unwrap();
        prop_assert!(d1 <= 2.0 * w1 + 1e-9, "d1 {d1} > 2 W1 {w1}");
    }

    #[test]
    fn betti_and_zigzag_recovery(bars in unit_bars(20)) {
        let thresholds = unit_thresholds(10);
        let pd = PersistenceDiagram::from_pairs(0, &bars, thresholds.clone()).unwrap();
        let s = SawFunction::from_diagram(&pd, QUARTER).unwrap();
        let counts = BirthDeathCounts::from_diagram(&pd).unwrap();
        for (i, &t) in thresholds.iter().enumerate() {
            let betti = pd.alive_at(t) as f64;
            for x in [t + 0.25, t + 0.5, t + 0.75] {
                prop_assert_eq!(s.evaluate(x), betti);
            }
            prop_assert_eq!(betti - s.evaluate(t), counts.births[i] as f64);
            let before = if i == 0 { 0.0 } else { pd.alive_at(thresholds[i - 1]) as f64 };
            prop_assert_eq!(before - s.evaluate(t), counts.deaths[i] as f64);

            let (left, right) = s.slopes_at(t);
            prop_assert_eq!(right * QUARTER, counts.births[i] as f64);
            prop_assert_eq!(-left * QUARTER, counts.deaths[i] as f64);
            prop_assert_eq!((right - left) * QUARTER, counts.tension(i).unwrap() as f64);
        }
    }

    #[test]
    fn saw_is_nonnegative(bars in unit_bars(10), t in -1.0f64..11.0) {
        prop_assert!(saw(&bars, QUARTER).evaluate(t) >= 0.0);
    }
}

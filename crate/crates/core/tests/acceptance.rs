//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Exact criteria are asserted with zero tolerance; the oracle's fitted
//! limits carry the stated numeric tolerances. Run with `--nocapture` to see
//! the per-criterion lines.

mod common;

use antinef::config::{ExceptionalConfig, QDivisor};
use antinef::multiplicity::{mixed_form, mixed_polynomial, volume};
use antinef::oracle::{
    filtration_ideal, limit_fit, mixed_poly_oracle, tau_sequence, toric_config, truncate,
    val_ideal, MonomialValuation, OracleFiltrationSpec,
};
use antinef::rational::{frac, int, Q};
use antinef::theorems::{gamma, minkowski_report, rees_check, EqualityCase};
use antinef::zariski::{brute_force_decompose, decompose};
use common::{random_config, random_effective_divisor, random_nonzero_divisor, rng};
use num::{BigInt, Signed, ToPrimitive, Zero};
use rand::Rng;

fn nu(a: u64, b: u64) -> MonomialValuation {
    MonomialValuation::new(a, b).unwrap()
}

fn chain_config() -> ExceptionalConfig {
    ExceptionalConfig::single_branch(vec![vec![-2, 1], vec![1, -1]]).unwrap()
}

fn a2_config() -> ExceptionalConfig {
    ExceptionalConfig::single_branch(vec![vec![-2, 1], vec![1, -2]]).unwrap()
}

/// Criterion 1: Zariski fixtures, exact.
#[test]
fn criterion_1_zariski_fixtures() {
    let a2 = a2_config();
    let z = decompose(&a2, &QDivisor::curve(0, 2)).unwrap();
    assert_eq!(z.delta(), &QDivisor::new(vec![int(1), frac(1, 2)]));
    assert_eq!(volume(&a2, &QDivisor::curve(0, 2)).unwrap(), frac(3, 2));

    let chain = chain_config();
    let z = decompose(&chain, &QDivisor::curve(0, 2)).unwrap();
    assert_eq!(z.delta(), &QDivisor::from_integers(&[1, 1]));
    assert_eq!(volume(&chain, &QDivisor::curve(0, 2)).unwrap(), int(1));

    let z = decompose(&chain, &QDivisor::curve(1, 2)).unwrap();
    assert_eq!(z.delta(), &QDivisor::new(vec![frac(1, 2), int(1)]));
    assert_eq!(volume(&chain, &QDivisor::curve(1, 2)).unwrap(), frac(1, 2));

    println!("acceptance 1 (zariski fixtures, exact): PASS");
}

/// Criterion 2: oracle lattice counts; 1/(ab) within 2% at window 200, exact
/// spot colengths.
#[test]
fn criterion_2_oracle_agreement() {
    for (a, b) in [(1u64, 1u64), (1, 2), (2, 3), (3, 5)] {
        let v = nu(a, b);
        let lengths: Vec<u64> = (1..=200)
            .map(|m| val_ideal(&v, m).colength().unwrap())
            .collect();
        let fit = limit_fit(&lengths).unwrap();
        let expected = 1.0 / (a as f64 * b as f64);
        let rel = (fit.estimate - expected).abs() / expected;
        assert!(
            rel <= 0.02,
            "nu({a},{b}): estimate {} vs {expected} (rel {rel})",
            fit.estimate
        );
    }
    assert_eq!(val_ideal(&nu(1, 1), 10).colength().unwrap(), 55);
    assert_eq!(val_ideal(&nu(1, 2), 10).colength().unwrap(), 30);
    println!("acceptance 2 (oracle lattice counting, 2% at M=200): PASS");
}

/// Criterion 3: bridge identity between the toric configuration and the
/// lattice-counting oracle.
#[test]
fn criterion_3_bridge_identity() {
    let built = toric_config(&[nu(1, 1), nu(1, 2)]).unwrap();
    let s = built.config.curve_count();
    let d1 = QDivisor::curve(built.prime_index[0], s);
    let d2 = QDivisor::curve(built.prime_index[1], s);
    let form = mixed_form(&built.config, &[d1.clone(), d2.clone()]).unwrap();
    let (e0, e1, e2) = form.pair_entries();
    assert_eq!((e0, e1, e2), (int(1), frac(1, 2), frac(1, 2)));
    let g = mixed_polynomial(&built.config, &[d1, d2]).unwrap();
    assert_eq!(g.eval_integers(&[1, 1]), frac(5, 4));

    let specs = [
        OracleFiltrationSpec::single(nu(1, 1)),
        OracleFiltrationSpec::single(nu(1, 2)),
    ];
    let grid = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
    let est = mixed_poly_oracle(&specs, &grid, 150).unwrap();
    for ((exponents, fitted), expected) in est.coefficients.iter().zip([0.5, 0.5, 0.25]) {
        let rel = (fitted - expected).abs() / expected;
        assert!(
            rel <= 0.03,
            "coefficient {exponents:?}: {fitted} vs {expected} (rel {rel})"
        );
    }
    let g11 = est
        .grid
        .iter()
        .find(|g| g.point == [1, 1])
        .unwrap()
        .g_estimate;
    assert!(
        (g11 - 1.25).abs() / 1.25 <= 0.03,
        "G(1,1) estimate {g11} vs 1.25"
    );
    println!("acceptance 3 (bridge identity, exact form + 3% oracle at M=150): PASS");
}

/// Criterion 4: Rees theorem fixture plus the oracle's exact ideal equality.
#[test]
fn criterion_4_rees_theorem() {
    let chain = chain_config();
    let d1 = QDivisor::curve(0, 2);
    let d2 = QDivisor::from_integers(&[1, 1]);
    let report = rees_check(&chain, &d1, &d2, 50).unwrap();
    assert_eq!(report.vol1, int(1));
    assert_eq!(report.vol2, int(1));
    assert!(report.volumes_equal && report.delta_equal);
    assert_eq!(report.certificates.len(), 50);
    assert!(report.certificates.iter().all(|c| c.equal));

    // Monomial confirmation: {nu1 >= n} = {nu1 >= n} cap {nu2 >= n} exactly.
    let v11 = nu(1, 1);
    let v12 = nu(1, 2);
    for n in 1..=50 {
        let lhs = val_ideal(&v11, n);
        let rhs = lhs.intersect(&val_ideal(&v12, n));
        assert_eq!(lhs, rhs, "ideal equality fails at n = {n}");
    }

    // Integral-representative witness: the filtration of any toric divisor
    // equals the filtration over all curves at levels ceil(n Delta).
    let built = toric_config(&[nu(1, 1), nu(1, 2)]).unwrap();
    let s = built.config.curve_count();
    let ray_valuations: Vec<MonomialValuation> =
        built.rays.iter().map(|&(a, b)| nu(a, b)).collect();
    for coeffs in [[1u64, 0u64], [0, 1], [1, 1], [2, 1]] {
        let mut d = QDivisor::zero(s);
        let mut terms = Vec::new();
        for (k, &c) in coeffs.iter().enumerate() {
            if c > 0 {
                d = d.add(&QDivisor::curve(built.prime_index[k], s).scale(&int(c as i64)));
                terms.push((ray_valuations[built.prime_index[k]], c));
            }
        }
        let spec = OracleFiltrationSpec::new(terms).unwrap();
        let z = decompose(&built.config, &d).unwrap();
        for n in 1..=50u64 {
            let ceil = z.ceil_scale(n);
            let mut from_delta = antinef::oracle::MonomialIdeal::unit();
            for (i, v) in ray_valuations.iter().enumerate() {
                let level = ceil.coefficient(i).to_integer().to_u64().unwrap();
                if level > 0 {
                    from_delta = from_delta.intersect(&val_ideal(v, level));
                }
            }
            assert_eq!(
                filtration_ideal(&spec, n),
                from_delta,
                "ceil(n Delta) witness fails for {coeffs:?} at n = {n}"
            );
        }
    }
    println!("acceptance 4 (rees theorem + oracle ideal equality, exact): PASS");
}

/// Criterion 5: Minkowski suite on 500 random configurations.
#[test]
fn criterion_5_minkowski_suite() {
    let mut r = rng(0x4d494e4b);
    let mut equality_cases = 0usize;
    for _ in 0..500 {
        let config = random_config(&mut r, 6, true);
        let s = config.curve_count();
        let d1 = random_nonzero_divisor(&mut r, s);
        // A quarter of the corpus is proportional by construction so the
        // equality classifier is exercised.
        let d2 = if r.gen_bool(0.25) {
            d1.scale(&frac(r.gen_range(1..=4), r.gen_range(1..=3)))
        } else {
            random_nonzero_divisor(&mut r, s)
        };
        let report = minkowski_report(&config, &d1, &d2).unwrap();
        assert!(report.verdicts.all_hold());

        let delta1 = decompose(&config, &d1).unwrap().delta().clone();
        let delta2 = decompose(&config, &d2).unwrap().delta().clone();
        // Independent proportionality check: Delta_2 = c Delta_1 for some
        // positive rational c.
        let proportional = {
            let i = delta1
                .coefficients()
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero divisor has nonzero anti-nef part");
            let c = delta2.coefficient(i) / delta1.coefficient(i);
            !c.is_zero() && delta1.scale(&c) == delta2
        };
        match report.equality_case {
            EqualityCase::Strict => assert!(!proportional, "missed equality case"),
            EqualityCase::Equality { ref a, ref b } => {
                equality_cases += 1;
                assert!(proportional, "spurious equality case");
                let g = num::Integer::gcd(a, b);
                assert_eq!(g, BigInt::from(1), "({a},{b}) not coprime");
                assert_eq!(
                    delta1.scale(&Q::from_integer(a.clone())),
                    delta2.scale(&Q::from_integer(b.clone())),
                    "certificate a Delta1 = b Delta2 fails"
                );
            }
        }
    }
    assert!(equality_cases >= 50, "only {equality_cases} equality cases sampled");
    println!(
        "acceptance 5 (minkowski suite, 500 random configs, {equality_cases} equality certificates): PASS"
    );
}

/// Criterion 6: decomposition oracle equivalence and laws on 1000 instances.
#[test]
fn criterion_6_decomposition_oracle_equivalence() {
    let mut r = rng(0x5a415249);
    for _ in 0..1000 {
        let config = random_config(&mut r, 6, true);
        let s = config.curve_count();
        let d1 = random_effective_divisor(&mut r, s);

        let fast = decompose(&config, &d1).unwrap();
        let slow = brute_force_decompose(&config, &d1).unwrap();
        assert_eq!(fast, slow);

        // Monotonicity and rigidity on a dominating divisor.
        let d2 = d1.add(&random_effective_divisor(&mut r, s));
        let z2 = decompose(&config, &d2).unwrap();
        assert!(fast.delta().le(z2.delta()));
        let sq1 = config.pair(fast.delta(), fast.delta()).unwrap();
        let sq2 = config.pair(z2.delta(), z2.delta()).unwrap();
        assert!(sq2 <= sq1);
        assert_eq!(sq1 == sq2, fast.delta() == z2.delta());

        // Homogeneity.
        let c = frac(r.gen_range(1..=5), r.gen_range(1..=3));
        let scaled = decompose(&config, &d1.scale(&c)).unwrap();
        assert_eq!(scaled.delta(), &fast.delta().scale(&c));

        // Idempotence.
        let again = decompose(&config, fast.delta()).unwrap();
        assert_eq!(again.delta(), fast.delta());
        assert!(again.effective_part().is_zero());
    }
    println!("acceptance 6 (decompose == brute force on 1000 instances + laws, exact): PASS");
}

/// Criterion 7: tau subadditivity and gamma consistency on toric specs.
#[test]
fn criterion_7_tau_gamma_consistency() {
    struct Case {
        targets: Vec<MonomialValuation>,
        coefficients: Vec<u64>,
    }
    let cases = [
        Case { targets: vec![nu(1, 1), nu(1, 2)], coefficients: vec![1, 0] },
        Case { targets: vec![nu(1, 1), nu(1, 2)], coefficients: vec![0, 1] },
        Case { targets: vec![nu(1, 1), nu(1, 2)], coefficients: vec![1, 1] },
        Case { targets: vec![nu(1, 1), nu(1, 2)], coefficients: vec![2, 1] },
        Case { targets: vec![nu(2, 3)], coefficients: vec![1] },
        Case { targets: vec![nu(2, 3), nu(3, 5)], coefficients: vec![1, 2] },
    ];
    let m_max = 100u64;
    for case in &cases {
        let built = toric_config(&case.targets).unwrap();
        let s = built.config.curve_count();
        let mut d = QDivisor::zero(s);
        let mut terms = Vec::new();
        for (k, &c) in case.coefficients.iter().enumerate() {
            if c > 0 {
                d = d.add(&QDivisor::curve(built.prime_index[k], s).scale(&int(c as i64)));
                terms.push((case.targets[k], c));
            }
        }
        let spec = OracleFiltrationSpec::new(terms).unwrap();
        let gamma_values = gamma(&built.config, &d).unwrap().values;

        // tau against every interior curve of the fan.
        for (i, &(a, b)) in built.rays.iter().enumerate() {
            let taus = tau_sequence(&spec, &nu(a, b), m_max);
            // eqAR1: tau_{mn} <= n tau_m whenever mn <= 100.
            for m in 1..=m_max {
                for n in 1..=(m_max / m) {
                    assert!(
                        taus[(m * n) as usize - 1] <= n * taus[m as usize - 1],
                        "subadditivity fails at (m,n)=({m},{n})"
                    );
                }
            }
            // |tau_m / m - gamma_i| <= 1/m, i.e. |tau_m - m gamma_i| <= 1.
            for m in 1..=m_max {
                let diff = int(taus[m as usize - 1] as i64)
                    - int(m as i64) * gamma_values[i].clone();
                assert!(
                    diff.abs() <= int(1),
                    "gamma consistency fails: curve {i}, m = {m}, tau = {}, gamma = {}",
                    taus[m as usize - 1],
                    gamma_values[i]
                );
            }
        }
    }
    println!("acceptance 7 (tau subadditivity + gamma within 1/m, mn <= 100): PASS");
}

/// Criterion 8: truncation convergence for the (1,2) valuation.
#[test]
fn criterion_8_truncation_convergence() {
    let spec = OracleFiltrationSpec::single(nu(1, 2));
    let m_max = 150u64;
    let mut estimates = Vec::new();
    for a in [1u64, 2, 4, 8] {
        let mut trunc = truncate(&spec, a);
        let lengths = trunc.colengths(m_max).unwrap();
        let fit = limit_fit(&lengths).unwrap();
        estimates.push((a, fit.estimate));
    }
    let (_, at_one) = estimates[0];
    assert!(
        (at_one - 1.0).abs() <= 0.02,
        "a = 1 should give the maximal-ideal multiplicity 1, got {at_one}"
    );
    for &(a, est) in &estimates[1..] {
        assert!(
            (est - 0.5).abs() / 0.5 <= 0.02,
            "a = {a}: estimate {est} has not converged to 1/2"
        );
    }
    println!(
        "acceptance 8 (truncation multiplicities {:?} -> 1/2, a=1 gives 1, 2%): PASS",
        estimates.iter().map(|&(a, _)| a).collect::<Vec<_>>()
    );
}

/// Criterion 9: positivity on connected single-branch configurations.
#[test]
fn criterion_9_positivity() {
    let mut r = rng(0x504f5321);
    for _ in 0..300 {
        let config = random_config(&mut r, 6, false);
        let s = config.curve_count();
        let d1 = random_nonzero_divisor(&mut r, s);
        let d2 = random_nonzero_divisor(&mut r, s);
        assert!(volume(&config, &d1).unwrap().is_positive());
        let form = mixed_form(&config, &[d1, d2]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(form.entry(i, j).is_positive());
            }
        }
    }
    println!("acceptance 9 (positivity on connected single-branch configs, exact): PASS");
}

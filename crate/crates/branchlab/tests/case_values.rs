//! Tabulated values of individual cases: parameter sets, the map
//! `ϑ ↦ (π, τ)`, branching, generator scalars, transfer maps and Hilbert data.

use branchlab::branching::branch_case_params;
use branchlab::hilbert::{check_generator_degrees, graded_invariant_dim, v_sequence, HilbertFactor, HilbertModel};
use branchlab::rational::{frac, int};
use branchlab::verify::{independence_certificate, transfer_map, EvalContext};
use branchlab::{build_case, CaseId, CaseRecord, CaseTag, Error, Rational, WeightVector};

fn case(s: &str) -> CaseRecord {
    build_case(s.parse::<CaseId>().unwrap()).unwrap()
}

fn value(c: &CaseRecord, theta: &[i64], name: &str) -> Rational {
    EvalContext::new(c, theta).unwrap().eval_named(name).unwrap()
}

fn halves(v: &[i64]) -> WeightVector {
    WeightVector::halves(v)
}

fn ints(v: &[i64]) -> WeightVector {
    WeightVector::from_ints(v)
}

#[test]
fn small_catalog_contains_the_fixed_rows() {
    let cases = branchlab::all_cases(1);
    let vi = cases.iter().find(|c| c.id.tag == CaseTag::Vi).unwrap();
    assert_eq!((vi.names.g_tilde.as_str(), vi.names.g.as_str(), vi.names.k.as_str()), ("SO(16)", "Spin(9)", "Spin(8)"));
    let star = cases.iter().find(|c| c.id.tag == CaseTag::Star).unwrap();
    assert_eq!(star.names.k, "Spin(7)");
    let sizes: Vec<_> = branchlab::all_cases(3).iter().filter(|c| c.id.tag == CaseTag::I).map(|c| c.id.size).collect();
    assert_eq!(sizes, vec![Some(1), Some(2), Some(3)]);
}

#[test]
fn parameter_sets_in_small_boxes() {
    let params = |c: &str, b: i64| case(c).enumerate_disc(b).into_iter().map(|d| d.params).collect::<Vec<_>>();
    assert_eq!(params("i:2", 1), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    assert_eq!(params("vi", 2), vec![vec![0, 0], vec![1, 1], vec![2, 0], vec![2, 2]]);
    assert_eq!(params("x", 3), vec![vec![0], vec![1], vec![2], vec![3]]);
}

#[test]
fn pi_tau_of_selected_parameters() {
    let pt = |c: &CaseRecord, p: &[i64]| {
        let d = c.enumerate_disc(8).into_iter().find(|d| d.params == p).unwrap();
        c.pi_tau(&d).unwrap()
    };
    let i2 = case("i:2");
    let (pi, tau) = pt(&i2, &[2, 1]);
    assert_eq!(pi.highest_weight, ints(&[3, 0, 0]));
    assert_eq!(tau.highest_weight, ints(&[0, 0, 1]));

    let vi = case("vi");
    let (pi, tau) = pt(&vi, &[4, 2]);
    assert_eq!(pi.highest_weight, ints(&[4, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(tau.highest_weight, halves(&[2, 2, 2, 2]));

    let star = case("star");
    let (pi, tau) = pt(&star, &[1, 1, 2]);
    assert_eq!(pi.highest_weight, ints(&[1, 0, 0, 0, 1, 0, 0, 0]));
    assert_eq!(tau.highest_weight, halves(&[2, 2, 2]));
}

#[test]
fn branching_of_selected_pi() {
    let branch = |c: &str, pi: &[i64]| {
        let mut v: Vec<Vec<i64>> = branch_case_params(&case(c), pi).unwrap().into_iter().map(|d| d.params).collect();
        v.sort();
        v
    };
    assert_eq!(branch("i:2", &[3]), vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]);
    assert_eq!(branch("vi", &[4]), vec![vec![4, 0], vec![4, 2], vec![4, 4]]);
    assert_eq!(branch("star", &[1, 1]), vec![vec![1, 1, 0], vec![1, 1, 2]]);
    let vi = case("vi");
    let labels: Vec<WeightVector> = branch_case_params(&vi, &[4])
        .unwrap()
        .iter()
        .map(|d| vi.theta_irrep(&d.params).unwrap().highest_weight)
        .collect();
    assert!(labels.contains(&halves(&[4, 2, 2, 2])));
}

#[test]
fn hypersphere_harmonics_split_over_spin9() {
    let vi = case("vi");
    let binom = |n: i64, k: i64| -> num_bigint::BigInt {
        if k < 0 || n < k {
            return 0.into();
        }
        (0..k).fold(num_bigint::BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
    };
    for j in 0..=6 {
        let harmonic = binom(j + 15, 15) - binom(j + 13, 15);
        let total: num_bigint::BigInt = branch_case_params(&vi, &[j])
            .unwrap()
            .iter()
            .map(|d| vi.theta_irrep(&d.params).unwrap().dimension().unwrap())
            .sum();
        assert_eq!(total, harmonic, "j={j}");
    }
}

#[test]
fn generator_scalars() {
    assert_eq!(value(&case("vi"), &[2, 0], "C_Gt"), int(32));
    for j in 0..=6 {
        for k in (0..=j).filter(|k| (j - k) % 2 == 0) {
            let vi = case("vi");
            assert_eq!(value(&vi, &[j, k], "C_Gt"), int(j * j + 14 * j));
            assert_eq!(value(&vi, &[j, k], "C_K"), int(k * k + 6 * k));
        }
    }
    let star = case("star");
    assert_eq!(value(&star, &[1, 1, 2], "C_K"), int(12));
    assert_eq!(value(&star, &[1, 1, 2], "C_Gt"), int(14));
    assert_eq!(value(&star, &[1, 1, 2], "C_G"), int(15));
    for a in (0..=6).step_by(2) {
        assert_eq!(value(&star, &[3, 3, a], "C_K"), frac(3 * a * (a + 6), 4));
    }
    let ii = case("ii_odd:2");
    assert_eq!(value(&ii, &[0, 0, 0], "P_1"), int(26));
    let i2 = case("i:2");
    assert_eq!(value(&i2, &[1, 1], "C_Gt"), int(12));
    assert_eq!(value(&i2, &[1, 1], "C_G"), int(6));
    assert_eq!(value(&i2, &[1, 1], "C_K"), int(0));
}

#[test]
fn relations_hold_at_selected_points() {
    for (c, theta) in [("i:2", vec![1, 1]), ("star", vec![1, 1, 2]), ("ii_odd:2", vec![2, 1, 0])] {
        let c = case(c);
        let ctx = EvalContext::new(&c, &theta).unwrap();
        for r in &c.relations {
            assert_eq!(ctx.residual(r).unwrap(), int(0), "{} {}", c.id, r.label);
        }
    }
    let star = case("star");
    let v = |n: &str| value(&star, &[1, 1, 2], n);
    assert_eq!(int(3) * v("C_Gt"), int(6) * v("C_G") - int(4) * v("C_K"));
}

#[test]
fn transfer_images() {
    let i2 = case("i:2");
    let s = transfer_map(&i2, &[1]).unwrap();
    assert_eq!(WeightVector::new(s.apply(&[int(5)]).unwrap()), ints(&[3, 0, -2]));
    let s = transfer_map(&i2, &[0]).unwrap();
    assert_eq!(WeightVector::new(s.apply(&[int(2)]).unwrap()), ints(&[1, 0, -1]));

    let vi = case("vi");
    let s = transfer_map(&vi, &[2]).unwrap();
    assert_eq!(WeightVector::new(s.apply(&[int(11)]).unwrap()), halves(&[11, 7, 5, 3]));
    assert!(matches!(transfer_map(&vi, &[-1]), Err(Error::InvalidParams { .. })));

    let xi = case("xi");
    for k in 0..=8 {
        let s = transfer_map(&xi, &[]).unwrap();
        let image = WeightVector::new(s.apply(&[int(2 * k + 3)]).unwrap());
        assert_eq!(image, halves(&[2 * k + 5, 2 * k + 3, 2 * k + 1]), "k={k}");
    }
}

#[test]
fn independence_examples() {
    let i2 = case("i:2");
    let gens = vec![i2.symbol("C_Gt").unwrap().clone(), i2.symbol("E_K").unwrap().clone()];
    let cert = independence_certificate(&i2, &gens, 4, 2).unwrap();
    assert!(cert.independent);
    assert_eq!((cert.columns, cert.points), (6, 25));
    assert!(independence_certificate(&i2, &gens, 4, 0).unwrap().independent);

    let star = case("star");
    let gens: Vec<_> = ["C_Gt1", "C_Gt2", "C_K"].iter().map(|n| star.symbol(n).unwrap().clone()).collect();
    assert!(independence_certificate(&star, &gens, 5, 2).unwrap().independent);

    let x = case("x");
    let gens = vec![x.symbol("C_Gt").unwrap().clone()];
    assert!(matches!(independence_certificate(&x, &gens, 1, 2), Err(Error::InsufficientSample { .. })));
}

#[test]
fn dependent_generators_are_detected() {
    let vi = case("vi");
    let c = vi.symbol("C_Gt").unwrap().clone();
    let cert = independence_certificate(&vi, &[c.clone(), c], 8, 2).unwrap();
    assert!(!cert.independent);
}

#[test]
fn hilbert_counts() {
    assert_eq!(v_sequence(&[1, 2], 4), 3);
    assert_eq!(v_sequence(&[3, 5], 0), 1);
    assert_eq!(v_sequence(&[2, 2, 2], 4), 6);
    assert_eq!(graded_invariant_dim(&case("i:2"), 4).unwrap(), 3);
    // The pattern count alone; the U(1) center of the U(2n+1) cover adds a free degree-1 factor.
    let patterns = HilbertModel { factors: vec![HilbertFactor::Combin { n: 1 }] };
    assert_eq!(patterns.series(2)[2], 2);
    assert_eq!(graded_invariant_dim(&case("iv:1"), 2).unwrap(), 4);
    assert_eq!(graded_invariant_dim(&case("star"), 2).unwrap(), 3);
    assert!(check_generator_degrees(&case("i:2"), 12).unwrap());
    assert!(check_generator_degrees(&case("vi"), 12).unwrap());
}

#[test]
fn tabulated_rank_triples() {
    for n in 1..=4 {
        let n32 = n as u32;
        assert_eq!(case(&format!("iv:{n}")).rank_triple(), (n32, n32, 2 * n32));
    }
    assert_eq!(case("xi").rank_triple(), (1, 0, 1));
    assert_eq!(case("star").rank_triple(), (2, 1, 3));
}

#[test]
fn unknown_parameters_are_rejected() {
    let vi = case("vi");
    assert!(vi.theta_irrep(&[1, 0]).is_err());
    assert!(vi.lambda_rho(&[-2, 0]).is_err());
    assert!("xv".parse::<CaseId>().is_err());
}

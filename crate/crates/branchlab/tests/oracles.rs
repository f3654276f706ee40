//! Library results against independent brute-force constructions.

use std::collections::BTreeSet;

use branchlab::branching::{branch_so_step, branch_u_step};
use branchlab::rational::{frac, int};
use branchlab::reps::{casimir_eigenvalue, GroupDescriptor};
use branchlab::weights::{self, dominant_representative, positive_roots, rho, weyl_orbit_equal};
use branchlab::{IrrepLabel, Rational, WeightVector, WeylType};
use num_bigint::BigInt;
use proptest::prelude::*;

fn wv(v: &[i64]) -> WeightVector {
    WeightVector::from_ints(v)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Roots of a classical type by scanning `{−2,…,2}^dim` against the
/// defining description of the root set.
fn scanned_roots(t: &WeylType) -> Vec<Vec<i64>> {
    let dim = t.dim();
    let mut out = Vec::new();
    let mut v = vec![-2i64; dim];
    loop {
        let nz: Vec<i64> = v.iter().copied().filter(|&x| x != 0).collect();
        let ones = nz.iter().all(|x| x.abs() == 1);
        let short = nz.len() == 1 && ones;
        let long = nz.len() == 2 && ones;
        let double = nz.len() == 1 && nz[0].abs() == 2;
        let is_root = match t {
            WeylType::A(_) => nz.len() == 2 && nz.iter().sum::<i64>() == 0 && ones,
            WeylType::B(_) => short || long,
            WeylType::C(_) => long || double,
            WeylType::D(_) => long,
            WeylType::BC(_) => short || long || double,
            _ => unreachable!("classical types only"),
        };
        if is_root {
            out.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == dim {
                return out;
            }
            v[i] += 1;
            if v[i] <= 2 {
                break;
            }
            v[i] = -2;
            i += 1;
        }
    }
}

fn scanned_positive(t: &WeylType) -> BTreeSet<Vec<i64>> {
    scanned_roots(t).into_iter().filter(|r| r.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)).collect()
}

fn classical_types() -> Vec<WeylType> {
    let mut ts = Vec::new();
    for n in 1..=4 {
        ts.push(WeylType::A(n));
        ts.push(WeylType::B(n));
        ts.push(WeylType::C(n));
        ts.push(WeylType::BC(n));
        if n >= 2 {
            ts.push(WeylType::D(n));
        }
    }
    ts
}

fn as_ints(v: &WeightVector) -> Vec<i64> {
    v.coords().iter().map(|x| branchlab::rational::to_i64(x).expect("integral root")).collect()
}

#[test]
fn positive_roots_match_scanned_root_sets() {
    for t in classical_types() {
        let got: BTreeSet<Vec<i64>> = positive_roots(&t).unwrap().iter().map(as_ints).collect();
        assert_eq!(got, scanned_positive(&t), "{t}");
    }
}

#[test]
fn rho_is_half_the_scanned_positive_sum() {
    for t in classical_types() {
        let mut sum = vec![Rational::from_integer(0.into()); t.dim()];
        for r in scanned_positive(&t) {
            for (s, x) in sum.iter_mut().zip(r) {
                *s += int(x);
            }
        }
        let half: Vec<Rational> = sum.into_iter().map(|x| x / int(2)).collect();
        assert_eq!(rho(&t).unwrap(), WeightVector::new(half), "{t}");
    }
}

/// Orbit under the reflections in the scanned roots, by closure.
fn reflection_orbit(t: &WeylType, v: &[Rational]) -> BTreeSet<Vec<Rational>> {
    let roots: Vec<Vec<Rational>> = scanned_positive(t).into_iter().map(|r| r.into_iter().map(int).collect()).collect();
    let mut seen = BTreeSet::new();
    let mut todo = vec![v.to_vec()];
    while let Some(w) = todo.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        for a in &roots {
            let c = dot(&w, a) * int(2) / dot(a, a);
            let s: Vec<Rational> = w.iter().zip(a).map(|(x, y)| x - &c * y).collect();
            if !seen.contains(&s) {
                todo.push(s);
            }
        }
    }
    seen
}

fn weyl_type(kind: u8, n: usize) -> WeylType {
    match kind % 4 {
        0 => WeylType::A(n),
        1 => WeylType::B(n),
        2 => WeylType::C(n),
        _ => WeylType::D(n.max(2)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_is_the_dominant_orbit_member(kind in 0u8..4, n in 1usize..4, seed in prop::collection::vec(-3i64..=3, 5)) {
        let t = weyl_type(kind, n);
        let v: Vec<Rational> = seed.iter().take(t.dim()).map(|&x| frac(x, 2)).collect();
        let orbit = reflection_orbit(&t, &v);
        let d = dominant_representative(&t, &WeightVector::new(v.clone())).unwrap();
        prop_assert!(orbit.contains(d.coords()));
        let positive: Vec<Vec<Rational>> =
            scanned_positive(&t).into_iter().map(|r| r.into_iter().map(int).collect()).collect();
        prop_assert!(positive.iter().all(|a| dot(d.coords(), a) >= int(0)));
        for w in orbit.iter().take(12) {
            prop_assert!(weyl_orbit_equal(&t, &WeightVector::new(v.clone()), &WeightVector::new(w.clone())).unwrap());
            prop_assert_eq!(&dominant_representative(&t, &WeightVector::new(w.clone())).unwrap(), &d);
        }
    }

    #[test]
    fn orbit_equality_agrees_with_closure(kind in 0u8..4, n in 1usize..4,
                                          a in prop::collection::vec(-2i64..=2, 5),
                                          b in prop::collection::vec(-2i64..=2, 5)) {
        let t = weyl_type(kind, n);
        let v: Vec<Rational> = a.iter().take(t.dim()).map(|&x| int(x)).collect();
        let w: Vec<Rational> = b.iter().take(t.dim()).map(|&x| int(x)).collect();
        let expected = reflection_orbit(&t, &v).contains(&w);
        prop_assert_eq!(weyl_orbit_equal(&t, &WeightVector::new(v), &WeightVector::new(w)).unwrap(), expected);
    }

    #[test]
    fn casimir_is_the_rho_shifted_norm(n in 2usize..5, parts in prop::collection::vec(0i64..5, 4)) {
        let mut lam: Vec<i64> = parts.into_iter().take(n).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        for g in [GroupDescriptor::so(2 * n + 1), GroupDescriptor::sp(n), GroupDescriptor::u(n)] {
            let label = IrrepLabel::new(g.clone(), wv(&lam)).unwrap();
            let r = rho(&g.weyl).unwrap();
            let shifted: Vec<Rational> = lam.iter().zip(r.coords()).map(|(x, y)| int(*x) + y).collect();
            let expected = dot(&shifted, &shifted) - dot(r.coords(), r.coords());
            prop_assert_eq!(casimir_eigenvalue(&label).unwrap(), expected);
        }
    }
}

/// Semistandard tableaux of shape `lam` with entries in `1..=n`.
fn count_ssyt(lam: &[i64], n: usize) -> u64 {
    let cells: Vec<(usize, usize)> =
        lam.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid = vec![vec![0usize; lam.first().copied().unwrap_or(0) as usize]; lam.len()];
    fn fill(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            total += fill(i + 1, cells, grid, n);
        }
        total
    }
    fill(0, &cells, &mut grid, n)
}

#[test]
fn unitary_dimensions_count_tableaux() {
    for n in 1..=4usize {
        for a in 0..=3 {
            for b in 0..=a {
                for c in 0..=b {
                    let lam: Vec<i64> = [a, b, c].into_iter().take(n).collect();
                    if lam.len() < n {
                        continue;
                    }
                    let mut padded = lam.clone();
                    padded.resize(n, 0);
                    let d = GroupDescriptor::u(n).dimension(&wv(&padded)).unwrap();
                    let shape: Vec<i64> = padded.iter().copied().filter(|&x| x > 0).collect();
                    assert_eq!(d, BigInt::from(count_ssyt(&shape, n)), "U({n}) {padded:?}");
                }
            }
        }
    }
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn orthogonal_dimensions_count_harmonic_polynomials() {
    for big_n in 3..=16i64 {
        let g = GroupDescriptor::so(big_n as usize);
        for j in 0..=6 {
            let mut lam = vec![0i64; g.dim()];
            lam[0] = j;
            let harmonic = binom(j + big_n - 1, big_n - 1) - binom(j + big_n - 3, big_n - 1);
            assert_eq!(g.dimension(&wv(&lam)).unwrap(), harmonic, "SO({big_n}) j={j}");
        }
    }
}

#[test]
fn exceptional_and_spin_dimensions() {
    let g2 = GroupDescriptor::g2();
    for (lam, d) in [([0, 1], 7), ([1, 0], 14), ([0, 2], 27), ([1, 1], 64), ([0, 3], 77), ([2, 0], 77)] {
        assert_eq!(g2.dimension(&wv(&lam)).unwrap(), BigInt::from(d), "G2 {lam:?}");
    }
    let half = |v: &[i64]| WeightVector::halves(v);
    assert_eq!(GroupDescriptor::spin(8).dimension(&half(&[1, 1, 1, 1])).unwrap(), BigInt::from(8));
    assert_eq!(GroupDescriptor::spin(8).dimension(&half(&[1, 1, 1, -1])).unwrap(), BigInt::from(8));
    assert_eq!(GroupDescriptor::spin(9).dimension(&half(&[1, 1, 1, 1])).unwrap(), BigInt::from(16));
    assert_eq!(GroupDescriptor::spin(7).dimension(&half(&[1, 1, 1])).unwrap(), BigInt::from(8));
    assert_eq!(GroupDescriptor::sp(3).dimension(&wv(&[2, 0, 0])).unwrap(), BigInt::from(21));
}

#[test]
fn natural_representation_casimirs() {
    for n in 3..=12usize {
        let g = GroupDescriptor::so(n);
        let mut lam = vec![0i64; g.dim()];
        lam[0] = 1;
        let c = casimir_eigenvalue(&IrrepLabel::new(g, wv(&lam)).unwrap()).unwrap();
        assert_eq!(c, int(n as i64 - 1), "SO({n})");
    }
    for n in 1..=5usize {
        let mut lam = vec![0i64; n];
        lam[0] = 1;
        let c = casimir_eigenvalue(&IrrepLabel::new(GroupDescriptor::sp(n), wv(&lam)).unwrap()).unwrap();
        assert_eq!(c, int(2 * n as i64 + 1), "Sp({n})");
    }
    let spin8 = IrrepLabel::new(GroupDescriptor::spin(8), wv(&[1, 1, 1, 1])).unwrap();
    assert_eq!(casimir_eigenvalue(&spin8).unwrap(), int(16));
}

/// Interlacing patterns written out directly from the betweenness rule.
fn interlacing_so(big_n: usize, lam: &[i64]) -> BTreeSet<Vec<i64>> {
    let r = lam.len();
    let mut out = BTreeSet::new();
    let m = if big_n % 2 == 0 { r - 1 } else { r };
    let mut mu = vec![0i64; m];
    fn rec(i: usize, mu: &mut Vec<i64>, lam: &[i64], even: bool, out: &mut BTreeSet<Vec<i64>>) {
        if i == mu.len() {
            out.insert(mu.clone());
            return;
        }
        let (hi, lo) = if even {
            (lam[i], if i + 1 == lam.len() - 1 { lam[i + 1].abs() } else { lam[i + 1] })
        } else if i + 1 < lam.len() {
            (lam[i], lam[i + 1])
        } else {
            (lam[i], -lam[i])
        };
        for x in lo..=hi {
            if even && i + 1 == mu.len() {
                // the last coordinate of SO(2r−1) is nonnegative
                if x < 0 {
                    continue;
                }
            }
            mu[i] = x;
            rec(i + 1, mu, lam, even, out);
        }
    }
    rec(0, &mut mu, lam, big_n % 2 == 0, &mut out);
    out
}

#[test]
fn orthogonal_branching_matches_interlacing_and_dimension() {
    for big_n in 5..=9usize {
        let g = GroupDescriptor::so(big_n);
        let r = g.dim();
        let mut lams = vec![vec![0i64; r]];
        for _ in 0..r {
            lams = lams.into_iter().flat_map(|v| (-3..=3).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        for lam in lams.into_iter().map(|v| v[r..].to_vec()) {
            if IrrepLabel::new(g.clone(), wv(&lam)).is_err() {
                continue;
            }
            let got: BTreeSet<Vec<i64>> = branch_so_step(big_n, &wv(&lam)).unwrap().iter().map(as_ints).collect();
            assert_eq!(got, interlacing_so(big_n, &lam), "SO({big_n}) {lam:?}");
            let sub = GroupDescriptor::so(big_n - 1);
            let total: BigInt = got.iter().map(|m| sub.dimension(&wv(m)).unwrap()).sum();
            assert_eq!(total, g.dimension(&wv(&lam)).unwrap());
        }
    }
}

#[test]
fn unitary_branching_conserves_dimension_and_charge() {
    for n in 2..=4usize {
        let g = GroupDescriptor::u(n);
        let sub = GroupDescriptor::u(n - 1);
        for lam in [vec![1, 1, 0, 0], vec![2, 0, 0, -1], vec![3, 1, -1, -2], vec![0, 0, 0, 0]] {
            let lam = &lam[..n];
            if lam.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let pieces = branch_u_step(n, &wv(lam)).unwrap();
            let total: BigInt = pieces.iter().map(|(m, _)| sub.dimension(m).unwrap()).sum();
            assert_eq!(total, g.dimension(&wv(lam)).unwrap());
            let sum: i64 = lam.iter().sum();
            for (m, charge) in &pieces {
                assert_eq!(charge + m.sum(), int(sum));
            }
        }
    }
    let pieces = branch_u_step(4, &wv(&[1, 1, 0, 0])).unwrap();
    assert_eq!(pieces.len(), 2);
}

#[test]
fn form_is_the_dot_product_off_g2() {
    let v = WeightVector::halves(&[3, -1, 5]);
    let w = wv(&[2, 7, -4]);
    assert_eq!(weights::form(&WeylType::B(3), &v, &w).unwrap(), dot(v.coords(), w.coords()));
}

//! Branching rules: the classical interlacing steps and the closed-form
//! decomposition of each `π ∈ Disc(G̃/H̃)` restricted to `G`.

use serde::{Deserialize, Serialize};

use crate::catalog::{CaseRecord, DiscElement};
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};
use crate::reps::{GroupDescriptor, IrrepLabel};
use crate::weights::WeightVector;

/// All `x` with `lo ≤ x ≤ hi` and `x ≡ hi` modulo one, descending.
fn steps(hi: &Rational, lo: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut x = hi.clone();
    while &x >= lo {
        out.push(x.clone());
        x -= int(1);
    }
    out
}

/// Cartesian product of per-coordinate candidate lists.
fn product(ranges: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    ranges.iter().fold(vec![Vec::new()], |acc, r| {
        acc.iter()
            .flat_map(|prefix| {
                r.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

fn so_or_spin(n: usize, lambda: &WeightVector) -> Result<IrrepLabel> {
    let g = if lambda.is_integral() { GroupDescriptor::so(n) } else { GroupDescriptor::spin(n) };
    IrrepLabel::new(g, lambda.clone())
}

/// `SO(N) ↓ SO(N−1)` (or the `Spin` covers): every interlacing `μ`, once each.
pub fn branch_so_step(n: usize, lambda: &WeightVector) -> Result<Vec<WeightVector>> {
    if n < 3 {
        return Err(Error::UnsupportedType(format!("SO({n}) step")));
    }
    so_or_spin(n, lambda)?;
    let l = lambda.coords();
    let r = l.len();
    let ranges: Vec<Vec<Rational>> = if n % 2 == 0 {
        (0..r - 1)
            .map(|i| {
                let lo = if i + 1 == r - 1 { rational::abs(&l[r - 1]) } else { l[i + 1].clone() };
                steps(&l[i], &lo)
            })
            .collect()
    } else {
        (0..r).map(|i| if i + 1 < r { steps(&l[i], &l[i + 1]) } else { steps(&l[i], &-l[i].clone()) }).collect()
    };
    Ok(product(&ranges).into_iter().map(WeightVector::new).collect())
}

/// `U(N) ↓ U(N−1)×U(1)`: every interlacing `μ` with its `U(1)` charge `Σλ−Σμ`.
pub fn branch_u_step(n: usize, lambda: &WeightVector) -> Result<Vec<(WeightVector, Rational)>> {
    if n < 2 {
        return Err(Error::UnsupportedType(format!("U({n}) step")));
    }
    IrrepLabel::new(GroupDescriptor::u(n), lambda.clone())?;
    let l = lambda.coords();
    let ranges: Vec<Vec<Rational>> = (0..n - 1).map(|i| steps(&l[i], &l[i + 1])).collect();
    let total = lambda.sum();
    Ok(product(&ranges)
        .into_iter()
        .map(|mu| {
            let mu = WeightVector::new(mu);
            let charge = &total - mu.sum();
            (mu, charge)
        })
        .collect())
}

/// Closed-form branching `π ↦ {ϑ}` on integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchRule {
    /// `p ↦ {(k, s·p−k) : 0 ≤ k ≤ s·p}`.
    SphereToU { scale: i64 },
    /// `j ↦ (j₁,k₁,j₂,…)` with `j_i ≥ k_i ≥ j_{i+1}`; `trailing` appends
    /// a last `k_m ∈ [0, j_m]`.
    InterlaceSo { m: usize, trailing: bool },
    /// `j ↦ {(k, 2j−k) : j ≤ k ≤ 2j}`.
    SuToSp,
    /// `j ↦ (j₁,k₁,…,j_{n+1})` with `j_i ≥ k_i ≥ j_{i+1}`.
    InterlaceU { n: usize },
    /// `j ↦ {(k, j−k) : j ≤ 2k ≤ 2j}`.
    SphereToSpSp1,
    /// `j ↦ {(k, j−k, c) : j ≤ 2k ≤ 2j, |c| ≤ 2k−j, c ≡ j mod 2}`.
    SphereToSpU1,
    /// `j ↦ {(j, k) : 0 ≤ k ≤ j, j−k even}`.
    Spin9,
    /// `j ↦ {(j, k) : 0 ≤ k ≤ j}`.
    Vii,
    /// `j ↦ {(j, k, a) : |a| ≤ k ≤ j}`.
    Viii,
    /// `j ↦ {(j, k) : |k| ≤ j}`.
    Ix,
    /// `p ↦ {p}`.
    Identity,
    /// `(j, j′) ↦ {(j, j′, a) : |j−j′| ≤ a ≤ j+j′, j+j′−a even}`.
    Star,
}

fn interlace(j: &[i64], trailing: bool) -> Vec<Vec<i64>> {
    let m = j.len();
    let mut ranges: Vec<Vec<i64>> = (0..m.saturating_sub(1)).map(|i| (j[i + 1]..=j[i]).rev().collect()).collect();
    if trailing {
        ranges.push((0..=j[m - 1]).rev().collect());
    }
    let ks = ranges.iter().fold(vec![Vec::new()], |acc: Vec<Vec<i64>>, r| {
        acc.iter()
            .flat_map(|p| {
                r.iter().map(move |&x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    });
    ks.into_iter().map(|k| crate::catalog::alternating_concat(j, &k).expect("lengths fixed by construction")).collect()
}

impl BranchRule {
    /// `ϑ` parameters in `π`'s restriction, sorted lexicographically.
    pub fn apply(&self, p: &[i64]) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = match self {
            BranchRule::SphereToU { scale } => {
                let t = scale * p[0];
                (0..=t).map(|k| vec![k, t - k]).collect()
            }
            BranchRule::InterlaceSo { trailing, .. } => interlace(p, *trailing),
            BranchRule::SuToSp => (p[0]..=2 * p[0]).map(|k| vec![k, 2 * p[0] - k]).collect(),
            BranchRule::InterlaceU { .. } => interlace(p, false),
            BranchRule::SphereToSpSp1 => (0..=p[0]).filter(|k| 2 * k >= p[0]).map(|k| vec![k, p[0] - k]).collect(),
            BranchRule::SphereToSpU1 => (0..=p[0])
                .filter(|k| 2 * k >= p[0])
                .flat_map(|k| {
                    let w = 2 * k - p[0];
                    (-w..=w).step_by(2).map(move |c| vec![k, p[0] - k, c])
                })
                .collect(),
            BranchRule::Spin9 => (0..=p[0]).filter(|k| (p[0] - k) % 2 == 0).map(|k| vec![p[0], k]).collect(),
            BranchRule::Vii => (0..=p[0]).map(|k| vec![p[0], k]).collect(),
            BranchRule::Viii => (0..=p[0]).flat_map(|k| (-k..=k).map(move |a| vec![p[0], k, a])).collect(),
            BranchRule::Ix => (-p[0]..=p[0]).map(|k| vec![p[0], k]).collect(),
            BranchRule::Identity => vec![p.to_vec()],
            BranchRule::Star => {
                let (j, jp) = (p[0], p[1]);
                ((j - jp).abs()..=j + jp).step_by(2).map(|a| vec![j, jp, a]).collect()
            }
        };
        out.sort();
        out
    }
}

/// Parameters of the `ϑ` occurring in `π`, for `π` given by its parameters.
pub fn branch_case_params(case: &CaseRecord, pi: &[i64]) -> Result<Vec<DiscElement>> {
    case.pi_irrep(pi)?;
    case.branch
        .apply(pi)
        .into_iter()
        .map(|params| {
            case.theta_irrep(&params)?;
            Ok(DiscElement { case: case.id, params })
        })
        .collect()
}

/// Integer parameters of a `G̃`-label in the case's `Disc(G̃/H̃)`.
pub fn pi_params_of(case: &CaseRecord, pi: &IrrepLabel) -> Result<Vec<i64>> {
    let bad = |reason: &str| Error::InvalidParams {
        case: case.id.to_string(),
        params: pi.to_string(),
        reason: reason.to_string(),
    };
    if pi.group != case.g_tilde {
        return Err(bad("label is not for G̃"));
    }
    let x = case.pi_label.preimage(pi.highest_weight.coords())?.ok_or_else(|| bad("not in Disc(G̃/H̃)"))?;
    let p: Vec<i64> = x.iter().map(rational::to_i64).collect::<Option<_>>().ok_or_else(|| bad("not in Disc(G̃/H̃)"))?;
    if !case.pi_space.contains(&p) {
        return Err(bad("not in Disc(G̃/H̃)"));
    }
    Ok(p)
}

/// The labels of `G` occurring in `π|_G`, sorted by parameters.
pub fn branch_case(case: &CaseRecord, pi: &IrrepLabel) -> Result<Vec<IrrepLabel>> {
    let p = pi_params_of(case, pi)?;
    branch_case_params(case, &p)?.iter().map(|t| case.theta_irrep(&t.params)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_steps() {
        let out = branch_so_step(5, &WeightVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(out, vec![WeightVector::from_ints(&[1, 0]), WeightVector::from_ints(&[0, 0])]);
        let out = branch_so_step(8, &WeightVector::from_ints(&[2, 2, 2, 2])).unwrap();
        assert_eq!(out, vec![WeightVector::from_ints(&[2, 2, 2])]);
        let out = branch_so_step(7, &WeightVector::from_ints(&[2, 2, 2])).unwrap();
        assert_eq!(out.len(), 5);
        assert!(branch_so_step(5, &WeightVector::from_ints(&[0, 1])).is_err());
    }

    #[test]
    fn u_steps() {
        let out = branch_u_step(2, &WeightVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(out, vec![(WeightVector::from_ints(&[1]), int(0)), (WeightVector::from_ints(&[0]), int(1))]);
        let out = branch_u_step(3, &WeightVector::from_ints(&[0, 0, 0])).unwrap();
        assert_eq!(out, vec![(WeightVector::from_ints(&[0, 0]), int(0))]);
    }

    #[test]
    fn rule_examples() {
        assert_eq!(BranchRule::SphereToU { scale: 1 }.apply(&[3]).len(), 4);
        assert_eq!(BranchRule::Spin9.apply(&[4]), vec![vec![4, 0], vec![4, 2], vec![4, 4]]);
        assert_eq!(BranchRule::Star.apply(&[1, 1]), vec![vec![1, 1, 0], vec![1, 1, 2]]);
        assert_eq!(
            BranchRule::InterlaceSo { m: 2, trailing: false }.apply(&[2, 1]),
            vec![vec![2, 1, 1], vec![2, 2, 1]]
        );
        assert_eq!(BranchRule::SphereToSpU1.apply(&[1]), vec![vec![1, 0, -1], vec![1, 0, 1]]);
    }
}

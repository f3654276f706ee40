//! Graded-dimension bookkeeping: the counting sequence `v_m(N)` and the
//! combinatorial models of `dim S^N(g/h)^H` per case.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::catalog::{combin_count, CaseRecord};
use crate::error::{Error, Result};
use crate::linalg::AffineMap;
use crate::rational::int;
use crate::reps::{contragredient, GroupDescriptor};
use crate::weights::WeightVector;

/// `#{a ∈ ℕ^k : Σ a_i m_i = N}` by dynamic programming.
pub fn v_sequence(degrees: &[u32], n: u32) -> u64 {
    v_series(degrees, n)[n as usize]
}

/// `v_m(0), …, v_m(nmax)`.
pub fn v_series(degrees: &[u32], nmax: u32) -> Vec<u64> {
    let len = nmax as usize + 1;
    let mut ways = vec![0u64; len];
    ways[0] = 1;
    for &d in degrees {
        let d = d as usize;
        assert!(d > 0, "degrees are positive");
        for s in d..len {
            ways[s] += ways[s - d];
        }
    }
    ways
}

/// A one-parameter family `i ↦ Rep(group, map(i))` of irreducibles; the
/// member with index `i` sits in polynomial degree `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelFamily {
    pub group: GroupDescriptor,
    pub map: AffineMap,
}

impl LabelFamily {
    pub fn new(group: GroupDescriptor, map: AffineMap) -> Self {
        assert_eq!(map.source_dim, 1, "families have one index");
        assert_eq!(map.target_dim(), group.dim(), "family labels live in the group's coordinates");
        LabelFamily { group, map }
    }

    pub fn label(&self, i: u32) -> WeightVector {
        WeightVector::new(self.map.apply(&[int(i as i64)]).expect("dimension fixed at construction"))
    }
}

/// One tensor factor of a graded invariant ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HilbertFactor {
    /// `ℂ[s]` with `s` of the given degree.
    Free { degree: u32 },
    /// `(⊕_i L_i ⊗ ⊕_j R_j)^G`: one invariant for each pair with `R_j ≅ L_i^∨`.
    Pairing { left: LabelFamily, right: LabelFamily },
    /// `(⊕_i F_i)^G`: one invariant for each trivial member.
    Invariants { family: LabelFamily },
    /// The count of `(a₁,b₁,…,a_n,b_n)` descending in `ℕ` with `2Σa − Σb = N`.
    Combin { n: usize },
}

impl HilbertFactor {
    fn series(&self, nmax: u32) -> Vec<u64> {
        let len = nmax as usize + 1;
        let mut out = vec![0u64; len];
        match self {
            HilbertFactor::Free { degree } => {
                for s in (0..len).step_by(*degree as usize) {
                    out[s] = 1;
                }
            }
            HilbertFactor::Pairing { left, right } => {
                let dual: Vec<WeightVector> = (0..=nmax)
                    .map(|i| contragredient(&left.group, &left.label(i)).expect("family labels fit the group"))
                    .collect();
                let rights: Vec<WeightVector> = (0..=nmax).map(|j| right.label(j)).collect();
                for (i, d) in dual.iter().enumerate() {
                    for (j, r) in rights.iter().enumerate().take(len - i) {
                        if d == r {
                            out[i + j] += 1;
                        }
                    }
                }
            }
            HilbertFactor::Invariants { family } => {
                for (i, slot) in out.iter_mut().enumerate() {
                    if family.label(i as u32).coords().iter().all(|x| *x == int(0)) {
                        *slot = 1;
                    }
                }
            }
            HilbertFactor::Combin { n } => {
                for (s, slot) in out.iter_mut().enumerate() {
                    *slot = combin_count(*n, s as u32);
                }
            }
        }
        out
    }
}

/// A graded ring as a tensor product of factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertModel {
    pub factors: Vec<HilbertFactor>,
}

impl HilbertModel {
    /// `dim` of the degree-`N` piece for `N = 0, …, nmax`.
    pub fn series(&self, nmax: u32) -> Vec<u64> {
        let len = nmax as usize + 1;
        let mut acc = vec![0u64; len];
        acc[0] = 1;
        for f in &self.factors {
            let s = f.series(nmax);
            let mut next = vec![0u64; len];
            for (i, a) in acc.iter().enumerate().filter(|(_, a)| **a != 0) {
                for (j, b) in s.iter().enumerate().take(len - i) {
                    next[i + j] += a * b;
                }
            }
            acc = next;
        }
        acc
    }
}

fn model(case: &CaseRecord) -> Result<&HilbertModel> {
    case.hilbert.as_ref().ok_or_else(|| Error::NoModel(case.id.to_string()))
}

/// `dim S^N(g/h)^H` from the case's stored model.
pub fn graded_invariant_dim(case: &CaseRecord, n: u32) -> Result<u64> {
    Ok(model(case)?.series(n)[n as usize])
}

/// The claimed generator degrees of `𝔻_G(G/H)`: both lists together, sorted.
pub fn claimed_degrees(case: &CaseRecord) -> Vec<u32> {
    let mut d: Vec<u32> = case.degrees.tilde.iter().chain(&case.degrees.fiber).copied().collect();
    d.sort_unstable();
    d
}

/// Whether `v_m(N)` for the claimed degrees matches the model for `N ≤ nmax`.
pub fn check_generator_degrees(case: &CaseRecord, nmax: u32) -> Result<bool> {
    let degrees = claimed_degrees(case);
    let max = degrees.iter().copied().max().unwrap_or(0);
    if nmax < max {
        return Err(Error::DegreeBound { bound: nmax, degree: max });
    }
    Ok(v_series(&degrees, nmax) == model(case)?.series(nmax))
}

/// Other multisets (parts `≤ max_part`, at most `max_parts` parts) whose
/// counting sequence agrees with that of `degrees` up to `nmax`.
pub fn sequence_collisions(degrees: &[u32], nmax: u32, max_part: u32, max_parts: usize) -> Vec<Vec<u32>> {
    let target = v_series(degrees, nmax);
    let mut own = degrees.to_vec();
    own.sort_unstable();
    let mut found = BTreeSet::new();
    let mut cur = Vec::new();
    fn rec(
        start: u32,
        max_part: u32,
        max_parts: usize,
        nmax: u32,
        cur: &mut Vec<u32>,
        target: &[u64],
        found: &mut BTreeSet<Vec<u32>>,
    ) {
        if v_series(cur, nmax) == target {
            found.insert(cur.clone());
        }
        if cur.len() == max_parts {
            return;
        }
        for p in start..=max_part {
            cur.push(p);
            rec(p, max_part, max_parts, nmax, cur, target, found);
            cur.pop();
        }
    }
    rec(1, max_part, max_parts, nmax, &mut cur, &target, &mut found);
    found.remove(&own);
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_sequence_examples() {
        assert_eq!(v_sequence(&[1, 2], 4), 3);
        assert_eq!(v_sequence(&[5, 3], 0), 1);
        assert_eq!(v_sequence(&[2, 2, 2], 4), 6);
        assert_eq!(v_sequence(&[], 3), 0);
    }

    #[test]
    fn v_sequence_matches_exhaustive_count() {
        fn naive(m: &[u32], n: u32) -> u64 {
            match m.split_first() {
                None => u64::from(n == 0),
                Some((&d, rest)) => (0..=n / d).map(|a| naive(rest, n - a * d)).sum(),
            }
        }
        let mut parts = Vec::new();
        fn all(cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            out.push(cur.clone());
            if cur.len() == 4 {
                return;
            }
            for p in 1..=5 {
                cur.push(p);
                all(cur, out);
                cur.pop();
            }
        }
        all(&mut Vec::new(), &mut parts);
        for m in &parts {
            for n in 0..=20 {
                assert_eq!(v_sequence(m, n), naive(m, n), "{m:?} {n}");
            }
        }
    }

    #[test]
    fn free_products_reproduce_v() {
        let m = HilbertModel { factors: vec![HilbertFactor::Free { degree: 1 }, HilbertFactor::Free { degree: 2 }] };
        assert_eq!(m.series(12), v_series(&[1, 2], 12));
    }

    #[test]
    fn small_multisets_are_distinguished() {
        assert!(sequence_collisions(&[1, 2], 12, 6, 7).is_empty());
        assert!(sequence_collisions(&[2, 2, 2], 12, 6, 7).is_empty());
    }
}

//! Compact-group descriptors, irreducible-representation labels, Casimir
//! eigenvalues and infinitesimal characters.
//!
//! Casimirs use the invariant form with `B(e_i, e_i) = 1` in standard
//! coordinates, so `C` acts on the irreducible with highest weight `λ` by
//! `⟨λ, λ+2ρ⟩`. `SU(n)` labels are stored as `U(n)` labels with last entry
//! zero; the central direction is projected away. `G2` uses the basis
//! `a·ω₁ + b·ω₂` with short roots of length one.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::AffineMap;
use crate::rational::{self, int, Rational};
use crate::weights::{self, WeightVector, WeylType};

/// Isomorphism type of a compact connected group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    U(usize),
    SU(usize),
    SO(usize),
    Spin(usize),
    Sp(usize),
    G2,
    Product(Vec<GroupDescriptor>),
    /// Quotient of a product by a finite central subgroup; computed on the cover.
    AlmostProduct(Vec<GroupDescriptor>),
}

/// A compact group together with its root data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub kind: GroupKind,
    pub rank: usize,
    pub weyl: WeylType,
    pub rho: WeightVector,
}

fn simple(kind: GroupKind, rank: usize, weyl: WeylType) -> GroupDescriptor {
    let rho = weights::rho(&weyl).expect("lettered or torus type");
    GroupDescriptor { kind, rank, weyl, rho }
}

impl GroupDescriptor {
    /// `U(n)` with `n` coordinates.
    pub fn u(n: usize) -> Self {
        assert!(n >= 1, "U(n) needs n >= 1");
        let w = if n == 1 { WeylType::Trivial(1) } else { WeylType::A(n - 1) };
        simple(GroupKind::U(n), n, w)
    }

    /// `SU(n)` with `n` coordinates (labels normalized to last entry zero).
    pub fn su(n: usize) -> Self {
        assert!(n >= 2, "SU(n) needs n >= 2");
        simple(GroupKind::SU(n), n - 1, WeylType::A(n - 1))
    }

    fn orthogonal(n: usize, spin: bool) -> Self {
        assert!(n >= 2, "SO(n) needs n >= 2");
        let m = n / 2;
        let w = match (n % 2, m) {
            (0, 1) => WeylType::Trivial(1),
            (0, _) => WeylType::D(m),
            _ => WeylType::B(m),
        };
        let kind = if spin { GroupKind::Spin(n) } else { GroupKind::SO(n) };
        simple(kind, m, w)
    }

    pub fn so(n: usize) -> Self {
        Self::orthogonal(n, false)
    }

    pub fn spin(n: usize) -> Self {
        Self::orthogonal(n, true)
    }

    pub fn sp(n: usize) -> Self {
        assert!(n >= 1, "Sp(n) needs n >= 1");
        simple(GroupKind::Sp(n), n, WeylType::C(n))
    }

    pub fn g2() -> Self {
        simple(GroupKind::G2, 2, WeylType::G2)
    }

    fn compound(factors: Vec<GroupDescriptor>, almost: bool) -> Self {
        let rank = factors.iter().map(|f| f.rank).sum();
        let weyl = WeylType::Product(factors.iter().map(|f| f.weyl.clone()).collect());
        let rho = WeightVector::concat(&factors.iter().map(|f| f.rho.clone()).collect::<Vec<_>>());
        let kind = if almost { GroupKind::AlmostProduct(factors) } else { GroupKind::Product(factors) };
        GroupDescriptor { kind, rank, weyl, rho }
    }

    pub fn product(factors: Vec<GroupDescriptor>) -> Self {
        Self::compound(factors, false)
    }

    pub fn almost_product(factors: Vec<GroupDescriptor>) -> Self {
        Self::compound(factors, true)
    }

    /// Number of weight coordinates.
    pub fn dim(&self) -> usize {
        self.weyl.dim()
    }

    /// Simple factors (the group itself when simple or a torus).
    pub fn factors(&self) -> Vec<&GroupDescriptor> {
        match &self.kind {
            GroupKind::Product(fs) | GroupKind::AlmostProduct(fs) => fs.iter().flat_map(|f| f.factors()).collect(),
            _ => vec![self],
        }
    }

    /// Factors paired with their coordinate ranges.
    pub fn factor_ranges(&self) -> Vec<(&GroupDescriptor, std::ops::Range<usize>)> {
        let mut start = 0;
        self.factors()
            .into_iter()
            .map(|f| {
                let r = start..start + f.dim();
                start = r.end;
                (f, r)
            })
            .collect()
    }

    /// Dimension of the irreducible with highest weight `lambda`.
    pub fn dimension(&self, lambda: &WeightVector) -> Result<num_bigint::BigInt> {
        let mut d = num_bigint::BigInt::from(1);
        for (f, r) in self.factor_ranges() {
            let v = lambda.slice(r);
            d *= match f.weyl {
                WeylType::Trivial(_) => num_bigint::BigInt::from(1),
                _ => weights::weyl_dimension(&f.weyl, &f.rho, &v)?.to_integer(),
            };
        }
        Ok(d)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::U(n) => write!(f, "U({n})"),
            GroupKind::SU(n) => write!(f, "SU({n})"),
            GroupKind::SO(n) => write!(f, "SO({n})"),
            GroupKind::Spin(n) => write!(f, "Spin({n})"),
            GroupKind::Sp(n) => write!(f, "Sp({n})"),
            GroupKind::G2 => write!(f, "G2"),
            GroupKind::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("×"))
            }
            GroupKind::AlmostProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join("·"))
            }
        }
    }
}

fn check_simple_label(g: &GroupDescriptor, v: &WeightVector) -> std::result::Result<(), String> {
    let c = v.coords();
    let all_int = c.iter().all(rational::is_integer);
    let all_half = c.iter().all(rational::is_half_odd);
    let descending = c.windows(2).all(|w| w[0] >= w[1]);
    let nonneg = c.iter().all(|x| !x.is_negative());
    match &g.kind {
        GroupKind::U(_) => {
            if !all_int {
                return Err("U(n) weights must be integral".into());
            }
            if !descending {
                return Err("entries must be weakly decreasing".into());
            }
        }
        GroupKind::SU(_) => {
            if !all_int || !descending {
                return Err("SU(n) weights must be integral and weakly decreasing".into());
            }
            if !c.last().is_some_and(|x| x.is_zero()) {
                return Err("SU(n) labels are normalized to last entry 0".into());
            }
        }
        GroupKind::SO(_) | GroupKind::Spin(_) => {
            let spin = matches!(g.kind, GroupKind::Spin(_));
            if !(all_int || (spin && all_half)) {
                return Err("entries must be all integral (or all half-odd for Spin)".into());
            }
            if !weights::is_dominant(&g.weyl, v).map_err(|e| e.to_string())? {
                return Err("weight is not dominant".into());
            }
        }
        GroupKind::Sp(_) => {
            if !all_int || !descending || !nonneg {
                return Err("Sp(n) weights must be integral, decreasing and nonnegative".into());
            }
        }
        GroupKind::G2 => {
            if !all_int || !nonneg {
                return Err("G2 weights need nonnegative integer coordinates".into());
            }
        }
        GroupKind::Product(_) | GroupKind::AlmostProduct(_) => unreachable!("split by caller"),
    }
    Ok(())
}

/// Irreducible representation named by its highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IrrepLabel {
    pub group: GroupDescriptor,
    pub highest_weight: WeightVector,
}

impl IrrepLabel {
    /// Validates dominance and lattice admissibility factor by factor.
    pub fn new(group: GroupDescriptor, highest_weight: WeightVector) -> Result<Self> {
        if highest_weight.len() != group.dim() {
            return Err(Error::LengthMismatch { expected: group.dim(), got: highest_weight.len() });
        }
        for (f, r) in group.factor_ranges() {
            check_simple_label(f, &highest_weight.slice(r)).map_err(|reason| Error::InvalidLabel {
                group: group.to_string(),
                reason: format!("{reason}: {highest_weight}"),
            })?;
        }
        Ok(IrrepLabel { group, highest_weight })
    }

    pub fn trivial(group: GroupDescriptor) -> Self {
        let n = group.dim();
        IrrepLabel { group, highest_weight: WeightVector::zeros(n) }
    }

    pub fn dimension(&self) -> Result<num_bigint::BigInt> {
        self.group.dimension(&self.highest_weight)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.group, self.highest_weight)
    }
}

fn simple_casimir(g: &GroupDescriptor, lambda: &WeightVector) -> Result<Rational> {
    let shifted = lambda.add(&g.rho.scale(&int(2)))?;
    let base = weights::form(&g.weyl, lambda, &shifted)?;
    Ok(match g.kind {
        GroupKind::SU(n) => {
            let s = lambda.sum();
            base - &s * &s / int(n as i64)
        }
        _ => base,
    })
}

/// Casimir eigenvalue of each simple (or torus) factor, in factor order.
pub fn casimir_factors(r: &IrrepLabel) -> Result<Vec<Rational>> {
    r.group.factor_ranges().into_iter().map(|(f, range)| simple_casimir(f, &r.highest_weight.slice(range))).collect()
}

/// Casimir eigenvalue `⟨λ, λ+2ρ⟩` of a group with a single factor.
pub fn casimir_eigenvalue(r: &IrrepLabel) -> Result<Rational> {
    let fs = casimir_factors(r)?;
    if fs.len() != 1 {
        return Err(Error::UnsupportedType(format!("{} has {} factors; use casimir_factors", r.group, fs.len())));
    }
    Ok(fs.into_iter().next().expect("one factor"))
}

/// `λ+ρ` in canonical dominant form for the group's Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InfinitesimalCharacter {
    pub weyl: WeylType,
    pub value: WeightVector,
}

impl InfinitesimalCharacter {
    /// Canonicalizes an arbitrary representative.
    pub fn from_representative(weyl: WeylType, v: &WeightVector) -> Result<Self> {
        let value = weights::dominant_representative(&weyl, v)?;
        Ok(InfinitesimalCharacter { weyl, value })
    }
}

/// Projects the `SU` factors of `v` onto the trace-zero hyperplane.
pub fn project_su(group: &GroupDescriptor, v: &WeightVector) -> WeightVector {
    let mut out = v.coords().to_vec();
    for (f, r) in group.factor_ranges() {
        if let GroupKind::SU(n) = f.kind {
            let mean = out[r.clone()].iter().fold(Rational::zero(), |a, x| a + x) / int(n as i64);
            for x in &mut out[r] {
                *x -= &mean;
            }
        }
    }
    WeightVector::new(out)
}

/// Infinitesimal character of an irreducible: the orbit of `λ+ρ`.
pub fn infinitesimal_character(r: &IrrepLabel) -> Result<InfinitesimalCharacter> {
    let v = r.highest_weight.add(&r.group.rho)?;
    InfinitesimalCharacter::from_representative(r.group.weyl.clone(), &project_su(&r.group, &v))
}

/// The shift `ν ↦ embed(ν) + ρ̃ − embed(ρ_a)` into ambient coordinates.
pub fn rho_shift_t(
    ambient_rho: &WeightVector,
    rho_a: &WeightVector,
    embed: &AffineMap,
    nu: &WeightVector,
) -> Result<WeightVector> {
    let e_nu = WeightVector::new(embed.apply(nu.coords())?);
    let e_rho = WeightVector::new(embed.apply(rho_a.coords())?);
    e_nu.sub(&e_rho)?.add(ambient_rho)
}

/// Cartan–Helgason test: `λ` kills the given torus directions and
/// `⟨λ,α⟩/⟨α,α⟩ ∈ ℕ` for every listed restricted positive root.
pub fn cartan_helgason_admissible(
    lambda: &WeightVector,
    restricted_positive: &[WeightVector],
    t_kill: impl Fn(&WeightVector) -> bool,
) -> bool {
    if !t_kill(lambda) {
        return false;
    }
    restricted_positive.iter().all(|alpha| {
        let (Ok(num), Ok(den)) = (weights::inner_product(lambda, alpha), weights::inner_product(alpha, alpha)) else {
            return false;
        };
        if den.is_zero() {
            return false;
        }
        let q = num / den;
        q.is_integer() && !q.is_negative()
    })
}

/// Predicate "orthogonal to every vector in `basis`" for use as `t_kill`.
pub fn orthogonal_to(basis: &[WeightVector]) -> impl Fn(&WeightVector) -> bool + '_ {
    move |l| basis.iter().all(|b| weights::inner_product(l, b).map(|x| x.is_zero()).unwrap_or(false))
}

/// Highest weight of the contragredient representation, factor by factor.
pub fn contragredient(group: &GroupDescriptor, lambda: &WeightVector) -> Result<WeightVector> {
    if lambda.len() != group.dim() {
        return Err(Error::LengthMismatch { expected: group.dim(), got: lambda.len() });
    }
    let mut out = Vec::with_capacity(lambda.len());
    for (f, r) in group.factor_ranges() {
        let v = &lambda.coords()[r];
        let reversed = || v.iter().rev().map(|x| -x).collect::<Vec<Rational>>();
        match (&f.kind, &f.weyl) {
            (GroupKind::U(_), _) => out.extend(reversed()),
            (GroupKind::SU(_), _) => {
                let w = reversed();
                let last = w.last().cloned().unwrap_or_else(Rational::zero);
                out.extend(w.into_iter().map(|x| x - &last));
            }
            (_, WeylType::Trivial(_)) => out.extend(v.iter().map(|x| -x)),
            (_, WeylType::D(m)) if m % 2 == 1 => {
                let mut w = v.to_vec();
                if let Some(x) = w.last_mut() {
                    *x = -x.clone();
                }
                out.extend(w);
            }
            _ => out.extend(v.iter().cloned()),
        }
    }
    Ok(WeightVector::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn label(g: GroupDescriptor, v: &[i64]) -> IrrepLabel {
        IrrepLabel::new(g, WeightVector::from_ints(v)).unwrap()
    }

    #[test]
    fn natural_representation_casimirs() {
        for n in 3..10 {
            let mut v = vec![0; n / 2];
            v[0] = 1;
            let c = casimir_eigenvalue(&label(GroupDescriptor::so(n), &v)).unwrap();
            assert_eq!(c, int(n as i64 - 1), "SO({n})");
        }
        for n in 1..5 {
            let mut v = vec![0; n];
            v[0] = 1;
            let c = casimir_eigenvalue(&label(GroupDescriptor::sp(n), &v)).unwrap();
            assert_eq!(c, int(2 * n as i64 + 1));
        }
    }

    #[test]
    fn spin8_half_weights() {
        let l = IrrepLabel::new(GroupDescriptor::spin(8), WeightVector::from_ints(&[1, 1, 1, 1])).unwrap();
        assert_eq!(casimir_eigenvalue(&l).unwrap(), int(16));
        assert!(IrrepLabel::new(GroupDescriptor::so(8), WeightVector::halves(&[1, 1, 1, 1])).is_err());
        assert!(IrrepLabel::new(GroupDescriptor::spin(8), WeightVector::halves(&[1, 1, 1, 1])).is_ok());
    }

    #[test]
    fn su_casimir_projects_center() {
        let c = casimir_eigenvalue(&label(GroupDescriptor::su(2), &[1, 0])).unwrap();
        assert_eq!(c, frac(3, 2));
        assert!(IrrepLabel::new(GroupDescriptor::su(3), WeightVector::from_ints(&[2, 1, 1])).is_err());
    }

    #[test]
    fn infinitesimal_characters() {
        let l = IrrepLabel::new(GroupDescriptor::so(5), WeightVector::from_ints(&[2, 1])).unwrap();
        assert_eq!(infinitesimal_character(&l).unwrap().value, WeightVector::halves(&[7, 3]));
        let t = IrrepLabel::trivial(GroupDescriptor::u(3));
        assert_eq!(infinitesimal_character(&t).unwrap().value, WeightVector::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn product_casimirs_are_per_factor() {
        let g = GroupDescriptor::product(vec![GroupDescriptor::so(5), GroupDescriptor::so(3)]);
        let l = label(g, &[1, 0, 1]);
        assert_eq!(casimir_factors(&l).unwrap(), vec![int(4), int(2)]);
        assert!(casimir_eigenvalue(&l).is_err());
    }

    #[test]
    fn g2_casimirs() {
        assert_eq!(casimir_eigenvalue(&label(GroupDescriptor::g2(), &[0, 1])).unwrap(), int(6));
        assert_eq!(casimir_eigenvalue(&label(GroupDescriptor::g2(), &[1, 0])).unwrap(), int(12));
    }

    #[test]
    fn cartan_helgason_on_sphere() {
        let roots = vec![WeightVector::from_ints(&[1, 0, 0])];
        let kill = vec![WeightVector::from_ints(&[0, 1, 0]), WeightVector::from_ints(&[0, 0, 1])];
        let ok = |v: WeightVector| cartan_helgason_admissible(&v, &roots, orthogonal_to(&kill));
        assert!(ok(WeightVector::from_ints(&[3, 0, 0])));
        assert!(!ok(WeightVector::halves(&[1, 0, 0])));
        assert!(!ok(WeightVector::from_ints(&[1, 1, 0])));
    }

    #[test]
    fn contragredients() {
        let c = |g: GroupDescriptor, v: &[i64]| contragredient(&g, &WeightVector::from_ints(v)).unwrap();
        assert_eq!(c(GroupDescriptor::u(3), &[2, 0, -1]), WeightVector::from_ints(&[1, 0, -2]));
        assert_eq!(c(GroupDescriptor::su(3), &[2, 1, 0]), WeightVector::from_ints(&[2, 1, 0]));
        assert_eq!(c(GroupDescriptor::su(3), &[1, 0, 0]), WeightVector::from_ints(&[1, 1, 0]));
        assert_eq!(c(GroupDescriptor::so(6), &[2, 1, 1]), WeightVector::from_ints(&[2, 1, -1]));
        assert_eq!(c(GroupDescriptor::so(8), &[2, 1, 1, 1]), WeightVector::from_ints(&[2, 1, 1, 1]));
        assert_eq!(c(GroupDescriptor::so(2), &[3]), WeightVector::from_ints(&[-3]));
        assert_eq!(c(GroupDescriptor::g2(), &[0, 2]), WeightVector::from_ints(&[0, 2]));
    }
}

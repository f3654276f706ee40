//! The static case database: one [`CaseRecord`] per spherical triple, with
//! parameter spaces, label maps, Harish-Chandra data, relations, transfer
//! maps, ranks and generator degrees.

mod cases;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::branching::BranchRule;
use crate::error::{Error, Result};
use crate::hilbert::HilbertModel;
use crate::linalg::{AffineMap, Matrix};
use crate::rational::{self, int, Rational};
use crate::reps::{GroupDescriptor, IrrepLabel};
use crate::weights::{WeightVector, WeylType};

pub use cases::combin_count;

/// Case tags, one per row of the classification plus the primed variants
/// and the product case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "i'")]
    IPrime,
    #[serde(rename = "ii_odd")]
    IiOdd,
    #[serde(rename = "ii_even")]
    IiEven,
    #[serde(rename = "iii")]
    Iii,
    #[serde(rename = "iv")]
    Iv,
    #[serde(rename = "v")]
    V,
    #[serde(rename = "v'")]
    VPrime,
    #[serde(rename = "vi")]
    Vi,
    #[serde(rename = "vii")]
    Vii,
    #[serde(rename = "viii")]
    Viii,
    #[serde(rename = "ix")]
    Ix,
    #[serde(rename = "x")]
    X,
    #[serde(rename = "xi")]
    Xi,
    #[serde(rename = "xii")]
    Xii,
    #[serde(rename = "xiii")]
    Xiii,
    #[serde(rename = "xiii'")]
    XiiiPrime,
    #[serde(rename = "xiv")]
    Xiv,
    #[serde(rename = "star")]
    Star,
}

impl CaseTag {
    pub const ALL: [CaseTag; 19] = [
        CaseTag::I,
        CaseTag::IPrime,
        CaseTag::IiOdd,
        CaseTag::IiEven,
        CaseTag::Iii,
        CaseTag::Iv,
        CaseTag::V,
        CaseTag::VPrime,
        CaseTag::Vi,
        CaseTag::Vii,
        CaseTag::Viii,
        CaseTag::Ix,
        CaseTag::X,
        CaseTag::Xi,
        CaseTag::Xii,
        CaseTag::Xiii,
        CaseTag::XiiiPrime,
        CaseTag::Xiv,
        CaseTag::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::I => "i",
            CaseTag::IPrime => "i'",
            CaseTag::IiOdd => "ii_odd",
            CaseTag::IiEven => "ii_even",
            CaseTag::Iii => "iii",
            CaseTag::Iv => "iv",
            CaseTag::V => "v",
            CaseTag::VPrime => "v'",
            CaseTag::Vi => "vi",
            CaseTag::Vii => "vii",
            CaseTag::Viii => "viii",
            CaseTag::Ix => "ix",
            CaseTag::X => "x",
            CaseTag::Xi => "xi",
            CaseTag::Xii => "xii",
            CaseTag::Xiii => "xiii",
            CaseTag::XiiiPrime => "xiii'",
            CaseTag::Xiv => "xiv",
            CaseTag::Star => "star",
        }
    }

    /// Smallest admissible size parameter, or `None` for fixed-size cases.
    pub fn min_size(self) -> Option<usize> {
        match self {
            CaseTag::IPrime => Some(2),
            CaseTag::I | CaseTag::IiOdd | CaseTag::IiEven | CaseTag::Iii | CaseTag::Iv => Some(1),
            CaseTag::V | CaseTag::VPrime => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('′', "'");
        let norm = if norm == "*" { "star".to_string() } else { norm.to_ascii_lowercase() };
        CaseTag::ALL.into_iter().find(|t| t.name() == norm).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// A case tag with its size parameter (`n` or `m`) where one applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseId {
    pub tag: CaseTag,
    pub size: Option<usize>,
}

impl CaseId {
    /// Validates the size parameter against the tag's range.
    pub fn new(tag: CaseTag, size: Option<usize>) -> Result<Self> {
        match (tag.min_size(), size) {
            (Some(min), Some(n)) if n >= min => Ok(CaseId { tag, size }),
            (None, None) => Ok(CaseId { tag, size }),
            _ => Err(Error::UnknownCase(match size {
                Some(n) => format!("{tag}:{n}"),
                None => tag.to_string(),
            })),
        }
    }

    pub fn fixed(tag: CaseTag) -> Self {
        CaseId { tag, size: None }
    }

    pub fn sized(tag: CaseTag, n: usize) -> Self {
        CaseId { tag, size: Some(n) }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.size {
            Some(n) => write!(f, "{}:{n}", self.tag),
            None => write!(f, "{}", self.tag),
        }
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, size) = match s.split_once(':') {
            Some((t, n)) => {
                let n: usize = n.trim().parse().map_err(|_| Error::UnknownCase(s.to_string()))?;
                (t.parse::<CaseTag>()?, Some(n))
            }
            None => (s.parse::<CaseTag>()?, None),
        };
        CaseId::new(tag, size).map_err(|_| Error::UnknownCase(s.to_string()))
    }
}

impl Serialize for CaseId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CaseId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One element of `Disc(G/H)` named by its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DiscElement {
    pub case: CaseId,
    pub params: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    /// `Σ c_i p_i + constant ≥ 0`.
    Ge,
    /// `Σ c_i p_i + constant = 0`.
    Eq,
    /// `Σ c_i p_i + constant` is even.
    Even,
}

/// An integer-linear predicate on a parameter tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearConstraint {
    pub coeffs: Vec<i64>,
    pub constant: i64,
    pub kind: ConstraintKind,
}

impl LinearConstraint {
    fn value(&self, p: &[i64]) -> i64 {
        self.coeffs.iter().zip(p).map(|(c, x)| c * x).sum::<i64>() + self.constant
    }

    pub fn holds(&self, p: &[i64]) -> bool {
        let v = self.value(p);
        match self.kind {
            ConstraintKind::Ge => v >= 0,
            ConstraintKind::Eq => v == 0,
            ConstraintKind::Even => v.rem_euclid(2) == 0,
        }
    }

    /// Index of the last parameter the constraint depends on.
    fn last_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }
}

/// A named integer parameter space cut out by linear constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSpace {
    pub names: Vec<String>,
    pub constraints: Vec<LinearConstraint>,
}

impl ParamSpace {
    pub fn new(names: &[&str]) -> Self {
        ParamSpace { names: names.iter().map(|s| s.to_string()).collect(), constraints: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    fn push(mut self, coeffs: &[i64], constant: i64, kind: ConstraintKind) -> Self {
        assert_eq!(coeffs.len(), self.dim(), "constraint arity");
        self.constraints.push(LinearConstraint { coeffs: coeffs.to_vec(), constant, kind });
        self
    }

    /// `Σ c_i p_i + constant ≥ 0`.
    pub fn ge(self, coeffs: &[i64], constant: i64) -> Self {
        self.push(coeffs, constant, ConstraintKind::Ge)
    }

    /// `Σ c_i p_i + constant` even.
    pub fn even(self, coeffs: &[i64], constant: i64) -> Self {
        self.push(coeffs, constant, ConstraintKind::Even)
    }

    /// `p_i ≥ 0`.
    pub fn nonneg(self, i: usize) -> Self {
        let c = self.unit(i, 1);
        self.ge(&c, 0)
    }

    /// `p_i ≥ p_j`.
    pub fn ge_pair(self, i: usize, j: usize) -> Self {
        let mut c = self.unit(i, 1);
        c[j] -= 1;
        self.ge(&c, 0)
    }

    /// `|p_i| ≤ p_j`.
    pub fn abs_le(self, i: usize, j: usize) -> Self {
        let mut a = self.unit(j, 1);
        a[i] -= 1;
        let mut b = self.unit(j, 1);
        b[i] += 1;
        self.ge(&a, 0).ge(&b, 0)
    }

    /// `p_0 ≥ p_1 ≥ … ≥ p_{d−1}`.
    pub fn descending(self) -> Self {
        (1..self.dim()).fold(self, |s, i| s.ge_pair(i - 1, i))
    }

    fn unit(&self, i: usize, c: i64) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[i] = c;
        v
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.dim() && self.constraints.iter().all(|c| c.holds(p))
    }

    /// All tuples with `|p_i| ≤ bound` satisfying the constraints, in
    /// increasing lexicographic order.
    pub fn enumerate(&self, bound: i64) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut by_last: Vec<Vec<&LinearConstraint>> = vec![Vec::new(); d.max(1)];
        for c in &self.constraints {
            by_last[c.last_index().unwrap_or(0)].push(c);
        }
        let mut out = Vec::new();
        let mut cur = vec![0i64; d];
        if d == 0 {
            if self.constraints.iter().all(|c| c.holds(&[])) {
                out.push(Vec::new());
            }
            return out;
        }
        fn rec(i: usize, bound: i64, cur: &mut Vec<i64>, by_last: &[Vec<&LinearConstraint>], out: &mut Vec<Vec<i64>>) {
            for v in -bound..=bound {
                cur[i] = v;
                let ok = by_last[i].iter().all(|c| c.holds(cur));
                if !ok {
                    continue;
                }
                if i + 1 == cur.len() {
                    out.push(cur.clone());
                } else {
                    rec(i + 1, bound, cur, by_last, out);
                }
            }
            cur[i] = 0;
        }
        rec(0, bound, &mut cur, &by_last, &mut out);
        out
    }
}

/// `(j₁,k₁,j₂,k₂,…)` from `j` and `k` with `len(k) ∈ {len(j), len(j)−1}`.
pub fn alternating_concat<T: Clone>(j: &[T], k: &[T]) -> Result<Vec<T>> {
    if k.len() != j.len() && k.len() + 1 != j.len() {
        return Err(Error::LengthMismatch { expected: j.len(), got: k.len() });
    }
    let mut out = Vec::with_capacity(j.len() + k.len());
    for (i, x) in j.iter().enumerate() {
        out.push(x.clone());
        if let Some(y) = k.get(i) {
            out.push(y.clone());
        }
    }
    Ok(out)
}

/// Which side of the diagram a generator comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// `dℓ(Z(g̃))`, evaluated on `π(ϑ)`.
    P,
    /// `dr(Z(k))`, evaluated on `τ(ϑ)`.
    Q,
    /// `dℓ(Z(g))`, evaluated on `ϑ`.
    R,
}

/// Which label an on-label evaluation reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelSide {
    Theta,
    Tau,
}

/// How a generator's scalar is computed from `ϑ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMethod {
    /// `|T(λ)|² − |ρ̃|²` on one factor of `G̃` (all factors when `None`),
    /// with `T` the `ρ`-shift of the restricted parameter.
    TildeCasimir { factor: Option<usize> },
    /// `Σ λ_i^exp` over the restricted parameter `λ(ϑ)+ρ_ã`.
    LambdaPowerSum { exp: u32 },
    /// `Σ μ_i^exp` over the fiber parameter.
    FiberPowerSum { exp: u32 },
    /// `Σ ν_i^exp` over the infinitesimal character of `ϑ`.
    CharPowerSum { exp: u32 },
    /// Casimir of one factor of the label (sum over all factors when `None`).
    Casimir { on: LabelSide, factor: Option<usize> },
    /// Euler operator: the linear functional of the label, divided by `√−1`.
    Euler {
        on: LabelSide,
        #[serde(with = "rational::serde_vec")]
        functional: Vec<Rational>,
    },
}

/// A generator of `dℓ(Z(g̃))`, `dr(Z(k))` or `dℓ(Z(g))` named in a relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSymbol {
    pub name: String,
    pub side: Side,
    pub method: EvalMethod,
    /// The operator acts by `√−1` times the stored scalar.
    pub imaginary_unit_normalized: bool,
}

/// `coeff · Π symbol^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "rational::serde_str")]
    pub coeff: Rational,
    pub factors: Vec<(String, u32)>,
}

/// A claimed identity `Σ terms = 0` on every `ϑ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationIdentity {
    pub label: String,
    pub terms: Vec<Term>,
}

/// Harish-Chandra data of `G̃/H̃` pulled back to `ϑ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HcData {
    pub restricted_weyl: WeylType,
    pub rho_a: WeightVector,
    /// `ϑ ↦ λ(ϑ)+ρ_ã`.
    pub lambda_rho: AffineMap,
    /// Restricted coordinates into the Cartan of `G̃`.
    pub embed: AffineMap,
    /// `ϑ ↦ μ(ϑ)+ρ_{a_F}` on the fiber, where the case provides it.
    pub mu_rho: Option<AffineMap>,
}

/// `S_τ(λ) = linear·λ + offset(τ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferFamily {
    #[serde(with = "rational::serde_mat")]
    pub linear: Matrix,
    /// Offset as an affine function of the `τ` parameters.
    pub offset: AffineMap,
}

/// Restricted root data for the Cartan–Helgason test on `G̃/H̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChData {
    pub restricted_roots: Vec<WeightVector>,
    pub kill: Vec<WeightVector>,
}

/// Display names of the five groups of the triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupNames {
    pub g_tilde: String,
    pub h_tilde: String,
    pub g: String,
    pub h: String,
    pub k: String,
}

/// Degree multisets of the generators of `𝔻_G̃(G̃/H̃)` and `𝔻_K(K/H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degrees {
    pub tilde: Vec<u32>,
    pub fiber: Vec<u32>,
}

/// Generator symbol names of the two polynomial algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generators {
    pub tilde: Vec<String>,
    pub fiber: Vec<String>,
}

/// Full static data for one triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: CaseId,
    pub names: GroupNames,
    pub g_tilde: GroupDescriptor,
    pub g: GroupDescriptor,
    pub k: GroupDescriptor,
    pub theta_space: ParamSpace,
    pub pi_space: ParamSpace,
    pub tau_space: ParamSpace,
    pub theta_label: AffineMap,
    pub pi_label: AffineMap,
    pub tau_label: AffineMap,
    pub pi_of_theta: AffineMap,
    pub tau_of_theta: AffineMap,
    pub hc: HcData,
    pub transfer: TransferFamily,
    pub symbols: Vec<GeneratorSymbol>,
    pub relations: Vec<RelationIdentity>,
    pub generators: Generators,
    pub degrees: Degrees,
    /// `(rank G̃/H̃, rank K/H, rank G/H)` as tabulated.
    pub table_ranks: (u32, u32, u32),
    /// The same triple counted from the generator lists actually used.
    pub realized_ranks: (u32, u32, u32),
    pub hilbert: Option<HilbertModel>,
    pub ch: Option<ChData>,
    pub branch: BranchRule,
    /// Case whose data this record is transported from.
    pub alias_of: Option<CaseId>,
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn params_string(p: &[i64]) -> String {
    format!("{p:?}")
}

impl CaseRecord {
    pub fn enumerate_disc(&self, bound: i64) -> Vec<DiscElement> {
        self.theta_space.enumerate(bound).into_iter().map(|params| DiscElement { case: self.id, params }).collect()
    }

    pub fn symbol(&self, name: &str) -> Result<&GeneratorSymbol> {
        self.symbols
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownSymbol { case: self.id.to_string(), symbol: name.to_string() })
    }

    fn check_theta(&self, theta: &[i64]) -> Result<()> {
        if theta.len() != self.theta_space.dim() {
            return Err(Error::LengthMismatch { expected: self.theta_space.dim(), got: theta.len() });
        }
        if !self.theta_space.contains(theta) {
            return Err(Error::InvalidParams {
                case: self.id.to_string(),
                params: params_string(theta),
                reason: "constraints of Disc(G/H) violated".into(),
            });
        }
        Ok(())
    }

    /// Label of `ϑ` as a representation of `G`.
    pub fn theta_irrep(&self, theta: &[i64]) -> Result<IrrepLabel> {
        self.check_theta(theta)?;
        let hw = self.theta_label.apply(&ints(theta))?;
        IrrepLabel::new(self.g.clone(), WeightVector::new(hw))
    }

    /// Label of the `G̃`-representation named by `π` parameters.
    pub fn pi_irrep(&self, pi: &[i64]) -> Result<IrrepLabel> {
        if !self.pi_space.contains(pi) {
            return Err(Error::InvalidParams {
                case: self.id.to_string(),
                params: params_string(pi),
                reason: "not in Disc(G̃/H̃)".into(),
            });
        }
        let hw = self.pi_label.apply(&ints(pi))?;
        IrrepLabel::new(self.g_tilde.clone(), WeightVector::new(hw))
    }

    /// Label of the `K`-representation named by `τ` parameters.
    pub fn tau_irrep(&self, tau: &[i64]) -> Result<IrrepLabel> {
        if !self.tau_space.contains(tau) {
            return Err(Error::InvalidParams {
                case: self.id.to_string(),
                params: params_string(tau),
                reason: "not in Disc(K/H)".into(),
            });
        }
        let hw = self.tau_label.apply(&ints(tau))?;
        IrrepLabel::new(self.k.clone(), WeightVector::new(hw))
    }

    /// Integer parameters of `(π(ϑ), τ(ϑ))`.
    pub fn pi_tau_params(&self, theta: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
        self.check_theta(theta)?;
        let conv = |v: Vec<Rational>| -> Result<Vec<i64>> {
            v.iter()
                .map(|x| {
                    rational::to_i64(x).ok_or_else(|| Error::InvalidParams {
                        case: self.id.to_string(),
                        params: params_string(theta),
                        reason: "non-integral image parameter".into(),
                    })
                })
                .collect()
        };
        let p = conv(self.pi_of_theta.apply(&ints(theta))?)?;
        let t = conv(self.tau_of_theta.apply(&ints(theta))?)?;
        Ok((p, t))
    }

    /// `(π(ϑ), τ(ϑ))` as labels of `G̃` and `K`.
    pub fn pi_tau(&self, theta: &DiscElement) -> Result<(IrrepLabel, IrrepLabel)> {
        let (p, t) = self.pi_tau_params(&theta.params)?;
        Ok((self.pi_irrep(&p)?, self.tau_irrep(&t)?))
    }

    /// `λ(ϑ)+ρ_ã`.
    pub fn lambda_rho(&self, theta: &[i64]) -> Result<WeightVector> {
        self.check_theta(theta)?;
        Ok(WeightVector::new(self.hc.lambda_rho.apply(&ints(theta))?))
    }

    pub fn rank_triple(&self) -> (u32, u32, u32) {
        self.table_ranks
    }
}

/// Every admissible size parameter of `tag` up to `max_n`.
fn sizes(tag: CaseTag, max_n: usize) -> Vec<Option<usize>> {
    match tag.min_size() {
        Some(min) => (min..=max_n).map(Some).collect(),
        None => vec![None],
    }
}

/// One record per tag and admissible size parameter `≤ max_n`, in tag order.
pub fn all_cases(max_n: usize) -> Vec<CaseRecord> {
    CaseTag::ALL
        .into_iter()
        .flat_map(|t| sizes(t, max_n).into_iter().map(move |s| CaseId { tag: t, size: s }))
        .map(|id| build_case(id).expect("catalog ids are admissible"))
        .collect()
}

/// Builds the record for one case.
pub fn build_case(id: CaseId) -> Result<CaseRecord> {
    let id = CaseId::new(id.tag, id.size)?;
    cases::build(id)
}

/// Version of the serialized catalog document.
pub const CATALOG_SCHEMA: u32 = 1;

/// Largest size parameter covered by the bundled `catalog.json`.
pub const BUNDLED_MAX_N: usize = 4;

/// The serialized catalog document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub schema: u32,
    pub max_n: usize,
    pub cases: Vec<CaseRecord>,
}

impl CatalogDocument {
    pub fn generate(max_n: usize) -> Self {
        CatalogDocument { schema: CATALOG_SCHEMA, max_n, cases: all_cases(max_n) }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: CatalogDocument = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema != CATALOG_SCHEMA {
            return Err(Error::Parse(format!("unsupported catalog schema {}", doc.schema)));
        }
        Ok(doc)
    }
}

/// The catalog document shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../../catalog.json");

pub fn bundled_catalog() -> Result<CatalogDocument> {
    CatalogDocument::from_json(BUNDLED_CATALOG)
}

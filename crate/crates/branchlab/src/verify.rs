//! Evaluation-based verification: every relation, transfer map, rank and
//! branching claim of a case is checked on a finite box of `ϑ` in exact
//! arithmetic, and failures are reported as data.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::branching::{branch_case_params, pi_params_of};
use crate::catalog::{
    CaseId, CaseRecord, CaseTag, DiscElement, EvalMethod, GeneratorSymbol, LabelSide, RelationIdentity,
};
use crate::dgx;
use crate::error::{Error, Result};
use crate::hilbert;
use crate::linalg::{AffineMap, Echelon};
use crate::rational::{self, int, Rational};
use crate::reps::{
    cartan_helgason_admissible, casimir_factors, orthogonal_to, project_su, rho_shift_t, GroupDescriptor, IrrepLabel,
};
use crate::weights::{self, WeightVector};

/// One failing instance of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub theta: Vec<i64>,
    pub detail: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub run: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

impl CheckResult {
    pub fn new(name: &str) -> Self {
        CheckResult { name: name.into(), run: 0, failed: 0, first_failure: None }
    }

    /// Records one instance; `fail` is only called on failure.
    pub fn record(&mut self, ok: bool, fail: impl FnOnce() -> Failure) {
        self.run += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(fail());
            }
        }
    }

    /// Records a fallible instance; an error counts as a failure.
    pub fn record_result(&mut self, theta: &[i64], detail: &str, r: Result<Option<(String, String)>>) {
        match r {
            Ok(None) => self.record(true, || unreachable!()),
            Ok(Some((expected, got))) => {
                self.record(false, || Failure { theta: theta.to_vec(), detail: detail.into(), expected, got })
            }
            Err(e) => self.record(false, || Failure {
                theta: theta.to_vec(),
                detail: detail.into(),
                expected: "no error".into(),
                got: e.to_string(),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// All checks run for one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseId,
    pub bound: i64,
    pub checks: Vec<CheckResult>,
}

impl CaseReport {
    pub fn new(case: CaseId, bound: i64) -> Self {
        CaseReport { case, bound, checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn checks_run(&self) -> usize {
        self.checks.iter().map(|c| c.run).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn single(case: CaseId, bound: i64, check: CheckResult) -> Self {
        CaseReport { case, bound, checks: vec![check] }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

/// Everything needed to evaluate generators at one `ϑ`.
#[derive(Clone, Debug)]
pub struct EvalContext<'a> {
    pub case: &'a CaseRecord,
    pub theta: Vec<i64>,
    pub theta_label: IrrepLabel,
    pub tau_params: Vec<i64>,
    pub tau_label: IrrepLabel,
    /// `λ(ϑ)+ρ_ã`.
    pub lambda_rho: WeightVector,
    /// The ambient parameter `T(λ(ϑ)+ρ_ã)` in the Cartan of `G̃`.
    pub ambient: WeightVector,
    pub mu_rho: Option<WeightVector>,
    /// `ϑ+ρ` for `G`, with `SU` factors projected.
    pub nu_rho: WeightVector,
    values: RefCell<BTreeMap<String, Rational>>,
    casimirs: [OnceCell<Vec<Rational>>; 3],
}

impl<'a> EvalContext<'a> {
    pub fn new(case: &'a CaseRecord, theta: &[i64]) -> Result<Self> {
        let theta_label = case.theta_irrep(theta)?;
        let (_, tau_params) = case.pi_tau_params(theta)?;
        let tau_label = case.tau_irrep(&tau_params)?;
        let lambda_rho = case.lambda_rho(theta)?;
        let ambient =
            project_su(&case.g_tilde, &rho_shift_t(&case.g_tilde.rho, &case.hc.rho_a, &case.hc.embed, &lambda_rho)?);
        let mu_rho = match &case.hc.mu_rho {
            Some(m) => Some(WeightVector::new(m.apply(&ints(theta))?)),
            None => None,
        };
        let nu_rho = project_su(&case.g, &theta_label.highest_weight.add(&case.g.rho)?);
        Ok(EvalContext {
            case,
            theta: theta.to_vec(),
            theta_label,
            tau_params,
            tau_label,
            lambda_rho,
            ambient,
            mu_rho,
            nu_rho,
            values: RefCell::default(),
            casimirs: Default::default(),
        })
    }

    fn pick(&self, values: Vec<Rational>, factor: Option<usize>, name: &str) -> Result<Rational> {
        match factor {
            None => Ok(values.into_iter().fold(Rational::zero(), |a, x| a + x)),
            Some(i) => values
                .into_iter()
                .nth(i)
                .ok_or_else(|| Error::UnknownSymbol { case: self.case.id.to_string(), symbol: name.into() }),
        }
    }

    /// `|T_f|² − |ρ̃_f|²` for each factor `f` of `G̃`.
    pub fn ambient_casimirs(&self) -> Result<Vec<Rational>> {
        self.case
            .g_tilde
            .factor_ranges()
            .into_iter()
            .map(|(f, r)| {
                let t = self.ambient.slice(r);
                Ok(weights::form(&f.weyl, &t, &t)? - weights::form(&f.weyl, &f.rho, &f.rho)?)
            })
            .collect()
    }

    fn cached(&self, slot: usize, f: impl FnOnce() -> Result<Vec<Rational>>) -> Result<Vec<Rational>> {
        if let Some(v) = self.casimirs[slot].get() {
            return Ok(v.clone());
        }
        let v = f()?;
        Ok(self.casimirs[slot].get_or_init(|| v).clone())
    }

    pub fn eval(&self, g: &GeneratorSymbol) -> Result<Rational> {
        let label = |on: &LabelSide| match on {
            LabelSide::Theta => &self.theta_label,
            LabelSide::Tau => &self.tau_label,
        };
        match &g.method {
            EvalMethod::TildeCasimir { factor } => {
                self.pick(self.cached(0, || self.ambient_casimirs())?, *factor, &g.name)
            }
            EvalMethod::LambdaPowerSum { exp } => Ok(rational::power_sum(self.lambda_rho.coords(), *exp)),
            EvalMethod::FiberPowerSum { exp } => {
                let mu = self
                    .mu_rho
                    .as_ref()
                    .ok_or_else(|| Error::UnsupportedType(format!("case {} has no fiber parameters", self.case.id)))?;
                Ok(rational::power_sum(mu.coords(), *exp))
            }
            EvalMethod::CharPowerSum { exp } => Ok(rational::power_sum(self.nu_rho.coords(), *exp)),
            EvalMethod::Casimir { on, factor } => {
                let slot = match on {
                    LabelSide::Theta => 1,
                    LabelSide::Tau => 2,
                };
                self.pick(self.cached(slot, || casimir_factors(label(on)))?, *factor, &g.name)
            }
            EvalMethod::Euler { on, functional } => {
                let l = label(on);
                if functional.len() != l.highest_weight.len() {
                    return Err(Error::LengthMismatch { expected: l.highest_weight.len(), got: functional.len() });
                }
                Ok(dot(functional, l.highest_weight.coords()))
            }
        }
    }

    /// Memoized [`Self::eval`] by symbol name.
    pub fn eval_named(&self, name: &str) -> Result<Rational> {
        if let Some(v) = self.values.borrow().get(name) {
            return Ok(v.clone());
        }
        let v = self.eval(self.case.symbol(name)?)?;
        self.values.borrow_mut().insert(name.to_string(), v.clone());
        Ok(v)
    }

    /// `Σ terms` of a relation; zero when the relation holds at `ϑ`.
    pub fn residual(&self, rel: &RelationIdentity) -> Result<Rational> {
        let mut total = Rational::zero();
        for t in &rel.terms {
            let mut v = t.coeff.clone();
            for (name, p) in &t.factors {
                v *= rational::pow(&self.eval_named(name)?, *p);
            }
            total += v;
        }
        Ok(total)
    }
}

/// The scalar by which generator `g` acts on the `ϑ`-isotypic component.
pub fn evaluate_generator(case: &CaseRecord, g: &GeneratorSymbol, theta: &DiscElement) -> Result<Rational> {
    EvalContext::new(case, &theta.params)?.eval(g)
}

/// Evaluates every stored relation on every `ϑ` in the box.
pub fn check_relations(case: &CaseRecord, bound: i64) -> CaseReport {
    let mut c = CheckResult::new("relations");
    for theta in case.theta_space.enumerate(bound) {
        match EvalContext::new(case, &theta) {
            Err(e) => c.record_result(&theta, "context", Err(e)),
            Ok(ctx) => {
                for rel in &case.relations {
                    let r = ctx.residual(rel).map(|v| (!v.is_zero()).then(|| ("0".into(), rational::to_string(&v))));
                    c.record_result(&theta, &rel.label, r);
                }
            }
        }
    }
    CaseReport::single(case.id, bound, c)
}

/// The affine map `S_τ` for `τ` given by its parameters.
pub fn transfer_map(case: &CaseRecord, tau: &[i64]) -> Result<AffineMap> {
    case.tau_irrep(tau)?;
    let source_dim = case.hc.rho_a.len();
    AffineMap::new(case.transfer.linear.clone(), case.transfer.offset.apply(&ints(tau))?, source_dim)
}

/// `S_τ(λ+ρ_ã)` against `ϑ+ρ` modulo the Weyl group of `G`, at one `ϑ`.
fn transfer_at(case: &CaseRecord, theta: &[i64]) -> Result<Option<(String, String)>> {
    let ctx = EvalContext::new(case, theta)?;
    let s = transfer_map(case, &ctx.tau_params)?;
    let image = project_su(&case.g, &WeightVector::new(s.apply(ctx.lambda_rho.coords())?));
    Ok((!weights::weyl_orbit_equal(&case.g.weyl, &image, &ctx.nu_rho)?)
        .then(|| (ctx.nu_rho.to_string(), image.to_string())))
}

/// The transfer-map criterion on every `ϑ` in the box.
pub fn check_transfer(case: &CaseRecord, bound: i64) -> CaseReport {
    let mut c = CheckResult::new("transfer");
    for theta in case.theta_space.enumerate(bound) {
        c.record_result(&theta, "S_tau", transfer_at(case, &theta));
    }
    CaseReport::single(case.id, bound, c)
}

/// `T(λ(ϑ)+ρ_ã)` is the infinitesimal character `π(ϑ)+ρ̃`.
pub fn check_rho_shift(case: &CaseRecord, bound: i64) -> CheckResult {
    let mut c = CheckResult::new("rho-shift");
    for theta in case.theta_space.enumerate(bound) {
        let r = (|| {
            let ctx = EvalContext::new(case, &theta)?;
            let (pi, _) = case.pi_tau(&DiscElement { case: case.id, params: theta.clone() })?;
            let expected = project_su(&case.g_tilde, &pi.highest_weight.add(&case.g_tilde.rho)?);
            Ok((!weights::weyl_orbit_equal(&case.g_tilde.weyl, &expected, &ctx.ambient)?)
                .then(|| (expected.to_string(), ctx.ambient.to_string())))
        })();
        c.record_result(&theta, "T", r);
    }
    c
}

/// P-side Casimir symbols agree with the Casimir of the `π(ϑ)` label.
pub fn check_pi_casimir(case: &CaseRecord, bound: i64) -> CheckResult {
    let mut c = CheckResult::new("p-side-casimir");
    let syms: Vec<&GeneratorSymbol> =
        case.symbols.iter().filter(|s| matches!(s.method, EvalMethod::TildeCasimir { .. })).collect();
    for theta in case.theta_space.enumerate(bound) {
        let ctx = EvalContext::new(case, &theta);
        let pi = case.pi_tau(&DiscElement { case: case.id, params: theta.clone() });
        for s in &syms {
            let r = (|| {
                let ctx = ctx.as_ref().map_err(Clone::clone)?;
                let pi = &pi.as_ref().map_err(Clone::clone)?.0;
                let got = ctx.eval(s)?;
                let EvalMethod::TildeCasimir { factor } = &s.method else { unreachable!() };
                let expected = ctx.pick(casimir_factors(pi)?, *factor, &s.name)?;
                Ok((got != expected).then(|| (rational::to_string(&expected), rational::to_string(&got))))
            })();
            c.record_result(&theta, &s.name, r);
        }
    }
    c
}

/// `rank G̃/H̃ + rank K/H = rank G/H`, for the tabulated and realized triples.
pub fn check_rank_identity(case: &CaseRecord) -> CheckResult {
    let mut c = CheckResult::new("rank-identity");
    for (what, (a, b, s)) in [("table", case.table_ranks), ("realized", case.realized_ranks)] {
        c.record(a + b == s, || Failure {
            theta: vec![],
            detail: what.into(),
            expected: s.to_string(),
            got: (a + b).to_string(),
        });
    }
    let (a, b, _) = case.realized_ranks;
    let counts = (case.generators.tilde.len() as u32, case.generators.fiber.len() as u32);
    c.record(counts == (a, b), || Failure {
        theta: vec![],
        detail: "generator counts".into(),
        expected: format!("{a}+{b}"),
        got: format!("{}+{}", counts.0, counts.1),
    });
    let degs = (case.degrees.tilde.len() as u32, case.degrees.fiber.len() as u32);
    c.record(degs == counts, || Failure {
        theta: vec![],
        detail: "degree counts".into(),
        expected: format!("{}+{}", counts.0, counts.1),
        got: format!("{}+{}", degs.0, degs.1),
    });
    c
}

/// Largest `π` box used for the branching checks of a case.
pub fn pi_bound(case: &CaseRecord, bound: i64) -> i64 {
    if case.g_tilde == GroupDescriptor::so(16) {
        bound.min(6)
    } else {
        bound
    }
}

/// `dim π = Σ dim ϑ` over the branching of each `π` in the box.
pub fn check_dimension(case: &CaseRecord, bound: i64) -> CheckResult {
    let mut c = CheckResult::new("dimension-conservation");
    for pi in case.pi_space.enumerate(pi_bound(case, bound)) {
        let r = (|| {
            let label = case.pi_irrep(&pi)?;
            let expected = label.dimension()?;
            let mut got = num_bigint::BigInt::zero();
            for t in branch_case_params(case, &pi)? {
                got += case.theta_irrep(&t.params)?.dimension()?;
            }
            Ok((expected != got).then(|| (expected.to_string(), got.to_string())))
        })();
        c.record_result(&pi, "pi", r);
    }
    c
}

/// Branching images over the `π` box are disjoint, invert `ϑ ↦ π(ϑ)`, and
/// cover the `ϑ` box.
pub fn check_strong_multiplicity_free(case: &CaseRecord, bound: i64) -> CheckResult {
    let mut c = CheckResult::new("strong-multiplicity-free");
    let thetas = case.theta_space.enumerate(bound);
    let mut pb = 0;
    for t in &thetas {
        match case.pi_tau_params(t) {
            Ok((p, _)) => pb = p.iter().fold(pb, |m, x| m.max(x.abs())),
            Err(e) => c.record_result(t, "pi(theta)", Err(e)),
        }
    }
    let mut owner: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    for pi in case.pi_space.enumerate(pb) {
        match branch_case_params(case, &pi) {
            Err(e) => c.record_result(&pi, "branch", Err(e)),
            Ok(images) => {
                for t in images {
                    let back = case.pi_tau_params(&t.params).map(|(p, _)| p);
                    c.record(back.as_ref() == Ok(&pi), || Failure {
                        theta: t.params.clone(),
                        detail: "pi(theta) inverts branching".into(),
                        expected: format!("{pi:?}"),
                        got: format!("{back:?}"),
                    });
                    if let Some(prev) = owner.insert(t.params.clone(), pi.clone()) {
                        c.record(false, || Failure {
                            theta: t.params.clone(),
                            detail: "disjointness".into(),
                            expected: format!("only in {prev:?}"),
                            got: format!("also in {pi:?}"),
                        });
                    }
                }
            }
        }
    }
    for t in &thetas {
        c.record(owner.contains_key(t), || Failure {
            theta: t.clone(),
            detail: "exhaustion".into(),
            expected: "covered by some pi".into(),
            got: "missing".into(),
        });
    }
    c
}

/// Largest ambient rank for which the Cartan–Helgason check enumerates all
/// dominant candidates.
pub const CH_MAX_DIM: usize = 4;

fn candidate_weights(dim: usize, bound: i64) -> Vec<WeightVector> {
    let steps: Vec<Rational> = (-2 * bound..=2 * bound).map(|x| rational::frac(x, 2)).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Rational>| {
                steps.iter().map(move |s| {
                    let mut w = v.clone();
                    w.push(s.clone());
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WeightVector::new).collect()
}

/// The Cartan–Helgason criterion selects exactly the `π` labels of the case
/// among all dominant weights with coordinates `≤ bound`.
pub fn check_cartan_helgason(case: &CaseRecord, bound: i64) -> Option<CheckResult> {
    let ch = case.ch.as_ref()?;
    if case.g_tilde.dim() > CH_MAX_DIM {
        return None;
    }
    let mut c = CheckResult::new("cartan-helgason");
    let kill = orthogonal_to(&ch.kill);
    for w in candidate_weights(case.g_tilde.dim(), bound) {
        let Ok(label) = IrrepLabel::new(case.g_tilde.clone(), w.clone()) else { continue };
        let admissible = cartan_helgason_admissible(&w, &ch.restricted_roots, &kill);
        let listed = pi_params_of(case, &label).is_ok();
        c.record(admissible == listed, || Failure {
            theta: vec![],
            detail: w.to_string(),
            expected: format!("listed={listed}"),
            got: format!("admissible={admissible}"),
        });
    }
    Some(c)
}

/// Generator degrees against the stored graded-dimension model, and
/// uniqueness of the degree multiset among small alternatives.
pub fn check_degrees(case: &CaseRecord, nmax: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if case.hilbert.is_some() {
        let mut c = CheckResult::new("generator-degrees");
        let r = hilbert::check_generator_degrees(case, nmax).map(|ok| {
            (!ok).then(|| {
                let degrees = hilbert::claimed_degrees(case);
                (
                    format!("{:?}", hilbert::v_series(&degrees, nmax)),
                    format!("{:?}", case.hilbert.as_ref().map(|h| h.series(nmax))),
                )
            })
        });
        c.record_result(&[], "series", r);
        out.push(c);
    }
    let mut u = CheckResult::new("degree-uniqueness");
    let degrees = hilbert::claimed_degrees(case);
    let collisions = hilbert::sequence_collisions(&degrees, nmax, 6, 7);
    u.record(collisions.is_empty(), || Failure {
        theta: vec![],
        detail: format!("{degrees:?}"),
        expected: "no other multiset".into(),
        got: format!("{collisions:?}"),
    });
    out.push(u);
    out
}

/// Result of an independence test on a finite sample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceCertificate {
    pub independent: bool,
    pub columns: usize,
    pub points: usize,
    /// Points whose rows form an invertible minor when independent.
    pub witness: Vec<Vec<i64>>,
}

/// Exponent vectors of length `vars` with total degree `≤ degree`.
pub fn monomial_exponents(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=degree - used).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    out
}

fn moment_row(values: &[Rational], exps: &[Vec<u32>]) -> Vec<Rational> {
    exps.iter().map(|e| values.iter().zip(e).fold(rational::one(), |acc, (v, &k)| acc * rational::pow(v, k))).collect()
}

/// Full column rank of the moment matrix of `gens` on the `ϑ` box: no
/// nonzero polynomial of total degree `≤ degree` vanishes on the sample.
pub fn independence_certificate(
    case: &CaseRecord,
    gens: &[GeneratorSymbol],
    bound: i64,
    degree: u32,
) -> Result<IndependenceCertificate> {
    if degree == 0 || gens.is_empty() {
        return Ok(IndependenceCertificate { independent: true, columns: 1, points: 0, witness: vec![] });
    }
    let exps = monomial_exponents(gens.len(), degree);
    let thetas = case.theta_space.enumerate(bound);
    if thetas.len() < exps.len() {
        return Err(Error::InsufficientSample { points: thetas.len(), columns: exps.len() });
    }
    let mut span = Echelon::default();
    let mut witness = Vec::new();
    for t in &thetas {
        let ctx = EvalContext::new(case, t)?;
        let values: Vec<Rational> = gens.iter().map(|g| ctx.eval(g)).collect::<Result<_>>()?;
        if span.insert(&moment_row(&values, &exps)) {
            witness.push(t.clone());
            if span.rank() == exps.len() {
                break;
            }
        }
    }
    Ok(IndependenceCertificate {
        independent: span.rank() == exps.len(),
        columns: exps.len(),
        points: thetas.len(),
        witness,
    })
}

/// The case's generator list of the two polynomial algebras.
pub fn claimed_generators(case: &CaseRecord) -> Result<Vec<GeneratorSymbol>> {
    case.generators.tilde.iter().chain(&case.generators.fiber).map(|n| case.symbol(n).cloned()).collect()
}

pub fn check_independence(case: &CaseRecord, bound: i64, degree: u32) -> CheckResult {
    let mut c = CheckResult::new("independence");
    let r = claimed_generators(case).and_then(|g| independence_certificate(case, &g, bound, degree)).map(|cert| {
        (!cert.independent).then(|| (format!("rank {}", cert.columns), format!("rank {}", cert.witness.len())))
    });
    c.record_result(&[], "moment matrix", r);
    c
}

/// Name of the check certifying that in case (ix) the Casimirs of `G̃` and
/// `G` alone generate an index-2 image.
pub const IX_WITNESS: &str = "dl-only-subalgebra-index-2";

/// Evidence that `{C_Gt, C_G}` cannot see the sign of `k` in case (ix).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexTwoWitness {
    /// Parity of `k` lies outside the span of monomials of degree `≤ 4`.
    pub parity_outside_span: bool,
    /// A pair `ϑ, ϑ′` with equal Casimirs and different `E_K`.
    pub separating_pair: Option<(Vec<i64>, Vec<i64>)>,
    /// `E_K²` lies in the span of the Casimir monomials.
    pub square_in_span: bool,
}

impl IndexTwoWitness {
    pub fn holds(&self) -> bool {
        self.parity_outside_span && self.separating_pair.is_some() && self.square_in_span
    }
}

pub fn ix_witness(case: &CaseRecord, bound: i64) -> Result<IndexTwoWitness> {
    if case.id.tag != CaseTag::Ix {
        return Err(Error::UnknownCase(format!("{} has no index-2 witness", case.id)));
    }
    let thetas = case.theta_space.enumerate(bound);
    let exps = monomial_exponents(2, 4);
    let mut cas = Vec::new();
    let mut parity = Vec::new();
    let mut ek = Vec::new();
    for t in &thetas {
        let ctx = EvalContext::new(case, t)?;
        cas.push(vec![ctx.eval_named("C_Gt")?, ctx.eval_named("C_G")?]);
        parity.push(int(t[1].rem_euclid(2)));
        ek.push(ctx.eval_named("E_K")?);
    }
    // Columns of the moment matrix as vectors over the sample.
    let cols: Vec<Vec<Rational>> =
        (0..exps.len()).map(|i| cas.iter().map(|v| moment_row(v, &exps[i..=i])[0].clone()).collect()).collect();
    let mut span = Echelon::default();
    for col in &cols {
        span.insert(col);
    }
    let outside = |v: &[Rational]| span.reduce(v).iter().any(|x| !x.is_zero());
    let squares: Vec<Rational> = ek.iter().map(|x| x * x).collect();
    let mut seen: BTreeMap<Vec<Rational>, (usize, Rational)> = BTreeMap::new();
    let mut pair = None;
    for (i, v) in cas.iter().enumerate() {
        match seen.get(v) {
            Some((j, e)) if *e != ek[i] => {
                pair = Some((thetas[*j].clone(), thetas[i].clone()));
                break;
            }
            Some(_) => {}
            None => {
                seen.insert(v.clone(), (i, ek[i].clone()));
            }
        }
    }
    Ok(IndexTwoWitness {
        parity_outside_span: outside(&parity),
        separating_pair: pair,
        square_in_span: !outside(&squares),
    })
}

/// Options for [`verify_case`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub bound: i64,
    pub degree: u32,
    pub nmax: u32,
    pub ch_bound: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { bound: 8, degree: 2, nmax: 12, ch_bound: 3 }
    }
}

/// Runs the full suite for one case.
pub fn verify_case(case: &CaseRecord, opts: &VerifyOptions) -> CaseReport {
    let b = opts.bound;
    let mut checks = Vec::new();
    checks.extend(check_relations(case, b).checks);
    checks.extend(check_transfer(case, b).checks);
    checks.push(check_rho_shift(case, b));
    checks.push(check_pi_casimir(case, b));
    checks.push(check_rank_identity(case));
    checks.push(check_dimension(case, b));
    checks.push(check_strong_multiplicity_free(case, b));
    checks.extend(check_cartan_helgason(case, opts.ch_bound));
    checks.extend(check_degrees(case, opts.nmax));
    checks.push(check_independence(case, b, opts.degree));
    if case.id.tag == CaseTag::Ix {
        let mut c = CheckResult::new(IX_WITNESS);
        let r = ix_witness(case, b).map(|w| (!w.holds()).then(|| ("witness holds".into(), format!("{w:?}"))));
        c.record_result(&[], "parity", r);
        checks.push(c);
    }
    if case.id.tag == CaseTag::Star {
        checks.extend(dgx::suite(case, b.min(6)));
    }
    CaseReport { case: case.id, bound: b, checks }
}

//! The polynomial model `𝔻_G(X) ≅ ℂ[x,y,z]` of the `Spin(8)×Spin(8)`
//! triple, with `x=(j+3)²`, `y=(j′+3)²`, `z=(a+3)²`: generators, bounded
//! subalgebra membership, the symmetry witness for `x ∉ R`, and the
//! decomposition `ℂ[x,y,z] = R + Rx`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::CaseRecord;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, TrackedSpan};
use crate::poly::{monomial_basis, Poly};
use crate::rational::{self, frac, int, Rational};
use crate::verify::{CheckResult, EvalContext, Failure};

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn x() -> Poly {
    Poly::var(&VARS, 0)
}

pub fn y() -> Poly {
    Poly::var(&VARS, 1)
}

pub fn z() -> Poly {
    Poly::var(&VARS, 2)
}

pub fn constant(c: Rational) -> Poly {
    Poly::constant(&VARS, c)
}

fn c(n: i64) -> Poly {
    constant(int(n))
}

/// `r₁, …, r₄, q, p₁, p₂` as displayed for the model.
pub fn dgx_generators() -> BTreeMap<String, Poly> {
    let (x, y, z) = (x(), y(), z());
    let r1 = &(&(&x + &y) + &z) + &c(1);
    let r2 = x.pow(2) + c(6) * &z * &x + z.pow(2) + y.pow(2) + c(6) * y.clone() + c(1);
    let r3 = x.pow(3)
        + c(15) * &z * &x.pow(2)
        + c(15) * &z.pow(2) * &x
        + z.pow(3)
        + y.pow(3)
        + c(15) * y.pow(2)
        + c(15) * y.clone()
        + c(1);
    let r4 = (&x - &c(1)) * (&y - &z);
    let q = (&z - &c(9)).scale(&frac(3, 4));
    let p1 = &x - &c(9);
    let p2 = &y - &c(9);
    [("r1", r1), ("r2", r2), ("r3", r3), ("r4", r4), ("q", q), ("p1", p1), ("p2", p2)]
        .into_iter()
        .map(|(n, p)| (n.to_string(), p))
        .collect()
}

/// `16ν₁ν₂ν₃ν₄` for `ν = ϑ+ρ`, written in `x, y, z`.
pub fn pfaffian_r4() -> Poly {
    (z() - x()) * (y() - c(1))
}

/// Weighted degree of a generator: its total degree in `x, y, z`.
fn weight(p: &Poly) -> u32 {
    p.degree()
}

/// The generators `q, r₁, r₂, r₃, r₄` of `R`.
pub fn r_generators() -> Vec<(String, Poly)> {
    let g = dgx_generators();
    ["q", "r1", "r2", "r3", "r4"].into_iter().map(|n| (n.to_string(), g[n].clone())).collect()
}

/// `R` with `r₄` replaced by [`pfaffian_r4`].
pub fn r_generators_pfaffian() -> Vec<(String, Poly)> {
    let mut g = r_generators();
    g[4].1 = pfaffian_r4();
    g
}

/// A polynomial in named generators: `Σ c·Π gᵢ^{eᵢ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub gens: Vec<String>,
    pub terms: Vec<(Rational, Vec<u32>)>,
}

impl Expression {
    pub fn evaluate(&self, gens: &[(String, Poly)]) -> Poly {
        self.terms.iter().fold(Poly::zero(&VARS), |acc, (coef, e)| {
            let m = gens.iter().zip(e).fold(constant(coef.clone()), |m, ((_, g), &k)| &m * &g.pow(k));
            &acc + &m
        })
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(coef, e)| {
                let mut factors: Vec<String> = self
                    .gens
                    .iter()
                    .zip(e)
                    .filter(|(_, k)| **k > 0)
                    .map(|(g, k)| if *k == 1 { g.clone() } else { format!("{g}^{k}") })
                    .collect();
                factors.insert(0, rational::to_string(coef));
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Span of all products of generators of total degree `≤ bound`.
#[derive(Clone, Debug)]
pub struct SubalgebraSpan {
    pub bound: u32,
    gens: Vec<(String, Poly)>,
    basis: Vec<Vec<u32>>,
    products: Vec<Vec<u32>>,
    span: Span,
}

#[derive(Clone, Debug)]
enum Span {
    Tracked(TrackedSpan),
    Plain(Echelon),
}

impl SubalgebraSpan {
    /// A span that can report explicit combinations.
    pub fn new(gens: &[(String, Poly)], bound: u32) -> Result<Self> {
        Self::build(gens, bound, true)
    }

    /// A span that only answers membership; much cheaper at high degree.
    pub fn membership_only(gens: &[(String, Poly)], bound: u32) -> Result<Self> {
        Self::build(gens, bound, false)
    }

    fn build(gens: &[(String, Poly)], bound: u32, tracked: bool) -> Result<Self> {
        let basis = monomial_basis(VARS.len(), bound);
        let mut span =
            if tracked { Span::Tracked(TrackedSpan::new(basis.len())) } else { Span::Plain(Echelon::default()) };
        let mut products = Vec::new();
        let weights: Vec<u32> = gens.iter().map(|(_, g)| weight(g)).collect();
        let mut stack = vec![(Vec::<u32>::new(), constant(rational::one()), 0u32)];
        while let Some((e, p, w)) = stack.pop() {
            if e.len() == gens.len() {
                let v = p.coordinates(&basis);
                match &mut span {
                    Span::Tracked(t) => {
                        t.push(&v)?;
                    }
                    Span::Plain(e) => {
                        e.insert(&v);
                    }
                }
                products.push(e);
                continue;
            }
            let i = e.len();
            let mut k = 0;
            let mut q = p;
            loop {
                let mut e2 = e.clone();
                e2.push(k);
                stack.push((e2, q.clone(), w + k * weights[i]));
                if weights[i] == 0 || w + (k + 1) * weights[i] > bound {
                    break;
                }
                q = &q * &gens[i].1;
                k += 1;
            }
        }
        Ok(SubalgebraSpan { bound, gens: gens.to_vec(), basis, products, span })
    }

    /// A combination of generator products equal to `f`, if one exists.
    pub fn express(&self, f: &Poly) -> Result<Option<Expression>> {
        if f.degree() > self.bound {
            return Err(Error::DegreeBound { bound: self.bound, degree: f.degree() });
        }
        let Span::Tracked(span) = &self.span else {
            return Err(Error::UnsupportedType("membership-only span cannot express combinations".into()));
        };
        let Some(combo) = span.express(&f.coordinates(&self.basis))? else {
            return Ok(None);
        };
        let mut terms: Vec<(Rational, Vec<u32>)> =
            combo.into_iter().zip(&self.products).filter(|(c, _)| !c.is_zero()).map(|(c, e)| (c, e.clone())).collect();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        Ok(Some(Expression { gens: self.gens.iter().map(|(n, _)| n.clone()).collect(), terms }))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        if f.degree() > self.bound {
            return Err(Error::DegreeBound { bound: self.bound, degree: f.degree() });
        }
        let v = f.coordinates(&self.basis);
        match &self.span {
            Span::Tracked(t) => t.contains(&v),
            Span::Plain(e) => Ok(e.reduce(&v).iter().all(Zero::is_zero)),
        }
    }
}

/// `f` as an element of the subalgebra generated by `gens`, within total
/// degree `degree_bound`.
pub fn membership(f: &Poly, gens: &[(String, Poly)], degree_bound: u32) -> Result<Option<Expression>> {
    if degree_bound < f.degree() {
        return Err(Error::DegreeBound { bound: degree_bound, degree: f.degree() });
    }
    SubalgebraSpan::new(gens, degree_bound)?.express(f)
}

/// Transcript of the argument that `x ∉ R`: at `z = 1` every generator of
/// `R` is symmetric in `x ↔ y` while `x` is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryWitness {
    pub generators: Vec<(String, bool)>,
    pub x_symmetric: bool,
}

impl SymmetryWitness {
    pub fn holds(&self) -> bool {
        self.generators.iter().all(|(_, s)| *s) && !self.x_symmetric
    }
}

fn symmetric_at_z1(p: &Poly) -> bool {
    let s = p.substitute(2, &rational::one());
    s == s.swap(0, 1)
}

pub fn symmetry_witness(gens: &[(String, Poly)]) -> SymmetryWitness {
    SymmetryWitness {
        generators: gens.iter().map(|(n, g)| (n.clone(), symmetric_at_z1(g))).collect(),
        x_symmetric: symmetric_at_z1(&x()),
    }
}

pub fn x_not_in_r_witness() -> SymmetryWitness {
    symmetry_witness(&r_generators())
}

/// `(g, h)` with `x^k = g + h·x`, built from `xy` and `x+y`.
fn x_power(k: u32) -> (Poly, Poly) {
    let (xy, s) = (x() * y(), x() + y());
    let (mut g, mut h) = (c(1), c(0));
    for _ in 0..k {
        let g2 = -&(&h * &xy);
        h = &g + &(&h * &s);
        g = g2;
    }
    (g, h)
}

/// `(g, h)` with `y^k = g + h·x`, from `y = (x+y) − x`.
fn y_power(k: u32) -> (Poly, Poly) {
    let (xy, s) = (x() * y(), x() + y());
    let (mut g, mut h) = (c(1), c(0));
    for _ in 0..k {
        let g2 = &(&g * &s) + &(&h * &xy);
        h = -&g;
        g = g2;
    }
    (g, h)
}

/// `ℂ[x,y,z] = R + Rx` made explicit up to a degree bound.
#[derive(Clone, Debug)]
pub struct RPlusRx {
    span: SubalgebraSpan,
}

impl RPlusRx {
    pub fn new(degree_bound: u32) -> Result<Self> {
        Ok(RPlusRx { span: SubalgebraSpan::membership_only(&r_generators(), degree_bound)? })
    }

    /// `(g, h)` with `f = g + h·x` and `g, h` certified in `R`.
    pub fn decompose(&self, f: &Poly) -> Result<(Poly, Poly)> {
        let bound = self.span.bound;
        if f.degree() > bound {
            return Err(Error::DegreeBound { bound, degree: f.degree() });
        }
        let (mut g, mut h) = (Poly::zero(&VARS), Poly::zero(&VARS));
        let xy = x() * y();
        for (e, coef) in f.terms() {
            let (l, m, n) = (e[0], e[1], e[2]);
            let common = &(&xy.pow(l.min(m)) * &z().pow(n)).scale(coef);
            let (gi, hi) = if l >= m { x_power(l - m) } else { y_power(m - l) };
            g = &g + &(common * &gi);
            h = &h + &(common * &hi);
        }
        let not_found = |what: &str| Error::DecompositionNotFound { bound, monomial: format!("{what} for {f}") };
        if &g + &(&h * &x()) != *f {
            return Err(not_found("recomposition"));
        }
        if !self.span.contains(&g)? {
            return Err(not_found("g outside R"));
        }
        if !self.span.contains(&h)? {
            return Err(not_found("h outside R"));
        }
        Ok((g, h))
    }
}

/// `f = g + h·x` with `g, h ∈ R`, within total degree `degree_bound`.
pub fn decompose_r_plus_rx(f: &Poly, degree_bound: u32) -> Result<(Poly, Poly)> {
    RPlusRx::new(degree_bound)?.decompose(f)
}

/// `q_a(r₁)` and `q_a(−r₁² + r₂ + 2r₄)`: specialization at `z = (a+3)²`.
pub fn q_a_images(a: i64) -> (Poly, Poly) {
    let g = dgx_generators();
    let zval = int((a + 3) * (a + 3));
    let r1 = g["r1"].substitute(2, &zval);
    let combo = &(&g["r2"] - &g["r1"].pow(2)) + &g["r4"].scale(&int(2));
    (r1, combo.substitute(2, &zval))
}

/// The closed forms those images should take.
pub fn q_a_expected(a: i64) -> (Poly, Poly) {
    let zval = int((a + 3) * (a + 3));
    let r1 = &(x() + y()) + &constant(&zval + int(1));
    let combo = (x() - y()).scale(&((zval - int(1)) * int(2)));
    (r1, combo)
}

/// The point `(x, y, z)` attached to `ϑ = (j, j′, a)`.
pub fn point(theta: &[i64]) -> Vec<Rational> {
    theta.iter().map(|&t| int((t + 3) * (t + 3))).collect()
}

fn fail(theta: &[i64], detail: &str, expected: String, got: String) -> impl FnOnce() -> Failure {
    let theta = theta.to_vec();
    let detail = detail.to_string();
    move || Failure { theta, detail, expected, got }
}

fn membership_check(span: &SubalgebraSpan) -> CheckResult {
    let mut chk = CheckResult::new("dgx-membership");
    let gens = r_generators();
    for (name, f) in [("z", z()), ("x+y", x() + y()), ("xz+y", x() * z() + y()), ("xy", x() * y())] {
        let r = span.express(&f).map(|e| match e {
            Some(e) if e.evaluate(&gens) == f => None,
            Some(e) => Some((f.to_string(), e.evaluate(&gens).to_string())),
            None => Some((format!("{name} in R"), "absent".into())),
        });
        chk.record_result(&[], name, r);
    }
    chk
}

fn identity_check() -> CheckResult {
    let mut chk = CheckResult::new("dgx-identities");
    let g = dgx_generators();
    let (x, y, z) = (x(), y(), z());
    let xz_y = &(&x * &z) + &y;
    let lhs = xz_y.scale(&int(4));
    let rhs = &(&(&g["r2"] + &g["r4"].scale(&int(2))) - &(&x + &y).pow(2)) - &(&z + &c(1)).pow(2);
    chk.record(lhs == rhs, fail(&[], "4(xz+y)", lhs.to_string(), rhs.to_string()));
    let lhs = &x * &y;
    let rhs = &(&g["r4"] + &xz_y) - &z;
    chk.record(lhs == rhs, fail(&[], "xy = r4 + (xz+y) - z", lhs.to_string(), rhs.to_string()));
    chk
}

fn x_not_in_r_check() -> Result<CheckResult> {
    let mut chk = CheckResult::new("x-not-in-R");
    let w = x_not_in_r_witness();
    chk.record(w.holds(), fail(&[], "symmetry at z=1", "witness holds".into(), format!("{w:?}")));
    let absent = membership(&x(), &r_generators(), 6)?.is_none();
    chk.record(absent, fail(&[], "membership at bound 6", "absent".into(), "present".into()));
    Ok(chk)
}

fn r_plus_rx_check(bound: u32) -> Result<CheckResult> {
    let mut chk = CheckResult::new("r-plus-rx");
    let module = RPlusRx::new(bound)?;
    for e in monomial_basis(VARS.len(), bound) {
        let f = Poly::monomial(&VARS, e.clone(), rational::one());
        let r = module.decompose(&f).map(|_| None);
        chk.record_result(&[], &f.to_string(), r.map(|o: Option<(String, String)>| o));
    }
    Ok(chk)
}

fn tables_check(case: &CaseRecord, bound: i64) -> CheckResult {
    let mut chk = CheckResult::new("dgx-casimir-tables");
    let g = dgx_generators();
    let pf = pfaffian_r4();
    for theta in case.theta_space.enumerate(bound) {
        let r = (|| {
            let ctx = EvalContext::new(case, &theta)?;
            let pt = point(&theta);
            let nu = ctx.nu_rho.coords();
            let mut pairs: Vec<(&str, Rational, Rational)> = vec![
                ("p1", g["p1"].eval(&pt)?, ctx.eval_named("C_Gt1")?),
                ("p2", g["p2"].eval(&pt)?, ctx.eval_named("C_Gt2")?),
                ("q", g["q"].eval(&pt)?, ctx.eval_named("C_K")?),
                ("(r1-28)/2", (g["r1"].eval(&pt)? - int(28)) / int(2), ctx.eval_named("C_G")?),
                ("pfaffian", pf.eval(&pt)?, nu.iter().fold(int(16), |a, v| a * v)),
            ];
            for (k, name) in [(1u32, "r1"), (2, "r2"), (3, "r3")] {
                let ps = nu.iter().fold(Rational::zero(), |a, v| a + rational::pow(v, 2 * k));
                pairs.push((name, g[name].eval(&pt)?, rational::pow(&int(2), 2 * k - 1) * ps));
            }
            Ok(pairs
                .into_iter()
                .find(|(_, a, b)| a != b)
                .map(|(n, a, b)| (format!("{n} = {}", rational::to_string(&b)), rational::to_string(&a))))
        })();
        chk.record_result(&theta, "generator values", r);
    }
    chk
}

fn same_subalgebra_check() -> Result<CheckResult> {
    let mut chk = CheckResult::new("dgx-r4-same-subalgebra");
    let displayed = SubalgebraSpan::new(&r_generators(), 4)?;
    let pfaff = SubalgebraSpan::new(&r_generators_pfaffian(), 4)?;
    let r4 = dgx_generators()["r4"].clone();
    chk.record(displayed.contains(&pfaffian_r4())?, fail(&[], "pfaffian in R", "present".into(), "absent".into()));
    chk.record(pfaff.contains(&r4)?, fail(&[], "displayed r4 in R'", "present".into(), "absent".into()));
    Ok(chk)
}

fn q_a_check(bound: i64) -> CheckResult {
    let mut chk = CheckResult::new("q-a-specialization");
    for a in 0..=bound {
        let (got, want) = (q_a_images(a), q_a_expected(a));
        chk.record(
            got == want,
            fail(&[a], "q_a", format!("{} ; {}", want.0, want.1), format!("{} ; {}", got.0, got.1)),
        );
    }
    chk
}

/// Polynomial-model checks for the `Spin(8)×Spin(8)` case.
pub fn suite(case: &CaseRecord, bound: i64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let wrap = |name: &str, r: Result<CheckResult>| {
        r.unwrap_or_else(|e| {
            let mut c = CheckResult::new(name);
            c.record_result(&[], "setup", Err(e));
            c
        })
    };
    out.push(wrap("dgx-membership", SubalgebraSpan::new(&r_generators(), 4).map(|s| membership_check(&s))));
    out.push(identity_check());
    out.push(wrap("x-not-in-R", x_not_in_r_check()));
    out.push(wrap("r-plus-rx", r_plus_rx_check(8)));
    out.push(tables_check(case, bound));
    out.push(wrap("dgx-r4-same-subalgebra", same_subalgebra_check()));
    out.push(q_a_check(bound));
    out
}

//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// A polynomial over a fixed ordered list of variable names. Terms map
/// exponent vectors to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultivariatePolynomial {
    pub vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

pub type Poly = MultivariatePolynomial;

impl MultivariatePolynomial {
    pub fn zero(vars: &[&str]) -> Self {
        Poly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    /// The `i`-th variable.
    pub fn var(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, rational::one())
    }

    pub fn monomial(vars: &[&str], exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    fn same_ring(&self, c: Rational) -> Self {
        let mut p = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        p.add_term(vec![0; self.vars.len()], c);
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut p = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, v) in &self.terms {
            p.add_term(e.clone(), v * c);
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(self.same_ring(rational::one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::LengthMismatch { expected: self.vars.len(), got: point.len() });
        }
        Ok(self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            acc + e.iter().zip(point).fold(c.clone(), |m, (&k, x)| m * rational::pow(x, k))
        }))
    }

    /// Substitutes the constant `value` for variable `i`; the variable list is kept.
    pub fn substitute(&self, i: usize, value: &Rational) -> Self {
        let mut p = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[i], 0);
            p.add_term(e2, c * rational::pow(value, k));
        }
        p
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut p = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i, j);
            p.add_term(e2, c.clone());
        }
        p
    }

    /// Coefficients on the given monomial basis.
    pub fn coordinates(&self, basis: &[Vec<u32>]) -> Vec<Rational> {
        basis.iter().map(|e| self.coefficient(e)).collect()
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variable lists");
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&int(-1))
    }
}

fn exponent_sum(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut p = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                p.add_term(exponent_sum(e1, e2), c1 * c2);
            }
        }
        p
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest total degree first.
        let mut terms: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", rational::to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::to_string(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Exponent vectors in `vars` variables of total degree `≤ degree`.
pub fn monomial_basis(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=degree - used).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const V: [&str; 3] = ["x", "y", "z"];

    fn x() -> Poly {
        Poly::var(&V, 0)
    }
    fn y() -> Poly {
        Poly::var(&V, 1)
    }
    fn c(n: i64) -> Poly {
        Poly::constant(&V, int(n))
    }

    #[test]
    fn ring_operations() {
        let p = (x() + c(1)).pow(2);
        assert_eq!(p, x() * x() + c(2) * x() + c(1));
        assert!((p.clone() - p.clone()).is_zero());
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&[int(2), int(0), int(0)]).unwrap(), int(9));
        assert_eq!(p.to_string(), "x^2 + 2*x + 1");
        assert_eq!((x() - y()).swap(0, 1), y() - x());
        let q = x() * Poly::var(&V, 2);
        assert_eq!(q.substitute(2, &int(3)), c(3) * x());
    }

    #[test]
    fn basis_size() {
        assert_eq!(monomial_basis(3, 4).len(), 35);
        assert_eq!(monomial_basis(2, 0), vec![vec![0, 0]]);
    }
}

//! Weight vectors, root systems, Weyl-group canonical forms and the Weyl
//! dimension formula, all in exact rational arithmetic.
//!
//! Classical types use standard coordinates: `A(n)` lives in `n+1`
//! coordinates, `B/C/D/BC(n)` in `n`. `G2` uses the fundamental-weight
//! basis `(a, b) = a·ω₁ + b·ω₂` with `ω₁` long; its bilinear form is scaled
//! so that short roots have length one.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, frac, int, Rational};

/// Exact coordinate vector in a chosen basis of a Cartan dual.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(#[serde(with = "rational::serde_vec")] pub Vec<Rational>);

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        WeightVector(vec![Rational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        WeightVector(v.iter().map(|&x| int(x)).collect())
    }

    /// `½·v` for integer `v`, the usual way spin weights are written.
    pub fn halves(v: &[i64]) -> Self {
        WeightVector(v.iter().map(|&x| frac(x, 2)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> WeightVector {
        WeightVector(self.0[range].to_vec())
    }

    pub fn concat(parts: &[WeightVector]) -> WeightVector {
        WeightVector(parts.iter().flat_map(|p| p.0.iter().cloned()).collect())
    }

    fn check_len(&self, other: &WeightVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &WeightVector) -> Result<WeightVector> {
        self.check_len(other)?;
        Ok(WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &WeightVector) -> Result<WeightVector> {
        self.check_len(other)?;
        Ok(WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, c: &Rational) -> WeightVector {
        WeightVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(rational::is_integer)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Root-system type of a (possibly reducible) Weyl group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    BC(usize),
    G2,
    /// A torus with the given number of coordinates and trivial Weyl group.
    Trivial(usize),
    Product(Vec<WeylType>),
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylType::A(n) => write!(f, "A{n}"),
            WeylType::B(n) => write!(f, "B{n}"),
            WeylType::C(n) => write!(f, "C{n}"),
            WeylType::D(n) => write!(f, "D{n}"),
            WeylType::BC(n) => write!(f, "BC{n}"),
            WeylType::G2 => write!(f, "G2"),
            WeylType::Trivial(n) => write!(f, "T{n}"),
            WeylType::Product(ts) => {
                let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
                write!(f, "{}", parts.join("×"))
            }
        }
    }
}

impl WeylType {
    /// Number of coordinates of a weight vector for this type.
    pub fn dim(&self) -> usize {
        match self {
            WeylType::A(n) => n + 1,
            WeylType::B(n) | WeylType::C(n) | WeylType::D(n) | WeylType::BC(n) => *n,
            WeylType::G2 => 2,
            WeylType::Trivial(n) => *n,
            WeylType::Product(ts) => ts.iter().map(WeylType::dim).sum(),
        }
    }

    /// Factors with their coordinate ranges; a simple type is its own factor.
    pub fn blocks(&self) -> Vec<(WeylType, std::ops::Range<usize>)> {
        match self {
            WeylType::Product(ts) => {
                let mut out = Vec::new();
                let mut start = 0;
                for t in ts {
                    for (b, r) in t.blocks() {
                        out.push((b, start + r.start..start + r.end));
                    }
                    start += t.dim();
                }
                out
            }
            t => vec![(t.clone(), 0..t.dim())],
        }
    }

    fn check_lettered(&self) -> Result<()> {
        match self {
            WeylType::Trivial(_) | WeylType::Product(_) => Err(Error::UnsupportedType(self.to_string())),
            WeylType::A(0) | WeylType::B(0) | WeylType::C(0) | WeylType::D(0) | WeylType::BC(0) => {
                Err(Error::UnsupportedType(self.to_string()))
            }
            _ => Ok(()),
        }
    }
}

/// Invariant bilinear form for the type: the dot product except for `G2`.
pub fn form(t: &WeylType, v: &WeightVector, w: &WeightVector) -> Result<Rational> {
    v.check_len(w)?;
    if v.len() != t.dim() {
        return Err(Error::LengthMismatch { expected: t.dim(), got: v.len() });
    }
    let mut acc = Rational::zero();
    for (b, r) in t.blocks() {
        let (x, y) = (&v.0[r.clone()], &w.0[r]);
        acc += match b {
            WeylType::G2 => {
                let g = g2_gram();
                let mut s = Rational::zero();
                for i in 0..2 {
                    for j in 0..2 {
                        s += &x[i] * &g[i][j] * &y[j];
                    }
                }
                s
            }
            _ => rational::dot(x, y),
        };
    }
    Ok(acc)
}

/// Gram matrix of `(ω₁, ω₂)` for `G2` with short roots of length one.
pub fn g2_gram() -> [[Rational; 2]; 2] {
    [[int(3), frac(3, 2)], [frac(3, 2), int(1)]]
}

/// Plain coordinate dot product (orthonormal normalization `B(e_i,e_i)=1`).
pub fn inner_product(v: &WeightVector, w: &WeightVector) -> Result<Rational> {
    v.check_len(w)?;
    Ok(v.0.iter().zip(&w.0).fold(Rational::zero(), |a, (p, q)| a + p * q))
}

fn unit(n: usize, i: usize, c: i64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = int(c);
    v
}

fn pair(n: usize, i: usize, j: usize, ci: i64, cj: i64) -> WeightVector {
    let mut v = unit(n, i, ci);
    v[j] += int(cj);
    WeightVector(v)
}

/// Standard positive system for a simple (lettered) type.
pub fn positive_roots(t: &WeylType) -> Result<Vec<WeightVector>> {
    t.check_lettered()?;
    let mut out = Vec::new();
    match *t {
        WeylType::A(n) => {
            let d = n + 1;
            for i in 0..d {
                for j in i + 1..d {
                    out.push(pair(d, i, j, 1, -1));
                }
            }
        }
        WeylType::B(n) | WeylType::C(n) | WeylType::D(n) | WeylType::BC(n) => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(pair(n, i, j, 1, -1));
                    out.push(pair(n, i, j, 1, 1));
                }
            }
            for i in 0..n {
                match t {
                    WeylType::B(_) => out.push(WeightVector(unit(n, i, 1))),
                    WeylType::C(_) => out.push(WeightVector(unit(n, i, 2))),
                    WeylType::BC(_) => {
                        out.push(WeightVector(unit(n, i, 1)));
                        out.push(WeightVector(unit(n, i, 2)));
                    }
                    _ => {}
                }
            }
        }
        WeylType::G2 => {
            for (a, b) in [(2, -3), (-1, 2), (1, -1), (0, 1), (-1, 3), (1, 0)] {
                out.push(WeightVector::from_ints(&[a, b]));
            }
        }
        _ => unreachable!("checked above"),
    }
    Ok(out)
}

/// Simple roots of a simple (lettered) type, ordered as in Bourbaki.
pub fn simple_roots(t: &WeylType) -> Result<Vec<WeightVector>> {
    t.check_lettered()?;
    let mut out = Vec::new();
    match *t {
        WeylType::A(n) => {
            for i in 0..n {
                out.push(pair(n + 1, i, i + 1, 1, -1));
            }
        }
        WeylType::B(n) | WeylType::C(n) | WeylType::BC(n) | WeylType::D(n) => {
            for i in 0..n.saturating_sub(1) {
                out.push(pair(n, i, i + 1, 1, -1));
            }
            match t {
                WeylType::B(_) | WeylType::BC(_) => out.push(WeightVector(unit(n, n - 1, 1))),
                WeylType::C(_) => out.push(WeightVector(unit(n, n - 1, 2))),
                WeylType::D(_) if n >= 2 => out.push(pair(n, n - 2, n - 1, 1, 1)),
                _ => {}
            }
        }
        WeylType::G2 => {
            out.push(WeightVector::from_ints(&[2, -3]));
            out.push(WeightVector::from_ints(&[-1, 2]));
        }
        _ => unreachable!("checked above"),
    }
    Ok(out)
}

/// Half-sum of positive roots; for products and tori, blockwise (tori give 0).
pub fn rho(t: &WeylType) -> Result<WeightVector> {
    match t {
        WeylType::Trivial(n) => Ok(WeightVector::zeros(*n)),
        WeylType::Product(ts) => {
            let parts = ts.iter().map(rho).collect::<Result<Vec<_>>>()?;
            Ok(WeightVector::concat(&parts))
        }
        _ => {
            let mut acc = WeightVector::zeros(t.dim());
            for r in positive_roots(t)? {
                acc = acc.add(&r)?;
            }
            Ok(acc.scale(&rational::half()))
        }
    }
}

/// All positive roots of a possibly reducible type, in global coordinates.
pub fn all_positive_roots(t: &WeylType) -> Result<Vec<WeightVector>> {
    let n = t.dim();
    let mut out = Vec::new();
    for (b, r) in t.blocks() {
        if matches!(b, WeylType::Trivial(_)) {
            continue;
        }
        for root in positive_roots(&b)? {
            let mut v = vec![Rational::zero(); n];
            v[r.clone()].clone_from_slice(&root.0);
            out.push(WeightVector(v));
        }
    }
    Ok(out)
}

fn g2_reflect(v: &[Rational], i: usize) -> Vec<Rational> {
    let alpha = [[int(2), int(-3)], [int(-1), int(2)]];
    let c = v[i].clone();
    vec![&v[0] - &c * &alpha[i][0], &v[1] - &c * &alpha[i][1]]
}

/// The `G2` Weyl orbit of `v`, by closure under the simple reflections.
pub fn g2_orbit(v: &WeightVector) -> Vec<WeightVector> {
    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut stack = vec![v.0.clone()];
    while let Some(x) = stack.pop() {
        if seen.insert(x.clone()) {
            for i in 0..2 {
                stack.push(g2_reflect(&x, i));
            }
        }
    }
    seen.into_iter().map(WeightVector).collect()
}

fn canon_block(t: &WeylType, v: &[Rational]) -> Vec<Rational> {
    match t {
        WeylType::A(_) => {
            let mut w = v.to_vec();
            w.sort_by(|a, b| b.cmp(a));
            w
        }
        WeylType::B(_) | WeylType::C(_) | WeylType::BC(_) => {
            let mut w: Vec<Rational> = v.iter().map(|x| x.abs()).collect();
            w.sort_by(|a, b| b.cmp(a));
            w
        }
        WeylType::D(_) => {
            let negatives = v.iter().filter(|x| x.is_negative()).count();
            let mut w: Vec<Rational> = v.iter().map(|x| x.abs()).collect();
            w.sort_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 {
                if let Some(last) = w.last_mut() {
                    *last = -last.clone();
                }
            }
            w
        }
        WeylType::G2 => {
            g2_orbit(&WeightVector(v.to_vec()))
                .into_iter()
                .find(|w| w.0.iter().all(|x| !x.is_negative()))
                .expect("every G2 orbit meets the dominant chamber")
                .0
        }
        WeylType::Trivial(_) => v.to_vec(),
        WeylType::Product(_) => unreachable!("blocks are simple"),
    }
}

/// The dominant element of the Weyl orbit of `v`.
pub fn dominant_representative(t: &WeylType, v: &WeightVector) -> Result<WeightVector> {
    if v.len() != t.dim() {
        return Err(Error::LengthMismatch { expected: t.dim(), got: v.len() });
    }
    let mut out = v.0.clone();
    for (b, r) in t.blocks() {
        let c = canon_block(&b, &v.0[r.clone()]);
        out[r].clone_from_slice(&c);
    }
    Ok(WeightVector(out))
}

/// Whether `v` and `w` lie in the same Weyl orbit.
pub fn weyl_orbit_equal(t: &WeylType, v: &WeightVector, w: &WeightVector) -> Result<bool> {
    v.check_len(w)?;
    Ok(dominant_representative(t, v)? == dominant_representative(t, w)?)
}

/// Whether `v` is already dominant.
pub fn is_dominant(t: &WeylType, v: &WeightVector) -> Result<bool> {
    Ok(&dominant_representative(t, v)? == v)
}

/// `∏_{α>0} B(λ+ρ,α)/B(ρ,α)` for a dominant `λ`.
pub fn weyl_dimension(t: &WeylType, rho: &WeightVector, lambda: &WeightVector) -> Result<Rational> {
    if !is_dominant(t, lambda)? {
        return Err(Error::NotDominant { weight: lambda.to_string(), context: t.to_string() });
    }
    let shifted = lambda.add(rho)?;
    let mut num = rational::one();
    let mut den = rational::one();
    for alpha in all_positive_roots(t)? {
        num *= form(t, &shifted, &alpha)?;
        den *= form(t, rho, &alpha)?;
    }
    Ok(num / den)
}

/// Weyl dimension with the type's own `ρ`, as an integer.
pub fn dimension(t: &WeylType, lambda: &WeightVector) -> Result<num_bigint::BigInt> {
    let d = weyl_dimension(t, &rho(t)?, lambda)?;
    debug_assert!(d.is_integer());
    Ok(d.to_integer())
}

//! Integer polynomials in `x_1, …, x_n`, crystal characters, Schur and
//! Schur-P polynomials, and expansions into those bases.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::crystal::{CrystalGraph, FactorizationCrystal};
use crate::error::{Error, Result};
use crate::permwords::{length_invariants, Flavor, Target};
use crate::tableaux::{semistandard, shifted_semistandard, Shape};

/// A polynomial in a fixed number of variables. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], 1)
    }

    pub fn monomial(exponents: Vec<u32>, coeff: i64) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    /// `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(e, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) {
        assert_eq!(exponents.len(), self.n, "exponent vector of the wrong length");
        match self.terms.entry(exponents) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if coeff != 0 {
                    v.insert(coeff);
                }
            }
        }
    }

    /// The lexicographically largest monomial.
    pub fn leading(&self) -> Option<(&Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            e.swap(i - 1, i);
            out.add_term(e, c);
        }
        out
    }

    /// `f(x_1, −x_1, x_3, …, x_n)`.
    pub fn supersymmetric_substitution(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            let sign = if e[1] % 2 == 0 { 1 } else { -1 };
            e[0] += e[1];
            e[1] = 0;
            out.add_term(e, sign * c);
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        self + &(-other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }
}

impl Mul<i64> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, k: i64) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Leading monomial first: `x1^2*x2 + 2*x1*x3 - x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, &c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
                .collect();
            let mono = vars.join("*");
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (c.abs(), mono.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{mono}")?,
                (a, false) => write!(f, "{a}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    exponents: &'a [u32],
    coefficient: i64,
}

impl Serialize for Polynomial {
    /// A list of `{exponents, coefficient}` objects, leading monomial first.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, &c) in self.terms.iter().rev() {
            seq.serialize_element(&TermRepr { exponents: e, coefficient: c })?;
        }
        seq.end()
    }
}

/// `ch(B) = Σ_b x^{wt(b)}`.
pub fn character<E>(g: &CrystalGraph<E>) -> Polynomial
where
    E: Clone + Ord + fmt::Display + Serialize + Send + Sync,
{
    let mut p = Polynomial::zero(g.rank());
    for v in 0..g.len() {
        p.add_term(g.weight(v).to_vec(), 1);
    }
    p
}

/// `s_λ(x_1, …, x_n)` summed over semistandard tableaux.
pub fn schur_poly(lambda: &[usize], n: usize) -> Result<Polynomial> {
    let shape = Shape::partition(lambda.to_vec())?;
    let mut p = Polynomial::zero(n);
    if lambda.len() > n {
        return Ok(p);
    }
    for t in semistandard(&shape, n) {
        p.add_term(t.weight(n)?, 1);
    }
    Ok(p)
}

/// `P_μ(x_1, …, x_n)` summed over `ShTab_n(μ)`.
pub fn schur_p_poly(mu: &[usize], n: usize) -> Result<Polynomial> {
    let shape = Shape::strict(mu.to_vec())?;
    let mut p = Polynomial::zero(n);
    if mu.len() > n {
        return Ok(p);
    }
    for t in shifted_semistandard(&shape, n) {
        p.add_term(t.weight(n)?, 1);
    }
    Ok(p)
}

pub fn is_symmetric(p: &Polynomial) -> bool {
    (1..p.n()).all(|i| p.swap_vars(i) == *p)
}

/// Symmetric, and `x_1` cancels after `x_2 := −x_1`.
pub fn is_supersymmetric(p: &Polynomial) -> bool {
    if p.n() < 2 {
        return true;
    }
    is_symmetric(p) && p.supersymmetric_substitution().terms().keys().all(|e| e[0] == 0)
}

/// `F_π`, `F̂_π` or `F̂^fpf_π` in `n` variables: the character of the
/// factorization crystal.
pub fn stanley_poly(target: &Target, flavor: Flavor, n: usize) -> Result<Polynomial> {
    let c = FactorizationCrystal::new(n, flavor);
    let mut p = Polynomial::zero(n);
    for f in c.elements(target, flavor)? {
        p.add_term(f.weight(), 1);
    }
    Ok(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    SchurP,
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schur" | "s" => Ok(Basis::Schur),
            "schurP" | "schurp" | "schur-p" | "P" => Ok(Basis::SchurP),
            _ => Err(Error::InvalidInput(format!("unknown basis {s:?}"))),
        }
    }
}

/// Coefficients of `p` in the Schur or Schur-P basis, by repeatedly
/// subtracting the basis element of the leading monomial. Fails if some
/// leading exponent is not a (strict) partition.
pub fn expand(p: &Polynomial, basis: Basis, n: usize) -> Result<BTreeMap<Vec<usize>, i64>> {
    if p.n() != n {
        return Err(Error::InvalidInput(format!("polynomial has {} variables, not {n}", p.n())));
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    let mut cache: HashMap<Vec<usize>, Polynomial> = HashMap::new();
    let limit = p.terms().len() + 1;
    for _ in 0..limit {
        let Some((lead, c)) = rest.leading() else {
            return Ok(out);
        };
        let shape: Vec<usize> = lead.iter().take_while(|&&a| a > 0).map(|&a| a as usize).collect();
        let ok = lead[shape.len()..].iter().all(|&a| a == 0)
            && match basis {
                Basis::Schur => shape.windows(2).all(|w| w[0] >= w[1]),
                Basis::SchurP => shape.windows(2).all(|w| w[0] > w[1]),
            };
        if !ok {
            return Err(Error::Invariant(format!("leading monomial {lead:?} is not a basis index")));
        }
        let b = match cache.get(&shape) {
            Some(b) => b,
            None => {
                let b = match basis {
                    Basis::Schur => schur_poly(&shape, n)?,
                    Basis::SchurP => schur_p_poly(&shape, n)?,
                };
                cache.entry(shape.clone()).or_insert(b)
            }
        };
        rest = &rest - &(b * c);
        out.insert(shape, c);
    }
    Err(Error::Invariant("expansion did not terminate".into()))
}

/// The expansion of a Stanley polynomial in the basis its crystal
/// supports, with a warning when `n` is below the flavored length.
pub fn stanley_expansion(
    target: &Target,
    flavor: Flavor,
    n: usize,
) -> Result<(BTreeMap<Vec<usize>, i64>, Option<String>)> {
    let p = stanley_poly(target, flavor, n)?;
    let basis = if flavor == Flavor::Reduced { Basis::Schur } else { Basis::SchurP };
    let len = length_invariants(target, flavor)?.flavored;
    let warning = (n < len)
        .then(|| format!("n = {n} is below the length {len}; the expansion need not count highest weights"));
    Ok((expand(&p, basis, n)?, warning))
}

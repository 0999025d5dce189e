use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permwords::Word;

/// A tuple `(w^1, …, w^n)` of strictly increasing, possibly empty words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Word>", into = "Vec<Word>")]
pub struct Factorization {
    factors: Vec<Word>,
}

impl Factorization {
    pub fn new(factors: Vec<Word>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| !f.is_strictly_increasing()) {
            return Err(Error::InvalidInput(format!("factor {f} is not strictly increasing")));
        }
        Ok(Factorization { factors })
    }

    pub(crate) fn from_factors_unchecked(factors: Vec<Word>) -> Self {
        Factorization { factors }
    }

    /// Each letter in its own factor.
    pub fn singletons(w: &[i32]) -> Self {
        Factorization { factors: w.iter().map(|&a| Word(vec![a])).collect() }
    }

    /// All increasing factorizations of `w` into `n` factors.
    pub fn all_of(w: &[i32], n: usize) -> Vec<Factorization> {
        fn go(w: &[i32], n: usize, cur: &mut Vec<Word>, out: &mut Vec<Factorization>) {
            if n == 1 {
                if w.windows(2).all(|p| p[0] < p[1]) {
                    cur.push(Word(w.to_vec()));
                    out.push(Factorization { factors: cur.clone() });
                    cur.pop();
                }
                return;
            }
            for k in 0..=w.len() {
                if k >= 2 && w[k - 2] >= w[k - 1] {
                    break;
                }
                cur.push(Word(w[..k].to_vec()));
                go(&w[k..], n - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if w.is_empty() {
                out.push(Factorization { factors: Vec::new() });
            }
            return out;
        }
        go(w, n, &mut Vec::new(), &mut out);
        out
    }

    /// Splits `w` into consecutive factors of the given sizes.
    pub fn split(w: &[i32], sizes: &[usize]) -> Result<Self> {
        if sizes.iter().sum::<usize>() != w.len() {
            return Err(Error::InvalidInput("factor sizes do not add up to the word length".into()));
        }
        let mut k = 0;
        let mut factors = Vec::with_capacity(sizes.len());
        for &s in sizes {
            factors.push(Word(w[k..k + s].to_vec()));
            k += s;
        }
        Self::new(factors)
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> &Word {
        &self.factors[j]
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn word(&self) -> Word {
        Word(self.factors.iter().flat_map(|f| f.iter().copied()).collect())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len()).collect()
    }

    /// `wt(w) = (ℓ(w^1), …, ℓ(w^n))`.
    pub fn weight(&self) -> Vec<u32> {
        self.factors.iter().map(|f| f.len() as u32).collect()
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(|f| f.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Factorization {
    /// Slash separated, `∅` for empty factors: `134/2/∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.factors.iter().map(|w| if w.is_empty() { "∅".to_string() } else { w.to_string() }).collect();
        write!(f, "{}", parts.join("/"))
    }
}

impl FromStr for Factorization {
    type Err = Error;

    /// Parenthesized groups, `()` for an empty factor: `(4)(23)(12)`. Inside a
    /// group, letters are single digits unless separated by commas.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut factors = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::InvalidInput(format!("expected a parenthesized factor at {rest:?}")))?;
            factors.push(inner.0.parse::<Word>()?);
            rest = inner.1;
        }
        Factorization::new(factors)
    }
}

impl TryFrom<Vec<Word>> for Factorization {
    type Error = Error;
    fn try_from(v: Vec<Word>) -> Result<Self> {
        Factorization::new(v)
    }
}

impl From<Factorization> for Vec<Word> {
    fn from(f: Factorization) -> Self {
        f.factors
    }
}

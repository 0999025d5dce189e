//! Finitely supported permutations of the integers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of ℤ moving finitely many points, stored as the sorted list of
/// pairs `(i, π(i))` with `π(i) != i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i32, i32)>", into = "Vec<(i32, i32)>")]
pub struct Permutation {
    map: Vec<(i32, i32)>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn s(i: i32) -> Self {
        Permutation { map: vec![(i, i + 1), (i + 1, i)] }
    }

    /// Builds a permutation from `(i, π(i))` pairs. Fixed points may be
    /// included; the pairs must define a bijection.
    pub fn from_pairs<I: IntoIterator<Item = (i32, i32)>>(pairs: I) -> Result<Self> {
        let mut map: Vec<(i32, i32)> = pairs.into_iter().filter(|(a, b)| a != b).collect();
        map.sort_unstable();
        let mut images: Vec<i32> = map.iter().map(|p| p.1).collect();
        images.sort_unstable();
        let domain: Vec<i32> = map.iter().map(|p| p.0).collect();
        if domain.windows(2).any(|w| w[0] == w[1]) || images != domain {
            return Err(Error::InvalidInput(format!("pairs {map:?} do not define a permutation")));
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[1,3],[2,5]]`.
    pub fn from_cycles(cycles: &[Vec<i32>]) -> Result<Self> {
        let mut pairs = Vec::new();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                pairs.push((a, c[(k + 1) % c.len()]));
            }
        }
        Self::from_pairs(pairs)
    }

    pub(crate) fn from_one_line(lo: i32, values: &[i32]) -> Self {
        let map = values
            .iter()
            .enumerate()
            .map(|(k, &v)| (lo + k as i32, v))
            .filter(|(a, b)| a != b)
            .collect();
        Permutation { map }
    }

    pub fn pairs(&self) -> &[(i32, i32)] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, i: i32) -> i32 {
        match self.map.binary_search_by_key(&i, |p| p.0) {
            Ok(k) => self.map[k].1,
            Err(_) => i,
        }
    }

    /// Smallest and largest moved points.
    pub fn support_bounds(&self) -> Option<(i32, i32)> {
        Some((self.map.first()?.0, self.map.last()?.0))
    }

    pub(crate) fn one_line(&self, lo: i32, hi: i32) -> Vec<i32> {
        (lo..=hi).map(|i| self.apply(i)).collect()
    }

    fn window_with(&self, extra: &[i32]) -> (i32, i32) {
        let mut lo = extra.iter().copied().min().unwrap_or(0);
        let mut hi = extra.iter().copied().max().unwrap_or(0);
        if let Some((a, b)) = self.support_bounds() {
            lo = lo.min(a);
            hi = hi.max(b);
        }
        (lo, hi)
    }

    /// Composition `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let (a, b) = self.window_with(&[]);
        let (lo, hi) = other.window_with(&[a, b]);
        let values: Vec<i32> = (lo..=hi).map(|i| self.apply(other.apply(i))).collect();
        Permutation::from_one_line(lo, &values)
    }

    pub fn inverse(&self) -> Permutation {
        let mut map: Vec<(i32, i32)> = self.map.iter().map(|&(a, b)| (b, a)).collect();
        map.sort_unstable();
        Permutation { map }
    }

    /// `π s_i`: swaps the values in positions `i` and `i+1`.
    pub fn mul_s_right(&self, i: i32) -> Permutation {
        let (lo, hi) = self.window_with(&[i, i + 1]);
        let mut v = self.one_line(lo, hi);
        v.swap((i - lo) as usize, (i + 1 - lo) as usize);
        Permutation::from_one_line(lo, &v)
    }

    /// `s_i π`: swaps the values `i` and `i+1`.
    pub fn mul_s_left(&self, i: i32) -> Permutation {
        let (lo, hi) = self.window_with(&[i, i + 1]);
        let v: Vec<i32> = self
            .one_line(lo, hi)
            .into_iter()
            .map(|x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
            .collect();
        Permutation::from_one_line(lo, &v)
    }

    pub fn conj_s(&self, i: i32) -> Permutation {
        self.mul_s_left(i).mul_s_right(i)
    }

    pub fn is_descent(&self, i: i32) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// All `i` with `π(i) > π(i+1)`.
    pub fn descents(&self) -> Vec<i32> {
        match self.support_bounds() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..hi).filter(|&i| self.is_descent(i)).collect(),
        }
    }

    /// Demazure product `π ∘ s_i`.
    pub fn demazure_step(&self, i: i32) -> Permutation {
        if self.is_descent(i) {
            self.clone()
        } else {
            self.mul_s_right(i)
        }
    }

    /// The twisted product `π ⋊ s_i`.
    pub fn rtimes_step(&self, i: i32) -> Permutation {
        let right = self.mul_s_right(i);
        let left = self.mul_s_left(i);
        if right != left {
            left.mul_s_right(i)
        } else {
            right
        }
    }

    /// Inversion count ℓ(π).
    pub fn length(&self) -> usize {
        let Some((lo, hi)) = self.support_bounds() else { return 0 };
        let v = self.one_line(lo, hi);
        let mut n = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn is_involution(&self) -> bool {
        self.map.iter().all(|&(a, b)| self.apply(b) == a)
    }

    /// The 2-cycles `(a, b)` with `a < b`.
    pub fn two_cycles(&self) -> Vec<(i32, i32)> {
        self.map
            .iter()
            .filter(|&&(a, b)| a < b && self.apply(b) == a)
            .copied()
            .collect()
    }

    /// κ(π), the number of 2-cycles.
    pub fn kappa(&self) -> usize {
        self.two_cycles().len()
    }

    pub fn cycles(&self) -> Vec<Vec<i32>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for &(a, _) in &self.map {
            if seen.contains(&a) {
                continue;
            }
            let mut c = vec![a];
            seen.insert(a);
            let mut x = self.apply(a);
            while x != a {
                seen.insert(x);
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// `i ↦ 1 − π(1 − i)`.
    pub fn star(&self) -> Permutation {
        let mut map: Vec<(i32, i32)> = self.map.iter().map(|&(a, b)| (1 - a, 1 - b)).collect();
        map.sort_unstable();
        Permutation { map }
    }

    /// `t_m(π)`: `i ↦ π(i − m) + m`.
    pub fn shift(&self, m: i32) -> Permutation {
        Permutation { map: self.map.iter().map(|&(a, b)| (a + m, b + m)).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "1");
        }
        for c in self.cycles() {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl TryFrom<Vec<(i32, i32)>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<(i32, i32)>) -> Result<Self> {
        Permutation::from_pairs(v)
    }
}

impl From<Permutation> for Vec<(i32, i32)> {
    fn from(p: Permutation) -> Self {
        p.map
    }
}

/// Parses cycle notation: `(1,3)(2,5)`, or `(13)(25)` when every letter is a
/// single digit.
pub(crate) fn parse_cycles(s: &str) -> Result<Vec<Vec<i32>>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let (inner, tail) = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::InvalidInput(format!("expected a parenthesized cycle at {rest:?}")))?;
        let bad = |t: &str| Error::InvalidInput(format!("bad cycle entry {t:?}"));
        let c: Vec<i32> = if inner.contains(',') {
            inner.split(',').map(|t| t.parse().map_err(|_| bad(t))).collect::<Result<_>>()?
        } else {
            inner.chars().map(|ch| ch.to_digit(10).map(|d| d as i32).ok_or_else(|| bad(inner))).collect::<Result<_>>()?
        };
        if !c.is_empty() {
            cycles.push(c);
        }
        rest = tail;
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation; `1`, `id` or `()` for the identity.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "" | "1" | "id" => Ok(Permutation::identity()),
            t => Permutation::from_cycles(&parse_cycles(t)?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cycle_notation() {
        let p: Permutation = "(1,3)(2,5)".parse().unwrap();
        assert_eq!(p, Permutation::from_cycles(&[vec![1, 3], vec![2, 5]]).unwrap());
        assert_eq!("(13)(25)".parse::<Permutation>().unwrap(), p);
        assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        assert!("()".parse::<Permutation>().unwrap().is_identity());
        assert!("(1,2)(2,3)".parse::<Permutation>().is_err());
        assert!("(1,x)".parse::<Permutation>().is_err());
    }

    #[test]
    fn simple_transpositions() {
        assert_eq!(Permutation::s(1).to_string(), "(1,2)");
        assert_eq!(Permutation::s(0).to_string(), "(0,1)");
        assert!(Permutation::s(4).compose(&Permutation::s(4)).is_identity());
    }

    #[test]
    fn rtimes_examples() {
        let id = Permutation::identity();
        assert_eq!(id.rtimes_step(2), Permutation::s(2));
        let p = Permutation::from_cycles(&[vec![2, 3]]).unwrap();
        assert_eq!(p.rtimes_step(1), Permutation::from_cycles(&[vec![1, 3]]).unwrap());
    }

    #[test]
    fn demazure_examples() {
        let id = Permutation::identity();
        assert_eq!(id.demazure_step(1), Permutation::s(1));
        assert_eq!(Permutation::s(1).demazure_step(1), Permutation::s(1));
        let p = id.demazure_step(2).demazure_step(3).demazure_step(4);
        let q = Permutation::s(2).compose(&Permutation::s(3)).compose(&Permutation::s(4));
        assert_eq!(p, q);
        assert_eq!(p, Permutation::from_cycles(&[vec![2, 3, 4, 5]]).unwrap());
    }

    #[test]
    fn lengths() {
        let p = Permutation::from_cycles(&[vec![1, 3], vec![2, 5]]).unwrap();
        assert_eq!(p.length(), 6);
        assert_eq!(p.kappa(), 2);
        assert!(p.is_involution());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_pairs([(1, 2), (2, 2)]).is_err());
        assert!(Permutation::from_pairs([(1, 3), (2, 3)]).is_err());
    }

    #[test]
    fn star_and_shift() {
        let p = Permutation::from_cycles(&[vec![1, 3], vec![2, 5]]).unwrap();
        assert_eq!(p.star().star(), p);
        assert_eq!(p.shift(2).shift(-2), p);
        assert_eq!(p.star().length(), p.length());
    }
}

//! Words and the Coxeter-Knuth moves.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of integer letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn new(letters: Vec<i32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    /// Positions `i` (1-based) with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    /// `w` with its `i`-th letter (1-based) removed.
    pub fn del(&self, i: usize) -> Result<Word> {
        if i == 0 || i > self.len() {
            return Err(Error::InvalidInput(format!("index {i} out of range for {self}")));
        }
        let mut v = self.0.clone();
        v.remove(i - 1);
        Ok(Word(v))
    }

    pub fn star(&self) -> Word {
        Word(self.0.iter().map(|&a| -a).collect())
    }

    pub fn shift(&self, m: i32) -> Word {
        Word(self.0.iter().map(|&a| a + m).collect())
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// The Coxeter-Knuth move `ck_i` on the window `w_i w_{i+1} w_{i+2}`.
    /// Returns `w` unchanged when `i` is not in `[ℓ(w) − 2]`.
    pub fn ck(&self, i: usize) -> Word {
        if i == 0 || i + 2 > self.len() {
            return self.clone();
        }
        let (x, y, z) = (self.0[i - 1], self.0[i], self.0[i + 1]);
        let between = |m: i32, a: i32, b: i32| (a < m && m < b) || (b < m && m < a);
        let mut v = self.0.clone();
        if between(z, x, y) {
            v.swap(i - 1, i);
        } else if between(x, y, z) {
            v.swap(i, i + 1);
        } else if x == z && (y - x).abs() == 1 {
            v[i - 1] = y;
            v[i] = x;
            v[i + 1] = y;
        }
        Word(v)
    }

    /// Swaps the first two letters.
    pub fn ck0_o(&self) -> Word {
        let mut v = self.0.clone();
        if v.len() >= 2 {
            v.swap(0, 1);
        }
        Word(v)
    }

    /// `w_1 w_2 ↦ w_1 (w_1 ∓ 1)` when `w_2 = w_1 ± 1`; swap when `w_1 − w_2`
    /// is even; identity otherwise.
    pub fn ck0_sp(&self) -> Word {
        let mut v = self.0.clone();
        if v.len() >= 2 {
            let (a, b) = (v[0], v[1]);
            if (b - a).abs() == 1 {
                v[1] = 2 * a - b;
            } else if (a - b) % 2 == 0 {
                v.swap(0, 1);
            }
        }
        Word(v)
    }
}

impl Deref for Word {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl From<Vec<i32>> for Word {
    fn from(v: Vec<i32>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    /// Single-digit nonnegative letters print concatenated (`2134`); anything
    /// else prints comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| (0..10).contains(&a)) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `2134` (one digit per letter) or a comma/space separated list
    /// such as `10,-2,3`.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        if s.contains([',', ' ']) {
            s.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i32>().map_err(|_| Error::InvalidInput(format!("bad letter {t:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(|| Error::InvalidInput(format!("bad letter {c:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn ck_examples() {
        assert_eq!(w("15341").ck(2), w("13541"));
        assert_eq!(w("13541").ck(1), w("13541"));
        assert_eq!(w("121").ck(1), w("212"));
        assert_eq!(w("121").ck(2), w("121"));
    }

    #[test]
    fn ck0_examples() {
        assert_eq!(w("2343").ck0_o(), w("3243"));
        assert_eq!(w("2343").ck0_sp(), w("2143"));
        assert_eq!(w("3524").ck0_sp(), w("5324"));
        assert_eq!(w("2543").ck0_sp(), w("2543"));
        assert_eq!(w("1").ck0_sp(), w("1"));
    }

    #[test]
    fn descents_and_del() {
        assert_eq!(w("2134").descents(), vec![1]);
        assert!(Word::empty().descents().is_empty());
        assert_eq!(w("467238159").descents(), vec![3, 6]);
        assert_eq!(w("2134").del(2).unwrap(), w("234"));
        assert_eq!(w("7").del(1).unwrap(), Word::empty());
        assert!(w("7").del(2).is_err());
    }

    #[test]
    fn star_shift_display() {
        assert_eq!(w("134").star(), Word(vec![-1, -3, -4]));
        assert_eq!(w("134").star().to_string(), "-1,-3,-4");
        assert_eq!(w("2134").shift(2), w("4356"));
        assert_eq!("10,2".parse::<Word>().unwrap(), Word(vec![10, 2]));
    }
}

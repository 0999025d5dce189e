//! Fixed-point-free involutions of ℤ that agree with `1_fpf` off a finite set.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::perm::{parse_cycles, Permutation};
use crate::error::{Error, Result};

/// The partner of `i` under `1_fpf = ⋯(-1,0)(1,2)(3,4)⋯`.
pub fn fpf_base(i: i32) -> i32 {
    if i.rem_euclid(2) == 0 {
        i - 1
    } else {
        i + 1
    }
}

/// A fixed-point-free involution of ℤ, stored as the sorted pairs `(i, π(i))`
/// where `π(i)` differs from `1_fpf(i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FpfRepr", into = "FpfRepr")]
pub struct FpfInvolution {
    map: Vec<(i32, i32)>,
}

#[derive(Serialize, Deserialize)]
struct FpfRepr {
    flavor: String,
    cycles: Vec<(i32, i32)>,
}

impl FpfInvolution {
    /// `1_fpf`.
    pub fn base() -> Self {
        Self::default()
    }

    /// Builds the element with the given 2-cycles, completing every integer not
    /// mentioned by its `1_fpf` partner. Fails if an uncovered integer's
    /// partner is covered.
    pub fn from_cycles(cycles: &[(i32, i32)]) -> Result<Self> {
        let mut pairs = Vec::new();
        for &(a, b) in cycles {
            if a == b {
                return Err(Error::InvalidInput(format!("({a},{b}) is not a 2-cycle")));
            }
            pairs.push((a, b));
            pairs.push((b, a));
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("cycles are not disjoint".into()));
        }
        let covered = |x: i32| pairs.binary_search_by_key(&x, |p| p.0).is_ok();
        for &(a, _) in &pairs {
            let partner = fpf_base(a);
            if !covered(partner) {
                return Err(Error::InvalidInput(format!(
                    "{partner} is uncovered but its 1_fpf partner {a} is covered"
                )));
            }
        }
        Ok(FpfInvolution { map: pairs.into_iter().filter(|&(a, b)| b != fpf_base(a)).collect() })
    }

    pub fn apply(&self, i: i32) -> i32 {
        match self.map.binary_search_by_key(&i, |p| p.0) {
            Ok(k) => self.map[k].1,
            Err(_) => fpf_base(i),
        }
    }

    pub fn is_base(&self) -> bool {
        self.map.is_empty()
    }

    /// A window `[lo, hi]` with `lo` odd and `hi` even, containing `extra`
    /// and every point where π differs from `1_fpf`. Such a window is
    /// preserved by π.
    fn window_with(&self, extra: &[i32]) -> (i32, i32) {
        let mut pts: Vec<i32> = extra.to_vec();
        pts.extend(self.map.iter().map(|p| p.0));
        let lo = pts.iter().copied().min().unwrap_or(1);
        let hi = pts.iter().copied().max().unwrap_or(2);
        let lo = if lo.rem_euclid(2) == 1 { lo } else { lo - 1 };
        let hi = if hi.rem_euclid(2) == 0 { hi } else { hi + 1 };
        (lo, hi)
    }

    fn from_window(lo: i32, values: &[i32]) -> Self {
        let map = values
            .iter()
            .enumerate()
            .map(|(k, &v)| (lo + k as i32, v))
            .filter(|&(a, b)| b != fpf_base(a))
            .collect();
        FpfInvolution { map }
    }

    /// `s_i π s_i`.
    pub fn conj_s(&self, i: i32) -> Self {
        let (lo, hi) = self.window_with(&[i, i + 1]);
        let s = |x: i32| if x == i { i + 1 } else if x == i + 1 { i } else { x };
        let values: Vec<i32> = (lo..=hi).map(|j| s(self.apply(s(j)))).collect();
        Self::from_window(lo, &values)
    }

    pub fn is_descent(&self, i: i32) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// Descents `i` of π with `π(i) != i + 1`; these are exactly the letters a
    /// word for π can end with.
    pub fn visible_descents(&self) -> Vec<i32> {
        if self.map.is_empty() {
            return Vec::new();
        }
        let (lo, hi) = self.window_with(&[]);
        (lo..hi).filter(|&i| self.is_descent(i) && self.apply(i) != i + 1).collect()
    }

    /// The 2-cycles `(a, b)`, `a < b`, where π differs from `1_fpf`.
    pub fn two_cycles(&self) -> Vec<(i32, i32)> {
        self.map.iter().filter(|&&(a, b)| a < b).copied().collect()
    }

    /// The restriction of π to `(-m, m]` extended by the identity, for an even
    /// `m` large enough that π agrees with `1_fpf` outside that window.
    pub fn truncation(&self) -> (Permutation, i32) {
        let (lo, hi) = self.window_with(&[]);
        let mut m = hi.max(1 - lo).max(2);
        if m % 2 != 0 {
            m += 1;
        }
        let values: Vec<i32> = (-m + 1..=m).map(|i| self.apply(i)).collect();
        (Permutation::from_one_line(-m + 1, &values), m)
    }

    /// ℓ^Sp(π) = ½(ℓ(σ) − m) for the truncation σ.
    pub fn sp_length(&self) -> usize {
        let (sigma, m) = self.truncation();
        (sigma.length() - m as usize) / 2
    }

    /// `i ↦ 1 − π(1 − i)`.
    pub fn star(&self) -> Self {
        let mut map: Vec<(i32, i32)> = self.map.iter().map(|&(a, b)| (1 - a, 1 - b)).collect();
        map.sort_unstable();
        FpfInvolution { map }
    }

    /// `t_m(π)`; only defined for even `m`.
    pub fn shift(&self, m: i32) -> Result<Self> {
        if m % 2 != 0 {
            return Err(Error::InvalidInput(format!("fpf shift needs an even amount, got {m}")));
        }
        Ok(FpfInvolution { map: self.map.iter().map(|&(a, b)| (a + m, b + m)).collect() })
    }

    /// The involution `π̂` of ℤ: `π̂(i) = i` unless some `j` strictly between
    /// `i` and `π(i)` has `j < π(j)`, in which case `π̂(i) = π(i)`.
    pub fn hat(&self) -> Permutation {
        let (lo, hi) = self.window_with(&[]);
        let pairs = (lo..=hi).map(|i| {
            let p = self.apply(i);
            let (a, b) = (i.min(p), i.max(p));
            if (a + 1..b).any(|j| j < self.apply(j)) {
                (i, p)
            } else {
                (i, i)
            }
        });
        Permutation::from_pairs(pairs.collect::<Vec<_>>()).expect("hat of an involution is a permutation")
    }
}

impl fmt::Display for FpfInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.map.is_empty() {
            return write!(f, "1fpf");
        }
        for (a, b) in self.two_cycles() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl TryFrom<FpfRepr> for FpfInvolution {
    type Error = Error;
    fn try_from(r: FpfRepr) -> Result<Self> {
        if r.flavor != "fpf" {
            return Err(Error::FlavorMismatch(format!("expected flavor \"fpf\", got {:?}", r.flavor)));
        }
        FpfInvolution::from_cycles(&r.cycles)
    }
}

impl From<FpfInvolution> for FpfRepr {
    fn from(p: FpfInvolution) -> Self {
        FpfRepr { flavor: "fpf".into(), cycles: p.two_cycles() }
    }
}

impl FromStr for FpfInvolution {
    type Err = Error;

    /// 2-cycles such as `(1,2)(3,6)(4,5)`, or a window `[2,1,6,5,4,3]` of
    /// values at `1, 2, …`; both are completed by `1_fpf`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "1fpf" {
            return Ok(FpfInvolution::base());
        }
        let pairs: Vec<(i32, i32)> = if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let values = inner
                .split(',')
                .map(|v| v.trim().parse::<i32>().map_err(|_| Error::InvalidInput(format!("bad window entry {v:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let pairs: Vec<(i32, i32)> = values.iter().enumerate().map(|(k, &v)| (k as i32 + 1, v)).collect();
            for &(a, b) in &pairs {
                if b >= 1 && (b as usize) <= values.len() && values[b as usize - 1] != a {
                    return Err(Error::InvalidInput(format!("window {t} is not an involution")));
                }
            }
            pairs.into_iter().filter(|&(a, b)| a < b).collect()
        } else {
            parse_cycles(t)?
                .into_iter()
                .map(|c| match c[..] {
                    [a, b] => Ok((a.min(b), a.max(b))),
                    _ => Err(Error::InvalidInput(format!("{c:?} is not a 2-cycle"))),
                })
                .collect::<Result<_>>()?
        };
        FpfInvolution::from_cycles(&pairs)
    }
}

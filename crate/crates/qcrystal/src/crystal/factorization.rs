//! The Morse-Schilling gl_n operators on increasing factorizations, and the
//! orthogonal and symplectic queer operators on `R^O_n(π)` and `R^Sp_n(π)`.

use std::collections::BTreeSet;

use super::{Crystal, CrystalIndex};
use crate::error::Result;
use crate::insertion::Factorization;
use crate::permwords::{enumerate_words, Flavor, Target, Word};

/// The pairs `(a, b)` with `a` in `a_word` and `b` in `b_word`: letters of the
/// second word are taken from largest to smallest and each is paired with the
/// smallest still unpaired `a > b`.
pub fn pair(a_word: &[i32], b_word: &[i32]) -> Vec<(i32, i32)> {
    let mut a: Vec<i32> = a_word.to_vec();
    a.sort_unstable();
    let mut b: Vec<i32> = b_word.to_vec();
    b.sort_unstable();
    let mut used = vec![false; a.len()];
    let mut out = Vec::new();
    for &y in b.iter().rev() {
        if let Some(k) = (0..a.len()).find(|&k| !used[k] && a[k] > y) {
            used[k] = true;
            out.push((a[k], y));
        }
    }
    out
}

fn unpaired(w: &Factorization, i: usize) -> (Vec<i32>, Vec<i32>) {
    let (a, b) = (w.factor(i - 1), w.factor(i));
    let p = pair(a, b);
    let pa: BTreeSet<i32> = p.iter().map(|x| x.0).collect();
    let pb: BTreeSet<i32> = p.iter().map(|x| x.1).collect();
    (
        a.iter().copied().filter(|x| !pa.contains(x)).collect(),
        b.iter().copied().filter(|x| !pb.contains(x)).collect(),
    )
}

fn remove(w: &mut Word, x: i32) {
    w.0.retain(|&a| a != x);
}

fn insert(w: &mut Word, x: i32) {
    let k = w.0.partition_point(|&a| a < x);
    w.0.insert(k, x);
}

/// `f_i` for `1 ≤ i < n`.
pub fn fact_f(w: &Factorization, i: usize) -> Option<Factorization> {
    if i == 0 || i >= w.n() {
        return None;
    }
    let (ua, _) = unpaired(w, i);
    let x = *ua.last()?;
    let mut fs = w.factors().to_vec();
    remove(&mut fs[i - 1], x);
    let mut y = x;
    while fs[i].contains(&y) {
        y += 1;
    }
    insert(&mut fs[i], y);
    Some(Factorization::from_factors_unchecked(fs))
}

/// `e_i` for `1 ≤ i < n`.
pub fn fact_e(w: &Factorization, i: usize) -> Option<Factorization> {
    if i == 0 || i >= w.n() {
        return None;
    }
    let (_, ub) = unpaired(w, i);
    let y = *ub.first()?;
    let mut fs = w.factors().to_vec();
    remove(&mut fs[i], y);
    let mut x = y;
    while fs[i - 1].contains(&x) {
        x -= 1;
    }
    insert(&mut fs[i - 1], x);
    Some(Factorization::from_factors_unchecked(fs))
}

fn min_of(w: &Word) -> Option<i32> {
    w.first().copied()
}

fn lt_min(x: i32, w: &Word) -> bool {
    min_of(w).is_none_or(|m| x < m)
}

/// The orthogonal queer lowering operator.
pub fn f_o(w: &Factorization) -> Option<Factorization> {
    if w.n() < 2 {
        return None;
    }
    let x = min_of(w.factor(0))?;
    if !lt_min(x, w.factor(1)) {
        return None;
    }
    let mut fs = w.factors().to_vec();
    remove(&mut fs[0], x);
    insert(&mut fs[1], x);
    Some(Factorization::from_factors_unchecked(fs))
}

/// The orthogonal queer raising operator.
pub fn e_o(w: &Factorization) -> Option<Factorization> {
    if w.n() < 2 {
        return None;
    }
    let x = min_of(w.factor(1))?;
    if !lt_min(x, w.factor(0)) {
        return None;
    }
    let mut fs = w.factors().to_vec();
    remove(&mut fs[1], x);
    insert(&mut fs[0], x);
    Some(Factorization::from_factors_unchecked(fs))
}

/// The symplectic queer lowering operator.
pub fn f_sp(w: &Factorization) -> Option<Factorization> {
    if w.n() < 2 {
        return None;
    }
    let x = min_of(w.factor(0))?;
    if !lt_min(x, w.factor(1)) {
        return None;
    }
    let mut fs = w.factors().to_vec();
    if fs[0].contains(&(x + 1)) {
        remove(&mut fs[0], x + 1);
        insert(&mut fs[1], x - 1);
    } else {
        remove(&mut fs[0], x);
        insert(&mut fs[1], x);
    }
    Some(Factorization::from_factors_unchecked(fs))
}

/// The symplectic queer raising operator.
pub fn e_sp(w: &Factorization) -> Option<Factorization> {
    if w.n() < 2 {
        return None;
    }
    let x = min_of(w.factor(1))?;
    if !lt_min(x, w.factor(0)) {
        return None;
    }
    let mut fs = w.factors().to_vec();
    remove(&mut fs[1], x);
    if x.rem_euclid(2) == 0 {
        insert(&mut fs[0], x);
    } else {
        insert(&mut fs[0], x + 2);
    }
    Some(Factorization::from_factors_unchecked(fs))
}

/// Which queer operator, if any, acts on factor 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QueerKind {
    /// Plain Morse-Schilling gl_n crystal.
    None,
    Orthogonal,
    Symplectic,
}

impl QueerKind {
    pub fn for_flavor(flavor: Flavor) -> Self {
        match flavor {
            Flavor::Reduced => QueerKind::None,
            Flavor::Involution => QueerKind::Orthogonal,
            Flavor::Fpf => QueerKind::Symplectic,
        }
    }
}

/// Increasing factorizations with `n` factors of words of one flavor.
#[derive(Clone, Copy, Debug)]
pub struct FactorizationCrystal {
    pub n: usize,
    pub kind: QueerKind,
}

impl FactorizationCrystal {
    pub fn new(n: usize, flavor: Flavor) -> Self {
        FactorizationCrystal { n, kind: QueerKind::for_flavor(flavor) }
    }

    /// Every element of `R_n(π)`, `R^O_n(π)` or `R^Sp_n(π)`.
    pub fn elements(&self, target: &Target, flavor: Flavor) -> Result<Vec<Factorization>> {
        let mut out = Vec::new();
        for w in enumerate_words(target, flavor)? {
            out.extend(Factorization::all_of(&w, self.n));
        }
        out.sort();
        Ok(out)
    }
}

impl Crystal for FactorizationCrystal {
    type Elem = Factorization;

    fn rank(&self) -> usize {
        self.n
    }

    fn is_queer(&self) -> bool {
        self.kind != QueerKind::None
    }

    fn weight(&self, b: &Factorization) -> Vec<u32> {
        b.weight()
    }

    fn f(&self, b: &Factorization, i: CrystalIndex) -> Option<Factorization> {
        match (i, self.kind) {
            (CrystalIndex::Gl(i), _) => fact_f(b, i),
            (CrystalIndex::QBar, QueerKind::Orthogonal) => f_o(b),
            (CrystalIndex::QBar, QueerKind::Symplectic) => f_sp(b),
            (CrystalIndex::QBar, QueerKind::None) => None,
        }
    }

    fn e(&self, b: &Factorization, i: CrystalIndex) -> Option<Factorization> {
        match (i, self.kind) {
            (CrystalIndex::Gl(i), _) => fact_e(b, i),
            (CrystalIndex::QBar, QueerKind::Orthogonal) => e_o(b),
            (CrystalIndex::QBar, QueerKind::Symplectic) => e_sp(b),
            (CrystalIndex::QBar, QueerKind::None) => None,
        }
    }
}

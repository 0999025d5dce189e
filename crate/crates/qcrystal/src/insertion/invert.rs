//! Inverse insertion by searching the fiber of the insertion tableau.
//!
//! The fiber of `P` under each EG-type insertion is a Coxeter-Knuth class, so
//! the preimage of `(P, Q)` is found by enumerating the class of the row word
//! of `P`, splitting each word by the factor sizes recorded in `Q`, and
//! keeping the one that inserts to `(P, Q)`.

use std::collections::BTreeMap;

use super::algorithms::{eg_insert_unchecked, hm_insert, shifted_eg_insert_unchecked, ShiftedVariant};
use super::factorization::Factorization;
use crate::error::{Error, Result};
use crate::permwords::{equivalence_class, Relation, Word};
use crate::tableaux::{ShiftedTableau, Tableau};

fn sizes_from_weight(weight: Vec<u32>) -> Vec<usize> {
    weight.into_iter().map(|c| c as usize).collect()
}

/// The factorization into `n` factors with EG-insertion pair `(P, Q)`.
pub fn invert_eg(p: &Tableau, q: &Tableau, n: usize) -> Result<Factorization> {
    if p.shape() != q.shape() {
        return Err(Error::NoPreimage("P and Q have different shapes".into()));
    }
    let sizes = sizes_from_weight(q.weight(n)?);
    for w in equivalence_class(&p.row_word(), Relation::K) {
        let Ok(f) = Factorization::split(&w, &sizes) else { continue };
        let r = eg_insert_unchecked(&f)?;
        if &r.p == p && &r.q == q {
            return Ok(f);
        }
    }
    Err(Error::NoPreimage("no factorization inserts to this pair".into()))
}

/// The factorization into `n` factors with orthogonal or symplectic
/// EG-insertion pair `(P, Q)`.
pub fn invert_shifted_eg(
    p: &ShiftedTableau,
    q: &ShiftedTableau,
    n: usize,
    variant: ShiftedVariant,
) -> Result<Factorization> {
    if p.shape() != q.shape() {
        return Err(Error::NoPreimage("P and Q have different shapes".into()));
    }
    let sizes = sizes_from_weight(q.weight(n)?);
    let rel = match variant {
        ShiftedVariant::Orthogonal => Relation::O,
        ShiftedVariant::Symplectic => Relation::Sp,
    };
    for w in equivalence_class(&p.row_word(), rel) {
        let Ok(f) = Factorization::split(&w, &sizes) else { continue };
        let Ok(r) = shifted_eg_insert_unchecked(&f, variant) else { continue };
        if &r.p == p && &r.q == q {
            return Ok(f);
        }
    }
    Err(Error::NoPreimage("no factorization inserts to this pair".into()))
}

/// The word with mixed-insertion pair `(P, Q)`, searched among the
/// rearrangements of the content of `P`.
pub fn invert_hm(p: &ShiftedTableau, q: &ShiftedTableau) -> Result<Word> {
    if p.shape() != q.shape() {
        return Err(Error::NoPreimage("P and Q have different shapes".into()));
    }
    let mut content: BTreeMap<i32, usize> = BTreeMap::new();
    for e in p.entries() {
        *content.entry(e.value()).or_default() += 1;
    }
    let mut found = None;
    let mut cur = Vec::with_capacity(p.size());
    arrangements(&mut content, p.size(), &mut cur, &mut |w| {
        if found.is_none() {
            if let Ok(r) = hm_insert(&Word(w.to_vec())) {
                if &r.p == p && &r.q == q {
                    found = Some(Word(w.to_vec()));
                }
            }
        }
    });
    found.ok_or_else(|| Error::NoPreimage("no word mixed-inserts to this pair".into()))
}

fn arrangements(content: &mut BTreeMap<i32, usize>, left: usize, cur: &mut Vec<i32>, f: &mut dyn FnMut(&[i32])) {
    if left == 0 {
        f(cur);
        return;
    }
    let keys: Vec<i32> = content.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
    for k in keys {
        *content.get_mut(&k).unwrap() -= 1;
        cur.push(k);
        arrangements(content, left - 1, cur, f);
        cur.pop();
        *content.get_mut(&k).unwrap() += 1;
    }
}

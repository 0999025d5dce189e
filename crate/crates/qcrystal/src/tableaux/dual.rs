//! Descents and dual equivalence on standard shifted tableaux.

use std::collections::BTreeSet;

use super::shifted::ShiftedTableau;
use crate::error::{Error, Result};

fn require_standard(t: &ShiftedTableau) -> Result<()> {
    if t.is_standard() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("not a standard shifted tableau:\n{t}")))
    }
}

/// Descents read off the shifted reading word: `i` is a descent when `i+1`
/// occurs before `i` in `shword(T)`.
pub fn tableau_descents(t: &ShiftedTableau) -> Result<BTreeSet<usize>> {
    require_standard(t)?;
    let w = t.shword();
    let mut pos = vec![0usize; w.len() + 1];
    for (k, &a) in w.iter().enumerate() {
        pos[a as usize] = k;
    }
    Ok((1..w.len()).filter(|&i| pos[i + 1] < pos[i]).collect())
}

/// The same set from the box positions: `i` is a descent iff `i, i+1` are
/// unprimed with `i+1` in a higher row, or `i′, (i+1)′` are primed with
/// `(i+1)′` in a later column, or `i` is unprimed and `i+1` primed.
pub fn tableau_descents_by_cases(t: &ShiftedTableau) -> Result<BTreeSet<usize>> {
    require_standard(t)?;
    let n = t.size() as i32;
    let mut out = BTreeSet::new();
    for i in 1..n {
        let ((xa, ya), a) = t.find_value(i).unwrap();
        let ((xb, yb), b) = t.find_value(i + 1).unwrap();
        let des = match (a.is_primed(), b.is_primed()) {
            (false, false) => xb > xa,
            (true, true) => yb > ya,
            (false, true) => true,
            (true, false) => false,
        };
        if des {
            out.insert(i as usize);
        }
    }
    Ok(out)
}

/// `s_i ⋆ T`.
pub fn star_op(t: &ShiftedTableau, i: i32) -> Result<ShiftedTableau> {
    require_standard(t)?;
    let n = t.size() as i32;
    if i < 1 || i >= n {
        return Err(Error::InvalidInput(format!("s_{i} needs 1 <= i < {n}")));
    }
    let ((xa, ya), a) = t.find_value(i).unwrap();
    let ((xb, yb), b) = t.find_value(i + 1).unwrap();
    let mut out = t.clone();
    if xa == xb || ya == yb {
        if xa != ya {
            out.set(xa, ya, a.toggle_prime());
        }
        if xb != yb {
            out.set(xb, yb, b.toggle_prime());
        }
    } else {
        out.set(xa, ya, a.with_value(i + 1));
        out.set(xb, yb, b.with_value(i));
    }
    Ok(out)
}

/// Whether `b` is between `a` and `c` in `w`, i.e. `abc` or `cba` is a
/// subword. Letters are assumed distinct.
fn between(w: &[i32], a: i32, b: i32, c: i32) -> bool {
    let pos = |x: i32| w.iter().position(|&y| y == x);
    match (pos(a), pos(b), pos(c)) {
        (Some(pa), Some(pb), Some(pc)) => (pa < pb && pb < pc) || (pc < pb && pb < pa),
        _ => false,
    }
}

/// The dual equivalence operator `𝔡_i`; the identity unless `i+1 ∈ [n−1]`.
pub fn dual_equiv(t: &ShiftedTableau, i: i32) -> Result<ShiftedTableau> {
    require_standard(t)?;
    let n = t.size() as i32;
    if i < 0 || i + 1 > n - 1 {
        return Ok(t.clone());
    }
    let w = t.shword();
    if i > 0 && between(&w, i, i + 2, i + 1) {
        star_op(t, i)
    } else if i == 0 || between(&w, i + 1, i, i + 2) {
        star_op(t, i + 1)
    } else {
        Ok(t.clone())
    }
}

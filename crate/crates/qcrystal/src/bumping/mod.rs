//! Marked words and the Little bumping operators `𝔟_π`, `𝔦𝔟_π`, `𝔣𝔟_π`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::insertion::Factorization;
use crate::permwords::{
    fpf_conjugate, in_class, is_fpf_involution_word, is_involution_word, is_reduced_word, is_valid_word,
    not_in_class, reduced_product, Flavor, Permutation, Target, Word,
};

/// A word with a 1-based marked position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkedWord {
    pub word: Word,
    pub mark: usize,
}

impl MarkedWord {
    pub fn new(word: Word, mark: usize) -> Self {
        MarkedWord { word, mark }
    }
}

impl std::fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.word, self.mark)
    }
}

/// `del_i(w)`.
pub fn del(w: &Word, i: usize) -> Result<Word> {
    w.del(i)
}

/// Whether `(w, i)` is a π-marked word of the flavor: `del_i(w)` lies in
/// `R(π)`, `R^O(π)` or `R^Sp(π)`.
pub fn is_marked(w: &Word, i: usize, target: &Target, flavor: Flavor) -> bool {
    w.del(i).is_ok_and(|d| in_class(&d, target, flavor))
}

/// All `i` with `(w, i)` π-marked.
pub fn marked_indices(w: &Word, target: &Target, flavor: Flavor) -> Vec<usize> {
    (1..=w.len()).filter(|&i| is_marked(w, i, target, flavor)).collect()
}

/// `w` reduced, not an fpf-involution word, and `σ^{-1} 1_fpf σ = π` for
/// its product `σ`.
pub fn is_semi_reduced(w: &Word, target: &Target) -> bool {
    match target {
        Target::Fpf(pi) => is_reduced_word(w) && !is_fpf_involution_word(w) && fpf_conjugate(w) == *pi,
        Target::Perm(_) => false,
    }
}

/// Reduced, inv-reduced or fpf-reduced: where a bump stops.
pub fn is_flavor_reduced(w: &Word, flavor: Flavor) -> bool {
    match flavor {
        Flavor::Reduced => is_reduced_word(w),
        Flavor::Involution => is_involution_word(w),
        Flavor::Fpf => is_fpf_involution_word(w),
    }
}

/// Where a push increments the marked letter itself.
fn keeps_mark(w: &Word, target: &Target, flavor: Flavor) -> bool {
    is_flavor_reduced(w, flavor) || (flavor == Flavor::Fpf && is_semi_reduced(w, target))
}

fn check_marked(mw: &MarkedWord, target: &Target, flavor: Flavor) -> Result<()> {
    if is_marked(&mw.word, mw.mark, target, flavor) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{mw} is not a {target}-marked {} word", flavor.name())))
    }
}

/// The unique `j ≠ i` with `(w, j)` also π-marked, for a marked word on
/// which a push moves the mark.
pub fn companion_index(mw: &MarkedWord, target: &Target, flavor: Flavor) -> Result<usize> {
    check_marked(mw, target, flavor)?;
    if keeps_mark(&mw.word, target, flavor) {
        return Err(Error::InvalidInput(format!("{mw} is terminal; it has no companion index")));
    }
    let others: Vec<usize> =
        marked_indices(&mw.word, target, flavor).into_iter().filter(|&j| j != mw.mark).collect();
    match others.as_slice() {
        [j] => Ok(*j),
        _ => Err(Error::Invariant(format!("{mw} has {} companion indices {others:?}", others.len()))),
    }
}

/// `push`, `ipush` or `fpush` according to the flavor.
pub fn push_step(mw: &MarkedWord, target: &Target, flavor: Flavor) -> Result<MarkedWord> {
    check_marked(mw, target, flavor)?;
    let j = if keeps_mark(&mw.word, target, flavor) { mw.mark } else { companion_index(mw, target, flavor)? };
    let mut v = mw.word.clone();
    v.0[j - 1] += 1;
    Ok(MarkedWord::new(v, j))
}

/// Default bound on push chain length for a word.
pub fn default_push_cap(w: &Word) -> usize {
    let range = match (w.iter().min(), w.iter().max()) {
        (Some(a), Some(b)) => (b - a) as usize + 2,
        _ => 2,
    };
    (10 * w.len().max(1) * range).max(100)
}

fn check_word(w: &Word, flavor: Flavor) -> Result<()> {
    if is_valid_word(w, flavor) {
        Ok(())
    } else {
        Err(not_in_class(w, flavor))
    }
}

/// The push chain from the unique π-marking of `w` to the first
/// flavor-reduced state, both ends included; `None` when no marking exists.
pub fn bump_trace(w: &Word, target: &Target, flavor: Flavor, cap: Option<usize>) -> Result<Option<Vec<MarkedWord>>> {
    check_word(w, flavor)?;
    let marks = marked_indices(w, target, flavor);
    let i = match marks.as_slice() {
        [] => return Ok(None),
        [i] => *i,
        _ => return Err(Error::Invariant(format!("{w} has several markings {marks:?}"))),
    };
    let cap = cap.unwrap_or_else(|| default_push_cap(w));
    let mut chain = vec![MarkedWord::new(w.clone(), i)];
    loop {
        let next = push_step(chain.last().unwrap(), target, flavor)?;
        let done = is_flavor_reduced(&next.word, flavor);
        chain.push(next);
        if done {
            return Ok(Some(chain));
        }
        if chain.len() > cap {
            return Err(Error::IterationCap { cap });
        }
    }
}

/// `𝔟_π(w)`, `𝔦𝔟_π(w)` or `𝔣𝔟_π(w)`.
pub fn bump(w: &Word, target: &Target, flavor: Flavor) -> Result<Word> {
    Ok(match bump_trace(w, target, flavor, None)? {
        Some(chain) => chain.last().unwrap().word.clone(),
        None => w.clone(),
    })
}

/// The bump of the concatenated word, re-split at the original factor sizes.
pub fn bump_factorization(f: &Factorization, target: &Target, flavor: Flavor) -> Result<Factorization> {
    let v = bump(&f.word(), target, flavor)?;
    Factorization::split(&v, &f.sizes())
        .map_err(|e| Error::Invariant(format!("bump of {f} broke a factor: {e}")))
}

/// Atoms `α_1, …, α_l` with `bump(w) = 𝔟_{α_l} ⋯ 𝔟_{α_1}(w)`. The chain is
/// cut at its ordinarily reduced states; each segment is an ordinary bump by
/// the product of the word with the next-incremented letter deleted.
pub fn decompose_bump(w: &Word, target: &Target, flavor: Flavor) -> Result<Vec<Permutation>> {
    let Some(chain) = bump_trace(w, target, flavor, None)? else {
        return Ok(Vec::new());
    };
    let mut atoms = Vec::new();
    for k in 0..chain.len() - 1 {
        if is_reduced_word(&chain[k].word) {
            let d = chain[k].word.del(chain[k + 1].mark)?;
            atoms.push(
                reduced_product(&d).ok_or_else(|| Error::Invariant(format!("{d} is not reduced in the chain")))?,
            );
        }
    }
    Ok(atoms)
}

/// `𝔟_{α_l} ⋯ 𝔟_{α_1}(w)` for plain Little bumps.
pub fn replay(w: &Word, atoms: &[Permutation]) -> Result<Word> {
    let mut v = w.clone();
    for a in atoms {
        v = bump(&v, &Target::Perm(a.clone()), Flavor::Reduced)?;
    }
    Ok(v)
}

/// Letterwise differences `bump(w)_i − w_i`.
pub fn increments(w: &Word, v: &Word) -> Vec<i32> {
    w.iter().zip(v.iter()).map(|(a, b)| b - a).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permwords::FpfInvolution;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn involution_chain_example() {
        let pi = Target::Perm(Permutation::from_cycles(&[vec![2, 5]]).unwrap());
        let chain = bump_trace(&word("2134"), &pi, Flavor::Involution, None).unwrap().unwrap();
        let shown: Vec<String> = chain.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["(2134, 2)", "(2234, 2)", "(3234, 1)", "(3244, 3)", "(3245, 4)"]);
        assert_eq!(companion_index(&MarkedWord::new(word("3234"), 1), &pi, Flavor::Involution).unwrap(), 3);
    }

    #[test]
    fn fpf_chain_example() {
        let pi = Target::Fpf(FpfInvolution::from_cycles(&[(1, 2), (3, 6), (4, 5)]).unwrap());
        let chain = bump_trace(&word("243"), &pi, Flavor::Fpf, None).unwrap().unwrap();
        let words: Vec<String> = chain.iter().map(|m| m.word.to_string()).collect();
        assert_eq!(words, ["243", "343", "443", "453", "454", "455", "465"]);
        assert!(is_semi_reduced(&word("343"), &pi));
        assert!(is_semi_reduced(&word("454"), &pi));
        assert!(!is_semi_reduced(&word("453"), &pi) && is_reduced_word(&word("453")));
        assert!(companion_index(&MarkedWord::new(word("343"), 1), &pi, Flavor::Fpf).is_err());
    }

    #[test]
    fn fixed_point_branch() {
        let pi = Target::Perm(Permutation::from_cycles(&[vec![1, 2]]).unwrap());
        assert_eq!(bump(&word("34"), &pi, Flavor::Reduced).unwrap(), word("34"));
        assert!(bump(&word("11"), &pi, Flavor::Reduced).is_err());
        assert_eq!(del(&word("2134"), 2).unwrap(), word("234"));
    }
}

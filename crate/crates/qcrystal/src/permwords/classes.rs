//! Word classes R(π), R^O(π), R^Sp(π): membership, enumeration, atoms and
//! equivalence relations.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::fpf::FpfInvolution;
use super::perm::Permutation;
use super::word::Word;
use crate::error::{Error, Result};

/// Which family of words is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Reduced,
    Involution,
    Fpf,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Reduced => "reduced",
            Flavor::Involution => "involution",
            Flavor::Fpf => "fpf-involution",
        }
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reduced" | "plain" | "K" => Ok(Flavor::Reduced),
            "involution" | "inv" | "O" => Ok(Flavor::Involution),
            "fpf" | "fpf-involution" | "Sp" => Ok(Flavor::Fpf),
            _ => Err(Error::InvalidInput(format!("unknown flavor {s:?}"))),
        }
    }
}

/// A permutation paired with the flavor of words that generate it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Target {
    Perm(Permutation),
    Fpf(FpfInvolution),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Perm(p) => write!(f, "{p}"),
            Target::Fpf(p) => write!(f, "{p}"),
        }
    }
}

/// `s_{w_1} s_{w_2} ⋯ s_{w_k}`, whether or not the word is reduced.
pub fn word_to_permutation(w: &[i32]) -> Permutation {
    w.iter().fold(Permutation::identity(), |p, &a| p.mul_s_right(a))
}

/// The product of `w` if `w` is a reduced word.
pub fn reduced_product(w: &[i32]) -> Option<Permutation> {
    let mut p = Permutation::identity();
    for &a in w {
        if p.is_descent(a) {
            return None;
        }
        p = p.mul_s_right(a);
    }
    Some(p)
}

pub fn is_reduced_word(w: &[i32]) -> bool {
    reduced_product(w).is_some()
}

/// The involution `1 ⋊ s_{w_1} ⋊ ⋯ ⋊ s_{w_k}` if `w` is an involution word.
pub fn involution_product(w: &[i32]) -> Option<Permutation> {
    let mut p = Permutation::identity();
    for &a in w {
        if p.is_descent(a) {
            return None;
        }
        p = p.rtimes_step(a);
    }
    Some(p)
}

pub fn is_involution_word(w: &[i32]) -> bool {
    involution_product(w).is_some()
}

/// `s_{w_k} ⋯ s_{w_1} 1_fpf s_{w_1} ⋯ s_{w_k}`, regardless of validity.
pub fn fpf_conjugate(w: &[i32]) -> FpfInvolution {
    w.iter().fold(FpfInvolution::base(), |p, &a| p.conj_s(a))
}

/// The fpf-involution generated by `w` if `w` is an fpf-involution word.
pub fn fpf_product(w: &[i32]) -> Option<FpfInvolution> {
    let mut p = FpfInvolution::base();
    for &a in w {
        if p.is_descent(a) {
            return None;
        }
        p = p.conj_s(a);
    }
    Some(p)
}

pub fn is_fpf_involution_word(w: &[i32]) -> bool {
    fpf_product(w).is_some()
}

/// The target generated by `w` under `flavor`, if `w` is valid for it.
pub fn word_target(w: &[i32], flavor: Flavor) -> Option<Target> {
    match flavor {
        Flavor::Reduced => reduced_product(w).map(Target::Perm),
        Flavor::Involution => involution_product(w).map(Target::Perm),
        Flavor::Fpf => fpf_product(w).map(Target::Fpf),
    }
}

pub fn is_valid_word(w: &[i32], flavor: Flavor) -> bool {
    word_target(w, flavor).is_some()
}

/// Whether `w` belongs to the class of `target` under `flavor`.
pub fn in_class(w: &[i32], target: &Target, flavor: Flavor) -> bool {
    word_target(w, flavor).as_ref() == Some(target)
}

fn check_flavor(target: &Target, flavor: Flavor) -> Result<()> {
    match (target, flavor) {
        (Target::Perm(_), Flavor::Reduced) => Ok(()),
        (Target::Perm(p), Flavor::Involution) if p.is_involution() => Ok(()),
        (Target::Fpf(_), Flavor::Fpf) => Ok(()),
        _ => Err(Error::FlavorMismatch(format!("{target} cannot index {} words", flavor.name()))),
    }
}

/// All words for `target` under `flavor`, by descent recursion: the last
/// letter of a word is always a descent of the generated element.
pub fn enumerate_words(target: &Target, flavor: Flavor) -> Result<BTreeSet<Word>> {
    check_flavor(target, flavor)?;
    Ok(match target {
        Target::Perm(p) if flavor == Flavor::Reduced => {
            let mut memo = HashMap::new();
            perm_words(p, &mut memo, &|q, a| q.mul_s_right(a))
        }
        Target::Perm(p) => {
            let mut memo = HashMap::new();
            perm_words(p, &mut memo, &|q, a| {
                if q.apply(a) == a + 1 {
                    q.mul_s_right(a)
                } else {
                    q.conj_s(a)
                }
            })
        }
        Target::Fpf(p) => {
            let mut memo = HashMap::new();
            fpf_words(p, &mut memo)
        }
    }
    .into_iter()
    .map(Word)
    .collect())
}

fn perm_words(
    p: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<i32>>>,
    undo: &dyn Fn(&Permutation, i32) -> Permutation,
) -> Vec<Vec<i32>> {
    if p.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(p) {
        return v.clone();
    }
    let mut out = Vec::new();
    for a in p.descents() {
        let q = undo(p, a);
        for mut w in perm_words(&q, memo, undo) {
            w.push(a);
            out.push(w);
        }
    }
    memo.insert(p.clone(), out.clone());
    out
}

fn fpf_words(p: &FpfInvolution, memo: &mut HashMap<FpfInvolution, Vec<Vec<i32>>>) -> Vec<Vec<i32>> {
    if p.is_base() {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(p) {
        return v.clone();
    }
    let mut out = Vec::new();
    for a in p.visible_descents() {
        for mut w in fpf_words(&p.conj_s(a), memo) {
            w.push(a);
            out.push(w);
        }
    }
    memo.insert(p.clone(), out.clone());
    out
}

/// The distinct permutations `s_{w_1}⋯s_{w_k}` over words `w` of the class;
/// for the involution flavor this is A^O(π), for fpf it is A^Sp(π).
pub fn atoms(target: &Target, flavor: Flavor) -> Result<BTreeSet<Permutation>> {
    Ok(enumerate_words(target, flavor)?.iter().map(|w| word_to_permutation(w)).collect())
}

/// Equivalence relations on words. The Coxeter-Knuth family generates the
/// insertion fibers; the braid family generates whole word classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    /// `~K`: closure under `ck_i`.
    K,
    /// `~O`: `ck_i` and `ck0_O`.
    O,
    /// `~Sp`: `ck_i` and `ck0_Sp`.
    Sp,
    /// Braid relations.
    Braid,
    /// `=_O`: braid relations plus swapping the first two letters.
    BraidO,
    /// `=_Sp`: braid relations plus `w_1(w_1−1)⋯ ↔ w_1(w_1+1)⋯`.
    BraidSp,
}

impl FromStr for Relation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" | "k" => Ok(Relation::K),
            "O" | "o" => Ok(Relation::O),
            "Sp" | "sp" => Ok(Relation::Sp),
            "braid" => Ok(Relation::Braid),
            "braid-O" | "braid-o" => Ok(Relation::BraidO),
            "braid-Sp" | "braid-sp" => Ok(Relation::BraidSp),
            _ => Err(Error::InvalidInput(format!("unknown relation {s:?}"))),
        }
    }
}

fn neighbors(w: &Word, rel: Relation) -> Vec<Word> {
    let mut out = Vec::new();
    match rel {
        Relation::K | Relation::O | Relation::Sp => {
            for i in 1..=w.len().saturating_sub(2) {
                out.push(w.ck(i));
            }
            match rel {
                Relation::O => out.push(w.ck0_o()),
                Relation::Sp => out.push(w.ck0_sp()),
                _ => {}
            }
        }
        Relation::Braid | Relation::BraidO | Relation::BraidSp => {
            let v = &w.0;
            for j in 0..v.len().saturating_sub(1) {
                if (v[j] - v[j + 1]).abs() > 1 {
                    let mut u = v.clone();
                    u.swap(j, j + 1);
                    out.push(Word(u));
                }
                if j + 2 < v.len() && v[j] == v[j + 2] && (v[j] - v[j + 1]).abs() == 1 {
                    let mut u = v.clone();
                    u[j] = v[j + 1];
                    u[j + 1] = v[j];
                    u[j + 2] = v[j + 1];
                    out.push(Word(u));
                }
            }
            if v.len() >= 2 {
                match rel {
                    Relation::BraidO => out.push(w.ck0_o()),
                    Relation::BraidSp if (v[1] - v[0]).abs() == 1 => {
                        let mut u = v.clone();
                        u[1] = 2 * v[0] - v[1];
                        out.push(Word(u));
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

/// BFS closure of `{w}` under the relation.
pub fn equivalence_class(w: &Word, rel: Relation) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        for u in neighbors(&v, rel) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Length data of a target: ℓ, the flavored length, and κ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LengthInvariants {
    pub ell: usize,
    pub flavored: usize,
    pub kappa: usize,
}

/// `(ℓ(π), ℓ^O(π), κ(π))` for involutions, `(ℓ(π), ℓ(π), κ)` for plain
/// permutations, and `(ℓ(σ), ℓ^Sp(π), 0)` for fpf π with σ its truncation.
pub fn length_invariants(target: &Target, flavor: Flavor) -> Result<LengthInvariants> {
    check_flavor(target, flavor)?;
    Ok(match target {
        Target::Perm(p) => {
            let ell = p.length();
            let kappa = if p.is_involution() { p.kappa() } else { 0 };
            let flavored = if flavor == Flavor::Involution { (ell + kappa) / 2 } else { ell };
            LengthInvariants { ell, flavored, kappa }
        }
        Target::Fpf(p) => {
            let (sigma, _) = p.truncation();
            LengthInvariants { ell: sigma.length(), flavored: p.sp_length(), kappa: 0 }
        }
    })
}

/// The generic "this word is of the wrong class" error.
pub fn not_in_class(w: &[i32], flavor: Flavor) -> Error {
    Error::NotInClass { word: Word(w.to_vec()).to_string(), class: flavor.name() }
}

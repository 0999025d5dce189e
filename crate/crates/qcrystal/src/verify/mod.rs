//! Exhaustive checks of the theorems behind each module over a corpus of
//! small word classes. Cases run in parallel; reports are assembled in a
//! fixed order so identical runs give identical output.

mod checks;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permwords::{enumerate_words, is_valid_word, word_target, Flavor, Target, Word};

pub use checks::{
    check_bump_properties, check_crystal_axioms, check_dual_equivalence, check_fibers, check_increment_bound,
    check_positivity, check_q_morphism, check_reduction_lemma, check_supersymmetry,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyTarget {
    CrystalAxioms,
    EgFibers,
    OegFibers,
    SpegFibers,
    QMorphismO,
    QMorphismSp,
    BumpProperties,
    DualEquivalence,
    ReductionLemma,
    Supersymmetry,
    SchurPPositivity,
    ConjectureIbBound,
    ConjectureFbBound,
}

impl VerifyTarget {
    pub const ALL: [VerifyTarget; 13] = [
        VerifyTarget::CrystalAxioms,
        VerifyTarget::EgFibers,
        VerifyTarget::OegFibers,
        VerifyTarget::SpegFibers,
        VerifyTarget::QMorphismO,
        VerifyTarget::QMorphismSp,
        VerifyTarget::BumpProperties,
        VerifyTarget::DualEquivalence,
        VerifyTarget::ReductionLemma,
        VerifyTarget::Supersymmetry,
        VerifyTarget::SchurPPositivity,
        VerifyTarget::ConjectureIbBound,
        VerifyTarget::ConjectureFbBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerifyTarget::CrystalAxioms => "crystal-axioms",
            VerifyTarget::EgFibers => "eg-fibers",
            VerifyTarget::OegFibers => "oeg-fibers",
            VerifyTarget::SpegFibers => "speg-fibers",
            VerifyTarget::QMorphismO => "q-morphism-O",
            VerifyTarget::QMorphismSp => "q-morphism-Sp",
            VerifyTarget::BumpProperties => "bump-properties",
            VerifyTarget::DualEquivalence => "dual-equivalence",
            VerifyTarget::ReductionLemma => "reduction-lemma",
            VerifyTarget::Supersymmetry => "supersymmetry",
            VerifyTarget::SchurPPositivity => "schurP-positivity",
            VerifyTarget::ConjectureIbBound => "conjecture-ib-bound",
            VerifyTarget::ConjectureFbBound => "conjecture-fb-bound",
        }
    }

    /// Conjecture targets report counterexamples instead of failing.
    pub fn is_conjecture(self) -> bool {
        matches!(self, VerifyTarget::ConjectureIbBound | VerifyTarget::ConjectureFbBound)
    }
}

impl fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerifyTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        VerifyTarget::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown verify target {s:?}")))
    }
}

/// Size limits for a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Longest word (or flavored length) in the corpus.
    pub maxlen: usize,
    /// Largest number of factors.
    pub n: usize,
}

impl Bounds {
    pub const MAX_LEN: usize = 8;
    pub const MAX_N: usize = 5;

    pub fn new(maxlen: usize, n: usize) -> Result<Self> {
        if maxlen == 0 || n == 0 {
            return Err(Error::InvalidInput("bounds must be positive".into()));
        }
        if maxlen > Self::MAX_LEN || n > Self::MAX_N {
            return Err(Error::InvalidInput(format!(
                "bounds maxlen={maxlen}, n={n} exceed the caps {}, {}",
                Self::MAX_LEN,
                Self::MAX_N
            )));
        }
        Ok(Bounds { maxlen, n })
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { maxlen: 5, n: 3 }
    }
}

/// One failed case; `size` orders counterexamples so the smallest is first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub size: usize,
    pub detail: String,
}

impl Failure {
    pub fn new(size: usize, detail: impl Into<String>) -> Self {
        Failure { size, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub target: VerifyTarget,
    pub bounds: Bounds,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn minimal_counterexample(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// Case count and failures of one check, failures sorted smallest first.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, size: usize, detail: impl Into<String>) {
        self.failures.push(Failure::new(size, detail));
    }

    pub fn merge(mut self, other: Outcome) -> Outcome {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }

    fn sorted(mut self) -> Outcome {
        self.failures.sort();
        self.failures.dedup();
        self
    }
}

/// Runs `f` on every item in parallel and merges the outcomes in item order.
pub(crate) fn par_outcome<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync) -> Outcome {
    let parts: Vec<Outcome> = items.par_iter().map(&f).collect();
    parts.into_iter().fold(Outcome::default(), Outcome::merge).sorted()
}

pub fn run(target: VerifyTarget, bounds: Bounds) -> Result<Report> {
    let o = match target {
        VerifyTarget::CrystalAxioms => check_crystal_axioms(bounds)?,
        VerifyTarget::EgFibers => check_fibers(Flavor::Reduced, bounds)?,
        VerifyTarget::OegFibers => check_fibers(Flavor::Involution, bounds)?,
        VerifyTarget::SpegFibers => check_fibers(Flavor::Fpf, bounds)?,
        VerifyTarget::QMorphismO => check_q_morphism(Flavor::Involution, bounds)?,
        VerifyTarget::QMorphismSp => check_q_morphism(Flavor::Fpf, bounds)?,
        VerifyTarget::BumpProperties => [Flavor::Reduced, Flavor::Involution, Flavor::Fpf]
            .into_iter()
            .map(|fl| check_bump_properties(fl, bounds))
            .try_fold(Outcome::default(), |acc, o| o.map(|o| acc.merge(o)))?,
        VerifyTarget::DualEquivalence => check_dual_equivalence(bounds)?,
        VerifyTarget::ReductionLemma => check_reduction_lemma(bounds)?,
        VerifyTarget::Supersymmetry => check_supersymmetry(bounds)?,
        VerifyTarget::SchurPPositivity => check_positivity(bounds)?,
        VerifyTarget::ConjectureIbBound => check_increment_bound(Flavor::Involution, 1, bounds)?,
        VerifyTarget::ConjectureFbBound => check_increment_bound(Flavor::Fpf, 2, bounds)?,
    }
    .sorted();
    Ok(Report { target, bounds, checked: o.checked, failures: o.failures })
}

/// Every word class `R(π)`, `R^O(π)` or `R^Sp(π)` containing a word of
/// length at most `maxlen` over the letters `1, …, maxlen + 1`, in full.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub flavor: Flavor,
    pub classes: BTreeMap<Target, Vec<Word>>,
}

impl Corpus {
    pub fn build(flavor: Flavor, maxlen: usize) -> Result<Self> {
        let window = maxlen as i32 + 1;
        let mut targets = BTreeSet::new();
        let mut frontier = vec![Word::empty()];
        targets.insert(word_target(&[], flavor).expect("the empty word is valid"));
        for _ in 0..maxlen {
            let mut next = Vec::new();
            for w in &frontier {
                for a in 1..=window {
                    let mut v = w.0.clone();
                    v.push(a);
                    if is_valid_word(&v, flavor) {
                        targets.insert(word_target(&v, flavor).expect("valid word"));
                        next.push(Word(v));
                    }
                }
            }
            frontier = next;
        }
        let classes = targets
            .into_iter()
            .map(|t| Ok((t.clone(), enumerate_words(&t, flavor)?.into_iter().collect())))
            .collect::<Result<_>>()?;
        Ok(Corpus { flavor, classes })
    }

    pub fn targets(&self) -> Vec<Target> {
        self.classes.keys().cloned().collect()
    }

    /// Targets with a word starting at letter 1 or 2, one representative of
    /// most translation families.
    pub fn anchored_targets(&self) -> Vec<Target> {
        self.classes
            .iter()
            .filter(|(_, ws)| ws.iter().flat_map(|w| w.iter()).min().is_none_or(|&a| a <= 2))
            .map(|(t, _)| t.clone())
            .collect()
    }

    pub fn words(&self) -> Vec<Word> {
        self.classes.values().flatten().cloned().collect()
    }
}

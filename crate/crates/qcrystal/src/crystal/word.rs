use super::{Crystal, CrystalIndex};
use crate::permwords::Word;

/// Positions of the unpaired `i` and `i+1` after bracketing `i ↦ ")"`,
/// `i+1 ↦ "("`. The unpaired `i` all precede the unpaired `i+1`.
fn unpaired_positions(w: &[i32], i: i32) -> (Vec<usize>, Vec<usize>) {
    let mut lows: Vec<usize> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (k, &a) in w.iter().enumerate() {
        if a == i + 1 {
            open.push(k);
        } else if a == i && open.pop().is_none() {
            lows.push(k);
        }
    }
    (lows, open)
}

pub fn word_f(w: &Word, i: i32) -> Option<Word> {
    let (lows, _) = unpaired_positions(w, i);
    let k = *lows.last()?;
    let mut v = w.0.clone();
    v[k] = i + 1;
    Some(Word(v))
}

pub fn word_e(w: &Word, i: i32) -> Option<Word> {
    let (_, highs) = unpaired_positions(w, i);
    let k = *highs.first()?;
    let mut v = w.0.clone();
    v[k] = i;
    Some(Word(v))
}

pub fn word_f_qbar(w: &Word) -> Option<Word> {
    let k = w.iter().position(|&a| a == 1 || a == 2)?;
    if w[k] != 1 {
        return None;
    }
    let mut v = w.0.clone();
    v[k] = 2;
    Some(Word(v))
}

pub fn word_e_qbar(w: &Word) -> Option<Word> {
    let k = w.iter().position(|&a| a == 1 || a == 2)?;
    if w[k] != 2 {
        return None;
    }
    let mut v = w.0.clone();
    v[k] = 1;
    Some(Word(v))
}

/// Words with letters in `[n]`: the tensor power of the standard q_n
/// crystal, read left to right.
#[derive(Clone, Copy, Debug)]
pub struct WordCrystal {
    pub n: usize,
}

impl WordCrystal {
    pub fn new(n: usize) -> Self {
        WordCrystal { n }
    }

    /// All words of length `m` over `[n]`.
    pub fn all_words(&self, m: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..m {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=self.n as i32).map(move |a| {
                        let mut v = w.0.clone();
                        v.push(a);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl Crystal for WordCrystal {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.n
    }

    fn is_queer(&self) -> bool {
        true
    }

    fn weight(&self, b: &Word) -> Vec<u32> {
        let mut wt = vec![0; self.n];
        for &a in b.iter() {
            wt[a as usize - 1] += 1;
        }
        wt
    }

    fn f(&self, b: &Word, i: CrystalIndex) -> Option<Word> {
        match i {
            CrystalIndex::QBar => word_f_qbar(b),
            CrystalIndex::Gl(i) => word_f(b, i as i32),
        }
    }

    fn e(&self, b: &Word, i: CrystalIndex) -> Option<Word> {
        match i {
            CrystalIndex::QBar => word_e_qbar(b),
            CrystalIndex::Gl(i) => word_e(b, i as i32),
        }
    }
}

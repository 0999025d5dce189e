use super::word::{word_e, word_f};
use super::{Crystal, CrystalIndex};
use crate::permwords::Word;
use crate::tableaux::Tableau;

/// The gl_n crystal on semistandard tableaux with entries in `[n]`, acting
/// through the row reading word.
#[derive(Clone, Copy, Debug)]
pub struct TableauCrystal {
    pub n: usize,
}

impl TableauCrystal {
    pub fn new(n: usize) -> Self {
        TableauCrystal { n }
    }
}

fn refill(t: &Tableau, w: &Word) -> Tableau {
    let mut rows = Vec::with_capacity(t.rows().len());
    let mut k = 0;
    for r in t.rows().iter().rev() {
        rows.push(w[k..k + r.len()].to_vec());
        k += r.len();
    }
    rows.reverse();
    Tableau::new(rows).expect("same shape")
}

impl Crystal for TableauCrystal {
    type Elem = Tableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn is_queer(&self) -> bool {
        false
    }

    fn weight(&self, b: &Tableau) -> Vec<u32> {
        b.weight(self.n).expect("entries in [n]")
    }

    fn f(&self, b: &Tableau, i: CrystalIndex) -> Option<Tableau> {
        match i {
            CrystalIndex::QBar => None,
            CrystalIndex::Gl(i) => word_f(&b.row_word(), i as i32).map(|w| refill(b, &w)),
        }
    }

    fn e(&self, b: &Tableau, i: CrystalIndex) -> Option<Tableau> {
        match i {
            CrystalIndex::QBar => None,
            CrystalIndex::Gl(i) => word_e(&b.row_word(), i as i32).map(|w| refill(b, &w)),
        }
    }
}

//! The q_n crystal on semistandard shifted tableaux with entries in `[n]`.

use std::collections::BTreeSet;

use super::{Crystal, CrystalIndex};
use crate::tableaux::{Entry, ShiftedTableau};

type Cell = (usize, usize);

/// Boxes holding `i` or `i+1` (primed or not) in shifted reading order, with
/// matched pairs removed after reading `i ↦ ")"` and `i+1 ↦ "("`.
pub fn unpaired(t: &ShiftedTableau, i: i32) -> Vec<Cell> {
    let boxes: Vec<Cell> = t
        .shword_boxes()
        .into_iter()
        .filter(|&(x, y)| {
            let v = t.get(x, y).unwrap().value();
            v == i || v == i + 1
        })
        .collect();
    let mut keep = vec![true; boxes.len()];
    let mut open: Vec<usize> = Vec::new();
    for (k, &(x, y)) in boxes.iter().enumerate() {
        if t.get(x, y).unwrap().value() == i + 1 {
            open.push(k);
        } else if let Some(j) = open.pop() {
            keep[j] = false;
            keep[k] = false;
        }
    }
    boxes.into_iter().zip(keep).filter(|&(_, k)| k).map(|(c, _)| c).collect()
}

/// The ribbon of boxes with value `k` containing `start`, ordered from its
/// northwest end to its southeast end.
fn ribbon(t: &ShiftedTableau, start: Cell, k: i32) -> Vec<Cell> {
    let has = |c: Cell| t.get(c.0, c.1).is_some_and(|e| e.value() == k);
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        if !has(c) || !seen.insert(c) {
            continue;
        }
        let (x, y) = c;
        stack.extend([(x + 1, y), (x, y + 1)]);
        if x > 1 {
            stack.push((x - 1, y));
        }
        if y > 1 {
            stack.push((x, y - 1));
        }
    }
    let mut v: Vec<Cell> = seen.into_iter().collect();
    v.sort_by_key(|&(x, y)| (y, std::cmp::Reverse(x)));
    v
}

fn at(t: &ShiftedTableau, x: usize, y: usize) -> Option<Entry> {
    if x == 0 || y == 0 {
        None
    } else {
        t.get(x, y)
    }
}

pub fn shtab_f(t: &ShiftedTableau, i: i32) -> Option<ShiftedTableau> {
    let (x, y) = *unpaired(t, i).iter().rev().find(|&&(x, y)| t.get(x, y).unwrap().value() == i)?;
    let iu = Entry::unprimed(i);
    let (jp, ju) = (Entry::primed(i + 1), Entry::unprimed(i + 1));
    let right = at(t, x, y + 1);
    let up = at(t, x + 1, y);
    let mut s = t.clone();
    if t.get(x, y) == Some(iu) {
        if right == Some(jp) {
            s.set(x, y, jp);
            s.set(x, y + 1, ju);
        } else if up != Some(jp) && up != Some(ju) {
            s.set(x, y, ju);
        } else {
            let (tx, ty) = ribbon(t, (x + 1, y), i + 1)[0];
            s.set(x, y, jp);
            if tx != ty {
                s.set(tx, ty, ju);
            }
        }
    } else if up == Some(iu) {
        s.set(x, y, iu);
        s.set(x + 1, y, jp);
    } else if right != Some(iu) && right != Some(jp) {
        s.set(x, y, jp);
    } else {
        let rib = ribbon(t, (x, y), i);
        let k = rib.iter().position(|&c| c == (x, y)).unwrap();
        let &(tx, ty) = rib[k + 1..].iter().find(|&&(a, b)| {
            let r = at(t, a, b + 1);
            t.get(a, b) == Some(iu) && r != Some(iu) && r != Some(jp)
        })?;
        s.set(x, y, iu);
        s.set(tx, ty, jp);
    }
    Some(s)
}

pub fn shtab_e(t: &ShiftedTableau, i: i32) -> Option<ShiftedTableau> {
    let (x, y) = *unpaired(t, i).iter().find(|&&(x, y)| t.get(x, y).unwrap().value() == i + 1)?;
    let (ip, iu) = (Entry::primed(i), Entry::unprimed(i));
    let (jp, ju) = (Entry::primed(i + 1), Entry::unprimed(i + 1));
    let left = at(t, x, y - 1);
    let down = at(t, x - 1, y);
    let mut s = t.clone();
    if t.get(x, y) == Some(ju) {
        if left == Some(jp) {
            s.set(x, y, jp);
            s.set(x, y - 1, iu);
        } else if down != Some(iu) && down != Some(jp) {
            s.set(x, y, iu);
        } else {
            let rib = ribbon(t, (x, y), i + 1);
            let k = rib.iter().position(|&c| c == (x, y)).unwrap();
            let &(tx, ty) = rib[k + 1..].iter().find(|&&(a, b)| {
                let d = at(t, a - 1, b);
                t.get(a, b) == Some(jp) && d != Some(iu) && d != Some(jp)
            })?;
            s.set(x, y, jp);
            s.set(tx, ty, iu);
        }
    } else if down == Some(iu) {
        s.set(x, y, iu);
        s.set(x - 1, y, ip);
    } else if left != Some(ip) && left != Some(iu) {
        s.set(x, y, ip);
    } else {
        let (tx, ty) = ribbon(t, (x, y - 1), i)[0];
        s.set(x, y, iu);
        if tx != ty {
            s.set(tx, ty, ip);
        }
    }
    Some(s)
}

pub fn shtab_f_qbar(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    if t.entries().any(|e| e == Entry::primed(2)) {
        return None;
    }
    let row = t.rows().first()?;
    let k = row.iter().rposition(|&e| e == Entry::unprimed(1))?;
    let mut s = t.clone();
    s.set(1, 1 + k, if k == 0 { Entry::unprimed(2) } else { Entry::primed(2) });
    Some(s)
}

pub fn shtab_e_qbar(t: &ShiftedTableau) -> Option<ShiftedTableau> {
    let row = t.rows().first()?;
    let k = if row[0] == Entry::unprimed(2) {
        0
    } else {
        row.iter().position(|&e| e == Entry::primed(2))?
    };
    let mut s = t.clone();
    s.set(1, 1 + k, Entry::unprimed(1));
    Some(s)
}

/// `ShTab_n(λ)` for all strict `λ` at once.
#[derive(Clone, Copy, Debug)]
pub struct ShiftedTableauCrystal {
    pub n: usize,
}

impl ShiftedTableauCrystal {
    pub fn new(n: usize) -> Self {
        ShiftedTableauCrystal { n }
    }
}

impl Crystal for ShiftedTableauCrystal {
    type Elem = ShiftedTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn is_queer(&self) -> bool {
        true
    }

    fn weight(&self, b: &ShiftedTableau) -> Vec<u32> {
        let mut w = vec![0; self.n];
        for e in b.entries() {
            w[e.value() as usize - 1] += 1;
        }
        w
    }

    fn f(&self, b: &ShiftedTableau, i: CrystalIndex) -> Option<ShiftedTableau> {
        match i {
            CrystalIndex::QBar => shtab_f_qbar(b),
            CrystalIndex::Gl(i) => shtab_f(b, i as i32),
        }
    }

    fn e(&self, b: &ShiftedTableau, i: CrystalIndex) -> Option<ShiftedTableau> {
        match i {
            CrystalIndex::QBar => shtab_e_qbar(b),
            CrystalIndex::Gl(i) => shtab_e(b, i as i32),
        }
    }
}

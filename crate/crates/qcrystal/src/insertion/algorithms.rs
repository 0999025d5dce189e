//! Edelman-Greene insertion, its orthogonal and symplectic shifted variants,
//! and Haiman's mixed insertion.

use serde::Serialize;

use super::factorization::Factorization;
use crate::error::{Error, Result};
use crate::permwords::{is_fpf_involution_word, is_involution_word, is_reduced_word, not_in_class, Flavor, Word};
use crate::tableaux::{Entry, ShiftedTableau, Tableau};

/// Whether an insertion step acted on a row or a column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Line {
    Row,
    Column,
}

/// One step of the bumping path: `x` inserted into row/column `index`,
/// meeting `y` (or nothing).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub line: Line,
    pub index: usize,
    pub x: i32,
    pub y: Option<i32>,
    /// `y` sat on the main diagonal.
    pub diagonal: bool,
    /// The diagonal entry of the next row, when `diagonal`.
    pub next_diagonal: Option<i32>,
    /// The line contained `x` before the step.
    pub contained_x: bool,
    /// The line contained `x + 1` before the step.
    pub contained_succ: bool,
}

/// What happened when one letter was inserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LetterTrace {
    pub letter: i32,
    /// 1-based factor index of the letter.
    pub factor: usize,
    pub column_inserted: bool,
    /// The box added, `(row, column)`, 1-based.
    pub added: (usize, usize),
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InsertionResult<T> {
    #[serde(rename = "P")]
    pub p: T,
    #[serde(rename = "Q")]
    pub q: T,
    pub trace: Vec<LetterTrace>,
}

fn check(w: &Factorization, flavor: Flavor) -> Result<()> {
    let word = w.word();
    let ok = match flavor {
        Flavor::Reduced => is_reduced_word(&word),
        Flavor::Involution => is_involution_word(&word),
        Flavor::Fpf => is_fpf_involution_word(&word),
    };
    if ok {
        Ok(())
    } else {
        Err(not_in_class(&word, flavor))
    }
}

fn letters(w: &Factorization) -> impl Iterator<Item = (usize, i32)> + '_ {
    w.factors().iter().enumerate().flat_map(|(j, f)| f.iter().map(move |&a| (j + 1, a)))
}

/// Edelman-Greene insertion of a reduced factorization.
pub fn eg_insert(w: &Factorization) -> Result<InsertionResult<Tableau>> {
    check(w, Flavor::Reduced)?;
    eg_insert_unchecked(w)
}

pub fn eg_insert_unchecked(w: &Factorization) -> Result<InsertionResult<Tableau>> {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    let mut trace = Vec::new();
    for (j, letter) in letters(w) {
        let rows = p.rows_mut();
        let mut x = letter;
        let mut r = 0;
        let mut steps = Vec::new();
        let added = loop {
            if r == rows.len() {
                rows.push(vec![x]);
                steps.push(Step {
                    line: Line::Row,
                    index: r + 1,
                    x,
                    y: None,
                    diagonal: false,
                    next_diagonal: None,
                    contained_x: false,
                    contained_succ: false,
                });
                break (r + 1, 1);
            }
            let row = &mut rows[r];
            let contained_x = row.contains(&x);
            let contained_succ = row.contains(&(x + 1));
            let k = row.iter().position(|&y| y >= x);
            let step = Step {
                line: Line::Row,
                index: r + 1,
                x,
                y: k.map(|k| row[k]),
                diagonal: false,
                next_diagonal: None,
                contained_x,
                contained_succ,
            };
            steps.push(step);
            match k {
                None => {
                    row.push(x);
                    break (r + 1, row.len());
                }
                Some(k) => {
                    let y = row[k];
                    if x == y {
                        x = y + 1;
                    } else {
                        row[k] = x;
                        x = y;
                    }
                    r += 1;
                }
            }
        };
        let qrows = q.rows_mut();
        if added.0 > qrows.len() {
            qrows.push(Vec::new());
        }
        qrows[added.0 - 1].push(j as i32);
        trace.push(LetterTrace { letter, factor: j, column_inserted: false, added, steps });
    }
    Ok(InsertionResult { p, q, trace })
}

/// The two shifted Edelman-Greene variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ShiftedVariant {
    Orthogonal,
    Symplectic,
}

enum Mode {
    Row(usize),
    Col(usize),
}

fn column_height(rows: &[Vec<Entry>], c: usize) -> usize {
    (1..=c).take_while(|&x| x <= rows.len() && c < x + rows[x - 1].len()).count()
}

/// Adds `e` at the top of column `c`. Fails when that box would not extend
/// the shifted diagram.
fn append_to_column(rows: &mut Vec<Vec<Entry>>, c: usize, e: Entry) -> Result<(usize, usize)> {
    let h = column_height(rows, c);
    let x = h + 1;
    if x <= rows.len() {
        if x + rows[x - 1].len() != c {
            return Err(Error::Invariant(format!("cannot add a box at ({x},{c})")));
        }
        rows[x - 1].push(e);
    } else if x == c && (x == 1 || rows[x - 2].len() >= 2) {
        rows.push(vec![e]);
    } else {
        return Err(Error::Invariant(format!("cannot add a box at ({x},{c})")));
    }
    Ok((x, c))
}

fn append_to_row(rows: &mut Vec<Vec<Entry>>, r: usize, e: Entry) -> Result<(usize, usize)> {
    if r <= rows.len() {
        rows[r - 1].push(e);
        Ok((r, r + rows[r - 1].len() - 1))
    } else if r == rows.len() + 1 && (r == 1 || rows[r - 2].len() >= 2) {
        rows.push(vec![e]);
        Ok((r, r))
    } else {
        Err(Error::Invariant(format!("cannot start row {r}")))
    }
}

fn shifted_insert_letter(
    rows: &mut Vec<Vec<Entry>>,
    letter: i32,
    variant: ShiftedVariant,
) -> Result<(bool, (usize, usize), Vec<Step>)> {
    let mut mode = Mode::Row(1);
    let mut x = letter;
    let mut column = false;
    let mut steps = Vec::new();
    loop {
        match mode {
            Mode::Row(r) => {
                let line: Vec<i32> = rows.get(r - 1).map(|row| row.iter().map(|e| e.value()).collect()).unwrap_or_default();
                let k = line.iter().position(|&y| y >= x);
                let diagonal = k == Some(0);
                steps.push(Step {
                    line: Line::Row,
                    index: r,
                    x,
                    y: k.map(|k| line[k]),
                    diagonal,
                    next_diagonal: if diagonal { rows.get(r).map(|n| n[0].value()) } else { None },
                    contained_x: line.contains(&x),
                    contained_succ: line.contains(&(x + 1)),
                });
                let Some(k) = k else {
                    let added = append_to_row(rows, r, Entry::unprimed(x))?;
                    return Ok((column, added, steps));
                };
                let y = line[k];
                if diagonal {
                    match variant {
                        ShiftedVariant::Orthogonal => {
                            if x < y {
                                rows[r - 1][0] = Entry::unprimed(x);
                                x = y;
                            } else {
                                x = y + 1;
                            }
                            mode = Mode::Col(r + 1);
                            column = true;
                        }
                        ShiftedVariant::Symplectic => {
                            if x == y {
                                x = y + 1;
                                mode = Mode::Row(r + 1);
                            } else if y == x + 1 {
                                x = y + 1;
                                mode = Mode::Col(r + 1);
                                column = true;
                            } else {
                                rows[r - 1][0] = Entry::unprimed(x);
                                x = y;
                                mode = Mode::Col(r + 1);
                                column = true;
                            }
                        }
                    }
                } else {
                    if x < y {
                        rows[r - 1][k] = Entry::unprimed(x);
                        x = y;
                    } else {
                        x = y + 1;
                    }
                    mode = Mode::Row(r + 1);
                }
            }
            Mode::Col(c) => {
                let h = column_height(rows, c);
                let line: Vec<i32> = (1..=h).map(|r| rows[r - 1][c - r].value()).collect();
                let k = line.iter().position(|&y| y >= x);
                steps.push(Step {
                    line: Line::Column,
                    index: c,
                    x,
                    y: k.map(|k| line[k]),
                    diagonal: false,
                    next_diagonal: None,
                    contained_x: line.contains(&x),
                    contained_succ: line.contains(&(x + 1)),
                });
                let Some(k) = k else {
                    let added = append_to_column(rows, c, Entry::unprimed(x))?;
                    return Ok((column, added, steps));
                };
                let y = line[k];
                if x < y {
                    rows[k][c - k - 1] = Entry::unprimed(x);
                    x = y;
                } else {
                    x = y + 1;
                }
                mode = Mode::Col(c + 1);
            }
        }
    }
}

fn place(q: &mut ShiftedTableau, (x, y): (usize, usize), e: Entry) -> Result<()> {
    let rows = q.rows_mut();
    if x > rows.len() {
        rows.push(Vec::new());
    }
    let row = &mut rows[x - 1];
    if x + row.len() != y {
        return Err(Error::Invariant(format!("recording box ({x},{y}) out of order")));
    }
    row.push(e);
    Ok(())
}

/// Shifted EG insertion with the given diagonal rule, without checking the
/// input word.
pub fn shifted_eg_insert_unchecked(
    w: &Factorization,
    variant: ShiftedVariant,
) -> Result<InsertionResult<ShiftedTableau>> {
    let mut p = ShiftedTableau::empty();
    let mut q = ShiftedTableau::empty();
    let mut trace = Vec::new();
    for (j, letter) in letters(w) {
        let (column_inserted, added, steps) = shifted_insert_letter(p.rows_mut(), letter, variant)?;
        let e = if column_inserted { Entry::primed(j as i32) } else { Entry::unprimed(j as i32) };
        place(&mut q, added, e)?;
        trace.push(LetterTrace { letter, factor: j, column_inserted, added, steps });
    }
    Ok(InsertionResult { p, q, trace })
}

/// Orthogonal EG insertion of a factorized involution word.
pub fn oeg_insert(w: &Factorization) -> Result<InsertionResult<ShiftedTableau>> {
    check(w, Flavor::Involution)?;
    shifted_eg_insert_unchecked(w, ShiftedVariant::Orthogonal)
}

/// Symplectic EG insertion of a factorized fpf-involution word.
pub fn speg_insert(w: &Factorization) -> Result<InsertionResult<ShiftedTableau>> {
    check(w, Flavor::Fpf)?;
    shifted_eg_insert_unchecked(w, ShiftedVariant::Symplectic)
}

/// Haiman's mixed insertion of a word with positive letters. `Q` is standard
/// and unprimed.
pub fn hm_insert(w: &Word) -> Result<InsertionResult<ShiftedTableau>> {
    if let Some(a) = w.iter().find(|&&a| a < 1) {
        return Err(Error::InvalidInput(format!("mixed insertion needs positive letters, got {a}")));
    }
    let mut p = ShiftedTableau::empty();
    let mut q = ShiftedTableau::empty();
    let mut trace = Vec::new();
    for (i, &letter) in w.iter().enumerate() {
        let rows = p.rows_mut();
        let mut mode = Mode::Row(1);
        let mut x = Entry::unprimed(letter);
        let mut column = false;
        let mut steps = Vec::new();
        let added = loop {
            match mode {
                Mode::Row(r) => {
                    let k = rows.get(r - 1).and_then(|row| row.iter().position(|&y| y > x));
                    steps.push(Step {
                        line: Line::Row,
                        index: r,
                        x: x.0,
                        y: k.map(|k| rows[r - 1][k].0),
                        diagonal: k == Some(0),
                        next_diagonal: None,
                        contained_x: false,
                        contained_succ: false,
                    });
                    let Some(k) = k else { break append_to_row(rows, r, x)? };
                    let y = rows[r - 1][k];
                    rows[r - 1][k] = x;
                    let col = r + k;
                    if k == 0 {
                        x = y.toggle_prime();
                        mode = Mode::Col(col + 1);
                    } else if y.is_primed() {
                        x = y;
                        mode = Mode::Col(col + 1);
                    } else {
                        x = y;
                        mode = Mode::Row(r + 1);
                    }
                }
                Mode::Col(c) => {
                    column = true;
                    let h = column_height(rows, c);
                    let k = (1..=h).position(|r| rows[r - 1][c - r] > x);
                    steps.push(Step {
                        line: Line::Column,
                        index: c,
                        x: x.0,
                        y: k.map(|k| rows[k][c - k - 1].0),
                        diagonal: k.is_some_and(|k| k + 1 == c),
                        next_diagonal: None,
                        contained_x: false,
                        contained_succ: false,
                    });
                    let Some(k) = k else { break append_to_column(rows, c, x)? };
                    let r = k + 1;
                    let y = rows[r - 1][c - r];
                    rows[r - 1][c - r] = x;
                    if r == c {
                        x = y.toggle_prime();
                        mode = Mode::Col(c + 1);
                    } else if y.is_primed() {
                        x = y;
                        mode = Mode::Col(c + 1);
                    } else {
                        x = y;
                        mode = Mode::Row(r + 1);
                    }
                }
            }
        };
        place(&mut q, added, Entry::unprimed(i as i32 + 1))?;
        trace.push(LetterTrace { letter, factor: i + 1, column_inserted: column, added, steps });
    }
    Ok(InsertionResult { p, q, trace })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(s: &str) -> Factorization {
        s.parse().unwrap()
    }

    fn st(s: &str) -> ShiftedTableau {
        ShiftedTableau::parse(s).unwrap()
    }

    #[test]
    fn eg_example() {
        let r = eg_insert(&fac("(4)(23)(2)")).unwrap();
        assert_eq!(r.p, Tableau::parse("2 3 / 3 / 4").unwrap());
        assert_eq!(r.q, Tableau::parse("1 2 / 2 / 3").unwrap());
        assert!(eg_insert(&fac("(1)(1)")).is_err());
    }

    #[test]
    fn oeg_example() {
        let r = oeg_insert(&fac("(4)(23)(2)(1)")).unwrap();
        assert_eq!(r.p, st("1 2 3 4 / 4"));
        assert_eq!(r.q, st("1 2' 3' 4' / 2"));
        let chain: Vec<ShiftedTableau> = (1..=3)
            .map(|k| {
                let f = Factorization::new(fac("(4)(23)(2)(1)").factors()[..k].to_vec()).unwrap();
                oeg_insert(&f).unwrap().p
            })
            .collect();
        assert_eq!(chain[2], st("2 3 4 / 4"));
    }

    #[test]
    fn speg_example() {
        let r = speg_insert(&fac("(4)(23)(12)")).unwrap();
        assert_eq!(r.p, st("2 3 4 / 4 5"));
        assert_eq!(r.q, st("1 2' 3' / 2 3'"));
        let one = speg_insert(&fac("(2)")).unwrap();
        assert_eq!(one.p, st("2"));
        assert!(speg_insert(&fac("(1)")).is_err());
    }

    #[test]
    fn hm_example() {
        let r = hm_insert(&"332332".parse().unwrap()).unwrap();
        assert_eq!(r.p, st("2 2 3' 3 / 3 3"));
        assert_eq!(r.q, st("1 2 4 5 / 3 6"));
        let one = hm_insert(&"1".parse().unwrap()).unwrap();
        assert_eq!(one.p, st("1"));
    }
}

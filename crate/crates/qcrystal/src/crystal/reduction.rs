//! The crystals `Perm_n(m)` and `Even_n(m)` and the maps `inv`, `dbl`
//! comparing them with the word crystal.

use crate::error::{Error, Result};
use crate::insertion::Factorization;
use crate::permwords::{FpfInvolution, Permutation, Word};

fn check_perm(w: &Factorization) -> Result<usize> {
    let m = w.len();
    let mut seen = vec![false; m + 1];
    for &a in w.word().iter() {
        if a < 1 || a as usize > m || seen[a as usize] {
            return Err(Error::InvalidInput(format!("{w} is not a factorized permutation of 1..{m}")));
        }
        seen[a as usize] = true;
    }
    Ok(m)
}

/// `w^{-1}`: letter `i` is the index of the factor containing `i`.
pub fn inv(w: &Factorization) -> Result<Word> {
    let m = check_perm(w)?;
    let mut v = vec![0; m];
    for (j, f) in w.factors().iter().enumerate() {
        for &a in f.iter() {
            v[a as usize - 1] = j as i32 + 1;
        }
    }
    Ok(Word(v))
}

/// The inverse of [`inv`]: factor `j` lists the positions of `j` in `v`.
pub fn inv_inverse(v: &Word, n: usize) -> Result<Factorization> {
    let mut factors = vec![Word::empty(); n];
    for (k, &a) in v.iter().enumerate() {
        if a < 1 || a as usize > n {
            return Err(Error::InvalidInput(format!("letter {a} of {v} outside [1, {n}]")));
        }
        factors[a as usize - 1].0.push(k as i32 + 1);
    }
    Factorization::new(factors)
}

/// `2[w]`: every letter doubled.
pub fn dbl(w: &Factorization) -> Result<Factorization> {
    check_perm(w)?;
    Factorization::new(w.factors().iter().map(|f| Word(f.iter().map(|&a| 2 * a).collect())).collect())
}

/// The involutions `σ` with `Perm_n(m) = ⊔_σ R^O_n(σ)`: `(1, m+1)` and the
/// products `(1,i_1)(i_1-1,i_2)⋯(i_k-1,m+1)` with
/// `3 ≤ i_1`, `i_{j+1} ≥ i_j + 2`, `i_k ≤ m`.
pub fn sigma_set(m: usize) -> Vec<Permutation> {
    if m == 0 {
        return vec![Permutation::identity()];
    }
    let top = m as i32 + 1;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i32>> = vec![vec![]];
    while let Some(seq) = stack.pop() {
        let mut cycles = Vec::new();
        let mut prev = 1;
        for &i in &seq {
            cycles.push(vec![prev, i]);
            prev = i - 1;
        }
        cycles.push(vec![prev, top]);
        out.push(Permutation::from_cycles(&cycles).expect("disjoint transpositions"));
        let start = seq.last().map_or(3, |&l| l + 2);
        for next in start..top {
            let mut s = seq.clone();
            s.push(next);
            stack.push(s);
        }
    }
    out.sort();
    out
}

/// `τ = s_2 s_4 ⋯ s_{2m}`, the involution with `Even_n(m) = R^O_n(τ)`.
pub fn even_inv_target(m: usize) -> Permutation {
    let cycles: Vec<Vec<i32>> = (1..=m as i32).map(|k| vec![2 * k, 2 * k + 1]).collect();
    Permutation::from_cycles(&cycles).expect("disjoint transpositions")
}

/// The fpf-involution `π` with `Even_n(m) = R^Sp_n(π)`, equal to
/// `1_fpf` outside `[2m+2]`.
pub fn even_fpf_target(m: usize) -> FpfInvolution {
    let top = 2 * m as i32 + 2;
    let image = |i: i32| -> i32 {
        if i == 1 || i == top - 2 {
            i + 2
        } else if i == 3 || i == top {
            i - 2
        } else if i % 2 == 0 {
            i + 3
        } else {
            i - 3
        }
    };
    let pairs: Vec<(i32, i32)> = if m == 0 {
        Vec::new()
    } else {
        (1..=top).map(|i| (i, image(i))).filter(|&(i, j)| i < j).collect()
    };
    FpfInvolution::from_cycles(&pairs).expect("fixed-point-free on [2m+2]")
}

/// All of `Perm_n(m)`.
pub fn perm_factorizations(m: usize, n: usize) -> Vec<Factorization> {
    let mut out = Vec::new();
    for v in all_sequences(m, n) {
        out.push(inv_inverse(&v, n).expect("letters in range"));
    }
    out.sort();
    out
}

fn all_sequences(m: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n as i32).map(move |a| {
                    let mut v = w.0.clone();
                    v.push(a);
                    Word(v)
                })
            })
            .collect();
    }
    out
}

//! Exhaustive enumeration of tableaux by row filling.

use super::entry::Entry;
use super::plain::Tableau;
use super::shifted::ShiftedTableau;
use super::Shape;

/// All of `ShTab_n(μ)`: semistandard shifted tableaux of shape μ with
/// entries in `{1′, 1, …, n′, n}`.
pub fn shifted_semistandard(mu: &Shape, n: usize) -> Vec<ShiftedTableau> {
    let parts = mu.parts();
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |k| (r + 1, r + 1 + k)))
        .collect();
    let mut rows: Vec<Vec<Entry>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill_shifted(&cells, 0, n as i32, &mut rows, &mut out);
    out.sort();
    out
}

fn fill_shifted(
    cells: &[(usize, usize)],
    k: usize,
    n: i32,
    rows: &mut Vec<Vec<Entry>>,
    out: &mut Vec<ShiftedTableau>,
) {
    let Some(&(x, y)) = cells.get(k) else {
        out.push(ShiftedTableau::from_rows_unchecked(rows.clone()));
        return;
    };
    let left = if y > x { Some(rows[x - 1][y - x - 1]) } else { None };
    let below = if x > 1 { Some(rows[x - 2][y - x + 1]) } else { None };
    for d in 1..=2 * n {
        let e = Entry(d);
        if x == y && e.is_primed() {
            continue;
        }
        if let Some(l) = left {
            if e < l || (e == l && e.is_primed()) {
                continue;
            }
        }
        if let Some(b) = below {
            if e < b || (e == b && !e.is_primed()) {
                continue;
            }
        }
        rows[x - 1].push(e);
        fill_shifted(cells, k + 1, n, rows, out);
        rows[x - 1].pop();
    }
}

/// All of `Tab_n(λ)`.
pub fn semistandard(lambda: &Shape, n: usize) -> Vec<Tableau> {
    let parts = lambda.parts();
    let cells: Vec<(usize, usize)> =
        parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |k| (r + 1, k + 1))).collect();
    let mut rows: Vec<Vec<i32>> = parts.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fill_plain(&cells, 0, n as i32, &mut rows, &mut out);
    out.sort();
    out
}

fn fill_plain(cells: &[(usize, usize)], k: usize, n: i32, rows: &mut Vec<Vec<i32>>, out: &mut Vec<Tableau>) {
    let Some(&(x, y)) = cells.get(k) else {
        out.push(Tableau::new(rows.clone()).expect("partition shape"));
        return;
    };
    let lo_left = if y > 1 { rows[x - 1][y - 2] } else { 1 };
    let lo_below = if x > 1 { rows[x - 2][y - 1] + 1 } else { 1 };
    for e in lo_left.max(lo_below)..=n {
        rows[x - 1].push(e);
        fill_plain(cells, k + 1, n, rows, out);
        rows[x - 1].pop();
    }
}

/// All standard shifted tableaux of shape μ. With `primes_allowed`, every
/// off-diagonal entry may independently be primed.
pub fn standard_shifted(mu: &Shape, primes_allowed: bool) -> Vec<ShiftedTableau> {
    let target = mu.parts().to_vec();
    let mut rows: Vec<Vec<Entry>> = vec![Vec::new(); target.len()];
    let mut out = Vec::new();
    grow_standard(&target, 1, primes_allowed, &mut rows, &mut out);
    out.sort();
    out
}

fn grow_standard(
    target: &[usize],
    k: i32,
    primes: bool,
    rows: &mut Vec<Vec<Entry>>,
    out: &mut Vec<ShiftedTableau>,
) {
    if rows.iter().zip(target).all(|(r, &t)| r.len() == t) {
        out.push(ShiftedTableau::from_rows_unchecked(rows.clone()));
        return;
    }
    for r in 0..target.len() {
        let len = rows[r].len();
        if len == target[r] || (r > 0 && rows[r - 1].len() <= len + 1) {
            continue;
        }
        let choices: &[Entry] =
            if primes && len > 0 { &[Entry::unprimed(k), Entry::primed(k)] } else { &[Entry::unprimed(k)] };
        for &e in choices {
            rows[r].push(e);
            grow_standard(target, k + 1, primes, rows, out);
            rows[r].pop();
        }
    }
}

/// All strict partitions of `m`, largest parts first.
pub fn strict_partitions(m: usize) -> Vec<Shape> {
    fn go(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if m == 0 {
            out.push(Shape::strict(cur.clone()).unwrap());
            return;
        }
        for p in (1..=m.min(max)).rev() {
            cur.push(p);
            go(m - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `m`.
pub fn partitions(m: usize) -> Vec<Shape> {
    fn go(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if m == 0 {
            out.push(Shape::partition(cur.clone()).unwrap());
            return;
        }
        for p in (1..=m.min(max)).rev() {
            cur.push(p);
            go(m - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let mu = Shape::strict(vec![3, 1]).unwrap();
        let all = shifted_semistandard(&mu, 3);
        assert_eq!(all.len(), 24);
        assert!(all.iter().all(ShiftedTableau::is_semistandard));
        assert_eq!(semistandard(&Shape::partition(vec![5]).unwrap(), 1).len(), 1);
        let with = standard_shifted(&mu, true);
        let without = standard_shifted(&mu, false);
        assert_eq!(with.len(), without.len() * 4);
        assert!(with.iter().all(ShiftedTableau::is_standard));
        assert_eq!(strict_partitions(6).len(), 4);
        assert_eq!(partitions(5).len(), 7);
    }
}

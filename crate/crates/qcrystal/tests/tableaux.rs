use std::collections::BTreeSet;

use qcrystal::tableaux::*;

/// `g^μ = m!/(μ_1!⋯μ_l!) ∏_{i<j} (μ_i − μ_j)/(μ_i + μ_j)`, as an exact rational.
fn shifted_syt_count(mu: &[usize]) -> u64 {
    let m: usize = mu.iter().sum();
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    let (mut num, mut den) = (fact(m), mu.iter().map(|&p| fact(p)).product::<u64>());
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            num *= (mu[i] - mu[j]) as u64;
            den *= (mu[i] + mu[j]) as u64;
        }
    }
    assert_eq!(num % den, 0);
    num / den
}

#[test]
fn standard_shifted_counts() {
    for m in 1..=7 {
        for mu in strict_partitions(m) {
            let plain = standard_shifted(&mu, false);
            assert_eq!(plain.len() as u64, shifted_syt_count(mu.parts()), "{mu}");
            assert!(plain.iter().all(|t| t.is_standard() && t.entries().all(|e| !e.is_primed())));
            // primes allowed off the diagonal
            let primed = standard_shifted(&mu, true);
            assert_eq!(primed.len() as u64, plain.len() as u64 * (1 << (m - mu.parts().len())), "{mu}");
            let distinct: BTreeSet<_> = primed.iter().collect();
            assert_eq!(distinct.len(), primed.len());
        }
    }
}

/// All fillings of the shifted shape by `1′ < 1 < ⋯ < n`, filtered.
fn brute_shifted(mu: &[usize], n: i32) -> BTreeSet<ShiftedTableau> {
    let alphabet: Vec<Entry> = (1..=n).flat_map(|k| [Entry::primed(k), Entry::unprimed(k)]).collect();
    let cells: usize = mu.iter().sum();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; cells];
    loop {
        let mut it = idx.iter().map(|&k| alphabet[k]);
        let rows: Vec<Vec<Entry>> = mu.iter().map(|&len| it.by_ref().take(len).collect()).collect();
        if let Ok(t) = ShiftedTableau::new(rows) {
            if t.is_semistandard() {
                out.insert(t);
            }
        }
        let Some(pos) = idx.iter().rposition(|&k| k + 1 < alphabet.len()) else { break };
        idx[pos] += 1;
        idx[pos + 1..].iter_mut().for_each(|k| *k = 0);
    }
    out
}

#[test]
fn shifted_semistandard_matches_brute_force() {
    for (mu, n) in [(vec![1], 3), (vec![2], 2), (vec![2, 1], 3), (vec![3, 1], 3), (vec![3], 3), (vec![3, 2], 2)] {
        let shape = Shape::strict(mu.clone()).unwrap();
        let got: BTreeSet<ShiftedTableau> = shifted_semistandard(&shape, n).into_iter().collect();
        assert_eq!(got, brute_shifted(&mu, n as i32), "{shape} n={n}");
    }
    assert_eq!(shifted_semistandard(&Shape::strict(vec![3, 1]).unwrap(), 3).len(), 24);
}

#[test]
fn plain_semistandard_counts() {
    // s_λ(1,…,1) by the hook-content formula
    for (lambda, n) in [(vec![2, 1], 3), (vec![3, 1], 3), (vec![2, 2], 3), (vec![2, 1, 1], 4), (vec![3, 2, 1], 3)] {
        let shape = Shape::partition(lambda.clone()).unwrap();
        let conj: Vec<usize> = (0..lambda[0]).map(|j| lambda.iter().filter(|&&r| r > j).count()).collect();
        let (mut num, mut den) = (1i64, 1i64);
        for (i, &r) in lambda.iter().enumerate() {
            for j in 0..r {
                num *= n as i64 + j as i64 - i as i64;
                den *= (r - j + conj[j] - i - 1) as i64;
            }
        }
        let ts = semistandard(&shape, n);
        assert_eq!(ts.len() as i64, num / den, "{shape}");
        assert!(ts.iter().all(Tableau::is_semistandard));
    }
}

#[test]
fn descents_two_ways() {
    for m in 1..=6 {
        for mu in strict_partitions(m) {
            for t in standard_shifted(&mu, true) {
                assert_eq!(tableau_descents(&t).unwrap(), tableau_descents_by_cases(&t).unwrap(), "{t}");
            }
        }
    }
}

#[test]
fn partition_counts() {
    let p: Vec<usize> = (1..=8).map(|m| partitions(m).len()).collect();
    assert_eq!(p, [1, 2, 3, 5, 7, 11, 15, 22]);
    let q: Vec<usize> = (1..=8).map(|m| strict_partitions(m).len()).collect();
    assert_eq!(q, [1, 1, 2, 2, 3, 4, 5, 6]);
}

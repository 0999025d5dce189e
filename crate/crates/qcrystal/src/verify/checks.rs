use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{par_outcome, Bounds, Corpus, Outcome};
use crate::bumping::{bump, bump_factorization, bump_trace, decompose_bump, increments, is_marked, replay};
use crate::crystal::{
    dbl, even_fpf_target, even_inv_target, inv, morphism_check, perm_factorizations, quasi_isomorphism_check,
    shtab_e, shtab_f, sigma_set, Crystal, CrystalGraph, FactorizationCrystal, ShiftedTableauCrystal, TableauCrystal,
    WordCrystal, DEFAULT_VERTEX_CAP,
};
use crate::error::Result;
use crate::insertion::{eg_insert, hm_insert, oeg_insert, speg_insert, Factorization};
use crate::permwords::{equivalence_class, is_valid_word, length_invariants, word_target, Flavor, Relation, Target, Word};
use crate::symchar::{character, expand, is_supersymmetric, schur_p_poly, Basis, Polynomial};
use crate::tableaux::{
    dual_equiv, partitions, semistandard, shifted_semistandard, standard_shifted, strict_partitions,
    tableau_descents, ShiftedTableau, Tableau,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum AnyTableau {
    Plain(Tableau),
    Shifted(ShiftedTableau),
}

fn insert(f: &Factorization, flavor: Flavor) -> Result<(AnyTableau, AnyTableau)> {
    Ok(match flavor {
        Flavor::Reduced => {
            let r = eg_insert(f)?;
            (AnyTableau::Plain(r.p), AnyTableau::Plain(r.q))
        }
        Flavor::Involution => {
            let r = oeg_insert(f)?;
            (AnyTableau::Shifted(r.p), AnyTableau::Shifted(r.q))
        }
        Flavor::Fpf => {
            let r = speg_insert(f)?;
            (AnyTableau::Shifted(r.p), AnyTableau::Shifted(r.q))
        }
    })
}

fn recording(w: &Word, flavor: Flavor) -> Result<AnyTableau> {
    Ok(insert(&Factorization::singletons(w), flavor)?.1)
}

fn shifted_recording(w: &Word, flavor: Flavor) -> Result<ShiftedTableau> {
    match recording(w, flavor)? {
        AnyTableau::Shifted(t) => Ok(t),
        AnyTableau::Plain(_) => unreachable!("shifted flavors record shifted tableaux"),
    }
}

fn ck_relation(flavor: Flavor) -> Relation {
    match flavor {
        Flavor::Reduced => Relation::K,
        Flavor::Involution => Relation::O,
        Flavor::Fpf => Relation::Sp,
    }
}

fn ck0(w: &Word, flavor: Flavor) -> Option<Word> {
    match flavor {
        Flavor::Reduced => None,
        Flavor::Involution => Some(w.ck0_o()),
        Flavor::Fpf => Some(w.ck0_sp()),
    }
}

fn class_graph(target: &Target, flavor: Flavor, n: usize) -> Result<CrystalGraph<Factorization>> {
    let c = FactorizationCrystal::new(n, flavor);
    CrystalGraph::from_elements(&c, c.elements(target, flavor)?)
}

fn class_size(corpus: &Corpus, t: &Target) -> usize {
    corpus.classes[t].first().map_or(0, |w| w.len())
}

fn sorted_components<E>(g: &CrystalGraph<E>) -> BTreeSet<Vec<usize>>
where
    E: Clone + Ord + std::fmt::Display + serde::Serialize + Send + Sync,
{
    g.components()
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect()
}

/// Components of `R^K_n(π)` are the fibers of `P^K_EG`, and those fibers
/// restricted to words are the `~K` classes.
pub fn check_fibers(flavor: Flavor, bounds: Bounds) -> Result<Outcome> {
    let corpus = Corpus::build(flavor, bounds.maxlen)?;
    Ok(par_outcome(&corpus.targets(), |t| {
        let mut o = Outcome::default();
        let size = class_size(&corpus, t);
        for n in 1..=bounds.n {
            let g = match class_graph(t, flavor, n) {
                Ok(g) => g,
                Err(e) => {
                    o.fail(size, format!("{t}, n={n}: {e}"));
                    continue;
                }
            };
            let mut by_p: BTreeMap<AnyTableau, Vec<usize>> = BTreeMap::new();
            for v in 0..g.len() {
                match insert(g.vertex(v), flavor) {
                    Ok((p, _)) => by_p.entry(p).or_default().push(v),
                    Err(e) => o.fail(size, format!("{t}: {} does not insert: {e}", g.vertex(v))),
                }
            }
            o.checked += g.len();
            let fibers: BTreeSet<Vec<usize>> = by_p.into_values().collect();
            if sorted_components(&g) != fibers {
                o.fail(size, format!("{t}, n={n}: crystal components differ from insertion fibers"));
            }
        }
        let mut by_p: BTreeMap<AnyTableau, BTreeSet<Word>> = BTreeMap::new();
        for w in &corpus.classes[t] {
            match insert(&Factorization::singletons(w), flavor) {
                Ok((p, _)) => {
                    by_p.entry(p).or_default().insert(w.clone());
                }
                Err(e) => o.fail(size, format!("{t}: {w} does not insert: {e}")),
            }
        }
        let rel = ck_relation(flavor);
        for group in by_p.values() {
            let rep = group.first().unwrap();
            o.checked += group.len();
            if equivalence_class(rep, rel) != *group {
                o.fail(size, format!("{t}: the {rel:?} class of {rep} is not its insertion fiber"));
            }
        }
        o
    }))
}

fn quasi_iso_outcome<E, C, M>(
    g: &CrystalGraph<Factorization>,
    codomain: &C,
    map: M,
    size: usize,
    what: &str,
) -> Outcome
where
    E: Clone + Ord + std::fmt::Display + serde::Serialize + Send + Sync,
    C: Crystal<Elem = E>,
    M: Fn(&Factorization) -> Option<E>,
{
    let mut o = Outcome { checked: g.len(), failures: Vec::new() };
    let images: Vec<E> = g.vertices().iter().filter_map(&map).collect();
    if images.len() != g.len() {
        o.fail(size, format!("{what}: recording map undefined somewhere"));
        return o;
    }
    match CrystalGraph::explore(codomain, images, DEFAULT_VERTEX_CAP) {
        Ok(cod) => {
            let r = quasi_isomorphism_check(g, &cod, map);
            for f in r.failures {
                o.fail(size, format!("{what}: {f}"));
            }
        }
        Err(e) => o.fail(size, format!("{what}: {e}")),
    }
    o
}

/// The recording tableau is a quasi-isomorphism onto the tableau crystal.
pub fn check_q_morphism(flavor: Flavor, bounds: Bounds) -> Result<Outcome> {
    let corpus = Corpus::build(flavor, bounds.maxlen)?;
    Ok(par_outcome(&corpus.targets(), |t| {
        let mut o = Outcome::default();
        let size = class_size(&corpus, t);
        for n in 1..=bounds.n {
            let what = format!("{t}, n={n}");
            let g = match class_graph(t, flavor, n) {
                Ok(g) => g,
                Err(e) => {
                    o.fail(size, format!("{what}: {e}"));
                    continue;
                }
            };
            let part = match flavor {
                Flavor::Reduced => {
                    quasi_iso_outcome(&g, &TableauCrystal::new(n), |f| eg_insert(f).ok().map(|r| r.q), size, &what)
                }
                Flavor::Involution => quasi_iso_outcome(
                    &g,
                    &ShiftedTableauCrystal::new(n),
                    |f| oeg_insert(f).ok().map(|r| r.q),
                    size,
                    &what,
                ),
                Flavor::Fpf => quasi_iso_outcome(
                    &g,
                    &ShiftedTableauCrystal::new(n),
                    |f| speg_insert(f).ok().map(|r| r.q),
                    size,
                    &what,
                ),
            };
            o = o.merge(part);
        }
        o
    }))
}

/// Targets `π` with `(w, i)` π-marked for some `i`.
fn marking_targets(w: &Word, flavor: Flavor) -> BTreeSet<Target> {
    (1..=w.len()).filter_map(|i| w.del(i).ok()).filter_map(|d| word_target(&d, flavor)).collect()
}

fn bump_case(w: &Word, flavor: Flavor, bounds: Bounds) -> (Outcome, Vec<(Target, Word)>) {
    let mut o = Outcome::default();
    let mut images = Vec::new();
    let size = w.len();
    let name = match flavor {
        Flavor::Reduced => "b",
        Flavor::Involution => "ib",
        Flavor::Fpf => "fb",
    };
    for pi in marking_targets(w, flavor) {
        let head = format!("{name}_{pi}({w})");
        let chain = match bump_trace(w, &pi, flavor, None) {
            Ok(Some(c)) => c,
            Ok(None) => {
                o.fail(size, format!("{head}: no marking found"));
                continue;
            }
            Err(e) => {
                o.fail(size, format!("{head}: {e}"));
                continue;
            }
        };
        o.checked += 1;
        let last = chain.last().unwrap();
        let v = last.word.clone();
        if !is_valid_word(&v, flavor) || !is_marked(&v, last.mark, &pi, flavor) {
            o.fail(size, format!("{head} = {v} is not a marked {} word", flavor.name()));
        }
        if v.descents() != w.descents() {
            o.fail(size, format!("{head} = {v} changes the descent set"));
        }
        for i in 1..=w.len().saturating_sub(2) {
            match bump(&w.ck(i), &pi, flavor) {
                Ok(b) if b == v.ck(i) => {}
                Ok(b) => o.fail(size, format!("{head}: bump of ck_{i} is {b}, not ck_{i}({v}) = {}", v.ck(i))),
                Err(e) => o.fail(size, format!("{head}: bump of ck_{i}: {e}")),
            }
        }
        if let (Some(c), Some(cv)) = (ck0(w, flavor), ck0(&v, flavor)) {
            match bump(&c, &pi, flavor) {
                Ok(b) if b == cv => {}
                Ok(b) => o.fail(size, format!("{head}: bump of ck_0 is {b}, not {cv}")),
                Err(e) => o.fail(size, format!("{head}: bump of ck_0: {e}")),
            }
        }
        match (recording(w, flavor), recording(&v, flavor)) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => o.fail(size, format!("{head} = {v} changes the recording tableau")),
        }
        if flavor == Flavor::Reduced {
            if increments(w, &v).iter().any(|&d| !(0..=1).contains(&d)) {
                o.fail(size, format!("{head} = {v} raises a letter by more than one"));
            }
        } else {
            match decompose_bump(w, &pi, flavor).and_then(|atoms| replay(w, &atoms)) {
                Ok(r) if r == v => {}
                Ok(r) => o.fail(size, format!("{head} = {v}, but the atom decomposition replays to {r}")),
                Err(e) => o.fail(size, format!("{head}: decomposition failed: {e}")),
            }
        }
        for n in 2..=bounds.n {
            let c = FactorizationCrystal::new(n, flavor);
            for f in Factorization::all_of(w, n) {
                let bf = match bump_factorization(&f, &pi, flavor) {
                    Ok(b) => b,
                    Err(e) => {
                        o.fail(size, format!("{head} on {f}: {e}"));
                        continue;
                    }
                };
                for idx in c.indices() {
                    for (op, lhs, rhs) in [
                        ("f", c.f(&f, idx), c.f(&bf, idx)),
                        ("e", c.e(&f, idx), c.e(&bf, idx)),
                    ] {
                        let lhs = lhs.map(|g| bump_factorization(&g, &pi, flavor));
                        let same = match (&lhs, &rhs) {
                            (None, None) => true,
                            (Some(Ok(a)), Some(b)) => a == b,
                            _ => false,
                        };
                        o.checked += 1;
                        if !same {
                            o.fail(size, format!("{head}: bump does not commute with {op}_{idx} on {f}"));
                        }
                    }
                }
            }
        }
        images.push((pi, v));
    }
    (o, images)
}

/// Bijectivity, descents, ck commutation, recording invariance, the atom
/// decomposition, the increment bound for plain bumps, and commutation with
/// the crystal operators on factorizations.
pub fn check_bump_properties(flavor: Flavor, bounds: Bounds) -> Result<Outcome> {
    let corpus = Corpus::build(flavor, bounds.maxlen)?;
    let words = corpus.words();
    let parts: Vec<(Outcome, Vec<(Target, Word)>)> = words.par_iter().map(|w| bump_case(w, flavor, bounds)).collect();
    let mut o = Outcome::default();
    let mut seen: BTreeMap<(Target, Word), &Word> = BTreeMap::new();
    for (w, (part, images)) in words.iter().zip(parts) {
        o = o.merge(part);
        for key in images {
            if let Some(u) = seen.get(&key) {
                o.fail(w.len(), format!("bumps by {} of {u} and {w} both give {}", key.0, key.1));
            } else {
                seen.insert(key, w);
            }
        }
    }
    Ok(o.sorted())
}

/// Letter increments of every bump in the corpus stay in `{0, …, max}`.
pub fn check_increment_bound(flavor: Flavor, max: i32, bounds: Bounds) -> Result<Outcome> {
    let corpus = Corpus::build(flavor, bounds.maxlen)?;
    Ok(par_outcome(&corpus.words(), |w| {
        let mut o = Outcome::default();
        for pi in marking_targets(w, flavor) {
            o.checked += 1;
            match bump(w, &pi, flavor) {
                Ok(v) => {
                    let d = increments(w, &v);
                    if d.iter().any(|&x| !(0..=max).contains(&x)) {
                        o.fail(w.len(), format!("bump by {pi} sends {w} to {v}, increments {d:?}"));
                    }
                }
                Err(e) => o.fail(w.len(), format!("bump by {pi} of {w}: {e}")),
            }
        }
        o
    }))
}

fn shift_box(t: &ShiftedTableau, k: i32, delta: i32) -> ShiftedTableau {
    let ((x, y), e) = t.find_value(k).expect("standard tableau holds every value");
    let mut out = t.clone();
    out.set(x, y, e.with_value(k + delta));
    out
}

fn standard_case(t: &ShiftedTableau) -> Outcome {
    let mut o = Outcome::default();
    let m = t.size() as i32;
    let size = t.size();
    let show = t.row_strings().iter().map(|r| r.join(" ")).collect::<Vec<_>>().join(" / ");
    for i in 0..m {
        o.checked += 1;
        match dual_equiv(t, i) {
            Ok(d) if d.is_standard() && dual_equiv(&d, i).as_ref() == Ok(t) => {}
            _ => o.fail(size, format!("d_{i} is not a standard involution at {show}")),
        }
    }
    let des = match tableau_descents(t) {
        Ok(d) => d,
        Err(e) => {
            o.fail(size, format!("{show}: {e}"));
            return o;
        }
    };
    for i in 1..m {
        o.checked += 1;
        let (f, e) = (shtab_f(t, i), shtab_e(t, i));
        let good = if des.contains(&(i as usize)) {
            f.is_none() && e.is_none()
        } else {
            f == Some(shift_box(t, i, 1)) && e == Some(shift_box(t, i + 1, -1))
        };
        if !good {
            o.fail(size, format!("f_{i}/e_{i} disagree with the descent rule at {show}"));
        }
    }
    for i in 1..m - 1 {
        let (a, b) = (des.contains(&(i as usize)), des.contains(&(i as usize + 1)));
        let got = match (a, b) {
            (true, false) => shtab_e(t, i + 1)
                .and_then(|s| shtab_e(&s, i))
                .and_then(|s| shtab_f(&s, i + 1))
                .and_then(|s| shtab_f(&s, i)),
            (false, true) => shtab_e(t, i)
                .and_then(|s| shtab_e(&s, i + 1))
                .and_then(|s| shtab_f(&s, i))
                .and_then(|s| shtab_f(&s, i + 1)),
            _ => continue,
        };
        o.checked += 1;
        if got.is_none() || got.as_ref().ok_or(()) != dual_equiv(t, i).as_ref().map_err(|_| ()) {
            o.fail(size, format!("the f f e e composite is not d_{i} at {show}"));
        }
    }
    o
}

/// Recording tableaux intertwine `ck` with `𝔡`, and the dual equivalence
/// operators are standard involutions matching the crystal composites.
pub fn check_dual_equivalence(bounds: Bounds) -> Result<Outcome> {
    let mut o = Outcome::default();
    for flavor in [Flavor::Involution, Flavor::Fpf] {
        let corpus = Corpus::build(flavor, bounds.maxlen)?;
        o = o.merge(par_outcome(&corpus.words(), |w| {
            let mut o = Outcome::default();
            let size = w.len();
            let q = match shifted_recording(w, flavor) {
                Ok(q) => q,
                Err(e) => {
                    o.fail(size, format!("{w}: {e}"));
                    return o;
                }
            };
            o.checked += 1;
            let des: Vec<usize> = tableau_descents(&q).map(|d| d.into_iter().collect()).unwrap_or_default();
            if des != w.descents() {
                o.fail(size, format!("Des({w}) differs from the descents of its recording tableau"));
            }
            let mut moves: Vec<(i32, Word)> = (1..=size.saturating_sub(2)).map(|i| (i as i32, w.ck(i))).collect();
            moves.push((0, ck0(w, flavor).unwrap()));
            for (i, v) in moves {
                o.checked += 1;
                let lhs = shifted_recording(&v, flavor);
                let rhs = dual_equiv(&q, i);
                if lhs.is_err() || lhs != rhs {
                    o.fail(size, format!("Q(ck_{i}({w})) differs from d_{i}(Q({w})) ({})", flavor.name()));
                }
            }
            o
        }));
    }
    let tabs: Vec<ShiftedTableau> = (1..=bounds.maxlen + 1)
        .flat_map(|m| strict_partitions(m).into_iter().flat_map(|mu| standard_shifted(&mu, true)))
        .collect();
    Ok(o.merge(par_outcome(&tabs, standard_case)))
}

/// `Perm_n(m)` and `Even_n(m)` decompositions, the morphisms `inv` and
/// `dbl`, and the insertion identities relating them to mixed insertion.
pub fn check_reduction_lemma(bounds: Bounds) -> Result<Outcome> {
    let cases: Vec<(usize, usize)> =
        (0..=bounds.maxlen).flat_map(|m| (1..=bounds.n).map(move |n| (m, n))).collect();
    Ok(par_outcome(&cases, |&(m, n)| {
        let mut o = Outcome::default();
        let mut run = || -> Result<()> {
            let oc = FactorizationCrystal::new(n, Flavor::Involution);
            let sc = FactorizationCrystal::new(n, Flavor::Fpf);
            let wc = WordCrystal::new(n);
            let perms = perm_factorizations(m, n);
            o.checked += perms.len();
            let mut union = Vec::new();
            for s in sigma_set(m) {
                union.extend(oc.elements(&Target::Perm(s), Flavor::Involution)?);
            }
            union.sort();
            if union != perms {
                o.fail(m, format!("m={m}, n={n}: Perm is not the disjoint union over the sigma set"));
            }
            let pg = CrystalGraph::from_elements(&oc, perms.clone())?;
            let wg = CrystalGraph::from_elements(&wc, wc.all_words(m))?;
            let r = morphism_check(&pg, &wg, |w| inv(w).ok());
            if !r.ok() || pg.len() != wg.len() {
                o.fail(m, format!("m={m}, n={n}: inv is not an isomorphism onto words: {:?}", r.failures));
            }
            let even_o = oc.elements(&Target::Perm(even_inv_target(m)), Flavor::Involution)?;
            let even_s = sc.elements(&Target::Fpf(even_fpf_target(m)), Flavor::Fpf)?;
            let doubled: BTreeSet<Factorization> = perms.iter().map(dbl).collect::<Result<_>>()?;
            if even_o != even_s || doubled != even_o.iter().cloned().collect() {
                o.fail(m, format!("m={m}, n={n}: Even differs between its descriptions"));
            }
            let eo = CrystalGraph::from_elements(&oc, even_o)?;
            let es = CrystalGraph::from_elements(&sc, even_s)?;
            if eo.edges() != es.edges() {
                o.fail(m, format!("m={m}, n={n}: orthogonal and symplectic structures on Even differ"));
            }
            let r = morphism_check(&pg, &eo, |w| dbl(w).ok());
            if !r.ok() {
                o.fail(m, format!("m={m}, n={n}: dbl is not a morphism: {:?}", r.failures));
            }
            for w in &perms {
                let v = inv(w)?;
                let d = dbl(w)?;
                let og = oeg_insert(w)?;
                let h = hm_insert(&v)?;
                let ok = og.p == h.q
                    && og.q == h.p
                    && oeg_insert(&d)?.q == h.p
                    && speg_insert(&d)?.q == h.p;
                if !ok {
                    o.fail(m, format!("{w}: insertion identities fail against mixed insertion of {v}"));
                }
            }
            Ok(())
        };
        if let Err(e) = run() {
            o.fail(m, format!("m={m}, n={n}: {e}"));
        }
        o
    }))
}

fn axioms_outcome<E>(g: &CrystalGraph<E>, size: usize, what: &str) -> Outcome
where
    E: Clone + Ord + std::fmt::Display + serde::Serialize + Send + Sync,
{
    let r = g.axioms_check();
    let mut o = Outcome { checked: r.checked, failures: Vec::new() };
    for f in r.failures {
        o.fail(size, format!("{what}: {f}"));
    }
    o
}

/// Axioms on every factorization crystal of the three corpora, on
/// `ShTab_n(μ)`, `Tab_n(λ)` and on words.
pub fn check_crystal_axioms(bounds: Bounds) -> Result<Outcome> {
    let mut o = Outcome::default();
    for flavor in [Flavor::Reduced, Flavor::Involution, Flavor::Fpf] {
        let corpus = Corpus::build(flavor, bounds.maxlen)?;
        o = o.merge(par_outcome(&corpus.targets(), |t| {
            let size = class_size(&corpus, t);
            (1..=bounds.n)
                .map(|n| match class_graph(t, flavor, n) {
                    Ok(g) => axioms_outcome(&g, size, &format!("{t}, n={n}")),
                    Err(e) => {
                        let mut o = Outcome::default();
                        o.fail(size, format!("{t}, n={n}: {e}"));
                        o
                    }
                })
                .fold(Outcome::default(), Outcome::merge)
        }));
    }
    let cases: Vec<(usize, usize)> =
        (1..=bounds.maxlen).flat_map(|m| (1..=bounds.n).map(move |n| (m, n))).collect();
    o = o.merge(par_outcome(&cases, |&(m, n)| {
        let mut o = Outcome::default();
        let st: Vec<ShiftedTableau> =
            strict_partitions(m).iter().flat_map(|mu| shifted_semistandard(mu, n)).collect();
        match CrystalGraph::from_elements(&ShiftedTableauCrystal::new(n), st) {
            Ok(g) => o = o.merge(axioms_outcome(&g, m, &format!("ShTab_{n} of size {m}"))),
            Err(e) => o.fail(m, format!("ShTab_{n} of size {m}: {e}")),
        }
        let pt: Vec<Tableau> = partitions(m).iter().flat_map(|l| semistandard(l, n)).collect();
        match CrystalGraph::from_elements(&TableauCrystal::new(n), pt) {
            Ok(g) => o = o.merge(axioms_outcome(&g, m, &format!("Tab_{n} of size {m}"))),
            Err(e) => o.fail(m, format!("Tab_{n} of size {m}: {e}")),
        }
        if m <= 4 {
            let wc = WordCrystal::new(n);
            match CrystalGraph::from_elements(&wc, wc.all_words(m)) {
                Ok(g) => o = o.merge(axioms_outcome(&g, m, &format!("W_{n}({m})"))),
                Err(e) => o.fail(m, format!("W_{n}({m}): {e}")),
            }
        }
        o
    }));
    Ok(o)
}

fn supersymmetry_outcome<E>(g: &CrystalGraph<E>, size: usize, what: &str) -> (Outcome, Polynomial)
where
    E: Clone + Ord + std::fmt::Display + serde::Serialize + Send + Sync,
{
    let mut o = Outcome { checked: 1, failures: Vec::new() };
    let ch = character(g);
    if !is_supersymmetric(&ch) {
        o.fail(size, format!("{what}: character {ch} is not supersymmetric"));
    }
    let mut sum = Polynomial::zero(g.rank());
    for c in g.components() {
        sum = &sum + &character(&g.subgraph(&c));
    }
    if sum != ch {
        o.fail(size, format!("{what}: character is not the sum over components"));
    }
    (o, ch)
}

/// Characters of q_n-crystals are supersymmetric and additive over
/// components; `ch ShTab_n(μ) = P_μ`.
pub fn check_supersymmetry(bounds: Bounds) -> Result<Outcome> {
    let mut o = Outcome::default();
    for flavor in [Flavor::Involution, Flavor::Fpf] {
        let corpus = Corpus::build(flavor, bounds.maxlen)?;
        o = o.merge(par_outcome(&corpus.targets(), |t| {
            let size = class_size(&corpus, t);
            let mut o = Outcome::default();
            for n in 2..=bounds.n {
                match class_graph(t, flavor, n) {
                    Ok(g) => o = o.merge(supersymmetry_outcome(&g, size, &format!("{t}, n={n}")).0),
                    Err(e) => o.fail(size, format!("{t}, n={n}: {e}")),
                }
            }
            o
        }));
    }
    let cases: Vec<(Vec<usize>, usize)> = (1..=bounds.maxlen)
        .flat_map(strict_partitions)
        .flat_map(|mu| (2..=bounds.n).map(move |n| (mu.parts().to_vec(), n)))
        .collect();
    o = o.merge(par_outcome(&cases, |(mu, n)| {
        let what = format!("ShTab_{n}({mu:?})");
        let size: usize = mu.iter().sum();
        let elems = crate::tableaux::Shape::strict(mu.clone()).map(|s| shifted_semistandard(&s, *n));
        match elems.and_then(|e| CrystalGraph::from_elements(&ShiftedTableauCrystal::new(*n), e)) {
            Ok(g) => {
                let (mut o, ch) = supersymmetry_outcome(&g, size, &what);
                if schur_p_poly(mu, *n).ok() != Some(ch) {
                    o.fail(size, format!("{what}: character differs from the Schur P polynomial"));
                }
                o
            }
            Err(e) => {
                let mut o = Outcome::default();
                o.fail(size, format!("{what}: {e}"));
                o
            }
        }
    }));
    Ok(o)
}

fn shape_of(weight: &[u32]) -> Vec<usize> {
    weight.iter().take_while(|&&a| a > 0).map(|&a| a as usize).collect()
}

/// With `n` the flavored length, the Schur (gl) or Schur-P (q) expansion of
/// the character counts highest weights by weight, and is nonnegative.
pub fn check_positivity(bounds: Bounds) -> Result<Outcome> {
    let top = bounds.maxlen.min(Bounds::MAX_N);
    let mut o = Outcome::default();
    for flavor in [Flavor::Reduced, Flavor::Involution, Flavor::Fpf] {
        let corpus = Corpus::build(flavor, top)?;
        o = o.merge(par_outcome(&corpus.anchored_targets(), |t| {
            let mut o = Outcome::default();
            let size = class_size(&corpus, t);
            let mut run = || -> Result<()> {
                let n = length_invariants(t, flavor)?.flavored;
                if n == 0 || n > top {
                    return Ok(());
                }
                let g = class_graph(t, flavor, n)?;
                let (basis, hw) = if flavor == Flavor::Reduced {
                    (Basis::Schur, g.gl_highest_weights())
                } else {
                    (Basis::SchurP, g.highest_weights())
                };
                let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for &v in &hw {
                    *counts.entry(shape_of(g.weight(v))).or_default() += 1;
                }
                let coeffs = expand(&character(&g), basis, n)?;
                o.checked += 1;
                if coeffs.values().any(|&c| c < 0) {
                    o.fail(size, format!("{t}: negative coefficient in {coeffs:?}"));
                }
                if coeffs != counts {
                    o.fail(size, format!("{t}: expansion {coeffs:?} differs from highest weights {counts:?}"));
                }
                if flavor != Flavor::Reduced && hw.len() != g.components().len() {
                    o.fail(size, format!("{t}: {} highest weights in {} components", hw.len(), g.components().len()));
                }
                Ok(())
            };
            if let Err(e) = run() {
                o.fail(size, format!("{t}: {e}"));
            }
            o
        }));
    }
    Ok(o)
}

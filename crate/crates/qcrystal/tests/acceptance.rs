//! Acceptance run: one PASS/FAIL line per criterion, with timing against a
//! budget. Conjecture checks are reported but never fail the run.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qcrystal::bumping::{bump, bump_trace};
use qcrystal::crystal::*;
use qcrystal::insertion::{eg_insert, hm_insert, oeg_insert, speg_insert, Factorization};
use qcrystal::permwords::{FpfInvolution, Flavor, Permutation, Target, Word};
use qcrystal::tableaux::{tableau_descents, ShiftedTableau, Tableau};
use qcrystal::verify::{self, check_increment_bound, Bounds, Report, VerifyTarget};

mod common;
use common::*;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn st(s: &str) -> ShiftedTableau {
    ShiftedTableau::parse(s).unwrap()
}

fn bounds(maxlen: usize, n: usize) -> Bounds {
    Bounds::new(maxlen, n).unwrap()
}

fn run_targets(targets: &[VerifyTarget], b: Bounds) -> Outcome {
    let mut cases = 0;
    let mut notes = Vec::new();
    for &t in targets {
        let r = verify::run(t, b).map_err(|e| format!("{t}: {e}"))?;
        passed(&r)?;
        cases += r.checked;
        notes.push(format!("{t} {}", r.checked));
    }
    Ok(format!("{cases} cases: {}", notes.join(", ")))
}

fn passed(r: &Report) -> Result<(), String> {
    match r.minimal_counterexample() {
        None => Ok(()),
        Some(f) => Err(format!("{}: {} failures, smallest: {}", r.target, r.failures.len(), f.detail)),
    }
}

fn golden() -> Outcome {
    let fac = |s: &str| s.parse::<Factorization>().unwrap();
    let mut n = 0;
    let mut tick = |r: Result<(), String>| {
        n += 1;
        r
    };

    let r = eg_insert(&fac("(4)(23)(2)")).map_err(|e| e.to_string())?;
    tick(eq("EG P", r.p, Tableau::parse("2 3 / 3 / 4").unwrap()))?;
    tick(eq("EG Q", r.q, Tableau::parse("1 2 / 2 / 3").unwrap()))?;
    let r = oeg_insert(&fac("(4)(23)(2)(1)")).map_err(|e| e.to_string())?;
    tick(eq("O-EG P", r.p, st("1 2 3 4 / 4")))?;
    tick(eq("O-EG Q", r.q, st("1 2' 3' 4' / 2")))?;
    let r = speg_insert(&fac("(4)(23)(12)")).map_err(|e| e.to_string())?;
    tick(eq("Sp-EG P", r.p, st("2 3 4 / 4 5")))?;
    tick(eq("Sp-EG Q", r.q, st("1 2' 3' / 2 3'")))?;
    let hm = hm_insert(&"332332".parse().unwrap()).map_err(|e| e.to_string())?;
    tick(eq("HM P", hm.p.clone(), st("2 2 3' 3 / 3 3")))?;
    tick(eq("HM Q", hm.q.clone(), st("1 2 4 5 / 3 6")))?;

    let mut p = pair(&[1, 3, 4, 5, 8, 10, 11], &[2, 6, 9, 12, 13]);
    p.sort();
    tick(eq("pair", p, vec![(3, 2), (8, 6), (10, 9)]))?;

    let w: Word = "1223313212".parse().unwrap();
    let show = |x: Option<Word>| x.map(|v| v.to_string());
    tick(eq("f_2", show(word_f(&w, 2)), Some("1233313212".into())))?;
    tick(eq("e_2", show(word_e(&w, 2)), Some("1222313212".into())))?;
    tick(eq("f_1bar", show(word_f_qbar(&w)), Some("2223313212".into())))?;

    let pi = Target::Perm(Permutation::from_cycles(&[vec![2, 5]]).unwrap());
    let chain = bump_trace(&"2134".parse().unwrap(), &pi, Flavor::Involution, None)
        .map_err(|e| e.to_string())?
        .ok_or("2134 is not marked")?;
    let got: Vec<String> = chain.iter().map(|m| format!("{}@{}", m.word, m.mark)).collect();
    tick(eq("ib chain", got, ["2134@2", "2234@2", "3234@1", "3244@3", "3245@4"].map(String::from).to_vec()))?;
    let pi = Target::Fpf(FpfInvolution::from_cycles(&[(1, 2), (3, 6), (4, 5)]).unwrap());
    let v = bump(&"243".parse().unwrap(), &pi, Flavor::Fpf).map_err(|e| e.to_string())?;
    tick(eq("fb", v.to_string(), "465".into()))?;

    let t = st("1 2' 4' 5 9 / 3 6' 8 / 7");
    tick(eq("shword", t.shword().to_string(), "467238159".into()))?;
    tick(eq("Des", tableau_descents(&t).unwrap(), BTreeSet::from([1, 3, 5])))?;

    // w = (∅, 36, 1245) in Perm_3(6)
    let w = fac("()(36)(1245)");
    let winv = inv(&w).map_err(|e| e.to_string())?;
    tick(eq("w^-1", winv.to_string(), "332332".into()))?;
    let o = oeg_insert(&w).map_err(|e| e.to_string())?;
    tick(eq("P^O(w)", o.p.clone(), st("1 2 4 5 / 3 6")))?;
    tick(eq("Q^O(w)", o.q.clone(), st("2 2 3' 3 / 3 3")))?;
    let prefixes: Vec<ShiftedTableau> = (1..=6)
        .map(|k| oeg_insert(&Factorization::singletons(&w.word().0[..k])).unwrap().p)
        .collect();
    let shown = ["3", "3 6", "1 3 6", "1 2 6 / 3", "1 2 4 / 3 6", "1 2 4 5 / 3 6"].map(st).to_vec();
    tick(eq("P^O prefixes", prefixes, shown))?;
    tick(eq("P^O(w) = Q_HM(w^-1)", o.p, hm.q))?;
    tick(eq("Q^O(w) = P_HM(w^-1)", o.q, hm.p.clone()))?;
    let d = dbl(&w).map_err(|e| e.to_string())?;
    tick(eq("Q^O(2[w])", oeg_insert(&d).map_err(|e| e.to_string())?.q, hm.p.clone()))?;
    tick(eq("Q^Sp(2[w])", speg_insert(&d).map_err(|e| e.to_string())?.q, hm.p))?;
    Ok(format!("{n} values"))
}

fn figures() -> Outcome {
    let stab = stab_graph();
    let ir = ir_graph();
    let irfpf = irfpf_graph();
    for (name, len) in [("ShTab", stab.len()), ("R^O", ir.len()), ("R^Sp", irfpf.len())] {
        eq(&format!("{name} vertices"), len, 24)?;
    }
    let stab_names: Vec<(&str, ShiftedTableau)> = STAB.iter().map(|&(k, s)| (k, st(s))).collect();
    eq("ShTab edges", actual_edges(&stab), expected_edges(&stab_names))?;
    let names: Vec<(&str, Factorization)> = IR.iter().map(|&(k, s)| (k, fact(s))).collect();
    eq("R^O edges", actual_edges(&ir), expected_edges(&names))?;
    let names: Vec<(&str, Factorization)> = IRFPF.iter().map(|&(k, s)| (k, fact(s))).collect();
    eq("R^Sp edges", actual_edges(&irfpf), expected_edges(&names))?;
    ensure(iso_check(&stab, &ir) && iso_check(&ir, &irfpf) && iso_check(&stab, &irfpf), || {
        "figures are not pairwise isomorphic".into()
    })?;
    let tabs: BTreeSet<ShiftedTableau> = stab.vertices().iter().cloned().collect();
    for (name, g, q) in [
        ("Q^O", &ir, (|w: &Factorization| oeg_insert(w).unwrap().q) as fn(&Factorization) -> ShiftedTableau),
        ("Q^Sp", &irfpf, |w: &Factorization| speg_insert(w).unwrap().q),
    ] {
        let images: BTreeSet<ShiftedTableau> = g.vertices().iter().map(q).collect();
        eq(&format!("{name} image"), images, tabs.clone())?;
        let r = quasi_isomorphism_check(g, &stab, |w| Some(q(w)));
        ensure(r.ok(), || format!("{name} is not an isomorphism: {:?}", r.failures))?;
    }
    Ok(format!("3 graphs, {} edges each, Q^O and Q^Sp isomorphisms", EDGES.len()))
}

fn fibers() -> Outcome {
    use VerifyTarget::*;
    run_targets(&[EgFibers, OegFibers, SpegFibers, QMorphismO, QMorphismSp], bounds(5, 3))
}

fn bumps() -> Outcome {
    run_targets(&[VerifyTarget::BumpProperties], bounds(5, 3))
}

fn reduction() -> Outcome {
    run_targets(&[VerifyTarget::ReductionLemma], bounds(5, 3))
}

fn axioms_and_characters() -> Outcome {
    use VerifyTarget::*;
    run_targets(&[CrystalAxioms, Supersymmetry, SchurPPositivity], bounds(5, 3))
}

fn dual_equivalence() -> Outcome {
    run_targets(&[VerifyTarget::DualEquivalence], bounds(6, 3))
}

fn increments() -> Outcome {
    let b = bounds(5, 3);
    let plain = check_increment_bound(Flavor::Reduced, 1, b).map_err(|e| e.to_string())?;
    ensure(plain.ok(), || format!("b increments exceed 1: {}", plain.failures[0].detail))?;
    let mut notes = vec![format!("b in {{0,1}} on {} bumps", plain.checked)];
    for t in [VerifyTarget::ConjectureIbBound, VerifyTarget::ConjectureFbBound] {
        let r = verify::run(t, b).map_err(|e| e.to_string())?;
        match r.minimal_counterexample() {
            None => notes.push(format!("{t}: {} bumps, no counterexample", r.checked)),
            Some(f) => {
                eprintln!("!!! {t}: COUNTEREXAMPLE to the conjectured bound: {}", f.detail);
                notes.push(format!("{t}: {} COUNTEREXAMPLES", r.failures.len()));
            }
        }
    }
    Ok(notes.join("; "))
}

fn message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "golden examples", budget: secs(1), run: golden },
        Criterion { id: 2, name: "figure reproduction", budget: secs(15), run: figures },
        Criterion { id: 3, name: "fiber theorems", budget: secs(120), run: fibers },
        Criterion { id: 4, name: "bump properties", budget: secs(120), run: bumps },
        Criterion { id: 5, name: "reduction suite", budget: secs(60), run: reduction },
        Criterion { id: 6, name: "axioms and characters", budget: secs(60), run: axioms_and_characters },
        Criterion { id: 7, name: "dual equivalence", budget: secs(60), run: dual_equivalence },
        Criterion { id: 8, name: "increment bounds", budget: secs(60), run: increments },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let out = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| Err(message(p)));
        let took = start.elapsed();
        let out = match out {
            Ok(note) if took > c.budget => Err(format!("{note}; over the {:?} budget", c.budget)),
            other => other,
        };
        let (tag, note) = match &out {
            Ok(note) => ("PASS", note.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        if out.is_err() {
            failed += 1;
        }
        println!("[{tag}] {}. {} ({:.2}s): {note}", c.id, c.name, took.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use qcrystal::bumping::*;
use qcrystal::insertion::{eg_insert, Factorization};
use qcrystal::permwords::*;
use qcrystal::verify::{check_bump_properties, check_increment_bound, Bounds, Corpus};
use qcrystal::Error;

fn word(s: &str) -> Word {
    s.parse().unwrap()
}

fn inv_target() -> Target {
    Target::Perm(Permutation::from_cycles(&[vec![2, 5]]).unwrap())
}

fn fpf_target() -> Target {
    Target::Fpf(FpfInvolution::from_cycles(&[(1, 2), (3, 6), (4, 5)]).unwrap())
}

fn s(letters: &[i32]) -> Permutation {
    word_to_permutation(letters)
}

#[test]
fn involution_bump_example() {
    let pi = inv_target();
    assert!(in_class(&word("234"), &pi, Flavor::Involution));
    let chain = bump_trace(&word("2134"), &pi, Flavor::Involution, None).unwrap().unwrap();
    let got: Vec<(String, usize)> = chain.iter().map(|m| (m.word.to_string(), m.mark)).collect();
    let want = [("2134", 2), ("2234", 2), ("3234", 1), ("3244", 3), ("3245", 4)];
    assert_eq!(got, want.map(|(w, i)| (w.to_string(), i)));
    assert_eq!(bump(&word("2134"), &pi, Flavor::Involution).unwrap(), word("3245"));
}

#[test]
fn companion_of_reduced_but_not_involution_word() {
    // 3234 is reduced, not an involution word; deleting letter 3 (not 4)
    // leaves 324 ∈ R^O((2,5)), so the chain continues from mark 3
    let pi = inv_target();
    let w = word("3234");
    assert!(is_reduced_word(&w) && !is_involution_word(&w));
    assert_eq!(marked_indices(&w, &pi, Flavor::Involution), vec![1, 3]);
    assert!(!is_marked(&w, 4, &pi, Flavor::Involution));
    assert_eq!(companion_index(&MarkedWord::new(w, 1), &pi, Flavor::Involution).unwrap(), 3);
}

#[test]
fn fpf_bump_example() {
    let pi = fpf_target();
    let chain = bump_trace(&word("243"), &pi, Flavor::Fpf, None).unwrap().unwrap();
    let words: Vec<String> = chain.iter().skip(1).map(|m| m.word.to_string()).collect();
    assert_eq!(words, ["343", "443", "453", "454", "455", "465"]);
    assert_eq!(bump(&word("243"), &pi, Flavor::Fpf).unwrap(), word("465"));
    for w in ["343", "454"] {
        assert!(is_semi_reduced(&word(w), &pi), "{w}");
        let mw = MarkedWord::new(word(w), chain.iter().find(|m| m.word == word(w)).unwrap().mark);
        assert!(matches!(companion_index(&mw, &pi, Flavor::Fpf), Err(Error::InvalidInput(_))));
    }
}

#[test]
fn push_on_terminal_word_keeps_mark() {
    let pi = Target::Perm(s(&[1, 3]));
    let mw = MarkedWord::new(word("213"), 1);
    assert!(is_reduced_word(&mw.word));
    assert_eq!(push_step(&mw, &pi, Flavor::Reduced).unwrap(), MarkedWord::new(word("313"), 1));
}

#[test]
fn unmarked_words_are_fixed() {
    let pi = Target::Perm(s(&[5]));
    for w in ["12", "213", "1"] {
        assert_eq!(bump(&word(w), &pi, Flavor::Reduced).unwrap(), word(w));
    }
    assert_eq!(del(&word("7"), 1).unwrap(), Word::empty());
    assert!(del(&word("12"), 3).is_err());
    assert!(bump(&word("22"), &pi, Flavor::Reduced).is_err());
}

#[test]
fn iteration_cap_is_enforced() {
    let pi = inv_target();
    let err = bump_trace(&word("2134"), &pi, Flavor::Involution, Some(2)).unwrap_err();
    assert_eq!(err, Error::IterationCap { cap: 2 });
}

#[test]
fn factorization_bump_keeps_factor_sizes() {
    let pi = inv_target();
    let f: Factorization = "(2)(134)".parse().unwrap();
    let g = bump_factorization(&f, &pi, Flavor::Involution).unwrap();
    assert_eq!(g.to_string(), "3/245");
    assert_eq!(g.sizes(), f.sizes());
}

#[test]
fn involution_decomposition_matches_example() {
    let atoms = decompose_bump(&word("2134"), &inv_target(), Flavor::Involution).unwrap();
    assert_eq!(atoms, vec![s(&[2, 3, 4]), s(&[3, 2, 4])]);
    assert_eq!(atoms[0], Permutation::from_cycles(&[vec![2, 3, 4, 5]]).unwrap());
    assert_eq!(atoms[1], Permutation::from_cycles(&[vec![2, 4, 5, 3]]).unwrap());
    assert_eq!(replay(&word("2134"), &atoms).unwrap(), word("3245"));
}

#[test]
fn fpf_decomposition() {
    let w = word("243");
    let pi = fpf_target();
    let atoms = decompose_bump(&w, &pi, Flavor::Fpf).unwrap();
    let (a, b) = (s(&[4, 3]), s(&[4, 5]));
    assert_eq!(a, Permutation::from_cycles(&[vec![3, 5, 4]]).unwrap());
    assert_eq!(b, Permutation::from_cycles(&[vec![4, 5, 6]]).unwrap());
    assert_eq!(atoms, vec![a.clone(), a.clone(), b.clone(), b.clone()]);
    assert_eq!(replay(&w, &atoms).unwrap(), word("465"));
    let allowed = atoms_of(&pi);
    assert!(atoms.iter().all(|x| allowed.contains(x)));
    // three copies of s4s3 followed by one s4s5 stop one push short
    assert_eq!(replay(&w, &[a.clone(), a.clone(), a, b]).unwrap(), word("463"));
}

fn atoms_of(pi: &Target) -> BTreeSet<Permutation> {
    let flavor = if matches!(pi, Target::Fpf(_)) { Flavor::Fpf } else { Flavor::Involution };
    atoms(pi, flavor).unwrap()
}

#[test]
fn decompositions_use_atoms_and_are_constant_on_ck_classes() {
    for flavor in [Flavor::Involution, Flavor::Fpf] {
        let rel = if flavor == Flavor::Fpf { Relation::Sp } else { Relation::O };
        let corpus = Corpus::build(flavor, 4).unwrap();
        let mut seen: BTreeMap<(Target, Word), Vec<Permutation>> = BTreeMap::new();
        for w in corpus.words() {
            let marks: BTreeSet<Target> =
                (1..=w.len()).filter_map(|i| word_target(&w.del(i).unwrap(), flavor)).collect();
            for pi in marks {
                let atoms = decompose_bump(&w, &pi, flavor).unwrap();
                let allowed = atoms_of(&pi);
                assert!(atoms.iter().all(|a| allowed.contains(a)), "{w} {pi}");
                assert_eq!(replay(&w, &atoms).unwrap(), bump(&w, &pi, flavor).unwrap());
                // ~K classes inside the ~O/~Sp class share the atom sequence
                let rep = equivalence_class(&w, Relation::K).into_iter().next().unwrap();
                if let Some(prev) = seen.get(&(pi.clone(), rep.clone())) {
                    assert_eq!(prev, &atoms, "{w} vs {rep} under {pi}");
                } else {
                    seen.insert((pi.clone(), rep), atoms);
                }
                assert!(equivalence_class(&w, rel).contains(&w));
            }
        }
    }
}

#[test]
fn exhaustive_properties() {
    let b = Bounds::new(4, 3).unwrap();
    for flavor in [Flavor::Reduced, Flavor::Involution, Flavor::Fpf] {
        let o = check_bump_properties(flavor, b).unwrap();
        assert!(o.ok(), "{:?}", &o.failures[..o.failures.len().min(5)]);
        assert!(o.checked > 0);
    }
    assert!(check_increment_bound(Flavor::Involution, 1, b).unwrap().ok());
    assert!(check_increment_bound(Flavor::Fpf, 2, b).unwrap().ok());
}

#[test]
fn increment_bound_reports_counterexamples() {
    // a bound of 0 is violated by every nontrivial bump
    let o = check_increment_bound(Flavor::Reduced, 0, Bounds::new(3, 1).unwrap()).unwrap();
    assert!(!o.ok());
    assert!(o.failures[0].size <= o.failures.last().unwrap().size);
}

fn reduced_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(1..8i32, 1..8).prop_map(|v| {
        let mut w = Vec::new();
        for a in v {
            w.push(a);
            if !is_reduced_word(&w) {
                w.pop();
            }
        }
        Word(w)
    })
}

proptest! {
    #[test]
    fn plain_bumps_preserve_descents_and_recording(w in reduced_word()) {
        let q = |v: &Word| eg_insert(&Factorization::singletons(v)).unwrap().q;
        for i in 1..=w.len() {
            let Some(p) = reduced_product(&w.del(i).unwrap()) else { continue };
            let pi = Target::Perm(p);
            let v = bump(&w, &pi, Flavor::Reduced).unwrap();
            prop_assert!(is_reduced_word(&v));
            prop_assert_eq!(v.descents(), w.descents());
            prop_assert_eq!(q(&v), q(&w));
            prop_assert!(increments(&w, &v).iter().all(|&d| d == 0 || d == 1));
        }
    }
}

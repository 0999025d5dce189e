//! Shared fixtures: the three 24-vertex q_3 crystals for λ = (3,1), named by
//! grid position, and builders for the corresponding graphs.
#![allow(dead_code)]

use std::collections::BTreeSet;

use qcrystal::crystal::*;
use qcrystal::insertion::Factorization;
use qcrystal::permwords::{FpfInvolution, Flavor, Permutation, Target};
use qcrystal::tableaux::{shifted_semistandard, Shape, ShiftedTableau};

pub const Q: CrystalIndex = CrystalIndex::QBar;
pub const G1: CrystalIndex = CrystalIndex::Gl(1);
pub const G2: CrystalIndex = CrystalIndex::Gl(2);

/// The edge pattern shared by the three 24-vertex q_3 crystals drawn for
/// λ = (3,1). Vertices are named by their grid position.
pub const EDGES: &[(&str, CrystalIndex, &str)] = &[
    ("62", G1, "51"),
    ("62", G2, "52"),
    ("62", Q, "53"),
    ("51", Q, "40"),
    ("51", G1, "40"),
    ("51", G2, "41"),
    ("52", G1, "42"),
    ("52", Q, "43"),
    ("53", G2, "43"),
    ("40", G2, "30"),
    ("41", Q, "30"),
    ("41", G1, "30"),
    ("41", G2, "31"),
    ("42", G1, "32"),
    ("42", Q, "33"),
    ("43", G1, "33"),
    ("43", G2, "34"),
    ("45", Q, "35"),
    ("45", G1, "35"),
    ("30", G2, "20"),
    ("31", Q, "20"),
    ("31", G1, "21"),
    ("32", G2, "21"),
    ("32", Q, "22"),
    ("32", G1, "22"),
    ("33", G2, "23"),
    ("34", G1, "23"),
    ("34", Q, "25"),
    ("35", G2, "25"),
    ("20", G2, "11"),
    ("21", Q, "12"),
    ("21", G1, "12"),
    ("22", G2, "12"),
    ("23", Q, "13"),
    ("23", G1, "13"),
    ("11", Q, "02"),
    ("11", G1, "02"),
    ("12", G2, "02"),
];

pub const STAB: &[(&str, &str)] = &[
    ("02", "2 3' 3 / 3"),
    ("11", "1 3' 3 / 3"),
    ("12", "2 2 3 / 3"),
    ("13", "2 2 3' / 3"),
    ("20", "1 2' 3 / 3"),
    ("21", "1 2 3 / 3"),
    ("22", "2 2 2 / 3"),
    ("23", "1 2 3' / 3"),
    ("25", "1 2' 3' / 3"),
    ("30", "1 2' 3 / 2"),
    ("31", "1 1 3 / 3"),
    ("32", "1 2 2 / 3"),
    ("33", "1 2' 2 / 3"),
    ("34", "1 1 3' / 3"),
    ("35", "1 2' 3' / 2"),
    ("40", "1 2' 2 / 2"),
    ("41", "1 1 3 / 2"),
    ("42", "1 1 2 / 3"),
    ("43", "1 1 2' / 3"),
    ("45", "1 1 3' / 2"),
    ("51", "1 1 2 / 2"),
    ("52", "1 1 1 / 3"),
    ("53", "1 1 2' / 2"),
    ("62", "1 1 1 / 2"),
];

pub const IR: &[(&str, &str)] = &[
    ("02", "∅/3/124"),
    ("11", "3/∅/124"),
    ("12", "∅/13/24"),
    ("13", "∅/34/12"),
    ("20", "3/1/24"),
    ("21", "1/3/24"),
    ("22", "∅/134/2"),
    ("23", "3/4/12"),
    ("25", "4/3/12"),
    ("30", "3/12/4"),
    ("31", "13/∅/24"),
    ("32", "1/34/2"),
    ("33", "3/14/2"),
    ("34", "34/∅/12"),
    ("35", "4/13/2"),
    ("40", "3/124/∅"),
    ("41", "13/2/4"),
    ("42", "13/4/2"),
    ("43", "34/1/2"),
    ("45", "14/3/2"),
    ("51", "13/24/∅"),
    ("52", "134/∅/2"),
    ("53", "34/12/∅"),
    ("62", "134/2/∅"),
];

pub const IRFPF: &[(&str, &str)] = &[
    ("02", "∅/4/235"),
    ("11", "4/∅/235"),
    ("12", "∅/24/35"),
    ("13", "∅/45/23"),
    ("20", "4/2/35"),
    ("21", "2/4/35"),
    ("22", "∅/245/3"),
    ("23", "4/5/23"),
    ("25", "4/3/23"),
    ("30", "4/23/5"),
    ("31", "24/∅/35"),
    ("32", "2/45/3"),
    ("33", "4/25/3"),
    ("34", "45/∅/23"),
    ("35", "4/23/2"),
    ("40", "4/235/∅"),
    ("41", "24/3/5"),
    ("42", "24/5/3"),
    ("43", "45/2/3"),
    ("45", "24/3/2"),
    ("51", "24/35/∅"),
    ("52", "245/∅/3"),
    ("53", "45/23/∅"),
    ("62", "245/3/∅"),
];

pub fn fact(s: &str) -> Factorization {
    let groups: String = s.split('/').map(|g| format!("({})", g.replace('∅', ""))).collect();
    groups.parse().unwrap()
}

pub fn st(s: &str) -> ShiftedTableau {
    ShiftedTableau::parse(s).unwrap()
}

pub fn expected_edges<E: Clone + Ord>(names: &[(&str, E)]) -> BTreeSet<(E, CrystalIndex, E)> {
    let get = |n: &str| names.iter().find(|(k, _)| *k == n).unwrap().1.clone();
    EDGES.iter().map(|&(a, i, b)| (get(a), i, get(b))).collect()
}

pub fn actual_edges<E>(g: &CrystalGraph<E>) -> BTreeSet<(E, CrystalIndex, E)>
where
    E: Clone + Ord + std::fmt::Display + serde::Serialize + Send + Sync,
{
    g.edges().into_iter().map(|(v, i, u)| (g.vertex(v).clone(), i, g.vertex(u).clone())).collect()
}

pub fn ir_graph() -> CrystalGraph<Factorization> {
    let c = FactorizationCrystal::new(3, Flavor::Involution);
    let pi = Target::Perm(Permutation::from_cycles(&[vec![1, 3], vec![2, 5]]).unwrap());
    CrystalGraph::from_elements(&c, c.elements(&pi, Flavor::Involution).unwrap()).unwrap()
}

pub fn irfpf_graph() -> CrystalGraph<Factorization> {
    let c = FactorizationCrystal::new(3, Flavor::Fpf);
    let pi = Target::Fpf(FpfInvolution::from_cycles(&[(1, 4), (2, 6), (3, 5)]).unwrap());
    CrystalGraph::from_elements(&c, c.elements(&pi, Flavor::Fpf).unwrap()).unwrap()
}

pub fn stab_graph() -> CrystalGraph<ShiftedTableau> {
    let c = ShiftedTableauCrystal::new(3);
    let mu = Shape::strict(vec![3, 1]).unwrap();
    CrystalGraph::from_elements(&c, shifted_semistandard(&mu, 3)).unwrap()
}

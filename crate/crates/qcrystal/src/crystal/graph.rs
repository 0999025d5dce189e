//! Finite crystal graphs materialized from a [`Crystal`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{Crystal, CrystalIndex};
use crate::error::{Error, Result};

/// Exploration stops with [`Error::CapExceeded`] past this many vertices
/// unless a different cap is passed.
pub const DEFAULT_VERTEX_CAP: usize = 100_000;

/// A finite crystal: sorted vertices with `f`/`e` tables indexed by
/// position in [`CrystalGraph::indices`].
#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    n: usize,
    queer: bool,
    indices: Vec<CrystalIndex>,
    vertices: Vec<E>,
    index: BTreeMap<E, usize>,
    weights: Vec<Vec<u32>>,
    f: Vec<Vec<Option<usize>>>,
    e: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 20 {
            self.failures.push(msg);
        }
    }
}

impl<E> CrystalGraph<E>
where
    E: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
{
    /// The closure of `seeds` under every `f` and `e`.
    pub fn explore<C: Crystal<Elem = E>>(crystal: &C, seeds: impl IntoIterator<Item = E>, cap: usize) -> Result<Self> {
        let indices = crystal.indices();
        let mut seen: BTreeSet<E> = BTreeSet::new();
        let mut frontier: Vec<E> = Vec::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                frontier.push(s);
            }
        }
        if seen.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        while !frontier.is_empty() {
            let next: Vec<E> = frontier
                .par_iter()
                .flat_map_iter(|b| {
                    indices
                        .iter()
                        .flat_map(|&i| [crystal.f(b, i), crystal.e(b, i)])
                        .flatten()
                        .collect::<Vec<E>>()
                })
                .collect();
            frontier = Vec::new();
            for c in next {
                if !seen.contains(&c) {
                    seen.insert(c.clone());
                    frontier.push(c);
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                }
            }
        }
        Self::build(crystal, seen.into_iter().collect())
    }

    /// The crystal on exactly `elems`; fails if an operator leaves the set.
    pub fn from_elements<C: Crystal<Elem = E>>(crystal: &C, elems: impl IntoIterator<Item = E>) -> Result<Self> {
        let set: BTreeSet<E> = elems.into_iter().collect();
        Self::build(crystal, set.into_iter().collect())
    }

    fn build<C: Crystal<Elem = E>>(crystal: &C, vertices: Vec<E>) -> Result<Self> {
        let indices = crystal.indices();
        let index: BTreeMap<E, usize> = vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let look = |x: Option<E>, from: &E, i: CrystalIndex| -> Result<Option<usize>> {
            match x {
                None => Ok(None),
                Some(x) => index
                    .get(&x)
                    .copied()
                    .map(Some)
                    .ok_or_else(|| Error::Invariant(format!("operator {i} sends {from} outside the vertex set to {x}"))),
            }
        };
        let rows: Vec<(Vec<u32>, Vec<Option<usize>>, Vec<Option<usize>>)> = vertices
            .par_iter()
            .map(|b| {
                let mut f = Vec::with_capacity(indices.len());
                let mut e = Vec::with_capacity(indices.len());
                for &i in &indices {
                    f.push(look(crystal.f(b, i), b, i)?);
                    e.push(look(crystal.e(b, i), b, i)?);
                }
                Ok((crystal.weight(b), f, e))
            })
            .collect::<Result<_>>()?;
        let mut weights = Vec::with_capacity(rows.len());
        let mut f = Vec::with_capacity(rows.len());
        let mut e = Vec::with_capacity(rows.len());
        for (w, fr, er) in rows {
            weights.push(w);
            f.push(fr);
            e.push(er);
        }
        Ok(CrystalGraph { n: crystal.rank(), queer: crystal.is_queer(), indices, vertices, index, weights, f, e })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_queer(&self) -> bool {
        self.queer
    }

    pub fn indices(&self) -> &[CrystalIndex] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[E] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &E {
        &self.vertices[v]
    }

    pub fn index_of(&self, b: &E) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn weight(&self, v: usize) -> &[u32] {
        &self.weights[v]
    }

    fn slot(&self, i: CrystalIndex) -> Option<usize> {
        self.indices.iter().position(|&j| j == i)
    }

    pub fn f(&self, v: usize, i: CrystalIndex) -> Option<usize> {
        self.f[v][self.slot(i)?]
    }

    pub fn e(&self, v: usize, i: CrystalIndex) -> Option<usize> {
        self.e[v][self.slot(i)?]
    }

    /// All edges `v --i--> f_i(v)`, sorted.
    pub fn edges(&self) -> Vec<(usize, CrystalIndex, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for (k, &i) in self.indices.iter().enumerate() {
                if let Some(u) = self.f[v][k] {
                    out.push((v, i, u));
                }
            }
        }
        out
    }

    pub fn epsilon(&self, v: usize, i: CrystalIndex) -> usize {
        let mut k = 0;
        let mut cur = v;
        while let Some(u) = self.e(cur, i) {
            k += 1;
            cur = u;
            if k > self.len() {
                break;
            }
        }
        k
    }

    pub fn phi(&self, v: usize, i: CrystalIndex) -> usize {
        let mut k = 0;
        let mut cur = v;
        while let Some(u) = self.f(cur, i) {
            k += 1;
            cur = u;
            if k > self.len() {
                break;
            }
        }
        k
    }

    /// `(ε_i(v), φ_i(v))` for every index, in index order.
    pub fn string_lengths(&self, v: usize) -> Vec<(usize, usize)> {
        self.indices.iter().map(|&i| (self.epsilon(v, i), self.phi(v, i))).collect()
    }

    /// Weakly connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (v, _, u) in self.edges() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, u));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.len() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// The induced subcrystal on a union of components.
    pub fn subgraph(&self, vs: &[usize]) -> CrystalGraph<E> {
        let mut keep: Vec<usize> = vs.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let remap: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let tr = |t: &Vec<Option<usize>>| t.iter().map(|x| x.and_then(|u| remap.get(&u).copied())).collect();
        let vertices: Vec<E> = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        CrystalGraph {
            n: self.n,
            queer: self.queer,
            indices: self.indices.clone(),
            index: vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect(),
            vertices,
            weights: keep.iter().map(|&v| self.weights[v].clone()).collect(),
            f: keep.iter().map(|&v| tr(&self.f[v])).collect(),
            e: keep.iter().map(|&v| tr(&self.e[v])).collect(),
        }
    }

    /// Vertices with no incoming edge of any colour.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.e[v].iter().all(Option::is_none)).collect()
    }

    /// Vertices killed by every `e_i`, `i ∈ [n-1]`.
    pub fn gl_highest_weights(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| (1..self.n).all(|i| self.e(v, CrystalIndex::Gl(i)).is_none()))
            .collect()
    }

    /// `S_j`: reflect `v` across its `j`-string.
    fn reflect(&self, v: usize, j: usize) -> usize {
        let i = CrystalIndex::Gl(j);
        let (eps, phi) = (self.epsilon(v, i), self.phi(v, i));
        let mut cur = v;
        if phi >= eps {
            for _ in 0..phi - eps {
                cur = self.f(cur, i).expect("string length");
            }
        } else {
            for _ in 0..eps - phi {
                cur = self.e(cur, i).expect("string length");
            }
        }
        cur
    }

    /// The conjugated queer raising operator `e_{ī}` for `2 ≤ i ≤ n-1`:
    /// `S_{w_i}^{-1} e_{1̄} S_{w_i}` with `w_i = s_2 ⋯ s_i s_1 ⋯ s_{i-1}`.
    pub fn e_bar(&self, v: usize, i: usize) -> Option<usize> {
        if i == 1 {
            return self.e(v, CrystalIndex::QBar);
        }
        let word: Vec<usize> = (2..=i).chain(1..i).collect();
        let mut cur = v;
        for &j in word.iter().rev() {
            cur = self.reflect(cur, j);
        }
        cur = self.e(cur, CrystalIndex::QBar)?;
        for &j in &word {
            cur = self.reflect(cur, j);
        }
        Some(cur)
    }

    /// Highest weights in the sense of Grantcharov, Jung, Kang, Kashiwara
    /// and Kim: killed by every `e_i` and every `e_{ī}`. For gl_n crystals
    /// this is [`Self::gl_highest_weights`].
    pub fn highest_weights(&self) -> Vec<usize> {
        let gl = self.gl_highest_weights();
        if !self.queer {
            return gl;
        }
        gl.into_iter().filter(|&v| (1..self.n).all(|i| self.e_bar(v, i).is_none())).collect()
    }

    /// The gl_n axioms and, for queer crystals, the q_n axioms.
    pub fn axioms_check(&self) -> AxiomReport {
        let mut r = AxiomReport { checked: self.len(), failures: Vec::new() };
        let n = self.n;
        for v in 0..self.len() {
            let wt = &self.weights[v];
            for i in 1..n {
                let gi = CrystalIndex::Gl(i);
                if let Some(u) = self.e(v, gi) {
                    if self.f(u, gi) != Some(v) {
                        r.fail(format!("f_{i} e_{i} {} != itself", self.vertices[v]));
                    }
                    let mut want = wt.clone();
                    want[i - 1] += 1;
                    if want[i] == 0 {
                        r.fail(format!("e_{i} {} lowers an empty weight", self.vertices[v]));
                        continue;
                    }
                    want[i] -= 1;
                    if self.weights[u] != want {
                        r.fail(format!("weight of e_{i} {}", self.vertices[v]));
                    }
                }
                if let Some(u) = self.f(v, gi) {
                    if self.e(u, gi) != Some(v) {
                        r.fail(format!("e_{i} f_{i} {} != itself", self.vertices[v]));
                    }
                }
                let d = wt[i - 1] as i64 - wt[i] as i64;
                if self.phi(v, gi) as i64 - self.epsilon(v, gi) as i64 != d {
                    r.fail(format!("phi_{i} - eps_{i} != wt difference at {}", self.vertices[v]));
                }
            }
            if !self.queer || n < 2 {
                continue;
            }
            let q = CrystalIndex::QBar;
            if let Some(u) = self.e(v, q) {
                if self.f(u, q) != Some(v) {
                    r.fail(format!("f_1bar e_1bar {} != itself", self.vertices[v]));
                }
                let mut want = wt.clone();
                want[0] += 1;
                if want[1] == 0 {
                    r.fail(format!("e_1bar {} lowers an empty weight", self.vertices[v]));
                } else {
                    want[1] -= 1;
                    if self.weights[u] != want {
                        r.fail(format!("weight of e_1bar {}", self.vertices[v]));
                    }
                }
                for i in 3..n {
                    let gi = CrystalIndex::Gl(i);
                    if self.epsilon(u, gi) != self.epsilon(v, gi) || self.phi(u, gi) != self.phi(v, gi) {
                        r.fail(format!("e_1bar changes string {i} at {}", self.vertices[v]));
                    }
                }
            }
            if let Some(u) = self.f(v, q) {
                if self.e(u, q) != Some(v) {
                    r.fail(format!("e_1bar f_1bar {} != itself", self.vertices[v]));
                }
            }
            for i in 3..n {
                let gi = CrystalIndex::Gl(i);
                let commute = |a: &dyn Fn(usize) -> Option<usize>, b: &dyn Fn(usize) -> Option<usize>| {
                    a(v).and_then(b) == b(v).and_then(a)
                };
                let fq = |x| self.f(x, q);
                let eq = |x| self.e(x, q);
                let fi = |x| self.f(x, gi);
                let ei = |x| self.e(x, gi);
                if !(commute(&fq, &fi) && commute(&fq, &ei) && commute(&eq, &fi) && commute(&eq, &ei)) {
                    r.fail(format!("1bar and {i} do not commute at {}", self.vertices[v]));
                }
            }
            let s = self.epsilon(v, q) + self.phi(v, q);
            if s > 1 || ((wt[0] != 0 || wt[1] != 0) && s != 1) {
                r.fail(format!("eps_1bar + phi_1bar = {s} at {}", self.vertices[v]));
            }
        }
        r
    }

    /// Graphviz source, one `digraph` per component.
    pub fn to_dot(&self) -> String {
        let esc = |s: String| s.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n");
        let mut out = String::new();
        for (k, comp) in self.components().iter().enumerate() {
            let _ = writeln!(out, "digraph component_{k} {{");
            for &v in comp {
                let _ = writeln!(out, "  v{v} [label=\"{}\"];", esc(self.vertices[v].to_string()));
            }
            for &v in comp {
                for (s, &i) in self.indices.iter().enumerate() {
                    if let Some(u) = self.f[v][s] {
                        let _ = writeln!(out, "  v{v} -> v{u} [label=\"{i}\"];");
                    }
                }
            }
            out.push_str("}\n");
        }
        out
    }

    /// Vertices with their weights, and edges by vertex position.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = (0..self.len())
            .map(|v| {
                serde_json::json!({
                    "id": v,
                    "label": self.vertices[v].to_string(),
                    "value": self.vertices[v],
                    "weight": self.weights[v],
                })
            })
            .collect();
        let edges: Vec<serde_json::Value> = self
            .edges()
            .into_iter()
            .map(|(v, i, u)| serde_json::json!({"from": v, "to": u, "index": i}))
            .collect();
        serde_json::json!({
            "n": self.n,
            "queer": self.queer,
            "vertices": vertices,
            "edges": edges,
            "components": self.components(),
            "highest_weights": self.highest_weights(),
        })
    }
}

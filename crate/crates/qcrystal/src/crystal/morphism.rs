//! Morphisms, quasi-isomorphisms and isomorphism testing of finite crystal
//! graphs.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::graph::CrystalGraph;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    /// Image of each domain vertex, by position in the codomain.
    pub image: Vec<Option<usize>>,
    pub failures: Vec<String>,
}

impl MorphismReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 20 {
            self.failures.push(msg);
        }
    }
}

/// Checks that `map` preserves weights and string lengths and commutes with
/// every operator (with `0 ↦ 0`).
pub fn morphism_check<A, B, M>(dom: &CrystalGraph<A>, cod: &CrystalGraph<B>, map: M) -> MorphismReport
where
    A: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
    B: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
    M: Fn(&A) -> Option<B>,
{
    let mut r = MorphismReport::default();
    if dom.indices() != cod.indices() {
        r.fail("domain and codomain have different operator indices".into());
        return r;
    }
    r.image = dom.vertices().iter().map(|a| map(a).and_then(|b| cod.index_of(&b))).collect();
    for v in 0..dom.len() {
        let Some(u) = r.image[v] else {
            r.fail(format!("{} has no image in the codomain", dom.vertex(v)));
            continue;
        };
        if dom.weight(v) != cod.weight(u) {
            r.fail(format!("weight changes at {}", dom.vertex(v)));
        }
        if dom.string_lengths(v) != cod.string_lengths(u) {
            r.fail(format!("string lengths change at {}", dom.vertex(v)));
        }
        for &i in dom.indices() {
            let fv = dom.f(v, i).map(|x| r.image[x]);
            let ev = dom.e(v, i).map(|x| r.image[x]);
            if fv != cod.f(u, i).map(Some) {
                r.fail(format!("f_{i} does not commute at {}", dom.vertex(v)));
            }
            if ev != cod.e(u, i).map(Some) {
                r.fail(format!("e_{i} does not commute at {}", dom.vertex(v)));
            }
        }
    }
    r
}

/// A morphism that restricts to an isomorphism from each full subcrystal of
/// the domain onto some full subcrystal of the codomain.
pub fn quasi_isomorphism_check<A, B, M>(dom: &CrystalGraph<A>, cod: &CrystalGraph<B>, map: M) -> MorphismReport
where
    A: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
    B: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
    M: Fn(&A) -> Option<B>,
{
    let mut r = morphism_check(dom, cod, map);
    if !r.ok() {
        return r;
    }
    let cod_comps = cod.components();
    let mut comp_of = vec![0; cod.len()];
    for (k, c) in cod_comps.iter().enumerate() {
        for &u in c {
            comp_of[u] = k;
        }
    }
    for comp in dom.components() {
        let img: BTreeSet<usize> = comp.iter().map(|&v| r.image[v].unwrap()).collect();
        if img.len() != comp.len() {
            r.fail(format!("not injective on the component of {}", dom.vertex(comp[0])));
            continue;
        }
        let target = &cod_comps[comp_of[*img.first().unwrap()]];
        if target.len() != img.len() || !target.iter().all(|u| img.contains(u)) {
            r.fail(format!("image of the component of {} is not a full subcrystal", dom.vertex(comp[0])));
        }
    }
    r
}

/// Canonical code of a connected graph, rooted at `root`: vertices are
/// relabelled in breadth-first order following `f` then `e` edges in index
/// order.
fn rooted_code<E>(g: &CrystalGraph<E>, comp_len: usize, root: usize) -> Vec<u64>
where
    E: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
{
    let mut label = std::collections::HashMap::with_capacity(comp_len);
    let mut order = Vec::with_capacity(comp_len);
    let mut queue = VecDeque::from([root]);
    label.insert(root, 0u64);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &i in g.indices() {
            for u in [g.f(v, i), g.e(v, i)].into_iter().flatten() {
                if !label.contains_key(&u) {
                    label.insert(u, label.len() as u64);
                    queue.push_back(u);
                }
            }
        }
    }
    let mut code = Vec::new();
    for &v in &order {
        code.extend(g.weight(v).iter().map(|&x| x as u64));
        for &i in g.indices() {
            for u in [g.f(v, i), g.e(v, i)] {
                code.push(u.map_or(u64::MAX, |u| label[&u]));
            }
        }
    }
    code
}

fn component_code<E>(g: &CrystalGraph<E>, comp: &[usize]) -> Vec<u64>
where
    E: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
{
    let key = |v: usize| (g.weight(v).to_vec(), g.string_lengths(v));
    let best = comp.iter().map(|&v| key(v)).min().unwrap();
    comp.iter()
        .filter(|&&v| key(v) == best)
        .map(|&v| rooted_code(g, comp.len(), v))
        .min()
        .unwrap()
}

/// Whether two finite crystals are isomorphic as weighted, edge-labelled
/// directed graphs.
pub fn iso_check<A, B>(g1: &CrystalGraph<A>, g2: &CrystalGraph<B>) -> bool
where
    A: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
    B: Clone + Ord + std::fmt::Display + Serialize + Send + Sync,
{
    if g1.indices() != g2.indices() || g1.len() != g2.len() {
        return false;
    }
    let codes = |g1c: Vec<Vec<u64>>| {
        let mut v = g1c;
        v.sort();
        v
    };
    let c1 = codes(g1.components().iter().map(|c| component_code(g1, c)).collect());
    let c2 = codes(g2.components().iter().map(|c| component_code(g2, c)).collect());
    c1 == c2
}

//! Parallel drivers over the core library.

use std::collections::{BTreeMap, BTreeSet};

use compcs_core::composites::{enumerate_composites, underlying_basis, unbiased, CompositeCS, EntConfig};
use compcs_core::names::{build_test_set, name_of, name_test, Name, TestSet};
use compcs_core::search::{
    apply_ent, classify_clique, cliques_from_root, structure_of, vertex_order, Clique, ComplementarityGraph, Mode,
};
use compcs_core::zx::{catalog, mutate, verify_instances, Rule};
use rayon::prelude::*;

/// Run `f` on a pool of `threads` workers, or the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build().expect("thread pool").install(f),
        None => f(),
    }
}

fn edges(len: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Vec<(usize, usize)> {
    (0..len)
        .into_par_iter()
        .flat_map_iter(|i| {
            let adjacent = &adjacent;
            (i + 1..len).filter(move |&j| adjacent(i, j)).map(move |j| (i, j))
        })
        .collect()
}

pub fn semantic_graph(vertices: Vec<CompositeCS>) -> ComplementarityGraph {
    let bases: Vec<_> = vertices.par_iter().map(underlying_basis).collect();
    let e = edges(vertices.len(), |i, j| unbiased(&bases[i], &bases[j]));
    ComplementarityGraph::from_edges(vertices, &e, Mode::Semantic)
}

pub fn names_graph(vertices: Vec<CompositeCS>, t: &TestSet) -> ComplementarityGraph {
    let e = edges(vertices.len(), |i, j| name_test(&vertices[i], &vertices[j], t));
    ComplementarityGraph::from_edges(vertices, &e, Mode::Names)
}

pub fn build_graph(n: usize, mode: Mode) -> ComplementarityGraph {
    let vertices = enumerate_composites(n);
    match mode {
        Mode::Semantic => semantic_graph(vertices),
        Mode::Names => names_graph(vertices, &build_test_set(n)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Agreement {
    pub pairs: usize,
    pub disagreements: Vec<(usize, usize)>,
}

pub fn compare(a: &ComplementarityGraph, b: &ComplementarityGraph) -> Agreement {
    assert_eq!(a.vertices, b.vertices, "graphs over different vertex lists");
    let n = a.len();
    let mut disagreements = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a.adjacent(i, j) != b.adjacent(i, j) {
                disagreements.push((i, j));
            }
        }
    }
    Agreement { pairs: n * (n.saturating_sub(1)) / 2, disagreements }
}

/// Maximal cliques with outer branches in parallel, sorted canonically.
pub fn cliques(g: &ComplementarityGraph) -> Vec<Clique> {
    let order = vertex_order(g);
    let mut all: Vec<Vec<usize>> =
        (0..order.len()).into_par_iter().flat_map_iter(|k| cliques_from_root(g, &order, k)).collect();
    all.sort();
    all.iter().map(|c| classify_clique(g, c)).collect()
}

pub fn size_histogram(cliques: &[Clique]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for c in cliques {
        *h.entry(c.members.len()).or_insert(0) += 1;
    }
    h
}

pub fn config_summary<'a>(cliques: impl IntoIterator<Item = &'a Clique>) -> BTreeMap<EntConfig, usize> {
    let mut h = BTreeMap::new();
    for c in cliques {
        *h.entry(c.config).or_insert(0) += 1;
    }
    h
}

pub fn member_names(g: &ComplementarityGraph, members: &[usize]) -> Vec<Name> {
    members.iter().map(|&i| name_of(&g.vertices[i])).collect()
}

pub fn name_set(g: &ComplementarityGraph, members: &[usize]) -> BTreeSet<Name> {
    member_names(g, members).into_iter().collect()
}

/// Vertex indices of the structures named, sorted.
pub fn indices_of(g: &ComplementarityGraph, names: &[Name]) -> Option<Vec<usize>> {
    let mut out = names.iter().map(|n| structure_of(n).and_then(|cs| g.index_of(&cs))).collect::<Option<Vec<_>>>()?;
    out.sort_unstable();
    Some(out)
}

/// `ent` applied member-wise, with a 0-based index.
pub fn ent_image(names: &[Name], m: usize) -> Result<Vec<Name>, String> {
    names.iter().map(|n| apply_ent(n, m).map_err(|e| e.to_string())).collect()
}

#[derive(Clone, Debug)]
pub struct MutationOutcome {
    pub id: &'static str,
    pub detected: bool,
}

/// Inject a π phase into each instance's left side and re-check the rule.
pub fn mutation_outcome(rule: &Rule) -> MutationOutcome {
    let mutated: Vec<_> = rule.instances.iter().map(|(l, r)| (mutate(l), r.clone())).collect();
    let v = verify_instances(&mutated, rule.scalar_only);
    MutationOutcome { id: rule.id, detected: !v.holds_up_to_scalar }
}

pub fn mutation_report() -> Vec<MutationOutcome> {
    catalog().iter().map(mutation_outcome).collect()
}

pub fn classify(g: &ComplementarityGraph, members: &[usize]) -> EntConfig {
    classify_clique(g, members).config
}

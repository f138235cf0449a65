//! Complementarity graphs, maximal cliques and the `ent_m` maps.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::composites::{entanglement_class, CompositeCS, EntConfig};
use crate::constituents::Constituent;
use crate::names::{name_of, Name, ONE, Z};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Semantic,
    Names,
}

/// Fixed-width vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(len: usize) -> Bits {
        Bits(vec![0; len.div_ceil(64)])
    }

    pub fn full(len: usize) -> Bits {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn and_not(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    pub fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// Vertices are structures in enumeration order; edges join complementary pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementarityGraph {
    pub vertices: Vec<CompositeCS>,
    pub adjacency: Vec<Bits>,
    pub mode: Mode,
}

impl ComplementarityGraph {
    pub fn from_edges(vertices: Vec<CompositeCS>, edges: &[(usize, usize)], mode: Mode) -> Self {
        let n = vertices.len();
        let mut adjacency = vec![Bits::new(n); n];
        for &(a, b) in edges {
            if a != b {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
        ComplementarityGraph { vertices, adjacency, mode }
    }

    pub fn build(vertices: Vec<CompositeCS>, mode: Mode, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let n = vertices.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(vertices, &edges, mode)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|b| b.count()).sum::<usize>() / 2
    }

    pub fn index_of(&self, cs: &CompositeCS) -> Option<usize> {
        self.vertices.iter().position(|v| v == cs)
    }

    /// Adjacency as a row-major 0/1 byte matrix.
    pub fn matrix_bytes(&self) -> Vec<u8> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                out.push(self.adjacent(a, b) as u8);
            }
        }
        out
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        members.iter().enumerate().all(|(k, &a)| members[k + 1..].iter().all(|&b| self.adjacent(a, b)))
    }

    pub fn is_maximal_clique(&self, members: &[usize]) -> bool {
        if !self.is_clique(members) {
            return false;
        }
        let mut common = Bits::full(self.len());
        for &m in members {
            common = common.and(&self.adjacency[m]);
        }
        common.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    pub members: Vec<usize>,
    pub config: EntConfig,
}

fn degeneracy_order(g: &ComplementarityGraph) -> Vec<usize> {
    let n = g.len();
    let mut deg: Vec<usize> = g.adjacency.iter().map(|b| b.count()).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        removed[v] = true;
        order.push(v);
        for u in g.adjacency[v].iter() {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    order
}

fn expand(g: &ComplementarityGraph, r: &mut Vec<usize>, p: Bits, x: Bits, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = p
        .or(&x)
        .iter()
        .max_by_key(|&u| (p.and(&g.adjacency[u]).count(), core::cmp::Reverse(u)))
        .expect("nonempty");
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.and_not(&g.adjacency[pivot]).iter().collect();
    for v in candidates {
        r.push(v);
        expand(g, r, p.and(&g.adjacency[v]), x.and(&g.adjacency[v]), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Maximal cliques whose smallest-degeneracy vertex is `order[k]`.
pub fn cliques_from_root(g: &ComplementarityGraph, order: &[usize], k: usize) -> Vec<Vec<usize>> {
    let v = order[k];
    let n = g.len();
    let mut later = Bits::new(n);
    let mut earlier = Bits::new(n);
    for (i, &u) in order.iter().enumerate() {
        if i > k {
            later.insert(u);
        } else if i < k {
            earlier.insert(u);
        }
    }
    let mut out = Vec::new();
    let mut r = vec![v];
    expand(g, &mut r, later.and(&g.adjacency[v]), earlier.and(&g.adjacency[v]), &mut out);
    out
}

pub fn vertex_order(g: &ComplementarityGraph) -> Vec<usize> {
    degeneracy_order(g)
}

/// Every maximal clique exactly once, sorted lexicographically.
pub fn maximal_cliques(g: &ComplementarityGraph) -> Vec<Vec<usize>> {
    let order = degeneracy_order(g);
    let mut out = Vec::new();
    for k in 0..order.len() {
        out.extend(cliques_from_root(g, &order, k));
    }
    out.sort();
    out
}

pub fn classify_set(structures: &[&CompositeCS]) -> EntConfig {
    let mut c = EntConfig::default();
    for s in structures {
        c.add(entanglement_class(s));
    }
    c
}

pub fn classify_clique(g: &ComplementarityGraph, members: &[usize]) -> Clique {
    let structs: Vec<&CompositeCS> = members.iter().map(|&i| &g.vertices[i]).collect();
    Clique { members: members.to_vec(), config: classify_set(&structs) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntError {
    NotThreeQubits,
    BadIndex(usize),
    NotAStructureName,
}

impl fmt::Display for EntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntError::NotThreeQubits => f.write_str("ent maps act on three-qubit names"),
            EntError::BadIndex(m) => write!(f, "ent index {} out of range", m),
            EntError::NotAStructureName => f.write_str("matrix is not the name of a composite structure"),
        }
    }
}

/// Inverse of `name_of`, rejecting grids no structure produces.
pub fn structure_of(name: &Name) -> Option<CompositeCS> {
    let n = name.n();
    let mut cons = Vec::with_capacity(n);
    for q in 0..n {
        cons.push(match name.get(0, q).0 {
            0 => Constituent::X,
            x if x == ONE => Constituent::Y,
            x if x == Z => Constituent::Z,
            _ => return None,
        });
    }
    let mut wires = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            if !name.wire(p, q).is_zero() {
                wires.push((p, q));
            }
        }
    }
    let cs = CompositeCS::new(cons, &wires).ok()?;
    if name_of(&cs) == *name {
        Some(cs)
    } else {
        None
    }
}

/// `ent_{m+1}` on a three-qubit structure, indices taken modulo 3.
pub fn apply_ent_structure(cs: &CompositeCS, m: usize) -> Result<CompositeCS, EntError> {
    if cs.n() != 3 {
        return Err(EntError::NotThreeQubits);
    }
    if m > 2 {
        return Err(EntError::BadIndex(m));
    }
    let (a, b, c) = (m, (m + 1) % 3, (m + 2) % 3);
    let con = cs.constituents();
    let za = con[a] == Constituent::Z;
    let zb = con[b] == Constituent::Z;
    Ok(match (za, zb) {
        (false, false) => cs.with_toggled_wire(a, b),
        (false, true) if cs.has_wire(b, c) => cs.with_toggled_wire(a, c),
        (true, false) if cs.has_wire(a, c) => cs.with_toggled_wire(b, c),
        (true, true) if cs.has_wire(a, b) => {
            let mut cons = con.to_vec();
            cons[a] = Constituent::X;
            cons[b] = Constituent::X;
            // the pair unwires to 𝒳𝒳 and its wires to the third qubit trade places
            let mut wires = Vec::new();
            if cs.has_wire(a, c) {
                wires.push((b, c));
            }
            if cs.has_wire(b, c) {
                wires.push((a, c));
            }
            CompositeCS::new(cons, &wires).expect("valid")
        }
        _ => cs.clone(),
    })
}

pub fn apply_ent(name: &Name, m: usize) -> Result<Name, EntError> {
    if name.n() != 3 {
        return Err(EntError::NotThreeQubits);
    }
    let cs = structure_of(name).ok_or(EntError::NotAStructureName)?;
    Ok(name_of(&apply_ent_structure(&cs, m)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_one_clique() {
        let vs: Vec<CompositeCS> = ["XX", "YY", "ZZ"].iter().map(|s| CompositeCS::parse(s).unwrap()).collect();
        let g = ComplementarityGraph::from_edges(vs, &[(0, 1), (1, 2), (0, 2)], Mode::Semantic);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn path_has_two_cliques() {
        let vs: Vec<CompositeCS> = ["XX", "YY", "ZZ", "XY"].iter().map(|s| CompositeCS::parse(s).unwrap()).collect();
        let g = ComplementarityGraph::from_edges(vs, &[(0, 1), (1, 2), (2, 3)], Mode::Semantic);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn structure_round_trip() {
        for cs in crate::composites::enumerate_composites(3) {
            assert_eq!(structure_of(&name_of(&cs)), Some(cs));
        }
    }

    #[test]
    fn ent_is_an_involution_off_the_zz_case() {
        for cs in crate::composites::enumerate_composites(3) {
            for m in 0..3 {
                let c = cs.constituents();
                if c[m] == Constituent::Z && c[(m + 1) % 3] == Constituent::Z {
                    continue;
                }
                let once = apply_ent_structure(&cs, m).unwrap();
                assert_eq!(apply_ent_structure(&once, m).unwrap(), cs);
            }
        }
    }
}

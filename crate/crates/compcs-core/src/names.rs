//! Name matrices, the `*` operation and the equivalence closure of CD names.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::composites::{enumerate_composites, is_complementary, CompositeCS};
use crate::constituents::Constituent;

pub const ONE: u8 = 1;
pub const Z: u8 = 2;
pub const I: u8 = 4;
pub const J: u8 = 8;
pub const K: u8 = 16;

const SYMBOLS: [(u8, &str); 5] = [(ONE, "1"), (Z, "Z"), (I, "i"), (J, "j"), (K, "k")];

/// A formal Z₂-sum over `{1, Z, i, j, k}`, one bit per symbol.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NameEntry(pub u8);

impl NameEntry {
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn parse(s: &str) -> Option<NameEntry> {
        let mut v = 0u8;
        for t in s.split('+') {
            let t = t.trim();
            if t == "0" {
                continue;
            }
            let (b, _) = SYMBOLS.iter().find(|(_, n)| *n == t)?;
            v ^= b;
        }
        Some(NameEntry(v))
    }
}

impl fmt::Display for NameEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for (b, n) in SYMBOLS {
            if self.0 & b != 0 {
                if !first {
                    f.write_str("+")?;
                }
                f.write_str(n)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// An `(N+1) × N` grid. Row 0 holds constituents; row `p+1`, column `q` holds the wire `{p, q}`
/// as seen from qubit `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Name {
    n: usize,
    grid: Vec<NameEntry>,
}

/// A name produced by `*`; same shape as [`Name`].
pub type CDName = Name;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NameError(pub String);

impl fmt::Display for NameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Name {
    pub fn zero(n: usize) -> Name {
        Name { n, grid: vec![NameEntry(0); (n + 1) * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> NameEntry {
        self.grid[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: NameEntry) {
        self.grid[r * self.n + c] = e;
    }

    /// Wire entry for qubit `p` looking at qubit `q`.
    pub fn wire(&self, p: usize, q: usize) -> NameEntry {
        self.get(p + 1, q)
    }

    pub fn from_rows(rows: &[Vec<String>]) -> Result<Name, NameError> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if n == 0 || rows.len() != n + 1 || rows.iter().any(|r| r.len() != n) {
            return Err(NameError(String::from("a name must be an (N+1) x N grid")));
        }
        let mut out = Name::zero(n);
        for (r, row) in rows.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                let e = NameEntry::parse(s).ok_or_else(|| NameError(alloc::format!("bad entry {:?}", s)))?;
                out.set(r, c, e);
            }
        }
        Ok(out)
    }

    pub fn to_rows(&self) -> Vec<Vec<String>> {
        (0..=self.n).map(|r| (0..self.n).map(|c| alloc::format!("{}", self.get(r, c))).collect()).collect()
    }

    /// Qubits `p, q` are linked when either wire entry between them is nonzero.
    pub fn linked(&self, p: usize, q: usize) -> bool {
        !self.wire(p, q).is_zero() || !self.wire(q, p).is_zero()
    }

    /// Connected components of the wire pattern, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut block = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < block.len() {
                let p = block[i];
                for q in 0..self.n {
                    if !seen[q] && self.linked(p, q) {
                        seen[q] = true;
                        block.push(q);
                    }
                }
                i += 1;
            }
            block.sort_unstable();
            out.push(block);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.blocks().len() == 1
    }

    /// The sub-name on the listed qubits.
    pub fn restrict(&self, qubits: &[usize]) -> Name {
        let k = qubits.len();
        let mut out = Name::zero(k);
        for (a, &p) in qubits.iter().enumerate() {
            out.set(0, a, self.get(0, p));
            for (b, &q) in qubits.iter().enumerate() {
                out.set(a + 1, b, self.wire(p, q));
            }
        }
        out
    }

    /// Places `sub` on the listed qubits of `self`.
    pub fn embed(&mut self, sub: &Name, qubits: &[usize]) {
        for (a, &p) in qubits.iter().enumerate() {
            self.set(0, p, sub.get(0, a));
            for (b, &q) in qubits.iter().enumerate() {
                self.set(p + 1, q, sub.get(a + 1, b));
            }
        }
    }

    pub fn has_one_plus_z_column(&self) -> bool {
        (0..self.n).any(|c| self.get(0, c).0 == ONE | Z)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for r in 0..=self.n {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for c in 0..self.n {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str(")")?;
        }
        f.write_str(")")
    }
}

fn wire_symbol(row_end: Constituent, col_end: Constituent) -> u8 {
    match (row_end == Constituent::Z, col_end == Constituent::Z) {
        (false, false) => ONE,
        (true, true) => I,
        (true, false) => J,
        (false, true) => K,
    }
}

pub fn name_of(cs: &CompositeCS) -> Name {
    let n = cs.n();
    let c = cs.constituents();
    let mut out = Name::zero(n);
    for (q, con) in c.iter().enumerate() {
        let e = match con {
            Constituent::X => 0,
            Constituent::Y => ONE,
            Constituent::Z => Z,
        };
        out.set(0, q, NameEntry(e));
    }
    for &(p, q) in cs.wires() {
        out.set(p + 1, q, NameEntry(wire_symbol(c[p], c[q])));
        out.set(q + 1, p, NameEntry(wire_symbol(c[q], c[p])));
    }
    out
}

pub fn star(a: &Name, b: &Name) -> Result<CDName, NameError> {
    if a.n != b.n {
        return Err(NameError(String::from("names of different widths")));
    }
    Ok(Name { n: a.n, grid: a.grid.iter().zip(&b.grid).map(|(x, y)| NameEntry(x.0 ^ y.0)).collect() })
}

/// Moves qubit `q` to position `perm[q]`.
pub fn permute(name: &Name, perm: &[usize]) -> Name {
    let n = name.n;
    let mut out = Name::zero(n);
    for q in 0..n {
        out.set(0, perm[q], name.get(0, q));
        for p in 0..n {
            out.set(perm[p] + 1, perm[q], name.get(p + 1, q));
        }
    }
    out
}

fn map_symbols(e: NameEntry, table: &[(u8, u8)]) -> NameEntry {
    let mut out = e.0 & Z;
    for &(from, to) in table {
        if e.0 & from != 0 {
            out |= to;
        }
    }
    NameEntry(out)
}

const HAD_COLUMN: [(u8, u8); 4] = [(ONE, K), (I, J), (J, I), (K, ONE)];
const HAD_ROW: [(u8, u8); 4] = [(ONE, J), (I, K), (J, ONE), (K, I)];

/// Hadamard conjugation of slice `p`. The first-row entry swaps `1 ↔ 1+Z` when `with_first_row`.
pub fn hadamard_slice(name: &Name, p: usize, with_first_row: bool) -> Name {
    let mut out = name.clone();
    for r in 0..name.n {
        if r != p {
            out.set(r + 1, p, map_symbols(name.get(r + 1, p), &HAD_COLUMN));
        }
    }
    for c in 0..name.n {
        if c != p {
            out.set(p + 1, c, map_symbols(name.get(p + 1, c), &HAD_ROW));
        }
    }
    let top = name.get(0, p);
    if with_first_row && top.0 & ONE != 0 {
        out.set(0, p, NameEntry(top.0 ^ Z));
    }
    out
}

/// No wire in column `p` carries a symbol with a `Z` end at `p`.
pub fn z_side_unwired(name: &Name, p: usize) -> bool {
    (0..name.n).filter(|&r| r != p).all(|r| name.wire(r, p).0 & (I | K) == 0)
}

/// `Z ↔ 1+Z` on first-row entry `p`; applied only when `p`'s `Z` side is unwired unless `always`.
pub fn relabel(name: &Name, p: usize, always: bool) -> Name {
    let top = name.get(0, p);
    if top.0 & Z == 0 || !(always || z_side_unwired(name, p)) {
        return name.clone();
    }
    let mut out = name.clone();
    out.set(0, p, NameEntry(top.0 ^ ONE));
    out
}

/// Which moves generate an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Moves {
    pub hadamard_first_row: bool,
    pub relabel: bool,
    pub relabel_always: bool,
}

impl Moves {
    /// Permutations, Hadamard on any slice, and the conditional relabel.
    pub const FULL: Moves = Moves { hadamard_first_row: true, relabel: true, relabel_always: false };
    /// Permutations and Hadamard only.
    pub const NO_RELABEL: Moves = Moves { hadamard_first_row: true, relabel: false, relabel_always: false };
    /// Hadamard with the first row untouched and an unconditional relabel.
    pub const LITERAL: Moves = Moves { hadamard_first_row: false, relabel: true, relabel_always: true };
    /// Hadamard with the first row untouched, no relabel.
    pub const LITERAL_NO_RELABEL: Moves = Moves { hadamard_first_row: false, relabel: false, relabel_always: false };
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..n {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn transpositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(a, b);
            out.push(p);
        }
    }
    out
}

fn neighbours(x: &Name, moves: Moves, ts: &[Vec<usize>]) -> Vec<Name> {
    let mut out = Vec::new();
    for t in ts {
        out.push(permute(x, t));
    }
    for p in 0..x.n {
        out.push(hadamard_slice(x, p, moves.hadamard_first_row));
        if moves.relabel {
            out.push(relabel(x, p, moves.relabel_always));
        }
    }
    out
}

pub fn orbit_with(name: &Name, moves: Moves) -> BTreeSet<Name> {
    let ts = transpositions(name.n);
    let mut seen = BTreeSet::new();
    seen.insert(name.clone());
    let mut stack = vec![name.clone()];
    while let Some(x) = stack.pop() {
        for y in neighbours(&x, moves, &ts) {
            if !seen.contains(&y) {
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    seen
}

pub fn equiv_orbit(name: &CDName) -> BTreeSet<CDName> {
    orbit_with(name, Moves::FULL)
}

/// Every unordered pair of distinct structures, by index into `enumerate_composites`.
pub fn all_pairs(count: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..count).flat_map(move |i| (i + 1..count).map(move |j| (i, j)))
}

/// A representative structure pair for one class of CD names.
#[derive(Clone, Debug)]
pub struct GeneratorCD {
    pub pair: (CompositeCS, CompositeCS),
    pub name: CDName,
    pub class_size: usize,
    pub passes: bool,
    /// Every realised member of the class has a `1+Z` column.
    pub one_plus_z_only: bool,
}

#[derive(Clone, Debug, Default)]
pub struct GeneratorReport {
    pub n: usize,
    /// Entangled generators: one per class of realised, fully wired CD names.
    pub entangled: Vec<GeneratorCD>,
    /// Classes where no realised member avoids a `1+Z` column.
    pub pruned_classes: usize,
    /// Realised members carrying a `1+Z` column, passed over as representatives.
    pub pruned_members: usize,
    /// Realised CD names that are not fully wired.
    pub decomposable_names: usize,
}

impl GeneratorReport {
    pub fn passing(&self) -> usize {
        self.entangled.iter().filter(|g| g.passes).count()
    }
}

/// First structure pair realising each CD name, over all unordered pairs.
pub fn realised_names(structures: &[CompositeCS]) -> BTreeMap<CDName, (usize, usize)> {
    let names: Vec<Name> = structures.iter().map(name_of).collect();
    let mut out = BTreeMap::new();
    for (i, j) in all_pairs(structures.len()) {
        let cd = star(&names[i], &names[j]).expect("same width");
        out.entry(cd).or_insert((i, j));
    }
    out
}

pub fn enumerate_generators_with(n: usize, moves: Moves) -> GeneratorReport {
    let structures = enumerate_composites(n);
    let realised = realised_names(&structures);
    let mut report = GeneratorReport { n, ..Default::default() };
    let mut assigned: BTreeSet<Name> = BTreeSet::new();
    for name in realised.keys() {
        if !name.is_connected() {
            report.decomposable_names += 1;
            continue;
        }
        if assigned.contains(name) {
            continue;
        }
        let orbit = orbit_with(name, moves);
        let members: Vec<&Name> = orbit.iter().filter(|m| realised.contains_key(*m)).collect();
        assigned.extend(orbit.iter().cloned());
        let kept: Vec<&&Name> = members.iter().filter(|m| !m.has_one_plus_z_column()).collect();
        report.pruned_members += members.len() - kept.len();
        let rep = kept.first().map(|m| **m).unwrap_or(members[0]);
        let (i, j) = realised[rep];
        let (a, b) = (structures[i].clone(), structures[j].clone());
        let passes = is_complementary(&a, &b);
        report.pruned_classes += kept.is_empty() as usize;
        report.entangled.push(GeneratorCD {
            pair: (a, b),
            name: rep.clone(),
            class_size: orbit.len(),
            passes,
            one_plus_z_only: kept.is_empty(),
        });
    }
    report
}

pub fn enumerate_generators(n: usize) -> GeneratorReport {
    enumerate_generators_with(n, Moves::NO_RELABEL)
}

/// Passing single-qubit CD names: two different constituents.
fn single_qubit_passes() -> Vec<Name> {
    [ONE, Z, ONE | Z]
        .iter()
        .map(|&e| {
            let mut m = Name::zero(1);
            m.set(0, 0, NameEntry(e));
            m
        })
        .collect()
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let (first, rest) = (items[0], &items[1..]);
    let mut out = Vec::new();
    for part in set_partitions(rest) {
        for i in 0..part.len() {
            let mut p = part.clone();
            p[i].insert(0, first);
            out.push(p);
        }
        let mut p = part.clone();
        p.insert(0, vec![first]);
        out.push(p);
    }
    out
}

/// The membership set: closure of the passing entangled generators, plus names that split
/// into blocks each passing at its own width.
#[derive(Clone, Debug)]
pub struct TestSet {
    pub n: usize,
    pub names: BTreeSet<CDName>,
    pub entangled: BTreeSet<CDName>,
    pub generators: GeneratorReport,
}

impl TestSet {
    pub fn contains(&self, name: &CDName) -> bool {
        self.names.contains(name)
    }
}

/// Entangled closure at width `n` under `moves`, starting from the passing generators.
fn entangled_closure(report: &GeneratorReport, moves: Moves) -> BTreeSet<Name> {
    let mut out = BTreeSet::new();
    for g in report.entangled.iter().filter(|g| g.passes) {
        if !out.contains(&g.name) {
            out.extend(orbit_with(&g.name, moves));
        }
    }
    out
}

pub fn build_test_set_with(n: usize, moves: Moves) -> TestSet {
    // entangled layers for every width up to n
    let mut layers: Vec<BTreeSet<Name>> = vec![BTreeSet::new(), single_qubit_passes().into_iter().collect()];
    let mut report = GeneratorReport::default();
    for k in 2..=n {
        report = enumerate_generators_with(k, Moves { relabel: false, ..moves });
        layers.push(entangled_closure(&report, moves));
    }
    let qubits: Vec<usize> = (0..n).collect();
    let mut names = BTreeSet::new();
    for part in set_partitions(&qubits) {
        if part.len() == 1 {
            continue;
        }
        let mut acc = vec![Name::zero(n)];
        for block in &part {
            let mut next = Vec::new();
            for base in &acc {
                for sub in &layers[block.len()] {
                    let mut m = base.clone();
                    m.embed(sub, block);
                    next.push(m);
                }
            }
            acc = next;
        }
        names.extend(acc);
    }
    let entangled = layers.pop().expect("width n layer");
    names.extend(entangled.iter().cloned());
    TestSet { n, names, entangled, generators: report }
}

pub fn build_test_set(n: usize) -> TestSet {
    build_test_set_with(n, Moves::FULL)
}

pub fn name_test(a: &CompositeCS, b: &CompositeCS, t: &TestSet) -> bool {
    star(&name_of(a), &name_of(b)).map(|cd| t.contains(&cd)).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn nm(rows: &[&[&str]]) -> Name {
        let rows: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        Name::from_rows(&rows).unwrap()
    }

    #[test]
    fn entry_round_trip() {
        for s in ["0", "1", "Z", "1+Z", "i", "1+j", "j+k", "1+i"] {
            assert_eq!(alloc::format!("{}", NameEntry::parse(s).unwrap()), s);
        }
        assert_eq!(NameEntry::parse("j+i"), NameEntry::parse("i+j"));
        assert!(NameEntry::parse("q").is_none());
    }

    #[test]
    fn names_of_examples() {
        let yx = CompositeCS::parse("YX:12").unwrap();
        assert_eq!(name_of(&yx), nm(&[&["1", "0"], &["0", "1"], &["1", "0"]]));
        let zzx = CompositeCS::parse("ZZX:13,23").unwrap();
        assert_eq!(
            name_of(&zzx),
            nm(&[&["Z", "Z", "0"], &["0", "0", "j"], &["0", "0", "j"], &["k", "k", "0"]])
        );
    }

    #[test]
    fn star_examples() {
        let xx = name_of(&CompositeCS::parse("XX").unwrap());
        let yy = name_of(&CompositeCS::parse("YY").unwrap());
        assert_eq!(star(&xx, &yy).unwrap(), nm(&[&["1", "1"], &["0", "0"], &["0", "0"]]));
        let zz = name_of(&CompositeCS::parse("ZZ").unwrap());
        let zx = name_of(&CompositeCS::parse("ZX").unwrap());
        assert_eq!(star(&zz, &zx).unwrap(), nm(&[&["0", "Z"], &["0", "0"], &["0", "0"]]));
        assert_eq!(star(&zz, &zz).unwrap(), Name::zero(2));
    }

    #[test]
    fn hadamard_and_permutation_examples() {
        let a = nm(&[&["1", "1"], &["0", "1"], &["1", "0"]]);
        let h = hadamard_slice(&a, 0, false);
        assert_eq!(h, nm(&[&["1", "1"], &["0", "j"], &["k", "0"]]));
        let h = hadamard_slice(&a, 0, true);
        assert_eq!(h, nm(&[&["1+Z", "1"], &["0", "j"], &["k", "0"]]));
        assert_eq!(hadamard_slice(&hadamard_slice(&h, 0, true), 0, true).get(0, 0), h.get(0, 0));
        let b = nm(&[&["1", "Z"], &["0", "k"], &["j", "0"]]);
        assert_eq!(permute(&b, &[1, 0]), nm(&[&["Z", "1"], &["0", "j"], &["k", "0"]]));
    }

    #[test]
    fn zero_orbit() {
        let o = equiv_orbit(&Name::zero(3));
        assert_eq!(o.len(), 1);
    }
}

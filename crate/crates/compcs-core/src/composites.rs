//! Composite classical structures: constituents joined by connecting wires.

use alloc::vec::Vec;
use core::fmt;

use crate::constituents::{basis_spider, constituent_basis, local_frame, ArityError, Constituent};
use crate::kernel::{cz, ExactScalar, Tensor};

/// Constituents on `N` qubits plus a set of wired qubit pairs (0-based, `p < q`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositeCS {
    constituents: Vec<Constituent>,
    wires: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureError {
    TooFewQubits,
    BadWire(usize, usize),
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::TooFewQubits => f.write_str("a composite structure needs at least two qubits"),
            StructureError::BadWire(p, q) => write!(f, "invalid wire {{{},{}}}", p + 1, q + 1),
        }
    }
}

impl CompositeCS {
    pub fn new(constituents: Vec<Constituent>, wires: &[(usize, usize)]) -> Result<Self, StructureError> {
        let n = constituents.len();
        if n < 2 {
            return Err(StructureError::TooFewQubits);
        }
        let mut ws = Vec::new();
        for &(p, q) in wires {
            let (p, q) = if p < q { (p, q) } else { (q, p) };
            if p == q || q >= n {
                return Err(StructureError::BadWire(p, q));
            }
            if !ws.contains(&(p, q)) {
                ws.push((p, q));
            }
        }
        ws.sort_unstable();
        Ok(CompositeCS { constituents, wires: ws })
    }

    /// Parses a compact label such as `"ZZX:13,23"` (1-based wires).
    pub fn parse(label: &str) -> Option<Self> {
        let (cons, wires) = match label.split_once(':') {
            Some((c, w)) => (c, w),
            None => (label, ""),
        };
        let constituents = cons.chars().map(Constituent::from_symbol).collect::<Option<Vec<_>>>()?;
        let mut ws = Vec::new();
        for w in wires.split(',').filter(|w| !w.is_empty()) {
            let b = w.as_bytes();
            if b.len() != 2 {
                return None;
            }
            let p = (b[0] as char).to_digit(10)? as usize;
            let q = (b[1] as char).to_digit(10)? as usize;
            if p == 0 || q == 0 {
                return None;
            }
            ws.push((p - 1, q - 1));
        }
        CompositeCS::new(constituents, &ws).ok()
    }

    pub fn n(&self) -> usize {
        self.constituents.len()
    }

    pub fn constituents(&self) -> &[Constituent] {
        &self.constituents
    }

    pub fn wires(&self) -> &[(usize, usize)] {
        &self.wires
    }

    pub fn has_wire(&self, p: usize, q: usize) -> bool {
        let key = if p < q { (p, q) } else { (q, p) };
        self.wires.contains(&key)
    }

    pub fn with_toggled_wire(&self, p: usize, q: usize) -> CompositeCS {
        let key = if p < q { (p, q) } else { (q, p) };
        let mut ws = self.wires.clone();
        match ws.iter().position(|w| *w == key) {
            Some(i) => {
                ws.remove(i);
            }
            None => ws.push(key),
        }
        CompositeCS::new(self.constituents.clone(), &ws).expect("toggling keeps the structure valid")
    }
}

impl fmt::Display for CompositeCS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.constituents {
            write!(f, "{}", c)?;
        }
        if !self.wires.is_empty() {
            f.write_str(":")?;
            for (i, (p, q)) in self.wires.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}{}", p + 1, q + 1)?;
            }
        }
        Ok(())
    }
}

/// An orthonormal basis indexed by bitstrings, qubit 1 most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub kets: Vec<Tensor>,
}

impl Basis {
    pub fn n(&self) -> usize {
        self.kets[0].outs()
    }

    pub fn spider(&self, m: usize, n: usize) -> Result<Tensor, ArityError> {
        basis_spider(&self.kets, m, n)
    }

    pub fn is_orthonormal(&self) -> bool {
        for (i, v) in self.kets.iter().enumerate() {
            for (j, w) in self.kets.iter().enumerate() {
                let want = if i == j { ExactScalar::ONE } else { ExactScalar::ZERO };
                if v.inner(w) != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn map(&self, u: &Tensor) -> Basis {
        Basis { kets: self.kets.iter().map(|v| v.then(u)).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntClass {
    SC,
    BS,
    NS,
}

/// Counts of separable, biseparable and non-separable members of a set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntConfig {
    pub n_sc: usize,
    pub n_bs: usize,
    pub n_ns: usize,
}

impl EntConfig {
    pub fn add(&mut self, c: EntClass) {
        match c {
            EntClass::SC => self.n_sc += 1,
            EntClass::BS => self.n_bs += 1,
            EntClass::NS => self.n_ns += 1,
        }
    }

    pub fn triple(&self) -> [usize; 3] {
        [self.n_sc, self.n_bs, self.n_ns]
    }
}

impl fmt::Display for EntConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n_sc, self.n_bs, self.n_ns)
    }
}

fn frames(cs: &[Constituent]) -> Tensor {
    cs.iter().fold(Tensor::identity(0), |acc, c| acc.kron(&local_frame(*c)))
}

/// `(T₁† ⊗ T₂†) · CZ · (T₁ ⊗ T₂)`.
pub fn wire_gadget(c1: Constituent, c2: Constituent) -> Tensor {
    let t = frames(&[c1, c2]);
    t.then(&cz()).then(&t.dagger())
}

/// Product of the wire gadgets over every wired pair.
pub fn leg_network(cs: &CompositeCS) -> Tensor {
    let n = cs.n();
    let c = cs.constituents();
    let mut u = Tensor::identity(n);
    for &(p, q) in cs.wires() {
        u = u.then(&wire_gadget(c[p], c[q]).embed(n, &[p, q]));
    }
    u
}

pub fn product_ket(cs: &[Constituent], bits: usize) -> Tensor {
    let n = cs.len();
    let mut v = Tensor::identity(0);
    for (j, c) in cs.iter().enumerate() {
        let b = bits >> (n - 1 - j) & 1;
        v = v.kron(&constituent_basis(*c)[b]);
    }
    v
}

pub fn underlying_basis(cs: &CompositeCS) -> Basis {
    let l = leg_network(cs);
    let kets = (0..1usize << cs.n()).map(|s| product_ket(cs.constituents(), s).then(&l)).collect();
    Basis { kets }
}

/// Spider with each leg an `N`-qubit register; legs are laid out one register after another.
pub fn composite_spider(cs: &CompositeCS, m: usize, n: usize) -> Result<Tensor, ArityError> {
    underlying_basis(cs).spider(m, n)
}

pub fn entanglement_class(cs: &CompositeCS) -> EntClass {
    if cs.wires().is_empty() {
        return EntClass::SC;
    }
    let n = cs.n();
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(c: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while c[x] != x {
            c[x] = c[c[x]];
            x = c[x];
        }
        x
    }
    for &(p, q) in cs.wires() {
        let (a, b) = (root(&mut comp, p), root(&mut comp, q));
        comp[a] = b;
    }
    let r = root(&mut comp, 0);
    if (1..n).all(|x| root(&mut comp, x) == r) {
        EntClass::NS
    } else {
        EntClass::BS
    }
}

pub fn unbiased(a: &Basis, b: &Basis) -> bool {
    let target = ExactScalar::pow2_inv(a.n() as u32);
    a.kets.iter().all(|v| b.kets.iter().all(|w| v.inner(w).norm_sqr() == target))
}

pub fn is_complementary(a: &CompositeCS, b: &CompositeCS) -> bool {
    a.n() == b.n() && unbiased(&underlying_basis(a), &underlying_basis(b))
}

/// The map sending each `b`-ket to its conjugate expanded in the `a` basis.
pub fn antipode(a: &Basis, b: &Basis) -> Tensor {
    let n = a.n();
    let mut s = Tensor::zeros(n, n);
    for v in &a.kets {
        for w in &b.kets {
            let term = w.dagger().then(v).scale(w.inner(v));
            s = s.add(&term).expect("same shape");
        }
    }
    s
}

/// Complementarity diagram: `a`'s merge after `b`'s copy, with the antipode on one leg.
pub fn cd_matrix_bases(a: &Basis, b: &Basis) -> Tensor {
    let n = a.n();
    let copy = b.spider(1, 2).expect("arity");
    let merge = a.spider(2, 1).expect("arity");
    let mid = Tensor::identity(n).kron(&antipode(a, b));
    copy.then(&mid).then(&merge)
}

pub fn cd_matrix(a: &CompositeCS, b: &CompositeCS) -> Tensor {
    cd_matrix_bases(&underlying_basis(a), &underlying_basis(b))
}

/// Basis of the structure whose legs carry an extra controlled-Z on qubits `p, q`.
pub fn compose_cz_on_legs(cs: &CompositeCS, p: usize, q: usize) -> Basis {
    underlying_basis(cs).map(&cz().embed(cs.n(), &[p, q]))
}

/// `b`'s (2,1) spider after `a`'s (1,2) spider.
pub fn metric_diagram(a: &Basis, b: &Basis) -> Tensor {
    a.spider(1, 2).expect("arity").then(&b.spider(2, 1).expect("arity"))
}

/// All `3^N · 2^(N(N-1)/2)` structures, constituents outermost, wire subsets innermost.
pub fn enumerate_composites(n: usize) -> Vec<CompositeCS> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).collect();
    let mut out = Vec::new();
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut cs = Vec::with_capacity(n);
        let mut x = code;
        for _ in 0..n {
            cs.push(Constituent::ALL[x % 3]);
            x /= 3;
        }
        cs.reverse();
        for mask in 0..1usize << pairs.len() {
            let ws: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, w)| *w).collect();
            out.push(CompositeCS::new(cs.clone(), &ws).expect("valid"));
        }
    }
    out
}

/// Coefficients of a ket as a matrix, rows indexed by the qubits in `subset`.
pub fn bipartition_matrix(ket: &Tensor, subset: &[usize]) -> Tensor {
    let n = ket.outs();
    let mut order: Vec<usize> = subset.to_vec();
    order.extend((0..n).filter(|q| !subset.contains(q)));
    let t = ket.permute_outputs(&order);
    Tensor::from_entries(n - subset.len(), subset.len(), t.entries().to_vec())
}

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::ExactScalar;

/// A dense linear map from `ins` qubits to `outs` qubits.
///
/// Entries are stored row-major with `2^outs` rows and `2^ins` columns. Qubit 1
/// is the most significant bit of an index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor {
    ins: usize,
    outs: usize,
    data: Vec<ExactScalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShapeError {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "shape mismatch: {}->{} qubits vs {}->{} qubits",
            self.left.0, self.left.1, self.right.0, self.right.1
        )
    }
}

impl Tensor {
    pub fn zeros(ins: usize, outs: usize) -> Self {
        Tensor { ins, outs, data: vec![ExactScalar::ZERO; 1 << (ins + outs)] }
    }

    pub fn from_fn(ins: usize, outs: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let cols = 1 << ins;
        let mut data = Vec::with_capacity(1 << (ins + outs));
        for r in 0..1usize << outs {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Tensor { ins, outs, data }
    }

    pub fn from_entries(ins: usize, outs: usize, data: Vec<ExactScalar>) -> Self {
        assert_eq!(data.len(), 1 << (ins + outs), "entry count must be 2^(in+out)");
        Tensor { ins, outs, data }
    }

    pub fn scalar(s: ExactScalar) -> Self {
        Tensor { ins: 0, outs: 0, data: vec![s] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { ExactScalar::ONE } else { ExactScalar::ZERO })
    }

    /// Computational basis ket `|bits⟩` on `n` qubits.
    pub fn basis_ket(n: usize, bits: usize) -> Self {
        Self::from_fn(0, n, |r, _| if r == bits { ExactScalar::ONE } else { ExactScalar::ZERO })
    }

    pub fn ket(entries: &[ExactScalar]) -> Self {
        let n = entries.len().trailing_zeros() as usize;
        Self::from_entries(0, n, entries.to_vec())
    }

    pub fn diagonal(n: usize, f: impl Fn(usize) -> ExactScalar) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { f(r) } else { ExactScalar::ZERO })
    }

    pub fn ins(&self) -> usize {
        self.ins
    }

    pub fn outs(&self) -> usize {
        self.outs
    }

    pub fn rows(&self) -> usize {
        1 << self.outs
    }

    pub fn cols(&self) -> usize {
        1 << self.ins
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> ExactScalar {
        self.data[r * self.cols() + c]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.ins, self.outs)
    }

    pub fn kron(&self, other: &Tensor) -> Tensor {
        let (oc, orows) = (other.cols(), other.rows());
        Tensor::from_fn(self.ins + other.ins, self.outs + other.outs, |r, c| {
            let a = self.get(r / orows, c / oc);
            if a.is_zero() {
                return ExactScalar::ZERO;
            }
            a * other.get(r % orows, c % oc)
        })
    }

    /// `second ∘ first`.
    pub fn compose(second: &Tensor, first: &Tensor) -> Result<Tensor, ShapeError> {
        if first.outs != second.ins {
            return Err(ShapeError { left: second.shape(), right: first.shape() });
        }
        let inner = first.rows();
        let mut out = Tensor::zeros(first.ins, second.outs);
        let cols = first.cols();
        for r in 0..second.rows() {
            for m in 0..inner {
                let a = second.get(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = first.get(m, c);
                    if !b.is_zero() {
                        let e = &mut out.data[r * cols + c];
                        *e = *e + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Composition that panics on a shape mismatch.
    pub fn then(&self, second: &Tensor) -> Tensor {
        match Tensor::compose(second, self) {
            Ok(t) => t,
            Err(e) => panic!("{}", e),
        }
    }

    pub fn dagger(&self) -> Tensor {
        Tensor::from_fn(self.outs, self.ins, |r, c| self.get(c, r).conj())
    }

    pub fn scale(&self, s: ExactScalar) -> Tensor {
        Tensor { ins: self.ins, outs: self.outs, data: self.data.iter().map(|x| *x * s).collect() }
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor, ShapeError> {
        if self.shape() != other.shape() {
            return Err(ShapeError { left: self.shape(), right: other.shape() });
        }
        Ok(Tensor {
            ins: self.ins,
            outs: self.outs,
            data: self.data.iter().zip(&other.data).map(|(a, b)| *a + *b).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    fn pivot(&self) -> Option<usize> {
        self.data.iter().position(|x| !x.is_zero())
    }

    /// True iff `self = s·other` for some nonzero complex `s`, or both are zero.
    pub fn is_proportional(&self, other: &Tensor) -> Result<bool, ShapeError> {
        if self.shape() != other.shape() {
            return Err(ShapeError { left: self.shape(), right: other.shape() });
        }
        let (pa, pb) = (self.pivot(), other.pivot());
        if pa != pb {
            return Ok(false);
        }
        let Some(p) = pa else { return Ok(true) };
        let (a0, b0) = (self.data[p], other.data[p]);
        Ok(self.data.iter().zip(&other.data).all(|(a, b)| *a * b0 == *b * a0))
    }

    /// The scalar `s` with `self = s·other` when it exists in the ring; `1` for two zero tensors.
    pub fn proportional(&self, other: &Tensor) -> Result<Option<ExactScalar>, ShapeError> {
        if !self.is_proportional(other)? {
            return Ok(None);
        }
        match self.pivot() {
            None => Ok(Some(ExactScalar::ONE)),
            Some(p) => Ok(self.data[p].checked_div(&other.data[p])),
        }
    }

    /// Nonzero and of matrix rank one.
    pub fn is_rank_one(&self) -> bool {
        let Some(p) = self.pivot() else { return false };
        let cols = self.cols();
        let (r0, c0) = (p / cols, p % cols);
        let a = self.data[p];
        for r in 0..self.rows() {
            for c in 0..cols {
                if self.get(r, c) * a != self.get(r, c0) * self.get(r0, c) {
                    return false;
                }
            }
        }
        true
    }

    /// `⟨self|other⟩` for two kets of equal width.
    pub fn inner(&self, other: &Tensor) -> ExactScalar {
        assert!(self.ins == 0 && other.ins == 0 && self.outs == other.outs, "inner product needs kets of equal width");
        self.data.iter().zip(&other.data).fold(ExactScalar::ZERO, |acc, (a, b)| acc + a.conj() * *b)
    }

    /// Reorders the output register: output qubit `j` of the result is output qubit `perm[j]` of `self`.
    pub fn permute_outputs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.outs);
        let n = self.outs;
        Tensor::from_fn(self.ins, n, |r, c| {
            let mut src = 0;
            for (j, &pj) in perm.iter().enumerate() {
                if r >> (n - 1 - j) & 1 == 1 {
                    src |= 1 << (n - 1 - pj);
                }
            }
            self.get(src, c)
        })
    }

    /// Reorders the input register: input qubit `j` of the result is input qubit `perm[j]` of `self`.
    pub fn permute_inputs(&self, perm: &[usize]) -> Tensor {
        self.dagger().permute_outputs(perm).dagger()
    }

    /// Embeds a gate acting on `qubits` (in that order) into an `n`-qubit register.
    pub fn embed(&self, n: usize, qubits: &[usize]) -> Tensor {
        assert!(self.ins == self.outs && self.ins == qubits.len());
        let k = qubits.len();
        let extract = |x: usize| {
            let mut v = 0;
            for (j, &q) in qubits.iter().enumerate() {
                if x >> (n - 1 - q) & 1 == 1 {
                    v |= 1 << (k - 1 - j);
                }
            }
            v
        };
        let mask: usize = qubits.iter().map(|&q| 1usize << (n - 1 - q)).sum();
        Tensor::from_fn(n, n, |r, c| {
            if r & !mask != c & !mask {
                ExactScalar::ZERO
            } else {
                self.get(extract(r), extract(c))
            }
        })
    }

    pub fn to_f64(&self) -> Vec<(f64, f64)> {
        self.data.iter().map(|x| x.to_f64()).collect()
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tensor {}->{}", self.ins, self.outs)?;
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                write!(f, " {}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

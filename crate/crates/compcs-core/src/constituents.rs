//! The single-qubit classical structures 𝒳, 𝒴 and 𝒵.

use alloc::vec::Vec;
use core::fmt;

use crate::kernel::{cz, hadamard, phase_gate, ExactScalar, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constituent {
    X,
    Y,
    Z,
}

impl Constituent {
    pub const ALL: [Constituent; 3] = [Constituent::X, Constituent::Y, Constituent::Z];

    pub fn symbol(self) -> char {
        match self {
            Constituent::X => 'X',
            Constituent::Y => 'Y',
            Constituent::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'X' => Some(Constituent::X),
            'Y' => Some(Constituent::Y),
            'Z' => Some(Constituent::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArityError;

impl fmt::Display for ArityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a spider needs at least one leg")
    }
}

/// The two basis kets, with leading coefficient real and positive.
pub fn constituent_basis(c: Constituent) -> [Tensor; 2] {
    let (o, z, h) = (ExactScalar::ONE, ExactScalar::ZERO, ExactScalar::INV_SQRT2);
    match c {
        Constituent::Z => [Tensor::ket(&[o, z]), Tensor::ket(&[z, o])],
        Constituent::X => [Tensor::ket(&[h, h]), Tensor::ket(&[h, -h])],
        Constituent::Y => {
            let ih = ExactScalar::I * h;
            [Tensor::ket(&[h, ih]), Tensor::ket(&[h, -ih])]
        }
    }
}

fn power(v: &Tensor, n: usize) -> Tensor {
    (0..n).fold(Tensor::identity(0), |acc, _| acc.kron(v))
}

/// `Σ_s |v_s⟩^{⊗n} ⟨v_s|^{⊗m}` over a list of kets.
pub fn basis_spider(kets: &[Tensor], m: usize, n: usize) -> Result<Tensor, ArityError> {
    if m + n == 0 {
        return Err(ArityError);
    }
    let mut acc: Option<Tensor> = None;
    for v in kets {
        let term = power(&v.dagger(), m).then(&power(v, n));
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term).expect("spider terms share a shape"),
        });
    }
    Ok(acc.expect("at least one basis ket"))
}

pub fn constituent_spider(c: Constituent, m: usize, n: usize) -> Result<Tensor, ArityError> {
    basis_spider(&constituent_basis(c), m, n)
}

/// Product of controlled-Z over every pair of an `m`-qubit register.
pub fn cz_all_pairs(m: usize) -> Tensor {
    let mut t = Tensor::identity(m);
    for p in 0..m {
        for q in p + 1..m {
            t = t.then(&cz().embed(m, &[p, q]));
        }
    }
    t
}

/// 𝒴 spider assembled from 𝒳 spiders and controlled-Z cascades, with no phases.
pub fn y_spider_via_cz(m: usize, n: usize) -> Result<Tensor, ArityError> {
    if m + n == 0 {
        return Err(ArityError);
    }
    let merge = cz_all_pairs(m).then(&constituent_spider(Constituent::X, m, 1)?);
    let split = constituent_spider(Constituent::X, 1, n)?.then(&cz_all_pairs(n));
    Ok(merge.then(&split))
}

/// The unitary taking the constituent's basis onto the 𝒳 basis.
pub fn local_frame(c: Constituent) -> Tensor {
    match c {
        Constituent::X => Tensor::identity(1),
        Constituent::Z => hadamard(),
        Constituent::Y => phase_gate(3),
    }
}

/// All squared overlaps `|⟨b|b'⟩|²` between two constituents' bases.
pub fn overlaps(a: Constituent, b: Constituent) -> Vec<ExactScalar> {
    let (ba, bb) = (constituent_basis(a), constituent_basis(b));
    let mut out = Vec::new();
    for x in &ba {
        for y in &bb {
            out.push(x.inner(y).norm_sqr());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_identity_and_x_unit() {
        assert_eq!(constituent_spider(Constituent::Z, 1, 1).unwrap(), Tensor::identity(1));
        let unit = constituent_spider(Constituent::X, 0, 1).unwrap();
        assert!(unit.is_proportional(&Tensor::basis_ket(1, 0)).unwrap());
        assert!(constituent_spider(Constituent::Y, 0, 0).is_err());
    }

    #[test]
    fn y_merge_copies() {
        let [y0, _] = constituent_basis(Constituent::Y);
        let s = constituent_spider(Constituent::Y, 2, 1).unwrap();
        assert_eq!(y0.kron(&y0).then(&s), y0);
    }

    #[test]
    fn frames_reach_x_basis() {
        let xb = constituent_basis(Constituent::X);
        for c in Constituent::ALL {
            let t = local_frame(c);
            for (v, x) in constituent_basis(c).iter().zip(&xb) {
                let img = v.then(&t);
                let s = img.proportional(x).unwrap().expect("proportional");
                assert_eq!(s.norm_sqr(), ExactScalar::ONE);
            }
        }
    }

    #[test]
    fn y_via_cz_small() {
        assert_eq!(y_spider_via_cz(1, 1).unwrap(), Tensor::identity(1));
        let t = y_spider_via_cz(3, 1).unwrap();
        assert!(t.is_proportional(&constituent_spider(Constituent::Y, 3, 1).unwrap()).unwrap());
    }
}

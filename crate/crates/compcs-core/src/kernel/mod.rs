//! Exact scalars and dense tensors over qubit registers.

mod scalar;
mod tensor;

pub use scalar::ExactScalar;
pub use tensor::{ShapeError, Tensor};

use alloc::vec;

pub fn hadamard() -> Tensor {
    let h = ExactScalar::INV_SQRT2;
    Tensor::from_entries(1, 1, vec![h, h, h, -h])
}

pub fn pauli_x() -> Tensor {
    let (o, z) = (ExactScalar::ONE, ExactScalar::ZERO);
    Tensor::from_entries(1, 1, vec![z, o, o, z])
}

/// `diag(1, i^q)`.
pub fn phase_gate(q: u8) -> Tensor {
    Tensor::diagonal(1, |r| if r == 0 { ExactScalar::ONE } else { ExactScalar::i_pow(q) })
}

pub fn cz() -> Tensor {
    Tensor::diagonal(2, |r| if r == 3 { -ExactScalar::ONE } else { ExactScalar::ONE })
}

/// Controlled-NOT with qubit 1 as control.
pub fn cnot() -> Tensor {
    Tensor::from_fn(2, 2, |r, c| {
        let t = if c >= 2 { c ^ 1 } else { c };
        if r == t { ExactScalar::ONE } else { ExactScalar::ZERO }
    })
}

pub fn swap() -> Tensor {
    Tensor::from_fn(2, 2, |r, c| {
        let s = ((c & 1) << 1) | (c >> 1);
        if r == s { ExactScalar::ONE } else { ExactScalar::ZERO }
    })
}

pub fn tensor_product(a: &Tensor, b: &Tensor) -> Tensor {
    a.kron(b)
}

pub fn compose(second: &Tensor, first: &Tensor) -> Result<Tensor, ShapeError> {
    Tensor::compose(second, first)
}

pub fn dagger(t: &Tensor) -> Tensor {
    t.dagger()
}

pub fn proportional(a: &Tensor, b: &Tensor) -> Result<Option<ExactScalar>, ShapeError> {
    a.proportional(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnot_from_cz() {
        let ih = Tensor::identity(1).kron(&hadamard());
        assert_eq!(ih.then(&cz()).then(&ih), cnot());
    }

    #[test]
    fn embed_and_permute() {
        let g = cnot().embed(3, &[2, 0]);
        // control qubit 3, target qubit 1: |001> -> |101>
        let v = Tensor::basis_ket(3, 0b001);
        assert_eq!(v.then(&g), Tensor::basis_ket(3, 0b101));
        let p = Tensor::basis_ket(3, 0b100).permute_outputs(&[1, 2, 0]);
        assert_eq!(p, Tensor::basis_ket(3, 0b001));
        assert_eq!(cnot().embed(2, &[1, 0]), swap().then(&cnot()).then(&swap()));
    }
}

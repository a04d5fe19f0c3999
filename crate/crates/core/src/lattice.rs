//! Nondegenerate integral lattices given by a Gram matrix.
//!
//! The Gram matrix is stored as-is; for a resolution lattice that is the
//! (negative definite) intersection form. Orders are always taken in absolute
//! value, so the sign convention never leaks into results.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
    determinant: BigInt,
}

impl Lattice {
    /// Validates that `gram` is square, symmetric and nonsingular.
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Dimension(format!(
                "Gram matrix must be square, got {}x{}",
                gram.rows(),
                gram.cols()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::invalid("gram", "not symmetric"));
        }
        let determinant = gram.determinant()?;
        if determinant.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Lattice { gram, determinant })
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn determinant(&self) -> &BigInt {
        &self.determinant
    }

    /// Λ∨/Λ, the cokernel of the Gram map Λ → Λ∨. Finite because the form is
    /// nondegenerate; its order is |det(gram)|.
    pub fn discriminant_group(&self) -> FiniteAbelianGroup {
        let coker = self
            .gram
            .cokernel()
            .expect("Gram matrix is square by construction");
        debug_assert_eq!(coker.free_rank, 0);
        debug_assert_eq!(coker.torsion.order(), &self.determinant.abs());
        coker.torsion
    }

    pub fn is_unimodular(&self) -> bool {
        let by_det = self.determinant.abs().is_one();
        if cfg!(debug_assertions) {
            let by_group = self.discriminant_group().is_trivial();
            assert_eq!(by_det, by_group, "unimodularity characterizations disagree");
        }
        by_det
    }
}

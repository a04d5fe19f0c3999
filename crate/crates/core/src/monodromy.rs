//! Integral monodromy models on vanishing cohomology and the cokernel of the
//! variation map T − id.
//!
//! Two families are modelled:
//!
//! * simple (ADE) singularities, where T is the Coxeter transformation of the
//!   root lattice, i.e. the product of the simple reflections
//!   sᵢ(x) = x − (x, αᵢ)αᵢ written in the basis of simple roots;
//! * Brieskorn–Pham germs x^a + y^b + z^c, where T is the tensor product of
//!   the companion matrices of 1 + t + ⋯ + t^(m−1) for m = a, b, c.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{ade_graph, AdeKind};
use crate::group::FiniteAbelianGroup;
use crate::linalg::{Cokernel, IntMatrix};

/// Largest Milnor number accepted by [`brieskorn_pham_operator`].
pub const MAX_MILNOR_NUMBER: u64 = 2000;

/// Hypothesis under which |coker(T − id)| = |det(T − id)|.
pub const RATIONAL_INVERTIBILITY: &str = "(T - id) ⊗ Q is an isomorphism";

/// An automorphism of the vanishing lattice ℤ^μ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyOperator {
    matrix: IntMatrix,
}

impl MonodromyOperator {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "monodromy must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let det = matrix.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::invalid(
                "matrix",
                format!("determinant {det} is not ±1, not an automorphism of the lattice"),
            ));
        }
        Ok(MonodromyOperator { matrix })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Milnor number μ, the rank of the vanishing lattice.
    pub fn mu(&self) -> usize {
        self.matrix.rows()
    }

    pub fn variation(&self) -> VariationResult {
        variation(self)
    }
}

/// Positive Cartan matrix of an ADE root system, in the vertex order of
/// [`ade_graph`]. It is the negative of the resolution intersection matrix.
pub fn cartan_matrix(kind: AdeKind, n: u32) -> Result<IntMatrix> {
    Ok(-&ade_graph(kind, n)?.intersection_matrix())
}

/// Coxeter transformation s₁s₂⋯sₙ in the fixed vertex order.
pub fn coxeter_operator(kind: AdeKind, n: u32) -> Result<MonodromyOperator> {
    let order: Vec<usize> = (0..n as usize).collect();
    coxeter_operator_with_order(kind, n, &order)
}

/// Coxeter element s_{order[0]} s_{order[1]} ⋯ for an arbitrary ordering of
/// the simple roots. Every ordering gives a conjugate element.
pub fn coxeter_operator_with_order(
    kind: AdeKind,
    n: u32,
    order: &[usize],
) -> Result<MonodromyOperator> {
    let cartan = cartan_matrix(kind, n)?;
    let rank = cartan.rows();
    let mut seen = vec![false; rank];
    if order.len() != rank {
        return Err(Error::invalid(
            "order",
            format!(
                "expected a permutation of {rank} roots, got {} entries",
                order.len()
            ),
        ));
    }
    for &i in order {
        if i >= rank || std::mem::replace(&mut seen[i], true) {
            return Err(Error::invalid(
                "order",
                format!("{order:?} is not a permutation"),
            ));
        }
    }
    let mut t = IntMatrix::identity(rank);
    for &i in order {
        t = &t * &simple_reflection(&cartan, i);
    }
    MonodromyOperator::new(t)
}

/// Matrix of sᵢ in root coordinates: row i becomes eᵢ − (row i of the Cartan
/// matrix), every other row is the identity.
fn simple_reflection(cartan: &IntMatrix, i: usize) -> IntMatrix {
    let mut s = IntMatrix::identity(cartan.rows());
    for j in 0..cartan.cols() {
        s[(i, j)] -= &cartan[(i, j)];
    }
    s
}

/// Companion matrix of 1 + t + ⋯ + t^(m−1), size (m − 1).
pub fn geometric_companion(m: u64) -> Result<IntMatrix> {
    if m < 2 {
        return Err(Error::invalid(
            "m",
            format!("exponent must be at least 2, got {m}"),
        ));
    }
    let size = (m - 1) as usize;
    let mut c = IntMatrix::zeros(size, size);
    for i in 1..size {
        c[(i, i - 1)] = BigInt::one();
    }
    for i in 0..size {
        c[(i, size - 1)] = BigInt::from(-1);
    }
    Ok(c)
}

/// Monodromy of x^a + y^b + z^c on ℤ^((a−1)(b−1)(c−1)).
pub fn brieskorn_pham_operator(a: u64, b: u64, c: u64) -> Result<MonodromyOperator> {
    for (field, x) in [("a", a), ("b", b), ("c", c)] {
        if x < 2 {
            return Err(Error::invalid(
                field,
                format!("exponent must be at least 2, got {x}"),
            ));
        }
    }
    let mu = (a - 1)
        .checked_mul(b - 1)
        .and_then(|x| x.checked_mul(c - 1))
        .filter(|&mu| mu <= MAX_MILNOR_NUMBER);
    if mu.is_none() {
        return Err(Error::invalid(
            "c",
            format!("Milnor number (a-1)(b-1)(c-1) exceeds {MAX_MILNOR_NUMBER}"),
        ));
    }
    let t = geometric_companion(a)?
        .kronecker(&geometric_companion(b)?)
        .kronecker(&geometric_companion(c)?);
    MonodromyOperator::new(t)
}

/// Kernel and cokernel of T − id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariationResult {
    pub kernel_rank: usize,
    pub cokernel_torsion: FiniteAbelianGroup,
    pub cokernel_free_rank: usize,
    /// det(T − id), computed by elimination independently of the Smith form.
    pub det_t_minus_id: BigInt,
}

impl VariationResult {
    /// |det(T − id)| as the order of the cokernel, refused when T − id is
    /// singular over ℚ.
    pub fn determinant_order(&self) -> Result<BigInt> {
        if self.kernel_rank > 0 {
            return Err(Error::HypothesisFailed {
                hypothesis: RATIONAL_INVERTIBILITY,
                kernel_rank: self.kernel_rank,
            });
        }
        Ok(self.det_t_minus_id.abs())
    }
}

pub fn variation(t: &MonodromyOperator) -> VariationResult {
    let shifted = t.matrix() - &IntMatrix::identity(t.mu());
    let Cokernel { torsion, free_rank } =
        Cokernel::from_smith_diagonal(&shifted.invariant_factors());
    let det = shifted.determinant().expect("T - id is square");
    // A square map has equal rational kernel and cokernel rank.
    let kernel_rank = free_rank;
    debug_assert!(det.is_zero() == (kernel_rank > 0));
    debug_assert!(det.is_zero() || &det.abs() == torsion.order());
    VariationResult {
        kernel_rank,
        cokernel_torsion: torsion,
        cokernel_free_rank: free_rank,
        det_t_minus_id: det,
    }
}

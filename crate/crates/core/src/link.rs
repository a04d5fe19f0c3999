//! Homology of singularity links: lens spaces, plumbed boundaries and the
//! closed-form Brieskorn count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::ResolutionGraph;
use crate::group::FiniteAbelianGroup;

/// H₁ of a closed oriented 3-manifold together with the torsion of H².
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkHomology {
    pub h1_free_rank: usize,
    pub h1_torsion: FiniteAbelianGroup,
    pub h2_torsion: FiniteAbelianGroup,
}

impl LinkHomology {
    /// By universal coefficients H²(L)_tors ≅ Ext(H₁(L), ℤ) ≅ H₁(L)_tors.
    fn from_h1(h1_free_rank: usize, h1_torsion: FiniteAbelianGroup) -> Self {
        LinkHomology {
            h1_free_rank,
            h2_torsion: h1_torsion.clone(),
            h1_torsion,
        }
    }

    /// b₁(L) = 0.
    pub fn is_rational_homology_sphere(&self) -> bool {
        self.h1_free_rank == 0
    }
}

/// Boundary of the plumbing on a negative definite graph:
/// H₁ = coker(M) ⊕ ℤ^(2Σg + b₁(Γ)).
pub fn link_from_plumbing(graph: &ResolutionGraph) -> Result<LinkHomology> {
    let m = graph.intersection_matrix();
    if !m.is_negative_definite()? {
        return Err(Error::NotResolutionGraph(
            "intersection matrix is not negative definite".into(),
        ));
    }
    let coker = m.cokernel()?;
    debug_assert_eq!(coker.free_rank, 0);
    let free_rank = 2 * graph.total_genus() as usize + graph.cycle_rank();
    Ok(LinkHomology::from_h1(free_rank, coker.torsion))
}

/// Lens space L(n, q): H₁ = ℤ/n. `q` only enters through the coprimality check.
pub fn lens_space_h1(n: u64, q: u64) -> Result<LinkHomology> {
    if n == 0 {
        return Err(Error::invalid("n", "n must be at least 1"));
    }
    if q >= n {
        return Err(Error::invalid(
            "q",
            format!("q must satisfy 0 ≤ q < {n}, got {q}"),
        ));
    }
    if n.gcd(&q) != 1 {
        return Err(Error::invalid("q", format!("gcd({n}, {q}) ≠ 1")));
    }
    Ok(LinkHomology::from_h1(0, FiniteAbelianGroup::cyclic(n)?))
}

/// |ab + ac + bc − abc| for pairwise coprime exponents ≥ 2, the Seifert count
/// used for the order of H₁ of the Brieskorn link Σ(a, b, c). Order only: no
/// group structure is claimed.
pub fn brieskorn_h1_order(a: u64, b: u64, c: u64) -> Result<BigInt> {
    for (field, x) in [("a", a), ("b", b), ("c", c)] {
        if x < 2 {
            return Err(Error::invalid(
                field,
                format!("exponent must be at least 2, got {x}"),
            ));
        }
    }
    for (field, x, y) in [("b", a, b), ("c", a, c), ("c", b, c)] {
        if x.gcd(&y) != 1 {
            return Err(Error::invalid(
                field,
                format!("exponents must be pairwise coprime, gcd({x}, {y}) ≠ 1"),
            ));
        }
    }
    let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
    let value = &a * &b + &a * &c + &b * &c - &a * &b * &c;
    Ok(value.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ade_graph, hirzebruch_jung, AdeKind, Vertex};

    fn cyclic(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n).unwrap()
    }

    #[test]
    fn plumbing_examples() {
        for k in 1..=6 {
            let l = link_from_plumbing(&ade_graph(AdeKind::A, k).unwrap()).unwrap();
            assert_eq!(l.h1_torsion, cyclic(u64::from(k) + 1));
            assert_eq!(l.h1_free_rank, 0);
        }
        let (_, g) = hirzebruch_jung(5, 2).unwrap();
        let l = link_from_plumbing(&g).unwrap();
        assert_eq!(l.h1_torsion, cyclic(5));
        assert!(l.is_rational_homology_sphere());
    }

    #[test]
    fn genus_one_vertex() {
        let g = ResolutionGraph::new(
            vec![Vertex {
                self_intersection: -1,
                genus: 1,
            }],
            vec![],
        )
        .unwrap();
        let l = link_from_plumbing(&g).unwrap();
        assert_eq!(l.h1_free_rank, 2);
        assert!(l.h1_torsion.is_trivial());
        assert!(!l.is_rational_homology_sphere());
    }

    #[test]
    fn cycle_in_graph_raises_b1() {
        // triangle of -3 curves
        let g = ResolutionGraph::new(vec![Vertex::rational(-3); 3], vec![(0, 1), (1, 2), (2, 0)])
            .unwrap();
        let l = link_from_plumbing(&g).unwrap();
        assert_eq!(l.h1_free_rank, 1);
        // det [[-3,1,1],[1,-3,1],[1,1,-3]] = -16; coker is Z/4 + Z/4
        assert_eq!(l.h1_torsion.order(), &BigInt::from(16));
    }

    #[test]
    fn plumbing_requires_negative_definite() {
        let g = ResolutionGraph::chain(&[-1, -1]).unwrap();
        assert!(matches!(
            link_from_plumbing(&g),
            Err(Error::NotResolutionGraph(_))
        ));
    }

    #[test]
    fn lens_spaces() {
        assert_eq!(lens_space_h1(4, 1).unwrap().h1_torsion, cyclic(4));
        assert_eq!(lens_space_h1(5, 2).unwrap().h1_torsion, cyclic(5));
        assert!(lens_space_h1(1, 0).unwrap().h1_torsion.is_trivial());
        assert!(lens_space_h1(6, 3).is_err());
        assert!(lens_space_h1(5, 7).is_err());
        assert!(lens_space_h1(0, 0).is_err());
    }

    #[test]
    fn brieskorn_orders() {
        assert_eq!(brieskorn_h1_order(2, 3, 7).unwrap(), BigInt::from(1));
        assert_eq!(brieskorn_h1_order(2, 3, 11).unwrap(), BigInt::from(5));
        assert_eq!(brieskorn_h1_order(2, 3, 5).unwrap(), BigInt::from(1));
        let err = brieskorn_h1_order(2, 3, 9).unwrap_err();
        assert!(matches!(err, Error::Invalid { ref field, .. } if field == "c"));
        assert!(brieskorn_h1_order(1, 3, 5).is_err());
    }
}

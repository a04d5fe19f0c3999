use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::decimal::Decimal;
use crate::error::{Error, Result};

/// A finite abelian group ℤ/f₁ ⊕ ⋯ ⊕ ℤ/f_k in invariant-factor form:
/// every fᵢ ≥ 2 and fᵢ | fᵢ₊₁. The trivial group has no factors.
///
/// Two groups are isomorphic exactly when their factor lists are equal, so
/// `==` is group isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupData", into = "GroupData")]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    order: BigInt,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            invariant_factors: Vec::new(),
            order: BigInt::one(),
        }
    }

    /// ℤ/n. `n` must be positive; ℤ/1 is the trivial group.
    pub fn cyclic(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if !n.is_positive() {
            return Err(Error::invalid(
                "order",
                format!("cyclic order {n} is not positive"),
            ));
        }
        Ok(FiniteAbelianGroup::from_diagonal(vec![n]))
    }

    /// Validating constructor for an already-normalized factor list.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Result<Self> {
        if let Some(f) = factors.iter().find(|f| *f < &BigInt::from(2)) {
            return Err(Error::invalid(
                "invariant_factors",
                format!("factor {f} is smaller than 2"),
            ));
        }
        if let Some(w) = factors.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::invalid(
                "invariant_factors",
                format!("{} does not divide {}", w[0], w[1]),
            ));
        }
        let order = factors.iter().product();
        Ok(FiniteAbelianGroup {
            invariant_factors: factors,
            order,
        })
    }

    /// Builds the group from the nonzero diagonal of a Smith normal form
    /// (already a divisibility chain). Unit entries are dropped.
    pub(crate) fn from_diagonal(diagonal: Vec<BigInt>) -> Self {
        let invariant_factors: Vec<BigInt> = diagonal.into_iter().filter(|d| !d.is_one()).collect();
        debug_assert!(invariant_factors.iter().all(|f| f > &BigInt::one()));
        debug_assert!(invariant_factors
            .windows(2)
            .all(|w| w[1].is_multiple_of(&w[0])));
        let order = invariant_factors.iter().product();
        FiniteAbelianGroup {
            invariant_factors,
            order,
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

/// Renders as `Z/2 + Z/2`; the trivial group is `0`.
impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{d}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GroupData {
    invariant_factors: Vec<Decimal>,
    order: Decimal,
}

impl TryFrom<GroupData> for FiniteAbelianGroup {
    type Error = Error;

    fn try_from(data: GroupData) -> Result<Self> {
        let group = FiniteAbelianGroup::from_invariant_factors(
            data.invariant_factors.into_iter().map(|d| d.0).collect(),
        )?;
        if group.order != data.order.0 {
            return Err(Error::invalid(
                "order",
                format!(
                    "{} is not the product of the invariant factors",
                    data.order.0
                ),
            ));
        }
        Ok(group)
    }
}

impl From<FiniteAbelianGroup> for GroupData {
    fn from(g: FiniteAbelianGroup) -> Self {
        GroupData {
            invariant_factors: g.invariant_factors.into_iter().map(Decimal).collect(),
            order: Decimal(g.order),
        }
    }
}

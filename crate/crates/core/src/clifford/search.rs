use serde::{Deserialize, Serialize};

use super::canonical::{canonicalize, CanonicalForm, IndexSubset};
use super::expr::GammaExpr;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Commute,
    Anticommute,
    Neither,
}

/// Required relation between a candidate and the generator `γ^index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommutationConstraint {
    pub index: u8,
    pub relation: Relation,
}

impl CommutationConstraint {
    pub fn commute(index: u8) -> Self {
        CommutationConstraint {
            index,
            relation: Relation::Commute,
        }
    }

    pub fn anticommute(index: u8) -> Self {
        CommutationConstraint {
            index,
            relation: Relation::Anticommute,
        }
    }
}

/// Classifies two canonical forms by whether `ab ∓ ba` vanishes.
///
/// When both vanish (one side is zero) the pair is reported as commuting.
pub fn relation_forms<T: Scalar>(a: &CanonicalForm<T>, b: &CanonicalForm<T>) -> Relation {
    let ab = a * b;
    let ba = b * a;
    if (&ab - &ba).is_zero() {
        Relation::Commute
    } else if (&ab + &ba).is_zero() {
        Relation::Anticommute
    } else {
        Relation::Neither
    }
}

pub fn relation<T: Scalar>(a: &GammaExpr<T>, b: &GammaExpr<T>) -> Relation {
    relation_forms(&canonicalize(a), &canonicalize(b))
}

pub fn satisfies<T: Scalar>(
    candidate: &CanonicalForm<T>,
    constraints: &[CommutationConstraint],
) -> bool {
    constraints.iter().all(|c| {
        let g = CanonicalForm::basis(IndexSubset::from_indices(&[c.index]));
        relation_forms(candidate, &g) == c.relation
    })
}

/// Every basis monomial meeting all constraints, in basis order.
///
/// Phases are not attached; callers scale the monomials themselves.
pub fn monomial_search(constraints: &[CommutationConstraint]) -> Vec<IndexSubset> {
    IndexSubset::all()
        .into_iter()
        .filter(|s| satisfies(&CanonicalForm::<Rational>::basis(*s), constraints))
        .collect()
}

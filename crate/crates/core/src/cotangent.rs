//! Graded dimensions of the first cotangent cohomology T¹ of a semigroup ring.
//!
//! In degree `ℓ ∉ End(N)` the dimension is `#A_ℓ − dim V_ℓ − 1`, where
//! `A_ℓ` collects the generators with `n_i + ℓ ∉ N` and `V_ℓ` is spanned by the
//! lattice vectors of the minimal relations with `d_i + ℓ ∉ N`. Degrees in
//! End(N) contribute nothing.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::semigroup::NumericalSemigroup;
use crate::toric::{minimal_relations, BinomialRelation};

/// `#A_ℓ` and `dim V_ℓ` for one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeDiagnostics {
    pub a_count: usize,
    pub v_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedT1Table {
    /// Nonzero dimensions only.
    pub by_degree: BTreeMap<i64, usize>,
    pub t1_plus: usize,
    pub t1_minus: usize,
    /// Entries for the stored degrees.
    pub diagnostics: BTreeMap<i64, DegreeDiagnostics>,
}

/// Zero-based indices `i` with `n_i + ℓ ∉ N`.
pub fn a_set(s: &NumericalSemigroup, ell: i64) -> Vec<usize> {
    s.min_gens()
        .iter()
        .enumerate()
        .filter(|&(_, &n)| !s.contains(n as i64 + ell))
        .map(|(i, _)| i)
        .collect()
}

pub fn v_dim(s: &NumericalSemigroup, relations: &[BinomialRelation], ell: i64) -> usize {
    let rows: Vec<Vec<i64>> = relations
        .iter()
        .filter(|rel| !s.contains(rel.degree + ell))
        .map(|rel| rel.lattice_vector.clone())
        .collect();
    integer_rank(&rows)
}

fn degree_entry(
    s: &NumericalSemigroup,
    relations: &[BinomialRelation],
    ell: i64,
) -> Result<(usize, DegreeDiagnostics)> {
    let diag = DegreeDiagnostics {
        a_count: a_set(s, ell).len(),
        v_dim: v_dim(s, relations, ell),
    };
    if s.in_end_set(ell) {
        return Ok((0, diag));
    }
    let dim = diag.a_count as i64 - diag.v_dim as i64 - 1;
    if dim < 0 {
        return Err(Error::FormulaInconsistency {
            degree: ell,
            a_count: diag.a_count,
            v_dim: diag.v_dim,
        });
    }
    Ok((dim as usize, diag))
}

/// `dim T¹(k[N])_ℓ`; `relations` must be a minimal presentation of `s`.
pub fn t1_dim(s: &NumericalSemigroup, relations: &[BinomialRelation], ell: i64) -> Result<usize> {
    degree_entry(s, relations, ell).map(|(dim, _)| dim)
}

/// Degrees that can carry a nonzero T¹: `[−max d_i, −1]` and the gaps outside End(N).
pub fn candidate_degrees(s: &NumericalSemigroup, relations: &[BinomialRelation]) -> Vec<i64> {
    let max_degree = relations.iter().map(|r| r.degree).max().unwrap_or(0);
    (-max_degree..0)
        .chain(
            s.gaps()
                .iter()
                .map(|&l| l as i64)
                .filter(|&l| !s.in_end_set(l)),
        )
        .collect()
}

pub fn t1_table(s: &NumericalSemigroup) -> Result<GradedT1Table> {
    if s.genus() < 1 {
        return Err(Error::GenusTooSmall {
            genus: s.genus(),
            required: 1,
        });
    }
    let relations = minimal_relations(s)?;
    t1_table_with(s, &relations)
}

pub fn t1_table_with(
    s: &NumericalSemigroup,
    relations: &[BinomialRelation],
) -> Result<GradedT1Table> {
    let mut table = GradedT1Table {
        by_degree: BTreeMap::new(),
        t1_plus: 0,
        t1_minus: 0,
        diagnostics: BTreeMap::new(),
    };
    for ell in candidate_degrees(s, relations) {
        let (dim, diag) = degree_entry(s, relations, ell)?;
        if dim == 0 {
            continue;
        }
        table.by_degree.insert(ell, dim);
        table.diagnostics.insert(ell, diag);
        if ell > 0 {
            table.t1_plus += dim;
        } else {
            table.t1_minus += dim;
        }
    }
    Ok(table)
}

/// True when T¹ has no positive graded part.
pub fn is_negatively_graded(s: &NumericalSemigroup) -> Result<bool> {
    Ok(t1_table(s)?.t1_plus == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn a_sets() {
        let s = sg(&[6, 7, 8]);
        assert_eq!(a_set(&s, 3), vec![0, 1, 2]);
        assert_eq!(a_set(&s, 2), vec![1, 2]);
        assert!(a_set(&s, 0).is_empty());
        assert!(a_set(&sg(&[4, 6, 11, 13]), 0).is_empty());
    }

    #[test]
    fn v_dims() {
        let s = sg(&[6, 7, 8]);
        let rels = minimal_relations(&s).unwrap();
        assert_eq!(v_dim(&s, &rels, 3), 1);
        assert_eq!(v_dim(&s, &rels, 100), 0);
        assert_eq!(v_dim(&s, &rels, -100), 2);
    }

    #[test]
    fn t1_dims() {
        let s = sg(&[6, 7, 8]);
        let rels = minimal_relations(&s).unwrap();
        assert_eq!(t1_dim(&s, &rels, 3).unwrap(), 1);
        assert_eq!(t1_dim(&s, &rels, 17).unwrap(), 0);
        assert_eq!(t1_dim(&s, &rels, 0).unwrap(), 0);
    }

    #[test]
    fn tables() {
        let t = t1_table(&sg(&[6, 7, 8])).unwrap();
        assert_eq!(t.t1_plus, 3);
        let positive: Vec<_> = t.by_degree.range(1..).map(|(&l, &d)| (l, d)).collect();
        assert_eq!(positive, vec![(2, 1), (3, 1), (4, 1)]);
        assert_eq!(t1_table(&sg(&[3, 7, 11])).unwrap().t1_plus, 1);
        assert_eq!(t1_table(&sg(&[4, 6, 11, 13])).unwrap().t1_plus, 2);
        assert!(matches!(t1_table(&sg(&[1])), Err(Error::GenusTooSmall { .. })));
    }

    #[test]
    fn negative_grading() {
        assert!(is_negatively_graded(&sg(&[6, 7, 8, 9, 10])).unwrap());
        assert!(!is_negatively_graded(&sg(&[3, 7, 11])).unwrap());
        assert!(is_negatively_graded(&sg(&[2, 3])).unwrap());
    }

    #[test]
    fn zero_below_truncation() {
        for gens in [&[6u64, 7, 8][..], &[3, 7, 11], &[4, 6, 11, 13], &[2, 3]] {
            let s = sg(gens);
            let rels = minimal_relations(&s).unwrap();
            let max_d = rels.iter().map(|r| r.degree).max().unwrap();
            assert_eq!(t1_dim(&s, &rels, -max_d - 1).unwrap(), 0);
            for n in s.members_up_to(2 * s.frobenius() + 2) {
                assert_eq!(t1_dim(&s, &rels, n).unwrap(), 0);
            }
        }
    }
}

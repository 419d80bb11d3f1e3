//! Exhaustive enumeration of numerical semigroups by genus, and the table of
//! non-negatively graded semigroups of small genus.
//!
//! Enumeration walks the semigroup tree: the root is ℕ and the children of `S`
//! are `S ∖ {m}` for the minimal generators `m > F(S)`. Each semigroup of genus
//! `g` sits exactly once at depth `g`.

use crate::bounds::bounds_report;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_MAX_GENUS: usize = 20;

/// Depth-first iterator over the semigroups of one genus.
pub struct SemigroupsOfGenus {
    target: usize,
    stack: Vec<NumericalSemigroup>,
}

impl Iterator for SemigroupsOfGenus {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        while let Some(s) = self.stack.pop() {
            if s.genus() == self.target {
                return Some(s);
            }
            let frobenius = s.frobenius();
            // Push in reverse so that children come out in increasing generator order.
            for &m in s.min_gens().iter().rev() {
                if m as i64 > frobenius {
                    self.stack.push(s.remove_generator(m).expect("m is a minimal generator"));
                }
            }
        }
        None
    }
}

/// Every numerical semigroup of genus `g`, each exactly once.
pub fn semigroups_of_genus(g: usize) -> Result<SemigroupsOfGenus> {
    semigroups_of_genus_with_limit(g, DEFAULT_MAX_GENUS)
}

pub fn semigroups_of_genus_with_limit(g: usize, limit: usize) -> Result<SemigroupsOfGenus> {
    if g > limit {
        return Err(Error::GenusLimitExceeded {
            requested: g,
            limit,
        });
    }
    Ok(SemigroupsOfGenus {
        target: g,
        stack: vec![NumericalSemigroup::from_generators(&[1]).expect("ℕ")],
    })
}

/// The semigroups of genus `g`, sorted by gap list.
pub fn sorted_semigroups_of_genus(g: usize, limit: usize) -> Result<Vec<NumericalSemigroup>> {
    let mut all: Vec<_> = semigroups_of_genus_with_limit(g, limit)?.collect();
    all.sort_by(|a, b| a.gaps().cmp(b.gaps()));
    Ok(all)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub gaps: Vec<u64>,
    pub generators: Vec<u64>,
    pub new_lower: i64,
    pub rv_upper: i64,
    pub t1_plus: i64,
}

/// All semigroups of genus 2 to 6 with a positive part in T¹, by genus then gaps.
pub fn table1_report() -> Result<Vec<Table1Row>> {
    let mut rows = Vec::new();
    for g in 2..=6 {
        for s in sorted_semigroups_of_genus(g, DEFAULT_MAX_GENUS)? {
            let report = bounds_report(&s)?;
            if report.t1_plus > 0 {
                rows.push(Table1Row {
                    gaps: s.gaps().to_vec(),
                    generators: s.min_gens().to_vec(),
                    new_lower: report.new_lower,
                    rv_upper: report.rv_upper,
                    t1_plus: report.t1_plus,
                });
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_zero_is_the_naturals() {
        let all: Vec<_> = semigroups_of_genus(0).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].min_gens(), &[1]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|g| semigroups_of_genus(g).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 2, 4, 7, 12, 23]);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(
            semigroups_of_genus(21),
            Err(Error::GenusLimitExceeded {
                requested: 21,
                limit: 20
            })
        ));
        assert!(semigroups_of_genus_with_limit(3, 2).is_err());
    }

    #[test]
    fn table_rows() {
        let rows = table1_report().unwrap();
        assert_eq!(rows.len(), 15);
        let row = rows.iter().find(|r| r.gaps == [1, 2, 4, 5, 8]).unwrap();
        assert_eq!((row.new_lower, row.rv_upper, row.t1_plus), (9, 10, 1));
        let row = rows.iter().find(|r| r.gaps == [1, 2, 3, 4, 8, 9]).unwrap();
        assert_eq!((row.new_lower, row.rv_upper, row.t1_plus), (10, 12, 2));
    }
}

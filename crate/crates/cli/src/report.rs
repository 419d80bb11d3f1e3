//! Serializable views of the library results.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use wsp_core::bounds::bounds_report;
use wsp_core::cotangent::t1_table;
use wsp_core::families::{FamilySpec, FamilyVerification};
use wsp_core::{NumericalSemigroup, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct T1Json {
    pub plus: usize,
    pub minus: usize,
    pub by_degree: BTreeMap<i64, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub pflueger_lower: i64,
    pub rv_upper: i64,
    pub new_lower: i64,
    pub smoothing_dim: i64,
    pub exact_moduli_dim: Option<i64>,
}

/// One semigroup with its invariants. `t1`, `bounds` and `negatively_graded`
/// are null below genus 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub generators: Vec<u64>,
    pub gaps: Vec<u64>,
    pub genus: usize,
    pub frobenius: i64,
    pub symmetric: Option<bool>,
    pub lambda: Option<usize>,
    pub ewt: Option<usize>,
    pub wt: Option<u64>,
    pub t1: Option<T1Json>,
    pub bounds: Option<BoundsJson>,
    pub negatively_graded: Option<bool>,
}

impl SemigroupReport {
    pub fn new(s: &NumericalSemigroup) -> Result<Self> {
        let positive_genus = s.genus() >= 1;
        let mut report = Self {
            generators: s.min_gens().to_vec(),
            gaps: s.gaps().to_vec(),
            genus: s.genus(),
            frobenius: s.frobenius(),
            symmetric: positive_genus.then(|| s.is_symmetric()).transpose()?,
            lambda: positive_genus.then(|| s.lambda()).transpose()?,
            ewt: positive_genus.then(|| s.ewt()).transpose()?,
            wt: positive_genus.then(|| s.wt()).transpose()?,
            t1: None,
            bounds: None,
            negatively_graded: None,
        };
        if s.genus() >= 2 {
            let table = t1_table(s)?;
            let b = bounds_report(s)?;
            report.t1 = Some(T1Json {
                plus: table.t1_plus,
                minus: table.t1_minus,
                by_degree: table.by_degree,
            });
            report.bounds = Some(BoundsJson {
                pflueger_lower: b.pflueger_lower,
                rv_upper: b.rv_upper,
                new_lower: b.new_lower,
                smoothing_dim: b.smoothing_dim,
                exact_moduli_dim: b.exact_moduli_dim,
            });
            report.negatively_graded = Some(b.negatively_graded);
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertionJson {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub family_id: u32,
    pub tau: u32,
    pub generators: Vec<u64>,
    pub genus: i64,
    pub frobenius: i64,
    pub t1_minus: i64,
    pub t1_plus: i64,
    pub moduli_dim: i64,
    pub cone_dim: Option<i64>,
    pub assertions: Option<Vec<AssertionJson>>,
}

impl FamilyJson {
    pub fn new(spec: &FamilySpec, verification: Option<&FamilyVerification>) -> Self {
        Self {
            family_id: spec.family_id,
            tau: spec.tau,
            generators: spec.semigroup.min_gens().to_vec(),
            genus: spec.closed_genus,
            frobenius: spec.closed_frobenius,
            t1_minus: spec.closed_t1_minus,
            t1_plus: spec.closed_t1_plus(),
            moduli_dim: spec.closed_moduli_dim,
            cone_dim: spec.closed_cone_dim,
            assertions: verification.map(|v| {
                v.assertions
                    .iter()
                    .map(|a| AssertionJson {
                        name: a.name.to_string(),
                        expected: a.expected.clone(),
                        actual: a.actual.clone(),
                        passed: a.passed(),
                    })
                    .collect()
            }),
        }
    }
}

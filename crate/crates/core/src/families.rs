//! The two τ-families of symmetric semigroups of multiplicity six and their
//! closed-form invariants, cross-checked against the general algorithms.

use std::fmt;

use crate::cotangent::t1_table_with;
use crate::error::{Error, Result};
use crate::polyrig::family::{check_family, family_initial_forms};
use crate::semigroup::NumericalSemigroup;
use crate::toric::minimal_relations;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family_id: u32,
    pub tau: u32,
    pub semigroup: NumericalSemigroup,
    pub closed_genus: i64,
    pub closed_frobenius: i64,
    pub closed_t1_minus: i64,
    pub closed_moduli_dim: i64,
    pub closed_cone_dim: Option<i64>,
}

impl FamilySpec {
    /// `4τ − 2` or `4τ − 4`: what T^{1,+} must be for the moduli dimension
    /// to equal `2g − 1 − dim T^{1,+}`.
    pub fn closed_t1_plus(&self) -> i64 {
        2 * self.closed_genus - 1 - self.closed_moduli_dim
    }

    /// Offsets `j` of the four non-multiplicity generators `j + 6τ`.
    pub fn offsets(&self) -> [u64; 4] {
        if self.family_id == 1 {
            [3, 4, 7, 8]
        } else {
            [1, 2, 3, 4]
        }
    }

    /// Start of the residue class mod 6 not reached by a single generator.
    pub fn last_class_start(&self) -> u64 {
        let tau = self.tau as u64;
        if self.family_id == 1 {
            11 + 12 * tau
        } else {
            5 + 12 * tau
        }
    }
}

pub fn family(family_id: u32, tau: u32) -> Result<FamilySpec> {
    check_family(family_id, tau)?;
    let t = tau as u64;
    let offsets: [u64; 4] = if family_id == 1 { [3, 4, 7, 8] } else { [1, 2, 3, 4] };
    let mut gens = vec![6];
    gens.extend(offsets.iter().map(|j| j + 6 * t));
    let semigroup = NumericalSemigroup::from_generators(&gens)?;
    let tau = tau as i64;
    Ok(if family_id == 1 {
        FamilySpec {
            family_id,
            tau: tau as u32,
            semigroup,
            closed_genus: 3 + 6 * tau,
            closed_frobenius: 12 * tau + 5,
            closed_t1_minus: 11 * tau + 8,
            closed_moduli_dim: 8 * tau + 7,
            closed_cone_dim: Some(8 * tau + 8),
        }
    } else {
        FamilySpec {
            family_id,
            tau: tau as u32,
            semigroup,
            closed_genus: 6 * tau,
            closed_frobenius: 12 * tau - 1,
            closed_t1_minus: 11 * tau + 4,
            closed_moduli_dim: 8 * tau + 3,
            closed_cone_dim: Some(8 * tau + 4),
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assertion {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
}

impl Assertion {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{mark:>6}  {}: expected {}, got {}",
            self.name, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyVerification {
    pub family_id: u32,
    pub tau: u32,
    pub assertions: Vec<Assertion>,
}

impl FamilyVerification {
    pub fn all_passed(&self) -> bool {
        self.assertions.iter().all(Assertion::passed)
    }

    pub fn first_failure(&self) -> Option<&Assertion> {
        self.assertions.iter().find(|a| !a.passed())
    }
}

fn push<T: fmt::Debug>(out: &mut Vec<Assertion>, name: &'static str, expected: T, actual: T) {
    out.push(Assertion {
        name,
        expected: format!("{expected:?}"),
        actual: format!("{actual:?}"),
    });
}

/// Evaluates every closed-form claim against the general algorithms and
/// records each comparison, pass or fail.
pub fn check_family_spec(spec: &FamilySpec) -> Result<FamilyVerification> {
    let s = &spec.semigroup;
    let mut out = Vec::new();
    let tau = spec.tau as u64;

    push(&mut out, "five minimal generators", 5, s.embedding_dimension());
    push(&mut out, "multiplicity", 6, s.multiplicity());
    push(&mut out, "genus", spec.closed_genus, s.genus() as i64);
    push(&mut out, "frobenius", spec.closed_frobenius, s.frobenius());
    push(
        &mut out,
        "frobenius = 2g - 1",
        2 * spec.closed_genus - 1,
        spec.closed_frobenius,
    );
    push(&mut out, "symmetric", true, s.is_symmetric()?);
    push(&mut out, "lambda", 1, s.lambda()?);

    let decomposition_holds = (0..=s.frobenius() + 24).all(|n| {
        let n = n as u64;
        let predicted = n % 6 == 0
            || spec.offsets().iter().any(|&j| n >= j + 6 * tau && (n - j - 6 * tau) % 6 == 0)
            || (n >= spec.last_class_start() && (n - spec.last_class_start()) % 6 == 0);
        predicted == s.contains(n as i64)
    });
    push(&mut out, "decomposition of N by residue class", true, decomposition_holds);

    let relations = minimal_relations(s)?;
    push(&mut out, "minimal relations", 9, relations.len());
    let mut degrees: Vec<i64> = relations.iter().map(|r| r.degree).collect();
    degrees.sort_unstable();
    let mut weights: Vec<i64> = family_initial_forms(spec.family_id, spec.tau)?
        .iter()
        .map(|f| f.weight)
        .collect();
    weights.sort_unstable();
    push(&mut out, "relation degrees = initial form weights", weights, degrees);

    let table = t1_table_with(s, &relations)?;
    push(&mut out, "t1_minus", spec.closed_t1_minus, table.t1_minus as i64);
    push(&mut out, "t1_plus", spec.closed_t1_plus(), table.t1_plus as i64);
    push(
        &mut out,
        "moduli dimension = 2g - 1 - t1_plus",
        spec.closed_moduli_dim,
        2 * s.genus() as i64 - 1 - table.t1_plus as i64,
    );

    Ok(FamilyVerification {
        family_id: spec.family_id,
        tau: spec.tau,
        assertions: out,
    })
}

/// As [`check_family_spec`], failing on the first assertion that does not hold.
pub fn verify_family(spec: &FamilySpec) -> Result<FamilyVerification> {
    let record = check_family_spec(spec)?;
    if let Some(a) = record.first_failure() {
        return Err(Error::VerificationFailure(format!(
            "family {} τ={}: {} (expected {}, got {})",
            spec.family_id, spec.tau, a.name, a.expected, a.actual
        )));
    }
    Ok(record)
}

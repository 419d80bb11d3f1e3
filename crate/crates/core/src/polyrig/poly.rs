//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then the exponent of the earliest variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: BigRational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn integer(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, rational(c))
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::integer(ring, 1)
    }

    /// `var^exp`.
    pub fn var_pow(ring: &Arc<Ring>, var: usize, exp: u32) -> Self {
        let mut m = Monomial::one(ring.len());
        m.0[var] = exp;
        let mut p = Self::zero(ring);
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn var(ring: &Arc<Ring>, var: usize) -> Self {
        Self::var_pow(ring, var, 1)
    }

    pub fn named(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        let v = ring.var(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, v))
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(ring);
        for (exps, c) in terms {
            assert_eq!(exps.len(), ring.len(), "exponent vector length");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(self.same_ring(other), "polynomials over different rings");
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.ring);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Variables with a nonzero exponent in some term.
    pub fn variables(&self) -> BTreeSet<usize> {
        let mut vars = BTreeSet::new();
        for m in self.terms.keys() {
            vars.extend(m.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v));
        }
        vars
    }

    pub fn monomial_weight(&self, m: &Monomial) -> i64 {
        m.0.iter()
            .enumerate()
            .map(|(v, &e)| self.ring.weight(v) * e as i64)
            .sum()
    }

    /// Distinct term weights, ascending.
    pub fn weights(&self) -> BTreeSet<i64> {
        self.terms.keys().map(|m| self.monomial_weight(m)).collect()
    }

    /// Every term has weight `w` (vacuous for zero).
    pub fn is_isobaric(&self, w: i64) -> bool {
        self.terms.keys().all(|m| self.monomial_weight(m) == w)
    }

    /// The common weight of all terms, if there is one.
    pub fn isobaric_weight(&self) -> Option<i64> {
        let ws = self.weights();
        (ws.len() == 1).then(|| *ws.iter().next().unwrap())
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Coefficient of `var^k`, as a polynomial free of `var`.
    pub fn coefficient_in(&self, var: usize, k: u32) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut stripped = m.clone();
                stripped.0[var] = 0;
                out.add_term(stripped, c.clone());
            }
        }
        out
    }

    /// Terms whose total degree in `vars` equals `degree`.
    pub fn homogeneous_part(&self, vars: &BTreeSet<usize>, degree: u32) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let d: u32 = vars.iter().map(|&v| m.0[v]).sum();
            if d == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Drops every term with `var`-degree at least `bound` (reduction mod `var^bound`).
    pub fn truncate_in(&self, var: usize, bound: u32) -> Self {
        Self {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[var] < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Replaces the variables in `assignment` by the given polynomials.
    pub fn substitute(&self, assignment: &HashMap<usize, Polynomial>) -> Self {
        let mut out = Self::zero(&self.ring);
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut kept = m.clone();
            let mut term = Self::one(&self.ring);
            for (&v, value) in assignment {
                let e = m.0[v];
                if e == 0 {
                    continue;
                }
                value.check_ring(self);
                kept.0[v] = 0;
                let power = powers.entry((v, e)).or_insert_with(|| value.pow(e));
                term = &term * &*power;
            }
            let mut lead = Self::zero(&self.ring);
            lead.terms.insert(kept, c.clone());
            out = &out + &(&lead * &term);
        }
        out
    }

    /// Divides by `divisor`, which must be monic in `var`: its `var`-leading
    /// coefficient is exactly 1 and all its other terms have lower `var`-degree.
    /// Returns `(q, r)` with `self = q·divisor + r` and `deg_var r < deg_var divisor`.
    pub fn divide_by_monic(&self, divisor: &Polynomial, var: usize) -> Result<(Self, Self)> {
        self.check_ring(divisor);
        let not_monic = || Error::NotMonicInX {
            var: self.ring.name(var).to_string(),
        };
        let n = divisor.degree_in(var).ok_or_else(not_monic)?;
        if divisor.coefficient_in(var, n) != Self::one(&self.ring) {
            return Err(not_monic());
        }
        let tail = divisor - &Self::var_pow(&self.ring, var, n);
        let mut quotient = Self::zero(&self.ring);
        let mut rem = self.clone();
        while let Some(d) = rem.degree_in(var) {
            if d < n {
                break;
            }
            let lead = &rem.coefficient_in(var, d) * &Self::var_pow(&self.ring, var, d - n);
            quotient = &quotient + &lead;
            // rem − lead·divisor, with lead·var^n cancelling the top layer exactly.
            let mut top = Self::zero(&self.ring);
            for (m, c) in &rem.terms {
                if m.0[var] == d {
                    top.terms.insert(m.clone(), c.clone());
                }
            }
            rem = &(&rem - &top) - &(&lead * &tail);
        }
        Ok((quotient, rem))
    }

    /// Canonical text form: terms from the largest monomial down, explicit
    /// rational coefficients, `*` between factors and `^` for powers.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// Resultant of two polynomials in the single variable `var`, via the
/// determinant of the Sylvester matrix.
pub fn univariate_resultant(p: &Polynomial, q: &Polynomial, var: usize) -> Result<BigRational> {
    p.check_ring(q);
    let coeffs = |f: &Polynomial| -> Result<Vec<BigRational>> {
        if f.variables().iter().any(|&v| v != var) {
            return Err(Error::UnknownVariable(format!(
                "{} is not univariate in {}",
                f,
                f.ring.name(var)
            )));
        }
        let deg = f.degree_in(var).unwrap_or(0);
        // Leading coefficient first.
        Ok((0..=deg)
            .rev()
            .map(|k| {
                let c = f.coefficient_in(var, k);
                c.terms.values().next().cloned().unwrap_or_else(BigRational::zero)
            })
            .collect())
    };
    let (a, b) = (coeffs(p)?, coeffs(q)?);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(BigRational::one());
    }
    let mut mat = vec![vec![BigRational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.iter().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.iter().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    Ok(determinant(mat))
}

fn determinant(mut mat: Vec<Vec<BigRational>>) -> BigRational {
    let n = mat.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !mat[i][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            mat.swap(p, col);
            det = -det;
        }
        let pivot = mat[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            if mat[i][col].is_zero() {
                continue;
            }
            let f = &mat[i][col] / &pivot;
            for j in col..n {
                let v = &mat[i][j] - &f * &mat[col][j];
                mat[i][j] = v;
            }
        }
    }
    det
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.ring.name(v).to_string()
                    } else {
                        format!("{}^{}", self.ring.name(v), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

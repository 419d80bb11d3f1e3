//! Polynomial data of the two multiplicity-6 families
//! `⟨6, 3+6τ, 4+6τ, 7+6τ, 8+6τ⟩` (family 1) and `⟨6, 1+6τ, 2+6τ, 3+6τ, 4+6τ⟩`
//! (family 2): initial forms, syzygies, the skew matrices whose Pfaffians cut
//! out the negative-degree base space, and the base equations themselves.
//!
//! A partial polynomial `f_i^(j)` is `Σ_{k=0}^{ρ} f_{i,j+6k} X^{ρ−k}`; its
//! symbols `f_{i,k}` are ring variables named `f_i_k` of weight `k`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{univariate_resultant, Polynomial};
use super::ring::Ring;
use super::skew::SkewMatrix5;
use crate::error::{Error, Result};
use crate::linalg::rational_rank;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partial {
    pub letter: char,
    pub i: u32,
    pub j: u32,
}

const fn f(i: u32, j: u32) -> Partial {
    Partial { letter: 'f', i, j }
}

const fn g(i: u32, j: u32) -> Partial {
    Partial { letter: 'g', i, j }
}

impl fmt::Display for Partial {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "{}{}^({})", self.letter, self.i, self.j)
    }
}

/// The sixteen partial polynomials left after the linear equations and the
/// elimination of the `Y`-free coefficients.
const FAMILY1_PARTIALS: [Partial; 16] = [
    f(16, 2),
    f(8, 1),
    f(12, 4),
    f(6, 4),
    f(12, 3),
    f(15, 6),
    f(8, 6),
    f(14, 6),
    f(12, 5),
    f(7, 5),
    f(10, 2),
    f(11, 3),
    f(14, 1),
    f(14, 4),
    f(14, 5),
    f(16, 1),
];

const FAMILY2_PARTIALS: [Partial; 11] = [
    g(4, 2),
    g(4, 1),
    f(6, 4),
    f(2, 4),
    f(6, 3),
    f(8, 6),
    f(3, 6),
    f(2, 6),
    f(6, 5),
    f(2, 5),
    f(4, 2),
];

pub(crate) fn check_family(family: u32, tau: u32) -> Result<()> {
    if family != 1 && family != 2 {
        return Err(Error::BadFamilyId(family));
    }
    if tau < 1 {
        return Err(Error::TauTooSmall(tau));
    }
    Ok(())
}

/// X-degree `ρ` of `f_i^(j)`, fixed by isobaricity.
pub fn partial_degree(family: u32, tau: u32, p: Partial) -> u32 {
    let d = p.i as i64 - p.j as i64;
    let tau = tau as i64;
    let rho = if family == 1 {
        let (eps, r) = (d.div_euclid(6), d.rem_euclid(6));
        match r {
            _ if d == 11 => 0,
            0 => 2 * tau + eps,
            1 | 2 => tau - 1 + eps,
            _ => tau + eps,
        }
    } else {
        match d {
            0 => 2 * tau,
            6 => 2 * tau + 1,
            5 => 0,
            _ => tau + d.div_euclid(6),
        }
    };
    assert!(rho >= 0, "negative degree for {p}");
    rho as u32
}

/// Weight of the X-form of `f_i^(j)`.
pub fn partial_weight(family: u32, tau: u32, p: Partial) -> i64 {
    p.j as i64 + 6 * partial_degree(family, tau, p) as i64
}

/// Coefficient symbols forced to zero, as `(letter, i, k)` for `f_{i,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Normalization {
    zeroed: BTreeSet<(char, u32, u32)>,
}

impl Normalization {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(zeroed: impl IntoIterator<Item = (char, u32, u32)>) -> Self {
        Self {
            zeroed: zeroed.into_iter().collect(),
        }
    }

    /// `f_{8,1} = f_{12,4} = f_{8,6} = 0` for family 1;
    /// `f_{3,6} = g_{4,1} = f_{4,2} = 0` for family 2.
    pub fn default_for(family: u32) -> Self {
        if family == 1 {
            Self::new([('f', 8, 1), ('f', 12, 4), ('f', 8, 6)])
        } else {
            Self::new([('f', 3, 6), ('g', 4, 1), ('f', 4, 2)])
        }
    }

    /// Family 1 with `f_{15,6}` in place of `f_{8,6}`.
    pub fn family1_alternate() -> Self {
        Self::new([('f', 8, 1), ('f', 12, 4), ('f', 15, 6)])
    }

    pub fn zeroes(&self, letter: char, i: u32, k: u32) -> bool {
        self.zeroed.contains(&(letter, i, k))
    }
}

/// The polynomial ring for one family and `τ`: `X`, the four `Y_j`, `t`, and
/// the coefficient symbols that survive the normalization.
#[derive(Debug, Clone)]
pub struct FamilyRing {
    family: u32,
    tau: u32,
    ring: Arc<Ring>,
    symbols: Vec<usize>,
}

impl FamilyRing {
    pub fn new(family: u32, tau: u32, normalization: &Normalization) -> Result<Self> {
        check_family(family, tau)?;
        let mut vars: Vec<(String, i64)> = vec![("X".into(), 6)];
        for j in y_indices(family) {
            vars.push((format!("Y{j}"), j as i64 + 6 * tau as i64));
        }
        vars.push(("t".into(), -1));
        let first_symbol = vars.len();
        for &p in partials(family) {
            for k in 0..=partial_degree(family, tau, p) {
                let weight = p.j + 6 * k;
                if !normalization.zeroes(p.letter, p.i, weight) {
                    vars.push((symbol_name(p.letter, p.i, weight), weight as i64));
                }
            }
        }
        let symbols = (first_symbol..vars.len()).collect();
        Ok(Self {
            family,
            tau,
            ring: Ring::new(vars),
            symbols,
        })
    }

    pub fn with_default_normalization(family: u32, tau: u32) -> Result<Self> {
        Self::new(family, tau, &Normalization::default_for(family))
    }

    pub fn family(&self) -> u32 {
        self.family
    }

    pub fn tau(&self) -> u32 {
        self.tau
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Indices of the coefficient symbols.
    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn symbol_set(&self) -> BTreeSet<usize> {
        self.symbols.iter().copied().collect()
    }

    pub fn symbol(&self, letter: char, i: u32, k: u32) -> Option<usize> {
        self.ring.var(&symbol_name(letter, i, k))
    }

    pub fn x_var(&self) -> usize {
        0
    }

    pub fn t_var(&self) -> usize {
        5
    }

    pub fn x_pow(&self, e: u32) -> Polynomial {
        Polynomial::var_pow(&self.ring, 0, e)
    }

    pub fn y(&self, j: u32) -> Polynomial {
        let v = self.ring.var(&format!("Y{j}")).expect("Y variable of this family");
        Polynomial::var(&self.ring, v)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::integer(&self.ring, c)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.ring)
    }

    pub fn degree(&self, p: Partial) -> u32 {
        partial_degree(self.family, self.tau, p)
    }

    /// `f_i^(j)` as a polynomial in `X`; normalized symbols are absent.
    pub fn partial(&self, p: Partial) -> Polynomial {
        let rho = self.degree(p);
        let mut out = self.zero();
        for k in 0..=rho {
            if let Some(v) = self.symbol(p.letter, p.i, p.j + 6 * k) {
                out = &out + &(&Polynomial::var(&self.ring, v) * &self.x_pow(rho - k));
            }
        }
        out
    }

    /// `f_i^(j)` in the local coordinate at infinity: `Σ_k f_{i,j+6k} t^{j+6k}`.
    pub fn partial_t(&self, p: Partial) -> Polynomial {
        let t = self.t_var();
        let mut out = self.zero();
        for k in 0..=self.degree(p) {
            let w = p.j + 6 * k;
            if let Some(v) = self.symbol(p.letter, p.i, w) {
                out = &out + &(&Polynomial::var(&self.ring, v) * &Polynomial::var_pow(&self.ring, t, w));
            }
        }
        out
    }

    /// Reads a `t`-form back as the X-form of the partial polynomial `target`:
    /// `c·t^{j+6k}` becomes `c·X^{ρ−k}`.
    pub fn t_form_to_x(&self, target: Partial, tform: &Polynomial) -> Result<Polynomial> {
        let (t, rho) = (self.t_var(), self.degree(target));
        let mut terms = Vec::new();
        for (m, c) in tform.terms() {
            let mut exps = m.exponents().to_vec();
            let w = exps[t];
            let offset = w as i64 - target.j as i64;
            if offset < 0 || offset % 6 != 0 || offset / 6 > rho as i64 {
                return Err(Error::VerificationFailure(format!(
                    "t^{w} does not fit the partial polynomial {target}"
                )));
            }
            exps[t] = 0;
            exps[self.x_var()] += rho - (offset / 6) as u32;
            terms.push((exps, c.clone()));
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }
}

fn symbol_name(letter: char, i: u32, k: u32) -> String {
    format!("{letter}_{i}_{k}")
}

fn y_indices(family: u32) -> [u32; 4] {
    if family == 1 {
        [3, 4, 7, 8]
    } else {
        [1, 2, 3, 4]
    }
}

fn partials(family: u32) -> &'static [Partial] {
    if family == 1 {
        &FAMILY1_PARTIALS
    } else {
        &FAMILY2_PARTIALS
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialForm {
    pub label: &'static str,
    pub weight: i64,
    pub poly: Polynomial,
}

/// The nine binomial generators of the monomial curve's ideal, in a given ring.
pub fn initial_forms_in(fr: &FamilyRing) -> Vec<InitialForm> {
    let tau = fr.tau;
    let x = |e: u32| fr.x_pow(e);
    let y = |j| fr.y(j);
    let forms: Vec<(&'static str, u32, Polynomial)> = if fr.family == 1 {
        vec![
            ("F6", 6, &y(3).pow(2) - &x(2 * tau + 1)),
            ("F7", 7, &(&y(3) * &y(4)) - &(&x(tau) * &y(7))),
            ("F8", 8, &y(4).pow(2) - &(&x(tau) * &y(8))),
            ("F10", 10, &(&y(3) * &y(7)) - &(&x(tau + 1) * &y(4))),
            ("F11", 11, &(&y(4) * &y(7)) - &(&y(3) * &y(8))),
            ("F12", 12, &(&y(4) * &y(8)) - &x(2 * tau + 2)),
            ("F14", 14, &y(7).pow(2) - &(&x(tau + 1) * &y(8))),
            ("F15", 15, &(&y(7) * &y(8)) - &(&x(tau + 2) * &y(3))),
            ("F16", 16, &y(8).pow(2) - &(&x(tau + 2) * &y(4))),
        ]
    } else {
        vec![
            ("F2", 2, &y(1).pow(2) - &(&x(tau) * &y(2))),
            ("F3", 3, &(&y(1) * &y(2)) - &(&x(tau) * &y(3))),
            ("F4", 4, &(&y(1) * &y(3)) - &(&x(tau) * &y(4))),
            ("G4", 4, &y(2).pow(2) - &(&x(tau) * &y(4))),
            ("F5", 5, &(&y(1) * &y(4)) - &(&y(2) * &y(3))),
            ("F6", 6, &(&y(2) * &y(4)) - &x(2 * tau + 1)),
            ("G6", 6, &y(3).pow(2) - &x(2 * tau + 1)),
            ("F7", 7, &(&y(3) * &y(4)) - &(&x(tau + 1) * &y(1))),
            ("F8", 8, &y(4).pow(2) - &(&x(tau + 1) * &y(2))),
        ]
    };
    forms
        .into_iter()
        .map(|(label, i, poly)| InitialForm {
            label,
            weight: 12 * tau as i64 + i as i64,
            poly,
        })
        .collect()
}

pub fn family_initial_forms(family: u32, tau: u32) -> Result<Vec<InitialForm>> {
    Ok(initial_forms_in(&FamilyRing::with_default_normalization(family, tau)?))
}

/// Residuals of the eight family-1 syzygies among the initial forms; each
/// is zero exactly when the identity holds.
pub fn syzygy_residuals(tau: u32) -> Result<Vec<(String, Polynomial)>> {
    let fr = FamilyRing::with_default_normalization(1, tau)?;
    let forms: HashMap<&str, Polynomial> =
        initial_forms_in(&fr).into_iter().map(|f| (f.label, f.poly)).collect();
    let fm = |label: &str| forms[label].clone();
    let y = |j| fr.y(j);
    let x = |e: u32| fr.x_pow(tau + e);
    let rows: Vec<(&str, Vec<(Polynomial, Polynomial)>)> = vec![
        (
            "Y4*F6 - Y3*F7 - X^τ*F10",
            vec![(y(4), fm("F6")), (-y(3), fm("F7")), (-x(0), fm("F10"))],
        ),
        (
            "Y4*F7 - Y3*F8 + X^τ*F11",
            vec![(y(4), fm("F7")), (-y(3), fm("F8")), (x(0), fm("F11"))],
        ),
        (
            "Y4*F10 - Y7*F7 + X^(τ+1)*F8 - X^τ*F14",
            vec![
                (y(4), fm("F10")),
                (-y(7), fm("F7")),
                (x(1), fm("F8")),
                (-x(0), fm("F14")),
            ],
        ),
        (
            "Y4*F11 - Y7*F8 + Y8*F7",
            vec![(y(4), fm("F11")), (-y(7), fm("F8")), (y(8), fm("F7"))],
        ),
        (
            "Y4*F12 - Y8*F8 - X^τ*F16",
            vec![(y(4), fm("F12")), (-y(8), fm("F8")), (-x(0), fm("F16"))],
        ),
        (
            "Y4*F14 - Y8*F10 - Y7*F11",
            vec![(y(4), fm("F14")), (-y(8), fm("F10")), (-y(7), fm("F11"))],
        ),
        (
            "Y4*F15 - Y7*F12 + X^(τ+2)*F7",
            vec![(y(4), fm("F15")), (-y(7), fm("F12")), (x(2), fm("F7"))],
        ),
        (
            "Y4*F16 - Y8*F12 + X^(τ+2)*F8",
            vec![(y(4), fm("F16")), (-y(8), fm("F12")), (x(2), fm("F8"))],
        ),
    ];
    Ok(rows
        .into_iter()
        .map(|(name, terms)| {
            let sum = terms
                .iter()
                .fold(fr.zero(), |acc, (c, form)| &acc + &(c * form));
            (name.to_string(), sum)
        })
        .collect())
}

/// All eight family-1 syzygies hold identically.
pub fn verify_syzygies_family1(tau: u32) -> Result<bool> {
    for (name, residual) in syzygy_residuals(tau)? {
        if !residual.is_zero() {
            return Err(Error::SyzygyFailure(name));
        }
    }
    Ok(true)
}

/// The skew matrix whose sub-Pfaffians give the base space, in a given ring.
pub fn pfaffian_matrix_in(fr: &FamilyRing) -> SkewMatrix5 {
    let p = |q: Partial| fr.partial(q);
    let x = |e: u32| fr.x_pow(e);
    let entries: [Polynomial; 10] = if fr.family == 1 {
        [
            p(f(16, 2)),
            p(f(8, 1)),
            p(f(12, 4)),
            p(f(6, 4)),
            p(f(12, 3)),
            &p(f(15, 6)) - &(&x(2) * &p(f(8, 6))),
            &p(f(14, 6)) - &(&x(1) * &p(f(8, 6))),
            p(f(12, 5)),
            p(f(7, 5)),
            p(f(10, 2)),
        ]
    } else {
        [
            p(g(4, 2)),
            p(g(4, 1)),
            p(f(6, 4)),
            -p(f(2, 4)),
            p(f(6, 3)),
            &p(f(8, 6)) - &(&x(1) * &p(f(3, 6))),
            &p(f(2, 6)) - &p(f(3, 6)),
            p(f(6, 5)),
            p(f(2, 5)),
            p(f(4, 2)),
        ]
    };
    let mut it = entries.into_iter();
    SkewMatrix5::from_fn(|_, _| it.next().expect("ten entries"))
}

pub fn pfaffian_matrix(family: u32, tau: u32) -> Result<SkewMatrix5> {
    Ok(pfaffian_matrix_in(&FamilyRing::with_default_normalization(family, tau)?))
}

/// `X^τ − f_8^(6)` (family 1) or `X^τ − f_3^(6)` (family 2).
pub fn monic_divisor(fr: &FamilyRing) -> Polynomial {
    let q = if fr.family == 1 { f(8, 6) } else { f(3, 6) };
    &fr.x_pow(fr.tau) - &fr.partial(q)
}

/// The right-hand sides `R` of the divisibility equations `L·(X^τ − c) = R`,
/// written out directly in terms of the partial polynomials.
pub fn divisibility_right_hand_sides(fr: &FamilyRing) -> Vec<Polynomial> {
    let p = |q: Partial| fr.partial(q);
    let x = |e: u32| fr.x_pow(e);
    let prod = |a: &Polynomial, b: &Polynomial| a * b;
    if fr.family == 1 {
        let e24 = &p(f(15, 6)) - &(&x(2) * &p(f(8, 6)));
        let e25 = &p(f(14, 6)) - &(&x(1) * &p(f(8, 6)));
        vec![
            &(&prod(&p(f(8, 1)), &e24) - &prod(&p(f(12, 3)), &p(f(12, 4))))
                - &prod(&p(f(16, 2)), &p(f(12, 5))),
            &(&prod(&p(f(7, 5)), &p(f(16, 2))) - &prod(&p(f(8, 1)), &e25))
                + &prod(&p(f(6, 4)), &p(f(12, 3))),
            &(&prod(&p(f(7, 5)), &p(f(12, 4))) - &prod(&p(f(8, 1)), &p(f(10, 2))))
                - &prod(&p(f(6, 4)), &p(f(12, 5))),
            &(&prod(&p(f(12, 4)), &e25) - &prod(&p(f(6, 4)), &e24))
                - &prod(&p(f(10, 2)), &p(f(16, 2))),
            &(&prod(&p(f(7, 5)), &e24) - &prod(&p(f(12, 5)), &e25))
                - &prod(&p(f(10, 2)), &p(f(12, 3))),
        ]
    } else {
        let e24 = &p(f(8, 6)) - &(&x(1) * &p(f(3, 6)));
        let e25 = &p(f(2, 6)) - &p(f(3, 6));
        vec![
            &(&prod(&p(g(4, 1)), &e24) - &prod(&p(f(6, 3)), &p(f(6, 4))))
                - &prod(&p(g(4, 2)), &p(f(6, 5))),
            &(&prod(&p(g(4, 1)), &e25) + &prod(&p(f(6, 3)), &p(f(2, 4))))
                - &prod(&p(g(4, 2)), &p(f(2, 5))),
            &(&prod(&p(g(4, 1)), &p(f(4, 2))) - &prod(&p(f(6, 4)), &p(f(2, 5))))
                - &prod(&p(f(2, 4)), &p(f(6, 5))),
            &(&(-&prod(&p(f(2, 4)), &e24)) - &prod(&p(f(6, 4)), &e25))
                + &prod(&p(f(4, 2)), &p(g(4, 2))),
            &(&(-&prod(&p(f(2, 5)), &e24)) + &prod(&p(f(6, 5)), &e25))
                + &prod(&p(f(4, 2)), &p(f(6, 3))),
        ]
    }
}

/// Whether `a` and `b` agree as sets of polynomials up to the sign of each
/// element, matched one to one.
pub fn equal_up_to_sign(a: &[Polynomial], b: &[Polynomial]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|p| {
        let neg = -p;
        match (0..b.len()).find(|&k| !used[k] && (b[k] == *p || b[k] == neg)) {
            Some(k) => {
                used[k] = true;
                true
            }
            None => false,
        }
    })
}

/// Base-space equations: for each sub-Pfaffian, the coefficients of
/// `X^0, …, X^{τ−1}` of its remainder modulo the monic divisor.
pub fn base_equations_in(fr: &FamilyRing) -> Result<Vec<Polynomial>> {
    let divisor = monic_divisor(fr);
    let mut equations = Vec::with_capacity(5 * fr.tau as usize);
    for pf in pfaffian_matrix_in(fr).sub_pfaffians() {
        let (_, rem) = pf.divide_by_monic(&divisor, fr.x_var())?;
        for e in 0..fr.tau {
            equations.push(rem.coefficient_in(fr.x_var(), e));
        }
    }
    Ok(equations)
}

pub fn base_equations(family: u32, tau: u32) -> Result<Vec<Polynomial>> {
    base_equations_in(&FamilyRing::with_default_normalization(family, tau)?)
}

/// Coefficient symbols appearing in the matrix entries.
pub fn matrix_symbols(fr: &FamilyRing) -> BTreeSet<usize> {
    let mut vars = BTreeSet::new();
    for e in pfaffian_matrix_in(fr).upper_entries() {
        vars.extend(e.variables());
    }
    vars.remove(&fr.x_var());
    vars
}

/// Outcome of comparing the quadratic parts of the base equations with the
/// Pfaffians of the matrix reduced modulo `X^τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticConeReport {
    pub quadratic_parts_match: bool,
    /// Number of coefficient symbols in the matrix entries.
    pub ambient_dim: usize,
    /// Rank of the `10τ` linear forms giving the entries modulo `X^τ`.
    pub generic_rank: usize,
    /// Weights of a complement to those linear forms.
    pub free_weights: Vec<i64>,
}

impl QuadraticConeReport {
    pub fn free_dim(&self) -> usize {
        self.ambient_dim - self.generic_rank
    }
}

pub fn quadratic_cone_report(family: u32, tau: u32) -> Result<QuadraticConeReport> {
    let fr = FamilyRing::with_default_normalization(family, tau)?;
    let x = fr.x_var();
    let symbols = fr.symbol_set();

    let from_equations: Vec<Polynomial> = base_equations_in(&fr)?
        .iter()
        .map(|e| e.homogeneous_part(&symbols, 2))
        .collect();

    let truncated = pfaffian_matrix_in(&fr).map(|e| e.truncate_in(x, tau));
    let mut from_artinian = Vec::new();
    for pf in truncated.sub_pfaffians() {
        let pf = pf.truncate_in(x, tau);
        for e in 0..tau {
            from_artinian.push(pf.coefficient_in(x, e));
        }
    }

    let ambient: Vec<usize> = matrix_symbols(&fr).into_iter().collect();
    let column: HashMap<usize, usize> = ambient.iter().enumerate().map(|(c, &v)| (v, c)).collect();
    let mut rows = Vec::new();
    let mut slot_weights = Vec::new();
    for entry in truncated.upper_entries() {
        for e in 0..tau {
            let form = entry.coefficient_in(x, e);
            let mut row = vec![BigRational::zero(); ambient.len()];
            for (m, c) in form.terms() {
                let v = m
                    .exponents()
                    .iter()
                    .position(|&d| d > 0)
                    .expect("linear term");
                row[column[&v]] = c.clone();
            }
            if let Some(w) = form.isobaric_weight() {
                slot_weights.push(w);
            }
            rows.push(row);
        }
    }
    let generic_rank = rational_rank(rows);

    let mut free: BTreeMap<i64, i64> = BTreeMap::new();
    for &v in &ambient {
        *free.entry(fr.ring().weight(v)).or_default() += 1;
    }
    for w in slot_weights {
        *free.entry(w).or_default() -= 1;
    }
    let mut free_weights = Vec::new();
    for (w, n) in free {
        if n < 0 {
            return Err(Error::VerificationFailure(format!(
                "weight {w} is used more often by the generic entries than by the symbols"
            )));
        }
        free_weights.extend(std::iter::repeat(w).take(n as usize));
    }

    Ok(QuadraticConeReport {
        quadratic_parts_match: from_equations == from_artinian,
        ambient_dim: ambient.len(),
        generic_rank,
        free_weights,
    })
}

/// The quadratic parts of the family-1 base equations are the Pfaffians of
/// the matrix over `k[X]/(X^τ)`, and the truncated entries are generic.
pub fn quadratic_cone_check(tau: u32) -> Result<bool> {
    let report = quadratic_cone_report(1, tau)?;
    Ok(report.quadratic_parts_match && report.generic_rank == 10 * tau as usize)
}

/// Family-1 generators with every coefficient expressed through the sixteen
/// remaining partial polynomials. The `Y`-free coefficients are computed in the
/// `t` coordinate and read back in `X`.
pub fn unfolded_generators(fr: &FamilyRing) -> Result<Vec<Polynomial>> {
    if fr.family != 1 {
        return Err(Error::BadFamilyId(fr.family));
    }
    let tau = fr.tau;
    let p = |q: Partial| fr.partial(q);
    let pt = |i, j| fr.partial_t(f(i, j));
    let prod = |a: &Polynomial, b: &Polynomial| a * b;

    let e66 = &(&(&(&pt(14, 6) + &pt(8, 6)) + &prod(&pt(7, 5), &pt(14, 1)))
        + &prod(&pt(6, 4), &pt(16, 2)))
        - &prod(&pt(14, 6), &pt(8, 6));
    let e71 = -&(&prod(&pt(6, 4), &pt(12, 3)) + &prod(&pt(10, 2), &pt(12, 5)));
    let e82 = -&(&prod(&pt(7, 5), &pt(12, 3)) + &prod(&pt(11, 3), &pt(12, 5)));
    let e104 = &(&(&pt(14, 4) + &prod(&pt(10, 2), &pt(16, 2))) - &prod(&pt(7, 5), &pt(14, 5)))
        - &prod(&pt(14, 4), &pt(8, 6));
    let e115 = &(&(&(&pt(14, 5) + &prod(&pt(16, 1), &pt(6, 4)))
        + &prod(&pt(10, 2), &pt(12, 3)))
        + &prod(&pt(14, 1), &pt(12, 4)))
        - &prod(&pt(14, 5), &pt(8, 6));
    let e126 = &(&(&(&(&pt(15, 6) + &pt(8, 6)) - &prod(&pt(16, 1), &pt(7, 5)))
        - &prod(&pt(11, 3), &pt(12, 3)))
        + &prod(&pt(16, 2), &pt(12, 4)))
        - &prod(&pt(15, 6), &pt(8, 6));
    let e142 = &(&(&pt(10, 2) + &prod(&pt(14, 4), &pt(12, 4))) - &prod(&pt(11, 3), &pt(14, 5)))
        - &prod(&pt(10, 2), &pt(15, 6));
    let e153 = &(&pt(12, 3) - &prod(&pt(14, 4), &pt(12, 5))) - &prod(&pt(12, 3), &pt(14, 6));
    let e164 = &prod(&pt(14, 1), &pt(12, 3)) - &prod(&pt(14, 5), &pt(12, 5));

    let e = |i, j, tform: &Polynomial| fr.t_form_to_x(f(i, j), tform);
    let (e66, e71, e82) = (e(6, 6, &e66)?, e(7, 1, &e71)?, e(8, 2, &e82)?);
    let (e104, e115, e126) = (e(10, 4, &e104)?, e(11, 5, &e115)?, e(12, 6, &e126)?);
    let (e142, e153, e164) = (e(14, 2, &e142)?, e(15, 3, &e153)?, e(16, 4, &e164)?);

    let x = |k: u32| fr.x_pow(k);
    let y = |j| fr.y(j);
    let sum = |parts: Vec<Polynomial>| parts.iter().fold(fr.zero(), |acc, q| &acc + q);
    let forms = initial_forms_in(fr);
    let init = |k: usize| forms[k].poly.clone();
    debug_assert_eq!(init(0), &y(3).pow(2) - &x(2 * tau + 1));

    Ok(vec![
        sum(vec![
            init(0),
            prod(&p(f(10, 2)), &y(4)),
            -prod(&p(f(11, 3)), &y(3)),
            prod(&p(f(6, 4)), &y(8)),
            prod(&p(f(7, 5)), &y(7)),
            e66,
        ]),
        sum(vec![
            init(1),
            e71,
            prod(&p(f(12, 4)), &y(3)),
            prod(&p(f(7, 5)), &y(8)),
            prod(&p(f(8, 6)), &y(7)),
        ]),
        sum(vec![
            init(2),
            prod(&p(f(8, 1)), &y(7)),
            e82,
            prod(&p(f(12, 4)), &y(4)),
            prod(&p(f(12, 5)), &y(3)),
            prod(&p(f(8, 6)), &y(8)),
        ]),
        sum(vec![
            init(3),
            prod(&p(f(10, 2)), &y(8)),
            e104,
            prod(&p(f(14, 6)), &y(4)),
        ]),
        sum(vec![
            init(4),
            prod(&p(f(14, 1)), &y(4)),
            prod(&p(f(11, 3)), &y(8)),
            e115,
        ]),
        sum(vec![
            init(5),
            prod(&p(f(16, 2)), &y(4)),
            prod(&p(f(12, 3)), &y(3)),
            prod(&p(f(12, 4)), &y(8)),
            prod(&p(f(12, 5)), &y(7)),
            e126,
        ]),
        sum(vec![
            init(6),
            prod(&p(f(14, 1)), &y(7)),
            e142,
            prod(&p(f(14, 4)), &y(4)),
            prod(&p(f(14, 5)), &y(3)),
            prod(&p(f(14, 6)), &y(8)),
        ]),
        sum(vec![
            init(7),
            prod(&p(f(16, 2)), &y(7)),
            e153,
            prod(&p(f(14, 5)), &y(4)),
            prod(&p(f(15, 6)), &y(3)),
        ]),
        sum(vec![
            init(8),
            prod(&p(f(16, 1)), &y(3)),
            prod(&p(f(16, 2)), &y(8)),
            prod(&p(f(12, 3)), &y(7)),
            e164,
            prod(&p(f(15, 6)), &y(4)),
        ]),
    ])
}

/// The nine generators of the smoothed family-1 curve with parameters `a, b, c`.
pub fn smoothing_generators(fr: &FamilyRing, a: &BigRational, b: &BigRational, c: &BigRational) -> Vec<Polynomial> {
    let tau = fr.tau;
    let ring = fr.ring();
    let konst = |q: &BigRational| Polynomial::constant(ring, q.clone());
    let pa = &fr.x_pow(tau) - &konst(a);
    let pb = &fr.x_pow(tau + 1) - &konst(b);
    let pc = &fr.x_pow(tau + 2) - &konst(c);
    let y = |j| fr.y(j);
    vec![
        &y(3).pow(2) - &(&pb * &pa),
        &(&y(3) * &y(4)) - &(&pa * &y(7)),
        &y(4).pow(2) - &(&pa * &y(8)),
        &(&y(3) * &y(7)) - &(&pb * &y(4)),
        &(&y(4) * &y(7)) - &(&y(3) * &y(8)),
        &(&y(4) * &y(8)) - &(&pc * &pa),
        &y(7).pow(2) - &(&pb * &y(8)),
        &(&y(7) * &y(8)) - &(&pc * &y(3)),
        &y(8).pow(2) - &(&pc * &y(4)),
    ]
}

/// Values of the top-weight symbols of `f_8^(6)`, `f_14^(6)`, `f_15^(6)`; every
/// other symbol is sent to zero.
pub fn smoothing_assignment(
    fr: &FamilyRing,
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<HashMap<usize, Polynomial>> {
    let ring = fr.ring();
    let mut assignment: HashMap<usize, Polynomial> =
        fr.symbols().iter().map(|&v| (v, Polynomial::zero(ring))).collect();
    for (i, value) in [(8, a), (14, b), (15, c)] {
        let top = 6 + 6 * fr.degree(f(i, 6));
        let v = fr
            .symbol('f', i, top)
            .ok_or_else(|| Error::VerificationFailure(format!("f_{i}_{top} is normalized away")))?;
        assignment.insert(v, Polynomial::constant(ring, value.clone()));
    }
    Ok(assignment)
}

/// Checks that the three-parameter smoothing solves the family-1 base
/// equations and that it unfolds to the expected curve.
pub fn verify_smoothing_solution(
    tau: u32,
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Result<bool> {
    for (name, value) in [("a", a), ("b", b), ("c", c)] {
        if value.is_zero() {
            return Err(Error::ZeroParameter(name));
        }
    }
    let fr = FamilyRing::new(1, tau, &Normalization::none())?;
    let ring = fr.ring();
    let x = fr.x_var();
    let factors = [
        ("X^τ - a", &fr.x_pow(tau) - &Polynomial::constant(ring, a.clone())),
        ("X^(τ+1) - b", &fr.x_pow(tau + 1) - &Polynomial::constant(ring, b.clone())),
        ("X^(τ+2) - c", &fr.x_pow(tau + 2) - &Polynomial::constant(ring, c.clone())),
    ];
    for i in 0..3 {
        for j in i + 1..3 {
            if univariate_resultant(&factors[i].1, &factors[j].1, x)?.is_zero() {
                return Err(Error::CoprimalityFailure {
                    first: factors[i].0.to_string(),
                    second: factors[j].0.to_string(),
                });
            }
        }
    }

    let assignment = smoothing_assignment(&fr, a, b, c)?;
    let equations_vanish = base_equations_in(&fr)?
        .iter()
        .all(|e| e.substitute(&assignment).is_zero());
    let pfaffians_vanish = pfaffian_matrix_in(&fr)
        .sub_pfaffians()
        .iter()
        .all(|p| p.substitute(&assignment).is_zero());

    let unfolded: Vec<Polynomial> = unfolded_generators(&fr)?
        .iter()
        .map(|g| g.substitute(&assignment))
        .collect();
    let unfolds_correctly = unfolded == smoothing_generators(&fr, a, b, c);

    let zero = BigRational::zero();
    let cone: Vec<Polynomial> = initial_forms_in(&fr).into_iter().map(|f| f.poly).collect();
    let degenerates = smoothing_generators(&fr, &zero, &zero, &zero) == cone;

    Ok(equations_vanish && pfaffians_vanish && unfolds_correctly && degenerates)
}

//! Minimal binomial generators of the toric ideal of the monomial curve
//! `t ↦ (t^{n_1}, …, t^{n_r})`, obtained from factorization graphs.
//!
//! For a member `d`, the factorization graph has the factorizations of `d` as
//! vertices and joins two of them when they share a generator. A minimal
//! presentation needs exactly `k − 1` relations in degree `d` when that graph
//! has `k` components. Every degree above `F + n_1 + n_r` has a connected
//! graph, so the search is finite.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// An expression `d = Σ exponents[j] · n_j` over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    pub exponents: Vec<u32>,
    pub degree: i64,
}

impl Factorization {
    fn shares_support(&self, other: &Factorization) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .any(|(&a, &b)| a > 0 && b > 0)
    }
}

/// A Herzog binomial `x^alpha − x^beta` with disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRelation {
    pub alpha: Factorization,
    pub beta: Factorization,
    pub degree: i64,
    /// `alpha − beta`.
    pub lattice_vector: Vec<i64>,
}

impl BinomialRelation {
    fn new(alpha: Factorization, beta: Factorization) -> Self {
        debug_assert_eq!(alpha.degree, beta.degree);
        let lattice_vector = alpha
            .exponents
            .iter()
            .zip(&beta.exponents)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        Self {
            degree: alpha.degree,
            alpha,
            beta,
            lattice_vector,
        }
    }
}

/// Which factorization represents a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Representative {
    /// Lexicographically smallest member; the base component holds the
    /// globally smallest factorization.
    #[default]
    LexSmallest,
    /// Mirror choice, used to check that derived ranks do not depend on it.
    LexLargest,
}

/// All factorizations of `d`, in decreasing lexicographic order.
pub fn factorizations(s: &NumericalSemigroup, d: i64) -> Vec<Factorization> {
    let gens = s.min_gens();
    let mut out = Vec::new();
    if d < 0 || !s.contains(d) {
        return out;
    }
    let mut current = vec![0u32; gens.len()];
    fill(gens, 0, d, &mut current, &mut out, d);
    out
}

fn fill(
    gens: &[u64],
    index: usize,
    remaining: i64,
    current: &mut Vec<u32>,
    out: &mut Vec<Factorization>,
    degree: i64,
) {
    if index + 1 == gens.len() {
        let g = gens[index] as i64;
        if remaining % g == 0 {
            current[index] = (remaining / g) as u32;
            out.push(Factorization {
                exponents: current.clone(),
                degree,
            });
        }
        current[index] = 0;
        return;
    }
    let g = gens[index] as i64;
    for k in (0..=remaining / g).rev() {
        current[index] = k as u32;
        fill(gens, index + 1, remaining - k * g, current, out, degree);
    }
    current[index] = 0;
}

/// Connected components of the factorization graph, each sorted ascending.
fn components(facts: &[Factorization]) -> Vec<Vec<&Factorization>> {
    let n = facts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if facts[i].shares_support(&facts[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<&Factorization>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(&facts[i]);
    }
    for g in &mut groups {
        g.sort();
    }
    groups
}

fn require_two_generators(s: &NumericalSemigroup) -> Result<()> {
    if s.embedding_dimension() < 2 {
        Err(Error::SingleGenerator)
    } else {
        Ok(())
    }
}

/// Upper end of the search range for relation degrees.
pub fn betti_search_bound(s: &NumericalSemigroup) -> i64 {
    let gens = s.min_gens();
    s.frobenius() + gens[0] as i64 + *gens.last().unwrap() as i64
}

/// Degrees at which the factorization graph is disconnected, ascending.
pub fn betti_elements(s: &NumericalSemigroup) -> Result<Vec<i64>> {
    require_two_generators(s)?;
    Ok((1..=betti_search_bound(s))
        .filter(|&d| s.contains(d))
        .filter(|&d| {
            let facts = factorizations(s, d);
            facts.len() > 1 && components(&facts).len() > 1
        })
        .collect())
}

/// A minimal binomial generating set of the toric ideal.
pub fn minimal_relations(s: &NumericalSemigroup) -> Result<Vec<BinomialRelation>> {
    minimal_relations_with(s, Representative::LexSmallest)
}

pub fn minimal_relations_with(
    s: &NumericalSemigroup,
    choice: Representative,
) -> Result<Vec<BinomialRelation>> {
    require_two_generators(s)?;
    let mut out = Vec::new();
    for d in 1..=betti_search_bound(s) {
        if !s.contains(d) {
            continue;
        }
        let facts = factorizations(s, d);
        if facts.len() < 2 {
            continue;
        }
        let comps = components(&facts);
        if comps.len() < 2 {
            continue;
        }
        let mut reps: Vec<&Factorization> = comps
            .iter()
            .map(|c| match choice {
                Representative::LexSmallest => c[0],
                Representative::LexLargest => *c.last().unwrap(),
            })
            .collect();
        match choice {
            Representative::LexSmallest => reps.sort(),
            Representative::LexLargest => reps.sort_by_key(|&f| Reverse(f)),
        }
        let base = reps[0];
        for &other in &reps[1..] {
            let (alpha, beta) = if other > base {
                (other.clone(), base.clone())
            } else {
                (base.clone(), other.clone())
            };
            out.push(BinomialRelation::new(alpha, beta));
        }
    }
    Ok(out)
}

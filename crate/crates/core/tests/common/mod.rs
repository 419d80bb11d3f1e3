#![allow(dead_code)]

use std::collections::BTreeSet;

use wsp_core::enumerate::semigroups_of_genus;
use wsp_core::NumericalSemigroup;

/// Gap sets of genus `g` found by testing every `g`-subset of `[1, 2g]`
/// for additive closure of its complement.
pub fn brute_force_gap_sets(g: usize) -> Vec<Vec<u64>> {
    let top = 2 * g as u64;
    let mut found = Vec::new();
    let mut subset = Vec::with_capacity(g);
    choose(1, top, g, &mut subset, &mut found);
    found
}

fn choose(start: u64, top: u64, left: usize, subset: &mut Vec<u64>, found: &mut Vec<Vec<u64>>) {
    if left == 0 {
        if complement_closed(subset) {
            found.push(subset.clone());
        }
        return;
    }
    for x in start..=top {
        if (top - x + 1) < left as u64 {
            break;
        }
        subset.push(x);
        choose(x + 1, top, left - 1, subset, found);
        subset.pop();
    }
}

fn complement_closed(gaps: &[u64]) -> bool {
    let is_gap = |n: u64| gaps.contains(&n);
    let bound = gaps.last().copied().unwrap_or(0);
    for a in 1..=bound {
        if is_gap(a) {
            continue;
        }
        for b in a..=bound {
            if !is_gap(b) && is_gap(a + b) {
                return false;
            }
        }
    }
    true
}

/// λ straight from the definition: gaps ℓ with ℓ + n a member for every
/// nonzero member n (members up to F + ℓ suffice, beyond that all sums are members).
pub fn lambda_by_definition(s: &NumericalSemigroup) -> usize {
    let f = s.frobenius();
    s.gaps()
        .iter()
        .filter(|&&l| {
            let l = l as i64;
            (1..=f + 1).filter(|&n| s.contains(n)).all(|n| s.contains(l + n))
        })
        .count()
}

pub fn all_up_to_genus(max_g: usize) -> Vec<NumericalSemigroup> {
    (0..=max_g)
        .flat_map(|g| semigroups_of_genus(g).unwrap())
        .collect()
}

pub fn gap_set(s: &NumericalSemigroup) -> BTreeSet<u64> {
    s.gaps().iter().copied().collect()
}

//! Numerical semigroups: construction, membership and the classical invariants
//! (genus, Frobenius number, Apéry sets, the End-set, symmetry and weights).

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A cofinite submonoid of the nonnegative integers.
///
/// Every integer above `frobenius` is a member; membership below it is
/// tabulated. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    min_gens: Vec<u64>,
    frobenius: i64,
    /// `membership[n]` for `n` in `0..=max(frobenius, 0)`.
    membership: Vec<bool>,
    gaps: Vec<u64>,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, reduced to its minimal generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NonCoprime(gcd));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0] as usize;

        // Grow the table until `smallest` consecutive members appear; everything
        // past that run is a member.
        let mut table = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let member = sorted
                .iter()
                .map(|&g| g as usize)
                .take_while(|&g| g <= n)
                .any(|g| table[n - g]);
            table.push(member);
            run = if member { run + 1 } else { 0 };
        }
        let frobenius = n as i64 - run as i64;
        table.truncate(frobenius.max(0) as usize + 1);
        Ok(Self::from_table(table, frobenius))
    }

    /// The semigroup whose set of gaps is exactly `gap_set`.
    pub fn from_gaps(gap_set: &BTreeSet<u64>) -> Result<Self> {
        if gap_set.contains(&0) {
            return Err(Error::NotASemigroup { a: 0, b: 0, sum: 0 });
        }
        let frobenius = gap_set.iter().next_back().map_or(-1, |&f| f as i64);
        let len = frobenius.max(0) as usize + 1;
        let table: Vec<bool> = (0..len).map(|n| !gap_set.contains(&(n as u64))).collect();
        for a in 1..len {
            if !table[a] {
                continue;
            }
            for b in a..len - a {
                if table[b] && !table[a + b] {
                    return Err(Error::NotASemigroup {
                        a: a as u64,
                        b: b as u64,
                        sum: (a + b) as u64,
                    });
                }
            }
        }
        Ok(Self::from_table(table, frobenius))
    }

    /// Builds the value from a closed membership table over `[0, max(F, 0)]`.
    fn from_table(membership: Vec<bool>, frobenius: i64) -> Self {
        let contains = |n: i64| n >= 0 && (n > frobenius || membership[n as usize]);
        let gaps: Vec<u64> = (1..=frobenius.max(0))
            .filter(|&n| !contains(n))
            .map(|n| n as u64)
            .collect();
        let multiplicity = (1..).find(|&n| contains(n)).unwrap();
        // Minimal generators are the nonzero members that are not a sum of two
        // nonzero members; all of them lie in [m, F + m].
        let min_gens = (multiplicity..=frobenius.max(0) + multiplicity)
            .filter(|&n| contains(n))
            .filter(|&n| !(multiplicity..=n / 2).any(|a| contains(a) && contains(n - a)))
            .map(|n| n as u64)
            .collect();
        Self {
            min_gens,
            frobenius,
            membership,
            gaps,
        }
    }

    /// The ordinary semigroup `{0, g+1, g+2, ...}` of genus `g`.
    pub fn ordinary(genus: u64) -> Self {
        let gens: Vec<u64> = (genus + 1..=2 * genus + 1).collect();
        Self::from_generators(&gens).expect("consecutive integers are coprime")
    }

    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    pub fn multiplicity(&self) -> u64 {
        self.min_gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.min_gens.len()
    }

    /// Largest gap, or −1 for ℕ itself.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && (n > self.frobenius || self.membership[n as usize])
    }

    fn require_genus(&self, required: usize) -> Result<()> {
        if self.genus() < required {
            Err(Error::GenusTooSmall {
                genus: self.genus(),
                required,
            })
        } else {
            Ok(())
        }
    }

    /// For each residue class modulo `m`, the least member in that class.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>> {
        if m <= 0 || !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        let mut apery = vec![None; m as usize];
        let mut found = 0;
        let mut n = 0i64;
        while found < m {
            if self.contains(n) {
                let slot = &mut apery[(n % m) as usize];
                if slot.is_none() {
                    *slot = Some(n);
                    found += 1;
                }
            }
            n += 1;
        }
        Ok(apery.into_iter().map(Option::unwrap).collect())
    }

    /// Whether `ell + n` is a member for every nonzero member `n`.
    ///
    /// Checked on minimal generators only: any nonzero member is a generator
    /// plus a member, and the semigroup is closed under addition.
    pub fn in_end_set(&self, ell: i64) -> bool {
        ell >= 0 && self.min_gens.iter().all(|&n| self.contains(ell + n as i64))
    }

    /// Gaps belonging to End(N).
    pub fn end_set_gaps(&self) -> Result<Vec<u64>> {
        self.require_genus(1)?;
        Ok(self
            .gaps
            .iter()
            .copied()
            .filter(|&l| self.in_end_set(l as i64))
            .collect())
    }

    /// λ(N) = #(End(N) ∖ N), the type of the semigroup ring.
    pub fn lambda(&self) -> Result<usize> {
        Ok(self.end_set_gaps()?.len())
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_genus(1)?;
        let by_frobenius = self.frobenius == 2 * self.genus() as i64 - 1;
        debug_assert_eq!(
            by_frobenius,
            (0..=self.frobenius).all(|n| self.contains(n) != self.contains(self.frobenius - n))
        );
        Ok(by_frobenius)
    }

    /// Effective weight: over all gaps, the number of minimal generators below it.
    pub fn ewt(&self) -> Result<usize> {
        self.require_genus(1)?;
        Ok(self
            .gaps
            .iter()
            .map(|&l| self.min_gens.iter().take_while(|&&n| n < l).count())
            .sum())
    }

    /// Classical weight Σ (ℓ_i − i), with 1-based gap index.
    pub fn wt(&self) -> Result<u64> {
        self.require_genus(1)?;
        Ok(self
            .gaps
            .iter()
            .enumerate()
            .map(|(i, &l)| l - (i as u64 + 1))
            .sum())
    }

    /// Members of the semigroup in `[0, bound]`.
    pub fn members_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&n| self.contains(n))
    }

    /// The semigroup with the minimal generator `m` removed. `m` must be a
    /// minimal generator; the result has genus one more.
    pub fn remove_generator(&self, m: u64) -> Option<Self> {
        if !self.min_gens.contains(&m) {
            return None;
        }
        let frobenius = self.frobenius.max(m as i64);
        let table = (0..=frobenius)
            .map(|n| n != m as i64 && self.contains(n))
            .collect();
        Some(Self::from_table(table, frobenius))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn six_seven_eight() {
        let s = sg(&[6, 7, 8]);
        assert_eq!(s.genus(), 9);
        assert_eq!(s.frobenius(), 17);
        assert_eq!(s.min_gens(), &[6, 7, 8]);
        assert!(!s.contains(17));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert!(s.contains(18));
        assert!(s.is_symmetric().unwrap());
        assert_eq!(s.ewt().unwrap(), 12);
    }

    #[test]
    fn full_semigroup() {
        let s = sg(&[1]);
        assert_eq!(s.genus(), 0);
        assert_eq!(s.frobenius(), -1);
        assert!(s.gaps().is_empty());
        assert_eq!(s.apery_set(1).unwrap(), vec![0]);
        assert_eq!(
            s.lambda(),
            Err(Error::GenusTooSmall {
                genus: 0,
                required: 1
            })
        );
    }

    #[test]
    fn non_minimal_input_is_reduced() {
        let s = sg(&[6, 9, 10, 13, 14, 15, 20]);
        assert_eq!(s.min_gens(), &[6, 9, 10, 13, 14]);
        assert_eq!(s.genus(), 9);
        assert_eq!(s.frobenius(), 17);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::EmptyInput));
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NonCoprime(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(Error::NonPositiveGenerator)
        );
        let bad: BTreeSet<u64> = [1, 4].into_iter().collect();
        assert!(matches!(
            NumericalSemigroup::from_gaps(&bad),
            Err(Error::NotASemigroup { .. })
        ));
    }

    #[test]
    fn from_gaps_examples() {
        let gaps: BTreeSet<u64> = [1, 2, 4, 5, 8].into_iter().collect();
        assert_eq!(NumericalSemigroup::from_gaps(&gaps).unwrap().min_gens(), &[3, 7, 11]);
        let gaps: BTreeSet<u64> = [1, 2, 3, 5, 7, 9].into_iter().collect();
        assert_eq!(
            NumericalSemigroup::from_gaps(&gaps).unwrap().min_gens(),
            &[4, 6, 11, 13]
        );
        assert_eq!(
            NumericalSemigroup::from_gaps(&BTreeSet::new()).unwrap(),
            sg(&[1])
        );
    }

    #[test]
    fn apery_sets() {
        assert_eq!(sg(&[3, 7, 11]).apery_set(3).unwrap(), vec![0, 7, 11]);
        // Residues 3, 4, 5 of <6,7,8> are first reached at 15 = 7+8, 16 = 8+8
        // and 23 = 7+8+8.
        let apery = sg(&[6, 7, 8]).apery_set(6).unwrap();
        assert_eq!(apery, vec![0, 7, 8, 15, 16, 23]);
        // Selmer: g = (sum of Apery elements)/m - (m-1)/2 and F = max - m.
        assert_eq!(apery.iter().sum::<i64>() * 2 / 6 - 5, 2 * 9);
        assert_eq!(apery.iter().max().unwrap() - 6, 17);
        assert_eq!(sg(&[6, 7, 8]).apery_set(5), Err(Error::NotAMember(5)));
    }

    #[test]
    fn end_set_and_lambda() {
        assert_eq!(sg(&[3, 7, 11]).end_set_gaps().unwrap(), vec![4, 8]);
        assert_eq!(sg(&[3, 7, 11]).lambda().unwrap(), 2);
        assert_eq!(sg(&[6, 7, 8]).end_set_gaps().unwrap(), vec![17]);
    }

    #[test]
    fn weights() {
        let s = sg(&[6, 7, 15]);
        assert!(s.is_symmetric().unwrap());
        assert_eq!(s.genus(), 12);
        assert_eq!(s.ewt().unwrap(), 17);
        let ordinary = NumericalSemigroup::ordinary(5);
        assert_eq!(ordinary.wt().unwrap(), 0);
        assert_eq!(ordinary.ewt().unwrap(), 0);
    }

    #[test]
    fn remove_generator_raises_genus() {
        let s = sg(&[3, 4, 5]);
        let child = s.remove_generator(5).unwrap();
        assert_eq!(child.genus(), s.genus() + 1);
        assert_eq!(child.frobenius(), 5);
        assert_eq!(child.min_gens(), &[3, 4]);
        assert!(s.remove_generator(6).is_none());
    }
}

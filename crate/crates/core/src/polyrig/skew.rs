use super::poly::Polynomial;

/// A 5×5 skew-symmetric matrix stored by its ten entries above the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix5 {
    upper: Vec<Polynomial>,
}

/// Position of `(i, j)`, `i < j < 5`, in row-major upper-triangular order.
fn slot(i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < 5);
    i * (9 - i) / 2 + (j - i - 1)
}

impl SkewMatrix5 {
    /// `entry(i, j)` is called for every `0 ≤ i < j < 5`.
    pub fn from_fn(mut entry: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut upper = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                upper.push(entry(i, j));
            }
        }
        let first = upper[0].clone();
        assert!(upper.iter().all(|p| p.same_ring(&first)), "entries over different rings");
        Self { upper }
    }

    /// Zero-based entry; antisymmetric with zero diagonal.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[slot(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.upper[slot(j, i)],
            std::cmp::Ordering::Equal => Polynomial::zero(self.upper[0].ring()),
        }
    }

    /// The ten entries above the diagonal, row by row.
    pub fn upper_entries(&self) -> &[Polynomial] {
        &self.upper
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            upper: self.upper.iter().map(f).collect(),
        }
    }

    /// Pfaffian of the 4×4 principal submatrix on rows `a < b < c < d`.
    pub fn pfaffian4(&self, a: usize, b: usize, c: usize, d: usize) -> Polynomial {
        let m = |i, j| self.entry(i, j);
        let p = &(&m(a, b) * &m(c, d)) - &(&m(a, c) * &m(b, d));
        &p + &(&m(a, d) * &m(b, c))
    }

    /// The five 4×4 sub-Pfaffians; entry `k` deletes row and column `k`.
    pub fn sub_pfaffians(&self) -> Vec<Polynomial> {
        (0..5)
            .map(|k| {
                let rest: Vec<usize> = (0..5).filter(|&i| i != k).collect();
                self.pfaffian4(rest[0], rest[1], rest[2], rest[3])
            })
            .collect()
    }
}

pub fn sub_pfaffians(m: &SkewMatrix5) -> Vec<Polynomial> {
    m.sub_pfaffians()
}

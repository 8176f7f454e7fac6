//! Fraction-free row echelon form over the integers.
//!
//! Vectors here are short (at most the rank of a root system) and entries
//! stay small after dividing each row by its content, so `i128` is ample.

use num_integer::Integer;

/// An incrementally built echelon basis of a subspace of `Q^dim`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Dimension of the span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis. The result is zero iff `v` lies in the span.
    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        let mut w: Vec<i128> = v.iter().map(|&x| i128::from(x)).collect();
        for (pivot, row) in &self.rows {
            let coeff = w[*pivot];
            if coeff == 0 {
                continue;
            }
            let lead = row[*pivot];
            for (x, r) in w.iter_mut().zip(row) {
                *x = *x * lead - coeff * r;
            }
            normalize(&mut w);
        }
        w
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Add `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let w = self.reduce(v);
        match w.iter().position(|&x| x != 0) {
            None => false,
            Some(pivot) => {
                // Keep earlier rows reduced at the new pivot as well.
                for (_, row) in &mut self.rows {
                    let coeff = row[pivot];
                    if coeff != 0 {
                        let lead = w[pivot];
                        for (x, r) in row.iter_mut().zip(&w) {
                            *x = *x * lead - coeff * r;
                        }
                        normalize(row);
                    }
                }
                self.rows.push((pivot, w));
                true
            }
        }
    }
}

fn normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

/// Rank over Q of a family of integer vectors.
pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a [i64]>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let vs: [&[i64]; 3] = [&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]];
        assert_eq!(rank(vs), 2);
        let mut e = Echelon::new();
        assert!(e.insert(&[2, 4, 0]));
        assert!(!e.insert(&[1, 2, 0]));
        assert!(e.insert(&[0, 3, 3]));
        assert!(e.contains(&[1, 5, 3]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(rank(std::iter::empty()), 0);
    }
}

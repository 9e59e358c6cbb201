use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector `α = (α_1, ..., α_n)` of a standard monomial `x^α`.
///
/// The `Ord` instance is deglex: total degree first, then the larger
/// exponent at the first differing position wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|α|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Index of the first nonzero exponent.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn with_incremented(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        ExponentVector(v)
    }

    /// `α - e_i`; the caller guarantees `α_i > 0`.
    pub fn with_decremented(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] -= 1;
        ExponentVector(v)
    }

    /// All exponent vectors of length `n` with total degree at most `bound`,
    /// in ascending deglex order.
    pub fn all_up_to(n: usize, bound: u32) -> Vec<Self> {
        fn fill(prefix: &mut Vec<u32>, n: usize, remaining: u32, out: &mut Vec<ExponentVector>) {
            if prefix.len() == n {
                if remaining == 0 {
                    out.push(ExponentVector(prefix.clone()));
                }
                return;
            }
            for e in 0..=remaining {
                prefix.push(e);
                fill(prefix, n, remaining - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for d in 0..=bound {
            let mut level = Vec::new();
            fill(&mut Vec::new(), n, d, &mut level);
            level.sort();
            out.extend(level);
        }
        out
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Deglex comparison of two exponent vectors of equal length.
pub fn deglex_compare(a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::MismatchedArity(a.len(), b.len()));
    }
    Ok(a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn deglex_examples() {
        assert_eq!(deglex_compare(&ev(&[2, 0]), &ev(&[1, 1])).unwrap(), Ordering::Greater);
        assert_eq!(deglex_compare(&ev(&[1, 1]), &ev(&[1, 1])).unwrap(), Ordering::Equal);
        assert_eq!(deglex_compare(&ev(&[0, 3]), &ev(&[2, 0])).unwrap(), Ordering::Greater);
        assert_eq!(deglex_compare(&ev(&[1]), &ev(&[1, 0])), Err(Error::MismatchedArity(1, 2)));
    }

    #[test]
    fn bounded_enumeration_is_sorted_and_complete() {
        let all = ExponentVector::all_up_to(3, 3);
        // C(3 + 3, 3) monomials of degree <= 3 in 3 variables
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}

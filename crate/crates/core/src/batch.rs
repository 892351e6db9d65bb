//! Many independent matrices at once. Results keep input order.

use crate::category::AdjacencyMatrix;
use crate::error::Result;
use crate::zeta::{check_conjecture_with, ConjectureReport};

/// Applies `f` to every item, in parallel when the `parallel` feature is on.
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

pub fn check_all(
    inputs: &[AdjacencyMatrix],
    order: usize,
    tolerance: f64,
) -> Vec<Result<ConjectureReport>> {
    map_ordered(inputs, |a| check_conjecture_with(a, order, tolerance))
}

/// Single-threaded reference for [`check_all`].
pub fn check_all_sequential(
    inputs: &[AdjacencyMatrix],
    order: usize,
    tolerance: f64,
) -> Vec<Result<ConjectureReport>> {
    inputs
        .iter()
        .map(|a| check_conjecture_with(a, order, tolerance))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::DEFAULT_TOLERANCE;

    #[test]
    fn parallel_matches_sequential() {
        let inputs: Vec<AdjacencyMatrix> = (1..=6)
            .map(|k| AdjacencyMatrix::validate(&[vec![k, 1], vec![2, 1]]).unwrap())
            .collect();
        let par = check_all(&inputs, 12, DEFAULT_TOLERANCE);
        let seq = check_all_sequential(&inputs, 12, DEFAULT_TOLERANCE);
        assert_eq!(par.len(), seq.len());
        for (p, s) in par.iter().zip(&seq) {
            let (p, s) = (p.as_ref().unwrap(), s.as_ref().unwrap());
            assert!(p.closed_form.same_as(&s.closed_form));
            assert_eq!(p.all_pass(), s.all_pass());
        }
    }
}

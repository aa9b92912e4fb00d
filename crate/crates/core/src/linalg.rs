//! Exact linear algebra over ℚ.

use num_traits::Zero;

use crate::rational::Q;

/// Rank by Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..cols].iter_mut().zip(&top[rank][col..cols]) {
                *x -= y * &factor;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

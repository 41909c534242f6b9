//! Weighted monomial enumeration (bounded lattice knapsack).
//!
//! Everything downstream — the quasismoothness filter, edge point counts —
//! reduces to questions about the set of exponent vectors `e >= 0` with
//! `sum(e_i * w_i) = d`.

use alloc::vec;
use alloc::vec::Vec;

/// All exponent vectors `e` with `sum(e_i * w_i) = d`, in ascending
/// lexicographic order.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(weights.len());
    descend(weights, d, &mut prefix, &mut out);
    out
}

fn descend(weights: &[u32], remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    match weights {
        [] => {
            if remaining == 0 {
                out.push(prefix.clone());
            }
        }
        [w, rest @ ..] => {
            for e in 0..=remaining / w {
                prefix.push(e);
                descend(rest, remaining - e * w, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Whether any monomial of degree `d` exists in the given weights.
pub fn has_monomial_of_degree(weights: &[u32], d: u32) -> bool {
    // Coin-problem reachability table up to d.
    let mut reachable = vec![false; d as usize + 1];
    reachable[0] = true;
    for &w in weights {
        let w = w as usize;
        if w == 0 || w > d as usize {
            continue;
        }
        for t in w..=d as usize {
            if reachable[t - w] {
                reachable[t] = true;
            }
        }
    }
    reachable[d as usize]
}

/// The number of solutions `(p, q) >= 0` of `p*w1 + q*w2 = d`.
pub fn count_binary_monomials(w1: u32, w2: u32, d: u32) -> u32 {
    (0..=d / w1)
        .filter(|&p| (d - p * w1).is_multiple_of(w2))
        .count() as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_examples() {
        let m = monomials_of_degree(&[2, 2], 8);
        assert_eq!(
            m,
            vec![
                vec![0, 4],
                vec![1, 3],
                vec![2, 2],
                vec![3, 1],
                vec![4, 0]
            ]
        );

        let m = monomials_of_degree(&[3, 6], 15);
        assert_eq!(m, vec![vec![1, 2], vec![3, 1], vec![5, 0]]);

        assert!(monomials_of_degree(&[7], 13).is_empty());
    }

    #[test]
    fn reachability_agrees_with_enumeration() {
        for (weights, d) in [(&[2u32, 5][..], 13u32), (&[3, 4], 5), (&[1, 6, 8], 23)] {
            assert_eq!(
                has_monomial_of_degree(weights, d),
                !monomials_of_degree(weights, d).is_empty()
            );
        }
    }

    #[test]
    fn binary_counts() {
        assert_eq!(count_binary_monomials(2, 2, 8), 5);
        assert_eq!(count_binary_monomials(3, 6, 15), 3);
        assert_eq!(count_binary_monomials(22, 33, 66), 2);
    }
}

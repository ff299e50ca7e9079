//! Littlewood–Richardson coefficients by symbol insertion.
//!
//! The symbols `u_{i,j}` of the `i`th row of `μ` are added to `λ` one row of
//! `μ` at a time. Each batch must extend the current shape to a partition,
//! and the placements must satisfy
//!
//! * (a) within a row of `μ`, `u_{i,y}` with `y < j` sits in a later column
//!   than `u_{i,j}`;
//! * (b) for `x < i`, `u_{x,j}` sits in an earlier row than `u_{i,j}`.
//!
//! Condition (a) forces each batch to be a horizontal strip labelled from the
//! right, so in a strip the labels increase from the top row downwards. Both
//! conditions are checked while the strip is being built.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::partitions::Partition;

type Key = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<Key, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^ν_{λ,μ}`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() {
        return u64::from(lambda == nu);
    }
    if lambda.is_empty() {
        return u64::from(mu == nu);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = cache().read().unwrap().get(&key) {
        return v;
    }
    let mut search = Insertion {
        mu: mu.parts(),
        nu: nu.parts(),
        memo: HashMap::new(),
    };
    let mut shape = lambda.parts().to_vec();
    shape.resize(nu.length(), 0);
    let value = search.count(0, &shape, &[]);
    cache().write().unwrap().insert(key, value);
    value
}

/// `c^ν_{λ,μ,η} = Σ_ξ c^ξ_{λ,μ} c^ν_{ξ,η}`.
pub fn lr_coeff3(lambda: &Partition, mu: &Partition, eta: &Partition, nu: &Partition) -> u64 {
    let mid = lambda.size() + mu.size();
    if mid + eta.size() != nu.size() {
        return 0;
    }
    Partition::all(mid)
        .iter()
        .filter(|xi| nu.contains(xi) && xi.contains(lambda) && xi.contains(mu))
        .map(|xi| {
            let first = lr_coeff(lambda, mu, xi);
            if first == 0 {
                0
            } else {
                first * lr_coeff(xi, eta, nu)
            }
        })
        .sum()
}

struct Insertion<'a> {
    mu: &'a [usize],
    nu: &'a [usize],
    memo: HashMap<(usize, Vec<usize>, Vec<usize>), u64>,
}

impl Insertion<'_> {
    /// Counts completions after the first `k` rows of `μ` have been placed;
    /// `prev_rows[j]` is the row (1-indexed) of `u_{k,j+1}`.
    fn count(&mut self, k: usize, shape: &[usize], prev_rows: &[usize]) -> u64 {
        if k == self.mu.len() {
            return u64::from(shape == self.nu);
        }
        let key = (k, shape.to_vec(), prev_rows.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut strips = Vec::new();
        let mut rows = Vec::with_capacity(self.mu[k]);
        let mut next = shape.to_vec();
        self.strips(
            k,
            0,
            self.mu[k],
            shape,
            prev_rows,
            &mut next,
            &mut rows,
            &mut strips,
        );
        let total = strips
            .into_iter()
            .map(|(new_shape, new_rows)| self.count(k + 1, &new_shape, &new_rows))
            .sum();
        self.memo.insert(key, total);
        total
    }

    /// Enumerates horizontal strips of `remaining` boxes added to `shape` in
    /// rows `row_idx..`, staying inside `ν` and respecting condition (b).
    #[allow(clippy::too_many_arguments)]
    fn strips(
        &self,
        k: usize,
        row_idx: usize,
        remaining: usize,
        shape: &[usize],
        prev_rows: &[usize],
        next: &mut Vec<usize>,
        rows: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if remaining == 0 {
            out.push((next.clone(), rows.clone()));
            return;
        }
        if row_idx == self.nu.len() {
            return;
        }
        // Horizontal strip: the new row may not pass the old row above it.
        let ceiling = if row_idx == 0 {
            self.nu[0]
        } else {
            self.nu[row_idx].min(shape[row_idx - 1])
        };
        let room = ceiling.saturating_sub(shape[row_idx]).min(remaining);
        let row_number = row_idx + 1;
        for add in (0..=room).rev() {
            if add > 0 && k > 0 {
                // Labels rows.len()+1 ..= rows.len()+add land in this row.
                let last_label = rows.len() + add;
                if prev_rows[last_label - 1] >= row_number {
                    continue;
                }
            }
            next[row_idx] = shape[row_idx] + add;
            rows.extend(std::iter::repeat_n(row_number, add));
            self.strips(k, row_idx + 1, remaining - add, shape, prev_rows, next, rows, out);
            rows.truncate(rows.len() - add);
        }
        next[row_idx] = shape[row_idx];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(lr_coeff(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[2, 2])), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn vanishing_outside_containment() {
        assert_eq!(lr_coeff(&p(&[3]), &p(&[1]), &p(&[2, 2])), 0);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn three_factor_examples() {
        let e = Partition::empty();
        assert_eq!(lr_coeff3(&e, &e, &e, &e), 1);
        assert_eq!(lr_coeff3(&p(&[1]), &p(&[1]), &p(&[1]), &p(&[3])), 1);
        assert_eq!(lr_coeff3(&p(&[1]), &p(&[1]), &p(&[1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coeff3(&p(&[1]), &p(&[1]), &p(&[1]), &p(&[1, 1, 1])), 1);
    }

    #[test]
    fn induced_dimension_identity() {
        let lam = p(&[2, 1]);
        let mu = p(&[3, 2, 1]);
        let total: u64 = Partition::all(9)
            .iter()
            .map(|nu| lr_coeff(&lam, &mu, nu) * crate::sym_characters::dimension(nu))
            .sum();
        // Σ_ν c^ν f^ν = C(9,3) f^λ f^μ = 84 * 2 * 16
        assert_eq!(total, 84 * 2 * 16);
    }
}

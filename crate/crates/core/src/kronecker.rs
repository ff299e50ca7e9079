//! Kronecker coefficients `g^{ν_[n]}_{λ_[n],μ_[n]}` and reduced Kronecker
//! coefficients `ḡ^ν_{λ,μ}`, each available through several independent
//! routes so they can be checked against one another:
//!
//! * the character oracle on padded partitions ([`kron_padded_oracle`]);
//! * the alternating sum over the `P_{r+s}(n)`-block of `ν` ([`kron_via_blocks`]);
//! * the alternating sum over dagger partitions ([`kron_via_dagger`]);
//! * the stable limit ([`reduced_kron`]) and the Littlewood–Richardson
//!   expansion of it ([`reduced_kron_via_lr`]);
//! * closed formulas when `ν_[n]` is a two-row or hook partition.
//!
//! All partitions passed in are the reduced ones, with the first row of the
//! padded partition removed.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::lr::lr_coeff3;
use crate::partitions::{block_chain, dagger, min_padding, pad, Partition};
use crate::sym_characters::kron_oracle;

/// Smallest `n` from which `g^{ν_[n]}_{λ_[n],μ_[n]}` equals `ḡ^ν_{λ,μ}`:
/// `min{|λ|+|μ|+ν_1, |λ|+|ν|+μ_1, |ν|+|μ|+λ_1}`.
pub fn stability_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    let (r, s, t) = (lambda.size(), mu.size(), nu.size());
    (r + s + nu.first())
        .min(r + t + mu.first())
        .min(t + s + lambda.first())
}

/// The `n` at which [`reduced_kron`] evaluates: the stability bound, raised if
/// needed so that all three paddings exist.
pub fn stable_n(lambda: &Partition, mu: &Partition, nu: &Partition) -> usize {
    stability_bound(lambda, mu, nu)
        .max(min_padding(lambda))
        .max(min_padding(mu))
        .max(min_padding(nu))
}

/// `g^{ν_[n]}_{λ_[n],μ_[n]}` straight from the character table of `S_n`.
pub fn kron_padded_oracle(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<u64> {
    let (a, b, c) = (pad(lambda, n)?, pad(mu, n)?, pad(nu, n)?);
    kron_oracle(&a.to_partition(), &b.to_partition(), &c.to_partition())
}

type Key = (Partition, Partition, Partition);

fn reduced_cache() -> &'static RwLock<HashMap<Key, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `ḡ^ν_{λ,μ}`, evaluated as the Kronecker coefficient at [`stable_n`].
/// Zero whenever `|ν| > |λ| + |μ|`.
pub fn reduced_kron(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.size() > lambda.size() + mu.size() {
        return Ok(0);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = reduced_cache().read().unwrap().get(&key) {
        return Ok(v);
    }
    let value = kron_padded_oracle(lambda, mu, nu, stable_n(lambda, mu, nu))?;
    reduced_cache().write().unwrap().insert(key, value);
    Ok(value)
}

fn nonnegative(sum: i64, what: &str) -> Result<u64> {
    u64::try_from(sum).map_err(|_| Error::Inconsistent(format!("{what} produced {sum}")))
}

fn check_paddings(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<()> {
    pad(lambda, n)?;
    pad(mu, n)?;
    pad(nu, n)?;
    Ok(())
}

/// `g = Σ_{i=0}^{t} (-1)^i ḡ^{ν^(i)}_{λ,μ}` over the block chain
/// `ν = ν^(0) ↪_n ν^(1) ↪_n ... ↪_n ν^(t)` of `ν` in `Λ_{≤|λ|+|μ|}`;
/// zero when `|ν| > |λ| + |μ|`.
pub fn kron_via_blocks(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<u64> {
    check_paddings(lambda, mu, nu, n)?;
    let degree = lambda.size() + mu.size();
    if nu.size() > degree {
        return Ok(0);
    }
    let chain = block_chain(nu, n, degree);
    debug_assert_eq!(chain.entries().first(), Some(nu));
    let mut sum = 0i64;
    for (i, entry) in chain.entries().iter().enumerate() {
        let term = reduced_kron(lambda, mu, entry)? as i64;
        sum += if i % 2 == 0 { term } else { -term };
    }
    nonnegative(sum, "block alternating sum")
}

/// `g = Σ_{i=0}^{l} (-1)^i ḡ^{ν_[n]^{†i}}_{λ,μ}` with
/// `l = ℓ(λ_[n]) ℓ(μ_[n]) - 1`. Needs `n >= 1`: at `n = 0` the sum is empty.
pub fn kron_via_dagger(lambda: &Partition, mu: &Partition, nu: &Partition, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::OutOfRange { n, min_n: 1 });
    }
    let (a, b, c) = (pad(lambda, n)?, pad(mu, n)?, pad(nu, n)?);
    let terms = a.length() * b.length();
    let mut sum = 0i64;
    for i in 0..terms {
        let term = reduced_kron(lambda, mu, &dagger(&c, i))? as i64;
        sum += if i % 2 == 0 { term } else { -term };
    }
    nonnegative(sum, "dagger alternating sum")
}

/// `ḡ^ν_{λ,μ} = Σ c^ν_{α,β,π} c^λ_{α,ρ,γ} c^μ_{γ,σ,β} g^π_{ρ,σ}` summed over
/// `l_1 + 2 l_2 = |λ| + |μ| - |ν|`, `α ⊢ |λ|-l_1-l_2`, `β ⊢ |μ|-l_1-l_2`,
/// `π, ρ, σ ⊢ l_1`, `γ ⊢ l_2`.
pub fn reduced_kron_via_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let (r, s) = (lambda.size(), mu.size());
    let Some(l) = (r + s).checked_sub(nu.size()) else {
        return Ok(0);
    };
    let mut total = 0u64;
    for l2 in 0..=l / 2 {
        let l1 = l - 2 * l2;
        let (Some(a), Some(b)) = (r.checked_sub(l1 + l2), s.checked_sub(l1 + l2)) else {
            continue;
        };
        let small = Partition::all(l1);
        let gammas = Partition::all(l2);
        for alpha in Partition::all(a) {
            if !lambda.contains(&alpha) || !nu.contains(&alpha) {
                continue;
            }
            for beta in Partition::all(b) {
                if !mu.contains(&beta) || !nu.contains(&beta) {
                    continue;
                }
                for pi in &small {
                    let c_nu = lr_coeff3(&alpha, &beta, pi, nu);
                    if c_nu == 0 {
                        continue;
                    }
                    for gamma in &gammas {
                        for rho in &small {
                            let c_lambda = lr_coeff3(&alpha, rho, gamma, lambda);
                            if c_lambda == 0 {
                                continue;
                            }
                            for sigma in &small {
                                let c_mu = lr_coeff3(gamma, sigma, &beta, mu);
                                if c_mu == 0 {
                                    continue;
                                }
                                let g = kron_oracle(rho, sigma, pi)?;
                                total += c_nu * c_lambda * c_mu * g;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(total)
}

/// `g^{(n-k,k)}_{λ_[n],μ_[n]} = Σ c^λ_{(r-l_1-l_2),σ,γ} c^μ_{γ,σ,(s-l_1-l_2)}`
/// over `l_1 + 2 l_2 = r + s - k`, `σ ⊢ l_1`, `γ ⊢ l_2`.
///
/// Valid for `n >= min{|λ|+μ_1+k, |μ|+λ_1+k}`; smaller `n` is an error.
pub fn kron_two_row(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<u64> {
    let nu = Partition::row_shape(k);
    check_paddings(lambda, mu, &nu, n)?;
    let (r, s) = (lambda.size(), mu.size());
    let min_n = (r + mu.first() + k).min(s + lambda.first() + k);
    if n < min_n {
        return Err(Error::OutOfRange { n, min_n });
    }
    Ok(closed_sum(lambda, mu, k, |a, b, sigma, gamma| {
        lr_coeff3(&Partition::row_shape(a), sigma, gamma, lambda)
            * lr_coeff3(gamma, sigma, &Partition::row_shape(b), mu)
    }))
}

/// `g^{(n-k,1^k)}_{λ_[n],μ_[n]} = Σ c^λ_{(1^{r-l_1-l_2}),σ,γ} c^μ_{γ,σ',(1^{s-l_1-l_2})}`
/// over `l_1 + 2 l_2 = r + s - k`, `σ ⊢ l_1`, `γ ⊢ l_2`.
///
/// Valid for `n >= min{|λ|+|μ|+1, |μ|+λ_1+k, |λ|+μ_1+k}`; smaller `n` is an error.
pub fn kron_hook(lambda: &Partition, mu: &Partition, k: usize, n: usize) -> Result<u64> {
    let nu = Partition::column_shape(k);
    check_paddings(lambda, mu, &nu, n)?;
    let (r, s) = (lambda.size(), mu.size());
    let min_n = (r + s + 1).min(s + lambda.first() + k).min(r + mu.first() + k);
    if n < min_n {
        return Err(Error::OutOfRange { n, min_n });
    }
    Ok(closed_sum(lambda, mu, k, |a, b, sigma, gamma| {
        let left = lr_coeff3(&Partition::column_shape(a), sigma, gamma, lambda);
        if left == 0 {
            return 0;
        }
        left * lr_coeff3(gamma, &sigma.conjugate(), &Partition::column_shape(b), mu)
    }))
}

fn closed_sum(
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    term: impl Fn(usize, usize, &Partition, &Partition) -> u64,
) -> u64 {
    let (r, s) = (lambda.size(), mu.size());
    let Some(l) = (r + s).checked_sub(k) else {
        return 0;
    };
    let mut total = 0;
    for l2 in 0..=l / 2 {
        let l1 = l - 2 * l2;
        let (Some(a), Some(b)) = (r.checked_sub(l1 + l2), s.checked_sub(l1 + l2)) else {
            continue;
        };
        for sigma in Partition::all(l1) {
            for gamma in Partition::all(l2) {
                total += term(a, b, &sigma, &gamma);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::lr_coeff;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stability_bound_examples() {
        let e = Partition::empty();
        assert_eq!(stability_bound(&e, &e, &e), 0);
        assert_eq!(stability_bound(&p(&[1]), &p(&[1]), &p(&[2])), 4);
        assert_eq!(stability_bound(&p(&[1]), &p(&[1]), &p(&[1, 1])), 3);
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(reduced_kron(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(reduced_kron(&p(&[1]), &p(&[1]), &Partition::empty()).unwrap(), 1);
        assert_eq!(reduced_kron(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(
            reduced_kron(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])).unwrap(),
            lr_coeff(&p(&[1]), &p(&[1, 1]), &p(&[2, 1]))
        );
        assert_eq!(reduced_kron(&p(&[1]), &p(&[1]), &p(&[3])).unwrap(), 0);
    }

    #[test]
    fn via_lr_examples() {
        assert_eq!(reduced_kron_via_lr(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(
            reduced_kron_via_lr(&p(&[1]), &p(&[1]), &Partition::empty()).unwrap(),
            1
        );
        let x = p(&[2, 1]);
        assert_eq!(stability_bound(&x, &x, &x), 8);
        assert_eq!(
            reduced_kron_via_lr(&x, &x, &x).unwrap(),
            reduced_kron(&x, &x, &x).unwrap()
        );
    }

    #[test]
    fn blocks_and_dagger_small_n() {
        let one = p(&[1]);
        let e = Partition::empty();
        // S(1,1) ⊗ S(1,1) at n = 2: (2) ↔ ν = ∅, (1,1) ↔ ν = (1).
        assert_eq!(kron_via_blocks(&one, &one, &e, 2).unwrap(), 1);
        assert_eq!(kron_via_blocks(&one, &one, &one, 2).unwrap(), 0);
        assert_eq!(kron_via_dagger(&one, &one, &e, 2).unwrap(), 1);
        assert_eq!(kron_via_dagger(&one, &one, &one, 2).unwrap(), 0);
        assert_eq!(kron_via_blocks(&one, &one, &p(&[2]), 4).unwrap(), 1);
        assert_eq!(kron_via_dagger(&one, &one, &p(&[1, 1]), 5).unwrap(), 1);
        assert_eq!(kron_padded_oracle(&one, &one, &p(&[1, 1]), 5).unwrap(), 1);
    }

    #[test]
    fn padding_failures_are_reported() {
        let ll = p(&[1, 1]);
        assert!(matches!(
            kron_via_blocks(&ll, &ll, &p(&[2]), 2),
            Err(Error::NotPaddable { .. })
        ));
        assert!(matches!(
            kron_via_dagger(&ll, &ll, &ll, 2),
            Err(Error::NotPaddable { .. })
        ));
        let e = Partition::empty();
        assert_eq!(kron_via_blocks(&e, &e, &e, 0).unwrap(), 1);
        assert_eq!(
            kron_via_dagger(&e, &e, &e, 0),
            Err(Error::OutOfRange { n: 0, min_n: 1 })
        );
    }

    #[test]
    fn vanishing_beyond_degree() {
        let one = p(&[1]);
        assert_eq!(kron_via_blocks(&one, &one, &p(&[2, 1]), 6).unwrap(), 0);
    }

    #[test]
    fn closed_formula_examples() {
        let one = p(&[1]);
        assert_eq!(kron_two_row(&one, &one, 2, 4).unwrap(), 1);
        assert_eq!(kron_two_row(&one, &one, 0, 4).unwrap(), 1);
        assert_eq!(kron_hook(&one, &one, 2, 4).unwrap(), 1);
        assert_eq!(kron_hook(&one, &one, 1, 4).unwrap(), 1);
        let two = p(&[2]);
        assert_eq!(
            kron_two_row(&two, &two, 2, 8).unwrap(),
            kron_oracle(&p(&[6, 2]), &p(&[6, 2]), &p(&[6, 2])).unwrap()
        );
        let x = p(&[2, 1]);
        assert_eq!(
            kron_hook(&x, &x, 3, 9).unwrap(),
            kron_padded_oracle(&x, &x, &Partition::column_shape(3), 9).unwrap()
        );
    }

    #[test]
    fn closed_formulas_reject_small_n() {
        let two = p(&[2]);
        assert!(matches!(
            kron_two_row(&two, &two, 2, 5),
            Err(Error::OutOfRange { min_n: 6, .. })
        ));
        assert!(matches!(
            kron_hook(&two, &two, 2, 4),
            Err(Error::OutOfRange { min_n: 5, .. })
        ));
        assert!(kron_hook(&two, &two, 2, 5).is_ok());
    }
}

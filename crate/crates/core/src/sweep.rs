//! Cross-route verification suites, shared by the `sweep` subcommand and the
//! acceptance tests. Every suite returns one [`Check`] per case in a fixed
//! order, so reports are reproducible regardless of thread count.

use std::fmt;

use rayon::prelude::*;

use crate::diagram_algebra::{bell, dim_standard, restrict_multiplicity};
use crate::error::{Error, Result};
use crate::kronecker::{
    kron_hook, kron_padded_oracle, kron_two_row, kron_via_blocks, kron_via_dagger, reduced_kron,
    reduced_kron_via_lr, stability_bound,
};
use crate::partitions::{min_padding, Partition};
use crate::sym_characters::{kron_oracle, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Stabilization,
    Routes,
    Reduced,
    Closed,
    Dims,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Stabilization,
        Suite::Routes,
        Suite::Reduced,
        Suite::Closed,
        Suite::Dims,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Stabilization => "stabilization",
            Suite::Routes => "routes",
            Suite::Reduced => "reduced",
            Suite::Closed => "closed",
            Suite::Dims => "dims",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub case: String,
    /// `name=value` pairs, comma separated.
    pub values: String,
    pub ok: bool,
}

impl Check {
    fn new(suite: Suite, case: String, values: &[(&str, String)], ok: bool) -> Self {
        let values = values
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        Check {
            suite,
            case,
            values,
            ok,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Bounds {
    /// Largest `|λ|`, `|μ|` for the Kronecker suites.
    pub max_size: usize,
    /// Values of `n` are checked up to `stability_bound + extra`.
    pub extra: usize,
    /// Largest `k` for the closed formulas.
    pub max_k: usize,
    /// Largest `m = r + s` for the dimension identity.
    pub max_m: usize,
    /// Largest `r` for `Σ dim Δ_r(ν)² = Bell(2r)`.
    pub max_r: usize,
    /// Largest `n` for the `S(n-1,1)^{⊗2}` sequence.
    pub max_stabilization_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_size: 4,
            extra: 3,
            max_k: 6,
            max_m: 6,
            max_r: 4,
            max_stabilization_n: 8,
        }
    }
}

pub fn run_suite(suite: Suite, bounds: &Bounds) -> Result<Vec<Check>> {
    match suite {
        Suite::Stabilization => stabilization(bounds.max_stabilization_n),
        Suite::Routes => routes(bounds.max_size, bounds.extra),
        Suite::Reduced => reduced(bounds.max_size),
        Suite::Closed => closed(bounds.max_size, bounds.max_k, bounds.extra),
        Suite::Dims => dims(bounds.max_m, bounds.max_r),
    }
}

fn show(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

/// The constituents of `S(n-1,1) ⊗ S(n-1,1)` as displayed for small `n` and
/// in the stable range.
pub fn expected_hook_square(n: usize) -> Vec<Partition> {
    let p = |v: Vec<usize>| Partition::new(v).unwrap();
    match n {
        2 => vec![p(vec![2])],
        3 => vec![p(vec![3]), p(vec![2, 1]), p(vec![1, 1, 1])],
        _ => vec![
            p(vec![n]),
            p(vec![n - 1, 1]),
            p(vec![n - 2, 2]),
            p(vec![n - 2, 1, 1]),
        ],
    }
}

/// Constituents of `S(λ) ⊗ S(μ)` with multiplicity, in reverse lex order.
pub fn decompose(lambda: &Partition, mu: &Partition) -> Result<Vec<(Partition, u64)>> {
    let mut out = Vec::new();
    for nu in Partition::all(lambda.size()) {
        let g = kron_oracle(lambda, mu, &nu)?;
        if g > 0 {
            out.push((nu, g));
        }
    }
    Ok(out)
}

fn stabilization(max_n: usize) -> Result<Vec<Check>> {
    (2..=max_n.min(MAX_N))
        .map(|n| {
            let hook = Partition::new(vec![n - 1, 1])?;
            let got = decompose(&hook, &hook)?;
            let mut expected = expected_hook_square(n);
            expected.sort_by(|a, b| b.cmp(a));
            let ok = got.iter().all(|(_, m)| *m == 1)
                && got.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>() == expected;
            let shown: Vec<String> = got.iter().map(|(p, m)| format!("{m}{p}")).collect();
            Ok(Check::new(
                Suite::Stabilization,
                format!("n={n}"),
                &[("expected", show(&expected)), ("oracle", shown.join(" "))],
                ok,
            ))
        })
        .collect()
}

/// Triples `(λ, μ, ν)` with `|λ|, |μ| <= max_size` and `|ν| <= |λ| + |μ|`.
pub fn triples(max_size: usize) -> Vec<(Partition, Partition, Partition)> {
    let small = Partition::up_to(max_size);
    let mut out = Vec::new();
    for lambda in &small {
        for mu in &small {
            for nu in Partition::up_to(lambda.size() + mu.size()) {
                out.push((lambda.clone(), mu.clone(), nu));
            }
        }
    }
    out
}

/// Every `n >= 1` at which all three paddings exist, up to
/// `stability_bound + extra`.
pub fn valid_ns(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    extra: usize,
) -> std::ops::RangeInclusive<usize> {
    let lo = min_padding(lambda)
        .max(min_padding(mu))
        .max(min_padding(nu))
        .max(1);
    let hi = (stability_bound(lambda, mu, nu) + extra).min(MAX_N);
    lo..=hi
}

fn triple_case(lambda: &Partition, mu: &Partition, nu: &Partition) -> String {
    format!("{lambda} {mu} {nu}")
}

fn routes(max_size: usize, extra: usize) -> Result<Vec<Check>> {
    let per_triple: Vec<Result<Vec<Check>>> = triples(max_size)
        .par_iter()
        .map(|(lambda, mu, nu)| {
            valid_ns(lambda, mu, nu, extra)
                .map(|n| {
                    let oracle = kron_padded_oracle(lambda, mu, nu, n)?;
                    let blocks = kron_via_blocks(lambda, mu, nu, n)?;
                    let dagger = kron_via_dagger(lambda, mu, nu, n)?;
                    Ok(Check::new(
                        Suite::Routes,
                        format!("{} n={n}", triple_case(lambda, mu, nu)),
                        &[
                            ("oracle", oracle.to_string()),
                            ("blocks", blocks.to_string()),
                            ("dagger", dagger.to_string()),
                        ],
                        oracle == blocks && blocks == dagger,
                    ))
                })
                .collect()
        })
        .collect();
    flatten(per_triple)
}

fn reduced(max_size: usize) -> Result<Vec<Check>> {
    triples(max_size)
        .par_iter()
        .map(|(lambda, mu, nu)| {
            let stable = reduced_kron(lambda, mu, nu)?;
            let via_lr = reduced_kron_via_lr(lambda, mu, nu)?;
            Ok(Check::new(
                Suite::Reduced,
                triple_case(lambda, mu, nu),
                &[("stable", stable.to_string()), ("lr", via_lr.to_string())],
                stable == via_lr,
            ))
        })
        .collect()
}

/// Shape of `ν_[n]` covered by a closed formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedShape {
    TwoRow,
    Hook,
}

/// Evaluates the closed formula for `ν = (k)` or `ν = (1^k)` at `n`.
pub fn closed_formula(
    shape: ClosedShape,
    lambda: &Partition,
    mu: &Partition,
    k: usize,
    n: usize,
) -> Result<u64> {
    match shape {
        ClosedShape::TwoRow => kron_two_row(lambda, mu, k, n),
        ClosedShape::Hook => kron_hook(lambda, mu, k, n),
    }
}

fn closed(max_size: usize, max_k: usize, extra: usize) -> Result<Vec<Check>> {
    let small = Partition::up_to(max_size);
    let mut cases = Vec::new();
    for lambda in &small {
        for mu in &small {
            for k in 0..=max_k {
                for shape in [ClosedShape::TwoRow, ClosedShape::Hook] {
                    cases.push((lambda.clone(), mu.clone(), k, shape));
                }
            }
        }
    }
    let per_case: Vec<Result<Vec<Check>>> = cases
        .par_iter()
        .map(|(lambda, mu, k, shape)| {
            let (nu, name) = match shape {
                ClosedShape::TwoRow => (Partition::row_shape(*k), "two-row"),
                ClosedShape::Hook => (Partition::column_shape(*k), "hook"),
            };
            let (r, s) = (lambda.size(), mu.size());
            let bound = match shape {
                ClosedShape::TwoRow => (r + mu.first() + k).min(s + lambda.first() + k),
                ClosedShape::Hook => (r + s + 1).min(s + lambda.first() + k).min(r + mu.first() + k),
            };
            let lo = bound
                .max(min_padding(lambda))
                .max(min_padding(mu))
                .max(min_padding(&nu));
            let hi = (bound + extra).min(MAX_N);
            (lo..=hi)
                .map(|n| {
                    let formula = closed_formula(*shape, lambda, mu, *k, n)?;
                    let oracle = kron_padded_oracle(lambda, mu, &nu, n)?;
                    Ok(Check::new(
                        Suite::Closed,
                        format!("{name} {lambda} {mu} k={k} n={n} bound={bound}"),
                        &[("closed", formula.to_string()), ("oracle", oracle.to_string())],
                        formula == oracle,
                    ))
                })
                .collect()
        })
        .collect();
    flatten(per_case)
}

fn dims(max_m: usize, max_r: usize) -> Result<Vec<Check>> {
    let mut cases = Vec::new();
    for m in 0..=max_m {
        for r in 0..=m {
            for nu in Partition::up_to(m) {
                cases.push((m, r, nu));
            }
        }
    }
    let mut checks: Vec<Check> = cases
        .par_iter()
        .map(|(m, r, nu)| {
            let s = m - r;
            let lhs = dim_standard(*m, nu);
            let mut rhs = num::BigUint::from(0u32);
            for lambda in Partition::up_to(*r) {
                for mu in Partition::up_to(s) {
                    let mult = restrict_multiplicity(nu, *r, s, &lambda, &mu)?;
                    if mult > 0 {
                        rhs += dim_standard(*r, &lambda) * dim_standard(s, &mu) * mult;
                    }
                }
            }
            Ok(Check::new(
                Suite::Dims,
                format!("restrict {nu} m={m} r={r} s={s}"),
                &[("dim", lhs.to_string()), ("restricted", rhs.to_string())],
                lhs == rhs,
            ))
        })
        .collect::<Result<_>>()?;
    for r in 0..=max_r {
        let total: num::BigUint = Partition::up_to(r)
            .iter()
            .map(|nu| {
                let d = dim_standard(r, nu);
                &d * &d
            })
            .sum();
        let b = bell(2 * r);
        let ok = total == b;
        checks.push(Check::new(
            Suite::Dims,
            format!("wedderburn r={r}"),
            &[("sum_dim_sq", total.to_string()), ("bell", b.to_string())],
            ok,
        ));
    }
    Ok(checks)
}

fn flatten(parts: Vec<Result<Vec<Check>>>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// Runs the suites on a pool of `jobs` threads (0 = rayon's default).
pub fn run(suites: &[Suite], bounds: &Bounds, jobs: usize) -> Result<Vec<Check>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::NotApplicable(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        let mut out = Vec::new();
        for &suite in suites {
            out.extend(run_suite(suite, bounds)?);
        }
        Ok(out)
    })
}

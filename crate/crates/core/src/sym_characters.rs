//! Symmetric group characters and small Specht modules.
//!
//! This is the brute-force side of every cross-check in the crate: Kronecker
//! coefficients come from character inner products and Littlewood–Richardson
//! multiplicities from restriction to Young subgroups. Nothing here calls
//! into `lr` or `kronecker`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, BigRational, BigUint, Integer, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::partitions::Partition;

/// Largest `n` for which character tables are built.
pub const MAX_N: usize = 20;

/// Default size cap for explicit Specht matrices.
pub const DEFAULT_SPECHT_CAP: usize = 7;

pub fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `n! / z_ρ`, the number of permutations of cycle type `ρ`.
pub fn class_size(rho: &Partition) -> BigUint {
    let z: BigUint = rho
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| BigUint::from(k).pow(m as u32) * factorial(m))
        .product();
    factorial(rho.size()) / z
}

/// Number of standard Young tableaux of shape `λ`, by the hook length formula.
pub fn dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let hooks: BigUint = (1..=lambda.length())
        .flat_map(|i| (1..=lambda.row(i)).map(move |j| (i, j)))
        .map(|(i, j)| BigUint::from(lambda.row(i) - j + conj.row(j) - i + 1))
        .product();
    (factorial(lambda.size()) / hooks)
        .to_u64()
        .expect("dimension fits in u64 inside the envelope")
}

type MnKey = (Partition, Vec<usize>);

fn mn_cache() -> &'static RwLock<HashMap<MnKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<MnKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ(ρ)` by the Murnaghan–Nakayama rule.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{rho}| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    Ok(murnaghan_nakayama(lambda, rho.parts()))
}

fn murnaghan_nakayama(lambda: &Partition, rho: &[usize]) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    if rest.is_empty() {
        // A single cycle: nonzero only on hooks.
        return hook_value(lambda, k);
    }
    let key = (lambda.clone(), rho.to_vec());
    if let Some(&v) = mn_cache().read().unwrap().get(&key) {
        return v;
    }
    let value = remove_border_strips(lambda, k)
        .into_iter()
        .map(|(sign, smaller)| sign * murnaghan_nakayama(&smaller, rest))
        .sum();
    mn_cache().write().unwrap().insert(key, value);
    value
}

fn hook_value(lambda: &Partition, k: usize) -> i64 {
    debug_assert_eq!(lambda.size(), k);
    let arm = lambda.first();
    if lambda.parts()[1..].iter().all(|&p| p == 1) {
        let leg = k - arm;
        if leg.is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// All ways to remove a border strip of size `k`, as `(sign, remaining shape)`,
/// computed on beta-numbers: a strip removal moves one bead `k` places down.
fn remove_border_strips(lambda: &Partition, k: usize) -> Vec<(i64, Partition)> {
    let len = lambda.length();
    let beta: Vec<usize> = (1..=len).map(|i| lambda.row(i) + len - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_sorted_unchecked(parts)));
    }
    out
}

/// Exact character table of `S_n`.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][ρ]`
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    fn build(n: usize) -> Self {
        let partitions = Partition::all(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|rho| murnaghan_nakayama(lambda, rho.parts()))
                    .collect()
            })
            .collect();
        let class_sizes = partitions.iter().map(class_size).collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
            class_sizes,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` labelling both rows and columns.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lambda)?][self.index_of(rho)?])
    }

    pub fn row(&self, lambda: usize) -> &[i64] {
        &self.values[lambda]
    }

    /// Tab-separated dump: header of class labels, one row per character.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("lambda");
        for rho in &self.partitions {
            write!(out, "\t{rho}").unwrap();
        }
        out.push('\n');
        for (lambda, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&lambda.to_string());
            for v in row {
                write!(out, "\t{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

fn table_cache() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The (cached) character table of `S_n`. Concurrent first requests may build
/// the table more than once, but every caller receives the same stored copy.
pub fn table(n: usize) -> Result<Arc<CharacterTable>> {
    if n > MAX_N {
        return Err(Error::EnvelopeExceeded { n, max: MAX_N });
    }
    if let Some(t) = table_cache().read().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let built = Arc::new(CharacterTable::build(n));
    let mut guard = table_cache().write().unwrap();
    Ok(Arc::clone(guard.entry(n).or_insert(built)))
}

/// `g^ν_{λ,μ} = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`.
///
/// # Panics
/// If the sum is not divisible by `n!`, which would mean a broken table.
pub fn kron_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!(
            "Kronecker coefficient needs three partitions of one n, got {lambda} {mu} {nu}"
        )));
    }
    let t = table(n)?;
    let (a, b, c) = (
        t.index_of(lambda).unwrap(),
        t.index_of(mu).unwrap(),
        t.index_of(nu).unwrap(),
    );
    let (ra, rb, rc) = (t.row(a), t.row(b), t.row(c));
    let mut total = BigInt::zero();
    for (k, size) in t.class_sizes().iter().enumerate() {
        let prod = i128::from(ra[k])
            .checked_mul(i128::from(rb[k]))
            .and_then(|x| x.checked_mul(i128::from(rc[k])));
        let prod = match prod {
            Some(p) => BigInt::from(p),
            None => BigInt::from(ra[k]) * BigInt::from(rb[k]) * BigInt::from(rc[k]),
        };
        if !prod.is_zero() {
            total += prod * BigInt::from(size.clone());
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(factorial(n)));
    assert!(r.is_zero(), "character inner product not divisible by {n}!");
    Ok(q.to_u64().expect("Kronecker coefficient is a nonnegative u64"))
}

/// Multiplicity of `S(λ) ⊠ S(μ)` in `S(ν)` restricted to `S_{|λ|} × S_{|μ|}`.
pub fn induction_mult(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let (r1, r2) = (lambda.size(), mu.size());
    if r1 + r2 != nu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| + |{mu}| != |{nu}|")));
    }
    if r1 + r2 > MAX_N {
        return Err(Error::EnvelopeExceeded {
            n: r1 + r2,
            max: MAX_N,
        });
    }
    let mut total = BigInt::zero();
    for alpha in Partition::all(r1) {
        let ca = murnaghan_nakayama(lambda, alpha.parts());
        if ca == 0 {
            continue;
        }
        for beta in Partition::all(r2) {
            let cb = murnaghan_nakayama(mu, beta.parts());
            if cb == 0 {
                continue;
            }
            let mut merged: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
            merged.sort_unstable_by(|a, b| b.cmp(a));
            let cn = murnaghan_nakayama(nu, &merged);
            if cn == 0 {
                continue;
            }
            let weight = BigInt::from(class_size(&alpha) * class_size(&beta));
            total += weight * BigInt::from(ca) * BigInt::from(cb) * BigInt::from(cn);
        }
    }
    let order = BigInt::from(factorial(r1) * factorial(r2));
    let (q, r) = total.div_rem(&order);
    assert!(r.is_zero(), "restriction multiplicity is not an integer");
    Ok(q.to_u64().expect("multiplicity fits in u64"))
}

/// Standard Young tableaux of shape `ν`, each given by the `(row, col)` cell
/// (0-indexed) of the entries `1, 2, ..., |ν|`.
pub fn standard_tableaux(nu: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn grow(
        nu: &Partition,
        filled: &mut Vec<usize>,
        cells: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cells.len() == nu.size() {
            out.push(cells.clone());
            return;
        }
        for row in 0..nu.length() {
            let col = filled[row];
            let fits_row = col < nu.row(row + 1);
            let fits_above = row == 0 || filled[row - 1] > col;
            if fits_row && fits_above {
                filled[row] += 1;
                cells.push((row, col));
                grow(nu, filled, cells, out);
                cells.pop();
                filled[row] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    grow(nu, &mut vec![0; nu.length()], &mut Vec::new(), &mut out);
    out
}

/// A Specht module with explicit matrices for the adjacent transpositions,
/// in Young's seminormal basis indexed by standard tableaux.
#[derive(Clone, Debug)]
pub struct SpechtModel {
    shape: Partition,
    tableaux: Vec<Vec<(usize, usize)>>,
    generators: Vec<QMatrix>,
}

impl SpechtModel {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Vec<(usize, usize)>] {
        &self.tableaux
    }

    /// Matrix of the adjacent transposition `s_i = (i, i+1)`, for `1 <= i < |ν|`.
    pub fn generator(&self, i: usize) -> &QMatrix {
        &self.generators[i - 1]
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    /// Matrix of the permutation `k ↦ perm[k]` of `{0, .., |ν|-1}`. The map
    /// is a homomorphism for composition `(gh)(k) = g(h(k))`.
    pub fn permutation_matrix(&self, perm: &[usize]) -> QMatrix {
        assert_eq!(perm.len(), self.shape.size());
        let mut g = perm.to_vec();
        // Peel descents off the right: g = g' ∘ s_j with fewer inversions.
        let mut word = Vec::new();
        while let Some(j) = (0..g.len().saturating_sub(1)).find(|&j| g[j] > g[j + 1]) {
            g.swap(j, j + 1);
            word.push(j);
        }
        let mut m = QMatrix::identity(self.dim());
        for &j in word.iter().rev() {
            m = &m * &self.generators[j];
        }
        m
    }
}

/// Builds the Specht model of `ν`, refusing shapes larger than `cap`.
pub fn specht_model(nu: &Partition, cap: usize) -> Result<SpechtModel> {
    if nu.size() > cap {
        return Err(Error::SpechtCapExceeded { size: nu.size(), cap });
    }
    let tableaux = standard_tableaux(nu);
    let lookup: HashMap<Vec<(usize, usize)>, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let content = |cell: (usize, usize)| cell.1 as i64 - cell.0 as i64;
    let generators = (1..nu.size())
        .map(|i| {
            let mut m = QMatrix::zeros(tableaux.len(), tableaux.len());
            for (col, t) in tableaux.iter().enumerate() {
                let (a, b) = (t[i - 1], t[i]);
                if a.0 == b.0 {
                    m.set(col, col, BigRational::one());
                } else if a.1 == b.1 {
                    m.set(col, col, -BigRational::one());
                } else {
                    let d = BigRational::from_integer((content(b) - content(a)).into());
                    let inv = d.recip();
                    let mut swapped = t.clone();
                    swapped.swap(i - 1, i);
                    let partner = lookup[&swapped];
                    m.set(col, col, inv.clone());
                    let off = if a.0 < b.0 {
                        BigRational::one()
                    } else {
                        BigRational::one() - &inv * &inv
                    };
                    m.set(partner, col, off);
                }
            }
            m
        })
        .collect();
    Ok(SpechtModel {
        shape: nu.clone(),
        tableaux,
        generators,
    })
}

/// Cycle type of a permutation given as images of `0..len`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        cycles.push(len);
    }
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_sorted_unchecked(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn character_examples() {
        for n in 1..=7 {
            for rho in Partition::all(n) {
                assert_eq!(character(&p(&[n]), &rho).unwrap(), 1);
                let sign = if (n - rho.length()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(character(&Partition::column_shape(n), &rho).unwrap(), sign);
            }
        }
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(&Partition::column_shape(6)), BigUint::one());
        assert_eq!(class_size(&p(&[6])), BigUint::from(120u32));
        assert_eq!(class_size(&p(&[2, 1])), BigUint::from(3u32));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 0..=12 {
            let total: BigUint = Partition::all(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn character_at_identity_is_dimension() {
        for lambda in Partition::up_to(10) {
            let id = Partition::column_shape(lambda.size());
            assert_eq!(character(&lambda, &id).unwrap(), dimension(&lambda) as i64);
            assert!(dimension(&lambda) > 0);
        }
    }

    #[test]
    fn dimensions_match_tableau_counts() {
        for lambda in Partition::up_to(8) {
            assert_eq!(standard_tableaux(&lambda).len() as u64, dimension(&lambda));
        }
    }

    #[test]
    fn kron_oracle_examples() {
        assert_eq!(kron_oracle(&p(&[1, 1]), &p(&[1, 1]), &p(&[2])).unwrap(), 1);
        assert_eq!(kron_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 1);
        assert_eq!(kron_oracle(&p(&[3, 1]), &p(&[3, 1]), &p(&[2, 2])).unwrap(), 1);
        assert!(kron_oracle(&p(&[3, 1]), &p(&[3]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(matches!(table(MAX_N + 1), Err(Error::EnvelopeExceeded { .. })));
    }

    #[test]
    fn induction_examples() {
        let e = Partition::empty();
        assert_eq!(induction_mult(&e, &p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(induction_mult(&p(&[1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        assert_eq!(induction_mult(&p(&[2, 1]), &p(&[2]), &p(&[3, 2])).unwrap(), 1);
        assert_eq!(
            induction_mult(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(),
            2
        );
    }

    #[test]
    fn specht_examples() {
        let triv = specht_model(&p(&[4]), DEFAULT_SPECHT_CAP).unwrap();
        assert!(triv.generators().iter().all(|g| *g == QMatrix::identity(1)));
        let sign = specht_model(&p(&[1, 1]), DEFAULT_SPECHT_CAP).unwrap();
        assert_eq!(sign.generator(1).get(0, 0), &q(-1));
        let std = specht_model(&p(&[2, 1]), DEFAULT_SPECHT_CAP).unwrap();
        assert_eq!(std.dim(), 2);
        assert_eq!(std.generator(1).trace(), q(0));
        assert!(specht_model(&p(&[8]), DEFAULT_SPECHT_CAP).is_err());
    }

    #[test]
    fn specht_coxeter_relations() {
        for nu in Partition::up_to(6) {
            let model = specht_model(&nu, DEFAULT_SPECHT_CAP).unwrap();
            let id = QMatrix::identity(model.dim());
            let gens = model.generators();
            for (i, s) in gens.iter().enumerate() {
                assert_eq!(&(s * s), &id, "{nu} s_{}^2", i + 1);
                if let Some(t) = gens.get(i + 1) {
                    let st = s * t;
                    assert_eq!(&(&(&st * &st) * &st), &id, "{nu} braid {}", i + 1);
                }
                for t in gens.iter().skip(i + 2) {
                    assert_eq!(s * t, t * s);
                }
            }
        }
    }

    #[test]
    fn specht_traces_match_characters() {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for smaller in perms(n - 1) {
                for pos in 0..n {
                    let mut p = smaller.clone();
                    p.insert(pos, n - 1);
                    out.push(p);
                }
            }
            out
        }
        for n in 1..=5 {
            let all = perms(n);
            for nu in Partition::all(n) {
                let model = specht_model(&nu, DEFAULT_SPECHT_CAP).unwrap();
                for g in &all {
                    let chi = character(&nu, &cycle_type(g)).unwrap();
                    assert_eq!(model.permutation_matrix(g).trace(), q(chi), "{nu} {g:?}");
                }
                // Homomorphism for composition.
                for g in all.iter().take(12) {
                    for h in all.iter().rev().take(12) {
                        let gh: Vec<usize> = (0..n).map(|k| g[h[k]]).collect();
                        assert_eq!(
                            model.permutation_matrix(&gh),
                            &model.permutation_matrix(g) * &model.permutation_matrix(h)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tsv_dump_shape() {
        let tsv = table(3).unwrap().to_tsv();
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines[0], "lambda\t[3]\t[2,1]\t[1,1,1]");
        assert_eq!(lines[2], "[2,1]\t-1\t0\t2");
        assert_eq!(lines.len(), 4);
    }
}

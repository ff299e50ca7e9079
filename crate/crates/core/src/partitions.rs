//! Integer partitions, Young-diagram geometry, first-row padding, the dagger
//! operator, `n`-pairs and block chains.
//!
//! Partitions are stored canonically: weakly decreasing positive parts, no
//! trailing zeros. Rows are 1-indexed in the public API (`row(1)` is the first
//! part) except for padded partitions, where the prepended row is row 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// One-row partition `(k)`; `(0)` is the empty partition.
    pub fn row_shape(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// One-column partition `(1^k)`.
    pub fn column_shape(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for a 1-indexed row, zero beyond the length.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.row(1)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Content of the last box in row `i` (1-indexed): `λ_i - i`.
    pub fn content_last(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.length() {
            return Err(Error::RowOutOfRange {
                row: i,
                len: self.length(),
            });
        }
        Ok(self.parts[i - 1] as i64 - i as i64)
    }

    /// Whether `self / inner` is a horizontal strip (no two boxes in one column).
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.length()).all(|i| self.row(i + 1) <= inner.row(i))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of size at most `n`, grouped by increasing size.
    pub fn up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    /// Multiplicities `m_k` of each part `k`, indexed by `k` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }
}

fn fill_partitions(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracketed form `[4,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::PartitionSyntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(err());
        }
        Partition::new(parts)
    }
}

/// `λ_[n] = (n - |λ|, λ_1, λ_2, ...)`, with the prepended entry as row 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaddedPartition {
    base: Partition,
    n: usize,
}

impl PaddedPartition {
    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row 0, `n - |λ|`.
    pub fn row0(&self) -> usize {
        self.n - self.base.size()
    }

    /// Rows indexed from 0; a zero row 0 (only for `∅` at `n = 0`) is dropped.
    pub fn rows(&self) -> Vec<usize> {
        let mut rows = Vec::with_capacity(self.base.length() + 1);
        if self.row0() > 0 {
            rows.push(self.row0());
        }
        rows.extend_from_slice(self.base.parts());
        rows
    }

    /// The padded partition as an ordinary partition of `n`.
    pub fn to_partition(&self) -> Partition {
        Partition::from_sorted_unchecked(self.rows())
    }

    /// `ℓ(λ_[n])`.
    pub fn length(&self) -> usize {
        self.base.length() + usize::from(self.row0() > 0)
    }

    /// Inverse of padding: strips the first row of a partition of `n`.
    pub fn from_full(full: &Partition) -> PaddedPartition {
        let base = Partition::from_sorted_unchecked(full.parts().iter().skip(1).copied().collect());
        PaddedPartition { base, n: full.size() }
    }
}

/// Prepends the row `n - |λ|`; fails unless `n - |λ| >= λ_1`.
pub fn pad(lambda: &Partition, n: usize) -> Result<PaddedPartition> {
    if n < lambda.size() + lambda.first() {
        return Err(Error::NotPaddable {
            partition: lambda.to_string(),
            n,
        });
    }
    Ok(PaddedPartition {
        base: lambda.clone(),
        n,
    })
}

/// Smallest `n` for which `pad(λ, n)` exists.
pub fn min_padding(lambda: &Partition) -> usize {
    lambda.size() + lambda.first()
}

/// `μ ↪_n λ`: `λ` exceeds `μ` by boxes in a single row whose rightmost box has
/// content `n - |μ|`.
pub fn is_n_pair(mu: &Partition, lambda: &Partition, n: usize) -> bool {
    if !lambda.contains(mu) || lambda == mu {
        return false;
    }
    let rows: Vec<usize> = (1..=lambda.length())
        .filter(|&i| lambda.row(i) != mu.row(i))
        .collect();
    let [row] = rows[..] else {
        return false;
    };
    lambda.row(row) as i64 - row as i64 == n as i64 - mu.size() as i64
}

/// The unique `λ` with `μ ↪_n λ`, if any.
pub fn n_pair_successor(mu: &Partition, n: usize) -> Option<Partition> {
    let content = n as i64 - mu.size() as i64;
    for i in 1..=mu.length() + 1 {
        let target = content + i as i64;
        if target <= mu.row(i) as i64 {
            continue;
        }
        let fits = i == 1 || target <= mu.row(i - 1) as i64;
        if fits {
            let mut parts = mu.parts().to_vec();
            if i > parts.len() {
                parts.push(target as usize);
            } else {
                parts[i - 1] = target as usize;
            }
            return Some(Partition::from_sorted_unchecked(parts));
        }
    }
    None
}

/// The unique `μ` with `μ ↪_n λ`, if any.
pub fn n_pair_predecessor(lambda: &Partition, n: usize) -> Option<Partition> {
    // Shortening row i to m requires λ_i - i = n - |λ| + (λ_i - m), i.e. m = n - |λ| + i.
    let base = n as i64 - lambda.size() as i64;
    for i in 1..=lambda.length() {
        let m = base + i as i64;
        if m >= lambda.row(i + 1) as i64 && m < lambda.row(i) as i64 {
            let mut parts = lambda.parts().to_vec();
            parts[i - 1] = m as usize;
            while parts.last() == Some(&0) {
                parts.pop();
            }
            return Some(Partition::from_sorted_unchecked(parts));
        }
    }
    None
}

/// A maximal chain `ν^(0) ↪_n ν^(1) ↪_n ...` inside `Λ_{≤r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockChain {
    n: usize,
    cap: usize,
    chain: Vec<Partition>,
}

impl BlockChain {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The degree cap `r`.
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn entries(&self) -> &[Partition] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Largest `t` with `|ν^(t)| <= bound`, if any entry fits.
    pub fn truncation_index(&self, bound: usize) -> Option<usize> {
        self.chain.iter().rposition(|p| p.size() <= bound)
    }
}

/// The block of `ν` in `Λ_{≤r}` for `P_r(n)`, as a chain of `n`-pairs ordered
/// by size. When `pad(ν, n)` exists, `ν` is the first entry.
pub fn block_chain(nu: &Partition, n: usize, r: usize) -> BlockChain {
    let mut below = Vec::new();
    let mut cur = nu.clone();
    while let Some(prev) = n_pair_predecessor(&cur, n) {
        below.push(prev.clone());
        cur = prev;
    }
    below.reverse();
    let mut chain = below;
    chain.extend(ascending_chain(nu, n).take_while(|p| p.size() <= r));
    BlockChain { n, cap: r, chain }
}

/// The unbounded upward chain `ν ↪_n ν^(1) ↪_n ...` starting at `ν` itself.
/// It is infinite whenever `pad(ν, n)` exists.
pub fn ascending_chain(nu: &Partition, n: usize) -> impl Iterator<Item = Partition> {
    std::iter::successors(Some(nu.clone()), move |p| n_pair_successor(p, n))
}

/// `ν_[n]^{†i}`: with the rows of `ν_[n]` indexed `0, 1, 2, ...` (row 0 being
/// `n - |ν|`, rows past the length being 0), add 1 to every row with index
/// below `i` and delete row `i`.
///
/// "The first `i-1` rows" is read with the 0th-row convention, so rows `0..i`
/// are incremented; zero rows in that range become parts equal to 1.
pub fn dagger(padded: &PaddedPartition, i: usize) -> Partition {
    let mut rows: Vec<usize> = std::iter::once(padded.row0())
        .chain(padded.base().parts().iter().copied())
        .collect();
    if rows.len() <= i {
        rows.resize(i + 1, 0);
    }
    rows.remove(i);
    for row in rows.iter_mut().take(i) {
        *row += 1;
    }
    while rows.last() == Some(&0) {
        rows.pop();
    }
    Partition::from_sorted_unchecked(rows)
}

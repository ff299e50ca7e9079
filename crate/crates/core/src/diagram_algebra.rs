//! Set-partition diagrams and the partition algebra `P_r(δ)`.
//!
//! A diagram of shape `(r, m)` is a set partition of the top vertices
//! `1..=r` and the bottom vertices `1'..=m'`. Internally the vertices are
//! ordered `1, .., r, 1', .., m'` and the partition is stored as a
//! restricted-growth label vector, so equal set partitions have equal
//! representations and blocks come out ordered by their least vertex.
//!
//! Text format: blocks as vertex lists, bottom vertices carrying a trailing
//! apostrophe, e.g. `{1,2,4,2',5'}{3}{5,6,7,3',4',6',7'}{8,8'}{1'}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num::{BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::lr::lr_coeff3;
use crate::matrix::QMatrix;
use crate::partitions::Partition;
use crate::sym_characters::{self, kron_oracle, SpechtModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Top(i) => write!(f, "{i}"),
            Vertex::Bottom(i) => write!(f, "{i}'"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionDiagram {
    top: usize,
    bottom: usize,
    labels: Vec<u32>,
}

/// Relabels so that block ids appear in first-occurrence order.
fn canonical_labels<T: Copy + Eq + std::hash::Hash>(raw: &[T]) -> Vec<u32> {
    let mut seen: HashMap<T, u32> = HashMap::new();
    raw.iter()
        .map(|x| {
            let next = seen.len() as u32;
            *seen.entry(*x).or_insert(next)
        })
        .collect()
}

impl SetPartitionDiagram {
    /// Builds a diagram from arbitrary block labels for the vertices
    /// `1..=top, 1'..=bottom` (in that order); equal labels share a block.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(
        top: usize,
        bottom: usize,
        labels: &[T],
    ) -> Result<Self> {
        if labels.len() != top + bottom {
            return Err(Error::InvalidDiagram(format!(
                "{} labels for {top} + {bottom} vertices",
                labels.len()
            )));
        }
        Ok(SetPartitionDiagram {
            top,
            bottom,
            labels: canonical_labels(labels),
        })
    }

    pub fn from_blocks(top: usize, bottom: usize, blocks: &[Vec<Vertex>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; top + bottom];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidDiagram("empty block".into()));
            }
            for &v in block {
                let idx = match v {
                    Vertex::Top(i) if (1..=top).contains(&i) => i - 1,
                    Vertex::Bottom(i) if (1..=bottom).contains(&i) => top + i - 1,
                    _ => return Err(Error::InvalidDiagram(format!("vertex {v} out of range"))),
                };
                if labels[idx] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("vertex {v} appears twice")));
                }
                labels[idx] = b;
            }
        }
        if let Some(idx) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidDiagram(format!(
                "vertex {} is not covered",
                Self::vertex_at(top, idx)
            )));
        }
        Self::from_labels(top, bottom, &labels)
    }

    fn vertex_at(top: usize, idx: usize) -> Vertex {
        if idx < top {
            Vertex::Top(idx + 1)
        } else {
            Vertex::Bottom(idx - top + 1)
        }
    }

    pub fn identity(r: usize) -> Self {
        Self::permutation(&(0..r).collect::<Vec<_>>())
    }

    /// Permutation diagram joining top `k+1` to bottom `perm[k]+1`.
    pub fn permutation(perm: &[usize]) -> Self {
        let r = perm.len();
        let mut labels = vec![0; 2 * r];
        for (k, &image) in perm.iter().enumerate() {
            labels[k] = k;
            labels[r + image] = k;
        }
        Self::from_labels(r, r, &labels).expect("label count matches")
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks ordered by least vertex, each listing top vertices then bottom.
    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (idx, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(Self::vertex_at(self.top, idx));
        }
        blocks
    }

    fn top_labels(&self) -> &[u32] {
        &self.labels[..self.top]
    }

    fn bottom_labels(&self) -> &[u32] {
        &self.labels[self.top..]
    }

    /// Number of blocks meeting both rows.
    pub fn propagating_count(&self) -> usize {
        let mut top_hit = vec![false; self.block_count()];
        for &l in self.top_labels() {
            top_hit[l as usize] = true;
        }
        let mut counted = vec![false; self.block_count()];
        self.bottom_labels()
            .iter()
            .filter(|&&l| {
                let l = l as usize;
                let fresh = top_hit[l] && !counted[l];
                counted[l] = true;
                fresh
            })
            .count()
    }

    /// The diagram reflected top to bottom.
    pub fn flip(&self) -> Self {
        let mut labels = self.bottom_labels().to_vec();
        labels.extend_from_slice(self.top_labels());
        Self::from_labels(self.bottom, self.top, &labels).expect("label count matches")
    }

    /// `self` placed to the left of `other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let offset = self.block_count() as u32;
        let shift = |ls: &[u32]| ls.iter().map(|l| l + offset).collect::<Vec<_>>();
        let mut labels = self.top_labels().to_vec();
        labels.extend(shift(other.top_labels()));
        labels.extend_from_slice(self.bottom_labels());
        labels.extend(shift(other.bottom_labels()));
        Self::from_labels(self.top + other.top, self.bottom + other.bottom, &labels)
            .expect("label count matches")
    }

    /// All diagrams of shape `(top, bottom)`; there are `Bell(top + bottom)`.
    pub fn all(top: usize, bottom: usize) -> Vec<Self> {
        set_partition_labels(top + bottom)
            .into_iter()
            .map(|labels| SetPartitionDiagram { top, bottom, labels })
            .collect()
    }
}

/// Restricted-growth strings of length `n`.
fn set_partition_labels(n: usize) -> Vec<Vec<u32>> {
    fn grow(n: usize, cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for l in 0..=limit {
            cur.push(l);
            grow(n, cur, max.max(l), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Places `x` above `y`, identifying the bottom row of `x` with the top row of
/// `y`. Returns the number `t` of components made only of middle vertices and
/// the diagram with those components removed, so `x · y = δ^t z`.
pub fn compose(x: &SetPartitionDiagram, y: &SetPartitionDiagram) -> Result<(usize, SetPartitionDiagram)> {
    if x.bottom != y.top {
        return Err(Error::DegreeMismatch(format!(
            "cannot place a ({},{}) diagram above a ({},{}) diagram",
            x.top, x.bottom, y.top, y.bottom
        )));
    }
    let (r, m, k) = (x.top, x.bottom, y.bottom);
    // Vertices: x-top 0..r, middle r..r+m, y-bottom r+m..r+m+k.
    let mut uf = UnionFind::new(r + m + k);
    let mut join_row = |labels: &[u32], positions: &mut dyn Iterator<Item = usize>| {
        let mut first: HashMap<u32, usize> = HashMap::new();
        for (&l, pos) in labels.iter().zip(positions) {
            match first.get(&l) {
                Some(&anchor) => uf.union(anchor, pos),
                None => {
                    first.insert(l, pos);
                }
            }
        }
    };
    join_row(&x.labels, &mut (0..r + m));
    join_row(&y.labels, &mut (r..r + m + k));

    let mut outer_roots = vec![false; r + m + k];
    for v in (0..r).chain(r + m..r + m + k) {
        let root = uf.find(v);
        outer_roots[root] = true;
    }
    let mut middle_only = vec![false; r + m + k];
    let mut t = 0;
    for v in r..r + m {
        let root = uf.find(v);
        if !outer_roots[root] && !middle_only[root] {
            middle_only[root] = true;
            t += 1;
        }
    }
    let labels: Vec<usize> = (0..r).chain(r + m..r + m + k).map(|v| uf.find(v)).collect();
    Ok((t, SetPartitionDiagram::from_labels(r, k, &labels)?))
}

impl fmt::Display for SetPartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in self.blocks() {
            write!(f, "{{")?;
            for (i, v) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl SetPartitionDiagram {
    /// Parses the block format with an explicit shape, so that `(r, 0)` and
    /// `(0, m)` diagrams are unambiguous.
    pub fn parse_with_shape(s: &str, top: usize, bottom: usize) -> Result<Self> {
        Self::from_blocks(top, bottom, &parse_blocks(s)?)
    }
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<Vertex>>> {
    let err = || Error::DiagramSyntax(s.to_string());
    let mut rest = s.trim();
    let mut blocks = Vec::new();
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('{').ok_or_else(err)?;
        let close = body_start.find('}').ok_or_else(err)?;
        let body = &body_start[..close];
        let block = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (digits, bottom) = match tok.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (tok, false),
                };
                let i: usize = digits.parse().map_err(|_| err())?;
                if i == 0 {
                    return Err(err());
                }
                Ok(if bottom { Vertex::Bottom(i) } else { Vertex::Top(i) })
            })
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
        rest = body_start[close + 1..].trim_start();
    }
    Ok(blocks)
}

impl FromStr for SetPartitionDiagram {
    type Err = Error;

    /// Parses the block format, taking the shape from the largest top and
    /// bottom indices.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let (mut top, mut bottom) = (0, 0);
        for v in blocks.iter().flatten() {
            match *v {
                Vertex::Top(i) => top = top.max(i),
                Vertex::Bottom(i) => bottom = bottom.max(i),
            }
        }
        Self::from_blocks(top, bottom, &blocks)
    }
}

/// A linear combination of `(r, r)` diagrams in `P_r(δ)` at a fixed nonzero
/// rational `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    r: usize,
    delta: BigRational,
    terms: BTreeMap<SetPartitionDiagram, BigRational>,
}

impl AlgebraElement {
    pub fn zero(r: usize, delta: BigRational) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::ZeroDelta);
        }
        Ok(AlgebraElement {
            r,
            delta,
            terms: BTreeMap::new(),
        })
    }

    pub fn from_diagram(d: SetPartitionDiagram, delta: BigRational) -> Result<Self> {
        if d.top != d.bottom {
            return Err(Error::DegreeMismatch(format!(
                "({},{}) diagram is not in P_r",
                d.top, d.bottom
            )));
        }
        let mut e = Self::zero(d.top, delta)?;
        e.terms.insert(d, BigRational::one());
        Ok(e)
    }

    pub fn identity(r: usize, delta: BigRational) -> Result<Self> {
        Self::from_diagram(SetPartitionDiagram::identity(r), delta)
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn delta(&self) -> &BigRational {
        &self.delta
    }

    pub fn terms(&self) -> &BTreeMap<SetPartitionDiagram, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, d: &SetPartitionDiagram) -> BigRational {
        self.terms.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: SetPartitionDiagram, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let sum = self.coefficient(&d) + c;
        if sum.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, sum);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.delta != other.delta {
            return Err(Error::DegreeMismatch(format!(
                "P_{}({}) and P_{}({})",
                self.r, self.delta, other.r, other.delta
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = AlgebraElement {
            r: self.r,
            delta: self.delta.clone(),
            terms: BTreeMap::new(),
        };
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    /// `self · other`, with `self` placed above `other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.r, self.delta.clone())?;
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let (t, z) = compose(x, y)?;
                let scalar = cx * cy * num::pow(self.delta.clone(), t);
                out.add_term(z, scalar);
            }
        }
        Ok(out)
    }
}

/// `e_l = (1/δ) {1,1'}…{l-1,(l-1)'}{l,…,r}{l',…,r'}`.
pub fn generator_e(l: usize, r: usize, delta: BigRational) -> Result<AlgebraElement> {
    if l == 0 || l > r {
        return Err(Error::InvalidDiagram(format!("e_{l} needs 1 <= l <= r = {r}")));
    }
    if delta.is_zero() {
        return Err(Error::ZeroDelta);
    }
    let mut labels: Vec<usize> = (0..r).map(|k| k.min(l - 1)).collect();
    labels.extend((0..r).map(|k| if k < l - 1 { k } else { r }));
    let d = SetPartitionDiagram::from_labels(r, r, &labels)?;
    let inv = delta.recip();
    Ok(AlgebraElement::from_diagram(d, delta)?.scale(&inv))
}

/// `s_{i,j}`: the identity diagram with strands `i` and `j` exchanged.
pub fn generator_s(i: usize, j: usize, r: usize, delta: BigRational) -> Result<AlgebraElement> {
    if !(1 <= i && i < j && j <= r) {
        return Err(Error::InvalidDiagram(format!(
            "s_{{{i},{j}}} needs 1 <= i < j <= r = {r}"
        )));
    }
    let mut perm: Vec<usize> = (0..r).collect();
    perm.swap(i - 1, j - 1);
    AlgebraElement::from_diagram(SetPartitionDiagram::permutation(&perm), delta)
}

/// Stirling numbers of the second kind `S(n, k)` for `k = 0..=n`.
fn stirling_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let keep = if k < m {
                &row[k] * BigUint::from(k)
            } else {
                BigUint::zero()
            };
            next[k] = keep + &row[k - 1];
        }
        row = next;
    }
    row
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    (0..k).fold(BigUint::one(), |acc, i| {
        acc * BigUint::from(n - i) / BigUint::from(i + 1)
    })
}

/// `Bell(n)`, by the Bell triangle.
pub fn bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let x = next.last().unwrap() + v;
            next.push(x);
        }
        row = next;
    }
    row[0].clone()
}

/// `dim Δ_r(ν)`: set partitions of the `r` top vertices with `|ν|` marked
/// blocks, times the number of standard tableaux of shape `ν`.
pub fn dim_standard(r: usize, nu: &Partition) -> BigUint {
    let p = nu.size();
    if p > r {
        return BigUint::zero();
    }
    let marked: BigUint = stirling_row(r)
        .iter()
        .enumerate()
        .map(|(k, s)| s * binomial(k, p))
        .sum();
    marked * BigUint::from(sym_characters::dimension(nu))
}

/// Canonical `(r, p)` half-diagrams: `p` propagating blocks, each holding one
/// bottom vertex, with bottom vertices `1'..p'` assigned to the propagating
/// blocks in order of their least top vertex (no crossings).
pub fn half_diagrams(r: usize, p: usize) -> Vec<SetPartitionDiagram> {
    let mut out = Vec::new();
    for top in set_partition_labels(r) {
        let blocks = top.iter().max().map_or(0, |&m| m as usize + 1);
        for marked in subsets(blocks, p) {
            let mut labels: Vec<u32> = top.clone();
            labels.extend(marked.iter().map(|&b| b as u32));
            out.push(SetPartitionDiagram::from_labels(r, p, &labels).expect("label count matches"));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Splits an `(r, p)` diagram with `p` propagating blocks as `v'' ∘ D_π`,
/// returning the non-crossing `v''` and `π` (0-indexed images), where `D_π`
/// joins top `k` to bottom `π(k)`.
fn factor_half_diagram(v: &SetPartitionDiagram) -> (SetPartitionDiagram, Vec<usize>) {
    let (r, p) = (v.top, v.bottom);
    // Propagating blocks in order of least top vertex.
    let mut order: Vec<u32> = Vec::with_capacity(p);
    for &l in v.top_labels() {
        if !order.contains(&l) && v.bottom_labels().contains(&l) {
            order.push(l);
        }
    }
    let pi: Vec<usize> = order
        .iter()
        .map(|l| v.bottom_labels().iter().position(|b| b == l).unwrap())
        .collect();
    let mut labels = v.top_labels().to_vec();
    labels.extend(order.iter().copied());
    let canonical = SetPartitionDiagram::from_labels(r, p, &labels).expect("label count matches");
    (canonical, pi)
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (k, &image) in perm.iter().enumerate() {
        inv[image] = k;
    }
    inv
}

/// `Δ_r(ν) ≅ V(r, |ν|) ⊗_{S_|ν|} S(ν)` with basis `v ⊗ x` for canonical
/// half-diagrams `v` and seminormal basis vectors `x` of `S(ν)`. The basis
/// element `(h, j)` has index `h * dim S(ν) + j`.
#[derive(Clone, Debug)]
pub struct StandardModule {
    r: usize,
    nu: Partition,
    delta: BigRational,
    half: Vec<SetPartitionDiagram>,
    index: HashMap<SetPartitionDiagram, usize>,
    specht: SpechtModel,
}

impl StandardModule {
    pub fn new(r: usize, nu: &Partition, delta: BigRational, specht_cap: usize) -> Result<Self> {
        if delta.is_zero() {
            return Err(Error::ZeroDelta);
        }
        if nu.size() > r {
            return Err(Error::SizeMismatch(format!("|{nu}| > r = {r}")));
        }
        let specht = sym_characters::specht_model(nu, specht_cap)?;
        let half = half_diagrams(r, nu.size());
        let index = half.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        Ok(StandardModule {
            r,
            nu: nu.clone(),
            delta,
            half,
            index,
            specht,
        })
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn label(&self) -> &Partition {
        &self.nu
    }

    pub fn dim(&self) -> usize {
        self.half.len() * self.specht.dim()
    }

    pub fn half_diagrams(&self) -> &[SetPartitionDiagram] {
        &self.half
    }

    /// `X (v ⊗ x)` for the basis element `basis`, as sparse coordinates.
    pub fn act(&self, x: &SetPartitionDiagram, basis: usize) -> Result<Vec<(usize, BigRational)>> {
        if x.top != self.r || x.bottom != self.r {
            return Err(Error::DegreeMismatch(format!(
                "({},{}) diagram acting on Δ_{}({})",
                x.top, x.bottom, self.r, self.nu
            )));
        }
        let f = self.specht.dim();
        let (h, j) = (basis / f, basis % f);
        let (t, v) = compose(x, &self.half[h])?;
        if v.propagating_count() < self.nu.size() {
            return Ok(Vec::new());
        }
        let (canonical, pi) = factor_half_diagram(&v);
        let target = self.index[&canonical];
        let g = self.specht.permutation_matrix(&invert(&pi));
        let scalar = num::pow(self.delta.clone(), t);
        Ok((0..f)
            .filter(|&i| !g.get(i, j).is_zero())
            .map(|i| (target * f + i, g.get(i, j) * &scalar))
            .collect())
    }

    /// Matrix of a diagram; column `b` holds the image of basis element `b`.
    pub fn matrix_of(&self, x: &SetPartitionDiagram) -> Result<QMatrix> {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for b in 0..n {
            for (i, c) in self.act(x, b)? {
                m.add_to(i, b, &c);
            }
        }
        Ok(m)
    }

    pub fn matrix_of_element(&self, e: &AlgebraElement) -> Result<QMatrix> {
        if e.delta() != &self.delta {
            return Err(Error::DegreeMismatch(format!(
                "element at δ = {} on module at δ = {}",
                e.delta(),
                self.delta
            )));
        }
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (d, c) in e.terms() {
            m = &m + &self.matrix_of(d)?.scale(c);
        }
        Ok(m)
    }

    /// Gram matrix of the cell form: `⟨v ⊗ x, w ⊗ y⟩ = δ^t x^T B ρ(g) y` when
    /// `flip(v) ∘ w = δ^t D_π` keeps all `|ν|` strands (zero otherwise), with
    /// `g = π^{-1}` and `B` an `S_|ν|`-invariant form on `S(ν)`.
    pub fn gram_matrix(&self) -> Result<QMatrix> {
        let f = self.specht.dim();
        let p = self.nu.size();
        let form = self.invariant_form();
        let n = self.dim();
        let mut gram = QMatrix::zeros(n, n);
        for (a, v) in self.half.iter().enumerate() {
            let vf = v.flip();
            for (b, w) in self.half.iter().enumerate() {
                let (t, d) = compose(&vf, w)?;
                if d.propagating_count() < p {
                    continue;
                }
                let pi: Vec<usize> = (0..p)
                    .map(|k| d.bottom_labels().iter().position(|&l| l == d.labels[k]).unwrap())
                    .collect();
                let block = &form * &self.specht.permutation_matrix(&invert(&pi));
                let scalar = num::pow(self.delta.clone(), t);
                for i in 0..f {
                    for j in 0..f {
                        let v = block.get(i, j) * &scalar;
                        gram.set(a * f + i, b * f + j, v);
                    }
                }
            }
        }
        Ok(gram)
    }

    /// `Σ_g ρ(g)^T ρ(g)`, positive definite and `S_|ν|`-invariant.
    fn invariant_form(&self) -> QMatrix {
        let p = self.nu.size();
        let f = self.specht.dim();
        let mut form = QMatrix::zeros(f, f);
        for perm in permutations(p) {
            let g = self.specht.permutation_matrix(&perm);
            form = &form + &(&g.transpose() * &g);
        }
        form
    }
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..n {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Block census of an `(r+s, p)` diagram with respect to the split of the
/// top row into `{1..r}` and `{r+1..r+s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingProfile {
    /// Propagating blocks whose top vertices lie in `{1..r}`.
    pub p_r: usize,
    /// Propagating blocks whose top vertices lie in `{r+1..r+s}`.
    pub p_s: usize,
    /// Propagating crossing blocks.
    pub p_c: usize,
    /// Non-propagating crossing blocks.
    pub n_c: usize,
}

pub fn crossing_profile(d: &SetPartitionDiagram, r: usize, s: usize) -> Result<CrossingProfile> {
    if d.top != r + s {
        return Err(Error::DegreeMismatch(format!(
            "diagram has {} top vertices, split is {r} + {s}",
            d.top
        )));
    }
    if d.propagating_count() != d.bottom {
        return Err(Error::InvalidDiagram(format!(
            "expected {} propagating blocks, found {}",
            d.bottom,
            d.propagating_count()
        )));
    }
    let blocks = d.block_count();
    let mut left = vec![false; blocks];
    let mut right = vec![false; blocks];
    let mut down = vec![false; blocks];
    for (k, &l) in d.top_labels().iter().enumerate() {
        if k < r {
            left[l as usize] = true;
        } else {
            right[l as usize] = true;
        }
    }
    for &l in d.bottom_labels() {
        down[l as usize] = true;
    }
    let mut profile = CrossingProfile {
        p_r: 0,
        p_s: 0,
        p_c: 0,
        n_c: 0,
    };
    for b in 0..blocks {
        match (left[b], right[b], down[b]) {
            (true, true, true) => profile.p_c += 1,
            (true, true, false) => profile.n_c += 1,
            (true, false, true) => profile.p_r += 1,
            (false, true, true) => profile.p_s += 1,
            _ => {}
        }
    }
    Ok(profile)
}

/// `[Δ_{r+s}(ν)↓_{P_r ⊗ P_s} : Δ_r(λ) ⊠ Δ_s(μ)]`
/// `= Σ c^ν_{α,β,π} c^λ_{α,ρ,γ} c^μ_{γ,σ,β} g^π_{ρ,σ}` over
/// `l_1 + 2 l_2 = l - l_r - l_s`, `α ⊢ r-l_r-l_1-l_2`, `β ⊢ s-l_s-l_1-l_2`,
/// `π, ρ, σ ⊢ l_1`, `γ ⊢ l_2`, where `l = r+s-|ν|`, `l_r = r-|λ|`, `l_s = s-|μ|`.
pub fn restrict_multiplicity(
    nu: &Partition,
    r: usize,
    s: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<u64> {
    let m = r + s;
    if nu.size() > m || lambda.size() > r || mu.size() > s {
        return Ok(0);
    }
    let l = m - nu.size();
    let (lr_, ls) = (r - lambda.size(), s - mu.size());
    let Some(budget) = l.checked_sub(lr_ + ls) else {
        return Ok(0);
    };
    let mut total = 0u64;
    for l2 in 0..=budget / 2 {
        let l1 = budget - 2 * l2;
        let (Some(a), Some(b)) = (lambda.size().checked_sub(l1 + l2), mu.size().checked_sub(l1 + l2)) else {
            continue;
        };
        let small = Partition::all(l1);
        let gammas = Partition::all(l2);
        for alpha in Partition::all(a) {
            for beta in Partition::all(b) {
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
                                total += c_nu * c_lambda * c_mu * kron_oracle(rho, sigma, pi)?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(total)
}

/// All nonzero `(λ, μ, multiplicity)` in `Δ_{r+s}(ν)↓_{P_r ⊗ P_s}`.
pub fn restriction_table(nu: &Partition, r: usize, s: usize) -> Result<Vec<(Partition, Partition, u64)>> {
    let mut rows = Vec::new();
    let by_size_desc = |k: usize| (0..=k).rev().flat_map(Partition::all).collect::<Vec<_>>();
    for lambda in by_size_desc(r) {
        for mu in by_size_desc(s) {
            let m = restrict_multiplicity(nu, r, s, &lambda, &mu)?;
            if m > 0 {
                rows.push((lambda.clone(), mu, m));
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> SetPartitionDiagram {
        s.parse().unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    const EXAMPLE: &str = "{1,2,4,2',5'}{3}{5,6,7,3',4',6',7'}{8,8'}{1'}";

    #[test]
    fn text_format_round_trip() {
        let x = d(EXAMPLE);
        assert_eq!((x.top(), x.bottom()), (8, 8));
        assert_eq!(x.block_count(), 5);
        assert_eq!(x.to_string(), EXAMPLE);
        let shuffled = d("{8',8}{3}{1'}{5',2,1,4,2'}{7',6',4',3',7,6,5}");
        assert_eq!(shuffled, x);
    }

    #[test]
    fn text_format_errors() {
        for bad in ["{1,2", "{1}{1}", "{1}{3}", "{0}", "{a}", "1,2", "{1}{}"] {
            assert!(bad.parse::<SetPartitionDiagram>().is_err(), "{bad}");
        }
    }

    #[test]
    fn propagating_examples() {
        assert_eq!(SetPartitionDiagram::identity(4).propagating_count(), 4);
        assert_eq!(d(EXAMPLE).propagating_count(), 3);
        assert_eq!(d("{1}{2}{3}{1'}{2'}{3'}").propagating_count(), 0);
    }

    #[test]
    fn identity_composition() {
        let x = d(EXAMPLE);
        let id = SetPartitionDiagram::identity(8);
        assert_eq!(compose(&id, &x).unwrap(), (0, x.clone()));
        assert_eq!(compose(&x, &id).unwrap(), (0, x));
    }

    #[test]
    fn worked_products() {
        let (t, z) = compose(&d("{1,2'}{2,1'}"), &d("{1,1',2'}{2}")).unwrap();
        assert_eq!((t, z), (0, d("{1}{2,1',2'}")));
        let (t, z) = compose(&d("{1,2,1'}{2'}"), &d("{1,2'}{2}{1'}")).unwrap();
        assert_eq!((t, z), (1, d("{1,2,2'}{1'}")));
    }

    #[test]
    fn compose_rejects_mismatch() {
        assert!(matches!(
            compose(
                &SetPartitionDiagram::identity(2),
                &SetPartitionDiagram::identity(3)
            ),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn generators() {
        let delta = q(5);
        let e2 = generator_e(2, 2, delta.clone()).unwrap();
        assert_eq!(e2.terms().len(), 1);
        assert_eq!(e2.coefficient(&d("{1,1'}{2}{2'}")), q(1) / q(5));
        for l in 1..=3 {
            let e = generator_e(l, 3, delta.clone()).unwrap();
            assert_eq!(e.mul(&e).unwrap(), e);
        }
        let s = generator_s(1, 3, 3, delta.clone()).unwrap();
        assert_eq!(
            s.mul(&s).unwrap(),
            AlgebraElement::identity(3, delta.clone()).unwrap()
        );
        assert!(matches!(generator_e(1, 1, q(0)), Err(Error::ZeroDelta)));
        assert!(AlgebraElement::zero(2, q(0)).is_err());
        assert!(generator_s(2, 2, 3, delta).is_err());
    }

    #[test]
    fn bell_numbers() {
        let expect = [1u32, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in expect.iter().enumerate() {
            assert_eq!(bell(n), BigUint::from(b));
        }
        for r in 0..=3 {
            assert_eq!(BigUint::from(SetPartitionDiagram::all(r, r).len()), bell(2 * r));
        }
    }

    #[test]
    fn standard_dimensions() {
        assert_eq!(dim_standard(2, &p(&[1])), BigUint::from(3u32));
        assert_eq!(dim_standard(2, &Partition::empty()), BigUint::from(2u32));
        for r in 0..=6 {
            assert_eq!(dim_standard(r, &p(&[r])), BigUint::one());
        }
        for r in 0..=4 {
            for nu in Partition::up_to(r) {
                let module = StandardModule::new(r, &nu, q(7), 7).unwrap();
                assert_eq!(BigUint::from(module.dim()), dim_standard(r, &nu));
            }
        }
    }

    #[test]
    fn half_diagrams_have_noncrossing_strands() {
        for r in 0..=5 {
            for p in 0..=r {
                for h in half_diagrams(r, p) {
                    assert_eq!(h.propagating_count(), p);
                    let (canonical, pi) = factor_half_diagram(&h);
                    assert_eq!(canonical, h);
                    assert_eq!(pi, (0..p).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn factorization_recovers_diagram() {
        // v' = v'' ∘ D_π for every half diagram with permuted strands.
        for h in half_diagrams(4, 3) {
            for perm in permutations(3) {
                let v = compose(&h, &SetPartitionDiagram::permutation(&perm)).unwrap().1;
                let (canonical, pi) = factor_half_diagram(&v);
                assert_eq!(canonical, h);
                assert_eq!(pi, perm);
            }
        }
    }

    #[test]
    fn e2_on_three_dimensional_module() {
        let delta = q(3);
        let module = StandardModule::new(2, &p(&[1]), delta.clone(), 7).unwrap();
        let e2 = generator_e(2, 2, delta.clone()).unwrap();
        let m = module.matrix_of_element(&e2).unwrap();
        let idx = |s: &str| module.half_diagrams().iter().position(|h| *h == d(s)).unwrap();
        let (joined, left, right) = (idx("{1,2,1'}"), idx("{1,1'}{2}"), idx("{1}{2,1'}"));
        let third = q(1) / q(3);
        // e_2 {1,2,1'} = (1/δ) {1,1'}{2}
        assert_eq!(m.get(left, joined), &third);
        assert_eq!(m.get(joined, joined), &q(0));
        // e_2 {1,1'}{2} = (1/δ) δ {1,1'}{2}
        assert_eq!(m.get(left, left), &q(1));
        // e_2 {1}{2,1'} loses its strand
        for i in 0..3 {
            assert_eq!(m.get(i, right), &q(0));
        }
    }

    #[test]
    fn identity_acts_as_identity() {
        for r in 0..=3 {
            for nu in Partition::up_to(r) {
                let module = StandardModule::new(r, &nu, q(2), 7).unwrap();
                let m = module.matrix_of(&SetPartitionDiagram::identity(r)).unwrap();
                assert_eq!(m, QMatrix::identity(module.dim()));
            }
        }
    }

    #[test]
    fn fewer_strands_kill_top_layer() {
        for r in 1..=3 {
            for nu in Partition::all(r) {
                let module = StandardModule::new(r, &nu, q(4), 7).unwrap();
                let e = generator_e(r, r, q(4)).unwrap();
                assert!(module.matrix_of_element(&e).unwrap().is_zero());
            }
        }
        let module = StandardModule::new(2, &p(&[2]), q(4), 7).unwrap();
        assert!(module.matrix_of(&d("{1,2}{1',2'}")).unwrap().is_zero());
    }

    #[test]
    fn cell_form_is_invariant() {
        // ⟨X a, b⟩ = ⟨a, flip(X) b⟩ for every diagram X of P_2 and P_3.
        for r in 1..=3 {
            for nu in Partition::up_to(r) {
                let module = StandardModule::new(r, &nu, q(3) / q(2), 7).unwrap();
                let gram = module.gram_matrix().unwrap();
                assert_eq!(gram, gram.transpose(), "r={r} ν={nu}");
                for x in SetPartitionDiagram::all(r, r)
                    .into_iter()
                    .step_by(if r == 3 { 7 } else { 1 })
                {
                    let mx = module.matrix_of(&x).unwrap();
                    let mf = module.matrix_of(&x.flip()).unwrap();
                    assert_eq!(&mx.transpose() * &gram, &gram * &mf, "r={r} ν={nu} X={x}");
                }
            }
        }
    }

    #[test]
    fn crossing_profile_of_figure_diagram() {
        // Sixteen top vertices, five strands, wall after vertex 10.
        let w = d("{1}{2,3,4,1'}{5,12}{6,13}{7}{8,9,14,2'}{10,11,3'}{15,5'}{16,4'}");
        assert_eq!((w.top(), w.bottom()), (16, 5));
        let prof = crossing_profile(&w, 10, 6).unwrap();
        assert_eq!(
            prof,
            CrossingProfile {
                p_r: 1,
                p_s: 2,
                p_c: 2,
                n_c: 2
            }
        );
        assert_eq!(prof.p_r + prof.p_s + prof.p_c, 5);
    }

    #[test]
    fn crossing_profile_without_crossings() {
        let h = SetPartitionDiagram::from_labels(5, 2, &[0, 1, 2, 3, 4, 0, 3]).unwrap();
        let prof = crossing_profile(&h, 3, 2).unwrap();
        assert_eq!(
            prof,
            CrossingProfile {
                p_r: 1,
                p_s: 1,
                p_c: 0,
                n_c: 0
            }
        );
        assert!(crossing_profile(&d("{1,2,1',2'}"), 1, 1).is_err());
        assert!(crossing_profile(&h, 2, 2).is_err());
    }

    #[test]
    fn worked_restrictions() {
        let e = Partition::empty();
        let one = p(&[1]);
        for nu in [p(&[2]), p(&[1, 1])] {
            assert_eq!(
                restriction_table(&nu, 1, 1).unwrap(),
                vec![(one.clone(), one.clone(), 1)]
            );
        }
        assert_eq!(
            restriction_table(&one, 1, 1).unwrap(),
            vec![
                (one.clone(), one.clone(), 1),
                (one.clone(), e.clone(), 1),
                (e.clone(), one.clone(), 1),
            ]
        );
        assert_eq!(
            restriction_table(&e, 1, 1).unwrap(),
            vec![(one.clone(), one.clone(), 1), (e.clone(), e.clone(), 1)]
        );
    }
}

//! The rank-`ell` truncated exterior algebra `A(G)` on generators
//! `e_1, ..., e_n`, with coefficients in any [`Coeff`] ring.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{Coeff, Rational};

/// Largest supported hyperplane count; index sets are stored as `u32` masks
/// over `1..=n+1`.
pub const MAX_HYPERPLANES: usize = 30;

/// A subset of `{1, ..., 31}` stored as a bit mask (bit `i` is index `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(pub u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u32;
        for i in indices {
            assert!((1..=31).contains(&i), "index {i} outside 1..=31");
            bits |= 1 << i;
        }
        IndexSet(bits)
    }

    /// `{1, ..., k}`.
    pub fn initial(k: usize) -> Self {
        IndexSet::from_indices(1..=k)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(self, i: usize) -> Self {
        IndexSet(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        IndexSet(self.0 & !(1 << i))
    }

    pub fn union(self, o: Self) -> Self {
        IndexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        IndexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        IndexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly greater than `i`.
    fn count_above(self, i: usize) -> u32 {
        if i >= 31 {
            return 0;
        }
        (self.0 & !((1u32 << (i + 1)) - 1)).count_ones()
    }

    /// Compact label such as `345` (or `3,10,11` once an index exceeds 9).
    pub fn label(self) -> String {
        let v = self.to_vec();
        if v.iter().all(|&i| i < 10) {
            v.iter().map(|i| i.to_string()).collect()
        } else {
            v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// All subsets of `{1..=n}` of size `k`, lexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let mut idx: Vec<usize> = (1..=k).collect();
        loop {
            out.push(IndexSet::from_indices(idx.iter().copied()));
            // rightmost position that can still advance
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + 1 + p) else {
                return out;
            };
            idx[pos] += 1;
            for t in pos + 1..k {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }

    /// All subsets of `{1..=n}`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = IndexSet> {
        (0u32..(1u32 << n)).map(|m| IndexSet(m << 1))
    }
}

impl Ord for IndexSet {
    /// Lexicographic comparison of the increasing tuples.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    o => return o,
                },
            }
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_vec().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Basis monomial `e_T` of the exterior algebra; `T` is a strictly
/// increasing tuple, the empty tuple being the unit.
pub type Monomial = IndexSet;

/// Canonicalizes a tuple of generator indices: `None` if an index repeats
/// (the product vanishes), otherwise the sorted monomial and the sign of the
/// sorting permutation.
pub fn sort_with_sign(tuple: &[usize], n: usize) -> Result<Option<(Monomial, i64)>> {
    let mut seen = IndexSet::EMPTY;
    let mut inversions = 0u32;
    for &i in tuple {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        if seen.contains(i) {
            return Ok(None);
        }
        inversions += seen.count_above(i);
        seen = seen.insert(i);
    }
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Ok(Some((seen, sign)))
}

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}` for disjoint `a`, `b`.
pub fn wedge_sign(a: Monomial, b: Monomial) -> i64 {
    let mut inv = 0u32;
    for j in b.iter() {
        inv += a.count_above(j);
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(n, ell)`: `n` generators, truncation above degree `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub n: usize,
    pub ell: usize,
}

impl Ambient {
    pub fn new(n: usize, ell: usize) -> Result<Self> {
        if ell == 0 || ell > n || n > MAX_HYPERPLANES {
            return Err(Error::InvalidAmbient { n, ell });
        }
        Ok(Ambient { n, ell })
    }

    /// Basis monomials of degree `q`, lexicographic.
    pub fn basis(&self, q: usize) -> Vec<Monomial> {
        if q > self.ell {
            return Vec::new();
        }
        IndexSet::k_subsets(self.n, q)
    }

    pub fn dim(&self, q: usize) -> usize {
        if q > self.ell {
            0
        } else {
            crate::ring::binomial(self.n as i64, q as i64) as usize
        }
    }

    fn check(&self, other: &Ambient) -> Result<()> {
        if self != other {
            return Err(Error::AmbientMismatch(self.n, self.ell, other.n, other.ell));
        }
        Ok(())
    }
}

/// Ordered basis of one degree with reverse lookup.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(amb: &Ambient, q: usize) -> Self {
        Self::from_monomials(q, amb.basis(q))
    }

    pub fn from_monomials(degree: usize, monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        DegreeBasis {
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).copied()
    }
}

/// Sparse element of `A(G) ⊗ C`.
#[derive(Clone, PartialEq)]
pub struct ExtElement<C: Coeff> {
    ambient: Ambient,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> fmt::Debug for ExtElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtElement{:?}{{", (self.ambient.n, self.ambient.ell))?;
        for (m, c) in &self.terms {
            write!(f, " {c:?}·e{m:?}")?;
        }
        write!(f, " }}")
    }
}

impl<C: Coeff> ExtElement<C> {
    pub fn zero(ambient: Ambient) -> Self {
        ExtElement {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::monomial(ambient, Monomial::EMPTY, C::one())
    }

    /// `c · e_m`; monomials above degree `ell` give zero.
    pub fn monomial(ambient: Ambient, m: Monomial, c: C) -> Self {
        let mut x = Self::zero(ambient);
        x.add_term(m, c);
        x
    }

    /// The generator `e_j`, `1 <= j <= n`.
    pub fn generator(ambient: Ambient, j: usize) -> Result<Self> {
        if j == 0 || j > ambient.n {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: ambient.n,
            });
        }
        Ok(Self::monomial(ambient, IndexSet::from_indices([j]), C::one()))
    }

    /// `e_T` for an ordered tuple (sign from sorting, zero on repeats).
    pub fn from_tuple(ambient: Ambient, tuple: &[usize]) -> Result<Self> {
        Ok(match sort_with_sign(tuple, ambient.n)? {
            None => Self::zero(ambient),
            Some((m, s)) => Self::monomial(ambient, m, C::one().scale_int(s)),
        })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(q)` when every term has degree `q` (zero has no degree).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.len());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() || m.len() > self.ambient.ell {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ambient.check(&other.ambient)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.ambient);
        for (m, v) in &self.terms {
            out.add_term(*m, v.mul(c));
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> ExtElement<D> {
        let mut out = ExtElement::zero(self.ambient);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Exterior product, truncated above degree `ell`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.ambient.check(&other.ambient)?;
        let mut out = Self::zero(self.ambient);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.intersection(*b) != IndexSet::EMPTY || a.len() + b.len() > self.ambient.ell {
                    continue;
                }
                let c = ca.mul(cb).scale_int(wedge_sign(*a, *b));
                out.add_term(a.union(*b), c);
            }
        }
        Ok(out)
    }

    /// `∂ e_T = Σ_k (-1)^{k-1} e_{T_k}`, extended linearly; `∂ e_j = 1`.
    pub fn boundary(&self) -> Self {
        let mut out = Self::zero(self.ambient);
        for (m, c) in &self.terms {
            for (k, i) in m.iter().enumerate() {
                let s = if k % 2 == 0 { 1 } else { -1 };
                out.add_term(m.remove(i), c.scale_int(s));
            }
        }
        out
    }

    /// `e_j ∧ x` computed without truncation side effects on `∂`:
    /// returns `∂(e_j ∧ x) = x - e_j ∧ ∂x` for homogeneous `x`.
    pub fn boundary_of_left_product(&self, j: usize) -> Result<Self> {
        let ej = Self::generator(self.ambient, j)?;
        self.sub(&ej.wedge(&self.boundary())?)
    }

    /// Coordinates in a degree basis; terms of other degrees are rejected.
    pub fn coordinates(&self, basis: &DegreeBasis) -> Result<Vec<C>> {
        let mut v = vec![C::zero(); basis.len()];
        for (m, c) in &self.terms {
            let pos = basis.position(*m).ok_or_else(|| {
                Error::Internal(format!("monomial {m:?} not in degree-{} basis", basis.degree))
            })?;
            v[pos] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coordinates(ambient: Ambient, basis: &DegreeBasis, coords: &[C]) -> Self {
        let mut out = Self::zero(ambient);
        for (m, c) in basis.monomials.iter().zip(coords) {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl ExtElement<Poly> {
    /// Evaluates every coefficient at `y_j = values[j - 1]`.
    pub fn specialize(&self, values: &[Rational]) -> ExtElement<Rational> {
        self.map_coeffs(|p| p.eval(values))
    }
}

/// `∂e_S` for an index set of size up to `ell + 1` (the monomial `e_S`
/// itself may lie above the truncation).
pub fn boundary_of_set<C: Coeff>(ambient: Ambient, s: IndexSet) -> ExtElement<C> {
    let mut out = ExtElement::zero(ambient);
    for (k, i) in s.iter().enumerate() {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        out.add_term(s.remove(i), C::one().scale_int(sign));
    }
    out
}

/// `η_S = Σ_{i∈S} y_i e_i` with formal coefficients, `S ⊆ [n]`.
pub fn eta_formal(ambient: Ambient, s: IndexSet) -> Result<ExtElement<Poly>> {
    let mut out = ExtElement::zero(ambient);
    for i in s.iter() {
        if i > ambient.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: ambient.n,
            });
        }
        out.add_term(IndexSet::from_indices([i]), Poly::var(i, ambient.n));
    }
    Ok(out)
}

/// `η_S = Σ_{i∈S} λ_i e_i`, `S ⊆ [n]`.
pub fn eta_weighted(ambient: Ambient, s: IndexSet, lambda: &[Rational]) -> Result<ExtElement<Rational>> {
    let mut out = ExtElement::zero(ambient);
    for i in s.iter() {
        if i > ambient.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: ambient.n,
            });
        }
        out.add_term(IndexSet::from_indices([i]), lambda[i - 1].clone());
    }
    Ok(out)
}

/// `e_λ = Σ_j λ_j e_j`.
pub fn e_lambda(ambient: Ambient, lambda: &[Rational]) -> ExtElement<Rational> {
    let mut out = ExtElement::zero(ambient);
    for (j, l) in lambda.iter().enumerate().take(ambient.n) {
        out.add_term(IndexSet::from_indices([j + 1]), l.clone());
    }
    out
}

/// `e_y = Σ_j y_j e_j`.
pub fn e_y(ambient: Ambient) -> ExtElement<Poly> {
    eta_formal(ambient, IndexSet::initial(ambient.n)).expect("indices in range")
}

/// `dim H_ell(A(G), ∂) = C(n-1, ell)`.
pub fn beta_count(n: usize, ell: usize) -> usize {
    if n == 0 {
        return 0;
    }
    crate::ring::binomial(n as i64 - 1, ell as i64) as usize
}

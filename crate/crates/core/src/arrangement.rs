//! Realizations, ranks and multiplicities, combinatorial types, pencil
//! types, principal dependence, dense edges and nonresonant weights.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{Ambient, IndexSet, MAX_HYPERPLANES};
use crate::linalg::rank_of_rows;
use crate::ring::{format_rational, frac, is_nonnegative_integer, rat, Rational};

/// `n` projective hyperplanes in `P^ell` plus the hyperplane at infinity.
///
/// Row `i` (1-based) is `(b_{i,0}, ..., b_{i,ell})`, the hyperplane
/// `b_{i,0} x_0 + ... + b_{i,ell} x_ell = 0`; row `n + 1` is `(1, 0, ..., 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    n: usize,
    ell: usize,
    rows: Vec<Vec<Rational>>,
}

impl Realization {
    /// Builds a realization from the `n` finite rows.
    pub fn new(ell: usize, finite_rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = finite_rows.len();
        if ell == 0 || n < ell || n + 1 > MAX_HYPERPLANES {
            return Err(Error::InvalidAmbient { n, ell });
        }
        for (i, row) in finite_rows.iter().enumerate() {
            if row.len() != ell + 1 {
                return Err(Error::InvalidRealization(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    ell + 1
                )));
            }
            if row[1..].iter().all(Zero::is_zero) {
                return Err(Error::InvalidRealization(format!(
                    "row {} is zero or the hyperplane at infinity",
                    i + 1
                )));
            }
        }
        let mut rows = finite_rows;
        let mut inf = vec![Rational::zero(); ell + 1];
        inf[0] = rat(1);
        rows.push(inf);
        let b = Realization { n, ell, rows };
        if b.rank(IndexSet::initial(n + 1)) != ell + 1 {
            return Err(Error::InvalidRealization(
                "rows do not span: fewer than ell independent hyperplanes".into(),
            ));
        }
        Ok(b)
    }

    /// Convenience constructor from integer rows.
    pub fn from_int_rows(ell: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(ell, rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn ambient(&self) -> Ambient {
        Ambient { n: self.n, ell: self.ell }
    }

    /// Row `i` for `1 <= i <= n + 1`.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.rows[i - 1]
    }

    pub fn finite_rows(&self) -> &[Vec<Rational>] {
        &self.rows[..self.n]
    }

    fn check_subset(&self, s: IndexSet) {
        assert!(
            s.is_subset(IndexSet::initial(self.n + 1)),
            "subset {s:?} outside 1..={}",
            self.n + 1
        );
    }

    /// Rank of the submatrix `N_S` of rows in `S ⊆ [n+1]`.
    pub fn rank(&self, s: IndexSet) -> usize {
        self.check_subset(s);
        let rows: Vec<Vec<Rational>> = s.iter().map(|i| self.rows[i - 1].clone()).collect();
        rank_of_rows(&rows)
    }

    /// `m_S = |S| - rank N_S`.
    pub fn multiplicity(&self, s: IndexSet) -> usize {
        s.len() - self.rank(s)
    }

    /// True when the hyperplanes of `S ⊆ [n]` meet in the affine chart
    /// `x_0 = 1` (coefficient block rank equals full rank).
    pub fn meets_affinely(&self, s: IndexSet) -> bool {
        self.check_subset(s);
        let full: Vec<Vec<Rational>> = s.iter().map(|i| self.rows[i - 1].clone()).collect();
        let coef: Vec<Vec<Rational>> = full.iter().map(|r| r[1..].to_vec()).collect();
        rank_of_rows(&coef) == rank_of_rows(&full)
    }

    /// Hyperplanes of `[n+1]` whose addition to `S` does not raise the rank.
    pub fn closure(&self, s: IndexSet) -> IndexSet {
        let r = self.rank(s);
        let mut out = s;
        for j in 1..=self.n + 1 {
            if !s.contains(j) && self.rank(s.insert(j)) == r {
                out = out.insert(j);
            }
        }
        out
    }
}

/// Combinatorial type recorded as `Dep(T)*` with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombType {
    n: usize,
    ell: usize,
    dep: BTreeMap<IndexSet, usize>,
}

impl CombType {
    pub fn general_position(n: usize, ell: usize) -> Result<Self> {
        Self::from_list(n, ell, [])
    }

    pub fn from_list(n: usize, ell: usize, sets: impl IntoIterator<Item = (IndexSet, usize)>) -> Result<Self> {
        Ambient::new(n, ell)?;
        let all = IndexSet::initial(n + 1);
        let mut dep = BTreeMap::new();
        for (s, m) in sets {
            if !s.is_subset(all) {
                let bad = s.difference(all).min().unwrap_or(0);
                return Err(Error::IndexOutOfRange { index: bad, max: n + 1 });
            }
            if m == 0 || m >= s.len() {
                return Err(Error::InvalidRealization(format!(
                    "multiplicity {m} impossible for {}",
                    s.label()
                )));
            }
            dep.insert(s, m);
        }
        Ok(CombType { n, ell, dep })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn ambient(&self) -> Ambient {
        Ambient { n: self.n, ell: self.ell }
    }

    /// `(S, m_S)` pairs in lexicographic order of `S`.
    pub fn dep_star(&self) -> impl Iterator<Item = (IndexSet, usize)> + '_ {
        self.dep.iter().map(|(s, m)| (*s, *m))
    }

    pub fn len(&self) -> usize {
        self.dep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dep.is_empty()
    }

    pub fn contains(&self, s: IndexSet) -> bool {
        self.dep.contains_key(&s)
    }

    /// `m_S`, zero when `S` is not in `Dep*`.
    pub fn multiplicity(&self, s: IndexSet) -> usize {
        self.dep.get(&s).copied().unwrap_or(0)
    }

    /// Containment of dependent families (multiplicities ignored).
    pub fn dep_subset_of(&self, other: &CombType) -> bool {
        self.dep.keys().all(|s| other.dep.contains_key(s))
    }

    /// Image under a relabeling `j -> perm[j - 1]` of `[n+1]`.
    pub fn relabel(&self, perm: &[usize]) -> CombType {
        assert_eq!(perm.len(), self.n + 1, "relabeling must act on 1..=n+1");
        let dep = self
            .dep
            .iter()
            .map(|(s, m)| (IndexSet::from_indices(s.iter().map(|j| perm[j - 1])), *m))
            .collect();
        CombType {
            n: self.n,
            ell: self.ell,
            dep,
        }
    }

    /// Compact listing such as `126:1 345:2`.
    pub fn label(&self) -> String {
        self.dep
            .iter()
            .map(|(s, m)| format!("{}:{m}", s.label()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `Dep(T)*` of a realization: subsets `S ⊆ [n+1]` with
/// `rank N_S <= min(|S| - 1, ell)`.
pub fn dep_star_of(b: &Realization) -> CombType {
    let mut dep = BTreeMap::new();
    // depth-first over increasing index sequences; rank ell+1 prunes all supersets
    fn walk(b: &Realization, s: IndexSet, next: usize, dep: &mut BTreeMap<IndexSet, usize>) {
        for j in next..=b.n + 1 {
            let t = s.insert(j);
            let r = b.rank(t);
            if r > b.ell {
                continue;
            }
            if r < t.len() {
                dep.insert(t, t.len() - r);
            }
            walk(b, t, j + 1, dep);
        }
    }
    walk(b, IndexSet::EMPTY, 1, &mut dep);
    CombType {
        n: b.n,
        ell: b.ell,
        dep,
    }
}

/// `Dep(T(S, r))*`: the type of a pencil in which the hyperplanes of `S` pass
/// through a common codimension-`r` flat and the rest are generic.
///
/// `K` is dependent iff `|K ∩ S| >= r + 1` and `r + |K \ S| <= ell`, with
/// `m_K = |K ∩ S| - r`.
pub fn pencil_type(n: usize, ell: usize, s: IndexSet, r: usize) -> Result<CombType> {
    let amb = Ambient::new(n, ell)?;
    let all = IndexSet::initial(n + 1);
    if !s.is_subset(all) {
        let bad = s.difference(all).min().unwrap_or(0);
        return Err(Error::IndexOutOfRange { index: bad, max: n + 1 });
    }
    let max = ell.min(s.len().saturating_sub(1));
    if r == 0 || r > max {
        return Err(Error::RankOutOfRange { r, max });
    }
    let mut dep = BTreeMap::new();
    let rest = all.difference(s);
    // K = (subset of S with >= r+1 elements) ∪ (subset of the rest with <= ell - r elements)
    let s_parts: Vec<IndexSet> = subsets_of(s).filter(|a| a.len() > r).collect();
    let rest_parts: Vec<IndexSet> = subsets_of(rest).filter(|c| c.len() + r <= ell).collect();
    for a in &s_parts {
        for c in &rest_parts {
            dep.insert(a.union(*c), a.len() - r);
        }
    }
    Ok(CombType {
        n: amb.n,
        ell: amb.ell,
        dep,
    })
}

/// All subsets of `s`, including the empty set.
pub fn subsets_of(s: IndexSet) -> impl Iterator<Item = IndexSet> {
    let elems = s.to_vec();
    (0u32..(1u32 << elems.len())).map(move |mask| {
        IndexSet::from_indices(elems.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e))
    })
}

/// `Dep(T', T)* = Dep(T')* \ Dep(T)*` with the multiplicities of `T'`.
pub fn dep_difference(t: &CombType, t_prime: &CombType) -> Result<BTreeMap<IndexSet, usize>> {
    if (t.n, t.ell) != (t_prime.n, t_prime.ell) {
        return Err(Error::AmbientMismatch(t.n, t.ell, t_prime.n, t_prime.ell));
    }
    if let Some(missing) = t.dep.keys().find(|s| !t_prime.contains(**s)) {
        return Err(Error::NotADegeneration(format!(
            "{} is dependent in the generic type but not in the degeneration",
            missing.label()
        )));
    }
    Ok(t_prime
        .dep
        .iter()
        .filter(|(s, _)| !t.contains(**s))
        .map(|(s, m)| (*s, *m))
        .collect())
}

/// Result of the principal-dependence search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Principal {
    pub s: IndexSet,
    pub r: usize,
    /// Every `S_i` in `Dep(T', T)*` with its minimal pencil rank `r_i`.
    pub candidates: Vec<(IndexSet, usize)>,
}

/// Minimal `r` with `Dep(T(S, r))* ⊆ Dep(T')*`, if any.
pub fn minimal_pencil_rank(t_prime: &CombType, s: IndexSet) -> Option<usize> {
    let max = t_prime.ell.min(s.len().saturating_sub(1));
    (1..=max).find(|&r| {
        pencil_type(t_prime.n, t_prime.ell, s, r)
            .map(|p| p.dep_subset_of(t_prime))
            .unwrap_or(false)
    })
}

/// The principal dependence `(S, r)` of a codimension-one degeneration
/// `T -> T'`.
pub fn principal_dependence(t: &CombType, t_prime: &CombType) -> Result<Principal> {
    let diff = dep_difference(t, t_prime)?;
    if diff.is_empty() {
        return Err(Error::NotADegeneration("no new dependent sets".into()));
    }
    let candidates: Vec<(IndexSet, usize)> = diff
        .keys()
        .filter_map(|&s| minimal_pencil_rank(t_prime, s).map(|r| (s, r)))
        .collect();
    let Some(r) = candidates.iter().map(|c| c.1).min() else {
        return Err(Error::NotADegeneration(
            "no new dependent set is supported by a pencil of the degeneration".into(),
        ));
    };
    let minimal: Vec<IndexSet> = candidates.iter().filter(|c| c.1 == r).map(|c| c.0).collect();
    let top = minimal.iter().copied().find(|&s| minimal.iter().all(|&o| o.is_subset(s)));
    match top {
        Some(s) => Ok(Principal { s, r, candidates }),
        None => Err(Error::NoUniquePrincipal(
            minimal.iter().map(|s| format!("({},{r})", s.label())).collect::<Vec<_>>().join(", "),
        )),
    }
}

/// A flat of the projective closure, recorded by the hyperplanes containing it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub rank: usize,
    pub hyperplanes: IndexSet,
}

/// True when the restriction of the matroid to `f` is connected: no proper
/// nonempty `A ⊂ f` with `rank A + rank (f \ A) = rank f`.
pub fn is_connected_flat(b: &Realization, f: IndexSet) -> bool {
    let total = b.rank(f);
    let Some(first) = f.min() else { return false };
    // separators come in complementary pairs; fix `first` on one side
    subsets_of(f.remove(first)).all(|a| {
        let a = a.insert(first);
        a == f || b.rank(a) + b.rank(f.difference(a)) > total
    })
}

/// Dense edges of the projective closure, ordered by rank then hyperplane set.
pub fn dense_edges(b: &Realization) -> Vec<Edge> {
    let mut flats = BTreeSet::new();
    for k in 1..=b.ell {
        for s in IndexSet::k_subsets(b.n + 1, k) {
            if b.rank(s) == k {
                flats.insert(b.closure(s));
            }
        }
    }
    let mut out: Vec<Edge> = flats
        .into_iter()
        .filter(|&f| is_connected_flat(b, f))
        .map(|f| Edge {
            rank: b.rank(f),
            hyperplanes: f,
        })
        .collect();
    out.sort();
    out
}

/// Weights `λ_1, ..., λ_n`; `λ_{n+1} = -Σ λ_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights {
    lambda: Vec<Rational>,
}

impl Weights {
    pub fn new(lambda: Vec<Rational>) -> Self {
        Weights { lambda }
    }

    pub fn from_fracs(pairs: &[(i64, i64)]) -> Self {
        Weights::new(pairs.iter().map(|&(p, q)| frac(p, q)).collect())
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn values(&self) -> &[Rational] {
        &self.lambda
    }

    /// `λ_j` for `1 <= j <= n + 1`.
    pub fn get(&self, j: usize) -> Rational {
        if j == self.lambda.len() + 1 {
            -self.lambda.iter().sum::<Rational>()
        } else {
            self.lambda[j - 1].clone()
        }
    }

    /// `λ_S = Σ_{j∈S} λ_j`.
    pub fn sum(&self, s: IndexSet) -> Rational {
        s.iter().map(|j| self.get(j)).sum()
    }

    /// All values including `λ_{n+1}`.
    pub fn extended(&self) -> Vec<Rational> {
        (1..=self.n() + 1).map(|j| self.get(j)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Weights {
        Weights::new(self.lambda.iter().map(|x| x * c).collect())
    }

    pub fn label(&self) -> String {
        self.lambda.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    }
}

/// Outcome of the nonresonance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nonresonance {
    pub nonresonant: bool,
    /// Dense edges with `λ_X ∈ Z_{>=0}`.
    pub witnesses: Vec<Edge>,
}

/// `λ_X ∉ Z_{>=0}` for every dense edge `X` of the projective closure.
pub fn is_nonresonant(b: &Realization, lambda: &Weights) -> Nonresonance {
    nonresonance_on(&dense_edges(b), lambda)
}

fn nonresonance_on(edges: &[Edge], lambda: &Weights) -> Nonresonance {
    let witnesses: Vec<Edge> = edges
        .iter()
        .filter(|e| is_nonnegative_integer(&lambda.sum(e.hyperplanes)))
        .copied()
        .collect();
    Nonresonance {
        nonresonant: witnesses.is_empty(),
        witnesses,
    }
}

/// Retry bound for [`sample_weights`].
pub const SAMPLING_ATTEMPTS: usize = 10_000;

/// Deterministic nonresonant weights in `(-1, 0)` with `λ_S ≠ 0` for each
/// required `S`. Denominators start small and grow slowly with the attempt
/// count.
pub fn sample_weights(b: &Realization, required_nonzero: &[IndexSet], seed: u64) -> Result<Weights> {
    let edges = dense_edges(b);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..SAMPLING_ATTEMPTS {
        let max_den = 7 + (attempt / 50) as i64;
        let lambda = Weights::new(
            (0..b.n)
                .map(|_| {
                    let den = rng.gen_range(2..=max_den);
                    let num = rng.gen_range(1..den);
                    frac(-num, den)
                })
                .collect(),
        );
        if required_nonzero.iter().any(|s| lambda.sum(*s).is_zero()) {
            continue;
        }
        if nonresonance_on(&edges, &lambda).nonresonant {
            return Ok(lambda);
        }
    }
    Err(Error::SamplingExhausted(SAMPLING_ATTEMPTS))
}

/// Checks that `λ_S` is nonzero, reporting `LambdaSZero` otherwise.
pub fn require_nonzero(lambda: &Weights, s: IndexSet) -> Result<Rational> {
    let v = lambda.sum(s);
    if v.is_zero() {
        return Err(Error::LambdaSZero(s.label()));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied())
    }

    fn labels(t: &CombType) -> Vec<String> {
        t.dep_star().map(|(s, _)| s.label()).collect()
    }

    #[test]
    fn rank_examples() {
        let s = fixtures::selberg();
        assert_eq!(s.rank(set(&[1, 3, 5])), 2);
        assert_eq!(s.rank(set(&[2])), 1);
        assert_eq!(s.rank(set(&[1, 2])), 2);
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(fixtures::example_a3().multiplicity(set(&[1, 2, 3, 4])), 2);
        assert_eq!(fixtures::example_a2().multiplicity(set(&[1, 2])), 1);
        assert_eq!(fixtures::example_a().multiplicity(set(&[1, 2])), 0);
    }

    #[test]
    fn dep_star_selberg() {
        let t = dep_star_of(&fixtures::selberg());
        assert_eq!(labels(&t), ["126", "135", "245", "346"]);
        assert!(t.dep_star().all(|(_, m)| m == 1));
    }

    #[test]
    fn dep_star_selberg_degeneration() {
        let t = dep_star_of(&fixtures::selberg_degenerate());
        for s in ["34", "35", "45", "134", "145", "234", "235", "356", "456", "126"] {
            let s = IndexSet::from_indices(s.chars().map(|c| c.to_digit(10).unwrap() as usize));
            assert_eq!(t.multiplicity(s), 1, "{}", s.label());
        }
        assert_eq!(t.multiplicity(set(&[3, 4, 5])), 2);
    }

    #[test]
    fn dep_star_general_position_is_empty() {
        let b = Realization::from_int_rows(2, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[2, 1, 3]]).unwrap();
        assert!(dep_star_of(&b).is_empty());
    }

    #[test]
    fn pencil_examples() {
        let p = pencil_type(5, 2, set(&[3, 4, 5]), 2).unwrap();
        assert_eq!(labels(&p), ["345"]);
        let p = pencil_type(5, 2, set(&[3, 4, 5]), 1).unwrap();
        assert_eq!(p.multiplicity(set(&[3, 4])), 1);
        assert_eq!(p.multiplicity(set(&[3, 4, 5])), 2);
        assert_eq!(p.multiplicity(set(&[1, 3, 4, 5])), 2);
        assert_eq!(p.multiplicity(set(&[1, 3, 4])), 1);
        assert!(!p.contains(set(&[1, 2, 3, 4])));
        assert!(matches!(pencil_type(5, 2, set(&[3, 4, 5]), 3), Err(Error::RankOutOfRange { r: 3, max: 2 })));
        assert!(pencil_type(5, 2, set(&[3, 4, 5]), 0).is_err());
    }

    #[test]
    fn dep_difference_examples() {
        let s = dep_star_of(&fixtures::selberg());
        assert!(dep_difference(&s, &s).unwrap().is_empty());
        let g = CombType::general_position(5, 2).unwrap();
        assert_eq!(dep_difference(&g, &s).unwrap().len(), 4);
        assert!(matches!(dep_difference(&s, &g), Err(Error::NotADegeneration(_))));
    }

    #[test]
    fn principal_example_table() {
        let t = dep_star_of(&fixtures::example_a());
        let cases = [
            (fixtures::example_a1(), "345", 2, vec!["(345,2)"]),
            (fixtures::example_a2(), "12", 1, vec!["(12,1)", "(124,2)", "(125,2)"]),
            (fixtures::example_a3(), "1234", 2, vec!["(1234,2)", "(124,2)", "(134,2)", "(234,2)"]),
        ];
        for (b, s, r, cands) in cases {
            let p = principal_dependence(&t, &dep_star_of(&b)).unwrap();
            assert_eq!((p.s.label().as_str(), p.r), (s, r));
            let got: Vec<String> = p.candidates.iter().map(|(s, r)| format!("({},{r})", s.label())).collect();
            assert_eq!(got, cands);
        }
        assert!(matches!(principal_dependence(&t, &t), Err(Error::NotADegeneration(_))));
    }

    #[test]
    fn dense_edges_general_position() {
        let b = Realization::from_int_rows(2, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let e = dense_edges(&b);
        assert_eq!(e.len(), 4);
        assert!(e.iter().all(|x| x.rank == 1));
    }

    #[test]
    fn dense_edges_selberg_and_variant() {
        let triples: Vec<String> = dense_edges(&fixtures::selberg())
            .iter()
            .filter(|e| e.rank == 2)
            .map(|e| e.hyperplanes.label())
            .collect();
        assert_eq!(triples, ["126", "135", "245", "346"]);
        let triples: Vec<String> = dense_edges(&fixtures::example_tbar())
            .iter()
            .filter(|e| e.rank == 2)
            .map(|e| e.hyperplanes.label())
            .collect();
        assert!(!triples.contains(&"126".to_string()));
    }

    #[test]
    fn nonresonance_examples() {
        let gp = Realization::from_int_rows(2, &[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[2, 1, 3], &[5, 1, -1]]).unwrap();
        let w = Weights::from_fracs(&[(-1, 3); 5]);
        assert!(is_nonresonant(&gp, &w).nonresonant);
        let w0 = Weights::from_fracs(&[(0, 1), (-1, 3), (-1, 3), (-1, 3), (-1, 3)]);
        let nr = is_nonresonant(&gp, &w0);
        assert!(!nr.nonresonant);
        assert_eq!(nr.witnesses[0].hyperplanes, set(&[1]));

        // λ = (-1/2, -1/2, -1/2, -1/2, 3/2): λ_6 = 1/2, triple sums ±1/2
        let w = Weights::from_fracs(&[(-1, 2), (-1, 2), (-1, 2), (-1, 2), (3, 2)]);
        let s = fixtures::selberg();
        for e in dense_edges(&s) {
            let v = w.sum(e.hyperplanes);
            assert!(v.denom() == &2.into(), "{} -> {v}", e.hyperplanes.label());
        }
        assert!(is_nonresonant(&s, &w).nonresonant);
    }

    #[test]
    fn sampling_postcondition() {
        let s = fixtures::selberg();
        for seed in 0..5 {
            let w = sample_weights(&s, &[set(&[3, 4, 5])], seed).unwrap();
            assert!(is_nonresonant(&s, &w).nonresonant);
            assert!(!w.sum(set(&[3, 4, 5])).is_zero());
            assert_eq!(w, sample_weights(&s, &[set(&[3, 4, 5])], seed).unwrap());
        }
        assert!(sample_weights(&s, &[], 7).is_ok());
        assert!(matches!(
            sample_weights(&s, &[IndexSet::initial(6)], 0),
            Err(Error::SamplingExhausted(_))
        ));
    }

    #[test]
    fn realization_validation() {
        assert!(Realization::from_int_rows(2, &[&[0, 0, 0], &[0, 1, 0]]).is_err());
        assert!(Realization::from_int_rows(2, &[&[1, 0, 0], &[0, 1, 0]]).is_err());
        assert!(Realization::from_int_rows(2, &[&[0, 1, 0], &[0, 2, 0]]).is_err());
        assert!(Realization::from_int_rows(2, &[&[0, 1], &[0, 1, 0]]).is_err());
    }
}

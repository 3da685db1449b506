//! The symmetric-group action on the Aomoto complex and the elementary
//! endomorphisms `ω_S` with their weighted sums.

use std::collections::BTreeMap;

use crate::arrangement::{dep_difference, pencil_type, CombType, Weights};
use crate::error::{Error, Result};
use crate::exterior::{e_y, Ambient, ExtElement, IndexSet, Monomial};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::ring::{self, Coeff, Rational};

/// A bijection of `{1, ..., m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    /// `images[i - 1] = σ(i)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            if x == 0 || x > m || seen[x] {
                return Err(Error::Internal(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(m);
        p.0.swap(a - 1, b - 1);
        p
    }

    /// `σ_S`: `i ↦ s_i` for `i <= |S|`, then the order-preserving bijection
    /// `{|S|+1, ..., n+1} → [n+1] \ S`.
    pub fn sigma_s(n: usize, s: IndexSet) -> Self {
        let rest = IndexSet::initial(n + 1).difference(s);
        Permutation(s.iter().chain(rest.iter()).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn apply_set(&self, s: IndexSet) -> IndexSet {
        IndexSet::from_indices(s.iter().map(|i| self.apply(i)))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size());
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }
}

/// The semilinear automorphism `φ_σ` of the Aomoto complex.
#[derive(Debug, Clone)]
pub struct PhiSigma {
    ambient: Ambient,
    sigma: Permutation,
    generators: Vec<ExtElement<Poly>>,
    variables: Vec<Poly>,
}

impl PhiSigma {
    pub fn new(ambient: Ambient, sigma: Permutation) -> Result<Self> {
        let n = ambient.n;
        if sigma.size() != n + 1 {
            return Err(Error::Internal(format!("permutation of {} points, expected {}", sigma.size(), n + 1)));
        }
        let gen = |j: usize| ExtElement::<Poly>::generator(ambient, j).expect("in range");
        let inf = sigma.apply(n + 1);
        let generators = (1..=n)
            .map(|i| {
                let t = sigma.apply(i);
                if inf == n + 1 {
                    gen(t)
                } else if t == n + 1 {
                    gen(inf).neg()
                } else {
                    gen(t).sub(&gen(inf)).expect("same ambient")
                }
            })
            .collect();
        let variables = (1..=n).map(|j| Poly::var(sigma.apply(j), n)).collect();
        Ok(PhiSigma {
            ambient,
            sigma,
            generators,
            variables,
        })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// `φ_σ(e_T)`, the ordered product of generator images.
    pub fn apply_monomial(&self, t: Monomial) -> ExtElement<Poly> {
        let mut acc = ExtElement::one(self.ambient);
        for i in t.iter() {
            acc = acc.wedge(&self.generators[i - 1]).expect("same ambient");
        }
        acc
    }

    /// Coefficient substitution `y_j ↦ y_{σ(j)}`.
    pub fn apply_coeff(&self, c: &Poly) -> Poly {
        c.substitute(&self.variables)
    }

    pub fn apply(&self, x: &ExtElement<Poly>) -> ExtElement<Poly> {
        let mut out = ExtElement::zero(self.ambient);
        for (t, c) in x.terms() {
            let img = self.apply_monomial(*t).scale(&self.apply_coeff(c));
            out = out.add(&img).expect("same ambient");
        }
        out
    }
}

/// A degree-preserving endomorphism stored as the images of the basis
/// monomials (lexicographic) in each selected degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainEndo<C: Coeff> {
    ambient: Ambient,
    columns: BTreeMap<usize, Vec<ExtElement<C>>>,
}

/// Every degree `0..=ell`.
pub fn all_degrees(ambient: Ambient) -> Vec<usize> {
    (0..=ambient.ell).collect()
}

impl<C: Coeff> ChainEndo<C> {
    pub fn zero(ambient: Ambient, degrees: &[usize]) -> Self {
        Self::from_fn(ambient, degrees, |_| ExtElement::zero(ambient))
    }

    pub fn from_fn(ambient: Ambient, degrees: &[usize], mut f: impl FnMut(Monomial) -> ExtElement<C>) -> Self {
        let columns = degrees
            .iter()
            .filter(|&&q| q <= ambient.ell)
            .map(|&q| (q, ambient.basis(q).into_iter().map(&mut f).collect()))
            .collect();
        ChainEndo { ambient, columns }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns.keys().copied()
    }

    pub fn columns(&self, q: usize) -> Result<&[ExtElement<C>]> {
        self.columns
            .get(&q)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Internal(format!("degree {q} not computed")))
    }

    /// Image of `e_T`.
    pub fn image(&self, t: Monomial) -> Result<&ExtElement<C>> {
        let cols = self.columns(t.len())?;
        let pos = self
            .ambient
            .basis(t.len())
            .iter()
            .position(|m| *m == t)
            .ok_or_else(|| Error::Internal(format!("{t:?} is not a basis monomial")))?;
        Ok(&cols[pos])
    }

    /// Coefficient-linear application.
    pub fn apply(&self, x: &ExtElement<C>) -> Result<ExtElement<C>> {
        let mut out = ExtElement::zero(self.ambient);
        for (t, c) in x.terms() {
            out = out.add(&self.image(*t)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn is_zero_in(&self, q: usize) -> Result<bool> {
        Ok(self.columns(q)?.iter().all(ExtElement::is_zero))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(
                self.ambient.n,
                self.ambient.ell,
                other.ambient.n,
                other.ambient.ell,
            ));
        }
        let mut out = self.clone();
        for (q, cols) in &other.columns {
            match out.columns.get_mut(q) {
                Some(mine) => {
                    for (a, b) in mine.iter_mut().zip(cols) {
                        *a = a.add(b)?;
                    }
                }
                None => {
                    out.columns.insert(*q, cols.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_columns(|x| x.scale(c))
    }

    fn map_columns<D: Coeff>(&self, mut f: impl FnMut(&ExtElement<C>) -> ExtElement<D>) -> ChainEndo<D> {
        ChainEndo {
            ambient: self.ambient,
            columns: self.columns.iter().map(|(q, cols)| (*q, cols.iter().map(&mut f).collect())).collect(),
        }
    }
}

impl ChainEndo<Poly> {
    /// Substitutes `y_j ↦ λ_j` in every entry.
    pub fn specialize(&self, lambda: &Weights) -> ChainEndo<Rational> {
        self.map_columns(|x| x.specialize(lambda.values()))
    }
}

impl ChainEndo<Rational> {
    /// Matrix of degree `q` in the lexicographic monomial basis.
    pub fn matrix(&self, q: usize) -> Result<Matrix> {
        let basis = crate::exterior::DegreeBasis::new(&self.ambient, q);
        let cols = self
            .columns(q)?
            .iter()
            .map(|x| x.coordinates(&basis))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(basis.len(), &cols))
    }
}

fn check_subset(ambient: Ambient, s: IndexSet) -> Result<()> {
    let all = IndexSet::initial(ambient.n + 1);
    if !s.is_subset(all) {
        let bad = s.difference(all).min().unwrap_or(0);
        return Err(Error::IndexOutOfRange {
            index: bad,
            max: ambient.n + 1,
        });
    }
    Ok(())
}

/// `ω_{[k]}` on a basis monomial, for `[k] ⊆ [n]`.
fn omega_base(ambient: Ambient, k: usize, t: Monomial) -> ExtElement<Poly> {
    let s0 = IndexSet::initial(k);
    let n = ambient.n;
    if t.len() + 1 == k && t.is_subset(s0) {
        // y_j ∂(e_j e_T) = y_j (e_T - e_j ∂e_T); the product form would be truncated when k > ell
        let j = s0.difference(t).min().expect("one missing index");
        let x = ExtElement::monomial(ambient, t, Poly::one());
        x.boundary_of_left_product(j).expect("j in range").scale(&Poly::var(j, n))
    } else if t == s0 {
        let x = ExtElement::monomial(ambient, t, Poly::one());
        e_y(ambient).wedge(&x.boundary()).expect("same ambient")
    } else {
        ExtElement::zero(ambient)
    }
}

/// `ω_S = φ_{σ_S} ∘ ω_{[|S|]} ∘ φ_{σ_S}^{-1}` in the given degrees.
///
/// `ω_S` can be nonzero only in degrees `|S| - 1` and `|S|`. For
/// `S = [n+1]` it is zero: its only possible degree is `n`, where the chain
/// map identity against `e_y` forces it to vanish.
pub fn omega_s(ambient: Ambient, s: IndexSet, degrees: &[usize]) -> Result<ChainEndo<Poly>> {
    check_subset(ambient, s)?;
    let k = s.len();
    if k < 2 {
        return Err(Error::Internal(format!("ω_S needs |S| >= 2, got {}", s.label())));
    }
    if k == ambient.n + 1 {
        return Ok(ChainEndo::zero(ambient, degrees));
    }
    let sigma = Permutation::sigma_s(ambient.n, s);
    let phi = PhiSigma::new(ambient, sigma.clone())?;
    let phi_inv = PhiSigma::new(ambient, sigma.inverse())?;
    let identity = sigma == Permutation::identity(ambient.n + 1);
    Ok(ChainEndo::from_fn(ambient, degrees, |t| {
        let q = t.len();
        if q + 1 != k && q != k {
            return ExtElement::zero(ambient);
        }
        if identity {
            return omega_base(ambient, k, t);
        }
        let mut inner = ExtElement::zero(ambient);
        for (u, c) in phi_inv.apply_monomial(t).terms() {
            inner = inner.add(&omega_base(ambient, k, *u).scale(c)).expect("same ambient");
        }
        phi.apply(&inner)
    }))
}

/// `Σ m_S ω_S` over a multiplicity-weighted family; in degree `q` only sets
/// with `q <= |S| <= q + 1` contribute.
pub fn omega_of_family(
    ambient: Ambient,
    family: impl IntoIterator<Item = (IndexSet, usize)>,
    degrees: &[usize],
) -> Result<ChainEndo<Poly>> {
    let family: Vec<(IndexSet, usize)> = family.into_iter().collect();
    let mut acc = ChainEndo::zero(ambient, degrees);
    for &q in degrees {
        for &(s, m) in &family {
            if s.len() < q || s.len() > q + 1 || s.len() < 2 {
                continue;
            }
            let w = omega_s(ambient, s, &[q])?;
            acc = acc.add(&w.scale(&Poly::constant(ring::rat(m as i64))))?;
        }
    }
    Ok(acc)
}

/// `ω(T) = Σ_{S ∈ Dep(T)*} m_S ω_S`.
pub fn omega_of_type(t: &CombType, degrees: &[usize]) -> Result<ChainEndo<Poly>> {
    omega_of_family(t.ambient(), t.dep_star(), degrees)
}

/// `ω(T', T) = Σ_{S ∈ Dep(T', T)*} m_S(T') ω_S`.
pub fn omega_of_pair(t: &CombType, t_prime: &CombType, degrees: &[usize]) -> Result<ChainEndo<Poly>> {
    let diff = dep_difference(t, t_prime)?;
    omega_of_family(t.ambient(), diff, degrees)
}

/// `ω(S, r) = ω(T(S, r))`.
pub fn omega_sr(ambient: Ambient, s: IndexSet, r: usize, degrees: &[usize]) -> Result<ChainEndo<Poly>> {
    let t = pencil_type(ambient.n, ambient.ell, s, r)?;
    omega_of_type(&t, degrees)
}

/// `Ψ^q_{S,r} = Σ_{T ⊂ S, |T| = r+1} ω^q(T, r)`.
pub fn psi(ambient: Ambient, s: IndexSet, r: usize, q: usize) -> Result<ChainEndo<Poly>> {
    let max = ambient.ell.min(s.len().saturating_sub(1));
    if r == 0 || r > max {
        return Err(Error::RankOutOfRange { r, max });
    }
    let mut acc = ChainEndo::zero(ambient, &[q]);
    for t in crate::arrangement::subsets_of(s).filter(|t| t.len() == r + 1) {
        acc = acc.add(&omega_sr(ambient, t, r, &[q])?)?;
    }
    Ok(acc)
}

/// The semilinear `φ_σ` applied to a whole endomorphism by conjugation:
/// `φ_σ ∘ E ∘ φ_σ^{-1}`.
pub fn conjugate(e: &ChainEndo<Poly>, sigma: &Permutation) -> Result<ChainEndo<Poly>> {
    let amb = e.ambient();
    let phi = PhiSigma::new(amb, sigma.clone())?;
    let phi_inv = PhiSigma::new(amb, sigma.inverse())?;
    let degrees: Vec<usize> = e.degrees().collect();
    let mut err = None;
    let out = ChainEndo::from_fn(amb, &degrees, |t| match e.apply(&phi_inv.apply_monomial(t)) {
        Ok(x) => phi.apply(&x),
        Err(x) => {
            err = Some(x);
            ExtElement::zero(amb)
        }
    });
    match err {
        Some(x) => Err(x),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(n: usize, ell: usize) -> Ambient {
        Ambient::new(n, ell).unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::from_indices(v.iter().copied())
    }

    fn e(a: Ambient, t: &[usize]) -> ExtElement<Poly> {
        ExtElement::from_tuple(a, t).unwrap()
    }

    #[test]
    fn phi_identity_and_relabeling() {
        let a = amb(3, 2);
        let id = PhiSigma::new(a, Permutation::identity(4)).unwrap();
        let x = e(a, &[1, 3]).scale(&Poly::var(2, 3));
        assert_eq!(id.apply(&x), x);
        let sw = PhiSigma::new(a, Permutation::transposition(4, 1, 2)).unwrap();
        let expect = e(a, &[2, 3]).scale(&Poly::var(1, 3));
        assert_eq!(sw.apply(&x), expect);
    }

    #[test]
    fn phi_transposition_with_infinity() {
        let a = amb(2, 2);
        let s = Permutation::transposition(3, 1, 3);
        let phi = PhiSigma::new(a, s.clone()).unwrap();
        assert_eq!(phi.apply(&e(a, &[1])), e(a, &[1]).neg());
        assert_eq!(phi.apply(&e(a, &[2])), e(a, &[2]).sub(&e(a, &[1])).unwrap());
        assert_eq!(phi.apply_coeff(&Poly::var(1, 2)), Poly::var(3, 2));
        let inv = PhiSigma::new(a, s.inverse()).unwrap();
        for t in [vec![1], vec![2], vec![1, 2]] {
            let x = e(a, &t).scale(&Poly::var(1, 2));
            assert_eq!(phi.apply(&inv.apply(&x)), x);
        }
    }

    #[test]
    fn omega_base_examples() {
        let a = amb(3, 2);
        let w = omega_s(a, set(&[1, 2]), &all_degrees(a)).unwrap();
        let y1 = Poly::var(1, 3);
        let expect = e(a, &[2]).sub(&e(a, &[1])).unwrap().scale(&y1);
        assert_eq!(w.image(set(&[2])).unwrap(), &expect);
        let d12 = e(a, &[2]).sub(&e(a, &[1])).unwrap();
        assert_eq!(w.image(set(&[1, 2])).unwrap(), &e_y(a).wedge(&d12).unwrap());
        assert!(w.image(set(&[3])).unwrap().is_zero());
        assert!(w.is_zero_in(0).unwrap());
    }

    #[test]
    fn omega_vanishes_below_r() {
        let a = amb(5, 2);
        let w = omega_sr(a, set(&[3, 4, 5]), 2, &all_degrees(a)).unwrap();
        assert!(w.is_zero_in(1).unwrap());
        assert!(!w.is_zero_in(2).unwrap());
    }

    #[test]
    fn specialize_at_zero_kills_everything() {
        let a = amb(4, 2);
        let w = omega_s(a, set(&[2, 5]), &all_degrees(a)).unwrap();
        let z = w.specialize(&Weights::from_fracs(&[(0, 1); 4]));
        for q in 0..=2 {
            assert!(z.is_zero_in(q).unwrap());
        }
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::sigma_s(4, set(&[2, 5]));
        assert_eq!(s.images(), &[2, 5, 1, 3, 4]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(5));
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
    }
}

//! Orlik–Solomon algebras of realizable types, their nbc and βnbc bases,
//! and the projections `π`, `ρ` and `τ` onto top cohomology.

use num_traits::One;

use crate::arrangement::{is_nonresonant, Realization, Weights};
use crate::error::{Error, Result};
use crate::exterior::{boundary_of_set, e_lambda, Ambient, DegreeBasis, ExtElement, IndexSet, Monomial};
use crate::linalg::Matrix;
use crate::ring::{rat, Rational};

/// Projection data for one degree.
#[derive(Debug, Clone)]
struct DegreeReduction {
    /// nbc monomials of this degree.
    nbc: DegreeBasis,
    /// `π` as an `nbc × C(n, q)` matrix.
    pi: Matrix,
}

/// `A(T) = A(G) / I(T)` for a realizable type, presented through its nbc
/// basis.
#[derive(Debug, Clone)]
pub struct OsAlgebra {
    realization: Realization,
    ambient: Ambient,
    broken_circuits: Vec<IndexSet>,
    degrees: Vec<DegreeReduction>,
}

/// Generic realization `(1, t, t^2, ..., t^ell)`, `t = 1..n`.
pub fn general_position_realization(n: usize, ell: usize) -> Result<Realization> {
    let rows = (1..=n as i64)
        .map(|t| (0..=ell as u32).map(|k| rat(t.pow(k))).collect())
        .collect();
    Realization::new(ell, rows)
}

impl OsAlgebra {
    pub fn new(realization: &Realization) -> Result<Self> {
        let ambient = realization.ambient();
        let b = realization;
        let independent = |s: IndexSet| b.meets_affinely(s) && b.rank(s) == s.len();
        // affine circuits: dependent, meeting, every proper subset independent
        let mut broken_circuits = Vec::new();
        for k in 2..=ambient.ell + 1 {
            for c in IndexSet::k_subsets(ambient.n, k) {
                if b.meets_affinely(c) && b.rank(c) < k && c.iter().all(|i| independent(c.remove(i))) {
                    broken_circuits.push(c.remove(c.min().expect("nonempty")));
                }
            }
        }
        let mut degrees = Vec::with_capacity(ambient.ell + 1);
        for q in 0..=ambient.ell {
            let nbc: Vec<Monomial> = ambient
                .basis(q)
                .into_iter()
                .filter(|&t| independent(t) && !broken_circuits.iter().any(|bc| bc.is_subset(t)))
                .collect();
            let nbc = DegreeBasis::from_monomials(q, nbc);
            let pi = reduction_matrix(b, q, &nbc)?;
            degrees.push(DegreeReduction { nbc, pi });
        }
        Ok(OsAlgebra {
            realization: b.clone(),
            ambient,
            broken_circuits,
            degrees,
        })
    }

    pub fn general_position(n: usize, ell: usize) -> Result<Self> {
        Self::new(&general_position_realization(n, ell)?)
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn broken_circuits(&self) -> &[IndexSet] {
        &self.broken_circuits
    }

    pub fn nbc_basis(&self, q: usize) -> &[Monomial] {
        &self.degrees[q].nbc.monomials
    }

    pub fn nbc(&self, q: usize) -> &DegreeBasis {
        &self.degrees[q].nbc
    }

    pub fn dim(&self, q: usize) -> usize {
        self.degrees.get(q).map_or(0, |d| d.nbc.len())
    }

    /// `(-1)^ell Σ_q (-1)^q dim A^q`.
    pub fn euler_top(&self) -> i64 {
        let ell = self.ambient.ell;
        (0..=ell)
            .map(|q| {
                let s = if (ell + q) % 2 == 0 { 1 } else { -1 };
                s * self.dim(q) as i64
            })
            .sum()
    }

    /// `π` in degree `q`: A^q(G) → A^q(T), columns indexed lexicographically.
    pub fn pi_matrix(&self, q: usize) -> &Matrix {
        &self.degrees[q].pi
    }

    /// nbc coordinates of `π(x)` for homogeneous `x` of degree `q`.
    pub fn reduce(&self, x: &ExtElement<Rational>, q: usize) -> Result<Vec<Rational>> {
        let basis = DegreeBasis::new(&self.ambient, q);
        Ok(self.degrees[q].pi.mul_vec(&x.coordinates(&basis)?))
    }

    /// nbc monomials of degree `ell` that are βnbc frames, lexicographic.
    pub fn bnbc_frames(&self) -> Vec<Monomial> {
        let b = &self.realization;
        let ell = self.ambient.ell;
        let is_frame = |f: IndexSet| f.len() == ell && b.meets_affinely(f) && b.rank(f) == ell;
        self.nbc_basis(ell)
            .iter()
            .copied()
            .filter(|&frame| {
                frame.iter().all(|j| {
                    let rest = frame.remove(j);
                    (1..j).any(|h| !rest.contains(h) && is_frame(rest.insert(h)))
                })
            })
            .collect()
    }

    /// `a_λ(X) = Σ_{H_i ⊇ X} λ_i e_i` for the flat `X = ∩_{j∈F} H_j`.
    pub fn localized_weight_form(&self, flat: IndexSet, lambda: &Weights) -> ExtElement<Rational> {
        let b = &self.realization;
        let r = b.rank(flat);
        let mut out = ExtElement::zero(self.ambient);
        for i in 1..=self.ambient.n {
            if flat.contains(i) || b.rank(flat.insert(i)) == r {
                out.add_term(IndexSet::from_indices([i]), lambda.get(i));
            }
        }
        out
    }

    /// `ξ(B) = ∧_p a_λ(X_p)`, `X_p = ∩_{k>=p} H_{j_k}`, as an element of `A^ell(G)`.
    pub fn xi(&self, frame: Monomial, lambda: &Weights) -> ExtElement<Rational> {
        let js = frame.to_vec();
        let mut acc = ExtElement::one(self.ambient);
        for p in 0..js.len() {
            let flat = IndexSet::from_indices(js[p..].iter().copied());
            acc = acc.wedge(&self.localized_weight_form(flat, lambda)).expect("same ambient");
        }
        acc
    }

    /// Matrix of `a_λ ∧ ·: A^{ell-1}(T) → A^ell(T)` in nbc coordinates.
    pub fn a_lambda_matrix(&self, lambda: &Weights) -> Result<Matrix> {
        let ell = self.ambient.ell;
        let el = e_lambda(self.ambient, lambda.values());
        let cols = self
            .nbc_basis(ell - 1)
            .iter()
            .map(|&m| {
                let x = el.wedge(&ExtElement::monomial(self.ambient, m, Rational::one()))?;
                self.reduce(&x, ell)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.dim(ell), &cols))
    }
}

/// RREF of the ideal in degree `q` with the non-nbc columns ordered first,
/// turned into the matrix of `π`.
fn reduction_matrix(b: &Realization, q: usize, nbc: &DegreeBasis) -> Result<Matrix> {
    let amb = b.ambient();
    let full = DegreeBasis::new(&amb, q);
    let non_nbc: Vec<Monomial> = full.monomials.iter().copied().filter(|m| nbc.position(*m).is_none()).collect();
    if non_nbc.is_empty() {
        let mut pi = Matrix::zeros(nbc.len(), full.len());
        for (i, m) in nbc.monomials.iter().enumerate() {
            pi[(i, full.position(*m).expect("nbc ⊆ basis"))] = Rational::one();
        }
        return Ok(pi);
    }
    // column order: non-nbc, then nbc
    let order: Vec<Monomial> = non_nbc.iter().chain(nbc.monomials.iter()).copied().collect();
    let ordered = DegreeBasis::from_monomials(q, order);

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut push = |x: ExtElement<Rational>| -> Result<()> {
        if !x.is_zero() {
            rows.push(x.coordinates(&ordered)?);
        }
        Ok(())
    };
    for s in IndexSet::all_subsets(amb.n).filter(|s| !s.is_empty() && s.len() <= q + 1) {
        let e_s = ExtElement::<Rational>::monomial(amb, s, Rational::one());
        let generator = if !b.meets_affinely(s) {
            if s.len() > q {
                continue;
            }
            e_s
        } else if b.rank(s) < s.len() {
            boundary_of_set(amb, s)
        } else {
            continue;
        };
        let g_deg = generator.homogeneous_degree().unwrap_or(0);
        if g_deg > q {
            continue;
        }
        for u in IndexSet::k_subsets(amb.n, q - g_deg) {
            let eu = ExtElement::monomial(amb, u, Rational::one());
            push(eu.wedge(&generator)?)?;
        }
    }
    let (r, pivots) = Matrix::from_rows(rows).rref();
    let k = non_nbc.len();
    if pivots.len() != k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return Err(Error::Internal(format!(
            "ideal pivots {pivots:?} in degree {q} do not match the {k} non-nbc monomials"
        )));
    }
    let mut pi = Matrix::zeros(nbc.len(), full.len());
    for (i, m) in nbc.monomials.iter().enumerate() {
        pi[(i, full.position(*m).expect("nbc ⊆ basis"))] = Rational::one();
    }
    for (row, m) in non_nbc.iter().enumerate() {
        let col = full.position(*m).expect("in basis");
        for i in 0..nbc.len() {
            pi[(i, col)] = -r[(row, k + i)].clone();
        }
    }
    Ok(pi)
}

/// Top cohomology `H^ell(T) = A^ell(T) / a_λ A^{ell-1}(T)` with its βnbc
/// basis `{ξ(B)}` at fixed weights.
#[derive(Debug, Clone)]
pub struct TopCohomology {
    pub frames: Vec<Monomial>,
    /// nbc coordinates of each `ξ(B)`, one column per frame.
    pub xi: Matrix,
    /// `ρ`: nbc coordinates → βnbc coordinates.
    pub rho: Matrix,
    /// `ρ ∘ π`: A^ell(G) → H^ell(T).
    pub rho_pi: Matrix,
    pub lambda: Weights,
}

impl TopCohomology {
    pub fn new(os: &OsAlgebra, lambda: &Weights) -> Result<Self> {
        let amb = os.ambient();
        let ell = amb.ell;
        let check = is_nonresonant(os.realization(), lambda);
        if !check.nonresonant {
            let w = check.witnesses.iter().map(|e| e.hyperplanes.label()).collect::<Vec<_>>().join(", ");
            return Err(Error::NonresonanceViolated(w));
        }
        let frames = os.bnbc_frames();
        let dim = os.dim(ell);
        let image = os.a_lambda_matrix(lambda)?;
        let (_, image_pivots) = image.rref();
        if dim - image_pivots.len() != frames.len() {
            return Err(Error::NonresonanceViolated(format!(
                "cokernel has dimension {}, expected {} βnbc frames",
                dim - image_pivots.len(),
                frames.len()
            )));
        }
        let xi_cols = frames
            .iter()
            .map(|&f| os.reduce(&os.xi(f, lambda), ell))
            .collect::<Result<Vec<_>>>()?;
        let mut q_cols = xi_cols.clone();
        q_cols.extend(image_pivots.iter().map(|&j| image.column(j)));
        let q = Matrix::from_columns(dim, &q_cols);
        let q_inv = q
            .inverse()
            .ok_or_else(|| Error::NonresonanceViolated("βnbc classes are not a basis of the cokernel".into()))?;
        let rho = q_inv.select_rows(&(0..frames.len()).collect::<Vec<_>>());
        let rho_pi = rho.mul(os.pi_matrix(ell))?;
        Ok(TopCohomology {
            frames,
            xi: Matrix::from_columns(dim, &xi_cols),
            rho,
            rho_pi,
            lambda: lambda.clone(),
        })
    }

    pub fn dim(&self) -> usize {
        self.frames.len()
    }

    /// βnbc coordinates of `ρ(π(x))` for `x ∈ A^ell(G)`.
    pub fn project(&self, os: &OsAlgebra, x: &ExtElement<Rational>) -> Result<Vec<Rational>> {
        let basis = DegreeBasis::new(&os.ambient(), os.ambient().ell);
        Ok(self.rho_pi.mul_vec(&x.coordinates(&basis)?))
    }
}

/// `τ: H^ell(G) → H^ell(T)` determined by `τ ∘ ρ_G = ρ_T ∘ π`; columns are
/// the images of the βnbc basis `ξ_I = λ_I e_I` (`1 ∉ I`) of `H^ell(G)`.
pub fn tau(os: &OsAlgebra, cohom: &TopCohomology, generic: &TopCohomology) -> Result<Matrix> {
    let amb = os.ambient();
    let cols = generic
        .frames
        .iter()
        .map(|&f| {
            let lam: Rational = f.iter().map(|i| cohom.lambda.get(i)).product();
            cohom.project(os, &ExtElement::monomial(amb, f, lam))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(cohom.dim(), &cols))
}

/// Dimensions and counts reported by `analyze`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OsSummary {
    pub dims: Vec<usize>,
    pub bnbc: Vec<Monomial>,
}

pub fn summarize(os: &OsAlgebra) -> OsSummary {
    OsSummary {
        dims: (0..=os.ambient().ell).map(|q| os.dim(q)).collect(),
        bnbc: os.bnbc_frames(),
    }
}

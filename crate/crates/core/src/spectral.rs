//! Eigenstructure of `ω_λ(S, r)` on `A^q(G)`, of the induced maps on top
//! cohomology, and of the Gauss–Manin endomorphism `Ω_λ(T', T)`.

use num_traits::Zero;

use crate::aomoto::{omega_of_pair, omega_sr, ChainEndo, Permutation, PhiSigma};
use crate::arrangement::{
    dep_difference, dep_star_of, principal_dependence, require_nonzero, subsets_of, CombType, Principal, Realization,
    Weights,
};
use crate::error::{Error, Result};
use crate::exterior::{boundary_of_set, eta_formal, Ambient, DegreeBasis, ExtElement, IndexSet};
use crate::linalg::Matrix;
use crate::os::{tau, OsAlgebra, TopCohomology};
use crate::poly::Poly;
use crate::ring::{binomial, Rational};

/// Eigenspaces of an endomorphism whose spectrum should lie in `{0, λ_S}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenReport {
    pub lambda_s: Rational,
    pub zero_dim: usize,
    pub lambda_dim: usize,
    pub diagonalizable: bool,
    pub basis_zero: Vec<Vec<Rational>>,
    pub basis_lambda: Vec<Vec<Rational>>,
    pub matrix: Matrix,
}

/// The two families `V` (eigenvalue 0) and `W` (eigenvalue `λ_S`) in `A^q(G)`.
#[derive(Debug, Clone)]
pub struct SpanningFamily {
    pub v: Vec<ExtElement<Rational>>,
    pub w: Vec<ExtElement<Rational>>,
}

/// Closed-form `(dim E(0), dim E(λ_S))` for `ω^q_λ(S, r)` on `A^q(G)`, `|S| = s`.
pub fn eigen_dims_on_a(n: usize, s: usize, r: usize, q: usize) -> (i64, i64) {
    let (n, s, r, q) = (n as i64, s as i64, r as i64, q as i64);
    let c = |a: i64, b: i64| binomial(a, b);
    let zero: i64 = (0..=r).map(|p| c(s, p) * c(n - s, q - p)).sum::<i64>() - c(s - 1, r) * c(n - s, q - r);
    let lam: i64 = (r + 1..=q.min(s)).map(|p| c(s, p) * c(n - s, q - p)).sum::<i64>() + c(s - 1, r) * c(n - s, q - r);
    (zero, lam)
}

/// Closed-form `(dim E(0), dim E(λ_S))` for `Ω_λ(S, r)` on `H^ell(G)`.
/// Binomials with negative upper entry are the generalized ones, which
/// matters when `s = n`.
pub fn eigen_dims_on_h(n: usize, ell: usize, s: usize, r: usize) -> (i64, i64) {
    let (n, ell, s, r) = (n as i64, ell as i64, s as i64, r as i64);
    let c = |a: i64, b: i64| binomial(a, b);
    let m = n - s - 1;
    let zero: i64 = (0..=r).map(|p| c(s, p) * c(m, ell - p)).sum::<i64>() - c(s - 1, r) * c(m, ell - r);
    let lam: i64 = (r + 1..=ell.min(s)).map(|p| c(s, p) * c(m, ell - p)).sum::<i64>() + c(s - 1, r) * c(m, ell - r);
    (zero, lam)
}

/// `V^{q,r}_S(λ)` and `W^{q,r}_S(λ)`, built for `S_0 = [s]` and moved to `S`
/// by `φ_{σ_S}`. Requires `|S| <= n`.
pub fn spanning_sets(ambient: Ambient, s: IndexSet, r: usize, q: usize, lambda: &Weights) -> Result<SpanningFamily> {
    let n = ambient.n;
    let k = s.len();
    if k < 2 || k > n || s.max().unwrap_or(0) > n + 1 {
        return Err(Error::Internal(format!("spanning sets need 2 <= |S| <= n, got {}", s.label())));
    }
    require_nonzero(lambda, s)?;
    let s0 = IndexSet::initial(k);
    let rest = IndexSet::initial(n).difference(s0);
    let eta = eta_formal(ambient, s0)?;
    let mono = |t: IndexSet| ExtElement::monomial(ambient, t, <Poly as crate::ring::Coeff>::one());
    let mut v: Vec<ExtElement<Poly>> = Vec::new();
    let mut w: Vec<ExtElement<Poly>> = Vec::new();
    for j in subsets_of(s0) {
        for kk in subsets_of(rest) {
            let (a, b) = (j.len(), kk.len());
            let ek = mono(kk);
            let ejk = mono(j).wedge(&ek)?;
            if a + b == q {
                if a < r {
                    v.push(ejk.clone());
                }
                if a == k && q >= k {
                    w.push(ejk.clone());
                }
            }
            if a >= 1 && a - 1 + b == q && a > r {
                w.push(boundary_of_set(ambient, j).wedge(&ek)?);
            }
            if a + 1 + b == q {
                let x = eta.wedge(&ejk)?;
                if a + 1 == r {
                    v.push(x);
                } else if a >= r {
                    w.push(x);
                }
            }
        }
    }
    let sigma = Permutation::sigma_s(n, s);
    let values = lambda.values();
    let transport = |list: Vec<ExtElement<Poly>>| -> Result<Vec<ExtElement<Rational>>> {
        if s == s0 {
            return Ok(list.iter().map(|x| x.specialize(values)).collect());
        }
        let phi = PhiSigma::new(ambient, sigma.clone())?;
        Ok(list.iter().map(|x| phi.apply(x).specialize(values)).collect())
    };
    Ok(SpanningFamily {
        v: transport(v)?,
        w: transport(w)?,
    })
}

/// Columns among `vectors` forming a basis of their span.
fn independent(rows: usize, vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (_, pivots) = Matrix::from_columns(rows, vectors).rref();
    pivots.into_iter().map(|j| vectors[j].clone()).collect()
}

fn is_eigenvector(m: &Matrix, v: &[Rational], mu: &Rational) -> bool {
    m.mul_vec(v).iter().zip(v).all(|(a, b)| *a == b * mu)
}

/// Eigenspaces of `m` from candidate eigenvectors. Every candidate is checked
/// exactly; the candidates must exhaust the kernels of `m` and `m - λ_S`.
fn report_from_candidates(
    m: Matrix,
    lambda_s: Rational,
    zero_candidates: &[Vec<Rational>],
    lambda_candidates: &[Vec<Rational>],
) -> Result<EigenReport> {
    let d = m.rows();
    let zero = Rational::zero();
    for (cands, mu, name) in [(zero_candidates, &zero, "0"), (lambda_candidates, &lambda_s, "λ_S")] {
        if let Some(v) = cands.iter().find(|v| !is_eigenvector(&m, v, mu)) {
            return Err(Error::SpectralAnomaly(format!("candidate {v:?} is not a {name}-eigenvector")));
        }
    }
    let basis_zero = independent(d, zero_candidates);
    let basis_lambda = independent(d, lambda_candidates);
    let zero_dim = m.nullity();
    let lambda_dim = m.shift(&lambda_s).nullity();
    if basis_zero.len() != zero_dim || basis_lambda.len() != lambda_dim {
        return Err(Error::SpectralAnomaly(format!(
            "eigenvector families span ({}, {}) but the eigenspaces have dimensions ({zero_dim}, {lambda_dim})",
            basis_zero.len(),
            basis_lambda.len()
        )));
    }
    Ok(EigenReport {
        lambda_s,
        zero_dim,
        lambda_dim,
        diagonalizable: zero_dim + lambda_dim == d,
        basis_zero,
        basis_lambda,
        matrix: m,
    })
}

fn check_dims(report: &EigenReport, expect: (i64, i64), what: &str) -> Result<()> {
    let got = (report.zero_dim as i64, report.lambda_dim as i64);
    if got != expect || !report.diagonalizable {
        return Err(Error::SpectralAnomaly(format!(
            "{what}: eigenspace dimensions {got:?}, closed form {expect:?}, diagonalizable = {}",
            report.diagonalizable
        )));
    }
    Ok(())
}

fn coords(ambient: Ambient, q: usize, xs: &[ExtElement<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let basis = DegreeBasis::new(&ambient, q);
    xs.iter().map(|x| x.coordinates(&basis)).collect()
}

/// Eigenstructure of `ω^q_λ(S, r)` on `A^q(G)`, given the formal `ω(S, r)`
/// (which must contain degree `q`).
pub fn eigen_on_a(endo: &ChainEndo<Poly>, s: IndexSet, r: usize, q: usize, lambda: &Weights) -> Result<EigenReport> {
    let ambient = endo.ambient();
    let lambda_s = require_nonzero(lambda, s)?;
    let m = endo.specialize(lambda).matrix(q)?;
    let fam = spanning_sets(ambient, s, r, q, lambda)?;
    let report = report_from_candidates(m, lambda_s, &coords(ambient, q, &fam.v)?, &coords(ambient, q, &fam.w)?)?;
    check_dims(&report, eigen_dims_on_a(ambient.n, s.len(), r, q), "ω^q_λ(S, r)")?;
    Ok(report)
}

/// Eigenstructure of `ω^q_λ(S, r)` on `A^q(G)`.
pub fn eigen_omega_sr(ambient: Ambient, s: IndexSet, r: usize, q: usize, lambda: &Weights) -> Result<EigenReport> {
    let endo = omega_sr(ambient, s, r, &[q])?;
    eigen_on_a(&endo, s, r, q, lambda)
}

/// The unique `Ω` with `Ω p = p w`, for a surjection `p`. Fails with
/// `KernelNotInvariant` when `ker p` is not `w`-stable.
pub fn induced_endomorphism(p: &Matrix, w: &Matrix) -> Result<Matrix> {
    let (_, pivots) = p.rref();
    if pivots.len() != p.rows() {
        return Err(Error::Internal(format!("projection of rank {} onto dimension {}", pivots.len(), p.rows())));
    }
    let pw = p.mul(w)?;
    let inv = p.select_columns(&pivots).inverse().expect("pivot columns are independent");
    let omega = pw.select_columns(&pivots).mul(&inv)?;
    if omega.mul(p)? != pw {
        return Err(Error::KernelNotInvariant("the kernel of ρ ∘ π is not stable under ω".into()));
    }
    Ok(omega)
}

/// `H^ell(G)` for `n` generic hyperplanes in dimension `ell`.
pub fn generic_cohomology(n: usize, ell: usize, lambda: &Weights) -> Result<(OsAlgebra, TopCohomology)> {
    let os = OsAlgebra::general_position(n, ell)?;
    let cohom = TopCohomology::new(&os, lambda)?;
    Ok((os, cohom))
}

/// `Ω_λ(S, r)` on `H^ell(G)` in the βnbc basis `{ξ_I : 1 ∉ I}`, given the
/// formal `ω(S, r)` in degree `ell`.
pub fn omega_sr_on_cohomology(endo: &ChainEndo<Poly>, generic: &TopCohomology, lambda: &Weights) -> Result<Matrix> {
    let ell = endo.ambient().ell;
    let w = endo.specialize(lambda).matrix(ell)?;
    induced_endomorphism(&generic.rho_pi, &w)
}

/// Eigenstructure of `Ω_λ(S, r)` on `H^ell(G)`, from the images of the
/// spanning families under `ρ`.
pub fn eigen_on_h(endo: &ChainEndo<Poly>, generic: &TopCohomology, s: IndexSet, r: usize) -> Result<EigenReport> {
    let ambient = endo.ambient();
    let ell = ambient.ell;
    let lambda = &generic.lambda;
    let lambda_s = require_nonzero(lambda, s)?;
    let omega = omega_sr_on_cohomology(endo, generic, lambda)?;
    let fam = spanning_sets(ambient, s, r, ell, lambda)?;
    let push = |xs: &[ExtElement<Rational>]| -> Result<Vec<Vec<Rational>>> {
        Ok(coords(ambient, ell, xs)?
            .into_iter()
            .map(|v| generic.rho_pi.mul_vec(&v))
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .collect())
    };
    let report = report_from_candidates(omega, lambda_s, &push(&fam.v)?, &push(&fam.w)?)?;
    check_dims(&report, eigen_dims_on_h(ambient.n, ell, s.len(), r), "Ω_λ(S, r)")?;
    Ok(report)
}

/// Eigenstructure of `Ω_λ(S, r)` on `H^ell(G)`.
pub fn eigen_omega_sr_on_hg(ambient: Ambient, s: IndexSet, r: usize, lambda: &Weights) -> Result<EigenReport> {
    let (_, generic) = generic_cohomology(ambient.n, ambient.ell, lambda)?;
    let endo = omega_sr(ambient, s, r, &[ambient.ell])?;
    eigen_on_h(&endo, &generic, s, r)
}

/// `Ω_λ(T', T)` on `H^ell(T)` together with the data it was computed from.
#[derive(Debug, Clone)]
pub struct GmEndomorphism {
    pub t: CombType,
    pub t_prime: CombType,
    pub os: OsAlgebra,
    pub cohomology: TopCohomology,
    /// Matrix in βnbc coordinates.
    pub omega: Matrix,
}

fn check_pair(b_t: &Realization, t_prime: &CombType) -> Result<CombType> {
    if t_prime.ambient() != b_t.ambient() {
        let (a, b) = (b_t.ambient(), t_prime.ambient());
        return Err(Error::AmbientMismatch(a.n, a.ell, b.n, b.ell));
    }
    let t = dep_star_of(b_t);
    if dep_difference(&t, t_prime)?.is_empty() {
        return Err(Error::NotADegeneration("the two types have the same dependent sets".into()));
    }
    Ok(t)
}

/// `Ω_λ(T', T)` from `Ω ∘ (ρ_T ∘ π) = (ρ_T ∘ π) ∘ ω^ell_λ(T', T)`.
pub fn gm_endomorphism(b_t: &Realization, t_prime: &CombType, lambda: &Weights) -> Result<GmEndomorphism> {
    let t = check_pair(b_t, t_prime)?;
    let os = OsAlgebra::new(b_t)?;
    let cohomology = TopCohomology::new(&os, lambda)?;
    let ell = b_t.ell();
    let w = omega_of_pair(&t, t_prime, &[ell])?.specialize(lambda).matrix(ell)?;
    let omega = induced_endomorphism(&cohomology.rho_pi, &w)?;
    Ok(GmEndomorphism {
        t,
        t_prime: t_prime.clone(),
        os,
        cohomology,
        omega,
    })
}

/// Both sides of `Ω_λ(T', T) ∘ τ = τ ∘ Ω_λ(S, r)`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub principal: Principal,
    pub tau: Matrix,
    pub omega_sr: Matrix,
    pub lhs: Matrix,
    pub rhs: Matrix,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn decomposition(gm: &GmEndomorphism, lambda: &Weights) -> Result<Decomposition> {
    let principal = principal_dependence(&gm.t, &gm.t_prime)?;
    let amb = gm.os.ambient();
    let (_, generic) = generic_cohomology(amb.n, amb.ell, lambda)?;
    let endo = omega_sr(amb, principal.s, principal.r, &[amb.ell])?;
    let omega_g = omega_sr_on_cohomology(&endo, &generic, lambda)?;
    let tau = tau(&gm.os, &gm.cohomology, &generic)?;
    let lhs = gm.omega.mul(&tau)?;
    let rhs = tau.mul(&omega_g)?;
    Ok(Decomposition {
        principal,
        tau,
        omega_sr: omega_g,
        lhs,
        rhs,
    })
}

/// Whether `Ω_λ(T', T) ∘ τ = τ ∘ Ω_λ(S, r)` holds exactly.
pub fn verify_decomposition(b_t: &Realization, t_prime: &CombType, lambda: &Weights) -> Result<bool> {
    let gm = gm_endomorphism(b_t, t_prime, lambda)?;
    Ok(decomposition(&gm, lambda)?.holds())
}

/// Spectrum of `Ω_λ(T', T)` with geometric multiplicities.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub principal: Principal,
    pub lambda_s: Rational,
    pub dim: usize,
    pub mult_zero: usize,
    pub mult_lambda: usize,
    pub diagonalizable: bool,
    pub frames: Vec<IndexSet>,
    pub omega: Matrix,
    pub basis_zero: Vec<Vec<Rational>>,
    pub basis_lambda: Vec<Vec<Rational>>,
}

impl SpectrumReport {
    pub fn require_diagonalizable(&self) -> Result<()> {
        if self.diagonalizable {
            return Ok(());
        }
        Err(Error::NotDiagonalizable(format!(
            "Ω = {:?} has nullities ({}, {}) at λ_S = {}, dimension {}",
            self.omega, self.mult_zero, self.mult_lambda, self.lambda_s, self.dim
        )))
    }
}

pub fn gm_spectrum(b_t: &Realization, t_prime: &CombType, lambda: &Weights) -> Result<SpectrumReport> {
    let t = check_pair(b_t, t_prime)?;
    let principal = principal_dependence(&t, t_prime)?;
    let lambda_s = require_nonzero(lambda, principal.s)?;
    let gm = gm_endomorphism(b_t, t_prime, lambda)?;
    Ok(spectrum_of(&gm, principal, lambda_s))
}

fn spectrum_of(gm: &GmEndomorphism, principal: Principal, lambda_s: Rational) -> SpectrumReport {
    let shifted = gm.omega.shift(&lambda_s);
    let basis_zero = gm.omega.nullspace();
    let basis_lambda = shifted.nullspace();
    let dim = gm.omega.rows();
    SpectrumReport {
        principal,
        dim,
        mult_zero: basis_zero.len(),
        mult_lambda: basis_lambda.len(),
        diagonalizable: basis_zero.len() + basis_lambda.len() == dim,
        frames: gm.cohomology.frames.clone(),
        omega: gm.omega.clone(),
        lambda_s,
        basis_zero,
        basis_lambda,
    }
}

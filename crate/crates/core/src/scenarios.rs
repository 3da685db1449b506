//! Seeded random realizations with prescribed concurrences, used to build
//! codimension-zero and codimension-one degenerations.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{dep_star_of, pencil_type, principal_dependence, CombType, Realization};
use crate::error::{Error, Result};
use crate::exterior::IndexSet;
use crate::linalg::Matrix;
use crate::ring::{rat, Rational};

const ATTEMPTS: usize = 200;
const SPREAD: i64 = 5;

/// Homogeneous flat `W ⊆ Q^{ell+1}` that every hyperplane of `set` must
/// contain (rows of `set` are chosen orthogonal to `span`). When `n + 1` is
/// in `set`, every spanning vector must have first coordinate zero.
#[derive(Debug, Clone)]
pub struct Incidence {
    pub set: IndexSet,
    pub span: Vec<Vec<Rational>>,
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rat(rng.gen_range(-SPREAD..=SPREAD))).collect()
}

/// A random affine point (first coordinate 1) or point at infinity.
pub fn random_point(rng: &mut ChaCha8Rng, ell: usize, at_infinity: bool) -> Vec<Rational> {
    let mut p = random_vector(rng, ell + 1);
    p[0] = if at_infinity { Rational::zero() } else { rat(1) };
    if at_infinity && p[1..].iter().all(Zero::is_zero) {
        p[1] = rat(1);
    }
    p
}

/// One draw of a realization satisfying the incidences; `None` if a row
/// is forced to be degenerate.
pub fn realize_once(n: usize, ell: usize, incidences: &[Incidence], rng: &mut ChaCha8Rng) -> Result<Option<Realization>> {
    for inc in incidences.iter().filter(|inc| inc.set.contains(n + 1)) {
        if inc.span.iter().any(|v| !v[0].is_zero()) {
            return Err(Error::InvalidRealization(format!(
                "incidence {} contains the hyperplane at infinity but its flat is affine",
                inc.set.label()
            )));
        }
    }
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let constraints: Vec<Vec<Rational>> =
            incidences.iter().filter(|inc| inc.set.contains(i)).flat_map(|inc| inc.span.iter().cloned()).collect();
        let basis = if constraints.is_empty() {
            (0..=ell).map(|k| (0..=ell).map(|j| rat((j == k) as i64)).collect()).collect()
        } else {
            Matrix::from_rows(constraints).nullspace()
        };
        if basis.is_empty() {
            return Ok(None);
        }
        let mut row = vec![Rational::zero(); ell + 1];
        for v in &basis {
            let c = rat(rng.gen_range(-SPREAD..=SPREAD));
            for (x, y) in row.iter_mut().zip(v) {
                *x += &c * y;
            }
        }
        rows.push(row);
    }
    match Realization::new(ell, rows) {
        Ok(b) => Ok(Some(b)),
        Err(Error::InvalidRealization(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Realization whose `Dep*` passes `accept`, retried over draws from `seed`.
pub fn realize_where(
    n: usize,
    ell: usize,
    seed: u64,
    mut build: impl FnMut(&mut ChaCha8Rng) -> Vec<Incidence>,
    mut accept: impl FnMut(&Realization) -> bool,
) -> Result<Realization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let incidences = build(&mut rng);
        if let Some(b) = realize_once(n, ell, &incidences, &mut rng)? {
            if accept(&b) {
                return Ok(b);
            }
        }
    }
    Err(Error::InvalidRealization(format!("no admissible realization after {ATTEMPTS} draws")))
}

/// Generic realization of `n` hyperplanes in dimension `ell`.
pub fn generic(n: usize, ell: usize, seed: u64) -> Result<Realization> {
    realize_where(n, ell, seed, |_| Vec::new(), |b| dep_star_of(b).is_empty())
}

/// Realization of codimension one: the `ell + 1` hyperplanes of `k ⊆ [n]`
/// meet in an affine point and nothing else is special.
pub fn codim_one(n: usize, ell: usize, k: IndexSet, seed: u64) -> Result<Realization> {
    let expect = CombType::from_list(n, ell, [(k, 1)])?;
    realize_where(
        n,
        ell,
        seed,
        |rng| {
            vec![Incidence {
                set: k,
                span: vec![random_point(rng, ell, false)],
            }]
        },
        |b| dep_star_of(b) == expect,
    )
}

/// The three ways a codimension-one type with `Dep_{ell+1} = {K}` degenerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneration {
    /// `|S| = ell + 1`, `|S ∩ K| <= ell - 1`; principal `(S, ell)`.
    TypeI(IndexSet),
    /// `S = K \ {p}`; principal `(S, ell - 1)`.
    TypeII(usize),
    /// `S = K ∪ {m}`, `m ∈ [n+1] \ K`; principal `(S, ell)`.
    TypeIII(usize),
}

impl Degeneration {
    /// Principal dependence `(S, r)` expected for the pair.
    pub fn principal(&self, k: IndexSet, ell: usize) -> (IndexSet, usize) {
        match *self {
            Degeneration::TypeI(s) => (s, ell),
            Degeneration::TypeII(p) => (k.remove(p), ell - 1),
            Degeneration::TypeIII(m) => (k.insert(m), ell),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Degeneration::TypeI(_) => "I",
            Degeneration::TypeII(_) => "II",
            Degeneration::TypeIII(_) => "III",
        }
    }

    /// Every degeneration of the codimension-one type with dependent set `k`.
    pub fn all(n: usize, ell: usize, k: IndexSet) -> Vec<Degeneration> {
        let mut out = Vec::new();
        for s in IndexSet::k_subsets(n + 1, ell + 1) {
            if s.intersection(k).len() + 1 <= ell {
                out.push(Degeneration::TypeI(s));
            }
        }
        if ell >= 2 {
            out.extend(k.iter().map(Degeneration::TypeII));
        }
        // K ∪ {m} = [n+1] would put every hyperplane through one point
        if k.len() + 1 <= n {
            out.extend((1..=n + 1).filter(|m| !k.contains(*m)).map(Degeneration::TypeIII));
        }
        out
    }
}

/// A degeneration pair `T -> T'` of a codimension-one type, both realized.
#[derive(Debug, Clone)]
pub struct DegenerationPair {
    pub kind: Degeneration,
    pub k: IndexSet,
    pub b_t: Realization,
    pub b_t_prime: Realization,
    pub principal: (IndexSet, usize),
}

/// Realizes `T` (dependent set `k`) and its degeneration of the given kind.
/// `T'` is accepted only if its dependent sets are exactly those of `T` and
/// the pencil, and its principal dependence is the expected one.
pub fn codim_one_degeneration(
    n: usize,
    ell: usize,
    k: IndexSet,
    kind: Degeneration,
    seed: u64,
) -> Result<DegenerationPair> {
    let (s, r) = kind.principal(k, ell);
    let b_t = codim_one(n, ell, k, seed)?;
    let t = dep_star_of(&b_t);
    let pencil = pencil_type(n, ell, s, r)?;
    let infinity = n + 1;
    let b_t_prime = realize_where(
        n,
        ell,
        seed.wrapping_add(0x9e37_79b9),
        |rng| match kind {
            Degeneration::TypeI(s) => vec![
                Incidence {
                    set: k,
                    span: vec![random_point(rng, ell, false)],
                },
                Incidence {
                    set: s,
                    span: vec![random_point(rng, ell, s.contains(infinity))],
                },
            ],
            Degeneration::TypeII(p) => {
                let point = random_point(rng, ell, false);
                let line = vec![point.clone(), random_point(rng, ell, true)];
                vec![
                    Incidence {
                        set: k,
                        span: vec![point],
                    },
                    Incidence {
                        set: k.remove(p),
                        span: line,
                    },
                ]
            }
            Degeneration::TypeIII(m) => vec![Incidence {
                set: k.insert(m),
                span: vec![random_point(rng, ell, m == infinity)],
            }],
        },
        |b| {
            let tp = dep_star_of(b);
            // nothing beyond T and the pencil, so no accidental coincidences
            t.dep_subset_of(&tp)
                && pencil.dep_subset_of(&tp)
                && tp.dep_star().all(|(x, _)| t.contains(x) || pencil.contains(x))
                && principal_dependence(&t, &tp).map(|p| (p.s, p.r)) == Ok((s, r))
        },
    )?;
    Ok(DegenerationPair {
        kind,
        k,
        b_t,
        b_t_prime,
        principal: (s, r),
    })
}

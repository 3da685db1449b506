//! Sparse multivariate polynomials over the rationals in the weight
//! variables `y_1, ..., y_n`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::ring::{self, format_rational, Rational};

/// Exponent vector stored sparsely as `(variable, exponent)` pairs sorted by
/// variable, with no zero exponents. Variables are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PolyMonomial(Vec<(u16, u16)>);

impl PolyMonomial {
    pub fn unit() -> Self {
        PolyMonomial(Vec::new())
    }

    pub fn var(j: usize) -> Self {
        PolyMonomial(vec![(j as u16, 1)])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn factors(&self) -> &[(u16, u16)] {
        &self.0
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) if va == vb => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&a), Some(&b)) if a.0 < b.0 => {
                    out.push(a);
                    i += 1;
                }
                (Some(_), Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (Some(&a), None) => {
                    out.push(a);
                    i += 1;
                }
                (None, Some(&b)) => {
                    out.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        PolyMonomial(out)
    }
}

/// Polynomial with rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<PolyMonomial, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(PolyMonomial::unit(), c);
        }
        Poly { terms }
    }

    /// The variable `y_j` for `1 <= j <= n`; `y_{n+1}` is `-(y_1 + ... + y_n)`.
    pub fn var(j: usize, n: usize) -> Self {
        assert!(j >= 1 && j <= n + 1, "variable index {j} out of range for n = {n}");
        if j <= n {
            let mut terms = BTreeMap::new();
            terms.insert(PolyMonomial::var(j), Rational::one());
            Poly { terms }
        } else {
            let mut terms = BTreeMap::new();
            for i in 1..=n {
                terms.insert(PolyMonomial::var(i), -Rational::one());
            }
            Poly { terms }
        }
    }

    /// `y_S = sum_{i in S} y_i` for indices in `1..=n+1`.
    pub fn var_sum(indices: impl IntoIterator<Item = usize>, n: usize) -> Self {
        let mut acc = Poly::default();
        for i in indices {
            acc = ring::Coeff::add(&acc, &Poly::var(i, n));
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PolyMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(PolyMonomial::degree).max()
    }

    fn insert_add(&mut self, m: PolyMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::default();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Evaluates at `values[j - 1] = y_j`.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = &values[v as usize - 1];
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Ring homomorphism sending `y_j` to `images[j - 1]`.
    pub fn substitute(&self, images: &[Poly]) -> Self {
        let mut acc = Poly::default();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in m.factors() {
                for _ in 0..e {
                    t = ring::Coeff::mul(&t, &images[v as usize - 1]);
                }
            }
            acc = ring::Coeff::add(&acc, &t);
        }
        acc
    }
}

impl ring::Coeff for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.insert_add(m.clone(), c.clone());
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", format_rational(c))?;
            for &(v, e) in m.factors() {
                if e == 1 {
                    write!(f, "*y{v}")?;
                } else {
                    write!(f, "*y{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

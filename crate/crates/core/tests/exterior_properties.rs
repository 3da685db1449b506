use arrgm::exterior::{beta_count, e_lambda, e_y, eta_weighted, DegreeBasis};
use arrgm::ring::frac;
use arrgm::{Ambient, ExtElement, IndexSet, Matrix, Rational};
use proptest::prelude::*;

fn matrix_of(a: Ambient, from: usize, to: usize, f: impl Fn(&ExtElement<Rational>) -> ExtElement<Rational>) -> Matrix {
    let target = DegreeBasis::new(&a, to);
    let cols: Vec<Vec<Rational>> = a
        .basis(from)
        .into_iter()
        .map(|t| {
            let x = ExtElement::monomial(a, t, frac(1, 1));
            f(&x).coordinates(&target).unwrap()
        })
        .collect();
    Matrix::from_columns(target.len(), &cols)
}

#[test]
fn boundary_squares_to_zero_up_to_seven() {
    for n in 1..=7 {
        let a = Ambient::new(n, n).unwrap();
        for q in 0..=n {
            for t in a.basis(q) {
                let x = ExtElement::<Rational>::monomial(a, t, frac(1, 1));
                assert!(x.boundary().boundary().is_zero(), "e_{}", t.label());
            }
        }
    }
}

#[test]
fn weight_forms_square_to_zero() {
    for n in 1..=6 {
        let a = Ambient::new(n, n).unwrap();
        let ey = e_y(a);
        assert!(ey.wedge(&ey).unwrap().is_zero());
        let lambda: Vec<Rational> = (1..=n as i64).map(|j| frac(j, j + 2)).collect();
        let el = e_lambda(a, &lambda);
        assert!(el.wedge(&el).unwrap().is_zero());
    }
}

#[test]
fn boundary_homology_is_concentrated_in_top_degree() {
    for n in 2..=6 {
        for ell in 1..=n {
            let a = Ambient::new(n, ell).unwrap();
            let d: Vec<Matrix> = (0..=ell).map(|q| matrix_of(a, q, q.saturating_sub(1), |x| x.boundary())).collect();
            for q in 0..=ell {
                let kernel = if q == 0 { a.dim(0) } else { a.dim(q) - d[q].rank() };
                let image = if q == ell { 0 } else { d[q + 1].rank() };
                let expect = if q == ell { beta_count(n, ell) } else { 0 };
                assert_eq!(kernel - image, expect, "n={n} ell={ell} q={q}");
            }
        }
    }
}

#[test]
fn weight_cohomology_is_concentrated_in_top_degree() {
    for n in 2..=6 {
        for ell in 1..=n {
            let a = Ambient::new(n, ell).unwrap();
            let lambda: Vec<Rational> = (1..=n as i64).map(|j| frac(-j, 2 * n as i64 + 1)).collect();
            let el = e_lambda(a, &lambda);
            let m: Vec<Matrix> = (0..ell).map(|q| matrix_of(a, q, q + 1, |x| el.wedge(x).unwrap())).collect();
            for q in 0..=ell {
                let kernel = if q == ell { a.dim(ell) } else { a.dim(q) - m[q].rank() };
                let image = if q == 0 { 0 } else { m[q - 1].rank() };
                let expect = if q == ell { beta_count(n, ell) } else { 0 };
                assert_eq!(kernel - image, expect, "n={n} ell={ell} q={q}");
            }
        }
    }
}

const N: usize = 6;

fn element(degree: usize) -> impl Strategy<Value = ExtElement<Rational>> {
    let a = Ambient::new(N, N).unwrap();
    let basis = a.basis(degree);
    proptest::collection::vec((-4i64..5, 1i64..4), basis.len()).prop_map(move |cs| {
        let mut x = ExtElement::zero(a);
        for (t, (p, q)) in basis.iter().zip(cs) {
            x.add_term(*t, frac(p, q));
        }
        x
    })
}

fn homogeneous() -> impl Strategy<Value = (usize, ExtElement<Rational>)> {
    (0..=3usize).prop_flat_map(|q| element(q).prop_map(move |x| (q, x)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_associative(x in homogeneous(), y in homogeneous(), z in homogeneous()) {
        let (x, y, z) = (x.1, y.1, z.1);
        let left = x.wedge(&y).unwrap().wedge(&z).unwrap();
        let right = x.wedge(&y.wedge(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wedge_is_graded_commutative((p, x) in homogeneous(), (q, y) in homogeneous()) {
        let xy = x.wedge(&y).unwrap();
        let yx = y.wedge(&x).unwrap();
        let expect = if (p * q) % 2 == 0 { yx } else { yx.neg() };
        prop_assert_eq!(xy, expect);
    }

    #[test]
    fn boundary_is_a_graded_derivation((p, x) in homogeneous(), (_, y) in homogeneous()) {
        let sign = if p % 2 == 0 { frac(1, 1) } else { frac(-1, 1) };
        let lhs = x.wedge(&y).unwrap().boundary();
        let rhs = x.boundary().wedge(&y).unwrap().add(&x.wedge(&y.boundary()).unwrap().scale(&sign)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_against_eta(
        s in 1u32..(1 << N),
        lambda in proptest::collection::vec((-5i64..6, 1i64..5), N),
        (_, x) in homogeneous(),
    ) {
        let a = Ambient::new(N, N).unwrap();
        let s = IndexSet(s << 1);
        let lambda: Vec<Rational> = lambda.into_iter().map(|(p, q)| frac(p, q)).collect();
        let eta = eta_weighted(a, s, &lambda).unwrap();
        let lambda_s: Rational = s.iter().map(|i| lambda[i - 1].clone()).sum();
        let lhs = eta.wedge(&x).unwrap().boundary();
        let rhs = x.scale(&lambda_s).sub(&eta.wedge(&x.boundary()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

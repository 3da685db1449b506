use arrgm::arrangement::{dep_star_of, sample_weights, Weights};
use arrgm::exterior::{boundary_of_set, e_lambda, DegreeBasis};
use arrgm::os::{tau, OsAlgebra, TopCohomology};
use arrgm::scenarios::codim_one;
use arrgm::{fixtures, Ambient, ExtElement, IndexSet, Matrix, Rational, Realization};
use num_traits::{One, Zero};

fn set(v: &[usize]) -> IndexSet {
    IndexSet::from_indices(v.iter().copied())
}

fn prod(w: &Weights, s: IndexSet) -> Rational {
    s.iter().map(|i| w.get(i)).product()
}

fn mono(a: Ambient, s: IndexSet, c: Rational) -> ExtElement<Rational> {
    ExtElement::monomial(a, s, c)
}

fn unit(len: usize, at: usize, c: Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[at] = c;
    v
}

fn frame_index(cohom: &TopCohomology, f: IndexSet) -> usize {
    cohom.frames.iter().position(|&g| g == f).expect("is a frame")
}

#[test]
fn generic_projection_closed_form() {
    for (n, ell) in [(4, 2), (5, 2), (5, 3), (6, 3)] {
        let os = OsAlgebra::general_position(n, ell).unwrap();
        let a = os.ambient();
        for seed in 0..3 {
            let w = sample_weights(os.realization(), &[], seed).unwrap();
            let cohom = TopCohomology::new(&os, &w).unwrap();
            assert_eq!(cohom.dim(), arrgm::exterior::beta_count(n, ell));
            for i in a.basis(ell) {
                let got = cohom.project(&os, &mono(a, i, Rational::one())).unwrap();
                if !i.contains(1) {
                    let p = prod(&w, i);
                    assert_eq!(got, unit(cohom.dim(), frame_index(&cohom, i), p.recip()));
                } else {
                    // -(λ_I)^{-1} Σ_{j ∉ I} ξ_j ξ_{I_1}
                    let i1 = i.remove(1);
                    let mut x = ExtElement::zero(a);
                    for j in (1..=n).filter(|j| !i.contains(*j)) {
                        let xi_j = mono(a, set(&[j]), w.get(j));
                        x = x.add(&xi_j.wedge(&mono(a, i1, prod(&w, i1))).unwrap()).unwrap();
                    }
                    let x = x.scale(&-prod(&w, i).recip());
                    assert_eq!(got, cohom.project(&os, &x).unwrap(), "I = {}", i.label());
                }
            }
        }
    }
}

fn check_codim_one_projection(b: &Realization, seed: u64) {
    let os = OsAlgebra::new(b).unwrap();
    let a = os.ambient();
    let (n, ell) = (a.n, a.ell);
    let k = IndexSet::initial(ell + 1);
    let f = k.remove(1);
    assert_eq!(dep_star_of(b).dep_star().collect::<Vec<_>>(), vec![(k, 1)]);
    assert_eq!(os.nbc_basis(ell).len(), a.dim(ell) - 1);
    assert!(!os.nbc_basis(ell).contains(&f));

    let w = sample_weights(b, &[k], seed).unwrap();
    let cohom = TopCohomology::new(&os, &w).unwrap();
    assert_eq!(cohom.dim(), arrgm::exterior::beta_count(n, ell) - 1);
    let lam_k = w.sum(k);
    for i in os.nbc_basis(ell).iter().copied() {
        let got = cohom.project(&os, &mono(a, i, Rational::one())).unwrap();
        let p = prod(&w, i);
        if !i.contains(1) {
            assert_eq!(got, unit(cohom.dim(), frame_index(&cohom, i), p.recip()));
            continue;
        }
        let i1 = i.remove(1);
        let xi_i1 = mono(a, i1, prod(&w, i1));
        let mut x = ExtElement::zero(a);
        if !i.is_subset(k) {
            for j in (1..=n).filter(|j| !i.contains(*j)) {
                x = x.add(&mono(a, set(&[j]), w.get(j)).wedge(&xi_i1).unwrap()).unwrap();
            }
            x = x.scale(&-p.recip());
        } else {
            // I = K \ {p}: -(λ_K λ_I)^{-1} Σ_{j ∉ K} [λ_I ξ_j ξ_{I_1} + ξ_j ξ_p ∂ξ_{I_1}]
            let missing = k.difference(i).min().unwrap();
            let xi_p = mono(a, set(&[missing]), w.get(missing));
            let d_xi_i1 = boundary_of_set::<Rational>(a, i1).scale(&prod(&w, i1));
            for j in (1..=n).filter(|j| !k.contains(*j)) {
                let xi_j = mono(a, set(&[j]), w.get(j));
                let first = xi_j.wedge(&xi_i1).unwrap().scale(&w.sum(i));
                let second = xi_j.wedge(&xi_p).unwrap().wedge(&d_xi_i1).unwrap();
                x = x.add(&first.add(&second).unwrap()).unwrap();
            }
            x = x.scale(&-(lam_k.clone() * p).recip());
        }
        assert_eq!(got, cohom.project(&os, &x).unwrap(), "I = {}", i.label());
    }
}

#[test]
fn codim_one_projection_closed_form() {
    check_codim_one_projection(&fixtures::example_a(), 1);
    for (n, ell) in [(5, 2), (5, 3), (6, 2), (6, 3)] {
        for seed in 0..2 {
            let b = codim_one(n, ell, IndexSet::initial(ell + 1), seed).unwrap();
            check_codim_one_projection(&b, seed);
        }
    }
}

#[test]
fn projection_is_a_chain_map() {
    let mut cases: Vec<Realization> = fixtures::all().into_iter().map(|(_, b)| b).collect();
    for (n, ell) in [(5, 2), (6, 3), (6, 4)] {
        cases.push(codim_one(n, ell, IndexSet::initial(ell + 1), 7).unwrap());
    }
    for b in &cases {
        let os = OsAlgebra::new(b).unwrap();
        let a = os.ambient();
        let w = sample_weights(b, &[], 3).unwrap();
        let el = e_lambda(a, w.values());
        for q in 0..a.ell {
            for t in a.basis(q) {
                // e_T - lift(π e_T) lies in the ideal, so must its product with e_λ
                let coords = os.reduce(&mono(a, t, Rational::one()), q).unwrap();
                let lift = ExtElement::from_coordinates(a, os.nbc(q), &coords);
                let diff = mono(a, t, Rational::one()).sub(&lift).unwrap();
                let image = os.reduce(&el.wedge(&diff).unwrap(), q + 1).unwrap();
                assert!(image.iter().all(Zero::is_zero));
            }
        }
    }
}

#[test]
fn top_dimension_matches_bnbc_and_euler_characteristic() {
    for (name, b) in fixtures::all() {
        let os = OsAlgebra::new(&b).unwrap();
        let w = sample_weights(&b, &[], 5).unwrap();
        let cohom = TopCohomology::new(&os, &w).unwrap();
        assert_eq!(cohom.dim() as i64, os.euler_top(), "{name}");
        assert_eq!(cohom.dim(), os.bnbc_frames().len(), "{name}");
    }
}

fn tau_for(b: &Realization, w: &Weights) -> (Matrix, TopCohomology) {
    let os = OsAlgebra::new(b).unwrap();
    let cohom = TopCohomology::new(&os, w).unwrap();
    let generic = OsAlgebra::general_position(b.n(), b.ell()).unwrap();
    let gc = TopCohomology::new(&generic, w).unwrap();
    assert_eq!(gc.frames.iter().map(|f| f.label()).collect::<Vec<_>>(), ["23", "24", "25", "34", "35", "45"]);
    (tau(&os, &cohom, &gc).unwrap(), cohom)
}

fn column(m: &Matrix, label: &str) -> Vec<Rational> {
    let idx = ["23", "24", "25", "34", "35", "45"].iter().position(|l| *l == label).unwrap();
    m.column(idx)
}

#[test]
fn selberg_tau_table() {
    let b = fixtures::selberg();
    for seed in 0..5 {
        let w = sample_weights(&b, &[], seed).unwrap();
        let (t, cohom) = tau_for(&b, &w);
        assert_eq!(cohom.frames, vec![set(&[2, 4]), set(&[2, 5])]);
        let l = |i: &[usize]| w.sum(set(i));
        let v = |a: Rational, b: Rational| vec![a, b];
        let one = Rational::one();
        assert_eq!(column(&t, "23"), v(-one.clone(), -one.clone()));
        assert_eq!(column(&t, "24"), v(l(&[2, 4]) / l(&[2, 4, 5]), l(&[4]) / l(&[2, 4, 5])));
        assert_eq!(column(&t, "25"), v(l(&[5]) / l(&[2, 4, 5]), l(&[2, 5]) / l(&[2, 4, 5])));
        assert_eq!(column(&t, "34"), v(Rational::zero(), Rational::zero()));
        assert_eq!(column(&t, "35"), v(-l(&[5]) / l(&[1, 3, 5]), -l(&[3, 5]) / l(&[1, 3, 5])));
        assert_eq!(column(&t, "45"), v(-l(&[5]) / l(&[2, 4, 5]), l(&[4]) / l(&[2, 4, 5])));
        assert_eq!(t.rank(), 2);
    }
}

#[test]
fn rotated_selberg_tau_table() {
    let b = fixtures::example_tbar();
    for seed in 0..5 {
        let w = sample_weights(&b, &[], seed).unwrap();
        let (t, cohom) = tau_for(&b, &w);
        assert_eq!(cohom.frames, vec![set(&[2, 3]), set(&[2, 4]), set(&[2, 5])]);
        let l = |i: &[usize]| w.sum(set(i));
        let z = Rational::zero;
        let one = Rational::one();
        assert_eq!(column(&t, "23"), vec![one, z(), z()]);
        assert_eq!(column(&t, "24"), vec![z(), l(&[2, 4]) / l(&[2, 4, 5]), l(&[4]) / l(&[2, 4, 5])]);
        assert_eq!(column(&t, "25"), vec![z(), l(&[5]) / l(&[2, 4, 5]), l(&[2, 5]) / l(&[2, 4, 5])]);
        assert_eq!(column(&t, "34"), vec![z(), z(), z()]);
        assert_eq!(column(&t, "35"), vec![l(&[5]) / l(&[1, 3, 5]), z(), -l(&[3]) / l(&[1, 3, 5])]);
        assert_eq!(column(&t, "45"), vec![z(), -l(&[5]) / l(&[2, 4, 5]), l(&[4]) / l(&[2, 4, 5])]);
        assert_eq!(t.rank(), 3);
    }
}

#[test]
fn tau_is_surjective() {
    for (name, b) in fixtures::all() {
        let w = sample_weights(&b, &[], 9).unwrap();
        let os = OsAlgebra::new(&b).unwrap();
        let cohom = TopCohomology::new(&os, &w).unwrap();
        let generic = OsAlgebra::general_position(b.n(), b.ell()).unwrap();
        let gc = TopCohomology::new(&generic, &w).unwrap();
        let t = tau(&os, &cohom, &gc).unwrap();
        assert_eq!(t.rank(), cohom.dim(), "{name}");
        // τ ∘ ρ_G = ρ_T ∘ π
        assert_eq!(t.mul(&gc.rho_pi).unwrap(), cohom.rho_pi, "{name}");
    }
}

#[test]
fn image_of_a_lambda_projects_to_zero() {
    let b = fixtures::selberg();
    let os = OsAlgebra::new(&b).unwrap();
    let a = os.ambient();
    let w = sample_weights(&b, &[], 2).unwrap();
    let cohom = TopCohomology::new(&os, &w).unwrap();
    let el = e_lambda(a, w.values());
    let basis = DegreeBasis::new(&a, 1);
    for t in basis.monomials.iter().copied() {
        let x = el.wedge(&mono(a, t, Rational::one())).unwrap();
        assert!(cohom.project(&os, &x).unwrap().iter().all(Zero::is_zero));
    }
}

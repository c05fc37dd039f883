use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use proptest::prelude::*;

use hecke_jones::coxeter::{all_permutations, Word};
use hecke_jones::jones::{jones_rep, JonesRep};
use hecke_jones::kl::KlTable;
use hecke_jones::numeric::CMatrix;
use hecke_jones::quotient::burau::burau;
use hecke_jones::quotient::certificate::{complex_block_modulus, complex_element, CertificateData};
use hecke_jones::quotient::specialization::{dress, residuals, specialize, ParameterChoice};
use hecke_jones::quotient::Scheme;
use hecke_jones::wgraph::{build_wgraph, verify_hecke_relations};
use hecke_jones::tableaux::cell_of;

fn reps() -> &'static (JonesRep, JonesRep, CertificateData) {
    static R: OnceLock<(JonesRep, JonesRep, CertificateData)> = OnceLock::new();
    R.get_or_init(|| {
        let t = KlTable::new();
        let g2 = jones_rep(2, &t).unwrap();
        let g3 = jones_rep(3, &t).unwrap();
        let data = CertificateData::new(&g2);
        (g2, g3, data)
    })
}

#[test]
fn genus_three_block_agrees_with_genus_two() {
    // same q for both genera: t_3^14 = t_2^5 = q
    let (g2, g3, data) = reps();
    let mut compared = 0;
    for m in (4..=40u64).step_by(2) {
        let (Ok(s3), Ok(s2)) = (
            specialize(g3, m, Scheme::Even, ParameterChoice::Default),
            specialize(g2, m, Scheme::Even, ParameterChoice::Default),
        ) else {
            continue;
        };
        assert_eq!(s2.q, s3.q);
        compared += 1;
        // the dressing contributes c^24 to A
        let a3 = complex_element(&s3.matrices).scale(s3.scalar.powi(-24));
        let block3 = a3.block(0, 5, 0, 5);
        let exact = data.block.eval(s2.q).unwrap();
        assert!(block3.distance(&exact) < 1e-8 * exact.frobenius_norm(), "m={m}");
        let big = complex_block_modulus(&a3).unwrap();
        let small = data.modulus_at(s2.q).unwrap();
        // eigenvalues clustered on the unit circle are only accurate to ~1e-5
        let tol = if small > 2.0 { 1e-8 } else { 1e-4 };
        assert!((big - small).abs() < tol * small, "m={m}: {big} vs {small}");
    }
    assert!(compared >= 3, "{compared}");
}

#[test]
fn genus_four_representation_is_consistent() {
    let rep = jones_rep(4, &KlTable::new()).unwrap();
    assert_eq!((rep.d, rep.r), (42, 14));
    assert!(rep.verify().all_passed());
}

#[test]
fn every_cell_of_s5_carries_a_hecke_representation() {
    let t = KlTable::new();
    let mut seen = 0;
    for w in all_permutations(5) {
        let cell = cell_of(&w);
        if cell.members[0] != w {
            continue;
        }
        seen += cell.len();
        assert!(verify_hecke_relations(&build_wgraph(&cell, &t).generator_matrices()).all_passed());
    }
    assert_eq!(seen, 120);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dressing_invariant_on_unit_circle(theta in 0.05f64..PI) {
        // c = t^{2r-d} with t the principal root satisfies the sphere relations
        // for every q on the unit circle.
        let (g2, _, _) = reps();
        let q = Complex64::from_polar(1.0, theta);
        let t = Complex64::from_polar(1.0, theta / 5.0);
        let mats = dress(g2, q, t.powi(-1)).unwrap();
        prop_assert!(residuals(&mats, 1).sphere_max() < 1e-9);
    }

    #[test]
    fn even_family_specializations(k in 1u64..12, plus in any::<bool>()) {
        let (g2, _, _) = reps();
        let m = if plus { 2 * (3 * k + 1) } else { 2 * (3 * k - 1) };
        if let Ok(s) = specialize(g2, m, Scheme::Even, ParameterChoice::K(k)) {
            prop_assert!(s.residuals.within(1e-9));
            prop_assert!((s.scalar.norm() - 1.0).abs() < 1e-12);
            let id = CMatrix::identity(5);
            for x in &s.matrices {
                prop_assert!(x.pow(m).distance(&id) < 1e-9);
            }
        }
    }

    #[test]
    fn burau_satisfies_random_braid_words(n in 3usize..7, word in prop::collection::vec(1usize..6, 0..8)) {
        // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1} inside a random context
        let b = burau(n);
        let letters: Vec<usize> = word.into_iter().filter(|&i| i < n).collect();
        let ctx = Word(letters.clone());
        let prefix = ctx.letters().iter().fold(hecke_jones::laurent::LaurentMatrix::identity(n - 1), |acc, &i| &acc * &b[i - 1]);
        for i in 0..n - 2 {
            let lhs = &prefix * &(&(&b[i] * &b[i + 1]) * &b[i]);
            let rhs = &prefix * &(&(&b[i + 1] * &b[i]) * &b[i + 1]);
            prop_assert_eq!(lhs, rhs);
        }
    }
}

mod common;

use common::*;
use homalg_core::exact::rational::int;
use homalg_core::fixtures;
use homalg_core::functors::horizontal;
use homalg_core::operators::{
    check_commuting, check_hessian, check_oop_endomorphism, check_operator, dendriform_identity_operator,
    hessian_dendrify, induce, induce_pair, twist_oop_setup, BilinearForm,
};
use homalg_core::reps::{adjoint_rep, regular_pre_malcev_rep};
use homalg_core::structures::check;
use homalg_core::{
    CheckOptions, Error, HomStructure, Matrix, OperatorKind, OperatorWitness, ProductRole as R, SparseVec,
    StructureClass as C,
};

fn lie2_table() -> Table {
    let mut t: Table = vec![vec![vec![0; 2]; 2]; 2];
    t[0][1][1] = 1;
    t[1][0][1] = -1;
    t
}

fn passes(s: &HomStructure, class: C) -> bool {
    check(s, class, CheckOptions::default()).unwrap().pass
}

#[test]
fn rota_baxter_check_matches_brute_force_on_lie2() {
    let t = lie2_table();
    let s = fixtures::lie2();
    let vals = [-1i64, 0, 1];
    let mut found = 0;
    for weight in [0i64, 1] {
        for a in vals {
            for b in vals {
                for c in vals {
                    for d in vals {
                        let m = vec![vec![a, b], vec![c, d]];
                        let w = OperatorWitness::rota_baxter(matrix_of(&m), int(weight));
                        let engine = check_operator(&s, &w).unwrap().pass;
                        assert_eq!(engine, is_rota_baxter(&t, &m, weight), "{m:?} weight {weight}");
                        found += usize::from(engine);
                    }
                }
            }
        }
    }
    assert!(found > 1);
}

#[test]
fn lie2_rota_baxter_induces_hand_computed_product() {
    // R(e1) = e2, so e1·e1 = [R e1, e1] = [e2, e1] = -e2 and every other
    // basis product vanishes.
    let s = fixtures::lie2();
    let pm = induce(&s, &fixtures::lie2_rota_baxter(), "malcev-to-premalcev-rb").unwrap();
    let d = pm.tensor(R::Dot).unwrap();
    assert_eq!(d.basis_product(0, 0), &SparseVec::from_pairs([(1, int(-1))]));
    assert!(d.basis_product(0, 1).is_zero());
    assert!(d.basis_product(1, 0).is_zero());
    assert!(d.basis_product(1, 1).is_zero());
    assert!(passes(&pm, C::HomPreMalcev));
}

#[test]
fn split_octonion_pair_is_valid_and_commuting() {
    let (r1, r2) = fixtures::split_octonion_rb_pair();
    assert_eq!(r1.kind(), OperatorKind::RotaBaxter);
    assert!(check_commuting(&r1, &r2).unwrap());
    for s in [fixtures::split_octonions(), fixtures::split_octonions_twisted(), fixtures::split_octonion_malcev()] {
        assert!(check_operator(&s, &r1).unwrap().pass);
        assert!(check_operator(&s, &r2).unwrap().pass);
    }
    let r = check_operator(&fixtures::split_octonions(), &r1).unwrap();
    assert_eq!(r.identities, ["RB:star", "RB-ALPHA"]);
}

#[test]
fn rb_inductions_land_in_their_classes() {
    let (r1, r2) = fixtures::split_octonion_rb_pair();
    for alt in [fixtures::split_octonions(), fixtures::split_octonions_twisted()] {
        let malcev = homalg_core::functors::commutator(&alt, R::Star).unwrap();
        let pa = induce(&alt, &r1, "alternative-to-prealt-rb").unwrap();
        assert!(passes(&pa, C::HomPreAlternative));
        let q = induce(&pa, &r2, "prealt-to-quadri-rb").unwrap();
        assert!(passes(&q, C::HomAltQuadri));
        let pm = induce(&malcev, &r1, "malcev-to-premalcev-rb").unwrap();
        assert!(passes(&pm, C::HomPreMalcev));
        let md = induce(&pm, &r2, "premalcev-to-mdendriform-rb").unwrap();
        assert!(passes(&md, C::HomMDendriform));
        assert!(passes(&induce_pair(&malcev, &r1, &r2, "malcev-pair-to-mdendriform").unwrap(), C::HomMDendriform));
        assert!(passes(&induce_pair(&alt, &r1, &r2, "alternative-pair-to-quadri").unwrap(), C::HomAltQuadri));
    }
}

#[test]
fn o_operator_for_adjoint_rep_matches_rota_baxter() {
    let s = fixtures::split_octonion_malcev();
    let (r1, _) = fixtures::split_octonion_rb_pair();
    let rep = adjoint_rep(&s, 0).unwrap();
    let w = OperatorWitness::o_operator(r1.map().clone(), rep).unwrap();
    let r = check_operator(&s, &w).unwrap();
    assert!(r.pass);
    assert!(r.identities.iter().any(|i| i == "OOP"));
    let via_oop = induce(&s, &w, "malcev-to-premalcev-oop").unwrap();
    let via_rb = induce(&s, &r1, "malcev-to-premalcev-rb").unwrap();
    assert_eq!(via_oop.tensor(R::Dot).unwrap(), via_rb.tensor(R::Dot).unwrap());
}

#[test]
fn pre_malcev_o_operator_and_endomorphism_twist() {
    let pm = fixtures::pre_malcev_from_rb();
    let (_, r2) = fixtures::split_octonion_rb_pair();
    let rep = regular_pre_malcev_rep(&pm, 0).unwrap();
    let w = OperatorWitness::o_operator(r2.map().clone(), rep).unwrap();
    assert!(check_operator(&pm, &w).unwrap().pass);
    let md = induce(&pm, &w, "premalcev-to-mdendriform-oop").unwrap();
    assert!(passes(&md, C::HomMDendriform));
    assert_eq!(
        md.tensor(R::TriRight).unwrap(),
        induce(&pm, &r2, "premalcev-to-mdendriform-rb").unwrap().tensor(R::TriRight).unwrap()
    );

    let phi = fixtures::split_octonion_automorphism();
    assert!(check_oop_endomorphism(&w, &phi, &phi).unwrap());
    let (base, _, w2) = twist_oop_setup(&pm, &w, &phi, &phi).unwrap();
    assert!(check_operator(&base, &w2).unwrap().pass);
    assert!(passes(&induce(&base, &w2, "premalcev-to-mdendriform-oop").unwrap(), C::HomMDendriform));

    let not_endo = Matrix::diag(&[int(2), int(1), int(1), int(1), int(1), int(1), int(1), int(1)]);
    assert!(matches!(twist_oop_setup(&pm, &w, &not_endo, &phi), Err(Error::EndomorphismInvalid(_))));
}

#[test]
fn identity_o_operator_recovers_dendriform_table() {
    let d = fixtures::dendriform_table_5d(&int(2), &int(1), &int(1)).unwrap();
    let (base, w) = dendriform_identity_operator(&d).unwrap();
    assert!(check_operator(&base, &w).unwrap().pass);
    assert_eq!(base.tensor(R::Dot).unwrap(), horizontal(&d).unwrap().tensor(R::Dot).unwrap());
    let c = induce(&base, &w, "premalcev-compatible-dendriform").unwrap();
    assert!(passes(&c, C::HomMDendriform));
    // ▶ + ◀ is the product the operator was built over.
    let sum = c.tensor(R::TriRight).unwrap().add(c.tensor(R::TriLeft).unwrap()).unwrap();
    assert_eq!(&sum, base.tensor(R::Dot).unwrap());
}

#[test]
fn compatible_dendriform_needs_invertible_operator() {
    let pm = fixtures::pre_malcev_from_rb();
    let (_, r2) = fixtures::split_octonion_rb_pair();
    let rep = regular_pre_malcev_rep(&pm, 0).unwrap();
    let w = OperatorWitness::o_operator(r2.map().clone(), rep).unwrap();
    assert!(matches!(induce(&pm, &w, "premalcev-compatible-dendriform"), Err(Error::SingularMatrix(_))));
}

#[test]
fn hessian_form_checks_and_dendrifies() {
    let b = fixtures::split_octonion_hessian_form();
    assert!(b.is_symmetric());
    let pm = fixtures::pre_malcev_from_rb();
    let r = check_hessian(&pm, &b).unwrap();
    assert!(r.pass);
    assert_eq!(r.identities, ["HESS-SYM", "HESS-NONDEG", "HESS-INV", "HESS-COCYCLE"]);
    let md = hessian_dendrify(&pm, &b).unwrap();
    assert!(passes(&md, C::HomMDendriform));
    assert_eq!(horizontal(&md).unwrap().tensor(R::Dot).unwrap(), pm.tensor(R::Dot).unwrap());

    // Twisted copy: same form, automorphism as twist.
    let (r1, _) = fixtures::split_octonion_rb_pair();
    let malcev = homalg_core::functors::commutator(&fixtures::split_octonions_twisted(), R::Star).unwrap();
    let pmt = induce(&malcev, &r1, "malcev-to-premalcev-rb").unwrap();
    assert!(check_hessian(&pmt, &b).unwrap().pass);
    assert!(passes(&hessian_dendrify(&pmt, &b).unwrap(), C::HomMDendriform));
}

#[test]
fn degenerate_form_is_rejected() {
    let pm = fixtures::pre_malcev_from_rb();
    let mut m = Matrix::zeros(8, 8);
    m.set(0, 1, int(1));
    m.set(1, 0, int(1));
    let b = BilinearForm::new(m).unwrap();
    let r = check_hessian(&pm, &b).unwrap();
    let nondeg: Vec<_> = r.violations_of("HESS-NONDEG").collect();
    assert_eq!(nondeg.len(), 1);
    assert_eq!(nondeg[0].residual, [int(6)]);
    assert!(matches!(hessian_dendrify(&pm, &b), Err(Error::HessianInvalid(_))));
}

#[test]
fn precondition_errors() {
    let s = fixtures::split_octonions();
    let (r1, r2) = fixtures::split_octonion_rb_pair();
    let weighted = OperatorWitness::rota_baxter(r1.map().clone(), int(1));
    assert!(matches!(induce(&s, &weighted, "alternative-to-prealt-rb"), Err(Error::NonZeroWeight(_))));
    let bogus = OperatorWitness::rota_baxter(Matrix::identity(8), int(0));
    assert!(matches!(induce(&s, &bogus, "alternative-to-prealt-rb"), Err(Error::OperatorInvalid(_))));
    assert!(matches!(induce(&s, &r1, "no-such-recipe"), Err(Error::UnknownRecipe(_))));

    // Every map is Rota-Baxter on the zero algebra; these two do not commute.
    let mut a = Matrix::zeros(8, 8);
    a.set(2, 0, int(1));
    let mut b = Matrix::zeros(8, 8);
    b.set(0, 5, int(1));
    let (wa, wb) = (OperatorWitness::rota_baxter(a, int(0)), OperatorWitness::rota_baxter(b, int(0)));
    assert!(!check_commuting(&wa, &wb).unwrap());
    let zero = fixtures::zero(C::HomAlternative, Matrix::identity(8));
    assert!(matches!(induce_pair(&zero, &wa, &wb, "alternative-pair-to-quadri"), Err(Error::NotCommuting)));
    assert!(induce_pair(&s, &r1, &r2, "alternative-pair-to-quadri").is_ok());
}

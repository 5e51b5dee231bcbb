//! Ready-made algebras used by tests, the acceptance suite and the CLI.

use crate::bundle::{Bundle, BundleOperator};
use crate::error::Result;
use crate::exact::rational::{frac, int};
use crate::exact::{Matrix, Rational, StructureTensor};
use crate::functors::commutator;
use crate::operators::{induce, induce_pair, BilinearForm, OperatorWitness};
use crate::reps::{adjoint_rep, regular_pre_malcev_rep};
use crate::structures::{HomStructure, ProductRole, StructureClass};

/// Zero products of the right arity for `class`, twist `alpha`.
pub fn zero(class: StructureClass, alpha: Matrix) -> HomStructure {
    let n = alpha.rows();
    let products = class.roles().iter().map(|r| (*r, StructureTensor::zero(n))).collect();
    HomStructure::new(products, alpha).expect("valid roles")
}

/// Two-dimensional Lie algebra `[e1, e2] = e2`, untwisted.
pub fn lie2() -> HomStructure {
    let t = StructureTensor::from_entries(2, [(0, 1, 1, int(1)), (1, 0, 1, int(-1))]).unwrap();
    HomStructure::single(ProductRole::Bracket, t, Matrix::identity(2)).unwrap()
}

/// The automorphism `e1 ↦ e1, e2 ↦ 2e2` of [`lie2`].
pub fn lie2_automorphism() -> Matrix {
    Matrix::diag(&[int(1), int(2)])
}

/// [`lie2`] Yau-twisted by [`lie2_automorphism`]: `[e1, e2] = 2e2`.
pub fn lie2_twisted() -> HomStructure {
    let t = StructureTensor::from_entries(2, [(0, 1, 1, int(2)), (1, 0, 1, int(-2))]).unwrap();
    HomStructure::single(ProductRole::Bracket, t, lie2_automorphism()).unwrap()
}

/// Weight-zero Rota-Baxter operator `e1 ↦ e2, e2 ↦ 0` on [`lie2`].
pub fn lie2_rota_baxter() -> OperatorWitness {
    let mut m = Matrix::zeros(2, 2);
    m.set(1, 0, int(1));
    OperatorWitness::rota_baxter(m, int(0))
}

/// Octonion multiplication triples: `e_i e_j = e_k` for each cyclic
/// rotation of a triple, `e_j e_i = -e_k`.
const FANO: [(usize, usize, usize); 7] = [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)];

/// The real division octonions, basis `1, e1 .. e7`, untwisted.
pub fn octonions() -> HomStructure {
    let mut entries = vec![(0, 0, 0, int(1))];
    for i in 1..8 {
        entries.push((0, i, i, int(1)));
        entries.push((i, 0, i, int(1)));
        entries.push((i, i, 0, int(-1)));
    }
    for (a, b, c) in FANO {
        for (i, j, k) in [(a, b, c), (b, c, a), (c, a, b)] {
            entries.push((i, j, k, int(1)));
            entries.push((j, i, k, int(-1)));
        }
    }
    let t = StructureTensor::from_entries(8, entries).unwrap();
    let basis = std::iter::once("1".to_string()).chain((1..8).map(|i| format!("e{i}"))).collect();
    HomStructure::single(ProductRole::Star, t, Matrix::identity(8)).unwrap().with_basis(basis).unwrap()
}

/// Commutator of the octonions restricted to the imaginary part (dim 7).
pub fn imaginary_octonion_malcev() -> HomStructure {
    let o = octonions();
    let b = o.tensor(ProductRole::Star).unwrap().commutator().restrict(1, 8);
    HomStructure::single(ProductRole::Bracket, b, Matrix::identity(7))
        .unwrap()
        .with_basis((1..8).map(|i| format!("e{i}")).collect())
        .unwrap()
}

fn cross(u: [Rational; 3], v: [Rational; 3]) -> [Rational; 3] {
    [&u[1] * &v[2] - &u[2] * &v[1], &u[2] * &v[0] - &u[0] * &v[2], &u[0] * &v[1] - &u[1] * &v[0]]
}

/// Split octonions as Zorn vector matrices `[[a, u], [v, b]]`.
///
/// Basis: `0 = a`, `1 = b`, `2..5 = u`, `5..8 = v`. The product is
/// `a a' + u·v'`, `b b' + v·u'`, `a u' + b' u − v × v'`, `a' v + b v' + u × u'`.
pub fn split_octonions() -> HomStructure {
    let unpack = |i: usize| {
        let mut x: [Rational; 8] = std::array::from_fn(|_| int(0));
        x[i] = int(1);
        let u = [x[2].clone(), x[3].clone(), x[4].clone()];
        let v = [x[5].clone(), x[6].clone(), x[7].clone()];
        (x[0].clone(), x[1].clone(), u, v)
    };
    let dot = |u: &[Rational; 3], v: &[Rational; 3]| -> Rational { u.iter().zip(v).map(|(p, q)| p * q).sum() };
    let mut entries = Vec::new();
    for i in 0..8 {
        for j in 0..8 {
            let (a, b, u, v) = unpack(i);
            let (a2, b2, u2, v2) = unpack(j);
            let mut out: Vec<Rational> = vec![&a * &a2 + dot(&u, &v2), &b * &b2 + dot(&v, &u2)];
            let vv = cross(v.clone(), v2.clone());
            let uu = cross(u.clone(), u2.clone());
            for k in 0..3 {
                out.push(&a * &u2[k] + &b2 * &u[k] - &vv[k]);
            }
            for k in 0..3 {
                out.push(&a2 * &v[k] + &b * &v2[k] + &uu[k]);
            }
            for (k, q) in out.into_iter().enumerate() {
                entries.push((i, j, k, q));
            }
        }
    }
    let t = StructureTensor::from_entries(8, entries).unwrap();
    let basis = ["a", "b", "u1", "u2", "u3", "v1", "v2", "v3"].map(String::from).to_vec();
    HomStructure::single(ProductRole::Star, t, Matrix::identity(8)).unwrap().with_basis(basis).unwrap()
}

/// Diagonal automorphism of [`split_octonions`].
pub fn split_octonion_automorphism() -> Matrix {
    Matrix::diag(&[int(1), int(1), int(1), int(2), frac(1, 2), int(1), frac(1, 2), int(2)])
}

/// [`split_octonions`] Yau-twisted by [`split_octonion_automorphism`].
pub fn split_octonions_twisted() -> HomStructure {
    let alpha = split_octonion_automorphism();
    let s = split_octonions();
    let t = s.tensor(ProductRole::Star).unwrap().push(&alpha).unwrap();
    HomStructure::single(ProductRole::Star, t, alpha).unwrap().with_basis(s.basis().to_vec()).unwrap()
}

fn unit_map(pairs: &[(usize, usize)]) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    for &(to, from) in pairs {
        m.set(to, from, int(1));
    }
    m
}

/// Commuting weight-zero Rota-Baxter pair on the split octonions (and on
/// the commutator algebra), commuting with the automorphism as well.
pub fn split_octonion_rb_pair() -> (OperatorWitness, OperatorWitness) {
    // R1: a -> u1, v1 -> b;  R2: u1 -> b, a -> v1
    let r1 = unit_map(&[(2, 0), (1, 5)]);
    let r2 = unit_map(&[(1, 2), (5, 0)]);
    (OperatorWitness::rota_baxter(r1, int(0)), OperatorWitness::rota_baxter(r2, int(0)))
}

/// Commutator algebra of [`split_octonions`] (a Malcev algebra).
pub fn split_octonion_malcev() -> HomStructure {
    commutator(&split_octonions(), ProductRole::Star).unwrap()
}

/// Pre-Malcev structure `x·y = [ℛ₁x, y]` on [`split_octonion_malcev`].
pub fn pre_malcev_from_rb() -> HomStructure {
    let (r1, _) = split_octonion_rb_pair();
    induce(&split_octonion_malcev(), &r1, "malcev-to-premalcev-rb").unwrap()
}

/// Quadri-algebra induced on [`split_octonions`] by the commuting pair.
pub fn quadri_from_rb_pair() -> HomStructure {
    let (r1, r2) = split_octonion_rb_pair();
    induce_pair(&split_octonions(), &r1, &r2, "alternative-pair-to-quadri").unwrap()
}

/// Hessian form on [`pre_malcev_from_rb`], pairing `a` with `b`, `u1` with
/// `-v1`, `u2` with `v2` and `u3` with `v3`. It is invariant under
/// [`split_octonion_automorphism`] as well.
pub fn split_octonion_hessian_form() -> BilinearForm {
    let mut m = Matrix::zeros(8, 8);
    for (i, j, q) in [(0, 1, 1), (2, 5, -1), (3, 6, 1), (4, 7, 1)] {
        m.set(i, j, int(q));
        m.set(j, i, int(q));
    }
    BilinearForm::new(m).unwrap()
}

/// Four-dimensional M-dendriform table with parameters `λ1`, `a4`.
pub fn dendriform_table_4d(lambda1: &Rational, a4: &Rational) -> Result<HomStructure> {
    let right = StructureTensor::from_entries(4, [(0, 1, 2, lambda1.clone()), (1, 0, 2, -lambda1.clone())])?;
    let left = StructureTensor::from_entries(
        4,
        [(0, 0, 3, a4 / int(2)), (0, 1, 1, int(-1)), (0, 2, 2, int(1)), (0, 3, 3, int(-1))],
    )?;
    HomStructure::new(vec![(ProductRole::TriRight, right), (ProductRole::TriLeft, left)], Matrix::identity(4))
}

/// Five-dimensional M-dendriform table with parameters `a4`, `a5 ≠ 0`, `b`.
pub fn dendriform_table_5d(a4: &Rational, a5: &Rational, b: &Rational) -> Result<HomStructure> {
    let right = StructureTensor::from_entries(5, [(0, 3, 2, b.clone()), (3, 0, 2, -b.clone())])?;
    let left = StructureTensor::from_entries(
        5,
        [(0, 0, 1, -a4.clone()), (0, 1, 2, -a5.clone()), (0, 3, 1, int(1)), (0, 4, 2, -(b * a4) / a5)],
    )?;
    HomStructure::new(vec![(ProductRole::TriRight, right), (ProductRole::TriLeft, left)], Matrix::identity(5))
}

fn rb(w: OperatorWitness) -> BundleOperator {
    match w {
        OperatorWitness::RotaBaxter { map, weight } => BundleOperator::RotaBaxter { map, weight },
        OperatorWitness::OOperator { .. } => unreachable!("fixture operators are Rota-Baxter"),
    }
}

/// The checked-in bundle library, as `(file stem, bundle)` pairs.
pub fn library() -> Vec<(&'static str, Bundle)> {
    let zero_rb = || BundleOperator::RotaBaxter { map: Matrix::zeros(8, 8), weight: int(0) };
    let (r1, r2) = split_octonion_rb_pair();
    let mut out = Vec::new();

    let z = zero(StructureClass::HomMalcev, Matrix::diag(&[int(1), int(2), frac(1, 3)]));
    out.push(("zero", Bundle::new(z).with_class(StructureClass::HomMalcev)));

    let mut b = Bundle::new(lie2()).with_class(StructureClass::HomMalcev);
    b.reps.push(adjoint_rep(&lie2(), 0).unwrap());
    b.operators.push(rb(lie2_rota_baxter()));
    b.operators.push(BundleOperator::Map(lie2_automorphism()));
    out.push(("lie2", b));

    out.push(("lie2-twisted", Bundle::new(lie2_twisted()).with_class(StructureClass::HomMalcev)));

    let mut b = Bundle::new(octonions()).with_class(StructureClass::HomAlternative);
    b.operators.extend([zero_rb(), zero_rb()]);
    out.push(("octonions", b));

    out.push(("imaginary-octonions", Bundle::new(imaginary_octonion_malcev()).with_class(StructureClass::HomMalcev)));

    let mut b = Bundle::new(split_octonions()).with_class(StructureClass::HomAlternative);
    b.operators.extend([rb(r1.clone()), rb(r2.clone()), BundleOperator::Map(split_octonion_automorphism())]);
    out.push(("split-octonions", b));

    let mut b = Bundle::new(split_octonions_twisted()).with_class(StructureClass::HomAlternative);
    b.operators.extend([rb(r1.clone()), rb(r2.clone())]);
    out.push(("split-octonions-twisted", b));

    let pm = pre_malcev_from_rb();
    let mut b = Bundle::new(pm.clone()).with_class(StructureClass::HomPreMalcev);
    b.reps.push(regular_pre_malcev_rep(&pm, 0).unwrap());
    b.operators.push(rb(r2));
    b.forms.push(split_octonion_hessian_form());
    out.push(("pre-malcev", b));

    out.push(("quadri", Bundle::new(quadri_from_rb_pair()).with_class(StructureClass::HomAltQuadri)));

    out.push(("dendriform-4d", Bundle::new(dendriform_table_4d(&int(1), &int(2)).unwrap())));
    out.push((
        "dendriform-5d",
        Bundle::new(dendriform_table_5d(&int(2), &int(1), &int(1)).unwrap()).with_class(StructureClass::HomMDendriform),
    ));
    out
}

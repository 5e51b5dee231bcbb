//! Rota-Baxter and O-operators, their checks, and the structures they induce.
//!
//! An O-operator `T: V → A` is checked as a weight-zero Rota-Baxter
//! identity on the semidirect product `A ⋉ V`, with `T` placed as the
//! block `V → A`: for `a, b ∈ V`, `T(a)∘T(b) = T(T(a)∘b + a∘T(b))`
//! expands to exactly the displayed action sums of every class.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::rational::{int, zero};
use crate::exact::{Matrix, Rational, SparseVec, StructureTensor};
use crate::reps::{semidirect, ActionRole, RepKind, Representation};
use crate::structures::{check_morphism, CheckReport, HomStructure, ProductRole as R, StructureClass as C, Violation};
use crate::sweep::Sweep;

/// Which kind of operator a witness is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    RotaBaxter,
    OOperator,
}

/// A Rota-Baxter operator on `A`, or an O-operator `T: V → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorWitness {
    RotaBaxter { map: Matrix, weight: Rational },
    OOperator { map: Matrix, rep: Representation },
}

impl OperatorWitness {
    pub fn rota_baxter(map: Matrix, weight: Rational) -> Self {
        Self::RotaBaxter { map, weight }
    }

    /// `map` is `dim(A) × dim(V)`.
    pub fn o_operator(map: Matrix, rep: Representation) -> Result<Self> {
        if map.rows() != rep.base().dim() || map.cols() != rep.module_dim() {
            return Err(Error::DimensionMismatch(format!(
                "O-operator is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                rep.base().dim(),
                rep.module_dim()
            )));
        }
        Ok(Self::OOperator { map, rep })
    }

    pub fn kind(&self) -> OperatorKind {
        match self {
            Self::RotaBaxter { .. } => OperatorKind::RotaBaxter,
            Self::OOperator { .. } => OperatorKind::OOperator,
        }
    }

    pub fn map(&self) -> &Matrix {
        match self {
            Self::RotaBaxter { map, .. } | Self::OOperator { map, .. } => map,
        }
    }

    pub fn weight(&self) -> Option<&Rational> {
        match self {
            Self::RotaBaxter { weight, .. } => Some(weight),
            Self::OOperator { .. } => None,
        }
    }

    pub fn rep(&self) -> Option<&Representation> {
        match self {
            Self::OOperator { rep, .. } => Some(rep),
            Self::RotaBaxter { .. } => None,
        }
    }
}

/// Symmetric bilinear form for Hessian structures.
///
/// Construction only requires a square matrix; symmetry is reported by
/// [`check_hessian`] as `HESS-SYM` so that a bad form is diagnosed rather
/// than rejected without detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("bilinear form must be square".into()));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    /// `B(x, y) = xᵀ M y`.
    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> Rational {
        x.dot(&self.matrix.apply(y))
    }
}

fn same_structure(a: &HomStructure, b: &HomStructure) -> bool {
    a.twist() == b.twist() && a.products().eq(b.products())
}

/// Records `R(x)∘R(y) − R(R(x)∘y + x∘R(y) + λ x∘y)` over `sweep`.
fn rb_identity(
    report: &mut CheckReport,
    id: &str,
    sw: &Sweep,
    t: &StructureTensor,
    map: &Matrix,
    weight: &Rational,
    window: (usize, usize),
) {
    let [x, y] = sw.vars_array();
    let (rx, ry) = (x.apply(map), y.apply(map));
    let xy = x.mul(t, &y);
    let mut inner = rx.mul(t, &y).add(&x.mul(t, &ry));
    if *weight != zero() {
        inner = inner.add(&xy.scale(weight));
    }
    let res = rx.mul(t, &ry).sub(&inner.apply(map));
    report.record(id, sw.tuple_count(), sw.violations(id, &res, window));
}

/// Records columns where `f ∘ g ≠ g' ∘ f`, as single-index tuples.
fn matrix_identity(report: &mut CheckReport, id: &str, lhs: &Matrix, rhs: &Matrix) {
    let d = lhs.sub(rhs).expect("same shape");
    let found = (0..d.cols())
        .filter_map(|j| {
            let c = d.column(j);
            (!c.is_zero()).then(|| Violation { identity: id.into(), tuple: vec![j], residual: c.to_dense(d.rows()) })
        })
        .collect();
    report.record(id, d.cols(), found);
}

fn role_suffix(role: R, single: bool, prefix: &str) -> String {
    if single {
        prefix.to_string()
    } else {
        format!("{prefix}:{role}")
    }
}

/// Checks a Rota-Baxter operator (on every stored product, plus `ℛα = αℛ`)
/// or an O-operator (against the representation, plus `αT = Tβ`).
pub fn check_operator(s: &HomStructure, w: &OperatorWitness) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = CheckReport::new("operator", s.natural_class());
    match w {
        OperatorWitness::RotaBaxter { map, weight } => {
            let n = s.dim();
            if map.rows() != n || map.cols() != n {
                return Err(Error::DimensionMismatch(format!("operator must be {n}x{n}")));
            }
            let sw = Sweep::uniform(n, 2);
            for (role, t) in s.products() {
                rb_identity(&mut report, &format!("RB:{role}"), &sw, t, map, weight, (0, n));
            }
            let alpha = s.twist();
            matrix_identity(&mut report, "RB-ALPHA", &map.mul(alpha)?, &alpha.mul(map)?);
        }
        OperatorWitness::OOperator { map, rep } => {
            if !same_structure(rep.base(), s) {
                return Err(Error::RoleMismatch("representation is over a different structure".into()));
            }
            let (n, m) = (s.dim(), rep.module_dim());
            let sd = semidirect(s, rep)?;
            let mut big = Matrix::zeros(n + m, n + m);
            for i in 0..n {
                for a in 0..m {
                    big.set(i, n + a, map.get(i, a).clone());
                }
            }
            let sw = Sweep::new(n + m, &[(n, m), (n, m)]);
            let single = sd.roles().len() == 1;
            for (role, t) in sd.products() {
                let id = role_suffix(role, single, "OOP");
                rb_identity(&mut report, &id, &sw, t, &big, &zero(), (0, n));
            }
            matrix_identity(&mut report, "OOP-ALPHA", &s.twist().mul(map)?, &map.mul(rep.twist())?);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// True iff `ℛ₁ℛ₂ = ℛ₂ℛ₁`.
pub fn check_commuting(r1: &OperatorWitness, r2: &OperatorWitness) -> Result<bool> {
    let (a, b) = (r1.map(), r2.map());
    if !a.is_square() || a.rows() != b.rows() || !b.is_square() {
        return Err(Error::DimensionMismatch("operators must be square of equal size".into()));
    }
    Ok(a.mul(b)? == b.mul(a)?)
}

/// Every single-operator recipe label accepted by [`induce`].
pub const RECIPES: [&str; 9] = [
    "malcev-to-premalcev-oop",
    "malcev-to-premalcev-rb",
    "premalcev-to-mdendriform-oop",
    "premalcev-to-mdendriform-rb",
    "premalcev-compatible-dendriform",
    "alternative-to-prealt-oop",
    "alternative-to-prealt-rb",
    "prealt-to-quadri-oop",
    "prealt-to-quadri-rb",
];

/// Every two-operator recipe label accepted by [`induce_pair`].
pub const PAIR_RECIPES: [&str; 2] = ["malcev-pair-to-mdendriform", "alternative-pair-to-quadri"];

fn require_valid(s: &HomStructure, w: &OperatorWitness) -> Result<()> {
    let report = check_operator(s, w)?;
    if !report.pass {
        return Err(Error::OperatorInvalid(Box::new(report)));
    }
    Ok(())
}

fn rb_map<'a>(w: &'a OperatorWitness, recipe: &str) -> Result<&'a Matrix> {
    match w {
        OperatorWitness::RotaBaxter { map, weight } => {
            if *weight != zero() {
                return Err(Error::NonZeroWeight(crate::exact::rational::to_canonical(weight)));
            }
            Ok(map)
        }
        OperatorWitness::OOperator { .. } => Err(Error::RoleMismatch(format!("{recipe} needs a Rota-Baxter operator"))),
    }
}

fn oop_parts<'a>(w: &'a OperatorWitness, recipe: &str, kind: RepKind) -> Result<(&'a Matrix, &'a Representation)> {
    match w {
        OperatorWitness::OOperator { map, rep } if rep.kind()? == kind => Ok((map, rep)),
        _ => Err(Error::RoleMismatch(format!("{recipe} needs an O-operator for a {kind:?} representation"))),
    }
}

/// Products on `V` read off the semidirect product: for each requested
/// `(role, source role, T on left?)`, `a∘b = S(Ta, b)` or `S(a, Tb)`.
fn carrier_products(
    s: &HomStructure,
    map: &Matrix,
    rep: &Representation,
    wanted: &[(R, R, bool)],
) -> Result<Vec<(R, StructureTensor)>> {
    let (n, m) = (s.dim(), rep.module_dim());
    let sd = semidirect(s, rep)?;
    let mut big = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for a in 0..m {
            big.set(i, n + a, map.get(i, a).clone());
        }
    }
    let id = Matrix::identity(n + m);
    wanted
        .iter()
        .map(|&(role, src, left)| {
            let t = sd.tensor(src)?;
            let c = if left { t.compose_args(&big, &id)? } else { t.compose_args(&id, &big)? };
            Ok((role, c.restrict(n, n + m)))
        })
        .collect()
}

fn finish(
    products: Vec<(R, StructureTensor)>,
    twist: Matrix,
    basis: Option<Vec<String>>,
    label: &str,
) -> Result<HomStructure> {
    let mut out = HomStructure::new(products, twist)?;
    if let Some(b) = basis {
        out = out.with_basis(b)?;
    }
    Ok(out.with_provenance(label))
}

fn require_roles(s: &HomStructure, roles: &[R], recipe: &str) -> Result<()> {
    if s.roles() != roles {
        return Err(Error::RoleMismatch(format!(
            "{recipe} needs roles {}, structure has {}",
            crate::structures::names(roles),
            crate::structures::names(&s.roles())
        )));
    }
    Ok(())
}

/// Builds the structure a verified operator induces, following `recipe`.
pub fn induce(s: &HomStructure, w: &OperatorWitness, recipe: &str) -> Result<HomStructure> {
    if !RECIPES.contains(&recipe) {
        return Err(Error::UnknownRecipe(recipe.to_string()));
    }
    let basis = Some(s.basis().to_vec());
    let module_basis = |rep: &Representation| Some((1..=rep.module_dim()).map(|i| format!("v{i}")).collect());
    let alpha = s.twist().clone();
    let out = match recipe {
        "malcev-to-premalcev-rb"
        | "premalcev-to-mdendriform-rb"
        | "alternative-to-prealt-rb"
        | "prealt-to-quadri-rb" => {
            let r = rb_map(w, recipe)?;
            let base = match recipe {
                "malcev-to-premalcev-rb" => &[R::Bracket][..],
                "premalcev-to-mdendriform-rb" => &[R::Dot][..],
                "alternative-to-prealt-rb" => &[R::Star][..],
                _ => &[R::Prec, R::Succ][..],
            };
            require_roles(s, base, recipe)?;
            require_valid(s, w)?;
            let products = match recipe {
                "malcev-to-premalcev-rb" => vec![(R::Dot, s.tensor(R::Bracket)?.compose_left(r)?)],
                "premalcev-to-mdendriform-rb" => {
                    let d = s.tensor(R::Dot)?;
                    vec![(R::TriRight, d.compose_right(r)?), (R::TriLeft, d.compose_left(r)?)]
                }
                "alternative-to-prealt-rb" => {
                    let p = s.tensor(R::Star)?;
                    vec![(R::Prec, p.compose_right(r)?), (R::Succ, p.compose_left(r)?)]
                }
                _ => {
                    let (p, q) = (s.tensor(R::Prec)?, s.tensor(R::Succ)?);
                    vec![
                        (R::NW, p.compose_right(r)?),
                        (R::SW, p.compose_left(r)?),
                        (R::NE, q.compose_right(r)?),
                        (R::SE, q.compose_left(r)?),
                    ]
                }
            };
            finish(products, alpha, basis, recipe)?
        }
        "malcev-to-premalcev-oop" => {
            let (t, rep) = oop_parts(w, recipe, RepKind::Malcev)?;
            require_valid(s, w)?;
            let products = carrier_products(s, t, rep, &[(R::Dot, R::Bracket, true)])?;
            finish(products, rep.twist().clone(), module_basis(rep), recipe)?
        }
        "premalcev-to-mdendriform-oop" => {
            let (t, rep) = oop_parts(w, recipe, RepKind::PreMalcev)?;
            require_valid(s, w)?;
            let products = carrier_products(s, t, rep, &[(R::TriRight, R::Dot, false), (R::TriLeft, R::Dot, true)])?;
            finish(products, rep.twist().clone(), module_basis(rep), recipe)?
        }
        "alternative-to-prealt-oop" => {
            let (t, rep) = oop_parts(w, recipe, RepKind::Alternative)?;
            require_valid(s, w)?;
            let products = carrier_products(s, t, rep, &[(R::Prec, R::Star, false), (R::Succ, R::Star, true)])?;
            finish(products, rep.twist().clone(), module_basis(rep), recipe)?
        }
        "prealt-to-quadri-oop" => {
            let (t, rep) = oop_parts(w, recipe, RepKind::PreAlternative)?;
            require_valid(s, w)?;
            let products = carrier_products(
                s,
                t,
                rep,
                &[(R::NW, R::Prec, false), (R::SW, R::Prec, true), (R::NE, R::Succ, false), (R::SE, R::Succ, true)],
            )?;
            finish(products, rep.twist().clone(), module_basis(rep), recipe)?
        }
        "premalcev-compatible-dendriform" => {
            let (t, rep) = oop_parts(w, recipe, RepKind::PreMalcev)?;
            require_valid(s, w)?;
            let t_inv = t.inverse().map_err(|_| Error::SingularMatrix("O-operator is not invertible".into()))?;
            let (ell, arr) = (rep.action(ActionRole::Ell)?, rep.action(ActionRole::Arr)?);
            let n = s.dim();
            // x▶y = T(r(y)T⁻¹x), x◀y = T(ℓ(x)T⁻¹y)
            let right = StructureTensor::from_fn(n, |i, j| t.apply(&arr[j].apply(&t_inv.column(i))));
            let left = StructureTensor::from_fn(n, |i, j| t.apply(&ell[i].apply(&t_inv.column(j))));
            finish(vec![(R::TriRight, right), (R::TriLeft, left)], alpha, basis, recipe)?
        }
        _ => unreachable!(),
    };
    Ok(out)
}

/// Builds the structure induced by a commuting pair of Rota-Baxter operators.
pub fn induce_pair(s: &HomStructure, r1: &OperatorWitness, r2: &OperatorWitness, recipe: &str) -> Result<HomStructure> {
    if !PAIR_RECIPES.contains(&recipe) {
        return Err(Error::UnknownRecipe(recipe.to_string()));
    }
    let (a, b) = (rb_map(r1, recipe)?, rb_map(r2, recipe)?);
    let base = if recipe == "malcev-pair-to-mdendriform" { R::Bracket } else { R::Star };
    require_roles(s, &[base], recipe)?;
    require_valid(s, r1)?;
    require_valid(s, r2)?;
    if !check_commuting(r1, r2)? {
        return Err(Error::NotCommuting);
    }
    let ab = a.mul(b)?;
    let t = s.tensor(base)?;
    let products = if base == R::Bracket {
        vec![(R::TriRight, t.compose_args(a, b)?), (R::TriLeft, t.compose_left(&ab)?)]
    } else {
        vec![
            (R::NW, t.compose_right(&ab)?),
            (R::SW, t.compose_args(b, a)?),
            (R::NE, t.compose_args(a, b)?),
            (R::SE, t.compose_left(&ab)?),
        ]
    };
    finish(products, s.twist().clone(), Some(s.basis().to_vec()), recipe)
}

/// Checks symmetry, nondegeneracy, `B(αx, αy) = B(x, y)` and the cocycle
/// `B(x·y, αz) − B(αx, y·z) = B(y·x, αz) − B(αy, x·z)`.
pub fn check_hessian(s: &HomStructure, b: &BilinearForm) -> Result<CheckReport> {
    let start = Instant::now();
    let n = s.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch(format!("form is {}x{0}, structure has dimension {n}", b.dim())));
    }
    let d = s.tensor(R::Dot)?;
    let alpha = s.twist();
    alpha.inverse().map_err(|_| Error::SingularMatrix("Hessian structures need an invertible twist".into()))?;
    let bm = b.matrix();
    let mut report = CheckReport::new("hessian", C::HomPreMalcev);

    let mut found = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let r = bm.get(i, j) - bm.get(j, i);
            if r != zero() {
                found.push(Violation { identity: "HESS-SYM".into(), tuple: vec![i, j], residual: vec![r] });
            }
        }
    }
    report.record("HESS-SYM", n * n, found);

    let found = if bm.rank() < n {
        vec![Violation {
            identity: "HESS-NONDEG".into(),
            tuple: vec![],
            residual: vec![int(n as i64 - bm.rank() as i64)],
        }]
    } else {
        vec![]
    };
    report.record("HESS-NONDEG", 1, found);

    let inv = alpha.transpose().mul(bm)?.mul(alpha)?.sub(bm)?;
    let mut found = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if *inv.get(i, j) != zero() {
                found.push(Violation {
                    identity: "HESS-INV".into(),
                    tuple: vec![i, j],
                    residual: vec![inv.get(i, j).clone()],
                });
            }
        }
    }
    report.record("HESS-INV", n * n, found);

    // B(u, αz) = u·(Bα e_z) and B(αx, v) = v·(Bᵀα e_x)
    let b_alpha: Vec<SparseVec> = (0..n).map(|z| bm.mul(alpha).unwrap().column(z)).collect();
    let alpha_b: Vec<SparseVec> = (0..n).map(|x| bm.transpose().apply(&alpha.column(x))).collect();
    let mut found = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let r = d.basis_product(x, y).dot(&b_alpha[z])
                    - d.basis_product(y, z).dot(&alpha_b[x])
                    - d.basis_product(y, x).dot(&b_alpha[z])
                    + d.basis_product(x, z).dot(&alpha_b[y]);
                if r != zero() {
                    found.push(Violation { identity: "HESS-COCYCLE".into(), tuple: vec![x, y, z], residual: vec![r] });
                }
            }
        }
    }
    report.record("HESS-COCYCLE", n * n * n, found);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// M-dendriform structure of a Hessian pre-Malcev algebra, defined by
/// `B(x▶y, αz) = B(αx, z·y)` and `B(x◀y, αz) = −B(αy, [x, z])`.
pub fn hessian_dendrify(s: &HomStructure, b: &BilinearForm) -> Result<HomStructure> {
    let report = check_hessian(s, b)?;
    if !report.pass {
        return Err(Error::HessianInvalid(Box::new(report)));
    }
    let n = s.dim();
    let d = s.tensor(R::Dot)?;
    let br = d.commutator();
    let alpha = s.twist();
    let bm = b.matrix();
    // B(u, αz) = (αᵀB u)_z, so u = (αᵀB)⁻¹ rhs
    let solve = alpha.transpose().mul(bm)?.inverse()?;
    // B(αx, v) = (αx)ᵀ B v
    let row = |x: usize| bm.transpose().apply(&alpha.column(x));
    let right = StructureTensor::from_fn(n, |i, j| {
        let ax = row(i);
        let rhs = SparseVec::from_pairs((0..n).map(|z| (z, ax.dot(d.basis_product(z, j)))));
        solve.apply(&rhs)
    });
    let left = StructureTensor::from_fn(n, |i, j| {
        let ay = row(j);
        let rhs = SparseVec::from_pairs((0..n).map(|z| (z, -ay.dot(br.basis_product(i, z)))));
        solve.apply(&rhs)
    });
    finish(vec![(R::TriRight, right), (R::TriLeft, left)], alpha.clone(), Some(s.basis().to_vec()), "hessian")
}

/// True iff `T∘φ_V = φ_A∘T` and every action satisfies
/// `act(φ_A x)∘φ_V = φ_V∘act(x)`.
pub fn check_oop_endomorphism(w: &OperatorWitness, phi_a: &Matrix, phi_v: &Matrix) -> Result<bool> {
    let OperatorWitness::OOperator { map, rep } = w else {
        return Err(Error::RoleMismatch("endomorphisms are defined for O-operators".into()));
    };
    let (n, m) = (rep.base().dim(), rep.module_dim());
    if phi_a.rows() != n || phi_a.cols() != n || phi_v.rows() != m || phi_v.cols() != m {
        return Err(Error::DimensionMismatch(format!("expected {n}x{n} and {m}x{m} maps")));
    }
    if map.mul(phi_v)? != phi_a.mul(map)? {
        return Ok(false);
    }
    for (role, slices) in rep.actions() {
        for (i, s) in slices.iter().enumerate() {
            let lhs = rep.action_of(role, &phi_a.column(i))?.mul(phi_v)?;
            if lhs != phi_v.mul(s)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Composes a pre-Malcev structure, its representation and `T` with an
/// endomorphism pair: `x·'y = φ_A(x·y)`, `ℓ' = φ_V∘ℓ`, `r' = φ_V∘r`.
pub fn twist_oop_setup(
    s: &HomStructure,
    w: &OperatorWitness,
    phi_a: &Matrix,
    phi_v: &Matrix,
) -> Result<(HomStructure, Representation, OperatorWitness)> {
    let (map, rep) =
        oop_parts(w, "twist_oop_setup", RepKind::PreMalcev).map_err(|e| Error::EndomorphismInvalid(e.to_string()))?;
    if !same_structure(rep.base(), s) {
        return Err(Error::EndomorphismInvalid("representation is over a different structure".into()));
    }
    if !check_oop_endomorphism(w, phi_a, phi_v).map_err(|e| Error::EndomorphismInvalid(e.to_string()))? {
        return Err(Error::EndomorphismInvalid("pair does not intertwine T and the actions".into()));
    }
    let weak = check_morphism(phi_a, s, s, true)?;
    if !weak.pass {
        return Err(Error::EndomorphismInvalid("φ_A is not a self-morphism of the product".into()));
    }
    let base = HomStructure::single(R::Dot, s.tensor(R::Dot)?.push(phi_a)?, phi_a.clone())?
        .with_basis(s.basis().to_vec())?
        .with_provenance("endomorphism-twist");
    let compose =
        |role: ActionRole| -> Result<Vec<Matrix>> { rep.action(role)?.iter().map(|x| phi_v.mul(x)).collect() };
    let actions = vec![(ActionRole::Ell, compose(ActionRole::Ell)?), (ActionRole::Arr, compose(ActionRole::Arr)?)];
    let new_rep = Representation::new(base.clone(), actions, phi_v.clone())?;
    let new_w = OperatorWitness::o_operator(map.clone(), new_rep.clone())?;
    Ok((base, new_rep, new_w))
}

/// Identity of `V = A` as an O-operator for the bimodule `(L◀, R▶)` of the
/// horizontal product of an M-dendriform structure.
pub fn dendriform_identity_operator(s: &HomStructure) -> Result<(HomStructure, OperatorWitness)> {
    let right = s.tensor(R::TriRight)?;
    let left = s.tensor(R::TriLeft)?;
    let dot = right.add(left)?;
    let base = HomStructure::single(R::Dot, dot, s.twist().clone())?.with_basis(s.basis().to_vec())?;
    let rep = crate::reps::bimodule_from_products(&base, left, right)?;
    let w = OperatorWitness::o_operator(Matrix::identity(s.dim()), rep)?;
    Ok((base, w))
}

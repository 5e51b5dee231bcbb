//! Representations, their checkers, duals and semidirect products.
//!
//! Representation identities are evaluated in the combined space `A ⊕ V`:
//! an action `ρ(x)v` becomes the bilinear product of the embedded tensor
//! `(i, n+b) ↦ Σ_a ρ(e_i)[a][b] e_{n+a}`, and the twist is `α ⊕ β`. The
//! sweep kernel then handles actions exactly like products.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exact::{Matrix, SparseVec, StructureTensor};
use crate::structures::identities::{self as id, PreAltActions};
use crate::structures::{check, CheckOptions, CheckReport, HomStructure, ProductRole as R, StructureClass as C};
use crate::sweep::{Sweep, Table};

/// Name of an action map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActionRole {
    Rho,
    Ell,
    Arr,
    LPrec,
    RPrec,
    LSucc,
    RSucc,
}

impl ActionRole {
    pub const ALL: [ActionRole; 7] =
        [Self::Rho, Self::Ell, Self::Arr, Self::LPrec, Self::RPrec, Self::LSucc, Self::RSucc];

    pub fn name(self) -> &'static str {
        match self {
            Self::Rho => "rho",
            Self::Ell => "ell",
            Self::Arr => "arr",
            Self::LPrec => "l-prec",
            Self::RPrec => "r-prec",
            Self::LSucc => "l-succ",
            Self::RSucc => "r-succ",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::Parse(format!("unknown action role {s:?}")))
    }
}

impl fmt::Display for ActionRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which kind of representation, determined by the actions and base roles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// `ρ` over a bracket.
    Malcev,
    /// `(ℓ, r)` over a pre-Malcev product.
    PreMalcev,
    /// `(𝔩, 𝔯)` bimodule over an alternative product.
    Alternative,
    /// `(L≺, R≺, L≻, R≻)` over a pre-alternative pair.
    PreAlternative,
}

impl RepKind {
    pub fn class(self) -> C {
        match self {
            Self::Malcev => C::HomMalcev,
            Self::PreMalcev => C::HomPreMalcev,
            Self::Alternative => C::HomAlternative,
            Self::PreAlternative => C::HomPreAlternative,
        }
    }
}

/// A representation `(V, actions, β)` of a Hom-structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    base: HomStructure,
    module_dim: usize,
    actions: BTreeMap<ActionRole, Vec<Matrix>>,
    twist: Matrix,
}

use ActionRole as Act;

impl Representation {
    /// `actions[role][i]` is the `module_dim × module_dim` matrix of the
    /// action of `e_i`.
    pub fn new(base: HomStructure, actions: Vec<(ActionRole, Vec<Matrix>)>, twist: Matrix) -> Result<Self> {
        let m = twist.rows();
        if !twist.is_square() {
            return Err(Error::DimensionMismatch("module twist is not square".into()));
        }
        let n = base.dim();
        let mut map = BTreeMap::new();
        for (role, mats) in actions {
            if mats.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{role} has {} slices, base dimension is {n}",
                    mats.len()
                )));
            }
            if mats.iter().any(|x| x.rows() != m || x.cols() != m) {
                return Err(Error::DimensionMismatch(format!("{role} slices must be {m}x{m}")));
            }
            if map.insert(role, mats).is_some() {
                return Err(Error::RoleMismatch(format!("{role} given twice")));
            }
        }
        let rep = Self { base, module_dim: m, actions: map, twist };
        rep.kind()?;
        Ok(rep)
    }

    pub fn kind(&self) -> Result<RepKind> {
        let roles: Vec<ActionRole> = self.actions.keys().copied().collect();
        let base = self.base.roles();
        match (roles.as_slice(), base.as_slice()) {
            ([Act::Rho], [R::Bracket]) => Ok(RepKind::Malcev),
            ([Act::Ell, Act::Arr], [R::Dot]) => Ok(RepKind::PreMalcev),
            ([Act::Ell, Act::Arr], [R::Star]) => Ok(RepKind::Alternative),
            ([Act::LPrec, Act::RPrec, Act::LSucc, Act::RSucc], [R::Prec, R::Succ]) => Ok(RepKind::PreAlternative),
            _ => Err(Error::RoleMismatch(format!(
                "actions {:?} do not fit base roles {}",
                roles.iter().map(|r| r.name()).collect::<Vec<_>>(),
                crate::structures::names(&base)
            ))),
        }
    }

    pub fn base(&self) -> &HomStructure {
        &self.base
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn roles(&self) -> Vec<ActionRole> {
        self.actions.keys().copied().collect()
    }

    pub fn action(&self, role: ActionRole) -> Result<&[Matrix]> {
        self.actions
            .get(&role)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::RoleMismatch(format!("action {role} not present")))
    }

    pub fn actions(&self) -> impl Iterator<Item = (ActionRole, &[Matrix])> {
        self.actions.iter().map(|(r, v)| (*r, v.as_slice()))
    }

    /// Matrix of the action of an arbitrary vector `x ∈ A`.
    pub fn action_of(&self, role: ActionRole, x: &SparseVec) -> Result<Matrix> {
        let slices = self.action(role)?;
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, q) in x.iter() {
            out = out.add(&slices[i].scale(q))?;
        }
        Ok(out)
    }

    /// Same base and twist, actions replaced.
    pub fn with_actions(&self, actions: Vec<(ActionRole, Vec<Matrix>)>) -> Result<Self> {
        Self::new(self.base.clone(), actions, self.twist.clone())
    }

    /// Action placed in `A ⊕ V` as a bilinear product.
    pub(crate) fn embedded(&self, role: ActionRole) -> Result<StructureTensor> {
        let n = self.base.dim();
        let m = self.module_dim;
        let slices = self.action(role)?;
        let mut entries = Vec::new();
        for (i, s) in slices.iter().enumerate() {
            for a in 0..m {
                for b in 0..m {
                    let q = s.get(a, b);
                    if *q != crate::exact::rational::zero() {
                        entries.push((i, n + b, n + a, q.clone()));
                    }
                }
            }
        }
        StructureTensor::from_entries(n + m, entries)
    }

    /// `(V, ℓ − r, β)` as a representation of the sub-adjacent bracket.
    pub fn difference_rep(&self) -> Result<Representation> {
        if self.kind()? != RepKind::PreMalcev {
            return Err(Error::RoleMismatch("difference of actions needs a pre-Malcev rep".into()));
        }
        let l = self.action(Act::Ell)?;
        let r = self.action(Act::Arr)?;
        let rho = l.iter().zip(r).map(|(a, b)| a.sub(b)).collect::<Result<Vec<_>>>()?;
        let base = HomStructure::single(R::Bracket, self.base.tensor(R::Dot)?.commutator(), self.base.twist().clone())?;
        Representation::new(base, vec![(Act::Rho, rho)], self.twist.clone())
    }
}

/// Sweeps and twists of the combined space for one representation.
struct Combined {
    n: usize,
    m: usize,
    twist: Matrix,
    twist2: Matrix,
}

impl Combined {
    fn new(rep: &Representation) -> Result<Self> {
        let twist = rep.base.twist().direct_sum(&rep.twist);
        let twist2 = twist.mul(&twist)?;
        Ok(Self { n: rep.base.dim(), m: rep.module_dim, twist, twist2 })
    }

    fn space(&self) -> usize {
        self.n + self.m
    }

    /// `a` variables in `A` followed by one in `V`.
    fn sweep(&self, a_vars: usize) -> Sweep {
        let mut d = vec![(0, self.n); a_vars];
        d.push((self.n, self.m));
        Sweep::new(self.space(), &d)
    }

    fn run(&self, report: &mut CheckReport, name: &str, sw: &Sweep, t: &Table) {
        report.record(name, sw.tuple_count(), sw.violations(name, t, (self.n, self.m)));
    }
}

/// Checks a representation against the axioms of `class`.
pub fn check_rep(rep: &Representation, class: C) -> Result<CheckReport> {
    check_rep_with(rep, class, CheckOptions::default())
}

/// [`check_rep`] with options; `equivariance` adds `PA-EQ` for
/// pre-alternative representations.
pub fn check_rep_with(rep: &Representation, class: C, opts: CheckOptions) -> Result<CheckReport> {
    let start = Instant::now();
    let kind = rep.kind()?;
    if kind.class() != class {
        return Err(Error::RoleMismatch(format!("{:?} representation cannot be checked as {class}", kind)));
    }
    let mut report = CheckReport::new("representation", class);
    let cs = Combined::new(rep)?;
    let big = cs.space();
    let a = |t: &Table| t.apply(&cs.twist);
    let a2 = |t: &Table| t.apply(&cs.twist2);
    match kind {
        RepKind::Malcev => {
            let bt = rep.base.tensor(R::Bracket)?.embed(big, 0);
            let rt = rep.embedded(Act::Rho)?;
            malcev_rep_identities(&mut report, &cs, &bt, &rt, "REP-EQ", "REP-M");
        }
        RepKind::PreMalcev => {
            let dt = rep.base.tensor(R::Dot)?.embed(big, 0);
            let bt = dt.commutator();
            let lt = rep.embedded(Act::Ell)?;
            let rt = rep.embedded(Act::Arr)?;
            let d = |u: &Table, v: &Table| u.mul(&dt, v);
            let b = |u: &Table, v: &Table| u.mul(&bt, v);
            let l = |u: &Table, v: &Table| u.mul(&lt, v);
            let r = |u: &Table, v: &Table| u.mul(&rt, v);
            let sw2 = cs.sweep(1);
            let [x, v] = sw2.vars_array();
            cs.run(&mut report, "REP1", &sw2, &a(&r(&x, &v)).sub(&r(&a(&x), &a(&v))));
            let sw4 = cs.sweep(3);
            let vars = sw4.vars_array();
            for (k, t) in id::pre_malcev_rep(&d, &b, &l, &r, &a, &a2, &vars).iter().enumerate() {
                cs.run(&mut report, &format!("REP{}", k + 2), &sw4, t);
            }
            malcev_rep_identities(&mut report, &cs, &bt, &lt, "ELL-EQ", "ELL-M");
        }
        RepKind::Alternative => {
            let s = semidirect(&rep.base, rep)?;
            let mut inner = check(&s, C::HomAlternative, CheckOptions::default())?;
            report.identities = inner.identities;
            report.tuples_checked = inner.tuples_checked;
            report.pass = inner.pass;
            report.violations = std::mem::take(&mut inner.violations);
        }
        RepKind::PreAlternative => {
            let pt = rep.base.tensor(R::Prec)?.embed(big, 0);
            let st = rep.base.tensor(R::Succ)?.embed(big, 0);
            let [lpt, rpt, lst, rst] = [Act::LPrec, Act::RPrec, Act::LSucc, Act::RSucc].map(|r| rep.embedded(r));
            let (lpt, rpt, lst, rst) = (lpt?, rpt?, lst?, rst?);
            let p = |u: &Table, v: &Table| u.mul(&pt, v);
            let s = |u: &Table, v: &Table| u.mul(&st, v);
            let lp = |u: &Table, v: &Table| u.mul(&lpt, v);
            let rp = |u: &Table, v: &Table| u.mul(&rpt, v);
            let ls = |u: &Table, v: &Table| u.mul(&lst, v);
            let rs = |u: &Table, v: &Table| u.mul(&rst, v);
            let k = PreAltActions { prec: &p, succ: &s, lp: &lp, rp: &rp, ls: &ls, rs: &rs, twist: &a };
            let sw3 = cs.sweep(2);
            let [x, y, v] = sw3.vars_array();
            for (i, t) in id::pre_alt_bimodule(&k, &x, &y, &v).iter().enumerate() {
                cs.run(&mut report, &format!("PA{}", i + 1), &sw3, t);
            }
            if opts.equivariance {
                let sw2 = cs.sweep(1);
                let [x, v] = sw2.vars_array();
                for t in id::pre_alt_equivariance(&k, &x, &v) {
                    cs.run(&mut report, "PA-EQ", &sw2, &t);
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn malcev_rep_identities(
    report: &mut CheckReport,
    cs: &Combined,
    bt: &StructureTensor,
    rt: &StructureTensor,
    eq_id: &str,
    main_id: &str,
) {
    let a = |t: &Table| t.apply(&cs.twist);
    let a2 = |t: &Table| t.apply(&cs.twist2);
    let b = |u: &Table, v: &Table| u.mul(bt, v);
    let rho = |u: &Table, v: &Table| u.mul(rt, v);
    let sw2 = cs.sweep(1);
    let [x, v] = sw2.vars_array();
    cs.run(report, eq_id, &sw2, &id::equivariance(&rho, &a, &x, &v));
    let sw4 = cs.sweep(3);
    let vars = sw4.vars_array();
    cs.run(report, main_id, &sw4, &id::malcev_rep(&b, &rho, &a, &a2, &vars));
}

/// Left multiplication matrices `y ↦ f(e_i) ∘ y`.
fn left_mult(t: &StructureTensor, f: &Matrix) -> Vec<Matrix> {
    let n = t.dim();
    (0..n)
        .map(|i| {
            let x = f.column(i);
            let cols: Vec<SparseVec> = (0..n).map(|j| t.eval(&x, &SparseVec::unit(j)).unwrap()).collect();
            Matrix::from_columns(n, &cols).unwrap()
        })
        .collect()
}

/// Right multiplication matrices `y ↦ y ∘ f(e_i)`.
fn right_mult(t: &StructureTensor, f: &Matrix) -> Vec<Matrix> {
    let n = t.dim();
    (0..n)
        .map(|i| {
            let x = f.column(i);
            let cols: Vec<SparseVec> = (0..n).map(|j| t.eval(&SparseVec::unit(j), &x).unwrap()).collect();
            Matrix::from_columns(n, &cols).unwrap()
        })
        .collect()
}

/// The `α^s`-adjoint representation `ρ(x)y = [α^s(x), y]` on `V = A`, `β = α`.
pub fn adjoint_rep(s: &HomStructure, power: u32) -> Result<Representation> {
    let bt = s.tensor(R::Bracket)?;
    let f = s.twist().pow(power);
    Representation::new(s.clone(), vec![(Act::Rho, left_mult(bt, &f))], s.twist().clone())
}

/// Regular representation `L^s_x y = α^s(x)·y`, `R^s_x y = y·α^s(x)`, `β = α`.
/// For `s > 0` the structure must be multiplicative.
pub fn regular_pre_malcev_rep(s: &HomStructure, power: u32) -> Result<Representation> {
    let dt = s.tensor(R::Dot)?;
    if power > 0 {
        let opts = CheckOptions { multiplicativity: true, ..Default::default() };
        let mult = check(s, C::HomPreMalcev, opts)?;
        if mult.violations_of("MULT").next().is_some() {
            return Err(Error::NotMultiplicative(format!("{} failing pairs", mult.violations_of("MULT").count())));
        }
    }
    let f = s.twist().pow(power);
    Representation::new(
        s.clone(),
        vec![(Act::Ell, left_mult(dt, &f)), (Act::Arr, right_mult(dt, &f))],
        s.twist().clone(),
    )
}

/// Regular bimodule `(L, R)` of an alternative structure.
pub fn regular_alternative_rep(s: &HomStructure) -> Result<Representation> {
    let pt = s.tensor(R::Star)?;
    let id = Matrix::identity(s.dim());
    Representation::new(
        s.clone(),
        vec![(Act::Ell, left_mult(pt, &id)), (Act::Arr, right_mult(pt, &id))],
        s.twist().clone(),
    )
}

/// Regular representation `(L≺, R≺, L≻, R≻)` of a pre-alternative structure.
pub fn regular_pre_alt_rep(s: &HomStructure) -> Result<Representation> {
    let (pt, st) = (s.tensor(R::Prec)?, s.tensor(R::Succ)?);
    let id = Matrix::identity(s.dim());
    Representation::new(
        s.clone(),
        vec![
            (Act::LPrec, left_mult(pt, &id)),
            (Act::RPrec, right_mult(pt, &id)),
            (Act::LSucc, left_mult(st, &id)),
            (Act::RSucc, right_mult(st, &id)),
        ],
        s.twist().clone(),
    )
}

/// Representation `(ℓ, r)` of `s` with given left and right actions built
/// from products on `A` itself: `ℓ(x)y = x ∘_l y`, `r(x)y = y ∘_r x`.
pub fn bimodule_from_products(
    s: &HomStructure,
    left: &StructureTensor,
    right: &StructureTensor,
) -> Result<Representation> {
    let id = Matrix::identity(s.dim());
    Representation::new(
        s.clone(),
        vec![(Act::Ell, left_mult(left, &id)), (Act::Arr, right_mult(right, &id))],
        s.twist().clone(),
    )
}

/// Which reading of the dual action formula to use.
///
/// `Forward`: `ρ⋆(x) = −(β⁻² ρ(α x))ᵀ`.
/// `Inverse`: `ρ⋆(x) = −(ρ(α⁻¹ x) β⁻²)ᵀ`.
/// They coincide whenever `ρ(αx)β = βρ(x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DualVariant {
    #[default]
    Forward,
    Inverse,
}

fn dual_slices(rep: &Representation, role: ActionRole, variant: DualVariant) -> Result<Vec<Matrix>> {
    let alpha = rep.base.twist();
    let beta_inv = rep.twist.inverse().map_err(|_| Error::SingularMatrix("β is not invertible".into()))?;
    let alpha_inv = alpha.inverse().map_err(|_| Error::SingularMatrix("α is not invertible".into()))?;
    let bi2 = beta_inv.mul(&beta_inv)?;
    let minus_one = crate::exact::rational::int(-1);
    (0..rep.base.dim())
        .map(|i| {
            let m = match variant {
                DualVariant::Forward => bi2.mul(&rep.action_of(role, &alpha.column(i))?)?,
                DualVariant::Inverse => rep.action_of(role, &alpha_inv.column(i))?.mul(&bi2)?,
            };
            Ok(m.transpose().scale(&minus_one))
        })
        .collect()
}

/// Dual of a Malcev representation, twist `(β⁻¹)ᵀ`.
pub fn dual_malcev_rep(rep: &Representation) -> Result<Representation> {
    dual_malcev_rep_variant(rep, DualVariant::Forward)
}

pub fn dual_malcev_rep_variant(rep: &Representation, variant: DualVariant) -> Result<Representation> {
    if rep.kind()? != RepKind::Malcev {
        return Err(Error::RoleMismatch("dual_malcev_rep needs a Malcev representation".into()));
    }
    let rho = dual_slices(rep, Act::Rho, variant)?;
    let twist = rep.twist.inverse()?.transpose();
    Representation::new(rep.base.clone(), vec![(Act::Rho, rho)], twist)
}

/// Dual of a pre-Malcev representation: `(ℓ⋆ − r⋆, −r⋆, (β⁻¹)ᵀ)`.
pub fn dual_pre_malcev_rep(rep: &Representation) -> Result<Representation> {
    dual_pre_malcev_rep_variant(rep, DualVariant::Forward)
}

pub fn dual_pre_malcev_rep_variant(rep: &Representation, variant: DualVariant) -> Result<Representation> {
    if rep.kind()? != RepKind::PreMalcev {
        return Err(Error::RoleMismatch("dual_pre_malcev_rep needs a pre-Malcev representation".into()));
    }
    let ls = dual_slices(rep, Act::Ell, variant)?;
    let rs = dual_slices(rep, Act::Arr, variant)?;
    let minus_one = crate::exact::rational::int(-1);
    let ell = ls.iter().zip(&rs).map(|(l, r)| l.sub(r)).collect::<Result<Vec<_>>>()?;
    let arr = rs.iter().map(|r| r.scale(&minus_one)).collect();
    let twist = rep.twist.inverse()?.transpose();
    Representation::new(rep.base.clone(), vec![(Act::Ell, ell), (Act::Arr, arr)], twist)
}

/// Semidirect product `A ⋉ V` with twist `α ⊕ β`.
pub fn semidirect(s: &HomStructure, rep: &Representation) -> Result<HomStructure> {
    if rep.base.roles() != s.roles() || rep.base.dim() != s.dim() {
        return Err(Error::RoleMismatch("representation belongs to a different structure".into()));
    }
    let kind = rep.kind()?;
    let n = s.dim();
    let big = n + rep.module_dim;
    // x acting on b from the left (left) and on a from the right (right)
    let block = |base: &StructureTensor, left: &[Matrix], right: &[Matrix], right_sign: i64| {
        let mut t = base.embed(big, 0);
        let sign = crate::exact::rational::int(right_sign);
        let mut entries = t.entries();
        for i in 0..n {
            for b in 0..rep.module_dim {
                for a in 0..rep.module_dim {
                    let q = left[i].get(a, b);
                    if *q != crate::exact::rational::zero() {
                        entries.push((i, n + b, n + a, q.clone()));
                    }
                    let q = right[i].get(a, b);
                    if *q != crate::exact::rational::zero() {
                        entries.push((n + b, i, n + a, q * &sign));
                    }
                }
            }
        }
        t = StructureTensor::from_entries(big, entries)?;
        Ok::<_, Error>(t)
    };
    let products = match kind {
        RepKind::Malcev => {
            let rho = rep.action(Act::Rho)?;
            vec![(R::Bracket, block(s.tensor(R::Bracket)?, rho, rho, -1)?)]
        }
        RepKind::PreMalcev | RepKind::Alternative => {
            let role = if kind == RepKind::PreMalcev { R::Dot } else { R::Star };
            vec![(role, block(s.tensor(role)?, rep.action(Act::Ell)?, rep.action(Act::Arr)?, 1)?)]
        }
        RepKind::PreAlternative => vec![
            (R::Prec, block(s.tensor(R::Prec)?, rep.action(Act::LPrec)?, rep.action(Act::RPrec)?, 1)?),
            (R::Succ, block(s.tensor(R::Succ)?, rep.action(Act::LSucc)?, rep.action(Act::RSucc)?, 1)?),
        ],
    };
    let twist = s.twist().direct_sum(&rep.twist);
    let mut basis = s.basis().to_vec();
    basis.extend((1..=rep.module_dim).map(|i| format!("v{i}")));
    Ok(HomStructure::new(products, twist)?.with_basis(basis)?.with_provenance("semidirect"))
}

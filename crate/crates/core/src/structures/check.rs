use std::time::Instant;

use super::identities::{self as id, Dend, PreAltActions, Quadri};
use super::{CheckOptions, CheckReport, HomStructure, ProductRole as R, StructureClass as C};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, SparseVec, StructureTensor};
use crate::sweep::{Sweep, Table};

/// Runs every defining identity of `class` over all basis tuples.
pub fn check(s: &HomStructure, class: C, opts: CheckOptions) -> Result<CheckReport> {
    let start = Instant::now();
    if s.roles() != class.roles() {
        return Err(Error::RoleMismatch(format!(
            "{class} needs roles {}, structure has {}",
            super::names(class.roles()),
            super::names(&s.roles())
        )));
    }
    let n = s.dim();
    let alpha = s.twist().clone();
    let alpha2 = alpha.mul(&alpha)?;
    let a = |t: &Table| t.apply(&alpha);
    let a2 = |t: &Table| t.apply(&alpha2);
    let mut report = CheckReport::new("structure", class);
    let run = |report: &mut CheckReport, name: &str, sw: &Sweep, t: &Table| {
        report.record(name, sw.tuple_count(), sw.violations(name, t, (0, n)));
    };
    let sw2 = Sweep::uniform(n, 2);
    let sw3 = Sweep::uniform(n, 3);
    let sw4 = Sweep::uniform(n, 4);

    match class {
        C::HomLie => {
            let bt = s.tensor(R::Bracket)?;
            let b = |u: &Table, v: &Table| u.mul(bt, v);
            let [x, y] = sw2.vars_array();
            run(&mut report, "SKEW", &sw2, &id::skew(&b, &x, &y));
            let [x, y, z] = sw3.vars_array();
            run(&mut report, "JACOBI", &sw3, &id::jacobian(&b, &a, &x, &y, &z));
        }
        C::HomMalcev | C::HomMalcevAdmissible => {
            let bt =
                if class == C::HomMalcev { s.tensor(R::Bracket)?.clone() } else { s.tensor(R::Star)?.commutator() };
            let b = |u: &Table, v: &Table| u.mul(&bt, v);
            let [x, y] = sw2.vars_array();
            run(&mut report, "SKEW", &sw2, &id::skew(&b, &x, &y));
            let v = sw4.vars_array();
            run(&mut report, "HM-EXP", &sw4, &id::hm_expanded(&b, &a, &a2, &v));
            run(&mut report, "HM-JAC", &sw4, &id::hm_jacobian_polarized(&b, &a, &a2, &v));
        }
        C::HomPreMalcev => {
            let dt = s.tensor(R::Dot)?;
            let bt = dt.commutator();
            let d = |u: &Table, v: &Table| u.mul(dt, v);
            let b = |u: &Table, v: &Table| u.mul(&bt, v);
            let v = sw4.vars_array();
            run(&mut report, "HPM", &sw4, &id::hpm(&d, &b, &a, &a2, &v));
        }
        C::HomMDendriform => {
            let (rt, lt) = (s.tensor(R::TriRight)?, s.tensor(R::TriLeft)?);
            let (dt, mt) = (s.product(R::Dot)?, s.product(R::Diamond)?);
            let bt = dt.commutator();
            let r = |u: &Table, v: &Table| u.mul(rt, v);
            let l = |u: &Table, v: &Table| u.mul(lt, v);
            let d = |u: &Table, v: &Table| u.mul(&dt, v);
            let dm = |u: &Table, v: &Table| u.mul(&mt, v);
            let b = |u: &Table, v: &Table| u.mul(&bt, v);
            let p = Dend { right: &r, left: &l, dot: &d, diamond: &dm, bracket: &b };
            let v = sw4.vars_array();
            for (k, t) in id::dendriform(&p, &a, &a2, &v).iter().enumerate() {
                run(&mut report, &format!("MD{}", k + 1), &sw4, t);
            }
        }
        C::HomAssociative => {
            let pt = s.tensor(R::Star)?;
            let p = |u: &Table, v: &Table| u.mul(pt, v);
            let [x, y, z] = sw3.vars_array();
            run(&mut report, "ASSOC", &sw3, &id::associator(&p, &a, &x, &y, &z));
        }
        C::HomAlternative => {
            let pt = s.tensor(R::Star)?;
            let p = |u: &Table, v: &Table| u.mul(pt, v);
            let [l, r] = id::alternative(&p, &a, &sw3.vars_array());
            run(&mut report, "ALT-L", &sw3, &l);
            run(&mut report, "ALT-R", &sw3, &r);
        }
        C::HomPreAlternative => {
            let (pt, st) = (s.tensor(R::Prec)?, s.tensor(R::Succ)?);
            let p = |u: &Table, v: &Table| u.mul(pt, v);
            let su = |u: &Table, v: &Table| u.mul(st, v);
            let rp = |u: &Table, w: &Table| w.mul(pt, u);
            let rs = |u: &Table, w: &Table| w.mul(st, u);
            let k = PreAltActions { prec: &p, succ: &su, lp: &p, rp: &rp, ls: &su, rs: &rs, twist: &a };
            let [x, y, v] = sw3.vars_array();
            for (i, t) in id::pre_alt_bimodule(&k, &x, &y, &v).iter().enumerate() {
                run(&mut report, &format!("PA{}", i + 1), &sw3, t);
            }
            if opts.equivariance {
                let [x, v] = sw2.vars_array();
                for t in id::pre_alt_equivariance(&k, &x, &v) {
                    run(&mut report, "PA-EQ", &sw2, &t);
                }
            }
        }
        C::HomAltQuadri => {
            let q = QuadriTensors::new(s)?;
            let fs = q.closures();
            let qc = fs.as_quadri();
            let v = sw3.vars_array();
            for (i, t) in id::quadri_axioms(&qc, &a, &v).iter().enumerate() {
                run(&mut report, &format!("QA{}", i + 1), &sw3, t);
            }
        }
    }

    if opts.multiplicativity {
        let [x, y] = sw2.vars_array();
        for role in class.roles() {
            let t = s.tensor(*role)?;
            let res = a(&x.mul(t, &y)).sub(&a(&x).mul(t, &a(&y)));
            run(&mut report, "MULT", &sw2, &res);
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Generator and derived tensors of a quadri structure.
pub(crate) struct QuadriTensors {
    nw: StructureTensor,
    sw: StructureTensor,
    ne: StructureTensor,
    se: StructureTensor,
    succ: StructureTensor,
    prec: StructureTensor,
    vee: StructureTensor,
    wedge: StructureTensor,
    star: StructureTensor,
}

pub(crate) struct QuadriClosures<'a> {
    f: Vec<Box<dyn Fn(&Table, &Table) -> Table + Sync + 'a>>,
}

impl QuadriTensors {
    pub fn new(s: &HomStructure) -> Result<Self> {
        Ok(Self {
            nw: s.tensor(R::NW)?.clone(),
            sw: s.tensor(R::SW)?.clone(),
            ne: s.tensor(R::NE)?.clone(),
            se: s.tensor(R::SE)?.clone(),
            succ: s.product(R::Succ)?,
            prec: s.product(R::Prec)?,
            vee: s.product(R::Vee)?,
            wedge: s.product(R::Wedge)?,
            star: s.product(R::Star)?,
        })
    }

    pub fn closures(&self) -> QuadriClosures<'_> {
        let ts = [&self.nw, &self.sw, &self.ne, &self.se, &self.succ, &self.prec, &self.vee, &self.wedge, &self.star];
        QuadriClosures {
            f: ts
                .into_iter()
                .map(|t| {
                    Box::new(move |u: &Table, v: &Table| u.mul(t, v)) as Box<dyn Fn(&Table, &Table) -> Table + Sync>
                })
                .collect(),
        }
    }
}

impl<'a> QuadriClosures<'a> {
    pub fn as_quadri(&self) -> Quadri<'_> {
        let f = &self.f;
        Quadri {
            nw: &*f[0],
            sw: &*f[1],
            ne: &*f[2],
            se: &*f[3],
            succ: &*f[4],
            prec: &*f[5],
            vee: &*f[6],
            wedge: &*f[7],
            star: &*f[8],
        }
    }
}

fn vector_operand(s: &HomStructure, v: &[Rational]) -> Result<SparseVec> {
    if v.len() != s.dim() {
        return Err(Error::DimensionMismatch(format!("vector of length {} for dimension {}", v.len(), s.dim())));
    }
    Ok(SparseVec::from_dense(v))
}

/// The Hom-Jacobian `J_α(x, y, z)` of concrete vectors.
pub fn hom_jacobian(s: &HomStructure, x: &[Rational], y: &[Rational], z: &[Rational]) -> Result<Vec<Rational>> {
    let bt = s.tensor(R::Bracket)?;
    let sw = Sweep::uniform(s.dim(), 0);
    let [x, y, z] = [x, y, z].map(|v| vector_operand(s, v).map(|v| sw.constant(v)));
    let b = |u: &Table, v: &Table| u.mul(bt, v);
    let a = |t: &Table| t.apply(s.twist());
    let j = id::jacobian(&b, &a, &x?, &y?, &z?);
    Ok(j.scalar().to_dense(s.dim()))
}

/// Which α-associator to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssociatorKind {
    /// `(x∗y)∗αz − αx∗(y∗z)` for the total product `∗`.
    Plain,
    /// One of the nine quadri associators: `r, l, m, n, w, s, e, ne, sw`.
    Quadri(&'static str),
}

impl AssociatorKind {
    pub fn parse(s: &str) -> Result<Self> {
        if s == "plain" {
            return Ok(Self::Plain);
        }
        let s = if s == "ℓ" { "l" } else { s };
        id::QUADRI_KINDS
            .iter()
            .find(|k| **k == s)
            .map(|k| Self::Quadri(k))
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// An α-associator of concrete vectors. `kind` is `plain` or one of the
/// quadri kinds (`r`, `l`/`ℓ`, `m`, `n`, `w`, `s`, `e`, `ne`, `sw`).
pub fn alpha_associator(
    s: &HomStructure,
    kind: &str,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Rational>> {
    let kind = AssociatorKind::parse(kind)?;
    let sw = Sweep::uniform(s.dim(), 0);
    let [x, y, z] = [x, y, z].map(|v| vector_operand(s, v).map(|v| sw.constant(v)));
    let (x, y, z) = (x?, y?, z?);
    let a = |t: &Table| t.apply(s.twist());
    let out = match kind {
        AssociatorKind::Plain => {
            let pt = s.product(R::Star)?;
            let p = |u: &Table, v: &Table| u.mul(&pt, v);
            id::associator(&p, &a, &x, &y, &z)
        }
        AssociatorKind::Quadri(k) => {
            let q = QuadriTensors::new(s)?;
            let fs = q.closures();
            id::quadri_associator(&fs.as_quadri(), &a, k, &x, &y, &z)
        }
    };
    Ok(out.scalar().to_dense(s.dim()))
}

/// Ten-term Hom-pre-Malcev expansion minus the five-term form, on concrete
/// vectors. Zero for every product, which is what the tests assert.
pub fn hpm_expanded_residual(s: &HomStructure, v: [&[Rational]; 4]) -> Result<Vec<Rational>> {
    let dt = s.tensor(R::Dot)?;
    let bt = dt.commutator();
    let sw = Sweep::uniform(s.dim(), 0);
    let mut vs = Vec::new();
    for x in v {
        vs.push(sw.constant(vector_operand(s, x)?));
    }
    let vs: [Table; 4] = vs.try_into().expect("four operands");
    let alpha2 = s.twist().mul(s.twist())?;
    let a = |t: &Table| t.apply(s.twist());
    let a2 = |t: &Table| t.apply(&alpha2);
    let d = |u: &Table, w: &Table| u.mul(dt, w);
    let b = |u: &Table, w: &Table| u.mul(&bt, w);
    let five = id::hpm(&d, &b, &a, &a2, &vs);
    let ten = id::hpm_ten(&d, &a, &a2, &vs);
    Ok(ten.sub(&five).scalar().to_dense(s.dim()))
}

/// Checks `f(x∘y) = f(x)∘'f(y)` for every role, plus `f∘α₁ = α₂∘f` unless `weak`.
pub fn check_morphism(f: &Matrix, source: &HomStructure, target: &HomStructure, weak: bool) -> Result<CheckReport> {
    let start = Instant::now();
    let (n, m) = (source.dim(), target.dim());
    if f.rows() != m || f.cols() != n {
        return Err(Error::DimensionMismatch(format!("map is {}x{}, expected {m}x{n}", f.rows(), f.cols())));
    }
    if source.roles() != target.roles() {
        return Err(Error::RoleMismatch(format!(
            "source roles {} vs target roles {}",
            super::names(&source.roles()),
            super::names(&target.roles())
        )));
    }
    let big = n + m;
    // f as a map of A ⊕ B sending the A block into the B block
    let mut fe = Matrix::zeros(big, big);
    for i in 0..m {
        for j in 0..n {
            fe.set(n + i, j, f.get(i, j).clone());
        }
    }
    let sw = Sweep::new(big, &[(0, n), (0, n)]);
    let [x, y] = sw.vars_array();
    let mut report = CheckReport::new("morphism", source.natural_class());
    for ((role, ts), (_, tt)) in source.products().zip(target.products()) {
        let ps = ts.embed(big, 0);
        let pt = tt.embed(big, n);
        let res = x.mul(&ps, &y).apply(&fe).sub(&x.apply(&fe).mul(&pt, &y.apply(&fe)));
        let name = format!("MORPH:{role}");
        report.record(&name, sw.tuple_count(), sw.violations(&name, &res, (n, m)));
    }
    if !weak {
        let sw1 = Sweep::new(big, &[(0, n)]);
        let tw = source.twist().direct_sum(target.twist());
        let x = sw1.var(0);
        let res = x.apply(&tw).apply(&fe).sub(&x.apply(&fe).apply(&tw));
        report.record("MORPH-TWIST", sw1.tuple_count(), sw1.violations("MORPH-TWIST", &res, (n, m)));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

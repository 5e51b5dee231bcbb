//! Identity residuals as sweep tables.
//!
//! Every function returns the left side minus the right side, so a passing
//! identity is a table of zero vectors. Products and actions come in as
//! closures; representation identities run in the combined space `A ⊕ V`
//! where an action `ρ(u)w` is itself a bilinear product.

use crate::sweep::{sum, Table};

pub(crate) type Bin<'a> = &'a (dyn Fn(&Table, &Table) -> Table + Sync);
pub(crate) type Un<'a> = &'a (dyn Fn(&Table) -> Table + Sync);

/// `J(x,y,z) = [[x,y],αz] + [[y,z],αx] + [[z,x],αy]`.
pub(crate) fn jacobian(b: Bin, a: Un, x: &Table, y: &Table, z: &Table) -> Table {
    sum(&[b(&b(x, y), &a(z)), b(&b(y, z), &a(x)), b(&b(z, x), &a(y))])
}

pub(crate) fn skew(b: Bin, x: &Table, y: &Table) -> Table {
    b(x, y).add(&b(y, x))
}

/// Expanded four-term Hom-Malcev identity in `(x, y, z, t)`.
pub(crate) fn hm_expanded(b: Bin, a: Un, a2: Un, v: &[Table; 4]) -> Table {
    let [x, y, z, t] = v;
    let lhs = b(&a(&b(x, z)), &a(&b(y, t)));
    let rhs = sum(&[
        b(&b(&b(x, y), &a(z)), &a2(t)),
        b(&b(&b(y, z), &a(t)), &a2(x)),
        b(&b(&b(z, t), &a(x)), &a2(y)),
        b(&b(&b(t, x), &a(y)), &a2(z)),
    ]);
    lhs.sub(&rhs)
}

/// Jacobian form `J(αx, αy, [x,z]) − [J(x,y,z), α²x]`, which is quadratic
/// in `x`; evaluated through its polarization `q(x,w) + q(w,x)` over
/// `(x, w, y, z)`.
pub(crate) fn hm_jacobian_polarized(b: Bin, a: Un, a2: Un, v: &[Table; 4]) -> Table {
    let [x, w, y, z] = v;
    let q = |x: &Table, w: &Table| jacobian(b, a, &a(x), &a(y), &b(w, z)).sub(&b(&jacobian(b, a, w, y, z), &a2(x)));
    q(x, w).add(&q(w, x))
}

/// Five-term Hom-pre-Malcev identity; `b` is the commutator of `d`.
pub(crate) fn hpm(d: Bin, b: Bin, a: Un, a2: Un, v: &[Table; 4]) -> Table {
    let [x, y, z, t] = v;
    sum(&[
        d(&a(&b(y, z)), &a(&d(x, t))),
        d(&b(&b(x, y), &a(z)), &a2(t)),
        d(&a2(y), &d(&b(x, z), &a(t))),
        d(&a2(x), &d(&a(y), &d(z, t))).neg(),
        d(&a2(z), &d(&a(x), &d(y, t))),
    ])
}

/// Ten-term expansion of the same identity, written with `·` only.
pub(crate) fn hpm_ten(d: Bin, a: Un, a2: Un, v: &[Table; 4]) -> Table {
    let [x, y, z, t] = v;
    let xt = a(&d(x, t));
    sum(&[
        d(&a(&d(y, z)), &xt),
        d(&a(&d(z, y)), &xt).neg(),
        d(&d(&d(x, y), &a(z)), &a2(t)),
        d(&d(&d(y, x), &a(z)), &a2(t)).neg(),
        d(&d(&a(z), &d(x, y)), &a2(t)).neg(),
        d(&d(&a(z), &d(y, x)), &a2(t)),
        d(&a2(y), &d(&d(x, z), &a(t))),
        d(&a2(y), &d(&d(z, x), &a(t))).neg(),
        d(&a2(x), &d(&a(y), &d(z, t))).neg(),
        d(&a2(z), &d(&a(x), &d(y, t))),
    ])
}

/// Derived products an M-dendriform pair needs.
pub(crate) struct Dend<'a> {
    pub right: Bin<'a>,
    pub left: Bin<'a>,
    pub dot: Bin<'a>,
    pub diamond: Bin<'a>,
    pub bracket: Bin<'a>,
}

/// MD1..MD4 in `(x, y, z, t)`.
pub(crate) fn dendriform(p: &Dend, a: Un, a2: Un, v: &[Table; 4]) -> [Table; 4] {
    let [x, y, z, t] = v;
    let (r, l, d, dm, b) = (p.right, p.left, p.dot, p.diamond, p.bracket);
    let md1 = sum(&[
        r(&dm(&a(z), &dm(y, x)), &a2(t)),
        r(&a2(x), &d(&a(y), &d(z, t))).neg(),
        l(&a2(z), &r(&a(x), &d(y, t))),
        l(&a(&b(y, z)), &a(&r(x, t))),
        l(&a2(y), &r(&dm(z, x), &a(t))).neg(),
    ]);
    let md2 = sum(&[
        l(&a2(z), &l(&a(x), &r(y, t))),
        r(&dm(&a(z), &dm(x, y)), &a2(t)).neg(),
        l(&a2(x), &r(&a(y), &d(z, t))).neg(),
        r(&a(&dm(z, y)), &a(&d(x, t))).neg(),
        r(&a2(y), &d(&b(x, z), &a(t))),
    ]);
    let md3 = sum(&[
        r(&a2(z), &d(&a(x), &d(y, t))),
        r(&dm(&b(x, y), &a(z)), &a2(t)),
        l(&a2(x), &l(&a(y), &r(z, t))).neg(),
        r(&a(&dm(y, z)), &a(&d(x, t))),
        l(&a2(y), &r(&dm(x, z), &a(t))),
    ]);
    let md4 = sum(&[
        l(&b(&b(x, y), &a(z)), &a2(t)),
        l(&a2(x), &l(&a(y), &l(z, t))).neg(),
        l(&a2(z), &l(&a(x), &l(y, t))),
        l(&a(&b(y, z)), &a(&l(x, t))),
        l(&a2(y), &l(&b(x, z), &a(t))),
    ]);
    [md1, md2, md3, md4]
}

/// `(x∘y)∘αz − αx∘(y∘z)`.
pub(crate) fn associator(p: Bin, a: Un, x: &Table, y: &Table, z: &Table) -> Table {
    p(&p(x, y), &a(z)).sub(&p(&a(x), &p(y, z)))
}

/// Left and right alternativity.
pub(crate) fn alternative(p: Bin, a: Un, v: &[Table; 3]) -> [Table; 2] {
    let [x, y, z] = v;
    let xyz = associator(p, a, x, y, z);
    [xyz.add(&associator(p, a, y, x, z)), xyz.add(&associator(p, a, x, z, y))]
}

/// The four actions of a pre-alternative representation plus the base
/// products. `lp(u, w)` is `L≺(u)w`, and so on.
pub(crate) struct PreAltActions<'a> {
    pub prec: Bin<'a>,
    pub succ: Bin<'a>,
    pub lp: Bin<'a>,
    pub rp: Bin<'a>,
    pub ls: Bin<'a>,
    pub rs: Bin<'a>,
    /// Twist on both `A` and `V` (α ⊕ β in the combined space).
    pub twist: Un<'a>,
}

/// PA1..PA10 in `(x, y, v)`: `x, y` in `A`, `v` in the module.
pub(crate) fn pre_alt_bimodule(k: &PreAltActions, x: &Table, y: &Table, v: &Table) -> Vec<Table> {
    let (p, s, lp, rp, ls, rs, a) = (k.prec, k.succ, k.lp, k.rp, k.ls, k.rs, k.twist);
    let st = |u: &Table, w: &Table| p(u, w).add(&s(u, w));
    let l = |u: &Table, w: &Table| lp(u, w).add(&ls(u, w));
    let r = |u: &Table, w: &Table| rp(u, w).add(&rs(u, w));
    let (ax, ay, bv) = (a(x), a(y), a(v));
    let sym = st(x, y).add(&st(y, x));
    vec![
        sum(&[ls(&sym, &bv), ls(&ax, &ls(y, v)).neg(), ls(&ay, &ls(x, v)).neg()]),
        sum(&[rs(&ay, &l(x, v).add(&r(x, v))), ls(&ax, &rs(y, v)).neg(), rs(&s(x, y), &bv).neg()]),
        sum(&[rp(&ay, &ls(x, v)), rp(&ay, &rp(x, v)), ls(&ax, &rp(y, v)).neg(), rp(&st(x, y), &bv).neg()]),
        sum(&[rp(&ay, &rs(x, v)), rp(&ay, &lp(x, v)), lp(&ax, &r(y, v)).neg(), rs(&p(x, y), &bv).neg()]),
        sum(&[lp(&p(y, x), &bv), lp(&s(x, y), &bv), lp(&ay, &l(x, v)).neg(), ls(&ax, &lp(y, v)).neg()]),
        sum(&[rp(&ax, &ls(y, v)), ls(&st(y, x), &bv), ls(&ay, &rp(x, v)).neg(), ls(&ay, &ls(x, v)).neg()]),
        sum(&[rp(&ax, &rs(y, v)), rs(&ay, &r(x, v)), rs(&p(y, x), &bv).neg(), rs(&s(x, y), &bv).neg()]),
        sum(&[lp(&s(y, x), &bv), rs(&ax, &l(y, v)), ls(&ay, &lp(x, v)).neg(), ls(&ay, &rs(x, v)).neg()]),
        sum(&[rp(&ax, &rp(y, v)), rp(&ay, &rp(x, v)), rp(&sym, &bv).neg()]),
        sum(&[rp(&ay, &lp(x, v)), lp(&p(x, y), &bv), lp(&ax, &r(y, v).add(&l(y, v))).neg()]),
    ]
}

/// Twist equivariance of the four actions, `β(act(x)v) − act(αx)(βv)`.
pub(crate) fn pre_alt_equivariance(k: &PreAltActions, x: &Table, v: &Table) -> Vec<Table> {
    let a = k.twist;
    [k.lp, k.rp, k.ls, k.rs].into_iter().map(|act| a(&act(x, v)).sub(&act(&a(x), &a(v)))).collect()
}

pub(crate) struct Quadri<'a> {
    pub nw: Bin<'a>,
    pub sw: Bin<'a>,
    pub ne: Bin<'a>,
    pub se: Bin<'a>,
    pub succ: Bin<'a>,
    pub prec: Bin<'a>,
    pub vee: Bin<'a>,
    pub wedge: Bin<'a>,
    pub star: Bin<'a>,
}

/// Associator kinds of a quadri structure, in a fixed order.
pub(crate) const QUADRI_KINDS: [&str; 9] = ["r", "l", "m", "n", "w", "s", "e", "ne", "sw"];

/// One of the nine α-associators.
pub(crate) fn quadri_associator(q: &Quadri, a: Un, kind: &str, x: &Table, y: &Table, z: &Table) -> Table {
    let f = |p1: Bin, p2: Bin, p3: Bin, p4: Bin| p1(&p2(x, y), &a(z)).sub(&p3(&a(x), &p4(y, z)));
    match kind {
        "r" => f(q.nw, q.nw, q.nw, q.star),
        "l" => f(q.se, q.star, q.se, q.se),
        "m" => f(q.nw, q.se, q.se, q.nw),
        "n" => f(q.nw, q.ne, q.ne, q.prec),
        "w" => f(q.nw, q.sw, q.sw, q.wedge),
        "s" => f(q.sw, q.succ, q.se, q.sw),
        "e" => f(q.ne, q.vee, q.se, q.ne),
        "ne" => f(q.ne, q.wedge, q.ne, q.succ),
        "sw" => f(q.sw, q.prec, q.sw, q.vee),
        _ => unreachable!("kind validated by caller"),
    }
}

/// QA1..QA9: pairs of associators, the second with permuted arguments.
pub(crate) fn quadri_axioms(q: &Quadri, a: Un, v: &[Table; 3]) -> Vec<Table> {
    let [x, y, z] = v;
    const AXIOMS: [(&str, &str, bool); 9] = [
        ("r", "m", true),
        ("r", "r", false),
        ("n", "w", true),
        ("n", "ne", false),
        ("ne", "e", true),
        ("w", "sw", false),
        ("sw", "s", true),
        ("m", "l", false),
        ("l", "l", true),
    ];
    AXIOMS
        .iter()
        .map(|&(k1, k2, swap_first)| {
            let first = quadri_associator(q, a, k1, x, y, z);
            let second =
                if swap_first { quadri_associator(q, a, k2, y, x, z) } else { quadri_associator(q, a, k2, x, z, y) };
            first.add(&second)
        })
        .collect()
}

/// Malcev representation identity in `(x, y, z, v)`.
pub(crate) fn malcev_rep(b: Bin, rho: Bin, a: Un, a2: Un, v4: &[Table; 4]) -> Table {
    let [x, y, z, v] = v4;
    sum(&[
        rho(&b(&b(x, y), &a(z)), &a2(v)),
        rho(&a2(x), &rho(&a(y), &rho(z, v))).neg(),
        rho(&a2(z), &rho(&a(x), &rho(y, v))),
        rho(&a2(y), &rho(&b(z, x), &a(v))).neg(),
        rho(&a(&b(y, z)), &rho(&a(x), &a(v))),
    ])
}

/// `ρ(αx)βv − β(ρ(x)v)`.
pub(crate) fn equivariance(rho: Bin, a: Un, x: &Table, v: &Table) -> Table {
    rho(&a(x), &a(v)).sub(&a(&rho(x, v)))
}

/// The three mixed pre-Malcev representation identities in `(x, y, z, v)`.
pub(crate) fn pre_malcev_rep(d: Bin, b: Bin, l: Bin, r: Bin, a: Un, a2: Un, v4: &[Table; 4]) -> [Table; 3] {
    let [x, y, z, v] = v4;
    let rho = |u: &Table, w: &Table| l(u, w).sub(&r(u, w));
    let (ax, ay, az, av, a2v) = (a(x), a(y), a(z), a(v), a2(v));
    let rep2 = sum(&[
        r(&a2(x), &rho(&ay, &rho(z, v))),
        r(&d(&az, &d(y, x)), &a2v).neg(),
        l(&a2(y), &r(&d(z, x), &av)),
        l(&a(&b(y, z)), &r(&ax, &av)).neg(),
        l(&a2(z), &r(&ax, &rho(y, v))).neg(),
    ]);
    let rep3 = sum(&[
        l(&a2(y), &l(&az, &r(x, v))),
        r(&a2(x), &rho(&ay, &rho(z, v))).neg(),
        l(&a2(z), &r(&d(y, x), &av)).neg(),
        r(&a(&d(z, x)), &rho(&ay, &av)).neg(),
        r(&d(&b(z, y), &ax), &a2v),
    ]);
    let rep4 = sum(&[
        r(&d(&ay, &d(z, x)), &a2v),
        r(&a2(x), &rho(&b(y, z), &av)),
        l(&a2(y), &l(&az, &r(x, v))).neg(),
        r(&a(&d(y, x)), &rho(&az, &av)),
        l(&a2(z), &r(&ax, &rho(y, v))),
    ]);
    [rep2, rep3, rep4]
}

//! Independent oracles shared by the integration tests.
//!
//! Everything here works on plain `i64` arrays and never calls into the
//! engine's identity code, so agreement between the two is meaningful.

#![allow(dead_code)]

use homalg_core::exact::rational::int;
use homalg_core::{Matrix, ProductRole, Rational, StructureTensor};

pub type Table = Vec<Vec<Vec<i64>>>;

fn quat_mul(p: [i64; 4], q: [i64; 4]) -> [i64; 4] {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn quat_conj(p: [i64; 4]) -> [i64; 4] {
    [p[0], -p[1], -p[2], -p[3]]
}

fn add4(p: [i64; 4], q: [i64; 4]) -> [i64; 4] {
    std::array::from_fn(|i| p[i] + q[i])
}

fn sub4(p: [i64; 4], q: [i64; 4]) -> [i64; 4] {
    std::array::from_fn(|i| p[i] - q[i])
}

/// Cayley-Dickson doubling of the quaternions:
/// `(a, b)(c, d) = (ac - d̄b, da + bc̄)`.
pub fn octonion_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    let a = [x[0], x[1], x[2], x[3]];
    let b = [x[4], x[5], x[6], x[7]];
    let c = [y[0], y[1], y[2], y[3]];
    let d = [y[4], y[5], y[6], y[7]];
    let lo = sub4(quat_mul(a, c), quat_mul(quat_conj(d), b));
    let hi = add4(quat_mul(d, a), quat_mul(b, quat_conj(c)));
    lo.into_iter().chain(hi).collect()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Multiplication table `t[i][j]` = coordinates of `e_i e_j`.
pub fn table_of(n: usize, mul: impl Fn(&[i64], &[i64]) -> Vec<i64>) -> Table {
    (0..n).map(|i| (0..n).map(|j| mul(&unit(n, i), &unit(n, j))).collect()).collect()
}

pub fn octonion_table() -> Table {
    table_of(8, octonion_mul)
}

/// Bilinear extension of a basis table.
pub fn mul(t: &Table, x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = t.len();
    let mut out = vec![0; n];
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            if y[j] == 0 {
                continue;
            }
            for k in 0..n {
                out[k] += x[i] * y[j] * t[i][j][k];
            }
        }
    }
    out
}

pub fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn associator(t: &Table, x: &[i64], y: &[i64], z: &[i64]) -> Vec<i64> {
    sub(&mul(t, &mul(t, x, y), z), &mul(t, x, &mul(t, y, z)))
}

/// Basis triples with a nonzero associator.
pub fn non_associative_triples(t: &Table) -> usize {
    let n = t.len();
    let mut count = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = associator(t, &unit(n, i), &unit(n, j), &unit(n, k));
                count += usize::from(a.iter().any(|q| *q != 0));
            }
        }
    }
    count
}

/// Linearized left and right alternativity on all basis triples.
pub fn is_alternative(t: &Table) -> bool {
    let n = t.len();
    let e = |i| unit(n, i);
    (0..n).all(|i| {
        (0..n).all(|j| {
            (0..n).all(|k| {
                let l = add(&associator(t, &e(i), &e(j), &e(k)), &associator(t, &e(j), &e(i), &e(k)));
                let r = add(&associator(t, &e(i), &e(j), &e(k)), &associator(t, &e(i), &e(k), &e(j)));
                l.iter().chain(&r).all(|q| *q == 0)
            })
        })
    })
}

/// `[x, y] = xy - yx` restricted to coordinates `lo..hi`.
pub fn commutator_table(t: &Table, lo: usize, hi: usize) -> Table {
    (lo..hi)
        .map(|i| {
            (lo..hi)
                .map(|j| {
                    let c = sub(&t[i][j], &t[j][i]);
                    assert!(c[..lo].iter().chain(&c[hi..]).all(|q| *q == 0), "not closed");
                    c[lo..hi].to_vec()
                })
                .collect()
        })
        .collect()
}

pub fn jacobian(t: &Table, x: &[i64], y: &[i64], z: &[i64]) -> Vec<i64> {
    let a = mul(t, &mul(t, x, y), z);
    let b = mul(t, &mul(t, y, z), x);
    let c = mul(t, &mul(t, z, x), y);
    add(&add(&a, &b), &c)
}

/// Malcev identity `[[x,y],[x,z]] = [[[x,y],z],x] + [[[y,z],x],x] + [[[z,x],x],y]`.
pub fn malcev_defect(t: &Table, x: &[i64], y: &[i64], z: &[i64]) -> Vec<i64> {
    let b = |u: &[i64], v: &[i64]| mul(t, u, v);
    let lhs = b(&b(x, y), &b(x, z));
    let r1 = b(&b(&b(x, y), z), x);
    let r2 = b(&b(&b(y, z), x), x);
    let r3 = b(&b(&b(z, x), x), y);
    sub(&lhs, &add(&add(&r1, &r2), &r3))
}

/// Small deterministic pseudo-random integer vectors (xorshift).
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn vector(&mut self, n: usize, bound: i64) -> Vec<i64> {
        (0..n).map(|_| (self.next() % (2 * bound as u64 + 1)) as i64 - bound).collect()
    }
}

pub fn tensor_of(t: &Table) -> StructureTensor {
    let n = t.len();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if t[i][j][k] != 0 {
                    entries.push((i, j, k, int(t[i][j][k])));
                }
            }
        }
    }
    StructureTensor::from_entries(n, entries).unwrap()
}

pub fn structure_of(t: &Table, role: ProductRole) -> homalg_core::HomStructure {
    homalg_core::HomStructure::single(role, tensor_of(t), Matrix::identity(t.len())).unwrap()
}

/// Dense `i64` matrix with `m[i][j]` the coefficient of `e_i` in `M(e_j)`.
pub type IntMatrix = Vec<Vec<i64>>;

pub fn apply(m: &IntMatrix, x: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

pub fn matrix_of(m: &IntMatrix) -> Matrix {
    Matrix::from_rows(m.iter().map(|r| r.iter().map(|q| int(*q)).collect()).collect()).unwrap()
}

/// Weight-`λ` Rota-Baxter identity on every basis pair.
pub fn is_rota_baxter(t: &Table, r: &IntMatrix, weight: i64) -> bool {
    let n = t.len();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (x, y) = (unit(n, i), unit(n, j));
            let (rx, ry) = (apply(r, &x), apply(r, &y));
            let lhs = mul(t, &rx, &ry);
            let inner = add(
                &add(&mul(t, &rx, &y), &mul(t, &x, &ry)),
                &mul(t, &x, &y).iter().map(|q| q * weight).collect::<Vec<_>>(),
            );
            lhs == apply(r, &inner)
        })
    })
}

fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn commute(a: &IntMatrix, b: &IntMatrix) -> bool {
    matmul(a, b) == matmul(b, a)
}

/// Weight-zero Rota-Baxter operators with one or two entries in `{-1, 1}`.
pub fn sparse_rota_baxter_search(t: &Table) -> Vec<IntMatrix> {
    let n = t.len();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut found = Vec::new();
    let mut try_matrix = |entries: &[((usize, usize), i64)]| {
        let mut m = vec![vec![0; n]; n];
        for &((i, j), q) in entries {
            m[i][j] = q;
        }
        if is_rota_baxter(t, &m, 0) {
            found.push(m);
        }
    };
    for (a, &c1) in cells.iter().enumerate() {
        for s1 in [1, -1] {
            try_matrix(&[(c1, s1)]);
            for &c2 in &cells[a + 1..] {
                for s2 in [1, -1] {
                    try_matrix(&[(c1, s1), (c2, s2)]);
                }
            }
        }
    }
    found
}

/// First commuting pair of nonzero search results, if any.
pub fn commuting_pair(ops: &[IntMatrix]) -> Option<(IntMatrix, IntMatrix)> {
    for (i, a) in ops.iter().enumerate() {
        for b in &ops[i..] {
            if commute(a, b) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

pub fn q(n: i64) -> Rational {
    int(n)
}

/// Small random rational `n/d`.
pub fn random_rational(rng: &mut Lcg) -> Rational {
    let n = (rng.next() % 13) as i64 - 6;
    let d = (rng.next() % 5) as i64 + 1;
    homalg_core::exact::rational::frac(n, d)
}

fn random_matrix(rng: &mut Lcg, rows: usize, cols: usize, density: u64) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            if rng.next() % 100 < density {
                m.set(i, j, random_rational(rng));
            }
        }
    }
    m
}

fn random_tensor(rng: &mut Lcg, n: usize) -> StructureTensor {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if rng.next() % 100 < 30 {
                    entries.push((i, j, k, random_rational(rng)));
                }
            }
        }
    }
    StructureTensor::from_entries(n, entries).unwrap()
}

/// A random bundle exercising every field of the file format. The
/// structures are not expected to satisfy any identities.
pub fn random_bundle(rng: &mut Lcg) -> homalg_core::bundle::Bundle {
    use homalg_core::bundle::{Bundle, BundleOperator};
    use homalg_core::{ActionRole, BilinearForm, HomStructure, Representation, StructureClass};

    let n = (rng.next() % 4) as usize + 1;
    let class = StructureClass::ALL[(rng.next() % 9) as usize];
    let products = class.roles().iter().map(|r| (*r, random_tensor(rng, n))).collect();
    let mut s = HomStructure::new(products, random_matrix(rng, n, n, 50)).unwrap();
    if rng.next() % 2 == 0 {
        s = s.with_basis((0..n).map(|i| format!("x{i}")).collect()).unwrap();
    }
    if rng.next() % 3 == 0 {
        s = s.with_provenance(format!("random #{}", rng.next() % 1000));
    }
    let mut b = Bundle::new(s.clone());
    if rng.next() % 2 == 0 {
        b = b.with_class(class);
    }
    let roles: Option<&[ActionRole]> = match class.roles() {
        [ProductRole::Bracket] => Some(&[ActionRole::Rho]),
        [ProductRole::Dot] | [ProductRole::Star] => Some(&[ActionRole::Ell, ActionRole::Arr]),
        [ProductRole::Prec, ProductRole::Succ] => {
            Some(&[ActionRole::LPrec, ActionRole::RPrec, ActionRole::LSucc, ActionRole::RSucc])
        }
        _ => None,
    };
    if let Some(roles) = roles.filter(|_| rng.next() % 2 == 0) {
        let m = (rng.next() % 3) as usize + 1;
        let actions = roles.iter().map(|r| (*r, (0..n).map(|_| random_matrix(rng, m, m, 40)).collect())).collect();
        let twist = random_matrix(rng, m, m, 60);
        b.reps.push(Representation::new(s.clone(), actions, twist).unwrap());
        b.operators.push(BundleOperator::OOperator { map: random_matrix(rng, n, m, 50), rep_index: 0 });
    }
    for _ in 0..rng.next() % 3 {
        b.operators.push(match rng.next() % 2 {
            0 => BundleOperator::RotaBaxter { map: random_matrix(rng, n, n, 40), weight: random_rational(rng) },
            _ => BundleOperator::Map(random_matrix(rng, n, n, 40)),
        });
    }
    if rng.next() % 3 == 0 {
        let mut f = random_matrix(rng, n, n, 50);
        for i in 0..n {
            for j in 0..i {
                let q = f.get(j, i).clone();
                f.set(i, j, q);
            }
        }
        b.forms.push(BilinearForm::new(f).unwrap());
    }
    b
}

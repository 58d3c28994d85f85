//! Full-rank ℤ-lattices in ℚ^m, kept in Hermite normal form.
//!
//! Every ideal and module in the crate is ultimately stored as one of these,
//! so equality and containment reduce to comparing canonical bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type QMatrix = Vec<Vec<Q>>;

pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub(crate) fn qz(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Returns `(g, x, y)` with `x*a + y*b = g` and `g >= 0`.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

fn lcm_denoms<'a>(it: impl Iterator<Item = &'a Q>) -> BigInt {
    it.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

struct Hnf {
    rows: Vec<Vec<BigInt>>,
    transform: Option<Vec<Vec<BigInt>>>,
}

/// Row-style upper triangular HNF. Pivots are positive and entries above a
/// pivot lie in `[0, pivot)`. Zero rows are dropped. When `track` is set the
/// returned transform `U` satisfies `rows = U[..rank] * a`.
fn hnf(mut a: Vec<Vec<BigInt>>, track: bool) -> Hnf {
    let k = a.len();
    let m = if k == 0 { 0 } else { a[0].len() };
    let mut u: Option<Vec<Vec<BigInt>>> = if track {
        Some(
            (0..k)
                .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
                .collect(),
        )
    } else {
        None
    };
    let mut row = 0;
    for col in 0..m {
        if row >= k {
            break;
        }
        for i in row + 1..k {
            if a[i][col].is_zero() {
                continue;
            }
            if a[row][col].is_zero() {
                a.swap(row, i);
                if let Some(u) = u.as_mut() {
                    u.swap(row, i);
                }
                continue;
            }
            let p = a[row][col].clone();
            let qv = a[i][col].clone();
            let (g, x, y) = ext_gcd(&p, &qv);
            let pg = &p / &g;
            let qg = &qv / &g;
            combine(&mut a, row, i, &x, &y, &qg, &pg);
            if let Some(u) = u.as_mut() {
                combine(u, row, i, &x, &y, &qg, &pg);
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            negate(&mut a[row]);
            if let Some(u) = u.as_mut() {
                negate(&mut u[row]);
            }
        }
        let piv = a[row][col].clone();
        for r in 0..row {
            let f = a[r][col].div_floor(&piv);
            if !f.is_zero() {
                sub_mul(&mut a, r, row, &f);
                if let Some(u) = u.as_mut() {
                    sub_mul(u, r, row, &f);
                }
            }
        }
        row += 1;
    }
    a.truncate(row);
    Hnf { rows: a, transform: u }
}

// row_r <- x*row_r + y*row_i ; row_i <- qg*row_r - pg*row_i (old values)
fn combine(a: &mut [Vec<BigInt>], r: usize, i: usize, x: &BigInt, y: &BigInt, qg: &BigInt, pg: &BigInt) {
    for c in 0..a[r].len() {
        let vr = a[r][c].clone();
        let vi = a[i][c].clone();
        a[r][c] = x * &vr + y * &vi;
        a[i][c] = qg * &vr - pg * &vi;
    }
}

fn negate(row: &mut [BigInt]) {
    for v in row.iter_mut() {
        *v = -std::mem::take(v);
    }
}

fn sub_mul(a: &mut [Vec<BigInt>], r: usize, src: usize, f: &BigInt) {
    for c in 0..a[r].len() {
        let d = f * &a[src][c];
        a[r][c] -= d;
    }
}

fn scale_to_int(gens: &[Vec<Q>]) -> (BigInt, Vec<Vec<BigInt>>) {
    let den = lcm_denoms(gens.iter().flatten());
    let ints = gens
        .iter()
        .map(|g| g.iter().map(|x| (x * qz(&den)).to_integer()).collect())
        .collect();
    (den, ints)
}

/// A full-rank ℤ-lattice in ℚ^m with canonical basis rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QLattice {
    basis: QMatrix,
}

impl QLattice {
    /// HNF of the ℤ-span of `gens`; `None` unless the span has rank `dim`.
    pub fn from_generators(dim: usize, gens: &[Vec<Q>]) -> Option<Self> {
        Self::from_generators_tracked(dim, gens, false).map(|(l, _)| l)
    }

    fn from_generators_tracked(dim: usize, gens: &[Vec<Q>], track: bool) -> Option<(Self, Option<Vec<Vec<BigInt>>>)> {
        if gens.is_empty() {
            return None;
        }
        debug_assert!(gens.iter().all(|g| g.len() == dim));
        let (den, ints) = scale_to_int(gens);
        let h = hnf(ints, track);
        if h.rows.len() != dim {
            return None;
        }
        let dq = qz(&den);
        let basis = h.rows.iter().map(|r| r.iter().map(|x| qz(x) / &dq).collect()).collect();
        Some((QLattice { basis }, h.transform))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// Covolume: product of the pivots.
    pub fn det(&self) -> Q {
        self.basis.iter().enumerate().fold(Q::one(), |acc, (i, r)| acc * &r[i])
    }

    /// Rational coordinates of `v` in the basis.
    pub fn coords(&self, v: &[Q]) -> Vec<Q> {
        let m = self.dim();
        let mut c: Vec<Q> = Vec::with_capacity(m);
        for j in 0..m {
            let mut acc = v[j].clone();
            for (i, ci) in c.iter().enumerate() {
                acc -= ci * &self.basis[i][j];
            }
            c.push(acc / &self.basis[j][j]);
        }
        c
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.coords(v).iter().all(|x| x.is_integer())
    }

    pub fn is_subset_of(&self, other: &QLattice) -> bool {
        self.basis.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &QLattice) -> QLattice {
        let gens: QMatrix = self.basis.iter().chain(other.basis.iter()).cloned().collect();
        QLattice::from_generators(self.dim(), &gens).expect("sum of full-rank lattices")
    }

    /// `{y : y·x ∈ ℤ for all x in self}`.
    pub fn dual(&self) -> QLattice {
        let inv = mat_inverse(&self.basis).expect("lattice basis is invertible");
        let t = transpose(&inv);
        QLattice::from_generators(self.dim(), &t).expect("dual is full rank")
    }

    pub fn intersect(&self, other: &QLattice) -> QLattice {
        self.dual().sum(&other.dual()).dual()
    }

    /// Image under `v ↦ v·m` for an invertible `m`.
    pub fn map(&self, m: &QMatrix) -> Option<QLattice> {
        let rows: QMatrix = self.basis.iter().map(|r| vec_mat(r, m)).collect();
        QLattice::from_generators(self.dim(), &rows)
    }

    pub fn scale(&self, s: &Q) -> Option<QLattice> {
        if s.is_zero() {
            return None;
        }
        let rows: QMatrix = self.basis.iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
        QLattice::from_generators(self.dim(), &rows)
    }

    /// Index `[other : self]` when `self ⊂ other`.
    pub fn index_in(&self, other: &QLattice) -> Q {
        (self.det() / other.det()).abs()
    }

    /// `{x : x·m ∈ target for every m in mats}`.
    pub fn colon(target: &QLattice, mats: &[QMatrix]) -> Option<QLattice> {
        let binv = mat_inverse(&target.basis)?;
        let dim = target.dim();
        let mut cols: QMatrix = Vec::new();
        for m in mats {
            let c = mat_mul(m, &binv);
            for j in 0..dim {
                cols.push((0..c.len()).map(|i| c[i][j].clone()).collect());
            }
        }
        QLattice::from_generators(dim, &cols).map(|l| l.dual())
    }
}

/// Integer coefficients `c` with `Σ c_i gens_i = target`, if any exist.
pub fn express_integral(target: &[Q], gens: &[Vec<Q>]) -> Option<Vec<BigInt>> {
    let dim = target.len();
    let (lat, u) = QLattice::from_generators_tracked(dim, gens, true)?;
    let u = u?;
    let c = lat.coords(target);
    if !c.iter().all(|x| x.is_integer()) {
        return None;
    }
    let mut out = vec![BigInt::zero(); gens.len()];
    for (i, ci) in c.iter().enumerate() {
        let ci = ci.to_integer();
        if ci.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o += &ci * &u[i][j];
        }
    }
    Some(out)
}

pub fn transpose(m: &QMatrix) -> QMatrix {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn vec_mat(v: &[Q], m: &QMatrix) -> Vec<Q> {
    let cols = m[0].len();
    (0..cols)
        .map(|j| v.iter().zip(m.iter()).fold(Q::zero(), |acc, (a, r)| acc + a * &r[j]))
        .collect()
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    a.iter().map(|r| vec_mat(r, b)).collect()
}

pub fn mat_inverse(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    let mut a: QMatrix = m.clone();
    let mut inv: QMatrix = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let x = &f * &a[col][j];
                a[r][j] -= x;
                let y = &f * &inv[col][j];
                inv[r][j] -= y;
            }
        }
    }
    Some(inv)
}

pub fn mat_det(m: &QMatrix) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for j in col..n {
                let x = &f * &a[col][j];
                a[r][j] -= x;
            }
        }
    }
    det
}

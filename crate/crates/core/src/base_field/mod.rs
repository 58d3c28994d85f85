//! The base field `K` (ℚ or a quadratic field) and its maximal order `R`.
//!
//! Elements are stored as exact rationals `(x, y)` meaning `x + y·w`, where
//! `w` is the standard integral generator of `R`.

mod class_group;
mod ideal;
mod text;

pub use class_group::{class_group, fundamental_unit, is_principal, unit_group, ClassGroup, UnitGroup};
pub use ideal::{factor_ideal, primes_above, FracIdealR, PrimeIdealR};

use crate::error::{domain, Result};
use crate::numeric::poly_roots;
use crate::zlattice::{q, Q};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `K = ℚ` (stored as `d = 0`) or `K = ℚ(√d)` with `d` squarefree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseField {
    d: i64,
    // w^2 = w_tr * w - w_nm
    w_tr: i64,
    w_nm: i64,
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

impl BaseField {
    pub fn rational() -> Self {
        BaseField { d: 0, w_tr: 0, w_nm: 0 }
    }

    /// `d = 0` selects ℚ; otherwise `d` must be squarefree and not 1.
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 {
            return Ok(Self::rational());
        }
        if d == 1 || !is_squarefree(d) {
            return domain(format!("d = {d} is not a squarefree integer other than 0 and 1"));
        }
        if d.rem_euclid(4) == 1 {
            Ok(BaseField { d, w_tr: 1, w_nm: (1 - d) / 4 })
        } else {
            Ok(BaseField { d, w_tr: 0, w_nm: -d })
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn is_imaginary(&self) -> bool {
        self.d < 0
    }

    pub fn is_real_quadratic(&self) -> bool {
        self.d > 0
    }

    pub fn degree(&self) -> usize {
        if self.is_rational() {
            1
        } else {
            2
        }
    }

    pub fn disc(&self) -> i64 {
        match self.d {
            0 => 1,
            d if d.rem_euclid(4) == 1 => d,
            d => 4 * d,
        }
    }

    /// Numbers of real and complex places.
    pub fn signature(&self) -> (usize, usize) {
        match self.d {
            0 => (1, 0),
            d if d > 0 => (2, 0),
            _ => (0, 1),
        }
    }

    /// Trace and norm of `w`.
    pub fn omega_poly(&self) -> (i64, i64) {
        (self.w_tr, self.w_nm)
    }

    pub fn zero(&self) -> KElem {
        KElem { field: *self, x: Q::zero(), y: Q::zero() }
    }

    pub fn one(&self) -> KElem {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> KElem {
        KElem { field: *self, x: q(n), y: Q::zero() }
    }

    pub fn rat(&self, x: Q) -> KElem {
        KElem { field: *self, x, y: Q::zero() }
    }

    /// `x + y·w`; `y` must vanish over ℚ.
    pub fn elem(&self, x: Q, y: Q) -> KElem {
        assert!(!self.is_rational() || y.is_zero(), "nonzero w-part over the rationals");
        KElem { field: *self, x, y }
    }

    pub fn elem_i(&self, x: i64, y: i64) -> KElem {
        self.elem(q(x), q(y))
    }

    pub fn omega(&self) -> KElem {
        assert!(!self.is_rational());
        self.elem_i(0, 1)
    }

    /// Standard ℤ-basis of `R`.
    pub fn integral_basis(&self) -> Vec<KElem> {
        if self.is_rational() {
            vec![self.one()]
        } else {
            vec![self.one(), self.omega()]
        }
    }

    pub fn from_vec(&self, v: &[Q]) -> KElem {
        if self.is_rational() {
            self.rat(v[0].clone())
        } else {
            self.elem(v[0].clone(), v[1].clone())
        }
    }

    /// Images of `w` under the complex embeddings, one per place.
    fn omega_embeddings(&self) -> Vec<Complex64> {
        let d = self.d as f64;
        match self.d {
            0 => vec![],
            x if x > 0 => {
                let r = d.sqrt();
                if self.w_tr == 1 {
                    vec![Complex64::new((1.0 + r) / 2.0, 0.0), Complex64::new((1.0 - r) / 2.0, 0.0)]
                } else {
                    vec![Complex64::new(r, 0.0), Complex64::new(-r, 0.0)]
                }
            }
            _ => {
                let r = (-d).sqrt();
                if self.w_tr == 1 {
                    vec![Complex64::new(0.5, r / 2.0)]
                } else {
                    vec![Complex64::new(0.0, r)]
                }
            }
        }
    }

    /// Distinct roots in `K` of `c[0] + c[1] z + ... + c[n] z^n`.
    ///
    /// Candidates come from floating point roots of a rescaled monic integral
    /// polynomial, whose `K`-roots lie in `R`; each candidate is then checked
    /// exactly.
    pub fn roots(&self, c: &[KElem]) -> Vec<KElem> {
        let mut c: Vec<KElem> = c.to_vec();
        while c.len() > 1 && c.last().unwrap().is_zero() {
            c.pop();
        }
        let n = c.len() - 1;
        if n == 0 {
            return vec![];
        }
        let lead = c[n].clone();
        let monic: Vec<KElem> = c.iter().map(|x| x.div(&lead)).collect();
        let den = monic.iter().fold(BigInt::one(), |acc, m| acc.lcm(m.x.denom()).lcm(m.y.denom()));
        let dk = self.rat(Q::from_integer(den));
        // w^n + sum_k D^{n-k} m_k w^k
        let mut scaled = monic.clone();
        let mut pw = self.one();
        for k in (0..n).rev() {
            pw = &pw * &dk;
            scaled[k] = &monic[k] * &pw;
        }
        let eval = |z: &KElem| scaled.iter().rev().fold(self.zero(), |acc, x| &(&acc * z) + x);
        let mut out: Vec<KElem> = Vec::new();
        let consider = |w: KElem, out: &mut Vec<KElem>| {
            if eval(&w).is_zero() {
                let z = w.div(&dk);
                if !out.contains(&z) {
                    out.push(z);
                }
            }
        };
        let round = |x: f64| -> Option<Q> {
            if !x.is_finite() || x.abs() > 1e15 {
                return None;
            }
            Some(q(x.round() as i64))
        };
        if self.is_rational() {
            let cs: Vec<Complex64> = scaled.iter().map(|x| Complex64::new(x.x.to_f64().unwrap_or(f64::NAN), 0.0)).collect();
            for r in poly_roots(&cs) {
                if r.im.abs() > 1e-6 * (1.0 + r.re.abs()) {
                    continue;
                }
                if let Some(x) = round(r.re) {
                    consider(self.rat(x), &mut out);
                }
            }
        } else if self.is_imaginary() {
            let w = self.omega_embeddings()[0];
            let cs: Vec<Complex64> = scaled.iter().map(|x| x.embed_with(w)).collect();
            for r in poly_roots(&cs) {
                let y = r.im / w.im;
                let x = r.re - y * w.re;
                if let (Some(x), Some(y)) = (round(x), round(y)) {
                    consider(self.elem(x, y), &mut out);
                }
            }
        } else {
            let ws = self.omega_embeddings();
            let r1: Vec<f64> = poly_roots(&scaled.iter().map(|x| x.embed_with(ws[0])).collect::<Vec<_>>())
                .into_iter()
                .filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs()))
                .map(|z| z.re)
                .collect();
            let r2: Vec<f64> = poly_roots(&scaled.iter().map(|x| x.embed_with(ws[1])).collect::<Vec<_>>())
                .into_iter()
                .filter(|z| z.im.abs() <= 1e-6 * (1.0 + z.re.abs()))
                .map(|z| z.re)
                .collect();
            for a in &r1 {
                for b in &r2 {
                    let y = (a - b) / (ws[0].re - ws[1].re);
                    let x = a - y * ws[0].re;
                    if let (Some(x), Some(y)) = (round(x), round(y)) {
                        consider(self.elem(x, y), &mut out);
                    }
                }
            }
        }
        out
    }

    pub fn sqrt(&self, a: &KElem) -> Option<KElem> {
        if a.is_zero() {
            return Some(self.zero());
        }
        self.roots(&[-a, self.zero(), self.one()]).into_iter().next()
    }

    pub fn is_square(&self, a: &KElem) -> bool {
        self.sqrt(a).is_some()
    }

    pub fn cube_roots(&self, a: &KElem) -> Vec<KElem> {
        if a.is_zero() {
            return vec![self.zero()];
        }
        self.roots(&[-a, self.zero(), self.zero(), self.one()])
    }
}

/// An element `x + y·w` of `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KElem {
    field: BaseField,
    x: Q,
    y: Q,
}

impl KElem {
    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn x(&self) -> &Q {
        &self.x
    }

    pub fn y(&self) -> &Q {
        &self.y
    }

    pub fn to_vec(&self) -> Vec<Q> {
        if self.field.is_rational() {
            vec![self.x.clone()]
        } else {
            vec![self.x.clone(), self.y.clone()]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// Membership in `R`.
    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn conj(&self) -> KElem {
        let f = self.field;
        if f.is_rational() {
            return self.clone();
        }
        // conj(w) = w_tr - w
        KElem { field: f, x: &self.x + &self.y * q(f.w_tr), y: -&self.y }
    }

    pub fn norm(&self) -> Q {
        let f = self.field;
        &self.x * &self.x + &self.x * &self.y * q(f.w_tr) + &self.y * &self.y * q(f.w_nm)
    }

    pub fn trace(&self) -> Q {
        let f = self.field;
        if f.is_rational() {
            return self.x.clone();
        }
        q(2) * &self.x + &self.y * q(f.w_tr)
    }

    pub fn inv(&self) -> Option<KElem> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(KElem { field: self.field, x: c.x / &n, y: c.y / &n })
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &KElem) -> KElem {
        self * &other.inv().expect("division by zero in K")
    }

    pub fn pow(&self, e: i64) -> KElem {
        let mut base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, s: &Q) -> KElem {
        KElem { field: self.field, x: &self.x * s, y: &self.y * s }
    }

    fn embed_with(&self, w: Complex64) -> Complex64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        Complex64::new(x, 0.0) + w * y
    }

    /// Images under one embedding per place (real places first).
    pub fn embeddings(&self) -> Vec<Complex64> {
        if self.field.is_rational() {
            return vec![Complex64::new(self.x.to_f64().unwrap_or(f64::NAN), 0.0)];
        }
        self.field.omega_embeddings().into_iter().map(|w| self.embed_with(w)).collect()
    }

    /// Exact signs at the real places, in the order of `embeddings`.
    pub fn real_signs(&self) -> Vec<i8> {
        let f = self.field;
        let sgn = |v: &Q| -> i8 {
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        };
        match f.d {
            0 => vec![sgn(&self.x)],
            d if d > 0 => {
                // x + y w = u + v √d with v = y / (w_tr + 1) for w_tr = 1, else y
                let (u, v) = if f.w_tr == 1 {
                    (&self.x + &self.y / q(2), &self.y / q(2))
                } else {
                    (self.x.clone(), self.y.clone())
                };
                let s = |v: &Q| -> i8 {
                    // sign of u + v √d
                    let su = sgn(&u);
                    let sv = sgn(v);
                    if su == sv || sv == 0 {
                        return su;
                    }
                    if su == 0 {
                        return sv;
                    }
                    let lhs = &u * &u;
                    let rhs = v * v * q(d);
                    if lhs > rhs {
                        su
                    } else if lhs < rhs {
                        sv
                    } else {
                        0
                    }
                };
                vec![s(&v), s(&-&v)]
            }
            _ => vec![],
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<KElem> for KElem {
            type Output = KElem;
            fn $m(self, o: KElem) -> KElem {
                (&self).$m(&o)
            }
        }
        impl $tr<&KElem> for KElem {
            type Output = KElem;
            fn $m(self, o: &KElem) -> KElem {
                (&self).$m(o)
            }
        }
        impl $tr<KElem> for &KElem {
            type Output = KElem;
            fn $m(self, o: KElem) -> KElem {
                self.$m(&o)
            }
        }
    };
}

impl Add<&KElem> for &KElem {
    type Output = KElem;
    fn add(self, o: &KElem) -> KElem {
        debug_assert_eq!(self.field, o.field);
        KElem { field: self.field, x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl Sub<&KElem> for &KElem {
    type Output = KElem;
    fn sub(self, o: &KElem) -> KElem {
        debug_assert_eq!(self.field, o.field);
        KElem { field: self.field, x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl Mul<&KElem> for &KElem {
    type Output = KElem;
    fn mul(self, o: &KElem) -> KElem {
        debug_assert_eq!(self.field, o.field);
        let f = self.field;
        if f.is_rational() {
            return KElem { field: f, x: &self.x * &o.x, y: Q::zero() };
        }
        let yy = &self.y * &o.y;
        KElem {
            field: f,
            x: &self.x * &o.x - &yy * q(f.w_nm),
            y: &self.x * &o.y + &self.y * &o.x + yy * q(f.w_tr),
        }
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem { field: self.field, x: -&self.x, y: -&self.y }
    }
}

impl Neg for KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        -&self
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_kelem(self))
    }
}

pub use text::parse_kelem;

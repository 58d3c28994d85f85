//! Binary cubic forms `ax³ + 3bx²y + 3cxy² + dy³` with `(a, b, c, d)` in
//! `(𝔞, R, 𝔞⁻¹, 𝔞⁻²)`, the twisted action of `GL(R ⊕ 𝔞)`, covariants, and the
//! correspondence with balanced quadruples.

mod equivalence;
mod phi;
mod text;

pub use equivalence::{equivalent, Equivalence, GroupKind};
pub use phi::{phi_forward, phi_inverse};
pub use text::{format_form, parse_form, parse_ideal};

use crate::base_field::{BaseField, FracIdealR, KElem};
use crate::error::{domain, Result};
use crate::gauss_composition::LinearBQF;
use num_traits::{One, Signed};
use std::fmt;

pub(crate) fn is_unit(x: &KElem) -> bool {
    x.is_integral() && x.norm().abs().is_one()
}

/// The lattice `V_𝔞` of forms for a fixed Steinitz ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpace {
    steinitz: FracIdealR,
    inv: FracIdealR,
    inv2: FracIdealR,
}

impl FormSpace {
    pub fn new(steinitz: FracIdealR) -> Self {
        let inv = steinitz.inverse();
        let inv2 = inv.mul(&inv);
        FormSpace { steinitz, inv, inv2 }
    }

    /// `V_R`.
    pub fn standard(k: BaseField) -> Self {
        FormSpace::new(FracIdealR::unit(k))
    }

    pub fn base(&self) -> BaseField {
        self.steinitz.field()
    }

    pub fn steinitz(&self) -> &FracIdealR {
        &self.steinitz
    }

    pub fn steinitz_inv(&self) -> &FracIdealR {
        &self.inv
    }

    pub fn contains(&self, f: &CubicForm) -> bool {
        let r = FracIdealR::unit(self.base());
        let [a, b, c, d] = &f.coeffs;
        self.steinitz.contains(a) && r.contains(b) && self.inv.contains(c) && self.inv2.contains(d)
    }

    pub fn check(&self, f: &CubicForm) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            domain(format!("form {f} does not lie in the lattice of the Steinitz ideal {}", self.steinitz))
        }
    }

    /// Diagonal entries in `R`, upper right in `𝔞`, lower left in `𝔞⁻¹`, unit determinant.
    pub fn in_gl(&self, g: &GroupElem) -> bool {
        let [[m00, m01], [m10, m11]] = &g.m;
        m00.is_integral() && m11.is_integral() && self.steinitz.contains(m01) && self.inv.contains(m10) && is_unit(&g.det())
    }

    pub fn in_sl(&self, g: &GroupElem) -> bool {
        self.in_gl(g) && g.det().is_one()
    }

    /// Lower triangular with determinant one.
    pub fn in_parabolic(&self, g: &GroupElem) -> bool {
        self.in_sl(g) && g.m[0][1].is_zero()
    }

    /// `g·f(x, y) = det(g)⁻¹ f((x, y)g)`.
    pub fn act(&self, g: &GroupElem, f: &CubicForm) -> Result<CubicForm> {
        if !self.in_gl(g) {
            return domain("matrix is not in GL(R ⊕ 𝔞)");
        }
        self.check(f)?;
        Ok(act_unchecked(g, f))
    }

    /// Whether the Hessian `pR + q𝔞 + r𝔞²` is all of `R`.
    pub fn is_projective(&self, f: &CubicForm) -> bool {
        self.hessian_bqf(f).map(|h| h.is_primitive()).unwrap_or(false)
    }

    /// The Hessian as a form on `R ⊕ 𝔞` with values in `R`.
    pub fn hessian_bqf(&self, f: &CubicForm) -> Result<LinearBQF> {
        let (p, q, r) = f.hessian();
        LinearBQF::new(FracIdealR::unit(self.base()), self.steinitz.clone(), FracIdealR::unit(self.base()), p, q, r)
    }

    /// `pR + q𝔞 + r𝔞²`.
    pub fn hessian_content(&self, f: &CubicForm) -> Option<FracIdealR> {
        let (p, q, r) = f.hessian();
        let r1 = FracIdealR::unit(self.base());
        let a2 = self.steinitz.mul(&self.steinitz);
        FracIdealR::sum_of_scaled(&[(p, &r1), (q, &self.steinitz), (r, &a2)])
    }
}

pub(crate) fn act_unchecked(g: &GroupElem, f: &CubicForm) -> CubicForm {
    let k = f.coeffs[0].field();
    let [[m00, m01], [m10, m11]] = &g.m;
    // (x, y)g = (m00 x + m10 y, m01 x + m11 y)
    let xl = [m00.clone(), m10.clone()];
    let yl = [m01.clone(), m11.clone()];
    let mul = |p: &[KElem], l: &[KElem; 2]| -> Vec<KElem> {
        let mut out = vec![k.zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            out[i] = &out[i] + &(c * &l[0]);
            out[i + 1] = &out[i + 1] + &(c * &l[1]);
        }
        out
    };
    let three = k.int(3);
    let weights = [k.one(), three.clone(), three.clone(), k.one()];
    let mut acc = vec![k.zero(); 4];
    for j in 0..4 {
        let mut p = vec![&f.coeffs[j] * &weights[j]];
        for _ in 0..(3 - j) {
            p = mul(&p, &xl);
        }
        for _ in 0..j {
            p = mul(&p, &yl);
        }
        for (a, c) in acc.iter_mut().zip(p) {
            *a = &*a + &c;
        }
    }
    let dinv = g.det().inv().expect("group element has unit determinant");
    let third = k.rat(crate::zlattice::q(1) / crate::zlattice::q(3));
    CubicForm::new(
        &acc[0] * &dinv,
        &(&acc[1] * &third) * &dinv,
        &(&acc[2] * &third) * &dinv,
        &acc[3] * &dinv,
    )
}

/// `ax³ + 3bx²y + 3cxy² + dy³`, stored as `[a, b, c, d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicForm {
    pub coeffs: [KElem; 4],
}

impl CubicForm {
    pub fn new(a: KElem, b: KElem, c: KElem, d: KElem) -> Self {
        CubicForm { coeffs: [a, b, c, d] }
    }

    pub fn from_ints(k: BaseField, c: [i64; 4]) -> Self {
        CubicForm::new(k.int(c[0]), k.int(c[1]), k.int(c[2]), k.int(c[3]))
    }

    pub fn base(&self) -> BaseField {
        self.coeffs[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &KElem, y: &KElem) -> KElem {
        let [a, b, c, d] = &self.coeffs;
        let k = self.base();
        let three = k.int(3);
        let x2 = x * x;
        let y2 = y * y;
        &(&(&(a * &x2) * x) + &(&(&(b * &three) * &x2) * y)) + &(&(&(&(c * &three) * x) * &y2) + &(&(d * &y2) * y))
    }

    /// `−3b²c² + 4ac³ + 4b³d + a²d² − 6abcd`.
    pub fn disc(&self) -> KElem {
        let [a, b, c, d] = &self.coeffs;
        let k = self.base();
        let bc = b * c;
        let ad = a * d;
        let t1 = &(&bc * &bc) * &k.int(-3);
        let t2 = &(&(a * c) * &(c * c)) * &k.int(4);
        let t3 = &(&(b * b) * &(b * d)) * &k.int(4);
        let t4 = &ad * &ad;
        let t5 = &(&ad * &bc) * &k.int(-6);
        &(&(&(&t1 + &t2) + &t3) + &t4) + &t5
    }

    /// `(b² − ac, ad − bc, c² − bd)`.
    pub fn hessian(&self) -> (KElem, KElem, KElem) {
        let [a, b, c, d] = &self.coeffs;
        (&(b * b) - &(a * c), &(a * d) - &(b * c), &(c * c) - &(b * d))
    }

    pub fn scale(&self, s: &KElem) -> CubicForm {
        CubicForm { coeffs: self.coeffs.clone().map(|c| &c * s) }
    }

    /// Whether the form has a zero in `P¹(K)`.
    pub fn is_reducible(&self) -> Result<bool> {
        if self.disc().is_zero() {
            return domain("degenerate form");
        }
        let [a, b, c, d] = &self.coeffs;
        if a.is_zero() {
            return Ok(true);
        }
        let k = self.base();
        let three = k.int(3);
        Ok(!k.roots(&[d.clone(), c * &three, b * &three, a.clone()]).is_empty())
    }
}

impl fmt::Display for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", c.join(","))
    }
}

/// A 2×2 matrix over `K` acting on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElem {
    pub m: [[KElem; 2]; 2],
}

impl GroupElem {
    pub fn new(m00: KElem, m01: KElem, m10: KElem, m11: KElem) -> Self {
        GroupElem { m: [[m00, m01], [m10, m11]] }
    }

    pub fn from_ints(k: BaseField, m: [[i64; 2]; 2]) -> Self {
        GroupElem::new(k.int(m[0][0]), k.int(m[0][1]), k.int(m[1][0]), k.int(m[1][1]))
    }

    pub fn identity(k: BaseField) -> Self {
        GroupElem::new(k.one(), k.zero(), k.zero(), k.one())
    }

    pub fn diag(u: KElem, v: KElem) -> Self {
        let z = u.field().zero();
        GroupElem::new(u, z.clone(), z, v)
    }

    pub fn det(&self) -> KElem {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    pub fn mul(&self, o: &GroupElem) -> GroupElem {
        let e = |i: usize, j: usize| &(&self.m[i][0] * &o.m[0][j]) + &(&self.m[i][1] * &o.m[1][j]);
        GroupElem::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn inverse(&self) -> Option<GroupElem> {
        let di = self.det().inv()?;
        let [[a, b], [c, d]] = &self.m;
        Some(GroupElem::new(d * &di, -&(b * &di), -&(c * &di), a * &di))
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Elements of `ideal` with ℤ-coordinates in `[−h, h]`, ordered by height.
pub(crate) fn small_elements(ideal: &FracIdealR, h: i64) -> Vec<KElem> {
    let zb = ideal.zbasis();
    let k = ideal.field();
    let mut coords: Vec<Vec<i64>> = vec![vec![]];
    for _ in &zb {
        coords = coords
            .into_iter()
            .flat_map(|c| (-h..=h).map(move |x| {
                let mut c = c.clone();
                c.push(x);
                c
            }))
            .collect();
    }
    coords.sort_by_key(|c| (c.iter().map(|x| x.abs()).max().unwrap_or(0), c.iter().map(|x| x.abs()).sum::<i64>(), c.clone()));
    coords
        .iter()
        .map(|c| c.iter().zip(&zb).fold(k.zero(), |acc, (x, b)| &acc + &(b * &k.int(*x))))
        .collect()
}

//! Binary quadratic forms attached to quadratic algebras and their ideals.
//!
//! Monic forms `x² + axy + by²` correspond to algebras with generator
//! satisfying `ξ² + aξ + b = 0`, so `a = −t` and `b = u`.

use crate::base_field::{FracIdealR, KElem};
use crate::error::{domain, Error, Result};
use crate::quad_algebra::{LElem, QuadAlgebra, SIdeal};
use num_traits::{One, Signed};

/// `x² + a·xy + b·y²` with `a ∈ 𝔞⁻¹`, `b ∈ 𝔞⁻²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicQuadForm {
    pub a: KElem,
    pub b: KElem,
}

impl MonicQuadForm {
    pub fn disc(&self) -> KElem {
        &(&self.a * &self.a) - &(&self.b * &self.a.field().int(4))
    }
}

/// The substitution `(x, y) ↦ (x + uy, λy)` with `u ∈ 𝔞⁻¹`, `λ ∈ R^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GAElem {
    pub u: KElem,
    pub lambda: KElem,
}

impl GAElem {
    pub fn identity(k: crate::base_field::BaseField) -> Self {
        GAElem { u: k.zero(), lambda: k.one() }
    }

    /// Matrix product `self · o`, matching `(g·h)·f = g·(h·f)`.
    pub fn compose(&self, o: &GAElem) -> GAElem {
        GAElem { u: &self.u + &(&self.lambda * &o.u), lambda: &self.lambda * &o.lambda }
    }
}

fn is_unit(x: &KElem) -> bool {
    x.is_integral() && x.norm().abs().is_one()
}

/// `S ↦ x² − t·xy + u·y²`.
pub fn psi(s: &QuadAlgebra) -> MonicQuadForm {
    MonicQuadForm { a: -s.t(), b: s.u().clone() }
}

pub fn psi_inverse(steinitz: &FracIdealR, f: &MonicQuadForm) -> Result<QuadAlgebra> {
    QuadAlgebra::new(steinitz.clone(), -&f.a, f.b.clone())
}

/// `(u, λ)·f = x² + (aλ + 2u)xy + (bλ² + uaλ + u²)y²`.
pub fn g_action(steinitz: &FracIdealR, g: &GAElem, f: &MonicQuadForm) -> Result<MonicQuadForm> {
    let inv = steinitz.inverse();
    if !inv.contains(&g.u) || !is_unit(&g.lambda) {
        return domain("group element is not in the affine group of the Steinitz ideal");
    }
    if !inv.contains(&f.a) || !inv.mul(&inv).contains(&f.b) {
        return domain("form coefficients are not in the inverse Steinitz powers");
    }
    let two = f.a.field().int(2);
    let a = &(&f.a * &g.lambda) + &(&g.u * &two);
    let b = &(&(&f.b * &g.lambda) * &g.lambda) + &(&(&(&g.u * &f.a) * &g.lambda) + &(&g.u * &g.u));
    Ok(MonicQuadForm { a, b })
}

/// The two elements fixing `f`: `(0, 1)` and `(a, −1)`.
pub fn stabilizer(f: &MonicQuadForm) -> [GAElem; 2] {
    let k = f.a.field();
    [GAElem::identity(k), GAElem { u: f.a.clone(), lambda: k.int(-1) }]
}

/// `(u, λ)` taking `x² + axy + by²` to `x² − λ²(a² − 4b)/4·y²`.
pub fn diagonalizing_element(f: &MonicQuadForm, lambda: &KElem) -> GAElem {
    let k = f.a.field();
    let half = k.rat(crate::zlattice::q(1) / crate::zlattice::q(2));
    GAElem { u: -&(&(&f.a * lambda) * &half), lambda: lambda.clone() }
}

/// Real normal form of `x² + axy + by²`: `x² ∓ y²` according to the sign of
/// `a² − 4b`, with the substitution `(u, λ)` achieving it.
pub fn real_normal_form(a: f64, b: f64) -> Result<(f64, f64, f64)> {
    let disc = a * a - 4.0 * b;
    if disc == 0.0 || !disc.is_finite() {
        return domain("degenerate real form");
    }
    let lambda = 2.0 / disc.abs().sqrt();
    let u = -a * lambda / 2.0;
    let bn = b * lambda * lambda + u * a * lambda + u * u;
    Ok((u, lambda, bn))
}

/// `p·x² + q·xy + r·y²` on `M = 𝔪1·e1 ⊕ 𝔪2·e2` with values in `𝔠`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearBQF {
    pub m1: FracIdealR,
    pub m2: FracIdealR,
    pub value: FracIdealR,
    pub p: KElem,
    pub q: KElem,
    pub r: KElem,
}

impl LinearBQF {
    /// Checks `p ∈ 𝔪1⁻²𝔠`, `q ∈ 𝔪1⁻¹𝔪2⁻¹𝔠`, `r ∈ 𝔪2⁻²𝔠`.
    pub fn new(m1: FracIdealR, m2: FracIdealR, value: FracIdealR, p: KElem, q: KElem, r: KElem) -> Result<Self> {
        let i1 = m1.inverse();
        let i2 = m2.inverse();
        let ok = i1.mul(&i1).mul(&value).contains(&p)
            && i1.mul(&i2).mul(&value).contains(&q)
            && i2.mul(&i2).mul(&value).contains(&r);
        if !ok {
            return domain("quadratic form coefficients do not map the module into the value ideal");
        }
        Ok(LinearBQF { m1, m2, value, p, q, r })
    }

    pub fn disc(&self) -> KElem {
        &(&self.q * &self.q) - &(&(&self.p * &self.r) * &self.p.field().int(4))
    }

    /// The image `p𝔪1² + q𝔪1𝔪2 + r𝔪2²` equals the value ideal.
    pub fn is_primitive(&self) -> bool {
        let m11 = self.m1.mul(&self.m1);
        let m12 = self.m1.mul(&self.m2);
        let m22 = self.m2.mul(&self.m2);
        match FracIdealR::sum_of_scaled(&[(self.p.clone(), &m11), (self.q.clone(), &m12), (self.r.clone(), &m22)]) {
            Some(img) => img == self.value,
            None => false,
        }
    }
}

/// Coordinates of `z` in the `K`-basis `(e1, e2)` of `L`.
fn coords(z: &LElem, e1: &LElem, e2: &LElem) -> (KElem, KElem) {
    let w = QuadAlgebra::wedge(e1, e2);
    (QuadAlgebra::wedge(z, e2).div(&w), QuadAlgebra::wedge(e1, z).div(&w))
}

/// With `ξη1 = aη1 + cη2` and `ξη2 = bη1 + dη2`, the form
/// `c·x² + (d − a)·xy − b·y²` on `I` with values in `𝔞⁻¹𝔟1𝔟2`.
pub fn bqf_from_ideal(s: &QuadAlgebra, i: &SIdeal) -> Result<LinearBQF> {
    if !s.is_s_module(i)? {
        return domain("not an S-ideal");
    }
    let [e1, e2] = &i.gens;
    let (a, c) = coords(&s.mul(&s.xi(), e1), e1, e2);
    let (b, d) = coords(&s.mul(&s.xi(), e2), e1, e2);
    let value = s.steinitz_inv().mul(&i.coeffs[0]).mul(&i.coeffs[1]);
    LinearBQF::new(i.coeffs[0].clone(), i.coeffs[1].clone(), value, c, &d - &a, -&b)
}

/// The algebra `ξ² = qξ − pr` of type `𝔪1𝔪2𝔠⁻¹` and the ideal `𝔪1η1 ⊕ 𝔪2η2`
/// on which `ξ` acts by `ξη1 = pη2`, `ξη2 = −rη1 + qη2`.
pub fn ideal_from_bqf(f: &LinearBQF) -> Result<(QuadAlgebra, SIdeal)> {
    let steinitz = f.m1.mul(&f.m2).div(&f.value);
    let s = QuadAlgebra::new(steinitz, f.q.clone(), &f.p * &f.r)?;
    let xi = s.xi();
    let (e1, e2) = if !f.r.is_zero() {
        (s.from_k(&f.q).sub(&xi).scale(&f.r.inv().unwrap()), s.one())
    } else if !f.p.is_zero() {
        (s.one(), xi.scale(&f.p.inv().unwrap()))
    } else {
        (xi.sub(&s.from_k(&f.q)), xi)
    };
    let i = SIdeal { coeffs: [f.m1.clone(), f.m2.clone()], gens: [e1, e2] };
    if !s.is_s_module(&i)? {
        return Err(Error::Internal("constructed module is not stable under the algebra".into()));
    }
    Ok((s, i))
}

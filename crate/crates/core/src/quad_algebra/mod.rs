//! Quadratic `R`-algebras `S = R ⊕ 𝔞·ξ` with `ξ² = tξ − u`, their ideals, and
//! balanced quadruples.

mod balanced;
mod ideal;
mod units;

pub use balanced::{reducible_ideal_map, BalanceReport, BalancedQuadruple};
pub use ideal::SIdeal;
pub use units::{specification, unit_cube_profile, Specification, UnitCubeProfile};

use crate::base_field::{BaseField, FracIdealR, KElem};
use crate::error::{domain, Result};
use crate::zlattice::{q, QLattice, QMatrix, Q};
use std::fmt;

/// `x + y·ξ` in `L = S ⊗ ℚ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LElem {
    pub x: KElem,
    pub y: KElem,
}

impl LElem {
    pub fn new(x: KElem, y: KElem) -> Self {
        LElem { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Coordinates in `ℚ^{2n}`: the `1`-part then the `ξ`-part.
    pub fn to_vec(&self) -> Vec<Q> {
        let mut v = self.x.to_vec();
        v.extend(self.y.to_vec());
        v
    }

    /// `k·self` for `k ∈ K`.
    pub fn scale(&self, k: &KElem) -> LElem {
        LElem { x: &self.x * k, y: &self.y * k }
    }

    pub fn add(&self, o: &LElem) -> LElem {
        LElem { x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn sub(&self, o: &LElem) -> LElem {
        LElem { x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn neg(&self) -> LElem {
        LElem { x: -&self.x, y: -&self.y }
    }
}

impl fmt::Display for LElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.x, self.y)
    }
}

/// An oriented quadratic algebra `S = R + 𝔞ξ`, `ξ² = tξ − u`, with
/// `t ∈ 𝔞⁻¹` and `u ∈ 𝔞⁻²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadAlgebra {
    base: BaseField,
    steinitz: FracIdealR,
    steinitz_inv: FracIdealR,
    t: KElem,
    u: KElem,
}

impl QuadAlgebra {
    pub fn new(steinitz: FracIdealR, t: KElem, u: KElem) -> Result<Self> {
        let base = steinitz.field();
        let inv = steinitz.inverse();
        if !inv.contains(&t) {
            return domain(format!("t = {t} is not in the inverse of {steinitz}"));
        }
        if !inv.mul(&inv).contains(&u) {
            return domain(format!("u = {u} is not in the inverse square of {steinitz}"));
        }
        if (&(&t * &t) - &(&u * &base.int(4))).is_zero() {
            return domain("the algebra is degenerate (discriminant 0)");
        }
        Ok(QuadAlgebra { base, steinitz, steinitz_inv: inv, t, u })
    }

    /// `S = R[ξ]` with `𝔞 = R`.
    pub fn monogenic(base: BaseField, t: KElem, u: KElem) -> Result<Self> {
        Self::new(FracIdealR::unit(base), t, u)
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    pub fn steinitz(&self) -> &FracIdealR {
        &self.steinitz
    }

    pub fn steinitz_inv(&self) -> &FracIdealR {
        &self.steinitz_inv
    }

    pub fn t(&self) -> &KElem {
        &self.t
    }

    pub fn u(&self) -> &KElem {
        &self.u
    }

    /// `t² − 4u`; the discriminant ideal is `disc·𝔞²`.
    pub fn disc(&self) -> KElem {
        &(&self.t * &self.t) - &(&self.u * &self.base.int(4))
    }

    pub fn disc_ideal(&self) -> FracIdealR {
        self.steinitz.mul(&self.steinitz).scale(&self.disc()).unwrap()
    }

    /// Whether `L` is a field, i.e. the discriminant is not a square in `K`.
    pub fn is_field(&self) -> bool {
        !self.base.is_square(&self.disc())
    }

    pub fn one(&self) -> LElem {
        LElem::new(self.base.one(), self.base.zero())
    }

    pub fn zero(&self) -> LElem {
        LElem::new(self.base.zero(), self.base.zero())
    }

    pub fn xi(&self) -> LElem {
        LElem::new(self.base.zero(), self.base.one())
    }

    pub fn from_k(&self, k: &KElem) -> LElem {
        LElem::new(k.clone(), self.base.zero())
    }

    pub fn mul(&self, a: &LElem, b: &LElem) -> LElem {
        let yy = &a.y * &b.y;
        LElem {
            x: &(&a.x * &b.x) - &(&yy * &self.u),
            y: &(&(&a.x * &b.y) + &(&a.y * &b.x)) + &(&yy * &self.t),
        }
    }

    pub fn pow(&self, a: &LElem, e: u32) -> LElem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// `N(x + yξ) = x² + txy + uy²`.
    pub fn norm(&self, a: &LElem) -> KElem {
        &(&(&a.x * &a.x) + &(&(&a.x * &a.y) * &self.t)) + &(&(&a.y * &a.y) * &self.u)
    }

    pub fn trace(&self, a: &LElem) -> KElem {
        &(&a.x * &self.base.int(2)) + &(&a.y * &self.t)
    }

    /// Image under `ξ ↦ t − ξ`.
    pub fn conj(&self, a: &LElem) -> LElem {
        LElem { x: &a.x + &(&a.y * &self.t), y: -&a.y }
    }

    pub fn inv(&self, a: &LElem) -> Option<LElem> {
        let n = self.norm(a).inv()?;
        Some(self.conj(a).scale(&n))
    }

    pub fn div(&self, a: &LElem, b: &LElem) -> Option<LElem> {
        Some(self.mul(a, &self.inv(b)?))
    }

    /// `π(1 ∧ a)`: the `ξ`-coordinate.
    pub fn xi_part(a: &LElem) -> &KElem {
        &a.y
    }

    /// `π(a ∧ b)` relative to `π(1 ∧ ξ) = 1`.
    pub fn wedge(a: &LElem, b: &LElem) -> KElem {
        &(&a.x * &b.y) - &(&a.y * &b.x)
    }

    pub fn contains(&self, a: &LElem) -> bool {
        a.x.is_integral() && self.steinitz.contains(&a.y)
    }

    pub fn from_vec(&self, v: &[Q]) -> LElem {
        let n = self.base.degree();
        LElem::new(self.base.from_vec(&v[..n]), self.base.from_vec(&v[n..]))
    }

    /// ℤ-basis of `S`.
    pub fn zbasis(&self) -> Vec<LElem> {
        let mut out: Vec<LElem> = self.base.integral_basis().iter().map(|b| self.from_k(b)).collect();
        out.extend(self.steinitz.zbasis().into_iter().map(|a| LElem::new(self.base.zero(), a)));
        out
    }

    pub fn zlattice(&self) -> QLattice {
        let gens: Vec<Vec<Q>> = self.zbasis().iter().map(|e| e.to_vec()).collect();
        QLattice::from_generators(2 * self.base.degree(), &gens).unwrap()
    }

    /// Matrix of `z ↦ z·a` on `ℚ^{2n}`.
    pub fn mult_matrix(&self, a: &LElem) -> QMatrix {
        let n = self.base.degree();
        let mut rows = Vec::with_capacity(2 * n);
        for b in self.base.integral_basis() {
            rows.push(self.mul(&self.from_k(&b), a).to_vec());
        }
        for b in self.base.integral_basis() {
            rows.push(self.mul(&LElem::new(self.base.zero(), b), a).to_vec());
        }
        rows
    }

    /// The same ring with generator `ξ + c`, `c ∈ 𝔞⁻¹`.
    pub fn translate(&self, c: &KElem) -> Result<QuadAlgebra> {
        if !self.steinitz_inv.contains(c) {
            return domain("translation must lie in the inverse Steinitz ideal");
        }
        // (ξ + c)² = (t + 2c)(ξ + c) − (u + ct + c²)
        let t = &self.t + &(c * &self.base.int(2));
        let u = &(&self.u + &(c * &self.t)) + &(c * c);
        QuadAlgebra::new(self.steinitz.clone(), t, u)
    }

    /// Canonical generator: `t` reduced into the fundamental cell of `2𝔞⁻¹`.
    /// Returns the algebra and the translation used.
    pub fn canonical(&self) -> (QuadAlgebra, KElem) {
        let two_inv = self.steinitz_inv.scale(&self.base.int(2)).unwrap();
        let coords = two_inv.lattice().coords(&self.t.to_vec());
        let zb = two_inv.zbasis();
        let shift = coords
            .iter()
            .zip(&zb)
            .fold(self.base.zero(), |acc, (c, b)| &acc + &(b * &self.base.rat(c.floor())));
        let c = (-&shift).scale(&(q(1) / q(2)));
        (self.translate(&c).expect("shift lies in the inverse Steinitz ideal"), c)
    }

    /// Same `𝔞` and generators differing by a translation in `𝔞⁻¹`.
    pub fn same_oriented_ring(&self, o: &QuadAlgebra) -> bool {
        if self.steinitz != o.steinitz {
            return false;
        }
        let c = (&o.t - &self.t).scale(&(q(1) / q(2)));
        self.steinitz_inv.contains(&c) && self.translate(&c).map(|s| s.u == o.u).unwrap_or(false)
    }

    /// Rewrites an element in terms of the generator of a translate `ξ' = ξ + c`.
    pub fn to_translate(&self, a: &LElem, c: &KElem) -> LElem {
        LElem::new(&a.x - &(&a.y * c), a.y.clone())
    }
}

impl fmt::Display for QuadAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R + {}·ξ, ξ^2 = ({})ξ - ({})", self.steinitz, self.t, self.u)
    }
}

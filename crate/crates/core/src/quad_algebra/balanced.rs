use super::{LElem, QuadAlgebra, SIdeal};
use crate::base_field::{FracIdealR, KElem};
use crate::error::{domain, Error, Result};
use num_traits::{One, Signed};

/// `(S, I, δ, s)` with `I = Rα ⊕ 𝔞β` and `π(α ∧ β) = s`.
#[derive(Clone, Debug)]
pub struct BalancedQuadruple {
    pub ring: QuadAlgebra,
    pub alpha: LElem,
    pub beta: LElem,
    pub delta: LElem,
    pub s: KElem,
}

/// Outcome of each condition checked by `verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub is_s_ideal: bool,
    pub delta_invertible: bool,
    pub cube_contained: bool,
    pub index_matches: bool,
    pub norm_matches: bool,
    pub orientation_matches: bool,
}

impl BalanceReport {
    pub fn holds(&self) -> bool {
        self.is_s_ideal
            && self.delta_invertible
            && self.cube_contained
            && self.index_matches
            && self.norm_matches
            && self.orientation_matches
    }
}

impl BalancedQuadruple {
    pub fn ideal(&self) -> SIdeal {
        SIdeal::from_steinitz_basis(&self.ring, self.alpha.clone(), self.beta.clone())
    }

    /// Builds the quadruple from an arbitrary pseudo-basis of `I`, choosing
    /// `α, β` with `π(α ∧ β) = s`.
    pub fn from_ideal(ring: QuadAlgebra, i: &SIdeal, delta: LElem, s: KElem) -> Result<Self> {
        let (alpha, beta) = ring.steinitz_decompose(i)?;
        let s0 = QuadAlgebra::wedge(&alpha, &beta);
        let unit = s.div(&s0);
        if !(unit.is_integral() && unit.norm().abs().is_one()) {
            return domain("[S:I] is not generated by s");
        }
        let beta = beta.scale(&unit);
        Ok(BalancedQuadruple { ring, alpha, beta, delta, s })
    }

    /// Checks `I³ ⊂ δS`, `[S:I] = sR`, `s³ = N(δ)` and the orientation.
    pub fn verify(&self) -> Result<BalanceReport> {
        let s = &self.ring;
        let i = self.ideal();
        let is_s_ideal = s.is_s_module(&i)?;
        let delta_invertible = s.inv(&self.delta).is_some();
        let cube_contained = if delta_invertible {
            let ds = s
                .zlattice()
                .map(&s.mult_matrix(&self.delta))
                .ok_or_else(|| Error::Internal("δS is degenerate".into()))?;
            s.cube_lattice(&i)?.is_subset_of(&ds)
        } else {
            false
        };
        let index_matches = !self.s.is_zero() && s.ideal_norm(&i)? == FracIdealR::principal(&self.s)?;
        let norm_matches = self.s.pow(3) == s.norm(&self.delta);
        let orientation_matches = QuadAlgebra::wedge(&self.alpha, &self.beta) == self.s;
        Ok(BalanceReport { is_s_ideal, delta_invertible, cube_contained, index_matches, norm_matches, orientation_matches })
    }

    /// `(S, κI, κ³δ, N(κ)s)`.
    pub fn twist(&self, kappa: &LElem) -> Result<Self> {
        let s = &self.ring;
        if s.inv(kappa).is_none() {
            return domain("twisting element must be invertible");
        }
        Ok(BalancedQuadruple {
            ring: s.clone(),
            alpha: s.mul(kappa, &self.alpha),
            beta: s.mul(kappa, &self.beta),
            delta: s.mul(&s.pow(kappa, 3), &self.delta),
            s: &s.norm(kappa) * &self.s,
        })
    }

    /// Whether `δ` is a cube in `L`.
    pub fn delta_is_cube(&self) -> Result<bool> {
        Ok(self.ring.cube_root(&self.delta)?.is_some())
    }
}

/// `I ↦ (S, I, 1, 1)` for `I` with `I³ = S` and `[S:I] = R`.
pub fn reducible_ideal_map(s: &QuadAlgebra, i: &SIdeal) -> Result<BalancedQuadruple> {
    let cube = s.cube_lattice(i)?;
    if cube != s.zlattice() {
        return domain("I^3 is not S");
    }
    if !s.ideal_norm(i)?.is_unit() {
        return domain("[S:I] is not R");
    }
    let k = s.base();
    BalancedQuadruple::from_ideal(s.clone(), i, s.one(), k.one())
}

impl QuadAlgebra {
    /// A cube root of `d` in `L`, if one exists.
    ///
    /// For `γ³ = d` with `n = N(γ)` and `T = tr(γ)`: `n³ = N(d)`,
    /// `T³ − 3nT = tr(d)` and `γ = (d + nT)/(T² − n)` when `T² ≠ n`.
    /// Elements of `K` are cubes in `L` exactly when they are cubes in `K`.
    pub fn cube_root(&self, d: &LElem) -> Result<Option<LElem>> {
        let k = self.base();
        if d.is_zero() {
            return Ok(Some(self.zero()));
        }
        if d.y.is_zero() {
            return Ok(k.cube_roots(&d.x).into_iter().next().map(|r| self.from_k(&r)));
        }
        if !self.is_field() {
            // L ≅ K × K through the two roots of X² − tX + u.
            let r = k.sqrt(&self.disc()).unwrap();
            let half = k.rat(crate::zlattice::q(1) / crate::zlattice::q(2));
            let e1 = &(&self.t + &r) * &half;
            let e2 = &(&self.t - &r) * &half;
            let c1 = k.cube_roots(&(&d.x + &(&d.y * &e1)));
            let c2 = k.cube_roots(&(&d.x + &(&d.y * &e2)));
            let (Some(a), Some(b)) = (c1.first(), c2.first()) else {
                return Ok(None);
            };
            // γ = x + yξ with x + y·e_i = root_i
            let y = (a - b).div(&(&e1 - &e2));
            let x = a - &(&y * &e1);
            let g = LElem::new(x, y);
            if self.pow(&g, 3) != *d {
                return Err(Error::Internal("split cube root failed to verify".into()));
            }
            return Ok(Some(g));
        }
        let tr = self.trace(d);
        for n in k.cube_roots(&self.norm(d)) {
            let poly = [-&tr, &n * &k.int(-3), k.zero(), k.one()];
            for t in k.roots(&poly) {
                let den = &(&t * &t) - &n;
                if den.is_zero() {
                    continue;
                }
                let g = d.add(&self.from_k(&(&n * &t))).scale(&den.inv().unwrap());
                if self.pow(&g, 3) == *d {
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }
}

use super::{LElem, QuadAlgebra};
use crate::base_field::unit_group;
use crate::error::{Error, Result};

/// Signs of the discriminant at the real places of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specification {
    pub signs: Vec<i8>,
}

impl Specification {
    /// Real places of `K` that split in `L` (positive discriminant).
    pub fn split_real_places(&self) -> u32 {
        self.signs.iter().filter(|&&s| s > 0).count() as u32
    }
}

pub fn specification(s: &QuadAlgebra) -> Specification {
    Specification { signs: s.disc().real_signs() }
}

/// Orders of the unit groups of `S` modulo cubes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCubeProfile {
    /// `|S^× / (S^×)³|`.
    pub units_mod_cubes: u64,
    /// `|S^×_{N=1} / (S^×_{N=1})³|`.
    pub norm_one_mod_cubes: u64,
    /// 1 when `S` has cube roots of unity that `R` lacks.
    pub epsilon: u32,
    pub split_real_places: u32,
}

impl QuadAlgebra {
    /// Whether `S` contains a primitive cube root of unity.
    pub fn has_cube_roots_of_unity(&self) -> bool {
        let k = self.base();
        let half = k.rat(crate::zlattice::q(1) / crate::zlattice::q(2));
        let mut ws: Vec<LElem> = Vec::new();
        if let Some(r) = k.sqrt(&k.int(-3)) {
            ws.push(self.from_k(&r));
        }
        // (x + yξ)² = −3 with y ≠ 0 forces x = −ty/2 and y² = −12/disc
        if let Some(y) = k.sqrt(&k.int(-12).div(&self.disc())) {
            if !y.is_zero() {
                let x = -&(&(&self.t * &y) * &half);
                ws.push(LElem::new(x, y));
            }
        }
        ws.iter().any(|w| {
            debug_assert_eq!(self.mul(w, w), self.from_k(&k.int(-3)));
            let z = w.sub(&self.one()).scale(&half);
            self.contains(&z)
        })
    }
}

/// Unit indices from the place data: `|S^×_{N=1}/cubes| = 3^{ε + s}` with
/// `s` the number of split real places, times `|R^×/cubes|` for all of `S^×`.
pub fn unit_cube_profile(s: &QuadAlgebra) -> Result<UnitCubeProfile> {
    if !s.is_field() {
        return Err(Error::Unsupported("unit cube profile for algebras that are not fields".into()));
    }
    let k = s.base();
    let eps = u32::from(s.has_cube_roots_of_unity() && k.d() != -3);
    let split = specification(s).split_real_places();
    let norm_one = 3u64.pow(eps + split);
    let ug = unit_group(k);
    let r_mod = 3u64.pow(ug.rank() as u32) * if ug.torsion_order % 3 == 0 { 3 } else { 1 };
    Ok(UnitCubeProfile { units_mod_cubes: norm_one * r_mod, norm_one_mod_cubes: norm_one, epsilon: eps, split_real_places: split })
}

//! Local densities of projective forms, by counting over the residue field.
//!
//! At a prime dividing `𝔞` with valuation `v`, write `a = ϖ^v a'`,
//! `c = ϖ^{-v} c'`, `d = ϖ^{-2v} d'` with a uniformizer `ϖ`. The three
//! content generators `(b² − ac)`, `(ad − bc)ϖ^v`, `(c² − bd)ϖ^{2v}` become
//! `b² − a'c'`, `a'd' − bc'`, `c'² − bd'` up to units, so in both cases a form
//! fails to be projective at `𝔭` exactly when these vanish in `R/𝔭`.

use crate::base_field::{factor_ideal, FracIdealR, PrimeIdealR};
use crate::error::{Error, Result};
use crate::zlattice::Q;
use num_bigint::BigInt;
use rayon::prelude::*;

pub const DEFAULT_RESIDUE_CAP: u64 = 49;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub prime: PrimeIdealR,
    pub residue_size: u64,
    /// `v_𝔭(𝔞)`, the rescaling exponent of the slots.
    pub steinitz_valuation: i64,
    pub projective_count: u64,
    pub total_count: u64,
    pub density: Q,
}

/// `F_p` or `F_p[w]/(w² − tw + n)`, elements indexed `x + p·y`.
#[derive(Clone, Copy)]
struct Residue {
    p: u64,
    quadratic: bool,
    t: u64,
    n: u64,
}

impl Residue {
    fn size(&self) -> u64 {
        if self.quadratic {
            self.p * self.p
        } else {
            self.p
        }
    }

    fn split(&self, e: u64) -> (u64, u64) {
        (e % self.p, e / self.p)
    }

    fn join(&self, x: u64, y: u64) -> u64 {
        x + self.p * y
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let (a0, a1) = self.split(a);
        let (b0, b1) = self.split(b);
        // w² = tw − n
        let ww = a1 * b1 % p;
        let x = (a0 * b0 + (p - self.n % p) * ww) % p;
        let y = (a0 * b1 + a1 * b0 + self.t % p * ww) % p;
        self.join(x, y)
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let (a0, a1) = self.split(a);
        let (b0, b1) = self.split(b);
        self.join((a0 + p - b0) % p, (a1 + p - b1) % p)
    }
}

fn residue_field(prime: &PrimeIdealR) -> Residue {
    let k = prime.ideal.field();
    if prime.f == 2 {
        let (t, n) = k.omega_poly();
        let p = prime.p as i64;
        Residue { p: prime.p, quadratic: true, t: t.rem_euclid(p) as u64, n: n.rem_euclid(p) as u64 }
    } else {
        Residue { p: prime.p, quadratic: false, t: 0, n: 0 }
    }
}

/// Proportion of forms in `V_𝔞 ⊗ R_𝔭` that are projective at `𝔭`.
pub fn local_density_projective(prime: &PrimeIdealR, steinitz: &FracIdealR, cap: u64) -> Result<DensityReport> {
    let size = prime.residue_size();
    if size > cap {
        return Err(Error::Unsupported(format!("residue field of size {size} exceeds the cap {cap}")));
    }
    let steinitz_valuation = factor_ideal(steinitz)?
        .into_iter()
        .find(|(q, _)| q.ideal == prime.ideal)
        .map_or(0, |(_, e)| e);
    let kf = residue_field(prime);
    let n = kf.size();
    let projective_count: u64 = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut count = 0;
            for b in 0..n {
                let bb = kf.mul(b, b);
                for c in 0..n {
                    let p0 = kf.sub(bb, kf.mul(a, c));
                    let cc = kf.mul(c, c);
                    let bc = kf.mul(b, c);
                    for d in 0..n {
                        let p1 = kf.sub(kf.mul(a, d), bc);
                        let p2 = kf.sub(cc, kf.mul(b, d));
                        if p0 != 0 || p1 != 0 || p2 != 0 {
                            count += 1;
                        }
                    }
                }
            }
            count
        })
        .sum();
    let total_count = n.pow(4);
    let density = Q::new(BigInt::from(projective_count), BigInt::from(total_count));
    Ok(DensityReport { prime: prime.clone(), residue_size: n, steinitz_valuation, projective_count, total_count, density })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_field::{primes_above, BaseField};

    fn expected(n: u64) -> Q {
        Q::new(BigInt::from(n * n - 1), BigInt::from(n * n))
    }

    #[test]
    fn rational_primes() {
        let k = BaseField::rational();
        let r = FracIdealR::unit(k);
        for (p, num) in [(2u64, 12u64), (3, 72)] {
            let pr = &primes_above(k, p).unwrap()[0];
            let rep = local_density_projective(pr, &r, DEFAULT_RESIDUE_CAP).unwrap();
            assert_eq!(rep.projective_count, num);
            assert_eq!(rep.density, expected(p));
        }
    }

    #[test]
    fn inert_and_ramified() {
        let k = BaseField::new(-1).unwrap();
        let p3 = &primes_above(k, 3).unwrap()[0];
        assert_eq!(p3.f, 2);
        let rep = local_density_projective(p3, &FracIdealR::unit(k), DEFAULT_RESIDUE_CAP).unwrap();
        assert_eq!(rep.density, expected(9));
        let k = BaseField::new(-5).unwrap();
        let p2 = primes_above(k, 2).unwrap()[0].clone();
        let rep = local_density_projective(&p2, &p2.ideal, DEFAULT_RESIDUE_CAP).unwrap();
        assert_eq!(rep.steinitz_valuation, 1);
        assert_eq!(rep.density, expected(2));
    }

    #[test]
    fn cap_enforced() {
        let k = BaseField::new(-1).unwrap();
        let p7 = &primes_above(k, 7).unwrap()[0];
        assert!(local_density_projective(p7, &FracIdealR::unit(k), 48).is_err());
    }
}

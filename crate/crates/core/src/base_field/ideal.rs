use super::{BaseField, KElem};
use crate::error::{domain, Result};
use crate::zlattice::{QLattice, QMatrix, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// A nonzero fractional ideal of `R`, stored as the HNF of its ℤ-lattice in
/// the basis `(1, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracIdealR {
    field: BaseField,
    lat: QLattice,
}

/// Matrix of `z ↦ z·a` on ℚ-coordinates.
pub(crate) fn mult_matrix(a: &KElem) -> QMatrix {
    let k = a.field();
    k.integral_basis().iter().map(|b| (b * a).to_vec()).collect()
}

impl FracIdealR {
    pub fn unit(k: BaseField) -> Self {
        Self::principal(&k.one()).unwrap()
    }

    pub fn principal(g: &KElem) -> Result<Self> {
        Self::from_generators(g.field(), std::slice::from_ref(g))
    }

    /// The `R`-module generated by `gens`.
    pub fn from_generators(k: BaseField, gens: &[KElem]) -> Result<Self> {
        let basis = k.integral_basis();
        let zgens: Vec<Vec<Q>> = gens.iter().flat_map(|g| basis.iter().map(move |b| (g * b).to_vec())).collect();
        match QLattice::from_generators(k.degree(), &zgens) {
            Some(lat) => Ok(FracIdealR { field: k, lat }),
            None => domain("the zero ideal is not a fractional ideal"),
        }
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn lattice(&self) -> &QLattice {
        &self.lat
    }

    /// The HNF ℤ-basis as field elements.
    pub fn zbasis(&self) -> Vec<KElem> {
        self.lat.basis().iter().map(|r| self.field.from_vec(r)).collect()
    }

    pub fn contains(&self, a: &KElem) -> bool {
        self.lat.contains(&a.to_vec())
    }

    pub fn is_subset_of(&self, o: &FracIdealR) -> bool {
        self.lat.is_subset_of(&o.lat)
    }

    pub fn is_integral(&self) -> bool {
        self.lat.basis().iter().flatten().all(|x| x.is_integer())
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::unit(self.field)
    }

    pub fn mul(&self, o: &FracIdealR) -> FracIdealR {
        let a = self.zbasis();
        let b = o.zbasis();
        let gens: Vec<Vec<Q>> = a.iter().flat_map(|x| b.iter().map(move |y| (x * y).to_vec())).collect();
        FracIdealR { field: self.field, lat: QLattice::from_generators(self.field.degree(), &gens).unwrap() }
    }

    pub fn add(&self, o: &FracIdealR) -> FracIdealR {
        FracIdealR { field: self.field, lat: self.lat.sum(&o.lat) }
    }

    pub fn intersect(&self, o: &FracIdealR) -> FracIdealR {
        FracIdealR { field: self.field, lat: self.lat.intersect(&o.lat) }
    }

    /// `γ·self`; fails for `γ = 0`.
    pub fn scale(&self, g: &KElem) -> Result<FracIdealR> {
        if g.is_zero() {
            return domain("scaling an ideal by zero");
        }
        let lat = self.lat.map(&mult_matrix(g)).unwrap();
        Ok(FracIdealR { field: self.field, lat })
    }

    /// `(R : self)`, which is the inverse since `R` is maximal.
    pub fn inverse(&self) -> FracIdealR {
        let mats: Vec<QMatrix> = self.zbasis().iter().map(mult_matrix).collect();
        let r = Self::unit(self.field);
        let lat = QLattice::colon(&r.lat, &mats).expect("colon of a nonzero ideal");
        FracIdealR { field: self.field, lat }
    }

    pub fn pow(&self, e: i64) -> FracIdealR {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::unit(self.field);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn div(&self, o: &FracIdealR) -> FracIdealR {
        self.mul(&o.inverse())
    }

    /// Absolute norm, a positive rational.
    pub fn norm(&self) -> Q {
        self.lat.det().abs()
    }

    /// Smallest positive integer `D` with `D·self ⊂ R`.
    pub fn denominator(&self) -> BigInt {
        self.lat.basis().iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Sum of `c_i·I_i` over the nonzero `c_i`; `None` when every `c_i` is zero.
    pub fn sum_of_scaled(terms: &[(KElem, &FracIdealR)]) -> Option<FracIdealR> {
        let mut acc: Option<FracIdealR> = None;
        for (c, i) in terms {
            if c.is_zero() {
                continue;
            }
            let t = i.scale(c).unwrap();
            acc = Some(match acc {
                None => t,
                Some(a) => a.add(&t),
            });
        }
        acc
    }

    /// Short generator list: one element when principal over ℚ, else the HNF basis.
    pub fn generators(&self) -> Vec<KElem> {
        if self.field.is_rational() {
            return self.zbasis();
        }
        if let Some(g) = super::is_principal(self) {
            return vec![g];
        }
        self.zbasis()
    }
}

impl fmt::Display for FracIdealR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.zbasis().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", g.join(","))
    }
}

/// A nonzero prime of `R` above the rational prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeIdealR {
    pub ideal: FracIdealR,
    pub p: u64,
    /// Residue degree.
    pub f: u32,
    /// Ramification index.
    pub e: u32,
}

impl PrimeIdealR {
    pub fn residue_size(&self) -> u64 {
        self.p.pow(self.f)
    }

    pub fn norm(&self) -> u64 {
        self.residue_size()
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// The primes above `p`, from the factorization of the minimal polynomial of
/// `w` modulo `p`.
pub fn primes_above(k: BaseField, p: u64) -> Result<Vec<PrimeIdealR>> {
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    let pk = k.int(p as i64);
    if k.is_rational() {
        return Ok(vec![PrimeIdealR { ideal: FracIdealR::principal(&pk)?, p, f: 1, e: 1 }]);
    }
    let (t, n) = k.omega_poly();
    let pi = p as i64;
    let roots: Vec<i64> = (0..pi).filter(|&r| (r * r - t * r + n).rem_euclid(pi) == 0).collect();
    let w = k.omega();
    let mk = |r: i64| FracIdealR::from_generators(k, &[pk.clone(), &w - &k.int(r)]);
    Ok(match roots.len() {
        0 => vec![PrimeIdealR { ideal: FracIdealR::principal(&pk)?, p, f: 2, e: 1 }],
        1 => vec![PrimeIdealR { ideal: mk(roots[0])?, p, f: 1, e: 2 }],
        _ => roots
            .iter()
            .map(|&r| Ok(PrimeIdealR { ideal: mk(r)?, p, f: 1, e: 1 }))
            .collect::<Result<Vec<_>>>()?,
    })
}

fn rational_prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in u64"));
    }
    out
}

fn valuation_integral(a: &FracIdealR, p: &PrimeIdealR) -> i64 {
    let mut a = a.clone();
    let pinv = p.ideal.inverse();
    let mut v = 0;
    while a.is_subset_of(&p.ideal) {
        a = a.mul(&pinv);
        v += 1;
    }
    v
}

/// Prime factorization with nonzero exponents, sorted by norm then HNF.
pub fn factor_ideal(a: &FracIdealR) -> Result<Vec<(PrimeIdealR, i64)>> {
    let k = a.field();
    let den = a.denominator();
    let b = a.scale(&k.rat(Q::from_integer(den.clone())))?;
    let num = b.norm().to_integer();
    let mut ps = rational_prime_factors(&(num * &den));
    ps.sort_unstable();
    ps.dedup();
    let dk = FracIdealR::principal(&k.rat(Q::from_integer(den)))?;
    let mut out = Vec::new();
    for p in ps {
        for pr in primes_above(k, p)? {
            let v = valuation_integral(&b, &pr) - valuation_integral(&dk, &pr);
            if v != 0 {
                out.push((pr, v));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::q;

    #[test]
    fn two_ramifies_in_minus_five() {
        let k = BaseField::new(-5).unwrap();
        let ps = primes_above(k, 2).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].e, 2);
        let p2 = &ps[0].ideal;
        assert_eq!(p2.norm(), q(2));
        assert_eq!(p2.mul(p2), FracIdealR::principal(&k.int(2)).unwrap());
        assert_eq!(p2.generators().len(), 2);
    }

    #[test]
    fn split_and_inert() {
        let k = BaseField::new(-5).unwrap();
        let p3 = primes_above(k, 3).unwrap();
        assert_eq!(p3.len(), 2);
        assert_eq!(p3[0].ideal.mul(&p3[1].ideal), FracIdealR::principal(&k.int(3)).unwrap());
        let gi = BaseField::new(-1).unwrap();
        let p = primes_above(gi, 3).unwrap();
        assert_eq!((p.len(), p[0].f, p[0].residue_size()), (1, 2, 9));
    }

    #[test]
    fn inverse_and_factorization() {
        let k = BaseField::new(-5).unwrap();
        let a = FracIdealR::from_generators(k, &[k.int(6), k.elem_i(2, 2)]).unwrap();
        assert!(a.mul(&a.inverse()).is_unit());
        let fac = factor_ideal(&a).unwrap();
        let mut prod = FracIdealR::unit(k);
        for (p, e) in &fac {
            prod = prod.mul(&p.ideal.pow(*e));
        }
        assert_eq!(prod, a);
        let frac = a.div(&FracIdealR::principal(&k.int(9)).unwrap());
        let fac = factor_ideal(&frac).unwrap();
        let mut prod = FracIdealR::unit(k);
        for (p, e) in &fac {
            prod = prod.mul(&p.ideal.pow(*e));
        }
        assert_eq!(prod, frac);
    }

    #[test]
    fn zero_ideal_rejected() {
        let k = BaseField::new(-5).unwrap();
        assert!(FracIdealR::from_generators(k, &[k.zero()]).is_err());
    }
}

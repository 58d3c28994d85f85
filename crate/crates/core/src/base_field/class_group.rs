use super::{primes_above, BaseField, FracIdealR, KElem};
use crate::error::{Error, Result};
use crate::zlattice::{q, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Finite unit data of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub torsion_order: u32,
    /// Generator of the roots of unity.
    pub torsion_generator: KElem,
    /// The fundamental unit `> 1` at the first real place, for real fields.
    pub fundamental: Option<KElem>,
}

impl UnitGroup {
    /// ℤ-rank of the unit group.
    pub fn rank(&self) -> usize {
        usize::from(self.fundamental.is_some())
    }
}

pub fn unit_group(k: BaseField) -> UnitGroup {
    let (n, g) = match k.d() {
        -1 => (4, k.omega()),
        -3 => (6, k.omega()),
        _ => (2, k.int(-1)),
    };
    UnitGroup { torsion_order: n, torsion_generator: g, fundamental: fundamental_unit(k) }
}

fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

/// Fundamental unit of a real quadratic field from the continued fraction
/// of `w`: the first convergent `p/q` with `p - q·w` a unit.
pub fn fundamental_unit(k: BaseField) -> Option<KElem> {
    if !k.is_real_quadratic() {
        return None;
    }
    let d = BigInt::from(k.d());
    let s = isqrt(&d);
    let (t, _) = k.omega_poly();
    let (mut pp, mut qq) = if t == 1 { (BigInt::one(), BigInt::from(2)) } else { (BigInt::zero(), BigInt::one()) };
    let (mut p2, mut p1) = (BigInt::zero(), BigInt::one());
    let (mut q2, mut q1) = (BigInt::one(), BigInt::zero());
    let w = k.omega();
    for _ in 0..100_000 {
        debug_assert!(qq.is_positive());
        let a = (&pp + &s) / &qq;
        let p = &a * &p1 + &p2;
        let qn = &a * &q1 + &q2;
        let g = &k.rat(Q::from_integer(p.clone())) - &(&w * &k.rat(Q::from_integer(qn.clone())));
        if g.norm().abs().is_one() {
            let c = g.conj();
            let cands = [g.clone(), -&g, c.clone(), -&c];
            let one = k.one();
            return cands.into_iter().find(|e| (e - &one).real_signs()[0] > 0);
        }
        p2 = std::mem::replace(&mut p1, p);
        q2 = std::mem::replace(&mut q1, qn);
        let pn = &a * &qq - &pp;
        qq = (&d - &pn * &pn) / &qq;
        pp = pn;
    }
    None
}

fn reduce_pos_def(k: BaseField, mut b1: KElem, mut b2: KElem) -> (KElem, KElem) {
    if b2.norm() < b1.norm() {
        std::mem::swap(&mut b1, &mut b2);
    }
    loop {
        let tr = (&b1 * &b2.conj()).trace();
        let m = (tr / (q(2) * b1.norm())).round();
        b2 = &b2 - &(&b1 * &k.rat(m));
        if b2.norm() < b1.norm() {
            std::mem::swap(&mut b1, &mut b2);
        } else {
            return (b1, b2);
        }
    }
}

/// A generator of `a` if it is principal.
///
/// Imaginary fields: exhaustive search of the reduced norm form. Real fields:
/// search the box where some associate of a generator must lie, using the
/// fundamental unit.
pub fn is_principal(a: &FracIdealR) -> Option<KElem> {
    let k = a.field();
    if k.is_rational() {
        return Some(a.zbasis()[0].clone());
    }
    let den = k.rat(Q::from_integer(a.denominator()));
    let b = a.scale(&den).ok()?;
    let n = b.norm();
    let zb = b.zbasis();
    let found = if k.is_imaginary() {
        let (b1, b2) = reduce_pos_def(k, zb[0].clone(), zb[1].clone());
        let aa = b1.norm().to_f64()?;
        let cc = b2.norm().to_f64()?;
        let bb = (&b1 * &b2.conj()).trace().to_f64()?;
        let nn = n.to_f64()?;
        let disc = 4.0 * aa * cc - bb * bb;
        let ymax = (4.0 * aa * nn / disc).sqrt().floor() as i64 + 1;
        let mut hit = None;
        'outer: for y in 0..=ymax {
            let xmax = ((4.0 * cc * nn / disc).sqrt()).floor() as i64 + 1 + y.abs() * 2;
            for x in -xmax..=xmax {
                if y == 0 && x <= 0 {
                    continue;
                }
                let g = &(&b1 * &k.int(x)) + &(&b2 * &k.int(y));
                if g.norm() == n {
                    hit = Some(g);
                    break 'outer;
                }
            }
        }
        hit
    } else {
        // Some associate has |σ1| <= √N·ε and |σ2| <= √N.
        let eps = fundamental_unit(k)?;
        let e1 = eps.embeddings()[0].re;
        let rn = n.to_f64()?.sqrt();
        let (b1, b2) = (rn * e1 * (1.0 + 1e-9) + 1e-9, rn * (1.0 + 1e-9) + 1e-9);
        let m: Vec<Vec<f64>> = zb.iter().map(|z| z.embeddings().iter().map(|c| c.re).collect()).collect();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let ymax = ((b1 * m[0][1].abs() + b2 * m[0][0].abs()) / det.abs()).ceil() as i64 + 1;
        let nf = n.to_f64()?;
        let mut hit = None;
        'outer2: for y in 0..=ymax {
            // |x m00 + y m10| <= b1 and |x m01 + y m11| <= b2
            let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
            for (s, t, bd) in [(m[0][0], m[1][0], b1), (m[0][1], m[1][1], b2)] {
                let (p, q) = ((-bd - y as f64 * t) / s, (bd - y as f64 * t) / s);
                lo = lo.max(p.min(q));
                hi = hi.min(p.max(q));
            }
            if lo > hi {
                continue;
            }
            for x in (lo.floor() as i64 - 1)..=(hi.ceil() as i64 + 1) {
                if y == 0 && x <= 0 {
                    continue;
                }
                let v1 = x as f64 * m[0][0] + y as f64 * m[1][0];
                let v2 = x as f64 * m[0][1] + y as f64 * m[1][1];
                if ((v1 * v2).abs() - nf).abs() > 1e-6 * nf + 0.5 {
                    continue;
                }
                let g = &(&zb[0] * &k.int(x)) + &(&zb[1] * &k.int(y));
                if g.norm().abs() == n {
                    hit = Some(g);
                    break 'outer2;
                }
            }
        }
        hit
    }?;
    let g = found.div(&den);
    debug_assert!(FracIdealR::principal(&g).ok()? == *a);
    Some(g)
}

/// `Cl(R)` with representatives and multiplication table.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    pub field: BaseField,
    /// Integral representatives; index 0 is the trivial class.
    pub reps: Vec<FracIdealR>,
    /// `table[i][j]` is the class of `reps[i]·reps[j]`.
    pub table: Vec<Vec<usize>>,
}

impl ClassGroup {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of(&self, a: &FracIdealR) -> Result<usize> {
        find_class(&self.reps, a).ok_or_else(|| Error::Internal(format!("ideal {a} matches no class")))
    }

    /// Number of classes killed by 3.
    pub fn three_torsion(&self) -> usize {
        (0..self.order()).filter(|&i| self.table[self.table[i][i]][i] == 0).count()
    }
}

fn find_class(reps: &[FracIdealR], a: &FracIdealR) -> Option<usize> {
    reps.iter().position(|r| is_principal(&a.div(r)).is_some())
}

fn minkowski_bound(k: BaseField) -> f64 {
    let dk = (k.disc() as f64).abs().sqrt();
    if k.is_imaginary() {
        2.0 / std::f64::consts::PI * dk
    } else {
        dk / 2.0
    }
}

/// Class group generated by the primes under the Minkowski bound.
pub fn class_group(k: BaseField) -> Result<ClassGroup> {
    let unit = FracIdealR::unit(k);
    if k.is_rational() {
        return Ok(ClassGroup { field: k, reps: vec![unit], table: vec![vec![0]] });
    }
    if k.is_real_quadratic() && fundamental_unit(k).is_none() {
        return Err(Error::SearchExhausted("fundamental unit".into()));
    }
    let bound = minkowski_bound(k).floor() as u64;
    let mut gens: Vec<FracIdealR> = Vec::new();
    for p in 2..=bound.max(1) {
        if let Ok(ps) = primes_above(k, p) {
            gens.extend(ps.into_iter().filter(|pr| pr.norm() <= bound).map(|pr| pr.ideal));
        }
    }
    let mut reps = vec![unit];
    let mut i = 0;
    while i < reps.len() {
        for g in &gens {
            let c = reps[i].mul(g);
            if find_class(&reps, &c).is_none() {
                reps.push(c);
            }
        }
        i += 1;
    }
    let table = (0..reps.len())
        .map(|i| {
            (0..reps.len())
                .map(|j| find_class(&reps, &reps[i].mul(&reps[j])).ok_or_else(|| Error::Internal("class table".into())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassGroup { field: k, reps, table })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: the smallest unit > 1 by direct search over y.
    fn brute_unit(d: i64) -> (i64, i64) {
        let k = BaseField::new(d).unwrap();
        let (t, n) = k.omega_poly();
        for y in 1..100000i64 {
            let mut best: Option<(f64, i64)> = None;
            // norm(x + y w) = x^2 + t x y + n y^2 = ±1, solve for x
            for sgn in [1i64, -1] {
                let disc = t * t * y * y - 4 * (n * y * y - sgn);
                if disc < 0 {
                    continue;
                }
                let r = (disc as f64).sqrt().round() as i64;
                if r * r != disc {
                    continue;
                }
                for num in [-t * y + r, -t * y - r] {
                    if num % 2 == 0 {
                        let x = num / 2;
                        let v = k.elem_i(x, y).embeddings()[0].re;
                        if v > 1.0 && best.map_or(true, |(b, _)| v < b) {
                            best = Some((v, x));
                        }
                    }
                }
            }
            if let Some((_, x)) = best {
                return (x, y);
            }
        }
        unreachable!()
    }

    #[test]
    fn fundamental_units_match_search() {
        let k = BaseField::new(2).unwrap();
        assert_eq!(fundamental_unit(k).unwrap(), k.elem_i(1, 1));
        for d in [2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 29, 31, 46, 61] {
            let k = BaseField::new(d).unwrap();
            let e = fundamental_unit(k).unwrap();
            let (x, y) = brute_unit(d);
            assert_eq!(e, k.elem_i(x, y), "d = {d}");
        }
    }

    #[test]
    fn class_numbers() {
        for (d, h) in [(-1, 1), (-2, 1), (-3, 1), (-5, 2), (-6, 2), (-23, 3), (-14, 4), (-47, 5), (-31, 3), (-15, 2), (-21, 4), (10, 2), (2, 1), (5, 1), (79, 3), (15, 2), (229, 3)] {
            let k = BaseField::new(d).unwrap();
            assert_eq!(class_group(k).unwrap().order(), h, "d = {d}");
        }
    }

    #[test]
    fn minus_five_reps() {
        let k = BaseField::new(-5).unwrap();
        let cg = class_group(k).unwrap();
        let p2 = &primes_above(k, 2).unwrap()[0].ideal;
        assert!(cg.reps[0].is_unit());
        assert_eq!(cg.reps[1], *p2);
        assert!(is_principal(p2).is_none());
        assert!(is_principal(&p2.mul(p2)).is_some());
    }

    #[test]
    fn principal_in_real_field() {
        let k = BaseField::new(10).unwrap();
        let a = FracIdealR::principal(&k.elem_i(7, 3)).unwrap();
        let g = is_principal(&a).unwrap();
        assert_eq!(FracIdealR::principal(&g).unwrap(), a);
        let p3 = &primes_above(k, 3).unwrap()[0].ideal;
        assert!(is_principal(p3).is_none());
    }
}

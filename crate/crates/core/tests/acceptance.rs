//! One PASS/FAIL line per acceptance criterion. Exits nonzero when a blocking
//! criterion fails.

use cubeclass_core::base_field::{primes_above, unit_group};
use cubeclass_core::counting_local::{
    archimedean_normal_form, class_group_oracle_z, count_cl3, enumerate_orbits, local_density_projective,
    stabilizer_order_numeric, EnumOptions, Place, DEFAULT_RESIDUE_CAP,
};
use cubeclass_core::cubic_forms::{phi_forward, phi_inverse, GroupKind};
use cubeclass_core::quad_algebra::{reducible_ideal_map, unit_cube_profile};
use cubeclass_core::rlattice::{module_index, steinitz_normalize_to, PseudoBasis};
use cubeclass_core::zlattice::Q;
use cubeclass_core::{BaseField, CubicForm, FormSpace, FracIdealR, GroupElem, KElem, LElem, PrimeIdealR, QuadAlgebra};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

const CLASS_COUNT_LIMIT: Duration = Duration::from_secs(30);
const DENSITY_LIMIT: Duration = Duration::from_secs(60);
const ROUND_TRIP_LIMIT: Duration = Duration::from_secs(300);
const IDEAL_EXAMPLE_LIMIT: Duration = Duration::from_secs(10);
/// Relative tolerance for the floating point checks.
const NUMERIC_TOL: f64 = 1e-9;
const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;

fn lib<T>(r: cubeclass_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rat(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Random element of a fractional ideal with ℤ-coordinates in `[−h, h]`.
fn sample(rng: &mut ChaCha8Rng, ideal: &FracIdealR, h: i64) -> KElem {
    let k = ideal.field();
    ideal.zbasis().iter().fold(k.zero(), |acc, b| &acc + &(b * &k.int(rng.gen_range(-h..=h))))
}

/// Random form in `V_𝔞`: `a ∈ 𝔞`, `b ∈ R`, `c ∈ 𝔞⁻¹`, `d ∈ 𝔞⁻²`.
fn sample_form(rng: &mut ChaCha8Rng, v: &FormSpace, h: i64) -> CubicForm {
    let k = v.base();
    let inv = v.steinitz_inv();
    let slots = [v.steinitz().clone(), FracIdealR::unit(k), inv.clone(), inv.mul(inv)];
    let [a, b, c, d] = slots.map(|i| sample(rng, &i, h));
    CubicForm::new(a, b, c, d)
}

fn c1_class_numbers() -> Outcome {
    let expected: [(i64, u64); 8] = [(-3, 1), (-4, 1), (-23, 3), (-31, 3), (-44, 3), (-59, 3), (-20, 1), (-24, 1)];
    let k = BaseField::rational();
    let v = FormSpace::standard(k);
    let mut slowest = Duration::ZERO;
    for (d, want) in expected {
        let t = Instant::now();
        let c = lib(count_cl3(&v, &k.int(d), &EnumOptions::default()))?;
        let el = t.elapsed();
        slowest = slowest.max(el);
        let oracle = lib(class_group_oracle_z(d))?.three_torsion as u64;
        ensure(c.order == want && oracle == want, || format!("disc {d}: count {} oracle {oracle} expected {want}", c.order))?;
        ensure(el < CLASS_COUNT_LIMIT, || format!("disc {d} took {el:?}"))?;
    }
    Ok(format!("8 discriminants agree with the oracle, slowest {slowest:.2?}"))
}

/// `|U/U³|` for the norm-one units of `ℤ[ξ]`, from a search over small
/// coordinates: the roots of unity found, times 3 when a unit of infinite
/// order turns up.
fn brute_norm_one_mod_cubes(s: &QuadAlgebra) -> u64 {
    let k = s.base();
    let bound = 40;
    let mut units = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let e = LElem::new(k.int(x), k.int(y));
            if s.norm(&e).is_one() {
                units.push(e);
            }
        }
    }
    let is_root_of_unity = |e: &LElem| (1..=12).any(|n| s.pow(e, n) == s.one());
    let torsion: Vec<&LElem> = units.iter().filter(|e| is_root_of_unity(e)).collect();
    let mut cubes: Vec<LElem> = torsion.iter().map(|e| s.pow(e, 3)).collect();
    cubes.sort_by_key(|e| e.to_string());
    cubes.dedup();
    let free = u64::from(units.len() > torsion.len());
    3u64.pow(free as u32) * (torsion.len() / cubes.len()) as u64
}

fn c2_unit_factors() -> Outcome {
    let k = BaseField::rational();
    let cases = [("Z[i]", 0, 1, 1), ("Z[zeta3]", 1, 1, 3), ("Z[sqrt 2]", 0, -2, 3)];
    let mut seen = Vec::new();
    for (name, t, u, want) in cases {
        let s = lib(QuadAlgebra::monogenic(k, k.int(t), k.int(u)))?;
        let prof = lib(unit_cube_profile(&s))?;
        let brute = brute_norm_one_mod_cubes(&s);
        ensure(prof.norm_one_mod_cubes == want && brute == want, || {
            format!("{name}: profile {} brute force {brute} expected {want}", prof.norm_one_mod_cubes)
        })?;
        seen.push(format!("{name}={want}"));
    }
    Ok(seen.join(" "))
}

/// Points of `F_p⁴` whose Hessian generators do not all vanish.
fn brute_projective_mod_p(p: i64) -> (i64, i64) {
    let mut good = 0;
    for n in 0..p.pow(4) {
        let [a, b, c, d] = [n % p, n / p % p, n / (p * p) % p, n / (p * p * p)];
        let h = [b * b - a * c, a * d - b * c, c * c - b * d];
        good += i64::from(h.iter().any(|x| x.rem_euclid(p) != 0));
    }
    (good, p.pow(4))
}

fn c3_densities() -> Outcome {
    let mut lines = Vec::new();
    let mut check = |label: String, p: &PrimeIdealR, steinitz: FracIdealR| -> Result<(), String> {
        let t = Instant::now();
        let r = lib(local_density_projective(p, &steinitz, DEFAULT_RESIDUE_CAP))?;
        let el = t.elapsed();
        let n = Q::from_integer(BigInt::from(p.norm()));
        let want = Q::from_integer(1.into()) - (n.clone() * n).recip();
        let ratio = Q::new(BigInt::from(r.projective_count), BigInt::from(r.total_count));
        ensure(r.density == want && ratio == want, || format!("{label}: {} expected {want}", r.density))?;
        ensure(el < DENSITY_LIMIT, || format!("{label} took {el:?}"))?;
        lines.push(format!("{label}={}", r.density));
        Ok(())
    };
    let z = BaseField::rational();
    for p in [2u64, 3, 5, 7] {
        let prime = lib(primes_above(z, p))?.remove(0);
        let (good, total) = brute_projective_mod_p(p as i64);
        ensure(Q::new(good.into(), total.into()) == rat(1, 1) - rat(1, (p * p) as i64), || format!("brute count at {p}"))?;
        check(format!("Z/{p}"), &prime, FracIdealR::unit(z))?;
    }
    let k5 = lib(BaseField::new(-5))?;
    let p2 = lib(primes_above(k5, 2))?;
    ensure(p2.len() == 1 && p2[0].e == 2, || "2 is not ramified in Q(sqrt -5)".into())?;
    let p2 = p2[0].clone();
    check("p2, a=R".into(), &p2, FracIdealR::unit(k5))?;
    check("p2, a=p2".into(), &p2, p2.ideal.clone())?;
    let p3 = lib(primes_above(k5, 3))?;
    ensure(p3.len() == 2, || "3 does not split in Q(sqrt -5)".into())?;
    for (i, p) in p3.iter().enumerate() {
        check(format!("p3#{i}"), p, FracIdealR::unit(k5))?;
    }
    let ki = lib(BaseField::new(-1))?;
    let inert = lib(primes_above(ki, 3))?;
    ensure(inert.len() == 1 && inert[0].norm() == 9, || "3 is not inert in Q(i)".into())?;
    check("inert 3 over Q(i)".into(), &inert[0], FracIdealR::unit(ki))?;
    Ok(lines.join(" "))
}

fn c4_round_trip() -> Outcome {
    let t = Instant::now();
    let z = BaseField::rational();
    let v = FormSpace::standard(z);
    let boxed: Vec<[i64; 4]> = (0..11i64.pow(4))
        .map(|n| [n % 11 - 5, n / 11 % 11 - 5, n / 121 % 11 - 5, n / 1331 - 5])
        .collect();
    let results: Vec<Result<bool, String>> = boxed
        .par_iter()
        .map(|c| {
            let f = CubicForm::from_ints(z, *c);
            if f.disc().is_zero() {
                return Ok(false);
            }
            let back = lib(phi_inverse(&v, &f).and_then(|q| phi_forward(&q)))?;
            ensure(back == f, || format!("{f} came back as {back}"))?;
            Ok(true)
        })
        .collect();
    let mut count = 0;
    for r in results {
        count += usize::from(r?);
    }
    let k = lib(BaseField::new(-5))?;
    let p2 = lib(primes_above(k, 2))?[0].ideal.clone();
    let v = FormSpace::new(p2);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut random = 0;
    while random < 200 {
        let f = sample_form(&mut rng, &v, 4);
        if f.disc().is_zero() {
            continue;
        }
        ensure(v.contains(&f), || format!("{f} is not in the form space"))?;
        let back = lib(phi_inverse(&v, &f).and_then(|q| phi_forward(&q)))?;
        ensure(back == f, || format!("{f} came back as {back}"))?;
        random += 1;
    }
    let el = t.elapsed();
    ensure(el < ROUND_TRIP_LIMIT, || format!("took {el:?}"))?;
    Ok(format!("{count} box forms and {random} random forms over Z[sqrt -5] with a=p2, {el:.2?}"))
}

/// Polynomials in `a, b, c, d` with integer coefficients.
type Poly = BTreeMap<[u32; 4], i64>;

fn var(i: usize) -> Poly {
    let mut e = [0; 4];
    e[i] = 1;
    Poly::from([(e, 1)])
}

fn padd(x: &Poly, y: &Poly, sign: i64) -> Poly {
    let mut out = x.clone();
    for (e, c) in y {
        *out.entry(*e).or_default() += sign * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn pmul(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e1, c1) in x {
        for (e2, c2) in y {
            let e = [0, 1, 2, 3].map(|i| e1[i] + e2[i]);
            *out.entry(e).or_default() += c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn scale(x: &Poly, s: i64) -> Poly {
    x.iter().map(|(e, c)| (*e, c * s)).filter(|(_, c)| *c != 0).collect()
}

fn peval(x: &Poly, v: [i64; 4]) -> i64 {
    x.iter().map(|(e, c)| c * (0..4).map(|i| v[i].pow(e[i])).product::<i64>()).sum()
}

fn c5_covariant_identity() -> Outcome {
    let [a, b, c, d] = [0, 1, 2, 3].map(var);
    let disc = [
        scale(&pmul(&pmul(&b, &b), &pmul(&c, &c)), -3),
        scale(&pmul(&a, &pmul(&c, &pmul(&c, &c))), 4),
        scale(&pmul(&pmul(&b, &pmul(&b, &b)), &d), 4),
        pmul(&pmul(&a, &a), &pmul(&d, &d)),
        scale(&pmul(&pmul(&a, &b), &pmul(&c, &d)), -6),
    ]
    .iter()
    .fold(Poly::new(), |acc, t| padd(&acc, t, 1));
    let p = padd(&pmul(&b, &b), &pmul(&a, &c), -1);
    let q = padd(&pmul(&a, &d), &pmul(&b, &c), -1);
    let r = padd(&pmul(&c, &c), &pmul(&b, &d), -1);
    let via_hessian = padd(&pmul(&q, &q), &scale(&pmul(&p, &r), 4), -1);
    ensure(disc == via_hessian, || "disc and the Hessian discriminant differ as polynomials".into())?;
    // both library maps have degree at most 4 in each variable, so agreement
    // on a 5⁴ grid pins them to the polynomial
    let z = BaseField::rational();
    for n in 0..625i64 {
        let pt = [n % 5 - 2, n / 5 % 5 - 2, n / 25 % 5 - 2, n / 125 - 2];
        let f = CubicForm::from_ints(z, pt);
        let (hp, hq, hr) = f.hessian();
        let want = z.int(peval(&disc, pt));
        ensure(f.disc() == want, || format!("library disc differs at {pt:?}"))?;
        ensure(&(&hq * &hq) - &(&(&hp * &hr) * &z.int(4)) == want, || format!("library Hessian differs at {pt:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    for _ in 0..10_000 {
        let pt = [(); 4].map(|_| rng.gen_range(-1_000_000i64..=1_000_000));
        let f = CubicForm::from_ints(z, pt);
        let (hp, hq, hr) = f.hessian();
        ensure(f.disc() == &(&hq * &hq) - &(&(&hp * &hr) * &z.int(4)), || format!("mismatch at {pt:?}"))?;
    }
    Ok(format!("{} monomials match, 625 grid points, 10000 random forms", disc.len()))
}

/// Units of `R` used for diagonal generators.
fn some_units(k: BaseField) -> Vec<KElem> {
    let ug = unit_group(k);
    let mut out: Vec<KElem> = (0..ug.torsion_order as i64).map(|i| ug.torsion_generator.pow(i)).collect();
    if let Some(e) = ug.fundamental {
        out.push(e.clone());
        out.push(e.inv().expect("unit"));
    }
    out
}

fn random_gl(rng: &mut ChaCha8Rng, v: &FormSpace, units: &[KElem]) -> GroupElem {
    let k = v.base();
    let mut g = GroupElem::identity(k);
    for _ in 0..3 {
        let e = match rng.gen_range(0..3) {
            0 => GroupElem::new(k.one(), sample(rng, v.steinitz(), 2), k.zero(), k.one()),
            1 => GroupElem::new(k.one(), k.zero(), sample(rng, v.steinitz_inv(), 2), k.one()),
            _ => GroupElem::diag(units[rng.gen_range(0..units.len())].clone(), units[rng.gen_range(0..units.len())].clone()),
        };
        g = g.mul(&e);
    }
    g
}

fn c6_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut report = Vec::new();
    for (name, d, steinitz_two) in [("Z", 0, false), ("Z[i]", -1, false), ("Z[sqrt -5], a=p2", -5, true), ("Z[sqrt 2]", 2, false)] {
        let k = lib(BaseField::new(d))?;
        let v = if steinitz_two { FormSpace::new(lib(primes_above(k, 2))?[0].ideal.clone()) } else { FormSpace::standard(k) };
        let units = some_units(k);
        let (mut unimodular, mut projective) = (0, 0);
        for _ in 0..1000 {
            let g = random_gl(&mut rng, &v, &units);
            let h = random_gl(&mut rng, &v, &units);
            ensure(v.in_gl(&g), || format!("{name}: {g} is not in GL"))?;
            let f = sample_form(&mut rng, &v, 3);
            let gf = lib(v.act(&g, &f))?;
            let det = g.det();
            ensure(gf.disc() == &(&det * &det) * &f.disc(), || format!("{name}: disc scaling fails for {g}"))?;
            if (&det * &det).is_one() {
                unimodular += 1;
                ensure(gf.disc() == f.disc(), || format!("{name}: disc changes under {g}"))?;
            }
            ensure(v.is_projective(&gf) == v.is_projective(&f), || format!("{name}: projectivity changes under {g}"))?;
            projective += usize::from(v.is_projective(&f));
            let lhs = lib(v.act(&g.mul(&h), &f))?;
            let rhs = lib(v.act(&h, &f).and_then(|x| v.act(&g, &x)))?;
            ensure(lhs == rhs, || format!("{name}: composition law fails for {g}, {h}"))?;
        }
        report.push(format!("{name}: 1000 elements ({unimodular} with det^2=1, {projective} projective forms)"));
    }
    Ok(report.join("; "))
}

/// `I = (2, (1 − √−11)/2)` in `ℤ[√−11]`.
fn eleven_example() -> Result<(QuadAlgebra, cubeclass_core::SIdeal), String> {
    let k = BaseField::rational();
    let s = lib(QuadAlgebra::monogenic(k, k.zero(), k.int(11)))?;
    let half = k.rat(rat(1, 2));
    let i = lib(s.ideal_from_generators(&[s.from_k(&k.int(2)), LElem::new(half.clone(), -&half)]))?;
    Ok((s, i))
}

fn c7_ideal_example() -> Outcome {
    let t = Instant::now();
    let (s, i) = eleven_example()?;
    ensure(lib(s.ideal_norm(&i))?.is_unit(), || "norm of I is not R".into())?;
    let lat = lib(s.ideal_lattice(&i))?;
    ensure(lat.det().abs() == s.zlattice().det().abs(), || "I and S have different covolumes".into())?;
    ensure(lib(s.cube_lattice(&i))? == s.zlattice(), || "I^3 is not S".into())?;
    let zb = s.ideal_zbasis(&i);
    for x in &zb {
        for y in &zb {
            for w in &zb {
                ensure(s.contains(&s.mul(&s.mul(x, y), w)), || "a triple product leaves S".into())?;
            }
        }
    }
    ensure(!s.ideal_eq(&i, &s.unit_ideal()), || "I equals S".into())?;
    let qd = lib(reducible_ideal_map(&s, &i))?;
    ensure(lib(qd.verify())?.holds(), || "the quadruple is not balanced".into())?;
    let f = lib(phi_forward(&qd))?;
    ensure(lib(f.is_reducible())?, || format!("{f} is irreducible"))?;
    let el = t.elapsed();
    ensure(el < IDEAL_EXAMPLE_LIMIT, || format!("took {el:?}"))?;
    Ok(format!("N(I)=R, I^3=S, I!=S, image {f} is reducible, {el:.2?}"))
}

/// Whether an invertible ideal of an imaginary quadratic order is principal:
/// some element has norm equal to the index of the ideal.
fn is_principal_imaginary(s: &QuadAlgebra, i: &cubeclass_core::SIdeal) -> Result<bool, String> {
    let k = s.base();
    let index = lib(s.ideal_lattice(i))?.det().abs() / s.zlattice().det().abs();
    let zb = s.ideal_zbasis(i);
    let h = 12;
    for x in -h..=h {
        for y in -h..=h {
            let e = zb[0].scale(&k.int(x)).add(&zb[1].scale(&k.int(y)));
            if !e.is_zero() && *s.norm(&e).x() == index {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn c7_nontrivial_classes_irreducible() -> Outcome {
    let k = BaseField::rational();
    let v = FormSpace::standard(k);
    let opts = EnumOptions { group: GroupKind::Sl, ..EnumOptions::default() };
    let table = lib(enumerate_orbits(&v, &k.int(-44), &opts))?;
    let mut nontrivial = 0;
    let mut reducible = Vec::new();
    for r in table.reps.iter().filter(|r| r.projective) {
        let qd = lib(phi_inverse(&v, &r.form))?;
        if !is_principal_imaginary(&qd.ring, &qd.ideal())? {
            nontrivial += 1;
            if r.reducible {
                reducible.push(r.form.to_string());
            }
        }
    }
    ensure(nontrivial > 0, || "no representative has a nontrivial ideal class".into())?;
    ensure(reducible.is_empty(), || {
        format!(
            "{} of {nontrivial} projective disc -44 representatives with nontrivial class are reducible: {}",
            reducible.len(),
            reducible.join(", ")
        )
    })?;
    Ok(format!("{nontrivial} representatives with nontrivial class, all irreducible"))
}

/// Rational root test for `a t³ + 3b t² + 3c t + d`, or `a = 0`.
fn has_linear_factor(f: [i64; 4]) -> bool {
    let [a, b, c, d] = f.map(i128::from);
    if a == 0 || d == 0 {
        return true;
    }
    let divisors = |n: i128| (1..=n.abs()).filter(move |x| n % x == 0);
    for p in divisors(d) {
        for q in divisors(a) {
            for p in [p, -p] {
                if a * p * p * p + 3 * b * p * p * q + 3 * c * p * q * q + d * q * q * q == 0 {
                    return true;
                }
            }
        }
    }
    false
}

fn c8_reducibility() -> Outcome {
    let z = BaseField::rational();
    let v = FormSpace::standard(z);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let (mut n, mut reducible) = (0, 0);
    while n < 500 {
        // small coefficients make reducible forms common enough to matter
        let h = if n % 2 == 0 { 3 } else { 20 };
        let c = [(); 4].map(|_| rng.gen_range(-h..=h));
        let f = CubicForm::from_ints(z, c);
        if f.disc().is_zero() {
            continue;
        }
        let lib_says = lib(f.is_reducible())?;
        let cube = lib(phi_inverse(&v, &f).and_then(|q| q.delta_is_cube()))?;
        let oracle = has_linear_factor(c);
        ensure(lib_says == cube && cube == oracle, || format!("{f}: is_reducible {lib_says}, cube {cube}, root test {oracle}"))?;
        n += 1;
        reducible += usize::from(oracle);
    }
    Ok(format!("500 forms agree ({reducible} reducible)"))
}

fn disc_real(f: &[f64; 4]) -> f64 {
    let [a, b, c, d] = *f;
    -3.0 * b * b * c * c + 4.0 * a * c * c * c + 4.0 * b * b * b * d + a * a * d * d - 6.0 * a * b * c * d
}

fn disc_complex(f: &[Complex64; 4]) -> Complex64 {
    let [a, b, c, d] = *f;
    -3.0 * b * b * c * c + 4.0 * a * c * c * c + 4.0 * b * b * b * d + a * a * d * d - 6.0 * a * b * c * d
}

fn c9_archimedean() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let (mut n, mut positive) = (0, 0);
    while n < 100 {
        let f = [(); 4].map(|_| rng.gen_range(-5.0..5.0));
        let dsc = disc_real(&f);
        if dsc.abs() < 1e-3 {
            continue;
        }
        let want = if dsc > 0.0 { 2 } else { 6 };
        let got = lib(stabilizer_order_numeric(&f))?;
        ensure(got == want, || format!("{f:?}: stabilizer order {got}, expected {want}"))?;
        positive += usize::from(dsc > 0.0);
        n += 1;
    }
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let (delta, place) = if i % 2 == 0 {
            let m = rng.gen_range(0.01..1000.0);
            (Complex64::new(if rng.gen_bool(0.5) { m } else { -m }, 0.0), Place::Real)
        } else {
            (Complex64::new(rng.gen_range(-1000.0..1000.0), rng.gen_range(-1000.0..1000.0)), Place::Complex)
        };
        let f = lib(archimedean_normal_form(delta, place))?;
        let err = (disc_complex(&f) - delta).norm() / delta.norm();
        worst = worst.max(err);
        ensure(err <= NUMERIC_TOL, || format!("normal form for {delta} misses by {err:e}"))?;
    }
    Ok(format!("100 stabilizers ({positive} with disc > 0), 100 normal forms, worst relative error {worst:.1e}"))
}

fn random_pseudo_basis(rng: &mut ChaCha8Rng, ideals: &[FracIdealR], k: BaseField) -> Result<PseudoBasis, String> {
    loop {
        let coeffs = vec![ideals[rng.gen_range(0..ideals.len())].clone(), ideals[rng.gen_range(0..ideals.len())].clone()];
        let vectors: Vec<Vec<KElem>> =
            (0..2).map(|_| (0..2).map(|_| k.elem_i(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect()).collect();
        if let Ok(b) = PseudoBasis::new(coeffs, vectors) {
            return Ok(b);
        }
    }
}

fn c10_steinitz() -> Outcome {
    let k = lib(BaseField::new(-5))?;
    let p2 = lib(primes_above(k, 2))?[0].ideal.clone();
    let two = lib(FracIdealR::principal(&k.int(2)))?;
    let l = lib(PseudoBasis::new(vec![p2.clone(), p2.clone()], PseudoBasis::standard(k, 2).vectors))?;
    let s = lib(steinitz_normalize_to(&l, &two))?;
    ensure(s.basis.coeffs[0].is_unit() && s.basis.coeffs[1] == two, || "normalized coefficients are not R, (2)".into())?;
    ensure(s.basis.zlattice() == l.zlattice(), || "the witness changes the module".into())?;
    for (row, vec) in s.transform.iter().zip(&s.basis.vectors) {
        let img: Vec<KElem> = (0..2).map(|j| &(&row[0] * &l.vectors[0][j]) + &(&row[1] * &l.vectors[1][j])).collect();
        ensure(img == *vec, || "the witness matrix does not produce the new vectors".into())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let p3 = lib(primes_above(k, 3))?[0].ideal.clone();
    let ideals = vec![FracIdealR::unit(k), p2.clone(), p2.inverse(), p3.clone(), p3.mul(&p2), two.clone(), lib(FracIdealR::principal(&k.elem_i(1, 1)))?];
    for _ in 0..100 {
        let [m, n, p] = [(); 3].map(|_| random_pseudo_basis(&mut rng, &ideals, k));
        let (m, n, p) = (m?, n?, p?);
        let mn = lib(module_index(&m, &n))?;
        let np = lib(module_index(&n, &p))?;
        let mp = lib(module_index(&m, &p))?;
        ensure(mp == mn.mul(&np), || "module index is not multiplicative".into())?;
        let zindex = (n.zlattice().det() / m.zlattice().det()).abs();
        ensure(mn.norm() == zindex, || format!("norm of [M:N] is {} but the lattice index is {zindex}", mn.norm()))?;
    }
    Ok("p2+p2 = R+(2) with a verified witness; 100 chains multiplicative and matching lattice indices".into())
}

fn c11_real_quadratic() -> Outcome {
    let k = BaseField::rational();
    let v = FormSpace::standard(k);
    let t = Instant::now();
    let opts = EnumOptions { group: GroupKind::Sl, ..EnumOptions::default() };
    let table = lib(enumerate_orbits(&v, &k.int(229), &opts))?;
    let c = lib(count_cl3(&v, &k.int(229), &EnumOptions::default()))?;
    let proj = table.projective_count();
    ensure(proj == 9 && c.order == 3 && c.split_real_places == 1, || {
        format!("{proj} projective orbits, count {}, s = {}", c.order, c.split_real_places)
    })?;
    Ok(format!("9 projective orbits, count 3, s = 1, {:.2?}", t.elapsed()))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, &'static str, bool, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("1", "class numbers over Z", true, c1_class_numbers),
        ("2", "unit correction factors", true, c2_unit_factors),
        ("3", "local density law", true, c3_densities),
        ("4", "round-trip exactness", true, c4_round_trip),
        ("5", "covariant identity", true, c5_covariant_identity),
        ("6", "invariance suite", true, c6_invariance),
        ("7", "order-3 ideal of Z[sqrt -11]", true, c7_ideal_example),
        ("7", "disc -44 nontrivial classes irreducible", false, c7_nontrivial_classes_irreducible),
        ("8", "reducibility and cubes", true, c8_reducibility),
        ("9", "archimedean checks", true, c9_archimedean),
        ("10", "Steinitz machinery", true, c10_steinitz),
        ("11", "real quadratic disc 229", false, c11_real_quadratic),
    ];
    let mut blocking_failures = 0;
    for (id, name, blocking, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let tag = if blocking { "" } else { " [non-blocking]" };
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {name}{tag}: {detail}"),
            Err(detail) => {
                println!("criterion {id:>2} FAIL {name}{tag}: {detail}");
                blocking_failures += usize::from(blocking);
            }
        }
    }
    if blocking_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Orbits of `SL₂(ℤ)` and `GL₂(ℤ)` on integral forms of fixed discriminant.
//!
//! A form `(a, b, c, d)` has Hessian covariant `H = (P, Q, R) =
//! (b² − ac, bc − ad, c² − bd)`, which transforms as `H ∘ g`. With `P ≠ 0`
//! the form is recovered from `(a, b)` through `Pc = Qb − Ra`,
//! `Pd = Qc − Rb`, and `(a, b)` lies on the conic `G = Ra² − Qab + Pb² = P²`.
//! Orbits with a given Hessian class are orbits of the stabilizer of `H` on
//! the points of `G` that lift to integral forms.

use crate::cubic_forms::GroupKind;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Num, ToPrimitive};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

pub(crate) type I = i128;
pub(crate) type Mat = [[I; 2]; 2];
pub(crate) type Form = [I; 4];

type B = BigInt;
type BMat = [[B; 2]; 2];
type BForm = [B; 4];

pub(crate) fn isqrt(n: I) -> Option<I> {
    if n < 0 {
        return None;
    }
    let mut x = (n as f64).sqrt() as I;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    Some(x)
}

fn exact_sqrt(n: I) -> Option<I> {
    isqrt(n).filter(|s| s * s == n)
}

#[cfg(test)]
fn gcd(a: I, b: I) -> I {
    num_integer::Integer::gcd(&a, &b)
}

fn mat_mul<T: Clone + Num>(a: &[[T; 2]; 2], b: &[[T; 2]; 2]) -> [[T; 2]; 2] {
    let e = |i: usize, j: usize| a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone();
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn det<T: Clone + Num>(m: &[[T; 2]; 2]) -> T {
    m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
}

/// Inverse of a matrix of determinant ±1.
fn unimodular_inv<T: Clone + Num>(m: &[[T; 2]; 2]) -> [[T; 2]; 2] {
    let dt = det(m);
    let z = || T::zero();
    [
        [m[1][1].clone() * dt.clone(), z() - m[0][1].clone() * dt.clone()],
        [z() - m[1][0].clone() * dt.clone(), m[0][0].clone() * dt],
    ]
}

fn big_mat(m: &Mat) -> BMat {
    m.map(|r| r.map(B::from))
}

/// `p·x² + q·xy + r·y²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Quad {
    pub p: I,
    pub q: I,
    pub r: I,
}

impl Quad {
    fn disc(&self) -> I {
        self.q * self.q - 4 * self.p * self.r
    }

    fn eval(&self, x: I, y: I) -> I {
        self.p * x * x + self.q * x * y + self.r * y * y
    }

    /// `H((x, y)g)`; note `(H∘A)∘B = H∘(BA)`.
    fn compose(&self, g: &Mat) -> Quad {
        let [[g00, g01], [g10, g11]] = *g;
        Quad {
            p: self.eval(g00, g01),
            q: 2 * self.p * g00 * g10 + self.q * (g00 * g11 + g01 * g10) + 2 * self.r * g01 * g11,
            r: self.eval(g10, g11),
        }
    }

    /// Whether `H((x, y)g) = H` for a matrix with large entries.
    fn fixed_by(&self, g: &BMat) -> bool {
        let (p, q, r) = (B::from(self.p), B::from(self.q), B::from(self.r));
        let ev = |x: &B, y: &B| &p * x * x + &q * x * y + &r * y * y;
        let [[g00, g01], [g10, g11]] = g;
        let mid = B::from(2) * &p * g00 * g10 + &q * (g00 * g11 + g01 * g10) + B::from(2) * &r * g01 * g11;
        ev(g00, g01) == p && mid == q && ev(g10, g11) == r
    }

    #[cfg(test)]
    fn content(&self) -> I {
        gcd(gcd(self.p, self.q), self.r)
    }

    fn coeffs<T: From<I>>(&self) -> [T; 3] {
        [self.p.into(), self.q.into(), self.r.into()]
    }
}

fn hessian<T: Clone + Num>(f: &[T; 4]) -> [T; 3] {
    let [a, b, c, d] = f.clone();
    [
        b.clone() * b.clone() - a.clone() * c.clone(),
        b.clone() * c.clone() - a * d.clone(),
        c.clone() * c - b * d,
    ]
}

#[cfg(test)]
pub(crate) fn hessian_cov(f: &Form) -> Quad {
    let [p, q, r] = hessian(f);
    Quad { p, q, r }
}

pub(crate) fn disc(f: &Form) -> I {
    let [a, b, c, d] = *f;
    -3 * b * b * c * c + 4 * a * c * c * c + 4 * b * b * b * d + a * a * d * d - 6 * a * b * c * d
}

/// `det(g)⁻¹ f((x, y)g)` for `g ∈ GL₂(ℤ)`.
pub(crate) fn act<T: Clone + Num>(g: &[[T; 2]; 2], f: &[T; 4]) -> [T; 4] {
    let [[g00, g01], [g10, g11]] = g.clone();
    let three = T::one() + T::one() + T::one();
    let lin = |p: &[T], l: (&T, &T)| -> Vec<T> {
        let mut out = vec![T::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            out[i] = out[i].clone() + c.clone() * l.0.clone();
            out[i + 1] = out[i + 1].clone() + c.clone() * l.1.clone();
        }
        out
    };
    // X = g00 x + g10 y, Y = g01 x + g11 y
    let coefs = [f[0].clone(), three.clone() * f[1].clone(), three.clone() * f[2].clone(), f[3].clone()];
    let mut acc: Vec<T> = vec![T::zero(); 4];
    for (j, coef) in coefs.into_iter().enumerate() {
        let mut p = vec![coef];
        for _ in 0..(3 - j) {
            p = lin(&p, (&g00, &g10));
        }
        for _ in 0..j {
            p = lin(&p, (&g01, &g11));
        }
        for (s, v) in acc.iter_mut().zip(p) {
            *s = s.clone() + v;
        }
    }
    // det = ±1, so multiplying by it divides by it
    let dt = det(g);
    let [a0, a1, a2, a3]: [T; 4] = acc.try_into().ok().expect("four coefficients");
    [a0 * dt.clone(), a1 / three.clone() * dt.clone(), a2 / three * dt.clone(), a3 * dt]
}

fn neg<T: Clone + Num>(f: &[T; 4]) -> [T; 4] {
    f.clone().map(|x| T::zero() - x)
}

/// The form with Hessian `h` and leading coefficients `(a, b)`, when integral.
fn lift<T: Clone + Num + From<I>>(h: &Quad, a: T, b: T) -> Option<[T; 4]> {
    let [p, q, r] = h.coeffs::<T>();
    let cn = q.clone() * b.clone() - r.clone() * a.clone();
    if !(cn.clone() % p.clone()).is_zero() {
        return None;
    }
    let c = cn / p.clone();
    let dn = q * c.clone() - r * b.clone();
    if !(dn.clone() % p.clone()).is_zero() {
        return None;
    }
    let f = [a, b, c, dn / p];
    (hessian(&f) == h.coeffs::<T>()).then_some(f)
}

/// Integer points `(a, b)` of `Ra² − Qab + Pb² = P²` with the given `b`.
fn conic_points_at(h: &Quad, b: I) -> Vec<(I, I)> {
    let Quad { p, q, r } = *h;
    let mut out = Vec::new();
    let Some(s) = exact_sqrt(h.disc() * b * b + 4 * r * p * p) else { return out };
    let mut roots = vec![q * b + s, q * b - s];
    roots.dedup();
    for num in roots {
        if num % (2 * r) == 0 {
            out.push((num / (2 * r), b));
        }
    }
    out
}

/// All forms with Hessian `h` and `|b| ≤ bound`.
fn lift_solutions(h: &Quad, bound: I) -> Vec<Form> {
    let rows: Vec<Vec<Form>> = (-bound..=bound)
        .into_par_iter()
        .map(|b| conic_points_at(h, b).into_iter().filter_map(|(a, b)| lift(h, a, b)).collect())
        .collect();
    rows.into_iter().flatten().collect()
}

/// Stabilizer of a positive definite `h` in `GL₂(ℤ)` or `SL₂(ℤ)`.
fn definite_stabilizer(h: &Quad, group: GroupKind) -> Vec<Mat> {
    let reps = |m: I| -> Vec<(I, I)> {
        let bound = isqrt(4 * h.p * m / (-h.disc())).unwrap() + 1;
        let mut out = Vec::new();
        for y in -bound..=bound {
            // P x² + Q y x + R y² − m = 0
            let Some(s) = exact_sqrt(h.disc() * y * y + 4 * h.p * m) else { continue };
            for num in [-h.q * y + s, -h.q * y - s] {
                if num % (2 * h.p) == 0 && !out.contains(&(num / (2 * h.p), y)) {
                    out.push((num / (2 * h.p), y));
                }
            }
        }
        out
    };
    let first = reps(h.p);
    let second = reps(h.r);
    let mut out = Vec::new();
    for &(a, b) in &first {
        for &(c, d) in &second {
            let g = [[a, b], [c, d]];
            let ok = match group {
                GroupKind::Gl => det(&g).abs() == 1,
                GroupKind::Sl => det(&g) == 1,
            };
            if ok && h.compose(&g) == *h {
                out.push(g);
            }
        }
    }
    out
}

/// Reduced positive definite forms of discriminant `d`: `0 ≤ q ≤ p ≤ r` for
/// `GL₂(ℤ)`, and `−p < q ≤ p ≤ r` with `q ≥ 0` when `p = r` for `SL₂(ℤ)`.
fn definite_classes(d: I, group: GroupKind) -> Vec<Quad> {
    let mut out = Vec::new();
    let mut p = 1;
    while 3 * p * p <= -d {
        let lo = if group == GroupKind::Gl { 0 } else { -p + 1 };
        for q in lo..=p {
            let num = q * q - d;
            if num % (4 * p) == 0 {
                let r = num / (4 * p);
                if r > p || (r == p && q >= 0) {
                    out.push(Quad { p, q, r });
                }
            }
        }
        p += 1;
    }
    out
}

/// Orbit representatives for a negative discriminant.
fn definite_orbits(d: I, group: GroupKind) -> Vec<Form> {
    let mut out = Vec::new();
    for h in definite_classes(d, group) {
        let bound = isqrt(4 * h.r * h.p * h.p / (-d)).unwrap() + 1;
        let stab = definite_stabilizer(&h, group);
        let mut seen = BTreeSet::new();
        for f in lift_solutions(&h, bound) {
            let canon = stab.iter().map(|g| act(g, &f)).min().unwrap();
            seen.insert(canon);
        }
        out.extend(seen);
    }
    out
}

/// Indefinite forms with non-square discriminant: reduction and cycles.
pub(crate) struct Indefinite {
    d: I,
    s: I,
}

impl Indefinite {
    pub(crate) fn new(d: I) -> Self {
        Indefinite { d, s: isqrt(d).unwrap() }
    }

    fn is_reduced(&self, h: &Quad) -> bool {
        let (p, q) = (h.p.abs(), h.q);
        q > 0 && q <= self.s && 2 * p + q > self.s && 2 * p <= self.s + q
    }

    /// `(x, y) ↦ (y, −x + ty)` with `t` placing the new middle coefficient in
    /// its normalizing interval.
    fn step(&self, h: &Quad) -> (Quad, Mat) {
        let r = h.r;
        let m = 2 * r.abs();
        let lo = if r.abs() * r.abs() > self.d { -r.abs() + 1 } else { self.s - m + 1 };
        let target = lo + (-h.q - lo).rem_euclid(m);
        let t = (-h.q - target) / (2 * r);
        let g = [[0, -1], [1, t]];
        (h.compose(&g), g)
    }

    fn reduce(&self, h: &Quad) -> (Quad, BMat) {
        let mut cur = *h;
        let mut g = big_mat(&[[1, 0], [0, 1]]);
        while !self.is_reduced(&cur) {
            let (n, s) = self.step(&cur);
            cur = n;
            g = mat_mul(&big_mat(&s), &g);
        }
        (cur, g)
    }

    /// The cycle of a reduced form with the cumulative transforms.
    fn cycle(&self, h: &Quad) -> Vec<(Quad, BMat)> {
        let mut g = big_mat(&[[1, 0], [0, 1]]);
        let mut out = vec![(*h, g.clone())];
        let mut cur = *h;
        loop {
            let (n, s) = self.step(&cur);
            g = mat_mul(&big_mat(&s), &g);
            out.push((n, g.clone()));
            if n == *h {
                return out;
            }
            cur = n;
        }
    }

    fn reduced_forms(&self) -> Vec<Quad> {
        let mut out = Vec::new();
        for q in 1..=self.s {
            if (q * q - self.d) % 4 != 0 {
                continue;
            }
            let n = (q * q - self.d) / 4;
            for p in 1..=((self.s + q) / 2) {
                if 2 * p + q <= self.s || n % p != 0 {
                    continue;
                }
                for sp in [p, -p] {
                    let h = Quad { p: sp, q, r: n / sp };
                    debug_assert!(self.is_reduced(&h));
                    out.push(h);
                }
            }
        }
        out.sort();
        out
    }

    /// Classes under `group`, each as a reduced representative, its proper
    /// automorph generator, and for `GL₂(ℤ)` an improper automorph when one exists.
    fn classes(&self, group: GroupKind) -> Vec<(Quad, BMat, Option<BMat>)> {
        let forms = self.reduced_forms();
        let mut cycle_of: BTreeMap<Quad, usize> = BTreeMap::new();
        let mut cycles: Vec<Vec<(Quad, BMat)>> = Vec::new();
        for h in &forms {
            if cycle_of.contains_key(h) {
                continue;
            }
            let c = self.cycle(h);
            for (x, _) in &c {
                cycle_of.insert(*x, cycles.len());
            }
            cycles.push(c);
        }
        let mut done = vec![false; cycles.len()];
        let mut out = Vec::new();
        for (i, c) in cycles.iter().enumerate() {
            if done[i] {
                continue;
            }
            let h = c[0].0;
            let auto = c.last().unwrap().1.clone();
            if group == GroupKind::Sl {
                out.push((h, auto, None));
                continue;
            }
            let iota = [[1, 0], [0, -1]];
            let (red, g1) = self.reduce(&h.compose(&iota));
            let j = cycle_of[&red];
            done[i] = true;
            done[j] = true;
            let improper = if j == i {
                // (h∘ι)∘g1 = h∘(g1·ι) = red = h∘to_red
                let (_, to_red) = c.iter().find(|(x, _)| *x == red).unwrap();
                let jm = mat_mul(&mat_mul(&unimodular_inv(to_red), &g1), &big_mat(&iota));
                debug_assert!(h.fixed_by(&jm));
                Some(jm)
            } else {
                None
            };
            out.push((h, auto, improper));
        }
        out
    }

    /// A proper automorph generator `U` of `g`, and the points of `g = n`,
    /// `n > 0`, modulo `±Uᵏ`. A primitive point is the first row of some
    /// `M ∈ SL₂(ℤ)` with `g∘M = (n, B, ·)`, and these correspond to the
    /// residues `B mod 2n` for which `(n, B, ·)` is properly equivalent to `g`.
    fn representations(&self, g: &Quad, n: I) -> (BMat, Vec<(B, B)>) {
        let (rg, gg) = self.reduce(g);
        let cyc = self.cycle(&rg);
        let u = mat_mul(&mat_mul(&unimodular_inv(&gg), &cyc.last().unwrap().1), &gg);
        debug_assert!(g.fixed_by(&u));
        let position: BTreeMap<Quad, BMat> = cyc.into_iter().collect();
        let mut points = Vec::new();
        for e in (1..).take_while(|e| e * e <= n) {
            if n % (e * e) != 0 {
                continue;
            }
            let m = n / (e * e);
            for b in 0..2 * m {
                if (b * b - self.d) % (4 * m) != 0 {
                    continue;
                }
                let f = Quad { p: m, q: b, r: (b * b - self.d) / (4 * m) };
                let (rf, gf) = self.reduce(&f);
                let Some(c) = position.get(&rf) else { continue };
                // f = rf∘gf⁻¹ = (rg∘c)∘gf⁻¹ = g∘(gf⁻¹·c·gg)
                let mm = mat_mul(&mat_mul(&unimodular_inv(&gf), c), &gg);
                let e = B::from(e);
                points.push((&mm[0][0] * &e, &mm[0][1] * &e));
            }
        }
        (u, points)
    }
}

/// Logarithmic position `ln|λ1/λ2|` of a point along the conic
/// `λ1λ2 = P²/R`; the smaller factor comes from the product to avoid
/// cancellation.
fn log_ratio(h: &Quad, a: &B, b: &B, sqrt_d: f64) -> f64 {
    let r = h.r as f64;
    let t1 = (h.q as f64 + sqrt_d) / (2.0 * r);
    let t2 = (h.q as f64 - sqrt_d) / (2.0 * r);
    let (a, b) = (a.to_f64().unwrap(), b.to_f64().unwrap());
    let (l1, l2) = (a - t1 * b, a - t2 * b);
    let prod = ((h.p as f64).powi(2) / r).abs();
    if l1.abs() >= l2.abs() {
        2.0 * l1.abs().ln() - prod.ln()
    } else {
        prod.ln() - 2.0 * l2.abs().ln()
    }
}

const MAX_WALK: usize = 100_000;

fn unit_of(m: &BMat) -> f64 {
    let tr = (&m[0][0] + &m[1][1]).to_f64().unwrap().abs();
    (tr + (tr * tr - 4.0).sqrt()) / 2.0
}

fn size(f: &BForm) -> B {
    f.iter().map(|x| x * x).sum()
}

/// Picks a small canonical member of a stabilizer orbit: over each reduced
/// Hessian of the cycle, the least member by coefficient size.
struct Canon {
    cycle: Vec<BMat>,
    auto: BMat,
    auto_inv: BMat,
    improper: Option<BMat>,
}

impl Canon {
    fn new(ind: &Indefinite, h: &Quad, auto: BMat, improper: Option<BMat>) -> Self {
        let mut cycle: Vec<BMat> = ind.cycle(h).into_iter().map(|(_, g)| g).collect();
        cycle.pop();
        Canon { cycle, auto_inv: unimodular_inv(&auto), auto, improper }
    }

    fn key(f: &BForm) -> (B, BForm) {
        let f = f.clone().min(neg(f));
        (size(&f), f)
    }

    fn sl_canon(&self, f: &BForm) -> Result<(B, BForm)> {
        // the size along the automorph orbit is a sum of exponentials in the
        // step count, so a downhill walk reaches its minimum
        let mut cur = f.clone();
        let mut best: Option<(B, BForm)> = None;
        for c in &self.cycle {
            let at = |x: &BForm| size(&act(c, x));
            for g in [&self.auto, &self.auto_inv] {
                let mut walked = 0;
                loop {
                    let next = act(g, &cur);
                    if at(&next) >= at(&cur) {
                        break;
                    }
                    cur = next;
                    walked += 1;
                    if walked > MAX_WALK {
                        return Err(Error::Internal("automorph walk did not settle".into()));
                    }
                }
            }
            let floor = at(&cur);
            let mut cands = vec![cur.clone()];
            for g in [&self.auto, &self.auto_inv] {
                let n = act(g, &cur);
                if at(&n) == floor {
                    cands.push(n);
                }
            }
            for x in cands {
                let k = Self::key(&act(c, &x));
                if best.as_ref().map_or(true, |b| k < *b) {
                    best = Some(k);
                }
            }
        }
        Ok(best.expect("nonempty cycle"))
    }

    fn canonical(&self, f: &BForm) -> Result<Form> {
        let mut best = self.sl_canon(f)?;
        if let Some(j) = &self.improper {
            best = best.min(self.sl_canon(&act(j, f))?);
        }
        let small = best.1.iter().map(|x| x.to_i128()).collect::<Option<Vec<I>>>();
        small
            .and_then(|v| v.try_into().ok())
            .ok_or_else(|| Error::Unsupported(format!("orbit representative {:?} exceeds 128 bits", best.1)))
    }
}

/// Orbit representatives for a positive non-square discriminant.
///
/// The proper automorphs of the conic `G` are `±Uᵏ`, and the automorph of `H`
/// moves the point of a form by `±Uᵐ`. Each orbit therefore contains a lift
/// of `p·Uᵏ` with `p` one of the finitely many points of `G = P²` modulo
/// `±Uᵏ` and `0 ≤ k < m`.
fn indefinite_orbits(d: I, group: GroupKind) -> Result<Vec<Form>> {
    let ind = Indefinite::new(d);
    let sqrt_d = (d as f64).sqrt();
    let mut out = Vec::new();
    for (h, auto, improper) in ind.classes(group) {
        let conic = Quad { p: h.r, q: -h.q, r: h.p };
        let (u, points) = ind.representations(&conic, h.p * h.p);
        let step = |(x, y): &(B, B)| (x * &u[0][0] + y * &u[1][0], x * &u[0][1] + y * &u[1][1]);
        // a cubic moves by the cube of the unit moving its Hessian
        let bound = ((3.0 * unit_of(&auto).ln() / unit_of(&u).ln()).round() as usize).max(1);
        let orbit_points = |k: usize| -> Vec<(B, B)> {
            let mut all = Vec::new();
            for p in &points {
                let mut cur = p.clone();
                for _ in 0..k {
                    let next = step(&cur);
                    all.push(cur);
                    cur = next;
                }
            }
            all
        };
        let Some(f0) = orbit_points(bound).into_iter().find_map(|(a, b)| lift(&h, a, b)) else {
            continue;
        };
        let p0 = (f0[0].clone(), f0[1].clone());
        let p1 = step(&p0);
        let mu0 = log_ratio(&h, &p0.0, &p0.1, sqrt_d);
        let shift_t = (log_ratio(&h, &act(&auto, &f0)[0], &act(&auto, &f0)[1], sqrt_d) - mu0).abs();
        let shift_u = (log_ratio(&h, &p1.0, &p1.1, sqrt_d) - mu0).abs();
        let ratio = shift_t / shift_u;
        let m = ratio.round() as usize;
        if m == 0 || m > bound || (ratio - m as f64).abs() > 1e-6 * ratio {
            return Err(Error::Internal(format!("automorph of {h:?} is not a power of the conic automorph")));
        }
        // the automorph must move points exactly by ±U^{±m}
        let moved = act(&auto, &f0);
        let (mut fwd, mut bwd) = (p0.clone(), p0.clone());
        let u_inv = unimodular_inv(&u);
        for _ in 0..m {
            fwd = step(&fwd);
            bwd = (&bwd.0 * &u_inv[0][0] + &bwd.1 * &u_inv[1][0], &bwd.0 * &u_inv[0][1] + &bwd.1 * &u_inv[1][1]);
        }
        let hit = [fwd, bwd].iter().any(|(x, y)| {
            (x == &moved[0] && y == &moved[1]) || (-x == moved[0] && -y == moved[1])
        });
        if !hit {
            return Err(Error::Internal(format!("automorph of {h:?} does not act through the conic")));
        }
        let canon = Canon::new(&ind, &h, auto, improper);
        let lifts: Vec<BForm> = orbit_points(m).into_iter().filter_map(|(a, b)| lift(&h, a, b)).collect();
        let forms = lifts.par_iter().map(|f| canon.canonical(f)).collect::<Result<BTreeSet<Form>>>()?;
        if group == GroupKind::Sl && forms.len() != lifts.len() {
            return Err(Error::Internal(format!("orbit window for {h:?} repeats an orbit")));
        }
        out.extend(forms);
    }
    Ok(out)
}

/// Orbit representatives under `GL₂(ℤ)` or `SL₂(ℤ)` of integral forms with
/// discriminant `d`.
pub(crate) fn orbits(d: I, group: GroupKind) -> Result<Vec<Form>> {
    if d == 0 {
        return Err(Error::Domain("discriminant must be nonzero".into()));
    }
    if d % 4 != 0 && d.rem_euclid(4) != 1 {
        return Ok(vec![]);
    }
    let mut reps = if d < 0 {
        definite_orbits(d, group)
    } else {
        if exact_sqrt(d).is_some() {
            return Err(Error::Unsupported("square discriminants (split algebras)".into()));
        }
        indefinite_orbits(d, group)?
    };
    reps.sort();
    debug_assert!(reps.iter().all(|f| disc(f) == d));
    Ok(reps)
}

#[cfg(test)]
fn is_projective(f: &Form) -> bool {
    hessian_cov(f).content() == 1
}

//! Forms over the archimedean completions and the parabolic normal form.

use crate::cubic_forms::{act_unchecked, CubicForm, GroupElem};
use crate::error::{domain, Error, Result};
use crate::numeric::poly_roots;
use num_complex::Complex64;

/// Relative tolerance for the numeric checks.
pub const TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Place {
    Real,
    Complex,
}

type C = Complex64;

fn disc_c(f: &[C; 4]) -> C {
    let [a, b, c, d] = *f;
    -3.0 * b * b * c * c + 4.0 * a * c * c * c + 4.0 * b * b * b * d + a * a * d * d - 6.0 * a * b * c * d
}

/// `|Δ|^{1/4}(3x²y + (Δ/|Δ|)/4 · y³)`, whose discriminant is `Δ`.
pub fn archimedean_normal_form(delta: C, place: Place) -> Result<[C; 4]> {
    let m = delta.norm();
    if m == 0.0 {
        return domain("Δ must be nonzero");
    }
    if place == Place::Real && delta.im != 0.0 {
        return domain("Δ must be real at a real place");
    }
    let s = m.powf(0.25);
    let f = [C::new(0.0, 0.0), C::new(s, 0.0), C::new(0.0, 0.0), delta / m * (s / 4.0)];
    let err = (disc_c(&f) - delta).norm() / m;
    if err > TOL {
        return Err(Error::Internal(format!("normal form discriminant off by {err:e}")));
    }
    Ok(f)
}

fn act_real(g: &[[f64; 2]; 2], f: &[f64; 4]) -> [f64; 4] {
    let [[g00, g01], [g10, g11]] = *g;
    let [a, b, c, d] = *f;
    let lin = |p: &[f64], l: (f64, f64)| -> Vec<f64> {
        let mut out = vec![0.0; p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            out[i] += c * l.0;
            out[i + 1] += c * l.1;
        }
        out
    };
    let mut acc = [0.0; 4];
    for (j, coef) in [a, 3.0 * b, 3.0 * c, d].into_iter().enumerate() {
        let mut p = vec![coef];
        for _ in 0..(3 - j) {
            p = lin(&p, (g00, g10));
        }
        for _ in 0..j {
            p = lin(&p, (g01, g11));
        }
        for (s, v) in acc.iter_mut().zip(p) {
            *s += v;
        }
    }
    let det = g00 * g11 - g01 * g10;
    [acc[0] / det, acc[1] / (3.0 * det), acc[2] / (3.0 * det), acc[3] / det]
}

fn norm4(f: &[f64; 4]) -> f64 {
    f.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn disc_r(f: &[f64; 4]) -> f64 {
    let c = f.map(|x| C::new(x, 0.0));
    disc_c(&c).re
}

type M2 = [[C; 2]; 2];

fn inv2(m: &M2) -> M2 {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    [[m[1][1] / det, -m[0][1] / det], [-m[1][0] / det, m[0][0] / det]]
}

fn mul2(a: &M2, b: &M2) -> M2 {
    let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn row_times(v: [C; 2], m: &M2) -> [C; 2] {
    [v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]]
}

/// Elements of `Stab_{GL₂(ℝ)}(f)`, one per permutation of the roots of `f`
/// realized by a real matrix.
pub fn stabilizer_numeric(f: &[f64; 4]) -> Result<Vec<[[f64; 2]; 2]>> {
    let scale = norm4(f);
    if scale == 0.0 || disc_r(f).abs() <= TOL * scale.powi(4) {
        return domain("discriminant is zero to working precision");
    }
    // rotate so that no root sits at infinity
    let (rot, g) = [0.0f64, 0.3, 0.7, 1.1]
        .iter()
        .map(|t| {
            let r = [[t.cos(), t.sin()], [-t.sin(), t.cos()]];
            (r, act_real(&r, f))
        })
        .find(|(_, g)| g[0].abs() > 1e-3 * norm4(g))
        .expect("some rotation moves the roots off infinity");
    let roots = poly_roots(&[C::new(g[3], 0.0), C::new(3.0 * g[2], 0.0), C::new(3.0 * g[1], 0.0), C::new(g[0], 0.0)]);
    let pts: Vec<[C; 2]> = roots.iter().map(|z| [*z, C::new(1.0, 0.0)]).collect();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for s in perms {
        let a: M2 = [pts[0], pts[1]];
        let b: M2 = [pts[s[0]], pts[s[1]]];
        let al = row_times(pts[2], &inv2(&a));
        let be = row_times(pts[s[2]], &inv2(&b));
        let l1 = be[0] * al[1] / (al[0] * be[1]);
        let d: M2 = [[l1, C::new(0.0, 0.0)], [C::new(0.0, 0.0), C::new(1.0, 0.0)]];
        let m = mul2(&mul2(&inv2(&a), &d), &b);
        let pivot = m.iter().flatten().copied().max_by(|x, y| x.norm().total_cmp(&y.norm())).unwrap();
        let m = m.map(|r| r.map(|x| x / pivot));
        if m.iter().flatten().any(|x| x.im.abs() > 1e-7) {
            continue;
        }
        let mr = m.map(|r| r.map(|x| x.re));
        let h = act_real(&mr, &g);
        let c = h.iter().zip(&g).map(|(x, y)| x * y).sum::<f64>() / g.iter().map(|x| x * x).sum::<f64>();
        let resid = norm4(&[h[0] - c * g[0], h[1] - c * g[1], h[2] - c * g[2], h[3] - c * g[3]]);
        if c.abs() < TOL || resid > 1e-7 * norm4(&h) {
            continue;
        }
        // (μg)·f = μ(g·f)
        let mr = mr.map(|r| r.map(|x| x / c));
        // g = rot·f, so rot⁻¹·mr·rot fixes f
        let rinv = [[rot[0][0], rot[1][0]], [rot[0][1], rot[1][1]]];
        let e = |a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]| -> [[f64; 2]; 2] {
            let x = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
            [[x(0, 0), x(0, 1)], [x(1, 0), x(1, 1)]]
        };
        out.push(e(&e(&rinv, &mr), &rot));
    }
    Ok(out)
}

/// `|Stab_{GL₂(ℝ)}(f)|`: 2 when `disc(f) > 0` and 6 when `disc(f) < 0`.
pub fn stabilizer_order_numeric(f: &[f64; 4]) -> Result<usize> {
    let stab = stabilizer_numeric(f)?;
    let n = stab.len();
    let rule = if disc_r(f) > 0.0 { 2 } else { 6 };
    for g in &stab {
        let h = act_real(g, f);
        let err = norm4(&[h[0] - f[0], h[1] - f[1], h[2] - f[2], h[3] - f[3]]);
        if err > 1e-6 * norm4(f) {
            return Err(Error::Internal(format!("stabilizer element misses by {err:e}")));
        }
    }
    if n != rule {
        return Err(Error::Internal(format!("found {n} stabilizer elements, sign rule says {rule}")));
    }
    Ok(n)
}

/// With `a = 0` and `b ≠ 0`, the lower unipotent move `(x, y) ↦ (x + sy, y)`,
/// `s = −c/2b`, clears `c`; when `b` is a unit `diag(b⁻¹, b)` then makes it 1.
pub fn parabolic_reduce(f: &CubicForm) -> Result<(GroupElem, CubicForm)> {
    let k = f.base();
    let [a, b, c, _] = &f.coeffs;
    if !a.is_zero() {
        return domain("leading coefficient must vanish");
    }
    if b.is_zero() {
        return domain("b must be nonzero");
    }
    let s = -&c.div(&(&k.int(2) * b));
    let mut g = GroupElem::new(k.one(), k.zero(), s, k.one());
    if crate::cubic_forms::is_unit(b) {
        let bi = b.inv().expect("nonzero");
        g = GroupElem::diag(bi, b.clone()).mul(&g);
    }
    let h = act_unchecked(&g, f);
    if !(h.coeffs[0].is_zero() && h.coeffs[2].is_zero()) || h.disc() != f.disc() {
        return Err(Error::Internal("parabolic move failed to normalize".into()));
    }
    Ok((g, h))
}

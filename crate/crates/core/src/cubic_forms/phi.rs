use super::{act_unchecked, small_elements, CubicForm, FormSpace, GroupElem};
use crate::base_field::KElem;
use crate::error::{domain, Error, Result};
use crate::quad_algebra::{BalancedQuadruple, LElem, QuadAlgebra};

/// `ζ ↦ π(1 ∧ ζ³/δ)` on `xα + yβ`: the coefficients are the `ξ`-parts of
/// `α³/δ, α²β/δ, αβ²/δ, β³/δ`.
pub fn phi_forward(q: &BalancedQuadruple) -> Result<CubicForm> {
    let s = &q.ring;
    let di = s.inv(&q.delta).ok_or_else(|| Error::Domain("δ is not invertible".into()))?;
    let a = &q.alpha;
    let b = &q.beta;
    let a2 = s.mul(a, a);
    let b2 = s.mul(b, b);
    let terms = [s.mul(&a2, a), s.mul(&a2, b), s.mul(a, &b2), s.mul(&b2, b)];
    let c: Vec<KElem> = terms.iter().map(|t| s.mul(t, &di).y).collect();
    Ok(CubicForm::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
}

/// The balanced quadruple whose image is `f`, with ring `ξ² = q'ξ − pr` where
/// `(p, q, r)` is the Hessian of `f` and `q' = bc − ad = −q`.
pub fn phi_inverse(v: &FormSpace, f: &CubicForm) -> Result<BalancedQuadruple> {
    v.check(f)?;
    if f.disc().is_zero() {
        return domain("degenerate form");
    }
    let (p, q, r) = f.hessian();
    let q = -&q;
    let ring = QuadAlgebra::new(v.steinitz().clone(), q.clone(), &p * &r)?;
    if !(p.is_zero() || r.is_zero()) {
        return core(&ring, f);
    }
    // Move to coordinates where both p and r are nonzero, then pull back.
    let g = normalizing_move(v, f)?;
    let f2 = act_unchecked(&g, f);
    let (p2, q2, r2) = f2.hessian();
    let q2 = -&q2;
    let ring2 = QuadAlgebra::new(v.steinitz().clone(), q2.clone(), &p2 * &r2)?;
    let q2d = core(&ring2, &f2)?;
    let gi = g.inverse().expect("unimodular");
    // (x, y)g⁻¹ applied to (α', β')
    let [[n00, n01], [n10, n11]] = &gi.m;
    let alpha = q2d.alpha.scale(n00).add(&q2d.beta.scale(n01));
    let beta = q2d.alpha.scale(n10).add(&q2d.beta.scale(n11));
    // ring2 is the translate of ring by c = (q2 − q)/2
    let c = (&q2 - &q).scale(&(crate::zlattice::q(1) / crate::zlattice::q(2)));
    let back = |e: &LElem| ring2.to_translate(e, &-&c);
    let out = BalancedQuadruple {
        ring: ring.clone(),
        alpha: back(&alpha),
        beta: back(&beta),
        delta: back(&q2d.delta),
        s: QuadAlgebra::wedge(&alpha, &beta),
    };
    if phi_forward(&out)? != *f {
        return Err(Error::Internal("pulled back quadruple does not reproduce the form".into()));
    }
    Ok(out)
}

/// `α = c1 + a1ξ`, `β = c2 + a2ξ` and `δ` from `α^{3−j}β^j = δ(c_j + a_jξ)`,
/// valid when `pr ≠ 0`.
fn core(ring: &QuadAlgebra, f: &CubicForm) -> Result<BalancedQuadruple> {
    let (p, _, r) = f.hessian();
    let q = ring.t();
    let [a0, a1, a2, _] = &f.coeffs;
    let c = [&(a1 * &p) - &(a0 * q), -&(a0 * &r), -&(a1 * &r), -&(a2 * &r)];
    let den: Vec<LElem> = c.iter().zip(&f.coeffs).map(|(c, a)| LElem::new(c.clone(), a.clone())).collect();
    let alpha = den[1].clone();
    let beta = den[2].clone();
    let a2b = ring.mul(&alpha, &alpha);
    let b2 = ring.mul(&beta, &beta);
    let num = [ring.mul(&a2b, &alpha), ring.mul(&a2b, &beta), ring.mul(&alpha, &b2), ring.mul(&b2, &beta)];
    let j = (0..4)
        .find(|&j| ring.inv(&den[j]).is_some())
        .ok_or_else(|| Error::Internal("no invertible denominator".into()))?;
    let delta = ring.div(&num[j], &den[j]).unwrap();
    for k in 0..4 {
        if num[k] != ring.mul(&delta, &den[k]) {
            return Err(Error::Internal(format!("relation {k} fails for δ")));
        }
    }
    let s = QuadAlgebra::wedge(&alpha, &beta);
    Ok(BalancedQuadruple { ring: ring.clone(), alpha, beta, delta, s })
}

/// The first `g ∈ SL(R ⊕ 𝔞)` in height order with both end coefficients of
/// the Hessian of `g·f` nonzero.
fn normalizing_move(v: &FormSpace, f: &CubicForm) -> Result<GroupElem> {
    let (p, q, r) = f.hessian();
    // the Hessian transforms as p·x² − q·xy + r·y² evaluated on the rows of g
    let h = |x: &KElem, y: &KElem| &(&(&p * &(x * x)) - &(&q * &(x * y))) + &(&r * &(y * y));
    let rints = small_elements(&crate::base_field::FracIdealR::unit(v.base()), 2);
    let upper = small_elements(v.steinitz(), 2);
    let lower = small_elements(v.steinitz_inv(), 2);
    let first: Vec<(KElem, KElem)> = rints
        .iter()
        .flat_map(|a| upper.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| !h(a, b).is_zero())
        .collect();
    let second: Vec<(KElem, KElem)> = lower
        .iter()
        .flat_map(|c| rints.iter().map(move |d| (c.clone(), d.clone())))
        .filter(|(c, d)| !h(c, d).is_zero())
        .collect();
    for (a, b) in &first {
        for (c, d) in &second {
            let g = GroupElem::new(a.clone(), b.clone(), c.clone(), d.clone());
            if g.det().is_one() {
                return Ok(g);
            }
        }
    }
    Err(Error::SearchExhausted("no small coordinate change makes the Hessian ends nonzero".into()))
}

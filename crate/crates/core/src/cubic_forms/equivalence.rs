use super::{act_unchecked, is_unit, small_elements, CubicForm, FormSpace, GroupElem};
use crate::base_field::{FracIdealR, KElem};
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Sl,
    Gl,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// A group element `g` with `g·f = h`.
    Witness(GroupElem),
    /// An invariant that separates the orbits.
    Distinct(String),
    /// The bounded search found nothing and no invariant separates the forms.
    Inconclusive,
}

fn invariant_gap(v: &FormSpace, f: &CubicForm, h: &CubicForm, group: GroupKind) -> Option<String> {
    let (df, dh) = (f.disc(), h.disc());
    match group {
        GroupKind::Sl if df != dh => return Some("disc".into()),
        GroupKind::Gl => {
            // disc(g·f) = det(g)²·disc(f)
            let same = if df.is_zero() || dh.is_zero() { df == dh } else { is_unit(&dh.div(&df)) && dh.div(&df).field().is_square(&dh.div(&df)) };
            if !same {
                return Some("disc".into());
            }
        }
        _ => {}
    }
    if v.hessian_content(f) != v.hessian_content(h) {
        return Some("hessian content".into());
    }
    if !df.is_zero() && f.is_reducible().ok() != h.is_reducible().ok() {
        return Some("reducibility".into());
    }
    None
}

/// Decides whether `h` lies in the orbit of `f`, searching matrices whose
/// entries have ℤ-coordinates bounded by `height`.
///
/// The first row `(m00, m01)` must satisfy `f(m00, m01) = det·h.a` and the
/// second `f(m10, m11) = det·h.d`, so rows are filtered before pairing.
pub fn equivalent(v: &FormSpace, f: &CubicForm, h: &CubicForm, group: GroupKind, height: i64) -> Equivalence {
    if f == h {
        return Equivalence::Witness(GroupElem::identity(v.base()));
    }
    if let Some(reason) = invariant_gap(v, f, h, group) {
        return Equivalence::Distinct(reason);
    }
    let r = FracIdealR::unit(v.base());
    let rints = small_elements(&r, height);
    let upper = small_elements(v.steinitz(), height);
    let lower = small_elements(v.steinitz_inv(), height);
    let ha = &h.coeffs[0];
    let hd = &h.coeffs[3];
    let unit_multiple = |x: &KElem, target: &KElem| -> bool {
        if target.is_zero() {
            x.is_zero()
        } else {
            let u = x.div(target);
            is_unit(&u) && (group == GroupKind::Gl || u.is_one())
        }
    };
    let first: Vec<(KElem, KElem)> = rints
        .iter()
        .flat_map(|a| upper.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| unit_multiple(&f.eval(a, b), ha))
        .collect();
    let second: Vec<(KElem, KElem)> = lower
        .iter()
        .flat_map(|c| rints.iter().map(move |d| (c.clone(), d.clone())))
        .filter(|(c, d)| unit_multiple(&f.eval(c, d), hd))
        .collect();
    let found = first.par_iter().find_map_first(|(a, b)| {
        second.iter().find_map(|(c, d)| {
            let g = GroupElem::new(a.clone(), b.clone(), c.clone(), d.clone());
            let det = g.det();
            let ok = match group {
                GroupKind::Sl => det.is_one(),
                GroupKind::Gl => is_unit(&det),
            };
            (ok && act_unchecked(&g, f) == *h).then_some(g)
        })
    });
    match found {
        Some(g) => Equivalence::Witness(g),
        None => Equivalence::Inconclusive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_field::BaseField;

    #[test]
    fn basic_cases() {
        let k = BaseField::rational();
        let v = FormSpace::standard(k);
        let f = CubicForm::from_ints(k, [1, 2, -1, 3]);
        assert_eq!(equivalent(&v, &f, &f, GroupKind::Sl, 1), Equivalence::Witness(GroupElem::identity(k)));
        let u = GroupElem::diag(k.int(-1), k.one());
        let g = v.act(&u, &f).unwrap();
        match equivalent(&v, &f, &g, GroupKind::Gl, 1) {
            Equivalence::Witness(w) => assert_eq!(v.act(&w, &f).unwrap(), g),
            other => panic!("{other:?}"),
        }
        let a = CubicForm::from_ints(k, [1, 1, 0, 1]);
        let b = CubicForm::from_ints(k, [1, 0, 0, 2]);
        assert_ne!(a.disc(), b.disc());
        assert!(matches!(equivalent(&v, &a, &b, GroupKind::Gl, 2), Equivalence::Distinct(_)));
    }

    #[test]
    fn finds_nontrivial_witness() {
        let k = BaseField::rational();
        let v = FormSpace::standard(k);
        let f = CubicForm::from_ints(k, [1, 0, -1, 1]);
        let g = GroupElem::from_ints(k, [[2, 1], [1, 1]]);
        let h = v.act(&g, &f).unwrap();
        match equivalent(&v, &f, &h, GroupKind::Sl, 2) {
            Equivalence::Witness(w) => assert_eq!(v.act(&w, &f).unwrap(), h),
            other => panic!("{other:?}"),
        }
    }
}

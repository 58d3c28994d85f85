//! Orbit tables at fixed discriminant, 3-torsion counts, local densities and
//! the archimedean normal forms.

mod archimedean;
mod density;
pub(crate) mod integral;
mod oracle;

pub use archimedean::{archimedean_normal_form, parabolic_reduce, stabilizer_order_numeric, Place};
pub use density::{local_density_projective, DensityReport, DEFAULT_RESIDUE_CAP};
pub use oracle::{class_group_oracle_z, OracleReport};

use crate::base_field::{BaseField, KElem};
use crate::cubic_forms::{equivalent, small_elements, CubicForm, Equivalence, FormSpace, GroupKind};
use crate::error::{domain, Error, Result};
use crate::quad_algebra::{unit_cube_profile, QuadAlgebra};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[derive(Clone, Debug)]
pub struct EnumOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Coordinate height of the experimental search over imaginary quadratic bases.
    pub height: i64,
    /// Orbits of `SL(R ⊕ 𝔞)` or of `GL(R ⊕ 𝔞)`.
    pub group: GroupKind,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { workers: None, height: 1, group: GroupKind::Gl }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRep {
    pub form: CubicForm,
    pub projective: bool,
    pub reducible: bool,
}

#[derive(Clone, Debug)]
pub struct OrbitTable {
    pub space: FormSpace,
    pub disc: KElem,
    pub group: GroupKind,
    pub reps: Vec<OrbitRep>,
    /// `#Cl(S/R)[3]`, from the projective `SL(R ⊕ 𝔞)`-orbits over `3^{s+ε}`;
    /// `None` when the algebra is not a field.
    pub count_cl3: Option<u64>,
    /// Set for imaginary quadratic bases, where completeness is not certified.
    pub experimental: bool,
}

impl OrbitTable {
    pub fn projective_count(&self) -> usize {
        self.reps.iter().filter(|r| r.projective).count()
    }
}

/// Orbit count split as `orbits = order · 3^{s+ε}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cl3Count {
    pub projective_orbits: u64,
    pub split_real_places: u32,
    pub epsilon: u32,
    pub order: u64,
}

fn run<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// A quadratic algebra `R + 𝔞ξ` with discriminant `disc`.
pub fn algebra_with_disc(v: &FormSpace, disc: &KElem) -> Result<QuadAlgebra> {
    let k = v.base();
    let four = k.int(4);
    for t in small_elements(v.steinitz_inv(), 2) {
        let u = (&(&t * &t) - disc).div(&four);
        if v.steinitz_inv().mul(v.steinitz_inv()).contains(&u) {
            return QuadAlgebra::new(v.steinitz().clone(), t, u);
        }
    }
    domain(format!("no quadratic algebra with Steinitz ideal {} has discriminant {disc}", v.steinitz()))
}

/// Complete orbit representatives of forms with discriminant `disc`.
pub fn enumerate_orbits(v: &FormSpace, disc: &KElem, opts: &EnumOptions) -> Result<OrbitTable> {
    let mut table = orbit_table(v, disc, opts)?;
    let s = algebra_with_disc(v, disc)?;
    if s.is_field() {
        let sl = if opts.group == GroupKind::Sl {
            table.projective_count()
        } else {
            orbit_table(v, disc, &EnumOptions { group: GroupKind::Sl, ..opts.clone() })?.projective_count()
        };
        table.count_cl3 = Some(split_count(&s, sl as u64)?.order);
    }
    Ok(table)
}

fn orbit_table(v: &FormSpace, disc: &KElem, opts: &EnumOptions) -> Result<OrbitTable> {
    let k = v.base();
    if disc.is_zero() {
        return domain("discriminant must be nonzero");
    }
    let a2inv = v.steinitz_inv().mul(v.steinitz_inv());
    if !a2inv.contains(disc) {
        return domain(format!("discriminant {disc} is not in 𝔞⁻²"));
    }
    let (forms, experimental) = if k.is_rational() {
        (run(opts.workers, || rational_orbits(v, disc, opts.group))??, false)
    } else if k.is_imaginary() {
        (run(opts.workers, || box_orbits(v, disc, opts.height, opts.group))??, true)
    } else {
        return Err(Error::Unsupported("orbit enumeration over real quadratic bases".into()));
    };
    let reps = forms
        .into_iter()
        .map(|f| {
            let reducible = f.is_reducible()?;
            Ok(OrbitRep { projective: v.is_projective(&f), reducible, form: f })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitTable { space: v.clone(), disc: disc.clone(), group: opts.group, reps, count_cl3: None, experimental })
}

fn split_count(s: &QuadAlgebra, orbits: u64) -> Result<Cl3Count> {
    let prof = unit_cube_profile(s)?;
    let div = 3u64.pow(prof.split_real_places + prof.epsilon);
    if orbits % div != 0 {
        return Err(Error::Internal(format!("{orbits} projective orbits is not divisible by {div}")));
    }
    Ok(Cl3Count {
        projective_orbits: orbits,
        split_real_places: prof.split_real_places,
        epsilon: prof.epsilon,
        order: orbits / div,
    })
}

/// `#Cl(S/R)[3]` from the projective `SL(R ⊕ 𝔞)`-orbit count.
pub fn count_cl3(v: &FormSpace, disc: &KElem, opts: &EnumOptions) -> Result<Cl3Count> {
    let s = algebra_with_disc(v, disc)?;
    if !s.is_field() {
        return Err(Error::Unsupported("count_cl3 needs an order in a quadratic field".into()));
    }
    let table = orbit_table(v, disc, &EnumOptions { group: GroupKind::Sl, ..opts.clone() })?;
    split_count(&s, table.projective_count() as u64)
}

/// Over ℚ the Steinitz ideal is `gℤ`; conjugating by `diag(1, g)` identifies
/// `V_𝔞` with integral forms of discriminant `disc·g²`.
fn rational_orbits(v: &FormSpace, disc: &KElem, group: GroupKind) -> Result<Vec<CubicForm>> {
    let k = v.base();
    let g = v.steinitz().zbasis()[0].clone();
    let scaled = (disc * &(&g * &g)).x().clone();
    if !scaled.is_integer() {
        return domain("discriminant is not integral after rescaling");
    }
    let d = scaled
        .to_integer()
        .to_i128()
        .filter(|d| d.abs() < 1 << 40)
        .ok_or_else(|| Error::Unsupported("discriminant too large".into()))?;
    let to_k = |n: i128| k.rat(crate::zlattice::Q::from_integer(BigInt::from(n)));
    let gi = g.inv().expect("nonzero generator");
    let forms = integral::orbits(d, group)?
        .into_iter()
        .map(|[a, b, c, dd]| CubicForm::new(&to_k(a) * &g, to_k(b), &to_k(c) * &gi, &(&to_k(dd) * &gi) * &gi))
        .collect();
    Ok(forms)
}

/// Experimental search over an imaginary quadratic base: `a, b, c` range over
/// small elements of `𝔞, R, 𝔞⁻¹`, `d` solves the discriminant equation, and
/// candidates are merged with the equivalence search.
fn box_orbits(v: &FormSpace, disc: &KElem, height: i64, group: GroupKind) -> Result<Vec<CubicForm>> {
    use rayon::prelude::*;
    let k = v.base();
    let ra = small_elements(v.steinitz(), height);
    let rr = small_elements(&crate::base_field::FracIdealR::unit(k), height);
    let rc = small_elements(v.steinitz_inv(), height);
    let mut triples: Vec<(KElem, KElem, KElem)> = Vec::new();
    for a in &ra {
        for b in &rr {
            for c in &rc {
                triples.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    let mut cands: Vec<CubicForm> = triples
        .par_iter()
        .flat_map_iter(|(a, b, c)| solve_d(k, disc, a, b, c).into_iter().map(|d| CubicForm::new(a.clone(), b.clone(), c.clone(), d)))
        .filter(|f| v.contains(f))
        .collect();
    cands.sort_by_key(|f| f.to_string());
    cands.dedup();
    let mut reps: Vec<CubicForm> = Vec::new();
    for f in cands {
        let known = reps
            .par_iter()
            .any(|r| matches!(equivalent(v, r, &f, group, height.max(1)), Equivalence::Witness(_)));
        if !known {
            reps.push(f);
        }
    }
    Ok(reps)
}

fn solve_d(k: BaseField, disc: &KElem, a: &KElem, b: &KElem, c: &KElem) -> Vec<KElem> {
    // disc = a²d² + (4b³ − 6abc)d + 4ac³ − 3b²c²
    let b3 = &(b * b) * b;
    let lin = &(&k.int(4) * &b3) - &(&k.int(6) * &(&(a * b) * c));
    let c3 = &(c * c) * c;
    let cst = &(&(&k.int(4) * &(a * &c3)) - &(&k.int(3) * &(&(b * b) * &(c * c)))) - disc;
    if a.is_zero() {
        if lin.is_zero() {
            return vec![];
        }
        return vec![-&cst.div(&lin)];
    }
    k.roots(&[cst, lin, a * a])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> BaseField {
        BaseField::rational()
    }

    #[test]
    fn small_tables() {
        let v = FormSpace::standard(z());
        let t = enumerate_orbits(&v, &z().int(-4), &EnumOptions::default()).unwrap();
        assert_eq!(t.projective_count(), 1);
        assert_eq!(t.count_cl3, Some(1));
        let rep = CubicForm::from_ints(z(), [0, 1, 0, -1]);
        let p = t.reps.iter().find(|r| r.projective).unwrap();
        assert!(matches!(equivalent(&v, &p.form, &rep, GroupKind::Gl, 2), Equivalence::Witness(_)));
        let sl = EnumOptions { group: GroupKind::Sl, ..EnumOptions::default() };
        // conjugation identifies a class with its inverse under GL
        for (d, n_sl, n_gl, c) in [(-3, 3, 2, 1), (-23, 3, 2, 3), (-44, 3, 2, 3)] {
            let t = enumerate_orbits(&v, &z().int(d), &sl).unwrap();
            assert_eq!((t.projective_count(), t.count_cl3), (n_sl, Some(c)), "disc {d}");
            let t = enumerate_orbits(&v, &z().int(d), &EnumOptions::default()).unwrap();
            assert_eq!((t.projective_count(), t.count_cl3), (n_gl, Some(c)), "disc {d}");
            assert!(t.reps.iter().all(|r| r.form.disc() == z().int(d)));
        }
    }

    #[test]
    fn representatives_pairwise_inequivalent() {
        let v = FormSpace::standard(z());
        let t = enumerate_orbits(&v, &z().int(-108), &EnumOptions::default()).unwrap();
        for (i, x) in t.reps.iter().enumerate() {
            for y in &t.reps[i + 1..] {
                assert!(!matches!(equivalent(&v, &x.form, &y.form, GroupKind::Gl, 3), Equivalence::Witness(_)));
            }
        }
    }

    #[test]
    fn box_forms_land_in_enumerated_orbits() {
        let v = FormSpace::standard(z());
        let sl = EnumOptions { group: GroupKind::Sl, ..EnumOptions::default() };
        for d in [-23i64, -31, -44] {
            let t = enumerate_orbits(&v, &z().int(d), &sl).unwrap();
            let mut hits = 0;
            for a in -2..=2i64 {
                for b in -2..=2 {
                    for c in -2..=2 {
                        for dd in -3..=3 {
                            let f = CubicForm::from_ints(z(), [a, b, c, dd]);
                            if f.disc() != z().int(d) {
                                continue;
                            }
                            hits += 1;
                            let found = t.reps.iter().any(|r| matches!(equivalent(&v, &r.form, &f, GroupKind::Sl, 4), Equivalence::Witness(_)));
                            assert!(found, "{f} of disc {d} matches no representative");
                        }
                    }
                }
            }
            assert!(hits > 0);
        }
    }

    #[test]
    fn scaled_steinitz_over_rationals() {
        let k = z();
        let two = crate::base_field::FracIdealR::principal(&k.int(2)).unwrap();
        let v = FormSpace::new(two);
        let d = k.rat(crate::zlattice::q(-23) / crate::zlattice::q(4));
        let t = enumerate_orbits(&v, &d, &EnumOptions::default()).unwrap();
        assert_eq!(t.count_cl3, Some(3));
        assert!(t.reps.iter().all(|r| v.contains(&r.form) && r.form.disc() == d));
    }

    #[test]
    fn deterministic_with_workers() {
        let v = FormSpace::standard(z());
        let a = enumerate_orbits(&v, &z().int(-59), &EnumOptions { workers: Some(1), ..EnumOptions::default() }).unwrap();
        let b = enumerate_orbits(&v, &z().int(-59), &EnumOptions { workers: Some(4), ..EnumOptions::default() }).unwrap();
        assert_eq!(a.reps, b.reps);
    }

    #[test]
    fn zero_disc_rejected() {
        let v = FormSpace::standard(z());
        assert!(enumerate_orbits(&v, &z().zero(), &EnumOptions::default()).is_err());
    }
}

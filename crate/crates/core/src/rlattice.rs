//! Finitely generated torsion-free `R`-modules given by pseudo-bases
//! `⊕ 𝔟_i·v_i` with `v_i ∈ K^m`.

use crate::base_field::{is_principal, BaseField, FracIdealR, KElem};
use crate::error::{domain, Error, Result};
use crate::zlattice::{express_integral, QLattice, Q};

/// A pseudo-basis `(𝔟_i, v_i)` of a full-rank module in `K^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoBasis {
    pub coeffs: Vec<FracIdealR>,
    pub vectors: Vec<Vec<KElem>>,
}

/// Determinant of a square matrix over `K`.
pub fn det_k(k: BaseField, m: &[Vec<KElem>]) -> KElem {
    let n = m.len();
    let mut a: Vec<Vec<KElem>> = m.to_vec();
    let mut det = k.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return k.zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        let p = a[col][col].clone();
        det = &det * &p;
        let pinv = p.inv().unwrap();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &pinv;
            for j in col..n {
                let x = &f * &a[col][j];
                a[r][j] = &a[r][j] - &x;
            }
        }
    }
    det
}

fn lincomb(k: BaseField, coeffs: &[KElem], vecs: &[Vec<KElem>]) -> Vec<KElem> {
    let m = vecs[0].len();
    (0..m)
        .map(|j| coeffs.iter().zip(vecs).fold(k.zero(), |acc, (c, v)| &acc + &(c * &v[j])))
        .collect()
}

impl PseudoBasis {
    /// Checks that there is one coefficient ideal per vector and that the
    /// vectors form a basis of `K^m`.
    pub fn new(coeffs: Vec<FracIdealR>, vectors: Vec<Vec<KElem>>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() != vectors.len() {
            return domain("pseudo-basis needs one ideal per vector");
        }
        let m = vectors[0].len();
        if vectors.iter().any(|v| v.len() != m) || m != vectors.len() {
            return domain("pseudo-basis vectors must form a square system");
        }
        let k = coeffs[0].field();
        if det_k(k, &vectors).is_zero() {
            return domain("pseudo-basis vectors are linearly dependent");
        }
        Ok(PseudoBasis { coeffs, vectors })
    }

    /// `R^m` with the standard basis.
    pub fn standard(k: BaseField, m: usize) -> Self {
        let vectors = (0..m).map(|i| (0..m).map(|j| if i == j { k.one() } else { k.zero() }).collect()).collect();
        PseudoBasis { coeffs: vec![FracIdealR::unit(k); m], vectors }
    }

    pub fn field(&self) -> BaseField {
        self.coeffs[0].field()
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// The module as a ℤ-lattice in `ℚ^{m·deg K}`.
    pub fn zlattice(&self) -> QLattice {
        let n = self.field().degree();
        let m = self.rank();
        let mut gens = Vec::new();
        for (c, v) in self.coeffs.iter().zip(&self.vectors) {
            for b in c.zbasis() {
                gens.push(v.iter().flat_map(|x| (&b * x).to_vec()).collect::<Vec<Q>>());
            }
        }
        QLattice::from_generators(n * m, &gens).expect("pseudo-basis spans a full-rank lattice")
    }

    pub fn same_module(&self, o: &PseudoBasis) -> bool {
        self.zlattice() == o.zlattice()
    }

    /// Product of the coefficient ideals; its class is the Steinitz class.
    pub fn steinitz_ideal(&self) -> FracIdealR {
        let k = self.field();
        self.coeffs.iter().fold(FracIdealR::unit(k), |acc, c| acc.mul(c))
    }

    pub fn vector_det(&self) -> KElem {
        det_k(self.field(), &self.vectors)
    }
}

/// A normalized pseudo-basis with the `K`-matrix `T` such that
/// `new_vectors[i] = Σ_j T[i][j]·old_vectors[j]`.
#[derive(Clone, Debug)]
pub struct SteinitzForm {
    pub basis: PseudoBasis,
    pub transform: Vec<Vec<KElem>>,
}

/// `x ∈ i`, `y ∈ j` with `x + y = 1`, when `i + j = R`.
pub fn split_one(i: &FracIdealR, j: &FracIdealR) -> Option<(KElem, KElem)> {
    let k = i.field();
    let bi = i.zbasis();
    let bj = j.zbasis();
    let gens: Vec<Vec<Q>> = bi.iter().chain(bj.iter()).map(|e| e.to_vec()).collect();
    let c = express_integral(&k.one().to_vec(), &gens)?;
    let zk = |n: &num_bigint::BigInt| k.rat(Q::from_integer(n.clone()));
    let x = bi.iter().zip(&c).fold(k.zero(), |acc, (b, n)| &acc + &(b * &zk(n)));
    let y = bj.iter().zip(&c[bi.len()..]).fold(k.zero(), |acc, (b, n)| &acc + &(b * &zk(n)));
    Some((x, y))
}

/// Nonzero elements of `a` with ℤ-coordinates of sup-norm exactly `h`.
pub(crate) fn shell(a: &FracIdealR, h: i64) -> Vec<KElem> {
    let k = a.field();
    let zb = a.zbasis();
    let mut out = Vec::new();
    if zb.len() == 1 {
        for c in [h, -h] {
            out.push(&zb[0] * &k.int(c));
        }
        return out;
    }
    for x in -h..=h {
        for y in -h..=h {
            if x.abs().max(y.abs()) != h {
                continue;
            }
            out.push(&(&zb[0] * &k.int(x)) + &(&zb[1] * &k.int(y)));
        }
    }
    out
}

type Merge = ([KElem; 2], [KElem; 2]);

// Matrix [[a, b], [c, d]] with a ∈ b1, b ∈ b2, c ∈ b2^-1, d ∈ b1^-1, ad - bc = 1.
fn merge_matrix(b1: &FracIdealR, b2: &FracIdealR) -> Result<Merge> {
    let k = b1.field();
    if b1.is_unit() {
        return Ok(([k.one(), k.zero()], [k.zero(), k.one()]));
    }
    let a = b1.zbasis()[0].clone();
    let i = b1.inverse().scale(&a)?;
    let b2inv = b2.inverse();
    for h in 1..200 {
        for b in shell(b2, h) {
            let j = b2inv.scale(&b)?;
            if let Some((x, y)) = split_one(&i, &j) {
                let d = x.div(&a);
                let c = -&y.div(&b);
                return Ok(([a, b], [c, d]));
            }
        }
    }
    Err(Error::SearchExhausted("no coprime element found while merging coefficient ideals".into()))
}

/// Rewrites the pseudo-basis as `(R, ..., R, 𝔠)` spanning the same module.
pub fn steinitz_normalize(l: &PseudoBasis) -> Result<SteinitzForm> {
    let k = l.field();
    let m = l.rank();
    let mut t: Vec<Vec<KElem>> = (0..m).map(|i| (0..m).map(|j| if i == j { k.one() } else { k.zero() }).collect()).collect();
    let mut coeffs = l.coeffs.clone();
    let mut vecs = l.vectors.clone();
    for i in 1..m {
        let ([a, b], [c, d]) = merge_matrix(&coeffs[i - 1], &coeffs[i])?;
        let prod = coeffs[i - 1].mul(&coeffs[i]);
        let w1 = lincomb(k, &[a.clone(), b.clone()], &[vecs[i - 1].clone(), vecs[i].clone()]);
        let w2 = lincomb(k, &[c.clone(), d.clone()], &[vecs[i - 1].clone(), vecs[i].clone()]);
        let t1 = lincomb(k, &[a, b], &[t[i - 1].clone(), t[i].clone()]);
        let t2 = lincomb(k, &[c, d], &[t[i - 1].clone(), t[i].clone()]);
        vecs[i - 1] = w1;
        vecs[i] = w2;
        t[i - 1] = t1;
        t[i] = t2;
        coeffs[i - 1] = FracIdealR::unit(k);
        coeffs[i] = prod;
    }
    let basis = PseudoBasis::new(coeffs, vecs)?;
    debug_assert!(basis.same_module(l));
    Ok(SteinitzForm { basis, transform: t })
}

/// As `steinitz_normalize`, with the last coefficient ideal equal to `target`,
/// which must lie in the Steinitz class.
pub fn steinitz_normalize_to(l: &PseudoBasis, target: &FracIdealR) -> Result<SteinitzForm> {
    let mut s = steinitz_normalize(l)?;
    let m = l.rank();
    let c = &s.basis.coeffs[m - 1];
    let g = is_principal(&c.div(target))
        .ok_or_else(|| Error::Domain(format!("Steinitz class of {c} differs from that of {target}")))?;
    let v: Vec<KElem> = s.basis.vectors[m - 1].iter().map(|x| x * &g).collect();
    s.basis.vectors[m - 1] = v;
    s.transform[m - 1] = s.transform[m - 1].iter().map(|x| x * &g).collect();
    s.basis.coeffs[m - 1] = target.clone();
    debug_assert!(s.basis.same_module(l));
    Ok(s)
}

/// The `R`-module index `[M : N]` for full-rank modules in the same `K^m`.
pub fn module_index(m: &PseudoBasis, n: &PseudoBasis) -> Result<FracIdealR> {
    if m.rank() != n.rank() || m.vectors[0].len() != n.vectors[0].len() {
        return domain("module index needs modules in the same ambient space");
    }
    let g = n.vector_det().div(&m.vector_det());
    n.steinitz_ideal().div(&m.steinitz_ideal()).scale(&g)
}

/// An isomorphism `∧²M → 𝔞` for a rank-two module, fixed by the value on
/// `v1 ∧ v2`.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub target: FracIdealR,
    pub basis: PseudoBasis,
    pub value: KElem,
}

impl Orientation {
    pub fn new(target: FracIdealR, basis: PseudoBasis, value: KElem) -> Result<Self> {
        if basis.rank() != 2 {
            return domain("orientations are defined on rank-two modules");
        }
        if value.is_zero() || basis.steinitz_ideal().scale(&value)? != target {
            return domain("orientation value does not carry the top power onto the target ideal");
        }
        Ok(Orientation { target, basis, value })
    }

    /// Value on `w1 ∧ w2` for `w1, w2 ∈ K^2`.
    pub fn eval(&self, w1: &[KElem], w2: &[KElem]) -> KElem {
        let k = self.target.field();
        let num = det_k(k, &[w1.to_vec(), w2.to_vec()]);
        &self.value * &num.div(&self.basis.vector_det())
    }
}

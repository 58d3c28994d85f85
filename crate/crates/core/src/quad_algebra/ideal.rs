use super::{LElem, QuadAlgebra};
use crate::base_field::{FracIdealR, KElem};
use crate::error::{domain, Error, Result};
use crate::rlattice::{steinitz_normalize_to, PseudoBasis};
use crate::zlattice::{express_integral, QLattice, QMatrix, Q};

/// A fractional `S`-ideal with pseudo-basis `𝔟1·η1 ⊕ 𝔟2·η2` over `R`.
#[derive(Clone, Debug)]
pub struct SIdeal {
    pub coeffs: [FracIdealR; 2],
    pub gens: [LElem; 2],
}

impl SIdeal {
    /// `R·α ⊕ 𝔞·β`.
    pub fn from_steinitz_basis(s: &QuadAlgebra, alpha: LElem, beta: LElem) -> SIdeal {
        SIdeal { coeffs: [FracIdealR::unit(s.base()), s.steinitz().clone()], gens: [alpha, beta] }
    }

    fn zbasis(&self) -> Vec<LElem> {
        self.coeffs
            .iter()
            .zip(&self.gens)
            .flat_map(|(c, g)| c.zbasis().into_iter().map(move |b| g.scale(&b)))
            .collect()
    }
}

impl QuadAlgebra {
    pub fn unit_ideal(&self) -> SIdeal {
        SIdeal::from_steinitz_basis(self, self.one(), self.xi())
    }

    pub fn ideal_zbasis(&self, i: &SIdeal) -> Vec<LElem> {
        i.zbasis()
    }

    /// The ℤ-lattice of `i` in `ℚ^{2n}`; fails if the generators are dependent.
    pub fn ideal_lattice(&self, i: &SIdeal) -> Result<QLattice> {
        let gens: Vec<Vec<Q>> = i.zbasis().iter().map(|e| e.to_vec()).collect();
        QLattice::from_generators(2 * self.base().degree(), &gens)
            .ok_or_else(|| Error::Domain("ideal generators do not span L".into()))
    }

    pub fn ideal_eq(&self, a: &SIdeal, b: &SIdeal) -> bool {
        match (self.ideal_lattice(a), self.ideal_lattice(b)) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        }
    }

    /// Whether `𝔞ξ·I ⊂ I`, i.e. the `R`-module is an `S`-module.
    pub fn is_s_module(&self, i: &SIdeal) -> Result<bool> {
        let lat = self.ideal_lattice(i)?;
        let zb = i.zbasis();
        for a in self.steinitz().zbasis() {
            let ax = LElem::new(self.base().zero(), a);
            for g in &zb {
                if !lat.contains(&self.mul(&ax, g).to_vec()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Pseudo-basis of a full-rank `R`-submodule of `L` given as a ℤ-lattice:
    /// `𝔟1·1 ⊕ 𝔠·v` where `𝔟1` is the kernel of the `ξ`-coordinate and `𝔠` its image.
    pub fn ideal_from_lattice(&self, lat: &QLattice) -> Result<SIdeal> {
        let k = self.base();
        let n = k.degree();
        let swap = |v: &[Q]| -> Vec<Q> { v[n..].iter().chain(v[..n].iter()).cloned().collect() };
        let permuted: Vec<Vec<Q>> = lat.basis().iter().map(|r| swap(r)).collect();
        let h = QLattice::from_generators(2 * n, &permuted).unwrap();
        let rows: Vec<Vec<Q>> = h.basis().iter().map(|r| swap(r)).collect();
        let lifts: Vec<LElem> = rows[..n].iter().map(|r| self.from_vec(r)).collect();
        let kernel: Vec<KElem> = rows[n..].iter().map(|r| k.from_vec(&r[..n])).collect();
        let b1 = FracIdealR::from_generators(k, &kernel)?;
        let gam: Vec<KElem> = lifts.iter().map(|l| l.y.clone()).collect();
        let c = FracIdealR::from_generators(k, &gam)?;
        let eps = c.inverse().zbasis();
        let mut prods = Vec::new();
        let mut idx = Vec::new();
        for (i, g) in gam.iter().enumerate() {
            for (j, e) in eps.iter().enumerate() {
                prods.push((g * e).to_vec());
                idx.push((i, j));
            }
        }
        let coef = express_integral(&k.one().to_vec(), &prods)
            .ok_or_else(|| Error::Internal("image ideal times its inverse misses 1".into()))?;
        let mut v = self.zero();
        for ((i, j), cf) in idx.iter().zip(coef) {
            let s = &eps[*j] * &k.rat(Q::from_integer(cf));
            v = v.add(&lifts[*i].scale(&s));
        }
        let out = SIdeal { coeffs: [b1, c], gens: [self.one(), v] };
        debug_assert!(self.ideal_lattice(&out).map(|l| &l == lat).unwrap_or(false));
        Ok(out)
    }

    /// The `S`-ideal generated by `gens`.
    pub fn ideal_from_generators(&self, gens: &[LElem]) -> Result<SIdeal> {
        let sb = self.zbasis();
        let zg: Vec<Vec<Q>> = gens.iter().flat_map(|g| sb.iter().map(move |s| self.mul(s, g).to_vec())).collect();
        let lat = QLattice::from_generators(2 * self.base().degree(), &zg)
            .ok_or_else(|| Error::Domain("generators do not span a full-rank ideal".into()))?;
        self.ideal_from_lattice(&lat)
    }

    pub fn principal_ideal(&self, g: &LElem) -> Result<SIdeal> {
        self.ideal_from_generators(std::slice::from_ref(g))
    }

    fn product_lattice(&self, parts: &[&[LElem]]) -> Result<QLattice> {
        let mut acc: Vec<LElem> = vec![self.one()];
        for p in parts {
            let mut next = Vec::with_capacity(acc.len() * p.len());
            for a in &acc {
                for b in p.iter() {
                    next.push(self.mul(a, b));
                }
            }
            acc = next;
        }
        let gens: Vec<Vec<Q>> = acc.iter().map(|e| e.to_vec()).collect();
        QLattice::from_generators(2 * self.base().degree(), &gens).ok_or_else(|| Error::Domain("product ideal is degenerate".into()))
    }

    pub fn ideal_mul(&self, a: &SIdeal, b: &SIdeal) -> Result<SIdeal> {
        let lat = self.product_lattice(&[&a.zbasis(), &b.zbasis()])?;
        self.ideal_from_lattice(&lat)
    }

    /// ℤ-lattice of `I³`, spanned by products over multisets of basis triples.
    pub fn cube_lattice(&self, i: &SIdeal) -> Result<QLattice> {
        let zb = i.zbasis();
        let mut gens = Vec::new();
        for a in 0..zb.len() {
            for b in a..zb.len() {
                let ab = self.mul(&zb[a], &zb[b]);
                for c in b..zb.len() {
                    gens.push(self.mul(&ab, &zb[c]).to_vec());
                }
            }
        }
        QLattice::from_generators(2 * self.base().degree(), &gens).ok_or_else(|| Error::Domain("cube of ideal is degenerate".into()))
    }

    /// `(S : I) = {x ∈ L : xI ⊂ S}`.
    pub fn colon(&self, i: &SIdeal) -> Result<SIdeal> {
        let mats: Vec<QMatrix> = i.zbasis().iter().map(|g| self.mult_matrix(g)).collect();
        let lat = QLattice::colon(&self.zlattice(), &mats).ok_or_else(|| Error::Domain("colon ideal is degenerate".into()))?;
        self.ideal_from_lattice(&lat)
    }

    pub fn is_invertible(&self, i: &SIdeal) -> Result<bool> {
        let c = self.colon(i)?;
        Ok(self.ideal_lattice(&self.ideal_mul(i, &c)?)? == self.zlattice())
    }

    /// `[S : I]_R = det(g)·𝔞⁻¹·𝔟1·𝔟2` where `g` carries `(1, ξ)` to `(η1, η2)`.
    pub fn ideal_norm(&self, i: &SIdeal) -> Result<FracIdealR> {
        let g = QuadAlgebra::wedge(&i.gens[0], &i.gens[1]);
        if g.is_zero() {
            return domain("ideal generators are dependent");
        }
        i.coeffs[0].mul(&i.coeffs[1]).mul(self.steinitz_inv()).scale(&g)
    }

    /// `(α, β)` with `I = Rα ⊕ 𝔞β`; needs `[S:I]` principal.
    pub fn steinitz_decompose(&self, i: &SIdeal) -> Result<(LElem, LElem)> {
        let pb = PseudoBasis::new(
            i.coeffs.to_vec(),
            i.gens.iter().map(|g| vec![g.x.clone(), g.y.clone()]).collect(),
        )?;
        let s = steinitz_normalize_to(&pb, self.steinitz())?;
        let v = &s.basis.vectors;
        Ok((LElem::new(v[0][0].clone(), v[0][1].clone()), LElem::new(v[1][0].clone(), v[1][1].clone())))
    }

    /// `π(α ∧ β)` for a basis with `I = Rα ⊕ 𝔞β`, checking that shape.
    pub fn based_ideal_norm(&self, i: &SIdeal, alpha: &LElem, beta: &LElem) -> Result<KElem> {
        let j = SIdeal::from_steinitz_basis(self, alpha.clone(), beta.clone());
        if !self.ideal_eq(i, &j) {
            return domain("the given basis does not span the ideal as R·α ⊕ 𝔞·β");
        }
        Ok(QuadAlgebra::wedge(alpha, beta))
    }
}

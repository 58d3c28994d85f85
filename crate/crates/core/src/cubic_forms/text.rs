use super::{CubicForm, FormSpace};
use crate::base_field::{parse_kelem, BaseField, FracIdealR};
use crate::error::{Error, Result};

/// `a,b,c,d@(g1,g2)` with the Steinitz ideal given by its ℤ-basis.
pub fn format_form(v: &FormSpace, f: &CubicForm) -> String {
    format!("{f}@{}", v.steinitz())
}

/// Inverse of `format_form`; without `@…` the Steinitz ideal is `R`.
pub fn parse_form(k: BaseField, s: &str) -> Result<(FormSpace, CubicForm)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (coeffs, ideal) = match s.split_once('@') {
        Some((c, i)) => (c, Some(i)),
        None => (s.as_str(), None),
    };
    let parts: Vec<&str> = coeffs.split(',').collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!("expected four coefficients, got {}", parts.len())));
    }
    let c = parts.iter().map(|p| parse_kelem(&k, p)).collect::<Result<Vec<_>>>()?;
    let steinitz = match ideal {
        None => FracIdealR::unit(k),
        Some(i) => parse_ideal(k, i)?,
    };
    let v = FormSpace::new(steinitz);
    let f = CubicForm::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone());
    v.check(&f)?;
    Ok((v, f))
}

/// `(g1,...,gn)` or a bare comma-free generator.
pub fn parse_ideal(k: BaseField, s: &str) -> Result<FracIdealR> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let gens = inner.split(',').map(|g| parse_kelem(&k, g)).collect::<Result<Vec<_>>>()?;
    FracIdealR::from_generators(k, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k = BaseField::new(-5).unwrap();
        let p2 = parse_ideal(k, "(2,1+w)").unwrap();
        let v = FormSpace::new(p2);
        let s = "2,1,1/2-1/2*w,-1@(1+w,2*w)";
        let (v2, f) = parse_form(k, s).unwrap();
        assert_eq!(v2, v);
        assert_eq!(format_form(&v2, &f), s);
        let (v3, f3) = parse_form(k, &format_form(&v, &f)).unwrap();
        assert_eq!((v3, f3), (v, f));
        let z = BaseField::rational();
        let (v, f) = parse_form(z, "1,0,0,1").unwrap();
        assert_eq!(format_form(&v, &f), "1,0,0,1@(1)");
        assert!(parse_form(z, "1,0,0").is_err());
        assert!(parse_form(z, "1/2,0,0,1").is_err());
    }
}

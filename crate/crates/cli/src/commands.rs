//! One function per subcommand, each returning a structured document.

use cubeclass_core::base_field::{class_group, parse_kelem, primes_above, unit_group};
use cubeclass_core::counting_local::{count_cl3, enumerate_orbits, local_density_projective, EnumOptions};
use cubeclass_core::cubic_forms::{format_form, parse_form, parse_ideal, phi_forward, phi_inverse, GroupKind};
use cubeclass_core::quad_algebra::BalancedQuadruple;
use cubeclass_core::{BaseField, Error, FormSpace, FracIdealR, KElem, LElem, QuadAlgebra, Result};
use serde::Serialize;
use serde_json::{json, Map, Value};

/// Output bumps this when a field changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug)]
pub struct Document {
    pub schema: u32,
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
}

impl Document {
    fn new(command: &'static str, inputs: Value, results: Value) -> Self {
        Document { schema: SCHEMA_VERSION, command, inputs, results }
    }

    /// `key: value` lines, with arrays one item per line.
    pub fn table(&self) -> String {
        let mut out = String::new();
        if let Value::Object(m) = &self.results {
            for (k, v) in m {
                match v {
                    Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_string()) => {
                        out.push_str(&format!("{k}:\n"));
                        for it in items {
                            out.push_str(&format!("  - {}\n", inline(it)));
                        }
                    }
                    _ => out.push_str(&format!("{k}: {}\n", inline(v))),
                }
            }
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={}", inline(v))).collect::<Vec<_>>().join(" "),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// Base field and Steinitz ideal, validated before any computation.
pub struct JobConfig {
    pub field: BaseField,
    pub steinitz: FracIdealR,
}

impl JobConfig {
    pub fn new(d: i64, ideal: Option<&str>) -> Result<Self> {
        let field = BaseField::new(d)?;
        let steinitz = match ideal {
            None => FracIdealR::unit(field),
            Some(s) => parse_ideal(field, s)?,
        };
        Ok(JobConfig { field, steinitz })
    }

    fn space(&self) -> FormSpace {
        FormSpace::new(self.steinitz.clone())
    }

    fn inputs(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("d".into(), json!(self.field.d()));
        m.insert("ideal".into(), json!(self.steinitz.to_string()));
        m
    }

    fn with(&self, extra: Value) -> Value {
        let mut m = self.inputs();
        if let Value::Object(e) = extra {
            m.extend(e);
        }
        Value::Object(m)
    }
}

fn gens(a: &FracIdealR) -> String {
    let g: Vec<String> = a.generators().iter().map(|x| x.to_string()).collect();
    format!("({})", g.join(","))
}

pub fn base_info(job: &JobConfig) -> Result<Document> {
    let k = job.field;
    let cl = class_group(k)?;
    let units = unit_group(k);
    let (r1, r2) = k.signature();
    let results = json!({
        "field_disc": k.disc(),
        "signature": [r1, r2],
        "class_number": cl.order(),
        "class_reps": cl.reps.iter().map(gens).collect::<Vec<_>>(),
        "class_table": cl.table,
        "torsion_units": units.torsion_order,
        "torsion_generator": units.torsion_generator.to_string(),
        "fundamental_unit": units.fundamental.as_ref().map(|u| u.to_string()),
    });
    Ok(Document::new("base-info", json!({ "d": k.d() }), results))
}

fn parse_disc(k: BaseField, s: &str) -> Result<KElem> {
    parse_kelem(&k, s)
}

pub fn enumerate(job: &JobConfig, disc: &str, workers: Option<usize>, group: GroupKind, height: i64) -> Result<Document> {
    let delta = parse_disc(job.field, disc)?;
    let v = job.space();
    let opts = EnumOptions { workers, height, group };
    let table = enumerate_orbits(&v, &delta, &opts)?;
    let reps: Vec<Value> = table
        .reps
        .iter()
        .map(|r| json!({ "form": format_form(&v, &r.form), "projective": r.projective, "reducible": r.reducible }))
        .collect();
    let results = json!({
        "group": format!("{:?}", table.group).to_lowercase(),
        "orbits": table.reps.len(),
        "projective_orbits": table.projective_count(),
        "count_cl3": table.count_cl3,
        "experimental": table.experimental,
        "representatives": reps,
    });
    Ok(Document::new("enumerate", job.with(json!({ "disc": delta.to_string() })), results))
}

pub fn count3(job: &JobConfig, disc: &str, workers: Option<usize>) -> Result<Document> {
    let delta = parse_disc(job.field, disc)?;
    let c = count_cl3(&job.space(), &delta, &EnumOptions { workers, ..EnumOptions::default() })?;
    let results = json!({
        "count_cl3": c.order,
        "projective_sl_orbits": c.projective_orbits,
        "split_real_places": c.split_real_places,
        "epsilon": c.epsilon,
    });
    Ok(Document::new("count3", job.with(json!({ "disc": delta.to_string() })), results))
}

pub fn density(job: &JobConfig, prime: u64, cap: u64) -> Result<Document> {
    let primes = primes_above(job.field, prime)?;
    let reports = primes
        .iter()
        .map(|p| {
            let r = local_density_projective(p, &job.steinitz, cap)?;
            Ok(json!({
                "prime": gens(&r.prime.ideal),
                "residue_size": r.residue_size,
                "ramification": r.prime.e,
                "steinitz_valuation": r.steinitz_valuation,
                "projective": r.projective_count,
                "total": r.total_count,
                "density": r.density.to_string(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut results = Map::new();
    if let [only] = reports.as_slice() {
        results.insert("density".into(), only["density"].clone());
    }
    results.insert("primes".into(), Value::Array(reports));
    Ok(Document::new("density", job.with(json!({ "prime": prime })), Value::Object(results)))
}

fn quad_json(q: &BalancedQuadruple) -> Value {
    json!({
        "t": q.ring.t().to_string(),
        "u": q.ring.u().to_string(),
        "alpha": q.alpha.to_string(),
        "beta": q.beta.to_string(),
        "delta": q.delta.to_string(),
        "s": q.s.to_string(),
        "ring_disc": q.ring.disc().to_string(),
    })
}

pub fn roundtrip(job: &JobConfig, form: &str) -> Result<Document> {
    let (v, f) = parse_form(job.field, form)?;
    let q = phi_inverse(&v, &f)?;
    let balanced = q.verify()?.holds();
    let back = phi_forward(&q)?;
    if !balanced || back != f {
        return Err(Error::Internal(format!("round trip of {f} returned {back}, balanced = {balanced}")));
    }
    let results = json!({ "status": "exact round-trip: OK", "quadruple": quad_json(&q) });
    Ok(Document::new("roundtrip", json!({ "d": job.field.d(), "form": format_form(&v, &f) }), results))
}

pub fn form2quad(job: &JobConfig, form: &str) -> Result<Document> {
    let (v, f) = parse_form(job.field, form)?;
    let q = phi_inverse(&v, &f)?;
    let report = q.verify()?;
    let mut results = quad_json(&q);
    results["balanced"] = json!(report.holds());
    results["delta_is_cube"] = json!(q.delta_is_cube()?);
    Ok(Document::new("form2quad", json!({ "d": job.field.d(), "form": format_form(&v, &f) }), results))
}

/// `[x;y]` for `x + yξ`, as printed by `form2quad`.
fn parse_lelem(k: BaseField, s: &str) -> Result<LElem> {
    let bad = || Error::Parse(format!("expected \"[x;y]\" for an algebra element, got {s:?}"));
    let inner = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
    let (x, y) = inner.split_once(';').ok_or_else(bad)?;
    Ok(LElem::new(parse_kelem(&k, x)?, parse_kelem(&k, y)?))
}

/// Splits on `;` outside square brackets.
fn split_fields(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            ';' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

pub fn quad2form(job: &JobConfig, quad: &str) -> Result<Document> {
    let k = job.field;
    let parts = split_fields(quad);
    let [t, u, alpha, beta, delta, s] = parts.as_slice() else {
        return Err(Error::Parse(format!("expected six ';'-separated fields, got {}", parts.len())));
    };
    let ring = QuadAlgebra::new(job.steinitz.clone(), parse_kelem(&k, t)?, parse_kelem(&k, u)?)?;
    let q = BalancedQuadruple {
        ring,
        alpha: parse_lelem(k, alpha)?,
        beta: parse_lelem(k, beta)?,
        delta: parse_lelem(k, delta)?,
        s: parse_kelem(&k, s)?,
    };
    if !q.verify()?.holds() {
        return Err(Error::Domain("the quadruple is not balanced".into()));
    }
    let f = phi_forward(&q)?;
    let v = job.space();
    let results = json!({ "form": format_form(&v, &f), "disc": f.disc().to_string() });
    Ok(Document::new("quad2form", job.with(json!({ "quad": quad })), results))
}

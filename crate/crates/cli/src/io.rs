//! JSON encodings of Hopf algebras and comodule algebras. Every scalar is a
//! string in the ring's own notation ("3/7", "q^-1 + 2").

use hopf_galois::algebra::FinAlgebra;
use hopf_galois::comodule::ComoduleAlgebra;
use hopf_galois::hopf::{Coalgebra, HopfAlgebra};
use hopf_galois::ring::{Algebra, Field, LaurentRing, PrimeField, Rationals, Ring};
use hopf_galois::{Error, Matrix, Result};
use serde_json::{json, Value};

use crate::source::{AnyComodule, AnyHopf, Describe};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn scalar<R: Ring>(r: &R, v: &Value) -> Result<R::Elem> {
    match v {
        Value::String(s) => r.parse(s),
        Value::Number(n) if n.is_i64() => Ok(r.from_i64(n.as_i64().unwrap_or_default())),
        _ => Err(bad(format!("scalar {v} must be a string or an integer"))),
    }
}

fn vector<R: Ring>(r: &R, v: &Value, len: usize, what: &str) -> Result<Vec<R::Elem>> {
    let a = array(v, what)?;
    if a.len() != len {
        return Err(bad(format!("{what} must have length {len}, got {}", a.len())));
    }
    a.iter().map(|x| scalar(r, x)).collect()
}

/// `t[i][j][k]` flattened to index `(i·d + j)·d + k`.
fn cube<R: Ring>(r: &R, v: &Value, d: usize, what: &str) -> Result<Vec<R::Elem>> {
    let outer = array(v, what)?;
    if outer.len() != d {
        return Err(bad(format!("{what} must have {d} slices")));
    }
    let mut out = Vec::with_capacity(d * d * d);
    for slice in outer {
        let rows = array(slice, what)?;
        if rows.len() != d {
            return Err(bad(format!("{what} slices must have {d} rows")));
        }
        for row in rows {
            out.extend(vector(r, row, d, what)?);
        }
    }
    Ok(out)
}

fn dim(v: &Value) -> Result<usize> {
    field(v, "dim")?.as_u64().map(|d| d as usize).filter(|&d| d > 0).ok_or_else(|| bad("dim must be a positive integer"))
}

pub fn format_vector<R: Ring>(r: &R, v: &[R::Elem]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(r.format(x))).collect())
}

pub fn format_matrix<R: Ring>(r: &R, m: &Matrix<R::Elem>) -> Value {
    Value::Array(m.to_rows().iter().map(|row| format_vector(r, row)).collect())
}

fn format_cube<R: Ring>(r: &R, flat: &[R::Elem], d: usize) -> Value {
    Value::Array(
        (0..d).map(|i| Value::Array((0..d).map(|j| format_vector(r, &flat[(i * d + j) * d..(i * d + j + 1) * d])).collect())).collect(),
    )
}

fn field_descriptor(v: &Value) -> Result<Option<u64>> {
    match field(v, "kind")?.as_str() {
        Some("Q") => Ok(None),
        Some("Fp") => {
            let p = field(v, "p")?.as_u64().ok_or_else(|| bad("p must be a positive integer"))?;
            Ok(Some(p))
        }
        other => Err(bad(format!("unknown field kind {other:?}, expected \"Q\" or \"Fp\""))),
    }
}

fn algebra_over<R: Ring>(r: &R, v: &Value) -> Result<FinAlgebra<R>> {
    let d = dim(v)?;
    let mult = cube(r, field(v, "mult")?, d, "mult")?;
    let unit = vector(r, field(v, "unit")?, d, "unit")?;
    FinAlgebra::new(r.clone(), d, mult, unit)
}

fn hopf_over<F: Field>(f: &F, v: &Value) -> Result<HopfAlgebra<F>> {
    let algebra = algebra_over(f, v)?;
    let d = algebra.dim();
    let comult = cube(f, field(v, "comult")?, d, "comult")?;
    let counit = vector(f, field(v, "counit")?, d, "counit")?;
    let rows = array(field(v, "antipode")?, "antipode")?;
    if rows.len() != d {
        return Err(bad(format!("antipode must list {d} images")));
    }
    let images = rows.iter().map(|row| vector(f, row, d, "antipode")).collect::<Result<Vec<_>>>()?;
    let antipode = Matrix::from_columns(d, &images);
    HopfAlgebra::new(algebra, Coalgebra::new(f.clone(), d, comult, counit)?, antipode)
}

pub fn parse_hopf(v: &Value) -> Result<AnyHopf> {
    match field_descriptor(field(v, "field")?)? {
        None => Ok(AnyHopf::Q(hopf_over(&Rationals, v)?)),
        Some(p) => Ok(AnyHopf::Fp(hopf_over(&PrimeField::new(p)?, v)?)),
    }
}

fn algebra_json<R: Ring>(a: &FinAlgebra<R>) -> Value {
    let r = a.ring();
    json!({
        "dim": a.dim(),
        "mult": format_cube(r, a.structure_constants(), a.dim()),
        "unit": format_vector(r, a.unit()),
    })
}

/// `mult[i][j][k]` is the `e_k` coefficient of `e_i e_j`, `comult[i][j][k]`
/// the `e_j⊗e_k` coefficient of `Δ(e_i)` and `antipode[i]` is `S(e_i)`.
pub fn hopf_json<F: Field + Describe>(h: &HopfAlgebra<F>) -> Value {
    let f = h.field();
    let mut out = algebra_json(h.algebra());
    out["field"] = f.describe();
    out["comult"] = format_cube(f, h.coalgebra().structure_constants(), h.dim());
    out["counit"] = format_vector(f, h.counit());
    out["antipode"] = Value::Array(h.antipode().columns().iter().map(|c| format_vector(f, c)).collect());
    out
}

fn comodule_over<R: Algebra<F>, F: Field>(r: R, v: &Value, hopf: HopfAlgebra<F>) -> Result<ComoduleAlgebra<R, F>> {
    let algebra = algebra_over(&r, field(v, "algebra")?)?;
    let (du, dh) = (algebra.dim(), hopf.dim());
    let rows = array(field(v, "coaction")?, "coaction")?;
    if rows.len() != du {
        return Err(bad(format!("coaction must list {du} images")));
    }
    let images = rows.iter().map(|row| vector(&r, row, du * dh, "coaction")).collect::<Result<Vec<_>>>()?;
    ComoduleAlgebra::new(algebra, hopf, Matrix::from_columns(du * dh, &images))
}

/// `coaction[x]` is `ρ(e_x)` in `U⊗H` coordinates, index `y·dim H + h`.
pub fn parse_comodule(v: &Value) -> Result<AnyComodule> {
    let ring = field(v, "ring")?;
    let hopf = parse_hopf(field(v, "hopf")?)?;
    match (field(ring, "kind")?.as_str(), hopf) {
        (Some("Q"), AnyHopf::Q(h)) => Ok(AnyComodule::Q(comodule_over(Rationals, v, h)?)),
        (Some("Fp"), AnyHopf::Fp(h)) => {
            let p = field_descriptor(ring)?;
            if p != Some(h.field().characteristic()) {
                return Err(bad("ring and Hopf algebra are over different prime fields"));
            }
            let f = h.field().clone();
            Ok(AnyComodule::Fp(comodule_over(f, v, h)?))
        }
        (Some("laurent"), AnyHopf::Q(h)) => {
            if let Some(var) = ring.get("var") {
                if var.as_str() != Some("q") {
                    return Err(bad("the Laurent variable is written q"));
                }
            }
            Ok(AnyComodule::Laurent(comodule_over(LaurentRing::new(Rationals), v, h)?))
        }
        (Some(kind), _) => Err(bad(format!("ring kind {kind:?} does not match the Hopf algebra's field"))),
        (None, _) => Err(bad("ring kind must be a string")),
    }
}

pub fn comodule_json<R: Algebra<F> + Describe, F: Field + Describe>(u: &ComoduleAlgebra<R, F>) -> Value {
    let r = u.ring();
    json!({
        "ring": r.describe(),
        "algebra": algebra_json(u.algebra()),
        "hopf": hopf_json(u.hopf()),
        "coaction": Value::Array(u.coaction().columns().iter().map(|c| format_vector(r, c)).collect()),
    })
}

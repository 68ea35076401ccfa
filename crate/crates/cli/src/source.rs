//! Where inputs come from: named presets, JSON files and specializations.

use hopf_galois::base_change::{self, Specialized, Target};
use hopf_galois::comodule::ComoduleAlgebra;
use hopf_galois::gallery;
use hopf_galois::group::Group;
use hopf_galois::hopf::HopfAlgebra;
use hopf_galois::ring::{FracField, JetRing, LaurentRing, PrimeField, Rationals, Ring};
use hopf_galois::twisted::{qzn, twisted_product};
use hopf_galois::{Error, Result};
use serde_json::{json, Value};

use crate::io;
use crate::Input;

/// A JSON descriptor of a coefficient ring.
pub trait Describe: Ring {
    fn describe(&self) -> Value;
}

impl Describe for Rationals {
    fn describe(&self) -> Value {
        json!({"kind": "Q"})
    }
}

impl Describe for PrimeField {
    fn describe(&self) -> Value {
        use hopf_galois::ring::Field;
        json!({"kind": "Fp", "p": self.characteristic()})
    }
}

impl Describe for LaurentRing<Rationals> {
    fn describe(&self) -> Value {
        json!({"kind": "laurent", "var": "q"})
    }
}

impl Describe for JetRing<Rationals> {
    fn describe(&self) -> Value {
        json!({"kind": "jet", "var": "q"})
    }
}

impl Describe for FracField<Rationals> {
    fn describe(&self) -> Value {
        json!({"kind": "fraction", "var": "q"})
    }
}

pub enum AnyHopf {
    Q(HopfAlgebra<Rationals>),
    Fp(HopfAlgebra<PrimeField>),
}

pub enum AnyComodule {
    Q(ComoduleAlgebra<Rationals, Rationals>),
    Fp(ComoduleAlgebra<PrimeField, PrimeField>),
    Laurent(ComoduleAlgebra<LaurentRing<Rationals>, Rationals>),
    Jet(ComoduleAlgebra<JetRing<Rationals>, Rationals>),
    Generic(ComoduleAlgebra<FracField<Rationals>, FracField<Rationals>>),
}

/// Runs `$body` with `$u` bound to the comodule algebra, whatever its ring.
#[macro_export]
macro_rules! with_comodule {
    ($any:expr, $u:ident => $body:expr) => {
        match $any {
            $crate::source::AnyComodule::Q($u) => $body,
            $crate::source::AnyComodule::Fp($u) => $body,
            $crate::source::AnyComodule::Laurent($u) => $body,
            $crate::source::AnyComodule::Jet($u) => $body,
            $crate::source::AnyComodule::Generic($u) => $body,
        }
    };
}

#[macro_export]
macro_rules! with_hopf {
    ($any:expr, $h:ident => $body:expr) => {
        match $any {
            $crate::source::AnyHopf::Q($h) => $body,
            $crate::source::AnyHopf::Fp($h) => $body,
        }
    };
}

/// A comodule algebra with display names for the bases of `U` and `H`.
pub struct Loaded {
    pub u: AnyComodule,
    pub u_names: Vec<String>,
    pub h_names: Vec<String>,
}

impl Loaded {
    fn numbered(u: AnyComodule) -> Self {
        let (du, dh) = with_comodule!(&u, c => (c.dim(), c.hopf().dim()));
        Loaded { u, u_names: (0..du).map(|i| format!("e{i}")).collect(), h_names: (0..dh).map(|i| format!("h{i}")).collect() }
    }
}

pub fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// `Z4`, `C4`, `S3`, `D4` (order 8) or `K4`/`V4`.
pub fn parse_group(s: &str) -> Result<Group> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("K4") || s.eq_ignore_ascii_case("V4") {
        return Group::klein();
    }
    let (kind, n) = s.split_at(1.min(s.len()));
    let n: usize = n.parse().map_err(|_| usage(format!("unknown group {s:?}; try Z4, S3, D4 or K4")))?;
    match kind {
        "Z" | "C" => Group::cyclic(n),
        "S" => Group::symmetric(n),
        "D" => Group::dihedral(n),
        _ => Err(usage(format!("unknown group {s:?}; try Z4, S3, D4 or K4"))),
    }
}

/// The subgroup generated by a comma-separated list of elements.
pub fn parse_subgroup(g: &Group, s: &str) -> Result<Vec<usize>> {
    let mut gens = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        gens.push(g.find(part).ok_or_else(|| usage(format!("no element {part:?} in the group")))?);
    }
    Ok(g.generated(&gens))
}

fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

pub fn load_hopf(input: &Input) -> Result<(AnyHopf, Vec<String>)> {
    if let Some(path) = &input.file {
        let h = io::parse_hopf(&read_json(path)?)?;
        let d = with_hopf!(&h, x => x.dim());
        return Ok((h, (0..d).map(|i| format!("h{i}")).collect()));
    }
    let preset = input.preset.as_deref().ok_or_else(|| usage("give --preset or --file"))?;
    let group = || parse_group(input.group.as_deref().unwrap_or("Z2"));
    let names = |g: &Group| g.names().to_vec();
    let (h, names) = match (preset, input.p) {
        ("sweedler", None) => (AnyHopf::Q(HopfAlgebra::sweedler(Rationals)?), ["1", "g", "x", "gx"].map(String::from).to_vec()),
        ("sweedler", Some(p)) => {
            (AnyHopf::Fp(HopfAlgebra::sweedler(PrimeField::new(p)?)?), ["1", "g", "x", "gx"].map(String::from).to_vec())
        }
        ("group", None) => {
            let g = group()?;
            (AnyHopf::Q(HopfAlgebra::group_algebra(Rationals, &g)?), names(&g))
        }
        ("group", Some(p)) => {
            let g = group()?;
            (AnyHopf::Fp(HopfAlgebra::group_algebra(PrimeField::new(p)?, &g)?), names(&g))
        }
        ("dual-group", None) => {
            let g = group()?;
            (AnyHopf::Q(HopfAlgebra::dual_group_algebra(Rationals, &g)?), names(&g).iter().map(|n| format!("δ_{n}")).collect())
        }
        ("dual-group", Some(p)) => {
            let g = group()?;
            (AnyHopf::Fp(HopfAlgebra::dual_group_algebra(PrimeField::new(p)?, &g)?), names(&g).iter().map(|n| format!("δ_{n}")).collect())
        }
        (other, _) => return Err(usage(format!("unknown Hopf preset {other:?}; try sweedler, group or dual-group"))),
    };
    Ok((h, names))
}

fn power_names(n: usize, one: &str) -> Vec<String> {
    (0..n)
        .map(|k| match k {
            0 => one.to_string(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        })
        .collect()
}

/// Loads the comodule algebra and applies `--at` when given.
pub fn load_comodule(input: &Input) -> Result<Loaded> {
    let loaded = load_base(input)?;
    match &input.at {
        None => Ok(loaded),
        Some(at) => specialize(loaded, at),
    }
}

pub fn specialize(loaded: Loaded, at: &str) -> Result<Loaded> {
    let AnyComodule::Laurent(u) = &loaded.u else {
        return Err(usage("--at needs a family over Q[q, q^-1]"));
    };
    let u = match base_change::specialize(u, Target::parse(&Rationals, at)?)? {
        Specialized::Field(x) => AnyComodule::Q(x),
        Specialized::Jet(x) => AnyComodule::Jet(x),
        Specialized::Generic(x) => AnyComodule::Generic(x),
    };
    Ok(Loaded { u, ..loaded })
}

fn load_base(input: &Input) -> Result<Loaded> {
    if let Some(path) = &input.file {
        return Ok(Loaded::numbered(io::parse_comodule(&read_json(path)?)?));
    }
    let preset = input.preset.as_deref().ok_or_else(|| usage("give --preset or --file"))?;
    match preset {
        "qzn" => {
            let n = input.n.unwrap_or(2);
            if n < 2 {
                return Err(usage("qzn needs --n at least 2"));
            }
            let r = LaurentRing::new(Rationals);
            let q = r.parse(input.q.as_deref().unwrap_or("q"))?;
            let u = twisted_product(&qzn(r, n, q)?)?;
            Ok(Loaded { u: AnyComodule::Laurent(u), u_names: power_names(n, "1"), h_names: power_names(n, "e") })
        }
        "quaternions" => Ok(Loaded {
            u: AnyComodule::Q(gallery::quaternions()?),
            u_names: ["1", "i", "j", "k"].map(String::from).to_vec(),
            h_names: ["e", "a", "b", "c"].map(String::from).to_vec(),
        }),
        "regular" | "sweedler" | "dual-regular" => {
            let hopf_preset = match preset {
                "regular" => "group",
                "sweedler" => "sweedler",
                _ => "dual-group",
            };
            let (h, names) = load_hopf(&Input { preset: Some(hopf_preset.into()), file: None, ..input.clone() })?;
            let u = match h {
                AnyHopf::Q(h) => AnyComodule::Q(ComoduleAlgebra::regular(Rationals, h)?),
                AnyHopf::Fp(h) => {
                    let f = h.field().clone();
                    AnyComodule::Fp(ComoduleAlgebra::regular(f, h)?)
                }
            };
            Ok(Loaded { u, u_names: names.clone(), h_names: names })
        }
        other => Err(usage(format!("unknown preset {other:?}; try qzn, quaternions, regular, dual-regular or sweedler"))),
    }
}

/// `Σ c·u_x⊗h_y` for a vector in `U⊗H` coordinates.
pub fn format_tensor<R: Ring>(r: &R, v: &[R::Elem], left: &[String], right: &[String]) -> String {
    let dh = right.len();
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !r.is_zero(c))
        .map(|(i, c)| {
            let basis = format!("{}⊗{}", left[i / dh], right[i % dh]);
            if r.is_one(c) {
                basis
            } else if r.is_one(&r.neg(c)) {
                format!("-{basis}")
            } else {
                format!("({})·{basis}", r.format(c))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

use hopf_galois::algebra::FinAlgebra;
use hopf_galois::comodule::{ComoduleAlgebra, GaloisOutcome};
use hopf_galois::connection::{self, Connection};
use hopf_galois::descent;
use hopf_galois::frobenius;
use hopf_galois::gallery;
use hopf_galois::gp;
use hopf_galois::group::Group;
use hopf_galois::hochschild::{self, Bimodule, DeformationFamily, Trivialization};
use hopf_galois::hopf::HopfAlgebra;
use hopf_galois::matrix::{self, Matrix};
use hopf_galois::mu::{self, RightModule};
use hopf_galois::ring::{Algebra, Field, LaurentRing, Rationals, Ring};
use hopf_galois::twisted::{self, klein_quaternion, qzn, twisted_product_with, Convention, TwoCochain};
use hopf_galois::{Error, Result};
use serde_json::{json, Value};

use crate::io::{comodule_json, format_matrix, format_vector, hopf_json};
use crate::report::Report;
use crate::source::{self, format_tensor, usage, AnyComodule, Describe, Loaded};
use crate::{with_comodule, with_hopf, Command, Input};

pub fn run(command: &Command, seed: u64, args: &[String]) -> Result<Report> {
    let inputs = |input: &Input| input.file.iter().filter_map(|p| std::fs::read_to_string(p).ok()).collect::<Vec<_>>();
    match command {
        Command::VerifyHopf { input, dump } => {
            let mut r = Report::new("verify-hopf", args, &inputs(input));
            let (h, _) = source::load_hopf(input)?;
            with_hopf!(&h, h => verify_hopf(h, *dump, &mut r))?;
            Ok(r)
        }
        Command::VerifyComodule { input, dump } => {
            let mut r = Report::new("verify-comodule", args, &inputs(input));
            let loaded = source::load_comodule(input)?;
            with_comodule!(&loaded.u, u => verify_comodule(u, *dump, &mut r))?;
            Ok(r)
        }
        Command::Galois { input } => {
            let mut r = Report::new("galois", args, &inputs(input));
            let loaded = source::load_comodule(input)?;
            with_comodule!(&loaded.u, u => galois(u, &loaded, &mut r))?;
            Ok(r)
        }
        Command::Twisted { input, convention } => {
            let mut r = Report::new("twisted", args, &inputs(input));
            let convention = match convention.as_str() {
                "reversed" => Convention::Reversed,
                "standard" => Convention::Standard,
                other => return Err(usage(format!("unknown convention {other:?}; use reversed or standard"))),
            };
            match input.preset.as_deref() {
                Some("qzn") => {
                    let ring = LaurentRing::new(Rationals);
                    let q = ring.parse(input.q.as_deref().unwrap_or("q"))?;
                    twisted(&qzn(ring, input.n.unwrap_or(2), q)?, convention, &mut r)?;
                }
                Some("quaternions") => twisted(&klein_quaternion(Rationals)?, convention, &mut r)?,
                Some("trivial") => {
                    let g = source::parse_group(input.group.as_deref().unwrap_or("Z2"))?;
                    let h = HopfAlgebra::group_algebra(Rationals, &g)?;
                    twisted(&TwoCochain::trivial(Rationals, h), convention, &mut r)?;
                }
                _ => return Err(usage("twisted takes --preset qzn, quaternions or trivial")),
            }
            Ok(r)
        }
        Command::Cleft { input } => {
            let mut r = Report::new("cleft", args, &inputs(input));
            let loaded = source::load_comodule(input)?;
            with_comodule!(&loaded.u, u => cleft(u, seed, &mut r))?;
            Ok(r)
        }
        Command::Specialize { input } => {
            if input.at.is_none() {
                return Err(usage("specialize needs --at"));
            }
            let mut r = Report::new("specialize", args, &inputs(input));
            let loaded = source::load_comodule(input)?;
            with_comodule!(&loaded.u, u => {
                verify_comodule(u, true, &mut r)?;
                r.detail("galois", u.is_galois()?.is_galois());
                Ok::<(), Error>(())
            })?;
            Ok(r)
        }
        Command::Frobenius { input } => {
            let mut r = Report::new("frobenius", args, &inputs(input));
            let loaded = source::load_comodule(input)?;
            with_comodule!(&loaded.u, u => frobenius_form(u, &mut r))?;
            Ok(r)
        }
        Command::Mu { input } => {
            let mut r = Report::new("mu", args, &inputs(input));
            let loaded = source::load_comodule(input)?;
            with_comodule!(&loaded.u, u => mu_report(u, &loaded, &mut r))?;
            Ok(r)
        }
        Command::Hh1 { input } => {
            let mut r = Report::new("hh1", args, &[]);
            hh1(input, &mut r)?;
            Ok(r)
        }
        Command::Trivialize { input, order } => {
            let mut r = Report::new("trivialize", args, &[]);
            trivialize(input, *order, seed, &mut r)?;
            Ok(r)
        }
        Command::Connections { input, matrix } => {
            let mut r = Report::new("connections", args, &inputs(input));
            connections(input, matrix.as_deref(), &mut r)?;
            Ok(r)
        }
        Command::Gp { group, subgroup } => {
            let mut r = Report::new("gp", args, &[]);
            gp_structures(group, subgroup, &mut r)?;
            Ok(r)
        }
        Command::Glue { input } => {
            let mut r = Report::new("glue", args, &[]);
            glue(input, &mut r)?;
            Ok(r)
        }
        Command::Gallery { criterion, verbose } => {
            let mut r = Report::new("gallery", args, &[]);
            run_gallery(*criterion, *verbose, seed, &mut r)?;
            Ok(r)
        }
    }
}

fn verify_hopf<F: Field + Describe>(h: &HopfAlgebra<F>, dump: bool, r: &mut Report) -> Result<()> {
    let f = h.field();
    let rep = h.verify();
    r.detail("dim", h.dim());
    r.check("associative and unital", rep.algebra.passed());
    r.check("coassociative", rep.coassociative);
    r.check("counital", rep.counital);
    r.check("Δ is multiplicative", rep.comult_multiplicative);
    r.check("ε is multiplicative", rep.counit_multiplicative);
    r.check_with("antipode", rep.antipode, || rep.failures.join("; "));
    let dual = h.dual();
    let drep = dual.verify();
    r.check_with("dual satisfies the axioms", drep.passed(), || drep.failures.join("; "));
    r.check("double dual equals the original", dual.dual() == *h);
    let ints = h.integral_report()?;
    r.check_with("integral spaces are one-dimensional", ints.left.dim() == 1 && ints.right.dim() == 1, || {
        format!("left {} right {}", ints.left.dim(), ints.right.dim())
    });
    r.detail("unimodular", ints.unimodular);
    r.detail("antipode_order", ints.antipode_order.map_or(Value::Null, |k| json!(k)));
    r.detail("cosemisimple", ints.cosemisimple);
    r.detail("lambda", format_vector(f, &ints.lambda));
    if dump {
        r.detail("hopf", hopf_json(h));
    }
    Ok(())
}

fn verify_comodule<R, F>(u: &ComoduleAlgebra<R, F>, dump: bool, r: &mut Report) -> Result<()>
where
    R: Algebra<F> + Describe,
    F: Field + Describe,
{
    let rep = u.verify()?;
    r.detail("dim", u.dim());
    r.detail("ring", u.ring().describe());
    r.check_with("U is associative and unital", rep.algebra.passed(), || format!("{:?}", rep.algebra));
    r.check("ρ is counital", rep.counital);
    r.check("ρ is coassociative", rep.coassociative);
    r.check("ρ is multiplicative", rep.multiplicative);
    r.check("ρ(1) = 1⊗1", rep.unit_preserved);
    r.check("invariants are central", rep.central_invariants);
    r.detail("invariants_dim", u.invariants()?.dim());
    if dump {
        r.detail("comodule", comodule_json(u));
    }
    Ok(())
}

fn galois<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, names: &Loaded, r: &mut Report) -> Result<()> {
    let ring = u.ring();
    match u.is_galois()? {
        GaloisOutcome::Galois(cert) => {
            r.check("canonical map is bijective", true);
            r.check("inverse certificate verifies", u.check_certificate(&cert));
            let rows: Vec<Value> = cert
                .rows
                .iter()
                .zip(&names.h_names)
                .map(|(row, h)| json!({ "h": h, "preimage": format_tensor(ring, row, &names.u_names, &names.u_names) }))
                .collect();
            r.detail("can_inverse", rows);
        }
        GaloisOutcome::NotGalois(w) => {
            let missing = w.not_in_image.as_ref().map(|v| format_tensor(ring, v, &names.u_names, &names.h_names));
            r.check_with("canonical map is bijective", false, || match &missing {
                Some(m) => format!("{m} is not in the image"),
                None => "the canonical map is not injective".into(),
            });
            r.detail("rank", w.rank);
            r.detail("target_dim", w.target_dim);
            if let Some(m) = missing {
                r.detail("not_in_image", m);
            }
            if let Some(k) = &w.kernel_vector {
                r.detail("kernel_vector", format_tensor(ring, k, &names.u_names, &names.u_names));
            }
        }
    }
    Ok(())
}

fn twisted<R, F>(sigma: &TwoCochain<R, F>, convention: Convention, r: &mut Report) -> Result<()>
where
    R: Algebra<F> + Describe,
    F: Field + Describe,
{
    let rep = sigma.is_cocycle()?;
    r.detail("sigma", format_matrix(sigma.ring(), sigma.matrix()));
    r.check_with("cocycle identities", rep.identities, || format!("fails on basis triple {:?}", rep.failing_triple));
    r.check("normalized", rep.normalized);
    r.check("convolution invertible", rep.convolution_invertible);
    if rep.identities && rep.normalized {
        let u = twisted_product_with(sigma, convention)?;
        verify_comodule(&u, true, r)?;
    }
    Ok(())
}

fn cleft<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, seed: u64, r: &mut Report) -> Result<()> {
    match twisted::cleftness_witness(u, seed)? {
        Some(map) => {
            r.check("cleaving map found", true);
            r.check("γ is a convolution-invertible comodule map", twisted::verify_cleaving(u, &map));
            r.detail("gamma", format_vector(u.ring(), &map.gamma));
            r.detail("gamma_inverse", format_vector(u.ring(), &map.inverse));
        }
        None => r.check_with("cleaving map found", false, || "the comodule maps H → U contain no convolution-invertible element".into()),
    }
    Ok(())
}

fn frobenius_form<R, F>(u: &ComoduleAlgebra<R, F>, r: &mut Report) -> Result<()>
where
    R: Algebra<F>,
    F: Field,
{
    let ring = u.ring();
    let lambda = u.hopf().normalized_lambda()?;
    let rep = frobenius::frobenius_report(u, &lambda)?;
    r.detail("gram", format_matrix(ring, &rep.gram));
    r.detail("determinant", ring.format(&rep.determinant));
    r.detail("symmetric", rep.symmetric);
    r.detail("positive_definite", rep.positive_definite.map_or(Value::Null, Value::Bool));
    r.detail("unimodular", rep.unimodular);
    r.detail("antipode_order_2", rep.antipode_order_2);
    r.detail("cosemisimple", rep.cosemisimple);
    r.check_with("form is nondegenerate", rep.nondegenerate, || format!("determinant {}", ring.format(&rep.determinant)));
    r.check("form is associative", rep.associative);
    if rep.unimodular && rep.antipode_order_2 {
        r.check("form is symmetric (H unimodular with S² = id)", rep.symmetric);
    }
    if rep.positive_definite == Some(true) {
        r.check("positive definite implies H cosemisimple", rep.cosemisimple);
    }
    if rep.nondegenerate {
        let nak = frobenius::nakayama(u, &lambda)?;
        r.detail("nakayama", format_matrix(ring, &nak.matrix));
        r.detail("nakayama_is_identity", matrix::is_identity(ring, &nak.matrix));
        r.check("⟨u, v⟩ = ⟨v, Nak(u)⟩", nak.identity_holds);
        r.check("Nak is an algebra automorphism", nak.automorphism);
    }
    Ok(())
}

fn mu_report<R: Algebra<F>, F: Field>(u: &ComoduleAlgebra<R, F>, names: &Loaded, r: &mut Report) -> Result<()> {
    let ring = u.ring();
    let act = mu::mu_action(u)?;
    r.check("right action", act.right_action);
    r.check("unital", act.unital);
    r.check_with("c·b = b₀(c←b₁)", act.exchange, || format!("fails on basis pair {:?}", act.exchange_failure));
    let inv = mu::mu_invariants_check(u, &act)?;
    r.check_with("invariants of the action = center of U", inv.equal, || {
        inv.witness.as_ref().map(|w| ring_vector(ring, w)).unwrap_or_default()
    });
    r.detail("invariants_dim", inv.invariants.dim());
    r.detail("center_dim", inv.center.dim());
    let matrices: serde_json::Map<String, Value> =
        names.h_names.iter().zip(&act.matrices).map(|(h, m)| (h.clone(), format_matrix(ring, m))).collect();
    r.detail("action", Value::Object(matrices));
    Ok(())
}

fn ring_vector<R: Ring>(r: &R, v: &[R::Elem]) -> String {
    format!("[{}]", v.iter().map(|x| r.format(x)).collect::<Vec<_>>().join(", "))
}

fn hh1(input: &Input, r: &mut Report) -> Result<()> {
    let q = Rationals;
    let n = input.n.unwrap_or(2);
    let bimodule = match input.preset.as_deref() {
        Some("matrices") => Bimodule::regular(FinAlgebra::matrix_algebra(q, n)),
        Some("truncated") => Bimodule::regular(FinAlgebra::truncated_polynomials(q, n)),
        Some("group") => {
            let g = source::parse_group(input.group.as_deref().unwrap_or("Z2"))?;
            Bimodule::regular(HopfAlgebra::group_algebra(q, &g)?.algebra().clone())
        }
        Some("epsilon") => {
            let g = source::parse_group(input.group.as_deref().unwrap_or("Z2"))?;
            let h = HopfAlgebra::group_algebra(q, &g)?;
            Bimodule::through_character(h.algebra().clone(), h.counit(), n)
        }
        _ => return Err(usage("hh1 takes --preset matrices, truncated, group or epsilon")),
    };
    let rep = bimodule.verify();
    r.check("bimodule axioms", rep.left_associative && rep.right_associative && rep.unital && rep.commute);
    let h = hochschild::hh1(&bimodule)?;
    r.check("d¹∘d⁰ = 0", h.complex);
    r.detail("algebra_dim", bimodule.algebra.dim());
    r.detail("module_dim", bimodule.dim);
    r.detail("hh1", h.dim);
    r.detail("derivations", h.cocycles.dim());
    r.detail("inner", h.coboundaries.dim());
    r.detail("generators", h.generators.iter().map(|g| format_vector(&q, g)).collect::<Vec<_>>());
    Ok(())
}

fn trivialize(input: &Input, order: Option<usize>, seed: u64, r: &mut Report) -> Result<()> {
    let q = Rationals;
    let g = source::parse_group(input.group.as_deref().unwrap_or("Z3"))?;
    let module = RightModule::regular(HopfAlgebra::group_algebra(q, &g)?);
    let family = match input.preset.as_deref() {
        Some("constant") => module.constant_family(order.unwrap_or(hochschild::DEFAULT_ORDER))?,
        Some("conjugated") => {
            let order = order.unwrap_or(6);
            let mut rng = hopf_galois::search::rng(seed);
            let d = module.dim();
            let mut conj = vec![matrix::identity(&q, d)];
            conj.extend((1..order.min(3)).map(|_| gallery::random_matrix(&mut rng, d)));
            DeformationFamily::conjugated(module.hopf.algebra().clone(), &module.action, &conj, order)?
        }
        Some("obstructed") => gallery::obstructed_family()?.0,
        _ => return Err(usage("trivialize takes --preset constant, conjugated or obstructed")),
    };
    r.detail("module_dim", family.dim);
    r.detail("order", family.order);
    match hochschild::trivialize_deformation(&family)? {
        Trivialization::Trivialized(f) => {
            let finv = hochschild::series_inverse(&q, &f, family.order)?;
            let restored = family.action.iter().zip(family.constant()).all(|(s, r0)| {
                let back = hochschild::series_mul(&q, &hochschild::series_mul(&q, &finv, s, family.order), &f, family.order);
                back[0] == r0 && back[1..].iter().all(|m| matrix::is_zero(&q, m))
            });
            r.check("trivialized", true);
            r.check("F⁻¹ρ_t F = ρ_0", restored);
            r.detail("F", f.iter().map(|m| format_matrix(&q, m)).collect::<Vec<_>>());
        }
        Trivialization::Obstruction { order, class } => {
            let c = ring_vector(&q, &class);
            r.check_with("trivialized", false, || format!("obstruction at order {order}, class {c}"));
            r.detail("obstruction_order", order);
            r.detail("obstruction_class", format_vector(&q, &class));
        }
    }
    Ok(())
}

fn connections(input: &Input, given: Option<&str>, r: &mut Report) -> Result<()> {
    let loaded = source::load_comodule(input)?;
    let AnyComodule::Laurent(u) = &loaded.u else {
        return Err(usage("connections need a family over Q[q, q^-1]"));
    };
    let ring = u.ring();
    let n = u.dim();
    let nabla = match given {
        None => connection::trivial_connection(ring, n),
        Some(text) => {
            let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| Error::Parse(format!("--matrix: {e}")))?;
            let rows = rows.iter().map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
            let m = Matrix::from_rows(rows)?;
            if m.rows() != n {
                return Err(Error::DimensionMismatch(format!("connection matrix must be {n}×{n}")));
            }
            Connection::new(m)?
        }
    };
    let lambda = u.hopf().normalized_lambda()?;
    let props = |nabla: &Connection<_>| -> Result<Value> {
        let p = connection::property_report(u, nabla, &lambda)?;
        Ok(json!({"frobenius": p.frobenius, "multiplicative": p.multiplicative, "equivariant": p.equivariant, "nakayama": p.nakayama}))
    };
    r.detail("connection", format_matrix(ring, &nabla.matrix));
    r.detail("properties", props(&nabla)?);
    let p = connection::property_report(u, &nabla, &lambda)?;
    r.check("Frobenius implies Nakayama", !p.frobenius || p.nakayama);
    r.check("multiplicative and equivariant imply Frobenius", !(p.multiplicative && p.equivariant) || p.frobenius);
    let (one, q) = (ring.one(), ring.variable());
    r.check("curvature vanishes", connection::curvature(ring, &nabla, &q, &one).is_zero(ring));
    let fixed = connection::frobeniusize(u, &nabla, &lambda)?;
    let fp = connection::property_report(u, &fixed, &lambda)?;
    r.detail("frobeniusized", format_matrix(ring, &fixed.matrix));
    r.detail("frobeniusized_properties", props(&fixed)?);
    r.check("frobeniusized connection is Frobenius", fp.frobenius);
    let c = connection::nabla_dot_c(u, &fixed, &lambda)?;
    r.check("∇·C = 0 exactly when multiplicative", c.is_zero() == fp.multiplicative);
    if u.hopf().integral_report()?.cosemisimple {
        let avg = connection::lambda_average(u, &nabla)?;
        r.detail("averaged", format_matrix(ring, &avg.matrix));
        r.check("Λ·∇ is equivariant", connection::is_equivariant(u, &avg));
    }
    Ok(())
}

fn gp_structures(group: &str, subgroup: &str, r: &mut Report) -> Result<()> {
    let g: Group = source::parse_group(group)?;
    let sub = source::parse_subgroup(&g, subgroup)?;
    let res = gp::hopf_galois_structures(&g, &sub)?;
    r.detail("group_order", g.order());
    r.detail("subgroup", sub.iter().map(|&a| g.name(a).to_string()).collect::<Vec<_>>());
    r.detail("degree", res.action.degree());
    r.detail("count", res.structures.len());
    let types: serde_json::Map<String, Value> = res.types.iter().map(|(t, k)| (t.to_string(), json!(k))).collect();
    r.detail("types", Value::Object(types));
    r.detail("structures", res.structures.iter().map(|n| gp::format_subgroup(n)).collect::<Vec<_>>());
    r.check_with("Hopf-Galois", res.is_hopf_galois(), || "no regular subgroup is normalized by the image of G".into());
    for (i, n) in res.structures.iter().enumerate() {
        r.check(format!("structure {i} is regular and normalized"), gp::is_valid_structure(&res.action, n));
    }
    Ok(())
}

fn glue(input: &Input, r: &mut Report) -> Result<()> {
    let q = Rationals;
    let h = match input.preset.as_deref() {
        Some("product") => descent::product_base_example(q, q.from_i64(1), q.from_i64(-1))?,
        Some("jet") => descent::jet_base_example(q)?,
        _ => return Err(usage("glue takes --preset product or jet")),
    };
    let rep = h.verify()?;
    r.detail("flatness_ranks", rep.flatness_ranks.iter().map(|k| k.map_or(Value::Null, |k| json!(k))).collect::<Vec<_>>());
    r.check("cover is faithfully flat", rep.faithfully_flat);
    r.check("charts are Galois", rep.charts_galois.iter().all(|&b| b));
    r.check("transitions are comodule algebra isomorphisms", rep.transitions_ok.iter().all(|(_, b)| *b));
    r.check_with("cocycle condition", rep.cocycle_failure.is_none(), || format!("fails on {:?}", rep.cocycle_failure));
    let g = h.glue()?;
    r.detail("glued_dim", g.comodule.dim());
    r.check("glued algebra is a subalgebra of the product", g.subalgebra);
    r.check("invariants of the glued algebra = O", g.invariants_equal_base);
    r.check("glued algebra is Galois", g.galois);
    r.check("localizations recover the charts", g.localizations.iter().all(Option::is_some));
    r.detail("glued", comodule_json(&g.comodule));
    Ok(())
}

fn run_gallery(criterion: Option<usize>, verbose: bool, seed: u64, r: &mut Report) -> Result<()> {
    let criteria = match criterion {
        Some(id) => vec![gallery::run_one(id, seed).ok_or_else(|| usage(format!("no criterion {id}; they are numbered 1 to 12")))?],
        None => gallery::run_all(seed),
    };
    r.detail("seed", seed);
    for c in &criteria {
        if verbose {
            for check in &c.checks {
                let detail = check.detail.clone();
                r.check_with(format!("criterion {} / {}", c.id, check.name), check.passed, || detail);
            }
        } else {
            let failures: Vec<String> = c.failures().iter().map(|f| format!("{} {}", f.name, f.detail)).collect();
            r.check_with(format!("criterion {}: {} ({} checks)", c.id, c.title, c.checks.len()), c.passed(), || failures.join("; "));
        }
    }
    Ok(())
}

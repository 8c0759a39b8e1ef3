use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{json, Value};

use evoalg::algebra::{census_algebra, census_size};
use evoalg::evlattice::{evolution_ideal_poset, ideal_lattice, EvolutionIdeals};
use evoalg::exactalg::format_vector;
use evoalg::ideals::{
    enumerate_ideals, is_nondegenerate_basis, is_nondegenerate_left, is_perfect, is_semiprime, is_simple,
    minimal_ideals, IdealMode,
};
use evoalg::idempotents::{
    fseani_scan, idempotent_system, idempotents as all_idempotents, minimal_idempotents,
    simple_implies_full_rank_check,
};
use evoalg::natural::{
    enumerate_natural_bases, find_natural_basis, natural_idempotents, naturality_classification, property_2li,
    property_mli,
};
use evoalg::socle::{ev_socle, partitions, socle as socle_of, soc_evsoc_probe};
use evoalg::{make_example, Error, EvolutionAlgebra, Family, Field, Limits, Matrix, Scalar, Subspace};

use crate::{Failure, Input, Probe};

/// A command's result: human-readable text and the JSON report.
pub struct Report {
    pub text: String,
    pub json: Value,
}

type Outcome = Result<Report, Failure>;

fn parse_field(s: &str) -> Result<Field, Failure> {
    s.parse::<Field>().map_err(Failure::from)
}

fn load(input: &Input) -> Result<EvolutionAlgebra, Failure> {
    match (&input.path, &input.family) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            EvolutionAlgebra::parse_definition(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        (None, Some(family)) => {
            let fam: Family = family.parse()?;
            Ok(make_example(fam, parse_field(&input.field)?)?)
        }
        (None, None) => Err(Failure::Input("an algebra file or --family is required".into())),
    }
}

/// `Ok(None)` for questions that need enumeration over the rationals.
fn optional<T>(r: evoalg::Result<T>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::UnsupportedEnumeration) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn space_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| vector_json(v)).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn yes_no(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a (needs enumeration)",
    }
}

fn set_text(vs: &[Vec<Scalar>]) -> String {
    let items: Vec<String> = vs.iter().map(|v| format_vector(v)).collect();
    format!("{{{}}}", items.join(", "))
}

fn header(a: &EvolutionAlgebra) -> String {
    let mut s = String::new();
    if let Some(l) = a.label() {
        let _ = writeln!(s, "# {l}");
    }
    let _ = writeln!(s, "algebra: {}, dim {}", a.field(), a.dim());
    let _ = writeln!(s, "structure matrix: {}", a.sq());
    s
}

fn algebra_json(a: &EvolutionAlgebra) -> Value {
    json!({ "field": a.field().to_string(), "dim": a.dim(), "sq": matrix_json(a.sq()) })
}

pub fn analyze(input: &Input, limits: &Limits) -> Outcome {
    let a = load(input)?;
    let simple = optional(is_simple(&a, limits))?;
    let semiprime = optional(is_semiprime(&a, limits))?;
    let nondeg_left = optional(is_nondegenerate_left(&a, limits))?;
    let idem = optional(all_idempotents(&a, limits))?;
    let min_ids = optional(minimal_ideals(&a, limits))?;
    let soc = optional(socle_of(&a, limits))?;
    let evsoc = optional(ev_socle(&a, limits))?;
    let nondeg_basis = is_nondegenerate_basis(&a);
    let perfect = is_perfect(&a);
    let associative = a.is_associative();
    let two_li = property_2li(&a);
    let mli = property_mli(&a);

    let mut t = header(&a);
    let _ = writeln!(t, "simple: {}", yes_no(simple));
    let _ = writeln!(t, "semiprime: {}", yes_no(semiprime));
    let _ = writeln!(t, "nondegenerate-left: {}", yes_no(nondeg_left));
    let _ = writeln!(t, "nondegenerate basis: {}", yes_no(Some(nondeg_basis)));
    let _ = writeln!(t, "perfect: {}", yes_no(Some(perfect)));
    let _ = writeln!(t, "associative: {}", yes_no(Some(associative)));
    let _ = writeln!(t, "2LI: {}", yes_no(Some(two_li)));
    let _ = writeln!(t, "mLI: {mli}");
    match &idem {
        Some(v) => {
            let _ = writeln!(t, "idempotents: {}", set_text(v));
        }
        None => t.push_str("idempotents: n/a (needs enumeration)\n"),
    }
    if let Some(m) = &min_ids {
        let _ = writeln!(t, "minimal ideals: {}", m.len());
    }
    if let (Some(s), Some(e)) = (&soc, &evsoc) {
        let _ = writeln!(t, "socle: {s}");
        let _ = writeln!(t, "evolution socle: {e}");
    }
    let json = json!({
        "algebra": algebra_json(&a),
        "simple": simple,
        "semiprime": semiprime,
        "nondegenerate_left": nondeg_left,
        "nondegenerate_basis": nondeg_basis,
        "perfect": perfect,
        "associative": associative,
        "two_li": two_li,
        "mli": mli,
        "idempotents": idem.as_ref().map(|v| v.iter().map(|x| vector_json(x)).collect::<Vec<_>>()),
        "minimal_ideals": min_ids.as_ref().map(|v| v.iter().map(space_json).collect::<Vec<_>>()),
        "soc_basis": soc.as_ref().map(space_json),
        "evsoc_basis": evsoc.as_ref().map(space_json),
    });
    Ok(Report { text: t, json })
}

pub fn idempotents(input: &Input, limits: &Limits) -> Outcome {
    let a = load(input)?;
    let system = idempotent_system(&a);
    let idem = all_idempotents(&a, limits)?;
    let minimal = minimal_idempotents(&a, limits)?;
    let natural = natural_idempotents(&a, limits)?;
    let mut t = header(&a);
    t.push_str("system:\n");
    for eq in system.equations() {
        let _ = writeln!(t, "  {eq}");
    }
    let _ = writeln!(t, "idempotents ({}):", idem.len());
    for e in &idem {
        let _ = writeln!(t, "  {}", format_vector(e));
    }
    let _ = writeln!(t, "minimal idempotents: {}", set_text(&minimal));
    let _ = writeln!(t, "natural idempotents: {}", set_text(&natural));
    let list = |v: &[Vec<Scalar>]| Value::Array(v.iter().map(|x| vector_json(x)).collect());
    let json = json!({
        "algebra": algebra_json(&a),
        "system": system.equations(),
        "idempotents": list(&idem),
        "minimal_idempotents": list(&minimal),
        "natural_idempotents": list(&natural),
    });
    Ok(Report { text: t, json })
}

pub fn ideals(input: &Input, limits: &Limits) -> Outcome {
    let a = load(input)?;
    let all = enumerate_ideals(&a, IdealMode::All, limits)?;
    let minimal = minimal_ideals(&a, limits)?;
    let mut t = header(&a);
    let _ = writeln!(t, "ideals ({}):", all.len());
    let mut rows = Vec::new();
    for i in &all {
        let witness = find_natural_basis(&a, i, limits)?.found();
        let is_min = minimal.contains(i);
        let mut flags = Vec::new();
        if witness.is_some() {
            flags.push("evolution");
        }
        if is_min {
            flags.push("minimal");
        }
        let _ = writeln!(t, "  dim {} {} {}", i.dim(), i, flags.join(" "));
        rows.push(json!({
            "basis": space_json(i),
            "dim": i.dim(),
            "evolution": witness.is_some(),
            "natural_basis": witness.map(|w| w.vectors().iter().map(|v| vector_json(v)).collect::<Vec<_>>()),
            "minimal": is_min,
        }));
    }
    let json = json!({ "algebra": algebra_json(&a), "ideals": rows });
    Ok(Report { text: t, json })
}

pub fn socle(input: &Input, limits: &Limits) -> Outcome {
    let a = load(input)?;
    let r = partitions(&a, limits)?;
    let mut t = header(&a);
    let _ = writeln!(t, "socle: {}", r.soc);
    let _ = writeln!(t, "evolution socle: {}", r.evsoc);
    let _ = writeln!(t, "minimal ideals: {}", r.minimal_ideals.len());
    let _ = writeln!(t, "minimal evolution ideals: {}", r.minimal_evolution_ideals.len());
    let _ = writeln!(t, "generated by a natural idempotent: {}", r.nat_min.len());
    let _ = writeln!(t, "not generated by a natural idempotent: {}", r.non_nat_min.len());
    let _ = writeln!(t, "with an extendable natural basis: {}", r.ex_min.len());
    let _ = writeln!(t, "socle of natural idempotency: {}", r.soc_nid);
    let _ = writeln!(t, "sdni: {}", r.sdni);
    let _ = writeln!(t, "msdnonni: {}", r.msdnonni);
    let _ = writeln!(t, "faithful: {}", yes_no(Some(r.faithful)));
    for w in &r.witnesses {
        let _ = writeln!(t, "  {} generated by {}", w.ideal, format_vector(&w.generator));
    }
    let mut json = to_json(&r);
    json["algebra"] = algebra_json(&a);
    Ok(Report { text: t, json })
}

pub fn lattice(input: &Input, evolution: bool, dot: bool, limits: &Limits) -> Outcome {
    let a = load(input)?;
    let poset = if evolution {
        evolution_ideal_poset(&a, limits)?
    } else {
        ideal_lattice(&a, limits)?
    };
    let name = if evolution { "evolution_ideals" } else { "ideals" };
    if dot {
        let d = poset.to_dot(name);
        return Ok(Report {
            json: json!({ "dot": d }),
            text: d,
        });
    }
    let elements = poset.elements();
    let index = |s: &Subspace| elements.iter().position(|e| e == s).expect("poset member");
    let mut t = header(&a);
    let _ = writeln!(t, "{} ({}):", name.replace('_', " "), elements.len());
    for (i, e) in elements.iter().enumerate() {
        let _ = writeln!(t, "  [{i}] {e}");
    }
    let covers = poset.covering_pairs();
    t.push_str("covering pairs:");
    for (i, j) in &covers {
        let _ = write!(t, " {i}<{j}");
    }
    t.push('\n');
    let mut json = json!({
        "algebra": algebra_json(&a),
        "elements": elements.iter().map(space_json).collect::<Vec<_>>(),
        "covers": covers,
    });
    if evolution {
        let ev = EvolutionIdeals::new(&a, limits)?;
        let mut table = Vec::new();
        t.push_str("evinf / evsup:\n");
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let lo: Vec<usize> = ev
                    .max_evid(&elements[i].intersect(&elements[j])?)
                    .iter()
                    .map(index)
                    .collect();
                let hi: Vec<usize> = ev.min_evid(&elements[i].sum(&elements[j])?).iter().map(index).collect();
                let _ = writeln!(t, "  {{{i},{j}}}: evinf {lo:?} evsup {hi:?}");
                table.push(json!({ "pair": [i, j], "evinf": lo, "evsup": hi }));
            }
        }
        let pairs = |v: Vec<(Subspace, Subspace)>| -> Vec<[usize; 2]> { v.iter().map(|(x, y)| [index(x), index(y)]).collect() };
        let ups = pairs(ev.breakups());
        let downs = pairs(ev.breakdowns());
        let _ = writeln!(t, "breakups: {ups:?}");
        let _ = writeln!(t, "breakdowns: {downs:?}");
        let _ = writeln!(t, "evlattice laws: {}", yes_no(Some(ev.verify())));
        json["fronts"] = json!(table);
        json["breakups"] = json!(ups);
        json["breakdowns"] = json!(downs);
        json["evlattice"] = json!(ev.verify());
    }
    Ok(Report { text: t, json })
}

pub fn natural_bases(input: &Input, limits: &Limits) -> Outcome {
    let a = load(input)?;
    let classes = enumerate_natural_bases(&a, limits)?;
    let report = naturality_classification(&a, limits)?;
    let mut t = header(&a);
    let _ = writeln!(t, "natural bases up to permutation and scaling: {}", classes.len());
    for c in &classes {
        let _ = writeln!(t, "  {}", set_text(c.representative()));
    }
    let _ = writeln!(t, "unique: {}", yes_no(Some(classes.len() == 1)));
    let _ = writeln!(t, "2LI: {}", yes_no(Some(property_2li(&a))));
    let count = |o: Option<usize>| o.map_or("none".to_string(), |v| v.to_string());
    let _ = writeln!(t, "surnatural: {}", count(report.surnatural));
    let _ = writeln!(t, "innatural: {}", count(report.innatural));
    let json = json!({
        "algebra": algebra_json(&a),
        "classes": classes
            .iter()
            .map(|c| c.representative().iter().map(|v| vector_json(v)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "unique": classes.len() == 1,
        "two_li": property_2li(&a),
        "idempotents": report.idempotents.iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        "incidence": report.incidence,
        "surnatural": report.surnatural,
        "innatural": report.innatural,
        "binatural": report.binatural,
    });
    Ok(Report { text: t, json })
}

pub fn fseani(field: &str, dim: usize, limits: &Limits) -> Outcome {
    let f = parse_field(field)?;
    let v = fseani_scan(f, dim, limits)?;
    let mut t = String::new();
    if v.is_fseani() {
        let _ = writeln!(t, "{f} is a {dim}-FSEANI");
    } else {
        let _ = writeln!(t, "{f} is NOT a {dim}-FSEANI");
    }
    let _ = writeln!(t, "simple algebras: {}", v.simple_count());
    let _ = writeln!(t, "  with a nonzero idempotent: {}", v.with_idempotent_count());
    if let Some(m) = v.counterexample() {
        let _ = writeln!(t, "counterexample: {m}");
    }
    let json = json!({
        "field": f.to_string(),
        "dim": dim,
        "is_fseani": v.is_fseani(),
        "counterexample": v.counterexample().map(matrix_json),
        "simple_count": v.simple_count(),
        "with_idempotent_count": v.with_idempotent_count(),
    });
    Ok(Report { text: t, json })
}

/// One probe result: `Some(detail)` marks a hit.
fn probe_one(a: &EvolutionAlgebra, probe: Probe, limits: &Limits) -> evoalg::Result<Option<Value>> {
    Ok(match probe {
        Probe::SocEvsoc => {
            let p = soc_evsoc_probe(a, limits)?;
            p.witness.map(|w| json!({ "minimal_ideal_outside_evsoc": space_json(&w) }))
        }
        Probe::SimpleRank => {
            if simple_implies_full_rank_check(a, limits)? {
                None
            } else {
                Some(json!({ "rank": a.sq().rank() }))
            }
        }
        Probe::Evlattice => {
            if EvolutionIdeals::new(a, limits)?.verify() {
                None
            } else {
                Some(json!({}))
            }
        }
        Probe::Breakup => {
            let ups = EvolutionIdeals::new(a, limits)?.breakups();
            ups.first()
                .map(|(x, y)| json!({ "pair": [space_json(x), space_json(y)], "count": ups.len() }))
        }
        Probe::Semilatticed => {
            let r = evoalg::evlattice::semilatticed_predicates(a, limits)?;
            r.sup_witness.map(|s| json!({ "subspace": space_json(&s) }))
        }
    })
}

pub fn census(field: &str, dim: usize, probe: Probe, fixtures: Option<&Path>, limits: &Limits) -> Outcome {
    let f = parse_field(field)?;
    let total = census_size(f, dim, limits)?;
    let name = probe.to_possible_value().expect("named").get_name().to_string();
    if let Some(dir) = fixtures {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    }
    let mut hits = Vec::new();
    for idx in 0..total {
        let a = census_algebra(f, dim, idx);
        if let Some(detail) = probe_one(&a, probe, limits)? {
            if let Some(dir) = fixtures {
                let labelled = a.clone().with_label(format!("{name} hit: {f} dim {dim} index {idx}"));
                let path = dir.join(format!("{name}-{idx}.evo"));
                std::fs::write(&path, labelled.to_definition())
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            hits.push(json!({ "index": idx, "sq": matrix_json(a.sq()), "detail": detail }));
        }
    }
    let mut t = String::new();
    let _ = writeln!(t, "census {f} dim {dim}, probe {name}: {total} algebras, {} hits", hits.len());
    for h in hits.iter().take(10) {
        let _ = writeln!(t, "  #{} sq {}", h["index"], h["sq"]);
    }
    if hits.len() > 10 {
        let _ = writeln!(t, "  ... {} more (use --json for the full list)", hits.len() - 10);
    }
    let json = json!({
        "field": f.to_string(),
        "dim": dim,
        "probe": name,
        "total": total,
        "hits": hits,
    });
    Ok(Report { text: t, json })
}

pub fn example(family: &str, field: &str, output: Option<&Path>) -> Outcome {
    let fam: Family = family.parse()?;
    let f = parse_field(field)?;
    let a = make_example(fam, f)?.with_label(format!("{family} over {f}"));
    let def = a.to_definition();
    let text = match output {
        Some(path) => {
            std::fs::write(path, &def).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            format!("wrote {}\n", path.display())
        }
        None => def.clone(),
    };
    let json = json!({
        "definition": def,
        "path": output.map(|p| p.display().to_string()),
    });
    Ok(Report { text, json })
}

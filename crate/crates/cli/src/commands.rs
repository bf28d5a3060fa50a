use std::path::Path;

use lie_cohomology::algebra::format_combination;
use lie_cohomology::catalog::{self, CatalogEntry};
use lie_cohomology::cochain::{cohomology, cohomology_dims, CochainEntry, CochainSpace};
use lie_cohomology::factorization::{central_extension, hs_crosscheck};
use lie_cohomology::{InvariantSetup, LieAlgebra, Representation, SparseVec, Subspace};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::AlgebraDescriptor;
use crate::Coefficients;

pub struct Output {
    pub algebra: Option<AlgebraDescriptor>,
    pub payload: Value,
}

fn resolve(spec: &str) -> Result<CatalogEntry, CliError> {
    Ok(catalog::resolve(spec)?)
}

fn module(g: &LieAlgebra, coeff: Coefficients) -> Representation {
    match coeff {
        Coefficients::Trivial => Representation::trivial(g, 1),
        Coefficients::Adjoint => Representation::adjoint(g),
    }
}

fn module_labels(rep: &Representation, coeff: Coefficients) -> Option<Vec<String>> {
    match coeff {
        Coefficients::Adjoint => Some(rep.algebra().labels().to_vec()),
        Coefficients::Trivial => None,
    }
}

/// One line per nonzero argument tuple, e.g. `(x1, z) -> 3x2`.
fn describe_cochain(space: &CochainSpace, source: &[String], target: Option<&[String]>, phi: &SparseVec) -> Vec<String> {
    let md = space.module_dim();
    let mut out = Vec::new();
    let mut i = 0;
    let entries = phi.entries();
    while i < entries.len() {
        let t = entries[i].0 / md;
        let mut value = Vec::new();
        while i < entries.len() && entries[i].0 / md == t {
            value.push((entries[i].0 % md, entries[i].1.clone()));
            i += 1;
        }
        let args: Vec<&str> = space.tuples()[t].iter().map(|&k| source[k].as_str()).collect();
        let rendered = match target {
            Some(labels) => format_combination(labels, &SparseVec::from_pairs(value)),
            None => value.iter().map(|(_, c)| c.to_string()).collect::<Vec<_>>().join(", "),
        };
        out.push(format!("({}) -> {rendered}", args.join(", ")));
    }
    out
}

pub fn info(spec: &str) -> Result<Output, CliError> {
    let entry = resolve(spec)?;
    let g = &entry.algebra;
    g.validate().map_err(|v| CliError::InvalidAlgebra(v.to_string()))?;
    let center = g.center();
    let derived = Subspace::span(g.dim(), g.structure().map(|(_, _, v)| v.clone()));
    let split = entry.split.as_ref().map(|(l, r)| {
        json!({
            "levi": l.iter().map(|&i| g.label(i)).collect::<Vec<_>>(),
            "radical": r.iter().map(|&i| g.label(i)).collect::<Vec<_>>(),
        })
    });
    Ok(Output {
        algebra: Some(AlgebraDescriptor::new(spec, g)),
        payload: json!({
            "dim": g.dim(),
            "jacobi": "ok",
            "abelian": g.is_abelian(),
            "nonzero_brackets": g.structure().count(),
            "center_dim": center.dim(),
            "center_basis": center.basis().iter().map(|v| g.format_element(v)).collect::<Vec<_>>(),
            "derived_algebra_dim": derived.dim(),
            "split": split,
        }),
    })
}

pub fn cohomology_cmd(spec: &str, coeff: Coefficients, degree: usize, reps: bool) -> Result<Output, CliError> {
    let entry = resolve(spec)?;
    let g = &entry.algebra;
    let rep = module(g, coeff);
    let mut payload = json!({ "coefficients": coeff.name(), "degree": degree });
    if reps {
        let res = cohomology(&rep, degree)?;
        let dims = res.dims();
        extend(&mut payload, serde_json::to_value(dims).unwrap());
        let space = CochainSpace::for_rep(&rep, degree);
        let target = module_labels(&rep, coeff);
        let described: Vec<Vec<String>> = res
            .representatives
            .iter()
            .map(|r| describe_cochain(&space, g.labels(), target.as_deref(), r))
            .collect();
        payload["representatives"] = json!(described);
    } else {
        extend(&mut payload, serde_json::to_value(cohomology_dims(&rep, degree)?).unwrap());
    }
    Ok(Output { algebra: Some(AlgebraDescriptor::new(spec, g)), payload })
}

fn extend(target: &mut Value, extra: Value) {
    if let (Value::Object(t), Value::Object(e)) = (target, extra) {
        for (k, v) in e {
            if k != "degree" {
                t.insert(k, v);
            }
        }
    }
}

pub fn derivations(spec: &str) -> Result<Output, CliError> {
    let entry = resolve(spec)?;
    let g = &entry.algebra;
    let total = g.derivation_space().dim();
    let inner = g.inner_derivations().dim();
    let h1 = cohomology_dims(&Representation::adjoint(g), 1)?.dim_cohomology;
    if total - inner != h1 {
        return Err(CliError::Consistency(format!(
            "dim Der - dim Inn = {} but dim H^1(adjoint) = {h1}",
            total - inner
        )));
    }
    Ok(Output {
        algebra: Some(AlgebraDescriptor::new(spec, g)),
        payload: json!({ "total": total, "inner": inner, "outer": total - inner, "h1_adjoint": h1 }),
    })
}

fn setup_for(
    entry: &CatalogEntry,
    levi: Option<&str>,
    radical: Option<&str>,
    coeff: Coefficients,
) -> Result<InvariantSetup, CliError> {
    let (default_levi, default_radical) = entry.split.clone().unwrap_or_default();
    let levi = match levi {
        Some(l) => entry.part(l).map_err(|e| CliError::Usage(e.to_string()))?,
        None => default_levi,
    };
    let radical = match radical {
        Some(r) => entry.part(r).map_err(|e| CliError::Usage(e.to_string()))?,
        None if entry.split.is_some() => default_radical,
        None => (0..entry.algebra.dim()).filter(|i| !levi.contains(i)).collect(),
    };
    Ok(InvariantSetup::new(module(&entry.algebra, coeff), levi, radical)?)
}

fn labels_of(g: &LieAlgebra, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| g.label(i).to_string()).collect()
}

pub fn invariant_cohomology(
    ambient: &str,
    levi: Option<&str>,
    radical: Option<&str>,
    coeff: Coefficients,
    degree: usize,
    reps: bool,
) -> Result<Output, CliError> {
    let entry = resolve(ambient)?;
    let setup = setup_for(&entry, levi, radical, coeff)?;
    let g = &entry.algebra;
    let res = setup.invariant_cohomology(degree)?;
    let mut payload = json!({
        "levi": labels_of(g, setup.levi()),
        "radical": labels_of(g, setup.radical()),
        "coefficients": coeff.name(),
        "degree": degree,
        "dim_cochain": res.dim_cochain,
        "dim_invariant_cochains": setup.invariant_subspace(degree).dim(),
        "dim_invariant_cocycles": res.dim_cocycles,
        "dim_invariant_coboundaries": res.dim_coboundaries,
        "dim_cohomology": res.dim_cohomology,
    });
    if reps {
        let space = setup.cochain_space(degree);
        let source = labels_of(g, setup.radical());
        let target = module_labels(setup.module(), coeff);
        payload["representatives"] = json!(res
            .representatives
            .iter()
            .map(|r| describe_cochain(&space, &source, target.as_deref(), r))
            .collect::<Vec<_>>());
    }
    Ok(Output { algebra: Some(AlgebraDescriptor::new(ambient, g)), payload })
}

pub fn hs_check(
    ambient: &str,
    levi: Option<&str>,
    radical: Option<&str>,
    coeff: Coefficients,
    degree: usize,
) -> Result<Output, CliError> {
    let entry = resolve(ambient)?;
    let setup = setup_for(&entry, levi, radical, coeff)?;
    let report = hs_crosscheck(&setup, degree)?;
    if !report.agree {
        return Err(CliError::Consistency(format!(
            "direct dim {} differs from factorized dim {}",
            report.direct, report.factorized
        )));
    }
    let g = &entry.algebra;
    let mut payload = json!({
        "levi": labels_of(g, setup.levi()),
        "radical": labels_of(g, setup.radical()),
        "coefficients": coeff.name(),
        "degree": degree,
    });
    extend(&mut payload, serde_json::to_value(&report).unwrap());
    Ok(Output { algebra: Some(AlgebraDescriptor::new(ambient, g)), payload })
}

/// Extension by a cocycle read from `cocycle` (JSON list of
/// `[[i, j], m, "p/q"]` entries, `m < central`) or by the
/// `representative`-th basis class of `H^2(g, Q)`.
pub fn extend_cmd(
    spec: &str,
    cocycle: Option<&Path>,
    representative: Option<usize>,
    central: usize,
) -> Result<Output, CliError> {
    let entry = resolve(spec)?;
    let g = &entry.algebra;
    let (phi, k) = match (cocycle, representative) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let entries: Vec<CochainEntry> = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("malformed cocycle file: {e}")))?;
            let space = CochainSpace::new(g.dim(), central, 2);
            (space.from_json(&entries)?, central)
        }
        (None, Some(i)) => {
            let res = cohomology(&Representation::trivial(g, 1), 2)?;
            let phi = res.representatives.get(i).cloned().ok_or_else(|| {
                CliError::Usage(format!("representative {i} out of range; dim H^2 = {}", res.dim_cohomology))
            })?;
            (phi, 1)
        }
        (None, None) => (SparseVec::new(), central),
        (Some(_), Some(_)) => return Err(CliError::Usage("give either --cocycle or --representative".into())),
    };
    let ext = central_extension(g, &phi, k)?;
    let file: Value = serde_json::from_str(&catalog::serialize(&ext)).expect("canonical json");
    Ok(Output {
        algebra: Some(AlgebraDescriptor::new(spec, g)),
        payload: json!({
            "central_generators": k,
            "extension_dim": ext.dim(),
            "extension_center_dim": ext.center().dim(),
            "jacobi": "ok",
            "extension": file,
        }),
    })
}

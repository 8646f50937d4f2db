//! WebAssembly bindings for the browser demo.
//!
//! Every entry point takes algebra text and returns a JSON string. Errors
//! come back as `{"error": "..."}` so the page never has to catch.

use pbci::congruences::relcong_lattice;
use pbci::structure::{group_part, integral_part};
use pbci::{
    all_filters, all_prefilters, builtin_example, check_pseudo_bci, check_pseudo_bck, decompose, derive_order,
    Algebra, Error, FiniteLattice, Verdict, VerificationReport,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse(text: &str) -> Result<Algebra, String> {
    Algebra::parse(text).map_err(|e| e.to_string())
}

fn verified(text: &str) -> Result<Algebra, String> {
    let a = parse(text)?;
    match check_pseudo_bci(&a).first() {
        None => Ok(a),
        Some(v) => Err(format!("not a pseudo-BCI-algebra: {v}")),
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Longest chain from a minimal element, used as the drawing height.
fn ranks(n: usize, covers: &[(usize, usize)]) -> Vec<usize> {
    let mut rank = vec![0; n];
    // covers only go upward, so n rounds of relaxation settle every rank
    for _ in 0..n {
        for &(x, y) in covers {
            rank[y] = rank[y].max(rank[x] + 1);
        }
    }
    rank
}

fn diagram(labels: Vec<String>, covers: Vec<(usize, usize)>) -> Value {
    let rank = ranks(labels.len(), &covers);
    json!({ "labels": labels, "ranks": rank, "covers": covers })
}

fn report_json(r: &VerificationReport) -> Value {
    match r.first() {
        None => json!({ "passed": true }),
        Some(v) => json!({ "passed": false, "reason": v.to_string() }),
    }
}

/// The built-in six-element example as algebra text.
#[wasm_bindgen]
pub fn example() -> String {
    builtin_example().to_text()
}

/// Axiom verdicts, the order diagram and the two parts.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    respond(analyze_value(text))
}

fn analyze_value(text: &str) -> Result<Value, String> {
    let a = parse(text)?;
    let bci = check_pseudo_bci(&a);
    let bck = check_pseudo_bck(&a);
    let mut out = json!({
        "size": a.size(),
        "pseudo_bci": report_json(&bci),
        "pseudo_bck": report_json(&bck),
    });
    if bci.passed {
        let order = derive_order(&a).map_err(err)?;
        let names = a.names().iter().map(|s| s.to_string()).collect();
        out["order"] = diagram(names, order.hasse_pairs());
        let names_of = |s: pbci::Subset| s.iter().map(|x| a.name(x)).collect::<Vec<_>>();
        out["integral_part"] = json!(names_of(integral_part(&a)));
        out["group_part"] = json!(names_of(group_part(&a)));
    }
    Ok(out)
}

fn verdict(v: &Verdict) -> Value {
    match v {
        Ok(()) => json!({ "passed": true }),
        Err(w) => json!({ "passed": false, "witness": w.witness }),
    }
}

fn lattice_value<T: Sync>(l: &FiniteLattice<T>) -> Result<Value, String> {
    let mut out = diagram(l.labels().to_vec(), l.hasse_pairs());
    out["modular"] = verdict(&l.is_modular());
    out["distributive"] = verdict(&l.is_distributive());
    out["arguesian"] = verdict(&l.is_arguesian().map_err(err)?);
    out["pentagon"] = json!(l.n5_witness());
    Ok(out)
}

/// A lattice of the algebra with its identity checks. `kind` is
/// `filters`, `prefilters` or `congruences`.
#[wasm_bindgen]
pub fn lattice(text: &str, kind: &str) -> String {
    respond(verified(text).and_then(|a| match kind {
        "filters" => lattice_value(&FiniteLattice::from_closed_family(all_filters(&a).map_err(err)?, a.names()).map_err(err)?),
        "prefilters" => {
            lattice_value(&FiniteLattice::from_closed_family(all_prefilters(&a).map_err(err)?, a.names()).map_err(err)?)
        }
        "congruences" => lattice_value(&relcong_lattice(&a).map_err(err)?),
        other => Err(format!("unknown lattice kind `{other}`")),
    }))
}

/// The decomposition report, plus a one-line verdict.
#[wasm_bindgen]
pub fn decomposition(text: &str) -> String {
    respond(verified(text).and_then(|a| {
        let r = decompose(&a).map_err(err)?;
        let mut v = serde_json::to_value(&r).map_err(|e| e.to_string())?;
        v["decomposable"] = json!(r.decomposable());
        v["summary"] = json!(r.failure_summary().unwrap_or_else(|| "decomposable".into()));
        Ok(v)
    }))
}

/// The same algebra with its arrows swapped.
#[wasm_bindgen]
pub fn dagger(text: &str) -> String {
    respond(parse(text).map(|a| json!({ "algebra": a.dagger().to_text() })))
}

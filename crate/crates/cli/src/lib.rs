//! The `pbci` command line.
//!
//! Exit status: 0 when the tool ran and every property it reports holds,
//! 1 when it ran and a property fails (the witness is printed), 2 on bad
//! input or usage.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use pbci::congruences::{all_congruences, is_relative, quotient, relcong_lattice};
use pbci::embedding::{build_j, embed};
use pbci::filters::{filter_generated, prefilter_generated};
use pbci::search::{enumerate_capped, Class, SearchSpec};
use pbci::structure::{
    delta_of, direct_product, group_part, group_view, integral_part, is_p_semisimple, union_construction,
};
use pbci::{
    all_filters, all_prefilters, builtin_example, check_pseudo_bci, check_pseudo_bck, decompose, derive_order,
    find_isomorphism, Algebra, Error, FiniteLattice, Partition, Subset, Verdict, VerificationReport, Violation,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "pbci", version, about = "Finite-model laboratory for pseudo-BCK- and pseudo-BCI-algebras")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check the pseudo-BCI and pseudo-BCK axioms.
    Check { file: PathBuf },
    /// Order, integral and group parts, and the maps onto the group part.
    Info { file: PathBuf },
    /// List filters (or prefilters), or the one generated by some elements.
    Filters {
        file: PathBuf,
        #[arg(long)]
        prefilters: bool,
        /// Comma-separated generating elements.
        #[arg(long, value_name = "e1,e2,...")]
        generate: Option<String>,
    },
    /// List congruences, or print a quotient.
    Congruences {
        file: PathBuf,
        /// Only relative congruences.
        #[arg(long)]
        relative: bool,
        /// Blocks like `a,b,1|x,y,g`; unlisted elements are singletons.
        #[arg(long, value_name = "BLOCKSPEC")]
        quotient: Option<String>,
    },
    /// Build a lattice and test lattice identities on it.
    Lattice {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "filters")]
        kind: LatticeKind,
        #[arg(long, value_enum, default_value = "all")]
        check: LatticeCheck,
    },
    /// Embed into a residuated po-monoid of order filters.
    Embed {
        file: PathBuf,
        /// Write the word-image monoid to this file.
        #[arg(long, value_name = "OUT")]
        emit_monoid: Option<PathBuf>,
    },
    /// Test whether the algebra is the product of its integral and group parts.
    Decompose { file: PathBuf },
    /// Enumerate models up to isomorphism.
    Search {
        #[arg(long)]
        size: usize,
        /// Shorthand for `--class pbck`.
        #[arg(long)]
        pbck: bool,
        #[arg(long, value_enum, default_value = "pbci")]
        class: ClassArg,
        #[arg(long)]
        predicate: Option<String>,
        #[arg(long)]
        limit: Option<usize>,
        /// Write each model to its own file here, plus a manifest.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Find an isomorphism between two algebras.
    Iso { a: PathBuf, b: PathBuf },
    /// Direct product of two algebras.
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Union of a pseudo-BCK-algebra with the group of a p-semisimple algebra.
    Union {
        b: PathBuf,
        h: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Fail on name clashes instead of priming names.
        #[arg(long)]
        no_rename: bool,
    },
    /// Swap the two arrows.
    Dagger {
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The six-element example that is not a product of its parts.
    Example {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LatticeKind {
    Filters,
    Prefilters,
    Congruences,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum LatticeCheck {
    Modular,
    Distributive,
    Arguesian,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassArg {
    Pbci,
    Pbck,
    Group,
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    json: Value,
    holds: bool,
}

impl Report {
    fn new(text: String, json: Value, holds: bool) -> Report {
        Report { text, json, holds }
    }
}

/// Bad input: exit status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<Report, InputError>;

/// Runs the command line given as `args` (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match dispatch(cli.verb) {
        Ok(r) => {
            let stdout = if json {
                let mut s = serde_json::to_string_pretty(&r.json).expect("report serialises");
                s.push('\n');
                s
            } else {
                r.text
            };
            Outcome {
                code: if r.holds { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(InputError(msg)) => Outcome {
            code: 2,
            stdout: if json {
                format!("{}\n", json!({ "error": msg }))
            } else {
                String::new()
            },
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(verb: Verb) -> Run {
    match verb {
        Verb::Check { file } => check(&file),
        Verb::Info { file } => info(&file),
        Verb::Filters { file, prefilters, generate } => filters(&file, prefilters, generate.as_deref()),
        Verb::Congruences { file, relative, quotient } => congruences(&file, relative, quotient.as_deref()),
        Verb::Lattice { file, kind, check } => lattice(&file, kind, check),
        Verb::Embed { file, emit_monoid } => embed_verb(&file, emit_monoid.as_deref()),
        Verb::Decompose { file } => decompose_verb(&file),
        Verb::Search { size, pbck, class, predicate, limit, out } => {
            let class = match (pbck, class) {
                (true, _) | (_, ClassArg::Pbck) => Class::Pbck,
                (_, ClassArg::Pbci) => Class::Pbci,
                (_, ClassArg::Group) => Class::Group,
            };
            search(size, class, predicate, limit, out.as_deref())
        }
        Verb::Iso { a, b } => iso(&a, &b),
        Verb::Product { a, b, out } => {
            let p = direct_product(&load_verified(&a)?, &load_verified(&b)?)?;
            emit(&p, out.as_deref())
        }
        Verb::Union { b, h, out, no_rename } => union(&b, &h, out.as_deref(), !no_rename),
        Verb::Dagger { file, out } => emit(&load(&file)?.dagger(), out.as_deref()),
        Verb::Example { out } => emit(&builtin_example(), out.as_deref()),
    }
}

fn load(path: &Path) -> Result<Algebra, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Algebra::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Loads an algebra that must satisfy the pseudo-BCI axioms.
fn load_verified(path: &Path) -> Result<Algebra, InputError> {
    let a = load(path)?;
    match check_pseudo_bci(&a).first() {
        None => Ok(a),
        Some(v) => Err(InputError(format!(
            "{}: not a pseudo-BCI-algebra: {v}",
            path.display()
        ))),
    }
}

fn set_text(a: &Algebra, s: Subset) -> String {
    s.display_with(a.names())
}

fn set_json(a: &Algebra, s: Subset) -> Value {
    json!(s.iter().map(|x| a.name(x)).collect::<Vec<_>>())
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Short reason for a failed report: the detail when present, otherwise
/// the law and witness.
fn brief(v: &Violation) -> String {
    if v.detail.is_empty() {
        format!("{} at ({})", v.law, v.witness.join(","))
    } else {
        v.detail.clone()
    }
}

fn report_line(label: &str, r: &VerificationReport) -> String {
    match r.first() {
        None => format!("{label}: PASS"),
        Some(v) => format!("{label}: FAIL ({})", brief(v)),
    }
}

fn verdict_line(label: &str, v: &Verdict) -> String {
    match v {
        Ok(()) => format!("{label}: PASS"),
        Err(w) => format!("{label}: FAIL at ({})", w.witness.join(",")),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Ok(()) => json!({ "passed": true }),
        Err(w) => json!({ "passed": false, "witness": w }),
    }
}

fn check(file: &Path) -> Run {
    let a = load(file)?;
    let bci = check_pseudo_bci(&a);
    let bck = check_pseudo_bck(&a);
    let text = format!(
        "{}; {}\n",
        report_line("pseudo-BCI", &bci),
        report_line("pseudo-BCK", &bck)
    );
    let holds = bci.passed;
    Ok(Report::new(text, json!({ "pseudo_bci": bci, "pseudo_bck": bck }), holds))
}

fn info(file: &Path) -> Run {
    let a = load_verified(file)?;
    let order = derive_order(&a)?;
    let (i, g) = (integral_part(&a), group_part(&a));
    let u = a.unit();
    let hasse: Vec<(String, String)> = order
        .hasse_pairs()
        .into_iter()
        .map(|(x, y)| (a.name(x).to_string(), a.name(y).to_string()))
        .collect();
    let gamma: Vec<(&str, &str)> = a.elements().map(|x| (a.name(x), a.name(a.arrow(x, u)))).collect();
    let delta: Vec<(&str, &str)> = a.elements().map(|x| (a.name(x), a.name(delta_of(&a, x)))).collect();
    let view = group_view(&a)?;
    let gnames: Vec<&str> = view.members.iter().map(|&m| a.name(m)).collect();
    let table: Vec<Vec<&str>> = view
        .members
        .iter()
        .map(|&p| view.members.iter().map(|&q| a.name(view.mul(p, q))).collect())
        .collect();
    let semisimple = is_p_semisimple(&a);

    let mut t = String::new();
    writeln!(t, "size: {}", a.size()).unwrap();
    writeln!(t, "unit: {}", a.name(u)).unwrap();
    let covers: Vec<String> = hasse.iter().map(|(x, y)| format!("{x}<{y}")).collect();
    writeln!(t, "covers: {}", covers.join(" ")).unwrap();
    writeln!(t, "I_A: {}", set_text(&a, i)).unwrap();
    writeln!(t, "G_A: {}", set_text(&a, g)).unwrap();
    writeln!(t, "p-semisimple: {}", if semisimple { "yes" } else { "no" }).unwrap();
    let maps = |m: &[(&str, &str)]| m.iter().map(|(x, y)| format!("{x}↦{y}")).collect::<Vec<_>>().join(" ");
    writeln!(t, "x→1: {}", maps(&gamma)).unwrap();
    writeln!(t, "(x→1)→1: {}", maps(&delta)).unwrap();
    writeln!(t, "group on G_A:").unwrap();
    writeln!(t, "  · | {}", gnames.join(" ")).unwrap();
    for (p, row) in gnames.iter().zip(&table) {
        writeln!(t, "  {p} | {}", row.join(" ")).unwrap();
    }
    let json = json!({
        "size": a.size(),
        "unit": a.name(u),
        "covers": hasse,
        "integral_part": set_json(&a, i),
        "group_part": set_json(&a, g),
        "p_semisimple": semisimple,
        "gamma": gamma,
        "delta": delta,
        "group": { "elements": gnames, "table": table },
    });
    Ok(Report::new(t, json, true))
}

fn parse_elements(a: &Algebra, list: &str) -> Result<Subset, InputError> {
    let mut s = Subset::EMPTY;
    for name in list.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        s.insert(a.index_of(name)?);
    }
    Ok(s)
}

fn filters(file: &Path, prefilters: bool, generate: Option<&str>) -> Run {
    let a = load_verified(file)?;
    let kind = if prefilters { "prefilter" } else { "filter" };
    if let Some(list) = generate {
        let s = parse_elements(&a, list)?;
        let f = if prefilters {
            prefilter_generated(&a, s)?
        } else {
            filter_generated(&a, s)?
        };
        let text = format!("{}\n", set_text(&a, f));
        let json = json!({ "kind": kind, "generators": set_json(&a, s), "generated": set_json(&a, f) });
        return Ok(Report::new(text, json, true));
    }
    let family = if prefilters { all_prefilters(&a)? } else { all_filters(&a)? };
    let text: String = family.iter().map(|&s| format!("{}\n", set_text(&a, s))).collect();
    let json = json!({ "kind": kind, "members": family.iter().map(|&s| set_json(&a, s)).collect::<Vec<_>>() });
    Ok(Report::new(text, json, true))
}

fn partition_json(a: &Algebra, p: &Partition) -> Value {
    json!(p.blocks().iter().map(|&b| set_json(a, b)).collect::<Vec<_>>())
}

fn congruences(file: &Path, relative_only: bool, blockspec: Option<&str>) -> Run {
    let a = load_verified(file)?;
    if let Some(spec) = blockspec {
        let theta = Partition::parse(&a, spec)?;
        return match quotient(&a, &theta) {
            Ok(q) => {
                let relative = check_pseudo_bci(&q).passed;
                let json = json!({
                    "partition": partition_json(&a, &theta),
                    "relative": relative,
                    "quotient": q.to_text(),
                });
                Ok(Report::new(q.to_text(), json, true))
            }
            Err(Error::NotACongruence(v)) => {
                let text = format!("not a congruence: {v}\n");
                let json = json!({ "partition": partition_json(&a, &theta), "congruence": false, "witness": v });
                Ok(Report::new(text, json, false))
            }
            Err(e) => Err(e.into()),
        };
    }
    let mut text = String::new();
    let mut items = Vec::new();
    for theta in all_congruences(&a) {
        let relative = is_relative(&a, &theta)?;
        if relative_only && !relative {
            continue;
        }
        let label = if relative { "relative" } else { "non-relative" };
        writeln!(text, "{}  {label}", theta.display_with(a.names())).unwrap();
        items.push(json!({ "blocks": partition_json(&a, &theta), "relative": relative }));
    }
    Ok(Report::new(text, json!({ "congruences": items }), true))
}

fn lattice_report<T>(l: &FiniteLattice<T>, check: LatticeCheck, kind: &str) -> Run
where
    T: Sync,
{
    let mut verdicts: Vec<(&str, Verdict)> = Vec::new();
    if matches!(check, LatticeCheck::Modular | LatticeCheck::All) {
        verdicts.push(("modular", l.is_modular()));
    }
    if matches!(check, LatticeCheck::Distributive | LatticeCheck::All) {
        verdicts.push(("distributive", l.is_distributive()));
    }
    if matches!(check, LatticeCheck::Arguesian | LatticeCheck::All) {
        verdicts.push(("arguesian", l.is_arguesian()?));
    }
    let covers: Vec<(String, String)> = l
        .hasse_pairs()
        .into_iter()
        .map(|(x, y)| (l.label(x).to_string(), l.label(y).to_string()))
        .collect();
    let mut t = String::new();
    writeln!(t, "{kind} lattice, {} elements", l.size()).unwrap();
    for label in l.labels() {
        writeln!(t, "  {label}").unwrap();
    }
    writeln!(t, "covers:").unwrap();
    for (x, y) in &covers {
        writeln!(t, "  {x} < {y}").unwrap();
    }
    for (name, v) in &verdicts {
        writeln!(t, "{}", verdict_line(name, v)).unwrap();
    }
    if let Some(w) = l.n5_witness() {
        let names: Vec<&str> = w.iter().map(|&i| l.label(i)).collect();
        writeln!(t, "pentagon: {}", names.join(" ")).unwrap();
    }
    let holds = verdicts.iter().all(|(_, v)| v.is_ok());
    let json = json!({
        "kind": kind,
        "elements": l.labels(),
        "covers": covers,
        "checks": verdicts.iter().map(|(n, v)| (n.to_string(), verdict_json(v))).collect::<serde_json::Map<_, _>>(),
        "pentagon": l.n5_witness().map(|w| w.iter().map(|&i| l.label(i).to_string()).collect::<Vec<_>>()),
    });
    Ok(Report::new(t, json, holds))
}

fn lattice(file: &Path, kind: LatticeKind, check: LatticeCheck) -> Run {
    let a = load_verified(file)?;
    match kind {
        LatticeKind::Filters => {
            let l = FiniteLattice::from_closed_family(all_filters(&a)?, a.names())?;
            lattice_report(&l, check, "filter")
        }
        LatticeKind::Prefilters => {
            let l = FiniteLattice::from_closed_family(all_prefilters(&a)?, a.names())?;
            lattice_report(&l, check, "prefilter")
        }
        LatticeKind::Congruences => lattice_report(&relcong_lattice(&a)?, check, "relative congruence"),
    }
}

fn embed_verb(file: &Path, emit_monoid: Option<&Path>) -> Run {
    let a = load_verified(file)?;
    let e = embed(&a)?;
    let r = &e.target.structure;
    if let Some(path) = emit_monoid {
        let j = build_j(&a)?;
        let mut t = String::new();
        writeln!(t, "# word-image monoid: element, then its set and a word producing it").unwrap();
        for (k, w) in j.elements.iter().enumerate() {
            let word: Vec<&str> = w.rep.iter().map(|&x| a.name(x)).collect();
            writeln!(t, "J{k} = {} by {}", j.labels[k], word.join(" ")).unwrap();
        }
        writeln!(t, "unit: J{}", j.unit).unwrap();
        writeln!(t, "product:").unwrap();
        for x in 0..j.size() {
            let row: Vec<String> = (0..j.size()).map(|y| format!("J{}", j.mul(x, y))).collect();
            writeln!(t, "{}", row.join(" ")).unwrap();
        }
        fs::write(path, t).map_err(|err| InputError(format!("{}: {err}", path.display())))?;
    }
    let images: Vec<(String, String)> = a
        .elements()
        .map(|x| (a.name(x).to_string(), r.labels[e.map[x]].clone()))
        .collect();
    let c = &e.check;
    let mut t = String::new();
    writeln!(t, "|J(A)| = {}", e.j_size()).unwrap();
    writeln!(t, "|F| = {}", e.f_size()).unwrap();
    writeln!(t, "{}", report_line("arrow axioms", &c.axioms)).unwrap();
    writeln!(t, "{}", report_line("residuation law", &c.residuation)).unwrap();
    writeln!(t, "semi-integral: {}", pass_fail(c.semi_integral)).unwrap();
    writeln!(t, "integral: {}", if c.integral { "yes" } else { "no" }).unwrap();
    writeln!(t, "embedding: injective homomorphism verified").unwrap();
    for (x, img) in &images {
        writeln!(t, "  {x} ↦ {img}").unwrap();
    }
    let json = json!({
        "j_size": e.j_size(),
        "f_size": e.f_size(),
        "axioms": c.axioms,
        "residuation": c.residuation,
        "semi_integral": c.semi_integral,
        "integral": c.integral,
        "embedding_verified": true,
        "images": images,
    });
    Ok(Report::new(t, json, c.passed() && c.semi_integral))
}

fn decompose_verb(file: &Path) -> Run {
    let a = load_verified(file)?;
    let r = decompose(&a)?;
    let mut t = String::new();
    writeln!(t, "I_A: {{{}}}", r.integral_part.join(",")).unwrap();
    writeln!(t, "G_A: {{{}}}", r.group_part.join(",")).unwrap();
    let row = |t: &mut String, name: &str, holds: bool, w: Option<&Violation>| {
        let w = w.map(|v| format!("  at ({})", v.witness.join(","))).unwrap_or_default();
        writeln!(t, "  {:<28} {}{w}", name, pass_fail(holds)).unwrap();
    };
    writeln!(t, "conditions:").unwrap();
    for c in &r.conditions {
        row(&mut t, &c.name, c.holds, c.witness.as_ref());
    }
    let ga = &r.group_arrows_agree;
    row(&mut t, &ga.name, ga.holds, ga.witness.as_ref());
    let gf = &r.group_part_is_filter;
    row(&mut t, &gf.name, gf.holds, gf.witness.as_ref());
    row(&mut t, "A ≅ I_A × G_A", r.isomorphic_to_product, None);
    row(&mut t, "I_A × G_A ≅ I_A × G_A†", r.product_isomorphic_to_dagger_product, None);
    if let Some(v) = r.eta_verified {
        row(&mut t, "(i,g) ↦ g→i is an isomorphism", v, None);
    }
    row(&mut t, "criteria agree", r.triad_agrees, None);
    match r.failure_summary() {
        None => writeln!(t, "decomposable").unwrap(),
        Some(s) => writeln!(t, "{s}").unwrap(),
    }
    let mut json = serde_json::to_value(&r).expect("report serialises");
    json["decomposable"] = json!(r.decomposable());
    json["summary"] = json!(r.failure_summary());
    Ok(Report::new(t, json, r.decomposable()))
}

/// Size cap for search, overridable with `PBCI_MAX_SIZE`.
fn search_cap(class: Class) -> Result<usize, InputError> {
    match std::env::var("PBCI_MAX_SIZE") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| InputError(format!("PBCI_MAX_SIZE must be a number, got `{v}`"))),
        Err(_) => Ok(class.default_cap()),
    }
}

fn search(size: usize, class: Class, predicate: Option<String>, limit: Option<usize>, out: Option<&Path>) -> Run {
    let spec = SearchSpec {
        size,
        class,
        predicate: predicate.clone(),
        limit,
    };
    let models = enumerate_capped(&spec, search_cap(class)?)?;
    let mut t = String::new();
    writeln!(t, "{} model(s)", models.len()).unwrap();
    let mut files = Vec::new();
    if let Some(dir) = out {
        let io = |e: std::io::Error| InputError(format!("{}: {e}", dir.display()));
        fs::create_dir_all(dir).map_err(io)?;
        for (k, a) in models.iter().enumerate() {
            let name = format!("model-{:04}.alg", k + 1);
            fs::write(dir.join(&name), a.to_text()).map_err(io)?;
            files.push(name);
        }
        let manifest = json!({ "spec": spec, "files": files });
        let text = serde_json::to_string_pretty(&manifest).expect("manifest serialises");
        fs::write(dir.join("manifest.json"), text + "\n").map_err(io)?;
        writeln!(t, "wrote {} file(s) and manifest.json to {}", files.len(), dir.display()).unwrap();
    } else {
        for (k, a) in models.iter().enumerate() {
            writeln!(t, "# model {}", k + 1).unwrap();
            t.push_str(&a.to_text());
        }
    }
    let holds = predicate.is_none() || !models.is_empty();
    let json = json!({
        "spec": spec,
        "count": models.len(),
        "models": models.iter().map(Algebra::to_text).collect::<Vec<_>>(),
        "files": files,
    });
    Ok(Report::new(t, json, holds))
}

fn iso(pa: &Path, pb: &Path) -> Run {
    let (a, b) = (load(pa)?, load(pb)?);
    match find_isomorphism(&a, &b) {
        Some(map) => {
            let pairs: Vec<(&str, &str)> = a.elements().map(|x| (a.name(x), b.name(map[x]))).collect();
            let text: String = pairs.iter().map(|(x, y)| format!("{x} ↦ {y}\n")).collect();
            Ok(Report::new(text, json!({ "isomorphic": true, "map": pairs }), true))
        }
        None => Ok(Report::new(
            "not isomorphic\n".into(),
            json!({ "isomorphic": false, "map": null }),
            false,
        )),
    }
}

fn union(pb: &Path, ph: &Path, out: Option<&Path>, rename: bool) -> Run {
    let b = load(pb)?;
    if let Some(v) = check_pseudo_bck(&b).first() {
        return Err(InputError(format!("{}: not a pseudo-BCK-algebra: {v}", pb.display())));
    }
    let h = load_verified(ph)?;
    if !is_p_semisimple(&h) {
        return Err(InputError(format!("{}: not p-semisimple, so not a group", ph.display())));
    }
    let u = union_construction(&b, &group_view(&h)?.group, rename)?;
    emit(&u, out)
}

/// Writes an algebra to `out`, or returns its text for stdout.
fn emit(a: &Algebra, out: Option<&Path>) -> Run {
    let text = a.to_text();
    let json = json!({ "algebra": text, "file": out.map(|p| p.display().to_string()) });
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            Ok(Report::new(format!("wrote {}\n", path.display()), json, true))
        }
        None => Ok(Report::new(text, json, true)),
    }
}

//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use pbci::congruences::{iso_with_filters, join_characterization, relative_congruences, relcong_lattice};
use pbci::decomposition::{
    associativity_conditions, check_dot_star_laws, check_group_arrows_agree, check_group_part_laws, decompose,
};
use pbci::embedding::{build_f, build_j, check_residuated_pomonoid, embed};
use pbci::filters::{filter_generated, prefilter_generated};
use pbci::lattice::is_sublattice;
use pbci::search::{enumerate, Class, SearchSpec};
use pbci::structure::{direct_product, group_part, group_to_algebra, integral_part, Group};
use pbci::subset::sort_family;
use pbci::{
    all_filters, all_prefilters, builtin_example, check_arithmetic_laws, check_pseudo_bci, check_pseudo_bck,
    find_isomorphism, Algebra, Error, FiniteLattice, Subset,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ex6_reproduction() -> Outcome {
    let a = builtin_example();
    let i = |n: &str| a.index_of(n).unwrap();
    ensure(check_pseudo_bci(&a).passed, || "EX6 fails the pseudo-BCI axioms".into())?;
    ensure(!check_pseudo_bck(&a).passed, || "EX6 passes the pseudo-BCK axioms".into())?;
    ensure(integral_part(&a) == Subset::from_elements([i("a"), i("b"), i("1")]), || "I_A ≠ {a,b,1}".into())?;
    ensure(group_part(&a) == Subset::from_elements([i("g"), i("1")]), || "G_A ≠ {g,1}".into())?;
    let conditions = associativity_conditions(&a);
    ensure(conditions.iter().all(|c| c.is_ok()), || "an associativity condition fails".into())?;
    let v = check_group_arrows_agree(&a).err().ok_or("g→x = g⇝x holds on G×I")?;
    ensure(v.witness == ["g", "a"], || format!("witness {:?}", v.witness))?;
    ensure(v.detail == "g→a=y ≠ x=g⇝a", || format!("detail {}", v.detail))?;
    let r = decompose(&a).map_err(err)?;
    ensure(!r.decomposable(), || "reported decomposable".into())?;
    let product = direct_product(
        &a.subalgebra(integral_part(&a)).map_err(err)?,
        &a.subalgebra(group_part(&a)).map_err(err)?,
    )
    .map_err(err)?;
    ensure(find_isomorphism(&a, &product).is_none(), || "EX6 ≅ I×G".into())?;
    Ok(format!("g→a=y ≠ x=g⇝a; {}", r.failure_summary().unwrap_or_default()))
}

fn axiom_and_lemma_suite() -> Outcome {
    let models = small_with_ex6();
    for a in &models {
        for (name, report) in [
            ("arithmetic laws", check_arithmetic_laws(a)),
            ("dot/star laws", check_dot_star_laws(a)),
            ("group-part laws", check_group_part_laws(a)),
        ] {
            ensure(report.passed, || format!("{name} fail on\n{}", a.to_text()))?;
        }
        let v = associativity_conditions(a);
        ensure(v.iter().all(|c| c.is_ok() == v[0].is_ok()), || {
            format!("associativity verdicts diverge on\n{}", a.to_text())
        })?;
    }
    Ok(format!("{} algebras", models.len()))
}

fn lattice_identities() -> Outcome {
    let mut bck = 0;
    for a in SMALL.iter() {
        let fil = FiniteLattice::from_closed_family(all_filters(a).map_err(err)?, a.names()).map_err(err)?;
        let pfil = FiniteLattice::from_closed_family(all_prefilters(a).map_err(err)?, a.names()).map_err(err)?;
        let rel = relcong_lattice(a).map_err(err)?;
        ensure(fil.find_isomorphism(&rel).is_some(), || format!("Fil ≇ RelCon on\n{}", a.to_text()))?;
        iso_with_filters(a).map_err(err)?;
        for (name, ok) in [
            ("Fil arguesian", fil.is_arguesian().map_err(err)?.is_ok()),
            ("RelCon arguesian", rel.is_arguesian().map_err(err)?.is_ok()),
            ("Fil modular", fil.is_modular().is_ok()),
            ("RelCon modular", rel.is_modular().is_ok()),
            ("Fil sublattice of Pfil", is_sublattice(&fil, &pfil).map_err(err)?),
        ] {
            ensure(ok, || format!("{name} fails on\n{}", a.to_text()))?;
        }
        // joins agree: the filter generated by a union equals the prefilter it generates
        for x in 0..fil.size() {
            for y in 0..fil.size() {
                let j = fil.elements()[fil.join(x, y)];
                let pj = pfil.index_of(fil.elements()[x]).zip(pfil.index_of(fil.elements()[y]));
                let pj = pj.map(|(p, q)| pfil.elements()[pfil.join(p, q)]);
                ensure(pj == Some(j), || format!("joins differ on\n{}", a.to_text()))?;
            }
        }
        if check_pseudo_bck(a).passed {
            bck += 1;
            ensure(fil.is_distributive().is_ok() && pfil.is_distributive().is_ok(), || {
                format!("non-distributive on\n{}", a.to_text())
            })?;
        }
    }
    Ok(format!("{} algebras, {bck} pseudo-BCK", SMALL.len()))
}

fn group_correspondence() -> Outcome {
    let g = Group::dihedral(4);
    let a = group_to_algebra(&g);
    let mut subgroups = naive_subgroups(&g);
    let mut normal = naive_normal_subgroups(&g);
    sort_family(&mut subgroups);
    sort_family(&mut normal);
    let pre = all_prefilters(&a).map_err(err)?;
    ensure(pre.len() == 10 && pre == subgroups, || format!("{} prefilters", pre.len()))?;
    let pl = FiniteLattice::from_closed_family(pre, a.names()).map_err(err)?;
    ensure(pl.is_modular().is_err(), || "prefilter lattice modular".into())?;
    let n5 = pl.n5_witness().ok_or("no pentagon")?;
    ensure(pl.is_pentagon(n5), || "pentagon witness invalid".into())?;
    let fil = all_filters(&a).map_err(err)?;
    ensure(fil.len() == 6 && fil == normal, || format!("{} filters", fil.len()))?;
    let fl = FiniteLattice::from_closed_family(fil, a.names()).map_err(err)?;
    ensure(fl.is_modular().is_ok(), || "filter lattice not modular".into())?;
    ensure(fl.is_arguesian().map_err(err)?.is_ok(), || "filter lattice not arguesian".into())?;
    let labels: Vec<&str> = n5.iter().map(|&i| pl.label(i)).collect();
    Ok(format!("10 prefilters, 6 filters, pentagon {}", labels.join(" ")))
}

fn embedding_theorem() -> Outcome {
    let mut excluded = Vec::new();
    let models = small_with_ex6();
    let mut largest = (0, 0);
    for a in &models {
        let j = build_j(a).map_err(err)?;
        let f = match build_f(&j) {
            Ok(f) => f,
            Err(Error::SizeCap { .. }) => {
                excluded.push(a.to_text());
                continue;
            }
            Err(e) => return Err(err(e)),
        };
        let check = check_residuated_pomonoid(&f.structure);
        ensure(check.passed() && check.routes_agree(), || format!("F fails on\n{}", a.to_text()))?;
        ensure(check.semi_integral, || "F not semi-integral".into())?;
        ensure(check.integral == check_pseudo_bck(a).passed, || {
            format!("integrality mismatch on\n{}", a.to_text())
        })?;
        let e = embed(a).map_err(err)?;
        largest = largest.max((e.j_size(), e.f_size()));
    }
    let ex6 = builtin_example().to_text();
    ensure(!excluded.contains(&ex6), || "EX6 excluded by the caps".into())?;
    Ok(format!(
        "{} algebras, {} excluded by caps, largest |J|={} |F|={}",
        models.len() - excluded.len(),
        excluded.len(),
        largest.0,
        largest.1
    ))
}

fn decomposition_triad() -> Outcome {
    let mut touched = small_with_ex6();
    touched.extend(constructions());
    let mut decomposable = 0;
    for a in &touched {
        let r = decompose(a).map_err(err)?;
        ensure(r.triad_agrees, || format!("triad disagrees on\n{}", a.to_text()))?;
        if r.decomposable() {
            decomposable += 1;
            ensure(r.eta_verified == Some(true), || format!("η not verified on\n{}", a.to_text()))?;
        }
    }
    Ok(format!("{} algebras, {decomposable} decomposable", touched.len()))
}

fn closure_oracles() -> Outcome {
    let mut checked = 0;
    for a in small_with_ex6() {
        let filters = all_filters(&a).map_err(err)?;
        for s in subsets(a.size()) {
            if s.is_empty() {
                ensure(matches!(prefilter_generated(&a, s), Err(Error::EmptySubset)), || {
                    "empty subset accepted".into()
                })?;
                continue;
            }
            let p = prefilter_generated(&a, s).map_err(err)?;
            ensure(p == naive_prefilter_closure(&a, s), || format!("Pg mismatch on\n{}", a.to_text()))?;
            let f = filter_generated(&a, s).map_err(err)?;
            ensure(f == intersection_above(&filters, s, a.full_set()), || {
                format!("Fg mismatch on\n{}", a.to_text())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} nonempty subsets"))
}

fn join_characterization_all() -> Outcome {
    let mut pairs = 0;
    for a in small_with_ex6() {
        let rel = relative_congruences(&a).map_err(err)?;
        for phi in &rel {
            for psi in &rel {
                let v = join_characterization(&a, phi, psi).map_err(err)?;
                ensure(v.is_ok(), || format!("fails on\n{}", a.to_text()))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn enumeration_validation() -> Outcome {
    let mut counts = Vec::new();
    for n in 1..=3 {
        let naive: Vec<Algebra> = naive_models(n);
        let emitted = enumerate(&SearchSpec::new(n, Class::Pbci)).map_err(err)?;
        ensure(naive.len() == emitted.len(), || format!("n={n}: {} vs {}", naive.len(), emitted.len()))?;
        for a in &naive {
            ensure(emitted.iter().any(|b| naive_isomorphic(a, b)), || format!("n={n}: missing\n{}", a.to_text()))?;
        }
        counts.push(emitted.len().to_string());
    }
    Ok(format!("counts {}", counts.join(", ")))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("EX6 reproduction", ex6_reproduction, Duration::from_secs(1)),
        ("axiom and lemma suite", axiom_and_lemma_suite, Duration::from_secs(60)),
        ("lattice identities", lattice_identities, Duration::from_secs(300)),
        ("group correspondence", group_correspondence, Duration::from_secs(10)),
        ("embedding theorem", embedding_theorem, Duration::from_secs(300)),
        ("decomposition triad", decomposition_triad, Duration::from_secs(300)),
        ("closure-operator oracles", closure_oracles, Duration::from_secs(300)),
        ("join characterization", join_characterization_all, Duration::from_secs(300)),
        ("enumeration validation", enumeration_validation, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > limit => Err(format!("{d}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(d) => println!("PASS {}. {name} ({took:.2?}): {d}", k + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {}. {name} ({took:.2?}): {d}", k + 1);
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance run: one PASS/FAIL line per criterion, each with its time
//! limit. Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use jumploci::artin::{
    artin_malcev_verdict, odd_contraction, raag_kahler_verdict, raag_presentation, raag_resonance_components,
    raag_serre_verdict, raag_suite, Graph, LabeledGraph,
};
use jumploci::fpgroup::{corpus, corpus_presentation, cup_structure, direct_product, free_product, CorpusItem};
use jumploci::jumploci::{charvar_ideal, charvar_point_test, resonance_ideal, tangent_cone_at_identity};
use jumploci::obstruct::{filtration_check, formality_test, position_check, Component, Isotropy, Verdict};
use jumploci::polyalg::{
    parse_polynomial, rat, union_of_subspaces, var_names, Budget, Ideal, LinearSubspace, Polynomial, Rat,
};
use rand::Rng;

mod support;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);
type SeededCheck = (&'static str, fn(usize, u64) -> support::Check);

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn e(err: jumploci::Error) -> String {
    err.to_string()
}

fn ideal(vars: &[String], gens: &[&str]) -> Ideal {
    Ideal::new(vars.len(), gens.iter().map(|g| parse_polynomial(g, vars).unwrap()).collect())
}

fn ziegler() -> Outcome {
    let b = Budget::default();
    let p = corpus_presentation("ziegler-2134").map_err(e)?;
    let c = cup_structure(&p).map_err(e)?;
    let z = var_names("z", 4);

    let r1 = resonance_ideal(&c, 1);
    let two_planes = ideal(&z, &["z4*(2*z3 + z4)"]);
    ensure(r1.variety_ideal().variety_equal(&two_planes, b).map_err(e)?, "R_1 is not the two hyperplanes")?;

    let x4 = LinearSubspace::from_equations(4, &[vec![rat(0), rat(0), rat(0), rat(1)]]).map_err(e)?;
    let x4_2x3 = LinearSubspace::from_equations(4, &[vec![rat(0), rat(0), rat(2), rat(1)]]).map_err(e)?;
    let comps = [Component::classify(x4.clone(), &c).map_err(e)?, Component::classify(x4_2x3.clone(), &c).map_err(e)?];
    ensure(comps.iter().all(|c| c.p == Isotropy::Neither), "a component is isotropic")?;

    let pos = position_check(&comps).map_err(e)?;
    ensure(pos.genericity == Verdict::Fail, "genericity passed")?;
    let meet = x4.intersect(&x4_2x3).map_err(e)?;
    let expected = LinearSubspace::coordinate(4, &[0, 1]);
    ensure(meet == expected, "intersection is not {x3 = x4 = 0}")?;

    let r2 = resonance_ideal(&c, 2);
    let lines = ideal(&z, &["z1", "z3", "z4"]).intersect(&ideal(&z, &["z2", "z3", "z4"]), b).map_err(e)?;
    ensure(r2.variety_ideal().variety_equal(&lines, b).map_err(e)?, "R_2 is not the two coordinate lines")?;

    let (f, _) = filtration_check(&comps, &c, 2, b).map_err(e)?;
    ensure(f == Verdict::Fail, "filtration check passed")?;
    Ok(format!("both components neither-isotropic, intersection dim {}", meet.dim()))
}

fn heisenberg() -> Outcome {
    let b = Budget::default();
    let p = corpus_presentation("heisenberg").map_err(e)?;
    let c = cup_structure(&p).map_err(e)?;
    let r1 = resonance_ideal(&c, 1);
    ensure(r1.ideal.is_zero(), "R_1 is not the whole plane")?;
    let r2 = resonance_ideal(&c, 2);
    ensure(r2.variety_ideal().variety_equal(&Ideal::origin(2), b).map_err(e)?, "R_2 is not the origin")?;

    let v1 = charvar_ideal(&p, 1).map_err(e)?;
    let t = var_names("t", 2);
    let identity = ideal(&t, &["t1 - 1", "t2 - 1"]);
    ensure(v1.variety_ideal().variety_equal(&identity, b).map_err(e)?, "V_1 is not {1}")?;

    let tc = tangent_cone_at_identity(&v1, b).map_err(e)?;
    ensure(tc.variety_ideal().variety_equal(&Ideal::origin(2), b).map_err(e)?, "TC_1(V_1) is not {0}")?;
    ensure(!tc.same_set(&r1, b).map_err(e)?, "TC_1(V_1) equals R_1")?;
    let f = formality_test(&p, &c, 1, b).map_err(e)?;
    ensure(f.verdict == Verdict::Fail, "formality test did not fail")?;
    Ok("TC_1(V_1) = {0} ⊊ R_1 = C^2: not 1-formal".into())
}

fn trefoil() -> Outcome {
    let b = Budget::default();
    let p = corpus_presentation("trefoil").map_err(e)?;
    let v1 = charvar_ideal(&p, 1).map_err(e)?;
    let t = var_names("t", 1);
    ensure(v1.ideal.same_ideal(&ideal(&t, &["t1^2 - t1 + 1"]), b).map_err(e)?, "Alexander ideal differs")?;
    let CorpusItem::Cup(c) = corpus("trefoil-cup").map_err(e)? else {
        return Err("trefoil-cup is not a cup structure".into());
    };
    let tc = tangent_cone_at_identity(&v1, b).map_err(e)?;
    let r1 = resonance_ideal(&c, 1);
    ensure(tc.variety_ideal().variety_equal(&Ideal::origin(1), b).map_err(e)?, "TC_1(V_1) is not {0}")?;
    ensure(tc.same_set(&r1, b).map_err(e)?, "TC_1(V_1) differs from R_1")?;
    let f = formality_test(&p, &c, 1, b).map_err(e)?;
    ensure(f.verdict == Verdict::Pass, "formality test failed")?;
    Ok("Alexander ideal (t^2 - t + 1), TC_1 = R_1 = {0}".into())
}

fn raag_coherence() -> Outcome {
    let b = Budget::default();
    let suite = raag_suite();
    let mut agree = 0;
    for g in &suite {
        let comps = raag_resonance_components(g).map_err(e)?;
        let spaces: Vec<LinearSubspace> = comps.iter().map(|c| c.subspace.clone()).collect();
        let union = union_of_subspaces(g.num_vertices(), &spaces, true, b).map_err(e)?;
        let r1 = resonance_ideal(&cup_structure(&raag_presentation(g)).map_err(e)?, 1);
        if r1.variety_ideal().variety_equal(&union, b).map_err(e)? {
            agree += 1;
        } else {
            return Err(format!("{} disagrees", g.name));
        }
    }
    ensure(suite.len() == 12, "suite does not have 12 graphs")?;
    Ok(format!("{agree}/{} graphs", suite.len()))
}

fn serre() -> Outcome {
    ensure(raag_serre_verdict(&Graph::path(3)).map_err(e)?.quasi_kahler, "P3 not quasi-Kähler")?;
    for g in [Graph::path(4), Graph::cycle(5)] {
        let v = raag_serre_verdict(&g).map_err(e)?;
        ensure(!v.quasi_kahler, format!("{} quasi-Kähler", g.name))?;
        ensure(v.violating_subset.is_some(), format!("{} has no witness", g.name))?;
        // the obstruction battery sees it too
        let pos = position_check(&raag_resonance_components(&g).map_err(e)?).map_err(e)?;
        ensure(!pos.isotropicity_passes() || pos.genericity.failed(), format!("{} passes the battery", g.name))?;
    }
    for n in 1..=6 {
        let k = raag_kahler_verdict(&Graph::complete(n));
        ensure(k.kahler == (n % 2 == 0), format!("K{n} Kähler verdict"))?;
    }
    for g in [Graph::path(4), Graph::cycle(4), Graph::complete_bipartite(3, 3), Graph::discrete(2)] {
        ensure(!raag_kahler_verdict(&g).kahler, format!("{} Kähler", g.name))?;
    }
    let braid = LabeledGraph::braid(4);
    let (h, _) = odd_contraction(&braid);
    ensure(h.num_vertices() == 1, "braid contraction is not a single vertex")?;
    ensure(artin_malcev_verdict(&braid).pass, "braid Malcev verdict failed")?;
    let again = raag_serre_verdict(&Graph::path(3)).map_err(e)?;
    ensure(again == raag_serre_verdict(&Graph::path(3)).map_err(e)?, "nondeterministic verdict")?;
    Ok(format!("P3 yes ({}), P4/C5 no, K_2m Kähler, braid contracts to one vertex", again.product.unwrap()))
}

/// `R₁(U) × {0} ∪ {0} × R₁(V)` inside `C^{m+n}`.
fn embedded_union(u: &Ideal, v: &Ideal, b: Budget) -> jumploci::Result<Ideal> {
    let (m, n) = (u.nvars(), v.nvars());
    let total = m + n;
    let mut left: Vec<Polynomial> = u.gens().iter().map(|g| g.insert_vars(m, n)).collect();
    left.extend((m..total).map(|j| Polynomial::var(total, j)));
    let mut right: Vec<Polynomial> = v.gens().iter().map(|g| g.insert_vars(0, m)).collect();
    right.extend((0..m).map(|j| Polynomial::var(total, j)));
    Ideal::new(total, left).intersect(&Ideal::new(total, right), b)
}

fn products() -> Outcome {
    let b = Budget::default();
    let pairs = [
        ("z2", "free-2"),
        ("heisenberg", "z2"),
        ("p3-raag", "free-2"),
        ("surface-2", "free-2"),
        ("z3", "heisenberg"),
    ];
    let mut passed = 0;
    for (a, bname) in pairs {
        let u = corpus_presentation(a).map_err(e)?;
        let v = corpus_presentation(bname).map_err(e)?;
        let fp = free_product(&u, &v);
        ensure(charvar_ideal(&fp, 1).map_err(e)?.ideal.is_zero(), format!("V_1({a} * {bname}) is not the torus"))?;
        passed += 1;

        let dp = direct_product(&u, &v);
        let r1 = resonance_ideal(&cup_structure(&dp).map_err(e)?, 1);
        let ru = resonance_ideal(&cup_structure(&u).map_err(e)?, 1).variety_ideal();
        let rv = resonance_ideal(&cup_structure(&v).map_err(e)?, 1).variety_ideal();
        let expected = embedded_union(&ru, &rv, b).map_err(e)?;
        ensure(
            r1.variety_ideal().variety_equal(&expected, b).map_err(e)?,
            format!("R_1({a} x {bname}) is not the embedded union"),
        )?;
        passed += 1;
    }
    Ok(format!("{passed}/10"))
}

fn substrate() -> Outcome {
    const N: usize = 200;
    let checks: [SeededCheck; 6] = [
        ("fox", support::fox_rules),
        ("s-poly", support::s_polynomials),
        ("fitting chain", support::fitting_chain),
        ("tangent cone", support::tangent_cones),
        ("delta", support::delta_squared),
        ("nabla lemma", support::nabla_lemma),
    ];
    let mut parts = Vec::new();
    for (i, (name, f)) in checks.iter().enumerate() {
        let n = f(N, 1000 + i as u64).map_err(|m| format!("{name}: {m}"))?;
        ensure(n >= N, format!("{name}: only {n} cases"))?;
        parts.push(format!("{name} {n}"));
    }
    Ok(parts.join(", "))
}

/// Random characters away from 1, half of them pushed onto coordinate
/// subtori (and, for the Ziegler group, onto `t₃² t₄ = 1`).
fn point_agreement() -> Outcome {
    let mut r = support::rng(2024);
    let mut total = 0;
    for name in jumploci::fpgroup::corpus::presentation_names() {
        let p = corpus_presentation(name).map_err(e)?;
        let Ok(v1) = charvar_ideal(&p, 1) else { continue };
        let b1 = v1.ideal.nvars();
        let loci: Vec<_> = (1..=p.num_generators())
            .map(|k| charvar_ideal(&p, k))
            .collect::<jumploci::Result<_>>()
            .map_err(e)?;
        let mut done = 0;
        while done < 20 {
            let mut rho: Vec<Rat> = (0..b1)
                .map(|_| {
                    let num = r.gen_range(1..=7) * if r.gen_bool(0.5) { 1 } else { -1 };
                    Rat::new(num.into(), r.gen_range(1..=4).into())
                })
                .collect();
            if done % 2 == 1 {
                for x in rho.iter_mut() {
                    if r.gen_bool(0.5) {
                        *x = rat(1);
                    }
                }
                if name == "ziegler-2134" && r.gen_bool(0.5) {
                    rho[3] = Rat::from_integer(1.into()) / (&rho[2] * &rho[2]);
                }
            }
            if rho.iter().all(|x| *x == rat(1)) {
                continue;
            }
            let dim = charvar_point_test(&p, &rho).map_err(e)?;
            for l in &loci {
                if l.ideal.vanishes_at(&rho) != (dim >= l.k) {
                    return Err(format!("{name}: k = {}, dim = {dim} at {rho:?}", l.k));
                }
            }
            done += 1;
            total += 1;
        }
    }
    Ok(format!("{total} points"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Ziegler A(2134)", ziegler, Duration::from_secs(5)),
        ("2 Heisenberg", heisenberg, Duration::from_secs(5)),
        ("3 trefoil", trefoil, Duration::from_secs(2)),
        ("4 RAAG coherence", raag_coherence, Duration::from_secs(60)),
        ("5 Serre verdicts", serre, Duration::from_secs(60)),
        ("6 product laws", products, Duration::from_secs(120)),
        ("7 substrate properties", substrate, Duration::from_secs(300)),
        ("8 point/ideal agreement", point_agreement, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        match outcome {
            Ok(detail) if took <= limit => println!("PASS {name} ({took:.2?}, limit {limit:?}): {detail}"),
            Ok(detail) => {
                failed += 1;
                println!("FAIL {name} ({took:.2?} over limit {limit:?}): {detail}");
            }
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({took:.2?}): {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Command plumbing shared by the `jumploci` binary and the examples:
//! input loading, report assembly and the exit-code contract
//! (0 consistent, 1 input error, 2 obstruction found, 3 budget or
//! inconclusive).

use std::path::PathBuf;

use serde::Serialize;
use serde_json::{json, Value};

use crate::artin::{
    artin_malcev_verdict, graph_names, maximal_disconnected_subsets, named_graph, odd_contraction,
    parse_graph_file, raag_charvar_components, raag_kahler_verdict, raag_presentation, raag_resonance_components,
    raag_serre_verdict, LabeledGraph,
};
use crate::fpgroup::magnus::parse_rat;
use crate::fpgroup::{
    abelianize_presentation, corpus, corpus_names, cup_structure, parse_cup_file, parse_presentation, CorpusItem,
    CupStructure, GroupPresentation,
};
use crate::jumploci::{
    charvar_ideal, charvar_point_test, resonance_ideal, tangent_cone_at_identity, JumpingLocus,
};
use crate::obstruct::{
    component_cover_verify, formality_test, parse_component_file, position_check, run_battery, Battery,
    ComponentJson, ComponentSpec, Verdict,
};
use crate::polyalg::{union_of_subspaces, Budget, Ideal, LinearSubspace, MonomialOrder, Rat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Resonance,
    Charvar,
    TangentCone,
    Formality,
    Qkahler,
    Raag,
    Artin,
    Corpus,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Resonance => "resonance",
            Command::Charvar => "charvar",
            Command::TangentCone => "tangent-cone",
            Command::Formality => "formality",
            Command::Qkahler => "qkahler",
            Command::Raag => "raag",
            Command::Artin => "artin",
            Command::Corpus => "corpus",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub corpus: Option<String>,
    pub presentation: Option<PathBuf>,
    pub cup: Option<PathBuf>,
    /// A graph file, or the name of a bundled graph.
    pub graph: Option<String>,
    pub components: Option<PathBuf>,
    /// A character for the point test, comma separated.
    pub point: Option<String>,
    pub k: Option<usize>,
    pub order: MonomialOrder,
    pub budget: Budget,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            corpus: None,
            presentation: None,
            cup: None,
            graph: None,
            components: None,
            point: None,
            k: None,
            order: MonomialOrder::GrevLex,
            budget: Budget::default(),
        }
    }

    pub fn corpus(mut self, name: &str) -> Self {
        self.corpus = Some(name.into());
        self
    }

    pub fn graph(mut self, g: &str) -> Self {
        self.graph = Some(g.into());
        self
    }
}

/// A finished run: the JSON report, a short plain-text rendering, and the
/// process exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub summary: Vec<String>,
    pub exit_code: i32,
}

impl Outcome {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.report).expect("plain data");
            s.push('\n');
            return s;
        }
        let mut s = String::new();
        for line in &self.summary {
            s.push_str(line);
            s.push('\n');
        }
        if let Some(notes) = self.report.get("notes").and_then(Value::as_array) {
            for n in notes {
                s.push_str("note: ");
                s.push_str(n.as_str().unwrap_or_default());
                s.push('\n');
            }
        }
        s
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => 3,
        _ => 1,
    }
}

/// Run one command; errors become reports too.
pub fn run(cfg: &RunConfig) -> Outcome {
    let result = match cfg.command {
        Command::Resonance => cmd_resonance(cfg),
        Command::Charvar => cmd_charvar(cfg),
        Command::TangentCone => cmd_tangent_cone(cfg),
        Command::Formality => cmd_formality(cfg),
        Command::Qkahler => cmd_qkahler(cfg),
        Command::Raag => cmd_raag(cfg),
        Command::Artin => cmd_artin(cfg),
        Command::Corpus => cmd_corpus(cfg),
    };
    result.unwrap_or_else(|e| {
        let code = exit_code_for(&e);
        Outcome {
            report: json!({
                "command": cfg.command.name(),
                "error": e.to_string(),
                "exit_code": code,
                "notes": [],
            }),
            summary: vec![format!("error: {e}")],
            exit_code: code,
        }
    })
}

struct Report {
    command: Command,
    fields: serde_json::Map<String, Value>,
    notes: Vec<String>,
    summary: Vec<String>,
}

impl Report {
    fn new(command: Command) -> Self {
        Report {
            command,
            fields: serde_json::Map::new(),
            notes: Vec::new(),
            summary: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, v: impl Serialize) {
        self.fields.insert(key.into(), serde_json::to_value(v).expect("plain data"));
    }

    fn finish(mut self, exit_code: i32) -> Outcome {
        self.fields.insert("command".into(), json!(self.command.name()));
        self.fields.insert("notes".into(), json!(self.notes));
        self.fields.insert("exit_code".into(), json!(exit_code));
        Outcome {
            report: Value::Object(self.fields),
            summary: self.summary,
            exit_code,
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_presentation(cfg: &RunConfig) -> Result<Option<GroupPresentation>> {
    if let Some(path) = &cfg.presentation {
        return parse_presentation(&read(path)?).map(Some);
    }
    if let Some(name) = &cfg.corpus {
        if let CorpusItem::Presentation(p) = corpus(name)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn require_presentation(cfg: &RunConfig) -> Result<GroupPresentation> {
    load_presentation(cfg)?
        .ok_or_else(|| Error::Invalid("this command needs a presentation (--presentation or a presentation --corpus entry)".into()))
}

/// An explicit cup file wins; otherwise a cup fixture; otherwise the cup
/// structure computed from the presentation.
fn load_cup(cfg: &RunConfig, p: Option<&GroupPresentation>) -> Result<Option<CupStructure>> {
    if let Some(path) = &cfg.cup {
        return parse_cup_file(&read(path)?).map(Some);
    }
    if let Some(name) = &cfg.corpus {
        if let CorpusItem::Cup(c) = corpus(name)? {
            return Ok(Some(c));
        }
    }
    match p {
        Some(p) => cup_structure(p).map(Some),
        None => Ok(None),
    }
}

fn load_components(cfg: &RunConfig, n: usize) -> Result<Option<Vec<ComponentSpec>>> {
    let Some(path) = &cfg.components else {
        return Ok(None);
    };
    let (ambient, comps) = parse_component_file(&read(path)?)?;
    if ambient != n {
        return Err(Error::AmbientMismatch {
            expected: n,
            found: ambient,
        });
    }
    Ok(Some(comps))
}

fn load_graph(cfg: &RunConfig) -> Result<LabeledGraph> {
    let g = cfg
        .graph
        .as_ref()
        .ok_or_else(|| Error::Invalid("this command needs --graph".into()))?;
    let path = PathBuf::from(g);
    if path.is_file() {
        return parse_graph_file(&read(&path)?);
    }
    named_graph(g).ok_or_else(|| Error::Invalid(format!("`{g}` is neither a graph file nor a bundled graph")))
}

/// The `k` values to compute: the requested one clamped to `[0, b₁]`, or
/// all of `1..=b₁`.
fn k_values(cfg: &RunConfig, b1: usize, notes: &mut Vec<String>) -> Vec<usize> {
    match cfg.k {
        Some(k) if k > b1 => {
            notes.push(format!("k = {k} exceeds b1 = {b1}; clamped to {b1}"));
            vec![b1]
        }
        Some(k) => vec![k],
        None => (1..=b1).collect(),
    }
}

fn k_max(cfg: &RunConfig, b1: usize, notes: &mut Vec<String>) -> usize {
    k_values(cfg, b1, notes).into_iter().max().unwrap_or(0)
}

fn locus_value(l: &JumpingLocus, cfg: &RunConfig) -> Result<Value> {
    let mut v = serde_json::to_value(l.to_json()).expect("plain data");
    let gb = l.ideal.groebner_basis(cfg.order, cfg.budget)?;
    let gb_ideal = Ideal::new(l.ideal.nvars(), gb.clone());
    v["groebner_basis"] = json!(gb.iter().map(|g| g.to_string_with(&l.vars)).collect::<Vec<_>>());
    v["only_extra_point"] = json!(gb_ideal_trivial(l, &gb_ideal, cfg.budget)?);
    Ok(v)
}

fn gb_ideal_trivial(l: &JumpingLocus, gb: &Ideal, budget: Budget) -> Result<bool> {
    let mut copy = l.clone();
    copy.ideal = gb.clone();
    copy.is_trivial(budget)
}

fn cup_value(c: &CupStructure) -> Value {
    json!({ "h1": c.n, "classes": c.num_classes(), "text": c.to_text() })
}

pub fn cmd_resonance(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Resonance);
    let p = load_presentation(cfg)?;
    let c = load_cup(cfg, p.as_ref())?
        .ok_or_else(|| Error::Invalid("resonance needs --cup, --presentation or --corpus".into()))?;
    r.set("cup", cup_value(&c));
    let mut loci = Vec::new();
    for k in k_values(cfg, c.n, &mut r.notes) {
        let l = resonance_ideal(&c, k);
        r.summary.push(format!("R_{k}: {}", describe(&l, cfg.budget)?));
        loci.push(locus_value(&l, cfg)?);
    }
    r.set("loci", loci);
    Ok(r.finish(0))
}

fn describe(l: &JumpingLocus, budget: Budget) -> Result<String> {
    let point = match l.kind {
        crate::jumploci::LocusKind::Characteristic => "{1}",
        _ => "{0}",
    };
    if l.ideal.is_zero() {
        return Ok("everything".into());
    }
    if l.is_trivial(budget)? {
        return Ok(if l.extra_point { point.into() } else { "empty".into() });
    }
    let gens = l.ideal.gen_strings(&l.vars).join(", ");
    Ok(format!("Z({gens}){}", if l.extra_point { format!(" ∪ {point}") } else { String::new() }))
}

fn parse_point(s: &str) -> Result<Vec<Rat>> {
    s.split(',')
        .map(|x| parse_rat(x.trim()).ok_or_else(|| Error::Invalid(format!("bad coordinate `{x}`"))))
        .collect()
}

pub fn cmd_charvar(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Charvar);
    let p = require_presentation(cfg)?;
    let ab = abelianize_presentation(&p);
    r.set("group", &p.name);
    r.set("b1", ab.rank_b1);
    r.set("torsion", &ab.torsion_orders);
    if !ab.torsion_orders.is_empty() {
        r.notes.push("torsion in H_1: only the identity component of the character group is described".into());
    }
    let mut loci = Vec::new();
    for k in k_values(cfg, ab.rank_b1, &mut r.notes) {
        let l = charvar_ideal(&p, k)?;
        r.summary.push(format!("V_{k}: {}", describe(&l, cfg.budget)?));
        loci.push(locus_value(&l, cfg)?);
    }
    r.set("loci", loci);
    if let Some(s) = &cfg.point {
        let rho = parse_point(s)?;
        let dim = charvar_point_test(&p, &rho)?;
        r.summary.push(format!("dim H^1 at the given character: {dim}"));
        r.set("point", json!({ "character": rho.iter().map(Rat::to_string).collect::<Vec<_>>(), "dim_h1": dim }));
    }
    Ok(r.finish(0))
}

pub fn cmd_tangent_cone(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::TangentCone);
    let p = require_presentation(cfg)?;
    let ab = abelianize_presentation(&p);
    r.set("group", &p.name);
    let mut cones = Vec::new();
    for k in k_values(cfg, ab.rank_b1, &mut r.notes) {
        let v = charvar_ideal(&p, k)?;
        let tc = tangent_cone_at_identity(&v, cfg.budget)?;
        r.summary.push(format!("TC_1(V_{k}): {}", describe(&tc, cfg.budget)?));
        cones.push(locus_value(&tc, cfg)?);
    }
    r.set("tangent_cones", cones);
    Ok(r.finish(0))
}

pub fn cmd_formality(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Formality);
    let p = require_presentation(cfg)?;
    let c = load_cup(cfg, Some(&p))?.expect("computed from the presentation");
    let b1 = abelianize_presentation(&p).rank_b1;
    if b1 == 0 {
        return Err(Error::TrivialTorus);
    }
    let k_max = k_max(cfg, b1, &mut r.notes);
    let f = formality_test(&p, &c, k_max, cfg.budget)?;
    r.set("group", &p.name);
    r.set("b1", b1);
    r.set("steps", &f.steps);
    let (verdict, code) = match f.verdict {
        Verdict::Fail => ("not 1-formal", 2),
        _ => ("consistent with 1-formality", 0),
    };
    if code == 0 {
        r.notes.push("the tangent cone formula is necessary, not sufficient, for 1-formality".into());
    }
    if let Some(h) = crate::obstruct::free_group_hint(&p)? {
        r.notes.push(h);
    }
    for s in &f.steps {
        r.summary.push(format!("k = {}: TC_1(V_k) {} R_k", s.k, if s.holds { "=" } else { "≠" }));
    }
    r.summary.push(verdict.into());
    r.set("verdict", verdict);
    Ok(r.finish(code))
}

pub fn cmd_qkahler(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Qkahler);
    if let Some(name) = &cfg.corpus {
        if let CorpusItem::Ideal { vars, ideal } = corpus(name)? {
            return qkahler_for_ideal(r, cfg, &vars, &ideal);
        }
    }
    let p = load_presentation(cfg)?;
    let c = load_cup(cfg, p.as_ref())?
        .ok_or_else(|| Error::Invalid("qkahler needs --cup, --presentation or --corpus".into()))?;
    let comps = load_components(cfg, c.n)?;
    let k_max = k_max(cfg, c.n, &mut r.notes);
    let report = run_battery(&Battery {
        cup: &c,
        presentation: p.as_ref(),
        components: comps.as_deref(),
        k_max,
        budget: cfg.budget,
    })?;
    let v = report.verdicts;
    for (name, verdict) in [
        ("linearity-coverage", v.linearity_coverage),
        ("isotropicity", v.isotropicity),
        ("dimension bound", v.dimension_bound),
        ("genericity", v.genericity),
        ("filtration by dimension", v.filtration),
        ("tangent cone formula", v.tangent_cone),
    ] {
        r.summary.push(format!("{name}: {}", verdict_word(verdict)));
    }
    let overall = serde_json::to_value(report.overall).expect("plain data");
    r.summary.push(format!("overall: {}", overall.as_str().unwrap_or_default()));
    let code = report.exit_code;
    r.notes.extend(report.notes.iter().cloned());
    let mut body = serde_json::to_value(&report).expect("plain data");
    if let Value::Object(m) = &mut body {
        m.remove("notes");
        m.remove("exit_code");
        for (k, v) in std::mem::take(m) {
            r.fields.insert(k, v);
        }
    }
    Ok(r.finish(code))
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::NotApplicable => "n/a",
    }
}

/// A bare ideal has no cup product; only the coverage test applies.
fn qkahler_for_ideal(mut r: Report, cfg: &RunConfig, vars: &[String], ideal: &Ideal) -> Result<Outcome> {
    r.set("ideal", ideal.to_json(vars));
    let Some(comps) = load_components(cfg, ideal.nvars())? else {
        r.notes.push("no components supplied; nothing to test".into());
        r.summary.push("no components supplied".into());
        return Ok(r.finish(3));
    };
    let subspaces: Vec<LinearSubspace> = comps.into_iter().map(|c| c.subspace).collect();
    let cover = component_cover_verify(&subspaces, ideal, true, cfg.budget)?;
    r.summary.push(format!("linearity-coverage: {}", verdict_word(cover.verdict)));
    let code = if cover.verdict == Verdict::Pass {
        0
    } else {
        r.notes.push("the supplied subspaces do not make up the variety; no conclusion is drawn".into());
        3
    };
    r.set("cover", cover);
    Ok(r.finish(code))
}

pub fn cmd_raag(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Raag);
    let lg = load_graph(cfg)?;
    if !lg.is_right_angled() {
        return Err(Error::Invalid("graph has labels other than 2; use `artin`".into()));
    }
    let g = &lg.graph;
    r.set("graph", &g.name);
    r.set("vertices", &g.vertex_names);
    let subsets = maximal_disconnected_subsets(g)?;
    r.set(
        "maximal_disconnected_subsets",
        subsets
            .iter()
            .map(|w| w.iter().map(|&v| g.vertex_names[v].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    let comps = raag_resonance_components(g)?;
    r.set("resonance_components", comps.iter().map(ComponentJson::new).collect::<Vec<_>>());
    let tori = raag_charvar_components(g)?;
    r.set(
        "charvar_subtori",
        tori.iter()
            .map(|t| t.free.iter().map(|&v| g.vertex_names[v].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );

    // the combinatorial answer against the algebraic one
    let c = cup_structure(&raag_presentation(g))?;
    let r1 = resonance_ideal(&c, 1);
    let subspaces: Vec<LinearSubspace> = comps.iter().map(|c| c.subspace.clone()).collect();
    let union = union_of_subspaces(g.num_vertices(), &subspaces, true, cfg.budget)?;
    let coherent = r1.variety_ideal().variety_equal(&union, cfg.budget)?;
    r.set("resonance_matches_graph", coherent);
    if !coherent {
        r.notes.push("the algebraic R_1 differs from the graph prediction".into());
    }
    let pos = position_check(&comps)?;
    r.set("isotropicity", pos.isotropicity);
    r.set("genericity", pos.genericity);

    let serre = raag_serre_verdict(g)?;
    let kahler = raag_kahler_verdict(g);
    r.summary.push(match (&serre.product, &serre.violating_subset) {
        (Some(prod), _) => format!("quasi-Kähler: yes ({prod})"),
        (None, Some(w)) => format!("quasi-Kähler: no (non-isotropic component on {{{}}})", w.join(", ")),
        (None, None) => "quasi-Kähler: no".into(),
    });
    r.summary.push(format!("Kähler: {}", if kahler.kahler { "yes" } else { "no" }));
    r.notes.push("right-angled Artin groups are 1-formal, so the resonance tests are decisive here".into());
    let code = if serre.quasi_kahler { 0 } else { 2 };
    r.set("serre", serre);
    r.set("kahler", kahler);
    Ok(r.finish(code))
}

pub fn cmd_artin(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Artin);
    let lg = load_graph(cfg)?;
    let (h, classes) = odd_contraction(&lg);
    let v = artin_malcev_verdict(&lg);
    r.set("graph", &lg.graph.name);
    r.set(
        "contraction_classes",
        classes
            .iter()
            .map(|c| c.iter().map(|&i| lg.graph.vertex_names[i].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    );
    r.summary.push(format!(
        "odd contraction: {} vertices, {} edges",
        h.num_vertices(),
        h.num_edges()
    ));
    r.summary.push(match &v.product {
        Some(p) => format!("Malcev-level quasi-Kähler: yes ({p})"),
        None => "Malcev-level quasi-Kähler: no (contraction is not complete multipartite)".into(),
    });
    let code = if v.pass { 0 } else { 2 };
    r.set("malcev", v);
    Ok(r.finish(code))
}

pub fn cmd_corpus(cfg: &RunConfig) -> Result<Outcome> {
    let mut r = Report::new(Command::Corpus);
    let Some(name) = &cfg.corpus else {
        r.set("fixtures", corpus_names());
        r.set("graphs", graph_names());
        r.summary.extend(corpus_names().iter().map(|s| s.to_string()));
        r.summary.extend(graph_names().iter().map(|s| format!("graph {s}")));
        return Ok(r.finish(0));
    };
    r.set("name", name);
    match corpus(name)? {
        CorpusItem::Presentation(p) => {
            r.set("presentation", p.to_text());
            let sub = |c: Command| RunConfig { command: c, ..cfg.clone() };
            let mut code = 0;
            for c in [Command::Resonance, Command::Charvar, Command::TangentCone, Command::Formality] {
                let o = match c {
                    Command::Resonance => cmd_resonance(&sub(c)),
                    Command::Charvar => cmd_charvar(&sub(c)),
                    Command::TangentCone => cmd_tangent_cone(&sub(c)),
                    _ => cmd_formality(&sub(c)),
                };
                match o {
                    Ok(o) => {
                        code = code.max(o.exit_code);
                        r.summary.extend(o.summary.iter().cloned());
                        r.set(c.name(), o.report);
                    }
                    Err(Error::TrivialTorus) => {
                        r.notes.push(format!("{}: b1 = 0, nothing to compute", c.name()));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(r.finish(code))
        }
        CorpusItem::Cup(c) => {
            r.set("cup", cup_value(&c));
            let o = cmd_resonance(&RunConfig {
                command: Command::Resonance,
                ..cfg.clone()
            })?;
            r.summary.extend(o.summary.iter().cloned());
            r.set("resonance", o.report);
            Ok(r.finish(0))
        }
        CorpusItem::Ideal { vars, ideal } => {
            r.set("ideal", ideal.to_json(&vars));
            r.summary.push(format!("ideal in {}: {}", vars.join(", "), ideal.gen_strings(&vars).join(", ")));
            Ok(r.finish(0))
        }
    }
}

//! One function per subcommand. Each returns a [`RunReport`] holding the
//! exit code, a text rendering and a JSON value with sorted keys.

use scstar::maps::Hypothesis;
use scstar::search::{
    enumerate_topologies, sweep_claim, ClaimId, CounterexampleReport, Method, SweepConfig,
    SweepResult,
};
use scstar::separation::{
    is_almost_normal, is_almost_sc_star_normal, is_normal, separate, theorem24_conditions, PairVerdict,
    SeparationWitness,
};
use scstar::{
    closure, interior, ClassLabel, Classifier, MapChecker, NeighborhoodMode, RegularAlphaDefn,
    SandwichReading, Settings, Verdict,
};
use serde_json::{json, Value};

use crate::document::{InputError, LabeledMap, LabeledSpace};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FINDING: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Core(#[from] scstar::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub settings: Settings,
    pub max_points: Option<usize>,
    pub method: Method,
    pub cap: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            settings: Settings::default(),
            max_points: None,
            method: Method::Preorder,
            cap: scstar::search::sweep::DEFAULT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub exit: u8,
    pub text: String,
    pub json: Value,
}

impl RunReport {
    fn new(command: &str, exit: u8, text: String, mut json: Value, options: &Options) -> Self {
        json["command"] = json!(command);
        json["settings"] = settings_json(options.settings);
        RunReport { exit, text, json }
    }

    pub fn json_text(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values always serialize")
    }
}

fn settings_json(s: Settings) -> Value {
    json!({
        "regular_alpha": match s.regular_alpha {
            RegularAlphaDefn::Analogy => "analogy",
            RegularAlphaDefn::AlphaIntAlphaCl => "alpha-int-alpha-cl",
        },
        "sandwich": match s.sandwich {
            SandwichReading::ClosureOfM => "closure-of-m",
            SandwichReading::ClosureOfI => "closure-of-i",
        },
        "neighborhoods": match s.neighborhoods {
            NeighborhoodMode::All => "all",
            NeighborhoodMode::ScStarOpenOnly => "sc-star-open-only",
        },
    })
}

fn render_space(x: &LabeledSpace) -> String {
    let points: Vec<String> = (0..x.space.size()).map(|p| x.point_name(p)).collect();
    let opens: Vec<String> = x.space.opens().iter().map(|o| x.render(o)).collect();
    format!("X = {{{}}}, τ = {{{}}}", points.join(","), opens.join(", "))
}

fn space_json(x: &LabeledSpace) -> Value {
    serde_json::to_value(x.to_document()).expect("documents always serialize")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_classify(space_text: &str, subset: &str, options: &Options) -> Result<RunReport, CommandError> {
    let x = LabeledSpace::parse(space_text)?;
    let a = x.parse_subset(subset)?;
    let c = Classifier::with_settings(&x.space, options.settings);
    let report = c.classify(&a)?;
    let operators = [
        ("closure", closure(&x.space, &a)?),
        ("interior", interior(&x.space, &a)?),
        ("semi_closure", c.semi_closure(&a)?),
        ("alpha_closure", c.alpha_closure(&a)?),
        ("sc_star_closure", c.sc_star_closure(&a)?),
        ("sc_star_interior", c.sc_star_interior(&a)?),
    ];

    let mut text = format!("space: {}\nsubset: {}\n\n", render_space(&x), x.render(&a));
    for (name, value) in &operators {
        text += &format!("  {name:<18} {}\n", x.render(value));
    }
    text += "\n";
    for label in ClassLabel::ALL {
        text += &format!("  {:<22} {}\n", label.notation(), yes(report.has(label)));
    }

    let json = json!({
        "space": space_json(&x),
        "subset": x.render(&a),
        "labels": report.labels.iter().map(|l| l.name()).collect::<Vec<_>>(),
        "operators": operators
            .iter()
            .map(|(name, value)| (name.to_string(), json!(x.render(value))))
            .collect::<serde_json::Map<_, _>>(),
    });
    Ok(RunReport::new("classify", EXIT_OK, text, json, options))
}

pub fn cmd_families(space_text: &str, label: Option<&str>, options: &Options) -> Result<RunReport, CommandError> {
    let x = LabeledSpace::parse(space_text)?;
    let labels: Vec<ClassLabel> = match label {
        Some(l) => vec![l.parse().map_err(CommandError::Usage)?],
        None => ClassLabel::ALL.to_vec(),
    };
    let c = Classifier::with_settings(&x.space, options.settings);
    let mut text = format!("space: {}\n\n", render_space(&x));
    let mut families = Vec::new();
    for label in labels {
        let sets: Vec<String> = c.family_of(label).iter().map(|s| x.render(s)).collect();
        text += &format!("{} ({}): {}\n", label.notation(), sets.len(), sets.join(", "));
        families.push(json!({
            "label": label.name(),
            "notation": label.notation(),
            "count": sets.len(),
            "sets": sets,
        }));
    }
    let json = json!({ "space": space_json(&x), "families": families });
    Ok(RunReport::new("families", EXIT_OK, text, json, options))
}

fn verdict_json(x: &LabeledSpace, v: &PairVerdict) -> Value {
    json!({
        "holds": v.holds,
        "failing_pair": v.failing_pair.map(|(a, b)| vec![x.render(&a), x.render(&b)]),
    })
}

fn witness_text(x: &LabeledSpace, w: &Option<SeparationWitness>) -> String {
    match w {
        Some(w) => format!("U = {}, V = {}", x.render(&w.left), x.render(&w.right)),
        None => "none".to_string(),
    }
}

fn witness_json(x: &LabeledSpace, w: &Option<SeparationWitness>) -> Value {
    match w {
        Some(w) => json!({ "u": x.render(&w.left), "v": x.render(&w.right) }),
        None => Value::Null,
    }
}

/// A pair `(A, B)` and a candidate witness `(U, V)` to re-verify.
#[derive(Debug, Clone, Default)]
pub struct WitnessCheck {
    pub pair: Option<(String, String)>,
    pub witness: Option<(String, String)>,
    pub kind: Option<String>,
}

pub fn cmd_normality(space_text: &str, check: &WitnessCheck, options: &Options) -> Result<RunReport, CommandError> {
    let x = LabeledSpace::parse(space_text)?;
    let c = Classifier::with_settings(&x.space, options.settings);
    let verdicts = [
        ("normal", is_normal(&c)),
        ("almost_normal", is_almost_normal(&c)),
        ("almost_sc_star_normal", is_almost_sc_star_normal(&c)),
    ];
    let mut text = format!("space: {}\n\n", render_space(&x));
    let mut json = json!({ "space": space_json(&x) });
    for (name, v) in &verdicts {
        text += &format!("{name}: {}", v.holds);
        if let Some((a, b)) = v.failing_pair {
            text += &format!(" (cannot separate {} and {})", x.render(&a), x.render(&b));
        }
        text += "\n";
        json[*name] = verdict_json(&x, v);
    }

    // Witnesses for every disjoint nonempty (closed, regular closed) pair.
    let closed = c.family_of(ClassLabel::Closed);
    let regular_closed = c.family_of(ClassLabel::RegularClosed);
    let mut pairs = Vec::new();
    text += "\npairs (closed A, regular closed B):\n";
    for a in closed.iter().filter(|a| !a.is_empty()) {
        for b in regular_closed.iter().filter(|b| !b.is_empty() && a.is_disjoint(b)) {
            let open = separate(&c, ClassLabel::Open, a, b)?;
            let sc = separate(&c, ClassLabel::SCStarOpen, a, b)?;
            text += &format!(
                "  A = {}, B = {}: open {}; SC*-open {}\n",
                x.render(a),
                x.render(b),
                witness_text(&x, &open),
                witness_text(&x, &sc)
            );
            pairs.push(json!({
                "a": x.render(a),
                "b": x.render(b),
                "open_witness": witness_json(&x, &open),
                "sc_star_open_witness": witness_json(&x, &sc),
            }));
        }
    }
    json["pairs"] = json!(pairs);

    if let (Some((a, b)), Some((u, v))) = (&check.pair, &check.witness) {
        let kind: ClassLabel = match &check.kind {
            Some(k) => k.parse().map_err(CommandError::Usage)?,
            None => ClassLabel::SCStarOpen,
        };
        let (a, b) = (x.parse_subset(a)?, x.parse_subset(b)?);
        let w = SeparationWitness {
            left: x.parse_subset(u)?,
            right: x.parse_subset(v)?,
            kind,
        };
        let valid = w.verify(&c, &a, &b)?;
        text += &format!(
            "\nwitness U = {}, V = {} ({}) for A = {}, B = {}: {}\n",
            x.render(&w.left),
            x.render(&w.right),
            kind.notation(),
            x.render(&a),
            x.render(&b),
            if valid { "valid" } else { "invalid" }
        );
        json["witness_check"] = json!({
            "a": x.render(&a),
            "b": x.render(&b),
            "u": x.render(&w.left),
            "v": x.render(&w.right),
            "kind": kind.name(),
            "valid": valid,
        });
    } else if check.pair.is_some() || check.witness.is_some() {
        return Err(CommandError::Usage("--pair and --witness must be given together".into()));
    }
    Ok(RunReport::new("normality", EXIT_OK, text, json, options))
}

const CONDITIONS: [&str; 6] = [
    "almost SC*-normal",
    "disjoint gSC*-open neighborhoods",
    "disjoint rgSC*-open neighborhoods",
    "gSC*-open sandwich between closed I and regular open J",
    "rgSC*-open sandwich between closed I and regular open J",
    "disjoint SC*-open neighborhoods, either role order",
];

pub fn cmd_theorem24(space_text: &str, options: &Options) -> Result<RunReport, CommandError> {
    let x = LabeledSpace::parse(space_text)?;
    let c = Classifier::with_settings(&x.space, options.settings);
    let t = theorem24_conditions(&c);
    let mut text = format!("space: {}\n\n", render_space(&x));
    for (i, (desc, value)) in CONDITIONS.iter().zip(t.conditions).enumerate() {
        text += &format!("  ({}) {:<58} {}\n", i + 1, desc, value);
    }
    text += &format!("all agree: {}\n", t.all_agree());
    let json = json!({
        "space": space_json(&x),
        "conditions": t.conditions,
        "all_agree": t.all_agree(),
    });
    let exit = if t.all_agree() { EXIT_OK } else { EXIT_FINDING };
    Ok(RunReport::new("theorem24", exit, text, json, options))
}

fn map_verdict_json(cod: &LabeledSpace, v: &Verdict) -> Value {
    match v {
        Verdict::Holds => json!({ "verdict": v.name() }),
        Verdict::NotApplicable { failed } => json!({
            "verdict": v.name(),
            "failed": failed.iter().map(Hypothesis::to_string).collect::<Vec<_>>(),
        }),
        Verdict::Counterexample { failing_pair: (a, b) } => json!({
            "verdict": v.name(),
            "failing_pair": [cod.render(a), cod.render(b)],
        }),
    }
}

fn map_verdict_text(cod: &LabeledSpace, v: &Verdict) -> String {
    match v {
        Verdict::Holds => v.name().to_string(),
        Verdict::NotApplicable { failed } => {
            let names: Vec<String> = failed.iter().map(Hypothesis::to_string).collect();
            format!("{} (fails: {})", v.name(), names.join(", "))
        }
        Verdict::Counterexample { failing_pair: (a, b) } => {
            format!("{} (codomain cannot separate {} and {})", v.name(), cod.render(a), cod.render(b))
        }
    }
}

pub fn cmd_mapcheck(map_text: &str, options: &Options) -> Result<RunReport, CommandError> {
    let f = LabeledMap::parse(map_text)?;
    let dom = Classifier::with_settings(&f.domain.space, options.settings);
    let cod = Classifier::with_settings(&f.codomain.space, options.settings);
    let checker = MapChecker::new(&f.assignment, &dom, &cod);
    let p = checker.profile();
    let properties = [
        ("surjective", p.surjective),
        ("continuous", p.continuous),
        ("rc_continuous", p.rc_continuous),
        ("t_sc_star_open", p.t_sc_star_open),
        ("t_sc_star_closed", p.t_sc_star_closed),
        ("almost_sc_star_irresolute", p.almost_sc_star_irresolute),
        ("domain_almost_sc_star_normal", is_almost_sc_star_normal(&dom).holds),
        ("codomain_almost_sc_star_normal", is_almost_sc_star_normal(&cod).holds),
    ];
    let open_map = checker.check_theorem_3_1();
    let closed_map = checker.check_theorem_3_2();

    let assignment: Vec<String> = f.assignment.iter().map(|&q| f.codomain.point_name(q)).collect();
    let mut text = format!(
        "domain: {}\ncodomain: {}\nassignment: {}\n\n",
        render_space(&f.domain),
        render_space(&f.codomain),
        (0..f.assignment.len())
            .map(|p| format!("{}→{}", f.domain.point_name(p), assignment[p]))
            .collect::<Vec<_>>()
            .join(" ")
    );
    for (name, value) in &properties {
        text += &format!("  {name:<32} {}\n", yes(*value));
    }
    text += &format!("\nopen-map preservation: {}\n", map_verdict_text(&f.codomain, &open_map));
    text += &format!("closed-map preservation: {}\n", map_verdict_text(&f.codomain, &closed_map));

    let json = json!({
        "domain": space_json(&f.domain),
        "codomain": space_json(&f.codomain),
        "assignment": assignment,
        "properties": properties
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect::<serde_json::Map<_, _>>(),
        "theorem_3_1": map_verdict_json(&f.codomain, &open_map),
        "theorem_3_2": map_verdict_json(&f.codomain, &closed_map),
    });
    let exit = if open_map.is_counterexample() || closed_map.is_counterexample() {
        EXIT_FINDING
    } else {
        EXIT_OK
    };
    Ok(RunReport::new("mapcheck", exit, text, json, options))
}

fn report_json(r: &CounterexampleReport) -> Value {
    let x = LabeledSpace::unlabeled(r.space.clone());
    json!({
        "space": space_json(&x),
        "codomain": r.codomain.clone().map(|c| space_json(&LabeledSpace::unlabeled(c))),
        "assignment": r.assignment,
        "subsets": r.subsets.iter().map(|a| x.render(a)).collect::<Vec<_>>(),
        "failed_side": r.failed_side,
        "detail": r.detail,
    })
}

fn spaces_by_size(max_points: usize, method: Method) -> Result<Vec<usize>, CommandError> {
    (1..=max_points)
        .map(|n| Ok(enumerate_topologies(n, method)?.len()))
        .collect()
}

fn sweep_json(r: &SweepResult, by_size: &[usize]) -> Value {
    json!({
        "claim": r.claim.id.name(),
        "statement": r.claim.statement,
        "existence": r.claim.is_existence(),
        "max_points": r.config.max_points,
        "spaces_examined": r.spaces_examined,
        "spaces_by_size": by_size,
        "instances_examined": r.instances_examined,
        "total_hits": r.total_hits,
        "finding": r.is_finding(),
        "reports": r.counterexamples.iter().map(report_json).collect::<Vec<_>>(),
        "relaxed": r.relaxed.as_ref().map(|t| json!({
            "count": t.count,
            "first": t.first.as_ref().map(report_json),
        })),
    })
}

fn sweep_text(r: &SweepResult, by_size: &[usize]) -> String {
    let sizes: Vec<String> = by_size.iter().map(usize::to_string).collect();
    let noun = if r.claim.is_existence() { "witnesses" } else { "counterexamples" };
    let mut text = format!(
        "{} [{}] n ≤ {}: {} spaces ({} by size), {} instances, {} {}{}\n",
        r.claim.id,
        r.claim.statement,
        r.config.max_points,
        r.spaces_examined,
        sizes.join("+"),
        r.instances_examined,
        r.total_hits,
        noun,
        if r.is_finding() { "  FINDING" } else { "" }
    );
    for report in &r.counterexamples {
        text += &format!("  {report}\n");
    }
    if r.total_hits > r.counterexamples.len() {
        text += &format!("  ... {} more\n", r.total_hits - r.counterexamples.len());
    }
    if let Some(t) = &r.relaxed {
        text += &format!("  without continuity: {} counterexamples\n", t.count);
        if let Some(first) = &t.first {
            text += &format!("    first: {first}\n");
        }
    }
    text
}

/// Sweeps one claim, or every claim when `claim` is `all`.
pub fn cmd_sweep(claim: &str, options: &Options) -> Result<RunReport, CommandError> {
    let ids: Vec<ClaimId> = if claim.eq_ignore_ascii_case("all") {
        ClaimId::all().collect()
    } else {
        vec![claim.parse()?]
    };
    let mut config = SweepConfig::default().with_cap(options.cap).with_settings(options.settings);
    config.method = options.method;
    if let Some(n) = options.max_points {
        config.max_points = n;
    }
    let mut results = Vec::new();
    for id in ids {
        results.push(sweep_claim(id, &config)?);
    }
    let by_size = spaces_by_size(config.max_points, config.method)?;
    let text: String = results.iter().map(|r| sweep_text(r, &by_size)).collect();
    let findings = results.iter().filter(|r| r.is_finding()).count();
    let json = json!({
        "results": results.iter().map(|r| sweep_json(r, &by_size)).collect::<Vec<_>>(),
        "findings": findings,
    });
    let exit = if findings > 0 { EXIT_FINDING } else { EXIT_OK };
    Ok(RunReport::new("sweep", exit, text, json, options))
}

pub fn cmd_enumerate(
    points: usize,
    count_only: bool,
    up_to_homeomorphism: bool,
    options: &Options,
) -> Result<RunReport, CommandError> {
    let mut spaces = enumerate_topologies(points, options.method)?;
    if up_to_homeomorphism {
        spaces = scstar::search::up_to_homeomorphism(&spaces);
    }
    let labeled: Vec<LabeledSpace> = spaces.into_iter().map(LabeledSpace::unlabeled).collect();
    let mut text = format!(
        "{} {} on {points} points\n",
        labeled.len(),
        if up_to_homeomorphism { "topologies up to homeomorphism" } else { "labeled topologies" }
    );
    let mut json = json!({
        "points": points,
        "method": match options.method {
            Method::Brute => "brute",
            Method::Preorder => "preorder",
        },
        "up_to_homeomorphism": up_to_homeomorphism,
        "count": labeled.len(),
    });
    if !count_only {
        for x in &labeled {
            text += &format!("  {}\n", render_space(x));
        }
        json["spaces"] = json!(labeled.iter().map(space_json).collect::<Vec<_>>());
    }
    Ok(RunReport::new("enumerate", EXIT_OK, text, json, options))
}

//! The commands behind the `coxrank` binary.
//!
//! Each command returns a [`Report`] holding the human-readable text, a JSON
//! value for `--json`, and the exit status. Exit codes are shared by all
//! commands: `0` determinate, `1` input error, `2` budget exhausted,
//! `3` structural invariant violated.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::coxeter::{
    equal_in_group_with, find_almost_relator, is_identity_with, kappa, mod2_rank_bound, petersen_thom_bound,
    petersen_thom_sum, reduce_with, theorem_applies, theorem_threshold, CoxeterError, CoxeterMatrix, Order,
};
use crate::decomposition::io::{decomposition_to_dot, load_decomposition};
use crate::decomposition::{check_tame, complexity, inequality_chain, validate_special, DecompositionError};
use crate::family::{certify, closed_form_witnesses, search_witnesses, ExampleFamily, WitnessFile};
use crate::graph::io::{graph_from_json, graph_to_dot, graph_to_json};
use crate::graph::{fold, fold_based, BasedGraph, GraphError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Determinate,
    InputError,
    Indeterminate,
    InvariantBreach,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Determinate => 0,
            Outcome::InputError => 1,
            Outcome::Indeterminate => 2,
            Outcome::InvariantBreach => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub outcome: Outcome,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { outcome: Outcome::Determinate, text, json }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub outcome: Outcome,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { outcome: Outcome::InputError, message: message.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.message, "exit_code": self.outcome.code() })
    }
}

impl From<CoxeterError> for Failure {
    fn from(e: CoxeterError) -> Self {
        let outcome = if e.is_indeterminate() { Outcome::Indeterminate } else { Outcome::InputError };
        Failure { outcome, message: e.to_string() }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<DecompositionError> for Failure {
    fn from(e: DecompositionError) -> Self {
        use DecompositionError::*;
        match e {
            Coxeter(c) => c.into(),
            Malformed(_) | InvalidArguments(_) | Graph(_) => Failure::input(e.to_string()),
            InvalidAttachment(_) | InvalidState(_) | Precondition(_) | InvariantBreach(_) => {
                Failure { outcome: Outcome::InvariantBreach, message: e.to_string() }
            }
        }
    }
}

pub type CommandResult = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))
}

pub fn load_matrix(path: &Path) -> Result<CoxeterMatrix, Failure> {
    Ok(CoxeterMatrix::parse_any(&read(path)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordAction {
    Reduce,
    IsIdentity,
    Equal(String),
    ScanRelator,
    Kappa,
}

pub fn cmd_word(matrix_path: &Path, word: &str, action: &WordAction, budget: usize) -> CommandResult {
    let m = load_matrix(matrix_path)?;
    let w = m.parse_word(word)?;
    let budget_line = format!("budget: {budget} words, determinate");
    let (text, mut value) = match action {
        WordAction::Reduce => {
            let r = reduce_with(&w, &m, budget)?;
            let s = m.format_word(&r);
            (s.clone(), json!({ "action": "reduce", "result": s, "length": r.len() }))
        }
        WordAction::IsIdentity => {
            let r = is_identity_with(&w, &m, budget)?;
            (r.to_string(), json!({ "action": "is-identity", "result": r }))
        }
        WordAction::Equal(other) => {
            let v = m.parse_word(other)?;
            let r = equal_in_group_with(&w, &v, &m, budget)?;
            (r.to_string(), json!({ "action": "equal", "result": r }))
        }
        WordAction::ScanRelator => match find_almost_relator(&w, &m) {
            Some(a) => {
                let (s, t) = (m.name(a.pair.0), m.name(a.pair.1));
                let mst = m.entry(a.pair.0, a.pair.1).finite().unwrap_or(0);
                (
                    format!(
                        "letters [{}, {}) alternate in {{{s}, {t}}}: length {} against m = {mst}",
                        a.start,
                        a.end,
                        a.end - a.start
                    ),
                    json!({ "action": "scan-relator", "found": true, "start": a.start, "end": a.end, "pair": [s, t], "m": mst }),
                )
            }
            None => ("none".to_string(), json!({ "action": "scan-relator", "found": false })),
        },
        WordAction::Kappa => {
            let k = kappa(&w, &m)?;
            (k.to_string(), json!({ "action": "kappa", "result": k }))
        }
    };
    value["budget"] = json!(budget);
    Ok(Report::ok(format!("{text}\n{budget_line}\n"), value))
}

#[derive(Clone, Debug, Default)]
pub struct FoldOptions {
    pub out: Option<PathBuf>,
    pub emit_dot: Option<PathBuf>,
    pub trace: bool,
}

pub fn cmd_fold(graph_path: &Path, opts: &FoldOptions) -> CommandResult {
    let (g, basepoint) = graph_from_json(&read(graph_path)?)?;
    let (trace, basepoint) = match basepoint {
        Some(b) => {
            let (folded, trace) = fold_based(&BasedGraph::new(g.clone(), b)?);
            (trace, Some(folded.basepoint))
        }
        None => (fold(&g), None),
    };
    let h = &trace.result;
    let mut text = format!(
        "input: {} vertices, {} edges, b = {}\nfolded: {} vertices, {} edges, b = {}, {} folds\n",
        g.vertex_count(),
        g.geometric_edge_count(),
        g.betti(),
        h.vertex_count(),
        h.geometric_edge_count(),
        h.betti(),
        trace.steps.len()
    );
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({ "kept_edge": s.kept_edge, "dropped_edge": s.dropped_edge,
                    "kept_vertex": s.kept_vertex, "dropped_vertex": s.dropped_vertex })
        })
        .collect();
    if opts.trace {
        for (i, s) in trace.steps.iter().enumerate() {
            let merged = s.dropped_vertex.map_or(String::new(), |v| format!(", vertex {v} into {}", s.kept_vertex));
            text.push_str(&format!("step {}: edge {} into {}{merged}\n", i + 1, s.dropped_edge, s.kept_edge));
        }
    }
    let graph_json = graph_to_json(h, basepoint);
    if let Some(out) = &opts.out {
        write(out, &graph_json)?;
        text.push_str(&format!("wrote {}\n", out.display()));
    }
    if let Some(dot) = &opts.emit_dot {
        write(dot, &graph_to_dot(h, basepoint))?;
        text.push_str(&format!("wrote {}\n", dot.display()));
    }
    let mut value = json!({
        "input": { "vertices": g.vertex_count(), "edges": g.geometric_edge_count(), "betti": g.betti() },
        "folded": serde_json::from_str::<Value>(&graph_json).expect("graph json"),
        "betti": h.betti(),
        "folds": trace.steps.len(),
    });
    if opts.trace {
        value["trace"] = Value::Array(steps);
    }
    Ok(Report::ok(text, value))
}

pub fn cmd_bounds(matrix_path: &Path) -> CommandResult {
    let m = load_matrix(matrix_path)?;
    let n = m.rank();
    let mod2 = mod2_rank_bound(&m);
    let pt = petersen_thom_bound(&m);
    let sum = petersen_thom_sum(&m);
    let threshold = theorem_threshold(n);
    let applies = theorem_applies(&m);
    let mut text = format!("n = {n}\nmod-2 rank bound: {mod2}\n");
    match pt {
        Some(b) => text.push_str(&format!("Σ 1/m_st = {sum} < 1, rank bound: {b}\n")),
        None => text.push_str(&format!("Σ 1/m_st = {sum}, rank bound: n/a\n")),
    }
    text.push_str(&format!("threshold 6·2^n = {threshold}\n"));
    if applies {
        text.push_str(&format!("theorem applies: yes; rank = {n}\n"));
    } else {
        text.push_str("theorem applies: no\n");
    }
    let value = json!({
        "n": n,
        "mod2_rank_bound": mod2,
        "petersen_thom_sum": sum.to_string(),
        "petersen_thom_bound": pt,
        "threshold": threshold.to_string(),
        "theorem_applies": applies,
        "rank": applies.then_some(n),
    });
    Ok(Report::ok(text, value))
}

pub fn cmd_check_decomposition(path: &Path, emit_dot: Option<&Path>) -> CommandResult {
    let loaded = load_decomposition(path)?;
    let d = &loaded.decomposition;
    let special = validate_special(&d.delta, &d.matrix);
    let tame = check_tame(d, &loaded.marking, loaded.witnesses.as_ref())?;
    let mut text = String::new();
    for c in special.checks.iter().chain(&tame.checks) {
        text.push_str(&format!("{:<4} {}\n", c.name, c.status));
        for detail in &c.details {
            text.push_str(&format!("     {detail}\n"));
        }
    }
    for f in &special.flags {
        text.push_str(&format!("note: {f}\n"));
    }
    let chain = inequality_chain(d, &loaded.marking);
    if tame.no_failures() {
        for s in &chain {
            let mark = if s.holds { "ok" } else { "FAIL" };
            text.push_str(&format!("  {}: {} {} {} {mark}\n", s.statement, s.lhs, s.relation, s.rhs));
        }
    }
    let mut value = json!({
        "special": special,
        "tame": tame.is_tame(),
        "conditions": tame.checks,
        "chain": chain,
    });
    // Complexity needs Ω inside the image of Δ∖E, which the checks above
    // already confirmed or reported.
    match complexity(d, &loaded.marking) {
        Ok(c) => {
            text.push_str(&format!("complexity {}\nc* = {}\n", c.tuple, c.c_star));
            value["complexity"] = json!(c.tuple.0);
            value["c_star"] = json!(c.c_star);
        }
        Err(e) => {
            text.push_str(&format!("complexity unavailable: {e}\n"));
            value["c_star"] = json!(tame.c_star);
        }
    }
    text.push_str(&format!("tame: {}\n", if tame.is_tame() { "yes" } else { "no" }));
    if let Some(dot) = emit_dot {
        write(dot, &decomposition_to_dot(d))?;
        text.push_str(&format!("wrote {}\n", dot.display()));
    }
    let failed = special.failed();
    if !failed.is_empty() {
        text.push_str(&format!("special graph violates {}\n", failed.join(", ")));
        value["violated"] = json!(failed);
        return Ok(Report { outcome: Outcome::InvariantBreach, text, json: value });
    }
    Ok(Report::ok(text, value))
}

/// Budget used by `non-example --large` unless one is given.
pub const LARGE_BUDGET: usize = 20_000_000;

#[derive(Clone, Debug)]
pub struct NonExampleOptions {
    pub q: u32,
    pub verify: bool,
    pub large: bool,
    pub out: Option<PathBuf>,
    pub budget: usize,
}

pub fn cmd_non_example(opts: &NonExampleOptions) -> CommandResult {
    let q = if opts.large { 101 } else { opts.q };
    let family = ExampleFamily::new(q)?;
    let m = &family.matrix;
    let n = m.rank();
    // The bounded search is quick for small q; the closed form covers
    // every q and is what --large certifies.
    let witnesses = if opts.large { closed_form_witnesses(&family) } else { search_witnesses(&family, opts.budget)? };
    let mut text = format!("q = {q}, h = {}\n", family.h());
    let x_words: Vec<String> = family.x.iter().map(|w| m.format_word(w)).collect();
    for (i, w) in x_words.iter().enumerate() {
        text.push_str(&format!("x{} = {w}  (length {})\n", i + 1, family.x[i].len()));
    }
    for w in &witnesses {
        text.push_str(&format!("{w}\n"));
    }
    let file = WitnessFile::new(q, &witnesses);
    let mut value = json!({
        "q": q,
        "matrix": serde_json::from_str::<Value>(&m.to_json()).expect("matrix json"),
        "x": x_words,
        "witnesses": serde_json::to_value(&file).expect("witness json"),
    });
    if let Some(dir) = &opts.out {
        fs::create_dir_all(dir).map_err(|e| Failure::input(format!("cannot create {}: {e}", dir.display())))?;
        write(&dir.join("matrix.txt"), &m.to_text())?;
        write(&dir.join("x.txt"), &(x_words.join("\n") + "\n"))?;
        write(&dir.join("witnesses.json"), &file.to_json())?;
        text.push_str(&format!("wrote matrix.txt, x.txt, witnesses.json to {}\n", dir.display()));
    }
    let mut outcome = Outcome::Determinate;
    if opts.verify {
        match certify(&family, &witnesses, opts.budget)? {
            Some(done) => {
                for c in &done {
                    text.push_str(&format!(
                        "verified s{}: word of length {}, {} x-letters expanded\n",
                        c.witness.target + 1,
                        c.word_length,
                        c.x_letters
                    ));
                }
                text.push_str("rank(W(M)) ≤ 4 certified\n");
                value["certified"] = json!(true);
            }
            None => {
                text.push_str("verification failed\n");
                value["certified"] = json!(false);
                outcome = Outcome::InvariantBreach;
            }
        }
    }
    let floor = 1u32 << (n - 2);
    let min = m.min_off_diagonal().and_then(Order::finite).unwrap_or(u32::MAX);
    let meets = min >= floor;
    text.push_str(&format!(
        "contrast: m_12 = 8 = 2^(n-2) and m_2j = q = {q}; every m_st ≥ 2^(n-2) = {floor}: {}; \
         rank ≤ 4 < n = {n}, while 6·2^n = {} is not met\n",
        if meets { "yes" } else { "no" },
        theorem_threshold(n)
    ));
    value["contrast"] = json!({ "floor": floor, "meets_floor": meets, "threshold": theorem_threshold(n).to_string() });
    Ok(Report { outcome, text, json: value })
}

//! Command-line front end: argument definitions, dispatch and JSON export.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxorth::decompose::SearchBound;
use maxorth::weyl::DEFAULT_STATE_BOUND;
use maxorth::{
    Decomposition, DecompositionFactor, Error, FactorKind, IndexSet, LongestKind, Root, RootSystem,
    RootSystemType, Word,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "maxorth",
    version,
    about = "Longest elements of Weyl groups and their orthogonal highest-root factorizations"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root count, length of w0 and its classification.
    Info(TypeArg),
    /// Matrix and a reduced word of the longest element.
    W0(TypeArg),
    /// Orthogonal highest-root factors of w0.
    Decompose(TypeArg),
    /// Check the factor list against every defining condition.
    Verify(TypeArg),
    /// Exhaustive search for all max-orthogonal factorizations.
    Unique(UniqueArgs),
    /// Chain of parabolic subsystems behind the factors.
    Tower(TypeArg),
    /// Check the recursion relation to the inner subsystem.
    Recursion(TypeArg),
    /// Count reduced words of w0 or of a given element.
    CountWords(CountArgs),
    /// Conjugation rules and type-specific word identities.
    CheckIdentities(TypeArg),
    /// Machine-readable dump of the system and its factorization.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Root system type, e.g. A5, E8, F4.
    #[arg(long = "type", value_name = "TYPE", value_parser = parse_type)]
    pub ty: RootSystemType,
}

#[derive(Debug, Args)]
pub struct UniqueArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Largest rank the search accepts (default 4, or at most 40 positive roots).
    #[arg(long, value_name = "N")]
    pub bound: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    /// Comma-separated letters of the element; defaults to w0.
    #[arg(long, value_name = "LETTERS", value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
    /// Maximum number of memoized elements.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_STATE_BOUND)]
    pub bound: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub ty: TypeArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_type(s: &str) -> Result<RootSystemType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of running one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_status(true, stdout)
    }

    fn with_status(ok: bool, stdout: String) -> Self {
        Self {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: Error) -> Self {
        Self {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKindDoc {
    Simple,
    Highest,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub coeffs: Vec<i64>,
    pub kind: FactorKindDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassificationDoc {
    MinusIdentity,
    MinusAutomorphism,
}

/// Export schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportDoc {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub positive_root_count: usize,
    pub w0_classification: ClassificationDoc,
    pub factors: Vec<FactorDoc>,
    #[serde(default)]
    pub longest_length: Option<usize>,
    #[serde(default)]
    pub automorphism: Option<Vec<usize>>,
    #[serde(default)]
    pub w0_matrix: Option<Vec<i64>>,
    #[serde(default)]
    pub tower: Option<Vec<Vec<usize>>>,
}

impl FactorDoc {
    pub fn from_factor(f: &DecompositionFactor) -> Self {
        let (kind, support) = match &f.kind {
            FactorKind::Simple => (FactorKindDoc::Simple, None),
            FactorKind::HighestOf(j) => (FactorKindDoc::Highest, Some(j.indices().to_vec())),
        };
        Self {
            coeffs: f.root.coeffs().to_vec(),
            kind,
            support,
        }
    }

    pub fn to_factor(&self) -> DecompositionFactor {
        let kind = match self.kind {
            FactorKindDoc::Simple => FactorKind::Simple,
            FactorKindDoc::Highest => {
                FactorKind::HighestOf(IndexSet::new(self.support.clone().unwrap_or_default()))
            }
        };
        DecompositionFactor {
            root: Root::new(self.coeffs.clone()),
            kind,
        }
    }
}

impl ExportDoc {
    pub fn build(rs: &RootSystem) -> Self {
        let w0 = rs.longest_element();
        let cls = rs.classify_longest();
        Self {
            type_name: rs.root_type().to_string(),
            rank: rs.rank(),
            positive_root_count: rs.positive_roots().len(),
            w0_classification: match cls.kind {
                LongestKind::MinusIdentity => ClassificationDoc::MinusIdentity,
                LongestKind::MinusAutomorphism => ClassificationDoc::MinusAutomorphism,
            },
            factors: rs
                .paper_decomposition()
                .factors
                .iter()
                .map(FactorDoc::from_factor)
                .collect(),
            longest_length: Some(rs.length_of(&w0)),
            automorphism: Some(cls.automorphism),
            w0_matrix: Some(w0.matrix().as_slice().to_vec()),
            tower: Some(
                rs.parabolic_tower()
                    .chain
                    .iter()
                    .map(|j| j.indices().to_vec())
                    .collect(),
            ),
        }
    }

    pub fn root_system_type(&self) -> maxorth::Result<RootSystemType> {
        self.type_name.parse()
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition {
            factors: self.factors.iter().map(FactorDoc::to_factor).collect(),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn describe_kind(f: &DecompositionFactor) -> String {
    match &f.kind {
        FactorKind::Simple => "simple".to_string(),
        FactorKind::HighestOf(j) => format!("highest root of {j}"),
    }
}

fn automorphism_text(eps: &[usize]) -> String {
    let cycles: Vec<String> = eps
        .iter()
        .enumerate()
        .filter(|&(i, &e)| i + 1 < e)
        .map(|(i, e)| format!("({} {e})", i + 1))
        .collect();
    cycles.join("")
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome::error(e),
    }
}

fn dispatch(cli: &Cli) -> maxorth::Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Info(t) => Ok(Outcome::ok(info(&RootSystem::new(t.ty), json))),
        Command::W0(t) => Ok(Outcome::ok(longest(&RootSystem::new(t.ty), json))),
        Command::Decompose(t) => Ok(Outcome::ok(decompose(&RootSystem::new(t.ty), json))),
        Command::Verify(t) => verify(&RootSystem::new(t.ty), json),
        Command::Unique(a) => unique(&RootSystem::new(a.ty.ty), a.bound, json),
        Command::Tower(t) => Ok(Outcome::ok(tower(&RootSystem::new(t.ty), json))),
        Command::Recursion(t) => recursion(&RootSystem::new(t.ty), json),
        Command::CountWords(a) => count_words(&RootSystem::new(a.ty.ty), a, json),
        Command::CheckIdentities(t) => check_identities(&RootSystem::new(t.ty), json),
        Command::Export(a) => {
            let Format::Json = a.format;
            let doc = ExportDoc::build(&RootSystem::new(a.ty.ty));
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            Ok(Outcome::ok(s))
        }
    }
}

fn info(rs: &RootSystem, json: bool) -> String {
    let w0 = rs.longest_element();
    let cls = rs.classify_longest();
    let len = rs.length_of(&w0);
    let class_text = match cls.kind {
        LongestKind::MinusIdentity => "-1".to_string(),
        LongestKind::MinusAutomorphism => {
            format!("-ε, ε = {}", automorphism_text(&cls.automorphism))
        }
    };
    let text = format!(
        "type: {}\nrank: {}\npositive roots: {}\nhighest root: {}\nl(w0): {}\nw0: {}\n",
        rs.root_type(),
        rs.rank(),
        rs.positive_roots().len(),
        rs.highest_root(),
        len,
        class_text
    );
    let value = json!({
        "type": rs.root_type().to_string(),
        "rank": rs.rank(),
        "positive_root_count": rs.positive_roots().len(),
        "highest_root": rs.highest_root().coeffs(),
        "longest_length": len,
        "w0_classification": match cls.kind {
            LongestKind::MinusIdentity => "minus_identity",
            LongestKind::MinusAutomorphism => "minus_automorphism",
        },
        "automorphism": cls.automorphism,
    });
    render(json, value, text)
}

fn longest(rs: &RootSystem, json: bool) -> String {
    let w0 = rs.longest_element();
    let word = rs.reduced_word_of(&w0);
    let text = format!(
        "l(w0) = {}\nreduced word: {}\nmatrix (column i is w0(α_i)):\n{}",
        word.len(),
        word,
        w0.matrix()
    );
    let value = json!({
        "type": rs.root_type().to_string(),
        "longest_length": word.len(),
        "reduced_word": word.letters(),
        "w0_matrix": w0.matrix().as_slice(),
    });
    render(json, value, text)
}

fn decompose(rs: &RootSystem, json: bool) -> String {
    let d = rs.paper_decomposition();
    let mut text = format!("w0({}) = {}\n", rs.root_type(), d);
    for (i, f) in d.factors.iter().enumerate() {
        let _ = writeln!(text, "{:>3}. {}  [{}]", i + 1, f.root, describe_kind(f));
    }
    let factors: Vec<FactorDoc> = d.factors.iter().map(FactorDoc::from_factor).collect();
    let value = json!({
        "type": rs.root_type().to_string(),
        "factors": factors,
    });
    render(json, value, text)
}

fn verify(rs: &RootSystem, json: bool) -> maxorth::Result<Outcome> {
    let d = rs.paper_decomposition();
    let rep = rs.verify_decomposition(&d)?;
    let mut text = String::new();
    for f in &d.factors {
        let _ = writeln!(text, "factor: {}  [{}]", f.root, describe_kind(f));
    }
    let _ = write!(
        text,
        "mutually orthogonal: {}\nhighest roots: {}\ndominance chain: {}\nproduct is w0: {}\nat most rank factors: {}\n",
        yes_no(rep.orthogonal),
        yes_no(rep.highest_root_ok),
        yes_no(rep.chain_ok),
        yes_no(rep.product_is_w0),
        yes_no(rep.count_ok)
    );
    let value = json!({
        "type": rs.root_type().to_string(),
        "orthogonal": rep.orthogonal,
        "highest_root_ok": rep.highest_root_ok,
        "chain_ok": rep.chain_ok,
        "product_is_w0": rep.product_is_w0,
        "count_ok": rep.count_ok,
    });
    Ok(Outcome::with_status(
        rep.all_ok(),
        render(json, value, text),
    ))
}

fn unique(rs: &RootSystem, bound: Option<usize>, json: bool) -> maxorth::Result<Outcome> {
    let bound = bound.map(SearchBound::with_max_rank).unwrap_or_default();
    let all = rs.enumerate_max_orthogonal(bound)?;
    let expected = rs.paper_decomposition().root_set();
    let ok = all.len() == 1 && all[0].root_set() == expected;
    let mut text = format!(
        "max-orthogonal sets for {}: {}\n",
        rs.root_type(),
        all.len()
    );
    for d in &all {
        let _ = writeln!(text, "  {d}");
    }
    let _ = writeln!(text, "matches closed form: {}", yes_no(ok));
    let sets: Vec<Vec<Vec<i64>>> = all
        .iter()
        .map(|d| d.roots().iter().map(|r| r.coeffs().to_vec()).collect())
        .collect();
    let value = json!({
        "type": rs.root_type().to_string(),
        "count": all.len(),
        "sets": sets,
        "matches_closed_form": ok,
    });
    Ok(Outcome::with_status(ok, render(json, value, text)))
}

fn tower(rs: &RootSystem, json: bool) -> String {
    let t = rs.parabolic_tower();
    let chain: Vec<Vec<usize>> = t.chain.iter().map(|j| j.indices().to_vec()).collect();
    render(
        json,
        json!({ "type": rs.root_type().to_string(), "tower": chain }),
        format!("{t}\n"),
    )
}

fn recursion(rs: &RootSystem, json: bool) -> maxorth::Result<Outcome> {
    let (inner, j, with_alpha1) = rs.recursion_data()?;
    let ok = rs.recursion_relation_check()?;
    let tail = if with_alpha1 {
        "s[α_max] · s[α1]"
    } else {
        "s[α_max]"
    };
    let text = format!(
        "w0({}) = w0({} on {j}) · {tail}: {}\n",
        rs.root_type(),
        inner,
        if ok { "holds" } else { "fails" }
    );
    let value = json!({
        "type": rs.root_type().to_string(),
        "inner": inner.to_string(),
        "nodes": j.indices(),
        "includes_alpha1": with_alpha1,
        "holds": ok,
    });
    Ok(Outcome::with_status(ok, render(json, value, text)))
}

fn count_words(rs: &RootSystem, a: &CountArgs, json: bool) -> maxorth::Result<Outcome> {
    let w = match &a.word {
        Some(letters) => rs.evaluate_word(&Word::new(letters.clone()))?,
        None => rs.longest_element(),
    };
    let n = rs.count_reduced_words_bounded(&w, a.bound)?;
    let value = json!({
        "type": rs.root_type().to_string(),
        "length": rs.length_of(&w),
        "reduced_words": n.to_string(),
    });
    Ok(Outcome::ok(render(json, value, format!("{n}\n"))))
}

struct Suite {
    name: &'static str,
    checked: usize,
    failed: usize,
}

fn check_identities(rs: &RootSystem, json: bool) -> maxorth::Result<Outcome> {
    let mut suites = Vec::new();

    let mut conj = Suite {
        name: "conjugation",
        checked: 0,
        failed: 0,
    };
    let roots: Vec<Root> = rs.positive_roots().to_vec();
    for d in &roots {
        let sd = rs.reflection_of(d)?;
        for t in &roots {
            if d == t {
                continue;
            }
            conj.checked += 1;
            let c = rs.conjugated_root(d, t)?;
            let want = sd.compose(&rs.reflection_of(t)?)?.compose(&sd)?;
            let mut ok = rs.reflection_of(&c)? == want;
            if let Ok(case) = rs.classify_conjugation(d, t) {
                let form = case.closed_form(d, t);
                ok &= form.positive_representative() == c
                    && rs.norm2(&form)? == case.rule.result_norm2();
            }
            if !ok {
                conj.failed += 1;
            }
        }
    }
    suites.push(conj);

    if rs.family() == maxorth::Family::A {
        let n = rs.rank();
        let mut lv = Suite {
            name: "lambda-v",
            checked: 0,
            failed: 0,
        };
        let mut perm = Suite {
            name: "permutation-lemma",
            checked: 0,
            failed: 0,
        };
        for hi in 1..=n {
            for lo in 1..=hi {
                lv.checked += 1;
                if !rs.check_lambda_v(lo, hi)? {
                    lv.failed += 1;
                }
                if lo < hi {
                    perm.checked += 1;
                    if !rs.check_permutation_lemma(lo, hi)? {
                        perm.failed += 1;
                    }
                }
            }
        }
        suites.push(lv);
        suites.push(perm);
    }

    if rs.family() == maxorth::Family::D && rs.rank() >= 4 {
        suites.push(Suite {
            name: "d-orthogonality-pattern",
            checked: 1,
            failed: usize::from(!rs.dn_orthogonality_pattern()?),
        });
    }

    let ok = suites.iter().all(|s| s.failed == 0);
    let mut text = String::new();
    for s in &suites {
        let _ = writeln!(
            text,
            "{}: {}/{} passed",
            s.name,
            s.checked - s.failed,
            s.checked
        );
    }
    let value = json!({
        "type": rs.root_type().to_string(),
        "suites": suites.iter().map(|s| json!({
            "name": s.name,
            "checked": s.checked,
            "failed": s.failed,
        })).collect::<Vec<_>>(),
        "ok": ok,
    });
    Ok(Outcome::with_status(ok, render(json, value, text)))
}

// SPDX-License-Identifier: Apache-2.0

use std::error::Error as StdError;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use cvlc_core::chains::adjudicate_chain_with;
use cvlc_core::graph::enumerate_connected;
use cvlc_core::json::to_sorted_json;
use cvlc_core::words::{
    adjudicate_arrow_with, AdjudicateOptions, MacroContext, OrderingMode, SearchConfig, Verdict,
};
use cvlc_core::{classes_under_lc_iso, lc_orbit, search_word, Graph, VertexId};

use super::{Command, Context, Reading};

type CmdResult = Result<ExitCode, Box<dyn StdError>>;

// stdout may be a closed pipe; output is best effort and never changes the exit code
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn graph_arg(text: &str) -> Result<Graph, Box<dyn StdError>> {
    text.parse::<Graph>()
        .map_err(|e| format!("bad graph spec {text:?}: {e}").into())
}

fn write_file(path: &Path, content: &str) -> Result<(), Box<dyn StdError>> {
    fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()).into())
}

pub fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Enumerate { n, json } => enumerate(n, json.as_deref()),
        Command::Lc { graph, vertex } => lc(&graph, vertex),
        Command::Orbit { graph, dot, json } => orbit(&graph, dot.as_deref(), json.as_deref()),
        Command::Classify { max_n, json } => classify(max_n, json.as_deref()),
        Command::Verify {
            from,
            to,
            word,
            reading,
            context,
            strict,
        } => verify(&from, &to, &word, reading, context, strict),
        Command::Search {
            from,
            to,
            max_depth,
            budget,
            dict,
            json,
        } => search(
            &from,
            &to,
            max_depth,
            budget,
            dict.as_deref(),
            json.as_deref(),
        ),
        Command::AdjudicateChains {
            figure,
            json,
            no_search,
        } => chains(figure, json.as_deref(), no_search),
        Command::Export {
            graph,
            from_json,
            out,
        } => export(graph.as_deref(), from_json.as_deref(), out.as_deref()),
    }
}

fn enumerate(n: usize, json: Option<&Path>) -> CmdResult {
    let census = enumerate_connected(n)?;
    say!(
        "{} isomorphism classes, {} labeled graphs",
        census.classes.len(),
        census.labeled_total
    );
    for c in &census.classes {
        say!(
            "  {:<10} {:>6}  {}",
            c.shape,
            c.labeled_count,
            c.representative
        );
    }
    if let Some(p) = json {
        write_file(p, &to_sorted_json(&census))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn lc(graph: &str, vertex: usize) -> CmdResult {
    let g = graph_arg(graph)?;
    if !(1..=g.n()).contains(&vertex) {
        return Err(format!(
            "vertex {vertex} out of range for a graph on {} vertices",
            g.n()
        )
        .into());
    }
    let a = VertexId::new(vertex);
    say!("{}", g.local_complement(a)?);
    Ok(ExitCode::SUCCESS)
}

fn orbit(graph: &str, dot: Option<&Path>, json: Option<&Path>) -> CmdResult {
    let g = graph_arg(graph)?;
    let o = lc_orbit(&g)?;
    let noun = if o.len() == 1 { "graph" } else { "graphs" };
    say!("{} {noun}", o.len());
    for (shape, count) in o.census()? {
        say!("  {shape:<10} {count}");
    }
    if let Some(p) = dot {
        write_file(p, &o.to_dot())?;
    }
    if let Some(p) = json {
        write_file(p, &to_sorted_json(&o))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn classify(max_n: usize, json: Option<&Path>) -> CmdResult {
    let reports = classes_under_lc_iso(max_n)?;
    for r in &reports {
        let noun = if r.classes.len() == 1 {
            "class"
        } else {
            "classes"
        };
        say!("n={}: {} {noun}", r.n, r.classes.len());
        for c in &r.classes {
            let shapes: Vec<&str> = c.members.iter().map(|m| m.shape.as_str()).collect();
            let orbits = if c.labeled_orbits == 1 {
                "orbit"
            } else {
                "orbits"
            };
            say!(
                "  {{{}}}  representative {}  labeled {} in {} {orbits}",
                shapes.join(", "),
                c.representative,
                c.labeled_size,
                c.labeled_orbits
            );
        }
    }
    if let Some(r) = reports.first() {
        say!("note: {}", r.disclaimer);
    }
    if let Some(p) = json {
        write_file(p, &to_sorted_json(&reports))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(
    from: &str,
    to: &str,
    word: &str,
    reading: Reading,
    context: Context,
    strict: bool,
) -> CmdResult {
    let (source, target) = (graph_arg(from)?, graph_arg(to)?);
    let opts = AdjudicateOptions {
        ordering: match reading {
            Reading::Time => OrderingMode::Time,
            Reading::Operator => OrderingMode::Operator,
            Reading::All => OrderingMode::All,
        },
        contexts: match context {
            Context::Source => vec![MacroContext::Source],
            Context::Evolving => vec![MacroContext::Evolving],
            Context::Both => vec![MacroContext::Source, MacroContext::Evolving],
        },
        search: false,
        ..AdjudicateOptions::default()
    };
    let report = adjudicate_arrow_with(&source, word, &target, &opts)?;
    say!("{}", to_sorted_json(&report));
    if strict && !report.any_valid {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn search(
    from: &str,
    to: &str,
    max_depth: usize,
    budget: usize,
    dict: Option<&str>,
    json: Option<&Path>,
) -> CmdResult {
    let (source, target) = (graph_arg(from)?, graph_arg(to)?);
    let cfg = match dict {
        Some(d) => {
            let labels: Vec<&str> = d
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            SearchConfig::from_labels(&labels, &source, max_depth, budget)?
        }
        None => SearchConfig {
            max_depth,
            budget,
            ..SearchConfig::default_for(&source)?
        },
    };
    let out = search_word(&source, &target, &cfg)?;
    match (&out.word, out.reason) {
        (Some(w), _) if w.is_empty() => say!("(empty word)"),
        (Some(w), _) => say!("{w}"),
        (None, reason) => {
            let reason = reason.map(|r| format!("{r:?}")).unwrap_or_default();
            say!("not found ({reason}; inconclusive)");
        }
    }
    if let Some(p) = json {
        write_file(p, &to_sorted_json(&out))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn chains(figure: u8, json: Option<&Path>, no_search: bool) -> CmdResult {
    let opts = AdjudicateOptions {
        search: !no_search,
        ..AdjudicateOptions::default()
    };
    let report = adjudicate_chain_with(figure, &opts)?;
    say!(
        "figure {}: {} of {} arrows validated",
        report.figure,
        report.valid_arrows,
        report.arrows.len()
    );
    if let Some(c) = report.caveat {
        say!("caveat: {c}");
    }
    for a in &report.arrows {
        say!("{} -> {}  {}", a.from, a.to, a.label);
        for e in &a.report.orderings {
            let verdict = match e.verdict {
                Verdict::Valid => "valid",
                Verdict::Invalid => "invalid",
            };
            let kind = e.report.as_ref().map_or("error", |r| r.recovered.kind());
            let readings: Vec<String> = e.readings.iter().map(|r| format!("{r:?}")).collect();
            say!(
                "    [{:?}] {}: {verdict} ({kind}) {}",
                e.context,
                e.order.join(" "),
                readings.join(",")
            );
        }
        if let Some(s) = &a.report.search {
            match &s.word {
                Some(w) => say!("    search: {w} (depth {})", s.depth.unwrap_or(0)),
                None => say!("    search: not found ({:?}; inconclusive)", s.reason),
            }
        }
    }
    if let Some(p) = json {
        write_file(p, &to_sorted_json(&report))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn export(graph: Option<&str>, from_json: Option<&Path>, out: Option<&Path>) -> CmdResult {
    let text = match (graph, from_json) {
        (Some(spec), _) => to_sorted_json(&graph_arg(spec)?),
        (None, Some(p)) => {
            let raw =
                fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            let g: Graph =
                serde_json::from_str(&raw).map_err(|e| format!("bad graph JSON: {e}"))?;
            g.to_string()
        }
        (None, None) => return Err("one of --graph or --from-json is required".into()),
    };
    match out {
        Some(p) => write_file(p, &text)?,
        None => say!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

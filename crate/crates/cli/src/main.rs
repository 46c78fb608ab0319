use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pwords::analysis::{self, ProfileOptions};
use pwords::completion;
use pwords::family::{self, PRESETS};
use pwords::verify::{self, Predicate, Verdict, VerifyParams};
use pwords::word::DEFAULT_EXPANSION_CAP;
use pwords::{manifest, Error, FamilySpec, Result};

const DEFAULT_HORIZON: usize = 256;
const DEFAULT_N_MAX: usize = 6;

#[derive(Parser)]
#[command(name = "pwords", version, about = "Subword complexity and recurrence of infinite partial words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the preset families.
    Families {
        #[arg(long)]
        json: bool,
    },
    /// Complexity profile p, r, d and R for n = 1..=n-max.
    Profile(Common),
    /// Single-occurrence witnesses for subwords of length n.
    Recurrence {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Uniform recurrence function R(n) for n = 1..=n-max.
    Rfunction(Common),
    /// Build completions of the prefix.
    Complete {
        #[arg(long, value_enum, default_value_t = Strategy::Greedy)]
        strategy: Strategy,
        /// Largest hole count enumerated by exhaustive strategies.
        #[arg(long, default_value_t = 12)]
        hole_budget: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Most complex completion search with recurrent-subword containment.
    Dominance {
        #[arg(long, default_value_t = 12)]
        hole_budget: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run theorem predicates; `all` runs every predicate.
    Verify {
        predicate: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the indexed subword sets against the brute-force oracle.
    OracleDiff(Common),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Greedy,
    Exhaustive,
    MostComplex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Args)]
struct Common {
    /// Preset family name.
    #[arg(long, conflicts_with = "spec_file")]
    family: Option<String>,
    /// JSON family description.
    #[arg(long)]
    spec_file: Option<PathBuf>,
    #[arg(long)]
    horizon: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    allow_unstable: bool,
}

impl Common {
    fn spec(&self) -> Result<FamilySpec> {
        match (&self.family, &self.spec_file) {
            (Some(name), _) => family::preset(name),
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Argument(format!("cannot read {}: {e}", path.display())))?;
                FamilySpec::from_json(&text)
            }
            (None, None) => Err(Error::Argument("one of --family or --spec-file is required".into())),
        }
    }

    fn horizon(&self) -> usize {
        self.horizon.unwrap_or(DEFAULT_HORIZON)
    }

    /// `n-max`, checked against `L/4` unless unstable rows are allowed.
    fn n_max(&self) -> Result<usize> {
        let n = self.n_max.unwrap_or(DEFAULT_N_MAX);
        let l = self.horizon();
        if n == 0 {
            return Err(Error::Argument("--n-max must be at least 1".into()));
        }
        if n > l / 4 && !self.allow_unstable {
            return Err(Error::Argument(format!("--n-max {n} exceeds L/4 = {} (pass --allow-unstable)", l / 4)));
        }
        Ok(n)
    }

    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn emit(&self, text: &str) -> Result<()> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => {
                fs::write(path, text).map_err(|e| Error::Argument(format!("cannot write {}: {e}", path.display())))
            }
            None => {
                let _ = std::io::stdout().write_all(text.as_bytes());
                Ok(())
            }
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn render_rows(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv | Format::Json => {
            let mut out = header.join(",");
            out.push('\n');
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(header.to_vec());
            for row in rows {
                out.push_str(&line(row.iter().map(String::as_str).collect()));
            }
            out
        }
    }
}

fn families(as_json: bool) -> String {
    if as_json {
        let entries: Vec<Value> = PRESETS
            .iter()
            .map(|p| json!({"name": p.name, "description": p.description, "anchor": p.anchor}))
            .collect();
        let catalog: Vec<&str> = family::CATALOG.to_vec();
        pretty(&json!({"presets": entries, "catalog": catalog}))
    } else {
        let rows: Vec<Vec<String>> = PRESETS
            .iter()
            .map(|p| vec![p.name.to_string(), p.description.to_string(), p.anchor.to_string()])
            .collect();
        render_rows(Format::Table, &["name", "description", "anchor"], &rows)
    }
}

fn profile(c: &Common) -> Result<String> {
    let spec = c.spec()?;
    let opts = ProfileOptions { cutoff: c.cutoff, allow_unstable: c.allow_unstable };
    let n_max = c.n_max()?;
    let profile = analysis::stabilized_profile(&spec, n_max, c.horizon(), opts)?;
    let unstable: Vec<String> = profile.rows.iter().filter(|r| !r.stable).map(|r| r.n.to_string()).collect();
    if !unstable.is_empty() {
        eprintln!(
            "warning: rows n = {} are not stable between L = {} and 2L",
            unstable.join(","),
            profile.base_horizon
        );
    }
    Ok(match c.format(Format::Csv) {
        Format::Csv => profile.to_csv(),
        Format::Json => profile.to_json(),
        Format::Table => {
            let rows: Vec<Vec<String>> = profile
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.p.to_string(),
                        r.r.to_string(),
                        r.d.to_string(),
                        r.recurrence.map_or("⊥".to_string(), |m| m.to_string()),
                        r.stable.to_string(),
                    ]
                })
                .collect();
            render_rows(Format::Table, &["n", "p", "r", "d", "R", "stable"], &rows)
        }
    })
}

fn recurrence(n: usize, c: &Common) -> Result<String> {
    let spec = c.spec()?;
    if n == 0 || n > c.horizon() {
        return Err(Error::Argument(format!("--n {n} must lie in 1..={}", c.horizon())));
    }
    let verdict = analysis::recurrence_verdict(&spec, n, c.horizon())?;
    Ok(match c.format(Format::Json) {
        Format::Json => pretty(&verdict),
        f => {
            let rows: Vec<Vec<String>> =
                verdict.witnesses.iter().map(|w| vec![w.word.clone(), w.position.to_string()]).collect();
            render_rows(f, &["word", "position"], &rows)
        }
    })
}

fn rfunction(c: &Common) -> Result<String> {
    let spec = c.spec()?;
    let n_max = c.n_max()?;
    let values: Vec<(usize, Option<usize>)> = (1..=n_max)
        .map(|n| analysis::uniform_recurrence_function(&spec, n, c.horizon()).map(|m| (n, m)))
        .collect::<Result<_>>()?;
    Ok(match c.format(Format::Csv) {
        Format::Json => pretty(&json!({
            "family": spec.name(),
            "horizon": c.horizon(),
            "R": values.iter().map(|(n, m)| json!({"n": n, "R": m})).collect::<Vec<_>>(),
        })),
        f => {
            let rows: Vec<Vec<String>> = values
                .iter()
                .map(|(n, m)| vec![n.to_string(), m.map_or(String::new(), |m| m.to_string())])
                .collect();
            render_rows(f, &["n", "R"], &rows)
        }
    })
}

fn complete(strategy: Strategy, hole_budget: usize, c: &Common) -> Result<String> {
    let spec = c.spec()?;
    let n_max = c.n_max()?;
    let l = c.horizon();
    let format = c.format(Format::Json);
    match strategy {
        Strategy::Greedy => {
            let result = completion::greedy_preserving_completion(&spec, n_max, l)?;
            Ok(match format {
                Format::Json => result.to_json(),
                f => {
                    let rows: Vec<Vec<String>> = result
                        .fills
                        .iter()
                        .map(|fill| {
                            let reason = serde_json::to_value(fill.reason).expect("reason serializes");
                            vec![fill.position.to_string(), fill.letter.to_string(), reason["kind"].as_str().unwrap_or("").to_string()]
                        })
                        .collect();
                    render_rows(f, &["position", "letter", "reason"], &rows)
                }
            })
        }
        Strategy::Exhaustive => {
            let w = spec.materialize(l);
            let budget = hole_budget.min(DEFAULT_EXPANSION_CAP);
            if w.hole_count() > budget {
                return Err(Error::ExpansionCap { holes: w.hole_count(), cap: budget });
            }
            let entries: Vec<(String, Vec<usize>)> = w
                .completions(spec.alphabet(), budget)?
                .map(|u| (u.render(spec.alphabet()), completion::complexity_vector(&u, n_max)))
                .collect();
            Ok(match format {
                Format::Json => pretty(&json!({
                    "family": spec.name(),
                    "horizon": l,
                    "n_max": n_max,
                    "completions": entries.iter().map(|(u, p)| json!({"completion": u, "p": p})).collect::<Vec<_>>(),
                })),
                f => {
                    let header: Vec<String> =
                        std::iter::once("completion".to_string()).chain((1..=n_max).map(|n| format!("p{n}"))).collect();
                    let header: Vec<&str> = header.iter().map(String::as_str).collect();
                    let rows: Vec<Vec<String>> = entries
                        .iter()
                        .map(|(u, p)| std::iter::once(u.clone()).chain(p.iter().map(usize::to_string)).collect())
                        .collect();
                    render_rows(f, &header, &rows)
                }
            })
        }
        Strategy::MostComplex => dominance(hole_budget, c),
    }
}

fn dominance(hole_budget: usize, c: &Common) -> Result<String> {
    let spec = c.spec()?;
    let report = completion::most_complex_search(&spec, c.n_max()?, c.horizon(), hole_budget)?;
    Ok(match c.format(Format::Json) {
        Format::Json => report.to_json(),
        f => {
            let rows: Vec<Vec<String>> = report
                .candidates
                .iter()
                .zip(&report.containment)
                .map(|(cand, cont)| {
                    let p: Vec<String> = cand.p.iter().map(usize::to_string).collect();
                    vec![
                        cand.completion.clone(),
                        p.join(" "),
                        (report.dominant.as_ref() == Some(&cand.completion)).to_string(),
                        cont.contains_recurrent.to_string(),
                    ]
                })
                .collect();
            render_rows(f, &["completion", "p", "dominant", "contains_recurrent"], &rows)
        }
    })
}

fn verify_params(spec: &FamilySpec, c: &Common) -> Result<VerifyParams> {
    let mut params = if c.spec_file.is_none() {
        manifest::params_for(spec.name()).unwrap_or_default()
    } else {
        VerifyParams::default()
    };
    if let Some(l) = c.horizon {
        params.horizon = l;
    }
    if let Some(n) = c.n_max {
        params.n_max = n;
    }
    if c.cutoff.is_some() {
        params.cutoff = c.cutoff;
    }
    params.seed = c.seed;
    Ok(params)
}

/// Returns the report text and whether any predicate failed.
fn run_verify(predicate: &str, c: &Common) -> Result<(String, bool)> {
    let predicates: Vec<Predicate> = if predicate == "all" {
        Predicate::ALL.to_vec()
    } else {
        vec![Predicate::parse(predicate)?]
    };
    let specs: Vec<FamilySpec> = if c.family.is_none() && c.spec_file.is_none() {
        manifest::entries().iter().map(|e| family::preset(&e.family)).collect::<Result<_>>()?
    } else {
        vec![c.spec()?]
    };
    let mut reports = Vec::new();
    for spec in &specs {
        let params = verify_params(spec, c)?;
        eprintln!("verifying {} at L = {}, n-max = {}", spec.name(), params.horizon, params.n_max);
        reports.extend(verify::run(spec, &params, &predicates)?);
    }
    let failed = verify::any_fail(&reports);
    let text = match c.format(Format::Json) {
        Format::Json => pretty(&reports),
        f => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| vec![r.family.clone(), r.predicate.clone(), r.verdict.to_string()])
                .collect();
            render_rows(f, &["family", "predicate", "verdict"], &rows)
        }
    };
    for r in reports.iter().filter(|r| r.verdict == Verdict::Fail) {
        eprintln!("FAIL {} {}", r.family, r.predicate);
    }
    Ok((text, failed))
}

/// Returns the report text and whether any set differed.
fn oracle_diff(c: &Common) -> Result<(String, bool)> {
    let spec = c.spec()?;
    let n_max = c.n_max()?;
    let w = spec.materialize(c.horizon());
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut differs = false;
    for n in 1..=n_max {
        let fast = analysis::subword_set(&w, n, spec.alphabet(), DEFAULT_EXPANSION_CAP)?;
        let slow = analysis::brute_force_subword_set(&w, n, spec.alphabet(), analysis::DEFAULT_ORACLE_CAP)?;
        let missing: Vec<String> = slow.words.difference(&fast.words).map(|u| u.render(spec.alphabet())).collect();
        let extra: Vec<String> = fast.words.difference(&slow.words).map(|u| u.render(spec.alphabet())).collect();
        differs |= !missing.is_empty() || !extra.is_empty();
        rows.push(vec![n.to_string(), fast.len().to_string(), slow.len().to_string(), missing.join(" "), extra.join(" ")]);
        json_rows.push(json!({"n": n, "indexed": fast.len(), "oracle": slow.len(), "missing": missing, "extra": extra}));
    }
    let text = match c.format(Format::Table) {
        Format::Json => pretty(&json!({"family": spec.name(), "horizon": c.horizon(), "rows": json_rows, "equal": !differs})),
        f => render_rows(f, &["n", "indexed", "oracle", "missing", "extra"], &rows),
    };
    Ok((text, differs))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ok = ExitCode::SUCCESS;
    match cli.command {
        Command::Families { json } => {
            print!("{}", families(json));
            Ok(ok)
        }
        Command::Profile(c) => c.emit(&profile(&c)?).map(|_| ok),
        Command::Recurrence { n, common } => common.emit(&recurrence(n, &common)?).map(|_| ok),
        Command::Rfunction(c) => c.emit(&rfunction(&c)?).map(|_| ok),
        Command::Complete { strategy, hole_budget, common } => {
            common.emit(&complete(strategy, hole_budget, &common)?).map(|_| ok)
        }
        Command::Dominance { hole_budget, common } => common.emit(&dominance(hole_budget, &common)?).map(|_| ok),
        Command::Verify { predicate, common } => {
            let (text, failed) = run_verify(&predicate, &common)?;
            common.emit(&text)?;
            Ok(if failed { ExitCode::from(1) } else { ok })
        }
        Command::OracleDiff(c) => {
            let (text, differs) = oracle_diff(&c)?;
            c.emit(&text)?;
            Ok(if differs { ExitCode::from(1) } else { ok })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}

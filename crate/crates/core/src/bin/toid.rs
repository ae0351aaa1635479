use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use toid::enumerate::{find_members, run_sweep, Attainment, Check, SweepConfig};
use toid::families::{
    generate, random_member, recognize_arith, recognize_structural, Family, OperationScript,
};
use toid::graph::{classify, edgelist, graph6, subdivide, Tree};
use toid::solver::{bounds, gamma_tree_dp};

#[derive(Parser)]
#[command(name = "toid", version, about = "Total outer-independent domination on trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Lower,
    Upper,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Lower => Family::Lower,
            FamilyArg::Upper => Family::Upper,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Lower,
    Upper,
    Both,
    Neither,
}

#[derive(Args)]
struct Input {
    /// Input file, or an inline graph6 string with `--format graph6`. Reads
    /// stdin when omitted.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// gamma of T and S(T), bound numerators and attainment.
    Compute(Input),
    /// Leaf/support class table.
    Classify(Input),
    /// Writes S(T).
    Subdivide {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Family membership with a replayable construction script.
    Recognize {
        #[command(flatten)]
        input: Input,
        /// Both families when omitted.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Replays a script file, or grows a random member of a family.
    Generate {
        #[arg(long, value_enum, conflicts_with = "script", required_unless_present = "script")]
        family: Option<FamilyArg>,
        /// Script JSON as printed by `recognize`.
        #[arg(long)]
        script: Option<PathBuf>,
        /// Minimum order of the random member.
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive sweep over all trees up to `--max-n`.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON report path.
        #[arg(long)]
        output: Option<PathBuf>,
        /// CSV summary path.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Comma-separated subset; all checks when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<CheckArg>,
    },
    /// All n-vertex trees with a given attainment signature.
    Members {
        n: usize,
        #[arg(long, value_enum, default_value = "both")]
        which: WhichArg,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum CheckArg {
    Bounds,
    CharLower,
    CharUpper,
    Lemma1,
    Lemma2,
    Lemma3,
    OracleVsDp,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Check {
        match c {
            CheckArg::Bounds => Check::Bounds,
            CheckArg::CharLower => Check::CharLower,
            CheckArg::CharUpper => Check::CharUpper,
            CheckArg::Lemma1 => Check::Lemma1,
            CheckArg::Lemma2 => Check::Lemma2,
            CheckArg::Lemma3 => Check::Lemma3,
            CheckArg::OracleVsDp => Check::OracleVsDp,
        }
    }
}

/// Input and validation problems exit 2, check failures exit 1.
enum Failure {
    Input(String),
    Check(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn read_tree(input: &Input) -> Result<Tree, Failure> {
    let (text, origin) = match &input.input {
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            (s, "stdin".to_string())
        }
        Some(arg) if Path::new(arg).exists() => {
            (fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")))?, arg.clone())
        }
        Some(arg) if input.format == Format::Graph6 => (arg.clone(), "inline graph6".to_string()),
        Some(arg) => return Err(Failure::Input(format!("{arg}: no such file"))),
    };
    let parsed = match input.format {
        Format::Edgelist => edgelist::parse_tree(&text),
        Format::Graph6 => graph6::decode(text.trim()).and_then(|g| Ok(Tree::try_from(g)?)),
    };
    parsed.map_err(|e| Failure::Input(format!("{origin}: {e}")))
}

fn write_tree(t: &Tree, format: Format, output: Option<&Path>) -> Result<(), Failure> {
    let text = match format {
        Format::Edgelist => edgelist::write(t),
        Format::Graph6 => graph6::encode(t) + "\n",
    };
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn names(t: &Tree, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&v| t.display(v)).collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute(input) => {
            let t = read_tree(&input)?;
            let tree = gamma_tree_dp(&t)?;
            let b = bounds(&t)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "n": b.n,
                        "gamma_tree": tree.value,
                        "witness": names(&t, &tree.witness),
                        "gamma_subdivision": b.gamma,
                        "l": b.l,
                        "s": b.s,
                        "lower_num": b.lower_num,
                        "upper_num": b.upper_num,
                        "attains_lower": b.attains_lower,
                        "attains_upper": b.attains_upper,
                    })
                );
            } else {
                println!("n = {}, l = {}, s = {}", b.n, b.l, b.s);
                println!("gamma_tree = {} {{{}}}", tree.value, names(&t, &tree.witness).join(", "));
                println!("gamma_subdivision = {}", b.gamma);
                println!("lower: 3*{} vs {} ({})", b.gamma, b.lower_num, attained(b.attains_lower));
                println!("upper: 3*{} vs {} ({})", b.gamma, b.upper_num, attained(b.attains_upper));
            }
        }
        Command::Classify(input) => {
            let t = read_tree(&input)?;
            let c = classify(&t)?;
            let rows = [
                ("leaves", &c.leaves),
                ("supports", &c.supports),
                ("strong_supports", &c.strong_supports),
                ("strong_leaves", &c.strong_leaves),
                ("weak_leaves", &c.weak_leaves),
                ("semi_supports", &c.semi_supports),
                ("nss", &c.nss),
            ];
            if cli.json {
                let map: serde_json::Map<String, serde_json::Value> =
                    rows.iter().map(|(k, v)| (k.to_string(), json!(names(&t, v)))).collect();
                println!("{}", serde_json::Value::Object(map));
            } else {
                for (k, v) in rows {
                    println!("{k:>15}: {}", names(&t, v).join(" "));
                }
            }
        }
        Command::Subdivide { input, output } => {
            let t = read_tree(&input)?;
            write_tree(&subdivide(&t)?.graph, input.format, output.as_deref())?;
        }
        Command::Recognize { input, family } => {
            let t = read_tree(&input)?;
            let families = match family {
                Some(f) => vec![f.into()],
                None => vec![Family::Lower, Family::Upper],
            };
            let mut out = Vec::new();
            for f in families {
                let arith = recognize_arith(&t, f)?;
                let trace = recognize_structural(&t, f)?;
                if trace.accepted != arith {
                    return Err(Failure::Check(format!(
                        "{f:?}: reducer disagrees with the bound test (bound says {arith})"
                    )));
                }
                out.push((f, trace));
            }
            if cli.json {
                let list: Vec<_> = out
                    .iter()
                    .map(|(f, tr)| {
                        json!({
                            "family": f,
                            "member": tr.accepted,
                            "script": tr.accepted.then_some(&tr.script),
                            "relabel": tr.accepted.then(|| names(&t, &invert(&tr.relabel))),
                            "rejection": tr.rejection,
                        })
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(list));
            } else {
                for (f, tr) in out {
                    let name = format!("{f:?}").to_lowercase();
                    if tr.accepted {
                        println!("{name}: member=true");
                        println!("  script: {}", tr.script.to_json());
                        println!("  construction id -> input vertex: {}", names(&t, &invert(&tr.relabel)).join(" "));
                    } else {
                        println!("{name}: member=false ({})", tr.rejection.unwrap_or_default());
                    }
                }
            }
        }
        Command::Generate { family, script, order, seed, format, output } => {
            let (t, script) = match (script, family) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    let script = OperationScript::from_json(&text)?;
                    (generate(&script)?, script)
                }
                (None, Some(f)) => random_member(f.into(), order, seed)?,
                (None, None) => unreachable!("clap requires one of --family and --script"),
            };
            if cli.json {
                let text = match format {
                    Format::Edgelist => edgelist::write(&t),
                    Format::Graph6 => graph6::encode(&t),
                };
                println!("{}", json!({ "n": t.order(), "tree": text, "script": script }));
            } else {
                eprintln!("script: {}", script.to_json());
                write_tree(&t, format, output.as_deref())?;
            }
        }
        Command::Verify { max_n, workers, seed, output, csv, checks } => {
            let mut cfg = SweepConfig { max_n, workers, seed, report_path: output, csv_path: csv, ..SweepConfig::default() };
            if !checks.is_empty() {
                cfg.checks = checks.into_iter().map(Check::from).collect();
            }
            let report = run_sweep(&cfg)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{:>3} {:>6} {:>6} {:>6} {:>6}", "n", "trees", "lower", "upper", "both");
                for row in &report.per_n {
                    println!("{:>3} {:>6} {:>6} {:>6} {:>6}", row.n, row.count, row.lower, row.upper, row.both);
                }
                for (check, tally) in &report.tallies {
                    println!(
                        "{:<13} passed {:>5}  failed {:>3}  skipped {:>5}",
                        serde_json::to_value(check).unwrap().as_str().unwrap(),
                        tally.passed,
                        tally.failed,
                        tally.skipped
                    );
                }
                println!("counterexamples: {}", report.counterexamples.len());
            }
            if !report.is_clean() {
                let first = &report.counterexamples[0];
                return Err(Failure::Check(format!(
                    "{} counterexample(s); first: n={} {:?} {} ({})",
                    report.counterexamples.len(),
                    first.n,
                    first.check,
                    first.graph6,
                    first.detail
                )));
            }
        }
        Command::Members { n, which, format } => {
            let which = match which {
                WhichArg::Lower => Attainment::Lower,
                WhichArg::Upper => Attainment::Upper,
                WhichArg::Both => Attainment::Both,
                WhichArg::Neither => Attainment::Neither,
            };
            let trees = find_members(n, which)?;
            if cli.json {
                let list: Vec<String> = trees.iter().map(|t| graph6::encode(t)).collect();
                println!("{}", json!({ "n": n, "count": trees.len(), "graph6": list }));
            } else {
                for t in &trees {
                    match format {
                        Format::Graph6 => println!("{}", graph6::encode(t)),
                        Format::Edgelist => println!("{}", edgelist::write(t)),
                    }
                }
            }
        }
    }
    Ok(())
}

fn attained(yes: bool) -> &'static str {
    if yes {
        "attained"
    } else {
        "not attained"
    }
}

/// `relabel` maps input ids to construction ids; this is the reverse.
fn invert(relabel: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; relabel.len()];
    for (v, &c) in relabel.iter().enumerate() {
        inv[c] = v;
    }
    inv
}

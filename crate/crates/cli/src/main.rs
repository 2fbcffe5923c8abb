//! Command-line interface for matroid symbolic-power computations.
//!
//! Inputs are matroids (bases, circuits, or Steiner-system JSON) or monomial
//! ideals (exponent-vector JSON or a generator list like "af, cd, bde, bce").
//! Output is JSON by default, a human-readable table with `--table`.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid matroid, budget
//! exceeded, ...), 2 on usage errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use matroidal_core::formats::{matroid_from_json, IdealFile, MatroidFile};
use matroidal_core::invariants;
use matroidal_core::matroid_ideals::{self, detect_matroid, side_ideal};
use matroidal_core::oracle;
use matroidal_core::sympow::{self, Side, SymbolicEngine};
use matroidal_core::text;
use matroidal_core::{Matroid, MonomialIdeal, SubsetFamily};

#[derive(Parser)]
#[command(
    name = "matroidal",
    about = "Symbolic powers and invariants of Stanley-Reisner and cover ideals of matroids",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the l-th symbolic power of a matroid ideal
    Sympow(SympowArgs),
    /// Compute the squarefree part SF_l of the l-th symbolic power
    Sqfree(LevelArgs),
    /// Initial degree alpha(I^(l))
    Alpha(LevelArgs),
    /// Waldschmidt constant as an exact fraction
    Waldschmidt(PlainArgs),
    /// Symbolic defect at level l, by the direct count and by the formula
    Sdefect(LevelArgs),
    /// Symbolic Noether number
    Noether(NoetherArgs),
    /// Decide whether a squarefree ideal is C-matroidal
    Detect(PlainArgs),
    /// Batched invariant report for one side ideal
    Analyze(PlainArgs),
    /// Differential check: fast engine vs. brute-force oracle
    OracleCheck(OracleCheckArgs),
    /// Per-level wall times and generator counts for the fast engine
    Bench(BenchArgs),
    /// Build the sparse paving matroid of a Steiner system
    Steiner(SteinerArgs),
    /// Build a uniform matroid
    Uniform(UniformArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("input").required(true).args(["matroid", "circuits", "ideal", "steiner"]))]
struct InputArgs {
    /// Matroid JSON file: {"n":..,"bases":[[..],..]}, circuits or Steiner variants
    #[arg(long, value_name = "FILE")]
    matroid: Option<PathBuf>,
    /// Inline circuit family as a JSON array, e.g. '[[0,5],[2,3]]' (needs --n)
    #[arg(long, value_name = "JSON")]
    circuits: Option<String>,
    /// Ideal input: a JSON file, inline JSON, or a generator list like "af, cd, bde"
    #[arg(long, value_name = "FILE|TEXT")]
    ideal: Option<String>,
    /// Steiner system JSON file: {"n":..,"d":..,"t":..,"blocks":[[..],..]}
    #[arg(long, value_name = "FILE")]
    steiner: Option<PathBuf>,
    /// Ground-set size / variable count (required with --circuits)
    #[arg(long)]
    n: Option<usize>,
    /// Which ideal of the matroid: the cover ideal or the Stanley-Reisner ideal
    #[arg(long, default_value = "cover", value_parser = parse_side)]
    side: Side,
}

fn parse_side(s: &str) -> Result<Side, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON (the default)
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Emit a human-readable table instead of JSON
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct PlainArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct LevelArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Symbolic power level
    #[arg(long)]
    l: usize,
    /// Computation budget for the brute-force oracle (pairwise LCM operations)
    #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SympowArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Symbolic power level
    #[arg(long)]
    l: usize,
    /// fast: structure-theorem engine; bruteforce: prime-power intersections
    #[arg(long, default_value = "fast")]
    method: Method,
    /// Include the tower decomposition of every minimal generator
    #[arg(long)]
    towers: bool,
    /// Computation budget for the brute-force oracle (pairwise LCM operations)
    #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct NoetherArgs {
    #[command(flatten)]
    input: InputArgs,
    /// fast: component-rank formula; bruteforce: Rees-algebra degree search
    #[arg(long, default_value = "fast")]
    method: Method,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OracleCheckArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Symbolic power level
    #[arg(long)]
    l: usize,
    /// Computation budget for the brute-force oracle (pairwise LCM operations)
    #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Largest level to time
    #[arg(long, default_value_t = 20)]
    l_max: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SteinerArgs {
    /// Steiner system JSON file: {"n":..,"d":..,"t":..,"blocks":[[..],..]}
    #[arg(long, value_name = "FILE")]
    steiner: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct UniformArgs {
    /// Ground-set size
    #[arg(long)]
    n: usize,
    /// Rank
    #[arg(long)]
    c: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Method {
    Fast,
    Bruteforce,
}

/// A resolved input: either a matroid with a chosen side, or a raw ideal.
enum Input {
    Matroid { matroid: Matroid, side: Side },
    Ideal(MonomialIdeal),
}

impl Input {
    /// The ideal this input denotes.
    fn ideal(&self) -> MonomialIdeal {
        match self {
            Input::Matroid { matroid, side } => side_ideal(matroid, *side),
            Input::Ideal(ideal) => ideal.clone(),
        }
    }

    /// A matroid + side computing the same ideal; raw ideals go through
    /// matroid detection and fail when they are not C-matroidal.
    fn as_matroidal(&self) -> anyhow::Result<(Matroid, Side)> {
        match self {
            Input::Matroid { matroid, side } => Ok((matroid.clone(), *side)),
            Input::Ideal(ideal) => {
                let report = detect_matroid(ideal)?;
                if !report.is_matroidal {
                    bail!(
                        "the ideal is not C-matroidal (witness generator {:?}); \
                         only --method bruteforce applies",
                        report.witness
                    );
                }
                let circuits = report.circuits.expect("matroidal reports carry circuits");
                let matroid = Matroid::from_circuits(
                    ideal.n(),
                    &SubsetFamily::from_index_lists(ideal.n(), &circuits)?,
                )?;
                Ok((matroid, Side::StanleyReisner))
            }
        }
    }
}

fn read_input(args: &InputArgs) -> anyhow::Result<Input> {
    if let Some(path) = &args.matroid {
        let text = read(path)?;
        return Ok(Input::Matroid { matroid: matroid_from_json(&text)?, side: args.side });
    }
    if let Some(path) = &args.steiner {
        let text = read(path)?;
        let file: matroidal_core::formats::SteinerFile =
            serde_json::from_str(&text).context("Steiner system JSON")?;
        return Ok(Input::Matroid { matroid: file.to_matroid()?, side: args.side });
    }
    if let Some(json) = &args.circuits {
        let lists: Vec<Vec<usize>> =
            serde_json::from_str(json).context("--circuits expects a JSON array of index lists")?;
        let n = args.n.ok_or_else(|| anyhow!("--circuits requires --n"))?;
        let matroid = Matroid::from_circuits(n, &SubsetFamily::from_index_lists(n, &lists)?)?;
        return Ok(Input::Matroid { matroid, side: args.side });
    }
    let source = args.ideal.as_ref().expect("clap enforces one input source");
    let content =
        if Path::new(source).exists() { read(Path::new(source))? } else { source.clone() };
    let trimmed = content.trim();
    let ideal = if trimmed.starts_with('{') {
        matroidal_core::formats::ideal_from_json(trimmed)?
    } else {
        text::parse_ideal(trimmed, args.n)?
    };
    Ok(Input::Ideal(ideal))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit<T: Serialize>(output: &OutputArgs, value: &T, table: impl FnOnce() -> String) {
    if output.table {
        println!("{}", table());
    } else {
        println!("{}", serde_json::to_string(value).expect("serializable"));
    }
}

#[derive(Serialize)]
struct SympowReport {
    n: usize,
    l: usize,
    count: usize,
    generators: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    towers: Option<Vec<TowerReport>>,
}

#[derive(Serialize)]
struct TowerReport {
    generator: Vec<u32>,
    symbolic_type: Vec<usize>,
    layers: Vec<LayerReport>,
}

#[derive(Serialize)]
struct LayerReport {
    generator: Vec<u32>,
    level: usize,
    count: u32,
}

fn run_sympow(args: &SympowArgs) -> anyhow::Result<()> {
    let input = read_input(&args.input)?;
    let (power, matroidal) = match args.method {
        Method::Fast => {
            let (m, side) = input.as_matroidal()?;
            (SymbolicEngine::new().symbolic_power(&m, args.l, side), Some((m, side)))
        }
        Method::Bruteforce => match &input {
            Input::Matroid { matroid, side } => (
                oracle::symbolic_power_bruteforce_with_budget(matroid, args.l, *side, args.budget)?,
                Some((matroid.clone(), *side)),
            ),
            Input::Ideal(ideal) => {
                (oracle::symbolic_power_raw_with_budget(ideal, args.l, args.budget)?, None)
            }
        },
    };
    let towers = if args.towers {
        let (m, side) =
            matroidal.ok_or_else(|| anyhow!("--towers needs the structure-theorem route"))?;
        Some(
            power
                .gens()
                .iter()
                .map(|g| {
                    let tower = sympow::symbolic_type_of(g, &m, args.l, side)?;
                    Ok(TowerReport {
                        generator: g.exponents().to_vec(),
                        symbolic_type: tower.symbolic_type(),
                        layers: tower
                            .layers
                            .iter()
                            .map(|layer| LayerReport {
                                generator: layer.generator.exponents().to_vec(),
                                level: layer.level,
                                count: layer.count,
                            })
                            .collect(),
                    })
                })
                .collect::<anyhow::Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let report = SympowReport {
        n: power.n(),
        l: args.l,
        count: power.mu(),
        generators: power.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        towers,
    };
    emit(&args.output, &report, || {
        let mut out = format!("I^({}) has {} minimal generators:\n", args.l, power.mu());
        out.push_str(&format!("({})", text::ideal_string(&power)));
        if let Some(towers) = &report.towers {
            for t in towers {
                let layers: Vec<String> = t
                    .layers
                    .iter()
                    .map(|l| {
                        let g = matroidal_core::Monomial::from_exponents(l.generator.clone());
                        format!("({})^{}", text::monomial_string(&g), l.count)
                    })
                    .collect();
                let g = matroidal_core::Monomial::from_exponents(t.generator.clone());
                out.push_str(&format!(
                    "\n{} = {}  type {:?}",
                    text::monomial_string(&g),
                    layers.join(""),
                    t.symbolic_type
                ));
            }
        }
        out
    });
    Ok(())
}

fn run_sqfree(args: &LevelArgs) -> anyhow::Result<()> {
    let input = read_input(&args.input)?;
    let sf = match &input {
        Input::Matroid { matroid, side } => {
            matroid_ideals::sf_symbolic_skeleton(matroid, args.l, *side)?
        }
        Input::Ideal(ideal) => {
            if detect_matroid(ideal)?.is_matroidal {
                matroid_ideals::sf_symbolic_lcm(ideal, args.l)?
            } else {
                matroid_ideals::sf_symbolic_raw(ideal, args.l)?
            }
        }
    };
    emit(&args.output, &IdealFile::from_ideal(&sf), || {
        format!("SF_{} = ({})", args.l, text::ideal_string(&sf))
    });
    Ok(())
}

fn run_alpha(args: &LevelArgs) -> anyhow::Result<()> {
    let input = read_input(&args.input)?;
    let alpha = match input.as_matroidal() {
        Ok((m, side)) => invariants::alpha_symbolic(&m, args.l, side)?,
        Err(_) => match &input {
            Input::Ideal(ideal) => {
                oracle::symbolic_power_raw_with_budget(ideal, args.l, args.budget)?.alpha()?
            }
            Input::Matroid { .. } => unreachable!("matroid inputs are always matroidal"),
        },
    };
    #[derive(Serialize)]
    struct AlphaReport {
        l: usize,
        alpha: u64,
    }
    emit(&args.output, &AlphaReport { l: args.l, alpha }, || {
        format!("alpha(I^({})) = {}", args.l, alpha)
    });
    Ok(())
}

fn run_waldschmidt(args: &PlainArgs) -> anyhow::Result<()> {
    let (m, side) = read_input(&args.input)?.as_matroidal()?;
    let constant = invariants::waldschmidt(&m, side)?;
    emit(&args.output, &constant, || format!("waldschmidt = {constant}"));
    Ok(())
}

fn run_sdefect(args: &LevelArgs) -> anyhow::Result<()> {
    let input = read_input(&args.input)?;
    let ideal = input.ideal();
    let symb = |r: usize| -> anyhow::Result<MonomialIdeal> {
        match input.as_matroidal() {
            Ok((m, side)) => Ok(SymbolicEngine::new().symbolic_power(&m, r, side)),
            Err(_) => Ok(oracle::symbolic_power_raw_with_budget(&ideal, r, args.budget)?),
        }
    };
    let symb_l = symb(args.l)?;
    let direct = oracle::sdefect_direct(&ideal, args.l, &symb_l);
    let mut table = BTreeMap::new();
    for r in 1..=invariants::mgrade(&ideal) {
        table.insert(r, invariants::a_r(&ideal, r, &symb(r)?));
    }
    let formula = invariants::sdefect_formula(args.l, &symb_l, &table);
    #[derive(Serialize)]
    struct SdefectReport {
        l: usize,
        direct: u64,
        formula: i64,
        mu_symbolic: usize,
        mgrade: usize,
        a: BTreeMap<usize, u64>,
    }
    let report = SdefectReport {
        l: args.l,
        direct,
        formula,
        mu_symbolic: symb_l.mu(),
        mgrade: table.len(),
        a: table,
    };
    emit(&args.output, &report, || {
        format!(
            "sdefect(I, {}) = {} (direct); formula gives {} with mu(I^({})) = {}",
            report.l, report.direct, report.formula, report.l, report.mu_symbolic
        )
    });
    Ok(())
}

fn run_noether(args: &NoetherArgs) -> anyhow::Result<()> {
    let (m, side) = read_input(&args.input)?.as_matroidal()?;
    let value = match args.method {
        Method::Fast => invariants::noether_number_side(&m, side),
        Method::Bruteforce => oracle::noether_number_bruteforce(&m, side),
    };
    #[derive(Serialize)]
    struct NoetherReport {
        noether_number: usize,
    }
    emit(&args.output, &NoetherReport { noether_number: value }, || {
        format!("noether number = {value}")
    });
    Ok(())
}

fn run_detect(args: &PlainArgs) -> anyhow::Result<()> {
    let ideal = read_input(&args.input)?.ideal();
    let report = detect_matroid(&ideal)?;
    emit(&args.output, &report, || {
        if report.is_matroidal {
            format!("C-matroidal with circuits {:?}", report.circuits.as_ref().unwrap())
        } else {
            "not C-matroidal".to_string()
        }
    });
    Ok(())
}

fn run_analyze(args: &PlainArgs) -> anyhow::Result<()> {
    let (m, side) = read_input(&args.input)?.as_matroidal()?;
    let report = invariants::analyze(&m, side)?;
    emit(&args.output, &report, || {
        let mut out = String::new();
        out.push_str(&format!("n = {}, side = {}\n", report.n, report.side));
        out.push_str(&format!("height = {}, rank = {}\n", report.height, report.rank));
        out.push_str(&format!(
            "girth = {}\n",
            report.girth.map_or("infinity".into(), |g: usize| g.to_string())
        ));
        out.push_str(&format!("components = {:?}\n", report.components));
        out.push_str(&format!("noether number = {}\n", report.noether_number));
        out.push_str(&format!(
            "uniformity threshold = {}\n",
            report.uniformity_threshold.map_or("infinity".into(), |u: usize| u.to_string())
        ));
        out.push_str(&format!("waldschmidt = {}\n", report.waldschmidt));
        out.push_str(&format!(
            "paving = {}, sparse paving = {}, 2-locally connected = {}\n",
            report.is_paving, report.is_sparse_paving, report.is_2_locally_connected
        ));
        out.push_str(&format!("mgrade = {}\n", report.mgrade));
        out.push_str(&format!(
            "resurgence bounds: {} <= rho <= {}\n",
            report.resurgence.lower, report.resurgence.upper
        ));
        out.push_str("alpha table:");
        for (l, a) in &report.alpha_table {
            out.push_str(&format!(" alpha({l}) = {a},"));
        }
        out.pop();
        out
    });
    Ok(())
}

fn run_oracle_check(args: &OracleCheckArgs) -> anyhow::Result<()> {
    let input = read_input(&args.input)?;
    let (fast, brute) = match &input {
        Input::Matroid { matroid, side } => (
            SymbolicEngine::new().symbolic_power(matroid, args.l, *side),
            oracle::symbolic_power_bruteforce_with_budget(matroid, args.l, *side, args.budget)?,
        ),
        Input::Ideal(ideal) => {
            let (m, side) = input.as_matroidal()?;
            (
                SymbolicEngine::new().symbolic_power(&m, args.l, side),
                oracle::symbolic_power_raw_with_budget(ideal, args.l, args.budget)?,
            )
        }
    };
    if fast == brute {
        println!("oracle-check: OK — {} generators agree at l = {}", fast.mu(), args.l);
        Ok(())
    } else {
        bail!(
            "oracle-check: MISMATCH at l = {} — fast has {} generators, oracle has {}",
            args.l,
            fast.mu(),
            brute.mu()
        );
    }
}

fn run_bench(args: &BenchArgs) -> anyhow::Result<()> {
    let (m, side) = read_input(&args.input)?.as_matroidal()?;
    let engine = SymbolicEngine::new();
    engine.squarefree_parts(&m, side); // warm the squarefree-part cache
    #[derive(Serialize)]
    struct Row {
        l: usize,
        generators: usize,
        micros: u128,
    }
    let mut rows = Vec::new();
    for l in 1..=args.l_max {
        let start = Instant::now();
        let power = engine.symbolic_power(&m, l, side);
        let elapsed = start.elapsed();
        rows.push(Row { l, generators: power.mu(), micros: elapsed.as_micros() });
    }
    emit(&args.output, &rows, || {
        let mut out = String::from("    l  generators      time\n");
        for r in &rows {
            out.push_str(&format!("{:>5}  {:>10}  {:>7}us\n", r.l, r.generators, r.micros));
        }
        out.pop();
        out
    });
    Ok(())
}

fn run_steiner(args: &SteinerArgs) -> anyhow::Result<()> {
    let text = read(&args.steiner)?;
    let file: matroidal_core::formats::SteinerFile =
        serde_json::from_str(&text).context("Steiner system JSON")?;
    let m = file.to_matroid()?;
    emit(&args.output, &MatroidFile::from_matroid(&m), || {
        format!("Steiner matroid: n = {}, rank = {}, {} bases", m.n(), m.rank(), m.num_bases())
    });
    Ok(())
}

fn run_uniform(args: &UniformArgs) -> anyhow::Result<()> {
    let m = Matroid::uniform(args.n, args.c)?;
    emit(&args.output, &MatroidFile::from_matroid(&m), || {
        format!("U({}, {}): {} bases", args.c, args.n, m.num_bases())
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sympow(args) => run_sympow(args),
        Command::Sqfree(args) => run_sqfree(args),
        Command::Alpha(args) => run_alpha(args),
        Command::Waldschmidt(args) => run_waldschmidt(args),
        Command::Sdefect(args) => run_sdefect(args),
        Command::Noether(args) => run_noether(args),
        Command::Detect(args) => run_detect(args),
        Command::Analyze(args) => run_analyze(args),
        Command::OracleCheck(args) => run_oracle_check(args),
        Command::Bench(args) => run_bench(args),
        Command::Steiner(args) => run_steiner(args),
        Command::Uniform(args) => run_uniform(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cohmackey::abelian::AdditiveInvariant;
use cohmackey::arith::prime_divisors;
use cohmackey::bley_boltje::{moebius_identity_sum, verify_bley_boltje};
use cohmackey::cochain::{cohomology_mackey_capped, DEFAULT_COCHAIN_CAP};
use cohmackey::gmodule::{fixed_point_mackey, GModule};
use cohmackey::group::{is_cyclic, DEFAULT_CLOSURE_CAP};
use cohmackey::lattice::{is_ell_hypoelementary, SubgroupLattice};
use cohmackey::mackey::{verify_cohomological_mackey, CheckStatus, CohMackeyFunctor};
use cohmackey::norm::norm_harness;

use report::{InputDigest, Report};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Lib(#[from] cohmackey::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Lib(cohmackey::Error::Contract(_)) => 3,
            CliError::Lib(_) => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "cohmackey", version, about = "Exact verifier for cohomological Mackey functors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Constructor {
    FixedPoints,
    Cohomology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InvariantChoice {
    EllRank,
    EllLength,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Subgroup census, Moebius table and hypoelementary classification
    Lattice { group: PathBuf },
    /// Build a Mackey functor and check the cohomological Mackey axioms
    MackeyVerify {
        group: PathBuf,
        module: PathBuf,
        #[arg(long, value_enum, default_value = "fixed-points")]
        constructor: Constructor,
        /// Cohomological degree, used with `--constructor cohomology`
        #[arg(long, default_value_t = 0)]
        degree: usize,
    },
    /// Odd/even chain sums and Moebius identity sums
    BleyBoltje {
        group: PathBuf,
        module: PathBuf,
        /// `whole`, `all`, a lattice index, or a JSON array of permutations
        #[arg(long, default_value = "whole")]
        subgroup: String,
        #[arg(long, conflicts_with = "integral", required_unless_present = "integral")]
        ell: Option<u64>,
        #[arg(long)]
        integral: bool,
        #[arg(long, value_enum, default_value = "all")]
        invariant: InvariantChoice,
        #[arg(long, value_enum, default_value = "fixed-points")]
        constructor: Constructor,
        #[arg(long, default_value_t = 0)]
        degree: usize,
    },
    /// Seeded checks of the norm on a split covering
    NormDemo {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        degree: usize,
        /// Comma-separated ranks, one per component (default: all 2)
        #[arg(long, value_delimiter = ',')]
        ranks: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
}

struct Caps {
    closure: usize,
    cochain: usize,
}

fn caps() -> Result<Caps, CliError> {
    match std::env::var("MACKEY_SIZE_CAP") {
        Ok(v) => {
            let cap = v
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::Input(format!("MACKEY_SIZE_CAP={v:?} is not a positive integer")))?;
            Ok(Caps { closure: cap, cochain: cap })
        }
        Err(_) => Ok(Caps { closure: DEFAULT_CLOSURE_CAP, cochain: DEFAULT_COCHAIN_CAP }),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn cmd_lattice(path: PathBuf, caps: &Caps) -> Result<(Report, String), CliError> {
    let spec = input::load_group(&path)?;
    let g = input::build_group(&spec.value, caps.closure)?;
    let lat = SubgroupLattice::new(g.clone());
    let primes = prime_divisors(g.order() as u64);
    let mut subgroups = Vec::new();
    for (i, h) in lat.subgroups().iter().enumerate() {
        let mut hypo = serde_json::Map::new();
        for &l in &primes {
            hypo.insert(l.to_string(), json!(is_ell_hypoelementary(&g, h, l)?));
        }
        let gens: Vec<Value> = g
            .greedy_generators(h.elements())
            .into_iter()
            .map(|x| json!(g.label(x).map(|p| p.images().to_vec())))
            .collect();
        subgroups.push(json!({
            "index": i,
            "order": h.order(),
            "generators": gens,
            "normal": h.is_normal_in(&g, None),
            "cyclic": is_cyclic(&g, h),
            "ell_hypoelementary": hypo,
        }));
    }
    let table = lat.moebius_table();
    let mut moebius = Vec::new();
    for h in 0..lat.len() {
        for u in lat.below(h) {
            moebius.push(json!({"u": u, "h": h, "mu": table.get(u, h)}));
        }
    }
    let mu_top = table.get(lat.trivial(), lat.whole()).unwrap_or(0);
    let whole = lat.subgroup(lat.whole());
    let flags: Vec<String> = primes
        .iter()
        .map(|&l| {
            let yes = is_ell_hypoelementary(&g, whole, l).unwrap_or(false);
            format!("{l}-hypoelementary: {}", if yes { "yes" } else { "no" })
        })
        .collect();
    let summary = format!(
        "group of order {}: {} subgroups, mu(1,G) = {mu_top}{}{}",
        g.order(),
        lat.len(),
        if flags.is_empty() { "" } else { "; " },
        flags.join(", ")
    );
    let report = Report {
        command: "lattice",
        inputs_digest: InputDigest::default().part("group", &spec.bytes).finish(),
        results: json!({
            "order": g.order(),
            "subgroup_count": lat.len(),
            "subgroups": subgroups,
            "moebius": moebius,
            "mu_trivial_whole": mu_top,
        }),
        pass: true,
        witnesses: Vec::new(),
    };
    Ok((report, summary))
}

struct Built {
    digest: InputDigest,
    functor: CohMackeyFunctor,
}

fn build_functor(
    group: &Path,
    module: &Path,
    constructor: Constructor,
    degree: usize,
    caps: &Caps,
) -> Result<Built, CliError> {
    let gspec = input::load_group(group)?;
    let mspec = input::load_module(module)?;
    let g = input::build_group(&gspec.value, caps.closure)?;
    let a: GModule = input::build_module(&g, &mspec.value)?;
    let functor = match constructor {
        Constructor::FixedPoints => fixed_point_mackey(&a)?,
        Constructor::Cohomology => cohomology_mackey_capped(&a, degree, caps.cochain)?,
    };
    let mut digest = InputDigest::default();
    let params = format!("{constructor:?}/{degree}");
    digest.part("group", &gspec.bytes).part("module", &mspec.bytes).part("constructor", params.as_bytes());
    Ok(Built { digest, functor })
}

fn cmd_mackey_verify(
    group: PathBuf,
    module: PathBuf,
    constructor: Constructor,
    degree: usize,
    caps: &Caps,
) -> Result<(Report, String), CliError> {
    let mut built = build_functor(&group, &module, constructor, degree, caps)?;
    let m = &built.functor;
    let report = verify_cohomological_mackey(m);
    let witnesses: Vec<Value> = report
        .failures()
        .map(|c| json!({"check": c.id, "description": c.description, "witness": c.witness}))
        .collect();
    let failed: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
    let whole = m.value(m.lattice().whole());
    let summary = format!(
        "{} subgroups, M(G) = {whole}; axioms {}",
        m.lattice().len(),
        if failed.is_empty() {
            "pass".to_string()
        } else {
            format!("FAIL ({})", failed.join(", "))
        }
    );
    let by_construction: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == CheckStatus::ByConstruction)
        .map(|c| c.id.as_str())
        .collect();
    let out = Report {
        command: "mackey-verify",
        inputs_digest: built.digest.finish(),
        results: json!({
            "constructor": format!("{constructor:?}"),
            "degree": degree,
            "values": to_value(&m.summary()),
            "axioms": to_value(&report),
            "by_construction": by_construction,
        }),
        pass: report.passed(),
        witnesses,
    };
    Ok((out, summary))
}

#[allow(clippy::too_many_arguments)]
fn cmd_bley_boltje(
    group: PathBuf,
    module: PathBuf,
    selector: String,
    ell: Option<u64>,
    invariant: InvariantChoice,
    constructor: Constructor,
    degree: usize,
    caps: &Caps,
) -> Result<(Report, String), CliError> {
    let mut built = build_functor(&group, &module, constructor, degree, caps)?;
    let m = &built.functor;
    let targets = input::select_subgroups(m.lattice(), &selector)?;
    let primes: Vec<u64> = match ell {
        Some(l) => vec![l],
        None => {
            let mut ps = prime_divisors(m.group().order() as u64);
            for v in m.values() {
                if let Some(e) = v.exponent() {
                    let e: u64 = (&e).try_into().map_err(|_| CliError::Input("module exponent too large".into()))?;
                    ps.extend(prime_divisors(e));
                }
            }
            ps.sort_unstable();
            ps.dedup();
            ps
        }
    };
    let mut invariants = Vec::new();
    for &l in &primes {
        if invariant != InvariantChoice::EllLength {
            invariants.push(AdditiveInvariant::new_ell_rank(l)?);
        }
        if invariant != InvariantChoice::EllRank {
            invariants.push(AdditiveInvariant::new_ell_length(l)?);
        }
    }
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    let mut lines = Vec::new();
    for &t in &targets {
        let h = m.lattice().subgroup(t).clone();
        let r = verify_bley_boltje(m, &h, ell)?;
        let mut sums = Vec::new();
        for inv in &invariants {
            sums.push((inv.name(), moebius_identity_sum(m, &h, *inv, ell)?));
        }
        let sums_zero = sums.iter().all(|(_, s)| *s == 0);
        let ok = !r.hypothesis_holds || (r.isomorphic && sums_zero && r.hall_consistent);
        if !ok {
            witnesses.push(json!({
                "subgroup": t,
                "odd_sum": r.odd_sum,
                "even_sum": r.even_sum,
                "nonzero_sums": sums.iter().filter(|(_, s)| *s != 0).map(|(n, s)| json!({"invariant": n, "sum": s})).collect::<Vec<_>>(),
            }));
        }
        lines.push(format!(
            "H = {t} (order {}): odd {}, even {}, {}; {}{}; sums {}",
            h.order(),
            r.odd_sum,
            r.even_sum,
            if r.isomorphic { "isomorphic" } else { "not isomorphic" },
            r.hypothesis,
            if r.hypothesis_holds { "" } else { " (informational)" },
            sums.iter().map(|(n, s)| format!("{n}={s}")).collect::<Vec<_>>().join(", ")
        ));
        results.push(json!({
            "chain_sums": to_value(&r),
            "moebius_sums": sums.iter().map(|(n, s)| json!({"invariant": n, "sum": s})).collect::<Vec<_>>(),
            "ok": ok,
        }));
    }
    built.digest.part("subgroup", selector.as_bytes()).part("ell", format!("{ell:?}/{invariant:?}").as_bytes());
    let report = Report {
        command: "bley-boltje",
        inputs_digest: built.digest.finish(),
        results: json!({"ell": ell, "targets": results}),
        pass: witnesses.is_empty(),
        witnesses,
    };
    Ok((report, lines.join("\n")))
}

fn cmd_norm_demo(
    modulus: u64,
    degree: usize,
    ranks: Option<Vec<usize>>,
    seed: u64,
    instances: usize,
) -> Result<(Report, String), CliError> {
    let ranks = ranks.unwrap_or_else(|| vec![2; degree]);
    if ranks.len() != degree {
        return Err(CliError::Input(format!("--ranks has {} entries, --degree is {degree}", ranks.len())));
    }
    let r = norm_harness(modulus, &ranks, seed, instances)?;
    let witnesses: Vec<Value> = r
        .checks
        .iter()
        .filter(|c| c.failures > 0)
        .map(|c| json!({"check": c.name, "failures": c.failures, "witness": c.witness}))
        .collect();
    let summary = format!(
        "norm rank {}; {}",
        r.norm_rank,
        r.checks
            .iter()
            .map(|c| format!("{} {}/{}", c.name, c.instances - c.failures, c.instances))
            .collect::<Vec<_>>()
            .join(", ")
    );
    let params = format!("{modulus}/{degree}/{ranks:?}/{seed}/{instances}");
    let report = Report {
        command: "norm-demo",
        inputs_digest: InputDigest::default().part("params", params.as_bytes()).finish(),
        results: to_value(&r),
        pass: r.passed(),
        witnesses,
    };
    Ok((report, summary))
}

fn run(cli: Cli) -> Result<(Report, String), CliError> {
    let caps = caps()?;
    match cli.command {
        Command::Lattice { group } => cmd_lattice(group, &caps),
        Command::MackeyVerify { group, module, constructor, degree } => {
            cmd_mackey_verify(group, module, constructor, degree, &caps)
        }
        Command::BleyBoltje { group, module, subgroup, ell, integral: _, invariant, constructor, degree } => {
            cmd_bley_boltje(group, module, subgroup, ell, invariant, constructor, degree, &caps)
        }
        Command::NormDemo { modulus, degree, ranks, seed, instances } => {
            cmd_norm_demo(modulus, degree, ranks, seed, instances)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, summary)) => {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            eprintln!("{summary}");
            eprintln!("{}", if report.pass { "PASS" } else { "FAIL" });
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

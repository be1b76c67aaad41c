use clap::{Parser, Subcommand, ValueEnum};
use hilbertian::error::Error;
use hilbertian::lattice::{
    bloch_ball_discretization, classify_entanglement, crosscheck_with_polytope,
    e8::e8_shell_threads, e8::SHELL_CAP, gosset_shell, physical_states,
    shell_concurrence_spectrum, EntanglementClass,
};
use hilbertian::pauli::PauliOp;
use hilbertian::pseudostab::PseudostabilizerRecord;
use hilbertian::roadmap::{build_polytope, build_roadmap, export_dot, named_gate_matrix, synthesize};
use hilbertian::rotation::{enumerate_rotations, make_rotation, Rotation};
use sha2::{Digest, Sha256};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "hilbertian", version, about = "Discrete navigation of N-qubit state space")]
struct Cli {
    /// Worker threads for shell enumeration (fallback: HILBERTIAN_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Memoize command output as content-addressed files in this directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List the maximal pseudostabilizer sets for N qubits.
    Enumerate {
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Dump the polytope state set for N qubits.
    States {
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        count_only: bool,
    },
    /// Emit the pseudostabilizer roadmap graph.
    Roadmap {
        #[arg(short)]
        n: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Synthesize a named gate from a restricted rotation set.
    Synthesize {
        /// Target gate: S, H or CNOT.
        #[arg(long)]
        gate: String,
        /// Generator rotations as j,k index pairs (default: all rotations).
        #[arg(long, num_args = 0.., value_delimiter = ' ')]
        gens: Vec<String>,
        #[arg(long, default_value_t = 16)]
        max_depth: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// E8 shell reports: full listing, concurrence spectrum, shell-1 fibers
    /// or the Bloch-ball discretization.
    Lattice {
        #[arg(long)]
        shell: u32,
        #[arg(long)]
        spectrum: bool,
        #[arg(long)]
        fibers: bool,
        #[arg(long)]
        bloch: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Match the Gosset-shell quotient against the two-qubit polytope.
    Crosscheck {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

enum CliError {
    Usage(String),
    Engine(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Engine(e)
    }
}

fn main() {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("HILBERTIAN_THREADS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1);
    match run_cached(&cli, threads) {
        Ok(out) => print!("{out}"),
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Engine(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } => 3,
                Error::SearchExhausted { .. } => 4,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run_cached(cli: &Cli, threads: usize) -> Result<String, CliError> {
    let Some(dir) = &cli.cache_dir else {
        return run(&cli.command, threads);
    };
    let key = {
        let mut hasher = Sha256::new();
        hasher.update(env!("CARGO_PKG_VERSION").as_bytes());
        hasher.update(descriptor(&cli.command).as_bytes());
        format!("{:x}", hasher.finalize())
    };
    let path = dir.join(format!("{key}.out"));
    if let Ok(cached) = std::fs::read_to_string(&path) {
        return Ok(cached);
    }
    let out = run(&cli.command, threads)?;
    std::fs::create_dir_all(dir)
        .and_then(|_| std::fs::write(&path, &out))
        .map_err(|e| CliError::Engine(Error::domain(format!("cache write failed: {e}"))))?;
    Ok(out)
}

/// Stable content key for memoization: every flag that affects output.
fn descriptor(cmd: &Command) -> String {
    let fmt = |f: &Format| match f {
        Format::Table => "table",
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Dot => "dot",
    };
    match cmd {
        Command::Enumerate { n, format } => format!("enumerate;{n};{}", fmt(format)),
        Command::States { n, format, count_only } => {
            format!("states;{n};{};{count_only}", fmt(format))
        }
        Command::Roadmap { n, format } => format!("roadmap;{n};{}", fmt(format)),
        Command::Synthesize { gate, gens, max_depth, format } => {
            format!("synthesize;{gate};{};{max_depth};{}", gens.join("|"), fmt(format))
        }
        Command::Lattice { shell, spectrum, fibers, bloch, format } => {
            format!("lattice;{shell};{spectrum};{fibers};{bloch};{}", fmt(format))
        }
        Command::Crosscheck { format } => format!("crosscheck;{}", fmt(format)),
    }
}

fn run(cmd: &Command, threads: usize) -> Result<String, CliError> {
    match cmd {
        Command::Enumerate { n, format } => cmd_enumerate(*n, *format),
        Command::States { n, format, count_only } => cmd_states(*n, *format, *count_only),
        Command::Roadmap { n, format } => cmd_roadmap(*n, *format),
        Command::Synthesize { gate, gens, max_depth, format } => {
            cmd_synthesize(gate, gens, *max_depth, *format)
        }
        Command::Lattice { shell, spectrum, fibers, bloch, format } => {
            cmd_lattice(*shell, *spectrum, *fibers, *bloch, *format, threads)
        }
        Command::Crosscheck { format } => cmd_crosscheck(*format),
    }
}

fn cmd_enumerate(n: u32, format: Format) -> Result<String, CliError> {
    let sets = hilbertian::enumerate_maximal(n)?;
    let records: Vec<PseudostabilizerRecord> =
        sets.iter().map(PseudostabilizerRecord::from).collect();
    match format {
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&records).unwrap())),
        Format::Csv => {
            let mut out = String::from("label,elements,class\n");
            for r in &records {
                out.push_str(&format!(
                    "{},{},{}\n",
                    r.label,
                    join(&r.elements, " "),
                    r.class.as_deref().unwrap_or("")
                ));
            }
            Ok(out)
        }
        Format::Table => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&format!(
                    "{:>4}  {{{}}}  {}\n",
                    r.label,
                    join(&r.elements, ", "),
                    r.class.as_deref().unwrap_or("-")
                ));
            }
            out.push_str(&format!("total: {}\n", records.len()));
            Ok(out)
        }
        Format::Dot => Err(CliError::Usage("enumerate has no dot form".into())),
    }
}

fn cmd_states(n: u32, format: Format, count_only: bool) -> Result<String, CliError> {
    let p = build_polytope(n)?;
    if count_only {
        return Ok(format!("{}\n", p.states().len()));
    }
    match format {
        Format::Json => {
            let records: Vec<_> = p
                .states()
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let (set, pattern) = p.origin(i);
                    let mut rec = v.to_record()?;
                    rec.set = Some(*set);
                    rec.pattern = Some(pattern.0.clone());
                    Ok(rec)
                })
                .collect::<Result<_, Error>>()?;
            Ok(format!("{}\n", serde_json::to_string_pretty(&records).unwrap()))
        }
        Format::Csv | Format::Table => {
            let sep = if format == Format::Csv { "," } else { "  " };
            let mut out = if format == Format::Csv {
                String::from("index,set,pattern,state\n")
            } else {
                String::new()
            };
            for (i, v) in p.states().iter().enumerate() {
                let (set, pattern) = p.origin(i);
                let pat: String =
                    pattern.0.iter().map(|&l| if l > 0 { '+' } else { '-' }).collect();
                out.push_str(&format!("{i}{sep}{set}{sep}{pat}{sep}{v}\n"));
            }
            if format == Format::Table {
                out.push_str(&format!("V_{n} = {}\n", p.states().len()));
            }
            Ok(out)
        }
        Format::Dot => Err(CliError::Usage("states has no dot form".into())),
    }
}

fn cmd_roadmap(n: u32, format: Format) -> Result<String, CliError> {
    let r = build_roadmap(n)?;
    match format {
        Format::Dot => Ok(export_dot(&r)),
        Format::Table => {
            let mut out = String::new();
            for (a, b, x) in r.edges() {
                out.push_str(&format!("{a} -> {b}  {}\n", x.text_form()));
            }
            out.push_str(&format!("nodes: {}, edges: {}\n", r.node_count(), r.edges().len()));
            Ok(out)
        }
        _ => Err(CliError::Usage("roadmap supports dot or table".into())),
    }
}

fn parse_generators(n: u32, gens: &[String], max_depth: usize) -> Result<Vec<Rotation>, CliError> {
    if gens.is_empty() {
        return Ok(enumerate_rotations(n).map_err(CliError::Engine)?);
    }
    let mut out = Vec::new();
    for g in gens {
        let (j, k) = g
            .split_once(',')
            .ok_or_else(|| CliError::Usage(format!("generator '{g}' is not j,k")))?;
        let j: u64 =
            j.trim().parse().map_err(|_| CliError::Usage(format!("bad index in '{g}'")))?;
        let k: u64 =
            k.trim().parse().map_err(|_| CliError::Usage(format!("bad index in '{g}'")))?;
        match (PauliOp::from_index(n, j), PauliOp::from_index(n, k)) {
            (Ok(pj), Ok(pk)) => out.push(make_rotation(pj, pk)?),
            // a generator for a different qubit count can never act on the
            // target system; it contributes nothing to the search
            (Err(Error::IndexOutOfRange { .. }), _) | (_, Err(Error::IndexOutOfRange { .. })) => {}
            (Err(e), _) | (_, Err(e)) => return Err(e.into()),
        }
    }
    if out.is_empty() {
        // only the identity is reachable
        return Err(CliError::Engine(Error::SearchExhausted { explored: 1, max_depth }));
    }
    Ok(out)
}

fn cmd_synthesize(
    gate: &str,
    gens: &[String],
    max_depth: usize,
    format: Format,
) -> Result<String, CliError> {
    let n = match gate {
        "S" | "H" => 1,
        "CNOT" => 2,
        other => return Err(CliError::Usage(format!("unknown gate: {other}"))),
    };
    let target = named_gate_matrix(gate)?;
    let generators = parse_generators(n, gens, max_depth)?;
    let seq = synthesize(&target, &generators, max_depth)?;
    let product = seq.product_matrix(1 << n)?;
    let phase = product
        .eq_up_to_unit(&target)
        .ok_or_else(|| CliError::Engine(Error::domain("product does not match target")))?;
    match format {
        Format::Json => {
            let rec = seq.to_record(gate, phase);
            Ok(format!("{}\n", serde_json::to_string_pretty(&rec).unwrap()))
        }
        Format::Table => {
            let mut out = String::new();
            for (x, e) in &seq.steps {
                out.push_str(&format!("{}^{:+}\n", x.text_form(), e));
            }
            out.push_str(&format!(
                "length: {}, phase: {}, verified: true\n",
                seq.len(),
                phase
            ));
            Ok(out)
        }
        _ => Err(CliError::Usage("synthesize supports json or table".into())),
    }
}

fn class_name(c: EntanglementClass) -> &'static str {
    match c {
        EntanglementClass::Separable => "separable",
        EntanglementClass::Intermediate => "intermediate",
        EntanglementClass::Maximal => "mes",
    }
}

fn cmd_lattice(
    shell: u32,
    spectrum: bool,
    fibers: bool,
    bloch: bool,
    format: Format,
    threads: usize,
) -> Result<String, CliError> {
    if [spectrum, fibers, bloch].iter().filter(|&&b| b).count() > 1 {
        return Err(CliError::Usage("choose one of --spectrum, --fibers, --bloch".into()));
    }
    if spectrum {
        let values = shell_concurrence_spectrum(shell)?;
        return Ok(match format {
            Format::Json => format!("{}\n", serde_json::to_string(&values).unwrap()),
            _ => format!(
                "{}\n",
                values.iter().map(|v| format!("{v:.6}")).collect::<Vec<_>>().join(", ")
            ),
        });
    }
    if fibers {
        if shell != 1 {
            return Err(CliError::Usage("--fibers is a shell-1 report".into()));
        }
        return cmd_fibers(format);
    }
    if bloch {
        let points = bloch_ball_discretization(shell)?;
        return Ok(match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&points).unwrap()),
            _ => {
                let mut out = String::from("z,x,y,den,multiplicity\n");
                for (b, m) in &points {
                    out.push_str(&format!(
                        "{},{},{},{},{m}\n",
                        b.num[0], b.num[1], b.num[2], b.den
                    ));
                }
                out
            }
        });
    }
    // full shell listing
    let points = e8_shell_threads(shell, SHELL_CAP, threads)?;
    let mut out = String::from("J,h0,h1,h2,h3,h4,h5,h6,h7,visible,concurrence,class\n");
    for p in &points {
        let v = p.to_state();
        let c = hilbertian::lattice::concurrence(&v)?;
        out.push_str(&format!(
            "{shell},{},{},{c:.9},{}\n",
            join(&p.h, ","),
            p.is_visible(),
            class_name(classify_entanglement(&v)?)
        ));
    }
    Ok(out)
}

#[derive(serde::Serialize)]
struct FiberReport {
    sets: Vec<FiberEntry>,
    rays: usize,
    separable_rays: usize,
    mes_rays: usize,
}

#[derive(serde::Serialize)]
struct FiberEntry {
    set: u8,
    size: usize,
    class: &'static str,
}

fn cmd_fibers(format: Format) -> Result<String, CliError> {
    let shell = gosset_shell();
    let rays = physical_states(&shell)?;
    let sets = (1..=10u8)
        .map(|m| FiberEntry {
            set: m,
            size: shell.iter().filter(|p| p.set == m).count(),
            class: if m <= 6 { "separable" } else { "mes" },
        })
        .collect();
    let report = FiberReport {
        sets,
        rays: rays.len(),
        separable_rays: rays
            .iter()
            .filter(|r| r.class == EntanglementClass::Separable)
            .count(),
        mes_rays: rays.iter().filter(|r| r.class == EntanglementClass::Maximal).count(),
    };
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
        _ => {
            let mut out = String::new();
            for e in &report.sets {
                out.push_str(&format!("S{:<2} size {:>2}  {}\n", e.set, e.size, e.class));
            }
            out.push_str(&format!(
                "rays: {} ({} separable + {} mes)\n",
                report.rays, report.separable_rays, report.mes_rays
            ));
            out
        }
    })
}

fn cmd_crosscheck(format: Format) -> Result<String, CliError> {
    let rays = physical_states(&gosset_shell())?;
    let h2 = build_polytope(2)?;
    let report = crosscheck_with_polytope(&rays, &h2);
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
        _ => format!(
            "{}/{} matched, bijective: {}\n",
            report.matched, report.polytope_states, report.bijective
        ),
    })
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(sep)
}

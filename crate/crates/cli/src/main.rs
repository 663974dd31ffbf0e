//! `rs-plotkin`: parameters, encoding, decoding, simulation and brute-force
//! verification for the nested Reed-Solomon construction.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

mod symbols;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rs_plotkin::cascade::{self, Stream};
use rs_plotkin::channel::ChannelModel;
use rs_plotkin::oracle;
use rs_plotkin::sim::{self, SimRecord};
use rs_plotkin::{Execution, GaloisField, MessageTriple, NestedTriple};

#[derive(Parser)]
#[command(name = "rs-plotkin", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the parameters of the constructed code and its components.
    Params(CodeArgs),
    /// Read k_a + k_b + k_z hex symbols from stdin, write the 3n-symbol codeword.
    Encode(CodeArgs),
    /// Read 3n hex symbols from stdin, print the decoding outcome and trace.
    Decode(CodeArgs),
    /// Monte Carlo frame-error simulation written as CSV.
    Simulate(SimulateArgs),
    /// Exhaustive minimum-distance and decoder-vs-brute-force checks.
    Verify {
        /// Only the tiny GF(4) instances.
        #[arg(long)]
        tiny: bool,
    },
}

/// Defaults give the GF(256), n = 128, (98, 82, 36) triple.
#[derive(Args, Clone)]
struct CodeArgs {
    /// Extension degree of GF(2^m).
    #[arg(long = "m", default_value_t = 8)]
    m: u32,
    /// Component code length.
    #[arg(long = "n", default_value_t = 128)]
    n: usize,
    #[arg(long = "ka", default_value_t = 98)]
    k_a: usize,
    #[arg(long = "kb", default_value_t = 82)]
    k_b: usize,
    #[arg(long = "kz", default_value_t = 36)]
    k_z: usize,
    /// Mixing coefficient (hex with 0x prefix, or decimal); defaults to the
    /// field generator.
    #[arg(long, value_parser = parse_int)]
    alpha: Option<u32>,
    /// Primitive polynomial as a bit mask (hex with 0x prefix, or decimal).
    #[arg(long = "prim-poly", value_parser = parse_int)]
    prim_poly: Option<u32>,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Channel: fixed:TAU (exact error weight) or qsc:P (q-ary symmetric).
    #[arg(long)]
    model: ChannelModel,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Sweep the channel parameter over LO:HI:STEP.
    #[arg(long)]
    sweep: Option<String>,
    /// Run trials on one thread.
    #[arg(long)]
    sequential: bool,
}

fn parse_int(s: &str) -> Result<u32, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u32::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("{s:?}: {e}"))
}

impl CodeArgs {
    fn build(&self) -> Result<NestedTriple> {
        let field = Arc::new(GaloisField::new(self.m, self.prim_poly)?);
        let alpha = self.alpha.map(|a| field.element(a)).transpose()?;
        Ok(NestedTriple::new(
            field, self.n, self.k_a, self.k_b, self.k_z, alpha,
        )?)
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).context("reading stdin")?;
    Ok(s)
}

fn cmd_params(args: &CodeArgs) -> Result<ExitCode> {
    let t = args.build()?;
    let p = t.params();
    let f = t.field();
    println!("field: GF(2^{}) prim_poly={:#x}", f.degree(), f.prim_poly());
    println!("alpha: {:#x}", t.alpha().value());
    for (name, c) in [("C_a", t.code_a()), ("C_b", t.code_b()), ("C_z", t.code_z())] {
        println!(
            "{name}: n={} k={} d={}",
            c.len(),
            c.dimension(),
            c.min_distance()
        );
    }
    println!("C: n0={} k0={} d0={}", p.n0, p.k0, p.d0);
    println!("radius: {}", p.correction_radius());
    Ok(ExitCode::SUCCESS)
}

fn cmd_encode(args: &CodeArgs) -> Result<ExitCode> {
    let t = args.build()?;
    let msg = symbols::parse(&read_stdin()?, t.field(), t.params().k0)?;
    let msg = MessageTriple::split(&msg, t.dims())?;
    println!("{}", symbols::format(&t.encode(&msg)?));
    Ok(ExitCode::SUCCESS)
}

fn stream_name(s: Stream) -> &'static str {
    match s {
        Stream::A => "a",
        Stream::B => "b",
        Stream::Z => "z",
    }
}

fn cmd_decode(args: &CodeArgs) -> Result<ExitCode> {
    let t = args.build()?;
    let r = symbols::parse(&read_stdin()?, t.field(), t.len())?;
    let out = cascade::decode_flat(&t, &r)?;
    let tr = &out.trace;
    println!("status: {}", out.status.as_str());
    if let Some(m) = &out.message {
        println!("message: {}", symbols::format(&m.concat()));
    }
    if let Some(c) = &out.codeword {
        println!("codeword: {}", symbols::format(c));
    }
    println!(
        "step1: {} locations {:?}",
        tr.e_locs.len(),
        tr.e_locs.positions()
    );
    if let Some(e) = tr.step2_errors {
        println!("step2: {e} errors outside erased positions");
    }
    for (i, c) in tr.candidates.iter().enumerate() {
        let mark = if tr.chosen == Some(i) { " *" } else { "" };
        println!(
            "candidate {}: |e_a|={} |e_b|={} |e_z|={} total={}{mark}",
            stream_name(c.stream),
            c.weights[0],
            c.weights[1],
            c.weights[2],
            c.total
        );
    }
    if let Some(tau) = tr.tau_min {
        println!("tau_min: {tau}");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_sweep(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, step] = parts[..] else {
        bail!("sweep must be LO:HI:STEP, got {s:?}");
    };
    let num = |x: &str| -> Result<f64> {
        x.parse()
            .with_context(|| format!("invalid sweep value {x:?}"))
    };
    Ok(sim::sweep_values(num(lo)?, num(hi)?, num(step)?)?)
}

fn cmd_simulate(args: &SimulateArgs) -> Result<ExitCode> {
    let t = args.code.build()?;
    let p = t.params();
    let models: Vec<ChannelModel> = match &args.sweep {
        Some(s) => parse_sweep(s)?
            .into_iter()
            .map(|v| args.model.with_param(v))
            .collect(),
        None => vec![args.model],
    };
    let exec = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let mut records: Vec<SimRecord> = Vec::with_capacity(models.len());
    for model in models {
        let r = sim::run_simulation(&t, model, args.trials, args.seed, exec)?;
        eprintln!(
            "{model}: fer={} (miscorrections {}, failures {}), {:?}/frame",
            r.fer(),
            r.miscorrections,
            r.failures.total(),
            r.mean_decode_time
        );
        records.push(r);
    }
    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    sim::write_csv(&mut sink, &records, (p.n0, p.k0))?;
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn gf(m: u32) -> Arc<GaloisField> {
    Arc::new(GaloisField::new(m, None).expect("built-in field"))
}

fn cmd_verify(tiny: bool) -> Result<ExitCode> {
    let mut ok = true;
    let gf4 = gf(2);
    for (n, ks) in [(3, (2, 1, 1)), (3, (1, 1, 1)), (4, (2, 2, 1))] {
        let t = NestedTriple::new(gf4.clone(), n, ks.0, ks.1, ks.2, None)?;
        let table = oracle::enumerate(&t, Execution::Parallel)?;
        let pass = table.min_distance == t.params().d0;
        ok &= pass;
        println!(
            "{} min-distance GF(4) n={n} k={ks:?}: enumerated {} formula {}",
            if pass { "PASS" } else { "FAIL" },
            table.min_distance,
            t.params().d0
        );
    }

    let t = NestedTriple::new(gf4, 3, 2, 1, 1, None)?;
    let table = oracle::enumerate(&t, Execution::Parallel)?;
    let report = oracle::cascade_ml_equivalence(&table, Execution::Parallel);
    ok &= report.mismatches == 0;
    println!(
        "{} cascade vs nearest codeword GF(4) n=3 k=(2, 1, 1): {} words, {} mismatches",
        if report.mismatches == 0 { "PASS" } else { "FAIL" },
        report.checked,
        report.mismatches
    );

    if !tiny {
        let t = NestedTriple::new(gf(4), 15, 11, 9, 5, None)?;
        for tau in 0..=t.params().correction_radius() {
            let r = sim::run_simulation(
                &t,
                ChannelModel::FixedWeight(tau),
                10_000,
                tau as u64,
                Execution::Parallel,
            )?;
            let pass = r.successes == r.trials;
            ok &= pass;
            println!(
                "{} radius GF(16) n=15 k=(11, 9, 5) tau={tau}: {}/{} recovered",
                if pass { "PASS" } else { "FAIL" },
                r.successes,
                r.trials
            );
        }
    }

    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Params(a) => cmd_params(a),
        Command::Encode(a) => cmd_encode(a),
        Command::Decode(a) => cmd_decode(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Verify { tiny } => cmd_verify(*tiny),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

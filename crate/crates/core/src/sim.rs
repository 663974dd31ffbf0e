//! Seeded Monte Carlo frame-error simulation of the cascade decoder.
//!
//! Trial `i` draws everything (message, error positions and values) from its
//! own ChaCha stream keyed by `(seed, i)`, so a run is reproducible
//! regardless of how trials are scheduled across threads.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cascade::{self, CascadeOutcome, CascadeStatus};
use crate::channel::ChannelModel;
use crate::construction::{MessageTriple, NestedTriple};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::par::{self, Execution};

pub const CSV_HEADER: &str = "model,param,trials,successes,miscorrections,failures,fer,mds_reference";

/// RNG for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_message<R: Rng + ?Sized>(triple: &NestedTriple, rng: &mut R) -> MessageTriple {
    let q = triple.field().size();
    let (ka, kb, kz) = triple.dims();
    let mut draw = |k: usize| -> Vec<FieldElement> {
        (0..k)
            .map(|_| FieldElement::from_raw(rng.gen_range(0..q) as u16))
            .collect()
    };
    let a = draw(ka);
    let b = draw(kb);
    let z = draw(kz);
    MessageTriple { a, b, z }
}

/// Everything one trial produced.
#[derive(Debug, Clone)]
pub struct Trial {
    pub transmitted: Vec<FieldElement>,
    pub received: Vec<FieldElement>,
    pub outcome: CascadeOutcome,
}

impl Trial {
    pub fn class(&self) -> TrialClass {
        match (&self.outcome.status, &self.outcome.codeword) {
            (CascadeStatus::Success, Some(c)) if *c == self.transmitted => TrialClass::Success,
            (CascadeStatus::Success, _) => TrialClass::Miscorrection,
            (status, _) => TrialClass::Failure(*status),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrialClass {
    Success,
    /// Decoder reported success with a codeword other than the one sent.
    Miscorrection,
    Failure(CascadeStatus),
}

/// Runs trial `index`: random message, channel, cascade decode.
pub fn run_trial(triple: &NestedTriple, model: &ChannelModel, seed: u64, index: u64) -> Trial {
    let mut rng = trial_rng(seed, index);
    let msg = random_message(triple, &mut rng);
    let transmitted = triple.encode(&msg).expect("message sized from the triple");
    let error = model.sample_error(triple.field(), transmitted.len(), &mut rng);
    let received: Vec<FieldElement> = transmitted.iter().zip(&error).map(|(&c, &e)| c + e).collect();
    let outcome = cascade::decode_flat(triple, &received).expect("received word sized from the triple");
    Trial {
        transmitted,
        received,
        outcome,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FailureCounts {
    pub step1: u64,
    pub step2: u64,
    pub all_candidates: u64,
}

impl FailureCounts {
    pub fn total(&self) -> u64 {
        self.step1 + self.step2 + self.all_candidates
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimRecord {
    pub model: ChannelModel,
    pub trials: u64,
    pub successes: u64,
    pub miscorrections: u64,
    pub failures: FailureCounts,
    pub mean_decode_time: Duration,
}

impl SimRecord {
    pub fn frame_errors(&self) -> u64 {
        self.miscorrections + self.failures.total()
    }

    pub fn fer(&self) -> f64 {
        self.frame_errors() as f64 / self.trials as f64
    }

    /// One CSV line matching [`CSV_HEADER`], without a trailing newline.
    /// Timing is deliberately left out so output is reproducible.
    pub fn csv_row(&self, params: (usize, usize)) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.model.kind(),
            self.model.param_string(),
            self.trials,
            self.successes,
            self.miscorrections,
            self.failures.total(),
            self.fer(),
            mds_reference_fer(params.0, params.1, &self.model),
        )
    }
}

#[derive(Default)]
struct Tally {
    successes: u64,
    miscorrections: u64,
    failures: FailureCounts,
    nanos: u128,
}

impl Tally {
    fn merge(mut self, o: Tally) -> Tally {
        self.successes += o.successes;
        self.miscorrections += o.miscorrections;
        self.failures.step1 += o.failures.step1;
        self.failures.step2 += o.failures.step2;
        self.failures.all_candidates += o.failures.all_candidates;
        self.nanos += o.nanos;
        self
    }
}

pub fn run_simulation(
    triple: &NestedTriple,
    model: ChannelModel,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> Result<SimRecord> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    model.validate(triple.len())?;
    let tally = par::map_reduce(
        exec,
        0..trials,
        Tally::default,
        |i| {
            let start = Instant::now();
            let trial = run_trial(triple, &model, seed, i);
            let mut t = Tally {
                nanos: start.elapsed().as_nanos(),
                ..Tally::default()
            };
            match trial.class() {
                TrialClass::Success => t.successes = 1,
                TrialClass::Miscorrection => t.miscorrections = 1,
                TrialClass::Failure(CascadeStatus::Step1Failure) => t.failures.step1 = 1,
                TrialClass::Failure(CascadeStatus::Step2Failure) => t.failures.step2 = 1,
                TrialClass::Failure(_) => t.failures.all_candidates = 1,
            }
            t
        },
        Tally::merge,
    );
    Ok(SimRecord {
        model,
        trials,
        successes: tally.successes,
        miscorrections: tally.miscorrections,
        failures: tally.failures,
        mean_decode_time: Duration::from_nanos((tally.nanos / trials as u128) as u64),
    })
}

/// Bounded-distance decoding of an MDS `(n0, k0)` code succeeds on a
/// weight-`tau` error exactly when `tau <= (n0 - k0) / 2`.
pub fn mds_reference(n0: usize, k0: usize, tau: usize) -> bool {
    tau <= (n0 - k0) / 2
}

/// Frame error rate of the bounded-distance MDS reference under `model`:
/// 0 or 1 for a fixed weight, the binomial tail beyond the radius for a
/// q-ary symmetric channel.
pub fn mds_reference_fer(n0: usize, k0: usize, model: &ChannelModel) -> f64 {
    match *model {
        ChannelModel::FixedWeight(tau) => {
            if mds_reference(n0, k0, tau) {
                0.0
            } else {
                1.0
            }
        }
        ChannelModel::QSymmetric(p) => binomial_upper_tail(n0, p, (n0 - k0) / 2),
    }
}

/// `P[X > t]` for `X ~ Binomial(n, p)`.
fn binomial_upper_tail(n: usize, p: f64, t: usize) -> f64 {
    if t >= n {
        return 0.0;
    }
    if p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return 1.0;
    }
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    // ln C(n, i) built incrementally
    let mut ln_choose = 0.0f64;
    let mut tail = 0.0f64;
    for i in 0..=n {
        if i > 0 {
            ln_choose += ((n - i + 1) as f64).ln() - (i as f64).ln();
        }
        if i > t {
            tail += (ln_choose + i as f64 * lp + (n - i) as f64 * lq).exp();
        }
    }
    tail.min(1.0)
}

/// `lo, lo + step, ...` up to and including `hi` (within rounding).
pub fn sweep_values(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || hi < lo || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidChannel(format!(
            "invalid sweep {lo}:{hi}:{step}"
        )));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as u64 + 1;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

/// Writes the header and one row per record.
pub fn write_csv<W: Write>(out: &mut W, records: &[SimRecord], params: (usize, usize)) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row(params))?;
    }
    Ok(())
}

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Serialize;

use super::{
    connection_section, load_problem, run_verification, spectrum_section, AkComparison, Analysis, VerifyOptions,
};
use crate::check::all_pass;
use crate::curve::{default_t_samples, CurveFunctionPair};
use crate::gaussmanin::{ak_spectrum_oracle, spectrum};
use crate::poly::{Monomial, Poly, WeightSystem};
use crate::rational::{ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Spectrum,
    Connection,
    Frobenius,
    Verify,
    Ak(i64),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub seed: Option<u64>,
    pub pretty: bool,
    pub t_samples: Option<Vec<Rational>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success,
    CheckFailure,
    Usage,
    InvalidInput,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        match self {
            ExitCode::Success => 0,
            ExitCode::CheckFailure => 1,
            ExitCode::Usage => 2,
            ExitCode::InvalidInput => 3,
        }
    }
}

/// What the process should print and return. `stdout` is empty when the
/// report went to `--output`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit: ExitCode,
}

/// Deterministic JSON: sorted keys, trailing newline.
pub fn emit_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    let mut s = if pretty {
        serde_json::to_string_pretty(&v)
    } else {
        serde_json::to_string(&v)
    }
    .expect("values serialize");
    s.push('\n');
    s
}

fn error_outcome(exit: ExitCode, code: &str, message: String) -> Outcome {
    let mut body = BTreeMap::new();
    body.insert("code", code.to_string());
    body.insert("message", message);
    let mut wrapper = BTreeMap::new();
    wrapper.insert("error", body);
    Outcome {
        stdout: String::new(),
        stderr: emit_json(&wrapper, false),
        exit,
    }
}

fn deliver(text: String, exit: ExitCode, opts: &RunOptions) -> Outcome {
    match &opts.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                stdout: String::new(),
                stderr: String::new(),
                exit,
            },
            Err(e) => error_outcome(ExitCode::Usage, "OutputUnwritable", format!("{}: {e}", path.display())),
        },
        None => Outcome {
            stdout: text,
            stderr: String::new(),
            exit,
        },
    }
}

fn ak_pair(k: i64) -> CurveFunctionPair {
    let weights = WeightSystem::new(ratio(1, 1), ratio(k, 2)).expect("positive weights");
    let g = &Poly::monomial(Monomial::new(k as u32, 0)) + &Poly::monomial(Monomial::new(0, 2));
    CurveFunctionPair::validate(Poly::x(), g, weights).expect("A_k input is valid")
}

fn run_ak(k: i64, opts: &RunOptions) -> Outcome {
    let oracle = match ak_spectrum_oracle(k) {
        Ok(t) => t,
        Err(e) => return error_outcome(ExitCode::Usage, "InvalidK", e.to_string()),
    };
    let pipeline = match spectrum(&ak_pair(k)) {
        Ok(t) => t,
        Err(e) => return error_outcome(ExitCode::CheckFailure, "Pipeline", e.to_string()),
    };
    let oracle = spectrum_section(&oracle);
    let pipeline = spectrum_section(&pipeline);
    let mut diff = Vec::new();
    for (side, mine, other) in [("oracle", &oracle, &pipeline), ("pipeline", &pipeline, &oracle)] {
        for entry in mine.iter().filter(|e| !other.contains(e)) {
            let mut m = BTreeMap::new();
            m.insert("side".to_string(), side.to_string());
            m.insert("lambda".to_string(), entry[0].clone());
            m.insert("multiplicity".to_string(), entry[1].clone());
            diff.push(m);
        }
    }
    let cmp = AkComparison {
        k,
        oracle,
        pipeline,
        diff,
    };
    let exit = if cmp.matches() {
        ExitCode::Success
    } else {
        ExitCode::CheckFailure
    };
    deliver(emit_json(&cmp, opts.pretty), exit, opts)
}

/// Executes one subcommand end to end.
pub fn run_subcommand(cmd: &Command, opts: &RunOptions) -> Outcome {
    if let Command::Ak(k) = cmd {
        return run_ak(*k, opts);
    }
    let problem = match load_problem(opts.input.as_deref()) {
        Ok(p) => p,
        Err(e) => return error_outcome(ExitCode::InvalidInput, e.code(), e.to_string()),
    };
    let analysis = match Analysis::new(&problem.pair) {
        Ok(a) => a,
        Err(e) => return error_outcome(ExitCode::CheckFailure, "Pipeline", e.to_string()),
    };
    let seed = opts.seed.or(problem.seed).unwrap_or(0);
    let text = match cmd {
        Command::Spectrum => emit_json(&spectrum_section(&analysis.spectrum), opts.pretty),
        Command::Connection => emit_json(&connection_section(&analysis.connection), opts.pretty),
        Command::Frobenius => emit_json(&analysis.frobenius_section(), opts.pretty),
        Command::Analyze | Command::Verify => {
            let (checks, probes) = if *cmd == Command::Verify {
                let t_samples = opts
                    .t_samples
                    .clone()
                    .or(problem.t_samples.clone())
                    .unwrap_or_else(|| default_t_samples(seed));
                let vopts = VerifyOptions {
                    seed,
                    t_samples,
                    u_samples: problem.u_samples.clone().unwrap_or_default(),
                };
                run_verification(&analysis, &vopts)
            } else {
                (Vec::new(), Vec::new())
            };
            let ok = all_pass(&checks);
            let report = match analysis.report(checks, probes) {
                Ok(r) => r,
                Err(e) => return error_outcome(ExitCode::CheckFailure, "Pipeline", e.to_string()),
            };
            let exit = if ok { ExitCode::Success } else { ExitCode::CheckFailure };
            return deliver(emit_json(&report, opts.pretty), exit, opts);
        }
        Command::Ak(_) => unreachable!("handled above"),
    };
    deliver(text, ExitCode::Success, opts)
}

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use tetra_core::gin::{ek_betti, gin_of_curve};
use tetra_core::groebner::gin_oracle;
use tetra_core::resolution::{enumerate_linear_in_class, gin_betti_prediction, resolution_recipe};
use tetra_core::tuple::{degree_of_tuple, reduction_trace};
use tetra_core::{betti_table_oracle, classify, BettiTable, Error, MonomialIdeal, TetTuple};

use crate::args::{Command, Suite};
use crate::report::{Provenance, Report};
use crate::suites::{run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize to JSON")
}

fn error_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn table_value(table: &BettiTable, name: &str) -> Value {
    json!({
        "table": value(table),
        "resolution": table.resolution_string(name),
        "grid": table.grid_string(),
    })
}

/// Result value and exit code for one command; domain errors become an
/// `{"error": ...}` result with the usage exit code.
fn dispatch(command: &Command, prov: &mut Provenance) -> (Value, i32) {
    match command {
        Command::Classify { tuple } => (value(&classify(&tuple.0)), EXIT_OK),
        Command::Reduce { tuple, trace } => {
            let tr = reduction_trace(&tuple.0);
            let mut v = json!({
                "terminal": value(&tr.terminal),
                "terminal_kind": value(&tr.terminal_kind),
                "acm": tr.is_acm(),
                "steps": tr.steps.len(),
                "first_ci_power": value(&tr.first_ci_power),
            });
            if *trace {
                let steps: Vec<Value> = tr
                    .steps
                    .iter()
                    .map(|s| {
                        let mut sv = value(s);
                        sv["f_degree"] = json!(s.f_degree());
                        sv["degree"] = json!(degree_of_tuple(&s.parent));
                        sv
                    })
                    .collect();
                v["trace"] = Value::Array(steps);
                v["chain"] = value(&tr.chain());
            }
            (v, EXIT_OK)
        }
        Command::Betti { tuple, oracle_check } => match resolution_recipe(&tuple.0) {
            Err(e) => (error_value(&e), EXIT_USAGE),
            Ok(recipe) => {
                let table = recipe.assemble();
                let mut v = table_value(&table, "J");
                v["base"] = value(&recipe.base);
                v["base_kind"] = value(&recipe.base_kind);
                v["links"] = json!(recipe.steps.len());
                let mut code = EXIT_OK;
                if *oracle_check {
                    let oracle = betti_table_oracle(&MonomialIdeal::of_tuple(&tuple.0));
                    let agrees = oracle == table;
                    v["oracle"] = value(&oracle);
                    v["oracle_agrees"] = json!(agrees);
                    if !agrees {
                        code = EXIT_MISMATCH;
                    }
                }
                (v, code)
            }
        },
        Command::Gin { tuple, oracle_check, seed, prime } => {
            let t = &tuple.0;
            let gin = match gin_of_curve(t) {
                Ok(g) => g,
                Err(e) => return (error_value(&e), EXIT_USAGE),
            };
            let mut v = json!({
                "gin": value(&gin),
                "supported": gin.is_some(),
            });
            if let Some(g) = &gin {
                v["gin_betti"] = value(&ek_betti(g));
            }
            if let Ok(p) = gin_betti_prediction(t) {
                v["predicted_betti"] = value(&p);
            }
            let mut code = EXIT_OK;
            if *oracle_check {
                let cfg = SuiteConfig { bound: 0, seed: *seed, prime: *prime };
                prov.seed = Some(*seed);
                prov.primes = Some(cfg.primes().to_vec());
                match gin_oracle(&MonomialIdeal::of_tuple(t), cfg.seeds(), cfg.primes()) {
                    Ok(numeric) => {
                        let agrees = gin.as_ref().map(|g| *g == numeric);
                        v["oracle"] = value(&numeric);
                        v["oracle_agrees"] = value(&agrees);
                        if agrees == Some(false) {
                            code = EXIT_MISMATCH;
                        }
                    }
                    Err(e @ Error::Parse(_)) => return (error_value(&e), EXIT_USAGE),
                    Err(e) => {
                        v["oracle"] = error_value(&e);
                        code = EXIT_MISMATCH;
                    }
                }
            }
            (v, code)
        }
        Command::Hilbert { tuple, upto } => match MonomialIdeal::of_tuple(&tuple.0).hilbert_data(*upto) {
            Ok(h) => {
                let mut v = value(&h);
                v["degree_closed_form"] = json!(degree_of_tuple(&tuple.0));
                (v, EXIT_OK)
            }
            Err(e) => (error_value(&e), EXIT_USAGE),
        },
        Command::EnumerateLinear { tuple } => match enumerate_linear_in_class(&tuple.0) {
            Ok(found) => (json!({ "count": found.len(), "orbits": value(&found) }), EXIT_OK),
            Err(e) => (error_value(&e), EXIT_USAGE),
        },
        Command::Verify(args) => {
            if let Err(e) = tetra_core::groebner::PrimeField::new(args.prime) {
                return (error_value(&e), EXIT_USAGE);
            }
            let cfg = SuiteConfig { bound: args.bound, seed: args.seed, prime: args.prime };
            prov.bound = Some(args.bound);
            prov.seed = Some(args.seed);
            prov.primes = Some(cfg.primes().to_vec());
            let outcomes = run_suite(args.suite, &cfg);
            let passed = outcomes.iter().all(|o| o.passed());
            let v = json!({ "passed": passed, "suites": value(&outcomes) });
            (v, if passed { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn input_value(command: &Command) -> Value {
    let tuple = |t: &TetTuple| json!(t.to_string());
    match command {
        Command::Classify { tuple: t }
        | Command::Reduce { tuple: t, .. }
        | Command::Betti { tuple: t, .. }
        | Command::Gin { tuple: t, .. }
        | Command::Hilbert { tuple: t, .. }
        | Command::EnumerateLinear { tuple: t } => tuple(&t.0),
        Command::Verify(a) => json!(if a.suite == Suite::All { "all" } else { a.suite.name() }),
    }
}

pub fn execute(command: &Command) -> (Report, i32) {
    let start = Instant::now();
    let mut provenance = Provenance::new();
    let (result, code) = dispatch(command, &mut provenance);
    provenance.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let report = Report {
        command: command.verb().to_string(),
        input: input_value(command),
        result,
        provenance,
    };
    (report, code)
}

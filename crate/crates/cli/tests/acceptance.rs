//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use superjm::checks::{
    block_oracle, clebsch_gordan, deligne_axioms, ds_checks, hinich, jm_triples,
    jordan_chevalley_check, neat_cone, osp_simples, phi_monoidal, projective_annihilation,
    CheckResult,
};
use superjm::exact::int;
use superjm::jm::neat_in_g;
use superjm::liesuper::gl_superalgebra;
use superjm::Result;

const SEED: u64 = 7;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_check(r: Result<CheckResult>) -> Outcome {
    match r {
        Ok(r) => Outcome {
            passed: r.passed,
            detail: if r.passed {
                format!("{} cases", r.cases)
            } else {
                format!(
                    "{} of {} cases failed; first: {:?}",
                    r.failures.len(),
                    r.cases,
                    r.failures.iter().take(3).collect::<Vec<_>>()
                )
            },
        },
        Err(e) => Outcome {
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn all_of(parts: Vec<Result<CheckResult>>) -> Outcome {
    let outcomes: Vec<Outcome> = parts.into_iter().map(from_check).collect();
    Outcome {
        passed: outcomes.iter().all(|o| o.passed),
        detail: outcomes
            .iter()
            .map(|o| o.detail.as_str())
            .collect::<Vec<_>>()
            .join(", "),
    }
}

fn worked_neat_examples() -> Result<CheckResult> {
    let (g, v) = gl_superalgebra(1, 2)?;
    let at = |a, b, c, d| {
        g.element(&[
            ("E12", int(a)),
            ("E13", int(b)),
            ("E21", int(c)),
            ("E31", int(d)),
        ])
    };
    let cases = [
        ((1, 0, 0, 1), true),
        ((1, 0, 0, 0), false),
        ((1, 0, 1, 0), false),
        ((0, 0, 0, 0), true),
    ];
    let mut failures = Vec::new();
    for ((a, b, c, d), expect) in cases {
        if neat_in_g(&v, &at(a, b, c, d)?)? != expect {
            failures.push(format!("({a}, {b}, {c}, {d}) should have neat = {expect}"));
        }
    }
    Ok(CheckResult {
        name: "worked_examples".into(),
        passed: failures.is_empty(),
        cases: cases.len(),
        failures,
    })
}

fn run_cli(args: &[&str]) -> std::io::Result<(i32, Vec<u8>)> {
    let out = Command::new(env!("CARGO_BIN_EXE_superjm"))
        .args(args)
        .output()?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_reproducibility() -> Outcome {
    let seed = SEED.to_string();
    let mut problems = Vec::new();
    match run_cli(&["check", "--suite", "all", "--seed", &seed]) {
        Ok((0, _)) => {}
        Ok((code, out)) => problems.push(format!(
            "check --suite all exited {code}: {}",
            String::from_utf8_lossy(&out)
                .chars()
                .take(400)
                .collect::<String>()
        )),
        Err(e) => problems.push(format!("cannot run binary: {e}")),
    }
    let repeated: [&[&str]; 5] = [
        &[
            "scan",
            "--preset",
            "gl12-neat-cone",
            "--samples",
            "300",
            "--seed",
            &seed,
        ],
        &[
            "scan",
            "--preset",
            "gl11-support",
            "--samples",
            "40",
            "--seed",
            &seed,
        ],
        &["check", "--suite", "jm", "--seed", &seed],
        &[
            "blocks",
            "--preset",
            "gl12-adjoint",
            "--element",
            r#"{"coeffs":{"E12":"1","E31":"1"}}"#,
            "--seed",
            &seed,
        ],
        &[
            "phi",
            "--preset",
            "gl12",
            "--element",
            r#"{"coeffs":{"E12":"1","E31":"1"}}"#,
        ],
    ];
    for args in repeated {
        match (run_cli(args), run_cli(args)) {
            (Ok((0, a)), Ok((0, b))) if a == b && !a.is_empty() => {}
            (Ok((c1, a)), Ok((c2, b))) => problems.push(format!(
                "{}: exit codes {c1}/{c2}, identical output {}",
                args.join(" "),
                a == b
            )),
            _ => problems.push(format!("{}: failed to run", args.join(" "))),
        }
    }
    match run_cli(&[
        "phi",
        "--preset",
        "gl12",
        "--element",
        r#"{"coeffs":{"E12":"1","E31":"1"}}"#,
    ]) {
        Ok((0, out)) if out == b"{\"summands\":[{\"k\":1,\"shift\":\"odd\",\"mult\":1}]}\n" => {}
        other => problems.push(format!("phi example output: {other:?}")),
    }
    match run_cli(&["phi", "--preset", "nope", "--element", "{}"]) {
        Ok((2, _)) => {}
        other => problems.push(format!("unknown preset should exit 2: {other:?}")),
    }
    Outcome {
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            "check exits 0; repeated runs byte-identical".into()
        } else {
            problems.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "Clebsch-Gordan soundness, lengths <= 11",
            Box::new(|| from_check(clebsch_gordan(11))),
        ),
        (
            "Deligne filtration axioms and canonicity",
            Box::new(|| from_check(Ok(deligne_axioms(200, SEED)))),
        ),
        (
            "block decomposition oracle equivalence",
            Box::new(|| from_check(Ok(block_oracle(200, SEED)))),
        ),
        (
            "gl(1|2) neat cone",
            Box::new(|| all_of(vec![neat_cone(1000, SEED), worked_neat_examples()])),
        ),
        (
            "osp(1|2)-triples",
            Box::new(|| from_check(jm_triples(100, SEED))),
        ),
        (
            "Phi monoidality and superdimension",
            Box::new(|| from_check(phi_monoidal(100, SEED))),
        ),
        (
            "Duflo-Serganova reduction",
            Box::new(|| from_check(ds_checks(3, 20, SEED))),
        ),
        (
            "semisimplification not exact in the middle",
            Box::new(|| from_check(hinich())),
        ),
        (
            "projective annihilation in gl(1|1)",
            Box::new(|| from_check(projective_annihilation(60, SEED))),
        ),
        (
            "osp(1|2) simples up to k = 6",
            Box::new(|| from_check(Ok(osp_simples(6)))),
        ),
        (
            "Jordan-Chevalley decomposition",
            Box::new(|| from_check(Ok(jordan_chevalley_check(200, SEED)))),
        ),
        ("CLI reproducibility", Box::new(cli_reproducibility)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "{verdict} [{:>2}] {name}: {} ({:.1}s)",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.passed {
            failed += 1;
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

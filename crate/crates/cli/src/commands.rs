use serde_json::{json, Value};
use superjm::checks::{run_suite, Suite};
use superjm::exact::int;
use superjm::functors::{ds_representation, ga11_fusion, osp_fusion, phi_general, Ga11Object};
use superjm::jm::{jm_triple, neat_cone_scan, neat_report, support_scan, ScanConfig};
use superjm::json::{
    algebra_to_json, blocks_to_json, filtration_to_json, ga11_to_json, matrix_to_json,
    representation_to_json, semisimple_to_json, triple_to_json,
};
use superjm::liesuper::gl_superalgebra;
use superjm::nilform::{adapted_basis, deligne_filtration, BlockType, OddNilpotent, PivotOrder};
use superjm::{Error, Result};

use crate::input::{context, element, indexed, module, operator, square_matrix};
use crate::{Command, Family, Format, ScanPreset, Source};

pub struct Output {
    pub text: String,
    pub passed: bool,
}

/// 1 for failed certificates, 2 for bad input or unmet preconditions.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Defect(_)
        | Error::NoGradingElement
        | Error::NoCompletion
        | Error::JordanChevalleyDiverged => 1,
        _ => 2,
    }
}

fn emit(format: Format, value: Value, text: impl FnOnce() -> String) -> Output {
    let text = match format {
        Format::Json => value.to_string(),
        Format::Text => text(),
    };
    Output { text, passed: true }
}

fn ctx(s: &Source) -> Result<crate::input::Context> {
    context(s.preset.as_deref(), s.algebra.as_deref(), s.rep.as_deref())
}

/// `--matrix` when given, otherwise `ρ(x)` from the source.
fn nilpotent(source: &Source, matrix: Option<&str>) -> Result<OddNilpotent> {
    match matrix {
        Some(m) => operator(m),
        None => {
            let c = ctx(source)?;
            let x = element(&c, source.element.as_deref())?;
            OddNilpotent::new(c.rep.rho_odd(&x)?)
        }
    }
}

fn need_seed(seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| Error::InvalidArgument("--seed is required for sampling".into()))
}

pub fn run(command: Command, format: Format) -> Result<Output> {
    match command {
        Command::Blocks {
            source,
            matrix,
            seed,
        } => {
            let op = nilpotent(&source, matrix.as_deref())?;
            let order = seed.map_or(PivotOrder::Canonical, PivotOrder::Seeded);
            let b = adapted_basis(&op, order)?;
            Ok(emit(format, blocks_to_json(&b), || {
                Ga11Object::from(&b).to_string()
            }))
        }
        Command::Neat {
            source,
            quasi_reductive,
        } => {
            let c = ctx(&source)?;
            let x = element(&c, source.element.as_deref())?;
            let r = neat_report(&c.rep, &x, quasi_reductive || c.quasi_reductive)?;
            let v = serde_json::to_value(&r).expect("plain struct");
            Ok(emit(format, v, || {
                format!(
                    "nilpotent: {}\nneat: {}\nquasi-reductive: {}",
                    r.nilpotent, r.neat, r.quasi_reductive
                )
            }))
        }
        Command::Deligne { source, matrix } => {
            let op = nilpotent(&source, matrix.as_deref())?;
            let f = deligne_filtration(&op)?;
            Ok(emit(format, filtration_to_json(&f), || {
                f.weights()
                    .iter()
                    .map(|i| format!("gr {i}: {}", f.gr_dim(*i)))
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
        Command::Phi { source, module: m } => {
            let c = ctx(&source)?;
            let x = element(&c, source.element.as_deref())?;
            let s = phi_general(&module(&c, m.as_deref())?, &x)?;
            Ok(emit(format, semisimple_to_json(&s), || s.to_string()))
        }
        Command::JmTriple { source } => {
            let c = ctx(&source)?;
            let x = element(&c, source.element.as_deref())?;
            let t = jm_triple(&c.rep, &x)?;
            let v = triple_to_json(&t);
            Ok(emit(format, v.clone(), || {
                serde_json::to_string_pretty(&v).expect("json")
            }))
        }
        Command::Ds { source, module: m } => {
            let c = ctx(&source)?;
            let x = element(&c, source.element.as_deref())?;
            let (alg, rep) = ds_representation(&module(&c, m.as_deref())?, &x)?;
            let (e, o) = alg.algebra.graded_dim();
            let v = json!({
                "algebra": algebra_to_json(&alg.algebra),
                "module": representation_to_json(&rep),
            });
            Ok(emit(format, v, || {
                format!(
                    "g_x: ({e}|{o})\nM_x: ({}|{})",
                    rep.space().even_dim(),
                    rep.space().odd_dim()
                )
            }))
        }
        Command::Fusion {
            family,
            left,
            right,
        } => {
            let (l, r) = (indexed(&left)?, indexed(&right)?);
            match family {
                Family::Ga11 => {
                    let f = ga11_fusion(BlockType::new(l.0 + 1, l.1), BlockType::new(r.0 + 1, r.1));
                    Ok(emit(format, ga11_to_json(&f), || f.to_string()))
                }
                Family::Osp => {
                    if l.0 % 2 == 1 || r.0 % 2 == 1 {
                        return Err(Error::InvalidArgument(
                            "osp simples have even index 2k".into(),
                        ));
                    }
                    let f = osp_fusion((l.0 / 2, l.1), (r.0 / 2, r.1));
                    Ok(emit(format, semisimple_to_json(&f), || f.to_string()))
                }
            }
        }
        Command::Jc { matrix } => {
            let m = square_matrix(&matrix)?;
            let (s, n) = superjm::exact::jordan_chevalley(&m)?;
            let v = json!({ "s": matrix_to_json(&s), "n": matrix_to_json(&n) });
            Ok(emit(format, v.clone(), || {
                serde_json::to_string_pretty(&v).expect("json")
            }))
        }
        Command::Scan {
            preset,
            samples,
            seed,
        } => {
            let seed = need_seed(seed)?;
            let (v, passed) = match preset {
                ScanPreset::Gl12NeatCone => {
                    let r = neat_cone_scan(samples, seed)?;
                    (serde_json::to_value(&r).expect("plain struct"), r.passed())
                }
                ScanPreset::Gl11Support => {
                    let (g, v) = gl_superalgebra(1, 1)?;
                    let p = v.tensor(&v.dual())?;
                    let config = ScanConfig {
                        samples,
                        seed,
                        range: 3,
                        special: vec![
                            g.zero(),
                            g.element(&[("E12", int(1))])?,
                            g.element(&[("E21", int(1))])?,
                        ],
                    };
                    let modules = [("V".to_string(), v.clone()), ("V⊗V*".to_string(), p)];
                    let r = support_scan(&v, &modules, &config)?;
                    (serde_json::to_value(&r).expect("plain struct"), r.passed())
                }
            };
            let mut out = emit(format, v.clone(), || {
                format!(
                    "seed {seed}: {}",
                    if passed {
                        "no counterexamples"
                    } else {
                        "counterexamples found"
                    }
                )
            });
            out.passed = passed;
            Ok(out)
        }
        Command::Check { suite, seed } => {
            let s = Suite::parse(&suite)?;
            let seed = if s == Suite::Clebsch {
                seed.unwrap_or(0)
            } else {
                need_seed(seed)?
            };
            let results = run_suite(s, seed);
            let ok = results.iter().filter(|r| r.passed).count();
            let passed = ok == results.len();
            let v = json!({
                "suite": suite,
                "seed": seed,
                "passed": ok,
                "total": results.len(),
                "results": serde_json::to_value(&results).expect("plain struct"),
            });
            let mut out = emit(format, v, || {
                let mut lines: Vec<String> = results
                    .iter()
                    .map(|r| {
                        let verdict = if r.passed { "pass" } else { "FAIL" };
                        format!("{:<26} {verdict}  {} cases", r.name, r.cases)
                    })
                    .collect();
                for r in results.iter().filter(|r| !r.passed) {
                    for f in r.failures.iter().take(5) {
                        lines.push(format!("  {}: {f}", r.name));
                    }
                }
                lines.push(format!("{ok}/{} checks passed", results.len()));
                lines.join("\n")
            });
            out.passed = passed;
            Ok(out)
        }
    }
}

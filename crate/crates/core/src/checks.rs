//! Seeded property suites. Each check returns a [`CheckResult`] with the number of
//! cases run and a description of every failing case.

use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, jordan_chevalley, min_poly, ratio, squarefree_part, Matrix, SpanBuilder};
use crate::functors::{
    ds_algebra, ds_module, hinich_witness, phi_general, rank_one_odd, verify_ga11_fusion,
};
use crate::jm::{
    jm_triple, neat_cone_scan, neat_in_g, restriction_consistent, support_membership, support_scan,
    triple_homomorphism_defects, ScanConfig,
};
use crate::liesuper::{adjoint_rep, gl_superalgebra, osp12, osp_simple, Element, Representation};
use crate::nilform::{
    adapted_basis, block_multiplicities, deligne_filtration, deligne_filtration_with,
    verify_deligne, BlockType, OddNilpotent, PivotOrder,
};
use crate::sampling::{
    random_matrix, random_module, random_odd_element, random_odd_nilpotent, rng, Rng64,
};
use crate::superlinalg::Parity;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn from_cases(name: &str, outcomes: Vec<Result<Option<String>>>) -> CheckResult {
        let cases = outcomes.len();
        let failures: Vec<String> = outcomes
            .into_iter()
            .filter_map(|o| match o {
                Ok(None) => None,
                Ok(Some(msg)) => Some(msg),
                Err(e) => Some(format!("error: {e}")),
            })
            .collect();
        CheckResult {
            name: name.to_string(),
            passed: failures.is_empty(),
            cases,
            failures,
        }
    }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

/// Per-case seeds drawn from one master seed, so parallel runs stay deterministic.
fn case_seeds(seed: u64, n: usize) -> Vec<u64> {
    let mut r = rng(seed);
    (0..n).map(|_| r.gen()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Clebsch,
    Deligne,
    Jm,
    Ds,
    Functor,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Result<Suite> {
        Ok(match s {
            "clebsch" => Suite::Clebsch,
            "deligne" => Suite::Deligne,
            "jm" => Suite::Jm,
            "ds" => Suite::Ds,
            "functor" => Suite::Functor,
            "all" => Suite::All,
            _ => return Err(Error::InvalidArgument(format!("unknown suite \"{s}\""))),
        })
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<CheckResult> {
    let wrap = |name: &str, r: Result<CheckResult>| {
        r.unwrap_or_else(|e| CheckResult {
            name: name.to_string(),
            passed: false,
            cases: 0,
            failures: vec![format!("error: {e}")],
        })
    };
    let mut out = Vec::new();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Clebsch) {
        out.push(wrap("clebsch_gordan", clebsch_gordan(11)));
    }
    if want(Suite::Deligne) {
        out.push(deligne_axioms(200, seed));
        out.push(block_oracle(200, seed));
    }
    if want(Suite::Jm) {
        out.push(wrap("neat_cone", neat_cone(1000, seed)));
        out.push(wrap("jm_triples", jm_triples(100, seed)));
    }
    if want(Suite::Functor) {
        out.push(wrap("phi_monoidal", phi_monoidal(100, seed)));
        out.push(wrap(
            "projective_annihilation",
            projective_annihilation(50, seed),
        ));
        out.push(osp_simples(6));
        out.push(jordan_chevalley_check(200, seed));
    }
    if want(Suite::Ds) {
        out.push(wrap("ds", ds_checks(3, 20, seed)));
        out.push(wrap("hinich", hinich()));
    }
    out
}

/// Tensor products of all blocks of length `≤ max_length`, both parities, against the closed form.
pub fn clebsch_gordan(max_length: usize) -> Result<CheckResult> {
    let outcomes = verify_ga11_fusion(max_length)?
        .into_iter()
        .map(|c| {
            Ok(fail_if(!c.passed(), || {
                format!(
                    "{} ⊗ {}: predicted {}, observed {}",
                    c.left, c.right, c.predicted, c.observed
                )
            }))
        })
        .collect();
    Ok(CheckResult::from_cases("clebsch_gordan", outcomes))
}

fn nilpotent_sample(seed: u64) -> (OddNilpotent, crate::functors::Ga11Object) {
    let mut r = rng(seed);
    random_odd_nilpotent(&mut r, 8, 8)
}

/// Both filtration axioms on random odd nilpotents up to `(8|8)`, and equality of the
/// filtrations built from canonical and scrambled chain bases.
pub fn deligne_axioms(samples: usize, seed: u64) -> CheckResult {
    let outcomes = case_seeds(seed, samples)
        .into_par_iter()
        .map(|s| -> Result<Option<String>> {
            let (op, obj) = nilpotent_sample(s);
            let f = deligne_filtration(&op)?;
            verify_deligne(&f, op.matrix())?;
            let g = deligne_filtration_with(&op, PivotOrder::Seeded(s ^ 0x5eed))?;
            Ok(fail_if(f != g, || {
                format!("seed {s}: filtration depends on pivot order ({obj})")
            }))
        })
        .collect();
    CheckResult::from_cases("deligne_axioms", outcomes)
}

/// Rank-formula multiplicities against greedy chains, and chains forming a basis.
pub fn block_oracle(samples: usize, seed: u64) -> CheckResult {
    let outcomes = case_seeds(seed, samples)
        .into_par_iter()
        .map(|s| -> Result<Option<String>> {
            let (op, obj) = nilpotent_sample(s);
            let ranks = block_multiplicities(&op);
            let chains = adapted_basis(&op, PivotOrder::Canonical)?;
            let basis = chains.chain_matrix().map(|m| m.rank()) == Some(op.space().dim());
            let truth = crate::functors::Ga11Object::from(&ranks) == obj;
            Ok(fail_if(
                ranks.blocks != chains.blocks || !basis || !truth,
                || format!("seed {s}: oracles disagree on {obj}"),
            ))
        })
        .collect();
    CheckResult::from_cases("block_oracle", outcomes)
}

pub fn neat_cone(samples: usize, seed: u64) -> Result<CheckResult> {
    let report = neat_cone_scan(samples, seed)?;
    let outcomes = report
        .samples
        .iter()
        .map(|s| {
            Ok(fail_if(report.counterexamples.contains(s), || {
                format!("{:?}: nilpotent {}, neat {}", s.abcd, s.nilpotent, s.neat)
            }))
        })
        .collect();
    Ok(CheckResult::from_cases("neat_cone", outcomes))
}

fn triple_case(rep: &Representation, x: &Element) -> Result<Option<String>> {
    let t = jm_triple(rep, x)?;
    let defects = triple_homomorphism_defects(&t);
    let consistent = restriction_consistent(rep, &t)?;
    Ok(fail_if(
        !t.relations || !defects.is_empty() || !consistent,
        || {
            format!(
                "triple for {:?}: defects {defects:?}, restriction consistent {consistent}",
                x.coeffs
            )
        },
    ))
}

/// Neat points of `gl(1|2)`: `(a, b) ≠ 0` and `(c, d) = t(−b, a)` with `t ≠ 0`.
pub fn jm_triples(samples: usize, seed: u64) -> Result<CheckResult> {
    let (g, v) = gl_superalgebra(1, 2)?;
    let mut outcomes: Vec<Result<Option<String>>> = case_seeds(seed, samples)
        .into_par_iter()
        .map(|s| {
            let mut r = rng(s);
            let (a, b) = loop {
                let p = (r.gen_range(-4..=4), r.gen_range(-4..=4));
                if p != (0, 0) {
                    break p;
                }
            };
            let t = loop {
                let t = ratio(r.gen_range(-4..=4), r.gen_range(1..=3));
                if !num_traits::Zero::is_zero(&t) {
                    break t;
                }
            };
            let x = g.element(&[
                ("E12", int(a)),
                ("E13", int(b)),
                ("E21", -&t * int(b)),
                ("E31", &t * int(a)),
            ])?;
            if !neat_in_g(&v, &x)? {
                return Ok(Some(format!("sample ({a}, {b}, t = {t}) is not neat")));
            }
            triple_case(&v, &x)
        })
        .collect();

    let osp = Arc::new(osp12());
    let ad = adjoint_rep(&osp);
    outcomes.push(triple_case(&ad, &osp.element(&[("X", int(1))])?));

    let (g11, v11) = gl_superalgebra(1, 1)?;
    let e = g11.element(&[("E12", int(1))])?;
    outcomes.push(Ok(fail_if(
        jm_triple(&v11, &e) != Err(Error::NotNeat),
        || "gl(1|1) x = e was not refused as not neat".into(),
    )));
    Ok(CheckResult::from_cases("jm_triples", outcomes))
}

/// `Φ_x(M ⊗ N) = Φ_x(M) ⊗ Φ_x(N)` and `sdim Φ_x(M) = sdim M` for random modules of
/// `gl(1|1)`, `gl(1|2)`, `gl(2|1)`. Half the cases use an `x` acting non-nilpotently,
/// which goes through the Jordan–Chevalley route.
pub fn phi_monoidal(pairs: usize, seed: u64) -> Result<CheckResult> {
    let presets = [
        gl_superalgebra(1, 1)?,
        gl_superalgebra(1, 2)?,
        gl_superalgebra(2, 1)?,
    ];
    let outcomes = case_seeds(seed, pairs)
        .into_par_iter()
        .enumerate()
        .map(|(i, s)| -> Result<Option<String>> {
            let (g, v) = &presets[i % presets.len()];
            let mut r: Rng64 = rng(s);
            let m = random_module(&mut r, v, 6);
            let n = random_module(&mut r, v, 6);
            // Even cases take x with non-nilpotent ρ(x), odd cases a multiple of one odd basis vector.
            let x = if i % 2 == 0 {
                loop {
                    let x = random_odd_element(&mut r, g, 2);
                    if !v.rho_matrix(&x).is_nilpotent() {
                        break x;
                    }
                }
            } else {
                let odd = g.indices(Parity::Odd);
                let mut x = g.zero();
                x.coeffs[odd[r.gen_range(0..odd.len())]] = int(r.gen_range(1..=3));
                x
            };
            let (pm, pn) = (phi_general(&m, &x)?, phi_general(&n, &x)?);
            let pmn = phi_general(&m.tensor(&n)?, &x)?;
            let predicted = pm.tensor(&pn);
            let sdim_ok = pm.sdim() == m.space().sdim() && pn.sdim() == n.space().sdim();
            Ok(fail_if(pmn != predicted || !sdim_ok, || {
                format!("seed {s}: Φ(M⊗N) = {pmn}, Φ(M)⊗Φ(N) = {predicted}, sdim ok {sdim_ok}")
            }))
        })
        .collect();
    Ok(CheckResult::from_cases("phi_monoidal", outcomes))
}

/// For `gl(1|1)`: `Φ_e(V ⊗ V*) = 0`, `Φ_0(V ⊗ V*) ≠ 0`, and on samples the support of
/// `V ⊗ V*` and the neat set are both `{0}`.
pub fn projective_annihilation(samples: usize, seed: u64) -> Result<CheckResult> {
    let (g, v) = gl_superalgebra(1, 1)?;
    let p = v.tensor(&v.dual())?;
    let e = g.element(&[("E12", int(1))])?;
    let f = g.element(&[("E21", int(1))])?;
    let mut outcomes = vec![
        Ok(fail_if(support_membership(&p, &e)?, || {
            "Φ_e(V⊗V*) ≠ 0".into()
        })),
        Ok(fail_if(!support_membership(&p, &g.zero())?, || {
            "Φ_0(V⊗V*) = 0".into()
        })),
    ];
    let config = ScanConfig {
        samples,
        seed,
        range: 3,
        special: vec![g.zero(), e, f],
    };
    let report = support_scan(&v, &[("V⊗V*".to_string(), p)], &config)?;
    for s in &report.samples {
        let zero = s.coords.iter().all(|c| c == "0");
        outcomes.push(Ok(fail_if(s.member[0] != zero || s.neat != zero, || {
            format!("{:?}: member {}, neat {}", s.coords, s.member[0], s.neat)
        })));
    }
    outcomes.extend(report.law_violations.iter().map(|l| Ok(Some(l.clone()))));
    outcomes.extend(report.neat_violations.iter().map(|l| Ok(Some(l.clone()))));
    Ok(CheckResult::from_cases("projective_annihilation", outcomes))
}

/// `M̃_{2k}` for `k ≤ max_k` and both parities: valid, of dimension `(k+1|k)` up to
/// the shift, restricting to the single block `M_{2k}` along `X`.
pub fn osp_simples(max_k: usize) -> CheckResult {
    let outcomes = (0..=max_k)
        .flat_map(|k| [Parity::Even, Parity::Odd].map(|p| (k, p)))
        .map(|(k, p)| -> Result<Option<String>> {
            let rep = osp_simple(k, p);
            let dims = rep.space().superdim();
            let expect = if p == Parity::Even {
                (k + 1, k)
            } else {
                (k, k + 1)
            };
            let g = rep.algebra();
            let op = OddNilpotent::new(rep.rho_odd(&g.element(&[("X", int(1))])?)?)?;
            let blocks = block_multiplicities(&op);
            let single = blocks
                .blocks
                .iter()
                .filter(|(_, m)| **m > 0)
                .collect::<Vec<_>>()
                == vec![(&BlockType::new(2 * k + 1, p), &1)];
            Ok(fail_if(
                !rep.is_valid() || (dims.even, dims.odd) != expect || !single,
                || {
                    format!(
                        "k = {k}, shift {p:?}: dims {dims:?}, blocks {:?}",
                        blocks.blocks
                    )
                },
            ))
        })
        .collect();
    CheckResult::from_cases("osp_simples", outcomes)
}

/// A random `n × n` test matrix: half fully random, half conjugates of Jordan forms
/// with repeated integer eigenvalues.
fn jc_sample(seed: u64) -> Matrix {
    let mut r = rng(seed);
    let n = r.gen_range(1..=6);
    if r.gen_bool(0.5) {
        return random_matrix(&mut r, n, n, 3);
    }
    let mut j = Matrix::zeros(n, n);
    let mut lambda = int(r.gen_range(-2..=2));
    for i in 0..n {
        if i > 0 {
            if r.gen_bool(0.6) {
                j[(i - 1, i)] = int(1);
            } else {
                lambda = int(r.gen_range(-2..=2));
            }
        }
        j[(i, i)] = lambda.clone();
    }
    let p = loop {
        let p = random_matrix(&mut r, n, n, 2);
        if p.rank() == n {
            break p;
        }
    };
    &(&p * &j) * &p.inverse().expect("full rank")
}

pub fn jordan_chevalley_check(samples: usize, seed: u64) -> CheckResult {
    let outcomes = case_seeds(seed, samples)
        .into_par_iter()
        .map(|s| -> Result<Option<String>> {
            let m = jc_sample(s);
            let (ss, nn) = jordan_chevalley(&m)?;
            let sum = &ss + &nn == m;
            let commute = Matrix::commutator(&ss, &nn).is_zero();
            let nil = nn.is_nilpotent();
            let mu = min_poly(&ss);
            let squarefree = squarefree_part(&mu)? == mu;
            let mut span = SpanBuilder::new(m.rows() * m.cols());
            for i in 0..m.rows().max(1) {
                span.insert(&m.pow(i).vectorize());
            }
            let poly = span.contains(&ss.vectorize());
            Ok(fail_if(!(sum && commute && nil && squarefree && poly), || {
                format!("seed {s}: sum {sum}, commute {commute}, nilpotent {nil}, squarefree {squarefree}, polynomial {poly}")
            }))
        })
        .collect();
    CheckResult::from_cases("jordan_chevalley", outcomes)
}

/// For `gl(m|n)`, `1 ≤ m, n ≤ max`: `𝔤_x` has the dimensions of `gl(m−1|n−1)` and a
/// valid bracket, and `sdim M_x = sdim M` on random modules.
pub fn ds_checks(max: usize, modules: usize, seed: u64) -> Result<CheckResult> {
    let mut outcomes = Vec::new();
    let seeds = case_seeds(seed, modules);
    for m in 1..=max {
        for n in 1..=max {
            let (g, v) = gl_superalgebra(m, n)?;
            let x = rank_one_odd(&g, m, n)?;
            outcomes.push(ds_algebra(&g, &x).map(|a| {
                let d = a.algebra.graded_dim();
                let (m1, n1) = (m - 1, n - 1);
                let expect = (m1 * m1 + n1 * n1, 2 * m1 * n1);
                fail_if(d != expect || !a.algebra.is_valid(), || {
                    format!(
                        "gl({m}|{n}): 𝔤_x has dims ({}|{}), expected {expect:?}",
                        d.0, d.1
                    )
                })
            }));
            let sdims = seeds.par_iter().map(|&s| -> Result<Option<String>> {
                let module = random_module(&mut rng(s), &v, 8);
                let (a, b) = (
                    ds_module(&module, &x)?.space().sdim(),
                    module.space().sdim(),
                );
                Ok(fail_if(a != b, || {
                    format!("gl({m}|{n}) seed {s}: sdim M_x = {a}, sdim M = {b}")
                }))
            });
            outcomes.extend(sdims.collect::<Vec<_>>());
        }
    }
    Ok(CheckResult::from_cases("ds", outcomes))
}

pub fn hinich() -> Result<CheckResult> {
    let w = hinich_witness()?;
    let dims = w.image_dims();
    let expect = [(0, 0), (2, 1), (1, 0)];
    let ok = dims.iter().map(|d| (d.even, d.odd)).eq(expect) && !w.middle_dims_add_up();
    Ok(CheckResult::from_cases(
        "hinich",
        vec![Ok(fail_if(!ok, || format!("image dims {dims:?}")))],
    ))
}

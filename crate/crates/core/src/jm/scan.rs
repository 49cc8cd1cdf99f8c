use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::triple::neat_in_g;
use crate::error::Result;
use crate::exact::{format_rational, int, Rational};
use crate::functors::phi_general;
use crate::liesuper::{gl_superalgebra, Element, Representation};
use crate::sampling::{random_odd_element, rng};

/// `neat_in_g` together with the caller's quasi-reductivity declaration, which
/// the criterion needs but never checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeatReport {
    pub nilpotent: bool,
    pub neat: bool,
    pub quasi_reductive: bool,
}

pub fn neat_report(
    faithful: &Representation,
    x: &Element,
    quasi_reductive: bool,
) -> Result<NeatReport> {
    let nilpotent = faithful.rho_matrix(x).is_nilpotent();
    let neat = neat_in_g(faithful, x)?;
    Ok(NeatReport {
        nilpotent,
        neat,
        quasi_reductive,
    })
}

/// `x ∈ supp(M)`, i.e. `Φ_x(M) ≠ 0`.
pub fn support_membership(module: &Representation, x: &Element) -> Result<bool> {
    Ok(!phi_general(module, x)?.is_zero())
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub samples: usize,
    pub seed: u64,
    /// Odd coordinates are drawn uniformly from `[-range, range]`.
    pub range: i64,
    pub special: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportSample {
    pub coords: Vec<String>,
    pub neat: bool,
    /// Membership for each module, in input order.
    pub member: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub seed: u64,
    pub modules: Vec<String>,
    pub samples: Vec<SupportSample>,
    /// Samples where `supp(M ⊕ N) = supp M ∪ supp N` or `supp(M ⊗ N) = supp M ∩ supp N` fails.
    pub law_violations: Vec<String>,
    /// Neat samples outside the support of a nonzero module.
    pub neat_violations: Vec<String>,
}

impl SupportReport {
    pub fn passed(&self) -> bool {
        self.law_violations.is_empty() && self.neat_violations.is_empty()
    }
}

fn coords(x: &Element) -> Vec<String> {
    x.coeffs.iter().map(format_rational).collect()
}

/// Samples odd elements and records support membership of every module, checking
/// the pointwise union and intersection laws for every pair and that neat points
/// lie in every nonzero support.
pub fn support_scan(
    faithful: &Representation,
    modules: &[(String, Representation)],
    config: &ScanConfig,
) -> Result<SupportReport> {
    let g = faithful.algebra();
    let mut r = rng(config.seed);
    let mut points = config.special.clone();
    points.extend((0..config.samples).map(|_| random_odd_element(&mut r, g, config.range)));

    let mut pairs = Vec::new();
    for i in 0..modules.len() {
        for j in i..modules.len() {
            let (m, n) = (&modules[i].1, &modules[j].1);
            pairs.push((i, j, m.direct_sum(n)?, m.tensor(n)?));
        }
    }

    let rows: Vec<(SupportSample, Vec<String>, Vec<String>)> = points
        .par_iter()
        .map(|x| -> Result<_> {
            let neat = neat_in_g(faithful, x)?;
            let member = modules
                .iter()
                .map(|(_, m)| support_membership(m, x))
                .collect::<Result<Vec<_>>>()?;
            let tag = coords(x).join(",");
            let mut laws = Vec::new();
            for (i, j, sum, prod) in &pairs {
                let (a, b) = (member[*i], member[*j]);
                if support_membership(sum, x)? != (a || b) {
                    laws.push(format!(
                        "({tag}): union law for {} ⊕ {}",
                        modules[*i].0, modules[*j].0
                    ));
                }
                if support_membership(prod, x)? != (a && b) {
                    laws.push(format!(
                        "({tag}): intersection law for {} ⊗ {}",
                        modules[*i].0, modules[*j].0
                    ));
                }
            }
            let mut neat_bad = Vec::new();
            if neat {
                for ((name, m), &inside) in modules.iter().zip(&member) {
                    if m.dim() > 0 && !inside {
                        neat_bad.push(format!("({tag}): neat but outside supp {name}"));
                    }
                }
            }
            Ok((
                SupportSample {
                    coords: coords(x),
                    neat,
                    member,
                },
                laws,
                neat_bad,
            ))
        })
        .collect::<Result<_>>()?;

    let mut report = SupportReport {
        seed: config.seed,
        modules: modules.iter().map(|(n, _)| n.clone()).collect(),
        samples: Vec::new(),
        law_violations: Vec::new(),
        neat_violations: Vec::new(),
    };
    for (s, l, n) in rows {
        report.samples.push(s);
        report.law_violations.extend(l);
        report.neat_violations.extend(n);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeSample {
    pub abcd: [i64; 4],
    pub nilpotent: bool,
    pub neat: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub seed: u64,
    pub samples: Vec<ConeSample>,
    pub counterexamples: Vec<ConeSample>,
}

impl ConeReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn predicted(s: &ConeSample) -> bool {
    let [a, b, c, d] = s.abcd;
    let nil = a * c + b * d == 0;
    let zero = s.abcd == [0; 4];
    let neat = nil && (zero || ((a, b) != (0, 0) && (c, d) != (0, 0)));
    s.nilpotent == nil && s.neat == neat
}

/// `x = aE12 + bE13 + cE21 + dE31` in `gl(1|2)` on the defining module: half the
/// random samples are forced onto the quadric `ac + bd = 0`, and every pattern in
/// `{-1, 0, 1}⁴` is appended.
pub fn neat_cone_scan(samples: usize, seed: u64) -> Result<ConeReport> {
    let (g, v) = gl_superalgebra(1, 2)?;
    let mut r = rng(seed);
    let mut points: Vec<[i64; 4]> = (0..samples)
        .map(|i| {
            let (a, b) = (r.gen_range(-4..=4), r.gen_range(-4..=4));
            if i % 2 == 0 {
                let t = r.gen_range(-3..=3);
                [a, b, -t * b, t * a]
            } else {
                [a, b, r.gen_range(-4..=4), r.gen_range(-4..=4)]
            }
        })
        .collect();
    for p in 0..81 {
        points.push([
            p % 3 - 1,
            (p / 3) % 3 - 1,
            (p / 9) % 3 - 1,
            (p / 27) % 3 - 1,
        ]);
    }
    let samples: Vec<ConeSample> = points
        .par_iter()
        .map(|abcd| -> Result<ConeSample> {
            let terms: Vec<(&str, Rational)> = ["E12", "E13", "E21", "E31"]
                .iter()
                .zip(abcd)
                .map(|(n, c)| (*n, int(*c)))
                .collect();
            let x = g.element(&terms)?;
            Ok(ConeSample {
                abcd: *abcd,
                nilpotent: v.rho_matrix(&x).is_nilpotent(),
                neat: neat_in_g(&v, &x)?,
            })
        })
        .collect::<Result<_>>()?;
    let counterexamples = samples.iter().filter(|s| !predicted(s)).cloned().collect();
    Ok(ConeReport {
        seed,
        samples,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        let (g, v) = gl_superalgebra(1, 2).unwrap();
        let at = |a, b, c, d| {
            g.element(&[
                ("E12", int(a)),
                ("E13", int(b)),
                ("E21", int(c)),
                ("E31", int(d)),
            ])
            .unwrap()
        };
        assert!(neat_in_g(&v, &at(1, 0, 0, 1)).unwrap());
        assert!(!neat_in_g(&v, &at(1, 0, 0, 0)).unwrap());
        let r = neat_report(&v, &at(1, 0, 1, 0), true).unwrap();
        assert!(!r.nilpotent && !r.neat);
        assert!(support_membership(&v, &at(1, 0, 0, 0)).unwrap());
        assert!(support_membership(&v, &g.zero()).unwrap());
    }

    #[test]
    fn cone_scan_small() {
        let r = neat_cone_scan(60, 5).unwrap();
        assert_eq!(r.samples.len(), 141);
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert_eq!(r, neat_cone_scan(60, 5).unwrap());
    }

    #[test]
    fn gl11_projective_support() {
        let (g, v) = gl_superalgebra(1, 1).unwrap();
        let p = v.tensor(&v.dual()).unwrap();
        let e = g.element(&[("E12", int(1))]).unwrap();
        assert!(!support_membership(&v, &e).unwrap());
        assert!(!support_membership(&p, &e).unwrap());
        assert!(support_membership(&p, &g.zero()).unwrap());
        let config = ScanConfig {
            samples: 30,
            seed: 1,
            range: 2,
            special: vec![g.zero(), e],
        };
        let report =
            support_scan(&v, &[("V".into(), v.clone()), ("VV*".into(), p)], &config).unwrap();
        assert!(report.passed(), "{:?}", report.law_violations);
        for s in &report.samples {
            let zero = s.coords.iter().all(|c| c == "0");
            assert_eq!(s.member[1], zero);
        }
    }
}

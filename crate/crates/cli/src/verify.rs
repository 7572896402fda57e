use std::io::Write;

use clap::{Args, ValueEnum};
use pretzel_core::{
    bracket_closed_general, bracket_closed_p11n, bracket_statesum, bracket_tangle_eval,
    build_diagram, classify_state, classify_state_general, classify_state_p11n, conway_closed_p11n,
    conway_skein_p11n, KauffmanState, LaurentPoly, PretzelSpec, Variable, DEFAULT_MAX_CROSSINGS,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Circle-count classifier for P(1,1,n) against union-find.
    #[value(name = "p11n-circles", alias = "lemma44")]
    P11nCircles,
    /// Circle-count classifier for P(1,...,1,n) against union-find.
    #[value(name = "general-circles", alias = "lemma47")]
    GeneralCircles,
    /// Closed P(1,1,n) bracket against the state sum.
    #[value(name = "p11n-closed", alias = "thm45")]
    P11nClosed,
    /// Closed P(1,...,1,n) bracket against the state sum.
    #[value(name = "general-closed", alias = "thm48")]
    GeneralClosed,
    /// The two closed bracket formulas at m = 2.
    Consistency,
    /// Tangle fast path against the state sum on random specs.
    Tangle,
    /// Mirror image inverts A.
    Mirror,
    /// Cyclic rotation leaves the bracket unchanged.
    Rotation,
    /// Conway closed form against the skein recursion.
    Conway,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::P11nCircles,
        Check::GeneralCircles,
        Check::P11nClosed,
        Check::GeneralClosed,
        Check::Consistency,
        Check::Tangle,
        Check::Mirror,
        Check::Rotation,
        Check::Conway,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::P11nCircles => "p11n-circles",
            Check::GeneralCircles => "general-circles",
            Check::P11nClosed => "p11n-closed",
            Check::GeneralClosed => "general-closed",
            Check::Consistency => "consistency",
            Check::Tangle => "tangle",
            Check::Mirror => "mirror",
            Check::Rotation => "rotation",
            Check::Conway => "conway",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Specs with more crossings than this are skipped.
    #[arg(long, default_value_t = DEFAULT_MAX_CROSSINGS)]
    pub max_crossings: usize,
    /// Run a single check.
    #[arg(long, value_enum)]
    pub only: Option<Check>,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

struct Runner {
    max_crossings: usize,
    rng: ChaCha8Rng,
    tally: Tally,
}

impl Runner {
    fn within_budget(&mut self, spec: &PretzelSpec) -> bool {
        let ok = spec.crossing_count() <= self.max_crossings;
        if !ok {
            self.tally.skipped += 1;
        }
        ok
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.tally.passed += 1;
        } else {
            self.tally.failed += 1;
            eprintln!("mismatch: {}", what());
        }
    }

    fn statesum(&self, spec: &PretzelSpec) -> LaurentPoly {
        bracket_statesum(spec, self.max_crossings)
            .expect("budget checked before enumeration")
            .polynomial
    }

    fn random_spec(&mut self) -> PretzelSpec {
        let k = self.rng.random_range(1..=4);
        let tangles: Vec<i64> = (0..k)
            .map(|_| {
                let p = self.rng.random_range(1..=4i64);
                if self.rng.random_bool(0.5) {
                    p
                } else {
                    -p
                }
            })
            .collect();
        PretzelSpec::new(tangles).expect("nonzero tangles")
    }

    fn run(&mut self, check: Check) {
        match check {
            Check::P11nCircles => {
                for n in 2..=10 {
                    let spec = PretzelSpec::p11n(n).unwrap();
                    if self.within_budget(&spec) {
                        let bad = sweep(&spec, |s| classify_state_p11n(&spec, s).ok());
                        self.record(bad.is_none(), || {
                            format!("P({spec}) state {}", bad.unwrap())
                        });
                    }
                }
            }
            Check::GeneralCircles => {
                for m in 1..=4 {
                    for n in 2..=8 {
                        let spec = PretzelSpec::ones_then(m, n).unwrap();
                        if self.within_budget(&spec) {
                            let bad = sweep(&spec, |s| {
                                let c = classify_state(&spec, s).ok()?;
                                classify_state_general(m, n as usize, c.p, c.q).ok()
                            });
                            self.record(bad.is_none(), || {
                                format!("P({spec}) state {}", bad.unwrap())
                            });
                        }
                    }
                }
            }
            Check::P11nClosed => {
                for n in 2..=14 {
                    let spec = PretzelSpec::p11n(n).unwrap();
                    if self.within_budget(&spec) {
                        let closed = bracket_closed_p11n(n).map(|r| r.polynomial).ok();
                        let ok = closed.as_ref() == Some(&self.statesum(&spec));
                        self.record(ok, || format!("closed bracket of P({spec})"));
                    }
                }
            }
            Check::GeneralClosed => {
                for m in 1..=4 {
                    for n in 1..=8 {
                        let spec = PretzelSpec::ones_then(m, n).unwrap();
                        if self.within_budget(&spec) {
                            let closed = bracket_closed_general(m as i64, n)
                                .map(|r| r.polynomial)
                                .ok();
                            let ok = closed.as_ref() == Some(&self.statesum(&spec));
                            self.record(ok, || format!("closed bracket of P({spec})"));
                        }
                    }
                }
            }
            Check::Consistency => {
                for n in 2..=12 {
                    let general = bracket_closed_general(2, n).map(|r| r.polynomial).ok();
                    let p11n = bracket_closed_p11n(n).map(|r| r.polynomial).ok();
                    self.record(general.is_some() && general == p11n, || {
                        format!("closed forms at m = 2, n = {n}")
                    });
                }
            }
            Check::Tangle => {
                for _ in 0..200 {
                    let spec = self.random_spec();
                    if self.within_budget(&spec) {
                        let ok = bracket_tangle_eval(&spec).polynomial == self.statesum(&spec);
                        self.record(ok, || format!("tangle bracket of P({spec})"));
                    }
                }
            }
            Check::Mirror => {
                for _ in 0..100 {
                    let spec = self.random_spec();
                    if self.within_budget(&spec) {
                        let ok = self.statesum(&spec.mirror())
                            == self.statesum(&spec).substitute_inverse();
                        self.record(ok, || format!("mirror of P({spec})"));
                    }
                }
            }
            Check::Rotation => {
                for _ in 0..100 {
                    let spec = self.random_spec();
                    if self.within_budget(&spec) {
                        let ok = self.statesum(&spec.rotate_left()) == self.statesum(&spec);
                        self.record(ok, || format!("rotation of P({spec})"));
                    }
                }
            }
            Check::Conway => {
                for n in (-15..=15).filter(|&n| n != 0) {
                    let closed = conway_closed_p11n(n).ok();
                    let ok = closed.is_some() && closed == conway_skein_p11n(n).ok();
                    self.record(ok, || format!("conway of P(1,1,{n})"));
                }
                let z = |c: i64| LaurentPoly::from_terms(Variable::Z, [(0, 1), (2, c)]);
                for (n, expected) in [(1, z(1)), (2, z(-1))] {
                    let ok = conway_closed_p11n(n).ok() == Some(expected);
                    self.record(ok, || format!("conway anchor P(1,1,{n})"));
                }
            }
        }
    }
}

/// First state where `predict` disagrees with the union-find count.
fn sweep(
    spec: &PretzelSpec,
    predict: impl Fn(&KauffmanState) -> Option<usize>,
) -> Option<KauffmanState> {
    let diagram = build_diagram(spec);
    let counter = diagram.circle_counter();
    KauffmanState::enumerate(spec.crossing_count()).find(|s| predict(s) != Some(counter.count(s)))
}

pub fn run_check(check: Check, max_crossings: usize, seed: u64) -> Tally {
    let mut runner = Runner {
        max_crossings,
        rng: ChaCha8Rng::seed_from_u64(seed),
        tally: Tally::default(),
    };
    runner.run(check);
    runner.tally
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let checks = match args.only {
        Some(c) => vec![c],
        None => Check::ALL.to_vec(),
    };
    let mut failing = 0;
    for check in checks {
        let t = run_check(check, args.max_crossings, args.seed);
        let status = match (t.failed, t.passed) {
            (0, 0) => "SKIP",
            (0, _) => "PASS",
            _ => "FAIL",
        };
        writeln!(
            out,
            "{status} {:<16} passed {:>4}  failed {:>3}  skipped {:>3}",
            check.name(),
            t.passed,
            t.failed,
            t.skipped
        )?;
        if t.failed > 0 {
            failing += 1;
        }
    }
    if failing > 0 {
        return Err(CliError::Verification(failing));
    }
    Ok(())
}

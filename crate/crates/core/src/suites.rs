//! Named verification suites. Each one returns a [`Report`] with one check
//! per fixture, in a fixed order.

use std::time::Instant;

use rayon::prelude::*;

use crate::homology::{eval_psi, eval_psi_mod, generator, Cover};
use crate::liftable::{
    bc6, eq1_identities, eq2_identities, kernel_basis, prop42_identities, verify_identities,
    verify_identity, IdentityCheck, IdentityMode,
};
use crate::matrix::{ExactMat3, ResidueMat3};
use crate::quotient::{first_translation, schreier_check, second_translation};
use crate::report::Report;
use crate::rewrite::{parse_script, Direction, RewriteRule, C2B4_TO_C3B3_SCRIPT, EQ2_SCRIPT};
use crate::word::{Symbol, TwistWord};
use crate::Error;

pub const SUITES: [&str; 8] = [
    "relations",
    "eq1",
    "eq2",
    "prop42",
    "kernel",
    "matrices",
    "schreier",
    "all",
];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub k: Option<u32>,
    pub window: Option<u32>,
}

pub const DEFAULT_WINDOW: u32 = 5;

/// Alternative name of the `matrices` suite.
pub const MATRICES_ALIAS: &str = "paper-matrices";

/// Runs a suite by name. [`MATRICES_ALIAS`] selects `matrices`.
pub fn run_suite(name: &str, options: SuiteOptions) -> Result<Report, Error> {
    let start = Instant::now();
    let mut report = match name {
        "relations" => relations(),
        "eq1" => eq1(),
        "eq2" => eq2(),
        "prop42" => prop42(options.k)?,
        "kernel" => kernel(options.window.unwrap_or(DEFAULT_WINDOW)),
        "matrices" => matrices(options.k)?,
        MATRICES_ALIAS => return run_suite("matrices", options),
        "schreier" => schreier(options.k)?,
        "all" => {
            let mut all = Report::new("all");
            for sub in &SUITES[..SUITES.len() - 1] {
                all.extend(run_suite(sub, options)?);
            }
            all
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    report.suite = name.into();
    report.wall_us = u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX);
    Ok(report)
}

fn w(text: &str) -> TwistWord {
    text.parse().expect("built-in word")
}

fn push_identities(report: &mut Report, checks: Vec<IdentityCheck>) {
    for c in checks {
        let detail = format!(
            "{} = {}: {}",
            c.identity.lhs,
            c.identity.rhs,
            c.report.detail()
        );
        report.check(c.identity.id, c.report.holds, detail);
    }
}

fn push_script(report: &mut Report, id: &str, lhs: &str, rhs: &str, script: &str) {
    match parse_script(script) {
        Err(e) => report.check(id, false, e.to_string()),
        Ok(steps) => {
            let r = verify_identity(&w(lhs), &w(rhs), IdentityMode::RewriteScript(&steps));
            let detail = format!("{lhs} -> {rhs} in {} steps: {}", steps.len(), r.detail());
            report.check(id, r.holds, detail);
        }
    }
}

fn relations() -> Report {
    let mut report = Report::new("relations");
    // a handful of words in which every rule matches somewhere
    let probes: Vec<TwistWord> = [
        "a c b a b c b",
        "b c b a b a^-1 c",
        "a b a^-1 b c b^-1 a c",
        "(c^2 b)^4",
        "c a b a c^-1 b c b^-1 a b",
        "c b a (b c)^6 a^-1 b^-1 c^-1",
    ]
    .iter()
    .map(|s| w(s))
    .collect();
    for rule in RewriteRule::all() {
        let sound = eval_psi(rule.lhs()) == eval_psi(rule.rhs());
        report.check(
            format!("rule.{}", rule.id()),
            sound,
            format!("{} = {} under psi", rule.lhs(), rule.rhs()),
        );
        for dir in [Direction::Forward, Direction::Backward] {
            let mut applied = 0usize;
            let mut preserved = true;
            for p in &probes {
                let before = eval_psi(p);
                for pos in rule.match_positions(p, dir) {
                    let after = rule
                        .apply(p, pos, dir)
                        .expect("position from match_positions");
                    applied += 1;
                    preserved &= eval_psi(&after) == before;
                }
            }
            report.check(
                format!("rewrite.{}.{}", rule.id(), dir),
                preserved && applied > 0,
                format!("{applied} applications preserve psi"),
            );
        }
    }
    report
}

fn eq1() -> Report {
    let mut report = Report::new("eq1");
    push_identities(
        &mut report,
        verify_identities(&eq1_identities()).expect("built-in words"),
    );
    report
}

fn eq2() -> Report {
    let mut report = Report::new("eq2");
    push_identities(
        &mut report,
        verify_identities(&eq2_identities()).expect("built-in words"),
    );
    push_script(
        &mut report,
        "eq2.script",
        "(b c)^6",
        "(c^2 b)^4",
        EQ2_SCRIPT,
    );
    push_script(
        &mut report,
        "eq2.script-c3b",
        "(c^2 b)^4",
        "(c^3 b)^3",
        C2B4_TO_C3B3_SCRIPT,
    );
    report
}

fn prop42(k: Option<u32>) -> Result<Report, Error> {
    let mut report = Report::new("prop42");
    let ks = match k {
        Some(k) => vec![k],
        None => vec![2, 3],
    };
    for k in ks {
        let checks = verify_identities(&prop42_identities(k)?)?;
        push_identities(&mut report, checks);
    }
    Ok(report)
}

fn kernel(window: u32) -> Report {
    let mut report = Report::new("kernel");
    let bc = eval_psi(&bc6());
    report.check("kernel.bc6", bc.is_identity(), "psi((b c)^6)");
    let results: Vec<_> = kernel_basis(window)
        .into_par_iter()
        .map(|(idx, word)| (idx, eval_psi(&word).is_identity()))
        .collect();
    for (idx, ok) in results {
        let detail = if ok { "identity" } else { "not the identity" };
        report.check(format!("kernel({},{})", idx.m, idx.n), ok, detail);
    }
    report
}

/// `Ψ(c^m b c^n)` in closed form.
pub fn twisted_b_matrix(m: i64, n: i64) -> ExactMat3 {
    let t = m - m * n + n;
    ExactMat3::from_i64([[1 - m, t, 0], [-1, 1 - n, 0], [-m, t, 1]])
}

/// `Ψ(c^j b^K c^-j)` in closed form.
pub fn conjugated_b_power_matrix(j: i64, k: i64) -> ExactMat3 {
    ExactMat3::from_i64([
        [1 - k * j, k * j * j, 0],
        [-k, 1 + k * j, 0],
        [-k * j, k * j * j, 1],
    ])
}

fn matrices(k: Option<u32>) -> Result<Report, Error> {
    let mut report = Report::new("matrices");
    let fixtures: [(Symbol, [[i64; 3]; 3]); 4] = [
        (Symbol::A, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        (Symbol::B, [[1, 0, 0], [-1, 1, 0], [0, 0, 1]]),
        (Symbol::C, [[1, 1, 0], [0, 1, 0], [0, 1, 1]]),
        (Symbol::I, [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]),
    ];
    for (s, rows) in fixtures {
        let got = generator(s);
        report.check(
            format!("gen.{s}"),
            got == ExactMat3::from_i64(rows),
            got.to_string(),
        );
    }

    let cb = eval_psi(&w("c b"));
    report.check(
        "product.c b",
        cb == ExactMat3::from_i64([[0, 1, 0], [-1, 1, 0], [-1, 1, 1]]),
        cb.to_string(),
    );

    let mut ok = 0;
    let mut bad = Vec::new();
    for m in -5i64..=5 {
        for n in -5i64..=5 {
            let word = TwistWord::letter(Symbol::C, m)
                .mul(&TwistWord::letter(Symbol::B, 1))
                .mul(&TwistWord::letter(Symbol::C, n));
            if eval_psi(&word) == twisted_b_matrix(m, n) {
                ok += 1;
            } else {
                bad.push(format!("({m},{n})"));
            }
        }
    }
    report.check(
        "c^m b c^n",
        bad.is_empty(),
        format!("{ok}/121 match for m, n in [-5, 5] {}", bad.join(" ")),
    );

    for big_k in 2i64..=6 {
        let mismatches: Vec<i64> = (0..big_k)
            .filter(|&j| {
                let word = TwistWord::letter(Symbol::B, big_k).conjugate_by_power_of_c(j);
                eval_psi(&word) != conjugated_b_power_matrix(j, big_k)
            })
            .collect();
        report.check(
            format!("c^j b^{big_k} c^-j"),
            mismatches.is_empty(),
            format!("j in [0, {big_k}), mismatches {mismatches:?}"),
        );
    }

    let ks = match k {
        Some(k) => vec![k],
        None => (2..=7).collect(),
    };
    for k in ks {
        Cover::new(k)?;
        let t1 = eval_psi_mod(&first_translation(), k)?;
        let t2 = eval_psi_mod(&second_translation(), k)?;
        let e1 = ResidueMat3::new(k, [[1, 0, 0], [0, 1, 0], [-1, 1, 1]])?;
        let e2 = ResidueMat3::new(k, [[1, 0, 0], [0, 1, 0], [0, 1, 1]])?;
        report.check(
            format!("translation.b^-1 a^-1 c b.k{k}"),
            t1 == e1,
            t1.to_string(),
        );
        report.check(format!("translation.a^-1 c.k{k}"), t2 == e2, t2.to_string());
    }
    Ok(report)
}

fn schreier(k: Option<u32>) -> Result<Report, Error> {
    let mut report = Report::new("schreier");
    let ks = match k {
        Some(k) => vec![k],
        None => vec![2, 3],
    };
    for k in ks {
        for e in schreier_check(k)? {
            report.check(
                format!("k{k}.coset{}.{}", e.coset, e.generator),
                e.passed(),
                format!("{}: {}", e.word, e.detail),
            );
        }
    }
    Ok(report)
}

trait ConjugateByC {
    fn conjugate_by_power_of_c(&self, j: i64) -> TwistWord;
}

impl ConjugateByC for TwistWord {
    /// `c^j · self · c^-j`
    fn conjugate_by_power_of_c(&self, j: i64) -> TwistWord {
        TwistWord::letter(Symbol::C, j).conjugate(self)
    }
}

//! Word identities used to shrink the generating sets for k = 2, 3, and the
//! machinery to check them.
//!
//! Equality of images under `Ψ` is only a necessary condition for equality
//! of mapping classes, since `ker Ψ` is a free group of infinite rank.
//! Rewrite-script replay, by contrast, is a derivation from the braid and
//! commutation relations.

use rayon::prelude::*;

use crate::homology::eval_psi;
use crate::rewrite::{replay, RewriteStep};
use crate::word::TwistWord;
use crate::Error;

#[derive(Clone, Copy, Debug)]
pub enum IdentityMode<'a> {
    /// Compare images under `Ψ` (necessary condition only).
    Psi,
    /// Replay the steps starting from the left-hand side.
    RewriteScript(&'a [RewriteStep]),
}

impl IdentityMode<'_> {
    pub fn label(&self) -> &'static str {
        match self {
            IdentityMode::Psi => "psi (necessary condition)",
            IdentityMode::RewriteScript(_) => "rewrite-script",
        }
    }
}

/// Where two sides first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divergence {
    /// First differing matrix entry (row-major).
    Entry {
        row: usize,
        col: usize,
        lhs: String,
        rhs: String,
    },
    /// A script step did not match.
    Step {
        index: usize,
        word: TwistWord,
        message: String,
    },
    /// The script ran but ended somewhere other than the right-hand side;
    /// `position` is the first differing unit letter.
    Endpoint { reached: TwistWord, position: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub mode: &'static str,
    pub holds: bool,
    pub divergence: Option<Divergence>,
}

impl IdentityReport {
    pub fn detail(&self) -> String {
        match &self.divergence {
            None => self.mode.to_string(),
            Some(Divergence::Entry { row, col, lhs, rhs }) => {
                format!("{}: entry ({row},{col}) differs, {lhs} vs {rhs}", self.mode)
            }
            Some(Divergence::Step {
                index,
                word,
                message,
            }) => format!("{}: step {index} failed on `{word}`: {message}", self.mode),
            Some(Divergence::Endpoint { reached, position }) => format!(
                "{}: script ended at `{reached}`, first difference at unit {position}",
                self.mode
            ),
        }
    }
}

fn first_unit_difference(x: &TwistWord, y: &TwistWord) -> u64 {
    let mut xs = x.units();
    let mut ys = y.units();
    let mut idx = 0;
    loop {
        match (xs.next(), ys.next()) {
            (None, None) => return idx,
            (a, b) if a != b => return idx,
            _ => idx += 1,
        }
    }
}

pub fn verify_identity(lhs: &TwistWord, rhs: &TwistWord, mode: IdentityMode<'_>) -> IdentityReport {
    let label = mode.label();
    let divergence = match mode {
        IdentityMode::Psi => {
            let l = eval_psi(lhs);
            let r = eval_psi(rhs);
            (0..9)
                .map(|idx| (idx / 3, idx % 3))
                .find(|&(i, j)| l.get(i, j) != r.get(i, j))
                .map(|(row, col)| Divergence::Entry {
                    row,
                    col,
                    lhs: l.get(row, col).to_string(),
                    rhs: r.get(row, col).to_string(),
                })
        }
        IdentityMode::RewriteScript(steps) => match replay(lhs, steps) {
            Err(fail) => Some(Divergence::Step {
                index: fail.step,
                word: fail.word,
                message: fail.error.to_string(),
            }),
            Ok(trace) => {
                let end = trace.last().expect("trace is non-empty");
                (end != rhs).then(|| Divergence::Endpoint {
                    reached: end.clone(),
                    position: first_unit_difference(end, rhs),
                })
            }
        },
    };
    IdentityReport {
        mode: label,
        holds: divergence.is_none(),
        divergence,
    }
}

/// A displayed equality between two words, given as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordIdentity {
    pub id: String,
    pub lhs: String,
    pub rhs: String,
}

impl WordIdentity {
    fn new(id: impl Into<String>, lhs: &str, rhs: &str) -> Self {
        WordIdentity {
            id: id.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

/// Consecutive equalities of a chain `w0 = w1 = ... = wn`.
fn chain(prefix: &str, words: &[&str]) -> Vec<WordIdentity> {
    words
        .windows(2)
        .enumerate()
        .map(|(idx, pair)| WordIdentity::new(format!("{prefix}.{}", idx + 1), pair[0], pair[1]))
        .collect()
}

const BC6_CHAIN: [&str; 5] = [
    "(b c)^6",
    "(c b)^6",
    "(c (b c b) c b)^2",
    "(c (c b c) c b)^2",
    "(c^2 b)^4",
];

pub fn eq1_identities() -> Vec<WordIdentity> {
    vec![WordIdentity::new(
        "eq1",
        "c b a (b c)^6 a^-1 b^-1 c^-1",
        "(a b)^6",
    )]
}

pub fn eq2_identities() -> Vec<WordIdentity> {
    let mut out = chain("eq2", &BC6_CHAIN);
    out.push(WordIdentity::new("eq2.c3b", "(b c)^6", "(c^3 b)^3"));
    out
}

/// Every equality displayed in the reduction of the generating sets for
/// k = 2 or k = 3.
pub fn prop42_identities(k: u32) -> Result<Vec<WordIdentity>, Error> {
    match k {
        2 => {
            let mut out = vec![WordIdentity::new(
                "k2.conj",
                "c b a (b c)^6 a^-1 b^-1 c^-1",
                "(a b)^6",
            )];
            out.extend(chain("k2.bc6", &BC6_CHAIN));
            Ok(out)
        }
        3 => {
            let mut out = vec![
                WordIdentity::new("k3.g11", "c b a (b c)^6 a^-1 b^-1 c^-1", "(a b)^6"),
                WordIdentity::new("k3.g12", "c^2 b a (b c)^6 a^-1 b^-1 c^-2", "c (a b)^6 c^-1"),
            ];
            out.extend(chain(
                "k3.g21",
                &[
                    "c b^2 a (b c)^6 a^-1 b^-2 c^-1",
                    "(c b^2 c^-1) a (b c)^6 a^-1 (c b^-2 c^-1)",
                    "b^-1 c^2 b a (b c)^6 a^-1 b^-1 c^-2 b",
                    "b^-1 c (a b)^6 c^-1 b",
                ],
            ));
            out.extend(chain(
                "k3.g22",
                &[
                    "c^2 b^2 a (b c)^6 a^-1 b^-2 c^-2",
                    "c^3 (c^-1 b^2 c) a (b c)^6 (c^3 (c^-1 b^2 c) a)^-1",
                    "(c^3 b c^3) c^-1 b^-1 a (b c)^6 ((c^3 b c^3) c^-1 b^-1 a)^-1",
                    "(c^3 b c^3) c^-1 (b^-1 a b) (b c)^6 ((c^3 b c^3) c^-1 (b^-1 a b))^-1",
                    "(c^3 b c^3 a) c^-1 b a^-1 (b c)^6 ((c^3 b c^3 a) c^-1 b a^-1)^-1",
                    "(c^3 b c^3 a) c^-1 b ((a^-1 b a) c)^6 ((c^3 b c^3 a) c^-1 b)^-1",
                    "(c^3 b c^3 a) c^-1 b (b a b^-1 c)^6 ((c^3 b c^3 a) c^-1 b)^-1",
                    "(c^3 b c^3 a) c^-1 b^2 (a (b^-1 c b))^6 ((c^3 b c^3 a) c^-1 b^2)^-1",
                    "(c^3 b c^3 a) c^-1 b^2 (a c b c^-1)^6 ((c^3 b c^3 a) c^-1 b^2)^-1",
                    "(c^3 b c^3 a) (c^-1 b^2 c) (a b)^6 ((c^3 b c^3 a) (c^-1 b^2 c))^-1",
                    "(c^3 b c^3 a b c^3) c^-1 (a b)^6 c (c^3 b c^3 a b c^3)^-1",
                ],
            ));
            out.extend(chain(
                "k3.conj-plus",
                &[
                    "c (a b)^6 c^-1",
                    "(a c b c^-1)^6",
                    "(a b^-1 c b)^6",
                    "b^-1 (b a b^-1 c)^6 b",
                    "b^-1 (a^-1 b a c)^6 b",
                    "b^-1 a^-1 (b c)^6 a b",
                ],
            ));
            out.extend(chain(
                "k3.conj-minus",
                &[
                    "c^-1 (a b)^6 c",
                    "(a c^-1 b c)^6",
                    "(a b c b^-1)^6",
                    "b (b^-1 a b c)^6 b^-1",
                    "b (a b a^-1 c)^6 b^-1",
                    "b a (b c)^6 a^-1 b^-1",
                ],
            ));
            out.extend(chain(
                "k3.bc6",
                &[
                    "(b c)^6",
                    "(c b)^6",
                    "(c^2 b)^4",
                    "c^2 b c^2 b c^2 b c^2 b",
                    "c^3 (c^-1 b c) c b c^2 b c^2 b",
                    "c^3 b c (b^-1 c b) c^2 b c^2 b",
                    "c^3 b c^2 (b c b) c^2 b",
                    "c^3 b c^3 b c^3 b",
                    "(c^3 b)^3",
                ],
            ));
            Ok(out)
        }
        other => Err(Error::UnsupportedReduced(other)),
    }
}

/// The identity families above, concatenated in order.
pub fn displayed_identities() -> Vec<WordIdentity> {
    let mut out = eq1_identities();
    out.extend(eq2_identities());
    out.extend(prop42_identities(2).expect("k = 2 supported"));
    out.extend(prop42_identities(3).expect("k = 3 supported"));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: WordIdentity,
    pub report: IdentityReport,
}

/// Checks each identity under `Ψ`, in parallel, preserving order.
pub fn verify_identities(identities: &[WordIdentity]) -> Result<Vec<IdentityCheck>, Error> {
    identities
        .par_iter()
        .map(|id| {
            let lhs: TwistWord = id.lhs.parse()?;
            let rhs: TwistWord = id.rhs.parse()?;
            Ok(IdentityCheck {
                identity: id.clone(),
                report: verify_identity(&lhs, &rhs, IdentityMode::Psi),
            })
        })
        .collect()
}

pub fn verify_prop42_reductions(k: u32) -> Result<Vec<IdentityCheck>, Error> {
    verify_identities(&prop42_identities(k)?)
}

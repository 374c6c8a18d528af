//! Single-step rewriting with the commutation and braid relations between
//! `T_a`, `T_b`, `T_c`.
//!
//! `a`/`b` and `b`/`c` meet once, `a`/`c` are disjoint. Rules never mention
//! `i`. Positions are indices into the unit-letter expansion of a word.

use std::fmt;
use std::str::FromStr;

use crate::error::{AlgebraError, ParseError};
use crate::homology::eval_psi;
use crate::word::TwistWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// `a c = c a`
    CommAc,
    /// `a b a = b a b`
    BraidAb,
    /// `b c b = c b c`
    BraidBc,
    /// `a b a⁻¹ = b⁻¹ a b`
    BraidConjAb,
    /// `b c b⁻¹ = c⁻¹ b c`
    BraidConjBc,
}

impl RuleId {
    pub const ALL: [RuleId; 5] = [
        RuleId::CommAc,
        RuleId::BraidAb,
        RuleId::BraidBc,
        RuleId::BraidConjAb,
        RuleId::BraidConjBc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::CommAc => "comm-ac",
            RuleId::BraidAb => "braid-ab",
            RuleId::BraidBc => "braid-bc",
            RuleId::BraidConjAb => "braid-conj-ab",
            RuleId::BraidConjBc => "braid-conj-bc",
        }
    }

    fn sides(self) -> (&'static str, &'static str) {
        match self {
            RuleId::CommAc => ("a c", "c a"),
            RuleId::BraidAb => ("a b a", "b a b"),
            RuleId::BraidBc => ("b c b", "c b c"),
            RuleId::BraidConjAb => ("a b a^-1", "b^-1 a b"),
            RuleId::BraidConjBc => ("b c b^-1", "c^-1 b c"),
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown rule {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "forward" | "fwd" | "f" => Ok(Direction::Forward),
            "backward" | "bwd" | "b" => Ok(Direction::Backward),
            _ => Err(format!("unknown direction {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    id: RuleId,
    lhs: TwistWord,
    rhs: TwistWord,
}

impl RewriteRule {
    /// Builds a rule, rejecting it unless both sides have the same image
    /// under the homology representation.
    pub fn new(id: RuleId, lhs: TwistWord, rhs: TwistWord) -> Result<Self, AlgebraError> {
        if eval_psi(&lhs) != eval_psi(&rhs) {
            return Err(AlgebraError::UnsoundRule {
                rule: id.to_string(),
            });
        }
        Ok(RewriteRule { id, lhs, rhs })
    }

    pub fn builtin(id: RuleId) -> Self {
        let (l, r) = id.sides();
        Self::new(id, l.parse().unwrap(), r.parse().unwrap())
            .expect("built-in relations hold under the homology representation")
    }

    pub fn all() -> Vec<RewriteRule> {
        RuleId::ALL.into_iter().map(Self::builtin).collect()
    }

    pub fn id(&self) -> RuleId {
        self.id
    }

    pub fn lhs(&self) -> &TwistWord {
        &self.lhs
    }

    pub fn rhs(&self) -> &TwistWord {
        &self.rhs
    }

    /// `(pattern, replacement)` for the given direction.
    pub fn oriented(&self, direction: Direction) -> (&TwistWord, &TwistWord) {
        match direction {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }

    pub fn matches_at(&self, word: &TwistWord, position: u64, direction: Direction) -> bool {
        let (pattern, _) = self.oriented(direction);
        let end = position + pattern.unit_len();
        end <= word.unit_len() && word.unit_slice(position, end) == *pattern
    }

    /// All unit positions where the oriented pattern occurs.
    pub fn match_positions(&self, word: &TwistWord, direction: Direction) -> Vec<u64> {
        // Every pattern starts with two distinct symbols, so a match begins
        // at the last unit of some syllable.
        let mut out = Vec::new();
        let mut offset = 0u64;
        for s in word.syllables() {
            offset += s.exp.unsigned_abs();
            let candidate = offset - 1;
            if self.matches_at(word, candidate, direction) {
                out.push(candidate);
            }
        }
        out
    }

    pub fn apply(
        &self,
        word: &TwistWord,
        position: u64,
        direction: Direction,
    ) -> Result<TwistWord, AlgebraError> {
        if !self.matches_at(word, position, direction) {
            return Err(AlgebraError::NoMatch {
                rule: self.id.to_string(),
                direction: direction.to_string(),
                position: position as usize,
            });
        }
        let (pattern, replacement) = self.oriented(direction);
        let end = position + pattern.unit_len();
        Ok(word
            .unit_slice(0, position)
            .mul(replacement)
            .mul(&word.unit_slice(end, word.unit_len())))
    }
}

/// Applies one built-in rule at a unit position.
pub fn rewrite_apply(
    word: &TwistWord,
    rule: RuleId,
    position: u64,
    direction: Direction,
) -> Result<TwistWord, AlgebraError> {
    RewriteRule::builtin(rule).apply(word, position, direction)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: RuleId,
    pub position: u64,
    pub direction: Direction,
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.rule, self.position, self.direction)
    }
}

/// Parses a rewrite script: one `rule-id position direction` step per line,
/// `#` starts a comment.
pub fn parse_script(text: &str) -> Result<Vec<RewriteStep>, ParseError> {
    let mut steps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError::Script {
            line: idx + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [rule, position, direction] = fields.as_slice() else {
            return Err(err(format!("expected 3 fields, found {}", fields.len())));
        };
        steps.push(RewriteStep {
            rule: rule.parse().map_err(err)?,
            position: position
                .parse()
                .map_err(|_| err(format!("bad position {position:?}")))?,
            direction: direction.parse().map_err(err)?,
        });
    }
    Ok(steps)
}

/// A failed replay: the index of the offending step and the word it was
/// applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayFailure {
    pub step: usize,
    pub word: TwistWord,
    pub error: AlgebraError,
}

/// Runs the steps in order and returns every intermediate word, starting
/// with `start`.
pub fn replay(start: &TwistWord, steps: &[RewriteStep]) -> Result<Vec<TwistWord>, ReplayFailure> {
    let mut trace = vec![start.clone()];
    for (idx, step) in steps.iter().enumerate() {
        let current = trace.last().expect("trace is non-empty");
        let next =
            rewrite_apply(current, step.rule, step.position, step.direction).map_err(|error| {
                ReplayFailure {
                    step: idx,
                    word: current.clone(),
                    error,
                }
            })?;
        trace.push(next);
    }
    Ok(trace)
}

/// `(b c)^6 → (c b)^6 → (c^2 b)^4`, one braid move per line.
pub const EQ2_SCRIPT: &str = include_str!("../scripts/eq2.rws");

/// `(c^2 b)^4 → (c^3 b)^3` by braid moves.
pub const C2B4_TO_C3B3_SCRIPT: &str = include_str!("../scripts/c2b4_to_c3b3.rws");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Symbol;

    fn w(s: &str) -> TwistWord {
        s.parse().unwrap()
    }

    #[test]
    fn rule_examples() {
        assert_eq!(
            rewrite_apply(&w("a b a"), RuleId::BraidAb, 0, Direction::Forward).unwrap(),
            w("b a b")
        );
        assert_eq!(
            rewrite_apply(&w("a c"), RuleId::CommAc, 0, Direction::Forward).unwrap(),
            w("c a")
        );
        assert_eq!(
            rewrite_apply(&w("b c b^-1"), RuleId::BraidConjBc, 0, Direction::Forward).unwrap(),
            w("c^-1 b c")
        );
    }

    #[test]
    fn rewriting_inside_longer_words() {
        // a^2 c b -> a c a b
        assert_eq!(
            rewrite_apply(&w("a^2 c b"), RuleId::CommAc, 1, Direction::Forward).unwrap(),
            w("a c a b")
        );
        // backward: c^-1 b c -> b c b^-1, then free reduction with the tail
        assert_eq!(
            rewrite_apply(
                &w("c^-1 b c b"),
                RuleId::BraidConjBc,
                0,
                Direction::Backward
            )
            .unwrap(),
            w("b c")
        );
    }

    #[test]
    fn no_match_errors() {
        let err = rewrite_apply(&w("a b a"), RuleId::BraidAb, 1, Direction::Forward);
        assert!(matches!(
            err,
            Err(AlgebraError::NoMatch { position: 1, .. })
        ));
        assert!(rewrite_apply(&w("a c"), RuleId::CommAc, 0, Direction::Backward).is_err());
        assert!(rewrite_apply(&w("a"), RuleId::CommAc, 5, Direction::Forward).is_err());
        // i is opaque
        assert!(rewrite_apply(&w("a i c"), RuleId::CommAc, 0, Direction::Forward).is_err());
        assert!(rewrite_apply(&w("a^-1 c^-1"), RuleId::CommAc, 0, Direction::Forward).is_err());
    }

    #[test]
    fn unsound_rules_rejected() {
        assert_eq!(
            RewriteRule::new(RuleId::CommAc, w("a b"), w("b a")),
            Err(AlgebraError::UnsoundRule {
                rule: "comm-ac".into()
            })
        );
        assert_eq!(RewriteRule::all().len(), 5);
    }

    #[test]
    fn match_positions_found() {
        let rule = RewriteRule::builtin(RuleId::BraidBc);
        let word = w("(b c)^3");
        assert_eq!(rule.match_positions(&word, Direction::Forward), vec![0, 2]);
        assert_eq!(rule.match_positions(&word, Direction::Backward), vec![1, 3]);
        for p in rule.match_positions(&word, Direction::Forward) {
            assert!(rule.apply(&word, p, Direction::Forward).is_ok());
        }
    }

    #[test]
    fn script_parsing() {
        let steps = parse_script("# header\nbraid-bc 3 backward  # tail\n\ncomm-ac 0 f\n").unwrap();
        assert_eq!(
            steps,
            vec![
                RewriteStep {
                    rule: RuleId::BraidBc,
                    position: 3,
                    direction: Direction::Backward
                },
                RewriteStep {
                    rule: RuleId::CommAc,
                    position: 0,
                    direction: Direction::Forward
                },
            ]
        );
        assert!(matches!(
            parse_script("braid-xy 0 forward"),
            Err(ParseError::Script { line: 1, .. })
        ));
        assert!(matches!(
            parse_script("\nbraid-ab 0"),
            Err(ParseError::Script { line: 2, .. })
        ));
        assert!(matches!(
            parse_script("braid-ab -1 forward"),
            Err(ParseError::Script { line: 1, .. })
        ));
    }

    #[test]
    fn shipped_scripts_replay() {
        let steps = parse_script(EQ2_SCRIPT).unwrap();
        let trace = replay(&w("(b c)^6"), &steps).unwrap();
        assert!(trace.contains(&w("(c b)^6")));
        assert_eq!(trace.last().unwrap(), &w("(c^2 b)^4"));

        let steps = parse_script(C2B4_TO_C3B3_SCRIPT).unwrap();
        let trace = replay(&w("(c^2 b)^4"), &steps).unwrap();
        assert_eq!(trace.last().unwrap(), &w("(c^3 b)^3"));
    }

    #[test]
    fn replay_reports_failing_step() {
        let steps = parse_script("braid-bc 0 forward\nbraid-bc 0 forward").unwrap();
        let err = replay(&w("b c b c"), &steps).unwrap_err();
        assert_eq!(err.step, 1);
        assert_eq!(err.word, w("c b c^2"));
    }

    #[test]
    fn symbols_in_rules() {
        for rule in RewriteRule::all() {
            assert!(!rule.lhs().uses(Symbol::I) && !rule.rhs().uses(Symbol::I));
        }
    }
}

//! Words in the Dehn twists `T_a`, `T_b`, `T_c` and the involution `ι`.
//!
//! A [`TwistWord`] is stored as a list of syllables `x^e` and is always
//! freely reduced: adjacent syllables carry different symbols and no
//! exponent is zero. Only free reduction is applied. In particular `i^2`
//! is kept as a syllable; it acts trivially on homology but nothing at the
//! word level says it is trivial.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    A,
    B,
    C,
    /// The hyperelliptic involution.
    I,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::A, Symbol::B, Symbol::C, Symbol::I];

    pub fn as_char(self) -> char {
        match self {
            Symbol::A => 'a',
            Symbol::B => 'b',
            Symbol::C => 'c',
            Symbol::I => 'i',
        }
    }

    pub fn from_char(ch: char) -> Option<Symbol> {
        match ch {
            'a' => Some(Symbol::A),
            'b' => Some(Symbol::B),
            'c' => Some(Symbol::C),
            'i' => Some(Symbol::I),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A power `symbol^exp` with `exp != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub symbol: Symbol,
    pub exp: i64,
}

impl Syllable {
    pub fn new(symbol: Symbol, exp: i64) -> Self {
        Syllable { symbol, exp }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwistWord {
    syllables: Vec<Syllable>,
}

fn add_exp(x: i64, y: i64) -> i64 {
    x.checked_add(y)
        .expect("twist word exponent overflowed i64")
}

impl TwistWord {
    pub fn empty() -> Self {
        TwistWord::default()
    }

    pub fn letter(symbol: Symbol, exp: i64) -> Self {
        TwistWord::from_syllables([Syllable::new(symbol, exp)])
    }

    /// Builds a word from arbitrary syllables, freely reducing the result.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(iter: I) -> Self {
        let mut out: Vec<Syllable> = Vec::new();
        for s in iter {
            push_reduced(&mut out, s);
        }
        TwistWord { syllables: out }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    /// Length of the word after expanding every syllable into unit letters.
    pub fn unit_len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    pub fn mul(&self, other: &TwistWord) -> TwistWord {
        let mut out = self.syllables.clone();
        for &s in &other.syllables {
            push_reduced(&mut out, s);
        }
        TwistWord { syllables: out }
    }

    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable::new(s.symbol, -s.exp))
                .collect(),
        }
    }

    pub fn pow(&self, e: i64) -> TwistWord {
        if let [s] = self.syllables.as_slice() {
            let exp = s
                .exp
                .checked_mul(e)
                .expect("twist word exponent overflowed i64");
            return TwistWord::letter(s.symbol, exp);
        }
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = TwistWord::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `self * other * self^-1`
    pub fn conjugate(&self, other: &TwistWord) -> TwistWord {
        self.mul(other).mul(&self.inverse())
    }

    pub fn uses(&self, symbol: Symbol) -> bool {
        self.syllables.iter().any(|s| s.symbol == symbol)
    }

    /// Expands into unit letters `(symbol, ±1)`.
    pub fn units(&self) -> impl Iterator<Item = (Symbol, i8)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = if s.exp > 0 { 1 } else { -1 };
            std::iter::repeat_n((s.symbol, sign), s.exp.unsigned_abs() as usize)
        })
    }

    /// The sub-word made of unit letters `start..end`.
    pub fn unit_slice(&self, start: u64, end: u64) -> TwistWord {
        let mut out = Vec::new();
        let mut offset = 0u64;
        for s in &self.syllables {
            let len = s.exp.unsigned_abs();
            let lo = start.max(offset);
            let hi = end.min(offset + len);
            if lo < hi {
                let take = (hi - lo) as i64;
                out.push(Syllable::new(s.symbol, take * s.exp.signum()));
            }
            offset += len;
            if offset >= end {
                break;
            }
        }
        TwistWord::from_syllables(out)
    }
}

fn push_reduced(out: &mut Vec<Syllable>, s: Syllable) {
    if s.exp == 0 {
        return;
    }
    match out.last_mut() {
        Some(last) if last.symbol == s.symbol => {
            last.exp = add_exp(last.exp, s.exp);
            if last.exp == 0 {
                out.pop();
            }
        }
        _ => out.push(s),
    }
}

impl fmt::Display for TwistWord {
    /// The empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (idx, s) in self.syllables.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            if s.exp == 1 {
                write!(f, "{}", s.symbol)?;
            } else {
                write!(f, "{}^{}", s.symbol, s.exp)?;
            }
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

/// Parses the word grammar
///
/// ```text
/// word  := item*
/// item  := atom ('^' integer)?
/// atom  := 'a' | 'b' | 'c' | 'i' | '1' | '(' word ')'
/// ```
///
/// Items are separated by optional whitespace. Parenthesised groups may be
/// raised to any non-zero power, so `(b c)^6` and `(a b)^-1` are words.
/// The literal `1` denotes the empty word.
pub fn parse_word(text: &str) -> Result<TwistWord, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
    };
    let word = parser.word()?;
    parser.skip_ws();
    match parser.peek() {
        None => Ok(word),
        Some(')') => Err(ParseError::UnbalancedParen {
            position: parser.pos,
        }),
        Some(found) => Err(ParseError::UnexpectedChar {
            position: parser.pos,
            found,
        }),
    }
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<TwistWord, ParseError> {
        let mut acc = TwistWord::empty();
        loop {
            self.skip_ws();
            let start = self.pos;
            let atom = match self.peek() {
                None | Some(')') => return Ok(acc),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.word()?;
                    self.skip_ws();
                    if self.peek() != Some(')') {
                        return Err(ParseError::UnbalancedParen { position: start });
                    }
                    self.pos += 1;
                    inner
                }
                Some('1') => {
                    self.pos += 1;
                    TwistWord::empty()
                }
                Some(ch) => match Symbol::from_char(ch) {
                    Some(sym) => {
                        self.pos += 1;
                        TwistWord::letter(sym, 1)
                    }
                    None => {
                        return Err(ParseError::UnexpectedChar {
                            position: self.pos,
                            found: ch,
                        })
                    }
                },
            };
            let exp = self.exponent()?;
            acc = acc.mul(&atom.pow(exp));
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        let mut digits = String::new();
        if let Some(sign @ ('-' | '+')) = self.peek() {
            digits.push(sign);
            self.pos += 1;
        }
        while let Some(d) = self.peek().filter(char::is_ascii_digit) {
            digits.push(d);
            self.pos += 1;
        }
        if !digits.chars().any(|c| c.is_ascii_digit()) {
            return Err(match self.peek() {
                None => ParseError::UnexpectedEnd { position: self.pos },
                Some(found) => ParseError::UnexpectedChar {
                    position: self.pos,
                    found,
                },
            });
        }
        let exp: i64 = digits
            .parse()
            .map_err(|_| ParseError::ExponentOverflow { position: start })?;
        if exp == 0 {
            return Err(ParseError::ZeroExponent { position: start });
        }
        Ok(exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TwistWord {
        s.parse().unwrap()
    }

    fn syl(sym: Symbol, exp: i64) -> Syllable {
        Syllable::new(sym, exp)
    }

    #[test]
    fn parse_examples() {
        use Symbol::*;
        assert_eq!(
            w("a^2 b^-1 c").syllables(),
            &[syl(A, 2), syl(B, -1), syl(C, 1)]
        );
        assert!(w("a a^-1").is_empty());
        assert_eq!(
            w("c^-2 b a^3 i").syllables(),
            &[syl(C, -2), syl(B, 1), syl(A, 3), syl(I, 1)]
        );
    }

    #[test]
    fn parse_groups() {
        assert_eq!(w("(b c)^2"), w("b c b c"));
        assert_eq!(w("(a b)^-1"), w("b^-1 a^-1"));
        assert_eq!(w("((a)^2 b)^2"), w("a^2 b a^2 b"));
        assert_eq!(w("1"), TwistWord::empty());
        assert_eq!(w("   "), TwistWord::empty());
    }

    #[test]
    fn i_squared_survives() {
        assert_eq!(w("i i").syllables(), &[syl(Symbol::I, 2)]);
        assert_eq!(w("i i^-1"), TwistWord::empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "q".parse::<TwistWord>(),
            Err(ParseError::UnexpectedChar {
                position: 0,
                found: 'q'
            })
        );
        assert_eq!(
            "a b^0".parse::<TwistWord>(),
            Err(ParseError::ZeroExponent { position: 4 })
        );
        assert!(matches!(
            "(a b".parse::<TwistWord>(),
            Err(ParseError::UnbalancedParen { position: 0 })
        ));
        assert!(matches!(
            "a b)".parse::<TwistWord>(),
            Err(ParseError::UnbalancedParen { position: 3 })
        ));
        assert!(matches!(
            "a^".parse::<TwistWord>(),
            Err(ParseError::UnexpectedEnd { position: 2 })
        ));
        assert!(matches!(
            "a^99999999999999999999".parse::<TwistWord>(),
            Err(ParseError::ExponentOverflow { .. })
        ));
    }

    #[test]
    fn multiply_examples() {
        use Symbol::*;
        let a = TwistWord::letter(A, 1);
        assert!(a.mul(&TwistWord::letter(A, -1)).is_empty());
        assert_eq!(
            TwistWord::letter(B, 2)
                .mul(&TwistWord::letter(B, 3))
                .syllables(),
            &[syl(B, 5)]
        );
        assert_eq!(
            a.mul(&TwistWord::letter(B, 1)).syllables(),
            &[syl(A, 1), syl(B, 1)]
        );
    }

    #[test]
    fn inverse_examples() {
        use Symbol::*;
        assert_eq!(
            w("a^2 b^-1").inverse().syllables(),
            &[syl(B, 1), syl(A, -2)]
        );
        assert!(TwistWord::empty().inverse().is_empty());
        assert_eq!(w("i").inverse().syllables(), &[syl(I, -1)]);
    }

    #[test]
    fn display_round_trips() {
        for s in ["a^2 b^-1 c", "1", "c^-2 b a^3 i", "i^2 c"] {
            assert_eq!(w(s).to_string(), s);
            assert_eq!(w(&w(s).to_string()), w(s));
        }
    }

    #[test]
    fn unit_slices() {
        let word = w("a^3 b^-2 c");
        assert_eq!(word.unit_len(), 6);
        assert_eq!(word.unit_slice(2, 5), w("a b^-2"));
        assert_eq!(word.unit_slice(2, 6), w("a b^-2 c"));
        assert_eq!(word.unit_slice(0, 0), TwistWord::empty());
        assert_eq!(word.unit_slice(3, 6), w("b^-2 c"));
        let units: Vec<_> = w("a^2 b^-1").units().collect();
        assert_eq!(units, vec![(Symbol::A, 1), (Symbol::A, 1), (Symbol::B, -1)]);
    }
}

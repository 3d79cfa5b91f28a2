//! Words in the multiplication operators and their linear combinations.
//!
//! A word is a sequence over `{L, U}` (with extra letters `T3..T6` during
//! bootstrap, standing for multiplication by the one-variable basis elements
//! of degrees 3 through 6). The leftmost letter is the outermost
//! multiplication: `U^2L` applied to `y` is `x^2(x^2(xy))`. The x-degree of
//! a word weights each letter by the degree of the element it multiplies by.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::Rat;

/// One operator letter. The declaration order is the ranking used by the
/// word order: `L < U < T3 < T4 < T5 < T6`, so eliminations prefer to
/// rewrite extended letters first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    U,
    T3,
    T4,
    T5,
    T6,
}

impl Letter {
    pub fn x_degree(self) -> u32 {
        match self {
            Letter::L => 1,
            Letter::U => 2,
            Letter::T3 => 3,
            Letter::T4 => 4,
            Letter::T5 => 5,
            Letter::T6 => 6,
        }
    }

    /// The letter multiplying by the one-variable basis element of the given
    /// degree.
    pub fn for_basis_degree(d: u32) -> Letter {
        match d {
            1 => Letter::L,
            2 => Letter::U,
            3 => Letter::T3,
            4 => Letter::T4,
            5 => Letter::T5,
            6 => Letter::T6,
            _ => panic!("no operator letter for degree {d}"),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Letter::L => "L",
            Letter::U => "U",
            Letter::T3 => "T3",
            Letter::T4 => "T4",
            Letter::T5 => "T5",
            Letter::T6 => "T6",
        }
    }
}

/// A word over the operator alphabet. The empty word is the identity
/// operator (degree 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OpWord(Vec<Letter>);

impl OpWord {
    pub fn empty() -> Self {
        OpWord(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        OpWord(letters.into_iter().collect())
    }

    pub fn single(l: Letter) -> Self {
        OpWord(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn x_degree(&self) -> u32 {
        self.0.iter().map(|l| l.x_degree()).sum()
    }

    pub fn is_pure_lu(&self) -> bool {
        self.0.iter().all(|&l| matches!(l, Letter::L | Letter::U))
    }

    /// Concatenation: `self` acts after (to the left of) `rhs`.
    pub fn concat(&self, rhs: &OpWord) -> OpWord {
        OpWord(self.0.iter().chain(rhs.0.iter()).copied().collect())
    }

    /// Presentation order used for rendered output: degree first, then
    /// words with fewer letters (more `U`s), then letter-wise with `U > L`.
    /// This is the column convention the derivations are usually written
    /// in; the engine's own pivot order is [`Ord`] below.
    pub fn presentation_cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| other.0.len().cmp(&self.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }

    /// All words over `{L, U}` of the given x-degree, in the engine's
    /// descending order. Counts per degree follow the Fibonacci recurrence.
    pub fn enumerate_lu(degree: u32) -> Vec<OpWord> {
        fn go(remaining: u32, prefix: &mut Vec<Letter>, out: &mut Vec<OpWord>) {
            if remaining == 0 {
                out.push(OpWord(prefix.clone()));
                return;
            }
            // U first keeps the output already sorted descending.
            if remaining >= 2 {
                prefix.push(Letter::U);
                go(remaining - 2, prefix, out);
                prefix.pop();
            }
            prefix.push(Letter::L);
            go(remaining - 1, prefix, out);
            prefix.pop();
        }
        let mut out = Vec::new();
        go(degree, &mut Vec::new(), &mut out);
        out
    }
}

impl PartialOrd for OpWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OpWord {
    /// X-degree first, then left-to-right lexicographically on letters. No
    /// word of a given degree is a proper prefix of another of the same
    /// degree, so the lexicographic step is total.
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for OpWord {
    /// Runs of a letter are compressed with carets: `ULLLU` prints `UL^3U`.
    /// The empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let letter = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == letter {
                run += 1;
            }
            write!(f, "{}", letter.symbol())?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("word syntax error at byte {position}: {message}")]
pub struct WordParseError {
    pub position: usize,
    pub message: String,
}

/// Parses a word over `{L, U}` with optional caret powers: `UL^3U`. The
/// literal `1` is the identity (empty) word.
pub fn parse_word(input: &str) -> Result<OpWord, WordParseError> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(WordParseError {
            position: 0,
            message: "empty word".into(),
        });
    }
    let (word, rest) = parse_word_prefix(trimmed, 0)?;
    if !rest.is_empty() {
        return Err(WordParseError {
            position: trimmed.len() - rest.len(),
            message: format!("unexpected '{}'", rest.chars().next().unwrap()),
        });
    }
    Ok(word)
}

/// Parses the longest word prefix; returns the word and the unparsed rest.
fn parse_word_prefix(input: &str, base: usize) -> Result<(OpWord, &str), WordParseError> {
    let bytes = input.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let letter = match bytes[i] {
            b'L' => Letter::L,
            b'U' => Letter::U,
            b'1' if letters.is_empty() => {
                i += 1;
                break;
            }
            _ => break,
        };
        i += 1;
        let mut count = 1usize;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(WordParseError {
                    position: base + i,
                    message: "expected an exponent after '^'".into(),
                });
            }
            count = input[start..i].parse().map_err(|_| WordParseError {
                position: base + start,
                message: "exponent out of range".into(),
            })?;
            if count == 0 {
                return Err(WordParseError {
                    position: base + start,
                    message: "exponents start at 1".into(),
                });
            }
        }
        letters.extend(std::iter::repeat_n(letter, count));
    }
    Ok((OpWord(letters), &input[i..]))
}

/// A finite rational-linear combination of operator words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OpPoly {
    terms: BTreeMap<OpWord, Rat>,
}

impl OpPoly {
    pub fn zero() -> Self {
        OpPoly::default()
    }

    pub fn word(w: OpWord) -> Self {
        Self::term(w, Rat::one())
    }

    pub fn term(w: OpWord, c: Rat) -> Self {
        let mut p = OpPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OpWord, &Rat)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &OpWord> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &OpWord) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Largest word present, under the engine's word order.
    pub fn leading_word(&self) -> Option<&OpWord> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, w: OpWord, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &OpPoly) -> OpPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &OpPoly) -> OpPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> OpPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> OpPoly {
        if k.is_zero() {
            return OpPoly::zero();
        }
        let mut out = OpPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// `left * self * right`, word by word.
    pub fn sandwich(&self, left: &OpWord, right: &OpWord) -> OpPoly {
        let mut out = OpPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(left.concat(w).concat(right), c.clone());
        }
        out
    }

    /// All words share one x-degree, or the combination is zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.x_degree();
        it.all(|w| w.x_degree() == d).then_some(d)
    }

    pub fn is_pure_lu(&self) -> bool {
        self.terms.keys().all(OpWord::is_pure_lu)
    }
}

impl fmt::Display for OpPoly {
    /// Terms in descending presentation order, e.g.
    /// `-LU^2 + 2UL^3 - 2L^3U - 8L^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&OpWord, &Rat)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.presentation_cmp(a));
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !mag.is_one() || w.is_empty() {
                write!(f, "{}", mag)?;
            }
            if !w.is_empty() {
                write!(f, "{}", w)?;
            }
        }
        Ok(())
    }
}

/// Parses a linear combination of words: `[-] [coeff] word ((+|-) [coeff] word)*`,
/// e.g. `27L^8U + 170L^10` or `-LU^2 + 1/2L^2UL^3`.
pub fn parse_op_poly(input: &str) -> Result<OpPoly, WordParseError> {
    let mut out = OpPoly::zero();
    let mut rest = input.trim_start();
    let mut offset = input.len() - rest.len();
    let mut first = true;
    loop {
        let mut sign = Rat::one();
        if !first || rest.starts_with('-') || rest.starts_with('+') {
            if rest.starts_with('-') {
                sign = -sign;
            } else if !rest.starts_with('+') {
                return Err(WordParseError {
                    position: offset,
                    message: "expected '+' or '-'".into(),
                });
            }
            rest = &rest[1..];
            offset += 1;
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            rest = trimmed;
        }
        // Optional rational coefficient: digits, optionally / digits.
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        let mut coeff = Rat::one();
        if digits > 0 {
            let mut end = digits;
            if let Some(after) = rest[digits..].strip_prefix('/') {
                let denom_digits = after.chars().take_while(|c| c.is_ascii_digit()).count();
                if denom_digits == 0 {
                    return Err(WordParseError {
                        position: offset + digits + 1,
                        message: "expected digits after '/'".into(),
                    });
                }
                end = digits + 1 + denom_digits;
            }
            coeff = rest[..end].parse().map_err(|_| WordParseError {
                position: offset,
                message: "bad coefficient".into(),
            })?;
            rest = &rest[end..];
            offset += end;
            let trimmed = rest.trim_start();
            offset += rest.len() - trimmed.len();
            rest = trimmed;
        }
        let (word, remaining) = parse_word_prefix(rest, offset)?;
        if word.is_empty() && digits == 0 {
            return Err(WordParseError {
                position: offset,
                message: "expected a word".into(),
            });
        }
        offset += rest.len() - remaining.len();
        rest = remaining;
        out.add_term(word, coeff * sign);
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return Ok(out);
        }
        first = false;
    }
}

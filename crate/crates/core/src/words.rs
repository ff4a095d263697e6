//! Alphabets, words, morphisms and D0L-systems.
//!
//! Letters are indices into an [`Alphabet`]; the alphabet owns the printable
//! symbols. A [`Morphism`] is a total table `letter -> image word`, and a
//! [`D0LSystem`] pairs one with an axiom.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// Largest word `iterate` will materialize by default.
pub const DEFAULT_WORD_CAP: u64 = 10_000_000;

/// A letter, identified by its position in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Ordered set of distinct symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
    lookup: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an alphabet from symbols in declaration order. Duplicates are rejected.
    pub fn from_symbols<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Self::new();
        for symbol in symbols {
            let symbol = symbol.into();
            if alphabet.lookup.contains_key(&symbol) {
                return Err(Error::DuplicateRule(symbol));
            }
            alphabet.push(symbol)?;
        }
        Ok(alphabet)
    }

    fn push(&mut self, symbol: String) -> Result<Letter> {
        if !is_valid_symbol(&symbol) {
            return Err(Error::InvalidArgument(format!("invalid letter symbol `{symbol}`")));
        }
        let letter = Letter(self.symbols.len() as u32);
        self.lookup.insert(symbol.clone(), letter);
        self.symbols.push(symbol);
        Ok(letter)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letter(&self, symbol: &str) -> Option<Letter> {
        self.lookup.get(symbol).copied()
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter.index()]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.symbols.len() as u32).map(Letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.symbols.len()
    }

    /// Parses whitespace-separated symbols into a word over this alphabet.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| {
                self.letter(tok)
                    .ok_or_else(|| Error::UndeclaredLetter(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Human-readable spelling: letters are juxtaposed when every symbol is a
    /// single character, space-separated otherwise.
    pub fn spell(&self, word: &Word) -> String {
        let compact = self.symbols.iter().all(|s| s.chars().count() == 1);
        let sep = if compact { "" } else { " " };
        word.letters()
            .iter()
            .map(|&l| self.symbol(l))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

fn is_valid_symbol(symbol: &str) -> bool {
    !symbol.is_empty()
        && symbol != "->"
        && !symbol.contains('#')
        && !symbol.contains(':')
        && !symbol.chars().any(char::is_whitespace)
}

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

/// Per-letter occurrence counts of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParikhVector {
    pub counts: Vec<BigUint>,
}

impl ParikhVector {
    pub fn zeros(dim: usize) -> Self {
        Self { counts: vec![BigUint::zero(); dim] }
    }

    pub fn count(&self, letter: Letter) -> &BigUint {
        &self.counts[letter.index()]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }
}

/// Occurrence counts of every alphabet letter in `word`.
pub fn parikh(word: &Word, alphabet: &Alphabet) -> ParikhVector {
    let mut counts = vec![0u64; alphabet.len()];
    for &l in word.letters() {
        counts[l.index()] += 1;
    }
    ParikhVector { counts: counts.into_iter().map(BigUint::from).collect() }
}

/// Total map from letters to image words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of letter `i`. Every image letter must be
    /// below `images.len()`.
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let dim = images.len();
        for image in &images {
            if let Some(bad) = image.letters().iter().find(|l| l.index() >= dim) {
                return Err(Error::LetterOutOfRange(bad.index()));
            }
        }
        Ok(Self { images })
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter.index()]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of a word: the concatenation of the images of its letters.
    pub fn apply(&self, word: &Word) -> Result<Word> {
        let mut len = 0usize;
        for &l in word.letters() {
            if l.index() >= self.dim() {
                return Err(Error::LetterOutOfRange(l.index()));
            }
            len += self.images[l.index()].len();
        }
        let mut out = Vec::with_capacity(len);
        for &l in word.letters() {
            out.extend_from_slice(&self.images[l.index()].0);
        }
        Ok(Word(out))
    }
}

/// Free function form of [`Morphism::apply`].
pub fn apply(m: &Morphism, w: &Word) -> Result<Word> {
    m.apply(w)
}

/// A D0L-system `(alphabet, morphism, axiom)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D0LSystem {
    alphabet: Alphabet,
    morphism: Morphism,
    axiom: Word,
}

impl D0LSystem {
    pub fn new(alphabet: Alphabet, morphism: Morphism, axiom: Word) -> Result<Self> {
        if morphism.dim() != alphabet.len() {
            return Err(Error::InvalidArgument(format!(
                "morphism has {} images for an alphabet of {} letters",
                morphism.dim(),
                alphabet.len()
            )));
        }
        if let Some(bad) = axiom.letters().iter().find(|l| !alphabet.contains(**l)) {
            return Err(Error::LetterOutOfRange(bad.index()));
        }
        Ok(Self { alphabet, morphism, axiom })
    }

    /// Convenience constructor from `(symbol, image)` pairs, images and axiom
    /// written as whitespace-separated symbols.
    pub fn from_rules(rules: &[(&str, &str)], axiom: &str) -> Result<Self> {
        let alphabet = Alphabet::from_symbols(rules.iter().map(|(s, _)| *s))?;
        let images = rules
            .iter()
            .map(|(_, img)| alphabet.word(img))
            .collect::<Result<Vec<_>>>()?;
        let axiom = alphabet.word(axiom)?;
        Self::new(alphabet, Morphism::new(images)?, axiom)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn axiom(&self) -> &Word {
        &self.axiom
    }

    /// Same alphabet and morphism, different axiom.
    pub fn with_axiom(&self, axiom: Word) -> Result<Self> {
        Self::new(self.alphabet.clone(), self.morphism.clone(), axiom)
    }

    /// `σⁿ(axiom)`, refusing to build words longer than [`DEFAULT_WORD_CAP`].
    pub fn iterate(&self, n: u64) -> Result<Word> {
        self.iterate_capped(n, DEFAULT_WORD_CAP)
    }

    /// `σⁿ(axiom)`; fails with [`Error::WordTooLarge`] when the exact length,
    /// computed without materializing, exceeds `cap`.
    pub fn iterate_capped(&self, n: u64, cap: u64) -> Result<Word> {
        let predicted = linalg::growth_value(self, n);
        if predicted > BigUint::from(cap) {
            return Err(Error::WordTooLarge { predicted: predicted.to_string(), cap });
        }
        let mut word = self.axiom.clone();
        for _ in 0..n {
            word = self.morphism.apply(&word)?;
        }
        debug_assert_eq!(Some(word.len()), predicted.to_usize());
        Ok(word)
    }

    /// Writes the system in the `.dol` rule format, rules in alphabet order.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for letter in self.alphabet.letters() {
            out.push_str(self.alphabet.symbol(letter));
            out.push_str(" ->");
            for &l in self.morphism.image(letter).letters() {
                out.push(' ');
                out.push_str(self.alphabet.symbol(l));
            }
            out.push('\n');
        }
        out.push_str("axiom:");
        for &l in self.axiom.letters() {
            out.push(' ');
            out.push_str(self.alphabet.symbol(l));
        }
        out.push('\n');
        out
    }
}

impl fmt::Display for D0LSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses the line-oriented `.dol` format:
///
/// ```text
/// # Fibonacci
/// a -> a b
/// b -> a
/// axiom: a
/// ```
///
/// Every letter used on a right-hand side or in the axiom needs its own rule.
pub fn parse_system(text: &str) -> Result<D0LSystem> {
    let mut rules: Vec<(String, Vec<(usize, String)>)> = Vec::new();
    let mut axiom: Option<Vec<(usize, String)>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens = |s: &str| {
            s.split_whitespace()
                .map(|t| (line_no, t.to_string()))
                .collect::<Vec<_>>()
        };
        if let Some(rest) = line.strip_prefix("axiom:") {
            if axiom.is_some() {
                return Err(Error::Parse { line: line_no, message: "second axiom line".into() });
            }
            let toks = tokens(rest);
            if toks.is_empty() {
                return Err(Error::Parse { line: line_no, message: "axiom must contain at least one letter".into() });
            }
            axiom = Some(toks);
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `<letter> -> <letters>` or `axiom: <letters>`, found `{line}`"),
            });
        };
        let mut lhs_toks = lhs.split_whitespace();
        let (Some(letter), None) = (lhs_toks.next(), lhs_toks.next()) else {
            return Err(Error::Parse { line: line_no, message: "left-hand side must be exactly one letter".into() });
        };
        if !is_valid_symbol(letter) {
            return Err(Error::Parse { line: line_no, message: format!("invalid letter `{letter}`") });
        }
        if rules.iter().any(|(l, _)| l == letter) {
            return Err(Error::DuplicateRule(letter.to_string()));
        }
        rules.push((letter.to_string(), tokens(rhs)));
    }

    let axiom = axiom.ok_or(Error::MissingAxiom)?;
    if rules.is_empty() {
        return Err(Error::EmptyAlphabet);
    }

    let alphabet = Alphabet::from_symbols(rules.iter().map(|(l, _)| l.clone()))?;
    let resolve = |toks: &[(usize, String)]| -> Result<Word> {
        toks.iter()
            .map(|(_, t)| alphabet.letter(t).ok_or_else(|| Error::UndeclaredLetter(t.clone())))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    };
    let images = rules
        .iter()
        .map(|(_, rhs)| resolve(rhs))
        .collect::<Result<Vec<_>>>()?;
    let axiom = resolve(&axiom)?;
    D0LSystem::new(alphabet, Morphism::new(images)?, axiom)
}

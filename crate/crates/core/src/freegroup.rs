//! Words and endomorphisms of the free group `F_n = <x1, ..., xn>`.
//!
//! Word grammar, whitespace separated or juxtaposed:
//!
//! ```text
//! word     := "1" | syllable*
//! syllable := atom ( "^" [+-]? digits )?
//! atom     := "x" digits | letter digits*
//! ```
//!
//! An uppercase first letter denotes the inverse generator. With the
//! default [`Alphabet::Indexed`], `x<i>` is generator `i` and a single
//! letter `a..z` is generator `1..26`. Endomorphisms are written as
//! `a -> b; b -> a b^3`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::zlinalg::{is_unimodular, IntMatrix};
use crate::{Error, Result};

/// A freely reduced word; generator indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct FreeWord {
    rank: usize,
    syllables: Vec<(usize, i64)>,
}

#[derive(Deserialize)]
struct RawWord {
    rank: usize,
    syllables: Vec<(usize, i64)>,
}

impl TryFrom<RawWord> for FreeWord {
    type Error = Error;
    fn try_from(r: RawWord) -> Result<Self> {
        FreeWord::from_syllables(r.rank, &r.syllables)
    }
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            syllables: Vec::new(),
        }
    }

    /// `x_i`, `1 <= i <= rank`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::from_syllables(rank, &[(i, 1)])
    }

    /// Reduce an arbitrary syllable list. Zero exponents are dropped.
    pub fn from_syllables(rank: usize, syllables: &[(usize, i64)]) -> Result<Self> {
        let mut w = Self::identity(rank);
        for &(g, e) in syllables {
            if g == 0 || g > rank {
                return Err(Error::UnknownGenerator(format!("x{g}")));
            }
            w.push(g, e);
        }
        Ok(w)
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                *f = f.checked_add(e).expect("exponent overflow");
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, `Σ |e|`.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    /// Image in `Z^rank`.
    pub fn exponent_sums(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); self.rank];
        for &(g, e) in &self.syllables {
            v[g - 1] += e;
        }
        v
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        Ok(w)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            for &(g, f) in &base.syllables {
                w.push(g, f);
            }
        }
        w
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        WordDisplay { word: self, alphabet }
    }
}

/// `u · v`, freely reduced.
pub fn word_multiply(u: &FreeWord, v: &FreeWord) -> Result<FreeWord> {
    u.multiply(v)
}

pub fn word_invert(u: &FreeWord) -> FreeWord {
    u.inverse()
}

struct WordDisplay<'a> {
    word: &'a FreeWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.word.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.alphabet.name(g))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Prints with `x<i>` names, which always parse back under any alphabet.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(&Alphabet::Indexed).fmt(f)
    }
}

/// How generator names map to indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alphabet {
    /// `x<i>` is generator `i`; `a..z` are generators `1..26`.
    #[default]
    Indexed,
    /// Generator `i` is `names[i-1]`; `x<i>` is accepted as well.
    Named(Vec<String>),
}

impl Alphabet {
    pub fn named<S: AsRef<str>>(names: &[S]) -> Self {
        Alphabet::Named(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn name(&self, i: usize) -> String {
        match self {
            Alphabet::Named(names) if i >= 1 && i <= names.len() => names[i - 1].clone(),
            _ => format!("x{i}"),
        }
    }

    /// `(index, inverted)` for a name, without a rank check.
    fn resolve(&self, name: &str) -> Option<(usize, bool)> {
        if let Alphabet::Named(names) = self {
            if let Some(i) = names.iter().position(|n| n == name) {
                return Some((i + 1, false));
            }
            let mut lower = name.to_string();
            lower[..1].make_ascii_lowercase();
            if name.starts_with(|c: char| c.is_ascii_uppercase()) {
                if let Some(i) = names.iter().position(|n| *n == lower) {
                    return Some((i + 1, true));
                }
            }
        }
        let inverted = name.starts_with(|c: char| c.is_ascii_uppercase());
        let rest = &name[1..];
        if name.len() > 1 && name[..1].eq_ignore_ascii_case("x") && rest.bytes().all(|b| b.is_ascii_digit()) {
            return rest.parse().ok().filter(|&i| i > 0).map(|i| (i, inverted));
        }
        if matches!(self, Alphabet::Indexed) && name.len() == 1 {
            let c = name.as_bytes()[0].to_ascii_lowercase();
            return Some(((c - b'a') as usize + 1, inverted));
        }
        None
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str, base: usize) -> Self {
        Cursor { s, pos: 0, base }
    }

    fn peek(&self) -> Option<u8> {
        self.s.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn at(&self) -> usize {
        self.base + self.pos
    }

    fn syntax(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.at(),
            message: message.to_string(),
        }
    }

    fn name(&mut self) -> &'a str {
        let start = self.pos;
        self.pos += 1;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.s[start..self.pos]
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if digits == self.pos {
            return Err(self.syntax("expected an integer exponent"));
        }
        let e: i64 = self.s[start..self.pos].parse().map_err(|_| Error::Syntax {
            position: self.base + start,
            message: "exponent out of range".into(),
        })?;
        if e == 0 {
            return Err(Error::ExponentZero {
                position: self.base + start,
            });
        }
        Ok(e)
    }
}

fn parse_word_at(text: &str, base: usize, rank: usize, alphabet: &Alphabet) -> Result<FreeWord> {
    let mut cur = Cursor::new(text, base);
    let mut w = FreeWord::identity(rank);
    loop {
        cur.skip_ws();
        let Some(b) = cur.peek() else {
            return Ok(w);
        };
        if b == b'1' && !cur.s.as_bytes().get(cur.pos + 1).is_some_and(u8::is_ascii_digit) {
            cur.pos += 1;
            continue;
        }
        if !b.is_ascii_alphabetic() {
            return Err(cur.syntax("expected a generator"));
        }
        let name = cur.name();
        let (g, inverted) = alphabet
            .resolve(name)
            .filter(|&(g, _)| g <= rank)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let e = cur.exponent()?;
        w.push(g, if inverted { -e } else { e });
    }
}

/// Parse with the default alphabet.
pub fn parse_word(text: &str, rank: usize) -> Result<FreeWord> {
    parse_word_at(text, 0, rank, &Alphabet::Indexed)
}

pub fn parse_word_in(text: &str, rank: usize, alphabet: &Alphabet) -> Result<FreeWord> {
    parse_word_at(text, 0, rank, alphabet)
}

/// An endomorphism, `images[j]` being the image of generator `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if let Some(w) = images.iter().find(|w| w.rank != rank) {
            return Err(Error::RankMismatch {
                left: rank,
                right: w.rank,
            });
        }
        Ok(FreeEndo { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        FreeEndo {
            rank,
            images: (1..=rank)
                .map(|i| FreeWord::generator(rank, i).unwrap())
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// Image of a word.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: w.rank,
            });
        }
        let mut out = FreeWord::identity(self.rank);
        for &(g, e) in &w.syllables {
            let img = self.images[g - 1].pow(e);
            for &(h, f) in &img.syllables {
                out.push(h, f);
            }
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        EndoDisplay { endo: self, alphabet }
    }
}

struct EndoDisplay<'a> {
    endo: &'a FreeEndo,
    alphabet: &'a Alphabet,
}

impl fmt::Display for EndoDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, img) in self.endo.images.iter().enumerate() {
            if j > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{} -> {}", self.alphabet.name(j + 1), img.display(self.alphabet))?;
        }
        Ok(())
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display(&Alphabet::Indexed).fmt(f)
    }
}

/// `(f ∘ g)(x) = f(g(x))`.
pub fn endo_compose(f: &FreeEndo, g: &FreeEndo) -> Result<FreeEndo> {
    if f.rank != g.rank {
        return Err(Error::RankMismatch {
            left: f.rank,
            right: g.rank,
        });
    }
    let images = g.images.iter().map(|w| f.apply(w)).collect::<Result<_>>()?;
    Ok(FreeEndo {
        rank: f.rank,
        images,
    })
}

/// `f^m` by repeated squaring; `m = 0` gives the identity.
pub fn endo_power(f: &FreeEndo, m: u32) -> FreeEndo {
    let mut acc = FreeEndo::identity(f.rank);
    let mut base = f.clone();
    let mut m = m;
    while m > 0 {
        if m & 1 == 1 {
            acc = endo_compose(&acc, &base).expect("equal ranks");
        }
        m >>= 1;
        if m > 0 {
            base = endo_compose(&base, &base).expect("equal ranks");
        }
    }
    acc
}

/// Matrix on `Z^n` whose column `j` is the exponent-sum vector of `f(x_j)`.
pub fn abelianization_matrix(f: &FreeEndo) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = f.images.iter().map(FreeWord::exponent_sums).collect();
    IntMatrix::from_columns(f.rank, &cols)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AutomorphismCheck {
    /// Composition with the supplied inverse is the identity both ways.
    ProvenAuto,
    /// The abelianization is not unimodular.
    ProvenNotAuto,
    /// Only the necessary condition `|det| = 1` is known to hold.
    AbelianizedUnimodularOnly,
}

/// Verify what can be verified about `f` being an automorphism.
///
/// A supplied inverse that fails to compose to the identity proves nothing
/// about `f` itself, so the result then falls back to the abelianized test.
pub fn check_automorphism(f: &FreeEndo, claimed_inverse: Option<&FreeEndo>) -> Result<AutomorphismCheck> {
    if let Some(g) = claimed_inverse {
        if endo_compose(f, g)?.is_identity() && endo_compose(g, f)?.is_identity() {
            return Ok(AutomorphismCheck::ProvenAuto);
        }
    }
    if is_unimodular(&abelianization_matrix(f))? {
        Ok(AutomorphismCheck::AbelianizedUnimodularOnly)
    } else {
        Ok(AutomorphismCheck::ProvenNotAuto)
    }
}

/// Split `a -> w; b -> w'` into `(lhs, lhs_pos, rhs, rhs_pos)` clauses.
fn clauses(text: &str) -> Result<Vec<(&str, usize, &str, usize)>> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split(['\n', ';', ',']) {
        let base = start;
        start += piece.len() + 1;
        if piece.trim().is_empty() {
            continue;
        }
        let (arrow, alen) = match (piece.find("->"), piece.find('→')) {
            (Some(i), _) => (i, 2),
            (None, Some(i)) => (i, '→'.len_utf8()),
            _ => {
                return Err(Error::Syntax {
                    position: base,
                    message: "expected `->`".into(),
                })
            }
        };
        let lhs = &piece[..arrow];
        let lead = lhs.len() - lhs.trim_start().len();
        out.push((lhs.trim(), base + lead, &piece[arrow + alen..], base + arrow + alen));
    }
    Ok(out)
}

fn is_indexed_name(s: &str) -> bool {
    s.len() > 1 && s.starts_with('x') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

/// Parse an endomorphism. The generators are the left-hand sides: `x<i>`
/// names are used as indices, other names are sorted alphabetically.
pub fn parse_endo(text: &str) -> Result<(FreeEndo, Alphabet)> {
    let cl = clauses(text)?;
    for &(lhs, pos, _, _) in &cl {
        let ok = lhs.len() >= 1
            && lhs.as_bytes()[0].is_ascii_lowercase()
            && lhs[1..].bytes().all(|b| b.is_ascii_digit());
        if !ok {
            return Err(Error::Syntax {
                position: pos,
                message: format!("`{lhs}` is not a generator name"),
            });
        }
    }
    let alphabet = if !cl.is_empty() && cl.iter().all(|c| is_indexed_name(c.0)) {
        Alphabet::Indexed
    } else {
        let mut names: Vec<String> = cl.iter().map(|c| c.0.to_string()).collect();
        names.sort();
        if let Some(d) = names.windows(2).find(|p| p[0] == p[1]) {
            let pos = cl.iter().rev().find(|c| c.0 == d[0]).map_or(0, |c| c.1);
            return Err(Error::Syntax {
                position: pos,
                message: format!("generator `{}` defined twice", d[0]),
            });
        }
        Alphabet::Named(names)
    };
    let endo = parse_endo_in(text, cl.len(), &alphabet)?;
    Ok((endo, alphabet))
}

/// Parse an endomorphism of `F_rank` whose names resolve through `alphabet`.
pub fn parse_endo_in(text: &str, rank: usize, alphabet: &Alphabet) -> Result<FreeEndo> {
    let mut images: Vec<Option<FreeWord>> = vec![None; rank];
    for (lhs, lpos, rhs, rpos) in clauses(text)? {
        let (g, inverted) = alphabet
            .resolve(lhs)
            .filter(|&(g, _)| g <= rank)
            .ok_or_else(|| Error::UnknownGenerator(lhs.to_string()))?;
        if inverted || images[g - 1].is_some() {
            return Err(Error::Syntax {
                position: lpos,
                message: format!("generator `{lhs}` defined twice or inverted"),
            });
        }
        images[g - 1] = Some(parse_word_at(rhs, rpos, rank, alphabet)?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(j, w)| {
            w.ok_or_else(|| Error::Syntax {
                position: text.len(),
                message: format!("no image given for `{}`", alphabet.name(j + 1)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FreeEndo::new(images)
}

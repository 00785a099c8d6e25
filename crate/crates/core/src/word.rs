//! Words in the generators `σ_i^{±1}`, `α_i` of `C_n`, and the defining
//! relations of the group.
//!
//! Text grammar: whitespace-separated tokens `s<k>`, `a<k>`, optionally
//! followed by `^-1`. Uppercase `S<k>` is shorthand for `s<k>^-1`; since
//! `α_k` is an involution, `A<k>` and `a<k>^-1` both read as `a<k>`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    #[serde(rename = "s")]
    Sigma,
    #[serde(rename = "a")]
    Alpha,
}

/// One generator letter. `α` letters are always stored with `inverse = false`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenLetter {
    pub kind: GenKind,
    pub index: usize,
    pub inverse: bool,
}

impl GenLetter {
    pub fn sigma(index: usize) -> Self {
        Self {
            kind: GenKind::Sigma,
            index,
            inverse: false,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Self {
            kind: GenKind::Sigma,
            index,
            inverse: true,
        }
    }

    pub fn alpha(index: usize) -> Self {
        Self {
            kind: GenKind::Alpha,
            index,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        match self.kind {
            GenKind::Sigma => Self {
                inverse: !self.inverse,
                ..self
            },
            GenKind::Alpha => self,
        }
    }

    pub fn is_inverse_of(self, other: GenLetter) -> bool {
        self.inv() == other
    }

    /// The transposition `(i i+1)` this letter induces on strands.
    pub fn transposition(self, n: usize) -> Permutation {
        Permutation::adjacent_transposition(n, self.index)
    }
}

impl fmt::Display for GenLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match (self.kind, self.inverse) {
            (GenKind::Sigma, false) => 's',
            (GenKind::Sigma, true) => 'S',
            (GenKind::Alpha, _) => 'a',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// A word in the generators of `C_n`; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord {
    n: usize,
    letters: Vec<GenLetter>,
}

impl GenWord {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            letters: Vec::new(),
        }
    }

    /// Fails with `IndexOutOfRange` unless every index lies in `1..n`.
    pub fn new(n: usize, letters: Vec<GenLetter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index >= n {
                return Err(Error::IndexOutOfRange { index: l.index, n });
            }
        }
        let letters = letters
            .into_iter()
            .map(|l| match l.kind {
                GenKind::Alpha => GenLetter::alpha(l.index),
                GenKind::Sigma => l,
            })
            .collect();
        Ok(Self { n, letters })
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for (pos, tok) in tokens(text) {
            let letter = parse_token(tok).ok_or_else(|| Error::Syntax {
                pos,
                msg: format!("unrecognised generator {tok:?}"),
            })?;
            if letter.index == 0 || letter.index >= n {
                return Err(Error::IndexOutOfRange {
                    index: letter.index,
                    n,
                });
            }
            letters.push(letter);
        }
        Ok(Self { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[GenLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters viewed in a larger rank.
    pub fn with_rank(&self, n: usize) -> Result<Self> {
        Self::new(n, self.letters.clone())
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        assert_eq!(self.n, other.n, "words over different ranks");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord { n: self.n, letters }
    }

    pub fn inverse(&self) -> GenWord {
        GenWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// The letters in reverse order.
    pub fn reversed(&self) -> GenWord {
        GenWord {
            n: self.n,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Cancels adjacent `σ_i^{±1} σ_i^{∓1}` and `α_i α_i` pairs until none
    /// remain.
    pub fn free_cancel(&self) -> GenWord {
        let mut out: Vec<GenLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        GenWord {
            n: self.n,
            letters: out,
        }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    /// Product of the transpositions `(i i+1)` of the letters, composed in
    /// word order: the permutation `Π` of the word's automorphism.
    pub fn permutation(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.n), |acc, l| {
                acc.compose(&l.transposition(self.n))
            })
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split(|c: char| c.is_ascii_whitespace())
        .scan(0usize, move |offset, tok| {
            let pos = *offset;
            *offset += tok.len() + 1;
            Some((pos, tok))
        })
        .filter(|(_, tok)| !tok.is_empty())
}

fn parse_token(tok: &str) -> Option<GenLetter> {
    let mut chars = tok.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    let (digits, suffix_inverse) = match rest.strip_suffix("^-1") {
        Some(d) => (d, true),
        None => (rest, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: usize = digits.parse().ok()?;
    match head {
        's' => Some(GenLetter {
            kind: GenKind::Sigma,
            index,
            inverse: suffix_inverse,
        }),
        'S' if !suffix_inverse => Some(GenLetter::sigma_inv(index)),
        'a' | 'A' => Some(GenLetter::alpha(index)),
        _ => None,
    }
}

/// Space-separated letters; inverse sigmas print as `S<k>`.
impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct GenWordJson {
    n: usize,
    letters: Vec<(GenKind, usize, i8)>,
}

/// JSON: `{"n": n, "letters": [["s"|"a", index, sign], ...]}`.
impl Serialize for GenWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GenWordJson {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|l| (l.kind, l.index, if l.inverse { -1 } else { 1 }))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GenWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GenWordJson::deserialize(deserializer)?;
        let mut letters = Vec::with_capacity(raw.letters.len());
        for (kind, index, sign) in raw.letters {
            if sign != 1 && sign != -1 {
                return Err(serde::de::Error::custom(format!("bad sign {sign}")));
            }
            letters.push(GenLetter {
                kind,
                index,
                inverse: sign < 0,
            });
        }
        GenWord::new(raw.n, letters).map_err(serde::de::Error::custom)
    }
}

/// The eight families of defining relations of `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
    SigmaBraid,
    /// `σ_i σ_j = σ_j σ_i`, `|i - j| ≥ 2`
    SigmaCommute,
    /// `α_i^2 = 1`
    AlphaInvolution,
    /// `α_j α_{j+1} α_j = α_{j+1} α_j α_{j+1}`
    AlphaBraid,
    /// `α_i α_j = α_j α_i`, `|i - j| ≥ 2`
    AlphaCommute,
    /// `α_i σ_j = σ_j α_i`, `|i - j| ≥ 2`
    MixedCommute,
    /// `σ_i α_{i+1} α_i = α_{i+1} α_i σ_{i+1}`
    SigmaAlphaAlpha,
    /// `σ_{i+1} σ_i α_{i+1} = α_i σ_{i+1} σ_i`
    SigmaSigmaAlpha,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 8] = [
        RelationFamily::SigmaBraid,
        RelationFamily::SigmaCommute,
        RelationFamily::AlphaInvolution,
        RelationFamily::AlphaBraid,
        RelationFamily::AlphaCommute,
        RelationFamily::MixedCommute,
        RelationFamily::SigmaAlphaAlpha,
        RelationFamily::SigmaSigmaAlpha,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationFamily::SigmaBraid => "sigma-braid",
            RelationFamily::SigmaCommute => "sigma-commute",
            RelationFamily::AlphaInvolution => "alpha-involution",
            RelationFamily::AlphaBraid => "alpha-braid",
            RelationFamily::AlphaCommute => "alpha-commute",
            RelationFamily::MixedCommute => "mixed-commute",
            RelationFamily::SigmaAlphaAlpha => "sigma-alpha-alpha",
            RelationFamily::SigmaSigmaAlpha => "sigma-sigma-alpha",
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub lhs: GenWord,
    pub rhs: GenWord,
}

impl Relation {
    /// Both sides read right to left.
    pub fn mirrored(&self) -> Relation {
        Relation {
            family: self.family,
            lhs: self.lhs.reversed(),
            rhs: self.rhs.reversed(),
        }
    }

    /// The relator `lhs · rhs^-1`.
    pub fn relator(&self) -> GenWord {
        self.lhs.concat(&self.rhs.inverse())
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |w: &GenWord| if w.is_empty() { "1".to_string() } else { w.to_string() };
        write!(f, "{}: {} = {}", self.family, side(&self.lhs), side(&self.rhs))
    }
}

/// Every index instance of every relation family for rank `n`.
pub fn relation_instances(n: usize) -> Vec<Relation> {
    use GenLetter as L;
    let word = |letters: Vec<GenLetter>| GenWord::new(n, letters).expect("relation indices in range");
    let mut out = Vec::new();
    let mut push = |family, lhs: Vec<GenLetter>, rhs: Vec<GenLetter>| {
        out.push(Relation {
            family,
            lhs: word(lhs),
            rhs: word(rhs),
        })
    };
    let gens = 1..n;
    let far = |i: usize, j: usize| i.abs_diff(j) >= 2;

    for i in 1..n.saturating_sub(1) {
        push(
            RelationFamily::SigmaBraid,
            vec![L::sigma(i), L::sigma(i + 1), L::sigma(i)],
            vec![L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)],
        );
    }
    for i in gens.clone() {
        for j in i + 1..n {
            if far(i, j) {
                push(
                    RelationFamily::SigmaCommute,
                    vec![L::sigma(i), L::sigma(j)],
                    vec![L::sigma(j), L::sigma(i)],
                );
            }
        }
    }
    for i in gens.clone() {
        push(RelationFamily::AlphaInvolution, vec![L::alpha(i), L::alpha(i)], vec![]);
    }
    for j in 1..n.saturating_sub(1) {
        push(
            RelationFamily::AlphaBraid,
            vec![L::alpha(j), L::alpha(j + 1), L::alpha(j)],
            vec![L::alpha(j + 1), L::alpha(j), L::alpha(j + 1)],
        );
    }
    for i in gens.clone() {
        for j in i + 1..n {
            if far(i, j) {
                push(
                    RelationFamily::AlphaCommute,
                    vec![L::alpha(i), L::alpha(j)],
                    vec![L::alpha(j), L::alpha(i)],
                );
            }
        }
    }
    for i in gens.clone() {
        for j in gens.clone() {
            if far(i, j) {
                push(
                    RelationFamily::MixedCommute,
                    vec![L::alpha(i), L::sigma(j)],
                    vec![L::sigma(j), L::alpha(i)],
                );
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(
            RelationFamily::SigmaAlphaAlpha,
            vec![L::sigma(i), L::alpha(i + 1), L::alpha(i)],
            vec![L::alpha(i + 1), L::alpha(i), L::sigma(i + 1)],
        );
    }
    for i in 1..n.saturating_sub(1) {
        push(
            RelationFamily::SigmaSigmaAlpha,
            vec![L::sigma(i + 1), L::sigma(i), L::alpha(i + 1)],
            vec![L::alpha(i), L::sigma(i + 1), L::sigma(i)],
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str, n: usize) -> GenWord {
        GenWord::parse(s, n).unwrap()
    }

    #[test]
    fn parses_rank3_kernel_word() {
        let v = word("S2 a2 a1 S2 a2 a1 s2 a1 a2 s2 a1 a2", 3);
        assert_eq!(v.len(), 12);
        assert_eq!(v.letters()[0], GenLetter::sigma_inv(2));
        assert_eq!(v.letters()[1], GenLetter::alpha(2));
        assert_eq!(v.letters()[6], GenLetter::sigma(2));
        assert_eq!(v.to_string(), "S2 a2 a1 S2 a2 a1 s2 a1 a2 s2 a1 a2");
    }

    #[test]
    fn accepted_spellings() {
        let long = word("s1^-1 A2 a1^-1 s2", 3);
        assert_eq!(long, word("S1 a2 a1 s2", 3));
        assert_eq!(long.to_string(), "S1 a2 a1 s2");
        assert!(word("", 3).is_empty());
        assert!(word("  \t ", 3).is_empty());
        assert_eq!(word(" s1\n s2 ", 3).len(), 2);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            GenWord::parse("s3 a1", 3),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
        assert_eq!(
            GenWord::parse("a0", 3),
            Err(Error::IndexOutOfRange { index: 0, n: 3 })
        );
        match GenWord::parse("s1 t2", 3) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(GenWord::parse("s", 3), Err(Error::Syntax { .. })));
        assert!(matches!(GenWord::parse("S1^-1", 3), Err(Error::Syntax { .. })));
        assert!(matches!(GenWord::parse("s1^2", 3), Err(Error::Syntax { .. })));
        assert!(matches!(GenWord::parse("σ1", 3), Err(Error::Syntax { .. })));
    }

    #[test]
    fn cancellation() {
        assert!(word("s1 S1", 3).free_cancel().is_empty());
        assert!(word("a2 a2", 3).free_cancel().is_empty());
        assert!(word("a1 s2 S2 a1", 3).free_cancel().is_empty());
        assert_eq!(word("s1 a1 s1", 3).free_cancel(), word("s1 a1 s1", 3));
        assert_eq!(word("s1 s1 S1 a2", 3).free_cancel(), word("s1 a2", 3));
    }

    #[test]
    fn permutations() {
        assert!(GenWord::empty(4).permutation().is_identity());
        assert_eq!(word("a1", 3).permutation().to_string(), "(1 2)");
        let v = word("S2 a2 a1 S2 a2 a1 s2 a1 a2 s2 a1 a2", 3);
        assert!(v.permutation().is_identity());
        let u = word("s1 a2", 3);
        let w = word("S2 a1 a1 s1", 3);
        assert_eq!(u.concat(&w).permutation(), u.permutation().compose(&w.permutation()));
    }

    #[test]
    fn relations_small_rank() {
        let r2 = relation_instances(2);
        assert_eq!(r2.len(), 1);
        assert_eq!(r2[0].family, RelationFamily::AlphaInvolution);

        let r3 = relation_instances(3);
        let has = |l: &str, r: &str| r3.iter().any(|x| x.lhs == word(l, 3) && x.rhs == word(r, 3));
        assert!(has("s1 s2 s1", "s2 s1 s2"));
        assert!(has("a1 a2 a1", "a2 a1 a2"));
        assert!(has("s1 a2 a1", "a2 a1 s2"));
        assert!(has("s2 s1 a2", "a1 s2 s1"));
        // n = 3: braid, 2 involutions, alpha braid, two mixed relations
        assert_eq!(r3.len(), 6);
    }

    #[test]
    fn relation_counts() {
        let r4 = relation_instances(4);
        let count = |f| r4.iter().filter(|r| r.family == f).count();
        assert_eq!(count(RelationFamily::SigmaBraid), 2);
        assert_eq!(count(RelationFamily::SigmaCommute), 1);
        assert_eq!(count(RelationFamily::AlphaInvolution), 3);
        assert_eq!(count(RelationFamily::AlphaCommute), 1);
        // (1,3) and (3,1)
        assert_eq!(count(RelationFamily::MixedCommute), 2);
        assert_eq!(count(RelationFamily::SigmaSigmaAlpha), 2);
    }

    #[test]
    fn relations_preserve_permutation() {
        for n in 2..=7 {
            for r in relation_instances(n) {
                assert_eq!(r.lhs.permutation(), r.rhs.permutation(), "{r}");
            }
        }
    }

    #[test]
    fn json_form() {
        let w = word("s1 S2 a1", 3);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"n":3,"letters":[["s",1,1],["s",2,-1],["a",1,1]]}"#);
        assert_eq!(serde_json::from_str::<GenWord>(&json).unwrap(), w);
        assert!(serde_json::from_str::<GenWord>(r#"{"n":2,"letters":[["s",2,1]]}"#).is_err());
        let alpha_neg: GenWord = serde_json::from_str(r#"{"n":3,"letters":[["a",2,-1]]}"#).unwrap();
        assert_eq!(alpha_neg, word("a2", 3));
    }
}

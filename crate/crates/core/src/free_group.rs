//! Words in the free group `F_n` and automorphisms given by generator
//! images.
//!
//! The generators of `C_n` act on `F_n` by
//!
//! * `σ_i`:    `x_i ↦ x_i x_{i+1} x_i^-1`, `x_{i+1} ↦ x_i`
//! * `σ_i^-1`: `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}^-1 x_i x_{i+1}`
//! * `α_i`:    `x_i ↔ x_{i+1}`
//!
//! with all other generators fixed. An automorphism is the identity exactly
//! when every generator is its own image, which decides the word problem in
//! `C_n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `x_index` or its inverse; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter {
    pub index: usize,
    pub inverse: bool,
}

impl FreeLetter {
    pub fn new(index: usize, inverse: bool) -> Self {
        Self { index, inverse }
    }

    pub fn gen(index: usize) -> Self {
        Self::new(index, false)
    }

    pub fn inv(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: FreeLetter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

impl fmt::Display for FreeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.index)
        } else {
            write!(f, "x{}", self.index)
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gen(index: usize) -> Self {
        Self {
            letters: vec![FreeLetter::gen(index)],
        }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = FreeLetter>) -> Self {
        let mut w = Self::identity();
        for l in raw {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: FreeLetter) {
        match self.letters.last() {
            Some(&top) if top.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, 0 for the identity.
    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    fn extend(&mut self, other: &FreeWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `x1 x2^-1 x3`; `1` or an empty string is the identity. The result
/// is freely reduced.
impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let pos = offset + s[offset..].find(tok).unwrap();
            offset = pos + tok.len();
            if tok == "1" {
                continue;
            }
            let bad = || Error::Syntax {
                pos,
                msg: format!("expected x<k> or x<k>^-1, found {tok:?}"),
            };
            let body = tok.strip_prefix('x').ok_or_else(bad)?;
            let (digits, inverse) = match body.strip_suffix("^-1") {
                Some(d) => (d, true),
                None => (body, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let index: usize = digits.parse().map_err(|_| bad())?;
            if index == 0 {
                return Err(bad());
            }
            letters.push(FreeLetter::new(index, inverse));
        }
        Ok(FreeWord::reduce(letters))
    }
}

/// JSON: array of `[index, sign]` pairs.
impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(usize, i8)> = self
            .letters
            .iter()
            .map(|l| (l.index, if l.inverse { -1 } else { 1 }))
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<(usize, i8)>::deserialize(deserializer)?;
        let mut letters = Vec::with_capacity(pairs.len());
        for (index, sign) in pairs {
            if index == 0 || (sign != 1 && sign != -1) {
                return Err(serde::de::Error::custom(format!("bad letter [{index}, {sign}]")));
            }
            letters.push(FreeLetter::new(index, sign < 0));
        }
        Ok(FreeWord::reduce(letters))
    }
}

/// An endomorphism of `F_n` given by the images of `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).map(FreeWord::gen).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let n = images.len();
        for w in &images {
            if w.max_index() > n {
                return Err(Error::RankMismatch {
                    left: n,
                    right: w.max_index(),
                });
            }
        }
        Ok(Self { images })
    }

    /// Action of `σ_i` (or `σ_i^-1` when `inverse`), 1-based `i`.
    pub fn sigma(n: usize, i: usize, inverse: bool) -> Result<Self> {
        check_index(n, i)?;
        let mut phi = Self::identity(n);
        let (xi, xj) = (FreeLetter::gen(i), FreeLetter::gen(i + 1));
        if inverse {
            phi.images[i - 1] = FreeWord::gen(i + 1);
            phi.images[i] = FreeWord::reduce([xj.inv(), xi, xj]);
        } else {
            phi.images[i - 1] = FreeWord::reduce([xi, xj, xi.inv()]);
            phi.images[i] = FreeWord::gen(i);
        }
        Ok(phi)
    }

    /// Action of `α_i`, 1-based `i`.
    pub fn alpha(n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        let mut phi = Self::identity(n);
        phi.images.swap(i - 1, i);
        Ok(phi)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.max_index() > self.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: w.max_index(),
            });
        }
        let mut out = FreeWord::identity();
        for l in w.letters() {
            let img = &self.images[l.index - 1];
            if l.inverse {
                out.extend(&img.inverse());
            } else {
                out.extend(img);
            }
        }
        Ok(out)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_>>()?;
        Ok(FreeAutomorphism { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [FreeLetter::gen(i + 1)])
    }

    /// Writes every image as `f_i^-1 x_{π(i)} f_i`.
    ///
    /// A reduced conjugate `u^-1 x_j u` has odd length, a positive middle
    /// letter and mirror-image halves, so the split is unique and `u` is the
    /// shortest possible conjugator.
    pub fn conjugacy_certificate(&self) -> Result<ConjugacyCertificate> {
        let n = self.rank();
        let mut targets = Vec::with_capacity(n);
        let mut conjugators = Vec::with_capacity(n);
        for (i, w) in self.images.iter().enumerate() {
            let letters = w.letters();
            let not_conj = Error::NotConjugating { index: i + 1 };
            if letters.len() % 2 == 0 {
                return Err(not_conj);
            }
            let mid = letters.len() / 2;
            let (head, rest) = letters.split_at(mid);
            let (centre, tail) = (rest[0], &rest[1..]);
            if centre.inverse || head.iter().rev().zip(tail).any(|(&h, &t)| h != t.inv()) {
                return Err(not_conj);
            }
            targets.push(centre.index);
            conjugators.push(FreeWord {
                letters: tail.to_vec(),
            });
        }
        let pi = Permutation::from_images(&targets).ok_or(Error::NotConjugating { index: 0 })?;
        Ok(ConjugacyCertificate { pi, conjugators })
    }
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "x{} ↦ {}", i + 1, w)?;
        }
        Ok(())
    }
}

/// Witness that an automorphism is conjugating: `Φ(x_i) = f_i^-1 x_{π(i)} f_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyCertificate {
    pub pi: Permutation,
    pub conjugators: Vec<FreeWord>,
}

impl ConjugacyCertificate {
    pub fn rebuild(&self) -> FreeAutomorphism {
        let images = self
            .conjugators
            .iter()
            .enumerate()
            .map(|(i, f)| {
                f.inverse()
                    .concat(&FreeWord::gen(self.pi.apply(i + 1)))
                    .concat(f)
            })
            .collect();
        FreeAutomorphism { images }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn raw(s: &str) -> Vec<FreeLetter> {
        s.split_whitespace()
            .map(|t| {
                let inv = t.ends_with("^-1");
                let idx = t.trim_start_matches('x').trim_end_matches("^-1").parse().unwrap();
                FreeLetter::new(idx, inv)
            })
            .collect()
    }

    /// Repeatedly deletes the first adjacent cancelling pair.
    fn reduce_by_rescanning(mut v: Vec<FreeLetter>) -> Vec<FreeLetter> {
        loop {
            let pos = v.windows(2).position(|p| p[0].cancels(p[1]));
            match pos {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    #[test]
    fn reduction() {
        assert_eq!(FreeWord::reduce(raw("x1 x2 x2^-1")), w("x1"));
        assert!(FreeWord::reduce(raw("x1 x1^-1")).is_empty());
        let cascade = raw("x1 x2 x1^-1 x1 x2^-1 x1^-1");
        assert!(reduce_by_rescanning(cascade.clone()).is_empty());
        assert!(FreeWord::reduce(cascade).is_empty());
    }

    #[test]
    fn text_round_trip() {
        let x = w("x1 x2^-1 x3");
        assert_eq!(x.to_string(), "x1 x2^-1 x3");
        assert_eq!(w(&x.to_string()), x);
        assert_eq!(FreeWord::identity().to_string(), "1");
        assert_eq!(w("1"), FreeWord::identity());
        assert!("x0".parse::<FreeWord>().is_err());
        assert!("y1".parse::<FreeWord>().is_err());
        assert!("x1^2".parse::<FreeWord>().is_err());
    }

    #[test]
    fn json_pairs() {
        let x = w("x1 x2^-1");
        assert_eq!(serde_json::to_string(&x).unwrap(), "[[1,1],[2,-1]]");
        assert_eq!(serde_json::from_str::<FreeWord>("[[1,1],[2,-1]]").unwrap(), x);
        assert!(serde_json::from_str::<FreeWord>("[[1,2]]").is_err());
    }

    #[test]
    fn generator_actions() {
        let s1 = FreeAutomorphism::sigma(3, 1, false).unwrap();
        assert_eq!(s1.apply(&w("x2")).unwrap(), w("x1"));
        assert_eq!(s1.apply(&w("x1")).unwrap(), w("x1 x2 x1^-1"));
        assert_eq!(s1.apply(&w("x3")).unwrap(), w("x3"));
        let s1inv = FreeAutomorphism::sigma(3, 1, true).unwrap();
        assert!(s1.compose(&s1inv).unwrap().is_identity());
        assert!(s1inv.compose(&s1).unwrap().is_identity());
        let a2 = FreeAutomorphism::alpha(3, 2).unwrap();
        assert_eq!(a2.apply(&w("x2 x3^-1")).unwrap(), w("x3 x2^-1"));
        assert!(a2.compose(&a2).unwrap().is_identity());
        assert!(FreeAutomorphism::sigma(3, 3, false).is_err());
        assert!(FreeAutomorphism::alpha(3, 0).is_err());
    }

    #[test]
    fn identity_laws() {
        let s2 = FreeAutomorphism::sigma(4, 2, false).unwrap();
        let id = FreeAutomorphism::identity(4);
        assert_eq!(s2.compose(&id).unwrap(), s2);
        assert_eq!(id.compose(&s2).unwrap(), s2);
        let x = w("x1 x4^-1 x2");
        assert_eq!(id.apply(&x).unwrap(), x);
        assert!(id.is_identity());
        assert!(!s2.is_identity());
    }

    #[test]
    fn rank_mismatch() {
        let id3 = FreeAutomorphism::identity(3);
        assert_eq!(
            id3.apply(&w("x4")),
            Err(Error::RankMismatch { left: 3, right: 4 })
        );
        assert!(id3.compose(&FreeAutomorphism::identity(4)).is_err());
        assert!(FreeAutomorphism::from_images(vec![w("x2")]).is_err());
    }

    #[test]
    fn certificates() {
        let id = FreeAutomorphism::identity(3).conjugacy_certificate().unwrap();
        assert!(id.pi.is_identity());
        assert!(id.conjugators.iter().all(FreeWord::is_empty));

        let s1 = FreeAutomorphism::sigma(3, 1, false).unwrap();
        let cert = s1.conjugacy_certificate().unwrap();
        assert_eq!(cert.pi, Permutation::adjacent_transposition(3, 1));
        assert_eq!(cert.conjugators, vec![w("x1^-1"), w(""), w("")]);
        assert_eq!(cert.rebuild(), s1);

        let a1 = FreeAutomorphism::alpha(3, 1).unwrap();
        let cert = a1.conjugacy_certificate().unwrap();
        assert_eq!(cert.pi.to_string(), "(1 2)");
        assert!(cert.conjugators.iter().all(FreeWord::is_empty));
    }

    #[test]
    fn non_conjugating() {
        let phi = FreeAutomorphism::from_images(vec![w("x1 x2"), w("x2")]).unwrap();
        assert_eq!(phi.conjugacy_certificate(), Err(Error::NotConjugating { index: 1 }));
        let inv = FreeAutomorphism::from_images(vec![w("x1^-1"), w("x2")]).unwrap();
        assert!(inv.conjugacy_certificate().is_err());
        // both images conjugate to x1: not a permutation
        let collapse = FreeAutomorphism::from_images(vec![w("x1"), w("x2 x1 x2^-1")]).unwrap();
        assert!(collapse.conjugacy_certificate().is_err());
    }
}

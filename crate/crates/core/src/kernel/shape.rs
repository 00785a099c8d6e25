//! Rank-3 words of the form `A_1 T^{s_1} ... A_r T^{s_r}` or
//! `T^{s_1} A_1 ... T^{s_r} A_r` with `T = σ_2 α_2 α_1`, `Σ s_i = 0`,
//! `Σ |A_i|` even and each `A_i` one of five short `α`-words.
//!
//! Matching is literal: no cancellation or relation is applied to the input.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{GenLetter, GenWord};

/// `T = σ_2 α_2 α_1`.
pub const T_WORD: &str = "s2 a2 a1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ABlock {
    A1,
    A2,
    A1A2,
    A2A1,
    A1A2A1,
}

impl ABlock {
    pub const ALL: [ABlock; 5] = [ABlock::A1, ABlock::A2, ABlock::A1A2, ABlock::A2A1, ABlock::A1A2A1];

    pub fn letters(self) -> Vec<GenLetter> {
        let idx: &[usize] = match self {
            ABlock::A1 => &[1],
            ABlock::A2 => &[2],
            ABlock::A1A2 => &[1, 2],
            ABlock::A2A1 => &[2, 1],
            ABlock::A1A2A1 => &[1, 2, 1],
        };
        idx.iter().map(|&i| GenLetter::alpha(i)).collect()
    }

    pub fn letter_count(self) -> usize {
        match self {
            ABlock::A1 | ABlock::A2 => 1,
            ABlock::A1A2 | ABlock::A2A1 => 2,
            ABlock::A1A2A1 => 3,
        }
    }
}

impl fmt::Display for ABlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.letters().iter().map(|l| l.to_string()).collect();
        f.write_str(&names.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeVariant {
    /// `A_1 T^{s_1} A_2 T^{s_2} ...`
    AFirst,
    /// `T^{s_1} A_1 T^{s_2} A_2 ...`
    TFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeSpec {
    pub blocks: Vec<ABlock>,
    pub exponents: Vec<i64>,
    pub variant: ShapeVariant,
}

impl ShapeSpec {
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.blocks.is_empty() {
            return Err(Error::InvalidShape("r must be at least 1".into()));
        }
        if self.blocks.len() != self.exponents.len() {
            return Err(Error::InvalidShape(format!(
                "{} blocks but {} exponents",
                self.blocks.len(),
                self.exponents.len()
            )));
        }
        let total: i64 = self.exponents.iter().sum();
        if total != 0 {
            return Err(Error::InvalidShape(format!("exponents sum to {total}, not 0")));
        }
        let len: usize = self.blocks.iter().map(|b| b.letter_count()).sum();
        if len % 2 == 1 {
            return Err(Error::InvalidShape(format!("blocks have odd total length {len}")));
        }
        Ok(())
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let variant = match self.variant {
            ShapeVariant::AFirst => "A-first",
            ShapeVariant::TFirst => "T-first",
        };
        write!(f, "r={} {variant}", self.r())?;
        for (b, s) in self.blocks.iter().zip(&self.exponents) {
            write!(f, " [{b}]^T{s}")?;
        }
        Ok(())
    }
}

fn t_letters() -> [GenLetter; 3] {
    [GenLetter::sigma(2), GenLetter::alpha(2), GenLetter::alpha(1)]
}

fn t_inverse_letters() -> [GenLetter; 3] {
    [GenLetter::alpha(1), GenLetter::alpha(2), GenLetter::sigma_inv(2)]
}

fn push_power(out: &mut Vec<GenLetter>, s: i64) {
    let unit = if s >= 0 { t_letters() } else { t_inverse_letters() };
    for _ in 0..s.unsigned_abs() {
        out.extend_from_slice(&unit);
    }
}

/// Literal concatenation of the blocks and `T`-powers, at rank 3.
pub fn expand_shape(spec: &ShapeSpec) -> Result<GenWord> {
    spec.validate()?;
    let mut letters = Vec::new();
    for (b, &s) in spec.blocks.iter().zip(&spec.exponents) {
        match spec.variant {
            ShapeVariant::AFirst => {
                letters.extend(b.letters());
                push_power(&mut letters, s);
            }
            ShapeVariant::TFirst => {
                push_power(&mut letters, s);
                letters.extend(b.letters());
            }
        }
    }
    GenWord::new(3, letters)
}

/// Finds some [`ShapeSpec`] expanding to exactly `w`, trying `A`-first
/// before `T`-first.
pub fn match_shape(w: &GenWord) -> Option<ShapeSpec> {
    if w.n() != 3 || w.is_empty() {
        return None;
    }
    [ShapeVariant::AFirst, ShapeVariant::TFirst]
        .into_iter()
        .find_map(|variant| Matcher::new(w.letters(), variant).run())
}

struct Matcher<'a> {
    letters: &'a [GenLetter],
    variant: ShapeVariant,
    // (pos, exponent sum, block-length parity) states known to fail
    dead: HashSet<(usize, i64, bool)>,
    blocks: Vec<ABlock>,
    exponents: Vec<i64>,
}

impl<'a> Matcher<'a> {
    fn new(letters: &'a [GenLetter], variant: ShapeVariant) -> Self {
        Self {
            letters,
            variant,
            dead: HashSet::new(),
            blocks: Vec::new(),
            exponents: Vec::new(),
        }
    }

    fn run(mut self) -> Option<ShapeSpec> {
        if self.pairs_from(0, 0, false) {
            Some(ShapeSpec {
                blocks: self.blocks,
                exponents: self.exponents,
                variant: self.variant,
            })
        } else {
            None
        }
    }

    fn block_at(&self, pos: usize, b: ABlock) -> bool {
        let want = b.letters();
        self.letters.get(pos..pos + want.len()) == Some(&want[..])
    }

    /// Candidate `(exponent, letters consumed)` for a `T`-run at `pos`,
    /// longest runs first.
    fn runs_at(&self, pos: usize) -> Vec<(i64, usize)> {
        let count = |unit: &[GenLetter; 3]| {
            let mut k = 0;
            while self.letters.get(pos + 3 * k..pos + 3 * k + 3) == Some(&unit[..]) {
                k += 1;
            }
            k
        };
        let mut out = Vec::new();
        let up = count(&t_letters());
        out.extend((1..=up).rev().map(|k| (k as i64, 3 * k)));
        let down = count(&t_inverse_letters());
        out.extend((1..=down).rev().map(|k| (-(k as i64), 3 * k)));
        out.push((0, 0));
        out
    }

    /// Parses `(A, T^s)` pairs from `pos` to the end.
    fn pairs_from(&mut self, pos: usize, sum: i64, odd: bool) -> bool {
        if pos == self.letters.len() {
            return pos > 0 && sum == 0 && !odd;
        }
        if self.dead.contains(&(pos, sum, odd)) {
            return false;
        }
        let found = match self.variant {
            ShapeVariant::AFirst => self.block_then_run(pos, sum, odd),
            ShapeVariant::TFirst => self.run_then_block(pos, sum, odd),
        };
        if !found {
            self.dead.insert((pos, sum, odd));
        }
        found
    }

    fn block_then_run(&mut self, pos: usize, sum: i64, odd: bool) -> bool {
        for b in ABlock::ALL {
            if !self.block_at(pos, b) {
                continue;
            }
            let after = pos + b.letter_count();
            let parity = odd ^ (b.letter_count() % 2 == 1);
            for (s, used) in self.runs_at(after) {
                self.blocks.push(b);
                self.exponents.push(s);
                if self.pairs_from(after + used, sum + s, parity) {
                    return true;
                }
                self.blocks.pop();
                self.exponents.pop();
            }
        }
        false
    }

    fn run_then_block(&mut self, pos: usize, sum: i64, odd: bool) -> bool {
        for (s, used) in self.runs_at(pos) {
            let at = pos + used;
            for b in ABlock::ALL {
                if !self.block_at(at, b) {
                    continue;
                }
                self.blocks.push(b);
                self.exponents.push(s);
                if self.pairs_from(at + b.letter_count(), sum + s, odd ^ (b.letter_count() % 2 == 1)) {
                    return true;
                }
                self.blocks.pop();
                self.exponents.pop();
            }
        }
        false
    }
}

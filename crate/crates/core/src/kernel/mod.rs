//! Kernel membership for `ρ`: exact verification, the rank-3 kernel word
//! grammar, and a bounded search.

mod search;
mod shape;

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::free_group::{ConjugacyCertificate, FreeAutomorphism};
use crate::rep::{word_to_automorphism, RepImage};
use crate::word::GenWord;

pub use search::{search_kernel, search_kernel_report, SearchConfig, SearchReport, SearchStats};
pub use shape::{expand_shape, match_shape, ABlock, ShapeSpec, ShapeVariant, T_WORD};

/// Rank-3 word with `ρ(v) = I_3` and nontrivial action on `F_3`.
pub const KERNEL_WORD_N3: &str = "S2 a2 a1 S2 a2 a1 s2 a1 a2 s2 a1 a2";

/// Rank-4 word with `ρ(w) = I_6`, published as a kernel element.
pub const KERNEL_WORD_N4: &str = "s1 a1 a2 a1 S1 a2 a1 S1 a2 s1 a1 a2";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    /// `ρ(w) = I` but `w ≠ 1` in `C_n`.
    InKernelNontrivial,
    /// `w = 1` in `C_n`.
    Trivial,
    /// `ρ(w) ≠ I`.
    NotInKernel,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::InKernelNontrivial => "in-kernel-nontrivial",
            Conclusion::Trivial => "trivial",
            Conclusion::NotInKernel => "not-in-kernel",
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelVerdict {
    pub word: GenWord,
    pub matrix_is_identity: bool,
    pub automorphism_is_identity: bool,
    pub conclusion: Conclusion,
    pub automorphism: FreeAutomorphism,
}

impl KernelVerdict {
    fn new(word: GenWord, matrix_is_identity: bool, automorphism: FreeAutomorphism) -> Self {
        let automorphism_is_identity = automorphism.is_identity();
        let conclusion = match (matrix_is_identity, automorphism_is_identity) {
            (true, false) => Conclusion::InKernelNontrivial,
            (true, true) => Conclusion::Trivial,
            (false, _) => Conclusion::NotInKernel,
        };
        Self {
            word,
            matrix_is_identity,
            automorphism_is_identity,
            conclusion,
            automorphism,
        }
    }

    pub fn certificate(&self) -> ConjugacyCertificate {
        self.automorphism
            .conjugacy_certificate()
            .expect("words in the generators act by conjugating automorphisms")
    }

    /// One JSON-lines record.
    pub fn to_json(&self) -> serde_json::Value {
        let cert = self.certificate();
        serde_json::json!({
            "word": self.word.to_string(),
            "length": self.word.len(),
            "verdict": self.conclusion.as_str(),
            "certificate": {
                "pi": cert.pi.to_string(),
                "conjugators": cert.conjugators,
            },
        })
    }
}

/// Decides `ρ(w) = I` by exact evaluation and `w = 1` with the free group
/// action.
pub fn verify_kernel(w: &GenWord) -> KernelVerdict {
    if w.n() < 2 {
        // C_1 is trivial and V_1 is zero-dimensional
        return KernelVerdict::new(w.clone(), true, FreeAutomorphism::identity(w.n()));
    }
    let rep = RepImage::new(w.n()).expect("rank at least 2");
    verify_kernel_with(&rep, w).expect("word rank matches representation")
}

pub fn verify_kernel_with(rep: &RepImage, w: &GenWord) -> Result<KernelVerdict> {
    let matrix_is_identity = rep.evaluate(w)?.is_identity();
    let automorphism = word_to_automorphism(w)?;
    Ok(KernelVerdict::new(w.clone(), matrix_is_identity, automorphism))
}

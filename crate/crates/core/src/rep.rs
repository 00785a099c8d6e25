//! The representation `ρ : C_n → GL(V_n)` on the free `Z[q, q^-1]`-module
//! with basis `v_{i,j}`, `1 ≤ i < j ≤ n`, and the matching action of words
//! on `F_n`.
//!
//! Matrices act on column vectors: column `c` of `ρ(g)` holds the image of
//! the `c`-th basis vector. A word `g_1 g_2 ... g_k` maps to the product
//! `ρ(g_1) ρ(g_2) ... ρ(g_k)` and to the automorphism `g_1 ∘ g_2 ∘ ... ∘ g_k`.

use crate::error::{Error, Result};
use crate::free_group::FreeAutomorphism;
use crate::laurent::{LaurentPoly, ModularValue};
use crate::matrix::{ModularMatrix, PolyMatrix};
use crate::word::{GenKind, GenLetter, GenWord};

/// Lexicographic numbering of the pairs `(i, j)`, `1 ≤ i < j ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisIndexer {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl BasisIndexer {
    pub fn new(n: usize) -> Self {
        let pairs = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        Self { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n(n-1)/2`.
    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, idx: usize) -> (usize, usize) {
        self.pairs[idx]
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Coordinate of `v_{i,j}`; the pair is unordered.
    pub fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(1 <= i && j <= self.n && i < j, "no basis vector v_({i},{j}) for n = {}", self.n);
        // pairs starting below i contribute (n-1) + (n-2) + ... + (n-i+1)
        let before = (i - 1) * self.n - (i - 1) * i / 2;
        before + (j - i - 1)
    }
}

/// Which rule of the generator action applies to `v_{k,l}` for generator
/// index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairCase {
    /// `v_{k,i}`, `k < i`
    EndsAtI,
    /// `v_{k,i+1}`, `k < i`
    EndsAtNext,
    /// `v_{i,i+1}`
    Adjacent,
    /// `v_{i,l}`, `i+1 < l`
    StartsAtI,
    /// `v_{i+1,l}`
    StartsAtNext,
    /// `{k,l} ∩ {i,i+1} = ∅`
    Disjoint,
}

fn classify(i: usize, (k, l): (usize, usize)) -> PairCase {
    let cases = [
        (l == i && k < i, PairCase::EndsAtI),
        (l == i + 1 && k < i, PairCase::EndsAtNext),
        (k == i && l == i + 1, PairCase::Adjacent),
        (k == i && i + 1 < l, PairCase::StartsAtI),
        (k == i + 1, PairCase::StartsAtNext),
        (k != i && k != i + 1 && l != i && l != i + 1, PairCase::Disjoint),
    ];
    let mut hits = cases.iter().filter(|(holds, _)| *holds);
    let (_, case) = *hits.next().unwrap_or_else(|| panic!("pair ({k},{l}) matches no rule for i = {i}"));
    assert!(hits.next().is_none(), "pair ({k},{l}) matches several rules for i = {i}");
    case
}

fn q_times_q_minus_one() -> LaurentPoly {
    LaurentPoly::from_terms([(2, 1), (1, -1)])
}

fn one_minus_q() -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (1, -1)])
}

/// `ρ(g)` for a single generator letter, built from the action on the
/// basis `v_{k,l}`.
pub fn build_generator(n: usize, g: GenLetter) -> Result<PolyMatrix> {
    let i = g.index;
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let basis = BasisIndexer::new(n);
    let mut m = PolyMatrix::zeros(basis.dim());
    for (col, &(k, l)) in basis.pairs().iter().enumerate() {
        let image: Vec<((usize, usize), LaurentPoly)> = match (g.kind, classify(i, (k, l))) {
            (GenKind::Sigma, PairCase::EndsAtI) => vec![
                ((k, i), one_minus_q()),
                ((k, i + 1), LaurentPoly::q()),
                ((i, i + 1), q_times_q_minus_one()),
            ],
            (GenKind::Sigma, PairCase::EndsAtNext) => vec![((k, i), LaurentPoly::one())],
            (GenKind::Sigma, PairCase::Adjacent) => vec![((i, i + 1), LaurentPoly::monomial(1, 2))],
            (GenKind::Sigma, PairCase::StartsAtI) => vec![
                ((i, i + 1), q_times_q_minus_one()),
                ((i, l), one_minus_q()),
                ((i + 1, l), LaurentPoly::q()),
            ],
            (GenKind::Sigma, PairCase::StartsAtNext) => vec![((i, l), LaurentPoly::one())],
            (GenKind::Alpha, PairCase::EndsAtI) => vec![((k, i + 1), LaurentPoly::one())],
            (GenKind::Alpha, PairCase::EndsAtNext) => vec![((k, i), LaurentPoly::one())],
            (GenKind::Alpha, PairCase::Adjacent) => vec![((i, i + 1), LaurentPoly::one())],
            (GenKind::Alpha, PairCase::StartsAtI) => vec![((i + 1, l), LaurentPoly::one())],
            (GenKind::Alpha, PairCase::StartsAtNext) => vec![((i, l), LaurentPoly::one())],
            (_, PairCase::Disjoint) => vec![((k, l), LaurentPoly::one())],
        };
        for ((a, b), coeff) in image {
            m.set(basis.index(a, b), col, coeff);
        }
    }
    if g.kind == GenKind::Sigma && g.inverse {
        m = m.inverse()?;
    }
    Ok(m)
}

/// Cached generator images of `ρ` for one rank.
#[derive(Debug, Clone)]
pub struct RepImage {
    n: usize,
    sigma: Vec<PolyMatrix>,
    sigma_inv: Vec<PolyMatrix>,
    alpha: Vec<PolyMatrix>,
}

impl RepImage {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::IndexOutOfRange { index: 1, n });
        }
        let mut sigma = Vec::with_capacity(n - 1);
        let mut sigma_inv = Vec::with_capacity(n - 1);
        let mut alpha = Vec::with_capacity(n - 1);
        for i in 1..n {
            let s = build_generator(n, GenLetter::sigma(i))?;
            let s_inv = s.inverse()?;
            debug_assert!((&s * &s_inv).is_identity());
            sigma.push(s);
            sigma_inv.push(s_inv);
            alpha.push(build_generator(n, GenLetter::alpha(i))?);
        }
        Ok(Self {
            n,
            sigma,
            sigma_inv,
            alpha,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn generator(&self, g: GenLetter) -> &PolyMatrix {
        let i = g.index - 1;
        match (g.kind, g.inverse) {
            (GenKind::Sigma, false) => &self.sigma[i],
            (GenKind::Sigma, true) => &self.sigma_inv[i],
            (GenKind::Alpha, _) => &self.alpha[i],
        }
    }

    /// `ρ(w)` as an exact product.
    pub fn evaluate(&self, w: &GenWord) -> Result<PolyMatrix> {
        if w.n() != self.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: w.n(),
            });
        }
        let mut acc = PolyMatrix::identity(self.dim());
        for &l in w.letters() {
            acc = &acc * self.generator(l);
        }
        Ok(acc)
    }

    /// Generator images specialized at `q0`.
    pub fn specialize_mod(&self, q0: ModularValue) -> Result<ModularGenerators> {
        let spec = |ms: &[PolyMatrix]| -> Result<Vec<ModularMatrix>> {
            ms.iter().map(|m| m.specialize_mod(q0)).collect()
        };
        Ok(ModularGenerators {
            sigma: spec(&self.sigma)?,
            sigma_inv: spec(&self.sigma_inv)?,
            alpha: spec(&self.alpha)?,
        })
    }
}

/// Generator images of `ρ` over `Z/pZ`.
#[derive(Debug, Clone)]
pub struct ModularGenerators {
    sigma: Vec<ModularMatrix>,
    sigma_inv: Vec<ModularMatrix>,
    alpha: Vec<ModularMatrix>,
}

impl ModularGenerators {
    pub fn generator(&self, g: GenLetter) -> &ModularMatrix {
        let i = g.index - 1;
        match (g.kind, g.inverse) {
            (GenKind::Sigma, false) => &self.sigma[i],
            (GenKind::Sigma, true) => &self.sigma_inv[i],
            (GenKind::Alpha, _) => &self.alpha[i],
        }
    }
}

/// `ρ(w)` for a word of any rank `n ≥ 2`.
pub fn evaluate_word(w: &GenWord) -> Result<PolyMatrix> {
    RepImage::new(w.n())?.evaluate(w)
}

pub fn generator_automorphism(n: usize, g: GenLetter) -> Result<FreeAutomorphism> {
    match g.kind {
        GenKind::Sigma => FreeAutomorphism::sigma(n, g.index, g.inverse),
        GenKind::Alpha => FreeAutomorphism::alpha(n, g.index),
    }
}

/// The automorphism `g_1 ∘ ... ∘ g_k` of `F_n` for `w = g_1 ... g_k`.
pub fn word_to_automorphism(w: &GenWord) -> Result<FreeAutomorphism> {
    let mut acc = FreeAutomorphism::identity(w.n());
    for &l in w.letters() {
        acc = acc.compose(&generator_automorphism(w.n(), l)?)?;
    }
    Ok(acc)
}

/// The generator matrices printed for `n = 3` and `n = 4`, entered as text.
pub mod golden {
    use super::*;

    fn grid(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().expect("golden entry parses")).collect())
                .collect(),
        )
        .expect("golden matrix is square")
    }

    const QQ1: &str = "q^2 - q";
    const OMQ: &str = "1 - q";

    /// `(letter, matrix)` pairs for `σ_1, σ_2, α_1, α_2` at `n = 3`.
    pub fn rank3() -> Vec<(GenLetter, PolyMatrix)> {
        vec![
            (
                GenLetter::sigma(1),
                grid(&[&["q^2", QQ1, "0"], &["0", OMQ, "1"], &["0", "q", "0"]]),
            ),
            (
                GenLetter::sigma(2),
                grid(&[&[OMQ, "1", "0"], &["q", "0", "0"], &[QQ1, "0", "q^2"]]),
            ),
            (
                GenLetter::alpha(1),
                grid(&[&["1", "0", "0"], &["0", "0", "1"], &["0", "1", "0"]]),
            ),
            (
                GenLetter::alpha(2),
                grid(&[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "1"]]),
            ),
        ]
    }

    /// `(letter, matrix)` pairs for `σ_1, σ_2, σ_3, α_1, α_2, α_3` at `n = 4`.
    pub fn rank4() -> Vec<(GenLetter, PolyMatrix)> {
        vec![
            (
                GenLetter::sigma(1),
                grid(&[
                    &["q^2", QQ1, QQ1, "0", "0", "0"],
                    &["0", OMQ, "0", "1", "0", "0"],
                    &["0", "0", OMQ, "0", "1", "0"],
                    &["0", "q", "0", "0", "0", "0"],
                    &["0", "0", "q", "0", "0", "0"],
                    &["0", "0", "0", "0", "0", "1"],
                ]),
            ),
            (
                GenLetter::sigma(2),
                grid(&[
                    &[OMQ, "1", "0", "0", "0", "0"],
                    &["q", "0", "0", "0", "0", "0"],
                    &["0", "0", "1", "0", "0", "0"],
                    &[QQ1, "0", "0", "q^2", QQ1, "0"],
                    &["0", "0", "0", "0", OMQ, "1"],
                    &["0", "0", "0", "0", "q", "0"],
                ]),
            ),
            (
                GenLetter::sigma(3),
                grid(&[
                    &["1", "0", "0", "0", "0", "0"],
                    &["0", OMQ, "1", "0", "0", "0"],
                    &["0", "q", "0", "0", "0", "0"],
                    &["0", "0", "0", OMQ, "1", "0"],
                    &["0", "0", "0", "q", "0", "0"],
                    &["0", QQ1, "0", QQ1, "0", "q^2"],
                ]),
            ),
            (
                GenLetter::alpha(1),
                grid(&[
                    &["1", "0", "0", "0", "0", "0"],
                    &["0", "0", "0", "1", "0", "0"],
                    &["0", "0", "0", "0", "1", "0"],
                    &["0", "1", "0", "0", "0", "0"],
                    &["0", "0", "1", "0", "0", "0"],
                    &["0", "0", "0", "0", "0", "1"],
                ]),
            ),
            (
                GenLetter::alpha(2),
                grid(&[
                    &["0", "1", "0", "0", "0", "0"],
                    &["1", "0", "0", "0", "0", "0"],
                    &["0", "0", "1", "0", "0", "0"],
                    &["0", "0", "0", "1", "0", "0"],
                    &["0", "0", "0", "0", "0", "1"],
                    &["0", "0", "0", "0", "1", "0"],
                ]),
            ),
            (
                GenLetter::alpha(3),
                grid(&[
                    &["1", "0", "0", "0", "0", "0"],
                    &["0", "0", "1", "0", "0", "0"],
                    &["0", "1", "0", "0", "0", "0"],
                    &["0", "0", "0", "0", "1", "0"],
                    &["0", "0", "0", "1", "0", "0"],
                    &["0", "0", "0", "0", "0", "1"],
                ]),
            ),
        ]
    }
}

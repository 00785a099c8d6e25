//! Meet-in-the-middle search for nontrivial kernel words.
//!
//! A reduced word `u·h` with `|u| = half_len` lies in the kernel exactly when
//! `ρ(u) = ρ(h)^{-1}`. Forward halves `u` are tabulated by a modular
//! fingerprint of `ρ(u)` together with their permutation; backward halves
//! `h` are fingerprinted through `ρ(h)^{-1}` and looked up. Words shorter than
//! `half_len` are tested directly. Every joined candidate is confirmed with
//! the automorphism action and exact symbolic evaluation.
//!
//! For `n ≥ 3` the specialization of `ρ(w)` at `q = 1` is the permutation
//! matrix of the action of `w` on pairs, so kernel words have identity
//! permutation and the join also matches permutations. At `n = 2` there is
//! a single pair and the permutation is not visible to `ρ`.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{verify_kernel_with, Conclusion, KernelVerdict};
use crate::error::{Error, Result};
use crate::laurent::{ModularValue, MODULUS};
use crate::matrix::ModularMatrix;
use crate::perm::Permutation;
use crate::rep::{word_to_automorphism, ModularGenerators, RepImage};
use crate::word::{GenLetter, GenWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub max_len: usize,
    pub half_len: usize,
    pub seed: u64,
    pub specializations: usize,
    pub threads: usize,
}

impl SearchConfig {
    /// Defaults: `half_len = ⌈max_len/2⌉`, seed 0, two specialization
    /// points, one thread per available core.
    pub fn new(n: usize, max_len: usize) -> Self {
        Self {
            n,
            max_len,
            half_len: max_len.div_ceil(2),
            seed: 0,
            specializations: 2,
            threads: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n < 2 {
            return bad(format!("rank must be at least 2, got {}", self.n));
        }
        if self.max_len == 0 {
            return bad("max_len must be positive".into());
        }
        if self.half_len > self.max_len {
            return bad(format!("half_len {} exceeds max_len {}", self.half_len, self.max_len));
        }
        if self.specializations < 2 {
            return bad(format!("need at least 2 specializations, got {}", self.specializations));
        }
        if self.threads == 0 {
            return bad("thread count must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub forward_halves: usize,
    pub backward_halves: usize,
    /// Distinct reduced words whose fingerprint and permutation matched.
    pub candidates: usize,
    /// Candidates equal to 1 in `C_n`.
    pub trivial: usize,
    /// Candidates whose exact image is not the identity.
    pub false_matches: usize,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub found: Vec<KernelVerdict>,
    pub stats: SearchStats,
}

/// Confirmed nontrivial kernel words of length at most `max_len`, freely
/// reduced, sorted by length then text.
pub fn search_kernel(cfg: &SearchConfig) -> Result<Vec<KernelVerdict>> {
    Ok(search_kernel_report(cfg)?.found)
}

pub fn search_kernel_report(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    pool.install(|| run(cfg))
}

/// Fingerprint of one matrix tuple: a polynomial hash of the entries at each
/// point, each lane with its own random base.
type Key = (Vec<u64>, Permutation);

type Visitor<'a> = dyn FnMut(&[GenLetter], &[ModularMatrix], &Permutation) + 'a;

/// Forward halves of full length with their keys, and shorter kernel candidates.
type ForwardPart = (Vec<(Vec<GenLetter>, Key)>, Vec<Vec<GenLetter>>);

struct Searcher {
    n: usize,
    alphabet: Vec<GenLetter>,
    gens: Vec<ModularGenerators>,
    bases: Vec<u64>,
}

impl Searcher {
    /// Permutation stored in join keys: the real one when it is determined
    /// by `ρ`, otherwise a constant.
    fn key_perm(&self, perm: &Permutation) -> Permutation {
        if self.n >= 3 {
            perm.clone()
        } else {
            Permutation::identity(self.n)
        }
    }

    fn new(cfg: &SearchConfig, rep: &RepImage) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut gens = Vec::with_capacity(cfg.specializations);
        let mut bases = Vec::with_capacity(cfg.specializations);
        for _ in 0..cfg.specializations {
            let q0 = ModularValue::new(rng.gen_range(2..MODULUS - 1));
            gens.push(rep.specialize_mod(q0)?);
            bases.push(rng.gen_range(2..MODULUS - 1));
        }
        let mut alphabet = Vec::new();
        for i in 1..cfg.n {
            alphabet.extend([GenLetter::sigma(i), GenLetter::sigma_inv(i), GenLetter::alpha(i)]);
        }
        Ok(Self {
            n: cfg.n,
            alphabet,
            gens,
            bases,
        })
    }

    fn identity(&self) -> Vec<ModularMatrix> {
        let dim = self.n * (self.n - 1) / 2;
        vec![ModularMatrix::identity(dim, MODULUS); self.gens.len()]
    }

    fn fingerprint(&self, ms: &[ModularMatrix]) -> Vec<u64> {
        ms.iter()
            .zip(&self.bases)
            .map(|(m, &r)| {
                m.entries().iter().fold(0u64, |acc, &e| {
                    let v = ModularValue::new(acc).mul(ModularValue::new(r));
                    v.add(ModularValue::new(e)).residue()
                })
            })
            .collect()
    }

    /// `ρ(w·x)` from `ρ(w)`.
    fn step_forward(&self, ms: &[ModularMatrix], x: GenLetter) -> Vec<ModularMatrix> {
        ms.iter()
            .zip(&self.gens)
            .map(|(m, g)| m.mul(g.generator(x)).expect("dims agree"))
            .collect()
    }

    /// `ρ(h·x)^{-1}` from `ρ(h)^{-1}`.
    fn step_backward(&self, ms: &[ModularMatrix], x: GenLetter) -> Vec<ModularMatrix> {
        ms.iter()
            .zip(&self.gens)
            .map(|(m, g)| g.generator(x.inv()).mul(m).expect("dims agree"))
            .collect()
    }

    /// Visits every reduced word of length `1..=max` starting with `first`,
    /// carrying the matrix tuple and permutation (or their inverses when
    /// `backward`).
    fn walk(
        &self,
        first: GenLetter,
        max: usize,
        backward: bool,
        visit: &mut Visitor<'_>,
    ) {
        if max == 0 {
            return;
        }
        let mut word = vec![first];
        let start = self.identity();
        let id = Permutation::identity(self.n);
        let (ms, perm) = self.step(&start, &id, first, backward);
        self.walk_from(&mut word, &ms, &perm, max, backward, visit);
    }

    fn step(
        &self,
        ms: &[ModularMatrix],
        perm: &Permutation,
        x: GenLetter,
        backward: bool,
    ) -> (Vec<ModularMatrix>, Permutation) {
        let t = x.transposition(self.n);
        if backward {
            (self.step_backward(ms, x), t.compose(perm))
        } else {
            (self.step_forward(ms, x), perm.compose(&t))
        }
    }

    fn walk_from(
        &self,
        word: &mut Vec<GenLetter>,
        ms: &[ModularMatrix],
        perm: &Permutation,
        max: usize,
        backward: bool,
        visit: &mut Visitor<'_>,
    ) {
        visit(word, ms, perm);
        if word.len() == max {
            return;
        }
        let last = *word.last().expect("nonempty");
        for &x in &self.alphabet {
            if x.is_inverse_of(last) {
                continue;
            }
            let (next, next_perm) = self.step(ms, perm, x, backward);
            word.push(x);
            self.walk_from(word, &next, &next_perm, max, backward, visit);
            word.pop();
        }
    }
}

fn run(cfg: &SearchConfig) -> Result<SearchReport> {
    let rep = RepImage::new(cfg.n)?;
    let s = Searcher::new(cfg, &rep)?;
    let half = cfg.half_len;
    let back_max = cfg.max_len - half;
    let id_key: Key = (s.fingerprint(&s.identity()), Permutation::identity(cfg.n));

    // forward halves of length exactly `half`, plus shorter words that are
    // candidates on their own
    let per_letter: Vec<ForwardPart> = s
        .alphabet
        .par_iter()
        .map(|&first| {
            let mut table = Vec::new();
            let mut short = Vec::new();
            s.walk(first, half, false, &mut |w, ms, perm| {
                if w.len() == half {
                    table.push((w.to_vec(), (s.fingerprint(ms), s.key_perm(perm))));
                } else if s.key_perm(perm).is_identity() && s.fingerprint(ms) == id_key.0 {
                    short.push(w.to_vec());
                }
            });
            (table, short)
        })
        .collect();

    let mut stats = SearchStats::default();
    let mut forward: Vec<Vec<GenLetter>> = Vec::new();
    let mut index: HashMap<Key, Vec<usize>> = HashMap::new();
    let mut candidates: BTreeSet<Vec<GenLetter>> = BTreeSet::new();
    for (table, short) in per_letter {
        for (w, key) in table {
            index.entry(key).or_default().push(forward.len());
            forward.push(w);
        }
        candidates.extend(short);
    }
    if half == 0 {
        forward.push(Vec::new());
        index.entry(id_key.clone()).or_default().push(0);
    }
    stats.forward_halves = forward.len();

    // an empty backward half pairs with forward words that are kernel words
    if let Some(hits) = index.get(&id_key) {
        candidates.extend(hits.iter().map(|&i| forward[i].clone()).filter(|w| !w.is_empty()));
    }

    let joined: Vec<(usize, BTreeSet<Vec<GenLetter>>)> = s
        .alphabet
        .par_iter()
        .map(|&first| {
            let mut seen = 0;
            let mut found = BTreeSet::new();
            s.walk(first, back_max, true, &mut |h, ms, perm| {
                seen += 1;
                let key = (s.fingerprint(ms), s.key_perm(perm));
                let Some(hits) = index.get(&key) else { return };
                for &i in hits {
                    let u = &forward[i];
                    if u.last().is_some_and(|&l| l.is_inverse_of(h[0])) {
                        // not reduced; its reduction is a shorter word
                        continue;
                    }
                    let mut w = u.clone();
                    w.extend_from_slice(h);
                    found.insert(w);
                }
            });
            (seen, found)
        })
        .collect();
    for (seen, found) in joined {
        stats.backward_halves += seen;
        candidates.extend(found);
    }
    stats.candidates = candidates.len();

    let checked: Vec<Result<Option<KernelVerdict>>> = candidates
        .into_par_iter()
        .map(|letters| {
            let w = GenWord::new(cfg.n, letters)?;
            if word_to_automorphism(&w)?.is_identity() {
                return Ok(None);
            }
            let v = verify_kernel_with(&rep, &w)?;
            Ok(Some(v))
        })
        .collect();

    let mut found = Vec::new();
    for c in checked {
        match c? {
            None => stats.trivial += 1,
            Some(v) if v.conclusion == Conclusion::InKernelNontrivial => found.push(v),
            Some(_) => stats.false_matches += 1,
        }
    }
    found.sort_by_cached_key(|v| (v.word.len(), v.word.to_string()));
    Ok(SearchReport { found, stats })
}

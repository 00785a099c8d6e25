#![allow(dead_code)]

use std::collections::BTreeMap;

use conjrep::{build_generator, word_to_automorphism, GenLetter, GenWord, LaurentPoly};
use num_traits::ToPrimitive;
use proptest::prelude::*;

pub fn alphabet(n: usize) -> Vec<GenLetter> {
    (1..n)
        .flat_map(|i| [GenLetter::sigma(i), GenLetter::sigma_inv(i), GenLetter::alpha(i)])
        .collect()
}

pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -6i64..=6), 0..5).prop_map(LaurentPoly::from_terms)
}

pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = GenWord> {
    let letters = alphabet(n);
    prop::collection::vec(prop::sample::select(letters), 0..=max_len)
        .prop_map(move |ls| GenWord::new(n, ls).unwrap())
}

/// A rank in `2..=max_n` together with a word of that rank.
pub fn ranked_word(max_n: usize, max_len: usize) -> impl Strategy<Value = GenWord> {
    (2..=max_n).prop_flat_map(move |n| word(n, max_len))
}

/// Dense Laurent polynomial with `i128` coefficients and checked arithmetic,
/// independent of the library's `BigInt` representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dense {
    lo: i64,
    c: Vec<i128>,
}

impl Dense {
    fn zero() -> Self {
        Dense { lo: 0, c: Vec::new() }
    }

    fn constant(v: i128) -> Self {
        Dense { lo: 0, c: vec![v] }.trim()
    }

    fn from_poly(p: &LaurentPoly) -> Self {
        let map: BTreeMap<i64, i128> = p.terms().map(|(k, c)| (k, c.to_i128().unwrap())).collect();
        let Some((&lo, _)) = map.iter().next() else {
            return Dense::zero();
        };
        let hi = *map.keys().last().unwrap();
        let mut c = vec![0; (hi - lo + 1) as usize];
        for (k, v) in map {
            c[(k - lo) as usize] = v;
        }
        Dense { lo, c }
    }

    fn trim(mut self) -> Self {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|&&v| v == 0).count();
        if lead == self.c.len() {
            return Dense::zero();
        }
        self.c.drain(..lead);
        self.lo += lead as i64;
        self
    }

    fn add(&self, o: &Dense) -> Dense {
        if self.c.is_empty() {
            return o.clone();
        }
        if o.c.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(o.lo);
        let hi = (self.lo + self.c.len() as i64).max(o.lo + o.c.len() as i64);
        let mut c = vec![0i128; (hi - lo) as usize];
        for (i, v) in self.c.iter().enumerate() {
            c[(self.lo - lo) as usize + i] += v;
        }
        for (i, v) in o.c.iter().enumerate() {
            let slot = &mut c[(o.lo - lo) as usize + i];
            *slot = slot.checked_add(*v).expect("coefficient overflow");
        }
        Dense { lo, c }.trim()
    }

    fn mul(&self, o: &Dense) -> Dense {
        if self.c.is_empty() || o.c.is_empty() {
            return Dense::zero();
        }
        let mut c = vec![0i128; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                let t = a.checked_mul(*b).expect("coefficient overflow");
                c[i + j] = c[i + j].checked_add(t).expect("coefficient overflow");
            }
        }
        Dense { lo: self.lo + o.lo, c }.trim()
    }
}

type DenseMatrix = Vec<Vec<Dense>>;

fn dense_identity(d: usize) -> DenseMatrix {
    (0..d)
        .map(|i| (0..d).map(|j| Dense::constant((i == j) as i128)).collect())
        .collect()
}

fn dense_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(Dense::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

/// Every freely reduced word of length `1..=max_len` whose exact image is
/// the identity and whose automorphism is not, by plain depth-first search.
pub fn brute_force_kernel(n: usize, max_len: usize) -> Vec<GenWord> {
    let letters = alphabet(n);
    let gens: Vec<DenseMatrix> = letters
        .iter()
        .map(|&l| {
            let m = build_generator(n, l).unwrap();
            m.rows().map(|r| r.iter().map(Dense::from_poly).collect()).collect()
        })
        .collect();
    let d = n * (n - 1) / 2;
    let id = dense_identity(d);
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<usize>, DenseMatrix)> = vec![(Vec::new(), id.clone())];
    while let Some((w, m)) = stack.pop() {
        if !w.is_empty() && m == id {
            let gw = GenWord::new(n, w.iter().map(|&i| letters[i]).collect()).unwrap();
            if !word_to_automorphism(&gw).unwrap().is_identity() {
                out.push(gw);
            }
        }
        if w.len() == max_len {
            continue;
        }
        for (i, g) in gens.iter().enumerate() {
            if w.last().is_some_and(|&j| letters[j].is_inverse_of(letters[i])) {
                continue;
            }
            let mut next = w.clone();
            next.push(i);
            stack.push((next, dense_mul(&m, g)));
        }
    }
    out.sort_by_cached_key(|w| (w.len(), w.to_string()));
    out
}

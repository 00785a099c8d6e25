use std::fmt;

use serde::{Serialize, Serializer};

/// A permutation of `{1, ..., n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(i i+1)`, 1-based.
    pub fn adjacent_transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "transposition ({i} {}) outside 1..={n}", i + 1);
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// From 1-based images, `None` if they are not a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return None;
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Some(Self { images: zero_based })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, each starting at its smallest point, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation such as `(1 2)(3 4)`; the identity prints as `id`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_order() {
        let a = Permutation::adjacent_transposition(3, 1);
        let b = Permutation::adjacent_transposition(3, 2);
        // (a ∘ b)(3) = a(2) = 1
        assert_eq!(a.compose(&b).apply(3), 1);
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
        assert_eq!(b.compose(&a).to_string(), "(1 3 2)");
        assert!(a.compose(&a).is_identity());
    }

    #[test]
    fn inverse_and_display() {
        let p = Permutation::from_images(&[2, 3, 1, 4]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert!(Permutation::from_images(&[1, 1]).is_none());
        assert!(Permutation::from_images(&[0, 1]).is_none());
    }
}

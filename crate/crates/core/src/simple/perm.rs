use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{BraidError, Result};

/// A permutation `f` of `{1, ..., n}`.
///
/// Composition is `(f ∘ g)(i) = f(g(i))`. Under the braid-to-permutation map
/// `σ_i` goes to the transposition `(i, i+1)` and `π(xy) = π(x) ∘ π(y)`, so
/// the strand ending at position `i` starts at position `f(i)`.
///
/// Both `f` and `f^{-1}` are stored (0-based) so that descent and recoil
/// queries are constant time.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u16>,
    preimage: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u16::MAX as usize + 1, "strand count too large");
        let image: Vec<u16> = (0..n as u32).map(|i| i as u16).collect();
        Permutation { preimage: image.clone(), image }
    }

    /// `ω_n(i) = n - i + 1`.
    pub fn reversal(n: usize) -> Self {
        let image: Vec<u16> = (0..n as u32).rev().map(|i| i as u16).collect();
        Permutation { preimage: image.clone(), image }
    }

    /// Build from the one-line notation `(f(1), ..., f(n))`, 1-based.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut preimage = vec![u16::MAX; n];
        let mut image = Vec::with_capacity(n);
        for (pos, &v) in images.iter().enumerate() {
            if v == 0 || v > n || preimage[v - 1] != u16::MAX {
                return Err(BraidError::InvalidPermutation(n));
            }
            preimage[v - 1] = pos as u16;
            image.push((v - 1) as u16);
        }
        Ok(Permutation { image, preimage })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize + 1).collect()
    }

    /// `f(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { image: self.preimage.clone(), preimage: self.image.clone() }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composition of permutations of different sizes");
        let image: Vec<u16> = other.image.iter().map(|&g| self.image[g as usize]).collect();
        let mut preimage = vec![0u16; image.len()];
        for (pos, &v) in image.iter().enumerate() {
            preimage[v as usize] = pos as u16;
        }
        Permutation { image, preimage }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `f(i) > f(i+1)`.
    pub fn is_descent(&self, i: usize) -> bool {
        self.image[i - 1] > self.image[i]
    }

    /// `f^{-1}(i) > f^{-1}(i+1)`.
    pub fn is_recoil(&self, i: usize) -> bool {
        self.preimage[i - 1] > self.preimage[i]
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_descent(i)).collect()
    }

    pub fn recoils(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.is_recoil(i)).collect()
    }

    /// `self ← self ∘ (i, i+1)`.
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.image.swap(i - 1, i);
        self.preimage[self.image[i - 1] as usize] = (i - 1) as u16;
        self.preimage[self.image[i] as usize] = i as u16;
    }

    /// `self ← (i, i+1) ∘ self`.
    pub(crate) fn swap_values(&mut self, i: usize) {
        self.preimage.swap(i - 1, i);
        self.image[self.preimage[i - 1] as usize] = (i - 1) as u16;
        self.image[self.preimage[i] as usize] = i as u16;
    }

    /// Compact key for small `n` (3 bits per entry, `n <= 8`).
    pub(crate) fn pack(&self) -> u32 {
        debug_assert!(self.n() <= 8);
        self.image.iter().rev().fold(0u32, |acc, &v| (acc << 3) | u32::from(v))
    }

    pub(crate) fn unpack(n: usize, mut packed: u32) -> Permutation {
        let mut image = Vec::with_capacity(n);
        let mut preimage = vec![0u16; n];
        for pos in 0..n {
            let v = (packed & 7) as u16;
            packed >>= 3;
            preimage[v as usize] = pos as u16;
            image.push(v);
        }
        Permutation { image, preimage }
    }

    /// All `n!` permutations, in lexicographic order of their one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::from_images(&current).expect("valid by construction"));
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| current[k] < current[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| current[k] < current[l]).expect("exists");
            current.swap(k, l);
            current[k + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

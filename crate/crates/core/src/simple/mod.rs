//! Simple braids (divisors of `Δ_n`) and the lattice primitives on them.
//!
//! Every simple braid is determined by its permutation, so a [`SimpleBraid`]
//! is stored as one. Three mechanisms are used for the lattice operations:
//! atom stripping for `gcd_L`, left redressing of canonical words for left
//! complements (C-tiles), and local letter transfer for head/tail splitting
//! (P-tiles).

mod memo;
mod perm;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use self::perm::Permutation;
use crate::error::{BraidError, Result};
use crate::redress;
use crate::word::{BraidWord, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A simple braid, identified with its permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimpleBraid(Permutation);

impl SimpleBraid {
    pub fn identity(n: usize) -> Self {
        SimpleBraid(Permutation::identity(n))
    }

    /// The half twist `Δ_n`, whose permutation is `ω_n`.
    pub fn delta(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        Ok(SimpleBraid(Permutation::reversal(n)))
    }

    /// The generator `σ_i` as a simple braid.
    pub fn atom(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.swap_positions(i);
        SimpleBraid(p)
    }

    pub fn from_perm(perm: Permutation) -> Self {
        SimpleBraid(perm)
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        Permutation::from_images(images).map(SimpleBraid)
    }

    /// The simple braid represented by a positive word, if it is simple
    /// (i.e. no two strands cross twice).
    pub fn from_word(w: &BraidWord) -> Result<Option<Self>> {
        let perm = perm_of_positive_word(w)?;
        Ok((perm.inversions() == w.len()).then_some(SimpleBraid(perm)))
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// Word length, equal to the inversion count.
    pub fn length(&self) -> usize {
        self.0.inversions()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        (1..=n).all(|i| self.0.apply(i) == n + 1 - i)
    }

    /// Canonical positive word: peel off the smallest left-dividing
    /// generator until nothing is left.
    pub fn to_word(&self) -> BraidWord {
        let mut rest = self.0.clone();
        let mut letters = Vec::with_capacity(rest.inversions());
        while let Some(i) = (1..rest.n()).find(|&i| rest.is_recoil(i)) {
            letters.push(Letter::pos(i));
            rest.swap_values(i);
        }
        BraidWord::from_letters_unchecked(self.n().max(2), letters)
    }

    /// Generators dividing `self` on the given side: recoils on the left,
    /// descents on the right.
    pub fn divisor_atoms(&self, side: Side) -> Vec<usize> {
        match side {
            Side::Left => self.0.recoils(),
            Side::Right => self.0.descents(),
        }
    }

    pub fn has_left_atom(&self, i: usize) -> bool {
        self.0.is_recoil(i)
    }

    pub fn has_right_atom(&self, i: usize) -> bool {
        self.0.is_descent(i)
    }

    /// Right dual `s*` with `s s* = Δ`, or left dual `*s` with `*s s = Δ`.
    pub fn dual(&self, side: Side) -> SimpleBraid {
        let omega = Permutation::reversal(self.n());
        let inv = self.0.inverse();
        match side {
            Side::Right => SimpleBraid(inv.compose(&omega)),
            Side::Left => SimpleBraid(omega.compose(&inv)),
        }
    }

    /// Conjugate by `Δ`: `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> SimpleBraid {
        let omega = Permutation::reversal(self.n());
        SimpleBraid(omega.compose(&self.0).compose(&omega))
    }

    /// `self · other` when the product is again simple.
    pub fn mul(&self, other: &SimpleBraid) -> Option<SimpleBraid> {
        let product = self.0.compose(&other.0);
        (product.inversions() == self.length() + other.length()).then_some(SimpleBraid(product))
    }

    /// The simple `r` with `self · r = other`, when `self` left-divides `other`.
    pub fn left_quotient(&self, other: &SimpleBraid) -> Option<SimpleBraid> {
        let r = self.0.inverse().compose(&other.0);
        (r.inversions() + self.length() == other.length()).then_some(SimpleBraid(r))
    }

    pub fn left_divides(&self, other: &SimpleBraid) -> Result<bool> {
        Ok(&gcd_left(self, other)? == self)
    }

    /// `self · σ_i`; `i` must not already right-divide.
    pub(crate) fn push_right(&mut self, i: usize) {
        debug_assert!(!self.0.is_descent(i));
        self.0.swap_positions(i);
    }

    /// Remove a left-dividing `σ_i`.
    pub(crate) fn strip_left(&mut self, i: usize) {
        debug_assert!(self.0.is_recoil(i));
        self.0.swap_values(i);
    }

    /// `σ_i · self`; `i` must not already left-divide.
    pub(crate) fn push_left(&mut self, i: usize) {
        debug_assert!(!self.0.is_recoil(i));
        self.0.swap_values(i);
    }

    /// All `n!` simple braids.
    pub fn all(n: usize) -> Vec<SimpleBraid> {
        Permutation::all(n).into_iter().map(SimpleBraid).collect()
    }
}

impl fmt::Display for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

/// `π(w)` for a positive word `w`.
pub fn perm_of_positive_word(w: &BraidWord) -> Result<Permutation> {
    let mut p = Permutation::identity(w.n());
    for l in w.letters() {
        if !l.is_positive() {
            return Err(BraidError::NotPositive);
        }
        p.swap_positions(l.index());
    }
    Ok(p)
}

fn same_size(a: &SimpleBraid, b: &SimpleBraid) -> Result<()> {
    if a.n() != b.n() {
        return Err(BraidError::StrandMismatch(a.n(), b.n()));
    }
    Ok(())
}

/// Greatest common left divisor.
pub fn gcd_left(s: &SimpleBraid, t: &SimpleBraid) -> Result<SimpleBraid> {
    same_size(s, t)?;
    Ok(memo::gcd_left(s, t))
}

/// Left complements `(s/t, t/s)`: `(s/t)·t = (t/s)·s = lcm_L(s, t)`.
pub fn c_tile(s: &SimpleBraid, t: &SimpleBraid) -> Result<(SimpleBraid, SimpleBraid)> {
    same_size(s, t)?;
    Ok(memo::c_tile(s, t))
}

/// Normal form `(s1, s2)` of the product `t1 t2`; `s1` is its head.
pub fn normalize_pair(t1: &SimpleBraid, t2: &SimpleBraid) -> Result<(SimpleBraid, SimpleBraid)> {
    same_size(t1, t2)?;
    Ok(memo::normalize_pair(t1, t2))
}

/// `lcm_L(s, t)`.
pub fn lcm_left(s: &SimpleBraid, t: &SimpleBraid) -> Result<SimpleBraid> {
    let (s_over_t, _) = c_tile(s, t)?;
    Ok(s_over_t.mul(t).expect("left lcm of simple braids is simple"))
}

pub(crate) fn gcd_left_raw(s: &SimpleBraid, t: &SimpleBraid) -> SimpleBraid {
    let n = s.n();
    let mut s = s.clone();
    let mut t = t.clone();
    let mut g = SimpleBraid::identity(n);
    while let Some(i) = (1..n).find(|&i| s.has_left_atom(i) && t.has_left_atom(i)) {
        s.strip_left(i);
        t.strip_left(i);
        g.push_right(i);
    }
    g
}

pub(crate) fn c_tile_raw(s: &SimpleBraid, t: &SimpleBraid) -> (SimpleBraid, SimpleBraid) {
    // s t^{-1} left-redresses to v^{-1} u with v s = u t = lcm_L(s, t).
    let w = s.to_word().concat(&t.to_word().inverse()).expect("same strand count");
    let (v, u) = redress::redress_left(&w);
    let as_simple = |x: &BraidWord| {
        SimpleBraid::from_word(x)
            .expect("redressing yields positive words")
            .expect("complements of simple braids are simple")
    };
    (as_simple(&u), as_simple(&v))
}

pub(crate) fn normalize_pair_raw(t1: &SimpleBraid, t2: &SimpleBraid) -> (SimpleBraid, SimpleBraid) {
    let n = t1.n();
    let mut s1 = t1.clone();
    let mut s2 = t2.clone();
    // Move σ_i from the front of s2 to the back of s1 while s2 has a left
    // atom that s1 lacks on the right.
    while let Some(i) = (1..n).find(|&i| s2.has_left_atom(i) && !s1.has_right_atom(i)) {
        s1.push_right(i);
        s2.strip_left(i);
    }
    (s1, s2)
}

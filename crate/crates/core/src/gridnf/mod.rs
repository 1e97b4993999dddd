//! Greedy and symmetric normal forms, built from C-tiles and P-tiles.
//!
//! A P-tile splits the product of two simples into head and tail
//! ([`normalize_pair`]); a C-tile computes left complements ([`c_tile`]).
//! Sweeping a simple braid across a normal sequence with either kind of
//! tile yields a normal sequence again, which is all the incremental
//! algorithms below need.

mod greedy;
mod grid;
mod symmetric;

pub use self::greedy::{greedy_div_simple, greedy_mul_simple, greedy_nf, greedy_nf_counted, GreedyNF, Grouping};
pub use self::grid::{grid_product, grid_quotient, ComplementGrid, ProductGrid, Quotient};
pub use self::symmetric::{symmetric_nf, symmetric_nf_counted, symmetric_push, Push, SymmetricNF};

use crate::error::{BraidError, Result};
use crate::simple::{c_tile, normalize_pair, Side, SimpleBraid};
use crate::word::{common_embedding, BraidWord, Letter};

/// Which normal form to compare by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Form {
    #[default]
    Greedy,
    Symmetric,
}

fn check_sizes(n: usize, seq: &[SimpleBraid]) -> Result<()> {
    match seq.iter().find(|s| s.n() != n) {
        Some(s) => Err(BraidError::StrandMismatch(n, s.n())),
        None => Ok(()),
    }
}

/// Is every recoil of `seq[k+1]` a descent of `seq[k]`?
pub fn is_normal(seq: &[SimpleBraid]) -> Result<bool> {
    Ok(first_non_normal(seq)?.is_none())
}

/// Index `k` of the first pair `(seq[k], seq[k+1])` that is not normal.
pub fn first_non_normal(seq: &[SimpleBraid]) -> Result<Option<usize>> {
    if let Some(first) = seq.first() {
        check_sizes(first.n(), seq)?;
    }
    Ok(seq.windows(2).position(|p| !pair_is_normal(&p[0], &p[1])))
}

fn pair_is_normal(a: &SimpleBraid, b: &SimpleBraid) -> bool {
    b.divisor_atoms(Side::Left).into_iter().all(|i| a.has_right_atom(i))
}

fn require_normal(seq: &[SimpleBraid]) -> Result<()> {
    match first_non_normal(seq)? {
        Some(k) => Err(BraidError::NotNormal(k)),
        None => Ok(()),
    }
}

/// Right-to-left P-pass: the normal form of `s_1 ... s_p · u` is
/// `u_0 s'_1 ... s'_p`. Returns `(u_0, s')`.
pub(crate) fn p_pass_rtl(seq: &[SimpleBraid], u: SimpleBraid, tiles: &mut u64) -> (SimpleBraid, Vec<SimpleBraid>) {
    let mut out = seq.to_vec();
    let mut carry = u;
    for k in (0..seq.len()).rev() {
        if carry.is_identity() {
            break;
        }
        let (head, tail) = normalize_pair(&seq[k], &carry).expect("same strand count");
        *tiles += 1;
        out[k] = tail;
        carry = head;
    }
    (carry, out)
}

/// Left-to-right P-pass: the normal form of `u · t_1 ... t_q` is
/// `t'_1 ... t'_q v_q`. Returns `(t', v_q)`.
pub(crate) fn p_pass_ltr(u: SimpleBraid, seq: &[SimpleBraid], tiles: &mut u64) -> (Vec<SimpleBraid>, SimpleBraid) {
    let mut out = Vec::with_capacity(seq.len());
    let mut carry = u;
    for t in seq {
        let (head, tail) = normalize_pair(&carry, t).expect("same strand count");
        *tiles += 1;
        out.push(head);
        carry = tail;
    }
    (out, carry)
}

/// Right-to-left C-pass: `s_1 ... s_p · u^{-1} = u_0^{-1} · s'_1 ... s'_p`.
/// Returns `(s', u_0)`.
pub(crate) fn c_pass_rtl(seq: &[SimpleBraid], u: SimpleBraid, tiles: &mut u64) -> (Vec<SimpleBraid>, SimpleBraid) {
    let mut out = seq.to_vec();
    let mut carry = u;
    for k in (0..seq.len()).rev() {
        if carry.is_identity() {
            break;
        }
        let (s_over, u_over) = c_tile(&seq[k], &carry).expect("same strand count");
        *tiles += 1;
        out[k] = s_over;
        carry = u_over;
    }
    (out, carry)
}

/// Normal form of `u · seq` for a normal `seq`, identities removed.
pub(crate) fn left_multiply(u: SimpleBraid, seq: &[SimpleBraid], tiles: &mut u64) -> Vec<SimpleBraid> {
    if u.is_identity() {
        return seq.to_vec();
    }
    let (mut out, last) = p_pass_ltr(u, seq, tiles);
    out.push(last);
    strip_identities(out)
}

pub(crate) fn strip_identities(mut seq: Vec<SimpleBraid>) -> Vec<SimpleBraid> {
    seq.retain(|s| !s.is_identity());
    seq
}

/// Normal form of an arbitrary product of simples, identities removed.
pub(crate) fn normalize_sequence(seq: &[SimpleBraid], tiles: &mut u64) -> Vec<SimpleBraid> {
    let mut out: Vec<SimpleBraid> = Vec::new();
    for s in seq {
        let (head, rest) = p_pass_rtl(&out, s.clone(), tiles);
        out.clear();
        out.push(head);
        out.extend(rest);
        out = strip_identities(out);
    }
    out
}

/// Canonical word of each factor, concatenated.
pub(crate) fn sequence_word(n: usize, seq: &[SimpleBraid]) -> BraidWord {
    let letters: Vec<Letter> = seq.iter().flat_map(|s| s.to_word().into_letters()).collect();
    BraidWord::new(n, letters).expect("factor words fit")
}

/// Do `w1` and `w2` represent the same braid? Words on different strand
/// counts are compared in the larger group.
pub fn equal(w1: &BraidWord, w2: &BraidWord, form: Form) -> bool {
    let (a, b) = common_embedding(w1, w2);
    match form {
        Form::Greedy => greedy_nf(&a) == greedy_nf(&b),
        Form::Symmetric => symmetric_nf(&a) == symmetric_nf(&b),
    }
}

/// Human-readable list of factors: canonical words in alpha format, or
/// one-line permutations beyond the alpha range.
fn write_factors(f: &mut std::fmt::Formatter<'_>, seq: &[SimpleBraid]) -> std::fmt::Result {
    for (k, s) in seq.iter().enumerate() {
        if k > 0 {
            f.write_str(", ")?;
        }
        match s.to_word().render(crate::word::Format::Alpha) {
            Ok(text) => f.write_str(&text)?,
            Err(_) => write!(f, "{s}")?,
        }
    }
    Ok(())
}

/// Splits a word into maximal same-sign blocks, each a simple braid.
///
/// A positive block `σ_{i_1} ... σ_{i_k}` becomes the simple braid it
/// spells; a negative block `σ_{i_1}^{-1} ... σ_{i_k}^{-1}` becomes the
/// simple `u` with block `= u^{-1}`. With [`Grouping::PerLetter`] every
/// letter is its own block.
pub(crate) fn blocks(w: &BraidWord, grouping: Grouping) -> Vec<(SimpleBraid, bool)> {
    let n = w.n();
    let mut out: Vec<(SimpleBraid, bool)> = Vec::new();
    for &l in w.letters() {
        let i = l.index();
        let positive = l.is_positive();
        if grouping == Grouping::Runs {
            if let Some((u, sign)) = out.last_mut() {
                if *sign == positive {
                    if positive && !u.has_right_atom(i) {
                        u.push_right(i);
                        continue;
                    }
                    if !positive && !u.has_left_atom(i) {
                        u.push_left(i);
                        continue;
                    }
                }
            }
        }
        out.push((SimpleBraid::atom(n, i), positive));
    }
    out
}

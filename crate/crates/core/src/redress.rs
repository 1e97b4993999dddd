//! Word redressing (reversing).
//!
//! Right redressing rewrites a negative-positive pattern `σ_i^{-1} σ_j` into
//! a positive-negative one until the word has the shape `u v^{-1}`; left
//! redressing is its mirror image and ends with `v^{-1} u`. The final
//! fraction does not depend on the order in which patterns are rewritten.

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Letter};

/// Which pattern to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// The two triviality tests built on redressing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `w ⟿ u v^{-1}`, then `v^{-1} u ⟿ u' v'^{-1}`.
    DoubleRight,
    /// `w ⟿ u v^{-1}`, then left-redress `u v^{-1}` to `v''^{-1} u''`.
    RightThenLeft,
}

/// A pair of positive words together with the number of rewrites spent.
///
/// After right redressing the word is `positive · negative^{-1}`; after left
/// redressing it is `negative^{-1} · positive`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub positive: BraidWord,
    pub negative: BraidWord,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub trivial: bool,
    pub residue: BraidWord,
    pub steps: u64,
}

/// Replacement for `σ_i^{-1} σ_j`, in order.
fn rewrite(neg: Letter, pos: Letter, out: &mut Vec<Letter>) {
    let (i, j) = (neg.index(), pos.index());
    if i == j {
        return;
    }
    if i.abs_diff(j) >= 2 {
        out.extend([pos, neg]);
    } else {
        out.extend([pos, Letter::pos(i), Letter::neg(j), neg]);
    }
}

fn check_budget(steps: u64, budget: Option<u64>) -> Result<()> {
    match budget {
        Some(b) if steps > b => Err(BraidError::BudgetExhausted(b)),
        _ => Ok(()),
    }
}

/// Right redressing on raw letters. Returns the pattern-free result and the
/// number of rewrites.
fn right_letters(letters: &[Letter], strategy: Strategy, budget: Option<u64>) -> Result<(Vec<Letter>, u64)> {
    let mut steps = 0u64;
    let mut buf = Vec::with_capacity(4);
    match strategy {
        Strategy::Leftmost => {
            // `done` is a pattern-free prefix; `todo` holds the rest reversed.
            let mut done: Vec<Letter> = Vec::with_capacity(letters.len());
            let mut todo: Vec<Letter> = letters.iter().rev().copied().collect();
            while let Some(x) = todo.pop() {
                match done.last() {
                    Some(&top) if !top.is_positive() && x.is_positive() => {
                        done.pop();
                        steps += 1;
                        check_budget(steps, budget)?;
                        buf.clear();
                        rewrite(top, x, &mut buf);
                        todo.extend(buf.iter().rev());
                    }
                    _ => done.push(x),
                }
            }
            Ok((done, steps))
        }
        Strategy::Rightmost => {
            // `done` is a pattern-free suffix stored reversed; `todo` is the prefix.
            let mut done: Vec<Letter> = Vec::with_capacity(letters.len());
            let mut todo: Vec<Letter> = letters.to_vec();
            while let Some(x) = todo.pop() {
                match done.last() {
                    Some(&front) if !x.is_positive() && front.is_positive() => {
                        done.pop();
                        steps += 1;
                        check_budget(steps, budget)?;
                        buf.clear();
                        rewrite(x, front, &mut buf);
                        todo.extend(buf.iter());
                    }
                    _ => done.push(x),
                }
            }
            done.reverse();
            Ok((done, steps))
        }
    }
}

fn split_sign(n: usize, letters: &[Letter], positive_first: bool) -> (BraidWord, BraidWord) {
    let cut = letters.iter().position(|l| l.is_positive() != positive_first).unwrap_or(letters.len());
    let (a, b) = letters.split_at(cut);
    let a = BraidWord::from_letters_unchecked(n, a.to_vec());
    let b = BraidWord::from_letters_unchecked(n, b.to_vec());
    if positive_first {
        (a, b.inverse())
    } else {
        (a.inverse(), b)
    }
}

/// Right redressing with an explicit strategy and optional rewrite budget.
pub fn redress_right_with(w: &BraidWord, strategy: Strategy, budget: Option<u64>) -> Result<Fraction> {
    let (letters, steps) = right_letters(w.letters(), strategy, budget)?;
    let (positive, negative) = split_sign(w.n(), &letters, true);
    Ok(Fraction { positive, negative, steps })
}

/// Left redressing: reverse the letters, redress to the right, reverse back.
pub fn redress_left_with(w: &BraidWord, strategy: Strategy, budget: Option<u64>) -> Result<Fraction> {
    let mirrored = match strategy {
        Strategy::Leftmost => Strategy::Rightmost,
        Strategy::Rightmost => Strategy::Leftmost,
    };
    let reversed: Vec<Letter> = w.letters().iter().rev().copied().collect();
    let (mut letters, steps) = right_letters(&reversed, mirrored, budget)?;
    letters.reverse();
    let (negative, positive) = split_sign(w.n(), &letters, false);
    Ok(Fraction { positive, negative, steps })
}

/// `w ⟿ u v^{-1}`; returns `(u, v)`.
pub fn redress_right(w: &BraidWord) -> (BraidWord, BraidWord) {
    let f = redress_right_with(w, Strategy::Leftmost, None).expect("no budget");
    (f.positive, f.negative)
}

/// `w` left-redresses to `v^{-1} u`; returns `(v, u)`.
pub fn redress_left(w: &BraidWord) -> (BraidWord, BraidWord) {
    let f = redress_left_with(w, Strategy::Leftmost, None).expect("no budget");
    (f.negative, f.positive)
}

/// One right-redressing rewrite at the leftmost pattern, or `None` if the
/// word is already of the form `u v^{-1}`.
pub fn right_step(w: &BraidWord) -> Option<BraidWord> {
    let letters = w.letters();
    let k = letters.windows(2).position(|p| !p[0].is_positive() && p[1].is_positive())?;
    let mut out = letters[..k].to_vec();
    rewrite(letters[k], letters[k + 1], &mut out);
    out.extend_from_slice(&letters[k + 2..]);
    Some(BraidWord::from_letters_unchecked(w.n(), out))
}

/// One left-redressing rewrite at the leftmost positive-negative pattern, or
/// `None` if the word is already of the form `v^{-1} u`.
pub fn left_step(w: &BraidWord) -> Option<BraidWord> {
    let letters = w.letters();
    let k = letters.windows(2).position(|p| p[0].is_positive() && !p[1].is_positive())?;
    let mut mirrored = Vec::with_capacity(4);
    rewrite(letters[k + 1], letters[k], &mut mirrored);
    let mut out = letters[..k].to_vec();
    out.extend(mirrored.iter().rev());
    out.extend_from_slice(&letters[k + 2..]);
    Some(BraidWord::from_letters_unchecked(w.n(), out))
}

/// Triviality test by redressing, with strategy and budget (the budget
/// bounds the rewrites of both passes together).
pub fn trivial_by_redress_with(
    w: &BraidWord,
    variant: Variant,
    strategy: Strategy,
    budget: Option<u64>,
) -> Result<Verdict> {
    let first = redress_right_with(w, strategy, budget)?;
    let rest = budget.map(|b| b - first.steps);
    let total = |e: BraidError| match (e, budget) {
        (BraidError::BudgetExhausted(_), Some(b)) => BraidError::BudgetExhausted(b),
        (e, _) => e,
    };
    match variant {
        Variant::DoubleRight => {
            let swapped = first.negative.inverse().concat(&first.positive)?;
            let second = redress_right_with(&swapped, strategy, rest).map_err(total)?;
            let residue = second.positive.concat(&second.negative.inverse())?;
            Ok(Verdict { trivial: residue.is_empty(), residue, steps: first.steps + second.steps })
        }
        Variant::RightThenLeft => {
            let frac = first.positive.concat(&first.negative.inverse())?;
            let second = redress_left_with(&frac, strategy, rest).map_err(total)?;
            let residue = second.negative.inverse().concat(&second.positive)?;
            Ok(Verdict { trivial: residue.is_empty(), residue, steps: first.steps + second.steps })
        }
    }
}

/// Triviality test by redressing with the leftmost strategy and no budget.
pub fn trivial_by_redress(w: &BraidWord, variant: Variant) -> (bool, BraidWord) {
    let v = trivial_by_redress_with(w, variant, Strategy::Leftmost, None).expect("no budget");
    (v.trivial, v.residue)
}

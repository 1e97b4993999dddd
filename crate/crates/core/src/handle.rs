//! Handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` in which `v` has no letter
//! `σ_j^{±1}` with `j <= i` and all its `σ_{i+1}` letters share one sign.
//! Reducing it deletes the two ends and replaces every `σ_{i+1}^d` of `v`
//! with `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Letter, Sign};

/// Reductions allowed before giving up, unless told otherwise.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A handle located in a word. Positions are 0-based and inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleSpan {
    pub start: usize,
    pub end: usize,
    pub index: usize,
    pub sign: Sign,
    /// Sign of the enclosed `σ_{index+1}` letters, if there are any.
    pub inner_sign: Option<Sign>,
}

/// Where to look for the next handle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HandleStrategy {
    /// Leftmost critical pair of the least generator, descending into the
    /// enclosed subword while its next generator has mixed signs.
    #[default]
    LeftmostPermitted,
    /// Leftmost handle of any generator. Words without handles of this kind
    /// are reduced for every index, not only the least one.
    LeftmostAny,
}

/// Sign of the `σ_j` letters in `letters`: `Ok(None)` if there are none,
/// `Err(())` if both signs occur.
fn uniform_sign(letters: &[Letter], j: usize) -> std::result::Result<Option<Sign>, ()> {
    let mut seen = None;
    for l in letters.iter().filter(|l| l.index() == j) {
        match seen {
            None => seen = Some(l.sign()),
            Some(s) if s != l.sign() => return Err(()),
            Some(_) => {}
        }
    }
    Ok(seen)
}

fn find_in(letters: &[Letter], lo: usize, hi: usize, i: usize) -> Option<HandleSpan> {
    let mut prev: Option<usize> = None;
    for p in lo..hi {
        if letters[p].index() != i {
            continue;
        }
        if let Some(q) = prev {
            if letters[q].sign() != letters[p].sign() {
                return match uniform_sign(&letters[q + 1..p], i + 1) {
                    Ok(inner_sign) => Some(HandleSpan { start: q, end: p, index: i, sign: letters[q].sign(), inner_sign }),
                    Err(()) => find_in(letters, q + 1, p, i + 1),
                };
            }
        }
        prev = Some(p);
    }
    None
}

fn handle_starting_at(letters: &[Letter], q: usize) -> Option<HandleSpan> {
    let i = letters[q].index();
    let mut inner_sign = None;
    for (p, l) in letters.iter().enumerate().skip(q + 1) {
        let j = l.index();
        if j < i {
            return None;
        }
        if j == i {
            return (l.sign() != letters[q].sign()).then_some(HandleSpan {
                start: q,
                end: p,
                index: i,
                sign: letters[q].sign(),
                inner_sign,
            });
        }
        if j == i + 1 {
            match inner_sign {
                None => inner_sign = Some(l.sign()),
                Some(s) if s != l.sign() => return None,
                Some(_) => {}
            }
        }
    }
    None
}

/// Next handle to reduce, or `None` if there is nothing left to do.
///
/// With [`HandleStrategy::LeftmostPermitted`] `None` means the least
/// generator of `w` occurs with one sign only, so `w` is reduced.
pub fn find_handle(w: &BraidWord, strategy: HandleStrategy) -> Option<HandleSpan> {
    let letters = w.letters();
    match strategy {
        HandleStrategy::LeftmostPermitted => {
            let i = letters.iter().map(|l| l.index()).min()?;
            find_in(letters, 0, letters.len(), i)
        }
        HandleStrategy::LeftmostAny => (0..letters.len()).find_map(|q| handle_starting_at(letters, q)),
    }
}

fn validate(w: &BraidWord, h: &HandleSpan) -> Result<()> {
    let bad = || BraidError::InvalidHandle { start: h.start, end: h.end };
    let letters = w.letters();
    if h.start >= h.end || h.end >= letters.len() {
        return Err(bad());
    }
    let (first, last) = (letters[h.start], letters[h.end]);
    if first.index() != h.index || last != first.inverse() || first.sign() != h.sign {
        return Err(bad());
    }
    let inner = &letters[h.start + 1..h.end];
    if inner.iter().any(|l| l.index() <= h.index) {
        return Err(bad());
    }
    match uniform_sign(inner, h.index + 1) {
        Ok(s) if s == h.inner_sign => Ok(()),
        _ => Err(bad()),
    }
}

/// Replace the handle `h` of `w` by its reduct.
pub fn reduce_once(w: &BraidWord, h: &HandleSpan) -> Result<BraidWord> {
    validate(w, h)?;
    let letters = w.letters();
    let i = h.index;
    let e = h.sign;
    let mut out = Vec::with_capacity(letters.len() + 2 * (h.end - h.start));
    out.extend_from_slice(&letters[..h.start]);
    for &l in &letters[h.start + 1..h.end] {
        if l.index() == i + 1 {
            out.push(Letter::new(i + 1, -e));
            out.push(Letter::new(i, l.sign()));
            out.push(Letter::new(i + 1, e));
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&letters[h.end + 1..]);
    Ok(BraidWord::from_letters_unchecked(w.n(), out))
}

/// Outcome of a full reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub word: BraidWord,
    pub steps: u64,
}

/// Reduce handles until none is left, with a bound on the number of
/// reductions. `observe` sees every intermediate word and the handle about
/// to be reduced in it.
pub fn handle_reduce_observed(
    w: &BraidWord,
    strategy: HandleStrategy,
    budget: Option<u64>,
    mut observe: impl FnMut(&BraidWord, &HandleSpan),
) -> Result<Reduction> {
    let mut word = w.clone();
    let mut steps = 0u64;
    while let Some(h) = find_handle(&word, strategy) {
        if budget.is_some_and(|b| steps >= b) {
            return Err(BraidError::BudgetExhausted(steps));
        }
        observe(&word, &h);
        word = reduce_once(&word, &h).expect("found handles are valid");
        steps += 1;
    }
    Ok(Reduction { word, steps })
}

pub fn handle_reduce_with(w: &BraidWord, budget: Option<u64>) -> Result<Reduction> {
    handle_reduce_observed(w, HandleStrategy::LeftmostPermitted, budget, |_, _| {})
}

/// Fully reduced word equivalent to `w`; empty exactly when `w` represents
/// the unit braid. Panics if [`DEFAULT_BUDGET`] reductions do not suffice.
pub fn handle_reduce(w: &BraidWord) -> BraidWord {
    handle_reduce_with(w, Some(DEFAULT_BUDGET)).expect("handle reduction budget exhausted").word
}

/// Word with the handle wrapped in brackets, e.g. `aBab[acA]BABAbbCB`.
pub fn render_with_handle(w: &BraidWord, h: &HandleSpan) -> Result<String> {
    let mut out = String::new();
    for (k, l) in w.letters().iter().enumerate() {
        if k == h.start {
            out.push('[');
        }
        let single = BraidWord::from_letters_unchecked(w.n(), vec![*l]);
        match single.render(crate::word::Format::Alpha) {
            Ok(text) => out.push_str(&text),
            Err(_) => write!(out, "({})", l.to_int()).expect("string write"),
        }
        if k == h.end {
            out.push(']');
        }
    }
    Ok(out)
}

/// The reduction sequence: every word paired with the handle reduced in it,
/// the last word carrying none.
pub fn handle_trace(w: &BraidWord, budget: Option<u64>) -> Result<Vec<(BraidWord, Option<HandleSpan>)>> {
    let mut steps = Vec::new();
    let last = handle_reduce_observed(w, HandleStrategy::LeftmostPermitted, budget, |word, h| {
        steps.push((word.clone(), Some(*h)))
    })?;
    steps.push((last.word, None));
    Ok(steps)
}

/// Iterated handle reduction: remove every handle, then do the same to the
/// flipped word and flip back, for as long as the length keeps dropping.
/// The result is never longer than [`handle_reduce`] of the input.
pub fn shorten_with(w: &BraidWord, budget: Option<u64>) -> Result<Reduction> {
    let mut spent = 0u64;
    let mut run = |word: &BraidWord, strategy: HandleStrategy| -> Result<BraidWord> {
        let left = budget.map(|b| b.saturating_sub(spent));
        let r = handle_reduce_observed(word, strategy, left, |_, _| {}).map_err(|e| match (e, budget) {
            (BraidError::BudgetExhausted(_), Some(b)) => BraidError::BudgetExhausted(b),
            (e, _) => e,
        })?;
        spent += r.steps;
        Ok(r.word)
    };
    let all = HandleStrategy::LeftmostAny;
    let mut current = run(w, all)?;
    loop {
        let flipped = run(&current.flip(), all)?.flip();
        let next = run(&flipped, all)?;
        if next.len() >= current.len() {
            break;
        }
        current = next;
    }
    let plain = run(w, HandleStrategy::LeftmostPermitted)?;
    if plain.len() < current.len() {
        current = plain;
    }
    Ok(Reduction { word: current, steps: spent })
}

pub fn shorten(w: &BraidWord) -> BraidWord {
    shorten_with(w, Some(DEFAULT_BUDGET)).expect("handle reduction budget exhausted").word
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Format;

    fn w4(s: &str) -> BraidWord {
        BraidWord::parse(s, Format::Alpha, Some(4)).unwrap()
    }

    fn alpha(w: &BraidWord) -> String {
        w.render(Format::Alpha).unwrap()
    }

    const W0: &str = "aBabacABABAbbCB";

    #[test]
    fn finds_the_handles_of_the_trace() {
        let h = find_handle(&w4(W0), HandleStrategy::LeftmostPermitted).unwrap();
        assert_eq!(h, HandleSpan { start: 4, end: 6, index: 1, sign: Sign::Positive, inner_sign: None });
        let h = find_handle(&w4("aBabcBABAbbCB"), HandleStrategy::LeftmostPermitted).unwrap();
        assert_eq!((h.start, h.end, h.index), (3, 5, 2));
        assert_eq!(find_handle(&w4("abc"), HandleStrategy::LeftmostPermitted), None);
    }

    #[test]
    fn single_reductions() {
        let w = w4(W0);
        let h = find_handle(&w, HandleStrategy::LeftmostPermitted).unwrap();
        assert_eq!(alpha(&reduce_once(&w, &h).unwrap()), "aBabcBABAbbCB");
        let w = w4("aBabcBABAbbCB");
        let h = find_handle(&w, HandleStrategy::LeftmostPermitted).unwrap();
        assert_eq!(alpha(&reduce_once(&w, &h).unwrap()), "aBaCbcABAbbCB");
        let w = w4("aA");
        let h = find_handle(&w, HandleStrategy::LeftmostPermitted).unwrap();
        assert!(reduce_once(&w, &h).unwrap().is_empty());
    }

    #[test]
    fn rejects_invalid_spans() {
        let w = w4("abA");
        let h = HandleSpan { start: 0, end: 1, index: 1, sign: Sign::Positive, inner_sign: None };
        assert_eq!(reduce_once(&w, &h), Err(BraidError::InvalidHandle { start: 0, end: 1 }));
        let h = HandleSpan { start: 0, end: 2, index: 1, sign: Sign::Positive, inner_sign: None };
        assert!(reduce_once(&w, &h).is_err());
        let h = HandleSpan { start: 0, end: 2, index: 1, sign: Sign::Positive, inner_sign: Some(Sign::Positive) };
        assert_eq!(alpha(&reduce_once(&w, &h).unwrap()), "Bab");
        let h = HandleSpan { start: 0, end: 9, index: 1, sign: Sign::Positive, inner_sign: None };
        assert!(reduce_once(&w, &h).is_err());
    }

    #[test]
    fn full_trace() {
        let trace = handle_trace(&w4(W0), None).unwrap();
        let shown: Vec<String> = trace
            .iter()
            .map(|(w, h)| match h {
                Some(h) => render_with_handle(w, h).unwrap(),
                None => alpha(w),
            })
            .collect();
        assert_eq!(
            shown,
            [
                "aBab[acA]BABAbbCB",
                "aBa[bcB]ABAbbCB",
                "aB[aCbcA]BAbbCB",
                "aBCBa[bcB]AbbCB",
                "aBCB[aCbcA]bbCB",
                "aBCBCBabcbbCB",
            ]
        );
        assert_eq!(alpha(&handle_reduce(&w4(W0))), "aBCBCBabcbbCB");
        assert!(handle_reduce(&w4("")).is_empty());
        assert!(!handle_reduce(&w4("aBAb")).is_empty());
    }

    #[test]
    fn any_index_strategy() {
        let w = w4("bCBa");
        let h = find_handle(&w, HandleStrategy::LeftmostAny).unwrap();
        assert_eq!((h.start, h.end, h.index, h.inner_sign), (0, 2, 2, Some(Sign::Negative)));
        assert_eq!(find_handle(&w, HandleStrategy::LeftmostPermitted), None);
        assert_eq!(find_handle(&w4("bAB"), HandleStrategy::LeftmostAny), None);
        assert_eq!(find_handle(&w4("bcCcB"), HandleStrategy::LeftmostAny).unwrap().index, 3);
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(handle_reduce_with(&w4(W0), Some(5)).unwrap().steps, 5);
        assert_eq!(handle_reduce_with(&w4(W0), Some(4)), Err(BraidError::BudgetExhausted(4)));
    }

    #[test]
    fn shortening() {
        assert_eq!(alpha(&shorten(&w4(W0))), "acBCCBa");
        let all = handle_reduce_observed(&w4(W0), HandleStrategy::LeftmostAny, None, |_, _| {}).unwrap();
        assert_eq!(alpha(&all.word), "aBCBCBacc");
        assert!(shorten(&w4("")).is_empty());
        assert_eq!(shorten(&w4("abcab")), w4("abcab"));
    }
}

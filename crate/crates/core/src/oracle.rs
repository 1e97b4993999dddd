//! Reference implementations and the cross-method checker.
//!
//! Random words come from `ChaCha8Rng::seed_from_u64`, so a seed fixes a
//! word on every platform. Brute-force oracles enumerate all `n!` simple
//! braids and decide divisibility without the tile code: by redressing, or
//! by the inversion count criterion `a ≤ b ⇔ inv(a^{-1} b) = inv(b) - inv(a)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::gridnf::{greedy_nf_counted, symmetric_nf_counted, Grouping};
use crate::handle::handle_reduce_with;
use crate::redress::{redress_right, trivial_by_redress_with, Strategy, Variant};
use crate::simple::{Permutation, SimpleBraid};
use crate::word::{BraidWord, Format, Letter};
use crate::{dynnikov, handle};

/// Largest `n` accepted by the enumeration oracles.
pub const BRUTE_MAX_N: usize = 5;

/// A word of length `len` with letters uniform over the `2(n-1)` signed
/// generators.
pub fn random_word(n: usize, len: usize, seed: u64) -> BraidWord {
    random_word_with(&mut ChaCha8Rng::seed_from_u64(seed), n, len)
}

pub fn random_word_with(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    assert!(n >= 2, "random words need at least two strands");
    let letters = (0..len)
        .map(|_| {
            let k = rng.gen_range(0..2 * (n - 1));
            if k % 2 == 0 {
                Letter::pos(k / 2 + 1)
            } else {
                Letter::neg(k / 2 + 1)
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("indices below n")
}

/// A random positive word.
pub fn random_positive_word_with(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| Letter::pos(rng.gen_range(1..n))).collect();
    BraidWord::new(n, letters).expect("indices below n")
}

/// Rewrite `w` into an equivalent word by `moves` random relation moves:
/// inserting or deleting `σ_i^{±1} σ_i^{∓1}`, swapping distant letters, and
/// the braid relation on same-sign triples.
pub fn scramble(w: &BraidWord, moves: usize, rng: &mut impl Rng) -> BraidWord {
    let n = w.n();
    let mut letters = w.letters().to_vec();
    for _ in 0..moves {
        let len = letters.len();
        match rng.gen_range(0..4) {
            0 => {
                let at = rng.gen_range(0..=len);
                let l = random_word_with(rng, n, 1).letters()[0];
                letters.splice(at..at, [l, l.inverse()]);
            }
            1 if len >= 2 => {
                let at = rng.gen_range(0..len - 1);
                if letters[at] == letters[at + 1].inverse() {
                    letters.drain(at..at + 2);
                }
            }
            2 if len >= 2 => {
                let at = rng.gen_range(0..len - 1);
                if letters[at].index().abs_diff(letters[at + 1].index()) >= 2 {
                    letters.swap(at, at + 1);
                }
            }
            3 if len >= 3 => {
                let at = rng.gen_range(0..len - 2);
                let (a, b, c) = (letters[at], letters[at + 1], letters[at + 2]);
                if a == c && a.sign() == b.sign() && a.index().abs_diff(b.index()) == 1 {
                    letters[at] = b;
                    letters[at + 1] = a;
                    letters[at + 2] = b;
                }
            }
            _ => {}
        }
    }
    BraidWord::new(n, letters).expect("moves keep indices")
}

/// `w · (scramble of w)^{-1}`, a word representing the unit braid.
pub fn trivial_companion(w: &BraidWord, rng: &mut impl Rng) -> BraidWord {
    let moves = 2 * w.len() + 4;
    w.concat(&scramble(w, moves, rng).inverse()).expect("same strand count")
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > BRUTE_MAX_N {
        return Err(BraidError::TooLargeForEnumeration { n, max: BRUTE_MAX_N });
    }
    Ok(())
}

fn check_pair(s: &SimpleBraid, t: &SimpleBraid) -> Result<usize> {
    if s.n() != t.n() {
        return Err(BraidError::StrandMismatch(s.n(), t.n()));
    }
    check_enumerable(s.n())?;
    Ok(s.n())
}

/// `a ≤_L b` for simple `a`, `b`, via inversion counts.
pub fn perm_left_divides(a: &Permutation, b: &Permutation) -> bool {
    a.inverse().compose(b).inversions() + a.inversions() == b.inversions()
}

/// `a` right-divides `b` (`b = z a`) for simple `a`, `b`.
pub fn perm_right_divides(a: &Permutation, b: &Permutation) -> bool {
    b.compose(&a.inverse()).inversions() + a.inversions() == b.inversions()
}

/// `s ≤_L x` for a positive word `x`: `s^{-1} x` redresses to a positive word.
pub fn word_left_divides(s: &BraidWord, x: &BraidWord) -> bool {
    let w = s.inverse().concat(x).expect("same strand count");
    redress_right(&w).1.is_empty()
}

/// Largest simple left divisor of `t1 t2`, by enumeration.
pub fn brute_head(t1: &SimpleBraid, t2: &SimpleBraid) -> Result<SimpleBraid> {
    let n = check_pair(t1, t2)?;
    let product = t1.to_word().concat(&t2.to_word())?;
    let best = SimpleBraid::all(n)
        .into_iter()
        .filter(|s| word_left_divides(&s.to_word(), &product))
        .max_by_key(SimpleBraid::length)
        .expect("the identity divides");
    Ok(best)
}

/// `gcd_L(s, t)`, by enumeration.
pub fn brute_gcd(s: &SimpleBraid, t: &SimpleBraid) -> Result<SimpleBraid> {
    let n = check_pair(s, t)?;
    let best = SimpleBraid::all(n)
        .into_iter()
        .filter(|u| perm_left_divides(u.perm(), s.perm()) && perm_left_divides(u.perm(), t.perm()))
        .max_by_key(SimpleBraid::length)
        .expect("the identity divides");
    Ok(best)
}

/// `lcm_L(s, t)`, the least common left multiple, by enumeration.
pub fn brute_lcm(s: &SimpleBraid, t: &SimpleBraid) -> Result<SimpleBraid> {
    let n = check_pair(s, t)?;
    let best = SimpleBraid::all(n)
        .into_iter()
        .filter(|m| perm_right_divides(s.perm(), m.perm()) && perm_right_divides(t.perm(), m.perm()))
        .min_by_key(SimpleBraid::length)
        .expect("Δ is a common multiple");
    Ok(best)
}

/// `(s/t, t/s)` from the enumerated lcm.
pub fn brute_c_tile(s: &SimpleBraid, t: &SimpleBraid) -> Result<(SimpleBraid, SimpleBraid)> {
    let m = brute_lcm(s, t)?;
    let over = |x: &SimpleBraid| SimpleBraid::from_perm(m.perm().compose(&x.perm().inverse()));
    Ok((over(t), over(s)))
}

/// The six triviality procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Greedy,
    Symmetric,
    Redress,
    RedressLeft,
    Handle,
    Dynnikov,
}

impl Method {
    pub const ALL: [Method; 6] =
        [Method::Greedy, Method::Symmetric, Method::Redress, Method::RedressLeft, Method::Handle, Method::Dynnikov];

    pub fn name(self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::Symmetric => "symmetric",
            Method::Redress => "redress",
            Method::RedressLeft => "redress-left",
            Method::Handle => "handle",
            Method::Dynnikov => "dynnikov",
        }
    }

    /// Decide triviality. `steps` counts tiles, rewrites, reductions or
    /// letters depending on the method. The budget applies to redressing and
    /// handle reduction.
    pub fn run(self, w: &BraidWord, budget: Option<u64>) -> Result<Outcome> {
        let (trivial, steps) = match self {
            Method::Greedy => {
                let (nf, tiles) = greedy_nf_counted(w, Grouping::Runs);
                (nf.is_identity(), tiles)
            }
            Method::Symmetric => {
                let (nf, tiles) = symmetric_nf_counted(w, Grouping::Runs);
                (nf.is_identity(), tiles)
            }
            Method::Redress | Method::RedressLeft => {
                let variant = if self == Method::Redress { Variant::DoubleRight } else { Variant::RightThenLeft };
                let v = trivial_by_redress_with(w, variant, Strategy::Leftmost, budget)?;
                (v.trivial, v.steps)
            }
            Method::Handle => {
                let r = handle_reduce_with(w, budget.or(Some(handle::DEFAULT_BUDGET)))?;
                (r.word.is_empty(), r.steps)
            }
            Method::Dynnikov => (dynnikov::trivial_by_coords(w), w.len() as u64),
        };
        Ok(Outcome { trivial, steps })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub trivial: bool,
    pub steps: u64,
}

/// What each method said about one word; `None` when it ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub word: String,
    pub n: usize,
    pub forced_trivial: bool,
    pub verdicts: Vec<(Method, Option<bool>)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub cases_run: usize,
    pub disagreements: Vec<CaseReport>,
    pub budget_exhausted: Vec<CaseReport>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    /// Combine two reports; the order of cases is kept.
    pub fn merge(mut self, other: FuzzReport) -> FuzzReport {
        self.cases_run += other.cases_run;
        self.disagreements.extend(other.disagreements);
        self.budget_exhausted.extend(other.budget_exhausted);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzParams {
    pub n_min: usize,
    pub n_max: usize,
    pub len_min: usize,
    pub len_max: usize,
    pub count: usize,
    pub seed: u64,
    pub budget: Option<u64>,
}

impl Default for FuzzParams {
    fn default() -> Self {
        FuzzParams { n_min: 2, n_max: 6, len_min: 0, len_max: 64, count: 100, seed: 42, budget: Some(10_000_000) }
    }
}

fn render(w: &BraidWord) -> String {
    w.render(Format::Alpha).or_else(|_| w.render(Format::IntList)).expect("intlist always renders")
}

/// Run every method on `w` and report it unless they all agree (and, for a
/// forced-trivial word, all say trivial).
fn check_word(w: &BraidWord, forced_trivial: bool, budget: Option<u64>) -> (Option<CaseReport>, Option<CaseReport>) {
    let verdicts: Vec<(Method, Option<bool>)> =
        Method::ALL.iter().map(|&m| (m, m.run(w, budget).ok().map(|o| o.trivial))).collect();
    let answers: Vec<bool> = verdicts.iter().filter_map(|(_, v)| *v).collect();
    let agree = answers.windows(2).all(|p| p[0] == p[1]) && (!forced_trivial || answers.iter().all(|&t| t));
    let exhausted = answers.len() < verdicts.len();
    let report = || CaseReport { word: render(w), n: w.n(), forced_trivial, verdicts: verdicts.clone() };
    ((!agree).then(report), exhausted.then(report))
}

/// Check a fixed list of words, each together with a forced-trivial
/// companion drawn from `seed`.
pub fn cross_check_words(words: &[BraidWord], seed: u64, budget: Option<u64>) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = words.iter().map(|_| rng.gen()).collect();
    let parts: Vec<FuzzReport> = words
        .par_iter()
        .zip(seeds.par_iter())
        .map(|(w, &s)| {
            let companion = trivial_companion(w, &mut ChaCha8Rng::seed_from_u64(s));
            let mut report = FuzzReport { cases_run: 2, ..FuzzReport::default() };
            for (word, forced) in [(w, false), (&companion, true)] {
                let (bad, exhausted) = check_word(word, forced, budget);
                report.disagreements.extend(bad);
                report.budget_exhausted.extend(exhausted);
            }
            report
        })
        .collect();
    parts.into_iter().fold(FuzzReport::default(), FuzzReport::merge)
}

/// The random words of a fuzz run, in order.
pub fn fuzz_words(params: &FuzzParams) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..params.count)
        .map(|_| {
            let n = rng.gen_range(params.n_min.max(2)..=params.n_max.max(params.n_min.max(2)));
            let len = rng.gen_range(params.len_min..=params.len_max.max(params.len_min));
            random_word_with(&mut rng, n, len)
        })
        .collect()
}

/// Random words and their forced-trivial companions through all six methods.
pub fn cross_check(params: &FuzzParams) -> FuzzReport {
    let words = fuzz_words(params);
    cross_check_words(&words, params.seed.wrapping_add(1), params.budget)
}

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{blocks, c_pass_rtl, check_sizes, p_pass_rtl, require_normal, sequence_word, strip_identities, write_factors};
use crate::error::{BraidError, Result};
use crate::simple::{Side, SimpleBraid};
use crate::word::BraidWord;

/// How letters are fed to the incremental algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Grouping {
    /// Gather adjacent same-sign letters while they spell a simple braid.
    #[default]
    Runs,
    PerLetter,
}

/// `Δ^m s_1 ... s_p` with `(s_1, ..., s_p)` normal, `s_1 ≠ Δ`, `s_p ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGreedy")]
pub struct GreedyNF {
    n: usize,
    delta_exp: i64,
    factors: Vec<SimpleBraid>,
}

#[derive(Deserialize)]
struct RawGreedy {
    n: usize,
    delta_exp: i64,
    factors: Vec<SimpleBraid>,
}

impl TryFrom<RawGreedy> for GreedyNF {
    type Error = BraidError;

    fn try_from(raw: RawGreedy) -> Result<Self> {
        GreedyNF::new(raw.n, raw.delta_exp, raw.factors)
    }
}

impl GreedyNF {
    pub fn identity(n: usize) -> Self {
        GreedyNF { n, delta_exp: 0, factors: Vec::new() }
    }

    /// Validating constructor.
    pub fn new(n: usize, delta_exp: i64, factors: Vec<SimpleBraid>) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        check_sizes(n, &factors)?;
        require_normal(&factors)?;
        if factors.first().is_some_and(SimpleBraid::is_delta) {
            return Err(BraidError::NotNormal(0));
        }
        if factors.last().is_some_and(SimpleBraid::is_identity) {
            return Err(BraidError::NotNormal(factors.len() - 1));
        }
        Ok(GreedyNF { n, delta_exp, factors })
    }

    /// Build from a normal sequence that may still carry leading `Δ`s and
    /// trailing identities.
    fn canonical(n: usize, mut delta_exp: i64, seq: Vec<SimpleBraid>) -> Self {
        let mut seq = strip_identities(seq);
        let deltas = seq.iter().take_while(|s| s.is_delta()).count();
        seq.drain(..deltas);
        delta_exp += deltas as i64;
        debug_assert!(super::is_normal(&seq).unwrap());
        GreedyNF { n, delta_exp, factors: seq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta_exp(&self) -> i64 {
        self.delta_exp
    }

    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.factors.is_empty()
    }

    /// `Δ^m` written as `m` copies of the canonical word of `Δ` (inverted when
    /// `m < 0`), followed by the canonical words of the factors.
    pub fn to_word(&self) -> BraidWord {
        let delta = SimpleBraid::delta(self.n).expect("n >= 2").to_word();
        let block = if self.delta_exp >= 0 { delta } else { delta.inverse() };
        let mut letters = Vec::new();
        for _ in 0..self.delta_exp.unsigned_abs() {
            letters.extend_from_slice(block.letters());
        }
        letters.extend(sequence_word(self.n, &self.factors).into_letters());
        BraidWord::new(self.n, letters).expect("factor words fit")
    }
}

impl fmt::Display for GreedyNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.delta_exp)?;
        write_factors(f, &self.factors)?;
        f.write_str(")")
    }
}

fn same_n(nf: &GreedyNF, u: &SimpleBraid) -> Result<()> {
    if nf.n != u.n() {
        return Err(BraidError::StrandMismatch(nf.n, u.n()));
    }
    Ok(())
}

pub(crate) fn mul_counted(nf: &GreedyNF, u: &SimpleBraid, tiles: &mut u64) -> GreedyNF {
    let (u0, rest) = p_pass_rtl(&nf.factors, u.clone(), tiles);
    let mut seq = Vec::with_capacity(rest.len() + 1);
    seq.push(u0);
    seq.extend(rest);
    GreedyNF::canonical(nf.n, nf.delta_exp, seq)
}

pub(crate) fn div_counted(nf: &GreedyNF, u: &SimpleBraid, tiles: &mut u64) -> GreedyNF {
    let (rest, u0) = c_pass_rtl(&nf.factors, u.clone(), tiles);
    if u0.is_identity() {
        return GreedyNF::canonical(nf.n, nf.delta_exp, rest);
    }
    let mut seq = Vec::with_capacity(rest.len() + 1);
    seq.push(u0.dual(Side::Left));
    seq.extend(rest);
    GreedyNF::canonical(nf.n, nf.delta_exp - 1, seq)
}

/// Normal form of `z u` from the normal form of `z`.
pub fn greedy_mul_simple(nf: &GreedyNF, u: &SimpleBraid) -> Result<GreedyNF> {
    same_n(nf, u)?;
    Ok(mul_counted(nf, u, &mut 0))
}

/// Normal form of `z u^{-1}` from the normal form of `z`.
pub fn greedy_div_simple(nf: &GreedyNF, u: &SimpleBraid) -> Result<GreedyNF> {
    same_n(nf, u)?;
    Ok(div_counted(nf, u, &mut 0))
}

/// Greedy normal form of a word, together with the number of tiles used.
pub fn greedy_nf_counted(w: &BraidWord, grouping: Grouping) -> (GreedyNF, u64) {
    let mut tiles = 0;
    let mut nf = GreedyNF::identity(w.n());
    for (u, positive) in blocks(w, grouping) {
        nf = if positive { mul_counted(&nf, &u, &mut tiles) } else { div_counted(&nf, &u, &mut tiles) };
    }
    (nf, tiles)
}

pub fn greedy_nf(w: &BraidWord) -> GreedyNF {
    greedy_nf_counted(w, Grouping::Runs).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Format;

    fn w4(s: &str) -> BraidWord {
        BraidWord::parse(s, Format::Alpha, Some(4)).unwrap()
    }

    fn sb(s: &str) -> SimpleBraid {
        SimpleBraid::from_word(&w4(s)).unwrap().unwrap()
    }

    fn nf(m: i64, factors: &[&str]) -> GreedyNF {
        GreedyNF::new(4, m, factors.iter().map(|s| sb(s)).collect()).unwrap()
    }

    #[test]
    fn single_step_examples() {
        assert_eq!(greedy_mul_simple(&GreedyNF::identity(4), &sb("a")).unwrap(), nf(0, &["a"]));
        assert_eq!(greedy_mul_simple(&nf(-1, &["abcb", "ba"]), &sb("a")).unwrap(), nf(-1, &["abcb", "ba", "a"]));
        assert_eq!(greedy_mul_simple(&nf(-1, &["abcb", "ba", "ab"]), &sb("a")).unwrap(), nf(0, &["a", "ab"]));
        assert_eq!(greedy_div_simple(&nf(0, &["a"]), &sb("b")).unwrap(), nf(-1, &["abcb", "ba"]));
        assert_eq!(
            greedy_div_simple(&nf(-2, &["ac", "abcb", "bcba", "ab"]), &sb("b")).unwrap(),
            nf(-2, &["ac", "abcb", "bcba", "a"])
        );
        assert_eq!(greedy_div_simple(&nf(0, &["bac"]), &sb("bac")).unwrap(), GreedyNF::identity(4));
        assert!(greedy_mul_simple(&GreedyNF::identity(3), &sb("a")).is_err());
    }

    #[test]
    fn whole_word_examples() {
        let expected = nf(-2, &["ac", "abcb", "bcba", "a"]);
        assert_eq!(greedy_nf(&w4("aBabacABABAbbCB")), expected);
        assert_eq!(expected.to_string(), "(-2; ac, abcb, bcba, a)");
        let perms: Vec<Vec<usize>> = expected.factors().iter().map(|s| s.perm().images()).collect();
        assert_eq!(perms, vec![vec![2, 1, 4, 3], vec![2, 4, 3, 1], vec![4, 1, 3, 2], vec![2, 1, 3, 4]]);
        assert!(greedy_nf(&w4("")).is_identity());
        assert!(greedy_nf(&w4("aA")).is_identity());
        assert_eq!(GreedyNF::identity(4).to_string(), "(0; )");
    }

    #[test]
    fn grouping_does_not_matter() {
        let w = w4("aBabacABABAbbCB");
        let (a, ta) = greedy_nf_counted(&w, Grouping::Runs);
        let (b, tb) = greedy_nf_counted(&w, Grouping::PerLetter);
        assert_eq!(a, b);
        assert!(ta <= tb);
    }

    #[test]
    fn json_schema() {
        let nf = greedy_nf(&w4("aBabacABABAbbCB"));
        let json = serde_json::to_string(&nf).unwrap();
        assert_eq!(json, r#"{"n":4,"delta_exp":-2,"factors":[[2,1,4,3],[2,4,3,1],[4,1,3,2],[2,1,3,4]]}"#);
        assert_eq!(serde_json::from_str::<GreedyNF>(&json).unwrap(), nf);
        assert!(serde_json::from_str::<GreedyNF>(r#"{"n":4,"delta_exp":0,"factors":[[2,1,3,4],[1,3,2,4]]}"#).is_err());
        assert!(serde_json::from_str::<GreedyNF>(r#"{"n":4,"delta_exp":0,"factors":[[4,3,2,1]]}"#).is_err());
    }

    #[test]
    fn word_round_trip_is_a_fixed_point() {
        let nf = greedy_nf(&w4("aBabacABABAbbCB"));
        assert_eq!(greedy_nf(&nf.to_word()), nf);
        assert_eq!(nf.to_word().len(), 2 * 6 + 2 + 4 + 4 + 1);
    }
}

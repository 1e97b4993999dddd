use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    blocks, c_pass_rtl, check_sizes, is_normal, left_multiply, normalize_sequence, p_pass_ltr, p_pass_rtl,
    require_normal, sequence_word, strip_identities, write_factors, Grouping,
};
use crate::error::{BraidError, Result};
use crate::simple::{gcd_left, Side, SimpleBraid};
use crate::word::{BraidWord, Sign};

/// Multiply by `u` or by `u^{-1}`.
pub type Push = Sign;

/// `t_q^{-1} ... t_1^{-1} s_1 ... s_p`: both sequences normal without
/// trailing identities, and `gcd_L(s_1, t_1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSymmetric")]
pub struct SymmetricNF {
    n: usize,
    den: Vec<SimpleBraid>,
    num: Vec<SimpleBraid>,
}

#[derive(Deserialize)]
struct RawSymmetric {
    n: usize,
    den: Vec<SimpleBraid>,
    num: Vec<SimpleBraid>,
}

impl TryFrom<RawSymmetric> for SymmetricNF {
    type Error = BraidError;

    fn try_from(raw: RawSymmetric) -> Result<Self> {
        SymmetricNF::new(raw.n, raw.den, raw.num)
    }
}

impl SymmetricNF {
    pub fn identity(n: usize) -> Self {
        SymmetricNF { n, den: Vec::new(), num: Vec::new() }
    }

    /// Validating constructor.
    pub fn new(n: usize, den: Vec<SimpleBraid>, num: Vec<SimpleBraid>) -> Result<Self> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        for seq in [&den, &num] {
            check_sizes(n, seq)?;
            require_normal(seq)?;
            if seq.last().is_some_and(SimpleBraid::is_identity) {
                return Err(BraidError::NotNormal(seq.len() - 1));
            }
        }
        if let (Some(s), Some(t)) = (num.first(), den.first()) {
            if !gcd_left(s, t)?.is_identity() {
                return Err(BraidError::NotNormal(0));
            }
        }
        Ok(SymmetricNF { n, den, num })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(t_1, ..., t_q)`.
    pub fn den(&self) -> &[SimpleBraid] {
        &self.den
    }

    /// `(s_1, ..., s_p)`.
    pub fn num(&self) -> &[SimpleBraid] {
        &self.num
    }

    pub fn is_identity(&self) -> bool {
        self.den.is_empty() && self.num.is_empty()
    }

    /// Negative part followed by positive part.
    pub fn to_word(&self) -> BraidWord {
        sequence_word(self.n, &self.den)
            .inverse()
            .concat(&sequence_word(self.n, &self.num))
            .expect("same strand count")
    }

    /// Restore the invariants after a push.
    fn canonical(n: usize, den: Vec<SimpleBraid>, num: Vec<SimpleBraid>, tiles: &mut u64) -> Self {
        let fix = |seq: Vec<SimpleBraid>, tiles: &mut u64| {
            let seq = strip_identities(seq);
            if is_normal(&seq).expect("same strand count") {
                seq
            } else {
                debug_assert!(false, "push produced a non-normal sequence");
                normalize_sequence(&seq, tiles)
            }
        };
        let mut den = fix(den, tiles);
        let mut num = fix(num, tiles);
        while let (Some(s), Some(t)) = (num.first(), den.first()) {
            let g = gcd_left(s, t).expect("same strand count");
            if g.is_identity() {
                break;
            }
            let s_rest = g.left_quotient(s).expect("g divides s");
            let t_rest = g.left_quotient(t).expect("g divides t");
            num = left_multiply(s_rest, &num[1..], tiles);
            den = left_multiply(t_rest, &den[1..], tiles);
        }
        SymmetricNF { n, den, num }
    }
}

impl fmt::Display for SymmetricNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_factors(f, &self.den)?;
        f.write_str("; ")?;
        write_factors(f, &self.num)?;
        f.write_str(")")
    }
}

pub(crate) fn push_counted(nf: &SymmetricNF, u: &SimpleBraid, sign: Sign, tiles: &mut u64) -> SymmetricNF {
    match sign {
        Sign::Positive => {
            // y^{-1} x u = y^{-1} u_0 s' and u_0 = (*u_0)^{-1} Δ.
            let (u0, rest) = p_pass_rtl(&nf.num, u.clone(), tiles);
            let mut num = Vec::with_capacity(rest.len() + 1);
            if nf.den.is_empty() {
                num.push(u0);
                num.extend(rest);
                return SymmetricNF::canonical(nf.n, Vec::new(), num, tiles);
            }
            let (mut seq, last) = p_pass_ltr(u0.dual(Side::Left), &nf.den, tiles);
            seq.push(last);
            let mut seq = strip_identities(seq);
            let v0 = if seq.is_empty() { SimpleBraid::identity(nf.n) } else { seq.remove(0) };
            num.push(v0.dual(Side::Right));
            num.extend(rest);
            SymmetricNF::canonical(nf.n, seq, num, tiles)
        }
        Sign::Negative => {
            // y^{-1} x u^{-1} = (u_0 y)^{-1} s'.
            let (num, u0) = c_pass_rtl(&nf.num, u.clone(), tiles);
            let den = left_multiply(u0, &nf.den, tiles);
            SymmetricNF::canonical(nf.n, den, num, tiles)
        }
    }
}

/// Symmetric normal form of `z u^{±1}` from that of `z`.
pub fn symmetric_push(nf: &SymmetricNF, u: &SimpleBraid, sign: Sign) -> Result<SymmetricNF> {
    if nf.n != u.n() {
        return Err(BraidError::StrandMismatch(nf.n, u.n()));
    }
    Ok(push_counted(nf, u, sign, &mut 0))
}

/// Symmetric normal form of a word, together with the number of tiles used.
pub fn symmetric_nf_counted(w: &BraidWord, grouping: Grouping) -> (SymmetricNF, u64) {
    let mut tiles = 0;
    let mut nf = SymmetricNF::identity(w.n());
    for (u, positive) in blocks(w, grouping) {
        let sign = if positive { Sign::Positive } else { Sign::Negative };
        nf = push_counted(&nf, &u, sign, &mut tiles);
    }
    (nf, tiles)
}

pub fn symmetric_nf(w: &BraidWord) -> SymmetricNF {
    symmetric_nf_counted(w, Grouping::Runs).0
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

    fn nf(den: &[&str], num: &[&str]) -> SymmetricNF {
        SymmetricNF::new(4, den.iter().map(|s| sb(s)).collect(), num.iter().map(|s| sb(s)).collect()).unwrap()
    }

    #[test]
    fn push_examples() {
        assert_eq!(symmetric_push(&nf(&[], &["a"]), &sb("b"), Sign::Negative).unwrap(), nf(&["ab"], &["ba"]));
        assert_eq!(symmetric_push(&nf(&["ab"], &["ba", "ab"]), &sb("a"), Sign::Positive).unwrap(), nf(&[], &["a", "ab"]));
        assert_eq!(symmetric_push(&SymmetricNF::identity(4), &sb("bac"), Sign::Positive).unwrap(), nf(&[], &["bac"]));
        assert!(symmetric_push(&SymmetricNF::identity(3), &sb("a"), Sign::Positive).is_err());
    }

    #[test]
    fn whole_word_examples() {
        let got = symmetric_nf(&w4("aBabacABABAbbCB"));
        assert_eq!(got, nf(&["ab", "bacb"], &["bcba", "a"]));
        let den: Vec<Vec<usize>> = got.den().iter().map(|s| s.perm().images()).collect();
        assert_eq!(den, vec![vec![2, 3, 1, 4], vec![3, 4, 1, 2]]);
        assert_eq!(got.to_string(), "(ab, bacb; bcba, a)");
        assert!(symmetric_nf(&w4("")).is_identity());
        assert_eq!(SymmetricNF::identity(4).to_string(), "(; )");
    }

    #[test]
    fn inversion_swaps_the_parts() {
        let a = symmetric_nf(&w4("aB"));
        let b = symmetric_nf(&w4("bA"));
        assert_eq!(a, nf(&["ab"], &["ba"]));
        assert_eq!(b, nf(&["ba"], &["ab"]));
    }

    #[test]
    fn json_schema() {
        let got = symmetric_nf(&w4("aBabacABABAbbCB"));
        let json = serde_json::to_string(&got).unwrap();
        assert_eq!(json, r#"{"n":4,"den":[[2,3,1,4],[3,4,1,2]],"num":[[4,1,3,2],[2,1,3,4]]}"#);
        assert_eq!(serde_json::from_str::<SymmetricNF>(&json).unwrap(), got);
        assert!(serde_json::from_str::<SymmetricNF>(r#"{"n":4,"den":[[2,1,3,4]],"num":[[2,1,3,4]]}"#).is_err());
    }
}

//! Dynnikov coordinates: an exact action of `B_n` on `Z^{2n}` by
//! piecewise-linear maps, faithful on the base point `(0,1,...,0,1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::word::{common_embedding, BraidWord, Sign};

fn pos(x: &BigInt) -> BigInt {
    if x.is_positive() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.is_negative() {
        x.clone()
    } else {
        BigInt::zero()
    }
}

/// The update of `(a_i, b_i, a_{i+1}, b_{i+1})` under `σ_i` (positive
/// sign) or `σ_i^{-1}` (negative sign).
pub fn step(quad: &[BigInt; 4], sign: Sign) -> [BigInt; 4] {
    let [x1, y1, x2, y2] = quad;
    match sign {
        Sign::Positive => {
            let z = x1 - neg(y1) - x2 + pos(y2);
            [
                x1 + pos(y1) + pos(&(pos(y2) - &z)),
                y2 - pos(&z),
                x2 + neg(y2) + neg(&(neg(y1) + &z)),
                y1 + pos(&z),
            ]
        }
        Sign::Negative => {
            let z = x1 + neg(y1) - x2 - pos(y2);
            [
                x1 - pos(y1) - pos(&(pos(y2) + &z)),
                y2 + neg(&z),
                x2 - neg(y2) - neg(&(neg(y1) - &z)),
                y1 - neg(&z),
            ]
        }
    }
}

/// `(a_1, b_1, ..., a_n, b_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynnikovCoords {
    n: usize,
    coords: Vec<BigInt>,
}

impl DynnikovCoords {
    /// `(0, 1, ..., 0, 1)`, the coordinates of the empty word.
    pub fn base(n: usize) -> Self {
        let coords = (0..2 * n).map(|k| BigInt::from(k % 2)).collect();
        DynnikovCoords { n, coords }
    }

    pub fn from_values(values: Vec<BigInt>) -> Result<Self> {
        if !values.len().is_multiple_of(2) || values.len() < 4 {
            return Err(BraidError::TooFewStrands(values.len() / 2));
        }
        Ok(DynnikovCoords { n: values.len() / 2, coords: values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_base(&self) -> bool {
        *self == DynnikovCoords::base(self.n)
    }

    /// Apply one letter in place.
    pub fn apply(&mut self, index: usize, sign: Sign) {
        let k = 2 * (index - 1);
        let quad: [BigInt; 4] = [
            self.coords[k].clone(),
            self.coords[k + 1].clone(),
            self.coords[k + 2].clone(),
            self.coords[k + 3].clone(),
        ];
        for (slot, v) in self.coords[k..k + 4].iter_mut().zip(step(&quad, sign)) {
            *slot = v;
        }
    }

    /// Pad with `(0, 1)` pairs up to `to` strands.
    pub fn embed(&self, to: usize) -> Result<Self> {
        if to < self.n {
            return Err(BraidError::InvalidEmbedding { from: self.n, to });
        }
        let mut coords = self.coords.clone();
        for k in 2 * self.n..2 * to {
            coords.push(BigInt::from(k % 2));
        }
        Ok(DynnikovCoords { n: to, coords })
    }

    /// Largest bit length among the coordinates.
    pub fn max_bits(&self) -> u64 {
        self.coords.iter().map(BigInt::bits).max().unwrap_or(0)
    }
}

impl fmt::Display for DynnikovCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

// JSON arrays of plain integers; values beyond 64 bits go out as strings.
impl Serialize for DynnikovCoords {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coords.len()))?;
        for v in &self.coords {
            match v.to_i64() {
                Some(small) => seq.serialize_element(&small)?,
                None => seq.serialize_element(&v.to_string())?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coord {
    Small(i64),
    Big(String),
}

impl<'de> Deserialize<'de> for DynnikovCoords {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Coord>::deserialize(deserializer)?;
        let values = raw
            .into_iter()
            .map(|c| match c {
                Coord::Small(v) => Ok(BigInt::from(v)),
                Coord::Big(s) => s.parse::<BigInt>().map_err(de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        DynnikovCoords::from_values(values).map_err(de::Error::custom)
    }
}

/// `c · w`, letter by letter from the left.
pub fn act(c: &DynnikovCoords, w: &BraidWord) -> Result<DynnikovCoords> {
    if c.n != w.n() {
        return Err(BraidError::StrandMismatch(c.n, w.n()));
    }
    let mut out = c.clone();
    for l in w.letters() {
        out.apply(l.index(), l.sign());
    }
    Ok(out)
}

/// Coordinates of `w`: the base point acted on by `w`.
pub fn coords(w: &BraidWord) -> DynnikovCoords {
    act(&DynnikovCoords::base(w.n()), w).expect("same strand count")
}

/// Equal coordinates, i.e. equal braids. Words on different strand counts
/// are compared in the larger group.
pub fn equal_by_coords(w1: &BraidWord, w2: &BraidWord) -> bool {
    let (a, b) = common_embedding(w1, w2);
    coords(&a) == coords(&b)
}

pub fn trivial_by_coords(w: &BraidWord) -> bool {
    coords(w).is_base()
}

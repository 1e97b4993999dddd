//! Whole-grid computations on pairs of normal sequences.

use super::{check_sizes, require_normal, strip_identities};
use crate::error::Result;
use crate::simple::{c_tile, normalize_pair, SimpleBraid};

fn common_n(x: &[SimpleBraid], y: &[SimpleBraid]) -> Result<Option<usize>> {
    let Some(n) = x.first().or(y.first()).map(SimpleBraid::n) else {
        return Ok(None);
    };
    check_sizes(n, x)?;
    check_sizes(n, y)?;
    require_normal(x)?;
    require_normal(y)?;
    Ok(Some(n))
}

/// P-tile grid for the product `y · x`.
///
/// Layer `L` (bottom `L = 0`) passes `t_{q-L}` from the left edge through
/// the row below it. `rows[0]` is `x`, `rows[L + 1]` is the row above layer
/// `L`, and `verticals[L][c]` is the vertical edge at column line `c`.
#[derive(Debug, Clone)]
pub struct ProductGrid {
    rows: Vec<Vec<SimpleBraid>>,
    verticals: Vec<Vec<SimpleBraid>>,
    tiles: u64,
}

impl ProductGrid {
    pub fn build(x: &[SimpleBraid], y: &[SimpleBraid]) -> Result<Self> {
        common_n(x, y)?;
        let mut rows = vec![x.to_vec()];
        let mut verticals = Vec::with_capacity(y.len());
        let mut tiles = 0;
        for t in y.iter().rev() {
            let below = rows.last().expect("nonempty");
            let mut above = Vec::with_capacity(below.len());
            let mut edges = Vec::with_capacity(below.len() + 1);
            let mut carry = t.clone();
            edges.push(carry.clone());
            for s in below {
                let (head, tail) = normalize_pair(&carry, s)?;
                tiles += 1;
                above.push(head);
                carry = tail;
                edges.push(carry.clone());
            }
            rows.push(above);
            verticals.push(edges);
        }
        Ok(ProductGrid { rows, verticals, tiles })
    }

    /// Rows from bottom (`x`) to top.
    pub fn rows(&self) -> &[Vec<SimpleBraid>] {
        &self.rows
    }

    /// Column `c` read from top to bottom; column 0 is `y`.
    pub fn column(&self, c: usize) -> Vec<SimpleBraid> {
        self.verticals.iter().rev().map(|edges| edges[c].clone()).collect()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn tiles(&self) -> u64 {
        self.tiles
    }

    /// Top row followed by right column, identities removed.
    pub fn result(&self) -> Vec<SimpleBraid> {
        let mut out = self.rows.last().expect("nonempty").clone();
        out.extend(self.column(self.width()));
        strip_identities(out)
    }
}

/// Normal form of `y · x` from the normal forms of `x` and `y`.
pub fn grid_product(x: &[SimpleBraid], y: &[SimpleBraid]) -> Result<Vec<SimpleBraid>> {
    Ok(ProductGrid::build(x, y)?.result())
}

/// C-tile grid for the left complements of `x` and `y`.
///
/// Both inputs are padded with identities to a common length `N`. `rows[0]`
/// is the padded `x`; layer `r` (bottom `r = 0`) has right edge `t_{N-r}` and
/// is filled from right to left. `verticals[r][c]` is the vertical edge of
/// layer `r` at column line `c`.
#[derive(Debug, Clone)]
pub struct ComplementGrid {
    rows: Vec<Vec<SimpleBraid>>,
    verticals: Vec<Vec<SimpleBraid>>,
    tiles: u64,
}

/// `x/y`, `y/x` and `lcm_L(x, y)` as normal sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub x_over_y: Vec<SimpleBraid>,
    pub y_over_x: Vec<SimpleBraid>,
    pub lcm: Vec<SimpleBraid>,
}

impl ComplementGrid {
    pub fn build(x: &[SimpleBraid], y: &[SimpleBraid]) -> Result<Self> {
        let Some(n) = common_n(x, y)? else {
            return Ok(ComplementGrid { rows: vec![Vec::new()], verticals: Vec::new(), tiles: 0 });
        };
        let size = x.len().max(y.len());
        let pad = |seq: &[SimpleBraid]| {
            let mut v = seq.to_vec();
            v.resize(size, SimpleBraid::identity(n));
            v
        };
        let (x, y) = (pad(x), pad(y));
        let mut rows = vec![x];
        let mut verticals = Vec::with_capacity(size);
        let mut tiles = 0;
        for r in 0..size {
            let below = &rows[r];
            let mut above = below.clone();
            let mut edges = vec![SimpleBraid::identity(n); size + 1];
            edges[size] = y[size - 1 - r].clone();
            for c in (0..size).rev() {
                let (top, left) = c_tile(&below[c], &edges[c + 1])?;
                tiles += 1;
                above[c] = top;
                edges[c] = left;
            }
            rows.push(above);
            verticals.push(edges);
        }
        Ok(ComplementGrid { rows, verticals, tiles })
    }

    pub fn size(&self) -> usize {
        self.verticals.len()
    }

    pub fn tiles(&self) -> u64 {
        self.tiles
    }

    /// Rows from bottom (padded `x`) to top (`x/y`).
    pub fn rows(&self) -> &[Vec<SimpleBraid>] {
        &self.rows
    }

    /// Column line `c` read from top to bottom; the last one is padded `y`,
    /// the first is `y/x`.
    pub fn column(&self, c: usize) -> Vec<SimpleBraid> {
        self.verticals.iter().rev().map(|edges| edges[c].clone()).collect()
    }

    /// Products `top · right` of the cells on the diagonal from the top-left
    /// corner, each a left lcm of two simples.
    pub fn diagonal(&self) -> Vec<SimpleBraid> {
        let size = self.size();
        (0..size)
            .map(|k| {
                let layer = size - 1 - k;
                let top = &self.rows[layer + 1][k];
                let right = &self.verticals[layer][k + 1];
                top.mul(right).expect("a C-tile diagonal is simple")
            })
            .collect()
    }

    /// `k` diagonal steps followed by the rest of the row line reached.
    pub fn diagonal_then_row(&self, k: usize) -> Vec<SimpleBraid> {
        let size = self.size();
        let mut out: Vec<SimpleBraid> = self.diagonal()[..k].to_vec();
        out.extend_from_slice(&self.rows[size - k][k..]);
        out
    }

    /// `k` diagonal steps followed by the rest of the column line reached.
    pub fn diagonal_then_column(&self, k: usize) -> Vec<SimpleBraid> {
        let mut out: Vec<SimpleBraid> = self.diagonal()[..k].to_vec();
        out.extend(self.column(k).into_iter().skip(k));
        out
    }

    pub fn quotient(&self) -> Quotient {
        Quotient {
            x_over_y: strip_identities(self.rows.last().expect("nonempty").clone()),
            y_over_x: strip_identities(if self.size() == 0 { Vec::new() } else { self.column(0) }),
            lcm: strip_identities(self.diagonal()),
        }
    }
}

/// Normal forms of `x/y`, `y/x` and `lcm_L(x, y)`, where `(x/y)·y =
/// (y/x)·x = lcm_L(x, y)`.
pub fn grid_quotient(x: &[SimpleBraid], y: &[SimpleBraid]) -> Result<Quotient> {
    Ok(ComplementGrid::build(x, y)?.quotient())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gridnf::is_normal;
    use crate::word::{BraidWord, Format};

    fn sb(s: &str) -> SimpleBraid {
        let w = BraidWord::parse(s, Format::Alpha, Some(4)).unwrap();
        SimpleBraid::from_word(&w).unwrap().unwrap()
    }

    fn seq(words: &[&str]) -> Vec<SimpleBraid> {
        words.iter().map(|s| sb(s)).collect()
    }

    #[test]
    fn product_examples() {
        let x = seq(&["ac", "abcb", "bcba", "a"]);
        assert_eq!(grid_product(&x, &[]).unwrap(), x);
        assert_eq!(grid_product(&seq(&["a"]), &seq(&["b"])).unwrap(), seq(&["ba"]));
        assert_eq!(grid_product(&seq(&["ab"]), &seq(&["ba"])).unwrap(), seq(&["ba", "ab"]));
        assert_eq!(grid_product(&[], &x).unwrap(), x);
        assert!(grid_product(&seq(&["a", "b"]), &[]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let x = seq(&["ac", "abcb"]);
        assert_eq!(grid_quotient(&x, &[]).unwrap(), Quotient { x_over_y: x.clone(), y_over_x: vec![], lcm: x });
        assert_eq!(
            grid_quotient(&seq(&["ab"]), &seq(&["b"])).unwrap(),
            Quotient { x_over_y: seq(&["a"]), y_over_x: vec![], lcm: seq(&["ab"]) }
        );
        assert_eq!(
            grid_quotient(&seq(&["a"]), &seq(&["b"])).unwrap(),
            Quotient { x_over_y: seq(&["ba"]), y_over_x: seq(&["ab"]), lcm: seq(&["aba"]) }
        );
        assert_eq!(grid_quotient(&[], &[]).unwrap(), Quotient { x_over_y: vec![], y_over_x: vec![], lcm: vec![] });
    }

    #[test]
    fn paths_of_a_small_complement_grid_are_normal() {
        let g = ComplementGrid::build(&seq(&["ac", "abcb", "bcba", "a"]), &seq(&["ab", "bacb"])).unwrap();
        for row in g.rows() {
            assert!(is_normal(row).unwrap());
        }
        for c in 0..=g.size() {
            assert!(is_normal(&g.column(c)).unwrap());
        }
        for k in 0..=g.size() {
            assert!(is_normal(&g.diagonal_then_row(k)).unwrap());
            assert!(is_normal(&g.diagonal_then_column(k)).unwrap());
        }
    }
}

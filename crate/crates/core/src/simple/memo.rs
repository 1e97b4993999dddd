//! Per-thread tables of the binary tile operations for small `n`.

use std::cell::RefCell;
use std::collections::HashMap;

use super::{c_tile_raw, gcd_left_raw, normalize_pair_raw, Permutation, SimpleBraid};

/// Largest strand count for which results are cached.
pub const MEMO_MAX_N: usize = 6;

#[derive(Clone, Copy)]
enum Op {
    Gcd = 0,
    CTile = 1,
    Pair = 2,
}

thread_local! {
    static TABLE: RefCell<HashMap<u64, (u32, u32)>> = RefCell::new(HashMap::new());
}

fn key(op: Op, s: &SimpleBraid, t: &SimpleBraid) -> u64 {
    ((op as u64) << 56) | ((s.n() as u64) << 48) | (u64::from(s.0.pack()) << 24) | u64::from(t.0.pack())
}

fn cached(
    op: Op,
    s: &SimpleBraid,
    t: &SimpleBraid,
    compute: impl FnOnce() -> (SimpleBraid, SimpleBraid),
) -> (SimpleBraid, SimpleBraid) {
    let n = s.n();
    if n > MEMO_MAX_N {
        return compute();
    }
    let k = key(op, s, t);
    if let Some((a, b)) = TABLE.with(|t| t.borrow().get(&k).copied()) {
        return (
            SimpleBraid(Permutation::unpack(n, a)),
            SimpleBraid(Permutation::unpack(n, b)),
        );
    }
    let out = compute();
    TABLE.with(|t| t.borrow_mut().insert(k, (out.0 .0.pack(), out.1 .0.pack())));
    out
}

pub(super) fn gcd_left(s: &SimpleBraid, t: &SimpleBraid) -> SimpleBraid {
    cached(Op::Gcd, s, t, || (gcd_left_raw(s, t), SimpleBraid::identity(s.n()))).0
}

pub(super) fn c_tile(s: &SimpleBraid, t: &SimpleBraid) -> (SimpleBraid, SimpleBraid) {
    cached(Op::CTile, s, t, || c_tile_raw(s, t))
}

pub(super) fn normalize_pair(t1: &SimpleBraid, t2: &SimpleBraid) -> (SimpleBraid, SimpleBraid) {
    cached(Op::Pair, t1, t2, || normalize_pair_raw(t1, t2))
}

//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use braid_core::dynnikov::coords;
use braid_core::gridnf::{
    equal, greedy_nf, greedy_nf_counted, grid_product, grid_quotient, is_normal, symmetric_nf, ComplementGrid, Form,
    GreedyNF, Grouping, ProductGrid,
};
use braid_core::handle::{handle_trace, render_with_handle, shorten};
use braid_core::oracle::{brute_c_tile, brute_gcd, brute_head, cross_check, random_positive_word_with, random_word, FuzzParams};
use braid_core::redress::{redress_left, redress_right, trivial_by_redress, trivial_by_redress_with, Strategy, Variant};
use braid_core::simple::{c_tile, gcd_left, normalize_pair};
use braid_core::{BraidWord, Format, Side, SimpleBraid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const W0: &str = "aBabacABABAbbCB";

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn w4(s: &str) -> BraidWord {
    BraidWord::parse(s, Format::Alpha, Some(4)).expect("alpha word")
}

fn alpha(w: &BraidWord) -> String {
    w.render(Format::Alpha).expect("alpha range")
}

fn perm_list(seq: &[SimpleBraid]) -> String {
    seq.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prefix(len: usize) -> BraidWord {
    w4(&W0[..len])
}

fn greedy_golden() -> Check {
    let nf = greedy_nf(&w4(W0));
    let got = format!("({}; {})", nf.delta_exp(), perm_list(nf.factors()));
    let want = "(-2; (2,1,4,3),(2,4,3,1),(4,1,3,2),(2,1,3,4))";
    ensure(got == want, || format!("got {got}, want {want}"))?;
    let table = [
        (0, "(0; )"),
        (1, "(0; a)"),
        (2, "(-1; abcb, ba)"),
        (3, "(-1; abcb, ba, a)"),
        (4, "(-1; abcb, ba, ab)"),
        (5, "(0; a, ab)"),
        (6, "(0; a, abc)"),
        (14, "(-2; ac, abcb, bcba, ab)"),
        (15, "(-2; ac, abcb, bcba, a)"),
    ];
    for (len, want) in table {
        let got = greedy_nf(&prefix(len)).to_string();
        ensure(got == want, || format!("prefix {len}: got {got}, want {want}"))?;
    }
    let w = w4(W0);
    greedy_nf(&w);
    let runs = 200;
    let start = Instant::now();
    for _ in 0..runs {
        std::hint::black_box(greedy_nf(std::hint::black_box(&w)));
    }
    let each = start.elapsed() / runs;
    ensure(each < Duration::from_millis(1), || format!("runtime {each:?} per call"))?;
    Ok(format!("{got}, 9 prefixes, {each:?} per call"))
}

fn symmetric_golden() -> Check {
    let nf = symmetric_nf(&w4(W0));
    let got = format!("({}; {})", perm_list(nf.den()), perm_list(nf.num()));
    let want = "((2,3,1,4),(3,4,1,2); (4,1,3,2),(2,1,3,4))";
    ensure(got == want, || format!("got {got}, want {want}"))?;
    let table = [
        (0, "(; )"),
        (1, "(; a)"),
        (2, "(ab; ba)"),
        (3, "(ab; ba, a)"),
        (4, "(ab; ba, ab)"),
        (5, "(; a, ab)"),
        (6, "(; a, abc)"),
        (14, "(ab, bacb; bcba, ab)"),
        (15, "(ab, bacb; bcba, a)"),
    ];
    for (len, want) in table {
        let got = symmetric_nf(&prefix(len)).to_string();
        ensure(got == want, || format!("prefix {len}: got {got}, want {want}"))?;
    }
    Ok(format!("{got}, 9 prefixes"))
}

/// Normal sequence of a positive braid, leading `Δ`s spelled out.
fn expanded(nf: &GreedyNF) -> Vec<SimpleBraid> {
    assert!(nf.delta_exp() >= 0, "positive braid");
    let delta = SimpleBraid::delta(nf.n()).expect("n >= 2");
    let mut out = vec![delta; nf.delta_exp() as usize];
    out.extend_from_slice(nf.factors());
    out
}

fn redressing() -> Check {
    let w = w4(W0);
    let (u, v) = redress_right(&w);
    ensure(alpha(&u) == "aabcb" && alpha(&v.inverse()) == "ABBACB", || {
        format!("right pass gave {} / {}", alpha(&u), alpha(&v.inverse()))
    })?;
    let (trivial, double) = trivial_by_redress(&w, Variant::DoubleRight);
    ensure(!trivial && alpha(&double) == "cbaacBCABBA", || format!("double right residue {}", alpha(&double)))?;
    let (trivial, mixed) = trivial_by_redress(&w, Variant::RightThenLeft);
    ensure(!trivial && alpha(&mixed) == "BACBBAcbaac", || format!("right then left residue {}", alpha(&mixed)))?;
    // The second right pass acts on v^{-1} u, the left pass on u v^{-1}.
    let swapped = v.inverse().concat(&u).expect("same n");
    ensure(equal(&double, &swapped, Form::Greedy), || format!("{} is not v^-1 u", alpha(&double)))?;
    ensure(equal(&mixed, &w, Form::Greedy), || format!("{} is not equal to the input", alpha(&mixed)))?;
    // The left fraction v^{-1} u is irreducible, so its parts are the
    // symmetric normal form's denominator and numerator.
    let (den, num) = redress_left(&mixed);
    let sym = symmetric_nf(&w);
    ensure(expanded(&greedy_nf(&num)) == sym.num() && expanded(&greedy_nf(&den)) == sym.den(), || {
        format!("parts {} and {} do not match {sym}", alpha(&den), alpha(&num))
    })?;
    let steps = trivial_by_redress_with(&w, Variant::DoubleRight, Strategy::Leftmost, None).map_err(|e| e.to_string())?;
    Ok(format!("u=aabcb v^-1=ABBACB, residues {} and {}, {} rewrites", alpha(&double), alpha(&mixed), steps.steps))
}

fn handles() -> Check {
    let w = w4(W0);
    let trace = handle_trace(&w, None).map_err(|e| e.to_string())?;
    let got: Vec<String> = trace
        .iter()
        .map(|(word, h)| match h {
            Some(h) => render_with_handle(word, h).expect("valid span"),
            None => alpha(word),
        })
        .collect();
    let want = ["aBab[acA]BABAbbCB", "aBa[bcB]ABAbbCB", "aB[aCbcA]BAbbCB", "aBCBa[bcB]AbbCB", "aBCB[aCbcA]bbCB", "aBCBCBabcbbCB"];
    ensure(got == want, || format!("trace {got:?}"))?;
    let short = shorten(&w);
    ensure(short.len() == 7 && equal(&short, &w, Form::Greedy), || format!("shortened to {}", alpha(&short)))?;
    let exact = alpha(&short) == "acBCCBa";
    Ok(format!("6-word trace, shortened to {}{}", alpha(&short), if exact { " (exact)" } else { " (equivalent)" }))
}

fn dynnikov() -> Check {
    let table: [(usize, [i64; 8]); 8] = [
        (0, [0, 1, 0, 1, 0, 1, 0, 1]),
        (1, [1, 0, 0, 2, 0, 1, 0, 1]),
        (2, [1, 0, -2, 0, 0, 3, 0, 1]),
        (3, [1, -3, -2, 3, 0, 3, 0, 1]),
        (4, [1, -3, 3, 2, 0, 4, 0, 1]),
        (5, [1, -1, 3, 0, 0, 4, 0, 1]),
        (14, [1, -7, 5, -1, -7, 4, 0, 8]),
        (15, [1, -7, -6, 4, 1, -1, 0, 8]),
    ];
    for (len, want) in table {
        let got = coords(&prefix(len));
        let want = want.map(|v| v.to_string()).join(",");
        ensure(got.to_string() == want, || format!("prefix {len}: got {got}, want {want}"))?;
    }
    Ok(format!("8 tuples, final ({})", coords(&w4(W0))))
}

fn differential() -> Check {
    let params = FuzzParams { n_min: 2, n_max: 6, len_min: 0, len_max: 64, count: 10_000, seed: 2024, budget: Some(10_000_000) };
    let start = Instant::now();
    let report = cross_check(&params);
    let elapsed = start.elapsed();
    ensure(report.passed(), || format!("{} disagreements, first {:?}", report.disagreements.len(), report.disagreements[0]))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} cases, 0 disagreements, {} budget exhausted, {:.1?}",
        report.cases_run,
        report.budget_exhausted.len(),
        elapsed
    ))
}

fn exhaustive() -> Check {
    let mut pairs = 0;
    for n in [3, 4] {
        let all = SimpleBraid::all(n);
        for s in &all {
            for t in &all {
                pairs += 1;
                let err = |what: &str| format!("{what} differs on ({s}, {t})");
                let (head, tail) = normalize_pair(s, t).map_err(|e| e.to_string())?;
                ensure(head == brute_head(s, t).map_err(|e| e.to_string())?, || err("head"))?;
                ensure(head.perm().compose(tail.perm()) == s.perm().compose(t.perm()), || err("head·tail"))?;
                ensure(gcd_left(s, t).map_err(|e| e.to_string())? == brute_gcd(s, t).map_err(|e| e.to_string())?, || err("gcd"))?;
                ensure(c_tile(s, t).map_err(|e| e.to_string())? == brute_c_tile(s, t).map_err(|e| e.to_string())?, || err("c_tile"))?;
                if n == 4 {
                    let normal = is_normal(&[s.clone(), t.clone()]).map_err(|e| e.to_string())?;
                    let coprime = gcd_left(&s.dual(Side::Right), t).map_err(|e| e.to_string())?.is_identity();
                    ensure(normal == coprime, || err("dual criterion"))?;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, dual criterion on 576"))
}

fn random_normal(rng: &mut ChaCha8Rng, n: usize) -> Vec<SimpleBraid> {
    let len = rng.gen_range(0..=12);
    expanded(&greedy_nf(&random_positive_word_with(rng, n, len)))
}

fn word_of(n: usize, seq: &[SimpleBraid]) -> BraidWord {
    let letters = seq.iter().flat_map(|s| s.to_word().into_letters()).collect();
    BraidWord::new(n, letters).expect("factor words fit")
}

fn grids() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut paths = 0usize;
    for case in 0..1000 {
        let n = rng.gen_range(3..=5);
        let x = random_normal(&mut rng, n);
        let y = random_normal(&mut rng, n);
        let err = |what: &str| format!("case {case}: {what} for x={} y={}", perm_list(&x), perm_list(&y));
        let normal = |seq: &[SimpleBraid]| is_normal(seq).expect("same n");

        let p = ProductGrid::build(&x, &y).map_err(|e| e.to_string())?;
        for row in p.rows() {
            ensure(normal(row), || err("product row"))?;
        }
        for c in 0..=p.width() {
            ensure(normal(&p.column(c)), || err("product column"))?;
        }
        paths += p.rows().len() + p.width() + 1;
        let product = grid_product(&x, &y).map_err(|e| e.to_string())?;
        let scratch = expanded(&greedy_nf(&word_of(n, &y).concat(&word_of(n, &x)).expect("same n")));
        ensure(product == scratch, || err("grid product"))?;

        let g = ComplementGrid::build(&x, &y).map_err(|e| e.to_string())?;
        for row in g.rows() {
            ensure(normal(row), || err("complement row"))?;
        }
        for k in 0..=g.size() {
            ensure(normal(&g.column(k)), || err("complement column"))?;
            ensure(normal(&g.diagonal_then_row(k)), || err("diagonal then row"))?;
            ensure(normal(&g.diagonal_then_column(k)), || err("diagonal then column"))?;
        }
        paths += g.rows().len() + 3 * (g.size() + 1);
        let q = grid_quotient(&x, &y).map_err(|e| e.to_string())?;
        // y x^{-1} left-redresses to (x/y)^{-1} (y/x).
        let (v, u) = redress_left(&word_of(n, &y).concat(&word_of(n, &x).inverse()).expect("same n"));
        ensure(expanded(&greedy_nf(&v)) == q.x_over_y, || err("x/y"))?;
        ensure(expanded(&greedy_nf(&u)) == q.y_over_x, || err("y/x"))?;
        let lcm = expanded(&greedy_nf(&v.concat(&word_of(n, &y)).expect("same n")));
        ensure(lcm == q.lcm, || err("lcm"))?;
    }
    Ok(format!("1000 pairs, {paths} paths normal, products and complements match"))
}

fn mean_steps(len: usize, samples: u64, run: impl Fn(&BraidWord) -> u64) -> f64 {
    let total: u64 = (0..samples).map(|seed| run(&random_word(4, len, 9000 + seed))).sum();
    total as f64 / samples as f64
}

fn scaling() -> Check {
    let samples = 30;
    let greedy = |w: &BraidWord| greedy_nf_counted(w, Grouping::PerLetter).1;
    let redress = |w: &BraidWord| {
        trivial_by_redress_with(w, Variant::DoubleRight, Strategy::Leftmost, None).expect("no budget").steps
    };
    let mut parts = Vec::new();
    for (name, ratio) in [
        ("greedy", mean_steps(512, samples, greedy) / mean_steps(256, samples, greedy)),
        ("redress", mean_steps(512, samples, redress) / mean_steps(256, samples, redress)),
    ] {
        ensure(ratio <= 4.5, || format!("{name} step ratio {ratio:.2}"))?;
        parts.push(format!("{name} x{ratio:.2}"));
    }
    let mut worst = 0i64;
    for len in [16, 64, 256, 512, 1024] {
        for seed in 0..10 {
            let bits = coords(&random_word(4, len, seed)).max_bits() as i64;
            ensure(bits <= len as i64 + 2, || format!("{bits} bits after {len} letters"))?;
            worst = worst.max(bits - len as i64);
        }
    }
    parts.push(format!("coordinate bits - length <= {worst}"));
    Ok(parts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("greedy normal form", greedy_golden),
        ("symmetric normal form", symmetric_golden),
        ("redressing", redressing),
        ("handle reduction", handles),
        ("dynnikov coordinates", dynnikov),
        ("differential suite", differential),
        ("exhaustive small-n oracles", exhaustive),
        ("grid properties", grids),
        ("scaling", scaling),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}

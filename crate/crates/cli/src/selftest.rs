//! Differential checks against the brute-force oracles.

use std::io::Write;

use anyhow::{ensure, Result};
use clap::Args;
use num_bigint::BigUint;
use rand::Rng;
use serde_json::json;
use subwords::testkit::{self, iota_bruteforce, zeta_bruteforce};
use subwords::{iota, zeta, Signature, Word};

#[derive(Args, Debug)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random words (and programs) to check.
    #[arg(long, default_value_t = 2000)]
    cases: usize,
    /// Longest random word; brute force is exponential in this.
    #[arg(long, default_value_t = 12)]
    max_len: usize,
    #[arg(long, default_value_t = 3)]
    alphabet_size: usize,
}

struct Counterexample {
    check: &'static str,
    input: String,
    got: String,
    want: String,
}

fn first_mismatch(args: &SelftestArgs, case: usize) -> Option<Counterexample> {
    let seed = args.seed.wrapping_add(case as u64);
    let u = testkit::gen_word(seed, args.max_len, args.alphabet_size);
    let show = |w: &Word| w.to_string();
    let mismatch = |check, got: String, want: String| {
        Some(Counterexample {
            check,
            input: show(&u),
            got,
            want,
        })
    };

    let (i, ib) = (iota(&u), iota_bruteforce(&u));
    if i != ib {
        return mismatch("iota vs brute force", i.to_string(), ib.to_string());
    }
    let (z, zb) = (zeta(&u), zeta_bruteforce(&u));
    if z != zb {
        return mismatch("zeta vs brute force", z.to_string(), zb.to_string());
    }

    if u.len() >= 2 {
        let mut rng = testkit::rng(seed);
        let cut = rng.gen_range(1..u.len());
        let left = Signature::of_word(&u.factor(0, cut).unwrap()).unwrap();
        let right = Signature::of_word(&u.factor(cut, u.len()).unwrap()).unwrap();
        let whole = Signature::of_word(&u).unwrap();
        let composed = left.compose(&right);
        if composed != whole {
            return Some(Counterexample {
                check: "compose vs signature of the concatenation",
                input: format!("{} · {}", &u.to_string()[..cut], &u.to_string()[cut..]),
                got: composed.to_json_string(),
                want: whole.to_json_string(),
            });
        }
        let own = Word::new(&u.to_bytes()).unwrap();
        let (si, sz) = (whole.iota().clone(), whole.zeta());
        let (oi, oz) = (BigUint::from(iota(&own)), BigUint::from(zeta(&own)));
        if (&si, &sz) != (&oi, &oz) {
            return mismatch(
                "indexes from signature",
                format!("({si}, {sz})"),
                format!("({oi}, {oz})"),
            );
        }
    }

    let slp = testkit::gen_slp_bounded(seed, 40, args.alphabet_size, 10_000);
    let expanded = slp.expand(10_000).expect("bounded expansion");
    let idx = slp.indexes();
    let want = (
        BigUint::from(iota(&expanded)),
        BigUint::from(zeta(&expanded)),
    );
    if (idx.iota.clone(), idx.zeta.clone()) != want {
        return Some(Counterexample {
            check: "SLP indexes vs expansion",
            input: slp.to_string(),
            got: format!("({}, {})", idx.iota, idx.zeta),
            want: format!("({}, {})", want.0, want.1),
        });
    }
    None
}

/// Returns `Ok(false)` when a counterexample was found.
pub fn run(args: &SelftestArgs, json: bool, out: &mut dyn Write) -> Result<bool> {
    ensure!(
        (1..=64).contains(&args.alphabet_size),
        "--alphabet-size must be between 1 and 64"
    );
    let found = (0..args.cases).find_map(|case| first_mismatch(args, case).map(|c| (case, c)));
    let ok = found.is_none();
    match (found, json) {
        (None, false) => writeln!(out, "ok: {} cases passed", args.cases)?,
        (None, true) => {
            serde_json::to_writer_pretty(&mut *out, &json!({ "ok": true, "cases": args.cases }))?;
            writeln!(out)?;
        }
        (Some((case, c)), false) => {
            writeln!(out, "FAILED at case {case}: {}", c.check)?;
            writeln!(out, "  input: {}", c.input)?;
            writeln!(out, "  got:   {}", c.got)?;
            writeln!(out, "  want:  {}", c.want)?;
        }
        (Some((case, c)), true) => {
            let v = json!({
                "ok": false,
                "case": case,
                "check": c.check,
                "input": c.input,
                "got": c.got,
                "want": c.want,
            });
            serde_json::to_writer_pretty(&mut *out, &v)?;
            writeln!(out)?;
        }
    }
    Ok(ok)
}

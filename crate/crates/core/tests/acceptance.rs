//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use springer_core::verify;
use springer_core::{
    count_lbp_dp, enumerate_snakes, euler_sequence, fz, fz_inverse, phi, phi_trace, psi,
    snake_to_lbp, springer_egf, Family, LaguerreHistory, Permutation, SignedPermutation, ThreeWIP,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// Run named verify properties at `n`, failing on the first that does not pass.
fn properties(names: &[&str], n: usize) -> Outcome {
    let mut details = Vec::new();
    for name in names {
        let p = verify::find(name).ok_or_else(|| format!("no property {name}"))?;
        let row = verify::run_property(&p, n);
        if !row.passed {
            return Err(format!("{name} n<={}: {}", row.n_max, row.detail));
        }
        details.push(format!("{name} n<={} ({})", row.n_max, row.detail));
    }
    Ok(details.join("; "))
}

fn sequences() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_springer"))
        .args(["springer", "--n-max", "6"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), "springer exited with failure")?;
    let got: Vec<String> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(str::to_owned)
        .collect();
    let got = got.join(",");
    ensure(
        got == "1,1,3,11,57,361,2763",
        format!("springer printed {got}"),
    )?;
    let euler = join(&euler_sequence(6));
    ensure(euler == "1,1,1,2,5,16,61", format!("euler {euler}"))?;
    Ok(format!("S = {got}; E = {euler}"))
}

fn four_way() -> Outcome {
    for n in 0..=6 {
        let s = springer_egf(n).values[n].clone();
        for f in [Family::Snakes, Family::Wip3, Family::Rcalt, Family::Lbp] {
            let c = BigUint::from(f.count_enumerated(n));
            ensure(c == s, format!("n={n} {f}: {c} vs {s}"))?;
        }
    }
    Ok("snakes = wip3 = rcalt = lbp = S_n for n=0..6".into())
}

fn golden() -> Outcome {
    let parse_err = |e: springer_core::Error| e.to_string();
    let wip: ThreeWIP = "1 5 2 6 7 3 8 9 4 / 2 5 6 3 1 7 8 4 9"
        .parse()
        .map_err(parse_err)?;
    let t = phi_trace(&wip).map_err(parse_err)?;
    let marks: Vec<u32> = t.tau.marks.iter().copied().collect();
    ensure(marks == [7, 9], format!("tau marks {marks:?}"))?;
    ensure(
        t.tau_tilde.perm.to_string() == "5 7 1 2 6 3 8 9 4",
        format!("tau~ {}", t.tau_tilde),
    )?;
    let snake = phi(&wip).map_err(parse_err)?.to_string();
    ensure(snake == "5 -7 -1 -2 6 3 8 -9 -4", format!("phi {snake}"))?;

    for (input, want) in [
        ("2 1 5 -4 -3", "3 2 10 6 7 4 5 1 9 8"),
        ("1 -5 -3 -6 2 -4", "10 5 12 9 11 6 7 2 4 1 8 3"),
    ] {
        let s: SignedPermutation = input.parse().map_err(parse_err)?;
        let got = psi(&s).map_err(parse_err)?.to_string();
        ensure(got == want, format!("psi({input}) = {got}"))?;
    }

    let p: Permutation = "4 3 1 2 9 6 8 5 7".parse().map_err(parse_err)?;
    let h = fz(&p);
    ensure(
        h.to_string() == "UHTDUUHDD;0,1,0,0,0,0,2,1,0",
        format!("fz {h}"),
    )?;
    let back = fz_inverse(&h).map_err(parse_err)?;
    ensure(back == p, format!("fz inverse {back}"))?;
    let reparsed: LaguerreHistory = h.to_string().parse().map_err(parse_err)?;
    ensure(
        fz_inverse(&reparsed).map_err(parse_err)? == p,
        "fz inverse from text",
    )?;

    let s: SignedPermutation = "2 -1 5 4 7 -6 -3".parse().map_err(parse_err)?;
    let l = snake_to_lbp(&s).map_err(parse_err)?.to_string();
    ensure(l == "UUUDDUU;0,0,1,2,0,0,0", format!("snake_to_lbp {l}"))?;
    Ok("phi with trace, psi x2, fz and inverse, snake_to_lbp".into())
}

fn snake_list() -> Outcome {
    let want: BTreeSet<&str> = [
        "1 -2 3", "1 -3 2", "1 -3 -2", "2 1 3", "2 -1 3", "2 -3 1", "2 -3 -1", "3 1 2", "3 -1 2",
        "3 -2 1", "3 -2 -1",
    ]
    .into_iter()
    .collect();
    let got: Vec<String> = enumerate_snakes(3).map(|s| s.to_string()).collect();
    let got_set: BTreeSet<&str> = got.iter().map(String::as_str).collect();
    ensure(got.len() == 11, format!("{} snakes", got.len()))?;
    ensure(got_set == want, format!("got {got:?}"))?;
    Ok("11 snakes, set equal".into())
}

fn roundtrips() -> Outcome {
    let a = properties(
        &[
            "bijection-phi",
            "bijection-psi",
            "bijection-halving",
            "bijection-snake2lbp",
        ],
        6,
    )?;
    let b = properties(&["bijection-fz"], 7)?;
    Ok(format!("{a}; {b}"))
}

fn lemmas() -> Outcome {
    let a = properties(&["lemma-cor", "lemma-rcfz"], 7)?;
    let b = properties(&["lemma-rc"], 6)?;
    Ok(format!("{a}; {b}"))
}

fn oracles() -> Outcome {
    let egf = springer_egf(12).values;
    for (n, s) in egf.iter().enumerate() {
        let dp = count_lbp_dp(n);
        ensure(dp == *s, format!("n={n}: dp {dp} vs egf {s}"))?;
    }
    let counted = Family::Lbp.count_enumerated(7);
    ensure(counted == 24611, format!("|lbp_7| = {counted}"))?;
    ensure(
        egf[7] == BigUint::from(24611u32),
        format!("S_7 = {}", egf[7]),
    )?;
    Ok(format!(
        "dp = egf for n<=12 (S_12 = {}); S_7 = 24611 by enumeration",
        egf[12]
    ))
}

fn involutions() -> Outcome {
    properties(&["wbar-involution", "history-rc-involution"], 7)
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 sequence reproduction", Duration::from_secs(1), sequences),
        (
            "2 four-way count equality",
            Duration::from_secs(60),
            four_way,
        ),
        ("3 golden examples", Duration::from_secs(1), golden),
        ("4 snake list n=3", Duration::from_secs(1), snake_list),
        (
            "5 roundtrip exhaustion",
            Duration::from_secs(120),
            roundtrips,
        ),
        ("6 lemma suites", Duration::from_secs(120), lemmas),
        ("7 oracle agreement", Duration::from_secs(60), oracles),
        ("8 involutions", Duration::from_secs(60), involutions),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit {limit:?}")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {name} [{:.3}s] {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Exhaustive property checks over every family up to a size bound.
//!
//! Each property enumerates its domain, runs the check on every object and
//! reports the first counterexample. Properties are independent and may run
//! concurrently; the report is always ordered by property name.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use crate::bijections::{
    fz, fz_inverse, lbp_to_rcalt, lbp_to_snake, phi, phi_inverse, psi, psi_inverse, rcalt_to_lbp,
    snake_to_lbp, snake_to_lbp_with, Mode,
};
use crate::families::{
    enumerate_laguerre, enumerate_lbp, enumerate_permutations, enumerate_rcalt, enumerate_snakes,
    enumerate_wip3, euler_sequence, springer_egf, Family,
};
use crate::par;
use crate::paths::{count_lbp_dp, LabeledBallotPath, LaguerreHistory};
use crate::perm::{LocalShape, Permutation, SignedPermutation};

type Check = std::result::Result<String, String>;

pub struct Property {
    pub name: &'static str,
    /// Largest size this property is run at, given the requested bound.
    pub range: fn(usize) -> usize,
    pub run: fn(usize) -> Check,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub name: &'static str,
    pub n_max: usize,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<34} n<={:<3} {:<5} {:>9.3}s  {}",
            self.name,
            self.n_max,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<34} {:<6} {:<5} {:>10}  DETAIL",
            "PROPERTY", "RANGE", "STATUS", "ELAPSED"
        )?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        let failed = self.rows.iter().filter(|r| !r.passed).count();
        write!(f, "{} properties, {} failed", self.rows.len(), failed)
    }
}

pub fn run_property(p: &Property, n_max: usize) -> Row {
    let bound = (p.range)(n_max);
    let start = Instant::now();
    let result = (p.run)(bound);
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    Row {
        name: p.name,
        n_max: bound,
        passed,
        detail,
        elapsed,
    }
}

/// Run every property up to `n_max`.
pub fn run_all(n_max: usize) -> Report {
    let mut props = properties();
    props.sort_by_key(|p| p.name);
    let rows = par::run_jobs(&props, |p| run_property(p, n_max));
    Report { rows }
}

pub fn find(name: &str) -> Option<Property> {
    properties().into_iter().find(|p| p.name == name)
}

fn same(n: usize) -> usize {
    n
}

// Oracle-only comparisons are cheap enough to always reach 12.
fn at_least_12(n: usize) -> usize {
    n.max(12)
}

// Mutation fuzzing is quadratic per object; keep it at desk scale.
fn at_most_5(n: usize) -> usize {
    n.min(5)
}

pub fn properties() -> Vec<Property> {
    vec![
        Property {
            name: "alternating-count-euler",
            range: same,
            run: alternating_count_euler,
        },
        Property {
            name: "bijection-fz",
            range: same,
            run: bijection_fz,
        },
        Property {
            name: "bijection-halving",
            range: same,
            run: bijection_halving,
        },
        Property {
            name: "bijection-phi",
            range: same,
            run: bijection_phi,
        },
        Property {
            name: "bijection-psi",
            range: same,
            run: bijection_psi,
        },
        Property {
            name: "bijection-snake2lbp",
            range: same,
            run: bijection_snake2lbp,
        },
        Property {
            name: "count-dp-vs-egf",
            range: at_least_12,
            run: count_dp_vs_egf,
        },
        Property {
            name: "count-dp-vs-lbp-enumeration",
            range: same,
            run: count_dp_vs_lbp,
        },
        Property {
            name: "count-four-way",
            range: same,
            run: count_four_way,
        },
        Property {
            name: "count-laguerre-factorial",
            range: same,
            run: count_laguerre,
        },
        Property {
            name: "cycle-peaks-become-left-peaks",
            range: same,
            run: cycle_peaks_to_left_peaks,
        },
        Property {
            name: "enumerators-canonical-order",
            range: same,
            run: enumerators_sorted,
        },
        Property {
            name: "extension-rc-fixed",
            range: same,
            run: extension_rc_fixed,
        },
        Property {
            name: "extension-matches-fz-image",
            range: same,
            run: extension_matches_fz,
        },
        Property {
            name: "foata-roundtrip",
            range: same,
            run: foata_roundtrip,
        },
        Property {
            name: "history-rc-involution",
            range: same,
            run: history_rc_involution,
        },
        Property {
            name: "invert-involution",
            range: same,
            run: invert_involution,
        },
        Property {
            name: "lemma-cor",
            range: same,
            run: lemma_cor,
        },
        Property {
            name: "lemma-rc",
            range: same,
            run: lemma_rc,
        },
        Property {
            name: "lemma-rcfz",
            range: same,
            run: lemma_rcfz,
        },
        Property {
            name: "left-peak-owns-right-valley",
            range: same,
            run: peak_owns_valley,
        },
        Property {
            name: "modes-agree",
            range: same,
            run: modes_agree,
        },
        Property {
            name: "rc-involution",
            range: same,
            run: rc_involution,
        },
        Property {
            name: "rc-swaps-vincular-counts",
            range: same,
            run: rc_swaps_vincular,
        },
        Property {
            name: "rcalt-fz-dyck-rc-fixed",
            range: same,
            run: rcalt_fz_dyck,
        },
        Property {
            name: "snake-sign-pattern",
            range: same,
            run: snake_sign_pattern,
        },
        Property {
            name: "validators-agree-with-enumeration",
            range: at_most_5,
            run: validators_agree,
        },
        Property {
            name: "wbar-involution",
            range: same,
            run: wbar_involution,
        },
    ]
}

// Run `check` over every object of every size `0..=n_max`; the detail is the
// total number of objects checked.
fn over_sizes<T, E, F>(n_max: usize, enumerate: E, check: F) -> Check
where
    T: Sync + Send + fmt::Display,
    E: Fn(usize) -> Vec<T>,
    F: Fn(&T) -> std::result::Result<(), String> + Sync + Send,
{
    let mut total = 0;
    for n in 0..=n_max {
        let items = enumerate(n);
        total += par::check_all(&items, |x| check(x).map_err(|e| format!("n={n} {x}: {e}")))?;
    }
    Ok(format!("{total} objects"))
}

fn perms(n: usize) -> Vec<Permutation> {
    enumerate_permutations(n).collect()
}

fn expect_eq<T: PartialEq + fmt::Display>(got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

fn err_str<T, E: fmt::Display>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

// A map between two enumerated families is a bijection, with the given
// inverse on both sides.
fn bijection<A, B, F, G>(
    n_max: usize,
    domain: fn(usize) -> Vec<A>,
    codomain: fn(usize) -> Vec<B>,
    fwd: F,
    back: G,
) -> Check
where
    A: Sync + Send + Eq + Hash + fmt::Display,
    B: Sync + Send + Eq + Hash + fmt::Display,
    F: Fn(&A) -> std::result::Result<B, String> + Sync + Send,
    G: Fn(&B) -> std::result::Result<A, String> + Sync + Send,
{
    let mut total = 0;
    for n in 0..=n_max {
        let xs = domain(n);
        let ys = codomain(n);
        let images = par::try_map(&xs, |x| {
            let y = fwd(x).map_err(|e| format!("n={n} forward({x}): {e}"))?;
            let back_x = back(&y).map_err(|e| format!("n={n} inverse({y}): {e}"))?;
            if back_x != *x {
                return Err(format!("n={n} inverse(forward({x})) = {back_x}"));
            }
            Ok(y)
        })?;
        let codomain_set: HashSet<&B> = ys.iter().collect();
        let image_set: HashSet<&B> = images.iter().collect();
        if image_set.len() != xs.len() {
            return Err(format!("n={n}: not injective"));
        }
        if image_set != codomain_set {
            return Err(format!(
                "n={n}: image has {} objects, codomain {}",
                image_set.len(),
                codomain_set.len()
            ));
        }
        par::check_all(&ys, |y| {
            let x = back(y).map_err(|e| format!("n={n} inverse({y}): {e}"))?;
            let y2 = fwd(&x).map_err(|e| format!("n={n} forward({x}): {e}"))?;
            if y2 != *y {
                return Err(format!("n={n} forward(inverse({y})) = {y2}"));
            }
            Ok(())
        })?;
        total += xs.len();
    }
    Ok(format!("{total} pairs"))
}

fn alternating_count_euler(n_max: usize) -> Check {
    let euler = euler_sequence(n_max);
    for (n, e) in euler.iter().enumerate() {
        let count = BigUint::from(Family::Altperm.count_enumerated(n));
        if count != *e {
            return Err(format!("n={n}: {count} alternating vs E_n = {e}"));
        }
    }
    Ok(join(&euler))
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn bijection_phi(n_max: usize) -> Check {
    bijection(
        n_max,
        |n| enumerate_wip3(n).collect(),
        |n| enumerate_snakes(n).collect(),
        |w| err_str(phi(w)),
        |s| err_str(phi_inverse(s)),
    )
}

fn bijection_psi(n_max: usize) -> Check {
    bijection(
        n_max,
        |n| enumerate_snakes(n).collect(),
        |n| enumerate_rcalt(n).collect(),
        |s| err_str(psi(s)),
        |p| err_str(psi_inverse(p)),
    )
}

fn bijection_fz(n_max: usize) -> Check {
    bijection(
        n_max,
        perms,
        |n| enumerate_laguerre(n).collect(),
        |p| Ok(fz(p)),
        |h| err_str(fz_inverse(h)),
    )
}

fn bijection_halving(n_max: usize) -> Check {
    bijection(
        n_max,
        |n| enumerate_rcalt(n).collect(),
        |n| enumerate_lbp(n).collect(),
        |p| err_str(rcalt_to_lbp(p)),
        |l| err_str(lbp_to_rcalt(l)),
    )
}

fn bijection_snake2lbp(n_max: usize) -> Check {
    bijection(
        n_max,
        |n| enumerate_snakes(n).collect(),
        |n| enumerate_lbp(n).collect(),
        |s| err_str(snake_to_lbp(s)),
        |l| err_str(lbp_to_snake(l)),
    )
}

fn count_dp_vs_egf(n_max: usize) -> Check {
    let egf = springer_egf(n_max).values;
    for (n, s) in egf.iter().enumerate() {
        let dp = count_lbp_dp(n);
        if dp != *s {
            return Err(format!("n={n}: dp {dp} vs egf {s}"));
        }
    }
    Ok(format!("S_{n_max} = {}", egf[n_max]))
}

fn count_dp_vs_lbp(n_max: usize) -> Check {
    for n in 0..=n_max {
        let dp = count_lbp_dp(n);
        let counted = BigUint::from(Family::Lbp.count_enumerated(n));
        if dp != counted {
            return Err(format!("n={n}: dp {dp} vs enumeration {counted}"));
        }
    }
    Ok(format!("{}", count_lbp_dp(n_max)))
}

fn count_four_way(n_max: usize) -> Check {
    let egf = springer_egf(n_max).values;
    for (n, s) in egf.iter().enumerate() {
        for f in [Family::Snakes, Family::Wip3, Family::Rcalt, Family::Lbp] {
            let counted = BigUint::from(f.count_enumerated(n));
            if counted != *s {
                return Err(format!("n={n}: |{f}| = {counted}, S_n = {s}"));
            }
        }
    }
    Ok(join(&egf))
}

fn count_laguerre(n_max: usize) -> Check {
    let mut fact = BigUint::from(1u32);
    for n in 0..=n_max {
        if n > 0 {
            fact *= BigUint::from(n);
        }
        let counted = BigUint::from(Family::Laguerre.count_enumerated(n));
        if counted != fact {
            return Err(format!("n={n}: {counted} histories vs n! = {fact}"));
        }
    }
    Ok(format!("{n_max}! = {fact}"))
}

fn cycle_peaks_to_left_peaks(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        let f = p.foata();
        let at_peaks = f.left_peaks().into_iter().map(|i| f.at(i)).collect();
        if p.cycle_peaks() == at_peaks {
            Ok(())
        } else {
            Err("cycle peaks differ from left-peak values of foata".into())
        }
    })
}

fn foata_roundtrip(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        expect_eq(p.foata().foata_inverse(), p.clone())?;
        expect_eq(p.foata_inverse().foata(), p.clone())
    })
}

fn invert_involution(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        let q = p.invert();
        for i in 1..=p.len() {
            if q.at(p.at(i) as usize) as usize != i {
                return Err(format!("q[p[{i}]] != {i}"));
            }
        }
        expect_eq(q.invert(), p.clone())
    })
}

fn rc_involution(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        expect_eq(p.reverse_complement().reverse_complement(), p.clone())
    })
}

fn rc_swaps_vincular(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        let rc = p.reverse_complement();
        let n1 = p.len() as u32 + 1;
        for i in 1..n1 {
            if rc.count_pat_31_2_at(n1 - i) != p.count_pat_2_31_at(i) {
                return Err(format!("i={i}"));
            }
        }
        Ok(())
    })
}

fn peak_owns_valley(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        let peaks = p.left_peaks();
        let valleys = p.right_valleys();
        for (k, &pk) in peaks.iter().enumerate() {
            let next = peaks.get(k + 1).copied().unwrap_or(usize::MAX);
            if !valleys.iter().any(|&v| pk < v && v < next) {
                return Err(format!("left peak at {pk} has no right valley"));
            }
        }
        Ok(())
    })
}

fn history_rc_involution(n_max: usize) -> Check {
    over_sizes(
        n_max,
        |n| enumerate_laguerre(n).collect::<Vec<_>>(),
        |h| {
            let r = h.rc();
            err_str(LaguerreHistory::new(
                r.steps().to_vec(),
                r.weights().to_vec(),
            ))?;
            expect_eq(r.rc(), h.clone())
        },
    )
}

fn wbar_involution(n_max: usize) -> Check {
    over_sizes(
        n_max,
        |n| enumerate_lbp(n).collect::<Vec<_>>(),
        |l| {
            let w = l.wbar();
            err_str(LabeledBallotPath::new(
                w.steps().to_vec(),
                w.weights().to_vec(),
            ))?;
            expect_eq(w.wbar(), l.clone())
        },
    )
}

fn extension_rc_fixed(n_max: usize) -> Check {
    over_sizes(
        n_max,
        |n| enumerate_lbp(n).collect::<Vec<_>>(),
        |l| {
            let h = l.extend_to_rc_fixed();
            err_str(LaguerreHistory::new(
                h.steps().to_vec(),
                h.weights().to_vec(),
            ))?;
            if !h.is_dyck() || !h.is_rc_fixed() {
                return Err(format!("{h} is not an rc-fixed Dyck history"));
            }
            expect_eq(err_str(h.halve_rc_fixed())?, l.clone())
        },
    )
}

fn extension_matches_fz(n_max: usize) -> Check {
    for n in 0..=n_max {
        let images: HashSet<LaguerreHistory> = enumerate_rcalt(n).map(|p| fz(&p)).collect();
        let extended: HashSet<LaguerreHistory> =
            enumerate_lbp(n).map(|l| l.extend_to_rc_fixed()).collect();
        if images != extended {
            return Err(format!("n={n}: fz image and extensions differ"));
        }
    }
    Ok("sets equal".into())
}

// (31-2)_i + (2-31)_i equals the weight bound of step i.
fn lemma_cor(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        let h = fz(p);
        let heights = h.heights();
        for i in 1..=p.len() {
            let cap = h.steps()[i - 1]
                .weight_cap(heights[i - 1])
                .ok_or_else(|| format!("i={i}: no admissible weight"))?;
            let total = p.count_pat_31_2_at(i as u32) + p.count_pat_2_31_at(i as u32);
            if total != cap as usize {
                return Err(format!("i={i}: {total} vs {cap}"));
            }
        }
        Ok(())
    })
}

fn lemma_rcfz(n_max: usize) -> Check {
    over_sizes(n_max, perms, |p| {
        expect_eq(fz(&p.reverse_complement()), fz(p).rc())
    })
}

/// The middle pair of an rc-invariant alternating permutation of length `2n`
/// sums to `2n + 1`, so it straddles `n + 1/2`: descending for odd `n`,
/// ascending for even `n`.
pub fn middle_pair_straddles(p: &Permutation) -> bool {
    let n = p.len() / 2;
    if n == 0 {
        return true;
    }
    let (a, b, mid2) = (2 * p.at(n), 2 * p.at(n + 1), 2 * n as u32 + 1);
    if n % 2 == 1 {
        a > mid2 && mid2 > b
    } else {
        a < mid2 && mid2 < b
    }
}

/// The strict comparison with `n` itself: `p_n > n > p_{n+1}` for odd `n`,
/// `p_n < n < p_{n+1}` for even `n`. Fails whenever `n` sits in the middle
/// pair, e.g. `2 1`.
pub fn middle_pair_strict(p: &Permutation) -> bool {
    let n = p.len() / 2;
    if n == 0 {
        return true;
    }
    let (a, b, mid) = (p.at(n), p.at(n + 1), n as u32);
    if n % 2 == 1 {
        a > mid && mid > b
    } else {
        a < mid && mid < b
    }
}

fn lemma_rc(n_max: usize) -> Check {
    let mut strict_failures = 0;
    let mut total = 0;
    for n in 0..=n_max {
        for p in enumerate_rcalt(n) {
            total += 1;
            if !middle_pair_straddles(&p) {
                return Err(format!(
                    "n={n} {p}: middle pair {}, {}",
                    p.at(n),
                    p.at(n + 1)
                ));
            }
            if !middle_pair_strict(&p) {
                strict_failures += 1;
            }
        }
    }
    Ok(format!(
        "{total} objects; strict comparison with n fails on {strict_failures}"
    ))
}

fn rcalt_fz_dyck(n_max: usize) -> Check {
    over_sizes(
        n_max,
        |n| enumerate_rcalt(n).collect::<Vec<_>>(),
        |p| {
            let h = fz(p);
            if h.is_dyck() && h.is_rc_fixed() {
                Ok(())
            } else {
                Err(format!("fz = {h}"))
            }
        },
    )
}

// Outside right valleys the signs of a snake are forced by parity.
fn snake_sign_pattern(n_max: usize) -> Check {
    over_sizes(
        n_max,
        |n| enumerate_snakes(n).collect::<Vec<_>>(),
        |s| {
            let abs = s.abs();
            for pos in 1..=s.len() {
                if abs.shape_at(pos) == LocalShape::Valley {
                    continue;
                }
                let negative = s.at(pos) < 0;
                if negative != (pos % 2 == 0) {
                    return Err(format!("position {pos}"));
                }
            }
            Ok(())
        },
    )
}

fn modes_agree(n_max: usize) -> Check {
    over_sizes(
        n_max,
        |n| enumerate_snakes(n).collect::<Vec<_>>(),
        |s| {
            let checked = err_str(snake_to_lbp_with(s, Mode::Checked))?;
            let fast = err_str(snake_to_lbp_with(s, Mode::Fast))?;
            expect_eq(fast, checked)
        },
    )
}

fn strictly_sorted(lines: &[String]) -> bool {
    lines.windows(2).all(|w| w[0] < w[1])
}

fn enumerators_sorted(n_max: usize) -> Check {
    let mut total = 0;
    for f in Family::ALL {
        for n in 0..=n_max {
            let lines: Vec<String> = f.enumerate_lines(n).collect();
            if !strictly_sorted(&lines) {
                return Err(format!("{f} n={n}: not strictly increasing"));
            }
            total += lines.len();
        }
    }
    Ok(format!("{total} lines"))
}

/// One-step mutations of a text line: swap two entries (transposition),
/// negate an entry (sign flip), or bump a weight.
pub fn mutations(family: Family, line: &str) -> Vec<String> {
    let mut out = Vec::new();
    match family {
        Family::Lbp | Family::Laguerre => {
            let (steps, weights) = line.split_once(';').expect("weighted path text");
            let ws: Vec<u32> = if weights.is_empty() {
                vec![]
            } else {
                weights
                    .split(',')
                    .map(|w| w.parse().expect("weight"))
                    .collect()
            };
            for i in 0..ws.len() {
                let mut bumped = ws.clone();
                bumped[i] += 1;
                let joined = bumped
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                out.push(format!("{steps};{joined}"));
            }
            let letters: Vec<char> = steps.chars().collect();
            for i in 0..letters.len() {
                for j in i + 1..letters.len() {
                    let mut swapped = letters.clone();
                    swapped.swap(i, j);
                    let s: String = swapped.into_iter().collect();
                    out.push(format!("{s};{weights}"));
                }
            }
        }
        Family::Wip3 => {
            let (a, b) = line.split_once(" / ").unwrap_or((line, ""));
            for m in token_mutations(a, false) {
                out.push(format!("{m} / {b}"));
            }
            for m in token_mutations(b, false) {
                out.push(format!("{a} / {m}"));
            }
        }
        Family::Snakes => out.extend(token_mutations(line, true)),
        Family::Rcalt | Family::Altperm => out.extend(token_mutations(line, false)),
    }
    out
}

fn token_mutations(line: &str, signed: bool) -> Vec<String> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let mut out = Vec::new();
    for i in 0..toks.len() {
        for j in i + 1..toks.len() {
            let mut t: Vec<String> = toks.iter().map(|s| s.to_string()).collect();
            t.swap(i, j);
            out.push(t.join(" "));
        }
        if signed {
            let mut t: Vec<String> = toks.iter().map(|s| s.to_string()).collect();
            t[i] = match t[i].strip_prefix('-') {
                Some(rest) => rest.to_string(),
                None => format!("-{}", t[i]),
            };
            out.push(t.join(" "));
        }
    }
    out
}

/// Whether `line` parses as a member of `family` of size `n`, according to
/// the family's validator alone.
pub fn validator_accepts(family: Family, n: usize, line: &str) -> bool {
    match family {
        Family::Snakes => line
            .parse::<SignedPermutation>()
            .is_ok_and(|s| s.len() == n && s.is_snake()),
        Family::Wip3 => line
            .parse::<crate::families::ThreeWIP>()
            .is_ok_and(|w| w.len() == n),
        Family::Rcalt => line
            .parse::<Permutation>()
            .is_ok_and(|p| p.len() == 2 * n && p.is_alternating() && p.is_rc_invariant()),
        Family::Lbp => line
            .parse::<LabeledBallotPath>()
            .is_ok_and(|l| l.len() == n),
        Family::Laguerre => line.parse::<LaguerreHistory>().is_ok_and(|h| h.len() == n),
        Family::Altperm => line
            .parse::<Permutation>()
            .is_ok_and(|p| p.len() == n && p.is_alternating()),
    }
}

// A mutated object is accepted by the validator exactly when the enumerator
// also produces it.
fn validators_agree(n_max: usize) -> Check {
    let mut checked = 0;
    for f in Family::ALL {
        for n in 0..=n_max {
            let lines: Vec<String> = f.enumerate_lines(n).collect();
            let members: HashSet<&str> = lines.iter().map(String::as_str).collect();
            checked += par::check_all(&lines, |line| {
                if !validator_accepts(f, n, line) {
                    return Err(format!("{f} n={n}: validator rejects enumerated {line}"));
                }
                for m in mutations(f, line) {
                    if validator_accepts(f, n, &m) != members.contains(m.as_str()) {
                        return Err(format!("{f} n={n}: validator disagrees on {m}"));
                    }
                }
                Ok(())
            })?;
        }
    }
    Ok(format!("{checked} objects mutated"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_property_passes_small() {
        let report = run_all(4);
        assert!(report.all_passed(), "{report}");
        let four = report
            .rows
            .iter()
            .find(|r| r.name == "count-four-way")
            .unwrap();
        assert_eq!(four.detail, "1,1,3,11,57");
    }

    #[test]
    fn rows_sorted_by_name() {
        let report = run_all(0);
        let names: Vec<_> = report.rows.iter().map(|r| r.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn mutations_cover_each_kind() {
        let m = mutations(Family::Snakes, "2 -1 3");
        assert!(m.contains(&"-2 -1 3".to_string()));
        assert!(m.contains(&"3 -1 2".to_string()));
        let m = mutations(Family::Lbp, "UU;0,1");
        assert!(m.contains(&"UU;1,1".to_string()));
        assert!(m.contains(&"UU;0,2".to_string()));
    }
}

//! The families counted by Springer numbers (plus alternating permutations
//! and Laguerre histories), their exhaustive enumerators, and closed-form
//! counting oracles.
//!
//! Every enumerator yields its objects in strictly increasing byte order of
//! their text form. Tokens compare as strings, so candidates at each level
//! are pre-sorted by their decimal (or letter) spelling.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::paths::{count_lbp_dp, LabeledBallotPath, LaguerreHistory, Step};
use crate::perm::{Permutation, SignedPermutation};
use crate::search::{Backtrack, Search};

/// A weakly increasing 3-dimensional permutation: two permutations whose
/// columnwise maxima never decrease.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreeWIP {
    sigma: Permutation,
    pi: Permutation,
}

impl ThreeWIP {
    pub fn new(sigma: Permutation, pi: Permutation) -> Result<Self> {
        if sigma.len() != pi.len() {
            return Err(Error::LengthMismatch {
                left: sigma.len(),
                right: pi.len(),
            });
        }
        let maxima: Vec<u32> = column_maxima(&sigma, &pi).collect();
        if let Some(i) = maxima.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing(i + 2));
        }
        Ok(ThreeWIP { sigma, pi })
    }

    pub(crate) fn from_parts_unchecked(sigma: Permutation, pi: Permutation) -> Self {
        debug_assert!(ThreeWIP::new(sigma.clone(), pi.clone()).is_ok());
        ThreeWIP { sigma, pi }
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

fn column_maxima<'a>(
    sigma: &'a Permutation,
    pi: &'a Permutation,
) -> impl Iterator<Item = u32> + 'a {
    sigma
        .as_slice()
        .iter()
        .zip(pi.as_slice())
        .map(|(&s, &p)| s.max(p))
}

impl fmt::Display for ThreeWIP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.sigma, self.pi)
    }
}

impl FromStr for ThreeWIP {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse("missing '/'".into()))?;
        ThreeWIP::new(a.parse()?, b.parse()?)
    }
}

/// Family names as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Snakes,
    Wip3,
    Rcalt,
    Lbp,
    Laguerre,
    Altperm,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Snakes,
        Family::Wip3,
        Family::Rcalt,
        Family::Lbp,
        Family::Laguerre,
        Family::Altperm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Snakes => "snakes",
            Family::Wip3 => "wip3",
            Family::Rcalt => "rcalt",
            Family::Lbp => "lbp",
            Family::Laguerre => "laguerre",
            Family::Altperm => "altperm",
        }
    }

    /// Objects of size `n`, one text line each, in canonical order.
    pub fn enumerate_lines(self, n: usize) -> Box<dyn Iterator<Item = String> + Send> {
        match self {
            Family::Snakes => Box::new(enumerate_snakes(n).map(|x| x.to_string())),
            Family::Wip3 => Box::new(enumerate_wip3(n).map(|x| x.to_string())),
            Family::Rcalt => Box::new(enumerate_rcalt(n).map(|x| x.to_string())),
            Family::Lbp => Box::new(enumerate_lbp(n).map(|x| x.to_string())),
            Family::Laguerre => Box::new(enumerate_laguerre(n).map(|x| x.to_string())),
            Family::Altperm => Box::new(enumerate_alternating(n).map(|x| x.to_string())),
        }
    }

    /// Size of the family by exhaustive enumeration.
    pub fn count_enumerated(self, n: usize) -> u64 {
        match self {
            Family::Snakes => crate::par::count(SnakeSearch::new(n)),
            Family::Wip3 => crate::par::count(WipSearch::new(n)),
            Family::Rcalt => crate::par::count(RcAltSearch::new(n)),
            Family::Lbp => crate::par::count(LbpSearch::new(n)),
            Family::Laguerre => crate::par::count(LaguerreSearch::new(n)),
            Family::Altperm => crate::par::count(PermSearch::alternating(n)),
        }
    }

    /// Size of the family from its closed-form oracle: the Springer EGF for
    /// the four Springer families, the weight DP for labeled ballot paths,
    /// the Euler numbers for alternating permutations and `n!` for histories.
    pub fn count_oracle(self, n: usize) -> BigUint {
        match self {
            Family::Snakes | Family::Wip3 | Family::Rcalt => {
                springer_egf(n).values.pop().expect("nonempty table")
            }
            Family::Lbp => count_lbp_dp(n),
            Family::Laguerre => (1..=n).map(BigUint::from).product(),
            Family::Altperm => euler_sequence(n).pop().expect("nonempty sequence"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

fn sorted_by_text<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<T> {
    let mut keyed: Vec<(String, T)> = xs.into_iter().map(|x| (x.to_string(), x)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, x)| x).collect()
}

// Down-up constraint between the entry at 0-based index `k - 1` and `k`.
fn alternation_ok<T: PartialOrd>(prev: &T, next: &T, k: usize) -> bool {
    if (k - 1).is_multiple_of(2) {
        prev > next
    } else {
        prev < next
    }
}

#[derive(Clone)]
pub struct SnakeSearch {
    n: usize,
    candidates: Vec<i32>,
    used: Vec<bool>,
    word: Vec<i32>,
}

impl SnakeSearch {
    pub fn new(n: usize) -> Self {
        let n_i = n as i32;
        SnakeSearch {
            n,
            candidates: sorted_by_text((1..=n_i).flat_map(|v| [v, -v])),
            used: vec![false; n + 1],
            word: Vec::with_capacity(n),
        }
    }
}

impl Search for SnakeSearch {
    type Item = SignedPermutation;

    fn depth(&self) -> usize {
        self.n
    }

    fn choices(&self, _: usize) -> usize {
        self.candidates.len()
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        let v = self.candidates[choice];
        let a = v.unsigned_abs() as usize;
        if self.used[a] {
            return false;
        }
        let ok = if level == 0 {
            v > 0
        } else {
            alternation_ok(&self.word[level - 1], &v, level)
        };
        if ok {
            self.used[a] = true;
            self.word.push(v);
        }
        ok
    }

    fn pop(&mut self, _: usize) {
        let v = self.word.pop().expect("nonempty");
        self.used[v.unsigned_abs() as usize] = false;
    }

    fn emit(&self) -> SignedPermutation {
        SignedPermutation::from_vec_unchecked(self.word.clone())
    }
}

/// Permutations of `1..=n`, optionally restricted to down-up ones.
#[derive(Clone)]
pub struct PermSearch {
    n: usize,
    alternating: bool,
    candidates: Vec<u32>,
    used: Vec<bool>,
    word: Vec<u32>,
}

impl PermSearch {
    pub fn all(n: usize) -> Self {
        PermSearch {
            n,
            alternating: false,
            candidates: sorted_by_text(1..=n as u32),
            used: vec![false; n + 1],
            word: Vec::with_capacity(n),
        }
    }

    pub fn alternating(n: usize) -> Self {
        PermSearch {
            alternating: true,
            ..PermSearch::all(n)
        }
    }
}

impl Search for PermSearch {
    type Item = Permutation;

    fn depth(&self) -> usize {
        self.n
    }

    fn choices(&self, _: usize) -> usize {
        self.candidates.len()
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        let v = self.candidates[choice];
        if self.used[v as usize]
            || (self.alternating && level > 0 && !alternation_ok(&self.word[level - 1], &v, level))
        {
            return false;
        }
        self.used[v as usize] = true;
        self.word.push(v);
        true
    }

    fn pop(&mut self, _: usize) {
        let v = self.word.pop().expect("nonempty");
        self.used[v as usize] = false;
    }

    fn emit(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.word.clone())
    }
}

/// Chooses `sigma` entry by entry, then `pi`, pruning on the running
/// columnwise maximum.
#[derive(Clone)]
pub struct WipSearch {
    n: usize,
    candidates: Vec<u32>,
    sigma_used: Vec<bool>,
    pi_used: Vec<bool>,
    sigma: Vec<u32>,
    pi: Vec<u32>,
    // running maximum after each placed pi entry
    maxima: Vec<u32>,
}

impl WipSearch {
    pub fn new(n: usize) -> Self {
        WipSearch {
            n,
            candidates: sorted_by_text(1..=n as u32),
            sigma_used: vec![false; n + 1],
            pi_used: vec![false; n + 1],
            sigma: Vec::with_capacity(n),
            pi: Vec::with_capacity(n),
            maxima: Vec::with_capacity(n),
        }
    }

    // Every unused pi value below `m` needs a later column whose sigma entry
    // is at least `m`.
    fn completable(&self, m: u32) -> bool {
        let placed = self.pi.len();
        let small = (1..m).filter(|&v| !self.pi_used[v as usize]).count();
        let tall = self.sigma[placed..].iter().filter(|&&s| s >= m).count();
        small <= tall
    }
}

impl Search for WipSearch {
    type Item = ThreeWIP;

    fn depth(&self) -> usize {
        2 * self.n
    }

    fn choices(&self, _: usize) -> usize {
        self.candidates.len()
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        let v = self.candidates[choice];
        if level < self.n {
            if self.sigma_used[v as usize] {
                return false;
            }
            self.sigma_used[v as usize] = true;
            self.sigma.push(v);
            return true;
        }
        let col = level - self.n;
        if self.pi_used[v as usize] {
            return false;
        }
        let m = self.sigma[col].max(v);
        if self.maxima.last().is_some_and(|&prev| m < prev) {
            return false;
        }
        self.pi_used[v as usize] = true;
        self.pi.push(v);
        self.maxima.push(m);
        if !self.completable(m) {
            self.pop(level);
            return false;
        }
        true
    }

    fn pop(&mut self, level: usize) {
        if level < self.n {
            let v = self.sigma.pop().expect("nonempty");
            self.sigma_used[v as usize] = false;
        } else {
            let v = self.pi.pop().expect("nonempty");
            self.pi_used[v as usize] = false;
            self.maxima.pop();
        }
    }

    fn emit(&self) -> ThreeWIP {
        ThreeWIP::from_parts_unchecked(
            Permutation::from_vec_unchecked(self.sigma.clone()),
            Permutation::from_vec_unchecked(self.pi.clone()),
        )
    }
}

/// Chooses the first half of an rc-invariant alternating permutation of
/// length `2n`; the second half is forced.
#[derive(Clone)]
pub struct RcAltSearch {
    n: usize,
    candidates: Vec<u32>,
    used: Vec<bool>,
    half: Vec<u32>,
}

impl RcAltSearch {
    pub fn new(n: usize) -> Self {
        RcAltSearch {
            n,
            candidates: sorted_by_text(1..=2 * n as u32),
            used: vec![false; 2 * n + 1],
            half: Vec::with_capacity(n),
        }
    }
}

impl Search for RcAltSearch {
    type Item = Permutation;

    fn depth(&self) -> usize {
        self.n
    }

    fn choices(&self, _: usize) -> usize {
        self.candidates.len()
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        let v = self.candidates[choice];
        let n = self.n as u32;
        if self.used[v as usize] {
            return false;
        }
        if level > 0 && !alternation_ok(&self.half[level - 1], &v, level) {
            return false;
        }
        // the junction p_n vs p_{n+1} = 2n + 1 - p_n
        if level + 1 == self.n && (self.n % 2 == 1) != (v > n) {
            return false;
        }
        self.used[v as usize] = true;
        self.used[(2 * n + 1 - v) as usize] = true;
        self.half.push(v);
        true
    }

    fn pop(&mut self, _: usize) {
        let v = self.half.pop().expect("nonempty");
        self.used[v as usize] = false;
        self.used[(2 * self.n as u32 + 1 - v) as usize] = false;
    }

    fn emit(&self) -> Permutation {
        let total = 2 * self.n as u32 + 1;
        let mut full = self.half.clone();
        full.extend(self.half.iter().rev().map(|&v| total - v));
        Permutation::from_vec_unchecked(full)
    }
}

// Shared by the two weighted path searches: steps first, then weights.
#[derive(Clone)]
struct WeightedPathSearch {
    n: usize,
    step_candidates: Vec<Step>,
    weight_candidates: Vec<u32>,
    closed: bool,
    steps: Vec<Step>,
    heights: Vec<u32>,
    weights: Vec<u32>,
}

impl WeightedPathSearch {
    fn new(n: usize, alphabet: &[Step], closed: bool) -> Self {
        let mut step_candidates = alphabet.to_vec();
        step_candidates.sort_by_key(|s| s.letter());
        WeightedPathSearch {
            n,
            step_candidates,
            weight_candidates: sorted_by_text(0..=n as u32),
            closed,
            steps: Vec::with_capacity(n),
            heights: Vec::with_capacity(n),
            weights: Vec::with_capacity(n),
        }
    }

    fn height(&self) -> u32 {
        let ups = self.steps.iter().filter(|&&s| s == Step::U).count();
        let downs = self.steps.iter().filter(|&&s| s == Step::D).count();
        (ups - downs) as u32
    }

    fn choices(&self, level: usize) -> usize {
        if level < self.n {
            self.step_candidates.len()
        } else {
            self.weight_candidates.len()
        }
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        if level < self.n {
            let s = self.step_candidates[choice];
            let h = self.height();
            if s.weight_cap(h).is_none() {
                return false;
            }
            let after = match s {
                Step::U => h + 1,
                Step::D => h - 1,
                _ => h,
            };
            if self.closed && after as usize > self.n - level - 1 {
                return false;
            }
            self.steps.push(s);
            self.heights.push(h);
            true
        } else {
            let i = level - self.n;
            let w = self.weight_candidates[choice];
            let cap = self.steps[i]
                .weight_cap(self.heights[i])
                .expect("checked when the step was placed");
            if w > cap {
                return false;
            }
            self.weights.push(w);
            true
        }
    }

    fn pop(&mut self, level: usize) {
        if level < self.n {
            self.steps.pop();
            self.heights.pop();
        } else {
            self.weights.pop();
        }
    }
}

#[derive(Clone)]
pub struct LbpSearch(WeightedPathSearch);

impl LbpSearch {
    pub fn new(n: usize) -> Self {
        LbpSearch(WeightedPathSearch::new(n, &[Step::U, Step::D], false))
    }
}

impl Search for LbpSearch {
    type Item = LabeledBallotPath;

    fn depth(&self) -> usize {
        2 * self.0.n
    }

    fn choices(&self, level: usize) -> usize {
        self.0.choices(level)
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        self.0.push(level, choice)
    }

    fn pop(&mut self, level: usize) {
        self.0.pop(level)
    }

    fn emit(&self) -> LabeledBallotPath {
        LabeledBallotPath::from_parts_unchecked(self.0.steps.clone(), self.0.weights.clone())
    }
}

#[derive(Clone)]
pub struct LaguerreSearch(WeightedPathSearch);

impl LaguerreSearch {
    pub fn new(n: usize) -> Self {
        LaguerreSearch(WeightedPathSearch::new(
            n,
            &[Step::U, Step::D, Step::H, Step::T],
            true,
        ))
    }
}

impl Search for LaguerreSearch {
    type Item = LaguerreHistory;

    fn depth(&self) -> usize {
        2 * self.0.n
    }

    fn choices(&self, level: usize) -> usize {
        self.0.choices(level)
    }

    fn push(&mut self, level: usize, choice: usize) -> bool {
        self.0.push(level, choice)
    }

    fn pop(&mut self, level: usize) {
        self.0.pop(level)
    }

    fn emit(&self) -> LaguerreHistory {
        LaguerreHistory::from_parts_unchecked(self.0.steps.clone(), self.0.weights.clone())
    }
}

pub fn enumerate_snakes(n: usize) -> Backtrack<SnakeSearch> {
    Backtrack::new(SnakeSearch::new(n))
}

pub fn enumerate_wip3(n: usize) -> Backtrack<WipSearch> {
    Backtrack::new(WipSearch::new(n))
}

/// rc-invariant alternating permutations of length `2n`.
pub fn enumerate_rcalt(n: usize) -> Backtrack<RcAltSearch> {
    Backtrack::new(RcAltSearch::new(n))
}

pub fn enumerate_lbp(n: usize) -> Backtrack<LbpSearch> {
    Backtrack::new(LbpSearch::new(n))
}

pub fn enumerate_laguerre(n: usize) -> Backtrack<LaguerreSearch> {
    Backtrack::new(LaguerreSearch::new(n))
}

pub fn enumerate_alternating(n: usize) -> Backtrack<PermSearch> {
    Backtrack::new(PermSearch::alternating(n))
}

/// All of the symmetric group, in canonical text order.
pub fn enumerate_permutations(n: usize) -> Backtrack<PermSearch> {
    Backtrack::new(PermSearch::all(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Dp,
    Egf,
    Enumeration,
}

/// `S_0 ..= S_m` together with the method that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerTable {
    pub values: Vec<BigUint>,
    pub method: CountMethod,
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 1..=n {
        let next = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(next);
    }
    row
}

/// Coefficients of `1 / (cos x - sin x)`, from `(cos - sin) * S = 1`.
pub fn springer_egf(m: usize) -> SpringerTable {
    // k-th derivative of cos - sin at 0
    let c = |k: usize| -> i64 {
        match k % 4 {
            0 | 3 => 1,
            _ => -1,
        }
    };
    let mut s: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=m {
        let binom = binomial_row(n);
        let acc: BigInt = (1..=n)
            .map(|k| &binom[k] * BigInt::from(c(k)) * &s[n - k])
            .sum();
        s.push(-acc);
    }
    SpringerTable {
        values: s.into_iter().map(to_unsigned).collect(),
        method: CountMethod::Egf,
    }
}

/// `S_0 ..= S_m` from the labeled ballot path DP.
pub fn springer_dp(m: usize) -> SpringerTable {
    SpringerTable {
        values: (0..=m).map(count_lbp_dp).collect(),
        method: CountMethod::Dp,
    }
}

/// `S_0 ..= S_m` by counting snakes.
pub fn springer_enumeration(m: usize) -> SpringerTable {
    SpringerTable {
        values: (0..=m)
            .map(|n| BigUint::from(Family::Snakes.count_enumerated(n)))
            .collect(),
        method: CountMethod::Enumeration,
    }
}

/// Coefficients of `tan x + sec x`, from `(tan + sec) * cos = 1 + sin`.
pub fn euler_sequence(m: usize) -> Vec<BigUint> {
    let cos_d = |k: usize| -> i64 {
        match k % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        }
    };
    let rhs = |n: usize| -> i64 {
        let sin_d = match n % 4 {
            1 => 1,
            3 => -1,
            _ => 0,
        };
        i64::from(n == 0) + sin_d
    };
    let mut e: Vec<BigInt> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let binom = binomial_row(n);
        let acc: BigInt = (1..=n)
            .map(|k| &binom[k] * BigInt::from(cos_d(k)) * &e[n - k])
            .sum();
        e.push(BigInt::from(rhs(n)) - acc);
    }
    e.into_iter().map(to_unsigned).collect()
}

fn to_unsigned(x: BigInt) -> BigUint {
    assert!(!x.is_negative(), "coefficient must be nonnegative");
    x.to_biguint().unwrap_or_else(BigUint::zero)
}

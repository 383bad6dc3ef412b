//! Ballot paths, two-colored Motzkin paths and their weighted versions
//! (labeled ballot paths and restricted Laguerre histories).
//!
//! Heights are measured *before* each step. A weight on an up step or a red
//! horizontal step is bounded by the height; on a down step or a blue
//! horizontal step by the height minus one.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// One lattice step. `T` is the blue (tilde) horizontal step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
    H,
    T,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
            Step::T => 'T',
        }
    }

    pub fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::U),
            'D' => Some(Step::D),
            'H' => Some(Step::H),
            'T' => Some(Step::T),
            _ => None,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Step::H | Step::T)
    }

    /// Swap U and D, leave horizontal steps alone.
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
            s => s,
        }
    }

    /// Largest admissible weight before this step at height `h`, or `None`
    /// when no weight is admissible.
    pub fn weight_cap(self, h: u32) -> Option<u32> {
        match self {
            Step::U | Step::H => Some(h),
            Step::D | Step::T => h.checked_sub(1),
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::H | Step::T => 0,
        }
    }
}

/// Heights before each step. Fails with the 1-based index of the first step
/// that would leave the quarter plane.
pub fn height_profile(steps: &[Step]) -> Result<Vec<u32>> {
    let mut h: i64 = 0;
    let mut out = Vec::with_capacity(steps.len());
    for (i, &s) in steps.iter().enumerate() {
        out.push(h as u32);
        h += s.delta();
        if h < 0 {
            return Err(Error::BelowAxis(i + 1));
        }
    }
    Ok(out)
}

fn final_height(steps: &[Step]) -> i64 {
    steps.iter().map(|s| s.delta()).sum()
}

fn check_weights(steps: &[Step], heights: &[u32], weights: &[u32]) -> Result<()> {
    for (i, ((&s, &h), &w)) in steps.iter().zip(heights).zip(weights).enumerate() {
        match s.weight_cap(h) {
            Some(cap) if w <= cap => {}
            _ => return Err(Error::WeightOutOfRange(i + 1)),
        }
    }
    Ok(())
}

// w -> cap - w, shared by wbar and the rc action
fn complement_weights(steps: &[Step], heights: &[u32], weights: &[u32]) -> Vec<u32> {
    steps
        .iter()
        .zip(heights)
        .zip(weights)
        .map(|((&s, &h), &w)| s.weight_cap(h).expect("valid weight") - w)
        .collect()
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .map(|c| Step::from_letter(c).ok_or_else(|| Error::Parse(format!("bad step {c:?}"))))
        .collect()
}

fn parse_weighted(s: &str) -> Result<(Vec<Step>, Vec<u32>)> {
    let (word, ws) = s
        .trim()
        .split_once(';')
        .ok_or_else(|| Error::Parse("missing ';'".into()))?;
    let steps = parse_steps(word)?;
    let weights = if ws.is_empty() {
        Vec::new()
    } else {
        ws.split(',')
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad weight {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok((steps, weights))
}

fn write_weighted(f: &mut fmt::Formatter<'_>, steps: &[Step], weights: &[u32]) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.letter())?;
    }
    f.write_str(";")?;
    for (i, w) in weights.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{w}")?;
    }
    Ok(())
}

/// A word over `{U, D, H, T}` that never dips below the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepWord(Vec<Step>);

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        height_profile(&steps)?;
        Ok(StepWord(steps))
    }

    pub fn as_slice(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn heights(&self) -> Vec<u32> {
        height_profile(&self.0).expect("validated on construction")
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StepWord::new(parse_steps(s.trim())?)
    }
}

/// A ballot path (U/D only, never below the axis) with bounded weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledBallotPath {
    steps: Vec<Step>,
    weights: Vec<u32>,
}

impl LabeledBallotPath {
    pub fn new(steps: Vec<Step>, weights: Vec<u32>) -> Result<Self> {
        if steps.len() != weights.len() {
            return Err(Error::LengthMismatch {
                left: steps.len(),
                right: weights.len(),
            });
        }
        if steps.iter().any(|s| s.is_horizontal()) {
            return Err(Error::HorizontalStepPresent);
        }
        let heights = height_profile(&steps)?;
        check_weights(&steps, &heights, &weights)?;
        Ok(LabeledBallotPath { steps, weights })
    }

    pub(crate) fn from_parts_unchecked(steps: Vec<Step>, weights: Vec<u32>) -> Self {
        debug_assert!(LabeledBallotPath::new(steps.clone(), weights.clone()).is_ok());
        LabeledBallotPath { steps, weights }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<u32> {
        height_profile(&self.steps).expect("validated on construction")
    }

    /// Same path, each weight replaced by its distance to the upper bound.
    pub fn wbar(&self) -> LabeledBallotPath {
        let weights = complement_weights(&self.steps, &self.heights(), &self.weights);
        LabeledBallotPath::from_parts_unchecked(self.steps.clone(), weights)
    }

    /// The unique rc-fixed history of twice the length whose first half is
    /// this path. The result is a labeled Dyck path.
    pub fn extend_to_rc_fixed(&self) -> LaguerreHistory {
        let n = self.len();
        let mut steps = self.steps.clone();
        let mut weights = self.weights.clone();
        let tail = complement_weights(&self.steps, &self.heights(), &self.weights);
        steps.extend(self.steps.iter().rev().map(|s| s.flip()));
        weights.extend(tail.into_iter().rev());
        debug_assert_eq!(steps.len(), 2 * n);
        LaguerreHistory::from_parts_unchecked(steps, weights)
    }
}

impl fmt::Display for LabeledBallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_weighted(f, &self.steps, &self.weights)
    }
}

impl FromStr for LabeledBallotPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (steps, weights) = parse_weighted(s)?;
        LabeledBallotPath::new(steps, weights)
    }
}

/// A restricted Laguerre history: a closed two-colored Motzkin path with
/// bounded weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaguerreHistory {
    steps: Vec<Step>,
    weights: Vec<u32>,
}

impl LaguerreHistory {
    pub fn new(steps: Vec<Step>, weights: Vec<u32>) -> Result<Self> {
        if steps.len() != weights.len() {
            return Err(Error::LengthMismatch {
                left: steps.len(),
                right: weights.len(),
            });
        }
        let heights = height_profile(&steps)?;
        check_weights(&steps, &heights, &weights)?;
        if final_height(&steps) != 0 {
            return Err(Error::NotClosed);
        }
        Ok(LaguerreHistory { steps, weights })
    }

    pub(crate) fn from_parts_unchecked(steps: Vec<Step>, weights: Vec<u32>) -> Self {
        debug_assert!(LaguerreHistory::new(steps.clone(), weights.clone()).is_ok());
        LaguerreHistory { steps, weights }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn heights(&self) -> Vec<u32> {
        height_profile(&self.steps).expect("validated on construction")
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.iter().any(|s| s.is_horizontal())
    }

    /// Mirror the path (flipping U/D) and complement the weights.
    pub fn rc(&self) -> LaguerreHistory {
        let steps = self.steps.iter().rev().map(|s| s.flip()).collect();
        let mut weights = complement_weights(&self.steps, &self.heights(), &self.weights);
        weights.reverse();
        LaguerreHistory::from_parts_unchecked(steps, weights)
    }

    pub fn is_rc_fixed(&self) -> bool {
        self.rc() == *self
    }

    /// Keep the first half of an rc-fixed labeled Dyck path.
    pub fn halve_rc_fixed(&self) -> Result<LabeledBallotPath> {
        if !self.len().is_multiple_of(2) {
            return Err(Error::OddLength);
        }
        if !self.is_dyck() {
            return Err(Error::HorizontalStepPresent);
        }
        if !self.is_rc_fixed() {
            return Err(Error::NotRcFixed);
        }
        let half = self.len() / 2;
        Ok(LabeledBallotPath::from_parts_unchecked(
            self.steps[..half].to_vec(),
            self.weights[..half].to_vec(),
        ))
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_weighted(f, &self.steps, &self.weights)
    }
}

impl FromStr for LaguerreHistory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (steps, weights) = parse_weighted(s)?;
        LaguerreHistory::new(steps, weights)
    }
}

/// Number of labeled ballot paths of length `n`, by a height DP: an up step
/// at height `h` carries `h + 1` weights, a down step `h`.
pub fn count_lbp_dp(n: usize) -> BigUint {
    let mut ways: Vec<BigUint> = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); ways.len() + 1];
        for (h, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            next[h + 1] += w * BigUint::from(h + 1);
            if h > 0 {
                next[h - 1] += w * BigUint::from(h);
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Vec<Step> {
        parse_steps(s).unwrap()
    }

    #[test]
    fn heights() {
        assert_eq!(
            height_profile(&word("UHTDUUHDD")).unwrap(),
            vec![0, 1, 1, 1, 0, 1, 2, 2, 1]
        );
        assert_eq!(
            height_profile(&word("UUUDDUU")).unwrap(),
            vec![0, 1, 2, 3, 2, 1, 2]
        );
        assert!(height_profile(&[]).unwrap().is_empty());
        assert_eq!(height_profile(&word("UDD")), Err(Error::BelowAxis(3)));
        assert!("UDD".parse::<StepWord>().is_err());
        assert_eq!(
            "UHTD".parse::<StepWord>().unwrap().heights(),
            vec![0, 1, 1, 1]
        );
    }

    #[test]
    fn labeled_ballot_validation() {
        assert!(LabeledBallotPath::new(word("UUUDDUU"), vec![0, 0, 1, 2, 0, 0, 0]).is_ok());
        assert_eq!(
            LabeledBallotPath::new(word("U"), vec![1]),
            Err(Error::WeightOutOfRange(1))
        );
        assert!(LabeledBallotPath::new(word("UD"), vec![0, 0]).is_ok());
        assert_eq!(
            LabeledBallotPath::new(word("UH"), vec![0, 0]),
            Err(Error::HorizontalStepPresent)
        );
        assert_eq!(
            LabeledBallotPath::new(word("UD"), vec![0]),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
        assert_eq!(
            LabeledBallotPath::new(word("D"), vec![0]),
            Err(Error::BelowAxis(1))
        );
    }

    #[test]
    fn laguerre_validation() {
        assert!(LaguerreHistory::new(word("UHTDUUHDD"), vec![0, 1, 0, 0, 0, 0, 2, 1, 0]).is_ok());
        assert!(LaguerreHistory::new(word("H"), vec![0]).is_ok());
        assert_eq!(
            LaguerreHistory::new(word("T"), vec![0]),
            Err(Error::WeightOutOfRange(1))
        );
        assert_eq!(
            LaguerreHistory::new(word("U"), vec![0]),
            Err(Error::NotClosed)
        );
    }

    #[test]
    fn rc_on_histories() {
        let h: LaguerreHistory = "UD;0,0".parse().unwrap();
        assert_eq!(h.rc(), h);
        let h: LaguerreHistory = "UHTDUUHDD;0,1,0,0,0,0,2,1,0".parse().unwrap();
        // steps mirrored and flipped; weights cap - w, mirrored
        assert_eq!(h.rc().to_string(), "UUHDDUTHD;0,0,0,1,0,0,0,0,0");
        assert_eq!(h.rc().rc(), h);
    }

    #[test]
    fn halving_and_extension() {
        let full: LaguerreHistory = "UUUDDUUDDUUDDD;0,0,1,2,0,0,0,2,1,1,0,1,1,0"
            .parse()
            .unwrap();
        assert!(full.is_rc_fixed());
        assert_eq!(
            full.halve_rc_fixed().unwrap().to_string(),
            "UUUDDUU;0,0,1,2,0,0,0"
        );
        let half: LabeledBallotPath = "UUUDDUU;0,0,1,2,0,0,0".parse().unwrap();
        assert_eq!(half.extend_to_rc_fixed(), full);

        let ud: LaguerreHistory = "UD;0,0".parse().unwrap();
        assert_eq!(ud.halve_rc_fixed().unwrap().to_string(), "U;0");
        let u: LabeledBallotPath = "U;0".parse().unwrap();
        assert_eq!(u.extend_to_rc_fixed(), ud);
        let uu: LabeledBallotPath = "UU;0,1".parse().unwrap();
        assert_eq!(uu.extend_to_rc_fixed().to_string(), "UUDD;0,1,0,0");

        let uhhd: LaguerreHistory = "UHHD;0,0,0,0".parse().unwrap();
        assert_eq!(uhhd.halve_rc_fixed(), Err(Error::HorizontalStepPresent));
        let odd: LaguerreHistory = "UHD;0,0,0".parse().unwrap();
        assert_eq!(odd.halve_rc_fixed(), Err(Error::OddLength));
        let not_fixed: LaguerreHistory = "UUDD;0,1,1,0".parse().unwrap();
        assert_eq!(not_fixed.halve_rc_fixed(), Err(Error::NotRcFixed));
    }

    #[test]
    fn wbar_examples() {
        let w = |s: &str| s.parse::<LabeledBallotPath>().unwrap().wbar().to_string();
        assert_eq!(w("U;0"), "U;0");
        assert_eq!(w("UUUDDUU;0,0,1,2,0,0,0"), "UUUDDUU;0,1,1,0,1,1,2");
        assert_eq!(w("UD;0,0"), "UD;0,0");
    }

    #[test]
    fn dp_counts() {
        let got: Vec<u64> = (0..=7)
            .map(|n| count_lbp_dp(n).try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 1, 3, 11, 57, 361, 2763, 24611]);
    }

    #[test]
    fn empty_objects() {
        let l: LabeledBallotPath = ";".parse().unwrap();
        assert!(l.is_empty());
        assert_eq!(l.to_string(), ";");
        let h: LaguerreHistory = ";".parse().unwrap();
        assert_eq!(h.to_string(), ";");
        assert!(h.is_rc_fixed());
    }

    #[test]
    fn parse_errors() {
        assert!("UX;0,0".parse::<LaguerreHistory>().is_err());
        assert!("UD".parse::<LaguerreHistory>().is_err());
        assert!("UD;0,a".parse::<LaguerreHistory>().is_err());
    }
}

//! Permutations, signed permutations and the per-position statistics the
//! bijections are built from.
//!
//! Positions are 1-based throughout the public API. Boundary comparisons use
//! the sentinels `p[0] = 0` and `p[n+1] = +inf`, realised as guarded checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

/// Shape of a position relative to its two neighbours (sentinels included).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalShape {
    /// `p[j-1] > p[j] < p[j+1]`
    Valley,
    /// `p[j-1] < p[j] > p[j+1]`
    Peak,
    /// `p[j-1] < p[j] < p[j+1]`
    DoubleAscent,
    /// `p[j-1] > p[j] > p[j+1]`
    DoubleDescent,
}

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
            seen[idx] = true;
        }
        Ok(Permutation(entries))
    }

    /// Caller guarantees `entries` is a rearrangement of `1..=n`.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Entry at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> u32 {
        self.0[pos - 1]
    }

    /// 1-based position of `value`.
    pub fn position_of(&self, value: u32) -> usize {
        self.0
            .iter()
            .position(|&v| v == value)
            .map(|i| i + 1)
            .expect("value not in permutation")
    }

    pub fn invert(&self) -> Permutation {
        let mut q = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            q[v as usize - 1] = i as u32 + 1;
        }
        Permutation(q)
    }

    /// `r[i] = n + 1 - p[n + 1 - i]`.
    pub fn reverse_complement(&self) -> Permutation {
        let n1 = self.len() as u32 + 1;
        Permutation(self.0.iter().rev().map(|&v| n1 - v).collect())
    }

    pub fn is_rc_invariant(&self) -> bool {
        let n1 = self.len() as u32 + 1;
        let k = self.len();
        (0..k).all(|i| self.0[i] + self.0[k - 1 - i] == n1)
    }

    /// Down-up alternation `p1 > p2 < p3 > ...`.
    pub fn is_alternating(&self) -> bool {
        is_down_up(&self.0)
    }

    // p[pos-1] < p[pos], with p[0] = 0
    fn rises_into(&self, pos: usize) -> bool {
        pos == 1 || self.0[pos - 2] < self.0[pos - 1]
    }

    // p[pos] < p[pos+1], with p[n+1] = +inf
    fn rises_out_of(&self, pos: usize) -> bool {
        pos == self.len() || self.0[pos - 1] < self.0[pos]
    }

    pub fn shape_at(&self, pos: usize) -> LocalShape {
        match (self.rises_into(pos), self.rises_out_of(pos)) {
            (false, true) => LocalShape::Valley,
            (true, false) => LocalShape::Peak,
            (true, true) => LocalShape::DoubleAscent,
            (false, false) => LocalShape::DoubleDescent,
        }
    }

    /// Positions `i` with `p[i-1] < p[i] > p[i+1]`. Position `n` never
    /// qualifies because of the `+inf` sentinel.
    pub fn left_peaks(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.shape_at(i) == LocalShape::Peak)
            .collect()
    }

    /// Positions `i` with `p[i-1] > p[i] < p[i+1]`. Position 1 never
    /// qualifies because of the `0` sentinel.
    pub fn right_valleys(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.shape_at(i) == LocalShape::Valley)
            .collect()
    }

    /// Values `k` with `p^{-1}(k) < k > p(k)`.
    pub fn cycle_peaks(&self) -> BTreeSet<u32> {
        let inv = self.invert();
        (2..=self.len() as u32)
            .filter(|&k| inv.at(k as usize) < k && self.at(k as usize) < k)
            .collect()
    }

    pub fn is_cycle_peak(&self, k: u32) -> bool {
        let pos = k as usize;
        if k < 2 || pos > self.len() || self.at(pos) >= k {
            return false;
        }
        self.position_of(k) < pos
    }

    /// Cycles written max-first, listed by increasing maxima.
    pub fn standard_cycle_form(&self) -> CycleForm {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        // Scanning from the top, the first unseen value of a cycle is its max.
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v as u32);
                v = self.at(v) as usize;
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        CycleForm {
            cycles,
            standard: true,
        }
    }

    /// Foata's fundamental transformation: erase the parentheses of the
    /// standard cycle form.
    pub fn foata(&self) -> Permutation {
        let flat = self.standard_cycle_form().cycles.concat();
        Permutation(flat)
    }

    /// Cut before every left-to-right maximum and read the pieces as cycles.
    pub fn foata_inverse(&self) -> Permutation {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut running_max = 0;
        for &v in &self.0 {
            if v > running_max {
                running_max = v;
                cycles.push(vec![v]);
            } else {
                cycles
                    .last_mut()
                    .expect("first entry opens a cycle")
                    .push(v);
            }
        }
        CycleForm {
            cycles,
            standard: true,
        }
        .to_permutation()
    }

    /// Number of `31-2` occurrences with `i` playing the `2`: adjacent
    /// descents `p[k-1] > i > p[k]` strictly left of `i`.
    pub fn count_pat_31_2_at(&self, i: u32) -> usize {
        let j = self.position_of(i);
        self.0[..j - 1]
            .windows(2)
            .filter(|w| w[1] < i && i < w[0])
            .count()
    }

    /// Number of `2-31` occurrences with `i` playing the `2`: adjacent
    /// descents `p[k] > i > p[k+1]` strictly right of `i`.
    pub fn count_pat_2_31_at(&self, i: u32) -> usize {
        let j = self.position_of(i);
        self.0[j..]
            .windows(2)
            .filter(|w| w[1] < i && i < w[0])
            .count()
    }
}

pub(crate) fn is_down_up<T: PartialOrd>(xs: &[T]) -> bool {
    xs.windows(2)
        .enumerate()
        .all(|(k, w)| if k % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(f, &self.0)
    }
}

fn parse_tokens<T: FromStr>(s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<T>()
                .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))
        })
        .collect()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_tokens(s)?)
    }
}

/// A signed permutation; bars are stored as negative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidPermutation {
                n: entries.len(),
                reason: "zero entry".into(),
            });
        }
        Permutation::new(entries.iter().map(|v| v.unsigned_abs()).collect())?;
        Ok(SignedPermutation(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(entries.clone()).is_ok());
        SignedPermutation(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn at(&self, pos: usize) -> i32 {
        self.0[pos - 1]
    }

    pub fn abs(&self) -> Permutation {
        Permutation(self.0.iter().map(|v| v.unsigned_abs()).collect())
    }

    /// First entry positive and down-up alternation on the signed values.
    pub fn is_snake(&self) -> bool {
        self.0.first().is_none_or(|&v| v > 0) && is_down_up(&self.0)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(f, &self.0)
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::new(parse_tokens(s)?)
    }
}

/// A permutation with some values marked (hatted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPermutation {
    pub perm: Permutation,
    pub marks: BTreeSet<u32>,
}

impl MarkedPermutation {
    pub fn new(perm: Permutation, marks: BTreeSet<u32>) -> Result<Self> {
        if let Some(&bad) = marks.iter().find(|&&m| m == 0 || m as usize > perm.len()) {
            return Err(Error::InvalidPermutation {
                n: perm.len(),
                reason: format!("mark {bad} out of range"),
            });
        }
        Ok(MarkedPermutation { perm, marks })
    }

    pub fn is_marked(&self, value: u32) -> bool {
        self.marks.contains(&value)
    }
}

impl fmt::Display for MarkedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.perm.as_slice().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            if self.is_marked(v) {
                f.write_str("^")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MarkedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut marks = BTreeSet::new();
        for tok in s.split_whitespace() {
            let (num, marked) = match tok.strip_suffix('^') {
                Some(rest) => (rest, true),
                None => (tok, false),
            };
            let v: u32 = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
            if marked {
                marks.insert(v);
            }
            entries.push(v);
        }
        MarkedPermutation::new(Permutation::new(entries)?, marks)
    }
}

/// Cycle decomposition. A cycle `(a, b, c)` sends `a -> b -> c -> a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleForm {
    pub cycles: Vec<Vec<u32>>,
    pub standard: bool,
}

impl CycleForm {
    pub fn to_permutation(&self) -> Permutation {
        let n = self.cycles.iter().map(Vec::len).sum();
        let mut p = vec![0; n];
        for cycle in &self.cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                p[a as usize - 1] = b;
            }
        }
        Permutation::from_vec_unchecked(p)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            f.write_str("(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    // Direct scan of q[p[i]] = i, independent of `invert`.
    fn invert_oracle(p: &[u32]) -> Vec<u32> {
        (1..=p.len() as u32)
            .map(|v| {
                (1..=p.len() as u32)
                    .find(|&i| p[i as usize - 1] == v)
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn invert_examples() {
        assert_eq!(p("1 2 3").invert(), p("1 2 3"));
        for s in ["2 6 7 9 5 3 1 8 4", "4 1 3 5 2"] {
            let q = p(s);
            assert_eq!(
                q.invert().as_slice(),
                invert_oracle(q.as_slice()).as_slice()
            );
        }
        assert_eq!(p("2 6 7 9 5 3 1 8 4").invert(), p("7 1 6 9 5 2 3 8 4"));
        assert_eq!(p("4 1 3 5 2").invert(), p("2 5 3 1 4"));
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(p("4 1 3 5 2").reverse_complement(), p("4 1 3 5 2"));
        assert!(p("4 1 3 5 2").is_rc_invariant());
        assert_eq!(p("1").reverse_complement(), p("1"));
        // positionwise 10 - p[10 - i]
        assert_eq!(
            p("4 3 1 2 9 6 8 5 7").reverse_complement(),
            p("3 5 2 4 1 8 9 7 6")
        );
    }

    #[test]
    fn alternation_and_snakes() {
        assert!(p("3 2 10 6 7 4 5 1 9 8").is_alternating());
        assert!(!p("1 2 3").is_alternating());
        assert!(!p("4 3 1 2 9 6 8 5 7").is_alternating());
        assert!(p("").is_alternating());

        let s = |x: &str| x.parse::<SignedPermutation>().unwrap();
        assert!(s("2 -1 5 4 7 -6 -3").is_snake());
        assert!(s("1 -2 3").is_snake());
        assert!(!s("-1 2 -3").is_snake());
        assert!(s("").is_snake());
    }

    #[test]
    fn peaks_and_valleys() {
        let q = p("5 7 1 2 6 3 8 9 4");
        assert_eq!(q.left_peaks(), vec![2, 5, 8]);
        assert_eq!(q.right_valleys(), vec![3, 6, 9]);
        assert!(p("1 2 3").left_peaks().is_empty());
        assert!(p("1 2 3").right_valleys().is_empty());
        assert_eq!(p("2 1").left_peaks(), vec![1]);
        assert_eq!(p("2 1").right_valleys(), vec![2]);
        assert!(p("").left_peaks().is_empty());
    }

    #[test]
    fn cycle_peak_examples() {
        let q = p("2 6 7 9 5 3 1 8 4");
        assert_eq!(
            q.cycle_peaks().into_iter().collect::<Vec<_>>(),
            vec![6, 7, 9]
        );
        assert!(p("1 2 3").cycle_peaks().is_empty());
        assert_eq!(
            p("2 1").cycle_peaks().into_iter().collect::<Vec<_>>(),
            vec![2]
        );
        for k in 1..=9 {
            assert_eq!(q.is_cycle_peak(k), q.cycle_peaks().contains(&k));
        }
    }

    #[test]
    fn cycle_forms() {
        let q = p("2 6 7 9 5 3 1 8 4");
        assert_eq!(
            q.standard_cycle_form().to_string(),
            "(5)(7,1,2,6,3)(8)(9,4)"
        );
        assert_eq!(q.standard_cycle_form().to_permutation(), q);
        assert_eq!(p("1 2 3").standard_cycle_form().to_string(), "(1)(2)(3)");
        assert_eq!(p("2 1").standard_cycle_form().to_string(), "(2,1)");
        assert_eq!(p("").standard_cycle_form().to_string(), "");
    }

    #[test]
    fn foata_examples() {
        assert_eq!(p("2 6 7 9 5 3 1 8 4").foata(), p("5 7 1 2 6 3 8 9 4"));
        assert_eq!(p("1 2 3").foata(), p("1 2 3"));
        assert_eq!(p("2 1").foata(), p("2 1"));
        assert_eq!(
            p("5 7 1 2 6 3 8 9 4").foata_inverse(),
            p("2 6 7 9 5 3 1 8 4")
        );
        assert_eq!(p("1 2 3").foata_inverse(), p("1 2 3"));
        assert_eq!(p("2 1").foata_inverse(), p("2 1"));
    }

    #[test]
    fn vincular_counts() {
        let q = p("4 3 1 2 9 6 8 5 7");
        let w: Vec<usize> = (1..=9).map(|i| q.count_pat_31_2_at(i)).collect();
        assert_eq!(w, vec![0, 1, 0, 0, 0, 0, 2, 1, 0]);
        assert_eq!(p("1 2 3").count_pat_31_2_at(2), 0);
        assert_eq!(q.count_pat_2_31_at(6), 1);
        assert_eq!(q.count_pat_2_31_at(5), 0);
        assert_eq!(p("1 2 3").count_pat_2_31_at(1), 0);
    }

    #[test]
    fn text_formats() {
        let m: MarkedPermutation = "5 7^ 1 2 6 3 8 9^ 4".parse().unwrap();
        assert_eq!(m.marks.iter().copied().collect::<Vec<_>>(), vec![7, 9]);
        assert_eq!(m.to_string(), "5 7^ 1 2 6 3 8 9^ 4");
        assert_eq!(p("5 7 1 2 6 3 8 9 4").to_string(), "5 7 1 2 6 3 8 9 4");
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("1 0".parse::<SignedPermutation>().is_err());
        assert!("1 -1".parse::<SignedPermutation>().is_err());
        assert!("3^ 1 2".parse::<MarkedPermutation>().is_ok());
    }
}

//! The maps between the Springer families and their inverses.
//!
//! * [`phi`]: 3-WIPs to snakes, through a marked permutation and Foata's
//!   transformation.
//! * [`psi`]: snakes to rc-invariant alternating permutations of twice the
//!   length.
//! * [`fz`]: the Foata–Zeilberger map from permutations to restricted Laguerre
//!   histories.
//! * [`rcalt_to_lbp`]: `fz` restricted to rc-invariant alternating
//!   permutations, followed by halving.
//! * [`snake_to_lbp`]: the composite of the last two.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::ThreeWIP;
use crate::paths::{LabeledBallotPath, LaguerreHistory, Step};
use crate::perm::{LocalShape, MarkedPermutation, Permutation, SignedPermutation};

/// Whether composite maps re-validate their intermediate objects.
///
/// Both modes return identical results on valid input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Checked,
    Fast,
}

/// `tau(sigma_i) = pi_i`; a cycle peak `k` of `tau` is marked iff
/// `sigma_l = k = pi_{l+1}` for some `l`.
pub fn phi_step1(wip: &ThreeWIP) -> MarkedPermutation {
    let sigma = wip.sigma().as_slice();
    let pi = wip.pi().as_slice();
    let mut tau = vec![0; sigma.len()];
    for (&s, &p) in sigma.iter().zip(pi) {
        tau[s as usize - 1] = p;
    }
    let tau = Permutation::from_vec_unchecked(tau);
    let marks = sigma
        .iter()
        .zip(pi.iter().skip(1))
        .filter(|&(s, p)| s == p && tau.is_cycle_peak(*s))
        .map(|(&s, _)| s)
        .collect();
    MarkedPermutation { perm: tau, marks }
}

/// Sort the columns `(i, tau_i)` by `max(i, tau_i)`. The only ties are the
/// two columns of a cycle peak `k`; `(k, tau_k)` goes first iff `k` is marked.
pub fn phi_step1_inverse(mp: &MarkedPermutation) -> Result<ThreeWIP> {
    let tau = &mp.perm;
    if let Some(&bad) = mp.marks.iter().find(|&&k| !tau.is_cycle_peak(k)) {
        return Err(Error::MarkNotCyclePeak(bad));
    }
    let mut columns: Vec<(u32, u32)> = (1..=tau.len() as u32)
        .map(|i| (i, tau.at(i as usize)))
        .collect();
    columns.sort_by_key(|&(i, t)| {
        let c = i.max(t);
        let own_column = i == c;
        (c, own_column != mp.is_marked(c))
    });
    let (sigma, pi): (Vec<u32>, Vec<u32>) = columns.into_iter().unzip();
    Ok(ThreeWIP::from_parts_unchecked(
        Permutation::from_vec_unchecked(sigma),
        Permutation::from_vec_unchecked(pi),
    ))
}

/// Intermediate objects of [`phi`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTrace {
    pub tau: MarkedPermutation,
    pub tau_tilde: MarkedPermutation,
    pub snake: SignedPermutation,
}

pub fn phi_trace(wip: &ThreeWIP) -> Result<PhiTrace> {
    let tau = phi_step1(wip);
    let tau_tilde = MarkedPermutation {
        perm: tau.perm.foata(),
        marks: tau.marks.clone(),
    };
    let snake = place_bars(&tau_tilde)?;
    if !snake.is_snake() {
        return Err(Error::NotASnake);
    }
    Ok(PhiTrace {
        tau,
        tau_tilde,
        snake,
    })
}

pub fn phi(wip: &ThreeWIP) -> Result<SignedPermutation> {
    phi_trace(wip).map(|t| t.snake)
}

// Bar a non-valley in even position, and a right valley whose closest left
// peak to the left is marked.
fn place_bars(tilde: &MarkedPermutation) -> Result<SignedPermutation> {
    let p = &tilde.perm;
    let mut last_peak: Option<u32> = None;
    let mut out = Vec::with_capacity(p.len());
    for pos in 1..=p.len() {
        let v = p.at(pos);
        let barred = match p.shape_at(pos) {
            LocalShape::Valley => {
                let peak = last_peak.ok_or(Error::OrphanValley(pos))?;
                tilde.is_marked(peak)
            }
            LocalShape::Peak => {
                last_peak = Some(v);
                pos % 2 == 0
            }
            _ => pos % 2 == 0,
        };
        let v = v as i32;
        out.push(if barred { -v } else { v });
    }
    Ok(SignedPermutation::from_vec_unchecked(out))
}

/// Read the marks back off the bars of the right valleys, undo Foata's
/// transformation and re-sort the columns.
pub fn phi_inverse(snake: &SignedPermutation) -> Result<ThreeWIP> {
    if !snake.is_snake() {
        return Err(Error::NotASnake);
    }
    let tilde = snake.abs();
    let mut marks = BTreeSet::new();
    // (peak value, bar state of its valleys so far)
    let mut current: Option<(u32, Option<bool>)> = None;
    let close = |cur: Option<(u32, Option<bool>)>, marks: &mut BTreeSet<u32>| {
        if let Some((peak, state)) = cur {
            debug_assert!(state.is_some(), "left peak without right valley");
            if state == Some(true) {
                marks.insert(peak);
            }
        }
    };
    for pos in 1..=tilde.len() {
        match tilde.shape_at(pos) {
            LocalShape::Peak => {
                close(current.take(), &mut marks);
                current = Some((tilde.at(pos), None));
            }
            LocalShape::Valley => {
                let barred = snake.at(pos) < 0;
                let (peak, state) = current.as_mut().ok_or(Error::OrphanValley(pos))?;
                match state {
                    None => *state = Some(barred),
                    Some(prev) if *prev != barred => {
                        return Err(Error::InconsistentBars { peak: *peak })
                    }
                    _ => {}
                }
            }
            _ => {}
        }
    }
    close(current.take(), &mut marks);
    let tau = MarkedPermutation {
        perm: tilde.foata_inverse(),
        marks,
    };
    phi_step1_inverse(&tau)
}

/// Shift a snake into `1..=2n` avoiding complementary pairs and mirror it
/// into an rc-invariant alternating permutation of length `2n`.
pub fn psi(snake: &SignedPermutation) -> Result<Permutation> {
    if !snake.is_snake() {
        return Err(Error::NotASnake);
    }
    let n = snake.len();
    let ni = n as i32;
    let tilde: Vec<u32> = snake
        .as_slice()
        .iter()
        .map(|&v| if v > 0 { ni + v } else { ni + 1 + v } as u32)
        .collect();
    let total = 2 * n as u32 + 1;
    let mut full = vec![0u32; 2 * n];
    if n % 2 == 1 {
        for (i, &v) in tilde.iter().rev().enumerate() {
            full[i] = v;
            full[2 * n - 1 - i] = total - v;
        }
    } else {
        for (i, &v) in tilde.iter().enumerate() {
            full[n + i] = v;
            full[n - 1 - i] = total - v;
        }
    }
    Ok(Permutation::from_vec_unchecked(full))
}

pub fn psi_inverse(p: &Permutation) -> Result<SignedPermutation> {
    if !p.len().is_multiple_of(2) {
        return Err(Error::OddLength);
    }
    if !p.is_rc_invariant() {
        return Err(Error::NotRcInvariant);
    }
    if !p.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let n = p.len() / 2;
    let entries = p.as_slice();
    let tilde: Vec<u32> = if n % 2 == 1 {
        entries[..n].iter().rev().copied().collect()
    } else {
        entries[n..].to_vec()
    };
    let n = n as i32;
    let snake: Vec<i32> = tilde
        .into_iter()
        .map(|v| {
            let v = v as i32;
            if v > n {
                v - n
            } else {
                v - n - 1
            }
        })
        .collect();
    let snake = SignedPermutation::from_vec_unchecked(snake);
    debug_assert!(snake.is_snake());
    Ok(snake)
}

/// Foata–Zeilberger: value `i` gets a step from its local shape and the
/// weight `(31-2)_i`.
pub fn fz(p: &Permutation) -> LaguerreHistory {
    let n = p.len();
    let mut steps = vec![Step::H; n];
    let mut weights = vec![0; n];
    for pos in 1..=n {
        let v = p.at(pos);
        steps[v as usize - 1] = match p.shape_at(pos) {
            LocalShape::Valley => Step::U,
            LocalShape::Peak => Step::D,
            LocalShape::DoubleAscent => Step::H,
            LocalShape::DoubleDescent => Step::T,
        };
        weights[v as usize - 1] = p.count_pat_31_2_at(v) as u32;
    }
    LaguerreHistory::from_parts_unchecked(steps, weights)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Hole,
    Value(u32),
}

/// Diamond insertion: step `i` fills the `(w_i + 1)`-th hole.
pub fn fz_inverse(hw: &LaguerreHistory) -> Result<Permutation> {
    use Slot::{Hole, Value};
    let mut word = vec![Hole];
    for (idx, (&step, &w)) in hw.steps().iter().zip(hw.weights()).enumerate() {
        let i = idx as u32 + 1;
        let at = word
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Hole)
            .nth(w as usize)
            .map(|(k, _)| k)
            .ok_or(Error::PlaceholderExhausted(idx + 1))?;
        let replacement: &[Slot] = match step {
            Step::U => &[Hole, Value(i), Hole],
            Step::H => &[Value(i), Hole],
            Step::D => &[Value(i)],
            Step::T => &[Hole, Value(i)],
        };
        word.splice(at..=at, replacement.iter().copied());
    }
    let holes = word.iter().filter(|s| **s == Hole).count();
    if holes != 1 {
        return Err(Error::MalformedHistory(holes));
    }
    let entries = word
        .into_iter()
        .filter_map(|s| match s {
            Value(v) => Some(v),
            Hole => None,
        })
        .collect();
    Ok(Permutation::from_vec_unchecked(entries))
}

fn check_rcalt(p: &Permutation) -> Result<()> {
    if !p.len().is_multiple_of(2) {
        return Err(Error::OddLength);
    }
    if !p.is_alternating() {
        return Err(Error::NotAlternating);
    }
    if !p.is_rc_invariant() {
        return Err(Error::NotRcInvariant);
    }
    Ok(())
}

pub fn rcalt_to_lbp(p: &Permutation) -> Result<LabeledBallotPath> {
    rcalt_to_lbp_with(p, Mode::Checked)
}

pub fn rcalt_to_lbp_with(p: &Permutation, mode: Mode) -> Result<LabeledBallotPath> {
    let history = fz(p);
    match mode {
        Mode::Checked => {
            check_rcalt(p)?;
            history.halve_rc_fixed()
        }
        Mode::Fast => {
            let half = p.len() / 2;
            Ok(LabeledBallotPath::from_parts_unchecked(
                history.steps()[..half].to_vec(),
                history.weights()[..half].to_vec(),
            ))
        }
    }
}

pub fn lbp_to_rcalt(lbp: &LabeledBallotPath) -> Result<Permutation> {
    lbp_to_rcalt_with(lbp, Mode::Checked)
}

pub fn lbp_to_rcalt_with(lbp: &LabeledBallotPath, mode: Mode) -> Result<Permutation> {
    let p = fz_inverse(&lbp.extend_to_rc_fixed())?;
    if mode == Mode::Checked {
        check_rcalt(&p)?;
    }
    Ok(p)
}

pub fn snake_to_lbp(snake: &SignedPermutation) -> Result<LabeledBallotPath> {
    snake_to_lbp_with(snake, Mode::Checked)
}

pub fn snake_to_lbp_with(snake: &SignedPermutation, mode: Mode) -> Result<LabeledBallotPath> {
    rcalt_to_lbp_with(&psi(snake)?, mode)
}

pub fn lbp_to_snake(lbp: &LabeledBallotPath) -> Result<SignedPermutation> {
    lbp_to_snake_with(lbp, Mode::Checked)
}

pub fn lbp_to_snake_with(lbp: &LabeledBallotPath, mode: Mode) -> Result<SignedPermutation> {
    psi_inverse(&lbp_to_rcalt_with(lbp, mode)?)
}

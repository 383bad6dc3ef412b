//! Four families counted by the Springer numbers `1, 1, 3, 11, 57, 361, ...`
//! (snakes, weakly increasing 3-dimensional permutations, rc-invariant
//! alternating permutations and labeled ballot paths), explicit bijections
//! between them, and exhaustive checks of every claimed property.

pub mod bijections;
pub mod cli;
pub mod error;
pub mod families;
pub mod par;
pub mod paths;
pub mod perm;
pub mod search;
pub mod verify;

pub use bijections::{
    fz, fz_inverse, lbp_to_rcalt, lbp_to_snake, phi, phi_inverse, phi_step1, phi_step1_inverse,
    phi_trace, psi, psi_inverse, rcalt_to_lbp, snake_to_lbp, Mode, PhiTrace,
};
pub use error::{Error, Result};
pub use families::{
    enumerate_alternating, enumerate_laguerre, enumerate_lbp, enumerate_permutations,
    enumerate_rcalt, enumerate_snakes, enumerate_wip3, euler_sequence, springer_dp, springer_egf,
    CountMethod, Family, SpringerTable, ThreeWIP,
};
pub use paths::{count_lbp_dp, height_profile, LabeledBallotPath, LaguerreHistory, Step, StepWord};
pub use perm::{CycleForm, LocalShape, MarkedPermutation, Permutation, SignedPermutation};

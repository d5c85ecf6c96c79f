//! Root analysis over the rationals: sign rules, coefficient inequalities,
//! Sturm counting, isolation, refinement and exact rational roots.

mod descartes;
mod newton;
mod rational;
mod sturm;

pub use descartes::{
    descartes_negative, descartes_positive, sign_variations, vieta_product, DescartesResult,
};
pub use newton::{newton_dugua_check, NewtonCheckResult, NewtonIndex};
pub use rational::rational_root_test;
pub use sturm::{
    cauchy_bound, isolate_real_roots, refine_root, sturm_real_root_count, RootIsolation,
    RootRange, SturmSequence,
};
pub(crate) use sturm::{isolate_with, refine_with};

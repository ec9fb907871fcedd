//! Free resolutions, projective-dimension verdicts, the square-zero
//! annihilator detector and the truncation sequence of a submodule of
//! `F[x]`.

mod detect;
mod free;
mod horseshoe;
mod sequence;

pub use detect::{
    self_annihilator_certificate, SelfAnnihilatorCertificate, SelfAnnihilatorCondition,
    SelfAnnihilatorOutcome,
};
pub use free::{
    free_resolution, is_projective, pd_bounded, pd_from_resolution, projective_splitting, verify,
    FreeResolution, PdVerdict, DEFAULT_DEPTH,
};
pub use horseshoe::{check_exact, horseshoe_resolution, AugmentedComplex};
pub use sequence::{truncation_sequence, TruncationSequence};

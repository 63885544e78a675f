//! Independent check on the phase-space results: a two-component split-step Fourier
//! simulation of the pulse sequence that never touches a Wigner function until the
//! very end.

mod split_step;

pub use split_step::{
    apply_pulse, displacement_expectation, evolve, run_interferometer, wigner_of_exit, InterferometerRun,
    LedgerStage, SplitStepConfig, TwoComponentState, STAGE_LABELS,
};

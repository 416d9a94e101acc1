//! Closed-loop biosignal decoding toolkit.
//!
//! The crate simulates a neurofeedback game in which a spaceship's altitude
//! is driven by a control signal decoded from multichannel EEG/EMG:
//!
//! - [`signals`] — recording data model, seeded synthetic EEG/EMG generation,
//!   CSV persistence.
//! - [`dsp`] — band-pass filtering, Welch spectra, sliding-window band power,
//!   individually adjusted alpha-band estimation, calibration (the
//!   single-electrode control signal CS1).
//! - [`decoder`] — filter-bank CSP pipeline with mutual-information feature
//!   selection and linear regression (CS2 on EEG, CS3 on EMG, CS4 combined).
//! - [`protocol`] — the session/block/phase state machine, the game loop,
//!   and between-session retraining.
//! - [`analysis`] — per-block performance indexes, t-tests, exact Wilcoxon
//!   signed-rank, Spearman correlation, and report rendering.
//!
//! Every random stream derives from a single root seed (see [`rng`]), so any
//! run is reproducible byte-for-byte.

pub mod analysis;
pub mod decoder;
pub mod dsp;
pub(crate) mod linalg;
pub mod protocol;
pub mod rng;
pub mod signals;

pub use analysis::{block_differences, performance_row, BlockDifference, PerformanceRow, Report};
pub use decoder::{DecoderModel, FeatureDef, LabeledEpoch, ModelKind, SourceSet, SpatialFilter};
pub use dsp::{AlphaBand, BandSpec, CalibrationMap, ControlSeries, PowerSeries};
pub use protocol::{ExperimentConfig, Part, PartRun, SessionLog, SessionPlan};
pub use signals::{ChannelInfo, ChannelSet, Condition, Modality, Recording, SynthScenario};

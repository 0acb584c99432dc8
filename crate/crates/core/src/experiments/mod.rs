//! Initial-state preparation, measure series over time and parameter sweeps,
//! and detection of entanglement sudden birth and death.

mod claims;
mod events;
mod field;
mod series;

pub use claims::{
    default_claim_reports, gamma_decay_report, nbar_smoothing_report, sech_delay_report, ClaimReport, DEFAULT_SECH_TAU,
};
pub use events::{detect_events, detect_sudden_events, SuddenEvents, DEFAULT_EVENT_THRESHOLD, EVENT_HYSTERESIS_POINTS};
pub use field::{coherent_amplitudes, prepare_initial, FieldPreparation};
pub use series::{run_series, run_sweep, run_theta_sweep, Measure, MeasureSeries};

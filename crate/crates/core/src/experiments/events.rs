use serde::{Deserialize, Serialize};

use super::series::MeasureSeries;
use crate::{Error, Result};

pub const DEFAULT_EVENT_THRESHOLD: f64 = 1e-3;

/// Consecutive points that must sit on one side of the threshold before a
/// crossing counts.
pub const EVENT_HYSTERESIS_POINTS: usize = 2;

/// Threshold crossings of a measure series. Births and deaths alternate.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuddenEvents {
    pub threshold: f64,
    /// Grid times at which the value first rises to or above the threshold.
    pub births: Vec<f64>,
    /// Grid times at which the value first falls below it.
    pub deaths: Vec<f64>,
}

impl SuddenEvents {
    pub fn first_birth(&self) -> Option<f64> {
        self.births.first().copied()
    }

    pub fn first_death(&self) -> Option<f64> {
        self.deaths.first().copied()
    }

    pub fn crossings(&self) -> usize {
        self.births.len() + self.deaths.len()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Kind {
    Birth,
    Death,
}

/// Detects births and deaths on an arbitrary sampled curve.
///
/// A birth is the first point at or above `threshold` after at least two
/// points below it; a death is the mirror image. Events are forced to
/// alternate, so a short excursion cannot register twice.
pub fn detect_events(times: &[f64], values: &[f64], threshold: f64) -> Result<SuddenEvents> {
    if threshold.is_nan() || threshold <= 0.0 {
        return Err(Error::InvalidParameter(format!("event threshold must be > 0, got {threshold}")));
    }
    if times.len() != values.len() {
        return Err(Error::DimensionMismatch { expected: times.len(), got: values.len() });
    }
    if times.len() <= EVENT_HYSTERESIS_POINTS {
        return Err(Error::GridTooCoarse(times.len()));
    }
    let below: Vec<bool> = values.iter().map(|&v| v < threshold).collect();
    let mut events = SuddenEvents { threshold, ..Default::default() };
    let mut last = None;
    for i in EVENT_HYSTERESIS_POINTS..times.len() {
        let run = &below[i - EVENT_HYSTERESIS_POINTS..i];
        if !below[i] && run.iter().all(|&b| b) && last != Some(Kind::Birth) {
            events.births.push(times[i]);
            last = Some(Kind::Birth);
        } else if below[i] && run.iter().all(|&b| !b) && last != Some(Kind::Death) {
            events.deaths.push(times[i]);
            last = Some(Kind::Death);
        }
    }
    Ok(events)
}

pub fn detect_sudden_events(series: &MeasureSeries, threshold: f64) -> Result<SuddenEvents> {
    detect_events(&series.times, &series.values, threshold)
}

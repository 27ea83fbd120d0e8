//! Sampled detector time series and its CSV wire format.
//!
//! CSV layout: header `t,value`, one row per sample, 17 significant digits
//! so that doubles round-trip exactly.

use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

/// Uniformly sampled real-valued time series.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub sample_rate: f64,
    pub samples: Vec<f64>,
    pub start_time: f64,
}

impl TimeSeries {
    pub fn new(sample_rate: f64, samples: Vec<f64>, start_time: f64) -> Result<Self> {
        if !(sample_rate > 0.0) {
            return Err(Error::Validation(format!(
                "sample rate must be positive, got {sample_rate}"
            )));
        }
        if samples.len() < 2 {
            return Err(Error::Validation(format!(
                "time series needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        Ok(TimeSeries {
            sample_rate,
            samples,
            start_time,
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn time_at(&self, index: usize) -> f64 {
        self.start_time + index as f64 / self.sample_rate
    }

    pub fn duration(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate
    }

    pub fn variance(&self) -> f64 {
        let n = self.samples.len() as f64;
        let mean = self.samples.iter().sum::<f64>() / n;
        self.samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n
    }

    pub fn to_csv_string(&self) -> String {
        let mut out = String::with_capacity(self.samples.len() * 48 + 16);
        out.push_str("t,value\n");
        for (i, &v) in self.samples.iter().enumerate() {
            out.push_str(&format!("{:.16e},{:.16e}\n", self.time_at(i), v));
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_csv_string().as_bytes())?;
        Ok(())
    }

    /// Parses the `t,value` CSV format, inferring the sample rate from the
    /// first two time stamps. Errors carry the 1-based line number.
    pub fn read_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_csv_str(&text)
    }

    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, header)) if header.trim() == "t,value" => {}
            Some((_, header)) => {
                return Err(Error::Parse {
                    line: 1,
                    msg: format!("expected header 't,value', got '{header}'"),
                })
            }
            None => {
                return Err(Error::Parse {
                    line: 1,
                    msg: "empty file".into(),
                })
            }
        }
        let mut times = Vec::new();
        let mut samples = Vec::new();
        for (idx, line) in lines {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut parts = line.splitn(2, ',');
            let t_str = parts.next().unwrap_or("");
            let v_str = parts.next().ok_or(Error::Parse {
                line: lineno,
                msg: "missing value column".into(),
            })?;
            let t: f64 = t_str.trim().parse().map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("bad time '{t_str}': {e}"),
            })?;
            let v: f64 = v_str.trim().parse().map_err(|e| Error::Parse {
                line: lineno,
                msg: format!("bad value '{v_str}': {e}"),
            })?;
            times.push(t);
            samples.push(v);
        }
        if samples.len() < 2 {
            return Err(Error::Parse {
                line: times.len() + 1,
                msg: format!("need at least 2 samples, got {}", samples.len()),
            });
        }
        let dt = times[1] - times[0];
        if !(dt > 0.0) {
            return Err(Error::Parse {
                line: 3,
                msg: format!("non-increasing time stamps (dt = {dt})"),
            });
        }
        TimeSeries::new(1.0 / dt, samples, times[0])
    }
}

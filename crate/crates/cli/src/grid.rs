use anyhow::{bail, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// Strictly increasing frequency samples between two positive endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid {
    scale: Scale,
    min: f64,
    max: f64,
    count: usize,
}

impl FrequencyGrid {
    pub fn new(scale: Scale, min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min > 0.0 && min.is_finite()) {
            bail!("grid minimum must be positive and finite, got {min}");
        }
        if !(max > min && max.is_finite()) {
            bail!("grid maximum must exceed the minimum {min}, got {max}");
        }
        if count < 2 {
            bail!("a grid needs at least 2 points, got {count}");
        }
        Ok(Self {
            scale,
            min,
            max,
            count,
        })
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Result<Self> {
        Self::new(Scale::Linear, min, max, count)
    }

    pub fn log(min: f64, max: f64, count: usize) -> Result<Self> {
        Self::new(Scale::Log, min, max, count)
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// The samples; both endpoints are reproduced exactly.
    pub fn points(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        let mut points: Vec<f64> = (0..self.count)
            .map(|k| {
                let t = k as f64 / last;
                match self.scale {
                    Scale::Linear => self.min + t * (self.max - self.min),
                    Scale::Log => (self.min.ln() + t * (self.max / self.min).ln()).exp(),
                }
            })
            .collect();
        points[0] = self.min;
        points[self.count - 1] = self.max;
        points
    }
}

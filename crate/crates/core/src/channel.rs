//! Symbol-error channels for the simulator.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, GaloisField};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelModel {
    /// Exactly `tau` distinct positions, uniform over all position sets, each
    /// hit with a uniform nonzero error value.
    FixedWeight(usize),
    /// Each symbol independently replaced by a uniform different value with
    /// probability `p`.
    QSymmetric(f64),
}

impl ChannelModel {
    pub fn kind(&self) -> &'static str {
        match self {
            ChannelModel::FixedWeight(_) => "fixed",
            ChannelModel::QSymmetric(_) => "qsc",
        }
    }

    pub fn validate(&self, len: usize) -> Result<()> {
        match *self {
            ChannelModel::FixedWeight(tau) if tau > len => Err(Error::InvalidChannel(format!(
                "error weight {tau} exceeds word length {len}"
            ))),
            ChannelModel::QSymmetric(p) if !(0.0..=1.0).contains(&p) => Err(
                Error::InvalidChannel(format!("probability {p} is outside [0, 1]")),
            ),
            _ => Ok(()),
        }
    }

    /// Draws an error vector of length `len`.
    pub fn sample_error<R: Rng + ?Sized>(
        &self,
        field: &GaloisField,
        len: usize,
        rng: &mut R,
    ) -> Vec<FieldElement> {
        let q = field.size();
        let mut e = vec![FieldElement::ZERO; len];
        match *self {
            ChannelModel::FixedWeight(tau) => {
                for i in sample(rng, len, tau) {
                    e[i] = FieldElement::from_raw(rng.gen_range(1..q) as u16);
                }
            }
            ChannelModel::QSymmetric(p) => {
                for x in e.iter_mut() {
                    if rng.gen_bool(p) {
                        *x = FieldElement::from_raw(rng.gen_range(1..q) as u16);
                    }
                }
            }
        }
        e
    }

    /// The same model with its parameter replaced by a sweep value.
    pub fn with_param(&self, value: f64) -> ChannelModel {
        match self {
            ChannelModel::FixedWeight(_) => ChannelModel::FixedWeight(value.round() as usize),
            ChannelModel::QSymmetric(_) => ChannelModel::QSymmetric(value),
        }
    }

    /// Parameter as written in CSV output.
    pub fn param_string(&self) -> String {
        match self {
            ChannelModel::FixedWeight(tau) => tau.to_string(),
            ChannelModel::QSymmetric(p) => format!("{p:.6}"),
        }
    }
}

impl fmt::Display for ChannelModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind(), self.param_string())
    }
}

impl FromStr for ChannelModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidChannel(format!("expected fixed:TAU or qsc:P, got {s:?}"));
        let (kind, param) = s.split_once(':').ok_or_else(bad)?;
        let model = match kind {
            "fixed" => ChannelModel::FixedWeight(param.parse().map_err(|_| bad())?),
            "qsc" => ChannelModel::QSymmetric(param.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        if let ChannelModel::QSymmetric(p) = model {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidChannel(format!(
                    "probability {p} is outside [0, 1]"
                )));
            }
        }
        Ok(model)
    }
}

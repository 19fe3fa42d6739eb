//! Series JSON: `{"order": N, "coeffs": [<polynomial JSON> per power]}`.
//!
//! A normalized series lists `z^1 ..= z^N`; a unit series lists `z^0 ..= z^N`.

use serde::{Deserialize, Serialize};

use super::{NormalizedSeries, PowerSeries, SeriesError, UnitSeries};
use crate::algebra::PolyJson;
use crate::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<PolyJson>,
}

fn polys(j: &SeriesJson) -> Result<Vec<MPoly>, SeriesError> {
    j.coeffs
        .iter()
        .map(|p| MPoly::try_from(p).map_err(|e| SeriesError::Format(e.to_string())))
        .collect()
}

impl NormalizedSeries<MPoly> {
    pub fn to_json_value(&self) -> SeriesJson {
        SeriesJson {
            order: self.order(),
            coeffs: self.as_series().coeffs()[1..].iter().map(PolyJson::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("series JSON is always serializable")
    }

    pub fn from_json_value(j: &SeriesJson) -> Result<Self, SeriesError> {
        if j.order < 1 || j.coeffs.len() != j.order {
            return Err(SeriesError::Format(format!(
                "order {} needs exactly {} coefficients (z^1..z^N), got {}",
                j.order,
                j.order,
                j.coeffs.len()
            )));
        }
        let mut coeffs = vec![MPoly::default()];
        coeffs.extend(polys(j)?);
        NormalizedSeries::new(PowerSeries::new(coeffs))
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let j: SeriesJson =
            serde_json::from_str(text).map_err(|e| SeriesError::Format(e.to_string()))?;
        Self::from_json_value(&j)
    }
}

impl UnitSeries<MPoly> {
    pub fn to_json_value(&self) -> SeriesJson {
        SeriesJson {
            order: self.order(),
            coeffs: self.as_series().coeffs().iter().map(PolyJson::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("series JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, SeriesError> {
        let j: SeriesJson =
            serde_json::from_str(text).map_err(|e| SeriesError::Format(e.to_string()))?;
        if j.coeffs.len() != j.order + 1 {
            return Err(SeriesError::Format(format!(
                "order {} needs {} coefficients (z^0..z^N), got {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            )));
        }
        UnitSeries::new(PowerSeries::new(polys(&j)?))
    }
}

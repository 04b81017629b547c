//! JSON interchange format for algebra elements: the CLI's element-input
//! contract.
//!
//! ```json
//! {"d": 2,
//!  "theta": [[0.0, 0.5], [-0.5, 0.0]],
//!  "coeffs": [{"n": [1, 0], "re": 1.0, "im": 0.0}]}
//! ```

use serde::{Deserialize, Serialize};

use crate::{AlgebraElement, Complex, LatticeIndex, NctError, Result, ThetaMatrix};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct CoeffRecord {
    pub n: Vec<i64>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct ElementRecord {
    pub d: usize,
    pub theta: Vec<Vec<f64>>,
    pub coeffs: Vec<CoeffRecord>,
}

impl AlgebraElement {
    /// Serializes to the JSON element format, coefficients in lexicographic
    /// mode order.
    pub fn to_json(&self) -> String {
        let record = ElementRecord {
            d: self.dim(),
            theta: self.theta().rows(),
            coeffs: self
                .coeffs()
                .map(|(n, c)| CoeffRecord {
                    n: n.as_slice().to_vec(),
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        };
        serde_json::to_string(&record).expect("element record serializes")
    }

    /// Parses the JSON element format; repeated modes accumulate, zero
    /// coefficients are pruned.
    pub fn from_json(text: &str) -> Result<Self> {
        let record: ElementRecord = serde_json::from_str(text)?;
        Self::from_record(record)
    }

    pub(crate) fn from_record(record: ElementRecord) -> Result<Self> {
        if record.theta.len() != record.d {
            return Err(NctError::InvalidInput(format!(
                "theta is {}x? but d = {}",
                record.theta.len(),
                record.d
            )));
        }
        let theta = ThetaMatrix::new(record.theta)?;
        AlgebraElement::from_coeffs(
            theta,
            record.coeffs.into_iter().map(|r| {
                (
                    LatticeIndex::new(r.n),
                    Complex::new(r.re, r.im),
                )
            }),
        )
    }
}

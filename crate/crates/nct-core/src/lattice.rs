use std::collections::HashMap;
use std::fmt;

use crate::{NctError, Result};

/// A Fourier mode `n ∈ Z^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeIndex(Vec<i64>);

impl LatticeIndex {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![0; d])
    }

    /// The `j`-th standard basis mode (0-based axis).
    pub fn unit(d: usize, axis: usize) -> Self {
        let mut v = vec![0; d];
        v[axis] = 1;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, axis: usize) -> i64 {
        self.0[axis]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// `|n|_∞`, the cube radius of the mode.
    pub fn linf_norm(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    /// `|n|² = Σ n_j²` as a float.
    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|&a| (a * a) as f64).sum()
    }

    /// Euclidean norm `|n|`.
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

impl fmt::Debug for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&[i64]> for LatticeIndex {
    fn from(v: &[i64]) -> Self {
        Self(v.to_vec())
    }
}

/// Finite section window: the cube `{n : |n|_∞ <= radius}` with a fixed,
/// deterministic enumeration (lexicographic in coordinates).
///
/// Position 0 through `len()-1` index the GNS basis vectors `U^n`; the zero
/// mode's position hosts the cyclic vector `δ₀`.
#[derive(Clone)]
pub struct LatticeTruncation {
    d: usize,
    radius: i64,
    modes: Vec<LatticeIndex>,
    positions: HashMap<LatticeIndex, usize>,
}

impl LatticeTruncation {
    pub fn new(d: usize, radius: i64) -> Result<Self> {
        if d < 2 {
            return Err(NctError::InvalidDimension(d));
        }
        if radius < 0 {
            return Err(NctError::InvalidInput(format!(
                "truncation radius must be >= 0, got {radius}"
            )));
        }
        let side = (2 * radius + 1) as usize;
        let count = side.pow(d as u32);
        let mut modes = Vec::with_capacity(count);
        let mut positions = HashMap::with_capacity(count);
        let mut current = vec![-radius; d];
        loop {
            let idx = LatticeIndex::new(current.clone());
            positions.insert(idx.clone(), modes.len());
            modes.push(idx);
            // odometer increment, last coordinate fastest
            let mut axis = d;
            loop {
                if axis == 0 {
                    return Ok(Self {
                        d,
                        radius,
                        modes,
                        positions,
                    });
                }
                axis -= 1;
                if current[axis] < radius {
                    current[axis] += 1;
                    for c in current.iter_mut().skip(axis + 1) {
                        *c = -radius;
                    }
                    break;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    /// Number of modes in the cube, `(2·radius+1)^d`.
    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn modes(&self) -> &[LatticeIndex] {
        &self.modes
    }

    pub fn contains(&self, n: &LatticeIndex) -> bool {
        n.dim() == self.d && n.linf_norm() <= self.radius
    }

    /// Position of a mode in the enumeration, if inside the cube.
    pub fn position(&self, n: &LatticeIndex) -> Option<usize> {
        self.positions.get(n).copied()
    }

    /// Position of the zero mode (the GNS cyclic vector `δ₀`).
    pub fn zero_position(&self) -> usize {
        self.positions[&LatticeIndex::zero(self.d)]
    }
}

impl fmt::Debug for LatticeTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LatticeTruncation(d={}, radius={}, len={})",
            self.d,
            self.radius,
            self.len()
        )
    }
}

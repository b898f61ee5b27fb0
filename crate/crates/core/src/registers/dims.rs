use std::fmt;

use crate::{Error, Result};

/// Local Hilbert-space dimensions of a register, subsystem 0 first.
///
/// Basis index convention: subsystem 0 is the most significant digit, the
/// last subsystem varies fastest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsystemDims(Vec<usize>);

impl SubsystemDims {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyRegister);
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::DimensionTooSmall(d));
        }
        Ok(Self(dims))
    }

    /// `n` qubits.
    pub fn qubits(n: usize) -> Result<Self> {
        Self::new(vec![2; n])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().product()
    }

    pub fn get(&self, k: usize) -> usize {
        self.0[k]
    }

    /// Product of the local dimensions of the listed subsystems.
    pub fn block_dim(&self, block: &[usize]) -> usize {
        block.iter().map(|&k| self.0[k]).product()
    }

    /// Dimensions of the listed subsystems, in the given order.
    pub fn select(&self, block: &[usize]) -> Result<Self> {
        Self::new(block.iter().map(|&k| self.0[k]).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }

    /// Row-major strides: `index = Σ digit[k] * stride[k]`.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.0.len()];
        for k in (0..self.0.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.0[k + 1];
        }
        strides
    }

    /// Splits a flat basis index into per-subsystem digits.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for k in (0..self.0.len()).rev() {
            out[k] = index % self.0[k];
            index /= self.0[k];
        }
        out
    }

    /// Checks that `block` is a nonempty list of distinct, in-range indices.
    pub(crate) fn check_block(&self, block: &[usize]) -> Result<()> {
        if block.is_empty() {
            return Err(Error::InvalidSubsystems("empty subsystem set".into()));
        }
        let mut seen = vec![false; self.0.len()];
        for &k in block {
            if k >= self.0.len() {
                return Err(Error::InvalidSubsystems(format!(
                    "index {k} out of range for {} subsystems",
                    self.0.len()
                )));
            }
            if seen[k] {
                return Err(Error::InvalidSubsystems(format!("index {k} repeated")));
            }
            seen[k] = true;
        }
        Ok(())
    }

    /// Sorted complement of `block` in `0..len`.
    pub fn complement(&self, block: &[usize]) -> Vec<usize> {
        (0..self.0.len()).filter(|k| !block.contains(k)).collect()
    }
}

impl fmt::Display for SubsystemDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_dims() {
        assert_eq!(SubsystemDims::new(vec![2, 1]), Err(Error::DimensionTooSmall(1)));
        assert_eq!(SubsystemDims::new(vec![]), Err(Error::EmptyRegister));
    }

    #[test]
    fn digits_and_strides_agree() {
        let d = SubsystemDims::new(vec![2, 3, 4]).unwrap();
        assert_eq!(d.strides(), vec![12, 4, 1]);
        for i in 0..d.total() {
            let dig = d.digits(i);
            let back: usize = dig.iter().zip(d.strides()).map(|(a, s)| a * s).sum();
            assert_eq!(back, i);
        }
        assert_eq!(d.digits(5), vec![0, 1, 1]);
    }
}

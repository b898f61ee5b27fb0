use std::fmt;

use crate::{Error, Result};

/// A split of `n` subsystems into two nonempty blocks, stored canonically.
///
/// Canonical form: `|block_a| < n/2`, or `|block_a| = n/2` with `0 ∈ block_a`.
/// Both blocks are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    n: usize,
    block_a: Vec<usize>,
    block_b: Vec<usize>,
}

impl Bipartition {
    /// Builds the canonical bipartition with one block equal to `block`.
    ///
    /// `block` may name either side; it is swapped into canonical position
    /// when needed.
    pub fn new(n: usize, block: &[usize]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSubsystems(format!(
                "bipartition needs at least 2 subsystems, got {n}"
            )));
        }
        let mut a: Vec<usize> = block.to_vec();
        a.sort_unstable();
        a.dedup();
        if a.len() != block.len() {
            return Err(Error::InvalidSubsystems("repeated subsystem index".into()));
        }
        if let Some(&k) = a.iter().find(|&&k| k >= n) {
            return Err(Error::InvalidSubsystems(format!(
                "index {k} out of range for {n} subsystems"
            )));
        }
        if a.is_empty() || a.len() == n {
            return Err(Error::InvalidSubsystems(
                "block must be a nonempty proper subset".into(),
            ));
        }
        let b: Vec<usize> = (0..n).filter(|k| !a.contains(k)).collect();
        let swap = 2 * a.len() > n || (2 * a.len() == n && a[0] != 0);
        let (block_a, block_b) = if swap { (b, a) } else { (a, b) };
        Ok(Self { n, block_a, block_b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_a(&self) -> &[usize] {
        &self.block_a
    }

    pub fn block_b(&self) -> &[usize] {
        &self.block_b
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}|{{{}}}", side(&self.block_a), side(&self.block_b))
    }
}

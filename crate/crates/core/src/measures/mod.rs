//! Entanglement measures.
//!
//! Bipartite measures act on one [`Bipartition`]; multipartite measures are
//! built from the spectra of every canonical cut.

mod bipartite;
mod multipartite;

use std::fmt;
use std::str::FromStr;

pub use bipartite::{
    bip_concurrence, closest_maximally_entangled, concurrence_from_spectrum, gm, gm_from_spectrum,
    product_distance, sgm, sgm_from_spectrum, sgm_via_bures,
};
pub use multipartite::{
    bipartition_count, bipartitions, concurrence_fill, concurrence_fill_report, cut_spectra,
    gbc, geometric_mean, ggm, gmc, gms,
};

use crate::registers::{Bipartition, PureState};
use crate::spectra::{schmidt, von_neumann_entropy};
use crate::{Error, Result};

/// A named measure value with optional per-cut breakdown and witness state.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub name: String,
    pub value: f64,
    pub per_bipartition: Option<Vec<(Bipartition, f64)>>,
    pub witness: Option<PureState>,
}

impl MeasureReport {
    pub fn scalar(name: &str, value: f64) -> Self {
        Self {
            name: name.to_string(),
            value,
            per_bipartition: None,
            witness: None,
        }
    }

    pub fn with_cuts(name: &str, value: f64, cuts: Vec<(Bipartition, f64)>) -> Self {
        Self {
            name: name.to_string(),
            value,
            per_bipartition: Some(cuts),
            witness: None,
        }
    }
}

/// Full SGM report on one cut, with the closest maximally entangled state as
/// witness.
pub fn sgm_report(state: &PureState, bp: &Bipartition) -> Result<MeasureReport> {
    let value = sgm(state, bp)?;
    let witness = closest_maximally_entangled(state, bp)?;
    Ok(MeasureReport {
        name: "sgm".into(),
        value,
        per_bipartition: Some(vec![(bp.clone(), value)]),
        witness: Some(witness),
    })
}

/// Measures selectable by name from the CLI and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Sgm,
    SgmBures,
    Gm,
    Concurrence,
    Entropy,
    Gms,
    Gbc,
    Ggm,
    Gmc,
    Fill,
}

impl Measure {
    pub const ALL: [Measure; 10] = [
        Measure::Sgm,
        Measure::SgmBures,
        Measure::Gm,
        Measure::Concurrence,
        Measure::Entropy,
        Measure::Gms,
        Measure::Gbc,
        Measure::Ggm,
        Measure::Gmc,
        Measure::Fill,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Sgm => "sgm",
            Measure::SgmBures => "sgm_bures",
            Measure::Gm => "gm",
            Measure::Concurrence => "concurrence",
            Measure::Entropy => "entropy",
            Measure::Gms => "gms",
            Measure::Gbc => "gbc",
            Measure::Ggm => "ggm",
            Measure::Gmc => "gmc",
            Measure::Fill => "fill",
        }
    }

    /// True for measures defined on a single cut.
    pub fn is_bipartite(self) -> bool {
        matches!(
            self,
            Measure::Sgm | Measure::SgmBures | Measure::Gm | Measure::Concurrence | Measure::Entropy
        )
    }

    /// Value of a bipartite measure on one cut.
    pub fn on_cut(self, state: &PureState, bp: &Bipartition) -> Result<f64> {
        match self {
            Measure::Sgm => sgm(state, bp),
            Measure::SgmBures => sgm_via_bures(state, bp),
            Measure::Gm => gm(state, bp),
            Measure::Concurrence => bip_concurrence(state, bp),
            Measure::Entropy => Ok(von_neumann_entropy(&schmidt(state, bp)?.spectrum)),
            _ => Err(Error::InvalidSubsystems(format!(
                "{} is not a bipartite measure",
                self.name()
            ))),
        }
    }

    /// Scalar value on a state. Bipartite measures need `cut` unless the
    /// state is bipartite, in which case the single cut is used.
    pub fn value(self, state: &PureState, cut: Option<&Bipartition>) -> Result<f64> {
        Ok(self.evaluate(state, cut)?.value)
    }

    /// Evaluates into a report.
    ///
    /// Bipartite measures without an explicit `cut` on an `n > 2` register
    /// are evaluated on every canonical cut; the report value is then the
    /// one for the first cut and the full list sits in `per_bipartition`.
    pub fn evaluate(self, state: &PureState, cut: Option<&Bipartition>) -> Result<MeasureReport> {
        match self {
            Measure::Gms => gms(state),
            Measure::Gbc => gbc(state),
            Measure::Ggm => ggm(state),
            Measure::Gmc => gmc(state),
            Measure::Fill => concurrence_fill_report(state),
            Measure::Sgm => match cut {
                Some(bp) => sgm_report(state, bp),
                None => self.all_cuts(state),
            },
            _ => match cut {
                Some(bp) => {
                    let v = self.on_cut(state, bp)?;
                    Ok(MeasureReport::with_cuts(self.name(), v, vec![(bp.clone(), v)]))
                }
                None => self.all_cuts(state),
            },
        }
    }

    fn all_cuts(self, state: &PureState) -> Result<MeasureReport> {
        let cuts: Vec<(Bipartition, f64)> = bipartitions(state.num_subsystems())?
            .into_iter()
            .map(|bp| {
                let v = self.on_cut(state, &bp)?;
                Ok((bp, v))
            })
            .collect::<Result<_>>()?;
        let value = cuts[0].1;
        let mut report = MeasureReport::with_cuts(self.name(), value, cuts);
        if self == Measure::Sgm && state.num_subsystems() == 2 {
            let bp = Bipartition::new(2, &[0])?;
            report.witness = Some(closest_maximally_entangled(state, &bp)?);
        }
        Ok(report)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == lower)
            .ok_or_else(|| {
                let names: Vec<&str> = Measure::ALL.iter().map(|m| m.name()).collect();
                format!("unknown measure {s:?} (expected one of {})", names.join(", "))
            })
    }
}

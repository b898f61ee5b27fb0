//! Plain-text state files.
//!
//! ```text
//! # comment lines start with '#'
//! 2 2 2
//! 0.0 0.0
//! 0.57735026918962573 0.0
//! ...
//! ```
//!
//! The first non-comment line lists the local dimensions; each following
//! line holds `re im` for one amplitude in basis-index order. Values are
//! written with 17 significant digits so that a write/read cycle is exact.

use std::fmt::Write as _;
use std::path::Path;

use crate::registers::{PureState, SubsystemDims};
use crate::{Error, Result, C64};

pub fn parse_state(text: &str) -> Result<PureState> {
    let mut dims: Option<(usize, SubsystemDims)> = None;
    let mut amps = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        match &dims {
            None => {
                let parsed: Vec<usize> = line
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| err(format!("bad dimension {t:?}: {e}"))))
                    .collect::<Result<_>>()?;
                let d = SubsystemDims::new(parsed).map_err(|e| err(e.to_string()))?;
                dims = Some((line_no, d));
            }
            Some(_) => {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() != 2 {
                    return Err(err(format!("expected `re im`, found {} fields", fields.len())));
                }
                let num = |t: &str| {
                    t.parse::<f64>()
                        .ok()
                        .filter(|v| v.is_finite())
                        .ok_or_else(|| err(format!("bad number {t:?}")))
                };
                amps.push(C64::new(num(fields[0])?, num(fields[1])?));
            }
        }
    }
    let (dims_line, dims) = dims.ok_or(Error::Parse {
        line: last_line.max(1),
        msg: "missing dimension line".into(),
    })?;
    PureState::new(dims, amps).map_err(|e| Error::Parse {
        line: dims_line,
        msg: e.to_string(),
    })
}

pub fn format_state(state: &PureState) -> String {
    let mut out = String::new();
    let dims: Vec<String> = state.dims().as_slice().iter().map(|d| d.to_string()).collect();
    out.push_str(&dims.join(" "));
    out.push('\n');
    for a in state.amplitudes().iter() {
        writeln!(out, "{:.16e} {:.16e}", a.re, a.im).expect("writing to a String");
    }
    out
}

pub fn read_state_file(path: &Path) -> std::io::Result<Result<PureState>> {
    Ok(parse_state(&std::fs::read_to_string(path)?))
}

pub fn write_state_file(path: &Path, state: &PureState) -> std::io::Result<()> {
    std::fs::write(path, format_state(state))
}

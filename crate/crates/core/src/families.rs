//! Named model families.

use crate::{Error, Result, SimplicialComplex};

fn require(family: &'static str, m: usize, min: usize) -> Result<()> {
    if m < min {
        return Err(Error::FamilyTooSmall { family, min, m });
    }
    Ok(())
}

/// The m-cycle `[12][23]...[(m-1)m][m1]`.
pub fn cyclic(m: usize) -> Result<SimplicialComplex> {
    require("cyclic", m, 3)?;
    SimplicialComplex::from_facets(m, (1..=m).map(|i| [i, i % m + 1]))
}

/// Singletons only: the independence model.
pub fn main_effect(m: usize) -> Result<SimplicialComplex> {
    require("main-effect", m, 1)?;
    SimplicialComplex::from_facets(m, (1..=m).map(|i| [i]))
}

/// The full simplex `2^[m]`.
pub fn saturated(m: usize) -> Result<SimplicialComplex> {
    require("saturated", m, 1)?;
    SimplicialComplex::from_facets(m, [(1..=m).collect::<Vec<_>>()])
}

/// All `(m-1)`-subsets of `[m]`: every interaction except the top one.
pub fn simplex_boundary(m: usize) -> Result<SimplicialComplex> {
    require("simplex-boundary", m, 2)?;
    SimplicialComplex::from_facets(
        m,
        (1..=m).map(|skip| (1..=m).filter(|&v| v != skip).collect::<Vec<_>>()),
    )
}

/// Looks a family up by its CLI name.
pub fn by_name(name: &str, m: usize) -> Option<Result<SimplicialComplex>> {
    Some(match name {
        "cyclic" => cyclic(m),
        "main-effect" => main_effect(m),
        "saturated" => saturated(m),
        "simplex-boundary" | "boundary" => simplex_boundary(m),
        _ => return None,
    })
}

pub const NAMES: &[&str] = &["cyclic", "main-effect", "saturated", "simplex-boundary"];

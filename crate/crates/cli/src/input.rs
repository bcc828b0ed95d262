//! Loading presentations and resolving characters.

use std::path::Path;

use hopf_cyclic::hopf::presentation::parse_hopf;
use hopf_cyclic::symbolic::{parse_lie, Envelope, LieAlgebra, LieCharacter};
use hopf_cyclic::{Character, Error, FiniteHopf, Result, Scalar};

pub enum Input {
    Finite(FiniteHopf),
    /// A Lie algebra, standing for its enveloping algebra.
    Lie(LieAlgebra),
}

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Lie presentations are recognized by their `brackets` key.
pub fn load(path: &Path) -> Result<Input> {
    let text = read(path)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    if value.get("brackets").is_some() {
        parse_lie(&text).map(Input::Lie)
    } else {
        parse_hopf(&text).map(Input::Finite)
    }
}

pub fn finite_character(h: &FiniteHopf, name: &str) -> Result<Character> {
    h.character(name)
}

/// `epsilon` is zero on generators; `delta` and `modular` give the
/// adjoint-trace character.
pub fn lie_character(u: &Envelope, name: &str) -> Result<LieCharacter> {
    match name {
        "epsilon" => u.character(vec![Scalar::zero(); u.n()]),
        "delta" | "modular" => Ok(u.modular_character()),
        _ => Err(Error::InvalidCharacter(format!("no character named {name:?} (expected epsilon or delta)"))),
    }
}

//! JSON file formats shared by the CLI and the Python bindings.
//!
//! Matroids: `{"n": 7, "bases": [[0,1,2], ...]}` or
//! `{"n": 6, "circuits": [[0,5], ...]}` or
//! `{"n": 7, "d": 2, "t": 3, "blocks": [[0,1,2], ...]}` (Steiner system).
//! Ideals: `{"n": 6, "generators": [[1,0,0,0,0,1], ...]}` (exponent vectors).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::SubsetFamily;
use crate::ideal::MonomialIdeal;
use crate::matroid::Matroid;
use crate::monomial::Monomial;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatroidFile {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CircuitsFile {
    pub n: usize,
    pub circuits: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SteinerFile {
    pub n: usize,
    pub d: usize,
    pub t: usize,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl MatroidFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        Matroid::from_bases(self.n, &SubsetFamily::from_index_lists(self.n, &self.bases)?)
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        MatroidFile { n: m.n(), bases: m.bases().to_index_lists() }
    }
}

impl CircuitsFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        Matroid::from_circuits(self.n, &SubsetFamily::from_index_lists(self.n, &self.circuits)?)
    }
}

impl SteinerFile {
    pub fn to_matroid(&self) -> Result<Matroid> {
        Matroid::steiner(
            self.n,
            self.d,
            self.t,
            &SubsetFamily::from_index_lists(self.n, &self.blocks)?,
        )
    }
}

impl IdealFile {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .generators
            .iter()
            .map(|e| {
                if e.len() != self.n {
                    return Err(Error::MixedAmbient(self.n, e.len()));
                }
                Ok(Monomial::from_exponents(e.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::from_generators(self.n, gens)
    }

    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        IdealFile {
            n: ideal.n(),
            generators: ideal.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

/// Parses any of the three matroid formats from a JSON string.
pub fn matroid_from_json(json: &str) -> Result<Matroid> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum AnyMatroid {
        Steiner(SteinerFile),
        Bases(MatroidFile),
        Circuits(CircuitsFile),
    }
    let parsed: AnyMatroid =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("matroid JSON: {e}")))?;
    match parsed {
        AnyMatroid::Bases(f) => f.to_matroid(),
        AnyMatroid::Circuits(f) => f.to_matroid(),
        AnyMatroid::Steiner(f) => f.to_matroid(),
    }
}

pub fn ideal_from_json(json: &str) -> Result<MonomialIdeal> {
    let parsed: IdealFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(format!("ideal JSON: {e}")))?;
    parsed.to_ideal()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matroid_json_variants() {
        let m = matroid_from_json(r#"{"n": 3, "bases": [[0,1],[0,2],[1,2]]}"#).unwrap();
        assert_eq!(m, Matroid::uniform(3, 2).unwrap());
        let c = matroid_from_json(r#"{"n": 6, "circuits": [[0,5],[2,3],[1,3,4],[1,2,4]]}"#).unwrap();
        assert_eq!(c.rank(), 3);
        let s = matroid_from_json(
            r#"{"n":7,"d":2,"t":3,"blocks":[[0,1,2],[0,3,6],[0,4,5],[1,3,5],[1,4,6],[2,3,4],[2,5,6]]}"#,
        )
        .unwrap();
        assert_eq!(s.num_bases(), 28);
        assert!(matroid_from_json(r#"{"n": 3}"#).is_err());
    }

    #[test]
    fn ideal_json_round_trip() {
        let src = r#"{"n": 6, "generators": [[1,0,0,0,0,1],[0,0,1,1,0,0]]}"#;
        let ideal = ideal_from_json(src).unwrap();
        assert_eq!(ideal.mu(), 2);
        let back = serde_json::to_string(&IdealFile::from_ideal(&ideal)).unwrap();
        let again = ideal_from_json(&back).unwrap();
        assert_eq!(ideal, again);
    }
}

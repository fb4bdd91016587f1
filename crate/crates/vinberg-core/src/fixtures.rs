//! Table data transcribed case by case: orbit tables, containment diagrams,
//! Hilbert numerators and degrees, singularity flags, printed complexes and
//! invariant degrees.  Stored as human-auditable TOML, one file per case,
//! embedded at build time; VINBERG_FIXTURE_DIR overrides the location at
//! run time.

use serde::Deserialize;
use std::collections::HashMap;

#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub id: String,
    #[serde(default)]
    pub source: String,
    #[serde(default)]
    pub orbits: Vec<FixtureOrbit>,
    /// cover relations of the containment diagram, as printed
    #[serde(default)]
    pub hasse: Vec<Vec<usize>>,
    /// logged inconsistencies in the printed tables
    #[serde(default)]
    pub conflicts: Vec<Conflict>,
    #[serde(default)]
    pub complexes: Vec<FixtureComplex>,
    pub disc: Option<DiscFixture>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FixtureOrbit {
    pub i: usize,
    pub stype: Option<String>,
    pub dim: usize,
    /// representative as weight labels ("123", "1;12", "-")
    #[serde(default)]
    pub rep: Vec<String>,
    /// representative as root coefficient vectors
    #[serde(default)]
    pub rep_roots: Vec<Vec<i64>>,
    /// signs for the representative terms when not all +1
    #[serde(default)]
    pub rep_signs: Vec<i64>,
    /// degree-one roots of the support when they exceed the representative
    /// terms (non-principal supports), as labels or coefficient vectors
    #[serde(default)]
    pub support: Vec<String>,
    #[serde(default)]
    pub support_roots: Vec<Vec<i64>>,
    pub degree: Option<i64>,
    /// Hilbert numerator, ascending coefficients
    #[serde(default)]
    pub numerator: Vec<i64>,
    /// spherical / normal / Cohen-Macaulay / rational singularities /
    /// Gorenstein, each "yes" or "no"
    #[serde(default)]
    pub sing: Vec<String>,
    /// the same flags for the normalization when listed separately
    #[serde(default)]
    pub sing_norm: Vec<String>,
}

impl FixtureOrbit {
    pub fn is_normal(&self) -> Option<bool> {
        self.sing.get(1).map(|s| s == "yes")
    }
    pub fn is_gorenstein(&self) -> Option<bool> {
        self.sing.get(4).map(|s| s == "yes")
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Conflict {
    pub kind: String,
    pub orbit: Option<usize>,
    pub note: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct FixtureComplex {
    pub orbit: usize,
    #[serde(default)]
    pub name: String,
    /// whether the printed complex resolves the normalization (or the
    /// coordinate ring itself)
    #[serde(default)]
    pub normalization: bool,
    /// terms[i] = summands of F_i as (weight string, internal degree)
    pub terms: Vec<Vec<(String, i64)>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct DiscFixture {
    /// index of the hyperdiscriminant orbit
    pub orbit: usize,
    /// degree of the defining invariant, when the dual is a hypersurface
    pub degree: Option<i64>,
}

static EMBEDDED: &[(&str, &str)] = &[
    ("E6.1", include_str!("../fixtures/e6_1.toml")),
    ("E6.2", include_str!("../fixtures/e6_2.toml")),
    ("E6.3", include_str!("../fixtures/e6_3.toml")),
    ("E6.4", include_str!("../fixtures/e6_4.toml")),
    ("F4.1", include_str!("../fixtures/f4_1.toml")),
    ("F4.2", include_str!("../fixtures/f4_2.toml")),
    ("F4.3", include_str!("../fixtures/f4_3.toml")),
    ("F4.4", include_str!("../fixtures/f4_4.toml")),
    ("G2.1", include_str!("../fixtures/g2_1.toml")),
    ("G2.2", include_str!("../fixtures/g2_2.toml")),
];

/// Load the fixture for one case.  When VINBERG_FIXTURE_DIR is set, files
/// named like `e6_2.toml` in that directory take precedence.
pub fn load(case: &str) -> Result<Fixture, String> {
    #[cfg(not(target_arch = "wasm32"))]
    if let Ok(dir) = std::env::var("VINBERG_FIXTURE_DIR") {
        let name = case.to_lowercase().replace('.', "_") + ".toml";
        let path = std::path::Path::new(&dir).join(name);
        if path.exists() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            return parse(&text);
        }
    }
    let text = EMBEDDED
        .iter()
        .find(|(id, _)| *id == case)
        .map(|(_, t)| *t)
        .ok_or_else(|| format!("no fixture for case {case}"))?;
    parse(text)
}

fn parse(text: &str) -> Result<Fixture, String> {
    toml::from_str(text).map_err(|e| e.to_string())
}

pub fn load_all() -> HashMap<String, Fixture> {
    EMBEDDED
        .iter()
        .map(|(id, _)| (id.to_string(), load(id).unwrap()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        let all = load_all();
        assert_eq!(all.len(), 10);
        // orbit counts as printed
        let counts: Vec<(&str, usize)> = vec![
            ("E6.1", 3),
            ("E6.2", 5),
            ("E6.3", 8),
            ("E6.4", 18),
            ("F4.1", 5),
            ("F4.2", 11),
            ("F4.3", 3),
            ("F4.4", 3),
            ("G2.1", 2),
            ("G2.2", 4),
        ];
        for (id, n) in counts {
            assert_eq!(all[id].orbits.len(), n, "{id}");
        }
    }

    #[test]
    fn degrees_equal_numerator_at_one() {
        for (id, fx) in load_all() {
            for o in &fx.orbits {
                if let (Some(deg), false) = (o.degree, o.numerator.is_empty()) {
                    let at_one: i64 = o.numerator.iter().sum();
                    assert_eq!(at_one, deg, "{id} orbit {}", o.i);
                }
            }
        }
    }

    #[test]
    fn hasse_respects_dimensions() {
        for (id, fx) in load_all() {
            let dim: HashMap<usize, usize> =
                fx.orbits.iter().map(|o| (o.i, o.dim)).collect();
            for e in &fx.hasse {
                assert_eq!(e.len(), 2, "{id}");
                assert!(dim[&e[0]] < dim[&e[1]], "{id} edge {:?}", e);
            }
        }
    }
}

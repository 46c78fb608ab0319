//! Pinned verification parameters for the catalog families.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::verify::VerifyParams;

const MANIFEST: &str = include_str!("../data/verify-manifest.json");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub family: String,
    pub params: VerifyParams,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Manifest {
    families: Vec<ManifestEntry>,
}

/// Entries in catalog order.
pub fn entries() -> Vec<ManifestEntry> {
    serde_json::from_str::<Manifest>(MANIFEST).expect("bundled manifest is valid").families
}

pub fn params_for(family: &str) -> Result<VerifyParams> {
    entries()
        .into_iter()
        .find(|e| e.family == family)
        .map(|e| e.params)
        .ok_or_else(|| Error::Argument(format!("no pinned parameters for `{family}`; pass --horizon and --n-max")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::CATALOG;

    #[test]
    fn manifest_covers_catalog_in_order() {
        let names: Vec<String> = entries().into_iter().map(|e| e.family).collect();
        assert_eq!(names, CATALOG);
        for e in entries() {
            assert!(e.params.n_max <= e.params.horizon / 4, "{}", e.family);
        }
    }
}

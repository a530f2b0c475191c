//! Named subset-family strategies selectable at run time.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use crate::ecodim::flacets;
use crate::error::{Error, Result};
use crate::family::SubsetFamily;
use crate::io::family_from_value;
use crate::matroid::Matroid;
use crate::positroid::interval_family;

/// A rule producing the family `F` over which `ec_F` is evaluated.
pub trait FamilyStrategy: Send + Sync {
    fn name(&self) -> &str;
    fn description(&self) -> &str;
    fn family(&self, m: &Matroid) -> Result<SubsetFamily>;
}

struct PowerSet;

impl FamilyStrategy for PowerSet {
    fn name(&self) -> &str {
        "powerset"
    }
    fn description(&self) -> &str {
        "every subset of the ground set"
    }
    fn family(&self, m: &Matroid) -> Result<SubsetFamily> {
        Ok(SubsetFamily::power_set(m.n()))
    }
}

struct Flacets;

impl FamilyStrategy for Flacets {
    fn name(&self) -> &str {
        "flacets"
    }
    fn description(&self) -> &str {
        "nonempty S with M|S and M/S connected"
    }
    fn family(&self, m: &Matroid) -> Result<SubsetFamily> {
        Ok(flacets(m))
    }
}

struct Intervals;

impl FamilyStrategy for Intervals {
    fn name(&self) -> &str {
        "intervals"
    }
    fn description(&self) -> &str {
        "cyclic intervals of 1..n, with the empty set"
    }
    fn family(&self, m: &Matroid) -> Result<SubsetFamily> {
        Ok(interval_family(m.n()))
    }
}

/// `file:<path>`: a `{"sets": [...]}` document.
struct FromFile {
    label: String,
    path: PathBuf,
}

impl FamilyStrategy for FromFile {
    fn name(&self) -> &str {
        &self.label
    }
    fn description(&self) -> &str {
        "sets listed in a JSON file"
    }
    fn family(&self, m: &Matroid) -> Result<SubsetFamily> {
        let text = std::fs::read_to_string(&self.path)?;
        family_from_value(m.n(), &serde_json::from_str(&text)?)
    }
}

/// Strategies by name. `file:<path>` is resolved on lookup.
#[derive(Clone)]
pub struct FamilyRegistry {
    entries: BTreeMap<String, Arc<dyn FamilyStrategy>>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut r = FamilyRegistry {
            entries: BTreeMap::new(),
        };
        r.register(Arc::new(PowerSet));
        r.register(Arc::new(Flacets));
        r.register(Arc::new(Intervals));
        r
    }
}

impl FamilyRegistry {
    pub fn register(&mut self, s: Arc<dyn FamilyStrategy>) {
        self.entries.insert(s.name().to_string(), s);
    }

    pub fn get(&self, name: &str) -> Result<Arc<dyn FamilyStrategy>> {
        if let Some(path) = name.strip_prefix("file:") {
            return Ok(Arc::new(FromFile {
                label: name.to_string(),
                path: PathBuf::from(path),
            }));
        }
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: name.to_string(),
            })
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.keys().map(String::as_str).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ecodim::ec_with;
    use num_bigint::BigInt;

    #[test]
    fn builtin_strategies() {
        let reg = FamilyRegistry::default();
        assert_eq!(reg.names(), vec!["flacets", "intervals", "powerset"]);
        let sq = catalog::square();
        for name in reg.names() {
            let f = reg.get(name).unwrap().family(&sq).unwrap();
            assert_eq!(ec_with(&sq, &f), BigInt::from(4), "{name}");
        }
        assert!(matches!(reg.get("lines"), Err(Error::Unknown { .. })));
    }

    #[test]
    fn file_strategy() {
        let dir = std::env::temp_dir().join(format!("ecodim-family-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("lines.json");
        std::fs::write(
            &path,
            r#"{"sets": [[1,2,3],[3,4,5],[5,6,7],[7,8,1],[1,2,3,4,5,6,7,8]]}"#,
        )
        .unwrap();
        let reg = FamilyRegistry::default();
        let s = reg.get(&format!("file:{}", path.display())).unwrap();
        let f = s.family(&catalog::square()).unwrap();
        assert_eq!(f.len(), 5);
        assert_eq!(ec_with(&catalog::square(), &f), BigInt::from(4));
        assert!(reg
            .get("file:/nonexistent/x.json")
            .unwrap()
            .family(&catalog::square())
            .is_err());
        std::fs::remove_dir_all(dir).ok();
    }
}

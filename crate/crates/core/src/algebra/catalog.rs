use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use super::{enumerate_algebras, AlgebraDoc, AlgebraError, FiniteAlgebra};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("catalog is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("catalog entry {name}: {source}")]
    Algebra { name: String, source: AlgebraError },
    #[error("catalog contains {0} twice")]
    DuplicateName(String),
}

/// An ordered, name-indexed list of validated algebras.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    algebras: Vec<FiniteAlgebra>,
}

const BUNDLED: &str = include_str!("../../data/catalog.json");

impl Catalog {
    pub fn new(algebras: Vec<FiniteAlgebra>) -> Result<Catalog, CatalogError> {
        for (i, a) in algebras.iter().enumerate() {
            if algebras[..i].iter().any(|b| b.name() == a.name()) {
                return Err(CatalogError::DuplicateName(a.name().to_string()));
            }
        }
        Ok(Catalog { algebras })
    }

    /// Parses a JSON array of algebra documents.
    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let docs: Vec<AlgebraDoc> = serde_json::from_str(text)?;
        let algebras = docs
            .iter()
            .map(|d| d.load().map_err(|source| CatalogError::Algebra { name: d.name.clone(), source }))
            .collect::<Result<_, _>>()?;
        Catalog::new(algebras)
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CatalogError::Io { path: path.display().to_string(), source })?;
        Catalog::from_json(&text)
    }

    pub fn get(&self, name: &str) -> Option<&FiniteAlgebra> {
        self.algebras.iter().find(|a| a.name() == name)
    }

    pub fn algebras(&self) -> &[FiniteAlgebra] {
        &self.algebras
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FiniteAlgebra> {
        self.algebras.iter()
    }

    pub fn len(&self) -> usize {
        self.algebras.len()
    }

    pub fn is_empty(&self) -> bool {
        self.algebras.is_empty()
    }

    pub fn to_json(&self) -> String {
        let docs: Vec<AlgebraDoc> = self.algebras.iter().map(AlgebraDoc::from).collect();
        serde_json::to_string_pretty(&docs).expect("documents serialize")
    }
}

impl<'a> IntoIterator for &'a Catalog {
    type Item = &'a FiniteAlgebra;
    type IntoIter = std::slice::Iter<'a, FiniteAlgebra>;

    fn into_iter(self) -> Self::IntoIter {
        self.algebras.iter()
    }
}

/// The shipped catalog: the 3-chain, the diamond, the six-element algebra
/// `fig1` (0 < c < a,b < d < 1) and its subreduct `fig1sub` generated by
/// `a, b`.
pub fn bundled_catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::from_json(BUNDLED).expect("bundled catalog is valid"))
}

const CACHED_SIZE: usize = 8;

/// All Heyting algebras with at most `max_size` elements, in enumeration
/// order. Sizes up to 8 are computed once and shared.
pub fn heyting_catalog(max_size: usize) -> Vec<FiniteAlgebra> {
    static ALL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    if max_size > CACHED_SIZE {
        return enumerate_algebras(max_size);
    }
    ALL.get_or_init(|| enumerate_algebras(CACHED_SIZE)).iter().filter(|a| a.size() <= max_size).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_entries() {
        let cat = bundled_catalog();
        let names: Vec<&str> = cat.iter().map(|a| a.name()).collect();
        assert_eq!(names, ["chain3", "diamond", "fig1", "fig1sub"]);
        let fig1 = cat.get("fig1").unwrap();
        assert_eq!(fig1.labels(), ["0", "a", "b", "c", "d", "1"]);
        let l = |s| fig1.element_by_label(s).unwrap();
        assert_eq!(fig1.meet(l("a"), l("b")), l("c"));
        assert_eq!(fig1.join(l("a"), l("b")), l("d"));
        assert_eq!(cat.get("fig1sub").unwrap().zero(), Some(0));
        assert_eq!(Catalog::from_json(&cat.to_json()).unwrap(), *cat);
    }

    #[test]
    fn duplicate_and_bad_entries() {
        let one = bundled_catalog().get("chain3").unwrap().clone();
        assert!(matches!(Catalog::new(vec![one.clone(), one]), Err(CatalogError::DuplicateName(_))));
        let bad = BUNDLED.replacen("[[2, 2, 2], [0, 2, 2], [0, 1, 2]]", "[[2, 2, 2], [2, 2, 2], [0, 1, 2]]", 1);
        assert!(matches!(Catalog::from_json(&bad), Err(CatalogError::Algebra { .. })));
    }

    #[test]
    fn heyting_catalog_is_prefix_of_enumeration() {
        assert_eq!(heyting_catalog(6), enumerate_algebras(6));
        assert_eq!(heyting_catalog(6).len(), 13);
    }
}

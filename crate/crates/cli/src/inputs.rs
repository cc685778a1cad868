//! Turning command-line strings into formulas, rules, algebras and specs.

use std::path::Path;

use brouwer::algebra::{bundled_catalog, heyting_catalog, AlgebraDoc, Catalog, Elem};
use brouwer::formula::RuleDoc;
use brouwer::variety::VarietySpec;
use brouwer::{FiniteAlgebra, Formula, MRule, Substitution, Valuation};

/// A problem with the user's data (exit code 65).
#[derive(Debug)]
pub struct DataError(pub String);

impl<E: std::fmt::Display> From<E> for DataError {
    fn from(e: E) -> Self {
        DataError(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, DataError>;

pub fn formula(text: &str) -> Result<Formula> {
    text.parse().map_err(|e| DataError(format!("formula '{text}': {e}")))
}

pub fn formulas(texts: &[String]) -> Result<Vec<Formula>> {
    texts.iter().map(|t| formula(t)).collect()
}

pub fn substitution(text: &str) -> Result<Substitution> {
    text.parse().map_err(|e| DataError(format!("substitution '{text}': {e}")))
}

/// Inline rule syntax, or a JSON rule file.
pub fn rule(text: &str) -> Result<MRule> {
    let path = Path::new(text);
    if text.ends_with(".json") && path.is_file() {
        let doc: RuleDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return Ok(MRule::from_doc(&doc)?);
    }
    text.parse().map_err(|e| DataError(format!("rule '{text}': {e}")))
}

pub fn rules(texts: &[String]) -> Result<Vec<MRule>> {
    texts.iter().map(|t| rule(t)).collect()
}

/// The bundled catalog, or the file named by `BROUWER_CATALOG`.
pub fn catalog() -> Result<Catalog> {
    match std::env::var_os("BROUWER_CATALOG") {
        Some(path) => Catalog::load(Path::new(&path)).map_err(Into::into),
        None => Ok(bundled_catalog().clone()),
    }
}

/// An algebra by catalog name, enumerated name (`chain4`, `h6_2`, …), or
/// JSON file; a trailing `+` selects the Brouwerian reduct.
pub fn algebra(name: &str) -> Result<FiniteAlgebra> {
    if let Some(base) = name.strip_suffix('+') {
        return Ok(algebra(base)?.brouwerian_reduct());
    }
    if let Some(a) = catalog()?.get(name) {
        return Ok(a.clone());
    }
    if let Some(a) = heyting_catalog(8).into_iter().find(|a| a.name() == name) {
        return Ok(a);
    }
    let path = Path::new(name);
    if path.is_file() {
        let doc: AlgebraDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return Ok(doc.load()?);
    }
    Err(DataError(format!("unknown algebra '{name}' (not in the catalog, not enumerated, not a file)")))
}

/// Algebra list; `catalog` expands to the whole catalog; empty means all
/// Heyting algebras up to `max_size`.
pub fn family(names: &[String], max_size: usize) -> Result<Vec<FiniteAlgebra>> {
    if names.is_empty() {
        return Ok(heyting_catalog(max_size));
    }
    let mut out = Vec::new();
    for n in names {
        if n == "catalog" {
            out.extend(catalog()?.iter().cloned());
        } else {
            out.push(algebra(n)?);
        }
    }
    Ok(out)
}

/// An element by label, falling back to its index.
pub fn element(alg: &FiniteAlgebra, text: &str) -> Result<Elem> {
    if let Some(e) = alg.element_by_label(text) {
        return Ok(e);
    }
    match text.parse::<Elem>() {
        Ok(e) if e < alg.size() => Ok(e),
        _ => Err(DataError(format!("'{text}' is not an element of {}", alg.name()))),
    }
}

pub fn elements(alg: &FiniteAlgebra, texts: &[String]) -> Result<Vec<Elem>> {
    texts.iter().map(|t| element(alg, t)).collect()
}

/// `p=m,q=0` with element labels (or indices).
pub fn valuation(alg: &FiniteAlgebra, text: &str) -> Result<Valuation> {
    let mut v = Valuation::new();
    for part in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (var, value) =
            part.split_once('=').ok_or_else(|| DataError(format!("expected 'variable=element', found '{part}'")))?;
        v.set(var.trim(), element(alg, value.trim())?);
    }
    Ok(v)
}

/// A variety spec from a JSON file, or a bundled spec by name.
pub fn variety(name: &str) -> Result<VarietySpec> {
    let path = Path::new(name);
    if path.is_file() {
        return Ok(VarietySpec::load(path)?);
    }
    VarietySpec::bundled(name).map_err(Into::into)
}

pub fn axioms(list: &[String], variety_name: Option<&str>) -> Result<Vec<Formula>> {
    let mut out = formulas(list)?;
    if let Some(v) = variety_name {
        out.extend(variety(v)?.axioms);
    }
    Ok(out)
}

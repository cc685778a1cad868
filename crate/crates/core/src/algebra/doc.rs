use serde::{Deserialize, Serialize};

use super::{AlgebraError, Elem, FiniteAlgebra};

/// JSON document form of an algebra. Tables are nested rows indexed from 0;
/// `labels` is optional and defaults to the indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub size: usize,
    pub unit: Elem,
    pub zero: Option<Elem>,
    pub meet: Vec<Vec<Elem>>,
    pub join: Vec<Vec<Elem>>,
    pub imp: Vec<Vec<Elem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn flatten(rows: &[Vec<Elem>], size: usize, what: &str) -> Result<Vec<Elem>, AlgebraError> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(AlgebraError::Malformed(format!("{what} table is not {size}×{size}")));
    }
    Ok(rows.concat())
}

impl AlgebraDoc {
    /// Validates and converts; see [`FiniteAlgebra::validate`].
    pub fn load(&self) -> Result<FiniteAlgebra, AlgebraError> {
        FiniteAlgebra::from_tables(
            self.name.clone(),
            self.size,
            flatten(&self.meet, self.size, "meet")?,
            flatten(&self.join, self.size, "join")?,
            flatten(&self.imp, self.size, "imp")?,
            self.unit,
            self.zero,
            self.labels.clone().unwrap_or_default(),
        )
    }
}

impl From<&FiniteAlgebra> for AlgebraDoc {
    fn from(alg: &FiniteAlgebra) -> Self {
        let n = alg.size();
        let rows = |t: &[Elem]| t.chunks(n).map(<[Elem]>::to_vec).collect();
        let (meet, join, imp) = alg.tables();
        let default_labels = alg.labels().iter().enumerate().all(|(i, l)| *l == i.to_string());
        AlgebraDoc {
            name: alg.name().to_string(),
            size: n,
            unit: alg.unit(),
            zero: alg.zero(),
            meet: rows(meet),
            join: rows(join),
            imp: rows(imp),
            labels: (!default_labels).then(|| alg.labels().to_vec()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_algebras;
    use proptest::prelude::*;

    #[test]
    fn json_shape() {
        let doc = AlgebraDoc {
            name: "bool2".into(),
            size: 2,
            unit: 1,
            zero: Some(0),
            meet: vec![vec![0, 0], vec![0, 1]],
            join: vec![vec![0, 1], vec![1, 1]],
            imp: vec![vec![1, 1], vec![0, 1]],
            labels: None,
        };
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            json,
            r#"{"name":"bool2","size":2,"unit":1,"zero":0,"meet":[[0,0],[0,1]],"join":[[0,1],[1,1]],"imp":[[1,1],[0,1]]}"#
        );
        let alg = doc.load().unwrap();
        assert_eq!(AlgebraDoc::from(&alg), doc);
        let brouwerian: AlgebraDoc = serde_json::from_str(&json.replace(r#""zero":0"#, r#""zero":null"#)).unwrap();
        assert_eq!(brouwerian.load().unwrap().zero(), None);
    }

    #[test]
    fn ragged_tables_are_rejected() {
        let doc = AlgebraDoc {
            name: "x".into(),
            size: 2,
            unit: 1,
            zero: None,
            meet: vec![vec![0, 0], vec![0]],
            join: vec![vec![0, 1], vec![1, 1]],
            imp: vec![vec![1, 1], vec![0, 1]],
            labels: None,
        };
        assert!(matches!(doc.load(), Err(AlgebraError::Malformed(_))));
    }

    proptest! {
        #[test]
        fn documents_round_trip(i in 0usize..36) {
            let algebras = enumerate_algebras(8);
            let alg = &algebras[i % algebras.len()];
            let json = serde_json::to_string(&AlgebraDoc::from(alg)).unwrap();
            let back: AlgebraDoc = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(&back.load().unwrap(), alg);
        }
    }
}

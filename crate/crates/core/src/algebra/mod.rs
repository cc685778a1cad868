//! Finite Brouwerian and Heyting algebras given by operation tables.
//!
//! A [`FiniteAlgebra`] always carries `meet`, `join` and `imp` tables and a
//! unit. When `zero` is present the algebra is read as a Heyting algebra;
//! when absent it is the Brouwerian reduct on the same carrier. Every
//! constructor re-validates the lattice laws, distributivity and
//! residuation, so a value of this type is always a genuine algebra.

mod catalog;
mod doc;
mod enumerate;
mod eval;
mod ops;

use std::fmt;

use thiserror::Error;

pub use catalog::{bundled_catalog, heyting_catalog, Catalog, CatalogError};
pub use doc::AlgebraDoc;
pub use enumerate::{enumerate_algebras, Poset};
pub use eval::{EvalError, Validity, Valuation};
pub use ops::{
    adjoin_zero, find_b_embedding, generate_subreduct, generated_filter, is_b_embedding, kernel_filter,
    quotient_by_filter, Congruence, Filter, Quotient, Subreduct,
};

/// Index of an element of a finite algebra.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed algebra: {0}")]
    Malformed(String),
    #[error("lattice law '{law}' fails at ({a}, {b}, {c})")]
    LatticeViolation { law: &'static str, a: Elem, b: Elem, c: Elem },
    #[error("residuation fails at (a={a}, b={b}, x={x}): a∧x ≤ b does not match x ≤ a→b")]
    ResiduationViolation { a: Elem, b: Elem, x: Elem },
    #[error("unit {unit} is not the top element: {unit}∧{a} ≠ {a}")]
    BadUnit { unit: Elem, a: Elem },
    #[error("zero {zero} is not the bottom element: {zero}∧{a} ≠ {zero}")]
    BadZero { zero: Elem, a: Elem },
    #[error("the order is not a lattice: {a} and {b} have no {bound}")]
    NotALattice { a: Elem, b: Elem, bound: &'static str },
    #[error("set is not a filter: {reason}")]
    NotAFilter { reason: String },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteAlgebra {
    name: String,
    size: usize,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    imp: Vec<Elem>,
    unit: Elem,
    zero: Option<Elem>,
    labels: Vec<String>,
}

impl FiniteAlgebra {
    /// Builds an algebra from row-major `size × size` tables and validates it.
    /// Empty `labels` default to the element indices.
    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        name: impl Into<String>,
        size: usize,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        imp: Vec<Elem>,
        unit: Elem,
        zero: Option<Elem>,
        labels: Vec<String>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let labels = if labels.is_empty() { (0..size).map(|i| i.to_string()).collect() } else { labels };
        let alg = FiniteAlgebra { name: name.into(), size, meet, join, imp, unit, zero, labels };
        alg.validate()?;
        Ok(alg)
    }

    /// Builds the algebra of a finite partial order given by `leq`, computing
    /// meets, joins and relative pseudo-complements. With `heyting` set the
    /// least element becomes the zero.
    pub fn from_order(
        name: impl Into<String>,
        labels: Vec<String>,
        leq: impl Fn(Elem, Elem) -> bool,
        heyting: bool,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::Malformed("an algebra needs at least one element".into()));
        }
        let le: Vec<bool> = (0..n * n).map(|i| leq(i / n, i % n)).collect();
        let le = |a: Elem, b: Elem| le[a * n + b];
        // Greatest element of `cands` lying above every other candidate.
        let greatest = |cands: &[Elem]| cands.iter().copied().find(|&g| cands.iter().all(|&c| le(c, g)));
        let least = |cands: &[Elem]| cands.iter().copied().find(|&g| cands.iter().all(|&c| le(g, c)));
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<Elem> = (0..n).filter(|&x| le(x, a) && le(x, b)).collect();
                let upper: Vec<Elem> = (0..n).filter(|&x| le(a, x) && le(b, x)).collect();
                meet[a * n + b] = greatest(&lower).ok_or(AlgebraError::NotALattice { a, b, bound: "meet" })?;
                join[a * n + b] = least(&upper).ok_or(AlgebraError::NotALattice { a, b, bound: "join" })?;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let below: Vec<Elem> = (0..n).filter(|&x| le(meet[a * n + x], b)).collect();
                imp[a * n + b] =
                    greatest(&below).ok_or(AlgebraError::NotALattice { a, b, bound: "relative pseudo-complement" })?;
            }
        }
        let all: Vec<Elem> = (0..n).collect();
        let unit = greatest(&all).ok_or(AlgebraError::NotALattice { a: 0, b: 0, bound: "top" })?;
        let zero = if heyting {
            Some(least(&all).ok_or(AlgebraError::NotALattice { a: 0, b: 0, bound: "bottom" })?)
        } else {
            None
        };
        FiniteAlgebra::from_tables(name, n, meet, join, imp, unit, zero, labels)
    }

    /// Checks table shape, lattice laws, distributivity, unit/zero placement
    /// and residuation.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.size;
        if n == 0 {
            return Err(AlgebraError::Malformed("an algebra needs at least one element".into()));
        }
        for (table, name) in [(&self.meet, "meet"), (&self.join, "join"), (&self.imp, "imp")] {
            if table.len() != n * n {
                return Err(AlgebraError::Malformed(format!("{name} table is not {n}×{n}")));
            }
            if let Some(bad) = table.iter().find(|&&e| e >= n) {
                return Err(AlgebraError::Malformed(format!("{name} table entry {bad} out of range")));
            }
        }
        if self.unit >= n {
            return Err(AlgebraError::Malformed(format!("unit {} out of range", self.unit)));
        }
        if let Some(z) = self.zero.filter(|&z| z >= n) {
            return Err(AlgebraError::Malformed(format!("zero {z} out of range")));
        }
        if self.labels.len() != n {
            return Err(AlgebraError::Malformed(format!("expected {n} labels")));
        }
        let viol = |law, a, b, c| Err(AlgebraError::LatticeViolation { law, a, b, c });
        for a in 0..n {
            if self.meet(a, a) != a {
                return viol("meet idempotence", a, a, a);
            }
            if self.join(a, a) != a {
                return viol("join idempotence", a, a, a);
            }
            for b in 0..n {
                if self.meet(a, b) != self.meet(b, a) {
                    return viol("meet commutativity", a, b, b);
                }
                if self.join(a, b) != self.join(b, a) {
                    return viol("join commutativity", a, b, b);
                }
                if self.meet(a, self.join(a, b)) != a {
                    return viol("absorption a∧(a∨b)=a", a, b, b);
                }
                if self.join(a, self.meet(a, b)) != a {
                    return viol("absorption a∨(a∧b)=a", a, b, b);
                }
                for c in 0..n {
                    if self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c)) {
                        return viol("meet associativity", a, b, c);
                    }
                    if self.join(self.join(a, b), c) != self.join(a, self.join(b, c)) {
                        return viol("join associativity", a, b, c);
                    }
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return viol("distributivity", a, b, c);
                    }
                }
            }
        }
        for a in 0..n {
            if self.meet(a, self.unit) != a {
                return Err(AlgebraError::BadUnit { unit: self.unit, a });
            }
            if let Some(z) = self.zero {
                if self.meet(z, a) != z {
                    return Err(AlgebraError::BadZero { zero: z, a });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.imp(a, b);
                for x in 0..n {
                    if self.leq(self.meet(a, x), b) != self.leq(x, ab) {
                        return Err(AlgebraError::ResiduationViolation { a, b, x });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteAlgebra {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn is_heyting(&self) -> bool {
        self.zero.is_some()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn element_by_label(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size + b]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size + b]
    }

    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        self.imp[a * self.size + b]
    }

    /// The lattice order, read off the meet table.
    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == a
    }

    /// The least element of the lattice. Every finite lattice has one; for a
    /// Brouwerian view it is simply not a distinguished constant.
    pub fn least(&self) -> Elem {
        self.elements().fold(self.unit, |acc, e| self.meet(acc, e))
    }

    /// The same tables with the zero forgotten.
    pub fn brouwerian_reduct(&self) -> FiniteAlgebra {
        FiniteAlgebra { zero: None, name: format!("{}+", self.name), ..self.clone() }
    }

    /// The same tables with the least element marked as zero.
    pub fn as_heyting(&self) -> FiniteAlgebra {
        FiniteAlgebra { zero: Some(self.least()), ..self.clone() }
    }

    pub(crate) fn tables(&self) -> (&[Elem], &[Elem], &[Elem]) {
        (&self.meet, &self.join, &self.imp)
    }

    /// Mutates a single `imp` entry without re-validation. Test support for
    /// exercising the validator.
    #[doc(hidden)]
    pub fn corrupt_imp_entry(&mut self, a: Elem, b: Elem, value: Elem) {
        self.imp[a * self.size + b] = value;
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} elements, {})",
            self.name,
            self.size,
            if self.is_heyting() { "Heyting" } else { "Brouwerian" }
        )
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Elem, FiniteAlgebra};
use crate::formula::{Formula, MRule, Name, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("valuation does not assign variable {0}")]
    MissingVariable(Name),
    #[error("false cannot be evaluated in the zero-less algebra {0}")]
    BottomWithoutZero(String),
    #[error("element {0} is out of range")]
    BadElement(Elem),
}

/// Assignment of algebra elements to variables.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Valuation(BTreeMap<Name, Elem>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    pub fn set(&mut self, var: &str, e: Elem) {
        self.0.insert(Name::from(var), e);
    }

    pub fn get(&self, var: &str) -> Option<Elem> {
        self.0.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, Elem)> + '_ {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    /// Renders the valuation with the algebra's element labels.
    pub fn display_in<'a>(&'a self, alg: &'a FiniteAlgebra) -> impl fmt::Display + 'a {
        LabelledValuation { v: self, alg }
    }

    /// The same valuation with every element mapped through `map`.
    pub fn map(&self, map: &[Elem]) -> Valuation {
        Valuation(self.0.iter().map(|(k, &e)| (k.clone(), map[e])).collect())
    }
}

impl<'a> FromIterator<(&'a str, Elem)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (&'a str, Elem)>>(iter: I) -> Self {
        Valuation(iter.into_iter().map(|(k, e)| (Name::from(k), e)).collect())
    }
}

struct LabelledValuation<'a> {
    v: &'a Valuation,
    alg: &'a FiniteAlgebra,
}

impl fmt::Display for LabelledValuation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (var, e)) in self.v.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let label = self.alg.labels.get(*e).map_or("?", String::as_str);
            write!(f, "{var}={label}")?;
        }
        Ok(())
    }
}

/// Outcome of an exhaustive validity check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Validity {
    Valid,
    /// The first refuting valuation in canonical order.
    Refuted(Valuation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn refuter(&self) -> Option<&Valuation> {
        match self {
            Validity::Valid => None,
            Validity::Refuted(v) => Some(v),
        }
    }
}

#[derive(Clone, Copy)]
enum Op {
    Var(usize),
    Bottom,
    And,
    Or,
    Impl,
}

/// A formula flattened to postfix code over variable slots.
pub(crate) struct Program {
    code: Vec<Op>,
}

impl Program {
    pub(crate) fn compile(f: &Formula, vars: &VarSet) -> Program {
        let index: BTreeMap<&str, usize> = vars.iter().enumerate().map(|(i, v)| (&**v, i)).collect();
        let mut code = Vec::new();
        fn walk(f: &Formula, index: &BTreeMap<&str, usize>, code: &mut Vec<Op>) {
            match f {
                Formula::Var(n) => code.push(Op::Var(index[&**n])),
                Formula::Bottom => code.push(Op::Bottom),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(l, r) => {
                    walk(l, index, code);
                    walk(r, index, code);
                    code.push(match f {
                        Formula::And(..) => Op::And,
                        Formula::Or(..) => Op::Or,
                        _ => Op::Impl,
                    });
                }
            }
        }
        walk(f, &index, &mut code);
        Program { code }
    }

    #[inline]
    pub(crate) fn run(&self, alg: &FiniteAlgebra, slots: &[Elem], stack: &mut Vec<Elem>) -> Elem {
        stack.clear();
        let zero = alg.zero.unwrap_or(usize::MAX);
        for op in &self.code {
            match *op {
                Op::Var(i) => stack.push(slots[i]),
                Op::Bottom => stack.push(zero),
                Op::And | Op::Or | Op::Impl => {
                    let r = stack.pop().expect("well-formed code");
                    let l = stack.pop().expect("well-formed code");
                    stack.push(match op {
                        Op::And => alg.meet(l, r),
                        Op::Or => alg.join(l, r),
                        _ => alg.imp(l, r),
                    });
                }
            }
        }
        stack.pop().expect("well-formed code")
    }
}

/// Odometer over all assignments of `n` elements to `k` slots, first slot
/// most significant.
pub(crate) struct Assignments {
    slots: Vec<Elem>,
    n: usize,
    started: bool,
}

impl Assignments {
    pub(crate) fn new(k: usize, n: usize) -> Assignments {
        Assignments { slots: vec![0; k], n, started: false }
    }

    pub(crate) fn advance(&mut self) -> Option<&[Elem]> {
        if !self.started {
            self.started = true;
            return Some(&self.slots);
        }
        for i in (0..self.slots.len()).rev() {
            self.slots[i] += 1;
            if self.slots[i] < self.n {
                return Some(&self.slots);
            }
            self.slots[i] = 0;
        }
        None
    }
}

fn to_valuation(vars: &VarSet, slots: &[Elem]) -> Valuation {
    Valuation(vars.iter().cloned().zip(slots.iter().copied()).collect())
}

impl FiniteAlgebra {
    fn check_bottom<'a>(&self, mut formulas: impl Iterator<Item = &'a Formula>) -> Result<(), EvalError> {
        if self.zero.is_none() && formulas.any(|f| !f.is_positive()) {
            return Err(EvalError::BottomWithoutZero(self.name.clone()));
        }
        Ok(())
    }

    /// Evaluates `f` under `v` bottom-up through the tables.
    pub fn eval_formula(&self, v: &Valuation, f: &Formula) -> Result<Elem, EvalError> {
        Ok(match f {
            Formula::Var(n) => {
                let e = v.get(n).ok_or_else(|| EvalError::MissingVariable(n.clone()))?;
                if e >= self.size {
                    return Err(EvalError::BadElement(e));
                }
                e
            }
            Formula::Bottom => self.zero.ok_or_else(|| EvalError::BottomWithoutZero(self.name.clone()))?,
            Formula::And(l, r) => self.meet(self.eval_formula(v, l)?, self.eval_formula(v, r)?),
            Formula::Or(l, r) => self.join(self.eval_formula(v, l)?, self.eval_formula(v, r)?),
            Formula::Impl(l, r) => self.imp(self.eval_formula(v, l)?, self.eval_formula(v, r)?),
        })
    }

    /// Checks `f` under every valuation of its variables.
    pub fn validates_formula(&self, f: &Formula) -> Result<Validity, EvalError> {
        self.check_bottom(std::iter::once(f))?;
        let vars = f.free_vars();
        let prog = Program::compile(f, &vars);
        let mut stack = Vec::new();
        let mut odo = Assignments::new(vars.len(), self.size);
        while let Some(slots) = odo.advance() {
            if prog.run(self, slots, &mut stack) != self.unit {
                return Ok(Validity::Refuted(to_valuation(&vars, slots)));
            }
        }
        Ok(Validity::Valid)
    }

    /// A rule holds when every valuation sending all premises to the unit
    /// sends some conclusion to the unit. `∅/∅` therefore fails everywhere.
    pub fn validates_rule(&self, r: &MRule) -> Result<Validity, EvalError> {
        self.check_bottom(r.formulas())?;
        let vars = r.free_vars();
        let prems: Vec<Program> = r.premises().iter().map(|f| Program::compile(f, &vars)).collect();
        let concls: Vec<Program> = r.conclusions().iter().map(|f| Program::compile(f, &vars)).collect();
        let mut stack = Vec::new();
        let mut odo = Assignments::new(vars.len(), self.size);
        while let Some(slots) = odo.advance() {
            if prems.iter().all(|p| p.run(self, slots, &mut stack) == self.unit)
                && !concls.iter().any(|c| c.run(self, slots, &mut stack) == self.unit)
            {
                return Ok(Validity::Refuted(to_valuation(&vars, slots)));
            }
        }
        Ok(Validity::Valid)
    }

    /// True iff every rule in `rules` holds.
    pub fn validates_rules<'a>(&self, rules: impl IntoIterator<Item = &'a MRule>) -> Result<bool, EvalError> {
        for r in rules {
            if !self.validates_rule(r)?.is_valid() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

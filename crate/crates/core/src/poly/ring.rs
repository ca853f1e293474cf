use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{Error, Result};

/// The two supported monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Lexicographic: position 0 is the most significant variable.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrevLex => "grevlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(Error::InvalidArgument(format!(
                "unknown monomial order `{other}`"
            ))),
        }
    }
}

/// A polynomial ring `Q[v0, v1, ...]` together with its monomial order.
///
/// Declaration order fixes variable significance: `variables()[0]` is the
/// most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidArgument("ring has no variables".into()));
        }
        let mut seen = HashSet::new();
        for v in &variables {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate variable `{v}`"
                )));
            }
        }
        Ok(Ring { variables, order })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// The monomial consisting of the single variable at `index`.
    pub fn var(&self, index: usize) -> Monomial {
        let mut exps = vec![0; self.num_vars()];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.num_vars())
    }

    pub(crate) fn check(&self, m: &Monomial) -> Result<()> {
        if m.len() != self.num_vars() {
            return Err(Error::InvalidRing {
                expected: self.num_vars(),
                found: m.len(),
            });
        }
        Ok(())
    }

    /// Compares two monomials of this ring under its monomial order.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self.order {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
                let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
                // Equal degree: the smaller exponent at the last differing
                // position wins.
                da.cmp(&db).then_with(|| {
                    a.iter()
                        .rev()
                        .zip(b.iter().rev())
                        .find(|(x, y)| x != y)
                        .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
                })
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}] ({})", self.variables.join(","), self.order)
    }
}

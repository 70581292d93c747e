//! Itemized pass/fail results of identity checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactlin::LinMap;

/// Where two sides of an identity first disagree: the domain basis vector, split into
/// its tensor-factor indices, and the codomain coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: Vec<usize>,
    pub column: usize,
    pub row: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub items: Vec<AxiomCheck>,
}

/// Splits a flattened tensor index into factor indices (row-major).
pub fn split_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    out
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> CheckReport {
        CheckReport {
            subject: subject.into(),
            items: Vec::new(),
        }
    }

    /// Records `lhs == rhs`; `input_dims` are the tensor factors of the common domain.
    pub fn check_eq(
        &mut self,
        axiom: &str,
        lhs: &LinMap,
        rhs: &LinMap,
        input_dims: &[usize],
    ) -> bool {
        let (passed, counterexample, note) = if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()
        {
            let note = format!(
                "shapes differ: {}x{} vs {}x{}",
                lhs.rows(),
                lhs.cols(),
                rhs.rows(),
                rhs.cols()
            );
            (false, None, Some(note))
        } else {
            match lhs.first_difference(rhs) {
                None => (true, None, None),
                Some((row, column)) => {
                    let input = if input_dims.iter().product::<usize>() == lhs.cols() {
                        split_index(column, input_dims)
                    } else {
                        vec![column]
                    };
                    (false, Some(Counterexample { input, column, row }), None)
                }
            }
        };
        self.items.push(AxiomCheck {
            axiom: axiom.to_string(),
            passed,
            counterexample,
            note,
        });
        passed
    }

    pub fn check_flag(&mut self, axiom: &str, passed: bool, note: Option<String>) -> bool {
        self.items.push(AxiomCheck {
            axiom: axiom.to_string(),
            passed,
            counterexample: None,
            note,
        });
        passed
    }

    /// Folds a sub-report into one item, keeping its first counterexample.
    pub fn check_sub(&mut self, axiom: &str, sub: &CheckReport) -> bool {
        let first = sub.items.iter().find(|i| !i.passed);
        self.items.push(AxiomCheck {
            axiom: axiom.to_string(),
            passed: first.is_none(),
            counterexample: first.and_then(|i| i.counterexample.clone()),
            note: first.map(|i| format!("{} failed", i.axiom)),
        });
        first.is_none()
    }

    /// Appends all items of `other`, prefixing their keys.
    pub fn extend(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            item.axiom = format!("{prefix}{}", item.axiom);
            self.items.push(item);
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn item(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.items.iter().find(|i| i.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.items.iter().filter(|i| !i.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for item in &self.items {
            write!(
                f,
                "  [{}] {}",
                if item.passed { "pass" } else { "FAIL" },
                item.axiom
            )?;
            if let Some(c) = &item.counterexample {
                write!(
                    f,
                    " at input {:?} (column {}), coordinate {}",
                    c.input, c.column, c.row
                )?;
            }
            if let Some(n) = &item.note {
                write!(f, " ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn counterexample_splits_tensor_index() {
        let q = Field::Rational;
        let a = LinMap::identity(q, 6);
        let mut b = a.clone();
        b.set(0, 5, q.one());
        let mut r = CheckReport::new("t");
        assert!(!r.check_eq("x", &a, &b, &[2, 3]));
        let c = r.items[0].counterexample.clone().unwrap();
        assert_eq!((c.input, c.column, c.row), (vec![1, 2], 5, 0));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_roundtrip() {
        let mut r = CheckReport::new("s");
        r.check_flag("ok", true, None);
        let text = serde_json::to_string(&r).unwrap();
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}

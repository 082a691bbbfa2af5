//! Lie algebras with an orthonormal declared basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Vector};
use crate::scalar::Scalar;

/// A Lie algebra together with the inner product that makes the declared
/// basis orthonormal. `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MetricLieAlgebra {
    dim: usize,
    constants: Vec<Scalar>,
    labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `c^k_{ij} + c^k_{ji} ≠ 0`.
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
        defect: Scalar,
    },
    /// The `e_l` component of the cyclic Jacobi sum for `(i, j, k)`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        defect: Scalar,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl MetricLieAlgebra {
    /// Build from a full `c[i][j][k] = c^k_{ij}` table. No validation is done
    /// here; see [`MetricLieAlgebra::validate`].
    pub fn from_table(dim: usize, table: Vec<Vec<Vec<Scalar>>>, labels: Option<Vec<String>>) -> Result<Self> {
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|c| c.len() != dim)) {
            return Err(Error::InvalidAlgebra(format!(
                "structure constant table is not {dim}x{dim}x{dim}"
            )));
        }
        let constants = table.into_iter().flatten().flatten().collect();
        MetricLieAlgebra::assemble(dim, constants, labels)
    }

    /// Build from brackets `[e_i, e_j] = Σ coeff · e_k` listed for `i < j`;
    /// the `j > i` half is filled by antisymmetry.
    pub fn from_brackets(
        dim: usize,
        brackets: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let mut constants = vec![Scalar::zero(); dim * dim * dim];
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for (i, j, k, coeff) in brackets {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            if i >= j {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket entries must have i < j, found i={i}, j={j}"
                )));
            }
            if !constants[idx(i, j, k)].is_zero() {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate bracket entry ({i}, {j}, {k})"
                )));
            }
            constants[idx(j, i, k)] = -&coeff;
            constants[idx(i, j, k)] = coeff;
        }
        MetricLieAlgebra::assemble(dim, constants, labels)
    }

    fn assemble(dim: usize, constants: Vec<Scalar>, labels: Option<Vec<String>>) -> Result<Self> {
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(Error::InvalidAlgebra(format!(
                    "{} labels given for dimension {dim}",
                    l.len()
                )))
            }
            Some(l) => {
                for (a, name) in l.iter().enumerate() {
                    if l[..a].contains(name) {
                        return Err(Error::InvalidAlgebra(format!("duplicate label {name:?}")));
                    }
                }
                l
            }
            None => (0..dim).map(|i| format!("e{i}")).collect(),
        };
        Ok(MetricLieAlgebra { dim, constants, labels })
    }

    pub fn abelian(dim: usize) -> Self {
        MetricLieAlgebra::assemble(dim, vec![Scalar::zero(); dim * dim * dim], None).expect("no labels")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// `c^k_{ij}`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() || i == j {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *slot += &(&xy * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(Scalar::is_zero)
    }

    /// Resolve a basis reference given as a label or a 0-based index.
    pub fn resolve(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(i) = self.labels.iter().position(|l| l == token) {
            return Ok(i);
        }
        match token.parse::<usize>() {
            Ok(i) if i < self.dim => Ok(i),
            _ => Err(Error::UnknownLabel(token.to_string())),
        }
    }

    /// Resolve a comma-separated list of labels or indices.
    pub fn resolve_list(&self, list: &str) -> Result<Vec<usize>> {
        list.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| self.resolve(t))
            .collect()
    }

    /// Report every antisymmetry and Jacobi violation.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let defect = self.c(i, j, k) + self.c(j, i, k);
                    if !defect.is_zero() {
                        violations.push(Violation::Antisymmetry { i, j, k, defect });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let jac = self.jacobiator(i, j, k);
                    for (l, defect) in jac.into_iter().enumerate() {
                        if !defect.is_zero() {
                            violations.push(Violation::Jacobi { i, j, k, l, defect });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for m in 0..n {
                let cm = self.c(a, b, m);
                if cm.is_zero() {
                    continue;
                }
                for (l, slot) in out.iter_mut().enumerate() {
                    let d = self.c(m, c, l);
                    if !d.is_zero() {
                        *slot += &(cm * d);
                    }
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAlgebra(format!(
                "{} violation(s), first: {}",
                report.violations.len(),
                serde_json::to_string(v).unwrap_or_default()
            ))),
        }
    }

    pub fn ensure_curvature_dim(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::DimensionTooSmall(self.dim));
        }
        Ok(())
    }

    /// Parse the JSON algebra file format.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.into_algebra()
    }

    pub fn to_file(&self) -> AlgebraFile {
        let n = self.dim;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        brackets.push(BracketEntry {
                            i,
                            j,
                            k,
                            coeff: c.clone(),
                        });
                    }
                }
            }
        }
        AlgebraFile {
            dim: n,
            labels: Some(self.labels.clone()),
            brackets,
            metric: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Scalar,
}

/// On-disk algebra description. Only orthonormal bases are supported; a
/// `metric` field, if present, must be the identity matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<Vec<Vec<Scalar>>>,
}

impl AlgebraFile {
    pub fn into_algebra(self) -> Result<MetricLieAlgebra> {
        if let Some(g) = &self.metric {
            let identity = g.len() == self.dim
                && g.iter().enumerate().all(|(i, row)| {
                    row.len() == self.dim
                        && row
                            .iter()
                            .enumerate()
                            .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
                });
            if !identity {
                return Err(Error::InvalidAlgebra(
                    "only orthonormal bases are supported; the metric must be the identity".into(),
                ));
            }
        }
        MetricLieAlgebra::from_brackets(
            self.dim,
            self.brackets.into_iter().map(|b| (b.i, b.j, b.k, b.coeff)),
            self.labels,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn flipped_so3_is_still_a_lie_algebra() {
        // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=-e2. Each cyclic Jacobi term is a
        // multiple of [e_k, e_k], so the identity holds (this is sl(2, R)).
        let alg = MetricLieAlgebra::from_brackets(3, [(0, 1, 2, s("1")), (1, 2, 0, s("1")), (0, 2, 1, s("1"))], None)
            .unwrap();
        assert!(alg.validate().is_valid());
    }

    #[test]
    fn jacobi_violation_reported() {
        // [e0,e1]=e0, [e0,e2]=e1: the cyclic sum for (0,1,2) is e1.
        let alg = MetricLieAlgebra::from_brackets(3, [(0, 1, 0, s("1")), (0, 2, 1, s("1"))], None).unwrap();
        let report = alg.validate();
        assert_eq!(
            report.violations,
            vec![Violation::Jacobi {
                i: 0,
                j: 1,
                k: 2,
                l: 1,
                defect: s("1")
            }]
        );
        assert!(alg.ensure_valid().is_err());
    }

    #[test]
    fn antisymmetry_violation_reported() {
        let mut table = vec![vec![vec![Scalar::zero(); 2]; 2]; 2];
        table[0][1][0] = s("1");
        let alg = MetricLieAlgebra::from_table(2, table, None).unwrap();
        let report = alg.validate();
        assert!(matches!(
            report.violations[0],
            Violation::Antisymmetry { i: 0, j: 1, k: 0, .. }
        ));
    }

    #[test]
    fn file_format_rules() {
        let ok = r#"{"dim": 3, "labels": ["X","Y","Z"], "brackets": [{"i":0,"j":1,"k":2,"coeff":"1"}]}"#;
        let alg = MetricLieAlgebra::from_json(ok).unwrap();
        assert_eq!(alg.c(1, 0, 2), &s("-1"));
        assert_eq!(alg.resolve("Z").unwrap(), 2);
        assert_eq!(alg.resolve("1").unwrap(), 1);
        let back = MetricLieAlgebra::from_json(&alg.to_json()).unwrap();
        assert_eq!(back, alg);

        let reversed = r#"{"dim": 3, "brackets": [{"i":1,"j":0,"k":2,"coeff":"1"}]}"#;
        assert!(MetricLieAlgebra::from_json(reversed).is_err());
        let gram = r#"{"dim": 2, "metric": [["2","0"],["0","1"]]}"#;
        assert!(MetricLieAlgebra::from_json(gram).is_err());
        let identity = r#"{"dim": 2, "metric": [["1","0"],["0","1"]]}"#;
        assert!(MetricLieAlgebra::from_json(identity).unwrap().is_abelian());
        let unknown = r#"{"dim": 2, "signature": [1, -1]}"#;
        assert!(MetricLieAlgebra::from_json(unknown).is_err());
    }
}

//! Built-in algebras: the two five-dimensional Einstein solvmanifolds, the
//! `g1`/`g2` families, and a few small test cases.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::wedge::WedgeBasis;

const NIKONOROV5_BASIS: &str = include_str!("../data/nikonorov5.basis.json");
const NIKONOROV4_BASIS: &str = include_str!("../data/nikonorov4.basis.json");

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogParams {
    /// `abelian` dimension.
    pub dim: Option<usize>,
    /// `g1` family parameter.
    pub n: Option<usize>,
    /// `g2` coefficients `α_1, …, α_n`.
    pub alpha: Option<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static str,
    pub description: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "nikonorov5",
        params: "",
        description: "5-dim Einstein solvmanifold on A,X1..X4 with a 4-dim filiform nilradical",
    },
    CatalogEntry {
        name: "nikonorov4",
        params: "",
        description: "5-dim Einstein solvmanifold on A,X1..X4 with Heisenberg-plus-line nilradical",
    },
    CatalogEntry {
        name: "g1",
        params: "--n N (N >= 1)",
        description: "W,X1..X(N+1) with [W,Xk] = X(k+1)",
    },
    CatalogEntry {
        name: "g2",
        params: "--alpha a1,...,aN",
        description: "W,X1..XN with [W,Xk] = ak Xk",
    },
    CatalogEntry {
        name: "abelian",
        params: "--dim N",
        description: "flat abelian algebra",
    },
    CatalogEntry {
        name: "so3",
        params: "",
        description: "bi-invariant metric on SO(3)",
    },
    CatalogEntry {
        name: "heisenberg3",
        params: "",
        description: "3-dim Heisenberg algebra [X,Y] = Z",
    },
];

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

fn labels(names: &[&str]) -> Option<Vec<String>> {
    Some(names.iter().map(|s| s.to_string()).collect())
}

fn surd(num: i64, den: i64, m: u64) -> Scalar {
    Scalar::surd(BigRational::new(num.into(), den.into()), m).expect("positive radicand")
}

/// `[X1,X2] = √(2/3) X3`, `[X1,X3] = √(2/3) X4`, `[A,Xj] = j/√30 Xj`.
pub fn nikonorov5() -> MetricLieAlgebra {
    let r = Scalar::sqrt_ratio(2, 3).expect("valid");
    let mut br = vec![(1, 2, 3, r.clone()), (1, 3, 4, r)];
    br.extend((1..=4).map(|j| (0, j, j, surd(j as i64, 30, 30))));
    MetricLieAlgebra::from_brackets(5, br, labels(&["A", "X1", "X2", "X3", "X4"])).expect("valid")
}

/// `[X1,X2] = √(2/3) X3`, `[A,Xj] = 2/√33 Xj` for `j = 1, 2`,
/// `[A,X3] = 4/√33 X3`, `[A,X4] = 3/√33 X4`.
pub fn nikonorov4() -> MetricLieAlgebra {
    let br = vec![
        (1, 2, 3, Scalar::sqrt_ratio(2, 3).expect("valid")),
        (0, 1, 1, surd(2, 33, 33)),
        (0, 2, 2, surd(2, 33, 33)),
        (0, 3, 3, surd(4, 33, 33)),
        (0, 4, 4, surd(3, 33, 33)),
    ];
    MetricLieAlgebra::from_brackets(5, br, labels(&["A", "X1", "X2", "X3", "X4"])).expect("valid")
}

fn w_labels(k: usize) -> Vec<String> {
    std::iter::once("W".to_string())
        .chain((1..=k).map(|i| format!("X{i}")))
        .collect()
}

/// `W, X1, …, X(n+1)` with `[W, Xk] = X(k+1)`; dimension `n + 2`.
pub fn g1(n: usize) -> Result<MetricLieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParams("g1 needs n >= 1".into()));
    }
    let br = (1..=n).map(|k| (0, k, k + 1, Scalar::one()));
    MetricLieAlgebra::from_brackets(n + 2, br, Some(w_labels(n + 1)))
}

/// `W, X1, …, Xn` with `[W, Xk] = αk Xk`.
pub fn g2(alpha: &[Scalar]) -> Result<MetricLieAlgebra> {
    if alpha.is_empty() {
        return Err(Error::InvalidParams("g2 needs at least one alpha".into()));
    }
    let br = alpha
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| (0, k + 1, k + 1, a.clone()));
    MetricLieAlgebra::from_brackets(alpha.len() + 1, br, Some(w_labels(alpha.len())))
}

pub fn so3() -> MetricLieAlgebra {
    let one = Scalar::one();
    MetricLieAlgebra::from_brackets(
        3,
        [(0, 1, 2, one.clone()), (1, 2, 0, one.clone()), (0, 2, 1, -one)],
        labels(&["E1", "E2", "E3"]),
    )
    .expect("valid")
}

pub fn heisenberg3() -> MetricLieAlgebra {
    MetricLieAlgebra::from_brackets(3, [(0, 1, 2, Scalar::one())], labels(&["X", "Y", "Z"])).expect("valid")
}

pub fn build(name: &str, params: &CatalogParams) -> Result<MetricLieAlgebra> {
    entry(name)?;
    let unexpected = |what: &str| Error::InvalidParams(format!("{name} does not take {what}"));
    let check = |dim: bool, n: bool, alpha: bool| -> Result<()> {
        if params.dim.is_some() && !dim {
            return Err(unexpected("--dim"));
        }
        if params.n.is_some() && !n {
            return Err(unexpected("--n"));
        }
        if params.alpha.is_some() && !alpha {
            return Err(unexpected("--alpha"));
        }
        Ok(())
    };
    let alg = match name {
        "nikonorov5" => {
            check(false, false, false)?;
            nikonorov5()
        }
        "nikonorov4" => {
            check(false, false, false)?;
            nikonorov4()
        }
        "g1" => {
            check(false, true, false)?;
            g1(params.n.ok_or_else(|| Error::InvalidParams("g1 needs --n".into()))?)?
        }
        "g2" => {
            check(false, false, true)?;
            g2(params
                .alpha
                .as_deref()
                .ok_or_else(|| Error::InvalidParams("g2 needs --alpha".into()))?)?
        }
        "abelian" => {
            check(true, false, false)?;
            let dim = params
                .dim
                .ok_or_else(|| Error::InvalidParams("abelian needs --dim".into()))?;
            if dim == 0 {
                return Err(Error::InvalidParams("abelian needs --dim >= 1".into()));
            }
            MetricLieAlgebra::abelian(dim)
        }
        "so3" => {
            check(false, false, false)?;
            so3()
        }
        "heisenberg3" => {
            check(false, false, false)?;
            heisenberg3()
        }
        _ => unreachable!("entry() accepted {name}"),
    };
    alg.ensure_valid()?;
    Ok(alg)
}

/// Reference wedge orderings for the catalog entries that have one.
pub fn display_basis(name: &str, alg: &MetricLieAlgebra) -> Result<Option<WedgeBasis>> {
    let text = match name {
        "nikonorov5" => NIKONOROV5_BASIS,
        "nikonorov4" => NIKONOROV4_BASIS,
        _ => return Ok(None),
    };
    WedgeBasis::from_json(alg, text).map(Some)
}

/// Vertical index sets worth examining for each entry.
pub fn default_splits(name: &str, alg: &MetricLieAlgebra) -> Vec<Vec<usize>> {
    let n = alg.dim();
    match name {
        "nikonorov5" => vec![vec![0, 2, 4], vec![2, 3, 4]],
        "nikonorov4" => vec![vec![0, 3, 4]],
        "g1" | "g2" if n >= 3 => vec![(2..n).collect()],
        "abelian" if n >= 3 => vec![(2..n).collect()],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_build() {
        let params = |name: &str| match name {
            "g1" => CatalogParams {
                n: Some(2),
                ..Default::default()
            },
            "g2" => CatalogParams {
                alpha: Some(vec![Scalar::one(), Scalar::zero()]),
                ..Default::default()
            },
            "abelian" => CatalogParams {
                dim: Some(4),
                ..Default::default()
            },
            _ => CatalogParams::default(),
        };
        for e in ENTRIES {
            let alg = build(e.name, &params(e.name)).unwrap();
            assert!(alg.validate().is_valid(), "{}", e.name);
        }
    }

    #[test]
    fn bad_requests() {
        assert!(matches!(
            build("nope", &CatalogParams::default()),
            Err(Error::UnknownEntry(_))
        ));
        assert!(matches!(
            build("g1", &CatalogParams::default()),
            Err(Error::InvalidParams(_))
        ));
        let p = CatalogParams {
            n: Some(0),
            ..Default::default()
        };
        assert!(matches!(build("g1", &p), Err(Error::InvalidParams(_))));
        let p = CatalogParams {
            dim: Some(3),
            ..Default::default()
        };
        assert!(matches!(build("so3", &p), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn display_bases_load() {
        let alg = nikonorov5();
        let b = display_basis("nikonorov5", &alg).unwrap().unwrap();
        assert_eq!(b.pairs()[1], (2, 0));
        let alg = nikonorov4();
        assert_eq!(display_basis("nikonorov4", &alg).unwrap().unwrap().len(), 10);
    }
}

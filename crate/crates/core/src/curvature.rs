//! Levi-Civita connection, Riemann and Ricci tensors of a left-invariant
//! metric, evaluated at the identity in the declared orthonormal basis.
//!
//! Sign conventions (frozen, see [`CONVENTIONS`]):
//!
//! * `R(X,Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_[X,Y] Z`;
//! * `R_{ijkl} = ⟨R(e_i, e_j) e_k, e_l⟩`, so `R_{ijji}` is the sectional
//!   curvature of the plane `e_i ∧ e_j`;
//! * `Ric_{jk} = Σ_i R_{ijki}`, negative on Einstein solvmanifolds;
//! * the curvature operator pairs `⟨R(e_i∧e_j), e_k∧e_l⟩ = R_{ijkl}`.

use serde::{Deserialize, Serialize};

use crate::algebra::MetricLieAlgebra;
use crate::error::Result;
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// Human-readable statement of the calibrated sign choices.
pub const CONVENTIONS: &str = "\
connection:   2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>  (Koszul, orthonormal basis)
riemann:      R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
components:   R_ijkl = <R(e_i,e_j)e_k, e_l>   (sectional curvature K(e_i,e_j) = R_ijji)
ricci:        Ric_jk = sum_i R_ijki           (Einstein solvmanifolds have Ric = c*g with c < 0)
operator:     <R(e_i^e_j), e_k^e_l> = R_ijkl  (diagonal entries are -K; Ric_jk = -sum_i <R(e_i^e_j), e_i^e_k>)
wedge basis:  oriented pairs (i,j); default order is lexicographic with i < j
indices:      0-based in files and on the command line; labels are display metadata";

/// `∇_{e_i} e_j = Σ_k Γ^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionTable {
    dim: usize,
    gamma: Vec<Scalar>,
}

impl ConnectionTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `Γ^k_{ij}`.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.gamma[(i * self.dim + j) * self.dim + k]
    }

    /// `∇_x y` for constant-coefficient (left-invariant) fields.
    pub fn nabla(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    let g = self.gamma(i, j, k);
                    if !g.is_zero() {
                        *slot += &(&xy * g);
                    }
                }
            }
        }
        out
    }

    /// `∇_{e_i} e_j` as a vector.
    pub fn nabla_basis(&self, i: usize, j: usize) -> Vector {
        (0..self.dim).map(|k| self.gamma(i, j, k).clone()).collect()
    }
}

/// Koszul formula for left-invariant fields in an orthonormal basis:
/// `Γ^k_{ij} = ½ (c^k_{ij} − c^i_{jk} + c^j_{ki})`.
pub fn koszul_connection(alg: &MetricLieAlgebra) -> Result<ConnectionTable> {
    alg.ensure_valid()?;
    Ok(connection_unchecked(alg))
}

pub(crate) fn connection_unchecked(alg: &MetricLieAlgebra) -> ConnectionTable {
    let n = alg.dim();
    let mut gamma = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = &(alg.c(i, j, k) - alg.c(j, k, i)) + alg.c(k, i, j);
                gamma.push(v.div_int(2));
            }
        }
    }
    ConnectionTable { dim: n, gamma }
}

/// `R_{ijkl} = ⟨R(e_i, e_j) e_k, e_l⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiemannTensor {
    dim: usize,
    data: Vec<Scalar>,
}

impl RiemannTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let n = self.dim;
        &self.data[((i * n + j) * n + k) * n + l]
    }

    /// `⟨R(a, b) c, d⟩` for arbitrary vectors, by multilinearity.
    pub fn eval(&self, a: &[Scalar], b: &[Scalar], c: &[Scalar], d: &[Scalar]) -> Scalar {
        let n = self.dim;
        let nz = |v: &[Scalar]| -> Vec<usize> { (0..n).filter(|&i| !v[i].is_zero()).collect() };
        let (ia, ib, ic, id) = (nz(a), nz(b), nz(c), nz(d));
        let mut acc = Scalar::zero();
        for &i in &ia {
            for &j in &ib {
                let ab = &a[i] * &b[j];
                for &k in &ic {
                    let abc = &ab * &c[k];
                    for &l in &id {
                        let r = self.get(i, j, k, l);
                        if !r.is_zero() {
                            acc += &(&(&abc * &d[l]) * r);
                        }
                    }
                }
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// First violated symmetry, if any: pair antisymmetries, pair symmetry
    /// and the first Bianchi identity.
    pub fn symmetry_defect(&self) -> Option<(&'static str, [usize; 4])> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let r = self.get(i, j, k, l);
                        if r != &-self.get(j, i, k, l) {
                            return Some(("R_ijkl = -R_jikl", [i, j, k, l]));
                        }
                        if r != &-self.get(i, j, l, k) {
                            return Some(("R_ijkl = -R_ijlk", [i, j, k, l]));
                        }
                        if r != self.get(k, l, i, j) {
                            return Some(("R_ijkl = R_klij", [i, j, k, l]));
                        }
                        let bianchi = &(r + self.get(j, k, i, l)) + self.get(k, i, j, l);
                        if !bianchi.is_zero() {
                            return Some(("first Bianchi", [i, j, k, l]));
                        }
                    }
                }
            }
        }
        None
    }
}

pub fn riemann(alg: &MetricLieAlgebra) -> Result<RiemannTensor> {
    alg.ensure_valid()?;
    alg.ensure_curvature_dim()?;
    Ok(riemann_from(alg, &connection_unchecked(alg)))
}

/// `R(e_i,e_j)e_k = Σ_m (Γ^m_{jk} ∇_{e_i} e_m − Γ^m_{ik} ∇_{e_j} e_m − c^m_{ij} ∇_{e_m} e_k)`.
pub(crate) fn riemann_from(alg: &MetricLieAlgebra, conn: &ConnectionTable) -> RiemannTensor {
    let n = alg.dim();
    let mut data = vec![Scalar::zero(); n * n * n * n];
    let at = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let mut v = Scalar::zero();
                    for m in 0..n {
                        let a = conn.gamma(j, k, m);
                        if !a.is_zero() {
                            v += &(a * conn.gamma(i, m, l));
                        }
                        let b = conn.gamma(i, k, m);
                        if !b.is_zero() {
                            v -= &(b * conn.gamma(j, m, l));
                        }
                        let c = alg.c(i, j, m);
                        if !c.is_zero() {
                            v -= &(c * conn.gamma(m, k, l));
                        }
                    }
                    data[at(i, j, k, l)] = v;
                }
            }
        }
    }
    RiemannTensor { dim: n, data }
}

/// Symmetric Ricci matrix `Ric_{jk} = Σ_i R_{ijki}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciMatrix(pub Matrix<Scalar>);

impl RicciMatrix {
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.0[(i, j)]
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.0
    }

    /// `Ric(x, y)` for arbitrary vectors.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let n = self.0.rows();
        let mut acc = Scalar::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y[j].is_zero() && !self.0[(i, j)].is_zero() {
                    acc += &(&(&x[i] * &y[j]) * &self.0[(i, j)]);
                }
            }
        }
        acc
    }
}

pub fn ricci(alg: &MetricLieAlgebra) -> Result<RicciMatrix> {
    Ok(ricci_from(&riemann(alg)?))
}

pub fn ricci_from(r: &RiemannTensor) -> RicciMatrix {
    let n = r.dim();
    RicciMatrix(Matrix::from_fn(n, n, |j, k| (0..n).map(|i| r.get(i, j, k, i)).sum()))
}

/// Contraction over the first pair via pair symmetry, `Ric_{jk} = Σ_i R_{kiij}`.
/// Agrees with [`ricci_from`] exactly whenever the tensor has its symmetries.
pub fn ricci_from_pair_contraction(r: &RiemannTensor) -> RicciMatrix {
    let n = r.dim();
    RicciMatrix(Matrix::from_fn(n, n, |j, k| (0..n).map(|i| r.get(k, i, i, j)).sum()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EinsteinVerdict {
    /// `Ric = constant · g`.
    Einstein { constant: Scalar },
    /// `Ric(e_i, e_j)` breaks proportionality. A diagonal mismatch is
    /// reported as `(0, i)`: `Ric(e_0, e_0) ≠ Ric(e_i, e_i)`.
    NotEinstein { witness: (usize, usize), diagonal: bool },
}

impl EinsteinVerdict {
    pub fn is_einstein(&self) -> bool {
        matches!(self, EinsteinVerdict::Einstein { .. })
    }

    pub fn constant(&self) -> Option<&Scalar> {
        match self {
            EinsteinVerdict::Einstein { constant } => Some(constant),
            EinsteinVerdict::NotEinstein { .. } => None,
        }
    }
}

pub fn einstein_check(alg: &MetricLieAlgebra) -> Result<EinsteinVerdict> {
    Ok(einstein_from(&ricci(alg)?))
}

pub fn einstein_from(ric: &RicciMatrix) -> EinsteinVerdict {
    let n = ric.0.rows();
    let c = ric.get(0, 0).clone();
    for i in 1..n {
        if ric.get(i, i) != &c {
            return EinsteinVerdict::NotEinstein {
                witness: (0, i),
                diagonal: true,
            };
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && !ric.get(i, j).is_zero() {
                return EinsteinVerdict::NotEinstein {
                    witness: (i, j),
                    diagonal: false,
                };
            }
        }
    }
    EinsteinVerdict::Einstein { constant: c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::basis_vector;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    fn so3() -> MetricLieAlgebra {
        MetricLieAlgebra::from_brackets(3, [(0, 1, 2, s("1")), (1, 2, 0, s("1")), (0, 2, 1, s("-1"))], None).unwrap()
    }

    #[test]
    fn abelian_is_flat() {
        let alg = MetricLieAlgebra::abelian(4);
        let conn = koszul_connection(&alg).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| conn.nabla_basis(i, j).iter().all(Scalar::is_zero))));
        assert!(riemann(&alg).unwrap().is_zero());
        assert_eq!(
            einstein_check(&alg).unwrap(),
            EinsteinVerdict::Einstein {
                constant: Scalar::zero()
            }
        );
    }

    #[test]
    fn so3_bi_invariant() {
        let alg = so3();
        let conn = koszul_connection(&alg).unwrap();
        // ∇_X Y = ½[X, Y] for a bi-invariant metric.
        for i in 0..3 {
            for j in 0..3 {
                let half: Vec<Scalar> = alg.bracket_basis(i, j).iter().map(|v| v.div_int(2)).collect();
                assert_eq!(conn.nabla_basis(i, j), half);
            }
        }
        let r = riemann(&alg).unwrap();
        // R(X,Y)Z = -¼[[X,Y],Z], so K(e0,e1) = R_0110 = 1/4.
        assert_eq!(r.get(0, 1, 1, 0), &s("1/4"));
        let e = |i| basis_vector(3, i);
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (0, 2, 2)] {
            let xy = alg.bracket(&e(i), &e(j));
            let expected: Vec<Scalar> = alg.bracket(&xy, &e(k)).iter().map(|v| -v.div_int(4)).collect();
            let got: Vec<Scalar> = (0..3).map(|l| r.get(i, j, k, l).clone()).collect();
            assert_eq!(got, expected);
        }
        assert_eq!(
            einstein_check(&alg).unwrap(),
            EinsteinVerdict::Einstein { constant: s("1/2") }
        );
    }

    #[test]
    fn degenerate_dimension_rejected() {
        assert!(riemann(&MetricLieAlgebra::abelian(1)).is_err());
    }
}

//! The curvature operator on `Λ²𝔤`, its block structure relative to a
//! codimension-two split, and the θ-independence and Hermitian checks on the
//! mixed block.

use serde::{Deserialize, Serialize};

use crate::algebra::MetricLieAlgebra;
use crate::curvature::{riemann, RiemannTensor};
use crate::error::{Error, Result};
use crate::foliation::FoliationSplit;
use crate::linalg::{determinant, ComplexScalar, Matrix};
use crate::poly::{faddeev_leverrier, ExactPolynomial};
use crate::scalar::Scalar;

/// Ordered basis of `Λ²` made of oriented pairs `e_i ∧ e_j`, each unordered
/// pair appearing exactly once. Orientation matters: `e_j ∧ e_i = −e_i ∧ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeBasis {
    dim: usize,
    pairs: Vec<(usize, usize)>,
}

impl WedgeBasis {
    /// `(0,1), (0,2), …, (n−2,n−1)`.
    pub fn lexicographic(dim: usize) -> Self {
        let pairs = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
        WedgeBasis { dim, pairs }
    }

    pub fn new(dim: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let expected = dim * dim.saturating_sub(1) / 2;
        if pairs.len() != expected {
            return Err(Error::Basis(format!(
                "{} pairs given, dimension {dim} needs {expected}",
                pairs.len()
            )));
        }
        let mut seen = vec![false; dim * dim];
        for &(i, j) in &pairs {
            if i >= dim || j >= dim {
                return Err(Error::Basis(format!("pair ({i}, {j}) out of range")));
            }
            if i == j {
                return Err(Error::Basis(format!("degenerate pair ({i}, {i})")));
            }
            let key = i.min(j) * dim + i.max(j);
            if seen[key] {
                return Err(Error::Basis(format!("pair ({i}, {j}) appears twice")));
            }
            seen[key] = true;
        }
        Ok(WedgeBasis { dim, pairs })
    }

    /// Parse a basis-order file: a JSON array of two-element arrays whose
    /// entries are 0-based indices or basis labels.
    pub fn from_json(alg: &MetricLieAlgebra, text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Ref {
            Index(usize),
            Label(String),
        }
        let raw: Vec<(Ref, Ref)> = serde_json::from_str(text)?;
        let resolve = |r: Ref| match r {
            Ref::Index(i) if i < alg.dim() => Ok(i),
            Ref::Index(i) => Err(Error::Basis(format!("index {i} out of range"))),
            Ref::Label(l) => alg.resolve(&l),
        };
        let pairs = raw
            .into_iter()
            .map(|(a, b)| Ok((resolve(a)?, resolve(b)?)))
            .collect::<Result<Vec<_>>>()?;
        WedgeBasis::new(alg.dim(), pairs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Position of `e_i ∧ e_j` and the sign relating it to the stored
    /// orientation.
    pub fn position(&self, i: usize, j: usize) -> Option<(usize, i32)> {
        self.pairs.iter().enumerate().find_map(|(p, &(a, b))| {
            if (a, b) == (i, j) {
                Some((p, 1))
            } else if (a, b) == (j, i) {
                Some((p, -1))
            } else {
                None
            }
        })
    }

    pub fn labels(&self, alg: &MetricLieAlgebra) -> Vec<String> {
        self.pairs
            .iter()
            .map(|&(i, j)| format!("{}^{}", alg.label(i), alg.label(j)))
            .collect()
    }
}

/// Symmetric matrix `Q[(i,j),(k,l)] = ⟨R(e_i∧e_j), e_k∧e_l⟩ = R_{ijkl}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureOperator {
    basis: WedgeBasis,
    matrix: Matrix<Scalar>,
}

impl CurvatureOperator {
    pub fn basis(&self) -> &WedgeBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `⟨R(e_i∧e_j), e_k∧e_l⟩` for any oriented pairs; zero if `i == j` or
    /// `k == l`.
    pub fn pairing(&self, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        if i == j || k == l {
            return Scalar::zero();
        }
        let (a, sa) = self.basis.position(i, j).expect("pair in basis");
        let (b, sb) = self.basis.position(k, l).expect("pair in basis");
        let v = &self.matrix[(a, b)];
        if sa * sb < 0 {
            -v
        } else {
            v.clone()
        }
    }

    /// Re-express in another basis of the same dimension.
    pub fn in_basis(&self, basis: &WedgeBasis) -> CurvatureOperator {
        let pairs = basis.pairs();
        let matrix = Matrix::from_fn(pairs.len(), pairs.len(), |a, b| {
            let (i, j) = pairs[a];
            let (k, l) = pairs[b];
            self.pairing(i, j, k, l)
        });
        CurvatureOperator {
            basis: basis.clone(),
            matrix,
        }
    }
}

pub fn curvature_operator(alg: &MetricLieAlgebra, basis: &WedgeBasis) -> Result<CurvatureOperator> {
    if basis.dim() != alg.dim() {
        return Err(Error::Basis(format!(
            "basis is for dimension {}, algebra has dimension {}",
            basis.dim(),
            alg.dim()
        )));
    }
    Ok(operator_from_riemann(&riemann(alg)?, basis))
}

pub fn operator_from_riemann(r: &RiemannTensor, basis: &WedgeBasis) -> CurvatureOperator {
    let pairs = basis.pairs();
    let matrix = Matrix::from_fn(pairs.len(), pairs.len(), |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        r.get(i, j, k, l).clone()
    });
    CurvatureOperator {
        basis: basis.clone(),
        matrix,
    }
}

/// Decomposition `Λ² = (Λ²𝒱 ⊕ Λ²ℋ) ⊕ W` in the operator's own basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    /// Basis positions of pure pairs (both vertical or both horizontal).
    pub pure: Vec<usize>,
    /// Basis positions of mixed pairs (one vertical, one horizontal).
    pub mixed: Vec<usize>,
    pub pure_block: Matrix<Scalar>,
    pub mixed_block: Matrix<Scalar>,
    /// Rows indexed by `pure`, columns by `mixed`.
    pub off_block: Matrix<Scalar>,
}

impl BlockSplit {
    /// True iff the operator preserves both summands.
    pub fn is_invariant(&self) -> bool {
        self.off_block.is_zero()
    }
}

pub fn block_split(q: &CurvatureOperator, vertical: &[usize]) -> Result<BlockSplit> {
    let split = FoliationSplit::new(q.dim(), vertical)?;
    split.horizontal_pair()?;
    let (mut pure, mut mixed) = (Vec::new(), Vec::new());
    for (p, &(i, j)) in q.basis().pairs().iter().enumerate() {
        if split.is_vertical(i) == split.is_vertical(j) {
            pure.push(p);
        } else {
            mixed.push(p);
        }
    }
    let m = q.matrix();
    Ok(BlockSplit {
        pure_block: m.select(&pure, &pure),
        mixed_block: m.select(&mixed, &mixed),
        off_block: m.select(&pure, &mixed),
        pure,
        mixed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaIdentity {
    /// `⟨R(X∧U), X∧V⟩ = ⟨R(Y∧U), Y∧V⟩`.
    EqualDiagonal,
    /// `⟨R(X∧U), Y∧V⟩ + ⟨R(Y∧U), X∧V⟩ = 0`.
    VanishingCross,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ThetaCheck {
    Holds,
    Fails {
        u: usize,
        v: usize,
        identity: ThetaIdentity,
        lhs: Scalar,
        rhs: Scalar,
    },
}

impl ThetaCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ThetaCheck::Holds)
    }
}

/// `⟨R(X_θ∧U), X_θ∧V⟩` with `X_θ = cos θ X + sin θ Y` expands to
/// `cos²θ·a + sin²θ·b + cosθ sinθ·c`; it is independent of θ iff `a = b`
/// and `c = 0`. Both identities are checked exactly on all vertical basis
/// pairs, with `X` the first horizontal index.
pub fn theta_independence_check(q: &CurvatureOperator, vertical: &[usize]) -> Result<ThetaCheck> {
    let split = FoliationSplit::new(q.dim(), vertical)?;
    let (x, y) = split.horizontal_pair()?;
    for &u in split.vertical() {
        for &v in split.vertical() {
            let a = q.pairing(x, u, x, v);
            let b = q.pairing(y, u, y, v);
            if a != b {
                return Ok(ThetaCheck::Fails {
                    u,
                    v,
                    identity: ThetaIdentity::EqualDiagonal,
                    lhs: a,
                    rhs: b,
                });
            }
            let c = &q.pairing(x, u, y, v) + &q.pairing(y, u, x, v);
            if !c.is_zero() {
                return Ok(ThetaCheck::Fails {
                    u,
                    v,
                    identity: ThetaIdentity::VanishingCross,
                    lhs: c,
                    rhs: Scalar::zero(),
                });
            }
        }
    }
    Ok(ThetaCheck::Holds)
}

/// `R|_W` in the basis `X∧U_1, …, X∧U_m, Y∧U_1, …, Y∧U_m`, together with the
/// complex structure `J(X∧U) = Y∧U`, `J(Y∧U) = −X∧U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedBlock {
    pub pairs: Vec<(usize, usize)>,
    pub restriction: Matrix<Scalar>,
    pub complex_structure: Matrix<Scalar>,
}

pub fn mixed_block(q: &CurvatureOperator, vertical: &[usize]) -> Result<MixedBlock> {
    let split = FoliationSplit::new(q.dim(), vertical)?;
    let (x, y) = split.horizontal_pair()?;
    let m = split.vertical().len();
    let pairs: Vec<(usize, usize)> = [x, y]
        .iter()
        .flat_map(|&h| split.vertical().iter().map(move |&u| (h, u)))
        .collect();
    let restriction = Matrix::from_fn(2 * m, 2 * m, |a, b| {
        let (i, j) = pairs[a];
        let (k, l) = pairs[b];
        q.pairing(i, j, k, l)
    });
    let mut j = Matrix::zeros(2 * m, 2 * m);
    for k in 0..m {
        j[(m + k, k)] = Scalar::one();
        j[(k, m + k)] = Scalar::from_integer(-1);
    }
    Ok(MixedBlock {
        pairs,
        restriction,
        complex_structure: j,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianData {
    pub block: MixedBlock,
    /// `H = P + iQ` where `R|_W = [[P, −Q], [Q, P]]`.
    pub hermitian: Matrix<ComplexScalar>,
    /// `det(R|_W)` by exact elimination.
    pub det_restriction: Scalar,
    /// `det(H)`, real for Hermitian `H`, from its characteristic polynomial.
    pub det_hermitian: ComplexScalar,
    /// Characteristic polynomial of `H` (real coefficients).
    pub hermitian_char_poly: ExactPolynomial,
}

impl HermitianData {
    /// `det(R|_W) = det(H)²`.
    pub fn determinants_agree(&self) -> bool {
        self.det_hermitian.im.is_zero() && self.det_restriction == self.det_hermitian.re.square()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HermitianCheck {
    Commutes(Box<HermitianData>),
    /// Entry of `R|_W·J − J·R|_W` that is nonzero, as wedge pairs.
    Fails {
        row: (usize, usize),
        col: (usize, usize),
        defect: Scalar,
    },
}

impl HermitianCheck {
    pub fn commutes(&self) -> bool {
        matches!(self, HermitianCheck::Commutes(_))
    }
}

pub fn hermitian_w_check(q: &CurvatureOperator, vertical: &[usize]) -> Result<HermitianCheck> {
    if !block_split(q, vertical)?.is_invariant() {
        return Err(Error::SplitNotInvariant);
    }
    let block = mixed_block(q, vertical)?;
    let rj = block.restriction.matmul(&block.complex_structure);
    let jr = block.complex_structure.matmul(&block.restriction);
    let commutator = &rj - &jr;
    let size = commutator.rows();
    for a in 0..size {
        for b in 0..size {
            if !commutator[(a, b)].is_zero() {
                return Ok(HermitianCheck::Fails {
                    row: block.pairs[a],
                    col: block.pairs[b],
                    defect: commutator[(a, b)].clone(),
                });
            }
        }
    }
    let m = size / 2;
    let r = &block.restriction;
    let hermitian = Matrix::from_fn(m, m, |a, b| {
        ComplexScalar::new(r[(a, b)].clone(), r[(m + a, b)].clone())
    });
    let fl = faddeev_leverrier(&hermitian);
    let det_hermitian = if m % 2 == 0 {
        fl[0].clone()
    } else {
        crate::linalg::Coeff::neg(&fl[0])
    };
    debug_assert!(
        fl.iter().all(|c| c.im.is_zero()),
        "Hermitian characteristic polynomial is real"
    );
    let hermitian_char_poly = ExactPolynomial::new(fl.into_iter().map(|c| c.re).collect());
    let det_restriction = determinant(r)?;
    Ok(HermitianCheck::Commutes(Box::new(HermitianData {
        block,
        hermitian,
        det_restriction,
        det_hermitian,
        hermitian_char_poly,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_validation() {
        assert!(WedgeBasis::new(3, vec![(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(WedgeBasis::new(3, vec![(0, 1), (2, 0)]).is_err());
        assert!(WedgeBasis::new(3, vec![(0, 0), (0, 2), (1, 2)]).is_err());
        let b = WedgeBasis::new(3, vec![(2, 1), (0, 1), (2, 0)]).unwrap();
        assert_eq!(b.position(1, 2), Some((0, -1)));
        assert_eq!(b.position(0, 2), Some((2, -1)));
        assert_eq!(WedgeBasis::lexicographic(4).len(), 6);
    }

    #[test]
    fn abelian_operator_zero() {
        let alg = MetricLieAlgebra::abelian(4);
        let q = curvature_operator(&alg, &WedgeBasis::lexicographic(4)).unwrap();
        assert!(q.matrix().is_zero());
        let split = block_split(&q, &[0, 1]).unwrap();
        assert!(split.pure_block.is_zero() && split.mixed_block.is_zero() && split.is_invariant());
        assert!(theta_independence_check(&q, &[2, 3]).unwrap().holds());
        assert!(hermitian_w_check(&q, &[0, 3]).unwrap().commutes());
    }

    #[test]
    fn codimension_enforced() {
        let alg = MetricLieAlgebra::abelian(5);
        let q = curvature_operator(&alg, &WedgeBasis::lexicographic(5)).unwrap();
        assert!(matches!(block_split(&q, &[0, 1]), Err(Error::Codimension(3))));
        assert!(matches!(
            theta_independence_check(&q, &[0, 1, 2, 3]),
            Err(Error::Codimension(1))
        ));
    }
}

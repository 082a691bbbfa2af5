//! The paired-eigenvalue obstruction for Einstein metrics: a conformal
//! foliation by totally geodesic fibers of codimension 2 forces the
//! curvature operator to have at least `n − 2` eigenvalue pairs.

use serde::{Deserialize, Serialize};

use crate::algebra::MetricLieAlgebra;
use crate::curvature::{einstein_from, ricci_from, riemann, EinsteinVerdict};
use crate::error::Result;
use crate::foliation::{coordinate_subalgebra_scan, FoliationSplit};
use crate::poly::{char_poly, ExactPolynomial};
use crate::roots::{polynomial_spectrum, total_multiplicity, SpectrumEntry, DEFAULT_ROOT_TOLERANCE};
use crate::wedge::{block_split, hermitian_w_check, mixed_block, operator_from_riemann, HermitianCheck, WedgeBasis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ObstructionVerdict {
    /// `deg gcd(f, f′) < n − 2`: no conformal foliation with totally geodesic
    /// fibers of codimension 2, hence no submersive harmonic morphism to a
    /// surface with such fibers, even locally.
    Obstructed,
    /// The necessary condition is met; nothing follows about existence.
    Passes,
    NotApplicable {
        reason: String,
    },
}

/// Characteristic polynomial data of a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub charpoly: ExactPolynomial,
    pub gcd: ExactPolynomial,
    pub gcd_degree: usize,
    pub distinct_roots: usize,
    pub spectrum: Vec<SpectrumEntry>,
}

impl SpectralData {
    pub fn of(m: &crate::linalg::Matrix, tol: f64) -> Result<Self> {
        let f = char_poly(m);
        let g = f.gcd(&f.derivative())?;
        let gcd_degree = g.degree().unwrap_or(0);
        let spectrum = polynomial_spectrum(&f, tol)?;
        Ok(SpectralData {
            distinct_roots: f.degree().unwrap_or(0) - gcd_degree,
            charpoly: f,
            gcd: g,
            gcd_degree,
            spectrum,
        })
    }

    /// Every root real and the multiplicities add up to the degree.
    pub fn spectrum_complete(&self) -> bool {
        total_multiplicity(&self.spectrum) == self.charpoly.degree().unwrap_or(0)
            && self.spectrum.len() == self.distinct_roots
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub einstein: EinsteinVerdict,
    pub required_pairs: usize,
    pub full_operator: SpectralData,
    pub verdict: ObstructionVerdict,
    /// Mixed-block analyses for every coordinate split that is conformal with
    /// totally geodesic fibers.
    pub w_blocks: Vec<WBlockAnalysis>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WBlockAnalysis {
    pub vertical: Vec<usize>,
    pub invariant: bool,
    pub spectral: Option<SpectralData>,
    pub hermitian_commutes: Option<bool>,
    /// `det(R|_W) = det(H)²`.
    pub determinants_agree: Option<bool>,
    /// Characteristic polynomial `F` of `H`; `F²` equals the block's `f`
    /// whenever the block commutes with its complex structure.
    pub hermitian_char_poly: Option<ExactPolynomial>,
}

pub fn w_block_analysis(alg: &MetricLieAlgebra, split: &FoliationSplit, tol: f64) -> Result<WBlockAnalysis> {
    split.horizontal_pair()?;
    let q = operator_from_riemann(&riemann(alg)?, &WedgeBasis::lexicographic(alg.dim()));
    let vertical = split.vertical().to_vec();
    let blocks = block_split(&q, &vertical)?;
    if !blocks.is_invariant() {
        return Ok(WBlockAnalysis {
            vertical,
            invariant: false,
            spectral: None,
            hermitian_commutes: None,
            determinants_agree: None,
            hermitian_char_poly: None,
        });
    }
    let block = mixed_block(&q, &vertical)?;
    let spectral = SpectralData::of(&block.restriction, tol)?;
    let (commutes, agree, hpoly) = match hermitian_w_check(&q, &vertical)? {
        HermitianCheck::Commutes(data) => (true, Some(data.determinants_agree()), Some(data.hermitian_char_poly)),
        HermitianCheck::Fails { .. } => (false, None, None),
    };
    Ok(WBlockAnalysis {
        vertical,
        invariant: true,
        spectral: Some(spectral),
        hermitian_commutes: Some(commutes),
        determinants_agree: agree,
        hermitian_char_poly: hpoly,
    })
}

pub fn paired_eigenvalue_test(alg: &MetricLieAlgebra) -> Result<ObstructionReport> {
    paired_eigenvalue_test_with(alg, DEFAULT_ROOT_TOLERANCE)
}

pub fn paired_eigenvalue_test_with(alg: &MetricLieAlgebra, tol: f64) -> Result<ObstructionReport> {
    alg.ensure_valid()?;
    alg.ensure_curvature_dim()?;
    let n = alg.dim();
    let r = riemann(alg)?;
    let einstein = einstein_from(&ricci_from(&r));
    let q = operator_from_riemann(&r, &WedgeBasis::lexicographic(n));
    let full_operator = SpectralData::of(q.matrix(), tol)?;
    let required_pairs = n.saturating_sub(2);
    let verdict = if !einstein.is_einstein() {
        ObstructionVerdict::NotApplicable {
            reason: "the metric is not Einstein".into(),
        }
    } else if n < 3 {
        ObstructionVerdict::NotApplicable {
            reason: "dimension below 3 leaves no fibers".into(),
        }
    } else if full_operator.gcd_degree < required_pairs {
        ObstructionVerdict::Obstructed
    } else {
        ObstructionVerdict::Passes
    };
    let mut w_blocks = Vec::new();
    if n >= 3 {
        for entry in coordinate_subalgebra_scan(alg)? {
            let f = &entry.flags;
            if f.subalgebra && f.totally_geodesic && f.is_conformal() {
                let split = FoliationSplit::new(n, &entry.vertical)?;
                w_blocks.push(w_block_analysis(alg, &split, tol)?);
            }
        }
    }
    Ok(ObstructionReport {
        einstein,
        required_pairs,
        full_operator,
        verdict,
        w_blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_passes() {
        let report = paired_eigenvalue_test(&MetricLieAlgebra::abelian(4)).unwrap();
        assert_eq!(report.verdict, ObstructionVerdict::Passes);
        assert_eq!(report.full_operator.gcd_degree, 5);
        assert_eq!(report.w_blocks.len(), 6);
    }

    #[test]
    fn heisenberg_not_einstein() {
        let alg = MetricLieAlgebra::from_brackets(3, [(0, 1, 2, crate::Scalar::one())], None).unwrap();
        let report = paired_eigenvalue_test(&alg).unwrap();
        assert!(matches!(report.verdict, ObstructionVerdict::NotApplicable { .. }));
    }
}

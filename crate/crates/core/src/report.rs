//! Serializable reports for the command-line tool. Numbers are rendered
//! either exactly (scalar grammar strings) or as floats.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{MetricLieAlgebra, Violation};
use crate::catalog;
use crate::complex::{
    adapted_check, adapted_sampling_integrability, compatibility_check, dual_b_lemma_check, integrability_check,
    superminimal_check, AdaptedCheck, AlmostComplexStructure, SamplingReport,
};
use crate::curvature::{einstein_from, ricci_from, riemann, EinsteinVerdict, RicciMatrix};
use crate::error::Result;
use crate::foliation::{
    classify, oneill_a, oneill_identity_check, ricci_condition_check, subalgebra_check, AdaptedFrame, FoliationFlags,
    FoliationSplit, SubalgebraCheck,
};
use crate::linalg::Matrix;
use crate::obstruction::{paired_eigenvalue_test_with, ObstructionVerdict, SpectralData, WBlockAnalysis};
use crate::poly::ExactPolynomial;
use crate::roots::{SpectrumEntry, DEFAULT_ROOT_TOLERANCE};
use crate::scalar::Scalar;
use crate::wedge::{
    block_split, operator_from_riemann, theta_independence_check, ThetaCheck, ThetaIdentity, WedgeBasis,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Exact(String),
    Float(f64),
}

impl Num {
    /// Float value of either rendering.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Num::Exact(s) => s.parse::<Scalar>().ok().map(|x| x.to_f64()),
            Num::Float(x) => Some(*x),
        }
    }
}

/// Rendering options shared by all reports.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Render {
    pub float: bool,
    /// Root refinement width, and the magnitude below which floats print as 0.
    pub tol: f64,
}

impl Default for Render {
    fn default() -> Self {
        Render {
            float: false,
            tol: DEFAULT_ROOT_TOLERANCE,
        }
    }
}

impl Render {
    pub fn num(&self, s: &Scalar) -> Num {
        if self.float {
            let x = s.to_f64();
            Num::Float(if x.abs() < self.tol { 0.0 } else { x })
        } else {
            Num::Exact(s.to_string())
        }
    }

    pub fn vec(&self, v: &[Scalar]) -> Vec<Num> {
        v.iter().map(|s| self.num(s)).collect()
    }

    pub fn matrix(&self, m: &Matrix<Scalar>) -> Vec<Vec<Num>> {
        (0..m.rows()).map(|i| self.vec(m.row(i))).collect()
    }

    pub fn poly(&self, p: &ExactPolynomial) -> Vec<Num> {
        self.vec(p.coeffs())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketLine {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketLine>,
    pub valid: bool,
    pub violations: Vec<String>,
}

fn describe_violation(v: &Violation) -> String {
    match v {
        Violation::Antisymmetry { i, j, k, defect } => {
            format!("antisymmetry fails: c^{k}_({i},{j}) + c^{k}_({j},{i}) = {defect}")
        }
        Violation::Jacobi { i, j, k, l, defect } => {
            format!("Jacobi fails for ({i},{j},{k}): component e{l} of the cyclic sum is {defect}")
        }
    }
}

pub fn validate_report(alg: &MetricLieAlgebra, r: &Render) -> ValidateReport {
    let n = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = alg.c(i, j, k);
                if !c.is_zero() {
                    brackets.push(BracketLine {
                        i,
                        j,
                        k,
                        coeff: r.num(c),
                    });
                }
            }
        }
    }
    let validation = alg.validate();
    ValidateReport {
        dim: n,
        labels: alg.labels().to_vec(),
        brackets,
        valid: validation.is_valid(),
        violations: validation.violations.iter().map(describe_violation).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureComponent {
    pub indices: [usize; 4],
    pub labels: String,
    pub value: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub convention: String,
    pub flat: bool,
    /// Nonzero `R_ijkl` with `i < j`, `k < l`, `(i,j) ≤ (k,l)`.
    pub components: Vec<CurvatureComponent>,
}

pub fn curvature_report(alg: &MetricLieAlgebra, r: &Render) -> Result<CurvatureReport> {
    let rt = riemann(alg)?;
    let n = alg.dim();
    let mut components = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in i..n {
                for l in k + 1..n {
                    if (k, l) < (i, j) {
                        continue;
                    }
                    let v = rt.get(i, j, k, l);
                    if !v.is_zero() {
                        components.push(CurvatureComponent {
                            indices: [i, j, k, l],
                            labels: format!("R({},{},{},{})", alg.label(i), alg.label(j), alg.label(k), alg.label(l)),
                            value: r.num(v),
                        });
                    }
                }
            }
        }
    }
    Ok(CurvatureReport {
        convention: "R_ijkl = <R(e_i,e_j)e_k, e_l>".into(),
        flat: components.is_empty(),
        components,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EinsteinSummary {
    pub einstein: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<Num>,
    /// Entry breaking proportionality; `(0, i)` with `diagonal` compares
    /// `Ric(e_0,e_0)` and `Ric(e_i,e_i)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<bool>,
}

pub fn einstein_summary(v: &EinsteinVerdict, r: &Render) -> EinsteinSummary {
    match v {
        EinsteinVerdict::Einstein { constant } => EinsteinSummary {
            einstein: true,
            constant: Some(r.num(constant)),
            witness: None,
            diagonal: None,
        },
        EinsteinVerdict::NotEinstein { witness, diagonal } => EinsteinSummary {
            einstein: false,
            constant: None,
            witness: Some([witness.0, witness.1]),
            diagonal: Some(*diagonal),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RicciReport {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<Num>>,
    pub einstein: EinsteinSummary,
}

fn ricci_matrix(alg: &MetricLieAlgebra) -> Result<RicciMatrix> {
    Ok(ricci_from(&riemann(alg)?))
}

pub fn ricci_report(alg: &MetricLieAlgebra, r: &Render) -> Result<RicciReport> {
    let ric = ricci_matrix(alg)?;
    Ok(RicciReport {
        labels: alg.labels().to_vec(),
        matrix: r.matrix(ric.matrix()),
        einstein: einstein_summary(&einstein_from(&ric), r),
    })
}

pub fn einstein_report(alg: &MetricLieAlgebra, r: &Render) -> Result<EinsteinSummary> {
    Ok(einstein_summary(&einstein_from(&ricci_matrix(alg)?), r))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorReport {
    pub basis: Vec<String>,
    pub pairs: Vec<[usize; 2]>,
    pub matrix: Vec<Vec<Num>>,
}

pub fn operator_report(alg: &MetricLieAlgebra, basis: &WedgeBasis, r: &Render) -> Result<OperatorReport> {
    let q = operator_from_riemann(&riemann(alg)?, basis);
    Ok(OperatorReport {
        basis: basis.labels(alg),
        pairs: basis.pairs().iter().map(|&(i, j)| [i, j]).collect(),
        matrix: r.matrix(q.matrix()),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagsSummary {
    pub subalgebra: bool,
    pub totally_geodesic: bool,
    pub minimal: bool,
    pub conformal: bool,
    pub riemannian: bool,
    /// `ν(V)` per vertical basis vector, when conformal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<Num>>,
}

pub fn flags_summary(f: &FoliationFlags, r: &Render) -> FlagsSummary {
    FlagsSummary {
        subalgebra: f.subalgebra,
        totally_geodesic: f.totally_geodesic,
        minimal: f.minimal,
        conformal: f.is_conformal(),
        riemannian: f.riemannian,
        nu: f.conformal.as_ref().map(|c| r.vec(&c.nu)),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorEntry {
    pub args: [String; 2],
    pub value: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ASummary {
    pub grad_ln_lambda: Vec<Num>,
    pub first_identity_holds: bool,
    pub antisymmetry_holds: bool,
    /// Nonzero `A_X Y` on horizontal basis pairs.
    pub entries: Vec<TensorEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RicciConditionSummary {
    pub ric_xx: Num,
    pub ric_yy: Num,
    pub ric_xy: Num,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaSummary {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ThetaWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThetaWitness {
    pub u: String,
    pub v: String,
    pub identity: String,
    pub lhs: Num,
    pub rhs: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub second_fundamental_form_checked: usize,
    pub second_fundamental_form_holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrability_tensor_checked: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrability_tensor_holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoliationReport {
    pub vertical: Vec<String>,
    pub horizontal: Vec<String>,
    pub subalgebra: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra_witness: Option<BracketLine>,
    pub flags: FlagsSummary,
    /// Nonzero `B_U V` on vertical basis pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub second_fundamental_form: Option<Vec<TensorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oneill_a: Option<ASummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci_condition: Option<RicciConditionSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_invariant: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_independence: Option<ThetaSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentitySummary>,
}

pub fn foliation_report(alg: &MetricLieAlgebra, split: &FoliationSplit, r: &Render) -> Result<FoliationReport> {
    let names = |v: &[usize]| v.iter().map(|&i| alg.label(i).to_string()).collect::<Vec<_>>();
    let flags = classify(alg, split)?;
    let witness = match subalgebra_check(alg, split) {
        SubalgebraCheck::Closed => None,
        SubalgebraCheck::NotClosed { u, v, k, coeff } => Some(BracketLine {
            i: u,
            j: v,
            k,
            coeff: r.num(&coeff),
        }),
    };
    let frame = AdaptedFrame::new(alg, split)?;
    let pair_entries = |idx: &[usize], f: &dyn Fn(usize, usize) -> Vec<Scalar>| {
        let mut out = Vec::new();
        for &a in idx {
            for &b in idx {
                let v = f(a, b);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(TensorEntry {
                        args: [alg.label(a).to_string(), alg.label(b).to_string()],
                        value: r.vec(&v),
                    });
                }
            }
        }
        out
    };
    let b = flags
        .subalgebra
        .then(|| pair_entries(split.vertical(), &|u, v| frame.b(&frame.e(u), &frame.e(v))));
    let a = if flags.is_conformal() {
        let a = oneill_a(alg, split)?;
        Some(ASummary {
            grad_ln_lambda: r.vec(&a.grad_ln_lambda),
            first_identity_holds: a.first_identity_holds,
            antisymmetry_holds: a.antisymmetry_holds,
            entries: pair_entries(split.horizontal(), &|x, y| a.get(x, y).clone()),
        })
    } else {
        None
    };
    let codim2 = split.horizontal().len() == 2 && alg.dim() >= 2;
    let (ricci_condition, block_invariant, theta) = if codim2 {
        let rc = ricci_condition_check(alg, split)?;
        let q = operator_from_riemann(&frame.riemann(), &WedgeBasis::lexicographic(alg.dim()));
        let inv = block_split(&q, split.vertical())?.is_invariant();
        let theta = match theta_independence_check(&q, split.vertical())? {
            ThetaCheck::Holds => ThetaSummary {
                holds: true,
                witness: None,
            },
            ThetaCheck::Fails {
                u,
                v,
                identity,
                lhs,
                rhs,
            } => ThetaSummary {
                holds: false,
                witness: Some(ThetaWitness {
                    u: alg.label(u).to_string(),
                    v: alg.label(v).to_string(),
                    identity: match identity {
                        ThetaIdentity::EqualDiagonal => "equal_diagonal".into(),
                        ThetaIdentity::VanishingCross => "vanishing_cross".into(),
                    },
                    lhs: r.num(&lhs),
                    rhs: r.num(&rhs),
                }),
            },
        };
        (
            Some(RicciConditionSummary {
                holds: rc.holds(),
                ric_xx: r.num(&rc.ric_xx),
                ric_yy: r.num(&rc.ric_yy),
                ric_xy: r.num(&rc.ric_xy),
            }),
            Some(inv),
            Some(theta),
        )
    } else {
        (None, None, None)
    };
    let identities = if flags.subalgebra && alg.dim() >= 2 {
        let ids = oneill_identity_check(alg, split)?;
        let third = ids.integrability_tensor_identity.as_ref();
        Some(IdentitySummary {
            second_fundamental_form_checked: ids.second_fundamental_form_identity.checked,
            second_fundamental_form_holds: ids.second_fundamental_form_identity.holds(),
            integrability_tensor_checked: third.map(|t| t.checked),
            integrability_tensor_holds: third.map(|t| t.holds()),
        })
    } else {
        None
    };
    Ok(FoliationReport {
        vertical: names(split.vertical()),
        horizontal: names(split.horizontal()),
        subalgebra: flags.subalgebra,
        subalgebra_witness: witness,
        flags: flags_summary(&flags, r),
        second_fundamental_form: b,
        oneill_a: a,
        ricci_condition,
        block_invariant,
        theta_independence: theta,
        identities,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanLine {
    pub vertical: Vec<String>,
    pub indices: Vec<usize>,
    pub flags: FlagsSummary,
}

pub fn scan_report(alg: &MetricLieAlgebra, r: &Render) -> Result<Vec<ScanLine>> {
    Ok(crate::foliation::coordinate_subalgebra_scan(alg)?
        .into_iter()
        .map(|e| ScanLine {
            vertical: e.vertical.iter().map(|&i| alg.label(i).to_string()).collect(),
            indices: e.vertical,
            flags: flags_summary(&e.flags, r),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
    pub charpoly: Vec<Num>,
    pub charpoly_text: String,
    pub gcd: Vec<Num>,
    pub gcd_text: String,
    pub gcd_degree: usize,
    pub spectrum: Vec<SpectrumEntry>,
}

fn spectral_summary(d: &SpectralData, r: &Render) -> SpectralSummary {
    SpectralSummary {
        charpoly: r.poly(&d.charpoly),
        charpoly_text: d.charpoly.to_string(),
        gcd: r.poly(&d.gcd),
        gcd_text: d.gcd.to_string(),
        gcd_degree: d.gcd_degree,
        spectrum: d.spectrum.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WBlockSummary {
    pub vertical: Vec<String>,
    pub invariant: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hermitian_commutes: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinants_agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hermitian_charpoly: Option<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionSummary {
    pub einstein: EinsteinSummary,
    pub required_pairs: usize,
    pub full_operator: SpectralSummary,
    /// `obstructed`, `passes` or `not_applicable`. A pass is a necessary
    /// condition only.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub w_blocks: Vec<WBlockSummary>,
}

fn w_block_summary(alg: &MetricLieAlgebra, w: &WBlockAnalysis, r: &Render) -> WBlockSummary {
    WBlockSummary {
        vertical: w.vertical.iter().map(|&i| alg.label(i).to_string()).collect(),
        invariant: w.invariant,
        spectral: w.spectral.as_ref().map(|d| spectral_summary(d, r)),
        hermitian_commutes: w.hermitian_commutes,
        determinants_agree: w.determinants_agree,
        hermitian_charpoly: w.hermitian_char_poly.as_ref().map(|p| r.poly(p)),
    }
}

pub fn obstruction_report(alg: &MetricLieAlgebra, r: &Render) -> Result<ObstructionSummary> {
    let rep = paired_eigenvalue_test_with(alg, r.tol)?;
    let (verdict, reason) = match &rep.verdict {
        ObstructionVerdict::Obstructed => ("obstructed".to_string(), None),
        ObstructionVerdict::Passes => ("passes".to_string(), None),
        ObstructionVerdict::NotApplicable { reason } => ("not_applicable".to_string(), Some(reason.clone())),
    };
    Ok(ObstructionSummary {
        einstein: einstein_summary(&rep.einstein, r),
        required_pairs: rep.required_pairs,
        full_operator: spectral_summary(&rep.full_operator, r),
        verdict,
        reason,
        w_blocks: rep.w_blocks.iter().map(|w| w_block_summary(alg, w, r)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NijenhuisLine {
    pub z: String,
    pub w: String,
    pub value: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub vertical: Vec<String>,
    pub adapted: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adapted_witness: Option<String>,
    pub integrable: bool,
    pub nijenhuis_failures: Vec<NijenhuisLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compatible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superminimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_b_lemma_holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci_condition_holds: Option<bool>,
}

pub fn complex_report(
    alg: &MetricLieAlgebra,
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
    r: &Render,
) -> Result<ComplexReport> {
    let adapted = adapted_check(j, split)?;
    let integ = integrability_check(alg, j)?;
    let failures = integ
        .failures
        .iter()
        .map(|f| NijenhuisLine {
            z: alg.label(f.z).to_string(),
            w: alg.label(f.w).to_string(),
            value: r.vec(&f.value),
        })
        .collect();
    let mut out = ComplexReport {
        vertical: split.labels(alg),
        adapted: adapted.is_adapted(),
        adapted_witness: match &adapted {
            AdaptedCheck::Adapted => None,
            AdaptedCheck::Fails { index, .. } => Some(alg.label(*index).to_string()),
        },
        integrable: integ.is_integrable(),
        nijenhuis_failures: failures,
        compatible: None,
        superminimal: None,
        dual_b_lemma_holds: None,
        ricci_condition_holds: None,
    };
    if !adapted.is_adapted() {
        return Ok(out);
    }
    out.superminimal = Some(superminimal_check(alg, j, split)?.is_superminimal());
    out.ricci_condition_holds = Some(ricci_condition_check(alg, split)?.holds());
    if subalgebra_check(alg, split).is_closed() {
        let compatible = compatibility_check(alg, j, split)?.is_compatible();
        out.compatible = Some(compatible);
        if compatible {
            out.dual_b_lemma_holds = Some(dual_b_lemma_check(alg, j, split)?.holds());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplingSummary {
    pub samples: usize,
    pub seed: u64,
    pub w: String,
    pub target: String,
    pub integrable: usize,
    pub reductions_hold: bool,
    pub all_nonzero: bool,
    /// `N_J(W, X_last)` per sample.
    pub values: Vec<Vec<Num>>,
}

pub fn sampling_report(
    alg: &MetricLieAlgebra,
    split: &FoliationSplit,
    samples: usize,
    seed: u64,
    r: &Render,
) -> Result<SamplingSummary> {
    let rep: SamplingReport = adapted_sampling_integrability(alg, split, samples, seed)?;
    Ok(SamplingSummary {
        samples: rep.samples,
        seed: rep.seed,
        w: alg.label(rep.w).to_string(),
        target: alg.label(rep.target).to_string(),
        integrable: rep.integrable,
        reductions_hold: rep.all_reductions_hold(),
        all_nonzero: rep.certificates.iter().all(|c| c.nonzero),
        values: rep.certificates.iter().map(|c| r.vec(&c.nijenhuis)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FullReport {
    pub algebra: ValidateReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curvature: Option<CurvatureReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ricci: Option<RicciReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<Vec<ScanLine>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionSummary>,
    pub foliations: Vec<FoliationReport>,
}

/// Validation, then Ricci/Einstein and the requested foliations; with `all`
/// also curvature, the operator, the scan, the obstruction test, and the
/// catalog's default splits when `catalog_name` is given.
pub fn full_report(
    alg: &MetricLieAlgebra,
    catalog_name: Option<&str>,
    foliations: &[FoliationSplit],
    all: bool,
    r: &Render,
) -> Result<FullReport> {
    let algebra = validate_report(alg, r);
    alg.ensure_valid()?;
    let curv_ok = alg.dim() >= 2;
    let mut splits: Vec<FoliationSplit> = foliations.to_vec();
    if all {
        if let Some(name) = catalog_name {
            for v in catalog::default_splits(name, alg) {
                let s = FoliationSplit::new(alg.dim(), &v)?;
                if !splits.contains(&s) {
                    splits.push(s);
                }
            }
        }
    }
    let basis = match catalog_name {
        Some(name) => catalog::display_basis(name, alg)?,
        None => None,
    }
    .unwrap_or_else(|| WedgeBasis::lexicographic(alg.dim()));
    Ok(FullReport {
        algebra,
        curvature: if all && curv_ok {
            Some(curvature_report(alg, r)?)
        } else {
            None
        },
        ricci: if curv_ok { Some(ricci_report(alg, r)?) } else { None },
        operator: if all && curv_ok {
            Some(operator_report(alg, &basis, r)?)
        } else {
            None
        },
        scan: if all && alg.dim() >= 3 {
            Some(scan_report(alg, r)?)
        } else {
            None
        },
        obstruction: if all && curv_ok {
            Some(obstruction_report(alg, r)?)
        } else {
            None
        },
        foliations: splits
            .iter()
            .map(|s| foliation_report(alg, s, r))
            .collect::<Result<_>>()?,
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

/// Indented `key: value` rendering of a report.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut out = String::new();
    write_text(&v, 0, &mut out);
    out
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(|i| inline(i).expect("scalar")).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn write_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match inline(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(val, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_text(item, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).expect("scalar"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_stable() {
        let alg = catalog::nikonorov4();
        let split = FoliationSplit::new(5, &[0, 3, 4]).unwrap();
        for float in [false, true] {
            let r = Render {
                float,
                ..Render::default()
            };
            let rep = full_report(&alg, Some("nikonorov4"), &[split.clone()], false, &r).unwrap();
            let text = to_json(&rep);
            let back: FullReport = serde_json::from_str(&text).unwrap();
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn text_rendering() {
        let r = Render::default();
        let rep = einstein_report(&catalog::so3(), &r).unwrap();
        assert_eq!(to_text(&rep), "einstein: true\nconstant: 1/2\n");
    }
}

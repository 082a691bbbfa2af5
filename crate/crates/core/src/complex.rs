//! Left-invariant almost complex structures and their interaction with a
//! codimension-2 foliation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::foliation::{subalgebra_check, AdaptedFrame, FoliationSplit, SubalgebraCheck};
use crate::linalg::{add, basis_vector, dot, is_zero_vector, neg, sub, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// `J` as a matrix acting on coefficient columns: `J e_j = Σ_i J[i][j] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    j: Matrix<Scalar>,
}

impl AlmostComplexStructure {
    pub fn new(j: Matrix<Scalar>) -> Result<Self> {
        if !j.is_square() {
            return Err(Error::InvalidComplexStructure("matrix is not square".into()));
        }
        let n = j.rows();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        if j.matmul(&j) != -&Matrix::identity(n) {
            return Err(Error::InvalidComplexStructure("J² ≠ −I".into()));
        }
        if j.transpose() != -&j {
            return Err(Error::InvalidComplexStructure("J is not orthogonal (Jᵀ ≠ −J)".into()));
        }
        Ok(AlmostComplexStructure { j })
    }

    /// `J e_a = s·e_b`, `J e_b = −s·e_a` for each listed `(a, b, s)`.
    pub fn from_images(dim: usize, pairs: &[(usize, usize, i64)]) -> Result<Self> {
        let mut j = Matrix::zeros(dim, dim);
        for &(a, b, s) in pairs {
            if a >= dim || b >= dim {
                return Err(Error::InvalidComplexStructure(format!(
                    "index out of range for dimension {dim}"
                )));
            }
            j[(b, a)] = Scalar::from_integer(s);
            j[(a, b)] = Scalar::from_integer(-s);
        }
        AlmostComplexStructure::new(j)
    }

    /// `J e_{2k} = e_{2k+1}`.
    pub fn standard(dim: usize) -> Result<Self> {
        let pairs: Vec<_> = (0..dim / 2).map(|k| (2 * k, 2 * k + 1, 1)).collect();
        if dim % 2 == 1 {
            return Err(Error::OddDimension(dim));
        }
        AlmostComplexStructure::from_images(dim, &pairs)
    }

    /// A JSON array of rows, or whitespace/comma separated rows one per line.
    /// Entries use the scalar grammar.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<Scalar>> = match serde_json::from_str::<Vec<Vec<Scalar>>>(text) {
            Ok(rows) => rows,
            Err(_) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| {
                    l.split(|c: char| c == ',' || c.is_whitespace())
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<Scalar>().map_err(Error::from))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?,
        };
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidComplexStructure("expected a square matrix".into()));
        }
        AlmostComplexStructure::new(Matrix::from_rows(rows))
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn matrix(&self) -> &Matrix<Scalar> {
        &self.j
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.j.apply(v)
    }

    pub fn negated(&self) -> Self {
        AlmostComplexStructure { j: -&self.j }
    }
}

fn ensure_dim(alg: &MetricLieAlgebra, j: &AlmostComplexStructure) -> Result<()> {
    if alg.dim() != j.dim() {
        return Err(Error::InvalidComplexStructure(format!(
            "J has size {}, algebra has dimension {}",
            j.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AdaptedCheck {
    Adapted,
    /// `J e_index` has a component outside the space containing `e_index`.
    Fails {
        index: usize,
        image: Vector,
    },
}

impl AdaptedCheck {
    pub fn is_adapted(&self) -> bool {
        matches!(self, AdaptedCheck::Adapted)
    }
}

pub fn adapted_check(j: &AlmostComplexStructure, split: &FoliationSplit) -> Result<AdaptedCheck> {
    if split.dim() % 2 == 1 {
        return Err(Error::OddDimension(split.dim()));
    }
    split.horizontal_pair()?;
    if j.dim() != split.dim() {
        return Err(Error::InvalidComplexStructure(
            "J and split have different dimensions".into(),
        ));
    }
    for i in 0..split.dim() {
        let image = j.apply(&basis_vector(split.dim(), i));
        let leak = if split.is_vertical(i) {
            split.horizontal_part(&image)
        } else {
            split.vertical_part(&image)
        };
        if !is_zero_vector(&leak) {
            return Ok(AdaptedCheck::Fails { index: i, image });
        }
    }
    Ok(AdaptedCheck::Adapted)
}

fn require_adapted(j: &AlmostComplexStructure, split: &FoliationSplit) -> Result<()> {
    if adapted_check(j, split)?.is_adapted() {
        Ok(())
    } else {
        Err(Error::NotAdapted)
    }
}

/// `N_J(Z,W) = [Z,W] + J[JZ,W] + J[Z,JW] − [JZ,JW]`.
pub fn nijenhuis(alg: &MetricLieAlgebra, j: &AlmostComplexStructure, z: &[Scalar], w: &[Scalar]) -> Vector {
    let jz = j.apply(z);
    let jw = j.apply(w);
    let t = add(
        &alg.bracket(z, w),
        &j.apply(&add(&alg.bracket(&jz, w), &alg.bracket(z, &jw))),
    );
    sub(&t, &alg.bracket(&jz, &jw))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NijenhuisWitness {
    pub z: usize,
    pub w: usize,
    pub value: Vector,
}

/// Every basis pair `z < w` on which `N_J` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegrabilityCheck {
    pub failures: Vec<NijenhuisWitness>,
}

impl IntegrabilityCheck {
    pub fn is_integrable(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fails_on(&self, z: usize, w: usize) -> bool {
        self.failures
            .iter()
            .any(|f| (f.z, f.w) == (z, w) || (f.z, f.w) == (w, z))
    }
}

pub fn integrability_check(alg: &MetricLieAlgebra, j: &AlmostComplexStructure) -> Result<IntegrabilityCheck> {
    ensure_dim(alg, j)?;
    let n = alg.dim();
    let mut failures = Vec::new();
    for z in 0..n {
        for w in z + 1..n {
            let value = nijenhuis(alg, j, &basis_vector(n, z), &basis_vector(n, w));
            if !is_zero_vector(&value) {
                failures.push(NijenhuisWitness { z, w, value });
            }
        }
    }
    Ok(IntegrabilityCheck { failures })
}

/// A bilinear map `𝒱 × 𝒱 → ℋ` given on vertical basis pairs, extended
/// bilinearly after projecting its arguments to `𝒱`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalForm {
    dim: usize,
    vertical: Vec<usize>,
    table: Vec<Vector>,
}

impl VerticalForm {
    pub fn from_fn(split: &FoliationSplit, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let vertical = split.vertical().to_vec();
        let mut table = Vec::with_capacity(vertical.len() * vertical.len());
        for &u in &vertical {
            for &v in &vertical {
                table.push(split.horizontal_part(&f(u, v)));
            }
        }
        VerticalForm {
            dim: split.dim(),
            vertical,
            table,
        }
    }

    /// The second fundamental form `ℋ(∇_U V)`.
    pub fn second_fundamental_form(frame: &AdaptedFrame<'_>) -> Self {
        VerticalForm::from_fn(frame.split, |u, v| frame.b(&frame.e(u), &frame.e(v)))
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let m = self.vertical.len();
        let mut out = zero_vector(self.dim);
        for (a, &u) in self.vertical.iter().enumerate() {
            if x[u].is_zero() {
                continue;
            }
            for (b, &v) in self.vertical.iter().enumerate() {
                if y[v].is_zero() {
                    continue;
                }
                let c = &x[u] * &y[v];
                for (o, t) in out.iter_mut().zip(&self.table[a * m + b]) {
                    *o = &*o + &(&c * t);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// `B*_U X`, the vertical vector with `⟨B*_U X, V⟩ = ⟨B_U V, X⟩`.
    pub fn dual(&self, u: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for &v in &self.vertical {
            out[v] = dot(&self.eval(u, &basis_vector(self.dim, v)), x);
        }
        out
    }

    /// `B(U,V) = B₀(U,V) − J B₀(JU,V) − J B₀(U,JV) − B₀(JU,JV)`, which satisfies
    /// `B(JU,V) = J B(U,V)` for any `B₀` and is symmetric when `B₀` is.
    pub fn j_symmetrized(&self, j: &AlmostComplexStructure) -> Self {
        let n = self.dim;
        let mut table = Vec::with_capacity(self.table.len());
        for &u in &self.vertical {
            for &v in &self.vertical {
                let (eu, ev) = (basis_vector(n, u), basis_vector(n, v));
                let (ju, jv) = (j.apply(&eu), j.apply(&ev));
                let t = sub(&self.eval(&eu, &ev), &j.apply(&self.eval(&ju, &ev)));
                let t = sub(&t, &j.apply(&self.eval(&eu, &jv)));
                table.push(sub(&t, &self.eval(&ju, &jv)));
            }
        }
        VerticalForm {
            dim: n,
            vertical: self.vertical.clone(),
            table,
        }
    }

    /// Symmetric form with small random integer entries.
    pub fn random_symmetric(split: &FoliationSplit, rng: &mut impl Rng) -> Self {
        let m = split.vertical().len();
        let n = split.dim();
        let mut draws: Vec<Option<Vector>> = vec![None; m * m];
        let vertical = split.vertical().to_vec();
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let v = if b < a {
                    draws[b * m + a].clone().expect("filled")
                } else {
                    let mut v = zero_vector(n);
                    for &h in split.horizontal() {
                        v[h] = Scalar::from_integer(rng.gen_range(-3..=3));
                    }
                    v
                };
                draws[a * m + b] = Some(v.clone());
                table.push(v);
            }
        }
        VerticalForm {
            dim: n,
            vertical,
            table,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompatibilityIdentity {
    /// `J B_U V = B_{JU} V`
    FirstSlot,
    /// `J B_U V = B_U JV`
    SecondSlot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum CompatibilityCheck {
    Compatible,
    Fails {
        u: usize,
        v: usize,
        identity: CompatibilityIdentity,
        lhs: Vector,
        rhs: Vector,
    },
}

impl CompatibilityCheck {
    pub fn is_compatible(&self) -> bool {
        matches!(self, CompatibilityCheck::Compatible)
    }
}

pub fn form_compatibility(
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
    form: &VerticalForm,
) -> CompatibilityCheck {
    let n = split.dim();
    for &u in split.vertical() {
        for &v in split.vertical() {
            let (eu, ev) = (basis_vector(n, u), basis_vector(n, v));
            let lhs = j.apply(&form.eval(&eu, &ev));
            let first = form.eval(&j.apply(&eu), &ev);
            if lhs != first {
                return CompatibilityCheck::Fails {
                    u,
                    v,
                    identity: CompatibilityIdentity::FirstSlot,
                    lhs,
                    rhs: first,
                };
            }
            let second = form.eval(&eu, &j.apply(&ev));
            if lhs != second {
                return CompatibilityCheck::Fails {
                    u,
                    v,
                    identity: CompatibilityIdentity::SecondSlot,
                    lhs,
                    rhs: second,
                };
            }
        }
    }
    CompatibilityCheck::Compatible
}

fn require_subalgebra(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<()> {
    match subalgebra_check(alg, split) {
        SubalgebraCheck::Closed => Ok(()),
        SubalgebraCheck::NotClosed { u, v, k, .. } => Err(Error::NotSubalgebra(u, v, k)),
    }
}

pub fn compatibility_check(
    alg: &MetricLieAlgebra,
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
) -> Result<CompatibilityCheck> {
    ensure_dim(alg, j)?;
    require_adapted(j, split)?;
    require_subalgebra(alg, split)?;
    let frame = AdaptedFrame::new(alg, split)?;
    Ok(form_compatibility(
        j,
        split,
        &VerticalForm::second_fundamental_form(&frame),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SuperminimalCheck {
    Superminimal,
    /// `(∇_{e_u} J) e_k = defect ≠ 0`.
    Fails {
        u: usize,
        k: usize,
        defect: Vector,
    },
}

impl SuperminimalCheck {
    pub fn is_superminimal(&self) -> bool {
        matches!(self, SuperminimalCheck::Superminimal)
    }
}

pub fn superminimal_check(
    alg: &MetricLieAlgebra,
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
) -> Result<SuperminimalCheck> {
    ensure_dim(alg, j)?;
    require_adapted(j, split)?;
    let frame = AdaptedFrame::new(alg, split)?;
    let n = alg.dim();
    for &u in split.vertical() {
        let eu = basis_vector(n, u);
        for k in 0..n {
            let ek = basis_vector(n, k);
            let defect = sub(&frame.nabla(&eu, &j.apply(&ek)), &j.apply(&frame.nabla(&eu, &ek)));
            if !is_zero_vector(&defect) {
                return Ok(SuperminimalCheck::Fails { u, k, defect });
            }
        }
    }
    Ok(SuperminimalCheck::Superminimal)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualBFailure {
    pub u: usize,
    pub x: usize,
    /// `B*_U JX`
    pub at_jx: Vector,
    /// `−B*_{JU} X`
    pub at_ju: Vector,
    /// `J B*_U X`
    pub j_applied: Vector,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualBLemmaReport {
    pub checked: usize,
    pub failures: Vec<DualBFailure>,
}

impl DualBLemmaReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn dual_b_lemma_with(
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
    dual: impl Fn(&[Scalar], &[Scalar]) -> Vector,
) -> DualBLemmaReport {
    let n = split.dim();
    let mut report = DualBLemmaReport::default();
    for &u in split.vertical() {
        let eu = basis_vector(n, u);
        let ju = j.apply(&eu);
        for &x in split.horizontal() {
            let ex = basis_vector(n, x);
            let at_jx = dual(&eu, &j.apply(&ex));
            let at_ju = neg(&dual(&ju, &ex));
            let j_applied = j.apply(&dual(&eu, &ex));
            report.checked += 1;
            if at_jx != at_ju || at_jx != j_applied {
                report.failures.push(DualBFailure {
                    u,
                    x,
                    at_jx,
                    at_ju,
                    j_applied,
                });
            }
        }
    }
    report
}

/// `B*_U JX = −B*_{JU} X = J B*_U X` for an abstract compatible form.
pub fn form_dual_b_lemma(
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
    form: &VerticalForm,
) -> Result<DualBLemmaReport> {
    if !form_compatibility(j, split, form).is_compatible() {
        return Err(Error::NotCompatible);
    }
    Ok(dual_b_lemma_with(j, split, |u, x| form.dual(u, x)))
}

/// The same identities with `B*_U X = −𝒱(∇_U X)` taken from the connection.
pub fn dual_b_lemma_check(
    alg: &MetricLieAlgebra,
    j: &AlmostComplexStructure,
    split: &FoliationSplit,
) -> Result<DualBLemmaReport> {
    if !compatibility_check(alg, j, split)?.is_compatible() {
        return Err(Error::NotCompatible);
    }
    let frame = AdaptedFrame::new(alg, split)?;
    Ok(dual_b_lemma_with(j, split, |u, x| frame.b_star(u, x)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleCertificate {
    /// `J X = sign·Y` on the horizontal pair.
    pub horizontal_sign: i64,
    /// Whether the vertical structure has the opposite orientation to the
    /// standard one.
    pub reflected: bool,
    pub nijenhuis: Vector,
    /// `J[W, J X_last]`
    pub reduced: Vector,
    pub reduction_holds: bool,
    pub nonzero: bool,
    pub integrable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplingReport {
    pub samples: usize,
    pub seed: u64,
    /// Horizontal basis vector paired with the last vertical basis vector.
    pub w: usize,
    pub target: usize,
    pub integrable: usize,
    pub certificates: Vec<SampleCertificate>,
}

impl SamplingReport {
    pub fn all_reductions_hold(&self) -> bool {
        self.certificates.iter().all(|c| c.reduction_holds)
    }
}

/// Rotation by `(a, b) = ((p²−q²)/(p²+q²), 2pq/(p²+q²))` in the plane `(i, j)`.
fn rational_rotation(m: usize, i: usize, j: usize, p: i64, q: i64) -> Matrix<Scalar> {
    let d = p * p + q * q;
    let a = Scalar::ratio(p * p - q * q, d);
    let b = Scalar::ratio(2 * p * q, d);
    let mut r = Matrix::identity(m);
    r[(i, i)] = a.clone();
    r[(j, j)] = a;
    r[(i, j)] = -&b;
    r[(j, i)] = b;
    r
}

/// A random orthogonal complex structure on an even-dimensional space,
/// `O J₀ Oᵀ` with `O` a product of rational plane rotations and `J₀` the
/// standard block rotation, optionally reflected to the other orientation.
pub fn random_complex_block(m: usize, rng: &mut impl Rng) -> (Matrix<Scalar>, bool) {
    let mut j0 = Matrix::zeros(m, m);
    for k in 0..m / 2 {
        j0[(2 * k + 1, 2 * k)] = Scalar::one();
        j0[(2 * k, 2 * k + 1)] = -Scalar::one();
    }
    let reflected = m > 0 && rng.gen_bool(0.5);
    if reflected {
        let mut s = Matrix::identity(m);
        s[(0, 0)] = -Scalar::one();
        j0 = s.matmul(&j0).matmul(&s);
    }
    let mut o = Matrix::identity(m);
    if m >= 2 {
        for _ in 0..m + 1 {
            let i = rng.gen_range(0..m);
            let mut j = rng.gen_range(0..m - 1);
            if j >= i {
                j += 1;
            }
            let (p, q) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            o = o.matmul(&rational_rotation(m, i, j, p, q));
        }
    }
    (o.matmul(&j0).matmul(&o.transpose()), reflected)
}

/// Sample adapted orthogonal almost complex structures and evaluate
/// `N_J(W, X_last)` for `W` the first horizontal and `X_last` the last
/// vertical basis vector, with the exact reduction to `J[W, J X_last]`.
pub fn adapted_sampling_integrability(
    alg: &MetricLieAlgebra,
    split: &FoliationSplit,
    samples: usize,
    seed: u64,
) -> Result<SamplingReport> {
    alg.ensure_valid()?;
    let n = alg.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let (x, y) = split.horizontal_pair()?;
    let vert = split.vertical().to_vec();
    let w = x;
    let target = *vert.last().expect("nonempty vertical");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut integrable = 0;
    let mut certificates = Vec::with_capacity(samples);
    for _ in 0..samples {
        let (block, reflected) = random_complex_block(vert.len(), &mut rng);
        let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut jm = Matrix::zeros(n, n);
        for (a, &u) in vert.iter().enumerate() {
            for (b, &v) in vert.iter().enumerate() {
                jm[(u, v)] = block[(a, b)].clone();
            }
        }
        jm[(y, x)] = Scalar::from_integer(sign);
        jm[(x, y)] = Scalar::from_integer(-sign);
        let j = AlmostComplexStructure::new(jm)?;
        let (ew, et) = (basis_vector(n, w), basis_vector(n, target));
        let value = nijenhuis(alg, &j, &ew, &et);
        let reduced = j.apply(&alg.bracket(&ew, &j.apply(&et)));
        let is_int = integrability_check(alg, &j)?.is_integrable();
        if is_int {
            integrable += 1;
        }
        certificates.push(SampleCertificate {
            horizontal_sign: sign,
            reflected,
            reduction_holds: value == reduced,
            nonzero: !is_zero_vector(&value),
            nijenhuis: value,
            reduced,
            integrable: is_int,
        });
    }
    Ok(SamplingReport {
        samples,
        seed,
        w,
        target,
        integrable,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1_n2() -> MetricLieAlgebra {
        MetricLieAlgebra::from_brackets(
            4,
            [(0, 1, 2, Scalar::one()), (0, 2, 3, Scalar::one())],
            Some(vec!["W".into(), "X1".into(), "X2".into(), "X3".into()]),
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(AlmostComplexStructure::new(Matrix::identity(2)).is_err());
        assert!(matches!(
            AlmostComplexStructure::standard(3),
            Err(Error::OddDimension(3))
        ));
        let j = AlmostComplexStructure::standard(4).unwrap();
        assert_eq!(j.apply(&basis_vector(4, 0)), basis_vector(4, 1));
        let parsed = AlmostComplexStructure::parse("0 -1 0 0\n1 0 0 0\n0 0 0 -1\n0 0 1 0\n").unwrap();
        assert_eq!(parsed, j);
        let parsed = AlmostComplexStructure::parse(r#"[["0","-1"],["1","0"]]"#).unwrap();
        assert_eq!(parsed.dim(), 2);
    }

    #[test]
    fn g1_nijenhuis_value() {
        let alg = g1_n2();
        let j = AlmostComplexStructure::from_images(4, &[(0, 1, 1), (2, 3, 1)]).unwrap();
        // J[W, J X3] = J[W, −X2] = −J X3 = X2
        let n = nijenhuis(&alg, &j, &basis_vector(4, 0), &basis_vector(4, 3));
        assert_eq!(n, basis_vector(4, 2));
        let check = integrability_check(&alg, &j).unwrap();
        assert!(check.fails_on(0, 3));
        assert_eq!(check.failures[0].z, 0);
        assert_eq!(check.failures[0].w, 2);
    }

    #[test]
    fn mixing_j_not_adapted() {
        let split = FoliationSplit::new(4, &[2, 3]).unwrap();
        let j = AlmostComplexStructure::from_images(4, &[(0, 2, 1), (1, 3, 1)]).unwrap();
        assert!(matches!(
            adapted_check(&j, &split).unwrap(),
            AdaptedCheck::Fails { index: 0, .. }
        ));
    }

    #[test]
    fn random_blocks_are_complex() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in [2, 4, 6] {
            let (b, _) = random_complex_block(m, &mut rng);
            assert!(AlmostComplexStructure::new(b).is_ok());
        }
    }

    #[test]
    fn symmetrized_forms_compatible() {
        let split = FoliationSplit::new(6, &[2, 3, 4, 5]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let (block, _) = random_complex_block(4, &mut rng);
            let mut jm = Matrix::zeros(6, 6);
            jm[(1, 0)] = Scalar::one();
            jm[(0, 1)] = -Scalar::one();
            for a in 0..4 {
                for b in 0..4 {
                    jm[(a + 2, b + 2)] = block[(a, b)].clone();
                }
            }
            let j = AlmostComplexStructure::new(jm).unwrap();
            let form = VerticalForm::random_symmetric(&split, &mut rng).j_symmetrized(&j);
            assert!(form_compatibility(&j, &split, &form).is_compatible());
            assert!(form_dual_b_lemma(&j, &split, &form).unwrap().holds());
        }
    }
}

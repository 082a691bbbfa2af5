//! Homogeneous foliations by left translates of a coordinate subalgebra:
//! O'Neill tensors, conformality, and the curvature identities of
//! horizontally conformal submersions.

use serde::{Deserialize, Serialize};

use crate::algebra::MetricLieAlgebra;
use crate::curvature::{connection_unchecked, ricci_from, riemann_from, ConnectionTable, RiemannTensor};
use crate::error::{Error, Result};
use crate::linalg::{add, basis_vector, dot, is_zero_vector, neg, project, scale, sub, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// Vertical index set `𝒱` and its orthogonal complement `ℋ`, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliationSplit {
    dim: usize,
    vertical: Vec<usize>,
    horizontal: Vec<usize>,
}

impl FoliationSplit {
    pub fn new(dim: usize, vertical: &[usize]) -> Result<Self> {
        let mut v = vertical.to_vec();
        v.sort_unstable();
        if let Some(&bad) = v.iter().find(|&&i| i >= dim) {
            return Err(Error::Split(format!("index {bad} out of range for dimension {dim}")));
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Split("repeated vertical index".into()));
        }
        if v.is_empty() || v.len() == dim {
            return Err(Error::Split(
                "vertical and horizontal spaces must both be nonzero".into(),
            ));
        }
        let horizontal = (0..dim).filter(|i| !v.contains(i)).collect();
        Ok(FoliationSplit {
            dim,
            vertical: v,
            horizontal,
        })
    }

    /// Parse a comma-separated list of labels or indices.
    pub fn parse(alg: &MetricLieAlgebra, list: &str) -> Result<Self> {
        FoliationSplit::new(alg.dim(), &alg.resolve_list(list)?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertical(&self) -> &[usize] {
        &self.vertical
    }

    pub fn horizontal(&self) -> &[usize] {
        &self.horizontal
    }

    pub fn is_vertical(&self, i: usize) -> bool {
        self.vertical.contains(&i)
    }

    /// `(X, Y)` when the horizontal space has dimension two.
    pub fn horizontal_pair(&self) -> Result<(usize, usize)> {
        match self.horizontal[..] {
            [x, y] => Ok((x, y)),
            _ => Err(Error::Codimension(self.horizontal.len())),
        }
    }

    pub fn vertical_part(&self, v: &[Scalar]) -> Vector {
        project(v, &self.vertical)
    }

    pub fn horizontal_part(&self, v: &[Scalar]) -> Vector {
        project(v, &self.horizontal)
    }

    pub fn labels(&self, alg: &MetricLieAlgebra) -> Vec<String> {
        self.vertical.iter().map(|&i| alg.label(i).to_string()).collect()
    }
}

/// Left-invariant geometry adapted to a split. All fields are constant
/// combinations of the basis, so tensor derivatives reduce to the connection
/// table with constant projections.
pub struct AdaptedFrame<'a> {
    pub alg: &'a MetricLieAlgebra,
    pub conn: ConnectionTable,
    pub split: &'a FoliationSplit,
}

impl<'a> AdaptedFrame<'a> {
    pub fn new(alg: &'a MetricLieAlgebra, split: &'a FoliationSplit) -> Result<Self> {
        alg.ensure_valid()?;
        if split.dim() != alg.dim() {
            return Err(Error::Split(format!(
                "split is for dimension {}, algebra has dimension {}",
                split.dim(),
                alg.dim()
            )));
        }
        Ok(AdaptedFrame {
            alg,
            conn: connection_unchecked(alg),
            split,
        })
    }

    pub fn e(&self, i: usize) -> Vector {
        basis_vector(self.alg.dim(), i)
    }

    pub fn nabla(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.conn.nabla(x, y)
    }

    /// `B_E F = ℋ(∇_{𝒱E} 𝒱F)`.
    pub fn b(&self, e: &[Scalar], f: &[Scalar]) -> Vector {
        let s = self.split;
        s.horizontal_part(&self.nabla(&s.vertical_part(e), &s.vertical_part(f)))
    }

    /// `A_E F = 𝒱(∇_{ℋE} ℋF)`.
    pub fn a(&self, e: &[Scalar], f: &[Scalar]) -> Vector {
        let s = self.split;
        s.vertical_part(&self.nabla(&s.horizontal_part(e), &s.horizontal_part(f)))
    }

    /// `A*_X F = −ℋ(∇_X 𝒱F)` for horizontal `X`.
    pub fn a_star(&self, x: &[Scalar], f: &[Scalar]) -> Vector {
        let s = self.split;
        neg(&s.horizontal_part(&self.nabla(&s.horizontal_part(x), &s.vertical_part(f))))
    }

    /// `B*_U F = −𝒱(∇_U ℋF)` for vertical `U`.
    pub fn b_star(&self, u: &[Scalar], f: &[Scalar]) -> Vector {
        let s = self.split;
        neg(&s.vertical_part(&self.nabla(&s.vertical_part(u), &s.horizontal_part(f))))
    }

    /// `(∇_U B)_V W = ∇_U(B_V W) − B_{∇_U V} W − B_V(∇_U W)`.
    pub fn nabla_b(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
        let t1 = self.nabla(u, &self.b(v, w));
        let t2 = self.b(&self.nabla(u, v), w);
        let t3 = self.b(v, &self.nabla(u, w));
        sub(&sub(&t1, &t2), &t3)
    }

    /// `(∇_U A)_X Y = ∇_U(A_X Y) − A_{∇_U X} Y − A_X(∇_U Y)`.
    pub fn nabla_a(&self, u: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Vector {
        let t1 = self.nabla(u, &self.a(x, y));
        let t2 = self.a(&self.nabla(u, x), y);
        let t3 = self.a(x, &self.nabla(u, y));
        sub(&sub(&t1, &t2), &t3)
    }

    /// `(L_V g)(X, Y) = ⟨∇_X V, Y⟩ + ⟨∇_Y V, X⟩` on horizontal `X, Y`.
    pub fn lie_derivative(&self, v: &[Scalar], x: &[Scalar], y: &[Scalar]) -> Scalar {
        &dot(&self.nabla(x, v), y) + &dot(&self.nabla(y, v), x)
    }

    /// Matrix of `L_{e_v} g` on the horizontal basis.
    pub fn lie_derivative_matrix(&self, v: usize) -> Matrix<Scalar> {
        let h = self.split.horizontal();
        let ev = self.e(v);
        Matrix::from_fn(h.len(), h.len(), |a, b| {
            self.lie_derivative(&ev, &self.e(h[a]), &self.e(h[b]))
        })
    }

    pub fn riemann(&self) -> RiemannTensor {
        riemann_from(self.alg, &self.conn)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SubalgebraCheck {
    Closed,
    /// `[e_u, e_v]` has coefficient `coeff` along the horizontal `e_k`.
    NotClosed {
        u: usize,
        v: usize,
        k: usize,
        coeff: Scalar,
    },
}

impl SubalgebraCheck {
    pub fn is_closed(&self) -> bool {
        matches!(self, SubalgebraCheck::Closed)
    }
}

pub fn subalgebra_check(alg: &MetricLieAlgebra, split: &FoliationSplit) -> SubalgebraCheck {
    let vert = split.vertical();
    for (a, &u) in vert.iter().enumerate() {
        for &v in &vert[a + 1..] {
            for &k in split.horizontal() {
                let c = alg.c(u, v, k);
                if !c.is_zero() {
                    return SubalgebraCheck::NotClosed {
                        u,
                        v,
                        k,
                        coeff: c.clone(),
                    };
                }
            }
        }
    }
    SubalgebraCheck::Closed
}

fn require_subalgebra(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<()> {
    match subalgebra_check(alg, split) {
        SubalgebraCheck::Closed => Ok(()),
        SubalgebraCheck::NotClosed { u, v, k, .. } => Err(Error::NotSubalgebra(u, v, k)),
    }
}

/// `B_{UV} = ℋ(∇_U V)` on vertical basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondFundamentalForm {
    vertical: Vec<usize>,
    /// Row-major over vertical positions; each entry is a full coefficient vector.
    table: Vec<Vector>,
}

impl SecondFundamentalForm {
    pub fn vertical(&self) -> &[usize] {
        &self.vertical
    }

    fn pos(&self, u: usize) -> usize {
        self.vertical.iter().position(|&x| x == u).expect("vertical index")
    }

    /// `B_{e_u} e_v` for vertical basis indices.
    pub fn get(&self, u: usize, v: usize) -> &Vector {
        &self.table[self.pos(u) * self.vertical.len() + self.pos(v)]
    }

    /// `⟨B_{e_u} e_v, e_x⟩`.
    pub fn component(&self, u: usize, v: usize, x: usize) -> &Scalar {
        &self.get(u, v)[x]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    pub fn is_symmetric(&self) -> bool {
        self.vertical
            .iter()
            .all(|&u| self.vertical.iter().all(|&v| self.get(u, v) == self.get(v, u)))
    }

    /// Mean curvature direction `Σ_U B_U U`.
    pub fn trace(&self) -> Vector {
        let n = self.table.first().map_or(0, Vec::len);
        self.vertical
            .iter()
            .fold(zero_vector(n), |acc, &u| add(&acc, self.get(u, u)))
    }
}

pub fn second_fundamental_form(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<SecondFundamentalForm> {
    require_subalgebra(alg, split)?;
    let frame = AdaptedFrame::new(alg, split)?;
    Ok(direct_b(&frame))
}

fn direct_b(frame: &AdaptedFrame<'_>) -> SecondFundamentalForm {
    let vert = frame.split.vertical().to_vec();
    let mut table = Vec::with_capacity(vert.len() * vert.len());
    for &u in &vert {
        for &v in &vert {
            table.push(frame.b(&frame.e(u), &frame.e(v)));
        }
    }
    SecondFundamentalForm { vertical: vert, table }
}

/// The bracket shortcut `−½(⟨[X,U],V⟩ + ⟨[X,V],U⟩)` for `⟨B_U V, X⟩`. For a
/// subalgebra it equals the negative of the value obtained from the
/// connection; it is kept only as a cross-check.
pub fn b_bracket_shortcut(alg: &MetricLieAlgebra, u: usize, v: usize, x: usize) -> Scalar {
    (alg.c(x, u, v) + alg.c(x, v, u)).div_int(-2)
}

/// The bracket shortcut `−½(⟨[V,X],Y⟩ + ⟨[V,Y],X⟩)`, equal to half of
/// `(L_V g)(X, Y)` for left-invariant fields.
pub fn lie_derivative_bracket_shortcut(alg: &MetricLieAlgebra, v: usize, x: usize, y: usize) -> Scalar {
    (alg.c(v, x, y) + alg.c(v, y, x)).div_int(-2)
}

/// `ν(V)` for each vertical basis vector (in vertical order), defined by
/// `(L_V g)(X, Y) = ν(V)⟨X, Y⟩` on `ℋ`. For a horizontally conformal
/// submersion `ν(V) = −2 V(ln λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConformalData {
    pub nu: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoliationFlags {
    pub subalgebra: bool,
    pub totally_geodesic: bool,
    pub minimal: bool,
    pub conformal: Option<ConformalData>,
    pub riemannian: bool,
}

impl FoliationFlags {
    pub fn is_conformal(&self) -> bool {
        self.conformal.is_some()
    }
}

/// Flags are computed from the direct definitions even when `𝒱` is not
/// bracket-closed; only `subalgebra` is meaningful in that case.
pub fn classify(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<FoliationFlags> {
    let frame = AdaptedFrame::new(alg, split)?;
    let b = direct_b(&frame);
    let mut nu = Vec::with_capacity(split.vertical().len());
    let mut conformal = true;
    for &v in split.vertical() {
        let l = frame.lie_derivative_matrix(v);
        let c = l[(0, 0)].clone();
        if l != Matrix::identity(l.rows()).scale(&c) {
            conformal = false;
            break;
        }
        nu.push(c);
    }
    let conformal = conformal.then_some(ConformalData { nu });
    let riemannian = conformal.as_ref().is_some_and(|c| c.nu.iter().all(Scalar::is_zero));
    Ok(FoliationFlags {
        subalgebra: subalgebra_check(alg, split).is_closed(),
        totally_geodesic: b.is_zero(),
        minimal: is_zero_vector(&b.trace()),
        conformal,
        riemannian,
    })
}

/// `A_X Y = 𝒱(∇_X Y)` on horizontal basis pairs, with the vertical gradient
/// of `ln λ` read off as `A_X X` for a unit horizontal `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ONeillA {
    horizontal: Vec<usize>,
    table: Vec<Vector>,
    pub grad_ln_lambda: Vector,
    /// `A_X Y = ½𝒱([X,Y]) + ⟨X,Y⟩𝒱(grad ln λ)` on every basis pair.
    pub first_identity_holds: bool,
    /// `A_X Y − A_Y X = 𝒱([X,Y])` on every basis pair.
    pub antisymmetry_holds: bool,
}

impl ONeillA {
    pub fn get(&self, x: usize, y: usize) -> &Vector {
        let h = &self.horizontal;
        let px = h.iter().position(|&a| a == x).expect("horizontal index");
        let py = h.iter().position(|&a| a == y).expect("horizontal index");
        &self.table[px * h.len() + py]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }
}

pub fn oneill_a(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<ONeillA> {
    if !classify(alg, split)?.is_conformal() {
        return Err(Error::ConformalityRequired);
    }
    let frame = AdaptedFrame::new(alg, split)?;
    let h = split.horizontal().to_vec();
    let mut table = Vec::with_capacity(h.len() * h.len());
    for &x in &h {
        for &y in &h {
            table.push(frame.a(&frame.e(x), &frame.e(y)));
        }
    }
    let x0 = frame.e(h[0]);
    let grad = frame.a(&x0, &x0);
    let mut first_identity_holds = true;
    let mut antisymmetry_holds = true;
    for (a, &x) in h.iter().enumerate() {
        for (b, &y) in h.iter().enumerate() {
            let vbr = split.vertical_part(&alg.bracket_basis(x, y));
            let mut expected: Vector = vbr.iter().map(|c| c.div_int(2)).collect();
            if x == y {
                expected = add(&expected, &grad);
            }
            if table[a * h.len() + b] != expected {
                first_identity_holds = false;
            }
            if sub(&table[a * h.len() + b], &table[b * h.len() + a]) != vbr {
                antisymmetry_holds = false;
            }
        }
    }
    Ok(ONeillA {
        horizontal: h,
        table,
        grad_ln_lambda: grad,
        first_identity_holds,
        antisymmetry_holds,
    })
}

/// `⟨A*_X U, A*_X U⟩` for arbitrary horizontal `X` and vertical `U`.
pub fn a_star_norm_sq(frame: &AdaptedFrame<'_>, x: &[Scalar], u: &[Scalar]) -> Scalar {
    let v = frame.a_star(x, u);
    dot(&v, &v)
}

/// `U(ln λ)² + ¼⟨U, [X, Y]⟩²` for the orthonormal horizontal basis `X, Y`.
pub fn a_star_norm_sq_formula(frame: &AdaptedFrame<'_>, grad_ln_lambda: &[Scalar], u: &[Scalar]) -> Result<Scalar> {
    let (x, y) = frame.split.horizontal_pair()?;
    let ul = dot(u, grad_ln_lambda);
    let br = dot(u, &frame.alg.bracket_basis(x, y));
    Ok(&ul.square() + &br.square().div_int(4))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RicciCondition {
    pub ric_xx: Scalar,
    pub ric_yy: Scalar,
    pub ric_xy: Scalar,
}

impl RicciCondition {
    /// `Ric(X,X) = Ric(Y,Y)` and `Ric(X,Y) = 0`.
    pub fn holds(&self) -> bool {
        self.ric_xx == self.ric_yy && self.ric_xy.is_zero()
    }
}

pub fn ricci_condition_check(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<RicciCondition> {
    let (x, y) = split.horizontal_pair()?;
    let frame = AdaptedFrame::new(alg, split)?;
    alg.ensure_curvature_dim()?;
    let ric = ricci_from(&frame.riemann());
    Ok(RicciCondition {
        ric_xx: ric.get(x, x).clone(),
        ric_yy: ric.get(y, y).clone(),
        ric_xy: ric.get(x, y).clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub indices: Vec<usize>,
    pub curvature: Scalar,
    pub formula: Scalar,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityOutcome {
    pub checked: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, indices: Vec<usize>, curvature: Scalar, formula: Scalar) {
        self.checked += 1;
        if curvature != formula {
            self.failures.push(IdentityFailure {
                indices,
                curvature,
                formula,
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ONeillIdentityReport {
    /// `⟨R(U∧V), W∧X⟩ = ⟨(∇_U B)_V W, X⟩ − ⟨(∇_V B)_U W, X⟩`, indices `[u, v, w, x]`.
    pub second_fundamental_form_identity: IdentityOutcome,
    /// Totally geodesic conformal case:
    /// `⟨R(U∧X), Y∧V⟩ = ⟨(∇_U A)_X Y, V⟩ + ⟨A*_X U, A*_Y V⟩ − 2V(ln λ)⟨A_X Y, U⟩`,
    /// indices `[u, x, y, v]`. Absent when the split is not conformal with
    /// totally geodesic fibers.
    pub integrability_tensor_identity: Option<IdentityOutcome>,
}

pub fn oneill_identity_check(alg: &MetricLieAlgebra, split: &FoliationSplit) -> Result<ONeillIdentityReport> {
    require_subalgebra(alg, split)?;
    alg.ensure_curvature_dim()?;
    let flags = classify(alg, split)?;
    let frame = AdaptedFrame::new(alg, split)?;
    let r = frame.riemann();
    let e = |i| frame.e(i);

    let mut second = IdentityOutcome::default();
    for &u in split.vertical() {
        for &v in split.vertical() {
            for &w in split.vertical() {
                let du = frame.nabla_b(&e(u), &e(v), &e(w));
                let dv = frame.nabla_b(&e(v), &e(u), &e(w));
                for &x in split.horizontal() {
                    let lhs = r.get(u, v, w, x).clone();
                    let rhs = &du[x] - &dv[x];
                    second.record(vec![u, v, w, x], lhs, rhs);
                }
            }
        }
    }

    let third = if flags.is_conformal() && flags.totally_geodesic {
        let x0 = e(split.horizontal()[0]);
        let grad = frame.a(&x0, &x0);
        let mut out = IdentityOutcome::default();
        for &u in split.vertical() {
            for &v in split.vertical() {
                for &x in split.horizontal() {
                    for &y in split.horizontal() {
                        let lhs = r.get(u, x, y, v).clone();
                        let t1 = frame.nabla_a(&e(u), &e(x), &e(y))[v].clone();
                        let t2 = dot(&frame.a_star(&e(x), &e(u)), &frame.a_star(&e(y), &e(v)));
                        let t3 = &(&grad[v] * &frame.a(&e(x), &e(y))[u]) * &Scalar::from_integer(2);
                        out.record(vec![u, x, y, v], lhs, &(&t1 + &t2) - &t3);
                    }
                }
            }
        }
        Some(out)
    } else {
        None
    };

    Ok(ONeillIdentityReport {
        second_fundamental_form_identity: second,
        integrability_tensor_identity: third,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub vertical: Vec<usize>,
    pub flags: FoliationFlags,
}

/// Every basis subset of size `n − 2`, in lexicographic order, with its
/// subalgebra and foliation flags.
pub fn coordinate_subalgebra_scan(alg: &MetricLieAlgebra) -> Result<Vec<ScanEntry>> {
    let n = alg.dim();
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    alg.ensure_valid()?;
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let vertical: Vec<usize> = (0..n).filter(|&i| i != x && i != y).collect();
            let split = FoliationSplit::new(n, &vertical)?;
            let flags = classify(alg, &split)?;
            out.push(ScanEntry { vertical, flags });
        }
    }
    Ok(out)
}

/// Rotated horizontal vector `a X + b Y` for the split's horizontal pair.
pub fn rotated_horizontal(split: &FoliationSplit, a: &Scalar, b: &Scalar) -> Result<Vector> {
    let (x, y) = split.horizontal_pair()?;
    let n = split.dim();
    Ok(add(&scale(a, &basis_vector(n, x)), &scale(b, &basis_vector(n, y))))
}

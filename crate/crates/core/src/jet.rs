//! First- and second-order jets of the second fundamental form at a point
//! where `f₃` is maximal, and the contradiction ruling out a principal
//! curvature of multiplicity two there.
//!
//! Indices are 0-based in code; labels such as `h113` are 1-based.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::certificate::{Certificate, CertificateKind};
use crate::extremal::{f3_maximality_check, ExtremalError};
use crate::linalg::{LinalgError, LinearSystem, Solution};
use crate::scalar::{ExactScalar, ScalarError};
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum JetError {
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("index out of range")]
    IndexOutOfRange,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
}

const fn build_multisets() -> [[usize; 3]; 20] {
    let mut out = [[0; 3]; 20];
    let mut n = 0;
    let mut i = 0;
    while i < 4 {
        let mut j = i;
        while j < 4 {
            let mut k = j;
            while k < 4 {
                out[n] = [i, j, k];
                n += 1;
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
}

/// Sorted index triples `i ≤ j ≤ k`, in lexicographic order.
pub const MULTISETS: [[usize; 3]; 20] = build_multisets();

/// Position of `{i, j, k}` in [`MULTISETS`].
pub fn multiset_index(i: usize, j: usize, k: usize) -> usize {
    let mut key = [i, j, k];
    key.sort_unstable();
    MULTISETS.iter().position(|m| *m == key).expect("indices below 4")
}

/// Number of distinct orderings of a multiset: 1, 3 or 6.
pub fn multiset_weight(m: [usize; 3]) -> u32 {
    match (m[0] == m[1], m[1] == m[2]) {
        (true, true) => 1,
        (false, false) if m[0] != m[2] => 6,
        _ => 3,
    }
}

fn label3(m: [usize; 3]) -> String {
    format!("h{}{}{}", m[0] + 1, m[1] + 1, m[2] + 1)
}

/// Totally symmetric `h_ijk` on a 4-dimensional tangent space.
#[derive(Clone, Debug, PartialEq)]
pub struct ThirdFF {
    entries: [ExactScalar; 20],
}

impl Default for ThirdFF {
    fn default() -> Self {
        ThirdFF { entries: core::array::from_fn(|_| ExactScalar::zero()) }
    }
}

impl ThirdFF {
    pub fn from_entries(entries: [ExactScalar; 20]) -> Self {
        ThirdFF { entries }
    }

    pub fn entries(&self) -> &[ExactScalar; 20] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &ExactScalar {
        &self.entries[multiset_index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: ExactScalar) {
        self.entries[multiset_index(i, j, k)] = value;
    }

    pub fn with(mut self, i: usize, j: usize, k: usize, value: ExactScalar) -> Self {
        self.set(i, j, k, value);
        self
    }

    /// `Σᵢ h_iik` for each `k`.
    pub fn traces(&self) -> [ExactScalar; 4] {
        core::array::from_fn(|k| (0..4).map(|i| self.get(i, i, k).clone()).sum())
    }

    pub fn is_trace_free(&self) -> bool {
        self.traces().iter().all(ExactScalar::is_zero)
    }
}

/// Quadratic expressions in `h_ijk`, summed over ordered triples.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticForms {
    /// `|∇A|² = Σ h_ijk²`
    pub grad_norm_squared: ExactScalar,
    /// `𝒜 = Σ λᵢ² h_ijk²`
    pub a: ExactScalar,
    /// `ℬ = Σ λᵢλⱼ h_ijk²`
    pub b: ExactScalar,
    /// `𝒞 = Σ λᵢ h_ijk²`
    pub c: ExactScalar,
}

pub fn quadratic_forms(s: &Spectrum, h: &ThirdFF) -> Result<QuadraticForms, JetError> {
    s.require_four()?;
    let l = s.values();
    let mut out = QuadraticForms {
        grad_norm_squared: ExactScalar::zero(),
        a: ExactScalar::zero(),
        b: ExactScalar::zero(),
        c: ExactScalar::zero(),
    };
    for (m, value) in MULTISETS.iter().zip(&h.entries) {
        if value.is_zero() {
            continue;
        }
        let [i, j, k] = *m;
        let sq = value.square();
        // each index leads in w/3 of the w orderings
        let third = ExactScalar::ratio(i64::from(multiset_weight(*m)), 3);
        let w = &sq * &third;
        out.grad_norm_squared = &out.grad_norm_squared + &sq * ExactScalar::integer(3) * &third;
        out.a = &out.a + &w * (l[i].square() + l[j].square() + l[k].square());
        out.b = &out.b + &w * (&l[i] * &l[j] + &l[j] * &l[k] + &l[i] * &l[k]);
        out.c = &out.c + &w * (&l[i] + &l[j] + &l[k]);
    }
    Ok(out)
}

fn power_row(s: &Spectrum, p: u32) -> Vec<ExactScalar> {
    s.values().iter().map(|l| l.pow(p)).collect()
}

/// The equations `Σᵢ λᵢᵖ h_iik = 0`, `p = 0..=3`, in the unknowns `h_11k … h_44k`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradientSystem {
    pub system: LinearSystem,
    pub kernel: Vec<Vec<ExactScalar>>,
}

pub fn gradient_system(s: &Spectrum, k: usize) -> Result<GradientSystem, JetError> {
    s.require_four()?;
    if k >= 4 {
        return Err(JetError::IndexOutOfRange);
    }
    let rows = (0..4).map(|p| power_row(s, p)).collect();
    let labels = (0..4).map(|i| label3([i, i, k])).collect();
    let system = LinearSystem::homogeneous(rows, labels)?;
    let kernel = match system.solve()? {
        Solution::Family { kernel, .. } => kernel,
        _ => Vec::new(),
    };
    Ok(GradientSystem { system, kernel })
}

/// `(−λ, −λ, 0, 2λ)`.
pub fn double_spectrum(lambda: &ExactScalar) -> Result<Spectrum, JetError> {
    if !lambda.is_positive() {
        return Err(JetError::Precondition("λ must be positive"));
    }
    Ok(Spectrum::new(vec![-lambda, -lambda, ExactScalar::zero(), lambda * ExactScalar::integer(2)])?)
}

/// Free coordinates of the third fundamental form once the gradient
/// equations hold on `(−λ, −λ, 0, 2λ)`.
pub const FREE_COMPONENTS: [[usize; 3]; 8] =
    [[0, 0, 0], [0, 0, 1], [0, 0, 2], [0, 0, 3], [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

/// Components shown to vanish by the coefficient comparison, as positions in
/// [`FREE_COMPONENTS`].
pub const VANISHING: [usize; 4] = [2, 4, 6, 7];

pub fn free_labels() -> [String; 8] {
    FREE_COMPONENTS.map(label3)
}

/// The gradient equations for every `k` as one system in the 20 entries of `h`.
pub fn all_gradient_constraints(s: &Spectrum) -> Result<LinearSystem, JetError> {
    s.require_four()?;
    let mut rows = Vec::new();
    for k in 0..4 {
        for p in 0..4 {
            let mut row = vec![ExactScalar::zero(); 20];
            for (i, c) in power_row(s, p).into_iter().enumerate() {
                let idx = multiset_index(i, i, k);
                row[idx] = &row[idx] + &c;
            }
            rows.push(row);
        }
    }
    Ok(LinearSystem::homogeneous(rows, MULTISETS.iter().map(|m| label3(*m)).collect())?)
}

/// Symmetric matrix of a homogeneous quadratic function of `n` variables.
pub fn polarize<F>(n: usize, mut q: F) -> Result<Vec<Vec<ExactScalar>>, JetError>
where
    F: FnMut(&[ExactScalar]) -> Result<ExactScalar, JetError>,
{
    let unit = |idx: &[usize]| {
        let mut v = vec![ExactScalar::zero(); n];
        for &i in idx {
            v[i] = &v[i] + &ExactScalar::one();
        }
        v
    };
    let diag: Vec<ExactScalar> = (0..n).map(|i| q(&unit(&[i]))).collect::<Result<_, _>>()?;
    let mut m = vec![vec![ExactScalar::zero(); n]; n];
    for i in 0..n {
        m[i][i] = diag[i].clone();
        for j in i + 1..n {
            let off = (q(&unit(&[i, j]))? - &diag[i] - &diag[j]) * ExactScalar::ratio(1, 2);
            m[i][j] = off.clone();
            m[j][i] = off;
        }
    }
    Ok(m)
}

fn is_diagonal(m: &[Vec<ExactScalar>]) -> bool {
    m.iter().enumerate().all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// Comparison of `|∇A|²` against `2𝒜 + ℬ` on `(−λ, −λ, 0, 2λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientCheck {
    pub lambda: ExactScalar,
    pub spectrum: Spectrum,
    /// `f₄/(|A|²λ²)`, the factor relating the two constancy identities.
    pub multiplier: ExactScalar,
    /// `h = P·y` for `y` in [`FREE_COMPONENTS`] coordinates; 20 rows.
    pub parametrization: Vec<Vec<ExactScalar>>,
    /// `multiplier · |∇A|²` as a form in the free coordinates.
    pub gradient_form: Vec<Vec<ExactScalar>>,
    /// `(2𝒜 + ℬ)/λ²`
    pub combined_form: Vec<Vec<ExactScalar>>,
    /// `gradient_form − combined_form`
    pub residual_form: Vec<Vec<ExactScalar>>,
    /// Free coordinates forced to vanish, as positions in [`FREE_COMPONENTS`].
    pub vanishing: Vec<usize>,
}

impl CoefficientCheck {
    pub fn third_ff(&self, y: &[ExactScalar]) -> ThirdFF {
        ThirdFF::from_entries(core::array::from_fn(|r| {
            self.parametrization[r].iter().zip(y).map(|(p, x)| p * x).sum()
        }))
    }

    pub fn residual_at(&self, y: &[ExactScalar]) -> Result<ExactScalar, JetError> {
        residual(&self.spectrum, &self.lambda, &self.multiplier, &self.third_ff(y))
    }

    pub fn residual_diagonal(&self) -> Vec<ExactScalar> {
        (0..8).map(|i| self.residual_form[i][i].clone()).collect()
    }
}

fn residual(s: &Spectrum, lambda: &ExactScalar, multiplier: &ExactScalar, h: &ThirdFF) -> Result<ExactScalar, JetError> {
    let q = quadratic_forms(s, h)?;
    let l2 = lambda.square();
    Ok(multiplier * &q.grad_norm_squared - (q.a * ExactScalar::integer(2) + q.b).try_div(&l2)?)
}

/// Parametrizes `h` by its eight free components, compares the two quadratic
/// forms coefficient by coefficient, and reads off which components vanish.
pub fn lemma5_coefficient_check(lambda: &ExactScalar) -> Result<CoefficientCheck, JetError> {
    let s = double_spectrum(lambda)?;
    let constraints = all_gradient_constraints(&s)?;
    let kernel = match constraints.solve()? {
        Solution::Family { kernel, .. } => kernel,
        _ => return Err(JetError::Precondition("gradient equations leave no freedom")),
    };
    if kernel.len() != 8 {
        return Err(JetError::Precondition("expected eight free components"));
    }
    // change basis so that the free components are the coordinates
    let free_idx: Vec<usize> = FREE_COMPONENTS.iter().map(|m| multiset_index(m[0], m[1], m[2])).collect();
    let square: Vec<Vec<ExactScalar>> =
        free_idx.iter().map(|&r| kernel.iter().map(|v| v[r].clone()).collect()).collect();
    let mut inverse_cols = Vec::new();
    for c in 0..8 {
        let e: Vec<ExactScalar> = (0..8).map(|r| if r == c { ExactScalar::one() } else { ExactScalar::zero() }).collect();
        let sys = LinearSystem::new(square.clone(), e, (0..8).map(|i| format!("c{i}")).collect())?;
        match sys.solve()? {
            Solution::Unique(x) => inverse_cols.push(x),
            _ => return Err(JetError::Precondition("free components do not parametrize the kernel")),
        }
    }
    let parametrization: Vec<Vec<ExactScalar>> = (0..20)
        .map(|r| {
            (0..8)
                .map(|c| (0..8).map(|t| &kernel[t][r] * &inverse_cols[c][t]).sum())
                .collect()
        })
        .collect();

    let inv = s.invariants()?;
    let l2 = lambda.square();
    let multiplier = inv.f4.try_div(&(&inv.norm_squared * &l2))?;
    let param = |y: &[ExactScalar]| -> ThirdFF {
        ThirdFF::from_entries(core::array::from_fn(|r| parametrization[r].iter().zip(y).map(|(p, x)| p * x).sum()))
    };
    let gradient_form = polarize(8, |y| Ok(&multiplier * quadratic_forms(&s, &param(y))?.grad_norm_squared))?;
    let combined_form = polarize(8, |y| {
        let q = quadratic_forms(&s, &param(y))?;
        Ok((q.a * ExactScalar::integer(2) + q.b).try_div(&l2)?)
    })?;
    let residual_form = polarize(8, |y| residual(&s, lambda, &multiplier, &param(y)))?;

    if !is_diagonal(&residual_form) || (0..8).any(|i| residual_form[i][i].is_negative()) {
        return Err(JetError::Precondition("residual form is not diagonal and semidefinite"));
    }
    let vanishing = (0..8).filter(|&i| residual_form[i][i].is_positive()).collect();
    Ok(CoefficientCheck { lambda: lambda.clone(), spectrum: s, multiplier, parametrization, gradient_form, combined_form, residual_form, vanishing })
}

/// Which of `R_M`, `f₃`, `f₄` are constant (or critical) at the point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constancy {
    pub scalar_curvature: bool,
    pub f3: bool,
    pub f4: bool,
}

impl Constancy {
    pub const ALL: Constancy = Constancy { scalar_curvature: true, f3: true, f4: true };
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintResidual {
    pub name: &'static str,
    pub value: ExactScalar,
}

/// `|A|²(|A|² − 4)`: the value `|∇A|²` must take when `R_M` is constant.
pub fn required_gradient_norm(s: &Spectrum) -> Result<ExactScalar, JetError> {
    let a2 = s.invariants()?.norm_squared;
    Ok(&a2 * (&a2 - ExactScalar::integer(4)))
}

/// Residuals of the Simons identity and the Laplacians of `f₃`, `f₄` that
/// apply under `flags`.
pub fn simons_and_pengterng_constraints(
    s: &Spectrum,
    h: &ThirdFF,
    flags: Constancy,
) -> Result<Vec<ConstraintResidual>, JetError> {
    s.require_minimal()?;
    let inv = s.invariants()?;
    let q = quadratic_forms(s, h)?;
    let four_minus = ExactScalar::integer(4) - &inv.norm_squared;
    let mut out = Vec::new();
    if flags.scalar_curvature {
        out.push(ConstraintResidual {
            name: "simons",
            value: &q.grad_norm_squared - required_gradient_norm(s)?,
        });
    }
    if flags.f3 {
        out.push(ConstraintResidual {
            name: "delta_f3",
            value: ExactScalar::integer(3) * &four_minus * &inv.f3 + ExactScalar::integer(6) * &q.c,
        });
    }
    if flags.f4 {
        out.push(ConstraintResidual {
            name: "delta_f4",
            value: ExactScalar::integer(4) * &four_minus * &inv.f4
                + ExactScalar::integer(4) * (q.a * ExactScalar::integer(2) + q.b),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JetConfig {
    /// Keep `Σ(h_ijk h_ijl + h_ij h_ijkl) = 0` in the second-order systems.
    pub include_middle: bool,
}

impl Default for JetConfig {
    fn default() -> Self {
        JetConfig { include_middle: true }
    }
}

/// Symmetric pairs `i ≤ j`.
pub fn pairs() -> Vec<(usize, usize)> {
    (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect()
}

fn checked_lemma_conclusions(s: &Spectrum, h: &ThirdFF) -> Result<(), JetError> {
    let constraints = all_gradient_constraints(s)?;
    let residual_nonzero = constraints
        .coefficients
        .iter()
        .any(|row| !row.iter().zip(&h.entries).map(|(a, x)| a * x).sum::<ExactScalar>().is_zero());
    if residual_nonzero {
        return Err(JetError::Precondition("h violates the gradient equations"));
    }
    if VANISHING.iter().any(|&v| {
        let [i, j, k] = FREE_COMPONENTS[v];
        !h.get(i, j, k).is_zero()
    }) {
        return Err(JetError::Precondition("h has a component the coefficient check forces to vanish"));
    }
    Ok(())
}

/// Right-hand sides of the three second-order equations for `(k, l)`.
fn second_order_rhs(s: &Spectrum, k: usize, l: usize, h: &ThirdFF) -> [ExactScalar; 3] {
    let lam = s.values();
    let mut plain = ExactScalar::zero();
    let mut weighted = ExactScalar::zero();
    for i in 0..4 {
        for j in 0..4 {
            let prod = h.get(i, j, k) * h.get(i, j, l);
            if prod.is_zero() {
                continue;
            }
            weighted = weighted + (lam[i].square() * ExactScalar::integer(2) + &lam[i] * &lam[j]) * &prod;
            plain = plain + prod;
        }
    }
    [ExactScalar::zero(), -plain, -weighted]
}

/// The linear system in `h_ijkl` (`i ≤ j`) for fixed `k = l`.
#[derive(Clone, Debug, PartialEq)]
pub struct SecondOrder {
    pub k: usize,
    pub system: LinearSystem,
    pub solution: Solution,
    /// Value of each unknown common to all solutions, if any.
    pub forced: Vec<Option<ExactScalar>>,
}

impl SecondOrder {
    pub fn index_of(&self, i: usize, j: usize) -> usize {
        let key = if i <= j { (i, j) } else { (j, i) };
        pairs().iter().position(|p| *p == key).expect("indices below 4")
    }

    pub fn forced_value(&self, i: usize, j: usize) -> Option<&ExactScalar> {
        self.forced[self.index_of(i, j)].as_ref()
    }
}

fn second_order_matrix(s: &Spectrum, config: JetConfig) -> Vec<Vec<ExactScalar>> {
    let unknowns = pairs();
    let powers: &[u32] = if config.include_middle { &[0, 1, 3] } else { &[0, 3] };
    powers
        .iter()
        .map(|&p| {
            unknowns
                .iter()
                .map(|&(i, j)| if i == j { s.values()[i].pow(p) } else { ExactScalar::zero() })
                .collect()
        })
        .collect()
}

fn select_rhs(rhs: [ExactScalar; 3], config: JetConfig) -> Vec<ExactScalar> {
    let [a, b, c] = rhs;
    if config.include_middle {
        vec![a, b, c]
    } else {
        vec![a, c]
    }
}

/// Builds and solves the system for `(k, k)`, `k ∈ {2, 3}` (0-based).
pub fn second_order_system(
    lambda: &ExactScalar,
    k: usize,
    h: &ThirdFF,
    config: JetConfig,
) -> Result<SecondOrder, JetError> {
    if !(k == 2 || k == 3) {
        return Err(JetError::IndexOutOfRange);
    }
    let s = double_spectrum(lambda)?;
    checked_lemma_conclusions(&s, h)?;
    let labels = pairs().iter().map(|&(i, j)| format!("h{}{}{}{}", i + 1, j + 1, k + 1, k + 1)).collect();
    let system = LinearSystem::new(
        second_order_matrix(&s, config),
        select_rhs(second_order_rhs(&s, k, k, h), config),
        labels,
    )?;
    let solution = system.solve()?;
    let forced = (0..system.unknowns()).map(|j| system.forced_value(j)).collect::<Result<_, _>>()?;
    Ok(SecondOrder { k, system, solution, forced })
}

/// `h_ijkl − h_ijlk = (λᵢ − λⱼ)(1 + λᵢλⱼ)(δ_ik δ_jl − δ_il δ_jk)`.
pub fn commutator(s: &Spectrum, i: usize, j: usize, k: usize, l: usize) -> Result<ExactScalar, JetError> {
    let lam = s.values();
    if [i, j, k, l].iter().any(|&x| x >= lam.len()) {
        return Err(JetError::IndexOutOfRange);
    }
    let delta = i32::from(i == k && j == l) - i32::from(i == l && j == k);
    if delta == 0 {
        return Ok(ExactScalar::zero());
    }
    Ok((&lam[i] - &lam[j]) * (ExactScalar::one() + &lam[i] * &lam[j]) * ExactScalar::integer(delta.into()))
}

/// Shows `x_target = wᵀb(h)` vanishes for every admissible `h` by polarizing
/// over the components left free after the coefficient check.
fn forced_zero_for_all_h(
    check: &CoefficientCheck,
    k: usize,
    target: (usize, usize),
    config: JetConfig,
) -> Result<bool, JetError> {
    let matrix = second_order_matrix(&check.spectrum, config);
    let rows = matrix.len();
    let probe = LinearSystem::homogeneous(matrix, pairs().iter().map(|p| format!("{p:?}")).collect())?;
    let target_idx = pairs().iter().position(|p| *p == target).expect("pair");
    let Some(w) = probe.row_space_witness(target_idx)? else {
        return Ok(false);
    };
    debug_assert_eq!(w.len(), rows);
    let kept: Vec<usize> = (0..8).filter(|i| !check.vanishing.contains(i)).collect();
    let form = polarize(kept.len(), |z| {
        let mut y = vec![ExactScalar::zero(); 8];
        for (slot, value) in kept.iter().zip(z) {
            y[*slot] = value.clone();
        }
        let h = check.third_ff(&y);
        let b = select_rhs(second_order_rhs(&check.spectrum, k, k, &h), config);
        Ok(w.iter().zip(&b).map(|(a, x)| a * x).sum())
    })?;
    Ok(form.iter().flatten().all(ExactScalar::is_zero))
}

/// Runs the whole chain at one value of `λ`.
pub fn multiplicity_two_contradiction(lambda: &ExactScalar, config: JetConfig) -> Result<Certificate, JetError> {
    let s = double_spectrum(lambda)?;
    if !s.gauss_kronecker().is_zero() {
        return Err(JetError::Precondition("Gauss-Kronecker curvature must vanish"));
    }
    if !f3_maximality_check(&s)? {
        return Err(JetError::Precondition("f₃ is not maximal on the spectrum"));
    }
    let expected_kernel = [ExactScalar::one(), -ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()];
    for k in 0..4 {
        let g = gradient_system(&s, k)?;
        let ok = g.kernel.len() == 1 && {
            let v = &g.kernel[0];
            let scale = &v[0];
            !scale.is_zero() && v.iter().zip(&expected_kernel).all(|(x, e)| *x == scale * e)
        };
        if !ok {
            return Err(JetError::Precondition("gradient kernel is not spanned by (1, −1, 0, 0)"));
        }
    }
    let check = lemma5_coefficient_check(lambda)?;
    if check.vanishing != VANISHING {
        return Err(JetError::Precondition("coefficient check forces an unexpected set of components"));
    }
    // (2,2) and (3,3) in 0-based indices: h_4433 from k = 3, h_3344 from k = 4
    let h4433 = forced_zero_for_all_h(&check, 2, (3, 3), config)?;
    let h3344 = forced_zero_for_all_h(&check, 3, (2, 2), config)?;
    let gap = commutator(&s, 2, 3, 2, 3)?;
    let cert = Certificate::new(
        CertificateKind::SignImpossibility,
        "second-order systems force h3344 − h4433 = 0, the commutation formula gives −2λ",
    )
    .detail("lambda", lambda.clone())
    .detail("systems_gap", ExactScalar::zero())
    .detail("commutator_gap", gap.clone());
    if !(h4433 && h3344) {
        return Ok(Certificate::new(
            CertificateKind::Consistent,
            "second-order systems leave h3344 − h4433 undetermined",
        )
        .detail("lambda", lambda.clone())
        .detail("commutator_gap", gap));
    }
    if gap.is_zero() {
        return Ok(Certificate::new(CertificateKind::Consistent, "commutator gap vanishes").detail("lambda", lambda.clone()));
    }
    Ok(cert)
}

/// Repeats the chain at several `λ` and checks that the residual form does
/// not depend on `λ` and that the gap is `−2λ`.
pub fn multiplicity_two_symbolic(samples: &[ExactScalar], config: JetConfig) -> Result<Certificate, JetError> {
    if samples.len() < 4 {
        return Err(JetError::Precondition("need at least four sample values"));
    }
    let mut reference: Option<Vec<Vec<ExactScalar>>> = None;
    let mut children = Vec::new();
    let mut uniform = true;
    for lambda in samples {
        let form = lemma5_coefficient_check(lambda)?.residual_form;
        match &reference {
            None => reference = Some(form),
            Some(r) => uniform &= *r == form,
        }
        let cert = multiplicity_two_contradiction(lambda, config)?;
        let slope_ok = cert
            .get("commutator_gap")
            .map(|g| *g == lambda * ExactScalar::integer(-2))
            .unwrap_or(false);
        uniform &= slope_ok && cert.kind.is_contradiction();
        children.push(cert);
    }
    let kind = if uniform { CertificateKind::SignImpossibility } else { CertificateKind::Consistent };
    let mut out = Certificate::new(kind, "contradiction holds at every sampled λ with gap −2λ")
        .detail("samples", ExactScalar::integer(samples.len() as i64));
    for c in children {
        out = out.child(c);
    }
    Ok(out)
}

//! Pointwise Riemann, Ricci and Weyl tensors of a hypersurface in the unit
//! 5-sphere, built from the principal curvatures through the Gauss equation.
//!
//! Indices are 0-based throughout; tensors are dense `4⁴` tables.

use alloc::vec::Vec;

use crate::forms::ClosedForms;
use crate::scalar::ExactScalar;
use crate::spectrum::{Spectrum, SpectrumError};

const N: usize = 4;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CurvatureError {
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("closed form for {quantity} disagrees with the componentwise value")]
    Mismatch { quantity: &'static str, closed_form: ExactScalar, componentwise: ExactScalar },
}

fn delta(i: usize, j: usize) -> ExactScalar {
    if i == j {
        ExactScalar::one()
    } else {
        ExactScalar::zero()
    }
}

/// `δ_ik δ_jl − δ_il δ_jk`
fn kulkarni_unit(i: usize, j: usize, k: usize, l: usize) -> i64 {
    i64::from(i == k && j == l) - i64::from(i == l && j == k)
}

/// Dense rank-4 table.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor4 {
    data: Vec<ExactScalar>,
}

impl Tensor4 {
    fn from_fn(mut f: impl FnMut(usize, usize, usize, usize) -> ExactScalar) -> Self {
        let mut data = Vec::with_capacity(N * N * N * N);
        for i in 0..N {
            for j in 0..N {
                for k in 0..N {
                    for l in 0..N {
                        data.push(f(i, j, k, l));
                    }
                }
            }
        }
        Tensor4 { data }
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &ExactScalar {
        &self.data[((i * N + j) * N + k) * N + l]
    }

    pub fn norm_squared(&self) -> ExactScalar {
        self.data.iter().map(|x| x.square()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// Dense rank-2 table.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2 {
    data: Vec<ExactScalar>,
}

impl Tensor2 {
    fn from_fn(mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut data = Vec::with_capacity(N * N);
        for i in 0..N {
            for j in 0..N {
                data.push(f(i, j));
            }
        }
        Tensor2 { data }
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.data[i * N + j]
    }

    pub fn norm_squared(&self) -> ExactScalar {
        self.data.iter().map(|x| x.square()).sum()
    }

    pub fn trace(&self) -> ExactScalar {
        (0..N).map(|i| self.get(i, i)).sum()
    }
}

/// Curvature of a hypersurface point with diagonal second fundamental form.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvaturePoint4 {
    pub riemann: Tensor4,
    pub ricci: Tensor2,
    pub weyl: Tensor4,
    pub scalar: ExactScalar,
    /// `|Ric|²`
    pub ricci_squared: ExactScalar,
    /// `|W|²`
    pub weyl_squared: ExactScalar,
    /// `|Ric − (R_M/4) g|²`
    pub traceless_ricci_squared: ExactScalar,
}

/// Gauss equation with `h_ij = λ_i δ_ij`:
/// `R_ijkl = (1 + λ_i λ_j)(δ_ik δ_jl − δ_il δ_jk)`.
pub fn riemann_from_spectrum(s: &Spectrum) -> Result<CurvaturePoint4, SpectrumError> {
    s.require_four()?;
    let lam = s.values();
    let riemann = Tensor4::from_fn(|i, j, k, l| match kulkarni_unit(i, j, k, l) {
        0 => ExactScalar::zero(),
        sign => ExactScalar::integer(sign) * (ExactScalar::one() + &lam[i] * &lam[j]),
    });
    let ricci = Tensor2::from_fn(|i, j| (0..N).map(|k| riemann.get(i, k, j, k)).sum());
    let scalar = ricci.trace();
    let half = ExactScalar::ratio(1, 2);
    let sixth = &scalar * &ExactScalar::ratio(1, 6);
    let weyl = Tensor4::from_fn(|i, j, k, l| {
        let ric_part = ricci.get(i, k) * &delta(j, l) - ricci.get(i, l) * &delta(j, k)
            + ricci.get(j, l) * &delta(i, k)
            - ricci.get(j, k) * &delta(i, l);
        riemann.get(i, j, k, l) - &half * &ric_part
            + &sixth * &ExactScalar::integer(kulkarni_unit(i, j, k, l))
    });
    let quarter = &scalar * &ExactScalar::ratio(1, 4);
    let traceless_ricci_squared =
        Tensor2::from_fn(|i, j| ricci.get(i, j) - &quarter * &delta(i, j)).norm_squared();
    Ok(CurvaturePoint4 {
        ricci_squared: ricci.norm_squared(),
        weyl_squared: weyl.norm_squared(),
        riemann,
        ricci,
        weyl,
        scalar,
        traceless_ricci_squared,
    })
}

impl CurvaturePoint4 {
    /// Residuals of `R_ijkl + R_jikl`, `R_ijkl + R_ijlk`, `R_ijkl − R_klij` and
    /// the first Bianchi sum over all index tuples. All must vanish.
    pub fn symmetry_residuals(&self) -> impl Iterator<Item = ExactScalar> + '_ {
        let r = |i, j, k, l| self.riemann.get(i, j, k, l);
        tuples().flat_map(move |(i, j, k, l)| {
            [
                r(i, j, k, l) + r(j, i, k, l),
                r(i, j, k, l) + r(i, j, l, k),
                r(i, j, k, l) - r(k, l, i, j),
                r(i, j, k, l) + r(i, k, l, j) + r(i, l, j, k),
            ]
        })
    }

    pub fn symmetries_hold(&self) -> bool {
        self.symmetry_residuals().all(|x| x.is_zero())
    }

    /// `Σ_k W_ikjk` for all `(i, j)`.
    pub fn weyl_traces(&self) -> impl Iterator<Item = ExactScalar> + '_ {
        (0..N).flat_map(move |i| {
            (0..N).map(move |j| (0..N).map(|k| self.weyl.get(i, k, j, k)).sum())
        })
    }

    pub fn weyl_is_trace_free(&self) -> bool {
        self.weyl_traces().all(|x| x.is_zero())
    }

    /// `Ric_ij = Σ_k R_ikjk` recomputed from the Riemann table.
    pub fn ricci_consistent(&self) -> bool {
        (0..N).all(|i| {
            (0..N).all(|j| {
                let sum: ExactScalar = (0..N).map(|k| self.riemann.get(i, k, j, k)).sum();
                (sum - self.ricci.get(i, j)).is_zero()
            })
        })
    }

    /// `R_M²/3 − |Ric|² + |W|²/2`, the general four-dimensional integrand.
    pub fn gbc_density(&self) -> ExactScalar {
        self.scalar.square() * ExactScalar::ratio(1, 3) - &self.ricci_squared
            + &self.weyl_squared * &ExactScalar::ratio(1, 2)
    }

    /// `Ric` is a multiple of the identity.
    pub fn is_einstein(&self) -> bool {
        let first = self.ricci.get(0, 0);
        (0..N).all(|i| {
            (0..N).all(|j| if i == j { self.ricci.get(i, j) == first } else { self.ricci.get(i, j).is_zero() })
        })
    }
}

fn tuples() -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..N).flat_map(|i| {
        (0..N).flat_map(move |j| (0..N).flat_map(move |k| (0..N).map(move |l| (i, j, k, l))))
    })
}

/// Componentwise minus closed-form values of `R_M`, `|Ric|²`, `|W|²`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormResiduals {
    pub scalar: ExactScalar,
    pub ricci: ExactScalar,
    pub weyl: ExactScalar,
}

impl ClosedFormResiduals {
    pub fn all_zero(&self) -> bool {
        self.scalar.is_zero() && self.ricci.is_zero() && self.weyl.is_zero()
    }
}

pub fn closed_form_check(s: &Spectrum) -> Result<ClosedFormResiduals, CurvatureError> {
    closed_form_check_with(s, &ClosedForms::default())
}

pub fn closed_form_check_with(
    s: &Spectrum,
    forms: &ClosedForms,
) -> Result<ClosedFormResiduals, CurvatureError> {
    s.require_minimal()?;
    let point = riemann_from_spectrum(s)?;
    let a2 = s.power_sum(2);
    let f4 = s.power_sum(4);
    Ok(ClosedFormResiduals {
        scalar: &point.scalar - forms.scalar_curvature(&a2),
        ricci: &point.ricci_squared - forms.ricci_norm_squared(&a2, &f4),
        weyl: &point.weyl_squared - forms.weyl_norm_squared(&a2, &f4),
    })
}

/// Both evaluations of the Gauss-Bonnet-Chern integrand at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct GbcEvaluation {
    /// `(3/2)|A|⁴ − 3f₄ − 2|A|² + 12`
    pub closed_form: ExactScalar,
    /// `R_M²/3 − |Ric|² + |W|²/2` from the tensor components
    pub componentwise: ExactScalar,
}

impl GbcEvaluation {
    pub fn residual(&self) -> ExactScalar {
        &self.componentwise - &self.closed_form
    }
}

pub fn gbc_evaluation(s: &Spectrum, forms: &ClosedForms) -> Result<GbcEvaluation, CurvatureError> {
    s.require_minimal()?;
    let point = riemann_from_spectrum(s)?;
    Ok(GbcEvaluation {
        closed_form: forms.gbc_integrand(&s.power_sum(2), &s.power_sum(4)),
        componentwise: point.gbc_density(),
    })
}

/// The specialized integrand, cross-checked against the general form.
pub fn gbc_integrand(s: &Spectrum) -> Result<ExactScalar, CurvatureError> {
    let eval = gbc_evaluation(s, &ClosedForms::default())?;
    if !eval.residual().is_zero() {
        return Err(CurvatureError::Mismatch {
            quantity: "Gauss-Bonnet-Chern integrand",
            closed_form: eval.closed_form,
            componentwise: eval.componentwise,
        });
    }
    Ok(eval.closed_form)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructurePredicates {
    pub locally_conformally_flat: bool,
    pub einstein: bool,
    pub willmore: bool,
}

/// Closed-form predicates, each verified against its componentwise meaning
/// (`W ≡ 0`, `Ric ∝ g`, `|R̊ic|²` closed form).
pub fn special_structure_predicates(s: &Spectrum) -> Result<StructurePredicates, CurvatureError> {
    special_structure_predicates_with(s, &ClosedForms::default())
}

pub fn special_structure_predicates_with(
    s: &Spectrum,
    forms: &ClosedForms,
) -> Result<StructurePredicates, CurvatureError> {
    s.require_minimal()?;
    let point = riemann_from_spectrum(s)?;
    let a2 = s.power_sum(2);
    let f4 = s.power_sum(4);
    let traceless = forms.traceless_ricci_squared(&a2, &f4);
    if traceless != point.traceless_ricci_squared {
        return Err(CurvatureError::Mismatch {
            quantity: "|R̊ic|²",
            closed_form: traceless,
            componentwise: point.traceless_ricci_squared,
        });
    }
    let predicates = StructurePredicates {
        locally_conformally_flat: forms.is_conformally_flat(&a2, &f4),
        einstein: traceless.is_zero(),
        willmore: s.power_sum(3).is_zero(),
    };
    let bool_scalar = |b: bool| ExactScalar::integer(i64::from(b));
    if predicates.locally_conformally_flat != point.weyl.is_zero() {
        return Err(CurvatureError::Mismatch {
            quantity: "conformal flatness",
            closed_form: bool_scalar(predicates.locally_conformally_flat),
            componentwise: bool_scalar(point.weyl.is_zero()),
        });
    }
    if predicates.einstein != point.is_einstein() {
        return Err(CurvatureError::Mismatch {
            quantity: "Einstein condition",
            closed_form: bool_scalar(predicates.einstein),
            componentwise: bool_scalar(point.is_einstein()),
        });
    }
    Ok(predicates)
}

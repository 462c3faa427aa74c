//! Coefficients of every closed-form curvature expression used by the proof
//! chain, kept in one table so each can be perturbed for mutation testing.

use core::fmt;
use core::str::FromStr;

use crate::scalar::ExactScalar;

/// Names of the individual closed-form coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    /// constant in `R_M = 12 − |A|²`
    ScalarConst,
    /// `|A|²` coefficient in `R_M`
    ScalarNorm,
    /// constant in `|Ric|² = 36 − 6|A|² + f₄`
    RicciConst,
    RicciNorm,
    RicciF4,
    /// `|A|⁴` coefficient in `|W|² = (7/3)|A|⁴ − 4f₄`
    WeylNorm4,
    WeylF4,
    /// `|A|⁴` coefficient of the Gauss-Bonnet-Chern integrand `(3/2)|A|⁴ − 3f₄ − 2|A|² + 12`
    GbcNorm4,
    GbcF4,
    GbcNorm,
    GbcConst,
    /// `|A|⁴` coefficient in `f₄ = ½|A|⁴ − 4𝒦`
    NewtonNorm4,
    NewtonGauss,
    /// `f₄` coefficient in `|R̊ic|² = f₄ − ¼|A|⁴`
    TracelessF4,
    TracelessNorm4,
    /// ratio `c` in the conformal-flatness test `|A|⁴ = c·f₄`
    ConformalRatio,
}

impl Coefficient {
    pub const ALL: [Coefficient; 16] = [
        Coefficient::ScalarConst,
        Coefficient::ScalarNorm,
        Coefficient::RicciConst,
        Coefficient::RicciNorm,
        Coefficient::RicciF4,
        Coefficient::WeylNorm4,
        Coefficient::WeylF4,
        Coefficient::GbcNorm4,
        Coefficient::GbcF4,
        Coefficient::GbcNorm,
        Coefficient::GbcConst,
        Coefficient::NewtonNorm4,
        Coefficient::NewtonGauss,
        Coefficient::TracelessF4,
        Coefficient::TracelessNorm4,
        Coefficient::ConformalRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Coefficient::ScalarConst => "scalar.const",
            Coefficient::ScalarNorm => "scalar.a2",
            Coefficient::RicciConst => "ricci.const",
            Coefficient::RicciNorm => "ricci.a2",
            Coefficient::RicciF4 => "ricci.f4",
            Coefficient::WeylNorm4 => "weyl.a4",
            Coefficient::WeylF4 => "weyl.f4",
            Coefficient::GbcNorm4 => "gbc.a4",
            Coefficient::GbcF4 => "gbc.f4",
            Coefficient::GbcNorm => "gbc.a2",
            Coefficient::GbcConst => "gbc.const",
            Coefficient::NewtonNorm4 => "newton.a4",
            Coefficient::NewtonGauss => "newton.k",
            Coefficient::TracelessF4 => "traceless.f4",
            Coefficient::TracelessNorm4 => "traceless.a4",
            Coefficient::ConformalRatio => "conformal.ratio",
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown coefficient `{0}`")]
pub struct UnknownCoefficient(pub alloc::string::String);

impl FromStr for Coefficient {
    type Err = UnknownCoefficient;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Coefficient::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownCoefficient(s.into()))
    }
}

/// The closed-form coefficient table.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    values: [ExactScalar; 16],
}

impl Default for ClosedForms {
    fn default() -> Self {
        let q = ExactScalar::ratio;
        ClosedForms {
            values: [
                q(12, 1),
                q(-1, 1),
                q(36, 1),
                q(-6, 1),
                q(1, 1),
                q(7, 3),
                q(-4, 1),
                q(3, 2),
                q(-3, 1),
                q(-2, 1),
                q(12, 1),
                q(1, 2),
                q(-4, 1),
                q(1, 1),
                q(-1, 4),
                q(12, 7),
            ],
        }
    }
}

impl ClosedForms {
    pub fn get(&self, c: Coefficient) -> &ExactScalar {
        &self.values[Self::slot(c)]
    }

    pub fn set(&mut self, c: Coefficient, value: ExactScalar) {
        self.values[Self::slot(c)] = value;
    }

    pub fn with(mut self, c: Coefficient, value: ExactScalar) -> Self {
        self.set(c, value);
        self
    }

    /// Coefficients that differ from the defaults.
    pub fn overrides(&self) -> impl Iterator<Item = (Coefficient, &ExactScalar)> {
        let defaults = ClosedForms::default();
        Coefficient::ALL
            .into_iter()
            .filter(move |c| defaults.get(*c) != self.get(*c))
            .map(move |c| (c, self.get(c)))
    }

    fn slot(c: Coefficient) -> usize {
        Coefficient::ALL.iter().position(|x| *x == c).expect("listed")
    }

    pub fn scalar_curvature(&self, a2: &ExactScalar) -> ExactScalar {
        self.get(Coefficient::ScalarConst) + self.get(Coefficient::ScalarNorm) * a2
    }

    pub fn ricci_norm_squared(&self, a2: &ExactScalar, f4: &ExactScalar) -> ExactScalar {
        self.get(Coefficient::RicciConst)
            + self.get(Coefficient::RicciNorm) * a2
            + self.get(Coefficient::RicciF4) * f4
    }

    pub fn weyl_norm_squared(&self, a2: &ExactScalar, f4: &ExactScalar) -> ExactScalar {
        self.get(Coefficient::WeylNorm4) * a2.square() + self.get(Coefficient::WeylF4) * f4
    }

    pub fn gbc_integrand(&self, a2: &ExactScalar, f4: &ExactScalar) -> ExactScalar {
        self.get(Coefficient::GbcNorm4) * a2.square()
            + self.get(Coefficient::GbcF4) * f4
            + self.get(Coefficient::GbcNorm) * a2
            + self.get(Coefficient::GbcConst)
    }

    pub fn f4_from_gauss(&self, a2: &ExactScalar, gauss: &ExactScalar) -> ExactScalar {
        self.get(Coefficient::NewtonNorm4) * a2.square() + self.get(Coefficient::NewtonGauss) * gauss
    }

    pub fn traceless_ricci_squared(&self, a2: &ExactScalar, f4: &ExactScalar) -> ExactScalar {
        self.get(Coefficient::TracelessF4) * f4 + self.get(Coefficient::TracelessNorm4) * a2.square()
    }

    /// `|A|⁴ = c·f₄`.
    pub fn is_conformally_flat(&self, a2: &ExactScalar, f4: &ExactScalar) -> bool {
        (a2.square() - self.get(Coefficient::ConformalRatio) * f4).is_zero()
    }
}

//! Concrete gamma-matrix representations.
//!
//! The Dirac representation is the reference. The other two are obtained
//! from it by fixed similarity transforms `γ_R = S γ_D S⁻¹`, with `S` left
//! unnormalized so every entry stays in the Gaussian integers:
//!
//! | representation | `S`                        | `S⁻¹`       |
//! |----------------|----------------------------|-------------|
//! | Majorana       | `[[I, σ²], [σ², −I]]`       | `S / 2`     |
//! | Weyl (chiral)  | `[[I, −I], [I, I]]`         | `Sᵀ / 2`    |
//!
//! Resulting Majorana matrices: `γ⁰ = [[0, σ²], [σ², 0]]`,
//! `γ¹ = diag(iσ³, iσ³)`, `γ² = [[0, −σ²], [σ², 0]]`,
//! `γ³ = diag(−iσ¹, −iσ¹)`, all purely imaginary. Weyl matrices:
//! `γ⁰ = [[0, I], [I, 0]]`, `γ^j` as in Dirac, `γ⁵ = diag(−I, I)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::matrix::{
    anticommutator, block_identity, block_scale, block_zero, imag_unit, pauli, re, Matrix4,
};
use crate::scalar::Scalar;

/// Diagonal of the metric `g = diag(1, −1, −1, −1)`.
pub const METRIC: [i64; 4] = [1, -1, -1, -1];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Dirac,
    Majorana,
    Weyl,
}

impl Representation {
    pub const ALL: [Representation; 3] = [
        Representation::Dirac,
        Representation::Majorana,
        Representation::Weyl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Representation::Dirac => "dirac",
            Representation::Majorana => "majorana",
            Representation::Weyl => "weyl",
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Representation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dirac" => Ok(Representation::Dirac),
            "majorana" => Ok(Representation::Majorana),
            "weyl" | "chiral" => Ok(Representation::Weyl),
            other => Err(format!("unknown representation `{other}`")),
        }
    }
}

/// Four gamma matrices plus the similarity connecting them to the Dirac set.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaRepresentation<T: Scalar> {
    name: Representation,
    gammas: [Matrix4<T>; 4],
    from_dirac: Matrix4<T>,
    to_dirac: Matrix4<T>,
}

impl<T: Scalar> GammaRepresentation<T> {
    pub fn name(&self) -> Representation {
        self.name
    }

    pub fn gamma(&self, mu: usize) -> &Matrix4<T> {
        &self.gammas[mu]
    }

    pub fn gammas(&self) -> &[Matrix4<T>; 4] {
        &self.gammas
    }

    /// `S` with `γ_R = S γ_D S⁻¹`; spinors map as `ψ_R = S ψ_D`.
    pub fn from_dirac(&self) -> &Matrix4<T> {
        &self.from_dirac
    }

    pub fn to_dirac(&self) -> &Matrix4<T> {
        &self.to_dirac
    }

    /// Replaces one generator, mainly to build deliberately broken sets.
    pub fn with_gamma(mut self, mu: usize, m: Matrix4<T>) -> Self {
        self.gammas[mu] = m;
        self
    }

    /// Ordered product `γ^{μ₁} γ^{μ₂} ⋯`; empty product is the identity.
    pub fn product(&self, indices: &[usize]) -> Matrix4<T> {
        indices
            .iter()
            .fold(Matrix4::identity(), |acc, &mu| &acc * &self.gammas[mu])
    }

    /// Maps a Dirac-representation matrix into this representation.
    pub fn transform(&self, m: &Matrix4<T>) -> Matrix4<T> {
        &(&self.from_dirac * m) * &self.to_dirac
    }
}

fn dirac_gammas<T: Scalar>() -> [Matrix4<T>; 4] {
    let one = block_identity::<T>();
    let zero = block_zero::<T>();
    let minus = re(-T::one());
    let g0 = Matrix4::from_blocks(&one, &zero, &zero, &block_scale(&one, &minus));
    let spatial = |k: usize| {
        let s = pauli::<T>(k);
        Matrix4::from_blocks(&zero, &s, &block_scale(&s, &minus), &zero)
    };
    [g0, spatial(1), spatial(2), spatial(3)]
}

fn similarity<T: Scalar>(name: Representation) -> (Matrix4<T>, Matrix4<T>) {
    let one = block_identity::<T>();
    let half = re(T::from_ratio(1, 2));
    match name {
        Representation::Dirac => (Matrix4::identity(), Matrix4::identity()),
        Representation::Majorana => {
            let s2 = pauli::<T>(2);
            let minus_one = block_scale(&one, &re(-T::one()));
            let s = Matrix4::from_blocks(&one, &s2, &s2, &minus_one);
            let inv = s.scale(&half);
            (s, inv)
        }
        Representation::Weyl => {
            let minus_one = block_scale(&one, &re(-T::one()));
            let s = Matrix4::from_blocks(&one, &minus_one, &one, &one);
            let inv = s.transpose().scale(&half);
            (s, inv)
        }
    }
}

/// Builds the named representation. Total over the enum.
pub fn build_representation<T: Scalar>(name: Representation) -> GammaRepresentation<T> {
    let dirac = dirac_gammas::<T>();
    let (from_dirac, to_dirac) = similarity::<T>(name);
    let gammas = std::array::from_fn(|mu| &(&from_dirac * &dirac[mu]) * &to_dirac);
    GammaRepresentation {
        name,
        gammas,
        from_dirac,
        to_dirac,
    }
}

/// `{γ^μ, γ^ν} = 2 g^{μν} I` for all ten unordered pairs.
pub fn check_clifford<T: Scalar>(rep: &GammaRepresentation<T>) -> bool {
    clifford_violations(rep, 0.0).is_empty()
}

/// The `(μ, ν)` pairs with `μ ≤ ν` whose anticommutator is wrong.
pub fn clifford_violations<T: Scalar>(
    rep: &GammaRepresentation<T>,
    tol: f64,
) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (mu, g) in METRIC.iter().enumerate() {
        for nu in mu..4 {
            let expected = if mu == nu {
                Matrix4::identity().scale(&re(T::from_ratio(2 * g, 1)))
            } else {
                Matrix4::zero()
            };
            if !anticommutator(rep.gamma(mu), rep.gamma(nu)).approx_eq(&expected, tol) {
                bad.push((mu, nu));
            }
        }
    }
    bad
}

/// `γ⁵ = i γ⁰γ¹γ²γ³`.
pub fn gamma5<T: Scalar>(rep: &GammaRepresentation<T>) -> Matrix4<T> {
    rep.product(&[0, 1, 2, 3]).scale(&imag_unit())
}

/// `γ^μ` is self-adjoint for μ = 0 and anti-self-adjoint otherwise.
pub fn has_standard_hermiticity<T: Scalar>(rep: &GammaRepresentation<T>) -> bool {
    (0..4).all(|mu| {
        let g = rep.gamma(mu);
        if mu == 0 {
            g.adjoint() == *g
        } else {
            g.adjoint() == -g
        }
    })
}

/// Sign `c_μ` with `conj(γ^μ) = c_μ γ^μ`, when every generator is either
/// real or purely imaginary (true for all three supported representations).
pub fn conjugation_signs<T: Scalar>(rep: &GammaRepresentation<T>) -> Option<[i8; 4]> {
    let mut signs = [0i8; 4];
    for (mu, sign) in signs.iter_mut().enumerate() {
        let g = rep.gamma(mu);
        let conj = g.conj();
        *sign = if conj == *g {
            1
        } else if conj == -g {
            -1
        } else {
            return None;
        };
    }
    Some(signs)
}

pub(crate) fn metric_scalar<T: Scalar>(mu: usize) -> T {
    if METRIC[mu] > 0 {
        T::one()
    } else {
        -T::one()
    }
}

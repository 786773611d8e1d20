//! Unitarity along the line `λ + r(-1, …, -1)` and the
//! unitary part of a regular integral dot orbit.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weights::{self, HalfInt, Weight};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PQCounts {
    /// `#{i : λ_i = λ_n}`
    pub p: usize,
    /// `#{i : λ_i = λ_n + 1}`
    pub q: usize,
}

fn dominant_row(lambda: &Weight, place: usize) -> Result<&[HalfInt]> {
    let row = lambda.at(place)?;
    if !weights::is_k_dominant_row(row) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(row)
}

fn counts(row: &[HalfInt]) -> PQCounts {
    let last = *row.last().expect("rank is positive");
    let one = HalfInt::from_int(1);
    PQCounts {
        p: row.iter().filter(|&&x| x == last).count(),
        q: row.iter().filter(|&&x| x == last + one).count(),
    }
}

pub fn pq_counts(lambda: &Weight, place: usize) -> Result<PQCounts> {
    dominant_row(lambda, place).map(counts)
}

/// `(p + q + 1)/2` for a dominant weight normalized to `λ_n = n`.
pub fn first_reduction_point(lambda0: &Weight, place: usize) -> Result<HalfInt> {
    let row = dominant_row(lambda0, place)?;
    let n = row.len() as i64;
    if *row.last().unwrap() != HalfInt::from_int(n) {
        return Err(Error::Invalid(format!(
            "{lambda0} is not normalized to last entry {n}"
        )));
    }
    let c = counts(row);
    Ok(HalfInt::from_doubled((c.p + c.q + 1) as i64))
}

/// Both branches of the unitarity criterion, kept apart for reporting.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct UnitarityVerdict {
    /// Shift `r = n - λ_n` from the normalized weight.
    pub shift: HalfInt,
    pub counts: PQCounts,
    /// `r ≤ (p + q + 1)/2`
    pub continuous: bool,
    /// All entries lie in `(1/2)Z`.
    pub half_integral: bool,
    /// `r ≤ p + q/2` (only counted when `half_integral`).
    pub discrete: bool,
    pub unitarizable: bool,
}

/// Evaluates the criterion for a dominant weight at one place.
///
/// Weights are written as `λ0 + r(-1, …, -1)` with `λ0_n = n`; `p` and `q`
/// are shift invariant so they are read directly off `λ`.
pub fn unitarity_verdict(lambda: &Weight, place: usize) -> Result<UnitarityVerdict> {
    let row = dominant_row(lambda, place)?;
    let n = row.len() as i64;
    let shift = HalfInt::from_int(n) - *row.last().unwrap();
    let c = counts(row);
    let r2 = shift.doubled();
    let continuous = r2 <= (c.p + c.q + 1) as i64;
    // entries are stored in (1/2)Z, so the second branch always applies
    let half_integral = true;
    let discrete = half_integral && r2 <= (2 * c.p + c.q) as i64;
    Ok(UnitarityVerdict {
        shift,
        counts: c,
        continuous,
        half_integral,
        discrete,
        unitarizable: continuous || discrete,
    })
}

/// Whether `L(λ)` is unitarizable at `place`. Non-dominant weights have no
/// `L(λ)` in the parabolic category and report `false`.
pub fn is_unitarizable(lambda: &Weight, place: usize) -> bool {
    unitarity_verdict(lambda, place).is_ok_and(|v| v.unitarizable)
}

/// Unitarizable at every place.
pub fn is_unitarizable_everywhere(lambda: &Weight) -> bool {
    (0..lambda.places()).all(|v| is_unitarizable(lambda, v))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OrbitMember {
    pub j: usize,
    pub weight: Weight,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UnitaryOrbit {
    pub base: Weight,
    pub members: Vec<OrbitMember>,
}

impl UnitaryOrbit {
    pub fn weights(&self) -> Vec<Weight> {
        self.members.iter().map(|m| m.weight.clone()).collect()
    }
}

fn check_regular_antidominant(lambda: &Weight, place: usize) -> Result<&[HalfInt]> {
    let row = lambda.at(place)?;
    if !row.iter().all(|h| h.is_integer()) {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !weights::is_regular_row(row) {
        return Err(Error::Singular(lambda.to_string()));
    }
    if !weights::is_antidominant_row(row) {
        return Err(Error::NotAntidominant(lambda.to_string()));
    }
    Ok(row)
}

/// `λ^(j) = (λ_1, …, λ_{n-j}, n-j, …, n-j)`.
pub fn lambda_j(lambda: &Weight, place: usize, j: usize) -> Result<Weight> {
    let row = lambda.at(place)?;
    let n = row.len();
    if j > n {
        return Err(Error::Invalid(format!("j = {j} exceeds rank {n}")));
    }
    let mut out = row.to_vec();
    for x in &mut out[n - j..] {
        *x = HalfInt::from_int((n - j) as i64);
    }
    lambda.with_place(place, out)
}

/// The unitary members of the dot orbit of a regular anti-dominant integral
/// weight, in closed form.
pub fn unitary_orbit(lambda: &Weight, place: usize) -> Result<UnitaryOrbit> {
    let row = check_regular_antidominant(lambda, place)?;
    let n = row.len() as i64;
    let last = *row.last().unwrap();
    let members = if last > HalfInt::from_int(n + 1) {
        vec![OrbitMember {
            j: 0,
            weight: lambda.clone(),
        }]
    } else {
        let p = counts(row).p;
        (0..=p)
            .map(|j| {
                Ok(OrbitMember {
                    j,
                    weight: lambda_j(lambda, place, j)?,
                })
            })
            .collect::<Result<_>>()?
    };
    Ok(UnitaryOrbit {
        base: lambda.clone(),
        members,
    })
}

/// Brute force: dominant orbit members with unitarizable `L`, sorted.
pub fn unitary_orbit_by_filter(lambda: &Weight, place: usize) -> Result<Vec<Weight>> {
    check_regular_antidominant(lambda, place)?;
    Ok(weights::dot_orbit(lambda, place)?
        .into_iter()
        .filter(|mu| {
            weights::is_k_dominant_row(mu.at(place).unwrap()) && is_unitarizable(mu, place)
        })
        .collect())
}

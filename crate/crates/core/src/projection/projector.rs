//! Projector plans `p_χ = (∏ D_{χ,ω}) / ∏ χ(D_{χ,ω})` and finite models of
//! direct sums of highest-weight modules to apply them to.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::character::{inf_char, InfinitesimalCharacter};
use super::xset;
use crate::envelope::{exact_algebra, BasisElement, Block, Uea};
use crate::error::{Error, Result};
use crate::ktypes::{even_partitions, lr_coefficients, KTypeSignature};
use crate::linalg::Matrix;
use crate::scalar::{format_rational, Scalar};
use crate::weights::{HalfInt, Weight};
use crate::{GaussianRational, UeaElement};

/// One factor `D_{2i} − ω_v(D_{2i})` at place `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectorFactor {
    pub omega: InfinitesimalCharacter,
    pub place: usize,
    pub index: usize,
    pub scalar: BigRational,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectorPlan {
    pub target: InfinitesimalCharacter,
    /// `χ(ρ)`: every character the plan knows how to treat.
    pub characters: Vec<InfinitesimalCharacter>,
    pub factors: Vec<ProjectorFactor>,
    pub normalization: BigRational,
}

impl Serialize for ProjectorFactor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            omega: &'a InfinitesimalCharacter,
            place: usize,
            index: usize,
            scalar: String,
        }
        Raw {
            omega: &self.omega,
            place: self.place,
            index: self.index,
            scalar: format_rational(&self.scalar),
        }
        .serialize(s)
    }
}

impl Serialize for ProjectorPlan {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            target: &'a InfinitesimalCharacter,
            characters: &'a [InfinitesimalCharacter],
            factors: &'a [ProjectorFactor],
            normalization: String,
        }
        Raw {
            target: &self.target,
            characters: &self.characters,
            factors: &self.factors,
            normalization: format_rational(&self.normalization),
        }
        .serialize(s)
    }
}

/// The distinct characters `{χ_μ : μ ∈ X(ρ)}`, sorted.
pub fn characters_of(rho: &[KTypeSignature]) -> Result<Vec<InfinitesimalCharacter>> {
    let set: BTreeSet<InfinitesimalCharacter> = xset(rho)?.iter().map(inf_char).collect();
    Ok(set.into_iter().collect())
}

/// Plans `p_χ` for the K-type `ρ`: one factor for each other character in
/// `χ(ρ)`, at its least separating index.
pub fn build_projector(chi: &InfinitesimalCharacter, rho: &[KTypeSignature]) -> Result<ProjectorPlan> {
    let characters = characters_of(rho)?;
    build_projector_for(chi, characters)
}

/// As [`build_projector`] with an explicit character family.
pub fn build_projector_for(
    chi: &InfinitesimalCharacter,
    characters: Vec<InfinitesimalCharacter>,
) -> Result<ProjectorPlan> {
    let mut factors = Vec::new();
    let mut denom = BigRational::one();
    for omega in &characters {
        if omega == chi {
            continue;
        }
        if omega.rank() != chi.rank() || omega.places() != chi.places() {
            return Err(Error::Invalid(format!("{omega} and {chi} have different shapes")));
        }
        let (place, index) = chi.separation(omega).ok_or_else(|| {
            Error::Invalid(format!("no separating index between {chi} and {omega}"))
        })?;
        let scalar = omega.value(place, index).clone();
        denom *= chi.value(place, index) - &scalar;
        factors.push(ProjectorFactor {
            omega: omega.clone(),
            place,
            index,
            scalar,
        });
    }
    Ok(ProjectorPlan {
        target: chi.clone(),
        characters,
        factors,
        normalization: denom.recip(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum ModuleKind {
    Verma,
    Irreducible,
    DualVerma,
}

impl ModuleKind {
    pub fn prefix(self) -> &'static str {
        match self {
            ModuleKind::Verma => "N",
            ModuleKind::Irreducible => "L",
            ModuleKind::DualVerma => "NDual",
        }
    }
}

/// `L(4,3)`, `N(4,1)`, `NDual(4,1)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ModuleDescriptor {
    pub kind: ModuleKind,
    pub weight: Weight,
}

impl std::fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.weight)
    }
}

impl Serialize for ModuleDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One summand of a model: a truncated module whose basis is graded by
/// K-type, one K-type per place.
#[derive(Clone, Debug)]
pub struct Summand {
    pub descriptor: ModuleDescriptor,
    pub truncation: usize,
    pub character: InfinitesimalCharacter,
    /// Per basis vector: the K-type at each place and the total degree.
    pub basis: Vec<(Vec<KTypeSignature>, usize)>,
}

/// A finite direct sum of truncated modules with the surrogate central
/// operators acting by their characters and a non-central degree-raising
/// operator inside each summand.
#[derive(Clone, Debug)]
pub struct Model<T> {
    summands: Vec<Summand>,
    _scalar: std::marker::PhantomData<T>,
}

/// Default truncation degree of model summands.
pub const DEFAULT_TRUNCATION: usize = 6;

/// K-types of `U(p₊) ⊗ ρ_μ` of degree at most `t`, with multiplicity.
fn verma_ktypes(mu: &[i64], t: usize) -> Result<Vec<(KTypeSignature, usize)>> {
    let n = mu.len();
    let base = KTypeSignature::new(mu.to_vec())?;
    let mut out = Vec::new();
    for deg in 0..=t {
        for b in even_partitions(2 * deg as i64, n) {
            for (sigma, c) in lr_coefficients(&base, &b.as_signature())? {
                out.extend(std::iter::repeat_n((sigma, deg), c as usize));
            }
        }
    }
    Ok(out)
}

pub(crate) fn to_scalar<T: Scalar>(q: &BigRational) -> Result<T> {
    T::from_big_rational(q).ok_or_else(|| Error::Invalid(format!("{} does not fit the scalar type", format_rational(q))))
}

impl<T: Scalar> Model<T> {
    pub fn new(modules: &[(ModuleKind, Weight)], truncation: usize) -> Result<Self> {
        let mut summands = Vec::with_capacity(modules.len());
        for (kind, weight) in modules {
            if let Some(first) = summands.first() {
                let f: &Summand = first;
                if f.descriptor.weight.rank() != weight.rank() || f.descriptor.weight.places() != weight.places() {
                    return Err(Error::Invalid("summands must share rank and places".into()));
                }
            }
            let mut basis: Vec<(Vec<KTypeSignature>, usize)> = vec![(Vec::new(), 0)];
            for v in 0..weight.places() {
                let kt = verma_ktypes(&weight.ints_at(v)?, truncation)?;
                basis = basis
                    .iter()
                    .flat_map(|(sig, deg)| {
                        kt.iter().filter(move |(_, d)| deg + d <= truncation).map(move |(s, d)| {
                            let mut sig = sig.clone();
                            sig.push(s.clone());
                            (sig, deg + d)
                        })
                    })
                    .collect();
            }
            summands.push(Summand {
                descriptor: ModuleDescriptor {
                    kind: *kind,
                    weight: weight.clone(),
                },
                truncation,
                character: inf_char(weight),
                basis,
            });
        }
        Ok(Model {
            summands,
            _scalar: std::marker::PhantomData,
        })
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.basis.len()).sum()
    }

    /// Coordinate range of summand `k`.
    pub fn range(&self, k: usize) -> std::ops::Range<usize> {
        let start: usize = self.summands[..k].iter().map(|s| s.basis.len()).sum();
        start..start + self.summands[k].basis.len()
    }

    /// Diagonal of the surrogate `D_{2i}` at `place`.
    pub fn central_diagonal(&self, place: usize, i: usize) -> Result<Vec<T>> {
        let mut out = Vec::with_capacity(self.dim());
        for s in &self.summands {
            if place >= s.character.places() || i == 0 || i > s.character.rank() {
                return Err(Error::Invalid(format!("no operator D_{} at place {place}", 2 * i)));
            }
            let c = to_scalar::<T>(s.character.value(place, i))?;
            out.extend(std::iter::repeat_n(c, s.basis.len()));
        }
        Ok(out)
    }

    pub fn central_operator(&self, place: usize, i: usize) -> Result<Matrix<T>> {
        let d = self.central_diagonal(place, i)?;
        let mut m = Matrix::zeros(d.len(), d.len());
        for (k, c) in d.into_iter().enumerate() {
            m[(k, k)] = c;
        }
        Ok(m)
    }

    /// Sends each basis vector to the sum of the basis vectors one degree
    /// higher in the same summand.
    pub fn raising_operator(&self) -> Matrix<T> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for k in 0..self.summands.len() {
            let r = self.range(k);
            let basis = &self.summands[k].basis;
            for (a, (_, da)) in basis.iter().enumerate() {
                for (b, (_, db)) in basis.iter().enumerate() {
                    if *db == da + 1 {
                        m[(r.start + b, r.start + a)] = T::one();
                    }
                }
            }
        }
        m
    }
}

/// `p_χ v` on a model.
pub fn apply_projector<T: Scalar>(plan: &ProjectorPlan, model: &Model<T>, v: &[T]) -> Result<Vec<T>> {
    if v.len() != model.dim() {
        return Err(Error::RankMismatch {
            expected: model.dim(),
            got: v.len(),
        });
    }
    for s in model.summands() {
        if s.character != plan.target && !plan.characters.contains(&s.character) {
            return Err(Error::Invalid(format!(
                "summand {} has character {} outside the plan",
                s.descriptor, s.character
            )));
        }
    }
    let mut w = v.to_vec();
    for f in &plan.factors {
        let diag = model.central_diagonal(f.place, f.index)?;
        let c = to_scalar::<T>(&f.scalar)?;
        for (x, d) in w.iter_mut().zip(diag) {
            *x = x.clone() * (d - c.clone());
        }
    }
    let norm = to_scalar::<T>(&plan.normalization)?;
    Ok(w.into_iter().map(|x| x * norm.clone()).collect())
}

/// Action of a central element on the truncated Verma module with a
/// one-dimensional K-type `det^k`, in the basis of `p₊` monomials applied to
/// the highest-weight vector.
pub fn verma_central_matrix(k: i64, e: &UeaElement, truncation: usize) -> Result<Matrix<GaussianRational>> {
    let n = e.rank();
    let alg = exact_algebra(n)?;
    let basis = alg.basis();
    let n_plus = basis.iter().filter(|b| b.block() == Block::PPlus).count() as u16;
    let mut monomials: Vec<Vec<u16>> = vec![Vec::new()];
    let mut layer: Vec<Vec<u16>> = vec![Vec::new()];
    for _ in 0..truncation {
        let mut next = Vec::new();
        for m in &layer {
            let lo = m.last().copied().unwrap_or(0);
            for x in lo..n_plus {
                let mut m2 = m.clone();
                m2.push(x);
                next.push(m2);
            }
        }
        monomials.extend(next.iter().cloned());
        layer = next;
    }
    let index = |m: &[u16]| monomials.iter().position(|x| x == m);
    let dim = monomials.len();
    let mut out: Matrix<GaussianRational> = Matrix::zeros(dim, dim);
    let lambda = HalfInt::from_int(k).to_rational();
    for (col, m) in monomials.iter().enumerate() {
        let mut word = Uea::one(n);
        for &x in m {
            word = alg.mul(&word, &alg.generator(basis[x as usize])?);
        }
        let image = alg.mul(e, &word);
        'terms: for (mono, c) in image.terms() {
            let split = mono.iter().position(|&x| x >= n_plus).unwrap_or(mono.len());
            let mut value = GaussianRational::one();
            for &x in &mono[split..] {
                match basis[x as usize] {
                    BasisElement::B(a, b) if a == b => {
                        value = value * GaussianRational::real(lambda.clone());
                    }
                    _ => continue 'terms,
                }
            }
            let row = index(&mono[..split]).ok_or_else(|| {
                Error::Invalid("central element left the truncated module".into())
            })?;
            out[(row, col)] = out[(row, col)].clone() + c.clone() * value;
        }
    }
    Ok(out)
}

//! Infinitesimal characters, the set `X(ρ)`, projectors onto character
//! eigenspaces, and the classification of modules generated by a K-type.

pub mod character;
pub mod projector;

use serde::Serialize;

pub use character::{elementary_symmetric, inf_char, InfinitesimalCharacter};
pub use projector::{
    apply_projector, build_projector, build_projector_for, characters_of, verma_central_matrix, Model,
    ModuleDescriptor, ModuleKind, ProjectorFactor, ProjectorPlan, Summand, DEFAULT_TRUNCATION,
};

use crate::error::{Error, Result};
use crate::ktypes::{distinguished_ktype, verma_ktype_multiplicity, KTypeSignature};
use crate::unitarity::{self, is_unitarizable};
use crate::weights::{self, HalfInt, Weight};

/// Dominant `μ` below `λ` (entrywise, even total difference) with
/// `0 ≤ μ_n`, at one place.
fn candidates_below(lambda: &[i64]) -> Vec<Vec<i64>> {
    fn go(lambda: &[i64], i: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = lambda.len();
        if i == n {
            let diff: i64 = lambda.iter().zip(cur.iter()).map(|(a, b)| a - b).sum();
            if diff % 2 == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = if i == 0 { lambda[0] } else { lambda[i].min(cur[i - 1]) };
        for v in (0..=hi).rev() {
            cur.push(v);
            go(lambda, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, &mut Vec::new(), &mut out);
    out
}

fn xset_place(rho: &KTypeSignature) -> Result<Vec<Vec<i64>>> {
    let lambda = rho.weight();
    let mut out = Vec::new();
    for mu in candidates_below(lambda) {
        let w = Weight::single(&mu)?;
        if !is_unitarizable(&w, 0) {
            continue;
        }
        let degree = ((rho.size() - mu.iter().sum::<i64>()) / 2) as usize;
        if verma_ktype_multiplicity(&mu, rho, degree)? > 0 {
            out.push(mu);
        }
    }
    Ok(out)
}

/// `X(ρ)`: unitarizable `μ`, reachable from `ρ` by subtracting weights of
/// `p₊`, whose Verma module contains the K-type `ρ`. Sorted descending.
pub fn xset(rho: &[KTypeSignature]) -> Result<Vec<Weight>> {
    if rho.is_empty() {
        return Err(Error::Invalid("a K-type needs at least one place".into()));
    }
    let n = rho[0].rank();
    if let Some(bad) = rho.iter().find(|s| s.rank() != n) {
        return Err(Error::RankMismatch {
            expected: n,
            got: bad.rank(),
        });
    }
    let per_place: Vec<Vec<Vec<i64>>> = rho.iter().map(xset_place).collect::<Result<_>>()?;
    let mut rows: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for options in &per_place {
        rows = rows
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect();
    }
    let mut out: Vec<Weight> = rows
        .iter()
        .map(|r| Weight::from_ints(&r.iter().map(Vec::as_slice).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Which case of the classification applied.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    SeveralPlaces,
    Generic,
    Boundary,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::SeveralPlaces => "d>1",
            Branch::Generic => "lambda_n!=n+1",
            Branch::Boundary => "lambda_n=n+1",
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationResult {
    pub branch: Branch,
    pub possibilities: Vec<ModuleDescriptor>,
}

fn irreducible(weight: Weight) -> ModuleDescriptor {
    ModuleDescriptor {
        kind: ModuleKind::Irreducible,
        weight,
    }
}

/// The possible modules generated by the K-type `σ` (or by any K-type when
/// `σ` is absent) inside the space attached to a regular anti-dominant `λ`.
pub fn classify_module(
    n: usize,
    d: usize,
    lambda: &Weight,
    sigma: Option<&KTypeSignature>,
) -> Result<ClassificationResult> {
    if lambda.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda.rank(),
        });
    }
    if lambda.places() != d {
        return Err(Error::Invalid(format!(
            "weight has {} places but d = {d}",
            lambda.places()
        )));
    }
    for row in lambda.entries() {
        if !row.iter().all(|h| h.is_integer()) {
            return Err(Error::NotIntegral(lambda.to_string()));
        }
        if !weights::is_regular_row(row) {
            return Err(Error::Singular(lambda.to_string()));
        }
        if !weights::is_antidominant_row(row) {
            return Err(Error::NotAntidominant(lambda.to_string()));
        }
    }
    if let Some(s) = sigma {
        if s.rank() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: s.rank(),
            });
        }
    }
    if d > 1 {
        return Ok(ClassificationResult {
            branch: Branch::SeveralPlaces,
            possibilities: vec![irreducible(lambda.clone())],
        });
    }
    let row = lambda.ints_at(0)?;
    if row[n - 1] != n as i64 + 1 {
        return Ok(ClassificationResult {
            branch: Branch::Generic,
            possibilities: vec![irreducible(lambda.clone())],
        });
    }
    let orbit = unitarity::unitary_orbit(lambda, 0)?.weights();
    let dual = ModuleDescriptor {
        kind: ModuleKind::DualVerma,
        weight: unitarity::lambda_j(lambda, 0, 1)?,
    };
    let possibilities = match sigma {
        None => orbit.into_iter().map(irreducible).chain([dual]).collect(),
        Some(s) if *s == distinguished_ktype(&row)? => vec![irreducible(lambda.clone()), dual],
        Some(s) => {
            let occurs = |w: &Weight| -> Result<bool> {
                let mu = w.ints_at(0)?;
                let degree = ((s.size() - mu.iter().sum::<i64>()).max(0) / 2) as usize;
                Ok(verma_ktype_multiplicity(&mu, s, degree)? > 0)
            };
            let mut out = Vec::new();
            for w in orbit {
                if occurs(&w)? {
                    out.push(irreducible(w));
                }
            }
            if occurs(&dual.weight)? {
                out.push(dual);
            }
            out
        }
    };
    Ok(ClassificationResult {
        branch: Branch::Boundary,
        possibilities,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExtStructure {
    pub lambda: Weight,
    pub lambda_prime: Weight,
    pub ext_dim: usize,
    pub exact_sequence: String,
}

/// The non-split extension `0 → L(λ) → N(λ′) → L(λ′) → 0` with
/// `λ = (head, (n − (i−3)/2)^i)` and `λ′ = (head, (n − (i+1)/2)^i)`.
pub fn ext_structure(n: usize, i: usize, head: &[i64]) -> Result<ExtStructure> {
    if i.is_multiple_of(2) {
        return Err(Error::Invalid(format!("i = {i} must be odd")));
    }
    if i > n || head.len() != n - i {
        return Err(Error::Invalid(format!(
            "head must have length n - i = {}",
            n as i64 - i as i64
        )));
    }
    let (n_, i_) = (n as i64, i as i64);
    let top = n_ - (i_ - 3) / 2;
    let bottom = n_ - (i_ + 1) / 2;
    if head.windows(2).any(|w| w[0] < w[1]) || head.last().is_some_and(|&h| h < top) {
        return Err(Error::Invalid(format!(
            "head must be decreasing with last entry at least {top}"
        )));
    }
    let build = |tail: i64| -> Result<Weight> {
        let mut v = head.to_vec();
        v.extend(std::iter::repeat_n(tail, i));
        Weight::single(&v)
    };
    let lambda = build(top)?;
    let lambda_prime = build(bottom)?;
    let row: Vec<HalfInt> = lambda.at(0)?.to_vec();
    if !weights::is_regular_row(&row) {
        return Err(Error::Singular(lambda.to_string()));
    }
    if weights::abs_multiset(&lambda) != weights::abs_multiset(&lambda_prime) {
        return Err(Error::Invalid(format!(
            "{lambda} and {lambda_prime} lie in different dot orbits"
        )));
    }
    let exact_sequence = format!("0 -> L{lambda} -> N{lambda_prime} -> L{lambda_prime} -> 0");
    Ok(ExtStructure {
        lambda,
        lambda_prime,
        ext_dim: 1,
        exact_sequence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: &[i64]) -> Weight {
        Weight::single(e).unwrap()
    }

    fn sig(v: &[i64]) -> KTypeSignature {
        KTypeSignature::new(v.to_vec()).unwrap()
    }

    fn labels(r: &ClassificationResult) -> Vec<String> {
        r.possibilities.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn xset_examples() {
        assert_eq!(xset(&[sig(&[4])]).unwrap(), vec![w(&[4]), w(&[2]), w(&[0])]);
        assert_eq!(xset(&[sig(&[1])]).unwrap(), vec![w(&[1])]);
        let x = xset(&[sig(&[4, 3])]).unwrap();
        assert!(x.contains(&w(&[4, 3])) && x.contains(&w(&[4, 1])));
    }

    #[test]
    fn classification_examples() {
        let r = classify_module(2, 1, &w(&[4, 3]), Some(&sig(&[4, 3]))).unwrap();
        assert_eq!(r.branch, Branch::Boundary);
        assert_eq!(labels(&r), ["L(4,3)", "NDual(4,1)"]);
        let r = classify_module(2, 1, &w(&[4, 3]), None).unwrap();
        assert_eq!(labels(&r), ["L(4,3)", "L(4,1)", "NDual(4,1)"]);
        let two = Weight::parse("5,4;5,4").unwrap();
        let r = classify_module(2, 2, &two, None).unwrap();
        assert_eq!(r.branch, Branch::SeveralPlaces);
        assert_eq!(labels(&r), ["L(5,4;5,4)"]);
        let r = classify_module(2, 1, &w(&[5, 4]), None).unwrap();
        assert_eq!(r.branch, Branch::Generic);
        assert_eq!(labels(&r), ["L(5,4)"]);
        assert!(matches!(classify_module(2, 1, &w(&[4, 1]), None), Err(Error::NotAntidominant(_))));
        assert_eq!(
            serde_json::to_string(&classify_module(2, 1, &w(&[4, 3]), Some(&sig(&[4, 3]))).unwrap()).unwrap(),
            r#"{"branch":"lambda_n=n+1","possibilities":["L(4,3)","NDual(4,1)"]}"#
        );
    }

    #[test]
    fn ext_examples() {
        let e = ext_structure(2, 1, &[4]).unwrap();
        assert_eq!(e.lambda, w(&[4, 3]));
        assert_eq!(e.lambda_prime, w(&[4, 1]));
        assert_eq!(e.exact_sequence, "0 -> L(4,3) -> N(4,1) -> L(4,1) -> 0");
        let e = ext_structure(3, 1, &[5, 4]).unwrap();
        assert_eq!((e.lambda, e.lambda_prime), (w(&[5, 4, 4]), w(&[5, 4, 2])));
        assert!(ext_structure(3, 3, &[]).is_err());
        assert!(ext_structure(2, 2, &[]).is_err());
        assert!(ext_structure(2, 1, &[2]).is_err());
    }
}

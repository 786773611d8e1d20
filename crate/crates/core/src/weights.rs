//! Weights of sp(2n) over several archimedean places, the hyperoctahedral
//! Weyl group, and the shifted (dot) action.
//!
//! Coordinates are taken with respect to the positive system
//! `{-(e_i + e_j), e_k - e_l}`, so `ρ = (-1, …, -n)` and the Harish-Chandra
//! parameter of `λ` is `(λ_i - i)_i`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guard;
use crate::scalar::{format_rational, parse_rational};

/// An element of `(1/2)Z`, stored doubled.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub const fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn from_doubled(v: i64) -> Self {
        HalfInt(v)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(2))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let q = parse_rational(s)?;
        let d = q * BigRational::from_integer(BigInt::from(2));
        if !d.is_integer() {
            return Err(Error::Parse {
                what: "half-integer",
                input: s.to_string(),
            });
        }
        let v: i64 = d.to_integer().try_into().map_err(|_| Error::Parse {
            what: "half-integer",
            input: s.to_string(),
        })?;
        Ok(HalfInt(v))
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.to_rational()))
    }
}

impl Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        HalfInt::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A weight `λ = (λ_{i,v})` with `n` coordinates at each of `d` places.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Weight {
    n: usize,
    d: usize,
    entries: Vec<Vec<HalfInt>>,
}

#[derive(Deserialize)]
struct RawWeight {
    n: usize,
    d: usize,
    entries: Vec<Vec<HalfInt>>,
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawWeight::deserialize(d)?;
        let w = Weight::new(raw.entries).map_err(serde::de::Error::custom)?;
        if w.n != raw.n || w.d != raw.d {
            return Err(serde::de::Error::custom("n/d disagree with entries"));
        }
        Ok(w)
    }
}

impl Weight {
    /// Validates the weight condition: consecutive differences are integers
    /// at every place.
    pub fn new(entries: Vec<Vec<HalfInt>>) -> Result<Self> {
        let d = entries.len();
        if d == 0 {
            return Err(Error::Invalid("a weight needs at least one place".into()));
        }
        let n = entries[0].len();
        if n == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        for row in &entries {
            if row.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if row.windows(2).any(|w| !(w[0] - w[1]).is_integer()) {
                return Err(Error::Invalid(
                    "consecutive entries must differ by integers".into(),
                ));
            }
        }
        Ok(Weight { n, d, entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| HalfInt::from_int(v)).collect())
                .collect(),
        )
    }

    /// Single-place integral weight.
    pub fn single(entries: &[i64]) -> Result<Self> {
        Self::from_ints(&[entries])
    }

    pub fn single_half(entries: Vec<HalfInt>) -> Result<Self> {
        Self::new(vec![entries])
    }

    /// Parses `"4,3"` or, for several places, `"4,3;5,4"`.
    pub fn parse(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|place| {
                place
                    .split(',')
                    .map(|e| HalfInt::parse(e.trim()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn places(&self) -> usize {
        self.d
    }

    pub fn at(&self, place: usize) -> Result<&[HalfInt]> {
        self.entries
            .get(place)
            .map(Vec::as_slice)
            .ok_or(Error::PlaceOutOfRange {
                place,
                places: self.d,
            })
    }

    pub fn entries(&self) -> &[Vec<HalfInt>] {
        &self.entries
    }

    /// Integer coordinates at a place.
    pub fn ints_at(&self, place: usize) -> Result<Vec<i64>> {
        let row = self.at(place)?;
        row.iter()
            .map(|h| h.to_int())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::NotIntegral(self.to_string()))
    }

    pub fn with_place(&self, place: usize, row: Vec<HalfInt>) -> Result<Self> {
        self.at(place)?;
        let mut entries = self.entries.clone();
        entries[place] = row;
        Weight::new(entries)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().flatten().all(|h| h.is_integer())
    }

    /// Compact `"4,3"` / `"4,3;5,4"` label.
    pub fn label(&self) -> String {
        self.entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Signed permutation of `n` letters: `(w·x)_i = signs_i · x_{perm_i}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Invalid("signs must be ±1".into()));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// Negates coordinate `i` (0-based).
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[i] = -1;
        w
    }

    /// Exchanges coordinates `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, j);
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `self ∘ other`, so that `compose(a, b)` acts as `a(b(x))`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm = self.perm.iter().map(|&p| other.perm[p]).collect();
        let signs = self
            .perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| s * other.signs[p])
            .collect();
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    pub fn act<T: Copy + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| if s < 0 { -x[p] } else { x[p] })
            .collect()
    }

    /// All `2^n · n!` elements in a deterministic order.
    pub fn all(n: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1u64 << n) {
                let signs = (0..n)
                    .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(WeylElement {
                    perm: perm.clone(),
                    signs,
                });
            }
        }
        out
    }

    pub fn order(n: usize) -> u128 {
        (1..=n as u128).product::<u128>() << n
    }
}

/// Lexicographic permutations of `0..n`.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// `ρ = (-1, …, -n)`, half the sum of the chosen positive roots.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Rho {
    pub n: usize,
    pub coords: Vec<HalfInt>,
}

impl Rho {
    /// `ρ_{i,n} = n - (i-1)/2`, half the sum of the roots in the unipotent
    /// radical of the parabolic with Levi `GL_i × Sp_{2(n-i)}`.
    pub fn parabolic(i: usize, n: usize) -> HalfInt {
        HalfInt::from_doubled(2 * n as i64 - (i as i64 - 1))
    }
}

pub fn rho(n: usize) -> Result<Rho> {
    if n == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    Ok(Rho {
        n,
        coords: (1..=n as i64).map(|i| HalfInt::from_int(-i)).collect(),
    })
}

fn plus_rho(row: &[HalfInt]) -> Vec<HalfInt> {
    row.iter()
        .enumerate()
        .map(|(i, &x)| x - HalfInt::from_int(i as i64 + 1))
        .collect()
}

fn minus_rho(row: &[HalfInt]) -> Vec<HalfInt> {
    row.iter()
        .enumerate()
        .map(|(i, &x)| x + HalfInt::from_int(i as i64 + 1))
        .collect()
}

/// Harish-Chandra parameter `λ + ρ` at a place.
pub fn hc_parameter(row: &[HalfInt]) -> Vec<HalfInt> {
    plus_rho(row)
}

/// `w(λ + ρ) - ρ` at one place; the other places are untouched.
pub fn dot_act(w: &WeylElement, lambda: &Weight, place: usize) -> Result<Weight> {
    if w.rank() != lambda.rank() {
        return Err(Error::RankMismatch {
            expected: lambda.rank(),
            got: w.rank(),
        });
    }
    let row = lambda.at(place)?;
    let moved = minus_rho(&w.act(&plus_rho(row)));
    lambda.with_place(place, moved)
}

/// Per place, the multiset `{|λ_i - i|}` sorted descending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct AbsMultiset(pub Vec<Vec<HalfInt>>);

pub fn abs_multiset(lambda: &Weight) -> AbsMultiset {
    AbsMultiset(
        lambda
            .entries()
            .iter()
            .map(|row| abs_sorted(row))
            .collect(),
    )
}

pub(crate) fn abs_sorted(row: &[HalfInt]) -> Vec<HalfInt> {
    let mut v: Vec<HalfInt> = plus_rho(row).into_iter().map(HalfInt::abs).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct WeightFlags {
    pub k_dominant: bool,
    pub integral: bool,
    pub regular: bool,
    pub antidominant: bool,
}

pub fn is_k_dominant_row(row: &[HalfInt]) -> bool {
    row.windows(2).all(|w| w[0] >= w[1])
}

/// Distinct, nonzero entries of `|λ + ρ|`.
pub fn is_regular_row(row: &[HalfInt]) -> bool {
    let a = abs_sorted(row);
    a.last().is_none_or(|x| *x != HalfInt::ZERO) && a.windows(2).all(|w| w[0] != w[1])
}

pub fn is_antidominant_row(row: &[HalfInt]) -> bool {
    let n = row.len() as i64;
    is_k_dominant_row(row) && row.last().is_some_and(|&x| x >= HalfInt::from_int(n))
}

pub fn weight_flags(lambda: &Weight) -> WeightFlags {
    let rows = lambda.entries();
    WeightFlags {
        k_dominant: rows.iter().all(|r| is_k_dominant_row(r)),
        integral: lambda.is_integral(),
        regular: rows.iter().all(|r| is_regular_row(r)),
        antidominant: rows.iter().all(|r| is_antidominant_row(r)),
    }
}

/// The dot orbit of `λ` at one place, sorted.
///
/// Enumerated as all signed rearrangements of `λ + ρ`, which is the image of
/// the full group; the work is split over permutations.
pub fn dot_orbit(lambda: &Weight, place: usize) -> Result<Vec<Weight>> {
    let n = lambda.rank();
    guard::check("orbit rank", n, guard::ORBIT_RANK)?;
    let x = plus_rho(lambda.at(place)?);
    let perms = permutations(n);
    let rows: BTreeSet<Vec<HalfInt>> = perms
        .par_iter()
        .map(|perm| {
            let mut local = BTreeSet::new();
            for mask in 0..(1u64 << n) {
                let y: Vec<HalfInt> = (0..n)
                    .map(|i| {
                        let v = x[perm[i]];
                        if mask >> i & 1 == 1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect();
                local.insert(minus_rho(&y));
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    rows.into_iter()
        .map(|row| lambda.with_place(place, row))
        .collect()
}

/// The unique anti-dominant member of a regular dot orbit, at every place.
pub fn antidominant_rep(lambda: &Weight) -> Result<Weight> {
    let mut rows = Vec::with_capacity(lambda.places());
    for row in lambda.entries() {
        if !is_regular_row(row) {
            return Err(Error::Singular(lambda.to_string()));
        }
        rows.push(minus_rho(&abs_sorted(row)));
    }
    Weight::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: &[i64]) -> Weight {
        Weight::single(e).unwrap()
    }

    #[test]
    fn rho_values() {
        assert!(rho(0).is_err());
        for n in 1..=3 {
            let r = rho(n).unwrap();
            let expect: Vec<_> = (1..=n as i64).map(|i| HalfInt::from_int(-i)).collect();
            assert_eq!(r.coords, expect);
        }
        assert_eq!(Rho::parabolic(1, 2), HalfInt::from_int(2));
        assert_eq!(Rho::parabolic(2, 2), HalfInt::from_doubled(3));
    }

    #[test]
    fn dot_action_examples() {
        let l = w(&[4, 3]);
        assert_eq!(dot_act(&WeylElement::identity(2), &l, 0).unwrap(), l);
        assert_eq!(dot_act(&WeylElement::sign_flip(2, 1), &l, 0).unwrap(), w(&[4, 1]));
        assert_eq!(
            dot_act(&WeylElement::transposition(2, 0, 1), &l, 0).unwrap(),
            w(&[2, 5])
        );
        assert!(matches!(
            dot_act(&WeylElement::identity(3), &l, 0),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn abs_multiset_examples() {
        let h = |v: &[i64]| v.iter().map(|&x| HalfInt::from_int(x)).collect::<Vec<_>>();
        assert_eq!(abs_multiset(&w(&[4, 3])).0[0], h(&[3, 1]));
        assert_eq!(abs_multiset(&w(&[1, 2, 3])).0[0], h(&[0, 0, 0]));
        assert_eq!(abs_multiset(&w(&[4, 1])), abs_multiset(&w(&[4, 3])));
    }

    #[test]
    fn flags_examples() {
        let f = weight_flags(&w(&[4, 3]));
        assert!(f.k_dominant && f.regular && f.antidominant && f.integral);
        assert!(!weight_flags(&w(&[2, 2])).regular);
        assert!(!weight_flags(&w(&[3, 4])).k_dominant);
        let half = Weight::parse("5/2,3/2").unwrap();
        assert!(!weight_flags(&half).integral);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(dot_orbit(&w(&[4, 3]), 0).unwrap().len(), 8);
        assert_eq!(dot_orbit(&w(&[2, 2]), 0).unwrap().len(), 4);
        assert_eq!(dot_orbit(&w(&[1, 2, 3]), 0).unwrap(), vec![w(&[1, 2, 3])]);
    }

    #[test]
    fn orbit_guard() {
        let big = Weight::single(&[20; 9]).unwrap();
        if std::env::var(guard::GUARD_ENV).is_err() {
            assert!(dot_orbit(&big, 0).unwrap_err().is_guard());
        }
    }

    #[test]
    fn antidominant_examples() {
        assert_eq!(antidominant_rep(&w(&[4, 1])).unwrap(), w(&[4, 3]));
        assert_eq!(antidominant_rep(&w(&[4, 3])).unwrap(), w(&[4, 3]));
        assert_eq!(antidominant_rep(&w(&[2, 5])).unwrap(), w(&[4, 3]));
        assert!(matches!(antidominant_rep(&w(&[2, 2])), Err(Error::Singular(_))));
    }

    #[test]
    fn weight_condition_enforced() {
        assert!(Weight::parse("1/2,1").is_err());
        assert!(Weight::parse("1/2,3/2;4,3").is_ok());
        assert!(Weight::parse("1/3").is_err());
    }

    #[test]
    fn json_schema() {
        let l = Weight::parse("7/2,5/2").unwrap();
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"n":2,"d":1,"entries":[["7/2","5/2"]]}"#);
        let back: Weight = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
    }
}

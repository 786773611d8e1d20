//! Elements of `U(sp(2n))` in PBW normal form and the rewriting engine that
//! keeps them there.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::BigRational;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::basis::{basis_elements, basis_index, structure_constants, BasisElement, StructureTable};
use crate::error::{Error, Result};
use crate::guard;
use num_traits::{One, Zero};

use crate::scalar::{format_gaussian, Gaussian, Scalar};

/// A PBW monomial: basis indices in non-decreasing order.
pub type Monomial = Vec<u16>;

/// An element of the enveloping algebra. Monomials are always canonical and
/// coefficients nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct Uea<C> {
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Uea<C> {
    pub fn zero(n: usize) -> Self {
        Uea {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Vec::new(), c);
        e
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn generator(n: usize, x: BasisElement) -> Result<Self> {
        let i = basis_index(n, x)?;
        let mut e = Self::zero(n);
        e.add_term(vec![i as u16], C::one());
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[u16]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Largest monomial length, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert!(m.windows(2).all(|w| w[0] <= w[1]));
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_negligible() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_negligible() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &C::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-C::one());
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &C) {
        assert_eq!(self.n, other.n, "rank mismatch");
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone() * c.clone());
        }
    }

    /// Readable name of a monomial, `1` for the empty one.
    pub fn monomial_name(n: usize, m: &[u16]) -> String {
        if m.is_empty() {
            return "1".into();
        }
        let basis = basis_elements(n);
        m.iter()
            .map(|&i| basis[i as usize].to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Uea<Gaussian<BigRational>> {
    /// `monomial → "a+bi"` in canonical monomial order.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(m, c)| (Self::monomial_name(self.n, m), format_gaussian(c)))
            .collect()
    }
}

impl Serialize for Uea<Gaussian<BigRational>> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            map.serialize_entry(&Self::monomial_name(self.n, m), &format_gaussian(c))?;
        }
        map.end()
    }
}

impl fmt::Display for Uea<Gaussian<BigRational>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({})*{}", format_gaussian(c), Self::monomial_name(self.n, m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type Terms<T> = Arc<Vec<(Monomial, Gaussian<T>)>>;

/// PBW rewriting for `U(sp(2n))` with coefficients in `Gaussian<T>`.
///
/// Structure constants are computed once at construction; normal forms of
/// words are memoized.
pub struct PbwAlgebra<T: Scalar> {
    n: usize,
    basis: Vec<BasisElement>,
    table: StructureTable<Gaussian<T>>,
    memo: Mutex<HashMap<Vec<u16>, Terms<T>>>,
}

impl<T: Scalar> fmt::Debug for PbwAlgebra<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PbwAlgebra").field("n", &self.n).finish()
    }
}

impl<T: Scalar> PbwAlgebra<T> {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        guard::check("PBW rank", n, guard::PBW_RANK)?;
        Ok(PbwAlgebra {
            n,
            basis: basis_elements(n),
            table: structure_constants::<T>(n),
            memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn index(&self, x: BasisElement) -> Result<usize> {
        basis_index(self.n, x)
    }

    pub fn generator(&self, x: BasisElement) -> Result<Uea<Gaussian<T>>> {
        Uea::generator(self.n, x)
    }

    /// `[x, y]` expanded in the basis.
    pub fn commutator(&self, x: BasisElement, y: BasisElement) -> Result<Uea<Gaussian<T>>> {
        let (a, b) = (self.index(x)?, self.index(y)?);
        let mut out = Uea::zero(self.n);
        for (c, v) in &self.table[a][b] {
            out.add_term(vec![*c as u16], v.clone());
        }
        Ok(out)
    }

    fn normal_word(&self, w: &[u16]) -> Terms<T> {
        let Some(p) = w.windows(2).position(|p| p[0] > p[1]) else {
            return Arc::new(vec![(w.to_vec(), Gaussian::one())]);
        };
        if let Some(hit) = self.memo.lock().unwrap().get(w) {
            return hit.clone();
        }
        let mut acc: BTreeMap<Monomial, Gaussian<T>> = BTreeMap::new();
        let mut push = |terms: &Terms<T>, c: &Gaussian<T>| {
            for (m, v) in terms.iter() {
                let e = acc.entry(m.clone()).or_insert_with(Gaussian::zero);
                *e = e.clone() + v.clone() * c.clone();
            }
        };
        let mut swapped = w.to_vec();
        swapped.swap(p, p + 1);
        push(&self.normal_word(&swapped), &Gaussian::one());
        for (c, v) in &self.table[w[p] as usize][w[p + 1] as usize] {
            let mut shorter = Vec::with_capacity(w.len() - 1);
            shorter.extend_from_slice(&w[..p]);
            shorter.push(*c as u16);
            shorter.extend_from_slice(&w[p + 2..]);
            push(&self.normal_word(&shorter), v);
        }
        let terms: Terms<T> = Arc::new(acc.into_iter().filter(|(_, v)| !v.is_negligible()).collect());
        self.memo.lock().unwrap().insert(w.to_vec(), terms.clone());
        terms
    }

    /// Normal form of the ordered product `x_1 ⋯ x_k`.
    pub fn word(&self, letters: &[BasisElement]) -> Result<Uea<Gaussian<T>>> {
        let w: Vec<u16> = letters
            .iter()
            .map(|&x| self.index(x).map(|i| i as u16))
            .collect::<Result<_>>()?;
        Ok(self.word_indices(&w))
    }

    pub fn word_indices(&self, w: &[u16]) -> Uea<Gaussian<T>> {
        let mut out = Uea::zero(self.n);
        for (m, v) in self.normal_word(w).iter() {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    /// Re-normalizes an element. Stored elements are already canonical, so
    /// this is the identity on them.
    pub fn normal_form(&self, e: &Uea<Gaussian<T>>) -> Uea<Gaussian<T>> {
        let mut out = Uea::zero(self.n);
        for (m, c) in &e.terms {
            out.add_assign_scaled(&self.word_indices(m), c);
        }
        out
    }

    pub fn mul(&self, a: &Uea<Gaussian<T>>, b: &Uea<Gaussian<T>>) -> Uea<Gaussian<T>> {
        assert_eq!((a.n, b.n), (self.n, self.n), "rank mismatch");
        let mut out = Uea::zero(self.n);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut w = ma.clone();
                w.extend_from_slice(mb);
                out.add_assign_scaled(&self.word_indices(&w), &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    pub fn bracket(&self, a: &Uea<Gaussian<T>>, b: &Uea<Gaussian<T>>) -> Uea<Gaussian<T>> {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// Clears the word memo.
    pub fn clear_cache(&self) {
        self.memo.lock().unwrap().clear();
    }
}

/// Shared exact algebra per rank.
pub fn exact_algebra(n: usize) -> Result<Arc<PbwAlgebra<BigRational>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PbwAlgebra<BigRational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().unwrap().get(&n) {
        return Ok(a.clone());
    }
    let a = Arc::new(PbwAlgebra::new(n)?);
    Ok(cache.lock().unwrap().entry(n).or_insert(a).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_gaussian;

    fn g(s: &str) -> Gaussian<BigRational> {
        parse_gaussian(s).unwrap()
    }

    #[test]
    fn rank_one_relations() {
        let a = exact_algebra(1).unwrap();
        let b = BasisElement::B(0, 0);
        let p = BasisElement::EPlus(0, 0);
        let m = BasisElement::EMinus(0, 0);
        assert_eq!(a.commutator(b, p).unwrap(), a.generator(p).unwrap().scale(&g("2")));
        assert_eq!(a.commutator(b, m).unwrap(), a.generator(m).unwrap().scale(&g("-2")));
        assert_eq!(a.commutator(p, m).unwrap(), a.generator(b).unwrap().scale(&g("4")));
        // E- E+ = E+ E- - 4B
        let lhs = a.word(&[m, p]).unwrap();
        let rhs = a.word(&[p, m]).unwrap().sub(&a.generator(b).unwrap().scale(&g("4")));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let a = exact_algebra(2).unwrap();
        let w = [
            BasisElement::EMinus(0, 1),
            BasisElement::B(0, 1),
            BasisElement::EPlus(1, 1),
            BasisElement::B(1, 0),
        ];
        let e = a.word(&w).unwrap();
        assert_eq!(a.normal_form(&e), e);
        assert_eq!(e.degree(), Some(4));
    }

    #[test]
    fn rank_guard() {
        assert!(PbwAlgebra::<BigRational>::new(4).unwrap_err().is_guard());
    }

    #[test]
    fn serialization() {
        let a = exact_algebra(1).unwrap();
        let e = a.word(&[BasisElement::EMinus(0, 0), BasisElement::EPlus(0, 0)]).unwrap();
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"E+(1,1)*E-(1,1)":"1+0i","B(1,1)":"-4+0i"}"#
        );
    }
}

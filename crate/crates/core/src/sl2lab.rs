//! Nearly holomorphic q-expansions at level one: series in `q^m (πy)^{-r}`
//! with exact coefficients, the lowering and raising operators, `E₂`, and a
//! probe of the module a form generates.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::guard;
use crate::linalg::Matrix;
use crate::scalar::{format_rational, Gaussian, Scalar};

/// Default q-precision.
pub const DEFAULT_PRECISION: u32 = 50;

/// Index of a basis monomial `π^{pi_exp} · q^m · (πy)^{-r}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TermKey {
    pub m: u32,
    pub r: i32,
    pub pi_exp: i32,
}

impl TermKey {
    pub fn new(m: u32, r: i32, pi_exp: i32) -> Self {
        TermKey { m, r, pi_exp }
    }
}

/// A truncated expansion `Σ c · π^{p} q^m (πy)^{-r}` with `m ≤ precision`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<T> {
    precision: u32,
    terms: BTreeMap<TermKey, Gaussian<T>>,
}

/// Weight bookkeeping for a form at level one.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FormMeta {
    pub weight: i64,
    pub level: u32,
}

impl FormMeta {
    pub fn level_one(weight: i64) -> Self {
        FormMeta { weight, level: 1 }
    }

    pub fn lowered(self) -> Self {
        FormMeta {
            weight: self.weight - 2,
            ..self
        }
    }

    pub fn raised(self) -> Self {
        FormMeta {
            weight: self.weight + 2,
            ..self
        }
    }
}

impl<T: Scalar> Series<T> {
    pub fn zero(precision: u32) -> Self {
        Series {
            precision,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `c`.
    pub fn constant(precision: u32, c: Gaussian<T>) -> Self {
        let mut s = Self::zero(precision);
        s.add_term(TermKey::new(0, 0, 0), c);
        s
    }

    pub fn from_terms(precision: u32, terms: impl IntoIterator<Item = (TermKey, Gaussian<T>)>) -> Self {
        let mut s = Self::zero(precision);
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &Gaussian<T>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: u32, r: i32, pi_exp: i32) -> Gaussian<T> {
        self.terms
            .get(&TermKey::new(m, r, pi_exp))
            .cloned()
            .unwrap_or_else(Gaussian::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` at `key`; terms beyond the precision are dropped.
    pub fn add_term(&mut self, key: TermKey, c: Gaussian<T>) {
        if key.m > self.precision || c.is_negligible() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(Gaussian::zero);
        *e = e.clone() + c;
        if e.is_negligible() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.truncate(self.precision.min(o.precision));
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Gaussian::one()))
    }

    pub fn scale(&self, c: &Gaussian<T>) -> Self {
        Self::from_terms(
            self.precision,
            self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.precision.min(o.precision));
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let key = TermKey::new(a.m + b.m, a.r + b.r, a.pi_exp + b.pi_exp);
                out.add_term(key, x.clone() * y.clone());
            }
        }
        out
    }

    pub fn truncate(&self, precision: u32) -> Self {
        Self::from_terms(
            precision,
            self.terms.iter().map(|(k, v)| (*k, v.clone())),
        )
    }

    /// Largest `r` present, `None` for zero.
    pub fn max_r(&self) -> Option<i32> {
        self.terms.keys().map(|k| k.r).max()
    }

    fn map_terms(&self, f: impl Fn(TermKey, &Gaussian<T>, &mut Self)) -> Self {
        let mut out = Self::zero(self.precision);
        for (k, c) in &self.terms {
            f(*k, c, &mut out);
        }
        out
    }
}

fn gi<T: Scalar>(re: T, im: T) -> Gaussian<T> {
    Gaussian::new(re, im)
}

/// Sum of divisors of `m`.
pub fn sigma1(m: u64) -> u64 {
    let mut s = 0;
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            s += d;
            if d * d != m {
                s += m / d;
            }
        }
        d += 1;
    }
    s
}

/// `E₂ = 3/(πy) − 1 + 24 Σ σ₁(m) q^m`.
pub fn eisenstein_e2<T: Scalar>(precision: u32) -> Result<Series<T>> {
    if precision == 0 {
        return Err(Error::Invalid("precision must be at least 1".into()));
    }
    let mut s = Series::zero(precision);
    s.add_term(TermKey::new(0, 1, 0), Gaussian::from_i64(3));
    s.add_term(TermKey::new(0, 0, 0), Gaussian::from_i64(-1));
    for m in 1..=precision {
        s.add_term(TermKey::new(m, 0, 0), Gaussian::from_i64(24 * sigma1(m as u64) as i64));
    }
    Ok(s)
}

/// The lowering operator `E = 4y² ∂/∂z̄`:
/// `q^m (πy)^{-r} ↦ −2ir π^{-1} q^m (πy)^{1−r}`.
pub fn lower_e<T: Scalar>(f: &Series<T>) -> Series<T> {
    f.map_terms(|k, c, out| {
        let factor = gi(T::zero(), T::from_i64(-2 * k.r as i64));
        out.add_term(TermKey::new(k.m, k.r - 1, k.pi_exp - 1), c.clone() * factor);
    })
}

/// The weight-corrected raising operator `δ_k`:
/// `q^m (πy)^{-r} ↦ m q^m (πy)^{-r} + ((r−k)/4) q^m (πy)^{-r-1}`.
pub fn raise_maass_shimura<T: Scalar>(f: &Series<T>, k: i64) -> Series<T> {
    f.map_terms(|key, c, out| {
        out.add_term(key, c.clone() * Gaussian::from_i64(key.m as i64));
        let shift = Gaussian::real(T::from_ratio(key.r as i64 - k, 4));
        out.add_term(TermKey::new(key.m, key.r + 1, key.pi_exp), c.clone() * shift);
    })
}

/// The unmodified operator `C = 4y² ∂/∂z`:
/// `q^m (πy)^{-r} ↦ 8im π^{-1} q^m (πy)^{2−r} + 2ir π^{-1} q^m (πy)^{1−r}`.
pub fn raw_c<T: Scalar>(f: &Series<T>) -> Series<T> {
    f.map_terms(|k, c, out| {
        let a = gi(T::zero(), T::from_i64(8 * k.m as i64));
        out.add_term(TermKey::new(k.m, k.r - 2, k.pi_exp - 1), c.clone() * a);
        let b = gi(T::zero(), T::from_i64(2 * k.r as i64));
        out.add_term(TermKey::new(k.m, k.r - 1, k.pi_exp - 1), c.clone() * b);
    })
}

/// The `r = 0` slice.
pub fn holomorphic_part<T: Scalar>(f: &Series<T>) -> Series<T> {
    Series::from_terms(
        f.precision,
        f.terms.iter().filter(|(k, _)| k.r == 0).map(|(k, v)| (*k, v.clone())),
    )
}

/// Least `e` with `E^e f = 0`: `1 + max r`, and `0` for the zero series.
pub fn nearly_holomorphic_degree<T: Scalar>(f: &Series<T>) -> Result<u32> {
    match f.max_r() {
        None => Ok(0),
        Some(_) if f.terms.keys().any(|k| k.r < 0) => Err(Error::Invalid(
            "series has positive powers of πy and is not nearly holomorphic".into(),
        )),
        Some(r) => Ok(r as u32 + 1),
    }
}

/// Weight → dimension of the span of all words in `E` and `δ` of length at
/// most `depth` applied to `f` of weight `k`.
///
/// Ranks are computed at the working precision and again at half of it; a
/// disagreement means the precision cannot certify independence.
pub fn module_probe<T: Scalar>(f: &Series<T>, k: i64, depth: usize) -> Result<BTreeMap<i64, usize>> {
    guard::check("probe depth", depth, guard::PROBE_DEPTH)?;
    let mut by_weight: BTreeMap<i64, Vec<Series<T>>> = BTreeMap::new();
    let mut frontier = vec![(f.clone(), k)];
    by_weight.entry(k).or_default().push(f.clone());
    for _ in 0..depth {
        let mut next = Vec::with_capacity(2 * frontier.len());
        for (g, w) in &frontier {
            next.push((lower_e(g), w - 2));
            next.push((raise_maass_shimura(g, *w), w + 2));
        }
        for (g, w) in &next {
            by_weight.entry(*w).or_default().push(g.clone());
        }
        frontier = next;
    }
    let half = f.precision / 2;
    let mut out = BTreeMap::new();
    for (w, vs) in by_weight {
        let vs: Vec<Series<T>> = vs.iter().map(strip_pi).collect::<Result<_>>()?;
        let full = span_rank(&vs, f.precision);
        if half > 0 && span_rank(&vs, half) != full {
            return Err(Error::InsufficientPrecision {
                precision: f.precision as usize,
            });
        }
        out.insert(w, full);
    }
    Ok(out)
}

/// Moves a series with a single π-exponent to exponent zero, so that
/// vectors differing by a power of π are recognized as proportional.
fn strip_pi<T: Scalar>(s: &Series<T>) -> Result<Series<T>> {
    let exps: BTreeSet<i32> = s.terms.keys().map(|k| k.pi_exp).collect();
    if exps.len() > 1 {
        return Err(Error::Invalid(
            "the probe needs a series with a single power of π".into(),
        ));
    }
    Ok(Series::from_terms(
        s.precision,
        s.terms.iter().map(|(k, v)| (TermKey::new(k.m, k.r, 0), v.clone())),
    ))
}

fn span_rank<T: Scalar>(vs: &[Series<T>], precision: u32) -> usize {
    let keys: BTreeSet<TermKey> = vs
        .iter()
        .flat_map(|s| s.terms.keys().copied())
        .filter(|k| k.m <= precision)
        .collect();
    if keys.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Gaussian<T>>> = vs
        .iter()
        .map(|s| keys.iter().map(|k| s.coefficient(k.m, k.r, k.pi_exp)).collect())
        .collect();
    Matrix::from_rows(rows).rank()
}

impl Serialize for Series<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            m: u32,
            r: i32,
            re: String,
            im: String,
            pi_exp: i32,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(k, c)| Term {
                m: k.m,
                r: k.r,
                re: format_rational(&c.re),
                im: format_rational(&c.im),
                pi_exp: k.pi_exp,
            })
            .collect();
        let mut st = s.serialize_struct("QSeries", 2)?;
        st.serialize_field("precision", &self.precision)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl Series<BigRational> {
    /// The real part of the coefficient of `q^m`, holomorphic, no π factor.
    pub fn q_coefficient(&self, m: u32) -> BigRational {
        self.coefficient(m, 0, 0).re
    }
}

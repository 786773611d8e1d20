//! K-type combinatorics for `gl(n)`: Littlewood–Richardson coefficients, the
//! K-decomposition of `U(p₊)`, K-type multiplicities of parabolic Verma
//! modules, and the parity map used to find the K-type that singles out
//! `L(λ)` inside its unitary orbit.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};

/// Highest weight of an irreducible `gl(n)`-module: a weakly decreasing
/// integer tuple, negative entries allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KTypeSignature(Vec<i64>);

impl KTypeSignature {
    pub fn new(weight: Vec<i64>) -> Result<Self> {
        if weight.is_empty() {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        if weight.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format!("{weight:?}")));
        }
        Ok(KTypeSignature(weight))
    }

    /// `det^k`.
    pub fn det(n: usize, k: i64) -> Self {
        KTypeSignature(vec![k; n])
    }

    /// `∧^j` of the standard representation.
    pub fn wedge(n: usize, j: usize) -> Self {
        KTypeSignature((0..n).map(|i| i64::from(i < j)).collect())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let v = s
            .split(',')
            .map(|t| {
                t.trim().parse::<i64>().map_err(|_| Error::Parse {
                    what: "K-type signature",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Tensor with `det^k`.
    pub fn twist(&self, k: i64) -> Self {
        KTypeSignature(self.0.iter().map(|x| x + k).collect())
    }

    /// Weyl dimension formula.
    pub fn dimension(&self) -> u128 {
        let w = &self.0;
        let n = w.len();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..n {
            for j in i + 1..n {
                num *= (w[i] - w[j] + (j - i) as i64) as u128;
                den *= (j - i) as u128;
            }
        }
        num / den
    }
}

impl fmt::Display for KTypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for KTypeSignature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A partition with even parts and at most `n` of them (zero padded).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EvenPartition(Vec<i64>);

impl EvenPartition {
    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn as_signature(&self) -> KTypeSignature {
        KTypeSignature(self.0.clone())
    }
}

impl fmt::Display for EvenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_signature().fmt(f)
    }
}

impl Serialize for EvenPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Partitions of `size` into at most `n` parts, each part a multiple of
/// `step`, descending lexicographic order, zero padded to length `n`.
fn partitions(size: i64, n: usize, step: i64) -> Vec<Vec<i64>> {
    fn go(rem: i64, max: i64, slots: usize, step: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rem == 0 {
            let mut v = cur.clone();
            v.resize(cur.len() + slots, 0);
            out.push(v);
            return;
        }
        if slots == 0 {
            return;
        }
        let mut part = max.min(rem);
        part -= part % step;
        while part >= step {
            cur.push(part);
            go(rem - part, part, slots - 1, step, cur, out);
            cur.pop();
            part -= step;
        }
    }
    let mut out = Vec::new();
    if size < 0 || size % step != 0 {
        return out;
    }
    go(size, size, n, step, &mut Vec::new(), &mut out);
    out
}

/// Number of Littlewood–Richardson tableaux of skew shape `outer/inner`
/// with content `content`, i.e. `c^{outer}_{inner, content}`.
///
/// All three arguments are partitions of length `n` (zero padded). Rows are
/// filled top to bottom; each row is a weakly increasing run encoded by its
/// label counts, and the reverse reading word is kept a lattice word as rows
/// are appended.
pub fn lr_coefficient(outer: &[i64], inner: &[i64], content: &[i64]) -> u64 {
    let n = outer.len();
    assert!(inner.len() == n && content.len() == n, "rank mismatch");
    if (0..n).any(|i| inner[i] > outer[i] || inner[i] < 0 || content[i] < 0) {
        return 0;
    }
    let skew: i64 = (0..n).map(|i| outer[i] - inner[i]).sum();
    if skew != content.iter().sum::<i64>() {
        return 0;
    }
    let labels = content.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
    if labels == 0 {
        return 1;
    }
    if let Some(v) = pieri(outer, inner, content) {
        return v;
    }
    let key = (outer.to_vec(), inner.to_vec(), content.to_vec());
    if let Some(&v) = lr_cache().lock().unwrap().get(&key) {
        return v;
    }
    let mut search = LrSearch {
        outer,
        inner,
        content: &content[..labels],
        counts: vec![0; labels],
    };
    let v = search.row(0, &[]);
    lr_cache().lock().unwrap().insert(key, v);
    v
}

type LrKey = (Vec<i64>, Vec<i64>, Vec<i64>);

fn lr_cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Single-row and single-column contents: horizontal and vertical strips.
fn pieri(outer: &[i64], inner: &[i64], content: &[i64]) -> Option<u64> {
    let n = outer.len();
    let nonzero = content.iter().filter(|&&c| c > 0).count();
    if nonzero == 1 && content[0] > 0 {
        // horizontal strip: no two added boxes in the same column
        let ok = (1..n).all(|i| outer[i] <= inner[i - 1]);
        return Some(u64::from(ok));
    }
    if content.iter().all(|&c| c <= 1) {
        let ok = (0..n).all(|i| outer[i] - inner[i] <= 1);
        return Some(u64::from(ok));
    }
    None
}

struct LrSearch<'a> {
    outer: &'a [i64],
    inner: &'a [i64],
    content: &'a [i64],
    counts: Vec<i64>,
}

impl LrSearch<'_> {
    /// `above` holds the labels of the previous row, indexed from its first
    /// skew column `inner[i-1]`.
    fn row(&mut self, i: usize, above: &[usize]) -> u64 {
        if i == self.outer.len() {
            return u64::from(self.counts == self.content);
        }
        let len = (self.outer[i] - self.inner[i]) as usize;
        let mut labels = Vec::with_capacity(len);
        let mut total = 0;
        self.fill(i, above, 0, len, &mut labels, &mut total);
        total
    }

    fn fill(
        &mut self,
        i: usize,
        above: &[usize],
        label: usize,
        remaining: usize,
        labels: &mut Vec<usize>,
        total: &mut u64,
    ) {
        if remaining == 0 {
            // check lattice condition for this row: reading right to left
            // places every `k` before the `k-1`s of the same row
            let mut row_counts = vec![0i64; self.content.len()];
            for &l in labels.iter() {
                row_counts[l] += 1;
            }
            for k in 1..self.content.len() {
                if self.counts[k] + row_counts[k] > self.counts[k - 1] {
                    return;
                }
            }
            for (c, r) in self.counts.iter_mut().zip(&row_counts) {
                *c += r;
            }
            let row_labels = labels.clone();
            *total += self.row(i + 1, &row_labels);
            for (c, r) in self.counts.iter_mut().zip(&row_counts) {
                *c -= r;
            }
            return;
        }
        if label >= self.content.len() || label > i {
            return;
        }
        // place `m` copies of `label`, then move to the next label
        let start = labels.len();
        for m in 0..=remaining {
            if m > 0 {
                let pos = start + m - 1;
                let col = self.inner[i] + pos as i64;
                if i > 0 {
                    let up0 = self.inner[i - 1];
                    if col >= up0 && col < self.outer[i - 1] {
                        let up = above[(col - up0) as usize];
                        if label <= up {
                            break;
                        }
                    }
                }
                let used = self.counts[label] + m as i64;
                if used > self.content[label] {
                    break;
                }
                labels.push(label);
            }
            self.fill(i, above, label + 1, remaining - m, labels, total);
        }
        labels.truncate(start);
    }
}

/// Decomposition of `ρ_μ ⊗ ρ_ν` into irreducibles.
pub fn lr_coefficients(
    mu: &KTypeSignature,
    nu: &KTypeSignature,
) -> Result<BTreeMap<KTypeSignature, u64>> {
    let n = mu.rank();
    if nu.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: nu.rank(),
        });
    }
    let (sm, sn) = (mu.0[n - 1], nu.0[n - 1]);
    let a: Vec<i64> = mu.0.iter().map(|x| x - sm).collect();
    let b: Vec<i64> = nu.0.iter().map(|x| x - sn).collect();
    let total: i64 = a.iter().sum::<i64>() + b.iter().sum::<i64>();
    let mut out = BTreeMap::new();
    for lam in containing(&a, total, b[0]) {
        let c = lr_coefficient(&lam, &a, &b);
        if c > 0 {
            out.insert(KTypeSignature(lam).twist(sm + sn), c);
        }
    }
    Ok(out)
}

/// Partitions `λ ⊇ inner` of the given size with `λ_i ≤ inner_i + width`.
fn containing(inner: &[i64], size: i64, width: i64) -> Vec<Vec<i64>> {
    fn go(inner: &[i64], i: usize, rem: i64, width: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let n = inner.len();
        if i == n {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = (inner[i] + width).min(if i == 0 { i64::MAX } else { cur[i - 1] });
        let mut v = hi.min(inner[i] + rem);
        while v >= inner[i] {
            cur.push(v);
            go(inner, i + 1, rem - (v - inner[i]), width, cur, out);
            cur.pop();
            v -= 1;
        }
    }
    let base: i64 = inner.iter().sum();
    let mut out = Vec::new();
    go(inner, 0, size - base, width, &mut Vec::new(), &mut out);
    out
}

/// K-types of `U(p₊) = Sym(Sym² C^n)` up to the given polynomial degree:
/// every even partition with at most `n` parts, each once.
pub fn upplus_decomposition(n: usize, max_degree: usize) -> BTreeMap<EvenPartition, u64> {
    (0..=max_degree as i64)
        .flat_map(|deg| partitions(2 * deg, n, 2))
        .map(|p| (EvenPartition(p), 1))
        .collect()
}

/// Even partitions of `size` with at most `n` parts.
pub fn even_partitions(size: i64, n: usize) -> Vec<EvenPartition> {
    partitions(size, n, 2).into_iter().map(EvenPartition).collect()
}

/// Multiplicity of `ρ_σ` in `N(λ)|_k = U(p₊) ⊗ ρ_λ`.
///
/// The degree in `U(p₊)` is forced by `|σ| - |λ| = 2·degree`; if that
/// exceeds `max_degree` the truncated answer would be wrong, so it is refused.
pub fn verma_ktype_multiplicity(lambda: &[i64], sigma: &KTypeSignature, max_degree: usize) -> Result<u64> {
    let lam = KTypeSignature::new(lambda.to_vec())?;
    let n = lam.rank();
    if sigma.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: sigma.rank(),
        });
    }
    let diff = sigma.size() - lam.size();
    if diff < 0 || diff % 2 != 0 {
        return Ok(0);
    }
    if diff / 2 > max_degree as i64 {
        return Err(Error::Invalid(format!(
            "degree {} needed but max_degree is {max_degree}",
            diff / 2
        )));
    }
    let shift = lam.0[n - 1].min(sigma.0[n - 1]);
    let inner = lam.twist(-shift).0;
    let outer = sigma.twist(-shift).0;
    if (0..n).any(|i| inner[i] > outer[i]) {
        return Ok(0);
    }
    Ok(partitions(diff, n, 2)
        .iter()
        .map(|b| lr_coefficient(&outer, &inner, b))
        .sum())
}

fn integral_dominant(lambda: &[i64]) -> Result<()> {
    if lambda.is_empty() {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(format!("{lambda:?}")));
    }
    Ok(())
}

/// `#{ℓ : λ_1 ≡ λ_ℓ mod 2}`.
pub fn j_invariant(lambda: &[i64]) -> usize {
    lambda
        .iter()
        .filter(|&&x| (x - lambda[0]).rem_euclid(2) == 0)
        .count()
}

/// One application of the two-step parity map.
///
/// Step 1 copies each entry's left neighbour, lowered by one when their gap
/// is odd. Step 2 collects the positions that moved, drops the largest one
/// if there are an odd number of them, and raises the rest by one.
pub fn g_map(omega: &[i64]) -> Result<Vec<i64>> {
    integral_dominant(omega)?;
    let n = omega.len();
    let mut step1 = omega.to_vec();
    for i in 1..n {
        let gap = omega[i - 1] - omega[i];
        step1[i] = if gap % 2 == 0 { omega[i - 1] } else { omega[i - 1] - 1 };
    }
    // positions compare the original left neighbour with the Step-1 value
    let mut moved: Vec<usize> = (1..n).filter(|&i| omega[i - 1] != step1[i]).collect();
    if moved.len() % 2 == 1 {
        moved.pop();
    }
    for i in moved {
        step1[i] += 1;
    }
    Ok(step1)
}

/// `g^k(ω)`.
pub fn g_map_iterate(omega: &[i64], k: usize) -> Result<Vec<i64>> {
    let mut cur = omega.to_vec();
    for _ in 0..k {
        cur = g_map(&cur)?;
    }
    integral_dominant(&cur)?;
    Ok(cur)
}

/// `det^{λ_1 - 1} ⊗ ∧^{j(λ)}`.
pub fn distinguished_ktype(lambda: &[i64]) -> Result<KTypeSignature> {
    integral_dominant(lambda)?;
    let n = lambda.len();
    let j = j_invariant(lambda);
    Ok(KTypeSignature::wedge(n, j).twist(lambda[0] - 1))
}

/// Multiplicity (0 or 1) of `∧^j` in the principal series whose sign
/// characters are recorded by `eps`.
pub fn principal_series_multiplicity(eps: &[u8], j: usize) -> u8 {
    let ones = eps.iter().filter(|&&e| e == 1).count();
    u8::from(ones == j)
}

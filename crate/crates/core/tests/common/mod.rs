//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

/// Polynomial in `x_1, …, x_n` with integer coefficients.
pub type Poly = HashMap<Vec<i64>, i64>;

/// Schur polynomial `s_λ(x_1, …, x_n)` for a partition `λ`, by enumerating
/// semistandard tableaux cell by cell.
pub fn schur(lambda: &[i64], n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Poly::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        grid: &mut HashMap<(usize, usize), usize>,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            let mut e = vec![0i64; n];
            for v in grid.values() {
                e[*v] += 1;
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[&(r, c - 1)] } else { 0 };
        let lo_col = if r > 0 { grid[&(r - 1, c)] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            grid.insert((r, c), v);
            go(k + 1, cells, n, grid, out);
        }
        grid.remove(&(r, c));
    }
    go(0, &cells, n, &mut grid, &mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Decomposes a symmetric polynomial into Schur polynomials by repeatedly
/// removing the lexicographically largest monomial.
pub fn peel(mut p: Poly, n: usize) -> HashMap<Vec<i64>, i64> {
    let mut out = HashMap::new();
    p.retain(|_, c| *c != 0);
    while let Some(top) = p.keys().max().cloned() {
        let c = p[&top];
        assert!(top.windows(2).all(|w| w[0] >= w[1]), "leading exponent {top:?} is not a partition");
        out.insert(top.clone(), c);
        for (e, v) in schur(&top, n) {
            *p.entry(e).or_insert(0) -= c * v;
        }
        p.retain(|_, c| *c != 0);
    }
    out
}

/// Character of `Sym(Sym² C^n)` through polynomial degree `2·max_degree`.
pub fn sym_sym2(n: usize, max_degree: usize) -> Poly {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Poly::new();
    out.insert(vec![0; n], 1);
    for &(i, j) in &pairs {
        let mut next = Poly::new();
        for (e, c) in &out {
            let deg: i64 = e.iter().sum::<i64>() / 2;
            for k in 0..=(max_degree as i64 - deg) {
                let mut e2 = e.clone();
                e2[i] += k;
                e2[j] += k;
                *next.entry(e2).or_insert(0) += c;
            }
        }
        out = next;
    }
    out
}

/// All partitions with at most `n` parts and size `size`.
pub fn partitions(size: i64, n: usize) -> Vec<Vec<i64>> {
    fn go(rem: i64, max: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=rem.min(max)).rev() {
            cur.push(v);
            go(rem - v, v, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, size, n, &mut Vec::new(), &mut out);
    out
}

/// `σ₁(m)` from the prime factorization.
pub fn sigma1_by_factoring(mut m: u64) -> u64 {
    let mut total = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut pk = 1;
            let mut sum = 1;
            while m.is_multiple_of(p) {
                m /= p;
                pk *= p;
                sum += pk;
            }
            total *= sum;
        }
        p += 1;
    }
    if m > 1 {
        total *= m + 1;
    }
    total
}

/// Regular anti-dominant integral weights at one place: weakly decreasing
/// with last entry at least `n + 1` and first entry at most `max`.
pub fn regular_antidominant(n: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().map_or(hi, |&x| x);
        for v in lo..=top {
            cur.push(v);
            go(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n as i64 + 1, max, &mut Vec::new(), &mut out);
    out
}

/// All integer tuples of length `n` with entries in `lo..=hi`.
pub fn tuples(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

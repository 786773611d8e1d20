//! The basis `{B_{ij}, E_{±,ij}}` of `sp(2n, C)` realized as `2n × 2n`
//! matrices, and the structure constants it forces.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Gaussian, Scalar};

/// Basis element with 0-based indices. `E±(i, j)` is stored with `i ≤ j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum BasisElement {
    EPlus(usize, usize),
    B(usize, usize),
    EMinus(usize, usize),
}

/// Block a basis element belongs to, in PBW order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Block {
    PPlus,
    KLowering,
    Cartan,
    KRaising,
    PMinus,
}

impl BasisElement {
    pub fn eplus(i: usize, j: usize) -> Self {
        BasisElement::EPlus(i.min(j), i.max(j))
    }

    pub fn eminus(i: usize, j: usize) -> Self {
        BasisElement::EMinus(i.min(j), i.max(j))
    }

    pub fn block(self) -> Block {
        match self {
            BasisElement::EPlus(..) => Block::PPlus,
            BasisElement::EMinus(..) => Block::PMinus,
            BasisElement::B(i, j) if i > j => Block::KLowering,
            BasisElement::B(i, j) if i == j => Block::Cartan,
            BasisElement::B(..) => Block::KRaising,
        }
    }

    /// Root of the element in the coordinates `e_1, …, e_n`.
    pub fn root(self, n: usize) -> Vec<i64> {
        let mut r = vec![0; n];
        match self {
            BasisElement::EPlus(i, j) => {
                r[i] += 1;
                r[j] += 1;
            }
            BasisElement::EMinus(i, j) => {
                r[i] -= 1;
                r[j] -= 1;
            }
            BasisElement::B(i, j) => {
                r[i] += 1;
                r[j] -= 1;
            }
        }
        r
    }

    /// Parses `E+(1,2)`, `B(2,1)`, `E-(1,1)` (1-based).
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "basis element",
            input: s.to_string(),
        };
        let t = s.trim();
        let open = t.find('(').ok_or_else(err)?;
        let inner = t[open + 1..].strip_suffix(')').ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let i: usize = a.trim().parse().map_err(|_| err())?;
        let j: usize = b.trim().parse().map_err(|_| err())?;
        if i == 0 || j == 0 {
            return Err(err());
        }
        match &t[..open] {
            "E+" => Ok(Self::eplus(i - 1, j - 1)),
            "E-" => Ok(Self::eminus(i - 1, j - 1)),
            "B" => Ok(BasisElement::B(i - 1, j - 1)),
            _ => Err(err()),
        }
    }

    fn max_index(self) -> usize {
        match self {
            BasisElement::EPlus(i, j) | BasisElement::B(i, j) | BasisElement::EMinus(i, j) => {
                i.max(j)
            }
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisElement::EPlus(i, j) => write!(f, "E+({},{})", i + 1, j + 1),
            BasisElement::B(i, j) => write!(f, "B({},{})", i + 1, j + 1),
            BasisElement::EMinus(i, j) => write!(f, "E-({},{})", i + 1, j + 1),
        }
    }
}

/// Basis of `sp(2n)` in PBW order: `p₊`, then `k` (lowering, Cartan,
/// raising), then `p₋`; lexicographic inside each block.
pub fn basis_elements(n: usize) -> Vec<BasisElement> {
    let sym: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out: Vec<BasisElement> = sym.iter().map(|&(i, j)| BasisElement::EPlus(i, j)).collect();
    let mut k: Vec<BasisElement> = (0..n)
        .flat_map(|i| (0..n).map(move |j| BasisElement::B(i, j)))
        .collect();
    k.sort_by_key(|b| (b.block(), *b));
    out.extend(k);
    out.extend(sym.iter().map(|&(i, j)| BasisElement::EMinus(i, j)));
    out
}

pub fn basis_index(n: usize, x: BasisElement) -> Result<usize> {
    if x.max_index() >= n {
        return Err(Error::Invalid(format!("{x} is not a basis element at rank {n}")));
    }
    basis_elements(n)
        .iter()
        .position(|&b| b == x)
        .ok_or_else(|| Error::Invalid(format!("{x} is not a basis element at rank {n}")))
}

/// The defining `2n × 2n` matrix of a basis element.
pub fn realize<T: Scalar>(n: usize, x: BasisElement) -> Matrix<Gaussian<T>> {
    let half = Gaussian::real(T::from_ratio(1, 2));
    let ihalf = Gaussian::new(T::zero(), T::from_ratio(1, 2));
    let mut m = Matrix::<Gaussian<T>>::zeros(2 * n, 2 * n);
    // e_{ij} ± e_{ji} contributions into the four blocks
    let mut put = |blk: (usize, usize), i: usize, j: usize, c: Gaussian<T>| {
        let (r, s) = (blk.0 * n + i, blk.1 * n + j);
        m[(r, s)] = m[(r, s)].clone() + c;
    };
    let sym = |put: &mut dyn FnMut((usize, usize), usize, usize, Gaussian<T>),
               blk: (usize, usize),
               i: usize,
               j: usize,
               c: Gaussian<T>| {
        put(blk, i, j, c.clone());
        put(blk, j, i, c);
    };
    let anti = |put: &mut dyn FnMut((usize, usize), usize, usize, Gaussian<T>),
                blk: (usize, usize),
                i: usize,
                j: usize,
                c: Gaussian<T>| {
        put(blk, i, j, c.clone());
        put(blk, j, i, -c);
    };
    match x {
        BasisElement::B(i, j) => {
            anti(&mut put, (0, 0), i, j, half.clone());
            sym(&mut put, (0, 1), i, j, -ihalf.clone());
            sym(&mut put, (1, 0), i, j, ihalf.clone());
            anti(&mut put, (1, 1), i, j, half);
        }
        BasisElement::EPlus(i, j) | BasisElement::EMinus(i, j) => {
            let s = if matches!(x, BasisElement::EPlus(..)) {
                ihalf
            } else {
                -ihalf
            };
            sym(&mut put, (0, 0), i, j, half.clone());
            sym(&mut put, (0, 1), i, j, s.clone());
            sym(&mut put, (1, 0), i, j, s);
            sym(&mut put, (1, 1), i, j, -half);
        }
    }
    m
}

/// The symplectic form `J = [[0, -1], [1, 0]]`.
pub fn symplectic_form<T: Scalar>(n: usize) -> Matrix<Gaussian<T>> {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = -Gaussian::<T>::from_i64(1);
        j[(n + i, i)] = Gaussian::from_i64(1);
    }
    j
}

/// Sparse structure constants: `table[a][b]` lists `(c, coeff)` with
/// `[x_a, x_b] = Σ coeff · x_c`.
pub type StructureTable<C> = Vec<Vec<Vec<(usize, C)>>>;

/// Computes `[x_a, x_b]` as matrices and solves for its basis coordinates.
pub fn structure_constants<T: Scalar>(n: usize) -> StructureTable<Gaussian<T>> {
    let basis = basis_elements(n);
    let mats: Vec<Matrix<Gaussian<T>>> = basis.iter().map(|&b| realize::<T>(n, b)).collect();
    let dim = basis.len();
    let size = 4 * n * n;
    // columns are flattened basis matrices
    let mut coords = Matrix::zeros(size, dim);
    for (c, m) in mats.iter().enumerate() {
        for r in 0..size {
            coords[(r, c)] = m[(r / (2 * n), r % (2 * n))].clone();
        }
    }
    let mut table = vec![vec![Vec::new(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            if a == b {
                continue;
            }
            let br = &(&mats[a] * &mats[b]) - &(&mats[b] * &mats[a]);
            let rhs: Vec<Gaussian<T>> = (0..size).map(|r| br[(r / (2 * n), r % (2 * n))].clone()).collect();
            let x = coords
                .solve(&rhs)
                .expect("sp(2n) is closed under the bracket");
            table[a][b] = x
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_negligible())
                .collect();
        }
    }
    table
}

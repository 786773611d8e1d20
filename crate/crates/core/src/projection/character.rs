//! Infinitesimal characters, held in two equivalent forms: the sorted
//! absolute Harish-Chandra parameter and the values `e_k(x²)` of the
//! elementary symmetric polynomials in the squared parameter.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalar::format_rational;
use crate::weights::{self, HalfInt, Weight};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct InfinitesimalCharacter {
    canonical: Vec<Vec<HalfInt>>,
    evaluation: Vec<Vec<BigRational>>,
}

/// `(e_1(y), …, e_n(y))`.
pub fn elementary_symmetric(y: &[BigRational]) -> Vec<BigRational> {
    let n = y.len();
    let mut e = vec![BigRational::zero(); n + 1];
    e[0] = BigRational::from_integer(1.into());
    for v in y {
        for k in (1..=n).rev() {
            let add = e[k - 1].clone() * v;
            e[k] += add;
        }
    }
    e.split_off(1)
}

pub fn inf_char(lambda: &Weight) -> InfinitesimalCharacter {
    let mut canonical = Vec::with_capacity(lambda.places());
    let mut evaluation = Vec::with_capacity(lambda.places());
    for row in lambda.entries() {
        let x = weights::hc_parameter(row);
        let sq: Vec<BigRational> = x
            .iter()
            .map(|h| {
                let q = h.to_rational();
                &q * &q
            })
            .collect();
        evaluation.push(elementary_symmetric(&sq));
        canonical.push(weights::abs_sorted(row));
    }
    InfinitesimalCharacter {
        canonical,
        evaluation,
    }
}

impl InfinitesimalCharacter {
    pub fn canonical(&self) -> &[Vec<HalfInt>] {
        &self.canonical
    }

    pub fn evaluation(&self) -> &[Vec<BigRational>] {
        &self.evaluation
    }

    pub fn rank(&self) -> usize {
        self.canonical.first().map_or(0, Vec::len)
    }

    pub fn places(&self) -> usize {
        self.canonical.len()
    }

    /// Surrogate value of `D_{2i}` at `place` (`i` is 1-based).
    pub fn value(&self, place: usize, i: usize) -> &BigRational {
        &self.evaluation[place][i - 1]
    }

    /// First place, and the least 1-based index there, at which the two
    /// characters' evaluation vectors differ.
    pub fn separation(&self, other: &Self) -> Option<(usize, usize)> {
        self.evaluation
            .iter()
            .zip(&other.evaluation)
            .enumerate()
            .find_map(|(v, (a, b))| a.iter().zip(b).position(|(x, y)| x != y).map(|i| (v, i + 1)))
    }
}

impl fmt::Display for InfinitesimalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let places: Vec<String> = self
            .canonical
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "chi[{}]", places.join(";"))
    }
}

impl Serialize for InfinitesimalCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let ev: Vec<Vec<String>> = self
            .evaluation
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        let mut st = s.serialize_struct("InfinitesimalCharacter", 2)?;
        st.serialize_field("canonical", &self.canonical)?;
        st.serialize_field("evaluation", &ev)?;
        st.end()
    }
}

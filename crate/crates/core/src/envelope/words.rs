//! Words in the letters `B, B*, E₊, E₋` that index the traces building the
//! central generators, and their sign numbers `L(w)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::guard;

/// A letter names a block of `M = [[B, E₊], [E₋, B*]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    EPlus,
    EMinus,
    B,
    BStar,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::EPlus, Letter::EMinus, Letter::B, Letter::BStar];

    /// Block position `(row, col)` inside `M`.
    pub fn block(self) -> (u8, u8) {
        match self {
            Letter::B => (0, 0),
            Letter::EPlus => (0, 1),
            Letter::EMinus => (1, 0),
            Letter::BStar => (1, 1),
        }
    }

    /// Whether `next` may follow `self`.
    pub fn may_precede(self, next: Letter) -> bool {
        self.block().1 == next.block().0
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::EPlus => "E+",
            Letter::EMinus => "E-",
            Letter::B => "B",
            Letter::BStar => "B*",
        }
    }
}

/// How adjacency is checked at the ends of a word.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Adjacency {
    #[default]
    Cyclic,
    Linear,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>, adjacency: Adjacency) -> Result<Self> {
        let w = Word(letters);
        if !w.is_valid(adjacency) {
            return Err(Error::Invalid(format!("{w} violates the adjacency rules")));
        }
        Ok(w)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    pub fn is_valid(&self, adjacency: Adjacency) -> bool {
        let w = &self.0;
        if w.is_empty() || self.count(Letter::EPlus) != self.count(Letter::EMinus) {
            return false;
        }
        let inner = w.windows(2).all(|p| p[0].may_precede(p[1]));
        match adjacency {
            Adjacency::Linear => inner,
            Adjacency::Cyclic => inner && w[w.len() - 1].may_precede(w[0]),
        }
    }

    /// Parses concatenated symbols such as `E-BE+B*`.
    pub fn parse(s: &str, adjacency: Adjacency) -> Result<Self> {
        let mut rest = s.trim();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let (l, k) = if let Some(r) = rest.strip_prefix("E+") {
                (Letter::EPlus, r)
            } else if let Some(r) = rest.strip_prefix("E-") {
                (Letter::EMinus, r)
            } else if let Some(r) = rest.strip_prefix("B*") {
                (Letter::BStar, r)
            } else if let Some(r) = rest.strip_prefix('B') {
                (Letter::B, r)
            } else {
                return Err(Error::Parse {
                    what: "word",
                    input: s.to_string(),
                });
            };
            out.push(l);
            rest = k;
        }
        Self::new(out, adjacency)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(l.symbol())?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All valid words of length `2r` in lexicographic order
/// (`E₊ < E₋ < B < B*`), with cyclic adjacency.
pub fn enumerate_words(r: usize) -> Result<Vec<Word>> {
    enumerate_words_with(r, Adjacency::Cyclic)
}

pub fn enumerate_words_with(r: usize, adjacency: Adjacency) -> Result<Vec<Word>> {
    if r == 0 {
        return Err(Error::Invalid("word half-length must be positive".into()));
    }
    guard::check("word length", 2 * r, guard::WORD_LENGTH)?;
    let len = 2 * r;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(cur: &mut Vec<Letter>, len: usize, adjacency: Adjacency, out: &mut Vec<Word>) {
        if cur.len() == len {
            let w = Word(cur.clone());
            if w.is_valid(adjacency) {
                out.push(w);
            }
            return;
        }
        for l in Letter::ALL {
            if cur.last().is_none_or(|p| p.may_precede(l)) {
                cur.push(l);
                go(cur, len, adjacency, out);
                cur.pop();
            }
        }
    }
    go(&mut cur, len, adjacency, &mut out);
    Ok(out)
}

/// Sign number with cyclic counting.
pub fn l_number(w: &Word) -> usize {
    l_number_with(w, Adjacency::Cyclic)
}

/// `L(w)`: occurrences of `E₋B` and `BE₊` whose `B` is not shared with the
/// other pattern, plus the number of `B*` letters.
///
/// A run `E₋ B E₊` consumes a single `B` for both patterns and contributes
/// nothing; a run `E₋ B⋯B E₊` with at least two `B`s contributes two.
pub fn l_number_with(w: &Word, adjacency: Adjacency) -> usize {
    let v = w.letters();
    let len = v.len() as isize;
    let at = |i: isize| -> Option<Letter> {
        match adjacency {
            Adjacency::Cyclic => Some(v[i.rem_euclid(len) as usize]),
            Adjacency::Linear => (0..len).contains(&i).then(|| v[i as usize]),
        }
    };
    let pairs = match adjacency {
        Adjacency::Cyclic => len,
        Adjacency::Linear => len - 1,
    };
    let mut isolated = 0;
    for p in 0..pairs {
        let (a, b) = (at(p), at(p + 1));
        if a == Some(Letter::EMinus) && b == Some(Letter::B) && at(p + 2) != Some(Letter::EPlus) {
            isolated += 1;
        }
        if a == Some(Letter::B) && b == Some(Letter::EPlus) && at(p - 1) != Some(Letter::EMinus) {
            isolated += 1;
        }
    }
    isolated + w.count(Letter::BStar)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> Word {
        Word::parse(s, Adjacency::Cyclic).unwrap()
    }

    #[test]
    fn length_two() {
        let ws: Vec<String> = enumerate_words(1).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(ws, ["E+E-", "E-E+", "BB", "B*B*"]);
    }

    #[test]
    fn length_four() {
        let ws = enumerate_words(2).unwrap();
        assert_eq!(ws.len(), 16);
        assert!(ws.iter().all(|w| w.count(Letter::EPlus) == w.count(Letter::EMinus)));
        let mut sorted = ws.clone();
        sorted.sort();
        assert_eq!(ws, sorted);
    }

    #[test]
    fn documented_sign_numbers() {
        assert_eq!(l_number(&word("E-BE+")), 0);
        assert_eq!(l_number(&word("E-BE+B*")), 1);
        assert_eq!(l_number(&word("E+E-BB")), 2);
        assert_eq!(l_number(&word("E-BBE+")), 2);
    }

    #[test]
    fn sign_is_rotation_invariant() {
        for w in enumerate_words(3).unwrap() {
            let v = w.letters().to_vec();
            for k in 1..v.len() {
                let mut rot = v.clone();
                rot.rotate_left(k);
                let rot = Word::new(rot, Adjacency::Cyclic).unwrap();
                assert_eq!(l_number(&rot) % 2, l_number(&w) % 2, "{w} vs {rot}");
            }
        }
    }

    #[test]
    fn guard_and_validation() {
        assert!(enumerate_words(7).unwrap_err().is_guard());
        assert!(enumerate_words(0).is_err());
        assert!(Word::parse("E+B", Adjacency::Cyclic).is_err());
        assert!(Word::parse("E+X", Adjacency::Cyclic).is_err());
    }
}

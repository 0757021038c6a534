//! Quarter-diagram encoding: the direction each northern line turns.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `L` and `R` turn towards the 0- and 1-wall; `O` propagates. The variant
/// order gives the listing order `L < R < o`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Turn {
    L,
    R,
    O,
}

impl Turn {
    pub fn symbol(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
            Turn::O => 'o',
        }
    }
}

/// Where the line starting at a position goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Destination {
    /// Arc to another position of the same edge (0-based).
    Arc(usize),
    West,
    East,
    Propagating,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct TurnString(Vec<Turn>);

impl TurnString {
    pub fn new(turns: Vec<Turn>) -> Result<Self> {
        let t = TurnString(turns);
        t.destinations()?;
        Ok(t)
    }

    pub fn turns(&self) -> &[Turn] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Resolve the matching: `R` opens, `L` closes. Fails when a matched pair
    /// would span an `o`, an unmatched `L` has an `o` to its left, or an
    /// unmatched `R` has an `o` to its right.
    pub fn destinations(&self) -> Result<Vec<Destination>> {
        let mut out = vec![Destination::Propagating; self.0.len()];
        let mut open: Vec<usize> = Vec::new();
        let mut seen_o = false;
        for (i, t) in self.0.iter().enumerate() {
            match t {
                Turn::R => open.push(i),
                Turn::L => match open.pop() {
                    Some(j) => {
                        out[i] = Destination::Arc(j);
                        out[j] = Destination::Arc(i);
                    }
                    None if seen_o => return Err(self.invalid("unmatched L right of a propagating line")),
                    None => out[i] = Destination::West,
                },
                Turn::O => {
                    if !open.is_empty() {
                        return Err(self.invalid("R left of a propagating line"));
                    }
                    seen_o = true;
                }
            }
        }
        for j in open {
            out[j] = Destination::East;
        }
        Ok(out)
    }

    fn invalid(&self, why: &str) -> Error {
        Error::InvalidDiagram(format!("turn string {self}: {why}"))
    }

    /// Number of propagating lines.
    pub fn x(&self) -> usize {
        self.0.iter().filter(|&&t| t == Turn::O).count()
    }

    /// Lines leaving through the 1-wall.
    pub fn ur(&self) -> usize {
        self.count(Destination::East)
    }

    /// Lines leaving through the 0-wall.
    pub fn ur0(&self) -> usize {
        self.count(Destination::West)
    }

    fn count(&self, d: Destination) -> usize {
        self.destinations().expect("validated").into_iter().filter(|&x| x == d).count()
    }

    /// Weight under the basis-table convention: `+x` iff `ur` is odd.
    pub fn table_weight(&self) -> i64 {
        let x = self.x() as i64;
        if x == 0 {
            0
        } else if self.ur() % 2 == 1 {
            x
        } else {
            -x
        }
    }

    /// Weight under the inner-colour convention: `+x` iff the inner region
    /// is black, which happens iff `ur0` is odd.
    pub fn colour_weight(&self) -> i64 {
        let x = self.x() as i64;
        if x == 0 {
            0
        } else if self.ur0() % 2 == 1 {
            x
        } else {
            -x
        }
    }

    /// `L` prepended (insertion of a cup astride the 0-wall).
    pub fn with_leading_l(&self) -> TurnString {
        let mut v = vec![Turn::L];
        v.extend_from_slice(&self.0);
        TurnString(v)
    }

    /// `R` appended (insertion of a cup astride the 1-wall).
    pub fn with_trailing_r(&self) -> TurnString {
        let mut v = self.0.clone();
        v.push(Turn::R);
        TurnString(v)
    }

    pub fn strip_leading_l(&self) -> Option<TurnString> {
        match self.0.first() {
            Some(Turn::L) => Some(TurnString(self.0[1..].to_vec())),
            _ => None,
        }
    }

    pub fn strip_trailing_r(&self) -> Option<TurnString> {
        match self.0.last() {
            Some(Turn::R) => Some(TurnString(self.0[..self.0.len() - 1].to_vec())),
            _ => None,
        }
    }

    /// All valid strings of length `m` in `L < R < o` lexicographic order.
    pub fn all(m: usize) -> Vec<TurnString> {
        let mut out = vec![Vec::new()];
        for _ in 0..m {
            let mut next = Vec::with_capacity(out.len() * 3);
            for p in &out {
                for t in [Turn::L, Turn::R, Turn::O] {
                    let mut q: Vec<Turn> = p.clone();
                    q.push(t);
                    next.push(q);
                }
            }
            out = next;
        }
        out.into_iter().map(TurnString).filter(|t| t.destinations().is_ok()).collect()
    }
}

impl fmt::Display for TurnString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        self.0.iter().try_for_each(|t| write!(f, "{}", t.symbol()))
    }
}

impl FromStr for TurnString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "∅" {
            return Ok(TurnString(Vec::new()));
        }
        let turns = s
            .chars()
            .map(|c| match c {
                'L' => Ok(Turn::L),
                'R' => Ok(Turn::R),
                'o' | 'O' => Ok(Turn::O),
                other => Err(Error::Parse(format!("bad turn '{other}' in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TurnString::new(turns)
    }
}

impl TryFrom<String> for TurnString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TurnString> for String {
    fn from(t: TurnString) -> String {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(s: &str) -> TurnString {
        s.parse().unwrap()
    }

    #[test]
    fn validity() {
        assert!("LRo".parse::<TurnString>().is_err());
        assert!("oL".parse::<TurnString>().is_err());
        assert!("RoL".parse::<TurnString>().is_err());
        assert_eq!(ts("RLo").ur0(), 0);
        assert_eq!(ts("oRR").ur(), 2);
        assert_eq!(ts("LoR").x(), 1);
    }

    #[test]
    fn all_lr_strings_valid() {
        assert_eq!(TurnString::all(4).iter().filter(|t| t.x() == 0).count(), 16);
    }

    #[test]
    fn weight_conventions() {
        assert_eq!(ts("oR").table_weight(), 1);
        assert_eq!(ts("Lo").table_weight(), -1);
        assert_eq!(ts("Lo").colour_weight(), 1);
        assert_eq!(ts("oo").colour_weight(), -2);
    }
}

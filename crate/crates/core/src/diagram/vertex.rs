use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Vertex `i` (north) or `i'` (south). Ordered with all northern vertices first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub primed: bool,
    pub index: u32,
}

impl VertexId {
    pub fn north(index: u32) -> Self {
        Self { primed: false, index }
    }

    pub fn south(index: u32) -> Self {
        Self { primed: true, index }
    }

    /// JSON spelling: `"3"` or `"3p"`.
    pub fn to_token(self) -> String {
        if self.primed {
            format!("{}p", self.index)
        } else {
            self.index.to_string()
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('p').or_else(|| s.strip_suffix('\'')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let index: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex {s:?}")))?;
        if index == 0 {
            return Err(Error::Parse("vertex indices start at 1".into()));
        }
        Ok(Self { primed, index })
    }
}

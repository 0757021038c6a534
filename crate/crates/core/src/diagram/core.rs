use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::vertex::VertexId;
use super::word::{loop_class, reversed, BeadWord};
use crate::error::{Error, Result};
use crate::params::LaurentPoly;

/// One line of a diagram. `a < b` and `word` is read from `a` to `b`, which is
/// the reading convention: `i` to `j'`, `i` to `j` for `i < j`, `i'` to `j'` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    pub a: VertexId,
    pub b: VertexId,
    pub word: BeadWord,
}

impl Pair {
    pub fn is_propagating(&self) -> bool {
        self.a.primed != self.b.primed
    }

    /// The word read starting from `v`, which must be an end of this pair.
    pub fn word_from(&self, v: VertexId) -> BeadWord {
        if v == self.a {
            self.word.clone()
        } else {
            reversed(&self.word)
        }
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if v == self.a {
            self.b
        } else {
            self.a
        }
    }
}

/// A beaded pair partition of `V^n_m`, possibly carrying closed loops.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    n: u32,
    m: u32,
    pairs: Vec<Pair>,
    loops: Vec<BeadWord>,
}

impl Diagram {
    /// Build and normalise a diagram. Each triple is `(end, end, word read from
    /// the first end)`; orientation and ordering are canonicalised.
    pub fn new(
        n: u32,
        m: u32,
        lines: impl IntoIterator<Item = (VertexId, VertexId, BeadWord)>,
        loops: impl IntoIterator<Item = BeadWord>,
    ) -> Result<Self> {
        let mut seen = vec![false; (n + m) as usize];
        let mut pairs = Vec::new();
        for (x, y, w) in lines {
            for v in [x, y] {
                let bound = if v.primed { m } else { n };
                if v.index == 0 || v.index > bound {
                    return Err(Error::InvalidDiagram(format!("vertex {v} outside V^{n}_{m}")));
                }
                let s = slot(n, v);
                if seen[s] {
                    return Err(Error::InvalidDiagram(format!("vertex {v} used twice")));
                }
                seen[s] = true;
            }
            if x == y {
                return Err(Error::InvalidDiagram(format!("vertex {x} paired with itself")));
            }
            pairs.push(if x < y {
                Pair { a: x, b: y, word: w }
            } else {
                Pair { a: y, b: x, word: reversed(&w) }
            });
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidDiagram("not a perfect matching".into()));
        }
        pairs.sort();
        let mut loops: Vec<BeadWord> = loops.into_iter().map(|w| loop_class(&w)).collect();
        loops.sort();
        Ok(Self { n, m, pairs, loops })
    }

    /// Beadless diagram from vertex pairs.
    pub fn plain(n: u32, m: u32, lines: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        Self::new(n, m, lines.into_iter().map(|(a, b)| (a, b, String::new())), [])
    }

    pub fn identity(n: u32) -> Self {
        Self::plain(n, n, (1..=n).map(|i| (VertexId::north(i), VertexId::south(i)))).expect("identity")
    }

    /// The empty diagram on zero vertices.
    pub fn empty() -> Self {
        Self::identity(0)
    }

    /// `U_i` on `n` strings: cup `{i, i+1}`, cap `{i', (i+1)'}`.
    pub fn tl_generator(n: u32, i: u32) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidDiagram(format!("U_{i} undefined for n = {n}")));
        }
        let mut lines = vec![
            (VertexId::north(i), VertexId::north(i + 1)),
            (VertexId::south(i), VertexId::south(i + 1)),
        ];
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            lines.push((VertexId::north(j), VertexId::south(j)));
        }
        Self::plain(n, n, lines)
    }

    /// Identity with `word` placed on the line `{i, i'}`.
    pub fn decorated_identity(n: u32, i: u32, word: &str) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidDiagram(format!("string {i} undefined for n = {n}")));
        }
        Self::new(
            n,
            n,
            (1..=n).map(|j| {
                let w = if j == i { word.to_string() } else { String::new() };
                (VertexId::north(j), VertexId::south(j), w)
            }),
            [],
        )
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn loops(&self) -> &[BeadWord] {
        &self.loops
    }

    pub fn has_loops(&self) -> bool {
        !self.loops.is_empty()
    }

    /// The underlying diagram with all loops removed.
    pub fn underlying(&self) -> Diagram {
        Diagram { loops: Vec::new(), ..self.clone() }
    }

    /// The same pair partition with every bead removed.
    pub fn shape(&self) -> Diagram {
        Diagram {
            pairs: self
                .pairs
                .iter()
                .map(|p| Pair { word: String::new(), ..p.clone() })
                .collect(),
            loops: self.loops.iter().map(|_| String::new()).collect(),
            ..self.clone()
        }
    }

    pub fn propagating_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.is_propagating()).count()
    }

    pub fn pair_at(&self, v: VertexId) -> Option<&Pair> {
        self.pairs.iter().find(|p| p.a == v || p.b == v)
    }

    /// Replace the word on every line using `f(pair)`.
    pub fn map_words(&self, f: impl Fn(&Pair) -> BeadWord) -> Diagram {
        let mut out = self.clone();
        for p in &mut out.pairs {
            p.word = f(p);
        }
        out
    }

    /// Upside-down flip: `i <-> i'`.
    pub fn flip(&self) -> Diagram {
        let swap = |v: VertexId| VertexId { primed: !v.primed, index: v.index };
        Diagram::new(
            self.m,
            self.n,
            self.pairs.iter().map(|p| (swap(p.a), swap(p.b), p.word.clone())),
            self.loops.iter().cloned(),
        )
        .expect("flip preserves validity")
    }

    /// Left-right mirror: `i <-> n+1-i` on top, `j' <-> (m+1-j)'` on the bottom.
    pub fn mirror(&self) -> Diagram {
        let (n, m) = (self.n, self.m);
        let mir = move |v: VertexId| {
            let k = if v.primed { m } else { n };
            VertexId { primed: v.primed, index: k + 1 - v.index }
        };
        Diagram::new(
            n,
            m,
            self.pairs.iter().map(|p| (mir(p.a), mir(p.b), p.word.clone())),
            self.loops.iter().cloned(),
        )
        .expect("mirror preserves validity")
    }

    /// Boundary positions in the order `1..n, m'..1'`.
    pub(crate) fn boundary_pos(&self, v: VertexId) -> usize {
        if v.primed {
            (self.n + self.m - v.index) as usize
        } else {
            (v.index - 1) as usize
        }
    }

    /// Chords as `(lo, hi)` boundary positions, aligned with `pairs()`.
    pub(crate) fn chords(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .map(|p| {
                let (x, y) = (self.boundary_pos(p.a), self.boundary_pos(p.b));
                (x.min(y), x.max(y))
            })
            .collect()
    }

    pub fn is_planar(&self) -> bool {
        let total = (self.n + self.m) as usize;
        let mut owner = vec![usize::MAX; total];
        for (k, (x, y)) in self.chords().into_iter().enumerate() {
            owner[x] = k;
            owner[y] = k;
        }
        let mut stack: Vec<usize> = Vec::new();
        let mut opened = vec![false; self.pairs.len()];
        for &k in &owner {
            if opened[k] {
                if stack.pop() != Some(k) {
                    return false;
                }
            } else {
                opened[k] = true;
                stack.push(k);
            }
        }
        true
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            n: self.n,
            m: self.m,
            pairs: self
                .pairs
                .iter()
                .map(|p| PairJson { ends: [p.a.to_token(), p.b.to_token()], word: p.word.clone() })
                .collect(),
            loops: self.loops.clone(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serialisable")
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        let mut lines = Vec::new();
        for p in &j.pairs {
            lines.push((p.ends[0].parse()?, p.ends[1].parse()?, p.word.clone()));
        }
        Self::new(j.n, j.m, lines, j.loops.iter().cloned())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

pub(crate) fn slot(n: u32, v: VertexId) -> usize {
    if v.primed {
        (n + v.index - 1) as usize
    } else {
        (v.index - 1) as usize
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .pairs
            .iter()
            .map(|p| {
                if p.word.is_empty() {
                    format!("{{{},{}}}", p.a, p.b)
                } else {
                    format!("{{{},{}}}_{}", p.a, p.b, p.word)
                }
            })
            .collect();
        for l in &self.loops {
            if l.is_empty() {
                parts.push("loop".into());
            } else {
                parts.push(format!("loop {l}"));
            }
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub ends: [String; 2],
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: u32,
    pub m: u32,
    pub pairs: Vec<PairJson>,
    pub loops: Vec<String>,
}

/// Concatenate `d1` on top of `d2`, tracing chains and accumulating bead words.
pub fn abacus_concat(d1: &Diagram, d2: &Diagram) -> Result<Diagram> {
    if d1.m != d2.n {
        return Err(Error::RankMismatch(format!(
            "south count {} of the upper diagram differs from north count {} of the lower",
            d1.m, d2.n
        )));
    }
    let (n1, mid, l2) = (d1.n as usize, d1.m as usize, d2.m as usize);
    let partners = |d: &Diagram| {
        let mut out: Vec<(usize, BeadWord)> = vec![(0, String::new()); (d.n + d.m) as usize];
        for p in &d.pairs {
            let (x, y) = (slot(d.n, p.a), slot(d.n, p.b));
            out[x] = (y, p.word.clone());
            out[y] = (x, reversed(&p.word));
        }
        out
    };
    let p1 = partners(d1);
    let p2 = partners(d2);
    // Node encoding: (false, slot) in d1, (true, slot) in d2.
    let is_terminal = |upper: bool, s: usize| if upper { s >= mid } else { s < n1 };
    let mut visited1 = vec![false; p1.len()];
    let mut visited2 = vec![false; p2.len()];
    let vertex_of = |upper: bool, s: usize| {
        if upper {
            VertexId::south((s - mid + 1) as u32)
        } else {
            VertexId::north((s + 1) as u32)
        }
    };

    let walk = |start_lower: bool,
                start: usize,
                visited1: &mut Vec<bool>,
                visited2: &mut Vec<bool>|
     -> (bool, usize, BeadWord) {
        let (mut in_d2, mut s) = (start_lower, start);
        let mut word = String::new();
        loop {
            let (other, w) = if in_d2 { p2[s].clone() } else { p1[s].clone() };
            if in_d2 {
                visited2[s] = true;
                visited2[other] = true;
            } else {
                visited1[s] = true;
                visited1[other] = true;
            }
            word.push_str(&w);
            if is_terminal(in_d2, other) {
                return (in_d2, other, word);
            }
            // Cross the middle row.
            if in_d2 {
                s = n1 + other;
                in_d2 = false;
            } else {
                s = other - n1;
                in_d2 = true;
            }
            if (in_d2 && visited2[s]) || (!in_d2 && visited1[s]) {
                return (in_d2, usize::MAX, word);
            }
        }
    };

    let mut lines = Vec::new();
    for s in 0..n1 {
        if !visited1[s] {
            let (end_d2, e, w) = walk(false, s, &mut visited1, &mut visited2);
            lines.push((vertex_of(false, s), vertex_of(end_d2, e), w));
        }
    }
    for s in mid..mid + l2 {
        if !visited2[s] {
            let (end_d2, e, w) = walk(true, s, &mut visited1, &mut visited2);
            lines.push((vertex_of(true, s), vertex_of(end_d2, e), w));
        }
    }
    let mut loops: Vec<BeadWord> = d1.loops.iter().chain(d2.loops.iter()).cloned().collect();
    for j in 0..mid {
        let s = n1 + j;
        if !visited1[s] {
            let (_, e, w) = walk(false, s, &mut visited1, &mut visited2);
            debug_assert_eq!(e, usize::MAX);
            loops.push(w);
        }
    }
    Diagram::new(d1.n, d2.m, lines, loops)
}

/// Replace each loop by its factor. Returns `(k_d, c_d)`.
pub fn scalar_reduce(
    d: &Diagram,
    rules: &BTreeMap<BeadWord, LaurentPoly>,
) -> Result<(LaurentPoly, Diagram)> {
    let mut k = LaurentPoly::one();
    for l in &d.loops {
        let f = rules.get(l).ok_or_else(|| Error::UnknownLoopClass(l.clone()))?;
        k = &k * f;
    }
    Ok((k, d.underlying()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        s.parse().unwrap()
    }

    fn line(a: &str, b: &str, w: &str) -> (VertexId, VertexId, BeadWord) {
        (v(a), v(b), w.to_string())
    }

    fn frubeddd() -> (Diagram, Diagram, Diagram) {
        let d1 = Diagram::new(3, 3, [line("1", "3p", "ab"), line("2", "3", "c"), line("1p", "2p", "")], []);
        let d2 = Diagram::new(3, 3, [line("1", "2p", "ef"), line("3", "3p", "g"), line("2", "1p", "d")], []);
        let d3 = Diagram::new(3, 3, [line("1", "2", "hi"), line("3", "3p", ""), line("1p", "2p", "")], []);
        (d1.unwrap(), d2.unwrap(), d3.unwrap())
    }

    #[test]
    fn abacus_worked_example() {
        let (d1, d2, d3) = frubeddd();
        let left = abacus_concat(&abacus_concat(&d1, &d2).unwrap(), &d3).unwrap();
        let right = abacus_concat(&d1, &abacus_concat(&d2, &d3).unwrap()).unwrap();
        let expected = Diagram::new(
            3,
            3,
            [line("1", "3p", "abg"), line("2", "3", "c"), line("1p", "2p", "")],
            ["efihd".to_string()],
        )
        .unwrap();
        assert_eq!(left, expected);
        assert_eq!(right, expected);
    }

    #[test]
    fn scalar_reduce_worked_example() {
        let (d1, d2, d3) = frubeddd();
        let c = abacus_concat(&abacus_concat(&d1, &d2).unwrap(), &d3).unwrap();
        let mut rules = BTreeMap::new();
        rules.insert(loop_class("efihd"), LaurentPoly::param(crate::ParamName::Delta));
        let (k, d) = scalar_reduce(&c, &rules).unwrap();
        assert_eq!(k, LaurentPoly::param(crate::ParamName::Delta));
        assert!(!d.has_loops());
        assert_eq!(d.pairs().len(), 3);
        let empty = BTreeMap::new();
        assert!(matches!(scalar_reduce(&c, &empty), Err(Error::UnknownLoopClass(_))));
    }

    #[test]
    fn two_empty_loops_give_delta_squared() {
        let u = Diagram::tl_generator(2, 1).unwrap();
        let c = abacus_concat(&abacus_concat(&u, &u).unwrap(), &u).unwrap();
        assert_eq!(c.loops().len(), 2);
        let mut rules = BTreeMap::new();
        rules.insert(String::new(), LaurentPoly::param(crate::ParamName::Delta));
        let (k, _) = scalar_reduce(&c, &rules).unwrap();
        assert_eq!(k, LaurentPoly::param(crate::ParamName::Delta).pow(2));
    }

    #[test]
    fn identity_is_unit() {
        let (d1, _, _) = frubeddd();
        let id = Diagram::identity(3);
        assert_eq!(abacus_concat(&id, &d1).unwrap(), d1);
        assert_eq!(abacus_concat(&d1, &id).unwrap(), d1);
    }

    #[test]
    fn rank_mismatch() {
        let a = Diagram::identity(2);
        let b = Diagram::identity(3);
        assert!(matches!(abacus_concat(&a, &b), Err(Error::RankMismatch(_))));
    }

    #[test]
    fn planarity_small() {
        assert!(Diagram::identity(2).is_planar());
        let t = Diagram::plain(2, 2, [(v("1"), v("2p")), (v("2"), v("1p"))]).unwrap();
        assert!(!t.is_planar());
    }

    #[test]
    fn json_roundtrip() {
        let (d1, _, _) = frubeddd();
        let s = d1.to_json_string();
        assert_eq!(Diagram::from_json_str(&s).unwrap(), d1);
        assert_eq!(
            s,
            r#"{"n":3,"m":3,"pairs":[{"ends":["1","3p"],"word":"ab"},{"ends":["2","3"],"word":"c"},{"ends":["1p","2p"],"word":""}],"loops":[]}"#
        );
    }

    #[test]
    fn reading_convention_normalises_orientation() {
        let a = Diagram::new(2, 2, [line("2p", "1", "LR"), line("2", "1p", "")], []).unwrap();
        let p = a.pair_at(v("1")).unwrap();
        assert_eq!(p.a, v("1"));
        assert_eq!(p.word, "RL");
    }

    #[test]
    fn invalid_matchings_rejected() {
        assert!(Diagram::plain(2, 2, [(v("1"), v("1p"))]).is_err());
        assert!(Diagram::plain(1, 1, [(v("1"), v("2p"))]).is_err());
        assert!(Diagram::plain(1, 1, [(v("1"), v("1"))]).is_err());
    }
}

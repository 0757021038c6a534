//! Left-right symmetric periodic diagrams, stored as their fundamental strip
//! between the 0-wall (west) and the 1-wall (east).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::turn::{Destination, Turn, TurnString};
use crate::error::{Error, Result};
use crate::params::{LaurentPoly, ParamName};

/// An endpoint in the strip. Wall points are numbered from the north edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    N(u32),
    S(u32),
    W(u32),
    E(u32),
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            End::N(i) => write!(f, "N{i}"),
            End::S(i) => write!(f, "S{i}"),
            End::W(i) => write!(f, "W{i}"),
            End::E(i) => write!(f, "E{i}"),
        }
    }
}

impl FromStr for End {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad strip endpoint {s:?}"));
        let mut chars = s.chars();
        let tag = chars.next().ok_or_else(bad)?;
        let i: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match tag {
            'N' => Ok(End::N(i)),
            'S' => Ok(End::S(i)),
            'W' => Ok(End::W(i)),
            'E' => Ok(End::E(i)),
            _ => Err(bad()),
        }
    }
}

/// Multiplicities of the removable periodic features.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FeatureCount {
    /// Symmetric pairs of contractible loops.
    pub delta: u32,
    /// White loops astride the 0-wall.
    pub delta_l: u32,
    /// Black loops astride the 0-wall.
    pub kappa_l: u32,
    pub delta_r: u32,
    pub kappa_r: u32,
    /// Pairs of noncontractible loops.
    pub kappa_lr: u32,
}

impl FeatureCount {
    pub fn scalar(&self) -> LaurentPoly {
        let mut exps = [0i32; 6];
        for (p, c) in [
            (ParamName::Delta, self.delta),
            (ParamName::DeltaL, self.delta_l),
            (ParamName::DeltaR, self.delta_r),
            (ParamName::KappaL, self.kappa_l),
            (ParamName::KappaR, self.kappa_r),
            (ParamName::KappaLR, self.kappa_lr),
        ] {
            exps[p.index()] = c as i32;
        }
        LaurentPoly::monomial(exps)
    }

    pub fn total(&self) -> u32 {
        self.delta + self.delta_l + self.kappa_l + self.delta_r + self.kappa_r + self.kappa_lr
    }

    pub fn dominates(&self, other: &FeatureCount) -> bool {
        self.delta >= other.delta
            && self.delta_l >= other.delta_l
            && self.kappa_l >= other.kappa_l
            && self.delta_r >= other.delta_r
            && self.kappa_r >= other.kappa_r
            && self.kappa_lr >= other.kappa_lr
    }
}

impl std::ops::Add for FeatureCount {
    type Output = FeatureCount;

    fn add(self, o: FeatureCount) -> FeatureCount {
        FeatureCount {
            delta: self.delta + o.delta,
            delta_l: self.delta_l + o.delta_l,
            kappa_l: self.kappa_l + o.kappa_l,
            delta_r: self.delta_r + o.delta_r,
            kappa_r: self.kappa_r + o.kappa_r,
            kappa_lr: self.kappa_lr + o.kappa_lr,
        }
    }
}

/// A (pseudo)diagram in `CC_{2m}` seen on its fundamental strip.
///
/// `loops` counts contractible loops off the walls (each stands for a mirror
/// pair in the periodic picture). Wall segments `W–W`, `E–E` and `W–E` that are
/// still present are the other features; a basis strip has none except at most
/// one `W–E` belt.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strip {
    m: u32,
    west: u32,
    east: u32,
    lines: Vec<(End, End)>,
    loops: u32,
}

impl Strip {
    pub fn new(m: u32, lines: impl IntoIterator<Item = (End, End)>, loops: u32) -> Result<Self> {
        let mut lines: Vec<(End, End)> = lines.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        lines.sort();
        let (mut west, mut east) = (0, 0);
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &lines {
            for e in [a, b] {
                match e {
                    End::N(i) | End::S(i) if i == 0 || i > m => {
                        return Err(Error::InvalidDiagram(format!("endpoint {e} outside rank {m}")))
                    }
                    End::W(p) => west = west.max(p),
                    End::E(p) => east = east.max(p),
                    _ => {}
                }
                if !seen.insert(e) {
                    return Err(Error::InvalidDiagram(format!("endpoint {e} used twice")));
                }
            }
        }
        if seen.len() as u32 != 2 * m + west + east {
            return Err(Error::InvalidDiagram("strip endpoints are not a perfect matching".into()));
        }
        Ok(Self { m, west, east, lines, loops })
    }

    /// Glue a top half `u` and a bottom half `v` with `belts` wall-to-wall
    /// segments between them. The `k`-th propagating line on top joins the
    /// `k`-th one below.
    pub fn from_halves(u: &TurnString, v: &TurnString, belts: u32) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::RankMismatch(format!("half-diagrams of ranks {} and {}", u.len(), v.len())));
        }
        if u.x() != v.x() {
            return Err(Error::InvalidDiagram(format!("halves {u} and {v} propagate differently")));
        }
        if u.x() > 0 && belts > 0 {
            return Err(Error::InvalidDiagram("a belt cannot coexist with propagating lines".into()));
        }
        let m = u.len() as u32;
        let (du, dv) = (u.destinations()?, v.destinations()?);
        let mut lines = Vec::new();
        let collect = |d: &[Destination], want: Destination| -> Vec<u32> {
            d.iter().enumerate().filter(|(_, &x)| x == want).map(|(i, _)| i as u32 + 1).collect()
        };
        for (d, vert) in [(&du, End::N as fn(u32) -> End), (&dv, End::S as fn(u32) -> End)] {
            for (i, &x) in d.iter().enumerate() {
                if let Destination::Arc(j) = x {
                    if i < j {
                        lines.push((vert(i as u32 + 1), vert(j as u32 + 1)));
                    }
                }
            }
        }
        let (top_o, bot_o) = (collect(&du, Destination::Propagating), collect(&dv, Destination::Propagating));
        lines.extend(top_o.iter().zip(&bot_o).map(|(&i, &j)| (End::N(i), End::S(j))));

        let top_l = collect(&du, Destination::West);
        let mut bot_l = collect(&dv, Destination::West);
        bot_l.reverse();
        let mut top_r = collect(&du, Destination::East);
        top_r.reverse();
        let bot_r = collect(&dv, Destination::East);

        let mut w = 0;
        for &i in &top_l {
            w += 1;
            lines.push((End::N(i), End::W(w)));
        }
        let mut e = 0;
        for &i in &top_r {
            e += 1;
            lines.push((End::N(i), End::E(e)));
        }
        for _ in 0..belts {
            w += 1;
            e += 1;
            lines.push((End::W(w), End::E(e)));
        }
        for &i in &bot_l {
            w += 1;
            lines.push((End::S(i), End::W(w)));
        }
        for &i in &bot_r {
            e += 1;
            lines.push((End::S(i), End::E(e)));
        }
        Strip::new(m, lines, 0)
    }

    /// The basis strip with halves `u`, `v`, inserting the belt the CC
    /// condition demands.
    pub fn glue(u: &TurnString, v: &TurnString) -> Result<Self> {
        let belt = if u.x() == 0 { ((u.ur0() + v.ur0()) % 2) as u32 } else { 0 };
        let s = Strip::from_halves(u, v, belt)?;
        if !s.is_cc() {
            return Err(Error::NotCC(format!("{u} over {v}")));
        }
        Ok(s)
    }

    pub fn identity(m: u32) -> Self {
        let o = TurnString::new(vec![Turn::O; m as usize]).expect("valid");
        Strip::from_halves(&o, &o, 0).expect("identity")
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn west(&self) -> u32 {
        self.west
    }

    pub fn east(&self) -> u32 {
        self.east
    }

    pub fn lines(&self) -> &[(End, End)] {
        &self.lines
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    /// Even numbers of crossings on both walls.
    pub fn is_cc(&self) -> bool {
        self.west % 2 == 0 && self.east % 2 == 0
    }

    pub fn partners(&self) -> BTreeMap<End, End> {
        let mut out = BTreeMap::new();
        for &(a, b) in &self.lines {
            out.insert(a, b);
            out.insert(b, a);
        }
        out
    }

    pub fn propagating_count(&self) -> usize {
        self.lines.iter().filter(|(a, b)| matches!((a, b), (End::N(_), End::S(_)))).count()
    }

    pub fn belts(&self) -> u32 {
        self.lines.iter().filter(|(a, b)| matches!((a, b), (End::W(_), End::E(_)))).count() as u32
    }

    /// No feature of any kind: no loops, no wall-to-same-wall arcs, at most
    /// one belt.
    pub fn is_basis(&self) -> bool {
        self.loops == 0
            && self.belts() <= 1
            && self.is_cc()
            && !self
                .lines
                .iter()
                .any(|(a, b)| matches!((a, b), (End::W(_), End::W(_)) | (End::E(_), End::E(_))))
    }

    /// Top and bottom turn strings together with the number of belts. Fails for
    /// strips still carrying wall arcs.
    pub fn halves(&self) -> Result<(TurnString, TurnString, u32)> {
        let p = self.partners();
        let mut top = Vec::with_capacity(self.m as usize);
        let mut bot = Vec::with_capacity(self.m as usize);
        for i in 1..=self.m {
            top.push(match p[&End::N(i)] {
                End::N(j) if j > i => Turn::R,
                End::N(_) => Turn::L,
                End::S(_) => Turn::O,
                End::W(_) => Turn::L,
                End::E(_) => Turn::R,
            });
            bot.push(match p[&End::S(i)] {
                End::S(j) if j > i => Turn::R,
                End::S(_) => Turn::L,
                End::N(_) => Turn::O,
                End::W(_) => Turn::L,
                End::E(_) => Turn::R,
            });
        }
        let wall_arc =
            self.lines.iter().any(|(a, b)| matches!((a, b), (End::W(_), End::W(_)) | (End::E(_), End::E(_))));
        if wall_arc {
            return Err(Error::InvalidDiagram("strip carries wall arcs".into()));
        }
        Ok((TurnString::new(top)?, TurnString::new(bot)?, self.belts()))
    }

    /// Weight under the inner-colour convention (identity at `-m`, `e` at
    /// `m-1`, `f` at `-(m-1)`).
    pub fn weight(&self) -> Result<i64> {
        let (u, _, _) = self.halves()?;
        Ok(u.colour_weight())
    }

    /// Upside-down reflection.
    pub fn flip(&self) -> Strip {
        let (w, e) = (self.west, self.east);
        let f = |x: End| match x {
            End::N(i) => End::S(i),
            End::S(i) => End::N(i),
            End::W(p) => End::W(w + 1 - p),
            End::E(p) => End::E(e + 1 - p),
        };
        Strip::new(self.m, self.lines.iter().map(|&(a, b)| (f(a), f(b))), self.loops).expect("flip")
    }

    /// Stack `self` on top of `other` and trace every chain; nothing is removed.
    pub fn concat(&self, other: &Strip) -> Result<Strip> {
        if self.m != other.m {
            return Err(Error::RankMismatch(format!("strips of ranks {} and {}", self.m, other.m)));
        }
        let (pa, pb) = (self.partners(), other.partners());
        let lift_a = |x: End| x;
        let lift_b = |x: End| match x {
            End::W(p) => End::W(p + self.west),
            End::E(p) => End::E(p + self.east),
            other => other,
        };
        // Walk: `upper` says which strip we are in; `x` is the endpoint we
        // enter that strip at.
        let walk = |mut upper: bool, mut x: End, used: &mut std::collections::BTreeSet<(bool, End)>| -> Option<End> {
            loop {
                used.insert((upper, x));
                let y = if upper { pa[&x] } else { pb[&x] };
                used.insert((upper, y));
                match (upper, y) {
                    (true, End::S(j)) => {
                        upper = false;
                        x = End::N(j);
                    }
                    (false, End::N(j)) => {
                        upper = true;
                        x = End::S(j);
                    }
                    (true, y) => return Some(lift_a(y)),
                    (false, y) => return Some(lift_b(y)),
                }
                if used.contains(&(upper, x)) {
                    return None;
                }
            }
        };
        let mut used = std::collections::BTreeSet::new();
        let mut lines = Vec::new();
        let starts_a = pa.keys().filter(|k| !matches!(k, End::S(_))).map(|&k| (true, k));
        let starts_b = pb.keys().filter(|k| !matches!(k, End::N(_))).map(|&k| (false, k));
        let starts: Vec<(bool, End)> = starts_a.chain(starts_b).collect();
        for (upper, k) in starts {
            if used.contains(&(upper, k)) {
                continue;
            }
            let start = if upper { lift_a(k) } else { lift_b(k) };
            let end = walk(upper, k, &mut used).expect("open chain");
            lines.push((start, end));
        }
        let mut loops = self.loops + other.loops;
        for j in 1..=self.m {
            if !used.contains(&(true, End::S(j))) {
                let closed = walk(true, End::S(j), &mut used);
                debug_assert!(closed.is_none());
                loops += 1;
            }
        }
        Strip::new(self.m, lines, loops)
    }

    /// Excise every feature, returning the counts and the reduced strip.
    ///
    /// Wall-arc colours are read off the unreduced strip: the wall segment just
    /// below crossing `p` on the 0-wall is white iff `p` is even, and the same
    /// parity rule holds on the 1-wall.
    pub fn reduce(&self) -> (FeatureCount, Strip) {
        let mut fc = FeatureCount { delta: self.loops, ..Default::default() };
        let mut kept = Vec::new();
        let mut belts = Vec::new();
        for &(a, b) in &self.lines {
            match (a, b) {
                (End::W(p), End::W(_)) => {
                    if p % 2 == 0 {
                        fc.delta_l += 1
                    } else {
                        fc.kappa_l += 1
                    }
                }
                (End::E(p), End::E(_)) => {
                    if p % 2 == 0 {
                        fc.delta_r += 1
                    } else {
                        fc.kappa_r += 1
                    }
                }
                (End::W(_), End::E(_)) => belts.push((a, b)),
                _ => kept.push((a, b)),
            }
        }
        fc.kappa_lr = belts.len() as u32 / 2;
        if belts.len() % 2 == 1 {
            kept.push(belts[0]);
        }
        // Renumber the surviving wall points in order.
        let mut wests: Vec<u32> = Vec::new();
        let mut easts: Vec<u32> = Vec::new();
        for (a, b) in &kept {
            for e in [a, b] {
                match e {
                    End::W(p) => wests.push(*p),
                    End::E(p) => easts.push(*p),
                    _ => {}
                }
            }
        }
        wests.sort_unstable();
        easts.sort_unstable();
        let rn = |x: End| match x {
            End::W(p) => End::W(wests.binary_search(&p).expect("kept") as u32 + 1),
            End::E(p) => End::E(easts.binary_search(&p).expect("kept") as u32 + 1),
            other => other,
        };
        let lines = kept.into_iter().map(|(a, b)| (rn(a), rn(b)));
        (fc, Strip::new(self.m, lines, 0).expect("reduction keeps a matching"))
    }

    pub fn to_json(&self) -> StripJson {
        let halves = self.halves().ok().filter(|_| self.is_basis());
        StripJson {
            m: self.m,
            west: self.west,
            east: self.east,
            lines: self.lines.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
            loops: self.loops,
            top: halves.as_ref().map(|h| h.0.to_string()),
            bottom: halves.as_ref().map(|h| h.1.to_string()),
            belt: halves.map(|h| h.2),
        }
    }

    pub fn from_json(j: &StripJson) -> Result<Self> {
        let lines = j
            .lines
            .iter()
            .map(|[a, b]| Ok((a.parse()?, b.parse()?)))
            .collect::<Result<Vec<(End, End)>>>()?;
        let s = Strip::new(j.m, lines, j.loops)?;
        if s.west != j.west || s.east != j.east {
            return Err(Error::InvalidDiagram("wall counts disagree with lines".into()));
        }
        Ok(s)
    }
}

impl fmt::Display for Strip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_basis() {
            if let Ok((u, v, b)) = self.halves() {
                write!(f, "{u}/{v}")?;
                if b > 0 {
                    f.write_str("+belt")?;
                }
                return Ok(());
            }
        }
        let parts: Vec<String> = self.lines.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "[{}]", parts.join(" "))?;
        if self.loops > 0 {
            write!(f, " loops={}", self.loops)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripJson {
    pub m: u32,
    pub west: u32,
    pub east: u32,
    pub lines: Vec<[String; 2]>,
    pub loops: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub top: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bottom: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub belt: Option<u32>,
}

/// Product of basis strips: concatenate, excise features, return the monomial.
pub fn compose_phi(a: &Strip, b: &Strip) -> Result<(LaurentPoly, Strip)> {
    let (fc, s) = a.concat(b)?.reduce();
    Ok((fc.scalar(), s))
}

/// `B^φ_{2m}`: every pair of halves with equal propagating number (and equal
/// 0-wall parity when lines propagate), belts fixed by the CC condition.
pub fn enumerate_bphi(m: u32) -> Vec<Strip> {
    let all = TurnString::all(m as usize);
    let mut out = Vec::new();
    for u in &all {
        for v in &all {
            if u.x() != v.x() || (u.x() > 0 && (u.ur0() + v.ur0()) % 2 == 1) {
                continue;
            }
            out.push(Strip::glue(u, v).expect("compatible halves"));
        }
    }
    out
}

/// Generators of `b^φ_{2m}`: `U_i`, `e` on the 0-wall side, `f` on the 1-wall side.
pub fn strip_u(m: u32, i: u32) -> Result<Strip> {
    if i == 0 || i >= m {
        return Err(Error::InvalidDiagram(format!("U_{i} undefined for m = {m}")));
    }
    let mut t = vec![Turn::O; m as usize];
    t[i as usize - 1] = Turn::R;
    t[i as usize] = Turn::L;
    let t = TurnString::new(t)?;
    Strip::from_halves(&t, &t, 0)
}

pub fn strip_e(m: u32) -> Result<Strip> {
    if m == 0 {
        return Err(Error::InvalidDiagram("e needs m > 0".into()));
    }
    let mut t = vec![Turn::O; m as usize];
    t[0] = Turn::L;
    let t = TurnString::new(t)?;
    Strip::glue(&t, &t)
}

pub fn strip_f(m: u32) -> Result<Strip> {
    if m == 0 {
        return Err(Error::InvalidDiagram("f needs m > 0".into()));
    }
    let mut t = vec![Turn::O; m as usize];
    t[m as usize - 1] = Turn::R;
    let t = TurnString::new(t)?;
    Strip::glue(&t, &t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(s: &str) -> TurnString {
        s.parse().unwrap()
    }

    #[test]
    fn small_basis_counts() {
        assert_eq!(enumerate_bphi(0).len(), 1);
        assert_eq!(enumerate_bphi(1).len(), 5);
        assert_eq!(enumerate_bphi(2).len(), 19);
        assert_eq!(enumerate_bphi(3).len(), 84);
    }

    #[test]
    fn ee_gives_delta_l() {
        for m in 1..=3 {
            let e = strip_e(m).unwrap();
            assert_eq!(compose_phi(&e, &e).unwrap(), (ParamName::DeltaL.into(), e));
            let f = strip_f(m).unwrap();
            assert_eq!(compose_phi(&f, &f).unwrap(), (ParamName::DeltaR.into(), f));
        }
    }

    #[test]
    fn belt_squared() {
        let l = ts("L");
        let r = ts("R");
        let a = Strip::glue(&l, &r).unwrap();
        assert_eq!(a.belts(), 1);
        let (k, c) = compose_phi(&a, &a).unwrap();
        assert_eq!(k, ParamName::KappaLR.into());
        assert_eq!(c, a);
    }

    #[test]
    fn weights_anchor() {
        for m in 1..=4 {
            assert_eq!(Strip::identity(m).weight().unwrap(), -(m as i64));
            assert_eq!(strip_e(m).unwrap().weight().unwrap(), m as i64 - 1);
            if m > 1 {
                assert_eq!(strip_f(m).unwrap().weight().unwrap(), -(m as i64 - 1));
            }
        }
    }

    #[test]
    fn double_cup_gives_both_colours() {
        let a = Strip::glue(&ts("LL"), &ts("LL")).unwrap();
        let (k, c) = compose_phi(&a, &a).unwrap();
        assert_eq!(k, &LaurentPoly::from(ParamName::DeltaL) * &LaurentPoly::from(ParamName::KappaL));
        assert_eq!(c, a);
    }

    #[test]
    fn json_round_trip() {
        for s in enumerate_bphi(2) {
            assert_eq!(Strip::from_json(&s.to_json()).unwrap(), s);
        }
    }

    #[test]
    fn flip_involutive_and_basis() {
        for s in enumerate_bphi(3) {
            assert_eq!(s.flip().flip(), s);
            assert!(s.flip().is_basis());
        }
    }
}

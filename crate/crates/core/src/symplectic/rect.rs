//! Rectangular reduction of L/R pseudodiagrams, as an oracle independent of the
//! periodic composition.

use super::fold::{fold_nu, unfold_raw};
use crate::diagram::{abacus_concat, word::loop_class, Diagram};
use crate::error::{Error, Result};
use crate::params::{LaurentPoly, ParamName};

const RULES: [(&str, &str, ParamName); 4] = [
    ("LL", "L", ParamName::DeltaL),
    ("RR", "R", ParamName::DeltaR),
    ("LRL", "L", ParamName::KappaLR),
    ("RLR", "R", ParamName::KappaLR),
];

/// One applicable rewrite: which line, where, which rule.
#[derive(Clone, Copy, Debug)]
struct Site {
    line: usize,
    pos: usize,
    rule: usize,
}

fn sites(words: &[String]) -> Vec<Site> {
    let mut out = Vec::new();
    for (line, w) in words.iter().enumerate() {
        for (rule, (pat, _, _)) in RULES.iter().enumerate() {
            let mut start = 0;
            while let Some(k) = w[start..].find(pat) {
                out.push(Site { line, pos: start + k, rule });
                start += k + 1;
            }
        }
    }
    out
}

/// Reduce a cyclic loop word to one of `∅, L, R, LR` and return its factor.
fn reduce_loop(w: &str) -> Result<LaurentPoly> {
    let mut k = LaurentPoly::one();
    let mut w: Vec<u8> = w.as_bytes().to_vec();
    'outer: loop {
        let n = w.len();
        for (pat, rep, p) in RULES {
            let pat = pat.as_bytes();
            if n < pat.len() {
                continue;
            }
            for s in 0..n {
                if (0..pat.len()).all(|i| w[(s + i) % n] == pat[i]) {
                    let mut rot: Vec<u8> = (0..n).map(|i| w[(s + i) % n]).collect();
                    rot.splice(0..pat.len(), rep.bytes());
                    w = rot;
                    k = &k * &LaurentPoly::param(p);
                    continue 'outer;
                }
            }
        }
        break;
    }
    let class = loop_class(std::str::from_utf8(&w).expect("ascii"));
    let f = match class.as_str() {
        "" => ParamName::Delta,
        "L" => ParamName::KappaL,
        "R" => ParamName::KappaR,
        "LR" => ParamName::KappaLR,
        other => return Err(Error::UnknownLoopClass(other.to_string())),
    };
    Ok(&k * &LaurentPoly::param(f))
}

/// Reduce with rewrite order picked by `choose(number_of_sites)`. Line rules
/// first; once none apply, two or more lines carrying both blob types are
/// unfolded, their belt pairs traded for `κ_LR`, and folded back.
pub fn rect_reduce(d: &Diagram, choose: &mut dyn FnMut(usize) -> usize) -> Result<(LaurentPoly, Diagram)> {
    reduce_with(d, choose, true)
}

/// Reduction in the big algebra `b^{x'}_m`: local rules only.
pub fn rect_reduce_big(d: &Diagram) -> Result<(LaurentPoly, Diagram)> {
    reduce_with(d, &mut |_| 0, false)
}

/// Product in `b^{x'}_m`.
pub fn big_compose(a: &Diagram, b: &Diagram) -> Result<(LaurentPoly, Diagram)> {
    rect_reduce_big(&abacus_concat(a, b)?)
}

fn reduce_with(
    d: &Diagram,
    choose: &mut dyn FnMut(usize) -> usize,
    topological: bool,
) -> Result<(LaurentPoly, Diagram)> {
    let mut k = LaurentPoly::one();
    for l in d.loops() {
        k = &k * &reduce_loop(l)?;
    }
    let mut cur = d.underlying();
    loop {
        let mut words: Vec<String> = cur.pairs().iter().map(|p| p.word.clone()).collect();
        let s = sites(&words);
        if !s.is_empty() {
            let site = s[choose(s.len()) % s.len()];
            let (pat, rep, p) = RULES[site.rule];
            words[site.line].replace_range(site.pos..site.pos + pat.len(), rep);
            k = &k * &LaurentPoly::param(p);
            cur = Diagram::new(
                cur.n(),
                cur.m(),
                cur.pairs().iter().zip(words).map(|(q, w)| (q.a, q.b, w)),
                [],
            )?;
            continue;
        }
        let mixed = words.iter().filter(|w| w.as_bytes().windows(2).any(|p| p[0] != p[1])).count();
        if topological && mixed >= 2 {
            let (fc, strip) = unfold_raw(&cur)?.reduce();
            k = &k * &fc.scalar();
            cur = fold_nu(&strip)?;
            continue;
        }
        return Ok((k, cur));
    }
}

/// Leftmost-first rewriting.
pub fn rect_reduce_first(d: &Diagram) -> Result<(LaurentPoly, Diagram)> {
    rect_reduce(d, &mut |_| 0)
}

/// Concatenate and reduce rectangularly.
pub fn rect_compose(a: &Diagram, b: &Diagram) -> Result<(LaurentPoly, Diagram)> {
    rect_reduce_first(&abacus_concat(a, b)?)
}

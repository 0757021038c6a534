use super::core::Diagram;
use super::exposure::exposure_levels;
use super::vertex::VertexId;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Beadless planar diagrams.
    TemperleyLieb,
    /// At most one blob `L` on each west-exposed line.
    Blob,
    /// Words `L^k`, `k < period`, on lines of exposure at most `exposure`.
    Contour { period: u32, exposure: u32 },
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tl" | "TL" => Ok(Family::TemperleyLieb),
            "blob" => Ok(Family::Blob),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// All noncrossing perfect matchings of `0..2k`.
pub fn noncrossing_matchings(k: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (1..points.len()).step_by(2) {
            let inside = rec(&points[1..j]);
            let outside = rec(&points[j + 1..]);
            for a in &inside {
                for b in &outside {
                    let mut v = Vec::with_capacity(points.len() / 2);
                    v.push((points[0], points[j]));
                    v.extend_from_slice(a);
                    v.extend_from_slice(b);
                    out.push(v);
                }
            }
        }
        out
    }
    rec(&(0..2 * k).collect::<Vec<_>>())
}

fn vertex_at(n: u32, m: u32, pos: usize) -> VertexId {
    let pos = pos as u32;
    if pos < n {
        VertexId::north(pos + 1)
    } else {
        VertexId::south(n + m - pos)
    }
}

/// Beadless planar diagrams on `V^n_n`.
pub fn tl_diagrams(n: u32) -> Vec<Diagram> {
    noncrossing_matchings(n as usize)
        .into_iter()
        .map(|mt| {
            Diagram::plain(n, n, mt.into_iter().map(|(x, y)| (vertex_at(n, n, x), vertex_at(n, n, y))))
                .expect("matching")
        })
        .collect()
}

/// Every way of assigning, per line, one word from `choices(line_index)`.
fn decorate(d: &Diagram, choices: &[Vec<String>]) -> Vec<Diagram> {
    let mut out = vec![Vec::<String>::new()];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for w in c {
                let mut p = prefix.clone();
                p.push(w.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|words| {
            Diagram::new(
                d.n(),
                d.m(),
                d.pairs().iter().zip(words).map(|(p, w)| (p.a, p.b, w)),
                [],
            )
            .expect("decoration keeps validity")
        })
        .collect()
}

pub fn enumerate_basis(family: Family, rank: u32) -> Result<Vec<Diagram>> {
    let shapes = tl_diagrams(rank);
    let mut out = Vec::new();
    match family {
        Family::TemperleyLieb => out = shapes,
        Family::Blob => {
            for d in &shapes {
                let levels = exposure_levels(d)?;
                let choices: Vec<Vec<String>> = levels
                    .iter()
                    .map(|&l| if l == 0 { vec![String::new(), "L".into()] } else { vec![String::new()] })
                    .collect();
                out.extend(decorate(d, &choices));
            }
        }
        Family::Contour { period, exposure } => {
            if period < 2 {
                return Err(Error::UnsupportedFamily(format!("contour period {period} < 2")));
            }
            for d in &shapes {
                let levels = exposure_levels(d)?;
                let choices: Vec<Vec<String>> = levels
                    .iter()
                    .map(|&l| {
                        if l <= exposure {
                            (0..period).map(|k| "L".repeat(k as usize)).collect()
                        } else {
                            vec![String::new()]
                        }
                    })
                    .collect();
                out.extend(decorate(d, &choices));
            }
        }
    }
    sort_diagrams(&mut out);
    Ok(out)
}

/// Deterministic order: lexicographic on the JSON serialisation.
pub fn sort_diagrams(ds: &mut [Diagram]) {
    ds.sort_by_cached_key(|d| d.to_json_string());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_basis(Family::TemperleyLieb, 3).unwrap().len(), 5);
        assert_eq!(enumerate_basis(Family::TemperleyLieb, 1).unwrap().len(), 1);
        assert_eq!(enumerate_basis(Family::Blob, 2).unwrap().len(), 6);
        assert_eq!(enumerate_basis(Family::TemperleyLieb, 0).unwrap(), vec![Diagram::empty()]);
    }

    #[test]
    fn blob_counts_are_central_binomials() {
        for (n, c) in [(1, 2), (2, 6), (3, 20), (4, 70), (5, 252)] {
            assert_eq!(enumerate_basis(Family::Blob, n).unwrap().len(), c);
        }
    }

    #[test]
    fn contour_period_guard() {
        assert!(enumerate_basis(Family::Contour { period: 1, exposure: 0 }, 2).is_err());
    }
}

//! Exposure levels: how many lines separate a line from a frame edge.

use super::core::Diagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Edge {
    West,
    East,
}

/// Boundary positions rotated so that the gap between the last and first
/// position is the requested edge.
fn rotated_chords(d: &Diagram, edge: Edge) -> Vec<(usize, usize)> {
    let total = (d.n() + d.m()) as usize;
    let shift = match edge {
        Edge::West => 0,
        Edge::East => d.n() as usize,
    };
    d.chords()
        .into_iter()
        .map(|(x, y)| {
            let (x, y) = ((x + total - shift) % total, (y + total - shift) % total);
            (x.min(y), x.max(y))
        })
        .collect()
}

/// Exposure level of every line (aligned with `d.pairs()`), measured from `edge`.
///
/// Peels the diagram: the lines met by walking the face that touches the edge
/// get the current level, are removed, and the walk is repeated.
pub fn exposure_levels_from(d: &Diagram, edge: Edge) -> Result<Vec<u32>> {
    if !d.is_planar() {
        return Err(Error::NotPlanar);
    }
    let chords = rotated_chords(d, edge);
    let total = (d.n() + d.m()) as usize;
    let mut owner = vec![usize::MAX; total];
    for (k, &(x, y)) in chords.iter().enumerate() {
        owner[x] = k;
        owner[y] = k;
    }
    let mut levels = vec![u32::MAX; chords.len()];
    let mut alive: Vec<usize> = (0..total).collect();
    let mut level = 0;
    while !alive.is_empty() {
        let index_of = |pos: usize, alive: &[usize]| alive.binary_search(&pos).expect("alive");
        let mut i = 0;
        let mut hit = Vec::new();
        while i < alive.len() {
            let k = owner[alive[i]];
            hit.push(k);
            let (x, y) = chords[k];
            let other = if alive[i] == x { y } else { x };
            i = index_of(other, &alive) + 1;
        }
        for &k in &hit {
            levels[k] = level;
        }
        alive.retain(|&p| levels[owner[p]] == u32::MAX);
        level += 1;
    }
    Ok(levels)
}

pub fn exposure_levels(d: &Diagram) -> Result<Vec<u32>> {
    exposure_levels_from(d, Edge::West)
}

/// Independent check: count the lines that enclose a line on the side away
/// from the edge, in the linear boundary order starting at that edge.
pub fn exposure_levels_oracle(d: &Diagram, edge: Edge) -> Result<Vec<u32>> {
    if !d.is_planar() {
        return Err(Error::NotPlanar);
    }
    let chords = rotated_chords(d, edge);
    Ok(chords
        .iter()
        .map(|&(x, y)| chords.iter().filter(|&&(a, b)| a < x && y < b).count() as u32)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::VertexId;

    #[test]
    fn identity_nesting() {
        let d = Diagram::identity(3);
        assert_eq!(exposure_levels(&d).unwrap(), vec![0, 1, 2]);
        assert_eq!(exposure_levels_from(&d, Edge::East).unwrap(), vec![2, 1, 0]);
    }

    #[test]
    fn cup_cap_both_exposed() {
        let d = Diagram::tl_generator(2, 1).unwrap();
        assert_eq!(exposure_levels(&d).unwrap(), vec![0, 0]);
    }

    #[test]
    fn nonplanar_rejected() {
        let t = Diagram::plain(
            2,
            2,
            [(VertexId::north(1), VertexId::south(2)), (VertexId::north(2), VertexId::south(1))],
        )
        .unwrap();
        assert_eq!(exposure_levels(&t), Err(Error::NotPlanar));
    }
}

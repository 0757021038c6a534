//! Bead words and loop classes.

/// A word of beads read along a line. Letters are single characters; the
/// symplectic algebras use `L` and `R`, the blob algebra a single `L`.
pub type BeadWord = String;

pub fn reversed(w: &str) -> BeadWord {
    w.chars().rev().collect()
}

/// Canonical representative of a loop class: the lexicographically least
/// rotation of the word or of its reverse.
pub fn loop_class(w: &str) -> BeadWord {
    let fwd: Vec<char> = w.chars().collect();
    let rev: Vec<char> = fwd.iter().rev().copied().collect();
    let n = fwd.len();
    let mut best: Option<Vec<char>> = None;
    for base in [&fwd, &rev] {
        for k in 0..n.max(1) {
            let cand: Vec<char> = (0..n).map(|i| base[(i + k) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default().into_iter().collect()
}

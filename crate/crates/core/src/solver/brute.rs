//! Brute-force oracles. These enumerate set partitions of the elements and
//! call the verifiers; they share nothing with the backtracking engine.

use crate::colorings::{verify_facial_worm, VertexColoring};
use crate::planegraph::PlaneGraph;

use super::{Problem, SolveError};

/// Largest element count the oracles accept.
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// Restricted growth strings of length `n` with at most `max_blocks`
/// blocks, i.e. set partitions of `0..n`, in lexicographic order. Values
/// are 1-based so each string is directly a coloring.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    current: Vec<u32>,
    /// prefix_max[i] = max(current[..i]).
    prefix_max: Vec<u32>,
    max_blocks: u32,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize, max_blocks: usize) -> Self {
        RestrictedGrowth {
            current: vec![1; n],
            prefix_max: vec![1; n + 1],
            max_blocks: max_blocks as u32,
            started: false,
            done: n == 0 || max_blocks == 0,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let n = self.current.len();
        // Rightmost position that can still grow (position 0 is fixed at 1).
        let mut i = n;
        while i > 1 {
            i -= 1;
            let limit = (self.prefix_max[i] + 1).min(self.max_blocks);
            if self.current[i] < limit {
                self.current[i] += 1;
                for j in i + 1..n {
                    self.current[j] = 1;
                }
                for j in i..n {
                    self.prefix_max[j + 1] = self.prefix_max[j].max(self.current[j]);
                }
                return Some(self.current.clone());
            }
        }
        self.done = true;
        None
    }
}

fn blocks(rgs: &[u32]) -> usize {
    rgs.iter().copied().max().unwrap_or(0) as usize
}

/// Exact minimum color count for `fp-edge` or `fp-vertex` by enumerating
/// every partition of the elements into color classes.
pub fn brute_force_min(problem: Problem, g: &PlaneGraph) -> Result<Option<usize>, SolveError> {
    if matches!(problem, Problem::Worm { .. }) {
        return Err(SolveError::InvalidConfig("brute_force_min covers fp-edge and fp-vertex".into()));
    }
    let n = problem.element_count(g);
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge { elements: n, limit: BRUTE_FORCE_LIMIT });
    }
    for t in 1..=n {
        for rgs in RestrictedGrowth::new(n, t) {
            if blocks(&rgs) == t && problem.verify(g, &rgs)?.is_empty() {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// Smallest number of colors for a path with `len` edges such that
/// consecutive edges differ and every color is used an odd number of times.
pub fn brute_force_path_min(len: usize) -> Result<usize, SolveError> {
    if len > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge { elements: len, limit: BRUTE_FORCE_LIMIT });
    }
    if len == 0 {
        return Err(SolveError::InvalidConfig("path needs at least one edge".into()));
    }
    for t in 1..=len {
        let found = RestrictedGrowth::new(len, t).any(|rgs| {
            let proper = rgs.windows(2).all(|w| w[0] != w[1]);
            let odd = (1..=t as u32).all(|c| rgs.iter().filter(|&&x| x == c).count() % 2 == 1);
            proper && odd
        });
        if found {
            return Ok(t);
        }
    }
    unreachable!("all-distinct coloring is always valid")
}

/// First facial WORM coloring in partition order, if any.
pub fn brute_force_worm(g: &PlaneGraph, rainbow: usize, mono: usize) -> Result<Option<Vec<u32>>, SolveError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge { elements: n, limit: BRUTE_FORCE_LIMIT });
    }
    for rgs in RestrictedGrowth::new(n, n) {
        if verify_facial_worm(g, &VertexColoring(rgs.clone()), rainbow, mono)?.is_empty() {
            return Ok(Some(rgs));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, theta, ThetaSpec};

    const BELL: [usize; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];

    #[test]
    fn enumerates_bell_many_partitions() {
        for (n, &bell) in BELL.iter().enumerate().skip(1) {
            assert_eq!(RestrictedGrowth::new(n, n).count(), bell, "n = {n}");
        }
        // Stirling numbers of the second kind summed up to two blocks: 2^(n-1).
        assert_eq!(RestrictedGrowth::new(6, 2).count(), 32);
        assert_eq!(RestrictedGrowth::new(4, 1).collect::<Vec<_>>(), vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn partitions_are_distinct_and_lexicographic() {
        let all: Vec<_> = RestrictedGrowth::new(5, 5).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_min(Problem::FpEdge, &cycle(4).unwrap()).unwrap(), Some(4));
        assert_eq!(brute_force_min(Problem::FpEdge, &cycle(3).unwrap()).unwrap(), Some(3));
        assert_eq!(brute_force_min(Problem::FpEdge, &theta(ThetaSpec::new(2, 2, 2)).unwrap()).unwrap(), Some(6));
        assert_eq!(brute_force_min(Problem::FpVertex, &cycle(3).unwrap()).unwrap(), Some(3));
        assert!(matches!(
            brute_force_min(Problem::FpEdge, &cycle(15).unwrap()),
            Err(SolveError::TooLarge { elements: 15, .. })
        ));
    }

    #[test]
    fn path_oracle() {
        let got: Vec<_> = (1..=8).map(|l| brute_force_path_min(l).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3, 4, 3, 2, 3, 4]);
    }
}

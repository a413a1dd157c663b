use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::Rat;
use crate::semigroup::GradedMonomial;

/// The common zero set of the invariant generators, as an irredundant union
/// of coordinate subspaces. Each component lists the variables that vanish
/// on it; an empty component is the whole space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnstableLocus {
    nvars: usize,
    components: Vec<Vec<usize>>,
}

impl UnstableLocus {
    pub fn new(nvars: usize, mut components: Vec<Vec<usize>>) -> Self {
        for c in &mut components {
            c.sort_unstable();
            c.dedup();
        }
        components.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        components.dedup();
        Self { nvars, components }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Dimension of the largest component; `None` when the locus is empty.
    pub fn dimension(&self) -> Option<usize> {
        self.components.iter().map(|c| self.nvars - c.len()).max()
    }

    pub fn contains(&self, point: &[Rat]) -> bool {
        self.components.iter().any(|c| c.iter().all(|&i| point[i].is_zero()))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> UnstableDisplay<'a> {
        UnstableDisplay { locus: self, names }
    }
}

pub struct UnstableDisplay<'a> {
    locus: &'a UnstableLocus,
    names: &'a [String],
}

impl fmt::Display for UnstableDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.locus.components.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self
            .locus
            .components
            .iter()
            .map(|c| {
                if c.is_empty() {
                    format!("C^{}", self.locus.nvars)
                } else {
                    let vars: Vec<&str> = c.iter().map(|&i| self.names[i].as_str()).collect();
                    format!("{{{}=0}}", vars.join("="))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

/// `⋂_j {Z^{m_j} = 0}` for polynomial generators. The monomial `Z^m`
/// vanishes exactly where some variable of its support does, so the
/// components are the minimal transversals of the generator supports.
pub fn unstable_locus(nvars: usize, gens: &[GradedMonomial]) -> Result<UnstableLocus> {
    if gens.iter().any(|g| g.exponents.iter().any(Signed::is_negative)) {
        return Err(Error::LatticeModeUnsupported);
    }
    let supports: Vec<u64> = gens
        .iter()
        .map(|g| {
            g.exponents
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    assert!(nvars < 64, "unstable locus supports at most 63 variables");
    let mut minimal: Vec<u64> = Vec::new();
    for size in 0..=nvars {
        for subset in subsets_of_size(nvars, size) {
            if minimal.iter().any(|&m| m & subset == m) {
                continue;
            }
            if supports.iter().all(|&s| s & subset != 0) {
                minimal.push(subset);
            }
        }
    }
    let components = minimal
        .into_iter()
        .map(|mask| (0..nvars).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    Ok(UnstableLocus::new(nvars, components))
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..(1u64 << n)).filter(move |m| m.count_ones() as usize == k)
}

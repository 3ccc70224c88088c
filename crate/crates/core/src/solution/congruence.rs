use std::ops::ControlFlow;

use serde::Serialize;

use super::{Solution, SolutionHom};
use crate::error::{Error, Result};
use crate::perm::BlockSystem;

/// Largest solution size for which congruences are enumerated.
pub const MAX_CONGRUENCE_SIZE: usize = 12;

/// A partition of `X` compatible with the solution: `x∼x′` and `y∼y′`
/// imply `σ_x(y) ∼ σ_{x′}(y′)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Congruence {
    blocks: BlockSystem,
}

impl Congruence {
    pub fn new(solution: &Solution, blocks: BlockSystem) -> Result<Self> {
        if blocks.degree() != solution.size() || !is_congruence(solution, blocks.labels()) {
            return Err(Error::NotCongruence);
        }
        Ok(Congruence { blocks })
    }

    pub fn discrete(n: usize) -> Self {
        Congruence { blocks: BlockSystem::singletons(n) }
    }

    pub fn total(n: usize) -> Self {
        Congruence { blocks: BlockSystem::from_labels(&vec![0; n]) }
    }

    pub fn blocks(&self) -> &BlockSystem {
        &self.blocks
    }

    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.blocks.degree()
    }

    pub fn is_total(&self) -> bool {
        self.blocks.len() <= 1
    }
}

/// Checks compatibility of a labelling with every `σ`.
///
/// By transitivity it suffices to compare each point with the first point of
/// its class, once in the acting and once in the acted-on position.
fn is_congruence(s: &Solution, labels: &[usize]) -> bool {
    let n = s.size();
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        if rep[labels[x]] == usize::MAX {
            rep[labels[x]] = x;
        }
    }
    (0..n).all(|u| {
        let r = rep[labels[u]];
        r == u
            || (0..n).all(|z| {
                labels[s.sigma(u).apply(z)] == labels[s.sigma(r).apply(z)]
                    && labels[s.sigma(z).apply(u)] == labels[s.sigma(z).apply(r)]
            })
    })
}

/// Walks all congruences as restricted-growth label strings in lexicographic
/// order, pruning a prefix as soon as two assigned points violate the
/// compatibility condition.
fn for_each_congruence<B>(s: &Solution, mut visit: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
    let n = s.size();
    if n == 0 {
        return None;
    }
    let mut labels = vec![0usize; n];
    let mut reps: Vec<usize> = vec![0];

    fn consistent(s: &Solution, labels: &[usize], reps: &[usize], k: usize) -> bool {
        let n = s.size();
        let same = |a: usize, b: usize| a > k || b > k || labels[a] == labels[b];
        (0..=k).all(|u| {
            let r = reps[labels[u]];
            r == u
                || (0..n).all(|z| {
                    same(s.sigma(u).apply(z), s.sigma(r).apply(z))
                        && same(s.sigma(z).apply(u), s.sigma(z).apply(r))
                })
        })
    }

    fn go<B>(
        s: &Solution,
        k: usize,
        labels: &mut Vec<usize>,
        reps: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        if k == labels.len() {
            return match visit(labels) {
                ControlFlow::Break(b) => Some(b),
                ControlFlow::Continue(()) => None,
            };
        }
        for c in 0..=reps.len() {
            labels[k] = c;
            let fresh = c == reps.len();
            if fresh {
                reps.push(k);
            }
            if consistent(s, labels, reps, k) {
                if let Some(b) = go(s, k + 1, labels, reps, visit) {
                    return Some(b);
                }
            }
            if fresh {
                reps.pop();
            }
        }
        None
    }

    go(s, 1, &mut labels, &mut reps, &mut visit)
}

impl Solution {
    fn check_congruence_size(&self) -> Result<()> {
        if self.size() > MAX_CONGRUENCE_SIZE {
            return Err(Error::TooLarge { what: "congruence search", size: self.size(), limit: MAX_CONGRUENCE_SIZE });
        }
        Ok(())
    }

    /// All congruences, in lexicographic order of their restricted-growth
    /// labellings. Fails if more than `cap` are found.
    pub fn congruences(&self, cap: usize) -> Result<Vec<Congruence>> {
        self.check_congruence_size()?;
        let mut out = Vec::new();
        let overflow = for_each_congruence(self, |labels| {
            if out.len() >= cap {
                return ControlFlow::Break(());
            }
            let blocks = BlockSystem::from_labels(labels);
            debug_assert!(self.sigmas().iter().all(|g| blocks.is_preserved_by(g)));
            out.push(Congruence { blocks });
            ControlFlow::Continue(())
        });
        if overflow.is_some() {
            return Err(Error::TooLarge { what: "congruence count", size: cap + 1, limit: cap });
        }
        Ok(out)
    }

    pub fn quotient(&self, c: &Congruence) -> Result<(Solution, SolutionHom)> {
        if c.blocks.degree() != self.size() {
            return Err(Error::NotCongruence);
        }
        let class = c.blocks.labels().to_vec();
        let reps: Vec<usize> = c.blocks.blocks().iter().map(|b| b[0]).collect();
        Ok((self.quotient_by_labels(&class, &reps), SolutionHom { map: class }))
    }

    /// `|X| > 1` and the only congruences are the discrete and total ones.
    /// A proper retract answers without the size limit of the congruence
    /// search.
    pub fn is_simple(&self) -> Result<bool> {
        let n = self.size();
        if n <= 1 {
            return Ok(false);
        }
        let ret = self.retract().0.size();
        if ret > 1 && ret < n {
            return Ok(false);
        }
        self.check_congruence_size()?;
        let proper = for_each_congruence(self, |labels| {
            let classes = labels.iter().max().map_or(0, |m| m + 1);
            if classes > 1 && classes < n {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        Ok(proper.is_none())
    }
}

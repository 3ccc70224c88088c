//! Finite involutive non-degenerate set-theoretic solutions.
//!
//! A solution on `X = {0, …, n-1}` is stored as its table of left actions
//! `σ_x`; the map is `r(x, y) = (σ_x(y), γ_y(x))` with
//! `γ_y(x) = σ⁻¹_{σ_x(y)}(x)`.

mod congruence;
pub mod enumerate;
pub mod io;
mod iso;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{BlockSystem, PermGroup, Permutation};

pub use congruence::{Congruence, MAX_CONGRUENCE_SIZE};

/// A violated solution axiom, with the offending points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    Shape { detail: String },
    NonBijectiveGamma { y: usize },
    YbeFail { x: usize, y: usize },
    InvolutivityFail { x: usize, y: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every solution axiom on a raw table of left actions.
pub fn validate_table(sigma: &[Permutation]) -> ValidationReport {
    let n = sigma.len();
    let mut violations = Vec::new();
    if let Some((x, p)) = sigma.iter().enumerate().find(|(_, p)| p.degree() != n) {
        violations.push(Violation::Shape {
            detail: format!("σ_{x} has degree {} but the table has {n} rows", p.degree()),
        });
        return ValidationReport { violations };
    }
    let inv: Vec<Permutation> = sigma.iter().map(Permutation::inverse).collect();
    let gamma = |y: usize, x: usize| inv[sigma[x].apply(y)].apply(x);

    for y in 0..n {
        let mut hit = vec![false; n];
        for x in 0..n {
            hit[gamma(y, x)] = true;
        }
        if hit.iter().any(|h| !h) {
            violations.push(Violation::NonBijectiveGamma { y });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = sigma[x].mul(&sigma[inv[x].apply(y)]);
            let rhs = sigma[y].mul(&sigma[inv[y].apply(x)]);
            if lhs != rhs {
                violations.push(Violation::YbeFail { x, y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (u, v) = (sigma[x].apply(y), gamma(y, x));
            if (sigma[u].apply(v), gamma(v, u)) != (x, y) {
                violations.push(Violation::InvolutivityFail { x, y });
            }
        }
    }
    ValidationReport { violations }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Solution {
    sigma: Vec<Permutation>,
    sigma_inv: Vec<Permutation>,
}

/// A map of points satisfying `f(σ_x(y)) = σ'_{f(x)}(f(y))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionHom {
    pub map: Vec<usize>,
}

impl SolutionHom {
    pub fn is_homomorphism(&self, source: &Solution, target: &Solution) -> bool {
        self.map.len() == source.size()
            && self.map.iter().all(|&y| y < target.size())
            && (0..source.size()).all(|x| {
                (0..source.size()).all(|y| {
                    self.map[source.sigma(x).apply(y)] == target.sigma(self.map[x]).apply(self.map[y])
                })
            })
    }

    pub fn is_surjective(&self, target_size: usize) -> bool {
        let mut hit = vec![false; target_size];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// The partition of the source into fibres.
    pub fn kernel(&self) -> BlockSystem {
        BlockSystem::from_labels(&self.map)
    }
}

impl Solution {
    /// Builds a solution, rejecting tables that violate any axiom.
    pub fn new(sigma: Vec<Permutation>) -> Result<Self> {
        let report = validate_table(&sigma);
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidSolution(format!(
                "{} violation(s), first: {v:?}",
                report.violations.len()
            )));
        }
        Ok(Self::new_unchecked(sigma))
    }

    pub(crate) fn new_unchecked(sigma: Vec<Permutation>) -> Self {
        let sigma_inv = sigma.iter().map(Permutation::inverse).collect();
        Solution { sigma, sigma_inv }
    }

    /// All `σ_x` equal to the identity.
    pub fn trivial(n: usize) -> Self {
        Self::new_unchecked(vec![Permutation::identity(n); n])
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, x: usize) -> &Permutation {
        &self.sigma[x]
    }

    pub fn sigma_inv(&self, x: usize) -> &Permutation {
        &self.sigma_inv[x]
    }

    pub fn sigmas(&self) -> &[Permutation] {
        &self.sigma
    }

    pub fn validate(&self) -> ValidationReport {
        validate_table(&self.sigma)
    }

    pub fn gamma(&self, y: usize) -> Permutation {
        let images = (0..self.size()).map(|x| self.sigma_inv[self.sigma[x].apply(y)].apply(x)).collect();
        Permutation::from_images(images).expect("γ is bijective for a valid solution")
    }

    pub fn r(&self, x: usize, y: usize) -> (usize, usize) {
        let u = self.sigma[x].apply(y);
        (u, self.sigma_inv[u].apply(x))
    }

    /// The permutation group generated by all `σ_x`.
    pub fn perm_group(&self, cap: usize) -> Result<PermGroup> {
        PermGroup::close(self.size(), &self.sigma, cap)
    }

    /// Orbits of the permutation group, computed from the generators alone.
    pub fn orbits(&self) -> BlockSystem {
        let n = self.size();
        let mut label = vec![usize::MAX; n];
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = start;
            let mut stack = vec![start];
            while let Some(y) = stack.pop() {
                for s in &self.sigma {
                    let z = s.apply(y);
                    if label[z] == usize::MAX {
                        label[z] = start;
                        stack.push(z);
                    }
                }
            }
        }
        BlockSystem::from_labels(&label)
    }

    pub fn is_indecomposable(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// The retract `Ret(X, r)` and the projection onto it.
    pub fn retract(&self) -> (Solution, SolutionHom) {
        let mut reps: Vec<usize> = Vec::new();
        let mut class = vec![0usize; self.size()];
        for x in 0..self.size() {
            class[x] = match reps.iter().position(|&r| self.sigma[r] == self.sigma[x]) {
                Some(i) => i,
                None => {
                    reps.push(x);
                    reps.len() - 1
                }
            };
        }
        let quotient = self.quotient_by_labels(&class, &reps);
        (quotient, SolutionHom { map: class })
    }

    /// `σ_[x]([y]) = [σ_x(y)]` on classes given by labels `0..reps.len()`.
    fn quotient_by_labels(&self, class: &[usize], reps: &[usize]) -> Solution {
        let sigma = reps
            .iter()
            .map(|&x| {
                let images = reps.iter().map(|&y| class[self.sigma[x].apply(y)] as u32).collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        Solution::new_unchecked(sigma)
    }

    pub fn is_retractable(&self) -> bool {
        (1..self.size()).any(|x| (0..x).any(|y| self.sigma[x] == self.sigma[y]))
    }

    /// Sizes `|X|, |Ret(X)|, |Ret²(X)|, …` until the size stops changing.
    pub fn retract_tower(&self) -> Vec<Solution> {
        let mut tower = vec![self.clone()];
        loop {
            let last = tower.last().expect("non-empty");
            let (next, _) = last.retract();
            if next.size() == last.size() {
                return tower;
            }
            tower.push(next);
        }
    }

    /// Multipermutation level: least `k` with `|Ret^k(X)| = 1`. A one-point
    /// solution has level 0.
    pub fn mp_level(&self) -> Option<usize> {
        let tower = self.retract_tower();
        (tower.last().expect("non-empty").size() == 1).then(|| tower.len() - 1)
    }
}

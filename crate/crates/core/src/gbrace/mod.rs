//! The left brace carried by the permutation group `𝒢(X, r)`.
//!
//! Elements of `𝒢` are handled as permutations; addition goes through the
//! structure group, whose additive group is free abelian on `X`. Every group
//! element gets a representative integer vector `rep(g)` with `λ(rep(g)) = g`,
//! and `g ⊕ h = λ(rep(g) + rep(h))`.

pub mod chain;
pub mod verify;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brace::{Brace, LeftBrace, MAX_TABLE_ORDER};
use crate::config::VerifyConfig;
use crate::error::{Error, Result};
use crate::perm::{p_part, ElementSet, Letter, PermGroup, Permutation};
use crate::report::Check;
use crate::solution::Solution;

pub use chain::{squarefree_chain, IdealChain};

/// A finitely supported integer vector over `X`, stored densely.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GVector(pub Vec<i64>);

impl GVector {
    pub fn zero(n: usize) -> Self {
        GVector(vec![0; n])
    }

    pub fn basis(n: usize, x: usize) -> Self {
        let mut v = vec![0; n];
        v[x] = 1;
        GVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn l1_norm(&self) -> u64 {
        self.0.iter().map(|c| c.unsigned_abs()).sum()
    }

    pub fn plus(&self, other: &GVector) -> Result<GVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()
            .map(GVector)
    }

    pub fn negated(&self) -> GVector {
        GVector(self.0.iter().map(|c| -c).collect())
    }

    /// `g·a`, moving coordinate `y` to `g(y)`.
    pub fn permuted(&self, g: &Permutation) -> GVector {
        let mut out = vec![0; self.0.len()];
        for (y, &c) in self.0.iter().enumerate() {
            out[g.apply(y)] = c;
        }
        GVector(out)
    }
}

/// Which non-zero coordinate the reduction in [`Lambda::of_vector_with`]
/// consumes next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Smallest point with a positive coordinate, then smallest negative.
    Smallest,
    Largest,
    /// Negative coordinates before positive ones.
    NegativeFirst,
    /// Points scanned in a seeded random order.
    Shuffled(u64),
}

/// The λ-map from integer vectors over `X` to permutations of `X`.
#[derive(Clone, Debug)]
pub struct Lambda {
    sigma: Vec<Permutation>,
    sigma_inv: Vec<Permutation>,
    /// `diag_inv[z]` is the unique `x` with `σ_x⁻¹(x) = z`
    diag_inv: Vec<usize>,
}

impl Lambda {
    pub fn new(s: &Solution) -> Result<Self> {
        let n = s.size();
        let mut diag_inv = vec![usize::MAX; n];
        for x in 0..n {
            let z = s.sigma_inv(x).apply(x);
            if diag_inv[z] != usize::MAX {
                return Err(Error::InvalidSolution(format!(
                    "x ↦ σ_x⁻¹(x) is not injective: points {} and {x} both map to {z}",
                    diag_inv[z]
                )));
            }
            diag_inv[z] = x;
        }
        Ok(Lambda { sigma: s.sigmas().to_vec(), sigma_inv: (0..n).map(|x| s.sigma_inv(x).clone()).collect(), diag_inv })
    }

    pub fn size(&self) -> usize {
        self.sigma.len()
    }

    pub fn diagonal_inverse(&self, z: usize) -> usize {
        self.diag_inv[z]
    }

    /// `vec(σ_x∘w) = e_x + σ_x·vec(w)` and
    /// `vec(σ_x⁻¹∘w) = −e_{σ_x⁻¹(x)} + σ_x⁻¹·vec(w)`.
    pub fn word_to_vector(&self, word: &[Letter]) -> GVector {
        let n = self.size();
        let mut acc = Permutation::identity(n);
        let mut v = vec![0i64; n];
        for l in word {
            let x = l.generator;
            if l.inverse {
                v[acc.apply(self.sigma_inv[x].apply(x))] -= 1;
                acc = acc.mul(&self.sigma_inv[x]);
            } else {
                v[acc.apply(x)] += 1;
                acc = acc.mul(&self.sigma[x]);
            }
        }
        GVector(v)
    }

    pub fn of_vector(&self, a: &[i64]) -> Permutation {
        self.of_vector_with(a, PivotRule::Smallest)
    }

    /// Reduces `a` one unit at a time: a positive coordinate `x` contributes
    /// `σ_x ∘ λ(σ_x⁻¹·(a − e_x))`, a negative coordinate `z` contributes
    /// `σ_x⁻¹ ∘ λ(σ_x·(a + e_z))` with `σ_x⁻¹(x) = z`.
    pub fn of_vector_with(&self, a: &[i64], rule: PivotRule) -> Permutation {
        let n = self.size();
        let order: Vec<usize> = match rule {
            PivotRule::Smallest | PivotRule::NegativeFirst => (0..n).collect(),
            PivotRule::Largest => (0..n).rev().collect(),
            PivotRule::Shuffled(seed) => {
                let mut o: Vec<usize> = (0..n).collect();
                o.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                o
            }
        };
        let negative_first = rule == PivotRule::NegativeFirst;
        // the current vector is acc⁻¹·w, so its coordinate x is w[acc(x)]
        let mut w = a.to_vec();
        let mut acc = Permutation::identity(n);
        let mut scratch = Vec::with_capacity(n);
        loop {
            let pos = order.iter().copied().find(|&x| w[acc.apply(x)] > 0);
            let neg = order.iter().copied().find(|&z| w[acc.apply(z)] < 0);
            let step = if negative_first { neg.map(Err).or(pos.map(Ok)) } else { pos.map(Ok).or(neg.map(Err)) };
            match step {
                Some(Ok(x)) => {
                    w[acc.apply(x)] -= 1;
                    acc.mul_assign_right(&self.sigma[x], &mut scratch);
                }
                Some(Err(z)) => {
                    let x = self.diag_inv[z];
                    w[acc.apply(z)] += 1;
                    acc.mul_assign_right(&self.sigma_inv[x], &mut scratch);
                }
                None => return acc,
            }
        }
    }
}

/// `𝒢(X, r)` with its brace structure.
#[derive(Clone, Debug)]
pub struct GBrace {
    base: Solution,
    group: PermGroup,
    lambda: Lambda,
    reps: Vec<i64>,
    generator: Vec<usize>,
    /// retract class of each point, for the socle criterion
    sigma_class: Vec<usize>,
}

impl GBrace {
    /// Enumerates `𝒢`, assigns representatives along the search tree and
    /// checks `λ(rep(g)) = g` for every element.
    pub fn build(s: &Solution, cfg: &VerifyConfig) -> Result<GBrace> {
        let n = s.size();
        let lambda = Lambda::new(s)?;
        let group = s.perm_group(cfg.group_cap)?;
        let mut reps = vec![0i64; group.order() * n];
        for &g in group.bfs_order() {
            let g = g as usize;
            let Some((parent, letter)) = group.tree_parent(g) else { continue };
            let (head, tail) = reps.split_at_mut(g.max(parent) * n);
            let (dst, src) = if g > parent {
                (&mut tail[..n], &head[parent * n..parent * n + n])
            } else {
                (&mut head[g * n..g * n + n], &tail[..n])
            };
            dst.copy_from_slice(src);
            // g = parent ∘ letter, so rep(g) = rep(parent) + parent·vec(letter)
            let pg = group.element(parent);
            let x = letter.generator;
            if letter.inverse {
                dst[pg.apply(s.sigma_inv(x).apply(x))] -= 1;
            } else {
                dst[pg.apply(x)] += 1;
            }
        }
        let generator = (0..n).map(|x| group.index_of(s.sigma(x)).expect("generator in group")).collect();
        let (ret, proj) = s.retract();
        debug_assert!(ret.size() <= n);
        let gb = GBrace { base: s.clone(), group, lambda, reps, generator, sigma_class: proj.map };
        for g in 0..gb.order() {
            if gb.lambda.of_vector(gb.rep(g)) != *gb.group.element(g) {
                return Err(Error::Internal(format!("representative of element {g} does not evaluate back")));
            }
        }
        Ok(gb)
    }

    pub fn base(&self) -> &Solution {
        &self.base
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn lambda_map(&self) -> &Lambda {
        &self.lambda
    }

    pub fn degree(&self) -> usize {
        self.base.size()
    }

    pub fn rep(&self, g: usize) -> &[i64] {
        let n = self.degree();
        &self.reps[g * n..(g + 1) * n]
    }

    pub fn rep_vector(&self, g: usize) -> GVector {
        GVector(self.rep(g).to_vec())
    }

    /// Element index of `σ_x`.
    pub fn generator(&self, x: usize) -> usize {
        self.generator[x]
    }

    pub fn factor_word(&self, g: usize) -> Vec<Letter> {
        self.group.factor_word(g)
    }

    /// Element index of `λ(a)`.
    pub fn element_of_vector(&self, a: &[i64]) -> usize {
        self.group.index_of(&self.lambda.of_vector(a)).expect("λ lands in 𝒢")
    }

    fn sum_index(&self, a: &[i64], b: &[i64]) -> usize {
        let v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.element_of_vector(&v)
    }

    /// `λ_g(h) = λ(g·rep(h))`.
    pub fn lambda_g(&self, g: usize, h: usize) -> usize {
        let pg = self.group.element(g);
        let mut v = vec![0i64; self.degree()];
        for (y, &c) in self.rep(h).iter().enumerate() {
            v[pg.apply(y)] = c;
        }
        self.element_of_vector(&v)
    }

    /// `k·g` in `(𝒢, ⊕)`, by doubling.
    pub fn additive_multiple(&self, g: usize, mut k: u64) -> usize {
        let mut acc = self.group.identity();
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(base, base);
            }
        }
        acc
    }

    /// `{g : σ_{g(x)} = σ_x for all x}`.
    pub fn socle_g(&self) -> ElementSet {
        let n = self.degree();
        ElementSet::from_indices((0..self.order()).filter(|&g| {
            let pg = self.group.element(g);
            (0..n).all(|x| self.sigma_class[pg.apply(x)] == self.sigma_class[x])
        }))
    }

    /// Additive span of a set of elements.
    pub fn additive_span(&self, gens: &[usize]) -> ElementSet {
        let mut mask = vec![false; self.order()];
        let zero = self.group.identity();
        mask[zero] = true;
        let mut members = vec![zero];
        let mut head = 0;
        while head < members.len() {
            let a = members[head];
            head += 1;
            for &c in gens {
                let s = self.add(a, c);
                if !mask[s] {
                    mask[s] = true;
                    members.push(s);
                }
            }
        }
        ElementSet::from_mask(&mask)
    }

    /// The `π`-components of the generators `σ_x`, which span the Hall
    /// `π`-subgroup of `(𝒢, ⊕)`.
    pub fn hall_generators(&self, primes: &[u64]) -> Vec<usize> {
        let order = self.order() as u64;
        let pi_part: u64 = primes.iter().map(|&p| p_part(order, p)).product();
        let rest = order / pi_part;
        // m ≡ 1 mod pi_part, m ≡ 0 mod rest
        let m = if pi_part == 1 { 0 } else { rest * mod_inverse(rest % pi_part, pi_part) % order };
        let mut gens: Vec<usize> = (0..self.degree()).map(|x| self.additive_multiple(self.generator[x], m)).collect();
        gens.sort_unstable();
        gens.dedup();
        gens.retain(|&g| g != self.group.identity());
        gens
    }

    pub fn hall_additive_g(&self, primes: &[u64]) -> ElementSet {
        self.additive_span(&self.hall_generators(primes))
    }

    pub fn sylow_additive_g(&self, p: u64) -> ElementSet {
        self.hall_additive_g(&[p])
    }

    /// The whole brace as dense tables.
    pub fn to_dense(&self) -> Result<Brace> {
        let m = self.order();
        if m > MAX_TABLE_ORDER {
            return Err(Error::TooLarge { what: "table brace", size: m, limit: MAX_TABLE_ORDER });
        }
        let mut add = vec![0u32; m * m];
        let mut mul = vec![0u32; m * m];
        for a in 0..m {
            for b in 0..m {
                add[a * m + b] = self.add(a, b) as u32;
                mul[a * m + b] = self.group.mul(a, b) as u32;
            }
        }
        Brace::from_tables(mul, add)
    }

    /// The quotient by an ideal as a dense table brace over the cosets
    /// `g∘I`, with the projection from element indices to cosets.
    pub fn quotient_dense(&self, ideal: &ElementSet, max_cosets: usize) -> Result<(Brace, Vec<usize>)> {
        let cosets = self.order() / ideal.len().max(1);
        if cosets > max_cosets.min(MAX_TABLE_ORDER) {
            return Err(Error::TooLarge { what: "quotient brace", size: cosets, limit: max_cosets.min(MAX_TABLE_ORDER) });
        }
        let mut label = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if label[g] == usize::MAX {
                for i in ideal.iter() {
                    label[self.group.mul(g, i)] = reps.len();
                }
                reps.push(g);
            }
        }
        if reps.len() * ideal.len() != self.order() {
            return Err(Error::Precondition("cosets of the subset do not partition the group".into()));
        }
        let k = reps.len();
        let mut add = vec![0u32; k * k];
        let mut mul = vec![0u32; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * k + j] = label[self.add(a, b)] as u32;
                mul[i * k + j] = label[self.group.mul(a, b)] as u32;
            }
        }
        Ok((Brace::from_tables(mul, add)?, label))
    }
}

impl LeftBrace for GBrace {
    fn order(&self) -> usize {
        self.group.order()
    }
    fn zero(&self) -> usize {
        self.group.identity()
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.sum_index(self.rep(a), self.rep(b))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.group.mul(a, b)
    }
    fn neg(&self, a: usize) -> usize {
        let v: Vec<i64> = self.rep(a).iter().map(|c| -c).collect();
        self.element_of_vector(&v)
    }
    fn inv(&self, a: usize) -> usize {
        self.group.inv(a)
    }
    fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda_g(a, b)
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid on signed values
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "not invertible");
    old_s.rem_euclid(m as i128) as u64
}

/// All integer vectors on `n` points with ℓ¹-norm at most `max_norm`.
pub fn small_vectors(n: usize, max_norm: u64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; n]];
    let mut frontier = out.clone();
    for _ in 0..max_norm {
        let mut next = Vec::new();
        for v in &frontier {
            // extend only at or after the last non-zero coordinate, so each
            // vector is produced once
            let start = v.iter().rposition(|&c| c != 0).unwrap_or(0);
            for x in start..n {
                for d in [1i64, -1] {
                    if v[x] != 0 && v[x].signum() != d {
                        continue;
                    }
                    let mut w = v.clone();
                    w[x] += d;
                    next.push(w);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

impl GBrace {
    /// The structural invariants of the brace: representative round trip,
    /// pivot independence, well-definedness of `⊕`, the brace axioms,
    /// `λ_g(σ_y) = σ_{g(y)}`, the sum formula for `λ`, and the socle
    /// criterion.
    pub fn check_invariants(&self, cfg: &VerifyConfig) -> Vec<Check> {
        let n = self.degree();
        let m = self.order();
        let mut checks = Vec::new();

        checks.push(Check::scanned(
            "representatives evaluate back",
            cfg.check_tuples(&[m], 0x01, |v| {
                (self.lambda.of_vector(self.rep(v[0])) != *self.group.element(v[0])).then(|| v.to_vec())
            }),
        ));
        checks.push(Check::scanned(
            "word round trip",
            cfg.check_tuples(&[m], 0x02, |v| {
                let w = self.factor_word(v[0]);
                (self.element_of_vector(self.lambda.word_to_vector(&w).coords()) != v[0]).then(|| v.to_vec())
            }),
        ));

        let rules = [PivotRule::Largest, PivotRule::NegativeFirst, PivotRule::Shuffled(cfg.seed)];
        let vectors = if n <= 6 { small_vectors(n, 4) } else { small_vectors(n, 2) };
        let pivot_fail = vectors.iter().position(|v| {
            let base = self.lambda.of_vector(v);
            rules.iter().any(|&r| self.lambda.of_vector_with(v, r) != base)
        });
        checks.push(Check::expect(
            "pivot-order independence",
            pivot_fail.is_none(),
            format!("{} vectors, {} alternative pivot rules", vectors.len(), rules.len()),
            pivot_fail.map(|i| vectors[i].iter().map(|&c| c as usize).collect()).unwrap_or_default(),
        ));

        // kernel vectors: vec(σ_x^k) with k the order of σ_x
        let kernel: Vec<Vec<i64>> = (0..n)
            .map(|x| {
                let k = self.base.sigma(x).order() as usize;
                let word = vec![Letter { generator: x, inverse: false }; k];
                self.lambda.word_to_vector(&word).0
            })
            .collect();
        checks.push(Check::scanned(
            "addition is well defined",
            cfg.check_tuples(&[m, n, m], 0x03, |v| {
                let (g, x, h) = (v[0], v[1], v[2]);
                let alt: Vec<i64> = self.rep(g).iter().zip(&kernel[x]).map(|(a, b)| a + b).collect();
                (self.element_of_vector(&alt) != g || self.sum_index(&alt, self.rep(h)) != self.add(g, h))
                    .then(|| v.to_vec())
            }),
        ));

        checks.push(Check::scanned(
            "addition is commutative",
            cfg.check_tuples(&[m, m], 0x04, |v| (self.add(v[0], v[1]) != self.add(v[1], v[0])).then(|| v.to_vec())),
        ));
        checks.push(Check::scanned(
            "brace axiom a∘(b+c)+a = a∘b+a∘c",
            cfg.check_tuples(&[m, m, m], 0x05, |v| {
                let (a, b, c) = (v[0], v[1], v[2]);
                let lhs = self.add(self.mul(a, self.add(b, c)), a);
                let rhs = self.add(self.mul(a, b), self.mul(a, c));
                (lhs != rhs).then(|| v.to_vec())
            }),
        ));
        checks.push(Check::scanned(
            "λ is multiplicative",
            cfg.check_tuples(&[m, m, m], 0x06, |v| {
                let (g, h, k) = (v[0], v[1], v[2]);
                (self.lambda_g(self.mul(g, h), k) != self.lambda_g(g, self.lambda_g(h, k))).then(|| v.to_vec())
            }),
        ));
        checks.push(Check::scanned(
            "g∘h = g ⊕ λ_g(h)",
            cfg.check_tuples(&[m, m], 0x07, |v| {
                let (g, h) = (v[0], v[1]);
                (self.mul(g, h) != self.add(g, self.lambda_g(g, h))).then(|| v.to_vec())
            }),
        ));
        checks.push(Check::scanned(
            "λ_g(σ_y) = σ_{g(y)}",
            cfg.check_tuples(&[m, n], 0x08, |v| {
                let (g, y) = (v[0], v[1]);
                let gy = self.group.element(g).apply(y);
                (self.lambda_g(g, self.generator[y]) != self.generator[gy]).then(|| v.to_vec())
            }),
        ));
        checks.push(Check::scanned(
            "λ of a sum of basis vectors is the ⊕-sum of generators",
            cfg.check_tuples(&[n + 1, n + 1, n + 1], 0x09, |v| {
                // index n stands for an absent summand
                let mut vec = vec![0i64; n];
                let mut sum = self.group.identity();
                for &x in v.iter().filter(|&&x| x < n) {
                    vec[x] += 1;
                    sum = self.add(sum, self.generator[x]);
                }
                (self.element_of_vector(&vec) != sum).then(|| v.to_vec())
            }),
        ));

        let socle = self.socle_g();
        let soc_mask = socle.mask(m);
        checks.push(Check::scanned(
            "socle: g∘b = g⊕b exactly on the socle",
            cfg.check_tuples(&[m, m], 0x0a, |v| {
                let (g, b) = (v[0], v[1]);
                let agree = self.mul(g, b) == self.add(g, b);
                (soc_mask[g] && !agree).then(|| v.to_vec())
            }),
        ));
        // outside the socle some σ_x is moved: that σ_x is a witness
        let missing = (0..m).find(|&g| {
            !soc_mask[g] && (0..n).all(|x| self.mul(g, self.generator[x]) == self.add(g, self.generator[x]))
        });
        checks.push(Check::expect(
            "socle: elements outside have a witness among the σ_x",
            missing.is_none(),
            format!("{} socle elements of {m}", socle.len()),
            missing.into_iter().collect(),
        ));
        checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Coverage;

    fn flip() -> Solution {
        let t = Permutation::from_images(vec![1, 0]).unwrap();
        Solution::new(vec![t.clone(), t]).unwrap()
    }

    fn mixed4() -> Solution {
        let id = Permutation::identity(4);
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        Solution::new(vec![id.clone(), id, t.clone(), t]).unwrap()
    }

    #[test]
    fn vectors_of_words() {
        let s = mixed4();
        let l = Lambda::new(&s).unwrap();
        assert_eq!(l.word_to_vector(&[]), GVector::zero(4));
        let x = Letter { generator: 2, inverse: false };
        assert_eq!(l.word_to_vector(&[x]), GVector::basis(4, 2));
        // σ_2 σ_0: e_2 + σ_2·e_0 = e_2 + e_1
        let y = Letter { generator: 0, inverse: false };
        assert_eq!(l.word_to_vector(&[x, y]).0, vec![0, 1, 1, 0]);
        assert_eq!(l.of_vector(&[0, 1, 1, 0]), s.sigma(2).mul(s.sigma(0)));
    }

    #[test]
    fn lambda_of_small_vectors() {
        let s = mixed4();
        let l = Lambda::new(&s).unwrap();
        assert!(l.of_vector(&[0; 4]).is_identity());
        for x in 0..4 {
            let mut e = vec![0; 4];
            e[x] = 1;
            assert_eq!(&l.of_vector(&e), s.sigma(x));
        }
        // e_x + e_y read both ways is the criterion
        for x in 0..4 {
            for y in 0..4 {
                let mut v = vec![0; 4];
                v[x] += 1;
                v[y] += 1;
                let one = s.sigma(x).mul(s.sigma(s.sigma_inv(x).apply(y)));
                let two = s.sigma(y).mul(s.sigma(s.sigma_inv(y).apply(x)));
                assert_eq!(l.of_vector(&v), one);
                assert_eq!(l.of_vector_with(&v, PivotRule::Largest), two);
            }
        }
    }

    #[test]
    fn small_vector_counts() {
        // ℓ¹-ball of radius 2 in Z²: 1 + 4 + 8
        assert_eq!(small_vectors(2, 2).len(), 13);
        let mut v = small_vectors(3, 3);
        let total = v.len();
        v.sort();
        v.dedup();
        assert_eq!(v.len(), total);
    }

    #[test]
    fn trivial_and_flip_braces() {
        let cfg = VerifyConfig::default();
        let t = GBrace::build(&Solution::trivial(3), &cfg).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.socle_g().len(), 1);
        let f = GBrace::build(&flip(), &cfg).unwrap();
        assert_eq!(f.order(), 2);
        let tau = f.generator(0);
        assert_eq!(f.add(tau, tau), f.zero());
        assert_eq!(f.add(tau, f.zero()), tau);
        assert_eq!(f.socle_g().len(), 2);
        let dense = f.to_dense().unwrap();
        assert_eq!(dense.add_table(), dense.mul_table());
    }

    #[test]
    fn invariants_hold_on_small_solutions() {
        let cfg = VerifyConfig::default();
        for s in [flip(), mixed4(), Solution::new(vec![Permutation::cycle(3); 3]).unwrap()] {
            let gb = GBrace::build(&s, &cfg).unwrap();
            for c in gb.check_invariants(&cfg) {
                assert!(c.passed, "{c:?}");
                assert!(c.coverage.is_none_or(|cov| matches!(cov, Coverage::Exhaustive(_))));
            }
            let socle = gb.socle_g();
            let dense = gb.to_dense().unwrap();
            assert_eq!(dense.socle(), socle);
        }
    }

    #[test]
    fn hall_parts() {
        let cfg = VerifyConfig::default();
        let gb = GBrace::build(&mixed4(), &cfg).unwrap();
        assert_eq!(gb.sylow_additive_g(2).len(), gb.order());
        assert_eq!(gb.sylow_additive_g(3).len(), 1);
        assert_eq!(mod_inverse(3, 7), 5);
    }
}

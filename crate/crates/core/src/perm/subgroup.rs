use std::collections::HashSet;

use serde::Serialize;

use super::{factorize, p_part, BlockSystem, PermGroup};
use crate::error::{Error, Result};

/// A set of elements of some [`PermGroup`], stored as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        ElementSet(v)
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = it.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        ElementSet(mask.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn mask(&self, universe: usize) -> Vec<bool> {
        let mut m = vec![false; universe];
        for &i in &self.0 {
            m[i] = true;
        }
        m
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.len() <= other.len() && self.0.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.iter().copied().filter(|&i| other.contains(i)).collect())
    }
}

impl PermGroup {
    /// Subgroup generated by the given elements.
    pub fn subgroup_generated(&self, gens: &[usize]) -> ElementSet {
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut members = vec![self.identity()];
        self.extend_closure(&mut mask, &mut members, gens);
        ElementSet::from_indices(members)
    }

    /// Closes `members` (which must contain the identity) under right
    /// multiplication by `gens`. Returns false as soon as an element outside
    /// `allowed` would be added.
    fn extend_closure_within(
        &self,
        mask: &mut [bool],
        members: &mut Vec<usize>,
        gens: &[usize],
        allowed: Option<&[bool]>,
    ) -> bool {
        let mut head = 0;
        while head < members.len() {
            let h = members[head];
            head += 1;
            for &g in gens {
                let k = self.mul(h, g);
                if !mask[k] {
                    if allowed.is_some_and(|a| !a[k]) {
                        return false;
                    }
                    mask[k] = true;
                    members.push(k);
                }
            }
        }
        true
    }

    fn extend_closure(&self, mask: &mut [bool], members: &mut Vec<usize>, gens: &[usize]) {
        self.extend_closure_within(mask, members, gens, None);
    }

    /// Exact subgroup test: grows the subgroup generated by a greedily chosen
    /// subset of `set` and fails as soon as it leaves `set`.
    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        if !set.contains(self.identity()) {
            return false;
        }
        let allowed = set.mask(self.order());
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut members = vec![self.identity()];
        let mut gens = Vec::new();
        for s in set.iter() {
            if mask[s] {
                continue;
            }
            gens.push(s);
            // re-close from scratch over the current members
            let mut work = members.clone();
            if !self.extend_closure_within(&mut mask, &mut work, &gens, Some(&allowed)) {
                return false;
            }
            members = work;
        }
        members.len() == set.len()
    }

    /// Whether a subgroup is normalised by every generator.
    pub fn is_normal(&self, set: &ElementSet) -> bool {
        let mask = set.mask(self.order());
        set.iter().all(|h| self.letters().all(|g| mask[self.conjugate(h, g)]))
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &ElementSet) -> ElementSet {
        let mut gens: Vec<usize> = set.iter().filter(|&s| s != self.identity()).collect();
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut members = vec![self.identity()];
        self.extend_closure(&mut mask, &mut members, &gens);
        let mut k = 0;
        while k < gens.len() {
            let h = gens[k];
            k += 1;
            for g in self.letters() {
                let c = self.conjugate(h, g);
                if !mask[c] {
                    gens.push(c);
                    self.extend_closure(&mut mask, &mut members, &gens);
                }
            }
        }
        ElementSet::from_indices(members)
    }

    pub fn conjugacy_class(&self, a: usize) -> ElementSet {
        let mut seen = HashSet::from([a]);
        let mut stack = vec![a];
        while let Some(h) = stack.pop() {
            for g in self.letters() {
                let c = self.conjugate(h, g);
                if seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        ElementSet::from_indices(seen)
    }

    pub fn is_elementary_abelian(&self, set: &ElementSet, p: u64) -> bool {
        let elems: Vec<_> = set.iter().collect();
        set.iter().all(|a| a == self.identity() || self.element_order(a) == p)
            && self.is_subgroup(set)
            && self.commute_pairwise(&elems)
    }

    /// A generating set of a subgroup, chosen greedily in index order.
    pub fn generating_set(&self, set: &ElementSet) -> Vec<usize> {
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut members = vec![self.identity()];
        let mut gens = Vec::new();
        for s in set.iter() {
            if !mask[s] {
                gens.push(s);
                self.extend_closure(&mut mask, &mut members, &gens);
            }
        }
        gens
    }

    /// Whether the elements of a subgroup commute, tested on a greedy
    /// generating set.
    pub fn is_abelian_subgroup(&self, set: &ElementSet) -> bool {
        self.commute_pairwise(set.as_slice())
    }

    fn commute_pairwise(&self, elems: &[usize]) -> bool {
        // a greedy generating set suffices
        let mut basis: Vec<usize> = Vec::new();
        let mut span = self.subgroup_generated(&[]);
        for &a in elems {
            if span.contains(a) {
                continue;
            }
            let pa = self.element(a);
            if !basis.iter().all(|&b| {
                let pb = self.element(b);
                pa.mul(pb) == pb.mul(pa)
            }) {
                return false;
            }
            basis.push(a);
            span = self.subgroup_generated(&basis);
        }
        true
    }

    /// Elementary abelian subgroup generated by commuting elements of prime
    /// order `p`, or `None` if two of them fail to commute.
    fn elementary_span(&self, elems: &[usize], p: u64) -> Option<ElementSet> {
        let mut mask = vec![false; self.order()];
        mask[self.identity()] = true;
        let mut span = vec![self.identity()];
        let mut basis: Vec<usize> = Vec::new();
        for &c in elems {
            if mask[c] {
                continue;
            }
            let pc = self.element(c);
            if !basis.iter().all(|&b| {
                let pb = self.element(b);
                pc.mul(pb) == pb.mul(pc)
            }) {
                return None;
            }
            basis.push(c);
            let old = span.clone();
            let mut power = c;
            for _ in 1..p {
                for &s in &old {
                    let k = self.mul(s, power);
                    if !mask[k] {
                        mask[k] = true;
                        span.push(k);
                    }
                }
                power = self.mul(power, c);
            }
        }
        Some(ElementSet::from_indices(span))
    }

    /// An inclusion-minimal nontrivial normal subgroup together with its prime.
    ///
    /// Assumes the group is solvable, so minimal normal subgroups are
    /// elementary abelian `p`-groups, each generated by one conjugacy class of
    /// elements of order `p`. Candidates are tried by increasing prime and then
    /// by lexicographically smallest class representative.
    pub fn minimal_normal_subgroup(&self) -> Result<(u64, ElementSet)> {
        if self.order() == 1 {
            return Err(Error::Precondition("trivial group has no nontrivial normal subgroup".into()));
        }
        let primes: Vec<u64> = factorize(self.order() as u64).into_iter().map(|(p, _)| p).collect();
        let orders: Vec<u64> = (0..self.order()).map(|a| self.element_order(a)).collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<ElementSet> = Vec::new();
        for a in 0..self.order() {
            if class_of[a] == usize::MAX && primes.contains(&orders[a]) {
                let cl = self.conjugacy_class(a);
                for c in cl.iter() {
                    class_of[c] = classes.len();
                }
                classes.push(cl);
            }
        }
        let mut candidates: Vec<usize> = (0..classes.len()).collect();
        // reps are the smallest element index of each class
        candidates.sort_by_key(|&c| (orders[classes[c].as_slice()[0]], classes[c].as_slice()[0]));
        let mut spans: Vec<Option<Option<ElementSet>>> = vec![None; classes.len()];
        let span_of = |c: usize, p: u64, spans: &mut Vec<Option<Option<ElementSet>>>| {
            spans[c]
                .get_or_insert_with(|| self.elementary_span(classes[c].as_slice(), p))
                .clone()
        };
        for c in candidates {
            let p = orders[classes[c].as_slice()[0]];
            let Some(n) = span_of(c, p, &mut spans) else { continue };
            let inner: Vec<usize> = n
                .iter()
                .filter(|&e| e != self.identity())
                .map(|e| class_of[e])
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            let minimal = inner.into_iter().all(|d| {
                span_of(d, p, &mut spans).is_some_and(|s| s.len() == n.len())
            });
            if minimal {
                return Ok((p, n));
            }
        }
        Err(Error::NoMinimalNormal)
    }

    /// Elements fixing every block of an invariant block system setwise.
    pub fn kernel_of_block_action(&self, blocks: &BlockSystem) -> Result<ElementSet> {
        if blocks.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: blocks.degree() });
        }
        if !self.letters().all(|g| blocks.is_preserved_by(g)) {
            return Err(Error::Precondition("block system is not invariant under the group".into()));
        }
        Ok(ElementSet::from_indices(
            (0..self.order()).filter(|&g| blocks.is_fixed_by(self.element(g))),
        ))
    }

    /// Orbits on points of an arbitrary set of elements.
    pub fn orbits_of(&self, set: &ElementSet) -> BlockSystem {
        let n = self.degree();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in set.iter() {
            let g = self.element(s);
            for x in 0..n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g.apply(x)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        BlockSystem::from_labels(&labels)
    }

    /// Orbits of a normal subgroup, which form a block system of the group.
    pub fn orbits_as_blocks(&self, normal: &ElementSet) -> Result<BlockSystem> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let blocks = self.orbits_of(normal);
        if self.is_transitive() && !blocks.has_equal_sizes() {
            return Err(Error::Internal("orbits of a normal subgroup of a transitive group differ in size".into()));
        }
        if !self.letters().all(|g| blocks.is_preserved_by(g)) {
            return Err(Error::Internal("orbits of a normal subgroup are not permuted".into()));
        }
        Ok(blocks)
    }

    /// The elements of `within` whose order is a power of `p`, provided they
    /// form a subgroup (necessarily the unique, hence normal, Sylow
    /// `p`-subgroup of `within`).
    pub fn p_elements_closed(&self, within: &ElementSet, p: u64) -> Option<ElementSet> {
        let target = p_part(within.len() as u64, p);
        let q = ElementSet::from_sorted(
            within.iter().filter(|&a| p_part(self.element_order(a), p) == self.element_order(a)).collect(),
        );
        if q.len() as u64 != target {
            return None;
        }
        self.is_subgroup(&q).then_some(q)
    }

    /// `{ a ∘ b : a ∈ A, b ∈ B }`.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut mask = vec![false; self.order()];
        for x in a.iter() {
            for y in b.iter() {
                mask[self.mul(x, y)] = true;
            }
        }
        ElementSet::from_mask(&mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn s3() -> PermGroup {
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        PermGroup::close(3, &[t, Permutation::cycle(3)], 100).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        PermGroup::close(n, &[Permutation::cycle(n)], 1000).unwrap()
    }

    /// Exhaustive oracle: close under all conjugations and products.
    fn brute_normal_closure(g: &PermGroup, seed: &[usize]) -> Vec<usize> {
        let mut set: Vec<usize> = vec![g.identity()];
        set.extend_from_slice(seed);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for x in 0..g.order() {
                    let c = g.mul(g.mul(x, a), g.inv(x));
                    if !next.contains(&c) {
                        next.push(c);
                    }
                }
                for &b in &set {
                    let c = g.mul(a, b);
                    if !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            if next.len() == set.len() {
                break;
            }
            set = next;
        }
        set.sort_unstable();
        set
    }

    #[test]
    fn normal_closure_matches_oracle() {
        let g = s3();
        let id = ElementSet::from_indices([g.identity()]);
        assert_eq!(g.normal_closure(&id), id);
        let t = g.index_of(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let oracle = brute_normal_closure(&g, &[t]);
        assert_eq!(oracle.len(), 6);
        assert_eq!(g.normal_closure(&ElementSet::from_indices([t])).as_slice(), &oracle[..]);
        let c = g.index_of(&Permutation::cycle(3)).unwrap();
        assert_eq!(g.normal_closure(&ElementSet::from_indices([c])).len(), 3);
        // abelian: closure is just the generated subgroup
        let z6 = cyclic(6);
        let two = z6.index_of(&Permutation::cycle(6).pow(2)).unwrap();
        let s = ElementSet::from_indices([two]);
        assert_eq!(z6.normal_closure(&s), z6.subgroup_generated(&[two]));
    }

    #[test]
    fn minimal_normal_subgroups() {
        let z5 = cyclic(5);
        let (p, n) = z5.minimal_normal_subgroup().unwrap();
        assert_eq!((p, n.len()), (5, 5));
        let z6 = cyclic(6);
        let (p, n) = z6.minimal_normal_subgroup().unwrap();
        assert_eq!((p, n.len()), (2, 2));
        let (p, n) = s3().minimal_normal_subgroup().unwrap();
        assert_eq!((p, n.len()), (3, 3));
        assert!(cyclic(1).minimal_normal_subgroup().is_err());
    }

    #[test]
    fn non_solvable_input_is_reported() {
        // A5 on 5 points: no elementary abelian normal subgroup
        let a = Permutation::cycle(5);
        let b = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        let a5 = PermGroup::close(5, &[a, b], 1000).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(matches!(a5.minimal_normal_subgroup(), Err(Error::NoMinimalNormal)));
    }

    #[test]
    fn p_elements() {
        let g = s3();
        assert!(g.p_elements_closed(&g.all(), 2).is_none());
        assert_eq!(g.p_elements_closed(&g.all(), 3).unwrap().len(), 3);
        let z6 = cyclic(6);
        assert_eq!(z6.p_elements_closed(&z6.all(), 2).unwrap().len(), 2);
        assert_eq!(z6.p_elements_closed(&z6.all(), 3).unwrap().len(), 3);
        let z5 = cyclic(5);
        assert_eq!(z5.p_elements_closed(&z5.all(), 5).unwrap(), z5.all());
    }

    #[test]
    fn kernels_and_orbit_blocks() {
        let g = s3();
        let singles = BlockSystem::singletons(3);
        assert_eq!(g.kernel_of_block_action(&singles).unwrap(), g.trivial_subgroup());
        let one = BlockSystem::from_blocks(vec![vec![0, 1, 2]], 3).unwrap();
        assert_eq!(g.kernel_of_block_action(&one).unwrap(), g.all());
        assert_eq!(g.orbits_as_blocks(&g.trivial_subgroup()).unwrap(), singles);
        assert_eq!(g.orbits_as_blocks(&g.all()).unwrap(), one);
        let t = g.index_of(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let h = g.subgroup_generated(&[t]);
        assert!(matches!(g.orbits_as_blocks(&h), Err(Error::NotNormal)));
        let bad = BlockSystem::from_blocks(vec![vec![0, 1], vec![2]], 3).unwrap();
        assert!(g.kernel_of_block_action(&bad).is_err());
    }

    #[test]
    fn subgroup_tests() {
        let g = s3();
        assert!(g.is_subgroup(&g.all()));
        assert!(g.is_subgroup(&g.trivial_subgroup()));
        let t = g.index_of(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap();
        let u = g.index_of(&Permutation::from_cycles(3, &[&[1, 2]]).unwrap()).unwrap();
        assert!(!g.is_subgroup(&ElementSet::from_indices([g.identity(), t, u])));
        assert!(g.is_elementary_abelian(&ElementSet::from_indices([g.identity(), t]), 2));
        assert_eq!(g.product_set(&ElementSet::from_indices([g.identity(), t]), &g.subgroup_generated(&[g.index_of(&Permutation::cycle(3)).unwrap()])), g.all());
    }
}

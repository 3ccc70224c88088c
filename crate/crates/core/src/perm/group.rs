use std::collections::VecDeque;

use indexmap::IndexSet;
use serde::Serialize;

use super::{BlockSystem, ElementSet, Permutation};
use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

pub type Word = Vec<Letter>;

/// A finite permutation group with its full, lexicographically ordered
/// element list and the breadth-first spanning tree used to factor elements
/// into generator words.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: IndexSet<Permutation>,
    /// `tree[g] = Some((h, l))` means `g = h ∘ l`; `None` only for the identity.
    tree: Vec<Option<(u32, Letter)>>,
    identity: usize,
    /// distinct non-identity letter permutations in BFS order
    letters: Vec<(Letter, Permutation)>,
    bfs: Vec<u32>,
}

impl PermGroup {
    /// Enumerates `⟨gens⟩` by breadth-first search from the identity.
    ///
    /// Generators are tried in the given order, each followed by its inverse;
    /// repeated letters are skipped so the tree gives shortest words.
    pub fn close(degree: usize, gens: &[Permutation], cap: usize) -> Result<PermGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let mut letters: Vec<(Letter, Permutation)> = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            for (inverse, p) in [(false, g.clone()), (true, g.inverse())] {
                if !p.is_identity() && letters.iter().all(|(_, q)| *q != p) {
                    letters.push((Letter { generator: i, inverse }, p));
                }
            }
        }

        let mut found: IndexSet<Permutation> = IndexSet::new();
        let mut tree: Vec<Option<(u32, Letter)>> = Vec::new();
        found.insert(Permutation::identity(degree));
        tree.push(None);
        let mut queue = VecDeque::from([0usize]);
        while let Some(h) = queue.pop_front() {
            for (letter, p) in &letters {
                let g = found[h].mul(p);
                if found.contains(&g) {
                    continue;
                }
                if found.len() >= cap {
                    return Err(Error::GroupCapExceeded { cap, found: found.len() });
                }
                found.insert(g);
                tree.push(Some((h as u32, *letter)));
                queue.push_back(found.len() - 1);
            }
        }

        // reorder lexicographically and remap the tree
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_unstable_by(|&a, &b| found[a].cmp(&found[b]));
        let mut new_index = vec![0u32; found.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new as u32;
        }
        let mut old_elements: Vec<Option<Permutation>> = found.into_iter().map(Some).collect();
        let mut elements = IndexSet::with_capacity(order.len());
        let mut new_tree = Vec::with_capacity(order.len());
        for &old in &order {
            elements.insert(old_elements[old].take().expect("each element moved once"));
            new_tree.push(tree[old].map(|(h, l)| (new_index[h as usize], l)));
        }
        let identity = new_index[0] as usize;
        Ok(PermGroup {
            degree,
            generators: gens.to_vec(),
            elements,
            tree: new_tree,
            identity,
            letters,
            bfs: new_index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Distinct non-identity generator letters, as used by the search.
    pub fn letters(&self) -> impl Iterator<Item = &Permutation> {
        self.letters.iter().map(|(_, p)| p)
    }

    /// Element indices of the generators (duplicates kept).
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index_of(g).expect("generator in group")).collect()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.get_index_of(p)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Index of `element(a) ∘ element(b)`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].mul(&self.elements[b]);
        self.elements.get_index_of(&p).expect("group closed under composition")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.elements.get_index_of(&self.elements[a].inverse()).expect("group closed under inverse")
    }

    /// Index of `g ∘ a ∘ g⁻¹` for a permutation `g` normalising the group.
    pub fn conjugate(&self, a: usize, g: &Permutation) -> usize {
        self.elements.get_index_of(&self.elements[a].conjugate_by(g)).expect("conjugate in group")
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.elements[a].order()
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<_> = self.letters().collect();
        gens.iter().all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Shortest word (in letters) for an element, read left to right as a
    /// product `l₁ ∘ l₂ ∘ ⋯`.
    pub fn factor_word(&self, g: usize) -> Word {
        let mut word = Vec::new();
        let mut cur = g;
        while let Some((parent, letter)) = self.tree[cur] {
            word.push(letter);
            cur = parent as usize;
        }
        word.reverse();
        word
    }

    /// Parent and final letter of an element in the search tree.
    pub fn tree_parent(&self, g: usize) -> Option<(usize, Letter)> {
        self.tree[g].map(|(h, l)| (h as usize, l))
    }

    /// Element indices in breadth-first discovery order (parents before children).
    pub fn bfs_order(&self) -> &[u32] {
        &self.bfs
    }

    pub fn evaluate_word(&self, word: &[Letter]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for l in word {
            let g = &self.generators[l.generator];
            acc = if l.inverse { acc.mul(&g.inverse()) } else { acc.mul(g) };
        }
        acc
    }

    /// Orbit of a point, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut stack = vec![x];
        let mut out = vec![x];
        while let Some(y) = stack.pop() {
            for g in self.letters() {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                    stack.push(z);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn orbits(&self) -> BlockSystem {
        let mut block_of = vec![usize::MAX; self.degree];
        let mut blocks = Vec::new();
        for x in 0..self.degree {
            if block_of[x] == usize::MAX {
                let orb = self.orbit(x);
                for &y in &orb {
                    block_of[y] = blocks.len();
                }
                blocks.push(orb);
            }
        }
        BlockSystem::from_blocks_unchecked(blocks, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// The whole group as an element set.
    pub fn all(&self) -> ElementSet {
        ElementSet::from_sorted((0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet::from_sorted(vec![self.identity])
    }

    /// The action induced on the blocks of an invariant block system, with the
    /// projection from element indices of `self` to those of the image group.
    pub fn induced_on_blocks(&self, blocks: &BlockSystem) -> Result<(PermGroup, Vec<usize>)> {
        let induced = |g: &Permutation| -> Permutation {
            let images = blocks
                .blocks()
                .iter()
                .map(|b| blocks.block_of(g.apply(b[0])) as u32)
                .collect();
            Permutation::from_images_unchecked(images)
        };
        let gens: Vec<Permutation> = self.generators.iter().map(induced).collect();
        let image = PermGroup::close(blocks.len(), &gens, self.order().max(1))?;
        let projection = self
            .elements
            .iter()
            .map(|g| image.index_of(&induced(g)).expect("induced element lies in image group"))
            .collect();
        Ok((image, projection))
    }
}

//! The chain `{1} = K₀ ⊆ T₁ ⊆ K₁ ⊆ ⋯ ⊆ T_n ⊆ K_n = G` of normal subgroups of
//! a solvable transitive group of square-free degree.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{factorize, p_part, BlockSystem, ElementSet, PermGroup};

#[derive(Clone, Debug, Serialize)]
pub struct IdealChain {
    /// primes in the order the chain consumes them
    pub primes: Vec<u64>,
    pub t: Vec<ElementSet>,
    /// `k[0]` is the trivial subgroup, `k[i]` pairs with `t[i - 1]`
    pub k: Vec<ElementSet>,
    /// additive Sylow subgroups, filled in when a brace is available
    pub p: BTreeMap<u64, ElementSet>,
    /// `blocks[i]` are the orbits of `k[i + 1]`
    pub blocks: Vec<BlockSystem>,
}

/// Elements `g` of `within` whose image in `within / below` has `p`-power
/// order.
fn p_preimage(group: &PermGroup, within: &ElementSet, below: &ElementSet, p: u64) -> ElementSet {
    let mask = below.mask(group.order());
    let exponent = p_part(within.len() as u64, p);
    ElementSet::from_sorted(
        within
            .iter()
            .filter(|&g| {
                let h = group.element(g).pow(exponent);
                mask[group.index_of(&h).expect("power in group")]
            })
            .collect(),
    )
}

/// Builds the chain by repeatedly taking a minimal normal subgroup of the
/// action on the current blocks, merging blocks along its orbits, and pulling
/// the kernel back to `G`.
pub fn squarefree_chain(group: &PermGroup) -> Result<IdealChain> {
    let degree = group.degree();
    let factors = factorize(degree as u64);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Err(Error::Precondition(format!("degree {degree} is not square-free")));
    }
    if !group.is_transitive() {
        return Err(Error::Precondition("group is not transitive".into()));
    }

    let mut chain = IdealChain {
        primes: Vec::new(),
        t: Vec::new(),
        k: vec![group.trivial_subgroup()],
        p: BTreeMap::new(),
        blocks: Vec::new(),
    };
    let mut blocks = BlockSystem::singletons(degree);
    while blocks.len() > 1 {
        let induced;
        let acting: &PermGroup = if blocks.len() == degree {
            group
        } else {
            induced = group.induced_on_blocks(&blocks)?.0;
            &induced
        };
        let (p, minimal) = acting.minimal_normal_subgroup()?;
        let merged = acting.orbits_as_blocks(&minimal)?;
        let coarser = blocks.coarsen(&merged);
        if blocks.len() / coarser.len() != p as usize {
            return Err(Error::Internal(format!(
                "orbits of a minimal normal {p}-subgroup merge {} blocks into {}",
                blocks.len(),
                coarser.len()
            )));
        }
        let k_prev = chain.k.last().expect("k[0] present").clone();
        let k = group.kernel_of_block_action(&coarser)?;
        let t = p_preimage(group, &k, &k_prev, p);
        if t.len() as u64 != p_part((k.len() / k_prev.len()) as u64, p) * k_prev.len() as u64 || !group.is_subgroup(&t)
        {
            return Err(Error::Precondition(format!(
                "no normal Sylow {p}-subgroup in K_{} / K_{}",
                chain.k.len(),
                chain.k.len() - 1
            )));
        }
        chain.primes.push(p);
        chain.t.push(t);
        chain.k.push(k);
        chain.blocks.push(coarser.clone());
        blocks = coarser;
    }
    Ok(chain)
}

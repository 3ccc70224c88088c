//! Exhaustive enumeration of small solutions up to isomorphism.

use std::collections::BTreeSet;

use super::{validate_table, Solution};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest size accepted by [`enumerate`].
pub const MAX_ENUMERATION_SIZE: usize = 5;

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(cur.clone()).expect("permutation"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// `σ'_{π(x)} = π σ_x π⁻¹`, the table of the relabelled solution.
fn relabel_table(s: &Solution, pi: &Permutation) -> Vec<Vec<u32>> {
    let mut rows = vec![Vec::new(); s.size()];
    for x in 0..s.size() {
        rows[pi.apply(x)] = s.sigma(x).conjugate_by(pi).images().to_vec();
    }
    rows
}

/// The lexicographically least table over all relabellings.
pub fn canonical_form(s: &Solution) -> Solution {
    canonical_form_with(s, &all_permutations(s.size()))
}

fn canonical_form_with(s: &Solution, perms: &[Permutation]) -> Solution {
    let best = perms.iter().map(|pi| relabel_table(s, pi)).min().expect("at least one relabelling");
    Solution::new_unchecked(best.into_iter().map(Permutation::from_images_unchecked).collect())
}

/// Whether the criterion can be checked for `(x, y)` with rows `0..=k`
/// assigned, and if so whether it holds.
fn pair_ok(sigma: &[Permutation], inv: &[Permutation], k: usize, x: usize, y: usize) -> bool {
    let u = inv[x].apply(y);
    let v = inv[y].apply(x);
    if u > k || v > k {
        return true;
    }
    (0..sigma.len()).all(|z| sigma[x].apply(sigma[u].apply(z)) == sigma[y].apply(sigma[v].apply(z)))
}

/// Every solution of size `n` up to isomorphism, in increasing order of
/// canonical table. Rows are assigned one at a time and each prefix is
/// pruned on the pairs it fully determines.
pub fn enumerate(n: usize, indecomposable_only: bool) -> Result<Vec<Solution>> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(Error::TooLarge { what: "enumeration size", size: n, limit: MAX_ENUMERATION_SIZE });
    }
    let perms = all_permutations(n);
    let mut sigma: Vec<Permutation> = Vec::with_capacity(n);
    let mut inv: Vec<Permutation> = Vec::with_capacity(n);
    let mut classes: BTreeSet<Vec<Permutation>> = BTreeSet::new();

    fn go(
        n: usize,
        perms: &[Permutation],
        sigma: &mut Vec<Permutation>,
        inv: &mut Vec<Permutation>,
        found: &mut dyn FnMut(&[Permutation]),
    ) {
        let k = sigma.len();
        if k == n {
            found(sigma);
            return;
        }
        for p in perms {
            sigma.push(p.clone());
            inv.push(p.inverse());
            // pairs involving the new row or whose witnesses include it
            let ok = (0..=k).all(|x| (0..=k).all(|y| (x != k && y != k && !touches(inv, k, x, y)) || pair_ok(sigma, inv, k, x, y)));
            if ok {
                go(n, perms, sigma, inv, found);
            }
            sigma.pop();
            inv.pop();
        }
    }

    fn touches(inv: &[Permutation], k: usize, x: usize, y: usize) -> bool {
        inv[x].apply(y) == k || inv[y].apply(x) == k
    }

    let mut found = |table: &[Permutation]| {
        if !validate_table(table).is_valid() {
            return;
        }
        let s = Solution::new_unchecked(table.to_vec());
        if indecomposable_only && !s.is_indecomposable() {
            return;
        }
        classes.insert(canonical_form_with(&s, &perms).sigma);
    };
    go(n, &perms, &mut sigma, &mut inv, &mut found);
    Ok(classes.into_iter().map(Solution::new_unchecked).collect())
}

//! Indecomposable multipermutation solutions of size `p₁⋯p_n` and level `n`,
//! built by iterating `X_j = Z/(p_j) × X_{j−1}` with
//! `σ_{(a,x)}(b, y) = (b + δ_{x,σ_x(y)}, σ_x(y))`.
//!
//! The pair `(a, x)` is stored as the point `a·|X_{j−1}| + x`.

use std::collections::HashSet;

use serde::Serialize;

use crate::config::VerifyConfig;
use crate::error::{Error, Result};
use crate::perm::{is_prime, BlockSystem, Permutation};
use crate::report::{Check, TheoremReport};
use crate::solution::Solution;

/// Largest solution `construct` will build.
pub const MAX_FAMILY_SIZE: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    primes: Vec<u64>,
}

impl FamilySpec {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::Precondition("a family needs at least one prime".into()));
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let distinct: HashSet<_> = primes.iter().collect();
        if distinct.len() != primes.len() {
            return Err(Error::Precondition(format!("primes {primes:?} are not distinct")));
        }
        let size = primes.iter().try_fold(1u64, |acc, &p| acc.checked_mul(p));
        match size {
            Some(s) if s <= MAX_FAMILY_SIZE as u64 => Ok(FamilySpec { primes }),
            _ => Err(Error::TooLarge { what: "family size", size: size.unwrap_or(u64::MAX) as usize, limit: MAX_FAMILY_SIZE }),
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn size(&self) -> usize {
        self.primes.iter().product::<u64>() as usize
    }

    /// The family on the first `k` primes.
    pub fn prefix(&self, k: usize) -> FamilySpec {
        FamilySpec { primes: self.primes[..k].to_vec() }
    }
}

/// The cyclic solution on `Z/(p)`: every `σ_a` is `b ↦ b + 1`.
pub fn base_solution(p: u64) -> Result<Solution> {
    if !is_prime(p) || p as usize > MAX_FAMILY_SIZE {
        return Err(Error::Precondition(format!("{p} is not a prime within the size cap")));
    }
    let n = p as usize;
    Solution::new(vec![Permutation::cycle(n); n])
}

/// `Z/(p) × X` with the displayed σ. Coprimality of `p` with the primes
/// already used is the caller's responsibility.
pub fn extend(s: &Solution, p: u64) -> Result<Solution> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    let (k, p) = (s.size(), p as usize);
    if k.checked_mul(p).is_none_or(|n| n > MAX_FAMILY_SIZE) {
        return Err(Error::TooLarge { what: "extended solution", size: k.saturating_mul(p), limit: MAX_FAMILY_SIZE });
    }
    let sigma = (0..p * k)
        .map(|ax| {
            let x = ax % k;
            let sx = s.sigma(x);
            let images = (0..p * k)
                .map(|by| {
                    let (b, y) = (by / k, by % k);
                    let y2 = sx.apply(y);
                    let b2 = (b + usize::from(x == y2)) % p;
                    (b2 * k + y2) as u32
                })
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    Solution::new(sigma)
}

pub fn construct(spec: &FamilySpec) -> Result<Solution> {
    let mut s = base_solution(spec.primes[0])?;
    for &p in &spec.primes[1..] {
        s = extend(&s, p)?;
    }
    Ok(s)
}

/// `p₁ · p₂^{p₁} ⋯ p_n^{p₁⋯p_{n−1}}`, or `None` on overflow.
pub fn expected_group_order(spec: &FamilySpec) -> Option<u128> {
    let mut order = 1u128;
    let mut below = 1u32;
    for &p in &spec.primes {
        order = order.checked_mul((p as u128).checked_pow(below)?)?;
        below = below.checked_mul(p as u32)?;
    }
    Some(order)
}

/// Level-by-level checks of the construction.
pub fn verify_family(spec: &FamilySpec, cfg: &VerifyConfig) -> Result<TheoremReport> {
    let expected = expected_group_order(spec)
        .filter(|&o| o <= cfg.group_cap as u128)
        .ok_or(Error::TooLarge { what: "expected group order", size: usize::MAX, limit: cfg.group_cap })?;
    let mut rep = TheoremReport::new("family construction");
    rep.fact("primes", spec.primes.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
    rep.fact("expected_group_order", expected);

    let mut prev: Option<(Solution, usize, HashSet<Vec<u32>>)> = None;
    let mut s = base_solution(spec.primes[0])?;
    for (j, &p) in spec.primes.iter().enumerate() {
        if j > 0 {
            s = extend(&prev.as_ref().expect("previous level").0, p)?;
        }
        let level = j + 1;
        let want = expected_group_order(&spec.prefix(level)).expect("prefix of a bounded order") as usize;
        rep.push(Check::expect(
            format!("X_{level} is a solution"),
            s.validate().is_valid(),
            format!("{} points", s.size()),
            vec![],
        ));
        rep.push(Check::expect(format!("X_{level} is indecomposable"), s.is_indecomposable(), "one orbit", vec![]));
        let group = s.perm_group(cfg.group_cap)?;
        rep.push(Check::expect(
            format!("|𝒢(X_{level})| = {want}"),
            group.order() == want,
            format!("computed {}", group.order()),
            vec![group.order()],
        ));

        if let Some((base, base_order, base_elems)) = &prev {
            let k = base.size();
            let (ret, proj) = s.retract();
            let f_ok = ret.size() == k
                && (0..s.size()).all(|ax| proj.map[ax] == ax % k)
                && ret.sigmas() == base.sigmas();
            rep.push(Check::expect(
                format!("Ret(X_{level}) = X_{} via (a, x) ↦ x", level - 1),
                f_ok && ret.is_isomorphic(base).is_some(),
                format!("retract has {} points", ret.size()),
                vec![],
            ));

            let fibers = BlockSystem::from_labels(&(0..s.size()).map(|ax| ax % k).collect::<Vec<_>>());
            let kernel = group.kernel_of_block_action(&fibers)?;
            let want_kernel = (p as usize).pow(k as u32);
            rep.push(Check::expect(
                format!("kernel on Z/({p})-fibers is elementary abelian of order {p}^{k}"),
                kernel.len() == want_kernel && group.is_elementary_abelian(&kernel, p),
                format!("kernel order {}", kernel.len()),
                vec![kernel.len()],
            ));
            let (induced, _) = group.induced_on_blocks(&fibers)?;
            let same = induced.elements().all(|g| base_elems.contains(g.images()));
            rep.push(Check::expect(
                format!("action on fibers is 𝒢(X_{})", level - 1),
                group.order() / kernel.len() == *base_order && induced.order() == *base_order && same,
                format!("quotient order {}", group.order() / kernel.len()),
                vec![],
            ));
        }
        let elems = if level < spec.primes.len() {
            group.elements().map(|g| g.images().to_vec()).collect()
        } else {
            HashSet::new()
        };
        prev = Some((s.clone(), group.order(), elems));
    }

    let n = spec.primes.len();
    let mpl = s.mp_level();
    rep.fact("mp_level", mpl.map_or("none".into(), |l| l.to_string()));
    rep.push(Check::expect(format!("multipermutation level is {n}"), mpl == Some(n), format!("{mpl:?}"), vec![]));
    let sizes: Vec<usize> = s.retract_tower().iter().map(Solution::size).collect();
    let want_sizes: Vec<usize> = (0..=n).rev().map(|k| spec.primes[..k].iter().product::<u64>() as usize).collect();
    rep.push(Check::expect(
        "retract tower sizes are the prefix products",
        sizes == want_sizes,
        format!("{sizes:?}"),
        sizes.clone(),
    ));
    if n >= 3 {
        rep.push(Check::expect(
            "|𝒢| exceeds p₁p₂p₃",
            expected > spec.primes[..3].iter().product::<u64>() as u128,
            format!("{expected}"),
            vec![],
        ));
    }
    Ok(rep)
}

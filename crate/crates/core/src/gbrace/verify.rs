//! Verifiers for the structure of `𝒢(X, r)` when `|X|` is square-free.
//!
//! Each verifier returns a [`TheoremReport`]; a failed claim is a finding
//! with a witness, never an error. Errors are reserved for inputs that do not
//! meet a verifier's hypotheses.

use std::collections::BTreeMap;

use super::{GBrace, IdealChain};
use crate::brace::LeftBrace;
use crate::config::VerifyConfig;
use crate::error::{Error, Result};
use crate::perm::{factorize, ElementSet};
use crate::report::{Check, TheoremReport};
use crate::solution::{Solution, MAX_CONGRUENCE_SIZE};

/// Largest quotient materialised as a table to cross-check socle claims.
pub const MAX_DENSE_QUOTIENT: usize = 1 << 12;

/// The additive Sylow `p`-subgroup with the generators it was spanned from.
#[derive(Clone, Debug)]
pub struct Sylow {
    pub set: ElementSet,
    pub gens: Vec<usize>,
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Distinct primes of a square-free size, or a precondition error.
pub fn square_free_primes(n: usize) -> Result<Vec<u64>> {
    let f = factorize(n as u64);
    if n < 2 || f.iter().any(|&(_, e)| e > 1) {
        return Err(Error::Precondition(format!("size {n} is not a square-free integer above 1")));
    }
    Ok(f.into_iter().map(|(p, _)| p).collect())
}

fn require_indecomposable_square_free(s: &Solution) -> Result<Vec<u64>> {
    let primes = square_free_primes(s.size())?;
    if !s.is_indecomposable() {
        return Err(Error::Precondition("solution is decomposable".into()));
    }
    Ok(primes)
}

impl GBrace {
    pub fn sylows(&self, primes: &[u64]) -> BTreeMap<u64, Sylow> {
        primes
            .iter()
            .map(|&p| {
                let gens = self.hall_generators(&[p]);
                (p, Sylow { set: self.additive_span(&gens), gens })
            })
            .collect()
    }

    /// Fills `chain.p` with the additive Sylow subgroups for the chain's
    /// primes.
    pub fn attach_sylows(&self, chain: &mut IdealChain) {
        chain.p = self.sylows(&chain.primes).into_iter().map(|(p, s)| (p, s.set)).collect();
    }

    /// Exact ideal test for a subgroup with known additive generators:
    /// additive closure is compared with the additive span, `λ`-invariance
    /// is tested on generators, and normality by conjugating every element
    /// by every generator.
    fn ideal_check(&self, name: &str, set: &ElementSet, additive_gens: &[usize]) -> Check {
        let group = self.group();
        if !group.is_subgroup(set) {
            return Check::fail(name, "not a multiplicative subgroup", set.iter().take(1).collect());
        }
        if self.additive_span(additive_gens) != *set {
            return Check::fail(name, "differs from the additive span of its generators", additive_gens.to_vec());
        }
        for y in 0..self.degree() {
            for &c in additive_gens {
                if !set.contains(self.lambda_g(self.generator(y), c)) {
                    return Check::fail(name, "not λ-invariant", vec![self.generator(y), c]);
                }
            }
        }
        if !group.is_normal(set) {
            return Check::fail(name, "not normal in (𝒢, ∘)", vec![]);
        }
        Check::pass(name, format!("ideal of order {}", set.len()))
    }

    /// First `a` among `gens` and point `y` with `−σ_y ⊕ σ_{a(y)} ∉ ideal`,
    /// i.e. a generator whose image is outside the socle of `𝒢 / ideal`.
    fn socle_mod_witness(&self, gens: &[usize], ideal: &ElementSet) -> Option<Vec<usize>> {
        for &a in gens {
            let pa = self.group().element(a);
            for y in 0..self.degree() {
                let d = self.add(self.neg(self.generator(y)), self.generator(pa.apply(y)));
                if !ideal.contains(d) {
                    return Some(vec![a, y]);
                }
            }
        }
        None
    }
}

/// Socle is Hall, the Sylow parts multiply to `𝒢`, each is a trivial
/// elementary abelian brace, some ordering of them gives a chain of ideals
/// with socle quotients, and block kernels recover the partial products.
pub fn verify_theorem_multi(gb: &GBrace, cfg: &VerifyConfig) -> Result<TheoremReport> {
    let s = gb.base();
    let primes = require_indecomposable_square_free(s)?;
    let level = s.mp_level().ok_or_else(|| Error::Precondition("solution is not multipermutation".into()))?;
    let group = gb.group();
    let order = gb.order();
    let mut rep = TheoremReport::new("sylow ideal structure");
    rep.fact("group_order", order);
    rep.fact("mp_level", level);
    let sylows = gb.sylows(&primes);

    // (i) socle
    let socle = gb.socle_g();
    let pi: Vec<u64> = factorize(socle.len() as u64).into_iter().map(|(p, _)| p).collect();
    rep.fact("socle_order", socle.len());
    rep.fact("pi", join(&pi));
    let coprime = crate::perm::gcd(socle.len() as u64, (order / socle.len()) as u64) == 1;
    let hall = gb.hall_additive_g(&pi);
    rep.push(Check::expect(
        "socle is a Hall subgroup of (𝒢, ⊕)",
        !pi.is_empty() && pi.iter().all(|p| primes.contains(p)) && coprime && hall == socle,
        format!("|soc| = {}, π = {{{}}}", socle.len(), join(&pi)),
        socle.iter().take(1).collect(),
    ));

    // (ii) 𝒢 = P₁⋯P_n
    let extra: Vec<u64> =
        factorize(order as u64).into_iter().map(|(p, _)| p).filter(|p| !primes.contains(p)).collect();
    let mut prod = group.trivial_subgroup();
    for sy in sylows.values() {
        prod = group.product_set(&prod, &sy.set);
    }
    rep.push(Check::expect(
        "𝒢 is the product of the additive Sylow subgroups",
        extra.is_empty() && prod.len() == order,
        format!(
            "orders {}; product covers {} of {order}",
            join(&sylows.values().map(|s| s.set.len()).collect::<Vec<_>>()),
            prod.len()
        ),
        extra.iter().map(|&p| p as usize).collect(),
    ));

    // (iii) trivial elementary abelian braces
    for (&p, sy) in &sylows {
        rep.fact(&format!("sylow_{p}_order"), sy.set.len());
        let bad_gen = sy.gens.iter().copied().find(|&c| gb.additive_multiple(c, p) != gb.zero());
        let bad_pair = sy.gens.iter().find_map(|&a| {
            sy.gens.iter().find(|&&b| gb.lambda_g(a, b) != b).map(|&b| vec![a, b])
        });
        rep.push(Check::expect(
            format!("P_{p} is elementary abelian"),
            bad_gen.is_none(),
            format!("{} additive generators of order {p}", sy.gens.len()),
            bad_gen.into_iter().collect(),
        ));
        rep.push(Check::expect(
            format!("P_{p} is a trivial brace (generators)"),
            bad_pair.is_none(),
            "λ_a(b) = b for all additive generators a, b",
            bad_pair.unwrap_or_default(),
        ));
        let elems = sy.set.as_slice();
        let mut check = Check::scanned(
            format!("P_{p} is a trivial brace (elements)"),
            cfg.check_tuples(&[elems.len(), elems.len()], 0x3000 + p, |v| {
                let (a, b) = (elems[v[0]], elems[v[1]]);
                (gb.mul(a, b) != gb.add(a, b)).then(|| vec![a, b])
            }),
        );
        check.detail = format!("a∘b = a⊕b: {}", check.detail);
        rep.push(check);
    }

    // (iv) greedy ordering of ideals
    let mut ideal = group.trivial_subgroup();
    let mut ideal_gens: Vec<usize> = Vec::new();
    let mut remaining = primes.clone();
    let mut ordering = Vec::new();
    let mut partials = Vec::new();
    while !remaining.is_empty() {
        let pick = remaining.iter().copied().find(|&p| {
            let gens = &sylows[&p].gens;
            if ordering.is_empty() {
                sylows[&p].set.is_subset(&socle)
            } else {
                gb.socle_mod_witness(gens, &ideal).is_none()
            }
        });
        let Some(p) = pick else {
            let witness = remaining
                .iter()
                .find_map(|&p| gb.socle_mod_witness(&sylows[&p].gens, &ideal))
                .unwrap_or_default();
            rep.push(Check::fail(
                "ordering of Sylow subgroups into socle layers",
                format!("no remaining prime of {{{}}} lies in the socle of the quotient", join(&remaining)),
                witness,
            ));
            break;
        };
        if !ordering.is_empty() && order / ideal.len() <= MAX_DENSE_QUOTIENT {
            let (q, label) = gb.quotient_dense(&ideal, MAX_DENSE_QUOTIENT)?;
            let qsoc = q.socle();
            let outside = sylows[&p].set.iter().find(|&a| !qsoc.contains(label[a]));
            rep.push(Check::expect(
                format!("P_{p} maps into the socle of a {}-element quotient table", q.order()),
                outside.is_none(),
                format!("quotient socle has order {}", qsoc.len()),
                outside.into_iter().collect(),
            ));
        }
        remaining.retain(|&q| q != p);
        ordering.push(p);
        ideal = group.product_set(&ideal, &sylows[&p].set);
        ideal_gens.extend(&sylows[&p].gens);
        rep.push(gb.ideal_check(&format!("P_{} is an ideal", join(&ordering).replace(',', "·P_")), &ideal, &ideal_gens));
        partials.push(ideal.clone());
    }
    rep.fact("ordering", join(&ordering));

    // (v) block kernels
    for (i, part) in partials.iter().enumerate() {
        let blocks = group.orbits_of(part);
        let kernel = group.kernel_of_block_action(&blocks)?;
        rep.push(Check::expect(
            format!("kernel on orbits of partial product {} equals it", i + 1),
            kernel == *part,
            format!("{} blocks, kernel order {}, product order {}", blocks.len(), kernel.len(), part.len()),
            kernel.iter().find(|&g| !part.contains(g)).into_iter().collect(),
        ));
    }
    Ok(rep)
}

/// `K_i = P_{σ(1)}⋯P_{σ(i)}` for the chain's prime order, and `λ_g(h) = h`
/// for `g ∈ K_i`, `h ∈ P_{σ(i)}⋯P_{σ(n)}`.
pub fn verify_multi2(gb: &GBrace, chain: &IdealChain, cfg: &VerifyConfig) -> Result<TheoremReport> {
    let s = gb.base();
    require_indecomposable_square_free(s)?;
    if s.mp_level().is_none() {
        return Err(Error::Precondition("solution is not multipermutation".into()));
    }
    let group = gb.group();
    let sylows = gb.sylows(&chain.primes);
    let mut rep = TheoremReport::new("chain comparison");
    rep.fact("ordering", join(&chain.primes));
    let n = chain.primes.len();

    let mut prefix = group.trivial_subgroup();
    for i in 1..=n {
        let p = chain.primes[i - 1];
        prefix = group.product_set(&prefix, &sylows[&p].set);
        let k = &chain.k[i];
        rep.push(Check::expect(
            format!("K_{i} is the product of the first {i} Sylow subgroups"),
            prefix == *k,
            format!("|K_{i}| = {}, product order {}", k.len(), prefix.len()),
            k.iter().find(|&g| !prefix.contains(g)).into_iter().collect(),
        ));

        let mut suffix = group.trivial_subgroup();
        let mut suffix_gens = Vec::new();
        for &q in &chain.primes[i - 1..] {
            suffix = group.product_set(&suffix, &sylows[&q].set);
            suffix_gens.extend(&sylows[&q].gens);
        }
        let k_gens = group.generating_set(k);
        let moved = k_gens.iter().find_map(|&g| {
            suffix_gens.iter().find(|&&h| gb.lambda_g(g, h) != h).map(|&h| vec![g, h])
        });
        rep.push(Check::expect(
            format!("λ fixes the tail products pointwise for K_{i} (generators)"),
            moved.is_none(),
            format!("{} multiplicative by {} additive generators", k_gens.len(), suffix_gens.len()),
            moved.unwrap_or_default(),
        ));
        let (ks, hs) = (k.as_slice(), suffix.as_slice());
        let mut check = Check::scanned(
            format!("λ fixes the tail products pointwise for K_{i} (elements)"),
            cfg.check_tuples(&[ks.len(), hs.len()], 0x4000 + i as u64, |v| {
                let (g, h) = (ks[v[0]], hs[v[1]]);
                (gb.lambda_g(g, h) != h).then(|| vec![g, h])
            }),
        );
        check.detail = format!("{} of {}×{} pairs", check.detail, ks.len(), hs.len());
        rep.push(check);
    }
    Ok(rep)
}

/// The defining properties of the chain and its comparison with the
/// Sylow subgroups: `K_i(x) = T_i(x)` and `T_i = (T_i ∩ P_i)K_{i−1}`.
pub fn verify_squarefree(gb: &GBrace, chain: &IdealChain) -> Result<TheoremReport> {
    let s = gb.base();
    let primes = require_indecomposable_square_free(s)?;
    let group = gb.group();
    let n = chain.primes.len();
    let mut rep = TheoremReport::new("square-free chain");
    rep.fact("ordering", join(&chain.primes));
    rep.fact("block_counts", join(&chain.blocks.iter().map(|b| b.len()).collect::<Vec<_>>()));
    rep.fact("k_orders", join(&chain.k.iter().map(ElementSet::len).collect::<Vec<_>>()));
    rep.fact("t_orders", join(&chain.t.iter().map(ElementSet::len).collect::<Vec<_>>()));

    let mut sorted = chain.primes.clone();
    sorted.sort_unstable();
    rep.push(Check::expect(
        "each prime of |X| is used once",
        sorted == primes,
        format!("chain primes {}", join(&chain.primes)),
        chain.primes.iter().map(|&p| p as usize).collect(),
    ));
    rep.push(Check::expect(
        "K_0 is trivial and K_n is 𝒢",
        chain.k[0].len() == 1 && chain.k[n].len() == gb.order(),
        format!("|K_0| = {}, |K_n| = {}", chain.k[0].len(), chain.k[n].len()),
        vec![],
    ));
    let sylows: BTreeMap<u64, ElementSet> = if chain.p.is_empty() {
        gb.sylows(&chain.primes).into_iter().map(|(p, s)| (p, s.set)).collect()
    } else {
        chain.p.clone()
    };
    let mut used = 1usize;
    for i in 1..=n {
        let p = chain.primes[i - 1];
        let (t, k, k_prev) = (&chain.t[i - 1], &chain.k[i], &chain.k[i - 1]);
        used *= p as usize;
        rep.push(Check::expect(
            format!("T_{i} and K_{i} are normal"),
            group.is_normal(t) && group.is_normal(k),
            "conjugation by every generator",
            vec![],
        ));
        rep.push(Check::expect(
            format!("K_{} ⊆ T_{i} ⊆ K_{i}", i - 1),
            k_prev.is_subset(t) && t.is_subset(k),
            format!("orders {} ≤ {} ≤ {}", k_prev.len(), t.len(), k.len()),
            vec![],
        ));
        let quotient = (k.len() / k_prev.len()) as u64;
        rep.push(Check::expect(
            format!("T_{i}/K_{} is the Sylow {p}-subgroup of K_{i}/K_{}", i - 1, i - 1),
            quotient.is_multiple_of(p) && (t.len() / k_prev.len()) as u64 == crate::perm::p_part(quotient, p),
            format!("|K_{i}/K_{}| = {quotient}, |T_{i}/K_{}| = {}", i - 1, i - 1, t.len() / k_prev.len()),
            vec![],
        ));
        let t_orbits = group.orbits_of(t);
        let kernel = group.kernel_of_block_action(&t_orbits)?;
        rep.push(Check::expect(
            format!("K_{i} is the kernel on the orbits of T_{i}"),
            kernel == *k,
            format!("kernel order {}", kernel.len()),
            kernel.iter().find(|&g| !k.contains(g)).into_iter().collect(),
        ));
        let blocks = &chain.blocks[i - 1];
        rep.push(Check::expect(
            format!("orbits of K_{i} form a block system with |X|/{used} blocks"),
            group.orbits_of(k) == *blocks
                && blocks.has_equal_sizes()
                && group.letters().all(|g| blocks.is_preserved_by(g))
                && blocks.len() == s.size() / used,
            format!("{} blocks", blocks.len()),
            vec![],
        ));
        rep.push(Check::expect(
            format!("K_{i}(x) = T_{i}(x)"),
            t_orbits == *blocks,
            "orbits compared for every point",
            vec![],
        ));
        let a = t.intersection(&sylows[&p]);
        let ab = a.len() * k_prev.len() / a.intersection(k_prev).len();
        rep.push(Check::expect(
            format!("T_{i} = (T_{i} ∩ P_{p})K_{}", i - 1),
            ab == t.len(),
            format!("|T_{i} ∩ P_{p}| = {}, product order {ab}, |T_{i}| = {}", a.len(), t.len()),
            vec![],
        ));
    }
    Ok(rep)
}

/// Multipermutation level at most the number of primes, non-simplicity,
/// and divisibility of `|𝒢|` by `|X|`.
pub fn verify_main(s: &Solution, cfg: &VerifyConfig) -> Result<TheoremReport> {
    let primes = require_indecomposable_square_free(s)?;
    let mut rep = TheoremReport::new("multipermutation");
    let level = s.mp_level();
    rep.fact("mp_level", level.map_or("none".into(), |l| l.to_string()));
    rep.push(Check::expect(
        "multipermutation with level at most the number of primes",
        level.is_some_and(|l| l <= primes.len()),
        format!("level {level:?}, {} primes", primes.len()),
        vec![],
    ));
    if primes.len() > 1 {
        let (ret, proj) = s.retract();
        if ret.size() > 1 && ret.size() < s.size() {
            rep.push(Check::pass(
                "not simple",
                format!("the retraction onto {} points is a proper non-trivial quotient", ret.size()),
            ));
            rep.fact("non_simplicity_witness", format!("retract classes {:?}", proj.kernel().blocks()));
        } else if s.size() <= MAX_CONGRUENCE_SIZE {
            let simple = s.is_simple()?;
            rep.push(Check::expect("not simple", !simple, "congruence search", vec![]));
        } else {
            rep.push(Check::fail(
                "not simple",
                format!("no proper retract and size {} is beyond the congruence search", s.size()),
                vec![],
            ));
        }
    }
    let group = s.perm_group(cfg.group_cap)?;
    rep.fact("group_order", group.order());
    rep.push(Check::expect(
        "|X| divides |𝒢|",
        group.order() % s.size() == 0,
        format!("|𝒢| = {}", group.order()),
        vec![],
    ));
    Ok(rep)
}

/// For every prime `p` for which `𝒢` has an abelian normal Sylow
/// `p`-subgroup, the solution must be retractable.
pub fn verify_lemma_key(s: &Solution, cfg: &VerifyConfig) -> Result<TheoremReport> {
    let group = s.perm_group(cfg.group_cap)?;
    let mut rep = TheoremReport::new("retractability from abelian normal Sylow");
    let retractable = s.retract().0.size() < s.size();
    let mut hits = Vec::new();
    for (p, _) in factorize(group.order() as u64) {
        let Some(sylow) = group.p_elements_closed(&group.all(), p) else { continue };
        if group.is_abelian_subgroup(&sylow) {
            hits.push(p);
            rep.push(Check::expect(
                format!("abelian normal Sylow {p}-subgroup forces a retraction"),
                retractable,
                format!("|P| = {}, retract has {} of {} points", sylow.len(), s.retract().0.size(), s.size()),
                vec![p as usize],
            ));
        }
    }
    rep.fact("primes_with_abelian_normal_sylow", join(&hits));
    if hits.is_empty() {
        rep.push(Check::pass("hypothesis", "no abelian normal Sylow subgroup; nothing to check"));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyclic(p: usize) -> Solution {
        Solution::new(vec![Permutation::cycle(p); p]).unwrap()
    }

    #[test]
    fn prime_case_passes() {
        let cfg = VerifyConfig::default();
        for p in [2, 3, 5] {
            let s = cyclic(p);
            let gb = GBrace::build(&s, &cfg).unwrap();
            let mut chain = super::super::squarefree_chain(gb.group()).unwrap();
            gb.attach_sylows(&mut chain);
            assert_eq!(chain.p[&(p as u64)].len(), p);
            for rep in [
                verify_theorem_multi(&gb, &cfg).unwrap(),
                verify_multi2(&gb, &chain, &cfg).unwrap(),
                verify_squarefree(&gb, &chain).unwrap(),
                verify_main(&s, &cfg).unwrap(),
            ] {
                assert!(rep.passed, "{rep:#?}");
            }
        }
    }

    #[test]
    fn decomposable_input_is_a_precondition_error() {
        let cfg = VerifyConfig::default();
        let s = Solution::trivial(2);
        assert!(matches!(verify_main(&s, &cfg), Err(Error::Precondition(_))));
        let gb = GBrace::build(&s, &cfg).unwrap();
        assert!(verify_theorem_multi(&gb, &cfg).is_err());
        assert!(square_free_primes(12).is_err());
    }

    #[test]
    fn lemma_key_on_small_cases() {
        let cfg = VerifyConfig::default();
        // 𝒢 = Z/3 is an abelian normal Sylow subgroup; the cyclic solution
        // collapses to a point
        let rep = verify_lemma_key(&cyclic(3), &cfg).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.facts["primes_with_abelian_normal_sylow"], "3");
    }
}

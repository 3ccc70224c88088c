use serde::Serialize;

use super::{Brace, LeftBrace};
use crate::error::{Error, Result};
use crate::perm::{p_part, ElementSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubsetFlags {
    pub subset: ElementSet,
    pub is_left_ideal: bool,
    pub is_ideal: bool,
    pub is_in_socle: bool,
}

impl Brace {
    /// `{a : a∘b = a+b for all b}`, by scanning the tables.
    pub fn socle(&self) -> ElementSet {
        let m = self.order();
        ElementSet::from_sorted((0..m).filter(|&a| (0..m).all(|b| self.mul(a, b) == self.add(a, b))).collect())
    }

    /// The kernel of `λ`, computed from the λ-maps themselves.
    pub fn socle_via_lambda(&self) -> ElementSet {
        let m = self.order();
        ElementSet::from_sorted((0..m).filter(|&a| (0..m).all(|b| self.lambda(a, b) == b)).collect())
    }

    pub fn is_additive_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(self.zero()) && s.iter().all(|a| s.iter().all(|b| s.contains(self.add(a, b))))
    }

    /// Additive subgroup closed under every `λ_a`.
    pub fn is_left_ideal(&self, s: &ElementSet) -> bool {
        let ok = self.is_additive_subgroup(s)
            && (0..self.order()).all(|a| s.iter().all(|b| s.contains(self.lambda(a, b))));
        if ok {
            // left ideals are multiplicative subgroups
            debug_assert!(s.iter().all(|a| s.contains(self.inv(a)) && s.iter().all(|b| s.contains(self.mul(a, b)))));
        }
        ok
    }

    /// Left ideal that is also normal in `(B, ∘)`.
    pub fn is_ideal(&self, s: &ElementSet) -> bool {
        self.is_left_ideal(s)
            && (0..self.order()).all(|g| s.iter().all(|a| s.contains(self.mul(self.mul(g, a), self.inv(g)))))
    }

    pub fn subset_flags(&self, s: &ElementSet) -> SubsetFlags {
        let socle = self.socle();
        SubsetFlags {
            subset: s.clone(),
            is_left_ideal: self.is_left_ideal(s),
            is_ideal: self.is_ideal(s),
            is_in_socle: s.is_subset(&socle),
        }
    }

    /// Elements whose additive order has only prime factors in `primes`.
    pub fn hall_additive(&self, primes: &[u64]) -> ElementSet {
        let set = ElementSet::from_sorted(
            (0..self.order())
                .filter(|&a| {
                    let o = self.additive_order(a) as u64;
                    primes.iter().fold(o, |rest, &p| rest / p_part(rest, p)) == 1
                })
                .collect(),
        );
        debug_assert!(self.is_left_ideal(&set));
        set
    }

    /// The `p`-torsion of `(B, +)`.
    pub fn sylow_additive(&self, p: u64) -> ElementSet {
        self.hall_additive(&[p])
    }

    /// The brace on the cosets `a + I`, labelled by their smallest element,
    /// with the projection `B → B/I`.
    pub fn quotient_brace(&self, ideal: &ElementSet) -> Result<(Brace, Vec<usize>)> {
        if !self.is_ideal(ideal) {
            return Err(Error::Precondition("quotient by a subset that is not an ideal".into()));
        }
        let m = self.order();
        let mut label = vec![usize::MAX; m];
        let mut reps = Vec::new();
        for a in 0..m {
            if label[a] == usize::MAX {
                for i in ideal.iter() {
                    label[self.add(a, i)] = reps.len();
                }
                reps.push(a);
            }
        }
        let k = reps.len();
        let mut add = vec![0u32; k * k];
        let mut mul = vec![0u32; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * k + j] = label[self.add(a, b)] as u32;
                mul[i * k + j] = label[self.mul(a, b)] as u32;
            }
        }
        Ok((Brace::from_tables(mul, add)?, label))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{semidirect, trivial_brace, BraceAction};
    use super::*;

    fn order6() -> Brace {
        let i = trivial_brace(&[3]).unwrap();
        let l = trivial_brace(&[2]).unwrap();
        let alpha = BraceAction::new(&l, &i, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        semidirect(&i, &l, &alpha).unwrap()
    }

    #[test]
    fn whole_and_zero_are_ideals() {
        let b = order6();
        assert!(b.is_ideal(&ElementSet::from_sorted((0..6).collect())));
        assert!(b.is_ideal(&ElementSet::from_sorted(vec![b.zero()])));
    }

    #[test]
    fn socle_two_ways() {
        let b = order6();
        assert_eq!(b.socle(), b.socle_via_lambda());
        assert!(b.is_ideal(&b.socle()));
        assert!(b.socle().contains(b.zero()));
        let (q, _) = b.quotient_brace(&b.socle()).unwrap();
        assert_eq!(q.order() * b.socle().len(), 6);
    }

    #[test]
    fn sylows_are_left_ideals() {
        let b = order6();
        for p in [2, 3] {
            let s = b.sylow_additive(p);
            assert_eq!(s.len() as u64, p);
            assert!(b.is_left_ideal(&s));
        }
        let mixed = trivial_brace(&[2, 3]).unwrap();
        assert_eq!(mixed.sylow_additive(2).len(), 2);
        assert_eq!(trivial_brace(&[5]).unwrap().sylow_additive(5).len(), 5);
        assert_eq!(b.hall_additive(&[2, 3]).len(), 6);
    }

    #[test]
    fn quotients() {
        let b = order6();
        let (q, proj) = b.quotient_brace(&ElementSet::from_sorted(vec![b.zero()])).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(proj, (0..6).collect::<Vec<_>>());
        let (q, _) = b.quotient_brace(&ElementSet::from_sorted((0..6).collect())).unwrap();
        assert_eq!(q.order(), 1);
        let three = b.sylow_additive(3);
        let (q, proj) = b.quotient_brace(&three).unwrap();
        assert_eq!(q.order(), 2);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(proj[b.mul(x, y)], q.mul(proj[x], proj[y]));
                assert_eq!(proj[b.add(x, y)], q.add(proj[x], proj[y]));
            }
        }
        // the additive 2-part is a left ideal but not normal in (B, ∘)
        assert!(b.quotient_brace(&b.sylow_additive(2)).is_err());
    }
}

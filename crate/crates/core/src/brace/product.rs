use super::{trivial_brace, Brace, LeftBrace, MAX_TABLE_ORDER};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A homomorphism from `(actor, ∘)` into the brace automorphisms of
/// `target`, given as one image table per actor element.
#[derive(Clone, Debug)]
pub struct BraceAction {
    actor: Brace,
    target: Brace,
    maps: Vec<Vec<u32>>,
}

impl BraceAction {
    pub fn new(actor: &Brace, target: &Brace, maps: Vec<Vec<u32>>) -> Result<Self> {
        let (m, n) = (actor.order(), target.order());
        if maps.len() != m || maps.iter().any(|t| t.len() != n) {
            return Err(Error::Precondition(format!("action needs {m} tables of length {n}")));
        }
        for (g, t) in maps.iter().enumerate() {
            let p = Permutation::from_images(t.iter().map(|&x| x as usize).collect())
                .map_err(|_| Error::Precondition(format!("α({g}) is not a bijection")))?;
            for a in 0..n {
                for b in 0..n {
                    let (ia, ib) = (p.apply(a), p.apply(b));
                    if p.apply(target.add(a, b)) != target.add(ia, ib) || p.apply(target.mul(a, b)) != target.mul(ia, ib) {
                        return Err(Error::Precondition(format!("α({g}) is not a brace automorphism at ({a}, {b})")));
                    }
                }
            }
        }
        for g in 0..m {
            for h in 0..m {
                let gh = actor.mul(g, h);
                if (0..n).any(|x| maps[gh][x] != maps[g][maps[h][x] as usize]) {
                    return Err(Error::Precondition(format!("α is not multiplicative at ({g}, {h})")));
                }
            }
        }
        Ok(BraceAction { actor: actor.clone(), target: target.clone(), maps })
    }

    /// Every actor element acting as the identity.
    pub fn trivial(actor: &Brace, target: &Brace) -> Self {
        let id: Vec<u32> = (0..target.order() as u32).collect();
        BraceAction { actor: actor.clone(), target: target.clone(), maps: vec![id; actor.order()] }
    }

    pub fn actor(&self) -> &Brace {
        &self.actor
    }

    pub fn target(&self) -> &Brace {
        &self.target
    }

    pub fn apply(&self, g: usize, a: usize) -> usize {
        self.maps[g][a] as usize
    }
}

/// `I ⋊ L` with `(a₁,b₁)∘(a₂,b₂) = (a₁∘α(b₁)(a₂), b₁∘b₂)` and componentwise
/// addition. The pair `(a, b)` is the element `a·|L| + b`.
pub fn semidirect(i: &Brace, l: &Brace, alpha: &BraceAction) -> Result<Brace> {
    if alpha.actor.order() != l.order() || alpha.target.order() != i.order() {
        return Err(Error::Precondition("action does not match the factors".into()));
    }
    let (ni, nl) = (i.order(), l.order());
    let m = ni.checked_mul(nl).ok_or(Error::Overflow)?;
    if m > MAX_TABLE_ORDER {
        return Err(Error::TooLarge { what: "table brace", size: m, limit: MAX_TABLE_ORDER });
    }
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    for x in 0..m {
        let (a1, b1) = (x / nl, x % nl);
        for y in 0..m {
            let (a2, b2) = (y / nl, y % nl);
            add[x * m + y] = (i.add(a1, a2) * nl + l.add(b1, b2)) as u32;
            mul[x * m + y] = (i.mul(a1, alpha.apply(b1, a2)) * nl + l.mul(b1, b2)) as u32;
        }
    }
    Brace::from_tables(mul, add)
}

/// A table brace whose multiplicative group acts faithfully on `0..degree`.
#[derive(Clone, Debug)]
pub struct PermBrace {
    brace: Brace,
    perms: Vec<Permutation>,
}

impl PermBrace {
    pub fn new(brace: Brace, perms: Vec<Permutation>) -> Result<Self> {
        if perms.len() != brace.order() {
            return Err(Error::Precondition("one permutation per element required".into()));
        }
        let degree = perms[0].degree();
        if perms.iter().any(|p| p.degree() != degree) {
            return Err(Error::Precondition("permutations of unequal degree".into()));
        }
        let mut sorted = perms.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("action is not faithful".into()));
        }
        for a in 0..brace.order() {
            for b in 0..brace.order() {
                if perms[brace.mul(a, b)] != perms[a].mul(&perms[b]) {
                    return Err(Error::Precondition(format!("action is not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(PermBrace { brace, perms })
    }

    /// `Z/(n)` acting on `n` points by rotation.
    pub fn cyclic(n: usize) -> Result<Self> {
        let brace = trivial_brace(&[n])?;
        let c = Permutation::cycle(n);
        let perms = (0..n).map(|k| c.pow(k as u64)).collect();
        PermBrace::new(brace, perms)
    }

    pub fn brace(&self) -> &Brace {
        &self.brace
    }

    pub fn perm(&self, a: usize) -> &Permutation {
        &self.perms[a]
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }
}

/// `Z/(p) ≀ Q`: the semidirect product of the trivial brace `Z/(p)^Y` by
/// `Q`, where `α(g)((a_y)) = (a_{g⁻¹(y)})`. The result acts on
/// `Z/(p) × Y`, point `(b, y)` numbered `b·|Y| + y`, by
/// `((a), g)·(b, y) = (b + a_{g(y)}, g(y))`.
pub fn wreath(p: usize, q: &PermBrace) -> Result<PermBrace> {
    let k = q.degree();
    let base_order = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(p)).ok_or(Error::Overflow)?;
    if base_order.saturating_mul(q.brace.order()) > MAX_TABLE_ORDER {
        return Err(Error::TooLarge {
            what: "table brace",
            size: base_order.saturating_mul(q.brace.order()),
            limit: MAX_TABLE_ORDER,
        });
    }
    let base = trivial_brace(&vec![p; k])?;
    // coordinate y is digit y, most significant first
    let digits = |mut x: usize| {
        let mut d = vec![0usize; k];
        for y in (0..k).rev() {
            d[y] = x % p;
            x /= p;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * p + x);

    let maps: Vec<Vec<u32>> = (0..q.brace.order())
        .map(|g| {
            let gi = q.perms[g].inverse();
            (0..base_order)
                .map(|a| {
                    let d = digits(a);
                    let moved: Vec<usize> = (0..k).map(|y| d[gi.apply(y)]).collect();
                    encode(&moved) as u32
                })
                .collect()
        })
        .collect();
    let alpha = BraceAction::new(&q.brace, &base, maps)?;
    let brace = semidirect(&base, &q.brace, &alpha)?;

    let nq = q.brace.order();
    let perms = (0..brace.order())
        .map(|x| {
            let (a, g) = (digits(x / nq), &q.perms[x % nq]);
            let images = (0..p * k)
                .map(|pt| {
                    let (b, y) = (pt / k, pt % k);
                    let gy = g.apply(y);
                    (((b + a[gy]) % p) * k + gy) as u32
                })
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    PermBrace::new(brace, perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;

    #[test]
    fn trivial_action_gives_direct_product() {
        let i = trivial_brace(&[2]).unwrap();
        let l = trivial_brace(&[3]).unwrap();
        let b = semidirect(&i, &l, &BraceAction::trivial(&l, &i)).unwrap();
        assert_eq!(b.order(), 6);
        assert_eq!(b.add_table(), b.mul_table());
    }

    #[test]
    fn inversion_action_is_nonabelian_with_conjugation_lambda() {
        let i = trivial_brace(&[3]).unwrap();
        let l = trivial_brace(&[2]).unwrap();
        let alpha = BraceAction::new(&l, &i, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let b = semidirect(&i, &l, &alpha).unwrap();
        assert!((0..6).any(|x| (0..6).any(|y| b.mul(x, y) != b.mul(y, x))));
        // ideal factor a ↦ (a, 0), left-ideal factor c ↦ (0, c)
        for a in 0..3 {
            for c in 0..2 {
                let (ea, ec) = (a * 2, c);
                assert_eq!(b.lambda(ea, ec), ec);
                assert_eq!(b.lambda(ec, ea), b.mul(b.mul(ec, ea), b.inv(ec)));
            }
        }
        assert!(b.associated_solution().unwrap().validate().is_valid());
    }

    #[test]
    fn bad_actions_are_rejected() {
        let i = trivial_brace(&[3]).unwrap();
        let l = trivial_brace(&[2]).unwrap();
        assert!(BraceAction::new(&l, &i, vec![vec![0, 1, 2], vec![1, 2, 0]]).is_err());
        let l3 = trivial_brace(&[3]).unwrap();
        assert!(BraceAction::new(&l3, &i, vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).is_err());
    }

    #[test]
    fn wreath_orders() {
        let w = wreath(3, &PermBrace::cyclic(2).unwrap()).unwrap();
        assert_eq!(w.brace().order(), 18);
        let w = wreath(2, &PermBrace::cyclic(3).unwrap()).unwrap();
        assert_eq!(w.brace().order(), 3 * 8);
        assert_eq!(w.degree(), 6);
        let w = wreath(5, &PermBrace::cyclic(1).unwrap()).unwrap();
        assert_eq!(w.brace().order(), 5);
        assert_eq!(w.brace().add_table(), w.brace().mul_table());
    }

    #[test]
    fn wreath_action_generates_the_same_group() {
        let w = wreath(3, &PermBrace::cyclic(2).unwrap()).unwrap();
        let perms: Vec<_> = (0..18).map(|a| w.perm(a).clone()).collect();
        let g = PermGroup::close(6, &perms, 100).unwrap();
        assert_eq!(g.order(), 18);
    }
}

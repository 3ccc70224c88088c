//! Finite left braces stored as explicit operation tables.
//!
//! A left brace is a set with an abelian group `(B, +)` and a group
//! `(B, ∘)` sharing their neutral element and satisfying
//! `a∘(b+c) + a = a∘b + a∘c`. Elements are the indices `0..m`.

mod ideal;
mod product;

use serde::Serialize;

use crate::config::{Coverage, VerifyConfig};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::solution::Solution;

pub use ideal::SubsetFlags;
pub use product::{semidirect, wreath, BraceAction, PermBrace};

/// Largest order accepted for a table brace.
pub const MAX_TABLE_ORDER: usize = 1 << 16;

/// The operations shared by table braces and the implicit brace of a
/// permutation group.
pub trait LeftBrace {
    fn order(&self) -> usize;
    fn zero(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    /// `λ_a(b) = −a + a∘b`.
    fn lambda(&self, a: usize, b: usize) -> usize {
        self.add(self.neg(a), self.mul(a, b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[serde(tag = "kind")]
pub enum BraceViolation {
    #[error("tables have sizes {add} and {mul}, expected m² entries below m")]
    BadShape { add: usize, mul: usize },
    #[error("operation {op} is not a group: {detail}")]
    NotGroup { op: &'static str, detail: String },
    #[error("addition is not commutative at ({a}, {b})")]
    NotAbelian { a: usize, b: usize },
    #[error("neutral elements differ: 0 = {zero}, 1 = {one}")]
    NeutralMismatch { zero: usize, one: usize },
    #[error("brace axiom fails at ({a}, {b}, {c})")]
    BraceAxiomFail { a: usize, b: usize, c: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Brace {
    m: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    zero: usize,
    coverage: Coverage,
}

/// Returns the neutral element and inverse table of a group table, checking
/// closure, the Latin-square property and associativity.
fn check_group(
    m: usize,
    t: &[u32],
    op: &'static str,
    cfg: &VerifyConfig,
    salt: u64,
) -> std::result::Result<(usize, Vec<u32>, Coverage), BraceViolation> {
    let bad = |detail: String| BraceViolation::NotGroup { op, detail };
    for a in 0..m {
        let mut row = vec![false; m];
        let mut col = vec![false; m];
        for b in 0..m {
            let (r, c) = (t[a * m + b] as usize, t[b * m + a] as usize);
            if r >= m || c >= m || row[r] || col[c] {
                return Err(bad(format!("row or column {a} is not a permutation")));
            }
            row[r] = true;
            col[c] = true;
        }
    }
    let e = (0..m)
        .find(|&e| (0..m).all(|x| t[e * m + x] as usize == x && t[x * m + e] as usize == x))
        .ok_or_else(|| bad("no neutral element".into()))?;
    let (coverage, witness) = cfg.check_tuples(&[m, m, m], salt, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        let ab = t[a * m + b] as usize;
        let bc = t[b * m + c] as usize;
        (t[ab * m + c] != t[a * m + bc]).then_some((a, b, c))
    });
    if let Some((a, b, c)) = witness {
        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
    }
    let mut inv = vec![0u32; m];
    for a in 0..m {
        inv[a] = (0..m).find(|&b| t[a * m + b] as usize == e).expect("Latin square has inverses") as u32;
    }
    Ok((e, inv, coverage))
}

impl Brace {
    /// Validates a pair of operation tables, each `m × m` in row-major order.
    pub fn from_tables(mul: Vec<u32>, add: Vec<u32>) -> Result<Brace> {
        Self::from_tables_with(mul, add, &VerifyConfig::default())
    }

    /// As [`Brace::from_tables`], with triple checks scanned or sampled
    /// according to `cfg`.
    pub fn from_tables_with(mul: Vec<u32>, add: Vec<u32>, cfg: &VerifyConfig) -> Result<Brace> {
        let m = (add.len() as f64).sqrt().round() as usize;
        if m == 0 || m * m != add.len() || mul.len() != add.len() {
            return Err(BraceViolation::BadShape { add: add.len(), mul: mul.len() }.into());
        }
        if m > MAX_TABLE_ORDER {
            return Err(Error::TooLarge { what: "table brace", size: m, limit: MAX_TABLE_ORDER });
        }
        let (zero, neg, cov_add) = check_group(m, &add, "+", cfg, 0xadd)?;
        let (one, inv, cov_mul) = check_group(m, &mul, "∘", cfg, 0x111)?;
        for a in 0..m {
            for b in 0..a {
                if add[a * m + b] != add[b * m + a] {
                    return Err(BraceViolation::NotAbelian { a: b, b: a }.into());
                }
            }
        }
        if zero != one {
            return Err(BraceViolation::NeutralMismatch { zero, one }.into());
        }
        let brace = Brace { m, add, mul, neg, inv, zero, coverage: cov_add };
        let (cov_axiom, witness) = brace.check_axiom(cfg);
        if let Some((a, b, c)) = witness {
            return Err(BraceViolation::BraceAxiomFail { a, b, c }.into());
        }
        let coverage = [cov_add, cov_mul, cov_axiom]
            .into_iter()
            .min_by_key(|c| (c.is_exhaustive(), c.count()))
            .expect("three coverages");
        Ok(Brace { coverage, ..brace })
    }

    /// Checks `a∘(b+c) + a = a∘b + a∘c` over all (or sampled) triples.
    pub fn check_axiom(&self, cfg: &VerifyConfig) -> (Coverage, Option<(usize, usize, usize)>) {
        cfg.check_tuples(&[self.m, self.m, self.m], 0xb4ace, |v| {
            let (a, b, c) = (v[0], v[1], v[2]);
            let lhs = self.add(self.mul(a, self.add(b, c)), a);
            let rhs = self.add(self.mul(a, b), self.mul(a, c));
            (lhs != rhs).then_some((a, b, c))
        })
    }

    /// The weakest coverage among the checks run at construction.
    pub fn validation_coverage(&self) -> Coverage {
        self.coverage
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    /// `λ_a` as an image table.
    pub fn lambda_table(&self, a: usize) -> Vec<u32> {
        (0..self.m).map(|b| self.lambda(a, b) as u32).collect()
    }

    pub fn lambda_perm(&self, a: usize) -> Permutation {
        Permutation::from_images_unchecked(self.lambda_table(a))
    }

    /// Additive order of an element.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn multiplicative_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.zero {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The solution on the elements of `B` with `σ_a = λ_a`.
    pub fn associated_solution(&self) -> Result<Solution> {
        Solution::new((0..self.m).map(|a| self.lambda_perm(a)).collect())
    }

    pub fn fingerprint(&self) -> BraceFingerprint {
        let profile = |orders: Vec<usize>| {
            let mut counts = std::collections::BTreeMap::new();
            for o in orders {
                *counts.entry(o).or_insert(0usize) += 1;
            }
            counts.into_iter().collect()
        };
        BraceFingerprint {
            order: self.m,
            additive_orders: profile((0..self.m).map(|a| self.additive_order(a)).collect()),
            multiplicative_orders: profile((0..self.m).map(|a| self.multiplicative_order(a)).collect()),
            socle_order: self.socle().len(),
        }
    }
}

/// Cheap isomorphism invariants: element-order profiles as
/// `(order, count)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraceFingerprint {
    pub order: usize,
    pub additive_orders: Vec<(usize, usize)>,
    pub multiplicative_orders: Vec<(usize, usize)>,
    pub socle_order: usize,
}

impl LeftBrace for Brace {
    fn order(&self) -> usize {
        self.m
    }
    fn zero(&self) -> usize {
        self.zero
    }
    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.m + b] as usize
    }
    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.m + b] as usize
    }
    fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
}

/// Addition table of `Z/(n₁) × ⋯ × Z/(n_k)` in mixed radix, first factor
/// most significant.
fn product_of_cyclic(orders: &[usize]) -> Vec<u32> {
    let m: usize = orders.iter().product();
    let digits = |mut x: usize| {
        let mut d = vec![0; orders.len()];
        for (i, &n) in orders.iter().enumerate().rev() {
            d[i] = x % n;
            x /= n;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().zip(orders).fold(0, |acc, (&x, &n)| acc * n + x);
    let mut t = vec![0u32; m * m];
    for a in 0..m {
        let da = digits(a);
        for b in 0..m {
            let db = digits(b);
            let s: Vec<usize> = da.iter().zip(&db).zip(orders).map(|((x, y), n)| (x + y) % n).collect();
            t[a * m + b] = encode(&s) as u32;
        }
    }
    t
}

/// The trivial brace on `Z/(n₁) × ⋯ × Z/(n_k)`, with `∘ = +`.
pub fn trivial_brace(orders: &[usize]) -> Result<Brace> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::Precondition("trivial brace needs positive cyclic orders".into()));
    }
    let m = orders.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n)).ok_or(Error::Overflow)?;
    if m > MAX_TABLE_ORDER {
        return Err(Error::TooLarge { what: "table brace", size: m, limit: MAX_TABLE_ORDER });
    }
    let t = product_of_cyclic(orders);
    Brace::from_tables(t.clone(), t)
}

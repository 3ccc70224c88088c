//! Brute-force oracle shared by the integration tests and the acceptance
//! harness. Works on plain `Vec<Vec<usize>>` tables, independently of the
//! library's solution type.

#![allow(dead_code)]

pub type Table = Vec<Vec<usize>>;

/// All permutations of `0..n` by Heap's algorithm, sorted.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out.sort();
    out
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x] = i;
    }
    q
}

/// `r(x, y) = (σ_x(y), τ_y(x))` with `τ_y(x) = σ⁻¹_{σ_x(y)}(x)`; checks
/// involutivity, bijectivity of every `τ_y`, and the braid relation
/// `r₁₂ r₂₃ r₁₂ = r₂₃ r₁₂ r₂₃` on all triples.
pub fn is_solution(t: &Table) -> bool {
    let n = t.len();
    let inv: Vec<Vec<usize>> = t.iter().map(|p| inverse(p)).collect();
    let r = |x: usize, y: usize| {
        let u = t[x][y];
        (u, inv[u][x])
    };
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let tau = r(x, y).1;
            if seen[tau] {
                return false;
            }
            seen[tau] = true;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = r(x, y);
            if r(a, b) != (x, y) {
                return false;
            }
        }
    }
    let r12 = |(a, b, c): (usize, usize, usize)| {
        let (u, v) = r(a, b);
        (u, v, c)
    };
    let r23 = |(a, b, c): (usize, usize, usize)| {
        let (u, v) = r(b, c);
        (a, u, v)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = (x, y, z);
                if r12(r23(r12(w))) != r23(r12(r23(w))) {
                    return false;
                }
            }
        }
    }
    true
}

/// `σ'_{π(x)} = π σ_x π⁻¹`.
pub fn relabel(t: &Table, pi: &[usize]) -> Table {
    let n = t.len();
    let pinv = inverse(pi);
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[pi[x]][y] = pi[t[x][pinv[y]]];
        }
    }
    out
}

pub fn canonical(t: &Table, all: &[Vec<usize>]) -> Table {
    all.iter().map(|pi| relabel(t, pi)).min().expect("at least one relabelling")
}

/// Orbits of the group generated by the rows, counted by union-find.
pub fn orbit_count(t: &Table) -> usize {
    let n = t.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for row in t {
        for (y, &z) in row.iter().enumerate() {
            let (a, b) = (find(&mut parent, y), find(&mut parent, z));
            parent[a] = b;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

/// Canonical representatives of all solutions of size `n`, sorted, found by
/// scanning every table of `n` permutations.
pub fn brute_classes(n: usize, indecomposable_only: bool) -> Vec<Table> {
    let all = perms(n);
    let mut idx = vec![0usize; n];
    let mut classes = std::collections::BTreeSet::new();
    loop {
        let t: Table = idx.iter().map(|&i| all[i].clone()).collect();
        if is_solution(&t) && (!indecomposable_only || orbit_count(&t) == 1) {
            classes.insert(canonical(&t, &all));
        }
        let mut k = n;
        loop {
            if k == 0 {
                return classes.into_iter().collect();
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < all.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

use super::Solution;

/// Per-point invariant preserved by isomorphisms: size of the retract class
/// and cycle type of `σ_x`.
fn point_profile(s: &Solution) -> Vec<(usize, Vec<usize>)> {
    let (_, proj) = s.retract();
    let mut class_size = vec![0usize; s.size()];
    for &c in &proj.map {
        class_size[c] += 1;
    }
    (0..s.size()).map(|x| (class_size[proj.map[x]], s.sigma(x).cycle_type())).collect()
}

struct Search<'a> {
    a: &'a Solution,
    b: &'a Solution,
    fwd: Vec<Option<usize>>,
    bwd: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    /// Assigns `x ↦ y` and everything it forces via
    /// `f(σ_x(z)) = σ'_{f(x)}(f(z))`; returns false on contradiction.
    fn assign(&mut self, x: usize, y: usize, profile_a: &[(usize, Vec<usize>)], profile_b: &[(usize, Vec<usize>)]) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((u, v)) = pending.pop() {
            match (self.fwd[u], self.bwd[v]) {
                (Some(w), _) if w == v => continue,
                (Some(_), _) | (None, Some(_)) => return false,
                (None, None) => {}
            }
            if profile_a[u] != profile_b[v] {
                return false;
            }
            self.fwd[u] = Some(v);
            self.bwd[v] = Some(u);
            self.assigned.push(u);
            for i in 0..self.assigned.len() {
                let c = self.assigned[i];
                let d = self.fwd[c].expect("assigned");
                let (a, b) = (self.a, self.b);
                pending.push((a.sigma(u).apply(c), b.sigma(v).apply(d)));
                pending.push((a.sigma(c).apply(u), b.sigma(d).apply(v)));
                pending.push((a.sigma_inv(u).apply(c), b.sigma_inv(v).apply(d)));
                pending.push((a.sigma_inv(c).apply(u), b.sigma_inv(d).apply(v)));
            }
        }
        true
    }

    fn snapshot(&self) -> (Vec<Option<usize>>, Vec<Option<usize>>, usize) {
        (self.fwd.clone(), self.bwd.clone(), self.assigned.len())
    }

    fn restore(&mut self, snap: (Vec<Option<usize>>, Vec<Option<usize>>, usize)) {
        self.fwd = snap.0;
        self.bwd = snap.1;
        self.assigned.truncate(snap.2);
    }

    fn run(&mut self, pa: &[(usize, Vec<usize>)], pb: &[(usize, Vec<usize>)]) -> bool {
        let Some(x) = self.fwd.iter().position(Option::is_none) else {
            return true;
        };
        for y in 0..self.b.size() {
            if self.bwd[y].is_some() || pa[x] != pb[y] {
                continue;
            }
            let snap = self.snapshot();
            if self.assign(x, y, pa, pb) && self.run(pa, pb) {
                return true;
            }
            self.restore(snap);
        }
        false
    }
}

impl Solution {
    /// An isomorphism onto `other` as a point map, if one exists. The search
    /// tries target points in increasing order, so the result is
    /// deterministic.
    pub fn is_isomorphic(&self, other: &Solution) -> Option<Vec<usize>> {
        if self.size() != other.size() {
            return None;
        }
        let pa = point_profile(self);
        let pb = point_profile(other);
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        let n = self.size();
        let mut search = Search { a: self, b: other, fwd: vec![None; n], bwd: vec![None; n], assigned: Vec::new() };
        search.run(&pa, &pb).then(|| search.fwd.into_iter().map(|y| y.expect("complete")).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::solution::SolutionHom;

    fn relabel(s: &Solution, pi: &Permutation) -> Solution {
        // σ'_{π(x)} = π σ_x π⁻¹
        let mut sigma = vec![Permutation::identity(s.size()); s.size()];
        for x in 0..s.size() {
            sigma[pi.apply(x)] = s.sigma(x).conjugate_by(pi);
        }
        Solution::new(sigma).unwrap()
    }

    fn mixed4() -> Solution {
        let id = Permutation::identity(4);
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        Solution::new(vec![id.clone(), id, t.clone(), t]).unwrap()
    }

    #[test]
    fn self_iso_is_identity() {
        let s = mixed4();
        assert_eq!(s.is_isomorphic(&s), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn trivial_vs_flip() {
        let t = Permutation::from_images(vec![1, 0]).unwrap();
        let flip = Solution::new(vec![t.clone(), t]).unwrap();
        assert!(Solution::trivial(2).is_isomorphic(&flip).is_none());
    }

    #[test]
    fn relabelled_copies_are_found() {
        let s = mixed4();
        let pi = Permutation::from_images(vec![2, 3, 0, 1]).unwrap();
        let r = relabel(&s, &pi);
        let f = s.is_isomorphic(&r).expect("isomorphic");
        assert!(SolutionHom { map: f }.is_homomorphism(&s, &r));
    }
}

//! Permutations and permutation groups with orbit-stabilizer chains.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// A permutation of `0..degree`, stored as the image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn new(map: Vec<u32>) -> Self {
        debug_assert!({
            let mut seen = vec![false; map.len()];
            map.iter().all(|&x| {
                let ok = (x as usize) < map.len() && !seen[x as usize];
                if ok {
                    seen[x as usize] = true;
                }
                ok
            })
        });
        Perm { map }
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            map: (0..n as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { map: inv }
    }

    /// Conjugate `g^-1 * self * g`.
    pub fn conjugated_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.then(self).is_identity()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.map.iter().enumerate().any(|(i, &x)| i as u32 == x)
    }

    /// The orbit partition refinement: merges `uf` classes along the cycles.
    pub fn union_into(&self, uf: &mut UnionFind) {
        for (i, &x) in self.map.iter().enumerate() {
            uf.union(i, x as usize);
        }
    }
}

/// Union-find over `0..n`.
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[x] as usize;
            self.parent[x] = self.parent[up];
            x = up;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u32;
        }
    }
}

struct Level {
    point: usize,
    /// generators registered at this depth: they fix the base points of all
    /// shallower levels and move `point` (or deeper)
    gens: Vec<Perm>,
    /// orbit point -> transversal element mapping `point` to it
    transversal: BTreeMap<u32, Perm>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(point as u32, Perm::identity(degree));
        Level {
            point,
            gens: Vec::new(),
            transversal,
        }
    }
}

/// A permutation group given by generators, with a stabilizer chain for
/// exact order, membership, and element sweeps.
///
/// The effective generating set of level `i` is the union of the generators
/// registered at levels `>= i` (all of which fix the prefix `b_0..b_{i-1}`).
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: Vec::new(),
            chain: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: &[Perm]) -> Self {
        let mut g = PermGroup::trivial(degree);
        for p in gens {
            g.extend(p.clone());
        }
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.chain
            .iter()
            .map(|l| l.transversal.len() as u128)
            .product()
    }

    /// Strips `g` through the chain; returns the residue and the level where
    /// sifting stopped.
    fn strip(&self, g: Perm) -> (Perm, usize) {
        self.strip_from(g, 0)
    }

    fn strip_from(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (i, level) in self.chain.iter().enumerate().skip(start) {
            let u = g.apply(level.point) as u32;
            match level.transversal.get(&u) {
                Some(t) => g = g.then(&t.inverse()),
                None => return (g, i),
            }
        }
        (g, self.chain.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (res, _) = self.strip(g.clone());
        res.is_identity()
    }

    /// Adds a generator, maintaining the stabilizer chain.
    pub fn extend(&mut self, g: Perm) {
        assert_eq!(g.degree(), self.degree);
        let (res, level) = self.strip(g.clone());
        if res.is_identity() {
            return;
        }
        self.gens.push(g);
        self.register(res, level);
    }

    fn push_level_for(&mut self, res: &Perm) {
        let point = (0..self.degree)
            .find(|&x| res.apply(x) != x)
            .expect("non-identity residue moves a point");
        self.chain.push(Level::new(point, self.degree));
    }

    /// Registers a residue at `level` (it fixes all shallower base points)
    /// and re-establishes orbits and Schreier closure from the deepest
    /// affected level upwards.
    fn register(&mut self, res: Perm, level: usize) {
        debug_assert!(!res.is_identity());
        if level == self.chain.len() {
            self.push_level_for(&res);
        }
        self.chain[level].gens.push(res);
        let mut i = level as isize;
        while i >= 0 {
            let li = i as usize;
            self.recompute_orbit(li);
            match self.find_violation(li) {
                Some((r, lvl)) => {
                    if lvl == self.chain.len() {
                        self.push_level_for(&r);
                    }
                    self.chain[lvl].gens.push(r);
                    i = lvl as isize;
                }
                None => i -= 1,
            }
        }
    }

    fn effective_gens(&self, level: usize) -> Vec<Perm> {
        self.chain[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn recompute_orbit(&mut self, level: usize) {
        let gens = self.effective_gens(level);
        let point = self.chain[level].point;
        let mut trans = BTreeMap::new();
        trans.insert(point as u32, Perm::identity(self.degree));
        let mut queue: Vec<u32> = vec![point as u32];
        while let Some(u) = queue.pop() {
            let tu = trans[&u].clone();
            for g in &gens {
                let v = g.apply(u as usize) as u32;
                if !trans.contains_key(&v) {
                    trans.insert(v, tu.then(g));
                    queue.push(v);
                }
            }
        }
        self.chain[level].transversal = trans;
    }

    /// First Schreier generator at `level` that does not sift to the
    /// identity, as (residue, level to register it at).
    fn find_violation(&self, level: usize) -> Option<(Perm, usize)> {
        let gens = self.effective_gens(level);
        let l = &self.chain[level];
        for tu in l.transversal.values() {
            for s in &gens {
                let img = tu.then(s);
                let v = img.apply(l.point) as u32;
                let tv = l
                    .transversal
                    .get(&v)
                    .expect("orbit is closed under its generators");
                let schreier = img.then(&tv.inverse());
                let (r, lvl) = self.strip_from(schreier, level + 1);
                if !r.is_identity() {
                    return Some((r, lvl));
                }
            }
        }
        None
    }

    /// Calls `f` on every element. Caller is responsible for checking that
    /// the order is small enough to sweep.
    pub fn for_each_element<F: FnMut(&Perm)>(&self, f: &mut F) {
        let id = Perm::identity(self.degree);
        self.sweep(0, &id, f);
    }

    fn sweep<F: FnMut(&Perm)>(&self, level: usize, acc: &Perm, f: &mut F) {
        if level == self.chain.len() {
            f(acc);
            return;
        }
        for t in self.chain[level].transversal.values() {
            // deeper transversals first so acc = t_{k-1} ... t_1 t_0
            self.sweep(level + 1, &t.then(acc), f);
        }
    }

    /// Orbit partition of the points under the group generators.
    pub fn orbits(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.gens {
            g.union_into(&mut uf);
        }
        (0..self.degree).map(|i| uf.find(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
        let mut map: Vec<u32> = (0..n as u32).collect();
        for i in (1..n).rev() {
            map.swap(i, rng.gen_range(0..=i));
        }
        Perm::new(map)
    }

    #[test]
    fn compose_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = random_perm(&mut rng, 8);
            assert!(g.then(&g.inverse()).is_identity());
            let h = random_perm(&mut rng, 8);
            let x = rng.gen_range(0..8);
            assert_eq!(g.then(&h).apply(x), h.apply(g.apply(x)));
        }
    }

    #[test]
    fn symmetric_group_order() {
        for n in 2..7usize {
            let cycle = Perm::new((0..n as u32).map(|i| (i + 1) % n as u32).collect());
            let mut swap: Vec<u32> = (0..n as u32).collect();
            swap.swap(0, 1);
            let g = PermGroup::from_generators(n, &[cycle, Perm::new(swap)]);
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(g.order(), fact);
        }
    }

    #[test]
    fn cyclic_group_membership() {
        let c5 = Perm::new(vec![1, 2, 3, 4, 0]);
        let g = PermGroup::from_generators(5, &[c5.clone()]);
        assert_eq!(g.order(), 5);
        assert!(g.contains(&c5.then(&c5)));
        let mut t: Vec<u32> = (0..5).collect();
        t.swap(0, 1);
        assert!(!g.contains(&Perm::new(t)));
    }

    #[test]
    fn element_sweep_matches_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let gens: Vec<Perm> = (0..2).map(|_| random_perm(&mut rng, 6)).collect();
            let g = PermGroup::from_generators(6, &gens);
            let mut seen = alloc::collections::BTreeSet::new();
            g.for_each_element(&mut |p| {
                assert!(seen.insert(p.clone()), "duplicate element in sweep");
            });
            assert_eq!(seen.len() as u128, g.order());
            for p in &seen {
                assert!(g.contains(p));
            }
        }
    }

    #[test]
    fn orbits_of_product_action() {
        // <(0 1)(2 3)> has orbits {0,1},{2,3},{4}
        let g = PermGroup::from_generators(5, &[Perm::new(vec![1, 0, 3, 2, 4])]);
        let o = g.orbits();
        assert_eq!(o[0], o[1]);
        assert_eq!(o[2], o[3]);
        assert_ne!(o[0], o[2]);
        assert_ne!(o[4], o[0]);
    }
}

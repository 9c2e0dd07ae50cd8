//! Permutation groups with a deterministic Schreier-Sims chain.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use super::{Perm, PermError, DEGREE_BUDGET};

struct Level {
    point: usize,
    /// strong generators first placed at this level (they fix all shallower
    /// base points)
    added: Vec<Perm>,
    /// transversal[x] = coset representative u with u(point) = x
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// A finitely generated subgroup of `S_d` with cached base and strong
/// generating set. Construction is eager; all queries afterwards are
/// read-only.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    chain: Vec<Level>,
    order: BigUint,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<PermGroup, PermError> {
        Self::with_base_prefix(degree, &[], gens)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::new(degree, Vec::new()).expect("trivial group")
    }

    /// Builds the chain with a forced initial run of base points (used to
    /// read off pointwise stabilizers); the remaining base points are chosen
    /// as the smallest moved points, ascending.
    pub fn with_base_prefix(
        degree: usize,
        base_prefix: &[usize],
        gens: Vec<Perm>,
    ) -> Result<PermGroup, PermError> {
        if degree > DEGREE_BUDGET {
            return Err(PermError::DegreeBudgetExceeded);
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch);
            }
        }
        let mut group = PermGroup {
            degree,
            gens: Vec::new(),
            chain: Vec::new(),
            order: BigUint::one(),
        };
        for &b in base_prefix {
            assert!(b < degree);
            group.chain.push(Level {
                point: b,
                added: Vec::new(),
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        let mut clean = Vec::new();
        for g in gens {
            if !g.is_identity() && !clean.contains(&g) {
                clean.push(g);
            }
        }
        group.gens = clean;
        group.build();
        Ok(group)
    }

    fn strong_gens_at(&self, level: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        for lv in &self.chain[level..] {
            for g in &lv.added {
                out.push(g.clone());
            }
        }
        out
    }

    fn recompute_orbit(&mut self, level: usize) {
        let gens = self.strong_gens_at(level);
        let point = self.chain[level].point;
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[point] = Some(Perm::identity(self.degree));
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            let ux = transversal[x].clone().unwrap();
            for s in &gens {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(s.compose(&ux));
                    orbit.push(y);
                }
            }
        }
        self.chain[level].transversal = transversal;
        self.chain[level].orbit = orbit;
    }

    /// Strips `g` through levels `from..`; returns the level index where the
    /// strip stops together with the residue (identity iff fully stripped).
    fn sift_from(&self, from: usize, g: &Perm) -> (usize, Perm) {
        let mut g = g.clone();
        for i in from..self.chain.len() {
            let x = g.apply(self.chain[i].point);
            match &self.chain[i].transversal.get(x).and_then(|t| t.clone()) {
                Some(u) => {
                    g = u.inverse().compose(&g);
                }
                None => return (i, g),
            }
        }
        (self.chain.len(), g)
    }

    fn place(&mut self, level: usize, g: Perm) {
        if level == self.chain.len() {
            let b = (0..self.degree)
                .find(|&x| g.apply(x) != x)
                .expect("residue is not the identity");
            self.chain.push(Level {
                point: b,
                added: Vec::new(),
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        self.chain[level].added.push(g);
    }

    fn build(&mut self) {
        for g in self.gens.clone() {
            let (j, res) = self.sift_from(0, &g);
            if !res.is_identity() {
                self.place(j, res);
            }
        }
        for i in 0..self.chain.len() {
            self.recompute_orbit(i);
        }
        let mut i = self.chain.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            self.recompute_orbit(iu);
            let mut dirty: Option<usize> = None;
            'scan: for oi in 0..self.chain[iu].orbit.len() {
                let x = self.chain[iu].orbit[oi];
                let ux = self.chain[iu].transversal[x].clone().unwrap();
                for s in self.strong_gens_at(iu) {
                    let y = s.apply(x);
                    let uy = self.chain[iu].transversal[y].clone().unwrap();
                    let schreier = uy.inverse().compose(&s).compose(&ux);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (j, res) = self.sift_from(iu + 1, &schreier);
                    if !res.is_identity() {
                        self.place(j, res);
                        dirty = Some(j);
                        break 'scan;
                    }
                }
            }
            match dirty {
                Some(j) => {
                    for k in iu..=j.min(self.chain.len() - 1) {
                        self.recompute_orbit(k);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        // verification sweep: every Schreier generator must strip completely
        for iu in 0..self.chain.len() {
            for oi in 0..self.chain[iu].orbit.len() {
                let x = self.chain[iu].orbit[oi];
                let ux = self.chain[iu].transversal[x].clone().unwrap();
                for s in self.strong_gens_at(iu) {
                    let y = s.apply(x);
                    let uy = self.chain[iu].transversal[y].clone().unwrap();
                    let schreier = uy.inverse().compose(&s).compose(&ux);
                    let (_, res) = self.sift_from(iu + 1, &schreier);
                    assert!(res.is_identity(), "strong generating set verification failed");
                }
            }
        }
        let mut order = BigUint::one();
        for lv in &self.chain {
            order *= BigUint::from(lv.orbit.len().max(1));
        }
        self.order = order;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The generators the group was constructed from.
    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (_, res) = self.sift_from(0, g);
        res.is_identity()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group_as(&self, other: &PermGroup) -> bool {
        self.order == other.order && self.is_subgroup_of(other)
    }

    /// Number of stabilizer-chain levels (used by the pointwise-stabilizer
    /// accessor below).
    pub fn base_len(&self) -> usize {
        self.chain.len()
    }

    /// Generators of the pointwise stabilizer of the first `k` base points;
    /// only meaningful when the group was built with a base prefix of
    /// length >= k.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        if k >= self.chain.len() {
            return Vec::new();
        }
        self.strong_gens_at(k)
    }

    /// The element with the given mixed-radix transversal coordinates; with
    /// uniform coordinates this samples the group uniformly.
    pub fn element_from_coords(&self, coords: &[usize]) -> Perm {
        let mut g = Perm::identity(self.degree);
        for (lv, &c) in self.chain.iter().zip(coords.iter()) {
            let x = lv.orbit[c % lv.orbit.len()];
            let u = lv.transversal[x].clone().unwrap();
            g = g.compose(&u);
        }
        g
    }

    pub fn orbit_sizes_of_chain(&self) -> Vec<usize> {
        self.chain.iter().map(|lv| lv.orbit.len()).collect()
    }

    /// Orbits of the natural action on `{0..d-1}`, each sorted, in order of
    /// their least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for g in &self.gens {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Primitivity by minimal block systems: for each point q != 0 the
    /// finest block containing {0, q} is computed; the action is primitive
    /// iff it is transitive and every such block is the full point set.
    pub fn is_primitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        if self.degree <= 2 {
            return true;
        }
        for q in 1..self.degree {
            let block = blocks_containing(self.degree, &self.gens, 0, q);
            if block.len() < self.degree {
                return false;
            }
        }
        true
    }

    /// Smallest normal subgroup containing the seeds.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<PermGroup, PermError> {
        for s in seeds {
            if !self.contains(s) {
                return Err(PermError::NotASubset);
            }
        }
        let mut hgens: Vec<Perm> = Vec::new();
        for s in seeds {
            if !s.is_identity() && !hgens.contains(s) {
                hgens.push(s.clone());
            }
        }
        let mut h = PermGroup::new(self.degree, hgens.clone())?;
        loop {
            let mut fresh = Vec::new();
            for g in &self.gens {
                for x in &hgens {
                    let c = x.conjugate(g);
                    if !h.contains(&c) && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(h);
            }
            hgens.extend(fresh);
            h = PermGroup::new(self.degree, hgens.clone())?;
        }
    }

    /// Exact classification against `A_d` and `S_d` by order comparison.
    pub fn classify(&self) -> GroupClass {
        let d = self.degree;
        let mut fact = BigUint::one();
        for k in 2..=d {
            fact *= BigUint::from(k);
        }
        if self.order == fact {
            return GroupClass::Symmetric;
        }
        if d >= 2 && self.order == fact / BigUint::from(2u32) {
            return GroupClass::Alternating;
        }
        GroupClass::Other
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupClass {
    Alternating,
    Symmetric,
    Other,
}

/// The finest block (for the group generated by `gens`) containing both
/// seed points, via the union-find closure.
pub fn blocks_containing(degree: usize, gens: &[Perm], a: usize, b: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(a, b)];
    let ra = find(&mut parent, a);
    let rb = find(&mut parent, b);
    parent[ra] = rb;
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let rx = find(&mut parent, gx);
            let ry = find(&mut parent, gy);
            if rx != ry {
                parent[rx] = ry;
                queue.push((gx, gy));
            }
        }
    }
    let root = find(&mut parent, a);
    (0..degree).filter(|&x| find(&mut parent, x) == root).collect()
}

/// Full element enumeration by closure; `None` if the group exceeds `cap`.
pub fn naive_elements(degree: usize, gens: &[Perm], cap: usize) -> Option<BTreeSet<Perm>> {
    let mut set = BTreeSet::new();
    set.insert(Perm::identity(degree));
    let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.compose(&x);
            if !set.contains(&y) {
                if set.len() >= cap {
                    return None;
                }
                set.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Some(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn gens(d: usize, strs: &[&str]) -> Vec<Perm> {
        strs.iter().map(|s| Perm::parse(s, Some(d)).unwrap()).collect()
    }

    #[test]
    fn a6_from_three_cycles_has_order_360() {
        let g = PermGroup::new(
            6,
            gens(6, &["(1 2 3)", "(2 3 4)", "(3 4 5)", "(4 5 6)"]),
        )
        .unwrap();
        assert_eq!(g.order().to_string(), "360");
        assert_eq!(g.classify(), GroupClass::Alternating);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(5);
        assert!(g.order().is_one());
        assert!(g.contains(&Perm::identity(5)));
        assert!(!g.contains(&Perm::parse("(1 2)", Some(5)).unwrap()));
    }

    #[test]
    fn s28_has_factorial_order() {
        use core::fmt::Write;
        let mut big = "(1".to_string();
        for k in 2..=28 {
            let _ = write!(big, " {}", k);
        }
        big.push(')');
        let g = PermGroup::new(28, gens(28, &["(1 2)", &big])).unwrap();
        let mut fact = BigUint::one();
        for k in 2..=28u32 {
            fact *= BigUint::from(k);
        }
        assert_eq!(g.order(), &fact);
        assert_eq!(g.classify(), GroupClass::Symmetric);
    }

    #[test]
    fn transitivity_and_blocks() {
        let c6 = PermGroup::new(6, gens(6, &["(1 2 3 4 5 6)"])).unwrap();
        assert!(c6.is_transitive());
        assert!(!c6.is_primitive());
        let block = blocks_containing(6, c6.generators(), 0, 3);
        assert_eq!(block, vec![0, 3]);

        let s5 = PermGroup::new(5, gens(5, &["(1 2)", "(1 2 3 4 5)"])).unwrap();
        assert!(s5.is_primitive());

        let part = PermGroup::new(5, gens(5, &["(1 2 3)"])).unwrap();
        assert!(!part.is_transitive());
        assert!(!part.is_primitive());
    }

    #[test]
    fn normal_closures() {
        let s5 = PermGroup::new(5, gens(5, &["(1 2)", "(1 2 3 4 5)"])).unwrap();
        let cl = s5.normal_closure(&gens(5, &["(1 2 3)"])).unwrap();
        assert_eq!(cl.order().to_string(), "60");

        let a6 = PermGroup::new(6, gens(6, &["(1 2 3)", "(2 3 4)", "(3 4 5)", "(4 5 6)"])).unwrap();
        let cl = a6.normal_closure(&gens(6, &["(1 2 3 4 5)"])).unwrap();
        assert_eq!(cl.order().to_string(), "360");

        let triv = s5.normal_closure(&[Perm::identity(5)]).unwrap();
        assert!(triv.is_trivial());

        assert_eq!(
            s5.normal_closure(&gens(6, &["(1 6)"])).err(),
            Some(PermError::NotASubset)
        );
    }

    #[test]
    fn bsgs_matches_naive_enumeration() {
        let sets: &[&[&str]] = &[
            &["(1 2 3 4)", "(1 2)"],
            &["(1 2 3)", "(4 5 6)"],
            &["(1 2)(3 4)", "(1 3)(2 4)"],
            &["(1 2 3 4 5 6 7)"],
        ];
        for strs in sets {
            let d = 7;
            let gs = gens(d, strs);
            let grp = PermGroup::new(d, gs.clone()).unwrap();
            let all = naive_elements(d, &gs, 100000).unwrap();
            assert_eq!(grp.order(), &BigUint::from(all.len()));
            for el in &all {
                assert!(grp.contains(el));
            }
        }
    }
}

//! The special permutations and group-theoretic checks the realization
//! arguments rely on: the canonical p-cycle and its normalizing element,
//! the cycle-based criteria for containing the alternating group, Frattini
//! quotients of p-groups, Goursat data for subgroups of direct products,
//! and the subgroup generated by p-elements.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use rand_core::{RngCore, SeedableRng};

use super::{CycleType, Perm, PermError, PermGroup};

/// Fixed seed for the sampling schedule of [`p_part_subgroup`]; recorded in
/// certificates that rely on a sampled answer.
pub const P_PART_SAMPLE_SEED: u64 = 0x7061_7274;

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Smallest primitive root mod the odd prime `p`.
pub fn smallest_primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'cand: for g in 2..p {
        for &f in &factors {
            if powmod(g, (p - 1) / f, p) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("primitive root exists for every prime")
}

/// The p-cycle `(1, ..., p)` inside `S_d`.
pub fn make_tau(p: u64, d: usize) -> Result<Perm, PermError> {
    let p = p as usize;
    if p > d || p < 2 {
        return Err(PermError::BadDegree);
    }
    let mut images: Vec<u16> = (0..d as u16).collect();
    for i in 0..p {
        images[i] = ((i + 1) % p) as u16;
    }
    Ok(Perm::from_images(images).unwrap())
}

/// The element of order `p-1` supported on `{1..p}` whose conjugation
/// generates the automorphisms of the canonical p-cycle: multiplication by
/// the smallest primitive root on residues.
pub fn make_theta(p: u64, d: usize) -> Result<Perm, PermError> {
    let pu = p as usize;
    if pu > d || pu < 3 {
        return Err(PermError::BadDegree);
    }
    let g = smallest_primitive_root(p);
    let mut images: Vec<u16> = (0..d as u16).collect();
    for i in 0..pu {
        images[i] = ((g as usize * i) % pu) as u16;
    }
    Ok(Perm::from_images(images).unwrap())
}

/// `true` iff `p = (q^n - 1)/(q - 1)` for some prime power `q` and `n >= 2`.
pub fn is_projective_prime(p: u64) -> bool {
    for q in 2..=p {
        if !is_prime_power(q) {
            continue;
        }
        // 1 + q + q^2 + ... ; stop once past p
        let mut sum: u64 = 1 + q;
        let mut pw = q;
        loop {
            if sum == p {
                return true;
            }
            if sum > p {
                break;
            }
            pw = match pw.checked_mul(q) {
                Some(v) => v,
                None => break,
            };
            sum = match sum.checked_add(pw) {
                Some(v) => v,
                None => break,
            };
        }
        if q > p / 2 + 1 {
            break;
        }
    }
    false
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            while m % q == 0 {
                m /= q;
            }
            return m == 1;
        }
        q += 1;
    }
    true
}

/// Outcome of the cycle-based alternating-group criteria.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JonesVerdict {
    /// The group provably contains `A_d`; the tag names which clause fired.
    ContainsAlt(&'static str),
    Inconclusive,
}

/// Decides whether a primitive group of degree `d` containing the canonical
/// p-cycle and an element `gamma` generating the tame inertia is forced to
/// contain `A_d`. `t = d - p`; `t = 0` selects the prime-degree clause set.
pub fn jones_criterion(d: usize, p: u64, gamma: &Perm, t: u64) -> JonesVerdict {
    if t >= 3 && t <= p - 1 {
        return JonesVerdict::ContainsAlt("tame tail between 3 and p-1");
    }
    let ty = gamma.cycle_type();
    let ord = ty.order();
    let mut j = 1u64;
    while j <= ord {
        if ord % j == 0 && j < ord {
            let pw = ty.power(j);
            if let Some(len) = pw.is_single_cycle() {
                if d - len >= 3 {
                    return JonesVerdict::ContainsAlt("a power of gamma is a cycle fixing >= 3 points");
                }
            }
        }
        j += 1;
    }
    if t == 0 && d as u64 == p {
        if p != 11 && p != 23 && !is_projective_prime(p) && !is_theta_power_type(&ty, p) {
            return JonesVerdict::ContainsAlt("prime degree with non-normalizer gamma");
        }
    }
    JonesVerdict::Inconclusive
}

/// Is this the cycle type of some nontrivial power of theta in `S_p`
/// (one fixed point, all other cycles of one common length)?
fn is_theta_power_type(ty: &CycleType, p: u64) -> bool {
    let parts = ty.parts();
    if ty.degree() as u64 != p {
        return false;
    }
    let ones = ty.fixed();
    if ones != 1 {
        return false;
    }
    let big: Vec<usize> = parts.iter().copied().filter(|&x| x > 1).collect();
    if big.is_empty() {
        return false;
    }
    let l = big[0];
    big.iter().all(|&x| x == l) && (big.len() * l) as u64 == p - 1
}

/// An explicit conjugating element in the full symmetric group, when the
/// cycle types agree.
pub fn conjugator_in_sym(a: &Perm, b: &Perm) -> Option<Perm> {
    if a.degree() != b.degree() || a.cycle_type() != b.cycle_type() {
        return None;
    }
    let d = a.degree();
    let mut ca = a.cycles();
    let mut cb = b.cycles();
    ca.sort_by_key(|c| (core::cmp::Reverse(c.len()), c[0]));
    cb.sort_by_key(|c| (core::cmp::Reverse(c.len()), c[0]));
    let mut images = vec![u16::MAX; d];
    for (x, y) in ca.iter().flatten().zip(cb.iter().flatten()) {
        images[x - 1] = (y - 1) as u16;
    }
    let fixed_a: Vec<usize> = (0..d).filter(|&x| a.apply(x) == x).collect();
    let fixed_b: Vec<usize> = (0..d).filter(|&x| b.apply(x) == x).collect();
    for (x, y) in fixed_a.iter().zip(fixed_b.iter()) {
        images[*x] = *y as u16;
    }
    let c = Perm::from_images(images).ok()?;
    debug_assert_eq!(a.conjugate(&c), *b);
    Some(c)
}

/// Frattini-quotient data for a p-group.
#[derive(Debug)]
pub struct FrattiniReport {
    /// rank of the elementary abelian quotient
    pub rank: u32,
    /// ranks of the images of the supplied subgroups
    pub image_ranks: Vec<u32>,
    /// whether the normal closure of all supplied subgroups is the whole group
    pub closures_generate: bool,
    /// whether the supplied subgroups alone already generate
    pub plain_generation: bool,
}

fn p_valuation(n: &BigUint, p: u64) -> (u32, BigUint) {
    let p = BigUint::from(p);
    let mut v = 0;
    let mut m = n.clone();
    while (&m % &p).is_zero() && !m.is_zero() {
        m /= &p;
        v += 1;
    }
    (v, m)
}

/// Computes `G/Phi(G)` data for a p-group `G`, together with the generation
/// check: if the conjugates of the `P_i` generate `G`, the `P_i` themselves
/// must already generate.
pub fn frattini_quotient(
    group: &PermGroup,
    p: u64,
    parts: &[PermGroup],
) -> Result<FrattiniReport, PermError> {
    let (_, rest) = p_valuation(group.order(), p);
    use num_traits::One;
    if !rest.is_one() {
        return Err(PermError::NotAPGroup);
    }
    let mut phigens = Vec::new();
    for g in group.generators() {
        phigens.push(g.pow(p as i64));
        for h in group.generators() {
            // commutator g^{-1} h^{-1} g h
            phigens.push(
                g.inverse()
                    .compose(&h.inverse())
                    .compose(g)
                    .compose(h),
            );
        }
    }
    let phi = group.normal_closure(&phigens)?;
    let (rank, _) = p_valuation(&(group.order() / phi.order()), p);
    let mut image_ranks = Vec::new();
    let mut all_part_gens: Vec<Perm> = Vec::new();
    for part in parts {
        if !part.is_subgroup_of(group) {
            return Err(PermError::NotASubset);
        }
        let mut gs: Vec<Perm> = phi.generators().to_vec();
        gs.extend(part.generators().iter().cloned());
        let lifted = PermGroup::new(group.degree(), gs)?;
        let (r, _) = p_valuation(&(lifted.order() / phi.order()), p);
        image_ranks.push(r);
        all_part_gens.extend(part.generators().iter().cloned());
    }
    let closure = group.normal_closure(&all_part_gens)?;
    let closures_generate = closure.same_group_as(group);
    let plain = PermGroup::new(group.degree(), all_part_gens)?;
    let plain_generation = plain.same_group_as(group);
    Ok(FrattiniReport {
        rank,
        image_ranks,
        closures_generate,
        plain_generation,
    })
}

/// Goursat data for a subgroup `P` of `G1 x G2` acting on the disjoint
/// union of the domains.
pub struct GoursatDecomposition {
    pub proj1: PermGroup,
    pub proj2: PermGroup,
    /// kernel of the projection to the second factor, on the full domain
    pub ker1: PermGroup,
    /// kernel of the projection to the first factor, on the full domain
    pub ker2: PermGroup,
    pub quotient_order: BigUint,
    /// coset representatives of `ker1 x ker2` in `P` (the graph of the
    /// identifying isomorphism), lexicographically least per coset
    pub pairs: Vec<Perm>,
}

impl GoursatDecomposition {
    /// Regenerates the subgroup from kernels and pairs.
    pub fn reconstruct(&self, degree: usize) -> Result<PermGroup, PermError> {
        let mut gens: Vec<Perm> = Vec::new();
        gens.extend(self.ker1.generators().iter().cloned());
        gens.extend(self.ker2.generators().iter().cloned());
        gens.extend(self.pairs.iter().cloned());
        PermGroup::new(degree, gens)
    }
}

pub fn goursat_decompose(
    g1: &PermGroup,
    g2: &PermGroup,
    sub: &PermGroup,
) -> Result<GoursatDecomposition, PermError> {
    let d1 = g1.degree();
    let d2 = g2.degree();
    let d = d1 + d2;
    if sub.degree() != d {
        return Err(PermError::NotASubgroupOfProduct);
    }
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for g in sub.generators() {
        let a = g.restrict(0, d1).ok_or(PermError::NotASubgroupOfProduct)?;
        let b = g.restrict(d1, d).ok_or(PermError::NotASubgroupOfProduct)?;
        if !g1.contains(&a) || !g2.contains(&b) {
            return Err(PermError::NotASubgroupOfProduct);
        }
        r1.push(a);
        r2.push(b);
    }
    let proj1 = PermGroup::new(d1, r1)?;
    let proj2 = PermGroup::new(d2, r2)?;

    // pointwise stabilizer of the second domain = ker(projection to G2)
    let base2: Vec<usize> = (d1..d).collect();
    let with2 = PermGroup::with_base_prefix(d, &base2, sub.generators().to_vec())?;
    let ker1 = PermGroup::new(d, with2.stabilizer_gens(d2))?;
    let base1: Vec<usize> = (0..d1).collect();
    let with1 = PermGroup::with_base_prefix(d, &base1, sub.generators().to_vec())?;
    let ker2 = PermGroup::new(d, with1.stabilizer_gens(d1))?;

    let q1 = proj1.order() / restrict_order(&ker1);
    let q2 = proj2.order() / restrict_order(&ker2);
    assert_eq!(q1, q2, "Goursat quotients must agree");

    let elements = super::group::naive_elements(d, sub.generators(), 1 << 20)
        .ok_or(PermError::DegreeBudgetExceeded)?;
    let kgens: Vec<Perm> = ker1
        .generators()
        .iter()
        .chain(ker2.generators().iter())
        .cloned()
        .collect();
    let kernel_product = PermGroup::new(d, kgens)?;
    let mut pairs: Vec<Perm> = Vec::new();
    for e in &elements {
        if !pairs
            .iter()
            .any(|r| kernel_product.contains(&e.compose(&r.inverse())))
        {
            pairs.push(e.clone());
        }
    }
    Ok(GoursatDecomposition {
        proj1,
        proj2,
        ker1,
        ker2,
        quotient_order: q1,
        pairs,
    })
}

fn restrict_order(g: &PermGroup) -> BigUint {
    g.order().clone()
}

/// How certain the p-part computation is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PPartCertainty {
    Proved,
    Sampled,
}

/// The subgroup generated by all p-elements, by closing the p-parts of the
/// generators and of a fixed schedule of 64 seeded uniform samples under
/// conjugation. The answer is `Proved` when the closure is the whole group,
/// or when `p` strictly divides the order (Sylow subgroups are then cyclic
/// of order p and all conjugate, so the closure of a single nontrivial
/// p-element is already the full p-part).
pub fn p_part_subgroup(group: &PermGroup, p: u64) -> Result<(PermGroup, PPartCertainty), PermError> {
    let (v, _) = p_valuation(group.order(), p);
    if v == 0 {
        return Ok((PermGroup::trivial(group.degree()), PPartCertainty::Proved));
    }
    let mut seeds: Vec<Perm> = Vec::new();
    let mut push = |g: &Perm, seeds: &mut Vec<Perm>| {
        let ord = g.order();
        let mut m = ord;
        while m % p == 0 {
            m /= p;
        }
        let h = g.pow(m as i64);
        if !h.is_identity() && !seeds.contains(&h) {
            seeds.push(h);
        }
    };
    for g in group.generators() {
        push(g, &mut seeds);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(P_PART_SAMPLE_SEED);
    let levels = group.base_len();
    for _ in 0..64 {
        let coords: Vec<usize> = (0..levels).map(|_| rng.next_u64() as usize).collect();
        let g = group.element_from_coords(&coords);
        push(&g, &mut seeds);
    }
    let closure = group.normal_closure(&seeds)?;
    let certainty = if closure.same_group_as(group) || (v == 1 && !seeds.is_empty()) {
        PPartCertainty::Proved
    } else {
        PPartCertainty::Sampled
    };
    Ok((closure, certainty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn theta_conjugates_tau_to_its_primitive_root_power() {
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let d = p as usize + 2;
            let tau = make_tau(p, d).unwrap();
            let theta = make_theta(p, d).unwrap();
            let g = smallest_primitive_root(p);
            assert_eq!(tau.conjugate(&theta), tau.pow(g as i64), "p={}", p);
            assert_eq!(theta.order(), p - 1);
            for x in p as usize..d {
                assert_eq!(theta.apply(x), x);
            }
        }
    }

    #[test]
    fn theta_for_p5_is_the_expected_cycle() {
        let theta = make_theta(5, 5).unwrap();
        assert_eq!(alloc::format!("{}", theta), "(2 3 5 4)");
        let tau = make_tau(5, 5).unwrap();
        assert_eq!(tau.conjugate(&theta), tau.pow(2));
    }

    #[test]
    fn projective_primes() {
        assert!(is_projective_prime(31)); // (5^3-1)/4 and 2^5-1
        assert!(is_projective_prime(7)); // 2^3 - 1
        assert!(is_projective_prime(13)); // (3^3-1)/2
        assert!(is_projective_prime(5)); // (4^2-1)/3
        assert!(is_projective_prime(17)); // (16^2-1)/15
        assert!(!is_projective_prime(19));
        assert!(!is_projective_prime(29));
    }

    #[test]
    fn jones_clauses() {
        // d = p + 3, t = 3: tame-tail clause fires whatever gamma is
        let gamma = Perm::parse("(1 2 3 4 5 6 7 8)", Some(8)).unwrap();
        assert!(matches!(
            jones_criterion(8, 5, &gamma, 3),
            JonesVerdict::ContainsAlt(_)
        ));
        // full cycle, no power fixes 3 points, t = 1: inconclusive
        let full = Perm::parse("(1 2 3 4 5 6)", Some(6)).unwrap();
        assert_eq!(jones_criterion(6, 5, &full, 1), JonesVerdict::Inconclusive);
        // transposition type in degree p: fixes p - 2 >= 3 points
        let t = Perm::parse("(1 2)", Some(7)).unwrap();
        assert!(matches!(
            jones_criterion(7, 7, &t, 0),
            JonesVerdict::ContainsAlt(_)
        ));
    }

    #[test]
    fn conjugators_exist_iff_same_type() {
        let a = Perm::parse("(1 2 3)(4 5)", Some(6)).unwrap();
        let b = Perm::parse("(2 4 6)(1 3)", Some(6)).unwrap();
        let c = conjugator_in_sym(&a, &b).unwrap();
        assert_eq!(a.conjugate(&c), b);
        let odd = Perm::parse("(1 2)", Some(6)).unwrap();
        assert!(conjugator_in_sym(&a, &odd).is_none());
    }

    #[test]
    fn frattini_of_elementary_abelian() {
        let g = PermGroup::new(
            6,
            vec![
                Perm::parse("(1 2 3)", Some(6)).unwrap(),
                Perm::parse("(4 5 6)", Some(6)).unwrap(),
            ],
        )
        .unwrap();
        let p1 = PermGroup::new(6, vec![Perm::parse("(1 2 3)", Some(6)).unwrap()]).unwrap();
        let p2 = PermGroup::new(6, vec![Perm::parse("(4 5 6)", Some(6)).unwrap()]).unwrap();
        let rep = frattini_quotient(&g, 3, &[p1, p2]).unwrap();
        assert_eq!(rep.rank, 2);
        assert_eq!(rep.image_ranks, vec![1, 1]);
        assert!(rep.closures_generate);
        assert!(rep.plain_generation);
    }

    #[test]
    fn heisenberg_frattini_is_center() {
        // order-27 group of exponent 3 on 9 points: (i,j) -> (i+1, j) and
        // (i,j) -> (i, j+i), points numbered 3i+j+1
        let mut x_im = vec![0u16; 9];
        let mut y_im = vec![0u16; 9];
        for i in 0..3usize {
            for j in 0..3usize {
                x_im[3 * i + j] = (3 * ((i + 1) % 3) + j) as u16;
                y_im[3 * i + j] = (3 * i + (j + i) % 3) as u16;
            }
        }
        let x = Perm::from_images(x_im).unwrap();
        let y = Perm::from_images(y_im).unwrap();
        let g = PermGroup::new(9, vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(g.order().to_string(), "27");
        let p1 = PermGroup::new(9, vec![x]).unwrap();
        let p2 = PermGroup::new(9, vec![y]).unwrap();
        let rep = frattini_quotient(&g, 3, &[p1, p2]).unwrap();
        assert_eq!(rep.rank, 2);
        assert!(rep.closures_generate);
        assert!(rep.plain_generation);
    }

    #[test]
    fn goursat_of_diagonal() {
        let five = |off: usize| {
            Perm::from_cycles(10, &[vec![off + 1, off + 2, off + 3, off + 4, off + 5]]).unwrap()
        };
        let g1 = PermGroup::new(5, vec![Perm::parse("(1 2 3 4 5)", Some(5)).unwrap()]).unwrap();
        let g2 = PermGroup::new(5, vec![Perm::parse("(1 2 3 4 5)", Some(5)).unwrap()]).unwrap();
        let diag = five(0).compose(&five(5));
        let p = PermGroup::new(10, vec![diag]).unwrap();
        let dec = goursat_decompose(&g1, &g2, &p).unwrap();
        assert_eq!(dec.proj1.order().to_string(), "5");
        assert_eq!(dec.quotient_order.to_string(), "5");
        assert!(dec.ker1.is_trivial());
        assert!(dec.reconstruct(10).unwrap().same_group_as(&p));
    }

    #[test]
    fn p_part_of_s5_is_a5() {
        let s5 = PermGroup::new(
            5,
            vec![
                Perm::parse("(1 2)", Some(5)).unwrap(),
                Perm::parse("(1 2 3 4 5)", Some(5)).unwrap(),
            ],
        )
        .unwrap();
        let (part, cert) = p_part_subgroup(&s5, 5).unwrap();
        assert_eq!(part.order().to_string(), "60");
        assert_eq!(cert, PPartCertainty::Proved);
    }
}

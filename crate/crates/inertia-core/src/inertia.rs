//! Inertia shapes `<tau> x| <theta^i omega>` and purely tame cyclic shapes:
//! canonical forms, orbit profiles, Kummer pullbacks and enumeration of the
//! candidate inertia groups for alternating covers of the affine line.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::perm::{make_tau, make_theta, CycleType, GroupClass, Perm, PermError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InertiaError {
    InvariantViolation(String),
    NotCoprime,
    Unsupported(String),
    BadRange,
    Perm(PermError),
}

impl From<PermError> for InertiaError {
    fn from(e: PermError) -> Self {
        InertiaError::Perm(e)
    }
}

impl fmt::Display for InertiaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InertiaError::InvariantViolation(s) => write!(f, "invariant violation: {}", s),
            InertiaError::NotCoprime => write!(f, "pullback order must be coprime to p"),
            InertiaError::Unsupported(s) => write!(f, "unsupported transition: {}", s),
            InertiaError::BadRange => write!(f, "parameters out of range"),
            InertiaError::Perm(e) => write!(f, "{}", e),
        }
    }
}

/// Multiset of ramification indices at a fibre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile(Vec<u64>);

impl RamificationProfile {
    pub fn new(mut parts: Vec<u64>) -> Self {
        assert!(parts.iter().all(|&x| x >= 1));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        RamificationProfile(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// The abstract datum of an inertia group over infinity (wild: the p-cycle
/// extended by `theta^i omega`) or over a tame point (cyclic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InertiaShape {
    Wild {
        p: u64,
        d: usize,
        /// exponent of theta in the tame generator; `0` means the theta
        /// part is trivial
        theta_exp: u64,
        /// permutation of `{p+1..d}` (identity elsewhere)
        omega: Perm,
    },
    Tame { gamma: Perm },
}

impl InertiaShape {
    pub fn wild(p: u64, d: usize, theta_exp: u64, omega: Perm) -> Result<Self, InertiaError> {
        let shape = InertiaShape::Wild { p, d, theta_exp, omega };
        shape.validate()?;
        Ok(shape)
    }

    pub fn tame(gamma: Perm) -> Self {
        InertiaShape::Tame { gamma }
    }

    pub fn degree(&self) -> usize {
        match self {
            InertiaShape::Wild { d, .. } => *d,
            InertiaShape::Tame { gamma } => gamma.degree(),
        }
    }

    pub fn validate(&self) -> Result<(), InertiaError> {
        match self {
            InertiaShape::Wild { p, d, theta_exp, omega } => {
                if !crate::ff::is_prime(*p) || *p % 2 == 0 {
                    return Err(InertiaError::InvariantViolation("p must be an odd prime".into()));
                }
                if (*p as usize) > *d {
                    return Err(InertiaError::InvariantViolation("p exceeds the degree".into()));
                }
                if *theta_exp >= *p - 1 {
                    return Err(InertiaError::InvariantViolation(
                        "theta exponent must lie in [0, p-1)".into(),
                    ));
                }
                if omega.degree() != *d {
                    return Err(InertiaError::InvariantViolation("omega degree mismatch".into()));
                }
                if omega.support().iter().any(|&x| x <= *p as usize) {
                    return Err(InertiaError::InvariantViolation(
                        "omega must be supported on {p+1..d}".into(),
                    ));
                }
                Ok(())
            }
            InertiaShape::Tame { .. } => Ok(()),
        }
    }

    /// The tame generator `theta^i omega` of a wild shape, or the cyclic
    /// generator of a tame one.
    pub fn tame_generator(&self) -> Result<Perm, InertiaError> {
        match self {
            InertiaShape::Wild { p, d, theta_exp, omega } => {
                let theta = make_theta(*p, *d)?;
                Ok(theta.pow(*theta_exp as i64).compose(omega))
            }
            InertiaShape::Tame { gamma } => Ok(gamma.clone()),
        }
    }

    /// Order of the tame quotient `I / p(I)`.
    pub fn tame_order(&self) -> Result<u64, InertiaError> {
        Ok(self.tame_generator()?.order())
    }

    /// The subgroup of `S_d` the shape denotes; for wild shapes the
    /// computed order is checked against `p * lcm(ord theta^i, ord omega)`.
    pub fn realize(&self) -> Result<PermGroup, InertiaError> {
        match self {
            InertiaShape::Wild { p, d, theta_exp, omega } => {
                self.validate()?;
                let tau = make_tau(*p, *d)?;
                let gen2 = self.tame_generator()?;
                let group = PermGroup::new(*d, vec![tau, gen2])?;
                let theta = make_theta(*p, *d)?;
                let expected = (*p as u128)
                    * (theta.pow(*theta_exp as i64).order() as u128)
                        .lcm(&(omega.order() as u128));
                if group.order() != &num_bigint::BigUint::from(expected) {
                    return Err(InertiaError::InvariantViolation(format!(
                        "order {} differs from p*lcm = {}",
                        group.order(),
                        expected
                    )));
                }
                Ok(group)
            }
            InertiaShape::Tame { gamma } => {
                Ok(PermGroup::new(gamma.degree(), vec![gamma.clone()])?)
            }
        }
    }

    /// Orbit lengths of the realized group on the full point set.
    pub fn fibre_profile(&self) -> Result<RamificationProfile, InertiaError> {
        let group = self.realize()?;
        Ok(RamificationProfile::new(
            group.orbits().iter().map(|o| o.len() as u64).collect(),
        ))
    }

    /// Replaces the theta exponent by its canonical divisor of `p-1` and
    /// `omega` by a compatible power; the realized subgroup is unchanged
    /// (checked by order and generator membership).
    pub fn canonicalize(&self) -> Result<InertiaShape, InertiaError> {
        match self {
            InertiaShape::Tame { .. } => Ok(self.clone()),
            InertiaShape::Wild { p, d, theta_exp, omega } => {
                self.validate()?;
                let i = *theta_exp;
                if i == 0 {
                    return Ok(self.clone());
                }
                let pm1 = *p - 1;
                let g = i.gcd(&pm1);
                let class = if g == pm1 { 0 } else { g };
                // x with x*i = g (mod p-1) and gcd(x, L) = 1, so that
                // (theta^i omega)^x = theta^g omega^x generates the same
                // cyclic group
                let theta = make_theta(*p, *d)?;
                let big_l = (theta.pow(i as i64).order()).lcm(&omega.order());
                let m = pm1 / g;
                let c = modular_inverse(i / g, m).expect("i/g is a unit mod m");
                let mut x = if c == 0 { 1 } else { c };
                while x.gcd(&big_l) != 1 {
                    x += m;
                }
                let new = InertiaShape::Wild {
                    p: *p,
                    d: *d,
                    theta_exp: class,
                    omega: omega.pow(x as i64),
                };
                let a = self.realize()?;
                let b = new.realize()?;
                if !a.same_group_as(&b) {
                    return Err(InertiaError::InvariantViolation(
                        "canonical form generates a different subgroup".into(),
                    ));
                }
                Ok(new)
            }
        }
    }

    /// Same shape viewed in a larger symmetric group.
    pub fn embed(&self, degree: usize) -> Result<InertiaShape, InertiaError> {
        if degree < self.degree() || degree > crate::perm::DEGREE_BUDGET {
            return Err(InertiaError::BadRange);
        }
        Ok(match self {
            InertiaShape::Wild { p, d: _, theta_exp, omega } => InertiaShape::Wild {
                p: *p,
                d: degree,
                theta_exp: *theta_exp,
                omega: omega.extend(degree),
            },
            InertiaShape::Tame { gamma } => InertiaShape::Tame { gamma: gamma.extend(degree) },
        })
    }

    /// Canonical theta class (divisor of `p-1`, `0` for trivial) and the
    /// cycle type of omega on the tail set: the data used for matching
    /// shapes up to conjugacy in the normalizer of the p-cycle.
    pub fn class_data(&self) -> Option<(u64, CycleType)> {
        match self {
            InertiaShape::Wild { p, d, theta_exp, omega } => {
                let pm1 = *p - 1;
                let class = if *theta_exp == 0 {
                    0
                } else {
                    let g = theta_exp.gcd(&pm1);
                    if g == pm1 {
                        0
                    } else {
                        g
                    }
                };
                let tail = *d - *p as usize;
                let mut parts: Vec<usize> = omega.cycles().iter().map(|c| c.len()).collect();
                let moved: usize = parts.iter().sum();
                parts.extend(core::iter::repeat(1).take(tail - moved));
                Some((class, CycleType::new(parts)))
            }
            InertiaShape::Tame { .. } => None,
        }
    }

    /// Textual format: `wild p=5 d=8 i=2 omega=(6 7 8)` or
    /// `tame gamma=(1 2)(3 4 5)`.
    pub fn parse(s: &str) -> Result<InertiaShape, InertiaError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("wild ") {
            let omega_at = rest
                .find("omega=")
                .ok_or_else(|| InertiaError::InvariantViolation("missing omega=".into()))?;
            let head = &rest[..omega_at];
            let omega_str = &rest[omega_at + 6..];
            let mut p = None;
            let mut d = None;
            let mut i = None;
            for tok in head.split_whitespace() {
                let (k, v) = tok
                    .split_once('=')
                    .ok_or_else(|| InertiaError::InvariantViolation("expected key=value".into()))?;
                let n: u64 = v
                    .parse()
                    .map_err(|_| InertiaError::InvariantViolation("bad number".into()))?;
                match k {
                    "p" => p = Some(n),
                    "d" => d = Some(n as usize),
                    "i" => i = Some(n),
                    _ => {
                        return Err(InertiaError::InvariantViolation(format!("unknown key {}", k)))
                    }
                }
            }
            let (p, d, i) = match (p, d, i) {
                (Some(p), Some(d), Some(i)) => (p, d, i),
                _ => return Err(InertiaError::InvariantViolation("missing p, d or i".into())),
            };
            let omega = Perm::parse(omega_str, Some(d))?;
            InertiaShape::wild(p, d, i, omega)
        } else if let Some(rest) = s.strip_prefix("tame ") {
            let g = rest
                .trim()
                .strip_prefix("gamma=")
                .ok_or_else(|| InertiaError::InvariantViolation("missing gamma=".into()))?;
            Ok(InertiaShape::Tame { gamma: Perm::parse(g, None)? })
        } else {
            Err(InertiaError::InvariantViolation("expected 'wild' or 'tame'".into()))
        }
    }
}

impl fmt::Display for InertiaShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InertiaShape::Wild { p, d, theta_exp, omega } => {
                write!(f, "wild p={} d={} i={} omega={}", p, d, theta_exp, omega)
            }
            InertiaShape::Tame { gamma } => write!(f, "tame gamma={}", gamma),
        }
    }
}

fn modular_inverse(a: u64, m: u64) -> Option<u64> {
    if m <= 1 {
        return Some(0);
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, (a % m) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(((t % m as i128 + m as i128) % m as i128) as u64)
}

/// Claimed Galois group of a cover; verdicts are criterion based, so only
/// the family and the degree travel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupClaim {
    Alternating(usize),
    Symmetric(usize),
}

impl GroupClaim {
    pub fn degree(&self) -> usize {
        match self {
            GroupClaim::Alternating(d) | GroupClaim::Symmetric(d) => *d,
        }
    }
}

impl fmt::Display for GroupClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupClaim::Alternating(d) => write!(f, "A_{}", d),
            GroupClaim::Symmetric(d) => write!(f, "S_{}", d),
        }
    }
}

/// Result of pulling a two-point cover back along the degree-n Kummer cover.
#[derive(Debug, Clone)]
pub struct KummerOutcome {
    /// tame inertia order over 0 after pullback (1: the branch point died)
    pub over_zero_order: u64,
    /// cycle type over 0 after pullback, when the input type was known
    pub over_zero_type: Option<CycleType>,
    /// inertia shape over infinity after pullback
    pub shape: InertiaShape,
    /// group of the pulled-back cover
    pub group: GroupClaim,
    /// exponent applied to the tame generator over infinity
    pub power: u64,
}

/// Abhyankar transform of the inertia data of a two-point branched cover
/// under the `[n]`-Kummer pullback.
///
/// Group transitions supported: an alternating group stays alternating; a
/// symmetric group stays symmetric for odd `n` (the pullback shares no
/// subcover with the quadratic subcover); a symmetric group drops to the
/// alternating one for even `n` when both tame generators are odd (the
/// quadratic subcovers then coincide and the dominant component has index
/// two), in which case every new inertia generator must come out even.
pub fn kummer_pullback(
    over_zero_order: u64,
    over_zero_type: Option<&CycleType>,
    shape: &InertiaShape,
    n: u64,
    group: GroupClaim,
) -> Result<KummerOutcome, InertiaError> {
    let (p, d) = match shape {
        InertiaShape::Wild { p, d, .. } => (*p, *d),
        InertiaShape::Tame { .. } => {
            return Err(InertiaError::Unsupported(
                "pullback is defined here for wild shapes over infinity".into(),
            ))
        }
    };
    if n == 0 || n % p == 0 {
        return Err(InertiaError::NotCoprime);
    }
    if group.degree() != d {
        return Err(InertiaError::InvariantViolation("group degree mismatch".into()));
    }
    let sigma = shape.tame_generator()?;
    let c = n.gcd(&sigma.order());
    let new_sigma = sigma.pow(c as i64);
    let (theta_exp, omega) = match shape {
        InertiaShape::Wild { theta_exp, omega, .. } => (*theta_exp, omega.clone()),
        _ => unreachable!(),
    };
    let new_shape = InertiaShape::Wild {
        p,
        d,
        theta_exp: (theta_exp * (c % (p - 1))) % (p - 1),
        omega: omega.pow(c as i64),
    };
    // the data-level transform must generate the same subgroup as <tau, sigma^c>
    let direct = PermGroup::new(d, vec![make_tau(p, d)?, new_sigma.clone()])?;
    let realized = new_shape.realize()?;
    if !realized.same_group_as(&direct) {
        return Err(InertiaError::InvariantViolation(
            "pullback shape does not match the generator power".into(),
        ));
    }
    let g0 = over_zero_order.gcd(&n);
    let new_zero_order = over_zero_order / g0;
    let new_zero_type = over_zero_type.map(|t| t.power(g0));
    let new_group = match group {
        GroupClaim::Alternating(_) => GroupClaim::Alternating(d),
        GroupClaim::Symmetric(_) => {
            if n % 2 == 1 {
                GroupClaim::Symmetric(d)
            } else {
                let old_zero_odd = over_zero_type.map(|t| !t.is_even()).unwrap_or(false);
                let old_inf_odd = !sigma.is_even();
                if !(old_zero_odd && old_inf_odd) {
                    return Err(InertiaError::Unsupported(
                        "even pullback of a symmetric cover needs odd tame generators at both branch points"
                            .into(),
                    ));
                }
                if !new_sigma.is_even() {
                    return Err(InertiaError::Unsupported(
                        "new generator over infinity must be even after the drop to the alternating group"
                            .into(),
                    ));
                }
                if let Some(t) = &new_zero_type {
                    if new_zero_order > 1 && !t.is_even() {
                        return Err(InertiaError::Unsupported(
                            "new generator over zero must be even after the drop to the alternating group"
                                .into(),
                        ));
                    }
                }
                GroupClaim::Alternating(d)
            }
        }
    };
    Ok(KummerOutcome {
        over_zero_order: new_zero_order,
        over_zero_type: new_zero_type,
        shape: new_shape,
        group: new_group,
        power: c,
    })
}

/// Wrapper taking the group itself (classified by order).
pub fn kummer_pullback_of_group(
    over_zero_order: u64,
    shape: &InertiaShape,
    n: u64,
    group: &PermGroup,
) -> Result<KummerOutcome, InertiaError> {
    let claim = match group.classify() {
        GroupClass::Alternating => GroupClaim::Alternating(group.degree()),
        GroupClass::Symmetric => GroupClaim::Symmetric(group.degree()),
        GroupClass::Other => {
            return Err(InertiaError::Unsupported(
                "group transitions are defined for alternating and symmetric groups".into(),
            ))
        }
    };
    kummer_pullback(over_zero_order, None, shape, n, claim)
}

/// How a candidate inertia target is discharged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TargetAnnotation {
    MustRealize,
    /// arises from the parent shape by raising its tame generator to the
    /// given power (an Abhyankar reduction)
    ReducibleFrom { parent: (u64, CycleType), power: u64 },
    /// omega fixes >= 2 tail points, so realizability at the source degree
    /// (where exactly one point stays fixed) lifts up
    DeferredToDegree { source_degree: usize },
}

/// A candidate inertia group for an alternating cover, up to conjugacy in
/// the normalizer of the p-cycle: canonical theta class plus omega type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IcTarget {
    pub theta_class: u64,
    pub omega_type: CycleType,
    pub annotation: TargetAnnotation,
}

impl IcTarget {
    /// A concrete shape with this class data: omega laid out in consecutive
    /// cycles on the tail, longest first.
    pub fn shape(&self, p: u64, d: usize) -> InertiaShape {
        let omega = omega_with_type(p, d, &self.omega_type);
        InertiaShape::Wild { p, d, theta_exp: self.theta_class, omega }
    }
}

/// Builds the permutation of `{p+1..d}` with the given cycle type, cycles
/// laid out consecutively, longest first.
pub fn omega_with_type(p: u64, d: usize, t: &CycleType) -> Perm {
    let mut cycles = Vec::new();
    let mut next = p as usize + 1;
    for &len in t.parts() {
        if len > 1 {
            cycles.push((next..next + len).collect::<Vec<_>>());
        }
        next += len;
    }
    Perm::from_cycles(d, &cycles).expect("tail cycles fit")
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, maxpart: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let mut k = maxpart.min(n);
        while k >= 1 {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
            k -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for k in 1..=n {
        if n % k == 0 {
            out.push(k);
        }
    }
    out
}

/// Enumerates the inertia targets `<tau> x| <theta^i omega>` with even tame
/// generator, with theta exponents reduced to classes dividing `p-1` and
/// omega taken up to cycle type, annotated with the Abhyankar reductions
/// and the fixed-point deferrals.
pub fn enumerate_ic_targets(d: usize, p: u64) -> Result<Vec<IcTarget>, InertiaError> {
    if !crate::ff::is_prime(p) || p % 2 == 0 {
        return Err(InertiaError::BadRange);
    }
    if (d as u64) < p || (d as u64) > 2 * p - 1 || d > crate::perm::DEGREE_BUDGET {
        return Err(InertiaError::BadRange);
    }
    let tail = d - p as usize;
    let pm1 = p - 1;
    let mut classes: Vec<u64> = divisors(pm1).into_iter().filter(|&e| e < pm1).collect();
    classes.push(0);
    classes.sort_unstable();
    let types: Vec<CycleType> = partitions(tail).into_iter().map(CycleType::new).collect();

    let theta_even = |e: u64| e % 2 == 0; // class 0 is the identity, even
    let mut shapes: Vec<(u64, CycleType)> = Vec::new();
    for &e in &classes {
        for t in &types {
            if theta_even(e) == t.is_even() {
                shapes.push((e, t.clone()));
            }
        }
    }
    shapes.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));

    // Abhyankar reductions: mark shapes reachable as proper powers of others
    let ord_theta = |e: u64| if e == 0 { 1 } else { pm1 / e };
    let class_of = |x: u64| {
        let g = if x == 0 { 0 } else { x.gcd(&pm1) };
        if g == pm1 {
            0
        } else {
            g
        }
    };
    let mut annotations: Vec<TargetAnnotation> = vec![TargetAnnotation::MustRealize; shapes.len()];
    for (pi, (e, t)) in shapes.iter().enumerate() {
        let big_l = ord_theta(*e).lcm(&t.order());
        for c in divisors(big_l) {
            if c <= 1 {
                continue;
            }
            let succ = (class_of(e * c), t.power(c));
            if succ == (*e, t.clone()) {
                continue;
            }
            if let Some(si) = shapes.iter().position(|s| *s == succ) {
                if annotations[si] == TargetAnnotation::MustRealize {
                    annotations[si] = TargetAnnotation::ReducibleFrom {
                        parent: shapes[pi].clone(),
                        power: c,
                    };
                }
            }
        }
    }
    let mut out = Vec::new();
    for ((e, t), ann) in shapes.into_iter().zip(annotations.into_iter()) {
        let ann = if ann == TargetAnnotation::MustRealize && t.fixed() >= 2 {
            TargetAnnotation::DeferredToDegree { source_degree: d - t.fixed() + 1 }
        } else {
            ann
        };
        out.push(IcTarget { theta_class: e, omega_type: t, annotation: ann });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn realize_orders() {
        // p=5, d=8, i=2, omega a 3-cycle: order 5 * lcm(2,3) = 30
        let omega = Perm::parse("(6 7 8)", Some(8)).unwrap();
        let shape = InertiaShape::wild(5, 8, 2, omega).unwrap();
        assert_eq!(shape.realize().unwrap().order().to_string(), "30");

        let tau_only = InertiaShape::wild(5, 8, 0, Perm::identity(8)).unwrap();
        assert_eq!(tau_only.realize().unwrap().order().to_string(), "5");

        let full = InertiaShape::wild(5, 5, 1, Perm::identity(5)).unwrap();
        assert_eq!(full.realize().unwrap().order().to_string(), "20");
    }

    #[test]
    fn canonicalize_reduces_exponent() {
        let s = InertiaShape::wild(11, 11, 6, Perm::identity(11)).unwrap();
        match s.canonicalize().unwrap() {
            InertiaShape::Wild { theta_exp, .. } => assert_eq!(theta_exp, 2),
            _ => unreachable!(),
        }

        let t = InertiaShape::wild(11, 11, 2, Perm::identity(11)).unwrap();
        assert_eq!(t.canonicalize().unwrap(), t);

        let u = InertiaShape::wild(5, 7, 3, Perm::parse("(6 7)", Some(7)).unwrap()).unwrap();
        let cu = u.canonicalize().unwrap();
        match &cu {
            InertiaShape::Wild { theta_exp, .. } => assert_eq!(*theta_exp, 1),
            _ => unreachable!(),
        }
        assert!(cu.realize().unwrap().same_group_as(&u.realize().unwrap()));
    }

    #[test]
    fn fibre_profiles() {
        let tau = InertiaShape::tame(make_tau(5, 7).unwrap());
        assert_eq!(tau.fibre_profile().unwrap().parts(), &[5, 1, 1]);

        let omega = Perm::parse("(6 7 8)", Some(8)).unwrap();
        let shape = InertiaShape::wild(5, 8, 2, omega).unwrap();
        assert_eq!(shape.fibre_profile().unwrap().parts(), &[5, 3]);
    }

    #[test]
    fn shape_format_round_trip() {
        let omega = Perm::parse("(6 7 8)", Some(8)).unwrap();
        let shape = InertiaShape::wild(5, 8, 2, omega).unwrap();
        let s = alloc::format!("{}", shape);
        assert_eq!(s, "wild p=5 d=8 i=2 omega=(6 7 8)");
        assert_eq!(InertiaShape::parse(&s).unwrap(), shape);

        let tame = InertiaShape::tame(Perm::parse("(1 2)(3 4 5)", None).unwrap());
        let s = alloc::format!("{}", tame);
        assert_eq!(InertiaShape::parse(&s).unwrap(), tame);
    }

    #[test]
    fn enumerate_at_6_5() {
        let targets = enumerate_ic_targets(6, 5).unwrap();
        assert_eq!(targets.len(), 2);
        assert_eq!(targets[0].theta_class, 0);
        assert!(matches!(targets[0].annotation, TargetAnnotation::ReducibleFrom { .. }));
        assert_eq!(targets[1].theta_class, 2);
        assert_eq!(targets[1].annotation, TargetAnnotation::MustRealize);
    }

    #[test]
    fn kummer_identity_pullback() {
        let shape = InertiaShape::wild(5, 6, 1, Perm::identity(6)).unwrap();
        let out = kummer_pullback(2, None, &shape, 1, GroupClaim::Alternating(6)).unwrap();
        assert_eq!(out.shape, shape);
        assert_eq!(out.over_zero_order, 2);
    }

    #[test]
    fn embed_keeps_group_order() {
        let omega = Perm::parse("(6 7 8)", Some(8)).unwrap();
        let shape = InertiaShape::wild(5, 8, 2, omega).unwrap();
        let e = shape.embed(10).unwrap();
        assert_eq!(e.fibre_profile().unwrap().parts(), &[5, 3, 1, 1]);
        assert_eq!(e.realize().unwrap().order(), shape.realize().unwrap().order());
    }
}

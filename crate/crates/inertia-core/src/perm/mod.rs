//! Permutations of `{1..d}` and finitely generated subgroups of `S_d`.

mod group;
mod theory;

pub use group::{blocks_containing, naive_elements, GroupClass, PermGroup};
pub use theory::{
    conjugator_in_sym, frattini_quotient, goursat_decompose, is_projective_prime,
    jones_criterion, make_tau, make_theta, p_part_subgroup, smallest_primitive_root,
    FrattiniReport, GoursatDecomposition, JonesVerdict, PPartCertainty, P_PART_SAMPLE_SEED,
};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from the permutation layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    DegreeMismatch,
    BadDegree,
    DegreeBudgetExceeded,
    NotASubset,
    NotAPGroup,
    NotASubgroupOfProduct,
    ParseError(String),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::DegreeMismatch => write!(f, "permutation degrees differ"),
            PermError::BadDegree => write!(f, "bad degree"),
            PermError::DegreeBudgetExceeded => write!(f, "degree exceeds the supported budget"),
            PermError::NotASubset => write!(f, "elements do not lie in the ambient group"),
            PermError::NotAPGroup => write!(f, "group order is not a prime power"),
            PermError::NotASubgroupOfProduct => {
                write!(f, "group is not a subgroup of the direct product")
            }
            PermError::ParseError(s) => write!(f, "parse error: {}", s),
        }
    }
}

/// Hard cap on the degree of any group we build machinery for.
pub const DEGREE_BUDGET: usize = 64;

/// A permutation of `{1..d}`, stored 0-based: `images[i]` is the image of
/// point `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u16).collect() }
    }

    /// Builds from 0-based images; must be a bijection.
    pub fn from_images(images: Vec<u16>) -> Result<Perm, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if (x as usize) >= d || seen[x as usize] {
                return Err(PermError::BadDegree);
            }
            seen[x as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, PermError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut seen = vec![false; degree];
        for cyc in cycles {
            for i in 0..cyc.len() {
                let a = cyc[i];
                let b = cyc[(i + 1) % cyc.len()];
                if a == 0 || a > degree || b == 0 || b > degree {
                    return Err(PermError::BadDegree);
                }
                if seen[a - 1] {
                    return Err(PermError::ParseError(String::from("point repeated in cycles")));
                }
                seen[a - 1] = true;
                images[a - 1] = (b - 1) as u16;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Composition: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Perm { images }
    }

    /// `by * self * by^{-1}`.
    pub fn conjugate(&self, by: &Perm) -> Perm {
        by.compose(self).compose(&by.inverse())
    }

    pub fn pow(&self, e: i64) -> Perm {
        let mut e = e;
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    /// 1-based points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn fixed_points(&self) -> usize {
        self.degree() - self.support().len()
    }

    /// Disjoint cycles (1-based), each rotated to start at its least point,
    /// sorted by that point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x + 1);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = parts.iter().sum();
        parts.extend(core::iter::repeat(1).take(self.degree() - moved));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().is_even()
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    /// Views the permutation inside `S_{d'}`, `d' >= d`, fixing new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u16..degree as u16);
        Perm { images }
    }

    /// Restriction to an interval `[lo, hi)` of 0-based points that the
    /// permutation maps into itself; the result is re-indexed from 0.
    pub fn restrict(&self, lo: usize, hi: usize) -> Option<Perm> {
        let mut images = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let im = self.apply(i);
            if im < lo || im >= hi {
                return None;
            }
            images.push((im - lo) as u16);
        }
        // the complement must also be preserved
        for i in (0..lo).chain(hi..self.degree()) {
            let im = self.apply(i);
            if im >= lo && im < hi {
                return None;
            }
        }
        Some(Perm { images })
    }

    /// Parses cycle notation: `"(1 2 3)(4 5)"`, `"()"` for the identity.
    /// Points are 1-based; `degree` may exceed the largest point.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Perm, PermError> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut maxpt = 0usize;
        let mut rest = s;
        if s.is_empty() {
            return Err(PermError::ParseError(String::from("empty input")));
        }
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| PermError::ParseError(String::from("expected '('")))?;
            if !rest[..open].trim().is_empty() {
                return Err(PermError::ParseError(String::from("junk between cycles")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::ParseError(String::from("expected ')'")))?;
            let inner = &rest[open + 1..close];
            let mut cyc = Vec::new();
            for tok in inner.split_whitespace() {
                let n: usize = tok
                    .parse()
                    .map_err(|_| PermError::ParseError(String::from("bad point")))?;
                if n == 0 {
                    return Err(PermError::ParseError(String::from("points are 1-based")));
                }
                maxpt = maxpt.max(n);
                cyc.push(n);
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            rest = rest[close + 1..].trim_start();
        }
        let d = degree.unwrap_or(maxpt).max(maxpt);
        Perm::from_cycles(d, &cycles)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (i, pt) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", pt)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Multiset of cycle lengths (descending, fixed points as 1s).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> CycleType {
        assert!(parts.iter().all(|&p| p >= 1));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parity of `degree - #cycles`; even permutations return `true`.
    pub fn is_even(&self) -> bool {
        (self.degree() - self.parts.len()) % 2 == 0
    }

    pub fn order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| num_integer::lcm(acc, p as u64))
    }

    /// Cycle type of the k-th power of a permutation of this type: each
    /// cycle of length l splits into gcd(l, k) cycles of length l/gcd(l,k).
    pub fn power(&self, k: u64) -> CycleType {
        let mut parts = Vec::new();
        for &l in &self.parts {
            let g = num_integer::gcd(l as u64, k.max(1)) as usize;
            for _ in 0..g {
                parts.push(l / g);
            }
        }
        CycleType::new(parts)
    }

    /// Number of fixed points.
    pub fn fixed(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 1).count()
    }

    /// True when the type is a single nontrivial cycle plus fixed points.
    pub fn is_single_cycle(&self) -> Option<usize> {
        let big: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 1).collect();
        if big.len() == 1 {
            Some(big[0])
        } else {
            None
        }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_then_left() {
        let a = Perm::parse("(1 2)", Some(3)).unwrap();
        let b = Perm::parse("(2 3)", Some(3)).unwrap();
        // (a ∘ b)(2) = a(3) = 3
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["(1 2 3)(4 5)", "(2 3 5 4)", "()"] {
            let p = Perm::parse(s, Some(6)).unwrap();
            let printed = alloc::format!("{}", p);
            let q = Perm::parse(&printed, Some(6)).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn powers_and_orders() {
        let c = Perm::parse("(1 2 3)", Some(3)).unwrap();
        assert!(c.pow(3).is_identity());
        assert!(Perm::identity(4).inverse().is_identity());
        assert_eq!(c.order(), 3);
    }

    #[test]
    fn cycle_type_parity() {
        // a 7-cycle in S_8 is even of order 7
        let c = Perm::parse("(1 2 3 4 5 6 7)", Some(8)).unwrap();
        let t = c.cycle_type();
        assert_eq!(t.parts(), &[7, 1]);
        assert!(t.is_even());
        assert_eq!(t.order(), 7);
        assert!(Perm::identity(5).cycle_type().is_even());
        assert_eq!(Perm::identity(5).cycle_type().order(), 1);
    }

    #[test]
    fn power_type_formula_matches() {
        let g = Perm::parse("(1 2 3 4 5 6)(7 8)", Some(9)).unwrap();
        for k in 1..=12u64 {
            assert_eq!(g.pow(k as i64).cycle_type(), g.cycle_type().power(k));
        }
    }
}

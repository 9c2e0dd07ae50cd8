//! Exact arithmetic over `F_p` and its quadratic extension `F_{p^2}`.
//!
//! Elements of the quadratic extension are written `a + b*w` where
//! `w^2 = nu` for the smallest positive quadratic non-residue `nu` mod `p`;
//! the fixed choice keeps every computation reproducible.

mod bipoly;
mod poly;

pub use bipoly::{resultant_y, XyPoly};
pub use poly::Polynomial;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by field and polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FfError {
    DivisionByZero,
    FieldMismatch,
    NotPrime(u64),
    EvenCharacteristic,
    BadDegree(u32),
}

impl fmt::Display for FfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FfError::DivisionByZero => write!(f, "division by zero"),
            FfError::FieldMismatch => write!(f, "elements lie in different fields"),
            FfError::NotPrime(p) => write!(f, "{} is not prime", p),
            FfError::EvenCharacteristic => write!(f, "characteristic must be odd"),
            FfError::BadDegree(d) => write!(f, "unsupported extension degree {}", d),
        }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `F_p` or `F_{p^2}`, described by the characteristic and, for the
/// extension, the fixed non-residue `nu` with `w^2 = nu`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteField {
    p: u64,
    nu: Option<u64>,
}

impl FiniteField {
    /// The prime field `F_p`; `p` must be an odd prime.
    pub fn prime(p: u64) -> Result<Self, FfError> {
        if !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        if p == 2 {
            return Err(FfError::EvenCharacteristic);
        }
        Ok(FiniteField { p, nu: None })
    }

    /// The quadratic extension `F_{p^2} = F_p(w)`, `w^2 = nu` with `nu` the
    /// smallest positive non-residue mod `p`.
    pub fn quadratic(p: u64) -> Result<Self, FfError> {
        let base = Self::prime(p)?;
        let nu = (2..p)
            .find(|&c| powmod(c, ((p - 1) / 2) as u128, p) == p - 1)
            .expect("every odd prime field has a non-residue");
        let _ = base;
        Ok(FiniteField { p, nu: Some(nu) })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        if self.nu.is_some() {
            2
        } else {
            1
        }
    }

    /// The non-residue `nu` when this is a quadratic extension.
    pub fn non_residue(&self) -> Option<u64> {
        self.nu
    }

    pub fn order(&self) -> u128 {
        let p = self.p as u128;
        if self.nu.is_some() {
            p * p
        } else {
            p
        }
    }

    /// The extension of this field (identity on already-quadratic fields).
    pub fn extension(&self) -> Self {
        match self.nu {
            Some(_) => *self,
            None => Self::quadratic(self.p).expect("p was validated"),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, c: [0, 0] }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, c: [1 % self.p, 0] }
    }

    /// Embeds an integer residue.
    pub fn element(&self, n: i64) -> FieldElement {
        let p = self.p as i64;
        let r = ((n % p) + p) % p;
        FieldElement { field: *self, c: [r as u64, 0] }
    }

    /// `a + b*w`; `b` must be zero in a prime field.
    pub fn element2(&self, a: i64, b: i64) -> Result<FieldElement, FfError> {
        let p = self.p as i64;
        let ra = (((a % p) + p) % p) as u64;
        let rb = (((b % p) + p) % p) as u64;
        if rb != 0 && self.nu.is_none() {
            return Err(FfError::BadDegree(1));
        }
        Ok(FieldElement { field: *self, c: [ra, rb] })
    }

    /// All field elements in a fixed deterministic order (base field first).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let p = self.p;
        let deg2 = self.nu.is_some();
        let hi = if deg2 { p } else { 1 };
        let field = *self;
        (0..hi).flat_map(move |b| (0..p).map(move |a| FieldElement { field, c: [a, b] }))
    }

    /// The multiplicative inverse of an integer residue.
    pub fn inv_of(&self, n: i64) -> Result<FieldElement, FfError> {
        self.element(n).inv()
    }
}

/// An element of a [`FiniteField`], stored in reduced coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    field: FiniteField,
    c: [u64; 2],
}

/// Operation selector for [`field_arithmetic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(u128),
}

/// Single dispatch point over the element operations. `b` is ignored for
/// the unary operations.
pub fn field_arithmetic(
    a: FieldElement,
    b: FieldElement,
    op: FieldOp,
) -> Result<FieldElement, FfError> {
    match op {
        FieldOp::Neg => Ok(a.neg()),
        FieldOp::Inv => a.inv(),
        FieldOp::Pow(e) => Ok(a.pow(e)),
        _ => {
            if a.field != b.field {
                return Err(FfError::FieldMismatch);
            }
            match op {
                FieldOp::Add => Ok(a.add(&b)),
                FieldOp::Sub => Ok(a.sub(&b)),
                FieldOp::Mul => Ok(a.mul(&b)),
                FieldOp::Div => {
                    if b.is_zero() {
                        Err(FfError::DivisionByZero)
                    } else {
                        Ok(a.mul(&b.inv()?))
                    }
                }
                _ => unreachable!(),
            }
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> FiniteField {
        self.field
    }

    /// Coordinates `(a, b)` with the element equal to `a + b*w`.
    pub fn coords(&self) -> (u64, u64) {
        (self.c[0], self.c[1])
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0, 0]
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1] == 0
    }

    /// True when the element lies in the prime subfield.
    pub fn in_base_field(&self) -> bool {
        self.c[1] == 0
    }

    fn assert_same(&self, other: &FieldElement) {
        assert_eq!(self.field, other.field, "field mismatch");
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.assert_same(other);
        let p = self.field.p;
        FieldElement {
            field: self.field,
            c: [(self.c[0] + other.c[0]) % p, (self.c[1] + other.c[1]) % p],
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.assert_same(other);
        let p = self.field.p;
        FieldElement {
            field: self.field,
            c: [
                (self.c[0] + p - other.c[0]) % p,
                (self.c[1] + p - other.c[1]) % p,
            ],
        }
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.p;
        FieldElement {
            field: self.field,
            c: [(p - self.c[0]) % p, (p - self.c[1]) % p],
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.assert_same(other);
        let p = self.field.p;
        let (a, b) = (self.c[0], self.c[1]);
        let (c, d) = (other.c[0], other.c[1]);
        match self.field.nu {
            None => FieldElement { field: self.field, c: [mulmod(a, c, p), 0] },
            Some(nu) => {
                let re = (mulmod(a, c, p) + mulmod(nu, mulmod(b, d, p), p)) % p;
                let im = (mulmod(a, d, p) + mulmod(b, c, p)) % p;
                FieldElement { field: self.field, c: [re, im] }
            }
        }
    }

    pub fn scale(&self, n: i64) -> FieldElement {
        self.mul(&self.field.element(n))
    }

    pub fn inv(&self) -> Result<FieldElement, FfError> {
        if self.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        let p = self.field.p;
        match self.field.nu {
            None => Ok(FieldElement {
                field: self.field,
                c: [powmod(self.c[0], (p - 2) as u128, p), 0],
            }),
            Some(nu) => {
                // (a + bw)^{-1} = (a - bw) / (a^2 - nu b^2)
                let (a, b) = (self.c[0], self.c[1]);
                let norm = (mulmod(a, a, p) + p - mulmod(nu, mulmod(b, b, p), p) % p) % p;
                let ninv = powmod(norm, (p - 2) as u128, p);
                Ok(FieldElement {
                    field: self.field,
                    c: [mulmod(a, ninv, p), mulmod((p - b) % p, ninv, p)],
                })
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, FfError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u128) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order (0 stays undefined and panics).
    pub fn mult_order(&self) -> u128 {
        assert!(!self.is_zero());
        let group = self.field.order() - 1;
        let mut order = group;
        let mut q = 2u128;
        let mut rem = group;
        while q * q <= rem {
            if rem % q == 0 {
                while rem % q == 0 {
                    rem /= q;
                }
                while order % q == 0 && self.pow(order / q).is_one() {
                    order /= q;
                }
            }
            q += 1;
        }
        if rem > 1 {
            while order % rem == 0 && self.pow(order / rem).is_one() {
                order /= rem;
            }
        }
        order
    }

    /// Square root in the declared field; `None` when the element is not a
    /// square there. Every `F_p` element gains a root in `F_{p^2}`.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(*self);
        }
        let p = self.field.p;
        match self.field.nu {
            None => sqrt_prime(self.c[0], p).map(|r| FieldElement {
                field: self.field,
                c: [r, 0],
            }),
            Some(nu) => {
                // Legendre test in F_{p^2}: x is a square iff x^((p^2-1)/2) = 1.
                let half = (self.field.order() - 1) / 2;
                if !self.pow(half).is_one() {
                    return None;
                }
                let (a, b) = (self.c[0], self.c[1]);
                if b == 0 {
                    if let Some(r) = sqrt_prime(a, p) {
                        return Some(FieldElement { field: self.field, c: [r, 0] });
                    }
                    // a is a non-residue: a/nu is a residue and sqrt = t*w.
                    let adiv = mulmod(a, powmod(nu, (p - 2) as u128, p), p);
                    let t = sqrt_prime(adiv, p)?;
                    return Some(FieldElement { field: self.field, c: [0, t] });
                }
                // Norm method: with z = a+bw and n = sqrt(a^2 - nu b^2),
                // one of (a+n)/2, (a-n)/2 is a square u^2 and v = b/(2u).
                let norm = (mulmod(a, a, p) + p - mulmod(nu, mulmod(b, b, p), p) % p) % p;
                let n = sqrt_prime(norm, p)?;
                let inv2 = powmod(2, (p - 2) as u128, p);
                for cand in [mulmod((a + n) % p, inv2, p), mulmod((a + p - n) % p, inv2, p)] {
                    if let Some(u) = sqrt_prime(cand, p) {
                        if u == 0 {
                            continue;
                        }
                        let v = mulmod(b, powmod(mulmod(2, u, p), (p - 2) as u128, p), p);
                        let root = FieldElement { field: self.field, c: [u, v] };
                        if root.mul(&root) == *self {
                            return Some(root);
                        }
                    }
                }
                None
            }
        }
    }

    /// Reinterprets the element inside the quadratic extension of its field.
    pub fn lift(&self, ext: FiniteField) -> Result<FieldElement, FfError> {
        if self.field == ext {
            return Ok(*self);
        }
        if self.field.nu.is_none() && ext.p == self.field.p && ext.nu.is_some() {
            Ok(FieldElement { field: ext, c: self.c })
        } else {
            Err(FfError::FieldMismatch)
        }
    }
}

/// Tonelli-Shanks over `F_p`, deterministic (non-residue found by scan).
fn sqrt_prime(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if powmod(a, ((p - 1) / 2) as u128, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(powmod(a, ((p + 1) / 4) as u128, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p)
        .find(|&c| powmod(c, ((p - 1) / 2) as u128, p) == p - 1)
        .expect("non-residue exists");
    let mut m = s;
    let mut c = powmod(z, q as u128, p);
    let mut t = powmod(a, q as u128, p);
    let mut r = powmod(a, ((q + 1) / 2) as u128, p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
            if i == m {
                return None;
            }
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mulmod(b, b, p);
        }
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    Some(r)
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c[1] == 0 {
            write!(f, "{}", self.c[0])
        } else if self.c[0] == 0 {
            write!(f, "{}*w", self.c[1])
        } else {
            write!(f, "{}+{}*w", self.c[0], self.c[1])
        }
    }
}

/// Parses the textual forms produced by `Display`: `a`, `b*w`, `a+b*w`.
pub fn parse_element(field: FiniteField, s: &str) -> Option<FieldElement> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('+') {
        let b = b.strip_suffix("*w")?;
        return field
            .element2(a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)
            .ok();
    }
    if let Some(b) = s.strip_suffix("*w") {
        return field.element2(0, b.trim().parse::<i64>().ok()?).ok();
    }
    Some(field.element(s.parse::<i64>().ok()?))
}

/// Displays a list of elements comma separated (the cover file format).
pub fn join_elements(xs: &[FieldElement]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_f5() {
        let f = FiniteField::prime(5).unwrap();
        assert_eq!(f.element(4).inv().unwrap(), f.element(4));
        assert_eq!(f.element(4).mul(&f.element(4)), f.element(1));
    }

    #[test]
    fn add_neg_cancels() {
        let f = FiniteField::quadratic(7).unwrap();
        let a = f.element2(3, 5).unwrap();
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn w_squares_to_nonresidue_mod_7() {
        let f = FiniteField::quadratic(7).unwrap();
        assert_eq!(f.non_residue(), Some(3));
        let w = f.element2(0, 1).unwrap();
        assert_eq!(w.mul(&w), f.element(3));
    }

    #[test]
    fn sqrt_examples() {
        let f11 = FiniteField::prime(11).unwrap();
        let r = f11.element(3).sqrt().unwrap();
        assert_eq!(r.mul(&r), f11.element(3));
        assert!(r == f11.element(5) || r == f11.element(6));
        assert_eq!(f11.element(1).sqrt().unwrap().mul(&f11.element(1).sqrt().unwrap()), f11.element(1));

        let f7 = FiniteField::prime(7).unwrap();
        assert!(f7.element(3).sqrt().is_none());
        let f49 = FiniteField::quadratic(7).unwrap();
        let r = f49.element(3).sqrt().unwrap();
        assert_eq!(r, f49.element2(0, 1).unwrap());
    }

    #[test]
    fn every_base_element_has_root_upstairs() {
        for p in [5u64, 7, 11, 13] {
            let ext = FiniteField::quadratic(p).unwrap();
            for a in 0..p {
                let x = ext.element(a as i64);
                let r = x.sqrt().expect("root exists in the quadratic extension");
                assert_eq!(r.mul(&r), x);
            }
        }
    }

    #[test]
    fn field_mismatch_detected() {
        let f5 = FiniteField::prime(5).unwrap();
        let f7 = FiniteField::prime(7).unwrap();
        assert_eq!(
            field_arithmetic(f5.one(), f7.one(), FieldOp::Add),
            Err(FfError::FieldMismatch)
        );
        assert_eq!(
            field_arithmetic(f5.one(), f5.zero(), FieldOp::Div),
            Err(FfError::DivisionByZero)
        );
    }

    #[test]
    fn element_parse_round_trip() {
        let f = FiniteField::quadratic(13).unwrap();
        for x in [f.element(0), f.element(9), f.element2(0, 4).unwrap(), f.element2(3, 11).unwrap()] {
            let s = alloc::format!("{}", x);
            assert_eq!(parse_element(f, &s), Some(x));
        }
    }
}

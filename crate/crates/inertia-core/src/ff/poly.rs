//! Dense univariate polynomials with exact coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{FfError, FieldElement, FiniteField};

/// Polynomial in one variable, coefficients ascending; the leading
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FiniteField,
    coeffs: Vec<FieldElement>,
}

/// Operation selector mirroring the polynomial arithmetic surface.
#[derive(Debug, Clone, Copy)]
pub enum PolyOp {
    Add,
    Mul,
    DivRem,
    Scale(i64),
}

/// Result of [`poly_arithmetic`].
pub enum PolyValue {
    One(Polynomial),
    Pair(Polynomial, Polynomial),
}

pub fn poly_arithmetic(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<PolyValue, FfError> {
    if f.field != g.field {
        return Err(FfError::FieldMismatch);
    }
    match op {
        PolyOp::Add => Ok(PolyValue::One(f.add(g))),
        PolyOp::Mul => Ok(PolyValue::One(f.mul(g))),
        PolyOp::DivRem => {
            let (q, r) = f.divrem(g)?;
            Ok(PolyValue::Pair(q, r))
        }
        PolyOp::Scale(c) => Ok(PolyValue::One(f.scale(f.field.element(c)))),
    }
}

impl Polynomial {
    pub fn new(field: FiniteField, coeffs: Vec<FieldElement>) -> Self {
        let mut p = Polynomial { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: FiniteField) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: FiniteField) -> Self {
        Polynomial { field, coeffs: vec![field.one()] }
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::new(c.field(), vec![c])
    }

    /// `c * y^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(field, coeffs)
    }

    /// Builds from integer coefficients, ascending.
    pub fn from_ints(field: FiniteField, coeffs: &[i64]) -> Self {
        Polynomial::new(field, coeffs.iter().map(|&c| field.element(c)).collect())
    }

    /// The monic linear factor `y - root`.
    pub fn linear(root: FieldElement) -> Self {
        let field = root.field();
        Polynomial::new(field, vec![root.neg(), field.one()])
    }

    /// `prod (y - r)` over the given roots.
    pub fn from_roots(field: FiniteField, roots: &[FieldElement]) -> Self {
        let mut acc = Polynomial::one(field);
        for &r in roots {
            acc = acc.mul(&Polynomial::linear(r));
        }
        acc
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// True iff the polynomial is a nonzero constant.
    pub fn is_nonzero_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&other.coeff(i)));
        }
        Polynomial::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Polynomial::new(self.field, coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(self.field, coeffs)
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|x| x.mul(&c)).collect())
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.leading().inv().unwrap())
    }

    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), FfError> {
        if g.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        if self.field != g.field {
            return Err(FfError::FieldMismatch);
        }
        let dg = g.degree().unwrap();
        let lg_inv = g.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); self.coeffs.len().saturating_sub(dg)];
        while rem.len() > dg {
            let k = rem.len() - 1;
            let c = rem[k].mul(&lg_inv);
            if !c.is_zero() {
                quo[k - dg] = c;
                for (i, gc) in g.coeffs.iter().enumerate() {
                    rem[k - dg + i] = rem[k - dg + i].sub(&c.mul(gc));
                }
            }
            rem.pop();
        }
        Ok((Polynomial::new(self.field, quo), Polynomial::new(self.field, rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Polynomial, FfError> {
        let (q, r) = self.divrem(g)?;
        if !r.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        Ok(q)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(c);
        }
        acc
    }

    /// Formal derivative; exponent multiples reduce mod p, so `(y^p)' = 0`.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(i as i64))
            .collect();
        Polynomial::new(self.field, coeffs)
    }

    /// Monic gcd; `gcd(f, 0) = monic f`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("b nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                if d.is_zero() {
                    return false;
                }
                self.gcd(&d).degree() == Some(0)
            }
        }
    }

    /// Lifts every coefficient into the quadratic extension.
    pub fn lift(&self, ext: FiniteField) -> Result<Polynomial, FfError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.lift(ext))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial { field: ext, coeffs })
    }

    /// Root-multiplicity histogram over the algebraic closure: returns
    /// pairs `(count of distinct roots, multiplicity)` sorted by
    /// multiplicity. `None` when some multiplicity is divisible by p (the
    /// radical can then not be read off gcd(f, f')).
    pub fn multiplicity_profile(&self) -> Option<Vec<(usize, u64)>> {
        let deg = self.degree()?;
        let f = self.monic();
        if deg == 0 {
            return Some(Vec::new());
        }
        let g = f.gcd(&f.derivative());
        let radical = f.div_exact(&g).ok()?;
        let mut out = Vec::new();
        let mut rem = f;
        let mut cur = radical;
        let mut mult = 0u64;
        while cur.degree().map_or(false, |d| d > 0) {
            mult += 1;
            rem = rem.div_exact(&cur).ok()?;
            let next = rem.gcd(&cur);
            let exactly_here = cur.degree().unwrap() - next.degree().unwrap();
            if exactly_here > 0 {
                out.push((exactly_here, mult));
            }
            cur = next;
        }
        if rem.degree() != Some(0) {
            return None;
        }
        Some(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => {
                    if c.is_one() {
                        write!(f, "y")?
                    } else {
                        write!(f, "({})*y", c)?
                    }
                }
                _ => {
                    if c.is_one() {
                        write!(f, "y^{}", i)?
                    } else {
                        write!(f, "({})*y^{}", c, i)?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FiniteField {
        FiniteField::prime(5).unwrap()
    }

    #[test]
    fn product_expansion() {
        // (y^2 + 1)(y - 1) = y^3 - y^2 + y - 1 over F_5
        let f = f5();
        let a = Polynomial::from_ints(f, &[1, 0, 1]);
        let b = Polynomial::from_ints(f, &[-1, 1]);
        assert_eq!(a.mul(&b), Polynomial::from_ints(f, &[-1, 1, -1, 1]));
    }

    #[test]
    fn divrem_basic() {
        let f = f5();
        let num = Polynomial::from_ints(f, &[0, 0, 0, 1]); // y^3
        let den = Polynomial::from_ints(f, &[-1, 1]); // y - 1
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(q, Polynomial::from_ints(f, &[1, 1, 1]));
        assert_eq!(r, Polynomial::from_ints(f, &[1]));
    }

    #[test]
    fn derivative_kills_pth_powers() {
        let f = f5();
        // y^5 - y^2: derivative is -2y in characteristic 5
        let g = Polynomial::from_ints(f, &[0, 0, -1, 0, 0, 1]);
        assert_eq!(g.derivative(), Polynomial::from_ints(f, &[0, -2]));
        assert!(Polynomial::from_ints(f, &[3]).derivative().is_zero());

        let f3 = FiniteField::prime(3).unwrap();
        let cube = Polynomial::linear(f3.element(1)).pow(3);
        assert!(cube.derivative().is_zero());
    }

    #[test]
    fn multiplicity_profile_reads_off_structure() {
        let f = f5();
        // y^2 (y-1)^3 (y-2): one root each of multiplicity 1, 2, 3
        let g = Polynomial::linear(f.element(0))
            .pow(2)
            .mul(&Polynomial::linear(f.element(1)).pow(3))
            .mul(&Polynomial::linear(f.element(2)));
        assert_eq!(g.multiplicity_profile().unwrap(), vec![(1, 1), (1, 2), (1, 3)]);

        // y^5 - y^2 = y^2 (y^3 - 1): three simple roots in the closure plus a double root
        let h = Polynomial::from_ints(f, &[0, 0, -1, 0, 0, 1]);
        assert_eq!(h.multiplicity_profile().unwrap(), vec![(3, 1), (1, 2)]);

        // multiplicity beyond p is fine as long as p does not divide it
        let big = Polynomial::linear(f.element(2)).pow(7);
        assert_eq!(big.multiplicity_profile().unwrap(), vec![(1, 7)]);

        // p-th powers are rejected
        assert!(Polynomial::linear(f.element(1)).pow(5).multiplicity_profile().is_none());
    }
}

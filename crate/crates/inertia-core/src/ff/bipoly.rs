//! Bivariate polynomials of the shape the cover equations take: polynomials
//! in `y` whose coefficients are at most linear in `x`.

use alloc::vec::Vec;

use super::{FfError, FieldElement, FiniteField, Polynomial};

/// `sum_k (a_k + b_k x) y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XyPoly {
    field: FiniteField,
    coeffs: Vec<(FieldElement, FieldElement)>,
}

impl XyPoly {
    /// `A(y) - x B(y)`, the defining shape of the covers.
    pub fn cover_equation(a: &Polynomial, b: &Polynomial) -> XyPoly {
        let field = a.field();
        let n = a.coeffs().len().max(b.coeffs().len());
        let coeffs = (0..n).map(|k| (a.coeff(k), b.coeff(k).neg())).collect();
        let mut p = XyPoly { field, coeffs };
        p.trim();
        p
    }

    pub fn from_ypoly(a: &Polynomial) -> XyPoly {
        let field = a.field();
        let zero = field.zero();
        XyPoly {
            field,
            coeffs: a.coeffs().iter().map(|&c| (c, zero)).collect(),
        }
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map_or(false, |(a, b)| a.is_zero() && b.is_zero())
        {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn deg_y(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading `y`-coefficient as `(a, b)` for `a + b x`.
    pub fn leading_y(&self) -> (FieldElement, FieldElement) {
        self.coeffs
            .last()
            .copied()
            .unwrap_or((self.field.zero(), self.field.zero()))
    }

    /// Formal `d/dy`.
    pub fn derivative_y(&self) -> XyPoly {
        if self.coeffs.len() <= 1 {
            return XyPoly { field: self.field, coeffs: Vec::new() };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, (a, b))| (a.scale(k as i64), b.scale(k as i64)))
            .collect();
        let mut p = XyPoly { field: self.field, coeffs };
        p.trim();
        p
    }

    /// Specializes `x` to a field value.
    pub fn eval_x(&self, x: FieldElement) -> Polynomial {
        Polynomial::new(
            x.field(),
            self.coeffs
                .iter()
                .map(|(a, b)| {
                    a.lift(x.field()).unwrap().add(&b.lift(x.field()).unwrap().mul(&x))
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &XyPoly) -> XyPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = (self.field.zero(), self.field.zero());
        let at = |v: &Vec<(FieldElement, FieldElement)>, k: usize| v.get(k).copied().unwrap_or(zero);
        let coeffs = (0..n)
            .map(|k| {
                let (a1, b1) = at(&self.coeffs, k);
                let (a2, b2) = at(&other.coeffs, k);
                (a1.sub(&a2), b1.sub(&b2))
            })
            .collect();
        let mut p = XyPoly { field: self.field, coeffs };
        p.trim();
        p
    }

    /// Multiplication by a polynomial in `y` alone (keeps `x`-linearity).
    pub fn mul_ypoly(&self, g: &Polynomial) -> XyPoly {
        if self.coeffs.is_empty() || g.is_zero() {
            return XyPoly { field: self.field, coeffs: Vec::new() };
        }
        let zero = self.field.zero();
        let mut coeffs = alloc::vec![(zero, zero); self.coeffs.len() + g.coeffs().len() - 1];
        for (i, (a, b)) in self.coeffs.iter().enumerate() {
            for (j, c) in g.coeffs().iter().enumerate() {
                coeffs[i + j].0 = coeffs[i + j].0.add(&a.mul(c));
                coeffs[i + j].1 = coeffs[i + j].1.add(&b.mul(c));
            }
        }
        let mut p = XyPoly { field: self.field, coeffs };
        p.trim();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Resultant with respect to `y` of two `x`-linear polynomials, as a
/// polynomial in `x`. Requires the leading `y`-coefficient of `f` to be a
/// nonzero constant (true for every cover equation: the zero divisor is
/// monic of degree strictly above the pole divisor).
pub fn resultant_y(f: &XyPoly, h: &XyPoly) -> Result<Polynomial, FfError> {
    let n = f.deg_y().ok_or(FfError::DivisionByZero)?;
    if n < 1 {
        return Err(FfError::BadDegree(0));
    }
    let (lc_a, lc_b) = f.leading_y();
    if !lc_b.is_zero() || lc_a.is_zero() {
        return Err(FfError::BadDegree(1));
    }
    if h.is_zero() {
        return Ok(Polynomial::zero(f.field()));
    }
    let m = h.deg_y().unwrap();
    let ext = f.field().extension();
    let lc = lc_a.lift(ext)?;
    // deg_x of the Sylvester determinant is at most n + m (each entry is
    // x-linear); interpolate from n + m + 1 sample points.
    let samples = n + m + 1;
    assert!((samples as u128) <= ext.order(), "field too small to interpolate");
    let mut xs = Vec::with_capacity(samples);
    let mut ys = Vec::with_capacity(samples);
    for x in ext.elements().take(samples) {
        let fe = f.eval_x(x);
        let he = h.eval_x(x);
        debug_assert_eq!(fe.degree(), Some(n));
        let actual = he.degree();
        let corr = match actual {
            None => {
                // h vanished identically at x: resultant value is 0 unless m = 0
                xs.push(x);
                ys.push(ext.zero());
                continue;
            }
            Some(dm) => lc.pow((m - dm) as u128),
        };
        xs.push(x);
        ys.push(corr.mul(&resultant_univ(&fe, &he)));
    }
    let interp = lagrange_interpolate(ext, &xs, &ys);
    if f.field().degree() == 1 {
        // inputs were over F_p, so the resultant is too
        let coeffs = interp
            .coeffs()
            .iter()
            .map(|c| {
                debug_assert!(c.in_base_field());
                f.field().element(c.coords().0 as i64)
            })
            .collect();
        Ok(Polynomial::new(f.field(), coeffs))
    } else {
        Ok(interp)
    }
}

/// Resultant of univariate polynomials over their (common) field, using the
/// Euclidean remainder sequence with sign and leading-coefficient tracking.
pub fn resultant_univ(a: &Polynomial, b: &Polynomial) -> FieldElement {
    let field = a.field();
    let mut a = a.clone();
    let mut b = b.clone();
    let mut acc = field.one();
    loop {
        let da = match a.degree() {
            None => return field.zero(),
            Some(d) => d,
        };
        let db = match b.degree() {
            None => {
                return if da == 0 { acc } else { field.zero() };
            }
            Some(d) => d,
        };
        if da == 0 && db == 0 {
            return acc;
        }
        if db == 0 {
            return acc.mul(&b.leading().pow(da as u128));
        }
        if da < db {
            if (da * db) % 2 == 1 {
                acc = acc.neg();
            }
            core::mem::swap(&mut a, &mut b);
            continue;
        }
        let (_, r) = a.divrem(&b).expect("b nonzero");
        let dr = r.degree();
        // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
        if (da * db) % 2 == 1 {
            acc = acc.neg();
        }
        let drop = da - dr.map_or(0, |d| d);
        match dr {
            None => {
                // r = 0: common factor unless b is constant (handled above)
                return field.zero();
            }
            Some(_) => {
                acc = acc.mul(&b.leading().pow(drop as u128));
                a = b;
                b = r;
            }
        }
    }
}

fn lagrange_interpolate(
    field: FiniteField,
    xs: &[FieldElement],
    ys: &[FieldElement],
) -> Polynomial {
    let mut acc = Polynomial::zero(field);
    for (i, (&xi, &yi)) in xs.iter().zip(ys.iter()).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut num = Polynomial::constant(yi);
        let mut den = field.one();
        for (j, &xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            num = num.mul(&Polynomial::linear(xj));
            den = den.mul(&xi.sub(&xj));
        }
        acc = acc.add(&num.scale(den.inv().unwrap()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resultant_of_shared_factor_vanishes() {
        let f = FiniteField::prime(5).unwrap();
        let a = XyPoly::from_ypoly(&Polynomial::from_ints(f, &[-1, 1]));
        let b = XyPoly::from_ypoly(&Polynomial::from_ints(f, &[-1, 1]));
        assert!(resultant_y(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn resultant_y2_minus_x_with_2y() {
        // Res_y(y^2 - x, 2y) = -4x up to the sign convention; a unit times x.
        let f = FiniteField::prime(7).unwrap();
        let eq = XyPoly::cover_equation(
            &Polynomial::from_ints(f, &[0, 0, 1]),
            &Polynomial::one(f),
        );
        let res = resultant_y(&eq, &eq.derivative_y()).unwrap();
        assert_eq!(res.degree(), Some(1));
        assert!(res.coeff(0).is_zero());
        assert_eq!(res.coeff(1), f.element(-4));
    }

    #[test]
    fn artin_schreier_like_equation_branches_only_at_zero() {
        // f = y^p - y^2 - x: Res_y(f, f_y) = c x with c nonzero
        for p in [5u64, 7, 11] {
            let f = FiniteField::prime(p).unwrap();
            let mut a = alloc::vec![0i64; p as usize + 1];
            a[p as usize] = 1;
            a[2] = -1;
            let eq = XyPoly::cover_equation(&Polynomial::from_ints(f, &a), &Polynomial::one(f));
            let res = resultant_y(&eq, &eq.derivative_y()).unwrap();
            assert_eq!(res.degree(), Some(1), "p={}", p);
            assert!(res.coeff(0).is_zero());
            assert!(!res.coeff(1).is_zero());
        }
    }

    #[test]
    fn sylvester_3x3_oracle() {
        // Independent check of Res_y(y^2 - x, 2y) by the 3x3 Sylvester
        // determinant | 1 0 -x ; 2 0 0 ; 0 2 0 | = 4x... with sign -4x.
        // Expand along the middle rows: det = 1*(0*0-0*2) - 0 + (-x)*(2*2-0*0)
        let f = FiniteField::prime(11).unwrap();
        for xv in 0..11 {
            let x = f.element(xv);
            let det = x.scale(-4);
            let eq = XyPoly::cover_equation(
                &Polynomial::from_ints(f, &[0, 0, 1]),
                &Polynomial::one(f),
            );
            let res = resultant_y(&eq, &eq.derivative_y()).unwrap();
            assert_eq!(res.eval(x), det);
        }
    }
}

//! Analyzer for the explicit two-point branched covers `A(y) = x B(y)`:
//! parameter validation, the numerator assumption, ramification reports,
//! Galois-group criteria and witness search.

mod analysis;
mod witness;

pub use analysis::{
    check_assumption, expand_cover_polys, galois_decision, pullback_identity_holds,
    r1_coefficient_conditions, ramification_report, AssumptionVerdict, CoverPolys,
    GaloisVerdict, RamificationReport,
};
pub use witness::{
    known_witness, solve_cluster_family, witness_search, ClusterPattern, WitnessFamily,
};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::ff::{is_prime, join_elements, parse_element, FfError, FieldElement, FiniteField, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    SideConditionViolated(String),
    AssumptionFails,
    BudgetExceeded,
    Invalid(Vec<SpecViolation>),
    /// the operation needs explicit (degree-one) root data
    NotExplicit,
    Ff(FfError),
    Parse(String),
}

impl From<FfError> for CoverError {
    fn from(e: FfError) -> Self {
        CoverError::Ff(e)
    }
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::SideConditionViolated(s) => write!(f, "side condition violated: {}", s),
            CoverError::AssumptionFails => write!(f, "numerator assumption fails"),
            CoverError::BudgetExceeded => write!(f, "search budget exceeded"),
            CoverError::Invalid(v) => {
                write!(f, "invalid cover spec:")?;
                for x in v {
                    write!(f, " {};", x)?;
                }
                Ok(())
            }
            CoverError::NotExplicit => write!(f, "operation requires explicit roots"),
            CoverError::Ff(e) => write!(f, "{}", e),
            CoverError::Parse(s) => write!(f, "parse error: {}", s),
        }
    }
}

/// A set of ramified points packaged as a squarefree polynomial whose roots
/// all carry one multiplicity. Explicit points are degree-one clusters;
/// higher-degree clusters let the roots live in extensions without leaving
/// exact arithmetic over the declared field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCluster {
    pub poly: Polynomial,
    pub multiplicity: u64,
}

impl RootCluster {
    pub fn point(at: FieldElement, multiplicity: u64) -> RootCluster {
        RootCluster { poly: Polynomial::linear(at), multiplicity }
    }

    pub fn count(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

/// Parameters of one explicit cover: fibre data over 0 (zeros of `A`) and
/// the finite part of the fibre over infinity (roots of `B`), with the
/// residual point at infinity carrying index `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    pub p: u64,
    pub t: u64,
    pub field: FiniteField,
    pub zeros: Vec<RootCluster>,
    pub poles: Vec<RootCluster>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    NotOddPrime(u64),
    WrongFieldCharacteristic,
    MultiplicityDivisibleByP(u64),
    ZeroMultiplicity,
    DegreeTooSmall(u64),
    TailTooLarge { t: u64, p: u64 },
    ZeroSumMismatch { got: u64, want: u64 },
    PoleSumMismatch { got: u64, want: u64 },
    PolesForDegreePFamily,
    NoPolesForTwoPointFamily,
    ClusterNotSquarefree,
    ClusterConstant,
    RootsCollide,
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecViolation::NotOddPrime(p) => write!(f, "p = {} is not an odd prime", p),
            SpecViolation::WrongFieldCharacteristic => {
                write!(f, "field characteristic differs from p")
            }
            SpecViolation::MultiplicityDivisibleByP(m) => {
                write!(f, "multiplicity {} is divisible by p", m)
            }
            SpecViolation::ZeroMultiplicity => write!(f, "multiplicities must be positive"),
            SpecViolation::DegreeTooSmall(d) => write!(f, "degree {} is below 5", d),
            SpecViolation::TailTooLarge { t, p } => {
                write!(f, "t = {} must stay below p = {}", t, p)
            }
            SpecViolation::ZeroSumMismatch { got, want } => {
                write!(f, "indices over 0 sum to {}, expected {}", got, want)
            }
            SpecViolation::PoleSumMismatch { got, want } => {
                write!(f, "finite pole indices sum to {}, expected {}", got, want)
            }
            SpecViolation::PolesForDegreePFamily => {
                write!(f, "the degree-p family (t = 0) admits no finite poles")
            }
            SpecViolation::NoPolesForTwoPointFamily => {
                write!(f, "t >= 1 requires at least one finite pole")
            }
            SpecViolation::ClusterNotSquarefree => write!(f, "cluster polynomial is not squarefree"),
            SpecViolation::ClusterConstant => write!(f, "cluster polynomial is constant"),
            SpecViolation::RootsCollide => write!(f, "zeros and poles are not pairwise distinct"),
        }
    }
}

impl CoverSpec {
    /// Spec with explicit points: `n[i]` at `alpha[i]` over zero and `m[l]`
    /// at `beta[l]` over infinity.
    pub fn explicit(
        p: u64,
        t: u64,
        field: FiniteField,
        n: &[u64],
        alpha: &[FieldElement],
        m: &[u64],
        beta: &[FieldElement],
    ) -> CoverSpec {
        assert_eq!(n.len(), alpha.len());
        assert_eq!(m.len(), beta.len());
        CoverSpec {
            p,
            t,
            field,
            zeros: n
                .iter()
                .zip(alpha.iter())
                .map(|(&mult, &at)| RootCluster::point(at, mult))
                .collect(),
            poles: m
                .iter()
                .zip(beta.iter())
                .map(|(&mult, &at)| RootCluster::point(at, mult))
                .collect(),
        }
    }

    pub fn degree(&self) -> u64 {
        self.p + self.t
    }

    /// Number of distinct points over zero.
    pub fn s(&self) -> usize {
        self.zeros.iter().map(|c| c.count()).sum()
    }

    /// Number of distinct finite poles.
    pub fn r(&self) -> usize {
        self.poles.iter().map(|c| c.count()).sum()
    }

    /// True when every cluster is a single explicit point.
    pub fn is_explicit(&self) -> bool {
        self.zeros.iter().chain(self.poles.iter()).all(|c| c.count() == 1)
    }

    pub fn explicit_zero_data(&self) -> Option<(Vec<u64>, Vec<FieldElement>)> {
        if !self.is_explicit() {
            return None;
        }
        let mut n = Vec::new();
        let mut alpha = Vec::new();
        for c in &self.zeros {
            n.push(c.multiplicity);
            alpha.push(c.poly.coeff(0).neg());
        }
        Some((n, alpha))
    }

    pub fn explicit_pole_data(&self) -> Option<(Vec<u64>, Vec<FieldElement>)> {
        if !self.is_explicit() {
            return None;
        }
        let mut m = Vec::new();
        let mut beta = Vec::new();
        for c in &self.poles {
            m.push(c.multiplicity);
            beta.push(c.poly.coeff(0).neg());
        }
        Some((m, beta))
    }

    /// Checks every invariant; returns the list of violations.
    pub fn validate(&self) -> Vec<SpecViolation> {
        let mut out = Vec::new();
        if !is_prime(self.p) || self.p % 2 == 0 {
            out.push(SpecViolation::NotOddPrime(self.p));
            return out;
        }
        if self.field.characteristic() != self.p {
            out.push(SpecViolation::WrongFieldCharacteristic);
        }
        let d = self.degree();
        if d < 5 {
            out.push(SpecViolation::DegreeTooSmall(d));
        }
        if self.t >= self.p {
            out.push(SpecViolation::TailTooLarge { t: self.t, p: self.p });
        }
        if self.t == 0 && !self.poles.is_empty() {
            out.push(SpecViolation::PolesForDegreePFamily);
        }
        if self.t >= 1 && self.poles.is_empty() {
            out.push(SpecViolation::NoPolesForTwoPointFamily);
        }
        let mut zero_sum = 0u64;
        let mut pole_sum = 0u64;
        for (cl, sum) in self
            .zeros
            .iter()
            .map(|c| (c, &mut zero_sum))
            .chain(self.poles.iter().map(|c| (c, &mut pole_sum)))
        {
            if cl.multiplicity == 0 {
                out.push(SpecViolation::ZeroMultiplicity);
                continue;
            }
            if cl.multiplicity % self.p == 0 {
                out.push(SpecViolation::MultiplicityDivisibleByP(cl.multiplicity));
            }
            match cl.poly.degree() {
                None | Some(0) => out.push(SpecViolation::ClusterConstant),
                Some(k) => {
                    *sum += cl.multiplicity * k as u64;
                    if !cl.poly.is_squarefree() {
                        out.push(SpecViolation::ClusterNotSquarefree);
                    }
                }
            }
        }
        if zero_sum != d {
            out.push(SpecViolation::ZeroSumMismatch { got: zero_sum, want: d });
        }
        if pole_sum != self.t {
            out.push(SpecViolation::PoleSumMismatch { got: pole_sum, want: self.t });
        }
        // joint distinctness: pairwise coprime clusters
        let all: Vec<&RootCluster> = self.zeros.iter().chain(self.poles.iter()).collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i].poly.gcd(&all[j].poly).degree() != Some(0) {
                    out.push(SpecViolation::RootsCollide);
                }
            }
        }
        out
    }

    /// Applies the affine substitution `root -> c*root + e` (with `c != 0`)
    /// to every ramified point; the assumption verdict is invariant under
    /// this action.
    pub fn affine_map(&self, c: FieldElement, e: FieldElement) -> Result<CoverSpec, CoverError> {
        if c.is_zero() {
            return Err(CoverError::Ff(FfError::DivisionByZero));
        }
        let map = |cl: &RootCluster| -> Result<RootCluster, CoverError> {
            // roots a of C map to c*a + e: new poly = c^deg * C((y - e)/c)
            let cinv = c.inv()?;
            let shift = Polynomial::new(
                self.field,
                alloc::vec![e.neg().mul(&cinv), cinv],
            );
            let mut acc = Polynomial::zero(self.field);
            for &co in cl.poly.coeffs().iter().rev() {
                acc = acc.mul(&shift).add(&Polynomial::constant(co));
            }
            let deg = cl.poly.degree().unwrap_or(0) as u64;
            Ok(RootCluster {
                poly: acc.scale(c.pow(deg as u128)),
                multiplicity: cl.multiplicity,
            })
        };
        Ok(CoverSpec {
            p: self.p,
            t: self.t,
            field: self.field,
            zeros: self.zeros.iter().map(&map).collect::<Result<_, _>>()?,
            poles: self.poles.iter().map(&map).collect::<Result<_, _>>()?,
        })
    }

    /// Normal form under the affine action: first pole at 0 (when poles
    /// exist, otherwise first zero at 0) and the first remaining point at 1.
    pub fn affine_normalize(&self) -> Result<CoverSpec, CoverError> {
        let (_, alpha) = self.explicit_zero_data().ok_or(CoverError::NotExplicit)?;
        let (_, beta) = self.explicit_pole_data().ok_or(CoverError::NotExplicit)?;
        let (origin, unit) = if !beta.is_empty() {
            (beta[0], alpha[0])
        } else {
            (alpha[0], alpha[1])
        };
        // translate origin to 0, then scale unit to 1
        let shifted = unit.sub(&origin);
        let c = shifted.inv()?;
        let e = origin.mul(&c).neg();
        self.affine_map(c, e)
    }

    /// The textual key-value format (explicit specs only); quadratic
    /// extensions declare the non-residue on a header line.
    pub fn serialize(&self) -> Result<String, CoverError> {
        let (n, alpha) = self.explicit_zero_data().ok_or(CoverError::NotExplicit)?;
        let (m, beta) = self.explicit_pole_data().ok_or(CoverError::NotExplicit)?;
        let mut out = String::new();
        if let Some(nu) = self.field.non_residue() {
            out.push_str(&format!("w^2={}\n", nu));
        }
        let nums = |xs: &[u64]| {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        out.push_str(&format!(
            "p={} t={} s={} r={} n={} m={} alpha={} beta={} field={}",
            self.p,
            self.t,
            self.s(),
            self.r(),
            nums(&n),
            nums(&m),
            join_elements(&alpha),
            join_elements(&beta),
            if self.field.degree() == 2 { "Fp2" } else { "Fp" },
        ));
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<CoverSpec, CoverError> {
        let mut nu_line = None;
        let mut body = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("w^2=") {
                nu_line = Some(
                    rest.trim()
                        .parse::<u64>()
                        .map_err(|_| CoverError::Parse("bad non-residue".to_string()))?,
                );
            } else {
                body = Some(line);
            }
        }
        let body = body.ok_or_else(|| CoverError::Parse("missing spec line".to_string()))?;
        let mut kv = alloc::collections::BTreeMap::new();
        for tok in body.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| CoverError::Parse(format!("expected key=value, got {}", tok)))?;
            kv.insert(k, v);
        }
        let get = |k: &str| {
            kv.get(k)
                .copied()
                .ok_or_else(|| CoverError::Parse(format!("missing key {}", k)))
        };
        let p: u64 = get("p")?
            .parse()
            .map_err(|_| CoverError::Parse("bad p".to_string()))?;
        let t: u64 = get("t")?
            .parse()
            .map_err(|_| CoverError::Parse("bad t".to_string()))?;
        let field = match get("field")? {
            "Fp" => FiniteField::prime(p).map_err(CoverError::Ff)?,
            "Fp2" => {
                let f = FiniteField::quadratic(p).map_err(CoverError::Ff)?;
                if let Some(nu) = nu_line {
                    if f.non_residue() != Some(nu) {
                        return Err(CoverError::Parse(
                            "declared non-residue differs from the canonical choice".to_string(),
                        ));
                    }
                }
                f
            }
            other => return Err(CoverError::Parse(format!("unknown field {}", other))),
        };
        let parse_nums = |s: &str| -> Result<Vec<u64>, CoverError> {
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|x| x.parse::<u64>().map_err(|_| CoverError::Parse("bad index".to_string())))
                .collect()
        };
        let parse_elts = |s: &str| -> Result<Vec<FieldElement>, CoverError> {
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|x| {
                    parse_element(field, x)
                        .ok_or_else(|| CoverError::Parse(format!("bad element {}", x)))
                })
                .collect()
        };
        let n = parse_nums(get("n")?)?;
        let m = if kv.contains_key("m") { parse_nums(get("m")?)? } else { Vec::new() };
        let alpha = parse_elts(get("alpha")?)?;
        let beta = if kv.contains_key("beta") { parse_elts(get("beta")?)? } else { Vec::new() };
        if n.len() != alpha.len() || m.len() != beta.len() {
            return Err(CoverError::Parse("index and point counts differ".to_string()));
        }
        Ok(CoverSpec::explicit(p, t, field, &n, &alpha, &m, &beta))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_the_quoted_p5_witness() {
        // n = (3,2,1) at (3/4, 1/4, 1) = (2, 4, 1) mod 5 with one pole of
        // index 1 at 0
        let f = FiniteField::prime(5).unwrap();
        let spec = CoverSpec::explicit(
            5,
            1,
            f,
            &[3, 2, 1],
            &[f.element(2), f.element(4), f.element(1)],
            &[1],
            &[f.element(0)],
        );
        assert!(spec.validate().is_empty());
        assert_eq!(spec.degree(), 6);
        assert_eq!(spec.s(), 3);
        assert_eq!(spec.r(), 1);
    }

    #[test]
    fn validation_catches_bad_specs() {
        let f = FiniteField::prime(5).unwrap();
        // n1 = p violates coprimality
        let spec = CoverSpec::explicit(5, 0, f, &[5], &[f.element(0)], &[], &[]);
        assert!(spec
            .validate()
            .contains(&SpecViolation::MultiplicityDivisibleByP(5)));
        // colliding alpha and beta
        let spec = CoverSpec::explicit(
            5,
            1,
            f,
            &[4, 2],
            &[f.element(0), f.element(1)],
            &[1],
            &[f.element(0)],
        );
        assert!(spec.validate().contains(&SpecViolation::RootsCollide));
    }

    #[test]
    fn file_format_round_trip() {
        let f = FiniteField::prime(7).unwrap();
        let spec = CoverSpec::explicit(
            7,
            2,
            f,
            &[8, 1],
            &[f.element(1), f.element(6)],
            &[2],
            &[f.element(0)],
        );
        let s = spec.serialize().unwrap();
        assert_eq!(CoverSpec::parse(&s).unwrap(), spec);

        let f2 = FiniteField::quadratic(5).unwrap();
        let spec2 = CoverSpec::explicit(
            5,
            1,
            f2,
            &[3, 2, 1],
            &[
                f2.element2(2, 1).unwrap(),
                f2.element2(4, 4).unwrap(),
                f2.element(1),
            ],
            &[1],
            &[f2.element(0)],
        );
        let s2 = spec2.serialize().unwrap();
        assert!(s2.starts_with("w^2=2\n"));
        assert_eq!(CoverSpec::parse(&s2).unwrap(), spec2);
    }

    #[test]
    fn affine_map_moves_roots() {
        let f = FiniteField::prime(7).unwrap();
        let spec = CoverSpec::explicit(
            7,
            2,
            f,
            &[8, 1],
            &[f.element(1), f.element(6)],
            &[2],
            &[f.element(0)],
        );
        let mapped = spec.affine_map(f.element(2), f.element(3)).unwrap();
        let (_, alpha) = mapped.explicit_zero_data().unwrap();
        assert_eq!(alpha, alloc::vec![f.element(5), f.element(15)]);
        let norm = mapped.affine_normalize().unwrap();
        let (_, alpha) = norm.explicit_zero_data().unwrap();
        let (_, beta) = norm.explicit_pole_data().unwrap();
        assert_eq!(beta[0], f.element(0));
        assert_eq!(alpha[0], f.element(1));
    }
}

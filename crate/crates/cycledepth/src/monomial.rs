//! Monomials as exponent vectors over a fixed ambient variable count.
//!
//! A monomial is written `x1^2*x3` in text form; the constant monomial is
//! `1`. All arithmetic is exact on machine integers, with a global cap on
//! total degree so that desk-scale computations can never overflow silently.

use std::fmt;

use crate::error::{Error, Result};

/// Largest total degree a single monomial may reach. The worked cycle
/// examples go up to degree 88 (products of eleven degree-8 generators),
/// so the cap is generous but still rules out runaway powers.
pub const MAX_TOTAL_DEGREE: u32 = 1024;

/// A monomial `x^a` in `n` variables, stored as its exponent vector.
///
/// The ambient variable count is `exponents().len()`. Ordering is
/// lexicographic on exponent vectors, which is also the canonical
/// generator order used everywhere in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidParams("ambient must have n >= 1".into()));
        }
        let degree: u64 = exps.iter().map(|&e| e as u64).sum();
        if degree > MAX_TOTAL_DEGREE as u64 {
            return Err(Error::DegreeCap {
                degree,
                cap: MAX_TOTAL_DEGREE,
            });
        }
        Ok(Monomial { exps })
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        assert!(n >= 1, "ambient must have n >= 1");
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (0-based index `i`) in `n` variables.
    pub fn var(i: usize, n: usize) -> Self {
        assert!(i < n, "variable index {i} out of range for n={n}");
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        Ok(())
    }

    /// `true` iff `self` divides `other`, i.e. componentwise `<=`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self^t`.
    pub fn pow(&self, t: u32) -> Result<Self> {
        let degree = self.degree() as u64 * t as u64;
        if degree > MAX_TOTAL_DEGREE as u64 {
            return Err(Error::DegreeCap {
                degree,
                cap: MAX_TOTAL_DEGREE,
            });
        }
        Ok(Monomial {
            exps: self.exps.iter().map(|&e| e * t).collect(),
        })
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Self) -> Result<Option<Self>> {
        if !other.divides(self)? {
            return Ok(None);
        }
        Ok(Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        }))
    }

    /// `self / gcd(self, other)`, the saturated quotient used by colon ideals.
    pub fn quotient_by_gcd(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        })
    }

    /// Componentwise max, i.e. `lcm` of the two monomials.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise min, i.e. `gcd` of the two monomials.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        })
    }

    /// Re-embeds the monomial in a ring with `extra` fresh trailing variables.
    pub fn extend_ambient(&self, extra: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps }
    }

    /// Parses the text form `x1^2*x3` (or `1`) with an explicit ambient.
    ///
    /// Variable indices are 1-based in the text form, must be `<= ambient`,
    /// and may repeat (`x1*x1` is `x1^2`).
    pub fn parse(input: &str, ambient: usize) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::InvalidParams("ambient must have n >= 1".into()));
        }
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut exps = vec![0u64; ambient];
        for factor in s.split('*') {
            let f = factor.trim();
            if f == "1" {
                continue;
            }
            let rest = f
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected variable, got `{f}`")))?;
            let (idx_str, exp_str) = match rest.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (rest, None),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{f}`")))?;
            if idx == 0 || idx > ambient {
                return Err(Error::Parse(format!(
                    "variable index {idx} out of range 1..={ambient}"
                )));
            }
            let exp: u32 = match exp_str {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{f}`")))?,
                None => 1,
            };
            exps[idx - 1] += exp as u64;
            if exps[idx - 1] > MAX_TOTAL_DEGREE as u64 {
                return Err(Error::DegreeCap {
                    degree: exps[idx - 1],
                    cap: MAX_TOTAL_DEGREE,
                });
            }
        }
        Monomial::new(exps.into_iter().map(|e| e as u32).collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    #[test]
    fn divides_componentwise() {
        assert!(m(&[1, 0]).divides(&m(&[1, 1])).unwrap());
        assert!(!m(&[2, 0]).divides(&m(&[1, 1])).unwrap());
        // x1*x2 | x1*x2*x3 in n=3
        assert!(m(&[1, 1, 0]).divides(&m(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn divides_ambient_mismatch_is_an_error() {
        let err = m(&[1, 0]).divides(&m(&[1, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::AmbientMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn degree_and_support() {
        let u = m(&[2, 0, 1]);
        assert_eq!(u.degree(), 3);
        assert_eq!(u.support().collect::<Vec<_>>(), vec![0, 2]);
    }

    #[test]
    fn quotient_by_gcd_matches_colon_formula() {
        // (x1*x2) / gcd(x1*x2, x2) = x1
        assert_eq!(m(&[1, 1]).quotient_by_gcd(&m(&[0, 1])), Ok(m(&[1, 0])).map_err(|_: Error| ()).unwrap_or_else(|_| unreachable!()));
    }

    #[test]
    fn degree_cap_enforced() {
        let err = Monomial::new(vec![MAX_TOTAL_DEGREE, 1]).unwrap_err();
        assert!(matches!(err, Error::DegreeCap { .. }));
        // the (12,8) worked example needs degree 88 monomials to construct
        assert!(Monomial::new(vec![8; 11]).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let u = Monomial::parse("x1^2*x3", 3).unwrap();
        assert_eq!(u.exponents(), &[2, 0, 1]);
        assert_eq!(u.to_string(), "x1^2*x3");
        assert_eq!(Monomial::parse("1", 2).unwrap(), Monomial::one(2));
        assert_eq!(Monomial::one(2).to_string(), "1");
        // repeated factors accumulate
        assert_eq!(Monomial::parse("x2*x2", 2).unwrap().exponents(), &[0, 2]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Monomial::parse("", 2).is_err());
        assert!(Monomial::parse("y1", 2).is_err());
        assert!(Monomial::parse("x0", 2).is_err());
        assert!(Monomial::parse("x3", 2).is_err());
        assert!(Monomial::parse("x1^", 2).is_err());
        assert!(Monomial::parse("x1^-1", 2).is_err());
    }
}

//! Exact field scalars: arbitrary-precision rationals and prime fields.
//!
//! Every scalar carries its field descriptor, and arithmetic between
//! scalars of different fields is a contract violation (public entry
//! points reject such inputs with [`Error::InvalidInput`] before any
//! arithmetic runs). There is no floating point anywhere in this crate.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Descriptor of the ground field: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The field of rational numbers.
    Q,
    /// The prime field with `p` elements.
    Fp(u64),
}

impl Field {
    /// Validates the descriptor (`p` must be prime).
    pub fn validate(&self) -> Result<()> {
        match self {
            Field::Q => Ok(()),
            Field::Fp(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::invalid(format!("{p} is not prime")))
                }
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldScalar {
        match self {
            Field::Q => FieldScalar::Rational(BigRational::zero()),
            Field::Fp(p) => FieldScalar::Fp { residue: 0, p: *p },
        }
    }

    pub fn one(&self) -> FieldScalar {
        match self {
            Field::Q => FieldScalar::Rational(BigRational::one()),
            Field::Fp(p) => FieldScalar::Fp { residue: 1 % *p, p: *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldScalar {
        match self {
            Field::Q => FieldScalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Fp(p) => {
                let m = v.rem_euclid(*p as i64);
                FieldScalar::Fp { residue: m as u64, p: *p }
            }
        }
    }

    /// A scalar with small entries, used by the seeded search for
    /// invertible hom-space combinations.
    pub fn random_small<R: Rng>(&self, rng: &mut R) -> FieldScalar {
        match self {
            Field::Q => self.from_i64(rng.gen_range(0..5)),
            Field::Fp(p) => FieldScalar::Fp { residue: rng.gen_range(0..*p), p: *p },
        }
    }

    /// Parses the canonical string form: `a` or `a/b` over Q, a residue
    /// over Fp (signs accepted, output is always canonical).
    pub fn parse_scalar(&self, s: &str) -> Result<FieldScalar> {
        let s = s.trim();
        match self {
            Field::Q => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num)
                    .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
                let den = BigInt::from_str(den)
                    .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::invalid(format!("zero denominator in {s:?}")));
                }
                Ok(FieldScalar::Rational(BigRational::new(num, den)))
            }
            Field::Fp(p) => {
                let v = i128::from_str(s)
                    .map_err(|_| Error::invalid(format!("bad residue {s:?}")))?;
                let m = v.rem_euclid(*p as i128);
                Ok(FieldScalar::Fp { residue: m as u64, p: *p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact element of Q or of a prime field.
///
/// Rationals are kept in lowest terms with positive denominator (the
/// representation `BigRational` maintains this), prime-field residues in
/// `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldScalar {
    Rational(BigRational),
    Fp { residue: u64, p: u64 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Q,
            FieldScalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn rational(num: i64, den: i64) -> FieldScalar {
        assert!(den != 0, "zero denominator");
        FieldScalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn fp(p: u64, v: i64) -> FieldScalar {
        FieldScalar::Fp { residue: v.rem_euclid(p as i64) as u64, p }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Fp { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Fp { residue, p } => *residue == 1 % *p,
        }
    }

    fn expect_same_field(&self, other: &FieldScalar) {
        assert!(
            self.field() == other.field(),
            "mixed field descriptors: {} vs {}",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &FieldScalar) -> FieldScalar {
        self.expect_same_field(other);
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Fp { residue: a, p }, FieldScalar::Fp { residue: b, .. }) => {
                FieldScalar::Fp { residue: addmod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &FieldScalar) -> FieldScalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldScalar) -> FieldScalar {
        self.expect_same_field(other);
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Fp { residue: a, p }, FieldScalar::Fp { residue: b, .. }) => {
                FieldScalar::Fp { residue: mulmod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Fp { residue, p } => {
                FieldScalar::Fp { residue: if *residue == 0 { 0 } else { p - residue }, p: *p }
            }
        }
    }

    /// Multiplicative inverse; `InvalidInput` on zero.
    pub fn inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::invalid("division by zero"));
        }
        Ok(match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(a.recip()),
            FieldScalar::Fp { residue, p } => {
                // Fermat: a^(p-2) mod p
                FieldScalar::Fp { residue: powmod(*residue, p - 2, *p), p: *p }
            }
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldScalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Canonical string form used by the file format.
    pub fn to_canonical_string(&self) -> String {
        match self {
            FieldScalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            FieldScalar::Fp { residue, .. } => residue.to_string(),
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
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
        let mut x = powmod(a, d, n);
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

/// True iff the rational scalar has positive sign (used only for display
/// niceties in the CLI; prime-field residues have no sign).
pub fn rational_is_negative(s: &FieldScalar) -> bool {
    match s {
        FieldScalar::Rational(r) => r.is_negative(),
        FieldScalar::Fp { .. } => false,
    }
}

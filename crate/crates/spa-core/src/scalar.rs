//! Exact coefficient arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every quantity downstream is exact; no floating point appears anywhere in
//! the crate. Rationals are kept in reduced form with a positive denominator,
//! prime-field residues in `[0, p)`.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The base field `K`: the rationals, or integers modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Prime-field constructor; rejects composite or unit moduli.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidAlgebra(format!("modulus {p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::zero()),
            FieldSpec::PrimeField(p) => Coefficient::Prime { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::one()),
            FieldSpec::PrimeField(p) => Coefficient::Prime { value: 1 % *p, modulus: *p },
        }
    }

    /// Embeds a signed integer into the field.
    pub fn integer(&self, n: i64) -> Coefficient {
        match self {
            FieldSpec::Rationals => Coefficient::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p_i = *p as i128;
                let r = ((n as i128 % p_i) + p_i) % p_i;
                Coefficient::Prime { value: r as u64, modulus: *p }
            }
        }
    }

    /// Embeds the fraction `numer/denom`.
    pub fn fraction(&self, numer: i64, denom: i64) -> Result<Coefficient> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        self.integer(numer).checked_div(&self.integer(denom))
    }

    pub fn contains(&self, c: &Coefficient) -> bool {
        matches!(
            (self, c),
            (FieldSpec::Rationals, Coefficient::Rational(_))
        ) || matches!((self, c), (FieldSpec::PrimeField(p), Coefficient::Prime { modulus, .. }) if p == modulus)
    }

    /// Parses a textual literal: an integer or an `a/b` fraction, reduced into
    /// this field.
    pub fn parse(&self, text: &str) -> Result<Coefficient> {
        let text = text.trim();
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let numer: BigInt = num_str
            .parse()
            .map_err(|_| Error::InvalidAlgebra(format!("malformed coefficient literal `{text}`")))?;
        let denom: BigInt = match den_str {
            Some(d) => d
                .parse()
                .map_err(|_| Error::InvalidAlgebra(format!("malformed coefficient literal `{text}`")))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Coefficient::Rational(BigRational::new(numer, denom))),
            FieldSpec::PrimeField(p) => {
                let n = Coefficient::Prime { value: bigint_mod(&numer, *p), modulus: *p };
                let d = Coefficient::Prime { value: bigint_mod(&denom, *p), modulus: *p };
                n.checked_div(&d)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    r.to_u64().expect("residue fits in u64")
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the base field, stored exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Coefficient {
    pub fn field(&self) -> FieldSpec {
        match self {
            Coefficient::Rational(_) => FieldSpec::Rationals,
            Coefficient::Prime { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_zero(),
            Coefficient::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_one(),
            Coefficient::Prime { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, other: &Coefficient) -> Result<Coefficient> {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Ok(Coefficient::Rational(a + b)),
            (Coefficient::Prime { value: a, modulus: p }, Coefficient::Prime { value: b, modulus: q })
                if p == q =>
            {
                Ok(Coefficient::Prime { value: add_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn checked_sub(&self, other: &Coefficient) -> Result<Coefficient> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Coefficient) -> Result<Coefficient> {
        match (self, other) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Ok(Coefficient::Rational(a * b)),
            (Coefficient::Prime { value: a, modulus: p }, Coefficient::Prime { value: b, modulus: q })
                if p == q =>
            {
                Ok(Coefficient::Prime { value: mul_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Multiplicative inverse; zero has none.
    pub fn checked_inv(&self) -> Result<Coefficient> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Coefficient::Rational(r) => Ok(Coefficient::Rational(r.recip())),
            Coefficient::Prime { value, modulus } => {
                Ok(Coefficient::Prime { value: inv_mod(*value, *modulus), modulus: *modulus })
            }
        }
    }

    pub fn checked_div(&self, other: &Coefficient) -> Result<Coefficient> {
        self.checked_mul(&other.checked_inv()?)
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(-r),
            Coefficient::Prime { value, modulus } => Coefficient::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// `self^exp` by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Coefficient {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base.clone());
            exp >>= 1;
        }
        acc
    }

    // Internal panicking arithmetic for contexts where the field is uniform by
    // construction.
    pub(crate) fn add(&self, other: &Coefficient) -> Coefficient {
        self.checked_add(other).expect("coefficient fields agree")
    }

    pub(crate) fn mul(&self, other: &Coefficient) -> Coefficient {
        self.checked_mul(other).expect("coefficient fields agree")
    }

    pub(crate) fn div(&self, other: &Coefficient) -> Coefficient {
        self.checked_div(other).expect("nonzero divisor in the same field")
    }

    pub(crate) fn inv(&self) -> Coefficient {
        self.checked_inv().expect("nonzero coefficient")
    }

    /// True for strictly negative rationals; prime-field residues have no sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(r) => r.is_negative(),
            Coefficient::Prime { .. } => false,
        }
    }

    /// Absolute value (identity on prime fields).
    pub fn abs(&self) -> Coefficient {
        match self {
            Coefficient::Rational(r) => Coefficient::Rational(r.abs()),
            c => c.clone(),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coefficient::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a nonzero mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse exists modulo a prime");
    let p_i = p as i128;
    (((s0 % p_i) + p_i) % p_i) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qq(n: i64, d: i64) -> Coefficient {
        FieldSpec::Rationals.fraction(n, d).unwrap()
    }

    #[test]
    fn rational_addition_is_exact() {
        assert_eq!(qq(1, 2).add(&qq(1, 3)), qq(5, 6));
    }

    #[test]
    fn prime_inverse_matches_brute_force() {
        // Oracle: search for x with 3x = 1 mod 7.
        let p = 7u64;
        let brute = (1..p).find(|x| (3 * x) % p == 1).unwrap();
        assert_eq!(brute, 5);
        let f = FieldSpec::prime_field(7).unwrap();
        assert_eq!(f.integer(3).checked_inv().unwrap(), f.integer(5));
    }

    #[test]
    fn additive_identity() {
        let a = qq(-7, 3);
        assert_eq!(a.add(&FieldSpec::Rationals.zero()), a);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(FieldSpec::Rationals.zero().checked_inv(), Err(Error::DivisionByZero));
        let f = FieldSpec::prime_field(13).unwrap();
        assert_eq!(f.zero().checked_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f = FieldSpec::prime_field(5).unwrap();
        assert_eq!(qq(1, 1).checked_add(&f.one()), Err(Error::FieldMismatch));
        let g = FieldSpec::prime_field(7).unwrap();
        assert_eq!(f.one().checked_mul(&g.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(32003).is_ok());
    }

    #[test]
    fn literal_parsing() {
        let f = FieldSpec::Rationals;
        assert_eq!(f.parse("5/6").unwrap(), qq(5, 6));
        assert_eq!(f.parse("-12").unwrap(), f.integer(-12));
        let gf = FieldSpec::prime_field(7).unwrap();
        assert_eq!(gf.parse("10").unwrap(), gf.integer(3));
        assert_eq!(gf.parse("1/3").unwrap(), gf.integer(5));
        assert!(gf.parse("1/7").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Coefficient> {
        (-40i64..=40, 1i64..=17).prop_map(|(n, d)| qq(n, d))
    }

    fn arb_gf() -> impl Strategy<Value = Coefficient> {
        (0u64..101).prop_map(|v| Coefficient::Prime { value: v, modulus: 101 })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.add(&a.neg()).is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv()).is_one());
            }
        }

        #[test]
        fn prime_field_axioms(a in arb_gf(), b in arb_gf(), c in arb_gf()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.add(&a.neg()).is_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv()).is_one());
            }
        }

        #[test]
        fn render_parse_round_trip(a in prop_oneof![arb_rational(), arb_gf()]) {
            let text = a.to_string();
            prop_assert_eq!(a.field().parse(&text).unwrap(), a);
        }
    }
}

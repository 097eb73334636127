//! Exact scalar fields.
//!
//! Everything in this crate is computed over a [`Field`]: either the
//! rationals ([`Rational`]) or a prime field ([`Fp`]). There is no floating
//! point anywhere, so there are no tolerances.

use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

/// An exact field.
///
/// Arithmetic is by reference so that big-number fields do not clone on
/// every operation.
pub trait Field: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Short tag used in reports (`"q"` or `"Fp"`).
    const TAG: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// An exact rational number.
///
/// Values whose reduced numerator and denominator fit in an `i64` are kept
/// inline; anything larger is promoted to an arbitrary-precision fraction.
/// The representation is canonical (reduced, positive denominator, inline
/// whenever possible), so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: i64, den: i64 },
    Big(BigRational),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn integer(n: i64) -> Self {
        Rational(Repr::Small { num: n, den: 1 })
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let g = num.gcd(&den);
        let (mut num, mut den) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if den < 0 {
            num = -num;
            den = -den;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(BigRational::new(BigInt::from(num), BigInt::from(den)))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(r) => r.clone(),
        }
    }

    /// Numerator and denominator as big integers.
    pub fn parts(&self) -> (BigInt, BigInt) {
        let r = self.to_big();
        (r.numer().clone(), r.denom().clone())
    }

    fn binary(
        &self,
        rhs: &Self,
        small: impl FnOnce(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl FnOnce(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) = (&self.0, &rhs.0) {
            if let Some((n, m)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Self::from_i128(n, m);
            }
        }
        Self::from_big(big(self.to_big(), rhs.to_big()))
    }
}

impl Field for Rational {
    const TAG: &'static str = "q";

    fn zero() -> Self {
        Rational::integer(0)
    }

    fn one() -> Self {
        Rational::integer(1)
    }

    fn from_i64(n: i64) -> Self {
        Rational::integer(n)
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    fn add(&self, rhs: &Self) -> Self {
        self.binary(
            rhs,
            |a, b, c, d| Some((a.checked_mul(d)?.checked_add(c.checked_mul(b)?)?, b.checked_mul(d)?)),
            |x, y| x + y,
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.binary(
            rhs,
            |a, b, c, d| Some((a.checked_mul(d)?.checked_sub(c.checked_mul(b)?)?, b.checked_mul(d)?)),
            |x, y| x - y,
        )
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.binary(rhs, |a, b, c, d| Some((a.checked_mul(c)?, b.checked_mul(d)?)), |x, y| x * y)
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational(Repr::Small { num: n, den: *den }),
                None => Self::from_big(-self.to_big()),
            },
            Repr::Big(r) => Self::from_big(-r.clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Repr::Big(r) => Self::from_big(r.recip()),
        })
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_big(&self) -> bool {
        matches!(self.0, Repr::Big(_))
    }
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// The prime field `F_P`. `P` must be prime and below `2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// The Mersenne prime `2^31 - 1`; the default prime field.
pub type F2147483647 = Fp<2_147_483_647>;

impl<const P: u64> Fp<P> {
    const CHECK: () = assert!(P >= 2 && P < (1 << 32), "prime must lie in [2, 2^32)");

    pub fn new(n: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::CHECK;
        Fp(n % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Field for Fp<P> {
    const TAG: &'static str = "Fp";

    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp::new(1)
    }

    fn from_i64(n: i64) -> Self {
        let r = n.rem_euclid(P as i64) as u64;
        Fp::new(r)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }

    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }

    fn inv(&self) -> Option<Self> {
        // Fermat; P is prime.
        (self.0 != 0).then(|| self.pow(P - 2))
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

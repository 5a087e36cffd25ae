//! Arithmetic modulo `p^e` for an odd prime `p` and `e ∈ {1, 2, 3}`.
//!
//! [`Residue`] is a canonical value in `[0, p^e)`. [`ValuedResidue`] tracks a
//! p-adic valuation alongside a unit, so quantities like `C(2k, k)` that
//! vanish mod `p` keep their unit part visible mod `p^2`. The module also
//! hosts the number-theoretic primitives everything else leans on:
//! deterministic 63-bit primality, Legendre symbols, Fermat quotients, least
//! nonnegative residues of p-integral rationals, and a Cornacchia-style
//! solver for `p = x^2 + 4y^2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Errors for the numeric core. Checks that merely *skip* a prime never
/// produce these; an `NtError` means a precondition or internal contract was
/// violated.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NtError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus exponent {0} outside 1..=3")]
    BadExponent(u32),
    #[error("{p}^{e} does not fit in 63 bits")]
    ModulusTooLarge { p: u64, e: u32 },
    #[error("{0} has no inverse modulo {1}")]
    NotInvertible(u64, u64),
    #[error("denominator divisible by p = {0}")]
    DenominatorDivisible(u64),
    #[error("{what} divisible by p = {p}")]
    MultipleOfP { what: &'static str, p: u64 },
    #[error("division by the exact zero element")]
    DivisionByZero,
    #[error("quotient has negative p-adic valuation")]
    NegativeValuation,
    #[error("value known modulo p^{known} but required modulo p^{needed}")]
    PrecisionLoss { known: u32, needed: u32 },
    #[error("{0} is not congruent to 1 modulo 4")]
    NotOneMod4(u64),
    #[error("series length {len} exceeds p = {p}")]
    LengthExceedsP { len: usize, p: u64 },
    #[error("binomial top {n} out of range (requires n < p^2)")]
    BinomialTooLarge { n: u64 },
    #[error("harmonic index {n} out of range for p = {p}")]
    HarmonicRange { n: u64, p: u64 },
    #[error("m = {m} does not satisfy (m - d)^2 = 16mc for (b, c) = ({b}, {c})")]
    InvalidM { m: i64, b: i64, c: i64 },
    #[error("excluded argument: {0}")]
    ExcludedArgument(&'static str),
    #[error("internal arithmetic invariant broken: {0}")]
    Internal(&'static str),
}

pub type NtResult<T> = Result<T, NtError>;

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for all 64-bit inputs (Miller–Rabin with the
/// 12-witness set that is exact below 3.3·10^24).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n % q == 0 {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        None
    } else {
        Some(s0.rem_euclid(m as i128) as u64)
    }
}

/// An odd prime power modulus `p^e` with `e ∈ {1, 2, 3}` and `p^e < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u64,
    e: u32,
    pe: u64,
}

impl Modulus {
    pub fn new(p: u64, e: u32) -> NtResult<Self> {
        if !(1..=3).contains(&e) {
            return Err(NtError::BadExponent(e));
        }
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(NtError::NotOddPrime(p));
        }
        Self::unchecked(p, e)
    }

    // p must already be a validated odd prime.
    fn unchecked(p: u64, e: u32) -> NtResult<Self> {
        let mut pe: u64 = 1;
        for _ in 0..e {
            pe = pe
                .checked_mul(p)
                .filter(|&v| v < (1u64 << 63))
                .ok_or(NtError::ModulusTooLarge { p, e })?;
        }
        Ok(Modulus { p, e, pe })
    }

    /// Same prime, different exponent. Skips the primality re-check.
    pub fn with_exponent(self, e: u32) -> NtResult<Self> {
        if !(1..=3).contains(&e) {
            return Err(NtError::BadExponent(e));
        }
        Self::unchecked(self.p, e)
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn e(self) -> u32 {
        self.e
    }

    pub fn pe(self) -> u64 {
        self.pe
    }

    pub fn zero(self) -> Residue {
        Residue {
            value: 0,
            modulus: self,
        }
    }

    pub fn one(self) -> Residue {
        Residue {
            value: 1 % self.pe,
            modulus: self,
        }
    }

    /// Canonical residue of a signed integer.
    pub fn residue(self, v: i64) -> Residue {
        self.residue_i128(v as i128)
    }

    pub fn residue_u64(self, v: u64) -> Residue {
        Residue {
            value: v % self.pe,
            modulus: self,
        }
    }

    pub fn residue_i128(self, v: i128) -> Residue {
        Residue {
            value: v.rem_euclid(self.pe as i128) as u64,
            modulus: self,
        }
    }

    pub fn residue_bigint(self, v: &BigInt) -> Residue {
        let r = v.mod_floor(&BigInt::from(self.pe));
        Residue {
            value: r.to_u64().expect("mod_floor result fits u64"),
            modulus: self,
        }
    }

    /// Canonical residue of a p-integral rational: numerator times the
    /// inverse of the denominator.
    pub fn residue_rational(self, x: &BigRational) -> NtResult<Residue> {
        let den = self.residue_bigint(x.denom());
        if den.value % self.p == 0 {
            return Err(NtError::DenominatorDivisible(self.p));
        }
        Ok(self.residue_bigint(x.numer()) * den.inv()?)
    }
}

/// Builder with validation, mirroring `Modulus::new`.
pub fn make_modulus(p: u64, e: u32) -> NtResult<Modulus> {
    Modulus::new(p, e)
}

/// A canonical congruence class in `[0, p^e)`.
///
/// Arithmetic between residues of distinct moduli is a programming error and
/// panics; recoverable failures (non-invertibility) surface as `NtError`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_modulus(self, other: Residue) {
        assert_eq!(
            self.modulus, other.modulus,
            "modulus mismatch: {} vs {}",
            self.modulus.pe, other.modulus.pe
        );
    }

    pub fn inv(self) -> NtResult<Residue> {
        inv_mod(self.value, self.modulus.pe)
            .map(|value| Residue {
                value,
                modulus: self.modulus,
            })
            .ok_or(NtError::NotInvertible(self.value, self.modulus.pe))
    }

    pub fn pow(self, mut exp: u64) -> Residue {
        let m = self.modulus.pe;
        let mut base = self.value;
        let mut acc = 1 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul_mod(acc, base, m);
            }
            base = mul_mod(base, base, m);
            exp >>= 1;
        }
        Residue {
            value: acc,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.same_modulus(rhs);
        let m = self.modulus.pe;
        // pe < 2^63, so the sum cannot wrap u64.
        let mut v = self.value + rhs.value;
        if v >= m {
            v -= m;
        }
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.same_modulus(rhs);
        let m = self.modulus.pe;
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + m - rhs.value
        };
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.same_modulus(rhs);
        Residue {
            value: mul_mod(self.value, rhs.value, self.modulus.pe),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let v = if self.value == 0 {
            0
        } else {
            self.modulus.pe - self.value
        };
        Residue {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Inverses of `1..=n` modulo `p^e` via one extended gcd and a prefix-product
/// sweep. Requires `n < p`.
pub fn inverse_table(modulus: Modulus, n: u64) -> NtResult<Vec<u64>> {
    if n >= modulus.p {
        return Err(NtError::HarmonicRange { n, p: modulus.p });
    }
    let pe = modulus.pe;
    let len = n as usize;
    let mut prefix = Vec::with_capacity(len + 1);
    prefix.push(1u64);
    for i in 1..=len {
        let last = *prefix.last().expect("nonempty");
        prefix.push(mul_mod(last, i as u64, pe));
    }
    let mut suffix_inv = modulus.residue_u64(prefix[len]).inv()?.value();
    let mut table = vec![0u64; len + 1];
    for i in (1..=len).rev() {
        table[i] = mul_mod(suffix_inv, prefix[i - 1], pe);
        suffix_inv = mul_mod(suffix_inv, i as u64, pe);
    }
    Ok(table)
}

/// `p^v · u` with `gcd(u, p) = 1`, plus an exact-zero element.
///
/// A non-zero element stores its unit modulo `p^e`, so the represented value
/// is known modulo `p^(v+e)`. Additions align at the smaller valuation
/// `v_min` and the sum is therefore known modulo `p^(v_min+e)`; a sum that
/// cancels to `0` at that precision collapses to the exact zero element.
/// [`ValuedResidue::to_residue`] enforces the precision contract and refuses
/// to fabricate digits it does not hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValuedResidue {
    modulus: Modulus,
    kind: VrKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum VrKind {
    Zero,
    Scaled { val: u32, unit: u64 },
}

impl ValuedResidue {
    pub fn zero(modulus: Modulus) -> Self {
        ValuedResidue {
            modulus,
            kind: VrKind::Zero,
        }
    }

    pub fn one(modulus: Modulus) -> Self {
        ValuedResidue {
            modulus,
            kind: VrKind::Scaled { val: 0, unit: 1 },
        }
    }

    /// Build from an explicit valuation and unit, renormalizing if the unit
    /// itself carries factors of `p`.
    pub fn from_parts(val: u32, unit: Residue) -> Self {
        Self::from_scaled(unit.modulus, val, unit.value)
    }

    pub fn from_u64(n: u64, modulus: Modulus) -> Self {
        Self::from_u128(n as u128, modulus)
    }

    pub fn from_i64(n: i64, modulus: Modulus) -> Self {
        if n < 0 {
            -Self::from_u128(n.unsigned_abs() as u128, modulus)
        } else {
            Self::from_u128(n as u128, modulus)
        }
    }

    /// Exact decomposition of an integer: full p-adic valuation, unit
    /// reduced modulo `p^e`.
    pub fn from_u128(mut n: u128, modulus: Modulus) -> Self {
        if n == 0 {
            return Self::zero(modulus);
        }
        let p = modulus.p as u128;
        let mut val = 0u32;
        while n % p == 0 {
            n /= p;
            val += 1;
        }
        ValuedResidue {
            modulus,
            kind: VrKind::Scaled {
                val,
                unit: (n % modulus.pe as u128) as u64,
            },
        }
    }

    pub fn from_bigint(n: &BigInt, modulus: Modulus) -> Self {
        if n.is_zero() {
            return Self::zero(modulus);
        }
        let p = BigInt::from(modulus.p);
        let mut abs = n.abs();
        let mut val = 0u32;
        loop {
            let (q, r) = abs.div_rem(&p);
            if r.is_zero() {
                abs = q;
                val += 1;
            } else {
                break;
            }
        }
        let unit = modulus.residue_bigint(&abs);
        let vr = Self::from_scaled(modulus, val, unit.value);
        if n.is_negative() {
            -vr
        } else {
            vr
        }
    }

    /// Decompose a residue already reduced mod `p^e`. A residue equal to `0`
    /// collapses to the exact zero element, which is precision-faithful for
    /// sums evaluated at exponent `e` or below.
    pub fn from_residue(r: Residue) -> Self {
        Self::from_scaled(r.modulus, 0, r.value)
    }

    fn from_scaled(modulus: Modulus, mut val: u32, mut unit: u64) -> Self {
        if unit == 0 {
            return Self::zero(modulus);
        }
        while unit % modulus.p == 0 {
            unit /= modulus.p;
            val += 1;
        }
        ValuedResidue {
            modulus,
            kind: VrKind::Scaled { val, unit },
        }
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        matches!(self.kind, VrKind::Zero)
    }

    /// Valuation of a non-zero element.
    pub fn val(self) -> Option<u32> {
        match self.kind {
            VrKind::Zero => None,
            VrKind::Scaled { val, .. } => Some(val),
        }
    }

    /// Unit of a non-zero element, as a residue mod `p^e`.
    pub fn unit(self) -> Option<Residue> {
        match self.kind {
            VrKind::Zero => None,
            VrKind::Scaled { unit, .. } => Some(Residue {
                value: unit,
                modulus: self.modulus,
            }),
        }
    }

    fn same_modulus(self, other: ValuedResidue) {
        assert_eq!(
            self.modulus, other.modulus,
            "modulus mismatch: {} vs {}",
            self.modulus.pe, other.modulus.pe
        );
    }

    pub fn mul(self, rhs: ValuedResidue) -> ValuedResidue {
        self.same_modulus(rhs);
        match (self.kind, rhs.kind) {
            (VrKind::Zero, _) | (_, VrKind::Zero) => Self::zero(self.modulus),
            (VrKind::Scaled { val: va, unit: ua }, VrKind::Scaled { val: vb, unit: ub }) => {
                ValuedResidue {
                    modulus: self.modulus,
                    kind: VrKind::Scaled {
                        val: va + vb,
                        unit: mul_mod(ua, ub, self.modulus.pe),
                    },
                }
            }
        }
    }

    /// Multiply by a plain residue, decomposing it on the fly.
    pub fn mul_residue(self, rhs: Residue) -> ValuedResidue {
        self.mul(Self::from_residue(rhs))
    }

    pub fn div(self, rhs: ValuedResidue) -> NtResult<ValuedResidue> {
        self.same_modulus(rhs);
        match (self.kind, rhs.kind) {
            (_, VrKind::Zero) => Err(NtError::DivisionByZero),
            (VrKind::Zero, _) => Ok(Self::zero(self.modulus)),
            (VrKind::Scaled { val: va, unit: ua }, VrKind::Scaled { val: vb, unit: ub }) => {
                if va < vb {
                    return Err(NtError::NegativeValuation);
                }
                let inv = inv_mod(ub, self.modulus.pe)
                    .ok_or(NtError::NotInvertible(ub, self.modulus.pe))?;
                Ok(ValuedResidue {
                    modulus: self.modulus,
                    kind: VrKind::Scaled {
                        val: va - vb,
                        unit: mul_mod(ua, inv, self.modulus.pe),
                    },
                })
            }
        }
    }

    /// Sum, aligned at the smaller valuation; the result is the true sum
    /// modulo `p^(v_min + e)`.
    pub fn add(self, rhs: ValuedResidue) -> ValuedResidue {
        self.same_modulus(rhs);
        match (self.kind, rhs.kind) {
            (VrKind::Zero, _) => rhs,
            (_, VrKind::Zero) => self,
            (VrKind::Scaled { val: va, unit: ua }, VrKind::Scaled { val: vb, unit: ub }) => {
                let m = self.modulus;
                let vmin = va.min(vb);
                let lift = |dv: u32, u: u64| -> u64 {
                    if dv >= m.e {
                        0
                    } else {
                        mul_mod(u, m.p.pow(dv), m.pe)
                    }
                };
                let a = lift(va - vmin, ua);
                let b = lift(vb - vmin, ub);
                let mut sum = a + b;
                if sum >= m.pe {
                    sum -= m.pe;
                }
                Self::from_scaled(m, vmin, sum)
            }
        }
    }

    /// The value reduced modulo `p^target_e`. Errors with `PrecisionLoss`
    /// when the tracked digits do not determine the result.
    pub fn to_residue(self, target_e: u32) -> NtResult<Residue> {
        let target = self.modulus.with_exponent(target_e)?;
        match self.kind {
            VrKind::Zero => Ok(target.zero()),
            VrKind::Scaled { val, unit } => {
                if val >= target_e {
                    return Ok(target.zero());
                }
                if val + self.modulus.e < target_e {
                    return Err(NtError::PrecisionLoss {
                        known: val + self.modulus.e,
                        needed: target_e,
                    });
                }
                let scale = target.residue_u64(self.modulus.p.pow(val));
                Ok(scale * target.residue_u64(unit))
            }
        }
    }
}

impl std::ops::Neg for ValuedResidue {
    type Output = ValuedResidue;
    fn neg(self) -> ValuedResidue {
        match self.kind {
            VrKind::Zero => self,
            VrKind::Scaled { val, unit } => ValuedResidue {
                modulus: self.modulus,
                kind: VrKind::Scaled {
                    val,
                    unit: self.modulus.pe - unit,
                },
            },
        }
    }
}

/// Least nonnegative residue of a p-integral rational modulo `p`.
pub fn least_nonneg_residue(x: &BigRational, p: u64) -> NtResult<u64> {
    let m = Modulus::new(p, 1)?;
    Ok(m.residue_rational(x)?.value())
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i32 {
    assert!(
        p >= 3 && p % 2 == 1,
        "legendre requires an odd prime modulus"
    );
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return 0;
    }
    let v = pow_mod(r, (p - 1) / 2, p);
    if v == 1 {
        1
    } else {
        debug_assert_eq!(v, p - 1);
        -1
    }
}

/// Fermat quotient `q_p(a) = (a^(p-1) - 1)/p`, reduced mod `p`.
///
/// Computed at exponent 2: `a^(p-1) mod p^2` determines the quotient mod `p`.
pub fn fermat_quotient(a: i64, p: u64) -> NtResult<Residue> {
    let m2 = Modulus::new(p, 2)?;
    let m1 = m2.with_exponent(1)?;
    let ar = m2.residue(a);
    if ar.value % p == 0 {
        return Err(NtError::MultipleOfP {
            what: "fermat quotient base",
            p,
        });
    }
    let t = (ar.pow(p - 1) - m2.one()).value();
    debug_assert_eq!(t % p, 0);
    Ok(m1.residue_u64(t / p))
}

/// `(x^p + (1-x)^p - 1)/p` reduced mod `p`, for a p-integral rational `x`.
pub fn poly_fermat_quotient(x: &BigRational, p: u64) -> NtResult<Residue> {
    let m2 = Modulus::new(p, 2)?;
    let m1 = m2.with_exponent(1)?;
    let xr = m2.residue_rational(x)?;
    let s = xr.pow(p) + (m2.one() - xr).pow(p) - m2.one();
    if s.value() % p != 0 {
        return Err(NtError::Internal("x^p + (1-x)^p - 1 not divisible by p"));
    }
    Ok(m1.residue_u64(s.value() / p))
}

fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).map_or(true, |sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).map_or(false, |sq| sq <= n) {
        x += 1;
    }
    x
}

/// Write a prime `p ≡ 1 (mod 4)` as `x^2 + 4y^2` with `x ≡ 1 (mod 4)` and
/// `y ≥ 0`. The representation is unique under that normalization.
///
/// Uses the classical descent: a square root `t` of `-1 mod p` feeds a
/// truncated Euclidean run on `(p, t)`; the first remainder below `√p` is one
/// leg of `p = a^2 + b^2`, exactly one of the legs is even, and halving it
/// gives `y`.
pub fn cornacchia_x2_4y2(p: u64) -> NtResult<(i64, u64)> {
    if p < 3 || !is_prime(p) {
        return Err(NtError::NotOddPrime(p));
    }
    if p % 4 != 1 {
        return Err(NtError::NotOneMod4(p));
    }
    let mut nonresidue = 2u64;
    while legendre(nonresidue as i64, p) != -1 {
        nonresidue += 1;
    }
    let t = pow_mod(nonresidue, (p - 1) / 4, p);
    debug_assert_eq!(mul_mod(t, t, p), p - 1);
    let (mut r0, mut r1) = (p, t.max(p - t));
    let bound = isqrt(p);
    while r1 > bound {
        (r0, r1) = (r1, r0 % r1);
    }
    let a = r1;
    let b = isqrt(p - a * a);
    if a * a + b * b != p {
        return Err(NtError::Internal(
            "descent failed to split p as two squares",
        ));
    }
    let (odd, even) = if a % 2 == 1 { (a, b) } else { (b, a) };
    let x = if odd % 4 == 1 {
        odd as i64
    } else {
        -(odd as i64)
    };
    Ok((x, even / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn modulus(p: u64, e: u32) -> Modulus {
        Modulus::new(p, e).unwrap()
    }

    #[test]
    fn make_modulus_basic() {
        let m = modulus(5, 2);
        assert_eq!((m.p(), m.e(), m.pe()), (5, 2, 25));
        assert_eq!(modulus(3, 3).pe(), 27);
        assert!(matches!(Modulus::new(4, 2), Err(NtError::NotOddPrime(4))));
        assert!(matches!(Modulus::new(5, 0), Err(NtError::BadExponent(0))));
        assert!(matches!(Modulus::new(5, 4), Err(NtError::BadExponent(4))));
        assert!(matches!(
            Modulus::new(4_000_000_007, 3),
            Err(NtError::ModulusTooLarge { .. })
        ));
    }

    #[test]
    fn primality_small_and_carmichael() {
        // Oracle: trial division over a small range.
        let trial = |n: u64| -> bool {
            if n < 2 {
                return false;
            }
            (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
        };
        for n in 0..2000 {
            assert_eq!(is_prime(n), trial(n), "disagree at {n}");
        }
        assert!(is_prime(2));
        assert!(!is_prime(91));
        for carmichael in [561, 1105, 1729, 2465, 2821, 6601, 8911, 825265] {
            assert!(!is_prime(carmichael));
        }
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime((1 << 62) - 1));
    }

    #[test]
    fn primality_mersenne_31() {
        // 2^31 - 1, cross-checked by trial division up to its square root.
        let n: u64 = 2147483647;
        let mut d = 2;
        let mut composite = false;
        while d * d <= n {
            if n % d == 0 {
                composite = true;
                break;
            }
            d += 1;
        }
        assert!(!composite);
        assert!(is_prime(n));
    }

    #[test]
    fn residue_ops_examples() {
        let m25 = modulus(5, 2);
        assert_eq!((m25.residue(24) + m25.residue(3)).value(), 2);
        assert_eq!((m25.residue(7) * m25.residue(0)).value(), 0);
        let m27 = modulus(3, 3);
        assert_eq!((m27.residue(26) * m27.residue(26)).value(), 1);
        assert_eq!((-m27.residue(1)).value(), 26);
        assert_eq!((m25.residue(3) - m25.residue(7)).value(), 21);
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn residue_ops_reject_mixed_moduli() {
        let a = modulus(5, 2).residue(1);
        let b = modulus(7, 2).residue(1);
        let _ = a + b;
    }

    #[test]
    fn inverse_examples() {
        let m25 = modulus(5, 2);
        let inv7 = m25.residue(7).inv().unwrap();
        assert_eq!(inv7.value(), 18);
        assert_eq!((m25.residue(7) * inv7).value(), 1);
        assert!(matches!(
            m25.residue(5).inv(),
            Err(NtError::NotInvertible(5, 25))
        ));
        let m9 = modulus(3, 2);
        assert_eq!(m9.residue(8).inv().unwrap().value(), 8);
    }

    #[test]
    fn pow_examples() {
        let m25 = modulus(5, 2);
        // Oracle: repeated multiplication.
        let mut acc = m25.one();
        for _ in 0..20 {
            acc = acc * m25.residue(2);
        }
        assert_eq!(acc.value(), 1);
        assert_eq!(m25.residue(2).pow(20).value(), 1);
        assert_eq!(m25.residue(17).pow(0).value(), 1);
        assert_eq!(modulus(3, 2).residue(3).pow(2).value(), 0);
    }

    #[test]
    fn unit_group_invariants() {
        // a · a^(-1) = 1 and a^(p-1) ≡ 1 (mod p) for every unit.
        for &(p, e) in &[(5u64, 2u32), (13, 3), (101, 1)] {
            let m = modulus(p, e);
            let m1 = modulus(p, 1);
            for a in 1..p {
                let r = m.residue_u64(a);
                assert_eq!((r * r.inv().unwrap()).value(), 1, "inverse at p={p}, a={a}");
                assert_eq!(
                    m1.residue_u64(a).pow(p - 1).value(),
                    1,
                    "fermat at p={p}, a={a}"
                );
            }
        }
    }

    #[test]
    fn inverse_table_matches_pointwise() {
        for &(p, e) in &[(11u64, 1u32), (11, 3), (97, 2)] {
            let m = modulus(p, e);
            let table = inverse_table(m, p - 1).unwrap();
            for i in 1..p {
                assert_eq!(table[i as usize], m.residue_u64(i).inv().unwrap().value());
            }
        }
        assert!(inverse_table(modulus(11, 1), 11).is_err());
    }

    #[test]
    fn least_nonneg_residue_examples() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(least_nonneg_residue(&half, 5).unwrap(), 3);
        let x = BigRational::new(BigInt::from(-4), BigInt::from(3));
        assert_eq!(least_nonneg_residue(&x, 7).unwrap(), 1);
        let six = BigRational::from_integer(BigInt::from(6));
        assert_eq!(least_nonneg_residue(&six, 5).unwrap(), 1);
        let bad = BigRational::new(BigInt::from(1), BigInt::from(10));
        assert!(matches!(
            least_nonneg_residue(&bad, 5),
            Err(NtError::DenominatorDivisible(5))
        ));
    }

    #[test]
    fn legendre_examples_and_euler_criterion() {
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(2, 3), -1);
        assert_eq!(legendre(10, 5), 0);
        for &p in &[3u64, 5, 7, 11, 13, 97, 101] {
            for a in 1..p {
                let squares: bool = (1..p).any(|x| mul_mod(x, x, p) == a);
                assert_eq!(legendre(a as i64, p), if squares { 1 } else { -1 });
            }
            // Multiplicativity on a few pairs.
            for (a, b) in [(2i64, 3i64), (5, 7), (-1, 2)] {
                if a.unsigned_abs() % p != 0 && b.unsigned_abs() % p != 0 {
                    assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
                }
            }
        }
    }

    #[test]
    fn fermat_quotient_examples_and_log_law() {
        assert_eq!(fermat_quotient(2, 3).unwrap().value(), 1);
        assert_eq!(fermat_quotient(2, 5).unwrap().value(), 3);
        assert_eq!(fermat_quotient(2, 7).unwrap().value(), 2);
        assert!(fermat_quotient(10, 5).is_err());
        for &p in &[5u64, 13, 101] {
            for a in 1..30i64 {
                for b in 1..30i64 {
                    if a as u64 % p == 0 || b as u64 % p == 0 {
                        continue;
                    }
                    let lhs = fermat_quotient(a * b, p).unwrap();
                    let rhs = fermat_quotient(a, p).unwrap() + fermat_quotient(b, p).unwrap();
                    assert_eq!(lhs, rhs, "log law fails at p={p}, a={a}, b={b}");
                }
            }
        }
    }

    #[test]
    fn poly_fermat_quotient_examples() {
        for &p in &[3u64, 5, 7, 11, 13] {
            let one = BigRational::one();
            assert_eq!(poly_fermat_quotient(&one, p).unwrap().value(), 0);
            let zero = BigRational::zero();
            assert_eq!(poly_fermat_quotient(&zero, p).unwrap().value(), 0);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        // (2^5 + (-1)^5 - 1)/5 = 6 ≡ 1 (mod 5)
        assert_eq!(poly_fermat_quotient(&two, 5).unwrap().value(), 1);
    }

    #[test]
    fn valued_residue_examples() {
        let m25 = modulus(5, 2);
        let a = ValuedResidue::from_parts(1, m25.residue(2));
        let b = ValuedResidue::from_parts(0, m25.residue(3));
        let prod = a.mul(b);
        assert_eq!(
            (prod.val(), prod.unit().map(|u| u.value())),
            (Some(1), Some(6))
        );
        let q = prod.div(a).unwrap();
        assert_eq!((q.val(), q.unit().map(|u| u.value())), (Some(0), Some(3)));
        assert!(matches!(
            ValuedResidue::one(m25).div(ValuedResidue::from_parts(1, m25.one())),
            Err(NtError::NegativeValuation)
        ));
        assert!(matches!(
            ValuedResidue::one(m25).div(ValuedResidue::zero(m25)),
            Err(NtError::DivisionByZero)
        ));

        // Additions.
        let cancel = ValuedResidue::one(m25).add(ValuedResidue::from_parts(0, m25.residue(24)));
        assert!(cancel.is_zero());
        let mixed = ValuedResidue::from_parts(1, m25.one()).add(ValuedResidue::one(m25));
        assert_eq!(
            (mixed.val(), mixed.unit().map(|u| u.value())),
            (Some(0), Some(6))
        );
        let z = ValuedResidue::from_parts(2, m25.one()).add(ValuedResidue::zero(m25));
        assert_eq!(z.val(), Some(2));
    }

    #[test]
    fn valued_residue_to_residue() {
        let m25 = modulus(5, 2);
        let a = ValuedResidue::from_parts(1, m25.residue(3));
        assert_eq!(a.to_residue(2).unwrap().value(), 15);
        let b = ValuedResidue::from_parts(2, m25.one());
        assert_eq!(b.to_residue(2).unwrap().value(), 0);
        assert_eq!(ValuedResidue::zero(m25).to_residue(2).unwrap().value(), 0);
        // Unit known mod p only, value scaled by p: mod p^3 is out of reach.
        let m5 = modulus(5, 1);
        let c = ValuedResidue::from_parts(1, m5.residue(2));
        assert!(matches!(
            c.to_residue(3),
            Err(NtError::PrecisionLoss {
                known: 2,
                needed: 3
            })
        ));
        assert_eq!(c.to_residue(2).unwrap().value(), 10);
    }

    #[test]
    fn cornacchia_examples() {
        assert_eq!(cornacchia_x2_4y2(5).unwrap(), (1, 1));
        assert_eq!(cornacchia_x2_4y2(13).unwrap(), (-3, 1));
        assert_eq!(cornacchia_x2_4y2(17).unwrap(), (1, 2));
        assert!(matches!(cornacchia_x2_4y2(7), Err(NtError::NotOneMod4(7))));
        assert!(matches!(
            cornacchia_x2_4y2(15),
            Err(NtError::NotOddPrime(15))
        ));
    }

    #[test]
    fn cornacchia_matches_exhaustive_search_below_1e4() {
        for p in (5..10_000u64).filter(|&p| p % 4 == 1 && is_prime(p)) {
            let (x, y) = cornacchia_x2_4y2(p).unwrap();
            assert_eq!((x * x) as u64 + 4 * y * y, p, "bad representation at {p}");
            assert_eq!(x.rem_euclid(4), 1, "sign convention at {p}");
            // Exhaustive oracle.
            let mut found = None;
            'outer: for cx in 0..=isqrt(p) {
                let rest = p - cx * cx;
                if rest % 4 == 0 {
                    let cy = isqrt(rest / 4);
                    if 4 * cy * cy == rest {
                        for sx in [cx as i64, -(cx as i64)] {
                            if sx.rem_euclid(4) == 1 {
                                found = Some((sx, cy));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            assert_eq!(found, Some((x, y)), "oracle mismatch at {p}");
        }
    }

    proptest! {
        #[test]
        fn vr_roundtrip_recompose(
            p_idx in 0usize..3,
            e in 1u32..=3,
            n in 1u64..u64::MAX / 2,
        ) {
            let p = [5u64, 13, 101][p_idx];
            let m = modulus(p, e);
            // n reduced into [1, p^4) keeps valuations interesting.
            let p4 = BigInt::from(p).pow(4);
            let n = BigInt::from(n).mod_floor(&p4) + 1;
            let vr = ValuedResidue::from_bigint(&n, m);
            prop_assert!(!vr.is_zero());
            let val = vr.val().unwrap();
            let prec = BigInt::from(p).pow(val + e);
            let recomposed = BigInt::from(p).pow(val) * BigInt::from(vr.unit().unwrap().value());
            prop_assert_eq!(recomposed.mod_floor(&prec), n.mod_floor(&prec));
        }

        #[test]
        fn vr_add_mul_match_bigint(
            a in 1i64..1_000_000,
            b in 1i64..1_000_000,
            e in 1u32..=3,
        ) {
            let m = modulus(13, e);
            let va = ValuedResidue::from_i64(a, m);
            let vb = ValuedResidue::from_i64(b, m);

            let sum = va.add(vb);
            let expect_sum = ValuedResidue::from_bigint(&BigInt::from(a + b), m);
            // Compare at the guaranteed precision of the addition.
            let vmin = va.val().unwrap().min(vb.val().unwrap());
            let target = (vmin + e).min(3);
            prop_assert_eq!(
                sum.to_residue(target).unwrap(),
                expect_sum.to_residue(target).unwrap()
            );

            let prod = va.mul(vb);
            let expect_prod = ValuedResidue::from_bigint(&(BigInt::from(a) * BigInt::from(b)), m);
            prop_assert_eq!(prod.val(), expect_prod.val());
            prop_assert_eq!(prod.unit(), expect_prod.unit());
        }
    }

    #[test]
    fn vr_add_mul_match_bigint_dense() {
        // 1000 deterministic pairs per prime, exact big-integer oracle.
        for &p in &[5u64, 13, 101] {
            let m = modulus(p, 2);
            let mut state = 0x243F6A8885A308D3u64;
            let mut next = || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 11) % (p * p * p * p)
            };
            for _ in 0..1000 {
                let (a, b) = (next() + 1, next() + 1);
                let (va, vb) = (ValuedResidue::from_u64(a, m), ValuedResidue::from_u64(b, m));
                let sum_big = ValuedResidue::from_bigint(&BigInt::from(a + b), m);
                let sum = va.add(vb);
                let vmin = va.val().unwrap().min(vb.val().unwrap());
                // Addition result is exact mod p^(vmin+e); compare at e digits
                // past vmin, which to_residue can always deliver for both.
                let t = (vmin + m.e()).min(3);
                if let (Ok(x), Ok(y)) = (sum.to_residue(t), sum_big.to_residue(t)) {
                    assert_eq!(x, y, "add mismatch at p={p}, a={a}, b={b}");
                }
                let prod = va.mul(vb);
                let prod_big = ValuedResidue::from_bigint(&(BigInt::from(a) * BigInt::from(b)), m);
                assert_eq!(prod.val(), prod_big.val());
                assert_eq!(prod.unit(), prod_big.unit());
            }
        }
    }
}

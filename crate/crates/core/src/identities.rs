//! Exact verification of the binomial/harmonic identities behind the
//! congruence checks, plus the proof-step congruences they feed.
//!
//! Identities in an indeterminate `x` are checked at exact rational sample
//! points. With sample sets larger than the degree of the difference of the
//! two sides (for each fixed `n`), agreement at the samples is equivalent to
//! polynomial identity — no symbolic engine needed. Recurrence certificates
//! are evaluated on freshly computed partial sums and, separately, on the
//! closed forms, never on one expression standing in for the other.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::modnt::{poly_fermat_quotient, Modulus, NtError, NtResult};
use crate::sequences::{
    binom_valued, binomial, binomial_general, central_binomial_sum, finite_polylog, harmonic_exact,
    harmonic_mod, trinomial_exact, TrinomialParams,
};

/// Outcome of one exact identity (or proof-step congruence) evaluation.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: &'static str,
    pub params: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    fn from_rats(id: &'static str, params: String, lhs: &BigRational, rhs: &BigRational) -> Self {
        IdentityReport {
            id,
            params,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn from_residues(
        id: &'static str,
        params: String,
        lhs: crate::modnt::Residue,
        rhs: crate::modnt::Residue,
    ) -> Self {
        IdentityReport {
            id,
            params,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat_big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `x^k` with the `0^0 = 1` convention.
fn rpow(x: &BigRational, mut k: u64) -> BigRational {
    let mut base = x.clone();
    let mut acc = BigRational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        k >>= 1;
    }
    acc
}

/// `a + b·√rad` with exact rational components. `rad` is carried along and
/// equality is componentwise; arithmetic never leaves the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExtRat {
    pub a: BigRational,
    pub b: BigRational,
    pub rad: i64,
}

impl QuadExtRat {
    pub fn new(a: BigRational, b: BigRational, rad: i64) -> Self {
        QuadExtRat { a, b, rad }
    }

    pub fn from_rat(a: BigRational, rad: i64) -> Self {
        QuadExtRat {
            a,
            b: BigRational::zero(),
            rad,
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadExtRat {
            a: self.a.clone(),
            b: -self.b.clone(),
            rad: self.rad,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.rad, o.rad, "mixed radicands");
        QuadExtRat {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            rad: self.rad,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.rad, o.rad, "mixed radicands");
        QuadExtRat {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            rad: self.rad,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.rad, o.rad, "mixed radicands");
        let rad = rat_int(self.rad);
        QuadExtRat {
            a: &self.a * &o.a + &self.b * &o.b * &rad,
            b: &self.a * &o.b + &self.b * &o.a,
            rad: self.rad,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QuadExtRat {
            a: &self.a * r,
            b: &self.b * r,
            rad: self.rad,
        }
    }
}

/// `T_n(b,c)^2 = Σ_{k=0}^n C(n+k, 2k) C(2k, k)^2 c^k d^(n-k)`, exactly.
pub fn verify_clausen_square(n: u32, params: &TrinomialParams) -> IdentityReport {
    let t = trinomial_exact(n, params);
    let lhs = rat_big(&t * &t);
    let mut rhs = BigInt::zero();
    let n = n as u64;
    for k in 0..=n {
        let cb = binomial(2 * k, k);
        rhs += binomial(n + k, 2 * k)
            * &cb
            * &cb
            * BigInt::from(params.c).pow(k as u32)
            * BigInt::from(params.d).pow((n - k) as u32);
    }
    IdentityReport::from_rats(
        "clausen_square",
        format!("n={n}, b={}, c={}", params.b, params.c),
        &lhs,
        &rat_big(rhs),
    )
}

// Σ_{k=0}^n C(n,k) H_k x^k
fn harmonic_binomial_lhs(n: u32, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut h = BigRational::zero();
    for k in 0..=n as u64 {
        if k > 0 {
            h += BigRational::new(BigInt::one(), BigInt::from(k));
        }
        acc += rat_big(binomial(n as u64, k)) * &h * rpow(x, k);
    }
    acc
}

// (1+x)^n H_n − Σ_{k=1}^n (1+x)^(n-k) / k
fn harmonic_binomial_rhs(n: u32, x: &BigRational) -> BigRational {
    let xp1 = x + BigRational::one();
    let mut acc = rpow(&xp1, n as u64) * harmonic_exact(n);
    for k in 1..=n as u64 {
        acc -= rpow(&xp1, n as u64 - k) / rat_int(k as i64);
    }
    acc
}

/// `Σ C(n,k) H_k x^k = (1+x)^n H_n - Σ_{k=1}^n (1+x)^(n-k)/k`, exactly.
pub fn verify_harmonic_binomial_sum(n: u32, x: &BigRational) -> IdentityReport {
    IdentityReport::from_rats(
        "harmonic_binomial_sum",
        format!("n={n}, x={x}"),
        &harmonic_binomial_lhs(n, x),
        &harmonic_binomial_rhs(n, x),
    )
}

/// Both sides of the harmonic binomial identity satisfy
/// `-(n+1)(x+1)^2 S_n + (2n+3)(x+1) S_{n+1} - (n+2) S_{n+2} = -x`.
pub fn verify_harmonic_binomial_recurrence(n: u32, x: &BigRational) -> IdentityReport {
    let certificate = |s: &dyn Fn(u32) -> BigRational| -> BigRational {
        let xp1 = x + BigRational::one();
        let sq = &xp1 * &xp1;
        -rat_int(n as i64 + 1) * sq * s(n) + rat_int(2 * n as i64 + 3) * xp1 * s(n + 1)
            - rat_int(n as i64 + 2) * s(n + 2)
    };
    let target = -x.clone();
    let sum_side = certificate(&|i| harmonic_binomial_lhs(i, x));
    let closed_side = certificate(&|i| harmonic_binomial_rhs(i, x));
    let holds = sum_side == target && closed_side == target;
    IdentityReport {
        id: "harmonic_binomial_recurrence",
        params: format!("n={n}, x={x}"),
        holds,
        lhs: format!("sum-side={sum_side}, closed-side={closed_side}"),
        rhs: target.to_string(),
    }
}

/// `Σ_{k=0}^n x^k / C(n,k) = (n+1) Σ_{k=1}^{n+1} (x^k+1)/(k(x+1)) (x/(x+1))^{n+1-k}`
/// for `x ≠ -1`, exactly.
pub fn verify_inverse_binomial_sum(n: u32, x: &BigRational) -> NtResult<IdentityReport> {
    if *x == -BigRational::one() {
        return Err(NtError::ExcludedArgument("x = -1"));
    }
    let n = n as u64;
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        lhs += rpow(x, k) / rat_big(binomial(n, k));
    }
    let xp1 = x + BigRational::one();
    let q = x / &xp1;
    let mut rhs = BigRational::zero();
    for k in 1..=n + 1 {
        rhs += (rpow(x, k) + BigRational::one()) / (rat_int(k as i64) * &xp1) * rpow(&q, n + 1 - k);
    }
    rhs *= rat_int(n as i64 + 1);
    Ok(IdentityReport::from_rats(
        "inverse_binomial_sum",
        format!("n={n}, x={x}"),
        &lhs,
        &rhs,
    ))
}

// Σ_{k=0}^{n-1} x^k / C(2n-1, k)
fn inv_binom_odd_sum(n: u32, x: &BigRational) -> BigRational {
    let n = n as u64;
    let mut acc = BigRational::zero();
    for k in 0..n {
        acc += rpow(x, k) / rat_big(binomial(2 * n - 1, k));
    }
    acc
}

// (2n/(x+1)) Σ_{k=1}^{2n} (1/k) q^(2n-k),  q = x/(x+1)
fn inv_binom_odd_log_piece(n: u32, x: &BigRational) -> BigRational {
    let n = n as u64;
    let xp1 = x + BigRational::one();
    let q = x / &xp1;
    let mut acc = BigRational::zero();
    for k in 1..=2 * n {
        acc += rpow(&q, 2 * n - k) / rat_int(k as i64);
    }
    acc * rat_int(2 * n as i64) / xp1
}

// (2n(x-1)/(x+1)^2) Σ_{k=1}^n (x^k/(k C(2k,k))) q^(2n-2k)
fn inv_binom_odd_cb_piece(n: u32, x: &BigRational) -> BigRational {
    let n = n as u64;
    let xp1 = x + BigRational::one();
    let q = x / &xp1;
    let mut acc = BigRational::zero();
    for k in 1..=n {
        acc +=
            rpow(x, k) / (rat_int(k as i64) * rat_big(binomial(2 * k, k))) * rpow(&q, 2 * (n - k));
    }
    acc * rat_int(2 * n as i64) * (x - BigRational::one()) / (&xp1 * &xp1)
}

// (n/(x+1)^2) Σ_{k=1}^n ((4k-1)x + 2k-1)/(k(2k-1)) q^(2n-2k)
fn inv_binom_odd_raw_piece(n: u32, x: &BigRational) -> BigRational {
    let n = n as u64;
    let xp1 = x + BigRational::one();
    let q = x / &xp1;
    let mut acc = BigRational::zero();
    for k in 1..=n {
        let numer = rat_int(4 * k as i64 - 1) * x + rat_int(2 * k as i64 - 1);
        acc += numer / rat_int((k * (2 * k - 1)) as i64) * rpow(&q, 2 * (n - k));
    }
    acc * rat_int(n as i64) / (&xp1 * &xp1)
}

/// Inverse-binomial identity with odd top `Σ_{k<n} x^k/C(2n-1,k)`: the main
/// closed form, the rawer intermediate form, and the bridge between their
/// first pieces, each checked exactly. Requires `n ≥ 1`, `x ∉ {0, -1}`.
pub fn verify_inverse_binomial_odd(n: u32, x: &BigRational) -> NtResult<[IdentityReport; 3]> {
    if n == 0 {
        return Err(NtError::ExcludedArgument("n = 0"));
    }
    if *x == -BigRational::one() || x.is_zero() {
        return Err(NtError::ExcludedArgument("x in {0, -1}"));
    }
    let params = format!("n={n}, x={x}");
    let s = inv_binom_odd_sum(n, x);
    let log_piece = inv_binom_odd_log_piece(n, x);
    let cb_piece = inv_binom_odd_cb_piece(n, x);
    let raw_piece = inv_binom_odd_raw_piece(n, x);
    let main = IdentityReport::from_rats(
        "inverse_binomial_odd",
        params.clone(),
        &s,
        &(&log_piece + &cb_piece),
    );
    let raw = IdentityReport::from_rats(
        "inverse_binomial_odd_raw",
        params.clone(),
        &s,
        &(&raw_piece + &cb_piece),
    );
    let bridge = IdentityReport::from_rats(
        "inverse_binomial_odd_bridge",
        params,
        &raw_piece,
        &log_piece,
    );
    Ok([main, raw, bridge])
}

/// Both sides of the raw odd-top identity satisfy
/// `(n+1)x^2 S_n - n(1+x)^2 S_{n+1} =
///  -n((4n+3)x + 2n+1)/(2n+1) + (n^2+n)(x^{n+1} - x^{n+2})/((2n+1) C(2n,n))`.
pub fn verify_inverse_binomial_odd_certificate(
    n: u32,
    x: &BigRational,
) -> NtResult<IdentityReport> {
    if n == 0 {
        return Err(NtError::ExcludedArgument("n = 0"));
    }
    if *x == -BigRational::one() || x.is_zero() {
        return Err(NtError::ExcludedArgument("x in {0, -1}"));
    }
    let certificate = |s: &dyn Fn(u32) -> BigRational| -> BigRational {
        let xp1 = x + BigRational::one();
        rat_int(n as i64 + 1) * x * x * s(n) - rat_int(n as i64) * &xp1 * &xp1 * s(n + 1)
    };
    let n64 = n as u64;
    let target = -rat_int(n as i64) * (rat_int(4 * n as i64 + 3) * x + rat_int(2 * n as i64 + 1))
        / rat_int(2 * n as i64 + 1)
        + rat_int((n64 * n64 + n64) as i64) * (rpow(x, n64 + 1) - rpow(x, n64 + 2))
            / (rat_int(2 * n as i64 + 1) * rat_big(binomial(2 * n64, n64)));
    let sum_side = certificate(&|i| inv_binom_odd_sum(i, x));
    let closed_side =
        certificate(&|i| inv_binom_odd_raw_piece(i, x) + inv_binom_odd_cb_piece(i, x));
    let holds = sum_side == target && closed_side == target;
    Ok(IdentityReport {
        id: "inverse_binomial_odd_certificate",
        params: format!("n={n}, x={x}"),
        holds,
        lhs: format!("sum-side={sum_side}, closed-side={closed_side}"),
        rhs: target.to_string(),
    })
}

// Σ_{l=1}^n C(n,l) C(n+l,l) (-1)^l Σ_{k=1}^l (1/(k C(2k,k))) (-(m-d)^2/(md))^k
fn md_double_sum_lhs(n: u32, m: i64, d: i64) -> BigRational {
    let n = n as u64;
    let z = -rat_big(BigInt::from(m - d) * BigInt::from(m - d))
        / rat_big(BigInt::from(m) * BigInt::from(d));
    let mut inner = BigRational::zero();
    let mut zpow = BigRational::one();
    let mut acc = BigRational::zero();
    for l in 1..=n {
        zpow *= &z;
        inner += &zpow / (rat_int(l as i64) * rat_big(binomial(2 * l, l)));
        let sign = if l % 2 == 0 { 1 } else { -1 };
        acc += rat_big(binomial(n, l) * binomial(n + l, l) * BigInt::from(sign)) * &inner;
    }
    acc
}

// ((d-m)/(d+m)) (-1)^n (Σ_{k=1}^n (-d/m)^k/k - Σ_{k=1}^n (-m/d)^k/k)
fn md_double_sum_rhs(n: u32, m: i64, d: i64) -> BigRational {
    let n = n as u64;
    let u = -rat_int(d) / rat_int(m);
    let v = -rat_int(m) / rat_int(d);
    let mut acc = BigRational::zero();
    let (mut upow, mut vpow) = (BigRational::one(), BigRational::one());
    for k in 1..=n {
        upow *= &u;
        vpow *= &v;
        acc += (&upow - &vpow) / rat_int(k as i64);
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    acc * rat_int(d - m) / rat_int(d + m) * rat_int(sign)
}

/// The `(m, d)`-parameterized double sum equals its split-logarithm closed
/// form, exactly. Requires `d·m·(m+d) ≠ 0`.
pub fn verify_md_double_sum(n: u32, m: i64, d: i64) -> NtResult<IdentityReport> {
    if n == 0 {
        return Err(NtError::ExcludedArgument("n = 0"));
    }
    if d == 0 || m == 0 || m + d == 0 {
        return Err(NtError::ExcludedArgument("d·m·(m+d) = 0"));
    }
    Ok(IdentityReport::from_rats(
        "md_double_sum",
        format!("n={n}, m={m}, d={d}"),
        &md_double_sum_lhs(n, m, d),
        &md_double_sum_rhs(n, m, d),
    ))
}

/// Both sides of the `(m, d)` double sum satisfy the four-term recurrence
/// `md(n+1) S_n + A S_{n+1} + (A + 2md) S_{n+2} + md(n+3) S_{n+3} = 0`
/// with `A = -2d^2 + md - 2m^2 + n(md - d^2 - m^2)`.
pub fn verify_md_double_sum_certificate(n: u32, m: i64, d: i64) -> NtResult<IdentityReport> {
    if d == 0 || m == 0 || m + d == 0 {
        return Err(NtError::ExcludedArgument("d·m·(m+d) = 0"));
    }
    let md = BigInt::from(m) * BigInt::from(d);
    let a = -BigInt::from(2) * BigInt::from(d) * BigInt::from(d) + &md
        - BigInt::from(2) * BigInt::from(m) * BigInt::from(m)
        + BigInt::from(n)
            * (&md - BigInt::from(d) * BigInt::from(d) - BigInt::from(m) * BigInt::from(m));
    let b = &a + BigInt::from(2) * &md;
    let certificate = |s: &dyn Fn(u32) -> BigRational| -> BigRational {
        rat_big(&md * BigInt::from(n + 1)) * s(n)
            + rat_big(a.clone()) * s(n + 1)
            + rat_big(b.clone()) * s(n + 2)
            + rat_big(&md * BigInt::from(n + 3)) * s(n + 3)
    };
    // Index 0 is the empty sum on both sides.
    let sum_side = certificate(&|i| {
        if i == 0 {
            BigRational::zero()
        } else {
            md_double_sum_lhs(i, m, d)
        }
    });
    let closed_side = certificate(&|i| {
        if i == 0 {
            BigRational::zero()
        } else {
            md_double_sum_rhs(i, m, d)
        }
    });
    let holds = sum_side.is_zero() && closed_side.is_zero();
    Ok(IdentityReport {
        id: "md_double_sum_certificate",
        params: format!("n={n}, m={m}, d={d}"),
        holds,
        lhs: format!("sum-side={sum_side}, closed-side={closed_side}"),
        rhs: "0".into(),
    })
}

/// Finite polylog vs. Fermat quotient: `£_1(x) ≡ -Q_p(x) (mod p)` for
/// p-integral `x` with `p ∤ x(1-x)`.
pub fn verify_mattarei_tauraso(p: u64, x: &BigRational) -> NtResult<IdentityReport> {
    let m1 = Modulus::new(p, 1)?;
    let xr = m1.residue_rational(x)?;
    if xr.is_zero() || xr == m1.one() {
        return Err(NtError::ExcludedArgument("p divides x(1-x)"));
    }
    let lhs = finite_polylog(1, x, p)?;
    let rhs = -poly_fermat_quotient(x, p)?;
    Ok(IdentityReport::from_residues(
        "mattarei_tauraso",
        format!("p={p}, x={x}"),
        lhs,
        rhs,
    ))
}

/// `Σ_{k=1}^{(p-1)/2} (1-x)^k/k ≡ H_{(p-1)/2} + Σ_{k≥1} C(2k,k)(x/4)^k/k
/// (mod p)` for p-integral `x`.
pub fn verify_truncated_log_congruence(p: u64, x: &BigRational) -> NtResult<IdentityReport> {
    let m1 = Modulus::new(p, 1)?;
    let one_minus = m1.one() - m1.residue_rational(x)?;
    let inv = crate::modnt::inverse_table(m1, (p - 1) / 2)?;
    let mut lhs = m1.zero();
    let mut pw = m1.one();
    for k in 1..=((p - 1) / 2) as usize {
        pw = pw * one_minus;
        lhs = lhs + pw * m1.residue_u64(inv[k]);
    }
    let quarter = x / rat_int(4);
    let rhs = harmonic_mod((p - 1) / 2, m1)? + central_binomial_sum(&quarter, p)?;
    Ok(IdentityReport::from_residues(
        "truncated_log",
        format!("p={p}, x={x}"),
        lhs,
        rhs,
    ))
}

/// `T_n(b, c) = (√d)^n P_n(b/√d)` with
/// `P_n(x) = Σ C(n,k) C(n+k,k) ((x-1)/2)^k`, evaluated in `Q(√d)`.
///
/// The radical component must vanish identically and the rational component
/// must equal the trinomial coefficient. Requires `d ≠ 0`.
pub fn verify_legendre_connection(n: u32, params: &TrinomialParams) -> NtResult<IdentityReport> {
    let d = params.d;
    if d == 0 {
        return Err(NtError::ExcludedArgument("d = 0"));
    }
    // b/√d = (b/d)·√d.
    let arg = QuadExtRat::new(BigRational::zero(), rat_int(params.b) / rat_int(d), d);
    let half = arg
        .sub(&QuadExtRat::from_rat(BigRational::one(), d))
        .scale(&BigRational::new(BigInt::one(), BigInt::from(2)));
    let n64 = n as u64;
    let mut acc = QuadExtRat::from_rat(BigRational::zero(), d);
    let mut half_pow = QuadExtRat::from_rat(BigRational::one(), d);
    for k in 0..=n64 {
        if k > 0 {
            half_pow = half_pow.mul(&half);
        }
        let coeff = rat_big(binomial(n64, k) * binomial(n64 + k, k));
        acc = acc.add(&half_pow.scale(&coeff));
    }
    // (√d)^n
    let sqrt_pow = if n % 2 == 0 {
        QuadExtRat::from_rat(rpow(&rat_int(d), n64 / 2), d)
    } else {
        QuadExtRat::new(BigRational::zero(), rpow(&rat_int(d), n64 / 2), d)
    };
    let value = acc.mul(&sqrt_pow);
    let expected = rat_big(trinomial_exact(n, params));
    let holds = value.is_rational() && value.a == expected;
    Ok(IdentityReport {
        id: "legendre_connection",
        params: format!("n={n}, b={}, c={}", params.b, params.c),
        holds,
        lhs: format!("{} + {}·√{}", value.a, value.b, d),
        rhs: expected.to_string(),
    })
}

/// `C(p-2l-1, k) ≡ C(-2l-1, k)·(1 - p(H_{2l+k} - H_{2l})) (mod p^2)` for
/// `1 ≤ l ≤ (p-1)/2` and `0 ≤ k ≤ p-2l-1`.
pub fn verify_binom_shift_down(p: u64, l: u64, k: u64) -> NtResult<IdentityReport> {
    let m2 = Modulus::new(p, 2)?;
    if l < 1 || l > (p - 1) / 2 || k > p - 2 * l - 1 {
        return Err(NtError::ExcludedArgument("(l, k) outside stated ranges"));
    }
    let lhs = binom_valued(p - 2 * l - 1, k as i64, m2)?.to_residue(2)?;
    let m1 = m2.with_exponent(1)?;
    let h_diff = (harmonic_mod(2 * l + k, m1)? - harmonic_mod(2 * l, m1)?).value();
    let correction = m2.residue_i128(1 - (p as i128) * (h_diff as i128));
    let rhs = m2.residue_bigint(&binomial_general(-2 * (l as i64) - 1, k)) * correction;
    Ok(IdentityReport::from_residues(
        "binom_shift_down",
        format!("p={p}, l={l}, k={k}"),
        lhs,
        rhs,
    ))
}

/// `C(p+k, 2l) ≡ (p/(2l)) · (-1)^{k+1} / C(2l-1, k) (mod p^2)` for
/// `1 ≤ l ≤ (p-1)/2` and `0 ≤ k ≤ 2l-1` (the product defining the left side
/// must straddle `p`, and the right side needs `C(2l-1, k) ≠ 0`).
pub fn verify_binom_shift_up(p: u64, l: u64, k: u64) -> NtResult<IdentityReport> {
    let m2 = Modulus::new(p, 2)?;
    if l < 1 || l > (p - 1) / 2 || k >= 2 * l {
        return Err(NtError::ExcludedArgument("(l, k) outside stated ranges"));
    }
    let lhs = binom_valued(p + k, 2 * l as i64, m2)?.to_residue(2)?;
    let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
    let rhs = m2.residue_u64(p)
        * m2.residue_u64(2 * l).inv()?
        * m2.residue(sign)
        * m2.residue_bigint(&binomial(2 * l - 1, k)).inv()?;
    Ok(IdentityReport::from_residues(
        "binom_shift_up",
        format!("p={p}, l={l}, k={k}"),
        lhs,
        rhs,
    ))
}

/// `C((p-1)/2, l) · C((p-1)/2 + l, l) · (-1)^l ≡ C(2l,l)^2 / 16^l (mod p^2)`
/// for `0 ≤ l ≤ (p-1)/2`.
pub fn verify_half_binomial_square(p: u64, l: u64) -> NtResult<IdentityReport> {
    let m2 = Modulus::new(p, 2)?;
    if l > (p - 1) / 2 {
        return Err(NtError::ExcludedArgument("l > (p-1)/2"));
    }
    let half = (p - 1) / 2;
    let sign = if l % 2 == 0 { 1 } else { -1 };
    let lhs = m2.residue_bigint(&binomial(half, l))
        * m2.residue_bigint(&binomial(half + l, l))
        * m2.residue(sign);
    let cb = m2.residue_bigint(&binomial(2 * l, l));
    let rhs = cb * cb * m2.residue(16).inv()?.pow(l);
    Ok(IdentityReport::from_residues(
        "half_binomial_square",
        format!("p={p}, l={l}"),
        lhs,
        rhs,
    ))
}

/// `H_{p-1} ≡ 0 (mod p^2)` for primes `p > 3`.
pub fn verify_wolstenholme(p: u64) -> NtResult<IdentityReport> {
    if p <= 3 {
        return Err(NtError::ExcludedArgument("requires p > 3"));
    }
    let m2 = Modulus::new(p, 2)?;
    let lhs = harmonic_mod(p - 1, m2)?;
    Ok(IdentityReport::from_residues(
        "wolstenholme",
        format!("p={p}"),
        lhs,
        m2.zero(),
    ))
}

//! Exact and modular sequence generators.
//!
//! The exact side works over big integers and rationals; the modular side
//! materializes length-`≤ p` arrays of residues. The trinomial stream uses a
//! three-term recurrence for O(p) cost, which the test suite cross-validates
//! against the defining expansion before anything else trusts it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::modnt::{inverse_table, Modulus, NtError, NtResult, Residue, ValuedResidue};

/// Parameters `(b, c)` of the trinomial `x^2 + bx + c`, with the derived
/// discriminant `d = b^2 - 4c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrinomialParams {
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl TrinomialParams {
    pub fn new(b: i64, c: i64) -> Self {
        let d = b
            .checked_mul(b)
            .and_then(|bb| bb.checked_sub(4 * c))
            .expect("discriminant overflows i64");
        TrinomialParams { b, c, d }
    }
}

/// Exact binomial coefficient; zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc = acc * BigInt::from(n - k + j) / BigInt::from(j);
    }
    acc
}

/// Generalized binomial `C(t, k)` for integer `t` (possibly negative),
/// defined by the falling factorial `∏_{j=0}^{k-1} (t - j) / k!`.
pub fn binomial_general(t: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(t) - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "generalized binomial is always an integer");
    q
}

/// Coefficient of `x^n` in `(x^2 + bx + c)^n`, by the defining sum
/// `Σ_{k ≤ n/2} C(n, 2k) C(2k, k) b^(n-2k) c^k`.
pub fn trinomial_exact(n: u32, params: &TrinomialParams) -> BigInt {
    let n = n as u64;
    let b = BigInt::from(params.b);
    let c = BigInt::from(params.c);
    let mut acc = BigInt::zero();
    for k in 0..=n / 2 {
        acc +=
            binomial(n, 2 * k) * binomial(2 * k, k) * b.pow((n - 2 * k) as u32) * c.pow(k as u32);
    }
    acc
}

/// Independent oracle: literally expand `(x^2 + bx + c)^n` by repeated
/// polynomial multiplication and read off the `x^n` coefficient.
pub fn poly_power_coeff(n: u32, params: &TrinomialParams) -> BigInt {
    let base = [
        BigInt::from(params.c),
        BigInt::from(params.b),
        BigInt::one(),
    ];
    let mut coeffs = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::zero(); coeffs.len() + 2];
        for (i, ci) in coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, bj) in base.iter().enumerate() {
                next[i + j] += ci * bj;
            }
        }
        coeffs = next;
    }
    coeffs.into_iter().nth(n as usize).unwrap_or_default()
}

/// Which sequence a [`ModSeries`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Trinomial { b: i64, c: i64 },
    CentralBinomial,
}

/// A materialized prefix of a sequence reduced modulo `p^e`.
#[derive(Clone, Debug)]
pub struct ModSeries<T> {
    modulus: Modulus,
    kind: SeriesKind,
    terms: Vec<T>,
}

impl<T> ModSeries<T> {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T> std::ops::Index<usize> for ModSeries<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.terms[i]
    }
}

/// Stream `T_0, …, T_{len-1} (mod p^e)` via the three-term recurrence
/// `(k+1) T_{k+1} = (2k+1) b T_k - k d T_{k-1}`.
///
/// Requires `len ≤ p` so every divisor `k + 1` is invertible.
pub fn trinomial_mod_series(
    params: &TrinomialParams,
    modulus: Modulus,
    len: usize,
) -> NtResult<ModSeries<Residue>> {
    if len as u64 > modulus.p() {
        return Err(NtError::LengthExceedsP {
            len,
            p: modulus.p(),
        });
    }
    let kind = SeriesKind::Trinomial {
        b: params.b,
        c: params.c,
    };
    let mut terms = Vec::with_capacity(len);
    if len == 0 {
        return Ok(ModSeries {
            modulus,
            kind,
            terms,
        });
    }
    let inv = inverse_table(modulus, len.saturating_sub(1) as u64)?;
    let b = modulus.residue(params.b);
    let d = modulus.residue(params.d);
    terms.push(modulus.one());
    if len >= 2 {
        terms.push(b);
    }
    for k in 1..len.saturating_sub(1) {
        let lead = modulus.residue_u64(2 * k as u64 + 1) * b * terms[k];
        let lag = modulus.residue_u64(k as u64) * d * terms[k - 1];
        terms.push((lead - lag) * modulus.residue_u64(inv[k + 1]));
    }
    Ok(ModSeries {
        modulus,
        kind,
        terms,
    })
}

/// Stream `C(0,0), C(2,1), …, C(2k,k), …` as valued residues via the ratio
/// `C(2k+2, k+1) = C(2k, k) · 2(2k+1)/(k+1)`.
///
/// The factor `2k+1` equals `p` exactly at `k = (p-1)/2`, so every term from
/// `k = (p+1)/2` on carries valuation 1. Requires `len ≤ p`.
pub fn central_binomial_series(modulus: Modulus, len: usize) -> NtResult<ModSeries<ValuedResidue>> {
    if len as u64 > modulus.p() {
        return Err(NtError::LengthExceedsP {
            len,
            p: modulus.p(),
        });
    }
    let mut terms = Vec::with_capacity(len);
    if len == 0 {
        return Ok(ModSeries {
            modulus,
            kind: SeriesKind::CentralBinomial,
            terms,
        });
    }
    let inv = inverse_table(modulus, len.saturating_sub(1) as u64)?;
    let mut cur = ValuedResidue::one(modulus);
    terms.push(cur);
    for k in 0..len - 1 {
        let k = k as u64;
        let numer = ValuedResidue::from_u128(2 * (2 * k as u128 + 1), modulus);
        let denom_inv = ValuedResidue::from_u64(inv[(k + 1) as usize], modulus);
        cur = cur.mul(numer).mul(denom_inv);
        terms.push(cur);
    }
    Ok(ModSeries {
        modulus,
        kind: SeriesKind::CentralBinomial,
        terms,
    })
}

/// Exact p-adic decomposition of `C(n, k)` for `n < p^2`.
pub fn binom_valued(n: u64, k: i64, modulus: Modulus) -> NtResult<ValuedResidue> {
    if (n as u128) >= (modulus.p() as u128) * (modulus.p() as u128) {
        return Err(NtError::BinomialTooLarge { n });
    }
    if k < 0 || k as u64 > n {
        return Ok(ValuedResidue::zero(modulus));
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ValuedResidue::one(modulus);
    for j in 1..=k {
        acc = acc.mul(ValuedResidue::from_u64(n - k + j, modulus));
        // Partial products are the integers C(n-k+j, j), so the valuation
        // never dips negative.
        acc = acc
            .div(ValuedResidue::from_u64(j, modulus))
            .expect("binomial partial products are integers");
    }
    Ok(acc)
}

/// `H_n = Σ_{k=1}^n 1/k` as an exact rational.
pub fn harmonic_exact(n: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for k in 1..=n as i64 {
        acc += BigRational::new(BigInt::one(), BigInt::from(k));
    }
    acc
}

/// `H_n mod p^e`, defined only for `n < p`.
pub fn harmonic_mod(n: u64, modulus: Modulus) -> NtResult<Residue> {
    if n >= modulus.p() {
        return Err(NtError::HarmonicRange { n, p: modulus.p() });
    }
    let inv = inverse_table(modulus, n)?;
    let mut acc = modulus.zero();
    for k in 1..=n as usize {
        acc = acc + modulus.residue_u64(inv[k]);
    }
    Ok(acc)
}

/// `V_n(t)` from `V_0 = 2`, `V_1 = t`, `V_{n+1} = t (V_n + V_{n-1})`,
/// evaluated at a residue.
pub fn v_polynomial(t: Residue, n: u64) -> Residue {
    let modulus = t.modulus();
    if n == 0 {
        return modulus.residue(2);
    }
    let mut prev = modulus.residue(2);
    let mut cur = t;
    for _ in 1..n {
        (prev, cur) = (cur, t * (cur + prev));
    }
    cur
}

/// `Σ_{k=1}^{p-1} C(2k, k) x^k / k (mod p)` for a p-integral rational `x`.
///
/// Terms past `k = (p-1)/2` carry valuation ≥ 1 and vanish mod `p`; they are
/// summed anyway through the valued-residue arithmetic.
pub fn central_binomial_sum(x: &BigRational, p: u64) -> NtResult<Residue> {
    let m = Modulus::new(p, 1)?;
    let xr = m.residue_rational(x)?;
    let cb = central_binomial_series(m, p as usize)?;
    let inv = inverse_table(m, p - 1)?;
    let mut acc = m.zero();
    let mut xpow = m.one();
    for k in 1..p as usize {
        xpow = xpow * xr;
        let term = cb[k].mul_residue(xpow).mul_residue(m.residue_u64(inv[k]));
        acc = acc + term.to_residue(1)?;
    }
    Ok(acc)
}

/// Finite polylogarithm `Σ_{k=1}^{p-1} x^k / k^order (mod p)`.
pub fn finite_polylog(order: u32, x: &BigRational, p: u64) -> NtResult<Residue> {
    let m = Modulus::new(p, 1)?;
    let xr = m.residue_rational(x)?;
    let inv = inverse_table(m, p - 1)?;
    let mut acc = m.zero();
    let mut xpow = m.one();
    for k in 1..p as usize {
        xpow = xpow * xr;
        acc = acc + xpow * m.residue_u64(inv[k]).pow(order as u64);
    }
    Ok(acc)
}

/// Closed form `(2 t^p - 2 V_p(t)) / (p t) (mod p)` for the alternating
/// central-binomial sum `Σ_{k=1}^{p-1} C(2k,k) / (k (-t)^k)`.
///
/// The numerator is computed mod `p^2` and divided exactly by `p`; it is a
/// p-adic integer whenever `p ∤ t`.
pub fn sun_tauraso_closed_form(t: i64, p: u64) -> NtResult<Residue> {
    let m2 = Modulus::new(p, 2)?;
    let m1 = m2.with_exponent(1)?;
    let tr = m2.residue(t);
    if tr.value() % p == 0 {
        return Err(NtError::MultipleOfP {
            what: "closed-form argument t",
            p,
        });
    }
    let two = m2.residue(2);
    let numer = two * (tr.pow(p) - v_polynomial(tr, p));
    if numer.value() % p != 0 {
        return Err(NtError::Internal("2t^p - 2V_p(t) not divisible by p"));
    }
    let quotient = m1.residue_u64(numer.value() / p);
    Ok(quotient * m1.residue(t).inv()?)
}

/// Reduced rational from `i128` parts.
pub fn rational(numer: i128, denom: i128) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modnt::make_modulus;
    use num_traits::ToPrimitive;

    fn params(b: i64, c: i64) -> TrinomialParams {
        TrinomialParams::new(b, c)
    }

    #[test]
    fn discriminant_derived() {
        assert_eq!(params(1, 1).d, -3);
        assert_eq!(params(3, 2).d, 1);
        assert_eq!(params(2, -1).d, 8);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(trinomial_exact(0, &params(9, -7)), BigInt::from(1));
        assert_eq!(trinomial_exact(4, &params(1, 1)), BigInt::from(19));
        // Central Delannoy: T_2(3,2) = 13.
        assert_eq!(trinomial_exact(2, &params(3, 2)), BigInt::from(13));
        assert_eq!(poly_power_coeff(1, &params(5, 7)), BigInt::from(5));
        assert_eq!(poly_power_coeff(2, &params(2, 1)), BigInt::from(6));
        assert_eq!(poly_power_coeff(3, &params(1, 1)), BigInt::from(7));
    }

    #[test]
    fn exact_matches_expansion_and_second_form() {
        for b in -5..=5i64 {
            for c in -5..=5i64 {
                let pr = params(b, c);
                for n in 0..=24u32 {
                    let direct = trinomial_exact(n, &pr);
                    assert_eq!(
                        direct,
                        poly_power_coeff(n, &pr),
                        "expansion at n={n}, b={b}, c={c}"
                    );
                    // Second sum form: Σ C(n,k) C(n-k,k) b^(n-2k) c^k.
                    let mut second = BigInt::zero();
                    for k in 0..=(n as u64) / 2 {
                        second += binomial(n as u64, k)
                            * binomial(n as u64 - k, k)
                            * BigInt::from(b).pow(n - 2 * k as u32)
                            * BigInt::from(c).pow(k as u32);
                    }
                    assert_eq!(direct, second, "second form at n={n}, b={b}, c={c}");
                }
            }
        }
    }

    #[test]
    fn special_cases_central_binomial_and_delannoy() {
        for n in 0..=40u32 {
            assert_eq!(
                trinomial_exact(n, &params(2, 1)),
                binomial(2 * n as u64, n as u64)
            );
            let delannoy: BigInt = (0..=n as u64)
                .map(|k| binomial(n as u64, k) * binomial(n as u64 + k, k))
                .sum();
            assert_eq!(trinomial_exact(n, &params(3, 2)), delannoy);
        }
    }

    #[test]
    fn mod_series_recurrence_validated_against_exact() {
        // The recurrence is not taken on faith: compare against the defining
        // sum for every index below min(p, 200), 25 seeded (b, c) pairs.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 21) as i64 - 10
        };
        let pairs: Vec<(i64, i64)> = (0..25).map(|_| (next(), next())).collect();
        for &(p, e) in &[(7u64, 2u32), (101, 3), (997, 1)] {
            let m = make_modulus(p, e).unwrap();
            for &(b, c) in &pairs {
                let pr = params(b, c);
                let len = (p as usize).min(200);
                let series = trinomial_mod_series(&pr, m, len).unwrap();
                for k in 0..len {
                    let exact = m.residue_bigint(&trinomial_exact(k as u32, &pr));
                    assert_eq!(
                        series[k], exact,
                        "recurrence drift at p={p}, e={e}, b={b}, c={c}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn mod_series_known_values() {
        let m = make_modulus(7, 2).unwrap();
        let series = trinomial_mod_series(&params(1, 1), m, 7).unwrap();
        let values: Vec<u64> = series.terms().iter().map(|r| r.value()).collect();
        assert_eq!(values, vec![1, 1, 3, 7, 19, 2, 43]);

        // b = 0: odd-index coefficients of (x^2 + c)^n vanish.
        let series = trinomial_mod_series(&params(0, 3), m, 7).unwrap();
        for k in (1..7).step_by(2) {
            assert_eq!(series[k].value(), 0);
        }

        // b = 2, c = 1 reproduces central binomials up to (p-1)/2.
        let m = make_modulus(13, 2).unwrap();
        let series = trinomial_mod_series(&params(2, 1), m, 13).unwrap();
        for k in 0..=6u64 {
            assert_eq!(
                series[k as usize],
                m.residue_bigint(&binomial(2 * k, k)),
                "central binomial at k={k}"
            );
        }

        assert!(matches!(
            trinomial_mod_series(&params(1, 1), m, 14),
            Err(NtError::LengthExceedsP { len: 14, p: 13 })
        ));
    }

    #[test]
    fn central_binomial_series_examples() {
        let m = make_modulus(5, 2).unwrap();
        let cb = central_binomial_series(m, 5).unwrap();
        assert_eq!(
            (cb[0].val(), cb[0].unit().map(|u| u.value())),
            (Some(0), Some(1))
        );
        // C(6,3) = 20 = 5 · 4.
        assert_eq!(
            (cb[3].val(), cb[3].unit().map(|u| u.value())),
            (Some(1), Some(4))
        );
        for &p in &[5u64, 7, 13, 101] {
            let m = make_modulus(p, 2).unwrap();
            let cb = central_binomial_series(m, p as usize).unwrap();
            for k in 0..p as usize {
                let expect = binom_valued(2 * k as u64, k as i64, m).unwrap();
                assert_eq!(cb[k], expect, "p={p}, k={k}");
                if (k as u64) > (p - 1) / 2 {
                    assert_eq!(cb[k].val(), Some(1), "tail valuation at p={p}, k={k}");
                } else {
                    assert_eq!(cb[k].val(), Some(0), "head valuation at p={p}, k={k}");
                }
            }
        }
    }

    #[test]
    fn binom_valued_examples() {
        let m = make_modulus(5, 2).unwrap();
        let v = binom_valued(5, 1, m).unwrap();
        assert_eq!((v.val(), v.unit().map(|u| u.value())), (Some(1), Some(1)));
        let v = binom_valued(6, 3, m).unwrap();
        assert_eq!((v.val(), v.unit().map(|u| u.value())), (Some(1), Some(4)));
        let v = binom_valued(17, 0, m).unwrap();
        assert_eq!((v.val(), v.unit().map(|u| u.value())), (Some(0), Some(1)));
        assert!(binom_valued(7, -1, m).unwrap().is_zero());
        assert!(binom_valued(7, 9, m).unwrap().is_zero());
        assert!(matches!(
            binom_valued(25, 3, m),
            Err(NtError::BinomialTooLarge { n: 25 })
        ));
        // Cross-check against the exact big-integer binomial.
        let m = make_modulus(7, 3).unwrap();
        for n in 0..48u64 {
            for k in 0..=n {
                let exact = ValuedResidue::from_bigint(&binomial(n, k), m);
                assert_eq!(binom_valued(n, k as i64, m).unwrap(), exact, "C({n},{k})");
            }
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_exact(0), BigRational::zero());
        assert_eq!(harmonic_exact(3), rational(11, 6));
        for p in [3u64, 5, 7, 11, 101, 499] {
            let m = make_modulus(p, 1).unwrap();
            assert!(harmonic_mod(p - 1, m).unwrap().is_zero(), "H_(p-1) mod {p}");
        }
        for p in [5u64, 7, 11, 101, 499] {
            let m = make_modulus(p, 2).unwrap();
            assert!(
                harmonic_mod(p - 1, m).unwrap().is_zero(),
                "H_(p-1) mod {p}^2"
            );
        }
        // p = 3 only holds mod p, not mod p^2: H_2 = 3/2.
        let m9 = make_modulus(3, 2).unwrap();
        assert!(!harmonic_mod(2, m9).unwrap().is_zero());
        assert!(matches!(
            harmonic_mod(5, make_modulus(5, 1).unwrap()),
            Err(NtError::HarmonicRange { n: 5, p: 5 })
        ));
    }

    #[test]
    fn v_polynomial_examples() {
        let m = make_modulus(13, 2).unwrap();
        let t = m.residue(1);
        assert_eq!(v_polynomial(t, 0).value(), 2);
        assert_eq!(v_polynomial(t, 1).value(), 1);
        assert_eq!(v_polynomial(t, 2).value(), 3);
        for p in [3u64, 5, 7, 11, 13, 47] {
            let m1 = make_modulus(p, 1).unwrap();
            for t in 1..p {
                let v = v_polynomial(m1.residue_u64(t), p);
                assert_eq!(v.value(), t, "V_p(t) ≡ t mod p at p={p}, t={t}");
            }
        }
    }

    #[test]
    fn central_binomial_sum_examples() {
        let zero = BigRational::zero();
        for p in [5u64, 7, 11] {
            assert!(central_binomial_sum(&zero, p).unwrap().is_zero());
        }
        // Σ C(2k,k)/k ≡ 0 (mod p) for p > 3.
        let one = BigRational::one();
        for p in [5u64, 7, 11, 13, 101, 199] {
            assert!(
                central_binomial_sum(&one, p).unwrap().is_zero(),
                "at x=1, p={p}"
            );
        }
        // Σ C(2k,k)/(k 3^k) ≡ q_p(3) (mod p) for p > 3.
        let third = rational(1, 3);
        for p in [5u64, 7, 11, 13, 101, 199] {
            assert_eq!(
                central_binomial_sum(&third, p).unwrap(),
                crate::modnt::fermat_quotient(3, p).unwrap(),
                "at x=1/3, p={p}"
            );
        }
    }

    #[test]
    fn central_binomial_sum_half_range_consistency() {
        // The full sum equals the half-range sum mod p: the tail vanishes.
        for p in [7u64, 13, 101] {
            let m = make_modulus(p, 1).unwrap();
            let cb = central_binomial_series(m, p as usize).unwrap();
            let inv = inverse_table(m, p - 1).unwrap();
            for num in [1i128, 2, -3, 5] {
                let x = rational(num, 3);
                let xr = m.residue_rational(&x).unwrap();
                let mut half = m.zero();
                let mut xpow = m.one();
                for k in 1..=((p - 1) / 2) as usize {
                    xpow = xpow * xr;
                    half = half + cb[k].to_residue(1).unwrap() * xpow * m.residue_u64(inv[k]);
                }
                assert_eq!(central_binomial_sum(&x, p).unwrap(), half, "x={x}, p={p}");
            }
        }
    }

    #[test]
    fn finite_polylog_examples() {
        for p in [5u64, 7, 13, 101] {
            let one = BigRational::one();
            assert!(
                finite_polylog(1, &one, p).unwrap().is_zero(),
                "order-1 at x=1, p={p}"
            );
            let zero = BigRational::zero();
            assert!(finite_polylog(2, &zero, p).unwrap().is_zero());
            // £_1(2) ≡ -Q_p(2) (mod p).
            let two = BigRational::from_integer(BigInt::from(2));
            let lhs = finite_polylog(1, &two, p).unwrap();
            let rhs = -crate::modnt::poly_fermat_quotient(&two, p).unwrap();
            assert_eq!(lhs, rhs, "polylog vs quotient at {p}");
        }
    }

    #[test]
    fn sun_tauraso_closed_form_examples() {
        // p = 3, t = 1: direct sum C(2,1)/(1·(-1)) + C(4,2)/(2·1) = -2+3 = 1.
        let r = sun_tauraso_closed_form(1, 3).unwrap();
        assert_eq!(r.value(), 1);
        // Direct-sum oracle over small primes and every admissible t.
        for p in [3u64, 5, 7, 11, 13, 31, 53] {
            let m = make_modulus(p, 1).unwrap();
            let cb = central_binomial_series(m, p as usize).unwrap();
            let inv = inverse_table(m, p - 1).unwrap();
            for t in 1..p {
                let neg_t_inv = (-m.residue_u64(t)).inv().unwrap();
                let mut acc = m.zero();
                let mut pw = m.one();
                for k in 1..p as usize {
                    pw = pw * neg_t_inv;
                    acc = acc + cb[k].to_residue(1).unwrap() * m.residue_u64(inv[k]) * pw;
                }
                assert_eq!(
                    sun_tauraso_closed_form(t as i64, p).unwrap(),
                    acc,
                    "closed form vs direct sum at p={p}, t={t}"
                );
            }
        }
        assert!(sun_tauraso_closed_form(10, 5).is_err());
    }

    #[test]
    fn binomial_general_matches_reflection() {
        for l in 0..8i64 {
            for k in 0..12u64 {
                let lhs = binomial_general(-2 * l - 1, k);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let rhs = BigInt::from(sign) * binomial(2 * l as u64 + k, k);
                assert_eq!(lhs, rhs, "C(-2l-1, k) at l={l}, k={k}");
            }
        }
        assert_eq!(binomial_general(7, 3).to_i64(), Some(35));
    }
}

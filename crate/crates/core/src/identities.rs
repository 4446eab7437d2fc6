//! Closed-form sign formulas and congruence identities: the two main sign
//! theorems for `p = 1 mod 4`, the classical `p = 3 mod 4` sign, the
//! factorial congruences of Chowla, Mordell, and Williams-Currie, the
//! Jacobsthal-type character sums and pair counts behind the sign proofs,
//! Zolotarev's theorem, and the mod-p splitting of the cyclotomic
//! polynomial `Φ_{p-1}`.
//!
//! Formula exponents are always assembled as exact integers and asserted
//! divisible before use; a division that would truncate is a bug. The `½`
//! inside a centered factor means multiplication by the inverse of 2 mod p
//! before centering.

use std::collections::HashMap;

use crate::arith::{divisors, PrimeCtx};
use crate::check::CheckResult;
use crate::invariants::{FundamentalUnit, QuadInvariants};
use crate::perm::{inversion_count, Sign};
use crate::{Error, Result};

fn require_class(ctx: &PrimeCtx, expected: u64, modulus: u64) -> Result<()> {
    if ctx.p() % modulus != expected {
        return Err(Error::WrongResidueClass {
            p: ctx.p(),
            expected,
            modulus,
        });
    }
    Ok(())
}

fn factorial_mod(ctx: &PrimeCtx, m: u64) -> u64 {
    let mut acc = 1u64;
    for k in 2..=m {
        acc = ctx.mul_mod(acc, k);
    }
    acc
}

fn centered_unit(ctx: &PrimeCtx, residue: u64) -> Sign {
    let c = ctx.centered_u(residue);
    Sign::from_centered(c)
        .unwrap_or_else(|| panic!("centered factor {c} is not +-1 for p = {}", ctx.p()))
}

/// Sign of `σ_{0,1}` for `p = 1 mod 4`:
/// `s_p·u^((p-1)/4)` centered, times `(-1)^(((h+2)(p-1)+2h(-4p))/8 + r*)`
/// for `p = 1 mod 8`; `½·s_p·u^((p+3)/4)` centered, times
/// `(-1)^(((h+2)(p+3)+2h(-4p)-4)/8 + r*)` for `p = 5 mod 8`.
pub fn theorem11_sign(ctx: &PrimeCtx, inv: &QuadInvariants) -> Result<Sign> {
    require_class(ctx, 1, 4)?;
    let p = ctx.p();
    let (h, hi) = (inv.h_real as u128, inv.h_imag as u128);
    let (factor, exp8) = match ctx.cls8() {
        1 => {
            let f = ctx.mul_mod(inv.s_p_mod_p, ctx.mod_pow(inv.u_mod_p, (p - 1) / 4));
            (f, (h + 2) * (p as u128 - 1) + 2 * hi)
        }
        5 => {
            let inv2 = ctx.mod_inv(2).expect("2 is a unit mod an odd prime");
            let f = ctx.mul_mod(
                ctx.mul_mod(inv2, inv.s_p_mod_p),
                ctx.mod_pow(inv.u_mod_p, (p + 3) / 4),
            );
            (f, (h + 2) * (p as u128 + 3) + 2 * hi - 4)
        }
        _ => unreachable!("p = 1 mod 4 is 1 or 5 mod 8"),
    };
    assert_eq!(exp8 % 8, 0, "sign exponent is not an integer for p = {p}");
    let parity = (exp8 / 8) as u64 + inv.r_star;
    Ok(centered_unit(ctx, factor) * Sign::from_parity(parity))
}

/// Sign of `σ_{0,2}` for `p = 1 mod 4` and a primitive root `g`:
/// `½·n^(n/2)·u·g^((p-1)(3n²-n-2)/8)` centered, times `(-1)^((h+1)/2)`.
pub fn theorem12_sign(ctx: &PrimeCtx, inv: &QuadInvariants, g: u64) -> Result<Sign> {
    require_class(ctx, 1, 4)?;
    if !ctx.is_primitive_root(g) {
        return Err(Error::NotPrimitiveRoot { g, p: ctx.p() });
    }
    let p = ctx.p();
    let n = ctx.n();
    assert_eq!(n % 2, 0, "n is even for p = 1 mod 4");
    let e_num = (p as u128 - 1) * (3 * (n as u128) * (n as u128) - n as u128 - 2);
    assert_eq!(e_num % 8, 0, "g-exponent is not an integer for p = {p}");
    // Exact integer exponent, reduced mod p-1 only for the exponentiation.
    let e = ((e_num / 8) % (p as u128 - 1)) as u64;
    let inv2 = ctx.mod_inv(2).expect("2 is a unit mod an odd prime");
    let factor = ctx.mul_mod(
        ctx.mul_mod(inv2, ctx.mod_pow(n, n / 2)),
        ctx.mul_mod(inv.u_mod_p, ctx.mod_pow(g, e)),
    );
    assert_eq!(inv.h_real % 2, 1, "h(p) is odd for prime discriminants");
    Ok(centered_unit(ctx, factor) * Sign::from_parity((inv.h_real + 1) / 2))
}

/// The `g`-free form of the `σ_{0,2}` sign for `p = 5 mod 8`:
/// `½·n^(n/2)·u` centered, times `(-1)^((2h+n)/4)`. Must agree with
/// [`theorem12_sign`] for every primitive root.
pub fn theorem12_sign_5mod8(ctx: &PrimeCtx, inv: &QuadInvariants) -> Result<Sign> {
    require_class(ctx, 5, 8)?;
    let n = ctx.n();
    let inv2 = ctx.mod_inv(2).expect("2 is a unit mod an odd prime");
    let factor = ctx.mul_mod(ctx.mul_mod(inv2, ctx.mod_pow(n, n / 2)), inv.u_mod_p);
    let e = 2 * inv.h_real + n;
    assert_eq!(e % 4, 0, "(2h+n)/4 is not an integer for p = {}", ctx.p());
    Ok(centered_unit(ctx, factor) * Sign::from_parity(e / 4))
}

/// Sign of `σ_{0,1}` for `p = 3 mod 4`: `+1` when `p = 3 mod 8`, and
/// `(-1)^((h(-p)+1)/2)` when `p = 7 mod 8`.
pub fn sun_3mod4_sign(ctx: &PrimeCtx, h_minus_p: u64) -> Result<Sign> {
    match ctx.cls8() {
        3 => Ok(Sign::Plus),
        7 => {
            assert_eq!(h_minus_p % 2, 1, "h(-p) is odd for prime p = 3 mod 4");
            Ok(Sign::from_parity((h_minus_p + 1) / 2))
        }
        _ => Err(Error::WrongResidueClass {
            p: ctx.p(),
            expected: 3,
            modulus: 4,
        }),
    }
}

/// `∏_{1<=i<j<=n}(j² - i²) mod p` against its closed form: `-n!` when
/// `p = 1 mod 4`, `1` when `p = 3 mod 4`.
pub fn lemma21_check(ctx: &PrimeCtx) -> CheckResult {
    let p = ctx.p();
    let n = ctx.n();
    let mut sq = vec![0u64; n as usize + 1];
    for k in 1..=n {
        sq[k as usize] = ctx.mul_mod(k, k);
    }
    let mut lhs = 1u64;
    for i in 1..=n as usize {
        let si = sq[i];
        for &sj in &sq[i + 1..] {
            let mut t = sj + p - si;
            if t >= p {
                t -= p;
            }
            lhs = ctx.mul_mod(lhs, t);
        }
    }
    let rhs = if ctx.is_1_mod_4() {
        p - factorial_mod(ctx, n)
    } else {
        1
    };
    CheckResult::compare("lemma2.1", p, lhs, rhs)
}

/// Chowla's congruence for `p = 1 mod 4`:
/// `n! = (-1)^((h(p)+1)/2) · u_p / 2 (mod p)`.
pub fn chowla_check(ctx: &PrimeCtx, unit: &FundamentalUnit, h_real: u64) -> CheckResult {
    assert!(ctx.is_1_mod_4(), "Chowla's congruence needs p = 1 mod 4");
    let p = ctx.p();
    let lhs = factorial_mod(ctx, ctx.n());
    let inv2 = ctx.mod_inv(2).expect("2 is a unit mod an odd prime");
    let mag = ctx.mul_mod(unit.u_mod(ctx), inv2);
    assert_eq!(h_real % 2, 1, "h(p) is odd for prime discriminants");
    let rhs = if (h_real + 1) / 2 % 2 == 1 {
        p - mag
    } else {
        mag
    };
    CheckResult::compare("lemma2.2", p, lhs, rhs)
}

/// Mordell's congruence for `p = 3 mod 4`, `p > 3`:
/// `n! = (-1)^((h(-p)+1)/2) (mod p)`.
pub fn mordell_check(ctx: &PrimeCtx, h_minus_p: u64) -> Result<CheckResult> {
    require_class(ctx, 3, 4)?;
    if ctx.p() == 3 {
        return Err(Error::PrimeTooSmall { p: 3, min: 7 });
    }
    let p = ctx.p();
    let lhs = factorial_mod(ctx, ctx.n());
    assert_eq!(h_minus_p % 2, 1, "h(-p) is odd for prime p = 3 mod 4");
    let rhs = if (h_minus_p + 1) / 2 % 2 == 1 {
        p - 1
    } else {
        1
    };
    Ok(CheckResult::compare("mordell", p, lhs, rhs))
}

/// The Williams-Currie evaluation of `2^((p-1)/4)` for `p = 1 mod 4`:
/// `(-1)^((p-1)/8 + h(-4p)/4)` for `p = 1 mod 8`, and
/// `(-1)^((p-5)/8 + (h(-4p)-2)/4) · n!` for `p = 5 mod 8`.
pub fn williams_currie_check(ctx: &PrimeCtx, h_imag: u64) -> CheckResult {
    assert!(ctx.is_1_mod_4(), "Williams-Currie needs p = 1 mod 4");
    let p = ctx.p();
    let lhs = ctx.mod_pow(2, (p - 1) / 4);
    let rhs = match ctx.cls8() {
        1 => {
            assert_eq!(h_imag % 4, 0, "h(-4p) = 0 mod 4 for p = 1 mod 8");
            let e = (p - 1) / 8 + h_imag / 4;
            if e % 2 == 1 {
                p - 1
            } else {
                1
            }
        }
        5 => {
            assert_eq!(h_imag % 4, 2, "h(-4p) = 2 mod 4 for p = 5 mod 8");
            let e = (p - 5) / 8 + (h_imag - 2) / 4;
            let f = factorial_mod(ctx, ctx.n());
            if e % 2 == 1 {
                p - f
            } else {
                f
            }
        }
        _ => unreachable!("p = 1 mod 4 is 1 or 5 mod 8"),
    };
    CheckResult::compare("lemma2.3", p, lhs, rhs)
}

/// Counts of `x` in `[1, p-1-k]` split by the Legendre signs of `x` and
/// `x+k`, plus the residue count `r_k` on the same range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCounts {
    pub k: u64,
    /// both `x` and `x+k` residues
    pub app: u64,
    /// `x` residue, `x+k` nonresidue
    pub apm: u64,
    /// `x` nonresidue, `x+k` residue
    pub amp: u64,
    /// both nonresidues
    pub amm: u64,
    /// residues in `[1, p-1-k]`
    pub r_k: u64,
}

/// Brute-force pair counts for `1 <= k <= p-1`.
pub fn pair_counts(ctx: &PrimeCtx, k: u64) -> PairCounts {
    let p = ctx.p();
    assert!(k >= 1 && k <= p - 1, "k = {k} out of range for p = {p}");
    let table = ctx.legendre_table();
    let (mut app, mut apm, mut amp, mut amm) = (0u64, 0u64, 0u64, 0u64);
    let mut r_k = 0u64;
    for x in 1..=(p - 1 - k) {
        let sx = table[x as usize];
        let sy = table[(x + k) as usize];
        debug_assert!(sx != 0 && sy != 0);
        if sx == 1 {
            r_k += 1;
        }
        match (sx, sy) {
            (1, 1) => app += 1,
            (1, -1) => apm += 1,
            (-1, 1) => amp += 1,
            _ => amm += 1,
        }
    }
    PairCounts {
        k,
        app,
        apm,
        amp,
        amm,
        r_k,
    }
}

/// The complete character sum `Σ_{x=0}^{p-1} ((2x+k)² - k² | p)`, which is
/// `-1` for `1 <= k <= p-1`. The split form
/// `Σ_{1<=x<=p-1-k}(x²+kx|p) + Σ_{1<=x<=k-1}(x²-kx|p)` is recomputed and
/// asserted equal on the way.
pub fn char_sum_complete(ctx: &PrimeCtx, k: u64) -> i64 {
    let p = ctx.p();
    assert!(k >= 1 && k <= p - 1, "k = {k} out of range for p = {p}");
    let table = ctx.legendre_table();
    let ksq = ctx.mul_mod(k, k);
    let mut total = 0i64;
    for x in 0..p {
        let y = (2 * x + k) % p;
        let mut t = ctx.mul_mod(y, y) + p - ksq;
        if t >= p {
            t -= p;
        }
        total += table[t as usize] as i64;
    }
    let mut split = 0i64;
    for x in 1..=(p - 1 - k) {
        split += table[ctx.mul_mod(x, x + k) as usize] as i64;
    }
    for x in 1..k {
        split += table[ctx.mul_mod(x, x + p - k) as usize] as i64;
    }
    assert_eq!(
        total, split,
        "split character sum disagrees for p = {p}, k = {k}"
    );
    total
}

/// `r_k + r_{p-k} = (p-1)/2 - (1 + (k|p))/2`, by brute-force counts.
/// Valid for `p = 1 mod 4` (the reflection it rests on uses `(-1|p) = 1`).
pub fn r_k_identity_check(ctx: &PrimeCtx, k: u64) -> CheckResult {
    let p = ctx.p();
    assert!(k >= 1 && k <= p - 1, "k = {k} out of range for p = {p}");
    let table = ctx.legendre_table();
    let count = |upper: u64| (1..=upper).filter(|&x| table[x as usize] == 1).count() as u64;
    let lhs = count(p - 1 - k) + count(k - 1);
    let leg = table[k as usize] as i64;
    let rhs = (p - 1) / 2 - ((1 + leg) / 2) as u64;
    CheckResult::compare("rk-identity", p, lhs, rhs).with_witness(format!("k={k}"))
}

/// Zolotarev's theorem: the sign of `x -> ax` on `Z/pZ` (by inversion count
/// over `0..p`) equals the Legendre symbol `(a|p)`.
pub fn zolotarev_sign(ctx: &PrimeCtx, a: u64) -> Result<CheckResult> {
    let p = ctx.p();
    let a = a % p;
    if a == 0 {
        return Err(Error::NotInvertible { a, p });
    }
    let perm: Vec<u64> = (0..p).map(|x| ctx.mul_mod(a, x)).collect();
    let lhs = Sign::from_parity(inversion_count(&perm));
    let rhs = if ctx.legendre(a as i64) == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Ok(CheckResult::compare("zolotarev", p, lhs, rhs).with_witness(format!("a={a}")))
}

// --- dense polynomials mod p for the cyclotomic splitting check ---

fn poly_trim(coeffs: &mut Vec<u64>) {
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
}

/// Expands `∏ (x - r)` over the given roots, coefficients mod p ascending.
fn poly_from_roots(ctx: &PrimeCtx, roots: &[u64]) -> Vec<u64> {
    let p = ctx.p();
    let mut coeffs = Vec::with_capacity(roots.len() + 1);
    coeffs.push(1u64);
    for &r in roots {
        let neg_r = (p - r % p) % p;
        coeffs.push(0);
        for i in (0..coeffs.len()).rev() {
            let keep = ctx.mul_mod(coeffs[i], neg_r);
            let shifted = if i > 0 { coeffs[i - 1] } else { 0 };
            coeffs[i] = (keep + shifted) % p;
        }
    }
    coeffs
}

/// Exact long division mod p; panics on a nonzero remainder.
fn poly_div_exact(ctx: &PrimeCtx, num: &[u64], den: &[u64]) -> Vec<u64> {
    let p = ctx.p();
    assert!(den.len() > 1 || den[0] != 0, "division by zero polynomial");
    let mut rem = num.to_vec();
    let dlead = *den.last().unwrap();
    let dinv = ctx.mod_inv(dlead).expect("leading coefficient is a unit");
    let qdeg = num.len() - den.len();
    let mut quot = vec![0u64; qdeg + 1];
    for qi in (0..=qdeg).rev() {
        let c = ctx.mul_mod(rem[qi + den.len() - 1], dinv);
        quot[qi] = c;
        if c != 0 {
            for (di, &dc) in den.iter().enumerate() {
                let t = ctx.mul_mod(c, dc);
                let idx = qi + di;
                rem[idx] = (rem[idx] + p - t) % p;
            }
        }
    }
    assert!(
        rem.iter().all(|&c| c == 0),
        "nonzero remainder in exact polynomial division mod {p}"
    );
    poly_trim(&mut quot);
    quot
}

/// Coefficients of `Φ_m(x) mod p`, ascending degree, computed by dividing
/// `x^m - 1` by the cyclotomic polynomials of the proper divisors of `m`.
pub fn cyclotomic_mod_p(ctx: &PrimeCtx, m: u64) -> Vec<u64> {
    let p = ctx.p();
    let mut memo: HashMap<u64, Vec<u64>> = HashMap::new();
    for &d in &divisors(m) {
        let mut poly = vec![0u64; d as usize + 1];
        poly[0] = p - 1;
        poly[d as usize] = 1;
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            poly = poly_div_exact(ctx, &poly, &memo[&e]);
        }
        memo.insert(d, poly);
    }
    memo.remove(&m).expect("m divides itself")
}

/// Kummer splitting of the `(p-1)`-th cyclotomic polynomial:
/// `Φ_{p-1}(x) = ∏_{gcd(k,p-1)=1}(x - g^k) mod p`, compared coefficientwise.
pub fn cyclotomic_split_check(ctx: &PrimeCtx, g: u64) -> Result<CheckResult> {
    if !ctx.is_primitive_root(g) {
        return Err(Error::NotPrimitiveRoot { g, p: ctx.p() });
    }
    let p = ctx.p();
    let m = p - 1;
    let phi = cyclotomic_mod_p(ctx, m);
    let roots: Vec<u64> = (1..=m)
        .filter(|&k| num_integer::gcd(k, m) == 1)
        .map(|k| ctx.mod_pow(g, k))
        .collect();
    let prod = poly_from_roots(ctx, &roots);
    let pass = phi == prod;
    let render = |c: &[u64]| {
        if c.len() <= 9 {
            format!("{c:?}")
        } else {
            format!("deg={} [{:?}...]", c.len() - 1, &c[..6])
        }
    };
    let mut result = CheckResult {
        claim: "phi-split",
        p,
        lhs: render(&phi),
        rhs: render(&prod),
        pass,
        witness: None,
    };
    if !pass {
        let idx = phi
            .iter()
            .zip(prod.iter())
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| phi.len().min(prod.len()));
        result = result.with_witness(format!(
            "g={g}; first mismatch at degree {idx}: {:?} vs {:?}",
            phi.get(idx),
            prod.get(idx)
        ));
    } else {
        result = result.with_witness(format!("g={g}"));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;
    use crate::invariants::{class_number_imag, fundamental_unit, r_star, QuadInvariants};
    use crate::perm::{sigma_sign, SeqKind};

    fn ctx(p: u64) -> PrimeCtx {
        PrimeCtx::new(p).unwrap()
    }

    fn inv(p: u64) -> QuadInvariants {
        QuadInvariants::compute(&ctx(p)).unwrap()
    }

    #[test]
    fn theorem11_small_cases() {
        assert_eq!(theorem11_sign(&ctx(13), &inv(13)), Ok(Sign::Minus));
        assert_eq!(theorem11_sign(&ctx(17), &inv(17)), Ok(Sign::Minus));
        assert_eq!(theorem11_sign(&ctx(5), &inv(5)), Ok(Sign::Plus));
        assert!(matches!(
            theorem11_sign(&ctx(7), &inv(13)),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn theorem12_small_cases() {
        assert_eq!(theorem12_sign(&ctx(17), &inv(17), 3), Ok(Sign::Minus));
        assert_eq!(theorem12_sign(&ctx(13), &inv(13), 2), Ok(Sign::Minus));
        assert_eq!(theorem12_sign(&ctx(5), &inv(5), 2), Ok(Sign::Minus));
        assert!(matches!(
            theorem12_sign(&ctx(13), &inv(13), 3),
            Err(Error::NotPrimitiveRoot { g: 3, p: 13 })
        ));
    }

    #[test]
    fn theorem12_5mod8_small_cases() {
        assert_eq!(theorem12_sign_5mod8(&ctx(13), &inv(13)), Ok(Sign::Minus));
        assert_eq!(theorem12_sign_5mod8(&ctx(5), &inv(5)), Ok(Sign::Minus));
        assert_eq!(theorem12_sign_5mod8(&ctx(29), &inv(29)), Ok(Sign::Plus));
        assert!(matches!(
            theorem12_sign_5mod8(&ctx(17), &inv(17)),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn sun_3mod4_small_cases() {
        let h7 = class_number_imag(-7).unwrap();
        assert_eq!(sun_3mod4_sign(&ctx(7), h7), Ok(Sign::Minus));
        assert_eq!(
            sigma_sign(&ctx(7), SeqKind::A0, SeqKind::A1, None),
            Ok(Sign::Minus)
        );
        let h11 = class_number_imag(-11).unwrap();
        assert_eq!(sun_3mod4_sign(&ctx(11), h11), Ok(Sign::Plus));
        let h23 = class_number_imag(-23).unwrap();
        assert_eq!(h23, 3);
        assert_eq!(sun_3mod4_sign(&ctx(23), h23), Ok(Sign::Plus));
        assert!(matches!(
            sun_3mod4_sign(&ctx(13), 1),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn lemma21_small_cases() {
        let r13 = lemma21_check(&ctx(13));
        assert!(r13.pass, "{r13:?}");
        assert_eq!(r13.lhs, "8");
        let r17 = lemma21_check(&ctx(17));
        assert!(r17.pass);
        assert_eq!(r17.lhs, "4");
        let r7 = lemma21_check(&ctx(7));
        assert!(r7.pass);
        assert_eq!(r7.lhs, "1");
        assert!(lemma21_check(&ctx(3)).pass);
    }

    #[test]
    fn chowla_small_cases() {
        for p in [5u64, 13, 17] {
            let c = ctx(p);
            let unit = fundamental_unit(&c).unwrap();
            let h = crate::invariants::class_number_real(&c).unwrap();
            let r = chowla_check(&c, &unit, h);
            assert!(r.pass, "p = {p}: {r:?}");
        }
        let r13 = chowla_check(&ctx(13), &fundamental_unit(&ctx(13)).unwrap(), 1);
        assert_eq!((r13.lhs.as_str(), r13.rhs.as_str()), ("5", "5"));
    }

    #[test]
    fn mordell_small_cases() {
        assert!(mordell_check(&ctx(7), 1).unwrap().pass);
        assert!(mordell_check(&ctx(11), 1).unwrap().pass);
        assert!(mordell_check(&ctx(23), 3).unwrap().pass);
        assert!(matches!(
            mordell_check(&ctx(3), 1),
            Err(Error::PrimeTooSmall { p: 3, .. })
        ));
        assert!(matches!(
            mordell_check(&ctx(13), 1),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn williams_currie_small_cases() {
        assert!(williams_currie_check(&ctx(17), 4).pass);
        assert!(williams_currie_check(&ctx(13), 2).pass);
        assert!(williams_currie_check(&ctx(5), 2).pass);
    }

    #[test]
    fn pair_counts_p13() {
        let c = ctx(13);
        let pc1 = pair_counts(&c, 1);
        assert_eq!(pc1.apm, pc1.amp);
        // A_4^{++} + A_9^{++} = (13 - 3 - 2)/4 = 2 with (4|13) = +1
        let a4 = pair_counts(&c, 4).app;
        let a9 = pair_counts(&c, 9).app;
        assert_eq!(a4 + a9, 2);
        // sum over k of A_{p-k}^{++} recovers r*
        let total: u64 = (1..=c.n()).map(|k| pair_counts(&c, c.p() - k).app).sum();
        assert_eq!(total, r_star(&c));
    }

    #[test]
    fn char_sum_small_cases() {
        assert_eq!(char_sum_complete(&ctx(13), 1), -1);
        assert_eq!(char_sum_complete(&ctx(17), 5), -1);
        for k in 1..=12 {
            assert_eq!(char_sum_complete(&ctx(13), k), -1, "k = {k}");
        }
    }

    #[test]
    fn r_k_identity_p13_p17() {
        let c13 = ctx(13);
        let r1 = r_k_identity_check(&c13, 1);
        assert!(r1.pass);
        assert_eq!(r1.lhs, "5");
        let r2 = r_k_identity_check(&c13, 2);
        assert!(r2.pass);
        assert_eq!(r2.lhs, "6");
        let c17 = ctx(17);
        let r8 = r_k_identity_check(&c17, 8);
        assert!(r8.pass);
        assert_eq!(r8.lhs, "7");
    }

    #[test]
    fn zolotarev_small_cases() {
        let c7 = ctx(7);
        assert!(zolotarev_sign(&c7, 1).unwrap().pass);
        let r3 = zolotarev_sign(&c7, 3).unwrap();
        assert!(r3.pass);
        assert_eq!(r3.lhs, "-1");
        let r4 = zolotarev_sign(&ctx(13), 4).unwrap();
        assert!(r4.pass);
        assert_eq!(r4.lhs, "+1");
        assert!(matches!(
            zolotarev_sign(&c7, 14),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn zolotarev_exhaustive_small_primes() {
        for p in primes_up_to(60).into_iter().skip(1) {
            let c = ctx(p);
            for a in 1..p {
                assert!(zolotarev_sign(&c, a).unwrap().pass, "p = {p}, a = {a}");
            }
        }
    }

    #[test]
    fn cyclotomic_polynomials_mod_p() {
        let c13 = ctx(13);
        // x^4 - x^2 + 1 mod 13
        assert_eq!(cyclotomic_mod_p(&c13, 12), vec![1, 0, 12, 0, 1]);
        let c5 = ctx(5);
        // x^2 + 1 mod 5
        assert_eq!(cyclotomic_mod_p(&c5, 4), vec![1, 0, 1]);
        let c7 = ctx(7);
        // x^2 - x + 1 mod 7
        assert_eq!(cyclotomic_mod_p(&c7, 6), vec![1, 6, 1]);
    }

    #[test]
    fn cyclotomic_split_small_cases() {
        assert!(cyclotomic_split_check(&ctx(5), 2).unwrap().pass);
        assert!(cyclotomic_split_check(&ctx(13), 2).unwrap().pass);
        assert!(cyclotomic_split_check(&ctx(7), 3).unwrap().pass);
        assert!(cyclotomic_split_check(&ctx(3), 2).unwrap().pass);
        assert!(matches!(
            cyclotomic_split_check(&ctx(13), 4),
            Err(Error::NotPrimitiveRoot { .. })
        ));
    }

    #[test]
    fn theorem_signs_match_permutations_small_sweep() {
        for p in primes_up_to(120) {
            if p % 4 != 1 {
                continue;
            }
            let c = ctx(p);
            let iv = QuadInvariants::compute(&c).unwrap();
            assert_eq!(
                theorem11_sign(&c, &iv).unwrap(),
                sigma_sign(&c, SeqKind::A0, SeqKind::A1, None).unwrap(),
                "p = {p}"
            );
            for g in c.all_primitive_roots() {
                assert_eq!(
                    theorem12_sign(&c, &iv, g).unwrap(),
                    sigma_sign(&c, SeqKind::A0, SeqKind::A2, Some(g)).unwrap(),
                    "p = {p}, g = {g}"
                );
            }
        }
    }
}

//! Modular arithmetic over a fixed odd prime: centered residues, Legendre
//! symbols, modular powers and inverses, primitive roots, and the sorted
//! quadratic-residue list.

use crate::{Error, Result};

/// An odd prime `p` together with `n = (p-1)/2` and `p mod 8`, the ambient
/// context for every operation in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeCtx {
    p: u64,
    n: u64,
    cls8: u8,
}

impl PrimeCtx {
    /// Builds the context, rejecting anything but an odd prime. `p = 3` is
    /// permitted (`n = 1`, every sequence a singleton, every sign `+1`);
    /// operations needing `p = 1 mod 4` reject it themselves.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeCtx {
            p,
            n: (p - 1) / 2,
            cls8: (p % 8) as u8,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// `(p - 1) / 2`, the common length of the sequences `A0`, `A1`, `A2`.
    #[inline]
    pub fn n(&self) -> u64 {
        self.n
    }

    #[inline]
    pub fn n_usize(&self) -> usize {
        self.n as usize
    }

    /// `p mod 8`, one of 1, 3, 5, 7.
    #[inline]
    pub fn cls8(&self) -> u8 {
        self.cls8
    }

    #[inline]
    pub fn is_1_mod_4(&self) -> bool {
        self.cls8 % 4 == 1
    }

    /// Least nonnegative residue of `a`.
    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    /// The unique representative of `a` mod `p` with `-p/2 < x < p/2`.
    #[inline]
    pub fn centered(&self, a: i64) -> i64 {
        self.centered_u(self.reduce(a))
    }

    /// [`centered`](Self::centered) for an already nonnegative residue.
    #[inline]
    pub fn centered_u(&self, a: u64) -> i64 {
        let r = a % self.p;
        if r > self.n {
            r as i64 - self.p as i64
        } else {
            r as i64
        }
    }

    #[inline]
    pub fn mul_mod(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    /// `a^e mod p` by square-and-multiply.
    pub fn mod_pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        acc
    }

    /// Legendre symbol `(a|p)` in `{-1, 0, +1}` via the Euler criterion
    /// `a^((p-1)/2) mod p`.
    pub fn legendre(&self, a: i64) -> i32 {
        let r = self.reduce(a);
        if r == 0 {
            return 0;
        }
        let t = self.mod_pow(r, self.n);
        if t == 1 {
            1
        } else {
            debug_assert_eq!(t, self.p - 1);
            -1
        }
    }

    /// Multiplicative inverse of `a` mod `p`; rejects multiples of `p`.
    pub fn mod_inv(&self, a: u64) -> Result<u64> {
        let r = a % self.p;
        if r == 0 {
            return Err(Error::NotInvertible { a, p: self.p });
        }
        Ok(self.mod_pow(r, self.p - 2))
    }

    /// Legendre symbols of `0..p` as a lookup table, built by marking the
    /// squares `k² mod p` rather than `p` Euler-criterion exponentiations.
    pub(crate) fn legendre_table(&self) -> Vec<i8> {
        let mut t = vec![-1i8; self.p as usize];
        t[0] = 0;
        for k in 1..=self.n {
            t[self.mul_mod(k, k) as usize] = 1;
        }
        t
    }

    /// Whether `g` generates the multiplicative group mod `p`; tested as
    /// `g^((p-1)/q) != 1` for every prime `q | p-1`.
    pub fn is_primitive_root(&self, g: u64) -> bool {
        let g = g % self.p;
        if g == 0 {
            return false;
        }
        distinct_prime_factors(self.p - 1)
            .into_iter()
            .all(|q| self.mod_pow(g, (self.p - 1) / q) != 1)
    }

    /// The least positive primitive root mod `p`.
    pub fn smallest_primitive_root(&self) -> u64 {
        (2..self.p)
            .find(|&g| self.is_primitive_root(g))
            .expect("every odd prime has a primitive root")
    }

    /// All `phi(p-1)` primitive roots in `[1, p)`, ascending. Computed as
    /// `g0^k` for `gcd(k, p-1) = 1` with `g0` the smallest root.
    pub fn all_primitive_roots(&self) -> Vec<u64> {
        let g0 = self.smallest_primitive_root();
        let mut roots = Vec::new();
        let mut cur = 1u64;
        for k in 1..self.p {
            cur = self.mul_mod(cur, g0);
            if num_integer::gcd(k, self.p - 1) == 1 {
                roots.push(cur);
            }
        }
        roots.sort_unstable();
        roots
    }

    /// The quadratic residues `a_1 < a_2 < … < a_n` in `[1, p-1]`, i.e. the
    /// set `{k² mod p : 1 <= k <= n}` sorted ascending.
    pub fn sorted_qrs(&self) -> Vec<u64> {
        let mut qrs: Vec<u64> = (1..=self.n).map(|k| self.mul_mod(k, k)).collect();
        qrs.sort_unstable();
        debug_assert!(qrs.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(qrs.first(), Some(&1));
        qrs
    }
}

/// Deterministic Miller-Rabin, exact for all `u64` inputs.
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
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let mul = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
    let pow = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        let mut e = d;
        while e != n - 1 {
            x = mul(x, x);
            e <<= 1;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `<= limit` by sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for k in 2..=limit {
        if !composite[k] {
            primes.push(k as u64);
            for m in (k * k..=limit).step_by(k) {
                composite[m] = true;
            }
        }
    }
    primes
}

/// Distinct prime factors of `m` by trial division, ascending.
pub(crate) fn distinct_prime_factors(mut m: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut q = 2u64;
    while q * q <= m {
        if m % q == 0 {
            factors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    factors
}

/// All divisors of `m`, ascending.
pub(crate) fn divisors(m: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            divs.push(d);
            if d != m / d {
                divs.push(m / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(p: u64) -> PrimeCtx {
        PrimeCtx::new(p).unwrap()
    }

    #[test]
    fn prime_ctx_rejects_non_primes() {
        assert_eq!(PrimeCtx::new(4), Err(Error::NotOddPrime(4)));
        assert_eq!(PrimeCtx::new(2), Err(Error::NotOddPrime(2)));
        assert_eq!(PrimeCtx::new(1), Err(Error::NotOddPrime(1)));
        assert_eq!(PrimeCtx::new(0), Err(Error::NotOddPrime(0)));
        let c = ctx(3);
        assert_eq!((c.p(), c.n(), c.cls8()), (3, 1, 3));
        let c = ctx(17);
        assert_eq!((c.p(), c.n(), c.cls8()), (17, 8, 1));
    }

    #[test]
    fn centered_small_cases() {
        assert_eq!(ctx(13).centered(6), 6);
        assert_eq!(ctx(13).centered(9), -4);
        assert_eq!(ctx(17).centered(-1), -1);
        assert_eq!(ctx(13).centered(13), 0);
        assert_eq!(ctx(13).centered(-30), -4);
    }

    #[test]
    fn legendre_small_cases() {
        let c = ctx(13);
        assert_eq!(c.legendre(1), 1);
        assert_eq!(c.legendre(2), -1);
        assert_eq!(c.legendre(13), 0);
        // exhaustive squares mod 13
        let qrs: Vec<u64> = c.sorted_qrs();
        assert_eq!(qrs, vec![1, 3, 4, 9, 10, 12]);
        for a in 1..13i64 {
            let expected = if qrs.contains(&(a as u64)) { 1 } else { -1 };
            assert_eq!(c.legendre(a), expected, "a = {a}");
        }
    }

    #[test]
    fn mod_pow_small_cases() {
        assert_eq!(ctx(17).mod_pow(3, 364), 4);
        assert_eq!(ctx(17).mod_pow(8, 4), 16);
        assert_eq!(ctx(13).mod_pow(5, 0), 1);
    }

    #[test]
    fn mod_inv_small_cases() {
        assert_eq!(ctx(13).mod_inv(2), Ok(7));
        assert_eq!(ctx(17).mod_inv(2), Ok(9));
        assert_eq!(ctx(13).mod_inv(1), Ok(1));
        assert_eq!(
            ctx(13).mod_inv(26),
            Err(Error::NotInvertible { a: 26, p: 13 })
        );
    }

    #[test]
    fn primitive_roots_small_cases() {
        assert_eq!(ctx(13).smallest_primitive_root(), 2);
        assert_eq!(ctx(17).smallest_primitive_root(), 3);
        assert_eq!(ctx(5).smallest_primitive_root(), 2);
        assert_eq!(ctx(5).all_primitive_roots(), vec![2, 3]);
        assert_eq!(ctx(13).all_primitive_roots(), vec![2, 6, 7, 11]);
        assert_eq!(ctx(7).all_primitive_roots(), vec![3, 5]);
        assert_eq!(ctx(3).all_primitive_roots(), vec![2]);
    }

    #[test]
    fn sorted_qrs_small_cases() {
        assert_eq!(ctx(7).sorted_qrs(), vec![1, 2, 4]);
        assert_eq!(ctx(17).sorted_qrs(), vec![1, 2, 4, 8, 9, 13, 15, 16]);
    }

    #[test]
    fn primitive_root_powers_enumerate_group() {
        for p in primes_up_to(100).into_iter().skip(1) {
            let c = ctx(p);
            let g = c.smallest_primitive_root();
            let mut powers: Vec<u64> = (1..p).map(|k| c.mod_pow(g, k)).collect();
            powers.sort_unstable();
            assert_eq!(powers, (1..p).collect::<Vec<_>>(), "p = {p}");
            let mut even: Vec<u64> = (1..=c.n()).map(|k| c.mod_pow(g, 2 * k)).collect();
            even.sort_unstable();
            assert_eq!(even, c.sorted_qrs(), "p = {p}");
        }
    }

    #[test]
    fn qr_set_negation_symmetry_iff_1_mod_4() {
        for p in primes_up_to(200).into_iter().skip(1) {
            let c = ctx(p);
            let qrs = c.sorted_qrs();
            let closed = qrs.iter().all(|&a| qrs.binary_search(&(p - a)).is_ok());
            assert_eq!(closed, p % 4 == 1, "p = {p}");
            assert_eq!(c.legendre(-1) == 1, p % 4 == 1, "p = {p}");
        }
    }

    #[test]
    fn residue_and_nonresidue_counts_balance() {
        for p in primes_up_to(300).into_iter().skip(1) {
            let c = ctx(p);
            let t = c.legendre_table();
            let plus = t.iter().filter(|&&s| s == 1).count() as u64;
            let minus = t.iter().filter(|&&s| s == -1).count() as u64;
            assert_eq!((plus, minus), (c.n(), c.n()), "p = {p}");
        }
    }

    #[test]
    fn is_prime_small_table() {
        let primes: Vec<u64> = (0..100).filter(|&k| is_prime(k)).collect();
        assert_eq!(primes, primes_up_to(100));
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    proptest! {
        #[test]
        fn centered_is_shift_invariant_and_multiplicative(
            a in -10_000i64..10_000,
            b in -10_000i64..10_000,
            idx in 0usize..20,
        ) {
            let primes = primes_up_to(100);
            let p = primes[1 + idx % (primes.len() - 1)];
            let c = ctx(p);
            prop_assert_eq!(c.centered(a + p as i64), c.centered(a));
            prop_assert!(c.centered(a).abs() <= c.n() as i64);
            let lhs = c.reduce(c.centered(a) * c.centered(b));
            let rhs = c.reduce(a) as u128 * c.reduce(b) as u128 % p as u128;
            prop_assert_eq!(lhs as u128, rhs);
        }

        #[test]
        fn legendre_is_completely_multiplicative(
            a in 1i64..10_000,
            b in 1i64..10_000,
            idx in 0usize..20,
        ) {
            let primes = primes_up_to(100);
            let p = primes[1 + idx % (primes.len() - 1)];
            let c = ctx(p);
            prop_assume!(a % p as i64 != 0 && b % p as i64 != 0);
            prop_assert_eq!(c.legendre(a * b), c.legendre(a) * c.legendre(b));
        }

        #[test]
        fn mod_inv_is_an_involution(a in 1u64..10_000, idx in 0usize..20) {
            let primes = primes_up_to(100);
            let p = primes[1 + idx % (primes.len() - 1)];
            let c = ctx(p);
            prop_assume!(a % p != 0);
            let inv = c.mod_inv(a).unwrap();
            prop_assert_eq!(c.mul_mod(a, inv), 1);
            prop_assert_eq!(c.mod_inv(inv).unwrap(), a % p);
        }
    }
}

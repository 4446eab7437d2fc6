//! The sequences `A0`, `A1`, `A2` of centered quadratic residues and the
//! permutations `σ_{i,j}` between them, with the sign computed two
//! independent ways: inversion counting (the reference) and the modular
//! Vandermonde ratio `∏(S_j - S_i) / ∏(T_j - T_i) mod p` (the definition).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::arith::PrimeCtx;
use crate::{Error, Result};

/// A permutation sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `+1` for even `n`, `-1` for odd.
    #[inline]
    pub fn from_parity(n: u64) -> Sign {
        if n % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Interprets a centered value that must be `±1`.
    pub fn from_centered(x: i64) -> Option<Sign> {
        match x {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    #[inline]
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Which of the three residue enumerations a sequence is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    /// Centered squares `1̄², 2̄², …, n̄²`.
    A0,
    /// Centered residues in ascending residue order.
    A1,
    /// Centered even powers `ḡ², ḡ⁴, …, ḡ^(p-1)` of a primitive root.
    A2,
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqKind::A0 => "A0",
            SeqKind::A1 => "A1",
            SeqKind::A2 => "A2",
        })
    }
}

/// One of the sequences `A0`, `A1`, `A2` for a fixed prime: `n` pairwise
/// distinct centered residues whose underlying set is the quadratic
/// residues of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenteredSeq {
    kind: SeqKind,
    ctx: PrimeCtx,
    g: Option<u64>,
    values: Vec<i64>,
}

impl CenteredSeq {
    /// Builds the requested sequence. `g` is required (and must be a
    /// primitive root) exactly for `A2`; `A0` and `A1` ignore it.
    pub fn build(kind: SeqKind, ctx: &PrimeCtx, g: Option<u64>) -> Result<CenteredSeq> {
        let n = ctx.n();
        let (values, g_used) = match kind {
            SeqKind::A0 => (
                (1..=n).map(|k| ctx.centered_u(ctx.mul_mod(k, k))).collect(),
                None,
            ),
            SeqKind::A1 => (
                ctx.sorted_qrs()
                    .into_iter()
                    .map(|a| ctx.centered_u(a))
                    .collect(),
                None,
            ),
            SeqKind::A2 => {
                let g = g.ok_or(Error::PrimitiveRootRequired)?;
                if !ctx.is_primitive_root(g) {
                    return Err(Error::NotPrimitiveRoot { g, p: ctx.p() });
                }
                let g2 = ctx.mul_mod(g % ctx.p(), g % ctx.p());
                let mut cur = 1u64;
                let values = (0..n)
                    .map(|_| {
                        cur = ctx.mul_mod(cur, g2);
                        ctx.centered_u(cur)
                    })
                    .collect();
                (values, Some(g % ctx.p()))
            }
        };
        Ok(CenteredSeq {
            kind,
            ctx: *ctx,
            g: g_used,
            values,
        })
    }

    pub fn a0(ctx: &PrimeCtx) -> CenteredSeq {
        Self::build(SeqKind::A0, ctx, None).expect("A0 is total")
    }

    pub fn a1(ctx: &PrimeCtx) -> CenteredSeq {
        Self::build(SeqKind::A1, ctx, None).expect("A1 is total")
    }

    pub fn a2(ctx: &PrimeCtx, g: u64) -> Result<CenteredSeq> {
        Self::build(SeqKind::A2, ctx, Some(g))
    }

    pub fn kind(&self) -> SeqKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.ctx.p()
    }

    /// The primitive root used, for `A2` sequences.
    pub fn g(&self) -> Option<u64> {
        self.g
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// A bijection of `{1..n}` with its sign. `image()[k-1]` is `σ(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationMap {
    image: Vec<usize>,
    sign: Sign,
}

impl PermutationMap {
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }
}

/// Number of inversions (pairs `i < j` with `xs[i] > xs[j]`) by merge
/// counting, `O(n log n)`.
pub fn inversion_count<T: Copy + Ord>(xs: &[T]) -> u64 {
    fn go<T: Copy + Ord>(xs: &mut [T], buf: &mut Vec<T>) -> u64 {
        let len = xs.len();
        if len < 2 {
            return 0;
        }
        let mid = len / 2;
        let mut inv = {
            let (lo, hi) = xs.split_at_mut(mid);
            go(lo, buf) + go(hi, buf)
        };
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < len {
            if xs[i] <= xs[j] {
                buf.push(xs[i]);
                i += 1;
            } else {
                inv += (mid - i) as u64;
                buf.push(xs[j]);
                j += 1;
            }
        }
        buf.extend_from_slice(&xs[i..mid]);
        buf.extend_from_slice(&xs[j..len]);
        xs.copy_from_slice(buf);
        inv
    }
    let mut v = xs.to_vec();
    let mut buf = Vec::with_capacity(v.len());
    go(&mut v, &mut buf)
}

/// The permutation `σ` with `S_k = T_{σ(k)}`, its sign from the inversion
/// count of `σ(1), …, σ(n)`. Rejects sequences over different primes or
/// with different value sets.
pub fn permutation_between(s: &CenteredSeq, t: &CenteredSeq) -> Result<PermutationMap> {
    if s.p() != t.p() || s.values.len() != t.values.len() {
        return Err(Error::SequenceMismatch);
    }
    let pos: HashMap<i64, usize> = t
        .values
        .iter()
        .enumerate()
        .map(|(idx, &v)| (v, idx + 1))
        .collect();
    let mut image = Vec::with_capacity(s.values.len());
    for &v in &s.values {
        match pos.get(&v) {
            Some(&k) => image.push(k),
            None => return Err(Error::SequenceMismatch),
        }
    }
    let sign = Sign::from_parity(inversion_count(&image));
    Ok(PermutationMap { image, sign })
}

/// The sign of the permutation between `S` and `T` as the modular ratio
/// `∏_{i<j}(S_j - S_i) · (∏_{i<j}(T_j - T_i))^{-1} mod p`, which must land
/// in `{1, p-1}`. Independent of the inversion-count path.
pub fn sign_by_modular_ratio(s: &CenteredSeq, t: &CenteredSeq) -> Result<Sign> {
    if s.p() != t.p() || s.values.len() != t.values.len() {
        return Err(Error::SequenceMismatch);
    }
    {
        let mut sv = s.values.clone();
        let mut tv = t.values.clone();
        sv.sort_unstable();
        tv.sort_unstable();
        if sv != tv {
            return Err(Error::SequenceMismatch);
        }
    }
    let ctx = &s.ctx;
    let n = s.values.len();
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..n {
        for j in (i + 1)..n {
            num = ctx.mul_mod(num, ctx.reduce(s.values[j] - s.values[i]));
            den = ctx.mul_mod(den, ctx.reduce(t.values[j] - t.values[i]));
        }
    }
    let ratio = ctx.mul_mod(num, ctx.mod_inv(den).expect("T values are distinct mod p"));
    match ratio {
        1 => Ok(Sign::Plus),
        r if r == ctx.p() - 1 => Ok(Sign::Minus),
        r => panic!(
            "modular sign ratio {r} is not +-1 mod {} — implementation bug",
            ctx.p()
        ),
    }
}

/// Sign of `σ_{i,j}` between `A_i` and `A_j` by inversion count. `g` is
/// required when either side is `A2`. The sign is invariant under swapping
/// `i` and `j`.
pub fn sigma_sign(ctx: &PrimeCtx, i: SeqKind, j: SeqKind, g: Option<u64>) -> Result<Sign> {
    let s = CenteredSeq::build(i, ctx, g)?;
    let t = CenteredSeq::build(j, ctx, g)?;
    Ok(permutation_between(&s, &t)?.sign())
}

//! The `(p-1)`-th root-of-unity Vandermonde product
//! `∏_{1<=i<j<=n} (ζ^{2j} - ζ^{2i})` with `ζ = e^{2πi/(p-1)}`, evaluated in
//! exact-argument polar form, its closed form `n^{n/2}·e^{(3n²-n-2)πi/4}`,
//! and the Dirichlet-character matrices whose determinants the product
//! controls.
//!
//! Arguments are tracked as exact rationals times π (denominators divide
//! `2(p-1)`), so argument equalities need no tolerance; only magnitudes go
//! through floating logs, and only the determinant oracle uses complex
//! floating arithmetic at all.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::PrimeCtx;
use crate::check::CheckResult;
use crate::identities::theorem12_sign_5mod8;
use crate::invariants::QuadInvariants;
use crate::perm::{sigma_sign, SeqKind, Sign};
use crate::{Error, Result};

/// Default size cap for the complex floating determinant. Beyond this the
/// magnitude `n^{n/2}` outgrows double precision long before `n` reaches
/// the cap's square.
pub const DEFAULT_DET_BOUND: usize = 100;

fn reduce_mod_two(r: BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let q = (&r / &two).floor();
    r - q * two
}

/// A nonzero complex number as `log|z|` plus `Arg(z)/π` kept as an exact
/// rational in `[0, 2)`. Multiplication is exact in the argument.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarExact {
    log_mag: f64,
    arg_over_pi: BigRational,
}

impl PolarExact {
    pub fn new(log_mag: f64, arg_over_pi: BigRational) -> Self {
        PolarExact {
            log_mag,
            arg_over_pi: reduce_mod_two(arg_over_pi),
        }
    }

    pub fn one() -> Self {
        PolarExact {
            log_mag: 0.0,
            arg_over_pi: BigRational::zero(),
        }
    }

    pub fn log_mag(&self) -> f64 {
        self.log_mag
    }

    /// The argument divided by π, reduced into `[0, 2)`.
    pub fn arg_over_pi(&self) -> &BigRational {
        &self.arg_over_pi
    }

    pub fn mul(&self, rhs: &PolarExact) -> PolarExact {
        PolarExact::new(
            self.log_mag + rhs.log_mag,
            &self.arg_over_pi + &rhs.arg_over_pi,
        )
    }

    /// `+1`/`-1` when the argument is exactly `0` or `π`; `None` otherwise.
    pub fn real_sign(&self) -> Option<i32> {
        if self.arg_over_pi.is_zero() {
            Some(1)
        } else if self.arg_over_pi.is_one() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let theta = self.arg_over_pi.to_f64().expect("argument is in [0, 2)") * PI;
        Complex64::from_polar(self.log_mag.exp(), theta)
    }
}

/// Evaluates `∏_{1<=i<j<=n}(ζ^{2j} - ζ^{2i})` in exact polar form. Each
/// factor is `ζ^{i+j}·2i·sin(π(j-i)/n)`, so it contributes
/// `log(2 sin(π(j-i)/n))` to the log-magnitude and `(i+j)/n + 1/2` to the
/// argument over π; the argument is accumulated exactly over the common
/// denominator `4n`. The log-magnitude sums `O(n²)` double-precision sin
/// logs, an accumulated error on the `n²·ulp` scale.
pub fn vandermonde_product_polar(ctx: &PrimeCtx) -> Result<PolarExact> {
    let p = ctx.p();
    if p <= 3 {
        return Err(Error::PrimeTooSmall { p, min: 5 });
    }
    let n = ctx.n();
    let nf = n as f64;
    let log2sin: Vec<f64> = (0..n)
        .map(|d| {
            if d == 0 {
                0.0
            } else {
                (2.0 * (PI * d as f64 / nf).sin()).ln()
            }
        })
        .collect();
    let modulus = 8 * n;
    let mut log_mag = 0.0f64;
    let mut arg_num = 0u64; // in units of 1/(4n), mod 8n
    for i in 1..=n {
        for j in (i + 1)..=n {
            log_mag += log2sin[(j - i) as usize];
            arg_num = (arg_num + 4 * (i + j) + 2 * n) % modulus;
        }
    }
    Ok(PolarExact::new(
        log_mag,
        BigRational::new(BigInt::from(arg_num), BigInt::from(4 * n)),
    ))
}

/// The closed form of the Vandermonde product plus, for `p = 5 mod 8`, its
/// exact integer value `n^{n/2}·(-1)^{(n-2)/4}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormProduct {
    pub polar: PolarExact,
    pub exact_integer: Option<BigInt>,
}

/// `n^{n/2}·e^{(3n²-n-2)πi/4}` as log-magnitude `(n/2)·ln n` and exact
/// argument `(3n²-n-2)/4 mod 2`.
pub fn lemma24_closed_form(ctx: &PrimeCtx) -> Result<ClosedFormProduct> {
    let p = ctx.p();
    if p <= 3 {
        return Err(Error::PrimeTooSmall { p, min: 5 });
    }
    let n = ctx.n();
    let nf = n as f64;
    let log_mag = nf / 2.0 * nf.ln();
    let arg_num = 3 * (n as u128) * (n as u128) - n as u128 - 2;
    let polar = PolarExact::new(
        log_mag,
        BigRational::new(BigInt::from(arg_num), BigInt::from(4)),
    );
    let exact_integer = if ctx.cls8() == 5 {
        assert_eq!((n - 2) % 4, 0, "n = 2 mod 4 exactly when p = 5 mod 8");
        let mag = BigInt::from(n).pow((n / 2) as u32);
        Some(if (n - 2) / 4 % 2 == 1 { -mag } else { mag })
    } else {
        None
    };
    Ok(ClosedFormProduct {
        polar,
        exact_integer,
    })
}

/// Which character matrix to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// `M_p`: entry `(r, c)` is `χ^r(c²)`, i.e. `ζ^(r·ind_g(c²))`.
    M,
    /// `N_{p,g}`: entry `(r, c)` is `χ^r(g^{2c})`, i.e. `ζ^(2rc)`.
    N,
}

/// An `n × n` matrix of `(p-1)`-th roots of unity stored as exponents of
/// `ζ = e^{2πi/(p-1)}`, with the generating character fixed by `χ(g) = ζ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharMatrix {
    which: MatrixKind,
    p: u64,
    g: u64,
    n: usize,
    exps: Vec<u64>,
}

impl CharMatrix {
    pub fn which(&self) -> MatrixKind {
        self.which
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exponent of `ζ` at 1-based row `r`, column `c`.
    pub fn entry_exp(&self, r: usize, c: usize) -> u64 {
        self.exps[(r - 1) * self.n + (c - 1)]
    }
}

/// Builds `M_p` or `N_{p,g}` as an exponent table; discrete logs come from
/// one `O(p)` pass over the powers of `g`.
pub fn build_char_matrix(ctx: &PrimeCtx, which: MatrixKind, g: u64) -> Result<CharMatrix> {
    let p = ctx.p();
    if p < 5 {
        return Err(Error::PrimeTooSmall { p, min: 5 });
    }
    if !ctx.is_primitive_root(g) {
        return Err(Error::NotPrimitiveRoot { g, p });
    }
    let n = ctx.n_usize();
    let m = p - 1;
    let mut exps = Vec::with_capacity(n * n);
    match which {
        MatrixKind::N => {
            for r in 1..=n as u64 {
                for c in 1..=n as u64 {
                    exps.push(2 * r * c % m);
                }
            }
        }
        MatrixKind::M => {
            let mut ind = vec![0u64; p as usize];
            let mut pow = 1u64;
            for e in 0..m {
                ind[pow as usize] = e;
                pow = ctx.mul_mod(pow, g);
            }
            for r in 1..=n as u64 {
                for c in 1..=n as u64 {
                    let csq = ctx.mul_mod(c, c);
                    exps.push(r * ind[csq as usize] % m);
                }
            }
        }
    }
    Ok(CharMatrix {
        which,
        p,
        g: g % p,
        n,
        exps,
    })
}

/// Determinant by complex LU with partial pivoting, for `n` up to `bound`.
/// Expected error is on the order of `n³·ulp·|det|`.
pub fn det_complex_bounded(mat: &CharMatrix, bound: usize) -> Result<Complex64> {
    let n = mat.n;
    if n > bound {
        return Err(Error::MatrixTooLarge { n, bound });
    }
    let order = mat.p - 1;
    let roots: Vec<Complex64> = (0..order)
        .map(|t| Complex64::from_polar(1.0, 2.0 * PI * t as f64 / order as f64))
        .collect();
    let mut a: Vec<Complex64> = mat.exps.iter().map(|&e| roots[e as usize]).collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| {
                a[r1 * n + col]
                    .norm_sqr()
                    .partial_cmp(&a[r2 * n + col].norm_sqr())
                    .expect("entries are finite")
            })
            .expect("nonempty range");
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            det = -det;
        }
        let pivot = a[col * n + col];
        if pivot.norm_sqr() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        det *= pivot;
        for row in (col + 1)..n {
            let factor = a[row * n + col] / pivot;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for k in (col + 1)..n {
                let sub = factor * a[col * n + k];
                a[row * n + k] -= sub;
            }
        }
    }
    Ok(det)
}

/// [`det_complex_bounded`] with the default bound.
pub fn det_complex(mat: &CharMatrix) -> Result<Complex64> {
    det_complex_bounded(mat, DEFAULT_DET_BOUND)
}

/// The exact integer `det(M_p)` for `p = 5 mod 8`:
/// `n^{n/2}·(-1)^{(n+2)/4}` times the sign of `σ_{0,2}` in its `g`-free
/// form.
pub fn corollary_det_formula(ctx: &PrimeCtx, inv: &QuadInvariants) -> Result<BigInt> {
    if ctx.cls8() != 5 {
        return Err(Error::WrongResidueClass {
            p: ctx.p(),
            expected: 5,
            modulus: 8,
        });
    }
    let n = ctx.n();
    assert_eq!((n + 2) % 4, 0, "n = 2 mod 4 exactly when p = 5 mod 8");
    let sigma = theorem12_sign_5mod8(ctx, inv)?;
    let mut value = BigInt::from(n).pow((n / 2) as u32);
    if (n + 2) / 4 % 2 == 1 {
        value = -value;
    }
    if sigma == Sign::Minus {
        value = -value;
    }
    Ok(value)
}

/// Verifies the two determinant relations numerically:
/// `det(N) = -∏(ζ^{2j} - ζ^{2i})` and `det(M) = sgn(σ_{0,2})·det(N)`,
/// within the given relative tolerance.
pub fn remark21_check(ctx: &PrimeCtx, g: u64, rel_tol: f64) -> Result<CheckResult> {
    let p = ctx.p();
    let polar = vandermonde_product_polar(ctx)?.to_complex();
    let det_n = det_complex(&build_char_matrix(ctx, MatrixKind::N, g)?)?;
    let det_m = det_complex(&build_char_matrix(ctx, MatrixKind::M, g)?)?;
    let sigma = sigma_sign(ctx, SeqKind::A0, SeqKind::A2, Some(g))?;
    let product_err = (det_n + polar).norm() / polar.norm();
    let sigma_err = (det_m - det_n * sigma.as_i32() as f64).norm() / det_n.norm();
    let pass = product_err <= rel_tol && sigma_err <= rel_tol;
    let mut result = CheckResult {
        claim: "remark2.1",
        p,
        lhs: format!("det(N)={det_n:.6e}; det(M)={det_m:.6e}"),
        rhs: format!(
            "-prod={:.6e}; sgn*det(N)={:.6e}",
            -polar,
            det_n * sigma.as_i32() as f64
        ),
        pass,
        witness: Some(format!("g={g}")),
    };
    if !pass {
        result = result.with_witness(format!(
            "g={g}; rel errors: det(N) vs -product {product_err:.3e}, det(M) vs sign*det(N) {sigma_err:.3e}"
        ));
    }
    Ok(result)
}

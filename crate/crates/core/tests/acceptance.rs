//! Acceptance suite: exhaustive desk-scale verification of every sign
//! formula, congruence, and determinant relation, plus the cross-oracle
//! properties. One test per criterion; each prints a `PASS` line (visible
//! with `cargo test --test acceptance -- --nocapture`). The CLI contract
//! criterion lives in the CLI crate's own acceptance test.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

use qrperm::cyclotomic::{
    build_char_matrix, corollary_det_formula, det_complex, lemma24_closed_form,
    vandermonde_product_polar, MatrixKind,
};
use qrperm::identities::{
    char_sum_complete, chowla_check, cyclotomic_split_check, lemma21_check, mordell_check,
    pair_counts, r_k_identity_check, sun_3mod4_sign, theorem11_sign, theorem12_sign,
    theorem12_sign_5mod8, williams_currie_check, zolotarev_sign,
};
use qrperm::invariants::{class_number_imag, class_number_real, fundamental_unit, r_star};
use qrperm::perm::{sigma_sign, CenteredSeq, SeqKind};
use qrperm::{primes_up_to, PrimeCtx, QuadInvariants};

fn odd_primes(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    primes_up_to(hi)
        .into_iter()
        .filter(move |&p| p >= lo.max(3))
}

#[test]
fn criterion_01_sigma01_sign_formula() {
    let mut checked = 0u64;
    for p in odd_primes(5, 2000).filter(|p| p % 4 == 1) {
        let ctx = PrimeCtx::new(p).unwrap();
        let inv = QuadInvariants::compute(&ctx).unwrap();
        let formula = theorem11_sign(&ctx, &inv).unwrap();
        let perm = sigma_sign(&ctx, SeqKind::A0, SeqKind::A1, None).unwrap();
        assert_eq!(formula, perm, "criterion 1 counterexample at p = {p}");
        checked += 1;
    }
    assert!(checked >= 140, "expected ~150 primes, saw {checked}");
    println!("PASS criterion 1: sigma_01 sign formula, p = 1 mod 4, 5..=2000 ({checked} primes)");
}

#[test]
fn criterion_02_sigma02_sign_formula_all_roots() {
    let mut checked = 0u64;
    for p in odd_primes(5, 2000).filter(|p| p % 4 == 1) {
        let ctx = PrimeCtx::new(p).unwrap();
        let inv = QuadInvariants::compute(&ctx).unwrap();
        let roots = if p <= 1000 {
            ctx.all_primitive_roots()
        } else {
            vec![ctx.smallest_primitive_root()]
        };
        for g in roots {
            let formula = theorem12_sign(&ctx, &inv, g).unwrap();
            let perm = sigma_sign(&ctx, SeqKind::A0, SeqKind::A2, Some(g)).unwrap();
            assert_eq!(
                formula, perm,
                "criterion 2 counterexample at p = {p}, g = {g}"
            );
            checked += 1;
        }
    }
    println!("PASS criterion 2: sigma_02 sign formula, all roots to 1000, smallest to 2000 ({checked} pairs)");
}

#[test]
fn criterion_03_sigma02_g_free_form() {
    let mut checked = 0u64;
    for p in odd_primes(5, 1000).filter(|p| p % 8 == 5) {
        let ctx = PrimeCtx::new(p).unwrap();
        let inv = QuadInvariants::compute(&ctx).unwrap();
        let special = theorem12_sign_5mod8(&ctx, &inv).unwrap();
        for g in ctx.all_primitive_roots() {
            let general = theorem12_sign(&ctx, &inv, g).unwrap();
            assert_eq!(
                special, general,
                "criterion 3 counterexample at p = {p}, g = {g}"
            );
            checked += 1;
        }
    }
    println!("PASS criterion 3: g-free sigma_02 form is g-independent, p = 5 mod 8 to 1000 ({checked} pairs)");
}

#[test]
fn criterion_04_sigma01_sign_3_mod_4() {
    let mut checked = 0u64;
    for p in odd_primes(3, 2000).filter(|p| p % 4 == 3) {
        let ctx = PrimeCtx::new(p).unwrap();
        let h = class_number_imag(-(p as i64)).unwrap();
        let formula = sun_3mod4_sign(&ctx, h).unwrap();
        let perm = sigma_sign(&ctx, SeqKind::A0, SeqKind::A1, None).unwrap();
        assert_eq!(formula, perm, "criterion 4 counterexample at p = {p}");
        checked += 1;
    }
    println!("PASS criterion 4: sigma_01 sign, p = 3 mod 4, 3..=2000 ({checked} primes)");
}

#[test]
fn criterion_05_factorial_congruences() {
    let mut checked = 0u64;
    for p in odd_primes(3, 5000) {
        let ctx = PrimeCtx::new(p).unwrap();
        let l21 = lemma21_check(&ctx);
        assert!(l21.pass, "lemma 2.1 fails at p = {p}: {l21:?}");
        checked += 1;
        if p % 4 == 1 {
            let unit = fundamental_unit(&ctx).unwrap();
            let h = class_number_real(&ctx).unwrap();
            let l22 = chowla_check(&ctx, &unit, h);
            assert!(l22.pass, "lemma 2.2 fails at p = {p}: {l22:?}");
            let hi = class_number_imag(-4 * p as i64).unwrap();
            let l23 = williams_currie_check(&ctx, hi);
            assert!(l23.pass, "lemma 2.3 fails at p = {p}: {l23:?}");
            checked += 2;
        } else if p > 3 {
            let h = class_number_imag(-(p as i64)).unwrap();
            let m = mordell_check(&ctx, h).unwrap();
            assert!(m.pass, "Mordell fails at p = {p}: {m:?}");
            checked += 1;
        }
    }
    println!("PASS criterion 5: lemmas 2.1-2.3 and Mordell congruences to 5000 ({checked} checks)");
}

#[test]
fn criterion_06_vandermonde_closed_form() {
    let mut checked = 0u64;
    for p in odd_primes(5, 2000) {
        let ctx = PrimeCtx::new(p).unwrap();
        let n = ctx.n();
        let product = vandermonde_product_polar(&ctx).unwrap();
        let closed = lemma24_closed_form(&ctx).unwrap();
        assert_eq!(
            product.arg_over_pi(),
            closed.polar.arg_over_pi(),
            "criterion 6 exact argument fails at p = {p}"
        );
        let rel = (product.log_mag() - closed.polar.log_mag()).abs() / closed.polar.log_mag();
        assert!(
            rel <= 1e-9,
            "criterion 6 log-magnitude fails at p = {p}: rel = {rel}"
        );
        if p % 8 == 5 {
            let exact = closed
                .exact_integer
                .expect("p = 5 mod 8 has an integer value");
            let sign = product.real_sign().expect("argument must be 0 or pi");
            assert_eq!(
                BigInt::from(sign) * exact.abs(),
                exact,
                "criterion 6 integer sign fails at p = {p}"
            );
            assert_eq!(exact.abs(), BigInt::from(n).pow((n / 2) as u32), "p = {p}");
            if p == 13 {
                assert_eq!(exact, BigInt::from(-216), "p = 13 value pinned");
            }
        }
        checked += 1;
    }
    println!("PASS criterion 6: Vandermonde product closed form to 2000 ({checked} primes)");
}

#[test]
fn criterion_07_character_matrix_determinant() {
    let mut float_checked = 0u64;
    let mut exact_checked = 0u64;
    for p in odd_primes(5, 2000).filter(|p| p % 8 == 5) {
        let ctx = PrimeCtx::new(p).unwrap();
        let n = ctx.n();
        let inv = QuadInvariants::compute(&ctx).unwrap();
        let formula = corollary_det_formula(&ctx, &inv).unwrap();

        if n <= 100 {
            let g = ctx.smallest_primitive_root();
            let det = det_complex(&build_char_matrix(&ctx, MatrixKind::M, g).unwrap()).unwrap();
            let f = formula.to_f64().unwrap();
            let rel = (det - Complex64::new(f, 0.0)).norm() / f.abs();
            assert!(rel <= 1e-6, "criterion 7 det fails at p = {p}: rel = {rel}");
            float_checked += 1;
        }

        // remark-relation path: det(M) = sgn(sigma_02) * det(N) = -sgn * product
        let sigma = sigma_sign(
            &ctx,
            SeqKind::A0,
            SeqKind::A2,
            Some(ctx.smallest_primitive_root()),
        )
        .unwrap();
        let product = vandermonde_product_polar(&ctx).unwrap();
        let product_sign = product.real_sign().expect("argument must be 0 or pi");
        let formula_sign = if formula.is_negative() { -1 } else { 1 };
        assert_eq!(
            formula_sign,
            -sigma.as_i32() * product_sign,
            "criterion 7 sign relation fails at p = {p}"
        );
        let log_formula = n as f64 / 2.0 * (n as f64).ln();
        let rel = (product.log_mag() - log_formula).abs() / log_formula;
        assert!(
            rel <= 1e-9,
            "criterion 7 log-magnitude fails at p = {p}: rel = {rel}"
        );
        exact_checked += 1;
    }
    println!("PASS criterion 7: det(M_p) corollary, float to p = 197 ({float_checked}), exact to 2000 ({exact_checked})");
}

// The reflection-based pair-count identities rest on (-1|p) = +1 and so
// hold exactly for p = 1 mod 4 (at p = 7, k = 1 the counts are already
// apm = 2, amp = 1). The partition identities and the complete character
// sum are unconditional and are checked for every p.
#[test]
fn criterion_08_proof_identity_suite() {
    let mut checked = 0u64;
    for p in odd_primes(3, 500) {
        let ctx = PrimeCtx::new(p).unwrap();
        let one_mod_4 = p % 4 == 1;
        let mut app_sum = 0u64;
        for k in 1..p {
            let pc = pair_counts(&ctx, k);
            assert_eq!(
                pc.app + pc.apm + pc.amp + pc.amm,
                p - 1 - k,
                "partition fails at p = {p}, k = {k}"
            );
            assert_eq!(
                pc.app + pc.apm,
                pc.r_k,
                "r_k split fails at p = {p}, k = {k}"
            );
            assert_eq!(
                char_sum_complete(&ctx, k),
                -1,
                "character sum fails at p = {p}, k = {k}"
            );
            if one_mod_4 {
                assert_eq!(pc.apm, pc.amp, "reflection fails at p = {p}, k = {k}");
                let rk = r_k_identity_check(&ctx, k);
                assert!(rk.pass, "r_k identity fails at p = {p}, k = {k}: {rk:?}");
                let complement = pair_counts(&ctx, p - k);
                let expected = (p as i64 - 3 - 2 * ctx.legendre(k as i64) as i64) / 4;
                assert_eq!(
                    (pc.app + complement.app) as i64,
                    expected,
                    "A_k + A_(p-k) fails at p = {p}, k = {k}"
                );
                if k > ctx.n() {
                    app_sum += pc.app;
                }
            }
            checked += 1;
        }
        if one_mod_4 {
            assert_eq!(app_sum, r_star(&ctx), "sum of A_(p-k) fails at p = {p}");
        }
    }
    println!("PASS criterion 8: proof identity suite to 500 ({checked} (p, k) pairs)");
}

#[test]
fn criterion_09_modular_ratio_cross_oracle() {
    let kinds = [SeqKind::A0, SeqKind::A1, SeqKind::A2];
    let mut checked = 0u64;
    for p in odd_primes(3, 500) {
        let ctx = PrimeCtx::new(p).unwrap();
        let g = ctx.smallest_primitive_root();
        for i in kinds {
            for j in kinds {
                if i == j {
                    continue;
                }
                let s = CenteredSeq::build(i, &ctx, Some(g)).unwrap();
                let t = CenteredSeq::build(j, &ctx, Some(g)).unwrap();
                let by_inversions = qrperm::perm::permutation_between(&s, &t).unwrap().sign();
                let by_ratio = qrperm::perm::sign_by_modular_ratio(&s, &t).unwrap();
                assert_eq!(
                    by_inversions, by_ratio,
                    "criterion 9 fails at p = {p}, {i} vs {j}"
                );
                checked += 1;
            }
        }
    }
    println!("PASS criterion 9: inversion count vs modular ratio to 500 ({checked} pairs)");
}

#[test]
fn criterion_10_zolotarev() {
    let mut checked = 0u64;
    for p in odd_primes(3, 300) {
        let ctx = PrimeCtx::new(p).unwrap();
        for a in 1..p {
            let r = zolotarev_sign(&ctx, a).unwrap();
            assert!(r.pass, "criterion 10 fails at p = {p}, a = {a}: {r:?}");
            checked += 1;
        }
    }
    println!("PASS criterion 10: Zolotarev sign for all units to 300 ({checked} maps)");
}

#[test]
fn criterion_11_cyclotomic_splitting() {
    let mut checked = 0u64;
    for p in odd_primes(3, 1000) {
        let ctx = PrimeCtx::new(p).unwrap();
        let g = ctx.smallest_primitive_root();
        let r = cyclotomic_split_check(&ctx, g).unwrap();
        assert!(r.pass, "criterion 11 fails at p = {p}: {r:?}");
        checked += 1;
    }
    println!("PASS criterion 11: cyclotomic splitting mod p to 1000 ({checked} primes)");
}

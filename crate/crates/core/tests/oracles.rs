//! Library output against independent computations done here, plus values
//! frozen from those computations.

use anomaly_core::genera::{a_hat, ch_tangent, ch_tensor_square, classical_l, l_hat, PowerSumBridge};
use anomaly_core::graded::GradedClass;
use anomaly_core::manifolds::{bott8, catalog, hpn, k3, Evaluator, Functional};
use anomaly_core::modular::{modular_form, theta_null, theta_prime_null, FormName, Prefactor, ThetaIndex};
use anomaly_core::rational::{frac, int, Rational};
use anomaly_core::series::Series;
use num_traits::{One, Zero};

fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

/// Polynomial product truncated to `len` coefficients.
fn poly_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(a: &[Rational], n: u32, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    out[0] = Rational::one();
    for _ in 0..n {
        out = poly_mul(&out, a, len);
    }
    out
}

mod theta_sums {
    use super::*;

    /// In `s = q^{1/2}`: `Σ s^{n²}`, `Σ (-1)^n s^{n²}`, `Σ_{n>=0} s^{n(n+1)}`.
    pub fn sums(len: usize) -> [Vec<Rational>; 3] {
        let mut t3 = vec![Rational::zero(); len];
        let mut t2 = vec![Rational::zero(); len];
        let mut t1 = vec![Rational::zero(); len];
        for n in -(len as i64)..=(len as i64) {
            let e = (n * n) as usize;
            if e < len {
                t3[e] += int(1);
                t2[e] += int(if n % 2 == 0 { 1 } else { -1 });
            }
        }
        for n in 0..len as i64 {
            let e = (n * (n + 1)) as usize;
            if e < len {
                t1[e] += int(1);
            }
        }
        [t1, t2, t3]
    }

    /// `Σ (-1)^n (2n+1) s^{n(n+1)}`.
    pub fn eta_cubed(len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for n in 0..len as i64 {
            let e = (n * (n + 1)) as usize;
            if e < len {
                out[e] += int(if n % 2 == 0 { 2 * n + 1 } else { -(2 * n + 1) });
            }
        }
        out
    }
}

#[test]
fn theta_nulls_match_lattice_sums() {
    let len = 41;
    let [t1, t2, t3] = theta_sums::sums(len);
    let one = theta_null(ThetaIndex::One, len - 1);
    assert_eq!(one.prefactor, Prefactor { pow2: 1, pow_q8: 1, pow_pi: 0 });
    assert_eq!(one.series.coeffs(), &t1[..]);
    assert_eq!(theta_null(ThetaIndex::Two, len - 1).series.coeffs(), &t2[..]);
    assert_eq!(theta_null(ThetaIndex::Three, len - 1).series.coeffs(), &t3[..]);
    assert_eq!(theta_prime_null(len - 1).series.coeffs(), &theta_sums::eta_cubed(len)[..]);
}

#[test]
fn jacobi_identity_from_lattice_sums() {
    let len = 41;
    let [t1, t2, t3] = theta_sums::sums(len);
    let product = poly_mul(&poly_mul(&t1, &t2, len), &t3, len);
    assert_eq!(product, theta_sums::eta_cubed(len));
}

fn forms_from_sums(len: usize) -> [Vec<Rational>; 4] {
    let [t1, t2, t3] = theta_sums::sums(len);
    let (t2_4, t3_4) = (poly_pow(&t2, 4, len), poly_pow(&t3, 4, len));
    // θ₁⁴ = 16 s (Σ s^{n(n+1)})⁴
    let mut t1_4 = vec![Rational::zero(); len];
    for (i, c) in poly_pow(&t1, 4, len).into_iter().enumerate().take(len - 1) {
        t1_4[i + 1] = c * int(16);
    }
    let eighth = frac(1, 8);
    let sixteenth = frac(1, 16);
    let delta1 = t2_4.iter().zip(&t3_4).map(|(a, b)| (a + b) * &eighth).collect();
    let eps1 = poly_mul(&t2_4, &t3_4, len).into_iter().map(|c| c * &sixteenth).collect();
    let delta2 = t1_4.iter().zip(&t3_4).map(|(a, b)| -(a + b) * &eighth).collect();
    let eps2 = poly_mul(&t1_4, &t3_4, len).into_iter().map(|c| c * &sixteenth).collect();
    [delta1, eps1, delta2, eps2]
}

#[test]
fn modular_forms_match_lattice_sums() {
    let len = 41;
    for (name, expected) in FormName::ALL.into_iter().zip(forms_from_sums(len)) {
        assert_eq!(modular_form(name, len - 1).series.coeffs(), &expected[..], "{name}");
    }
}

#[test]
fn modular_forms_frozen_through_q6() {
    let frozen: [(FormName, Vec<Rational>); 4] = [
        (
            FormName::Delta1,
            [frac(1, 4)].into_iter().chain(ints(&[0, 6, 0, 6, 0, 24, 0, 6, 0, 36, 0, 24])).collect(),
        ),
        (
            FormName::Eps1,
            [frac(1, 16)]
                .into_iter()
                .chain(ints(&[0, -1, 0, 7, 0, -28, 0, 71, 0, -126, 0, 196]))
                .collect(),
        ),
        (
            FormName::Delta2,
            [frac(-1, 8)]
                .into_iter()
                .chain(ints(&[-3, -3, -12, -3, -18, -12, -24, -3, -39, -18, -36, -12]))
                .collect(),
        ),
        (
            FormName::Eps2,
            ints(&[0, 1, 8, 28, 64, 126, 224, 344, 512, 757, 1008, 1332, 1792]),
        ),
    ];
    for (name, values) in frozen {
        let form = modular_form(name, 12);
        assert_eq!(form.series.coeffs(), &values[..], "{name}");
        assert!(form.has_integral_tail());
    }
}

/// Coefficients of `f(y) = Σ a_r y^{2r}` through `y^{2 len - 2}`.
mod root_series {
    use super::*;

    fn factorial(n: u32) -> Rational {
        (1..=n).map(|i| int(i as i64)).product()
    }

    /// `sinh(z)/z` and `cosh(z)` in powers of `z²`.
    fn sinh_over(len: usize) -> Vec<Rational> {
        (0..len).map(|r| factorial(2 * r as u32 + 1).recip()).collect()
    }

    fn cosh(len: usize) -> Vec<Rational> {
        (0..len).map(|r| factorial(2 * r as u32).recip()).collect()
    }

    fn invert(a: &[Rational]) -> Vec<Rational> {
        let mut out = vec![a[0].recip()];
        for n in 1..a.len() {
            let acc: Rational = (1..=n).map(|i| &a[i] * &out[n - i]).sum();
            out.push(-acc * &out[0]);
        }
        out
    }

    /// Substitutes `z = y/2`.
    fn halve(a: Vec<Rational>) -> Vec<Rational> {
        a.into_iter().enumerate().map(|(r, c)| c * frac(1, 4i64.pow(r as u32))).collect()
    }

    /// `(y/2)/sinh(y/2)`.
    pub fn a_hat(len: usize) -> Vec<Rational> {
        halve(invert(&sinh_over(len)))
    }

    /// `(y/2)/tanh(y/2)`.
    pub fn l_hat(len: usize) -> Vec<Rational> {
        halve(poly_mul(&cosh(len), &invert(&sinh_over(len)), len))
    }

    /// `2 cosh(y)`.
    pub fn two_cosh(len: usize) -> Vec<Rational> {
        cosh(len).into_iter().map(|c| c * int(2)).collect()
    }
}

/// Elementary symmetric functions of `roots`, `e_0 = 1`.
fn elementary(roots: &[i64]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for &x in roots {
        let mut next = e.clone();
        next.push(Rational::zero());
        for i in 1..next.len() {
            next[i] += &e[i - 1] * int(x);
        }
        e = next;
    }
    e
}

/// Evaluates a class at `p_i = e_i(roots)` degree by degree: entry `d` is
/// the internal degree `2d` part.
fn evaluate(c: &GradedClass, roots: &[i64], len: usize) -> Vec<Rational> {
    let e = elementary(roots);
    let mut out = vec![Rational::zero(); len];
    for (m, coeff) in c.terms() {
        assert_eq!(m.euler_exponent(), 0);
        let mut value = coeff.clone();
        for (i, &exp) in m.pontryagin_exponents().iter().enumerate() {
            let p = e.get(i + 1).cloned().unwrap_or_else(Rational::zero);
            for _ in 0..exp {
                value *= &p;
            }
        }
        out[(m.degree() / 2) as usize] += value;
    }
    out
}

/// `Π_j f(c_j t)` truncated, where the roots squared are the `c_j`.
fn multiplicative(f: &[Rational], roots: &[i64], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    out[0] = Rational::one();
    for &c in roots {
        let scaled: Vec<Rational> = f.iter().enumerate().map(|(r, a)| a * int(c.pow(r as u32))).collect();
        out = poly_mul(&out, &scaled, len);
    }
    out
}

fn additive(f: &[Rational], roots: &[i64], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for &c in roots {
        for (r, a) in f.iter().enumerate().take(len) {
            out[r] += a * int(c.pow(r as u32));
        }
    }
    out
}

const ROOT_SETS: [&[i64]; 3] = [&[1, 2, 3, 4, 5, 6, 7, 8], &[3, -1, 4, -1, 5, -9, 2, 6], &[2, 0, 0, 7, -3, 1, 1, 0]];

#[test]
fn genera_match_chern_root_substitution() {
    for dim in [8, 12, 16] {
        let bridge = PowerSumBridge::for_dimension(dim, false);
        let m = bridge.roots() as usize;
        let len = (dim / 4 + 1) as usize;
        for roots in ROOT_SETS {
            let roots = &roots[..m];
            assert_eq!(
                evaluate(&a_hat(&bridge), roots, len),
                multiplicative(&root_series::a_hat(len), roots, len)
            );
            let l_expected: Vec<Rational> = multiplicative(&root_series::l_hat(len), roots, len)
                .into_iter()
                .map(|c| c * int(1 << m))
                .collect();
            assert_eq!(evaluate(&l_hat(&bridge), roots, len), l_expected);
            let ch = additive(&root_series::two_cosh(len), roots, len);
            assert_eq!(evaluate(&ch_tangent(&bridge), roots, len), ch);
            assert_eq!(evaluate(&ch_tensor_square(&bridge), roots, len), poly_mul(&ch, &ch, len));
        }
    }
}

#[test]
fn classical_l_top_matches_l_hat_top() {
    for dim in [4, 8, 12, 16, 20] {
        let bridge = PowerSumBridge::for_dimension(dim, false);
        let top = dim / 2;
        assert_eq!(
            l_hat(&bridge).component(top).unwrap(),
            classical_l(&bridge).component(top).unwrap()
        );
    }
}

#[test]
fn low_degree_genera_frozen() {
    let bridge = PowerSumBridge::for_dimension(8, false);
    let p = |i| GradedClass::pontryagin(bridge.ring(), i);
    let p1 = p(1);
    let a2 = (&p1 * &p1).scaled(&frac(7, 5760)) - p(2).scaled(&frac(4, 5760));
    assert_eq!(a_hat(&bridge).component(4).unwrap(), a2);
    assert_eq!(a_hat(&bridge).component(2).unwrap(), p1.scaled(&frac(-1, 24)));
    let l2 = p(2).scaled(&frac(7, 45)) - (&p1 * &p1).scaled(&frac(1, 45));
    assert_eq!(classical_l(&bridge).component(4).unwrap(), l2);
}

#[test]
fn quaternionic_projective_numbers_from_binomials() {
    // (1+u)^{2n+2}(1 - 4u + 16u^2 - ...) by hand
    let hp1 = hpn(1).unwrap();
    assert_eq!(hp1.pontryagin_number(&[1]), int(0));
    let hp2 = catalog("HP2").unwrap();
    assert_eq!((hp2.pontryagin_number(&[1, 1]), hp2.pontryagin_number(&[2])), (int(4), int(7)));
    // p1 = 8 - 4, p2 = 28 - 32 + 16, p3 = 56 - 112 + 128 - 64
    let hp3 = catalog("HP3").unwrap();
    assert_eq!(hp3.pontryagin_number(&[1, 1, 1]), int(64));
    assert_eq!(hp3.pontryagin_number(&[2, 1]), int(48));
    assert_eq!(hp3.pontryagin_number(&[3]), int(8));
}

#[test]
fn k3_and_bott8_solve_their_defining_equations() {
    // Sig = p1/3 in dimension 4
    assert_eq!(k3().unwrap().pontryagin_number(&[1]), int(-48));
    // L2 = 0 gives p1^2 = 7 p2, then Â2 = 45 p2 / 5760 = 1
    let b = bott8().unwrap();
    assert_eq!(b.pontryagin_number(&[1, 1]), int(896));
    assert_eq!(b.pontryagin_number(&[2]), int(128));
    let ev = Evaluator::new(8).unwrap();
    assert_eq!(ev.value(&b, Functional::Signature).unwrap(), int(0));
    assert_eq!(ev.value(&b, Functional::AHat).unwrap(), int(1));
}

#[test]
fn series_examples() {
    let eps2_head = Series::new(ints(&[0, 1, 8, 0, 0]));
    assert_eq!(eps2_head.mul(&eps2_head), Series::new(ints(&[0, 0, 1, 16, 64])));
}

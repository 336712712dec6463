//! Chebyshev reduction of the factor on the critical circle.
//!
//! Substituting `u = p^{-1/2} e^{-it}` turns `P_n(u)` into
//! `(e^{-int}/p)·Q_n(cos t)` with
//! `Q_n = p·U_n - √p(1+χ)·U_{n-1} + χ·U_{n-2}`, and `P*_n` into the same
//! shape with `Q*_n = p·U_n - χ√p·U_{n-1}`. Both families obey
//! `Q_k = 2x·Q_{k-1} - Q_{k-2}`.

use num_traits::Zero;

use super::{FactorKind, LocalFactorError, LocalFactorParams};
use crate::exactnum::{rat, QuadExt, Rational};
use crate::polyalg::Poly;

/// `U_m` for `m >= -2`, with `U_{-2} = -1` and `U_{-1} = 0`.
pub fn chebyshev_u(m: i64) -> Poly<Rational> {
    assert!(m >= -2, "U_m is only defined here for m >= -2");
    if m == -2 {
        return Poly::from_ints(&[-1]);
    }
    let two_x = Poly::from_ints(&[0, 2]);
    let mut prev = Poly::from_ints(&[-1]);
    let mut cur = Poly::zero();
    for _ in -1..m {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `(α, β, γ)` with `Q_k = α·U_k + β·U_{k-1} + γ·U_{k-2}`.
pub(crate) fn reduction_weights(kind: FactorKind, p: u64, chi: i8) -> [QuadExt; 3] {
    let q = |a: i64, b: i64| QuadExt::new_unchecked(rat(a), rat(b), p);
    let chi = i64::from(chi);
    match kind {
        FactorKind::Proper => [q(p as i64, 0), q(0, -(1 + chi)), q(chi, 0)],
        FactorKind::Star => [q(p as i64, 0), q(0, -chi), q(0, 0)],
    }
}

/// `Q_k` (or `Q*_k`) for any `k >= 0`, built directly from `U_k, U_{k-1}, U_{k-2}`.
pub fn reduced_poly(kind: FactorKind, p: u64, chi: i8, k: u32) -> Poly<QuadExt> {
    let w = reduction_weights(kind, p, chi);
    let k = i64::from(k);
    (0..3).fold(Poly::zero(), |acc, i| {
        acc.add(&chebyshev_u(k - i as i64).to_quad(p).scale(&w[i]))
    })
}

/// `Q_n` for the proper-ideal factor.
pub fn build_q(params: &LocalFactorParams) -> Poly<QuadExt> {
    reduced_poly(FactorKind::Proper, params.p(), params.chi(), params.n())
}

/// `Q*_n` for the all-ideal factor.
pub fn build_q_star(params: &LocalFactorParams) -> Poly<QuadExt> {
    reduced_poly(FactorKind::Star, params.p(), params.chi(), params.n())
}

/// `[Q_n, Q_{n-1}, ..., Q_0]` from the three-term recurrence, each element
/// checked against [`reduced_poly`].
pub fn build_q_chain(
    params: &LocalFactorParams,
    kind: FactorKind,
) -> Result<Vec<Poly<QuadExt>>, LocalFactorError> {
    let (p, chi, n) = (params.p(), params.chi(), params.n());
    let two_x = Poly::from_ints(&[0, 2]).to_quad(p);
    let mut chain = vec![reduced_poly(kind, p, chi, 0), reduced_poly(kind, p, chi, 1)];
    for k in 2..=n {
        let next = two_x
            .mul(&chain[k as usize - 1])
            .sub(&chain[k as usize - 2]);
        if next != reduced_poly(kind, p, chi, k) {
            return Err(LocalFactorError::ChainMismatch { index: k });
        }
        chain.push(next);
    }
    chain.truncate(n as usize + 1);
    chain.reverse();
    Ok(chain)
}

/// Classical Sturm chain `f, f', -rem(f, f'), ...` of an exact polynomial.
pub fn euclidean_sturm_chain(f: &Poly<QuadExt>) -> Vec<Poly<QuadExt>> {
    let mut chain = vec![f.clone()];
    let mut next = f.derivative();
    while !next.is_zero() {
        chain.push(next);
        let len = chain.len();
        let (_, r) = chain[len - 2]
            .div_rem(&chain[len - 1])
            .expect("nonzero divisor");
        next = r.neg();
    }
    chain
}

/// The two initial chain elements as `(Q_0, [c_0, c_1])` where `Q_1 = c_0 + c_1 x`.
pub(crate) fn chain_seed(kind: FactorKind, p: u64, chi: i8) -> (QuadExt, [QuadExt; 2]) {
    let q0 = reduced_poly(kind, p, chi, 0);
    let q1 = reduced_poly(kind, p, chi, 1);
    let zero = QuadExt::new_unchecked(Rational::zero(), Rational::zero(), p);
    let at = |f: &Poly<QuadExt>, k: usize| f.coeff(k).cloned().unwrap_or_else(|| zero.clone());
    (at(&q0, 0), [at(&q1, 0), at(&q1, 1)])
}

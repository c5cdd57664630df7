//! Truncated-series checks: tangent and secant as power series, the
//! derivative polynomials `P_n`, `Q_n`, the Eulerian generating function and
//! the binomial convolution of the `N_n(x)`.
//!
//! Quotients such as `(1-x)/(1 - x e^{t(1-x)})` are never formed. Each
//! identity is checked after multiplying through by its denominator, so the
//! coefficient ring stays `Q[x]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, pow2, scalar_series, TruncSeries, UniPoly};
use crate::triangle::{named_spec, Family};

/// `tan t` and `sec t` through `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TanSecPair {
    pub order: usize,
    pub tan: TruncSeries,
    pub sec: TruncSeries,
}

impl TanSecPair {
    pub fn sum(&self) -> TruncSeries {
        &self.tan + &self.sec
    }

    /// `n! [t^n] (tan + sec)`, which is the Euler number `E_n`.
    pub fn euler_number(&self, n: usize) -> BigInt {
        let c = self.tan.scalar(n) + self.sec.scalar(n);
        let e = c * BigRational::from_integer(factorial(n as u64));
        assert!(e.is_integer());
        e.to_integer()
    }

    /// `tan^2 + 1 = sec^2` through the stored order.
    pub fn pythagorean_holds(&self) -> bool {
        let tan2 = self.tan.mul(&self.tan).expect("same order");
        let sec2 = self.sec.mul(&self.sec).expect("same order");
        &tan2 + &TruncSeries::one(self.order) == sec2
    }

    /// `tan' = 1 + tan^2` and `sec' = tan sec` through order `K - 1`.
    pub fn ode_holds(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let lower = self.order - 1;
        let tan_prime = self.tan.derivative().expect("order >= 1");
        let sec_prime = self.sec.derivative().expect("order >= 1");
        let tan2 = self.tan.mul(&self.tan).expect("same order").truncate(lower);
        let tan_sec = self.tan.mul(&self.sec).expect("same order").truncate(lower);
        tan_prime == &tan2 + &TruncSeries::one(lower) && sec_prime == tan_sec
    }
}

/// Solves `tan' = 1 + tan^2`, `sec' = tan sec` with `tan 0 = 0`, `sec 0 = 1`
/// coefficient by coefficient.
pub fn tan_sec_series(order: usize) -> TanSecPair {
    let mut tan = vec![BigRational::zero(); order + 1];
    let mut sec = vec![BigRational::zero(); order + 1];
    sec[0] = BigRational::one();
    for n in 0..order {
        let mut tt = if n == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        let mut ts = BigRational::zero();
        for i in 0..=n {
            tt += &tan[i] * &tan[n - i];
            ts += &tan[i] * &sec[n - i];
        }
        let scale = BigRational::from_integer(BigInt::from(n + 1));
        tan[n + 1] = tt / &scale;
        sec[n + 1] = ts / &scale;
    }
    TanSecPair {
        order,
        tan: scalar_series(order, &tan),
        sec: scalar_series(order, &sec),
    }
}

/// `(P_n, Q_n)` with `P_0 = u`, `Q_0 = 1`, `P_{n+1} = (1+u^2) P_n'` and
/// `Q_{n+1} = (1+u^2) Q_n' + u Q_n`.
pub fn derivative_polys_pq(n: usize) -> (UniPoly, UniPoly) {
    let one_plus_u2 = UniPoly::from_ints(&[1, 0, 1]);
    let mut p = UniPoly::x();
    let mut q = UniPoly::one();
    for _ in 0..n {
        p = &one_plus_u2 * &p.derivative();
        q = &(&one_plus_u2 * &q.derivative()) + &q.shift(1);
    }
    (p, q)
}

/// `A(x,t) = 1 + Σ A_n(x) t^n/n!`, obtained from
/// `(1 - x e^{t(1-x)}) A(x,t) = 1 - x` by solving for one coefficient at a
/// time. Each step divides exactly by `1 - x`.
pub fn egf_a_closed(order: usize) -> TruncSeries {
    egf_a_scaled(order, 1)
}

/// Same recursion with `e^{λ t(1-x)}`; `λ = 2` gives `N(x,t)^2`.
fn egf_a_scaled(order: usize, lambda: i64) -> TruncSeries {
    let one_minus_x = UniPoly::from_ints(&[1, -1]);
    let exp = TruncSeries::exp_affine(&one_minus_x.scale_int(&BigInt::from(lambda)), order);
    let mut coeffs: Vec<UniPoly> = vec![UniPoly::one()];
    for n in 1..=order {
        // (1-x) a_n = x Σ_{i=1}^n e_i a_{n-i}
        let rhs = (1..=n).fold(UniPoly::zero(), |acc, i| {
            &acc + &(exp.coeff(i) * &coeffs[n - i])
        });
        let a_n = rhs
            .shift(1)
            .div_exact(&one_minus_x)
            .expect("denominator clears exactly");
        coeffs.push(a_n);
    }
    TruncSeries::new(order, coeffs)
}

/// Outcome of one identity at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub n: usize,
    pub holds: bool,
    pub detail: String,
}

/// `2^n D^n(E) = P_n(E)` for `E = tan + sec`, through order `K - n`, for
/// each `n ≤ n_max`.
pub fn check_prop1(n_max: usize, order: usize) -> Result<Vec<IdentityOutcome>> {
    let needed = n_max + 2;
    if order < needed {
        return Err(Error::InsufficientOrder {
            needed,
            have: order,
        });
    }
    let e = tan_sec_series(order).sum();
    let mut derivative = e.clone();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            derivative = derivative.derivative()?;
        }
        let lhs = derivative.scale(&UniPoly::constant(BigRational::from_integer(pow2(n))));
        let (p_n, _) = derivative_polys_pq(n);
        let rhs = e.compose_poly(&p_n).truncate(order - n);
        out.push(IdentityOutcome {
            n,
            holds: lhs == rhs,
            detail: format!("through t^{}", order - n),
        });
    }
    Ok(out)
}

/// `Σ_k C(n,k) N_k N_{n-k} = 2^n A_n` given `N_0..=N_n` and `A_n`.
pub fn thm6_holds(n_polys: &[UniPoly], a_n: &UniPoly) -> bool {
    let n = n_polys.len() - 1;
    let lhs = (0..=n).fold(UniPoly::zero(), |acc, k| {
        &acc + &(&n_polys[k] * &n_polys[n - k]).scale_int(&binomial(n as u64, k as u64))
    });
    lhs == a_n.scale_int(&pow2(n))
}

/// The binomial convolution identity for every `n ≤ n_max`, using the
/// registered `N` and `A` triangles.
pub fn check_thm6(n_max: usize) -> Vec<IdentityOutcome> {
    let n_rows: Vec<UniPoly> = named_spec(Family::N)
        .rows_through(n_max)
        .iter()
        .map(|r| r.to_poly())
        .collect();
    let a_rows = named_spec(Family::A).rows_through(n_max);
    (0..=n_max)
        .map(|n| IdentityOutcome {
            n,
            holds: thm6_holds(&n_rows[..=n], &a_rows[n].to_poly()),
            detail: "sum_k C(n,k) N_k N_{n-k} = 2^n A_n".into(),
        })
        .collect()
}

/// `(1 - x e^{2t(1-x)}) N(x,t)^2 = 1 - x` through `t^order`, where
/// `N(x,t) = Σ N_n(x) t^n/n!` is built from `n_polys[0..=order]`.
pub fn n_squared_identity_holds(n_polys: &[UniPoly], order: usize) -> bool {
    let n_series = TruncSeries::from_egf(order, n_polys[..=order].to_vec());
    let one_minus_x = UniPoly::from_ints(&[1, -1]);
    let exp = TruncSeries::exp_affine(&one_minus_x.scale_int(&BigInt::from(2)), order);
    let denominator = &TruncSeries::one(order) - &exp.scale(&UniPoly::x());
    let squared = n_series.mul(&n_series).expect("same order");
    denominator.mul(&squared).expect("same order") == TruncSeries::constant(order, one_minus_x)
}

/// `N(x,t)^2` by the cleared-denominator recursion, for comparison with the
/// square of the `N` series.
pub fn n_squared_closed(order: usize) -> TruncSeries {
    egf_a_scaled(order, 2)
}

//! Differential operators `Σ_k c_k(x) D^k` and the normal ordering of
//! `((x+x^2)D)^n` in the basis `(x+x^2)^k D^k`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{rat, UniPoly};

/// `Σ_k coeffs[k](x) D^k`, top coefficient nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOpPoly {
    coeffs: Vec<UniPoly>,
}

fn x_plus_x2() -> UniPoly {
    UniPoly::from_ints(&[0, 1, 1])
}

fn one_plus_2x() -> UniPoly {
    UniPoly::from_ints(&[1, 2])
}

impl DiffOpPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn identity() -> Self {
        Self::new(vec![UniPoly::one()])
    }

    /// `c(x) D^k`.
    pub fn term(c: UniPoly, k: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The operator `(x+x^2) D`.
    pub fn xxd() -> Self {
        Self::term(x_plus_x2(), 1)
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> UniPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    /// `Σ_k c_k(x) p^(k)(x)`.
    pub fn apply(&self, p: &UniPoly) -> UniPoly {
        let mut derivative = p.clone();
        let mut out = UniPoly::zero();
        for c in &self.coeffs {
            out = &out + &(c * &derivative);
            derivative = derivative.derivative();
        }
        out
    }
}

/// `(x+x^2) D ∘ op`: by the product rule,
/// `(x+x^2) D (c D^k) = (x+x^2) c' D^k + (x+x^2) c D^(k+1)`.
pub fn left_compose_xxd(op: &DiffOpPoly) -> DiffOpPoly {
    let g = x_plus_x2();
    let mut coeffs = vec![UniPoly::zero(); op.coeffs.len() + 1];
    for (k, c) in op.coeffs.iter().enumerate() {
        coeffs[k] = &coeffs[k] + &(&g * &c.derivative());
        coeffs[k + 1] = &coeffs[k + 1] + &(&g * c);
    }
    DiffOpPoly::new(coeffs)
}

/// `op ∘ (x+x^2) D`, using
/// `D^k ((x+x^2) D) = (x+x^2) D^(k+1) + k(1+2x) D^k + k(k-1) D^(k-1)`.
pub fn right_compose_xxd(op: &DiffOpPoly) -> DiffOpPoly {
    let mut out = DiffOpPoly::default();
    for (k, c) in op.coeffs.iter().enumerate() {
        out = out.add(&dk_times_xxd(k).scale_left(c));
    }
    out
}

/// The operator `D^k ∘ (x+x^2) D` in normal order.
pub fn dk_times_xxd(k: usize) -> DiffOpPoly {
    let ki = k as i64;
    let mut coeffs = vec![UniPoly::zero(); k + 2];
    coeffs[k + 1] = x_plus_x2();
    coeffs[k] = one_plus_2x().scale(&rat(ki));
    if k >= 1 {
        coeffs[k - 1] = UniPoly::constant(rat(ki * (ki - 1)));
    }
    DiffOpPoly::new(coeffs)
}

impl DiffOpPoly {
    /// `c(x) ∘ self`.
    pub fn scale_left(&self, c: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| c * a).collect())
    }
}

/// `((x+x^2) D)^n` in normal order, by repeated left composition.
pub fn xxd_power(n: usize) -> DiffOpPoly {
    (0..n).fold(DiffOpPoly::identity(), |op, _| left_compose_xxd(&op))
}

/// Reads `G_{n,1..=n}` off a normally ordered operator by dividing each
/// `D^k` coefficient by `(x+x^2)^k`. A nonzero remainder or a nonzero `D^0`
/// coefficient means the operator is not in the basis.
pub fn basis_coefficients(op: &DiffOpPoly) -> Result<Vec<UniPoly>> {
    if !op.coeff(0).is_zero() {
        return Err(Error::NotInBasis(format!(
            "D^0 coefficient {}",
            op.coeff(0)
        )));
    }
    let g = x_plus_x2();
    let top = op.order().unwrap_or(0);
    let mut out = Vec::with_capacity(top);
    for k in (1..=top).rev() {
        let q = op
            .coeff(k)
            .div_exact(&g.pow(k as u32))
            .map_err(|e| Error::NotInBasis(format!("D^{k}: {e}")))?;
        out.push(q);
    }
    out.reverse();
    Ok(out)
}

/// `[G_{n,1}, ..., G_{n,n}]` with `((x+x^2)D)^n = Σ_k G_{n,k} (x+x^2)^k D^k`.
pub fn expand_xxd_power(n: usize) -> Result<Vec<UniPoly>> {
    basis_coefficients(&xxd_power(n))
}

/// Rebuilds `Σ_k G_k (x+x^2)^k D^k`.
pub fn from_basis(g: &[UniPoly]) -> DiffOpPoly {
    let base = x_plus_x2();
    let mut coeffs = vec![UniPoly::zero(); g.len() + 1];
    for (i, gk) in g.iter().enumerate() {
        let k = i + 1;
        coeffs[k] = gk * &base.pow(k as u32);
    }
    DiffOpPoly::new(coeffs)
}

/// `G_{n+1,k} = k(1+2x) G_{n,k} + (x+x^2) G_{n,k}' + G_{n,k-1}`, rows `1..=n`.
pub fn g_left_recurrence(n: usize) -> Vec<Vec<UniPoly>> {
    g_recurrence(n, |k, row| &x_plus_x2() * &get(row, k).derivative())
}

/// `G_{n+1,k} = k(1+2x) G_{n,k} + k(k+1)(x+x^2) G_{n,k+1} + G_{n,k-1}`.
pub fn g_right_recurrence(n: usize) -> Vec<Vec<UniPoly>> {
    g_recurrence(n, |k, row| {
        (&x_plus_x2() * &get(row, k + 1)).scale(&rat((k * (k + 1)) as i64))
    })
}

fn get(row: &[UniPoly], k: usize) -> UniPoly {
    k.checked_sub(1)
        .and_then(|i| row.get(i))
        .cloned()
        .unwrap_or_default()
}

fn g_recurrence(n: usize, middle: impl Fn(usize, &[UniPoly]) -> UniPoly) -> Vec<Vec<UniPoly>> {
    let mut rows = vec![vec![UniPoly::one()]];
    while rows.len() < n {
        let prev = rows.last().expect("nonempty");
        let next = (1..=prev.len() + 1)
            .map(|k| {
                let first = (&one_plus_2x() * &get(prev, k)).scale(&rat(k as i64));
                &(&first + &middle(k, prev)) + &get(prev, k - 1)
            })
            .collect();
        rows.push(next);
    }
    rows.truncate(n);
    rows
}

/// Integer coefficients of `G_{n,1}(x) = Σ_k G(n,k) x^(k-1)`.
pub fn g_triangle_row(g_n1: &UniPoly) -> Vec<BigInt> {
    g_n1.integer_coeffs().expect("integral coefficients")
}

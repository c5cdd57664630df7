use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Degree, UniPoly};
use crate::triangle::n_polys;

/// An endpoint of a root-counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl From<BigRational> for Bound {
    fn from(r: BigRational) -> Self {
        Bound::Finite(r)
    }
}

impl Bound {
    fn cmp_bound(&self, other: &Bound) -> Ordering {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => Ordering::Equal,
            (Bound::NegInf, _) | (_, Bound::PosInf) => Ordering::Less,
            (_, Bound::NegInf) | (Bound::PosInf, _) => Ordering::Greater,
            (Bound::Finite(a), Bound::Finite(b)) => a.cmp(b),
        }
    }
}

/// `p_0 = p`, `p_1 = p'`, `p_{i+1} = -rem(p_{i-1}, p_i)`, each member
/// reduced to its primitive integer part with the sign kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    members: Vec<UniPoly>,
    ints: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn members(&self) -> &[UniPoly] {
        &self.members
    }

    pub fn poly(&self) -> &UniPoly {
        &self.members[0]
    }

    /// The last member is, up to a constant, `gcd(p, p')`.
    pub fn is_squarefree(&self) -> bool {
        self.members.last().map(UniPoly::degree) == Some(Degree::Finite(0))
    }

    fn signs(&self, at: &Bound) -> Vec<i8> {
        match at {
            Bound::Finite(r) => {
                let top = self.ints.iter().map(Vec::len).max().unwrap_or(1);
                let mut den_pows = vec![BigInt::one()];
                for i in 1..top {
                    let next = &den_pows[i - 1] * r.denom();
                    den_pows.push(next);
                }
                self.ints
                    .iter()
                    .map(|c| int_sign_at(c, r.numer(), &den_pows))
                    .collect()
            }
            _ => self.members.iter().map(|m| sign_at(m, at)).collect(),
        }
    }

    fn sign_variations(&self, at: &Bound) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in self.signs(at) {
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Sign of `p(num/den)` from the integer `Σ c_i num^i den^(d-i)`, with
/// `den_pows[j] = den^j` and `den > 0`.
fn int_sign_at(coeffs: &[BigInt], num: &BigInt, den_pows: &[BigInt]) -> i8 {
    let Some((lead, rest)) = coeffs.split_last() else {
        return 0;
    };
    let mut h = lead.clone();
    for (j, c) in rest.iter().rev().enumerate() {
        h = h * num + c * &den_pows[j + 1];
    }
    match h.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

fn sign_at(p: &UniPoly, at: &Bound) -> i8 {
    let Some(lead) = p.leading() else { return 0 };
    let s = sign_of(lead);
    match at {
        Bound::PosInf => s,
        Bound::NegInf => match p.degree() {
            Degree::Finite(d) if d % 2 == 1 => -s,
            _ => s,
        },
        Bound::Finite(r) => sign_of(&p.eval(r)),
    }
}

pub fn sturm_chain(p: &UniPoly) -> Result<SturmChain> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut members = vec![p.primitive()];
    let d = p.derivative();
    if !d.is_zero() {
        members.push(d.primitive());
    }
    while members.len() >= 2 {
        let (a, b) = (&members[members.len() - 2], &members[members.len() - 1]);
        let (_, r) = a.div_rem(b)?;
        if r.is_zero() {
            break;
        }
        members.push((-r).primitive());
    }
    let ints = members
        .iter()
        .map(|m| m.integer_coeffs().expect("primitive parts are integral"))
        .collect();
    Ok(SturmChain { members, ints })
}

/// `p / gcd(p, p')`, primitive.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    Ok(p.div_exact(&g)?.primitive())
}

/// Number of distinct real roots in `(lo, hi]`.
///
/// Zero entries are dropped before counting variations, which makes the
/// count exact for `(lo, hi]` even when an endpoint is a simple root. When an
/// endpoint is a multiple root every chain member vanishes there, so the
/// count is redone on the squarefree part instead of moving the endpoint.
pub fn count_real_roots(chain: &SturmChain, lo: &Bound, hi: &Bound) -> Result<usize> {
    if lo.cmp_bound(hi) != Ordering::Less || *lo == Bound::PosInf || *hi == Bound::NegInf {
        return Err(Error::EmptyInterval);
    }
    let tail = chain.members.last().expect("chain is nonempty");
    let degenerate = |b: &Bound| matches!(b, Bound::Finite(_)) && sign_at(tail, b) == 0;
    if degenerate(lo) || degenerate(hi) {
        let sf = sturm_chain(&squarefree_part(chain.poly())?)?;
        if degenerate_for(&sf, lo) || degenerate_for(&sf, hi) {
            return Err(Error::IsolationFailed(
                "endpoint is a root of every chain member".into(),
            ));
        }
        return count_real_roots(&sf, lo, hi);
    }
    let (a, b) = (chain.sign_variations(lo), chain.sign_variations(hi));
    a.checked_sub(b)
        .ok_or_else(|| Error::IsolationFailed("sign variations increased".into()))
}

fn degenerate_for(chain: &SturmChain, b: &Bound) -> bool {
    matches!(b, Bound::Finite(_)) && chain.members.iter().all(|m| sign_at(m, b) == 0)
}

/// A power of two above `1 + max |a_i / a_d|`: every real root lies in
/// `(-B, B)`, and bisection from `±B` only meets dyadic rationals.
fn cauchy_bound(p: &UniPoly) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    let bound = max + BigRational::one();
    let mut b = BigRational::one();
    while b < bound {
        b *= rat(2);
    }
    b
}

/// Disjoint half-open intervals `(a, b]`, in increasing order, each holding
/// exactly one distinct real root of `p`.
pub fn isolate_roots(p: &UniPoly) -> Result<Vec<(BigRational, BigRational)>> {
    let sf = squarefree_part(p)?;
    let chain = sturm_chain(&sf)?;
    let bound = cauchy_bound(&sf);
    let var = |r: &BigRational| chain.sign_variations(&Bound::Finite(r.clone()));
    let lo = -bound.clone();
    let (v_lo, v_hi) = (var(&lo), var(&bound));
    let mut pending = vec![(lo, v_lo, bound, v_hi)];
    let mut out = Vec::new();
    let mut steps = 0usize;
    while let Some((a, va, b, vb)) = pending.pop() {
        match va.checked_sub(vb) {
            Some(0) => {}
            Some(1) => out.push((a, b)),
            Some(_) => {
                steps += 1;
                if steps > 100_000 {
                    return Err(Error::IsolationFailed("bisection did not terminate".into()));
                }
                let mid = (&a + &b) / rat(2);
                let vm = var(&mid);
                pending.push((mid.clone(), vm, b, vb));
                pending.push((a, va, mid, vm));
            }
            None => return Err(Error::IsolationFailed("sign variations increased".into())),
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Outcome of an interlacing check between `N_n` and `N_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingReport {
    pub n: usize,
    /// Distinct roots of `N_n` on `(-∞, 0]`, the root at `0` included.
    pub roots: usize,
    pub squarefree: bool,
    pub interlaced: bool,
    pub detail: String,
}

impl InterlacingReport {
    pub fn holds(&self) -> bool {
        self.squarefree && self.interlaced && self.roots == self.n
    }
}

/// Checks that `N_n` has `n` distinct real roots on `(-∞, 0]` and that the
/// nonzero roots of `N_{n-1}` strictly separate the nonzero roots of `N_n`.
/// Both polynomials vanish at `0`; that common root is divided out first.
pub fn verify_interlacing(n: usize) -> Result<InterlacingReport> {
    if n < 2 {
        return Err(Error::OutOfBounds {
            what: "interlacing check",
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    let polys = n_polys(n);
    verify_interlacing_polys(n, &polys[n], &polys[n - 1])
}

/// [`verify_interlacing`] on caller-supplied `N_n`, `N_{n-1}`.
pub fn verify_interlacing_polys(
    n: usize,
    n_n: &UniPoly,
    n_prev: &UniPoly,
) -> Result<InterlacingReport> {
    let x = UniPoly::x();
    let zero = Bound::Finite(BigRational::zero());
    let report = |roots, squarefree, interlaced, detail: String| InterlacingReport {
        n,
        roots,
        squarefree,
        interlaced,
        detail,
    };
    let (p, p_rem) = n_n.div_rem(&x)?;
    let (q, q_rem) = n_prev.div_rem(&x)?;
    if !p_rem.is_zero() || !q_rem.is_zero() {
        return Ok(report(
            0,
            false,
            false,
            "x does not divide both polynomials".into(),
        ));
    }
    let p_chain = sturm_chain(&p)?;
    let squarefree = p_chain.is_squarefree();
    let negative = count_real_roots(&p_chain, &Bound::NegInf, &zero)?;
    let at_zero = usize::from(p.eval(&BigRational::zero()).is_zero());
    let roots = negative - at_zero + 1;
    let p_deg = p.degree().finite().unwrap_or(0);
    if !squarefree || negative != p_deg || at_zero == 1 {
        return Ok(report(
            roots,
            squarefree,
            false,
            format!("N_n/x has degree {p_deg}, {negative} distinct roots on (-inf, 0]"),
        ));
    }
    if p.gcd(&q).degree() != Degree::Finite(0) {
        return Ok(report(
            roots,
            squarefree,
            false,
            "common nonzero root".into(),
        ));
    }

    let mut q_roots = isolate_roots(&q)?;
    let q_deg = q.degree().finite().unwrap_or(0);
    if q_roots.len() != q_deg {
        return Ok(report(
            roots,
            squarefree,
            false,
            format!(
                "N_(n-1)/x has {} real roots, expected {q_deg}",
                q_roots.len()
            ),
        ));
    }
    // shrink each q-interval until it holds no root of p
    let q_chain = sturm_chain(&q)?;
    for (a, b) in q_roots.iter_mut() {
        let mut guard = 0;
        while count_real_roots(
            &p_chain,
            &Bound::Finite(a.clone()),
            &Bound::Finite(b.clone()),
        )? > 0
        {
            guard += 1;
            if guard > 10_000 {
                return Err(Error::IsolationFailed(format!(
                    "n = {n}: cannot separate roots"
                )));
            }
            let mid = (&*a + &*b) / rat(2);
            let left = count_real_roots(
                &q_chain,
                &Bound::Finite(a.clone()),
                &Bound::Finite(mid.clone()),
            )?;
            if left == 1 {
                *b = mid;
            } else {
                *a = mid;
            }
        }
    }
    let mut cuts = vec![Bound::NegInf];
    let mut gaps = Vec::new();
    for (a, b) in &q_roots {
        gaps.push((cuts.pop().expect("cut"), Bound::Finite(a.clone())));
        cuts.push(Bound::Finite(b.clone()));
    }
    gaps.push((cuts.pop().expect("cut"), zero));
    let mut per_gap = Vec::with_capacity(gaps.len());
    for (lo, hi) in &gaps {
        // a root of N_(n-1)/x at or above 0 leaves an empty last gap
        let count = if lo.cmp_bound(hi) == Ordering::Less {
            count_real_roots(&p_chain, lo, hi)?
        } else {
            0
        };
        per_gap.push(count);
    }
    let interlaced = per_gap.iter().all(|&c| c == 1);
    Ok(report(
        roots,
        squarefree,
        interlaced,
        format!("roots of N_n per gap between roots of N_(n-1): {per_gap:?}"),
    ))
}

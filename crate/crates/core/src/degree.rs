//! Generic degrees of unipotent characters of `GL_m(q)` in factored
//! cyclotomic form, and Craven's function on such products.
//!
//! Nothing here is ever expanded into coefficients unless asked for: the
//! roots of `Phi_e` are exactly the primitive `e`-th roots of unity, so every
//! argument comparison is a comparison of rationals `j/e < k/d`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub type Rational = Ratio<i64>;

/// `scalar * q^q_power * prod Phi_e(q)^{m_e}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloPolynomial {
    q_power: i64,
    scalar: Rational,
    cyclo: BTreeMap<usize, i64>,
}

/// A primitive `d`-th root of unity `exp(2 i pi k / d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZetaSpec {
    k: usize,
    d: usize,
}

impl ZetaSpec {
    pub fn new(k: usize, d: usize) -> Result<Self> {
        if d == 0 || k == 0 || k > d || k.gcd(&d) != 1 {
            return Err(Error::InvalidZeta { k, d });
        }
        Ok(Self { k, d })
    }

    /// `exp(2 i pi / d)`, the root used by `C_d`.
    pub fn primitive(d: usize) -> Self {
        Self::new(1, d).expect("d must be positive")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `Arg(zeta) / 2 pi = k / d`.
    pub fn threshold(&self) -> Rational {
        Rational::new(self.k as i64, self.d as i64)
    }
}

pub fn totient(e: usize) -> usize {
    (1..=e).filter(|j| j.gcd(&e) == 1).count()
}

fn divisors(k: usize) -> impl Iterator<Item = usize> {
    (1..=k).filter(move |e| k.is_multiple_of(*e))
}

impl CycloPolynomial {
    pub fn one() -> Self {
        Self {
            q_power: 0,
            scalar: Rational::from_integer(1),
            cyclo: BTreeMap::new(),
        }
    }

    pub fn monomial(a: i64) -> Self {
        Self {
            q_power: a,
            ..Self::one()
        }
    }

    pub fn phi(e: usize) -> Self {
        Self::phi_power(e, 1)
    }

    pub fn phi_power(e: usize, m: i64) -> Self {
        assert!(e >= 1, "cyclotomic index must be positive");
        let mut p = Self::one();
        p.add_phi(e, m);
        p
    }

    /// `q^k - 1 = prod_{e | k} Phi_e`.
    pub fn q_power_minus_one(k: usize) -> Self {
        let mut p = Self::one();
        for e in divisors(k) {
            p.add_phi(e, 1);
        }
        p
    }

    /// Builds a value from its raw parts.
    pub fn from_parts(q_power: i64, scalar: Rational, multiplicities: &[(usize, i64)]) -> Self {
        let mut p = Self {
            q_power,
            scalar,
            cyclo: BTreeMap::new(),
        };
        for &(e, m) in multiplicities {
            p.add_phi(e, m);
        }
        p
    }

    fn add_phi(&mut self, e: usize, m: i64) {
        let entry = self.cyclo.entry(e).or_insert(0);
        *entry += m;
        if *entry == 0 {
            self.cyclo.remove(&e);
        }
    }

    pub fn q_power(&self) -> i64 {
        self.q_power
    }

    pub fn scalar(&self) -> Rational {
        self.scalar
    }

    /// Multiplicity `m_e` of `Phi_e`.
    pub fn multiplicity(&self, e: usize) -> i64 {
        self.cyclo.get(&e).copied().unwrap_or(0)
    }

    /// Non-zero multiplicities by increasing index.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.cyclo.iter().map(|(&e, &m)| (e, m))
    }

    /// A genuine polynomial: non-negative exponents and a positive scalar.
    pub fn is_finalized(&self) -> bool {
        self.q_power >= 0
            && self.scalar > Rational::from_integer(0)
            && self.cyclo.values().all(|&m| m >= 0)
    }

    /// Number of non-zero roots with multiplicity, `sum m_e phi(e)`.
    pub fn root_count(&self) -> i64 {
        self.cyclo
            .iter()
            .map(|(&e, &m)| m * totient(e) as i64)
            .sum()
    }

    /// Valuation `v(P)`.
    pub fn valuation(&self) -> i64 {
        self.q_power
    }

    /// Degree `d°(P)`.
    pub fn degree(&self) -> i64 {
        self.q_power + self.root_count()
    }

    /// `(a, A)`: valuation and degree.
    pub fn a_big_a(&self) -> (i64, i64) {
        (self.valuation(), self.degree())
    }

    /// `sum_e m_e #{0 <= j < e : gcd(j, e) = 1, j/e < k/d}`. The root `1`
    /// (index `e = 1`, argument 0) always counts.
    pub fn arg_count(&self, zeta: ZetaSpec) -> i64 {
        self.cyclo
            .iter()
            .map(|(&e, &m)| {
                let below = (0..e)
                    .filter(|&j| j.gcd(&e) == 1 && j * zeta.d < zeta.k * e)
                    .count();
                m * below as i64
            })
            .sum()
    }

    /// `C_zeta(P) = (k/d)(d°(P) + v(P)) + arg_count - m_1 / 2`.
    pub fn craven(&self, zeta: ZetaSpec) -> Rational {
        zeta.threshold() * Rational::from_integer(self.degree() + self.valuation())
            + Rational::from_integer(self.arg_count(zeta))
            - Rational::new(self.multiplicity(1), 2)
    }

    /// Value at `q = 1`; `None` when a `Phi_1` factor makes it zero or
    /// undefined.
    pub fn eval_at_one(&self) -> Option<Rational> {
        if self.multiplicity(1) != 0 {
            return None;
        }
        let mut value = self.scalar;
        for (&e, &m) in &self.cyclo {
            let at_one = prime_power_base(e).unwrap_or(1) as i64;
            let factor = Rational::from_integer(at_one);
            value *= if m >= 0 {
                factor.pow(m as i32)
            } else {
                factor.recip().pow((-m) as i32)
            };
        }
        Some(value)
    }

    /// Integer coefficients, lowest degree first. `None` unless the value is
    /// a polynomial with integral scalar.
    pub fn expand(&self) -> Option<Vec<i128>> {
        if !self.is_finalized() || !self.scalar.is_integer() {
            return None;
        }
        let mut coeffs = vec![0i128; self.q_power as usize];
        coeffs.push(*self.scalar.numer() as i128);
        for (&e, &m) in &self.cyclo {
            let phi = cyclotomic_coefficients(e);
            for _ in 0..m {
                coeffs = poly_mul(&coeffs, &phi);
            }
        }
        Some(coeffs)
    }
}

/// `Phi_e(1) = p` if `e` is a power of the prime `p`, else 1 (for `e > 1`).
fn prime_power_base(e: usize) -> Option<usize> {
    if e < 2 {
        return None;
    }
    let p = (2..=e).find(|p| e.is_multiple_of(*p))?;
    let mut rest = e;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial.
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut quot = vec![0i128; num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1];
        quot[i] = c;
        for (j, &y) in den.iter().enumerate() {
            rem[i + j] -= c * y;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Coefficients of `Phi_e`, lowest degree first.
pub fn cyclotomic_coefficients(e: usize) -> Vec<i128> {
    let mut num = vec![0i128; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in divisors(e).filter(|&d| d < e) {
        num = poly_div_exact(&num, &cyclotomic_coefficients(d));
    }
    num
}

impl Mul for &CycloPolynomial {
    type Output = CycloPolynomial;

    fn mul(self, rhs: &CycloPolynomial) -> CycloPolynomial {
        let mut out = self.clone();
        out.q_power += rhs.q_power;
        out.scalar *= rhs.scalar;
        for (&e, &m) in &rhs.cyclo {
            out.add_phi(e, m);
        }
        out
    }
}

impl Mul for CycloPolynomial {
    type Output = CycloPolynomial;

    fn mul(self, rhs: CycloPolynomial) -> CycloPolynomial {
        &self * &rhs
    }
}

impl Div for &CycloPolynomial {
    type Output = CycloPolynomial;

    fn div(self, rhs: &CycloPolynomial) -> CycloPolynomial {
        let mut out = self.clone();
        out.q_power -= rhs.q_power;
        out.scalar /= rhs.scalar;
        for (&e, &m) in &rhs.cyclo {
            out.add_phi(e, -m);
        }
        out
    }
}

impl Div for CycloPolynomial {
    type Output = CycloPolynomial;

    fn div(self, rhs: CycloPolynomial) -> CycloPolynomial {
        &self / &rhs
    }
}

impl fmt::Display for CycloPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.scalar != Rational::from_integer(1) {
            terms.push(self.scalar.to_string());
        }
        match self.q_power {
            0 => {}
            1 => terms.push("q".to_string()),
            a => terms.push(format!("q^{a}")),
        }
        for (&e, &m) in &self.cyclo {
            if m == 1 {
                terms.push(format!("Phi_{e}"));
            } else {
                terms.push(format!("Phi_{e}^{m}"));
            }
        }
        if terms.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", terms.join(" * "))
        }
    }
}

/// `deg chi_lambda = q^{n(lambda)} prod_{k=1}^{N} (q^k - 1) / prod_{cells} (q^h - 1)`.
/// The empty partition (the trivial group) has degree 1.
pub fn generic_degree(lambda: &Partition) -> Result<CycloPolynomial> {
    let mut p = CycloPolynomial::monomial(lambda.n_statistic() as i64);
    for k in 1..=lambda.size() {
        p = &p * &CycloPolynomial::q_power_minus_one(k);
    }
    for h in lambda.hook_lengths() {
        p = &p / &CycloPolynomial::q_power_minus_one(h);
    }
    if !p.is_finalized() || p.scalar != Rational::from_integer(1) {
        return Err(Error::NonPolynomialDegree(lambda.to_string()));
    }
    Ok(p)
}

/// `(a_lambda, A_lambda)`.
pub fn a_big_a(lambda: &Partition) -> (i64, i64) {
    generic_degree(lambda)
        .expect("hook formula yields a polynomial")
        .a_big_a()
}

/// `C_zeta(deg chi_lambda) - C_zeta(deg chi_mu)`.
pub fn craven_delta(lambda: &Partition, mu: &Partition, zeta: ZetaSpec) -> Rational {
    let top = generic_degree(lambda).expect("hook formula yields a polynomial");
    let bottom = generic_degree(mu).expect("hook formula yields a polynomial");
    top.craven(zeta) - bottom.craven(zeta)
}

//! Exact rational and cyclotomic arithmetic.
//!
//! Every character value produced by this crate is a [`Cyclotomic`]: an
//! element of the `k`-th cyclotomic field `Q(ζ_k)`, stored as a polynomial
//! in `ζ_k` reduced modulo the `k`-th cyclotomic polynomial `Φ_k`. Reduction
//! mod `Φ_k` (rather than `x^k - 1`) makes the representation canonical:
//! two values are equal iff their coefficient vectors are identical. For
//! `k ∈ {1, 2}` the field is `Q` and a value is just its constant
//! coefficient.
//!
//! Rationals are arbitrary-precision [`num_rational::BigRational`], which
//! keeps `gcd(|num|, den) = 1` and `den > 0` after every operation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational number in canonical form.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand constructor for small integers as rationals.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Renders a rational as `n` for integers and `p/q` otherwise.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `n` or `p/q` (optionally signed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Euler's totient.
pub fn euler_phi(k: usize) -> usize {
    assert!(k >= 1);
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of the `k`-th cyclotomic polynomial, ascending degree,
/// monic, cached process-wide.
fn cyclotomic_polynomial(k: usize) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return Arc::clone(p);
    }
    // x^k - 1 divided by Phi_d for every proper divisor d of k.
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); k + 1];
    poly[0] = BigInt::from(-1);
    poly[k] = BigInt::one();
    for d in 1..k {
        if k % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = int_poly_div_exact(&poly, &phi_d);
        }
    }
    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(k, Arc::clone(&arc));
    arc
}

/// Exact division of integer polynomials; `divisor` must be monic and
/// divide `dividend` exactly.
fn int_poly_div_exact(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    let dd = dividend.len() - 1;
    let dv = divisor.len() - 1;
    assert!(divisor[dv].is_one(), "divisor must be monic");
    let mut rem = dividend.to_vec();
    let mut quot = vec![BigInt::zero(); dd - dv + 1];
    for i in (0..=dd - dv).rev() {
        let c = rem[i + dv].clone();
        if !c.is_zero() {
            quot[i] = c.clone();
            for (j, d) in divisor.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// Element of the cyclotomic field `Q(ζ_order)` in canonical form: a
/// polynomial in `ζ_order` of degree `< φ(order)`, reduced mod `Φ_order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Cyclotomic {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order)],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: usize, r: Rational) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = r;
        c
    }

    /// `ζ_order^power`, reduced mod `Φ_order`. Negative powers are taken
    /// mod `order`.
    pub fn root(order: usize, power: i64) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let e = power.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); order];
        raw[e] = Rational::one();
        Self::reduce(order, raw)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Reduces a raw coefficient vector on powers `ζ^0..ζ^{len-1}` (any
    /// length; exponents are first folded mod `order`) to canonical form.
    fn reduce(order: usize, raw: Vec<Rational>) -> Self {
        let mut folded = vec![Rational::zero(); order];
        for (e, c) in raw.into_iter().enumerate() {
            if !c.is_zero() {
                folded[e % order] += c;
            }
        }
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        // Long division by the monic Phi_order; only the remainder is kept.
        for i in (deg..order).rev() {
            let c = std::mem::replace(&mut folded[i], Rational::zero());
            if !c.is_zero() {
                for (j, d) in phi.iter().take(deg).enumerate() {
                    folded[i - deg + j] -= &c * d;
                }
            }
        }
        folded.truncate(deg);
        Cyclotomic {
            order,
            coeffs: folded,
        }
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cyclotomic order mismatch: {} vs {}",
            self.order, other.order
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            order: self.order,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic {
            order: self.order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let mut raw = vec![Rational::zero(); 2 * self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.order, raw)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn div_rational(&self, r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.scale(&(Rational::one() / r)))
    }

    /// Complex conjugation: the image under `ζ ↦ ζ^{order-1}`.
    pub fn conjugate(&self) -> Self {
        let k = self.order;
        let mut raw = vec![Rational::zero(); k];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i * (k - 1)) % k] += c;
            }
        }
        Self::reduce(k, raw)
    }

    /// Numeric embedding at `ζ_order = e^{2πi/order}`, as `(re, im)`.
    /// Test-side cross-check only; exact code never consumes it.
    pub fn eval_f64(&self) -> (f64, f64) {
        let k = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let x = c.numer().to_string().parse::<f64>().unwrap()
                / c.denom().to_string().parse::<f64>().unwrap();
            let theta = 2.0 * std::f64::consts::PI * (i as f64) / k;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }

    /// Renders per the output grammar: rational values as `n` or `p/q`,
    /// everything else as `c0 + c1*z + c2*z^2 + ...` with zero terms
    /// omitted and `z = ζ_order`.
    pub fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return render_rational(&r);
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match i {
                0 => render_rational(c),
                1 => format!("{}*z", render_rational(c)),
                _ => format!("{}*z^{}", render_rational(c), i),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    /// Parses the [`render`](Self::render) grammar back into a value of the
    /// given order.
    pub fn parse(order: usize, s: &str) -> Result<Self> {
        let mut value = Self::zero(order);
        for term in s.split(" + ") {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (coeff_str, power) = match term.split_once('*') {
                None => (term, 0usize),
                Some((c, z)) => {
                    let power = if z == "z" {
                        1
                    } else if let Some(e) = z.strip_prefix("z^") {
                        e.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad power in {term:?}")))?
                    } else {
                        return Err(Error::Parse(format!("bad term {term:?}")));
                    };
                    (c, power)
                }
            };
            let coeff = parse_rational(coeff_str)?;
            let monomial = Self::root(order, power as i64).scale(&coeff);
            value = value.add(&monomial);
        }
        Ok(value)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic(order {}: {})", self.order, self.render())
    }
}

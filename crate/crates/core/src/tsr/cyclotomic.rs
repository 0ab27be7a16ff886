use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

/// Coefficients (low degree first) of the `m`-th cyclotomic polynomial, cached.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    assert!(m >= 1, "conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(phi) = cache.lock().expect("cache lock").get(&m) {
        return phi.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        poly = divide_monic(&poly, &cyclotomic_polynomial(d));
    }
    let phi = Arc::new(poly);
    cache.lock().expect("cache lock").insert(m, phi.clone());
    phi
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Z[ζ_m]` in the power basis `1, ζ, …, ζ^{φ(m)-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclotomicInt {
    conductor: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    fn degree(m: u64) -> usize {
        cyclotomic_polynomial(m).len() - 1
    }

    /// Reduces an arbitrary polynomial in `ζ` modulo `Φ_m`.
    pub fn from_poly(m: u64, mut poly: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let d = phi.len() - 1;
        for k in (d..poly.len()).rev() {
            let c = poly[k];
            if c == 0 {
                continue;
            }
            for (j, &f) in phi.iter().enumerate() {
                poly[k - d + j] -= c * f;
            }
        }
        poly.resize(d, 0);
        CyclotomicInt {
            conductor: m,
            coeffs: poly,
        }
    }

    /// Builds from already reduced coordinates; `None` if the length is not `φ(m)`.
    pub fn from_coeffs(m: u64, coeffs: Vec<i64>) -> Option<Self> {
        (m >= 1 && coeffs.len() == Self::degree(m)).then_some(CyclotomicInt {
            conductor: m,
            coeffs,
        })
    }

    pub fn from_int(m: u64, v: i64) -> Self {
        let mut coeffs = vec![0; Self::degree(m)];
        coeffs[0] = v;
        CyclotomicInt {
            conductor: m,
            coeffs,
        }
    }

    pub fn zero(m: u64) -> Self {
        Self::from_int(m, 0)
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// `ζ_m^k`
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        let k = k.rem_euclid(m as i64) as usize;
        let mut poly = vec![0; k + 1];
        poly[k] = 1;
        Self::from_poly(m, poly)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.conductor, other.conductor, "mixed conductors");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        CyclotomicInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        CyclotomicInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut poly = vec![0i64; self.coeffs.len() + other.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        Self::from_poly(self.conductor, poly)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let m = self.conductor;
        let mut poly = vec![0i64; m as usize];
        for (i, &a) in self.coeffs.iter().enumerate() {
            poly[(m as usize - i) % m as usize] += a;
        }
        Self::from_poly(m, poly)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    /// `k` with `self = ζ_m^k`, if any.
    pub fn root_of_unity_exponent(&self) -> Option<u64> {
        (0..self.conductor).find(|&k| *self == Self::zeta_pow(self.conductor, k as i64))
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m={})", self, self.conductor)
    }
}

impl fmt::Display for CyclotomicInt {
    /// e.g. `2 - z + 3z^2`, `z` standing for `ζ_m`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let term = match (i, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "z".to_string(),
                (1, _) => format!("{mag}z"),
                (_, 1) => format!("z^{i}"),
                _ => format!("{mag}z^{i}"),
            };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

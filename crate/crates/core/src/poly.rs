//! Exact arithmetic and factorization for univariate polynomials over Z_p.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` is the coefficient of
//! `x^i`. The zero polynomial is the empty coefficient vector.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on the degree accepted by [`Poly::factor`].
pub const DEFAULT_FACTOR_CAP: usize = 64;

/// Trial-division primality check, adequate for desk-scale moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, p prime, a != 0.
    debug_assert!(!a.is_multiple_of(p));
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A polynomial over the prime field Z_p in canonical dense form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Build a polynomial from ascending coefficients, reducing mod p and
    /// trimming trailing zeros.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Poly::constant(p, 1)
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Poly::new(p, vec![c])
    }

    /// The monomial x^deg.
    pub fn monomial(p: u64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = 1;
        Poly { p, coeffs }
    }

    pub fn x(p: u64) -> Self {
        Poly::monomial(p, 1)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` is the degree marker of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check_same_modulus(&self, other: &Poly) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_modulus(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        Ok(Poly::new(self.p, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same_modulus(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
            .collect();
        Ok(Poly::new(self.p, coeffs))
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        Poly::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let c = c % self.p;
        let coeffs = self.coeffs.iter().map(|&a| a * c % self.p).collect();
        Poly::new(self.p, coeffs)
    }

    /// Schoolbook product reduced mod p.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.p));
        }
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a * b) % self.p;
            }
        }
        Ok(Poly::new(self.p, acc))
    }

    /// Euclidean division: `self = other * q + r` with `deg r < deg other`.
    pub fn divmod(&self, other: &Poly) -> Result<(Poly, Poly)> {
        self.check_same_modulus(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let db = other.coeffs.len() - 1;
        let lead_inv = inv_mod(other.leading_coeff(), self.p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len().saturating_sub(db)];
        while rem.len() > db || (db == 0 && !rem.is_empty()) {
            let dr = rem.len() - 1;
            if dr < db {
                break;
            }
            let factor = rem[dr] * lead_inv % self.p;
            quot[dr - db] = factor;
            for (k, &b) in other.coeffs.iter().enumerate() {
                let idx = dr - db + k;
                rem[idx] = (rem[idx] + self.p - factor * b % self.p) % self.p;
            }
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((Poly::new(self.p, quot), Poly::new(self.p, rem)))
    }

    /// Exact division; fails with `NotInIdeal` when a remainder is left.
    pub fn div_exact(&self, other: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(other)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotInIdeal)
        }
    }

    pub fn rem(&self, other: &Poly) -> Result<Poly> {
        Ok(self.divmod(other)?.1)
    }

    /// Divide by the leading coefficient; the zero polynomial stays zero.
    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.scale(inv_mod(lc, self.p)),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        Ok(self.xgcd(other)?.0)
    }

    /// Extended Euclid: returns monic `g` and `u, v` with `g = u*self + v*other`.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check_same_modulus(other)?;
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
        let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1)?)?;
            let t = t0.sub(&q.mul(&t1)?)?;
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            // gcd(0, 0): keep the Bezout identity trivially.
            return Ok((Poly::zero(p), Poly::zero(p), Poly::zero(p)));
        }
        let lc = r0.leading_coeff();
        if lc != 1 {
            let inv = inv_mod(lc, p);
            r0 = r0.scale(inv);
            s0 = s0.scale(inv);
            t0 = t0.scale(inv);
        }
        Ok((r0, s0, t0))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % self.p) * c % self.p)
            .collect();
        Poly::new(self.p, coeffs)
    }

    /// Horner evaluation of `self` at `a`.
    pub fn eval(&self, a: u64) -> u64 {
        let a = a % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * a + c) % self.p;
        }
        acc
    }

    /// Canonical order: by degree, then ascending coefficient vectors
    /// lexicographically. Polynomials over different moduli compare by modulus.
    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Complete factorization into monic irreducibles with the default cap.
    pub fn factor(&self) -> Result<Factorization> {
        self.factor_with_cap(DEFAULT_FACTOR_CAP)
    }

    /// Factor by root stripping plus exhaustive trial division by monic
    /// polynomials of increasing degree.
    pub fn factor_with_cap(&self, cap: usize) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let deg = self.degree().unwrap();
        if deg > cap {
            return Err(Error::DegreeTooLarge { degree: deg, cap });
        }
        let p = self.p;
        let unit = self.leading_coeff();
        let mut work = self.make_monic();
        let mut factors: Vec<(Poly, u32)> = Vec::new();

        // Linear factors by root search.
        for r in 0..p {
            if work.is_constant() {
                break;
            }
            let lin = Poly::new(p, vec![(p - r) % p, 1]); // x - r
            let mut e = 0u32;
            while !work.is_constant() && work.eval(r) == 0 {
                work = work.div_exact(&lin)?;
                e += 1;
            }
            if e > 0 {
                factors.push((lin, e));
            }
        }

        // Trial division by monic candidates of degree d while 2d <= deg(work).
        let mut d = 2usize;
        while work.degree().is_some_and(|w| 2 * d <= w) {
            let mut coeffs = vec![0u64; d + 1];
            coeffs[d] = 1;
            'cands: loop {
                let cand = Poly { p, coeffs: coeffs.clone() };
                let mut e = 0u32;
                while work.rem(&cand)?.is_zero() {
                    work = work.div_exact(&cand)?;
                    e += 1;
                }
                if e > 0 {
                    factors.push((cand, e));
                    if work.degree().is_none_or(|w| 2 * d > w) {
                        break 'cands;
                    }
                }
                // Next candidate: count up through the d low coefficients.
                let mut i = 0;
                loop {
                    if i == d {
                        break 'cands;
                    }
                    coeffs[i] += 1;
                    if coeffs[i] < p {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
            }
            d += 1;
        }

        if !work.is_constant() {
            factors.push((work, 1));
        }
        factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        Ok(Factorization { p, unit, factors })
    }

    /// Digit-string form, most significant first: 2x^2+1 over Z_3 is "201".
    /// Digits are separated by dots when p > 10.
    pub fn to_digit_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let digits: Vec<String> = self.coeffs.iter().rev().map(|c| c.to_string()).collect();
        if self.p <= 10 {
            digits.concat()
        } else {
            digits.join(".")
        }
    }

    /// Parse either polynomial syntax ("2x^2+1", "x^3-x") or, when the text
    /// is all digits and p <= 10, the digit-string form ("201").
    pub fn parse(p: u64, s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if !s.contains('x') && !s.contains('X') {
            if s.contains('.') {
                let mut coeffs = Vec::new();
                for part in s.split('.') {
                    let v: u64 = part
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad digit {part:?}")))?;
                    coeffs.push(v);
                }
                coeffs.reverse();
                return Ok(Poly::new(p, coeffs));
            }
            if p <= 10 {
                let mut coeffs = Vec::new();
                for ch in s.chars() {
                    let v = ch
                        .to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad digit {ch:?}")))?;
                    coeffs.push(v as u64);
                }
                coeffs.reverse();
                return Ok(Poly::new(p, coeffs));
            }
            let v: u64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad constant {s:?}")))?;
            return Ok(Poly::constant(p, v));
        }
        // Term-by-term parse: split on '+' and '-' keeping signs.
        let mut acc = Poly::zero(p);
        let mut term = String::new();
        let mut sign = 1i64;
        let mut terms: Vec<(i64, String)> = Vec::new();
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '+' | '-' if i > 0 && !term.trim().is_empty() => {
                    terms.push((sign, term.clone()));
                    term.clear();
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '-' if term.trim().is_empty() => sign = -sign,
                '+' if term.trim().is_empty() => {}
                _ => term.push(ch),
            }
        }
        if !term.trim().is_empty() {
            terms.push((sign, term));
        }
        for (sign, t) in terms {
            let t = t.trim().replace([' ', '*'], "");
            let lower = t.to_lowercase();
            let (coeff, deg) = if let Some(rest) = lower.strip_prefix('x') {
                (1u64, parse_exponent(rest)?)
            } else if let Some(pos) = lower.find('x') {
                let c: u64 = lower[..pos]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {t:?}")))?;
                (c, parse_exponent(&lower[pos + 1..])?)
            } else {
                let c: u64 = lower
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad term {t:?}")))?;
                (c, 0)
            };
            let c = if sign < 0 { (p - coeff % p) % p } else { coeff % p };
            let term_poly = Poly::monomial(p, deg).scale(c);
            acc = acc.add(&term_poly)?;
        }
        Ok(acc)
    }
}

fn parse_exponent(rest: &str) -> Result<usize> {
    if rest.is_empty() {
        return Ok(1);
    }
    let rest = rest.strip_prefix('^').unwrap_or(rest);
    rest.parse()
        .map_err(|_| Error::Parse(format!("bad exponent {rest:?}")))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, i) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, i) => write!(f, "x^{i}")?,
                (c, 1) => write!(f, "{c}x")?,
                (c, i) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({} mod {})", self, self.p)
    }
}

/// Factorization into monic irreducibles with exponents, sorted canonically,
/// together with the stripped unit constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub p: u64,
    pub unit: u64,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiply the factorization back together, including the unit.
    pub fn product(&self) -> Poly {
        let mut acc = Poly::constant(self.p, self.unit);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f).expect("same modulus");
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit != 1 || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
            if !self.factors.is_empty() {
                write!(f, "*")?;
            }
        }
        let mut first = true;
        for (g, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "({g})")?;
            } else {
                write!(f, "({g})^{e}")?;
            }
        }
        Ok(())
    }
}

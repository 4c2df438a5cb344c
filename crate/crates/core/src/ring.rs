//! The quotient ring `R = Z_p[x]/(f)`, its units and zero divisors, and its
//! full ideal lattice with sum/product/intersection/quotient/annihilator,
//! exported as a finite MV-algebra.
//!
//! Ideals are represented intensionally: an ideal is a monic divisor of the
//! modulus, encoded as one exponent per irreducible factor. Divisibility of
//! generators reverses inclusion, so all lattice operations are exponent
//! arithmetic.

use std::fmt;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::poly::{is_prime, Factorization, Poly};

/// `R = Z_p[x]/(modulus)` with the modulus factored once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRing {
    p: u64,
    modulus: Poly,
    factorization: Factorization,
    squarefree: bool,
}

/// Classification of a ring element: in a finite quotient ring every nonzero
/// element is a unit or a zero divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    Zero,
    Unit,
    ZeroDivisor,
}

/// Lattice operations on ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersect,
    /// `ideal_op(I, J, Quotient)` computes `(J : I) = {x : x·I ⊆ J}`.
    Quotient,
}

/// An ideal of a [`QuotientRing`]: exponents `a_i <= e_i` per factor, with
/// the cached monic generator `∏ f_i^(a_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealHandle {
    exps: Vec<u32>,
    generator: Poly,
}

impl IdealHandle {
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

impl QuotientRing {
    /// `R_{p,1,beta} = Z_p[x]/(x^(beta+1) - x)`.
    ///
    /// The squarefree flag is recorded rather than enforced: the modulus
    /// fails squarefreeness exactly when p divides beta.
    pub fn cyclic(p: u64, beta: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if beta == 0 {
            return Err(Error::Parse("beta must be >= 1".into()));
        }
        let mut coeffs = vec![0u64; beta as usize + 2];
        coeffs[1] = p - 1;
        coeffs[beta as usize + 1] = 1;
        QuotientRing::general(p, Poly::new(p, coeffs))
    }

    /// General quotient by a monic modulus of degree >= 1.
    pub fn general(p: u64, modulus: Poly) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.modulus() != p {
            return Err(Error::ModulusMismatch(modulus.modulus(), p));
        }
        if !modulus.is_monic() || modulus.degree() == Some(0) || modulus.is_zero() {
            return Err(Error::NotMonic);
        }
        let factorization = modulus.factor()?;
        let by_exponents = factorization.is_squarefree();
        let by_derivative = modulus
            .gcd(&modulus.derivative())?
            .is_one();
        debug_assert_eq!(by_exponents, by_derivative);
        Ok(QuotientRing {
            p,
            modulus,
            factorization,
            squarefree: by_exponents,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// Number of elements, `p^deg`.
    pub fn element_count(&self) -> u128 {
        (self.p as u128).pow(self.degree() as u32)
    }

    /// Number of ideals, `∏ (e_i + 1)`.
    pub fn ideal_count(&self) -> u128 {
        self.factorization
            .factors
            .iter()
            .map(|(_, e)| *e as u128 + 1)
            .product()
    }

    /// Canonical representative of `f` in the ring.
    pub fn reduce(&self, f: &Poly) -> Result<Poly> {
        if f.modulus() != self.p {
            return Err(Error::ModulusMismatch(f.modulus(), self.p));
        }
        f.rem(&self.modulus)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.reduce(&a.mul(b)?)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        self.reduce(&a.add(b)?)
    }

    /// Inverse of a unit, by the extended Euclidean algorithm.
    pub fn inverse(&self, a: &Poly) -> Result<Poly> {
        let a = self.reduce(a)?;
        let (g, u, _) = a.xgcd(&self.modulus)?;
        if !g.is_one() {
            return Err(Error::NotAUnit);
        }
        self.reduce(&u)
    }

    pub fn classify(&self, a: &Poly) -> Result<ElementClass> {
        let a = self.reduce(a)?;
        if a.is_zero() {
            return Ok(ElementClass::Zero);
        }
        if a.gcd(&self.modulus)?.is_one() {
            Ok(ElementClass::Unit)
        } else {
            Ok(ElementClass::ZeroDivisor)
        }
    }

    /// Iterate all canonical representatives. Only sensible for small rings.
    pub fn elements(&self) -> impl Iterator<Item = Poly> + '_ {
        let d = self.degree();
        let p = self.p;
        let total = self.element_count();
        (0..total).map(move |k| {
            let mut k = k;
            let mut coeffs = Vec::with_capacity(d);
            for _ in 0..d {
                coeffs.push((k % p as u128) as u64);
                k /= p as u128;
            }
            Poly::new(p, coeffs)
        })
    }

    fn handle_from_exps(&self, exps: Vec<u32>) -> IdealHandle {
        let mut generator = Poly::one(self.p);
        for ((f, _), &a) in self.factorization.factors.iter().zip(&exps) {
            for _ in 0..a {
                generator = generator.mul(f).expect("same modulus");
            }
        }
        IdealHandle { exps, generator }
    }

    /// The zero ideal `(0)`, generated by the modulus itself.
    pub fn zero_ideal(&self) -> IdealHandle {
        let exps = self.factorization.factors.iter().map(|(_, e)| *e).collect();
        self.handle_from_exps(exps)
    }

    /// The full ring as an ideal, generated by 1.
    pub fn unit_ideal(&self) -> IdealHandle {
        self.handle_from_exps(vec![0; self.factorization.factors.len()])
    }

    /// Build the ideal generated by a divisor of the modulus.
    pub fn ideal_from_generator(&self, g: &Poly) -> Result<IdealHandle> {
        let mut g = self.reduce(g)?.make_monic();
        if g.is_zero() {
            return Ok(self.zero_ideal());
        }
        let mut exps = Vec::with_capacity(self.factorization.factors.len());
        for (f, e) in &self.factorization.factors {
            let mut a = 0u32;
            while a < *e && g.rem(f)?.is_zero() {
                g = g.div_exact(f)?;
                a += 1;
            }
            exps.push(a);
        }
        if !g.is_one() {
            return Err(Error::NotInIdeal);
        }
        Ok(self.handle_from_exps(exps))
    }

    /// All ideals, ordered from the zero ideal (index 0) up to the full
    /// ring: by generator degree descending, then coefficients.
    pub fn ideals(&self) -> Vec<IdealHandle> {
        let r = self.factorization.factors.len();
        let mut out = Vec::new();
        let mut exps = vec![0u32; r];
        loop {
            out.push(self.handle_from_exps(exps.clone()));
            let mut i = 0;
            loop {
                if i == r {
                    out.sort_by(|a, b| {
                        b.generator
                            .degree()
                            .cmp(&a.generator.degree())
                            .then_with(|| a.generator.cmp_canonical(&b.generator))
                    });
                    return out;
                }
                exps[i] += 1;
                if exps[i] <= self.factorization.factors[i].1 {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Exponentwise lattice operation; both handles must belong to this ring.
    pub fn ideal_op(&self, a: &IdealHandle, b: &IdealHandle, op: IdealOp) -> IdealHandle {
        let exps = a
            .exps
            .iter()
            .zip(&b.exps)
            .zip(self.factorization.factors.iter().map(|(_, e)| *e))
            .map(|((&ai, &bi), cap)| match op {
                IdealOp::Sum => ai.min(bi),
                IdealOp::Intersect => ai.max(bi),
                IdealOp::Product => (ai + bi).min(cap),
                IdealOp::Quotient => bi.saturating_sub(ai),
            })
            .collect();
        self.handle_from_exps(exps)
    }

    /// `Ann(I) = (0 : I)`; exponentwise `e_i - a_i`.
    pub fn annihilator(&self, i: &IdealHandle) -> IdealHandle {
        self.ideal_op(i, &self.zero_ideal(), IdealOp::Quotient)
    }

    /// Membership: `a ∈ I` iff the generator divides the canonical rep.
    pub fn contains(&self, ideal: &IdealHandle, a: &Poly) -> Result<bool> {
        let a = self.reduce(a)?;
        if a.is_zero() {
            return Ok(true);
        }
        Ok(a.rem(&ideal.generator)?.is_zero())
    }

    /// Smallest ideal containing `a`: the handle generated by
    /// `gcd(a, modulus)`.
    pub fn minimal_containing_ideal(&self, a: &Poly) -> Result<IdealHandle> {
        let a = self.reduce(a)?;
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let g = a.gcd(&self.modulus)?;
        self.ideal_from_generator(&g)
    }

    /// `h = a / generator(I)` by exact polynomial division.
    pub fn cofactor(&self, a: &Poly, ideal: &IdealHandle) -> Result<Poly> {
        let a = self.reduce(a)?;
        a.div_exact(&ideal.generator)
    }

    /// Export the ideal lattice as a finite algebra: order is reverse
    /// divisibility of generators, `⊙` the ideal product, `→` the ideal
    /// quotient `(J : I)`.
    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        let ideals = self.ideals();
        let n = ideals.len();
        let index_of = |h: &IdealHandle| ideals.iter().position(|x| x == h).unwrap();
        let mut leq = vec![vec![false; n]; n];
        let mut odot = vec![vec![0usize; n]; n];
        let mut imp = vec![vec![0usize; n]; n];
        for (i, a) in ideals.iter().enumerate() {
            for (j, b) in ideals.iter().enumerate() {
                // I ⊆ J iff a_k >= b_k for every factor.
                leq[i][j] = a.exps.iter().zip(&b.exps).all(|(x, y)| x >= y);
                odot[i][j] = index_of(&self.ideal_op(a, b, IdealOp::Product));
                imp[i][j] = index_of(&self.ideal_op(a, b, IdealOp::Quotient));
            }
        }
        let names = ideals
            .iter()
            .map(|h| {
                if h.generator.is_one() {
                    "R".to_string()
                } else if h.exps == self.zero_ideal().exps {
                    "(0)".to_string()
                } else {
                    format!("({})", h.generator)
                }
            })
            .collect();
        FiniteAlgebra::from_tables(names, leq, odot, imp)
    }
}

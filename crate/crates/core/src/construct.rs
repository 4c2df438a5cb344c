//! Generators for the building blocks: MV-chains with closed-form tables,
//! ordinal sums, direct products, and ideal lattices of a catalog of finite
//! commutative rings described by a small grammar.

use std::fmt;

use crate::algebra::{chain_leq, default_names, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::QuotientRing;

/// Default cap on the ideal count of [`ring_ideal_lattice`].
pub const DEFAULT_IDEAL_CAP: u128 = 1024;

/// The m-element MV-chain with the closed-form tables
/// `i -> j = top if i <= j else k-i+j` and `i ⊙ j = 0 if i+j <= k else i+j-k`
/// (k = m-1).
pub fn mv_chain(m: usize) -> FiniteAlgebra {
    assert!(m >= 2, "an MV-chain needs at least bottom and top");
    let k = m - 1;
    let imp = (0..m)
        .map(|i| (0..m).map(|j| if i <= j { k } else { k - i + j }).collect())
        .collect();
    let odot = (0..m)
        .map(|i| (0..m).map(|j| (i + j).saturating_sub(k)).collect())
        .collect();
    FiniteAlgebra::from_tables(default_names(m), chain_leq(m), odot, imp)
        .expect("closed-form MV-chain tables are residuated")
}

/// Ordinal sum: glue `upper` on top of `lower`, identifying the top of the
/// lower part with the bottom of the upper part. The shared seam keeps a
/// single index and the lower top's name.
///
/// Any validated residuated lattices are accepted; the result is
/// re-validated, so a seam pathology surfaces as a construction error and a
/// non-chain lower part surfaces later as a failed prelinearity flag.
pub fn ordinal_sum(lower: &FiniteAlgebra, upper: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let n1 = lower.n();
    let n2 = upper.n();
    let n = n1 + n2 - 1;
    let seam = n1 - 1;
    // Global index u: part 1 when u <= seam, part 2 when u >= seam.
    let up = |u: usize| u - seam; // index within the upper part
    let mut names: Vec<String> = lower.names().to_vec();
    names.extend(upper.names().iter().skip(1).cloned());

    let mut leq = vec![vec![false; n]; n];
    let mut odot = vec![vec![0usize; n]; n];
    let mut imp = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            let both_low = x <= seam && y <= seam;
            let both_high = x >= seam && y >= seam;
            leq[x][y] = if both_low {
                lower.leq(x, y)
            } else if both_high {
                upper.leq(up(x), up(y))
            } else {
                x < seam && y > seam
            };
            odot[x][y] = if both_low {
                lower.odot(x, y)
            } else if both_high {
                upper.odot(up(x), up(y)) + seam
            } else if x < seam {
                x
            } else {
                y
            };
        }
    }
    for x in 0..n {
        for y in 0..n {
            imp[x][y] = if leq[x][y] {
                n - 1
            } else if x <= seam && y <= seam {
                lower.imp(x, y)
            } else if x >= seam && y >= seam {
                upper.imp(up(x), up(y)) + seam
            } else {
                // x strictly above the seam, y strictly below it.
                y
            };
        }
    }
    FiniteAlgebra::from_tables(names, leq, odot, imp)
}

/// Componentwise direct product. Index of (i, j) is `i * n2 + j`.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let n1 = a.n();
    let n2 = b.n();
    let n = n1 * n2;
    let idx = |i: usize, j: usize| i * n2 + j;
    let names = (0..n1)
        .flat_map(|i| (0..n2).map(move |j| (i, j)))
        .map(|(i, j)| format!("({},{})", a.name(i), b.name(j)))
        .collect();
    let mut leq = vec![vec![false; n]; n];
    let mut odot = vec![vec![0usize; n]; n];
    let mut imp = vec![vec![0usize; n]; n];
    for i1 in 0..n1 {
        for j1 in 0..n2 {
            for i2 in 0..n1 {
                for j2 in 0..n2 {
                    let x = idx(i1, j1);
                    let y = idx(i2, j2);
                    leq[x][y] = a.leq(i1, i2) && b.leq(j1, j2);
                    odot[x][y] = idx(a.odot(i1, i2), b.odot(j1, j2));
                    imp[x][y] = idx(a.imp(i1, i2), b.imp(j1, j2));
                }
            }
        }
    }
    FiniteAlgebra::from_tables(names, leq, odot, imp)
}

/// A finite commutative ring from the catalog grammar:
/// `Zn(m)`, `Quot(p, f)`, `Prod(d1, ..., dk)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    Zn(u64),
    Quot { p: u64, modulus: Poly },
    Prod(Vec<RingDescriptor>),
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Zn(m) => write!(f, "Zn({m})"),
            RingDescriptor::Quot { p, modulus } => write!(f, "Quot({p}, {modulus})"),
            RingDescriptor::Prod(parts) => {
                write!(f, "Prod(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl RingDescriptor {
    /// Parse the grammar, e.g. `Zn(16)`, `Quot(3, x^3-x)`,
    /// `Prod(Zn(2), Zn(4))`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = split_call(s)?;
        match head {
            "Zn" => {
                let m: u64 = body
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad Zn argument {body:?}")))?;
                if m < 2 {
                    return Err(Error::Parse("Zn(m) requires m >= 2".into()));
                }
                Ok(RingDescriptor::Zn(m))
            }
            "Quot" => {
                let args = split_args(body);
                if args.len() != 2 {
                    return Err(Error::Parse("Quot takes (p, modulus)".into()));
                }
                let p: u64 = args[0]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime {:?}", args[0])))?;
                let modulus = Poly::parse(p, &args[1])?;
                Ok(RingDescriptor::Quot { p, modulus })
            }
            "Prod" => {
                let args = split_args(body);
                if args.len() < 2 {
                    return Err(Error::Parse("Prod needs at least 2 components".into()));
                }
                let parts = args
                    .iter()
                    .map(|a| RingDescriptor::parse(a))
                    .collect::<Result<Vec<_>>>()?;
                Ok(RingDescriptor::Prod(parts))
            }
            other => Err(Error::Parse(format!("unknown ring constructor {other:?}"))),
        }
    }

    /// Ideal count of the described ring.
    pub fn ideal_count(&self) -> Result<u128> {
        Ok(match self {
            RingDescriptor::Zn(m) => factor_integer(*m)
                .iter()
                .map(|(_, a)| *a as u128 + 1)
                .product(),
            RingDescriptor::Quot { p, modulus } => {
                QuotientRing::general(*p, modulus.clone())?.ideal_count()
            }
            RingDescriptor::Prod(parts) => {
                let mut acc = 1u128;
                for part in parts {
                    acc = acc.saturating_mul(part.ideal_count()?);
                }
                acc
            }
        })
    }

    /// Chain lengths `β_j` of the local components: `a_j + 1` per prime
    /// power for `Zn`, `e_j + 1` per irreducible factor for `Quot`,
    /// concatenation for `Prod`. The ideal count is their product and the
    /// number of maximal (= minimal) ideals is their count.
    pub fn component_chain_lengths(&self) -> Result<Vec<u32>> {
        Ok(match self {
            RingDescriptor::Zn(m) => factor_integer(*m).iter().map(|(_, a)| a + 1).collect(),
            RingDescriptor::Quot { p, modulus } => QuotientRing::general(*p, modulus.clone())?
                .factorization()
                .factors
                .iter()
                .map(|(_, e)| e + 1)
                .collect(),
            RingDescriptor::Prod(parts) => {
                let mut acc = Vec::new();
                for part in parts {
                    acc.extend(part.component_chain_lengths()?);
                }
                acc
            }
        })
    }
}

fn split_call(s: &str) -> Result<(&str, &str)> {
    let open = s
        .find('(')
        .ok_or_else(|| Error::Parse(format!("expected constructor call, got {s:?}")))?;
    if !s.ends_with(')') {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    Ok((s[..open].trim(), &s[open + 1..s.len() - 1]))
}

fn split_args(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

pub(crate) fn factor_integer(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let mut a = 0;
            while m.is_multiple_of(d) {
                m /= d;
                a += 1;
            }
            out.push((d, a));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// The ideal lattice of a catalog ring as a finite algebra.
///
/// `Zn(m)` with `m = ∏ p_j^(a_j)` is built as the direct product of chains
/// of sizes `a_j + 1`; `Quot` delegates to the quotient-ring export; `Prod`
/// multiplies the component lattices.
pub fn ring_ideal_lattice(desc: &RingDescriptor, cap: u128) -> Result<FiniteAlgebra> {
    let count = desc.ideal_count()?;
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    match desc {
        RingDescriptor::Zn(m) => {
            let primes = factor_integer(*m);
            let mut acc = mv_chain(primes[0].1 as usize + 1);
            for (_, a) in &primes[1..] {
                acc = direct_product(&acc, &mv_chain(*a as usize + 1))?;
            }
            Ok(acc)
        }
        RingDescriptor::Quot { p, modulus } => {
            QuotientRing::general(*p, modulus.clone())?.to_algebra()
        }
        RingDescriptor::Prod(parts) => {
            let mut acc = ring_ideal_lattice(&parts[0], cap)?;
            for part in &parts[1..] {
                acc = direct_product(&acc, &ring_ideal_lattice(part, cap)?)?;
            }
            Ok(acc)
        }
    }
}

//! The ideal-lattice cipher: text -> decimal label -> base-p digits ->
//! polynomial; encryption through the unit-inverse path (with a
//! modulus-doubling fallback for self-inverse units) or the annihilator
//! path; candidate-set decryption.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{is_prime, Poly};
use crate::ring::{ElementClass, IdealHandle, QuotientRing};

/// Enumeration cap exponent: at most p^6 candidate combinations per ideal.
pub const DEFAULT_CANDIDATE_CAP_EXP: u32 = 6;

/// An ordered symbol list; the label of a symbol is its index.
///
/// With up to 10 symbols the labels concatenate as single decimal digits,
/// as in the reference examples. Larger alphabets switch to fixed-width
/// base-λ labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: Vec<char>) -> Result<Self> {
        if symbols.len() < 2 {
            return Err(Error::Parse("alphabet needs at least 2 symbols".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::Parse(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The ten-letter alphabet A..J with labels 0..9.
    pub fn default_ten() -> Self {
        Alphabet {
            symbols: ('A'..='J').collect(),
        }
    }

    /// One symbol per non-empty line.
    pub fn from_lines(text: &str) -> Result<Self> {
        let symbols = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                let mut chars = l.chars();
                let c = chars.next().expect("non-empty line");
                if chars.next().is_some() {
                    Err(Error::Parse(format!("symbol {l:?} is not a single character")))
                } else {
                    Ok(c)
                }
            })
            .collect::<Result<Vec<char>>>()?;
        Alphabet::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Radix of the label positional encoding.
    pub fn radix(&self) -> u64 {
        self.symbols.len().max(10) as u64
    }

    pub fn label(&self, symbol: char) -> Result<u64> {
        self.symbols
            .iter()
            .position(|&s| s == symbol)
            .map(|i| i as u64)
            .ok_or(Error::UnknownSymbol(symbol))
    }

    pub fn symbol(&self, label: u64) -> Result<char> {
        self.symbols
            .get(label as usize)
            .copied()
            .ok_or_else(|| Error::Parse(format!("no symbol for label {label}")))
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet::default_ten()
    }
}

/// The key transmitted with a ciphertext: prime, the beta actually used
/// (after any doubling fallback), and the plaintext length in symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SecretKey {
    pub p: u64,
    pub beta: u32,
    pub len: usize,
}

impl SecretKey {
    /// Parse the "p,beta,len" form used on the command line.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("key must be p,beta,len, got {s:?}")));
        }
        Ok(SecretKey {
            p: parts[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime {:?}", parts[0])))?,
            beta: parts[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad beta {:?}", parts[1])))?,
            len: parts[2]
                .parse()
                .map_err(|_| Error::Parse(format!("bad length {:?}", parts[2])))?,
        })
    }
}

/// Which encryption route produced the ciphertext.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CipherPath {
    UnitInverse,
    UnitInverseDoubled,
    Annihilator,
}

/// Structured record of every step of one encryption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherTrace {
    pub m: u128,
    pub digits_p: String,
    pub f_c: Poly,
    pub path: CipherPath,
    pub ideal_t: Option<Poly>,
    pub ideal_r: Option<Poly>,
    pub cofactor: Option<Poly>,
    pub f_e: Poly,
    pub c: u128,
    pub ciphertext: String,
}

impl CipherTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "m": self.m.to_string(),
            "digits_p": self.digits_p,
            "f_c": self.f_c.to_string(),
            "path": match self.path {
                CipherPath::UnitInverse => "unit-inverse",
                CipherPath::UnitInverseDoubled => "unit-inverse-doubled",
                CipherPath::Annihilator => "annihilator",
            },
            "ideal_t": self.ideal_t.as_ref().map(|g| format!("({g})")),
            "ideal_r": self.ideal_r.as_ref().map(|g| format!("({g})")),
            "cofactor": self.cofactor.as_ref().map(|h| h.to_string()),
            "f_e": self.f_e.to_string(),
            "c": self.c.to_string(),
            "ciphertext": self.ciphertext,
        })
    }
}

/// Concatenate the labels of the symbols positionally.
pub fn encode_text(text: &str, alphabet: &Alphabet) -> Result<u128> {
    if text.is_empty() {
        return Err(Error::Parse("empty message".into()));
    }
    let radix = alphabet.radix() as u128;
    let mut m: u128 = 0;
    for ch in text.chars() {
        let label = alphabet.label(ch)? as u128;
        m = m
            .checked_mul(radix)
            .and_then(|v| v.checked_add(label))
            .ok_or_else(|| Error::Parse("message label overflows".into()))?;
    }
    Ok(m)
}

/// Invert [`encode_text`], left-padding with the zero label to `len`
/// symbols; a leading zero label means the message starts with the first
/// alphabet symbol.
pub fn decode_text(m: u128, len: usize, alphabet: &Alphabet) -> Result<String> {
    let digits = to_base(m, alphabet.radix());
    if digits.len() > len {
        return Err(Error::LengthOverflow { needed: digits.len(), len });
    }
    let mut out = String::new();
    for _ in 0..len - digits.len() {
        out.push(alphabet.symbol(0)?);
    }
    for d in digits {
        out.push(alphabet.symbol(d)?);
    }
    Ok(out)
}

/// Digits of `m` in the given base, most significant first; `0` is `[0]`.
pub fn to_base(m: u128, base: u64) -> Vec<u64> {
    assert!(base >= 2);
    if m == 0 {
        return vec![0];
    }
    let mut digits = Vec::new();
    let mut m = m;
    while m > 0 {
        digits.push((m % base as u128) as u64);
        m /= base as u128;
    }
    digits.reverse();
    digits
}

/// Value of most-significant-first digits in the given base.
pub fn from_base(digits: &[u64], base: u64) -> u128 {
    digits
        .iter()
        .fold(0u128, |acc, &d| acc * base as u128 + d as u128)
}

/// Digit string `a_q ... a_1` maps to `a_q x^(q-1) + ... + a_1`.
pub fn poly_from_digits(p: u64, digits: &[u64]) -> Poly {
    let coeffs: Vec<u64> = digits.iter().rev().copied().collect();
    Poly::new(p, coeffs)
}

/// Inverse of [`poly_from_digits`]; the zero polynomial is `[0]`.
pub fn digits_from_poly(f: &Poly) -> Vec<u64> {
    if f.is_zero() {
        return vec![0];
    }
    f.coeffs().iter().rev().copied().collect()
}

fn digit_string(digits: &[u64], base: u64) -> String {
    let parts: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
    if base <= 10 {
        parts.concat()
    } else {
        parts.join(".")
    }
}

fn check_key_ring(p: u64, beta: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if beta == 0 {
        return Err(Error::Parse("beta must be >= 1".into()));
    }
    if (beta as u64).is_multiple_of(p) {
        return Err(Error::SquarefreeViolation { p, beta });
    }
    Ok(())
}

struct AnnihilatorStep {
    ideal_t: IdealHandle,
    ideal_r: IdealHandle,
    cofactor: Poly,
    f_e: Poly,
}

fn annihilator_step(ring: &QuotientRing, f_c: &Poly, ideal_t: IdealHandle) -> Result<AnnihilatorStep> {
    let cofactor = ring.cofactor(f_c, &ideal_t)?;
    let ideal_r = ring.annihilator(&ideal_t);
    let f_e = ring.mul(ideal_r.generator(), &cofactor)?;
    Ok(AnnihilatorStep { ideal_t, ideal_r, cofactor, f_e })
}

/// Low-level entry: encrypt a ring element across an explicitly chosen
/// ideal containing it, `f_e = Ann(I_t).generator · (f_c / g_t) mod χ`.
pub fn encrypt_with_ideal(ring: &QuotientRing, f_c: &Poly, ideal_t: &IdealHandle) -> Result<Poly> {
    Ok(annihilator_step(ring, &ring.reduce(f_c)?, ideal_t.clone())?.f_e)
}

/// Full encryption. Returns the ciphertext, the key to transmit (beta may
/// have doubled), and the step-by-step trace.
pub fn encrypt(
    text: &str,
    alphabet: &Alphabet,
    p: u64,
    beta: u32,
) -> Result<(String, SecretKey, CipherTrace)> {
    encrypt_inner(text, alphabet, p, beta, None)
}

/// Encryption with the containing ideal forced, for reproducing traces
/// that pick a non-minimal ideal. The generator must divide the modulus
/// and the message polynomial.
pub fn encrypt_forcing_ideal(
    text: &str,
    alphabet: &Alphabet,
    p: u64,
    beta: u32,
    ideal_generator: &Poly,
) -> Result<(String, SecretKey, CipherTrace)> {
    encrypt_inner(text, alphabet, p, beta, Some(ideal_generator))
}

fn encrypt_inner(
    text: &str,
    alphabet: &Alphabet,
    p: u64,
    beta: u32,
    forced_ideal: Option<&Poly>,
) -> Result<(String, SecretKey, CipherTrace)> {
    check_key_ring(p, beta)?;
    let m = encode_text(text, alphabet)?;
    let digits = to_base(m, p);
    if digits.len() > beta as usize + 1 {
        return Err(Error::MessageTooLong {
            digits: digits.len(),
            p,
            max: beta as usize + 1,
        });
    }
    let f_c = poly_from_digits(p, &digits);
    let ring = QuotientRing::cyclic(p, beta)?;

    let (used_beta, path, step, f_e) = if let Some(gen) = forced_ideal {
        let ideal_t = ring.ideal_from_generator(gen)?;
        if !ring.contains(&ideal_t, &f_c)? {
            return Err(Error::NotInIdeal);
        }
        let s = annihilator_step(&ring, &f_c, ideal_t)?;
        let f_e = s.f_e.clone();
        (beta, CipherPath::Annihilator, Some(s), f_e)
    } else {
        match ring.classify(&f_c)? {
            ElementClass::Unit => {
                let inv = ring.inverse(&f_c)?;
                if inv != f_c || f_c.is_constant() {
                    // Constants 1 and -1 are their own inverse in every
                    // such ring; doubling cannot separate them, so they
                    // ship as-is.
                    (beta, CipherPath::UnitInverse, None, inv)
                } else {
                    let beta2 = 2 * beta;
                    check_key_ring(p, beta2)?;
                    let ring2 = QuotientRing::cyclic(p, beta2)?;
                    match ring2.classify(&f_c)? {
                        ElementClass::Unit => {
                            let inv2 = ring2.inverse(&f_c)?;
                            debug_assert_ne!(inv2, f_c);
                            (beta2, CipherPath::UnitInverseDoubled, None, inv2)
                        }
                        _ => {
                            let ideal_t = ring2.minimal_containing_ideal(&f_c)?;
                            let s = annihilator_step(&ring2, &f_c, ideal_t)?;
                            let f_e = s.f_e.clone();
                            (beta2, CipherPath::Annihilator, Some(s), f_e)
                        }
                    }
                }
            }
            class => {
                let ideal_t = if class == ElementClass::Zero {
                    ring.zero_ideal()
                } else {
                    ring.minimal_containing_ideal(&f_c)?
                };
                let s = annihilator_step(&ring, &f_c, ideal_t)?;
                let f_e = s.f_e.clone();
                (beta, CipherPath::Annihilator, Some(s), f_e)
            }
        }
    };

    let c = from_base(&digits_from_poly(&f_e), p);
    let ciphertext = render_number(c, alphabet)?;
    let key = SecretKey {
        p,
        beta: used_beta,
        len: text.chars().count(),
    };
    let trace = CipherTrace {
        m,
        digits_p: digit_string(&digits, p),
        f_c,
        path,
        ideal_t: step.as_ref().map(|s| s.ideal_t.generator().clone()),
        ideal_r: step.as_ref().map(|s| s.ideal_r.generator().clone()),
        cofactor: step.as_ref().map(|s| s.cofactor.clone()),
        f_e,
        c,
        ciphertext: ciphertext.clone(),
    };
    Ok((ciphertext, key, trace))
}

/// Render a number as alphabet symbols, one per digit, no padding.
fn render_number(c: u128, alphabet: &Alphabet) -> Result<String> {
    to_base(c, alphabet.radix())
        .into_iter()
        .map(|d| alphabet.symbol(d))
        .collect()
}

/// Decrypt into the candidate set, enumerating at most p^6 combinations
/// per containing ideal.
pub fn decrypt(ciphertext: &str, alphabet: &Alphabet, key: &SecretKey) -> Result<Vec<String>> {
    decrypt_with_cap(ciphertext, alphabet, key, DEFAULT_CANDIDATE_CAP_EXP)
}

/// Candidate-set decryption.
///
/// Unit ciphertexts invert uniquely. Otherwise, for each ideal `I_r`
/// containing `f_e`, with `I_t = Ann(I_r)`, the cofactors `h` solving
/// `g_r·h ≡ f_e (mod χ)` with `deg h < deg g_r` are `h0 + g_t·w`: the part
/// of `h` modulo `g_t` is determined (g_r is invertible there), the rest is
/// enumerated. Ideals whose free dimension exceeds `cap_exp` are skipped;
/// for any ciphertext this cipher emits, the originating ideal stays within
/// the default cap, so the true plaintext is always among the candidates.
pub fn decrypt_with_cap(
    ciphertext: &str,
    alphabet: &Alphabet,
    key: &SecretKey,
    cap_exp: u32,
) -> Result<Vec<String>> {
    check_key_ring(key.p, key.beta)?;
    let p = key.p;
    let c = encode_text(ciphertext, alphabet)?;
    let digits = to_base(c, p);
    if digits.len() > key.beta as usize + 1 {
        return Err(Error::NoCandidates);
    }
    let f_e = poly_from_digits(p, &digits);
    let ring = QuotientRing::cyclic(p, key.beta)?;

    if ring.classify(&f_e)? == ElementClass::Unit {
        let f_c = ring.inverse(&f_e)?;
        let m = from_base(&digits_from_poly(&f_c), p);
        return match decode_text(m, key.len, alphabet) {
            Ok(t) => Ok(vec![t]),
            Err(_) => Err(Error::NoCandidates),
        };
    }

    let mut found: BTreeSet<String> = BTreeSet::new();
    let mut truncated = false;
    for ideal_r in ring.ideals() {
        if !ring.contains(&ideal_r, &f_e)? {
            continue;
        }
        let g_r = ideal_r.generator();
        let ideal_t = ring.annihilator(&ideal_r);
        let g_t = ideal_t.generator();
        let deg_r = g_r.degree().unwrap_or(0) as i64;
        let deg_t = g_t.degree().unwrap_or(0) as i64;
        // h modulo g_t is pinned by the equation.
        let h0 = if g_t.is_one() {
            f_e.clone()
        } else {
            let (g, u, _) = g_r.xgcd(g_t)?;
            debug_assert!(g.is_one(), "complementary squarefree supports");
            f_e.mul(&u)?.rem(g_t)?
        };
        let free = deg_r - deg_t;
        if free <= 0 {
            let fits = h0.degree().is_none_or(|d| (d as i64) < deg_r);
            if fits {
                push_candidate(&ring, g_t, &h0, key, alphabet, &mut found)?;
            }
            continue;
        }
        if free as u32 > cap_exp {
            truncated = true;
            continue;
        }
        // Enumerate w with deg w < free: h = h0 + g_t·w.
        let mut w_coeffs = vec![0u64; free as usize];
        loop {
            let w = Poly::new(p, w_coeffs.clone());
            let h = h0.add(&w.mul(g_t)?)?;
            push_candidate(&ring, g_t, &h, key, alphabet, &mut found)?;
            let mut i = 0;
            loop {
                if i == w_coeffs.len() {
                    break;
                }
                w_coeffs[i] += 1;
                if w_coeffs[i] < p {
                    break;
                }
                w_coeffs[i] = 0;
                i += 1;
            }
            if i == w_coeffs.len() {
                break;
            }
        }
    }
    if found.is_empty() {
        return Err(if truncated {
            Error::CandidateExplosion { base: p, exp: cap_exp }
        } else {
            Error::NoCandidates
        });
    }
    Ok(found.into_iter().collect())
}

fn push_candidate(
    ring: &QuotientRing,
    g_t: &Poly,
    h: &Poly,
    key: &SecretKey,
    alphabet: &Alphabet,
    found: &mut BTreeSet<String>,
) -> Result<()> {
    let d = ring.reduce(&g_t.mul(h)?)?;
    let m = from_base(&digits_from_poly(&d), key.p);
    if let Ok(text) = decode_text(m, key.len, alphabet) {
        found.insert(text);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::default_ten()
    }

    #[test]
    fn text_codec() {
        assert_eq!(encode_text("BJ", &ab()).unwrap(), 19);
        assert_eq!(encode_text("DECADE", &ab()).unwrap(), 342034);
        assert_eq!(encode_text("ABBA", &ab()).unwrap(), 110);
        assert_eq!(decode_text(110, 4, &ab()).unwrap(), "ABBA");
        assert!(matches!(
            decode_text(110, 2, &ab()).unwrap_err(),
            Error::LengthOverflow { needed: 3, len: 2 }
        ));
        assert!(matches!(
            encode_text("BX", &ab()).unwrap_err(),
            Error::UnknownSymbol('X')
        ));
    }

    #[test]
    fn base_conversion() {
        assert_eq!(to_base(19, 3), vec![2, 0, 1]);
        assert_eq!(to_base(110, 5), vec![4, 2, 0]);
        assert_eq!(to_base(0, 7), vec![0]);
        assert_eq!(from_base(&[2, 0, 1], 3), 19);
        assert_eq!(from_base(&[4, 2, 0], 5), 110);
    }

    #[test]
    fn digit_poly_bridge() {
        let f = poly_from_digits(3, &[2, 0, 1]);
        assert_eq!(f, Poly::parse(3, "2x^2+1").unwrap());
        assert_eq!(digits_from_poly(&f), vec![2, 0, 1]);
        assert_eq!(digits_from_poly(&Poly::zero(3)), vec![0]);
    }

    #[test]
    fn encrypt_annihilator_path() {
        let (ct, key, trace) = encrypt("BJ", &ab(), 3, 2).unwrap();
        assert_eq!(ct, "G");
        assert_eq!(key, SecretKey { p: 3, beta: 2, len: 2 });
        assert_eq!(trace.path, CipherPath::Annihilator);
        assert_eq!(trace.m, 19);
        assert_eq!(trace.digits_p, "201");
        assert_eq!(trace.f_c, Poly::parse(3, "2x^2+1").unwrap());
        assert_eq!(trace.ideal_t.as_ref().unwrap(), &Poly::parse(3, "x^2+2").unwrap());
        assert_eq!(trace.ideal_r.as_ref().unwrap(), &Poly::parse(3, "x").unwrap());
        assert_eq!(trace.cofactor.as_ref().unwrap(), &Poly::parse(3, "2").unwrap());
        assert_eq!(trace.f_e, Poly::parse(3, "2x").unwrap());
        assert_eq!(trace.c, 6);
    }

    #[test]
    fn encrypt_annihilator_path_base5() {
        let (ct, key, trace) = encrypt("ABBA", &ab(), 5, 2).unwrap();
        assert_eq!(ct, "FD");
        assert_eq!(key, SecretKey { p: 5, beta: 2, len: 4 });
        assert_eq!(trace.f_c, Poly::parse(5, "4x^2+2x").unwrap());
        assert_eq!(trace.f_e, Poly::parse(5, "2x^2+3").unwrap());
        assert_eq!(trace.c, 53);
    }

    #[test]
    fn encrypt_unit_path() {
        let (ct, key, trace) = encrypt("ABBA", &ab(), 3, 4).unwrap();
        assert_eq!(trace.path, CipherPath::UnitInverse);
        assert_eq!(trace.f_c, Poly::parse(3, "x^4+x^3+2").unwrap());
        assert_eq!(trace.f_e, Poly::parse(3, "x^4+x+2").unwrap());
        assert_eq!(to_base(trace.c, 3), vec![1, 0, 0, 1, 2]);
        assert_eq!(trace.c, 86);
        assert_eq!(ct, "IG");
        assert_eq!(key.beta, 4);
    }

    #[test]
    fn encrypt_doubled_unit_path() {
        let (ct, key, trace) = encrypt("CF", &ab(), 3, 2).unwrap();
        assert_eq!(ct, "JH");
        assert_eq!(key, SecretKey { p: 3, beta: 4, len: 2 });
        assert_eq!(trace.path, CipherPath::UnitInverseDoubled);
        assert_eq!(trace.f_c, Poly::parse(3, "2x^2+2x+1").unwrap());
        assert_eq!(trace.f_e, Poly::parse(3, "x^4+x^2+2x+1").unwrap());
        assert_eq!(trace.c, 97);
    }

    #[test]
    fn encrypt_with_explicit_ideal() {
        let (ct, key, trace) =
            encrypt_forcing_ideal("DECADE", &ab(), 7, 6, &Poly::parse(7, "x^2+2x").unwrap())
                .unwrap();
        assert_eq!(ct, "DJEDID");
        assert_eq!(key, SecretKey { p: 7, beta: 6, len: 6 });
        assert_eq!(
            trace.cofactor.as_ref().unwrap(),
            &Poly::parse(7, "2x^4+2x^3+5x^2+1").unwrap()
        );
        assert_eq!(
            trace.f_e,
            Poly::parse(7, "3x^6+2x^5+3x^4+x^3+5x^2+4x+3").unwrap()
        );
        assert_eq!(trace.c, 394383);
    }

    #[test]
    fn encrypt_with_ideal_low_level() {
        let ring = QuotientRing::cyclic(3, 2).unwrap();
        let it = ring.ideal_from_generator(&Poly::parse(3, "x^2-1").unwrap()).unwrap();
        let fe = encrypt_with_ideal(&ring, &Poly::parse(3, "2x^2+1").unwrap(), &it).unwrap();
        assert_eq!(fe, Poly::parse(3, "2x").unwrap());

        let zero = encrypt_with_ideal(&ring, &Poly::zero(3), &ring.zero_ideal()).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn encrypt_errors() {
        assert!(matches!(encrypt("BJ", &ab(), 4, 2), Err(Error::NotPrime(4))));
        assert!(matches!(
            encrypt("BJ", &ab(), 3, 3),
            Err(Error::SquarefreeViolation { p: 3, beta: 3 })
        ));
        assert!(matches!(
            encrypt("JJJJJJ", &ab(), 3, 2),
            Err(Error::MessageTooLong { .. })
        ));
    }

    #[test]
    fn decrypt_unit_path() {
        let key = SecretKey { p: 3, beta: 4, len: 4 };
        assert_eq!(decrypt("IG", &ab(), &key).unwrap(), vec!["ABBA"]);
        let key = SecretKey { p: 3, beta: 4, len: 2 };
        assert_eq!(decrypt("JH", &ab(), &key).unwrap(), vec!["CF"]);
    }

    #[test]
    fn decrypt_annihilator_path() {
        let key = SecretKey { p: 5, beta: 2, len: 4 };
        let candidates = decrypt("FD", &ab(), &key).unwrap();
        assert!(candidates.contains(&"ABBA".to_string()), "{candidates:?}");

        let key = SecretKey { p: 3, beta: 2, len: 2 };
        let candidates = decrypt("G", &ab(), &key).unwrap();
        assert!(candidates.contains(&"BJ".to_string()), "{candidates:?}");
    }

    #[test]
    fn decrypt_zero_message() {
        let (ct, key, _) = encrypt("AAA", &ab(), 3, 2).unwrap();
        assert_eq!(ct, "A");
        let candidates = decrypt(&ct, &ab(), &key).unwrap();
        assert!(candidates.contains(&"AAA".to_string()));
    }

    #[test]
    fn unit_constant_round_trip() {
        // f_c = 1 is its own inverse everywhere; no doubling applies.
        let (ct, key, trace) = encrypt("B", &ab(), 3, 2).unwrap();
        assert_eq!(trace.path, CipherPath::UnitInverse);
        assert_eq!(key.beta, 2);
        assert_eq!(decrypt(&ct, &ab(), &key).unwrap(), vec!["B"]);
    }

    #[test]
    fn doubled_path_can_hit_zero_divisor() {
        // f_c = x^2+1 squares to 1 in the beta=2 ring but shares the factor
        // x^2+1 with the doubled modulus, so the annihilator path runs in
        // the doubled ring.
        let m = from_base(&[1, 0, 1], 3);
        let text = decode_text(m, 2, &ab()).unwrap();
        assert_eq!(text, "BA");
        let (ct, key, trace) = encrypt(&text, &ab(), 3, 2).unwrap();
        assert_eq!(trace.path, CipherPath::Annihilator);
        assert_eq!(key.beta, 4);
        let candidates = decrypt(&ct, &ab(), &key).unwrap();
        assert!(candidates.contains(&text), "{candidates:?}");
    }

    #[test]
    fn doubling_always_breaks_involutions() {
        // Exhaustive search at p=3, beta=2: every nonconstant f with
        // f^2 = 1 is, in the doubled ring, either a unit with a different
        // inverse or a zero divisor (then the annihilator path applies).
        // No fixed point of inversion survives the doubling.
        let ring = QuotientRing::cyclic(3, 2).unwrap();
        let doubled = QuotientRing::cyclic(3, 4).unwrap();
        let mut nonconstant = 0;
        for f in ring.elements() {
            if ring.mul(&f, &f).unwrap() != Poly::one(3) || f.is_constant() {
                continue;
            }
            nonconstant += 1;
            match doubled.classify(&f).unwrap() {
                ElementClass::Unit => {
                    assert_ne!(doubled.inverse(&f).unwrap(), f, "{f}");
                }
                ElementClass::ZeroDivisor => {
                    // x^2+1 and 2x^2+2 divide the doubled modulus.
                    assert!(!f.gcd(doubled.modulus()).unwrap().is_one());
                }
                ElementClass::Zero => unreachable!(),
            }
        }
        assert_eq!(nonconstant, 6);
    }

    #[test]
    fn wide_alphabet_uses_its_own_radix() {
        let alphabet = Alphabet::new("ABCDEFGHIJKL".chars().collect()).unwrap();
        assert_eq!(alphabet.radix(), 12);
        let m = encode_text("LB", &alphabet).unwrap();
        assert_eq!(m, 11 * 12 + 1);
        assert_eq!(decode_text(m, 3, &alphabet).unwrap(), "ALB");

        let (ct, key, _) = encrypt("CLD", &alphabet, 5, 4).unwrap();
        let candidates = decrypt(&ct, &alphabet, &key).unwrap();
        assert!(candidates.contains(&"CLD".to_string()), "{candidates:?}");
    }

    #[test]
    fn path_detectability() {
        // Annihilator-path output is always a zero divisor.
        for (text, p, beta) in [("BJ", 3u64, 2u32), ("ABBA", 5, 2), ("J", 3, 2)] {
            let (_, key, trace) = encrypt(text, &ab(), p, beta).unwrap();
            let ring = QuotientRing::cyclic(p, key.beta).unwrap();
            assert_ne!(ring.classify(&trace.f_e).unwrap(), ElementClass::Unit);
        }
        let (_, key, trace) = encrypt("ABBA", &ab(), 3, 4).unwrap();
        let ring = QuotientRing::cyclic(3, key.beta).unwrap();
        assert_eq!(ring.classify(&trace.f_e).unwrap(), ElementClass::Unit);
    }

    #[test]
    fn trace_json_has_all_steps() {
        let (_, _, trace) = encrypt("BJ", &ab(), 3, 2).unwrap();
        let v = trace.to_json();
        assert_eq!(v["digits_p"], "201");
        assert_eq!(v["path"], "annihilator");
        assert_eq!(v["ideal_r"], "(x)");
    }
}

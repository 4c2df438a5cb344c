//! Constructive enumeration of all finite BL-algebras up to isomorphism for
//! n <= 6, an independent brute-force enumerator for n <= 4, census
//! reporting, and the catalog-wide ring scan.

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::comet::classify;
use crate::construct::{
    direct_product, mv_chain, ordinal_sum, ring_ideal_lattice, RingDescriptor,
};
use crate::error::{Error, Result};

/// Enumeration is bounded: sizes 2 through 6.
pub const MIN_SIZE: usize = 2;
pub const MAX_SIZE: usize = 6;

/// Brute force is bounded separately by its search-space growth.
pub const MAX_BRUTE_FORCE_SIZE: usize = 4;

/// One generated algebra together with the expression that produced it.
#[derive(Debug, Clone)]
pub struct EnumeratedAlgebra {
    pub algebra: FiniteAlgebra,
    pub provenance: String,
}

fn check_size(n: usize, max: usize) -> Result<()> {
    if (MIN_SIZE..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::SizeOutOfRange(n, MIN_SIZE, max))
    }
}

/// Multisets of integers >= 2 (ascending) whose product is n.
fn multiplicative_partitions(n: usize, min: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 1 {
        return vec![vec![]];
    }
    for d in min..=n {
        if n.is_multiple_of(d) {
            for mut rest in multiplicative_partitions(n / d, d) {
                let mut v = vec![d];
                v.append(&mut rest);
                out.push(v);
            }
        }
    }
    out
}

/// The MV-algebras of a given size: one direct product of MV-chains per
/// multiplicative partition of n.
fn mv_base(n: usize) -> Vec<EnumeratedAlgebra> {
    multiplicative_partitions(n, 2)
        .into_iter()
        .map(|parts| {
            let mut alg = mv_chain(parts[0]);
            for &s in &parts[1..] {
                alg = direct_product(&alg, &mv_chain(s)).expect("product of MV-chains");
            }
            let names: Vec<String> = parts
                .iter()
                .map(|s| format!("Z_{}", 1u64 << (s - 1)))
                .collect();
            EnumeratedAlgebra {
                algebra: alg,
                provenance: format!("Id({})", names.join("x")),
            }
        })
        .collect()
}

fn wrap(provenance: &str) -> String {
    if provenance.contains('⊞') {
        format!("({provenance})")
    } else {
        provenance.to_string()
    }
}

/// Every candidate produced while generating size n by the ordinal-sum
/// recipe, before isomorphism dedup: the MV base plus every sum `C ⊞ B`
/// with `C` a smaller BL-chain and `B` an already-enumerated BL-algebra.
pub fn generate_candidates(n: usize) -> Result<Vec<EnumeratedAlgebra>> {
    check_size(n, MAX_SIZE)?;
    let memo = build_memo(n)?;
    Ok(sum_candidates(&memo, n))
}

fn build_memo(n: usize) -> Result<Vec<Vec<EnumeratedAlgebra>>> {
    let mut memo: Vec<Vec<EnumeratedAlgebra>> = vec![Vec::new(); n + 1];
    for size in MIN_SIZE..=n {
        let mut candidates = sum_candidates(&memo, size);
        candidates.extend(product_candidates(&memo, size));
        memo[size] = dedupe(candidates);
    }
    Ok(memo)
}

fn sum_candidates(memo: &[Vec<EnumeratedAlgebra>], size: usize) -> Vec<EnumeratedAlgebra> {
    let mut out = mv_base(size);
    for k in MIN_SIZE..size {
        let b_size = size - k + 1;
        let chains: Vec<&EnumeratedAlgebra> = memo[k]
            .iter()
            .filter(|e| e.algebra.check_axioms().chain)
            .collect();
        for c in chains {
            for b in &memo[b_size] {
                let sum = ordinal_sum(&c.algebra, &b.algebra)
                    .expect("ordinal sum of a chain and a BL-algebra");
                out.push(EnumeratedAlgebra {
                    algebra: sum,
                    provenance: format!("{} ⊞ {}", wrap(&c.provenance), wrap(&b.provenance)),
                });
            }
        }
    }
    out
}

/// Direct products of strictly smaller classes, one per factorization of
/// the size. Every finite BL-algebra is a direct product of comets, and the
/// non-comet factors themselves decompose further, so closing the ordinal
/// sums under binary products completes the generation. The first size this
/// adds anything beyond the MV base is 6, where the product of the 2-chain
/// and the 3-element non-MV chain is not reachable as an ordinal sum (it
/// has two atoms, an ordinal sum has one).
fn product_candidates(memo: &[Vec<EnumeratedAlgebra>], size: usize) -> Vec<EnumeratedAlgebra> {
    let mut out = Vec::new();
    for a_size in MIN_SIZE..=size {
        if !size.is_multiple_of(a_size) {
            continue;
        }
        let b_size = size / a_size;
        if b_size < a_size || b_size >= size {
            continue;
        }
        for a in &memo[a_size] {
            for b in &memo[b_size] {
                let prod = direct_product(&a.algebra, &b.algebra)
                    .expect("direct product of BL-algebras");
                out.push(EnumeratedAlgebra {
                    algebra: prod,
                    provenance: format!("{} x {}", wrap(&a.provenance), wrap(&b.provenance)),
                });
            }
        }
    }
    out
}

fn dedupe(candidates: Vec<EnumeratedAlgebra>) -> Vec<EnumeratedAlgebra> {
    let mut kept: Vec<EnumeratedAlgebra> = Vec::new();
    for cand in candidates {
        let duplicate = kept
            .iter()
            .any(|k| k.algebra.isomorphic(&cand.algebra).expect("within size cap"));
        if !duplicate {
            kept.push(cand);
        }
    }
    kept
}

/// All BL-algebras with n elements up to isomorphism, each with the first
/// generating expression found for it.
pub fn enumerate_bl(n: usize) -> Result<Vec<EnumeratedAlgebra>> {
    check_size(n, MAX_SIZE)?;
    Ok(build_memo(n)?.swap_remove(n))
}

/// Census counts for one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCensus {
    pub n: usize,
    pub bl_algebras: usize,
    pub bl_chains: usize,
    pub bl_comets: usize,
    pub mv_algebras: usize,
    pub mv_chains: usize,
    pub representatives: Vec<String>,
}

/// Per-size counts of isomorphism classes, with provenance expressions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub sizes: Vec<SizeCensus>,
}

impl CensusReport {
    pub fn row(&self, n: usize) -> Option<&SizeCensus> {
        self.sizes.iter().find(|s| s.n == n)
    }

    /// Plain-text matrix: one row per family, one column per size.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{:<14}", ""));
        for s in &self.sizes {
            out.push_str(&format!("{:>8}", format!("n={}", s.n)));
        }
        out.push('\n');
        type Row = (&'static str, fn(&SizeCensus) -> usize);
        let rows: [Row; 5] = [
            ("MV-algebras", |s| s.mv_algebras),
            ("MV-chains", |s| s.mv_chains),
            ("BL-algebras", |s| s.bl_algebras),
            ("BL-chains", |s| s.bl_chains),
            ("BL-comets", |s| s.bl_comets),
        ];
        for (label, get) in rows {
            out.push_str(&format!("{label:<14}"));
            for s in &self.sizes {
                out.push_str(&format!("{:>8}", get(s)));
            }
            out.push('\n');
        }
        out
    }
}

/// Enumerate and classify everything up to `nmax`.
pub fn census(nmax: usize) -> Result<CensusReport> {
    check_size(nmax, MAX_SIZE)?;
    let mut sizes = Vec::new();
    for n in MIN_SIZE..=nmax {
        let classes = enumerate_bl(n)?;
        let mut row = SizeCensus {
            n,
            bl_algebras: 0,
            bl_chains: 0,
            bl_comets: 0,
            mv_algebras: 0,
            mv_chains: 0,
            representatives: Vec::new(),
        };
        for e in &classes {
            let profile = classify(&e.algebra)?;
            row.bl_algebras += 1;
            if profile.is_chain {
                row.bl_chains += 1;
            }
            if profile.is_comet {
                row.bl_comets += 1;
            }
            let report = e.algebra.check_axioms();
            if report.mv {
                row.mv_algebras += 1;
                if profile.is_chain {
                    row.mv_chains += 1;
                }
            }
            row.representatives.push(e.provenance.clone());
        }
        sizes.push(row);
    }
    Ok(CensusReport { sizes })
}

/// Independent oracle: enumerate every bounded lattice on n labeled
/// elements, every commutative monotone monoid table with unit top, derive
/// the residual, and keep what satisfies prelinearity and divisibility.
/// Deduped by isomorphism.
pub fn brute_force_enumerate(n: usize) -> Result<Vec<FiniteAlgebra>> {
    brute_force_enumerate_with_cap(n, MAX_BRUTE_FORCE_SIZE)
}

/// Brute force with an explicit size cap. The default cap is 4; size 5 is
/// reachable but slow (the search space grows as 2^(n(n-1)) lattices times
/// n^(n(n-1)/2) monoid tables).
pub fn brute_force_enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<FiniteAlgebra>> {
    check_size(n, cap)?;
    let mut found: Vec<FiniteAlgebra> = Vec::new();
    for leq in bounded_lattices(n) {
        let mut odot = vec![vec![0usize; n]; n];
        for x in 0..n {
            odot[x][n - 1] = x;
            odot[n - 1][x] = x;
        }
        // Free entries: unordered pairs (i, j) with i <= j < n-1.
        let free: Vec<(usize, usize)> = (0..n - 1)
            .flat_map(|i| (i..n - 1).map(move |j| (i, j)))
            .collect();
        let mut assignment = vec![0usize; free.len()];
        loop {
            for (k, &(i, j)) in free.iter().enumerate() {
                odot[i][j] = assignment[k];
                odot[j][i] = assignment[k];
            }
            if let Some(alg) = try_residuated(n, &leq, &odot) {
                let report = alg.check_axioms();
                if report.bl && !found.iter().any(|f| f.isomorphic(&alg).unwrap()) {
                    found.push(alg);
                }
            }
            // Next assignment in lexicographic order.
            let mut k = 0;
            loop {
                if k == free.len() {
                    break;
                }
                assignment[k] += 1;
                if assignment[k] < n {
                    break;
                }
                assignment[k] = 0;
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
    }
    Ok(found)
}

/// All reflexive, antisymmetric, transitive `leq` with bottom 0, top n-1,
/// and binary meets and joins.
fn bounded_lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    let strict: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let bits = strict.len();
    let mut out = Vec::new();
    'masks: for mask in 0u32..(1 << bits) {
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            leq[x][x] = true;
        }
        for (k, &(i, j)) in strict.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i][j] = true;
            }
        }
        for x in 0..n {
            if !leq[0][x] || !leq[x][n - 1] {
                continue 'masks;
            }
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    continue 'masks;
                }
                for z in 0..n {
                    if leq[x][y] && leq[y][z] && !leq[x][z] {
                        continue 'masks;
                    }
                }
            }
        }
        // Meets and joins must exist.
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> =
                    (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
                if !lower.iter().any(|&m| lower.iter().all(|&z| leq[z][m])) {
                    continue 'masks;
                }
                let upper: Vec<usize> =
                    (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
                if !upper.iter().any(|&m| upper.iter().all(|&z| leq[m][z])) {
                    continue 'masks;
                }
            }
        }
        out.push(leq);
    }
    out
}

/// Derive the residual `x -> y = max{z : x⊙z <= y}` and validate the whole
/// package; `None` when the table is not a residuated lattice.
fn try_residuated(n: usize, leq: &[Vec<bool>], odot: &[Vec<usize>]) -> Option<FiniteAlgebra> {
    // Quick monoid checks before the expensive construction.
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if odot[odot[x][y]][z] != odot[x][odot[y][z]] {
                    return None;
                }
                if leq[x][y] && !leq[odot[x][z]][odot[y][z]] {
                    return None;
                }
            }
        }
    }
    let mut imp = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            let sat: Vec<usize> = (0..n).filter(|&z| leq[odot[x][z]][y]).collect();
            let max = sat.iter().copied().find(|&m| sat.iter().all(|&z| leq[z][m]))?;
            imp[x][y] = max;
        }
    }
    FiniteAlgebra::from_tables(
        crate::algebra::default_names(n),
        leq.to_vec(),
        odot.to_vec(),
        imp,
    )
    .ok()
}

/// Scan results for one catalog ring.
#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub descriptor: String,
    pub ideal_count: usize,
    pub atoms: usize,
    pub coatoms: usize,
    pub is_bl: bool,
    pub is_mv: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
}

/// Compute `Id(R)` for every descriptor and verify the lattice facts that
/// hold for every catalog ring: it is a BL- and an MV-algebra, double
/// annihilation is the identity, every coatom is the annihilator of an
/// atom, and the size/extremal counts match the local component structure.
/// The first failed check aborts with `ScanViolation`.
pub fn ring_scan(descriptors: &[RingDescriptor], cap: u128) -> Result<ScanReport> {
    let mut entries = Vec::new();
    for desc in descriptors {
        let name = desc.to_string();
        let violation = |check: &str| Error::ScanViolation {
            ring: name.clone(),
            check: check.to_string(),
        };
        let alg = ring_ideal_lattice(desc, cap)?;
        let report = alg.check_axioms();
        if !report.bl {
            return Err(violation("Id(R) is not a BL-algebra"));
        }
        if !report.mv {
            return Err(violation("Id(R) is not an MV-algebra"));
        }
        for x in 0..alg.n() {
            if alg.star(alg.star(x)) != x {
                return Err(violation("Ann(Ann(I)) != I"));
            }
        }
        let atoms = alg.minimal_elements();
        let coatoms = alg.maximal_elements();
        for &m in &coatoms {
            if !atoms.iter().any(|&j| alg.star(j) == m) {
                return Err(violation("coatom is not the annihilator of an atom"));
            }
        }
        let lengths = desc.component_chain_lengths()?;
        let expected_n: u128 = lengths.iter().map(|&b| b as u128).product();
        if expected_n != alg.n() as u128 {
            return Err(violation("ideal count differs from the chain-length product"));
        }
        if atoms.len() != lengths.len() || coatoms.len() != lengths.len() {
            return Err(violation("atom/coatom count differs from the component count"));
        }
        entries.push(ScanEntry {
            descriptor: name,
            ideal_count: alg.n(),
            atoms: atoms.len(),
            coatoms: coatoms.len(),
            is_bl: report.bl,
            is_mv: report.mv,
        });
    }
    Ok(ScanReport { entries })
}

/// The default scan catalog: all Zn(m) for 2 <= m <= 64, the cyclic
/// quotients for p in {2,3,5,7} and beta <= 6, and products of two and
/// three small Zn components.
pub fn default_scan_catalog() -> Vec<RingDescriptor> {
    let mut out: Vec<RingDescriptor> = (2..=64).map(RingDescriptor::Zn).collect();
    for p in [2u64, 3, 5, 7] {
        for beta in 1..=6u32 {
            let mut coeffs = vec![0u64; beta as usize + 2];
            coeffs[1] = p - 1;
            coeffs[beta as usize + 1] = 1;
            out.push(RingDescriptor::Quot {
                p,
                modulus: crate::poly::Poly::new(p, coeffs),
            });
        }
    }
    let base = [2u64, 3, 4, 8, 9];
    for (i, &a) in base.iter().enumerate() {
        for &b in &base[i..] {
            out.push(RingDescriptor::Prod(vec![
                RingDescriptor::Zn(a),
                RingDescriptor::Zn(b),
            ]));
        }
    }
    for (i, &a) in base.iter().enumerate() {
        for (j, &b) in base[i..].iter().enumerate() {
            for &c in &base[i + j..] {
                out.push(RingDescriptor::Prod(vec![
                    RingDescriptor::Zn(a),
                    RingDescriptor::Zn(b),
                    RingDescriptor::Zn(c),
                ]));
            }
        }
    }
    out.push(RingDescriptor::Prod(vec![
        RingDescriptor::Zn(4),
        RingDescriptor::Quot {
            p: 2,
            modulus: crate::poly::Poly::parse(2, "x^2-x").unwrap(),
        },
    ]));
    out
}

//! Idempotent structure, the set D(L), pivot, comet/chain classification and
//! ordinal-sum decomposition of finite BL-algebras.

use serde::Serialize;

use crate::algebra::FiniteAlgebra;
use crate::construct::ordinal_sum;
use crate::error::{Error, Result};

/// Where an algebra falls in the BL landscape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classification {
    MvChain,
    UnorderedMv,
    BlChain,
    CometNonChain,
    NonCometNonMv,
}

/// Full comet profile of a BL-algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CometProfile {
    pub idempotents: Vec<usize>,
    pub d_set: Vec<usize>,
    pub pivot: usize,
    pub is_comet: bool,
    pub is_chain: bool,
    pub classification: Classification,
}

/// One verified decomposition `L = lower ⊞ upper` at an interior cut.
#[derive(Debug, Clone)]
pub struct OrdinalSplit {
    pub cut: usize,
    pub lower: FiniteAlgebra,
    pub upper: FiniteAlgebra,
}

fn require_bl(alg: &FiniteAlgebra) -> Result<()> {
    if alg.check_axioms().bl {
        Ok(())
    } else {
        Err(Error::NotBl)
    }
}

/// Elements with `x ⊙ x = x`.
pub fn idempotents(alg: &FiniteAlgebra) -> Result<Vec<usize>> {
    require_bl(alg)?;
    Ok(idempotents_unchecked(alg))
}

fn idempotents_unchecked(alg: &FiniteAlgebra) -> Vec<usize> {
    (0..alg.n()).filter(|&x| alg.odot(x, x) == x).collect()
}

/// D(L): idempotents comparable to every idempotent whose idempotent
/// down-set is totally ordered.
pub fn d_set(alg: &FiniteAlgebra) -> Result<Vec<usize>> {
    require_bl(alg)?;
    Ok(d_set_unchecked(alg))
}

fn d_set_unchecked(alg: &FiniteAlgebra) -> Vec<usize> {
    let idem = idempotents_unchecked(alg);
    idem.iter()
        .copied()
        .filter(|&x| {
            let comparable_to_all = idem
                .iter()
                .all(|&y| alg.leq(x, y) || alg.leq(y, x));
            if !comparable_to_all {
                return false;
            }
            let down: Vec<usize> = idem.iter().copied().filter(|&y| alg.leq(y, x)).collect();
            down.iter()
                .all(|&a| down.iter().all(|&b| alg.leq(a, b) || alg.leq(b, a)))
        })
        .collect()
}

/// The greatest element of D(L). `NoGreatestElement` would signal a D(L)
/// with several maximal members, which no finite BL-algebra in the corpus
/// exhibits; it is detected rather than papered over.
pub fn pivot(alg: &FiniteAlgebra) -> Result<usize> {
    require_bl(alg)?;
    pivot_unchecked(alg)
}

fn pivot_unchecked(alg: &FiniteAlgebra) -> Result<usize> {
    let d = d_set_unchecked(alg);
    d.iter()
        .copied()
        .find(|&m| d.iter().all(|&y| alg.leq(y, m)))
        .ok_or(Error::NoGreatestElement)
}

/// Compute the full profile of a BL-algebra.
pub fn classify(alg: &FiniteAlgebra) -> Result<CometProfile> {
    let report = alg.check_axioms();
    if !report.bl {
        return Err(Error::NotBl);
    }
    let idem = idempotents_unchecked(alg);
    let d = d_set_unchecked(alg);
    let pivot = pivot_unchecked(alg)?;
    let is_comet = pivot != alg.bottom();
    let is_chain = report.chain;
    let classification = match (report.mv, is_chain, is_comet) {
        (true, true, _) => Classification::MvChain,
        (true, false, _) => Classification::UnorderedMv,
        (false, true, _) => Classification::BlChain,
        (false, false, true) => Classification::CometNonChain,
        (false, false, false) => Classification::NonCometNonMv,
    };
    // An MV comet is exactly an MV-chain.
    debug_assert_eq!(report.mv && is_comet, report.mv && is_chain);
    Ok(CometProfile {
        idempotents: idem,
        d_set: d,
        pivot,
        is_comet,
        is_chain,
        classification,
    })
}

/// All interior cuts at which the algebra decomposes as an ordinal sum,
/// each verified by reconstructing the original tables.
pub fn ordinal_split(alg: &FiniteAlgebra) -> Result<Vec<OrdinalSplit>> {
    require_bl(alg)?;
    let n = alg.n();
    let mut out = Vec::new();
    'cuts: for c in 0..n {
        if c == alg.bottom() || c == alg.top() || alg.odot(c, c) != c {
            continue;
        }
        if !(0..n).all(|x| alg.leq(x, c) || alg.leq(c, x)) {
            continue;
        }
        let lower_set: Vec<usize> = (0..n).filter(|&x| alg.leq(x, c)).collect();
        let upper_set: Vec<usize> = (0..n).filter(|&x| alg.leq(c, x)).collect();
        // Cross pairs must multiply to the lower element.
        for &x in &lower_set {
            for &y in &upper_set {
                if x != c && alg.odot(x, y) != x {
                    continue 'cuts;
                }
            }
        }
        // Renumber: bottom..cut for the lower part, cut..top for the upper.
        let mut lower_elems: Vec<usize> = lower_set.iter().copied().filter(|&x| x != c).collect();
        lower_elems.push(c);
        let mut upper_elems = vec![c];
        upper_elems.extend(upper_set.iter().copied().filter(|&x| x != c));

        let lower = match subalgebra(alg, &lower_elems, true) {
            Ok(a) => a,
            Err(_) => continue,
        };
        let upper = match subalgebra(alg, &upper_elems, false) {
            Ok(a) => a,
            Err(_) => continue,
        };
        let rebuilt = match ordinal_sum(&lower, &upper) {
            Ok(a) => a,
            Err(_) => continue,
        };
        // Mapping: sum index -> original index.
        let mut back = lower_elems.clone();
        back.extend(upper_elems.iter().skip(1));
        let same = (0..n).all(|i| {
            (0..n).all(|j| {
                alg.leq(back[i], back[j]) == rebuilt.leq(i, j)
                    && alg.odot(back[i], back[j]) == back[rebuilt.odot(i, j)]
                    && alg.imp(back[i], back[j]) == back[rebuilt.imp(i, j)]
            })
        });
        if same {
            out.push(OrdinalSplit { cut: c, lower, upper });
        }
    }
    Ok(out)
}

/// Restrict the tables to `elems` (which must contain bottom-to-top order
/// with the new top/bottom at the ends). In the lower part the implication
/// between comparable elements is re-pointed at the new top.
fn subalgebra(alg: &FiniteAlgebra, elems: &[usize], lower_part: bool) -> Result<FiniteAlgebra> {
    let k = elems.len();
    let pos = |e: usize| elems.iter().position(|&x| x == e);
    let names = elems.iter().map(|&e| alg.name(e).to_string()).collect();
    let mut leq = vec![vec![false; k]; k];
    let mut odot = vec![vec![0usize; k]; k];
    let mut imp = vec![vec![0usize; k]; k];
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            leq[i][j] = alg.leq(x, y);
            odot[i][j] = pos(alg.odot(x, y)).ok_or(Error::NotBl)?;
            imp[i][j] = if lower_part && alg.leq(x, y) {
                k - 1
            } else {
                pos(alg.imp(x, y)).ok_or(Error::NotBl)?
            };
        }
    }
    FiniteAlgebra::from_tables(names, leq, odot, imp)
}

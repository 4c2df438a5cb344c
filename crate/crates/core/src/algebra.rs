//! Finite residuated lattices as explicit operation tables, with validators
//! for the axiom families in use (residuation, prelinearity, divisibility,
//! involution, idempotency), derived operations, and isomorphism testing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the size accepted by the isomorphism search.
pub const DEFAULT_ISO_CAP: usize = 12;

/// A finite residuated lattice: order relation plus the `⊙` and `→` tables.
///
/// Element 0 is always the bottom and element `n-1` the top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    n: usize,
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    odot: Vec<Vec<usize>>,
    imp: Vec<Vec<usize>>,
}

/// Axiom flags for one algebra, with one violating tuple per failed flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub residuated: bool,
    pub prelinear: bool,
    pub divisible: bool,
    pub bl: bool,
    pub mv: bool,
    pub boolean: bool,
    pub chain: bool,
    /// Failed flag name -> witness tuple of element indices.
    pub witnesses: BTreeMap<String, Vec<usize>>,
}

impl FiniteAlgebra {
    /// Build and fully validate an algebra from raw tables.
    ///
    /// Checks the bounded-lattice axioms on `leq`, the commutative ordered
    /// monoid axioms on `odot` (unit = top), and residuation between the
    /// three tables. Each failure carries a witness.
    pub fn from_tables(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        odot: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NotALattice("empty carrier".into()));
        }
        for (label, table_ok) in [
            ("leq", leq.len() == n && leq.iter().all(|r| r.len() == n)),
            ("odot", odot.len() == n && odot.iter().all(|r| r.len() == n)),
            ("imp", imp.len() == n && imp.iter().all(|r| r.len() == n)),
        ] {
            if !table_ok {
                return Err(Error::NotALattice(format!("{label} table is not {n}x{n}")));
            }
        }
        for row in odot.iter().chain(imp.iter()) {
            if row.iter().any(|&v| v >= n) {
                return Err(Error::NotALattice("table entry out of range".into()));
            }
        }
        let alg = FiniteAlgebra { n, names, leq, odot, imp };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        // Partial order with bottom 0 and top n-1.
        for x in 0..n {
            if !self.leq[x][x] {
                return Err(Error::NotALattice(format!("leq not reflexive at {x}")));
            }
            if !self.leq[0][x] || !self.leq[x][n - 1] {
                return Err(Error::NotALattice(format!(
                    "element {x} not between bottom and top"
                )));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && self.leq[x][y] && self.leq[y][x] {
                    return Err(Error::NotALattice(format!("antisymmetry fails at ({x},{y})")));
                }
                for z in 0..n {
                    if self.leq[x][y] && self.leq[y][z] && !self.leq[x][z] {
                        return Err(Error::NotALattice(format!(
                            "transitivity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        // Meets and joins must exist for every pair.
        for x in 0..n {
            for y in 0..n {
                if self.try_meet(x, y).is_none() {
                    return Err(Error::NotALattice(format!("no meet for ({x},{y})")));
                }
                if self.try_join(x, y).is_none() {
                    return Err(Error::NotALattice(format!("no join for ({x},{y})")));
                }
            }
        }
        // Commutative monoid with unit top, monotone in each argument.
        for x in 0..n {
            if self.odot[x][n - 1] != x {
                return Err(Error::NotAMonoid(format!("top is not a unit at {x}")));
            }
            for y in 0..n {
                if self.odot[x][y] != self.odot[y][x] {
                    return Err(Error::NotAMonoid(format!("commutativity fails at ({x},{y})")));
                }
                for z in 0..n {
                    if self.odot[self.odot[x][y]][z] != self.odot[x][self.odot[y][z]] {
                        return Err(Error::NotAMonoid(format!(
                            "associativity fails at ({x},{y},{z})"
                        )));
                    }
                    if self.leq[x][y] && !self.leq[self.odot[x][z]][self.odot[y][z]] {
                        return Err(Error::NotAMonoid(format!(
                            "monotonicity fails at ({x},{y},{z})"
                        )));
                    }
                }
            }
        }
        // Residuation: z <= x->y iff x⊙z <= y.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.leq[z][self.imp[x][y]];
                    let rhs = self.leq[self.odot[x][z]][y];
                    if lhs != rhs {
                        return Err(Error::ResiduationFails { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.n - 1
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.odot[x][y]
    }

    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x][y]
    }

    fn try_meet(&self, x: usize, y: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n)
            .filter(|&z| self.leq[z][x] && self.leq[z][y])
            .collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&z| self.leq[z][m]))
    }

    fn try_join(&self, x: usize, y: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.n)
            .filter(|&z| self.leq[x][z] && self.leq[y][z])
            .collect();
        upper
            .iter()
            .copied()
            .find(|&j| upper.iter().all(|&z| self.leq[j][z]))
    }

    /// Meet computed from the order; total on validated algebras.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.try_meet(x, y).expect("validated lattice has meets")
    }

    /// Join computed from the order; total on validated algebras.
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.try_join(x, y).expect("validated lattice has joins")
    }

    /// `x* = x -> 0`.
    pub fn star(&self, x: usize) -> usize {
        self.imp[x][0]
    }

    /// `x ⊕ y = (x* ⊙ y*)*`; MV addition when the algebra is MV.
    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.star(self.odot[self.star(x)][self.star(y)])
    }

    /// Decide every axiom flag by exhaustive quantification.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.n;
        let mut witnesses = BTreeMap::new();
        // Validated at construction; record for completeness.
        let residuated = true;

        let mut prelinear = true;
        let mut divisible = true;
        for x in 0..n {
            for y in 0..n {
                if prelinear && self.join(self.imp[x][y], self.imp[y][x]) != self.top() {
                    prelinear = false;
                    witnesses.insert("prelinear".into(), vec![x, y]);
                }
                if divisible && self.odot[x][self.imp[x][y]] != self.meet(x, y) {
                    divisible = false;
                    witnesses.insert("divisible".into(), vec![x, y]);
                }
            }
        }
        let bl = residuated && prelinear && divisible;

        let mut involutive = true;
        for x in 0..n {
            if self.star(self.star(x)) != x {
                involutive = false;
                witnesses.insert("mv".into(), vec![x]);
                break;
            }
        }
        let mv = bl && involutive;

        let mut idempotent = true;
        for x in 0..n {
            if self.odot[x][x] != x {
                idempotent = false;
                witnesses.insert("boolean".into(), vec![x]);
                break;
            }
        }
        let boolean = bl && idempotent && mv;

        let mut chain = true;
        'chain: for x in 0..n {
            for y in 0..n {
                if !self.leq[x][y] && !self.leq[y][x] {
                    chain = false;
                    witnesses.insert("chain".into(), vec![x, y]);
                    break 'chain;
                }
            }
        }

        AxiomReport {
            residuated,
            prelinear,
            divisible,
            bl,
            mv,
            boolean,
            chain,
            witnesses,
        }
    }

    pub fn is_bl(&self) -> bool {
        self.check_axioms().bl
    }

    /// Coatoms: maximal elements strictly below the top.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&m| {
                m != self.top()
                    && (0..self.n)
                        .all(|y| !(self.leq[m][y] && y != m && y != self.top()))
            })
            .collect()
    }

    /// Atoms: minimal elements strictly above the bottom.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&m| {
                m != self.bottom()
                    && (0..self.n)
                        .all(|y| !(self.leq[y][m] && y != m && y != self.bottom()))
            })
            .collect()
    }

    /// Cover pairs (x, y) of the Hasse diagram: x < y with nothing between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x == y || !self.leq[x][y] {
                    continue;
                }
                let covered = (0..self.n)
                    .any(|z| z != x && z != y && self.leq[x][z] && self.leq[z][y]);
                if !covered {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    /// Structural invariant used to seed and prune the isomorphism search.
    fn color_signature(&self) -> Vec<u64> {
        let n = self.n;
        let mut color: Vec<u64> = (0..n)
            .map(|x| {
                let below = (0..n).filter(|&y| self.leq[y][x]).count() as u64;
                let above = (0..n).filter(|&y| self.leq[x][y]).count() as u64;
                let idem = (self.odot[x][x] == x) as u64;
                let star2 = (self.star(self.star(x)) == x) as u64;
                (below << 24) | (above << 12) | (idem << 1) | star2
            })
            .collect();
        // One refinement sweep over the operation tables.
        for _ in 0..self.n {
            let mut next = vec![0u64; n];
            for x in 0..n {
                let mut rows: Vec<(u64, u64, u64)> = (0..n)
                    .map(|y| (color[y], color[self.odot[x][y]], color[self.imp[x][y]]))
                    .collect();
                rows.sort_unstable();
                let mut h = color[x].wrapping_mul(0x9e3779b97f4a7c15);
                for (a, b, c) in rows {
                    h = h
                        .rotate_left(13)
                        .wrapping_add(a)
                        .wrapping_mul(31)
                        .wrapping_add(b)
                        .wrapping_mul(37)
                        .wrapping_add(c);
                }
                next[x] = h;
            }
            if next == color {
                break;
            }
            color = next;
        }
        color
    }

    /// Search for a bijection preserving `leq`, `⊙` and `→`.
    ///
    /// Deterministic: tries images in increasing index order and returns the
    /// first full assignment. `None` when the algebras are not isomorphic.
    pub fn isomorphism(&self, other: &FiniteAlgebra) -> Result<Option<Vec<usize>>> {
        self.isomorphism_with_cap(other, DEFAULT_ISO_CAP)
    }

    pub fn isomorphism_with_cap(
        &self,
        other: &FiniteAlgebra,
        cap: usize,
    ) -> Result<Option<Vec<usize>>> {
        if self.n > cap || other.n > cap {
            return Err(Error::SizeTooLarge { n: self.n.max(other.n), cap });
        }
        if self.n != other.n {
            return Ok(None);
        }
        let ca = self.color_signature();
        let cb = other.color_signature();
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
        let n = self.n;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn consistent(
            a: &FiniteAlgebra,
            b: &FiniteAlgebra,
            map: &[usize],
            x: usize,
        ) -> bool {
            let fx = map[x];
            for y in 0..a.n {
                let fy = map[y];
                if fy == usize::MAX {
                    continue;
                }
                if a.leq[x][y] != b.leq[fx][fy] || a.leq[y][x] != b.leq[fy][fx] {
                    return false;
                }
                let o1 = map[a.odot[x][y]];
                if o1 != usize::MAX && o1 != b.odot[fx][fy] {
                    return false;
                }
                let i1 = map[a.imp[x][y]];
                if i1 != usize::MAX && i1 != b.imp[fx][fy] {
                    return false;
                }
                let i2 = map[a.imp[y][x]];
                if i2 != usize::MAX && i2 != b.imp[fy][fx] {
                    return false;
                }
            }
            true
        }
        fn preserves_all(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
            for x in 0..a.n {
                for y in 0..a.n {
                    if a.leq[x][y] != b.leq[map[x]][map[y]]
                        || map[a.odot[x][y]] != b.odot[map[x]][map[y]]
                        || map[a.imp[x][y]] != b.imp[map[x]][map[y]]
                    {
                        return false;
                    }
                }
            }
            true
        }
        fn search(
            a: &FiniteAlgebra,
            b: &FiniteAlgebra,
            ca: &[u64],
            cb: &[u64],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            x: usize,
        ) -> bool {
            if x == a.n {
                return preserves_all(a, b, map);
            }
            for y in 0..b.n {
                if used[y] || ca[x] != cb[y] {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                if consistent(a, b, map, x) && search(a, b, ca, cb, map, used, x + 1) {
                    return true;
                }
                map[x] = usize::MAX;
                used[y] = false;
            }
            false
        }
        if search(self, other, &ca, &cb, &mut map, &mut used, 0) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    pub fn isomorphic(&self, other: &FiniteAlgebra) -> Result<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    /// Replace the display names, keeping the tables.
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = names;
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(AlgebraJson::from(self)).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&AlgebraJson::from(self)).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("algebra json: {e}")))?;
        raw.into_algebra()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: AlgebraJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("algebra json: {e}")))?;
        raw.into_algebra()
    }

    /// DOT rendering of the Hasse diagram, bottom at the bottom.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{graph_name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=circle];");
        for (i, name) in self.names.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{name}\"];");
        }
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        out
    }
}

/// Serialized form: order as the list of related pairs, tables as matrices.
#[derive(Debug, Serialize, Deserialize)]
struct AlgebraJson {
    n: usize,
    names: Vec<String>,
    leq: Vec<[usize; 2]>,
    odot: Vec<Vec<usize>>,
    imp: Vec<Vec<usize>>,
}

impl From<&FiniteAlgebra> for AlgebraJson {
    fn from(a: &FiniteAlgebra) -> Self {
        let mut pairs = Vec::new();
        for i in 0..a.n {
            for j in 0..a.n {
                if a.leq[i][j] {
                    pairs.push([i, j]);
                }
            }
        }
        AlgebraJson {
            n: a.n,
            names: a.names.clone(),
            leq: pairs,
            odot: a.odot.clone(),
            imp: a.imp.clone(),
        }
    }
}

impl AlgebraJson {
    fn into_algebra(self) -> Result<FiniteAlgebra> {
        if self.names.len() != self.n {
            return Err(Error::Parse("names length differs from n".into()));
        }
        let mut leq = vec![vec![false; self.n]; self.n];
        for [i, j] in self.leq {
            if i >= self.n || j >= self.n {
                return Err(Error::Parse(format!("leq pair [{i},{j}] out of range")));
            }
            leq[i][j] = true;
        }
        FiniteAlgebra::from_tables(self.names, leq, self.odot, self.imp)
    }
}

/// Build the `leq` matrix of a total order 0 < 1 < ... < n-1.
pub fn chain_leq(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect()
}

/// Convenience used by tests and constructors: index names "0", "a1", ..., "1".
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".into()
            } else if i == n - 1 {
                "1".into()
            } else {
                format!("a{i}")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 3-element BL-chain with an interior idempotent: tables of the
    /// two-step ordinal stack of 2-chains.
    pub(crate) fn godel3() -> FiniteAlgebra {
        FiniteAlgebra::from_tables(
            default_names(3),
            chain_leq(3),
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]],
            vec![vec![2, 2, 2], vec![0, 2, 2], vec![0, 1, 2]],
        )
        .unwrap()
    }

    /// The 5-element comet tables: 0 < a < {b, c} < 1.
    pub(crate) fn l5() -> FiniteAlgebra {
        let names = vec!["0", "a", "b", "c", "1"].into_iter().map(String::from).collect();
        let t = true;
        let f = false;
        let leq = vec![
            vec![t, t, t, t, t],
            vec![f, t, t, t, t],
            vec![f, f, t, f, t],
            vec![f, f, f, t, t],
            vec![f, f, f, f, t],
        ];
        let imp = vec![
            vec![4, 4, 4, 4, 4],
            vec![0, 4, 4, 4, 4],
            vec![0, 3, 4, 3, 4],
            vec![0, 2, 2, 4, 4],
            vec![0, 1, 2, 3, 4],
        ];
        let odot = vec![
            vec![0, 0, 0, 0, 0],
            vec![0, 1, 1, 1, 1],
            vec![0, 1, 2, 1, 2],
            vec![0, 1, 1, 3, 3],
            vec![0, 1, 2, 3, 4],
        ];
        FiniteAlgebra::from_tables(names, leq, odot, imp).unwrap()
    }

    #[test]
    fn accepts_godel3_and_l5() {
        godel3();
        l5();
    }

    #[test]
    fn rejects_corrupted_l5_residuation() {
        let good = l5();
        let mut imp: Vec<Vec<usize>> = (0..5).map(|x| (0..5).map(|y| good.imp(x, y)).collect()).collect();
        assert_eq!(imp[2][1], 3);
        imp[2][1] = 2;
        let leq: Vec<Vec<bool>> = (0..5).map(|x| (0..5).map(|y| good.leq(x, y)).collect()).collect();
        let odot: Vec<Vec<usize>> = (0..5).map(|x| (0..5).map(|y| good.odot(x, y)).collect()).collect();
        let err = FiniteAlgebra::from_tables(good.names().to_vec(), leq, odot, imp).unwrap_err();
        assert!(matches!(err, Error::ResiduationFails { .. }), "{err:?}");
    }

    #[test]
    fn axiom_reports() {
        let g3 = godel3();
        let r = g3.check_axioms();
        assert!(r.bl && r.chain && !r.mv);
        assert_eq!(g3.star(1), 0);
        assert_eq!(g3.star(g3.star(1)), 2);

        let r5 = l5().check_axioms();
        assert!(r5.bl && !r5.mv && !r5.chain);
        assert!(r5.witnesses.contains_key("mv"));
        assert!(r5.witnesses.contains_key("chain"));
    }

    #[test]
    fn star_and_oplus() {
        let a = l5();
        assert_eq!(a.star(1), 0);
        assert_eq!(a.star(0), 4);
    }

    #[test]
    fn extremal_elements() {
        let a = l5();
        assert_eq!(a.maximal_elements(), vec![2, 3]);
        assert_eq!(a.minimal_elements(), vec![1]);
        let g = godel3();
        assert_eq!(g.maximal_elements(), vec![1]);
        assert_eq!(g.minimal_elements(), vec![1]);
    }

    #[test]
    fn isomorphism_identity_and_refusal() {
        let a = l5();
        let id = a.isomorphism(&a).unwrap().unwrap();
        assert_eq!(id, vec![0, 1, 2, 3, 4]);
        let g = godel3();
        assert!(!g.isomorphic(&a).unwrap());
        assert!(matches!(
            a.isomorphism_with_cap(&a, 3).unwrap_err(),
            Error::SizeTooLarge { .. }
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = l5();
        let s = a.to_json_string();
        let b = FiniteAlgebra::from_json_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dot_contains_cover_edges() {
        let a = l5();
        let dot = a.to_dot("l5");
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("n1 -> n2"));
        assert!(!dot.contains("n0 -> n4"), "transitive edge must be reduced");
    }

    #[test]
    fn order_matches_implication() {
        for alg in [godel3(), l5()] {
            for x in 0..alg.n() {
                for y in 0..alg.n() {
                    assert_eq!(alg.leq(x, y), alg.imp(x, y) == alg.top());
                }
            }
        }
    }
}

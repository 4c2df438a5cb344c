//! Finite BL- and MV-algebra toolkit.
//!
//! The crate covers the ideal lattices of quotient rings `Z_p[x]/(f)` as
//! MV-algebras, an annihilator-based cipher on those lattices, finite
//! residuated lattices given by explicit tables, comet analysis and
//! ordinal-sum decomposition, and constructive enumeration of all
//! BL-algebras with up to 6 elements.

pub mod cipher;
pub mod comet;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod algebra;
pub mod poly;
pub mod ring;

pub use algebra::{AxiomReport, FiniteAlgebra};
pub use cipher::{decrypt, encrypt, Alphabet, CipherPath, CipherTrace, SecretKey};
pub use comet::{classify, ordinal_split, CometProfile, Classification, OrdinalSplit};
pub use construct::{direct_product, mv_chain, ordinal_sum, ring_ideal_lattice, RingDescriptor};
pub use enumerate::{brute_force_enumerate, census, enumerate_bl, ring_scan, CensusReport, EnumeratedAlgebra};
pub use error::{Error, Result};
pub use poly::{Factorization, Poly};
pub use ring::{ElementClass, IdealHandle, IdealOp, QuotientRing};

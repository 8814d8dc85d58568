//! Z/p-cohomology of right-angled Artin pro-p groups from their defining
//! graphs.
//!
//! The library computes the clique-basis cohomology algebra of a pro-p RAAG,
//! re-runs the dimension ledgers that certify when such a group is of
//! p-absolute Galois type (chordal graphs, ladders, free and direct
//! products, Demushkin pairings), and constructs explicit unipotent
//! witnesses for strong Massey vanishing.
//!
//! Everything works over exact arithmetic in Z/p; every dimension formula is
//! cross-checked against a Gaussian-elimination rank oracle, and every
//! claimed relation set carries an independence certificate in the class-2
//! quotient of a free pro-p group.
//!
//! The `parallel` feature (on by default) runs the big sweeps on rayon;
//! build with `--no-default-features` for the single-threaded fallback.

pub mod cert;
pub mod enumerate;
pub mod exec;
pub mod fp;
pub mod graph;
pub mod massey;
pub mod pcentral;
pub mod sr;
pub mod sweep;

pub use cert::{
    classify, corestriction_table, direct_product_ledger, exactness_ledger, h2_exactness,
    res_certificate_chordal, res_certificate_ladder, symplectic_basis, CertError, DemushkinForm,
    ExactnessLedger, SubsetPolicy, Verdict, VerdictStatus,
};
pub use fp::{FpMatrix, Prime};
pub use graph::{
    chordal_pasting_tree, complete_join_decomposition, embed_in_ladder, is_chordal,
    is_elementary_type, subsquare_census, ForbiddenWitness, GraphError, PastingTree,
    SimplicialGraph,
};
pub use massey::{
    build_raag_witness, exhaustive_witness_search, extract_superdiagonal, power_witness,
    product_extend_witness, MasseyError, Presentation, SearchOutcome, UnipotentMatrix,
    UnipotentRep,
};
pub use pcentral::{nf_from_word, relations_independent, substitute_hom, ClassTwoWord, GroupWord};
pub use sr::{Cochain, SRAlgebra, SupportData};

//! Exact combinatorics of irreducible root systems: Cartan data, finite and
//! affine Weyl groups, the stabilizer of the fundamental alcove, intermediate
//! coweight lattices and the polytopal fundamental domains they carve out of
//! the alcove.
//!
//! Everything is computed over exact rationals. Points of the dual space live
//! in fundamental-coweight coordinates (coordinate `i` is the pairing with the
//! simple root `alpha_i`), roots live in simple-root coordinates, so every
//! group action is an integer-matrix operation and no floating point appears
//! anywhere.
//!
//! Node and reflection indices are 1-based throughout, matching the usual
//! Bourbaki numbering; the extra node of the extended Dynkin diagram is node 0.

pub mod domains;
pub mod intmat;
pub mod lattices;
pub mod linalg;
pub mod omega;
pub mod oracle;
pub mod rational;
pub mod rootsys;
pub mod torus;
pub mod weyl;

pub use domains::{
    alcove, contains, explicit_action, fold_full, fold_omega, fundamental_complex,
    fundamental_polytope, polytope_from_json, polytope_to_json, DomainKind, Halfspace, Location,
    Polytope, Sense,
};
pub use lattices::{
    coset_representatives, coweight_class, enumerate_lattices, lattice_contains,
    lattice_to_subgroup, omega_subgroup, subgroup_closure, subgroup_to_lattice, LatticeSpec,
};
pub use omega::{
    diagram_automorphisms, extended_diagram, finite_diagram, minimal_length_lift, omega_element,
    omega_group, semidirect_witness, sigma_permutation, Diagram, OmegaElement, OmegaGroup,
    Permutation,
};
pub use oracle::{
    brute_canonicalize, enumerate_weyl, random_rational_point, vertex_enumeration, SplitMix64,
    WeylEnumeration,
};
pub use rational::Rat;
pub use rootsys::{CoweightVector, Family, RootSystem, RootSystemType, RootVector};
pub use torus::{canonicalize, torus_equal, TorusPoint};
pub use weyl::{
    affine_apply, apply_reflection, apply_word, apply_word_root, fold_to_alcove, fold_to_chamber,
    longest_element, AffineElement, WeylWord,
};

/// Errors produced by constructors and operations with preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root system type: {0}")]
    InvalidType(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("node {0} is not minuscule")]
    NotMinuscule(usize),
    #[error("coweight does not have integer coordinates")]
    NotIntegral,
    #[error("point lies outside the fundamental alcove")]
    OutsideAlcove,
    #[error("facet condition violated: pairing with the highest root plus the chosen simple root must equal 1")]
    FacetCondition,
    #[error("indices {0:?} are not closed under the group law")]
    NotASubgroup(Vec<usize>),
    #[error("Weyl group order exceeds cap {0}")]
    WeylCapExceeded(usize),
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("cannot parse rational number from '{0}'")]
    ParseRational(String),
    #[error("unknown lattice spec '{0}', expected adjoint, sc or H=i,j,...")]
    ParseLattice(String),
}

pub type Result<T> = std::result::Result<T, Error>;

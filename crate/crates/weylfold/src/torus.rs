//! Canonical representatives for Weyl-orbit points on the torus cut out by an
//! intermediate lattice: fold into the alcove, then take the lexicographic
//! minimum over the finite stabilizer orbit. The canonical point is a
//! complete, choice-free invariant of the orbit.

use crate::lattices::{omega_subgroup, LatticeSpec};
use crate::omega::omega_element;
use crate::rootsys::{CoweightVector, RootSystem};
use crate::weyl::{affine_apply, affine_compose, fold_to_alcove, AffineElement};

/// A torus point in canonical form for its lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusPoint {
    pub rep: CoweightVector,
    pub lattice: LatticeSpec,
}

/// Canonicalizes a point of the dual space modulo the lattice's affine Weyl
/// group. Returns the canonical representative together with a witness
/// mapping the input onto it. Idempotent, and invariant under the whole
/// group: any translate or reflection of the input canonicalizes identically.
pub fn canonicalize(
    rs: &RootSystem,
    spec: &LatticeSpec,
    lambda: &CoweightVector,
) -> (TorusPoint, AffineElement) {
    let (folded, alcove_witness) = fold_to_alcove(rs, lambda);
    let (_, j_y) = omega_subgroup(rs, spec);
    let mut best = folded.clone();
    let mut best_omega: Option<usize> = None;
    for &j in &j_y {
        let e = omega_element(rs, j).expect("minuscule node");
        let candidate = affine_apply(rs, &e.affine, &folded);
        if candidate < best {
            best = candidate;
            best_omega = Some(j);
        }
    }
    let witness = match best_omega {
        None => alcove_witness,
        Some(j) => {
            let e = omega_element(rs, j).expect("minuscule node");
            affine_compose(rs, &e.affine, &alcove_witness)
        }
    };
    debug_assert_eq!(affine_apply(rs, &witness, lambda), best);
    (TorusPoint { rep: best, lattice: spec.clone() }, witness)
}

/// Orbit equality on the torus: two points agree modulo the lattice's affine
/// Weyl group iff their canonical forms coincide.
pub fn torus_equal(
    rs: &RootSystem,
    spec: &LatticeSpec,
    lambda: &CoweightVector,
    mu: &CoweightVector,
) -> bool {
    canonicalize(rs, spec, lambda).0.rep == canonicalize(rs, spec, mu).0.rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{enumerate_lattices, subgroup_to_lattice};
    use crate::omega::omega_group;
    use crate::oracle::SplitMix64;
    use crate::rootsys::{build, RootSystemType};
    use crate::weyl::{apply_word, WeylWord};

    fn rs(s: &str) -> RootSystem {
        build(RootSystemType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn zero_is_canonical() {
        let a2 = rs("A2");
        for spec in enumerate_lattices(&a2) {
            let zero = CoweightVector::zero(2);
            let (pt, witness) = canonicalize(&a2, &spec, &zero);
            assert!(pt.rep.is_zero());
            assert!(witness.is_identity(&a2));
        }
    }

    #[test]
    fn adjoint_a2_identifies_coweights_with_origin() {
        let a2 = rs("A2");
        let group = omega_group(&a2);
        let adjoint = subgroup_to_lattice(&a2, &group, &[0, 1, 2]).unwrap();
        let w1 = CoweightVector::fundamental(2, 1);
        let (pt, witness) = canonicalize(&a2, &adjoint, &w1);
        assert!(pt.rep.is_zero());
        assert_eq!(affine_apply(&a2, &witness, &w1), pt.rep);
        assert!(torus_equal(&a2, &adjoint, &w1, &CoweightVector::zero(2)));
    }

    #[test]
    fn a3_intermediate_identifies_outer_coweights() {
        let a3 = rs("A3");
        let group = omega_group(&a3);
        let spec = subgroup_to_lattice(&a3, &group, &[0, 2]).unwrap();
        let w1 = CoweightVector::fundamental(3, 1);
        let w3 = CoweightVector::fundamental(3, 3);
        assert_eq!(canonicalize(&a3, &spec, &w1).0, canonicalize(&a3, &spec, &w3).0);
        assert!(torus_equal(&a3, &spec, &w1, &w3));
        // both satisfy the half-space description of the same fundamental
        // polytope, exhibiting its boundary identification
        let f = crate::domains::fundamental_polytope(&a3, &[2]).unwrap();
        assert_ne!(crate::domains::contains(&f, &w1), crate::domains::Location::Outside);
        assert_ne!(crate::domains::contains(&f, &w3), crate::domains::Location::Outside);
        // but they are distinct points
        assert_ne!(w1, w3);
    }

    #[test]
    fn canonicalize_is_idempotent_and_invariant() {
        for name in ["A2", "B2", "A3", "B3"] {
            let rsys = rs(name);
            let mut rng = SplitMix64::new(13);
            for spec in enumerate_lattices(&rsys) {
                for _ in 0..25 {
                    let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 5);
                    let (pt, witness) = canonicalize(&rsys, &spec, &lam);
                    assert_eq!(affine_apply(&rsys, &witness, &lam), pt.rep, "{name}");
                    // idempotent
                    let (again, _) = canonicalize(&rsys, &spec, &pt.rep);
                    assert_eq!(again.rep, pt.rep, "{name}");
                    // invariant under reflections and lattice translations
                    let letters: Vec<usize> =
                        (0..4).map(|_| (rng.next_u64() as usize % rsys.rank()) + 1).collect();
                    let moved = apply_word(&rsys, &WeylWord::new(letters), &lam);
                    assert!(torus_equal(&rsys, &spec, &lam, &moved), "{name}");
                    let row = &spec.basis[(rng.next_u64() as usize) % rsys.rank()];
                    let translated = lam.add(&CoweightVector::from_integers(row));
                    assert!(torus_equal(&rsys, &spec, &lam, &translated), "{name}");
                }
            }
        }
    }

    #[test]
    fn distinct_orbits_stay_distinct() {
        let a2 = rs("A2");
        let group = omega_group(&a2);
        let sc = subgroup_to_lattice(&a2, &group, &[0]).unwrap();
        // with the coroot lattice, varpi_1 is not equivalent to the origin
        let w1 = CoweightVector::fundamental(2, 1);
        assert!(!torus_equal(&a2, &sc, &w1, &CoweightVector::zero(2)));
    }
}

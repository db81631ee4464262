//! The bijection between W-stable lattices squeezed between the coroot and
//! coweight lattices and subgroups of the alcove stabilizer: lattice bases in
//! Hermite normal form, membership tests, the stabilizer subgroup of a
//! lattice and coset representatives.

use crate::intmat::{hnf, hnf_det, solve_in_lattice};
use crate::omega::{OmegaElement, OmegaGroup};
use crate::rootsys::{CoweightVector, RootSystem};
use crate::{Error, Result};

/// An intermediate W-lattice `Y` with `Q^vee <= Y <= P^vee`, given by the
/// subgroup of the alcove stabilizer it corresponds to and a canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    /// Sorted node indices of the stabilizer subgroup, always containing 0
    /// (the identity); the other entries are minuscule nodes.
    pub subgroup: Vec<usize>,
    /// Basis rows in fundamental-coweight coordinates, in Hermite normal
    /// form. The determinant is the index of `Y` in the coweight lattice.
    pub basis: Vec<Vec<i64>>,
}

impl LatticeSpec {
    /// Index `[P^vee : Y]`.
    pub fn coweight_index(&self) -> i64 {
        hnf_det(&self.basis)
    }

    /// Canonical label: `sc` for the coroot lattice, `adjoint` for the full
    /// coweight lattice, otherwise `H=` with the nontrivial subgroup indices.
    pub fn label(&self, rs: &RootSystem) -> String {
        let nontrivial: Vec<usize> = self.subgroup.iter().copied().filter(|&i| i != 0).collect();
        if nontrivial.is_empty() {
            "sc".to_string()
        } else if nontrivial.len() == rs.minuscule.len() {
            "adjoint".to_string()
        } else {
            format!(
                "H={}",
                nontrivial.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            )
        }
    }
}

fn validate_subgroup(group: &OmegaGroup, h: &[usize]) -> Result<Vec<usize>> {
    let mut indices: Vec<usize> = h.to_vec();
    if !indices.contains(&0) {
        indices.push(0);
    }
    indices.sort_unstable();
    indices.dedup();
    for &i in &indices {
        if i != 0 && group.elements.iter().all(|e| e.index != i) {
            return Err(Error::NotASubgroup(indices.clone()));
        }
    }
    for &a in &indices {
        for &b in &indices {
            if !indices.contains(&group.mul_indices(a, b)) {
                return Err(Error::NotASubgroup(indices));
            }
        }
    }
    Ok(indices)
}

/// Closure of a set of minuscule-node generators under the stabilizer group
/// law, always containing the identity.
pub fn subgroup_closure(group: &OmegaGroup, generators: &[usize]) -> Result<Vec<usize>> {
    let mut closure = vec![0usize];
    for &g in generators {
        if group.elements.iter().all(|e| e.index != g) {
            return Err(Error::NotASubgroup(generators.to_vec()));
        }
        if !closure.contains(&g) {
            closure.push(g);
        }
    }
    loop {
        let mut grew = false;
        let snapshot = closure.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let c = group.mul_indices(a, b);
                if !closure.contains(&c) {
                    closure.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    closure.sort_unstable();
    Ok(closure)
}

/// The lattice attached to a subgroup `H` of the alcove stabilizer: the
/// coroot lattice extended by the fundamental coweights indexed by `H`,
/// reduced to Hermite normal form. Verifies that `h` is closed.
pub fn subgroup_to_lattice(
    rs: &RootSystem,
    group: &OmegaGroup,
    h: &[usize],
) -> Result<LatticeSpec> {
    let subgroup = validate_subgroup(group, h)?;
    let mut rows: Vec<Vec<i64>> = rs.cartan.clone();
    for &i in &subgroup {
        if i != 0 {
            let mut e = vec![0i64; rs.rank()];
            e[i - 1] = 1;
            rows.push(e);
        }
    }
    let basis = hnf(&rows);
    assert_eq!(basis.len(), rs.rank(), "lattice basis must have full rank");
    let spec = LatticeSpec { subgroup, basis };
    // index law: [P : Y] * |H| = det(Cartan)
    let det: i64 = i64::try_from(
        rs.fundamental_group().iter().product::<u64>().max(1),
    )
    .expect("small determinant");
    assert_eq!(spec.coweight_index() * spec.subgroup.len() as i64, det);
    Ok(spec)
}

/// Exact membership of an integral coweight in the lattice.
pub fn lattice_contains(
    rs: &RootSystem,
    spec: &LatticeSpec,
    mu: &CoweightVector,
) -> Result<bool> {
    if mu.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: mu.rank() });
    }
    let coords = mu.to_integers()?;
    Ok(solve_in_lattice(&spec.basis, &coords).is_some())
}

/// Which coset of the coroot lattice an integral coweight lies in, named by
/// the matching element of the alcove stabilizer: 0 for the coroot lattice
/// itself, otherwise the minuscule node whose fundamental coweight is
/// congruent to `mu`.
pub fn coweight_class(rs: &RootSystem, mu: &CoweightVector) -> Result<usize> {
    let coords = mu.to_integers()?;
    let coroot_basis = hnf(&rs.cartan);
    if solve_in_lattice(&coroot_basis, &coords).is_some() {
        return Ok(0);
    }
    for &j in &rs.minuscule {
        let mut shifted = coords.clone();
        shifted[j - 1] -= 1;
        if solve_in_lattice(&coroot_basis, &shifted).is_some() {
            return Ok(j);
        }
    }
    unreachable!("minuscule coweights represent every class of the fundamental group")
}

/// The subgroup corresponding to a lattice: classes of the basis vectors,
/// closed under the group law.
pub fn lattice_to_subgroup(
    rs: &RootSystem,
    group: &OmegaGroup,
    spec: &LatticeSpec,
) -> Result<Vec<usize>> {
    let mut generators = Vec::new();
    for row in &spec.basis {
        generators.push(coweight_class(rs, &CoweightVector::from_integers(row))?);
    }
    subgroup_closure(group, &generators)
}

/// All intermediate lattices for the type, one per subgroup of the alcove
/// stabilizer, ordered by subgroup size then lexicographically.
pub fn enumerate_lattices(rs: &RootSystem) -> Vec<LatticeSpec> {
    let group = crate::omega::omega_group(rs);
    let nodes = rs.minuscule.clone();
    let mut out = Vec::new();
    for mask in 0..(1u32 << nodes.len()) {
        let subset: Vec<usize> = nodes
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask & (1 << k) != 0)
            .map(|(_, &j)| j)
            .collect();
        let mut candidate = subset.clone();
        candidate.push(0);
        if validate_subgroup(&group, &candidate).is_ok() {
            let spec = subgroup_to_lattice(rs, &group, &candidate).expect("validated subgroup");
            out.push(spec);
        }
    }
    out.sort_by(|a, b| {
        a.subgroup.len().cmp(&b.subgroup.len()).then_with(|| a.subgroup.cmp(&b.subgroup))
    });
    out.dedup_by(|a, b| a.basis == b.basis);
    out
}

/// The stabilizer subgroup of the lattice and the minuscule index set:
/// `J_Y = { j minuscule : varpi_j in Y }`, stabilizer `{0} u J_Y`.
pub fn omega_subgroup(rs: &RootSystem, spec: &LatticeSpec) -> (Vec<usize>, Vec<usize>) {
    let j_y: Vec<usize> = rs
        .minuscule
        .iter()
        .copied()
        .filter(|&j| {
            lattice_contains(rs, spec, &CoweightVector::fundamental(rs.rank(), j))
                .expect("integral coweight")
        })
        .collect();
    let mut subgroup = vec![0usize];
    subgroup.extend_from_slice(&j_y);
    (subgroup, j_y)
}

/// Deterministic coset representatives for the stabilizer modulo the
/// lattice's subgroup: the identity for the trivial coset, the smallest
/// member for every other coset, ordered by that representative.
pub fn coset_representatives(
    rs: &RootSystem,
    group: &OmegaGroup,
    spec: &LatticeSpec,
) -> Vec<OmegaElement> {
    let (subgroup, _) = omega_subgroup(rs, spec);
    let mut assigned: Vec<Option<usize>> = vec![None; group.order()];
    let mut reps: Vec<usize> = Vec::new();
    let mut indices: Vec<usize> = group.elements.iter().map(|e| e.index).collect();
    indices.sort_unstable();
    for &i in &indices {
        let p = group.position_of(i);
        if assigned[p].is_some() {
            continue;
        }
        reps.push(i);
        for &h in &subgroup {
            let q = group.position_of(group.mul_indices(i, h));
            assigned[q] = Some(i);
        }
    }
    reps.iter().map(|&i| group.by_index(i).clone()).collect()
}

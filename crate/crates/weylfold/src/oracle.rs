//! Brute-force verifiers, algorithmically independent of the code paths they
//! check: Weyl group enumeration by matrix closure, polytope vertex
//! enumeration by exhaustive hyperplane intersection, canonicalization by
//! orbit search, and the deterministic point sampler every test stream is
//! built on. The `checks` submodule packages these into the pass/fail report
//! behind the CLI `verify` command.

use std::collections::HashMap;

use num::ToPrimitive;
use num::Zero;

use crate::domains::Halfspace;
use crate::intmat::solve_in_lattice;
use crate::lattices::LatticeSpec;
use crate::linalg::{fm_feasible, solve_square};
use crate::rational::{rat_int, Rat};
use crate::rootsys::{CoweightVector, Family, RootSystem, RootSystemType};
use crate::weyl::identity_matrix;
use crate::{Error, Result};

/// Default cap on enumerated Weyl group orders; covers every type of rank at
/// most 5 as well as F4 and E6.
pub const DEFAULT_WEYL_CAP: usize = 51840;

/// SplitMix64 written out in full so every stream is reproducible from its
/// constants: state advances by 0x9E3779B97F4A7C15; output mixing xors by
/// shifts 30/27/31 and multiplies by 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// One random coweight point from an existing stream: each coordinate is a
/// rational in [-3, 3] with denominator at most `denom_bound`.
pub fn random_point_with(rng: &mut SplitMix64, rank: usize, denom_bound: u64) -> CoweightVector {
    assert!(denom_bound >= 1);
    let coords = (0..rank)
        .map(|_| {
            let q = 1 + rng.below(denom_bound) as i64;
            let p = rng.below((6 * q + 1) as u64) as i64 - 3 * q;
            Rat::new(p.into(), q.into())
        })
        .collect();
    CoweightVector { coords }
}

/// The deterministic point for a seed: coordinates in [-3, 3], denominators
/// at most `denom_bound`.
pub fn random_rational_point(rs: &RootSystem, seed: u64, denom_bound: u64) -> CoweightVector {
    let mut rng = SplitMix64::new(seed);
    random_point_with(&mut rng, rs.rank(), denom_bound)
}

/// All Weyl group elements as integer action matrices on coweight
/// coordinates, with their Cayley-graph distances from the identity (the
/// Coxeter lengths).
#[derive(Debug, Clone)]
pub struct WeylEnumeration {
    pub matrices: Vec<Vec<Vec<i64>>>,
    pub lengths: Vec<usize>,
}

impl WeylEnumeration {
    pub fn order(&self) -> usize {
        self.matrices.len()
    }
}

fn reflection_matrix(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let mut m = identity_matrix(r);
    for k in 0..r {
        m[k][i - 1] -= rs.cartan[i - 1][k];
    }
    // sanity: the matrix columns act like the reflection
    debug_assert_eq!(
        mat_vec(&m, &CoweightVector::fundamental(r, i)).coords,
        crate::weyl::apply_reflection(rs, i, &CoweightVector::fundamental(r, i)).coords
    );
    m
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v != 0 {
                for j in 0..n {
                    out[i][j] += v * b[k][j];
                }
            }
        }
    }
    out
}

/// Applies an enumerated action matrix to a point.
pub fn apply_matrix(m: &[Vec<i64>], v: &CoweightVector) -> CoweightVector {
    mat_vec(m, v)
}

pub(crate) fn mat_vec(m: &[Vec<i64>], v: &CoweightVector) -> CoweightVector {
    let coords = m
        .iter()
        .map(|row| {
            let mut acc = Rat::zero();
            for (c, x) in row.iter().zip(&v.coords) {
                if *c != 0 {
                    acc += x * rat_int(*c);
                }
            }
            acc
        })
        .collect();
    CoweightVector { coords }
}

/// Enumerates the finite Weyl group by breadth-first closure of the
/// reflection matrices. Fails once the group grows beyond the cap.
pub fn enumerate_weyl(rs: &RootSystem, cap: usize) -> Result<WeylEnumeration> {
    let generators: Vec<Vec<Vec<i64>>> =
        (1..=rs.rank()).map(|i| reflection_matrix(rs, i)).collect();
    let mut matrices = vec![identity_matrix(rs.rank())];
    let mut lengths = vec![0usize];
    let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
    seen.insert(matrices[0].clone(), 0);
    let mut head = 0;
    while head < matrices.len() {
        let current = matrices[head].clone();
        let dist = lengths[head];
        for g in &generators {
            let next = mat_mul(g, &current);
            if !seen.contains_key(&next) {
                if matrices.len() >= cap {
                    return Err(Error::WeylCapExceeded(cap));
                }
                seen.insert(next.clone(), matrices.len());
                matrices.push(next);
                lengths.push(dist + 1);
            }
        }
        head += 1;
    }
    Ok(WeylEnumeration { matrices, lengths })
}

/// Classical Weyl group orders, used as fixtures against the enumeration.
pub fn classical_weyl_order(ty: RootSystemType) -> u128 {
    let factorial = |n: usize| -> u128 { (1..=n as u128).product::<u128>().max(1) };
    match ty.family {
        Family::A => factorial(ty.rank + 1),
        Family::B | Family::C => (1u128 << ty.rank) * factorial(ty.rank),
        Family::D => (1u128 << (ty.rank - 1)) * factorial(ty.rank),
        Family::E => match ty.rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

/// Exhaustive vertex enumeration from a half-space description: every
/// r-subset of boundary hyperplanes is intersected exactly, and the solution
/// kept when it satisfies all constraints. Detects unbounded inputs by
/// searching for a recession ray first.
pub fn vertex_enumeration(halfspaces: &[Halfspace]) -> Result<Vec<CoweightVector>> {
    let dim = halfspaces.first().map_or(0, |h| h.coeffs.len());
    if dim == 0 {
        return Ok(Vec::new());
    }
    // recession cone: directions satisfying every constraint homogeneously
    let homogeneous: Vec<(Vec<Rat>, Rat)> = halfspaces
        .iter()
        .map(|h| {
            let (coeffs, _) = h.as_le_row();
            (coeffs, Rat::zero())
        })
        .collect();
    for k in 0..dim {
        for sign in [1i64, -1] {
            let mut sys = homogeneous.clone();
            let mut unit = vec![Rat::zero(); dim];
            unit[k] = rat_int(1);
            sys.push((unit.clone(), rat_int(sign)));
            let neg: Vec<Rat> = unit.iter().map(|c| -c).collect();
            sys.push((neg, rat_int(-sign)));
            if fm_feasible(&sys) {
                return Err(Error::Unbounded);
            }
        }
    }

    let mut vertices: Vec<CoweightVector> = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    fn visit(
        halfspaces: &[Halfspace],
        dim: usize,
        start: usize,
        subset: &mut Vec<usize>,
        vertices: &mut Vec<CoweightVector>,
    ) {
        if subset.len() == dim {
            let a: Vec<Vec<Rat>> =
                subset.iter().map(|&k| halfspaces[k].coeffs.clone()).collect();
            let b: Vec<Rat> = subset.iter().map(|&k| halfspaces[k].bound.clone()).collect();
            if let Some(x) = solve_square(&a, &b) {
                let point = CoweightVector { coords: x };
                if halfspaces.iter().all(|h| h.satisfied(&point)) {
                    vertices.push(point);
                }
            }
            return;
        }
        for k in start..halfspaces.len() {
            subset.push(k);
            visit(halfspaces, dim, k + 1, subset, vertices);
            subset.pop();
        }
    }
    visit(halfspaces, dim, 0, &mut subset, &mut vertices);
    let _ = n;
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

/// Orbit-search canonicalization: the lexicographic minimum over all images
/// `w(lambda) + y` landing in the alcove, with `w` from the enumerated Weyl
/// group and `y` a lattice translation bounded by `box_radius`.
pub fn brute_canonicalize(
    rs: &RootSystem,
    spec: &LatticeSpec,
    lambda: &CoweightVector,
    box_radius: i64,
) -> Result<CoweightVector> {
    let enumeration = enumerate_weyl(rs, DEFAULT_WEYL_CAP)?;
    let one = rat_int(1);
    let mut best: Option<CoweightVector> = None;
    for m in &enumeration.matrices {
        let moved = mat_vec(m, lambda);
        // alcove membership pins every translation coordinate into a
        // length-1 interval; walk the at most 2^r integer choices
        let ranges: Vec<(i64, i64)> = moved
            .coords
            .iter()
            .map(|c| {
                let lo = (-c).ceil().to_integer().to_i64().expect("small coordinate");
                let hi = (&one - c).floor().to_integer().to_i64().expect("small coordinate");
                (lo, hi)
            })
            .collect();
        let mut y = vec![0i64; rs.rank()];
        walk_translations(rs, spec, &moved, &ranges, 0, &mut y, box_radius, &mut best);
    }
    Ok(best.expect("box radius admits no alcove representative"))
}

#[allow(clippy::too_many_arguments)]
fn walk_translations(
    rs: &RootSystem,
    spec: &LatticeSpec,
    moved: &CoweightVector,
    ranges: &[(i64, i64)],
    k: usize,
    y: &mut Vec<i64>,
    box_radius: i64,
    best: &mut Option<CoweightVector>,
) {
    if k == ranges.len() {
        if solve_in_lattice(&spec.basis, y).is_none() {
            return;
        }
        let candidate = moved.add(&CoweightVector::from_integers(y));
        if rs.pairing_highest(&candidate) > rat_int(1) {
            return;
        }
        debug_assert!(candidate.coords.iter().all(|c| c >= &Rat::zero()));
        if best.as_ref().is_none_or(|b| &candidate < b) {
            *best = Some(candidate);
        }
        return;
    }
    let (lo, hi) = ranges[k];
    for v in lo..=hi {
        if v.abs() <= box_radius {
            y[k] = v;
            walk_translations(rs, spec, moved, ranges, k + 1, y, box_radius, best);
        }
    }
    y[k] = 0;
}

/// A positive-weight rational convex combination of the given points.
pub fn random_convex_combination(
    rng: &mut SplitMix64,
    points: &[CoweightVector],
) -> CoweightVector {
    assert!(!points.is_empty());
    let weights: Vec<i64> = points.iter().map(|_| 1 + rng.below(7) as i64).collect();
    let total: i64 = weights.iter().sum();
    let rank = points[0].rank();
    let mut out = CoweightVector::zero(rank);
    for (w, p) in weights.iter().zip(points) {
        out = out.add(&p.scale(&Rat::new((*w).into(), total.into())));
    }
    out
}

/// A random point of the open facet `<lambda, alpha_0 + alpha_j> = 1` of the
/// adjoint fundamental polytope: a positive combination of the polytope
/// vertices lying on that facet.
pub fn random_facet_point(rs: &RootSystem, j: usize, rng: &mut SplitMix64) -> CoweightVector {
    assert!(rs.is_minuscule(j));
    let f = crate::domains::fundamental_polytope(rs, &rs.minuscule.clone()).expect("minuscule");
    let one = rat_int(1);
    let facet_vertices: Vec<CoweightVector> = f
        .vertices
        .iter()
        .filter(|v| rs.pairing_highest(v) + &v.coords[j - 1] == one)
        .cloned()
        .collect();
    random_convex_combination(rng, &facet_vertices)
}

/// A random interior point of the adjoint fundamental polytope: a strictly
/// positive combination of all its vertices.
pub fn random_interior_point(rs: &RootSystem, rng: &mut SplitMix64) -> CoweightVector {
    let f = crate::domains::fundamental_polytope(rs, &rs.minuscule.clone()).expect("minuscule");
    let pt = random_convex_combination(rng, &f.vertices);
    debug_assert_eq!(crate::domains::contains(&f, &pt), crate::domains::Location::Interior);
    pt
}

pub mod checks {
    //! Per-property verification reports behind the CLI `verify` command.
    //! Each check returns `Ok(detail)` or `Err(counterexample)`; properties
    //! too large for the type's rank are skipped rather than failed.

    use super::*;
    use crate::domains::{
        alcove, contains, explicit_action, fold_full, fundamental_complex, fundamental_polytope,
        Location, Polytope,
    };
    use crate::lattices::enumerate_lattices;
    use crate::omega::{
        diagram_automorphisms, extended_diagram, finite_diagram, minimal_length_lift,
        omega_element, omega_group,
    };
    use crate::torus::canonicalize;
    use crate::weyl::{affine_apply, affine_equal, affine_inverse};

    pub struct CheckReport {
        pub name: &'static str,
        pub outcome: Outcome,
        pub detail: String,
    }

    #[derive(Debug, Clone, PartialEq, Eq)]
    pub enum Outcome {
        Pass,
        Fail,
        Skipped,
    }

    fn report(name: &'static str, res: std::result::Result<String, String>) -> CheckReport {
        match res {
            Ok(detail) => CheckReport { name, outcome: Outcome::Pass, detail },
            Err(detail) => CheckReport { name, outcome: Outcome::Fail, detail },
        }
    }

    fn skipped(name: &'static str, why: &str) -> CheckReport {
        CheckReport { name, outcome: Outcome::Skipped, detail: why.to_string() }
    }

    pub fn weyl_order(rs: &RootSystem) -> std::result::Result<String, String> {
        let expected = classical_weyl_order(rs.ty);
        let enumeration = enumerate_weyl(rs, DEFAULT_WEYL_CAP)
            .map_err(|e| format!("enumeration failed: {e}"))?;
        if enumeration.order() as u128 == expected {
            Ok(format!("group order {expected}"))
        } else {
            Err(format!("enumerated {} elements, expected {expected}", enumeration.order()))
        }
    }

    pub fn omega_matches_fundamental_group(rs: &RootSystem) -> std::result::Result<String, String> {
        let group = omega_group(rs);
        let expected = rs.fundamental_group();
        if group.invariant_factors == expected {
            Ok(format!("invariant factors {:?}", expected))
        } else {
            Err(format!(
                "stabilizer type {:?} but fundamental group {:?}",
                group.invariant_factors, expected
            ))
        }
    }

    pub fn semidirect_split(rs: &RootSystem) -> std::result::Result<String, String> {
        let ext = extended_diagram(rs);
        let aut_ext = diagram_automorphisms(&ext);
        let aut_fin = diagram_automorphisms(&finite_diagram(rs));
        let group = omega_group(rs);
        for e in &group.elements {
            if !ext.admits(&e.sigma) {
                return Err(format!("sigma_{} is not a diagram automorphism", e.index));
            }
        }
        if aut_ext.len() == group.order() * aut_fin.len() {
            Ok(format!("({}, {}, {})", aut_ext.len(), group.order(), aut_fin.len()))
        } else {
            Err(format!(
                "|Aut(ext)| = {} but |Omega| * |Aut(fin)| = {} * {}",
                aut_ext.len(),
                group.order(),
                aut_fin.len()
            ))
        }
    }

    fn subsets_of(set: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0..(1u32 << set.len()) {
            out.push(
                set.iter()
                    .enumerate()
                    .filter(|&(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &j)| j)
                    .collect(),
            );
        }
        out
    }

    pub fn vertex_formula(rs: &RootSystem) -> std::result::Result<String, String> {
        let families: Vec<Vec<usize>> = if rs.rank() <= 4 {
            subsets_of(&rs.minuscule.clone())
        } else {
            vec![Vec::new(), rs.minuscule.clone()]
        };
        let mut checked = 0;
        for j_y in families {
            let f = fundamental_polytope(rs, &j_y).map_err(|e| e.to_string())?;
            let enumerated = vertex_enumeration(&f.halfspaces).map_err(|e| e.to_string())?;
            if enumerated != f.vertices {
                return Err(format!(
                    "vertex sets differ for J_Y = {j_y:?}: formula {} points, enumeration {}",
                    f.vertices.len(),
                    enumerated.len()
                ));
            }
            checked += 1;
        }
        Ok(format!("{checked} minuscule subsets"))
    }

    fn polytope_for(rs: &RootSystem, spec: &LatticeSpec) -> Polytope {
        let (_, j_y) = crate::lattices::omega_subgroup(rs, spec);
        fundamental_polytope(rs, &j_y).expect("valid minuscule set")
    }

    pub fn tiling(rs: &RootSystem, seed: u64, points: usize) -> std::result::Result<String, String> {
        let mut total = 0;
        for spec in enumerate_lattices(rs) {
            let f = polytope_for(rs, &spec);
            for k in 0..points {
                let lam = random_rational_point(rs, seed + k as u64, 12);
                let (pt, witness) = fold_full(rs, &spec, &lam);
                if contains(&f, &pt) == Location::Outside {
                    return Err(format!(
                        "lattice {}: fold of {lam} left the polytope at {pt}",
                        spec.label(rs)
                    ));
                }
                if affine_apply(rs, &witness, &lam) != pt {
                    return Err(format!(
                        "lattice {}: witness does not map {lam} to {pt}",
                        spec.label(rs)
                    ));
                }
                total += 1;
            }
        }
        Ok(format!("{total} folds verified"))
    }

    pub fn canonical_forms(
        rs: &RootSystem,
        seed: u64,
        points: usize,
    ) -> std::result::Result<String, String> {
        let mut total = 0;
        for spec in enumerate_lattices(rs) {
            for k in 0..points {
                let lam = random_rational_point(rs, seed + 1000 + k as u64, 8);
                let (canon, _) = canonicalize(rs, &spec, &lam);
                let brute =
                    brute_canonicalize(rs, &spec, &lam, 64).map_err(|e| e.to_string())?;
                if canon.rep != brute {
                    return Err(format!(
                        "lattice {}: canonical {} but brute force {brute} for {lam}",
                        spec.label(rs),
                        canon.rep
                    ));
                }
                total += 1;
            }
        }
        Ok(format!("{total} points agree with the orbit search"))
    }

    pub fn injectivity(rs: &RootSystem, bound: i64) -> std::result::Result<String, String> {
        let mut total = 0;
        for spec in enumerate_lattices(rs) {
            let cells = fundamental_complex(rs, &spec);
            let translations = lattice_points_in_box(rs, &spec, bound);
            for mu in &translations {
                if mu.is_zero() {
                    continue;
                }
                for a in &cells {
                    for b in &cells {
                        if cells_intersect_shifted(a, b, mu) {
                            return Err(format!(
                                "lattice {}: translate by {mu} meets the domain",
                                spec.label(rs)
                            ));
                        }
                        total += 1;
                    }
                }
            }
        }
        Ok(format!("{total} cell pairs empty"))
    }

    /// Integral lattice points with all coordinates bounded in absolute
    /// value.
    pub fn lattice_points_in_box(
        rs: &RootSystem,
        spec: &LatticeSpec,
        bound: i64,
    ) -> Vec<CoweightVector> {
        let r = rs.rank();
        let mut out = Vec::new();
        let mut coords = vec![-bound; r];
        'outer: loop {
            if solve_in_lattice(&spec.basis, &coords).is_some() {
                out.push(CoweightVector::from_integers(&coords));
            }
            for k in 0..r {
                if coords[k] < bound {
                    coords[k] += 1;
                    continue 'outer;
                }
                coords[k] = -bound;
            }
            break;
        }
        out
    }

    /// Exact emptiness of `a` against `mu + b`, by bounding-box rejection
    /// then Fourier-Motzkin feasibility.
    pub fn cells_intersect_shifted(a: &Polytope, b: &Polytope, mu: &CoweightVector) -> bool {
        let dim = a.dimension();
        for k in 0..dim {
            let min_a = a.vertices.iter().map(|v| &v.coords[k]).min().unwrap();
            let max_a = a.vertices.iter().map(|v| &v.coords[k]).max().unwrap();
            let min_b: Rat =
                b.vertices.iter().map(|v| &v.coords[k] + &mu.coords[k]).min().unwrap();
            let max_b: Rat =
                b.vertices.iter().map(|v| &v.coords[k] + &mu.coords[k]).max().unwrap();
            if &min_b > max_a || &max_b < min_a {
                return false;
            }
        }
        let mut rows: Vec<(Vec<Rat>, Rat)> = a.halfspaces.iter().map(|h| h.as_le_row()).collect();
        for h in &b.halfspaces {
            let (coeffs, bound) = h.as_le_row();
            let shift: Rat = coeffs.iter().zip(&mu.coords).map(|(c, m)| c * m).sum();
            rows.push((coeffs, bound + shift));
        }
        fm_feasible(&rows)
    }

    pub fn explicit_action_formula(
        rs: &RootSystem,
        seed: u64,
        points: usize,
    ) -> std::result::Result<String, String> {
        let mut rng = SplitMix64::new(seed + 7);
        let mut total = 0;
        for &j in &rs.minuscule.clone() {
            let omega = omega_element(rs, j).map_err(|e| e.to_string())?;
            let inverse = affine_inverse(rs, &omega.affine);
            for _ in 0..points {
                let lam = random_facet_point(rs, j, &mut rng);
                let formula = explicit_action(rs, j, &lam).map_err(|e| e.to_string())?;
                let direct = affine_apply(rs, &inverse, &lam);
                if formula != direct {
                    return Err(format!(
                        "node {j}: formula gives {formula} but the affine route {direct}"
                    ));
                }
                total += 1;
            }
        }
        Ok(format!("{total} facet points"))
    }

    pub fn minimal_lifts(rs: &RootSystem) -> std::result::Result<String, String> {
        for &i in &rs.minuscule.clone() {
            let u = minimal_length_lift(rs, &CoweightVector::fundamental(rs.rank(), i))
                .map_err(|e| e.to_string())?;
            let e = omega_element(rs, i).map_err(|e| e.to_string())?;
            if !affine_equal(rs, &u, &e.affine) {
                return Err(format!("lift of node {i} differs from the stabilizer element"));
            }
        }
        Ok(format!("{} minuscule nodes", rs.minuscule.len()))
    }

    pub fn alcove_vertices_satisfy_hrep(rs: &RootSystem) -> std::result::Result<String, String> {
        let a = alcove(rs);
        let enumerated = vertex_enumeration(&a.halfspaces).map_err(|e| e.to_string())?;
        if enumerated == a.vertices {
            Ok(format!("{} vertices", a.vertices.len()))
        } else {
            Err("alcove vertex enumeration disagrees with the scaled coweights".to_string())
        }
    }

    /// The full per-type report behind `verify`.
    pub fn run_all(rs: &RootSystem, seed: u64) -> Vec<CheckReport> {
        let mut out = Vec::new();
        if classical_weyl_order(rs.ty) <= DEFAULT_WEYL_CAP as u128 {
            out.push(report("weyl-order", weyl_order(rs)));
        } else {
            out.push(skipped("weyl-order", "group order above enumeration cap"));
        }
        out.push(report("omega-structure", omega_matches_fundamental_group(rs)));
        out.push(report("semidirect-split", semidirect_split(rs)));
        out.push(report("alcove-vertices", alcove_vertices_satisfy_hrep(rs)));
        out.push(report("vertex-formula", vertex_formula(rs)));
        out.push(report("tiling", tiling(rs, seed, 100)));
        out.push(report("explicit-action", explicit_action_formula(rs, seed, 25)));
        out.push(report("minimal-lift", minimal_lifts(rs)));
        if rs.rank() <= 3 {
            out.push(report("canonical-forms", canonical_forms(rs, seed, 50)));
            out.push(report("injectivity", injectivity(rs, 1)));
        } else {
            out.push(skipped("canonical-forms", "orbit search capped at rank 3"));
            out.push(skipped("injectivity", "exact emptiness capped at rank 3"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::{alcove, fundamental_polytope};
    use crate::lattices::subgroup_to_lattice;
    use crate::omega::omega_group;
    use crate::rational::rat;
    use crate::rootsys::{build, RootSystemType};

    fn rs(s: &str) -> RootSystem {
        build(RootSystemType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(enumerate_weyl(&rs("A2"), DEFAULT_WEYL_CAP).unwrap().order(), 6);
        assert_eq!(enumerate_weyl(&rs("B2"), DEFAULT_WEYL_CAP).unwrap().order(), 8);
        assert_eq!(enumerate_weyl(&rs("A1"), DEFAULT_WEYL_CAP).unwrap().order(), 2);
        assert_eq!(enumerate_weyl(&rs("F4"), DEFAULT_WEYL_CAP).unwrap().order(), 1152);
    }

    #[test]
    fn weyl_cap_is_honored() {
        assert!(matches!(
            enumerate_weyl(&rs("B3"), 10),
            Err(Error::WeylCapExceeded(10))
        ));
    }

    #[test]
    fn weyl_lengths_are_cayley_distances() {
        let b2 = rs("B2");
        let enumeration = enumerate_weyl(&b2, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(enumeration.lengths.iter().max(), Some(&4));
        assert_eq!(enumeration.lengths.iter().filter(|&&l| l == 0).count(), 1);
    }

    #[test]
    fn vertex_enumeration_alcove_and_polytope() {
        let a2 = rs("A2");
        let alv = alcove(&a2);
        assert_eq!(vertex_enumeration(&alv.halfspaces).unwrap(), alv.vertices);
        let f = fundamental_polytope(&a2, &[1, 2]).unwrap();
        assert_eq!(vertex_enumeration(&f.halfspaces).unwrap(), f.vertices);
        let b3 = rs("B3");
        let f = fundamental_polytope(&b3, &[1]).unwrap();
        assert_eq!(vertex_enumeration(&f.halfspaces).unwrap(), f.vertices);
    }

    #[test]
    fn vertex_enumeration_detects_unbounded() {
        use crate::domains::Halfspace;
        // a half-plane: x >= 0 in 2d
        let hs = vec![Halfspace::ge(vec![rat_int(1), rat_int(0)], rat_int(0))];
        assert!(matches!(vertex_enumeration(&hs), Err(Error::Unbounded)));
    }

    #[test]
    fn brute_canonicalize_examples() {
        let a1 = rs("A1");
        let group = omega_group(&a1);
        let sc = subgroup_to_lattice(&a1, &group, &[0]).unwrap();
        let lam = CoweightVector { coords: vec![rat(5, 2)] };
        let best = brute_canonicalize(&a1, &sc, &lam, 16).unwrap();
        assert_eq!(best, CoweightVector { coords: vec![rat(1, 2)] });

        let zero = CoweightVector::zero(1);
        assert_eq!(brute_canonicalize(&a1, &sc, &zero, 16).unwrap(), zero);

        // adjoint A2: the minuscule coweight collapses to the origin
        let a2 = rs("A2");
        let group = omega_group(&a2);
        let adjoint = subgroup_to_lattice(&a2, &group, &[0, 1, 2]).unwrap();
        let w1 = CoweightVector::fundamental(2, 1);
        assert!(brute_canonicalize(&a2, &adjoint, &w1, 16).unwrap().is_zero());
    }

    #[test]
    fn sampler_is_deterministic_and_boxed() {
        let a2 = rs("A2");
        let p0 = random_rational_point(&a2, 0, 6);
        let p0_again = random_rational_point(&a2, 0, 6);
        assert_eq!(p0, p0_again);
        let p1 = random_rational_point(&a2, 1, 6);
        assert_ne!(p0, p1);
        let three = rat_int(3);
        for seed in 0..1000 {
            let p = random_rational_point(&a2, seed, 6);
            for c in &p.coords {
                assert!(c <= &three && c >= &(-three.clone()));
                assert!(c.denom() <= &num::BigInt::from(6));
            }
        }
    }

    #[test]
    fn facet_and_interior_samples_land_correctly() {
        let a3 = rs("A3");
        let f = fundamental_polytope(&a3, &[1, 2, 3]).unwrap();
        let mut rng = SplitMix64::new(4);
        for _ in 0..20 {
            let interior = random_interior_point(&a3, &mut rng);
            assert_eq!(crate::domains::contains(&f, &interior), crate::domains::Location::Interior);
            for j in [1, 2, 3] {
                let facet = random_facet_point(&a3, j, &mut rng);
                assert_eq!(
                    a3.pairing_highest(&facet) + &facet.coords[j - 1],
                    rat_int(1)
                );
                assert_ne!(
                    crate::domains::contains(&f, &facet),
                    crate::domains::Location::Outside
                );
            }
        }
    }

    #[test]
    fn check_suite_passes_for_small_types() {
        for name in ["A2", "B2", "G2"] {
            for r in checks::run_all(&rs(name), 0) {
                assert_ne!(r.outcome, checks::Outcome::Fail, "{name} {}: {}", r.name, r.detail);
            }
        }
    }
}

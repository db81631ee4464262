//! The fundamental alcove, the polytope it is cut down to by the minuscule
//! facet constraints, intermediate-lattice variants, membership tests with
//! boundary classification, folding with group witnesses, and the polytopal
//! complex of stabilizer translates. Includes the JSON wire format consumed
//! by the CLI.

use num::Zero;
use serde_json::{json, Value};

use crate::lattices::{coset_representatives, omega_subgroup, LatticeSpec};
use crate::omega::{omega_element, omega_group, OmegaElement};
use crate::rational::{format_rat, parse_rat, rat_int, Rat};
use crate::rootsys::{CoweightVector, RootSystem, RootVector};
use crate::weyl::{
    affine_apply, affine_compose, affine_inverse, apply_word_root, fold_to_alcove, in_alcove,
    AffineElement,
};
use crate::{Error, Result};

/// Direction of a half-space constraint on `sum coeffs[i] * lambda_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
}

/// One half-space: the functional is given by root-basis coefficients, so its
/// value on a point is a plain dot product with the coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub coeffs: Vec<Rat>,
    pub bound: Rat,
    pub sense: Sense,
}

impl Halfspace {
    pub fn le(coeffs: Vec<Rat>, bound: Rat) -> Self {
        Halfspace { coeffs, bound, sense: Sense::Le }
    }

    pub fn ge(coeffs: Vec<Rat>, bound: Rat) -> Self {
        Halfspace { coeffs, bound, sense: Sense::Ge }
    }

    pub fn eval(&self, lambda: &CoweightVector) -> Rat {
        let mut acc = Rat::zero();
        for (c, l) in self.coeffs.iter().zip(&lambda.coords) {
            if !c.is_zero() {
                acc += c * l;
            }
        }
        acc
    }

    pub fn satisfied(&self, lambda: &CoweightVector) -> bool {
        match self.sense {
            Sense::Le => self.eval(lambda) <= self.bound,
            Sense::Ge => self.eval(lambda) >= self.bound,
        }
    }

    pub fn tight(&self, lambda: &CoweightVector) -> bool {
        self.eval(lambda) == self.bound
    }

    /// As a `<=` row for the feasibility machinery.
    pub fn as_le_row(&self) -> (Vec<Rat>, Rat) {
        match self.sense {
            Sense::Le => (self.coeffs.clone(), self.bound.clone()),
            Sense::Ge => (self.coeffs.iter().map(|c| -c).collect(), -self.bound.clone()),
        }
    }
}

/// A convex polytope carrying both descriptions: half-spaces and vertices.
/// Vertices are kept sorted for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    pub halfspaces: Vec<Halfspace>,
    pub vertices: Vec<CoweightVector>,
}

impl Polytope {
    pub fn new(halfspaces: Vec<Halfspace>, mut vertices: Vec<CoweightVector>) -> Self {
        vertices.sort();
        vertices.dedup();
        let p = Polytope { halfspaces, vertices };
        for v in &p.vertices {
            assert!(
                p.halfspaces.iter().all(|h| h.satisfied(v)),
                "vertex {v} violates a defining half-space"
            );
        }
        p
    }

    pub fn dimension(&self) -> usize {
        self.halfspaces.first().map_or(0, |h| h.coeffs.len())
    }
}

/// Which fundamental domain a CLI request names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainKind {
    /// The fundamental alcove.
    Alcove,
    /// The alcove cut by all minuscule facet constraints.
    FAdjoint,
    /// The alcove cut by the constraints of a sub-collection of minuscule
    /// nodes.
    FPrime(Vec<usize>),
    /// The complex of stabilizer-coset translates, named by representative
    /// indices.
    FComplex(Vec<usize>),
}

/// Membership with boundary classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Interior,
    Boundary,
    Outside,
}

fn int_coeffs(values: &[i64]) -> Vec<Rat> {
    values.iter().map(|&v| rat_int(v)).collect()
}

/// The closed fundamental alcove: coordinates nonnegative, pairing with the
/// highest root at most 1. Vertices are the origin and the scaled
/// fundamental coweights.
pub fn alcove(rs: &RootSystem) -> Polytope {
    let r = rs.rank();
    let mut halfspaces = Vec::with_capacity(r + 1);
    for i in 0..r {
        let mut coeffs = vec![0i64; r];
        coeffs[i] = 1;
        halfspaces.push(Halfspace::ge(int_coeffs(&coeffs), Rat::zero()));
    }
    halfspaces.push(Halfspace::le(int_coeffs(&rs.marks), rat_int(1)));
    let vertices = rs.alcove_vertices().into_iter().map(|(_, v)| v).collect();
    Polytope::new(halfspaces, vertices)
}

/// The fundamental polytope for the lattice with minuscule set `j_y`: the
/// alcove cut by `<lambda, alpha_0 + alpha_j> <= 1` for each `j` in `j_y`.
/// Vertices come from the barycenter formula: isobarycenters of subsets of
/// the chosen minuscule coweights together with the origin, plus the
/// untouched alcove vertices.
pub fn fundamental_polytope(rs: &RootSystem, j_y: &[usize]) -> Result<Polytope> {
    let mut j_y = j_y.to_vec();
    j_y.sort_unstable();
    j_y.dedup();
    for &j in &j_y {
        rs.check_node(j)?;
        if !rs.is_minuscule(j) {
            return Err(Error::NotMinuscule(j));
        }
    }
    let r = rs.rank();
    let base = alcove(rs);
    let mut halfspaces = base.halfspaces;
    for &j in &j_y {
        let mut coeffs = rs.marks.clone();
        coeffs[j - 1] += 1;
        halfspaces.push(Halfspace::le(int_coeffs(&coeffs), rat_int(1)));
    }

    let mut vertices: Vec<CoweightVector> = Vec::new();
    // isobarycenters of {0} with every subset of the constrained minuscule
    // coweights
    for mask in 0..(1u32 << j_y.len()) {
        let members: Vec<usize> = j_y
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask & (1 << k) != 0)
            .map(|(_, &j)| j)
            .collect();
        let weight = Rat::new(1.into(), (members.len() as i64 + 1).into());
        let mut v = CoweightVector::zero(r);
        for j in members {
            v.coords[j - 1] = weight.clone();
        }
        vertices.push(v);
    }
    // alcove vertices of the unconstrained nodes
    for i in 1..=r {
        if !j_y.contains(&i) {
            let mut v = CoweightVector::zero(r);
            v.coords[i - 1] = Rat::new(1.into(), rs.marks[i - 1].into());
            vertices.push(v);
        }
    }
    Ok(Polytope::new(halfspaces, vertices))
}

/// Exact membership: interior when every constraint is strict, boundary when
/// all hold and at least one is tight.
pub fn contains(p: &Polytope, lambda: &CoweightVector) -> Location {
    let mut tight = false;
    for h in &p.halfspaces {
        if !h.satisfied(lambda) {
            return Location::Outside;
        }
        if h.tight(lambda) {
            tight = true;
        }
    }
    if tight {
        Location::Boundary
    } else {
        Location::Interior
    }
}

fn in_fundamental_polytope(rs: &RootSystem, j_y: &[usize], lambda: &CoweightVector) -> bool {
    if !in_alcove(rs, lambda) {
        return false;
    }
    let highest = rs.pairing_highest(lambda);
    j_y.iter().all(|&j| &highest + &lambda.coords[j - 1] <= rat_int(1))
}

/// Folds an alcove point into the fundamental polytope of `j_y` by one
/// stabilizer element: the one indexed by the largest coordinate over `j_y`
/// (smallest node on ties). Returns the folded point and the witness, which
/// maps the folded point back to the input.
pub fn fold_omega(
    rs: &RootSystem,
    j_y: &[usize],
    lambda: &CoweightVector,
) -> Result<(CoweightVector, OmegaElement)> {
    for &j in j_y {
        rs.check_node(j)?;
        if !rs.is_minuscule(j) {
            return Err(Error::NotMinuscule(j));
        }
    }
    if !in_alcove(rs, lambda) {
        return Err(Error::OutsideAlcove);
    }
    if in_fundamental_polytope(rs, j_y, lambda) {
        return Ok((lambda.clone(), OmegaElement::identity(rs)));
    }
    let i = j_y
        .iter()
        .copied()
        .max_by(|&a, &b| {
            lambda.coords[a - 1]
                .cmp(&lambda.coords[b - 1])
                .then(b.cmp(&a)) // prefer the smaller node on ties
        })
        .expect("a violated constraint needs a nonempty minuscule set");
    let omega = omega_element(rs, i)?;
    let pt = affine_apply(rs, &affine_inverse(rs, &omega.affine), lambda);
    assert!(
        in_fundamental_polytope(rs, j_y, &pt),
        "one stabilizer application must land in the fundamental polytope"
    );
    Ok((pt, omega))
}

/// Evaluates the closed-form coordinate permutation for the inverse
/// stabilizer action on a facet point: coordinates are shuffled by the node
/// permutation, with the coordinate of the facet node landing on the node
/// that maps to 0. Requires the facet condition
/// `<lambda, alpha_0 + alpha_j> = 1`.
pub fn explicit_action(rs: &RootSystem, j: usize, lambda: &CoweightVector) -> Result<CoweightVector> {
    rs.check_node(j)?;
    if !rs.is_minuscule(j) {
        return Err(Error::NotMinuscule(j));
    }
    let facet = rs.pairing_highest(lambda) + &lambda.coords[j - 1];
    if facet != rat_int(1) {
        return Err(Error::FacetCondition);
    }
    let sigma = omega_element(rs, j)?.sigma;
    let r = rs.rank();
    let mut coords = Vec::with_capacity(r);
    for i in 1..=r {
        let image = sigma.apply(i);
        if image == 0 {
            coords.push(lambda.coords[j - 1].clone());
        } else {
            coords.push(lambda.coords[image - 1].clone());
        }
    }
    Ok(CoweightVector { coords })
}

/// Folds an arbitrary point of the dual space into the fundamental polytope
/// of the lattice: alcove folding followed by at most one stabilizer fold.
/// The witness lies in the lattice's affine Weyl group and maps the input to
/// the folded point.
pub fn fold_full(
    rs: &RootSystem,
    spec: &LatticeSpec,
    lambda: &CoweightVector,
) -> (CoweightVector, AffineElement) {
    let (in_alcove_pt, alcove_witness) = fold_to_alcove(rs, lambda);
    let (_, j_y) = omega_subgroup(rs, spec);
    let (pt, omega) =
        fold_omega(rs, &j_y, &in_alcove_pt).expect("alcove point folds into the polytope");
    let witness = affine_compose(rs, &affine_inverse(rs, &omega.affine), &alcove_witness);
    debug_assert_eq!(affine_apply(rs, &witness, lambda), pt);
    (pt, witness)
}

/// Applies an affine alcove-stabilizer element to a polytope: half-space
/// normals move by the root action of the inverse, vertices by the element.
fn transform_polytope(rs: &RootSystem, p: &Polytope, omega: &OmegaElement) -> Polytope {
    let halfspaces = p
        .halfspaces
        .iter()
        .map(|h| {
            // lambda in omega(P) iff omega^{-1}(lambda) satisfies h; pushing
            // the functional through the inverse sends its root-coefficients
            // through the Weyl part and shifts the bound by the translation.
            let scale: num::BigInt = h
                .coeffs
                .iter()
                .fold(num::BigInt::from(1), |acc, c| num::Integer::lcm(&acc, c.denom()));
            let ints: Vec<i64> = h
                .coeffs
                .iter()
                .map(|c| {
                    let v = c.numer() * (&scale / c.denom());
                    i64::try_from(v).expect("small coefficients")
                })
                .collect();
            let root = RootVector { coords: ints };
            let moved = apply_word_root(rs, &omega.affine.word, &root);
            let coeffs: Vec<Rat> = moved
                .coords
                .iter()
                .map(|&c| Rat::new(c.into(), scale.clone()))
                .collect();
            let shift: Rat = coeffs
                .iter()
                .zip(&omega.affine.translation.coords)
                .map(|(c, t)| c * t)
                .sum();
            Halfspace { coeffs, bound: &h.bound + shift, sense: h.sense }
        })
        .collect();
    let vertices =
        p.vertices.iter().map(|v| affine_apply(rs, &omega.affine, v)).collect();
    Polytope::new(halfspaces, vertices)
}

/// The polytopal-complex fundamental domain for the lattice: one cell per
/// coset of the stabilizer subgroup, each a stabilizer translate of the
/// adjoint fundamental polytope.
pub fn fundamental_complex(rs: &RootSystem, spec: &LatticeSpec) -> Vec<Polytope> {
    let group = omega_group(rs);
    let base = fundamental_polytope(rs, &rs.minuscule.clone()).expect("minuscule nodes");
    coset_representatives(rs, &group, spec)
        .iter()
        .map(|omega| transform_polytope(rs, &base, omega))
        .collect()
}

fn sense_str(s: Sense) -> &'static str {
    match s {
        Sense::Le => "le",
        Sense::Ge => "ge",
    }
}

/// Serializes a polytope with its type and lattice labels into the
/// documented JSON schema; all numbers are exact `p/q` strings.
pub fn polytope_to_json(p: &Polytope, type_label: &str, lattice_label: &str) -> Value {
    json!({
        "type": type_label,
        "lattice": lattice_label,
        "halfspaces": p.halfspaces.iter().map(|h| {
            json!({
                "coeffs": h.coeffs.iter().map(format_rat).collect::<Vec<_>>(),
                "bound": format_rat(&h.bound),
                "sense": sense_str(h.sense),
            })
        }).collect::<Vec<_>>(),
        "vertices": p.vertices.iter().map(|v| {
            v.coords.iter().map(format_rat).collect::<Vec<_>>()
        }).collect::<Vec<_>>(),
    })
}

/// Reads the JSON schema back; returns the polytope with its labels.
pub fn polytope_from_json(v: &Value) -> Result<(Polytope, String, String)> {
    let bad = |what: &str| Error::ParseRational(format!("polytope json: {what}"));
    let ty = v["type"].as_str().ok_or_else(|| bad("type"))?.to_string();
    let lattice = v["lattice"].as_str().ok_or_else(|| bad("lattice"))?.to_string();
    let mut halfspaces = Vec::new();
    for h in v["halfspaces"].as_array().ok_or_else(|| bad("halfspaces"))? {
        let coeffs = h["coeffs"]
            .as_array()
            .ok_or_else(|| bad("coeffs"))?
            .iter()
            .map(|c| parse_rat(c.as_str().unwrap_or("")))
            .collect::<Result<Vec<_>>>()?;
        let bound = parse_rat(h["bound"].as_str().unwrap_or(""))?;
        let sense = match h["sense"].as_str() {
            Some("le") => Sense::Le,
            Some("ge") => Sense::Ge,
            _ => return Err(bad("sense")),
        };
        halfspaces.push(Halfspace { coeffs, bound, sense });
    }
    let mut vertices = Vec::new();
    for row in v["vertices"].as_array().ok_or_else(|| bad("vertices"))? {
        let coords = row
            .as_array()
            .ok_or_else(|| bad("vertex"))?
            .iter()
            .map(|c| parse_rat(c.as_str().unwrap_or("")))
            .collect::<Result<Vec<_>>>()?;
        vertices.push(CoweightVector { coords });
    }
    Ok((Polytope::new(halfspaces, vertices), ty, lattice))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{enumerate_lattices, subgroup_to_lattice};
    use crate::oracle::SplitMix64;
    use crate::rational::rat;
    use crate::rootsys::{build, RootSystemType};
    use crate::weyl::affine_equal;

    fn rs(s: &str) -> RootSystem {
        build(RootSystemType::parse(s).unwrap()).unwrap()
    }

    fn cw(coords: &[(i64, i64)]) -> CoweightVector {
        CoweightVector { coords: coords.iter().map(|&(p, q)| rat(p, q)).collect() }
    }

    #[test]
    fn alcove_shapes() {
        let a2 = alcove(&rs("A2"));
        assert_eq!(a2.halfspaces.len(), 3);
        assert_eq!(
            a2.vertices,
            vec![cw(&[(0, 1), (0, 1)]), cw(&[(0, 1), (1, 1)]), cw(&[(1, 1), (0, 1)])]
        );

        // rank-2 B/C with C-style labels: vertices 0, varpi_1/2, varpi_2
        let b2 = alcove(&rs("B2"));
        assert_eq!(
            b2.vertices,
            vec![cw(&[(0, 1), (0, 1)]), cw(&[(0, 1), (1, 1)]), cw(&[(1, 2), (0, 1)])]
        );

        let a1 = alcove(&rs("A1"));
        assert_eq!(a1.vertices, vec![cw(&[(0, 1)]), cw(&[(1, 1)])]);
    }

    #[test]
    fn fundamental_polytope_a2() {
        let a2 = rs("A2");
        let f = fundamental_polytope(&a2, &[1, 2]).unwrap();
        let expected = vec![
            cw(&[(0, 1), (0, 1)]),
            cw(&[(0, 1), (1, 2)]),
            cw(&[(1, 3), (1, 3)]),
            cw(&[(1, 2), (0, 1)]),
        ];
        assert_eq!(f.vertices, expected);
        assert_eq!(f.halfspaces.len(), 5);
    }

    #[test]
    fn fundamental_polytope_validations() {
        let a2 = rs("A2");
        assert!(fundamental_polytope(&a2, &[]).unwrap().vertices == alcove(&a2).vertices);
        let b3 = rs("B3");
        assert!(matches!(fundamental_polytope(&b3, &[2]), Err(Error::NotMinuscule(2))));
    }

    #[test]
    fn a3_partial_polytope_matches_direct_cut() {
        // with only the middle node constrained the H-rep is the alcove plus
        // one extra facet
        let a3 = rs("A3");
        let f = fundamental_polytope(&a3, &[2]).unwrap();
        assert_eq!(f.halfspaces.len(), 5);
        let extra = f.halfspaces.last().unwrap();
        assert_eq!(
            extra.coeffs,
            vec![rat_int(1), rat_int(2), rat_int(1)],
            "highest root plus alpha_2"
        );
        assert_eq!(extra.bound, rat_int(1));
    }

    #[test]
    fn contains_classification() {
        let a2 = rs("A2");
        let f = fundamental_polytope(&a2, &[1, 2]).unwrap();
        assert_eq!(contains(&f, &cw(&[(1, 3), (1, 3)])), Location::Boundary);
        assert_eq!(contains(&f, &cw(&[(0, 1), (0, 1)])), Location::Boundary);
        assert_eq!(contains(&f, &cw(&[(1, 1), (0, 1)])), Location::Outside);
        assert_eq!(contains(&f, &cw(&[(1, 8), (1, 8)])), Location::Interior);
    }

    #[test]
    fn fold_omega_examples() {
        let a2 = rs("A2");
        let j = vec![1, 2];
        // varpi_1 is an alcove vertex outside F; it folds to the origin
        let w1 = CoweightVector::fundamental(2, 1);
        let (pt, omega) = fold_omega(&a2, &j, &w1).unwrap();
        assert!(pt.is_zero());
        assert_eq!(omega.index, 1);
        assert_eq!(affine_apply(&a2, &omega.affine, &pt), w1);

        // a point already inside stays put with the identity witness
        let inside = cw(&[(1, 8), (1, 8)]);
        let (pt, omega) = fold_omega(&a2, &j, &inside).unwrap();
        assert_eq!(pt, inside);
        assert!(omega.is_identity());

        // the argmax rule picks node 1 here
        let lam = cw(&[(2, 3), (1, 6)]);
        let (pt, omega) = fold_omega(&a2, &j, &lam).unwrap();
        assert_eq!(omega.index, 1);
        assert!(in_fundamental_polytope(&a2, &j, &pt));
        assert_eq!(affine_apply(&a2, &omega.affine, &pt), lam);

        // outside the alcove is rejected
        assert!(matches!(
            fold_omega(&a2, &j, &cw(&[(2, 1), (0, 1)])),
            Err(Error::OutsideAlcove)
        ));
    }

    #[test]
    fn explicit_action_matches_affine_route() {
        let a2 = rs("A2");
        // lambda on the facet of node 1
        for lam in [cw(&[(1, 2), (0, 1)]), cw(&[(1, 3), (1, 3)]), cw(&[(2, 5), (1, 5)])] {
            let direct = explicit_action(&a2, 1, &lam).unwrap();
            let omega = omega_element(&a2, 1).unwrap();
            let via_affine = affine_apply(&a2, &affine_inverse(&a2, &omega.affine), &lam);
            assert_eq!(direct, via_affine);
        }
        let a1 = rs("A1");
        let mid = cw(&[(1, 2)]);
        assert_eq!(explicit_action(&a1, 1, &mid).unwrap(), mid);

        // facet condition violated
        assert!(matches!(
            explicit_action(&a2, 1, &cw(&[(1, 8), (1, 8)])),
            Err(Error::FacetCondition)
        ));
    }

    #[test]
    fn fold_full_examples() {
        let a2 = rs("A2");
        let group = omega_group(&a2);
        let adjoint = subgroup_to_lattice(&a2, &group, &[0, 1, 2]).unwrap();
        let lam = cw(&[(2, 3), (2, 3)]);
        let (pt, witness) = fold_full(&a2, &adjoint, &lam);
        assert_eq!(pt, cw(&[(1, 3), (1, 3)]));
        assert_eq!(affine_apply(&a2, &witness, &lam), pt);

        // a point already in the polytope gets the identity witness
        let inside = cw(&[(1, 8), (1, 8)]);
        let (pt, witness) = fold_full(&a2, &adjoint, &inside);
        assert_eq!(pt, inside);
        assert!(witness.is_identity(&a2));
    }

    #[test]
    fn fold_full_a3_intermediate() {
        // with the middle-node lattice both outer fundamental coweights sit
        // inside the polytope; folding fixes them
        let a3 = rs("A3");
        let group = omega_group(&a3);
        let spec = subgroup_to_lattice(&a3, &group, &[0, 2]).unwrap();
        let w3 = CoweightVector::fundamental(3, 3);
        let (pt, _) = fold_full(&a3, &spec, &w3);
        assert_eq!(pt, w3);
        let w1 = CoweightVector::fundamental(3, 1);
        let (pt, _) = fold_full(&a3, &spec, &w1);
        assert_eq!(pt, w1);
    }

    #[test]
    fn complex_cell_counts() {
        let a3 = rs("A3");
        let group = omega_group(&a3);
        let adjoint = subgroup_to_lattice(&a3, &group, &[0, 1, 2, 3]).unwrap();
        assert_eq!(fundamental_complex(&a3, &adjoint).len(), 1);

        let sc = subgroup_to_lattice(&a3, &group, &[0]).unwrap();
        let cells = fundamental_complex(&a3, &sc);
        assert_eq!(cells.len(), 4);

        let mid = subgroup_to_lattice(&a3, &group, &[0, 2]).unwrap();
        let cells = fundamental_complex(&a3, &mid);
        assert_eq!(cells.len(), 2);
        // second cell is the omega_1 translate: contains varpi_1
        let w1 = CoweightVector::fundamental(3, 1);
        assert_ne!(contains(&cells[1], &w1), Location::Outside);
    }

    #[test]
    fn complex_cells_stay_in_alcove_and_cover() {
        for name in ["A2", "A3", "B3", "C3"] {
            let rsys = rs(name);
            for spec in enumerate_lattices(&rsys) {
                let cells = fundamental_complex(&rsys, &spec);
                for cell in &cells {
                    for v in &cell.vertices {
                        assert!(in_alcove(&rsys, v), "{name}: cell vertex outside alcove");
                    }
                }
                let mut rng = SplitMix64::new(2024);
                for _ in 0..50 {
                    let raw = crate::oracle::random_point_with(&mut rng, rsys.rank(), 6);
                    let (pt, _) = fold_to_alcove(&rsys, &raw);
                    if spec.subgroup == vec![0] {
                        // with the coroot lattice the translates tile the
                        // whole alcove
                        let covered =
                            cells.iter().any(|c| contains(c, &pt) != Location::Outside);
                        assert!(covered, "{name}: alcove point not covered by the complex");
                    } else {
                        // otherwise some image under the lattice stabilizer
                        // lands in the complex
                        let (_, j_y) = crate::lattices::omega_subgroup(&rsys, &spec);
                        let mut images = vec![pt.clone()];
                        for &j in &j_y {
                            let e = omega_element(&rsys, j).unwrap();
                            images.push(affine_apply(&rsys, &e.affine, &pt));
                        }
                        let covered = images.iter().any(|q| {
                            cells.iter().any(|c| contains(c, q) != Location::Outside)
                        });
                        assert!(covered, "{name}: stabilizer orbit misses the complex");
                    }
                }
            }
        }
    }

    #[test]
    fn facet_exchange_identity() {
        // for omega_i sending varpi_j to 0, the two facet functionals sum to
        // 2 on any point and its image
        for name in ["A3", "D4", "B3", "E6"] {
            let rsys = rs(name);
            let group = omega_group(&rsys);
            let mut rng = SplitMix64::new(7);
            for e in &group.elements {
                if e.is_identity() {
                    continue;
                }
                let j = e.sigma.inverse().apply(0);
                for _ in 0..25 {
                    let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 5);
                    let image = affine_apply(&rsys, &e.affine, &lam);
                    let left = rsys.pairing_highest(&lam) + &lam.coords[j - 1];
                    let right = rsys.pairing_highest(&image) + &image.coords[e.index - 1];
                    assert_eq!(left + right, rat_int(2), "{name} omega_{}", e.index);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let a3 = rs("A3");
        let f = fundamental_polytope(&a3, &[1, 2, 3]).unwrap();
        let v = polytope_to_json(&f, "A3", "adjoint");
        let (back, ty, lat) = polytope_from_json(&v).unwrap();
        assert_eq!(back, f);
        assert_eq!(ty, "A3");
        assert_eq!(lat, "adjoint");
        // spot the documented shape
        assert_eq!(v["halfspaces"][0]["sense"], "ge");
        assert!(v["vertices"][0].is_array());
    }

    #[test]
    fn transform_preserves_membership() {
        let a3 = rs("A3");
        let f = fundamental_polytope(&a3, &[1, 2, 3]).unwrap();
        let omega = omega_element(&a3, 1).unwrap();
        let moved = transform_polytope(&a3, &f, &omega);
        let mut rng = SplitMix64::new(55);
        for _ in 0..50 {
            let lam = crate::oracle::random_point_with(&mut rng, 3, 4);
            let image = affine_apply(&a3, &omega.affine, &lam);
            let before = contains(&f, &lam) != Location::Outside;
            let after = contains(&moved, &image) != Location::Outside;
            assert_eq!(before, after);
        }
    }
}

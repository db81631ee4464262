//! The stabilizer of the fundamental alcove inside the extended affine Weyl
//! group: its explicit elements `t_{varpi_i} w_0^i w_0` for minuscule nodes
//! `i`, the node permutations they induce on the extended Dynkin diagram, the
//! automorphism groups of the finite and extended diagrams, and minimal-length
//! lifts of coweight-lattice points.

use std::fmt;

use crate::rational::rat_int;
use crate::rootsys::{CoweightVector, RootSystem};
use crate::weyl::{
    affine_apply, affine_compose, affine_equal, apply_reflection, longest_element, reduce,
    AffineElement, WeylWord,
};
use crate::{Error, Result};

/// A permutation of `{0, 1, ..., n-1}` stored as an image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    pub fn from_map(map: Vec<usize>) -> Self {
        let mut seen = vec![false; map.len()];
        for &v in &map {
            assert!(v < map.len() && !seen[v], "not a permutation: {map:?}");
            seen[v] = true;
        }
        Permutation { map }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Composition acting right-to-left: `(a.compose(b))(x) = a(b(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { map: (0..self.len()).map(|x| self.map[other.map[x]]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v] = i;
        }
        Permutation { map }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while !p.is_identity() {
            p = p.compose(self);
            n += 1;
        }
        n
    }

    /// Cycle notation with fixed points omitted; cycles start at their
    /// smallest member and are sorted by it, e.g. `(0,7)(1,6)(3,5)`. The
    /// identity renders as `id`.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.len()];
        let mut out = String::new();
        for start in 0..self.len() {
            if seen[start] || self.map[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            let mut x = self.map[start];
            seen[start] = true;
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push('(');
            out.push_str(&cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
            out.push(')');
        }
        if out.is_empty() {
            "id".to_string()
        } else {
            out
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// An element of the alcove stabilizer: the identity (index 0) or
/// `omega_i = t_{varpi_i^vee} w_0^i w_0` for a minuscule node `i`, together
/// with the node permutation it induces on the alcove vertices.
#[derive(Debug, Clone)]
pub struct OmegaElement {
    /// 0 for the identity, otherwise a minuscule node index.
    pub index: usize,
    pub affine: AffineElement,
    /// Node permutation of `{0, ..., r}`: vertex `k` of the alcove maps to
    /// vertex `sigma(k)`.
    pub sigma: Permutation,
}

impl OmegaElement {
    pub fn identity(rs: &RootSystem) -> Self {
        OmegaElement {
            index: 0,
            affine: AffineElement::identity(rs.rank()),
            sigma: Permutation::identity(rs.rank() + 1),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.index == 0
    }
}

/// The permutation of the alcove vertex set `{0} u {varpi_k / n_k}` induced
/// by an alcove-stabilizing affine element. Panics if the element does not
/// stabilize the vertex set; the constructions here are verified, not
/// assumed.
fn sigma_from_affine(rs: &RootSystem, affine: &AffineElement) -> Permutation {
    let vertices = rs.alcove_vertices();
    let mut map = Vec::with_capacity(vertices.len());
    for (node, v) in &vertices {
        let image = affine_apply(rs, affine, v);
        let target = vertices
            .iter()
            .find(|(_, u)| *u == image)
            .unwrap_or_else(|| {
                panic!(
                    "alcove vertex {node} of {} maps outside the vertex set; \
                     the element does not stabilize the alcove",
                    rs.ty
                )
            });
        map.push(target.0);
    }
    Permutation::from_map(map)
}

/// The alcove-stabilizer element for a minuscule node: translation by the
/// fundamental coweight composed with `w_0^i w_0`. Vertex stability and
/// diagram compatibility are asserted on construction.
pub fn omega_element(rs: &RootSystem, i: usize) -> Result<OmegaElement> {
    rs.check_node(i)?;
    if !rs.is_minuscule(i) {
        return Err(Error::NotMinuscule(i));
    }
    let complement: Vec<usize> = (1..=rs.rank()).filter(|&j| j != i).collect();
    let w0i = longest_element(rs, &complement);
    let w0 = longest_element(rs, &(1..=rs.rank()).collect::<Vec<_>>());
    let mut letters = w0i.letters;
    letters.extend_from_slice(&w0.letters);
    let word = reduce(rs, &WeylWord::new(letters));
    let affine = AffineElement {
        translation: CoweightVector::fundamental(rs.rank(), i),
        word,
    };
    let sigma = sigma_from_affine(rs, &affine);
    assert_eq!(sigma.apply(0), i, "sigma must send node 0 to its index");
    let diagram = extended_diagram(rs);
    assert!(
        diagram.admits(&sigma),
        "sigma of node {i} must be an automorphism of the extended diagram"
    );
    Ok(OmegaElement { index: i, affine, sigma })
}

/// The node permutation induced by `omega_i` on the extended Dynkin diagram.
pub fn sigma_permutation(rs: &RootSystem, i: usize) -> Result<Permutation> {
    Ok(omega_element(rs, i)?.sigma)
}

/// The full alcove stabilizer: element list (identity first, then minuscule
/// nodes in increasing order), multiplication table and isomorphism type.
#[derive(Debug, Clone)]
pub struct OmegaGroup {
    pub elements: Vec<OmegaElement>,
    /// `table[p][q]` is the position of `elements[p] * elements[q]`.
    pub table: Vec<Vec<usize>>,
    /// Invariant factors of the abelian group, matching the fundamental
    /// group of the root system.
    pub invariant_factors: Vec<u64>,
}

impl OmegaGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Position of the element with the given node index.
    pub fn position_of(&self, index: usize) -> usize {
        self.elements
            .iter()
            .position(|e| e.index == index)
            .unwrap_or_else(|| panic!("no omega element with index {index}"))
    }

    pub fn by_index(&self, index: usize) -> &OmegaElement {
        &self.elements[self.position_of(index)]
    }

    /// Product of two elements given by node indices, as a node index.
    pub fn mul_indices(&self, a: usize, b: usize) -> usize {
        let p = self.position_of(a);
        let q = self.position_of(b);
        self.elements[self.table[p][q]].index
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let p = self.position_of(a);
        let q = (0..self.order())
            .find(|&q| self.elements[self.table[p][q]].index == 0)
            .expect("group element has an inverse");
        self.elements[q].index
    }

    fn element_order(&self, p: usize) -> usize {
        let mut q = p;
        let mut n = 1;
        while self.elements[q].index != 0 {
            q = self.table[q][p];
            n += 1;
        }
        n
    }
}

/// Builds the alcove stabilizer. The multiplication table is derived from
/// the vertex permutations and cross-checked against affine composition.
pub fn omega_group(rs: &RootSystem) -> OmegaGroup {
    let mut elements = vec![OmegaElement::identity(rs)];
    for &i in &rs.minuscule {
        elements.push(omega_element(rs, i).expect("minuscule node"));
    }
    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for p in 0..n {
        for q in 0..n {
            // omega_a(omega_b(0)) identifies the product by where it moves
            // node 0
            let target = elements[p].sigma.apply(elements[q].sigma.apply(0));
            let pos = elements
                .iter()
                .position(|e| e.index == target)
                .expect("product stays in the stabilizer");
            let composed = affine_compose(rs, &elements[p].affine, &elements[q].affine);
            assert!(
                affine_equal(rs, &composed, &elements[pos].affine),
                "{}: omega table disagrees with affine composition",
                rs.ty
            );
            table[p][q] = pos;
        }
    }
    for p in 0..n {
        for q in 0..n {
            assert_eq!(table[p][q], table[q][p], "alcove stabilizer must be abelian");
        }
    }

    // Invariant factors of a finite abelian group whose order/exponent pair
    // is one of the shapes arising here: cyclic, or (Z/e)^2-free products
    // with a single complement factor.
    let group = OmegaGroup { elements, table, invariant_factors: Vec::new() };
    let order = group.order();
    let exponent = (0..order).map(|p| group.element_order(p)).max().unwrap_or(1);
    let invariant_factors = if order == 1 {
        Vec::new()
    } else if exponent == order {
        vec![order as u64]
    } else {
        let complement = order / exponent;
        assert!(
            complement > 1 && exponent % complement == 0,
            "unexpected abelian group shape: order {order}, exponent {exponent}"
        );
        vec![complement as u64, exponent as u64]
    };
    OmegaGroup { invariant_factors, ..group }
}

/// A Dynkin-type diagram stored as the full matrix of pairings
/// `<alpha_u^vee, alpha_v>` over its node set; bond multiplicities and arrow
/// directions are exactly the off-diagonal label pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    /// 1-based node names as displayed (node 0 exists only in the extended
    /// diagram).
    pub nodes: Vec<usize>,
    /// `labels[u][v]` over positions, diagonal 2.
    pub labels: Vec<Vec<i64>>,
}

impl Diagram {
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    /// Does the permutation of positions preserve all labels?
    pub fn admits(&self, p: &Permutation) -> bool {
        let n = self.size();
        if p.len() != n {
            return false;
        }
        for u in 0..n {
            for v in 0..n {
                if self.labels[p.apply(u)][p.apply(v)] != self.labels[u][v] {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction to the sub-diagram on the other nodes after deleting one
    /// position.
    pub fn delete(&self, pos: usize) -> Diagram {
        let keep: Vec<usize> = (0..self.size()).filter(|&k| k != pos).collect();
        Diagram {
            nodes: keep.iter().map(|&k| self.nodes[k]).collect(),
            labels: keep
                .iter()
                .map(|&u| keep.iter().map(|&v| self.labels[u][v]).collect())
                .collect(),
        }
    }
}

/// The extended Dynkin diagram: nodes `0..=r` with node 0 the lowest root,
/// attached by the pairings of `-alpha_0` against the simple roots.
pub fn extended_diagram(rs: &RootSystem) -> Diagram {
    let r = rs.rank();
    let highest_coroot = rs.highest_coroot().to_integers().expect("integral coroot");
    let mut labels = vec![vec![0i64; r + 1]; r + 1];
    labels[0][0] = 2;
    for i in 1..=r {
        for j in 1..=r {
            labels[i][j] = rs.cartan[i - 1][j - 1];
        }
        // <(-alpha_0)^vee, alpha_i> and <alpha_i^vee, -alpha_0>
        labels[0][i] = -highest_coroot[i - 1];
        labels[i][0] = -rs
            .cartan_row(i)
            .iter()
            .zip(&rs.marks)
            .map(|(c, n)| c * n)
            .sum::<i64>();
    }
    Diagram { nodes: (0..=r).collect(), labels }
}

/// The finite Dynkin diagram on nodes `1..=r`.
pub fn finite_diagram(rs: &RootSystem) -> Diagram {
    Diagram { nodes: (1..=rs.rank()).collect(), labels: rs.cartan.clone() }
}

/// All label-preserving node permutations, by exhaustive backtracking over
/// at most 9 nodes.
pub fn diagram_automorphisms(d: &Diagram) -> Vec<Permutation> {
    let n = d.size();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn search(
        d: &Diagram,
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = d.size();
        if pos == n {
            out.push(Permutation::from_map(image.clone()));
            return;
        }
        'candidate: for c in 0..n {
            if used[c] || d.labels[c][c] != d.labels[pos][pos] {
                continue;
            }
            for prev in 0..pos {
                if d.labels[image[prev]][c] != d.labels[prev][pos]
                    || d.labels[c][image[prev]] != d.labels[pos][prev]
                {
                    continue 'candidate;
                }
            }
            image[pos] = c;
            used[c] = true;
            search(d, pos + 1, image, used, out);
            used[c] = false;
            image[pos] = usize::MAX;
        }
    }
    search(d, 0, &mut image, &mut used, &mut out);
    out
}

/// Orders witnessing the split of the extended-diagram automorphisms:
/// `(|Aut(extended)|, |Omega|, |Aut(finite)|)` with
/// `|Aut(extended)| = |Omega| * |Aut(finite)|`. Also asserts that every
/// sigma lies in `Aut(extended)` and that only the identity sigma fixes
/// node 0.
pub fn semidirect_witness(rs: &RootSystem) -> (usize, usize, usize) {
    let ext = extended_diagram(rs);
    let aut_ext = diagram_automorphisms(&ext);
    let aut_fin = diagram_automorphisms(&finite_diagram(rs));
    let omega = omega_group(rs);
    for e in &omega.elements {
        assert!(ext.admits(&e.sigma), "{}: sigma_{} not a diagram automorphism", rs.ty, e.index);
        // trivial intersection with Aut of the finite diagram: only the
        // identity fixes node 0
        assert!(e.is_identity() || e.sigma.apply(0) != 0, "{}", rs.ty);
    }
    let witness = (aut_ext.len(), omega.order(), aut_fin.len());
    assert_eq!(
        witness.0,
        witness.1 * witness.2,
        "{}: extended-diagram automorphisms must split over the stabilizer",
        rs.ty
    );
    witness
}

/// For an integral coweight, the affine element `t_lambda w_lambda` where
/// `w_lambda` is the unique minimal-length element making the coweight
/// antidominant after `w_lambda^{-1}`. For a minuscule fundamental coweight
/// this recovers the alcove-stabilizer element.
pub fn minimal_length_lift(rs: &RootSystem, lambda: &CoweightVector) -> Result<AffineElement> {
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: lambda.rank() });
    }
    if !lambda.is_integral() {
        return Err(Error::NotIntegral);
    }
    // Greedy antidominant fold: each strictly positive coordinate reflected
    // away kills exactly one inversion, so the product has minimal length.
    let zero = rat_int(0);
    let mut current = lambda.clone();
    let mut letters: Vec<usize> = Vec::new();
    loop {
        let idx = current.coords.iter().position(|c| c > &zero);
        match idx {
            None => break,
            Some(k) => {
                let i = k + 1;
                current = apply_reflection(rs, i, &current);
                letters.insert(0, i);
            }
        }
    }
    // letters is v with v(lambda) antidominant; the lift uses w = v^{-1}
    let w = reduce(rs, &WeylWord::new(letters).inverse());
    Ok(AffineElement { translation: lambda.clone(), word: w })
}

/// Short display for omega elements: `w_i = t_{varpi_i} (s.. s..)`.
pub fn display_omega(e: &OmegaElement) -> String {
    if e.is_identity() {
        "identity".to_string()
    } else {
        format!("t_w{} . {}", e.index, e.affine.word.display())
    }
}

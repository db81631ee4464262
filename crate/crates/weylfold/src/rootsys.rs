//! Irreducible root data of types A through G with exact integer Cartan data:
//! positive roots, coroots, the highest root and its marks, minuscule nodes
//! and the fundamental group.
//!
//! Roots are stored in simple-root coordinates, points of the dual space in
//! fundamental-coweight coordinates (coordinate `i` is the pairing with
//! `alpha_i`), so the perfect pairing is a plain dot product and stays exact.
//! Node numbering is Bourbaki's; in the E series node 2 sits on the branch.

use std::collections::HashMap;
use std::fmt;

use crate::intmat;
use crate::rational::{rat_int, Rat};
use crate::{Error, Result};
use num::Zero;

/// The seven families of irreducible root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A family/rank pair such as `A3` or `E7`, validated against the usual rank
/// bounds. `B2` and `C2` name the same rank-2 system; both spellings are
/// accepted and produce identical data (with C-style node labels, so the
/// extended-diagram node 0 attaches to node 1 by a double bond).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            // C2 is accepted as an alternate spelling of B2.
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!(
                "{}{} is out of the classification",
                family.letter(),
                rank
            )));
        }
        Ok(RootSystemType { family, rank })
    }

    /// Parses compact names like `A3`, `d5`, `G2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        RootSystemType::new(family, rank)
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub coords: Vec<i64>,
}

impl RootVector {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        RootVector { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn negated(&self) -> Self {
        RootVector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    /// All coordinates share one sign, the defining shape of a root.
    pub fn has_uniform_sign(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) || self.coords.iter().all(|&c| c <= 0)
    }
}

/// A point of the dual space in fundamental-coweight coordinates: coordinate
/// `i` is the exact rational pairing with the simple root `alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoweightVector {
    pub coords: Vec<Rat>,
}

impl CoweightVector {
    pub fn zero(rank: usize) -> Self {
        CoweightVector { coords: vec![Rat::zero(); rank] }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        CoweightVector { coords: coords.iter().map(|&c| rat_int(c)).collect() }
    }

    /// The fundamental coweight of node `i` (1-based).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.coords[i - 1] = rat_int(1);
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(crate::rational::is_integer)
    }

    /// Integer coordinates of an integral coweight.
    pub fn to_integers(&self) -> Result<Vec<i64>> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        Ok(self.coords.iter().map(crate::rational::to_i64).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        CoweightVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CoweightVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        CoweightVector { coords: self.coords.iter().map(|c| c * s).collect() }
    }

    pub fn negated(&self) -> Self {
        CoweightVector { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for CoweightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(crate::rational::format_rat).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An irreducible root system with all derived data, immutable after `build`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub ty: RootSystemType,
    /// Cartan matrix `C[i][j] = <alpha_i^vee, alpha_j>` (0-based storage).
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in increasing height order; the simple roots come first.
    pub positive_roots: Vec<RootVector>,
    /// Coroot of `positive_roots[k]`, in fundamental-coweight coordinates.
    pub positive_coroots: Vec<Vec<i64>>,
    pub highest_root: RootVector,
    /// Coefficients of the highest root over the simple roots.
    pub marks: Vec<i64>,
    /// Minuscule nodes `{ i : marks[i] = 1 }`, 1-based and sorted.
    pub minuscule: Vec<usize>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Row `i` of the Cartan matrix (1-based); these are the coordinates of
    /// the simple coroot `alpha_i^vee`.
    pub fn cartan_row(&self, i: usize) -> &[i64] {
        &self.cartan[i - 1]
    }

    /// The perfect pairing `<lambda, beta>` as an exact rational.
    pub fn pairing(&self, lambda: &CoweightVector, beta: &RootVector) -> Result<Rat> {
        if lambda.rank() != self.rank() || beta.coords.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: lambda.rank().max(beta.coords.len()),
            });
        }
        Ok(self.pairing_unchecked(lambda, beta))
    }

    pub(crate) fn pairing_unchecked(&self, lambda: &CoweightVector, beta: &RootVector) -> Rat {
        let mut acc = Rat::zero();
        for (b, l) in beta.coords.iter().zip(&lambda.coords) {
            if *b != 0 {
                acc += l * rat_int(*b);
            }
        }
        acc
    }

    /// Pairing with the highest root: `sum_i marks[i] * lambda_i`.
    pub fn pairing_highest(&self, lambda: &CoweightVector) -> Rat {
        let mut acc = Rat::zero();
        for (n, l) in self.marks.iter().zip(&lambda.coords) {
            acc += l * rat_int(*n);
        }
        acc
    }

    /// The simple coroot `alpha_i^vee`.
    pub fn coroot(&self, i: usize) -> Result<CoweightVector> {
        self.check_node(i)?;
        Ok(CoweightVector::from_integers(&self.cartan[i - 1]))
    }

    /// Coroot of the highest root.
    pub fn highest_coroot(&self) -> CoweightVector {
        let idx = self
            .positive_roots
            .iter()
            .position(|r| *r == self.highest_root)
            .expect("highest root is a positive root");
        CoweightVector::from_integers(&self.positive_coroots[idx])
    }

    /// Invariant factors of the fundamental group (coweights modulo coroots),
    /// via the Smith normal form of the Cartan matrix. Trivial factors are
    /// omitted, so E8, F4 and G2 give an empty list.
    pub fn fundamental_group(&self) -> Vec<u64> {
        intmat::snf_invariant_factors(&self.cartan)
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if i >= 1 && i <= self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    pub fn is_minuscule(&self, i: usize) -> bool {
        self.minuscule.contains(&i)
    }

    /// Vertices of the fundamental alcove as (node, point) pairs: the origin
    /// for node 0 and `varpi_i^vee / n_i` for node i.
    pub fn alcove_vertices(&self) -> Vec<(usize, CoweightVector)> {
        let mut out = Vec::with_capacity(self.rank() + 1);
        out.push((0, CoweightVector::zero(self.rank())));
        for i in 1..=self.rank() {
            let mut v = CoweightVector::zero(self.rank());
            v.coords[i - 1] = Rat::new(1.into(), self.marks[i - 1].into());
            out.push((i, v));
        }
        out
    }
}

fn cartan_matrix(ty: RootSystemType) -> Vec<Vec<i64>> {
    let r = ty.rank;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |c: &mut Vec<Vec<i64>>, i: usize, j: usize, cij: i64, cji: i64| {
        c[i - 1][j - 1] = cij;
        c[j - 1][i - 1] = cji;
    };
    match ty.family {
        Family::A => {
            for i in 1..r {
                edge(&mut c, i, i + 1, -1, -1);
            }
        }
        Family::B if r > 2 => {
            for i in 1..r - 1 {
                edge(&mut c, i, i + 1, -1, -1);
            }
            edge(&mut c, r - 1, r, -1, -2);
        }
        // B2 shares the C2 data; the C-style labels put the short root first.
        Family::B | Family::C => {
            for i in 1..r - 1 {
                edge(&mut c, i, i + 1, -1, -1);
            }
            edge(&mut c, r - 1, r, -2, -1);
        }
        Family::D => {
            for i in 1..r - 2 {
                edge(&mut c, i, i + 1, -1, -1);
            }
            edge(&mut c, r - 2, r - 1, -1, -1);
            edge(&mut c, r - 2, r, -1, -1);
        }
        Family::E => {
            edge(&mut c, 1, 3, -1, -1);
            edge(&mut c, 3, 4, -1, -1);
            edge(&mut c, 4, 5, -1, -1);
            edge(&mut c, 5, 6, -1, -1);
            edge(&mut c, 2, 4, -1, -1);
            if r >= 7 {
                edge(&mut c, 6, 7, -1, -1);
            }
            if r >= 8 {
                edge(&mut c, 7, 8, -1, -1);
            }
        }
        Family::F => {
            edge(&mut c, 1, 2, -1, -1);
            edge(&mut c, 2, 3, -1, -2);
            edge(&mut c, 3, 4, -1, -1);
        }
        Family::G => {
            edge(&mut c, 1, 2, -3, -1);
        }
    }
    c
}

/// Builds the root system of the given type: Cartan matrix by family, then
/// positive roots by breadth-first root-string closure, coroots carried along
/// by reflection, and the highest-root marks read off at the end.
pub fn build(ty: RootSystemType) -> Result<RootSystem> {
    let cartan = cartan_matrix(ty);
    let r = ty.rank;
    debug_assert!(cartan.iter().enumerate().all(|(i, row)| {
        row[i] == 2 && row.iter().enumerate().all(|(j, &v)| i == j || v <= 0)
    }));

    // <alpha_i^vee, beta> for a root in simple-root coordinates.
    let root_pairing = |i: usize, coords: &[i64]| -> i64 {
        (0..r).map(|j| cartan[i - 1][j] * coords[j]).sum()
    };

    let mut roots: Vec<RootVector> = (1..=r).map(|i| RootVector::simple(r, i)).collect();
    let mut coroots: Vec<Vec<i64>> = (1..=r).map(|i| cartan[i - 1].clone()).collect();
    let mut index: HashMap<Vec<i64>, usize> =
        roots.iter().enumerate().map(|(k, root)| (root.coords.clone(), k)).collect();

    // Breadth-first by height: the queue order keeps heights nondecreasing,
    // so every root strictly below the current one is already present.
    let mut head = 0;
    while head < roots.len() {
        let beta = roots[head].coords.clone();
        let height: i64 = beta.iter().sum();
        for i in 1..=r {
            if height == 1 && beta[i - 1] == 1 {
                continue; // 2*alpha_i is never a root
            }
            let mut p = 0i64;
            loop {
                let mut down = beta.clone();
                down[i - 1] -= p + 1;
                if index.contains_key(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            // The alpha_i-string through beta extends upward iff p exceeds
            // the pairing <alpha_i^vee, beta>.
            if root_pairing(i, &beta) - p < 0 {
                let mut up = beta.clone();
                up[i - 1] += 1;
                if !index.contains_key(&up) {
                    let coroot = coroot_by_descent(&cartan, &index, &coroots, &up, &root_pairing);
                    index.insert(up.clone(), roots.len());
                    roots.push(RootVector { coords: up });
                    coroots.push(coroot);
                }
            }
        }
        head += 1;
    }

    let max_height = roots.iter().map(RootVector::height).max().expect("nonempty");
    let at_max: Vec<&RootVector> =
        roots.iter().filter(|root| root.height() == max_height).collect();
    assert_eq!(at_max.len(), 1, "highest root must be unique");
    let highest_root = at_max[0].clone();
    assert!(
        roots
            .iter()
            .all(|root| root.coords.iter().zip(&highest_root.coords).all(|(a, b)| a <= b)),
        "highest root must dominate componentwise"
    );

    let marks = highest_root.coords.clone();
    let minuscule: Vec<usize> =
        (1..=r).filter(|&i| marks[i - 1] == 1).collect();

    Ok(RootSystem {
        ty,
        cartan,
        positive_roots: roots,
        positive_coroots: coroots,
        highest_root,
        marks,
        minuscule,
    })
}

/// Coroot of a freshly found non-simple root: reflect down to a known root by
/// a simple reflection with positive pairing, then reflect its coroot back.
fn coroot_by_descent(
    cartan: &[Vec<i64>],
    index: &HashMap<Vec<i64>, usize>,
    coroots: &[Vec<i64>],
    gamma: &[i64],
    root_pairing: &dyn Fn(usize, &[i64]) -> i64,
) -> Vec<i64> {
    let r = cartan.len();
    for j in 1..=r {
        let pairing = root_pairing(j, gamma);
        if pairing > 0 {
            let mut down = gamma.to_vec();
            down[j - 1] -= pairing;
            if let Some(&k) = index.get(&down) {
                // gamma = s_j(down), so gamma^vee = s_j(down^vee)
                let base = &coroots[k];
                let mut out = base.clone();
                let coeff = base[j - 1];
                for c in 0..r {
                    out[c] -= coeff * cartan[j - 1][c];
                }
                return out;
            }
        }
    }
    unreachable!("every positive non-simple root has a descent")
}

/// The canonical list of irreducible types up to the given rank, one entry
/// per isomorphism class (C2 is listed as B2).
pub fn all_types(max_rank: usize) -> Vec<RootSystemType> {
    let mut out = Vec::new();
    for rank in 1..=max_rank {
        out.push(RootSystemType { family: Family::A, rank });
    }
    for rank in 2..=max_rank {
        out.push(RootSystemType { family: Family::B, rank });
    }
    for rank in 3..=max_rank {
        out.push(RootSystemType { family: Family::C, rank });
    }
    for rank in 4..=max_rank {
        out.push(RootSystemType { family: Family::D, rank });
    }
    for rank in 6..=8.min(max_rank) {
        out.push(RootSystemType { family: Family::E, rank });
    }
    if max_rank >= 4 {
        out.push(RootSystemType { family: Family::F, rank: 4 });
    }
    if max_rank >= 2 {
        out.push(RootSystemType { family: Family::G, rank: 2 });
    }
    out
}

//! Finite and affine Weyl group elements acting on coweight-space points:
//! words in the simple reflections, chamber and alcove folding with witness
//! elements, longest elements of parabolic subgroups.
//!
//! A word `[a, b]` acts as `s_a(s_b(lambda))`. Affine elements are stored as
//! translation-times-word, `t_mu w : lambda -> w(lambda) + mu`.

use crate::rational::{rat_int, Rat};
use crate::rootsys::{CoweightVector, RootSystem, RootVector};
use num::Zero;

/// A word in the simple reflections; letters are 1-based node indices. The
/// word need not be reduced; [`reduce`] yields the lexicographically smallest
/// reduced word for the same element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        WeylWord { letters: Vec::new() }
    }

    pub fn is_identity_word(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        WeylWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Renders as `s1 s2 s1`; the empty word renders as `e`.
    pub fn display(&self) -> String {
        if self.letters.is_empty() {
            "e".to_string()
        } else {
            self.letters.iter().map(|l| format!("s{l}")).collect::<Vec<_>>().join(" ")
        }
    }
}

/// An element of an (extended) affine Weyl group: `t_translation . word`,
/// acting as `lambda -> word(lambda) + translation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineElement {
    pub translation: CoweightVector,
    pub word: WeylWord,
}

impl AffineElement {
    pub fn identity(rank: usize) -> Self {
        AffineElement { translation: CoweightVector::zero(rank), word: WeylWord::identity() }
    }

    pub fn translation_only(v: CoweightVector) -> Self {
        AffineElement { translation: v, word: WeylWord::identity() }
    }

    pub fn is_identity(&self, rs: &RootSystem) -> bool {
        self.translation.is_zero() && word_matrix(rs, &self.word) == identity_matrix(rs.rank())
    }
}

pub(crate) fn identity_matrix(rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// `s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee`; in coordinates the
/// i-th Cartan row times the i-th coordinate is subtracted.
pub fn apply_reflection(rs: &RootSystem, i: usize, lambda: &CoweightVector) -> CoweightVector {
    let mut out = lambda.clone();
    reflect_in_place(rs, i, &mut out.coords);
    out
}

fn reflect_in_place(rs: &RootSystem, i: usize, coords: &mut [Rat]) {
    let c = coords[i - 1].clone();
    if c.is_zero() {
        return;
    }
    for (k, entry) in rs.cartan_row(i).iter().enumerate() {
        if *entry != 0 {
            coords[k] -= &c * rat_int(*entry);
        }
    }
}

/// Root-side reflection: only the i-th simple-root coordinate changes.
pub fn apply_reflection_root(rs: &RootSystem, i: usize, beta: &RootVector) -> RootVector {
    let mut out = beta.clone();
    let pairing: i64 = rs
        .cartan_row(i)
        .iter()
        .zip(&beta.coords)
        .map(|(c, b)| c * b)
        .sum();
    out.coords[i - 1] -= pairing;
    out
}

/// Applies a word left-to-right as function composition:
/// `apply_word([a, b], x) = s_a(s_b(x))`.
pub fn apply_word(rs: &RootSystem, word: &WeylWord, lambda: &CoweightVector) -> CoweightVector {
    let mut out = lambda.clone();
    for &l in word.letters.iter().rev() {
        reflect_in_place(rs, l, &mut out.coords);
    }
    out
}

pub fn apply_word_root(rs: &RootSystem, word: &WeylWord, beta: &RootVector) -> RootVector {
    let mut out = beta.clone();
    for &l in word.letters.iter().rev() {
        out = apply_reflection_root(rs, l, &out);
    }
    out
}

/// Integer matrix of the word's action on coweight coordinates.
pub fn word_matrix(rs: &RootSystem, word: &WeylWord) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let mut m = identity_matrix(r);
    for &l in word.letters.iter().rev() {
        // left-multiply by the reflection: subtract the Cartan-row multiple
        // of the pivot row from every row
        let cartan_row = rs.cartan_row(l);
        let pivot: Vec<i64> = m[l - 1].clone();
        for k in 0..r {
            if cartan_row[k] != 0 {
                for j in 0..r {
                    m[k][j] -= cartan_row[k] * pivot[j];
                }
            }
        }
    }
    m
}

fn mat_vec_int(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Two words represent the same group element iff their actions agree.
pub fn words_equal(rs: &RootSystem, a: &WeylWord, b: &WeylWord) -> bool {
    word_matrix(rs, a) == word_matrix(rs, b)
}

/// Coxeter length as the inversion count: the number of positive roots the
/// element makes negative.
pub fn length(rs: &RootSystem, word: &WeylWord) -> usize {
    rs.positive_roots
        .iter()
        .filter(|beta| {
            let image = apply_word_root(rs, word, beta);
            image.coords.iter().all(|&c| c <= 0)
        })
        .count()
}

/// The lexicographically smallest reduced word for the element of `word`,
/// found by repeatedly splitting off the smallest left descent.
pub fn reduce(rs: &RootSystem, word: &WeylWord) -> WeylWord {
    let r = rs.rank();
    let m = word_matrix(rs, word);
    // Image of a strictly dominant integer point; its i-th coordinate is
    // negative exactly when s_i shortens the element from the left.
    let mut probe = mat_vec_int(&m, &vec![1i64; r]);
    let mut letters = Vec::new();
    while probe.iter().any(|&c| c != 1) {
        let i = probe
            .iter()
            .position(|&c| c < 0)
            .expect("non-identity element has a left descent")
            + 1;
        letters.push(i);
        let c = probe[i - 1];
        for (k, entry) in rs.cartan_row(i).iter().enumerate() {
            probe[k] -= c * entry;
        }
    }
    WeylWord { letters }
}

/// Folds a point into the dominant chamber, scanning for the lowest negative
/// coordinate, and returns the dominant point with a reduced witness word
/// `w` satisfying `apply_word(w, lambda) = dominant`.
pub fn fold_to_chamber(rs: &RootSystem, lambda: &CoweightVector) -> (CoweightVector, WeylWord) {
    let mut current = lambda.clone();
    let mut letters: Vec<usize> = Vec::new();
    loop {
        let neg = current.coords.iter().position(|c| c < &Rat::zero());
        match neg {
            None => break,
            Some(idx) => {
                let i = idx + 1;
                reflect_in_place(rs, i, &mut current.coords);
                letters.insert(0, i);
            }
        }
    }
    let word = reduce(rs, &WeylWord { letters });
    debug_assert_eq!(apply_word(rs, &word, lambda), current);
    (current, word)
}

/// Longest element of the parabolic subgroup generated by the reflections in
/// `subset` (1-based node indices); the full longest element for the full
/// node set. Returned reduced.
pub fn longest_element(rs: &RootSystem, subset: &[usize]) -> WeylWord {
    let mut on: Vec<bool> = vec![false; rs.rank()];
    for &i in subset {
        on[i - 1] = true;
    }
    let mut current = CoweightVector {
        coords: (0..rs.rank()).map(|k| if on[k] { rat_int(1) } else { Rat::zero() }).collect(),
    };
    let mut letters: Vec<usize> = Vec::new();
    loop {
        let pos = current
            .coords
            .iter()
            .enumerate()
            .position(|(k, c)| on[k] && c > &Rat::zero());
        match pos {
            None => break,
            Some(idx) => {
                let i = idx + 1;
                reflect_in_place(rs, i, &mut current.coords);
                letters.insert(0, i);
            }
        }
    }
    reduce(rs, &WeylWord { letters })
}

/// A reduced word for the reflection in the given positive root, built by
/// conjugating a simple reflection down the root's descent chain.
pub fn reflection_word(rs: &RootSystem, root: &RootVector) -> WeylWord {
    let mut beta = root.clone();
    let mut chain: Vec<usize> = Vec::new();
    loop {
        if beta.height() == 1 {
            let i = beta.coords.iter().position(|&c| c == 1).unwrap() + 1;
            let mut letters = chain.clone();
            letters.push(i);
            letters.extend(chain.iter().rev());
            return WeylWord { letters };
        }
        let j = (1..=rs.rank())
            .find(|&j| {
                let pairing: i64 =
                    rs.cartan_row(j).iter().zip(&beta.coords).map(|(c, b)| c * b).sum();
                pairing > 0
            })
            .expect("positive root has a descent");
        let down = apply_reflection_root(rs, j, &beta);
        debug_assert!(down.is_positive() && down.height() < beta.height());
        chain.push(j);
        beta = down;
    }
}

/// Applies `t_mu w`: `w(lambda) + mu`.
pub fn affine_apply(
    rs: &RootSystem,
    a: &AffineElement,
    lambda: &CoweightVector,
) -> CoweightVector {
    apply_word(rs, &a.word, lambda).add(&a.translation)
}

/// `(t_mu w)(t_nu v) = t_{mu + w(nu)} (w v)`; the word part is re-reduced.
pub fn affine_compose(rs: &RootSystem, a: &AffineElement, b: &AffineElement) -> AffineElement {
    let translation = a.translation.add(&apply_word(rs, &a.word, &b.translation));
    let mut letters = a.word.letters.clone();
    letters.extend_from_slice(&b.word.letters);
    AffineElement { translation, word: reduce(rs, &WeylWord { letters }) }
}

/// `(t_mu w)^{-1} = t_{-w^{-1}(mu)} w^{-1}`.
pub fn affine_inverse(rs: &RootSystem, a: &AffineElement) -> AffineElement {
    let inv_word = reduce(rs, &a.word.inverse());
    let translation = apply_word(rs, &inv_word, &a.translation).negated();
    AffineElement { translation, word: inv_word }
}

/// Affine elements are equal iff both the translation and the linear action
/// agree.
pub fn affine_equal(rs: &RootSystem, a: &AffineElement, b: &AffineElement) -> bool {
    a.translation == b.translation && word_matrix(rs, &a.word) == word_matrix(rs, &b.word)
}

/// Membership in the closed fundamental alcove: all coordinates nonnegative
/// and the pairing with the highest root at most 1.
pub fn in_alcove(rs: &RootSystem, lambda: &CoweightVector) -> bool {
    lambda.coords.iter().all(|c| c >= &Rat::zero())
        && rs.pairing_highest(lambda) <= rat_int(1)
}

/// Folds an arbitrary point into the closed fundamental alcove, alternating
/// chamber folds with the affine reflection in the highest-root wall. The
/// witness `a` satisfies `affine_apply(a, lambda) = pt` and has translation
/// in the coroot lattice.
pub fn fold_to_alcove(rs: &RootSystem, lambda: &CoweightVector) -> (CoweightVector, AffineElement) {
    let r = rs.rank();
    let highest_coroot = rs.highest_coroot();
    let s0_word = reflection_word(rs, &rs.highest_root.clone());
    let mut current = lambda.clone();
    let mut witness = AffineElement::identity(r);
    let mut guard = 0usize;
    loop {
        let (dominant, w) = fold_to_chamber(rs, &current);
        if !w.is_identity_word() {
            let g = AffineElement { translation: CoweightVector::zero(r), word: w };
            witness = affine_compose(rs, &g, &witness);
        }
        current = dominant;
        let h = rs.pairing_highest(&current);
        if h <= rat_int(1) {
            break;
        }
        // s_{alpha_0, 1}: lambda -> lambda - (<lambda, alpha_0> - 1) alpha_0^vee
        let shift = h - rat_int(1);
        current = current.sub(&highest_coroot.scale(&shift));
        let g = AffineElement { translation: highest_coroot.clone(), word: s0_word.clone() };
        witness = affine_compose(rs, &g, &witness);
        guard += 1;
        assert!(guard < 100_000, "alcove folding failed to terminate");
    }
    debug_assert!(in_alcove(rs, &current));
    debug_assert_eq!(affine_apply(rs, &witness, lambda), current);
    (current, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::SplitMix64;
    use crate::rational::rat;
    use crate::rootsys::{all_types, build, RootSystemType};

    fn rs(s: &str) -> RootSystem {
        build(RootSystemType::parse(s).unwrap()).unwrap()
    }

    fn cw(coords: &[(i64, i64)]) -> CoweightVector {
        CoweightVector { coords: coords.iter().map(|&(p, q)| rat(p, q)).collect() }
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs("A2");
        let lam = CoweightVector::from_integers(&[1, 0]);
        assert_eq!(apply_reflection(&a2, 1, &lam), CoweightVector::from_integers(&[-1, 1]));
        let zero = CoweightVector::zero(2);
        assert_eq!(apply_reflection(&a2, 2, &zero), zero);
        let a1 = rs("A1");
        let x = cw(&[(7, 3)]);
        assert_eq!(apply_reflection(&a1, 1, &x), cw(&[(-7, 3)]));
    }

    #[test]
    fn reflections_are_involutive() {
        for ty in all_types(4) {
            let rsys = build(ty).unwrap();
            let mut rng = SplitMix64::new(11);
            for _ in 0..10 {
                let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 6);
                for i in 1..=rsys.rank() {
                    let twice = apply_reflection(&rsys, i, &apply_reflection(&rsys, i, &lam));
                    assert_eq!(twice, lam);
                }
            }
        }
    }

    #[test]
    fn word_application() {
        let a2 = rs("A2");
        let lam = cw(&[(1, 2), (3, 4)]);
        assert_eq!(apply_word(&a2, &WeylWord::identity(), &lam), lam);
        // [a, b] acts as s_a then s_b from the inside out
        let w = WeylWord::new(vec![1, 2]);
        let expected = apply_reflection(&a2, 1, &apply_reflection(&a2, 2, &lam));
        assert_eq!(apply_word(&a2, &w, &lam), expected);
        // root side: s_1(alpha_2) = alpha_1 + alpha_2
        let image = apply_word_root(&a2, &WeylWord::new(vec![1]), &RootVector::simple(2, 2));
        assert_eq!(image.coords, vec![1, 1]);
    }

    #[test]
    fn word_inverse_cancels() {
        for ty in [RootSystemType::parse("A3").unwrap(), RootSystemType::parse("B3").unwrap()] {
            let rsys = build(ty).unwrap();
            let mut rng = SplitMix64::new(5);
            for _ in 0..20 {
                let letters: Vec<usize> =
                    (0..8).map(|_| (rng.next_u64() as usize % rsys.rank()) + 1).collect();
                let w = WeylWord::new(letters);
                let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 5);
                let roundtrip = apply_word(&rsys, &w.inverse(), &apply_word(&rsys, &w, &lam));
                assert_eq!(roundtrip, lam);
            }
        }
    }

    #[test]
    fn braid_orders_on_small_ranks() {
        for (name, order) in [("A2", 3usize), ("B2", 4), ("G2", 6)] {
            let rsys = rs(name);
            let mut letters = Vec::new();
            for _ in 0..order {
                letters.push(1);
                letters.push(2);
            }
            let w = WeylWord::new(letters);
            assert!(
                words_equal(&rsys, &w, &WeylWord::identity()),
                "(s1 s2)^{order} should be the identity in {name}"
            );
            let shorter = WeylWord::new(vec![1, 2].repeat(order - 1));
            assert!(!words_equal(&rsys, &shorter, &WeylWord::identity()));
        }
    }

    #[test]
    fn reduce_gives_reduced_lex_smallest() {
        let a2 = rs("A2");
        // s1 s1 reduces to the identity
        assert_eq!(reduce(&a2, &WeylWord::new(vec![1, 1])).letters, Vec::<usize>::new());
        // the longest element of A2 has the two reduced words 121 and 212
        let w = reduce(&a2, &WeylWord::new(vec![2, 1, 2]));
        assert_eq!(w.letters, vec![1, 2, 1]);
        assert_eq!(length(&a2, &w), 3);
    }

    #[test]
    fn reduced_length_equals_inversions() {
        for ty in all_types(4) {
            let rsys = build(ty).unwrap();
            let mut rng = SplitMix64::new(23);
            for _ in 0..15 {
                let letters: Vec<usize> =
                    (0..10).map(|_| (rng.next_u64() as usize % rsys.rank()) + 1).collect();
                let w = WeylWord::new(letters);
                let red = reduce(&rsys, &w);
                assert!(words_equal(&rsys, &w, &red), "{ty}");
                assert_eq!(red.letters.len(), length(&rsys, &w), "{ty}");
            }
        }
    }

    #[test]
    fn fold_to_chamber_examples() {
        let a2 = rs("A2");
        let (dom, w) = fold_to_chamber(&a2, &CoweightVector::from_integers(&[-1, 2]));
        assert_eq!(dom, CoweightVector::from_integers(&[1, 1]));
        assert_eq!(w.letters, vec![1]);

        let already = cw(&[(1, 3), (2, 5)]);
        let (dom, w) = fold_to_chamber(&a2, &already);
        assert_eq!(dom, already);
        assert!(w.is_identity_word());

        let a1 = rs("A1");
        let (dom, w) = fold_to_chamber(&a1, &cw(&[(-9, 4)]));
        assert_eq!(dom, cw(&[(9, 4)]));
        assert_eq!(w.letters, vec![1]);
    }

    #[test]
    fn fold_to_chamber_is_orbit_invariant() {
        for ty in ["A3", "B3", "C3"] {
            let rsys = rs(ty);
            let mut rng = SplitMix64::new(37);
            for _ in 0..100 {
                let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 7);
                let letters: Vec<usize> =
                    (0..7).map(|_| (rng.next_u64() as usize % rsys.rank()) + 1).collect();
                let moved = apply_word(&rsys, &WeylWord::new(letters), &lam);
                let (d1, w1) = fold_to_chamber(&rsys, &lam);
                let (d2, _) = fold_to_chamber(&rsys, &moved);
                assert_eq!(d1, d2, "{ty}");
                assert_eq!(apply_word(&rsys, &w1, &lam), d1);
            }
        }
    }

    #[test]
    fn longest_element_lengths() {
        let a2 = rs("A2");
        let w0 = longest_element(&a2, &[1, 2]);
        assert_eq!(w0.letters.len(), 3);

        let a3 = rs("A3");
        let w = longest_element(&a3, &[1, 3]);
        assert_eq!(w.letters.len(), 2);

        assert!(longest_element(&a3, &[]).is_identity_word());
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        for ty in all_types(6) {
            let rsys = build(ty).unwrap();
            let w0 = longest_element(&rsys, &(1..=rsys.rank()).collect::<Vec<_>>());
            assert_eq!(w0.letters.len(), rsys.positive_roots.len(), "{ty}");
            for beta in &rsys.positive_roots {
                let image = apply_word_root(&rsys, &w0, beta);
                assert!(image.coords.iter().all(|&c| c <= 0), "{ty}: w0 must negate {beta:?}");
            }
        }
    }

    #[test]
    fn simple_reflections_permute_roots() {
        for ty in all_types(5) {
            let rsys = build(ty).unwrap();
            for beta in &rsys.positive_roots {
                for i in 1..=rsys.rank() {
                    let image = apply_reflection_root(&rsys, i, beta);
                    assert!(image.has_uniform_sign(), "{ty}");
                    let abs = RootVector {
                        coords: image.coords.iter().map(|c| c.abs()).collect(),
                    };
                    assert!(rsys.positive_roots.contains(&abs), "{ty}");
                }
            }
        }
    }

    #[test]
    fn reflection_word_is_the_root_reflection() {
        for ty in all_types(4) {
            let rsys = build(ty).unwrap();
            for (k, beta) in rsys.positive_roots.iter().enumerate() {
                let w = reflection_word(&rsys, beta);
                // s_beta(lambda) = lambda - <lambda, beta> beta^vee
                let coroot = CoweightVector::from_integers(&rsys.positive_coroots[k]);
                let mut rng = SplitMix64::new(7 + k as u64);
                let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 5);
                let expected =
                    lam.sub(&coroot.scale(&rsys.pairing(&lam, beta).unwrap()));
                assert_eq!(apply_word(&rsys, &w, &lam), expected, "{ty}");
            }
        }
    }

    #[test]
    fn fold_to_alcove_examples() {
        let a2 = rs("A2");
        let (pt, a) = fold_to_alcove(&a2, &cw(&[(2, 3), (2, 3)]));
        assert_eq!(pt, cw(&[(1, 3), (1, 3)]));
        // witness is the affine reflection in the highest-root wall
        assert_eq!(a.translation, CoweightVector::from_integers(&[1, 1]));
        assert_eq!(affine_apply(&a2, &a, &cw(&[(2, 3), (2, 3)])), pt);

        let inside = cw(&[(1, 5), (1, 7)]);
        let (pt, a) = fold_to_alcove(&a2, &inside);
        assert_eq!(pt, inside);
        assert!(a.is_identity(&a2));

        let a1 = rs("A1");
        let (pt, a) = fold_to_alcove(&a1, &cw(&[(5, 2)]));
        assert_eq!(pt, cw(&[(1, 2)]));
        assert_eq!(affine_apply(&a1, &a, &cw(&[(5, 2)])), pt);
        // the witness is the pure translation by -alpha^vee
        assert_eq!(a.translation, CoweightVector::from_integers(&[-2]));
        assert!(a.word.is_identity_word());
    }

    #[test]
    fn alcove_fold_translation_is_in_coroot_lattice() {
        for ty in all_types(4) {
            let rsys = build(ty).unwrap();
            let basis = crate::intmat::hnf(&rsys.cartan);
            let mut rng = SplitMix64::new(99);
            for _ in 0..25 {
                let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 6);
                let (pt, a) = fold_to_alcove(&rsys, &lam);
                assert!(in_alcove(&rsys, &pt), "{ty}");
                assert_eq!(affine_apply(&rsys, &a, &lam), pt, "{ty}");
                let t = a.translation.to_integers().expect("translation is integral");
                assert!(
                    crate::intmat::solve_in_lattice(&basis, &t).is_some(),
                    "{ty}: translation {t:?} outside the coroot lattice"
                );
            }
        }
    }

    #[test]
    fn alcove_fold_is_orbit_invariant() {
        for ty in ["A2", "B3"] {
            let rsys = rs(ty);
            let mut rng = SplitMix64::new(3);
            for _ in 0..50 {
                let lam = crate::oracle::random_point_with(&mut rng, rsys.rank(), 6);
                // translate by a coroot and reflect: same W_a-orbit
                let i = (rng.next_u64() as usize % rsys.rank()) + 1;
                let moved = apply_reflection(&rsys, i, &lam).add(&rsys.coroot(i).unwrap());
                let (p1, _) = fold_to_alcove(&rsys, &lam);
                let (p2, _) = fold_to_alcove(&rsys, &moved);
                assert_eq!(p1, p2, "{ty}");
            }
        }
    }

    #[test]
    fn alcove_differences_fold_into_alcove() {
        // difference of two alcove points can be chamber-folded back into
        // the alcove
        for ty in ["A2", "A3", "B3", "C3", "G2"] {
            let rsys = rs(ty);
            let mut rng = SplitMix64::new(17);
            for _ in 0..100 {
                let a = crate::oracle::random_point_with(&mut rng, rsys.rank(), 5);
                let b = crate::oracle::random_point_with(&mut rng, rsys.rank(), 5);
                let (pa, _) = fold_to_alcove(&rsys, &a);
                let (pb, _) = fold_to_alcove(&rsys, &b);
                let (dom, _) = fold_to_chamber(&rsys, &pa.sub(&pb));
                assert!(in_alcove(&rsys, &dom), "{ty}");
            }
        }
    }

    #[test]
    fn affine_composition_law() {
        let b3 = rs("B3");
        let mut rng = SplitMix64::new(41);
        for _ in 0..25 {
            let mk = |rng: &mut SplitMix64| AffineElement {
                translation: CoweightVector::from_integers(&[
                    (rng.next_u64() % 5) as i64 - 2,
                    (rng.next_u64() % 5) as i64 - 2,
                    (rng.next_u64() % 5) as i64 - 2,
                ]),
                word: WeylWord::new(
                    (0..5).map(|_| (rng.next_u64() as usize % 3) + 1).collect(),
                ),
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let lam = crate::oracle::random_point_with(&mut rng, 3, 5);
            let composed = affine_compose(&b3, &a, &b);
            assert_eq!(
                affine_apply(&b3, &composed, &lam),
                affine_apply(&b3, &a, &affine_apply(&b3, &b, &lam))
            );
            let inv = affine_inverse(&b3, &a);
            assert!(affine_compose(&b3, &inv, &a).is_identity(&b3));
            assert_eq!(affine_apply(&b3, &inv, &affine_apply(&b3, &a, &lam)), lam);
        }
    }

    #[test]
    fn affine_apply_examples() {
        let a2 = rs("A2");
        let t = AffineElement::translation_only(a2.coroot(1).unwrap());
        assert_eq!(
            affine_apply(&a2, &t, &CoweightVector::zero(2)),
            CoweightVector::from_integers(&[2, -1])
        );
        let id = AffineElement::identity(2);
        let lam = cw(&[(1, 2), (1, 3)]);
        assert_eq!(affine_apply(&a2, &id, &lam), lam);
    }
}

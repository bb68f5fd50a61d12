//! The exponent lattice H = {0..q-2}^r and its cyclotomic cosets.
//!
//! Exponents index monomials y^u on the torus. Coordinatewise multiplication
//! by p partitions H into cyclotomic cosets; the maps `hat`, `u_perp` and
//! `u_hat` produce the exponent sets of dual codes. All iteration is in
//! lexicographic order so downstream generator matrices are reproducible.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::galois::Field;

/// A point u in {0..q-2}^r indexing the monomial y^u.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>, field: &Field) -> Result<ExponentVector> {
        let bound = field.group_order();
        for &c in &coords {
            if c >= bound {
                return Err(Error::ExponentOutOfRange { value: c, bound });
            }
        }
        Ok(ExponentVector(coords))
    }

    /// Construct without range checking (internal use for reduced values).
    pub(crate) fn from_reduced(coords: Vec<u32>) -> ExponentVector {
        ExponentVector(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Coordinatewise k*u mod q-1.
    pub fn scale(&self, k: u64, field: &Field) -> ExponentVector {
        let q1 = u64::from(field.group_order());
        ExponentVector(
            self.0
                .iter()
                .map(|&c| ((u64::from(c) * k) % q1) as u32)
                .collect(),
        )
    }

    /// Coordinatewise sum mod q-1.
    pub fn add(&self, other: &ExponentVector, field: &Field) -> ExponentVector {
        let q1 = field.group_order();
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| (a + b) % q1)
                .collect(),
        )
    }
}

/// Coordinatewise negation mod q-1 with zero coordinates fixed.
pub fn hat(u: &ExponentVector, field: &Field) -> ExponentVector {
    let q1 = field.group_order();
    ExponentVector(
        u.0.iter()
            .map(|&c| if c == 0 { 0 } else { q1 - c })
            .collect(),
    )
}

/// The orbit of an exponent vector under coordinatewise multiplication by p.
///
/// Members are listed as (leader, p*leader, p^2*leader, ...) where the leader
/// is the lexicographically smallest member of the orbit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicCoset {
    members: Vec<ExponentVector>,
}

impl CyclotomicCoset {
    pub fn leader(&self) -> &ExponentVector {
        &self.members[0]
    }

    pub fn members(&self) -> &[ExponentVector] {
        &self.members
    }

    /// Orbit length n_b; always divides s.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.members.contains(u)
    }
}

/// Cyclotomic coset of b: the orbit {b, pb, p^2 b, ...}, re-rooted at its
/// lexicographic minimum.
pub fn coset_of(b: &ExponentVector, field: &Field) -> CyclotomicCoset {
    let p = u64::from(field.p());
    let mut orbit = vec![b.clone()];
    let mut next = b.scale(p, field);
    while next != *b {
        orbit.push(next.clone());
        next = next.scale(p, field);
    }
    let lead = orbit
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .unwrap();
    orbit.rotate_left(lead);
    CyclotomicCoset { members: orbit }
}

/// All cyclotomic cosets of H = {0..q-2}^r, ordered by leader.
pub fn all_cosets(field: &Field, r: usize) -> Vec<CyclotomicCoset> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for coords in lex_tuples(field.group_order(), r) {
        let u = ExponentVector(coords);
        if seen.contains(&u) {
            continue;
        }
        let coset = coset_of(&u, field);
        for m in coset.members() {
            seen.insert(m.clone());
        }
        out.push(coset);
    }
    out
}

/// Lexicographic enumeration of {0..bound-1}^r.
pub(crate) fn lex_tuples(bound: u32, r: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (bound as u128).pow(r as u32);
    (0..total).map(move |mut idx| {
        let mut coords = vec![0u32; r];
        for c in coords.iter_mut().rev() {
            *c = (idx % bound as u128) as u32;
            idx /= bound as u128;
        }
        coords
    })
}

/// A deduplicated subset of H, kept in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentSet {
    r: usize,
    elems: Vec<ExponentVector>,
    coset_closed: bool,
}

impl ExponentSet {
    /// Deduplicates and sorts; duplicate rows would corrupt dimension counts.
    pub fn new(r: usize, vecs: Vec<ExponentVector>, field: &Field) -> Result<ExponentSet> {
        let bound = field.group_order();
        let mut set = BTreeSet::new();
        for v in vecs {
            if v.r() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    actual: v.r(),
                });
            }
            for &c in v.coords() {
                if c >= bound {
                    return Err(Error::ExponentOutOfRange { value: c, bound });
                }
            }
            set.insert(v);
        }
        let elems: Vec<ExponentVector> = set.into_iter().collect();
        let coset_closed = {
            let p = u64::from(field.p());
            elems
                .iter()
                .all(|u| elems.binary_search(&u.scale(p, field)).is_ok())
        };
        Ok(ExponentSet {
            r,
            elems,
            coset_closed,
        })
    }

    pub fn from_coords(r: usize, coords: &[Vec<u32>], field: &Field) -> Result<ExponentSet> {
        let vecs = coords
            .iter()
            .map(|c| ExponentVector::new(c.clone(), field))
            .collect::<Result<Vec<_>>>()?;
        ExponentSet::new(r, vecs, field)
    }

    /// The full lattice H = {0..q-2}^r.
    pub fn full(r: usize, field: &Field) -> ExponentSet {
        let elems = lex_tuples(field.group_order(), r)
            .map(ExponentVector)
            .collect();
        ExponentSet {
            r,
            elems,
            coset_closed: true,
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Whether the set is a union of whole cyclotomic cosets.
    pub fn is_coset_closed(&self) -> bool {
        self.coset_closed
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.elems.iter()
    }

    pub fn contains(&self, u: &ExponentVector) -> bool {
        self.elems.binary_search(u).is_ok()
    }
}

/// Exponent set of the dual code: H minus the negated set,
/// H \ {hat(u) : u in U}.
pub fn u_perp(u: &ExponentSet, field: &Field) -> ExponentSet {
    let negated: BTreeSet<ExponentVector> = u.iter().map(|v| hat(v, field)).collect();
    let elems: Vec<ExponentVector> = lex_tuples(field.group_order(), u.r)
        .map(ExponentVector)
        .filter(|v| !negated.contains(v))
        .collect();
    let p = u64::from(field.p());
    let coset_closed = elems
        .iter()
        .all(|v| elems.binary_search(&v.scale(p, field)).is_ok());
    ExponentSet {
        r: u.r,
        elems,
        coset_closed,
    }
}

/// Closure of u_perp(U) under coordinatewise multiplication by p; always a
/// union of whole cosets, and equal to u_perp(U) when U is coset-closed.
pub fn u_hat(u: &ExponentSet, field: &Field) -> ExponentSet {
    let perp = u_perp(u, field);
    let mut set = BTreeSet::new();
    for v in perp.iter() {
        for m in coset_of(v, field).members() {
            set.insert(m.clone());
        }
    }
    ExponentSet {
        r: u.r,
        elems: set.into_iter().collect(),
        coset_closed: true,
    }
}

/// The cosets wholly contained in U, ordered by leader.
pub fn contained_cosets(u: &ExponentSet, field: &Field) -> Vec<CyclotomicCoset> {
    distinct_cosets(u, field)
        .into_iter()
        .filter(|c| c.members().iter().all(|m| u.contains(m)))
        .collect()
}

/// The cosets meeting U (intersecting it in at least one point), by leader.
pub fn meeting_cosets(u: &ExponentSet, field: &Field) -> Vec<CyclotomicCoset> {
    distinct_cosets(u, field)
}

/// Distinct cosets of the elements of U, sorted by leader.
fn distinct_cosets(u: &ExponentSet, field: &Field) -> Vec<CyclotomicCoset> {
    let mut seen: BTreeSet<ExponentVector> = BTreeSet::new();
    let mut out = Vec::new();
    for v in u.iter() {
        if seen.contains(v) {
            continue;
        }
        let coset = coset_of(v, field);
        for m in coset.members() {
            seen.insert(m.clone());
        }
        out.push(coset);
    }
    out.sort_by(|a, b| a.leader().cmp(b.leader()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(coords: &[u32]) -> ExponentVector {
        ExponentVector(coords.to_vec())
    }

    #[test]
    fn gf16_cosets() {
        let f = Field::new(2, 4).unwrap();
        let c1 = coset_of(&ev(&[1]), &f);
        assert_eq!(c1.members(), &[ev(&[1]), ev(&[2]), ev(&[4]), ev(&[8])]);
        assert_eq!(c1.size(), 4);
        let c5 = coset_of(&ev(&[5]), &f);
        assert_eq!(c5.members(), &[ev(&[5]), ev(&[10])]);
        let c0 = coset_of(&ev(&[0]), &f);
        assert_eq!(c0.members(), &[ev(&[0])]);

        let all = all_cosets(&f, 1);
        let leaders: Vec<u32> = all.iter().map(|c| c.leader().coords()[0]).collect();
        assert_eq!(leaders, vec![0, 1, 3, 5, 7]);
        let total: usize = all.iter().map(CyclotomicCoset::size).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn leader_is_lex_minimum() {
        let f = Field::new(2, 4).unwrap();
        // Start the orbit off-leader.
        let c = coset_of(&ev(&[9]), &f);
        assert_eq!(c.leader(), &ev(&[3]));
        assert_eq!(c.members(), &[ev(&[3]), ev(&[6]), ev(&[12]), ev(&[9])]);
    }

    #[test]
    fn gf8_r2_coset_and_partition() {
        let f = Field::new(2, 3).unwrap();
        let c = coset_of(&ev(&[1, 0]), &f);
        assert_eq!(c.members(), &[ev(&[1, 0]), ev(&[2, 0]), ev(&[4, 0])]);
        let all = all_cosets(&f, 2);
        assert_eq!(all.len(), 17);
        let total: usize = all.iter().map(CyclotomicCoset::size).sum();
        assert_eq!(total, 49);
        for c in &all {
            assert!(c.size() == 1 || c.size() == 3);
        }
    }

    #[test]
    fn coset_sizes_divide_s() {
        for (p, s) in [(2u32, 4u32), (3, 2), (2, 3), (5, 2)] {
            let f = Field::new(p, s).unwrap();
            for r in 1..=2usize {
                for c in all_cosets(&f, r) {
                    assert_eq!(s as usize % c.size(), 0, "GF({p}^{s}) r={r}");
                    // Closure: p * last member = leader.
                    let back = c.members().last().unwrap().scale(u64::from(p), &f);
                    assert_eq!(&back, c.leader());
                }
            }
        }
    }

    #[test]
    fn gf4_two_cosets() {
        let f = Field::new(2, 2).unwrap();
        let all = all_cosets(&f, 1);
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].members(), &[ev(&[0])]);
        assert_eq!(all[1].members(), &[ev(&[1]), ev(&[2])]);
    }

    #[test]
    fn hat_examples() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(hat(&ev(&[6, 3]), &f), ev(&[1, 4]));
        assert_eq!(hat(&ev(&[0, 0]), &f), ev(&[0, 0]));
        assert_eq!(hat(&ev(&[0, 2]), &f), ev(&[0, 5]));
        // Involution on all of H.
        for coords in lex_tuples(7, 2) {
            let u = ExponentVector(coords);
            assert_eq!(hat(&hat(&u, &f), &f), u);
        }
    }

    #[test]
    fn hat_maps_cosets_to_cosets() {
        let f = Field::new(2, 4).unwrap();
        for c in all_cosets(&f, 1) {
            let images: BTreeSet<ExponentVector> = c.members().iter().map(|m| hat(m, &f)).collect();
            let image_coset = coset_of(images.iter().next().unwrap(), &f);
            let expect: BTreeSet<ExponentVector> = image_coset.members().iter().cloned().collect();
            assert_eq!(images, expect);
        }
    }

    #[test]
    fn u_perp_complement_semantics() {
        let f = Field::new(2, 2).unwrap();
        let u = ExponentSet::from_coords(1, &[vec![0]], &f).unwrap();
        let perp = u_perp(&u, &f);
        let coords: Vec<u32> = perp.iter().map(|v| v.coords()[0]).collect();
        assert_eq!(coords, vec![1, 2]);

        let empty = ExponentSet::new(1, vec![], &f).unwrap();
        assert_eq!(u_perp(&empty, &f), ExponentSet::full(1, &f));
    }

    #[test]
    fn u_perp_gf8_example() {
        let f = Field::new(2, 3).unwrap();
        let u = ExponentSet::from_coords(
            2,
            &[
                vec![1, 0],
                vec![2, 0],
                vec![4, 0],
                vec![0, 1],
                vec![0, 2],
                vec![0, 4],
            ],
            &f,
        )
        .unwrap();
        let perp = u_perp(&u, &f);
        assert_eq!(perp.len(), 43);
        assert!(perp.is_coset_closed());
        assert_eq!(u_perp(&perp, &f), u);
    }

    #[test]
    fn u_perp_involution_and_size() {
        let f = Field::new(3, 2).unwrap();
        let u = ExponentSet::from_coords(2, &[vec![5, 0], vec![7, 0], vec![3, 1]], &f).unwrap();
        let perp = u_perp(&u, &f);
        assert_eq!(perp.len(), 64 - 3);
        assert_eq!(u_perp(&perp, &f), u);
    }

    #[test]
    fn u_hat_closure() {
        let f = Field::new(2, 4).unwrap();
        // U = {0..8}: hat(U) = {0, 7..14}, so u_perp(U) = {1..6} and its
        // closure is I_1 + I_3 + I_5 in full.
        let u = ExponentSet::from_coords(1, &(0..=8u32).map(|i| vec![i]).collect::<Vec<_>>(), &f)
            .unwrap();
        let perp = u_perp(&u, &f);
        let perp_coords: Vec<u32> = perp.iter().map(|v| v.coords()[0]).collect();
        assert_eq!(perp_coords, vec![1, 2, 3, 4, 5, 6]);
        let hatted = u_hat(&u, &f);
        assert!(hatted.is_coset_closed());
        assert_eq!(hatted.len(), 10);
        for leader in [1u32, 3, 5] {
            let c = coset_of(&ev(&[leader]), &f);
            assert!(c.members().iter().all(|m| hatted.contains(m)), "I_{leader}");
        }

        // Coset-closed U: closure is a no-op.
        let f8 = Field::new(2, 3).unwrap();
        let closed =
            ExponentSet::from_coords(2, &[vec![1, 0], vec![2, 0], vec![4, 0]], &f8).unwrap();
        assert!(closed.is_coset_closed());
        assert_eq!(u_hat(&closed, &f8), u_perp(&closed, &f8));

        // U = H: dual support is empty.
        let full = ExponentSet::full(1, &f);
        assert!(u_hat(&full, &f).is_empty());
    }

    #[test]
    fn contained_cosets_rs16() {
        let f = Field::new(2, 4).unwrap();
        let u9 = ExponentSet::from_coords(1, &(0..=8u32).map(|i| vec![i]).collect::<Vec<_>>(), &f)
            .unwrap();
        let inside = contained_cosets(&u9, &f);
        let leaders: Vec<u32> = inside.iter().map(|c| c.leader().coords()[0]).collect();
        assert_eq!(leaders, vec![0, 1]);

        let u11 =
            ExponentSet::from_coords(1, &(0..=10u32).map(|i| vec![i]).collect::<Vec<_>>(), &f)
                .unwrap();
        let inside = contained_cosets(&u11, &f);
        let leaders: Vec<u32> = inside.iter().map(|c| c.leader().coords()[0]).collect();
        assert_eq!(leaders, vec![0, 1, 5]);

        // One whole coset is its own answer.
        let c3 = coset_of(&ev(&[3]), &f);
        let u = ExponentSet::new(1, c3.members().to_vec(), &f).unwrap();
        assert_eq!(contained_cosets(&u, &f), vec![c3]);
    }

    #[test]
    fn duplicate_inputs_are_deduplicated() {
        let f = Field::new(3, 2).unwrap();
        let u = ExponentSet::from_coords(2, &[vec![0, 0], vec![0, 0], vec![5, 1]], &f).unwrap();
        assert_eq!(u.len(), 2);
    }

    #[test]
    fn dimension_count_identity_for_closed_sets() {
        // For coset-closed U: dim over contained cosets plus dim over cosets
        // meeting u_perp equals (q-1)^r.
        let f = Field::new(2, 3).unwrap();
        let mut elems = Vec::new();
        for b in [[1u32, 0], [6, 3], [0, 0]] {
            elems.extend(coset_of(&ev(&b), &f).members().to_vec());
        }
        let u = ExponentSet::new(2, elems, &f).unwrap();
        assert!(u.is_coset_closed());
        let inside: usize = contained_cosets(&u, &f)
            .iter()
            .map(CyclotomicCoset::size)
            .sum();
        let meeting: usize = meeting_cosets(&u_perp(&u, &f), &f)
            .iter()
            .map(CyclotomicCoset::size)
            .sum();
        assert_eq!(inside + meeting, 49);
    }

    #[test]
    fn out_of_range_rejected() {
        let f = Field::new(2, 2).unwrap();
        assert!(ExponentVector::new(vec![3], &f).is_err());
        assert!(ExponentSet::from_coords(1, &[vec![7]], &f).is_err());
    }
}

//! The Weyl group acting on weight space by exact integer matrices.
//!
//! Each element is carried twice: as its matrix on the fundamental-weight
//! basis `ω₁..ωₙ` (used for identity, since the action is faithful) and as its
//! matrix on the simple-root basis `α₁..αₙ` (used to read off signs of
//! `w(α_i)`, which the ω-coordinates do not determine when `A` is singular).

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::cartan::CartanMatrix;
use crate::polyring::{Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("generator index {index} out of range for rank {n}", index = .index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("weight has a negative coordinate at position {pos}", pos = .0 + 1)]
    NotDominant(usize),
    #[error("integer overflow while multiplying Weyl group matrices")]
    Overflow,
}

/// Square integer matrix, row-major. Columns are images of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.n + c]
    }

    fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.n + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<i128> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix, WeylError> {
        let n = self.n;
        let mut out = IntMatrix { n, data: vec![0; n * n] };
        for r in 0..n {
            for c in 0..n {
                let mut acc: i128 = 0;
                for k in 0..n {
                    let term = self.get(r, k).checked_mul(other.get(k, c)).ok_or(WeylError::Overflow)?;
                    acc = acc.checked_add(term).ok_or(WeylError::Overflow)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// `self · S` where `S` agrees with the identity outside column `col`,
    /// whose entries are `s_col`.
    fn mul_column_update(&self, col: usize, s_col: &[i128]) -> Result<IntMatrix, WeylError> {
        let mut out = self.clone();
        for r in 0..self.n {
            let mut acc: i128 = 0;
            for (k, &s) in s_col.iter().enumerate() {
                if s == 0 {
                    continue;
                }
                let term = self.get(r, k).checked_mul(s).ok_or(WeylError::Overflow)?;
                acc = acc.checked_add(term).ok_or(WeylError::Overflow)?;
            }
            out.set(r, col, acc);
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_rows(
            (0..self.n)
                .map(|r| (0..self.n).map(|c| Rational::from_integer(self.get(r, c).into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        self.data.chunks(self.n).map(<[i128]>::to_vec).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{row:?}")?;
        }
        Ok(())
    }
}

/// Coordinates of a weight in the basis `ω₁..ωₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub coords: Vec<Rational>,
}

impl WeightVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        WeightVector { coords }
    }

    pub fn zero(n: usize) -> Self {
        WeightVector {
            coords: vec![Rational::zero(); n],
        }
    }

    /// The fundamental weight `ω_{i+1}`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.coords[i] = Rational::from_integer(1.into());
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// Column `i` of the ω-basis matrix of `σ_i`: `σ_i(ω_i) = ω_i − α_i`.
fn reflection_column(a: &CartanMatrix, i: usize) -> Vec<i128> {
    (0..a.rank())
        .map(|k| if k == i { -1 } else { -(a.get(k, i) as i128) })
        .collect()
}

/// `R · σ_i` for a root-basis matrix `R`: column `j` of `σ_i` is
/// `α_j − a_ij·α_i`.
fn root_times_reflection(r: &IntMatrix, a: &CartanMatrix, i: usize) -> Result<IntMatrix, WeylError> {
    let n = r.n;
    let mut out = r.clone();
    for j in 0..n {
        let aij = a.get(i, j) as i128;
        if aij == 0 {
            continue;
        }
        for row in 0..n {
            let v = r
                .get(row, i)
                .checked_mul(aij)
                .and_then(|t| r.get(row, j).checked_sub(t))
                .ok_or(WeylError::Overflow)?;
            out.set(row, j, v);
        }
    }
    Ok(out)
}

/// Matrix of `σ_i` on the ω-basis: fixes `ω_j` for `j ≠ i` and sends `ω_i` to
/// `−ω_i − Σ_{k≠i} a_ki ω_k`.
pub fn simple_reflection_matrix(a: &CartanMatrix, i: usize) -> Result<IntMatrix, WeylError> {
    let n = a.rank();
    if i >= n {
        return Err(WeylError::IndexOutOfRange { index: i, n });
    }
    IntMatrix::identity(n).mul_column_update(i, &reflection_column(a, i))
}

/// Group element with a reduced word and its two matrix forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    omega: IntMatrix,
    root: IntMatrix,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            word: Vec::new(),
            omega: IntMatrix::identity(n),
            root: IntMatrix::identity(n),
        }
    }

    /// The element `σ_{w[0]} σ_{w[1]} ⋯`. The stored word is a reduced word
    /// for it, found by stripping right descents.
    pub fn from_word(a: &CartanMatrix, word: &[usize]) -> Result<Self, WeylError> {
        let n = a.rank();
        let mut omega = IntMatrix::identity(n);
        let mut root = IntMatrix::identity(n);
        for &i in word {
            if i >= n {
                return Err(WeylError::IndexOutOfRange { index: i, n });
            }
            omega = omega.mul_column_update(i, &reflection_column(a, i))?;
            root = root_times_reflection(&root, a, i)?;
        }
        let mut reduced = Vec::new();
        let mut r = root.clone();
        while let Some(i) = (0..n).find(|&i| r.column(i).iter().any(|&x| x < 0)) {
            reduced.push(i);
            r = root_times_reflection(&r, a, i)?;
        }
        reduced.reverse();
        Ok(WeylElement { word: reduced, omega, root })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Action on the ω-basis.
    pub fn matrix(&self) -> &IntMatrix {
        &self.omega
    }

    /// Action on the simple-root basis.
    pub fn root_matrix(&self) -> &IntMatrix {
        &self.root
    }

    /// `w(α_i)` has nonnegative simple-root coordinates, i.e. `ℓ(wσ_i) > ℓ(w)`.
    pub fn is_ascent(&self, i: usize) -> bool {
        self.root.column(i).iter().all(|&x| x >= 0)
    }

    fn times_generator(&self, a: &CartanMatrix, i: usize) -> Result<Self, WeylError> {
        let mut word = self.word.clone();
        word.push(i);
        Ok(WeylElement {
            word,
            omega: self.omega.mul_column_update(i, &reflection_column(a, i))?,
            root: root_times_reflection(&self.root, a, i)?,
        })
    }
}

/// `w(v)` in exact arithmetic.
pub fn act(w: &WeylElement, v: &WeightVector) -> Result<WeightVector, WeylError> {
    let n = w.omega.dim();
    if v.dim() != n {
        return Err(WeylError::DimensionMismatch { expected: n, found: v.dim() });
    }
    let coords = (0..n)
        .map(|r| {
            (0..n).fold(Rational::zero(), |acc, c| {
                acc + Rational::from_integer(w.omega.get(r, c).into()) * &v.coords[c]
            })
        })
        .collect();
    Ok(WeightVector { coords })
}

/// Number of Weyl group elements of each length `0..=truncation`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthSeries {
    pub counts: Vec<u64>,
    pub truncation: usize,
}

/// All elements of length at most `max_length`, grouped by length.
///
/// Breadth-first: `wσ_i` is one longer than `w` exactly when `w(α_i) > 0`,
/// and duplicates within a level are merged by their ω-matrix. Within a level
/// elements appear in discovery order (parents in order, generators
/// ascending), so the output is deterministic.
pub fn enumerate_elements(a: &CartanMatrix, max_length: usize) -> Result<Vec<Vec<WeylElement>>, WeylError> {
    let mut levels = Vec::new();
    bfs_levels(a, max_length, |level| levels.push(level.to_vec()))?;
    Ok(levels)
}

/// Growth series of `W(A)` truncated at length `max_length`. Only one level
/// is held in memory at a time.
pub fn enumerate_by_length(a: &CartanMatrix, max_length: usize) -> Result<GrowthSeries, WeylError> {
    let mut counts = Vec::new();
    bfs_levels(a, max_length, |level| counts.push(level.len() as u64))?;
    Ok(GrowthSeries {
        counts,
        truncation: max_length,
    })
}

fn bfs_levels(
    a: &CartanMatrix,
    max_length: usize,
    mut visit: impl FnMut(&[WeylElement]),
) -> Result<(), WeylError> {
    let n = a.rank();
    let mut current = vec![WeylElement::identity(n)];
    visit(&current);
    for _ in 0..max_length {
        let mut seen: HashSet<IntMatrix> = HashSet::new();
        let mut next = Vec::new();
        for w in &current {
            for i in 0..n {
                if !w.is_ascent(i) {
                    continue;
                }
                let child = w.times_generator(a, i)?;
                if seen.insert(child.omega.clone()) {
                    next.push(child);
                }
            }
        }
        visit(&next);
        current = next;
    }
    Ok(())
}

/// Whether the orbit of a dominant weight has at least `threshold` points.
pub fn orbit_size_at_least(a: &CartanMatrix, v: &WeightVector, threshold: usize) -> Result<bool, WeylError> {
    let n = a.rank();
    if v.dim() != n {
        return Err(WeylError::DimensionMismatch { expected: n, found: v.dim() });
    }
    if let Some(pos) = v.coords.iter().position(Signed::is_negative) {
        return Err(WeylError::NotDominant(pos));
    }
    let mut seen: HashSet<WeightVector> = HashSet::from([v.clone()]);
    let mut queue = VecDeque::from([v.clone()]);
    while let Some(u) = queue.pop_front() {
        if seen.len() >= threshold {
            return Ok(true);
        }
        for i in 0..n {
            if u.coords[i].is_zero() {
                continue;
            }
            // σ_i(u) = u − u_i α_i with α_i = Σ_k a_ki ω_k
            let coords = (0..n)
                .map(|k| &u.coords[k] - &u.coords[i] * Rational::from_integer(a.get(k, i).into()))
                .collect();
            let image = WeightVector { coords };
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(seen.len() >= threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> CartanMatrix {
        CartanMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn a2() -> CartanMatrix {
        m(&[&[2, -1], &[-1, 2]])
    }

    fn wv(c: &[i64]) -> WeightVector {
        WeightVector::new(c.iter().map(|&x| rational(x)).collect())
    }

    /// All words up to `max_len`, deduplicated by full matrix products; the
    /// length of an element is the first word length at which it appears.
    fn naive_counts(a: &CartanMatrix, max_len: usize) -> Vec<u64> {
        let n = a.rank();
        let gens: Vec<IntMatrix> = (0..n).map(|i| simple_reflection_matrix(a, i).unwrap()).collect();
        let mut seen: HashSet<IntMatrix> = HashSet::from([IntMatrix::identity(n)]);
        let mut frontier = vec![IntMatrix::identity(n)];
        let mut counts = vec![1u64];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let p = w.checked_mul(g).unwrap();
                    if seen.insert(p.clone()) {
                        next.push(p);
                    }
                }
            }
            counts.push(next.len() as u64);
            frontier = next;
        }
        counts
    }

    #[test]
    fn rank_two_reflections() {
        let (a, b) = (3, 2);
        let c = CartanMatrix::rank_two(a, b).unwrap();
        let s1 = simple_reflection_matrix(&c, 0).unwrap();
        // σ₁(ω₁) = −ω₁ + bω₂, σ₁(ω₂) = ω₂
        assert_eq!(s1.column(0), vec![-1, b as i128]);
        assert_eq!(s1.column(1), vec![0, 1]);
        let s2 = simple_reflection_matrix(&a2(), 1).unwrap();
        assert_eq!(s2.column(1), vec![1, -1]);
        assert_eq!(
            simple_reflection_matrix(&a2(), 2).unwrap_err(),
            WeylError::IndexOutOfRange { index: 2, n: 2 }
        );
    }

    #[test]
    fn action_examples() {
        let a22 = CartanMatrix::rank_two(2, 2).unwrap();
        let id = WeylElement::identity(2);
        assert_eq!(act(&id, &wv(&[3, -5])).unwrap(), wv(&[3, -5]));
        let s1 = WeylElement::from_word(&a22, &[0]).unwrap();
        assert_eq!(act(&s1, &wv(&[1, 0])).unwrap(), wv(&[-1, 2]));
        let cube = WeylElement::from_word(&a2(), &[0, 1, 0, 1, 0, 1]).unwrap();
        assert!(cube.matrix().is_identity());
        assert_eq!(cube.length(), 0);
        assert_eq!(act(&cube, &wv(&[7, -2])).unwrap(), wv(&[7, -2]));
        assert!(matches!(act(&id, &wv(&[1])), Err(WeylError::DimensionMismatch { .. })));
    }

    #[test]
    fn word_reduction() {
        let w = WeylElement::from_word(&a2(), &[0, 1, 1, 0, 1]).unwrap();
        assert_eq!(w.length(), 1);
        assert_eq!(w.word(), &[1]);
        let longest = WeylElement::from_word(&a2(), &[0, 1, 0]).unwrap();
        assert_eq!(longest.length(), 3);
        assert_eq!(longest.matrix(), WeylElement::from_word(&a2(), &[1, 0, 1]).unwrap().matrix());
    }

    #[test]
    fn growth_examples() {
        assert_eq!(enumerate_by_length(&a2(), 3).unwrap().counts, vec![1, 2, 2, 1]);
        let a22 = CartanMatrix::rank_two(2, 2).unwrap();
        assert_eq!(enumerate_by_length(&a22, 5).unwrap().counts, vec![1, 2, 2, 2, 2, 2]);
        let big = m(&[&[2, -2, -2], &[-2, 2, -2], &[-2, -2, 2]]);
        assert_eq!(enumerate_by_length(&big, 4).unwrap().counts, vec![1, 3, 6, 12, 24]);
        assert_eq!(enumerate_by_length(&a2(), 0).unwrap().counts, vec![1]);
        // finite group: counts past the top length are zero
        assert_eq!(enumerate_by_length(&a2(), 5).unwrap().counts, vec![1, 2, 2, 1, 0, 0]);
    }

    #[test]
    fn finite_type_totals() {
        let b3 = m(&[&[2, -1, 0], &[-2, 2, -1], &[0, -1, 2]]);
        let g = enumerate_by_length(&b3, 12).unwrap();
        assert_eq!(g.counts.iter().sum::<u64>(), 48);
        assert_eq!(g.counts.iter().rposition(|&c| c > 0), Some(9));
        let g2 = CartanMatrix::rank_two(1, 3).unwrap();
        assert_eq!(enumerate_by_length(&g2, 8).unwrap().counts.iter().sum::<u64>(), 12);
    }

    #[test]
    fn orbits() {
        let v = WeightVector::fundamental(2, 0);
        assert!(!orbit_size_at_least(&a2(), &v, 4).unwrap());
        assert!(orbit_size_at_least(&a2(), &v, 3).unwrap());
        let a22 = CartanMatrix::rank_two(2, 2).unwrap();
        assert!(orbit_size_at_least(&a22, &v, 100).unwrap());
        assert!(!orbit_size_at_least(&a2(), &WeightVector::zero(2), 2).unwrap());
        assert_eq!(
            orbit_size_at_least(&a2(), &wv(&[1, -1]), 2).unwrap_err(),
            WeylError::NotDominant(1)
        );
    }

    #[test]
    fn bfs_matches_naive_words() {
        let fixtures = [
            a2(),
            CartanMatrix::rank_two(2, 2).unwrap(),
            CartanMatrix::rank_two(2, 3).unwrap(),
            CartanMatrix::rank_two(1, 3).unwrap(),
            m(&[&[2, -1, -1], &[-1, 2, -1], &[-2, -1, 2]]),
            m(&[&[2, -1, 0], &[-2, 2, -1], &[0, -1, 2]]),
            m(&[&[2, -3, -1], &[-1, 2, -2], &[-1, -1, 2]]),
        ];
        for a in &fixtures {
            assert_eq!(enumerate_by_length(a, 5).unwrap().counts, naive_counts(a, 5), "{a}");
        }
    }

    fn random_cartan(n: usize, entries: &[i64]) -> CartanMatrix {
        let mut rows = vec![vec![0i64; n]; n];
        let mut k = 0;
        for i in 0..n {
            rows[i][i] = 2;
            for j in i + 1..n {
                let (x, y) = (entries[k], entries[k + 1]);
                k += 2;
                if x != 0 && y != 0 {
                    rows[i][j] = x;
                    rows[j][i] = y;
                }
            }
        }
        CartanMatrix::validate(&rows).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reflections_are_involutions(n in 1usize..5, entries in proptest::collection::vec(-3i64..=0, 12)) {
            let a = random_cartan(n, &entries);
            for i in 0..n {
                let s = simple_reflection_matrix(&a, i).unwrap();
                prop_assert!(s.checked_mul(&s).unwrap().is_identity());
            }
        }

        #[test]
        fn braid_relations(n in 2usize..5, entries in proptest::collection::vec(-3i64..=0, 12)) {
            let a = random_cartan(n, &entries);
            for i in 0..n {
                for j in i + 1..n {
                    if let Some(mij) = a.coxeter_exponent(i, j) {
                        let si = simple_reflection_matrix(&a, i).unwrap();
                        let sj = simple_reflection_matrix(&a, j).unwrap();
                        let p = si.checked_mul(&sj).unwrap();
                        let mut acc = IntMatrix::identity(n);
                        for _ in 0..mij {
                            acc = acc.checked_mul(&p).unwrap();
                        }
                        prop_assert!(acc.is_identity());
                    }
                }
            }
        }

        #[test]
        fn bfs_oracle_equivalence(n in 1usize..4, entries in proptest::collection::vec(-3i64..=0, 6)) {
            let a = random_cartan(n, &entries);
            prop_assert_eq!(enumerate_by_length(&a, 5).unwrap().counts, naive_counts(&a, 5));
        }

        #[test]
        fn growth_is_relabeling_invariant(entries in proptest::collection::vec(-3i64..=0, 6), rot in 0usize..3) {
            let a = random_cartan(3, &entries);
            let perm: Vec<usize> = (0..3).map(|i| (i + rot) % 3).collect();
            let b = a.permuted(&perm).unwrap();
            prop_assert_eq!(enumerate_by_length(&a, 6).unwrap(), enumerate_by_length(&b, 6).unwrap());
        }
    }
}

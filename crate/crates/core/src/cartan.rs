//! Generalized Cartan matrices: validation, decomposition into indecomposable
//! blocks, finite/affine/indefinite classification, symmetrizers and
//! hyperbolicity.
//!
//! Indices are 0-based in the API. Error messages and the JSON block lists
//! print them 1-based, matching the usual `a_{ij}` notation.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {n}", row = .row + 1)]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("diagonal entry a({i},{i}) = {value}, expected 2", i = .i + 1)]
    DiagonalNotTwo { i: usize, value: i64 },
    #[error("off-diagonal entry a({i},{j}) = {value} is positive", i = .i + 1, j = .j + 1)]
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    #[error("zero pattern is not symmetric at ({i},{j}): a({i},{j}) != 0 but a({j},{i}) = 0", i = .i + 1, j = .j + 1)]
    ZeroAsymmetry { i: usize, j: usize },
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("index {index} out of range for rank {n}", index = .index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("matrix is {0:?}, expected indefinite")]
    NotIndefinite(Kind),
    #[error("matrix is decomposable into {0} blocks")]
    Decomposable(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no indecomposable indefinite principal submatrix of corank 1 exists ({0}), which cannot happen for an indefinite matrix")]
    LemmaViolated(String),
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}

/// Finite, affine or indefinite type of an indecomposable matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The type of one indecomposable block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockType {
    pub indices: Vec<usize>,
    pub kind: Kind,
}

/// Classification of a possibly decomposable matrix, one entry per block in
/// the order of [`CartanMatrix::indecomposable_blocks`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixType {
    pub blocks: Vec<BlockType>,
}

impl MatrixType {
    /// The kind when the matrix is indecomposable.
    pub fn kind(&self) -> Option<Kind> {
        match self.blocks.as_slice() {
            [only] => Some(only.kind),
            _ => None,
        }
    }
}

/// Diagonal `d` with `a_ij·d_j = a_ji·d_i`, normalized to `d = 1` at the
/// least index of every block. `None` when no such `d` exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetrizer {
    pub d: Option<Vec<Rational>>,
}

impl Symmetrizer {
    pub fn exists(&self) -> bool {
        self.d.is_some()
    }
}

/// A validated generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    a: Vec<i64>,
}

/// JSON carrier `{"n": int, "a": [[int]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanJson {
    pub n: usize,
    pub a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Checks the three Cartan axioms on a square integer matrix.
    pub fn validate(rows: &[Vec<i64>]) -> Result<Self, CartanError> {
        let n = rows.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(CartanError::NotSquare { row, len: r.len(), n });
            }
        }
        for i in 0..n {
            if rows[i][i] != 2 {
                return Err(CartanError::DiagonalNotTwo { i, value: rows[i][i] });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && rows[i][j] > 0 {
                    return Err(CartanError::PositiveOffDiagonal { i, j, value: rows[i][j] });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && rows[i][j] != 0 && rows[j][i] == 0 {
                    return Err(CartanError::ZeroAsymmetry { i: j, j: i });
                }
            }
        }
        Ok(CartanMatrix {
            n,
            a: rows.iter().flatten().copied().collect(),
        })
    }

    /// The 2×2 matrix `[[2, −a], [−b, 2]]`.
    pub fn rank_two(a: i64, b: i64) -> Result<Self, CartanError> {
        Self::validate(&[vec![2, -a], vec![-b, 2]])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `(a_ij)_{i,j ∈ indices}`, in the order given.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self, CartanError> {
        if indices.is_empty() {
            return Err(CartanError::EmptyIndexSet);
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.n) {
            return Err(CartanError::IndexOutOfRange { index: bad, n: self.n });
        }
        let m = indices.len();
        let mut a = Vec::with_capacity(m * m);
        for &i in indices {
            for &j in indices {
                a.push(self.get(i, j));
            }
        }
        Ok(CartanMatrix { n: m, a })
    }

    /// Simultaneous row/column relabeling: entry `(p, q)` of the result is
    /// `a[perm[p]][perm[q]]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self, CartanError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(CartanError::PreconditionViolated("permutation length differs from rank".into()));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(CartanError::PreconditionViolated("not a permutation".into()));
            }
        }
        self.principal_submatrix(perm)
    }

    /// Connected components of the graph with an edge `i-j` when `a_ij ≠ 0`,
    /// each sorted ascending, listed by least index.
    pub fn indecomposable_blocks(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut blocks = Vec::new();
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![root];
            comp[root] = id;
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                for j in 0..self.n {
                    if j != i && self.get(i, j) != 0 && comp[j] == usize::MAX {
                        comp[j] = id;
                        block.push(j);
                        queue.push_back(j);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }

    pub fn is_indecomposable(&self) -> bool {
        self.indecomposable_blocks().len() == 1
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor(&idx)
    }

    fn minor(&self, indices: &[usize]) -> BigInt {
        let m = indices.len();
        let mut a: Vec<Vec<BigInt>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| BigInt::from(self.get(i, j))).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..m {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..m {
                for j in k + 1..m {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        if m == 0 {
            BigInt::one()
        } else {
            sign * &a[m - 1][m - 1]
        }
    }

    fn rational_rank(&self) -> usize {
        RationalMatrix::from_rows(
            self.rows()
                .into_iter()
                .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
        .rank()
    }

    /// Type of an indecomposable matrix by principal minors: finite when all
    /// are positive; affine when all proper ones are positive, the
    /// determinant vanishes and the rank is `n − 1`; indefinite otherwise.
    fn kind_of_indecomposable(&self) -> Kind {
        let n = self.n;
        let full = (1u64 << n) - 1;
        let proper_positive = (1..full).all(|mask| {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            self.minor(&idx).is_positive()
        });
        if !proper_positive {
            return Kind::Indefinite;
        }
        let det = self.determinant();
        if det.is_positive() {
            Kind::Finite
        } else if det.is_zero() && self.rational_rank() + 1 == n {
            Kind::Affine
        } else {
            Kind::Indefinite
        }
    }

    /// Classifies every indecomposable block.
    pub fn classify(&self) -> MatrixType {
        let blocks = self
            .indecomposable_blocks()
            .into_iter()
            .map(|indices| {
                let kind = self.principal_submatrix(&indices).unwrap().kind_of_indecomposable();
                BlockType { indices, kind }
            })
            .collect();
        MatrixType { blocks }
    }

    /// Kind of an indecomposable matrix; errors on decomposable input.
    pub fn kind(&self) -> Result<Kind, CartanError> {
        self.require_indecomposable()?;
        Ok(self.kind_of_indecomposable())
    }

    pub(crate) fn require_indecomposable(&self) -> Result<(), CartanError> {
        let blocks = self.indecomposable_blocks().len();
        if blocks != 1 {
            return Err(CartanError::Decomposable(blocks));
        }
        Ok(())
    }

    /// Propagates `d_j = d_i·a_ji / a_ij` along a BFS spanning tree of each
    /// block, then checks `a_ij·d_j = a_ji·d_i` on every pair.
    pub fn symmetrize(&self) -> Symmetrizer {
        let n = self.n;
        let mut d: Vec<Option<Rational>> = vec![None; n];
        for block in self.indecomposable_blocks() {
            let root = block[0];
            d[root] = Some(Rational::one());
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if j == i || self.get(i, j) == 0 || d[j].is_some() {
                        continue;
                    }
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * BigRational::new(self.get(j, i).into(), self.get(i, j).into()));
                    queue.push_back(j);
                }
            }
        }
        let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
        let consistent = (0..n).all(|i| {
            (0..n).all(|j| {
                BigRational::from_integer(self.get(i, j).into()) * &d[j]
                    == BigRational::from_integer(self.get(j, i).into()) * &d[i]
            })
        });
        Symmetrizer {
            d: consistent.then_some(d),
        }
    }

    /// Whether an indecomposable indefinite matrix has every proper principal
    /// submatrix of finite or affine type. Only corank-1 deletions need to be
    /// examined: every smaller principal submatrix sits block-wise inside one
    /// of them.
    pub fn is_hyperbolic(&self) -> Result<bool, CartanError> {
        let kind = self.kind()?;
        if kind != Kind::Indefinite {
            return Err(CartanError::NotIndefinite(kind));
        }
        Ok((0..self.n).all(|k| {
            let rest: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
            self.principal_submatrix(&rest)
                .unwrap()
                .classify()
                .blocks
                .iter()
                .all(|b| b.kind != Kind::Indefinite)
        }))
    }

    /// The least `k` such that deleting row and column `k` leaves an
    /// indecomposable indefinite matrix. Requires an indecomposable,
    /// indefinite, non-hyperbolic matrix.
    pub fn find_indefinite_principal(&self) -> Result<usize, CartanError> {
        if !self.is_indecomposable() {
            return Err(CartanError::PreconditionViolated("matrix is decomposable".into()));
        }
        match self.is_hyperbolic() {
            Err(CartanError::NotIndefinite(kind)) => {
                return Err(CartanError::PreconditionViolated(format!("matrix is {kind:?}")))
            }
            Err(e) => return Err(e),
            Ok(true) => {
                return Err(CartanError::PreconditionViolated("matrix is hyperbolic".into()))
            }
            Ok(false) => {}
        }
        for k in 0..self.n {
            let rest: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
            let sub = self.principal_submatrix(&rest)?;
            if sub.is_indecomposable() && sub.kind_of_indecomposable() == Kind::Indefinite {
                return Ok(k);
            }
        }
        Err(CartanError::LemmaViolated(self.to_string()))
    }

    /// `m_ij` of the Coxeter presentation: 2, 3, 4, 6 for `a_ij·a_ji` = 0..3,
    /// `None` (infinite) from 4 on.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        match self.get(i, j) * self.get(j, i) {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    pub fn to_json(&self) -> CartanJson {
        CartanJson {
            n: self.n,
            a: self.rows(),
        }
    }

    pub fn from_json(json: &CartanJson) -> Result<Self, CartanError> {
        if json.a.len() != json.n {
            return Err(CartanError::Parse(format!(
                "\"n\" is {} but \"a\" has {} rows",
                json.n,
                json.a.len()
            )));
        }
        Self::validate(&json.a)
    }

    /// Parses either the JSON form or a plain grid of integers separated by
    /// whitespace and/or commas, one row per line.
    pub fn parse(text: &str) -> Result<Self, CartanError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let json: CartanJson =
                serde_json::from_str(text).map_err(|e| CartanError::Parse(e.to_string()))?;
            return Self::from_json(&json);
        }
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                line.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|e| CartanError::Parse(format!("{t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::validate(&rows)
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

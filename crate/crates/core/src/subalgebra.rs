//! Regular subalgebras of cyclic Cartan matrices. When the Dynkin diagram is a
//! single cycle and every edge carries a `−1` on at least one side, the roots
//! `β_j = α_{j+1} + α_{j+2}` are real and span a full-rank subalgebra whose
//! Cartan matrix `B` has a closed form in the entries of `A`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cartan::{CartanError, CartanMatrix, Kind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgebraError {
    #[error("rank {0} is below 3")]
    RankTooSmall(usize),
    #[error("labeling does not match the matrix: {0}")]
    BadLabeling(String),
    #[error("computed matrix is not a generalized Cartan matrix: {0}")]
    NotACartanMatrix(CartanError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Vertices of the Dynkin diagram in cyclic order, 0-based. Position `p` holds
/// the vertex playing the role of index `p + 1` in the cyclic formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLabeling {
    pub order: Vec<usize>,
}

impl CycleLabeling {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Vertex at cyclic position `p` (any integer, read mod n).
    pub fn at(&self, p: usize) -> usize {
        self.order[p % self.order.len()]
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.order.iter().map(|v| v + 1).collect()
    }
}

impl Serialize for CycleLabeling {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    C1,
    C2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleFailure {
    pub condition: Condition,
    pub reason: String,
}

impl fmt::Display for CycleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails: {}", self.condition, self.reason)
    }
}

/// Orders the vertices into the unique cycle of the Dynkin diagram and checks
/// that each edge `{i, j}` has `a_ij = −1` or `a_ji = −1`.
///
/// The walk starts at vertex 1 and moves toward its lower-indexed neighbor.
pub fn check_c1_c2(a: &CartanMatrix) -> Result<Result<CycleLabeling, CycleFailure>, SubalgebraError> {
    let n = a.rank();
    if n < 3 {
        return Err(SubalgebraError::RankTooSmall(n));
    }
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && a.get(i, j) != 0).collect())
        .collect();
    if let Some(v) = (0..n).find(|&v| neighbors[v].len() != 2) {
        return Ok(Err(CycleFailure {
            condition: Condition::C1,
            reason: format!("vertex {} has degree {}", v + 1, neighbors[v].len()),
        }));
    }
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = neighbors[0][0];
    while cur != 0 {
        order.push(cur);
        let next = if neighbors[cur][0] == prev { neighbors[cur][1] } else { neighbors[cur][0] };
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Ok(Err(CycleFailure {
            condition: Condition::C1,
            reason: format!("diagram is not connected: cycle through vertex 1 has length {}", order.len()),
        }));
    }
    let labeling = CycleLabeling { order };
    for p in 0..n {
        let (i, j) = (labeling.at(p), labeling.at(p + 1));
        if a.get(i, j) != -1 && a.get(j, i) != -1 {
            return Ok(Err(CycleFailure {
                condition: Condition::C2,
                reason: format!(
                    "edge ({},{}) has a({},{}) = {} and a({},{}) = {}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    a.get(i, j),
                    j + 1,
                    i + 1,
                    a.get(j, i)
                ),
            }));
        }
    }
    Ok(Ok(labeling))
}

fn check_labeling(a: &CartanMatrix, cyc: &CycleLabeling) -> Result<(), SubalgebraError> {
    let n = a.rank();
    if n < 3 {
        return Err(SubalgebraError::RankTooSmall(n));
    }
    let mut seen = vec![false; n];
    if cyc.len() != n || cyc.order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(SubalgebraError::BadLabeling(format!("{:?} is not a permutation of 1..{n}", cyc.one_based())));
    }
    Ok(())
}

/// `b_ij = β_j(H_i)` with `H_i = −(a_{i+1,i+2} α∨_{i+2} + a_{i+2,i+1} α∨_{i+1})`,
/// indices cyclic in the labeling:
/// `b_ij = −a_{i+1,i+2}(a_{i+2,j+1} + a_{i+2,j+2}) − a_{i+2,i+1}(a_{i+1,j+1} + a_{i+1,j+2})`.
pub fn subalgebra_cartan(a: &CartanMatrix, cyc: &CycleLabeling) -> Result<CartanMatrix, SubalgebraError> {
    check_labeling(a, cyc)?;
    let n = a.rank();
    let e = |p: usize, q: usize| a.get(cyc.at(p), cyc.at(q));
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    -e(i + 1, i + 2) * (e(i + 2, j + 1) + e(i + 2, j + 2))
                        - e(i + 2, i + 1) * (e(i + 1, j + 1) + e(i + 1, j + 2))
                })
                .collect()
        })
        .collect();
    CartanMatrix::validate(&rows).map_err(SubalgebraError::NotACartanMatrix)
}

/// Simple-root coordinates of `β_j = α_{j+1} + α_{j+2}`.
pub fn beta_root(cyc: &CycleLabeling, j: usize) -> Vec<i64> {
    let mut v = vec![0; cyc.len()];
    v[cyc.at(j + 1)] += 1;
    v[cyc.at(j + 2)] += 1;
    v
}

/// ω-basis coordinates of `β_j`, i.e. `Σ_k (a_{k,j+1} + a_{k,j+2}) ω_k`.
pub fn beta_weight(a: &CartanMatrix, cyc: &CycleLabeling, j: usize) -> Vec<i64> {
    let (p, q) = (cyc.at(j + 1), cyc.at(j + 2));
    (0..a.rank()).map(|k| a.get(k, p) + a.get(k, q)).collect()
}

/// A word for the reflection in `β_j`. If `a_{j+1,j+2} = −1` then
/// `σ_{j+1}(α_{j+2}) = β_j` and the reflection is `σ_{j+1}σ_{j+2}σ_{j+1}`;
/// otherwise C2 gives `a_{j+2,j+1} = −1` and the roles swap.
pub fn beta_reflection_word(a: &CartanMatrix, cyc: &CycleLabeling, j: usize) -> Vec<usize> {
    let (p, q) = (cyc.at(j + 1), cyc.at(j + 2));
    if a.get(p, q) == -1 {
        vec![p, q, p]
    } else {
        vec![q, p, q]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum RegularChain {
    Built {
        labeling: CycleLabeling,
        b: Vec<Vec<i64>>,
        kind: Kind,
        symmetrizable: bool,
        hyperbolic: bool,
    },
    Unavailable {
        reason: String,
    },
}

/// For indecomposable, non-symmetrizable hyperbolic `A` of rank at least 3,
/// the subalgebra matrix `B` with its classification. Rank-3 inputs with an
/// affine 2×2 principal submatrix are reported unavailable, as are inputs
/// failing C1 or C2.
pub fn build_regular_chain(a: &CartanMatrix) -> Result<RegularChain, SubalgebraError> {
    let n = a.rank();
    if n < 3 {
        return Err(SubalgebraError::RankTooSmall(n));
    }
    if !a.is_indecomposable() {
        return Err(SubalgebraError::PreconditionViolated("matrix is decomposable".into()));
    }
    if a.symmetrize().exists() {
        return Err(SubalgebraError::PreconditionViolated("matrix is symmetrizable".into()));
    }
    if !a.is_hyperbolic().map_err(|e| SubalgebraError::PreconditionViolated(e.to_string()))? {
        return Err(SubalgebraError::PreconditionViolated("matrix is not hyperbolic".into()));
    }
    if n == 3 {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if a.get(i, j) * a.get(j, i) == 4 {
                return Ok(RegularChain::Unavailable {
                    reason: format!("affine 2×2 branch: submatrix on {{{},{}}} is affine", i + 1, j + 1),
                });
            }
        }
    }
    let cyc = match check_c1_c2(a)? {
        Ok(c) => c,
        Err(failure) => return Ok(RegularChain::Unavailable { reason: failure.to_string() }),
    };
    let b = subalgebra_cartan(a, &cyc)?;
    let kind = b.classify().kind().unwrap();
    Ok(RegularChain::Built {
        labeling: cyc,
        b: b.rows(),
        kind,
        symmetrizable: b.symmetrize().exists(),
        hyperbolic: b.is_hyperbolic().unwrap_or(false),
    })
}

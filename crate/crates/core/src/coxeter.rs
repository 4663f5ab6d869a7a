//! Coxeter matrices, parabolic subsystems, recognition of the finite types,
//! and Solomon growth polynomials for finite Coxeter groups.
//!
//! Finite-type recognition works by graph matching against the classification
//! of irreducible finite Coxeter diagrams, never by positive-definiteness of
//! the cosine matrix: matching stays in integer arithmetic and is exact.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::poly::bracket;
use crate::IntPolynomial;

/// Off-diagonal Coxeter label: a finite order m ≥ 2 or ∞.
///
/// Infinity is a distinguished value, never an integer sentinel.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => write!(f, "inf"),
        }
    }
}

/// A symmetric matrix of Coxeter labels m_ij with the diagonal fixed at 1;
/// off-diagonal entries are at least 2 or ∞. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    size: usize,
    /// upper triangle, row-major: entry for (i, j) with i < j
    labels: Vec<Label>,
}

impl CoxeterMatrix {
    /// The rank-n right-angled matrix: every off-diagonal label is 2.
    pub fn right_angled(size: usize) -> Self {
        CoxeterMatrix {
            size,
            labels: vec![Label::Finite(2); size * size.saturating_sub(1) / 2],
        }
    }

    /// Build from explicit off-diagonal labels; unspecified pairs default to 2.
    /// Rejects out-of-range indices, diagonal pairs, labels below 2, and
    /// duplicate pairs (in either order).
    pub fn from_labels(size: usize, labels: &[(usize, usize, Label)]) -> Result<Self, Error> {
        let mut m = Self::right_angled(size);
        let mut seen = HashSet::new();
        for &(i, j, label) in labels {
            if i >= size {
                return Err(Error::GeneratorOutOfRange { index: i, rank: size });
            }
            if j >= size {
                return Err(Error::GeneratorOutOfRange { index: j, rank: size });
            }
            if i == j {
                return Err(Error::DiagonalLabel { index: i });
            }
            if let Label::Finite(v) = label {
                if v < 2 {
                    return Err(Error::LabelTooSmall { value: v });
                }
            }
            let (i, j) = (i.min(j), i.max(j));
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateLabel { i, j });
            }
            let idx = Self::tri_index(size, i, j);
            m.labels[idx] = label;
        }
        Ok(m)
    }

    fn tri_index(size: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < size);
        i * size - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// m_ij, with m_ii = 1. Panics on out-of-range indices.
    pub fn label(&self, i: usize, j: usize) -> Label {
        assert!(i < self.size && j < self.size, "generator index out of range");
        if i == j {
            return Label::Finite(1);
        }
        let (i, j) = (i.min(j), i.max(j));
        self.labels[Self::tri_index(self.size, i, j)]
    }

    /// Pairs (i, j, m_ij) with i < j and m_ij ≠ 2, in row-major order — the
    /// canonical list of non-default labels.
    pub fn explicit_labels(&self) -> Vec<(usize, usize, Label)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in (i + 1)..self.size {
                let l = self.label(i, j);
                if l != Label::Finite(2) {
                    out.push((i, j, l));
                }
            }
        }
        out
    }
}

/// A set of generator indices, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct GeneratorSubset {
    indices: Vec<usize>,
}

impl GeneratorSubset {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        GeneratorSubset { indices }
    }

    pub fn empty() -> Self {
        GeneratorSubset { indices: Vec::new() }
    }

    /// The full generator set {0, …, size−1}.
    pub fn full(size: usize) -> Self {
        GeneratorSubset {
            indices: (0..size).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Principal submatrix indexed by `t` (in sorted index order).
pub fn restrict(m: &CoxeterMatrix, t: &GeneratorSubset) -> Result<CoxeterMatrix, Error> {
    for &i in t.indices() {
        if i >= m.size() {
            return Err(Error::GeneratorOutOfRange {
                index: i,
                rank: m.size(),
            });
        }
    }
    let idx = t.indices();
    let labels = idx
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| idx[a + 1..].iter().map(move |&j| (i, j)))
        .map(|(i, j)| m.label(i, j))
        .collect();
    Ok(CoxeterMatrix {
        size: idx.len(),
        labels,
    })
}

/// Connected components of the Coxeter graph, whose edges are the pairs with
/// m_ij ≥ 3 or ∞ (label 2 means the generators commute and stay unlinked).
/// Components are returned ordered by their smallest generator.
pub fn components(m: &CoxeterMatrix) -> Vec<GeneratorSubset> {
    let n = m.size();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..n {
                if !seen[j] && i != j && m.label(i, j) != Label::Finite(2) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        out.push(GeneratorSubset::new(comp));
    }
    out
}

/// The irreducible finite Coxeter families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::D => write!(f, "D"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::F4 => write!(f, "F4"),
            Family::H3 => write!(f, "H3"),
            Family::H4 => write!(f, "H4"),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// An irreducible finite Coxeter type: family, rank, and sorted exponents.
///
/// Construction validates the order identity Π(mᵢ + 1) = |Γ| against the
/// classification's group orders, so a transcribed exponent cannot slip by.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteType {
    family: Family,
    rank: usize,
    exponents: Vec<u64>,
}

impl FiniteType {
    /// Build the type for a (family, rank) pair from the embedded exponent
    /// tables. Panics on pairs outside the classification (e.g. rank-3 F4).
    pub fn new(family: Family, rank: usize) -> Self {
        let exponents: Vec<u64> = match family {
            Family::A => {
                assert!(rank >= 1, "A requires rank >= 1");
                (1..=rank as u64).collect()
            }
            Family::B => {
                assert!(rank >= 2, "B requires rank >= 2");
                (0..rank as u64).map(|i| 2 * i + 1).collect()
            }
            Family::D => {
                assert!(rank >= 4, "D requires rank >= 4");
                let mut e: Vec<u64> = (0..rank as u64 - 1).map(|i| 2 * i + 1).collect();
                e.push(rank as u64 - 1);
                e.sort_unstable();
                e
            }
            Family::E6 => {
                assert_eq!(rank, 6);
                vec![1, 4, 5, 7, 8, 11]
            }
            Family::E7 => {
                assert_eq!(rank, 7);
                vec![1, 5, 7, 9, 11, 13, 17]
            }
            Family::E8 => {
                assert_eq!(rank, 8);
                vec![1, 7, 11, 13, 17, 19, 23, 29]
            }
            Family::F4 => {
                assert_eq!(rank, 4);
                vec![1, 5, 7, 11]
            }
            Family::H3 => {
                assert_eq!(rank, 3);
                vec![1, 5, 9]
            }
            Family::H4 => {
                assert_eq!(rank, 4);
                vec![1, 11, 19, 29]
            }
            Family::I2(m) => {
                assert_eq!(rank, 2);
                assert!(m >= 3, "I2 requires label >= 3");
                vec![1, m as u64 - 1]
            }
        };
        let t = FiniteType {
            family,
            rank,
            exponents,
        };
        assert_eq!(
            t.exponents.iter().map(|&e| BigInt::from(e + 1)).product::<BigInt>(),
            t.order(),
            "exponent table inconsistent with the group order for {family:?} rank {rank}"
        );
        t
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Group order from the classification.
    pub fn order(&self) -> BigInt {
        let factorial = |k: usize| -> BigInt { (1..=k as u64).map(BigInt::from).product() };
        match self.family {
            Family::A => factorial(self.rank + 1),
            Family::B => (BigInt::one() << self.rank) * factorial(self.rank),
            Family::D => (BigInt::one() << (self.rank - 1)) * factorial(self.rank),
            Family::E6 => 51840.into(),
            Family::E7 => 2903040.into(),
            Family::E8 => 696729600.into(),
            Family::F4 => 1152.into(),
            Family::H3 => 120.into(),
            Family::H4 => 14400.into(),
            Family::I2(m) => (2 * m).into(),
        }
    }
}

/// Classify an irreducible matrix against the finite classification.
///
/// Returns `None` for everything infinite — affine and hyperbolic diagrams and
/// any matrix with an ∞ label. Reducible input is rejected; callers split via
/// [`components`] first.
pub fn classify_finite(m: &CoxeterMatrix) -> Result<Option<FiniteType>, Error> {
    let comps = components(m);
    if comps.len() != 1 {
        return Err(Error::ReducibleSystem {
            components: comps.len(),
        });
    }
    let n = m.size();
    // collect the (tree?) edge list; ∞ anywhere is immediately infinite
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            match m.label(i, j) {
                Label::Infinity => return Ok(None),
                Label::Finite(2) => {}
                Label::Finite(v) => edges.push((i, j, v)),
            }
        }
    }
    if n == 1 {
        return Ok(Some(FiniteType::new(Family::A, 1)));
    }
    if n == 2 {
        let v = edges[0].2;
        return Ok(Some(match v {
            3 => FiniteType::new(Family::A, 2),
            4 => FiniteType::new(Family::B, 2),
            _ => FiniteType::new(Family::I2(v), 2),
        }));
    }
    // rank ≥ 3: the diagram must be a tree (connected with n − 1 edges) and
    // labels ≥ 6 never occur in a finite diagram of rank ≥ 3
    if edges.len() != n - 1 || edges.iter().any(|&(_, _, v)| v >= 6) {
        return Ok(None);
    }
    let mut degree = vec![0usize; n];
    let mut adj = vec![Vec::new(); n];
    for &(i, j, v) in &edges {
        degree[i] += 1;
        degree[j] += 1;
        adj[i].push((j, v));
        adj[j].push((i, v));
    }
    if degree.iter().any(|&d| d >= 4) {
        return Ok(None);
    }
    let branches: Vec<usize> = (0..n).filter(|&i| degree[i] == 3).collect();
    let count_label = |w: u32| edges.iter().filter(|&&(_, _, v)| v == w).count();
    let (c4, c5) = (count_label(4), count_label(5));
    match branches.len() {
        0 => {
            // a path: read the label sequence from one end
            let start = (0..n).find(|&i| degree[i] == 1).expect("a path has ends");
            let mut seq = Vec::new();
            let mut prev = None;
            let mut cur = start;
            loop {
                let next = adj[cur].iter().find(|&&(j, _)| Some(j) != prev);
                match next {
                    None => break,
                    Some(&(j, v)) => {
                        seq.push(v);
                        prev = Some(cur);
                        cur = j;
                    }
                }
            }
            debug_assert_eq!(seq.len(), n - 1);
            let at_end = |w: u32| seq[0] == w || seq[n - 2] == w;
            Ok(match (c4, c5) {
                (0, 0) => Some(FiniteType::new(Family::A, n)),
                (1, 0) if at_end(4) => Some(FiniteType::new(Family::B, n)),
                (1, 0) if n == 4 && seq[1] == 4 => Some(FiniteType::new(Family::F4, 4)),
                (0, 1) if n == 3 && at_end(5) => Some(FiniteType::new(Family::H3, 3)),
                (0, 1) if n == 4 && at_end(5) => Some(FiniteType::new(Family::H4, 4)),
                _ => None,
            })
        }
        1 => {
            // one degree-3 node, all labels 3: D or E by sorted arm lengths
            if c4 + c5 != 0 {
                return Ok(None);
            }
            let b = branches[0];
            let mut arms: Vec<usize> = adj[b]
                .iter()
                .map(|&(first, _)| {
                    let mut len = 1;
                    let (mut prev, mut cur) = (b, first);
                    while let Some(&(j, _)) = adj[cur].iter().find(|&&(j, _)| j != prev) {
                        prev = cur;
                        cur = j;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            Ok(match (arms[0], arms[1], arms[2]) {
                (1, 1, _) => Some(FiniteType::new(Family::D, n)),
                (1, 2, 2) => Some(FiniteType::new(Family::E6, 6)),
                (1, 2, 3) => Some(FiniteType::new(Family::E7, 7)),
                (1, 2, 4) => Some(FiniteType::new(Family::E8, 8)),
                _ => None,
            })
        }
        _ => Ok(None),
    }
}

/// Growth polynomial of a finite Coxeter group, which may be reducible: the
/// bracket product Π [mᵢ + 1] over the exponents of all irreducible factors.
/// The empty factor list is the trivial group, with polynomial 1.
pub fn solomon_polynomial(factors: &[FiniteType]) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for t in factors {
        for &e in t.exponents() {
            let b = bracket(e as usize + 1).expect("exponent + 1 is at least 2");
            acc = &acc * &b;
        }
    }
    acc
}

/// Rank cap for subset enumeration; beyond this the power set is out of reach.
pub const SUBSET_RANK_LIMIT: usize = 25;

/// Classify the restriction of `m` to the generators in `mask`.
fn mask_is_finite(m: &CoxeterMatrix, mask: u32) -> bool {
    let t = GeneratorSubset::new((0..m.size()).filter(|&i| mask & (1 << i) != 0));
    let sub = restrict(m, &t).expect("mask indices are in range");
    components(&sub).into_iter().all(|c| {
        let piece = restrict(&sub, &c).expect("component indices are in range");
        classify_finite(&piece)
            .expect("components are irreducible")
            .is_some()
    })
}

/// All generator subsets T whose restricted system is finite.
///
/// Enumerates level by level, growing only finite subsets by one generator and
/// testing a candidate only when all its one-smaller subsets are finite — once
/// a subset is infinite no superset is ever touched (parabolic subgroups of
/// finite Coxeter groups are finite, so the family is downward closed).
/// The result is sorted by size, then lexicographically.
pub fn finite_subsets(m: &CoxeterMatrix) -> Result<Vec<GeneratorSubset>, Error> {
    let n = m.size();
    if n > SUBSET_RANK_LIMIT {
        return Err(Error::RankGuard {
            rank: n,
            limit: SUBSET_RANK_LIMIT,
        });
    }
    let mut out: Vec<u32> = vec![0];
    let mut level: Vec<u32> = vec![0];
    let mut prev: HashSet<u32> = level.iter().copied().collect();
    while !level.is_empty() {
        let mut next: Vec<u32> = Vec::new();
        let mut tested: HashSet<u32> = HashSet::new();
        for &mask in &level {
            for g in 0..n {
                let bit = 1u32 << g;
                if mask & bit != 0 {
                    continue;
                }
                let cand = mask | bit;
                if !tested.insert(cand) {
                    continue;
                }
                let closed_below =
                    (0..n).all(|h| cand & (1 << h) == 0 || prev.contains(&(cand & !(1 << h))));
                if closed_below && mask_is_finite(m, cand) {
                    next.push(cand);
                }
            }
        }
        out.extend(&next);
        prev = next.iter().copied().collect();
        level = next;
    }
    let mut subsets: Vec<GeneratorSubset> = out
        .into_iter()
        .map(|mask| GeneratorSubset::new((0..n).filter(|&i| mask & (1 << i) != 0)))
        .collect();
    subsets.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.indices().cmp(b.indices()))
    });
    Ok(subsets)
}

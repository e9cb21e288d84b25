//! Root-system data for a reductive group given as simple factors plus a
//! central torus: Cartan matrices per Bourbaki, coroot pairings, the
//! Weyl-invariant inner product, positive roots, root-lattice membership,
//! and classification of induced Dynkin subdiagrams.

use crate::zlinalg::{solve_rational, IntMatrix, RatVector};
use crate::{Error, Int, Rat};
use num_traits::{Signed, Zero};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

/// Series of a simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    /// Validates the rank, with canonical substitutes named for the
    /// low-rank coincidences (C₂ ≅ B₂, D₃ ≅ A₃, ...).
    pub fn check_rank(self, rank: usize) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        match (self, rank) {
            (Series::A, r) if r >= 1 => Ok(()),
            (Series::B, r) if r >= 2 => Ok(()),
            (Series::B, 1) => bad("B1 coincides with A1; enter it as A1".into()),
            (Series::C, r) if r >= 3 => Ok(()),
            (Series::C, 2) => bad("C2 coincides with B2; enter it as B2".into()),
            (Series::C, 1) => bad("C1 coincides with A1; enter it as A1".into()),
            (Series::D, r) if r >= 4 => Ok(()),
            (Series::D, 3) => bad("D3 coincides with A3; enter it as A3".into()),
            (Series::D, 2) => bad("D2 coincides with A1xA1; enter it as two A1 factors".into()),
            (Series::E, 6..=8) => Ok(()),
            (Series::F, 4) => Ok(()),
            (Series::G, 2) => Ok(()),
            (s, r) => bad(format!("invalid rank {r} for series {}", s.letter())),
        }
    }
}

/// A connected reductive group: ordered simple factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<(Series, usize)>,
    pub torus_rank: usize,
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(s, r)| format!("{}{}", s.letter(), r))
            .collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            return write!(f, "T0");
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// Index into the concatenated list Π of simple roots.
pub type SimpleRootIndex = usize;

/// A weight of the maximal torus, stored as fundamental-weight coefficients
/// per factor (Bourbaki order) followed by torus-character coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Int>,
}

impl Weight {
    pub fn new(coords: Vec<Int>) -> Self {
        Weight { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| Int::from(c)).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Int::zero(); n] }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn double(&self) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * Int::from(2)).collect())
    }

    /// Halves the weight when every coordinate is even.
    pub fn try_halve(&self) -> Option<Weight> {
        let two = Int::from(2);
        if self.coords.iter().any(|c| !(c % &two).is_zero()) {
            return None;
        }
        Some(Weight::new(self.coords.iter().map(|c| c / &two).collect()))
    }
}

/// Lengths of the simple roots, as half squared lengths: 1 for short roots,
/// 2 for long roots, 3 for the long root of G₂ (short root² = 2 throughout).
fn root_half_lengths(series: Series, rank: usize) -> Vec<i64> {
    match series {
        Series::A | Series::D | Series::E => vec![1; rank],
        Series::B => {
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            d
        }
        Series::C => {
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            d
        }
        Series::F => vec![2, 2, 1, 1],
        Series::G => vec![1, 3],
    }
}

/// Edges of the Dynkin diagram in Bourbaki labeling (0-indexed).
fn diagram_edges(series: Series, rank: usize) -> Vec<(usize, usize)> {
    match series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect()
        }
        Series::D => {
            let mut e: Vec<(usize, usize)> = (0..rank - 3).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 2));
            e.push((rank - 3, rank - 1));
            e
        }
        Series::E => {
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..rank - 1 {
                e.push((i, i + 1));
            }
            e
        }
    }
}

/// Bourbaki Cartan matrix of a simple factor: entry (i, j) is ⟨α_i^∨, α_j⟩.
pub fn cartan_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let d = root_half_lengths(series, rank);
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in diagram_edges(series, rank) {
        a[i][j] = -(d[i].max(d[j])) / d[i];
        a[j][i] = -(d[i].max(d[j])) / d[j];
    }
    a
}

/// Root system of a reductive group, immutable after `build`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: GroupSpec,
    n_weights: usize,
    n_simple: usize,
    factor_offsets: Vec<usize>,
    simple_roots: Vec<Weight>,
    cartan: IntMatrix,
    cartan_i64: Vec<Vec<i64>>,

    ip_gram: Vec<Vec<Rat>>,
}

/// Builds the root system for a group specification.
pub fn build(spec: GroupSpec) -> Result<RootSystem, Error> {
    for &(series, rank) in &spec.factors {
        series.check_rank(rank)?;
    }
    let n_simple: usize = spec.factors.iter().map(|&(_, r)| r).sum();
    let n_weights = n_simple + spec.torus_rank;
    let mut factor_offsets = Vec::with_capacity(spec.factors.len());
    let mut offset = 0;
    for &(_, r) in &spec.factors {
        factor_offsets.push(offset);
        offset += r;
    }

    let mut cartan_i64 = vec![vec![0i64; n_simple]; n_simple];

    for (f, &(series, rank)) in spec.factors.iter().enumerate() {
        let block = cartan_matrix(series, rank);
        let o = factor_offsets[f];
        for i in 0..rank {
            for j in 0..rank {
                cartan_i64[o + i][o + j] = block[i][j];
            }
        }
    }
    let cartan = IntMatrix::from_rows(&cartan_i64);

    let simple_roots = (0..n_simple)
        .map(|j| {
            let mut coords = vec![Int::zero(); n_weights];
            for (i, c) in coords.iter_mut().enumerate().take(n_simple) {
                *c = Int::from(cartan_i64[i][j]);
            }
            Weight::new(coords)
        })
        .collect();

    // Gram matrix of the invariant inner product in weight coordinates.
    // Per factor, (ϖ_i, ϖ_j) = (A⁻¹)_{ji} d_j; the torus block is the
    // standard dot product; cross blocks vanish.
    let mut ip_gram = vec![vec![Rat::zero(); n_weights]; n_weights];
    for (f, &(series, rank)) in spec.factors.iter().enumerate() {
        let block = cartan_matrix(series, rank);
        let d = root_half_lengths(series, rank);
        let o = factor_offsets[f];
        let rows: Vec<RatVector> = block
            .iter()
            .map(|r| RatVector::from_i64(r))
            .collect();
        // Columns of A⁻¹ via exact solves A x = e_k.
        let mut inv_cols = Vec::with_capacity(rank);
        for k in 0..rank {
            let mut e = vec![0i64; rank];
            e[k] = 1;
            let col = solve_rational(&rows, &RatVector::from_i64(&e))
                .expect("square system")
                .expect("Cartan matrix is invertible");
            inv_cols.push(col);
        }
        for i in 0..rank {
            for j in 0..rank {
                // (A⁻¹)_{ji} is row j of column i.
                ip_gram[o + i][o + j] =
                    inv_cols[i].get(j) * Rat::from_integer(Int::from(d[j]));
            }
        }
    }
    for t in n_simple..n_weights {
        ip_gram[t][t] = Rat::from_integer(Int::from(1));
    }

    Ok(RootSystem {
        spec,
        n_weights,
        n_simple,
        factor_offsets,
        simple_roots,
        cartan,
        cartan_i64,

        ip_gram,
    })
}

impl RootSystem {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// Total coordinate count: sum of factor ranks plus the torus rank.
    pub fn n_weights(&self) -> usize {
        self.n_weights
    }

    /// Number of simple roots.
    pub fn n_simple(&self) -> usize {
        self.n_simple
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, i: SimpleRootIndex) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    /// ⟨α_i^∨, α_j⟩, 0 across factors.
    pub fn cartan_entry(&self, i: SimpleRootIndex, j: SimpleRootIndex) -> i64 {
        self.cartan_i64[i][j]
    }

    /// ⟨α_i^∨, λ⟩: the fundamental-weight coefficient of λ at position i.
    pub fn coroot_pairing(&self, i: SimpleRootIndex, lambda: &Weight) -> Int {
        lambda.coords[i].clone()
    }

    /// True iff all fundamental coefficients are nonnegative.
    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords[..self.n_simple].iter().all(|c| !c.is_negative())
    }

    /// The Weyl-invariant inner product, normalized per factor so that short
    /// roots have squared length 2. Only signs and zero tests are contractual.
    pub fn inner_product(&self, lambda: &Weight, mu: &Weight) -> Rat {
        assert_eq!(lambda.len(), self.n_weights);
        assert_eq!(mu.len(), self.n_weights);
        let mut acc = Rat::zero();
        for (i, li) in lambda.coords.iter().enumerate() {
            if li.is_zero() {
                continue;
            }
            let li = Rat::from_integer(li.clone());
            for (j, mj) in mu.coords.iter().enumerate() {
                if mj.is_zero() || self.ip_gram[i][j].is_zero() {
                    continue;
                }
                acc += &li * &self.ip_gram[i][j] * Rat::from_integer(mj.clone());
            }
        }
        acc
    }

    /// All positive roots, by inductive closure of Π under root addition.
    pub fn positive_roots(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        for (f, &(_, rank)) in self.spec.factors.iter().enumerate() {
            let o = self.factor_offsets[f];
            let cartan: Vec<Vec<i64>> = (o..o + rank)
                .map(|i| (o..o + rank).map(|j| self.cartan_i64[i][j]).collect())
                .collect();
            for root in positive_roots_of_factor(&cartan) {
                // Convert root coordinates to weight coordinates: c = A·n.
                let mut coords = vec![Int::zero(); self.n_weights];
                for i in 0..rank {
                    let mut v = 0i64;
                    for (j, n) in root.iter().enumerate() {
                        v += cartan[i][j] * n;
                    }
                    coords[o + i] = Int::from(v);
                }
                out.push(Weight::new(coords));
            }
        }
        out
    }

    /// Coefficients n with λ = Σ n_i α_i, n integral, or `None` (the torus
    /// part of λ must vanish and the per-factor systems must solve in ℤ).
    pub fn in_root_lattice(&self, lambda: &Weight) -> Option<Vec<Int>> {
        assert_eq!(lambda.len(), self.n_weights);
        if lambda.coords[self.n_simple..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = vec![Int::zero(); self.n_simple];
        for (f, &(_, rank)) in self.spec.factors.iter().enumerate() {
            let o = self.factor_offsets[f];
            let rows: Vec<RatVector> = (o..o + rank)
                .map(|i| {
                    RatVector::new(
                        (o..o + rank)
                            .map(|j| Rat::from_integer(Int::from(self.cartan_i64[i][j])))
                            .collect(),
                    )
                })
                .collect();
            let rhs = RatVector::new(
                (o..o + rank)
                    .map(|i| Rat::from_integer(lambda.coords[i].clone()))
                    .collect(),
            );
            let sol = solve_rational(&rows, &rhs)
                .expect("square system")
                .expect("Cartan matrix is invertible");
            for (k, v) in sol.entries().iter().enumerate() {
                if !v.is_integer() {
                    return None;
                }
                out[o + k] = v.to_integer();
            }
        }
        Some(out)
    }

    /// The weight Σ coeffs_i · α_i.
    pub fn root_combination(&self, coeffs: &[i64]) -> Weight {
        assert_eq!(coeffs.len(), self.n_simple);
        let mut w = Weight::zero(self.n_weights);
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (wc, rc) in w.coords.iter_mut().zip(&self.simple_roots[i].coords) {
                *wc += rc * Int::from(c);
            }
        }
        w
    }

    /// True iff the two simple roots are orthogonal (equivalently, not
    /// adjacent in the Dynkin diagram, or in different factors).
    pub fn orthogonal_simple(&self, i: SimpleRootIndex, j: SimpleRootIndex) -> bool {
        i != j && self.cartan_i64[i][j] == 0
    }

    /// Classification of the Dynkin subdiagram induced on `s`.
    pub fn subdiagram_type(&self, s: &BTreeSet<SimpleRootIndex>) -> SubdiagramType {
        assert!(!s.is_empty(), "subdiagram of the empty set");
        let nodes: Vec<usize> = s.iter().copied().collect();
        if nodes.len() == 2 && self.orthogonal_simple(nodes[0], nodes[1]) {
            return SubdiagramType::A1xA1(nodes[0], nodes[1]);
        }
        if !self.is_connected(&nodes) {
            return SubdiagramType::Other;
        }
        match self.subdiagram_labelings(s) {
            Some((series, labelings)) => SubdiagramType::Connected {
                series,
                rank: nodes.len(),
                labeling: labelings[0].clone(),
            },
            None => SubdiagramType::Other,
        }
    }

    fn is_connected(&self, nodes: &[usize]) -> bool {
        if nodes.is_empty() {
            return false;
        }
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        queue.push_back(nodes[0]);
        seen.insert(nodes[0]);
        while let Some(v) = queue.pop_front() {
            for &w in &set {
                if !seen.contains(&w) && self.cartan_i64[v][w] != 0 {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen.len() == nodes.len()
    }

    /// All Bourbaki labelings of a connected subdiagram, lexicographically
    /// sorted by the sequence of original indices; `None` when the induced
    /// diagram matches no series. Several labelings arise from diagram
    /// automorphisms (A reversal, D leaf swap, D₄ triality, E₆ reversal).
    pub fn subdiagram_labelings(
        &self,
        s: &BTreeSet<SimpleRootIndex>,
    ) -> Option<(Series, Vec<Vec<SimpleRootIndex>>)> {
        let nodes: Vec<usize> = s.iter().copied().collect();
        let rank = nodes.len();
        if !self.is_connected(&nodes) {
            return None;
        }
        for series in [Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G]
        {
            if series.check_rank(rank).is_err() {
                continue;
            }
            let target = cartan_matrix(series, rank);
            let mut labelings = Vec::new();
            let mut current: Vec<usize> = Vec::with_capacity(rank);
            let mut used = vec![false; rank];
            self.search_labelings(&nodes, &target, &mut current, &mut used, &mut labelings);
            if !labelings.is_empty() {
                return Some((series, labelings));
            }
        }
        None
    }

    fn search_labelings(
        &self,
        nodes: &[usize],
        target: &[Vec<i64>],
        current: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = current.len();
        if k == nodes.len() {
            out.push(current.clone());
            return;
        }
        for (idx, &v) in nodes.iter().enumerate() {
            if used[idx] {
                continue;
            }
            let ok = current.iter().enumerate().all(|(j, &w)| {
                self.cartan_i64[v][w] == target[k][j] && self.cartan_i64[w][v] == target[j][k]
            });
            if ok {
                used[idx] = true;
                current.push(v);
                self.search_labelings(nodes, target, current, used, out);
                current.pop();
                used[idx] = false;
            }
        }
    }

    /// Enumerates all connected subsets of the Dynkin diagram by BFS growth.
    pub fn connected_subsets(&self) -> Vec<BTreeSet<SimpleRootIndex>> {
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();
        for i in 0..self.n_simple {
            let s: BTreeSet<usize> = [i].into();
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        let mut out = Vec::new();
        while let Some(s) = queue.pop_front() {
            out.push(s.clone());
            for v in 0..self.n_simple {
                if s.contains(&v) {
                    continue;
                }
                if s.iter().any(|&w| self.cartan_i64[v][w] != 0) {
                    let mut t = s.clone();
                    t.insert(v);
                    if seen.insert(t.clone()) {
                        queue.push_back(t);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

/// Positive roots of one simple factor, in simple-root coordinates.
/// Standard inductive construction by height using root strings.
fn positive_roots_of_factor(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    for r in &level {
        all.insert(r.clone());
    }
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for gamma in &level {
            for i in 0..rank {
                // ⟨α_i^∨, γ⟩
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * gamma[j]).sum();
                // p = max k ≥ 0 with γ − k·α_i a root.
                let mut p = 0i64;
                loop {
                    let mut down = gamma.clone();
                    down[i] -= p + 1;
                    if down[i] >= 0 && all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = gamma.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        level = next;
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort();
    out
}

/// Result of classifying an induced Dynkin subdiagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubdiagramType {
    /// Connected of the given series, with a canonical Bourbaki labeling
    /// (in B the last root is short, in C the last root is long, A uses the
    /// orientation starting from the lowest original index).
    Connected { series: Series, rank: usize, labeling: Vec<SimpleRootIndex> },
    /// Two orthogonal simple roots.
    A1xA1(SimpleRootIndex, SimpleRootIndex),
    /// Anything else (disconnected with three or more nodes).
    Other,
}

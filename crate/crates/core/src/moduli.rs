//! Admissible pairs and sets, maximal admissible subsets (the irreducible
//! components of the moduli scheme), deviant roots, tangent-space weights,
//! and assembly of the final report with verdict flags.

use crate::cones::{cone_equal, saturation_witness, PolyCone};
use crate::rootsys::{self, GroupSpec, SimpleRootIndex, Weight};
use crate::spherical::{
    gamma_context, gamma_distinguished, overline_sigma, sigma_gamma, ColorPair, Functional,
    GammaContext, SphericalRoot,
};
use crate::zlinalg::{solve_rational, RatVector};
use crate::{Error, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Symmetric graph on the elements of Σ(Γ); an edge means the pair is
/// admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityGraph {
    pub n_vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl AdmissibilityGraph {
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n_vertices * self.n_vertices.saturating_sub(1) / 2
    }
}

/// A maximal admissible subset of Σ(Γ), dressed with its dimension and the
/// free generators σ̄ of the root monoid of the corresponding variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub roots: Vec<usize>,
    pub dimension: usize,
    pub root_monoid_generators: Vec<Weight>,
}

/// Admissibility of a pair of distinct compatible spherical roots: whenever
/// one of them is a simple root α, each functional of its color pair must
/// take value ≤ 1 on the other root, with equality permitted only when the
/// other root is a simple root β and the functional belongs to the pair of β.
pub fn admissible_pair(
    ctx: &GammaContext,
    a: (&SphericalRoot, Option<&ColorPair>),
    b: (&SphericalRoot, Option<&ColorPair>),
) -> Result<bool, Error> {
    let one = Rat::one();
    for ((root, pair), (other, other_pair)) in [(a, b), (b, a)] {
        if !root.is_simple() {
            continue;
        }
        let cp = pair.ok_or_else(|| {
            Error::Internal("missing color-pair witness for a simple spherical root".into())
        })?;
        let other_vec = ctx
            .lattice_vector(&other.sigma)?
            .ok_or_else(|| Error::Internal("compatible root outside the lattice".into()))?;
        for rho in [&cp.rho_plus, &cp.rho_minus] {
            let v = rho.dot(&other_vec);
            if v > one {
                return Ok(false);
            }
            if v == one {
                let matched = other.is_simple()
                    && other_pair.is_some_and(|ocp| ocp.contains(rho));
                if !matched {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The admissibility graph over the canonical Σ(Γ) order.
pub fn admissibility_graph(
    ctx: &GammaContext,
    sigma: &[(SphericalRoot, Option<ColorPair>)],
) -> Result<AdmissibilityGraph, Error> {
    let mut edges = BTreeSet::new();
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            let a = (&sigma[i].0, sigma[i].1.as_ref());
            let b = (&sigma[j].0, sigma[j].1.as_ref());
            if admissible_pair(ctx, a, b)? {
                edges.insert((i, j));
            }
        }
    }
    Ok(AdmissibilityGraph { n_vertices: sigma.len(), edges })
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the vertex of P ∪ X with the most neighbors in P; ties go to
    // the lowest index, keeping the traversal deterministic.
    let pivot = {
        let mut best = usize::MAX;
        let mut best_count = 0u32;
        let mut pool = p | x;
        while pool != 0 {
            let v = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let count = (p & adj[v]).count_ones();
            if best == usize::MAX || count > best_count {
                best = v;
                best_count = count;
            }
        }
        best
    };
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        candidates &= !bit;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// All maximal cliques of the graph, as sorted vertex lists in canonical
/// order (size descending, then lexicographic). The empty graph yields the
/// single empty clique.
pub fn maximal_cliques(graph: &AdmissibilityGraph) -> Vec<Vec<usize>> {
    let n = graph.n_vertices;
    assert!(n <= 64, "clique enumeration limited to 64 vertices");
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut adj = vec![0u64; n];
    for &(i, j) in &graph.edges {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let mut raw = Vec::new();
    bron_kerbosch(&adj, 0, (1u64 << n) - 1, 0, &mut raw);
    let mut cliques: Vec<Vec<usize>> = raw
        .into_iter()
        .map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
        .collect();
    cliques.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    cliques
}

/// The maximal admissible subsets, dressed into components with the σ̄ of
/// their roots as the free root-monoid generators.
pub fn maximal_admissible_sets(
    graph: &AdmissibilityGraph,
    sigma_bar: &[Weight],
) -> Result<Vec<Component>, Error> {
    assert_eq!(graph.n_vertices, sigma_bar.len());
    let mut out = Vec::new();
    for roots in maximal_cliques(graph) {
        let gens: Vec<Weight> = roots.iter().map(|&i| sigma_bar[i].clone()).collect();
        let distinct: BTreeSet<&Weight> = gens.iter().collect();
        if distinct.len() != gens.len() {
            return Err(Error::Internal(
                "root-monoid generators of a component collide".into(),
            ));
        }
        out.push(Component { dimension: roots.len(), roots, root_monoid_generators: gens });
    }
    Ok(out)
}

/// Dev(Γ): the simple roots α ∈ ℤΓ admitting two distinct rays ϱ₁, ϱ₂ of K
/// with ⟨ϱ₁,α⟩ = ⟨ϱ₂,α⟩ = 1, every other ray nonpositive on α,
/// ι(α^∨) ∈ ℚ⁺ϱ₁ + ℚ⁺ϱ₂, ι(α^∨) ∉ {2ϱ₁, 2ϱ₂}, and ι(α^∨) ≠ ϱ₁ + ϱ₂.
/// The pair search is exhaustive over the rays.
pub fn deviant_roots(ctx: &GammaContext) -> Result<BTreeSet<SimpleRootIndex>, Error> {
    let mut out = BTreeSet::new();
    let one = Rat::one();
    let two = Rat::from_integer(Int::from(2));
    for alpha in 0..ctx.rs.n_simple() {
        let Some(alpha_vec) = ctx.lattice_vector(ctx.rs.simple_root(alpha))? else {
            continue;
        };
        let ia = &ctx.iota[alpha];
        let values: Vec<Rat> = ctx.k1.iter().map(|q| q.dot(&alpha_vec)).collect();
        'pairs: for i in 0..ctx.k1.len() {
            for j in i + 1..ctx.k1.len() {
                if values[i] != one || values[j] != one {
                    continue;
                }
                let others_ok = (0..ctx.k1.len())
                    .filter(|&k| k != i && k != j)
                    .all(|k| !values[k].is_positive());
                if !others_ok {
                    continue;
                }
                // ι(α^∨) = a·ϱ_i + b·ϱ_j with a, b ≥ 0; the rays are
                // linearly independent, so the solution is unique.
                let rows: Vec<RatVector> = (0..ctx.lattice.rank())
                    .map(|c| {
                        RatVector::new(vec![
                            ctx.k1[i].get(c).clone(),
                            ctx.k1[j].get(c).clone(),
                        ])
                    })
                    .collect();
                let Some(coeffs) = solve_rational(&rows, ia)? else {
                    continue;
                };
                if coeffs.get(0).is_negative() || coeffs.get(1).is_negative() {
                    continue;
                }
                if *ia == ctx.k1[i].scale(&two) || *ia == ctx.k1[j].scale(&two) {
                    continue;
                }
                if *ia == ctx.k1[i].add(&ctx.k1[j]) {
                    continue;
                }
                out.insert(alpha);
                break 'pairs;
            }
        }
    }
    Ok(out)
}

/// Φ = Σ̄(Γ) ∪ Dev(Γ) as a deduplicated weight list, plus a flag recording
/// whether the two parts overlapped.
pub fn tangent_weights(sigma_bar: &[Weight], dev: &[Weight]) -> (Vec<Weight>, bool) {
    let mut set: BTreeSet<Weight> = BTreeSet::new();
    let mut total = 0usize;
    for w in sigma_bar.iter().chain(dev) {
        total += 1;
        set.insert(w.clone());
    }
    let overlap = set.len() != total;
    (set.into_iter().collect(), overlap)
}

/// Whether Γ is G-saturated, i.e. the cone of Γ equals the dominant cone cut
/// to the span of Λ (equivalent to Γ = ℤΓ ∩ Λ⁺ for saturated Γ).
pub fn g_saturated(ctx: &GammaContext) -> Result<bool, Error> {
    let dominant_in_lambda = PolyCone::from_inequalities(ctx.lattice.rank(), &ctx.iota)?;
    cone_equal(&ctx.gamma_cone, &dominant_in_lambda)
}

/// Tri-state verdict for claims the theory only decides in licensed cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

/// One entry of the Σ(Γ) listing.
#[derive(Debug, Clone)]
pub struct SigmaEntry {
    pub root: SphericalRoot,
    pub color_pair: Option<ColorPair>,
    pub distinguished: bool,
    pub sigma_bar: Weight,
}

/// The full output package of `analyze`.
#[derive(Debug, Clone)]
pub struct ModuliReport {
    pub group: GroupSpec,
    pub raw_generators: Vec<Weight>,
    pub generators: Vec<Weight>,
    pub saturated: bool,
    pub saturation_assumed: bool,
    pub g_saturated: Option<bool>,
    pub pi_p: BTreeSet<SimpleRootIndex>,
    pub lattice_basis: Vec<Vec<Int>>,
    pub k1: Vec<Functional>,
    pub iota: Vec<Functional>,
    pub sigma: Vec<SigmaEntry>,
    pub graph: AdmissibilityGraph,
    pub components: Vec<Component>,
    pub dev: BTreeSet<SimpleRootIndex>,
    pub sigma_bar: Vec<Weight>,
    pub phi: Vec<Weight>,
    pub phi_overlap: bool,
    pub irreducible: bool,
    pub is_affine_space: Verdict,
    pub nonreduced_point: bool,
    pub tangent_dimension: usize,
    pub max_component_dimension: usize,
}

/// Options of the analysis pipeline.
#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Skip the saturation check and trust the input.
    pub assume_saturated: bool,
    /// Also decide whether Γ is G-saturated.
    pub check_g_saturated: bool,
}

fn unimodular_in_lattice(ctx: &GammaContext) -> Result<bool, Error> {
    // E is a basis of Λ iff |E| = rank Λ; the determinant in the Λ-basis is
    // then ±1 by construction, verified here as a consistency check.
    let rank = ctx.lattice.rank();
    if ctx.generators.len() != rank {
        return Ok(false);
    }
    let rows: Vec<RatVector> = ctx
        .gen_lattice_coords
        .iter()
        .map(|c| RatVector::from_ints(c))
        .collect();
    let det = determinant(&rows);
    if det.clone().abs() != Rat::one() {
        return Err(Error::Internal(
            "generator matrix of a spanning set of equal rank is not unimodular".into(),
        ));
    }
    Ok(true)
}

fn determinant(rows: &[RatVector]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let v = &m[r][c] - &f * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    det
}

/// Full pipeline: root system, indecomposable generators, Λ, Π^p, K, Σ(Γ)
/// with color pairs, admissibility graph, components, Dev(Γ), Φ, and the
/// licensed verdict flags.
pub fn analyze(
    spec: GroupSpec,
    gens: &[Weight],
    options: &AnalyzeOptions,
) -> Result<ModuliReport, Error> {
    let rs = rootsys::build(spec.clone())?;
    let ctx = gamma_context(rs, gens)?;

    if !options.assume_saturated {
        let ambient: Vec<Vec<Int>> =
            ctx.generators.iter().map(|w| w.coords.clone()).collect();
        if let Some(witness) = saturation_witness(&ambient, &ctx.lattice)? {
            return Err(Error::NotSaturated { witness });
        }
    }

    let sigma = sigma_gamma(&ctx)?;
    let mut entries = Vec::with_capacity(sigma.len());
    for (root, pair) in &sigma {
        let distinguished = gamma_distinguished(&ctx, root, pair.as_ref())?;
        let bar = overline_sigma(&ctx, root, pair.as_ref())?;
        entries.push(SigmaEntry {
            root: root.clone(),
            color_pair: pair.clone(),
            distinguished,
            sigma_bar: bar,
        });
    }
    let sigma_bar: Vec<Weight> = entries.iter().map(|e| e.sigma_bar.clone()).collect();

    let graph = admissibility_graph(&ctx, &sigma)?;
    let components = maximal_admissible_sets(&graph, &sigma_bar)?;
    let dev = deviant_roots(&ctx)?;
    let dev_weights: Vec<Weight> =
        dev.iter().map(|&a| ctx.rs.simple_root(a).clone()).collect();
    let (phi, phi_overlap) = tangent_weights(&sigma_bar, &dev_weights);

    let g_sat = if options.check_g_saturated { Some(g_saturated(&ctx)?) } else { None };

    let irreducible = components.len() == 1;
    let nonreduced_point = sigma.is_empty() && !dev.is_empty();
    // Licensed verdicts only: reducible schemes and non-reduced points are
    // never affine spaces; irreducible with Dev = ∅ always is; the remaining
    // case (deviant roots alongside spherical roots) stays undetermined.
    let is_affine_space = if !irreducible || nonreduced_point {
        Verdict::No
    } else if dev.is_empty() {
        Verdict::Yes
    } else {
        Verdict::Undetermined
    };
    let tangent_dimension = phi.len();
    let max_component_dimension =
        components.iter().map(|c| c.dimension).max().unwrap_or(0);

    // Consistency checks licensed by the theory; failures are internal bugs.
    if irreducible != graph.is_complete() {
        return Err(Error::Internal(
            "irreducibility must coincide with completeness of the graph".into(),
        ));
    }
    if g_sat == Some(true) && (!irreducible || !dev.is_empty()) {
        return Err(Error::Internal(
            "a G-saturated monoid must give one component and no deviant roots".into(),
        ));
    }
    if unimodular_in_lattice(&ctx)? && !dev.is_empty() {
        return Err(Error::Internal(
            "a free monoid must have no deviant roots".into(),
        ));
    }
    if tangent_dimension < max_component_dimension {
        return Err(Error::Internal(
            "tangent dimension below a component dimension".into(),
        ));
    }

    Ok(ModuliReport {
        group: spec,
        raw_generators: gens.to_vec(),
        generators: ctx.generators.clone(),
        saturated: true,
        saturation_assumed: options.assume_saturated,
        g_saturated: g_sat,
        pi_p: ctx.pi_p.clone(),
        lattice_basis: ctx.lattice.basis().to_vec(),
        k1: ctx.k1.clone(),
        iota: ctx.iota.clone(),
        sigma: entries,
        graph,
        components,
        dev,
        sigma_bar,
        phi,
        phi_overlap,
        irreducible,
        is_affine_space,
        nonreduced_point,
        tangent_dimension,
        max_component_dimension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Series;

    fn weights(gens: &[&[i64]]) -> Vec<Weight> {
        gens.iter().map(|g| Weight::from_i64(g)).collect()
    }

    fn run(factors: &[(Series, usize)], torus: usize, gens: &[&[i64]]) -> ModuliReport {
        analyze(
            GroupSpec { factors: factors.to_vec(), torus_rank: torus },
            &weights(gens),
            &AnalyzeOptions { assume_saturated: false, check_g_saturated: true },
        )
        .unwrap()
    }

    #[test]
    fn sl3_reducible_two_lines() {
        let r = run(&[(Series::A, 2)], 0, &[&[3, 0], &[1, 1]]);
        assert!(r.pi_p.is_empty());
        assert_eq!(r.sigma.len(), 2);
        assert!(r.graph.edges.is_empty());
        assert_eq!(r.components.len(), 2);
        assert!(r.components.iter().all(|c| c.dimension == 1));
        assert!(r.dev.is_empty());
        assert_eq!(r.phi.len(), 2);
        assert!(!r.irreducible);
        assert_eq!(r.is_affine_space, Verdict::No);
        assert!(!r.nonreduced_point);
        assert_eq!(r.g_saturated, Some(false));
        assert_eq!(r.tangent_dimension, 2);
        assert_eq!(r.max_component_dimension, 1);
    }

    #[test]
    fn sl2_sl2_reducible() {
        let r = run(&[(Series::A, 1), (Series::A, 1)], 0, &[&[2, 0], &[2, 2]]);
        assert_eq!(r.sigma.len(), 2);
        assert_eq!(r.components.len(), 2);
        assert!(r.dev.is_empty());
    }

    #[test]
    fn g_saturated_rank_one() {
        // SL₂ with Γ = ⟨2ϖ₁⟩: ℚΛ ∩ dominant = ℚ⁺·2ϖ₁, so Γ is G-saturated.
        let r = run(&[(Series::A, 1)], 0, &[&[2]]);
        assert_eq!(r.g_saturated, Some(true));
        assert!(r.irreducible);
        assert_eq!(r.is_affine_space, Verdict::Yes);
        assert_eq!(r.components[0].dimension, 1);
        // σ̄ = 2α for the distinguished root.
        assert_eq!(r.sigma_bar, vec![Weight::from_i64(&[4])]);
        assert_eq!(r.phi, vec![Weight::from_i64(&[4])]);
    }

    #[test]
    fn full_dominant_monoid_is_g_saturated() {
        let r = run(&[(Series::A, 2)], 0, &[&[1, 0], &[0, 1]]);
        assert_eq!(r.g_saturated, Some(true));
        assert!(r.irreducible);
        assert!(r.dev.is_empty());
        assert_eq!(r.is_affine_space, Verdict::Yes);
        assert_eq!(r.tangent_dimension, r.max_component_dimension);
    }

    #[test]
    fn zero_monoid_single_point() {
        let r = run(&[(Series::B, 2)], 0, &[&[0, 0]]);
        assert!(r.sigma.is_empty());
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].dimension, 0);
        assert!(r.dev.is_empty());
        assert!(r.irreducible);
        assert!(!r.nonreduced_point);
        assert_eq!(r.is_affine_space, Verdict::Yes);
        assert_eq!(r.tangent_dimension, 0);
    }

    #[test]
    fn nonreduced_point_example() {
        // SL₄ with Γ = ⟨ϖ₂+ϖ₃, 2ϖ₁+2ϖ₂+2ϖ₃, 2ϖ₁+2ϖ₂+3ϖ₃, 4ϖ₁+4ϖ₂+7ϖ₃⟩.
        let r = run(
            &[(Series::A, 3)],
            0,
            &[&[0, 1, 1], &[2, 2, 2], &[2, 2, 3], &[4, 4, 7]],
        );
        // λ₃ = (λ₂+λ₄)/3 is decomposable in the cone but not the monoid:
        // it stays an indecomposable generator.
        assert_eq!(r.generators.len(), 4);
        assert!(r.sigma.is_empty());
        assert_eq!(r.dev, [0].into());
        assert_eq!(r.phi.len(), 1);
        assert_eq!(r.phi[0], Weight::from_i64(&[2, -1, 0]));
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.components[0].dimension, 0);
        assert!(r.nonreduced_point);
        assert_eq!(r.tangent_dimension, 1);
        assert_eq!(r.max_component_dimension, 0);
    }

    #[test]
    fn non_dominant_gen_rejected() {
        let err = analyze(
            GroupSpec { factors: vec![(Series::A, 2)], torus_rank: 0 },
            &weights(&[&[-1, 0]]),
            &AnalyzeOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, Error::NonDominant { index: 0 });
    }

    #[test]
    fn unsaturated_rejected_without_override() {
        let spec = GroupSpec { factors: vec![], torus_rank: 1 };
        let gens = weights(&[&[2], &[3]]);
        let err = analyze(spec.clone(), &gens, &AnalyzeOptions::default()).unwrap_err();
        match err {
            Error::NotSaturated { witness } => assert_eq!(witness, vec![Int::from(1)]),
            other => panic!("unexpected error {other:?}"),
        }
        let r = analyze(
            spec,
            &gens,
            &AnalyzeOptions { assume_saturated: true, check_g_saturated: false },
        )
        .unwrap();
        assert!(r.saturation_assumed);
    }

    #[test]
    fn cliques_brute_force_small() {
        // Pentagon: maximal cliques are the five edges.
        let edges: BTreeSet<(usize, usize)> =
            [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)].into();
        let g = AdmissibilityGraph { n_vertices: 5, edges };
        let cliques = maximal_cliques(&g);
        assert_eq!(cliques.len(), 5);
        assert!(cliques.iter().all(|c| c.len() == 2));
        // Complete graph: a single clique with everything.
        let mut edges = BTreeSet::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.insert((i, j));
            }
        }
        let g = AdmissibilityGraph { n_vertices: 4, edges };
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2, 3]]);
        // Empty vertex set: one empty clique.
        let g = AdmissibilityGraph { n_vertices: 0, edges: BTreeSet::new() };
        assert_eq!(maximal_cliques(&g), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn tangent_weights_dedupe() {
        let a = Weight::from_i64(&[1, 0]);
        let b = Weight::from_i64(&[0, 1]);
        let (phi, overlap) = tangent_weights(&[a.clone(), b.clone()], std::slice::from_ref(&a));
        assert!(overlap);
        assert_eq!(phi, vec![b, a]);
    }
}

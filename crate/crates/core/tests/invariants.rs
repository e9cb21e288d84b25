//! Cross-cutting invariants of the classification and compatibility layers,
//! checked over whole families of groups and randomized monoids.

use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sphmod::moduli::{analyze, maximal_cliques, AnalyzeOptions};
use sphmod::rootsys::{self, GroupSpec, RootSystem, Series, Weight};
use sphmod::spherical::{
    compatible_with_lattice, enumerate_sigma_g, gamma_context, sigma_gamma,
};
use sphmod::zlinalg::RatVector;
use sphmod::Rat;
use std::collections::BTreeSet;

fn rs(factors: &[(Series, usize)]) -> RootSystem {
    rootsys::build(GroupSpec { factors: factors.to_vec(), torus_rank: 0 }).unwrap()
}

fn all_simple_types_up_to(max_rank: usize) -> Vec<(Series, usize)> {
    let mut out = Vec::new();
    out.extend((1..=max_rank).map(|r| (Series::A, r)));
    out.extend((2..=max_rank).map(|r| (Series::B, r)));
    out.extend((3..=max_rank).map(|r| (Series::C, r)));
    out.extend((4..=max_rank).map(|r| (Series::D, r)));
    if max_rank >= 6 {
        out.extend((6..=max_rank.min(8)).map(|r| (Series::E, r)));
    }
    if max_rank >= 4 {
        out.push((Series::F, 4));
    }
    out.push((Series::G, 2));
    out
}

#[test]
fn closed_positive_spherical_roots_have_exactly_two_simple_descents() {
    // For σ spherically closed, a positive root and not simple, exactly two
    // simple roots δ satisfy σ − δ ∈ Δ⁺. (Simple σ trivially have none, so
    // they are excluded here.)
    for (series, rank) in all_simple_types_up_to(6) {
        let r = rs(&[(series, rank)]);
        let positive: BTreeSet<Weight> = r.positive_roots().into_iter().collect();
        for root in enumerate_sigma_g(&r) {
            if !root.spherically_closed || root.is_simple() || !positive.contains(&root.sigma) {
                continue;
            }
            let descents = (0..r.n_simple())
                .filter(|&d| positive.contains(&root.sigma.sub(r.simple_root(d))))
                .count();
            assert_eq!(
                descents,
                2,
                "{}{}: sigma {:?}",
                series.letter(),
                rank,
                root.sigma
            );
        }
    }
}

#[test]
fn pi_pp_of_sigma_contained_in_pi_pp_of_double() {
    for (series, rank) in all_simple_types_up_to(6) {
        let r = rs(&[(series, rank)]);
        let roots = enumerate_sigma_g(&r);
        for root in &roots {
            if let Some(double) = roots.iter().find(|d| d.sigma == root.sigma.double()) {
                assert!(
                    root.pi_pp.is_subset(&double.pi_pp),
                    "{}{}: sigma {:?}",
                    series.letter(),
                    rank,
                    root.sigma
                );
            }
        }
    }
}

#[test]
fn sigma_minus_pi_pp_element_is_never_a_root_except_f4() {
    // σ − δ ∉ Δ for δ ∈ Π^pp(σ), with one genuine exception in type F₄:
    // the full-support root σ = α₁+2α₂+3α₃+2α₄ is the highest short root
    // e₁, has α₃ ∈ Π^pp(σ), and σ − α₃ = e₁ − e₄ is a long root.
    let mut violations: Vec<(char, usize, u8, usize)> = Vec::new();
    for (series, rank) in all_simple_types_up_to(8) {
        let r = rs(&[(series, rank)]);
        let mut all_roots: BTreeSet<Weight> = r.positive_roots().into_iter().collect();
        let negatives: Vec<Weight> = all_roots
            .iter()
            .map(|w| Weight::zero(w.len()).sub(w))
            .collect();
        all_roots.extend(negatives);
        for root in enumerate_sigma_g(&r) {
            for &delta in &root.pi_pp {
                let diff = root.sigma.sub(r.simple_root(delta));
                if all_roots.contains(&diff) {
                    violations.push((series.letter(), rank, root.table_row, delta));
                }
            }
        }
    }
    assert_eq!(violations, vec![('F', 4, 11, 2)]);
}

#[test]
fn compatibility_chain_descends_on_random_monoids() {
    // Σ(Γ) ⊆ {lattice-compatible} ⊆ Σ_G, and every color pair satisfies its
    // structural invariants.
    let pool: Vec<Vec<(Series, usize)>> = vec![
        vec![(Series::A, 2)],
        vec![(Series::A, 3)],
        vec![(Series::B, 2)],
        vec![(Series::C, 3)],
        vec![(Series::G, 2)],
        vec![(Series::A, 1), (Series::A, 1)],
        vec![(Series::A, 1), (Series::A, 2)],
    ];
    let mut rng = StdRng::seed_from_u64(99);
    for trial in 0..120 {
        let factors = pool[rng.random_range(0..pool.len())].clone();
        let root_system =
            rootsys::build(GroupSpec { factors, torus_rank: 0 }).unwrap();
        let n = root_system.n_weights();
        let count = rng.random_range(1..=3.min(n));
        let gens: Vec<Weight> = (0..count)
            .map(|_| {
                Weight::from_i64(
                    &(0..n).map(|_| rng.random_range(0..=4i64)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let Ok(ctx) = gamma_context(root_system, &gens) else { continue };
        let all = enumerate_sigma_g(&ctx.rs);
        let lattice_ok: BTreeSet<Weight> = all
            .iter()
            .filter(|r| compatible_with_lattice(&ctx.rs, r, &ctx.lattice).unwrap())
            .map(|r| r.sigma.clone())
            .collect();
        for i in &ctx.iota {
            assert!(ctx.k_cone.member(i).unwrap(), "restricted coroots lie in K");
        }
        let sg = sigma_gamma(&ctx).unwrap();
        for (root, pair) in &sg {
            assert!(lattice_ok.contains(&root.sigma), "trial {trial}");
            if let Some(cp) = pair {
                let alpha_vec = ctx
                    .lattice_vector(ctx.rs.simple_root(cp.alpha))
                    .unwrap()
                    .expect("compatible simple root lies in the lattice");
                assert_eq!(cp.rho_plus.dot(&alpha_vec), Rat::one());
                assert_eq!(
                    cp.rho_plus.add(&cp.rho_minus),
                    ctx.iota[cp.alpha],
                    "pair sums to the restricted coroot"
                );
                assert!(ctx.k_cone.member(&cp.rho_plus).unwrap());
                assert!(ctx.k_cone.member(&cp.rho_minus).unwrap());
                assert!(
                    ctx.k1.contains(&cp.rho_plus) || ctx.k1.contains(&cp.rho_minus),
                    "one element of the pair lies on an extremal ray"
                );
                // Integrality: members of Hom(Λ, ℤ).
                for rho in [&cp.rho_plus, &cp.rho_minus] {
                    assert!(rho.entries().iter().all(|v| v.is_integer()));
                }
                assert!(cp.rho_plus <= cp.rho_minus, "canonical order");
            } else {
                assert!(!root.is_simple());
            }
        }
    }
}

#[test]
fn singletons_lie_in_some_component() {
    let mut rng = StdRng::seed_from_u64(7);
    let pool: Vec<Vec<(Series, usize)>> = vec![
        vec![(Series::A, 2)],
        vec![(Series::A, 3)],
        vec![(Series::A, 1), (Series::A, 1)],
        vec![(Series::B, 2)],
    ];
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 60 {
        attempts += 1;
        assert!(attempts < 3000);
        let factors = pool[rng.random_range(0..pool.len())].clone();
        let spec = GroupSpec { factors, torus_rank: 0 };
        let n = rootsys::build(spec.clone()).unwrap().n_weights();
        let count = rng.random_range(1..=2);
        let gens: Vec<Weight> = (0..count)
            .map(|_| {
                Weight::from_i64(
                    &(0..n).map(|_| rng.random_range(0..=3i64)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let Ok(report) = analyze(spec, &gens, &AnalyzeOptions::default()) else {
            continue;
        };
        accepted += 1;
        for v in 0..report.sigma.len() {
            assert!(
                report.components.iter().any(|c| c.roots.contains(&v)),
                "vertex {v} missing from every component"
            );
        }
        // Maximality cross-check against the graph.
        for c in &report.components {
            for v in 0..report.sigma.len() {
                if c.roots.contains(&v) {
                    continue;
                }
                let extends = c.roots.iter().all(|&u| report.graph.adjacent(u, v));
                assert!(!extends, "component missed an extension by vertex {v}");
            }
        }
    }
}

#[test]
fn rays_of_k_generate_with_any_halfspace() {
    // With S = the rays of K, the generation test holds for every σ.
    let c = gamma_context(
        rs(&[(Series::A, 2)]),
        &[Weight::from_i64(&[3, 0]), Weight::from_i64(&[1, 1])],
    )
    .unwrap();
    for root in enumerate_sigma_g(&c.rs) {
        let Some(sigma_vec) = c.lattice_vector(&root.sigma).unwrap() else {
            continue;
        };
        assert!(sphmod::cones::generated_with_halfspace(&c.k_cone, &c.k1, &sigma_vec).unwrap());
    }
}

#[test]
fn phi_is_multiplicity_free() {
    let examples: Vec<(Vec<(Series, usize)>, Vec<Vec<i64>>)> = vec![
        (vec![(Series::A, 2)], vec![vec![3, 0], vec![1, 1]]),
        (vec![(Series::A, 3)], vec![vec![0, 1, 1], vec![2, 2, 2], vec![2, 2, 3], vec![4, 4, 7]]),
        (vec![(Series::A, 1), (Series::A, 1)], vec![vec![2, 0], vec![2, 2]]),
    ];
    for (factors, gens) in examples {
        let spec = GroupSpec { factors, torus_rank: 0 };
        let gens: Vec<Weight> = gens.iter().map(|g| Weight::from_i64(g)).collect();
        let report = analyze(spec, &gens, &AnalyzeOptions::default()).unwrap();
        let set: BTreeSet<&Weight> = report.phi.iter().collect();
        assert_eq!(set.len(), report.phi.len());
        assert!(report.tangent_dimension >= report.max_component_dimension);
    }
}

#[test]
fn clique_enumeration_matches_graph_completeness() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..50 {
        let n = rng.random_range(1..=8usize);
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_range(0..3) > 0 {
                    edges.insert((i, j));
                }
            }
        }
        let g = sphmod::moduli::AdmissibilityGraph { n_vertices: n, edges };
        let cliques = maximal_cliques(&g);
        assert_eq!(g.is_complete(), cliques.len() == 1 && cliques[0].len() == n);
    }
}

#[test]
fn zero_functional_never_in_k1() {
    let c = gamma_context(
        rs(&[(Series::B, 2)]),
        &[Weight::from_i64(&[2, 0]), Weight::from_i64(&[0, 1])],
    )
    .unwrap();
    assert!(c.k1.iter().all(|q| !q.is_zero()));
    for q in &c.k1 {
        assert!(q.entries().iter().all(|v| v.is_integer()), "rays are primitive integral");
    }
    let _ = RatVector::from_i64(&[0, 0]);
}

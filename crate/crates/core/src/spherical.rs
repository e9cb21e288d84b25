//! Spherical roots of the group, compatibility of a spherical root with the
//! weight lattice and with the weight monoid, and the color pair attached to
//! a compatible simple root.
//!
//! The classified list of spherical roots is driven by the coefficient
//! patterns of the fourteen root shapes over connected Dynkin subdiagrams
//! plus orthogonal simple-root pairs; shapes 3, 5, 8 and 10 additionally
//! contribute their half whenever that half is an integral weight outside
//! the root lattice, and shape 13 is the one excluded from the spherically
//! closed subset.

use crate::cones::{dual_cone, generated_with_halfspace, monoid_member, PolyCone};
use crate::rootsys::{RootSystem, Series, SimpleRootIndex, Weight};
use crate::zlinalg::{LatticeBasis, RatVector};
use crate::{Error, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Element of Hom(Λ, ℚ), stored as values on the fixed HNF basis of Λ.
/// Integral values characterize elements of Hom(Λ, ℤ).
pub type Functional = RatVector;

/// A spherical root of the group, with its classification data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalRoot {
    pub sigma: Weight,
    pub support: BTreeSet<SimpleRootIndex>,
    /// Support in the canonical labeling of its table shape.
    pub ordered_support: Vec<SimpleRootIndex>,
    /// Shape number 1..14 (of σ itself, or of 2σ when `halved`).
    pub table_row: u8,
    pub halved: bool,
    pub in_root_lattice: bool,
    pub spherically_closed: bool,
    pub pi_pp: BTreeSet<SimpleRootIndex>,
    pub pi_p_sigma: BTreeSet<SimpleRootIndex>,
}

impl SphericalRoot {
    /// σ is a simple root exactly for shape 1.
    pub fn is_simple(&self) -> bool {
        self.table_row == 1
    }
}

/// Coefficient patterns (shape number, coefficients on the Bourbaki-labeled
/// support) applicable to a connected subdiagram of the given series/rank.
fn row_patterns(series: Series, rank: usize) -> Vec<(u8, Vec<i64>)> {
    match (series, rank) {
        (Series::A, 1) => vec![(1, vec![1]), (2, vec![2])],
        (Series::A, r) => {
            let mut rows = vec![(4, vec![1; r])];
            if r == 3 {
                rows.push((5, vec![1, 2, 1]));
            }
            rows
        }
        (Series::B, r) => {
            let mut rows = vec![(6, vec![1; r]), (7, vec![2; r])];
            if r == 3 {
                rows.push((8, vec![1, 2, 3]));
            }
            rows
        }
        (Series::C, r) => {
            let mut v = vec![2; r];
            v[0] = 1;
            v[r - 1] = 1;
            vec![(9, v)]
        }
        (Series::D, r) => {
            let mut v = vec![2; r];
            v[r - 2] = 1;
            v[r - 1] = 1;
            vec![(10, v)]
        }
        (Series::F, _) => vec![(11, vec![1, 2, 3, 2])],
        (Series::G, _) => vec![(12, vec![1, 1]), (13, vec![2, 1]), (14, vec![4, 2])],
        (Series::E, _) => vec![],
    }
}

fn is_asterisk_row(row: u8) -> bool {
    matches!(row, 3 | 5 | 8 | 10)
}

/// Enumerates Σ_G: every spherical root of the group, canonically ordered by
/// weight coordinates.
pub fn enumerate_sigma_g(rs: &RootSystem) -> Vec<SphericalRoot> {
    let mut by_weight: BTreeMap<Vec<Int>, SphericalRoot> = BTreeMap::new();

    for s in rs.connected_subsets() {
        let Some((series, labelings)) = rs.subdiagram_labelings(&s) else {
            continue;
        };
        for (row, pattern) in row_patterns(series, s.len()) {
            for labeling in &labelings {
                let mut coeffs = vec![0i64; rs.n_simple()];
                for (pos, &idx) in labeling.iter().enumerate() {
                    coeffs[idx] = pattern[pos];
                }
                let sigma = rs.root_combination(&coeffs);
                record_root(rs, &mut by_weight, sigma, row, labeling.clone());
            }
        }
    }
    // Orthogonal pairs of simple roots, possibly across factors.
    for i in 0..rs.n_simple() {
        for j in i + 1..rs.n_simple() {
            if rs.orthogonal_simple(i, j) {
                let sigma = rs.simple_root(i).add(rs.simple_root(j));
                record_root(rs, &mut by_weight, sigma, 3, vec![i, j]);
            }
        }
    }
    by_weight.into_values().collect()
}

fn record_root(
    rs: &RootSystem,
    out: &mut BTreeMap<Vec<Int>, SphericalRoot>,
    sigma: Weight,
    row: u8,
    labeling: Vec<SimpleRootIndex>,
) {
    let support: BTreeSet<usize> = labeling.iter().copied().collect();
    let pi_p_sigma: BTreeSet<usize> = (0..rs.n_simple())
        .filter(|&a| rs.inner_product(&sigma, rs.simple_root(a)).is_zero())
        .collect();
    let mut pi_pp: BTreeSet<usize> = support.intersection(&pi_p_sigma).copied().collect();
    // Case rule: the simple-root sum over a B-shaped support drops the short
    // end; a C-shaped support drops the first root; otherwise keep all of
    // Supp σ ∩ Π^p(σ).
    match row {
        6 => {
            pi_pp.remove(labeling.last().expect("nonempty labeling"));
        }
        9 => {
            pi_pp.remove(&labeling[0]);
        }
        _ => {}
    }
    let in_zdelta = rs.in_root_lattice(&sigma).is_some();
    debug_assert!(in_zdelta, "table shapes are integral root combinations");
    let root = SphericalRoot {
        sigma: sigma.clone(),
        support: support.clone(),
        ordered_support: labeling.clone(),
        table_row: row,
        halved: false,
        in_root_lattice: in_zdelta,
        spherically_closed: in_zdelta && row != 13,
        pi_pp: pi_pp.clone(),
        pi_p_sigma: pi_p_sigma.clone(),
    };
    out.entry(sigma.coords.clone()).or_insert(root);

    if is_asterisk_row(row) {
        if let Some(half) = sigma.try_halve() {
            if rs.in_root_lattice(&half).is_none() {
                let half_root = SphericalRoot {
                    sigma: half.clone(),
                    support,
                    ordered_support: labeling,
                    table_row: row,
                    halved: true,
                    in_root_lattice: false,
                    spherically_closed: false,
                    pi_pp,
                    pi_p_sigma,
                };
                out.entry(half.coords).or_insert(half_root);
            }
        }
    }
}

/// The simple roots pairing to zero with every vector of the lattice.
pub fn pi_p_of_lattice(rs: &RootSystem, lattice: &LatticeBasis) -> BTreeSet<SimpleRootIndex> {
    (0..rs.n_simple())
        .filter(|&a| lattice.basis().iter().all(|b| b[a].is_zero()))
        .collect()
}

/// Compatibility of a spherical root with the lattice Λ: membership as a
/// primitive element, the Π^pp ⊆ Π^p(Λ) ⊆ Π^p(σ) sandwich, equal coroot
/// values on Λ for the two halves of an orthogonal pair, and even coroot
/// values on Λ for a doubled simple root.
pub fn compatible_with_lattice(
    rs: &RootSystem,
    root: &SphericalRoot,
    lattice: &LatticeBasis,
) -> Result<bool, Error> {
    let Some(coords) = lattice.coords(&root.sigma.coords)? else {
        return Ok(false);
    };
    let g = coords.iter().fold(Int::zero(), |acc, c| acc.gcd(c));
    if !g.is_one() {
        return Ok(false);
    }
    let pi_p = pi_p_of_lattice(rs, lattice);
    if !root.pi_pp.is_subset(&pi_p) || !pi_p.is_subset(&root.pi_p_sigma) {
        return Ok(false);
    }
    if root.table_row == 3 {
        // σ = α+β or ½(α+β) with α ⊥ β.
        let (a, b) = (root.ordered_support[0], root.ordered_support[1]);
        if lattice.basis().iter().any(|v| v[a] != v[b]) {
            return Ok(false);
        }
    }
    if root.table_row == 2 {
        let a = root.ordered_support[0];
        let two = Int::from(2);
        if lattice.basis().iter().any(|v| !(&v[a] % &two).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The functional pair attached to a compatible simple spherical root α:
/// ϱ_α and ι(α^∨) − ϱ_α, both of value 1 on α, both in K, canonically
/// ordered with `rho_plus` lexicographically smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPair {
    pub alpha: SimpleRootIndex,
    pub rho_plus: Functional,
    pub rho_minus: Functional,
}

impl ColorPair {
    pub fn contains(&self, f: &Functional) -> bool {
        self.rho_plus == *f || self.rho_minus == *f
    }
}

/// Full monoid context: the root system, the indecomposable generators E,
/// Λ = ℤΓ with its HNF basis, Π^p = Γ^⊥, the cone ℚ⁺Γ in Λ-coordinates, its
/// dual K with ray set K¹, and the restrictions ι(α^∨) of the coroots to Λ.
#[derive(Debug, Clone)]
pub struct GammaContext {
    pub rs: RootSystem,
    pub raw_generators: Vec<Weight>,
    pub generators: Vec<Weight>,
    pub gen_lattice_coords: Vec<Vec<Int>>,
    pub lattice: LatticeBasis,
    pub pi_p: BTreeSet<SimpleRootIndex>,
    pub gamma_cone: PolyCone,
    pub k_cone: PolyCone,
    pub k1: Vec<Functional>,
    pub iota: Vec<Functional>,
}

/// Builds the context for a generator list: validates dominance, reduces the
/// generators to the indecomposable set E, and computes Λ, Π^p, K and ι.
pub fn gamma_context(rs: RootSystem, raw: &[Weight]) -> Result<GammaContext, Error> {
    for (index, w) in raw.iter().enumerate() {
        if w.len() != rs.n_weights() {
            return Err(Error::DimensionMismatch(format!(
                "generator #{index} has length {}, expected {}",
                w.len(),
                rs.n_weights()
            )));
        }
        if !rs.is_dominant(w) {
            return Err(Error::NonDominant { index });
        }
    }
    let mut gens: Vec<Weight> = raw.iter().filter(|w| !w.is_zero()).cloned().collect();
    gens.sort();
    gens.dedup();
    // Drop decomposable generators until none is a ℤ⁺-combination of the
    // others; the search runs in ambient coordinates.
    loop {
        let mut dropped = false;
        for idx in 0..gens.len() {
            let others: Vec<Vec<Int>> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, w)| w.coords.clone())
                .collect();
            let cone = PolyCone::from_generators(
                rs.n_weights(),
                others.iter().map(|g| RatVector::from_ints(g)).collect(),
            )?;
            if monoid_member(&gens[idx].coords, &others, &cone)? {
                gens.remove(idx);
                dropped = true;
                break;
            }
        }
        if !dropped {
            break;
        }
    }

    let coords_list: Vec<Vec<Int>> = gens.iter().map(|w| w.coords.clone()).collect();
    let lattice = LatticeBasis::from_generators(rs.n_weights(), &coords_list);
    let rank = lattice.rank();
    let gen_lattice_coords: Vec<Vec<Int>> = gens
        .iter()
        .map(|w| {
            lattice
                .coords(&w.coords)
                .expect("dimension checked")
                .expect("generator lies in its own span")
        })
        .collect();
    let pi_p: BTreeSet<usize> = (0..rs.n_simple())
        .filter(|&a| gens.iter().all(|e| e.coords[a].is_zero()))
        .collect();
    let gamma_cone = PolyCone::from_generators(
        rank,
        gen_lattice_coords.iter().map(|c| RatVector::from_ints(c)).collect(),
    )?;
    let k_cone = dual_cone(rank, gamma_cone.generators())?;
    let k1 = k_cone.rays()?.to_vec();
    let iota: Vec<Functional> = (0..rs.n_simple())
        .map(|a| {
            RatVector::new(
                lattice
                    .basis()
                    .iter()
                    .map(|b| Rat::from_integer(b[a].clone()))
                    .collect(),
            )
        })
        .collect();
    Ok(GammaContext {
        rs,
        raw_generators: raw.to_vec(),
        generators: gens,
        gen_lattice_coords,
        lattice,
        pi_p,
        gamma_cone,
        k_cone,
        k1,
        iota,
    })
}

impl GammaContext {
    /// Λ-coordinates of a weight, as a rational vector.
    pub fn lattice_vector(&self, w: &Weight) -> Result<Option<RatVector>, Error> {
        Ok(self.lattice.coords(&w.coords)?.map(|c| RatVector::from_ints(&c)))
    }
}

/// The simple roots pairing to zero with every generator of the monoid.
pub fn pi_p_of_monoid(ctx: &GammaContext) -> BTreeSet<SimpleRootIndex> {
    ctx.pi_p.clone()
}

/// Witness of monoid compatibility: simple spherical roots carry the color
/// pair, all other roots carry nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompatibilityWitness {
    NonSimple,
    Simple(ColorPair),
}

/// Monoid compatibility of a spherical root.
///
/// For σ ∉ Π the test is whether K is generated by the restricted coroots of
/// Π ∖ Π^p together with finitely many functionals nonpositive on σ. For a
/// simple σ = α, a functional ϱ of value 1 on α is searched among the rays
/// of K (by uniqueness of the pair, at least one of its two members lies on
/// an extremal ray, and a primitive ray generator rescaled to value 1 leaves
/// the integral lattice unless the scale is 1), its partner ι(α^∨) − ϱ must
/// lie in K, and the same generation test runs with the pair adjoined.
pub fn compatible_with_monoid(
    ctx: &GammaContext,
    root: &SphericalRoot,
) -> Result<Option<CompatibilityWitness>, Error> {
    if !compatible_with_lattice(&ctx.rs, root, &ctx.lattice)? {
        return Ok(None);
    }
    let sigma_vec = ctx
        .lattice_vector(&root.sigma)?
        .expect("lattice compatibility grants membership");
    if !root.is_simple() {
        let s: Vec<Functional> = (0..ctx.rs.n_simple())
            .filter(|a| !ctx.pi_p.contains(a))
            .map(|a| ctx.iota[a].clone())
            .collect();
        let ok = generated_with_halfspace(&ctx.k_cone, &s, &sigma_vec)?;
        return Ok(ok.then_some(CompatibilityWitness::NonSimple));
    }
    let alpha = root.ordered_support[0];
    let one = Rat::one();
    for q in &ctx.k1 {
        if q.dot(&sigma_vec) != one {
            continue;
        }
        let partner = ctx.iota[alpha].sub(q);
        if !ctx.k_cone.member(&partner)? {
            continue;
        }
        let mut s: Vec<Functional> = vec![q.clone(), partner.clone()];
        s.extend(
            (0..ctx.rs.n_simple())
                .filter(|b| *b != alpha && !ctx.pi_p.contains(b))
                .map(|b| ctx.iota[b].clone()),
        );
        if generated_with_halfspace(&ctx.k_cone, &s, &sigma_vec)? {
            let (rho_plus, rho_minus) = if *q <= partner {
                (q.clone(), partner)
            } else {
                (partner, q.clone())
            };
            return Ok(Some(CompatibilityWitness::Simple(ColorPair {
                alpha,
                rho_plus,
                rho_minus,
            })));
        }
    }
    Ok(None)
}

/// Σ(Γ): the spherical roots compatible with the monoid, with their color
/// pairs, in canonical order.
pub fn sigma_gamma(
    ctx: &GammaContext,
) -> Result<Vec<(SphericalRoot, Option<ColorPair>)>, Error> {
    let mut out = Vec::new();
    for root in enumerate_sigma_g(&ctx.rs) {
        match compatible_with_monoid(ctx, &root)? {
            Some(CompatibilityWitness::Simple(cp)) => out.push((root, Some(cp))),
            Some(CompatibilityWitness::NonSimple) => out.push((root, None)),
            None => {}
        }
    }
    Ok(out)
}

/// Distinguished classification of a compatible spherical root: a simple
/// root whose two color functionals coincide with ι(α^∨)/2, a simple-root
/// sum over a B-shaped support whose tail lies in Π^p, or the shape-13 root.
pub fn gamma_distinguished(
    ctx: &GammaContext,
    root: &SphericalRoot,
    pair: Option<&ColorPair>,
) -> Result<bool, Error> {
    match root.table_row {
        1 => {
            let cp = pair.ok_or_else(|| {
                Error::Internal("missing color pair for a simple spherical root".into())
            })?;
            let alpha = root.ordered_support[0];
            let doubled = cp.rho_plus.scale(&Rat::from_integer(Int::from(2)));
            Ok(cp.rho_plus == cp.rho_minus && doubled == ctx.iota[alpha])
        }
        6 => Ok(root.ordered_support[1..].iter().all(|a| ctx.pi_p.contains(a))),
        13 => Ok(true),
        _ => Ok(false),
    }
}

/// σ̄: the double of σ when σ lies outside the root lattice or is
/// distinguished, σ itself otherwise.
pub fn overline_sigma(
    ctx: &GammaContext,
    root: &SphericalRoot,
    pair: Option<&ColorPair>,
) -> Result<Weight, Error> {
    let distinguished = gamma_distinguished(ctx, root, pair)?;
    if !root.in_root_lattice || distinguished {
        Ok(root.sigma.double())
    } else {
        Ok(root.sigma.clone())
    }
}

/// Rational coefficients of σ on the simple roots (half-integral for the
/// halved shapes).
pub fn sigma_root_coefficients(rs: &RootSystem, root: &SphericalRoot) -> Vec<Rat> {
    if let Some(n) = rs.in_root_lattice(&root.sigma) {
        return n.into_iter().map(Rat::from_integer).collect();
    }
    let doubled = rs
        .in_root_lattice(&root.sigma.double())
        .expect("twice a spherical root lies in the root lattice");
    let half = Rat::new(Int::one(), Int::from(2));
    doubled
        .into_iter()
        .map(|c| Rat::from_integer(c) * &half)
        .collect()
}

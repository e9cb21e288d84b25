//! Exact polyhedral cone kernel over ℚ: dual cones and extremal rays via the
//! double description method, membership, the halfspace generation test
//! behind the monoid-compatibility conditions, Hilbert bases of pointed
//! cones, and monoid saturation checks.

use crate::lp;
use crate::zlinalg::{hnf, rank, solve_rational, IntMatrix, LatticeBasis, RatVector};
use crate::{Error, Int, Rat};

use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{BTreeSet, HashSet};

fn unit(dim: usize, i: usize) -> RatVector {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    RatVector::new(v)
}

/// V-description of an intersection of halfspaces: extremal rays modulo the
/// lineality space, plus a basis of the lineality space.
pub struct DualDescription {
    pub rays: Vec<RatVector>,
    pub lineality: Vec<RatVector>,
}

/// Computes `{x : n·x ≥ 0 for all n in normals}` by incremental double
/// description, maintaining extremal rays and a lineality basis.
pub fn halfspace_intersection(dim: usize, normals: &[RatVector]) -> DualDescription {
    let mut lineality: Vec<RatVector> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<RatVector> = Vec::new();
    let mut processed: Vec<RatVector> = Vec::new();

    for n in normals {
        assert_eq!(n.len(), dim, "normal of wrong dimension");
        if n.is_zero() {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !n.dot(l).is_zero()) {
            // The hyperplane cuts the lineality space: one lineality
            // direction becomes a ray, the rest are projected into the
            // hyperplane, and existing rays are shifted into it as well.
            let v = lineality.remove(pos);
            let c = n.dot(&v);
            for l in lineality.iter_mut() {
                let f = n.dot(l) / &c;
                *l = l.sub(&v.scale(&f)).canonical_ray();
            }
            for r in rays.iter_mut() {
                let f = n.dot(r) / &c;
                *r = r.sub(&v.scale(&f)).canonical_ray();
            }
            rays.push(if c.is_positive() { v.canonical_ray() } else { v.neg().canonical_ray() });
        } else {
            let vals: Vec<Rat> = rays.iter().map(|r| n.dot(r)).collect();
            if vals.iter().all(|s| !s.is_negative()) {
                processed.push(n.clone());
                continue;
            }
            // Zero sets with respect to the constraints processed so far,
            // for the combinatorial adjacency test.
            let zero_sets: Vec<Vec<bool>> = rays
                .iter()
                .map(|r| processed.iter().map(|p| p.dot(r).is_zero()).collect())
                .collect();
            let adjacent = |i: usize, j: usize| -> bool {
                let meet: Vec<bool> = zero_sets[i]
                    .iter()
                    .zip(&zero_sets[j])
                    .map(|(a, b)| *a && *b)
                    .collect();
                !(0..rays.len()).any(|k| {
                    k != i
                        && k != j
                        && meet.iter().zip(&zero_sets[k]).all(|(m, z)| !*m || *z)
                })
            };
            let mut new_rays: BTreeSet<RatVector> = BTreeSet::new();
            for (r, s) in rays.iter().zip(&vals) {
                if !s.is_negative() {
                    new_rays.insert(r.clone());
                }
            }
            for (i, ri) in rays.iter().enumerate() {
                if !vals[i].is_positive() {
                    continue;
                }
                for (j, rj) in rays.iter().enumerate() {
                    if !vals[j].is_negative() || !adjacent(i, j) {
                        continue;
                    }
                    // n·w = 0 and w is a positive combination of r_i, r_j.
                    let w = rj.scale(&vals[i]).sub(&ri.scale(&vals[j]));
                    new_rays.insert(w.canonical_ray());
                }
            }
            rays = new_rays.into_iter().collect();
        }
        processed.push(n.clone());
    }
    rays.sort();
    DualDescription { rays, lineality }
}

/// Pointed (or degenerate) rational polyhedral cone with both descriptions
/// cached. Immutable after construction.
#[derive(Debug, Clone)]
pub struct PolyCone {
    dim: usize,
    generators: Vec<RatVector>,
    rays: Vec<RatVector>,
    facets: Vec<RatVector>,
    equations: Vec<RatVector>,
    pointed: bool,
}

impl PolyCone {
    /// Builds the cone generated by `gens` inside ℚ^dim.
    pub fn from_generators(dim: usize, gens: Vec<RatVector>) -> Result<PolyCone, Error> {
        for g in &gens {
            if g.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator of length {} in dimension {dim}",
                    g.len()
                )));
            }
        }
        let generators: Vec<RatVector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let dd = halfspace_intersection(dim, &generators);
        let facets = dd.rays;
        // The lineality of the dual is the orthogonal complement of the span
        // of the cone; canonicalize it through an integer HNF.
        let equations = if dd.lineality.is_empty() {
            Vec::new()
        } else {
            let int_rows: Vec<Vec<Int>> =
                dd.lineality.iter().map(|l| l.primitive_integer()).collect();
            LatticeBasis::from_generators(dim, &int_rows)
                .basis()
                .iter()
                .map(|r| RatVector::from_ints(r))
                .collect()
        };
        let mut all_constraints = facets.clone();
        all_constraints.extend(equations.iter().cloned());
        let pointed = rank(&all_constraints) == dim;
        let rays = if pointed {
            let mut set: BTreeSet<RatVector> = BTreeSet::new();
            for g in &generators {
                let mut active: Vec<RatVector> = equations.clone();
                for f in &facets {
                    if f.dot(g).is_zero() {
                        active.push(f.clone());
                    }
                }
                if rank(&active) == dim - 1 {
                    set.insert(g.canonical_ray());
                }
            }
            set.into_iter().collect()
        } else {
            Vec::new()
        };
        Ok(PolyCone { dim, generators, rays, facets, equations, pointed })
    }

    /// Builds `{x : n·x ≥ 0 for all n}` as a cone with explicit generators.
    pub fn from_inequalities(dim: usize, normals: &[RatVector]) -> Result<PolyCone, Error> {
        let dd = halfspace_intersection(dim, normals);
        let mut gens = dd.rays;
        for l in dd.lineality {
            gens.push(l.clone());
            gens.push(l.neg());
        }
        PolyCone::from_generators(dim, gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[RatVector] {
        &self.generators
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Primitive extremal ray generators in canonical (lexicographic) order.
    pub fn rays(&self) -> Result<&[RatVector], Error> {
        if !self.pointed {
            return Err(Error::ConeNotPointed);
        }
        Ok(&self.rays)
    }

    /// Facet normals: together with `equations`, x ∈ cone ⟺ all equations
    /// vanish on x and all facet pairings are ≥ 0.
    pub fn facets(&self) -> &[RatVector] {
        &self.facets
    }

    pub fn equations(&self) -> &[RatVector] {
        &self.equations
    }

    pub fn member(&self, v: &RatVector) -> Result<bool, Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in dimension {}",
                v.len(),
                self.dim
            )));
        }
        Ok(self.equations.iter().all(|e| e.dot(v).is_zero())
            && self.facets.iter().all(|f| !f.dot(v).is_negative()))
    }
}

/// The cone `{f : ⟨f, g⟩ ≥ 0 for all g in gens}` dual to cone(gens), with
/// the standard dot-product pairing of coordinate vectors.
pub fn dual_cone(dim: usize, gens: &[RatVector]) -> Result<PolyCone, Error> {
    PolyCone::from_inequalities(dim, gens)
}

/// Cone equality by mutual containment of generators.
pub fn cone_equal(a: &PolyCone, b: &PolyCone) -> Result<bool, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cones of dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    for g in a.generators() {
        if !b.member(g)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !a.member(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `K = cone(S ∪ F)` for some finite `F ⊆ {q : ⟨q, σ⟩ ≤ 0}`.
///
/// Equivalent test: every extremal ray r of K must decompose as
/// r = Σ c_i s_i + Σ d_j ρ_j with c, d ≥ 0 and Σ d_j ⟨ρ_j, σ⟩ ≤ 0, where ρ_j
/// runs over the rays of K; decided by exact LP feasibility per ray.
/// Elements of `s` outside K make the answer `false`.
pub fn generated_with_halfspace(
    k: &PolyCone,
    s: &[RatVector],
    sigma: &RatVector,
) -> Result<bool, Error> {
    for v in s {
        if !k.member(v)? {
            return Ok(false);
        }
    }
    let rays = k.rays()?;
    if sigma.len() != k.dim() {
        return Err(Error::DimensionMismatch("halfspace normal dimension".into()));
    }
    let pairings: Vec<Rat> = rays.iter().map(|r| r.dot(sigma)).collect();
    let n_vars = s.len() + rays.len() + 1; // c's, d's, slack
    for r in rays {
        // Equality rows: one per coordinate, plus the halfspace row
        // Σ d_j ⟨ρ_j, σ⟩ + w = 0.
        let mut rows: Vec<RatVector> = Vec::with_capacity(k.dim() + 1);
        let mut rhs: Vec<Rat> = Vec::with_capacity(k.dim() + 1);
        for coord in 0..k.dim() {
            let mut row = Vec::with_capacity(n_vars);
            for sv in s {
                row.push(sv.get(coord).clone());
            }
            for rv in rays {
                row.push(rv.get(coord).clone());
            }
            row.push(Rat::zero());
            rows.push(RatVector::new(row));
            rhs.push(r.get(coord).clone());
        }
        let mut row = vec![Rat::zero(); s.len()];
        row.extend(pairings.iter().cloned());
        row.push(Rat::one());
        rows.push(RatVector::new(row));
        rhs.push(Rat::zero());
        if !lp::nonneg_solution_exists(&rows, &rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pulling triangulation of a pointed cone on its extremal rays. Returns
/// index sets into `rays`, each spanning a simplicial subcone; the subcones
/// cover the original cone.
fn triangulate(dim: usize, rays: &[RatVector]) -> Result<Vec<Vec<usize>>, Error> {
    fn rec(
        dim: usize,
        all: &[RatVector],
        indices: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), Error> {
        let sub: Vec<RatVector> = indices.iter().map(|&i| all[i].clone()).collect();
        if rank(&sub) == indices.len() {
            out.push(indices.to_vec());
            return Ok(());
        }
        let cone = PolyCone::from_generators(dim, sub)?;
        let apex = indices[0];
        for f in cone.facets() {
            if f.dot(&all[apex]).is_positive() {
                let face: Vec<usize> = indices
                    .iter()
                    .copied()
                    .filter(|&i| f.dot(&all[i]).is_zero())
                    .collect();
                let mut face_simplices = Vec::new();
                rec(dim, all, &face, &mut face_simplices)?;
                for mut simplex in face_simplices {
                    simplex.push(apex);
                    simplex.sort_unstable();
                    out.push(simplex);
                }
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    if !rays.is_empty() {
        let indices: Vec<usize> = (0..rays.len()).collect();
        rec(dim, rays, &indices, &mut out)?;
    }
    Ok(out)
}

/// Integer points of the half-open parallelepiped {Σ t_i R_i : 0 ≤ t_i < 1}
/// spanned by the rows of `r_mat` (linearly independent integer vectors).
fn parallelepiped_points(r_rows: &[Vec<Int>], ambient: usize) -> Result<Vec<Vec<Int>>, Error> {
    let s = r_rows.len();
    let mut out: BTreeSet<Vec<Int>> = BTreeSet::new();
    let rat_rows: Vec<RatVector> = r_rows.iter().map(|r| RatVector::from_ints(r)).collect();
    // Coefficient system: Σ_i t_i R[i][j] = x_j.
    let coeff: Vec<RatVector> = (0..ambient)
        .map(|j| RatVector::new(rat_rows.iter().map(|r| r.get(j).clone()).collect()))
        .collect();
    let solve_t = |x: &[Int]| -> Result<Option<Vec<Rat>>, Error> {
        let rhs = RatVector::from_ints(x);
        Ok(solve_rational(&coeff, &rhs)?.map(|t| t.entries().to_vec()))
    };

    if s == ambient {
        // Full-dimensional: the HNF diagonal of the ray matrix indexes a
        // transversal of ℤ^s modulo the row span; reduce each representative
        // into the parallelepiped.
        let entries: Vec<Int> = r_rows.iter().flatten().cloned().collect();
        let (h, _) = hnf(&IntMatrix::new(s, ambient, entries));
        let mut diag = Vec::with_capacity(s);
        for i in 0..s {
            let d = h.at(i, i).clone();
            if d.is_zero() {
                return Err(Error::Internal("singular simplicial ray matrix".into()));
            }
            diag.push(d.to_u64().ok_or_else(|| {
                Error::Internal("parallelepiped index too large to enumerate".into())
            })?);
        }
        let mut counter = vec![0u64; s];
        loop {
            let c: Vec<Int> = counter.iter().map(|&v| Int::from(v)).collect();
            let t = solve_t(&c)?.ok_or_else(|| Error::Internal("transversal solve failed".into()))?;
            // x = c − Σ floor(t_i) · R_i is the representative inside the box.
            let mut x = c;
            for (ti, row) in t.iter().zip(r_rows) {
                let fl = ti.floor().to_integer();
                if fl.is_zero() {
                    continue;
                }
                for (xv, rv) in x.iter_mut().zip(row) {
                    *xv -= &fl * rv;
                }
            }
            if x.iter().any(|v| !v.is_zero()) {
                out.insert(x);
            }
            // Mixed-radix increment.
            let mut k = 0;
            loop {
                if k == s {
                    return Ok(out.into_iter().collect());
                }
                counter[k] += 1;
                if counter[k] < diag[k] {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
        }
    } else {
        // Lower-dimensional simplicial cone: enumerate the integer bounding
        // box of the parallelepiped and keep exact solutions with t ∈ [0,1).
        let mut lo = vec![Int::zero(); ambient];
        let mut hi = vec![Int::zero(); ambient];
        for row in r_rows {
            for j in 0..ambient {
                if row[j].is_negative() {
                    lo[j] += &row[j];
                } else {
                    hi[j] += &row[j];
                }
            }
        }
        let mut x: Vec<Int> = lo.clone();
        'outer: loop {
            if let Some(t) = solve_t(&x)? {
                let ok = t
                    .iter()
                    .all(|ti| !ti.is_negative() && *ti < Rat::from_integer(Int::one()));
                if ok && x.iter().any(|v| !v.is_zero()) {
                    out.insert(x.clone());
                }
            }
            let mut k = 0;
            loop {
                if k == ambient {
                    break 'outer;
                }
                x[k] += 1;
                if x[k] <= hi[k] {
                    break;
                }
                x[k] = lo[k].clone();
                k += 1;
            }
        }
        Ok(out.into_iter().collect())
    }
}

/// The unique minimal generating set of the monoid `lattice ∩ cone`, for a
/// pointed rational cone contained in the span of the lattice.
///
/// Computed by simplicial subdivision of the cone on its extremal rays,
/// enumeration of the lattice points of each fundamental parallelepiped via
/// the HNF of the ray matrix, and reduction to irreducible elements. Points
/// are returned in ambient coordinates, canonically ordered.
pub fn hilbert_basis(c: &PolyCone, lattice: &LatticeBasis) -> Result<Vec<Vec<Int>>, Error> {
    if c.dim() != lattice.ambient_dim() {
        return Err(Error::DimensionMismatch("cone vs lattice ambient".into()));
    }
    let rays = c.rays()?;
    if rays.is_empty() {
        return Ok(Vec::new());
    }
    let r = lattice.rank();
    // Express the rays in lattice coordinates; fail if the cone leaves the
    // span of the lattice.
    let basis_rows: Vec<RatVector> =
        lattice.basis().iter().map(|b| RatVector::from_ints(b)).collect();
    let coeff: Vec<RatVector> = (0..lattice.ambient_dim())
        .map(|j| RatVector::new(basis_rows.iter().map(|b| b.get(j).clone()).collect()))
        .collect();
    let mut z_rays: Vec<RatVector> = Vec::with_capacity(rays.len());
    for ray in rays {
        let sol = solve_rational(&coeff, ray)?.ok_or(Error::ConeOutsideLattice)?;
        z_rays.push(sol.canonical_ray());
    }
    let z_cone = PolyCone::from_generators(r, z_rays.clone())?;
    if !z_cone.is_pointed() {
        return Err(Error::ConeNotPointed);
    }

    let mut candidates: BTreeSet<Vec<Int>> = BTreeSet::new();
    for zr in &z_rays {
        candidates.insert(zr.primitive_integer());
    }
    for simplex in triangulate(r, &z_rays)? {
        let rows: Vec<Vec<Int>> =
            simplex.iter().map(|&i| z_rays[i].primitive_integer()).collect();
        for p in parallelepiped_points(&rows, r)? {
            candidates.insert(p);
        }
    }

    // Keep the irreducible elements: h stays iff no candidate a has
    // h − a a nonzero lattice point of the cone.
    let cand: Vec<Vec<Int>> = candidates.into_iter().collect();
    let mut basis_z: Vec<Vec<Int>> = Vec::new();
    for h in &cand {
        let mut reducible = false;
        for a in &cand {
            let diff: Vec<Int> = h.iter().zip(a).map(|(x, y)| x - y).collect();
            if diff.iter().all(|v| v.is_zero()) {
                continue;
            }
            if z_cone.member(&RatVector::from_ints(&diff))? {
                reducible = true;
                break;
            }
        }
        if !reducible {
            basis_z.push(h.clone());
        }
    }

    let mut out: Vec<Vec<Int>> = basis_z.iter().map(|z| lattice.from_coords(z)).collect();
    out.sort();
    Ok(out)
}

/// Upper bound on the coefficient of `g` in any monoid representation of `h`
/// inside a pointed cone: pairing both sides of h = Σ c_g g with a facet
/// normal f that is positive on g gives c_g ≤ ⟨f,h⟩/⟨f,g⟩, since all other
/// terms pair nonnegatively. The minimum over such facets is returned.
pub fn coefficient_bound(h: &[Int], g: &[Int], cone: &PolyCone) -> Option<Rat> {
    let hv = RatVector::from_ints(h);
    let gv = RatVector::from_ints(g);
    cone.facets()
        .iter()
        .filter_map(|f| {
            let fg = f.dot(&gv);
            fg.is_positive().then(|| f.dot(&hv) / fg)
        })
        .min()
}

/// Decides membership of `target` in the monoid generated by `gens`, via
/// depth-first search over residuals pruned by cone membership (the cone must
/// be `cone(gens)`), with memoized failures.
pub fn monoid_member(target: &[Int], gens: &[Vec<Int>], cone: &PolyCone) -> Result<bool, Error> {
    fn dfs(
        x: Vec<Int>,
        gens: &[Vec<Int>],
        cone: &PolyCone,
        failed: &mut HashSet<Vec<Int>>,
    ) -> Result<bool, Error> {
        if x.iter().all(|v| v.is_zero()) {
            return Ok(true);
        }
        if failed.contains(&x) {
            return Ok(false);
        }
        for g in gens {
            let y: Vec<Int> = x.iter().zip(g).map(|(a, b)| a - b).collect();
            if cone.member(&RatVector::from_ints(&y))? && dfs(y, gens, cone, failed)? {
                return Ok(true);
            }
        }
        failed.insert(x);
        Ok(false)
    }
    if !cone.member(&RatVector::from_ints(target))? {
        return Ok(false);
    }
    let gens: Vec<Vec<Int>> = gens
        .iter()
        .filter(|g| g.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    dfs(target.to_vec(), &gens, cone, &mut HashSet::new())
}

/// Saturation check for the monoid generated by `gens` inside its lattice:
/// returns the first Hilbert-basis element of `lattice ∩ ℚ⁺gens` missing from
/// the monoid, or `None` when the monoid is saturated.
pub fn saturation_witness(
    gens: &[Vec<Int>],
    lattice: &LatticeBasis,
) -> Result<Option<Vec<Int>>, Error> {
    let nonzero: Vec<Vec<Int>> = gens
        .iter()
        .filter(|g| g.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Ok(None);
    }
    let r = lattice.rank();
    let mut z_gens: Vec<Vec<Int>> = Vec::with_capacity(nonzero.len());
    for g in &nonzero {
        let coords = lattice.coords(g)?.ok_or(Error::NotInLattice)?;
        z_gens.push(coords);
    }
    let z_cone = PolyCone::from_generators(
        r,
        z_gens.iter().map(|z| RatVector::from_ints(z)).collect(),
    )?;
    if !z_cone.is_pointed() {
        return Err(Error::ConeNotPointed);
    }
    let hb = hilbert_basis(&z_cone, &LatticeBasis::standard(r))?;
    for h in &hb {
        if !monoid_member(h, &z_gens, &z_cone)? {
            return Ok(Some(lattice.from_coords(h)));
        }
    }
    Ok(None)
}

/// True iff the monoid generated by `gens` equals `lattice ∩ ℚ⁺gens`.
pub fn is_saturated(gens: &[Vec<Int>], lattice: &LatticeBasis) -> Result<bool, Error> {
    Ok(saturation_witness(gens, lattice)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(v: &[i64]) -> RatVector {
        RatVector::from_i64(v)
    }

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn cone(dim: usize, gens: &[&[i64]]) -> PolyCone {
        PolyCone::from_generators(dim, gens.iter().map(|g| rv(g)).collect()).unwrap()
    }

    #[test]
    fn dual_of_plane_cone() {
        let d = dual_cone(2, &[rv(&[3, 0]), rv(&[1, 1])]).unwrap();
        assert_eq!(d.rays().unwrap(), &[rv(&[0, 1]), rv(&[1, -1])]);
    }

    #[test]
    fn orthant_is_self_dual() {
        let d = dual_cone(2, &[rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        assert_eq!(d.rays().unwrap(), &[rv(&[0, 1]), rv(&[1, 0])]);
    }

    #[test]
    fn dual_of_zero_cone_is_everything() {
        let d = dual_cone(2, &[]).unwrap();
        assert!(!d.is_pointed());
        assert!(d.member(&rv(&[-7, 5])).unwrap());
        assert!(d.rays().is_err());
    }

    #[test]
    fn extremal_rays_drop_redundant_generators() {
        let c = cone(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        assert_eq!(c.rays().unwrap(), &[rv(&[1, 0]), rv(&[1, 2])]);
    }

    #[test]
    fn simplicial_rays_are_primitive_generators() {
        let c = cone(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        assert_eq!(
            c.rays().unwrap(),
            &[rv(&[0, 0, 1]), rv(&[0, 1, 0]), rv(&[1, 0, 0])]
        );
    }

    #[test]
    fn membership_basics() {
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        assert!(c.member(&rv(&[0, 0])).unwrap());
        assert!(c.member(&rv(&[3, 5])).unwrap());
        assert!(!c.member(&rv(&[-1, 0])).unwrap());
        assert!(c.member(&rv(&[1, 2, 3])).is_err());
    }

    #[test]
    fn membership_respects_span_equations() {
        let c = cone(3, &[&[1, 1, 0]]);
        assert!(c.member(&rv(&[2, 2, 0])).unwrap());
        assert!(!c.member(&rv(&[2, 2, 1])).unwrap());
        assert!(!c.member(&rv(&[-1, -1, 0])).unwrap());
    }

    #[test]
    fn dual_involution_on_pointed_full_cones() {
        for gens in [vec![iv(&[1, 0]), iv(&[1, 3])], vec![iv(&[2, 1]), iv(&[1, 2])]] {
            let c = PolyCone::from_generators(
                2,
                gens.iter().map(|g| RatVector::from_ints(g)).collect(),
            )
            .unwrap();
            let dd = dual_cone(2, c.generators()).unwrap();
            let back = dual_cone(2, dd.generators()).unwrap();
            assert!(cone_equal(&c, &back).unwrap());
        }
    }

    #[test]
    fn cone_equality_examples() {
        let a = cone(2, &[&[1, 0], &[0, 1]]);
        let b = cone(2, &[&[0, 1], &[1, 0], &[1, 1]]);
        assert!(cone_equal(&a, &b).unwrap());
        let half = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(!cone_equal(&a, &half).unwrap());
        let c1 = cone(2, &[&[1, 0], &[1, 2]]);
        let c2 = cone(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        assert!(cone_equal(&c1, &c2).unwrap());
    }

    #[test]
    fn generated_with_halfspace_trivial_cases() {
        let k = cone(2, &[&[1, 0], &[0, 1]]);
        // σ = 0: the halfspace is everything, so rays of K certify themselves.
        let rays: Vec<RatVector> = k.rays().unwrap().to_vec();
        assert!(generated_with_halfspace(&k, &rays, &rv(&[0, 0])).unwrap());
        assert!(generated_with_halfspace(&k, &[], &rv(&[0, 0])).unwrap());
        // An element of S outside K forces false.
        assert!(!generated_with_halfspace(&k, &[rv(&[-1, 0])], &rv(&[0, 0])).unwrap());
    }

    #[test]
    fn generated_with_halfspace_with_rays_of_k_is_always_true() {
        let k = cone(3, &[&[1, 0, 0], &[1, 2, 0], &[0, 0, 1], &[1, 1, 1]]);
        let rays: Vec<RatVector> = k.rays().unwrap().to_vec();
        for sigma in [rv(&[1, 1, 1]), rv(&[-1, 2, 0]), rv(&[0, 0, -5])] {
            assert!(generated_with_halfspace(&k, &rays, &sigma).unwrap());
        }
    }

    #[test]
    fn hilbert_basis_examples() {
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        let hb = hilbert_basis(&c, &LatticeBasis::standard(2)).unwrap();
        assert_eq!(hb, vec![iv(&[1, 0]), iv(&[1, 1]), iv(&[1, 2])]);

        // Unimodular simplicial cone: just the ray generators.
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        let hb = hilbert_basis(&c, &LatticeBasis::standard(2)).unwrap();
        assert_eq!(hb, vec![iv(&[0, 1]), iv(&[1, 0])]);

        // (1,1) = (1,0) + (0,1) with both summands in the cone, so it is
        // reducible and stays out of the minimal generating set.
        let c = cone(2, &[&[2, -1], &[-1, 2]]);
        let hb = hilbert_basis(&c, &LatticeBasis::standard(2)).unwrap();
        assert_eq!(hb, vec![iv(&[-1, 2]), iv(&[0, 1]), iv(&[1, 0]), iv(&[2, -1])]);
    }

    #[test]
    fn hilbert_basis_requires_pointed() {
        let c = cone(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(
            hilbert_basis(&c, &LatticeBasis::standard(2)).unwrap_err(),
            Error::ConeNotPointed
        );
    }

    #[test]
    fn saturation_examples() {
        // ⟨2, 3⟩ in ℤ: not saturated, witness 1.
        let lat = LatticeBasis::from_generators(1, &[iv(&[2]), iv(&[3])]);
        let w = saturation_witness(&[iv(&[2]), iv(&[3])], &lat).unwrap();
        assert_eq!(w, Some(iv(&[1])));

        // ⟨(1,0),(1,2)⟩ is saturated in its own span ℤ{(1,0),(0,2)}, which
        // misses (1,1); adding (3,1) widens the lattice to ℤ² and breaks
        // saturation with witness (1,1).
        let lat = LatticeBasis::from_generators(2, &[iv(&[1, 0]), iv(&[1, 2])]);
        assert!(is_saturated(&[iv(&[1, 0]), iv(&[1, 2])], &lat).unwrap());
        let lat = LatticeBasis::standard(2);
        assert!(is_saturated(&[iv(&[1, 0]), iv(&[1, 1]), iv(&[1, 2])], &lat).unwrap());
        let w = saturation_witness(&[iv(&[1, 0]), iv(&[1, 2]), iv(&[3, 1])], &lat).unwrap();
        assert_eq!(w, Some(iv(&[1, 1])));
    }

    #[test]
    fn monoid_membership_and_bound() {
        let gens = [iv(&[1, 0]), iv(&[1, 2])];
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        assert!(monoid_member(&iv(&[3, 2]), &gens, &c).unwrap());
        assert!(!monoid_member(&iv(&[1, 1]), &gens, &c).unwrap());
        assert!(monoid_member(&iv(&[0, 0]), &gens, &c).unwrap());

        // The documented coefficient bound holds on a constructed
        // representation: h = 4·(1,0) + 2·(1,2).
        let h = iv(&[6, 4]);
        let b0 = coefficient_bound(&h, &gens[0], &c).unwrap();
        let b1 = coefficient_bound(&h, &gens[1], &c).unwrap();
        assert!(b0 >= Rat::from_integer(Int::from(4)));
        assert!(b1 >= Rat::from_integer(Int::from(2)));
    }

    #[test]
    fn rays_removal_strictly_shrinks() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 3]]);
        let rays = c.rays().unwrap().to_vec();
        for (i, r) in rays.iter().enumerate() {
            let rest: Vec<RatVector> =
                rays.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
            let smaller = PolyCone::from_generators(3, rest).unwrap();
            assert!(!smaller.member(r).unwrap(), "ray {i} was redundant");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn nonneg_combinations_are_members(
                gens in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 1..4),
                coeffs in proptest::collection::vec(0i64..=3, 3),
            ) {
                let rat_gens: Vec<RatVector> = gens.iter().map(|g| rv(g)).collect();
                let c = PolyCone::from_generators(3, rat_gens).unwrap();
                let mut point = vec![0i64; 3];
                for (g, &k) in gens.iter().zip(&coeffs) {
                    for (p, v) in point.iter_mut().zip(g) {
                        *p += k * v;
                    }
                }
                prop_assert!(c.member(&rv(&point)).unwrap());
            }

            #[test]
            fn facet_violations_are_rejected(
                gens in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..4),
            ) {
                let rat_gens: Vec<RatVector> = gens.iter().map(|g| rv(g)).collect();
                let c = PolyCone::from_generators(3, rat_gens).unwrap();
                for f in c.facets() {
                    // A point strictly on the negative side of a facet,
                    // inside the span, is not a member.
                    let outside = f.neg();
                    if c.equations().iter().all(|e| e.dot(&outside).is_zero()) {
                        prop_assert!(!c.member(&outside).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn zero_dimensional_cone() {
        let c = PolyCone::from_generators(0, vec![]).unwrap();
        assert!(c.is_pointed());
        assert!(c.member(&RatVector::new(vec![])).unwrap());
        assert!(c.rays().unwrap().is_empty());
        let hb = hilbert_basis(&c, &LatticeBasis::standard(0)).unwrap();
        assert!(hb.is_empty());
    }
}

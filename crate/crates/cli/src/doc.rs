//! JSON documents: the input description of a group plus monoid generators,
//! and the report mirror of the analysis output.
//!
//! Conventions: weights are integer arrays in fundamental-weight coordinates
//! (per factor, Bourbaki order) followed by torus characters; functionals
//! are arrays of exact fraction strings giving values on the reported
//! lattice basis; simple roots are named `a1..aN` with global 1-based
//! indices across factors, and coroots `a1v..aNv`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sphmod::moduli::{ModuliReport, Verdict};
use sphmod::rootsys::{self, GroupSpec, RootSystem, Series, Weight};
use sphmod::spherical::{sigma_root_coefficients, Functional};
use sphmod::zlinalg::{solve_rational, RatVector};
use sphmod::{Error, Int, Rat};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    pub series: String,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub factors: Vec<FactorDoc>,
    #[serde(default)]
    pub torus_rank: usize,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InputOptions {
    #[serde(default)]
    pub assume_saturated: bool,
}

/// Parsed analysis input.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub group: GroupDoc,
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub options: InputOptions,
}

impl GroupDoc {
    pub fn to_spec(&self) -> Result<GroupSpec, Error> {
        let mut factors = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            let mut chars = f.series.chars();
            let (Some(letter), None) = (chars.next(), chars.next()) else {
                return Err(Error::InvalidGroup(format!(
                    "series must be a single letter A..G, got {:?}",
                    f.series
                )));
            };
            let series = Series::from_letter(letter).ok_or_else(|| {
                Error::InvalidGroup(format!("unknown series letter {letter:?}"))
            })?;
            factors.push((series, f.rank));
        }
        Ok(GroupSpec { factors, torus_rank: self.torus_rank })
    }

    pub fn from_spec(spec: &GroupSpec) -> GroupDoc {
        GroupDoc {
            factors: spec
                .factors
                .iter()
                .map(|&(s, r)| FactorDoc { series: s.letter().to_string(), rank: r })
                .collect(),
            torus_rank: spec.torus_rank,
        }
    }
}

impl InputDocument {
    pub fn weights(&self) -> Vec<Weight> {
        self.generators.iter().map(|g| Weight::from_i64(g)).collect()
    }
}

/// `"B2xA1+T1"` → factors joined by `x`, torus ranks as `Tk` tokens.
pub fn parse_group_string(s: &str) -> Result<GroupSpec, Error> {
    let mut factors = Vec::new();
    let mut torus_rank = 0usize;
    for token in s.replace('+', "x").split('x') {
        let token = token.trim();
        if token.is_empty() {
            return Err(Error::InvalidGroup(format!("empty factor in {s:?}")));
        }
        let (letter, digits) = token.split_at(1);
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::InvalidGroup(format!("bad rank in factor {token:?}")))?;
        if letter.eq_ignore_ascii_case("T") {
            torus_rank += rank;
            continue;
        }
        let series = Series::from_letter(letter.chars().next().unwrap())
            .ok_or_else(|| Error::InvalidGroup(format!("unknown series in {token:?}")))?;
        factors.push((series, rank));
    }
    Ok(GroupSpec { factors, torus_rank })
}

fn int_to_i64(v: &Int) -> Result<i64, Error> {
    i64::try_from(v.clone())
        .map_err(|_| Error::Internal("report value exceeds the document integer range".into()))
}

fn weight_to_doc(w: &Weight) -> Result<Vec<i64>, Error> {
    w.coords.iter().map(int_to_i64).collect()
}

fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// Renders Σ c_i · term(i), skipping zeros and unit coefficients.
fn render_terms(coeffs: &[Rat], term: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign_negative = c.is_negative();
        let abs = c.clone().abs();
        if out.is_empty() {
            if sign_negative {
                out.push('-');
            }
        } else {
            out.push(if sign_negative { '-' } else { '+' });
        }
        if !abs.is_one() {
            out.push_str(&format!("{}*", rat_string(&abs)));
        }
        out.push_str(&term(i));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Renders a simple-root combination as `a1+2*a2`.
pub fn render_root_combination(coeffs: &[Rat]) -> String {
    render_terms(coeffs, |i| format!("a{}", i + 1))
}

/// A functional in both shipped forms: exact values on the lattice basis and
/// (when one exists) an expression as a rational combination of coroots.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FunctionalDoc {
    pub values: Vec<String>,
    pub coroots: Option<String>,
}

fn functional_to_doc(f: &Functional, iota: &[Functional], rank: usize) -> FunctionalDoc {
    let values = f.entries().iter().map(rat_string).collect();
    // Solve f = Σ c_a ι(α_a^∨); the expression exists iff f lies in the span
    // of the restricted coroots. Free coefficients are set to zero, so the
    // rendered combination is one valid choice.
    let rows: Vec<RatVector> = (0..rank)
        .map(|r| RatVector::new(iota.iter().map(|i| i.get(r).clone()).collect()))
        .collect();
    let coroots = solve_rational(&rows, f)
        .ok()
        .flatten()
        .map(|c| render_terms(c.entries(), |i| format!("a{}v", i + 1)));
    FunctionalDoc { values, coroots }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ColorPairDoc {
    pub alpha: usize,
    pub rho_plus: FunctionalDoc,
    pub rho_minus: FunctionalDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SigmaDoc {
    pub coords: Vec<i64>,
    pub rendered: String,
    pub table_row: u8,
    pub halved: bool,
    pub in_root_lattice: bool,
    pub spherically_closed: bool,
    /// 1-based global simple-root indices.
    pub support: Vec<usize>,
    pub pi_pp: Vec<usize>,
    pub color_pair: Option<ColorPairDoc>,
    pub distinguished: bool,
    pub sigma_bar: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    /// 0-based indices into the `sigma` array.
    pub roots: Vec<usize>,
    pub dimension: usize,
    pub root_monoid_generators: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FlagsDoc {
    pub irreducible: bool,
    pub is_affine_space: String,
    pub nonreduced_point: bool,
    pub tangent_dimension: usize,
    pub max_component_dimension: usize,
}

/// JSON mirror of the analysis report. Serialization is canonical: fixed
/// field order, lowest-terms fractions, sorted arrays; re-parsing and
/// re-serializing is byte-stable.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema_version: String,
    pub group: GroupDoc,
    pub generators: Vec<Vec<i64>>,
    pub indecomposable_generators: Vec<Vec<i64>>,
    pub saturated: bool,
    pub saturation_assumed: bool,
    pub g_saturated: Option<bool>,
    /// 1-based global simple-root indices.
    pub pi_p: Vec<usize>,
    pub lattice_basis: Vec<Vec<i64>>,
    pub k1: Vec<FunctionalDoc>,
    pub sigma: Vec<SigmaDoc>,
    /// 0-based index pairs into `sigma`.
    pub admissible_edges: Vec<Vec<usize>>,
    pub components: Vec<ComponentDoc>,
    /// 1-based global simple-root indices.
    pub dev: Vec<usize>,
    pub dev_rendered: Vec<String>,
    pub sigma_bar: Vec<Vec<i64>>,
    pub phi: Vec<Vec<i64>>,
    pub phi_overlap: bool,
    pub flags: FlagsDoc,
}

fn verdict_string(v: Verdict) -> String {
    match v {
        Verdict::Yes => "yes".into(),
        Verdict::No => "no".into(),
        Verdict::Undetermined => "undetermined".into(),
    }
}

pub fn report_to_document(report: &ModuliReport) -> Result<ReportDocument, Error> {
    let rs: RootSystem = rootsys::build(report.group.clone())?;
    let rank = report.lattice_basis.len();
    let sigma = report
        .sigma
        .iter()
        .map(|e| {
            let coeffs = sigma_root_coefficients(&rs, &e.root);
            Ok(SigmaDoc {
                coords: weight_to_doc(&e.root.sigma)?,
                rendered: render_root_combination(&coeffs),
                table_row: e.root.table_row,
                halved: e.root.halved,
                in_root_lattice: e.root.in_root_lattice,
                spherically_closed: e.root.spherically_closed,
                support: e.root.ordered_support.iter().map(|&i| i + 1).collect(),
                pi_pp: e.root.pi_pp.iter().map(|&i| i + 1).collect(),
                color_pair: e.color_pair.as_ref().map(|cp| ColorPairDoc {
                    alpha: cp.alpha + 1,
                    rho_plus: functional_to_doc(&cp.rho_plus, &report.iota, rank),
                    rho_minus: functional_to_doc(&cp.rho_minus, &report.iota, rank),
                }),
                distinguished: e.distinguished,
                sigma_bar: weight_to_doc(&e.sigma_bar)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;

    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION.into(),
        group: GroupDoc::from_spec(&report.group),
        generators: report
            .raw_generators
            .iter()
            .map(weight_to_doc)
            .collect::<Result<_, _>>()?,
        indecomposable_generators: report
            .generators
            .iter()
            .map(weight_to_doc)
            .collect::<Result<_, _>>()?,
        saturated: report.saturated,
        saturation_assumed: report.saturation_assumed,
        g_saturated: report.g_saturated,
        pi_p: report.pi_p.iter().map(|&i| i + 1).collect(),
        lattice_basis: report
            .lattice_basis
            .iter()
            .map(|row| row.iter().map(int_to_i64).collect())
            .collect::<Result<_, _>>()?,
        k1: report
            .k1
            .iter()
            .map(|f| functional_to_doc(f, &report.iota, rank))
            .collect(),
        sigma,
        admissible_edges: report.graph.edges.iter().map(|&(i, j)| vec![i, j]).collect(),
        components: report
            .components
            .iter()
            .map(|c| {
                Ok(ComponentDoc {
                    roots: c.roots.clone(),
                    dimension: c.dimension,
                    root_monoid_generators: c
                        .root_monoid_generators
                        .iter()
                        .map(weight_to_doc)
                        .collect::<Result<_, _>>()?,
                })
            })
            .collect::<Result<Vec<_>, Error>>()?,
        dev: report.dev.iter().map(|&i| i + 1).collect(),
        dev_rendered: report.dev.iter().map(|&i| format!("a{}", i + 1)).collect(),
        sigma_bar: report
            .sigma_bar
            .iter()
            .map(weight_to_doc)
            .collect::<Result<_, _>>()?,
        phi: report.phi.iter().map(weight_to_doc).collect::<Result<_, _>>()?,
        phi_overlap: report.phi_overlap,
        flags: FlagsDoc {
            irreducible: report.irreducible,
            is_affine_space: verdict_string(report.is_affine_space),
            nonreduced_point: report.nonreduced_point,
            tangent_dimension: report.tangent_dimension,
            max_component_dimension: report.max_component_dimension,
        },
    })
}

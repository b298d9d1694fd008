//! Pinned equations, coordinates and distinguished linear subspaces of every case.

mod cases;
pub mod g8;
mod rank_locus;

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::linalg::{rational_inverse, rational_kernel, rational_rank};
use crate::algebra::{ring, Polynomial};
use crate::error::{Error, Result};

pub use cases::{build_case, p3_spec, plucker_ideal, plucker_pairs, plucker_ring};
pub use rank_locus::{g4_matrix, m_q, rank_locus, rank_locus_member, RankLocusSpec, RankRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    G4SigmaBar,
    G5SigmaBar,
    G6qAQ,
    G6qSigmaBar,
    G6cAC,
    G6cSigmaBar,
    G8SigmaBar,
    Grass25,
    Grass26,
    B5,
    B6,
    Q3G6q,
}

impl CaseId {
    pub const ALL: [CaseId; 12] = [
        CaseId::G4SigmaBar,
        CaseId::G5SigmaBar,
        CaseId::G6qAQ,
        CaseId::G6qSigmaBar,
        CaseId::G6cAC,
        CaseId::G6cSigmaBar,
        CaseId::G8SigmaBar,
        CaseId::Grass25,
        CaseId::Grass26,
        CaseId::B5,
        CaseId::B6,
        CaseId::Q3G6q,
    ];

    /// The five extended mid points, in genus order.
    pub const SIGMA_BAR: [CaseId; 5] = [
        CaseId::G4SigmaBar,
        CaseId::G5SigmaBar,
        CaseId::G6qSigmaBar,
        CaseId::G6cSigmaBar,
        CaseId::G8SigmaBar,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::G4SigmaBar => "g4_sigma_bar",
            CaseId::G5SigmaBar => "g5_sigma_bar",
            CaseId::G6qAQ => "g6q_AQ",
            CaseId::G6qSigmaBar => "g6q_sigma_bar",
            CaseId::G6cAC => "g6c_AC",
            CaseId::G6cSigmaBar => "g6c_sigma_bar",
            CaseId::G8SigmaBar => "g8_sigma_bar",
            CaseId::Grass25 => "grass_2_5",
            CaseId::Grass26 => "grass_2_6",
            CaseId::B5 => "B5",
            CaseId::B6 => "B6",
            CaseId::Q3G6q => "Q3_g6q",
        }
    }

    /// Accepts full ids and the short family keys `g4`, `g5`, `g6q`, `g6c`, `g8`.
    pub fn parse(s: &str) -> Result<CaseId> {
        let short = match s {
            "g4" => Some(CaseId::G4SigmaBar),
            "g5" => Some(CaseId::G5SigmaBar),
            "g6q" => Some(CaseId::G6qSigmaBar),
            "g6c" => Some(CaseId::G6cSigmaBar),
            "g8" => Some(CaseId::G8SigmaBar),
            _ => None,
        };
        short
            .or_else(|| CaseId::ALL.into_iter().find(|c| c.as_str() == s))
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }

    /// Family key of the mid point a case belongs to, if any.
    pub fn family(self) -> Option<&'static str> {
        match self {
            CaseId::G4SigmaBar => Some("g4"),
            CaseId::G5SigmaBar => Some("g5"),
            CaseId::G6qSigmaBar | CaseId::G6qAQ | CaseId::Q3G6q => Some("g6q"),
            CaseId::G6cSigmaBar | CaseId::G6cAC => Some("g6c"),
            CaseId::G8SigmaBar | CaseId::B5 => Some("g8"),
            _ => None,
        }
    }
}

/// Classification data carried along with each mid point. `e`, `deg_c` and
/// `genus_c` are metadata only and never checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub genus: u32,
    pub num_half_points_n: u32,
    pub e: u32,
    pub deg_c: u32,
    pub genus_c: u32,
    pub x_prime: &'static str,
}

/// A linear subspace given by independent linear forms vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    pub name: String,
    pub forms: Vec<Polynomial>,
    /// Whether the variety is claimed to contain the plane.
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    pub case_id: String,
    pub ambient_dim: usize,
    pub vars: Arc<Vec<String>>,
    pub generators: Vec<Polynomial>,
    pub planes: Vec<Plane>,
    pub expected_dim: usize,
    pub metadata: Option<CaseRecord>,
}

impl VarietySpec {
    pub fn plane(&self, name: &str) -> Result<&Plane> {
        self.planes
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownPlane(name.to_string()))
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.expected_dim
    }

    /// Canonical text form: `#` headers, then one generator per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# case {}", self.case_id).unwrap();
        writeln!(s, "# ambient_dim {}", self.ambient_dim).unwrap();
        writeln!(s, "# expected_dim {}", self.expected_dim).unwrap();
        writeln!(s, "# vars {}", self.vars.join(",")).unwrap();
        if let Some(m) = &self.metadata {
            writeln!(
                s,
                "# record genus={} half_points={} e={} deg_c={} genus_c={} x_prime={}",
                m.genus, m.num_half_points_n, m.e, m.deg_c, m.genus_c, m.x_prime
            )
            .unwrap();
        }
        for pl in &self.planes {
            let forms: Vec<String> = pl.forms.iter().map(|f| f.to_string()).collect();
            let tag = if pl.contained { "contained" } else { "tracked" };
            writeln!(s, "# plane {} {}: {}", pl.name, tag, forms.join(" | ")).unwrap();
        }
        for g in &self.generators {
            writeln!(s, "{g}").unwrap();
        }
        s
    }
}

fn to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

fn linear_matrix(forms: &[Polynomial]) -> Result<Vec<Vec<BigRational>>> {
    forms
        .iter()
        .map(|f| {
            f.linear_coefficients()
                .map(|row| row.iter().map(to_rational).collect())
                .ok_or_else(|| Error::Dimension(format!("{f} is not a linear form")))
        })
        .collect()
}

/// Rank over Q of the coefficient matrix of linear forms.
pub fn linear_rank(forms: &[Polynomial]) -> Result<usize> {
    Ok(rational_rank(&linear_matrix(forms)?))
}

/// Integer basis (primitive vectors) of the common zero set of linear forms.
pub fn plane_basis(forms: &[Polynomial], arity: usize) -> Result<Vec<Vec<BigInt>>> {
    let m = linear_matrix(forms)?;
    let kernel = if m.is_empty() {
        (0..arity)
            .map(|i| {
                (0..arity)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect()
    } else {
        rational_kernel(&m, arity)
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            v.iter().map(|c| (c * to_rational(&den)).to_integer()).collect()
        })
        .collect())
}

/// Substitutes a parametrization of a linear subspace into `f` (characteristic 0).
pub fn restrict_to_plane(f: &Polynomial, basis: &[Vec<BigInt>]) -> Polynomial {
    let names: Vec<String> = (1..=basis.len()).map(|i| format!("t{i}")).collect();
    let params = Arc::new(names);
    let images: Vec<Polynomial> = (0..f.arity())
        .map(|i| {
            let mut img = Polynomial::zero(&params);
            for (k, v) in basis.iter().enumerate() {
                let mut m = vec![0; basis.len()];
                m[k] = 1;
                img.add_term(m, v[i].clone());
            }
            img
        })
        .collect();
    f.substitute(&images)
}

/// True iff every generator vanishes identically on the named plane.
pub fn plane_containment_check(spec: &VarietySpec, plane_name: &str) -> Result<bool> {
    let plane = spec.plane(plane_name)?;
    let basis = plane_basis(&plane.forms, spec.vars.len())?;
    Ok(spec.generators.iter().all(|g| restrict_to_plane(g, &basis).is_zero()))
}

/// Change of coordinates turning `y^T M0 x` into `y^T x'` via `x' = M0 x`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingChange {
    /// `x' = forward * x`.
    pub forward: Vec<Vec<BigRational>>,
    /// `x = substitution * x'`; substituting this into `y^T M0 x` gives `y^T x'`.
    pub substitution: Vec<Vec<BigRational>>,
}

pub fn normalize_pairing(m0: &[Vec<BigRational>]) -> Result<PairingChange> {
    if m0.len() != 3 || m0.iter().any(|r| r.len() != 3) {
        return Err(Error::Dimension("pairing matrix must be 3x3".into()));
    }
    let inv = rational_inverse(m0)
        .ok_or_else(|| Error::SingularMatrix { rank: rational_rank(m0), size: 3 })?;
    Ok(PairingChange { forward: m0.to_vec(), substitution: inv })
}

/// Pinned unimodular shear `x_i -> x_i + x_{i+1}`; invertible over every F_p.
pub fn pinned_shear(arity: usize) -> Vec<Vec<i64>> {
    (0..arity)
        .map(|i| (0..arity).map(|j| i64::from(j == i || j == i + 1)).collect())
        .collect()
}

/// The spec of `{x : A x in V}` for an integer matrix `A`.
pub fn change_coordinates(spec: &VarietySpec, a: &[Vec<i64>]) -> VarietySpec {
    let images: Vec<Polynomial> = a.iter().map(|row| Polynomial::linear(&spec.vars, row)).collect();
    let pull = |f: &Polynomial| f.substitute(&images).rebase(&spec.vars);
    VarietySpec {
        case_id: format!("{}/sheared", spec.case_id),
        generators: spec.generators.iter().map(pull).collect(),
        planes: Vec::new(),
        ..spec.clone()
    }
}

pub(crate) fn coordinate_forms(vars: &Arc<Vec<String>>, names: &[&str]) -> Vec<Polynomial> {
    names
        .iter()
        .map(|n| {
            let i = vars.iter().position(|v| v == n).expect("declared variable");
            Polynomial::var(vars, i)
        })
        .collect()
}

pub(crate) fn names(prefix: &str, idx: impl IntoIterator<Item = impl std::fmt::Display>) -> Vec<String> {
    idx.into_iter().map(|i| format!("{prefix}{i}")).collect()
}

pub(crate) fn ring_of(names: &[String]) -> Arc<Vec<String>> {
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    ring(&refs)
}

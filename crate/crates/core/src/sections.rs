//! Linear sections of catalog varieties, pinned or drawn from a seeded generator.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::linalg::rational_kernel;
use crate::algebra::{matrix_rank_mod_p, parse_poly, Polynomial, SmallPrime};
use crate::catalog::{linear_rank, plane_basis, restrict_to_plane, VarietySpec};
use crate::error::{Error, Result};
use crate::invariants::{
    count_points, floor_dimension, log_nearest_dimension, singular_scan, ScanOptions,
};

/// Redraws allowed before a seeded draw gives up.
pub const MAX_DRAWS: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSpec {
    pub linear_forms: Vec<Polynomial>,
    /// Seed the forms were drawn from, if any.
    pub seed: Option<u64>,
    /// Draws consumed by the seeded generator, including the accepted one.
    pub draws: u32,
    pub contains_planes: Vec<String>,
}

impl SectionSpec {
    pub fn pinned(linear_forms: Vec<Polynomial>, contains_planes: Vec<String>) -> Self {
        SectionSpec { linear_forms, seed: None, draws: 0, contains_planes }
    }

    /// `count` forms with integer coefficients in `[-radius, radius]`, redrawn until
    /// independent mod `p`. With planes given, forms are combinations of a basis of
    /// the linear forms vanishing on all of them.
    pub fn seeded(
        base: &VarietySpec,
        count: usize,
        seed: u64,
        p: SmallPrime,
        contains_planes: &[&str],
    ) -> Result<Self> {
        let arity = base.vars.len();
        let directions: Vec<Vec<BigInt>> = if contains_planes.is_empty() {
            (0..arity).map(|i| (0..arity).map(|j| BigInt::from(u8::from(i == j))).collect()).collect()
        } else {
            let mut rows: Vec<Vec<BigRational>> = Vec::new();
            for name in contains_planes {
                let plane = base.plane(name)?;
                for v in plane_basis(&plane.forms, arity)? {
                    rows.push(v.into_iter().map(BigRational::from_integer).collect());
                }
            }
            rational_kernel(&rows, arity)
                .into_iter()
                .map(|v| {
                    let den = v.iter().fold(BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
                    v.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect()
                })
                .collect()
        };
        if directions.len() < count {
            return Err(Error::Dimension(format!(
                "only {} independent forms vanish on the requested planes",
                directions.len()
            )));
        }
        let radius = p.get() as i64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for draw in 1..=MAX_DRAWS {
            let forms: Vec<Vec<BigInt>> = (0..count)
                .map(|_| {
                    let mut acc = vec![BigInt::from(0); arity];
                    for d in &directions {
                        let c = BigInt::from(rng.gen_range(-radius..=radius));
                        for (a, x) in acc.iter_mut().zip(d) {
                            *a += &c * x;
                        }
                    }
                    acc
                })
                .collect();
            let reduced: Vec<Vec<u64>> =
                forms.iter().map(|f| f.iter().map(|c| p.reduce_bigint(c)).collect()).collect();
            if matrix_rank_mod_p(&reduced, p) == count {
                let linear_forms = forms
                    .iter()
                    .map(|f| {
                        let mut poly = Polynomial::zero(&base.vars);
                        for (i, c) in f.iter().enumerate() {
                            let mut m = vec![0; arity];
                            m[i] = 1;
                            poly.add_term(m, c.clone());
                        }
                        poly
                    })
                    .collect();
                return Ok(SectionSpec {
                    linear_forms,
                    seed: Some(seed),
                    draws: draw,
                    contains_planes: contains_planes.iter().map(|s| s.to_string()).collect(),
                });
            }
        }
        Err(Error::DependentForms)
    }
}

/// Adds the section's forms to the base generators.
///
/// Planes stay declared; a plane keeps its containment claim only if every form vanishes on it.
pub fn cut(base: &VarietySpec, section: &SectionSpec) -> Result<VarietySpec> {
    let forms = &section.linear_forms;
    let arity = base.vars.len();
    if let Some(f) = forms.iter().find(|f| f.arity() != arity || f.total_degree().is_some_and(|d| d != 1)) {
        return Err(Error::Dimension(format!("{f} is not a linear form on the base ring")));
    }
    if forms.iter().any(|f| f.is_zero()) || linear_rank(forms)? < forms.len() {
        return Err(Error::DependentForms);
    }
    if forms.len() > base.expected_dim {
        return Err(Error::Dimension(format!(
            "cutting {} forms exceeds dimension {}",
            forms.len(),
            base.expected_dim
        )));
    }
    let vanishes_on = |name: &str| -> Result<Option<String>> {
        let plane = base.plane(name)?;
        let basis = plane_basis(&plane.forms, arity)?;
        Ok(forms.iter().find(|f| !restrict_to_plane(f, &basis).is_zero()).map(|f| f.to_string()))
    };
    for name in &section.contains_planes {
        if let Some(form) = vanishes_on(name)? {
            return Err(Error::PlaneViolation { form, plane: name.clone() });
        }
    }
    let mut out = base.clone();
    out.generators.extend(forms.iter().cloned());
    out.expected_dim -= forms.len();
    for pl in out.planes.iter_mut() {
        if pl.contained {
            pl.contained = vanishes_on(&pl.name)?.is_none();
        }
    }
    Ok(out)
}

/// One linear form per line in the polynomial grammar; `#` starts a comment.
pub fn parse_section_file(text: &str, base: &VarietySpec) -> Result<Vec<Polynomial>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let body = l.split('#').next().unwrap().trim();
            (!body.is_empty()).then_some((i + 1, body))
        })
        .map(|(line, body)| {
            parse_poly(body, &base.vars).map_err(|e| Error::Config { line, msg: e.to_string() })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionPrimeReport {
    pub prime: u64,
    pub count: u64,
    pub floor_dim: Option<usize>,
    pub log_nearest_dim: Option<usize>,
    pub singular: u64,
    /// Singular points off the tracked plane, when one is tracked.
    pub singular_off_plane: Option<u64>,
    pub plane_points: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub expected_dim: usize,
    pub per_prime: Vec<SectionPrimeReport>,
    pub empty: bool,
}

/// Point count, dimension estimate and rational singular points of a section at each prime.
pub fn section_report(
    spec: &VarietySpec,
    primes: &[SmallPrime],
    tracked_plane: Option<&str>,
    opts: &ScanOptions,
) -> Result<SectionReport> {
    let mut per_prime = Vec::new();
    for &p in primes {
        let count = count_points(spec, p, &ScanOptions { sample_cap: 0, ..*opts })?.matched;
        let sing = singular_scan(spec, None, p, opts)?;
        let (singular_off_plane, plane_points) = match tracked_plane {
            Some(name) => {
                let plane = spec.plane(name)?;
                let mut with_plane = spec.clone();
                with_plane.generators.extend(plane.forms.iter().cloned());
                let on_plane = count_points(&with_plane, p, &ScanOptions { sample_cap: 0, ..*opts })?.matched;
                let sing_on = sing.singular_on_planes.get(name).copied().unwrap_or(0);
                (Some(sing.jacobian_singular - sing_on), Some(on_plane))
            }
            None => (None, None),
        };
        per_prime.push(SectionPrimeReport {
            prime: p.get(),
            count,
            floor_dim: floor_dimension(count, p),
            log_nearest_dim: log_nearest_dimension(count, p, spec.ambient_dim),
            singular: sing.jacobian_singular,
            singular_off_plane,
            plane_points,
        });
    }
    let empty = per_prime.iter().all(|r| r.count == 0);
    Ok(SectionReport { expected_dim: spec.expected_dim, per_prime, empty })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_case, CaseId};

    #[test]
    fn zero_forms_is_identity() {
        let base = build_case(CaseId::G6cSigmaBar);
        assert_eq!(cut(&base, &SectionSpec::pinned(Vec::new(), Vec::new())).unwrap(), base);
    }

    #[test]
    fn seeded_forms_respect_planes() {
        let base = build_case(CaseId::G8SigmaBar);
        let p = SmallPrime::new(3).unwrap();
        let s = SectionSpec::seeded(&base, 2, 7, p, &["pi"]).unwrap();
        let w = cut(&base, &s).unwrap();
        assert_eq!(w.expected_dim, 3);
        assert!(w.plane("pi").unwrap().contained);
        let again = SectionSpec::seeded(&base, 2, 7, p, &["pi"]).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn dependent_and_violating_forms_are_rejected() {
        let base = build_case(CaseId::G5SigmaBar);
        let x1 = Polynomial::var(&base.vars, 0);
        let y11 = Polynomial::var(&base.vars, 4);
        let dep = SectionSpec::pinned(vec![x1.clone(), x1.scale(&BigInt::from(2))], Vec::new());
        assert!(matches!(cut(&base, &dep), Err(Error::DependentForms)));
        let bad = SectionSpec::pinned(vec![y11], vec!["pibar".into()]);
        assert!(matches!(cut(&base, &bad), Err(Error::PlaneViolation { .. })));
        let ok = SectionSpec::pinned(vec![x1], vec!["pibar".into()]);
        assert_eq!(cut(&base, &ok).unwrap().expected_dim, 11);
    }

    #[test]
    fn section_file_comments_and_errors() {
        let base = build_case(CaseId::G5SigmaBar);
        let forms = parse_section_file("# header\nx1 - x2  # trailing\n\ny11 + 2*y34\n", &base).unwrap();
        assert_eq!(forms.len(), 2);
        let err = parse_section_file("x1\nq7\n", &base).unwrap_err();
        assert!(matches!(err, Error::Config { line: 2, .. }));
    }
}

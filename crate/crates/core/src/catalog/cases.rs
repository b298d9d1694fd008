use std::sync::Arc;

use itertools::Itertools;

use super::g8;
use super::{coordinate_forms, names, ring_of, CaseId, CaseRecord, Plane, VarietySpec};
use crate::algebra::{parse_poly, Polynomial};
use crate::error::{Error, Result};

/// Index pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
pub fn plucker_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).tuple_combinations().collect()
}

/// Variables `p12, p13, ...` of P(wedge^2 k^n); single-digit indices keep names unambiguous.
pub fn plucker_ring(n: usize) -> Result<Arc<Vec<String>>> {
    if !(2..=9).contains(&n) {
        return Err(Error::Dimension(format!("Plücker ring needs 2 <= n <= 9, got {n}")));
    }
    Ok(ring_of(&plucker_pairs(n).iter().map(|(i, j)| format!("p{i}{j}")).collect::<Vec<_>>()))
}

/// `p_ij p_kl - p_ik p_jl + p_il p_jk` for every `i<j<k<l`; C(n,4) quadrics.
pub fn plucker_ideal(n: usize) -> Result<Vec<Polynomial>> {
    if n < 4 {
        return Err(Error::Dimension(format!("Plücker ideal needs n >= 4, got {n}")));
    }
    let vars = plucker_ring(n)?;
    let pairs = plucker_pairs(n);
    let var = |a: usize, b: usize| {
        Polynomial::var(&vars, pairs.iter().position(|&pr| pr == (a, b)).unwrap())
    };
    Ok((1..=n)
        .tuple_combinations()
        .map(|(i, j, k, l)| {
            var(i, j)
                .mul(&var(k, l))
                .sub(&var(i, k).mul(&var(j, l)))
                .add(&var(i, l).mul(&var(j, k)))
        })
        .collect())
}

fn parse_all(vars: &Arc<Vec<String>>, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| parse_poly(t, vars).expect("catalog polynomial")).collect()
}

fn plane(vars: &Arc<Vec<String>>, name: &str, coords: &[String], contained: bool) -> Plane {
    let refs: Vec<&str> = coords.iter().map(|s| s.as_str()).collect();
    Plane { name: name.to_string(), forms: coordinate_forms(vars, &refs), contained }
}

fn spec(
    id: CaseId,
    vars: Arc<Vec<String>>,
    generators: Vec<Polynomial>,
    planes: Vec<Plane>,
    expected_dim: usize,
    metadata: Option<CaseRecord>,
) -> VarietySpec {
    VarietySpec {
        case_id: id.as_str().to_string(),
        ambient_dim: vars.len() - 1,
        vars,
        generators,
        planes,
        expected_dim,
        metadata,
    }
}

fn record(genus: u32, n: u32, e: u32, deg_c: u32, genus_c: u32, x_prime: &'static str) -> CaseRecord {
    CaseRecord { genus, num_half_points_n: n, e, deg_c, genus_c, x_prime }
}

fn g4() -> VarietySpec {
    let mut v = names("y", 1..=3);
    v.extend(names("x", 1..=3));
    let z = ["z11", "z12", "z13", "z21", "z22", "z23", "z31", "z32"];
    v.extend(z.iter().map(|s| s.to_string()));
    let vars = ring_of(&v);
    // z33 = -z11 - z22 (traceless M)
    let gens = parse_all(
        &vars,
        &[
            "y1*x1 + y2*x2 + y3*x3",
            "y1*z11*x1 + y1*z12*x2 + y1*z13*x3 + y2*z21*x1 + y2*z22*x2 + y2*z23*x3 \
             + y3*z31*x1 + y3*z32*x2 - y3*z11*x3 - y3*z22*x3",
        ],
    );
    let planes = vec![
        plane(&vars, "pibar1", &names("x", 1..=3), true),
        plane(&vars, "pibar2", &names("y", 1..=3), true),
    ];
    spec(CaseId::G4SigmaBar, vars, gens, planes, 11, Some(record(4, 2, 7, 7, 8, "P(1,1,1,2)")))
}

fn g5() -> VarietySpec {
    let mut v = names("x", 1..=4);
    for i in 1..=3 {
        v.extend(names("y", (1..=4).map(|j| 10 * i + j)));
    }
    let vars = ring_of(&v);
    let gens = (1..=3)
        .map(|i| {
            let row: Vec<String> = (1..=4).map(|j| format!("y{i}{j}*x{j}")).collect();
            parse_poly(&row.join(" + "), &vars).unwrap()
        })
        .collect();
    let planes = vec![plane(&vars, "pibar", &names("x", 1..=4), true)];
    spec(CaseId::G5SigmaBar, vars, gens, planes, 12, Some(record(5, 1, 6, 9, 9, "P3")))
}

const G6Q_X: [&str; 5] = ["x23", "x25", "x34", "x35", "x45"];
const G6Q_Y: [&str; 5] = ["y23", "y25", "y34", "y35", "y45"];

/// Rows of `N_Q x = 0` (x24 identified with x35) and the Plücker quadric.
const AQ_EQUATIONS: [&str; 5] = [
    "z4*x23 + z2*x34 - z3*x35",
    "z5*x23 - z3*x25 + z2*x35",
    "-z4*x25 + z5*x35 + z2*x45",
    "z5*x34 - z4*x35 + z3*x45",
    "x23*x45 - x35^2 + x25*x34",
];

fn g6q_vars(with_y: bool) -> Arc<Vec<String>> {
    let mut v = names("z", 2..=5);
    v.extend(G6Q_X.iter().map(|s| s.to_string()));
    if with_y {
        v.extend(G6Q_Y.iter().map(|s| s.to_string()));
    }
    ring_of(&v)
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn g6q_aq() -> VarietySpec {
    let vars = g6q_vars(false);
    let gens = parse_all(&vars, &AQ_EQUATIONS);
    let planes = vec![plane(&vars, "pi", &strings(&G6Q_X), true)];
    spec(CaseId::G6qAQ, vars, gens, planes, 5, None)
}

fn g6q() -> VarietySpec {
    let vars = g6q_vars(true);
    let mut gens = parse_all(&vars, &AQ_EQUATIONS);
    gens.extend(parse_all(&vars, &["x23*y23 + x25*y25 + x34*y34 + x35*y35 + x45*y45"]));
    let mut zx = names("z", 2..=5);
    zx.extend(strings(&G6Q_X));
    let planes = vec![
        plane(&vars, "pibar", &strings(&G6Q_X), true),
        plane(&vars, "u5dual", &zx, true),
    ];
    spec(CaseId::G6qSigmaBar, vars, gens, planes, 9, Some(record(6, 1, 5, 9, 6, "Q3")))
}

const AC_EQUATIONS: [&str; 5] = [
    "y4*x1 + y3*x2 + y2*x3",
    "y3*x1 + y2*x2 + y1*x3",
    "y5*x1 - y2^2 + y1*y3",
    "y5*x2 - y1*y4 + y2*y3",
    "y5*x3 - y3^2 + y2*y4",
];

fn g6c_vars(with_z: bool) -> Arc<Vec<String>> {
    let mut v = names("x", 1..=3);
    v.extend(names("y", 1..=5));
    if with_z {
        v.extend(names("z", 1..=5));
    }
    ring_of(&v)
}

fn g6c_ac() -> VarietySpec {
    let vars = g6c_vars(false);
    let gens = parse_all(&vars, &AC_EQUATIONS);
    let planes = vec![plane(&vars, "pi", &names("y", 1..=5), true)];
    spec(CaseId::G6cAC, vars, gens, planes, 4, None)
}

fn g6c() -> VarietySpec {
    let vars = g6c_vars(true);
    let mut gens = parse_all(&vars, &AC_EQUATIONS);
    gens.extend(parse_all(&vars, &["y1*z1 + y2*z2 + y3*z3 + y4*z4 + y5*z5"]));
    let planes = vec![plane(&vars, "pibar", &names("y", 1..=5), true)];
    spec(CaseId::G6cSigmaBar, vars, gens, planes, 8, Some(record(6, 1, 6, 3, 0, "B3")))
}

fn g8_case() -> VarietySpec {
    let vars = g8::sigma_ring();
    let gens = g8::sigma_generators(&vars);
    let y = strings(&g8::U7_FREE_NAMES);
    let mut pi = y.clone();
    pi.extend(names("x", 5..=6));
    let planes = vec![
        plane(&vars, "pibar", &y, true),
        plane(&vars, "pi", &pi, true),
        plane(&vars, "u7", &names("x", 2..=6), false),
    ];
    spec(CaseId::G8SigmaBar, vars, gens, planes, 5, Some(record(8, 1, 4, 7, 2, "B5")))
}

fn grass(id: CaseId, n: usize) -> VarietySpec {
    let vars = plucker_ring(n).unwrap();
    let gens: Vec<Polynomial> =
        plucker_ideal(n).unwrap().into_iter().map(|f| f.rebase(&vars)).collect();
    spec(id, vars, gens, Vec::new(), 2 * (n - 2), None)
}

fn b5() -> VarietySpec {
    let vars = g8::b5_ring();
    let gens = g8::b5_generators(&vars);
    spec(CaseId::B5, vars, gens, Vec::new(), 3, None)
}

/// Traceless 3x3 matrices `p_ij` (p33 = -p11 - p22) of rank <= 1: the Segre model
/// of the incidence `{w . u = 0}` in P^2 x P^2.
fn b6() -> VarietySpec {
    let v = ["p11", "p12", "p13", "p21", "p22", "p23", "p31", "p32"];
    let vars = ring_of(&strings(&v));
    let entry = |i: usize, j: usize| -> String {
        if (i, j) == (3, 3) {
            "-p11 - p22".to_string()
        } else {
            format!("p{i}{j}")
        }
    };
    let mut gens = Vec::new();
    for (r1, r2) in (1..=3).tuple_combinations() {
        for (c1, c2) in (1..=3).tuple_combinations() {
            let (a, b, c, d) = (entry(r1, c1), entry(r1, c2), entry(r2, c1), entry(r2, c2));
            let f = minor(&vars, &a, &d).sub(&minor(&vars, &b, &c));
            gens.push(f);
        }
    }
    spec(CaseId::B6, vars, gens, Vec::new(), 3, None)
}

fn minor(vars: &Arc<Vec<String>>, a: &str, b: &str) -> Polynomial {
    parse_poly(a, vars).unwrap().mul(&parse_poly(b, vars).unwrap())
}

fn q3() -> VarietySpec {
    let vars = ring_of(&strings(&G6Q_X));
    let gens = parse_all(&vars, &[AQ_EQUATIONS[4]]);
    spec(CaseId::Q3G6q, vars, gens, Vec::new(), 3, None)
}

/// Projective 3-space with coordinates `u1..u4`, the base of the genus-5 resolution.
pub fn p3_spec() -> VarietySpec {
    let vars = ring_of(&names("u", 1..=4));
    VarietySpec {
        case_id: "P3".into(),
        ambient_dim: 3,
        vars,
        generators: Vec::new(),
        planes: Vec::new(),
        expected_dim: 3,
        metadata: None,
    }
}

pub fn build_case(id: CaseId) -> VarietySpec {
    match id {
        CaseId::G4SigmaBar => g4(),
        CaseId::G5SigmaBar => g5(),
        CaseId::G6qAQ => g6q_aq(),
        CaseId::G6qSigmaBar => g6q(),
        CaseId::G6cAC => g6c_ac(),
        CaseId::G6cSigmaBar => g6c(),
        CaseId::G8SigmaBar => g8_case(),
        CaseId::Grass25 => grass(id, 5),
        CaseId::Grass26 => grass(id, 6),
        CaseId::B5 => b5(),
        CaseId::B6 => b6(),
        CaseId::Q3G6q => q3(),
    }
}

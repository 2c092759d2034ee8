//! Polynomial systems for cross configurations of six point masses or
//! vortices.
//!
//! Bodies 1..4 lie on a line, bodies 5 and 6 on the perpendicular line, with
//! `r14 = 2`-style normalizations left to the callers. Symmetry gives
//! `r_i6 = r_i5`, so `R56` is the only distance involving body 6.
//!
//! The oriented areas `Δ_ijk` of the Laura–Andoyer equations never appear as
//! variables: on a cross configuration `Δ_125 = -r12 r56 / 4` and similar
//! relations turn every area into a distance times `r56 / 4`, and the whole
//! system is divided by `r56`. What remains are the `L1..L4` below, linear
//! in the masses and in the `S_ijk = R_ij^-3 - R_jk^-3`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{int, rat, sqrt_interval, BigRational, ExactError, RationalInterval};
use crate::multipoly::{MPoly, Monomial, MonomialOrder, PolyError, PolyMatrix, Ring, VarTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemsError {
    #[error("derived {name} does not match its reference form: {detail}")]
    DerivationMismatch { name: String, detail: String },
    #[error("distance {0} is not positive")]
    NonPositiveDistance(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub const S_VARS: [&str; 16] = [
    "S125", "S135", "S145", "S165", "S215", "S235", "S245", "S265", "S315", "S325", "S345", "S365", "S415", "S425", "S435", "S465",
];
pub const R_VARS: [&str; 11] = ["R12", "R13", "R14", "R15", "R23", "R24", "R25", "R34", "R35", "R45", "R56"];
pub const M_VARS: [&str; 5] = ["M1", "M2", "M3", "M4", "M5"];

/// A polynomial with a short label, e.g. `Z12` or `F5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Named {
    pub name: String,
    pub poly: MPoly,
}

impl Named {
    fn new(name: impl Into<String>, poly: MPoly) -> Self {
        Named { name: name.into(), poly }
    }
}

fn ring_of(names: &[&str]) -> Ring {
    VarTable::new(names).expect("fixed variable names are valid")
}

/// `S_ijk`, then `R_ij`, then `M_i`: 32 variables.
pub fn omega_ring() -> Ring {
    let names: Vec<&str> = S_VARS.iter().chain(R_VARS.iter()).chain(M_VARS.iter()).copied().collect();
    ring_of(&names)
}

/// The 11 mutual distances.
pub fn distance_ring() -> Ring {
    ring_of(&R_VARS)
}

/// Ring of the six-body example, ordered for eliminating down to `R12`.
pub fn example_ring() -> Ring {
    ring_of(&["M5", "R15", "R25", "R12"])
}

pub fn vortex_ring() -> Ring {
    ring_of(&["Gamma5", "R23"])
}

// Same shape as the 32-variable ring with vortex strengths in place of masses.
fn vortex_work_ring() -> Ring {
    let names: Vec<&str> = S_VARS.iter().chain(R_VARS.iter()).chain(["G1", "G2", "G3", "G4", "Gamma5"].iter()).copied().collect();
    ring_of(&names)
}

fn p(ring: &Ring, src: &str) -> MPoly {
    MPoly::parse(ring, src).expect("built-in polynomial text parses")
}

/// Distance variable between bodies `i` and `j`, folding body 6 onto 5.
pub fn distance_name(i: u8, j: u8) -> String {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    let b = if b == 6 && a != 5 { 5 } else { b };
    format!("R{a}{b}")
}

fn s_indices(name: &str) -> (u8, u8, u8) {
    let d: Vec<u8> = name.bytes().skip(1).map(|c| c - b'0').collect();
    (d[0], d[1], d[2])
}

/// `S_ijk -> (b - a) / (a b)` with `a = pow(R_ij)`, `b = pow(R_jk)`.
///
/// `pow` gives the power of a distance used by the interaction: cubes for
/// gravitation, squares for vortices, possibly after a family substitution.
pub fn s_rules(pow: &dyn Fn(&str) -> MPoly) -> BTreeMap<String, (MPoly, MPoly)> {
    S_VARS
        .iter()
        .map(|s| {
            let (i, j, k) = s_indices(s);
            let a = pow(&distance_name(i, j));
            let b = pow(&distance_name(j, k));
            (s.to_string(), (&b - &a, &a * &b))
        })
        .collect()
}

fn cube_rules(ring: &Ring) -> BTreeMap<String, (MPoly, MPoly)> {
    let r = ring.clone();
    s_rules(&move |d| MPoly::var(&r, d).expect("distance variable").pow(3))
}

const SHAPE: [&str; 8] = [
    "R12 + R23 - R13",
    "R12 + R24 - R14",
    "R13 + R34 - R14",
    "R23 + R34 - R24",
    "4*R15^2 - R56^2 - 4*(R14 - 1)^2",
    "4*R25^2 - R56^2 - 4*(1 - R24)^2",
    "4*R35^2 - R56^2 - 4*(1 - R34)^2",
    "4*R45^2 - R56^2 - 4",
];

const LAURA_ANDOYER: [&str; 4] = [
    "W2*S125*R12 + W3*S135*R13 + W4*S145*R14 + 2*W5*S165*(R14 - 1)",
    "-W1*S215*R12 + W3*S235*R23 + W4*S245*R24 - 2*W5*S265*(1 - R24)",
    "-W1*S315*R13 - W2*S325*R23 + W4*S345*R34 - 2*W5*S365*(1 - R34)",
    "-W1*S415*R14 - W2*S425*R24 - W3*S435*R34 - 2*W5*S465",
];

fn laura_andoyer_in(ring: &Ring, weights: [&str; 5]) -> Vec<MPoly> {
    LAURA_ANDOYER
        .iter()
        .map(|src| {
            let mut s = src.to_string();
            for (k, w) in weights.iter().enumerate() {
                s = s.replace(&format!("W{}", k + 1), w);
            }
            p(ring, &s)
        })
        .collect()
}

/// `L1..L4` in the 32-variable ring.
pub fn laura_andoyer() -> Vec<MPoly> {
    laura_andoyer_in(&omega_ring(), M_VARS)
}

/// The 28 generators: `Z_ij` (12), `W_i` (4), `F1..F8`, `L1..L4`.
pub fn build_omega_generators() -> Vec<Named> {
    let ring = omega_ring();
    let mut out = Vec::with_capacity(28);
    for i in 1..=4u8 {
        for j in (1..=4u8).filter(|&j| j != i) {
            let rij = distance_name(i, j);
            let rj5 = distance_name(j, 5);
            let src = format!("{rij}^3*{rj5}^3*S{i}{j}5 + {rij}^3 - {rj5}^3");
            out.push(Named::new(format!("Z{i}{j}"), p(&ring, &src)));
        }
    }
    for i in 1..=4u8 {
        let ri5 = distance_name(i, 5);
        let src = format!("{ri5}^3*R56^3*S{i}65 + {ri5}^3 - R56^3");
        out.push(Named::new(format!("W{i}"), p(&ring, &src)));
    }
    for (k, src) in SHAPE.iter().enumerate() {
        out.push(Named::new(format!("F{}", k + 1), p(&ring, src)));
    }
    for (k, l) in laura_andoyer().into_iter().enumerate() {
        out.push(Named::new(format!("L{}", k + 1), l));
    }
    out
}

/// Collinearity and Pythagoras relations `F1..F8` among the distances.
pub fn build_shape_ideal() -> Vec<Named> {
    let ring = distance_ring();
    SHAPE.iter().enumerate().map(|(k, src)| Named::new(format!("F{}", k + 1), p(&ring, src))).collect()
}

/// Distances of the six-body example family as polynomials in `R12, R15, R25`.
pub const EXAMPLE_FAMILY: [(&str, &str); 8] = [
    ("R13", "2 - R12"),
    ("R14", "2"),
    ("R23", "2 - 2*R12"),
    ("R24", "2 - R12"),
    ("R34", "R12"),
    ("R35", "R25"),
    ("R45", "R15"),
    ("R56", "2 - 2*R12"),
];

pub const EXAMPLE_F1: &str = "R25^2 - 2*(1 - R12)^2";
pub const EXAMPLE_F2: &str = "R15^2 - 1 - (1 - R12)^2";

pub const EXAMPLE_F3: &str = "R12^7*R15^3*R25^3 - 7*R12^6*R15^3*R25^3 + 8*M5*R12^7*R25^3 + M5*R12^4*R15^3*R25^3 \
    + 27*R12^5*R15^3*R25^3 - 8*R12^7*R15^3 - 56*M5*R12^6*R25^3 - 8*R12^7*R25^3 \
    - 4*M5*R12^3*R15^3*R25^3 - 65*R12^4*R15^3*R25^3 + 56*R12^6*R15^3 + 152*M5*R12^5*R25^3 \
    + 56*R12^6*R25^3 + 4*M5*R12^2*R15^3*R25^3 + 104*R12^3*R15^3*R25^3 - 152*R12^5*R15^3 \
    - 200*M5*R12^4*R25^3 - 152*R12^5*R25^3 - 108*R12^2*R15^3*R25^3 + 200*R12^4*R15^3 \
    + 128*M5*R12^3*R25^3 + 200*R12^4*R25^3 + 64*R12*R15^3*R25^3 - 128*R12^3*R15^3 \
    - 32*M5*R12^2*R25^3 - 128*R12^3*R25^3 - 16*R15^3*R25^3 + 32*R12^2*R15^3 + 32*R12^2*R25^3";

// The R12^6*R15^3 coefficient is -56; the derivation check below pins it.
pub const EXAMPLE_F4: &str = "-8*M5*R12^7*R15^3 - M5*R12^4*R15^3*R25^3 + 56*M5*R12^6*R15^3 + 8*R12^7*R15^3 \
    + 8*R12^7*R25^3 + 4*M5*R12^3*R15^3*R25^3 + R12^4*R15^3*R25^3 - 152*M5*R12^5*R15^3 - 56*R12^6*R15^3 \
    - 56*R12^6*R25^3 - 4*M5*R12^2*R15^3*R25^3 + 12*R12^3*R15^3*R25^3 + 200*M5*R12^4*R15^3 \
    + 152*R12^5*R15^3 + 152*R12^5*R25^3 - 44*R12^2*R15^3*R25^3 - 128*M5*R12^3*R15^3 \
    - 200*R12^4*R15^3 - 200*R12^4*R25^3 + 48*R12*R15^3*R25^3 + 32*M5*R12^2*R15^3 \
    + 128*R12^3*R15^3 + 128*R12^3*R25^3 - 16*R15^3*R25^3 - 32*R12^2*R15^3 - 32*R12^2*R25^3";

pub const EXAMPLE_LC1: &str = "8*R12^7*R25^3 - 56*R12^6*R25^3 + 152*R12^5*R25^3 + R12^4*R15^3*R25^3 \
    - 200*R12^4*R25^3 - 4*R12^3*R15^3*R25^3 + 128*R12^3*R25^3 + 4*R12^2*R15^3*R25^3 - 32*R12^2*R25^3";

pub const EXAMPLE_LC2: &str = "-8*R12^7*R15^3 + 56*R12^6*R15^3 - 152*R12^5*R15^3 - R12^4*R15^3*R25^3 \
    + 200*R12^4*R15^3 + 4*R12^3*R15^3*R25^3 - 128*R12^3*R15^3 - 4*R12^2*R15^3*R25^3 + 32*R12^2*R15^3";

/// Leading coefficients of the eliminant factor `h`, highest degree first.
pub const EXAMPLE_H_LEADING: [i64; 3] = [49, -2548, 66738];

/// `F1..F4` of the six-body example plus the cofactors found when checking
/// `F3`, `F4` against the Laura–Andoyer system.
#[derive(Debug, Clone)]
pub struct ExampleIdeal {
    pub gens: Vec<Named>,
    /// `(name, cofactor)`: derived numerator = cofactor * reference form.
    pub derivation: Vec<(String, MPoly)>,
}

/// Divides `q` by each factor as often as it goes; returns the leftover
/// scalar if nothing else remains.
pub fn strip_factors(q: &MPoly, factors: &[MPoly]) -> Option<BigRational> {
    let mut rest = q.clone();
    for f in factors {
        while let Some(next) = rest.div_exact(f) {
            if f.is_constant() {
                break;
            }
            rest = next;
        }
    }
    rest.as_constant().filter(|c| !c.is_zero())
}

fn check_cofactor(name: &str, derived: &MPoly, reference: &MPoly, allowed: &[MPoly]) -> Result<MPoly, SystemsError> {
    let mismatch = |detail: &str| SystemsError::DerivationMismatch { name: name.to_string(), detail: detail.to_string() };
    let q = derived.div_exact(reference).ok_or_else(|| mismatch("reference form does not divide the derived numerator"))?;
    strip_factors(&q, allowed).ok_or_else(|| mismatch("cofactor has factors outside the cleared denominators"))?;
    Ok(q)
}

fn specialize(poly: &MPoly, subs: &[(&str, MPoly)]) -> Result<MPoly, PolyError> {
    let mut out = poly.clone();
    for (v, val) in subs {
        out = out.substitute(v, val)?;
    }
    Ok(out)
}

/// The six-body example ideal in `[M5, R15, R25, R12]`.
///
/// `F3` and `F4` are checked against an independent derivation: substitute
/// the family and `m1 = .. = m4 = 1` into `L1`, `L2`, replace each `S_ijk`
/// by its rational expression and clear denominators. The derived
/// numerators must be the reference forms times factors of the cleared
/// denominators.
pub fn build_example_ideal_6bp() -> Result<ExampleIdeal, SystemsError> {
    let ring = omega_ring();
    let target = example_ring();
    let mut subs: Vec<(&str, MPoly)> = EXAMPLE_FAMILY.iter().map(|(v, e)| (*v, p(&ring, e))).collect();
    for m in &M_VARS[..4] {
        subs.push((m, MPoly::one(&ring)));
    }
    let fam = |d: &str| -> MPoly {
        EXAMPLE_FAMILY.iter().find(|(v, _)| *v == d).map_or_else(|| p(&ring, d), |(_, e)| p(&ring, e))
    };
    let rules = s_rules(&|d| fam(d).pow(3));
    let allowed: Vec<MPoly> = ["R12", "R15", "R25", "R12 - 1", "R12 - 2"].iter().map(|s| p(&target, s)).collect();

    let f3 = p(&target, EXAMPLE_F3);
    let f4 = p(&target, EXAMPLE_F4);
    let ls = laura_andoyer();
    let mut derivation = Vec::new();
    for (name, l, reference) in [("F3", &ls[0], &f3), ("F4", &ls[1], &f4)] {
        let (num, _) = specialize(l, &subs)?.substitute_rational(&rules)?;
        let num = num.to_ring(&target)?;
        derivation.push((name.to_string(), check_cofactor(name, &num, reference, &allowed)?));
    }
    let gens = vec_named(&[("F1", p(&target, EXAMPLE_F1)), ("F2", p(&target, EXAMPLE_F2)), ("F3", f3), ("F4", f4)]);
    Ok(ExampleIdeal { gens, derivation })
}

fn vec_named(items: &[(&str, MPoly)]) -> Vec<Named> {
    items.iter().map(|(n, q)| Named::new(*n, q.clone())).collect()
}

/// `∂L_j/∂M_i`: rows `M1..M5`, columns `L1..L4`, in the 32-variable ring.
pub fn jacobian_mass_matrix() -> PolyMatrix {
    let ring = omega_ring();
    let ls = laura_andoyer();
    let rows = M_VARS
        .iter()
        .map(|m| ls.iter().map(|l| l.partial_derivative(m).expect("mass variable")).collect())
        .collect();
    PolyMatrix::new(&ring, rows).expect("rectangular")
}

/// All 3x3 minors of a matrix, rows outer and columns inner, each index set
/// in increasing order.
pub fn minors3(m: &PolyMatrix) -> Result<Vec<MPoly>, PolyError> {
    let triples = |n: usize| {
        let mut v = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    v.push([a, b, c]);
                }
            }
        }
        v
    };
    let mut out = Vec::new();
    for rows in triples(m.rows()) {
        for cols in triples(m.cols()) {
            out.push(m.submatrix(&rows, &cols).det()?);
        }
    }
    Ok(out)
}

/// Clears `S` denominators, strips monomial content and moves to the
/// distance ring.
fn to_distance_poly(f: &MPoly) -> Result<MPoly, PolyError> {
    let (num, _) = f.substitute_rational(&cube_rules(f.ring()))?;
    num.strip_monomial_content().primitive(MonomialOrder::DegRevLex).to_ring(&distance_ring())
}

/// `D1..D40` from the 3x3 minors of the mass Jacobian.
pub fn build_minor_generators() -> Result<Vec<Named>, PolyError> {
    minors3(&jacobian_mass_matrix())?
        .iter()
        .enumerate()
        .map(|(k, d)| Ok(Named::new(format!("D{}", k + 1), to_distance_poly(d)?)))
        .collect()
}

pub const MINOR_D1: &str = "(R25^3 - R12^3)*(R35^3 - R23^3)*(R15^3 - R13^3) - (R35^3 - R13^3)*(R15^3 - R12^3)*(R25^3 - R23^3)";

/// Leading terms collected from the 40 runs `⟨F1..F8, D_i⟩` in degrevlex.
pub const PARTIAL_LT: [&str; 21] = [
    "R23",
    "R13",
    "R12",
    "R45^2",
    "R34^2",
    "R24^2",
    "R14^2",
    "R24*R25^5*R35^3",
    "R14*R15^5*R35^3",
    "R14*R15^5*R25^3",
    "R25^6*R34*R35^3",
    "R15^6*R34*R35^3",
    "R15^6*R24*R25^3",
    "R24*R25^5*R34*R35^2*R56^2",
    "R14*R15^5*R34*R35^2*R56^2",
    "R14*R15^5*R24*R25^2*R56^2",
    "R15^6*R25^4*R34",
    "R25^6*R35^4*R56^2",
    "R15^6*R35^4*R56^2",
    "R15^6*R25^4*R56^2",
    "R15^6*R25^4*R35^2",
];

pub fn partial_lt_monomials() -> Vec<Monomial> {
    let ring = distance_ring();
    PARTIAL_LT.iter().map(|s| p(&ring, s).terms()[0].0).collect()
}

pub const BETA_DENOMINATOR: &str = "R12^4*R13^4*R14^4*R15^3*R23^4*R24^4*R25^3*R34^4*R35^3*R45^3";

/// The 4x4 matrix `A` in the 32-variable ring.
pub fn mass_matrix_a() -> PolyMatrix {
    let ring = omega_ring();
    let rows = [
        ["0", "-S215*R12", "-S315*R13", "S415*R14"],
        ["S125*R12", "0", "-S325*R23", "S425*R24"],
        ["S135*R13", "S235*R23", "0", "S435*R34"],
        ["S145*R14", "S245*R24", "S345*R34", "0"],
    ];
    let entries = rows.iter().map(|r| r.iter().map(|s| p(&ring, s)).collect()).collect();
    PolyMatrix::new(&ring, entries).expect("square")
}

/// `det A = numerator / denominator` after clearing `S` denominators.
#[derive(Debug, Clone)]
pub struct Beta {
    pub numerator: MPoly,
    /// Monic monomial in the distances.
    pub denominator: MPoly,
}

pub fn build_beta() -> Result<Beta, PolyError> {
    let det = mass_matrix_a().det()?;
    let (num, den) = det.substitute_rational(&cube_rules(det.ring()))?;
    let c = den.terms()[0].1.clone();
    let inv = c.recip();
    let dr = distance_ring();
    Ok(Beta { numerator: num.scale(&inv).to_ring(&dr)?, denominator: den.scale(&inv).to_ring(&dr)? })
}

pub const VORTEX_FAMILY: [(&str, &str); 6] = [
    ("R12", "(2 - R23)/2"),
    ("R34", "(2 - R23)/2"),
    ("R13", "(2 + R23)/2"),
    ("R24", "(2 + R23)/2"),
    ("R14", "2"),
    ("R56", "R23"),
];

/// Squared distances of the vortex family; `R15`, `R25` and their mirror
/// images are square roots of these.
pub const VORTEX_SQUARES: [(&str, &str); 4] = [("R15", "(R23^2 + 4)/4"), ("R45", "(R23^2 + 4)/4"), ("R25", "R23^2/2"), ("R35", "R23^2/2")];

pub const VORTEX_FV1: &str = "-16 - 32*R23^2 + R23^4 + (16 - R23^4)*Gamma5";
pub const VORTEX_FV2: &str = "128 - 16*R23^2 - 40*R23^4 + R23^6 + (64 - 64*R23^2 + 12*R23^4)*Gamma5";
pub const VORTEX_FV3: &str = "768 + 384*R23^2 - 576*R23^4 - 24*R23^6 + R23^8";
pub const VORTEX_FV4: &str = "832 - 656*R23^2 - 20*R23^4 + R23^6";
/// The other factor of the `AV` determinant numerator, negative on `(0, 2)`.
pub const VORTEX_AV_OTHER: &str = "-192 - 144*R23^2 - 84*R23^4 + R23^6";

#[derive(Debug, Clone)]
pub struct VortexSystems {
    pub fv1: MPoly,
    pub fv2: MPoly,
    pub fv3: MPoly,
    pub fv4: MPoly,
    /// Numerator of `det AV` along the family, in `[Gamma5, R23]`.
    pub av_numerator: MPoly,
    pub derivation: Vec<(String, MPoly)>,
}

/// Vortex systems in `[Gamma5, R23]`, with `FV1`, `FV2` and `FV4` checked
/// against the vortex Laura–Andoyer equations along the family.
pub fn build_vortex_systems() -> Result<VortexSystems, SystemsError> {
    let work = vortex_work_ring();
    let target = vortex_ring();
    let linear = |d: &str| VORTEX_FAMILY.iter().find(|(v, _)| *v == d).map(|(_, e)| p(&work, e));
    let square = |d: &str| -> MPoly {
        if let Some(l) = linear(d) {
            return l.pow(2);
        }
        VORTEX_SQUARES.iter().find(|(v, _)| *v == d).map_or_else(|| p(&work, d).pow(2), |(_, e)| p(&work, e))
    };
    let rules = s_rules(&square);
    let mut subs: Vec<(&str, MPoly)> = VORTEX_FAMILY.iter().map(|(v, e)| (*v, p(&work, e))).collect();
    for g in ["G1", "G2", "G3", "G4"] {
        subs.push((g, MPoly::one(&work)));
    }
    let allowed: Vec<MPoly> = ["R23", "R23 - 2", "R23 + 2", "R23^2 + 4"].iter().map(|s| p(&target, s)).collect();
    let reduce = |f: &MPoly| -> Result<MPoly, SystemsError> {
        let (num, _) = specialize(f, &subs)?.substitute_rational(&rules)?;
        Ok(num.to_ring(&target)?)
    };

    let fv1 = p(&target, VORTEX_FV1);
    let fv2 = p(&target, VORTEX_FV2);
    let fv4 = p(&target, VORTEX_FV4);
    let ls = laura_andoyer_in(&work, ["G1", "G2", "G3", "G4", "Gamma5"]);
    let mut derivation = Vec::new();
    derivation.push(("FV2".to_string(), check_cofactor("FV2", &reduce(&ls[0])?, &fv2, &allowed)?));
    derivation.push(("FV1".to_string(), check_cofactor("FV1", &reduce(&ls[1])?, &fv1, &allowed)?));

    let a = mass_matrix_a();
    let av = a.try_map(|e| e.to_ring(&work))?;
    let av_numerator = reduce(&av.det()?)?;
    let mut av_allowed = allowed.clone();
    av_allowed.push(p(&target, VORTEX_AV_OTHER));
    derivation.push(("FV4".to_string(), check_cofactor("FV4", &av_numerator, &fv4, &av_allowed)?));

    Ok(VortexSystems { fv1, fv2, fv3: p(&target, VORTEX_FV3), fv4, av_numerator, derivation })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    /// Point masses, `s = r^-3 - r^-3`.
    Newtonian,
    /// Point vortices, `v = r^-2 - r^-2`.
    Vortex,
}

impl Problem {
    fn exponent(self) -> u32 {
        match self {
            Problem::Newtonian => 3,
            Problem::Vortex => 2,
        }
    }
}

/// Mutual distances (in `R_VARS` order) and weights `m1..m5` with `m6 = m5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossConfig {
    pub distances: [RationalInterval; 11],
    pub weights: [RationalInterval; 5],
}

impl CrossConfig {
    pub fn distance(&self, name: &str) -> Option<&RationalInterval> {
        R_VARS.iter().position(|v| *v == name).map(|i| &self.distances[i])
    }

    /// Six-body example family at `r12` with unit masses and `m5`.
    pub fn six_body_example(r12: &RationalInterval, m5: &RationalInterval, eps: &BigRational) -> Result<CrossConfig, SystemsError> {
        let one = RationalInterval::point(BigRational::one());
        let two = int(2);
        let u = one.sub(r12); // 1 - r12
        let r15 = sqrt_interval(&one.add(&u.pow(2)), eps)?;
        let r25 = sqrt_interval(&u.pow(2).scale(&two), eps)?;
        let c = |x: i64| RationalInterval::point(int(x));
        let r13 = c(2).sub(r12);
        let r23 = c(2).sub(&r12.scale(&two));
        let distances = [r12.clone(), r13.clone(), c(2), r15.clone(), r23.clone(), r13, r25.clone(), r12.clone(), r25, r15, r23];
        Ok(CrossConfig { distances, weights: [one.clone(), one.clone(), one.clone(), one, m5.clone()] })
    }

    /// Vortex example family at `r23` with unit strengths and `g5`.
    pub fn vortex_example(r23: &RationalInterval, g5: &RationalInterval, eps: &BigRational) -> Result<CrossConfig, SystemsError> {
        let one = RationalInterval::point(BigRational::one());
        let half = rat(1, 2);
        let two = RationalInterval::point(int(2));
        let r12 = two.sub(r23).scale(&half);
        let r13 = two.add(r23).scale(&half);
        let r15 = sqrt_interval(&r23.pow(2).add_scalar(&int(4)).scale(&rat(1, 4)), eps)?;
        let r25 = sqrt_interval(&r23.pow(2).scale(&half), eps)?;
        let distances = [r12.clone(), r13.clone(), two, r15.clone(), r23.clone(), r13, r25.clone(), r12, r25, r15, r23.clone()];
        Ok(CrossConfig { distances, weights: [one.clone(), one.clone(), one.clone(), one, g5.clone()] })
    }
}

/// Interval enclosures of `L1..L4` (or their vortex analogues) at `c`.
pub fn laura_andoyer_residuals(c: &CrossConfig, problem: Problem) -> Result<[RationalInterval; 4], SystemsError> {
    for (name, d) in R_VARS.iter().zip(&c.distances) {
        if !d.lo().is_positive() {
            return Err(SystemsError::NonPositiveDistance(name.to_string()));
        }
    }
    let ring = omega_ring();
    let e = problem.exponent();
    let mut vals: Vec<Option<RationalInterval>> = alloc::vec![None; ring.len()];
    for s in S_VARS {
        let (i, j, k) = s_indices(s);
        let a = c.distance(&distance_name(i, j)).expect("known distance").pow(e).recip()?;
        let b = c.distance(&distance_name(j, k)).expect("known distance").pow(e).recip()?;
        vals[ring.index(s).expect("S variable")] = Some(a.sub(&b));
    }
    for (name, d) in R_VARS.iter().zip(&c.distances) {
        vals[ring.index(name).expect("R variable")] = Some(d.clone());
    }
    for (name, w) in M_VARS.iter().zip(&c.weights) {
        vals[ring.index(name).expect("M variable")] = Some(w.clone());
    }
    let ls = laura_andoyer();
    let mut out: [RationalInterval; 4] = core::array::from_fn(|_| RationalInterval::zero());
    for (slot, l) in out.iter_mut().zip(&ls) {
        *slot = l.evaluate_interval_indexed(&vals)?;
    }
    Ok(out)
}

/// Interval enclosures of the shape relations `F1..F8` at `c`.
pub fn shape_residuals(c: &CrossConfig) -> Result<Vec<RationalInterval>, SystemsError> {
    let vals: Vec<Option<RationalInterval>> = c.distances.iter().cloned().map(Some).collect();
    build_shape_ideal().iter().map(|f| Ok(f.poly.evaluate_interval_indexed(&vals)?)).collect()
}

//! Presentations of the cohomology rings of every space family, plus the
//! descriptor grammar that names them.
//!
//! Generators are listed in the order used by the monomial order, and the
//! order ranks the *last* listed generator highest. For the Milnor rings this
//! makes `b^r` the leading term of `b^r + a·b^(r-1) + … + a^s·b^(r-s)`, so the
//! standard monomials are `a^i b^j` with `i ≤ s`, `j < r`.

mod descriptor;
mod params;

use crate::f2poly::{GeneratorInfo, Monomial, Polynomial, Presentation, ReducedRing};
use crate::{Error, Result};

pub use descriptor::{Field, Group, SpaceDescriptor};
pub use params::{ParamBits, ParamLayout};

/// Builds a presentation from named generators and relations written as lists
/// of exponent vectors.
fn present(
    gens: &[(&str, u32)],
    relations: Vec<Polynomial>,
    formal_dimension: u32,
    simply_connected: bool,
) -> Result<Presentation> {
    Presentation::new(
        gens.iter()
            .map(|&(n, d)| GeneratorInfo::new(n, d))
            .collect(),
        relations,
        Some(formal_dimension),
        simply_connected,
    )
}

fn check_milnor(family: &'static str, r: u32, s: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::param(family, "r must be at least 1"));
    }
    if s > r {
        return Err(Error::param(
            family,
            format!("need s ≤ r, got r={r}, s={s}"),
        ));
    }
    Ok(())
}

/// `a^(s+1)` and `b^r + a·b^(r-1) + … + a^s·b^(r-s)` with `a, b` of degree `deg`.
fn milnor_relations(r: u32, s: u32) -> Vec<Polynomial> {
    vec![
        Polynomial::from_exponents([vec![s + 1, 0]]),
        Polynomial::from_exponents((0..=s).map(|i| vec![i, r - i])),
    ]
}

/// `H*(RH_{r,s}; F2) = F2[a,b] / (a^(s+1), b^r + a·b^(r-1) + … + a^s·b^(r-s))`
/// with `|a| = |b| = 1`.
pub fn milnor_real(r: u32, s: u32) -> Result<Presentation> {
    check_milnor("milnor-real", r, s)?;
    present(
        &[("a", 1), ("b", 1)],
        milnor_relations(r, s),
        r + s - 1,
        false,
    )
}

/// The complex analogue with `|c| = |d| = 2`. The second relation is
/// `d^r + c·d^(r-1) + … + c^s·d^(r-s)`.
pub fn milnor_complex(r: u32, s: u32) -> Result<Presentation> {
    check_milnor("milnor-complex", r, s)?;
    present(
        &[("c", 2), ("d", 2)],
        milnor_relations(r, s),
        2 * (r + s - 1),
        true,
    )
}

/// Truncated polynomial ring `F2[a]/(a^(n+1))` with `|a| = degree`.
fn truncated(n: u32, degree: u32, simply_connected: bool) -> Result<Presentation> {
    present(
        &[("a", degree)],
        vec![Polynomial::from_exponents([vec![n + 1]])],
        n * degree,
        simply_connected,
    )
}

pub fn rp(n: u32) -> Result<Presentation> {
    truncated(n, 1, n == 0)
}

pub fn cp(n: u32) -> Result<Presentation> {
    truncated(n, 2, true)
}

fn check_odd_pair(family: &'static str, r: u32, s: u32, strict: bool) -> Result<()> {
    if r.is_multiple_of(2) || s.is_multiple_of(2) {
        return Err(Error::param(
            family,
            format!("a free action exists if and only if both r and s are odd, got r={r}, s={s}"),
        ));
    }
    if strict && !(1 < s && s < r) {
        return Err(Error::param(
            family,
            format!("need 1 < s < r, got r={r}, s={s}"),
        ));
    }
    if !strict && !(1 <= s && s <= r) {
        return Err(Error::param(
            family,
            format!("need 1 ≤ s ≤ r, got r={r}, s={s}"),
        ));
    }
    Ok(())
}

/// Exponent vector over the generators `x, y, z, w`.
fn xyzw(x: u32, y: u32, z: u32, w: u32) -> Vec<u32> {
    vec![x, y, z, w]
}

/// The two Z2-quotient rings share their shape; `zpow` is the power of `z`
/// that accompanies `w` (1 in the real case, 2 in the complex case).
fn z2_quotient_relations(r: u32, s: u32, p: &ParamBits, zpow: u32) -> Vec<Polynomial> {
    let layout = ParamLayout::z2(s);
    let (gamma, alpha, beta) = layout.split_z2(p);
    let hs = (s - 1) / 2;
    let hr = (r - 1) / 2;

    let mut rels = Vec::new();
    rels.push(Polynomial::from_exponents([xyzw(0, 0, zpow + 1, 0)]));

    let mut w2 = vec![xyzw(0, 0, 0, 2)];
    if gamma[0] {
        w2.push(xyzw(0, 0, zpow, 1));
    }
    if gamma[1] {
        w2.push(xyzw(1, 0, 0, 0));
    }
    if gamma[2] {
        w2.push(xyzw(0, 1, 0, 0));
    }
    rels.push(Polynomial::from_exponents(w2));

    let mut xrel = vec![xyzw(hs + 1, 0, 0, 0)];
    for (i, &a) in alpha.iter().enumerate() {
        if a {
            xrel.push(xyzw(hs - i as u32, i as u32, zpow, 1));
        }
    }
    rels.push(Polynomial::from_exponents(xrel));

    let mut wrel = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        let i = i as u32;
        wrel.push(xyzw(i, hr - i, 0, 1));
        if b {
            wrel.push(xyzw(i, hr - i, zpow, 0));
        }
    }
    rels.push(Polynomial::from_exponents(wrel));
    rels
}

/// Cohomology of `RH_{r,s}` modulo a free involution acting trivially on
/// cohomology: `F2[x,y,z,w]/I` with `|x| = |y| = 2`, `|z| = |w| = 1`, and `I`
/// generated by
///
/// * `z²`,
/// * `w² + γ1·zw + γ2·x + γ3·y`,
/// * `x^((s+1)/2) + Σ αi·zw·x^((s-1)/2-i)·y^i`,
/// * `Σ (w + βi·z)·x^i·y^((r-1)/2-i)`, with `i = 0..=(s-1)/2`.
///
/// The parameter bits are laid out as `γ1 γ2 γ3 α0 … β0 …`
/// (see [`ParamLayout::z2`]). Note that the displayed relations only cut out
/// a finite-dimensional ring when `γ3 = 1`; otherwise `y` is not nilpotent and
/// the ring is used in its truncation at the formal dimension.
pub fn quotient_real_z2(r: u32, s: u32, params: &ParamBits) -> Result<Presentation> {
    check_odd_pair("quot-real-z2", r, s, true)?;
    ParamLayout::z2(s).check("quot-real-z2", params)?;
    present(
        &[("x", 2), ("y", 2), ("z", 1), ("w", 1)],
        z2_quotient_relations(r, s, params, 1),
        r + s - 1,
        false,
    )
}

/// The complex analogue: `|x| = |y| = 4`, `|z| = 1`, `|w| = 2`, relations as
/// in [`quotient_real_z2`] with `z` replaced by `z²` next to `w`, and `z³`
/// instead of `z²`.
pub fn quotient_complex_z2(r: u32, s: u32, params: &ParamBits) -> Result<Presentation> {
    check_odd_pair("quot-complex-z2", r, s, true)?;
    ParamLayout::z2(s).check("quot-complex-z2", params)?;
    present(
        &[("x", 4), ("y", 4), ("z", 1), ("w", 2)],
        z2_quotient_relations(r, s, params, 2),
        2 * (r + s - 1),
        false,
    )
}

/// Cohomology of `RH_{r,s}/S¹` for a free circle action: `F2[x,y,w]/I` with
/// `|x| = |y| = 2`, `|w| = 1`, and `I` generated by `x^((s+1)/2)`,
/// `Σ w·x^i·y^((r-1)/2-i)` (`i = 0..=(s-1)/2`) and `w² + α·x + β·y`.
pub fn quotient_real_s1(r: u32, s: u32, params: &ParamBits) -> Result<Presentation> {
    check_odd_pair("quot-real-s1", r, s, false)?;
    ParamLayout::S1.check("quot-real-s1", params)?;
    let (alpha, beta) = (params.get(0), params.get(1));
    let (hs, hr) = ((s - 1) / 2, (r - 1) / 2);
    let mut w2 = vec![vec![0, 0, 2]];
    if alpha {
        w2.push(vec![1, 0, 0]);
    }
    if beta {
        w2.push(vec![0, 1, 0]);
    }
    present(
        &[("x", 2), ("y", 2), ("w", 1)],
        vec![
            Polynomial::from_exponents([vec![hs + 1, 0, 0]]),
            Polynomial::from_exponents((0..=hs).map(|i| vec![i, hr - i, 1])),
            Polynomial::from_exponents(w2),
        ],
        r + s - 2,
        false,
    )
}

/// Exterior algebra on generators `beta{first}, beta{first+1}, …` of the
/// given degrees.
fn exterior_from(degrees: &[u32], first: usize) -> Result<Presentation> {
    let n = degrees.len();
    if degrees.contains(&0) {
        return Err(Error::param("exterior", "degrees must be positive"));
    }
    let gens: Vec<GeneratorInfo> = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| GeneratorInfo::new(format!("beta{}", first + i), d))
        .collect();
    let relations = (0..n)
        .map(|i| Polynomial::from_monomial(Monomial::var(n, i, 2)))
        .collect();
    Presentation::new(
        gens,
        relations,
        Some(degrees.iter().sum()),
        degrees.iter().all(|&d| d >= 2),
    )
}

/// `Λ(beta1, …, betak)` with `|beta_j| = degrees[j-1]`.
pub fn exterior(degrees: &[u32]) -> Result<Presentation> {
    if degrees.is_empty() {
        return Err(Error::param("exterior", "need at least one generator"));
    }
    exterior_from(degrees, 1)
}

/// Künneth: disjoint union of generators and relations.
pub fn tensor_product(p: &Presentation, q: &Presentation) -> Result<Presentation> {
    p.tensor(q)
}

fn check_sorted_spheres(family: &'static str, ns: &[u32]) -> Result<()> {
    if ns.is_empty() {
        return Err(Error::param(family, "need at least one sphere dimension"));
    }
    if ns[0] < 2 {
        return Err(Error::param(family, format!("need n1 ≥ 2, got {}", ns[0])));
    }
    if ns.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::param(
            family,
            "sphere dimensions must be non-decreasing",
        ));
    }
    Ok(())
}

/// Projective product space `P(n1, …, nk)`:
/// `H*(RP^n1) ⊗ Λ(beta2, …, betak)` with `|beta_j| = n_j`.
pub fn pps(ns: &[u32]) -> Result<Presentation> {
    check_sorted_spheres("pps", ns)?;
    let base = rp(ns[0])?;
    if ns.len() == 1 {
        return Ok(base);
    }
    tensor_product(&base, &exterior_from(&ns[1..], 2)?)
}

/// `H*(RP^n1) ⊗ Λ(beta2, …, betak) ⊗ H*(CH_{r,s})`.
pub fn gpps_complex_spheres(r: u32, s: u32, ns: &[u32]) -> Result<Presentation> {
    check_odd_pair("gpps-cs", r, s, true)?;
    tensor_product(&pps(ns)?, &milnor_complex(r, s)?)
}

/// `H*(CH_{r,s}) ⊗ H*(N/τ)` for a simply connected `N` with free involution
/// `τ`; `factor` is the presentation of `N/τ`.
pub fn gpps_tensor(r: u32, s: u32, factor: &Presentation) -> Result<Presentation> {
    check_milnor("gpps-tensor", r, s)?;
    tensor_product(&milnor_complex(r, s)?, factor)
}

/// `H*(FH_{r,s}/σ) ⊗ Λ(beta1, …, betak)` with `|beta_j| = n_j`, for spheres
/// `(n_j, p_j)` carrying reflections in `p_j` coordinates.
pub fn gpps_reflection(
    field: Field,
    r: u32,
    s: u32,
    spheres: &[(u32, u32)],
    params: &ParamBits,
) -> Result<Presentation> {
    for &(n, p) in spheres {
        if !(1 <= p && p <= n) {
            return Err(Error::param(
                "gpps-refl",
                format!("need 1 ≤ p ≤ n for every sphere, got ({n},{p})"),
            ));
        }
    }
    let quotient = match field {
        Field::Real => quotient_real_z2(r, s, params)?,
        Field::Complex => quotient_complex_z2(r, s, params)?,
    };
    if spheres.is_empty() {
        return Ok(quotient);
    }
    let degrees: Vec<u32> = spheres.iter().map(|&(n, _)| n).collect();
    tensor_product(&quotient, &exterior_from(&degrees, 1)?)
}

/// How a presentation behaves beyond its formal dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DualityCheck {
    /// Everything above the formal dimension vanishes, so the truncation at
    /// the formal dimension loses nothing.
    pub vanishes_above: bool,
    /// Hilbert function symmetric about the formal dimension with a
    /// one-dimensional top.
    pub poincare_symmetric: bool,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.vanishes_above && self.poincare_symmetric
    }
}

/// Completes `p` a little past its formal dimension to see whether the
/// relations really cut out a Poincaré duality algebra of that dimension.
///
/// The ring is generated in degrees at most `g`, so if degrees `D+1..=D+g`
/// vanish then every higher degree does too.
pub fn duality_check(p: &Presentation) -> Result<DualityCheck> {
    let d = p
        .formal_dimension
        .ok_or_else(|| Error::InvalidPresentation("no formal dimension declared".into()))?;
    let g = p.max_generator_degree();
    let ring = ReducedRing::complete_with_limit(p, d + g, crate::f2poly::DEFAULT_SAFETY_LIMIT)?;
    let h = ring.hilbert();
    let vanishes_above = h[d as usize + 1..].iter().all(|&x| x == 0);
    let poincare_symmetric =
        h[d as usize] == 1 && (0..=d as usize).all(|i| h[i] == h[d as usize - i]);
    Ok(DualityCheck {
        vanishes_above,
        poincare_symmetric,
    })
}

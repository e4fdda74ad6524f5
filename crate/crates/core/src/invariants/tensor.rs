use crate::f2poly::{
    complete_presentation, Elem, GeneratorInfo, Monomial, PMono, Polynomial, Presentation,
    ReducedRing,
};
use crate::{Error, Result};

/// Default cap on the dimension of a tensor square.
pub const DEFAULT_TENSOR_BUDGET: u128 = 200_000;

/// `H ⊗ H` for a truncated ring `H`, presented on two copies of the
/// generators. Generator `i` of the base becomes `i` (left copy, `x⊗1`) and
/// `n + i` (right copy, `1⊗x`).
///
/// The base ring is the truncation of its presentation at its degree cap, so
/// each copy also gets the monomials just above the cap as relations. For
/// rings that genuinely vanish above their cap those relations are already
/// consequences of the others.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    pub ring: ReducedRing,
    base_gens: usize,
}

pub fn tensor_square(ring: &ReducedRing) -> Result<TensorSquare> {
    TensorSquare::new(ring, DEFAULT_TENSOR_BUDGET)
}

impl TensorSquare {
    pub fn new(base: &ReducedRing, budget: u128) -> Result<Self> {
        let total = base.total_dimension() as u128;
        let needed = total * total;
        if needed > budget {
            return Err(Error::TensorBudget { needed, budget });
        }
        let n = base.ngens();
        let cap = base.degree_cap();
        let pres = base.presentation();

        let mut generators = Vec::with_capacity(2 * n);
        for g in &pres.generators {
            generators.push(GeneratorInfo::new(format!("{}⊗1", g.name), g.degree));
        }
        for g in &pres.generators {
            generators.push(GeneratorInfo::new(format!("1⊗{}", g.name), g.degree));
        }

        let mut copy_relations: Vec<Polynomial> = base.rewrite_basis();
        copy_relations.extend(
            truncation_monomials(base)
                .into_iter()
                .map(Polynomial::from_monomial),
        );
        let mut relations = Vec::with_capacity(2 * copy_relations.len());
        for side in 0..2 {
            for r in &copy_relations {
                relations.push(
                    r.monomials()
                        .map(|m| {
                            let mut e = vec![0; 2 * n];
                            e[side * n..side * n + n].copy_from_slice(&m.0);
                            Monomial(e)
                        })
                        .collect(),
                );
            }
        }
        let square = Presentation::new(
            generators,
            relations,
            Some(2 * base.formal_dimension()),
            pres.simply_connected,
        )?;
        let ring = complete_presentation(&square, 2 * cap)?;
        Ok(TensorSquare { ring, base_gens: n })
    }

    pub fn base_gens(&self) -> usize {
        self.base_gens
    }

    /// `x ⊗ y` for base polynomials.
    pub fn tensor(&self, x: &Polynomial, y: &Polynomial) -> Result<Polynomial> {
        let n = self.base_gens;
        let mut out = Polynomial::zero();
        for a in x.monomials() {
            for b in y.monomials() {
                for m in [a, b] {
                    if m.len() != n {
                        return Err(Error::Arity {
                            expected: n,
                            got: m.len(),
                        });
                    }
                }
                let mut e = a.0.clone();
                e.extend_from_slice(&b.0);
                out.toggle(Monomial(e));
            }
        }
        self.ring.normal_form(&out)
    }

    /// The multiplication map `x ⊗ y ↦ x·y`, landing in the truncated base.
    pub fn multiplication_map(&self, base: &ReducedRing, u: &Polynomial) -> Result<Polynomial> {
        let n = self.base_gens;
        let degs = base.degrees();
        let mut out = Polynomial::zero();
        for m in u.monomials() {
            let e: Vec<u32> = (0..n).map(|i| m.0[i] + m.0[n + i]).collect();
            let mono = Monomial(e);
            if mono.degree(degs) <= base.degree_cap() {
                out.toggle(mono);
            }
        }
        base.normal_form(&out)
    }

    pub(crate) fn left_gen(&self, i: usize) -> Elem {
        self.ring.gen_elem(i)
    }

    pub(crate) fn right_gen(&self, i: usize) -> Elem {
        self.ring.gen_elem(self.base_gens + i)
    }

    /// Element-level multiplication map on a standard monomial of the square.
    pub(crate) fn mu_mono(&self, base: &ReducedRing, m: PMono) -> Elem {
        let n = self.base_gens;
        let l = self.ring.layout();
        let e: Vec<u32> = (0..n)
            .map(|i| l.exponent(m, i) + l.exponent(m, n + i))
            .collect();
        let d: u32 = e.iter().zip(base.degrees()).map(|(a, b)| a * b).sum();
        if d > base.degree_cap() {
            return Vec::new();
        }
        let packed = base.layout().pack(&e).expect("within base cap");
        base.nf(&[packed]).expect("base ring is complete")
    }
}

/// Minimal monomials of degree above the cap that the base's truncated rewrite
/// basis does not already reduce: every monomial above the cap is a multiple
/// of one of these or reducible to such multiples.
fn truncation_monomials(base: &ReducedRing) -> Vec<Monomial> {
    let cap = base.degree_cap();
    let degs = base.degrees().to_vec();
    let leads: Vec<Vec<u32>> = base
        .rewrite_basis()
        .iter()
        .map(|p| leading(base, p))
        .collect();
    let gmax = degs.iter().copied().max().unwrap_or(1);
    let limit = cap + gmax;
    let n = degs.len();
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);

    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(
        i: usize,
        deg: u32,
        exps: &mut Vec<u32>,
        ctx: &(&[u32], u32, u32, &[Vec<u32>]),
        divides: &dyn Fn(&[u32], &[u32]) -> bool,
        out: &mut Vec<Monomial>,
    ) {
        let (degs, cap, limit, leads) = *ctx;
        if leads.iter().any(|l| divides(l, exps)) {
            return;
        }
        if i == degs.len() {
            if deg > cap {
                // Minimal: removing any present generator drops to the cap or below.
                let minimal = (0..degs.len())
                    .filter(|&j| exps[j] > 0)
                    .all(|j| deg - degs[j] <= cap);
                if minimal {
                    out.push(Monomial(exps.clone()));
                }
            }
            return;
        }
        let mut d = deg;
        loop {
            rec(i + 1, d, exps, ctx, divides, out);
            if d > cap || d + degs[i] > limit {
                break;
            }
            d += degs[i];
            exps[i] += 1;
            if leads.iter().any(|l| divides(l, exps)) {
                break;
            }
        }
        exps[i] = 0;
    }
    rec(
        0,
        0,
        &mut exps,
        &(&degs, cap, limit, &leads),
        &divides,
        &mut out,
    );
    out
}

fn leading(ring: &ReducedRing, p: &Polynomial) -> Vec<u32> {
    let e = ring.to_elem(p).expect("basis element lies within the cap");
    ring.layout().unpack(e[0])
}

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use common::{add, monomials_of_degree};
use milnor_core::catalog::{self, SpaceDescriptor};
use milnor_core::f2poly::{Monomial, Polynomial, ReducedRing};
use milnor_core::invariants::{
    binom_parity, cup_length, zcl_basic_with, SearchOptions, ZeroDivisorAlgebra,
};
use milnor_core::Error;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DESCRIPTORS: &[&str] = &[
    "milnor-real:2,1",
    "milnor-real:3,2",
    "milnor-real:4,3",
    "milnor-real:5,5",
    "milnor-complex:3,1",
    "milnor-complex:4,2",
    "rp:4",
    "cp:3",
    "pps:2,3",
    "quot-real-z2:5,3@0010000",
    "quot-real-s1:5,3@01",
];

fn rings() -> &'static [ReducedRing] {
    static RINGS: OnceLock<Vec<ReducedRing>> = OnceLock::new();
    RINGS.get_or_init(|| {
        DESCRIPTORS
            .iter()
            .map(|d| d.parse::<SpaceDescriptor>().unwrap().ring().unwrap())
            .collect()
    })
}

fn algebras() -> &'static [ZeroDivisorAlgebra] {
    static ALGEBRAS: OnceLock<Vec<ZeroDivisorAlgebra>> = OnceLock::new();
    ALGEBRAS.get_or_init(|| {
        rings()
            .iter()
            .map(|r| ZeroDivisorAlgebra::new(r).unwrap())
            .collect()
    })
}

fn config(seed: u64, cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// A random homogeneous polynomial of degree `d` over all monomials.
fn random_homogeneous(ring: &ReducedRing, d: u32, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = Polynomial::zero();
    for m in monomials_of_degree(ring.degrees(), d) {
        if rng.gen_bool(0.5) {
            p.toggle(Monomial(m));
        }
    }
    p
}

/// A zero-divisor product, with products beyond the top degree read as zero.
fn zd(alg: &ZeroDivisorAlgebra, mults: &BTreeMap<String, u32>) -> Polynomial {
    match alg.product(mults) {
        Ok(p) => p,
        Err(Error::DegreeOverflow { .. }) => Polynomial::zero(),
        Err(e) => panic!("{e}"),
    }
}

proptest! {
    #![proptest_config(config(11, 256))]

    #[test]
    fn normal_form_is_idempotent(i in 0..DESCRIPTORS.len(), d in 0u32..16, seed in any::<u64>()) {
        let ring = &rings()[i];
        let d = d % (ring.degree_cap() + 1);
        let p = random_homogeneous(ring, d, seed);
        let nf = ring.normal_form(&p).unwrap();
        prop_assert_eq!(ring.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        i in 0..DESCRIPTORS.len(),
        degs in (0u32..16, 0u32..16, 0u32..16),
        seed in any::<u64>(),
    ) {
        let ring = &rings()[i];
        let cap = ring.degree_cap();
        let a = degs.0 % (cap + 1);
        let b = degs.1 % (cap - a + 1);
        let c = degs.2 % (cap - a - b + 1);
        let x = random_homogeneous(ring, a, seed);
        let y = random_homogeneous(ring, b, seed ^ 1);
        let z = random_homogeneous(ring, c, seed ^ 2);
        let xy = ring.multiply(&x, &y).unwrap();
        prop_assert_eq!(&xy, &ring.multiply(&y, &x).unwrap());
        let left = ring.multiply(&xy, &z).unwrap();
        let right = ring.multiply(&x, &ring.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        // Distributivity over a second factor of the same degree.
        let w = random_homogeneous(ring, b, seed ^ 3);
        let sum = ring.multiply(&x, &add(&y, &w)).unwrap();
        prop_assert_eq!(sum, add(&xy, &ring.multiply(&x, &w).unwrap()));
    }

    #[test]
    fn zero_divisor_products_vanish_monotonically(
        i in 0..DESCRIPTORS.len(),
        base in prop::collection::vec(0u32..6, 4),
        bump in prop::collection::vec(0u32..3, 4),
    ) {
        let alg = &algebras()[i];
        let labels: Vec<String> = alg.divisors().iter().map(|z| z.label.clone()).collect();
        let small: BTreeMap<String, u32> =
            labels.iter().zip(&base).map(|(l, &m)| (l.clone(), m)).collect();
        let large: BTreeMap<String, u32> = labels
            .iter()
            .zip(base.iter().zip(&bump))
            .map(|(l, (&m, &b))| (l.clone(), m + b))
            .collect();
        if zd(alg, &small).is_zero() {
            prop_assert!(zd(alg, &large).is_zero());
        }
    }

    #[test]
    fn zero_divisor_powers_expand_binomially(i in 0..DESCRIPTORS.len(), k in 0u32..24) {
        let alg = &algebras()[i];
        let ring = alg.base();
        let n = ring.ngens();
        let sq = alg.square();
        for g in 0..n {
            let deg = ring.degrees()[g];
            if k * deg > sq.ring.degree_cap() {
                continue;
            }
            let label = &alg.divisors()[g].label;
            let lhs = zd(alg, &BTreeMap::from([(label.clone(), k)]));
            let mut rhs = Polynomial::zero();
            for j in 0..=k {
                if binom_parity(k as u64, j as u64) == 1 {
                    let left = Polynomial::from_monomial(Monomial::var(n, g, k - j));
                    let right = Polynomial::from_monomial(Monomial::var(n, g, j));
                    rhs = add(&rhs, &sq.tensor(&left, &right).unwrap());
                }
            }
            prop_assert_eq!(lhs, rhs, "{} ^ {}", label, k);
        }
    }
}

proptest! {
    #![proptest_config(config(23, 48))]

    #[test]
    fn cup_length_adds_under_tensor_product(i in 0..DESCRIPTORS.len(), j in 0..DESCRIPTORS.len()) {
        let (p, q) = (&rings()[i], &rings()[j]);
        // The quotients are only finite truncations; keep to genuine duality rings.
        prop_assume!(p.is_poincare_symmetric() && q.is_poincare_symmetric());
        let t = catalog::tensor_product(p.presentation(), q.presentation()).unwrap();
        let ring = ReducedRing::new(&t).unwrap();
        prop_assert_eq!(
            cup_length(&ring).value,
            cup_length(p).value + cup_length(q).value
        );
    }

    #[test]
    fn parallel_and_sequential_searches_agree(i in 0..DESCRIPTORS.len()) {
        let ring = &rings()[i];
        let par = SearchOptions::default();
        let seq = SearchOptions { parallel: false, ..SearchOptions::default() };
        let a = zcl_basic_with(ring, &par).unwrap();
        let b = zcl_basic_with(ring, &seq).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(&a.witness, &b.witness);
        prop_assert_eq!(&a.product, &b.product);
        let again = zcl_basic_with(ring, &par).unwrap();
        prop_assert_eq!(a, again);
    }
}

mod common;

use common::{numeric_cyclotomic, random_word};
use dlcomplex::coeffs::{
    clear_denominators, cyclotomic, cyclotomic_factorization, format_cyclotomic, scalar_of,
    specialize, Clearing, CoefficientSystem, LaurentPoly, Scalar,
};
use dlcomplex::complex::{build_complex, optimize_ordering};
use dlcomplex::gen::{builtin, standard_builtins, toy};
use dlcomplex::homology::{compute_homology, homology_of_complex, HomologyTable};
use dlcomplex::linalg::{EuclideanRing, Field, Matrix, PolyRing, PrimeField, Rationals};
use dlcomplex::{AtomOrdering, AtomWord, GaussianStructure};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn load(key: &str) -> GaussianStructure {
    builtin(key).unwrap().structure
}

fn systems() -> Vec<CoefficientSystem> {
    vec![
        CoefficientSystem::trivial(),
        CoefficientSystem::sign(),
        CoefficientSystem::laurent_rational(),
    ]
}

fn summary(t: &HomologyTable) -> Vec<(usize, Vec<String>)> {
    t.degrees
        .iter()
        .map(|d| (d.free_rank, d.torsion.iter().map(|x| x.text.clone()).collect()))
        .collect()
}

#[test]
fn scalar_examples() {
    let a2 = load("artin:A2");
    let x = a2.objects()[0].id;
    for sys in systems() {
        assert_eq!(scalar_of(&a2, &AtomWord::identity(x), sys).unwrap(), Scalar::ONE);
    }
    let s = a2.word_from_names("s", None).unwrap();
    assert_eq!(scalar_of(&a2, &s, CoefficientSystem::sign()).unwrap(), Scalar { sign: -1, exponent: 0 });
    assert_eq!(
        scalar_of(&a2, &s, CoefficientSystem::laurent_rational()).unwrap(),
        Scalar { sign: 1, exponent: 1 }
    );
    assert_eq!(scalar_of(&a2, &s, CoefficientSystem::trivial()).unwrap(), Scalar::ONE);
}

#[test]
fn missing_transport_is_rejected() {
    let text = "GAUSSIAN-STRUCTURE v1\nOBJECT x\nOBJECT y\nATOM a x y 1\nATOM b y x 1\n";
    let s = dlcomplex::gen::parse_structure(text).unwrap();
    let a = s.word_from_names("a", None).unwrap();
    assert!(scalar_of(&s, &a, CoefficientSystem::trivial()).is_ok());
    assert!(matches!(
        scalar_of(&s, &a, CoefficientSystem::sign()),
        Err(dlcomplex::Error::Config(_))
    ));
}

#[test]
fn single_object_scalars_depend_only_on_length() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for key in ["artin:B3", "circ:G22", "dual:A3"] {
        let s = load(key);
        for _ in 0..100 {
            let len = rng.gen_range(1..7);
            let w = s.word(&random_word(&s, len, &mut rng)).unwrap();
            let l = s.length(&w) as i64;
            let sc = scalar_of(&s, &w, CoefficientSystem::laurent_rational()).unwrap();
            assert_eq!(sc, Scalar { sign: 1, exponent: l });
            let sg = scalar_of(&s, &w, CoefficientSystem::sign()).unwrap();
            assert_eq!(sg.sign, if l % 2 == 0 { 1 } else { -1 });
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_of_is_multiplicative(seed in any::<u64>(), shift in -3i64..4, which in 0usize..3) {
        let s = match which {
            0 => toy::commuting_cover(shift).unwrap(),
            1 => toy::free_cycle().unwrap(),
            _ => load("circ:G12"),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = rng.gen_range(1..9);
        let raw = random_word(&s, len, &mut rng);
        prop_assume!(!raw.is_empty());
        let cut = rng.gen_range(0..=raw.len());
        let (f, g) = (&raw[..cut], &raw[cut..]);
        let whole = s.word(&raw).unwrap();
        let word = |part: &[dlcomplex::AtomId], at| {
            if part.is_empty() { AtomWord::identity(at) } else { s.word(part).unwrap() }
        };
        let mid = if cut < raw.len() { s.atom(raw[cut]).source } else { s.atom(raw[cut - 1]).target };
        let (wf, wg) = (word(f, mid), word(g, mid));
        for sys in systems() {
            let lhs = scalar_of(&s, &whole, sys).unwrap();
            let rhs = scalar_of(&s, &wf, sys).unwrap().mul(scalar_of(&s, &wg, sys).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn transport_exponent() {
    // ℓ(f) = 2, ℓ(u_src) = 0, ℓ(u_tgt) = 3
    let s = toy::commuting_cover(2).unwrap();
    let f = s.word_from_names("t1.s1", None).unwrap();
    assert_eq!(s.length(&f), 2);
    let sc = scalar_of(&s, &f, CoefficientSystem::laurent_rational()).unwrap();
    assert_eq!(sc, Scalar { sign: 1, exponent: -1 });
}

/// `M_n · M_{n+1} = 0` computed with Laurent polynomial arithmetic.
#[test]
fn specialized_differentials_compose_to_zero() {
    let field = Rationals;
    for key in standard_builtins() {
        let s = load(key);
        let top = s.max_atoms_per_target();
        let complex = build_complex(&s, &optimize_ordering(&s).unwrap(), top, true).unwrap();
        for sys in systems() {
            let mats = specialize(&s, &complex, sys).unwrap();
            for n in 1..mats.len() - 1 {
                let (a, b) = (mats[n].to_laurent(&field), mats[n + 1].to_laurent(&field));
                for i in 0..a.rows() {
                    for j in 0..b.cols() {
                        let mut acc = LaurentPoly::zero();
                        for k in 0..a.cols() {
                            acc = acc.add(&field, &a[(i, k)].mul(&field, &b[(k, j)]));
                        }
                        assert!(acc.is_zero(), "{key} {sys}: M{n} M{} != 0", n + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_edge_column() {
    let s = toy::free_cycle().unwrap();
    let complex = build_complex(&s, &AtomOrdering::identity(&s), 1, true).unwrap();
    let m = &specialize(&s, &complex, CoefficientSystem::trivial()).unwrap()[1];
    for j in 0..m.cols() {
        let mut entries: Vec<i64> = m.column(j).map(|(_, e)| e.values().sum()).collect();
        entries.sort();
        assert_eq!(entries, vec![-1, 1]);
    }
}

#[test]
fn column_clearing_example() {
    let field = Rationals;
    let ring = PolyRing::new(field);
    let mut p = LaurentPoly::zero();
    for e in [-2, 0, 1] {
        p.add_term(&field, e, field.one());
    }
    let m = Matrix::from_rows(vec![vec![p]]).unwrap();
    let c = clear_denominators(&ring, &m, Clearing::PerColumn);
    let expected = ring.from_i64s(&[1, 0, 1, 1]);
    assert_eq!(c[(0, 0)], expected);
}

/// Different path-length choices and clearing modes only change units.
#[test]
fn clearing_and_transport_are_unit_invariant() {
    let reference = compute_homology(
        &toy::commuting_cover(0).unwrap(),
        &AtomOrdering::identity(&toy::commuting_cover(0).unwrap()),
        CoefficientSystem::laurent_rational(),
        2,
        true,
    )
    .unwrap();
    for shift in [-3, -1, 2, 5] {
        let s = toy::commuting_cover(shift).unwrap();
        let ord = AtomOrdering::identity(&s);
        let complex = build_complex(&s, &ord, 3, true).unwrap();
        let mats = specialize(&s, &complex, CoefficientSystem::laurent_rational()).unwrap();
        let negative = mats.iter().any(|m| {
            (0..m.cols()).any(|j| m.column(j).any(|(_, e)| e.keys().any(|&k| k < 0)))
        });
        // s1 acts by t^{-shift}, s2 by t^{2+shift}
        if shift > 0 || shift < -2 {
            assert!(negative, "shift {shift} should produce negative exponents");
        }
        for mode in [Clearing::PerColumn, Clearing::Global] {
            for sys in [CoefficientSystem::laurent_rational(), CoefficientSystem::laurent_prime(3).unwrap()] {
                let h = homology_of_complex(&s, &complex, sys, mode).unwrap();
                if sys == CoefficientSystem::laurent_rational() {
                    assert_eq!(summary(&h), summary(&reference), "shift {shift} {mode:?}");
                }
                let per = homology_of_complex(&s, &complex, sys, Clearing::PerColumn).unwrap();
                assert_eq!(summary(&h), summary(&per));
            }
        }
    }
}

/// The cover of `Z²` gives Koszul homology of the actions of `s²` and `t`.
#[test]
fn commuting_cover_homology() {
    let s = toy::commuting_cover(0).unwrap();
    let ord = AtomOrdering::identity(&s);
    let trivial = compute_homology(&s, &ord, CoefficientSystem::trivial(), 2, true).unwrap();
    assert_eq!(trivial.format_degree(0), "Z");
    assert_eq!(trivial.format_degree(1), "Z^2");
    assert_eq!(trivial.format_degree(2), "Z");
    let sign = compute_homology(&s, &ord, CoefficientSystem::sign(), 2, true).unwrap();
    assert_eq!(sign.format_degree(0), "Z/2");
    assert_eq!(sign.format_degree(1), "Z/2");
    assert_eq!(sign.format_degree(2), "0");
    let laurent = compute_homology(&s, &ord, CoefficientSystem::laurent_rational(), 2, true).unwrap();
    assert_eq!(laurent.degrees[0].cyclotomic_torsion(), Some(vec![vec![(1, 1)]]));
    assert_eq!(laurent.degrees[1].cyclotomic_torsion(), Some(vec![vec![(1, 1)]]));
    assert!(laurent.degrees[2].is_zero());
}

#[test]
fn cyclotomic_examples() {
    let ring = PolyRing::new(Rationals);
    assert_eq!(cyclotomic(&ring, 1), ring.from_i64s(&[-1, 1]));
    assert_eq!(cyclotomic(&ring, 6), ring.from_i64s(&[1, -1, 1]));
    let f2 = PolyRing::new(PrimeField::new(2).unwrap());
    let product = f2.mul(&cyclotomic(&f2, 6), &cyclotomic(&f2, 12));
    assert_eq!(product, f2.pow(&f2.from_i64s(&[1, 1, 1]), 3));
    assert_eq!(cyclotomic_factorization(&f2, &product), Some(vec![(3, 3)]));
    assert_eq!(format_cyclotomic(&[(3, 3)]), "Φ3^3");
    assert_eq!(cyclotomic_factorization(&ring, &ring.mul(&cyclotomic(&ring, 6), &cyclotomic(&ring, 12))), Some(vec![(6, 1), (12, 1)]));
}

#[test]
fn cyclotomics_match_roots_of_unity() {
    let ring = PolyRing::new(Rationals);
    for n in 1..=40u64 {
        let expected: Vec<BigInt> = numeric_cyclotomic(n).into_iter().map(BigInt::from).collect();
        let got = dlcomplex::coeffs::integer_cyclotomic(n);
        assert_eq!(got, expected, "Φ{n}");
        assert_eq!(cyclotomic(&ring, n).degree(), Some(dlcomplex::coeffs::totient(n) as usize));
    }
}

/// `Φ_{n p^r} ≡ Φ_n^{p^r − p^{r−1}}` modulo `p` for `p ∤ n`.
#[test]
fn cyclotomic_reduction_mod_p() {
    for (n, p, r) in [(3u64, 2u64, 1u32), (1, 3, 2), (5, 2, 2), (1, 2, 3), (7, 3, 1)] {
        let ring = PolyRing::new(PrimeField::new(p).unwrap());
        let pr = p.pow(r);
        let lhs = cyclotomic(&ring, n * pr);
        let rhs = ring.pow(&cyclotomic(&ring, n), (pr - pr / p) as u32);
        assert_eq!(lhs, rhs, "n={n} p={p} r={r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn factorization_recovers_products(idx in proptest::collection::vec((1u64..25, 1u32..3), 1..4)) {
        let ring = PolyRing::new(Rationals);
        let mut expected: std::collections::BTreeMap<u64, u32> = Default::default();
        let mut p = ring.one();
        for (n, e) in idx {
            p = ring.mul(&p, &ring.pow(&cyclotomic(&ring, n), e));
            *expected.entry(n).or_default() += e;
        }
        let got = cyclotomic_factorization(&ring, &p).unwrap();
        prop_assert_eq!(got, expected.into_iter().collect::<Vec<_>>());
    }
}

#[test]
fn non_cyclotomic_divisors_have_no_factorization() {
    let ring = PolyRing::new(Rationals);
    assert_eq!(cyclotomic_factorization(&ring, &ring.from_i64s(&[-2, 1])), None);
    assert_eq!(cyclotomic_factorization(&ring, &ring.from_i64s(&[1, 1, 0, 1])), None);
}

/// `dim H_n(F_p) ≥ rank H_n(Z)` for integral systems.
#[test]
fn universal_coefficient_rank_inequality() {
    for key in ["artin:A2", "artin:A3", "artin:B3", "circ:G12", "circ:G13", "circ:G22", "toy:commuting-cover"] {
        let s = load(key);
        let ord = optimize_ordering(&s).unwrap();
        let top = s.max_atoms_per_target();
        let complex = build_complex(&s, &ord, top + 1, true).unwrap();
        for kind in [CoefficientSystem::trivial(), CoefficientSystem::sign()] {
            let z = homology_of_complex(&s, &complex, kind, Clearing::PerColumn).unwrap();
            for p in [2, 3, 5] {
                let sys = CoefficientSystem::new(kind.kind, dlcomplex::coeffs::BaseRing::Prime(p)).unwrap();
                let fp = homology_of_complex(&s, &complex, sys, Clearing::PerColumn).unwrap();
                for n in 0..z.degrees.len() {
                    let zn = &z.degrees[n];
                    assert!(fp.degrees[n].free_rank >= zn.free_rank, "{key} {kind} F{p} H{n}");
                    // exact count: free part plus torsion divisible by p, in degrees n and n-1
                    let tors = |d: &dlcomplex::homology::DegreeHomology| {
                        d.integer_torsion().iter().filter(|t| *t % BigInt::from(p) == BigInt::from(0)).count()
                    };
                    let below = if n > 0 { tors(&z.degrees[n - 1]) } else { 0 };
                    assert_eq!(fp.degrees[n].free_rank, zn.free_rank + tors(zn) + below, "{key} {kind} F{p} H{n}");
                }
            }
        }
    }
}

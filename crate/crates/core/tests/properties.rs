use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use heckelab::algebra::{solve_linear_exact, ExactRational, Monomial, MultiPoly, RationalFunction, TruncatedSeries, Var};
use heckelab::hecke::dirichlet::{dirichlet_from_euler, factorize};
use heckelab::hecke::{check_normalization, spherical_image, HeckeElement, Normalization, SatakeParams};
use heckelab::lifts;
use heckelab::motives::{self, GammaKind};

const VARS: [Var; 5] = [Var::P, Var::X0, Var::X1, Var::Y0, Var::X];

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::array::uniform5(0u16..3), -5i64..=5), 0..5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(e, c)| {
            let pairs: Vec<(Var, u16)> = VARS.iter().copied().zip(e).collect();
            (Monomial::from_pairs(&pairs), ExactRational::from_integer(c))
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |f| !f.is_zero())
}

fn hecke2() -> impl Strategy<Value = HeckeElement> {
    prop::collection::vec((prop::array::uniform3(0u16..3), -4i64..=4), 1..4).prop_map(|terms| {
        HeckeElement::from_terms(
            2,
            terms
                .into_iter()
                .map(|(e, c)| ([e[0], e[1], e[2], 0], RationalFunction::int(c))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
    }

    #[test]
    fn exact_divide_round_trip(a in poly(), b in nonzero_poly()) {
        let q = (&a * &b).exact_divide(&b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn rational_function_field(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = RationalFunction::new(c.clone(), a.clone()).unwrap();
        prop_assert_eq!(&f * &g, RationalFunction::new(c, b).unwrap());
        prop_assert_eq!(&f * &f.inverse().unwrap(), RationalFunction::one());
    }

    #[test]
    fn series_inverse(tail in prop::collection::vec(-6i64..=6, 0..6), order in 1usize..9) {
        let mut coeffs = vec![ExactRational::from_integer(1)];
        coeffs.extend(tail.into_iter().map(ExactRational::from_integer));
        let f = TruncatedSeries::new(coeffs, order);
        let prod = f.mul(&f.invert().unwrap());
        prop_assert_eq!(prod, TruncatedSeries::one(order));
    }

    #[test]
    fn linear_solver(entries in prop::collection::vec(-9i64..=9, 9), x in prop::collection::vec(-9i64..=9, 3)) {
        let q = |v: i64| ExactRational::from_integer(v);
        let a: Vec<Vec<ExactRational>> = entries.chunks(3).map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        let det = entries[0] * (entries[4] * entries[8] - entries[5] * entries[7])
            - entries[1] * (entries[3] * entries[8] - entries[5] * entries[6])
            + entries[2] * (entries[3] * entries[7] - entries[4] * entries[6]);
        prop_assume!(det != 0);
        let b: Vec<ExactRational> = a
            .iter()
            .map(|row| row.iter().zip(&x).fold(ExactRational::zero(), |s, (r, &xi)| &s + &(r * &q(xi))))
            .collect();
        let sol = solve_linear_exact(&a, &b).unwrap();
        prop_assert_eq!(sol, x.iter().map(|&v| q(v)).collect::<Vec<_>>());
    }

    #[test]
    fn omega_is_a_homomorphism(a in hecke2(), b in hecke2()) {
        for norm in [Normalization::Polynomial, Normalization::Eigenvalue] {
            let oa = spherical_image(&a, norm).unwrap();
            let ob = spherical_image(&b, norm).unwrap();
            prop_assert_eq!(spherical_image(&(&a * &b), norm).unwrap(), &oa * &ob);
            prop_assert_eq!(spherical_image(&(&a + &b), norm).unwrap(), &oa + &ob);
        }
    }

    #[test]
    fn dirichlet_multiplicative(c2 in -4i64..=4, c3 in -4i64..=4, c5 in -4i64..=4, h1 in 1u64..=30, h2 in 1u64..=30) {
        let mut factors = BTreeMap::new();
        for (q, c) in [(2u64, c2), (3, c3), (5, c5)] {
            let lin = MultiPoly::int(c) * MultiPoly::var(Var::X);
            let quad = MultiPoly::int(q as i64) * MultiPoly::var_pow(Var::X, 2);
            factors.insert(q, &(&MultiPoly::one() - &lin) + &quad);
        }
        let d = dirichlet_from_euler(&factors, 900).unwrap();
        prop_assume!(num_integer::gcd(h1, h2) == 1);
        prop_assert_eq!(d.get(h1 * h2), &(d.get(h1) * d.get(h2)));
        if factorize(h1).iter().any(|&(q, _)| q > 5) {
            prop_assert!(d.get(h1).is_zero());
        }
    }

    #[test]
    fn hodge_symmetry(n in 1u32..=3, extra in 1i64..=12) {
        let k = n as i64 + extra;
        let h = motives::hodge_spin(n, k).unwrap();
        prop_assert!(h.is_symmetric());
        prop_assert_eq!(h.rank(), 1usize << n);
        let pairs = h.concrete_pairs().unwrap();
        let diff: i64 = pairs.iter().map(|(p, q)| p - q).sum();
        prop_assert_eq!(diff, 0);
        let s = motives::hodge_standard(n, k);
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(s.rank(), 2 * n as usize + 1);
    }

    #[test]
    fn critical_values_symmetric(k1 in 2i64..30, d2 in 0i64..10, d3 in 0i64..10) {
        let k2 = (k1 - d2).max(1);
        let k3 = (k2 - d3).max(1);
        let g = motives::gamma_data(GammaKind::Triple, &[k1, k2, k3]).unwrap();
        let crit = motives::critical_values(&g);
        let center = g.center;
        for s in &crit {
            prop_assert!(crit.contains(&(center - s)));
        }
    }

    #[test]
    fn eisenstein_multiplicative(k in 2u32..14, m in 1u64..=100, n in 1u64..=100) {
        let p = 7;
        prop_assume!(num_integer::gcd(m, n) == 1 && m * n <= 10_000);
        let a = |x: u64| lifts::eisenstein_family_coeff(x, k, p).unwrap();
        prop_assert_eq!(a(m * n), a(m) * a(n));
    }

    #[test]
    fn eisenstein_slope_zero(p in prop::sample::select(vec![2u64, 3, 5, 7, 11]), k in 2u32..30) {
        let pk = BigInt::from(p).pow(k - 1);
        let s = lifts::slope_quadratic(&(&pk + 1), &pk, p).unwrap();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn lift_params_invariants(n in 1u32..=4, half in 1i64..=12) {
        let k = 2 * half + (n as i64 % 2);
        let params = lifts::ikeda_satake(n, k);
        prop_assert!(params.invariants_hold());
        prop_assert!(lifts::family_substitution_consistent(n, k));
        let sp = SatakeParams::eisenstein(n as u8, k + 2);
        prop_assert!(check_normalization(&sp).unwrap().holds);
    }

    #[test]
    fn gamma_recurrence(re in 0.1f64..8.0, im in -20.0f64..20.0) {
        let z = Complex64::new(re, im);
        let lhs = motives::gamma(z + 1.0).unwrap();
        let rhs = z * motives::gamma(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1e-300));
    }
}

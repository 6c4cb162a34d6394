//! Randomized property suites shared by the property tests and the
//! acceptance harness. Each suite runs `cases` random instances and reports
//! the first failure as text.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use thom_core::algebra::{LinearSystem, Polynomial, SolveError, VarId};
use thom_core::closed_forms::{geometric_seed, w_function, PascalStaircase};
use thom_core::partitions::{Partition, SchurExpansion};
use thom_core::schur::{
    complete, evaluate_expansion, multi_schur, pi_operator, schur, schur_factorized,
    transformed_multi_schur, Alphabet, AlphabetDiff, Letter,
};
use thom_core::BigInt;

pub type Outcome = Result<(), String>;

const VARS: [VarId; 4] = [VarId::X1, VarId::X2, VarId::X, VarId::T];

fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config)
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn letter() -> impl Strategy<Value = Letter> {
    (prop::collection::vec(-2i64..=2, 4), -2i64..=2)
        .prop_map(|(cs, k)| Letter::new(VARS.iter().copied().zip(cs).filter(|(_, c)| *c != 0), k))
}

pub fn alphabet(max: usize) -> impl Strategy<Value = Alphabet> {
    prop::collection::vec(letter(), 0..=max).prop_map(Alphabet::new)
}

pub fn partition(max_weight: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=max_weight, 0..=max_len).prop_filter_map(
        "too heavy",
        move |parts| {
            let p = Partition::from_unsorted(parts);
            (p.weight() <= max_weight).then_some(p)
        },
    )
}

fn poly_x1x2() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..=4, 0u32..=4, -3i64..=3), 0..=5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Polynomial::zero(), |acc, (j, i, c)| {
                acc + (Polynomial::var(VarId::X1).pow(j) * Polynomial::var(VarId::X2).pow(i))
                    .scale(&BigInt::from(c))
            })
    })
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    let vars = [VarId::X1, VarId::X2, VarId::b(1), VarId::b(2), VarId::y(1)];
    prop::collection::vec((prop::collection::vec(0u32..=2, 5), -4i64..=4), 0..=5).prop_map(
        move |terms| {
            terms
                .into_iter()
                .fold(Polynomial::zero(), |acc, (exps, c)| {
                    let m = vars
                        .iter()
                        .zip(exps)
                        .fold(Polynomial::constant(c), |m, (&v, e)| {
                            m * Polynomial::var(v).pow(e)
                        });
                    acc + m
                })
        },
    )
}

pub fn symbolic(first: u32, n: u32) -> Alphabet {
    Alphabet::new(
        (first..first + n)
            .map(|j| Letter::var(VarId::y(j)))
            .collect(),
    )
}

pub fn ring_axioms(cases: u32) -> Outcome {
    run(
        cases,
        (small_poly(), small_poly(), small_poly()),
        |(a, b, c)| {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
            }
            Ok(())
        },
    )
}

pub fn cancellation(cases: u32) -> Outcome {
    run(
        cases,
        (partition(8, 4), alphabet(2), alphabet(2), alphabet(2)),
        |(i, a, b, c)| {
            let lhs = schur(&i, &AlphabetDiff::new(a.union(&c), b.union(&c)));
            prop_assert_eq!(lhs, schur(&i, &AlphabetDiff::new(a, b)));
            Ok(())
        },
    )
}

pub fn duality(cases: u32) -> Outcome {
    run(
        cases,
        (partition(7, 4), alphabet(2), alphabet(2)),
        |(i, a, b)| {
            let lhs = schur(&i, &AlphabetDiff::new(a.clone(), b.clone()));
            let rhs = schur(&i.conjugate(), &AlphabetDiff::new(b, a));
            prop_assert_eq!(lhs, if i.weight() % 2 == 0 { rhs } else { -rhs });
            Ok(())
        },
    )
}

pub fn hook_vanishing(cases: u32) -> Outcome {
    run(cases, (partition(8, 5), 0u32..=2, 0u32..=2), |(i, m, n)| {
        let s = schur(&i, &AlphabetDiff::new(symbolic(1, m), Alphabet::b(n)));
        prop_assert_eq!(s.is_zero(), !i.hook_contained(m as usize, n));
        Ok(())
    })
}

pub fn linearity(cases: u32) -> Outcome {
    run(cases, (alphabet(2), 1u32..=4, 0usize..=8), |(e, n, j)| {
        let with = |k: u32| complete(&AlphabetDiff::minus_only(e.union(&Alphabet::b(k))), j);
        let full = with(n);
        let less = with(n - 1);
        let below = if j == 0 {
            Polynomial::zero()
        } else {
            less[j - 1].clone()
        };
        prop_assert_eq!(
            full[j].clone(),
            &less[j] - &(Polynomial::var(VarId::b(n)) * below)
        );
        Ok(())
    })
}

pub fn factorization(cases: u32) -> Outcome {
    let strategy = (alphabet(2), alphabet(3), partition(4, 2), partition(4, 2));
    run(cases, strategy, |(plus, minus, top, lower)| {
        let (m, n) = (plus.len(), minus.len() as u32);
        let top_parts: Vec<u32> = top.padded(m).into_iter().map(|p| p + n).collect();
        let floor = top_parts.first().copied().unwrap_or(u32::MAX);
        prop_assume!(lower.largest() <= floor);
        let mut parts = lower.parts().to_vec();
        parts.extend(top_parts);
        let i = Partition::new(parts).unwrap();
        let d = AlphabetDiff::new(plus, minus);
        prop_assert_eq!(schur_factorized(&i, &d).unwrap(), schur(&i, &d));
        Ok(())
    })
}

pub fn transformation_lemma(cases: u32) -> Outcome {
    let strategy = (
        prop::collection::vec(-1i64..=4, 1..=3),
        prop::collection::vec((alphabet(2), alphabet(1)), 3),
        prop::collection::vec(alphabet(2), 3),
    );
    run(cases, strategy, |(indices, columns, extra)| {
        let s = indices.len();
        let columns: Vec<AlphabetDiff> = columns
            .into_iter()
            .take(s)
            .map(|(a, b)| AlphabetDiff::new(a, b))
            .collect();
        let rows: Vec<Alphabet> = extra
            .into_iter()
            .take(s)
            .enumerate()
            .map(|(p, a)| Alphabet::new(a.letters().iter().take(s - 1 - p).cloned().collect()))
            .collect();
        prop_assert_eq!(
            transformed_multi_schur(&indices, &columns, &rows).unwrap(),
            multi_schur(&indices, &columns).unwrap()
        );
        Ok(())
    })
}

pub fn pi_identity(cases: u32) -> Outcome {
    run(cases, poly_x1x2(), |f| {
        let x1 = Polynomial::var(VarId::X1);
        let x2 = Polynomial::var(VarId::X2);
        let swapped = f
            .substitute(VarId::X1, &Polynomial::var(VarId::T))
            .substitute(VarId::X2, &x1)
            .substitute(VarId::T, &x2);
        let expected = (&(&x1 * &f) - &(&x2 * &swapped))
            .div_exact(&(&x1 - &x2))
            .unwrap();
        let image = evaluate_expansion(
            &pi_operator(&f).unwrap(),
            &AlphabetDiff::plus_only(Alphabet::x2()),
        );
        prop_assert_eq!(image, expected);
        Ok(())
    })
}

pub fn conjugate_involution(cases: u32) -> Outcome {
    run(cases, partition(14, 7), |p| {
        let c = p.conjugate();
        prop_assert_eq!(c.weight(), p.weight());
        prop_assert_eq!(c.conjugate(), p);
        Ok(())
    })
}

pub fn phi_is_injective(cases: u32) -> Outcome {
    let terms = || prop::collection::vec((partition(10, 3), 1i64..=9), 1..=6);
    run(cases, (terms(), terms()), |(a, b)| {
        let e: SchurExpansion = a.into_iter().map(|(p, c)| (p, BigInt::from(c))).collect();
        let f: SchurExpansion = b.into_iter().map(|(p, c)| (p, BigInt::from(c))).collect();
        let pe = e.phi(3).unwrap();
        prop_assert!(pe.partitions().all(|p| p.length() == 3));
        let weights: Vec<u32> = e.partitions().map(|p| p.weight() + 3).collect();
        prop_assert_eq!(
            pe.partitions().map(Partition::weight).collect::<Vec<_>>(),
            weights
        );
        prop_assert_eq!(pe == f.phi(3).unwrap(), e == f);
        Ok(())
    })
}

pub fn linear_solutions(cases: u32) -> Outcome {
    let strategy = (
        prop::collection::vec(-20i64..=20, 1..=5),
        prop::collection::vec(prop::collection::vec(-5i64..=5, 5), 5..=9),
    );
    run(cases, strategy, |(x, rows)| {
        let n = x.len();
        let unknowns: Vec<Partition> = (1..=n as u32)
            .map(|k| Partition::new(vec![k]).unwrap())
            .collect();
        let mut sys = LinearSystem::new(unknowns);
        for row in &rows {
            let row: Vec<BigInt> = row.iter().take(n).map(|&a| BigInt::from(a)).collect();
            let b: BigInt = row.iter().zip(&x).map(|(a, &v)| a * v).sum();
            sys.push_row(row, b).unwrap();
        }
        match sys.solve() {
            Ok(sol) => {
                prop_assert!(sys.is_satisfied_by(&sol.values));
                let want: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
                prop_assert_eq!(sol.values, want);
            }
            Err(e) => {
                let underdetermined = matches!(e, SolveError::Underdetermined { .. });
                prop_assert!(underdetermined);
            }
        }
        Ok(())
    })
}

fn sum_letter() -> Letter {
    Letter::new([(VarId::X1, 1), (VarId::X2, 1)], 0)
}

/// W(d, x1+x2) over the staircase of 1/(1−zy) equals (y−1) y^{d−1} S_d(X2).
pub fn w_lemma(cases: u32) -> Outcome {
    let sum = Alphabet::new(vec![sum_letter()]);
    let x2 = complete(&AlphabetDiff::plus_only(Alphabet::x2()), 9);
    run(cases, (-4i64..=6, 0usize..=8), |(y, d)| {
        let p = PascalStaircase::new(&geometric_seed(y, 9), 9).unwrap();
        let w = w_function(d, &sum, &p).unwrap();
        if d == 0 {
            prop_assert_eq!(w, Polynomial::one());
        } else {
            let factor = BigInt::from(y - 1) * BigInt::from(y).pow(d as u32 - 1);
            prop_assert_eq!(w, x2[d].scale(&factor));
        }
        Ok(())
    })
}

/// y^n W(d, x1+x2+B) = (y−1) y^{d−1} Σ_k y^{n−k} S_{d−k}(X2) S_k(−B) for |B| = n.
pub fn w_corollary(cases: u32) -> Outcome {
    let x2 = complete(&AlphabetDiff::plus_only(Alphabet::x2()), 9);
    run(cases, (1u32..=2, -3i64..=4, 3usize..=8), |(n, y, d)| {
        let b = Alphabet::b(n);
        let a = b.with(sum_letter());
        let minus_b = complete(&AlphabetDiff::minus_only(b), 9);
        let p = PascalStaircase::new(&geometric_seed(y, 9), 9).unwrap();
        let yb = BigInt::from(y);
        let lhs = w_function(d, &a, &p).unwrap().scale(&yb.pow(n));
        let mut inner = Polynomial::zero();
        for k in 0..=n as usize {
            inner = inner + (&x2[d - k] * &minus_b[k]).scale(&yb.pow(n - k as u32));
        }
        let rhs = inner.scale(&(BigInt::from(y - 1) * yb.pow(d as u32 - 1)));
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

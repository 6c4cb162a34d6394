mod suites;

use std::collections::BTreeSet;

use thom_core::algebra::{LinearSystem, Polynomial, VarId};
use thom_core::catalog::{substitution, Family, SingularityId};
use thom_core::closed_forms::f_i_r;
use thom_core::partitions::{
    contains, enumerate_candidates, partitions_of, Partition, SchurExpansion,
};
use thom_core::schur::{schur, Alphabet, AlphabetDiff};
use thom_core::BigInt;

use suites::symbolic;

macro_rules! suite {
    ($($name:ident: $cases:expr),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                if let Err(e) = suites::$name($cases) {
                    panic!("{e}");
                }
            }
        )*
    };
}

suite! {
    ring_axioms: 200,
    cancellation: 120,
    duality: 120,
    hook_vanishing: 120,
    linearity: 120,
    factorization: 120,
    transformation_lemma: 120,
    pi_identity: 120,
    conjugate_involution: 120,
    phi_is_injective: 120,
    linear_solutions: 120,
    w_lemma: 100,
    w_corollary: 100,
}

fn boxes(p: &Partition) -> BTreeSet<(usize, u32)> {
    p.parts()
        .iter()
        .rev()
        .enumerate()
        .flat_map(|(row, &len)| (0..len).map(move |c| (row, c)))
        .collect()
}

#[test]
fn containment_matches_box_sets() {
    let all: Vec<Partition> = (0..=12).flat_map(|w| partitions_of(w, 12)).collect();
    for p in &all {
        let bp = boxes(p);
        for q in &all {
            if p.weight() > q.weight() {
                continue;
            }
            assert_eq!(contains(p, q), bp.is_subset(&boxes(q)), "{p} in {q}");
        }
    }
}

#[test]
fn candidates_are_sorted_and_distinct() {
    for (w, width, height, len, cap) in [
        (10, 3, 2, 4, None),
        (14, 4, 2, 4, Some(3)),
        (13, 4, 2, 4, None),
        (12, 4, 1, 3, None),
    ] {
        let c = enumerate_candidates(w, width, height, len, cap);
        assert!(c.windows(2).all(|p| p[0] < p[1]));
        assert!(c
            .iter()
            .all(|p| p.weight() == w && p.length() <= len && p.contains_rectangle(width, height)));
        if let Some(cap) = cap {
            assert!(c.iter().all(|p| p.padded(len)[1] <= cap));
        }
    }
}

#[test]
fn h_parts_partition_homogeneous_expansions() {
    let e = thom_core::closed_forms::thom_a3(4).unwrap();
    let offset = 3;
    let mut union = SchurExpansion::new();
    let mut seen = BTreeSet::new();
    for h in 1..=e.max_length() {
        let part = e.h_part(h, offset);
        for p in part.partitions() {
            assert!(seen.insert(p.clone()), "{p} in two h-parts");
        }
        union = union.add(&part);
    }
    assert_eq!(union, e);
    assert_eq!(e.h_part(1, offset), f_i_r(3, 4).unwrap());
}

#[test]
fn iii22_vanishing_follows_from_i22() {
    let x1x2 = Polynomial::var(VarId::X1) + Polynomial::var(VarId::X2);
    for r in 2..=4u32 {
        let i22 = substitution(&SingularityId::new(Family::I(2, 2), r).unwrap()).unwrap();
        let iii22 = substitution(&SingularityId::new(Family::III(2, 2), r).unwrap()).unwrap();
        for p in enumerate_candidates(3 * r + 1, r + 1, 2, 3, None) {
            let specialized = schur(&p, &i22).substitute(VarId::b(r - 1), &x1x2);
            assert_eq!(specialized, schur(&p, &iii22), "r={r} {p}");
        }
    }
}

#[test]
fn schur_basis_has_full_rank() {
    // Evaluations of {S_I : I in the (2,1)-hook, |I| <= 6} at integer points.
    let d = AlphabetDiff::new(symbolic(1, 2), Alphabet::b(1));
    let basis: Vec<Partition> = (0..=6)
        .flat_map(|w| partitions_of(w, 6))
        .filter(|p| p.hook_contained(2, 1))
        .collect();
    let polys: Vec<Polynomial> = basis.iter().map(|p| schur(p, &d)).collect();
    let mut rows = Vec::new();
    let mut state = 7u64;
    for _ in 0..3 * basis.len() {
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            BigInt::from((state >> 33) as i64 % 11 - 5)
        };
        let pt = [next(), next(), next()];
        let at = |v: VarId| {
            if v == VarId::y(1) {
                pt[0].clone()
            } else if v == VarId::y(2) {
                pt[1].clone()
            } else {
                pt[2].clone()
            }
        };
        rows.push(polys.iter().map(|q| q.eval(at)).collect::<Vec<BigInt>>());
    }
    let unknowns = basis.clone();
    let mut sys = LinearSystem::new(unknowns);
    for row in rows {
        sys.push_row(row, BigInt::from(0)).unwrap();
    }
    assert_eq!(sys.rank(), basis.len());
}

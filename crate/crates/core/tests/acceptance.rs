// Copyright 2026 The gateset Authors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fail.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use gateset_core::appendix::verify_appendix;
use gateset_core::group::{center_distance, is_in_ball, space_a, DiagramKind, WitnessReason};
use gateset_core::io::{named_gate, special_unitarize};
use gateset_core::matrix::LogTraceVerdict;
use gateset_core::random::{
    haar_special_unitary, haar_unitary, random_traceless_skew_hermitian, seeded_rng, SeededRng,
};
use gateset_core::{
    AlgebraElement, AlgebraEngine, Answer, ComplexMatrix, GroupEngine, ProjectorVariant,
    RealSubspace, SearchBudget, SuStructure, Tolerances, WordClosure,
};

type CMat = DMatrix<Complex64>;
type Criterion = (&'static str, fn() -> String);

const I: Complex64 = Complex64::new(0.0, 1.0);

// ---------------------------------------------------------------------------
// Independent oracles on plain complex matrices.

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pauli(p: char) -> CMat {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    match p {
        'I' => CMat::from_row_slice(2, 2, &[o, z, z, o]),
        'X' => CMat::from_row_slice(2, 2, &[z, o, o, z]),
        'Y' => CMat::from_row_slice(2, 2, &[z, -I, I, z]),
        'Z' => CMat::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => unreachable!(),
    }
}

/// `t * i * (tensor product of Paulis)`.
fn ipauli(word: &str, t: f64) -> CMat {
    let m = word
        .chars()
        .map(pauli)
        .reduce(|a, b| a.kronecker(&b))
        .unwrap();
    m * (I * t)
}

/// Embeds a 2x2 block in the top-left corner of a `d x d` matrix, padding
/// the diagonal with `pad`.
fn block(m: &CMat, d: usize, pad: Complex64) -> CMat {
    let mut out = CMat::identity(d, d) * pad;
    out.view_mut((0, 0), (2, 2)).copy_from(m);
    out
}

fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// Real vector of the real and imaginary parts.
fn realify(m: &CMat) -> DVector<f64> {
    let mut v = DVector::zeros(2 * m.len());
    for (k, z) in m.iter().enumerate() {
        v[2 * k] = z.re;
        v[2 * k + 1] = z.im;
    }
    v
}

fn unrealify(v: &DVector<f64>, d: usize) -> CMat {
    CMat::from_iterator(d, d, (0..d * d).map(|k| c(v[2 * k], v[2 * k + 1])))
}

/// Gram-Schmidt with re-orthogonalization; returns true if `v` was new.
/// The cutoff is absolute: basis vectors are unit and inputs are O(1).
fn push_independent(basis: &mut Vec<DVector<f64>>, v: &DVector<f64>) -> bool {
    let mut w = v.clone();
    for _ in 0..2 {
        for b in basis.iter() {
            let p = b.dot(&w);
            w -= b * p;
        }
    }
    if w.norm() < 1e-8 {
        return false;
    }
    let n = w.norm();
    basis.push(w / n);
    true
}

/// Dimension of the real Lie algebra generated by the given matrices,
/// by brute-force bracketing until the span stops growing.
fn oracle_generated_dim(gens: &[CMat]) -> usize {
    let d = gens[0].nrows();
    let mut basis = Vec::new();
    for g in gens {
        push_independent(&mut basis, &realify(g));
    }
    loop {
        let mats: Vec<CMat> = basis.iter().map(|v| unrealify(v, d)).collect();
        let mut grew = false;
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                grew |= push_independent(&mut basis, &realify(&commutator(&mats[i], &mats[j])));
            }
        }
        if !grew {
            return basis.len();
        }
    }
}

/// Matrix of `M -> g M g^dag` on the structure's basis, assembled from
/// traces.
fn oracle_ad_group(s: &SuStructure, g: &CMat) -> DMatrix<f64> {
    let basis: Vec<CMat> = s.basis().iter().map(|b| b.as_dmatrix().clone()).collect();
    let n = basis.len();
    DMatrix::from_fn(n, n, |i, j| {
        let image = g * &basis[j] * g.adjoint();
        -(&basis[i] * image).trace().re
    })
}

/// `ad_x` assembled from traces.
fn oracle_ad_algebra(s: &SuStructure, x: &CMat) -> DMatrix<f64> {
    let basis: Vec<CMat> = s.basis().iter().map(|b| b.as_dmatrix().clone()).collect();
    let n = basis.len();
    DMatrix::from_fn(n, n, |i, j| {
        -(&basis[i] * commutator(x, &basis[j])).trace().re
    })
}

fn cm(m: CMat) -> ComplexMatrix {
    ComplexMatrix::from_dmatrix(m).unwrap()
}

fn coords(s: &SuStructure, m: &CMat) -> AlgebraElement {
    s.to_coords(&cm(m.clone())).unwrap()
}

fn random_skew(rng: &mut SeededRng, d: usize) -> CMat {
    let norm = rng.random_range(0.2..2.0);
    random_traceless_skew_hermitian(rng, d, norm).into_dmatrix()
}

/// Random Hamiltonian sets drawn from a few structured families, each
/// conjugated by a Haar-random unitary so no family is basis-aligned.
fn random_set(rng: &mut SeededRng, d: usize, size: usize) -> Vec<CMat> {
    let family = rng.random_range(0..5);
    let v = haar_unitary(rng, d).into_dmatrix();
    let raw: Vec<CMat> = (0..size)
        .map(|_| match family {
            // generic
            0 => random_skew(rng, d),
            // commuting: a Cartan subalgebra
            1 => {
                let mut diag: Vec<f64> = (0..d).map(|_| rng.random_range(-1.0..1.0)).collect();
                let mean = diag.iter().sum::<f64>() / d as f64;
                diag.iter_mut().for_each(|x| *x -= mean);
                CMat::from_diagonal(&DVector::from_iterator(d, diag.iter().map(|&x| I * x)))
            }
            // su(2) block, possibly plus a commuting diagonal term
            2 | 3 => {
                let a = random_skew(rng, 2);
                let mut m = block(&a, d, c(0.0, 0.0));
                if family == 3 && d > 2 {
                    let t = rng.random_range(-1.0..1.0);
                    let mut diag = vec![c(0.0, 0.0); d];
                    diag[0] = I * t * (d - 2) as f64;
                    diag[1] = I * t * (d - 2) as f64;
                    for z in diag.iter_mut().skip(2) {
                        *z = I * (-2.0 * t);
                    }
                    m += CMat::from_diagonal(&DVector::from_vec(diag));
                }
                m
            }
            // local operations on the first qubit, or a lower block
            _ => {
                if d == 4 {
                    random_skew(rng, 2).kronecker(&CMat::identity(2, 2))
                } else if d == 3 {
                    let a = random_skew(rng, 2);
                    let mut m = CMat::zeros(3, 3);
                    m.view_mut((1, 1), (2, 2)).copy_from(&a);
                    m
                } else {
                    random_skew(rng, 2)
                }
            }
        })
        .collect();
    raw.iter().map(|m| &v * m * v.adjoint()).collect()
}

/// A random element of the algebra generated by `xs`.
fn random_member(rng: &mut SeededRng, xs: &[CMat]) -> CMat {
    let mut m = CMat::zeros(xs[0].nrows(), xs[0].ncols());
    for x in xs {
        m += x * c(rng.random_range(-1.0..1.0), 0.0);
    }
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            m += commutator(&xs[i], &xs[j]) * c(rng.random_range(-1.0..1.0), 0.0);
        }
    }
    m
}

fn subspace_elements(g: &RealSubspace) -> Vec<AlgebraElement> {
    g.vectors()
        .map(|v| AlgebraElement::from_vector(&v))
        .collect()
}

fn special(name: &str) -> ComplexMatrix {
    special_unitarize(&named_gate(name, 2).unwrap()).unwrap()
}

/// `H' = iH` and `S' = e^{-i pi/4} S` as exponentials of su(2) elements.
fn h_s_hamiltonians() -> (CMat, CMat) {
    let h = (ipauli("X", FRAC_PI_2) + ipauli("Z", FRAC_PI_2)) * c(FRAC_1_SQRT_2, 0.0);
    (h, ipauli("Z", -FRAC_PI_4))
}

fn su3_block_basis(s: &SuStructure) -> Vec<AlgebraElement> {
    ['X', 'Y', 'Z']
        .iter()
        .map(|p| coords(s, &block(&ipauli(&p.to_string(), 1.0), 3, c(0.0, 0.0))))
        .collect()
}

fn block_h_s_gates() -> Vec<ComplexMatrix> {
    let (h, sg) = h_s_hamiltonians();
    [h, sg]
        .iter()
        .map(|x| cm(block(&x.clone().exp(), 3, c(1.0, 0.0))))
        .collect()
}

// ---------------------------------------------------------------------------
// Criteria. Each returns a short summary on success and panics otherwise.

fn algebra_oracle_equivalence() -> String {
    let tol = Tolerances::default();
    let mut rng = seeded_rng(1);
    let mut yes = [0usize; 2];
    for case in 0..200 {
        let d = [2, 3, 4][case % 3];
        let s = SuStructure::new(d).unwrap();
        let e = AlgebraEngine::new(&s, tol).unwrap();
        let size = rng.random_range(1..=4);
        let x1 = random_set(&mut rng, d, size);
        let ys: Vec<CMat> = if rng.random_bool(0.5) {
            (0..rng.random_range(1..=2))
                .map(|_| random_member(&mut rng, &x1))
                .collect()
        } else {
            {
                let k = rng.random_range(1..=2);
                random_set(&mut rng, d, k)
            }
        };
        let x1c: Vec<AlgebraElement> = x1.iter().map(|m| coords(&s, m)).collect();
        let ysc: Vec<AlgebraElement> = ys.iter().map(|m| coords(&s, m)).collect();

        let dim1 = oracle_generated_dim(&x1);
        let expect_universal = dim1 == s.n();
        let got = e.decide_algebra_universality(&x1c).unwrap().answer;
        assert_eq!(
            got == Answer::Yes,
            expect_universal,
            "universality, case {case}, d={d}"
        );
        yes[0] += expect_universal as usize;

        let both: Vec<CMat> = x1.iter().chain(&ys).cloned().collect();
        let expect_member = oracle_generated_dim(&both) == dim1;
        for variant in [ProjectorVariant::X1, ProjectorVariant::X2] {
            let got = e
                .decide_algebra_membership(&x1c, &ysc, variant)
                .unwrap()
                .answer;
            assert_eq!(
                got == Answer::Yes,
                expect_member,
                "membership {variant:?}, case {case}, d={d}"
            );
        }
        yes[1] += expect_member as usize;
    }
    format!(
        "200/200 universality and 200/200 membership (both projectors) agree; oracle Yes counts {} and {}",
        yes[0], yes[1]
    )
}

fn generator_invariance() -> String {
    let tol = Tolerances::default();
    let mut rng = seeded_rng(2);
    let mut worst = 0.0f64;
    for case in 0..100 {
        let d = [2, 3, 4][case % 3];
        let s = SuStructure::new(d).unwrap();
        let e = AlgebraEngine::new(&s, tol).unwrap();
        let size = rng.random_range(1..=4);
        let xs: Vec<AlgebraElement> = random_set(&mut rng, d, size)
            .iter()
            .map(|m| coords(&s, m))
            .collect();
        let g = e.generate_subalgebra(&xs).unwrap();
        let gb = subspace_elements(&g);
        let full = RealSubspace::full(s.n());

        let c_x = e.centralizer_in(&full, &xs).unwrap();
        let c_g = e.centralizer_in(&full, &gb).unwrap();
        let d1 = c_x.distance(&c_g);

        let d2 = e
            .projector_px(&xs)
            .unwrap()
            .distance(&e.projector_px(&gb).unwrap());

        let (center, derived) = e.split_center_derived(&xs).unwrap();
        assert_eq!(center.dim() + derived.dim(), g.dim(), "case {case}");
        assert!((center.basis().transpose() * derived.basis()).norm() < 1e-8);
        let d3 = center.sum(&derived, tol.rank_tol).distance(&g);
        let d4 = center.distance(&e.centralizer_in(&g, &gb).unwrap());
        let d5 = derived.distance(&e.derived_algebra(&g).unwrap());

        let m = d1.max(d2).max(d3).max(d4).max(d5);
        assert!(
            m < 1e-8,
            "case {case}, d={d}: {d1:e} {d2:e} {d3:e} {d4:e} {d5:e}"
        );
        worst = worst.max(m);
    }
    format!("100/100 sets, worst subspace distance {worst:.1e}")
}

fn compact_decomposition() -> String {
    let tol = Tolerances::default();
    let mut rng = seeded_rng(3);
    let mut count = 0;
    for d in [2, 3, 4] {
        let s = SuStructure::new(d).unwrap();
        let e = AlgebraEngine::new(&s, tol).unwrap();
        let full = RealSubspace::full(s.n());
        let derived = e.derived_algebra(&full).unwrap();
        for _ in 0..30 {
            let size = rng.random_range(1..=4);
            let mats = random_set(&mut rng, d, size);
            let xs: Vec<AlgebraElement> = mats.iter().map(|m| coords(&s, m)).collect();
            let cx = e.centralizer_in(&full, &xs).unwrap();
            // every centralizer vector commutes with every generator
            for v in cx.vectors() {
                let y = s
                    .from_coords(&AlgebraElement::from_vector(&v))
                    .into_dmatrix();
                for m in &mats {
                    assert!(commutator(&y, m).norm() < 1e-8);
                }
            }
            let rest = derived.intersection(&cx.orthogonal_complement(tol.rank_tol), tol.rank_tol);
            assert_eq!(cx.dim() + rest.dim(), d * d - 1, "d={d}");
            count += 1;
        }
    }
    format!("{count}/{count} sets satisfy the dimension identity")
}

fn ad_exp_consistency() -> String {
    let mut rng = seeded_rng(4);
    let mut worst_exp = 0.0f64;
    let mut worst_hom = 0.0f64;
    for d in [2, 3] {
        let s = SuStructure::new(d).unwrap();
        for _ in 0..100 {
            let x = random_skew(&mut rng, d);
            let xc = coords(&s, &x);
            let ad = s.ad_matrix(&xc);
            assert!((ad.mat() - oracle_ad_algebra(&s, &x)).norm() < 1e-12);
            let lhs = s.Ad_matrix(&s.exp(&xc).unwrap()).unwrap();
            let oracle_rhs = ad.mat().clone().exp();
            let err = (lhs.mat() - &oracle_rhs)
                .norm()
                .max((lhs.mat() - oracle_ad_group(&s, &x.clone().exp())).norm())
                .max((ad.exp_antisymmetric().unwrap().mat() - &oracle_rhs).norm());
            assert!(err < 1e-8, "d={d}: {err:e}");
            worst_exp = worst_exp.max(err);

            let g = haar_special_unitary(&mut rng, d);
            let h = haar_special_unitary(&mut rng, d);
            let gh = s.Ad_matrix(&(&g * &h)).unwrap();
            let prod = &s.Ad_matrix(&g).unwrap() * &s.Ad_matrix(&h).unwrap();
            let err = gh.distance(&prod);
            assert!(err < 1e-9, "d={d}: {err:e}");
            worst_hom = worst_hom.max(err);
        }
    }
    format!(
        "Ad(exp x) vs exp(ad x) worst {worst_exp:.1e}; Ad(gh) vs Ad(g)Ad(h) worst {worst_hom:.1e}"
    )
}

fn h_t_universal() -> String {
    let s = SuStructure::new(2).unwrap();
    let e = GroupEngine::new(&s, Tolerances::default(), SearchBudget::default()).unwrap();
    let gates = [special("H"), special("T")];

    // the Ad-orbit of one direction under short words spans su(2)
    let mut orbit = Vec::new();
    let mut words = vec![CMat::identity(2, 2)];
    for _ in 0..3 {
        words = words
            .iter()
            .flat_map(|w| gates.iter().map(move |g| w * g.as_dmatrix()))
            .collect();
        for w in &words {
            push_independent(&mut orbit, &realify(&(w * ipauli("Z", 1.0) * w.adjoint())));
        }
    }
    assert_eq!(orbit.len(), 3);

    let start = Instant::now();
    let v = e.decide_group_universality(&gates).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(v.answer, Answer::Yes);
    assert_eq!(v.commutant.lhs_dim, 1);
    let w = v.witness.unwrap();
    assert_eq!(w.reason, WitnessReason::BallNonCenter);
    assert!(w.word.len() <= 16);
    let prod = w
        .word
        .iter()
        .fold(CMat::identity(2, 2), |acc, &i| acc * gates[i].as_dmatrix());
    assert!((prod - w.element.as_dmatrix()).norm() < 1e-9);
    assert!(w.center_distance >= 1e-8 && w.center_distance < FRAC_1_SQRT_2);
    assert!(elapsed < Duration::from_secs(60));
    format!("Yes, witness word length {}, {:.2?}", w.word.len(), elapsed)
}

/// Naive enumeration of a finite group: breadth-first with linear-scan
/// deduplication.
fn oracle_group_order(gates: &[CMat], limit: usize) -> Option<usize> {
    let d = gates[0].nrows();
    let mut elems = vec![CMat::identity(d, d)];
    let mut frontier = elems.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gates {
                let p = f * g;
                if !elems.iter().any(|e| (e - &p).norm() < 1e-8) {
                    elems.push(p.clone());
                    next.push(p);
                }
            }
        }
        if elems.len() > limit {
            return None;
        }
        frontier = next;
    }
    Some(elems.len())
}

fn h_s_not_universal() -> String {
    let s = SuStructure::new(2).unwrap();
    let tol = Tolerances::default();
    let e = GroupEngine::new(&s, tol, SearchBudget::default()).unwrap();
    let gates = [special("H"), special("S")];
    let start = Instant::now();
    let v = e.decide_group_universality(&gates).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(v.answer, Answer::No);
    assert_eq!(v.commutant.lhs_dim, 1);
    let b = v.budget.unwrap();
    assert!(b.is_finite);
    let order = oracle_group_order(
        &gates
            .iter()
            .map(|g| g.as_dmatrix().clone())
            .collect::<Vec<_>>(),
        1000,
    );
    assert_eq!(Some(b.elements), order);

    let closure = WordClosure::explore(2, &gates, SearchBudget::default(), tol.dedup_tol).unwrap();
    let mut in_ball = 0;
    for g in closure.elements() {
        if is_in_ball(g).unwrap() {
            in_ball += 1;
            assert!(center_distance(g).unwrap().distance < tol.dedup_tol);
        }
    }
    assert!(elapsed < Duration::from_secs(60));
    format!(
        "No, finite group of order {} (oracle agrees), {in_ball} ball element(s) all central, {:.2?}",
        b.elements, elapsed
    )
}

fn random_pairs_universal() -> String {
    let mut rng = seeded_rng(7);
    let pairs: Vec<[ComplexMatrix; 2]> = (0..100)
        .map(|_| {
            [
                haar_special_unitary(&mut rng, 2),
                haar_special_unitary(&mut rng, 2),
            ]
        })
        .collect();
    let s = SuStructure::new(2).unwrap();
    let yes = pairs
        .par_iter()
        .filter(|p| {
            let e = GroupEngine::new(&s, Tolerances::default(), SearchBudget::default()).unwrap();
            e.decide_group_universality(&p[..]).unwrap().answer == Answer::Yes
        })
        .count();
    assert!(yes >= 95, "{yes}/100");
    format!("{yes}/100 Haar-random pairs universal")
}

fn subgroup_universality() -> String {
    let s = SuStructure::new(3).unwrap();
    let e = GroupEngine::new(&s, Tolerances::default(), SearchBudget::default()).unwrap();
    let xs = su3_block_basis(&s);
    let generic = [
        coords(&s, &block(&ipauli("X", 0.37), 3, c(0.0, 0.0))),
        coords(&s, &block(&ipauli("Z", 0.53), 3, c(0.0, 0.0))),
    ];
    let v = e.decide_subgroup_universality(&xs, &generic).unwrap();
    assert_eq!(v.answer, Answer::Yes);
    assert_eq!(v.generated_dim, Some(3));
    assert_eq!(v.witness.unwrap().reason, WitnessReason::BallNonCommuting);

    let (h, sg) = h_s_hamiltonians();
    let finite = [
        coords(&s, &block(&h, 3, c(0.0, 0.0))),
        coords(&s, &block(&sg, 3, c(0.0, 0.0))),
    ];
    let v = e.decide_subgroup_universality(&xs, &finite).unwrap();
    assert_eq!(v.answer, Answer::No);
    assert!(v.commutant.equal);
    let b = v.budget.unwrap();
    assert!(b.is_finite);
    format!(
        "generic angles Yes; octahedral angles No via finite closure of {} elements",
        b.elements
    )
}

fn group_membership() -> String {
    let s = SuStructure::new(2).unwrap();
    let e = GroupEngine::new(&s, Tolerances::default(), SearchBudget::default()).unwrap();
    let h = |w: &str, t: f64| coords(&s, &ipauli(w, t));

    let v = e
        .decide_group_membership(&[h("X", 0.31), h("Y", 0.47)], &[h("Z", 0.23)])
        .unwrap();
    assert_eq!(v.answer, Answer::Yes);
    assert_eq!(v.diagram.unwrap().kind, DiagramKind::DecidableEqual);

    let v = e
        .decide_group_membership(&[h("Z", 0.31)], &[h("X", 0.47)])
        .unwrap();
    assert_eq!(v.answer, Answer::No);
    assert_eq!(
        v.diagram.unwrap().kind,
        DiagramKind::NecessaryConditionFails
    );

    let v = e
        .decide_group_membership(
            &[h("X", FRAC_PI_2), h("Z", FRAC_PI_2)],
            &[h("Y", FRAC_PI_2)],
        )
        .unwrap();
    assert_eq!(v.answer, Answer::Inconclusive);
    let diagram = v.diagram.unwrap();
    assert!(!diagram.decidable);
    format!(
        "Yes, No, and Inconclusive with undecidable diagram {:?}",
        diagram.kind
    )
}

fn appendix_bounds() -> String {
    let report = verify_appendix(2026, 1000, 1.0).unwrap();
    for check in &report.commutator {
        assert_eq!((check.samples, check.passed), (1000, 1000), "d={}", check.d);
    }

    // the same inequality checked directly
    let mut rng = seeded_rng(10);
    let mut worst = 0.0f64;
    for d in [2, 3, 5] {
        for _ in 0..1000 {
            let a = haar_unitary(&mut rng, d).into_dmatrix();
            let b = haar_unitary(&mut rng, d).into_dmatrix();
            let id = CMat::identity(d, d);
            let lhs = (&a * &b * a.adjoint() * b.adjoint() - &id).norm();
            let rhs = 2f64.sqrt() * (&a - &id).norm() * (&b - &id).norm();
            assert!(lhs <= rhs * (1.0 + 1e-12));
            worst = worst.max(lhs / rhs);
        }
    }

    let log = &report.log_trace;
    assert_eq!((log.d, log.samples, log.passed), (41, 100, 100));
    assert!(log.max_abs_trace < 1e-8);

    let tight = report.tightness.as_ref().unwrap();
    assert_eq!(tight.report.verdict, LogTraceVerdict::NotApplicable);
    let expected = 2.0 * 41f64.sqrt() * (PI / 41.0).sin();
    let gap = (tight.report.distance_to_identity - expected).abs();
    assert!(gap < 1e-10, "{gap:e}");
    assert!(report.all_passed);
    format!(
        "3000/3000 commutator pairs (worst ratio {worst:.3}), 100/100 log traces (max {:.1e}), tightness gap {gap:.1e}",
        log.max_abs_trace
    )
}

fn finite_closures_abelian_ball() -> String {
    let tol = Tolerances::default();
    let s2 = SuStructure::new(2).unwrap();
    let s3 = SuStructure::new(3).unwrap();
    let cyclic = vec![cm(ipauli("Z", PI / 8.0).exp())];
    let cases: Vec<(&SuStructure, Vec<ComplexMatrix>)> = vec![
        (&s2, vec![special("H"), special("S")]),
        (&s3, block_h_s_gates()),
        (&s2, cyclic),
    ];
    let mut summary = Vec::new();
    for (s, gates) in cases {
        let closure =
            WordClosure::explore(s.d(), &gates, SearchBudget::default(), tol.dedup_tol).unwrap();
        assert!(closure.is_finite());
        let ball: Vec<&ComplexMatrix> = closure
            .elements()
            .iter()
            .filter(|g| is_in_ball(g).unwrap())
            .collect();
        for a in &ball {
            for b in &ball {
                assert!(a.commutator(b).frobenius_norm() < 1e-8);
            }
        }
        let a = space_a(s, &closure, tol.rank_tol).unwrap();
        let elems = subspace_elements(&a);
        for x in &elems {
            for y in &elems {
                assert!(s.bracket(x, y).norm() < 1e-8);
            }
        }
        summary.push(format!(
            "|H|={} ball={} dim a={}",
            closure.len(),
            ball.len(),
            a.dim()
        ));
    }
    summary.join("; ")
}

fn simplicity_detector() -> String {
    let tol = Tolerances::default();
    for d in [2, 3, 4] {
        let s = SuStructure::new(d).unwrap();
        let e = AlgebraEngine::new(&s, tol).unwrap();
        assert!(e.is_simple(&RealSubspace::full(s.n())).unwrap(), "su({d})");
    }
    let not_simple = |d: usize, mats: Vec<CMat>| {
        let s = SuStructure::new(d).unwrap();
        let e = AlgebraEngine::new(&s, tol).unwrap();
        let xs: Vec<AlgebraElement> = mats.iter().map(|m| coords(&s, m)).collect();
        let g = e.generate_subalgebra(&xs).unwrap();
        assert_eq!(g.dim(), oracle_generated_dim(&mats));
        assert!(!e.is_simple(&g).unwrap(), "d={d}, dim {}", g.dim());
    };
    not_simple(2, vec![ipauli("Z", 1.0)]);
    not_simple(
        4,
        ["XI", "YI", "ZI", "IX", "IY", "IZ"]
            .iter()
            .map(|w| ipauli(w, 1.0))
            .collect(),
    );
    let mut mats: Vec<CMat> = ['X', 'Y', 'Z']
        .iter()
        .map(|p| block(&ipauli(&p.to_string(), 1.0), 3, c(0.0, 0.0)))
        .collect();
    mats.push(CMat::from_diagonal(&DVector::from_vec(vec![
        I,
        I,
        I * -2.0,
    ])));
    not_simple(3, mats);
    "su(2), su(3), su(4) simple; u(1), su(2)+su(2), su(2)+u(1) not".to_string()
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "algebra deciders match generation oracle",
            algebra_oracle_equivalence,
        ),
        ("generator invariance", generator_invariance),
        ("compact decomposition", compact_decomposition),
        ("Ad/ad consistency", ad_exp_consistency),
        ("{H', T'} universal", h_t_universal),
        ("{H', S'} not universal", h_s_not_universal),
        ("random pairs universal", random_pairs_universal),
        ("subgroup universality", subgroup_universality),
        ("group membership", group_membership),
        ("appendix bounds", appendix_bounds),
        (
            "finite closure has abelian ball",
            finite_closures_abelian_ball,
        ),
        ("simplicity detector", simplicity_detector),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match catch_unwind(AssertUnwindSafe(run)) {
            Ok(summary) => println!(
                "criterion {:>2} PASS  {name}: {summary} [{:.2?}]",
                i + 1,
                start.elapsed()
            ),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {}/12 passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance gate. Each test is one criterion and prints a single
//! PASS/FAIL line; all comparisons are exact.

mod common;

use minimal4::gca::{basis, decomposable_subspace};
use minimal4::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(label: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS  {label}");
    } else {
        println!("FAIL  {label}: {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "{label}: {failures:?}");
}

fn table(t: &RankTable) -> Vec<(u32, u64)> {
    t.entries().iter().map(|(&d, &r)| (d, r)).collect()
}

#[test]
fn criterion_1_closed_form_regression() {
    let mut failures = Vec::new();
    for b2 in 0..=30u64 {
        let got = table(&closed_form_ranks(b2, 5));
        let want: Vec<(u32, u64)> = common::closed_form(b2).into_iter().collect();
        if got != want {
            failures.push(format!("b2 = {b2}: {got:?} != {want:?}"));
        }
    }
    report("1 closed-form ranks for b2 in 0..=30", &failures);
}

#[test]
fn criterion_2_k3_numbers() {
    let mut failures = Vec::new();
    let got = table(&closed_form_ranks(22, 4));
    if got != [(2, 22), (3, 252), (4, 3520)] {
        failures.push(format!("got {got:?}"));
    }
    let k3 = Example::K3;
    if (k3.b2().ok(), k3.split()) != (Some(22), Some((3, 19))) {
        failures.push(format!("catalog entry {:?}", (k3.b2(), k3.split())));
    }
    report("2 K3 ranks (22, 252, 3520)", &failures);
}

#[test]
fn criterion_3_engine_matches_closed_form() {
    let opts = BuildOptions::default();
    let mut failures = Vec::new();
    let mut run = |p: usize, q: usize, d: u32| -> Option<BuildOutput> {
        match build(&CohomologyAlgebra::four_manifold(p, q), d, &opts) {
            Ok(out) => Some(out),
            Err(e) => {
                failures.push(format!("({p},{q}) D={d}: {e}"));
                None
            }
        }
    };
    let mut mismatches = Vec::new();
    for b2 in 0..=8usize {
        let oracle = common::closed_form(b2 as u64);
        for (p, q) in common::splits(b2) {
            let Some(out) = run(p, q, 4) else { continue };
            for r in 2..=4 {
                let want = oracle.get(&r).copied().unwrap_or(0);
                if out.ranks.get(r) != Some(want) {
                    mismatches.push(format!("({p},{q}) degree {r}: {:?} != {want}", out.ranks.get(r)));
                }
            }
        }
    }
    for (p, q) in common::splits(3) {
        if let Some(out) = run(p, q, 5) {
            if out.ranks.get(5) != Some(10) {
                mismatches.push(format!("({p},{q}) degree 5: {:?}", out.ranks.get(5)));
            }
        }
    }
    for b2 in [1usize, 2] {
        let oracle = common::closed_form(b2 as u64);
        for (p, q) in common::splits(b2) {
            let Some(out) = run(p, q, 5) else { continue };
            let want: Vec<(u32, u64)> = (2..=5).map(|r| (r, oracle.get(&r).copied().unwrap_or(0))).collect();
            if table(&out.ranks) != want {
                mismatches.push(format!("({p},{q}): {:?}", table(&out.ranks)));
            }
        }
    }
    if let Some(out) = run(0, 0, 7) {
        let nonzero: Vec<(u32, u64)> = out.ranks.nonzero().collect();
        if nonzero != [(4, 1), (7, 1)] {
            mismatches.push(format!("S4: {nonzero:?}"));
        }
    }
    failures.extend(mismatches);
    report("3 engine equals closed form (b2 <= 8 at D = 4, b2 = 3 at D = 5, elliptic cases)", &failures);
}

#[test]
fn criterion_4_hypersurface_and_complete_intersection() {
    let mut failures = Vec::new();
    let got: Vec<u64> = (1..=4).map(hypersurface_b2).collect();
    if got != [1, 2, 7, 22] {
        failures.push(format!("hypersurfaces {got:?}"));
    }
    for d in 1..=6 {
        match complete_intersection_b2(&[d]) {
            Ok(b) if b == hypersurface_b2(d) => {}
            other => failures.push(format!("d = {d}: {other:?} vs {}", hypersurface_b2(d))),
        }
    }
    report("4 hypersurface and complete intersection b2", &failures);
}

/// Product of random elementary integer matrices.
fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..rng.gen_range(1..=8) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            if rng.gen_bool(0.5) {
                u.iter_mut().for_each(|row| row[i] = -row[i]);
            } else if n > 1 {
                let k = (i + 1) % n;
                u.iter_mut().for_each(|row| row.swap(i, k));
            }
        } else {
            // column j += c * column i
            let c = rng.gen_range(-2..=2);
            u.iter_mut().for_each(|row| row[j] += c * row[i]);
        }
    }
    u
}

#[test]
fn criterion_5_classification() {
    let mut failures = Vec::new();
    let h = IntersectionForm::hyperbolic();
    let e8 = IntersectionForm::e8();
    let checks = [
        ("diag(1,-1) ~ H", rationally_equivalent(&IntersectionForm::diagonal(1, 1), &h), true),
        ("diag(1,1) ~ H", rationally_equivalent(&IntersectionForm::diagonal(2, 0), &h), false),
        ("E8 ~ diag(1 x 8)", rationally_equivalent(&e8, &IntersectionForm::diagonal(8, 0)), true),
    ];
    for (name, got, want) in checks {
        if got != want {
            failures.push(format!("{name}: {got}"));
        }
    }
    let forms = [
        IntersectionForm::diagonal(1, 1),
        IntersectionForm::diagonal(2, 0),
        h.clone(),
        e8.clone(),
        IntersectionForm::diagonal(8, 0),
        make_form(vec![vec![2, 1], vec![1, 1]]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f0f4);
    for (i, f) in forms.iter().enumerate() {
        for trial in 0..100 {
            let u = random_unimodular(f.rank(), &mut rng);
            let moved = match f.transformed(&u) {
                Ok(m) => m,
                Err(e) => {
                    failures.push(format!("form {i} trial {trial}: {e}"));
                    continue;
                }
            };
            if canonical_connected_sum(&moved) != canonical_connected_sum(f) {
                failures.push(format!("form {i} trial {trial}: split changed"));
            }
            for (j, g) in forms.iter().enumerate() {
                if rationally_equivalent(&moved, g) != rationally_equivalent(f, g) {
                    failures.push(format!("form {i} trial {trial} vs form {j}: verdict changed"));
                }
            }
        }
    }
    report("5 classification by rank and signature, stable under 100 congruences per form", &failures);
}

fn random_poly(gens: &GeneratorSet, max_degree: u32, rng: &mut ChaCha8Rng) -> Poly {
    loop {
        let degree = rng.gen_range(2..=max_degree);
        let monomials = basis(gens, degree, DEFAULT_BASIS_GUARD).unwrap();
        if monomials.is_empty() {
            continue;
        }
        let mut p = Poly::zero(degree);
        for _ in 0..rng.gen_range(1..=3) {
            let m = monomials[rng.gen_range(0..monomials.len())].clone();
            let c = Rational::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
            p.add_term(m, c);
        }
        return p;
    }
}

fn sign(odd: bool) -> Rational {
    Rational::from_integer(if odd { -1 } else { 1 }.into())
}

fn triple_failures(stage: &MinimalModelStage, trials: usize, rng: &mut ChaCha8Rng) -> Vec<String> {
    let gens = stage.generators();
    let d = stage.differential();
    let top = stage.k() + 1;
    let mut out = Vec::new();
    for t in 0..trials {
        let (a, b, c) = (random_poly(gens, top, rng), random_poly(gens, top, rng), random_poly(gens, top, rng));
        let ab = a.mul(&b, gens);
        if ab.mul(&c, gens) != a.mul(&b.mul(&c, gens), gens) {
            out.push(format!("trial {t}: associativity"));
        }
        let odd_ab = a.degree() % 2 == 1 && b.degree() % 2 == 1;
        if ab != b.mul(&a, gens).scale(&sign(odd_ab)) {
            out.push(format!("trial {t}: graded commutativity"));
        }
        for (x, y) in [(&ab, &c), (&a, &b)] {
            let lhs = d.apply(gens, &x.mul(y, gens));
            let rhs =
                &d.apply(gens, x).mul(y, gens) + &x.mul(&d.apply(gens, y), gens).scale(&sign(x.degree() % 2 == 1));
            if lhs != rhs {
                out.push(format!("trial {t}: Leibniz"));
            }
        }
        for x in [&a, &b, &c] {
            if !d.apply(gens, &d.apply(gens, x)).is_zero() {
                out.push(format!("trial {t}: d² ≠ 0 on {}", x.display(gens)));
            }
        }
        if out.len() > 5 {
            break;
        }
    }
    out
}

#[test]
fn criterion_6_dga_properties() {
    const TRIALS: usize = 1000;
    const MAX_DEGREE: u32 = 5;
    let opts = BuildOptions::default();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xd6a);
    let mut configurations = 0;
    for b2 in 0..=6usize {
        for (p, q) in common::splits(b2) {
            let a = CohomologyAlgebra::four_manifold(p, q);
            let mut stage = init_stage(&a).unwrap();
            loop {
                let tag = format!("({p},{q}) k = {}", stage.k());
                let verify = verify_stage(&stage, &a, DEFAULT_BASIS_GUARD);
                failures.extend(verify.failures().map(|c| format!("{tag}: {} {:?}", c.name, c.witness)));
                if !stage.differential().is_minimal() {
                    failures.push(format!("{tag}: not minimal"));
                }
                if stage.k() == MAX_DEGREE {
                    failures
                        .extend(triple_failures(&stage, TRIALS, &mut rng).into_iter().map(|f| format!("{tag}: {f}")));
                    configurations += 1;
                    break;
                }
                stage = extend_stage(&stage, &a, &opts).unwrap().0;
            }
        }
    }
    report(
        &format!("6 DGA laws on {TRIALS} random triples for each of {configurations} models (b2 <= 6, D = 5), all stages verified"),
        &failures,
    );
}

#[test]
fn criterion_7_generator_counts_match_indecomposables() {
    let opts = BuildOptions::default();
    let mut failures = Vec::new();
    let mut models = 0;
    let cases = (0..=8usize).flat_map(|b2| common::splits(b2).map(|(p, q)| (p, q, 4)));
    let cases = cases.chain((0..=6usize).flat_map(|b2| common::splits(b2).map(|(p, q)| (p, q, 5))));
    for (p, q, d) in cases.chain([(0, 0, 7)]) {
        let out = build(&CohomologyAlgebra::four_manifold(p, q), d, &opts).unwrap();
        let gens = out.stage.generators();
        for r in 2..=d {
            let codim = decomposable_subspace(gens, r, DEFAULT_BASIS_GUARD).unwrap().codim();
            if codim != gens.count_in_degree(r) || Some(codim as u64) != out.ranks.get(r) {
                failures
                    .push(format!("({p},{q}) D={d} degree {r}: {} generators, codim {codim}", gens.count_in_degree(r)));
            }
        }
        models += 1;
    }
    report(&format!("7 generator counts equal codimension of decomposables ({models} models)"), &failures);
}

//! Acceptance suite: one timed check per criterion, one PASS/FAIL line each.
//! Runs with `cargo test -p eqcodes --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use eqcodes::constructions::{
    ball, example_code_g2_6_3, lines_through, mixed_projective_code, orthogonal_code, plucker_code, plucker_codeword,
    plucker_embed, recursive_plucker_code, steiner_from_grassmannian,
};
use eqcodes::gf::{prime_power, FieldElement};
use eqcodes::linalg::rank_distance;
use eqcodes::rankmetric::{all_vectors, m_matrix, rank_code};
use eqcodes::search::{max_partial_spread, max_t_intersecting_clique, SearchBudget};
use eqcodes::subspace::{enumerate_grassmannian, qbinom};
use eqcodes::{FieldCtx, Matrix, Subspace};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gf(q: u32) -> FieldCtx {
    FieldCtx::from_order(q).expect("prime power")
}

fn err(e: eqcodes::Error) -> String {
    e.to_string()
}

fn example_code() -> Outcome {
    let code = example_code_g2_6_3();
    let p = code.profile().map_err(err)?;
    let words: Vec<&Subspace> = code.words().collect();
    let mut pairs = 0;
    for (i, x) in words.iter().enumerate() {
        for y in &words[i + 1..] {
            ensure!(x.intersection_dim(y).map_err(err)? == 1, "a pair meets in dimension other than 1");
            pairs += 1;
        }
    }
    let threshold = qbinom(4, 1, 2).to_usize().unwrap();
    ensure!(p.size == 16, "size {}", p.size);
    ensure!(code.constant_dimension() == Some(3) && code.ambient() == 6, "not in G_2(6,3)");
    ensure!(pairs == 120, "{pairs} pairs");
    ensure!(!p.is_sunflower(), "has a sunflower center");
    ensure!(p.size > threshold, "16 <= {threshold}");
    Ok(format!("16 words, 120 pairs meeting in dimension 1, no center, 16 > {threshold}"))
}

fn plucker_codes() -> Outcome {
    let mut done = Vec::new();
    for (q, n) in [(2u32, 3usize), (2, 4), (2, 5), (3, 3), (3, 4)] {
        let code = plucker_code(&gf(q), n).map_err(err)?;
        let p = code.profile().map_err(err)?;
        let size = ((q as usize).pow(n as u32) - 1) / (q as usize - 1);
        ensure!(p.size == size, "(q,n)=({q},{n}): size {} != {size}", p.size);
        ensure!(code.ambient() == n * (n - 1) / 2, "(q,n)=({q},{n}): ambient {}", code.ambient());
        ensure!(code.constant_dimension() == Some(n - 1), "(q,n)=({q},{n}): dimensions {:?}", p.dimension_set);
        ensure!(
            p.pairwise_intersection_dim_set == BTreeSet::from([1]),
            "(q,n)=({q},{n}): intersections {:?}",
            p.pairwise_intersection_dim_set
        );
        ensure!(p.is_equidistant, "(q,n)=({q},{n}): not equidistant");
        done.push(format!("({q},{n}):{size}"));
    }
    Ok(format!("sizes {}", done.join(" ")))
}

fn plucker_point_sets() -> Outcome {
    for (q, n) in [(2u32, 4usize), (3, 3)] {
        let f = gf(q);
        let want_lines = ((q as usize).pow(n as u32 - 1) - 1) / (q as usize - 1);
        for v in enumerate_grassmannian(&f, n, 1).map_err(err)? {
            let pv = plucker_codeword(&v).map_err(err)?;
            let points: BTreeSet<Vec<FieldElement>> = pv.vectors().into_iter().collect();
            ensure!(points.len() == (q as usize).pow(n as u32 - 1), "(q,n)=({q},{n}): |P_V| = {}", points.len());
            let lines = lines_through(&v).map_err(err)?;
            ensure!(lines.len() == want_lines, "(q,n)=({q},{n}): {} lines through V", lines.len());
            let mut union = BTreeSet::from([vec![FieldElement::ZERO; n * (n - 1) / 2]]);
            for u in &lines {
                union.extend(plucker_embed(u).map_err(err)?.vectors());
            }
            ensure!(union == points, "(q,n)=({q},{n}): union of P(U) differs from P_V");
        }
    }
    Ok("P_V has q^(n-1) vectors and equals the union of P(U) for (2,4) and (3,3)".into())
}

fn recursion() -> Outcome {
    for (q, n) in [(2u32, 4usize), (2, 5), (3, 4)] {
        let f = gf(q);
        let d = recursive_plucker_code(&f, n).map_err(err)?;
        let c = plucker_code(&f, n).map_err(err)?;
        ensure!(d == c, "(q,n)=({q},{n}): recursive and direct codes differ");
    }
    Ok("recursive = direct for (2,4), (2,5), (3,4)".into())
}

fn rank_codes() -> Outcome {
    for (q, n) in [(2u32, 3usize), (2, 4), (2, 5), (3, 3)] {
        let f = gf(q);
        let code = rank_code(&f, n).map_err(err)?;
        let words = code.words();
        ensure!(words.len() == (q as usize).pow(n as u32) - 1, "(q,n)=({q},{n}): {} words", words.len());
        ensure!(words.iter().all(|m| m.rank() == n - 1), "(q,n)=({q},{n}): rank other than n-1");
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                ensure!(rank_distance(a, b).map_err(err)? == n - 1, "(q,n)=({q},{n}): rank distance other than n-1");
            }
        }
        let vs: Vec<Vec<FieldElement>> = all_vectors(&f, n).collect();
        let ms: Vec<Matrix> = vs.iter().map(|v| m_matrix(&f, v)).collect();
        for (u, mu) in vs.iter().zip(&ms) {
            for (v, mv) in vs.iter().zip(&ms) {
                let w: Vec<FieldElement> = u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
                ensure!(m_matrix(&f, &w) == mu.add(mv).map_err(err)?, "(q,n)=({q},{n}): M_(u+v) != M_u + M_v");
            }
        }
    }
    Ok("q^n - 1 words of rank n-1 at pairwise distance n-1; M additive".into())
}

fn partial_spreads() -> Outcome {
    let f = gf(2);
    let mut notes = Vec::new();
    for (n, k, want) in [(4usize, 2usize, 5usize), (5, 2, 9), (3, 2, 1)] {
        let r = max_partial_spread(&f, n, k, SearchBudget::nodes(10_000_000)).map_err(err)?;
        ensure!(r.certified_optimal, "E_2[{n},{k}] not certified after {} nodes", r.nodes_explored);
        ensure!(r.best_code.len() == want, "E_2[{n},{k}] = {} != {want}", r.best_code.len());
        let p = r.best_code.profile().map_err(err)?;
        ensure!(p.size == 1 || p.t == Some(0), "E_2[{n},{k}] witness is not disjoint");
        notes.push(format!("E_2[{n},{k}]={want} ({} nodes)", r.nodes_explored));
    }
    Ok(notes.join(", "))
}

fn orthogonality() -> Outcome {
    let f = gf(2);
    let r = max_partial_spread(&f, 5, 2, SearchBudget::nodes(10_000_000)).map_err(err)?;
    ensure!(r.certified_optimal, "partial spread not certified");
    let spread = r.best_code;
    ensure!(spread.profile().map_err(err)?.t == Some(0), "spread is not 0-intersecting");
    let orth = orthogonal_code(&spread).map_err(err)?;
    let p = orth.profile().map_err(err)?;
    ensure!(orth.constant_dimension() == Some(3), "dual dimensions {:?}", p.dimension_set);
    ensure!(p.t == Some(1), "dual t = {:?}", p.t);
    let floor = 2usize.pow(2) + 1;
    ensure!(p.size == 9 && p.size >= floor, "dual size {} (need 9, at least {floor})", p.size);
    ensure!(orthogonal_code(&orth).map_err(err)? == spread, "double dual differs");
    Ok("dual of the 9-word partial spread is 1-intersecting in G_2(5,3); involution holds".into())
}

fn ball_optimality() -> Outcome {
    let f = gf(2);
    let r = max_t_intersecting_clique(&f, 4, 3, 2, SearchBudget::nodes(10_000_000), false).map_err(err)?;
    let want = qbinom(4, 3, 2).to_usize().unwrap();
    ensure!(r.certified_optimal, "clique search not certified");
    ensure!(r.best_code.len() == want, "maximum {} != {want}", r.best_code.len());
    let b = ball(&f, 4, 3).map_err(err)?;
    let p = b.profile().map_err(err)?;
    ensure!(b.len() == want && p.t == Some(2) && p.is_ball, "ball is not a 15-word 2-intersecting code");
    Ok(format!("certified maximum {want}, matched by the ball"))
}

fn steiner() -> Outcome {
    let m = steiner_from_grassmannian(&gf(2), 4).map_err(err)?;
    ensure!(m.points == 15 && m.blocks == 35, "{} points, {} blocks", m.points, m.blocks);
    ensure!(m.column_weights() == BTreeSet::from([3]), "column weights {:?}", m.column_weights());
    ensure!(m.is_pairwise_balanced(), "some pair of points is not in exactly one block");
    ensure!(m.row_intersections() == BTreeSet::from([1]), "row intersections {:?}", m.row_intersections());
    ensure!(m.row_weights() == BTreeSet::from([7]), "row weights {:?}", m.row_weights());
    Ok("S(2,3,15): 15 points, 35 blocks, block size 3, row weight 7".into())
}

fn mixed_projective() -> Outcome {
    let mp = mixed_projective_code(7, SearchBudget::nodes(10_000_000)).map_err(err)?;
    let p = mp.code.profile().map_err(err)?;
    ensure!(mp.uncovered.len() == 4, "{} uncovered vectors", mp.uncovered.len());
    ensure!(mp.sunflower.len() == 9, "sunflower has {} words", mp.sunflower.len());
    ensure!(mp.sunflower.profile().map_err(err)?.is_sunflower(), "E^2(C) is not a sunflower");
    ensure!(p.size == 12, "size {}", p.size);
    ensure!(p.dimension_set == BTreeSet::from([2, 4]), "dimensions {:?}", p.dimension_set);
    ensure!(p.pairwise_distance_set == BTreeSet::from([4]), "distances {:?}", p.pairwise_distance_set);
    ensure!(p.size > mp.sunflower.len(), "not larger than the sunflower");
    Ok("12 words of dimensions {2,4} at distance 4, 12 > 9".into())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // field axioms, exhaustive for every field of order at most 16
    let mut fields = 0;
    for q in (2..=16u32).filter(|&q| prime_power(q).is_some()) {
        let f = gf(q);
        let els: Vec<FieldElement> = f.elements().collect();
        let (zero, one) = (f.zero(), f.one());
        for &a in &els {
            ensure!(f.add(a, zero) == a && f.mul(a, one) == a, "GF({q}): identity fails");
            ensure!(f.add(a, f.neg(a)) == zero, "GF({q}): additive inverse fails");
            if a != zero {
                ensure!(f.mul(a, f.inv(a).map_err(err)?) == one, "GF({q}): multiplicative inverse fails");
            }
            for &b in &els {
                ensure!(f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a), "GF({q}): commutativity fails");
                for &c in &els {
                    ensure!(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)), "GF({q}): additive associativity fails");
                    ensure!(
                        f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)),
                        "GF({q}): multiplicative associativity fails"
                    );
                    ensure!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "GF({q}): distributivity fails");
                }
            }
        }
        fields += 1;
    }

    // RREF canonicity: a random basis and a random invertible recombination span the same subspace
    let orders = [2u32, 3, 4, 5, 7, 8, 9];
    for trial in 0..10_000 {
        let f = gf(orders[rng.gen_range(0..orders.len())]);
        let n = rng.gen_range(1..=7);
        let k = rng.gen_range(1..=n);
        let rand_matrix = |rng: &mut ChaCha8Rng, r: usize, c: usize| {
            let rows: Vec<Vec<u32>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(0..f.order())).collect()).collect();
            Matrix::from_u32_rows(&f, &rows).unwrap()
        };
        let g = rand_matrix(&mut rng, k, n);
        let a = loop {
            let a = rand_matrix(&mut rng, k, k);
            if !a.det().map_err(err)?.is_zero() {
                break a;
            }
        };
        let x = Subspace::from_matrix(&g);
        let y = Subspace::from_matrix(&a.mul(&g).map_err(err)?);
        ensure!(x == y, "RREF trial {trial}: recombined basis gives a different canonical form");
        ensure!(Subspace::from_matrix(x.basis()) == x, "RREF trial {trial}: canonical form is not a fixed point");
    }

    // Gaussian binomials against enumeration
    for q in [2u32, 3] {
        let f = gf(q);
        for n in 0..=6usize {
            for k in 0..=n {
                let count = enumerate_grassmannian(&f, n, k).map_err(err)?.count();
                ensure!(
                    qbinom(n as u64, k as u64, q as u64).to_usize() == Some(count),
                    "qbinom({n},{k},{q}) != {count}"
                );
            }
        }
    }

    // subspace distance is invariant under taking orthogonal complements
    for trial in 0..1_000 {
        let f = gf(orders[rng.gen_range(0..orders.len())]);
        let n = rng.gen_range(1..=7);
        let random_subspace = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(0..=n);
            let rows: Vec<Vec<FieldElement>> =
                (0..k).map(|_| (0..n).map(|_| FieldElement(rng.gen_range(0..f.order()))).collect()).collect();
            Subspace::from_generators(&f, n, &rows).unwrap()
        };
        let x = random_subspace(&mut rng);
        let y = random_subspace(&mut rng);
        let d = x.distance(&y).map_err(err)?;
        let d_perp = x.orthogonal_complement().distance(&y.orthogonal_complement()).map_err(err)?;
        ensure!(d == d_perp, "duality trial {trial}: d = {d}, d_perp = {d_perp}");
    }
    Ok(format!("field axioms on {fields} fields, 10^4 RREF trials, qbinom n<=6, 10^3 duality pairs"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "16-word non-sunflower code in G_2(6,3)", limit: secs(1), run: example_code },
        Criterion { id: 2, name: "Plücker codes are 1-intersecting", limit: secs(10), run: plucker_codes },
        Criterion { id: 3, name: "P_V point sets", limit: secs(5), run: plucker_point_sets },
        Criterion { id: 4, name: "recursive construction equals Plücker code", limit: secs(10), run: recursion },
        Criterion { id: 5, name: "equidistant constant-rank codes", limit: secs(30), run: rank_codes },
        Criterion { id: 6, name: "partial spread sizes certified", limit: secs(60), run: partial_spreads },
        Criterion { id: 7, name: "orthogonal code of a partial spread", limit: secs(5), run: orthogonality },
        Criterion {
            id: 8,
            name: "ball is the largest 2-intersecting code in G_2(4,3)",
            limit: secs(60),
            run: ball_optimality,
        },
        Criterion { id: 9, name: "Steiner system of lines of PG(3,2)", limit: secs(1), run: steiner },
        Criterion {
            id: 10,
            name: "mixed-dimension equidistant code for n = 7",
            limit: secs(60),
            run: mixed_projective,
        },
        Criterion { id: 11, name: "property suites", limit: secs(60), run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let timing = format!("{:.2} s of {} s", elapsed.as_secs_f64(), c.limit.as_secs());
        let line = match outcome {
            Ok(detail) if elapsed <= c.limit => format!("[PASS] criterion {}: {}: {detail} ({timing})", c.id, c.name),
            Ok(detail) => format!("[FAIL] criterion {}: {}: {detail}, but too slow ({timing})", c.id, c.name),
            Err(why) => format!("[FAIL] criterion {}: {}: {why} ({timing})", c.id, c.name),
        };
        if line.starts_with("[FAIL]") {
            failed += 1;
        }
        println!("{line}");
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

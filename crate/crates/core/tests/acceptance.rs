//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit status if
//! any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skew_schur::*;

use common::{naive_lr_counts, part, random_partition, random_skew_shape, random_sub_partition};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

/// Strict dominations of a figure, as (dominating arm, dominated arm): the
/// transitive closure of the drawn lines, each running from the smaller arm
/// up to the larger one.
fn figure_order(lines: &[(u32, u32)]) -> BTreeSet<(u32, u32)> {
    let mut rel: BTreeSet<(u32, u32)> = lines.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    loop {
        let extra: Vec<(u32, u32)> = rel
            .iter()
            .flat_map(|&(a, b)| rel.iter().filter(move |&&(c, _)| c == b).map(move |&(_, d)| (a, d)))
            .filter(|p| !rel.contains(p))
            .collect();
        if extra.is_empty() {
            return rel;
        }
        rel.extend(extra);
    }
}

/// Strict dominations between hook-foundation classes of a Hasse graph whose
/// labels are hook partitions, as arm pairs.
fn graph_order(g: &HasseGraph) -> std::result::Result<BTreeSet<(u32, u32)>, String> {
    let arm = |node: &HasseNode| -> std::result::Result<u32, String> {
        ensure(node.labels.len() == 1, || format!("unexpected Schur-equal class {:?}", node.labels))?;
        let p: Partition = node.labels[0].parse().map_err(|e| format!("{e}"))?;
        Ok(p.first())
    };
    let mut out = BTreeSet::new();
    for (i, j) in g.dominance_pairs() {
        out.insert((arm(&g.nodes()[i])?, arm(&g.nodes()[j])?));
    }
    let closure = transitive_closure(g.nodes().len(), g.edges());
    for (i, row) in closure.iter().enumerate() {
        for (j, &reached) in row.iter().enumerate() {
            ensure(reached == g.dominates(i, j), || "edge closure differs from dominance".into())?;
        }
    }
    Ok(out)
}

fn family_graph(alpha: &Composition, h: u32, k: u32, height: Option<u32>, cache: &SchurCache) -> std::result::Result<HasseGraph, String> {
    let family = hook_family(alpha, h, k, height).map_err(|e| e.to_string())?;
    let labelled: Vec<(String, SkewShape)> = family
        .into_iter()
        .map(|(hook, d)| (hook.to_partition().to_string(), d))
        .collect();
    build_order(&labelled, cache).map_err(|e| e.to_string())
}

fn lr_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let shapes = common::skew_shapes_in_box(4, 4, 8);
    let mut fillings = 0u64;
    for d in &shapes {
        let mut fast: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for t in enumerate_lr_fillings(d) {
            ensure(is_semistandard(&t) && is_lattice(&reading_word(&t)), || {
                format!("{d}: enumerator produced an invalid filling\n{t}")
            })?;
            *fast.entry(content(&t).counts().to_vec()).or_default() += 1;
            fillings += 1;
        }
        let naive = naive_lr_counts(d);
        ensure(fast == naive, || format!("{d}: enumerator {fast:?} vs oracle {naive:?}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} shapes, {fillings} fillings, {elapsed:.2?}", shapes.len()))
}

fn classification_reproduction() -> Outcome {
    let start = Instant::now();
    let cache = SchurCache::new();
    let mut pairs = 0;
    for h in 3..=6u32 {
        let alpha = Composition::ones(h as usize);
        for k in 0..=h {
            let report = verify_hook_family(&alpha, h, k, None, &cache).map_err(|e| e.to_string())?;
            ensure(report.is_clean(), || format!("h={h} k={k} mismatches {:?}", report.mismatches))?;
            pairs += report.pairs.len();
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} ordered pairs, 0 mismatches, {elapsed:.2?}"))
}

/// The drawn lines of the h = 6 panels, by arm, for k = 0..=6.
fn six_panels() -> Vec<Vec<(u32, u32)>> {
    let low = vec![(1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (5, 6)];
    vec![
        low.clone(),
        low,
        vec![(2, 6), (3, 5), (3, 6), (5, 6), (4, 5)],
        vec![(3, 6), (5, 6), (4, 5)],
        vec![(5, 6), (4, 6)],
        vec![(5, 6)],
        vec![],
    ]
}

fn figure_reproduction() -> Outcome {
    let cache = SchurCache::new();
    let alpha = Composition::ones(6);
    let mut counts = Vec::new();
    for (k, lines) in six_panels().into_iter().enumerate() {
        let g = family_graph(&alpha, 6, k as u32, None, &cache)?;
        ensure(g.nodes().len() == 6, || format!("k={k}: {} classes", g.nodes().len()))?;
        let observed = graph_order(&g)?;
        let expected = figure_order(&lines);
        ensure(observed == expected, || format!("k={k}: observed {observed:?}, drawn {expected:?}"))?;
        counts.push(observed.len());
    }
    ensure(counts[0] == counts[1], || format!("k=0 and k=1 differ: {counts:?}"))?;
    ensure(counts[1..].windows(2).all(|w| w[0] > w[1]), || format!("not strictly decreasing: {counts:?}"))?;
    ensure(counts[6] == 0, || "dominations remain at k=6".into())?;
    let g7 = family_graph(&alpha, 6, 7, None, &cache)?;
    ensure(g7.dominance_pairs().is_empty(), || "dominations at k=7".into())?;
    Ok(format!("dominations per k = {counts:?}"))
}

fn identity_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let instances = 200;
    for _ in 0..instances {
        let d = random_skew_shape(&mut rng, 6, 6, 12);
        let r = rotate180(&d);
        ensure(skew_schur_expansion(&d) == skew_schur_expansion(&r), || {
            format!("rotation: {d} vs {r}")
        })?;
    }
    for _ in 0..instances {
        let b1 = rng.gen_range(1..=8);
        let d1 = random_skew_shape(&mut rng, 5, 5, b1);
        let d2 = random_skew_shape(&mut rng, 5, 5, 12 - d1.size());
        let sum = direct_sum(&d1, &d2);
        let lhs = skew_schur_expansion(&sum);
        let rhs = multiply(&skew_schur_expansion(&d1), &skew_schur_expansion(&d2)).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("direct sum: {d1} (+) {d2}"))?;
    }
    let mut done = 0;
    while done < instances {
        let w = rng.gen_range(1..=4u32);
        let hgt = rng.gen_range(1..=12 / w).min(4);
        let rect = Rectangle::new(w, hgt);
        let rho = random_partition(&mut rng, w, hgt, w * hgt);
        let kappa = random_sub_partition(&mut rng, &rho);
        if kappa == rho {
            continue;
        }
        let (rho, kappa) = (part(&rho), part(&kappa));
        let lhs = skew_schur_expansion(&SkewShape::new(rho.clone(), kappa.clone()).unwrap());
        let rhs = truncated_complement(&product_expansion(&kappa, &complement(&rho, rect).unwrap()), rect);
        ensure(lhs == rhs, || format!("complement: {rho}/{kappa} in {w}x{hgt}"))?;
        done += 1;
    }
    Ok(format!("{instances} instances each for rotation, direct sum, complement truncation"))
}

fn staircase_lemmas() -> Outcome {
    let mut checked = 0u64;
    for alpha in [comp(&[1, 1, 1, 1]), comp(&[2, 1, 2]), comp(&[1, 2, 2])] {
        let n = alpha.len() as u32;
        let first_row = alpha.size();
        let staircase = unique_staircase_filling(&alpha).unwrap();
        for k in 0..=2u32 {
            let r = r_set(&alpha, k).unwrap();
            for h in 1..=n + k {
                for hook in hooks_of_size(h) {
                    let lambda = hook.to_partition();
                    let shape = staircase_with_foundation(&lambda, &alpha, k).unwrap();
                    for t in enumerate_lr_fillings(&shape) {
                        let row = &t.rows()[first_row];
                        let ones = row.iter().filter(|&&v| v == 1).count() as u32;
                        let others: Vec<u32> = row.iter().copied().filter(|&v| v != 1).collect();
                        let distinct: BTreeSet<u32> = others.iter().copied().collect();
                        ensure(
                            ones <= r.one_multiplicity
                                && row.iter().all(|&v| r.admits(v))
                                && distinct.len() == others.len(),
                            || format!("alpha={alpha} k={k} lambda={lambda}: first row {row:?}"),
                        )?;
                        ensure(t.rows()[..first_row] == *staircase.rows(), || {
                            format!("alpha={alpha} k={k} lambda={lambda}: staircase part differs")
                        })?;
                        let apart = unshift_join(&t, &lambda, &alpha, k).map_err(|e| e.to_string())?;
                        ensure(is_semistandard(&apart) && is_lattice(&reading_word(&apart)), || {
                            format!("alpha={alpha} k={k} lambda={lambda}: separated tableau invalid")
                        })?;
                        let back = shift_join(&apart, &lambda, &alpha, k).map_err(|e| e.to_string())?;
                        ensure(back == t, || format!("alpha={alpha} k={k} lambda={lambda}: round trip"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} lattice fillings checked"))
}

fn binomial_formulas() -> Outcome {
    let alpha = Composition::ones(6);
    let h = 6;
    let (mut checked, mut skipped) = (0, 0);
    for k in 0..=2u32 {
        for mu in hooks_of_size(h) {
            if mu.arm < k.max(1) {
                skipped += 1;
                continue;
            }
            let (c, _) = proof_content_tableau(mu, &alpha, k, ProofFilling::Distinct).map_err(|e| e.to_string())?;
            let nu = c.as_partition().ok_or("witness content is not a partition")?;
            for lam in hooks_of_size(h) {
                let shape = staircase_with_foundation(&lam.to_partition(), &alpha, k).unwrap();
                let count = count_lr_fillings_with_content(&shape, &nu, None).map_err(|e| e.to_string())?;
                let predicted = if lam.arm >= k.max(1) {
                    binomial_count(h, k, lam, CountSide::Row).map_err(|e| e.to_string())?
                } else {
                    0
                };
                ensure(count == predicted, || {
                    format!("k={k} mu={} lam={}: counted {count}, formula {predicted}", mu.to_partition(), lam.to_partition())
                })?;
                if lam == mu {
                    let col = binomial_count(h, k, mu, CountSide::Column).map_err(|e| e.to_string())?;
                    ensure(count == col, || format!("k={k} mu={}: column formula {col} vs {count}", mu.to_partition()))?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} witness contents (each against all 6 hooks), {skipped} hooks with arm < k skipped"))
}

fn large_k_stability() -> Outcome {
    let alpha = Composition::ones(6);
    let delta = delta_fat(&alpha);
    for hook in hooks_of_size(6) {
        let lambda = hook.to_partition();
        let at6 = skew_schur_expansion(&staircase_with_foundation(&lambda, &alpha, 6).unwrap());
        let at7 = skew_schur_expansion(&staircase_with_foundation(&lambda, &alpha, 7).unwrap());
        let product = product_expansion(&lambda, &delta);
        ensure(at6 == at7 && at6 == product, || format!("lambda={lambda}"))?;
    }
    Ok("6 hooks".into())
}

fn complement_transfer() -> Outcome {
    let mut instances = 0;
    for alpha in [comp(&[1, 2]), comp(&[2, 1])] {
        for k in 0..=1u32 {
            let w = alpha.len() as u32 + k;
            for l in 2..=3u32 {
                for mu in common::partitions_in_box(w, l) {
                    if mu.len() != l as usize || mu.iter().all(|&m| m == w) {
                        continue;
                    }
                    let mu = part(&mu);
                    let (left, right, rect) =
                        build_transfer_instance(&mu, &alpha, k, l).map_err(|e| e.to_string())?;
                    let lhs = skew_schur_expansion(&left);
                    let rhs = truncated_complement(&skew_schur_expansion(&right), rect);
                    ensure(lhs == rhs, || format!("alpha={alpha} k={k} l={l} mu={mu}: {lhs} vs {rhs}"))?;
                    instances += 1;
                }
            }
        }
    }

    let cache = SchurCache::new();
    let alpha = comp(&[1, 1, 3, 1, 2]);
    let reversed = reverse_composition(&alpha, 1).unwrap();
    let complemented = family_graph(&alpha, 6, 1, Some(6), &cache)?;
    let hooks = family_graph(&reversed, 6, 1, None, &cache)?;
    let (a, b) = (graph_order(&complemented)?, graph_order(&hooks)?);
    ensure(a == b, || format!("complement order {a:?} vs hook order {b:?}"))?;
    let drawn = figure_order(&six_panels()[1]);
    ensure(a == drawn, || format!("complement order {a:?} vs drawn {drawn:?}"))?;
    let report = verify_hook_family(&alpha, 6, 1, Some(6), &cache).map_err(|e| e.to_string())?;
    ensure(report.is_clean(), || format!("mismatches {:?}", report.mismatches))?;
    Ok(format!("{instances} transfer identities; complement order has {} dominations", a.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("LR enumerator matches brute force on all shapes <= 8 boxes in 4x4", lr_oracle_equivalence),
        ("hook classification matches brute-force comparison, h = 3..6", classification_reproduction),
        ("h = 6 hook orders match the drawn panels for k = 0..6", figure_reproduction),
        ("rotation, direct-sum and complement identities on random instances", identity_suite),
        ("foundation first rows and shift-join round trips", staircase_lemmas),
        ("binomial counts at the witness contents", binomial_formulas),
        ("expansions stabilise for k >= h", large_k_stability),
        ("complement transfer identity and complement-family order", complement_transfer),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

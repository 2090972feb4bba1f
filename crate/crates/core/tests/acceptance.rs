//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! wall-clock time against its limit. Exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use vmtk_core::bits;
use vmtk_core::corpus::{self, DEFAULT_SEED};
use vmtk_core::delta::{
    self, build_delta_layout, classify_type, count_delta, enumerate_delta_members, enumerate_rooted_members,
    orbit_lower_bound_check, verify_excluded, verify_obstruction, DeltaMember, DeltaTag,
};
use vmtk_core::rank::{check_submodularity, cutrank, linear_rankwidth_exact};
use vmtk_core::split::{
    build_appendix_decomposition, canonical_decomposition, canonical_decomposition_seeded,
    check_block_characterizations, local_equivalence_invariant,
};
use vmtk_core::vm::{local_complement, locally_equivalent_small, pivot, pivot_direct};
use vmtk_core::Graph;

use common::*;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    for (name, g) in delta::o1_graphs() {
        let r = verify_obstruction(&g, 1).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: {}", r.failures().next().unwrap()))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for k in 0..=2 {
        let members = enumerate_delta_members(k).map_err(|e| e.to_string())?;
        for m in members {
            let r = verify_excluded(&m.graph, k).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("k={k}: {}", r.failures().next().unwrap()))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let classes: Vec<usize> = (0..=2).map(|k| delta::enumerate_delta(k).unwrap().len()).collect();
    ensure(classes == [1, 1, 4], || format!("classes {classes:?}"))?;
    let rooted: Vec<usize> = (0..=2).map(|k| enumerate_rooted_members(k).unwrap().len()).collect();
    ensure(rooted == [1, 2, 24], || format!("rooted classes {rooted:?}"))?;
    let p2 = 24u128;
    let formula = p2 + p2 * (p2 - 1) + binom(p2, 3);
    let table = count_delta(3).map_err(|e| e.to_string())?;
    ensure(table.total() == formula && formula == 2600, || format!("count_delta(3) = {}", table.total()))?;
    let (built, rooted3) = delta::construct_level3_counts().map_err(|e| e.to_string())?;
    ensure(built == 2600, || format!("constructed level-3 classes {built}"))?;
    ensure(table.p == Some(rooted3 as u128), || {
        format!("p_3 by orbit sum {:?} vs by construction {rooted3}", table.p)
    })
}

fn criterion_4() -> Outcome {
    for k in 0..=2 {
        for m in enumerate_delta_members(k).unwrap() {
            let (opt, _) = linear_rankwidth_exact(&m.graph).unwrap();
            ensure(opt == k + 1, || format!("k={k}: optimum {opt}"))?;
            for s in 0..m.graph.n() {
                let l = build_delta_layout(&m.graph, &m.cert, s).map_err(|e| e.to_string())?;
                let w = width_of(&m.graph, &l.order);
                ensure(l.order[0] == s && w == opt, || format!("k={k} start {s}: width {w}"))?;
            }
        }
    }
    let rooted = enumerate_rooted_members(2).unwrap();
    let mut rng = corpus::rng(DEFAULT_SEED);
    let pick: Vec<&delta::RootedMember> = (0..3).map(|_| &rooted[rng.gen_range(0..rooted.len())]).collect();
    let big = DeltaMember::compose([
        (&pick[0].member, pick[0].root),
        (&pick[1].member, pick[1].root),
        (&pick[2].member, pick[2].root),
    ])
    .unwrap();
    ensure(big.graph.n() == 54, || "level-3 member size".into())?;
    for _ in 0..10 {
        let s = rng.gen_range(0..54);
        let l = build_delta_layout(&big.graph, &big.cert, s).map_err(|e| e.to_string())?;
        let w = width_of(&big.graph, &l.order);
        ensure(w == 4, || format!("level 3 start {s}: width {w}"))?;
    }
    Ok(())
}

fn split_corpus(seed: u64) -> Vec<Graph> {
    let mut rng = corpus::rng(seed);
    let mut out = Vec::new();
    for i in 0..200 {
        let n = rng.gen_range(4..=12);
        out.push(if i % 2 == 0 {
            corpus::random_dh_graph(&mut rng, n)
        } else {
            corpus::random_connected_graph(&mut rng, n, 0.3)
        });
    }
    out
}

fn criterion_5() -> Outcome {
    for k in 1..=2 {
        for m in enumerate_delta_members(k).unwrap() {
            let appendix = build_appendix_decomposition(&m.graph, &m.cert).map_err(|e| e.to_string())?;
            let canonical = canonical_decomposition(&m.graph).unwrap();
            ensure(appendix.isomorphic_fixing_labels(&canonical), || format!("appendix differs at k={k}"))?;
        }
    }
    let corpus = split_corpus(DEFAULT_SEED);
    corpus.par_iter().enumerate().try_for_each(|(i, g)| {
        let d = canonical_decomposition(g).unwrap();
        let e = canonical_decomposition_seeded(g, DEFAULT_SEED + i as u64).unwrap();
        ensure(d.isomorphic_fixing_labels(&e), || format!("graph {i}: seeded run differs"))?;
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x != y {
                    ensure(d.linked(x, y).unwrap() == g.has_edge(x, y), || format!("graph {i}: linked({x},{y})"))?;
                }
            }
        }
        Ok::<(), String>(())
    })?;
    let mut rng = corpus::rng(DEFAULT_SEED ^ 0x5eed);
    let pairs: Vec<(Graph, usize)> = (0..200)
        .map(|_| {
            let n = rng.gen_range(2..=12);
            let g = corpus::random_dh_graph(&mut rng, n);
            let v = rng.gen_range(0..n);
            (g, v)
        })
        .collect();
    pairs.par_iter().enumerate().try_for_each(|(i, (g, v))| {
        let lhs = canonical_decomposition(g).unwrap().local_complement(*v).unwrap();
        let rhs = canonical_decomposition(&local_complement(g, *v).unwrap()).unwrap();
        ensure(lhs.isomorphic_fixing_labels(&rhs), || format!("pair {i}: D*v differs"))
    })
}

fn criterion_6() -> Outcome {
    let mut rng = corpus::rng(DEFAULT_SEED + 6);
    let mut graphs = Vec::new();
    while graphs.len() < 200 {
        let n = rng.gen_range(1..=12);
        graphs.push(corpus::random_block_graph(&mut rng, n));
    }
    let mut others = 0;
    while others < 200 {
        let n = rng.gen_range(4..=12);
        let g = corpus::random_dh_graph(&mut rng, n);
        if !is_block_graph_oracle(&g) {
            graphs.push(g);
            others += 1;
        }
    }
    graphs.par_iter().enumerate().try_for_each(|(i, g)| {
        let r = check_block_characterizations(g).map_err(|e| e.to_string())?;
        let block = r.checks.iter().find(|c| c.name.starts_with("block")).unwrap();
        let simp = r.checks.iter().find(|c| c.name.starts_with("simplicial"));
        ensure(r.passed(), || format!("graph {i}: {}", r.failures().next().unwrap()))?;
        ensure(block.expected == is_block_graph_oracle(g).to_string(), || format!("graph {i}: block oracle"))?;
        if let Some(simp) = simp {
            ensure(simp.expected == has_big_simplicial_oracle(g).to_string(), || format!("graph {i}: simplicial oracle"))?;
        }
        ensure(simp.is_some() == (i < 200), || format!("graph {i}: simplicial check presence"))?;
        ensure((i < 200) == is_block_graph_oracle(g), || format!("graph {i}: corpus class"))
    })
}

fn criterion_7() -> Outcome {
    for n in 1..=7 {
        let trees = corpus::trees(n);
        for i in 0..trees.len() {
            for j in i + 1..trees.len() {
                let eq = locally_equivalent_small(&trees[i], &trees[j]).map_err(|e| e.to_string())?;
                ensure(!eq, || format!("trees {i} and {j} on {n} vertices"))?;
            }
        }
    }
    let codes: Vec<String> = enumerate_delta_members(2)
        .unwrap()
        .iter()
        .map(|m| local_equivalence_invariant(&m.graph).unwrap())
        .collect();
    let mut distinct = codes.clone();
    distinct.sort();
    distinct.dedup();
    ensure(codes.len() == 4 && distinct.len() == 4, || format!("{} distinct codes", distinct.len()))
}

const TRIALS: usize = 500;

fn criterion_8() -> Outcome {
    let mut rng = corpus::rng(DEFAULT_SEED + 8);
    for t in 0..TRIALS {
        let n = rng.gen_range(1..=12);
        let g = corpus::random_graph(&mut rng, n, 0.4);
        let v = rng.gen_range(0..n);
        let once = local_complement(&g, v).unwrap();
        ensure(once == lc_oracle(&g, v), || format!("trial {t}: local complement"))?;
        ensure(local_complement(&once, v).unwrap() == g, || format!("trial {t}: involution"))?;
    }
    let mut done = 0;
    while done < TRIALS {
        let n = rng.gen_range(2..=12);
        let g = corpus::random_graph(&mut rng, n, 0.4);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        if edges.is_empty() {
            continue;
        }
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let p = pivot(&g, u, v).unwrap();
        ensure(p == pivot_direct(&g, u, v).unwrap(), || format!("trial {done}: pivot definitions"))?;
        ensure(p == pivot(&g, v, u).unwrap(), || format!("trial {done}: pivot symmetry"))?;
        done += 1;
    }
    let mut done = 0;
    while done < TRIALS {
        let n = rng.gen_range(3..=12);
        let g = corpus::random_graph(&mut rng, n, 0.4);
        let v = rng.gen_range(0..n);
        let nb = bits::to_vec(g.neighbors(v));
        if nb.len() < 2 {
            continue;
        }
        let i = rng.gen_range(0..nb.len());
        let j = (i + rng.gen_range(1..nb.len())) % nb.len();
        let (v1, v2) = (nb[i], nb[j]);
        let first = pivot(&g, v, v1).unwrap();
        ensure(first.has_edge(v1, v2), || format!("trial {done}: v1v2 missing after first pivot"))?;
        ensure(pivot(&first, v1, v2).unwrap() == pivot(&g, v, v2).unwrap(), || {
            format!("trial {done}: pivot composition")
        })?;
        done += 1;
    }
    for t in 0..TRIALS {
        let n = rng.gen_range(1..=12);
        let g = corpus::random_graph(&mut rng, n, 0.4);
        let v = rng.gen_range(0..n);
        let x = corpus::random_subset(&mut rng, n);
        let y = corpus::random_subset(&mut rng, n);
        let h = local_complement(&g, v).unwrap();
        let rows = adjacency_rows(&g);
        let c = cutrank(&g, x).unwrap();
        ensure(c == cut_rank(&rows, x), || format!("trial {t}: cut-rank oracle"))?;
        ensure(c == cutrank(&h, x).unwrap(), || format!("trial {t}: cut-rank invariance"))?;
        ensure(check_submodularity(&g, x, y).unwrap(), || format!("trial {t}: submodularity"))?;
    }
    (1..=7).try_for_each(|n| {
        corpus::all_graphs(n).par_iter().try_for_each(|g| {
            let (w, l) = linear_rankwidth_exact(g).unwrap();
            ensure(w == brute_force_lrw(g) && width_of(g, &l.order) == w, || {
                format!("n={n}: dynamic program disagrees with brute force")
            })
        })
    })
}

fn criterion_9() -> Outcome {
    for k in 0..=2 {
        for m in enumerate_delta_members(k).unwrap() {
            let r = orbit_lower_bound_check(&m.graph, &m.cert).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("k={k}: {}", r.failures().next().unwrap()))?;
            if k == 2 {
                let ty = classify_type(&m.graph, &m.cert).unwrap();
                ensure(ty.tag != DeltaTag::C, || "type C at level 2".into())?;
                ensure(r.checks.iter().any(|c| c.name == "norb.factorization"), || "no factorization check".into())?;
            }
        }
    }
    for k in 2..=3u32 {
        let t = count_delta(k as usize).unwrap();
        let a = t.a;
        let bound = (1u128 << (k - 1)) * a * a * (a + 1);
        let p = t.p.ok_or("missing p_k")?;
        ensure(p >= bound, || format!("p_{k} = {p} below {bound}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("1 o1-obstructions", criterion_1, 1),
        ("2 excluded-members", criterion_2, 300),
        ("3 class-counts", criterion_3, 120),
        ("4 constructive-layouts", criterion_4, 60),
        ("5 canonical-decomposition", criterion_5, 180),
        ("6 block-characterizations", criterion_6, 120),
        ("7 local-equivalence", criterion_7, 180),
        ("8 property-suites", criterion_8, 240),
        ("9 orbit-bounds", criterion_9, 120),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(took < Duration::from_secs(limit), || format!("over the {limit}s limit"))
        });
        match &outcome {
            Ok(()) => println!("criterion {name}: PASS ({:.2}s, limit {limit}s)", took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("criterion {name}: FAIL ({:.2}s, limit {limit}s) {e}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

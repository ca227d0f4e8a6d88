//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//! Set `GEL_STRETCH=1` to add the n = 9 and n = 10 star-test rows.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use gel_core::canon::upper_triangle_code;
use gel_core::entropy::{
    bipartite_entropy_closed, k2n2_closed, renyi_graph_entropy, shannon_entropy_compensated, star_entropy_closed,
    von_neumann_entropy, ProbabilityDistribution,
};
use gel_core::enumerate::count_graphs;
use gel_core::graph::{complete, complete_bipartite, disjoint_union, empty, star};
use gel_core::verify::{
    coentropy_search, edge_add_decrease_search, failing_graph_properties, table1_row, verify_h2_consistency,
    verify_renyi_star_min, verify_star_min_von_neumann, verify_tree_extremes, Stat, TreeEntropy, VerifyConfig,
};
use gel_core::Graph;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> VerifyConfig {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    VerifyConfig { threads, ..VerifyConfig::default() }
}

fn table1() -> Outcome {
    let expected = [(2, 0, 1), (3, 1, 2), (4, 2, 6), (5, 4, 21), (6, 8, 112), (7, 16, 853), (8, 49, 11117)];
    let mut rows = expected.to_vec();
    if std::env::var("GEL_STRETCH").is_ok_and(|v| v == "1") {
        rows.extend([(9, 106, 261080), (10, 307, 11716571)]);
    }
    let last = rows.last().map_or(0, |r| r.0);
    for (n, failures, total) in rows {
        let row = table1_row(n, &cfg()).map_err(|e| e.to_string())?;
        ensure(row.failures == failures && row.total == total, || {
            format!("n={n}: got {}/{}, expected {failures}/{total}", row.failures, row.total)
        })?;
    }
    Ok(format!("rows n=2..{last} exact"))
}

fn closed_forms() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=50 {
        let s = von_neumann_entropy(&star(n).unwrap()).map_err(|e| e.to_string())?;
        worst = worst.max((s - star_entropy_closed(n).unwrap()).abs());
    }
    for a in 1..=10 {
        for b in a..=10 {
            let s = von_neumann_entropy(&complete_bipartite(a, b).unwrap()).map_err(|e| e.to_string())?;
            worst = worst.max((s - bipartite_entropy_closed(a, b).unwrap()).abs());
        }
    }
    ensure(worst < 1e-10, || format!("max deviation {worst:e}"))?;
    Ok(format!("max deviation {worst:.1e}"))
}

fn extremal_values() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=30 {
        let k = complete(n).unwrap();
        let target = ((n - 1) as f64).log2();
        worst = worst.max((von_neumann_entropy(&k).unwrap() - target).abs());
        for alpha in [1.1, 2.0, 5.0] {
            worst = worst.max((renyi_graph_entropy(&k, alpha).unwrap() - target).abs());
        }
        let single = disjoint_union(&[complete(2).unwrap(), empty(n.max(3) - 2).unwrap()]).unwrap();
        let s = von_neumann_entropy(&single).unwrap();
        ensure(s == 0.0, || format!("S(K2 + {} K1) = {s:e}", n.max(3) - 2))?;
    }
    ensure(worst < 1e-10, || format!("max deviation {worst:e}"))?;
    Ok(format!("max deviation {worst:.1e}, single edge exactly 0"))
}

fn h2_consistency() -> Outcome {
    let mut graphs = 0;
    for n in 2..=7 {
        let r = verify_h2_consistency(n, &cfg()).map_err(|e| e.to_string())?;
        if let Stat::Int(g) = r.stats["graphs"] {
            graphs += g;
        }
    }
    Ok(format!("{graphs} connected graphs, both routes agree and S >= H2"))
}

fn exact_h2_extremes() -> Outcome {
    for n in 3..=8 {
        let r = verify_renyi_star_min(n, 2.0, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.holds && r.stats["unique_minimizer"] == Stat::Bool(true), || format!("n={n}: {r:?}"))?;
    }
    for n in 3..=12 {
        let r = verify_tree_extremes(n, TreeEntropy::Renyi2, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("trees n={n}"))?;
    }
    Ok("connected n<=8 and trees n<=12, zero failures".into())
}

fn edge_addition() -> Outcome {
    for n in 5..=40 {
        let (before, after) = k2n2_closed(n).map_err(|e| e.to_string())?;
        ensure(before - after > 1e-12, || format!("n={n}: gap {:e}", before - after))?;
    }
    for n in 5..=6 {
        let r = edge_add_decrease_search(n, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.stats["k2n2_witness_found"] == Stat::Bool(true), || format!("n={n}: K(2,n-2) witness missing"))?;
        ensure(r.stats["bound_strict"] == Stat::Bool(true), || format!("n={n}: bound not strict"))?;
    }
    Ok("closed-form gap positive for n=5..40, witnesses found at n=5,6".into())
}

fn conjectures() -> Outcome {
    for n in 3..=8 {
        let r = verify_star_min_von_neumann(n, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("star-min-S fails at n={n}: {:?}", r.witnesses))?;
        for alpha in [1.1, 1.5, 5.0, 10.0] {
            let r = verify_renyi_star_min(n, alpha, &cfg()).map_err(|e| e.to_string())?;
            ensure(r.holds, || format!("renyi-star-min fails at n={n}, alpha={alpha}"))?;
        }
    }
    for n in 3..=15 {
        let r = verify_tree_extremes(n, TreeEntropy::VonNeumann, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("path not maximal among trees at n={n}"))?;
    }
    Ok("star-min-S n<=8, path max n<=15, Renyi alpha in {1.1,1.5,5,10} n<=8".into())
}

fn coentropy_example() -> Outcome {
    let first = [vec![1.0 / 3.0, 1.0 / 4.0], vec![1.0 / 12.0; 5], vec![0.0]].concat();
    let second = [vec![1.0 / 3.0], vec![1.0 / 6.0; 2], vec![1.0 / 8.0; 2], vec![1.0 / 24.0; 2], vec![0.0]].concat();
    let h = |p: Vec<f64>| shannon_entropy_compensated(&ProbabilityDistribution::new(p).unwrap());
    let (h1, h2) = (h(first), h(second.clone()));
    ensure((h1 - h2).abs() < 1e-12, || format!("displayed spectra differ: {h1} vs {h2}"))?;

    let k26 = von_neumann_entropy(&complete_bipartite(2, 6).unwrap()).unwrap();
    let mut target = second;
    target.sort_by(|a, b| b.total_cmp(a));
    let groups = coentropy_search(8, 1e-9, &cfg()).map_err(|e| e.to_string())?;
    let found = groups.iter().flat_map(|g| &g.members).any(|m| {
        m.spectrum.iter().zip(&target).all(|(a, b)| (a - b).abs() < 1e-7) && (m.entropy - k26).abs() < 1e-9
    });
    ensure(found, || "no coentropy member realizes the second spectrum".into())?;
    Ok(format!("{} groups at n=8, partner of K(2,6) found", groups.len()))
}

fn failures_have_leaf() -> Outcome {
    let mut total = 0;
    for n in 2..=8 {
        let rep = failing_graph_properties(n, &cfg()).map_err(|e| e.to_string())?;
        ensure(rep.all_have_leaf, || format!("n={n}: failure without a leaf"))?;
        total += rep.records.len();
    }
    Ok(format!("all {total} failures have a leaf"))
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

fn brute_force_classes(n: usize) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut perms = Vec::new();
    permutations(&mut (0..n).collect(), 0, &mut perms);
    let mut all = HashSet::new();
    let mut connected = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let code = perms.iter().map(|p| upper_triangle_code(&g.permuted(p))).max().unwrap();
        all.insert(code);
        if g.is_connected() {
            connected.insert(code);
        }
    }
    (all.len(), connected.len())
}

fn enumeration_oracle() -> Outcome {
    for n in 1..=6 {
        let (all, connected) = brute_force_classes(n);
        let got = (count_graphs(n, false, 1).unwrap() as usize, count_graphs(n, true, 1).unwrap() as usize);
        ensure(got == (all, connected), || format!("n={n}: enumerated {got:?}, brute force {:?}", (all, connected)))?;
    }
    Ok("n<=6 counts match brute force (connected 6, 21, 112)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 table1", table1),
        ("2 closed-forms", closed_forms),
        ("3 extremal-values", extremal_values),
        ("4 h2-consistency", h2_consistency),
        ("5 exact-h2-extremes", exact_h2_extremes),
        ("6 edge-addition", edge_addition),
        ("7 conjectures", conjectures),
        ("8 coentropy", coentropy_example),
        ("9 failures-have-leaf", failures_have_leaf),
        ("10 enumeration-oracle", enumeration_oracle),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name} ({secs:.2}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({secs:.2}s): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

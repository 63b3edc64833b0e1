//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::HashSet;
use std::path::Path;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use bipconn_core::{
    build_packing, build_witness, degree_sequence, kappa_bipartite, kappa_terminal, normalize,
    oracle_kappa_k, oracle_max_tree_set, oracle_spanning_packing, residue_ordering,
    target_tree_count, terminal_set, validate_tree, verify_witness, SmallGraph, TerminalSet,
};
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    check(elapsed < limit, || {
        format!("took {:.2?}, limit {limit:?}", elapsed)
    })?;
    Ok(elapsed)
}

fn packings_are_maximum() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    for a in 1..=40 {
        for b in a..=40 {
            let order = normalize(a, b).map_err(|e| e.to_string())?;
            let p = build_packing(&order).map_err(|e| format!("a={a} b={b}: {e}"))?;
            check(p.trees.len() == target_tree_count(a, b), || {
                format!("a={a} b={b}: {} trees", p.trees.len())
            })?;
            let all = order.all_vertices();
            let mut seen = HashSet::new();
            for t in &p.trees {
                check(validate_tree(&order, &all, t).is_valid(), || {
                    format!("a={a} b={b}: tree is not spanning")
                })?;
                for &e in t.edges() {
                    check(seen.insert(e), || format!("a={a} b={b}: edge {e:?} reused"))?;
                }
            }
            instances += 1;
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("{instances} instances in {t:.2?}"))
}

fn formula_matches_oracle() -> Outcome {
    let mut sets = 0;
    for a in 1..=4 {
        for b in a..=8 - a {
            let order = normalize(a, b).map_err(|e| e.to_string())?;
            let graph = SmallGraph::complete_bipartite(a, b).map_err(|e| e.to_string())?;
            for k in 2..=a + b {
                let formula = kappa_bipartite(&order, k).map_err(|e| e.to_string())?;
                let oracle = oracle_kappa_k(a, b, k).map_err(|e| e.to_string())?;
                check(formula == oracle, || {
                    format!("a={a} b={b} k={k}: formula {formula}, oracle {oracle}")
                })?;
                for i in TerminalSet::index_range(&order, k) {
                    let s = terminal_set(&order, k, i).map_err(|e| e.to_string())?;
                    let want = oracle_max_tree_set(&graph, &SmallGraph::bipartite_terminals(&s))
                        .map_err(|e| e.to_string())?
                        .count;
                    let got = kappa_terminal(&order, k, i)
                        .map_err(|e| e.to_string())?
                        .kappa;
                    check(got == want, || {
                        format!("a={a} b={b} k={k} i={i}: formula {got}, oracle {want}")
                    })?;
                    sets += 1;
                }
            }
        }
    }
    Ok(format!("{sets} terminal sets agree"))
}

fn packing_matches_oracle() -> Outcome {
    let mut instances = 0;
    for a in 1..=20 {
        for b in a..=20 / a {
            let oracle = oracle_spanning_packing(a, b)
                .map_err(|e| e.to_string())?
                .count;
            check(oracle == target_tree_count(a, b), || {
                format!("a={a} b={b}: oracle {oracle}")
            })?;
            instances += 1;
        }
    }
    Ok(format!("{instances} instances agree"))
}

fn witnesses_are_complete() -> Outcome {
    let start = Instant::now();
    let mut witnesses = 0;
    for a in 1..=12 {
        for b in a..=12 {
            let order = normalize(a, b).map_err(|e| e.to_string())?;
            for k in 2..=a + b {
                let mut min = usize::MAX;
                for i in TerminalSet::index_range(&order, k) {
                    let w = build_witness(&order, k, i)
                        .map_err(|e| format!("a={a} b={b} k={k} i={i}: {e}"))?;
                    let report = verify_witness(&order, &w);
                    check(report.is_valid(), || {
                        format!("a={a} b={b} k={k} i={i}: {:?}", report.first())
                    })?;
                    let want = kappa_terminal(&order, k, i)
                        .map_err(|e| e.to_string())?
                        .kappa;
                    check(w.trees.len() == want, || {
                        format!(
                            "a={a} b={b} k={k} i={i}: {} trees, want {want}",
                            w.trees.len()
                        )
                    })?;
                    min = min.min(want);
                    witnesses += 1;
                }
                let kappa = kappa_bipartite(&order, k).map_err(|e| e.to_string())?;
                check(min == kappa, || {
                    format!("a={a} b={b} k={k}: min {min}, kappa {kappa}")
                })?;
            }
        }
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{witnesses} witnesses in {t:.2?}"))
}

fn endpoints() -> Outcome {
    let start = Instant::now();
    for a in 1..=200 {
        for b in a..=200 {
            let order = normalize(a, b).map_err(|e| e.to_string())?;
            let k2 = kappa_bipartite(&order, 2).map_err(|e| e.to_string())?;
            check(k2 == a, || format!("a={a} b={b}: kappa_2 = {k2}"))?;
            let kn = kappa_bipartite(&order, a + b).map_err(|e| e.to_string())?;
            let want = target_tree_count(a, b);
            check(kn == want, || {
                format!("a={a} b={b}: kappa_n = {kn}, want {want}")
            })?;
        }
    }
    let t = within(start, Duration::from_secs(5))?;
    Ok(format!("a <= b <= 200 in {t:.2?}"))
}

fn degree_sequences() -> Outcome {
    for a in 1..=60 {
        for t in 1..=60 {
            let mut ord = residue_ordering(a, t);
            check(ord[0] == 1, || format!("a={a} t={t}: starts at {}", ord[0]))?;
            ord.sort_unstable();
            check(ord == (1..=a).collect::<Vec<_>>(), || {
                format!("a={a} t={t}: not a permutation")
            })?;
        }
        for b in a..=60 {
            for t in 1..=a {
                let d = degree_sequence(a, b, t).map_err(|e| e.to_string())?;
                let sums: Vec<usize> = (1..=a).map(|j| d.window_sum(j, t)).collect();
                let spread = sums.iter().max().unwrap() - sums.iter().min().unwrap();
                check(spread <= 1, || {
                    format!("a={a} b={b} t={t}: spread {spread}")
                })?;
            }
            let target = target_tree_count(a, b);
            let d = degree_sequence(a, b, target).map_err(|e| e.to_string())?;
            check(d.verify_shift_capacity(b, target), || {
                format!("a={a} b={b}: capacity fails at {target}")
            })?;
        }
    }
    Ok("a <= b <= 60".into())
}

fn hand_checked_values() -> Outcome {
    let oracle = |a, b, k| oracle_kappa_k(a, b, k).map_err(|e| e.to_string());
    let formula = |a, b, k| {
        kappa_bipartite(&normalize(a, b).map_err(|e| e.to_string())?, k).map_err(|e| e.to_string())
    };
    let mut cases = vec![(3, 3, 3, 2), (3, 3, 6, 1)];
    cases.extend((2..=5).map(|k| (2, 5, k, 2)));
    for &(a, b, k, want) in &cases {
        let (o, f) = (oracle(a, b, k)?, formula(a, b, k)?);
        check(o == want && f == want, || {
            format!("K_{{{a},{b}}} k={k}: oracle {o}, formula {f}, want {want}")
        })?;
    }

    // K_{5,5} is beyond the oracle: check every terminal set's witness.
    let order = normalize(5, 5).map_err(|e| e.to_string())?;
    let mut min = usize::MAX;
    for i in TerminalSet::index_range(&order, 4) {
        let w = build_witness(&order, 4, i).map_err(|e| e.to_string())?;
        check(verify_witness(&order, &w).is_valid(), || {
            format!("K_{{5,5}} k=4 i={i}: witness invalid")
        })?;
        min = min.min(w.trees.len());
    }
    let f = formula(5, 5, 4)?;
    check(min == 4 && f == 4, || {
        format!("K_{{5,5}} k=4: witnesses {min}, formula {f}")
    })?;
    Ok(format!("{} values", cases.len() + 1))
}

fn bipconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipconn"))
        .args(args)
        .output()
        .expect("failed to run bipconn")
}

fn verify_file(path: &Path) -> Output {
    bipconn(&["verify", "--input", path.to_str().unwrap()])
}

fn cli_round_trip() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("cert.json");
    for a in 1..=20usize {
        for b in a..=20usize {
            let (sa, sb) = (a.to_string(), b.to_string());
            let first = bipconn(&["pack", "--a", &sa, "--b", &sb]);
            check(first.status.success(), || {
                format!("pack a={a} b={b} failed")
            })?;
            let again = bipconn(&["pack", "--a", &sa, "--b", &sb]);
            check(first.stdout == again.stdout, || {
                format!("pack a={a} b={b}: output differs between runs")
            })?;
            std::fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
            let verdict = verify_file(&path);
            check(verdict.status.code() == Some(0), || {
                format!(
                    "verify a={a} b={b}: exit {:?}: {}",
                    verdict.status.code(),
                    String::from_utf8_lossy(&verdict.stderr)
                )
            })?;
        }
    }

    let packed = bipconn(&["pack", "--a", "5", "--b", "7"]);
    let mut doc: Value = serde_json::from_slice(&packed.stdout).map_err(|e| e.to_string())?;
    let trees = doc["trees"].as_array_mut().ok_or("no trees array")?;
    let stolen = trees[0]["edges"][0].clone();
    trees[1]["edges"][0] = stolen;
    std::fs::write(&path, doc.to_string()).map_err(|e| e.to_string())?;
    let verdict = verify_file(&path);
    let stderr = String::from_utf8_lossy(&verdict.stderr);
    check(
        verdict.status.code() == Some(2) && stderr.contains("edge-overlap"),
        || {
            format!(
                "tampered certificate: exit {:?}: {stderr}",
                verdict.status.code()
            )
        },
    )?;
    Ok("210 round trips, tampering detected".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("spanning-tree packings are maximum", packings_are_maximum),
        (
            "closed form matches exhaustive search",
            formula_matches_oracle,
        ),
        (
            "packing number matches exhaustive search",
            packing_matches_oracle,
        ),
        (
            "witnesses are complete and verified",
            witnesses_are_complete,
        ),
        ("endpoint values", endpoints),
        ("degree sequences are balanced", degree_sequences),
        ("hand-checked values", hand_checked_values),
        ("CLI round trip", cli_round_trip),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

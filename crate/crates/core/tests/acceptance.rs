//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs under `cargo test` with a custom harness.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use topoindex::distance::{self, bfs_distances};
use topoindex::graph::{self, FamilyKind, Graph, SunSpec};
use topoindex::hosoya::{hosoya_polynomial, wiener_from_polynomial};
use topoindex::indices;
use topoindex::oracle::{self, floyd_warshall};
use topoindex::relations::{self, Relation, RelationReport, Status};
use topoindex::sun_forms::{self, SunVertex};

use common::{corpus, family, random_graphs, sun};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

macro_rules! check_eq {
    ($left:expr, $right:expr, $($fmt:tt)+) => {
        match (&$left, &$right) {
            (l, r) => {
                if l != r {
                    return Err(format!("{}: {:?} != {:?}", format!($($fmt)+), l, r));
                }
            }
        }
    };
}

const K_MAX: u64 = 100;

fn wiener_formula(k: u64) -> u64 {
    k * (4 * k - 5)
}

fn polarity_formula(k: u64) -> u64 {
    k * (k - 3) / 2
}

fn hosoya_formula(k: u64) -> Vec<u64> {
    let mut c = vec![k * (k + 3) / 2, k * (k - 1), k * (k - 3) / 2];
    if c[2] == 0 {
        c.pop();
    }
    c
}

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_topoindex"))
        .args(args)
        .output()
        .expect("topoindex binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, g: &Graph) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, graph::to_edge_list(g)).unwrap();
    path.to_str().unwrap().to_owned()
}

fn ac01_theorem1_sweep() -> Outcome {
    let start = Instant::now();
    for k in 3..=K_MAX {
        let g = sun(k as usize);
        let want = wiener_formula(k);
        check_eq!(
            indices::wiener_pairwise(&g).unwrap(),
            want,
            "pairwise k={k}"
        );
        check_eq!(
            indices::wiener_transmission(&g).unwrap(),
            want,
            "transmission k={k}"
        );
        check_eq!(
            oracle::wiener_naive(&floyd_warshall(&g)).unwrap(),
            want,
            "oracle k={k}"
        );
        check_eq!(sun_forms::wiener_sun(k).unwrap(), want, "closed form k={k}");
    }
    check_eq!(wiener_formula(3), 21, "k=3");
    check_eq!(wiener_formula(10), 350, "k=10");
    let elapsed = start.elapsed();
    check!(elapsed < Duration::from_secs(10), "sweep took {elapsed:?}");
    Ok(format!("k=3..{K_MAX}, {elapsed:.2?}"))
}

fn ac02_theorem2_sweep() -> Outcome {
    for k in 3..=K_MAX {
        let g = sun(k as usize);
        let want = polarity_formula(k);
        check_eq!(indices::wiener_polarity(&g).unwrap(), want, "engine k={k}");
        check_eq!(
            oracle::polarity_naive(&floyd_warshall(&g)).unwrap(),
            want,
            "oracle k={k}"
        );
        check_eq!(
            sun_forms::wiener_polarity_sun(k).unwrap(),
            want,
            "closed form k={k}"
        );
    }
    check_eq!(
        (
            polarity_formula(3),
            polarity_formula(4),
            polarity_formula(7)
        ),
        (0, 2, 14),
        "spot values"
    );
    Ok(format!("k=3..{K_MAX}"))
}

fn ac03_theorem3_hosoya() -> Outcome {
    for k in 3..=K_MAX {
        let want = hosoya_formula(k);
        let got = hosoya_polynomial(&sun(k as usize)).unwrap();
        check_eq!(got.coeffs(), want.as_slice(), "engine k={k}");
        check_eq!(
            sun_forms::hosoya_sun(k).unwrap().coeffs(),
            want.as_slice(),
            "closed form k={k}"
        );
    }
    let dir = tempfile::TempDir::new().unwrap();
    let path = write_temp(&dir, "sun3.txt", &sun(3));
    let out = binary(&["compute", &path]);
    check!(out.status.success(), "compute exited with {:?}", out.status);
    let text = String::from_utf8(out.stdout).unwrap();
    check!(
        text.contains(r#""hosoya":[9,6]"#),
        "CLI JSON lacks \"hosoya\":[9,6]: {text}"
    );
    check_eq!(text, golden("sun3.json"), "golden sun3.json");
    Ok(format!("k=3..{K_MAX}, CLI bytes match"))
}

fn ac04_remark1() -> Outcome {
    for k in 3..=K_MAX as usize {
        let g = sun(k);
        let h = hosoya_polynomial(&g).unwrap();
        check_eq!(
            wiener_from_polynomial(&h).unwrap(),
            indices::wiener_pairwise(&g).unwrap(),
            "sun({k})"
        );
    }
    let randoms = random_graphs();
    for item in &randoms {
        let h = hosoya_polynomial(&item.graph).unwrap();
        check_eq!(
            wiener_from_polynomial(&h).unwrap(),
            indices::wiener_pairwise(&item.graph).unwrap(),
            "{}",
            item.name
        );
    }
    Ok(format!(
        "{} suns, {} random graphs",
        K_MAX - 2,
        randoms.len()
    ))
}

fn ac05_transmission_split() -> Outcome {
    for k in 3..=K_MAX {
        let ku = k as usize;
        let t = distance::transmissions(&sun(ku)).unwrap();
        let independent: u64 = t[ku..].iter().sum();
        let clique: u64 = t[..ku].iter().sum();
        check_eq!(independent, k * (5 * k - 7), "U k={k}");
        check_eq!(clique, k * (3 * k - 3), "C k={k}");
        let split = sun_forms::transmission_split_sun(k).unwrap();
        check_eq!(
            (split.u_total, split.c_total),
            (independent, clique),
            "closed form k={k}"
        );
    }
    let t = distance::transmissions(&sun(4)).unwrap();
    check_eq!(
        (t[4..].iter().sum::<u64>(), t[..4].iter().sum::<u64>()),
        (52, 36),
        "k=4"
    );
    Ok(format!("k=3..{K_MAX}"))
}

fn ac06_sun_distance_classifier() -> Outcome {
    let mut checked = 0usize;
    for k in 3..=50 {
        let spec = SunSpec::new(k).unwrap();
        let g = graph::sun(spec);
        for a in 0..2 * k {
            let d = bfs_distances(&g, a).unwrap();
            let va = SunVertex::from_id(spec, a).unwrap();
            for (b, &db) in d.iter().enumerate().skip(a + 1) {
                let vb = SunVertex::from_id(spec, b).unwrap();
                let classified = sun_forms::sun_distance(k, va, vb).unwrap();
                check_eq!(u32::from(classified), db, "k={k} {va:?}-{vb:?}");
                checked += 1;
            }
        }
    }
    let expected: usize = (3..=50).map(|k| 2 * k * (2 * k - 1) / 2).sum();
    check_eq!(checked, expected, "pair count");
    Ok(format!("{checked} pairs"))
}

fn ac07_proposition() -> Outcome {
    let mut graphs: Vec<(String, Graph)> =
        (3..=64).map(|k| (format!("sun({k})"), sun(k))).collect();
    let mut random_kept = 0;
    for item in random_graphs() {
        if distance::diameter(&item.graph).unwrap() <= 3 {
            random_kept += 1;
            graphs.push((item.name, item.graph));
        }
    }
    graphs.push(("cycle(6)".into(), family(FamilyKind::Cycle(6))));
    graphs.push(("path(4)".into(), family(FamilyKind::Path(4))));
    for (name, g) in &graphs {
        let r = relations::check_proposition(g).unwrap();
        let (n, m) = (g.vertex_count() as i64, g.edge_count() as i64);
        let wp = indices::wiener_polarity(g).unwrap() as i64;
        check_eq!(r.rhs, n * (n - 1) + wp - m, "{name} rhs");
        check_eq!(r.lhs, r.rhs, "{name}");
        check_eq!(r.status, Status::EqualityHolds, "{name}");
    }
    check!(random_kept > 0, "no random graph with diameter <= 3");
    Ok(format!("{} graphs ({random_kept} random)", graphs.len()))
}

fn sides(r: &RelationReport) -> (i64, i64, Status) {
    (r.lhs, r.rhs, r.status)
}

fn ac08_documented_discrepancy() -> Outcome {
    let s4 = sun(4);
    let dm = floyd_warshall(&s4);
    check_eq!(
        oracle::polarity_naive(&dm).unwrap(),
        2,
        "oracle W_p(sun(4))"
    );
    check_eq!(oracle::wiener_naive(&dm).unwrap(), 44, "oracle W(sun(4))");
    check_eq!(
        sides(&relations::check_polarity_bound(&s4).unwrap()),
        (2, -30, Status::Violated),
        "sun(4) polarity bound"
    );
    check_eq!(
        sides(&relations::check_corollary_wiener(&s4).unwrap()),
        (44, 12, Status::Violated),
        "sun(4) corollary"
    );
    for kind in [FamilyKind::Path(4), FamilyKind::Cycle(6)] {
        let g = family(kind);
        check_eq!(
            relations::check_polarity_bound(&g).unwrap().status,
            Status::EqualityHolds,
            "{kind} polarity bound"
        );
        check_eq!(
            relations::check_corollary_wiener(&g).unwrap().status,
            Status::EqualityHolds,
            "{kind} corollary"
        );
    }

    let dir = tempfile::TempDir::new().unwrap();
    let path = write_temp(&dir, "sun4.txt", &s4);
    let out = binary(&["relations", &path]);
    check!(
        out.status.success(),
        "relations exited with {:?}",
        out.status
    );
    let text = String::from_utf8(out.stdout).unwrap();
    check_eq!(
        text,
        golden("sun4_relations.json"),
        "golden sun4_relations.json"
    );
    let report: Value = serde_json::from_str(&text).unwrap();
    let entries = report.as_array().unwrap();
    for want in [
        json!({"name": "polarity_bound", "lhs": 2, "rhs": -30, "status": "Violated"}),
        json!({"name": "corollary_wiener", "lhs": 44, "rhs": 12, "status": "Violated"}),
    ] {
        check!(entries.contains(&want), "golden report lacks {want}");
    }
    Ok("sun(4) violated, P4/C6 equal, golden report matches".into())
}

fn ac09_decomposition() -> Outcome {
    let items = corpus(64);
    for item in &items {
        let g = &item.graph;
        let n = g.vertex_count() as u64;
        let w = indices::wiener_pairwise(g).unwrap();
        let diam = distance::diameter(g).unwrap() as usize;
        let wd: Vec<u64> = (1..=diam)
            .map(|d| indices::generalized_wd(g, d).unwrap())
            .collect();
        let weighted: u64 = wd.iter().zip(1u64..).map(|(&c, d)| c * d).sum();
        check_eq!(w, weighted, "{} W = Σ d·W_d", item.name);
        check_eq!(
            wd.iter().sum::<u64>(),
            n * n.saturating_sub(1) / 2,
            "{} Σ W_d",
            item.name
        );
        let r = relations::check_all(g).unwrap();
        let dec = r
            .iter()
            .find(|r| r.name == Relation::Decomposition)
            .unwrap();
        check_eq!(dec.status, Status::EqualityHolds, "{} report", item.name);
    }
    Ok(format!("{} graphs", items.len()))
}

fn ac10_oracle_equivalence() -> Outcome {
    let items = corpus(K_MAX as usize);
    let mut entries = 0usize;
    for item in items.iter().filter(|i| i.graph.vertex_count() <= 200) {
        let g = &item.graph;
        let dm = floyd_warshall(g);
        for s in 0..g.vertex_count() {
            let bfs = bfs_distances(g, s).unwrap();
            for (t, &d) in bfs.iter().enumerate() {
                check_eq!(Some(d), dm.get(s, t), "{} ({s},{t})", item.name);
            }
            entries += bfs.len();
        }
    }
    Ok(format!("{} graphs, {entries} entries", items.len()))
}

fn ac11_bench_performance() -> Outcome {
    let start = Instant::now();
    let out = binary(&["bench", "--family", "sun", "--k", "500", "--repeat", "1"]);
    let wall = start.elapsed();
    check!(out.status.success(), "bench exited with {:?}", out.status);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    let by = |m: &str| results.iter().find(|r| r["method"] == m).cloned();
    let engine = by("engine").ok_or("no engine result")?;
    let closed = by("closed_form").ok_or("no closed-form result")?;
    check_eq!(engine["wiener"], json!(997_500), "engine W(sun(500))");
    check_eq!(closed["wiener"], json!(997_500), "closed-form W(sun(500))");
    check_eq!(
        sun_forms::wiener_sun(500).unwrap(),
        997_500,
        "wiener_sun(500)"
    );
    let engine_ns = engine["best_ns"].as_u64().unwrap();
    let closed_ns = closed["best_ns"].as_u64().unwrap();
    check!(wall < Duration::from_secs(10), "bench run took {wall:?}");
    check!(engine_ns < 10_000_000_000, "engine took {engine_ns} ns");
    check!(closed_ns < 1_000_000, "closed form took {closed_ns} ns");
    check!(
        closed_ns < engine_ns,
        "closed form ({closed_ns} ns) not faster than engine ({engine_ns} ns)"
    );
    Ok(format!(
        "engine {:.3?}, closed form {closed_ns} ns, run {wall:.2?}",
        Duration::from_nanos(engine_ns)
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC-01 Wiener index of k-sun sweep", ac01_theorem1_sweep),
        ("AC-02 Wiener polarity of k-sun sweep", ac02_theorem2_sweep),
        ("AC-03 Hosoya polynomial of k-sun", ac03_theorem3_hosoya),
        ("AC-04 Wiener index from H'(1)", ac04_remark1),
        ("AC-05 transmission split", ac05_transmission_split),
        (
            "AC-06 sun distance classifier",
            ac06_sun_distance_classifier,
        ),
        (
            "AC-07 W = n(n-1) + W_p - m for diameter <= 3",
            ac07_proposition,
        ),
        (
            "AC-08 M1-based relations on sun(4), P4, C6",
            ac08_documented_discrepancy,
        ),
        ("AC-09 distance decomposition", ac09_decomposition),
        ("AC-10 BFS vs Floyd-Warshall", ac10_oracle_equivalence),
        ("AC-11 bench sun k=500", ac11_bench_performance),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS  {name}  ({detail})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({why})");
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

//! One PASS/FAIL line per acceptance criterion. Integer checks are exact;
//! runtime limits are measured on the test profile.

use std::process::Command;
use std::time::{Duration, Instant};

use geokiss::adversary::{
    config_balls_icosahedron, config_congruent_hypercubes, config_disks_radii_1_2,
    config_hypercube_translates, config_regular_kgon, config_unit_disks, cyclone_sequence,
    star_sequence, verify_config, wheel_from_translates, KissingConfig, TranslateFamily, Verdict,
    DEFAULT_DELTA,
};
use geokiss::geometry::DEFAULT_TOLERANCE;
use geokiss::graph::{components, independent_kissing_number_with_cap, Graph, HARD_VERTEX_LIMIT};
use geokiss::harness::{
    generate_random_instance, read_report, run_sweep, write_report, Pass, SweepConfig,
};
use geokiss::online::{ArrivalSequence, FirstFit, GreedyCds, GreedyDs, Model, RelaxedFirstFit};
use geokiss::oracles::{check, Problem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = t.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:?}, limit {limit:?}")
    })
}

fn greedy_ds_size(seq: &ArrivalSequence) -> usize {
    let mut ds = GreedyDs::new();
    for a in &seq.arrivals {
        ds.step(a);
    }
    ds.solution().len()
}

fn greedy_cds_size(seq: &ArrivalSequence) -> Result<usize, String> {
    let mut cds = GreedyCds::new();
    for a in &seq.arrivals {
        cds.step(a).map_err(|e| e.to_string())?;
    }
    Ok(cds.solution_size())
}

/// Exact optimum; the stars here exceed the default cap but are solved at depth 1.
fn opt(p: Problem, g: &Graph) -> Result<usize, String> {
    p.solve_with_cap(g, HARD_VERTEX_LIMIT)
        .map(|r| r.value)
        .map_err(|e| e.to_string())
}

fn ac1() -> Outcome {
    let star = |cfg: &KissingConfig| -> Result<(usize, usize), String> {
        let t = Instant::now();
        let seq = star_sequence(cfg).map_err(|e| e.to_string())?;
        let r = (greedy_ds_size(&seq), opt(Problem::Mds, &seq.graph())?);
        within(t, Duration::from_secs(1), &cfg.family_tag)?;
        Ok(r)
    };
    let (alg, o) = star(&config_unit_disks(0.01).map_err(|e| e.to_string())?)?;
    ensure((alg, o) == (5, 1), || {
        format!("unit disks: GreedyDS {alg}, MDS {o}")
    })?;
    for d in 1..=5 {
        let (alg, o) = star(&config_hypercube_translates(d, 0.01).map_err(|e| e.to_string())?)?;
        ensure((alg, o) == (1 << d, 1), || {
            format!("d={d}: GreedyDS {alg}, MDS {o}")
        })?;
    }
    Ok("unit disks 5/1; hypercube translates 2^d/1 for d=1..5".into())
}

fn ac2() -> Outcome {
    let t = Instant::now();
    let mut sizes = Vec::new();
    for k in [6, 8, 10, 12] {
        for split in 1..k - 1 {
            let seq = cyclone_sequence(k, split)
                .map_err(|e| e.to_string())?
                .arrival_sequence();
            let size = greedy_cds_size(&seq)?;
            let o = opt(Problem::Mcds, &seq.graph())?;
            ensure(size >= k - 2 && o == 1, || {
                format!("W_{k}, t={split}: GreedyCDS {size}, MCDS {o}")
            })?;
            if split == k / 2 {
                sizes.push(size);
            }
        }
    }
    within(t, Duration::from_secs(1), "abstract wheels")?;
    let t = Instant::now();
    let (shapes, order) = wheel_from_translates(TranslateFamily::UnitDisks, DEFAULT_DELTA)
        .map_err(|e| e.to_string())?;
    let g = geokiss::graph::build_intersection_graph(&shapes).map_err(|e| e.to_string())?;
    let seq = order.arrivals_on(&g).map_err(|e| e.to_string())?;
    let size = greedy_cds_size(&seq)?;
    let o = opt(Problem::Mcds, &g)?;
    within(t, Duration::from_secs(1), "geometric W_10")?;
    ensure(size >= 8 && o == 1, || {
        format!("geometric W_10: GreedyCDS {size}, MCDS {o}")
    })?;
    Ok(format!(
        "abstract sizes {sizes:?} for k=6,8,10,12; geometric W_10 ratio {size}"
    ))
}

fn ac3() -> Outcome {
    let t = Instant::now();
    let e =
        |r: Result<KissingConfig, geokiss::adversary::AdversaryError>| r.map_err(|e| e.to_string());
    let mut cfgs = vec![e(config_balls_icosahedron(0.01))?, config_disks_radii_1_2()];
    for d in 1..=6 {
        cfgs.push(e(config_hypercube_translates(d, 0.01))?);
    }
    for d in 2..=4 {
        cfgs.push(e(config_congruent_hypercubes(d, 0.01))?);
    }
    for k in [3, 5, 6, 7, 9, 12] {
        cfgs.push(e(config_regular_kgon(k))?);
    }
    let expected = [12, 11, 2, 4, 8, 16, 32, 64, 8, 16, 32, 5, 5, 5, 5, 5, 5];
    for (cfg, want) in cfgs.iter().zip(expected) {
        ensure(cfg.claimed_zeta == want, || {
            format!("{}: claims {} not {want}", cfg.family_tag, cfg.claimed_zeta)
        })?;
        ensure(verify_config(cfg, false) == Verdict::Valid, || {
            format!("{}: {:?}", cfg.family_tag, verify_config(cfg, false))
        })?;
        let g = cfg
            .intersection_graph(DEFAULT_TOLERANCE)
            .map_err(|e| e.to_string())?;
        let z = independent_kissing_number_with_cap(&g, HARD_VERTEX_LIMIT)
            .map_err(|e| e.to_string())?
            .zeta;
        ensure(z == want, || {
            format!("{}: zeta {z}, claimed {want}", cfg.family_tag)
        })?;
    }
    within(t, Duration::from_secs(5), "configurations")?;
    Ok(format!(
        "{} configurations verified with zeta equal to the claim",
        cfgs.len()
    ))
}

const AC4_CONFIG: &str = r#"
[[trials]]
family = "unit_disks"
n_min = 6
n_max = 18
count = 200
seed_start = 1000
box_size = 6.0
algorithms = ["greedy_ds", "greedy_cds", "first_fit", "layer"]

[[trials]]
family = "mixed_disks"
n_min = 6
n_max = 16
count = 100
seed_start = 5000
box_size = 12.0
width_range = [1.0, 4.0]
algorithms = ["greedy_ds", "greedy_cds", "first_fit", "layer"]
"#;

fn ac4() -> Outcome {
    let t = Instant::now();
    let cfg = SweepConfig::parse(AC4_CONFIG).map_err(|e| e.to_string())?;
    let rows = run_sweep(&cfg).map_err(|e| e.to_string())?;
    within(t, Duration::from_secs(120), "sweep")?;
    let instances: std::collections::BTreeSet<_> =
        rows.iter().map(|r| (r.family.clone(), r.seed)).collect();
    ensure(instances.len() == 300, || {
        format!("{} instances instead of 300", instances.len())
    })?;
    let required = [
        "greedy_ds:mds",
        "greedy_cds:mcds_abs",
        "greedy_cds:mcds_asym",
        "first_fit:chi",
        "layer:chi[zp=11;L=1]",
        "layer:chi[zp=11;L=3]",
        "instance:max_is",
        "instance:cross_layer[zp=11]",
    ];
    for tag in required {
        ensure(rows.iter().any(|r| r.algorithm == tag), || {
            format!("no `{tag}` rows")
        })?;
    }
    let bad: Vec<_> = rows.iter().filter(|r| r.pass != Pass::Pass).collect();
    ensure(bad.is_empty(), || {
        format!("{} rows not passing, first {:?}", bad.len(), bad[0])
    })?;
    let mut csv = Vec::new();
    write_report(&mut csv, &rows).map_err(|e| e.to_string())?;
    let back = read_report(csv.as_slice()).map_err(|e| e.to_string())?;
    ensure(
        back.iter().map(|r| r.pass).eq(rows.iter().map(|r| r.pass)),
        || "CSV verdicts changed on reload".into(),
    )?;
    Ok(format!(
        "{} rows over 300 instances, no violations, in {:.1?}",
        rows.len(),
        t.elapsed()
    ))
}

fn ac5() -> Outcome {
    let cfg = SweepConfig::parse(AC4_CONFIG).map_err(|e| e.to_string())?;
    let mut steps = 0;
    for trial in &cfg.trials {
        for seed in trial.seed_start..trial.seed_start + trial.count as u64 {
            let inst =
                generate_random_instance(&trial.gen_spec(seed)).map_err(|e| e.to_string())?;
            let (g, seq) = inst.lower(DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
            let mut cds = GreedyCds::new();
            for a in &seq.arrivals {
                cds.step(a).map_err(|e| e.to_string())?;
                steps += 1;
                ensure(g.is_independent(cds.a1()), || {
                    format!("seed {seed}: A1 not independent")
                })?;
                ensure(cds.a1().len() >= cds.a2().len(), || {
                    format!("seed {seed}: |A1| < |A2|")
                })?;
            }
            let sol = cds.solution();
            ensure(check::is_connected_dominating_set(&g, &sol), || {
                format!("seed {seed}: not a CDS")
            })?;
        }
    }
    Ok(format!("invariants held after all {steps} arrivals"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn mask_neighbors(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect()
}

fn dominates(nb: &[u32], set: u32, within: u32) -> bool {
    let mut covered = set;
    for (v, &m) in nb.iter().enumerate() {
        if set >> v & 1 == 1 {
            covered |= m;
        }
    }
    covered & within == within
}

fn independent(nb: &[u32], set: u32) -> bool {
    nb.iter()
        .enumerate()
        .all(|(v, &m)| set >> v & 1 == 0 || m & set == 0)
}

fn connected(nb: &[u32], set: u32) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = 1u32 << set.trailing_zeros();
    loop {
        let grown = (0..nb.len())
            .filter(|&v| seen >> v & 1 == 1)
            .fold(seen, |s, v| s | (nb[v] & set));
        if grown == seen {
            return seen == set;
        }
        seen = grown;
    }
}

fn brute_min(n: usize, ok: impl Fn(u32) -> bool) -> usize {
    (0u32..1 << n)
        .filter(|&s| ok(s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Fewest independent sets covering `set`, over all partitions.
fn brute_chi(nb: &[u32], set: u32, memo: &mut std::collections::HashMap<u32, usize>) -> usize {
    if set == 0 {
        return 0;
    }
    if let Some(&c) = memo.get(&set) {
        return c;
    }
    let low = 1u32 << set.trailing_zeros();
    let rest = set & !low;
    let mut best = usize::MAX;
    let mut sub = rest;
    loop {
        let class = sub | low;
        if independent(nb, class) {
            best = best.min(1 + brute_chi(nb, set & !class, memo));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    memo.insert(set, best);
    best
}

fn ac6() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..50 {
        let n = rng.gen_range(1..=12);
        let p = [0.15, 0.3, 0.5, 0.7][i % 4];
        let g = random_graph(&mut rng, n, p);
        let nb = mask_neighbors(&g);
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mds = brute_min(n, |s| dominates(&nb, s, all));
        let mids = brute_min(n, |s| independent(&nb, s) && dominates(&nb, s, all));
        let mcds: usize = components(&g)
            .iter()
            .map(|comp| {
                let cm = comp.iter().fold(0u32, |m, &v| m | 1 << v);
                brute_min(n, |s| {
                    s & !cm == 0 && connected(&nb, s) && dominates(&nb, s, cm)
                })
            })
            .sum();
        let chi = brute_chi(&nb, all, &mut Default::default());
        for (p, want) in [
            (Problem::Mds, mds),
            (Problem::Mids, mids),
            (Problem::Mcds, mcds),
            (Problem::Chi, chi),
        ] {
            let r = p.solve(&g).map_err(|e| e.to_string())?;
            ensure(r.value == want, || {
                format!(
                    "graph {i} (n={n}): {} {} vs enumeration {want}",
                    p.name(),
                    r.value
                )
            })?;
            check::validate(p, &g, &r)
                .map_err(|e| format!("graph {i}: {} witness: {e}", p.name()))?;
        }
    }
    within(t, Duration::from_secs(30), "oracle comparison")?;
    Ok("50 graphs, all four oracles match enumeration".into())
}

fn table_cells(args: &[&str]) -> Result<Vec<(String, Vec<f64>)>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_geokiss"))
        .arg("table")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    let mut rd = csv::Reader::from_reader(out.stdout.as_slice());
    rd.records()
        .map(|r| {
            let r = r.map_err(|e| e.to_string())?;
            let nums = (1..5)
                .map(|i| r[i].parse::<f64>().map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            Ok((r[0].to_string(), nums))
        })
        .collect()
}

fn ac7() -> Outcome {
    let fixed: [(&str, [f64; 4]); 3] = [
        ("congruent balls", [12.0, 12.0, 22.0, 288.0]),
        ("regular k-gon", [6.0, 6.0, 10.0, 72.0]),
        ("disks with radii", [11.0, 11.0, 20.0, 242.0]),
    ];
    let mut checked = 0;
    for d in 1..=5u32 {
        let rows = table_cells(&["--d", &d.to_string()])?;
        let find = |prefix: &str| {
            rows.iter()
                .find(|(f, _)| f.starts_with(prefix))
                .map(|(_, c)| c.clone())
        };
        for (prefix, want) in &fixed {
            ensure(find(prefix).as_deref() == Some(&want[..]), || {
                format!("{prefix}: {:?}", find(prefix))
            })?;
            checked += 4;
        }
        let z = 2f64.powi(d as i32);
        let want = [z, z, 2.0 * (z - 1.0), 2.0 * z * z];
        ensure(
            find("hypercube translates").as_deref() == Some(&want[..]),
            || format!("translates d={d}"),
        )?;
        let z = 2.0 * z;
        let want = [z, z, 2.0 * (z - 1.0), 2.0 * z * z];
        ensure(
            find("congruent hypercubes").as_deref() == Some(&want[..]),
            || format!("congruent d={d}"),
        )?;
        checked += 8;
    }
    let rows = table_cells(&["--d", "2", "--alpha", "1", "--m", "1"])?;
    let fat = &rows
        .iter()
        .find(|(f, _)| f.starts_with("fat objects"))
        .ok_or("no fat row")?
        .1;
    ensure(fat[..] == [9.0, 16.0, 16.0, 162.0], || {
        format!("fat row {fat:?}")
    })?;
    checked += 4;
    Ok(format!("{checked} cells match"))
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..50 {
        let n = rng.gen_range(1..=40);
        let p = rng.gen_range(0.05..0.6);
        let g = random_graph(&mut rng, n, p);
        let mut order: Vec<usize> = (0..n).collect();
        for j in (1..n).rev() {
            order.swap(j, rng.gen_range(0..=j));
        }
        let seq = ArrivalSequence::from_graph(&g, &order, Model::Classical, None)
            .map_err(|e| e.to_string())?;
        let (mut ff, mut r0) = (FirstFit::new(), RelaxedFirstFit::new(0));
        for a in &seq.arrivals {
            ensure(ff.step(a) == r0.step(a), || {
                format!("sequence {i}: t=0 differs from FirstFit")
            })?;
        }
        ensure(ff.colors() == r0.colors(), || {
            format!("sequence {i}: final colorings differ")
        })?;
        for t in 1..=3 {
            let mut rf = RelaxedFirstFit::new(t);
            for a in &seq.arrivals {
                rf.step(a);
            }
            let c = rf.colors();
            for v in 0..n {
                let same = g.neighbors(v).iter().filter(|&&u| c[u] == c[v]).count();
                ensure(same <= t, || {
                    format!("sequence {i}, t={t}: vertex {v} has {same} same-class neighbors")
                })?;
            }
        }
    }
    Ok("50 sequences: t=0 identical to FirstFit, class degrees within t for t=1..3".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1", ac1),
        ("AC2", ac2),
        ("AC3", ac3),
        ("AC4", ac4),
        ("AC5", ac5),
        ("AC6", ac6),
        ("AC7", ac7),
        ("AC8", ac8),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("{name} PASS {detail}"),
            Err(why) => {
                println!("{name} FAIL {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}

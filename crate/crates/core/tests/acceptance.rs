//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use voltpath::heap::PairingHeap;
use voltpath::io::{parse_problem, serialize_problem, ProblemFile};
use voltpath::solvers::{
    compute_potential, e_bellman_ford, e_dijkstra, e_dijkstra_with, min_initial_charge, single_source,
    verify_fixpoint, Algorithm, SolveResult,
};
use voltpath::testkit::{
    check_target_trees, find_no_target_tree_witness, generate, oracle_costs_from, oracle_min_energetic,
    oracle_min_initial, random_graph, small_instance, standard_distances, verified_stored_witness, GeneratorSpec,
    Instance, Topology,
};
use voltpath::{path_energetic_cost, Arc, BatteryConfig, Capacity, Energy, Error, Graph};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn cap(b: i64) -> Capacity {
    Capacity::new(b).unwrap()
}

fn ensure(ok: bool, detail: String) -> Verdict {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// No-negative-cycle instance with `n` up to `max_n`, mixed topologies.
fn medium_instance(rng: &mut ChaCha8Rng, max_n: usize) -> Instance {
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(n..=(4 * n).min(n * (n - 1)));
    let capacity = rng.random_range(1..=10_000);
    let topology = if rng.random_bool(0.25) && n >= 5 {
        Topology::Ring { span: 2 }
    } else {
        Topology::Uniform
    };
    let m = match topology {
        Topology::Ring { span } => m.min(n * 2 * span),
        Topology::Uniform => m,
    };
    generate(&GeneratorSpec {
        potential_range: rng.random_range(0..=capacity),
        reduced_cost_range: rng.random_range(0..=capacity),
        topology,
        ..GeneratorSpec::new(n, m, capacity, rng.random())
    })
    .unwrap()
}

fn oracle_equivalence() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut accepted, mut excluded, mut idle_cycles, mut mismatches) = (0u32, 0u32, 0u32, 0u32);
    while accepted < 10_000 {
        let n = rng.random_range(1..=8);
        let m = if n < 2 { 0 } else { rng.random_range(0..=16) };
        let b = rng.random_range(1..=8);
        let g = random_graph(n, m, b, rng.random()).unwrap();
        let s = rng.random_range(0..n);
        let t = rng.random_range(0..n);
        let r = match e_bellman_ford(&g, cap(b), s) {
            Ok(r) => r,
            Err(Error::NegativeCycle(report)) => {
                if !report.is_consistent(&g) || standard_distances(&g, s).is_ok() {
                    return Err(format!("bad cycle report {report:?}"));
                }
                excluded += 1;
                continue;
            }
            Err(e) => return Err(e.to_string()),
        };
        accepted += 1;
        if standard_distances(&g, s).is_err() {
            // a negative cycle that can only top up a full battery
            idle_cycles += 1;
        }
        if r.energy(t) != oracle_min_energetic(&g, cap(b), s, t).unwrap() {
            mismatches += 1;
        }
        if r.energies() != oracle_costs_from(&g, BatteryConfig::full(cap(b)), s).unwrap() {
            mismatches += 1;
        }
    }
    ensure(
        mismatches == 0,
        format!(
            "{accepted} graphs ({idle_cycles} with a negative cycle that never lifts a label), {mismatches} mismatches, {excluded} excluded by a negative cycle report"
        ),
    )
}

fn algorithm_agreement() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut mismatches, mut rescans, mut vertices) = (0u32, 0u32, 0usize);
    for i in 0..1_000 {
        let inst = medium_instance(&mut rng, 300);
        let g = &inst.graph;
        let s = rng.random_range(0..g.n());
        let p = compute_potential(g).unwrap();
        let bf = e_bellman_ford(g, inst.capacity, s).unwrap();
        let dj = if i % 2 == 0 {
            e_dijkstra(g, &p, inst.capacity, s).unwrap()
        } else {
            e_dijkstra_with::<PairingHeap>(g, &p, inst.capacity, s).unwrap()
        };
        vertices += g.n();
        if dj.energies() != bf.energies() {
            mismatches += 1;
        }
        rescans += dj.scans().iter().filter(|&&k| k > 1).count() as u32;
    }
    ensure(
        mismatches == 0 && rescans == 0,
        format!("1000 graphs ({vertices} vertices), {mismatches} label mismatches, {rescans} vertices scanned twice"),
    )
}

fn perturbed(r: &SolveResult, v: usize) -> SolveResult {
    let mut e = r.energies().to_vec();
    e[v] = e[v].shift(-1);
    SolveResult::from_parts(r.source(), r.battery(), e, r.preds().to_vec(), r.scans().to_vec())
}

fn fixpoint_certification() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut outputs, mut accepted) = (0u32, 0u32);
    let (mut perturbations, mut rejected) = (0u32, 0u32);
    while perturbations < 1_000 {
        let inst = medium_instance(&mut rng, 60);
        let g = &inst.graph;
        let s = rng.random_range(0..g.n());
        let b = rng.random_range(0..=inst.capacity.get());
        let battery = BatteryConfig::new(inst.capacity.get(), b).unwrap();
        for alg in [Algorithm::BellmanFord, Algorithm::Dijkstra] {
            let r = single_source(g, battery, s, alg).unwrap();
            outputs += 1;
            if verify_fixpoint(g, &r).is_ok() {
                accepted += 1;
            }
            // labels that can still drop by one without leaving the domain
            let floor = -battery.initial_depletion();
            let candidates: Vec<usize> = (0..g.n())
                .filter(|&v| v != s && r.energy(v).finite().is_some_and(|d| d > floor))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            let v = candidates[rng.random_range(0..candidates.len())];
            perturbations += 1;
            if verify_fixpoint(g, &perturbed(&r, v)).is_err() {
                rejected += 1;
            }
        }
    }
    ensure(
        accepted == outputs && rejected == perturbations,
        format!("accepted {accepted}/{outputs} solver outputs, rejected {rejected}/{perturbations} perturbations"),
    )
}

fn beta_cross_check() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut instances, mut pairs, mut mismatches, mut scanned) = (0u32, 0u32, 0u32, 0u32);
    while instances < 2_000 {
        let (g, capacity, generated) = if instances % 2 == 0 {
            let inst = small_instance(rng.random(), 8, 16, 8).unwrap();
            (inst.graph, inst.capacity, true)
        } else {
            let n = rng.random_range(2..=7);
            let b = rng.random_range(1..=8);
            (random_graph(n, rng.random_range(0..=14), b, rng.random()).unwrap(), cap(b), false)
        };
        let t = rng.random_range(0..g.n());
        if compute_potential(&g).is_err() {
            continue;
        }
        let beta = min_initial_charge(&g, capacity, t, Algorithm::BellmanFord).map_err(|e| e.to_string())?;
        instances += 1;
        if generated {
            let auto = min_initial_charge(&g, capacity, t, Algorithm::Auto).unwrap();
            if auto.values() != beta.values() {
                mismatches += 1;
            }
        }
        for s in 0..g.n() {
            pairs += 1;
            if beta.charge(s) != oracle_min_initial(&g, capacity, s, t).unwrap() {
                mismatches += 1;
            }
        }
        // the linear scan over b, through the forward solver
        if instances % 10 == 0 {
            for s in 0..g.n() {
                let scan = (0..=capacity.get())
                    .find(|&b| {
                        let r = single_source(&g, BatteryConfig::new(capacity.get(), b).unwrap(), s, Algorithm::BellmanFord);
                        r.is_ok_and(|r| r.energy(t).is_finite())
                    })
                    .map_or(Energy::PosInf, Energy::Finite);
                scanned += 1;
                if scan != beta.charge(s) {
                    mismatches += 1;
                }
            }
        }
    }
    ensure(
        mismatches == 0,
        format!("{instances} instances, {pairs} source/target pairs, {scanned} also by linear scan, {mismatches} mismatches"),
    )
}

fn algebra() -> Verdict {
    let f = Energy::Finite;
    for b in 1..=1_000 {
        let c = cap(b);
        if c.oplus(f(b), c.oplus(f(b), f(-b))) != f(b) || c.oplus(c.oplus(f(b), f(b)), f(-b)) != Energy::PosInf {
            return Err(format!("first identity pair fails at B={b}"));
        }
    }
    for b in 2..=1_000 {
        let c = cap(b);
        if c.oplus(c.oplus(f(-1), f(-2)), f(2)) != f(2) || c.oplus(f(-1), c.oplus(f(-2), f(2))) != f(0) {
            return Err(format!("second identity pair fails at B={b}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let draw = |rng: &mut ChaCha8Rng, b: i64| {
        if rng.random_ratio(1, 20) {
            Energy::PosInf
        } else {
            f(rng.random_range(-b..=b))
        }
    };
    let mut violations = 0u32;
    for _ in 0..1_000_000 {
        let b = rng.random_range(0..=64);
        let c = cap(b);
        let (x, y, z) = (draw(&mut rng, b), draw(&mut rng, b), draw(&mut rng, b));
        let xy = c.oplus(x, y);
        if let (Energy::Finite(a), Energy::Finite(d)) = (x, y) {
            if xy < a + d {
                violations += 1;
            }
        }
        let (lo, hi) = if y <= z { (y, z) } else { (z, y) };
        if c.oplus(x, lo) > c.oplus(x, hi) {
            violations += 1;
        }
    }
    ensure(
        violations == 0,
        format!("identity pairs hold for B up to 1000; 10^6 triples, {violations} violations"),
    )
}

fn monotonicity() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut capacity_violations = 0u32;
    for _ in 0..1_000 {
        let inst = medium_instance(&mut rng, 40);
        let g = &inst.graph;
        let s = rng.random_range(0..g.n());
        let lo = e_bellman_ford(g, inst.capacity, s).unwrap();
        let bigger = cap(inst.capacity.get() + rng.random_range(0..=inst.capacity.get()));
        let hi = e_bellman_ford(g, bigger, s).unwrap();
        if lo.energies().iter().zip(hi.energies()).any(|(d, d2)| d2 > d) {
            capacity_violations += 1;
        }
    }

    // one downhill arc of cost -2 with B = 2
    let g = Graph::from_triples(2, &[(0, 1, -2)]).unwrap();
    let brute = |b| oracle_costs_from(&g, BatteryConfig::new(2, b).unwrap(), 0).unwrap()[1];
    let solved = |b| single_source(&g, BatteryConfig::new(2, b).unwrap(), 0, Algorithm::Auto).unwrap().energy(1);
    let witness = brute(0) == Energy::Finite(-2) && brute(2) == Energy::ZERO && solved(0) == brute(0) && solved(2) == brute(2);

    let mut below_standard = 0u32;
    for _ in 0..1_000 {
        let inst = medium_instance(&mut rng, 40);
        let g = &inst.graph;
        let s = rng.random_range(0..g.n());
        let d = e_bellman_ford(g, inst.capacity, s).unwrap();
        let std = standard_distances(g, s).unwrap();
        for (e, sd) in d.energies().iter().zip(&std) {
            if let (Energy::Finite(k), Some(sd)) = (e, sd) {
                if (*k as i128) < *sd {
                    below_standard += 1;
                }
            }
        }
    }
    ensure(
        capacity_violations == 0 && witness && below_standard == 0,
        format!(
            "capacity: {capacity_violations}/1000 violations; c=-2 witness delta_(2,0)=-2 < delta_(2,2)=0: {witness}; \
             below standard distance: {below_standard} labels over 1000 instances"
        ),
    )
}

fn structural_witness() -> Verdict {
    let w = verified_stored_witness().map_err(|e| e.to_string())?;
    if w.graph.n() > 6 || w.report.has_tree() {
        return Err(format!("stored witness fails: {:?}", w.report));
    }
    for s in 0..w.graph.n() {
        let r = e_bellman_ford(&w.graph, w.capacity, s).map_err(|e| e.to_string())?;
        verify_fixpoint(&w.graph, &r).map_err(|e| format!("source {s}: {e}"))?;
        for v in 0..w.graph.n() {
            if let Some(p) = r.path_to(v) {
                if path_energetic_cost(&p, &w.graph, w.capacity) != r.energy(v) {
                    return Err(format!("tree path {s} -> {v} does not replay"));
                }
            } else if r.energy(v).is_finite() {
                return Err(format!("no tree path {s} -> {v}"));
            }
        }
    }
    let found = find_no_target_tree_witness(5).map_err(|e| e.to_string())?;
    let recheck = check_target_trees(&found.graph, found.capacity, found.target).unwrap();
    ensure(
        !recheck.has_tree(),
        format!(
            "stored {}-vertex instance: {} target-tree assignments all fail, every source has a replaying tree; \
             search found a {}-vertex instance",
            w.graph.n(),
            w.report.assignments,
            found.graph.n()
        ),
    )
}

fn median(reps: usize, mut run: impl FnMut()) -> f64 {
    let mut t: Vec<f64> = (0..reps)
        .map(|_| {
            let start = Instant::now();
            run();
            start.elapsed().as_secs_f64()
        })
        .collect();
    t.sort_by(f64::total_cmp);
    t[reps / 2]
}

fn performance() -> Verdict {
    let big_b: i64 = 1_000_000_000_000;
    let uniform = generate(&GeneratorSpec {
        potential_range: 1000,
        reduced_cost_range: 1000,
        ..GeneratorSpec::new(100_000, 400_000, 1_000_000, 8)
    })
    .unwrap();
    let start = Instant::now();
    let p = compute_potential(&uniform.graph).unwrap();
    let r = e_dijkstra(&uniform.graph, &p, uniform.capacity, 0).unwrap();
    let uniform_secs = start.elapsed().as_secs_f64();
    let reached = r.energies().iter().filter(|e| e.is_finite()).count();

    let mut ratios = Vec::new();
    let mut ring_dijkstra = 0.0;
    for (n, reps) in [(1_000, 5), (10_000, 3), (100_000, 1)] {
        let inst = generate(&GeneratorSpec {
            potential_range: 1000,
            reduced_cost_range: 1000,
            topology: Topology::Ring { span: 2 },
            ..GeneratorSpec::new(n, 4 * n, big_b, 8)
        })
        .unwrap();
        let p = compute_potential(&inst.graph).unwrap();
        let bf = median(reps, || {
            e_bellman_ford(&inst.graph, inst.capacity, 0).unwrap();
        });
        let dj = median(reps.max(3), || {
            e_dijkstra(&inst.graph, &p, inst.capacity, 0).unwrap();
        });
        ring_dijkstra = dj;
        ratios.push(bf / dj);
    }
    let grows = ratios.windows(2).all(|w| w[1] > w[0]);
    ensure(
        uniform_secs < 5.0 && ring_dijkstra < 5.0 && grows,
        format!(
            "n=1e5 m=4e5: potential + e-Dijkstra {uniform_secs:.3}s ({reached} reached), ring e-Dijkstra {ring_dijkstra:.3}s; \
             e-BF/e-Dijkstra ratio at n=1e3,1e4,1e5: {:.1}, {:.1}, {:.1}",
            ratios[0], ratios[1], ratios[2]
        ),
    )
}

fn io_round_trip() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0u32;
    for i in 0..1_000 {
        let n = rng.random_range(0..=60);
        let b = rng.random_range(1..=1_000_000);
        let mut graph = if n >= 2 {
            let m = rng.random_range(0..=(3 * n).min(n * (n - 1)));
            generate(&GeneratorSpec::new(n, m, b, rng.random())).unwrap().graph
        } else {
            Graph::from_triples(n, &[]).unwrap()
        };
        if i % 4 == 0 && n >= 1 {
            // raw costs outside [-B, B], self-loops and parallel arcs
            let mut arcs = graph.arcs().to_vec();
            for _ in 0..rng.random_range(1..=5) {
                arcs.push(Arc::new(rng.random_range(0..n), rng.random_range(0..n), rng.random_range(-5 * b..=5 * b)));
            }
            graph = Graph::new(n, arcs).unwrap();
        }
        let file = ProblemFile {
            battery: rng.random_bool(0.8).then(|| BatteryConfig::new(b, rng.random_range(0..=b)).unwrap()),
            source: (n > 0 && rng.random_bool(0.5)).then(|| rng.random_range(0..n)),
            target: (n > 0 && rng.random_bool(0.5)).then(|| rng.random_range(0..n)),
            ..ProblemFile::new(graph)
        };
        let text = serialize_problem(&file);
        match parse_problem(&text) {
            Ok(back) if back == file && serialize_problem(&back) == text => {}
            _ => failures += 1,
        }
    }
    ensure(failures == 0, format!("1000 problem files, {failures} failures"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("algorithm agreement", algorithm_agreement),
        ("fixpoint certification", fixpoint_certification),
        ("minimum initial charge cross-check", beta_cross_check),
        ("non-associativity and algebra", algebra),
        ("monotonicity suites", monotonicity),
        ("structural witness", structural_witness),
        ("performance sanity", performance),
        ("I/O round-trip", io_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match verdict {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {} {name}: {tag} [{secs:.1}s] {detail}", i + 1);
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}

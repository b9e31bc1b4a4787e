//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use linepat::random::{self, HULL_CASES};
use linepat::verify::{self, check_no_5gon, check_rrl, check_rrl_set, check_transform_invariance, compare_engines};
use linepat_core::geometry::{dist_product, intersect, orientation, Orientation};
use linepat_core::lattice::{self, fibonacci_triangle, generate, pentagon_counterexample};
use linepat_core::rational::{int, ratio};
use linepat_core::walk::{d_sign_changes, enumerate_faces};
use linepat_core::{origin_region, CoeffPoint, DSide, EuclidPoint, LatticeSpec, PointSet, Subdivision};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, secs: u64) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(secs), || format!("took {elapsed:.1?}, budget {secs} s"))
}

fn cp(a: i64, b: i64) -> CoeffPoint {
    CoeffPoint::from_ints(a, b).unwrap()
}

// (n, triangles, quadrilaterals)
const FROZEN_GRID_CENSUS: [(u32, usize, usize); 4] = [(1, 12, 1), (2, 92, 61), (3, 364, 289), (4, 988, 893)];

fn grid_census() -> Outcome {
    let start = Instant::now();
    for (n, tri, quad) in FROZEN_GRID_CENSUS {
        let s = lattice::grid(n);
        ensure(s.len() == ((2 * n + 1) * (2 * n + 1) - 1) as usize, || format!("grid {n} has {} points", s.len()))?;
        let census = Subdivision::build(&s).census();
        ensure(census.keys().all(|k| *k == 3 || *k == 4), || format!("grid {n}: {census:?}"))?;
        let frozen = BTreeMap::from([(3, tri), (4, quad)]);
        ensure(census == frozen, || format!("grid {n}: {census:?} differs from frozen {frozen:?}"))?;
    }
    within(start.elapsed(), 30)?;
    Ok(format!("grids 1..4 only triangles and quadrilaterals, counts frozen ({:.1?})", start.elapsed()))
}

fn random_lattices() -> Outcome {
    let start = Instant::now();
    let mut rng = random::rng(random::DEFAULT_SEED);
    let specs: Vec<LatticeSpec> = (0..50).map(|_| random::lattice_spec(&mut rng)).collect();
    let degenerate = specs.iter().filter(|s| s.n == 0 || s.m == 0).count();
    let covering = specs.iter().filter(|s| generate(s).len() as u32 + 1 == (s.n + 1) * (s.m + 1)).count();
    let fractional = specs.iter().filter(|s| !s.dx.is_integer() || !s.a.is_integer()).count();
    ensure(degenerate > 0 && covering > 0 && fractional > 0, || {
        format!("sample lacks coverage: {degenerate} degenerate, {covering} covering, {fractional} fractional")
    })?;
    for spec in &specs {
        for r in [check_no_5gon(spec), check_rrl(spec)] {
            ensure(r.passed, || format!("{} fails {}: {:?}", spec.label(), r.claim, r.witness))?;
        }
    }
    within(start.elapsed(), 60)?;
    Ok(format!(
        "50 lattices ({degenerate} degenerate, {covering} around the origin) pass no-5gon and RRL ({:.1?})",
        start.elapsed()
    ))
}

fn pentagon() -> Outcome {
    let s = pentagon_counterexample();
    ensure(s.len() == 9, || format!("{} points", s.len()))?;
    let census = Subdivision::build(&s).census();
    ensure(census.contains_key(&5), || format!("census {census:?}"))?;
    Ok(format!("census {census:?}"))
}

/// Integer points of the closed triangle, by sign tests over the bounding box.
fn triangle_points(v: &[(i64, i64); 3]) -> BTreeSet<(i64, i64)> {
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let (x0, x1) = (v.iter().map(|p| p.0).min().unwrap(), v.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (v.iter().map(|p| p.1).min().unwrap(), v.iter().map(|p| p.1).max().unwrap());
    let mut out = BTreeSet::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let s = [cross(v[0], v[1], (x, y)), cross(v[1], v[2], (x, y)), cross(v[2], v[0], (x, y))];
            if ((s.iter().all(|&c| c >= 0)) || s.iter().all(|&c| c <= 0)) && (x, y) != (0, 0) {
                out.insert((x, y));
            }
        }
    }
    out
}

fn fibonacci_family() -> Outcome {
    // F_1 = F_2 = 1
    let mut fib = vec![0i64, 1, 1];
    while fib.len() < 12 {
        let k = fib.len();
        fib.push(fib[k - 1] + fib[k - 2]);
    }
    let mut maxima = Vec::new();
    for n in 2..=4u32 {
        let k = n as usize;
        let apex = (-3 + fib[2 * k + 1], -1 + fib[2 * k]);
        let expected = triangle_points(&[(-3, -1), (-2, -1), apex]);
        let s = fibonacci_triangle(n).map_err(|e| e.to_string())?;
        let got: BTreeSet<(i64, i64)> = s
            .iter()
            .map(|p| (p.a().to_integer().try_into().unwrap(), p.b().to_integer().try_into().unwrap()))
            .collect();
        ensure(got == expected, || format!("n={n}: {got:?} vs {expected:?}"))?;
        let max = Subdivision::build(&s).bounded_faces().iter().map(|f| f.side_count).max().unwrap_or(0);
        ensure(max == k + 2, || format!("n={n}: largest face has {max} sides"))?;
        maxima.push(max);
    }
    ensure(fib[5] == 5 && fib[9] == 34 && fib[8] == 21, || "fibonacci table".into())?;

    let s2 = fibonacci_triangle(2).unwrap();
    let want: BTreeSet<CoeffPoint> = [cp(-3, -1), cp(-2, -1), cp(-1, 0), cp(2, 2)].into();
    ensure(s2.iter().cloned().collect::<BTreeSet<_>>() == want, || format!("n=2 set {:?}", s2.points()))?;
    // an independent look at the walks: some face has three equal consecutive D
    let run = enumerate_faces(&s2).unwrap().into_iter().find(|w| {
        let d = w.d_values();
        let n = d.len();
        !w.contains_origin
            && (0..n).any(|k| d[k] == DSide::R && d[(k + 1) % n] == DSide::R && d[(k + 2) % n] == DSide::R)
    });
    ensure(run.is_some(), || "no face with three consecutive R".into())?;
    let r = check_rrl_set(&s2);
    let note = r.witness.as_ref().map(|w| w.note.clone()).unwrap_or_default();
    ensure(!r.passed && note == "D_2 = D_3 = D_4 = R", || format!("rrl report {r:?}"))?;
    Ok(format!("max sides {maxima:?} for n = 2, 3, 4; n=2 witness {note}"))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn coprime() -> Outcome {
    let mut seen = Vec::new();
    for n in 1..=4i64 {
        let by_gcd = (-n..=n)
            .flat_map(|a| (-n..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| (a, b) != (0, 0) && gcd(a, b) == 1)
            .count();
        let by_faces = Subdivision::build(&lattice::grid(n as u32)).two_sided_unbounded_count();
        ensure(by_gcd == by_faces, || format!("n={n}: gcd count {by_gcd}, two-sided faces {by_faces}"))?;
        let lib = verify::check_coprime(n as u32);
        ensure(lib.passed, || format!("n={n}: {lib:?}"))?;
        seen.push(by_faces);
    }
    ensure(seen[0] == 8 && seen[3] == 48, || format!("spot values {seen:?}"))?;
    Ok(format!("two-sided unbounded faces {seen:?} equal the coprime counts"))
}

fn engines() -> Outcome {
    let start = Instant::now();
    let mut rng = random::rng(random::DEFAULT_SEED);
    for i in 0..200 {
        let s = random::point_set(&mut rng, 1, 7);
        let r = compare_engines(&s);
        ensure(r.passed, || format!("set {i} {:?}: {:?}", s.points(), r.witness))?;
    }
    let mut cases = BTreeSet::new();
    for case in HULL_CASES {
        for _ in 0..10 {
            let s = random::hull_case_set(&mut rng, case, 7);
            cases.insert(origin_region(&s).unwrap().case);
            let r = compare_engines(&s);
            ensure(r.passed, || format!("{case:?} {:?}: {:?}", s.points(), r.witness))?;
        }
    }
    ensure(cases.len() == 6, || format!("hull cases covered: {cases:?}"))?;
    for s in [pentagon_counterexample(), lattice::grid(2)] {
        let r = compare_engines(&s);
        ensure(r.passed, || format!("{}: {:?}", s.label(), r.witness))?;
    }
    within(start.elapsed(), 60)?;
    Ok(format!("200 random sets and 60 hull-case sets agree ({:.1?})", start.elapsed()))
}

fn walk_invariants(s: &PointSet) -> Result<usize, String> {
    let walks = enumerate_faces(s).map_err(|e| e.to_string())?;
    for w in &walks {
        let d = w.d_values();
        let changes = d_sign_changes(&d);
        if w.contains_origin {
            ensure(changes == 0 && d.iter().all(|&x| x == DSide::R), || format!("origin face D {d:?}"))?;
        } else {
            ensure(changes == 2, || format!("face with D {d:?}"))?;
        }
        let n = w.len();
        for k in 0..n {
            let (p, dp) = &w.sides[k];
            let (q, dq) = &w.sides[(k + 1) % n];
            let (ux, uy) = (q.a() - p.a(), q.b() - p.b());
            let len = &ux * &ux + &uy * &uy;
            for z in s.iter().filter(|z| *z != p && *z != q) {
                let (zx, zy) = (z.a() - p.a(), z.b() - p.b());
                if &ux * &zy != &uy * &zx {
                    continue;
                }
                let t = &ux * &zx + &uy * &zy;
                let inside = t > int(0) && t < len;
                ensure(inside == (dp == dq), || format!("{z} against side pair {p} {dp}, {q} {dq}"))?;
            }
        }
    }
    Ok(walks.len())
}

fn invariants() -> Outcome {
    let mut rng = random::rng(random::DEFAULT_SEED ^ 0x77);
    let mut faces = 0;
    for _ in 0..100 {
        faces += walk_invariants(&random::point_set(&mut rng, 3, 8))?;
    }
    for s in [lattice::grid(3), pentagon_counterexample(), fibonacci_triangle(4).unwrap()] {
        faces += walk_invariants(&s)?;
    }
    for _ in 0..100 {
        let p = random::coeff_point(&mut rng, 9, 7);
        ensure(dist_product(&p) == int(1), || format!("distance product at {p}"))?;
        // independent form: |P|^2 * (1/|P|)^2 via the foot of the perpendicular
        let foot = p.foot();
        let d2 = &foot.x * &foot.x + &foot.y * &foot.y;
        ensure(p.norm_sq() * d2 == int(1), || format!("foot distance at {p}"))?;
    }
    let mut duals = 0;
    for _ in 0..200 {
        let (p, q) = (random::coeff_point(&mut rng, 3, 4), random::coeff_point(&mut rng, 3, 4));
        if orientation(&p, &q) == Orientation::On {
            continue;
        }
        let x: EuclidPoint = intersect(&p, &q).unwrap().unwrap();
        for t in [ratio(1, 7), ratio(1, 2), ratio(5, 6)] {
            let za = p.a() + &t * (q.a() - p.a());
            let zb = p.b() + &t * (q.b() - p.b());
            ensure(za * &x.x + zb * &x.y == int(1), || format!("duality on {p}{q}"))?;
            duals += 1;
        }
    }
    let spec = LatticeSpec::from_ints(1, 1, 1, 1, 2, 2).unwrap();
    for i in 0..20 {
        let m = random::transform(&mut rng);
        let r = check_transform_invariance(&spec, &m);
        ensure(r.passed, || format!("transform {i}: {:?}", r.witness))?;
    }
    Ok(format!("{faces} walked faces, 100 distance products, {duals} dual incidences, 20 transforms"))
}

fn run_bin(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_linepat")).args(args).output().map_err(|e| e.to_string())?;
    match o.status.code() {
        Some(0) | Some(1) => Ok(o.stdout),
        c => Err(format!("{args:?} exited with {c:?}: {}", String::from_utf8_lossy(&o.stderr))),
    }
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("linepat-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| dir.join(name).to_str().unwrap().to_string();
    run_bin(&["gen", "grid", "4", "-o", &path("grid4.pts")])?;
    run_bin(&["gen", "pentagon", "-o", &path("pentagon.pts")])?;
    let commands: Vec<Vec<String>> = vec![
        vec!["render".into(), path("grid4.pts")],
        vec!["render".into(), path("pentagon.pts"), "--shade".into(), "5:#cccccc".into(), "--labels".into()],
        vec![
            "verify".into(),
            "all".into(),
            "--grid-max".into(),
            "2".into(),
            "--trials".into(),
            "20".into(),
            "--seed".into(),
            "4242".into(),
        ],
        vec![
            "verify".into(),
            "engines".into(),
            "--trials".into(),
            "50".into(),
            "--seed".into(),
            "7".into(),
            "--format".into(),
            "json".into(),
        ],
    ];
    for args in &commands {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_bin(&args)?;
        let second = run_bin(&args)?;
        ensure(!first.is_empty() && first == second, || format!("{args:?} differs between runs"))?;
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{} commands byte-identical across two runs", commands.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("grid census", grid_census),
        ("random rectangular lattices", random_lattices),
        ("pentagon array", pentagon),
        ("fibonacci triangles", fibonacci_family),
        ("two-sided regions and coprime pairs", coprime),
        ("engine equivalence", engines),
        ("invariant suite", invariants),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Executable checks of the arrangement claims. Every check builds the
//! brute-force subdivision and, where it applies, the cell walk, and reports
//! PASS/FAIL with a witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use linepat_core::geometry::apply_transform;
use linepat_core::lattice::{self, coprime_count, fibonacci_triangle, generate, pentagon_counterexample};
use linepat_core::{
    enumerate_faces, origin_region, CoeffPoint, DSide, EuclidPoint, Face, FaceWalk, LatticeSpec, PointSet, Subdivision,
    Transform2,
};
use serde::Serialize;

use crate::random;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub note: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sides: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
}

impl Witness {
    pub fn note(note: impl Into<String>) -> Self {
        Witness { note: note.into(), sides: Vec::new(), vertices: Vec::new(), points: Vec::new() }
    }

    pub fn walk(note: impl Into<String>, w: &FaceWalk) -> Self {
        Witness {
            sides: w.sides.iter().map(|(p, d)| format!("{p} {d}")).collect(),
            vertices: w.vertices.iter().map(ToString::to_string).collect(),
            ..Witness::note(note)
        }
    }

    pub fn face(note: impl Into<String>, f: &Face) -> Self {
        Witness {
            sides: f.side_lines.iter().map(ToString::to_string).collect(),
            vertices: f.corners.iter().map(ToString::to_string).collect(),
            ..Witness::note(note)
        }
    }

    pub fn with_points(mut self, s: &PointSet) -> Self {
        self.points = s.iter().map(ToString::to_string).collect();
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Bounded faces by side count.
    pub histogram: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Stats {
    fn histogram(h: BTreeMap<usize, usize>) -> Self {
        Stats { histogram: h, ..Stats::default() }
    }

    fn count(mut self, key: &str, v: impl TryInto<u64>) -> Self {
        self.counts.insert(key.to_string(), v.try_into().unwrap_or(u64::MAX));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub stats: Stats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn pass(claim: impl Into<String>, stats: Stats, witness: Option<Witness>) -> Self {
        VerificationReport { claim: claim.into(), passed: true, witness, stats, seed: None }
    }

    pub fn fail(claim: impl Into<String>, stats: Stats, witness: Witness) -> Self {
        VerificationReport { claim: claim.into(), passed: false, witness: Some(witness), stats, seed: None }
    }

    fn decide(claim: &str, stats: Stats, failure: Option<Witness>) -> Self {
        match failure {
            Some(w) => VerificationReport::fail(claim, stats, w),
            None => VerificationReport::pass(claim, stats, None),
        }
    }

    fn named(mut self, id: String) -> Self {
        self.claim = id;
        self
    }
}

fn over_four(f: &Face) -> bool {
    f.side_count > 4
}

pub fn check_no_5gon(spec: &LatticeSpec) -> VerificationReport {
    check_no_5gon_set(&generate(spec))
}

/// Both engines and the origin cell must stay within four sides.
pub fn check_no_5gon_set(s: &PointSet) -> VerificationReport {
    let claim = "no5gon";
    let sub = Subdivision::build(s);
    let stats = Stats::histogram(sub.census());
    if let Some(f) = sub.bounded_faces().into_iter().find(|f| over_four(f)) {
        let w = Witness::face(format!("subdivision face with {} sides", f.side_count), f);
        return VerificationReport::fail(claim, stats, w.with_points(s));
    }
    let walks = match enumerate_faces(s) {
        Ok(w) => w,
        Err(e) => return VerificationReport::fail(claim, stats, Witness::note(format!("cell walk failed: {e}"))),
    };
    if let Some(w) = walks.iter().find(|w| w.len() > 4) {
        let w = Witness::walk(format!("walked face with {} sides", w.len()), w);
        return VerificationReport::fail(claim, stats, w.with_points(s));
    }
    if !s.is_empty() {
        let region = origin_region(s).expect("nonempty set");
        if region.sides.len() > 4 {
            let mut w = Witness::note(format!("origin cell has {} sides", region.sides.len()));
            w.sides = region.sides.iter().map(ToString::to_string).collect();
            return VerificationReport::fail(claim, stats, w);
        }
    }
    VerificationReport::pass(claim, stats.count("faces", walks.len()), None)
}

pub fn check_rrl(spec: &LatticeSpec) -> VerificationReport {
    check_rrl_set(&generate(spec))
}

/// Position `k` such that `d[k] = d[k+1] = d[k+2]` cyclically.
fn equal_run(d: &[DSide]) -> Option<usize> {
    let n = d.len();
    (0..n).find(|&k| d[k] == d[(k + 1) % n] && d[k] == d[(k + 2) % n])
}

/// No bounded face away from the origin has three consecutive equal `D`.
pub fn check_rrl_set(s: &PointSet) -> VerificationReport {
    let claim = "rrl";
    let sub = Subdivision::build(s);
    let stats = Stats::histogram(sub.census());
    let walks = match enumerate_faces(s) {
        Ok(w) => w,
        Err(e) => return VerificationReport::fail(claim, stats, Witness::note(format!("cell walk failed: {e}"))),
    };
    for w in walks.iter().filter(|w| !w.contains_origin) {
        if let Some(k) = equal_run(&w.d_values()) {
            // list the face so the run occupies positions 2, 3, 4
            let n = w.len();
            let start = (k + n - 1) % n;
            let mut shown = w.clone();
            shown.sides.rotate_left(start);
            shown.vertices.rotate_left(start);
            let d = shown.sides[1].1;
            let note = format!("D_2 = D_3 = D_4 = {d}");
            return VerificationReport::fail(claim, stats, Witness::walk(note, &shown).with_points(s));
        }
    }
    VerificationReport::pass(claim, stats.count("faces", walks.len()), None)
}

fn max_side_count(sub: &Subdivision) -> usize {
    sub.bounded_faces().iter().map(|f| f.side_count).max().unwrap_or(0)
}

/// The 3x3 pentagon array and the Fibonacci triangles for n = 2, 3, 4.
pub fn check_counterexamples() -> VerificationReport {
    let claim = "counterexamples";
    let pentagon = pentagon_counterexample();
    let sub = Subdivision::build(&pentagon);
    let mut stats = Stats::histogram(sub.census());
    let five = sub.bounded_faces().into_iter().find(|f| f.side_count == 5).cloned();
    let fives = stats.histogram.get(&5).copied().unwrap_or(0);
    stats = stats.count("pentagon-5gons", fives);
    let mut failure = None;
    if five.is_none() {
        failure = Some(Witness::note("pentagon array has no 5-sided face").with_points(&pentagon));
    }
    for n in 2..=4u32 {
        let set = fibonacci_triangle(n).expect("small n");
        let fib = Subdivision::build(&set);
        let max = max_side_count(&fib);
        stats = stats.count(&format!("fibonacci-{n}-max"), max);
        if max != n as usize + 2 && failure.is_none() {
            let note = format!("fibonacci triangle {n}: largest face has {max} sides, expected {}", n + 2);
            failure = Some(Witness::note(note).with_points(&set));
        }
    }
    match failure {
        Some(w) => VerificationReport::fail(claim, stats, w),
        None => {
            let w = five.map(|f| Witness::face("pentagon", &f));
            VerificationReport::pass(claim, stats, w)
        }
    }
}

/// Two-sided unbounded faces of the grid `[-n, n]^2` against the number of
/// primitive grid vectors.
pub fn check_coprime(n: u32) -> VerificationReport {
    let sub = Subdivision::build(&lattice::grid(n));
    let two = sub.two_sided_unbounded_count() as u64;
    let cp = coprime_count(n);
    let stats = Stats::histogram(sub.census()).count("two-sided", two).count("coprime", cp);
    let failure = (two != cp).then(|| Witness::note(format!("{two} two-sided unbounded faces, {cp} coprime pairs")));
    VerificationReport::decide("coprime", stats, failure)
}

pub fn check_transform_invariance(spec: &LatticeSpec, m: &Transform2) -> VerificationReport {
    check_transform_invariance_set(&generate(spec), m)
}

pub fn check_transform_invariance_set(s: &PointSet, m: &Transform2) -> VerificationReport {
    let claim = "transform";
    let before = Subdivision::build(s).census();
    let ms = PointSet::new("image", apply_transform(m, s.points()));
    let sub = Subdivision::build(&ms);
    let after = sub.census();
    let [m11, m12, m21, m22] = m.entries();
    let matrix = format!("[[{m11}, {m12}], [{m21}, {m22}]]");
    let mut stats = Stats::histogram(after.clone());
    for (k, v) in &before {
        stats = stats.count(&format!("before-{k}"), *v);
    }
    if let Some(f) = sub.bounded_faces().into_iter().find(|f| over_four(f)) {
        let w = Witness::face(format!("image under {matrix} has a {}-sided face", f.side_count), f);
        return VerificationReport::fail(claim, stats, w);
    }
    let failure = (before != after)
        .then(|| Witness::note(format!("histogram changed under {matrix}: {before:?} -> {after:?}")).with_points(s));
    VerificationReport::decide(claim, stats, failure)
}

type FaceKey = (Vec<EuclidPoint>, Vec<CoeffPoint>, bool);

fn rotate_min(corners: &[EuclidPoint], lines: &[CoeffPoint]) -> (Vec<EuclidPoint>, Vec<CoeffPoint>) {
    let start = (0..corners.len()).min_by(|&i, &j| corners[i].cmp(&corners[j])).unwrap_or(0);
    let mut c = corners.to_vec();
    let mut l = lines.to_vec();
    c.rotate_left(start);
    l.rotate_left(start);
    (c, l)
}

fn key_witness(note: &str, k: &FaceKey) -> Witness {
    let mut w = Witness::note(format!("{note}{}", if k.2 { " (contains origin)" } else { "" }));
    w.sides = k.1.iter().map(ToString::to_string).collect();
    w.vertices = k.0.iter().map(ToString::to_string).collect();
    w
}

/// Cell walk and subdivision must report the same bounded faces, and the
/// hull-based origin cell must match the subdivision's face around `O`.
pub fn compare_engines(s: &PointSet) -> VerificationReport {
    let claim = "engines";
    let sub = Subdivision::build(s);
    let mut stats = Stats::histogram(sub.census());
    let walks = match enumerate_faces(s) {
        Ok(w) => w,
        Err(e) => {
            let w = Witness::note(format!("cell walk failed: {e}")).with_points(s);
            return VerificationReport::fail(claim, stats, w);
        }
    };
    stats = stats.count("faces", walks.len());
    let walked: BTreeSet<FaceKey> = walks
        .iter()
        .map(|w| {
            let lines: Vec<CoeffPoint> = w.sides.iter().map(|(p, _)| p.clone()).collect();
            let (c, l) = rotate_min(&w.vertices, &lines);
            (c, l, w.contains_origin)
        })
        .collect();
    let oracle: BTreeSet<FaceKey> = sub
        .bounded_faces()
        .into_iter()
        .map(|f| {
            let (c, l) = rotate_min(&f.corners, &f.side_lines);
            (c, l, f.contains_origin())
        })
        .collect();
    if let Some(k) = walked.difference(&oracle).next() {
        return VerificationReport::fail(
            claim,
            stats,
            key_witness("walked face missing from subdivision", k).with_points(s),
        );
    }
    if let Some(k) = oracle.difference(&walked).next() {
        return VerificationReport::fail(claim, stats, key_witness("subdivision face never walked", k).with_points(s));
    }
    if s.is_empty() {
        return VerificationReport::pass(claim, stats, None);
    }
    let region = origin_region(s).expect("nonempty set");
    let face = sub.face_containing(&EuclidPoint::origin()).expect("lines avoid the origin");
    let mismatch = |why: &str| {
        let mut w = Witness::note(format!("origin cell ({:?}): {why}", region.case)).with_points(s);
        w.sides = region.sides.iter().map(ToString::to_string).collect();
        VerificationReport::fail(claim, stats.clone(), w)
    };
    let mine: BTreeSet<_> = region.sides.iter().collect();
    let theirs: BTreeSet<_> = face.side_lines.iter().collect();
    if mine != theirs {
        return mismatch("side lines differ from the subdivision face containing O");
    }
    if region.bounded != face.bounded {
        return mismatch("boundedness differs");
    }
    if region.bounded {
        let (_, l) = rotate_min(&face.corners, &face.side_lines);
        let start = region.sides.iter().position(|p| *p == l[0]).unwrap_or(0);
        let mut r = region.sides.clone();
        r.rotate_left(start);
        if r != l {
            return mismatch("clockwise order differs");
        }
    }
    VerificationReport::pass(claim, stats, None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Claim {
    All,
    No5gon,
    Rrl,
    Counterexamples,
    Coprime,
    Transform,
    Engines,
}

impl Claim {
    pub const IDS: [&'static str; 7] = ["all", "no5gon", "rrl", "counterexamples", "coprime", "transform", "engines"];
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Claim::All,
            "no5gon" => Claim::No5gon,
            "rrl" => Claim::Rrl,
            "counterexamples" => Claim::Counterexamples,
            "coprime" => Claim::Coprime,
            "transform" => Claim::Transform,
            "engines" => Claim::Engines,
            _ => return Err(format!("unknown claim {s:?}; expected one of {}", Claim::IDS.join(", "))),
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Claim::IDS[i])
    }
}

#[derive(Debug, Clone)]
pub enum Target {
    /// Built-in grids and seeded random inputs.
    Default,
    Lattice(Box<LatticeSpec>),
    Set(PointSet),
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub grid_max: u32,
    pub lattices: usize,
    pub transforms: usize,
    pub engine_sets: usize,
    /// Points per random engine set, at most.
    pub engine_set_size: usize,
    pub timing: bool,
    pub target: Target,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: random::DEFAULT_SEED,
            grid_max: 4,
            lattices: 50,
            transforms: 20,
            engine_sets: 200,
            engine_set_size: 7,
            timing: false,
            target: Target::Default,
        }
    }
}

type Job = Box<dyn FnOnce() -> VerificationReport>;

fn jobs_for(claim: Claim, cfg: &VerifyConfig) -> Vec<(String, bool, Job)> {
    let mut jobs: Vec<(String, bool, Job)> = Vec::new();
    let seed = cfg.seed;
    match claim {
        Claim::All => {
            for c in
                [Claim::Coprime, Claim::Counterexamples, Claim::Engines, Claim::No5gon, Claim::Rrl, Claim::Transform]
            {
                jobs.extend(jobs_for(c, cfg));
            }
        }
        Claim::No5gon | Claim::Rrl => {
            let check: fn(&PointSet) -> VerificationReport =
                if claim == Claim::No5gon { check_no_5gon_set } else { check_rrl_set };
            match &cfg.target {
                Target::Lattice(spec) => {
                    let s = generate(spec);
                    jobs.push((format!("{claim}/lattice"), false, Box::new(move || check(&s))));
                }
                Target::Set(s) => {
                    let s = s.clone();
                    jobs.push((format!("{claim}/input"), false, Box::new(move || check(&s))));
                }
                Target::Default => {
                    for n in 1..=cfg.grid_max {
                        jobs.push((format!("{claim}/grid-{n}"), false, Box::new(move || check(&lattice::grid(n)))));
                    }
                    let mut rng = random::rng(seed);
                    for i in 0..cfg.lattices {
                        let s = generate(&random::lattice_spec(&mut rng));
                        jobs.push((format!("{claim}/lattice-{i:03}"), true, Box::new(move || check(&s))));
                    }
                }
            }
        }
        Claim::Counterexamples => jobs.push(("counterexamples".into(), false, Box::new(check_counterexamples))),
        Claim::Coprime => {
            for n in 1..=cfg.grid_max {
                jobs.push((format!("coprime/n={n}"), false, Box::new(move || check_coprime(n))));
            }
        }
        Claim::Transform => {
            let s = match &cfg.target {
                Target::Lattice(spec) => generate(spec),
                Target::Set(s) => s.clone(),
                Target::Default => generate(&LatticeSpec::from_ints(1, 1, 1, 1, 2, 2).expect("valid lattice")),
            };
            let mut rng = random::rng(seed);
            for i in 0..cfg.transforms {
                let m = random::transform(&mut rng);
                let s = s.clone();
                jobs.push((
                    format!("transform/{i:03}"),
                    true,
                    Box::new(move || check_transform_invariance_set(&s, &m)),
                ));
            }
        }
        Claim::Engines => match &cfg.target {
            Target::Lattice(spec) => {
                let s = generate(spec);
                jobs.push(("engines/lattice".into(), false, Box::new(move || compare_engines(&s))));
            }
            Target::Set(s) => {
                let s = s.clone();
                jobs.push(("engines/input".into(), false, Box::new(move || compare_engines(&s))));
            }
            Target::Default => {
                let mut rng = random::rng(seed);
                for i in 0..cfg.engine_sets {
                    let s = random::point_set(&mut rng, 1, cfg.engine_set_size);
                    jobs.push((format!("engines/random-{i:03}"), true, Box::new(move || compare_engines(&s))));
                }
                for case in random::HULL_CASES {
                    for i in 0..3 {
                        let s = random::hull_case_set(&mut rng, case, cfg.engine_set_size);
                        jobs.push((format!("engines/hull-{case:?}-{i}"), true, Box::new(move || compare_engines(&s))));
                    }
                }
            }
        },
    }
    jobs
}

/// Runs every check behind `claim`, sorted by claim id.
pub fn run(claim: Claim, cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = jobs_for(claim, cfg)
        .into_iter()
        .map(|(id, seeded, job)| {
            let started = Instant::now();
            let mut r = job().named(id);
            if seeded {
                r.seed = Some(cfg.seed);
            }
            if cfg.timing {
                r.stats.millis = Some(started.elapsed().as_millis() as u64);
            }
            r
        })
        .collect();
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_reports_carry_witnesses() {
        let r = check_rrl_set(&fibonacci_triangle(2).unwrap());
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!(w.note, "D_2 = D_3 = D_4 = R");
        assert_eq!(w.sides.len(), 4);
    }

    #[test]
    fn claim_ids_round_trip() {
        for id in Claim::IDS {
            assert_eq!(id.parse::<Claim>().unwrap().to_string(), id);
        }
        assert!("nope".parse::<Claim>().is_err());
    }

    #[test]
    fn equal_runs_wrap() {
        use DSide::*;
        assert_eq!(equal_run(&[R, L, R, R]), Some(2));
        assert_eq!(equal_run(&[R, L, L, R]), None);
    }
}

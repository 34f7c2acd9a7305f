//! Verification harness: the brute-force oracle, parameter-grid sweeps over
//! the identity catalog, and deterministic JSON reports.
//!
//! The oracle computes sequence values strictly by term-by-term iteration of
//! the defining recurrences; it shares no code with the doubling fast path.
//! Sweeps evaluate identities with fast-path sequence values and re-verify a
//! deterministic sample of those values (default 1%) against the oracle.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use std::time::Instant;

use crate::catalog::{
    catalog, CheckOutcome, Identity, IdentityDescriptor, ParamName, ParamPoint, Singularity, Value,
};
use crate::sequences::{
    fib, gen, iterate_recurrence, lucas, FibTable, Index, SeedPair, Sequences,
};
use crate::Error;

/// Default cap on `|n|` for oracle evaluations.
pub const DEFAULT_ORACLE_WINDOW: u64 = 10_000;

/// Environment variable overriding the oracle window.
pub const ORACLE_WINDOW_ENV: &str = "FIBKIT_ORACLE_WINDOW";

/// The sequence kinds the oracle can evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    Fib,
    Lucas,
    Gen(SeedPair),
}

/// Brute-force reference evaluator: pure iteration of the defining
/// recurrences, forward for `n >= 0` and backward for `n < 0`, up to a
/// configured window.
#[derive(Clone, Debug)]
pub struct Oracle {
    window: u64,
}

impl Oracle {
    pub fn new() -> Self {
        Self { window: DEFAULT_ORACLE_WINDOW }
    }

    pub fn with_window(window: u64) -> Self {
        Self { window }
    }

    /// Window from `FIBKIT_ORACLE_WINDOW` when set and parseable, else the
    /// default.
    pub fn from_env() -> Self {
        let window = std::env::var(ORACLE_WINDOW_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_ORACLE_WINDOW);
        Self { window }
    }

    pub fn window(&self) -> u64 {
        self.window
    }

    /// The sequence value at `n`, by iteration only.
    pub fn value(&self, kind: &SequenceKind, n: Index) -> Result<BigInt, Error> {
        if n.unsigned_abs() > self.window {
            return Err(Error::WindowExceeded { n, window: self.window });
        }
        Ok(match kind {
            SequenceKind::Fib => iterate_recurrence(&BigInt::from(0), &BigInt::from(1), n),
            SequenceKind::Lucas => iterate_recurrence(&BigInt::from(2), &BigInt::from(1), n),
            SequenceKind::Gen(seed) => iterate_recurrence(seed.g0(), seed.g1(), n),
        })
    }
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

/// [`Oracle::value`] with the default window.
pub fn oracle_value(kind: &SequenceKind, n: Index) -> Result<BigInt, Error> {
    Oracle::new().value(kind, n)
}

/// The five seed pairs used by the default grids.
pub fn default_seeds() -> Vec<SeedPair> {
    vec![
        SeedPair::fibonacci(),
        SeedPair::lucas(),
        SeedPair::new(3, 7).unwrap(),
        SeedPair::new(-4, 5).unwrap(),
        SeedPair::new(1, 0).unwrap(),
    ]
}

/// Which catalog entries a sweep covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    /// Every entry except the known-failing `*_printed` regression forms.
    All,
    /// Exactly these ids (printed forms allowed).
    Ids(Vec<String>),
}

/// Inclusive parameter ranges, seeds, and identity selection for one sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    pub a_range: (i64, i64),
    pub b_range: (i64, i64),
    pub m_range: (i64, i64),
    pub n_range: (i64, i64),
    pub k_range: (u32, u32),
    pub seeds: Vec<SeedPair>,
    pub identities: Selection,
}

impl GridSpec {
    /// The default full-catalog grid: `a, b, m, n` in `[-5, 5]`, `k` in
    /// `[0, 6]`, the five default seeds, all non-printed identities.
    pub fn full_catalog() -> Self {
        Self {
            a_range: (-5, 5),
            b_range: (-5, 5),
            m_range: (-5, 5),
            n_range: (-5, 5),
            k_range: (0, 6),
            seeds: default_seeds(),
            identities: Selection::All,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        for (name, (lo, hi)) in [
            ("a", self.a_range),
            ("b", self.b_range),
            ("m", self.m_range),
            ("n", self.n_range),
        ] {
            if lo > hi {
                return Err(Error::InvalidGrid(format!("{name} range {lo}..{hi} is empty")));
            }
        }
        if self.k_range.0 > self.k_range.1 {
            return Err(Error::InvalidGrid(format!(
                "k range {}..{} is empty",
                self.k_range.0, self.k_range.1
            )));
        }
        if self.seeds.is_empty() {
            return Err(Error::InvalidGrid("no seeds".to_owned()));
        }
        if let Selection::Ids(ids) = &self.identities {
            for id in ids {
                if catalog().get(id).is_none() {
                    return Err(Error::UnknownIdentity(id.clone()));
                }
            }
        }
        Ok(())
    }

    fn range_of(&self, p: ParamName) -> (i64, i64) {
        match p {
            ParamName::A => self.a_range,
            ParamName::B => self.b_range,
            ParamName::M => self.m_range,
            ParamName::N => self.n_range,
            ParamName::K => (self.k_range.0 as i64, self.k_range.1 as i64),
        }
    }

    fn len_of(&self, p: ParamName) -> u64 {
        let (lo, hi) = self.range_of(p);
        (hi - lo + 1) as u64
    }

    /// Points a sweep evaluates for one identity: the product of the ranges
    /// of the parameters it declares, times the seed count if it reads the
    /// seed.
    pub fn points_for(&self, desc: &IdentityDescriptor) -> u64 {
        let mut points: u64 = desc.params.iter().map(|&p| self.len_of(p)).product();
        if desc.needs_seed() {
            points *= self.seeds.len() as u64;
        }
        points
    }

    fn resolve_rows(&self) -> Vec<&'static dyn Identity> {
        let cat = catalog();
        match &self.identities {
            Selection::All => cat
                .identities()
                .filter(|row| !row.descriptor().printed_form)
                .collect(),
            Selection::Ids(ids) => ids
                .iter()
                .map(|id| cat.get(id).expect("validated id"))
                .collect(),
        }
    }

    /// Span of sequence indices a sweep can touch, with slack for the
    /// summation shifts, used to size the lookup table.
    fn table_span(&self) -> (i64, i64) {
        let abs = |r: (i64, i64)| r.0.unsigned_abs().max(r.1.unsigned_abs()) as i64;
        let (a, b, m, n) = (
            abs(self.a_range),
            abs(self.b_range),
            abs(self.m_range),
            abs(self.n_range),
        );
        let k = self.k_range.1 as i64;
        let stride = m + a.max(b) + (a + b);
        // Indices beyond the table fall back to direct doubling, so the cap
        // only bounds memory, not reach.
        let reach = (n + stride * (k + 2) + m + a + b + 4).min(4096);
        (-reach, reach)
    }
}

/// Aggregated result of a sweep.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub total_points: u64,
    pub passed: u64,
    pub failed: Vec<CheckOutcome>,
    pub skipped_singular: u64,
    /// Wall-clock seconds; excluded from the determinism contract.
    pub wall_time: f64,
    pub config_echo: GridSpec,
}

impl SweepReport {
    /// `true` when no evaluated point failed.
    pub fn clean(&self) -> bool {
        self.failed.is_empty()
    }

    /// The report as a JSON document. Identical inputs produce byte-identical
    /// output except for the `wall_time` field.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Deterministic per-value audit: an FNV-1a hash of the access decides which
/// sequence evaluations get re-verified against pure iteration. A mismatch is
/// an implementation bug, not a sweep failure, and panics with detail.
struct AuditedSequences<'a, S> {
    inner: &'a S,
    /// Re-check rate in basis points (100 = 1%).
    rate_bp: u64,
    window: u64,
}

fn fnv1a(words: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for w in words {
        for byte in w.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    h
}

impl<S> AuditedSequences<'_, S> {
    fn selected(&self, tag: u64, n: i64, extra: u64) -> bool {
        self.rate_bp > 0
            && n.unsigned_abs() <= self.window
            && fnv1a(&[tag, n as u64, extra]) % 10_000 < self.rate_bp
    }
}

impl<S: Sequences> Sequences for AuditedSequences<'_, S> {
    fn fib(&self, n: Index) -> BigInt {
        let v = self.inner.fib(n);
        if self.selected(1, n, 0) {
            let want = iterate_recurrence(&BigInt::from(0), &BigInt::from(1), n);
            assert_eq!(v, want, "fast path disagrees with iteration at F({n})");
        }
        v
    }

    fn lucas(&self, n: Index) -> BigInt {
        let v = self.inner.lucas(n);
        if self.selected(2, n, 0) {
            let want = iterate_recurrence(&BigInt::from(2), &BigInt::from(1), n);
            assert_eq!(v, want, "fast path disagrees with iteration at L({n})");
        }
        v
    }

    fn gen(&self, seed: &SeedPair, n: Index) -> BigInt {
        let v = self.inner.gen(seed, n);
        if self.selected(3, n, fnv1a(&[seed.g0().bits(), seed.g1().bits()])) {
            let want = iterate_recurrence(seed.g0(), seed.g1(), n);
            assert_eq!(v, want, "fast path disagrees with iteration at G{seed}({n})");
        }
        v
    }
}

/// Grid sweep runner. Construct with a validated [`GridSpec`], optionally
/// adjust the oracle re-check rate, then [`Sweeper::run`].
pub struct Sweeper {
    spec: GridSpec,
    oracle_rate_bp: u64,
    oracle_window: u64,
}

impl Sweeper {
    pub fn new(spec: GridSpec) -> Result<Self, Error> {
        spec.validate()?;
        Ok(Self {
            spec,
            oracle_rate_bp: 100,
            oracle_window: Oracle::from_env().window(),
        })
    }

    /// Oracle re-check rate in basis points of sequence accesses (default 100
    /// = 1%). Zero disables the audit.
    pub fn oracle_rate_bp(mut self, rate: u64) -> Self {
        self.oracle_rate_bp = rate;
        self
    }

    pub fn run(&self) -> SweepReport {
        let start = Instant::now();
        let rows = self.spec.resolve_rows();
        let (lo, hi) = self.spec.table_span();
        let table = FibTable::spanning(lo, hi);
        let audited = AuditedSequences {
            inner: &table,
            rate_bp: self.oracle_rate_bp,
            window: self.oracle_window,
        };

        // One task per (row, seed) for seeded rows, one per row otherwise;
        // results merge in task order so the report is independent of the
        // worker count.
        struct Task<'r> {
            order: usize,
            row: &'r dyn Identity,
            seed: Option<SeedPair>,
        }
        let mut tasks = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.descriptor().needs_seed() {
                for (j, seed) in self.spec.seeds.iter().enumerate() {
                    tasks.push(Task {
                        order: i * (self.spec.seeds.len() + 1) + j,
                        row: *row,
                        seed: Some(seed.clone()),
                    });
                }
            } else {
                tasks.push(Task {
                    order: i * (self.spec.seeds.len() + 1),
                    row: *row,
                    seed: None,
                });
            }
        }

        struct Partial {
            order: usize,
            evaluated: u64,
            passed: u64,
            skipped: u64,
            failed: Vec<CheckOutcome>,
        }

        let mut partials: Vec<Partial> = tasks
            .par_iter()
            .map(|task| {
                let mut partial = Partial {
                    order: task.order,
                    evaluated: 0,
                    passed: 0,
                    skipped: 0,
                    failed: Vec::new(),
                };
                let seed = task.seed.clone().unwrap_or_else(SeedPair::fibonacci);
                for_each_point(&self.spec, task.row.descriptor(), seed, |point| {
                    let outcome = task.row.eval(&audited, point);
                    partial.evaluated += 1;
                    if outcome.is_singular() {
                        partial.skipped += 1;
                    } else if outcome.holds() {
                        partial.passed += 1;
                    } else {
                        partial.failed.push(outcome);
                    }
                });
                partial
            })
            .collect();
        partials.sort_by_key(|p| p.order);

        let mut report = SweepReport {
            total_points: 0,
            passed: 0,
            failed: Vec::new(),
            skipped_singular: 0,
            wall_time: 0.0,
            config_echo: self.spec.clone(),
        };
        for p in partials {
            report.total_points += p.evaluated;
            report.passed += p.passed;
            report.skipped_singular += p.skipped;
            report.failed.extend(p.failed);
        }
        debug_assert_eq!(
            report.total_points,
            rows.iter().map(|r| self.spec.points_for(r.descriptor())).sum::<u64>()
        );
        report.wall_time = start.elapsed().as_secs_f64();
        report
    }
}

/// Enumerates the points of one identity over the grid, in canonical
/// `a, b, m, n, k` nesting order, pinning undeclared parameters to zero.
fn for_each_point(
    spec: &GridSpec,
    desc: &IdentityDescriptor,
    seed: SeedPair,
    mut visit: impl FnMut(&ParamPoint),
) {
    let range = |p: ParamName| -> (i64, i64) {
        if desc.uses(p) {
            spec.range_of(p)
        } else {
            (0, 0)
        }
    };
    let (a_lo, a_hi) = range(ParamName::A);
    let (b_lo, b_hi) = range(ParamName::B);
    let (m_lo, m_hi) = range(ParamName::M);
    let (n_lo, n_hi) = range(ParamName::N);
    let (k_lo, k_hi) = range(ParamName::K);
    let mut point = ParamPoint { seed, ..Default::default() };
    for a in a_lo..=a_hi {
        for b in b_lo..=b_hi {
            for m in m_lo..=m_hi {
                for n in n_lo..=n_hi {
                    for k in k_lo..=k_hi {
                        point.a = a;
                        point.b = b;
                        point.m = m;
                        point.n = n;
                        point.k = k as u32;
                        visit(&point);
                    }
                }
            }
        }
    }
}

/// Evaluates every selected identity at every grid point. Failures are data
/// in the report, not errors.
pub fn sweep(spec: &GridSpec) -> Result<SweepReport, Error> {
    Ok(Sweeper::new(spec.clone())?.run())
}

/// Compares the fib/lucas/gen fast paths against term-by-term iteration for
/// every `|n| <= max_abs_index` and every given seed. One report point per
/// `(seed, n)` pair; a point passes only if all three kinds match.
///
/// The iteration side is a single walk of each recurrence across the window,
/// which is exactly the oracle's evaluation rule applied incrementally.
pub fn cross_check_fast_vs_oracle(
    max_abs_index: Index,
    seeds: &[SeedPair],
) -> Result<SweepReport, Error> {
    let oracle = Oracle::from_env();
    if max_abs_index < 0 || max_abs_index.unsigned_abs() > oracle.window() {
        return Err(Error::WindowExceeded { n: max_abs_index, window: oracle.window() });
    }
    let start = Instant::now();
    let spec = GridSpec {
        a_range: (0, 0),
        b_range: (0, 0),
        m_range: (0, 0),
        n_range: (-max_abs_index, max_abs_index),
        k_range: (0, 0),
        seeds: seeds.to_vec(),
        identities: Selection::Ids(Vec::new()),
    };
    let mut report = SweepReport {
        total_points: 0,
        passed: 0,
        failed: Vec::new(),
        skipped_singular: 0,
        wall_time: 0.0,
        config_echo: spec,
    };

    // One iterative walker per sequence: (current X(n), next X(n+1)).
    struct Walker {
        lo: BigInt,
        hi: BigInt,
    }
    impl Walker {
        fn start(x0: &BigInt, x1: &BigInt, from: i64) -> Self {
            Self {
                lo: iterate_recurrence(x0, x1, from),
                hi: iterate_recurrence(x0, x1, from + 1),
            }
        }
        fn advance(&mut self) {
            let next = &self.lo + &self.hi;
            std::mem::swap(&mut self.lo, &mut self.hi);
            self.hi = next;
        }
    }

    let from = -max_abs_index;
    let mut fib_walk = Walker::start(&BigInt::from(0), &BigInt::from(1), from);
    let mut lucas_walk = Walker::start(&BigInt::from(2), &BigInt::from(1), from);
    let mut gen_walks: Vec<Walker> =
        seeds.iter().map(|s| Walker::start(s.g0(), s.g1(), from)).collect();

    for n in from..=max_abs_index {
        let fib_fast = fib(n);
        let lucas_fast = lucas(n);
        for (seed, walk) in seeds.iter().zip(&gen_walks) {
            report.total_points += 1;
            let gen_fast = gen(seed, n);
            let mismatch: Option<(&str, &BigInt, &BigInt)> = if fib_fast != fib_walk.lo {
                Some(("fib", &fib_fast, &fib_walk.lo))
            } else if lucas_fast != lucas_walk.lo {
                Some(("lucas", &lucas_fast, &lucas_walk.lo))
            } else if gen_fast != walk.lo {
                Some(("gen", &gen_fast, &walk.lo))
            } else {
                None
            };
            match mismatch {
                None => report.passed += 1,
                Some((label, fast, slow)) => report.failed.push(CheckOutcome {
                    identity: format!("fast_vs_oracle/{label}"),
                    point: ParamPoint { n, seed: seed.clone(), ..Default::default() },
                    lhs: Some(Value::Int(fast.clone())),
                    rhs: Some(Value::Int(slow.clone())),
                    holds: Some(false),
                    singular: None,
                }),
            }
        }
        fib_walk.advance();
        lucas_walk.advance();
        gen_walks.iter_mut().for_each(Walker::advance);
    }
    report.wall_time = start.elapsed().as_secs_f64();
    Ok(report)
}

// ---------------------------------------------------------------------------
// JSON serialization. Integer and rational values are decimal strings; field
// order is fixed by these impls so reports are byte-stable.
// ---------------------------------------------------------------------------

impl Serialize for SweepReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SweepReport", 6)?;
        s.serialize_field("total_points", &self.total_points)?;
        s.serialize_field("passed", &self.passed)?;
        s.serialize_field("failed", &self.failed)?;
        s.serialize_field("skipped_singular", &self.skipped_singular)?;
        s.serialize_field("wall_time", &self.wall_time)?;
        s.serialize_field("config_echo", &self.config_echo)?;
        s.end()
    }
}

impl Serialize for GridSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GridSpec", 7)?;
        s.serialize_field("a_range", &[self.a_range.0, self.a_range.1])?;
        s.serialize_field("b_range", &[self.b_range.0, self.b_range.1])?;
        s.serialize_field("m_range", &[self.m_range.0, self.m_range.1])?;
        s.serialize_field("n_range", &[self.n_range.0, self.n_range.1])?;
        s.serialize_field("k_range", &[self.k_range.0, self.k_range.1])?;
        s.serialize_field("seeds", &SeedList(&self.seeds))?;
        match &self.identities {
            Selection::All => s.serialize_field("identities", "all")?,
            Selection::Ids(ids) => s.serialize_field("identities", ids)?,
        }
        s.end()
    }
}

struct SeedList<'a>(&'a [SeedPair]);

impl Serialize for SeedList<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for seed in self.0 {
            seq.serialize_element(&SeedJson(seed))?;
        }
        seq.end()
    }
}

struct SeedJson<'a>(&'a SeedPair);

impl Serialize for SeedJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SeedPair", 2)?;
        s.serialize_field("g0", &self.0.g0().to_string())?;
        s.serialize_field("g1", &self.0.g1().to_string())?;
        s.end()
    }
}

impl Serialize for CheckOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckOutcome", 6)?;
        s.serialize_field("identity", &self.identity)?;
        s.serialize_field("point", &PointJson(&self.point))?;
        s.serialize_field("lhs", &self.lhs.as_ref().map(|v| v.to_string()))?;
        s.serialize_field("rhs", &self.rhs.as_ref().map(|v| v.to_string()))?;
        s.serialize_field("holds", &self.holds)?;
        s.serialize_field("singular", &self.singular.as_ref().map(SingularJson))?;
        s.end()
    }
}

struct PointJson<'a>(&'a ParamPoint);

impl Serialize for PointJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ParamPoint", 6)?;
        s.serialize_field("a", &self.0.a)?;
        s.serialize_field("b", &self.0.b)?;
        s.serialize_field("m", &self.0.m)?;
        s.serialize_field("n", &self.0.n)?;
        s.serialize_field("k", &self.0.k)?;
        s.serialize_field("seed", &SeedJson(&self.0.seed))?;
        s.end()
    }
}

struct SingularJson<'a>(&'a Singularity);

impl Serialize for SingularJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Singularity", 2)?;
        s.serialize_field("j", &self.0.j)?;
        s.serialize_field("index", &self.0.index)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_value(&SequenceKind::Fib, 10).unwrap(), BigInt::from(55));
        let s = SeedPair::new(3, 7).unwrap();
        assert_eq!(oracle_value(&SequenceKind::Gen(s), -1).unwrap(), BigInt::from(4));
        assert_eq!(oracle_value(&SequenceKind::Lucas, 0).unwrap(), BigInt::from(2));
    }

    #[test]
    fn oracle_window_enforced() {
        let oracle = Oracle::with_window(100);
        assert!(oracle.value(&SequenceKind::Fib, 100).is_ok());
        assert_eq!(
            oracle.value(&SequenceKind::Fib, -101),
            Err(Error::WindowExceeded { n: -101, window: 100 })
        );
    }

    #[test]
    fn oracle_matches_fast_path_sample() {
        let oracle = Oracle::new();
        for n in [-30i64, -7, 0, 1, 13, 64] {
            assert_eq!(oracle.value(&SequenceKind::Fib, n).unwrap(), fib(n));
            assert_eq!(oracle.value(&SequenceKind::Lucas, n).unwrap(), lucas(n));
        }
    }

    fn tiny_spec(selection: Selection) -> GridSpec {
        GridSpec {
            a_range: (-2, 2),
            b_range: (-2, 2),
            m_range: (-2, 2),
            n_range: (-2, 2),
            k_range: (0, 2),
            seeds: vec![SeedPair::fibonacci()],
            identities: selection,
        }
    }

    #[test]
    fn sweep_all_on_tiny_grid_is_clean() {
        let report = sweep(&tiny_spec(Selection::All)).unwrap();
        assert!(report.clean(), "failures: {:#?}", report.failed.first());
        assert_eq!(
            report.total_points,
            report.passed + report.failed.len() as u64 + report.skipped_singular
        );
        assert!(report.skipped_singular > 0);
    }

    #[test]
    fn sweep_empty_selection_is_vacuous() {
        let report = sweep(&tiny_spec(Selection::Ids(Vec::new()))).unwrap();
        assert_eq!(report.total_points, 0);
        assert!(report.clean());
    }

    #[test]
    fn sweep_printed_ruggles_fails_where_expected() {
        let spec = GridSpec {
            n_range: (0, 4),
            k_range: (1, 3),
            identities: Selection::Ids(vec!["ruggles_printed".to_owned()]),
            ..tiny_spec(Selection::All)
        };
        let report = sweep(&spec).unwrap();
        assert!(!report.clean());
        assert!(report
            .failed
            .iter()
            .any(|f| f.point.n == 2 && f.point.k == 1));
    }

    #[test]
    fn sweep_rejects_unknown_identity() {
        let spec = tiny_spec(Selection::Ids(vec!["nosuch".to_owned()]));
        assert_eq!(sweep(&spec).unwrap_err(), Error::UnknownIdentity("nosuch".into()));
    }

    #[test]
    fn sweep_deterministic_and_thread_count_independent() {
        let spec = tiny_spec(Selection::All);
        let r1 = sweep(&spec).unwrap();
        let r2 = sweep(&spec).unwrap();
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| sweep(&spec).unwrap());
        for other in [&r2, &serial] {
            assert_eq!(r1.total_points, other.total_points);
            assert_eq!(r1.passed, other.passed);
            assert_eq!(r1.skipped_singular, other.skipped_singular);
            assert_eq!(r1.failed, other.failed);
        }
        let strip = |r: &SweepReport| {
            let mut v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
            v["wall_time"] = 0.into();
            serde_json::to_string(&v).unwrap()
        };
        assert_eq!(strip(&r1), strip(&r2));
        assert_eq!(strip(&r1), strip(&serial));
    }

    #[test]
    fn cross_check_examples() {
        let seeds = default_seeds();
        let report = cross_check_fast_vs_oracle(0, &seeds).unwrap();
        assert_eq!(report.total_points, seeds.len() as u64);
        assert!(report.clean());

        let report = cross_check_fast_vs_oracle(200, &seeds).unwrap();
        assert!(report.clean());
        assert_eq!(report.total_points, 401 * seeds.len() as u64);

        assert!(matches!(
            cross_check_fast_vs_oracle(1_000_000_000, &seeds),
            Err(Error::WindowExceeded { .. })
        ));
    }

    #[test]
    fn report_json_shape() {
        let report = sweep(&tiny_spec(Selection::Ids(vec!["master".into()]))).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert!(v["total_points"].is_u64());
        assert!(v["failed"].is_array());
        assert_eq!(v["config_echo"]["identities"][0], "master");
        assert_eq!(v["config_echo"]["seeds"][0]["g0"], "0");
    }

    #[test]
    fn audited_provider_catches_a_poisoned_value() {
        struct Poisoned(FibTable);
        impl Sequences for Poisoned {
            fn fib(&self, n: Index) -> BigInt {
                if n == 3 {
                    BigInt::from(999)
                } else {
                    self.0.fib(n)
                }
            }
            fn lucas(&self, n: Index) -> BigInt {
                self.0.lucas(n)
            }
            fn gen(&self, seed: &SeedPair, n: Index) -> BigInt {
                self.0.gen(seed, n)
            }
        }
        let poisoned = Poisoned(FibTable::spanning(-8, 8));
        let audited = AuditedSequences { inner: &poisoned, rate_bp: 10_000, window: 100 };
        assert_eq!(audited.fib(4), fib(4));
        let caught =
            std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| audited.fib(3))).is_err();
        assert!(caught, "audit missed the poisoned value");
    }
}

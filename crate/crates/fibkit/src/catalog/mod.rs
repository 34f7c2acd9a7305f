//! The identity catalog: every supported identity as a named, evaluable entry
//! behind the [`Identity`] trait.
//!
//! Entries are registered once, in display order, into a process-wide
//! [`Catalog`] and selected by stable string key (`"master"`, `"kh2azr9"`,
//! `"recip_plus_alt_l"`, ...). Each entry evaluates its left and right side
//! exactly at a [`ParamPoint`] and reports a [`CheckOutcome`]; equality is
//! never assumed, always computed.
//!
//! Two entries (`ruggles_printed`, `vajda19_gen_printed`) reproduce commonly
//! printed forms that are numerically wrong; they are excluded from "all"
//! selections and kept for regression checks. Their corrected counterparts
//! carry an erratum note documenting the fix.

mod bilinear;
mod binomial;
mod reciprocal;
mod telescoping;

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;
use std::fmt;
use std::sync::LazyLock;

use crate::sequences::{Direct, SeedPair, Sequences};

pub use binomial::BinomialKind;
pub use reciprocal::ReciprocalKind;
pub use telescoping::TelescopingKind;

/// Catalog families, mirroring how the identities are organised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Core,
    Variant,
    Special,
    BinomialSum,
    TelescopingSum,
    ReciprocalSum,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Core => "core",
            Family::Variant => "variant",
            Family::Special => "special",
            Family::BinomialSum => "binomial_sum",
            Family::TelescopingSum => "telescoping_sum",
            Family::ReciprocalSum => "reciprocal_sum",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters an identity actually reads from a [`ParamPoint`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamName {
    A,
    B,
    M,
    N,
    K,
}

impl ParamName {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamName::A => "a",
            ParamName::B => "b",
            ParamName::M => "m",
            ParamName::N => "n",
            ParamName::K => "k",
        }
    }
}

/// Which sequences an identity touches. `Seeded` means the caller's seed
/// matters; entries without it ignore the seed entirely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Fib,
    Lucas,
    Seeded,
}

/// One evaluation point. Identities read only the parameters listed in their
/// descriptor; the rest are ignored.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint {
    pub a: i64,
    pub b: i64,
    pub m: i64,
    pub n: i64,
    pub k: u32,
    pub seed: SeedPair,
}

impl Default for ParamPoint {
    fn default() -> Self {
        Self { a: 0, b: 0, m: 0, n: 0, k: 0, seed: SeedPair::fibonacci() }
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} m={} n={} k={} seed={}",
            self.a, self.b, self.m, self.n, self.k, self.seed
        )
    }
}

/// An exactly computed side value: integer for the product and summation
/// identities, rational for the reciprocal sums.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(BigInt),
    Rat(BigRational),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rat(v) => {
                if v.is_integer() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
        }
    }
}

/// Location of the first zero denominator factor in a reciprocal sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Singularity {
    /// Summation index of the offending term.
    pub j: u32,
    /// Sequence index whose value is zero.
    pub index: i64,
}

/// Result of evaluating one identity at one parameter point.
///
/// `holds` is present (and equals exact `lhs == rhs`) unless the point is
/// singular, in which case `singular` carries the detail and the sides are
/// absent.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub identity: String,
    pub point: ParamPoint,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub holds: Option<bool>,
    pub singular: Option<Singularity>,
}

impl CheckOutcome {
    pub(crate) fn from_int_sides(
        identity: &str,
        point: ParamPoint,
        lhs: BigInt,
        rhs: BigInt,
    ) -> Self {
        let holds = lhs == rhs;
        Self {
            identity: identity.to_owned(),
            point,
            lhs: Some(Value::Int(lhs)),
            rhs: Some(Value::Int(rhs)),
            holds: Some(holds),
            singular: None,
        }
    }

    pub(crate) fn from_rat_sides(
        identity: &str,
        point: ParamPoint,
        lhs: BigRational,
        rhs: BigRational,
    ) -> Self {
        let holds = lhs == rhs;
        Self {
            identity: identity.to_owned(),
            point,
            lhs: Some(Value::Rat(lhs)),
            rhs: Some(Value::Rat(rhs)),
            holds: Some(holds),
            singular: None,
        }
    }

    pub(crate) fn singular_at(identity: &str, point: ParamPoint, sing: Singularity) -> Self {
        Self {
            identity: identity.to_owned(),
            point,
            lhs: None,
            rhs: None,
            holds: None,
            singular: Some(sing),
        }
    }

    /// `true` when both sides were evaluated and found exactly equal.
    pub fn holds(&self) -> bool {
        self.holds == Some(true)
    }

    pub fn is_singular(&self) -> bool {
        self.singular.is_some()
    }
}

/// Metadata for one catalog entry.
#[derive(Clone, Debug)]
pub struct IdentityDescriptor {
    /// Stable lookup key.
    pub id: String,
    /// The identity itself, written out (`F(...)`/`L(...)`/`G(...)` notation).
    pub formula: String,
    pub family: Family,
    /// Parameters the evaluator reads.
    pub params: Vec<ParamName>,
    /// Human-readable constraints, e.g. `"k >= 0"`.
    pub constraints: String,
    /// Sequences appearing in the formula.
    pub slots: Vec<Slot>,
    /// For corrected entries: what was wrong with the printed form. For
    /// `*_printed` entries: why the entry is expected to fail.
    pub erratum: Option<String>,
    /// `true` for the known-failing printed forms kept as regressions.
    pub printed_form: bool,
}

impl IdentityDescriptor {
    pub fn needs_seed(&self) -> bool {
        self.slots.contains(&Slot::Seeded)
    }

    pub fn uses(&self, p: ParamName) -> bool {
        self.params.contains(&p)
    }
}

/// One evaluable identity. Implementations are pure: the outcome depends only
/// on the point and the sequence provider.
pub trait Identity: Send + Sync {
    fn descriptor(&self) -> &IdentityDescriptor;
    fn eval(&self, seqs: &dyn Sequences, point: &ParamPoint) -> CheckOutcome;
}

/// Which sequence fills the `G` slots of a summation identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Use the point's seed.
    Seeded,
    /// Pin the seed to `(0, 1)`, i.e. `G = F`.
    Fib,
    /// Pin the seed to `(2, 1)`, i.e. `G = L`.
    Lucas,
}

impl Target {
    pub(crate) fn id_suffix(self) -> &'static str {
        match self {
            Target::Seeded => "",
            Target::Fib => "_f",
            Target::Lucas => "_l",
        }
    }

    /// The seed actually used for the `G` slots at this point.
    pub(crate) fn effective_seed(self, point: &ParamPoint) -> SeedPair {
        match self {
            Target::Seeded => point.seed.clone(),
            Target::Fib => SeedPair::fibonacci(),
            Target::Lucas => SeedPair::lucas(),
        }
    }

    /// Rewrites the `G` letter of a seeded formula.
    pub(crate) fn specialize_formula(self, base: &str) -> String {
        match self {
            Target::Seeded => base.to_owned(),
            Target::Fib => base.replace("G(", "F("),
            Target::Lucas => base.replace("G(", "L("),
        }
    }

    pub(crate) fn slots(self, coefficient_slots: &[Slot]) -> Vec<Slot> {
        let mut slots = coefficient_slots.to_vec();
        let g = match self {
            Target::Seeded => Slot::Seeded,
            Target::Fib => Slot::Fib,
            Target::Lucas => Slot::Lucas,
        };
        if !slots.contains(&g) {
            slots.push(g);
        }
        slots
    }
}

/// The registry of all identities, in display order.
pub struct Catalog {
    rows: Vec<Box<dyn Identity>>,
    by_id: HashMap<String, usize>,
}

impl Catalog {
    pub fn new() -> Self {
        let mut rows: Vec<Box<dyn Identity>> = Vec::new();
        bilinear::register_all(&mut rows);
        binomial::register_all(&mut rows);
        telescoping::register_all(&mut rows);
        reciprocal::register_all(&mut rows);
        let mut by_id = HashMap::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let id = row.descriptor().id.clone();
            let clash = by_id.insert(id, i);
            assert!(clash.is_none(), "duplicate identity id at row {i}");
        }
        Self { rows, by_id }
    }

    pub fn get(&self, id: &str) -> Option<&dyn Identity> {
        self.by_id.get(id).map(|&i| self.rows[i].as_ref())
    }

    pub fn identities(&self) -> impl Iterator<Item = &dyn Identity> + '_ {
        self.rows.iter().map(|r| r.as_ref())
    }

    /// Descriptors of every entry, in registration order.
    pub fn descriptors(&self) -> Vec<&IdentityDescriptor> {
        self.rows.iter().map(|r| r.descriptor()).collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl Default for Catalog {
    fn default() -> Self {
        Self::new()
    }
}

static CATALOG: LazyLock<Catalog> = LazyLock::new(Catalog::new);

/// The process-wide catalog.
pub fn catalog() -> &'static Catalog {
    &CATALOG
}

/// Every catalog descriptor, in registration order.
pub fn list_identities() -> Vec<&'static IdentityDescriptor> {
    CATALOG.rows.iter().map(|r| r.descriptor()).collect()
}

/// The printed variants of the master identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantKind {
    SwapMn,
    ReflectAb,
    ReflectAndSwap,
}

impl VariantKind {
    pub fn id(self) -> &'static str {
        match self {
            VariantKind::SwapMn => "swap_mn",
            VariantKind::ReflectAb => "reflect_ab",
            VariantKind::ReflectAndSwap => "reflect_and_swap",
        }
    }
}

/// The named special cases of the master identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    CatalanGen,
    Catalan,
    Vajda19Gen,
    Vajda10aGen,
    Ruggles,
    F2a,
    Halton63Gen,
    Halton63,
    F2km1,
    F2k,
    Addition,
    F2mG2n,
}

impl SpecialKind {
    pub fn id(self) -> &'static str {
        match self {
            SpecialKind::CatalanGen => "catalan_gen",
            SpecialKind::Catalan => "catalan",
            SpecialKind::Vajda19Gen => "vajda19_gen",
            SpecialKind::Vajda10aGen => "vajda10a_gen",
            SpecialKind::Ruggles => "ruggles",
            SpecialKind::F2a => "f2a",
            SpecialKind::Halton63Gen => "halton63_gen",
            SpecialKind::Halton63 => "halton63",
            SpecialKind::F2km1 => "f2km1",
            SpecialKind::F2k => "f2k",
            SpecialKind::Addition => "addition",
            SpecialKind::F2mG2n => "f2m_g2n",
        }
    }
}

fn eval_by_id(id: &str, point: &ParamPoint) -> CheckOutcome {
    CATALOG
        .get(id)
        .unwrap_or_else(|| panic!("identity `{id}` not registered"))
        .eval(&Direct, point)
}

/// Evaluates the four-parameter master identity
/// `F(a-b) G(n+m) = F(m-b) G(n+a) + (-1)^(a+b+1) F(m-a) G(n+b)`.
pub fn eval_master(point: &ParamPoint) -> CheckOutcome {
    eval_by_id("master", point)
}

/// Evaluates one of the three printed rearrangements of the master identity.
pub fn eval_variant(which: VariantKind, point: &ParamPoint) -> CheckOutcome {
    eval_by_id(which.id(), point)
}

/// Evaluates a named special case (corrected form where an erratum exists).
pub fn eval_special(which: SpecialKind, point: &ParamPoint) -> CheckOutcome {
    eval_by_id(which.id(), point)
}

/// Evaluates one of the six binomial-transform identities, with the `G`
/// slots bound per `target`.
pub fn eval_binomial_theorem(
    which: BinomialKind,
    point: &ParamPoint,
    target: Target,
) -> CheckOutcome {
    binomial::BinomialIdentity::new(which, target).eval(&Direct, point)
}

/// Evaluates a telescoping-sum identity, with the `G` slots bound per
/// `target`.
pub fn eval_telescoping_theorem(
    which: TelescopingKind,
    point: &ParamPoint,
    target: Target,
) -> CheckOutcome {
    telescoping::TelescopingIdentity::new(which, target).eval(&Direct, point)
}

/// Evaluates a reciprocal-sum identity in exact rationals, with the `G`
/// slots bound per `target`.
pub fn eval_reciprocal_theorem(
    which: ReciprocalKind,
    point: &ParamPoint,
    target: Target,
) -> CheckOutcome {
    reciprocal::ReciprocalIdentity::new(which, target).eval(&Direct, point)
}

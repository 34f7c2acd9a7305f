//! Telescoping-sum identities: the two mixed `F`/`G` telescopes built on the
//! rearranged `swap_mn` variant, and the six single-sequence telescopes built
//! on the master-identity frames, with their `F`/`L` specializations.

use super::binomial::{master_frame, FrameSide};
use super::{
    CheckOutcome, Family, Identity, IdentityDescriptor, ParamName, ParamPoint, Slot, Target,
};
use crate::combinators::{telescoping_sum_raw, RecurrenceFrame, TelescopingForm};
use crate::sequences::{apply_sign, parity_negative, SeedPair, Sequences};

/// Telescoping identities: `Hlcov46`/`Ao5nh45` telescope a product of `G`
/// coefficient powers against `F` endpoint values; the `Minus*`/`Plus*` six
/// telescope a single sequence along strides `m-a` / `m-b` / `a-b` (or their
/// `a <-> -b` reflections).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TelescopingKind {
    Hlcov46,
    Ao5nh45,
    MinusAlpha,
    MinusBeta,
    MinusAlt,
    PlusAlpha,
    PlusBeta,
    PlusAlt,
}

impl TelescopingKind {
    pub const ALL: [TelescopingKind; 8] = [
        TelescopingKind::Hlcov46,
        TelescopingKind::Ao5nh45,
        TelescopingKind::MinusAlpha,
        TelescopingKind::MinusBeta,
        TelescopingKind::MinusAlt,
        TelescopingKind::PlusAlpha,
        TelescopingKind::PlusBeta,
        TelescopingKind::PlusAlt,
    ];

    /// The six single-sequence telescopes (those with `F`/`L` catalog rows).
    pub const SINGLE_SEQUENCE: [TelescopingKind; 6] = [
        TelescopingKind::MinusAlpha,
        TelescopingKind::MinusBeta,
        TelescopingKind::MinusAlt,
        TelescopingKind::PlusAlpha,
        TelescopingKind::PlusBeta,
        TelescopingKind::PlusAlt,
    ];

    pub fn base_id(self) -> &'static str {
        match self {
            TelescopingKind::Hlcov46 => "hlcov46",
            TelescopingKind::Ao5nh45 => "ao5nh45",
            TelescopingKind::MinusAlpha => "tele_minus_alpha",
            TelescopingKind::MinusBeta => "tele_minus_beta",
            TelescopingKind::MinusAlt => "tele_minus_alt",
            TelescopingKind::PlusAlpha => "tele_plus_alpha",
            TelescopingKind::PlusBeta => "tele_plus_beta",
            TelescopingKind::PlusAlt => "tele_plus_alt",
        }
    }

    fn formula(self) -> &'static str {
        match self {
            TelescopingKind::Hlcov46 => {
                "F(a-b) sum_{j=0..k} (-1)^((a+b)j) G(m+b)^(k-j) G(m+a)^j \
                 G(n-(a-b)k+m+b+(a-b)j) = (-1)^((a+b)k) F(n) G(m+a)^(k+1) \
                 + (-1)^(a+b+1) F(n-(a-b)(k+1)) G(m+b)^(k+1)"
            }
            TelescopingKind::Ao5nh45 => {
                "F(a-b) sum_{j=0..k} (-1)^((a+b)j) G(m-a)^(k-j) G(m-b)^j \
                 G(n-(a-b)k+m-a+(a-b)j) = (-1)^((a+b)k) F(n) G(m-b)^(k+1) \
                 + (-1)^(a+b+1) F(n-(a-b)(k+1)) G(m-a)^(k+1)"
            }
            TelescopingKind::MinusAlpha => {
                "(-1)^(a+b+1) F(m-a) sum_{j=0..k} F(m-b)^(k-j) F(a-b)^j \
                 G(n-(m-a)k-(m-b)+(m-a)j) = F(a-b)^(k+1) G(n) \
                 - F(m-b)^(k+1) G(n-(m-a)(k+1))"
            }
            TelescopingKind::MinusBeta => {
                "F(m-b) sum_{j=0..k} (-1)^((a+b+1)(k-j)) F(m-a)^(k-j) F(a-b)^j \
                 G(n-(m-b)k-(m-a)+(m-b)j) = F(a-b)^(k+1) G(n) \
                 - (-1)^((a+b+1)(k+1)) F(m-a)^(k+1) G(n-(m-b)(k+1))"
            }
            TelescopingKind::MinusAlt => {
                "F(a-b) sum_{j=0..k} (-1)^((a+b)j) F(m-a)^(k-j) F(m-b)^j \
                 G(n-(a-b)k+(m-a)+(a-b)j) = (-1)^((a+b)k) F(m-b)^(k+1) G(n) \
                 + (-1)^(a+b+1) F(m-a)^(k+1) G(n-(a-b)(k+1))"
            }
            TelescopingKind::PlusAlpha => {
                "(-1)^(a+b+1) F(m+b) sum_{j=0..k} F(m+a)^(k-j) F(a-b)^j \
                 G(n-(m+b)k-(m+a)+(m+b)j) = F(a-b)^(k+1) G(n) \
                 - F(m+a)^(k+1) G(n-(m+b)(k+1))"
            }
            TelescopingKind::PlusBeta => {
                "F(m+a) sum_{j=0..k} (-1)^((a+b+1)(k-j)) F(m+b)^(k-j) F(a-b)^j \
                 G(n-(m+a)k-(m+b)+(m+a)j) = F(a-b)^(k+1) G(n) \
                 - (-1)^((a+b+1)(k+1)) F(m+b)^(k+1) G(n-(m+a)(k+1))"
            }
            TelescopingKind::PlusAlt => {
                "F(a-b) sum_{j=0..k} (-1)^((a+b)j) F(m+b)^(k-j) F(m+a)^j \
                 G(n-(a-b)k+(m+b)+(a-b)j) = (-1)^((a+b)k) F(m+a)^(k+1) G(n) \
                 + (-1)^(a+b+1) F(m+b)^(k+1) G(n-(a-b)(k+1))"
            }
        }
    }
}

/// Frame for the two mixed telescopes: the `swap_mn` variant rearranged to
/// `G(m+a) F(n) = (-1)^(a+b) G(m+b) F(n-(a-b)) + F(a-b) G(n+m+b)`
/// (or its `a <-> -b` reflection). Returns the frame plus the shift of the
/// summed sequence.
fn mixed_frame(
    kind: TelescopingKind,
    seqs: &dyn Sequences,
    seed: &SeedPair,
    p: &ParamPoint,
) -> (RecurrenceFrame, i64) {
    let (coef_hi, coef_lo, shift) = match kind {
        TelescopingKind::Hlcov46 => (p.m + p.a, p.m + p.b, p.m + p.b),
        TelescopingKind::Ao5nh45 => (p.m - p.b, p.m - p.a, p.m - p.a),
        _ => unreachable!("mixed_frame only serves the two-sequence telescopes"),
    };
    let frame = RecurrenceFrame {
        h: seqs.gen(seed, coef_hi),
        f1: apply_sign(p.a + p.b, seqs.gen(seed, coef_lo)),
        f2: seqs.fib(p.a - p.b),
        alpha: p.a - p.b,
        beta: 0,
    };
    (frame, shift)
}

pub(crate) struct TelescopingIdentity {
    desc: IdentityDescriptor,
    kind: TelescopingKind,
    target: Target,
}

impl TelescopingIdentity {
    pub(crate) fn new(kind: TelescopingKind, target: Target) -> Self {
        let desc = IdentityDescriptor {
            id: format!("{}{}", kind.base_id(), target.id_suffix()),
            formula: target.specialize_formula(kind.formula()),
            family: Family::TelescopingSum,
            params: vec![ParamName::A, ParamName::B, ParamName::M, ParamName::N, ParamName::K],
            constraints: "k >= 0".to_owned(),
            slots: target.slots(&[Slot::Fib]),
            erratum: None,
            printed_form: false,
        };
        Self { desc, kind, target }
    }
}

impl Identity for TelescopingIdentity {
    fn descriptor(&self) -> &IdentityDescriptor {
        &self.desc
    }

    fn eval(&self, seqs: &dyn Sequences, point: &ParamPoint) -> CheckOutcome {
        let seed = self.target.effective_seed(point);
        let mut point = point.clone();
        point.seed = seed.clone();
        let p = &point;
        let (mut lhs, mut rhs, unit_exponent) = match self.kind {
            TelescopingKind::Hlcov46 | TelescopingKind::Ao5nh45 => {
                let (frame, shift) = mixed_frame(self.kind, seqs, &seed, p);
                let x = |i: i64| seqs.fib(i);
                let y = |i: i64| seqs.gen(&seed, i + shift);
                let (l, r) = telescoping_sum_raw(&frame, &x, &y, p.n, p.k, TelescopingForm::Xy);
                (l, r, (p.a + p.b) * p.k as i64)
            }
            kind => {
                let (side, form) = match kind {
                    TelescopingKind::MinusAlpha => (FrameSide::Minus, TelescopingForm::XxAlpha),
                    TelescopingKind::MinusBeta => (FrameSide::Minus, TelescopingForm::XxBeta),
                    TelescopingKind::MinusAlt => (FrameSide::Minus, TelescopingForm::XxAlt),
                    TelescopingKind::PlusAlpha => (FrameSide::Plus, TelescopingForm::XxAlpha),
                    TelescopingKind::PlusBeta => (FrameSide::Plus, TelescopingForm::XxBeta),
                    TelescopingKind::PlusAlt => (FrameSide::Plus, TelescopingForm::XxAlt),
                    _ => unreachable!(),
                };
                let frame = master_frame(side, seqs, p);
                let x = |i: i64| seqs.gen(&seed, i);
                let (l, r) = telescoping_sum_raw(&frame, &x, &x, p.n, p.k, form);
                let unit = if matches!(form, TelescopingForm::XxAlt) {
                    (p.a + p.b + 1) * p.k as i64
                } else {
                    0
                };
                (l, r, unit)
            }
        };
        if parity_negative(unit_exponent) {
            lhs = -lhs;
            rhs = -rhs;
        }
        CheckOutcome::from_int_sides(&self.desc.id, point, lhs, rhs)
    }
}

pub(crate) fn register_all(rows: &mut Vec<Box<dyn Identity>>) {
    rows.push(Box::new(TelescopingIdentity::new(TelescopingKind::Hlcov46, Target::Seeded)));
    rows.push(Box::new(TelescopingIdentity::new(TelescopingKind::Ao5nh45, Target::Seeded)));
    for target in [Target::Seeded, Target::Fib, Target::Lucas] {
        for kind in TelescopingKind::SINGLE_SEQUENCE {
            rows.push(Box::new(TelescopingIdentity::new(kind, target)));
        }
    }
}

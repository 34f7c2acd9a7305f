//! Reciprocal-sum identities: summands carry a product of two sequence values
//! in the denominator, so evaluation happens in exact rationals and every
//! denominator factor is checked before any division.
//!
//! `Vd3kfav`/`Jwgeagg` put `F` values in the denominators and telescope `G`
//! coefficient powers; the `Minus*`/`Plus*` six put the target sequence
//! itself in the denominators. Points with a vanishing denominator factor are
//! reported as singular outcomes, never evaluated.

use super::binomial::{master_frame, FrameSide};
use super::{
    CheckOutcome, Family, Identity, IdentityDescriptor, ParamName, ParamPoint, Singularity, Slot,
    Target,
};
use crate::combinators::{reciprocal_sum_raw, RecurrenceFrame, ReciprocalForm};
use crate::sequences::{apply_sign, SeedPair, Sequences};
use crate::Error;
use num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReciprocalKind {
    Vd3kfav,
    Jwgeagg,
    MinusAlpha,
    MinusBeta,
    MinusAlt,
    PlusAlpha,
    PlusBeta,
    PlusAlt,
}

impl ReciprocalKind {
    pub const ALL: [ReciprocalKind; 8] = [
        ReciprocalKind::Vd3kfav,
        ReciprocalKind::Jwgeagg,
        ReciprocalKind::MinusAlpha,
        ReciprocalKind::MinusBeta,
        ReciprocalKind::MinusAlt,
        ReciprocalKind::PlusAlpha,
        ReciprocalKind::PlusBeta,
        ReciprocalKind::PlusAlt,
    ];

    /// The six identities whose denominators are the target sequence.
    pub const SELF_DENOMINATOR: [ReciprocalKind; 6] = [
        ReciprocalKind::MinusAlpha,
        ReciprocalKind::MinusBeta,
        ReciprocalKind::MinusAlt,
        ReciprocalKind::PlusAlpha,
        ReciprocalKind::PlusBeta,
        ReciprocalKind::PlusAlt,
    ];

    pub fn base_id(self) -> &'static str {
        match self {
            ReciprocalKind::Vd3kfav => "vd3kfav",
            ReciprocalKind::Jwgeagg => "jwgeagg",
            ReciprocalKind::MinusAlpha => "recip_minus_alpha",
            ReciprocalKind::MinusBeta => "recip_minus_beta",
            ReciprocalKind::MinusAlt => "recip_minus_alt",
            ReciprocalKind::PlusAlpha => "recip_plus_alpha",
            ReciprocalKind::PlusBeta => "recip_plus_beta",
            ReciprocalKind::PlusAlt => "recip_plus_alt",
        }
    }

    fn formula(self) -> &'static str {
        match self {
            ReciprocalKind::Vd3kfav => {
                "F(n) F(n-(a-b)(k+1)) F(a-b) sum_{j=0..k} (-1)^((a+b)j) G(m+a)^(k-j) G(m+b)^j \
                 G(n+m+b-(a-b)k+(a-b)j) / (F(n-(a-b)k+(a-b)j) F(n-a+b-(a-b)k+(a-b)j)) \
                 = F(n) G(m+a)^(k+1) - (-1)^((a+b)(k+1)) F(n-(a-b)(k+1)) G(m+b)^(k+1)"
            }
            ReciprocalKind::Jwgeagg => {
                "F(n) F(n-(a-b)(k+1)) F(a-b) sum_{j=0..k} (-1)^((a+b)j) G(m-b)^(k-j) G(m-a)^j \
                 G(n+m-a-(a-b)k+(a-b)j) / (F(n-(a-b)k+(a-b)j) F(n+b-a-(a-b)k+(a-b)j)) \
                 = F(n) G(m-b)^(k+1) - (-1)^((a+b)(k+1)) F(n-(a-b)(k+1)) G(m-a)^(k+1)"
            }
            ReciprocalKind::MinusAlpha => {
                "(-1)^(a+b+1) F(m-a) G(n) G(n-(m-a)(k+1)) sum_{j=0..k} F(a-b)^(k-j) F(m-b)^j \
                 G(n-m+b-(m-a)k+(m-a)j) / (G(n-(m-a)k+(m-a)j) G(n-(m-a)-(m-a)k+(m-a)j)) \
                 = F(a-b)^(k+1) G(n) - F(m-b)^(k+1) G(n-(m-a)(k+1))"
            }
            ReciprocalKind::MinusBeta => {
                "F(m-b) G(n) G(n-(m-b)(k+1)) sum_{j=0..k} (-1)^((a+b+1)j) F(a-b)^(k-j) F(m-a)^j \
                 G(n-(m-a)-(m-b)k+(m-b)j) / (G(n-(m-b)k+(m-b)j) G(n-(m-b)-(m-b)k+(m-b)j)) \
                 = F(a-b)^(k+1) G(n) - (-1)^((a+b+1)(k+1)) F(m-a)^(k+1) G(n-(m-b)(k+1))"
            }
            ReciprocalKind::MinusAlt => {
                "F(a-b) G(n) G(n-(a-b)(k+1)) sum_{j=0..k} (-1)^((a+b)j) F(m-b)^(k-j) F(m-a)^j \
                 G(n+m-a-(a-b)k+(a-b)j) / (G(n-(a-b)k+(a-b)j) G(n-(a-b)-(a-b)k+(a-b)j)) \
                 = F(m-b)^(k+1) G(n) - (-1)^((a+b)(k+1)) F(m-a)^(k+1) G(n-(a-b)(k+1))"
            }
            ReciprocalKind::PlusAlpha => {
                "(-1)^(a+b+1) F(m+b) G(n) G(n-(m+b)(k+1)) sum_{j=0..k} F(a-b)^(k-j) F(m+a)^j \
                 G(n-m-a-(m+b)k+(m+b)j) / (G(n-(m+b)k+(m+b)j) G(n-(m+b)-(m+b)k+(m+b)j)) \
                 = F(a-b)^(k+1) G(n) - F(m+a)^(k+1) G(n-(m+b)(k+1))"
            }
            ReciprocalKind::PlusBeta => {
                "F(m+a) G(n) G(n-(m+a)(k+1)) sum_{j=0..k} (-1)^((a+b+1)j) F(a-b)^(k-j) F(m+b)^j \
                 G(n-(m+b)-(m+a)k+(m+a)j) / (G(n-(m+a)k+(m+a)j) G(n-(m+a)-(m+a)k+(m+a)j)) \
                 = F(a-b)^(k+1) G(n) - (-1)^((a+b+1)(k+1)) F(m+b)^(k+1) G(n-(m+a)(k+1))"
            }
            ReciprocalKind::PlusAlt => {
                "F(a-b) G(n) G(n-(a-b)(k+1)) sum_{j=0..k} (-1)^((a+b)j) F(m+a)^(k-j) F(m+b)^j \
                 G(n+m+b-(a-b)k+(a-b)j) / (G(n-(a-b)k+(a-b)j) G(n-(a-b)-(a-b)k+(a-b)j)) \
                 = F(m+a)^(k+1) G(n) - (-1)^((a+b)(k+1)) F(m+b)^(k+1) G(n-(a-b)(k+1))"
            }
        }
    }
}

pub(crate) struct ReciprocalIdentity {
    desc: IdentityDescriptor,
    kind: ReciprocalKind,
    target: Target,
}

impl ReciprocalIdentity {
    pub(crate) fn new(kind: ReciprocalKind, target: Target) -> Self {
        let denominator_slot = match kind {
            ReciprocalKind::Vd3kfav | ReciprocalKind::Jwgeagg => &[Slot::Fib][..],
            _ => &[],
        };
        let desc = IdentityDescriptor {
            id: format!("{}{}", kind.base_id(), target.id_suffix()),
            formula: target.specialize_formula(kind.formula()),
            family: Family::ReciprocalSum,
            params: vec![ParamName::A, ParamName::B, ParamName::M, ParamName::N, ParamName::K],
            constraints: "k >= 0; summand non-singular over j = 0..k".to_owned(),
            slots: target.slots(denominator_slot),
            erratum: None,
            printed_form: false,
        };
        Self { desc, kind, target }
    }
}

impl Identity for ReciprocalIdentity {
    fn descriptor(&self) -> &IdentityDescriptor {
        &self.desc
    }

    fn eval(&self, seqs: &dyn Sequences, point: &ParamPoint) -> CheckOutcome {
        let seed = self.target.effective_seed(point);
        let mut point = point.clone();
        point.seed = seed.clone();
        let p = &point;
        let result = match self.kind {
            ReciprocalKind::Vd3kfav | ReciprocalKind::Jwgeagg => {
                let (frame, shift) = mixed_frame(self.kind, seqs, &seed, p);
                let x = |i: i64| seqs.fib(i);
                let y = |i: i64| seqs.gen(&seed, i + shift);
                reciprocal_sum_raw(&frame, &x, &y, p.n, p.k, ReciprocalForm::R1)
            }
            kind => {
                let (side, form) = match kind {
                    ReciprocalKind::MinusAlpha => (FrameSide::Minus, ReciprocalForm::Q1),
                    ReciprocalKind::MinusBeta => (FrameSide::Minus, ReciprocalForm::Q2),
                    ReciprocalKind::MinusAlt => (FrameSide::Minus, ReciprocalForm::Q3),
                    ReciprocalKind::PlusAlpha => (FrameSide::Plus, ReciprocalForm::Q1),
                    ReciprocalKind::PlusBeta => (FrameSide::Plus, ReciprocalForm::Q2),
                    ReciprocalKind::PlusAlt => (FrameSide::Plus, ReciprocalForm::Q3),
                    _ => unreachable!(),
                };
                let frame = master_frame(side, seqs, p);
                let x = |i: i64| seqs.gen(&seed, i);
                reciprocal_sum_raw(&frame, &x, &x, p.n, p.k, form)
            }
        };
        match result {
            Ok(parts) => {
                // Equality is decided by integer cross-multiplication; the
                // reported left side is only reduced to canonical form when
                // the sides disagree (when they agree it *is* the right side).
                if parts.sides_equal() {
                    let rhs = BigRational::from_integer(parts.rhs);
                    CheckOutcome::from_rat_sides(&self.desc.id, point, rhs.clone(), rhs)
                } else {
                    let lhs = BigRational::new(parts.lhs_numer, parts.denom);
                    let rhs = BigRational::from_integer(parts.rhs);
                    CheckOutcome::from_rat_sides(&self.desc.id, point, lhs, rhs)
                }
            }
            Err(Error::SingularSummand { j, index }) => {
                CheckOutcome::singular_at(&self.desc.id, point, Singularity { j, index })
            }
            Err(e) => unreachable!("reciprocal evaluation cannot fail with {e}"),
        }
    }
}

/// Frame and summed-sequence shift for the two `F`-denominator telescopes;
/// same recurrence as the mixed telescoping identities.
fn mixed_frame(
    kind: ReciprocalKind,
    seqs: &dyn Sequences,
    seed: &SeedPair,
    p: &ParamPoint,
) -> (RecurrenceFrame, i64) {
    let (coef_hi, coef_lo, shift) = match kind {
        ReciprocalKind::Vd3kfav => (p.m + p.a, p.m + p.b, p.m + p.b),
        ReciprocalKind::Jwgeagg => (p.m - p.b, p.m - p.a, p.m - p.a),
        _ => unreachable!(),
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

pub(crate) fn register_all(rows: &mut Vec<Box<dyn Identity>>) {
    for kind in [ReciprocalKind::Vd3kfav, ReciprocalKind::Jwgeagg] {
        rows.push(Box::new(ReciprocalIdentity::new(kind, Target::Seeded)));
    }
    for kind in [ReciprocalKind::Vd3kfav, ReciprocalKind::Jwgeagg] {
        for target in [Target::Fib, Target::Lucas] {
            rows.push(Box::new(ReciprocalIdentity::new(kind, target)));
        }
    }
    for target in [Target::Seeded, Target::Fib, Target::Lucas] {
        for kind in ReciprocalKind::SELF_DENOMINATOR {
            rows.push(Box::new(ReciprocalIdentity::new(kind, target)));
        }
    }
}

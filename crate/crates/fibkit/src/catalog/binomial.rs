//! The six binomial-transform identities and their pure-Fibonacci and
//! Fibonacci–Lucas specializations.
//!
//! Each identity instantiates a [`BinomialForm`] of the generic transform
//! with one of two recurrence frames read off the master identity:
//!
//! - the "minus" frame `h = F(a-b)`, `f1 = F(m-b)`,
//!   `f2 = (-1)^(a+b+1) F(m-a)`, `alpha = m-a`, `beta = m-b`;
//! - the "plus" frame obtained from it by the substitution `a <-> -b`.
//!
//! Vanishing frame entries are fine here: the printed sums stay well-defined,
//! so evaluation goes through the raw (unchecked) transform route. Where the
//! printed display differs from the raw transform output by a unit factor
//! `(-1)^((a+b+1)k)`, both sides are multiplied by it so reported values match
//! the display exactly.

use super::{
    CheckOutcome, Family, Identity, IdentityDescriptor, ParamName, ParamPoint, Slot, Target,
};
use crate::combinators::{binomial_sum_raw, BinomialForm, RecurrenceFrame};
use crate::sequences::{apply_sign, parity_negative, Sequences};

/// The six binomial-transform identities, keyed by their display labels
/// (`mid1`/`mid2` for the two unlabeled middle displays).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialKind {
    A4qiltd,
    Mid1,
    Kf3kgmr,
    Sa53jkd,
    Mid2,
    Kh2azr9,
}

impl BinomialKind {
    pub const ALL: [BinomialKind; 6] = [
        BinomialKind::A4qiltd,
        BinomialKind::Mid1,
        BinomialKind::Kf3kgmr,
        BinomialKind::Sa53jkd,
        BinomialKind::Mid2,
        BinomialKind::Kh2azr9,
    ];

    pub fn base_id(self) -> &'static str {
        match self {
            BinomialKind::A4qiltd => "a4qiltd",
            BinomialKind::Mid1 => "mid1",
            BinomialKind::Kf3kgmr => "kf3kgmr",
            BinomialKind::Sa53jkd => "sa53jkd",
            BinomialKind::Mid2 => "mid2",
            BinomialKind::Kh2azr9 => "kh2azr9",
        }
    }

    fn formula(self) -> &'static str {
        match self {
            BinomialKind::A4qiltd => {
                "sum_{j=0..k} (-1)^((a+b+1)(k-j)) C(k,j) F(m-b)^j F(m-a)^(k-j) \
                 G(n-(m-b)k+(a-b)j) = F(a-b)^k G(n)"
            }
            BinomialKind::Mid1 => {
                "sum_{j=0..k} (-1)^((a+b)j) C(k,j) F(a-b)^j F(m-a)^(k-j) \
                 G(n-(a-b)k+(m-b)j) = (-1)^((a+b)k) F(m-b)^k G(n)"
            }
            BinomialKind::Kf3kgmr => {
                "sum_{j=0..k} (-1)^j C(k,j) F(a-b)^j F(m-b)^(k-j) \
                 G(n+(a-b)k+(m-a)j) = (-1)^((a+b)k) F(m-a)^k G(n)"
            }
            BinomialKind::Sa53jkd => {
                "sum_{j=0..k} (-1)^((a+b+1)(k-j)) C(k,j) F(m+a)^j F(m+b)^(k-j) \
                 G(n-(m+a)k+(a-b)j) = F(a-b)^k G(n)"
            }
            BinomialKind::Mid2 => {
                "sum_{j=0..k} (-1)^((a+b)j) C(k,j) F(a-b)^j F(m+b)^(k-j) \
                 G(n-(a-b)k+(m+a)j) = (-1)^((a+b)k) F(m+a)^k G(n)"
            }
            BinomialKind::Kh2azr9 => {
                "sum_{j=0..k} (-1)^j C(k,j) F(a-b)^j F(m+a)^(k-j) \
                 G(n+(a-b)k+(m+b)j) = (-1)^((a+b)k) F(m+b)^k G(n)"
            }
        }
    }

    /// Transform form plus whether the display carries the extra unit factor.
    fn route(self) -> (FrameSide, BinomialForm, bool) {
        match self {
            BinomialKind::A4qiltd => (FrameSide::Minus, BinomialForm::A, false),
            BinomialKind::Mid1 => (FrameSide::Minus, BinomialForm::B, true),
            BinomialKind::Kf3kgmr => (FrameSide::Minus, BinomialForm::C, false),
            BinomialKind::Sa53jkd => (FrameSide::Plus, BinomialForm::A, false),
            BinomialKind::Mid2 => (FrameSide::Plus, BinomialForm::B, true),
            BinomialKind::Kh2azr9 => (FrameSide::Plus, BinomialForm::C, false),
        }
    }
}

/// Which of the two master-identity frames an instantiation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum FrameSide {
    /// `f1 = F(m-b)`, `f2 = (-1)^(a+b+1) F(m-a)`, shifts `(m-a, m-b)`.
    Minus,
    /// `f1 = F(m+a)`, `f2 = (-1)^(a+b+1) F(m+b)`, shifts `(m+b, m+a)`.
    Plus,
}

/// Builds the master-identity recurrence frame at a point. Signs are folded
/// into the coefficient values.
pub(crate) fn master_frame(side: FrameSide, seqs: &dyn Sequences, p: &ParamPoint) -> RecurrenceFrame {
    let h = seqs.fib(p.a - p.b);
    match side {
        FrameSide::Minus => RecurrenceFrame {
            h,
            f1: seqs.fib(p.m - p.b),
            f2: apply_sign(p.a + p.b + 1, seqs.fib(p.m - p.a)),
            alpha: p.m - p.a,
            beta: p.m - p.b,
        },
        FrameSide::Plus => RecurrenceFrame {
            h,
            f1: seqs.fib(p.m + p.a),
            f2: apply_sign(p.a + p.b + 1, seqs.fib(p.m + p.b)),
            alpha: p.m + p.b,
            beta: p.m + p.a,
        },
    }
}

pub(crate) struct BinomialIdentity {
    desc: IdentityDescriptor,
    kind: BinomialKind,
    target: Target,
}

impl BinomialIdentity {
    pub(crate) fn new(kind: BinomialKind, target: Target) -> Self {
        let desc = IdentityDescriptor {
            id: format!("{}{}", kind.base_id(), target.id_suffix()),
            formula: target.specialize_formula(kind.formula()),
            family: Family::BinomialSum,
            params: vec![ParamName::A, ParamName::B, ParamName::M, ParamName::N, ParamName::K],
            constraints: "k >= 0".to_owned(),
            slots: target.slots(&[Slot::Fib]),
            erratum: None,
            printed_form: false,
        };
        Self { desc, kind, target }
    }
}

impl Identity for BinomialIdentity {
    fn descriptor(&self) -> &IdentityDescriptor {
        &self.desc
    }

    fn eval(&self, seqs: &dyn Sequences, point: &ParamPoint) -> CheckOutcome {
        let seed = self.target.effective_seed(point);
        let mut point = point.clone();
        point.seed = seed.clone();
        let (side, form, unit) = self.kind.route();
        let frame = master_frame(side, seqs, &point);
        let x = |i: i64| seqs.gen(&seed, i);
        let (mut lhs, mut rhs) = binomial_sum_raw(&frame, &x, point.n, point.k, form);
        if unit && parity_negative((point.a + point.b + 1) * point.k as i64) {
            lhs = -lhs;
            rhs = -rhs;
        }
        CheckOutcome::from_int_sides(&self.desc.id, point, lhs, rhs)
    }
}

pub(crate) fn register_all(rows: &mut Vec<Box<dyn Identity>>) {
    for target in [Target::Seeded, Target::Fib, Target::Lucas] {
        for kind in BinomialKind::ALL {
            rows.push(Box::new(BinomialIdentity::new(kind, target)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{eval_binomial_theorem, Value};
    use super::*;
    use crate::sequences::{fib, gen, SeedPair};
    use num_bigint::BigInt;

    fn int(v: i64) -> Option<Value> {
        Some(Value::Int(BigInt::from(v)))
    }

    #[test]
    fn kh2azr9_frozen_point() {
        // k=1, a=1, b=0, m=1, n=1, target F: F(2)F(2) - F(1)F(3) = -1 on both sides.
        let p = ParamPoint { a: 1, b: 0, m: 1, n: 1, k: 1, ..Default::default() };
        let out = eval_binomial_theorem(BinomialKind::Kh2azr9, &p, Target::Fib);
        assert!(out.holds());
        assert_eq!(out.lhs, int(-1));
        assert_eq!(out.rhs, int(-1));
    }

    #[test]
    fn k_zero_degenerates_to_sides_g_n() {
        let seed = SeedPair::new(3, 7).unwrap();
        let p = ParamPoint { a: 2, b: -1, m: 4, n: 3, k: 0, seed: seed.clone() };
        for kind in BinomialKind::ALL {
            let out = eval_binomial_theorem(kind, &p, Target::Seeded);
            assert!(out.holds(), "{kind:?}");
            assert_eq!(out.lhs, Some(Value::Int(gen(&seed, 3))), "{kind:?}");
        }
    }

    #[test]
    fn singular_frames_still_evaluate() {
        // a = b zeroes h; m = a zeroes one coefficient. The sums remain
        // well-defined and the identities still hold.
        let seed = SeedPair::new(-4, 5).unwrap();
        for p in [
            ParamPoint { a: 2, b: 2, m: 3, n: 1, k: 2, seed: seed.clone() },
            ParamPoint { a: 3, b: 1, m: 3, n: 2, k: 3, seed: seed.clone() },
            ParamPoint { a: 1, b: -1, m: -1, n: 0, k: 2, seed: seed.clone() },
        ] {
            for kind in BinomialKind::ALL {
                let out = eval_binomial_theorem(kind, &p, Target::Seeded);
                assert!(out.holds(), "{kind:?} at {p}");
            }
        }
    }

    #[test]
    fn six_identities_hold_on_a_small_grid_for_all_targets() {
        let seed = SeedPair::new(3, 7).unwrap();
        for kind in BinomialKind::ALL {
            for target in [Target::Seeded, Target::Fib, Target::Lucas] {
                for a in -2..=2 {
                    for b in -2..=2 {
                        for m in -2..=2 {
                            for n in -2..=2 {
                                for k in 0..=4u32 {
                                    let p = ParamPoint { a, b, m, n, k, seed: seed.clone() };
                                    let out = eval_binomial_theorem(kind, &p, target);
                                    assert!(
                                        out.holds(),
                                        "{kind:?} {target:?} failed at {p}: {:?} vs {:?}",
                                        out.lhs,
                                        out.rhs
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn halton_embedding_at_b_zero() {
        // kh2azr9 with target F at b = 0: the closed side collapses to
        // (-1)^(ak) F(m)^k F(n), matching the sum with the b-terms zeroed.
        for a in -4..=4i64 {
            for m in -4..=4i64 {
                for n in -4..=4i64 {
                    for k in 0..=4u32 {
                        let p = ParamPoint { a, b: 0, m, n, k, ..Default::default() };
                        let out = eval_binomial_theorem(BinomialKind::Kh2azr9, &p, Target::Fib);
                        assert!(out.holds());
                        let closed = apply_sign(
                            a * k as i64,
                            num_traits::pow::pow(fib(m), k as usize) * fib(n),
                        );
                        assert_eq!(out.rhs, Some(Value::Int(closed)), "a={a} m={m} n={n} k={k}");
                    }
                }
            }
        }
    }
}

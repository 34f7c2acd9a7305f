//! Generic evaluators for the three families of summation transforms used by
//! the identity catalog, parameterized by an abstract three-term recurrence
//! `h * X(n) = f1 * X(n - alpha) + f2 * X(n - beta)`.
//!
//! Each evaluator returns *both sides* of its equation, computed exactly, so
//! callers can compare them rather than trust either route. The checked entry
//! points reject frames with a zero `h`, `f1`, or `f2`; the catalog uses
//! crate-internal raw variants where the printed identities stay well-defined
//! even with vanishing coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::sequences::{apply_sign, Index};
use crate::Error;

/// Coefficients and index shifts of the abstract recurrence
/// `h * X(n) = f1 * X(n - alpha) + f2 * X(n - beta)`.
///
/// Entries are concrete integers (already-evaluated sequence values), not
/// symbolic expressions; signs such as `(-1)^(a+b+1)` are folded into them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceFrame {
    pub h: BigInt,
    pub f1: BigInt,
    pub f2: BigInt,
    pub alpha: i64,
    pub beta: i64,
}

impl RecurrenceFrame {
    pub fn new(
        h: impl Into<BigInt>,
        f1: impl Into<BigInt>,
        f2: impl Into<BigInt>,
        alpha: i64,
        beta: i64,
    ) -> Self {
        Self { h: h.into(), f1: f1.into(), f2: f2.into(), alpha, beta }
    }

    fn ensure_nonzero(&self) -> Result<(), Error> {
        for (entry, v) in [("h", &self.h), ("f1", &self.f1), ("f2", &self.f2)] {
            if v.is_zero() {
                return Err(Error::ZeroFrameEntry { entry });
            }
        }
        Ok(())
    }
}

/// Abstract sequence accessor: a total map from index to value on the window
/// being evaluated. Implemented for any `Fn(i64) -> BigInt`.
pub trait SequenceFn {
    fn at(&self, n: Index) -> BigInt;
}

impl<F: Fn(Index) -> BigInt> SequenceFn for F {
    fn at(&self, n: Index) -> BigInt {
        self(n)
    }
}

/// Exact binomial coefficient `C(k, j)`.
pub fn binomial(k: i64, j: i64) -> Result<BigInt, Error> {
    if j < 0 || j > k {
        return Err(Error::OutOfRange { k, j });
    }
    let j = j.min(k - j) as u64;
    let mut c = BigInt::one();
    for i in 1..=j {
        c = c * (k as u64 - j + i) / i;
    }
    Ok(c)
}

/// Row `[C(k, 0), ..., C(k, k)]` of Pascal's triangle.
fn pascal_row(k: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(k as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for j in 0..k as u64 {
        c = c * (k as u64 - j) / (j + 1);
        row.push(c.clone());
    }
    row
}

/// `[1, base, base^2, ..., base^up_to]` by repeated multiplication.
fn powers(base: &BigInt, up_to: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(BigInt::one());
    for _ in 0..up_to {
        let next = out.last().unwrap() * base;
        out.push(next);
    }
    out
}

/// The three binomial-transform equations over a recurrence frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinomialForm {
    /// `sum_j C(k,j) f2^(k-j) f1^j X(n - beta*k + (beta-alpha)*j) = h^k X(n)`
    A,
    /// `sum_j (-1)^j C(k,j) f2^(k-j) h^j X(n + (alpha-beta)*k + beta*j) = (-1)^k f1^k X(n)`
    B,
    /// `sum_j (-1)^j C(k,j) f1^(k-j) h^j X(n + (beta-alpha)*k + alpha*j) = (-1)^k f2^k X(n)`
    C,
}

/// Both sides of the selected binomial-transform equation, evaluated exactly.
///
/// Errors with [`Error::ZeroFrameEntry`] if any of `h`, `f1`, `f2` vanishes.
pub fn lemma_binomial_sum(
    frame: &RecurrenceFrame,
    x: &dyn SequenceFn,
    n: Index,
    k: u32,
    form: BinomialForm,
) -> Result<(BigInt, BigInt), Error> {
    frame.ensure_nonzero()?;
    Ok(binomial_sum_raw(frame, x, n, k, form))
}

pub(crate) fn binomial_sum_raw(
    frame: &RecurrenceFrame,
    x: &dyn SequenceFn,
    n: Index,
    k: u32,
    form: BinomialForm,
) -> (BigInt, BigInt) {
    let RecurrenceFrame { h, f1, f2, alpha, beta } = frame;
    let row = pascal_row(k);
    let kk = k as i64;
    // Per form: coefficient bases (outer^(k-j) * inner^j), the index map
    // j -> argument of X, an alternating sign, and the closed side.
    let (outer, inner, index_at, alternating, rhs): (
        &BigInt,
        &BigInt,
        Box<dyn Fn(i64) -> i64>,
        bool,
        BigInt,
    ) = match form {
        BinomialForm::A => (
            f2,
            f1,
            Box::new(move |j| n - beta * kk + (beta - alpha) * j),
            false,
            powers(h, k).pop().unwrap() * x.at(n),
        ),
        BinomialForm::B => (
            f2,
            h,
            Box::new(move |j| n + (alpha - beta) * kk + beta * j),
            true,
            apply_sign(kk, powers(f1, k).pop().unwrap() * x.at(n)),
        ),
        BinomialForm::C => (
            f1,
            h,
            Box::new(move |j| n + (beta - alpha) * kk + alpha * j),
            true,
            apply_sign(kk, powers(f2, k).pop().unwrap() * x.at(n)),
        ),
    };
    let outer_pows = powers(outer, k);
    let inner_pows = powers(inner, k);
    let mut lhs = BigInt::zero();
    for j in 0..=k {
        let mut term =
            &row[j as usize] * &outer_pows[(k - j) as usize] * &inner_pows[j as usize];
        term *= x.at(index_at(j as i64));
        if alternating {
            term = apply_sign(j as i64, term);
        }
        lhs += term;
    }
    (lhs, rhs)
}

/// The telescoping-sum equations: the two-sequence form plus the three
/// single-sequence routes (stepping by `alpha`, by `beta`, or alternating
/// with stride `beta - alpha`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TelescopingForm {
    /// `f2 * sum_j f1^(k-j) h^j Y(n - k*alpha - beta + alpha*j)
    ///    = h^(k+1) X(n) - f1^(k+1) X(n - (k+1)*alpha)`
    Xy,
    /// [`TelescopingForm::Xy`] with `Y = X`.
    XxAlpha,
    /// `f1 * sum_j f2^(k-j) h^j X(n - k*beta - alpha + beta*j)
    ///    = h^(k+1) X(n) - f2^(k+1) X(n - (k+1)*beta)`
    XxBeta,
    /// `h * sum_j (-1)^j f2^(k-j) f1^j X(n - (beta-alpha)*k + alpha + (beta-alpha)*j)
    ///    = (-1)^k f1^(k+1) X(n) + f2^(k+1) X(n - (beta-alpha)*(k+1))`
    XxAlt,
}

/// Both sides of the selected telescoping equation, evaluated exactly.
pub fn lemma_telescoping_sum(
    frame: &RecurrenceFrame,
    x: &dyn SequenceFn,
    y: &dyn SequenceFn,
    n: Index,
    k: u32,
    form: TelescopingForm,
) -> Result<(BigInt, BigInt), Error> {
    frame.ensure_nonzero()?;
    Ok(telescoping_sum_raw(frame, x, y, n, k, form))
}

pub(crate) fn telescoping_sum_raw(
    frame: &RecurrenceFrame,
    x: &dyn SequenceFn,
    y: &dyn SequenceFn,
    n: Index,
    k: u32,
    form: TelescopingForm,
) -> (BigInt, BigInt) {
    let RecurrenceFrame { h, f1, f2, alpha, beta } = frame;
    let kk = k as i64;
    match form {
        TelescopingForm::Xy | TelescopingForm::XxAlpha => {
            let sum_seq: &dyn SequenceFn = if matches!(form, TelescopingForm::Xy) { y } else { x };
            let f1p = powers(f1, k + 1);
            let hp = powers(h, k);
            let mut sum = BigInt::zero();
            for j in 0..=k as i64 {
                sum += &f1p[(kk - j) as usize]
                    * &hp[j as usize]
                    * sum_seq.at(n - kk * alpha - beta + alpha * j);
            }
            let lhs = f2 * sum;
            let rhs = h * &hp[k as usize] * x.at(n) - &f1p[k as usize + 1] * x.at(n - (kk + 1) * alpha);
            (lhs, rhs)
        }
        TelescopingForm::XxBeta => {
            let f2p = powers(f2, k + 1);
            let hp = powers(h, k);
            let mut sum = BigInt::zero();
            for j in 0..=k as i64 {
                sum += &f2p[(kk - j) as usize]
                    * &hp[j as usize]
                    * x.at(n - kk * beta - alpha + beta * j);
            }
            let lhs = f1 * sum;
            let rhs = h * &hp[k as usize] * x.at(n) - &f2p[k as usize + 1] * x.at(n - (kk + 1) * beta);
            (lhs, rhs)
        }
        TelescopingForm::XxAlt => {
            let stride = beta - alpha;
            let f1p = powers(f1, k + 1);
            let f2p = powers(f2, k + 1);
            let mut sum = BigInt::zero();
            for j in 0..=k as i64 {
                let term = &f2p[(kk - j) as usize]
                    * &f1p[j as usize]
                    * x.at(n - stride * kk + alpha + stride * j);
                sum += apply_sign(j, term);
            }
            let lhs = h * sum;
            let rhs = apply_sign(kk, &f1p[k as usize + 1] * x.at(n))
                + &f2p[k as usize + 1] * x.at(n - stride * (kk + 1));
            (lhs, rhs)
        }
    }
}

/// The reciprocal-sum equations, whose summands carry a product of two
/// sequence values in the denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReciprocalForm {
    /// Two-sequence form:
    /// `X(n) X(n - alpha*(k+1)) f2 * sum_j h^(k-j) f1^j
    ///    Y(n - beta - alpha*k + alpha*j)
    ///    / (X(n - alpha*k + alpha*j) X(n - alpha - alpha*k + alpha*j))
    ///  = h^(k+1) X(n) - f1^(k+1) X(n - alpha*(k+1))`
    R1,
    /// [`ReciprocalForm::R1`] with `Y = X`.
    Q1,
    /// Same telescope stepping by `beta`, numerator shifted by `alpha`:
    /// closed side `h^(k+1) X(n) - f2^(k+1) X(n - beta*(k+1))`.
    Q2,
    /// Alternating telescope with stride `beta - alpha`:
    /// closed side `f1^(k+1) X(n) + (-1)^k f2^(k+1) X(n - (beta-alpha)*(k+1))`.
    Q3,
}

/// Both sides of the selected reciprocal equation as exact rationals.
///
/// Denominator factors are checked term by term before any division; the
/// first vanishing factor is reported as [`Error::SingularSummand`].
pub fn lemma_reciprocal_sum(
    frame: &RecurrenceFrame,
    x: &dyn SequenceFn,
    y: &dyn SequenceFn,
    n: Index,
    k: u32,
    form: ReciprocalForm,
) -> Result<(BigRational, BigRational), Error> {
    frame.ensure_nonzero()?;
    let parts = reciprocal_sum_raw(frame, x, y, n, k, form)?;
    Ok((
        BigRational::new(parts.lhs_numer, parts.denom),
        BigRational::from_integer(parts.rhs),
    ))
}

/// Unreduced pieces of a reciprocal equation: the left side is the exact
/// rational `lhs_numer / denom`; the right side is an integer.
pub(crate) struct ReciprocalParts {
    pub lhs_numer: BigInt,
    pub denom: BigInt,
    pub rhs: BigInt,
}

impl ReciprocalParts {
    /// Exact equality of the two sides, by cross-multiplication.
    pub fn sides_equal(&self) -> bool {
        self.lhs_numer == &self.rhs * &self.denom
    }
}

pub(crate) fn reciprocal_sum_raw(
    frame: &RecurrenceFrame,
    x: &dyn SequenceFn,
    y: &dyn SequenceFn,
    n: Index,
    k: u32,
    form: ReciprocalForm,
) -> Result<ReciprocalParts, Error> {
    let RecurrenceFrame { h, f1, f2, alpha, beta } = frame;
    let kk = k as i64;
    // Common shape: denominators of term j are X(n - s*(k-j)) * X(n - s*(k-j+1))
    // for a form-specific stride s, so the participating values form the chain
    // C(i) = X(n - s*i), i = 0..=k+1, shared with both prefactor entries.
    let (stride, weight, numer_at, outer, inner, alternating): (
        i64,
        &BigInt,
        Box<dyn Fn(i64) -> i64>,
        &BigInt,
        &BigInt,
        bool,
    ) = match form {
        ReciprocalForm::R1 | ReciprocalForm::Q1 => (
            *alpha,
            f2,
            Box::new(move |j| n - beta - alpha * kk + alpha * j),
            h,
            f1,
            false,
        ),
        ReciprocalForm::Q2 => (
            *beta,
            f1,
            Box::new(move |j| n - alpha - beta * kk + beta * j),
            h,
            f2,
            false,
        ),
        ReciprocalForm::Q3 => {
            let s = beta - alpha;
            (
                s,
                h,
                Box::new(move |j| n + alpha - s * kk + s * j),
                f1,
                f2,
                true,
            )
        }
    };

    let chain: Vec<BigInt> = (0..=kk + 1).map(|i| x.at(n - stride * i)).collect();
    // Term j divides by chain[k-j] * chain[k-j+1]; scan in j order so the
    // reported singularity is the first offending term.
    for j in 0..=kk {
        for i in [kk - j, kk - j + 1] {
            if chain[i as usize].is_zero() {
                return Err(Error::SingularSummand { j: j as u32, index: n - stride * i });
            }
        }
    }

    // prefix[i] = C(0) * ... * C(i-1), suffix[i] = C(i) * ... * C(k+1);
    // the sum over the common denominator P = prefix[k+2] avoids any
    // intermediate division.
    let len = chain.len();
    let mut prefix = Vec::with_capacity(len + 1);
    prefix.push(BigInt::one());
    for c in &chain {
        let next = prefix.last().unwrap() * c;
        prefix.push(next);
    }
    let mut suffix = vec![BigInt::one(); len + 1];
    for i in (0..len).rev() {
        suffix[i] = &suffix[i + 1] * &chain[i];
    }
    let denom = prefix[len].clone();

    let outer_pows = powers(outer, k);
    let inner_pows = powers(inner, k);
    let mut sum = BigInt::zero();
    for j in 0..=kk {
        let lo = (kk - j) as usize;
        let cofactor = &prefix[lo] * &suffix[lo + 2];
        let mut term = &outer_pows[lo] * &inner_pows[j as usize] * y_or_x(form, x, y).at(numer_at(j))
            * cofactor;
        if alternating {
            term = apply_sign(j, term);
        }
        sum += term;
    }
    let lhs_numer = &chain[0] * &chain[len - 1] * weight * sum;

    let rhs = match form {
        ReciprocalForm::R1 | ReciprocalForm::Q1 => {
            powers(h, k + 1).pop().unwrap() * x.at(n)
                - powers(f1, k + 1).pop().unwrap() * x.at(n - alpha * (kk + 1))
        }
        ReciprocalForm::Q2 => {
            powers(h, k + 1).pop().unwrap() * x.at(n)
                - powers(f2, k + 1).pop().unwrap() * x.at(n - beta * (kk + 1))
        }
        ReciprocalForm::Q3 => {
            powers(f1, k + 1).pop().unwrap() * x.at(n)
                + apply_sign(kk, powers(f2, k + 1).pop().unwrap() * x.at(n - (beta - alpha) * (kk + 1)))
        }
    };
    Ok(ReciprocalParts { lhs_numer, denom, rhs })
}

fn y_or_x<'a>(
    form: ReciprocalForm,
    x: &'a dyn SequenceFn,
    y: &'a dyn SequenceFn,
) -> &'a dyn SequenceFn {
    if matches!(form, ReciprocalForm::R1) {
        y
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{fib, gen, lucas, SeedPair};
    use proptest::prelude::*;

    fn fib_fn() -> impl SequenceFn {
        fib
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binomial(7, 0).unwrap(), BigInt::one());
        assert_eq!(binomial(6, 3).unwrap(), BigInt::from(20));
        assert_eq!(binomial(3, 4), Err(Error::OutOfRange { k: 3, j: 4 }));
        assert_eq!(binomial(3, -1), Err(Error::OutOfRange { k: 3, j: -1 }));
    }

    proptest! {
        #[test]
        fn binomial_pascal_recurrence(k in 1i64..=40, j in 1i64..=39) {
            prop_assume!(j < k);
            let c = binomial(k, j).unwrap();
            prop_assert_eq!(c, binomial(k - 1, j - 1).unwrap() + binomial(k - 1, j).unwrap());
        }
    }

    #[test]
    fn binomial_sum_k_zero_is_trivial() {
        let frame = RecurrenceFrame::new(3, 5, 7, 2, 1);
        let (l, r) = lemma_binomial_sum(&frame, &fib_fn(), 9, 0, BinomialForm::A).unwrap();
        assert_eq!(l, fib(9));
        assert_eq!(r, fib(9));
    }

    #[test]
    fn binomial_sum_frozen_example() {
        // Frame from a = 2, b = 1, m = 3: h = F(1), f1 = F(2), f2 = (+1) F(1),
        // alpha = 1, beta = 2. Form A at n = 4, k = 1 gives both sides 3.
        let frame = RecurrenceFrame::new(1, 1, 1, 1, 2);
        let (l, r) = lemma_binomial_sum(&frame, &fib_fn(), 4, 1, BinomialForm::A).unwrap();
        assert_eq!(l, BigInt::from(3));
        assert_eq!(r, BigInt::from(3));
    }

    #[test]
    fn zero_frame_entry_rejected() {
        let frame = RecurrenceFrame::new(1, 0, 1, 1, 2);
        assert_eq!(
            lemma_binomial_sum(&frame, &fib_fn(), 4, 1, BinomialForm::A).unwrap_err(),
            Error::ZeroFrameEntry { entry: "f1" }
        );
        let frame = RecurrenceFrame::new(0, 1, 1, 1, 2);
        assert!(matches!(
            lemma_telescoping_sum(&frame, &fib_fn(), &fib_fn(), 3, 2, TelescopingForm::XxAlpha),
            Err(Error::ZeroFrameEntry { entry: "h" })
        ));
    }

    #[test]
    fn telescoping_k_zero_is_the_recurrence() {
        // Fibonacci recurrence as a frame: X(n) = X(n-1) + X(n-2).
        let frame = RecurrenceFrame::new(1, 1, 1, 1, 2);
        for n in -6..=6 {
            let (l, r) =
                lemma_telescoping_sum(&frame, &fib_fn(), &fib_fn(), n, 0, TelescopingForm::XxAlpha)
                    .unwrap();
            assert_eq!(l, fib(n - 2), "n = {n}");
            assert_eq!(r, fib(n) - fib(n - 1));
            assert_eq!(l, r);
        }
    }

    #[test]
    fn telescoping_frozen_xy_example() {
        // h = G(2), f1 = -G(1), f2 = F(1), alpha = 1, beta = 0 with seed (0,1);
        // X = F, Y(t) = F(t+1); n = 3, k = 2.
        let s = SeedPair::fibonacci();
        let frame = RecurrenceFrame::new(gen(&s, 2), -gen(&s, 1), 1, 1, 0);
        let y = |t: i64| fib(t + 1);
        let (l, r) =
            lemma_telescoping_sum(&frame, &fib_fn(), &y, 3, 2, TelescopingForm::Xy).unwrap();
        assert_eq!(l, BigInt::from(2));
        assert_eq!(l, r);
    }

    /// Frames built from genuine recurrences satisfy every form exactly.
    #[test]
    fn all_forms_hold_on_genuine_frames() {
        // The master relation written as a recurrence on G:
        // F(a-b) G(n) = F(m-b) G(n-(m-a)) + (-1)^(a+b+1) F(m-a) G(n-(m-b)).
        let seeds = [SeedPair::fibonacci(), SeedPair::lucas(), SeedPair::new(3, 7).unwrap()];
        for (a, b, m) in [(2i64, 1i64, 3i64), (1, -1, 4), (-2, 1, 5), (3, 0, -2)] {
            let frame = RecurrenceFrame::new(
                fib(a - b),
                fib(m - b),
                apply_sign(a + b + 1, fib(m - a)),
                m - a,
                m - b,
            );
            if frame.ensure_nonzero().is_err() {
                continue;
            }
            for s in &seeds {
                let x = |i: i64| gen(s, i);
                for n in -4..=4 {
                    for k in 0..=6u32 {
                        for form in [BinomialForm::A, BinomialForm::B, BinomialForm::C] {
                            let (l, r) = lemma_binomial_sum(&frame, &x, n, k, form).unwrap();
                            assert_eq!(l, r, "binomial {form:?} a={a} b={b} m={m} n={n} k={k}");
                        }
                        for form in [
                            TelescopingForm::XxAlpha,
                            TelescopingForm::XxBeta,
                            TelescopingForm::XxAlt,
                        ] {
                            let (l, r) =
                                lemma_telescoping_sum(&frame, &x, &x, n, k, form).unwrap();
                            assert_eq!(l, r, "telescoping {form:?} a={a} b={b} m={m} n={n} k={k}");
                        }
                        for form in [ReciprocalForm::Q1, ReciprocalForm::Q2, ReciprocalForm::Q3] {
                            match lemma_reciprocal_sum(&frame, &x, &x, n, k, form) {
                                Ok((l, r)) => {
                                    assert_eq!(l, r, "reciprocal {form:?} a={a} b={b} m={m} n={n} k={k}")
                                }
                                Err(Error::SingularSummand { .. }) => {}
                                Err(e) => panic!("unexpected error {e}"),
                            }
                        }
                    }
                }
            }
        }
    }

    /// A frame that does not satisfy the recurrence must not pretend to.
    #[test]
    fn broken_frame_fails_generically() {
        let frame = RecurrenceFrame::new(1, 2, 1, 1, 2);
        let x = |i: i64| lucas(i);
        let mut mismatches = 0;
        for n in 1..=6 {
            let (l, r) = lemma_binomial_sum(&frame, &x, n, 2, BinomialForm::A).unwrap();
            if l != r {
                mismatches += 1;
            }
        }
        assert!(mismatches >= 5, "broken frame looked valid");
    }

    #[test]
    fn reciprocal_detects_singular_denominator() {
        // Fibonacci frame stepping by alpha = 1 touches F(0) when the chain
        // crosses zero.
        let frame = RecurrenceFrame::new(1, 1, 1, 1, 2);
        let err = lemma_reciprocal_sum(&frame, &fib_fn(), &fib_fn(), 2, 3, ReciprocalForm::Q1)
            .unwrap_err();
        assert_eq!(err, Error::SingularSummand { j: 1, index: 0 });
    }

    #[test]
    fn reciprocal_k_zero_is_single_term_telescope() {
        let frame = RecurrenceFrame::new(1, 1, 1, 1, 2);
        let (l, r) =
            lemma_reciprocal_sum(&frame, &fib_fn(), &fib_fn(), 5, 0, ReciprocalForm::Q1).unwrap();
        assert_eq!(l, BigRational::from_integer(fib(3)));
        assert_eq!(r, BigRational::from_integer(fib(5) - fib(4)));
        assert_eq!(l, r);
    }

    proptest! {
        /// Canonical-form invariants of the exact rationals used by the
        /// reciprocal sums: reduced terms stay reduced through + and *.
        #[test]
        fn rational_canonical_form(p in -200i64..200, q in 1i64..200, r in -200i64..200, s in 1i64..200) {
            let a = BigRational::new(BigInt::from(p), BigInt::from(q));
            let b = BigRational::new(BigInt::from(r), BigInt::from(s));
            for v in [&a + &b, &a * &b, a.clone()] {
                let renorm = BigRational::new(v.numer().clone(), v.denom().clone());
                prop_assert_eq!(&renorm, &v);
                prop_assert_eq!(renorm.numer(), v.numer());
                prop_assert_eq!(renorm.denom(), v.denom());
                prop_assert!(v.denom() > &BigInt::zero());
                prop_assert!(num_integer::Integer::gcd(v.numer(), v.denom()).is_one() || v.numer().is_zero());
            }
        }
    }
}

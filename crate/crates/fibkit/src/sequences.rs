//! Exact evaluation of Fibonacci (`F`), Lucas (`L`), and arbitrary-seed
//! Fibonacci-like (`G`) numbers for any signed 64-bit index.
//!
//! Two independent evaluation routes are provided:
//!
//! - a **fast path** ([`fib`], [`lucas`], [`gen`]) built on doubling:
//!   `F(2n) = F(n) * (2*F(n+1) - F(n))` and `F(2n+1) = F(n)^2 + F(n+1)^2`,
//!   with negative indices handled by the reflections
//!   `F(-n) = (-1)^(n-1) F(n)` and `L(-n) = (-1)^n L(n)`, and seeded values
//!   by linearity `G(n) = G(0) * F(n-1) + G(1) * F(n)`;
//! - a **reference path** ([`fib_iterative`], [`lucas_iterative`],
//!   [`gen_iterative`]) that walks the defining recurrence term by term,
//!   forward for `n >= 0` and backward via `G(-n) = G(-n+2) - G(-n+1)`.
//!
//! The reference path exists so the fast path can be checked against pure
//! iteration; the verification harness drives that comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::Error;

/// Sequence subscript. All operations accept the full signed 64-bit range.
pub type Index = i64;

/// Initial terms `(G(0), G(1))` of a Fibonacci-like sequence.
///
/// The pair `(0, 0)` is rejected at construction, so a `SeedPair` always
/// defines a nontrivial sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeedPair {
    g0: BigInt,
    g1: BigInt,
}

impl SeedPair {
    /// Builds a seed pair, rejecting `(0, 0)`.
    pub fn new(g0: impl Into<BigInt>, g1: impl Into<BigInt>) -> Result<Self, Error> {
        let (g0, g1) = (g0.into(), g1.into());
        if g0.is_zero() && g1.is_zero() {
            return Err(Error::InvalidSeed);
        }
        Ok(Self { g0, g1 })
    }

    /// The seed `(0, 1)`, for which `G = F`.
    pub fn fibonacci() -> Self {
        Self { g0: BigInt::zero(), g1: BigInt::one() }
    }

    /// The seed `(2, 1)`, for which `G = L`.
    pub fn lucas() -> Self {
        Self { g0: BigInt::from(2), g1: BigInt::one() }
    }

    pub fn g0(&self) -> &BigInt {
        &self.g0
    }

    pub fn g1(&self) -> &BigInt {
        &self.g1
    }
}

impl fmt::Display for SeedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.g0, self.g1)
    }
}

impl FromStr for SeedPair {
    type Err = Error;

    /// Parses `"g0,g1"` with optional signs, e.g. `"3,7"` or `"-4,5"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidGrid(format!("seed `{s}` is not of the form g0,g1"));
        let (g0, g1) = s.split_once(',').ok_or_else(bad)?;
        let g0 = BigInt::from_str(g0.trim()).map_err(|_| bad())?;
        let g1 = BigInt::from_str(g1.trim()).map_err(|_| bad())?;
        SeedPair::new(g0, g1)
    }
}

/// `(F(n), F(n+1))` by binary doubling over the bits of `|n|`.
pub fn fib_pair(n: Index) -> (BigInt, BigInt) {
    if n >= 0 {
        return fib_pair_nonneg(n as u64);
    }
    let t = n.unsigned_abs();
    let (ft, ft1) = fib_pair_nonneg(t);
    // F(-t) = (-1)^(t-1) F(t);  F(-t+1) = (-1)^t F(t-1)  with F(t-1) = F(t+1) - F(t).
    let ftm1 = &ft1 - &ft;
    if t % 2 == 0 {
        (-ft, ftm1)
    } else {
        (ft, -ftm1)
    }
}

fn fib_pair_nonneg(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero(); // F(k)
    let mut b = BigInt::one(); // F(k+1)
    if n == 0 {
        return (a, b);
    }
    let bits = 64 - n.leading_zeros();
    for i in (0..bits).rev() {
        // (F(k), F(k+1)) -> (F(2k), F(2k+1))
        let c = &a * ((&b << 1) - &a);
        let d = &a * &a + &b * &b;
        if (n >> i) & 1 == 0 {
            a = c;
            b = d;
        } else {
            b = c + &d;
            a = d;
        }
    }
    (a, b)
}

/// Fibonacci number `F(n)` for any `n` in ℤ.
pub fn fib(n: Index) -> BigInt {
    fib_pair(n).0
}

/// Lucas number `L(n)` for any `n` in ℤ, via `L(n) = 2*F(n+1) - F(n)`.
pub fn lucas(n: Index) -> BigInt {
    let (f, f1) = fib_pair(n);
    (f1 << 1) - f
}

/// Seeded value `G(n)` for any `n` in ℤ, by seed linearity
/// `G(n) = G(0) * F(n-1) + G(1) * F(n)` (with `F(n-1) = F(n+1) - F(n)`).
pub fn gen(seed: &SeedPair, n: Index) -> BigInt {
    let (f, f1) = fib_pair(n);
    seed.g0() * (f1 - &f) + seed.g1() * f
}

/// `G(-n)` for `n >= 0` computed through `(-1)^n * (L(n) * G(0) - G(n))`
/// rather than by reflection or backward recurrence.
///
/// Must agree with [`gen`] at `-n`; the acceptance suite checks that.
///
/// # Panics
/// Panics if `n < 0`.
pub fn gen_negative_via_identity(seed: &SeedPair, n: Index) -> BigInt {
    assert!(n >= 0, "gen_negative_via_identity requires n >= 0, got {n}");
    let v = lucas(n) * seed.g0() - gen(seed, n);
    if n % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Walks `X(n) = X(n-1) + X(n-2)` from `(X(0), X(1)) = (x0, x1)` to `X(n)`,
/// term by term: forward additions for `n >= 0`, backward subtractions
/// (`X(j-1) = X(j+1) - X(j)`) for `n < 0`. No doubling, no reflection rules.
pub fn iterate_recurrence(x0: &BigInt, x1: &BigInt, n: Index) -> BigInt {
    let mut p = x0.clone();
    let mut q = x1.clone();
    if n >= 0 {
        for _ in 0..n {
            let next = &p + &q;
            p = q;
            q = next;
        }
        p
    } else {
        for _ in 0..n.unsigned_abs() {
            let prev = &q - &p;
            q = p;
            p = prev;
        }
        p
    }
}

/// `F(n)` by pure term-by-term iteration. Reference path.
pub fn fib_iterative(n: Index) -> BigInt {
    iterate_recurrence(&BigInt::zero(), &BigInt::one(), n)
}

/// `L(n)` by pure term-by-term iteration. Reference path.
pub fn lucas_iterative(n: Index) -> BigInt {
    iterate_recurrence(&BigInt::from(2), &BigInt::one(), n)
}

/// `G(n)` by pure term-by-term iteration from the seed. Reference path.
pub fn gen_iterative(seed: &SeedPair, n: Index) -> BigInt {
    iterate_recurrence(seed.g0(), seed.g1(), n)
}

/// Read access to the three sequence kinds. Identity evaluators take this
/// as a trait object so callers can swap in cached or audited providers;
/// all implementations must be pure in the inputs.
pub trait Sequences: Sync {
    fn fib(&self, n: Index) -> BigInt;
    fn lucas(&self, n: Index) -> BigInt;
    fn gen(&self, seed: &SeedPair, n: Index) -> BigInt;
}

/// Provider that computes every value directly on the doubling fast path.
#[derive(Clone, Copy, Debug, Default)]
pub struct Direct;

impl Sequences for Direct {
    fn fib(&self, n: Index) -> BigInt {
        fib(n)
    }

    fn lucas(&self, n: Index) -> BigInt {
        lucas(n)
    }

    fn gen(&self, seed: &SeedPair, n: Index) -> BigInt {
        gen(seed, n)
    }
}

/// Provider backed by a table of consecutive `F` values, filled once by the
/// fast path. Lookups outside the span fall back to [`Direct`].
///
/// `L` and `G` are derived per access from the neighbouring `F` entries
/// (`L(n) = F(n-1) + F(n+1)`, `G(n) = G(0) F(n-1) + G(1) F(n)`), so the
/// table stays a plain `F` range regardless of how many seeds are in play.
pub struct FibTable {
    lo: i64,
    f: Vec<BigInt>,
}

impl FibTable {
    /// Precomputes `F` on the inclusive index span `[lo - 1, hi + 1]`
    /// (one guard entry each side for the `L`/`G` neighbour reads).
    pub fn spanning(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty span {lo}..={hi}");
        let lo = lo - 1;
        let hi = hi + 1;
        let len = (hi - lo + 1) as usize;
        let mut f = Vec::with_capacity(len);
        let mut a = fib(lo);
        let mut b = fib(lo + 1);
        f.push(a.clone());
        for _ in 1..len {
            let next = &a + &b;
            f.push(b.clone());
            a = b;
            b = next;
        }
        Self { lo, f }
    }

    fn get(&self, n: i64) -> Option<&BigInt> {
        let off = n.checked_sub(self.lo)?;
        usize::try_from(off).ok().and_then(|i| self.f.get(i))
    }
}

impl Sequences for FibTable {
    fn fib(&self, n: Index) -> BigInt {
        match self.get(n) {
            Some(v) => v.clone(),
            None => fib(n),
        }
    }

    fn lucas(&self, n: Index) -> BigInt {
        match (self.get(n - 1), self.get(n + 1)) {
            (Some(a), Some(b)) => a + b,
            _ => lucas(n),
        }
    }

    fn gen(&self, seed: &SeedPair, n: Index) -> BigInt {
        match (self.get(n - 1), self.get(n)) {
            (Some(a), Some(b)) => seed.g0() * a + seed.g1() * b,
            _ => gen(seed, n),
        }
    }
}

/// `true` when `(-1)^e` is negative, i.e. `e` is odd. Works for negative `e`.
pub(crate) fn parity_negative(e: i64) -> bool {
    e & 1 == 1
}

/// Applies `(-1)^e` to a value, where the sign is decided by the parity of
/// `e` (which may be negative).
pub fn apply_sign(e: i64, v: BigInt) -> BigInt {
    if parity_negative(e) {
        -v
    } else {
        v
    }
}

/// Number of decimal digits of `|v|` (at least 1).
pub fn decimal_digits(v: &BigInt) -> usize {
    v.abs().to_string().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seed(g0: i64, g1: i64) -> SeedPair {
        SeedPair::new(g0, g1).unwrap()
    }

    #[test]
    fn fib_base_cases_and_reflection() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(1), BigInt::one());
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(fib(-4), BigInt::from(-3));
        assert_eq!(fib(-5), BigInt::from(5));
    }

    #[test]
    fn lucas_base_cases_and_reflection() {
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(1), BigInt::one());
        assert_eq!(lucas(5), BigInt::from(11));
        assert_eq!(lucas(-3), BigInt::from(-4));
    }

    #[test]
    fn gen_matches_named_sequences_and_direct_recurrence() {
        assert_eq!(gen(&SeedPair::fibonacci(), 7), BigInt::from(13));
        assert_eq!(gen(&SeedPair::lucas(), 4), BigInt::from(7));
        // 3, 7, 10, 17, 27, 44
        assert_eq!(gen(&seed(3, 7), 5), BigInt::from(44));
    }

    #[test]
    fn seed_zero_zero_rejected() {
        assert_eq!(SeedPair::new(0, 0), Err(Error::InvalidSeed));
        assert!("0,0".parse::<SeedPair>().is_err());
        assert_eq!("-4, 5".parse::<SeedPair>().unwrap(), seed(-4, 5));
    }

    #[test]
    fn negative_index_via_identity_examples() {
        assert_eq!(gen_negative_via_identity(&seed(3, 7), 1), BigInt::from(4));
        assert_eq!(
            gen_negative_via_identity(&SeedPair::fibonacci(), 4),
            BigInt::from(-3)
        );
        assert_eq!(
            gen_negative_via_identity(&SeedPair::lucas(), 3),
            BigInt::from(-4)
        );
    }

    #[test]
    fn iterative_walks_match_known_values() {
        assert_eq!(fib_iterative(10), BigInt::from(55));
        assert_eq!(fib_iterative(-4), BigInt::from(-3));
        assert_eq!(lucas_iterative(0), BigInt::from(2));
        assert_eq!(gen_iterative(&seed(3, 7), -1), BigInt::from(4));
    }

    #[test]
    fn fast_equals_iterative_across_window() {
        // Walk once, compare the doubling path at every index in [-300, 300].
        let seeds = [SeedPair::fibonacci(), SeedPair::lucas(), seed(3, 7), seed(-4, 5), seed(1, 0)];
        for s in &seeds {
            let mut p = gen_iterative(s, -300);
            let mut q = gen_iterative(s, -299);
            for n in -300..=300 {
                assert_eq!(gen(s, n), p, "seed {s} at n = {n}");
                let next = &p + &q;
                p = q;
                q = next;
            }
        }
        for n in -300..=300 {
            assert_eq!(fib(n), gen(&SeedPair::fibonacci(), n));
            assert_eq!(lucas(n), gen(&SeedPair::lucas(), n));
        }
    }

    #[test]
    fn factorization_f2n() {
        for n in -500..=500 {
            assert_eq!(fib(2 * n), fib(n) * lucas(n), "n = {n}");
        }
    }

    #[test]
    fn table_provider_agrees_with_direct() {
        let table = FibTable::spanning(-50, 50);
        let s = seed(3, 7);
        for n in -60..=60 {
            assert_eq!(table.fib(n), fib(n));
            assert_eq!(table.lucas(n), lucas(n));
            assert_eq!(table.gen(&s, n), gen(&s, n));
        }
    }

    proptest! {
        #[test]
        fn recurrence_holds(g0 in -50i64..=50, g1 in -50i64..=50, n in -500i64..=500) {
            prop_assume!(g0 != 0 || g1 != 0);
            let s = seed(g0, g1);
            prop_assert_eq!(gen(&s, n), gen(&s, n - 1) + gen(&s, n - 2));
        }

        #[test]
        fn seed_linearity(g0 in -50i64..=50, g1 in -50i64..=50, n in -500i64..=500) {
            prop_assume!(g0 != 0 || g1 != 0);
            let s = seed(g0, g1);
            prop_assert_eq!(gen(&s, n), g0 * fib(n - 1) + g1 * fib(n));
        }

        #[test]
        fn negative_index_identity_matches_gen(g0 in -50i64..=50, g1 in -50i64..=50, n in 0i64..=500) {
            prop_assume!(g0 != 0 || g1 != 0);
            let s = seed(g0, g1);
            prop_assert_eq!(gen_negative_via_identity(&s, n), gen(&s, -n));
        }
    }
}

//! Exact rational scalars.
//!
//! Every number in this crate is an arbitrary-precision rational
//! ([`num_rational::BigRational`]).  The representation is canonical —
//! lowest terms, positive denominator — so equality, ordering, and hashing
//! are structural and no tolerance ever enters a comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// The rational `p/q`.
///
/// # Panics
/// Panics if `q == 0`; use [`parse_rat`] for fallible construction.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `k` as a rational.
pub fn rint(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// Parse `"p"`, `"-p"`, or `"p/q"` into a rational in lowest terms.
///
/// Whitespace around the string or the slash is ignored.  A zero
/// denominator is reported as a parse error rather than a panic.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    let t = s.trim();
    let (num_part, den_part) = match t.split_once('/') {
        Some((nm, d)) => (nm.trim(), Some(d.trim())),
        None => (t, None),
    };
    let numer: BigInt = num_part
        .parse()
        .map_err(|e| crate::Error::Parse(format!("invalid rational `{t}`: {e}")))?;
    let denom: BigInt = match den_part {
        Some(d) => d
            .parse()
            .map_err(|e| crate::Error::Parse(format!("invalid rational `{t}`: {e}")))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(crate::Error::Parse(format!("zero denominator in `{t}`")));
    }
    Ok(Rat::new(numer, denom))
}

/// Render a rational as `"p"` or `"p/q"` (lowest terms, sign on the numerator).
pub fn rat_str(r: &Rat) -> String {
    r.to_string()
}

/// Is `r` a nonnegative integer (an element of ℕ, with 0 ∈ ℕ)?
pub fn is_natural(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for s in ["0", "7", "-7", "5/2", "-7/3", " 4 / 6 "] {
            let r = parse_rat(s).unwrap();
            let again = parse_rat(&rat_str(&r)).unwrap();
            assert_eq!(r, again);
        }
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert_eq!(rat_str(&rat(-7, 3)), "-7/3");
        assert_eq!(rat_str(&rint(5)), "5");
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn naturals() {
        assert!(is_natural(&rint(0)));
        assert!(is_natural(&rint(12)));
        assert!(!is_natural(&rint(-1)));
        assert!(!is_natural(&rat(1, 2)));
    }
}

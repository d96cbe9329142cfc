//! Overflow-checked binomials and the binomial upper bound on Ramsey numbers.

use crate::error::ArithmeticError;

/// `n choose r` in `u128`, or an overflow error. Never wraps.
pub fn binomial(n: u128, r: u128) -> Result<u128, ArithmeticError> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        let num = n - i;
        let den = i + 1;
        // acc * num is divisible by den; divide out common factors first so
        // the intermediate product only overflows when the result would
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        acc = a
            .checked_mul(num / d)
            .ok_or(ArithmeticError::Overflow("binomial coefficient"))?;
    }
    Ok(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Ramsey(a, b) ≤ C(a + b − 2, b − 1)`, the bound used in place of the
/// (unknown) exact Ramsey numbers.
pub fn ramsey_upper(a: u128, b: u128) -> Result<u128, ArithmeticError> {
    if a == 0 || b == 0 {
        return Err(ArithmeticError::InvalidArgument(format!(
            "Ramsey arguments must be positive, got ({a}, {b})"
        )));
    }
    let n = a
        .checked_add(b)
        .ok_or(ArithmeticError::Overflow("Ramsey bound"))?
        - 2;
    binomial(n, b - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Pascal's rule as an independent route to the same numbers.
    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut t = vec![vec![1u128]];
        for n in 1..=rows {
            let prev = &t[n - 1];
            let mut row = vec![1u128; n + 1];
            for r in 1..n {
                row[r] = prev[r - 1] + prev[r];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn small_values() {
        assert_eq!(ramsey_upper(3, 3), Ok(6));
        assert_eq!(ramsey_upper(4, 4), Ok(20));
        assert_eq!(ramsey_upper(1, 6), Ok(1));
        assert_eq!(ramsey_upper(7, 6), Ok(462));
        for b in 1..50 {
            assert_eq!(ramsey_upper(1, b), Ok(1));
        }
        assert!(ramsey_upper(0, 3).is_err());
    }

    #[test]
    fn matches_pascal_triangle() {
        let t = pascal(120);
        for (n, row) in t.iter().enumerate() {
            for (r, &want) in row.iter().enumerate() {
                assert_eq!(binomial(n as u128, r as u128), Ok(want), "C({n},{r})");
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        // C(200, 100) ≈ 9.05e58 > u128::MAX ≈ 3.4e38
        assert_eq!(
            binomial(200, 100),
            Err(ArithmeticError::Overflow("binomial coefficient"))
        );
        assert!(ramsey_upper(u128::MAX, 2).is_err());
        // C(130, 2) fits even though 130! does not
        assert_eq!(binomial(130, 2), Ok(8385));
    }

    proptest! {
        #[test]
        fn argument_symmetry(a in 1u128..60, b in 1u128..60) {
            let lhs = ramsey_upper(a, b);
            prop_assert_eq!(lhs.clone(), binomial(a + b - 2, a - 1));
            prop_assert_eq!(lhs, ramsey_upper(b, a));
        }
    }
}

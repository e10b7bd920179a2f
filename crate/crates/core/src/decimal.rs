//! Exact decimal rendering of non-negative ratios.

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::Natural;

/// How the last displayed digit is chosen.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rounding {
    /// Drop the digits past the last place.
    #[default]
    Truncate,
    /// Round to nearest, ties to the even digit.
    HalfEven,
}

/// A ratio rendered to a fixed number of decimal places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    /// True when `text` equals the ratio with nothing dropped.
    pub exact: bool,
}

/// Renders `numerator / denominator` with exactly `places` fractional digits.
///
/// # Panics
///
/// Panics if `denominator` is zero.
pub fn format_ratio(
    numerator: &Natural,
    denominator: &Natural,
    places: usize,
    rounding: Rounding,
) -> Decimal {
    assert!(!denominator.is_zero(), "zero denominator");
    let scale = num_traits::pow(Natural::from(10u32), places);
    let (mut scaled, remainder) = (numerator * &scale).div_rem(denominator);
    let exact = remainder.is_zero();
    if rounding == Rounding::HalfEven && !exact {
        let twice = &remainder * 2u32;
        let round_up = match twice.cmp(denominator) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => scaled.is_odd(),
        };
        if round_up {
            scaled += 1u32;
        }
    }
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let text = if places == 0 {
        int_part.to_string()
    } else {
        format!("{int_part}.{:0>places$}", frac_part.to_string())
    };
    Decimal { text, exact }
}

/// Percentage with two decimals, e.g. `29.75`.
pub fn format_percent(numerator: &Natural, denominator: &Natural, rounding: Rounding) -> Decimal {
    format_ratio(&(numerator * 100u32), denominator, 2, rounding)
}

//! Exact evaluation of the block-family lower-bound formulas.
//!
//! `lb_count(m) = m · 3^{2(m-1)}` counts the layer-family separators of
//! `block(m)` (one family of `9^{m-1}` per sacrificed layer). Gluing `ell`
//! copies on `n = 6·m·ell + 2` vertices multiplies these, so the growth per
//! vertex is `lb_count(m)^{1/(6m)}`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{FamilyError, LAYER_WIDTH};

/// Significant digits kept by [`growth_base`].
pub const GROWTH_DIGITS: u32 = 12;

/// `m · 3^{2(m-1)}`, exactly. Defined for every `m ≥ 1`.
pub fn lb_count(m: usize) -> BigUint {
    let m = u32::try_from(m).expect("layer count fits in u32");
    BigUint::from(m) * BigUint::from(3u32).pow(2 * m.saturating_sub(1))
}

/// `ln(lb_count(m))` as the term sum `ln m + 2(m-1)·ln 3`.
pub fn ln_lb_count(m: usize) -> f64 {
    (m as f64).ln() + 2.0 * (m as f64 - 1.0) * 3f64.ln()
}

/// Natural log of a big integer from its top 64 bits and a binary shift.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("64-bit value converts to f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `lb_count(m)^{1/(6m)}` rounded down to [`GROWTH_DIGITS`] significant
/// digits. The value always lies in `[1, 10)`, so it is stored as the
/// integer `mantissa = floor(base · 10^11)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthBase {
    pub m: usize,
    pub mantissa: u64,
}

impl GrowthBase {
    const SCALE_EXP: u32 = GROWTH_DIGITS - 1;

    pub fn to_f64(self) -> f64 {
        self.mantissa as f64 / 10f64.powi(Self::SCALE_EXP as i32)
    }

    /// Exact test of `base > value^{1/degree}` for the rounded-down base;
    /// a `true` answer therefore also holds for the exact base.
    pub fn exceeds_root(self, value: u64, degree: u32) -> bool {
        let lhs = BigUint::from(self.mantissa).pow(degree);
        let rhs = BigUint::from(value) * BigUint::from(10u32).pow(Self::SCALE_EXP * degree);
        lhs > rhs
    }

    /// Exact test of `base > mantissa / 10^decimals`.
    pub fn exceeds_decimal(self, mantissa: u64, decimals: u32) -> bool {
        let lhs = BigUint::from(self.mantissa) * BigUint::from(10u32).pow(decimals);
        let rhs = BigUint::from(mantissa) * BigUint::from(10u32).pow(Self::SCALE_EXP);
        lhs > rhs
    }
}

impl fmt::Display for GrowthBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = 10u64.pow(Self::SCALE_EXP);
        write!(
            f,
            "{}.{:0width$}",
            self.mantissa / scale,
            self.mantissa % scale,
            width = Self::SCALE_EXP as usize
        )
    }
}

/// `base^{6m} ≤ lb_count(m)` with `base = d / 10^11`, decided exactly.
fn scaled_power_fits(d: u64, m: usize, lb: &BigUint) -> bool {
    let exp = (LAYER_WIDTH * m) as u32;
    BigUint::from(d).pow(exp) <= lb * BigUint::from(10u32).pow(GrowthBase::SCALE_EXP * exp)
}

/// `lb_count(m)^{1/(6m)}`, rounded down to 12 significant digits.
///
/// A floating-point estimate seeds the mantissa; it is then corrected by
/// exact integer comparison so the result is the true floor.
pub fn growth_base(m: usize) -> Result<GrowthBase, FamilyError> {
    if m < 2 {
        return Err(FamilyError::TooFewLayers(m));
    }
    let lb = lb_count(m);
    let estimate = (ln_lb_count(m) / (LAYER_WIDTH * m) as f64).exp();
    let mut d = (estimate * 10f64.powi(GrowthBase::SCALE_EXP as i32)).floor() as u64;
    while !scaled_power_fits(d, m, &lb) {
        d -= 1;
    }
    while scaled_power_fits(d + 1, m, &lb) {
        d += 1;
    }
    Ok(GrowthBase { m, mantissa: d })
}

/// Exact comparison of `lb_count(p)^{1/(6p)}` against `lb_count(q)^{1/(6q)}`.
fn compare_bases(p: usize, q: usize) -> Ordering {
    let lhs = lb_count(p).pow(q as u32);
    let rhs = lb_count(q).pow(p as u32);
    lhs.cmp(&rhs)
}

/// The layer count in `2..=max_m` with the largest exact growth base;
/// ties go to the smaller `m`.
pub fn best_layer_count(max_m: usize) -> Result<(usize, GrowthBase), FamilyError> {
    if max_m < 2 {
        return Err(FamilyError::TooFewLayers(max_m));
    }
    let best = (3..=max_m).fold(2, |best, m| {
        if compare_bases(m, best) == Ordering::Greater {
            m
        } else {
            best
        }
    });
    Ok((best, growth_base(best)?))
}

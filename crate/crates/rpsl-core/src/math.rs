//! Float helpers that work without `std`.

#[cfg(feature = "std")]
pub fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn abs(x: f64) -> f64 {
    f64::from_bits(x.to_bits() & (u64::MAX >> 1))
}

/// True when `x` is finite and has no fractional part (|x| ≤ 2^53).
pub fn is_integer(x: f64) -> bool {
    x.is_finite() && abs(x) <= 9_007_199_254_740_992.0 && x == (x as i64) as f64
}

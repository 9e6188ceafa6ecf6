/// Exact `2^e` for integer exponents in the normal `f64` range.
pub fn pow2(e: i32) -> f64 {
    assert!((-1022..=1023).contains(&e), "2^{e} is outside the normal f64 range");
    f64::from_bits(((1023 + e) as u64) << 52)
}

use num_integer::Integer;

/// Mathematical floor of `a / b` for `b > 0`.
pub fn floor_div<T: Integer>(a: &T, b: &T) -> T {
    a.div_floor(b)
}

/// Mathematical ceiling of `a / b` for `b > 0`.
pub fn ceil_div<T: Integer>(a: &T, b: &T) -> T {
    Integer::div_ceil(a, b)
}

use num_traits::{PrimInt, Unsigned};

/// `max(x - y, 0)`.
#[inline]
pub fn tsub<T: PrimInt + Unsigned>(x: T, y: T) -> T {
    if x > y {
        x - y
    } else {
        T::zero()
    }
}

/// The set-level three-index map, shared by R and S:
/// `(a, b, c) ↦ (b + (a − c)₊, min(a, c), b + (c − a)₊)`.
#[inline]
pub fn r_map<T: PrimInt + Unsigned>(a: T, b: T, c: T) -> (T, T, T) {
    (b + tsub(a, c), a.min(c), b + tsub(c, a))
}

/// The set-level four-index map K.
///
/// With `x = (c − a + (d − b)₊)₊` the image is
/// `(x + a + b − d, c − x + d − min(a, c + x), min(a, c + x), b + (c + x − a)₊)`.
/// The two differences are taken in an order where they cannot underflow;
/// an underflow would mean the formula was mistranscribed and panics.
#[inline]
pub fn k_map<T: PrimInt + Unsigned>(a: T, b: T, c: T, d: T) -> (T, T, T, T) {
    let x = tsub(c + tsub(d, b), a);
    let m = a.min(c + x);
    let a2 = (x + a + b).checked_sub(&d).expect("k_map: negative first component");
    let b2 = (c + d).checked_sub(&(x + m)).expect("k_map: negative second component");
    (a2, b2, m, b + tsub(c + x, a))
}

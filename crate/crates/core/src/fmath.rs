//! Scalar math that works both under `std` and `libm`.

#[cfg(feature = "std")]
macro_rules! forward {
    ($($name:ident),*) => {
        $(
            #[inline(always)]
            pub fn $name(x: f64) -> f64 { f64::$name(x) }
        )*
    };
}

#[cfg(not(feature = "std"))]
macro_rules! forward {
    ($($name:ident),*) => {
        $(
            #[inline(always)]
            pub fn $name(x: f64) -> f64 { libm::$name(x) }
        )*
    };
}

forward!(sqrt, exp, cos, sin, cosh, sinh, tanh, atanh, floor);

#[cfg(feature = "std")]
#[inline(always)]
pub fn ln(x: f64) -> f64 {
    f64::ln(x)
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[cfg(feature = "std")]
#[inline(always)]
pub fn fabs(x: f64) -> f64 {
    f64::abs(x)
}

#[cfg(not(feature = "std"))]
#[inline(always)]
pub fn fabs(x: f64) -> f64 {
    libm::fabs(x)
}

/// x^n for n >= 0 by squaring; exact for n = 0, 1.
pub fn powi(x: f64, n: u32) -> f64 {
    let mut base = x;
    let mut exp = n;
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

//! Exact phases and scalar products.

use std::fmt;

/// A fourth root of unity i^k, the only global phases that ever arise here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(k: u8) -> Self {
        Phase(k % 4)
    }

    /// Exponent k with the value i^k, in 0..4.
    pub fn exponent(self) -> u8 {
        self.0
    }

    /// Complex conjugate, i^k -> i^(-k).
    #[must_use]
    pub fn conj(self) -> Phase {
        Phase((4 - self.0) % 4)
    }

    #[must_use]
    pub fn negated(self) -> Phase {
        Phase((self.0 + 2) % 4)
    }

    pub fn is_real(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "1",
            1 => "i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// An exact scalar-product value: `num / 2^log2_den`, times i when `imag`.
///
/// Every amplitude and overlap in this crate is of this form, so equality
/// is decidable and no rounding ever occurs. Comparison is by value, not
/// by representation: 2/4 equals 1/2.
#[derive(Debug, Clone, Copy)]
pub struct Scalar {
    num: i128,
    log2_den: u32,
    imag: bool,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: 0,
            log2_den: 0,
            imag: false,
        }
    }

    pub fn one() -> Self {
        Scalar::integer(1)
    }

    pub fn integer(value: i128) -> Self {
        Scalar {
            num: value,
            log2_den: 0,
            imag: false,
        }
    }

    /// `phase * num / 2^log2_den`, with the real part of the phase folded
    /// into the numerator's sign.
    pub fn new(num: i128, log2_den: u32, phase: Phase) -> Self {
        if num == 0 {
            return Scalar::zero();
        }
        let (sign, imag) = match phase.exponent() {
            0 => (1, false),
            1 => (1, true),
            2 => (-1, false),
            _ => (-1, true),
        };
        Scalar {
            num: sign * num,
            log2_den,
            imag,
        }
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn log2_denominator(&self) -> u32 {
        self.log2_den
    }

    pub fn is_imaginary(&self) -> bool {
        self.imag
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Lowest-terms form (odd numerator or zero, minimal denominator).
    pub fn reduced(&self) -> (i128, u32, bool) {
        if self.num == 0 {
            return (0, 0, false);
        }
        let mut num = self.num;
        let mut den = self.log2_den;
        while den > 0 && num % 2 == 0 {
            num /= 2;
            den -= 1;
        }
        (num, den, self.imag)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.reduced() == other.reduced()
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den, imag) = self.reduced();
        if num == 0 {
            return f.write_str("0");
        }
        let unit = if imag { "i" } else { "" };
        if den == 0 {
            if imag && num.abs() == 1 {
                return write!(f, "{}i", if num < 0 { "-" } else { "" });
            }
            return write!(f, "{num}{unit}");
        }
        if imag && num.abs() == 1 {
            return write!(f, "{}i/{}", if num < 0 { "-" } else { "" }, 1u128 << den);
        }
        write!(f, "{num}{unit}/{}", 1u128 << den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_algebra() {
        assert_eq!(Phase::I * Phase::I, Phase::MINUS_ONE);
        assert_eq!(Phase::I.conj(), Phase::MINUS_I);
        assert_eq!(Phase::MINUS_ONE.conj(), Phase::MINUS_ONE);
        assert!(Phase::MINUS_ONE.is_real());
        assert!(!Phase::MINUS_I.is_real());
    }

    #[test]
    fn value_equality_ignores_representation() {
        assert_eq!(Scalar::new(2, 2, Phase::ONE), Scalar::new(1, 1, Phase::ONE));
        assert_eq!(Scalar::new(-4, 2, Phase::ONE), Scalar::integer(-1));
        assert_eq!(Scalar::new(4, 2, Phase::MINUS_ONE), Scalar::integer(-1));
        assert_ne!(Scalar::new(1, 1, Phase::I), Scalar::new(1, 1, Phase::ONE));
        assert_eq!(Scalar::new(0, 5, Phase::I), Scalar::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::new(-2, 2, Phase::ONE).to_string(), "-1/2");
        assert_eq!(Scalar::new(8, 3, Phase::ONE).to_string(), "1");
        assert_eq!(Scalar::new(1, 2, Phase::I).to_string(), "i/4");
        assert_eq!(Scalar::new(3, 3, Phase::MINUS_I).to_string(), "-3i/8");
    }
}

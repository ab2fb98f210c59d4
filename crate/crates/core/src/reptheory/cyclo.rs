//! Integers of `Q(ζ3)` written `a + bζ` with `ζ² = -1 - ζ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Cyclo3 {
    pub a: i64,
    pub b: i64,
}

impl Cyclo3 {
    pub const ZERO: Cyclo3 = Cyclo3 { a: 0, b: 0 };
    pub const ONE: Cyclo3 = Cyclo3 { a: 1, b: 0 };
    pub const ZETA: Cyclo3 = Cyclo3 { a: 0, b: 1 };
    /// `ζ² = -1 - ζ`.
    pub const ZETA2: Cyclo3 = Cyclo3 { a: -1, b: -1 };

    pub const fn int(n: i64) -> Cyclo3 {
        Cyclo3 { a: n, b: 0 }
    }

    /// Complex conjugation, `ζ ↦ ζ²`.
    pub fn conj(self) -> Cyclo3 {
        Cyclo3 { a: self.a - self.b, b: -self.b }
    }

    pub fn as_int(self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }
}

impl Add for Cyclo3 {
    type Output = Cyclo3;
    fn add(self, o: Cyclo3) -> Cyclo3 {
        Cyclo3 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Cyclo3 {
    type Output = Cyclo3;
    fn sub(self, o: Cyclo3) -> Cyclo3 {
        Cyclo3 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Cyclo3 {
    type Output = Cyclo3;
    fn neg(self) -> Cyclo3 {
        Cyclo3 { a: -self.a, b: -self.b }
    }
}

impl Mul for Cyclo3 {
    type Output = Cyclo3;
    fn mul(self, o: Cyclo3) -> Cyclo3 {
        Cyclo3 { a: self.a * o.a - self.b * o.b, b: self.a * o.b + self.b * o.a - self.b * o.b }
    }
}

impl From<i64> for Cyclo3 {
    fn from(n: i64) -> Cyclo3 {
        Cyclo3::int(n)
    }
}

impl fmt::Display for Cyclo3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "z"),
            (0, -1) => write!(f, "-z"),
            (0, b) => write!(f, "{b}z"),
            (a, 1) => write!(f, "{a}+z"),
            (a, -1) => write!(f, "{a}-z"),
            (a, b) if b < 0 => write!(f, "{a}{b}z"),
            (a, b) => write!(f, "{a}+{b}z"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        let z = Cyclo3::ZETA;
        assert_eq!(z * z, Cyclo3::ZETA2);
        assert_eq!(z * z * z, Cyclo3::ONE);
        assert_eq!(Cyclo3::ONE + z + z * z, Cyclo3::ZERO);
        assert_eq!(z.conj(), Cyclo3::ZETA2);
        assert_eq!(z * z.conj(), Cyclo3::ONE);
    }
}

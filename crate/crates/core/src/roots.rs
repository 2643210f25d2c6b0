use std::fmt;

use serde::Serialize;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A root of unity `ζ_order^numerator`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootOfUnity {
    pub numerator: u32,
    pub order: u32,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { numerator: 0, order: 1 };
    pub const MINUS_ONE: RootOfUnity = RootOfUnity { numerator: 1, order: 2 };

    pub fn new(numerator: i64, order: u32) -> Self {
        assert!(order > 0, "root of unity of order 0");
        let num = numerator.rem_euclid(order as i64) as u32;
        let g = gcd(num, order);
        let g = if num == 0 { order } else { g };
        RootOfUnity {
            numerator: num / g,
            order: order / g,
        }
    }

    /// `+1` or `-1`.
    pub fn sign(positive: bool) -> Self {
        if positive {
            Self::ONE
        } else {
            Self::MINUS_ONE
        }
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn inverse(self) -> Self {
        Self::new(-(self.numerator as i64), self.order)
    }

    pub fn pow(self, k: i64) -> Self {
        Self::new(self.numerator as i64 * k, self.order)
    }

    /// `+1 -> Some(1)`, `-1 -> Some(-1)`, anything else `None`.
    pub fn as_sign(&self) -> Option<i32> {
        match self.order {
            1 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let order = self.order / gcd(self.order, rhs.order) * rhs.order;
        let num = self.numerator as i64 * (order / self.order) as i64 + rhs.numerator as i64 * (order / rhs.order) as i64;
        RootOfUnity::new(num, order)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 => write!(f, "1"),
            2 => write!(f, "-1"),
            m => write!(f, "ζ{m}^{}", self.numerator),
        }
    }
}

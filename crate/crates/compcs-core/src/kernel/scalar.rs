use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// An element `(a + b·i + (c + d·i)·√2) / 2^k` of the dyadic extension of `Z[i, √2]`.
///
/// Values are kept in canonical form (minimal `k`), so structural equality is
/// numeric equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactScalar {
    re_int: i64,
    im_int: i64,
    re_root2: i64,
    im_root2: i64,
    k: u32,
}

fn shl(x: i64, e: u32) -> i64 {
    if e == 0 {
        return x;
    }
    assert!(e < 63, "scalar denominator exponent overflow");
    x.checked_mul(1i64 << e).expect("scalar coefficient overflow")
}

fn gmul(a: i64, b: i64, c: i64, d: i64) -> (i64, i64) {
    let re = a
        .checked_mul(c)
        .and_then(|x| x.checked_sub(b.checked_mul(d)?))
        .expect("scalar coefficient overflow");
    let im = a
        .checked_mul(d)
        .and_then(|x| x.checked_add(b.checked_mul(c)?))
        .expect("scalar coefficient overflow");
    (re, im)
}

fn sum(x: i64, y: i64) -> i64 {
    x.checked_add(y).expect("scalar coefficient overflow")
}

impl ExactScalar {
    pub const ZERO: ExactScalar = ExactScalar { re_int: 0, im_int: 0, re_root2: 0, im_root2: 0, k: 0 };
    pub const ONE: ExactScalar = ExactScalar { re_int: 1, im_int: 0, re_root2: 0, im_root2: 0, k: 0 };
    pub const I: ExactScalar = ExactScalar { re_int: 0, im_int: 1, re_root2: 0, im_root2: 0, k: 0 };
    pub const SQRT2: ExactScalar = ExactScalar { re_int: 0, im_int: 0, re_root2: 1, im_root2: 0, k: 0 };
    pub const INV_SQRT2: ExactScalar = ExactScalar { re_int: 0, im_int: 0, re_root2: 1, im_root2: 0, k: 1 };
    pub const HALF: ExactScalar = ExactScalar { re_int: 1, im_int: 0, re_root2: 0, im_root2: 0, k: 1 };

    pub fn new(re_int: i64, im_int: i64, re_root2: i64, im_root2: i64, k: u32) -> Self {
        ExactScalar { re_int, im_int, re_root2, im_root2, k }.canonical()
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(n, 0, 0, 0, 0)
    }

    /// `i^q` for a quarter-turn count `q`.
    pub fn i_pow(q: u8) -> Self {
        match q % 4 {
            0 => Self::ONE,
            1 => Self::I,
            2 => -Self::ONE,
            _ => -Self::I,
        }
    }

    /// `2^-e`.
    pub fn pow2_inv(e: u32) -> Self {
        Self::new(1, 0, 0, 0, e)
    }

    pub fn parts(&self) -> (i64, i64, i64, i64, u32) {
        (self.re_int, self.im_int, self.re_root2, self.im_root2, self.k)
    }

    pub fn canonical(mut self) -> Self {
        if self.re_int == 0 && self.im_int == 0 && self.re_root2 == 0 && self.im_root2 == 0 {
            self.k = 0;
            return self;
        }
        while self.k > 0
            && self.re_int & 1 == 0
            && self.im_int & 1 == 0
            && self.re_root2 & 1 == 0
            && self.im_root2 & 1 == 0
        {
            self.re_int >>= 1;
            self.im_int >>= 1;
            self.re_root2 >>= 1;
            self.im_root2 >>= 1;
            self.k -= 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    pub fn is_real(&self) -> bool {
        self.im_int == 0 && self.im_root2 == 0
    }

    pub fn conj(&self) -> Self {
        ExactScalar { im_int: -self.im_int, im_root2: -self.im_root2, ..*self }
    }

    pub fn mul_inv_sqrt2(&self) -> Self {
        Self::new(
            shl(self.re_root2, 1),
            shl(self.im_root2, 1),
            self.re_int,
            self.im_int,
            self.k + 1,
        )
    }

    pub fn norm_sqr(&self) -> Self {
        *self * self.conj()
    }

    /// Exact quotient, when it lies in the ring.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        // |rhs|^2 = (p + q√2)/2^e, real.
        let n = rhs.norm_sqr();
        let (p, _, q, _, e) = n.parts();
        let num = *self * rhs.conj() * Self::new(p, 0, -q, 0, 0);
        let den = p.checked_mul(p)?.checked_sub(2i64.checked_mul(q)?.checked_mul(q)?)?;
        let (a, b, c, d, k) = num.parts();
        let sign = den.signum();
        let mut den = den.abs();
        let mut exp = 0u32;
        while den & 1 == 0 {
            den >>= 1;
            exp += 1;
        }
        if a % den != 0 || b % den != 0 || c % den != 0 || d % den != 0 {
            return None;
        }
        let quot = Self::new(sign * a / den, sign * b / den, sign * c / den, sign * d / den, k + exp);
        let mut out = quot;
        for _ in 0..e {
            out = out + out;
        }
        Some(out)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let s = core::f64::consts::SQRT_2;
        let mut scale = 1.0f64;
        for _ in 0..self.k {
            scale *= 0.5;
        }
        (
            (self.re_int as f64 + self.re_root2 as f64 * s) * scale,
            (self.im_int as f64 + self.im_root2 as f64 * s) * scale,
        )
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: Self) -> Self {
        let k = self.k.max(rhs.k);
        let (da, db) = (k - self.k, k - rhs.k);
        Self::new(
            sum(shl(self.re_int, da), shl(rhs.re_int, db)),
            sum(shl(self.im_int, da), shl(rhs.im_int, db)),
            sum(shl(self.re_root2, da), shl(rhs.re_root2, db)),
            sum(shl(self.im_root2, da), shl(rhs.im_root2, db)),
            k,
        )
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> Self {
        ExactScalar {
            re_int: -self.re_int,
            im_int: -self.im_int,
            re_root2: -self.re_root2,
            im_root2: -self.im_root2,
            k: self.k,
        }
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: Self) -> Self {
        let uw = gmul(self.re_int, self.im_int, rhs.re_int, rhs.im_int);
        let vx = gmul(self.re_root2, self.im_root2, rhs.re_root2, rhs.im_root2);
        let ux = gmul(self.re_int, self.im_int, rhs.re_root2, rhs.im_root2);
        let vw = gmul(self.re_root2, self.im_root2, rhs.re_int, rhs.im_int);
        Self::new(
            sum(uw.0, shl(vx.0, 1)),
            sum(uw.1, shl(vx.1, 1)),
            sum(ux.0, vw.0),
            sum(ux.1, vw.1),
            self.k + rhs.k,
        )
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        write!(f, "({}", self.re_int)?;
        if self.im_int != 0 {
            write!(f, "{:+}i", self.im_int)?;
        }
        if self.re_root2 != 0 || self.im_root2 != 0 {
            write!(f, " + ({}{:+}i)√2", self.re_root2, self.im_root2)?;
        }
        f.write_str(")")?;
        if self.k > 0 {
            write!(f, "/2^{}", self.k)?;
        }
        Ok(())
    }
}

//! Complex interval boxes with exact rational endpoints. Used for the
//! numeric embedding of field elements and for curve sampling; all
//! endpoints are exact, so containment statements are rigorous.

use num::bigint::BigInt;
use num::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

fn rat_min(a: &Rat, b: &Rat) -> Rat {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

fn rat_max(a: &Rat, b: &Rat) -> Rat {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Round toward -inf / +inf at `bits` fractional bits; used to keep
/// endpoint rationals small without losing rigor.
fn round_down(x: &Rat, bits: u32) -> Rat {
    let scale = BigRational::new(BigInt::one() << bits, BigInt::one());
    let scaled = x * &scale;
    BigRational::new(scaled.floor().to_integer(), BigInt::one()) / scale
}

fn round_up(x: &Rat, bits: u32) -> Rat {
    let scale = BigRational::new(BigInt::one() << bits, BigInt::one());
    let scaled = x * &scale;
    BigRational::new(scaled.ceil().to_integer(), BigInt::one()) / scale
}

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "inverted interval");
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Interval::point(Rat::zero())
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            lo = rat_min(&lo, v);
            hi = rat_max(&hi, v);
        }
        Interval::new(lo, hi)
    }

    /// Reciprocal; `None` when the interval straddles zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.lo.is_positive() || self.hi.is_negative() {
            Some(Interval::new(self.hi.recip(), self.lo.recip()))
        } else {
            None
        }
    }

    /// Outward rounding to limit coefficient blowup.
    pub fn coarsen(&self, bits: u32) -> Interval {
        Interval::new(round_down(&self.lo, bits), round_up(&self.hi, bits))
    }

    /// Upper bound of |·| over the interval.
    pub fn abs_hi(&self) -> Rat {
        rat_max(&self.lo.abs(), &self.hi.abs())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Rat, im: Rat) -> Self {
        ComplexBox { re: Interval::point(re), im: Interval::point(im) }
    }

    pub fn real_point(re: Rat) -> Self {
        ComplexBox::point(re, Rat::zero())
    }

    pub fn add(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &ComplexBox) -> ComplexBox {
        ComplexBox::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &ComplexBox) -> ComplexBox {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        ComplexBox::new(re, im)
    }

    /// Reciprocal via conjugate over squared modulus; `None` if the box
    /// could contain zero.
    pub fn recip(&self) -> Option<ComplexBox> {
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let inv_norm = norm.recip()?;
        Some(ComplexBox::new(
            self.re.mul(&inv_norm),
            self.im.neg().mul(&inv_norm),
        ))
    }

    pub fn div(&self, o: &ComplexBox) -> Option<ComplexBox> {
        Some(self.mul(&o.recip()?))
    }

    pub fn width(&self) -> Rat {
        rat_max(&self.re.width(), &self.im.width())
    }

    pub fn coarsen(&self, bits: u32) -> ComplexBox {
        ComplexBox::new(self.re.coarsen(bits), self.im.coarsen(bits))
    }

    pub fn contains_box(&self, o: &ComplexBox) -> bool {
        self.re.contains_interval(&o.re) && self.im.contains_interval(&o.im)
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox::new(self.re.clone(), self.im.neg())
    }

    /// Upper bound of |·| (sup-norm style: |re| + |im| bounds the modulus).
    pub fn abs_hi(&self) -> Rat {
        self.re.abs_hi() + self.im.abs_hi()
    }

    pub fn mid(&self) -> (Rat, Rat) {
        (self.re.mid(), self.im.mid())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        let (r, i) = self.mid();
        (rat_to_f64(&r), rat_to_f64(&i))
    }
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // fall back through a scaled integer when numer/denom overflow f64
        let bits = 64u32;
        let scale = BigInt::one() << bits;
        let scaled = (x * BigRational::new(scale, BigInt::one())).to_integer();
        scaled.to_f64().unwrap_or(f64::NAN) / 2f64.powi(bits as i32)
    })
}

pub fn rat_from_f64(x: f64) -> Rat {
    BigRational::from_float(x).expect("finite float")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn interval_mul_signs() {
        let a = Interval::new(q(-2, 1), q(3, 1));
        let b = Interval::new(q(-1, 1), q(4, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo, q(-8, 1));
        assert_eq!(p.hi, q(12, 1));
    }

    #[test]
    fn complex_mul_point() {
        // (1+2i)(3-i) = 5+5i
        let a = ComplexBox::point(q(1, 1), q(2, 1));
        let b = ComplexBox::point(q(3, 1), q(-1, 1));
        let p = a.mul(&b);
        assert_eq!(p.re, Interval::point(q(5, 1)));
        assert_eq!(p.im, Interval::point(q(5, 1)));
    }

    #[test]
    fn recip_straddle() {
        let a = ComplexBox::new(Interval::new(q(-1, 1), q(1, 1)), Interval::new(q(-1, 1), q(1, 1)));
        assert!(a.recip().is_none());
        let b = ComplexBox::point(q(0, 1), q(1, 1));
        let r = b.recip().unwrap();
        assert_eq!(r.im, Interval::point(q(-1, 1)));
    }

    #[test]
    fn coarsen_contains() {
        let a = Interval::new(q(1, 3), q(1, 2));
        let c = a.coarsen(8);
        assert!(c.contains_interval(&a));
        assert!(c.width() <= a.width() + q(1, 128));
    }
}

//! Arithmetic over `Z_d` for a prime `d`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A prime qudit dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeDim(u32);

impl PrimeDim {
    /// Checks primality by trial division.
    pub fn new(d: u32) -> Result<Self> {
        if d < 2 {
            return Err(Error::NotPrime(d));
        }
        let mut f = 2u32;
        while (f as u64) * (f as u64) <= d as u64 {
            if d % f == 0 {
                return Err(Error::NotPrime(d));
            }
            f += 1;
        }
        Ok(PrimeDim(d))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_qubit(self) -> bool {
        self.0 == 2
    }

    /// Order of the phase unit used for Pauli phases: 4 for qubits (powers
    /// of `i`), `d` otherwise (powers of `omega`).
    #[inline]
    pub fn phase_order(self) -> u32 {
        if self.0 == 2 {
            4
        } else {
            self.0
        }
    }

    /// `phase_order / d`: the exponent of the phase unit equal to `omega`.
    #[inline]
    pub fn omega_step(self) -> u32 {
        self.phase_order() / self.0
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.reduce(a as i64 - b as i64)
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by Fermat's little theorem.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }

    /// `2^{-1} mod d`; odd `d` only.
    pub fn half(self) -> Result<u32> {
        if self.is_qubit() {
            return Err(Error::EvenDim);
        }
        Ok((self.0 + 1) / 2)
    }

    pub fn elem(self, v: i64) -> ZdElem {
        ZdElem {
            value: self.reduce(v),
            d: self,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = ZdElem> {
        (0..self.0).map(move |v| ZdElem { value: v, d: self })
    }
}

impl fmt::Display for PrimeDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `Z_d`, always held in canonical form `0 <= value < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZdElem {
    value: u32,
    d: PrimeDim,
}

impl ZdElem {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeDim {
        self.d
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Result<ZdElem> {
        mod_inverse(self)
    }
}

impl fmt::Display for ZdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ZdElem {
    type Output = ZdElem;
    fn add(self, rhs: ZdElem) -> ZdElem {
        debug_assert_eq!(self.d, rhs.d);
        ZdElem {
            value: self.d.add(self.value, rhs.value),
            d: self.d,
        }
    }
}

impl Sub for ZdElem {
    type Output = ZdElem;
    fn sub(self, rhs: ZdElem) -> ZdElem {
        debug_assert_eq!(self.d, rhs.d);
        ZdElem {
            value: self.d.sub(self.value, rhs.value),
            d: self.d,
        }
    }
}

impl Mul for ZdElem {
    type Output = ZdElem;
    fn mul(self, rhs: ZdElem) -> ZdElem {
        debug_assert_eq!(self.d, rhs.d);
        ZdElem {
            value: self.d.mul(self.value, rhs.value),
            d: self.d,
        }
    }
}

impl Neg for ZdElem {
    type Output = ZdElem;
    fn neg(self) -> ZdElem {
        ZdElem {
            value: self.d.neg(self.value),
            d: self.d,
        }
    }
}

pub fn mod_inverse(a: ZdElem) -> Result<ZdElem> {
    Ok(ZdElem {
        value: a.d.inv(a.value)?,
        d: a.d,
    })
}

/// Legendre symbol of `x` modulo an odd prime.
pub fn legendre(x: ZdElem) -> Result<i8> {
    let d = x.d;
    if d.is_qubit() {
        return Err(Error::EvenDim);
    }
    if x.value == 0 {
        return Ok(0);
    }
    // Euler's criterion
    let e = d.pow(x.value, (d.get() as u64 - 1) / 2);
    Ok(if e == 1 { 1 } else { -1 })
}

/// The least quadratic non-residue of an odd prime.
pub fn smallest_nonresidue(d: PrimeDim) -> Result<ZdElem> {
    if d.is_qubit() {
        return Err(Error::EvenDim);
    }
    for v in 1..d.get() {
        let e = d.elem(v as i64);
        if legendre(e)? == -1 {
            return Ok(e);
        }
    }
    unreachable!("every odd prime has a quadratic non-residue")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn dim(d: u32) -> PrimeDim {
        PrimeDim::new(d).unwrap()
    }

    #[test]
    fn primality() {
        assert!(PrimeDim::new(0).is_err());
        assert!(PrimeDim::new(1).is_err());
        assert!(PrimeDim::new(9).is_err());
        assert!(PrimeDim::new(25).is_err());
        for p in [2, 3, 5, 7, 11, 13, 31] {
            assert!(PrimeDim::new(p).is_ok());
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(dim(5).elem(1)).unwrap().value(), 1);
        assert_eq!(mod_inverse(dim(3).elem(2)).unwrap().value(), 2);
        assert_eq!(mod_inverse(dim(7).elem(2)).unwrap().value(), 4);
        assert_eq!(mod_inverse(dim(7).elem(0)), Err(Error::ZeroInverse));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(dim(5).elem(0)).unwrap(), 0);
        assert_eq!(legendre(dim(5).elem(4)).unwrap(), 1);
        assert_eq!(legendre(dim(3).elem(2)).unwrap(), -1);
        assert_eq!(legendre(dim(2).elem(1)), Err(Error::EvenDim));
    }

    #[test]
    fn nonresidues() {
        assert_eq!(smallest_nonresidue(dim(3)).unwrap().value(), 2);
        assert_eq!(smallest_nonresidue(dim(5)).unwrap().value(), 2);
        assert_eq!(smallest_nonresidue(dim(7)).unwrap().value(), 3);
        assert!(smallest_nonresidue(dim(2)).is_err());
    }

    #[test]
    fn legendre_matches_square_scan() {
        for p in [3u32, 5, 7, 11, 13] {
            let d = dim(p);
            let squares: Vec<u32> = (1..p).map(|y| d.mul(y, y)).collect();
            let mut plus = 0;
            for x in 1..p {
                let l = legendre(d.elem(x as i64)).unwrap();
                assert_eq!(l == 1, squares.contains(&x));
                if l == 1 {
                    plus += 1;
                }
            }
            assert_eq!(plus, (p - 1) / 2);
        }
    }

    proptest! {
        #[test]
        fn inverse_round_trip(p in prop::sample::select(alloc::vec![2u32, 3, 5, 7, 11, 13, 31]), a in 1u32..1000) {
            let d = dim(p);
            let x = d.elem(a as i64);
            prop_assume!(!x.is_zero());
            prop_assert_eq!((x * mod_inverse(x).unwrap()).value(), 1);
        }

        #[test]
        fn legendre_is_multiplicative(p in prop::sample::select(alloc::vec![3u32, 5, 7, 11, 13]), a in 1u32..100, b in 1u32..100) {
            let d = dim(p);
            let (x, y) = (d.elem(a as i64), d.elem(b as i64));
            prop_assume!(!x.is_zero() && !y.is_zero());
            prop_assert_eq!(legendre(x * y).unwrap(), legendre(x).unwrap() * legendre(y).unwrap());
        }
    }
}

//! Arithmetic in `F_p` and its quadratic extension `F_{q^2} = F_p[t]/(t^2 - λ)`.
//!
//! Only `m = 1` is supported, so `q = p` and the Frobenius `a ↦ a^q` is the
//! conjugation `c0 + c1·t ↦ c0 - c1·t`.

use rand::RngCore;

use crate::dihedral::AutomorphismTag;
use crate::error::{Error, Result};

/// Element `c0 + c1·t` of `F_{q^2}`. Coefficients are kept reduced mod `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Fq2 {
    pub c0: u32,
    pub c1: u32,
}

impl Fq2 {
    pub const ZERO: Fq2 = Fq2 { c0: 0, c1: 0 };
    pub const ONE: Fq2 = Fq2 { c0: 1, c1: 0 };

    pub const fn new(c0: u32, c1: u32) -> Self {
        Fq2 { c0, c1 }
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
}

/// Field constants: the prime `p`, the extension degree `m` of `F_q` over
/// `F_p` and the non-residue `λ` with `t^2 = λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
    m: u32,
    lambda: u32,
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Smallest `λ >= 2` that is a quadratic non-residue mod `p` (Euler's criterion).
pub fn find_lambda(p: u32) -> Result<u32> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    (2..p)
        .find(|&l| pow_mod(l as u64, (p as u64 - 1) / 2, p as u64) == p as u64 - 1)
        .ok_or(Error::NotOddPrime(p))
}

impl Field {
    /// Builds `F_{p^2}` with the canonical non-residue from [`find_lambda`].
    pub fn new(p: u32) -> Result<Self> {
        let lambda = find_lambda(p)?;
        Ok(Field { p, m: 1, lambda })
    }

    /// Builds the field from explicit constants, validating every invariant.
    pub fn with_params(p: u32, m: u32, lambda: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if m != 1 {
            return Err(Error::UnsupportedDegree(m));
        }
        if lambda >= p || pow_mod(lambda as u64, (p as u64 - 1) / 2, p as u64) != p as u64 - 1 {
            return Err(Error::NotNonResidue { p, lambda });
        }
        Ok(Field { p, m, lambda })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `q = p^m`.
    pub fn q(&self) -> u32 {
        self.p
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Width of one coefficient on the wire: `⌈log₂ p⌉`.
    pub fn coeff_bits(&self) -> u32 {
        32 - (self.p - 1).leading_zeros()
    }

    /// Reduces a raw pair of integers into a field element.
    pub fn elem(&self, c0: u64, c1: u64) -> Fq2 {
        let p = self.p as u64;
        Fq2::new((c0 % p) as u32, (c1 % p) as u32)
    }

    pub fn contains(&self, a: Fq2) -> bool {
        a.c0 < self.p && a.c1 < self.p
    }

    pub fn add(&self, a: Fq2, b: Fq2) -> Fq2 {
        let p = self.p;
        let s0 = a.c0 + b.c0;
        let s1 = a.c1 + b.c1;
        Fq2::new(if s0 >= p { s0 - p } else { s0 }, if s1 >= p { s1 - p } else { s1 })
    }

    pub fn neg(&self, a: Fq2) -> Fq2 {
        let p = self.p;
        Fq2::new(
            if a.c0 == 0 { 0 } else { p - a.c0 },
            if a.c1 == 0 { 0 } else { p - a.c1 },
        )
    }

    pub fn sub(&self, a: Fq2, b: Fq2) -> Fq2 {
        self.add(a, self.neg(b))
    }

    /// `(a0 + a1 t)(b0 + b1 t) = (a0 b0 + λ a1 b1) + (a0 b1 + a1 b0) t`.
    pub fn mul(&self, a: Fq2, b: Fq2) -> Fq2 {
        let p = self.p as u64;
        let (a0, a1, b0, b1) = (a.c0 as u64, a.c1 as u64, b.c0 as u64, b.c1 as u64);
        let c0 = (a0 * b0 + (self.lambda as u64) * (a1 * b1 % p)) % p;
        let c1 = (a0 * b1 + a1 * b0) % p;
        Fq2::new(c0 as u32, c1 as u32)
    }

    /// Multiplies by an element of the prime field.
    pub fn scale(&self, k: u32, a: Fq2) -> Fq2 {
        let p = self.p as u64;
        let k = k as u64 % p;
        Fq2::new((a.c0 as u64 * k % p) as u32, (a.c1 as u64 * k % p) as u32)
    }

    /// Inverse via the norm: `(c0 - c1 t) / (c0^2 - λ c1^2)`.
    pub fn inv(&self, a: Fq2) -> Result<Fq2> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.p as u64;
        let (c0, c1) = (a.c0 as u64, a.c1 as u64);
        let norm = (c0 * c0 % p + p - (self.lambda as u64) * (c1 * c1 % p) % p) % p;
        let norm_inv = pow_mod(norm, p - 2, p);
        Ok(self.scale(norm_inv as u32, self.conjugate(a)))
    }

    fn conjugate(&self, a: Fq2) -> Fq2 {
        Fq2::new(a.c0, if a.c1 == 0 { 0 } else { self.p - a.c1 })
    }

    /// The Frobenius automorphism `σ(a) = a^q`; for `m = 1` this is conjugation.
    pub fn frobenius(&self, a: Fq2) -> Fq2 {
        self.conjugate(a)
    }

    /// `a^q` by left-to-right square-and-multiply over the bits of `q`,
    /// starting from `r = 1`. Costs [`Field::ladder_cost`] multiplications.
    pub fn frobenius_ladder(&self, a: Fq2) -> Fq2 {
        let q = self.q();
        let mut r = Fq2::ONE;
        for bit in (0..32 - q.leading_zeros()).rev() {
            r = self.mul(r, r);
            if (q >> bit) & 1 == 1 {
                r = self.mul(r, a);
            }
        }
        r
    }

    /// Number of field multiplications in one [`Field::frobenius_ladder`] call:
    /// one squaring per bit of `q` plus one multiply per set bit.
    pub fn ladder_cost(&self) -> u64 {
        let q = self.q();
        (32 - q.leading_zeros() + q.count_ones()) as u64
    }

    pub fn apply(&self, tag: AutomorphismTag, a: Fq2) -> Fq2 {
        match tag {
            AutomorphismTag::Identity => a,
            AutomorphismTag::Sigma => self.frobenius(a),
        }
    }

    /// Uniform sample from all `p^2` elements.
    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> Fq2 {
        Fq2::new(uniform_below(rng, self.p), uniform_below(rng, self.p))
    }

    /// Iterates over every element of the field, `c1` varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = Fq2> + '_ {
        (0..self.p).flat_map(move |c0| (0..self.p).map(move |c1| Fq2::new(c0, c1)))
    }
}

pub(crate) fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, bound: u32) -> u32 {
    // rejection sampling on the top of the u32 range
    let zone = u32::MAX - (u32::MAX % bound) - 1;
    loop {
        let v = rng.next_u32();
        if v <= zone {
            return v % bound;
        }
    }
}

/// Field-operation backend used by the ring product and adjunct.
///
/// [`Field`] itself is the fast backend. [`CountingOps`] evaluates the
/// automorphism with the square-and-multiply ladder and tallies every
/// field addition and multiplication.
pub trait FieldOps {
    fn field(&self) -> &Field;
    fn add(&mut self, a: Fq2, b: Fq2) -> Fq2;
    fn mul(&mut self, a: Fq2, b: Fq2) -> Fq2;
    fn apply(&mut self, tag: AutomorphismTag, a: Fq2) -> Fq2;
}

impl FieldOps for Field {
    fn field(&self) -> &Field {
        self
    }

    #[inline]
    fn add(&mut self, a: Fq2, b: Fq2) -> Fq2 {
        Field::add(self, a, b)
    }

    #[inline]
    fn mul(&mut self, a: Fq2, b: Fq2) -> Fq2 {
        Field::mul(self, a, b)
    }

    #[inline]
    fn apply(&mut self, tag: AutomorphismTag, a: Fq2) -> Fq2 {
        Field::apply(self, tag, a)
    }
}

/// Tallies of field operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub additions: u64,
    pub multiplications: u64,
}

/// Instrumented backend. Every automorphism application runs the ladder
/// (whatever the tag) and then selects, so each application costs exactly
/// `f = ladder_cost()` multiplications.
#[derive(Clone, Debug)]
pub struct CountingOps {
    field: Field,
    pub counts: OpCounts,
}

impl CountingOps {
    pub fn new(field: Field) -> Self {
        CountingOps { field, counts: OpCounts::default() }
    }

    fn ladder(&mut self, a: Fq2) -> Fq2 {
        let q = self.field.q();
        let mut r = Fq2::ONE;
        for bit in (0..32 - q.leading_zeros()).rev() {
            r = self.mul(r, r);
            if (q >> bit) & 1 == 1 {
                r = self.mul(r, a);
            }
        }
        r
    }
}

impl FieldOps for CountingOps {
    fn field(&self) -> &Field {
        &self.field
    }

    fn add(&mut self, a: Fq2, b: Fq2) -> Fq2 {
        self.counts.additions += 1;
        self.field.add(a, b)
    }

    fn mul(&mut self, a: Fq2, b: Fq2) -> Fq2 {
        self.counts.multiplications += 1;
        self.field.mul(a, b)
    }

    fn apply(&mut self, tag: AutomorphismTag, a: Fq2) -> Fq2 {
        let conj = self.ladder(a);
        match tag {
            AutomorphismTag::Identity => a,
            AutomorphismTag::Sigma => conj,
        }
    }
}

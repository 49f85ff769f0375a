//! Named parameter sets and the public parameters `(field, n, h)`.

use std::fmt;
use std::str::FromStr;

use rand::RngCore;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ring::{RingElement, SkewRing, SubspaceTag};

/// The proposed parameter sets (`m = 1`, `n = p`) plus a desk-scale toy set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamSet {
    P19,
    P23,
    P31,
    P41,
    /// `p = 3, n = 3`; small enough for exhaustive search.
    Toy,
}

impl ParamSet {
    pub const PROPOSED: [ParamSet; 4] = [ParamSet::P19, ParamSet::P23, ParamSet::P31, ParamSet::P41];

    pub fn p(self) -> u32 {
        match self {
            ParamSet::P19 => 19,
            ParamSet::P23 => 23,
            ParamSet::P31 => 31,
            ParamSet::P41 => 41,
            ParamSet::Toy => 3,
        }
    }

    pub fn m(self) -> u32 {
        1
    }

    pub fn n(self) -> usize {
        self.p() as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ParamSet::P19 => "p19",
            ParamSet::P23 => "p23",
            ParamSet::P31 => "p31",
            ParamSet::P41 => "p41",
            ParamSet::Toy => "toy",
        }
    }

    pub fn ring(self) -> SkewRing {
        let field = Field::new(self.p()).expect("parameter sets use odd primes");
        SkewRing::new(field, self.n()).expect("n >= 1")
    }

    /// Matches a `(p, m, n)` triple back to a named set.
    pub fn lookup(p: u32, m: u32, n: usize) -> Option<ParamSet> {
        [ParamSet::P19, ParamSet::P23, ParamSet::P31, ParamSet::P41, ParamSet::Toy]
            .into_iter()
            .find(|s| s.p() == p && s.m() == m && s.n() == n)
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParamSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p19" => Ok(ParamSet::P19),
            "p23" => Ok(ParamSet::P23),
            "p31" => Ok(ParamSet::P31),
            "p41" => Ok(ParamSet::P41),
            "toy" => Ok(ParamSet::Toy),
            other => Err(Error::UnknownParamSet(other.to_string())),
        }
    }
}

/// Public parameters: the ring and the public element `h = h1 + h2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    ring: SkewRing,
    h: RingElement,
}

impl Params {
    /// Requires both halves of `h` to be non-zero.
    pub fn new(ring: SkewRing, h: RingElement) -> Result<Self> {
        ring.check(&h)?;
        if ring.classify(&h) != SubspaceTag::Mixed {
            return Err(Error::Domain("public element must have non-zero C_n and C_n y parts"));
        }
        Ok(Params { ring, h })
    }

    /// Accepts any `h`, including the degenerate choices the attack games
    /// use to show why both halves must be non-zero.
    pub fn new_unchecked(ring: SkewRing, h: RingElement) -> Result<Self> {
        ring.check(&h)?;
        Ok(Params { ring, h })
    }

    pub fn generate<R: RngCore + ?Sized>(set: ParamSet, rng: &mut R) -> Self {
        let ring = set.ring();
        let h = ring.gen_public_element(rng);
        Params { ring, h }
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn h(&self) -> &RingElement {
        &self.h
    }

    pub fn p(&self) -> u32 {
        self.ring.field().p()
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }
}

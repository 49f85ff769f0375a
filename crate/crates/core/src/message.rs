//! Byte-string ↔ ring element codec for encryption demos.
//!
//! Not part of any scheme: the message space of the PKE is the whole ring.
//! A 16-bit length prefix followed by the bytes is split into
//! `⌊log₂ p⌋`-bit chunks, one per coefficient (`c0` then `c1`, ring-index
//! order). Chunks are always `< p`, so the mapping is injective.

use crate::codec::{BitReader, BitWriter};
use crate::error::{Error, Result};
use crate::field::Fq2;
use crate::ring::{RingElement, SkewRing};

fn chunk_bits(ring: &SkewRing) -> u32 {
    31 - ring.field().p().leading_zeros()
}

/// Longest byte string that fits in one ring element.
pub fn capacity(ring: &SkewRing) -> usize {
    let bits = ring.dim() * 2 * chunk_bits(ring) as usize;
    (bits / 8).saturating_sub(2).min(u16::MAX as usize)
}

pub fn encode(ring: &SkewRing, msg: &[u8]) -> Result<RingElement> {
    if msg.len() > capacity(ring) {
        return Err(Error::EncodingLength { expected: capacity(ring), got: msg.len() });
    }
    let mut w = BitWriter::new();
    w.write(msg.len() as u32, 16);
    for &b in msg {
        w.write(b as u32, 8);
    }
    let bytes = w.finish();
    let width = chunk_bits(ring);
    let mut r = BitReader::new(&bytes);
    let mut next = || {
        // pad the tail with zero bits
        let mut v = 0u32;
        for _ in 0..width {
            v = (v << 1) | r.read(1).unwrap_or(0);
        }
        v
    };
    let coeffs = (0..ring.dim()).map(|_| Fq2::new(next(), next())).collect();
    ring.element(coeffs)
}

pub fn decode(ring: &SkewRing, m: &RingElement) -> Result<Vec<u8>> {
    ring.check(m)?;
    let width = chunk_bits(ring);
    let mut w = BitWriter::new();
    for c in m.coeffs() {
        if c.c0 >> width != 0 || c.c1 >> width != 0 {
            return Err(Error::NonCanonical);
        }
        w.write(c.c0, width);
        w.write(c.c1, width);
    }
    let bytes = w.finish();
    let mut r = BitReader::new(&bytes);
    let len = r.read(16).ok_or(Error::NonCanonical)? as usize;
    if len > capacity(ring) {
        return Err(Error::NonCanonical);
    }
    (0..len).map(|_| r.read(8).map(|b| b as u8).ok_or(Error::NonCanonical)).collect()
}

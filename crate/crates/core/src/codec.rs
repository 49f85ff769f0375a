//! Canonical binary representation `rep()` of ring elements.
//!
//! Coefficients are written in ring-index order, `c0` before `c1`, each as a
//! `⌈log₂ p⌉`-bit big-endian integer in an MSB-first bitstream whose final
//! byte is zero-padded.

use crate::error::{Error, Result};
use crate::field::Fq2;
use crate::ring::{RingElement, SkewRing};

/// MSB-first bit packer.
#[derive(Debug, Default)]
pub struct BitWriter {
    bytes: Vec<u8>,
    used: u32,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn write(&mut self, value: u32, bits: u32) {
        for b in (0..bits).rev() {
            if self.used % 8 == 0 {
                self.bytes.push(0);
            }
            let bit = ((value >> b) & 1) as u8;
            let last = self.bytes.last_mut().expect("pushed above");
            *last |= bit << (7 - self.used % 8);
            self.used += 1;
        }
    }

    pub fn finish(self) -> Vec<u8> {
        self.bytes
    }
}

/// MSB-first bit reader.
#[derive(Debug)]
pub struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        BitReader { bytes, pos: 0 }
    }

    /// Reads `bits` bits; `None` once the stream is exhausted.
    pub fn read(&mut self, bits: u32) -> Option<u32> {
        if self.pos + bits as usize > self.bytes.len() * 8 {
            return None;
        }
        let mut v = 0u32;
        for _ in 0..bits {
            let byte = self.bytes[self.pos / 8];
            v = (v << 1) | ((byte >> (7 - self.pos % 8)) & 1) as u32;
            self.pos += 1;
        }
        Some(v)
    }
}

/// Byte length of `rep()` for one ring element.
pub fn element_len(ring: &SkewRing) -> usize {
    let bits = ring.dim() * 2 * ring.field().coeff_bits() as usize;
    bits.div_ceil(8)
}

/// `rep(a)`.
pub fn rep(ring: &SkewRing, a: &RingElement) -> Vec<u8> {
    let bits = ring.field().coeff_bits();
    let mut w = BitWriter::new();
    for c in a.coeffs() {
        w.write(c.c0, bits);
        w.write(c.c1, bits);
    }
    w.finish()
}

/// Inverse of [`rep`]. Chunks are reduced mod `p`, so decoding only fails on
/// a wrong length; compare `rep(decode(x))` with `x` to test canonicity.
pub fn decode(ring: &SkewRing, bytes: &[u8]) -> Result<RingElement> {
    let expected = element_len(ring);
    if bytes.len() != expected {
        return Err(Error::EncodingLength { expected, got: bytes.len() });
    }
    let bits = ring.field().coeff_bits();
    let f = ring.field();
    let mut r = BitReader::new(bytes);
    let coeffs = (0..ring.dim())
        .map(|_| {
            let c0 = r.read(bits).expect("length checked");
            let c1 = r.read(bits).expect("length checked");
            f.elem(c0 as u64, c1 as u64)
        })
        .collect::<Vec<Fq2>>();
    ring.element(coeffs)
}

/// Decodes and rejects any input that is not the canonical encoding.
pub fn decode_canonical(ring: &SkewRing, bytes: &[u8]) -> Result<RingElement> {
    let a = decode(ring, bytes)?;
    if rep(ring, &a) != bytes {
        return Err(Error::NonCanonical);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamSet;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn zero_element_p19() {
        let ring = ParamSet::P19.ring();
        // 38 elements × 2 coefficients × 5 bits = 380 bits
        let bytes = rep(&ring, &ring.zero());
        assert_eq!(bytes.len(), 380usize.div_ceil(8));
        assert_eq!(bytes.len(), 48);
        assert!(bytes.iter().all(|&b| b == 0));
    }

    #[test]
    fn bit_layout_is_msb_first() {
        let ring = ParamSet::Toy.ring();
        // p = 3: 2 bits per coefficient, 12 coefficients = 24 bits
        let a = ring.basis(0, Fq2::new(2, 1));
        let bytes = rep(&ring, &a);
        assert_eq!(bytes, vec![0b1001_0000, 0, 0]);
        let b = ring.basis(5, Fq2::new(1, 2));
        assert_eq!(rep(&ring, &b), vec![0, 0, 0b0000_0110]);
    }

    #[test]
    fn non_canonical_is_detected() {
        let ring = ParamSet::Toy.ring();
        // chunk value 3 >= p reduces to 0
        let bytes = vec![0b1100_0000, 0, 0];
        assert!(decode(&ring, &bytes).unwrap().is_zero());
        assert_eq!(decode_canonical(&ring, &bytes), Err(Error::NonCanonical));
        assert!(matches!(decode(&ring, &[0, 0]), Err(Error::EncodingLength { .. })));
        let ring = ParamSet::P19.ring();
        let mut bytes = vec![0u8; 48];
        bytes[47] = 1; // padding bit
        assert_eq!(decode_canonical(&ring, &bytes), Err(Error::NonCanonical));
    }

    proptest! {
        #[test]
        fn round_trip_and_injective(seed in any::<u64>(), set in 0usize..5) {
            let set = [ParamSet::P19, ParamSet::P23, ParamSet::P31, ParamSet::P41, ParamSet::Toy][set];
            let ring = set.ring();
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let a = ring.sample_ring(&mut rng);
            let b = ring.sample_ring(&mut rng);
            let ea = rep(&ring, &a);
            prop_assert_eq!(ea.len(), element_len(&ring));
            prop_assert_eq!(&decode_canonical(&ring, &ea).unwrap(), &a);
            prop_assert_eq!(a == b, ea == rep(&ring, &b));
        }
    }
}

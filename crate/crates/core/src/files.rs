//! On-disk format for parameters, keys and ciphertexts.
//!
//! ```text
//! "SDGR" | 0x01 | p: u32 BE | m: u8 | n: u32 BE | λ: u32 BE | l1/8: u8 | payload | CRC-64/XZ: u64 BE
//! ```
//! The checksum covers every preceding byte.

use crc::{Crc, CRC_64_XZ};

use crate::codec;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::kem::{KemPrivate, KeyBits};
use crate::kex::SecretPair;
use crate::params::Params;
use crate::ring::{RingElement, SkewRing};

pub const MAGIC: &[u8; 4] = b"SDGR";
pub const VERSION: u8 = 0x01;
const HEADER_LEN: usize = 4 + 1 + 4 + 1 + 4 + 4 + 1;
const CRC: Crc<u64> = Crc::<u64>::new(&CRC_64_XZ);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FileHeader {
    pub p: u32,
    pub m: u8,
    pub n: u32,
    pub lambda: u32,
    pub key_bits: KeyBits,
}

impl FileHeader {
    pub fn for_ring(ring: &SkewRing, key_bits: KeyBits) -> Self {
        let f = ring.field();
        FileHeader { p: f.p(), m: f.m() as u8, n: ring.n() as u32, lambda: f.lambda(), key_bits }
    }

    /// Rebuilds the ring the header describes.
    pub fn ring(&self) -> Result<SkewRing> {
        let field = Field::with_params(self.p, self.m as u32, self.lambda)?;
        SkewRing::new(field, self.n as usize)
    }

    /// Checks that the header describes `ring` (the key length is not compared).
    pub fn check_ring(&self, ring: &SkewRing) -> Result<()> {
        let other = FileHeader::for_ring(ring, self.key_bits);
        if other != *self {
            return Err(Error::ParamMismatch(format!(
                "file has (p, m, n, λ) = ({}, {}, {}, {}), expected ({}, {}, {}, {})",
                self.p, self.m, self.n, self.lambda, other.p, other.m, other.n, other.lambda
            )));
        }
        Ok(())
    }
}

pub fn checksum(bytes: &[u8]) -> u64 {
    CRC.checksum(bytes)
}

/// Frames `payload` with the header and checksum trailer.
pub fn seal(header: &FileHeader, payload: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + payload.len() + 8);
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.extend_from_slice(&header.p.to_be_bytes());
    out.push(header.m);
    out.extend_from_slice(&header.n.to_be_bytes());
    out.extend_from_slice(&header.lambda.to_be_bytes());
    out.push(header.key_bits.bytes() as u8);
    out.extend_from_slice(payload);
    let crc = checksum(&out);
    out.extend_from_slice(&crc.to_be_bytes());
    out
}

/// Verifies the checksum and parses the header. Truncation shows up as a
/// checksum failure.
pub fn open(bytes: &[u8]) -> Result<(FileHeader, &[u8])> {
    if bytes.len() < HEADER_LEN + 8 {
        return Err(Error::Checksum);
    }
    let (body, trailer) = bytes.split_at(bytes.len() - 8);
    if checksum(body) != u64::from_be_bytes(trailer.try_into().expect("8 bytes")) {
        return Err(Error::Checksum);
    }
    if &body[..4] != MAGIC {
        return Err(Error::MalformedFile("bad magic"));
    }
    if body[4] != VERSION {
        return Err(Error::MalformedFile("unsupported version"));
    }
    let u32_at = |i: usize| u32::from_be_bytes(body[i..i + 4].try_into().expect("4 bytes"));
    let header = FileHeader {
        p: u32_at(5),
        m: body[9],
        n: u32_at(10),
        lambda: u32_at(14),
        key_bits: KeyBits::from_bits(body[18] as u32 * 8)?,
    };
    Ok((header, &body[HEADER_LEN..]))
}

fn split_elements<'a>(ring: &SkewRing, payload: &'a [u8], count: usize) -> Result<Vec<&'a [u8]>> {
    let len = codec::element_len(ring);
    if payload.len() != len * count {
        return Err(Error::EncodingLength { expected: len * count, got: payload.len() });
    }
    Ok(payload.chunks(len).collect())
}

fn ring_for(header: &FileHeader, expected: Option<&SkewRing>) -> Result<SkewRing> {
    if header.n == 0 || header.n > 1 << 16 {
        return Err(Error::MalformedFile("implausible n"));
    }
    match expected {
        Some(r) => {
            header.check_ring(r)?;
            Ok(r.clone())
        }
        None => header.ring(),
    }
}

/// Parameters file: payload `rep(h)`.
pub fn write_params(params: &Params, key_bits: KeyBits) -> Vec<u8> {
    seal(&FileHeader::for_ring(params.ring(), key_bits), &codec::rep(params.ring(), params.h()))
}

pub fn read_params(bytes: &[u8]) -> Result<(Params, KeyBits)> {
    let (header, payload) = open(bytes)?;
    let ring = ring_for(&header, None)?;
    let h = codec::decode_canonical(&ring, payload)?;
    Ok((Params::new(ring, h)?, header.key_bits))
}

/// Public key file: payload `rep(pk)`.
pub fn write_public_key(ring: &SkewRing, key_bits: KeyBits, pk_bytes: &[u8]) -> Vec<u8> {
    seal(&FileHeader::for_ring(ring, key_bits), pk_bytes)
}

/// Returns the header and the raw `rep(pk)` bytes after checking them
/// against `ring`.
pub fn read_public_key(ring: &SkewRing, bytes: &[u8]) -> Result<(FileHeader, Vec<u8>)> {
    let (header, payload) = open(bytes)?;
    ring_for(&header, Some(ring))?;
    codec::decode_canonical(ring, payload)?;
    Ok((header, payload.to_vec()))
}

/// Private key file: payload `rep(s) ‖ rep(a) ‖ rep(γ) ‖ rep(pk)`.
pub fn write_private_key(ring: &SkewRing, key_bits: KeyBits, key: &KemPrivate) -> Vec<u8> {
    let mut payload = codec::rep(ring, key.seed());
    payload.extend_from_slice(&codec::rep(ring, key.secret().a()));
    payload.extend_from_slice(&codec::rep(ring, key.secret().gamma().as_element()));
    payload.extend_from_slice(&codec::rep(ring, key.public()));
    seal(&FileHeader::for_ring(ring, key_bits), &payload)
}

pub fn read_private_key(ring: &SkewRing, bytes: &[u8]) -> Result<(FileHeader, KemPrivate)> {
    let (header, payload) = open(bytes)?;
    ring_for(&header, Some(ring))?;
    let parts = split_elements(ring, payload, 4)?;
    let elems = parts
        .into_iter()
        .map(|b| codec::decode_canonical(ring, b))
        .collect::<Result<Vec<RingElement>>>()?;
    let [s, a, gamma, pk]: [RingElement; 4] = elems.try_into().expect("four parts");
    let sk = SecretPair::new(ring, a, ring.reversible(gamma)?)?;
    Ok((header, KemPrivate::new(ring, s, sk, pk)?))
}

/// Ciphertext file: payload `rep(c1) ‖ rep(c2)`, stored verbatim.
pub fn write_ciphertext(ring: &SkewRing, key_bits: KeyBits, c: &[u8]) -> Vec<u8> {
    seal(&FileHeader::for_ring(ring, key_bits), c)
}

/// Returns the raw ciphertext bytes. Only the frame is validated; the
/// bytes themselves go to decapsulation untouched.
pub fn read_ciphertext(ring: &SkewRing, bytes: &[u8]) -> Result<(FileHeader, Vec<u8>)> {
    let (header, payload) = open(bytes)?;
    ring_for(&header, Some(ring))?;
    Ok((header, payload.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kem;
    use crate::params::ParamSet;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn header_layout() {
        let ring = ParamSet::P19.ring();
        let bytes = seal(&FileHeader::for_ring(&ring, KeyBits::B256), &[0xAA]);
        assert_eq!(&bytes[..5], b"SDGR\x01");
        assert_eq!(&bytes[5..9], &19u32.to_be_bytes());
        assert_eq!(bytes[9], 1);
        assert_eq!(&bytes[10..14], &19u32.to_be_bytes());
        assert_eq!(&bytes[14..18], &2u32.to_be_bytes());
        assert_eq!(bytes[18], 32);
        assert_eq!(bytes[19], 0xAA);
        assert_eq!(bytes.len(), 20 + 8);
    }

    #[test]
    fn crc_reference_value() {
        // CRC-64/XZ check value
        assert_eq!(checksum(b"123456789"), 0x995d_c9bb_df19_39fa);
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let params = Params::generate(ParamSet::P23, &mut rng);
        let ring = params.ring();
        let (p2, bits) = read_params(&write_params(&params, KeyBits::B192)).unwrap();
        assert_eq!(p2, params);
        assert_eq!(bits, KeyBits::B192);

        let (private, pk) = kem::keygen(&params, &mut rng);
        let (_, pk2) = read_public_key(ring, &write_public_key(ring, bits, &pk)).unwrap();
        assert_eq!(pk2, pk);
        let (_, priv2) = read_private_key(ring, &write_private_key(ring, bits, &private)).unwrap();
        assert_eq!(priv2.seed(), private.seed());
        assert_eq!(priv2.secret(), private.secret());
        assert_eq!(priv2.public(), private.public());

        let (c, _) = kem::encaps(&params, &pk, bits, &mut rng).unwrap();
        let (_, c2) = read_ciphertext(ring, &write_ciphertext(ring, bits, c.as_bytes())).unwrap();
        assert_eq!(c2, c.0);
    }

    #[test]
    fn corruption_and_mismatch() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let params = Params::generate(ParamSet::P19, &mut rng);
        let bytes = write_params(&params, KeyBits::B128);
        assert_eq!(read_params(&bytes[..bytes.len() - 1]), Err(Error::Checksum));
        let mut flipped = bytes.clone();
        flipped[25] ^= 1;
        assert_eq!(read_params(&flipped), Err(Error::Checksum));
        assert_eq!(open(&[1, 2, 3]), Err(Error::Checksum));

        let other = ParamSet::P23.ring();
        let pk = write_public_key(params.ring(), KeyBits::B128, &codec::rep(params.ring(), params.h()));
        assert!(matches!(read_public_key(&other, &pk), Err(Error::ParamMismatch(_))));
    }
}

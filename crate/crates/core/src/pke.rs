//! Probabilistic public-key encryption built on the key exchange.
//!
//! The message space is the whole ring. Encryption takes its randomness
//! `r2 = (a2, γ2)` explicitly so that it can be replayed bit-for-bit.

use rand::{CryptoRng, RngCore};

use crate::codec;
use crate::error::{Error, Result};
use crate::kex::{self, SecretPair};
use crate::params::Params;
use crate::ring::{RingElement, SkewRing};

#[derive(Debug)]
pub struct PkeKeypair {
    pub pk: RingElement,
    pub sk: SecretPair,
}

/// `(c1, c2) = (a2·h·γ2, m + a2·pk·γ̂2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ciphertext {
    pub c1: RingElement,
    pub c2: RingElement,
}

impl Ciphertext {
    /// `rep(c1) ‖ rep(c2)`.
    pub fn to_bytes(&self, ring: &SkewRing) -> Vec<u8> {
        let mut out = codec::rep(ring, &self.c1);
        out.extend_from_slice(&codec::rep(ring, &self.c2));
        out
    }

    pub fn byte_len(ring: &SkewRing) -> usize {
        2 * codec::element_len(ring)
    }

    /// Parses `rep(c1) ‖ rep(c2)`, rejecting non-canonical input.
    pub fn from_bytes(ring: &SkewRing, bytes: &[u8]) -> Result<Self> {
        let half = codec::element_len(ring);
        if bytes.len() != 2 * half {
            return Err(Error::EncodingLength { expected: 2 * half, got: bytes.len() });
        }
        let (a, b) = bytes.split_at(half);
        Ok(Ciphertext { c1: codec::decode_canonical(ring, a)?, c2: codec::decode_canonical(ring, b)? })
    }
}

pub fn keygen<R: RngCore + CryptoRng + ?Sized>(params: &Params, rng: &mut R) -> PkeKeypair {
    let (sk, pk) = kex::keygen(params, rng);
    PkeKeypair { pk, sk }
}

pub fn encrypt(params: &Params, m: &RingElement, pk: &RingElement, r2: &SecretPair) -> Result<Ciphertext> {
    let ring = params.ring();
    ring.check(m)?;
    ring.check(pk)?;
    let c1 = r2.public_value(ring, params.h())?;
    let mask = r2.apply_adjoint(ring, pk)?;
    let c2 = ring.add(m, &mask)?;
    Ok(Ciphertext { c1, c2 })
}

/// `c2 - a1·c1·γ̂1`.
pub fn decrypt(params: &Params, c: &Ciphertext, sk: &SecretPair) -> Result<RingElement> {
    let ring = params.ring();
    let k = sk.apply_adjoint(ring, &c.c1)?;
    ring.sub(&c.c2, &k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamSet;
    use crate::reference;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn zero_message_is_mask_only() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let params = Params::generate(ParamSet::P19, &mut rng);
        let kp = keygen(&params, &mut rng);
        let r2 = SecretPair::sample(params.ring(), &mut rng);
        let c = encrypt(&params, &params.ring().zero(), &kp.pk, &r2).unwrap();
        assert_eq!(c.c2, r2.apply_adjoint(params.ring(), &kp.pk).unwrap());
        assert_eq!(c, encrypt(&params, &params.ring().zero(), &kp.pk, &r2).unwrap());
    }

    #[test]
    fn keypair_invariant_and_reproducible() {
        let params = Params::generate(ParamSet::P23, &mut ChaCha20Rng::seed_from_u64(2));
        let kp = keygen(&params, &mut ChaCha20Rng::seed_from_u64(3));
        assert_eq!(kp.pk, kp.sk.public_value(params.ring(), params.h()).unwrap());
        let again = keygen(&params, &mut ChaCha20Rng::seed_from_u64(3));
        assert_eq!(kp.pk, again.pk);
        assert_eq!(kp.sk, again.sk);
    }

    #[test]
    fn toy_instance_matches_reference() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let params = Params::generate(ParamSet::Toy, &mut rng);
        let ring = params.ring();
        let mul = |a: &RingElement, b: &RingElement| reference::product(ring, a, b);
        for _ in 0..100 {
            let kp = keygen(&params, &mut rng);
            assert_eq!(kp.pk, mul(&mul(kp.sk.a(), params.h()), kp.sk.gamma().as_element()));
            let m = ring.sample_ring(&mut rng);
            let r2 = SecretPair::sample(ring, &mut rng);
            let c = encrypt(&params, &m, &kp.pk, &r2).unwrap();
            let g2 = r2.gamma().as_element();
            assert_eq!(c.c1, mul(&mul(r2.a(), params.h()), g2));
            let mask = mul(&mul(r2.a(), &kp.pk), &reference::adjunct(ring, g2));
            assert_eq!(c.c2, ring.add(&m, &mask).unwrap());
        }
    }

    #[test]
    fn round_trip_and_key_identity() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for set in ParamSet::PROPOSED {
            let params = Params::generate(set, &mut rng);
            let ring = params.ring();
            let kp = keygen(&params, &mut rng);
            for _ in 0..50 {
                let m = ring.sample_ring(&mut rng);
                let r2 = SecretPair::sample(ring, &mut rng);
                let c = encrypt(&params, &m, &kp.pk, &r2).unwrap();
                assert_eq!(kp.sk.apply_adjoint(ring, &c.c1).unwrap(), r2.apply_adjoint(ring, &kp.pk).unwrap());
                assert_eq!(decrypt(&params, &c, &kp.sk).unwrap(), m);
            }
        }
    }

    #[test]
    fn wrong_key_and_edges() {
        let mut rng = ChaCha20Rng::seed_from_u64(6);
        let params = Params::generate(ParamSet::P19, &mut rng);
        let ring = params.ring();
        let kp = keygen(&params, &mut rng);
        let m = ring.sample_ring(&mut rng);
        let zero_mask = Ciphertext { c1: ring.zero(), c2: m.clone() };
        assert_eq!(decrypt(&params, &zero_mask, &kp.sk).unwrap(), m);

        let mut wrong = 0;
        for _ in 0..1000 {
            let m = ring.sample_ring(&mut rng);
            let r2 = SecretPair::sample(ring, &mut rng);
            let c = encrypt(&params, &m, &kp.pk, &r2).unwrap();
            let other = keygen(&params, &mut rng);
            if decrypt(&params, &c, &other.sk).unwrap() != m {
                wrong += 1;
            }
            // decryption is affine in c2
            let d = ring.sample_ring(&mut rng);
            let shifted = Ciphertext { c1: c.c1.clone(), c2: ring.add(&c.c2, &d).unwrap() };
            assert_eq!(decrypt(&params, &shifted, &kp.sk).unwrap(), ring.add(&m, &d).unwrap());
        }
        assert!(wrong >= 999);
    }

    #[test]
    fn ciphertext_bytes() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let params = Params::generate(ParamSet::P31, &mut rng);
        let ring = params.ring();
        let c = Ciphertext { c1: ring.sample_ring(&mut rng), c2: ring.sample_ring(&mut rng) };
        let bytes = c.to_bytes(ring);
        assert_eq!(bytes.len(), Ciphertext::byte_len(ring));
        assert_eq!(Ciphertext::from_bytes(ring, &bytes).unwrap(), c);
        assert!(Ciphertext::from_bytes(ring, &bytes[1..]).is_err());
    }
}

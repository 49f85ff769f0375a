//! Key encapsulation with implicit rejection, derived from the PKE by the
//! `U^⊥̸[T[E, H2], H1]` transform.
//!
//! * `H1(x)` expands SHAKE256(x) to `o = ⌈log₂ p⌉·2m·(n + ⌈(n+1)/2⌉)` bits
//!   and reads a secret pair `(a, γ)` from them.
//! * `H2(x)` is SHAKE256(0x02 ‖ x) truncated to the session key length.
//!
//! Encapsulation derives the encryption randomness from the message, so
//! decapsulation can re-encrypt and compare. A ciphertext that does not
//! re-encrypt to itself yields `H2(rep(s) ‖ c)` for the secret seed `s`.

use std::fmt;

use rand::{CryptoRng, RngCore};
use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;
use zeroize::{Zeroize, ZeroizeOnDrop};

use crate::codec::{self, BitReader};
use crate::error::{Error, Result};
use crate::field::Fq2;
use crate::kex::SecretPair;
use crate::params::Params;
use crate::pke::{self, Ciphertext};
use crate::ring::{RingElement, SkewRing};

/// Domain-separation prefix of `H2`.
pub const H2_PREFIX: u8 = 0x02;

/// Session key length `l1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KeyBits {
    B128,
    B192,
    B256,
}

impl KeyBits {
    pub const ALL: [KeyBits; 3] = [KeyBits::B128, KeyBits::B192, KeyBits::B256];

    pub fn bits(self) -> u32 {
        match self {
            KeyBits::B128 => 128,
            KeyBits::B192 => 192,
            KeyBits::B256 => 256,
        }
    }

    pub fn bytes(self) -> usize {
        self.bits() as usize / 8
    }

    pub fn from_bits(bits: u32) -> Result<Self> {
        match bits {
            128 => Ok(KeyBits::B128),
            192 => Ok(KeyBits::B192),
            256 => Ok(KeyBits::B256),
            other => Err(Error::InvalidKeyBits(other)),
        }
    }
}

/// Shared secret of exactly `l1` bits.
#[derive(Clone, PartialEq, Eq, Zeroize, ZeroizeOnDrop)]
pub struct SessionKey(Vec<u8>);

impl SessionKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn bit_len(&self) -> usize {
        self.0.len() * 8
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Debug for SessionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SessionKey({} bits)", self.bit_len())
    }
}

/// Serialized PKE ciphertext `rep(c1) ‖ rep(c2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KemCiphertext(pub Vec<u8>);

impl KemCiphertext {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Decapsulation key `(s, sk, pk)`.
#[derive(Debug)]
pub struct KemPrivate {
    s: RingElement,
    sk: SecretPair,
    pk: RingElement,
}

impl Drop for KemPrivate {
    fn drop(&mut self) {
        self.s.zeroize();
    }
}

impl KemPrivate {
    pub fn new(ring: &SkewRing, s: RingElement, sk: SecretPair, pk: RingElement) -> Result<Self> {
        ring.check(&s)?;
        ring.check(&pk)?;
        Ok(KemPrivate { s, sk, pk })
    }

    pub fn seed(&self) -> &RingElement {
        &self.s
    }

    pub fn secret(&self) -> &SecretPair {
        &self.sk
    }

    pub fn public(&self) -> &RingElement {
        &self.pk
    }
}

fn shake(parts: &[&[u8]], out: &mut [u8]) {
    let mut h = Shake256::default();
    for p in parts {
        h.update(p);
    }
    h.finalize_xof().read(out);
}

/// Output length of `H1` in bits: `⌈log₂ p⌉ · 2m · (n + ⌈(n+1)/2⌉)`.
pub fn h1_output_bits(ring: &SkewRing) -> usize {
    let f = ring.field();
    let n = ring.n();
    f.coeff_bits() as usize * 2 * f.m() as usize * (n + (n + 1).div_ceil(2))
}

fn h1_once(ring: &SkewRing, input: &[u8]) -> (RingElement, Vec<Fq2>) {
    let o = h1_output_bits(ring);
    let mut stream = vec![0u8; o.div_ceil(8)];
    shake(&[input], &mut stream);
    let f = ring.field();
    let bits = f.coeff_bits();
    let mut reader = BitReader::new(&stream);
    let mut next = || {
        let c0 = reader.read(bits).expect("o covers every chunk");
        let c1 = reader.read(bits).expect("o covers every chunk");
        f.elem(c0 as u64, c1 as u64)
    };
    let mut a = ring.zero();
    for c in &mut a.coeffs_mut()[..ring.n()] {
        *c = next();
    }
    let free = (0..ring.gamma_free_count()).map(|_| next()).collect();
    (a, free)
}

/// `H1`: hashes into the secret-key space. Inputs that would give `a = 0` or
/// `γ = 0` are retried with a `0x00` byte appended.
pub fn h1(ring: &SkewRing, input: &[u8]) -> SecretPair {
    let mut buf = input.to_vec();
    loop {
        let (a, free) = h1_once(ring, &buf);
        let gamma = ring.reversible_from_free(&free).expect("free count matches");
        if let Ok(pair) = SecretPair::new(ring, a, gamma) {
            return pair;
        }
        buf.push(0x00);
    }
}

/// `H2(x) = SHAKE256(0x02 ‖ x, l1)`.
pub fn h2(input: &[u8], bits: KeyBits) -> SessionKey {
    let mut out = vec![0u8; bits.bytes()];
    shake(&[&[H2_PREFIX], input], &mut out);
    SessionKey(out)
}

fn h2_pair(a: &[u8], b: &[u8], bits: KeyBits) -> SessionKey {
    let mut out = vec![0u8; bits.bytes()];
    shake(&[&[H2_PREFIX], a, b], &mut out);
    SessionKey(out)
}

/// Returns the private key and `rep(pk)`.
pub fn keygen<R: RngCore + CryptoRng + ?Sized>(params: &Params, rng: &mut R) -> (KemPrivate, Vec<u8>) {
    let kp = pke::keygen(params, rng);
    let s = params.ring().sample_ring(rng);
    let pk_bytes = codec::rep(params.ring(), &kp.pk);
    (KemPrivate { s, sk: kp.sk, pk: kp.pk }, pk_bytes)
}

/// Encapsulation for a fixed message `m`; [`encaps`] draws `m` at random.
pub fn encaps_with_message(
    params: &Params,
    pk_bytes: &[u8],
    m: &RingElement,
    bits: KeyBits,
) -> Result<(KemCiphertext, SessionKey)> {
    let ring = params.ring();
    let pk = codec::decode_canonical(ring, pk_bytes)?;
    let m_bytes = codec::rep(ring, m);
    let r = h1(ring, &[m_bytes.as_slice(), pk_bytes].concat());
    let c = pke::encrypt(params, m, &pk, &r)?.to_bytes(ring);
    let key = h2_pair(&m_bytes, &c, bits);
    Ok((KemCiphertext(c), key))
}

pub fn encaps<R: RngCore + CryptoRng + ?Sized>(
    params: &Params,
    pk_bytes: &[u8],
    bits: KeyBits,
    rng: &mut R,
) -> Result<(KemCiphertext, SessionKey)> {
    let m = params.ring().sample_ring(rng);
    encaps_with_message(params, pk_bytes, &m, bits)
}

/// Never fails: malformed or inauthentic ciphertexts map to the implicit
/// rejection key.
pub fn decaps(params: &Params, private: &KemPrivate, c: &[u8], bits: KeyBits) -> SessionKey {
    match reencrypt_check(params, private, c) {
        Some(m_bytes) => h2_pair(&m_bytes, c, bits),
        None => h2_pair(&codec::rep(params.ring(), &private.s), c, bits),
    }
}

/// Returns `rep(m')` when `c` is the honest encryption of the decrypted `m'`.
fn reencrypt_check(params: &Params, private: &KemPrivate, c: &[u8]) -> Option<Vec<u8>> {
    let ring = params.ring();
    let ct = Ciphertext::from_bytes(ring, c).ok()?;
    let m = pke::decrypt(params, &ct, &private.sk).ok()?;
    let m_bytes = codec::rep(ring, &m);
    let pk_bytes = codec::rep(ring, &private.pk);
    let r = h1(ring, &[m_bytes.as_slice(), &pk_bytes].concat());
    let again = pke::encrypt(params, &m, &private.pk, &r).ok()?;
    (again.to_bytes(ring) == c).then_some(m_bytes)
}

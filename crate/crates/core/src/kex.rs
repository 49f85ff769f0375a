//! Two-party key exchange over the skew dihedral group ring.
//!
//! Each party picks `(a, γ) ∈ F C_n × Γ_θ`, publishes `pk = a·h·γ` and
//! derives `k = a·pk_peer·γ̂`. Both sides obtain the same `k` because `F C_n`
//! is commutative and `γ_j γ̂_i = γ_i γ̂_j` on `Γ_θ`.

use rand::{CryptoRng, RngCore};
use zeroize::{Zeroize, ZeroizeOnDrop};

use crate::codec;
use crate::error::{Error, Result};
use crate::params::Params;
use crate::ring::{ReversibleElement, RingElement, SkewRing, SubspaceTag};

/// Secret pair `(a, γ)` with `a ∈ F C_n` and `γ ∈ Γ_θ`, both non-zero.
/// Wiped on drop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecretPair {
    a: RingElement,
    gamma: ReversibleElement,
}

impl Zeroize for SecretPair {
    fn zeroize(&mut self) {
        self.a.zeroize();
        self.gamma.element_mut().zeroize();
    }
}

impl Drop for SecretPair {
    fn drop(&mut self) {
        self.zeroize();
    }
}

impl ZeroizeOnDrop for SecretPair {}

impl SecretPair {
    pub fn new(ring: &SkewRing, a: RingElement, gamma: ReversibleElement) -> Result<Self> {
        ring.check(&a)?;
        ring.check(gamma.as_element())?;
        match ring.classify(&a) {
            SubspaceTag::CnOnly => {}
            SubspaceTag::Zero => return Err(Error::ZeroSecret),
            _ => return Err(Error::Domain("a must lie in F C_n")),
        }
        if gamma.is_zero() {
            return Err(Error::ZeroSecret);
        }
        Ok(SecretPair { a, gamma })
    }

    /// Builds a pair without the non-zero checks. Used by exhaustive search,
    /// which has to range over the whole secret space.
    pub(crate) fn new_unchecked(a: RingElement, gamma: ReversibleElement) -> Self {
        SecretPair { a, gamma }
    }

    /// Uniform over non-zero `a` and non-zero `γ`.
    pub fn sample<R: RngCore + ?Sized>(ring: &SkewRing, rng: &mut R) -> Self {
        let a = loop {
            let a = ring.sample_cn(rng);
            if !a.is_zero() {
                break a;
            }
        };
        let gamma = loop {
            let g = ring.sample_gamma(rng);
            if !g.is_zero() {
                break g;
            }
        };
        SecretPair { a, gamma }
    }

    pub fn a(&self) -> &RingElement {
        &self.a
    }

    pub fn gamma(&self) -> &ReversibleElement {
        &self.gamma
    }

    /// `a·h·γ`.
    pub fn public_value(&self, ring: &SkewRing, h: &RingElement) -> Result<RingElement> {
        ring.mul3(&self.a, h, self.gamma.as_element())
    }

    /// `a·x·γ̂`.
    pub fn apply_adjoint(&self, ring: &SkewRing, x: &RingElement) -> Result<RingElement> {
        ring.mul3(&self.a, x, &ring.adjunct(self.gamma.as_element()))
    }
}

/// Fresh secrets and their public value `pk = a·h·γ`.
pub fn keygen<R: RngCore + CryptoRng + ?Sized>(params: &Params, rng: &mut R) -> (SecretPair, RingElement) {
    let sk = SecretPair::sample(params.ring(), rng);
    let pk = sk.public_value(params.ring(), params.h()).expect("params are consistent");
    (sk, pk)
}

/// Shared key `k = a·pk_peer·γ̂`.
pub fn shared(params: &Params, sk: &SecretPair, peer_pk: &RingElement) -> Result<RingElement> {
    sk.apply_adjoint(params.ring(), peer_pk)
}

/// Message `(party, session, pk)` sent by each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KexMessage {
    pub party_id: Vec<u8>,
    pub session_id: Vec<u8>,
    pub pk: RingElement,
}

fn put_prefixed(out: &mut Vec<u8>, bytes: &[u8]) {
    out.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
    out.extend_from_slice(bytes);
}

fn take_prefixed<'a>(input: &mut &'a [u8]) -> Result<&'a [u8]> {
    if input.len() < 4 {
        return Err(Error::MalformedFile("truncated length prefix"));
    }
    let len = u32::from_be_bytes(input[..4].try_into().expect("4 bytes")) as usize;
    let rest = &input[4..];
    if rest.len() < len {
        return Err(Error::MalformedFile("truncated field"));
    }
    let (field, rest) = rest.split_at(len);
    *input = rest;
    Ok(field)
}

impl KexMessage {
    /// `len(party) ‖ party ‖ len(session) ‖ session ‖ rep(pk)`, lengths as
    /// 4-byte big-endian integers.
    pub fn encode(&self, ring: &SkewRing) -> Vec<u8> {
        let mut out = Vec::new();
        put_prefixed(&mut out, &self.party_id);
        put_prefixed(&mut out, &self.session_id);
        out.extend_from_slice(&codec::rep(ring, &self.pk));
        out
    }

    pub fn decode(ring: &SkewRing, bytes: &[u8]) -> Result<Self> {
        let mut input = bytes;
        let party_id = take_prefixed(&mut input)?.to_vec();
        let session_id = take_prefixed(&mut input)?.to_vec();
        let pk = codec::decode_canonical(ring, input)?;
        Ok(KexMessage { party_id, session_id, pk })
    }
}

/// One party's side of a session. The secret pair is erased as soon as the
/// key has been derived.
#[derive(Debug)]
pub struct Session {
    party_id: Vec<u8>,
    session_id: Vec<u8>,
    secret: Option<SecretPair>,
    pk: RingElement,
}

impl Session {
    pub fn start<R: RngCore + CryptoRng + ?Sized>(
        params: &Params,
        party_id: &[u8],
        session_id: &[u8],
        rng: &mut R,
    ) -> (Session, KexMessage) {
        let (sk, pk) = keygen(params, rng);
        let msg = KexMessage { party_id: party_id.to_vec(), session_id: session_id.to_vec(), pk: pk.clone() };
        let session = Session { party_id: party_id.to_vec(), session_id: session_id.to_vec(), secret: Some(sk), pk };
        (session, msg)
    }

    pub fn party_id(&self) -> &[u8] {
        &self.party_id
    }

    pub fn session_id(&self) -> &[u8] {
        &self.session_id
    }

    pub fn public_value(&self) -> &RingElement {
        &self.pk
    }

    /// Whether the secret pair is still held.
    pub fn has_secret(&self) -> bool {
        self.secret.is_some()
    }

    /// Derives the session key from the peer's message and erases the secrets.
    pub fn finish(&mut self, params: &Params, peer: &KexMessage) -> Result<RingElement> {
        if peer.session_id != self.session_id {
            return Err(Error::ParamMismatch("session id differs".into()));
        }
        params.ring().check(&peer.pk)?;
        let sk = self.secret.take().ok_or(Error::Domain("session already completed"))?;
        shared(params, &sk, &peer.pk)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamSet;
    use crate::reference;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn identity_secrets() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        let params = Params::generate(ParamSet::P19, &mut rng);
        let ring = params.ring();
        let sk = SecretPair::new(ring, ring.one(), ring.y()).unwrap();
        let pk = sk.public_value(ring, params.h()).unwrap();
        assert_eq!(pk, ring.mul(params.h(), ring.y().as_element()).unwrap());
        // h·y·ŷ = h·y·y = h
        assert_eq!(&shared(&params, &sk, &pk).unwrap(), params.h());
    }

    #[test]
    fn public_value_is_mixed_and_matches_reference() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let params = Params::generate(ParamSet::Toy, &mut rng);
        let ring = params.ring();
        for _ in 0..200 {
            let (sk, pk) = keygen(&params, &mut rng);
            let naive = reference::product(ring, &reference::product(ring, sk.a(), params.h()), sk.gamma().as_element());
            assert_eq!(pk, naive);
            let (lo, hi) = ring.split(&pk);
            // a h1 γ lies in C_n y and a h2 γ in C_n
            let (h1, h2) = ring.split(params.h());
            assert_eq!(hi, sk.public_value(ring, &h1).unwrap());
            assert_eq!(lo, sk.public_value(ring, &h2).unwrap());
        }
        let big = Params::generate(ParamSet::P19, &mut rng);
        let (_, pk) = keygen(&big, &mut rng);
        assert_eq!(big.ring().classify(&pk), SubspaceTag::Mixed);
    }

    #[test]
    fn keygen_is_reproducible() {
        let params = Params::generate(ParamSet::P23, &mut ChaCha20Rng::seed_from_u64(3));
        let a = keygen(&params, &mut ChaCha20Rng::seed_from_u64(4));
        let b = keygen(&params, &mut ChaCha20Rng::seed_from_u64(4));
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_malformed_secrets() {
        let ring = ParamSet::Toy.ring();
        assert_eq!(SecretPair::new(&ring, ring.zero(), ring.y()), Err(Error::ZeroSecret));
        let zero_gamma = ring.reversible(ring.zero()).unwrap();
        assert_eq!(SecretPair::new(&ring, ring.one(), zero_gamma), Err(Error::ZeroSecret));
        let mixed = ring.add(&ring.one(), ring.y().as_element()).unwrap();
        assert!(SecretPair::new(&ring, mixed, ring.y()).is_err());
    }

    #[test]
    fn sessions_agree_and_erase() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let params = Params::generate(ParamSet::P19, &mut rng);
        let (mut alice, m1) = Session::start(&params, b"alice", b"s1", &mut rng);
        let (mut bob, m2) = Session::start(&params, b"bob", b"s1", &mut rng);
        let m1 = KexMessage::decode(params.ring(), &m1.encode(params.ring())).unwrap();
        let kb = bob.finish(&params, &m1).unwrap();
        let ka = alice.finish(&params, &m2).unwrap();
        assert_eq!(ka, kb);
        assert!(!alice.has_secret() && !bob.has_secret());
        assert!(alice.finish(&params, &m2).is_err());
        assert_eq!(m1.party_id, b"alice");
    }

    #[test]
    fn session_id_mismatch() {
        let mut rng = ChaCha20Rng::seed_from_u64(6);
        let params = Params::generate(ParamSet::Toy, &mut rng);
        let (mut a, _) = Session::start(&params, b"a", b"s1", &mut rng);
        let (_, m) = Session::start(&params, b"b", b"s2", &mut rng);
        assert!(a.finish(&params, &m).is_err());
        assert!(a.has_secret());
    }

    #[test]
    fn tampered_public_value_changes_key() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let params = Params::generate(ParamSet::P19, &mut rng);
        let mut differ = 0;
        for _ in 0..1000 {
            let (ski, pki) = keygen(&params, &mut rng);
            let (skj, pkj) = keygen(&params, &mut rng);
            let honest = shared(&params, &skj, &pki).unwrap();
            assert_eq!(honest, shared(&params, &ski, &pkj).unwrap());
            let fake = params.ring().gen_public_element(&mut rng);
            if shared(&params, &ski, &fake).unwrap() != honest {
                differ += 1;
            }
        }
        assert!(differ >= 999);
    }
}

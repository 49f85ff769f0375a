//! Public-key cryptography over the skew dihedral group ring `F_{q^2}^θ D_2n`.
//!
//! The ring is the group algebra of the dihedral group over `F_{q^2}`,
//! twisted so that reflections act on coefficients by the Frobenius map.
//! On top of it the crate provides
//!
//! * [`kex`]: a two-party key exchange with public values `a·h·γ`,
//! * [`pke`]: a probabilistic public-key encryption scheme,
//! * [`kem`]: a key encapsulation mechanism with implicit rejection,
//! * [`games`]: challengers and toy-size attacks for the underlying problems.
//!
//! ```
//! use rand::SeedableRng;
//! use rand_chacha::ChaCha20Rng;
//! use sdgr::{kem, KeyBits, ParamSet, Params};
//!
//! let mut rng = ChaCha20Rng::seed_from_u64(7);
//! let params = Params::generate(ParamSet::P19, &mut rng);
//! let (private, pk) = kem::keygen(&params, &mut rng);
//! let (ct, key) = kem::encaps(&params, &pk, KeyBits::B256, &mut rng).unwrap();
//! assert_eq!(kem::decaps(&params, &private, ct.as_bytes(), KeyBits::B256), key);
//! ```
//!
//! Arithmetic is not constant time. This is a research artifact.

pub mod cli;
pub mod codec;
pub mod dihedral;
pub mod error;
pub mod field;
pub mod files;
pub mod games;
pub mod kem;
pub mod kex;
pub mod message;
pub mod params;
pub mod pke;
pub mod reference;
pub mod ring;

pub use error::{Error, Result};
pub use field::{Field, Fq2};
pub use kem::{KeyBits, SessionKey};
pub use kex::SecretPair;
pub use params::{ParamSet, Params};
pub use ring::{ReversibleElement, RingElement, SkewRing, SubspaceTag};

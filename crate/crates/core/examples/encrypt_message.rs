//! Encrypts a short byte string with the ring PKE and decrypts it again.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::{message, pke, ParamSet, Params, SecretPair};

fn main() -> sdgr::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    let params = Params::generate(ParamSet::P31, &mut rng);
    let ring = params.ring();
    let keys = pke::keygen(&params, &mut rng);

    let text = b"attack at dawn";
    println!("capacity: {} bytes per ring element", message::capacity(ring));
    let m = message::encode(ring, text)?;

    let r2 = SecretPair::sample(ring, &mut rng);
    let c = pke::encrypt(&params, &m, &keys.pk, &r2)?;
    let bytes = c.to_bytes(ring);
    println!("ciphertext: {} bytes", bytes.len());

    let c = pke::Ciphertext::from_bytes(ring, &bytes)?;
    let recovered = message::decode(ring, &pke::decrypt(&params, &c, &keys.sk)?)?;
    println!("recovered: {}", String::from_utf8_lossy(&recovered));
    assert_eq!(recovered, text);

    let other = pke::keygen(&params, &mut rng);
    let garbled = pke::decrypt(&params, &c, &other.sk)?;
    println!("wrong key recovers message: {}", message::decode(ring, &garbled).ok().as_deref() == Some(&text[..]));
    Ok(())
}

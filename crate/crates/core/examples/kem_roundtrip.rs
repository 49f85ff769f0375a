//! KEM key agreement through the on-disk formats, plus implicit rejection.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::{files, kem, KeyBits, ParamSet, Params};

fn main() -> sdgr::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    let params = Params::generate(ParamSet::P41, &mut rng);
    let ring = params.ring();
    println!("H1 output: {} bits", kem::h1_output_bits(ring));

    for bits in KeyBits::ALL {
        let (private, pk) = kem::keygen(&params, &mut rng);
        let pub_file = files::write_public_key(ring, bits, &pk);
        let priv_file = files::write_private_key(ring, bits, &private);

        let (_, pk) = files::read_public_key(ring, &pub_file)?;
        let (ct, sent) = kem::encaps(&params, &pk, bits, &mut rng)?;
        let ct_file = files::write_ciphertext(ring, bits, ct.as_bytes());

        let (_, private) = files::read_private_key(ring, &priv_file)?;
        let (_, c) = files::read_ciphertext(ring, &ct_file)?;
        let received = kem::decaps(&params, &private, &c, bits);
        println!("l1={:3} ciphertext={}B key={} match={}", bits.bits(), ct_file.len(), sent.to_hex(), sent == received);

        let mut tampered = c.clone();
        tampered[0] ^= 0x01;
        let rejected = kem::decaps(&params, &private, &tampered, bits);
        println!("        tampered key differs: {}", rejected != sent);
    }
    Ok(())
}

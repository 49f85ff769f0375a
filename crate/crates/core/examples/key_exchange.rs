//! Two parties agree on a ring element over an authenticated channel.
//!
//! Run with `cargo run --example key_exchange -- p23`.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::codec;
use sdgr::kex::{KexMessage, Session};
use sdgr::{ParamSet, Params};

fn main() -> sdgr::Result<()> {
    let set: ParamSet = std::env::args().nth(1).as_deref().unwrap_or("p19").parse()?;
    let mut rng = ChaCha20Rng::seed_from_u64(2024);
    let params = Params::generate(set, &mut rng);
    let ring = params.ring();

    let (mut alice, to_bob) = Session::start(&params, b"alice", b"session-1", &mut rng);
    let (mut bob, to_alice) = Session::start(&params, b"bob", b"session-1", &mut rng);

    // what actually crosses the wire
    let wire_a = to_bob.encode(ring);
    let wire_b = to_alice.encode(ring);
    println!("{set}: message sizes {} and {} bytes", wire_a.len(), wire_b.len());

    let k_bob = bob.finish(&params, &KexMessage::decode(ring, &wire_a)?)?;
    let k_alice = alice.finish(&params, &KexMessage::decode(ring, &wire_b)?)?;

    println!("alice: {}", hex::encode(codec::rep(ring, &k_alice)));
    println!("bob:   {}", hex::encode(codec::rep(ring, &k_bob)));
    println!("agree: {}", k_alice == k_bob);
    println!("secrets erased: {}", !alice.has_secret() && !bob.has_secret());
    Ok(())
}

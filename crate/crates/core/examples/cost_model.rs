//! Counts field operations in the ring arithmetic and compares them with
//! the closed-form model: `4n²` additions and `4n²(1+f)` multiplications
//! for a product, `2n·f` for an adjunct and `2n` additions for a sum, where
//! `f` is the cost of one Frobenius ladder.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sdgr::field::CountingOps;
use sdgr::ParamSet;

fn main() -> sdgr::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(1);
    println!("{:>5} {:>3} {:>10} {:>12} {:>10}", "set", "f", "prod add", "prod mul", "adj mul");
    for set in ParamSet::PROPOSED {
        let ring = set.ring();
        let n = ring.n() as u64;
        let f = ring.field().ladder_cost();
        let a = ring.sample_ring(&mut rng);
        let b = ring.sample_ring(&mut rng);

        let mut ops = CountingOps::new(*ring.field());
        ring.mul_with(&mut ops, &a, &b)?;
        let prod = ops.counts;
        let mut ops = CountingOps::new(*ring.field());
        ring.adjunct_with(&mut ops, &a);
        let adj = ops.counts;

        assert_eq!(prod.additions, 4 * n * n);
        assert_eq!(prod.multiplications, 4 * n * n * (1 + f));
        assert_eq!(adj.multiplications, 2 * n * f);
        println!("{:>5} {:>3} {:>10} {:>12} {:>10}", set, f, prod.additions, prod.multiplications, adj.multiplications);
    }
    Ok(())
}

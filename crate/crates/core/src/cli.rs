//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 corrupt file, 3 parameter
//! mismatch, 4 search-space guard violation.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::codec;
use crate::error::Error;
use crate::field::CountingOps;
use crate::files;
use crate::games;
use crate::kem::{self, KeyBits};
use crate::kex;
use crate::params::{ParamSet, Params};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CORRUPT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "sdgr", version, about = "Skew dihedral group ring KEM and key exchange")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate public parameters (including h) for a named set
    Params {
        #[arg(long)]
        set: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 256)]
        l1: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a KEM key pair; writes <out> (private) and <out>.pub
    Keygen {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        l1: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encapsulate to a public key; writes the ciphertext and prints the key
    Encaps {
        #[arg(long)]
        params: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        l1: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decapsulate a ciphertext and print the key
    Decaps {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        l1: Option<u32>,
    },
    /// Run both sides of the key exchange in-process
    Kexdemo {
        #[arg(long)]
        set: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Exhaustively solve a decomposition instance (toy set only)
    SolveSdpd {
        #[arg(long, default_value = "toy")]
        set: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time the core operations and check the field-operation counts
    Bench {
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 200)]
        iters: u32,
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Checksum | Error::MalformedFile(_) | Error::EncodingLength { .. } | Error::NonCanonical => EXIT_CORRUPT,
            Error::ParamMismatch(_) => EXIT_MISMATCH,
            Error::SearchSpaceTooLarge(_) => EXIT_GUARD,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn rng_for(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_entropy(),
    }
}

fn read(path: &Path) -> std::result::Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure { code: EXIT_FAILURE, message: format!("{}: {e}", path.display()) })
}

fn write(path: &Path, bytes: &[u8]) -> CmdResult {
    std::fs::write(path, bytes).map_err(|e| Failure { code: EXIT_FAILURE, message: format!("{}: {e}", path.display()) })
}

fn hex_of(params: &Params, e: &crate::ring::RingElement) -> String {
    hex::encode(codec::rep(params.ring(), e))
}

/// Resolves the key length against the one recorded in a file.
fn key_bits(flag: Option<u32>, recorded: KeyBits) -> std::result::Result<KeyBits, Failure> {
    match flag {
        None => Ok(recorded),
        Some(bits) => {
            let requested = KeyBits::from_bits(bits)?;
            if requested != recorded {
                return Err(Error::ParamMismatch(format!("--l1 {bits} but file records {}", recorded.bits())).into());
            }
            Ok(requested)
        }
    }
}

fn parse_set(out: &mut dyn Write, name: &str) -> std::result::Result<ParamSet, Failure> {
    let set: ParamSet = name.parse()?;
    if set == ParamSet::Toy {
        writeln!(out, "warning: toy parameters are desk-scale only")?;
    }
    Ok(set)
}

fn load_params(path: &Path) -> std::result::Result<(Params, KeyBits), Failure> {
    Ok(files::read_params(&read(path)?)?)
}

fn cmd_params(out: &mut dyn Write, set: &str, seed: Option<u64>, l1: u32, path: &Path) -> CmdResult {
    let set = parse_set(out, set)?;
    let bits = KeyBits::from_bits(l1)?;
    let params = Params::generate(set, &mut rng_for(seed));
    write(path, &files::write_params(&params, bits))?;
    let f = params.ring().field();
    writeln!(out, "set={} p={} m={} n={} lambda={} l1={}", set, f.p(), f.m(), params.n(), f.lambda(), bits.bits())?;
    Ok(())
}

fn cmd_keygen(out: &mut dyn Write, params_path: &Path, seed: Option<u64>, l1: Option<u32>, path: &Path) -> CmdResult {
    let (params, recorded) = load_params(params_path)?;
    let bits = key_bits(l1, recorded)?;
    let (private, pk) = kem::keygen(&params, &mut rng_for(seed));
    let ring = params.ring();
    write(path, &files::write_private_key(ring, bits, &private))?;
    let mut pub_path = path.as_os_str().to_owned();
    pub_path.push(".pub");
    let pub_path = PathBuf::from(pub_path);
    write(&pub_path, &files::write_public_key(ring, bits, &pk))?;
    writeln!(out, "private={} public={}", path.display(), pub_path.display())?;
    Ok(())
}

fn cmd_encaps(out: &mut dyn Write, params_path: &Path, input: &Path, seed: Option<u64>, l1: Option<u32>, path: &Path) -> CmdResult {
    let (params, _) = load_params(params_path)?;
    let (header, pk) = files::read_public_key(params.ring(), &read(input)?)?;
    let bits = key_bits(l1, header.key_bits)?;
    let (c, key) = kem::encaps(&params, &pk, bits, &mut rng_for(seed))?;
    write(path, &files::write_ciphertext(params.ring(), bits, c.as_bytes()))?;
    writeln!(out, "{}", key.to_hex())?;
    Ok(())
}

fn cmd_decaps(out: &mut dyn Write, params_path: &Path, key_path: &Path, input: &Path, l1: Option<u32>) -> CmdResult {
    let (params, _) = load_params(params_path)?;
    let (key_header, private) = files::read_private_key(params.ring(), &read(key_path)?)?;
    let (header, c) = files::read_ciphertext(params.ring(), &read(input)?)?;
    if header.key_bits != key_header.key_bits {
        return Err(Error::ParamMismatch("ciphertext and key record different l1".into()).into());
    }
    let bits = key_bits(l1, header.key_bits)?;
    let key = kem::decaps(&params, &private, &c, bits);
    writeln!(out, "{}", key.to_hex())?;
    Ok(())
}

fn cmd_kexdemo(out: &mut dyn Write, set: &str, seed: Option<u64>) -> CmdResult {
    let set = parse_set(out, set)?;
    let mut rng = rng_for(seed);
    let params = Params::generate(set, &mut rng);
    let (mut pi, msg_i) = kex::Session::start(&params, b"P_i", b"s", &mut rng);
    let (mut pj, msg_j) = kex::Session::start(&params, b"P_j", b"s", &mut rng);
    let kj = pj.finish(&params, &msg_i)?;
    let ki = pi.finish(&params, &msg_j)?;
    writeln!(out, "set={set}")?;
    writeln!(out, "pk_i={}", hex_of(&params, &msg_i.pk))?;
    writeln!(out, "pk_j={}", hex_of(&params, &msg_j.pk))?;
    writeln!(out, "k_i={}", hex_of(&params, &ki))?;
    writeln!(out, "k_j={}", hex_of(&params, &kj))?;
    if ki != kj {
        writeln!(out, "keys differ")?;
        return Err(Failure { code: EXIT_FAILURE, message: "key mismatch".into() });
    }
    writeln!(out, "keys match")?;
    Ok(())
}

fn cmd_solve_sdpd(out: &mut dyn Write, set: &str, seed: Option<u64>) -> CmdResult {
    let set = parse_set(out, set)?;
    let mut rng = rng_for(seed);
    let params = Params::generate(set, &mut rng);
    let space = games::secret_space_size(params.ring());
    let (inst, hidden, _w1, w2) = games::csdp_challenge(&params, &mut rng);
    let sdpd = games::SdpdInstance { pk: inst.pk2.clone() };
    let start = Instant::now();
    let witnesses = games::sdpd_bruteforce(&params, &sdpd)?;
    let elapsed = start.elapsed();
    let planted = witnesses.contains(w2.reveal());
    let recovered = witnesses.iter().all(|w| {
        games::csdp_from_decomposition(&params, &inst, w).map(|k| games::csdp_verify(&hidden, &k)).unwrap_or(false)
    });
    writeln!(out, "candidates={space}")?;
    writeln!(out, "witnesses={}", witnesses.len())?;
    writeln!(out, "planted_found={planted}")?;
    writeln!(out, "elapsed_ms={}", elapsed.as_millis())?;
    writeln!(out, "CSDP key recovered: {}", recovered && !witnesses.is_empty())?;
    Ok(())
}

fn cmd_bench(out: &mut dyn Write, set: &str, iters: u32, seed: Option<u64>) -> CmdResult {
    let set = parse_set(out, set)?;
    let mut rng = rng_for(seed);
    let params = Params::generate(set, &mut rng);
    let ring = params.ring();
    let n = ring.n() as u64;
    let f = ring.field().ladder_cost();
    let a = ring.sample_ring(&mut rng);
    let b = ring.sample_ring(&mut rng);

    let time = |label: &str, out: &mut dyn Write, op: &mut dyn FnMut()| -> std::io::Result<()> {
        let start = Instant::now();
        for _ in 0..iters {
            op();
        }
        let per = start.elapsed().as_secs_f64() * 1e6 / iters.max(1) as f64;
        writeln!(out, "time_{label}_us={per:.2}")
    };
    writeln!(out, "set={set} n={n} f={f} iters={iters}")?;
    time("add", out, &mut || drop(ring.add(&a, &b)))?;
    time("product", out, &mut || drop(ring.mul(&a, &b)))?;
    time("adjunct", out, &mut || drop(ring.adjunct(&a)))?;
    let (private, pk) = kem::keygen(&params, &mut rng);
    let (c, _) = kem::encaps(&params, &pk, KeyBits::B256, &mut rng)?;
    time("encaps", out, &mut || drop(kem::encaps(&params, &pk, KeyBits::B256, &mut rng)))?;
    time("decaps", out, &mut || drop(kem::decaps(&params, &private, c.as_bytes(), KeyBits::B256)))?;

    let mut ops = CountingOps::new(*ring.field());
    ring.add_with(&mut ops, &a, &b)?;
    let add = ops.counts;
    let mut ops = CountingOps::new(*ring.field());
    ring.mul_with(&mut ops, &a, &b)?;
    let prod = ops.counts;
    let mut ops = CountingOps::new(*ring.field());
    ring.adjunct_with(&mut ops, &a);
    let adj = ops.counts;

    let checks = [
        ("add_additions", add.additions, 2 * n),
        ("product_additions", prod.additions, 4 * n * n),
        ("product_multiplications", prod.multiplications, 4 * n * n * (1 + f)),
        ("adjunct_multiplications", adj.multiplications, 2 * n * f),
    ];
    let mut all = true;
    for (label, measured, model) in checks {
        writeln!(out, "{label} measured={measured} model={model} match={}", measured == model)?;
        all &= measured == model;
    }
    writeln!(out, "cost_model_match={all}")?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_FAILURE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Params { set, seed, l1, out: path } => cmd_params(out, set, *seed, *l1, path),
        Command::Keygen { params, seed, l1, out: path } => cmd_keygen(out, params, *seed, *l1, path),
        Command::Encaps { params, input, seed, l1, out: path } => cmd_encaps(out, params, input, *seed, *l1, path),
        Command::Decaps { params, key, input, l1 } => cmd_decaps(out, params, key, input, *l1),
        Command::Kexdemo { set, seed } => cmd_kexdemo(out, set, *seed),
        Command::SolveSdpd { set, seed } => cmd_solve_sdpd(out, set, *seed),
        Command::Bench { set, iters, seed } => cmd_bench(out, set, *iters, *seed),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

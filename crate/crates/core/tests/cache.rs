use gridcycles::cli::{self, cmd_count, Cache, Context, CountMethod, OutputDocument};
use gridcycles::{Sign, Signature};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x6772_6964;
const SAMPLES: usize = 20;

fn random_signature(rng: &mut ChaCha8Rng) -> Signature {
    let k = rng.gen_range(2..=4);
    let signs = (0..k)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
        .collect();
    Signature::new(signs).unwrap()
}

#[test]
fn cached_values_equal_fresh_values() {
    let dir = tempfile::tempdir().unwrap();
    let cached = Context {
        cache: Some(Cache::new(dir.path()).unwrap()),
        ..Context::default()
    };
    let fresh = Context::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..SAMPLES {
        let sigma = random_signature(&mut rng);
        let n = rng.gen_range(3..=8);
        let method = if sigma.table_index().is_some() {
            CountMethod::Both
        } else {
            CountMethod::Oracle
        };
        let cold = cmd_count(&cached, &sigma, n, method)
            .unwrap()
            .document
            .to_json();
        let warm = cmd_count(&cached, &sigma, n, method)
            .unwrap()
            .document
            .to_json();
        let reference = cmd_count(&fresh, &sigma, n, method)
            .unwrap()
            .document
            .to_json();
        assert_eq!(warm, cold, "{sigma} n={n}");
        assert_eq!(warm, reference, "{sigma} n={n}");
    }
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}

#[test]
fn warm_cache_is_byte_identical_and_actually_read() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "gridcycles",
        "sequence",
        "--sigma",
        "s6",
        "--n-max",
        "8",
        "--method",
        "both",
        "--cache-dir",
        d,
    ];
    let mut first = Vec::new();
    assert_eq!(cli::run(args, &mut first, &mut Vec::new()), 0);
    let entries: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(entries.len(), 1);
    assert_eq!(std::fs::read(&entries[0]).unwrap(), first);

    let mut second = Vec::new();
    assert_eq!(cli::run(args, &mut second, &mut Vec::new()), 0);
    assert_eq!(first, second);

    // a planted entry is served, which shows the second run read the cache
    let mut planted = OutputDocument::from_json(std::str::from_utf8(&first).unwrap()).unwrap();
    planted.payload.summary = Some(serde_json::json!("planted"));
    std::fs::write(&entries[0], planted.to_json()).unwrap();
    let mut third = Vec::new();
    cli::run(args, &mut third, &mut Vec::new());
    assert!(String::from_utf8(third).unwrap().contains("planted"));
}

#[test]
fn verification_never_touches_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = [
        "gridcycles",
        "verify",
        "bijection",
        "--n-max",
        "6",
        "--cache-dir",
        d,
    ];
    assert_eq!(cli::run(args, &mut Vec::new(), &mut Vec::new()), 0);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    std::env::set_var(gridcycles::cli::cache::CACHE_DIR_ENV, dir.path());
    let args = ["gridcycles", "count", "--sigma", "s3", "--n", "6"];
    assert_eq!(cli::run(args, &mut Vec::new(), &mut Vec::new()), 0);
    std::env::remove_var(gridcycles::cli::cache::CACHE_DIR_ENV);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

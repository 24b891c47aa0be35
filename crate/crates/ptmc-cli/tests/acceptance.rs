//! Acceptance suite. One test per criterion; each prints a PASS line with
//! its measured runtime (visible with `-- --nocapture`) and enforces the
//! runtime budget.
//!
//! Expected values are checked with test-local oracles (direct inner
//! products, pattern enumeration) rather than the library's own
//! verification path wherever the criterion is about code properties.

use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use ptmc_core::{
    encode, family_length, generate_hadamard_code, generate_ptmc, run_exhaustive,
    run_monte_carlo, CodeMatrix, CodeSpec, FamilyParams, SimConfig,
};

fn ptmc_bin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut command = Command::new(env!("CARGO_BIN_EXE_ptmc"));
    command.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    match stdin {
        Some(input) => {
            command.stdin(Stdio::piped());
            let mut child = command.spawn().expect("binary spawns");
            child
                .stdin
                .take()
                .expect("stdin piped")
                .write_all(input.as_bytes())
                .expect("stdin accepts input");
            child.wait_with_output().expect("binary runs")
        }
        None => command.output().expect("binary runs"),
    }
}

fn generate(users: usize, weight: usize) -> CodeMatrix {
    generate_ptmc(CodeSpec::new(users, weight).unwrap()).unwrap()
}

/// Test-local inner product, independent of the library's analysis path.
fn overlap(a: &[u8], b: &[u8]) -> u64 {
    a.iter().zip(b).map(|(&x, &y)| u64::from(x & y)).sum()
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name} took {elapsed:?}, budget {budget:?}"
    );
    println!("{name}: PASS ({elapsed:.2?})");
}

#[test]
fn criterion_1_golden_reproduction() {
    let started = Instant::now();

    // (users, weight, expected rows as printed).
    let full_fixtures: [(usize, usize, &[&str]); 4] = [
        (4, 2, &[
            "0 0 0 1 1 0 0 0",
            "0 0 1 0 0 1 0 0",
            "0 1 0 0 0 0 1 0",
            "1 0 0 0 0 0 0 1",
        ]),
        (4, 4, &[
            "0 0 0 0 0 0 1 1 1 1 0 0 0 0 0 0",
            "0 0 1 0 0 1 0 0 0 0 1 0 0 1 0 0",
            "0 1 0 0 1 0 0 0 0 0 0 1 0 0 1 0",
            "1 0 0 1 0 0 0 0 0 0 0 0 1 0 0 1",
        ]),
        (4, 3, &[
            "0 0 0 0 0 0 1 1 1 0 0 0",
            "0 0 1 0 0 1 0 0 0 1 0 0",
            "0 1 0 0 1 0 0 0 0 0 1 0",
            "1 0 0 1 0 0 0 0 0 0 0 1",
        ]),
        (6, 3, &[
            "0 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 0 0",
            "0 0 0 0 1 0 0 0 0 1 0 0 0 1 0 0 0 0",
            "0 0 0 1 0 0 0 0 1 0 0 0 0 0 1 0 0 0",
            "0 0 1 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0",
            "0 1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0",
            "1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1",
        ]),
    ];

    for (users, weight, expected) in full_fixtures {
        let out = ptmc_bin(
            &["generate", "--users", &users.to_string(), "--weight", &weight.to_string()],
            None,
        );
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body, expected, "N={users} W={weight}");
    }

    // Weight-6 pattern: rows 2..=4 as printed; 24 columns.
    let weight_six_tail = [
        "0 0 1 0 0 1 0 0 1 0 0 0 0 0 0 1 0 0 1 0 0 1 0 0",
        "0 1 0 0 1 0 0 1 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1 0",
        "1 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1",
    ];
    let out = ptmc_bin(&["generate", "--users", "4", "--weight", "6"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body.len(), 4);
    assert_eq!(body[0].split_whitespace().count(), 24);
    assert_eq!(&body[1..], &weight_six_tail, "N=4 W=6 rows 2..=4");

    finish("criterion 1 (golden reproduction)", started, Duration::from_secs(1));
}

#[test]
fn criterion_2_property_sweep() {
    let started = Instant::now();

    for users in 2..=32usize {
        for weight in 2..=32usize {
            let m = generate(users, weight);
            assert_eq!(m.rows(), users, "N={users} W={weight}");
            assert_eq!(m.cols(), users * weight, "N={users} W={weight}");
            for r in 0..users {
                assert_eq!(m.row_weight(r), weight, "N={users} W={weight} row {r}");
            }
            for c in 0..m.cols() {
                assert_eq!(m.column_sum(c), 1, "N={users} W={weight} column {c}");
            }
            for i in 0..users {
                for j in i + 1..users {
                    assert_eq!(
                        overlap(m.row(i), m.row(j)),
                        0,
                        "N={users} W={weight} pair ({i}, {j})"
                    );
                }
            }
        }
    }

    finish("criterion 2 (property sweep, 961 matrices)", started, Duration::from_secs(10));
}

#[test]
fn criterion_3_family_formulas() {
    let started = Instant::now();

    for q in 2..=10u64 {
        assert_eq!(family_length(FamilyParams::Mfh { q }).unwrap(), q * q + q);
    }

    for order in 2..=8u32 {
        let code = generate_hadamard_code(order).unwrap();
        let length = family_length(FamilyParams::Hadamard { order }).unwrap();
        assert_eq!(length, 1 << order);
        assert_eq!(code.cols() as u64, length);
        let lambda = 1u64 << (order - 2);
        for i in 0..code.rows() {
            for j in i + 1..code.rows() {
                assert_eq!(
                    overlap(code.row(i), code.row(j)),
                    lambda,
                    "order {order}, pair ({i}, {j})"
                );
            }
        }
    }

    for n in 1..=30u64 {
        let length = family_length(FamilyParams::Mdw { n }).unwrap();
        // Always an exact integer by type; the sine term is 0 or 2.
        assert_eq!(length, if n % 3 == 0 { 3 * n } else { 3 * n + 2 });
        if n % 3 == 0 {
            assert_eq!(length, 3 * n);
        }
    }

    for (users, weight) in [(2u64, 2u64), (4, 3), (6, 3), (16, 8), (32, 32)] {
        let length = family_length(FamilyParams::Ptmc { users, weight }).unwrap();
        assert_eq!(length, users * weight);
        assert_eq!(
            generate(users as usize, weight as usize).cols() as u64,
            length
        );
    }

    finish("criterion 3 (family formulas)", started, Duration::from_secs(5));
}

#[test]
fn criterion_4_mai_elimination() {
    let started = Instant::now();

    for (users, weight) in [(4usize, 3usize), (6, 3), (8, 4), (10, 5)] {
        let report = run_exhaustive(&generate(users, weight)).unwrap();
        assert_eq!(report.trials, 1 << users, "N={users} W={weight}");
        assert_eq!(report.bit_errors, 0, "N={users} W={weight}");
        assert_eq!(report.max_interference_observed, 0, "N={users} W={weight}");
    }

    for order in [2u32, 3] {
        let code = generate_hadamard_code(order).unwrap();
        let report = run_exhaustive(&code).unwrap();
        assert!(
            report.bit_errors > 0,
            "order {order}: direct detection must fail under MAI"
        );

        // Enumerate every pattern: at an inactive receiver the correlator
        // reads exactly (active count) * 2^(M-2).
        let users = code.rows();
        let lambda = 1u64 << (order - 2);
        let mut bits = vec![0u8; users];
        for pattern in 0u64..(1 << users) {
            for (user, bit) in bits.iter_mut().enumerate() {
                *bit = ((pattern >> user) & 1) as u8;
            }
            let active: u64 = bits.iter().map(|&b| u64::from(b)).sum();
            let spectrum = encode(&code, &bits).unwrap();
            for user in 1..=users {
                if bits[user - 1] == 0 {
                    let s: u64 = code
                        .row(user - 1)
                        .iter()
                        .zip(&spectrum.power)
                        .map(|(&bit, &p)| u64::from(bit) * u64::from(p))
                        .sum();
                    assert_eq!(s, active * lambda, "order {order}, user {user}");
                }
            }
        }
    }

    finish("criterion 4 (MAI elimination)", started, Duration::from_secs(30));
}

#[test]
fn criterion_5_determinism() {
    let started = Instant::now();

    let matrix_text = {
        let out = ptmc_bin(&["generate", "--users", "16", "--weight", "8"], None);
        assert_eq!(out.status.code(), Some(0));
        String::from_utf8(out.stdout).unwrap()
    };
    let args = ["simulate", "-", "--trials", "10000", "--seed", "1"];
    let first = ptmc_bin(&args, Some(&matrix_text));
    let second = ptmc_bin(&args, Some(&matrix_text));
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");

    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(first.stdout).unwrap()).unwrap();
    assert_eq!(report["bit_errors"], 0);
    assert_eq!(report["trials"], 10000);

    // Same property through the library: noiseless Monte Carlo is exact.
    let in_process = run_monte_carlo(&generate(16, 8), &SimConfig::new(10_000, 1)).unwrap();
    assert_eq!(in_process.bit_errors, 0);
    assert_eq!(in_process.bits_total, 160_000);

    finish("criterion 5 (determinism)", started, Duration::from_secs(30));
}

//! Bit-exact fixtures for the published code patterns.

use ptmc_core::{generate_ptmc, CodeMatrix, CodeSpec};

fn parse(rows: &[&str]) -> CodeMatrix {
    let rows: Vec<Vec<u8>> = rows
        .iter()
        .map(|line| {
            line.split_whitespace()
                .map(|tok| tok.parse::<u8>().unwrap())
                .collect()
        })
        .collect();
    CodeMatrix::from_rows(&rows).unwrap()
}

fn ptmc(users: usize, weight: usize) -> CodeMatrix {
    generate_ptmc(CodeSpec::new(users, weight).unwrap()).unwrap()
}

#[test]
fn four_users_weight_two() {
    let expected = parse(&[
        "0 0 0 1 1 0 0 0",
        "0 0 1 0 0 1 0 0",
        "0 1 0 0 0 0 1 0",
        "1 0 0 0 0 0 0 1",
    ]);
    assert_eq!(ptmc(4, 2), expected);
}

#[test]
fn four_users_weight_three() {
    let expected = parse(&[
        "0 0 0 0 0 0 1 1 1 0 0 0",
        "0 0 1 0 0 1 0 0 0 1 0 0",
        "0 1 0 0 1 0 0 0 0 0 1 0",
        "1 0 0 1 0 0 0 0 0 0 0 1",
    ]);
    assert_eq!(ptmc(4, 3), expected);
}

#[test]
fn four_users_weight_four() {
    let expected = parse(&[
        "0 0 0 0 0 0 1 1 1 1 0 0 0 0 0 0",
        "0 0 1 0 0 1 0 0 0 0 1 0 0 1 0 0",
        "0 1 0 0 1 0 0 0 0 0 0 1 0 0 1 0",
        "1 0 0 1 0 0 0 0 0 0 0 0 1 0 0 1",
    ]);
    assert_eq!(ptmc(4, 4), expected);
}

#[test]
fn four_users_weight_six_block_rows() {
    // The weight-6 pattern: users 2..=4 carry three left and three right
    // chips; user 1 holds the center run at columns 9..=14.
    let expected_tail = parse(&[
        "0 0 1 0 0 1 0 0 1 0 0 0 0 0 0 1 0 0 1 0 0 1 0 0",
        "0 1 0 0 1 0 0 1 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1 0",
        "1 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1",
    ]);
    let generated = ptmc(4, 6);
    assert_eq!(generated.cols(), 24);
    for (row, expected_row) in (1..4).zip(expected_tail.row_iter()) {
        assert_eq!(generated.row(row), expected_row);
    }
    assert_eq!(generated.codeword(1).unwrap(), vec![9, 10, 11, 12, 13, 14]);
}

#[test]
fn six_users_weight_three() {
    let expected = parse(&[
        "0 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 0 0",
        "0 0 0 0 1 0 0 0 0 1 0 0 0 1 0 0 0 0",
        "0 0 0 1 0 0 0 0 1 0 0 0 0 0 1 0 0 0",
        "0 0 1 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0",
        "0 1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0",
        "1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1",
    ]);
    assert_eq!(ptmc(6, 3), expected);
}

#[test]
fn padded_weight_two_layout_canonicalizes_to_the_generated_code() {
    let padded = parse(&[
        "0 0 0 0 1 1 0 0 0 0",
        "0 0 0 1 0 0 1 0 0 0",
        "0 0 1 0 0 0 0 1 0 0",
        "0 1 0 0 0 0 0 0 1 0",
    ]);
    assert_eq!(padded.canonicalize(), ptmc(4, 2));
}

#[test]
fn weight_seven_layout_is_zero_cross_correlation() {
    // Independent check of the 4-left/3-right split: every pair of rows
    // of the generated weight-7 code must be column-disjoint.
    let m = ptmc(4, 7);
    assert_eq!(m.cols(), 28);
    for i in 0..m.rows() {
        assert_eq!(m.row_weight(i), 7);
        for j in i + 1..m.rows() {
            let overlap: u32 = m
                .row(i)
                .iter()
                .zip(m.row(j))
                .map(|(&a, &b)| u32::from(a & b))
                .sum();
            assert_eq!(overlap, 0, "rows {i} and {j} overlap");
        }
    }
}

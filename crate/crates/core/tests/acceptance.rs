//! One line per acceptance criterion, `PASS` or `FAIL`; exits nonzero if any
//! criterion fails. Runs without the test harness so the lines always show.

use std::time::Instant;

use gr_core::bijection::{self, colored_cycle_notation, forward_with_labels, signed_walk, VertexRef};
use gr_core::enumeration::{count_derangements_pie, count_involutions, mystery_polynomial};
use gr_core::verify::{self, lambda_points, SuiteReport};
use gr_core::{BlockSpec, Ornament, Permutation};

const PI: &str = "18 17 15 14 13 12 11 9 1 2 3 4 5 6 7 8 10 16";
const ORNAMENT: &str = "(1 2 2 1 2)(1 2 2)(1 2 1 2)(1 2 1 2)(1 2)";

/// Vertex letter, the element of π sitting there, first seven walk terms.
const TABLE: [(char, usize, [i64; 7]); 18] = [
    ('A', 1, [1, -2, -2, -1, 2, 1, -2]),
    ('B', 18, [2, 2, 1, -2, -1, 2, 2]),
    ('C', 16, [2, 1, -2, -1, 2, 2, 1]),
    ('D', 8, [1, -2, -1, 2, 2, 1, -2]),
    ('E', 9, [2, 1, -2, -2, -1, 2, 1]),
    ('F', 2, [1, -2, -2, -1, 2, 2, 1]),
    ('G', 17, [2, 2, 1, -2, -2, -1, 2]),
    ('H', 10, [2, 1, -2, -2, -1, 2, 2]),
    ('I', 3, [1, -2, -1, 2, 1, -2, -1]),
    ('J', 15, [2, 1, -2, -1, 2, 1, -2]),
    ('K', 7, [1, -2, -1, 2, 1, -2, -1]),
    ('L', 11, [2, 1, -2, -1, 2, 1, -2]),
    ('M', 4, [1, -2, -1, 2, 1, -2, -1]),
    ('N', 14, [2, 1, -2, -1, 2, 1, -2]),
    ('O', 6, [1, -2, -1, 2, 1, -2, -1]),
    ('P', 12, [2, 1, -2, -1, 2, 1, -2]),
    ('Q', 5, [1, -2, -1, 2, 1, -2, -1]),
    ('R', 13, [2, 1, -2, -1, 2, 1, -2]),
];

fn running_spec() -> BlockSpec {
    BlockSpec::new(vec![8, 10], &[1]).unwrap()
}

fn golden_forward() -> Vec<String> {
    let b = running_spec();
    let pi: Permutation = PI.parse().unwrap();
    let golden: Ornament = ORNAMENT.parse().unwrap();
    let mut problems = Vec::new();
    match bijection::forward(&pi, &b) {
        Ok(o) if o == golden => {}
        other => problems.push(format!("forward gave {other:?}")),
    }
    match colored_cycle_notation(&pi, &b) {
        Ok(text) if text == ORNAMENT => {}
        other => problems.push(format!("cycle text {other:?}")),
    }
    match bijection::inverse(&golden, &b) {
        Ok(p) if p.to_string() == PI => {}
        other => problems.push(format!("inverse gave {other:?}")),
    }
    problems
}

fn table_rows() -> Vec<String> {
    let b = running_spec();
    let (o, labels) = forward_with_labels(&PI.parse().unwrap(), &b).unwrap();
    let mut problems = Vec::new();
    for (letter, element, row) in TABLE {
        let v = labels
            .iter()
            .enumerate()
            .find_map(|(j, ls)| ls.iter().position(|&x| x == element).map(|pos| VertexRef::new(j, pos)))
            .unwrap();
        let got = signed_walk(v, &o, &b).unwrap().prefix(7);
        if got != row {
            problems.push(format!("{letter}: {got:?}, expected {row:?}"));
        }
    }
    problems
}

fn spots<T: PartialEq + std::fmt::Display>(checks: &[(&str, T, T)]) -> Vec<String> {
    checks
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(what, got, want)| format!("{what}: {got}, expected {want}"))
        .collect()
}

fn suites(reports: &[SuiteReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| r.failures.iter().map(move |f| format!("{}: {f}", r.name)))
        .collect()
}

fn spec(lengths: &[usize], s: &[usize]) -> BlockSpec {
    BlockSpec::new(lengths.to_vec(), s).unwrap()
}

fn describe(reports: &[SuiteReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{} {}/{}", r.name, r.passed(), r.cases))
        .collect::<Vec<_>>()
        .join(", ")
}

fn main() {
    type Check = Box<dyn Fn() -> (String, Vec<String>)>;
    let criteria: Vec<(&str, Check)> = vec![
        ("golden forward and unmap", Box::new(|| ("running example".into(), golden_forward()))),
        ("table of signed walks", Box::new(|| ("18 vertices".into(), table_rows()))),
        (
            "bijection exhaustive",
            Box::new(|| {
                let r = [verify::round_trip(8, 3), verify::image_characterization(7, 3)];
                (describe(&r), suites(&r))
            }),
        ),
        (
            "derangement counts",
            Box::new(|| {
                let r = [verify::derangement_counts(8, 3)];
                let mut f = suites(&r);
                f.extend(spots(&[
                    ("(2,2) S={1,2}", count_derangements_pie(&spec(&[2, 2], &[1, 2])), 3.into()),
                    ("(1,1,1,1)", count_derangements_pie(&spec(&[1, 1, 1, 1], &[])), 9.into()),
                ]));
                (describe(&r), f)
            }),
        ),
        (
            "block symmetry",
            Box::new(|| {
                let r = [verify::block_symmetry(7, 7)];
                (describe(&r), suites(&r))
            }),
        ),
        (
            "complement by cycle type",
            Box::new(|| {
                let r = [verify::complement(8, 3)];
                (describe(&r), suites(&r))
            }),
        ),
        (
            "involution complement",
            Box::new(|| {
                let r = [verify::involution_complement(8, 8, 3)];
                let mut f = suites(&r);
                f.extend(spots(&[
                    ("(2,2) S={}", count_involutions(&spec(&[2, 2], &[])).unwrap(), 3.into()),
                    ("(2,2) S={1,2}", count_involutions(&spec(&[2, 2], &[1, 2])).unwrap(), 3.into()),
                ]));
                (describe(&r), f)
            }),
        ),
        (
            "fixed-point polynomial constancy",
            Box::new(|| {
                let r = [verify::mystery_constancy(7, 7)];
                let mut f = suites(&r);
                for lambda in lambda_points() {
                    let v = mystery_polynomial(&[1, 1], &lambda).unwrap();
                    if v != 1.into() {
                        f.push(format!("a=(1,1) λ={lambda}: {v}"));
                    }
                }
                (describe(&r), f)
            }),
        ),
        (
            "good ornament count",
            Box::new(|| {
                let r = [verify::good_ornament_count(7, 7)];
                (describe(&r), suites(&r))
            }),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (detail, problems) = check();
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status} {name} [{detail}] ({:.1}s)",
            i + 1,
            start.elapsed().as_secs_f64()
        );
        for p in problems.iter().take(10) {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

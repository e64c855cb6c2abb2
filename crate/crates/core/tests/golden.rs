//! Frozen outputs. The multisemigroup files double as fixtures, so they are
//! checked against a fresh Hecke export rather than just re-read.

use fiatcell::bimod::DEFAULT_SEED;
use fiatcell::cli::{run, Command, Format, RunConfig, Source};
use fiatcell::fixtures;
use fiatcell::hecke::{export_multisemigroup, CoxeterType};

fn strip_comments(s: &str) -> String {
    s.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

fn fixture(name: &str) -> Source {
    Source {
        fixture: Some(name.into()),
        input: None,
    }
}

fn output(command: Command) -> String {
    let cfg = RunConfig {
        format: Format::Text,
        seed: DEFAULT_SEED,
        command,
    };
    run(&cfg).unwrap().output
}

#[test]
fn weyl_group_fixtures_match_the_export() {
    for (file, kind) in [
        ("b2.ms", CoxeterType::B2),
        ("s3.ms", CoxeterType::A(2)),
        ("s4.ms", CoxeterType::A(3)),
    ] {
        let text = fixtures::text(file).unwrap();
        assert_eq!(
            strip_comments(text),
            export_multisemigroup(kind).unwrap().to_text(),
            "{file}"
        );
    }
}

#[test]
fn ccx_build_outputs() {
    assert_eq!(
        output(Command::CcxBuild(fixture("zigzagA2"))),
        include_str!("golden/zigzagA2.ms")
    );
    assert_eq!(
        output(Command::CcxBuild(fixture("sl2-weights"))),
        include_str!("golden/sl2-weights.ms")
    );
}

#[test]
fn exterior_verify_report() {
    assert_eq!(
        output(Command::Verify(fixture("exterior2"))),
        include_str!("golden/exterior2.verify.txt")
    );
}

#[test]
fn s3_middle_cell() {
    let out = output(Command::Cells(fixture("s3")));
    assert!(out.contains(
        "PASS two-sided cell {s1,s2,s1s2,s2s1} [cell structure] duflo=s1,s2 \
         left_cells={s1,s1s2} {s2,s2s1} m_constant=true"
    ));
}

//! Acceptance gate: one line per criterion. Runs without the libtest
//! harness so the lines are never captured.
//!
//! Each criterion recomputes its facts through the library API rather than
//! trusting the report records, and checks the records agree.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use fiatcell::bimod::{build_ccx, commutant_dimension, z_prime, Bimodule, DEFAULT_SEED};
use fiatcell::fixtures;
use fiatcell::graded::GradedCcx;
use fiatcell::hecke::{export_multisemigroup, rsk_cells, CoxeterType, NamedCells};
use fiatcell::laurent::LaurentPoly;
use fiatcell::linalg::Subspace;
use fiatcell::mscell::{MorphismId, MultiSemigroup};
use fiatcell::report::{Record, Status};
use fiatcell::suite::{self, load_ccx, render_table, PROPERTY_FIXTURES};
use fiatcell::Result;

type Criterion = (&'static str, fn() -> Result<Verdict>);

struct Verdict {
    ok: bool,
    detail: String,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            ok: true,
            detail: String::new(),
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.ok = false;
            if !self.detail.is_empty() {
                self.detail.push_str("; ");
            }
            self.detail.push_str(what);
        }
    }

    fn records(&mut self, what: &str, recs: &[Record]) {
        for r in recs {
            self.check(&format!("{what}: {}", r.check), r.status == Status::Pass);
        }
    }
}

fn braces(ms: &MultiSemigroup, cells: &[Vec<MorphismId>]) -> String {
    cells
        .iter()
        .map(|c| format!("{{{}}}", ms.names(c).join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn ac1() -> Result<Verdict> {
    let mut v = Verdict::new();
    let start = Instant::now();
    let ms = MultiSemigroup::parse(fixtures::text("b2.ms")?)?;
    let c = ms.cells();
    v.check(
        "two-sided cells",
        braces(&ms, &c.two_sided_cells) == "{e} {s,t,st,ts,sts,tst} {stst}",
    );
    let mid = ms.ids(&["s", "t", "st", "ts", "sts", "tst"])?;
    v.check(
        "left cells",
        braces(&ms, &ms.left_cells_in(&mid)?) == "{s,st,sts} {t,ts,tst}",
    );
    v.check(
        "table",
        render_table(&ms, &mid)? == "{s,sts}/{ts}/{st}/{t,tst}",
    );
    v.check("not strongly regular", !ms.is_strongly_regular(&mid)?);
    v.check(
        "fixture equals export",
        ms.to_text() == export_multisemigroup(CoxeterType::B2)?.to_text(),
    );
    let elapsed = start.elapsed();
    v.check("runtime < 1 s", elapsed < Duration::from_secs(1));
    v.detail = format!("{:.2?} {}", elapsed, v.detail);
    Ok(v)
}

fn ac2() -> Result<Verdict> {
    let mut v = Verdict::new();
    let mut s4_time = Duration::ZERO;
    for n in 2..=4 {
        let start = Instant::now();
        let ms = export_multisemigroup(CoxeterType::A(n - 1))?;
        let hecke = NamedCells::of(&ms);
        let rsk = rsk_cells(n)?;
        v.check(&format!("S{n} left"), hecke.left == rsk.left);
        v.check(&format!("S{n} right"), hecke.right == rsk.right);
        v.check(&format!("S{n} two-sided"), hecke.two_sided == rsk.two_sided);
        for j in &ms.cells().two_sided_cells {
            let sr = ms.is_strongly_regular(j)?;
            v.check(&format!("S{n} strongly regular"), sr);
            v.check(
                &format!("S{n} m constant"),
                sr && ms.m_constant_on_right_cells(j)?,
            );
        }
        if n == 4 {
            s4_time = start.elapsed();
        }
    }
    v.check("S4 runtime < 10 s", s4_time < Duration::from_secs(10));
    v.detail = format!("S4 {:.2?} {}", s4_time, v.detail);
    Ok(v)
}

fn ac3() -> Result<Verdict> {
    let mut v = Verdict::new();
    let a = fixtures::algebra("x3local.alg")?;
    v.check("dim Z = 3", a.center().dim() == 3);
    let zp = z_prime(&a)?;
    let want = Subspace::from_spanning(a.dim(), [a.unit().clone(), a.basis_vec(a.index_of("x2")?)]);
    v.check("Z′ = span{1, x2}", zp == want);
    v.check("Loewy A = 3", a.loewy_length()? == 3);
    v.check(
        "Loewy A⊗A = 5",
        Bimodule::proj(&a, 0, &a, 0).loewy_length()? == 5,
    );
    v.records("records", &suite::x3local_records(&a)?);
    Ok(v)
}

fn ac4() -> Result<Verdict> {
    let mut v = Verdict::new();
    let ccx = load_ccx("exterior2")?;
    let a = ccx.algebra(0);
    v.check("dim A = 4", a.dim() == 4);
    v.check("dim Z = 2", a.center().dim() == 2);
    v.check("weakly symmetric", a.is_weakly_symmetric());
    v.check(
        "two two-sided cells",
        ccx.ms.cells().two_sided_cells.len() == 2,
    );
    let images = ccx.center_images();
    v.check("one Duflo image", images.len() == 1);
    for im in &images {
        v.check(
            "image 2 < End 4",
            im.image_dim == 2 && im.end_dim == 4 && !im.surjective(),
        );
    }
    v.check(
        "m constant",
        ccx.ms.m_constant_on_right_cells(&ccx.main_cell())?,
    );
    for r in suite::exterior_records(&ccx)? {
        v.check(&r.check, r.status != Status::Fail);
    }
    Ok(v)
}

fn ac5() -> Result<Verdict> {
    let mut v = Verdict::new();
    let start = Instant::now();
    for name in PROPERTY_FIXTURES {
        let ccx = build_ccx(&fixtures::ccx_data(name)?)?;
        v.check(
            &format!("{name} strongly regular"),
            ccx.ms.is_strongly_regular(&ccx.main_cell())?,
        );
        v.records(name, &ccx.verify_closed_form_composition(DEFAULT_SEED)?);
        for l in ccx.left_cells()? {
            v.records(name, &ccx.verify_dimension_identities(&l)?);
        }
        v.records(name, &ccx.verify_identity_hom_equality()?);
        v.records(name, &ccx.verify_separation()?);
        v.check(
            &format!("{name} commutant"),
            commutant_dimension(&ccx.cell_rep) == 1,
        );
    }
    let elapsed = start.elapsed();
    v.check("runtime < 30 s", elapsed < Duration::from_secs(30));
    v.detail = format!("{:.2?} {}", elapsed, v.detail);
    Ok(v)
}

fn ac6() -> Result<Verdict> {
    let mut v = Verdict::new();

    let d = GradedCcx::new(load_ccx("dualnumbers-graded")?)?;
    v.check("positive", d.is_positive()?);
    let l = d.ccx.left_cells()?.remove(0);
    let (ll, a) = (d.invariant_l(&l)?, d.invariant_a(&l)?);
    v.check("l = 2", ll == 2);
    v.check("l − 2a = 0", ll - 2 * a == 0);
    v.records("self-duality", &d.verify_self_duality(&l, DEFAULT_SEED)?);

    let z = GradedCcx::new(load_ccx("zigzagA2-graded")?)?;
    v.check("zigzag positive", z.is_positive()?);
    let cells = z.ccx.left_cells()?;
    for g in &cells {
        for f in &cells {
            let recs = z.verify_hilbert_factorization(g, f)?;
            v.records("factorization", &recs);
            for r in &recs {
                v.check(
                    "ψ = 1",
                    r.values.get("psi").map(String::as_str) == Some("1"),
                );
                v.check(
                    "k0 = 1",
                    r.values.get("k0").map(String::as_str) == Some("1"),
                );
                v.check(
                    "χ_G(1) = m(G)",
                    r.values.get("chi_G(1)") == r.values.get("m_G"),
                );
            }
        }
        let chi = z.chi(g)?;
        let m = z.ccx.ms.m_value(z.ccx.ms.duflo(g)?)?;
        v.check("χ_G(1) = m(G) direct", chi.eval_at_one() == m as i64);
        v.check(
            "χ_G ψ direct",
            chi.div_exact(&z.chi(&cells[0])?) == Some(LaurentPoly::one()),
        );
    }
    Ok(v)
}

fn ac7() -> Result<Verdict> {
    let mut v = Verdict::new();
    let a = suite::report_all(DEFAULT_SEED)?.to_text();
    let b = suite::report_all(DEFAULT_SEED)?.to_text();
    v.check("library runs identical", a == b);

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fiatcell"))
            .arg("report-all")
            .output()
            .expect("binary runs")
    };
    let (x, y) = (run(), run());
    v.check("binary exit 0", x.status.success() && y.status.success());
    v.check(
        "binary runs identical",
        !x.stdout.is_empty() && x.stdout == y.stdout,
    );
    v.check("binary matches library", x.stdout == a.as_bytes());
    Ok(v)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1 B2 cells", ac1),
        ("AC2 type A Hecke = RSK", ac2),
        ("AC3 k[x]/(x³) Z′ and Loewy", ac3),
        ("AC4 exterior algebra", ac4),
        ("AC5 property suite", ac5),
        ("AC6 graded suite", ac6),
        ("AC7 determinism", ac7),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let (ok, detail) = match f() {
            Ok(v) => (v.ok, v.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        println!(
            "{} {name} {}",
            if ok { "PASS" } else { "FAIL" },
            detail.trim()
        );
        if !ok {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed: {failed:?}");
        ExitCode::FAILURE
    }
}

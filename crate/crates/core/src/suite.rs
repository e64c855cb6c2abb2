//! Verification suites over the bundled fixtures, shared by the CLI and the
//! acceptance tests.

use std::sync::Arc;

use crate::algebra::FinDimAlgebra;
use crate::bimod::{build_ccx, z_prime, Bimodule, Ccx, CcxData};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::graded::{GradedCcx, ShiftChoice};
use crate::hecke::{export_multisemigroup, rsk_cells, CoxeterType, NamedCells};
use crate::mscell::{MorphismId, MultiSemigroup};
use crate::report::{Record, Report, PLUMBING};

fn braces(ms: &MultiSemigroup, fs: &[MorphismId]) -> String {
    format!("{{{}}}", ms.names(fs).join(","))
}

fn cell_list(ms: &MultiSemigroup, cells: &[Vec<MorphismId>]) -> String {
    cells
        .iter()
        .map(|c| braces(ms, c))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `L ∩ R` with right cells as rows and left cells as columns, row-major.
pub fn render_table(ms: &MultiSemigroup, j: &[MorphismId]) -> Result<String> {
    let table = ms.intersection_table(j)?;
    let cols = table.first().map_or(0, Vec::len);
    let mut parts = Vec::new();
    for r in 0..cols {
        for row in &table {
            parts.push(braces(ms, &row[r]));
        }
    }
    Ok(parts.join("/"))
}

/// One record per two-sided cell, describing its left/right structure.
pub fn cell_records(ms: &MultiSemigroup) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for j in &ms.cells().two_sided_cells {
        let sr = ms.is_strongly_regular(j)?;
        let mut r = Record::new(
            format!("two-sided cell {}", braces(ms, j)),
            "cell structure",
        )
        .value("left_cells", cell_list(ms, &ms.left_cells_in(j)?))
        .value("right_cells", cell_list(ms, &ms.right_cells_in(j)?))
        .value("table", render_table(ms, j)?)
        .value("regular", ms.is_regular(j)?)
        .value("strongly_regular", sr);
        if sr {
            let duflos = ms
                .left_cells_in(j)?
                .iter()
                .map(|l| ms.duflo(l).map(|g| ms.name(g).to_string()))
                .collect::<Result<Vec<_>>>()?;
            r = r
                .value("duflo", duflos.join(","))
                .value("m_constant", ms.m_constant_on_right_cells(j)?);
        }
        out.push(r);
    }
    Ok(out)
}

/// Golden cell data for the Weyl group of type B2.
pub fn b2_records(ms: &MultiSemigroup) -> Result<Vec<Record>> {
    let anchor = "B2 cell table";
    let exported = export_multisemigroup(CoxeterType::B2)?;
    let mut out = vec![Record::new("b2 fixture equals Hecke export", anchor)
        .pass_if(ms.to_text() == exported.to_text())];
    let c = ms.cells();
    let two = cell_list(ms, &c.two_sided_cells);
    out.push(
        Record::new("b2 two-sided cells", anchor)
            .value("cells", &two)
            .pass_if(two == "{e} {s,t,st,ts,sts,tst} {stst}"),
    );
    let mid = ms.ids(&["s", "t", "st", "ts", "sts", "tst"])?;
    let left = cell_list(ms, &ms.left_cells_in(&mid)?);
    out.push(
        Record::new("b2 left cells", anchor)
            .value("cells", &left)
            .pass_if(left == "{s,st,sts} {t,ts,tst}"),
    );
    let table = render_table(ms, &mid)?;
    out.push(
        Record::new("b2 intersection table", anchor)
            .value("table", &table)
            .pass_if(table == "{s,sts}/{ts}/{st}/{t,tst}"),
    );
    let sr = ms.is_strongly_regular(&mid)?;
    out.push(
        Record::new("b2 middle cell strongly regular", anchor)
            .value("strongly_regular", sr)
            .expect_negative(!sr),
    );
    Ok(out)
}

/// Hecke cells against Robinson–Schensted cells for `S_n`.
pub fn type_a_records(n: usize) -> Result<Vec<Record>> {
    let anchor = "type A cells";
    let ms = export_multisemigroup(CoxeterType::A(n - 1))?;
    let hecke = NamedCells::of(&ms);
    let rsk = rsk_cells(n)?;
    let mut out = Vec::new();
    for (what, a, b) in [
        ("left", &hecke.left, &rsk.left),
        ("right", &hecke.right, &rsk.right),
        ("two-sided", &hecke.two_sided, &rsk.two_sided),
    ] {
        out.push(
            Record::new(format!("S{n} {what} cells Hecke = RSK"), anchor)
                .value("count", a.len())
                .pass_if(a == b),
        );
    }
    let mut all_sr = true;
    let mut all_m = true;
    for j in &ms.cells().two_sided_cells {
        let sr = ms.is_strongly_regular(j)?;
        all_sr &= sr;
        all_m &= sr && ms.m_constant_on_right_cells(j)?;
    }
    out.push(
        Record::new(format!("S{n} cells strongly regular"), anchor)
            .value("two_sided_cells", ms.cells().two_sided_cells.len())
            .pass_if(all_sr),
    );
    out.push(Record::new(format!("S{n} m constant on right cells"), anchor).pass_if(all_m));
    Ok(out)
}

/// Structural facts about one algebra.
pub fn algebra_records(a: &Arc<FinDimAlgebra>) -> Result<Vec<Record>> {
    let mut r = Record::new(format!("algebra {}", a.name()), "algebra structure")
        .value("dim", a.dim())
        .value("idempotents", a.num_idempotents())
        .value("dim_radical", a.radical().dim())
        .value("loewy_length", a.loewy_length()?)
        .value("dim_center", a.center().dim())
        .value("weakly_symmetric", a.is_weakly_symmetric())
        .value("connected", a.is_connected())
        .value("graded", a.degrees().is_some());
    if a.is_weakly_symmetric() && a.is_connected() {
        let zp = z_prime(a)?;
        r = r
            .value("dim_z_prime", zp.dim())
            .value("z_prime", a.render_subspace(&zp));
    }
    Ok(vec![r])
}

/// Center, `Z′` and Loewy lengths of `k[x]/(x^3)`.
pub fn x3local_records(a: &Arc<FinDimAlgebra>) -> Result<Vec<Record>> {
    let anchor = "Z′ and Loewy length";
    let z = a.center();
    let zp = z_prime(a)?;
    let x2 = a.basis_vec(a.index_of("x2")?);
    let expect = crate::linalg::Subspace::from_spanning(a.dim(), [a.unit().clone(), x2]);
    let tensor = Bimodule::proj(a, 0, a, 0);
    let ll_a = a.loewy_length()?;
    let ll_t = tensor.loewy_length()?;
    Ok(vec![
        Record::new("dim Z", anchor)
            .value("dim", z.dim())
            .pass_if(z.dim() == 3),
        Record::new("dim Z′", anchor)
            .value("dim", zp.dim())
            .value("basis", a.render_subspace(&zp))
            .pass_if(zp == expect),
        Record::new("Loewy length A", anchor)
            .value("length", ll_a)
            .pass_if(ll_a == 3),
        Record::new("Loewy length A⊗A", anchor)
            .value("length", ll_t)
            .pass_if(ll_t == 5),
    ])
}

/// The exterior algebra on two generators with `X = Z`.
pub fn exterior_records(ccx: &Ccx) -> Result<Vec<Record>> {
    let anchor = "non-symmetric local algebra";
    let a = ccx.algebra(0);
    let j = ccx.main_cell();
    let two = ccx.ms.cells().two_sided_cells.len();
    let mc = ccx.ms.m_constant_on_right_cells(&j)?;
    let mut out = vec![
        Record::new("exterior dim A", anchor)
            .value("dim", a.dim())
            .pass_if(a.dim() == 4),
        Record::new("exterior dim Z", anchor)
            .value("dim", a.center().dim())
            .pass_if(a.center().dim() == 2),
        Record::new("exterior weakly symmetric", anchor).pass_if(a.is_weakly_symmetric()),
        Record::new("exterior two-sided cells", anchor)
            .value("count", two)
            .pass_if(two == 2),
        Record::new("exterior m constant", anchor)
            .value("constant", mc)
            .pass_if(mc),
    ];
    let dims: Vec<_> = ccx
        .center_images()
        .iter()
        .map(|i| (i.image_dim, i.end_dim))
        .collect();
    out.push(
        Record::new("exterior center image dimensions", anchor)
            .value("image_end", format!("{dims:?}"))
            .pass_if(dims == [(2, 4)]),
    );
    Ok(out)
}

/// Every bimodule-level check on a `C_{C,X}`.
pub fn ccx_records(ccx: &Ccx, seed: u64) -> Result<Vec<Record>> {
    let mut out = cell_records(&ccx.ms)?;
    out.extend(ccx.structure_records()?);
    out.extend(ccx.verify_closed_form_composition(seed)?);
    for l in ccx.left_cells()? {
        out.extend(ccx.verify_dimension_identities(&l)?);
    }
    out.extend(ccx.verify_identity_hom_equality()?);
    out.extend(ccx.verify_separation()?);
    for img in ccx.center_images() {
        out.push(img.record(ccx.data.expect_surjective));
    }
    Ok(out)
}

/// Left cells whose Duflo involution has a one-dimensional endomorphism
/// ring, so that its simple is projective in the cell representation.
pub fn projective_simple_records(ccx: &Ccx) -> Result<Vec<Record>> {
    let mut names = Vec::new();
    for l in ccx.left_cells()? {
        let g = ccx.ms.duflo(&l)?;
        if let crate::bimod::CcxMorphism::Proj { tgt, s, .. } = ccx.kinds[g] {
            if ccx.algebra(tgt).corner(s, s).dim() == 1 {
                names.push(ccx.ms.name(g).to_string());
            }
        }
    }
    Ok(vec![Record::new(
        "Duflo involution with projective simple",
        "projective simple",
    )
    .value("duflo", names.join(","))
    .pass_if(!names.is_empty())])
}

fn titled(title: &str, records: Vec<Record>) -> Vec<Record> {
    records
        .into_iter()
        .map(|mut r| {
            r.check = format!("{title}: {}", r.check);
            r
        })
        .collect()
}

/// Inputs of the bimodule property suite.
pub const PROPERTY_FIXTURES: [&str; 6] = [
    "rational",
    "dualnumbers",
    "x3local",
    "x4local",
    "exterior2",
    "zigzagA2",
];

pub fn load_ccx(name: &str) -> Result<Ccx> {
    build_ccx(&fixtures::ccx_data(name)?)
}

/// Every acceptance check in a fixed order.
pub fn report_all(seed: u64) -> Result<Report> {
    let mut rep = Report::new("fiatcell report-all");

    let b2 = MultiSemigroup::parse(fixtures::text("b2.ms")?)?;
    rep.extend(titled("b2", b2_records(&b2)?));

    for n in 2..=4 {
        rep.extend(titled(&format!("s{n}"), type_a_records(n)?));
    }

    let x3 = fixtures::algebra("x3local.alg")?;
    rep.extend(titled("x3local", x3local_records(&x3)?));

    let ext = load_ccx("exterior2")?;
    rep.extend(titled("exterior2", exterior_records(&ext)?));

    for name in PROPERTY_FIXTURES {
        let ccx = load_ccx(name)?;
        rep.extend(titled(name, ccx_records(&ccx, seed)?));
    }

    let sl2 = load_ccx("sl2-weights")?;
    rep.extend(titled("sl2-weights", cell_records(&sl2.ms)?));
    rep.extend(titled("sl2-weights", sl2.structure_records()?));
    rep.extend(titled("sl2-weights", projective_simple_records(&sl2)?));

    for name in ["dualnumbers-graded", "zigzagA2-graded"] {
        let g = GradedCcx::new(load_ccx(name)?)?;
        rep.extend(titled(name, g.verify_all(seed)?));
    }
    let d = load_ccx("dualnumbers-graded")?;
    let zero = GradedCcx::with_shifts(d, ShiftChoice { shifts: vec![0, 0] })?;
    let positive = zero.is_positive()?;
    rep.push(
        Record::new("dualnumbers unshifted: positivity", "positive grading")
            .value("positive", positive)
            .expect_negative(!positive),
    );

    rep.extend(negative_controls());
    Ok(rep)
}

/// Inputs that must be rejected.
pub fn negative_controls() -> Vec<Record> {
    let mut out = Vec::new();
    let rejects = |name: &str, r: Result<()>, want: &dyn Fn(&Error) -> bool| {
        let (ok, msg) = match r {
            Ok(()) => (false, "accepted".to_string()),
            Err(e) => (want(&e), e.to_string()),
        };
        Record::new(format!("reject {name}"), PLUMBING)
            .value("error", msg)
            .pass_if(ok)
    };
    out.push(rejects(
        "s3-corrupt.ms",
        fixtures::text("s3-corrupt.ms").and_then(|t| MultiSemigroup::parse(t).map(|_| ())),
        &|e| e.to_string().contains("associativity"),
    ));
    out.push(rejects(
        "empty-table.ms",
        fixtures::text("empty-table.ms").and_then(|t| MultiSemigroup::parse(t).map(|_| ())),
        &|e| matches!(e, Error::Parse { .. }),
    ));
    out.push(rejects(
        "qxq.ccx",
        fixtures::ccx_data("qxq").map(|_| ()),
        &|e| e.to_string().contains("not connected"),
    ));
    out.push(rejects(
        "nonws.alg",
        fixtures::algebra("nonws.alg").and_then(|a| CcxData::single(a).map(|_| ())),
        &|e| e.to_string().contains("not weakly symmetric"),
    ));
    out.push(rejects(
        "x3local-bad-x.ccx",
        fixtures::ccx_data("x3local-bad-x").map(|_| ()),
        &|e| e.to_string().contains("Z′"),
    ));
    out
}

//! Graded layer over `C_{C,X}`: shifted representatives, positivity, the
//! invariants `a` and `l`, graded self-duality of Duflo involutions, and the
//! Hilbert series factorization `χ_G = χ_F · ψ`.
//!
//! Conventions: `M⟨k⟩` has `(M⟨k⟩)_i = M_{i+k}`, and a homomorphism has
//! degree `i` when it raises degrees by `i`, so `Hom^i(M, N) = Hom^0(M, N⟨i⟩)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::FinDimAlgebra;
use crate::bimod::{
    adjunction_maps, graded_iso_test, hom_space_in_degree, AlgRef, Bimodule, Ccx, CcxMorphism,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{Frame, Matrix, Subspace, Vector};
use crate::mscell::MorphismId;
use crate::report::Record;

/// Degree of the leading coordinate of a homogeneous vector.
fn degree_of(degrees: &[i32], v: &[crate::linalg::Q]) -> i32 {
    degrees[v.iter().position(|x| !x.is_zero()).expect("nonzero vector")]
}

/// Nonnegative grading whose degree-0 part is spanned by the idempotents.
pub fn check_grading(a: &FinDimAlgebra) -> Result<()> {
    let deg = a
        .degrees()
        .ok_or_else(|| Error::Argument(format!("algebra {} is not graded", a.name())))?;
    if let Some(k) = deg.iter().position(|&d| d < 0) {
        return Err(Error::Unsupported(format!(
            "algebra {}: negative degree on `{}`",
            a.name(),
            a.label(k)
        )));
    }
    let zero_part = Subspace::from_spanning(
        a.dim(),
        (0..a.dim())
            .filter(|&k| deg[k] == 0)
            .map(|k| a.basis_vec(k)),
    );
    let idem = Subspace::from_spanning(a.dim(), a.idempotents().iter().cloned());
    if zero_part != idem {
        return Err(Error::Unsupported(format!(
            "algebra {}: degree-0 part is not spanned by the idempotents",
            a.name()
        )));
    }
    Ok(())
}

/// Hilbert series of a graded subspace of `A`.
pub fn hilbert_series(a: &FinDimAlgebra, sub: &Subspace) -> Result<LaurentPoly> {
    let deg = a
        .degrees()
        .ok_or_else(|| Error::Argument(format!("algebra {} is not graded", a.name())))?;
    Ok(LaurentPoly::from_terms(
        sub.basis().iter().map(|v| (degree_of(deg, v), 1)),
    ))
}

/// Graded dimension of a bimodule.
pub fn bimodule_series(m: &Bimodule) -> Result<LaurentPoly> {
    let deg = m
        .degrees()
        .ok_or_else(|| Error::Argument("bimodule is not graded".into()))?;
    Ok(LaurentPoly::from_terms(deg.iter().map(|&d| (d, 1))))
}

/// `Σ_i dim Hom^i(M, N) t^i`.
pub fn graded_hom_series(m: &Bimodule, n: &Bimodule) -> Result<LaurentPoly> {
    let (Some(dm), Some(dn)) = (m.degrees(), n.degrees()) else {
        return Err(Error::Argument(
            "graded hom-series of ungraded bimodules".into(),
        ));
    };
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(LaurentPoly::zero());
    }
    if m.is_projective() {
        let maps = adjunction_maps(m, n, None)?;
        return Ok(LaurentPoly::from_terms(
            maps.into_iter().map(|(_, d)| (d, 1)),
        ));
    }
    let lo = dn.iter().min().unwrap() - dm.iter().max().unwrap();
    let hi = dn.iter().max().unwrap() - dm.iter().min().unwrap();
    let mut terms = Vec::new();
    for i in lo..=hi {
        let d = hom_space_in_degree(m, n, i)?.dim();
        terms.push((i, d as i64));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// `M` viewed as a left module, i.e. an `A`–`ℚ` bimodule.
fn as_left_module(m: &Bimodule) -> Bimodule {
    let q = if m.is_graded() {
        FinDimAlgebra::rationals().with_degrees(vec![0]).unwrap()
    } else {
        FinDimAlgebra::rationals()
    };
    Bimodule::from_parts(
        m.left_algebra().clone(),
        Arc::new(q),
        m.dim(),
        m.left_action().to_vec(),
        vec![Matrix::identity(m.dim())],
        m.degrees().map(<[i32]>::to_vec),
    )
}

/// The adjoint `Hom_A(M, A)` of an `A`–`B` bimodule, as a graded `B`–`A`
/// bimodule with `(b·φ)(m) = φ(m·b)` and `(φ·a)(m) = φ(m)·a`.
pub fn dual(m: &Bimodule) -> Result<Bimodule> {
    let (Some(dm), Some(_)) = (m.degrees(), m.left_algebra().degrees()) else {
        return Err(Error::Argument("dual of an ungraded bimodule".into()));
    };
    let a = m.left_algebra().clone();
    let src = as_left_module(m);
    let tgt = as_left_module(&Bimodule::regular(&a));
    let da = a.degrees().unwrap();
    let lo = da.iter().min().unwrap() - dm.iter().max().unwrap_or(&0);
    let hi = da.iter().max().unwrap() - dm.iter().min().unwrap_or(&0);
    let mut vectors: Vec<Vector> = Vec::new();
    let mut degrees = Vec::new();
    for i in lo..=hi {
        for v in hom_space_in_degree(&src, &tgt, i)?.basis.basis() {
            vectors.push(v.clone());
            degrees.push(i);
        }
    }
    let n = vectors.len();
    let frame = Frame::new(a.dim() * m.dim(), vectors)
        .ok_or_else(|| Error::Internal("dependent dual basis".into()))?;
    let induced = |op: &dyn Fn(&Matrix) -> Matrix| -> Result<Matrix> {
        let cols = frame
            .vectors()
            .iter()
            .map(|v| {
                let phi = Matrix::from_flat(a.dim(), m.dim(), v.clone());
                frame
                    .coords(op(&phi).flat())
                    .ok_or_else(|| Error::Internal("dual not closed under the actions".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(n, cols))
    };
    let b = m.right_algebra().clone();
    let left_action = m
        .right_action()
        .iter()
        .map(|rb| induced(&|phi| phi.mul(rb)))
        .collect::<Result<Vec<_>>>()?;
    let right_action = (0..a.dim())
        .map(|k| {
            let ra = a.right_matrix(&a.basis_vec(k));
            induced(&|phi| ra.mul(phi))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Bimodule::from_parts(
        b,
        a,
        n,
        left_action,
        right_action,
        Some(degrees),
    ))
}

/// Representative shifts, one per 1-morphism, identities at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftChoice {
    pub shifts: Vec<i32>,
}

/// Top degree of `e_s A e_s`.
fn corner_top(a: &FinDimAlgebra, s: usize) -> Result<i32> {
    hilbert_series(a, &a.corner(s, s))?
        .max_degree()
        .ok_or_else(|| Error::Internal("zero corner".into()))
}

impl ShiftChoice {
    /// `A e_s ⊗ e_t B ⟨(l_s + l_t)/4⟩`, with `l_s` the top degree of
    /// `e_s A e_s`; this balances `Hom(F, 𝟙)` against `Hom(𝟙, F)`.
    pub fn default_for(ccx: &Ccx) -> Result<Self> {
        let mut shifts = Vec::new();
        for &k in &ccx.kinds {
            shifts.push(match k {
                CcxMorphism::Identity(_) => 0,
                CcxMorphism::Proj { tgt, src, s, t } => {
                    let total = corner_top(ccx.algebra(tgt), s)? + corner_top(ccx.algebra(src), t)?;
                    if total % 4 != 0 {
                        return Err(Error::Unsupported(format!(
                            "no integral balanced shift: l_s + l_t = {total} is not divisible by 4"
                        )));
                    }
                    total / 4
                }
            });
        }
        Ok(ShiftChoice { shifts })
    }

    /// Default shifts overridden by the named entries.
    pub fn with_overrides(ccx: &Ccx, overrides: &BTreeMap<String, i32>) -> Result<Self> {
        let mut choice = match ShiftChoice::default_for(ccx) {
            Ok(c) => c,
            Err(_) if !overrides.is_empty() => ShiftChoice {
                shifts: vec![0; ccx.kinds.len()],
            },
            Err(e) => return Err(e),
        };
        for (name, &k) in overrides {
            let f = ccx.ms.id(name)?;
            if ccx.ms.morphism(f).is_identity && k != 0 {
                return Err(Error::Invalid(vec![format!(
                    "identity {name} must have shift 0"
                )]));
            }
            choice.shifts[f] = k;
        }
        Ok(choice)
    }
}

/// `C_{C,X}` with graded algebras and chosen representatives.
#[derive(Clone, Debug)]
pub struct GradedCcx {
    pub ccx: Ccx,
    pub shifts: ShiftChoice,
}

impl GradedCcx {
    /// Uses the shifts stored in the input data, defaulting the rest.
    pub fn new(ccx: Ccx) -> Result<Self> {
        let overrides = ccx.data.shifts.clone();
        let shifts = ShiftChoice::with_overrides(&ccx, &overrides)?;
        GradedCcx::with_shifts(ccx, shifts)
    }

    pub fn with_shifts(ccx: Ccx, shifts: ShiftChoice) -> Result<Self> {
        for o in &ccx.data.objects {
            check_grading(&o.algebra)?;
        }
        if shifts.shifts.len() != ccx.kinds.len() {
            return Err(Error::Argument("one shift per 1-morphism expected".into()));
        }
        Ok(GradedCcx { ccx, shifts })
    }

    pub fn shift(&self, f: MorphismId) -> i32 {
        self.shifts.shifts[f]
    }

    /// The chosen representative of `f`.
    pub fn representative(&self, f: MorphismId) -> Bimodule {
        self.ccx.bimodule(f).shifted(self.shift(f))
    }

    fn hom_series(&self, f: MorphismId, g: MorphismId) -> Result<LaurentPoly> {
        graded_hom_series(&self.representative(f), &self.representative(g))
    }

    fn parallel(&self, f: MorphismId, g: MorphismId) -> bool {
        let (a, b) = (self.ccx.ms.morphism(f), self.ccx.ms.morphism(g));
        a.src == b.src && a.tgt == b.tgt
    }

    /// Positivity: `Hom^i(F, G) ≠ 0` forces `i > 0` for `F ≠ G`, and
    /// `End^0(F)` is one-dimensional.
    pub fn positivity(&self) -> Result<Vec<Record>> {
        let ms = &self.ccx.ms;
        let mut out = Vec::new();
        for f in ms.sorted_ids() {
            for g in ms.sorted_ids() {
                if !self.parallel(f, g) {
                    continue;
                }
                let series = self.hom_series(f, g)?;
                let min = series.min_degree();
                let ok = if f == g {
                    series.coeff(0) == 1 && min == Some(0)
                } else {
                    min.is_none_or(|d| d > 0)
                };
                out.push(
                    Record::new(
                        format!("positivity Hom({}, {})", ms.name(f), ms.name(g)),
                        "positive grading",
                    )
                    .value("series", &series)
                    .value("shift_source", self.shift(f))
                    .value("shift_target", self.shift(g))
                    .pass_if(ok),
                );
            }
        }
        Ok(out)
    }

    pub fn is_positive(&self) -> Result<bool> {
        Ok(self.positivity()?.iter().all(|r| !r.failed()))
    }

    fn duflo_data(&self, left_cell: &[MorphismId]) -> Result<(MorphismId, usize, usize)> {
        let g = self.ccx.ms.duflo(left_cell)?;
        match self.ccx.kinds[g] {
            CcxMorphism::Proj { tgt, s, .. } => Ok((g, tgt, s)),
            CcxMorphism::Identity(_) => Err(Error::Argument("left cell of an identity".into())),
        }
    }

    /// Smallest `a` with `Hom^a(G, 𝟙) ≠ 0`, `G` the Duflo involution.
    pub fn invariant_a(&self, left_cell: &[MorphismId]) -> Result<i32> {
        let (g, obj, _) = self.duflo_data(left_cell)?;
        let one = Bimodule::regular(self.ccx.algebra(obj));
        graded_hom_series(&self.representative(g), &one)?
            .min_degree()
            .ok_or_else(|| {
                Error::DataInconsistency(format!("Hom({}, 1) vanishes", self.ccx.ms.name(g)))
            })
    }

    /// `χ_G`: the Hilbert series of `End(P_G) ≅ e_G A e_G`.
    pub fn chi(&self, left_cell: &[MorphismId]) -> Result<LaurentPoly> {
        let (_, obj, s) = self.duflo_data(left_cell)?;
        let a = self.ccx.algebra(obj);
        hilbert_series(a, &a.corner(s, s))
    }

    /// Top degree of `End(P_G)`.
    pub fn invariant_l(&self, left_cell: &[MorphismId]) -> Result<i32> {
        self.chi(left_cell)?
            .max_degree()
            .ok_or_else(|| Error::Internal("zero endomorphism algebra".into()))
    }

    /// `G* ≅ G⟨l − 2a⟩` for the chosen representative `G`.
    pub fn verify_self_duality(&self, left_cell: &[MorphismId], seed: u64) -> Result<Vec<Record>> {
        let (g, _, _) = self.duflo_data(left_cell)?;
        let a = self.invariant_a(left_cell)?;
        let l = self.invariant_l(left_cell)?;
        let rep = self.representative(g);
        let star = dual(&rep)?;
        let target = rep.shifted(l - 2 * a);
        let iso = graded_iso_test(&star, &target, seed)?;
        Ok(vec![Record::new(
            format!("graded self-duality G={}", self.ccx.ms.name(g)),
            "G* ≅ G_(l−2a)",
        )
        .value("shift", self.shift(g))
        .value("a", a)
        .value("l", l)
        .value("l_minus_2a", l - 2 * a)
        .value("dual_series", bimodule_series(&star)?)
        .value("target_series", bimodule_series(&target)?)
        .pass_if(iso)])
    }

    /// For left cells `L, L′` of one two-sided cell: with `G` the Duflo
    /// involution of `L` and `F` the element of `L′` in the right cell of
    /// `G`, `ψ = χ_G / χ_F` is exact, nonnegative, concentrated in degrees
    /// `≤ 0`, with constant term 1.
    pub fn verify_hilbert_factorization(
        &self,
        l: &[MorphismId],
        l_prime: &[MorphismId],
    ) -> Result<Vec<Record>> {
        let ms = &self.ccx.ms;
        let (g, _, _) = self.duflo_data(l)?;
        if ms.cells().two_sided_cell_of(l[0]) != ms.cells().two_sided_cell_of(l_prime[0]) {
            return Err(Error::Argument(
                "left cells lie in different two-sided cells".into(),
            ));
        }
        let right = ms.cells().right_cell_of(g);
        let meet: Vec<MorphismId> = l_prime
            .iter()
            .copied()
            .filter(|&f| ms.cells().right_cell_of(f) == right)
            .collect();
        let [f] = meet[..] else {
            return Err(Error::Unsupported(format!(
                "left and right cell meet in {} elements",
                meet.len()
            )));
        };
        // L_F in the cell representation of L′ is the simple at the first index of F
        let CcxMorphism::Proj { tgt, s, .. } = self.ccx.kinds[f] else {
            return Err(Error::Argument("identity in a non-identity cell".into()));
        };
        let af = self.ccx.algebra(tgt);
        let chi_g = self.chi(l)?;
        let chi_f = hilbert_series(af, &af.corner(s, s))?;
        let psi = chi_g.div_exact(&chi_f);
        let mg = ms.m_value(g)?;
        let mf = ms.m_value(f)?;
        let l_g = chi_g.max_degree();
        let l_f = chi_f.max_degree();
        let mut rec = Record::new(
            format!("Hilbert factorization G={} F={}", ms.name(g), ms.name(f)),
            "χ_G = χ_F ψ",
        )
        .value("chi_G", &chi_g)
        .value("chi_F", &chi_f)
        .value("m_G", mg)
        .value("m_F", mf)
        .value("chi_G(1)", chi_g.eval_at_one());
        let ok = match &psi {
            Some(p) => {
                rec = rec
                    .value("psi", p)
                    .value("k0", p.coeff(0))
                    .value("k", p.eval_at_one());
                p.has_nonnegative_coeffs()
                    && p.coeff(0) == 1
                    && p.max_degree().is_some_and(|d| d <= 0)
                    && p.eval_at_one() as u64 * mf == mg
                    && chi_g.coeff(0) == 1
                    && chi_g.eval_at_one() as u64 == mg
                    && l_g == l_f
            }
            None => {
                rec = rec.value("psi", "inexact");
                false
            }
        };
        Ok(vec![rec.pass_if(ok)])
    }

    /// Every graded check on every left cell.
    pub fn verify_all(&self, seed: u64) -> Result<Vec<Record>> {
        let mut out = vec![
            Record::new("graded shifts", "chosen representatives").value(
                "shifts",
                self.ccx
                    .ms
                    .sorted_ids()
                    .into_iter()
                    .filter(|&f| !self.ccx.ms.morphism(f).is_identity)
                    .map(|f| format!("{}:{}", self.ccx.ms.name(f), self.shift(f)))
                    .collect::<Vec<_>>()
                    .join(","),
            ),
        ];
        out.extend(self.positivity()?);
        let cells = self.ccx.left_cells()?;
        for l in &cells {
            let g = self.ccx.ms.duflo(l)?;
            out.push(
                Record::new(format!("invariants G={}", self.ccx.ms.name(g)), "a and l")
                    .value("a", self.invariant_a(l)?)
                    .value("l", self.invariant_l(l)?)
                    .value("chi_G", self.chi(l)?),
            );
            out.extend(self.verify_self_duality(l, seed)?);
            for lp in &cells {
                let same = self.ccx.ms.cells().two_sided_cell_of(l[0])
                    == self.ccx.ms.cells().two_sided_cell_of(lp[0]);
                if same {
                    out.extend(self.verify_hilbert_factorization(l, lp)?);
                }
            }
        }
        Ok(out)
    }
}

/// Graded `C_{C,X}` over a single graded algebra with default shifts.
pub fn graded_single(a: AlgRef) -> Result<GradedCcx> {
    let ccx = crate::bimod::build_ccx(&crate::bimod::CcxData::single(a)?)?;
    GradedCcx::new(ccx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimod::{hom_space, iso_test, DEFAULT_SEED};

    pub(crate) const DUAL_NUMBERS: &str = "basis 1 x\nunit 1\ndeg x = 2\n";
    const ZIGZAG: &str = "\
basis e1 e2 a b c1 c2
unit e1 + e2
idempotent e1
idempotent e2
e1*e1 = e1
e2*e2 = e2
e2*a = a
a*e1 = a
e1*b = b
b*e2 = b
b*a = c1
a*b = c2
e1*c1 = c1
c1*e1 = c1
e2*c2 = c2
c2*e2 = c2
deg a = 1
deg b = 1
deg c1 = 2
deg c2 = 2
";

    fn alg(text: &str) -> AlgRef {
        Arc::new(FinDimAlgebra::parse(text).unwrap())
    }

    fn t(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn hom_series_examples() {
        let d = alg(DUAL_NUMBERS);
        let reg = Bimodule::regular(&d);
        assert_eq!(graded_hom_series(&reg, &reg).unwrap(), t(&[(0, 1), (2, 1)]));
        let p = Bimodule::proj(&d, 0, &d, 0);
        assert_eq!(graded_hom_series(&p, &reg).unwrap(), t(&[(0, 1), (2, 1)]));
        let q = alg("basis 1\nunit 1\ndeg 1 = 0\n");
        let rq = Bimodule::regular(&q);
        assert_eq!(graded_hom_series(&rq, &rq).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn example_with_shift_one_is_positive() {
        let g = graded_single(alg(DUAL_NUMBERS)).unwrap();
        let f = g.ccx.ms.id("F11").unwrap();
        assert_eq!(g.shift(f), 1);
        assert!(g.is_positive().unwrap());
        let l = &g.ccx.left_cells().unwrap()[0];
        assert_eq!(g.invariant_l(l).unwrap(), 2);
        assert_eq!(g.invariant_a(l).unwrap(), 1);
        assert!(g
            .verify_self_duality(l, DEFAULT_SEED)
            .unwrap()
            .iter()
            .all(|r| !r.failed()));
        let rec = &g.verify_hilbert_factorization(l, l).unwrap()[0];
        assert!(!rec.failed(), "{rec}");
        assert_eq!(rec.values["chi_G(1)"], "2");
        assert_eq!(rec.values["m_G"], "2");
    }

    #[test]
    fn example_with_shift_zero_is_not_positive() {
        let d = graded_single(alg(DUAL_NUMBERS)).unwrap();
        let g = GradedCcx::with_shifts(d.ccx.clone(), ShiftChoice { shifts: vec![0, 0] }).unwrap();
        assert!(!g.is_positive().unwrap());
    }

    #[test]
    fn zigzag_invariants() {
        let g = graded_single(alg(ZIGZAG)).unwrap();
        assert!(
            g.is_positive().unwrap(),
            "{:?}",
            g.positivity()
                .unwrap()
                .iter()
                .filter(|r| r.failed())
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
        );
        let cells = g.ccx.left_cells().unwrap();
        let f11 = g.ccx.ms.id("F11").unwrap();
        let l = cells.iter().find(|c| c.contains(&f11)).unwrap();
        let lp = cells.iter().find(|c| !c.contains(&f11)).unwrap();
        assert_eq!(g.invariant_l(l).unwrap(), 2);
        assert_eq!(g.invariant_a(l).unwrap(), 1);
        for r in g.verify_self_duality(l, 3).unwrap() {
            assert!(!r.failed(), "{r}");
        }
        let rec = &g.verify_hilbert_factorization(l, lp).unwrap()[0];
        assert!(!rec.failed(), "{rec}");
        assert_eq!(rec.values["psi"], "1");
        assert_eq!(rec.values["chi_G"], "1 + t^2");
        for r in g.verify_all(DEFAULT_SEED).unwrap() {
            assert!(!r.failed(), "{r}");
        }
    }

    #[test]
    fn rationals_have_trivial_invariants() {
        let q = alg("basis 1\nunit 1\ndeg 1 = 0\n");
        let g = graded_single(q).unwrap();
        let l = &g.ccx.left_cells().unwrap()[0];
        assert_eq!(g.invariant_a(l).unwrap(), 0);
        assert_eq!(g.invariant_l(l).unwrap(), 0);
        assert!(g
            .verify_self_duality(l, 1)
            .unwrap()
            .iter()
            .all(|r| !r.failed()));
        assert!(g
            .verify_hilbert_factorization(l, l)
            .unwrap()
            .iter()
            .all(|r| !r.failed()));
        // F11 ≅ 𝟙 here, so the grading cannot be positive
        assert!(!g.is_positive().unwrap());
    }

    #[test]
    fn dual_of_projective_is_projective() {
        let z = alg(ZIGZAG);
        let p = Bimodule::proj(&z, 0, &z, 1);
        let d = dual(&p).unwrap();
        d.check().unwrap();
        let swapped = Bimodule::proj(&z, 1, &z, 0);
        assert!(iso_test(&d, &swapped, 1).unwrap());
    }

    #[test]
    fn ungrading_is_consistent() {
        let z = alg(ZIGZAG);
        let m = Bimodule::proj(&z, 0, &z, 1);
        let n = Bimodule::proj(&z, 0, &z, 0);
        let reg = Bimodule::regular(&z);
        for (x, y) in [(&m, &n), (&reg, &m), (&m, &reg), (&reg, &reg)] {
            let series = graded_hom_series(x, y).unwrap();
            assert_eq!(
                series.eval_at_one() as usize,
                hom_space(x, y).unwrap().dim()
            );
        }
    }

    #[test]
    fn bad_gradings_rejected() {
        let neg = alg("basis 1 x\nunit 1\ndeg x = -1\n");
        assert!(matches!(check_grading(&neg), Err(Error::Unsupported(_))));
        let odd = alg("basis 1 x\nunit 1\ndeg x = 1\n");
        assert!(matches!(graded_single(odd), Err(Error::Unsupported(_))));
    }
}

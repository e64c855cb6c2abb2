//! Basic finite-dimensional algebras over ℚ given by structure constants.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, fmt_q, is_zero_vec, null_space, unit_vec, zero_vec, Matrix, SparseRow, Subspace,
    Vector, Q,
};
use crate::text;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    name: String,
    labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `b_i · b_j`
    mult: Vec<Vec<Vector>>,
    unit: Vector,
    idempotents: Vec<Vector>,
    degrees: Option<Vec<i32>>,
    radical: Subspace,
}

/// Images of `sub` under every operator, spanned.
pub fn apply_ops(sub: &Subspace, ops: &[Matrix]) -> Subspace {
    Subspace::from_spanning(
        sub.ambient(),
        ops.iter()
            .flat_map(|op| sub.basis().iter().map(move |b| op.mul_vec(b))),
    )
}

/// `M ⊇ R·M ⊇ R²·M ⊇ … ⊇ 0` for the module `start` under radical operators `ops`.
/// Returns the nonzero terms; fails if the chain stalls (operators not nilpotent).
pub fn radical_series(start: &Subspace, ops: &[Matrix]) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    let mut cur = start.clone();
    while !cur.is_zero() {
        let next = apply_ops(&cur, ops);
        if next.dim() >= cur.dim() {
            return Err(Error::Internal(
                "radical operators are not nilpotent".into(),
            ));
        }
        out.push(cur);
        cur = next;
    }
    Ok(out)
}

/// Smallest `k` with `R^k·M = 0`.
pub fn loewy_length(start: &Subspace, ops: &[Matrix]) -> Result<usize> {
    Ok(radical_series(start, ops)?.len())
}

/// Vectors of `start` killed by every operator.
pub fn socle(start: &Subspace, ops: &[Matrix]) -> Subspace {
    let n = start.ambient();
    let rows = ops
        .iter()
        .flat_map(|op| (0..op.rows()).map(move |i| SparseRow::from_dense(op.row(i))));
    null_space(n, rows).intersect(start)
}

/// Canonical complement of `R·M` inside `M`, as a subspace of the ambient space.
pub fn top(start: &Subspace, ops: &[Matrix]) -> Subspace {
    let rm = apply_ops(start, ops);
    let used = rm.extend_by(start.basis());
    Subspace::from_spanning(start.ambient(), used.into_iter().cloned())
}

impl FinDimAlgebra {
    /// Builds and validates an algebra. Every law is checked exhaustively.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        mult: Vec<Vec<Vector>>,
        unit: Vector,
        idempotents: Vec<Vector>,
        degrees: Option<Vec<i32>>,
    ) -> Result<Self> {
        let d = labels.len();
        let shape_ok = mult.len() == d
            && mult
                .iter()
                .all(|r| r.len() == d && r.iter().all(|v| v.len() == d))
            && unit.len() == d
            && idempotents.iter().all(|e| e.len() == d)
            && degrees.as_ref().is_none_or(|g| g.len() == d);
        if !shape_ok {
            return Err(Error::Invalid(vec![
                "structure constants have the wrong shape".into(),
            ]));
        }
        if d == 0 {
            return Err(Error::Invalid(vec!["algebra has no basis".into()]));
        }
        let mut alg = FinDimAlgebra {
            name: name.into(),
            labels,
            mult,
            unit,
            idempotents,
            degrees,
            radical: Subspace::zero(d),
        };
        alg.validate()?;
        alg.radical = alg.compute_radical()?;
        alg.check_split()?;
        Ok(alg)
    }

    /// The one-dimensional algebra ℚ.
    pub fn rationals() -> Self {
        FinDimAlgebra::parse("name Q\nbasis 1\nunit 1\n").expect("ℚ is a valid algebra")
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim();
        let mut problems = Vec::new();
        'assoc: for i in 0..d {
            for j in 0..d {
                let ij = &self.mult[i][j];
                for k in 0..d {
                    let lhs = self.mul(ij, &unit_vec(d, k));
                    let rhs = self.mul(&unit_vec(d, i), &self.mult[j][k]);
                    if lhs != rhs {
                        problems.push(format!(
                            "associativity fails for ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                        if problems.len() >= 8 {
                            break 'assoc;
                        }
                    }
                }
            }
        }
        for i in 0..d {
            let b = unit_vec(d, i);
            if self.mul(&self.unit, &b) != b || self.mul(&b, &self.unit) != b {
                problems.push(format!("unit law fails for {}", self.labels[i]));
            }
        }
        if self.idempotents.is_empty() {
            problems.push("no idempotents given".into());
        }
        let mut sum = zero_vec(d);
        for (a, e) in self.idempotents.iter().enumerate() {
            add_scaled(&mut sum, &Q::one(), e);
            for (b, f) in self.idempotents.iter().enumerate() {
                let ef = self.mul(e, f);
                let expect = if a == b { e.clone() } else { zero_vec(d) };
                if ef != expect {
                    problems.push(format!(
                        "idempotents e{} and e{} are not orthogonal idempotents",
                        a + 1,
                        b + 1
                    ));
                }
            }
            if is_zero_vec(e) {
                problems.push(format!("idempotent e{} is zero", a + 1));
            }
        }
        if sum != self.unit {
            problems.push("idempotents do not sum to the unit".into());
        }
        if let Some(deg) = &self.degrees {
            for i in 0..d {
                for j in 0..d {
                    for (k, c) in self.mult[i][j].iter().enumerate() {
                        if !c.is_zero() && deg[k] != deg[i] + deg[j] {
                            problems.push(format!(
                                "product {}*{} is not homogeneous",
                                self.labels[i], self.labels[j]
                            ));
                            break;
                        }
                    }
                }
            }
            for (a, e) in self.idempotents.iter().enumerate() {
                if e.iter()
                    .enumerate()
                    .any(|(k, c)| !c.is_zero() && deg[k] != 0)
                {
                    problems.push(format!("idempotent e{} is not of degree 0", a + 1));
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(problems))
        }
    }

    /// Kernel of the trace form `(x, y) ↦ tr(L_{xy})`, checked to be a
    /// nilpotent ideal.
    fn compute_radical(&self) -> Result<Subspace> {
        let d = self.dim();
        let lm: Vec<Matrix> = (0..d).map(|i| self.left_matrix(&unit_vec(d, i))).collect();
        let rows = (0..d).map(|i| {
            let row: Vector = (0..d).map(|j| lm[i].mul(&lm[j]).trace()).collect();
            SparseRow::from_dense(&row)
        });
        let rad = null_space(d, rows);
        for r in rad.basis() {
            for i in 0..d {
                let b = unit_vec(d, i);
                if !rad.contains(&self.mul(&b, r)) || !rad.contains(&self.mul(r, &b)) {
                    return Err(Error::Internal("trace-form radical is not an ideal".into()));
                }
            }
        }
        let mut power = rad.clone();
        for _ in 0..=d {
            if power.is_zero() {
                return Ok(rad);
            }
            power = self.product_space(&power, &rad);
        }
        Err(Error::Internal(
            "trace-form radical is not nilpotent".into(),
        ))
    }

    /// Requires every `e_i A e_i / e_i Rad e_i` to be one-dimensional and
    /// `A / Rad` to have dimension equal to the number of idempotents.
    fn check_split(&self) -> Result<()> {
        let mut problems = Vec::new();
        for i in 0..self.num_idempotents() {
            let corner = self.corner(i, i);
            let rad_corner = self.radical.intersect(&corner);
            if corner.dim() != rad_corner.dim() + 1 {
                problems.push(format!(
                    "e{0}Ae{0} / e{0}Rad e{0} has dimension {1}; need a basic split algebra with primitive idempotents",
                    i + 1,
                    corner.dim() - rad_corner.dim()
                ));
            }
        }
        let quotient = self.dim() - self.radical.dim();
        if problems.is_empty() && quotient != self.num_idempotents() {
            problems.push(format!(
                "A/Rad has dimension {quotient} but there are {} idempotents",
                self.num_idempotents()
            ));
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(problems))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Argument(format!("no basis element `{label}` in {}", self.name)))
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vector] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &Vector {
        &self.idempotents[i]
    }

    pub fn num_idempotents(&self) -> usize {
        self.idempotents.len()
    }

    pub fn degrees(&self) -> Option<&[i32]> {
        self.degrees.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vector {
        let d = self.dim();
        let mut out = zero_vec(d);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(x * y), &self.mult[i][j]);
            }
        }
        out
    }

    /// Matrix of `m ↦ a·m`.
    pub fn left_matrix(&self, a: &[Q]) -> Matrix {
        let d = self.dim();
        Matrix::from_columns(d, (0..d).map(|j| self.mul(a, &unit_vec(d, j))).collect())
    }

    /// Matrix of `m ↦ m·a`.
    pub fn right_matrix(&self, a: &[Q]) -> Matrix {
        let d = self.dim();
        Matrix::from_columns(d, (0..d).map(|j| self.mul(&unit_vec(d, j), a)).collect())
    }

    /// `span{x·y : x ∈ U, y ∈ V}`
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Subspace {
        Subspace::from_spanning(
            self.dim(),
            u.basis()
                .iter()
                .flat_map(|x| v.basis().iter().map(move |y| self.mul(x, y))),
        )
    }

    /// `a · S · b` for vectors `a`, `b` and a subspace `S`.
    pub fn sandwich(&self, a: &[Q], s: &Subspace, b: &[Q]) -> Subspace {
        Subspace::from_spanning(
            self.dim(),
            s.basis().iter().map(|x| self.mul(&self.mul(a, x), b)),
        )
    }

    /// `e_i A e_j`
    pub fn corner(&self, i: usize, j: usize) -> Subspace {
        self.sandwich(
            &self.idempotents[i],
            &Subspace::full(self.dim()),
            &self.idempotents[j],
        )
    }

    /// `A e_i`
    pub fn left_projective(&self, i: usize) -> Subspace {
        self.sandwich(
            &self.unit,
            &Subspace::full(self.dim()),
            &self.idempotents[i],
        )
    }

    /// `e_i A`
    pub fn right_projective(&self, i: usize) -> Subspace {
        self.sandwich(
            &self.idempotents[i],
            &Subspace::full(self.dim()),
            &self.unit,
        )
    }

    pub fn radical(&self) -> &Subspace {
        &self.radical
    }

    pub fn radical_power(&self, k: usize) -> Subspace {
        let mut p = Subspace::full(self.dim());
        for _ in 0..k {
            p = self.product_space(&p, &self.radical);
        }
        p
    }

    pub fn center(&self) -> Subspace {
        let d = self.dim();
        // z ↦ b_i z − z b_i, for every basis element b_i
        let rows = (0..d).flat_map(|i| {
            let b = unit_vec(d, i);
            let m = self.left_matrix(&b).sub(&self.right_matrix(&b));
            (0..d)
                .map(move |r| SparseRow::from_dense(m.row(r)))
                .collect::<Vec<_>>()
        });
        null_space(d, rows)
    }

    /// Left multiplications by a basis of the radical.
    pub fn radical_left_ops(&self) -> Vec<Matrix> {
        self.radical
            .basis()
            .iter()
            .map(|r| self.left_matrix(r))
            .collect()
    }

    pub fn radical_right_ops(&self) -> Vec<Matrix> {
        self.radical
            .basis()
            .iter()
            .map(|r| self.right_matrix(r))
            .collect()
    }

    /// Loewy length of `A` as a left module over itself.
    pub fn loewy_length(&self) -> Result<usize> {
        loewy_length(&Subspace::full(self.dim()), &self.radical_left_ops())
    }

    pub fn socle_left(&self, start: &Subspace) -> Subspace {
        socle(start, &self.radical_left_ops())
    }

    pub fn top_left(&self, start: &Subspace) -> Subspace {
        top(start, &self.radical_left_ops())
    }

    /// `soc(Ae_i)` is simple and isomorphic to the top `L_i` of `Ae_i`.
    pub fn is_weakly_symmetric(&self) -> bool {
        (0..self.num_idempotents()).all(|i| {
            let soc = self.socle_left(&self.left_projective(i));
            soc.dim() == 1 && !is_zero_vec(&self.mul(&self.idempotents[i], &soc.basis()[0]))
        })
    }

    /// `dim e_i (Rad/Rad²) e_j`
    pub fn arrows(&self, i: usize, j: usize) -> usize {
        let rad2 = self.radical_power(2);
        let ei = &self.idempotents[i];
        let ej = &self.idempotents[j];
        self.sandwich(ei, &self.radical, ej).dim() - self.sandwich(ei, &rad2, ej).dim()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_idempotents();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (self.arrows(i, j) > 0 || self.arrows(j, i) > 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Idempotents followed by arrows: for each `(i, j)`, elements of
    /// `e_i Rad e_j` completing `e_i Rad² e_j`. These generate `A`.
    pub fn generators(&self) -> Vec<Vector> {
        let n = self.num_idempotents();
        let rad2 = self.radical_power(2);
        let mut out = self.idempotents.clone();
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (&self.idempotents[i], &self.idempotents[j]);
                let lower = self.sandwich(ei, &rad2, ej);
                let full = self.sandwich(ei, &self.radical, ej);
                out.extend(lower.extend_by(full.basis()).into_iter().cloned());
            }
        }
        out
    }

    /// Algebra with opposite multiplication.
    pub fn opposite(&self) -> FinDimAlgebra {
        let d = self.dim();
        let mult = (0..d)
            .map(|i| (0..d).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        FinDimAlgebra {
            name: format!("{}^op", self.name),
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            degrees: self.degrees.clone(),
            radical: self.radical.clone(),
        }
    }

    /// Same algebra forgetting the grading.
    pub fn ungraded(&self) -> FinDimAlgebra {
        FinDimAlgebra {
            degrees: None,
            ..self.clone()
        }
    }

    /// Same algebra with a grading attached (validated).
    pub fn with_degrees(&self, degrees: Vec<i32>) -> Result<FinDimAlgebra> {
        FinDimAlgebra::new(
            self.name.clone(),
            self.labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.idempotents.clone(),
            Some(degrees),
        )
    }

    /// Renders a vector as `2*x - 1/2*y`.
    pub fn render(&self, v: &[Q]) -> String {
        let mut out = String::new();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Q::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&self.labels[i]);
            } else {
                let _ = write!(out, "{}*{}", fmt_q(&mag), self.labels[i]);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn render_subspace(&self, s: &Subspace) -> String {
        let parts: Vec<String> = s.basis().iter().map(|v| self.render(v)).collect();
        format!("span{{{}}}", parts.join(", "))
    }

    /// Parses a vector written as `2*x - 1/2*y`, `x`, or `0`.
    pub fn parse_vector(&self, s: &str) -> Result<Vector> {
        parse_vector(&self.labels, s, 1, 1)
    }

    /// Parses the algebra text format.
    pub fn parse(input: &str) -> Result<Self> {
        let lines = text::lines(input);
        if lines.is_empty() {
            return Err(Error::parse(1, 1, "empty algebra description"));
        }
        let mut name = String::from("A");
        let mut labels: Option<Vec<String>> = None;
        let mut unit: Option<Vector> = None;
        let mut idempotents = Vec::new();
        let mut products: Vec<(usize, usize, Vector)> = Vec::new();
        let mut degrees: Option<Vec<i32>> = None;
        for line in &lines {
            let head = line.tokens[0];
            let need_basis = |labels: &Option<Vec<String>>| -> Result<Vec<String>> {
                labels
                    .clone()
                    .ok_or_else(|| line.error(head.column, "`basis` must come first"))
            };
            match head.text {
                "name" => {
                    name = line.expect(1, "algebra name")?.text.to_string();
                    line.expect_end(2)?;
                }
                "basis" => {
                    if labels.is_some() {
                        return Err(line.error(head.column, "duplicate `basis` line"));
                    }
                    let mut ls: Vec<String> = Vec::new();
                    for t in &line.tokens[1..] {
                        if t.text.contains(['*', '+', '-', '/', '=']) {
                            return Err(
                                line.error(t.column, format!("bad basis label `{}`", t.text))
                            );
                        }
                        if ls.iter().any(|l| l == t.text) {
                            return Err(
                                line.error(t.column, format!("duplicate label `{}`", t.text))
                            );
                        }
                        ls.push(t.text.to_string());
                    }
                    if ls.is_empty() {
                        return Err(line.error(head.column, "empty basis"));
                    }
                    labels = Some(ls);
                }
                "unit" | "idempotent" => {
                    let ls = need_basis(&labels)?;
                    let (rest, col) = line
                        .rest(1)
                        .ok_or_else(|| line.error(head.column, "expected a vector"))?;
                    let v = parse_vector(&ls, rest, line.number, col)?;
                    if head.text == "unit" {
                        unit = Some(v);
                    } else {
                        idempotents.push(v);
                    }
                }
                "deg" => {
                    let ls = need_basis(&labels)?;
                    let t = line.expect(1, "basis label")?;
                    line.expect_literal(2, "=")?;
                    let dt = line.expect(3, "degree")?;
                    line.expect_end(4)?;
                    let i = ls.iter().position(|l| l == t.text).ok_or_else(|| {
                        line.error(t.column, format!("unknown label `{}`", t.text))
                    })?;
                    let k: i32 = dt
                        .text
                        .parse()
                        .map_err(|_| line.error(dt.column, format!("bad degree `{}`", dt.text)))?;
                    degrees.get_or_insert_with(|| vec![0; ls.len()])[i] = k;
                }
                _ => {
                    let ls = need_basis(&labels)?;
                    let Some((a, b)) = head.text.split_once('*') else {
                        return Err(line.error(head.column, format!("unexpected `{}`", head.text)));
                    };
                    let find = |l: &str, col: usize| {
                        ls.iter()
                            .position(|x| x == l)
                            .ok_or_else(|| line.error(col, format!("unknown label `{l}`")))
                    };
                    let i = find(a, head.column)?;
                    let j = find(b, head.column + a.chars().count() + 1)?;
                    line.expect_literal(1, "=")?;
                    let (rest, col) = line
                        .rest(2)
                        .ok_or_else(|| line.error(head.column, "expected a vector"))?;
                    let v = parse_vector(&ls, rest, line.number, col)?;
                    if products.iter().any(|(x, y, _)| (*x, *y) == (i, j)) {
                        return Err(line.error(head.column, "duplicate product"));
                    }
                    products.push((i, j, v));
                }
            }
        }
        let labels = labels.ok_or_else(|| Error::parse(1, 1, "missing `basis` line"))?;
        let d = labels.len();
        let unit = unit.ok_or_else(|| Error::parse(1, 1, "missing `unit` line"))?;
        if idempotents.is_empty() {
            idempotents.push(unit.clone());
        }
        let mut mult = vec![vec![None; d]; d];
        for (i, j, v) in products {
            mult[i][j] = Some(v);
        }
        let unit_index = (0..d).find(|&k| unit == unit_vec(d, k));
        let mult = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| match mult[i][j].take() {
                        Some(v) => v,
                        None if Some(i) == unit_index => unit_vec(d, j),
                        None if Some(j) == unit_index => unit_vec(d, i),
                        None => zero_vec(d),
                    })
                    .collect()
            })
            .collect();
        FinDimAlgebra::new(name, labels, mult, unit, idempotents, degrees)
    }

    /// Serializes to the text format.
    pub fn to_text(&self) -> String {
        let d = self.dim();
        let mut out = String::new();
        let _ = writeln!(out, "name {}", self.name);
        let _ = writeln!(out, "basis {}", self.labels.join(" "));
        let _ = writeln!(out, "unit {}", self.render(&self.unit));
        for e in &self.idempotents {
            let _ = writeln!(out, "idempotent {}", self.render(e));
        }
        for i in 0..d {
            for j in 0..d {
                if !is_zero_vec(&self.mult[i][j]) {
                    let _ = writeln!(
                        out,
                        "{}*{} = {}",
                        self.labels[i],
                        self.labels[j],
                        self.render(&self.mult[i][j])
                    );
                }
            }
        }
        if let Some(deg) = &self.degrees {
            for (l, k) in self.labels.iter().zip(deg) {
                if *k != 0 {
                    let _ = writeln!(out, "deg {l} = {k}");
                }
            }
        }
        out
    }
}

/// Parses `2*x - 1/2*y` against `labels`; `line`/`column` locate errors.
pub fn parse_vector(labels: &[String], s: &str, line: usize, column: usize) -> Result<Vector> {
    let d = labels.len();
    let mut v = zero_vec(d);
    if s.trim() == "0" {
        return Ok(v);
    }
    let terms = text::signed_terms(s, column);
    if terms.is_empty() {
        return Err(Error::parse(line, column, "expected a vector"));
    }
    for (neg, term, col) in terms {
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => {
                let c: Q = c.trim().parse().map_err(|_| {
                    Error::parse(line, col, format!("bad coefficient `{}`", c.trim()))
                })?;
                (c, l.trim())
            }
            None => (Q::one(), term.as_str()),
        };
        let i = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::parse(line, col, format!("unknown label `{label}`")))?;
        let c = if neg { -coeff } else { coeff };
        v[i] += c;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    pub(crate) const X3: &str = "\
name x3
basis 1 x x2
unit 1
x*x = x2
";

    const EXTERIOR: &str = "\
basis 1 x y xy
unit 1
x*y = xy
y*x = -xy
";

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
";

    const NON_WS: &str = "\
basis e1 e2 a b
unit e1 + e2
idempotent e1
idempotent e2
e1*e1 = e1
e2*e2 = e2
e2*a = a
a*e1 = a
e1*b = b
b*e2 = b
";

    #[test]
    fn truncated_polynomial_ring() {
        let a = FinDimAlgebra::parse(X3).unwrap();
        assert_eq!(a.radical().dim(), 2);
        assert_eq!(a.center().dim(), 3);
        assert_eq!(a.loewy_length().unwrap(), 3);
        assert!(a.is_weakly_symmetric());
        assert!(a.is_connected());
        let back = FinDimAlgebra::parse(&a.to_text()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn forced_associativity_failure() {
        let bad = format!("{X3}x*x2 = 1\n");
        match FinDimAlgebra::parse(&bad).unwrap_err() {
            Error::Invalid(v) => assert!(v.iter().any(|m| m.contains("(x, x, x2)")), "{v:?}"),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn exterior_algebra() {
        let a = FinDimAlgebra::parse(EXTERIOR).unwrap();
        assert_eq!(a.radical().dim(), 3);
        let xy = a.basis_vec(3);
        assert_eq!(
            a.center(),
            Subspace::from_spanning(4, [a.unit().clone(), xy])
        );
        assert!(a.is_weakly_symmetric());
        assert_eq!(a.loewy_length().unwrap(), 3);
    }

    #[test]
    fn rationals() {
        let a = FinDimAlgebra::parse("basis 1\nunit 1\n").unwrap();
        assert!(a.radical().is_zero());
        assert_eq!(a.loewy_length().unwrap(), 1);
        assert_eq!(a.generators().len(), 1);
    }

    #[test]
    fn zigzag() {
        let a = FinDimAlgebra::parse(ZIGZAG).unwrap();
        assert_eq!(a.center().dim(), 3);
        assert_eq!(a.corner(0, 0).dim(), 2);
        assert_eq!(a.corner(1, 0).dim(), 1);
        assert_eq!(a.arrows(1, 0), 1);
        assert_eq!(a.arrows(0, 0), 0);
        assert!(a.is_connected());
        assert!(a.is_weakly_symmetric());
        assert_eq!(a.generators().len(), 4);
        for i in 0..2 {
            assert_eq!(a.left_projective(i).dim(), a.right_projective(i).dim());
            assert_eq!(a.top_left(&a.left_projective(i)).dim(), 1);
        }
    }

    #[test]
    fn socle_on_the_wrong_vertex() {
        let a = FinDimAlgebra::parse(NON_WS).unwrap();
        assert!(!a.is_weakly_symmetric());
        assert!(a.is_connected());
    }

    #[test]
    fn product_of_fields_is_disconnected() {
        let text =
            "basis e1 e2\nunit e1 + e2\nidempotent e1\nidempotent e2\ne1*e1 = e1\ne2*e2 = e2\n";
        let a = FinDimAlgebra::parse(text).unwrap();
        assert!(!a.is_connected());
        assert!(a.radical().is_zero());
    }

    #[test]
    fn non_split_rejected() {
        // ℚ(i) as a 2-dimensional algebra
        let text = "basis 1 i\nunit 1\ni*i = -1\n";
        assert!(matches!(FinDimAlgebra::parse(text), Err(Error::Invalid(_))));
    }

    #[test]
    fn vectors() {
        let labels: Vec<String> = ["1", "x"].iter().map(|s| s.to_string()).collect();
        let v = parse_vector(&labels, "2*1 - 1/2*x", 1, 1).unwrap();
        assert_eq!(v, vec![q(2), Q::new((-1).into(), 2.into())]);
        assert!(parse_vector(&labels, "3*z", 4, 7).is_err());
    }

    #[test]
    fn graded_homogeneity() {
        let a = FinDimAlgebra::parse(&format!("{X3}deg x = 1\ndeg x2 = 2\n")).unwrap();
        assert_eq!(a.degrees(), Some(&[0, 1, 2][..]));
        assert!(FinDimAlgebra::parse(&format!("{X3}deg x = 1\ndeg x2 = 3\n")).is_err());
    }
}

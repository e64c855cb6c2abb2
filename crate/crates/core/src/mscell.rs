//! Finite multisemigroups of 1-morphism classes and their Green cells.
//!
//! Morphisms are addressed by index into [`MultiSemigroup::morphisms`].
//! Composition `F ∘ G` is defined when `src(F) = tgt(G)`; its result is a
//! multiset of morphisms with natural-number multiplicities.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text;

pub type ObjectId = String;
pub type MorphismId = usize;
/// Sparse multiset: morphism index → positive multiplicity.
pub type Multiset = BTreeMap<MorphismId, u64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneMorphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub is_identity: bool,
}

/// Sort key used for every user-visible ordering: shorter names first.
pub fn name_key(name: &str) -> (usize, &str) {
    (name.chars().count(), name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSemigroup {
    objects: Vec<ObjectId>,
    morphisms: Vec<OneMorphism>,
    /// `table[f * n + g]` is `Some` exactly when `f ∘ g` is defined.
    table: Vec<Option<Multiset>>,
    star: Vec<MorphismId>,
    cells: CellStructure,
}

/// Green preorders and their equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellStructure {
    leq_l: Vec<Vec<bool>>,
    leq_r: Vec<Vec<bool>>,
    leq_j: Vec<Vec<bool>>,
    pub left_cells: Vec<Vec<MorphismId>>,
    pub right_cells: Vec<Vec<MorphismId>>,
    pub two_sided_cells: Vec<Vec<MorphismId>>,
    left_of: Vec<usize>,
    right_of: Vec<usize>,
    two_sided_of: Vec<usize>,
}

impl CellStructure {
    pub fn leq_left(&self, f: MorphismId, g: MorphismId) -> bool {
        self.leq_l[f][g]
    }
    pub fn leq_right(&self, f: MorphismId, g: MorphismId) -> bool {
        self.leq_r[f][g]
    }
    pub fn leq_two_sided(&self, f: MorphismId, g: MorphismId) -> bool {
        self.leq_j[f][g]
    }
    pub fn left_cell_of(&self, f: MorphismId) -> usize {
        self.left_of[f]
    }
    pub fn right_cell_of(&self, f: MorphismId) -> usize {
        self.right_of[f]
    }
    pub fn two_sided_cell_of(&self, f: MorphismId) -> usize {
        self.two_sided_of[f]
    }
}

fn closure(rel: &mut [Vec<bool>]) {
    let n = rel.len();
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
}

fn classes(rel: &[Vec<bool>], order: &[MorphismId]) -> (Vec<Vec<MorphismId>>, Vec<usize>) {
    let n = rel.len();
    let mut of = vec![usize::MAX; n];
    let mut out: Vec<Vec<MorphismId>> = Vec::new();
    for &f in order {
        if of[f] != usize::MAX {
            continue;
        }
        let class: Vec<MorphismId> = order
            .iter()
            .copied()
            .filter(|&g| rel[f][g] && rel[g][f])
            .collect();
        for &g in &class {
            of[g] = out.len();
        }
        out.push(class);
    }
    (out, of)
}

impl MultiSemigroup {
    /// Builds and validates a multisemigroup. Missing products involving an
    /// identity are filled in; every other composable pair must be present.
    pub fn new(
        objects: Vec<ObjectId>,
        morphisms: Vec<OneMorphism>,
        products: BTreeMap<(MorphismId, MorphismId), Multiset>,
        star: Vec<MorphismId>,
    ) -> Result<Self> {
        let n = morphisms.len();
        let mut problems = Vec::new();

        let mut seen = BTreeSet::new();
        for o in &objects {
            if !seen.insert(o.as_str()) {
                problems.push(format!("duplicate object `{o}`"));
            }
        }
        let mut seen = BTreeSet::new();
        for m in &morphisms {
            if !seen.insert(m.name.as_str()) {
                problems.push(format!("duplicate morphism `{}`", m.name));
            }
            if m.src >= objects.len() || m.tgt >= objects.len() {
                problems.push(format!("morphism `{}` refers to an unknown object", m.name));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        let mut identity_of = vec![None; objects.len()];
        for (i, m) in morphisms.iter().enumerate() {
            if m.is_identity {
                if m.src != m.tgt {
                    problems.push(format!("identity `{}` has src ≠ tgt", m.name));
                } else if identity_of[m.src].replace(i).is_some() {
                    problems.push(format!(
                        "object `{}` has several identities",
                        objects[m.src]
                    ));
                }
            }
        }
        for (o, id) in identity_of.iter().enumerate() {
            if id.is_none() {
                problems.push(format!("object `{}` has no identity", objects[o]));
            }
        }
        if star.len() != n || star.iter().any(|&s| s >= n) {
            problems.push("star map is not a map on morphisms".into());
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }

        let mut table = vec![None; n * n];
        for ((f, g), ms) in products {
            if f >= n || g >= n {
                problems.push("product refers to an unknown morphism".into());
                continue;
            }
            let (mf, mg) = (&morphisms[f], &morphisms[g]);
            if mf.src != mg.tgt {
                problems.push(format!(
                    "product {} ∘ {} listed but not composable",
                    mf.name, mg.name
                ));
                continue;
            }
            let cleaned: Multiset = ms.into_iter().filter(|(_, k)| *k > 0).collect();
            table[f * n + g] = Some(cleaned);
        }
        for f in 0..n {
            for g in 0..n {
                let (mf, mg) = (&morphisms[f], &morphisms[g]);
                if mf.src != mg.tgt || table[f * n + g].is_some() {
                    continue;
                }
                if mf.is_identity {
                    table[f * n + g] = Some(Multiset::from([(g, 1)]));
                } else if mg.is_identity {
                    table[f * n + g] = Some(Multiset::from([(f, 1)]));
                } else {
                    problems.push(format!("missing product {} ∘ {}", mf.name, mg.name));
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }

        let mut ms = MultiSemigroup {
            objects,
            morphisms,
            table,
            star,
            cells: CellStructure::empty(),
        };
        ms.validate()?;
        ms.cells = ms.compute_cells();
        Ok(ms)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        let mut problems = Vec::new();
        for f in 0..n {
            for g in 0..n {
                let Some(res) = self.entry(f, g) else {
                    continue;
                };
                for &h in res.keys() {
                    let mh = &self.morphisms[h];
                    if mh.src != self.morphisms[g].src || mh.tgt != self.morphisms[f].tgt {
                        problems.push(format!(
                            "{} appears in {} ∘ {} with wrong source or target",
                            mh.name, self.morphisms[f].name, self.morphisms[g].name
                        ));
                    }
                }
            }
        }
        for (f, m) in self.morphisms.iter().enumerate() {
            let id_t = self.identity(m.tgt);
            let id_s = self.identity(m.src);
            let unit = Multiset::from([(f, 1)]);
            if self.entry(id_t, f) != Some(&unit) || self.entry(f, id_s) != Some(&unit) {
                problems.push(format!("identities are not neutral for {}", m.name));
            }
        }
        // star
        for (f, m) in self.morphisms.iter().enumerate() {
            let s = self.star[f];
            if self.star[s] != f {
                problems.push(format!("star is not an involution at {}", m.name));
            }
            let ms = &self.morphisms[s];
            if ms.src != m.tgt || ms.tgt != m.src {
                problems.push(format!(
                    "star does not swap source and target of {}",
                    m.name
                ));
            }
            if m.is_identity && s != f {
                problems.push(format!("star moves identity {}", m.name));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        for f in 0..n {
            for g in 0..n {
                let Some(res) = self.entry(f, g) else {
                    continue;
                };
                let starred: Multiset = res.iter().map(|(&h, &k)| (self.star[h], k)).collect();
                if self.entry(self.star[g], self.star[f]) != Some(&starred) {
                    problems.push(format!(
                        "star is not an anti-map on {} ∘ {}",
                        self.morphisms[f].name, self.morphisms[g].name
                    ));
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        // associativity over all composable triples
        for f in 0..n {
            for g in 0..n {
                let Some(fg) = self.entry(f, g) else { continue };
                for k in 0..n {
                    let Some(gk) = self.entry(g, k) else { continue };
                    let lhs = self.sum_products(fg, |h| self.entry(h, k))?;
                    let rhs = self.sum_products(gk, |h| self.entry(f, h))?;
                    if lhs != rhs {
                        problems.push(format!(
                            "associativity fails for ({}, {}, {})",
                            self.morphisms[f].name, self.morphisms[g].name, self.morphisms[k].name
                        ));
                    }
                }
            }
        }
        if !problems.is_empty() {
            return Err(Error::Invalid(problems));
        }
        Ok(())
    }

    fn sum_products<'a>(
        &'a self,
        weights: &Multiset,
        product: impl Fn(MorphismId) -> Option<&'a Multiset>,
    ) -> Result<Multiset> {
        let mut acc = Multiset::new();
        for (&h, &k) in weights {
            let Some(res) = product(h) else {
                return Err(Error::Internal("composability lost in sum".into()));
            };
            for (&x, &c) in res {
                let add = k
                    .checked_mul(c)
                    .ok_or_else(|| Error::Overflow(self.morphisms[h].name.clone()))?;
                let slot = acc.entry(x).or_insert(0);
                *slot = slot
                    .checked_add(add)
                    .ok_or_else(|| Error::Overflow(self.morphisms[h].name.clone()))?;
            }
        }
        Ok(acc)
    }

    fn compute_cells(&self) -> CellStructure {
        let n = self.len();
        let mut leq_l = vec![vec![false; n]; n];
        let mut leq_r = vec![vec![false; n]; n];
        for f in 0..n {
            for h in 0..n {
                if let Some(res) = self.entry(h, f) {
                    for &g in res.keys() {
                        leq_l[f][g] = true;
                    }
                }
                if let Some(res) = self.entry(f, h) {
                    for &g in res.keys() {
                        leq_r[f][g] = true;
                    }
                }
            }
        }
        let mut leq_j: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| leq_l[i][j] || leq_r[i][j]).collect())
            .collect();
        closure(&mut leq_l);
        closure(&mut leq_r);
        closure(&mut leq_j);
        let order = self.sorted_ids();
        let (left_cells, left_of) = classes(&leq_l, &order);
        let (right_cells, right_of) = classes(&leq_r, &order);
        let (two_sided_cells, two_sided_of) = classes(&leq_j, &order);
        CellStructure {
            leq_l,
            leq_r,
            leq_j,
            left_cells,
            right_cells,
            two_sided_cells,
            left_of,
            right_of,
            two_sided_of,
        }
    }

    /// Morphism indices sorted by name key.
    pub fn sorted_ids(&self) -> Vec<MorphismId> {
        let mut ids: Vec<MorphismId> = (0..self.len()).collect();
        ids.sort_by(|&a, &b| {
            name_key(&self.morphisms[a].name).cmp(&name_key(&self.morphisms[b].name))
        });
        ids
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn objects(&self) -> &[ObjectId] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[OneMorphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: MorphismId) -> &OneMorphism {
        &self.morphisms[f]
    }

    pub fn name(&self, f: MorphismId) -> &str {
        &self.morphisms[f].name
    }

    pub fn names(&self, fs: &[MorphismId]) -> Vec<String> {
        fs.iter().map(|&f| self.name(f).to_string()).collect()
    }

    pub fn id(&self, name: &str) -> Result<MorphismId> {
        self.morphisms
            .iter()
            .position(|m| m.name == name)
            .ok_or_else(|| Error::Argument(format!("unknown morphism `{name}`")))
    }

    pub fn ids(&self, names: &[&str]) -> Result<Vec<MorphismId>> {
        names.iter().map(|n| self.id(n)).collect()
    }

    pub fn identity(&self, object: usize) -> MorphismId {
        self.morphisms
            .iter()
            .position(|m| m.is_identity && m.src == object)
            .expect("validated: one identity per object")
    }

    pub fn star(&self, f: MorphismId) -> MorphismId {
        self.star[f]
    }

    fn entry(&self, f: MorphismId, g: MorphismId) -> Option<&Multiset> {
        self.table[f * self.len() + g].as_ref()
    }

    /// `table(F, G)`.
    pub fn compose(&self, f: MorphismId, g: MorphismId) -> Result<&Multiset> {
        self.entry(f, g).ok_or_else(|| Error::Composability {
            left: self.name(f).to_string(),
            right: self.name(g).to_string(),
        })
    }

    /// Multiplicity of `h` in `f ∘ g`.
    pub fn multiplicity(&self, f: MorphismId, g: MorphismId, h: MorphismId) -> Result<u64> {
        Ok(self.compose(f, g)?.get(&h).copied().unwrap_or(0))
    }

    /// Named rendering of a multiset, e.g. `2*s + st`.
    pub fn render_multiset(&self, ms: &Multiset) -> String {
        if ms.is_empty() {
            return "0".into();
        }
        let mut items: Vec<(MorphismId, u64)> = ms.iter().map(|(&h, &k)| (h, k)).collect();
        items.sort_by(|a, b| name_key(self.name(a.0)).cmp(&name_key(self.name(b.0))));
        items
            .iter()
            .map(|&(h, k)| {
                if k == 1 {
                    self.name(h).to_string()
                } else {
                    format!("{k}*{}", self.name(h))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn cells(&self) -> &CellStructure {
        &self.cells
    }

    /// `F ≤_L G`: G is a summand of some `H ∘ F` (closure).
    pub fn leq_left(&self, f: MorphismId, g: MorphismId) -> bool {
        self.cells.leq_left(f, g)
    }

    pub fn leq_right(&self, f: MorphismId, g: MorphismId) -> bool {
        self.cells.leq_right(f, g)
    }

    pub fn leq_two_sided(&self, f: MorphismId, g: MorphismId) -> bool {
        self.cells.leq_two_sided(f, g)
    }

    /// Index of the two-sided cell equal to `j` as a set.
    fn two_sided_index(&self, j: &[MorphismId]) -> Result<usize> {
        let want: BTreeSet<MorphismId> = j.iter().copied().collect();
        self.cells
            .two_sided_cells
            .iter()
            .position(|c| c.iter().copied().collect::<BTreeSet<_>>() == want)
            .ok_or_else(|| Error::Argument(format!("{:?} is not a two-sided cell", self.names(j))))
    }

    /// Indices of the left and right cells inside two-sided cell `idx`.
    fn sub_cells(&self, idx: usize) -> (Vec<usize>, Vec<usize>) {
        let c = &self.cells;
        let mut ls: Vec<usize> = Vec::new();
        let mut rs: Vec<usize> = Vec::new();
        for &f in &c.two_sided_cells[idx] {
            if !ls.contains(&c.left_of[f]) {
                ls.push(c.left_of[f]);
            }
            if !rs.contains(&c.right_of[f]) {
                rs.push(c.right_of[f]);
            }
        }
        (ls, rs)
    }

    pub fn left_cells_in(&self, j: &[MorphismId]) -> Result<Vec<Vec<MorphismId>>> {
        let (ls, _) = self.sub_cells(self.two_sided_index(j)?);
        Ok(ls
            .iter()
            .map(|&l| self.cells.left_cells[l].clone())
            .collect())
    }

    pub fn right_cells_in(&self, j: &[MorphismId]) -> Result<Vec<Vec<MorphismId>>> {
        let (_, rs) = self.sub_cells(self.two_sided_index(j)?);
        Ok(rs
            .iter()
            .map(|&r| self.cells.right_cells[r].clone())
            .collect())
    }

    pub fn is_regular(&self, j: &[MorphismId]) -> Result<bool> {
        let idx = self.two_sided_index(j)?;
        let (ls, rs) = self.sub_cells(idx);
        let c = &self.cells;
        let rep = |cells: &Vec<Vec<MorphismId>>, i: usize| cells[i][0];
        for &a in &ls {
            for &b in &ls {
                if a != b && c.leq_left(rep(&c.left_cells, a), rep(&c.left_cells, b)) {
                    return Ok(false);
                }
            }
        }
        for &a in &rs {
            for &b in &rs {
                if a != b && c.leq_right(rep(&c.right_cells, a), rep(&c.right_cells, b)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Rows: left cells of `j`; columns: right cells of `j`; entries `L ∩ R`.
    pub fn intersection_table(&self, j: &[MorphismId]) -> Result<Vec<Vec<Vec<MorphismId>>>> {
        let idx = self.two_sided_index(j)?;
        let (ls, rs) = self.sub_cells(idx);
        let c = &self.cells;
        Ok(ls
            .iter()
            .map(|&l| {
                rs.iter()
                    .map(|&r| {
                        c.left_cells[l]
                            .iter()
                            .copied()
                            .filter(|&f| c.right_of[f] == r)
                            .collect()
                    })
                    .collect()
            })
            .collect())
    }

    pub fn is_strongly_regular(&self, j: &[MorphismId]) -> Result<bool> {
        if !self.is_regular(j)? {
            return Ok(false);
        }
        Ok(self
            .intersection_table(j)?
            .iter()
            .all(|row| row.iter().all(|cell| cell.len() == 1)))
    }

    /// The unique element of `L ∩ L*` for a left cell in a strongly regular cell.
    pub fn duflo(&self, l: &[MorphismId]) -> Result<MorphismId> {
        let Some(&first) = l.first() else {
            return Err(Error::Argument("empty left cell".into()));
        };
        let li = self.cells.left_of[first];
        let want: BTreeSet<MorphismId> = l.iter().copied().collect();
        let actual: BTreeSet<MorphismId> = self.cells.left_cells[li].iter().copied().collect();
        if want != actual {
            return Err(Error::Argument(format!(
                "{:?} is not a left cell",
                self.names(l)
            )));
        }
        let j = self.cells.two_sided_cells[self.cells.two_sided_of[first]].clone();
        if !self.is_strongly_regular(&j)? {
            return Err(Error::Unsupported(format!(
                "Duflo involution of {:?}: two-sided cell is not strongly regular",
                self.names(l)
            )));
        }
        let starred: BTreeSet<MorphismId> = l.iter().map(|&f| self.star[f]).collect();
        let meet: Vec<MorphismId> = self.cells.left_cells[li]
            .iter()
            .copied()
            .filter(|f| starred.contains(f))
            .collect();
        match meet.as_slice() {
            [g] => Ok(*g),
            _ => Err(Error::DataInconsistency(format!(
                "L ∩ L* = {:?} for L = {:?}",
                self.names(&meet),
                self.names(l)
            ))),
        }
    }

    /// Multiplicity of the Duflo involution of F's own left cell in `F* ∘ F`.
    pub fn m_value(&self, f: MorphismId) -> Result<u64> {
        let l = self.cells.left_cells[self.cells.left_of[f]].clone();
        let g = self.duflo(&l)?;
        self.multiplicity(self.star[f], f, g)
    }

    pub fn m_constant_on_right_cells(&self, j: &[MorphismId]) -> Result<bool> {
        for r in self.right_cells_in(j)? {
            let mut values = BTreeSet::new();
            for &f in &r {
                values.insert(self.m_value(f)?);
            }
            if values.len() > 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when an identity appears in `F ∘ G` only if both are identities.
    pub fn identities_only_from_identities(&self) -> bool {
        let n = self.len();
        (0..n).all(|f| {
            (0..n).all(|g| match self.entry(f, g) {
                Some(res) if !(self.morphisms[f].is_identity && self.morphisms[g].is_identity) => {
                    res.keys().all(|&h| !self.morphisms[h].is_identity)
                }
                _ => true,
            })
        })
    }

    /// Same multisemigroup with morphism `i` renamed to `names[i]`.
    pub fn renamed(&self, names: &[String]) -> Result<Self> {
        if names.len() != self.len() {
            return Err(Error::Argument("renaming has the wrong length".into()));
        }
        let morphisms = self
            .morphisms
            .iter()
            .zip(names)
            .map(|(m, name)| OneMorphism {
                name: name.clone(),
                ..m.clone()
            })
            .collect();
        MultiSemigroup::new(
            self.objects.clone(),
            morphisms,
            self.products(),
            self.star.clone(),
        )
    }

    /// Every defined product, keyed by index pair.
    pub fn products(&self) -> BTreeMap<(MorphismId, MorphismId), Multiset> {
        let n = self.len();
        let mut out = BTreeMap::new();
        for f in 0..n {
            for g in 0..n {
                if let Some(res) = self.entry(f, g) {
                    out.insert((f, g), res.clone());
                }
            }
        }
        out
    }

    /// Parses the text format; see the crate README for the grammar.
    pub fn parse(input: &str) -> Result<Self> {
        let lines = text::lines(input);
        if lines.is_empty() {
            return Err(Error::parse(1, 1, "empty multisemigroup description"));
        }
        let mut objects: Vec<ObjectId> = Vec::new();
        let mut morphisms: Vec<OneMorphism> = Vec::new();
        let mut by_name: HashMap<String, MorphismId> = HashMap::new();
        let mut stars: Vec<(MorphismId, MorphismId)> = Vec::new();
        let mut products = BTreeMap::new();

        let object_index = |objects: &[ObjectId], line: &text::Line, tok: text::Token| {
            objects
                .iter()
                .position(|o| o == tok.text)
                .ok_or_else(|| line.error(tok.column, format!("unknown object `{}`", tok.text)))
        };
        let morphism_index =
            |by_name: &HashMap<String, MorphismId>, line: &text::Line, tok: text::Token| {
                by_name.get(tok.text).copied().ok_or_else(|| {
                    line.error(tok.column, format!("unknown morphism `{}`", tok.text))
                })
            };

        for line in &lines {
            let head = line.tokens[0];
            match head.text {
                "object" => {
                    let t = line.expect(1, "object name")?;
                    line.expect_end(2)?;
                    if objects.iter().any(|o| o == t.text) {
                        return Err(line.error(t.column, format!("duplicate object `{}`", t.text)));
                    }
                    objects.push(t.text.to_string());
                }
                "identity" | "morphism" => {
                    let t = line.expect(1, "morphism name")?;
                    line.expect_literal(2, ":")?;
                    let (src, tgt) = if head.text == "identity" {
                        let o = object_index(&objects, line, line.expect(3, "object")?)?;
                        line.expect_end(4)?;
                        (o, o)
                    } else {
                        let s = object_index(&objects, line, line.expect(3, "source object")?)?;
                        line.expect_literal(4, "->")?;
                        let g = object_index(&objects, line, line.expect(5, "target object")?)?;
                        line.expect_end(6)?;
                        (s, g)
                    };
                    if by_name.contains_key(t.text) {
                        return Err(
                            line.error(t.column, format!("duplicate morphism `{}`", t.text))
                        );
                    }
                    by_name.insert(t.text.to_string(), morphisms.len());
                    morphisms.push(OneMorphism {
                        name: t.text.to_string(),
                        src,
                        tgt,
                        is_identity: head.text == "identity",
                    });
                }
                "star" => {
                    let a = line.expect(1, "morphism")?;
                    let b = line.expect(2, "morphism")?;
                    line.expect_end(3)?;
                    let ai = morphism_index(&by_name, line, a)?;
                    let bi = morphism_index(&by_name, line, b)?;
                    stars.push((ai, bi));
                }
                _ => {
                    let f = morphism_index(&by_name, line, head)?;
                    let op = line.expect(1, "`∘`")?;
                    if op.text != "∘" && op.text != "o" {
                        return Err(
                            line.error(op.column, format!("expected `∘`, found `{}`", op.text))
                        );
                    }
                    let g = morphism_index(&by_name, line, line.expect(2, "morphism")?)?;
                    line.expect_literal(3, "=")?;
                    let (rhs, col) = line.rest(4).ok_or_else(|| {
                        line.error(line.raw.chars().count() + 1, "expected product")
                    })?;
                    let mut res = Multiset::new();
                    if rhs != "0" {
                        for (neg, term, tcol) in text::signed_terms(rhs, col) {
                            if neg {
                                return Err(line.error(tcol, "negative multiplicity"));
                            }
                            let (k, name) = match term.split_once('*') {
                                Some((k, name)) => {
                                    let k: u64 = k.trim().parse().map_err(|_| {
                                        line.error(tcol, format!("bad multiplicity `{}`", k.trim()))
                                    })?;
                                    (k, name.trim())
                                }
                                None => (1, term.trim()),
                            };
                            let h = by_name.get(name).copied().ok_or_else(|| {
                                line.error(tcol, format!("unknown morphism `{name}`"))
                            })?;
                            let slot = res.entry(h).or_insert(0);
                            *slot = slot
                                .checked_add(k)
                                .ok_or_else(|| line.error(tcol, "multiplicity overflow"))?;
                        }
                    }
                    if products.insert((f, g), res).is_some() {
                        return Err(line.error(head.column, "duplicate product line"));
                    }
                }
            }
        }
        let mut star: Vec<MorphismId> = (0..morphisms.len()).collect();
        for (a, b) in stars {
            star[a] = b;
            star[b] = a;
        }
        MultiSemigroup::new(objects, morphisms, products, star)
    }

    /// Serializes to the text format accepted by [`MultiSemigroup::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for o in &self.objects {
            let _ = writeln!(out, "object {o}");
        }
        let ids = self.sorted_ids();
        for &f in &ids {
            let m = &self.morphisms[f];
            if m.is_identity {
                let _ = writeln!(out, "identity {} : {}", m.name, self.objects[m.src]);
            }
        }
        for &f in &ids {
            let m = &self.morphisms[f];
            if !m.is_identity {
                let _ = writeln!(
                    out,
                    "morphism {} : {} -> {}",
                    m.name, self.objects[m.src], self.objects[m.tgt]
                );
            }
        }
        for &f in &ids {
            let s = self.star[f];
            if s != f && name_key(self.name(f)) < name_key(self.name(s)) {
                let _ = writeln!(out, "star {} {}", self.name(f), self.name(s));
            }
        }
        for &f in &ids {
            for &g in &ids {
                if self.morphisms[f].is_identity || self.morphisms[g].is_identity {
                    continue;
                }
                if let Some(res) = self.entry(f, g) {
                    let _ = writeln!(
                        out,
                        "{} ∘ {} = {}",
                        self.name(f),
                        self.name(g),
                        self.render_multiset(res)
                    );
                }
            }
        }
        out
    }
}

impl CellStructure {
    fn empty() -> Self {
        CellStructure {
            leq_l: Vec::new(),
            leq_r: Vec::new(),
            leq_j: Vec::new(),
            left_cells: Vec::new(),
            right_cells: Vec::new(),
            two_sided_cells: Vec::new(),
            left_of: Vec::new(),
            right_of: Vec::new(),
            two_sided_of: Vec::new(),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// One object, identity plus `F_ab` (a, b ∈ {1, 2}) with
    /// `F_ab ∘ F_cd = f(ab) g(bc) f(cd) / f(ad) · F_ad`, f22 = 2, g11 = 2.
    /// Strongly regular, but m(F11) = 2 while m(F12) = 1.
    pub(crate) fn skewed_m() -> MultiSemigroup {
        let f = |a: usize, b: usize| if (a, b) == (2, 2) { 2u64 } else { 1 };
        let g = |a: usize, b: usize| if (a, b) == (1, 1) { 2u64 } else { 1 };
        let mut morphisms = vec![OneMorphism {
            name: "1".into(),
            src: 0,
            tgt: 0,
            is_identity: true,
        }];
        let idx = |a: usize, b: usize| 1 + 2 * (a - 1) + (b - 1);
        for a in 1..=2 {
            for b in 1..=2 {
                morphisms.push(OneMorphism {
                    name: format!("F{a}{b}"),
                    src: 0,
                    tgt: 0,
                    is_identity: false,
                });
            }
        }
        let mut products = BTreeMap::new();
        for a in 1..=2 {
            for b in 1..=2 {
                for c in 1..=2 {
                    for d in 1..=2 {
                        let k = f(a, b) * g(b, c) * f(c, d) / f(a, d);
                        products.insert((idx(a, b), idx(c, d)), Multiset::from([(idx(a, d), k)]));
                    }
                }
            }
        }
        let star = vec![0, idx(1, 1), idx(2, 1), idx(1, 2), idx(2, 2)];
        MultiSemigroup::new(vec!["i".into()], morphisms, products, star).unwrap()
    }

    const TWO_OBJECTS: &str = "\
object a
object b
identity 1a : a
identity 1b : b
morphism F : a -> b
morphism G : b -> a
star F G
F ∘ G = 2*1b
G ∘ F = 2*1a
";

    #[test]
    fn skewed_m_breaks_constancy() {
        let ms = skewed_m();
        let j = ms.ids(&["F11", "F12", "F21", "F22"]).unwrap();
        assert!(ms.is_strongly_regular(&j).unwrap());
        assert_eq!(ms.m_value(ms.id("F11").unwrap()).unwrap(), 2);
        assert_eq!(ms.m_value(ms.id("F12").unwrap()).unwrap(), 1);
        assert!(!ms.m_constant_on_right_cells(&j).unwrap());
    }

    #[test]
    fn identity_products_are_filled() {
        let ms = skewed_m();
        let one = ms.id("1").unwrap();
        let f = ms.id("F12").unwrap();
        assert_eq!(ms.compose(one, f).unwrap(), &Multiset::from([(f, 1)]));
        assert_eq!(ms.m_value(one).unwrap(), 1);
        assert_eq!(ms.duflo(&[one]).unwrap(), one);
    }

    #[test]
    fn parse_and_roundtrip() {
        let ms = MultiSemigroup::parse(TWO_OBJECTS).unwrap();
        assert_eq!(ms.len(), 4);
        let back = MultiSemigroup::parse(&ms.to_text()).unwrap();
        assert_eq!(back, ms);
        // an identity as a summand of a non-identity product
        assert!(!ms.identities_only_from_identities());
        assert!(skewed_m().identities_only_from_identities());
    }

    #[test]
    fn non_composable_pair_is_an_error() {
        let ms = MultiSemigroup::parse(TWO_OBJECTS).unwrap();
        let f = ms.id("F").unwrap();
        assert!(matches!(ms.compose(f, f), Err(Error::Composability { .. })));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = MultiSemigroup::parse("object a\nidentity 1 : b\n").unwrap_err();
        assert_eq!(err, Error::parse(2, 14, "unknown object `b`"));
        let err = MultiSemigroup::parse("object a\nidentity 1 : a\n1 ∘ 1 = 2*x\n").unwrap_err();
        assert!(matches!(
            err,
            Error::Parse {
                line: 3,
                column: 9,
                ..
            }
        ));
        assert!(matches!(
            MultiSemigroup::parse("  # nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn broken_associativity_is_reported() {
        // (F∘G)∘G = F but F∘(G∘G) = 2F
        let text = "\
object a
identity 1 : a
morphism F : a -> a
morphism G : a -> a
F ∘ F = F
F ∘ G = F
G ∘ F = F
G ∘ G = 2*F
";
        let err = MultiSemigroup::parse(text).unwrap_err();
        match err {
            Error::Invalid(v) => assert!(v.iter().any(|m| m.contains("associativity"))),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn missing_product_is_invalid() {
        let text = "object a\nidentity 1 : a\nmorphism F : a -> a\n";
        assert!(matches!(
            MultiSemigroup::parse(text),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn overflow_is_an_error() {
        let text = format!(
            "object a\nidentity 1 : a\nmorphism F : a -> a\nF ∘ F = {}*F\n",
            u64::MAX
        );
        assert!(matches!(
            MultiSemigroup::parse(&text),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn identities_only() {
        let text = "object a\nobject b\nidentity 1a : a\nidentity 1b : b\n";
        let ms = MultiSemigroup::parse(text).unwrap();
        let c = ms.cells();
        assert_eq!(c.left_cells.len(), 2);
        assert_eq!(c.right_cells.len(), 2);
        assert_eq!(c.two_sided_cells.len(), 2);
        for cell in &c.two_sided_cells {
            assert!(ms.is_strongly_regular(cell).unwrap());
        }
    }
}

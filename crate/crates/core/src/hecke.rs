//! Kazhdan–Lusztig combinatorics for small Coxeter groups.
//!
//! Groups are realized as permutation groups: type `A_n` acts on `n + 1`
//! points and `B_2` acts on the corners of a square. Elements are indexed
//! in ShortLex order of their reduced words, so index 0 is the identity and
//! lengths are non-decreasing along the index.
//!
//! Hecke algebra normalization: `H_s² = 1 + (v⁻¹ − v) H_s`, `C_s = H_s + v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::mscell::{name_key, MultiSemigroup, Multiset, OneMorphism};

pub const DEFAULT_SIZE_BOUND: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    /// `A_n` with `n ≥ 1`, i.e. the symmetric group on `n + 1` letters.
    A(usize),
    B2,
}

impl CoxeterType {
    pub fn order(self) -> usize {
        match self {
            CoxeterType::A(n) => (1..=n + 1).product(),
            CoxeterType::B2 => 8,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B2 => f.write_str("B2"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("b2") {
            return Ok(CoxeterType::B2);
        }
        if let Some(rest) = t.strip_prefix(['A', 'a']) {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 1 {
                    return Ok(CoxeterType::A(n));
                }
            }
        }
        Err(Error::Argument(format!(
            "unknown Coxeter type `{s}` (expected A1, A2, A3 or B2)"
        )))
    }
}

#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    kind: CoxeterType,
    gen_names: Vec<String>,
    perms: Vec<Vec<usize>>,
    words: Vec<Vec<usize>>,
    names: Vec<String>,
    /// `mul[x][y] = x·y`
    mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    /// element index of each generator
    gens: Vec<usize>,
}

fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

impl CoxeterGroup {
    pub fn new(kind: CoxeterType) -> Result<Self> {
        Self::with_bound(kind, DEFAULT_SIZE_BOUND)
    }

    pub fn with_bound(kind: CoxeterType, bound: usize) -> Result<Self> {
        if kind.order() > bound {
            return Err(Error::Size(format!(
                "{kind} has {} elements, bound is {bound}",
                kind.order()
            )));
        }
        let (gen_names, gen_perms): (Vec<String>, Vec<Vec<usize>>) = match kind {
            CoxeterType::A(n) => (1..=n)
                .map(|i| {
                    let mut p: Vec<usize> = (0..=n).collect();
                    p.swap(i - 1, i);
                    (format!("s{i}"), p)
                })
                .unzip(),
            // symmetries of a square with corners 0,1,2,3 in cyclic order: s is the
            // diagonal reflection fixing 0 and 2, t swaps 0↔1 and 2↔3
            CoxeterType::B2 => (
                vec!["s".into(), "t".into()],
                vec![vec![0, 3, 2, 1], vec![1, 0, 3, 2]],
            ),
        };
        let degree = gen_perms[0].len();
        let identity: Vec<usize> = (0..degree).collect();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity.clone(), 0)]);
        let mut perms = vec![identity];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for (s, gp) in gen_perms.iter().enumerate() {
                let p = compose_perm(&perms[w], gp);
                if !index.contains_key(&p) {
                    let mut word = words[w].clone();
                    word.push(s);
                    index.insert(p.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(p);
                    words.push(word);
                }
            }
        }
        debug_assert_eq!(perms.len(), kind.order());
        let names: Vec<String> = words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter().map(|&s| gen_names[s].as_str()).collect()
                }
            })
            .collect();
        let n = perms.len();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| index[&compose_perm(&perms[x], &perms[y])])
                    .collect()
            })
            .collect();
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| mul[x][y] == 0).unwrap())
            .collect();
        let gens = gen_perms.iter().map(|p| index[p]).collect();
        Ok(CoxeterGroup {
            kind,
            gen_names,
            perms,
            words,
            names,
            mul,
            inverse,
            gens,
        })
    }

    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generator(&self, s: usize) -> usize {
        self.gens[s]
    }

    pub fn generator_name(&self, s: usize) -> &str {
        &self.gen_names[s]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Argument(format!("no element `{name}` in {}", self.kind)))
    }

    /// ShortLex-minimal reduced word, as generator indices.
    pub fn word(&self, x: usize) -> &[usize] {
        &self.words[x]
    }

    pub fn length(&self, x: usize) -> usize {
        self.words[x].len()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn longest(&self) -> usize {
        self.len() - 1
    }

    pub fn permutation(&self, x: usize) -> &[usize] {
        &self.perms[x]
    }

    /// One-line notation `[w(1), …, w(n)]` for type A.
    pub fn one_line(&self, x: usize) -> Option<Vec<usize>> {
        matches!(self.kind, CoxeterType::A(_))
            .then(|| self.perms[x].iter().map(|&i| i + 1).collect())
    }

    /// Bruhat order through the subword property of the normal form of `y`.
    pub fn bruhat_leq(&self, x: usize, y: usize) -> bool {
        self.bruhat_interval(y).contains(&x)
    }

    /// All products of subwords of a reduced word of `y`.
    pub fn bruhat_interval(&self, y: usize) -> BTreeSet<usize> {
        let mut reach = BTreeSet::from([0usize]);
        for &s in &self.words[y] {
            let g = self.gens[s];
            let next: Vec<usize> = reach.iter().map(|&u| self.mul[u][g]).collect();
            reach.extend(next);
        }
        reach
    }
}

/// `Σ coeffs[w] · H_w` over a fixed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub coeffs: Vec<LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            coeffs: vec![LaurentPoly::zero(); n],
        }
    }

    pub fn basis(n: usize, w: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[w] = LaurentPoly::one();
        e
    }

    pub fn coeff(&self, w: usize) -> &LaurentPoly {
        &self.coeffs[w]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&w| !self.coeffs[w].is_zero())
            .collect()
    }

    fn add_scaled(&mut self, c: &LaurentPoly, other: &HeckeElement) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }
}

fn v_inv_minus_v() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, 1), (1, -1)])
}

/// Hecke algebra arithmetic together with the KL basis of a group.
#[derive(Clone, Debug)]
pub struct KlData {
    group: CoxeterGroup,
    basis: Vec<HeckeElement>,
}

impl CoxeterGroup {
    /// `H_s · h`
    pub fn left_mul_gen(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let g = self.gens[s];
        let mut out = HeckeElement::zero(self.len());
        for (w, c) in h.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sw = self.mul[g][w];
            out.coeffs[sw] += c;
            if self.length(sw) < self.length(w) {
                out.coeffs[w] += &(c * &v_inv_minus_v());
            }
        }
        out
    }

    /// `h · H_s`
    pub fn right_mul_gen(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let g = self.gens[s];
        let mut out = HeckeElement::zero(self.len());
        for (w, c) in h.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ws = self.mul[w][g];
            out.coeffs[ws] += c;
            if self.length(ws) < self.length(w) {
                out.coeffs[w] += &(c * &v_inv_minus_v());
            }
        }
        out
    }

    /// Product in the Hecke algebra.
    pub fn hecke_mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(self.len());
        for (u, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut hb = b.clone();
            for &s in self.words[u].iter().rev() {
                hb = self.left_mul_gen(s, &hb);
            }
            out.add_scaled(c, &hb);
        }
        out
    }

    /// Bar involution: `v ↦ v⁻¹`, `H_w ↦ (H_{w⁻¹})⁻¹`.
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let n = self.len();
        // bar(H_w) = bar(H_s1) ··· bar(H_sk) with bar(H_s) = H_s + (v − v⁻¹)
        let mut bars: Vec<HeckeElement> = Vec::with_capacity(n);
        bars.push(HeckeElement::basis(n, 0));
        for w in 1..n {
            let word = &self.words[w];
            let (&last, prefix) = word.split_last().unwrap();
            let prev = self.index_of_word(prefix);
            let b = &bars[prev];
            let mut next = self.right_mul_gen(b, last);
            next.add_scaled(&(-&v_inv_minus_v()), b);
            bars.push(next);
        }
        let mut out = HeckeElement::zero(n);
        for (w, c) in h.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&c.bar(), &bars[w]);
            }
        }
        out
    }

    fn index_of_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &s| self.mul[acc][self.gens[s]])
    }
}

/// Part of `p` in degrees `≤ 0`, symmetrized to a bar-invariant polynomial.
fn nonpositive_bar_invariant_part(p: &LaurentPoly) -> LaurentPoly {
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        if e == 0 {
            terms.push((0, c));
        } else if e < 0 {
            terms.push((e, c));
            terms.push((-e, c));
        }
    }
    LaurentPoly::from_terms(terms)
}

impl KlData {
    /// Computes the KL basis `{C_w}` by the standard recursion.
    pub fn new(group: CoxeterGroup) -> Self {
        let n = group.len();
        let mut basis: Vec<HeckeElement> = Vec::with_capacity(n);
        basis.push(HeckeElement::basis(n, 0));
        for x in 1..n {
            let s = group.words[x][0];
            let sx = group.mul[group.gens[s]][x];
            let cs_prev = {
                let mut t = group.left_mul_gen(s, &basis[sx]);
                t.add_scaled(&LaurentPoly::monomial(1, 1), &basis[sx]);
                t
            };
            let mut c = cs_prev;
            for y in (0..x).rev() {
                let b = nonpositive_bar_invariant_part(&c.coeffs[y]);
                if !b.is_zero() {
                    c.add_scaled(&(-&b), &basis[y]);
                }
            }
            basis.push(c);
        }
        KlData { group, basis }
    }

    pub fn for_type(kind: CoxeterType) -> Result<Self> {
        Ok(Self::new(CoxeterGroup::new(kind)?))
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    /// `C_w`
    pub fn basis(&self) -> &[HeckeElement] {
        &self.basis
    }

    /// Coefficients of `h` in the KL basis.
    pub fn expand(&self, h: &HeckeElement) -> Result<Vec<LaurentPoly>> {
        let n = self.group.len();
        let mut rest = h.clone();
        let mut out = vec![LaurentPoly::zero(); n];
        for y in (0..n).rev() {
            let c = rest.coeffs[y].clone();
            if !c.is_zero() {
                rest.add_scaled(&(-&c), &self.basis[y]);
                out[y] = c;
            }
        }
        if rest.support().is_empty() {
            Ok(out)
        } else {
            Err(Error::Internal("KL expansion left a remainder".into()))
        }
    }

    /// `C_x · C_y` in the KL basis, specialized at `v = 1`.
    pub fn product_at_one(&self, x: usize, y: usize) -> Result<BTreeMap<usize, u64>> {
        let prod = self.group.hecke_mul(&self.basis[x], &self.basis[y]);
        let coeffs = self.expand(&prod)?;
        let mut out = BTreeMap::new();
        for (z, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_bar_invariant() || !c.has_nonnegative_coeffs() {
                return Err(Error::DataInconsistency(format!(
                    "structure constant of C_{} in C_{}·C_{} is {}",
                    self.group.name(z),
                    self.group.name(x),
                    self.group.name(y),
                    c.render("v")
                )));
            }
            out.insert(z, c.eval_at_one() as u64);
        }
        Ok(out)
    }

    /// Single-object multisemigroup on `θ_w`, using left cells in the sense
    /// opposite to KL: `θ_x ∘ θ_y` is read off from `C_y · C_x`.
    pub fn export_multisemigroup(&self) -> Result<MultiSemigroup> {
        let g = &self.group;
        let n = g.len();
        let morphisms = (0..n)
            .map(|w| OneMorphism {
                name: g.name(w).to_string(),
                src: 0,
                tgt: 0,
                is_identity: w == 0,
            })
            .collect();
        let mut products = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                let res: Multiset = self.product_at_one(y, x)?;
                products.insert((x, y), res);
            }
        }
        let star = (0..n).map(|w| g.inverse(w)).collect();
        MultiSemigroup::new(vec!["i".into()], morphisms, products, star)
    }
}

/// Convenience: `export_multisemigroup` for a named type.
pub fn export_multisemigroup(kind: CoxeterType) -> Result<MultiSemigroup> {
    KlData::for_type(kind)?.export_multisemigroup()
}

pub type Tableau = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl TableauPair {
    pub fn shape(&self) -> Vec<usize> {
        self.p.iter().map(Vec::len).collect()
    }
}

/// Robinson–Schensted row insertion of a permutation of `1..=n`.
pub fn rsk(perm: &[usize]) -> Result<TableauPair> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &x in perm {
        if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::Argument(format!(
                "{perm:?} is not a permutation of 1..{n}"
            )));
        }
    }
    let mut p: Tableau = Vec::new();
    let mut q: Tableau = Vec::new();
    for (step, &x) in perm.iter().enumerate() {
        let mut carry = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > carry) {
                Some(i) => {
                    carry = std::mem::replace(&mut p[row][i], carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    Ok(TableauPair { p, q })
}

/// Inverse of [`rsk`].
pub fn rsk_inverse(pair: &TableauPair) -> Result<Vec<usize>> {
    if pair.shape() != pair.q.iter().map(Vec::len).collect::<Vec<_>>() {
        return Err(Error::Argument("P and Q have different shapes".into()));
    }
    let mut p = pair.p.clone();
    let mut q = pair.q.clone();
    let n: usize = pair.shape().iter().sum();
    let mut out = vec![0; n];
    for step in (1..=n).rev() {
        let row = q
            .iter()
            .position(|r| r.last() == Some(&step))
            .ok_or_else(|| Error::Argument("Q is not standard".into()))?;
        q[row].pop();
        let mut carry = p[row].pop().unwrap();
        if p[row].is_empty() {
            p.remove(row);
            q.remove(row);
        }
        for r in (0..row).rev() {
            let i = p[r]
                .iter()
                .rposition(|&y| y < carry)
                .ok_or_else(|| Error::Argument("P is not standard".into()))?;
            carry = std::mem::replace(&mut p[r][i], carry);
        }
        out[step - 1] = carry;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RskSymbol {
    P,
    Q,
}

/// Which RS symbol is constant on the left cells of the exported
/// multisemigroup (left cells being KL right cells).
pub const LEFT_CELL_SYMBOL: RskSymbol = RskSymbol::P;

/// Cells of `S_n` as partitions of element names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCells {
    pub left: Vec<Vec<String>>,
    pub right: Vec<Vec<String>>,
    pub two_sided: Vec<Vec<String>>,
}

fn canonical_partition(mut blocks: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for b in blocks.iter_mut() {
        b.sort_by(|x, y| name_key(x).cmp(&name_key(y)));
    }
    blocks.sort_by(|x, y| name_key(&x[0]).cmp(&name_key(&y[0])));
    blocks
}

impl NamedCells {
    pub fn of(ms: &MultiSemigroup) -> Self {
        let c = ms.cells();
        let named = |blocks: &Vec<Vec<usize>>| {
            canonical_partition(blocks.iter().map(|b| ms.names(b)).collect())
        };
        NamedCells {
            left: named(&c.left_cells),
            right: named(&c.right_cells),
            two_sided: named(&c.two_sided_cells),
        }
    }
}

/// Cells of `S_n` from the Robinson–Schensted correspondence.
pub fn rsk_cells(n: usize) -> Result<NamedCells> {
    if !(2..=5).contains(&n) {
        return Err(Error::Argument(format!(
            "rsk_cells needs 2 ≤ n ≤ 5, got {n}"
        )));
    }
    let g = CoxeterGroup::with_bound(CoxeterType::A(n - 1), 120)?;
    let mut by_p: BTreeMap<Tableau, Vec<String>> = BTreeMap::new();
    let mut by_q: BTreeMap<Tableau, Vec<String>> = BTreeMap::new();
    let mut by_shape: BTreeMap<Vec<usize>, Vec<String>> = BTreeMap::new();
    for w in 0..g.len() {
        let pair = rsk(&g.one_line(w).unwrap())?;
        let name = g.name(w).to_string();
        by_shape.entry(pair.shape()).or_default().push(name.clone());
        by_p.entry(pair.p).or_default().push(name.clone());
        by_q.entry(pair.q).or_default().push(name);
    }
    let (left, right) = match LEFT_CELL_SYMBOL {
        RskSymbol::P => (by_p, by_q),
        RskSymbol::Q => (by_q, by_p),
    };
    Ok(NamedCells {
        left: canonical_partition(left.into_values().collect()),
        right: canonical_partition(right.into_values().collect()),
        two_sided: canonical_partition(by_shape.into_values().collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::monomial(1, e)
    }

    #[test]
    fn group_orders_and_names() {
        let b2 = CoxeterGroup::new(CoxeterType::B2).unwrap();
        let names: Vec<&str> = (0..8).map(|x| b2.name(x)).collect();
        assert_eq!(names, ["e", "s", "t", "st", "ts", "sts", "tst", "stst"]);
        assert_eq!(
            b2.inverse(b2.index_of("st").unwrap()),
            b2.index_of("ts").unwrap()
        );
        let a3 = CoxeterGroup::new(CoxeterType::A(3)).unwrap();
        assert_eq!(a3.len(), 24);
        assert_eq!(a3.length(a3.longest()), 6);
        assert!(matches!(
            CoxeterGroup::new(CoxeterType::A(4)),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn bruhat_subword() {
        let g = CoxeterGroup::new(CoxeterType::A(2)).unwrap();
        let i = |n: &str| g.index_of(n).unwrap();
        assert!(g.bruhat_leq(i("s1"), i("s2s1")));
        assert!(!g.bruhat_leq(i("s1s2"), i("s2s1")));
        assert_eq!(g.bruhat_interval(g.longest()).len(), 6);
    }

    #[test]
    fn kl_a1_base_case() {
        let kl = KlData::for_type(CoxeterType::A(1)).unwrap();
        let cs = &kl.basis()[1];
        assert_eq!(cs.coeffs, vec![v(1), LaurentPoly::one()]);
        assert_eq!(kl.product_at_one(1, 1).unwrap(), BTreeMap::from([(1, 2)]));
    }

    #[test]
    fn longest_element_is_sum_over_group() {
        for kind in [CoxeterType::A(2), CoxeterType::B2, CoxeterType::A(3)] {
            let kl = KlData::for_type(kind).unwrap();
            let g = kl.group();
            let w0 = g.longest();
            for x in 0..g.len() {
                assert_eq!(
                    kl.basis()[w0].coeffs[x],
                    v((g.length(w0) - g.length(x)) as i32)
                );
            }
        }
    }

    #[test]
    fn basis_is_bar_invariant() {
        for kind in [CoxeterType::B2, CoxeterType::A(3)] {
            let kl = KlData::for_type(kind).unwrap();
            for c in kl.basis() {
                assert_eq!(&kl.group().bar(c), c);
            }
        }
    }

    #[test]
    fn a3_has_nontrivial_kl_polynomial() {
        // P_{s2, s2s1s3s2} = 1 + q, so h = v^{ℓ(w)−ℓ(y)} P(v⁻²) = v + v³
        let kl = KlData::for_type(CoxeterType::A(3)).unwrap();
        let g = kl.group();
        let w = g.index_of("s2s1s3s2").unwrap();
        let y = g.index_of("s2").unwrap();
        assert_eq!(
            kl.basis()[w].coeffs[y],
            LaurentPoly::from_terms([(1, 1), (3, 1)])
        );
    }

    #[test]
    fn hecke_quadratic_relation() {
        let g = CoxeterGroup::new(CoxeterType::B2).unwrap();
        let hs = HeckeElement::basis(8, 1);
        let sq = g.hecke_mul(&hs, &hs);
        let mut expect = HeckeElement::basis(8, 0);
        expect.coeffs[1] = v_inv_minus_v();
        assert_eq!(sq, expect);
    }

    #[test]
    fn b2_longest_constant_term() {
        let kl = KlData::for_type(CoxeterType::B2).unwrap();
        assert_eq!(kl.basis()[7].coeffs[0], v(4));
    }

    #[test]
    fn rsk_small_cases() {
        let id = rsk(&[1, 2, 3]).unwrap();
        assert_eq!(id.p, vec![vec![1, 2, 3]]);
        assert_eq!(id.q, id.p);
        let w0 = rsk(&[3, 2, 1]).unwrap();
        assert_eq!(w0.p, vec![vec![1], vec![2], vec![3]]);
        assert_eq!(w0.q, w0.p);
        assert_eq!(rsk(&[2, 1, 3]).unwrap().shape(), vec![2, 1]);
        assert!(rsk(&[1, 1, 3]).is_err());
    }

    #[test]
    fn rsk_roundtrip_s4() {
        let g = CoxeterGroup::new(CoxeterType::A(3)).unwrap();
        for w in 0..g.len() {
            let perm = g.one_line(w).unwrap();
            assert_eq!(rsk_inverse(&rsk(&perm).unwrap()).unwrap(), perm);
        }
    }

    #[test]
    fn frozen_side_matches_export() {
        let ms = export_multisemigroup(CoxeterType::A(2)).unwrap();
        assert_eq!(NamedCells::of(&ms), rsk_cells(3).unwrap());
    }

    proptest! {
        #[test]
        fn rsk_inverse_roundtrip(perm in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let pair = rsk(&perm).unwrap();
            prop_assert_eq!(rsk_inverse(&pair).unwrap(), perm);
        }
    }
}

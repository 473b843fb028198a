//! The ring `B_C(G)`: integer combinations of subcharacter classes.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Embedding, Subgroup};
use crate::subchar::{SubcharTable, Subcharacter};

/// A sparse integer vector over the classes of one [`SubcharTable`].
#[derive(Clone)]
pub struct BurnsideElement {
    table: Arc<SubcharTable>,
    coeffs: BTreeMap<usize, i64>,
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        self.table.same_as(&other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for BurnsideElement {}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&c, &a)) in self.coeffs.iter().enumerate() {
            let s = self.table.class_rep(c);
            let sign = if a < 0 { "-" } else if k > 0 { "+" } else { "" };
            let sep = if k > 0 { " " } else { "" };
            let sp = if k > 0 { " " } else { "" };
            write!(
                f,
                "{sep}{sign}{sp}{}[{:?}, {:?}]",
                if a.abs() == 1 { String::new() } else { a.abs().to_string() },
                s.subgroup().members(),
                s.values_on_members()
            )?;
        }
        Ok(())
    }
}

impl BurnsideElement {
    pub fn zero(table: &Arc<SubcharTable>) -> Self {
        Self {
            table: Arc::clone(table),
            coeffs: BTreeMap::new(),
        }
    }

    /// `[G, 1]`, the class of `C` with trivial G-action.
    pub fn one(table: &Arc<SubcharTable>) -> Self {
        Self::basis_class(table, table.top_class())
    }

    pub fn basis_class(table: &Arc<SubcharTable>, class: usize) -> Self {
        assert!(class < table.class_count(), "class index out of range");
        Self {
            table: Arc::clone(table),
            coeffs: BTreeMap::from([(class, 1)]),
        }
    }

    /// `[U, mu]`; conjugate subcharacters give equal elements.
    pub fn basis(table: &Arc<SubcharTable>, s: &Subcharacter) -> Result<Self> {
        Ok(Self::basis_class(table, table.class_of(s)?))
    }

    pub fn from_terms(table: &Arc<SubcharTable>, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut out = Self::zero(table);
        for (c, a) in terms {
            assert!(c < table.class_count(), "class index out of range");
            out.add_term(c, a);
        }
        out
    }

    fn add_term(&mut self, c: usize, a: i64) {
        if a == 0 {
            return;
        }
        let e = self.coeffs.entry(c).or_insert(0);
        *e += a;
        if *e == 0 {
            self.coeffs.remove(&c);
        }
    }

    pub fn table(&self) -> &Arc<SubcharTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, class: usize) -> i64 {
        self.coeffs.get(&class).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficient vector in class order.
    pub fn to_dense(&self) -> Vec<i64> {
        (0..self.table.class_count()).map(|c| self.coeff(c)).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.table.same_as(&other.table) {
            Ok(())
        } else {
            Err(Error::ForeignTable)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&c, &a) in &other.coeffs {
            out.add_term(c, a);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(&self.table);
        for (&c, &a) in &self.coeffs {
            out.add_term(c, a * k);
        }
        out
    }

    /// Product by the double coset formula
    /// `[U,mu][V,nu] = sum over UgV of [U & gVg^-1, mu * g(nu)]`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let k = self.table.class_count();
        let products = structure_constants(&self.table);
        let mut out = Self::zero(&self.table);
        for (&i, &a) in &self.coeffs {
            for (&j, &b) in &other.coeffs {
                for &(c, m) in &products[i * k + j] {
                    out.add_term(c, a * b * m);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.table);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Marks at every class, in class order.
    pub fn mark_vector(&self) -> Vec<i64> {
        let m = mark_matrix(&self.table);
        (0..self.table.class_count())
            .map(|i| self.coeffs.iter().map(|(&j, &a)| m[i][j] * a).sum())
            .collect()
    }

    /// The mark at any subcharacter (conjugates have equal marks).
    pub fn mark(&self, s: &Subcharacter) -> Result<i64> {
        let c = self.table.class_of(s)?;
        let m = mark_matrix(&self.table);
        Ok(self.coeffs.iter().map(|(&j, &a)| m[c][j] * a).sum())
    }

    /// Inverts the mark map; `None` when the vector is not the mark vector of an element.
    pub fn from_marks(table: &Arc<SubcharTable>, marks: &[i64]) -> Option<Self> {
        let k = table.class_count();
        if marks.len() != k {
            return None;
        }
        let m = mark_matrix(table);
        let mut c = vec![0i64; k];
        for i in (0..k).rev() {
            let rest: i64 = (i + 1..k).map(|j| m[i][j] * c[j]).sum();
            let r = marks[i] - rest;
            if r % m[i][i] != 0 {
                return None;
            }
            c[i] = r / m[i][i];
        }
        Some(Self::from_terms(table, c.into_iter().enumerate()))
    }

    /// The inverse of a unit, found among its powers; `None` for non-units.
    ///
    /// Units have finite order: their marks at each subgroup form a unit of
    /// finite order in an integral group ring of a finite abelian group.
    pub fn unit_inverse(&self) -> Option<Self> {
        let one = Self::one(&self.table);
        let mut power = self.clone();
        let mut prev = one.clone();
        // the order of a unit divides 2 * |G| * n^k, far below this limit at desk scale
        for _ in 0..4096 {
            if power == one {
                return Some(prev);
            }
            if power.coeffs.values().any(|c| c.abs() > 1 << 40) {
                return None;
            }
            prev = power.clone();
            power = &power * self;
        }
        None
    }

    /// Pushes an element of `B_C(H)` to `B_C(G)` along `H <= G`.
    pub fn induce(&self, emb: &Embedding, big: &Arc<SubcharTable>) -> Result<Self> {
        if !self.table.group().same_table(emb.sub()) || !big.group().same_table(emb.parent()) {
            return Err(Error::GroupMismatch);
        }
        if self.table.n() != big.n() {
            return Err(Error::CoefficientMismatch);
        }
        let mut out = Self::zero(big);
        for (&c, &a) in &self.coeffs {
            let s = self.table.class_rep(c);
            let u = emb.up_subgroup(s.subgroup());
            let mut values = vec![0u32; emb.parent().order()];
            for &h in s.subgroup().members() {
                values[emb.up(h)] = s.value(h);
            }
            let lifted = Subcharacter::from_dense(u, values);
            out.add_term(big.class_of(&lifted)?, a);
        }
        Ok(out)
    }
}

/// Basis products, indexed by `i * classes + j`.
pub fn structure_constants(table: &SubcharTable) -> &Vec<Vec<(usize, i64)>> {
    table.products.get_or_init(|| {
        let k = table.class_count();
        let g = table.group();
        let mut out = Vec::with_capacity(k * k);
        for i in 0..k {
            let a = table.class_rep(i);
            for j in 0..k {
                let b = table.class_rep(j);
                let mut terms: BTreeMap<usize, i64> = BTreeMap::new();
                let reps = g
                    .double_cosets(a.subgroup(), b.subgroup())
                    .expect("same parent");
                for x in reps {
                    let w = a.meet_product(g, &b.conjugate(g, x), table.n());
                    let c = table.class_of(&w).expect("closed under meets");
                    *terms.entry(c).or_insert(0) += 1;
                }
                out.push(terms.into_iter().collect());
            }
        }
        out
    })
}

/// `M[i][j]` is the mark of the basis element `j` at the class `i`:
/// the number of cosets `gV` with `(U, mu) <= g(V, nu)`.
pub fn mark_matrix(table: &SubcharTable) -> &Vec<Vec<i64>> {
    table.marks.get_or_init(|| {
        let k = table.class_count();
        let g = table.group();
        let mut m = vec![vec![0i64; k]; k];
        for j in 0..k {
            let rj = table.class(j).rep;
            let transversal = g.left_transversal(table.subchar(rj).subgroup());
            for i in 0..k {
                let ri = table.class(i).rep;
                m[i][j] = transversal
                    .iter()
                    .filter(|&&x| table.leq_index(ri, table.conj_index(x, rj)))
                    .count() as i64;
            }
        }
        m
    })
}

/// Marks of `a * b` computed from the marks of `a` and `b`.
///
/// The fixed points of a product at `(U, mu)` are pairs whose characters add
/// up to `mu` on `U`, so each mark of the product is a convolution over the
/// characters of `U`. With `n = 1` this is the pointwise product.
pub fn product_marks(table: &SubcharTable, ma: &[i64], mb: &[i64]) -> Vec<i64> {
    let c = table.coeff();
    let subs = table.subchars();
    (0..table.class_count())
        .map(|i| {
            let mu = table.class_rep(i);
            let u = mu.subgroup();
            subs.iter()
                .filter(|alpha| alpha.subgroup() == u)
                .map(|alpha| {
                    let mut beta = vec![0u32; u.parent_order()];
                    for &x in u.members() {
                        beta[x] = c.sub(mu.value(x), alpha.value(x));
                    }
                    let beta = Subcharacter::from_dense(u.clone(), beta);
                    let ia = table.class_of(alpha).expect("listed");
                    let ib = table.class_of(&beta).expect("differences of characters are characters");
                    ma[ia] * mb[ib]
                })
                .sum()
        })
        .collect()
}

/// All units with coefficients in `[-bound, bound]` whose inverse also lies in the box.
///
/// For each subgroup `U` the marks at the characters of `U` form an element
/// of the group ring `Z[Hom(U, C)]`. When the exponent of `C` divides 4 or 6
/// that ring only has the units `+-alpha`, so a unit is determined by a sign
/// and an `N_G(U)`-stable character per conjugacy class of subgroups. Other
/// moduli fall back to scanning the whole box, which is capped.
pub fn find_units(table: &Arc<SubcharTable>, bound: i64) -> Result<Vec<BurnsideElement>> {
    let n = table.n();
    let mut out = if 4 % n == 0 || 6 % n == 0 {
        structured_units(table)
    } else {
        let k = table.class_count() as u32;
        let size = (2 * bound.max(0) as u64 + 1).checked_pow(k).unwrap_or(u64::MAX);
        const CAP: u64 = 2_000_000;
        if size > CAP {
            return Err(Error::SizeCap {
                what: "unit search box",
                size: size.min(usize::MAX as u64) as usize,
                cap: CAP as usize,
            });
        }
        box_candidates(table, bound)
    };
    out.retain(|u| u.coeffs.values().all(|c| c.abs() <= bound));
    out.retain(|u| match u.unit_inverse() {
        Some(inv) => inv.coeffs.values().all(|c| c.abs() <= bound),
        None => false,
    });
    out.sort_by_key(|u| u.to_dense());
    out.dedup();
    Ok(out)
}

fn structured_units(table: &Arc<SubcharTable>) -> Vec<BurnsideElement> {
    let g = table.group();
    let k = table.class_count();
    // subgroup of each class representative; reps of conjugate subgroups coincide
    let mut blocks: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    for c in 0..k {
        let u = table.class_rep(c).subgroup();
        match blocks.iter_mut().find(|(v, _)| v == u) {
            Some((_, cs)) => cs.push(c),
            None => blocks.push((u.clone(), vec![c])),
        }
    }
    // a class (U, alpha) is N_G(U)-stable iff its normaliser is all of N_G(U)
    let options: Vec<Vec<usize>> = blocks
        .iter()
        .map(|(u, cs)| {
            let nu = g.normalizer(u).order();
            cs.iter().copied().filter(|&c| table.class(c).normalizer.order() == nu).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut marks = vec![0i64; k];
    units_dfs(table, &blocks, &options, 0, &mut marks, &mut out);
    out
}

fn units_dfs(
    table: &Arc<SubcharTable>,
    blocks: &[(Subgroup, Vec<usize>)],
    options: &[Vec<usize>],
    b: usize,
    marks: &mut Vec<i64>,
    out: &mut Vec<BurnsideElement>,
) {
    if b == blocks.len() {
        if let Some(x) = BurnsideElement::from_marks(table, marks) {
            out.push(x);
        }
        return;
    }
    for &alpha in &options[b] {
        for sign in [1i64, -1] {
            for &c in &blocks[b].1 {
                marks[c] = if c == alpha { sign } else { 0 };
            }
            units_dfs(table, blocks, options, b + 1, marks, out);
        }
    }
}

fn box_candidates(table: &Arc<SubcharTable>, bound: i64) -> Vec<BurnsideElement> {
    let k = table.class_count();
    let mut coeffs = vec![-bound; k];
    let mut out = Vec::new();
    loop {
        let x = BurnsideElement::from_terms(table, coeffs.iter().copied().enumerate());
        if x.unit_inverse().is_some() {
            out.push(x);
        }
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            coeffs[i] += 1;
            if coeffs[i] <= bound {
                break;
            }
            coeffs[i] = -bound;
            i += 1;
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&BurnsideElement> for &BurnsideElement {
            type Output = BurnsideElement;
            fn $method(self, rhs: &BurnsideElement) -> BurnsideElement {
                self.$checked(rhs).expect("operands belong to different tables")
            }
        }
        impl $tr<BurnsideElement> for BurnsideElement {
            type Output = BurnsideElement;
            fn $method(self, rhs: BurnsideElement) -> BurnsideElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BurnsideElement> for BurnsideElement {
            type Output = BurnsideElement;
            fn $method(self, rhs: &BurnsideElement) -> BurnsideElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        self.scale(-1)
    }
}

impl Neg for BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        self.scale(-1)
    }
}

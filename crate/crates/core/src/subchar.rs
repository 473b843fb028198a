//! Characters into `C = Z/n` and the G-poset of subcharacters.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::group::{Embedding, FiniteGroup, Subgroup};

/// The cyclic coefficient group `Z/n`, written additively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientGroup {
    n: u32,
}

impl CoefficientGroup {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("coefficient modulus must be positive".into()));
        }
        Ok(Self { n })
    }

    pub fn order(self) -> u32 {
        self.n
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.n as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.n - a % self.n) % self.n
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Reduces any integer into `0..n`.
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.n as i64) as u32
    }
}

/// A pair `(U, mu)` with `mu: U -> C` a homomorphism.
///
/// Values are stored densely over the parent group and are zero off `U`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subcharacter {
    subgroup: Subgroup,
    values: Vec<u32>,
}

impl fmt::Debug for Subcharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.subgroup, self.values_on_members())
    }
}

impl Subcharacter {
    /// Checks that `values` (listed along `subgroup.members()`) is a homomorphism into `Z/n`.
    pub fn new(group: &FiniteGroup, n: u32, subgroup: Subgroup, values: &[u32]) -> Result<Self> {
        if subgroup.parent_order() != group.order() {
            return Err(Error::GroupMismatch);
        }
        if values.len() != subgroup.order() {
            return Err(Error::Input(format!(
                "character needs {} values, got {}",
                subgroup.order(),
                values.len()
            )));
        }
        let mut dense = vec![0u32; group.order()];
        for (&x, &v) in subgroup.members().iter().zip(values) {
            if v >= n {
                return Err(Error::Input(format!("residue {v} out of range for modulus {n}")));
            }
            dense[x] = v;
        }
        let c = CoefficientGroup::new(n)?;
        for &a in subgroup.members() {
            for &b in subgroup.members() {
                if dense[group.mul(a, b)] != c.add(dense[a], dense[b]) {
                    return Err(Error::Input(format!(
                        "values are not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self {
            subgroup,
            values: dense,
        })
    }

    pub(crate) fn from_dense(subgroup: Subgroup, values: Vec<u32>) -> Self {
        Self { subgroup, values }
    }

    pub fn trivial(subgroup: Subgroup) -> Self {
        let values = vec![0; subgroup.parent_order()];
        Self { subgroup, values }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `mu(x)`; zero for `x` outside the subgroup.
    #[inline]
    pub fn value(&self, x: usize) -> u32 {
        self.values[x]
    }

    pub fn values_on_members(&self) -> Vec<u32> {
        self.subgroup.members().iter().map(|&x| self.values[x]).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `(gUg^-1, x -> mu(g^-1 x g))`
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Self {
        let sub = group.conjugate(g, &self.subgroup);
        let mut values = vec![0; self.values.len()];
        for &x in self.subgroup.members() {
            values[group.conj(g, x)] = self.values[x];
        }
        Self {
            subgroup: sub,
            values,
        }
    }

    pub fn restrict(&self, u: &Subgroup) -> Result<Self> {
        if u.parent_order() != self.subgroup.parent_order() {
            return Err(Error::GroupMismatch);
        }
        if !u.is_subgroup_of(&self.subgroup) {
            return Err(Error::NotContained);
        }
        let mut values = vec![0; self.values.len()];
        for &x in u.members() {
            values[x] = self.values[x];
        }
        Ok(Self {
            subgroup: u.clone(),
            values,
        })
    }

    /// `(U, mu) <= (V, nu)` iff `U <= V` and `nu` restricts to `mu`.
    pub fn leq(&self, other: &Subcharacter) -> bool {
        self.subgroup.parent_order() == other.subgroup.parent_order()
            && self
                .subgroup
                .members()
                .iter()
                .all(|&x| other.subgroup.contains(x) && other.values[x] == self.values[x])
    }

    /// The same subcharacter seen inside the subgroup of `emb`.
    pub fn pull_back(&self, emb: &Embedding) -> Result<Self> {
        if self.subgroup.parent_order() != emb.parent().order() {
            return Err(Error::GroupMismatch);
        }
        if !self.subgroup.is_subgroup_of(emb.subgroup()) {
            return Err(Error::NotContained);
        }
        let h = emb.sub();
        let mut members: Vec<usize> = self
            .subgroup
            .members()
            .iter()
            .map(|&g| emb.down(g).expect("contained"))
            .collect();
        members.sort_unstable();
        let mut values = vec![0u32; h.order()];
        for &a in &members {
            values[a] = self.values[emb.up(a)];
        }
        Ok(Self {
            subgroup: Subgroup::from_sorted(h.order(), members),
            values,
        })
    }

    /// A subcharacter of the subgroup of `emb`, seen in the parent.
    pub fn push_forward(&self, emb: &Embedding) -> Result<Self> {
        if self.subgroup.parent_order() != emb.sub().order() {
            return Err(Error::GroupMismatch);
        }
        let mut values = vec![0u32; emb.parent().order()];
        for &a in self.subgroup.members() {
            values[emb.up(a)] = self.values[a];
        }
        Ok(Self {
            subgroup: emb.up_subgroup(&self.subgroup),
            values,
        })
    }

    /// Pointwise sum of two characters on the intersection of their domains.
    pub fn meet_product(&self, group: &FiniteGroup, other: &Subcharacter, n: u32) -> Self {
        let w = group.intersection(&self.subgroup, &other.subgroup);
        let mut values = vec![0; self.values.len()];
        for &x in w.members() {
            values[x] = (self.values[x] + other.values[x]) % n;
        }
        Self {
            subgroup: w,
            values,
        }
    }
}

impl Ord for Subcharacter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.subgroup.canonical_cmp(&other.subgroup).then_with(|| {
            let a = self.subgroup.members().iter().map(|&x| self.values[x]);
            let b = other.subgroup.members().iter().map(|&x| other.values[x]);
            a.cmp(b)
        })
    }
}

impl PartialOrd for Subcharacter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every homomorphism `U -> Z/n`, sorted.
///
/// Values are assigned on a generating set and propagated along `x -> x s`;
/// an assignment survives when every edge agrees.
pub fn all_characters(group: &FiniteGroup, u: &Subgroup, n: u32) -> Vec<Subcharacter> {
    let gens = u.generators(group);
    let mut out = Vec::new();
    let mut assign = vec![0u32; gens.len()];
    'outer: loop {
        if let Some(values) = propagate(group, u, &gens, &assign, n) {
            out.push(Subcharacter::from_dense(u.clone(), values));
        }
        for slot in assign.iter_mut() {
            *slot += 1;
            if *slot < n {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    out.sort();
    out
}

fn propagate(
    group: &FiniteGroup,
    u: &Subgroup,
    gens: &[usize],
    assign: &[u32],
    n: u32,
) -> Option<Vec<u32>> {
    let mut values = vec![0u32; group.order()];
    let mut seen = vec![false; group.order()];
    let e = group.identity();
    seen[e] = true;
    let mut stack = vec![e];
    while let Some(x) = stack.pop() {
        for (&s, &v) in gens.iter().zip(assign) {
            let y = group.mul(x, s);
            let val = (values[x] + v) % n;
            if seen[y] {
                if values[y] != val {
                    return None;
                }
            } else {
                seen[y] = true;
                values[y] = val;
                stack.push(y);
            }
        }
    }
    debug_assert!(u.members().iter().all(|&x| seen[x]));
    Some(values)
}

/// One conjugacy class of subcharacters.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    /// Index of the canonical representative in [`SubcharTable::subchars`].
    pub rep: usize,
    /// `N_G(V, nu)`
    pub normalizer: Subgroup,
    /// Indices of all members of the class.
    pub members: Vec<usize>,
}

/// `ch(G)` for a fixed `(G, Z/n)`, with conjugation and canonical class representatives.
///
/// Classes are indexed in increasing order of their representative, so
/// subgroup sizes never decrease along the class list.
pub struct SubcharTable {
    group: Arc<FiniteGroup>,
    coeff: CoefficientGroup,
    subgroups: Vec<Subgroup>,
    subchars: Vec<Subcharacter>,
    index: HashMap<Subcharacter, usize>,
    conj: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<ClassInfo>,
    pub(crate) products: OnceLock<Vec<Vec<(usize, i64)>>>,
    pub(crate) marks: OnceLock<Vec<Vec<i64>>>,
}

impl fmt::Debug for SubcharTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SubcharTable({}, n = {}, {} classes)",
            self.group.name(),
            self.coeff.order(),
            self.classes.len()
        )
    }
}

impl SubcharTable {
    pub fn build(group: Arc<FiniteGroup>, n: u32) -> Result<Arc<Self>> {
        let coeff = CoefficientGroup::new(n)?;
        let subgroups = group.all_subgroups();
        let mut subchars: Vec<Subcharacter> = subgroups
            .iter()
            .flat_map(|u| all_characters(&group, u, n))
            .collect();
        subchars.sort();
        let index: HashMap<Subcharacter, usize> = subchars
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let m = subchars.len();
        let mut conj = vec![0u32; group.order() * m];
        for g in group.elements() {
            for (i, s) in subchars.iter().enumerate() {
                conj[g * m + i] = index[&s.conjugate(&group, g)] as u32;
            }
        }
        let mut class_of = vec![usize::MAX; m];
        let mut classes = Vec::new();
        for i in 0..m {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members: Vec<usize> = group.elements().map(|g| conj[g * m + i] as usize).collect();
            members.sort_unstable();
            members.dedup();
            for &j in &members {
                class_of[j] = c;
            }
            let normalizer = Subgroup::from_sorted(
                group.order(),
                group.elements().filter(|&g| conj[g * m + i] as usize == i).collect(),
            );
            // i is the least index of its class, hence the canonical representative
            debug_assert_eq!(members[0], i);
            classes.push(ClassInfo {
                rep: i,
                normalizer,
                members,
            });
        }
        Ok(Arc::new(Self {
            group,
            coeff,
            subgroups,
            subchars,
            index,
            conj,
            class_of,
            classes,
            products: OnceLock::new(),
            marks: OnceLock::new(),
        }))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> u32 {
        self.coeff.order()
    }

    pub fn coeff(&self) -> CoefficientGroup {
        self.coeff
    }

    /// Tables over the same group table and modulus index their classes identically.
    pub fn same_as(&self, other: &SubcharTable) -> bool {
        std::ptr::eq(self, other)
            || (self.n() == other.n() && self.group.same_table(&other.group))
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// All of `ch(G)`, sorted canonically.
    pub fn subchars(&self) -> &[Subcharacter] {
        &self.subchars
    }

    pub fn subchar(&self, i: usize) -> &Subcharacter {
        &self.subchars[i]
    }

    pub fn index_of(&self, s: &Subcharacter) -> Option<usize> {
        self.index.get(s).copied()
    }

    #[inline]
    pub fn conj_index(&self, g: usize, s: usize) -> usize {
        self.conj[g * self.subchars.len() + s] as usize
    }

    pub fn leq_index(&self, s: usize, t: usize) -> bool {
        self.subchars[s].leq(&self.subchars[t])
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &ClassInfo {
        &self.classes[c]
    }

    pub fn class_rep(&self, c: usize) -> &Subcharacter {
        &self.subchars[self.classes[c].rep]
    }

    #[inline]
    pub fn class_of_index(&self, s: usize) -> usize {
        self.class_of[s]
    }

    pub fn class_of(&self, s: &Subcharacter) -> Result<usize> {
        self.index_of(s)
            .map(|i| self.class_of[i])
            .ok_or(Error::UnknownSubcharacter)
    }

    /// Class of `(G, 1)`, the identity of the ring.
    pub fn top_class(&self) -> usize {
        self.class_of(&Subcharacter::trivial(self.group.whole()))
            .expect("the trivial character of G is always present")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn table(g: FiniteGroup, n: u32) -> Arc<SubcharTable> {
        SubcharTable::build(Arc::new(g), n).unwrap()
    }

    #[test]
    fn character_counts() {
        let c2 = catalog::cyclic(2);
        assert_eq!(all_characters(&c2, &c2.trivial_subgroup(), 5).len(), 1);
        assert_eq!(all_characters(&c2, &c2.whole(), 2).len(), 2);
        let s3 = catalog::symmetric(3);
        assert_eq!(all_characters(&s3, &s3.whole(), 3).len(), 1);
        assert_eq!(all_characters(&s3, &s3.whole(), 2).len(), 2);
        let q8 = catalog::quaternion8();
        assert_eq!(all_characters(&q8, &q8.whole(), 4).len(), 4);
    }

    #[test]
    fn every_character_is_a_homomorphism() {
        for g in catalog::all().into_iter().take(10) {
            for u in g.all_subgroups() {
                for chi in all_characters(&g, &u, 6) {
                    let v = chi.values_on_members();
                    assert!(Subcharacter::new(&g, 6, u.clone(), &v).is_ok());
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let c4 = catalog::cyclic(4);
        let whole = c4.whole();
        let sign = Subcharacter::new(&c4, 2, whole.clone(), &[0, 1, 0, 1]).unwrap();
        let c2 = c4.generate(&[2]);
        assert!(sign.restrict(&c2).unwrap().is_trivial());
        assert!(sign.restrict(&c4.trivial_subgroup()).unwrap().is_trivial());
        assert_eq!(sign.restrict(&whole).unwrap(), sign);
        let other = catalog::cyclic(2).whole();
        assert_eq!(sign.restrict(&other), Err(Error::GroupMismatch));
        let small = Subcharacter::trivial(c2.clone());
        assert_eq!(small.restrict(&whole), Err(Error::NotContained));
    }

    #[test]
    fn order_examples() {
        let c4 = catalog::cyclic(4);
        let c2 = c4.generate(&[2]);
        let nontrivial = Subcharacter::new(&c4, 2, c2, &[0, 1]).unwrap();
        let top = Subcharacter::trivial(c4.whole());
        assert!(!nontrivial.leq(&top));
        assert!(top.leq(&top));
        let bottom = Subcharacter::trivial(c4.trivial_subgroup());
        assert!(bottom.leq(&top) && bottom.leq(&nontrivial));
    }

    #[test]
    fn conjugation_in_s3() {
        let g = catalog::symmetric(3);
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let r = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let u = g.generate(&[t]);
        let sign = Subcharacter::new(&g, 2, u.clone(), &[0, 1]).unwrap();
        let moved = sign.conjugate(&g, r);
        assert_ne!(moved.subgroup(), &u);
        assert_eq!(moved.value(g.conj(r, t)), 1);
        assert_eq!(sign.conjugate(&g, g.identity()), sign);
    }

    #[test]
    fn class_counts() {
        assert_eq!(table(FiniteGroup::trivial(), 3).class_count(), 1);
        let t = table(catalog::cyclic(2), 2);
        assert_eq!(t.class_count(), 3);
        let t = table(catalog::symmetric(3), 2);
        assert_eq!(t.class_count(), 6);
        let sizes: Vec<usize> = (0..6).map(|c| t.class_rep(c).subgroup().order()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 3, 6, 6]);
    }

    #[test]
    fn table_invariants() {
        for g in catalog::all().into_iter().take(10) {
            let order = g.order();
            let t = table(g, 2);
            let gr = t.group().clone();
            let m = t.subchars().len();
            for c in t.classes() {
                assert_eq!(c.members.len() * c.normalizer.order(), order);
            }
            for w in t.classes().windows(2) {
                assert!(t.subchar(w[0].rep) < t.subchar(w[1].rep));
            }
            for s in 0..m {
                for a in gr.elements() {
                    for b in gr.elements() {
                        assert_eq!(
                            t.conj_index(a, t.conj_index(b, s)),
                            t.conj_index(gr.mul(a, b), s)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn order_is_partial_and_conjugation_invariant() {
        let t = table(catalog::dihedral(8), 2);
        let m = t.subchars().len();
        for a in 0..m {
            assert!(t.leq_index(a, a));
            for b in 0..m {
                if a != b && t.leq_index(a, b) {
                    assert!(!t.leq_index(b, a));
                }
                for g in t.group().elements() {
                    assert_eq!(
                        t.leq_index(a, b),
                        t.leq_index(t.conj_index(g, a), t.conj_index(g, b))
                    );
                }
                if !t.leq_index(a, b) {
                    continue;
                }
                for c in 0..m {
                    if t.leq_index(b, c) {
                        assert!(t.leq_index(a, c));
                    }
                }
            }
        }
    }
}

//! Finite groups stored as Cayley tables, with the subgroup and coset
//! machinery used by the rest of the crate.
//!
//! Elements are indices `0..order`. Permutation groups are multiplied as
//! functions acting on the left: `(g*h)(x) = g(h(x))`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on the number of elements produced by a closure.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from an explicit multiplication table, checking every axiom.
    pub fn from_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(Error::MalformedTable);
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or(Error::NoInverse(a))?;
            inv[a] = b as u32;
        }
        let mul = table.iter().flatten().map(|&v| v as u32).collect();
        Ok(Self {
            name: name.into(),
            order: n,
            mul,
            inv,
            identity,
        })
    }

    /// Enumerates the closure of a set of permutations of `0..degree`.
    ///
    /// Element 0 is always the identity; the rest appear in breadth-first order.
    pub fn from_permutations(
        name: impl Into<String>,
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::NotAPermutation(i, degree));
            }
            for &x in g {
                if x >= degree || seen[x] {
                    return Err(Error::NotAPermutation(i, degree));
                }
                seen[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p: Vec<usize> = elements[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<usize> = elements[b].iter().map(|&x| elements[a][x]).collect();
                mul[a * n + b] = index[&p] as u32;
            }
            let mut q = vec![0; degree];
            for (x, &y) in elements[a].iter().enumerate() {
                q[y] = x;
            }
            inv[a] = index[&q] as u32;
        }
        Ok(Self {
            name: name.into(),
            order: n,
            mul,
            inv,
            identity: 0,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// The cyclic group Z/n with element k standing for k mod n.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let inv = (0..n).map(|k| ((n - k) % n) as u32).collect();
        Self {
            name: format!("C{n}"),
            order: n,
            mul,
            inv,
            identity: 0,
        }
    }

    /// `G x H` with `(g, h)` stored at index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order, h.order);
        let n = m * k;
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let x = g.mul(a / k, b / k);
                let y = h.mul(a % k, b % k);
                mul[a * n + b] = (x * k + y) as u32;
            }
        }
        let inv = (0..n).map(|a| (g.inv(a / k) * k + h.inv(a % k)) as u32).collect();
        Self {
            name: format!("{}x{}", g.name, h.name),
            order: n,
            mul,
            inv,
            identity: g.identity * k + h.identity,
        }
    }

    /// The subgroup `U` as a group in its own right; element `i` is `U.members()[i]`.
    pub fn subgroup_group(&self, u: &Subgroup) -> Self {
        let pos: HashMap<usize, usize> =
            u.members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = u.order();
        let mut mul = vec![0u32; n * n];
        for (i, &a) in u.members.iter().enumerate() {
            for (j, &b) in u.members.iter().enumerate() {
                mul[i * n + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        let inv = u.members.iter().map(|&a| pos[&self.inv(a)] as u32).collect();
        Self {
            name: format!("{}<{}>", self.name, n),
            order: n,
            mul,
            inv,
            identity: pos[&self.identity],
        }
    }

    /// Same multiplication table, ignoring the name.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other) || (self.order == other.order && self.mul == other.mul)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Rows of the Cayley table, for serialization.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, (0..self.order).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, vec![self.identity])
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order];
        mask[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup { members, mask }
    }

    /// Checks that a member list is a subgroup and wraps it.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if m.iter().any(|&x| x >= self.order) {
            return Err(Error::NotASubgroup(format!("{members:?}")));
        }
        let s = Subgroup::from_sorted(self.order, m);
        if !s.contains(self.identity)
            || s.members.iter().any(|&a| {
                !s.contains(self.inv(a)) || s.members.iter().any(|&b| !s.contains(self.mul(a, b)))
            })
        {
            return Err(Error::NotASubgroup(format!("{members:?}")));
        }
        debug_assert_eq!(self.order % s.order(), 0);
        Ok(s)
    }

    /// Every subgroup exactly once, sorted by size then member list.
    ///
    /// Breadth-first closure: each subgroup is extended by one element at a time.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let trivial = self.trivial_subgroup();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([trivial.members.clone()]);
        let mut out = vec![trivial];
        let mut i = 0;
        while i < out.len() {
            let base = out[i].clone();
            let mut gens = base.generators(self);
            for g in self.elements() {
                if base.contains(g) {
                    continue;
                }
                gens.push(g);
                let s = self.generate(&gens);
                gens.pop();
                if seen.insert(s.members.clone()) {
                    out.push(s);
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// `g U g^-1`
    pub fn conjugate(&self, g: usize, u: &Subgroup) -> Subgroup {
        let mut m: Vec<usize> = u.members.iter().map(|&x| self.conj(g, x)).collect();
        m.sort_unstable();
        Subgroup::from_sorted(self.order, m)
    }

    pub fn normalizer(&self, u: &Subgroup) -> Subgroup {
        let m = self
            .elements()
            .filter(|&g| u.members.iter().all(|&x| u.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_sorted(self.order, m)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let m = a.members.iter().copied().filter(|&x| b.contains(x)).collect();
        Subgroup::from_sorted(self.order, m)
    }

    /// Representatives of the double cosets `U g V`, each the least element of its coset.
    pub fn double_cosets(&self, u: &Subgroup, v: &Subgroup) -> Result<Vec<usize>> {
        Ok(self
            .double_coset_partition(u, v)?
            .into_iter()
            .map(|c| c[0])
            .collect())
    }

    /// The double cosets `U g V` themselves, as sorted element lists.
    pub fn double_coset_partition(&self, u: &Subgroup, v: &Subgroup) -> Result<Vec<Vec<usize>>> {
        if u.parent_order() != self.order || v.parent_order() != self.order {
            return Err(Error::GroupMismatch);
        }
        let mut covered = vec![false; self.order];
        let mut parts = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            let mut part = Vec::new();
            for &a in &u.members {
                let ag = self.mul(a, g);
                for &b in &v.members {
                    let x = self.mul(ag, b);
                    if !covered[x] {
                        covered[x] = true;
                        part.push(x);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        Ok(parts)
    }

    /// Least element of each left coset `gU`, in increasing order.
    pub fn left_transversal(&self, u: &Subgroup) -> Vec<usize> {
        let mut covered = vec![false; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &x in &u.members {
                covered[self.mul(g, x)] = true;
            }
        }
        reps
    }

    /// Least element of each right coset `Ug`, in increasing order.
    pub fn right_transversal(&self, u: &Subgroup) -> Vec<usize> {
        let mut covered = vec![false; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &x in &u.members {
                covered[self.mul(x, g)] = true;
            }
        }
        reps
    }

    /// The left-multiplication action on `G/U`, indexed by [`Self::left_transversal`].
    pub fn coset_action(self: &Arc<Self>, u: &Subgroup) -> GSet {
        let reps = self.left_transversal(u);
        let mut coset_of = vec![0usize; self.order];
        for (i, &r) in reps.iter().enumerate() {
            for &x in &u.members {
                coset_of[self.mul(r, x)] = i;
            }
        }
        let m = reps.len();
        let mut action = vec![0usize; self.order * m];
        for g in self.elements() {
            for (i, &r) in reps.iter().enumerate() {
                action[g * m + i] = coset_of[self.mul(g, r)];
            }
        }
        GSet {
            group: Arc::clone(self),
            size: m,
            action,
        }
    }
}

/// A subgroup, stored as its sorted member list plus a membership mask over the parent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

impl Subgroup {
    pub(crate) fn from_sorted(parent_order: usize, members: Vec<usize>) -> Self {
        let mut mask = vec![false; parent_order];
        for &x in &members {
            mask[x] = true;
        }
        Self { members, mask }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Size first, then lexicographic member list.
    pub fn canonical_cmp(&self, other: &Subgroup) -> std::cmp::Ordering {
        (self.order(), &self.members).cmp(&(other.order(), &other.members))
    }

    /// A small generating set, chosen greedily in increasing element order.
    pub fn generators(&self, group: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = group.trivial_subgroup();
        for &x in &self.members {
            if !span.contains(x) {
                gens.push(x);
                span = group.generate(&gens);
            }
        }
        gens
    }
}

/// A finite G-set given by its full action table.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    action: Vec<usize>,
}

impl GSet {
    /// `action[g][x]` is the image of `x` under `g`; the action laws are checked.
    pub fn new(group: Arc<FiniteGroup>, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidAction("one row per group element required".into()));
        }
        let size = action.first().map_or(0, Vec::len);
        if action.iter().any(|r| r.len() != size || r.iter().any(|&y| y >= size)) {
            return Err(Error::InvalidAction("rows must be maps of the point set".into()));
        }
        let flat: Vec<usize> = action.into_iter().flatten().collect();
        let set = Self {
            group,
            size,
            action: flat,
        };
        set.check_laws()?;
        Ok(set)
    }

    fn check_laws(&self) -> Result<()> {
        let g = &self.group;
        for x in 0..self.size {
            if self.act(g.identity(), x) != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
            for a in g.elements() {
                for b in g.elements() {
                    if self.act(a, self.act(b, x)) != self.act(g.mul(a, b), x) {
                        return Err(Error::InvalidAction(format!(
                            "{a}*({b}*{x}) != ({a}{b})*{x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x]
    }

    pub fn stabilizer(&self, x: usize) -> Result<Subgroup> {
        if x >= self.size {
            return Err(Error::PointOutOfRange(x));
        }
        let m = self
            .group
            .elements()
            .filter(|&g| self.act(g, x) == x)
            .collect();
        Ok(Subgroup::from_sorted(self.group.order(), m))
    }

    pub fn orbit(&self, x: usize) -> Result<Vec<usize>> {
        if x >= self.size {
            return Err(Error::PointOutOfRange(x));
        }
        let mut o: Vec<usize> = self.group.elements().map(|g| self.act(g, x)).collect();
        o.sort_unstable();
        o.dedup();
        Ok(o)
    }

    /// Orbits ordered by least element; each orbit sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let o = self.orbit(x).expect("in range");
            for &y in &o {
                seen[y] = true;
            }
            out.push(o);
        }
        out
    }
}

/// A subgroup viewed as a group in its own right, with its inclusion map.
#[derive(Clone, Debug)]
pub struct Embedding {
    parent: Arc<FiniteGroup>,
    sub: Arc<FiniteGroup>,
    subgroup: Subgroup,
    map: Vec<usize>,
    back: Vec<Option<usize>>,
}

impl Embedding {
    pub fn new(parent: Arc<FiniteGroup>, subgroup: Subgroup) -> Result<Self> {
        if subgroup.parent_order() != parent.order() {
            return Err(Error::GroupMismatch);
        }
        let sub = Arc::new(parent.subgroup_group(&subgroup));
        let map = subgroup.members().to_vec();
        let mut back = vec![None; parent.order()];
        for (i, &x) in map.iter().enumerate() {
            back[x] = Some(i);
        }
        Ok(Self {
            parent,
            sub,
            subgroup,
            map,
            back,
        })
    }

    /// The identity embedding of a group into itself.
    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let whole = group.whole();
        let n = group.order();
        Self {
            parent: Arc::clone(&group),
            sub: group,
            subgroup: whole,
            map: (0..n).collect(),
            back: (0..n).map(Some).collect(),
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn sub(&self) -> &Arc<FiniteGroup> {
        &self.sub
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Image in the parent of an element of the subgroup.
    #[inline]
    pub fn up(&self, h: usize) -> usize {
        self.map[h]
    }

    /// Preimage of a parent element, if it lies in the subgroup.
    #[inline]
    pub fn down(&self, g: usize) -> Option<usize> {
        self.back[g]
    }

    /// A subgroup of the small group, pushed into the parent.
    pub fn up_subgroup(&self, s: &Subgroup) -> Subgroup {
        let mut m: Vec<usize> = s.members().iter().map(|&h| self.map[h]).collect();
        m.sort_unstable();
        Subgroup::from_sorted(self.parent.order(), m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations("S3", 3, &[vec![1, 0, 2], vec![1, 2, 0]], 100).unwrap()
    }

    #[test]
    fn trivial_generators_give_trivial_group() {
        let g = FiniteGroup::from_permutations("1", 3, &[], 100).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn s3_closure_has_order_six() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn explicit_c4_table() {
        let t: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
        let g = FiniteGroup::from_table("C4", &t).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.inv(1), 3);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn bad_tables_are_rejected() {
        let not_square = vec![vec![0, 1], vec![1]];
        assert_eq!(FiniteGroup::from_table("x", &not_square), Err(Error::MalformedTable));
        // a commutative loop that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table("loop", &t),
            Err(Error::NotAssociative(..))
        ));
        assert_eq!(
            FiniteGroup::from_permutations("bad", 3, &[vec![0, 0, 1]], 100),
            Err(Error::NotAPermutation(0, 3))
        );
        assert_eq!(
            FiniteGroup::from_permutations("big", 5, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]], 50),
            Err(Error::CapExceeded(50))
        );
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::cyclic(2).all_subgroups().len(), 2);
        assert_eq!(s3().all_subgroups().len(), 6);
        assert_eq!(catalog::quaternion8().all_subgroups().len(), 6);
        assert_eq!(catalog::dihedral(8).all_subgroups().len(), 10);
        assert_eq!(catalog::symmetric(4).all_subgroups().len(), 30);
    }

    #[test]
    fn subgroups_sorted_canonically() {
        let subs = s3().all_subgroups();
        for w in subs.windows(2) {
            assert!(w[0].canonical_cmp(&w[1]).is_lt());
        }
        for s in &subs {
            assert_eq!(6 % s.order(), 0);
        }
    }

    #[test]
    fn double_coset_examples() {
        let g = s3();
        let whole = g.whole();
        assert_eq!(g.double_cosets(&whole, &whole).unwrap(), vec![g.identity()]);

        let c2 = FiniteGroup::cyclic(2);
        let t = c2.trivial_subgroup();
        assert_eq!(c2.double_cosets(&t, &t).unwrap().len(), 2);

        // element 1 is the transposition (0 1)
        let u = g.generate(&[1]);
        assert_eq!(u.order(), 2);
        let mut sizes: Vec<usize> = g
            .double_coset_partition(&u, &u)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
    }

    #[test]
    fn double_cosets_reject_foreign_subgroups() {
        let g = s3();
        let other = FiniteGroup::cyclic(4).whole();
        assert_eq!(g.double_cosets(&g.whole(), &other), Err(Error::GroupMismatch));
    }

    #[test]
    fn normalizer_and_stabilizer_examples() {
        let g = Arc::new(s3());
        let a3 = g.all_subgroups().into_iter().find(|s| s.order() == 3).unwrap();
        assert_eq!(g.normalizer(&a3), g.whole());

        let regular = g.coset_action(&g.trivial_subgroup());
        assert_eq!(regular.stabilizer(0).unwrap(), g.trivial_subgroup());
        assert_eq!(regular.stabilizer(99), Err(Error::PointOutOfRange(99)));

        let natural: Vec<Vec<usize>> = {
            let perms = [vec![1, 0, 2], vec![1, 2, 0]];
            // rebuild the natural action from the permutation closure
            let mut rows = vec![vec![0usize; 3]; 6];
            let gp = FiniteGroup::from_permutations("S3", 3, &perms, 100).unwrap();
            assert_eq!(gp, *g);
            let elems = closure_perms(&perms);
            for (i, p) in elems.iter().enumerate() {
                rows[i] = p.clone();
            }
            rows
        };
        let x = GSet::new(Arc::clone(&g), natural).unwrap();
        assert_eq!(x.orbits().len(), 1);
    }

    fn closure_perms(gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
        // same breadth-first order as `from_permutations`
        let mut out = vec![vec![0, 1, 2]];
        let mut i = 0;
        while i < out.len() {
            for g in gens {
                let p: Vec<usize> = out[i].iter().map(|&x| g[x]).collect();
                if !out.contains(&p) {
                    out.push(p);
                }
            }
            i += 1;
        }
        out
    }

    #[test]
    fn invalid_gset_is_rejected() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let bad = vec![vec![1, 0], vec![1, 0]];
        assert!(GSet::new(g, bad).is_err());
    }

    #[test]
    fn group_laws_for_catalog() {
        for g in catalog::all() {
            let subs = g.all_subgroups();
            for u in &subs {
                for v in &subs {
                    let total: usize = g
                        .double_coset_partition(u, v)
                        .unwrap()
                        .iter()
                        .map(Vec::len)
                        .sum();
                    assert_eq!(total, g.order());
                }
                for a in g.elements() {
                    for b in g.elements() {
                        assert_eq!(
                            g.conjugate(a, &g.conjugate(b, u)),
                            g.conjugate(g.mul(a, b), u)
                        );
                    }
                }
            }
            let g = Arc::new(g);
            for u in &subs {
                let x = g.coset_action(u);
                for p in 0..x.size() {
                    let orbit = x.orbit(p).unwrap().len();
                    assert_eq!(orbit * x.stabilizer(p).unwrap().order(), g.order());
                }
            }
        }
    }

    #[test]
    fn direct_product_is_a_group() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &s3());
        let t = g.table();
        let again = FiniteGroup::from_table("check", &t).unwrap();
        assert_eq!(again.order(), 12);
        assert_eq!(g.identity(), 0);
    }
}

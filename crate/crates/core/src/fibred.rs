//! C-fibred G-sets as raw `(C x G)`-sets.
//!
//! These realize the ring directly and serve as the reference for the
//! double-coset product and for Lefschetz invariants of discrete posets.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSet, Subgroup};
use crate::monomial::MonomialPoset;
use crate::subchar::{CoefficientGroup, SubcharTable, Subcharacter};

/// A finite `(C x G)`-set; the pair `(c, g)` has index `c * |G| + g`.
#[derive(Clone, Debug)]
pub struct RawFibredSet {
    group: Arc<FiniteGroup>,
    coeff: CoefficientGroup,
    size: usize,
    action: Vec<u32>,
}

impl RawFibredSet {
    /// `action(c, g, x)` must define an action of `C x G`; C-freeness is not required here.
    pub fn new(
        group: Arc<FiniteGroup>,
        n: u32,
        size: usize,
        action: impl Fn(u32, usize, usize) -> usize,
    ) -> Result<Self> {
        let coeff = CoefficientGroup::new(n)?;
        let mut flat = Vec::with_capacity(n as usize * group.order() * size);
        for c in 0..n {
            for g in group.elements() {
                for x in 0..size {
                    let y = action(c, g, x);
                    if y >= size {
                        return Err(Error::PointOutOfRange(y));
                    }
                    flat.push(y as u32);
                }
            }
        }
        let s = Self {
            group,
            coeff,
            size,
            action: flat,
        };
        s.check_laws()?;
        Ok(s)
    }

    fn check_laws(&self) -> Result<()> {
        let g = &self.group;
        let n = self.coeff.order();
        let one = 1 % n;
        for x in 0..self.size {
            if self.act(0, g.identity(), x) != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
            for c in 0..n {
                for a in g.elements() {
                    let y = self.act(c, a, x);
                    // generators suffice: (1, 1) and (0, b)
                    if self.act(self.coeff.add(c, one), a, x) != self.act(one, g.identity(), y) {
                        return Err(Error::InvalidAction(format!("C does not act compatibly at {x}")));
                    }
                    for b in g.elements() {
                        if self.act(c, g.mul(b, a), x) != self.act(0, b, y) {
                            return Err(Error::InvalidAction(format!("G does not act compatibly at {x}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> u32 {
        self.coeff.order()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, c: u32, g: usize, x: usize) -> usize {
        self.action[(c as usize * self.group.order() + g) * self.size + x] as usize
    }

    /// `C` itself with trivial G-action: the unit of the ring.
    pub fn regular(group: Arc<FiniteGroup>, n: u32) -> Result<Self> {
        Self::new(group, n, n as usize, |c, _, x| ((x as u32 + c) % n) as usize)
    }

    /// `(C x G)/U_mu` with `U_mu = {(-mu(a), a) | a in U}`, on the cosets of
    /// the least-element transversal of `C x G`.
    pub fn basis(group: Arc<FiniteGroup>, n: u32, mu: &Subcharacter) -> Result<Self> {
        let coeff = CoefficientGroup::new(n)?;
        let cg = Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(n as usize), &group));
        let o = group.order();
        let mut members: Vec<usize> = mu
            .subgroup()
            .members()
            .iter()
            .map(|&a| coeff.neg(mu.value(a) % n) as usize * o + a)
            .collect();
        members.sort_unstable();
        let stab = cg.subgroup(&members)?;
        let set = cg.coset_action(&stab);
        Self::from_gset(group, n, &set)
    }

    fn from_gset(group: Arc<FiniteGroup>, n: u32, set: &GSet) -> Result<Self> {
        let o = group.order();
        Self::new(group, n, set.size(), |c, g, x| set.act(c as usize * o + g, x))
    }

    pub fn is_c_free(&self) -> bool {
        self.free_violation().is_none()
    }

    fn free_violation(&self) -> Option<usize> {
        let e = self.group.identity();
        (0..self.size).find(|&x| (1..self.n()).any(|c| self.act(c, e, x) == x))
    }

    /// The monomial G-set `C x_l X` of a discrete monomial poset, on points
    /// `(c, x)` indexed `c * |X| + x`, with `(k, g)(c, x) = (k + c + l(g, x, gx), gx)`.
    pub fn from_monomial_set(x: &MonomialPoset) -> Result<Self> {
        if !x.is_discrete() {
            return Err(Error::NotDiscrete);
        }
        let s = x.size();
        let coeff = x.coeff();
        Self::new(Arc::clone(x.group()), x.n(), x.n() as usize * s, |k, g, p| {
            let (c, q) = ((p / s) as u32, p % s);
            let c2 = coeff.add(coeff.add(k, c), x.along(g, q));
            c2 as usize * s + x.act(g, q)
        })
    }

    /// The monomial G-set of C-orbits: `l(g, Cx, Cy) = c` where `g x = c y` for
    /// the least points `x, y` of the orbits.
    pub fn to_monomial_set(&self) -> Result<MonomialPoset> {
        if let Some(x) = self.free_violation() {
            return Err(Error::NotCFree(x));
        }
        let e = self.group.identity();
        let n = self.n();
        let mut orbit = vec![usize::MAX; self.size];
        // shift[x] = c with x = c * rep(orbit)
        let mut shift = vec![0u32; self.size];
        let mut reps = Vec::new();
        for x in 0..self.size {
            if orbit[x] != usize::MAX {
                continue;
            }
            for c in 0..n {
                let y = self.act(c, e, x);
                orbit[y] = reps.len();
                shift[y] = c;
            }
            reps.push(x);
        }
        let m = reps.len();
        let mut action = Vec::with_capacity(self.group.order() * m);
        let mut along = Vec::with_capacity(self.group.order() * m);
        for g in self.group.elements() {
            for &r in &reps {
                let y = self.act(0, g, r);
                action.push(orbit[y] as u32);
                along.push(shift[y]);
            }
        }
        Ok(MonomialPoset::discrete_unchecked(
            Arc::clone(&self.group),
            self.coeff,
            m,
            action,
            along,
        ))
    }

    /// `S (x)_C T`: C-orbits of `S x T` under `c(x, y) = (cx, c^-1 y)`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !self.group.same_table(&other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.coeff != other.coeff {
            return Err(Error::CoefficientMismatch);
        }
        let n = self.n();
        let e = self.group.identity();
        let t = other.size;
        let canon = |x: usize, y: usize| -> usize {
            (0..n)
                .map(|c| self.act(c, e, x) * t + other.act(self.coeff.neg(c), e, y))
                .min()
                .expect("n >= 1")
        };
        let mut index: BTreeMap<usize, usize> = BTreeMap::new();
        for x in 0..self.size {
            for y in 0..t {
                let k = canon(x, y);
                let len = index.len();
                index.entry(k).or_insert(len);
            }
        }
        // renumber in increasing key order
        let keys: Vec<usize> = index.keys().copied().collect();
        let pos: BTreeMap<usize, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        Self::new(Arc::clone(&self.group), n, keys.len(), |c, g, p| {
            let k = keys[p];
            let (x, y) = (k / t, k % t);
            pos[&canon(self.act(c, g, x), other.act(0, g, y))]
        })
    }

    /// Stabiliser in `C x G` of a point, as `(c, g)` pairs.
    fn stabilizer_pairs(&self, x: usize) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for c in 0..self.n() {
            for g in self.group.elements() {
                if self.act(c, g, x) == x {
                    out.push((c, g));
                }
            }
        }
        out
    }

    /// The subcharacter `(U, mu)` with stabiliser `U_mu` at `x`.
    pub fn point_subcharacter(&self, x: usize) -> Result<Subcharacter> {
        let pairs = self.stabilizer_pairs(x);
        let mut values = vec![u32::MAX; self.group.order()];
        for &(c, g) in &pairs {
            if values[g] != u32::MAX {
                return Err(Error::NotCFree(x));
            }
            values[g] = self.coeff.neg(c);
        }
        let members: Vec<usize> = self.group.elements().filter(|&g| values[g] != u32::MAX).collect();
        let u = Subgroup::from_sorted(self.group.order(), members);
        for v in values.iter_mut() {
            if *v == u32::MAX {
                *v = 0;
            }
        }
        Ok(Subcharacter::from_dense(u, values))
    }

    /// Sum of the classes of the `(C x G)`-orbits.
    pub fn decompose(&self, table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
        if !table.group().same_table(&self.group) {
            return Err(Error::GroupMismatch);
        }
        if table.n() != self.n() {
            return Err(Error::CoefficientMismatch);
        }
        let mut seen = vec![false; self.size];
        let mut terms: BTreeMap<usize, i64> = BTreeMap::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            for c in 0..self.n() {
                for g in self.group.elements() {
                    seen[self.act(c, g, x)] = true;
                }
            }
            let s = self.point_subcharacter(x)?;
            *terms.entry(table.class_of(&s)?).or_insert(0) += 1;
        }
        Ok(BurnsideElement::from_terms(table, terms))
    }

    /// Two `(C x G)`-sets are isomorphic iff their orbits have the same
    /// multiset of stabiliser classes.
    pub fn is_isomorphic(&self, other: &Self, table: &Arc<SubcharTable>) -> Result<bool> {
        if self.size != other.size {
            return Ok(false);
        }
        Ok(self.decompose(table)? == other.decompose(table)?)
    }
}

//! C-monomial G-posets and their maps.
//!
//! A cocycle `l(g, x, y)`, defined when `gx <= y`, is stored through two
//! tables: `along(g, x) = l(g, x, gx)` and `up(x, y) = l(1, x, y)` for
//! `x <= y`. The cocycle law forces `l(g, x, y) = up(gx, y) + along(g, x)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Embedding, FiniteGroup, Subgroup};
use crate::poset::Poset;
use crate::subchar::{CoefficientGroup, Subcharacter};

const NONE: u32 = u32::MAX;

#[derive(Clone)]
pub struct MonomialPoset {
    group: Arc<FiniteGroup>,
    coeff: CoefficientGroup,
    poset: Poset,
    action: Vec<u32>,
    along: Vec<u32>,
    up: Vec<u32>,
}

impl fmt::Debug for MonomialPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MonomialPoset({}, n = {}, {} points)",
            self.group.name(),
            self.n(),
            self.size()
        )
    }
}

impl PartialEq for MonomialPoset {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_table(&other.group)
            && self.coeff == other.coeff
            && self.poset == other.poset
            && self.action == other.action
            && self.along == other.along
            && self.up == other.up
    }
}

impl Eq for MonomialPoset {}

fn flatten_action(group: &FiniteGroup, size: usize, action: &[Vec<usize>]) -> Result<Vec<u32>> {
    if action.len() != group.order() {
        return Err(Error::InvalidAction("one row per group element required".into()));
    }
    let mut flat = Vec::with_capacity(group.order() * size);
    for row in action {
        if row.len() != size || row.iter().any(|&y| y >= size) {
            return Err(Error::InvalidAction("rows must be maps of the point set".into()));
        }
        flat.extend(row.iter().map(|&y| y as u32));
    }
    Ok(flat)
}

impl MonomialPoset {
    /// Builds from a full cocycle function, queried on every admissible triple.
    pub fn new(
        group: Arc<FiniteGroup>,
        n: u32,
        poset: Poset,
        action: &[Vec<usize>],
        cocycle: impl Fn(usize, usize, usize) -> u32,
    ) -> Result<Self> {
        let size = poset.size();
        let action = flatten_action(&group, size, action)?;
        let coeff = CoefficientGroup::new(n)?;
        let e = group.identity();
        let mut along = vec![0u32; group.order() * size];
        for g in group.elements() {
            for x in 0..size {
                along[g * size + x] = cocycle(g, x, action[g * size + x] as usize);
            }
        }
        let mut up = vec![NONE; size * size];
        for x in 0..size {
            for y in 0..size {
                if poset.leq(x, y) {
                    up[x * size + y] = cocycle(e, x, y);
                }
            }
        }
        let out = Self::from_parts(group, coeff, poset, action, along, up)?;
        for g in out.group.elements() {
            for x in 0..size {
                let gx = out.act(g, x);
                for y in 0..size {
                    if out.poset.leq(gx, y) {
                        let c = cocycle(g, x, y);
                        if c != out.l(g, x, y) {
                            return Err(Error::CocycleViolation(format!(
                                "l({g},{y},{y}) l({g},{x},{gx}) is not l({g},{x},{y})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The trivial cocycle on a G-poset.
    pub fn trivial(group: Arc<FiniteGroup>, n: u32, poset: Poset, action: &[Vec<usize>]) -> Result<Self> {
        Self::new(group, n, poset, action, |_, _, _| 0)
    }

    /// Builds from values on the pairs `(g, x, gx)` and on covering relations,
    /// extended along chains; the result is validated.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        n: u32,
        poset: Poset,
        action: &[Vec<usize>],
        along: &[Vec<u32>],
        covers: &[(usize, usize, u32)],
    ) -> Result<Self> {
        let size = poset.size();
        let action = flatten_action(&group, size, action)?;
        let coeff = CoefficientGroup::new(n)?;
        if along.len() != group.order() || along.iter().any(|r| r.len() != size) {
            return Err(Error::Input("along table must be |G| x |X|".into()));
        }
        let along: Vec<u32> = along.iter().flatten().copied().collect();
        let mut up = vec![NONE; size * size];
        for x in 0..size {
            up[x * size + x] = 0;
        }
        for &(x, y, c) in covers {
            if x >= size || y >= size || !poset.lt(x, y) {
                return Err(Error::Input(format!("({x}, {y}) is not a strict relation")));
            }
            up[x * size + y] = c % n;
        }
        // close transitively, shortest gaps first
        let order = poset.linear_extension();
        let rank: Vec<usize> = {
            let mut r = vec![0; size];
            for (i, &x) in order.iter().enumerate() {
                r[x] = i;
            }
            r
        };
        let mut pairs: Vec<(usize, usize)> = (0..size)
            .flat_map(|x| (0..size).map(move |y| (x, y)))
            .filter(|&(x, y)| poset.lt(x, y))
            .collect();
        pairs.sort_by_key(|&(x, y)| rank[y] - rank[x]);
        for (x, y) in pairs {
            if up[x * size + y] != NONE {
                continue;
            }
            let mid = (0..size).find(|&z| {
                poset.lt(x, z)
                    && poset.lt(z, y)
                    && up[x * size + z] != NONE
                    && up[z * size + y] != NONE
            });
            match mid {
                Some(z) => up[x * size + y] = coeff.add(up[x * size + z], up[z * size + y]),
                None => {
                    return Err(Error::Input(format!(
                        "no value determines l(1, {x}, {y}); list it among the covers"
                    )))
                }
            }
        }
        Self::from_parts(group, coeff, poset, action, along, up)
    }

    pub(crate) fn from_parts(
        group: Arc<FiniteGroup>,
        coeff: CoefficientGroup,
        poset: Poset,
        action: Vec<u32>,
        along: Vec<u32>,
        up: Vec<u32>,
    ) -> Result<Self> {
        let out = Self {
            group,
            coeff,
            poset,
            action,
            along,
            up,
        };
        out.validate()?;
        Ok(out)
    }

    /// Builds without validation, for constructions that are valid by design.
    pub(crate) fn from_parts_unchecked(
        group: Arc<FiniteGroup>,
        coeff: CoefficientGroup,
        poset: Poset,
        action: Vec<u32>,
        along: Vec<u32>,
        up: Vec<u32>,
    ) -> Self {
        let out = Self {
            group,
            coeff,
            poset,
            action,
            along,
            up,
        };
        debug_assert_eq!(out.validate(), Ok(()));
        out
    }

    /// A discrete monomial G-set from its action and vertex cocycle `l(g, x, gx)`.
    pub(crate) fn discrete_unchecked(
        group: Arc<FiniteGroup>,
        coeff: CoefficientGroup,
        size: usize,
        action: Vec<u32>,
        along: Vec<u32>,
    ) -> Self {
        let mut up = vec![NONE; size * size];
        for x in 0..size {
            up[x * size + x] = 0;
        }
        Self::from_parts_unchecked(group, coeff, Poset::discrete(size), action, along, up)
    }

    /// Checks the order, the action and the cocycle law; reports the first violation.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let size = self.size();
        let c = self.coeff;
        if self.action.len() != g.order() * size
            || self.along.len() != g.order() * size
            || self.up.len() != size * size
        {
            return Err(Error::InvalidPoset("table sizes do not match".into()));
        }
        self.poset.check()?;
        for x in 0..size {
            if self.act(g.identity(), x) != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
            for a in g.elements() {
                for b in g.elements() {
                    if self.act(a, self.act(b, x)) != self.act(g.mul(a, b), x) {
                        return Err(Error::InvalidAction(format!("{a}*({b}*{x}) != ({a}{b})*{x}")));
                    }
                }
            }
        }
        for a in g.elements() {
            for x in 0..size {
                for y in 0..size {
                    if self.poset.leq(x, y) && !self.poset.leq(self.act(a, x), self.act(a, y)) {
                        return Err(Error::InvalidPoset(format!("{a} does not preserve {x} <= {y}")));
                    }
                }
            }
        }
        let n = c.order();
        if self.along.iter().any(|&v| v >= n) {
            return Err(Error::CocycleViolation("value out of range".into()));
        }
        for x in 0..size {
            for y in 0..size {
                let v = self.up[x * size + y];
                if self.poset.leq(x, y) != (v != NONE) || (v != NONE && v >= n) {
                    return Err(Error::CocycleViolation(format!("l(1,{x},{y}) is missing or out of range")));
                }
            }
            if self.up[x * size + x] != 0 {
                return Err(Error::CocycleViolation(format!("l(1,{x},{x}) != 0")));
            }
        }
        // l(1,y,z) l(1,x,y) = l(1,x,z)
        for x in 0..size {
            for y in 0..size {
                if !self.poset.lt(x, y) {
                    continue;
                }
                for z in 0..size {
                    if self.poset.lt(y, z)
                        && c.add(self.up[y * size + z], self.up[x * size + y]) != self.up[x * size + z]
                    {
                        return Err(Error::CocycleViolation(format!(
                            "l(1,{y},{z}) l(1,{x},{y}) != l(1,{x},{z})"
                        )));
                    }
                }
            }
        }
        // l(h,gx,hgx) l(g,x,gx) = l(hg,x,hgx)
        for a in g.elements() {
            for b in g.elements() {
                for x in 0..size {
                    let bx = self.act(b, x);
                    if c.add(self.along(a, bx), self.along(b, x)) != self.along(g.mul(a, b), x) {
                        return Err(Error::CocycleViolation(format!(
                            "l({a},{bx},{a}{bx}) l({b},{x},{bx}) != l({a}{b},{x},..)"
                        )));
                    }
                }
            }
        }
        // l(1,hx,hy) l(h,x,hx) = l(h,y,hy) l(1,x,y)
        for a in g.elements() {
            for x in 0..size {
                for y in 0..size {
                    if !self.poset.lt(x, y) {
                        continue;
                    }
                    let lhs = c.add(self.up[self.act(a, x) * size + self.act(a, y)], self.along(a, x));
                    let rhs = c.add(self.along(a, y), self.up[x * size + y]);
                    if lhs != rhs {
                        return Err(Error::CocycleViolation(format!(
                            "l(1,{a}{x},{a}{y}) l({a},{x},{a}{x}) != l({a},{y},{a}{y}) l(1,{x},{y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn empty(group: Arc<FiniteGroup>, n: u32) -> Result<Self> {
        let coeff = CoefficientGroup::new(n)?;
        Ok(Self::discrete_unchecked(group, coeff, 0, Vec::new(), Vec::new()))
    }

    /// One point with trivial cocycle.
    pub fn point(group: Arc<FiniteGroup>, n: u32) -> Result<Self> {
        let mu = Subcharacter::trivial(group.whole());
        Self::point_with_character(group, n, &mu)
    }

    /// One point whose vertex character is `mu`, a character of the whole group.
    pub fn point_with_character(group: Arc<FiniteGroup>, n: u32, mu: &Subcharacter) -> Result<Self> {
        if mu.subgroup().order() != group.order() || mu.subgroup().parent_order() != group.order() {
            return Err(Error::NotContained);
        }
        let coeff = CoefficientGroup::new(n)?;
        let action = vec![0u32; group.order()];
        let along: Vec<u32> = group.elements().map(|g| mu.value(g) % n).collect();
        Self::from_parts(group, coeff, Poset::discrete(1), action, along, vec![0])
    }

    /// `(G/U, mu^)` with `mu^(h, t_i U, t_j U) = mu(t_j^-1 h t_i)` over the left transversal.
    pub fn coset(group: Arc<FiniteGroup>, n: u32, mu: &Subcharacter) -> Result<Self> {
        if mu.subgroup().parent_order() != group.order() {
            return Err(Error::GroupMismatch);
        }
        let coeff = CoefficientGroup::new(n)?;
        let reps = group.left_transversal(mu.subgroup());
        let set = group.coset_action(mu.subgroup());
        let m = reps.len();
        let mut action = vec![0u32; group.order() * m];
        let mut along = vec![0u32; group.order() * m];
        for g in group.elements() {
            for (i, &t) in reps.iter().enumerate() {
                let j = set.act(g, i);
                action[g * m + i] = j as u32;
                let u = group.mul(group.inv(reps[j]), group.mul(g, t));
                along[g * m + i] = mu.value(u) % n;
            }
        }
        let mut up = vec![NONE; m * m];
        for i in 0..m {
            up[i * m + i] = 0;
        }
        Self::from_parts(group, coeff, Poset::discrete(m), action, along, up)
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

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size() + x] as usize
    }

    /// `l(g, x, gx)`
    #[inline]
    pub fn along(&self, g: usize, x: usize) -> u32 {
        self.along[g * self.size() + x]
    }

    /// `l(1, x, y)` for `x <= y`.
    #[inline]
    pub fn up_value(&self, x: usize, y: usize) -> Option<u32> {
        let v = self.up[x * self.size() + y];
        (v != NONE).then_some(v)
    }

    /// `l(g, x, y)` where admissible (`gx <= y`).
    pub fn cocycle(&self, g: usize, x: usize, y: usize) -> Option<u32> {
        let gx = self.act(g, x);
        self.up_value(gx, y).map(|b| self.coeff.add(b, self.along(g, x)))
    }

    #[inline]
    fn l(&self, g: usize, x: usize, y: usize) -> u32 {
        self.cocycle(g, x, y).expect("admissible triple")
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.size()).all(|x| (0..self.size()).all(|y| x == y || !self.leq(x, y)))
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        self.group
            .elements()
            .map(|g| (0..self.size()).map(|x| self.act(g, x)).collect())
            .collect()
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let m = self.group.elements().filter(|&g| self.act(g, x) == x).collect();
        Subgroup::from_sorted(self.group.order(), m)
    }

    /// Orbits ordered by least element; each orbit sorted.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let size = self.size();
        let mut seen = vec![false; size];
        let mut out = Vec::new();
        for x in 0..size {
            if seen[x] {
                continue;
            }
            let mut o: Vec<usize> = self.group.elements().map(|g| self.act(g, x)).collect();
            o.sort_unstable();
            o.dedup();
            for &y in &o {
                seen[y] = true;
            }
            out.push(o);
        }
        out
    }

    /// For each point, an element carrying the least point of its orbit to it.
    pub(crate) fn orbit_transporters(&self) -> (Vec<usize>, Vec<usize>) {
        let size = self.size();
        let mut rep = vec![usize::MAX; size];
        let mut carrier = vec![0usize; size];
        for x in 0..size {
            if rep[x] != usize::MAX {
                continue;
            }
            for g in self.group.elements() {
                let y = self.act(g, x);
                if rep[y] == usize::MAX {
                    rep[y] = x;
                    carrier[y] = g;
                }
            }
        }
        (rep, carrier)
    }

    /// `l_x(g) = l(g, x, x)` on the stabiliser of `x`.
    pub fn vertex_character(&self, x: usize) -> Subcharacter {
        let stab = self.stabilizer(x);
        let mut values = vec![0u32; self.group.order()];
        for &g in stab.members() {
            values[g] = self.along(g, x);
        }
        Subcharacter::from_dense(stab, values)
    }

    /// The cocycle `l(g, x, y) + phi(y) - phi(x)`; `(id, phi)` is an isomorphism onto it.
    pub fn gauge(&self, phi: &[u32]) -> Result<Self> {
        let s = self.size();
        if phi.len() != s {
            return Err(Error::Input("gauge needs one value per point".into()));
        }
        let c = self.coeff;
        let phi: Vec<u32> = phi.iter().map(|&v| v % c.order()).collect();
        let mut along = self.along.clone();
        for g in self.group.elements() {
            for x in 0..s {
                let v = &mut along[g * s + x];
                *v = c.add(*v, c.sub(phi[self.act(g, x)], phi[x]));
            }
        }
        let up = (0..s * s)
            .map(|i| {
                let v = self.up[i];
                if v == NONE {
                    NONE
                } else {
                    c.add(v, c.sub(phi[i % s], phi[i / s]))
                }
            })
            .collect();
        Ok(Self::from_parts_unchecked(
            Arc::clone(&self.group),
            c,
            self.poset.clone(),
            self.action.clone(),
            along,
            up,
        ))
    }

    /// The same G-poset with the trivial cocycle.
    pub fn with_trivial_cocycle(&self) -> Self {
        let size = self.size();
        let up = self.up.iter().map(|&v| if v == NONE { NONE } else { 0 }).collect();
        Self::from_parts_unchecked(
            Arc::clone(&self.group),
            self.coeff,
            self.poset.clone(),
            self.action.clone(),
            vec![0; self.group.order() * size],
            up,
        )
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !self.group.same_table(&other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.coeff != other.coeff {
            return Err(Error::CoefficientMismatch);
        }
        Ok(())
    }

    /// `X` on `0..|X|`, then `X'`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (a, b) = (self.size(), other.size());
        let s = a + b;
        let mut leq = vec![false; s * s];
        let mut up = vec![NONE; s * s];
        for x in 0..a {
            for y in 0..a {
                leq[x * s + y] = self.leq(x, y);
                up[x * s + y] = self.up[x * a + y];
            }
        }
        for x in 0..b {
            for y in 0..b {
                leq[(a + x) * s + a + y] = other.leq(x, y);
                up[(a + x) * s + a + y] = other.up[x * b + y];
            }
        }
        let mut action = Vec::with_capacity(self.group.order() * s);
        let mut along = Vec::with_capacity(self.group.order() * s);
        for g in self.group.elements() {
            action.extend((0..a).map(|x| self.act(g, x) as u32));
            action.extend((0..b).map(|x| (a + other.act(g, x)) as u32));
            along.extend((0..a).map(|x| self.along(g, x)));
            along.extend((0..b).map(|x| other.along(g, x)));
        }
        Ok(Self::from_parts_unchecked(
            Arc::clone(&self.group),
            self.coeff,
            Poset::from_flat(s, leq),
            action,
            along,
            up,
        ))
    }

    /// Point `(x, x')` has index `x * |X'| + x'`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (a, b) = (self.size(), other.size());
        let s = a * b;
        let c = self.coeff;
        let mut leq = vec![false; s * s];
        let mut up = vec![NONE; s * s];
        for p in 0..s {
            for q in 0..s {
                let (x, xp) = (p / b, p % b);
                let (y, yp) = (q / b, q % b);
                if self.leq(x, y) && other.leq(xp, yp) {
                    leq[p * s + q] = true;
                    up[p * s + q] = c.add(self.up[x * a + y], other.up[xp * b + yp]);
                }
            }
        }
        let mut action = Vec::with_capacity(self.group.order() * s);
        let mut along = Vec::with_capacity(self.group.order() * s);
        for g in self.group.elements() {
            for p in 0..s {
                let (x, xp) = (p / b, p % b);
                action.push((self.act(g, x) * b + other.act(g, xp)) as u32);
                along.push(c.add(self.along(g, x), other.along(g, xp)));
            }
        }
        Ok(Self::from_parts_unchecked(
            Arc::clone(&self.group),
            self.coeff,
            Poset::from_flat(s, leq),
            action,
            along,
            up,
        ))
    }

    /// Reversed order with `l_op(g, x, y) = -l(g^-1, y, x)`.
    pub fn opposite(&self) -> Self {
        let s = self.size();
        let c = self.coeff;
        let mut up = vec![NONE; s * s];
        for x in 0..s {
            for y in 0..s {
                let v = self.up[y * s + x];
                if v != NONE {
                    up[x * s + y] = c.neg(v);
                }
            }
        }
        // -l(g^-1, gx, x) = l(g, x, gx)
        Self::from_parts_unchecked(
            Arc::clone(&self.group),
            self.coeff,
            self.poset.opposite(),
            self.action.clone(),
            self.along.clone(),
            up,
        )
    }

    /// The points listed, as a monomial poset over the subgroup of `emb`;
    /// the list must be stable under that subgroup.
    pub fn sub_poset(&self, emb: &Embedding, points: &[usize]) -> Result<Self> {
        if !self.group.same_table(emb.parent()) {
            return Err(Error::GroupMismatch);
        }
        let s = self.size();
        let mut index = vec![usize::MAX; s];
        for (i, &x) in points.iter().enumerate() {
            if x >= s {
                return Err(Error::PointOutOfRange(x));
            }
            index[x] = i;
        }
        let h = emb.sub();
        let k = points.len();
        let mut action = Vec::with_capacity(h.order() * k);
        let mut along = Vec::with_capacity(h.order() * k);
        for a in h.elements() {
            let g = emb.up(a);
            for &x in points {
                let j = index[self.act(g, x)];
                if j == usize::MAX {
                    return Err(Error::InvalidAction("point list is not stable under the subgroup".into()));
                }
                action.push(j as u32);
                along.push(self.along(g, x));
            }
        }
        let mut up = vec![NONE; k * k];
        for (i, &x) in points.iter().enumerate() {
            for (j, &y) in points.iter().enumerate() {
                up[i * k + j] = self.up[x * s + y];
            }
        }
        Ok(Self::from_parts_unchecked(
            Arc::clone(h),
            self.coeff,
            self.poset.induced(points),
            action,
            along,
            up,
        ))
    }

    /// `Res^G_H`
    pub fn restrict(&self, emb: &Embedding) -> Result<Self> {
        let all: Vec<usize> = (0..self.size()).collect();
        self.sub_poset(emb, &all)
    }

    /// `Ind^G_H` of a monomial `H`-poset, on the points `(i, x)` indexed
    /// `i * |X| + x` over the left transversal `t_i` of `G/H`.
    pub fn induce(emb: &Embedding, x: &Self) -> Result<Self> {
        if !x.group.same_table(emb.sub()) {
            return Err(Error::GroupMismatch);
        }
        let g = emb.parent();
        let reps = g.left_transversal(emb.subgroup());
        let cosets = g.coset_action(emb.subgroup());
        let k = reps.len();
        let b = x.size();
        let s = k * b;
        let mut action = Vec::with_capacity(g.order() * s);
        let mut along = Vec::with_capacity(g.order() * s);
        for a in g.elements() {
            for (i, &t) in reps.iter().enumerate() {
                let j = cosets.act(a, i);
                let h = g.mul(g.inv(reps[j]), g.mul(a, t));
                let h = emb.down(h).expect("t_j^-1 g t_i lies in H");
                for p in 0..b {
                    action.push((j * b + x.act(h, p)) as u32);
                    along.push(x.along(h, p));
                }
            }
        }
        let mut leq = vec![false; s * s];
        let mut up = vec![NONE; s * s];
        for i in 0..k {
            for p in 0..b {
                for q in 0..b {
                    leq[(i * b + p) * s + i * b + q] = x.leq(p, q);
                    up[(i * b + p) * s + i * b + q] = x.up[p * b + q];
                }
            }
        }
        Ok(Self::from_parts_unchecked(
            Arc::clone(g),
            x.coeff,
            Poset::from_flat(s, leq),
            action,
            along,
            up,
        ))
    }

    /// Strict chains with `len + 1` points, lexicographically ordered.
    pub fn chain_list(&self, len: usize) -> Vec<Vec<usize>> {
        self.poset.chains_of_length(len + 1)
    }

    /// `Sd_len(X)` as a discrete monomial G-set with `l_n(g, c, gc) = l(g, x_0, g x_0)`.
    pub fn chains(&self, len: usize) -> (Self, Vec<Vec<usize>>) {
        let list = self.chain_list(len);
        let index: HashMap<&[usize], usize> =
            list.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        let m = list.len();
        let mut action = Vec::with_capacity(self.group.order() * m);
        let mut along = Vec::with_capacity(self.group.order() * m);
        let mut buf = Vec::with_capacity(len + 1);
        for g in self.group.elements() {
            for c in &list {
                buf.clear();
                buf.extend(c.iter().map(|&x| self.act(g, x)));
                action.push(index[buf.as_slice()] as u32);
                along.push(self.along(g, c[0]));
            }
        }
        (
            Self::discrete_unchecked(Arc::clone(&self.group), self.coeff, m, action, along),
            list,
        )
    }

    /// The points of `X^{U, mu}`, in increasing order.
    pub fn fixed_points(&self, s: &Subcharacter) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| {
                s.subgroup()
                    .members()
                    .iter()
                    .all(|&u| self.act(u, x) == x && self.along(u, x) == s.value(u) % self.n())
            })
            .collect()
    }

    /// `(X, l)^{U, mu}` as a plain poset.
    pub fn fixed_subposet(&self, s: &Subcharacter) -> Poset {
        self.poset.induced(&self.fixed_points(s))
    }

    /// `]x, .[` over `G_x`.
    pub fn interval_above(&self, x: usize) -> Result<(Embedding, Self)> {
        let emb = Embedding::new(Arc::clone(&self.group), self.stabilizer(x))?;
        let pts: Vec<usize> = (0..self.size()).filter(|&y| self.poset.lt(x, y)).collect();
        let sub = self.sub_poset(&emb, &pts)?;
        Ok((emb, sub))
    }

    /// `]., x[` over `G_x`.
    pub fn interval_below(&self, x: usize) -> Result<(Embedding, Self)> {
        let emb = Embedding::new(Arc::clone(&self.group), self.stabilizer(x))?;
        let pts: Vec<usize> = (0..self.size()).filter(|&y| self.poset.lt(y, x)).collect();
        let sub = self.sub_poset(&emb, &pts)?;
        Ok((emb, sub))
    }
}

/// A map `(f, lambda)` of monomial posets: `f` is equivariant and monotone and
/// `m(g, f x, f y) lambda_x = lambda_y l(g, x, y)` whenever `gx <= y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPosetMap {
    source: MonomialPoset,
    target: MonomialPoset,
    f: Vec<usize>,
    lambda: Vec<u32>,
}

impl MonomialPosetMap {
    pub fn new(source: MonomialPoset, target: MonomialPoset, f: Vec<usize>, lambda: Vec<u32>) -> Result<Self> {
        source.check_compatible(&target)?;
        let map = Self {
            source,
            target,
            f,
            lambda,
        };
        map.validate()?;
        Ok(map)
    }

    pub fn identity(x: &MonomialPoset) -> Self {
        Self {
            source: x.clone(),
            target: x.clone(),
            f: (0..x.size()).collect(),
            lambda: vec![0; x.size()],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (x, y) = (&self.source, &self.target);
        if self.f.len() != x.size() || self.lambda.len() != x.size() {
            return Err(Error::InvalidMap("wrong length".into()));
        }
        if self.f.iter().any(|&p| p >= y.size()) || self.lambda.iter().any(|&v| v >= x.n()) {
            return Err(Error::InvalidMap("value out of range".into()));
        }
        let c = x.coeff;
        for g in x.group.elements() {
            for p in 0..x.size() {
                if self.f[x.act(g, p)] != y.act(g, self.f[p]) {
                    return Err(Error::InvalidMap(format!("not equivariant at ({g}, {p})")));
                }
                let gp = x.act(g, p);
                for q in 0..x.size() {
                    if !x.leq(gp, q) {
                        continue;
                    }
                    let m = match y.cocycle(g, self.f[p], self.f[q]) {
                        Some(m) => m,
                        None => return Err(Error::InvalidMap(format!("not monotone at ({gp}, {q})"))),
                    };
                    if c.add(m, self.lambda[p]) != c.add(self.lambda[q], x.l(g, p, q)) {
                        return Err(Error::InvalidMap(format!("not natural at ({g}, {p}, {q})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &MonomialPoset {
        &self.source
    }

    pub fn target(&self) -> &MonomialPoset {
        &self.target
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    /// `X *_{f, lambda} Y` on `X` then `Y`: `x <= y` iff `f(x) <= y`,
    /// with cross cocycle `m(g, f(x), y) lambda_x`.
    pub fn join(&self) -> MonomialPoset {
        let (x, y) = (&self.source, &self.target);
        let (a, b) = (x.size(), y.size());
        let s = a + b;
        let c = x.coeff;
        let mut leq = vec![false; s * s];
        let mut up = vec![NONE; s * s];
        for p in 0..a {
            for q in 0..a {
                leq[p * s + q] = x.leq(p, q);
                up[p * s + q] = x.up[p * a + q];
            }
            for q in 0..b {
                if let Some(m) = y.up_value(self.f[p], q) {
                    leq[p * s + a + q] = true;
                    up[p * s + a + q] = c.add(m, self.lambda[p]);
                }
            }
        }
        for p in 0..b {
            for q in 0..b {
                leq[(a + p) * s + a + q] = y.leq(p, q);
                up[(a + p) * s + a + q] = y.up[p * b + q];
            }
        }
        let mut action = Vec::with_capacity(x.group.order() * s);
        let mut along = Vec::with_capacity(x.group.order() * s);
        for g in x.group.elements() {
            action.extend((0..a).map(|p| x.act(g, p) as u32));
            action.extend((0..b).map(|p| (a + y.act(g, p)) as u32));
            along.extend((0..a).map(|p| x.along(g, p)));
            along.extend((0..b).map(|p| y.along(g, p)));
        }
        MonomialPoset::from_parts_unchecked(
            Arc::clone(&x.group),
            c,
            Poset::from_flat(s, leq),
            action,
            along,
            up,
        )
    }

    /// `f^y = {x | f(x) <= y}` over `G_y`.
    pub fn fiber_below(&self, y: usize) -> Result<(Embedding, MonomialPoset)> {
        let t = &self.target;
        let emb = Embedding::new(Arc::clone(&t.group), t.stabilizer(y))?;
        let pts: Vec<usize> = (0..self.source.size()).filter(|&p| t.leq(self.f[p], y)).collect();
        let sub = self.source.sub_poset(&emb, &pts)?;
        Ok((emb, sub))
    }

    /// `f_y = {x | y <= f(x)}` over `G_y`.
    pub fn fiber_above(&self, y: usize) -> Result<(Embedding, MonomialPoset)> {
        let t = &self.target;
        let emb = Embedding::new(Arc::clone(&t.group), t.stabilizer(y))?;
        let pts: Vec<usize> = (0..self.source.size()).filter(|&p| t.leq(y, self.f[p])).collect();
        let sub = self.source.sub_poset(&emb, &pts)?;
        Ok((emb, sub))
    }
}

/// Solves for every `lambda` making `(f, lambda)` a map `X -> Y`.
///
/// The constraints are differences `lambda_q - lambda_p = d`, one per
/// admissible triple, so the solutions form a coset of `C^k` where `k` counts
/// the components of the constraint graph. Returns one particular solution and
/// the component of each point, or `None` when `f` admits no
/// `lambda` (including when `f` is not equivariant or not monotone).
pub(crate) fn solve_lambda(x: &MonomialPoset, y: &MonomialPoset, f: &[usize]) -> Option<(Vec<u32>, Vec<usize>, usize)> {
    let s = x.size();
    let c = x.coeff;
    let g = &x.group;
    // edges p -> q with lambda_q = lambda_p + d
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); s];
    for a in g.elements() {
        for p in 0..s {
            let ap = x.act(a, p);
            if f[ap] != y.act(a, f[p]) {
                return None;
            }
            let d = c.sub(y.along(a, f[p]), x.along(a, p));
            adj[p].push((ap, d));
            adj[ap].push((p, c.neg(d)));
        }
    }
    for p in 0..s {
        for q in 0..s {
            if p != q && x.leq(p, q) {
                let m = y.up_value(f[p], f[q])?;
                let d = c.sub(m, x.up[p * s + q]);
                adj[p].push((q, d));
                adj[q].push((p, c.neg(d)));
            }
        }
    }
    let mut lambda = vec![NONE; s];
    let mut comp = vec![0usize; s];
    let mut count = 0;
    for r in 0..s {
        if lambda[r] != NONE {
            continue;
        }
        lambda[r] = 0;
        comp[r] = count;
        count += 1;
        let mut stack = vec![r];
        while let Some(p) = stack.pop() {
            for &(q, d) in &adj[p] {
                let v = c.add(lambda[p], d);
                if lambda[q] == NONE {
                    lambda[q] = v;
                    comp[q] = comp[p];
                    stack.push(q);
                } else if lambda[q] != v {
                    return None;
                }
            }
        }
    }
    Some((lambda, comp, count))
}

/// Every equivariant monotone `f` whose vertex characters match at orbit
/// representatives; `injective` restricts to order embeddings with equal stabilisers.
fn enumerate_vertex_maps(x: &MonomialPoset, y: &MonomialPoset, injective: bool, mut visit: impl FnMut(&[usize]) -> bool) {
    let (rep, carrier) = x.orbit_transporters();
    let reps: Vec<usize> = (0..x.size()).filter(|&p| rep[p] == p).collect();
    let orbit_of: Vec<usize> = rep.iter().map(|&r| reps.iter().position(|&q| q == r).expect("rep")).collect();
    let members: Vec<Vec<usize>> = reps.iter().map(|&r| (0..x.size()).filter(|&p| rep[p] == r).collect()).collect();
    let candidates: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            let stab = x.stabilizer(r);
            (0..y.size())
                .filter(|&q| {
                    stab.members().iter().all(|&a| y.act(a, q) == q && y.along(a, q) == x.along(a, r))
                        && (!injective || y.stabilizer(q).order() == stab.order())
                })
                .collect()
        })
        .collect();
    let mut f = vec![usize::MAX; x.size()];
    let mut used = vec![false; y.size()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        x: &MonomialPoset,
        y: &MonomialPoset,
        injective: bool,
        members: &[Vec<usize>],
        orbit_of: &[usize],
        carrier: &[usize],
        candidates: &[Vec<usize>],
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if i == members.len() {
            return visit(f);
        }
        for &q in &candidates[i] {
            let mut ok = true;
            for &p in &members[i] {
                let v = y.act(carrier[p], q);
                if injective && used[v] {
                    ok = false;
                }
                f[p] = v;
            }
            if ok {
                'check: for &p in &members[i] {
                    for p2 in 0..x.size() {
                        if orbit_of[p2] > i {
                            continue;
                        }
                        let (fp, fp2) = (f[p], f[p2]);
                        if (x.leq(p, p2) && !y.leq(fp, fp2)) || (x.leq(p2, p) && !y.leq(fp2, fp)) {
                            ok = false;
                            break 'check;
                        }
                        if injective && ((y.leq(fp, fp2) && !x.leq(p, p2)) || (y.leq(fp2, fp) && !x.leq(p2, p))) {
                            ok = false;
                            break 'check;
                        }
                    }
                }
            }
            if ok {
                if injective {
                    for &p in &members[i] {
                        used[f[p]] = true;
                    }
                }
                let stop = rec(i + 1, x, y, injective, members, orbit_of, carrier, candidates, f, used, visit);
                if injective {
                    for &p in &members[i] {
                        used[f[p]] = false;
                    }
                }
                if stop {
                    return true;
                }
            }
            for &p in &members[i] {
                f[p] = usize::MAX;
            }
        }
        false
    }
    rec(
        0,
        x,
        y,
        injective,
        &members,
        &orbit_of,
        &carrier,
        &candidates,
        &mut f,
        &mut used,
        &mut visit,
    );
}

/// All maps `X -> Y`; `lambda` is not taken up to rescaling by `C`.
pub fn enumerate_morphisms(x: &MonomialPoset, y: &MonomialPoset) -> Result<Vec<MonomialPosetMap>> {
    x.check_compatible(y)?;
    let c = x.coeff;
    let mut out = Vec::new();
    enumerate_vertex_maps(x, y, false, |f| {
        if let Some((base, comp, k)) = solve_lambda(x, y, f) {
            let mut shift = vec![0u32; k];
            loop {
                let lambda: Vec<u32> = (0..x.size()).map(|p| c.add(base[p], shift[comp[p]])).collect();
                out.push(MonomialPosetMap {
                    source: x.clone(),
                    target: y.clone(),
                    f: f.to_vec(),
                    lambda,
                });
                let mut i = 0;
                loop {
                    if i == k {
                        return false;
                    }
                    shift[i] += 1;
                    if shift[i] < c.order() {
                        break;
                    }
                    shift[i] = 0;
                    i += 1;
                }
            }
        }
        false
    });
    Ok(out)
}

/// Number of maps `X -> Y`, without materialising them.
pub fn count_morphisms(x: &MonomialPoset, y: &MonomialPoset) -> Result<u64> {
    x.check_compatible(y)?;
    let mut total = 0u64;
    enumerate_vertex_maps(x, y, false, |f| {
        if let Some((_, _, k)) = solve_lambda(x, y, f) {
            total += (x.n() as u64).pow(k as u32);
        }
        false
    });
    Ok(total)
}

/// An isomorphism `X -> Y`, if one exists.
pub fn find_isomorphism(x: &MonomialPoset, y: &MonomialPoset) -> Option<MonomialPosetMap> {
    if x.check_compatible(y).is_err() || x.size() != y.size() {
        return None;
    }
    if !signatures_agree(x, y) {
        return None;
    }
    let mut found = None;
    enumerate_vertex_maps(x, y, true, |f| {
        if let Some((lambda, _, _)) = solve_lambda(x, y, f) {
            found = Some(MonomialPosetMap {
                source: x.clone(),
                target: y.clone(),
                f: f.to_vec(),
                lambda,
            });
            return true;
        }
        false
    });
    found
}

pub fn is_isomorphic(x: &MonomialPoset, y: &MonomialPoset) -> bool {
    find_isomorphism(x, y).is_some()
}

/// The `lambda` making a given bijection an isomorphism, if any.
pub fn find_lambda(x: &MonomialPoset, y: &MonomialPoset, f: &[usize]) -> Option<MonomialPosetMap> {
    if x.check_compatible(y).is_err() || f.len() != x.size() || x.size() != y.size() {
        return None;
    }
    let mut seen = vec![false; y.size()];
    for &q in f {
        if q >= y.size() || seen[q] {
            return None;
        }
        seen[q] = true;
    }
    for p in 0..x.size() {
        for q in 0..x.size() {
            if x.leq(p, q) != y.leq(f[p], f[q]) {
                return None;
            }
        }
    }
    let (lambda, _, _) = solve_lambda(x, y, f)?;
    Some(MonomialPosetMap {
        source: x.clone(),
        target: y.clone(),
        f: f.to_vec(),
        lambda,
    })
}

/// Cheap invariants that isomorphic posets share.
fn signatures_agree(x: &MonomialPoset, y: &MonomialPoset) -> bool {
    let sig = |z: &MonomialPoset| {
        let mut v: Vec<(usize, usize, usize)> = (0..z.size())
            .map(|p| {
                let below = (0..z.size()).filter(|&q| z.leq(q, p)).count();
                let above = (0..z.size()).filter(|&q| z.leq(p, q)).count();
                (z.stabilizer(p).order(), below, above)
            })
            .collect();
        v.sort_unstable();
        v
    };
    sig(x) == sig(y)
}

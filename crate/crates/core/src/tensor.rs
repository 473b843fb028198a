//! Monomial bisets, their composition and generalized tensor induction.
//!
//! A `(G, H)`-biset is a discrete monomial poset over `G x H` with
//! `(g, h) u = g u h^-1`. We write `lambda(g, h, u, u')` for its cocycle on
//! `g u = u' h`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::lefschetz::{five_point_poset, lefschetz_by_marks, realize};
use crate::monomial::{find_lambda, is_isomorphic, MonomialPoset};
use crate::poset::Poset;
use crate::subchar::{all_characters, SubcharTable, Subcharacter};

/// Largest number of points a tensor-induced poset may have.
pub const MAX_INDUCED_POINTS: usize = 1500;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBiset {
    left: Arc<FiniteGroup>,
    right: Arc<FiniteGroup>,
    set: MonomialPoset,
}

impl MonomialBiset {
    /// Wraps a discrete monomial poset over `left x right`.
    pub fn new(left: Arc<FiniteGroup>, right: Arc<FiniteGroup>, set: MonomialPoset) -> Result<Self> {
        if !set.group().same_table(&FiniteGroup::direct_product(&left, &right)) {
            return Err(Error::GroupMismatch);
        }
        if !set.is_discrete() {
            return Err(Error::NotDiscrete);
        }
        Ok(Self { left, right, set })
    }

    fn product_group(left: &FiniteGroup, right: &FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::direct_product(left, right))
    }

    /// `G` acted on by two-sided multiplication, trivial cocycle.
    pub fn identity(group: Arc<FiniteGroup>, n: u32) -> Result<Self> {
        let gg = Self::product_group(&group, &group);
        let m = group.order();
        let action: Vec<Vec<usize>> = gg
            .elements()
            .map(|p| {
                let (g, h) = (p / m, p % m);
                (0..m).map(|u| group.mul(group.mul(g, u), group.inv(h))).collect()
            })
            .collect();
        let set = MonomialPoset::trivial(gg, n, Poset::discrete(m), &action)?;
        Self::new(Arc::clone(&group), group, set)
    }

    pub fn empty(left: Arc<FiniteGroup>, right: Arc<FiniteGroup>, n: u32) -> Result<Self> {
        let set = MonomialPoset::empty(Self::product_group(&left, &right), n)?;
        Self::new(left, right, set)
    }

    /// The transitive biset `(G x H / U, mu^)` for a subcharacter of `G x H`.
    pub fn from_subcharacter(
        left: Arc<FiniteGroup>,
        right: Arc<FiniteGroup>,
        n: u32,
        mu: &Subcharacter,
    ) -> Result<Self> {
        let set = MonomialPoset::coset(Self::product_group(&left, &right), n, mu)?;
        Self::new(left, right, set)
    }

    /// `U` on `0..|U|`, then `U'`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if !self.left.same_table(&other.left) || !self.right.same_table(&other.right) {
            return Err(Error::GroupMismatch);
        }
        Self::new(
            Arc::clone(&self.left),
            Arc::clone(&self.right),
            self.set.disjoint_union(&other.set)?,
        )
    }

    pub fn left(&self) -> &Arc<FiniteGroup> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FiniteGroup> {
        &self.right
    }

    pub fn set(&self) -> &MonomialPoset {
        &self.set
    }

    pub fn n(&self) -> u32 {
        self.set.n()
    }

    pub fn size(&self) -> usize {
        self.set.size()
    }

    /// Index of `(g, h)` in `G x H`.
    pub fn pair(&self, g: usize, h: usize) -> usize {
        g * self.right.order() + h
    }

    /// `g u`
    pub fn left_act(&self, g: usize, u: usize) -> usize {
        self.set.act(self.pair(g, self.right.identity()), u)
    }

    /// `u h`
    pub fn right_act(&self, u: usize, h: usize) -> usize {
        self.set.act(self.pair(self.left.identity(), self.right.inv(h)), u)
    }

    /// `lambda(g, h, u, g u h^-1)`
    pub fn lambda(&self, g: usize, h: usize, u: usize) -> u32 {
        self.set.along(self.pair(g, h), u)
    }

    pub fn left_stabilizer(&self, u: usize) -> Subgroup {
        let m: Vec<usize> = self.left.elements().filter(|&g| self.left_act(g, u) == u).collect();
        self.left.subgroup(&m).expect("stabilisers are subgroups")
    }

    pub fn right_stabilizer(&self, u: usize) -> Subgroup {
        let m: Vec<usize> = self.right.elements().filter(|&h| self.right_act(u, h) == u).collect();
        self.right.subgroup(&m).expect("stabilisers are subgroups")
    }

    pub fn is_left_free(&self) -> bool {
        (0..self.size()).all(|u| self.left_stabilizer(u).order() == 1)
    }

    /// `lambda(g, 1, u, u) = 0` for all `g` in `G_u`; exactly when `T(point) = point`.
    pub fn preserves_point(&self) -> bool {
        let e = self.right.identity();
        (0..self.size()).all(|u| self.left_stabilizer(u).members().iter().all(|&g| self.lambda(g, e, u) == 0))
    }

    /// No `G_u` has a nontrivial character into `C`. Then the character
    /// condition on maps is vacuous and `T(X x X') x T(point) = T(X) x T(X')`.
    pub fn stabilizers_character_free(&self) -> bool {
        (0..self.size()).all(|u| all_characters(&self.left, &self.left_stabilizer(u), self.n()).len() == 1)
    }

    /// The vertex character `psi` of `T(point)`, if that is a point.
    /// It is `-sum_u lambda(g, h, s, u)` over `u` in `[G\U]`, where `u h = g s`.
    pub fn point_character(&self) -> Result<Option<Subcharacter>> {
        let pt = MonomialPoset::point(Arc::clone(&self.left), self.n())?;
        let t = tensor_induce_poset(self, &pt, RepChoice::Least)?.poset;
        Ok((t.size() == 1).then(|| t.vertex_character(0)))
    }

    /// `|G\U|`
    pub fn left_orbit_count(&self) -> usize {
        self.left_orbits(RepChoice::Least).0.len()
    }

    pub fn is_right_free(&self) -> bool {
        (0..self.size()).all(|u| self.right_stabilizer(u).order() == 1)
    }

    /// Orbit representatives of `G` acting on the left, one per orbit in
    /// increasing order of orbit, and for each point its representative.
    fn left_orbits(&self, choice: RepChoice) -> (Vec<usize>, Vec<usize>) {
        let size = self.size();
        let mut rep_of = vec![usize::MAX; size];
        let mut reps = Vec::new();
        for u in 0..size {
            if rep_of[u] != usize::MAX {
                continue;
            }
            let orbit: Vec<usize> = self.left.elements().map(|g| self.left_act(g, u)).collect();
            let r = match choice {
                RepChoice::Least => u,
                RepChoice::Greatest => *orbit.iter().max().expect("nonempty orbit"),
            };
            for w in orbit {
                rep_of[w] = r;
            }
            reps.push(r);
        }
        (reps, rep_of)
    }

    /// `U o_H V`: H-orbits of the pairs `(u, v)` with
    /// `lambda(1, h, u, u) + rho(h, 1, v, v) = 0` on `H_u cap H_v`.
    pub fn compose(&self, other: &Self) -> Result<Composition> {
        if !self.right.same_table(&other.left) {
            return Err(Error::GroupMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::CoefficientMismatch);
        }
        let h_group = &self.right;
        let (e_g, e_k) = (self.left.identity(), other.right.identity());
        let coeff = self.set.coeff();
        let admissible = |u: usize, v: usize| {
            h_group.elements().all(|h| {
                self.right_act(u, h) != u
                    || other.left_act(h, v) != v
                    || coeff.add(self.lambda(e_g, h, u), other.lambda(h, e_k, v)) == 0
            })
        };
        let mut point_of: HashMap<(usize, usize), usize> = HashMap::new();
        let mut pairs = Vec::new();
        for u in 0..self.size() {
            for v in 0..other.size() {
                if point_of.contains_key(&(u, v)) || !admissible(u, v) {
                    continue;
                }
                let w = pairs.len();
                pairs.push((u, v));
                for h in h_group.elements() {
                    let uh = self.right_act(u, h_group.inv(h));
                    point_of.insert((uh, other.left_act(h, v)), w);
                }
            }
        }
        let (left, right) = (&self.left, &other.right);
        let gk = Self::product_group(left, right);
        let s = pairs.len();
        let mut action = vec![vec![0usize; s]; gk.order()];
        let mut along = vec![vec![0u32; s]; gk.order()];
        for g in left.elements() {
            for k in right.elements() {
                let p = g * right.order() + k;
                for (w, &(u, v)) in pairs.iter().enumerate() {
                    let moved = (self.left_act(g, u), other.right_act(v, right.inv(k)));
                    let target = *point_of.get(&moved).ok_or(Error::InconsistentComposition)?;
                    action[p][w] = target;
                    let (u2, v2) = pairs[target];
                    let mut value = None;
                    for h in h_group.elements() {
                        if self.set.act(self.pair(g, h), u) != u2 || other.set.act(other.pair(h, k), v) != v2 {
                            continue;
                        }
                        let c = coeff.add(self.lambda(g, h, u), other.lambda(h, k, v));
                        match value {
                            Some(old) if old != c => return Err(Error::InconsistentComposition),
                            _ => value = Some(c),
                        }
                    }
                    along[p][w] = value.ok_or(Error::InconsistentComposition)?;
                }
            }
        }
        let set = MonomialPoset::new(gk, self.n(), Poset::discrete(s), &action, |p, w, _| along[p][w])?;
        Ok(Composition {
            biset: Self::new(Arc::clone(left), Arc::clone(right), set)?,
            pairs,
            point_of,
        })
    }
}

/// A composite biset together with the pairs that name its points.
#[derive(Clone, Debug)]
pub struct Composition {
    pub biset: MonomialBiset,
    /// The least admissible pair in each H-orbit.
    pub pairs: Vec<(usize, usize)>,
    point_of: HashMap<(usize, usize), usize>,
}

impl Composition {
    /// The point `u x_H v`, if the pair is admissible.
    pub fn point(&self, u: usize, v: usize) -> Option<usize> {
        self.point_of.get(&(u, v)).copied()
    }
}

/// Checks that `(u, v) -> u x_H v` induces a bijection from
/// `[G\U] x [H\V]` onto the G-orbits of the composite.
pub fn bijection_holds(u: &MonomialBiset, v: &MonomialBiset, comp: &Composition) -> bool {
    let (u_reps, _) = u.left_orbits(RepChoice::Least);
    let (v_reps, _) = v.left_orbits(RepChoice::Least);
    let (_, w_rep) = comp.biset.left_orbits(RepChoice::Least);
    let mut hit = vec![false; comp.biset.size()];
    for &a in &u_reps {
        for &b in &v_reps {
            let Some(w) = comp.point(a, b) else {
                return false;
            };
            let r = w_rep[w];
            if hit[r] {
                return false;
            }
            hit[r] = true;
        }
    }
    (0..comp.biset.size()).all(|w| w_rep[w] != w || hit[w])
}

/// Which point of each `G`-orbit of `U` represents it in the cocycle formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RepChoice {
    #[default]
    Least,
    Greatest,
}

/// `T_{U, lambda}(X, l)` with the data used to build it.
#[derive(Clone, Debug)]
pub struct TensorInductionResult {
    pub poset: MonomialPoset,
    /// The chosen representatives `[G\U]`.
    pub reps: Vec<usize>,
    /// Point `i` of `poset` is the map `u -> maps[i][u]`, sorted lexicographically.
    pub maps: Vec<Vec<usize>>,
    /// `bookkeeping[h][i] = (g, sigma)` with `reps[i] h = g sigma`, `sigma` a representative.
    pub bookkeeping: Vec<Vec<(usize, usize)>>,
}

/// One summand of the cocycle formula: `l(g, f(sigma), f'(u)) - lambda(g, h, sigma, u)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceFactor {
    pub u: usize,
    pub g: usize,
    pub sigma: usize,
    pub l: u32,
    pub lambda: u32,
}

impl TensorInductionResult {
    pub fn point_of(&self, map: &[usize]) -> Option<usize> {
        self.maps.binary_search_by(|m| m.as_slice().cmp(map)).ok()
    }

    /// The summands of the cocycle at `(h, f, f')`; `None` unless `h f <= f'`.
    pub fn trace(&self, biset: &MonomialBiset, x: &MonomialPoset, h: usize, f: usize, f2: usize) -> Option<Vec<TraceFactor>> {
        if f >= self.poset.size() || f2 >= self.poset.size() || !self.poset.leq(self.poset.act(h, f), f2) {
            return None;
        }
        let (a, b) = (&self.maps[f], &self.maps[f2]);
        let out = self
            .reps
            .iter()
            .zip(&self.bookkeeping[h])
            .map(|(&u, &(g, sigma))| TraceFactor {
                u,
                g,
                sigma,
                l: x.cocycle(g, a[sigma], b[u]).expect("g f(sigma) = (hf)(u) <= f'(u)"),
                lambda: biset.lambda(g, h, sigma),
            })
            .collect();
        Some(out)
    }
}

/// `T_{U, lambda}(X, l)`: G-maps `f: U -> X` with `l(g, f(u), f(u)) = lambda(g, 1, u, u)`
/// on `G_u`, ordered pointwise, with `H` acting by `(hf)(u) = f(uh)`.
pub fn tensor_induce_poset(biset: &MonomialBiset, x: &MonomialPoset, choice: RepChoice) -> Result<TensorInductionResult> {
    if !x.group().same_table(biset.left()) {
        return Err(Error::GroupMismatch);
    }
    if x.n() != biset.n() {
        return Err(Error::CoefficientMismatch);
    }
    let g_group = biset.left();
    let h_group = biset.right();
    let e_h = h_group.identity();
    let (reps, rep_of) = biset.left_orbits(choice);
    let size_u = biset.size();
    // transporter[u] carries rep_of[u] to u
    let mut transporter = vec![usize::MAX; size_u];
    for &r in &reps {
        for g in g_group.elements() {
            let w = biset.left_act(g, r);
            if transporter[w] == usize::MAX {
                transporter[w] = g;
            }
        }
    }
    let candidates: Vec<Vec<usize>> = reps
        .iter()
        .map(|&r| {
            let stab = biset.left_stabilizer(r);
            (0..x.size())
                .filter(|&p| {
                    stab.members()
                        .iter()
                        .all(|&g| x.act(g, p) == p && x.along(g, p) == biset.lambda(g, e_h, r))
                })
                .collect()
        })
        .collect();
    let total = candidates
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&t| t <= MAX_INDUCED_POINTS));
    let Some(total) = total else {
        return Err(Error::SizeCap {
            what: "tensor-induced poset",
            size: candidates.iter().map(|c| c.len()).product::<usize>().max(MAX_INDUCED_POINTS + 1),
            cap: MAX_INDUCED_POINTS,
        });
    };
    let rep_index: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut maps = Vec::with_capacity(total);
    let mut pick = vec![0usize; reps.len()];
    if total > 0 {
        loop {
            let map: Vec<usize> = (0..size_u)
                .map(|u| x.act(transporter[u], candidates[rep_index[&rep_of[u]]][pick[rep_index[&rep_of[u]]]]))
                .collect();
            maps.push(map);
            let mut i = 0;
            while i < pick.len() {
                pick[i] += 1;
                if pick[i] < candidates[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
    }
    maps.sort();
    let index: HashMap<&[usize], usize> = maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let s = maps.len();
    let action: Vec<Vec<usize>> = h_group
        .elements()
        .map(|h| {
            maps.iter()
                .map(|f| {
                    let moved: Vec<usize> = (0..size_u).map(|u| f[biset.right_act(u, h)]).collect();
                    index[moved.as_slice()]
                })
                .collect()
        })
        .collect();
    let bookkeeping: Vec<Vec<(usize, usize)>> = h_group
        .elements()
        .map(|h| {
            reps.iter()
                .map(|&u| {
                    let w = biset.right_act(u, h);
                    let sigma = rep_of[w];
                    let g = g_group
                        .elements()
                        .find(|&g| biset.left_act(g, sigma) == w)
                        .expect("w lies in the orbit of sigma");
                    (g, sigma)
                })
                .collect()
        })
        .collect();
    let mut leq = vec![vec![false; s]; s];
    for (i, row) in leq.iter_mut().enumerate() {
        for (j, b) in row.iter_mut().enumerate() {
            *b = (0..size_u).all(|u| x.leq(maps[i][u], maps[j][u]));
        }
    }
    let poset = Poset::new(&leq)?;
    let coeff = x.coeff();
    let cocycle = |h: usize, f: usize, f2: usize| {
        let (a, b) = (&maps[f], &maps[f2]);
        reps.iter().zip(&bookkeeping[h]).fold(0u32, |acc, (&u, &(g, sigma))| {
            let l = x.cocycle(g, a[sigma], b[u]).expect("g f(sigma) = (hf)(u) <= f'(u)");
            coeff.add(acc, coeff.sub(l, biset.lambda(g, h, sigma)))
        })
    };
    let poset = MonomialPoset::new(Arc::clone(h_group), x.n(), poset, &action, cocycle)?;
    Ok(TensorInductionResult {
        poset,
        reps,
        maps,
        bookkeeping,
    })
}

fn check_ring_input(biset: &MonomialBiset, a: &BurnsideElement, h_table: &Arc<SubcharTable>) -> Result<()> {
    if !a.table().group().same_table(biset.left()) || !h_table.group().same_table(biset.right()) {
        return Err(Error::GroupMismatch);
    }
    if a.table().n() != biset.n() || h_table.n() != biset.n() {
        return Err(Error::CoefficientMismatch);
    }
    Ok(())
}

/// `Lambda(T(realize(a)))`
pub fn tensor_induce_ring(biset: &MonomialBiset, a: &BurnsideElement, h_table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    check_ring_input(biset, a, h_table)?;
    let x = realize(a)?;
    lefschetz_by_marks(&tensor_induce_poset(biset, &x, RepChoice::Least)?.poset, h_table)
}

/// A second realization of `a`: the opposite of the first, plus a point and
/// the five-point poset whose invariants cancel.
pub fn alternative_realization(a: &BurnsideElement) -> Result<MonomialPoset> {
    let g = a.table().group();
    let n = a.table().n();
    let pad = MonomialPoset::point(Arc::clone(g), n)?.disjoint_union(&five_point_poset(Arc::clone(g), n)?)?;
    realize(a)?.opposite().disjoint_union(&pad)
}

/// Whether both realizations of `a` give the same image.
pub fn realization_independent(biset: &MonomialBiset, a: &BurnsideElement, h_table: &Arc<SubcharTable>) -> Result<bool> {
    let first = tensor_induce_ring(biset, a, h_table)?;
    let x = alternative_realization(a)?;
    let second = lefschetz_by_marks(&tensor_induce_poset(biset, &x, RepChoice::Greatest)?.poset, h_table)?;
    Ok(first == second)
}

/// Per double coset `G u K`, the data entering the fixed-point formula.
struct GhostOrbit {
    u: usize,
    /// Characters of `uK` restricting to `lambda(., 1, u, u)` on `G_u`.
    options: Vec<Subcharacter>,
    /// For each `k`, the elements `gamma_{k, t, u}` over `t`.
    gammas: Vec<Vec<usize>>,
    /// `phi_u(k)`
    phi: Vec<u32>,
}

fn ghost_orbits(biset: &MonomialBiset, k_sub: &Subgroup) -> Vec<GhostOrbit> {
    let g_group = biset.left();
    let h_group = biset.right();
    let e_h = h_group.identity();
    let coeff = biset.set().coeff();
    let n = biset.n();
    let (_, rep_of) = biset.left_orbits(RepChoice::Least);
    let mut seen = vec![false; biset.size()];
    let mut out = Vec::new();
    for u in 0..biset.size() {
        if seen[u] {
            continue;
        }
        for &k in k_sub.members() {
            for g in g_group.elements() {
                seen[biset.left_act(g, biset.right_act(u, k))] = true;
            }
        }
        let k_prime: Vec<usize> = k_sub
            .members()
            .iter()
            .copied()
            .filter(|&k| rep_of[biset.right_act(u, k)] == rep_of[u])
            .collect();
        // coset representative of K'_u t for each element of K
        let mut tau_of: HashMap<usize, usize> = HashMap::new();
        let mut ts = Vec::new();
        for &t in k_sub.members() {
            if tau_of.contains_key(&t) {
                continue;
            }
            ts.push(t);
            for &c in &k_prime {
                tau_of.insert(h_group.mul(c, t), t);
            }
        }
        let mut gammas = Vec::with_capacity(k_sub.order());
        let mut phi = Vec::with_capacity(k_sub.order());
        for &k in k_sub.members() {
            let mut gs = Vec::with_capacity(ts.len());
            let mut total = 0u32;
            for &t in &ts {
                let tk = h_group.mul(t, k);
                let tau = tau_of[&tk];
                let c = h_group.mul(tk, h_group.inv(tau));
                let uc = biset.right_act(u, c);
                let gamma = g_group
                    .elements()
                    .find(|&g| biset.left_act(g, u) == uc)
                    .expect("c lies in K'_u");
                let u_tau = biset.right_act(u, tau);
                debug_assert_eq!(biset.set().act(biset.pair(gamma, k), u_tau), biset.right_act(u, t));
                total = coeff.add(total, biset.lambda(gamma, k, u_tau));
                gs.push(gamma);
            }
            gammas.push(gs);
            phi.push(coeff.neg(total));
        }
        let uk: Vec<usize> = g_group
            .elements()
            .filter(|&g| {
                let gu = biset.left_act(g, u);
                k_sub.members().iter().any(|&k| biset.right_act(u, k) == gu)
            })
            .collect();
        let uk = g_group.subgroup(&uk).expect("a subgroup");
        let stab = biset.left_stabilizer(u);
        let options = all_characters(g_group, &uk, n)
            .into_iter()
            .filter(|xi| stab.members().iter().all(|&g| xi.value(g) == biset.lambda(g, e_h, u)))
            .collect();
        out.push(GhostOrbit { u, options, gammas, phi });
    }
    out
}

/// `sum over xi in Xi of prod_u weight(xi_u)` at `(K, theta)`.
fn ghost_sum(
    biset: &MonomialBiset,
    theta: &Subcharacter,
    mut weight: impl FnMut(&Subcharacter) -> Result<i64>,
) -> Result<i64> {
    let k_sub = theta.subgroup();
    if k_sub.parent_order() != biset.right().order() {
        return Err(Error::GroupMismatch);
    }
    let coeff = biset.set().coeff();
    let orbits = ghost_orbits(biset, k_sub);
    if orbits.iter().any(|o| o.options.is_empty()) {
        return Ok(0);
    }
    let weights: Vec<Vec<i64>> = orbits
        .iter()
        .map(|o| o.options.iter().map(&mut weight).collect::<Result<Vec<i64>>>())
        .collect::<Result<_>>()?;
    let mut pick = vec![0usize; orbits.len()];
    let mut total = 0i64;
    loop {
        let fits = k_sub.members().iter().enumerate().all(|(i, &k)| {
            let rhs = orbits.iter().zip(&pick).fold(0u32, |acc, (o, &p)| {
                let xi = &o.options[p];
                let s = o.gammas[i].iter().fold(o.phi[i], |a, &g| coeff.add(a, xi.value(g)));
                coeff.add(acc, s)
            });
            rhs == theta.value(k)
        });
        if fits {
            total += orbits.iter().zip(&pick).enumerate().map(|(j, (_, &p))| weights[j][p]).product::<i64>();
        }
        let mut i = 0;
        while i < pick.len() {
            pick[i] += 1;
            if pick[i] < orbits[i].options.len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
        if i == pick.len() {
            break;
        }
    }
    Ok(total)
}

/// The double-coset representatives `u` in `[G\U/K]` used by the fixed-point formula.
pub fn double_orbit_reps(biset: &MonomialBiset, k_sub: &Subgroup) -> Vec<usize> {
    ghost_orbits(biset, k_sub).into_iter().map(|o| o.u).collect()
}

/// `chi(T(X)^{K, theta})` from fixed subposets of `X` alone.
pub fn tensor_induce_marks(biset: &MonomialBiset, x: &MonomialPoset, theta: &Subcharacter) -> Result<i64> {
    if !x.group().same_table(biset.left()) {
        return Err(Error::GroupMismatch);
    }
    ghost_sum(biset, theta, |xi| Ok(x.fixed_subposet(xi).euler_characteristic()))
}

/// `T(a)` through its marks, with no poset built.
pub fn tensor_induce_ring_by_marks(
    biset: &MonomialBiset,
    a: &BurnsideElement,
    h_table: &Arc<SubcharTable>,
) -> Result<BurnsideElement> {
    check_ring_input(biset, a, h_table)?;
    let marks: Vec<i64> = (0..h_table.class_count())
        .map(|c| ghost_sum(biset, h_table.class_rep(c), |xi| a.mark(xi)))
        .collect::<Result<_>>()?;
    BurnsideElement::from_marks(h_table, &marks).ok_or(Error::NonIntegralMarks)
}

/// `X x (point, chi)`: the cocycle of `X` shifted by `chi(g)` along `g`.
pub fn twist(x: &MonomialPoset, chi: &Subcharacter) -> Result<MonomialPoset> {
    x.product(&MonomialPoset::point_with_character(Arc::clone(x.group()), x.n(), chi)?)
}

/// `k chi`
pub fn scale_character(group: &FiniteGroup, n: u32, chi: &Subcharacter, k: i64) -> Result<Subcharacter> {
    let values: Vec<u32> = chi
        .subgroup()
        .members()
        .iter()
        .map(|&g| (chi.value(g) as i64 * k).rem_euclid(n as i64) as u32)
        .collect();
    Subcharacter::new(group, n, chi.subgroup().clone(), &values)
}

/// `[H, psi]`, the image of one.
fn point_class(biset: &MonomialBiset, h_table: &Arc<SubcharTable>, k: i64) -> Result<BurnsideElement> {
    let psi = biset.point_character()?.ok_or(Error::PointNotPreserved)?;
    BurnsideElement::basis(h_table, &scale_character(biset.right(), biset.n(), &psi, k)?)
}

/// `T(a) [H, -psi]`. Unital, and multiplicative when the stabilisers are character free.
pub fn tensor_induce_normalized(
    biset: &MonomialBiset,
    a: &BurnsideElement,
    h_table: &Arc<SubcharTable>,
) -> Result<BurnsideElement> {
    let t = tensor_induce_ring_by_marks(biset, a, h_table)?;
    Ok(&t * &point_class(biset, h_table, -1)?)
}

/// The checks attached to one instance of the composition law.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionReport {
    pub bijection: bool,
    /// `F -> (u x_H v -> F(v)(u))` is an isomorphism
    /// `T_V T_U X x (point, (r - 1) psi_V) -> T_{U o V} X` with `r = |G\U|`.
    pub explicit_isomorphism: bool,
    pub ring_equal: bool,
    pub sizes: (usize, usize),
}

impl CompositionReport {
    pub fn holds(&self) -> bool {
        self.bijection && self.explicit_isomorphism && self.ring_equal
    }
}

/// `T_V T_U = T_{U o_H V}` on `X` and on `a`, for left free `V`, up to the
/// twist by `(|G\U| - 1) psi_V`: the one-step cocycle counts `rho` once per
/// pair `(u, v)`, the two-step one once per `v`.
pub fn composition_law(
    u: &MonomialBiset,
    v: &MonomialBiset,
    x: &MonomialPoset,
    a: &BurnsideElement,
    h_table: &Arc<SubcharTable>,
    k_table: &Arc<SubcharTable>,
) -> Result<CompositionReport> {
    if !v.is_left_free() {
        return Err(Error::NotLeftFree);
    }
    let comp = u.compose(v)?;
    let bijection = bijection_holds(u, v, &comp);
    let inner = tensor_induce_poset(u, x, RepChoice::Least)?;
    let outer = tensor_induce_poset(v, &inner.poset, RepChoice::Least)?;
    let direct = tensor_induce_poset(&comp.biset, x, RepChoice::Least)?;
    let mut f = Vec::with_capacity(outer.maps.len());
    for big_f in &outer.maps {
        let image: Vec<usize> = comp.pairs.iter().map(|&(p, q)| inner.maps[big_f[q]][p]).collect();
        match direct.point_of(&image) {
            Some(i) => f.push(i),
            None => break,
        }
    }
    let r = u.left_orbit_count() as i64 - 1;
    let psi = v.point_character()?.ok_or(Error::PointNotPreserved)?;
    let twisted = twist(&outer.poset, &scale_character(v.right(), v.n(), &psi, r)?)?;
    let explicit_isomorphism = f.len() == outer.maps.len() && find_lambda(&twisted, &direct.poset, &f).is_some();
    let two_step = tensor_induce_ring_by_marks(v, &tensor_induce_ring_by_marks(u, a, h_table)?, k_table)?;
    let two_step = &two_step * &point_class(v, k_table, r)?;
    let one_step = tensor_induce_ring_by_marks(&comp.biset, a, k_table)?;
    Ok(CompositionReport {
        bijection,
        explicit_isomorphism,
        ring_equal: two_step == one_step,
        sizes: (outer.poset.size(), direct.poset.size()),
    })
}

/// `T_{U u U'}(X) -> T_U(X) x T_{U'}(X)`, `f -> (f|U, f|U')`, and the ring law.
#[derive(Clone, Debug, Serialize)]
pub struct UnionReport {
    pub explicit_isomorphism: bool,
    pub ring_equal: bool,
}

pub fn disjoint_union_law(
    u: &MonomialBiset,
    u2: &MonomialBiset,
    x: &MonomialPoset,
    a: &BurnsideElement,
    h_table: &Arc<SubcharTable>,
) -> Result<UnionReport> {
    let both = u.disjoint_union(u2)?;
    let t = tensor_induce_poset(&both, x, RepChoice::Least)?;
    let t1 = tensor_induce_poset(u, x, RepChoice::Least)?;
    let t2 = tensor_induce_poset(u2, x, RepChoice::Least)?;
    let prod = t1.poset.product(&t2.poset)?;
    let split = u.size();
    let f: Option<Vec<usize>> = t
        .maps
        .iter()
        .map(|m| Some(t1.point_of(&m[..split])? * t2.poset.size() + t2.point_of(&m[split..])?))
        .collect();
    let explicit_isomorphism = f.is_some_and(|f| find_lambda(&t.poset, &prod, &f).is_some());
    let lhs = tensor_induce_ring_by_marks(&both, a, h_table)?;
    let rhs = &tensor_induce_ring_by_marks(u, a, h_table)? * &tensor_induce_ring_by_marks(u2, a, h_table)?;
    Ok(UnionReport {
        explicit_isomorphism,
        ring_equal: lhs == rhs,
    })
}

/// `T(X x X') x T(point) -> T(X) x T(X')`, `f -> (pi f, pi' f)`, checked to be
/// an isomorphism. `T(point)` must be a point.
pub fn product_law(biset: &MonomialBiset, x: &MonomialPoset, x2: &MonomialPoset) -> Result<bool> {
    let psi = biset.point_character()?.ok_or(Error::PointNotPreserved)?;
    let t = tensor_induce_poset(biset, &x.product(x2)?, RepChoice::Least)?;
    let twisted = twist(&t.poset, &psi)?;
    let t1 = tensor_induce_poset(biset, x, RepChoice::Least)?;
    let t2 = tensor_induce_poset(biset, x2, RepChoice::Least)?;
    let prod = t1.poset.product(&t2.poset)?;
    let b = x2.size();
    let f: Option<Vec<usize>> = t
        .maps
        .iter()
        .map(|m| {
            let left: Vec<usize> = m.iter().map(|&p| p / b).collect();
            let right: Vec<usize> = m.iter().map(|&p| p % b).collect();
            Some(t1.point_of(&left)? * t2.poset.size() + t2.point_of(&right)?)
        })
        .collect();
    Ok(f.is_some_and(|f| find_lambda(&twisted, &prod, &f).is_some()))
}

/// `T_id(X) -> X`, `f -> f(1)`, checked to be an isomorphism.
pub fn identity_law(x: &MonomialPoset) -> Result<bool> {
    let id = MonomialBiset::identity(Arc::clone(x.group()), x.n())?;
    let t = tensor_induce_poset(&id, x, RepChoice::Least)?;
    let e = x.group().identity();
    let f: Vec<usize> = t.maps.iter().map(|m| m[e]).collect();
    Ok(find_lambda(&t.poset, x, &f).is_some())
}

/// The two representative choices give isomorphic results, via the identity on maps.
pub fn representative_independence(biset: &MonomialBiset, x: &MonomialPoset) -> Result<bool> {
    let a = tensor_induce_poset(biset, x, RepChoice::Least)?;
    let b = tensor_induce_poset(biset, x, RepChoice::Greatest)?;
    let f: Vec<usize> = (0..a.maps.len()).collect();
    Ok(a.maps == b.maps && find_lambda(&a.poset, &b.poset, &f).is_some())
}

/// A biset and poset with `T(X x X)` not isomorphic to `T(X) x T(X)`:
/// `G = H = C2`, `n = 2`, `U = G x H / G x 1` so that `G` fixes every point,
/// and `X` the point with the sign character. Returns `(U, X, T(X x X), T(X) x T(X))`.
pub fn product_law_counterexample() -> Result<(MonomialBiset, MonomialPoset, MonomialPoset, MonomialPoset)> {
    let n = 2;
    let c2 = Arc::new(FiniteGroup::cyclic(2));
    let gh = FiniteGroup::direct_product(&c2, &c2);
    let g_times_1 = gh.subgroup(&[0, c2.order()])?;
    let u = MonomialBiset::from_subcharacter(Arc::clone(&c2), Arc::clone(&c2), n, &Subcharacter::trivial(g_times_1))?;
    let sign = all_characters(&c2, &c2.whole(), n)
        .into_iter()
        .find(|c| !c.is_trivial())
        .expect("C2 has a sign character mod 2");
    let x = MonomialPoset::point_with_character(Arc::clone(&c2), n, &sign)?;
    let lhs = tensor_induce_poset(&u, &x.product(&x)?, RepChoice::Least)?.poset;
    let t = tensor_induce_poset(&u, &x, RepChoice::Least)?.poset;
    let rhs = t.product(&t)?;
    Ok((u, x, lhs, rhs))
}

/// The outcome of the search for a poset not fixed by `T_V T_U` when `V` is not left free.
#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub u: MonomialBiset,
    pub v: MonomialBiset,
    pub v_left_free: bool,
    /// `U o_H V` is isomorphic to the identity biset of `K`.
    pub composite_is_identity: bool,
    /// `T_{U o V}(X) = X` on every candidate tried.
    pub composite_acts_as_identity: bool,
    pub tried: usize,
    pub witness: Option<MonomialPoset>,
    /// `T_V T_U` of the witness.
    pub image: Option<MonomialPoset>,
}

/// `K = C2`, `H = N x K` with `N = C2`, `G = K`; `U = H` with `K` acting on the
/// left by inclusion, `V = K` with `H` acting on the left through `H -> K`.
/// Searches small monomial K-posets with `n = 2` for one with `T_V T_U X != X`.
pub fn non_free_counterexample() -> Result<CounterexampleReport> {
    let n = 2;
    let k = Arc::new(FiniteGroup::cyclic(2));
    let h = Arc::new(FiniteGroup::direct_product(&k, &k));
    // (a, b) in N x K sits at 2a + b; K is the second factor
    let include = |g: usize| g;
    let project = |x: usize| x % 2;
    let kh = Arc::new(FiniteGroup::direct_product(&k, &h));
    let u_action: Vec<Vec<usize>> = kh
        .elements()
        .map(|p| {
            let (g, y) = (p / 4, p % 4);
            (0..4).map(|w| h.mul(h.mul(include(g), w), h.inv(y))).collect()
        })
        .collect();
    let u = MonomialBiset::new(
        Arc::clone(&k),
        Arc::clone(&h),
        MonomialPoset::trivial(kh, n, Poset::discrete(4), &u_action)?,
    )?;
    let hk = Arc::new(FiniteGroup::direct_product(&h, &k));
    let v_action: Vec<Vec<usize>> = hk
        .elements()
        .map(|p| {
            let (y, g) = (p / 2, p % 2);
            (0..2).map(|w| k.mul(k.mul(project(y), w), k.inv(g))).collect()
        })
        .collect();
    let v = MonomialBiset::new(
        Arc::clone(&h),
        Arc::clone(&k),
        MonomialPoset::trivial(hk, n, Poset::discrete(2), &v_action)?,
    )?;
    let comp = u.compose(&v)?;
    let id = MonomialBiset::identity(Arc::clone(&k), n)?;
    let composite_is_identity = is_isomorphic(comp.biset.set(), id.set());
    let mut candidates = Vec::new();
    for chi in all_characters(&k, &k.whole(), n) {
        candidates.push(MonomialPoset::point_with_character(Arc::clone(&k), n, &chi)?);
    }
    for sub in k.all_subgroups() {
        for chi in all_characters(&k, &sub, n) {
            candidates.push(MonomialPoset::coset(Arc::clone(&k), n, &chi)?);
        }
    }
    for seed in 0..40 {
        candidates.push(crate::random::random_poset(&k, n, &mut crate::random::rng(seed), 4));
    }
    let mut composite_acts_as_identity = true;
    let mut witness = None;
    let mut image = None;
    let mut tried = 0;
    for x in candidates {
        tried += 1;
        let direct = tensor_induce_poset(&comp.biset, &x, RepChoice::Least)?.poset;
        composite_acts_as_identity &= is_isomorphic(&direct, &x);
        let y = tensor_induce_poset(&u, &x, RepChoice::Least)?.poset;
        let z = tensor_induce_poset(&v, &y, RepChoice::Least)?.poset;
        if !is_isomorphic(&z, &x) {
            image = Some(z);
            witness = Some(x);
            break;
        }
    }
    Ok(CounterexampleReport {
        v_left_free: v.is_left_free(),
        u,
        v,
        composite_is_identity,
        composite_acts_as_identity,
        tried,
        witness,
        image,
    })
}

/// Extends `(U, lambda) -> T_{U, lambda}` on units linearly over biset classes:
/// `sum n_i [U_i, mu_i]` sends a unit `a` to `prod T'_{U_i}(a)^{n_i}`, where
/// `T'(a) = T(a) [H, -psi]` is the normalised map. Classes
/// whose biset has a stabiliser with a nontrivial character into `C` need not
/// send units to units and are rejected.
pub fn bilinear_pairing(
    b: &BurnsideElement,
    a: &BurnsideElement,
    left: &Arc<FiniteGroup>,
    right: &Arc<FiniteGroup>,
    h_table: &Arc<SubcharTable>,
) -> Result<BurnsideElement> {
    if !b.table().group().same_table(&FiniteGroup::direct_product(left, right)) {
        return Err(Error::GroupMismatch);
    }
    let n = b.table().n();
    if a.unit_inverse().is_none() {
        return Err(Error::NotAUnit);
    }
    let mut out = BurnsideElement::one(h_table);
    for (&c, &k) in b.coeffs() {
        let biset = MonomialBiset::from_subcharacter(Arc::clone(left), Arc::clone(right), n, b.table().class_rep(c))?;
        if !biset.stabilizers_character_free() {
            return Err(Error::NotAUnit);
        }
        let t = tensor_induce_normalized(&biset, a, h_table)?;
        let base = if k < 0 { t.unit_inverse().ok_or(Error::NotAUnit)? } else { t };
        out = &out * &base.pow(k.unsigned_abs() as u32);
    }
    Ok(out)
}

/// Classes of `G x H` whose transitive biset has character-free stabilisers;
/// the pairing is defined on their span.
pub fn pairing_classes(
    gh_table: &Arc<SubcharTable>,
    left: &Arc<FiniteGroup>,
    right: &Arc<FiniteGroup>,
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for c in 0..gh_table.class_count() {
        let b = MonomialBiset::from_subcharacter(Arc::clone(left), Arc::clone(right), gh_table.n(), gh_table.class_rep(c))?;
        if b.stabilizers_character_free() {
            out.push(c);
        }
    }
    Ok(out)
}

//! Lefschetz invariants of monomial posets.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::fibred::RawFibredSet;
use crate::group::{Embedding, FiniteGroup};
use crate::monomial::{MonomialPoset, MonomialPosetMap};
use crate::poset::Poset;
use crate::subchar::{SubcharTable, Subcharacter};

/// Chains of one length.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeTally {
    pub degree: usize,
    pub chains: usize,
    pub orbits: usize,
}

#[derive(Clone, Debug)]
pub struct LefschetzReport {
    pub element: BurnsideElement,
    pub degrees: Vec<DegreeTally>,
    /// Per class: signed count of chains whose stabiliser datum is the class representative.
    pub m: Vec<i64>,
    /// Per class: the coefficient of the class in the invariant.
    pub gamma: Vec<i64>,
}

fn check_table(x: &MonomialPoset, table: &SubcharTable) -> Result<()> {
    if !table.group().same_table(x.group()) {
        return Err(Error::GroupMismatch);
    }
    if table.n() != x.n() {
        return Err(Error::CoefficientMismatch);
    }
    Ok(())
}

/// `(G_{x_0..x_n}, Res l_{x_0})`
fn chain_datum(x: &MonomialPoset, chain: &[usize]) -> Subcharacter {
    let g = x.group();
    let members: Vec<usize> = g
        .elements()
        .filter(|&a| chain.iter().all(|&p| x.act(a, p) == p))
        .collect();
    let stab = g.subgroup(&members).expect("stabilisers are subgroups");
    let mut values = vec![0u32; g.order()];
    for &a in stab.members() {
        values[a] = x.along(a, chain[0]);
    }
    Subcharacter::new(g, x.n(), stab, &members.iter().map(|&a| values[a]).collect::<Vec<_>>())
        .expect("vertex characters restrict to characters")
}

/// The invariant, computed as the alternating sum of the classes of
/// `Sd_n(X)` and again from orbit representatives of chains; the two must agree.
pub fn lefschetz(x: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<LefschetzReport> {
    check_table(x, table)?;
    let k = table.class_count();
    let mut element = BurnsideElement::zero(table);
    let mut by_orbits = BurnsideElement::zero(table);
    let mut degrees = Vec::new();
    let mut m = vec![0i64; k];
    for n in 0.. {
        let (sd, list) = x.chains(n);
        if list.is_empty() {
            break;
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let class = RawFibredSet::from_monomial_set(&sd)?.decompose(table)?;
        element = &element + &class.scale(sign);
        let mut orbits = 0;
        for (i, chain) in list.iter().enumerate() {
            let datum = chain_datum(x, chain);
            let idx = table.index_of(&datum).ok_or(Error::UnknownSubcharacter)?;
            let c = table.class_of_index(idx);
            if idx == table.class(c).rep {
                m[c] += sign;
            }
            // least chain of its orbit
            if x.group().elements().all(|a| sd.act(a, i) >= i) {
                orbits += 1;
                by_orbits = &by_orbits + &BurnsideElement::basis_class(table, c).scale(sign);
            }
        }
        degrees.push(DegreeTally {
            degree: n,
            chains: list.len(),
            orbits,
        });
    }
    assert_eq!(element, by_orbits, "the two chain sums disagree");
    let gamma = element.to_dense();
    Ok(LefschetzReport {
        element,
        degrees,
        m,
        gamma,
    })
}

/// `chi((X, l)^{U, mu})` at every class, in class order.
pub fn fixed_point_marks(x: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<Vec<i64>> {
    check_table(x, table)?;
    Ok((0..table.class_count())
        .map(|c| x.fixed_subposet(table.class_rep(c)).euler_characteristic())
        .collect())
}

/// The invariant recovered from the Euler characteristics of fixed subposets.
pub fn lefschetz_by_marks(x: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    let marks = fixed_point_marks(x, table)?;
    BurnsideElement::from_marks(table, &marks)
        .ok_or_else(|| Error::Input("fixed-point Euler characteristics are not marks".into()))
}

/// The invariant from orbit representatives of chains only.
pub fn lefschetz_element(x: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    check_table(x, table)?;
    let mut terms: BTreeMap<usize, i64> = BTreeMap::new();
    for n in 0.. {
        let list = x.chain_list(n);
        if list.is_empty() {
            break;
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut seen = std::collections::HashSet::new();
        for chain in &list {
            if seen.contains(chain) {
                continue;
            }
            for a in x.group().elements() {
                seen.insert(chain.iter().map(|&p| x.act(a, p)).collect::<Vec<_>>());
            }
            let c = table.class_of(&chain_datum(x, chain))?;
            *terms.entry(c).or_insert(0) += sign;
        }
    }
    Ok(BurnsideElement::from_terms(table, terms))
}

/// `Lambda - [G, 1]`
pub fn reduced_lefschetz(x: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    Ok(&lefschetz_by_marks(x, table)? - &BurnsideElement::one(table))
}

/// `-sum_{x in [G\X]} Ind_{G_x}([G_x, l_x] * reduced(]x, .[))`, where the open
/// interval carries the trivial cocycle.
pub fn lefschetz_by_vertices(x: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    check_table(x, table)?;
    let mut out = BurnsideElement::zero(table);
    for orbit in x.orbits() {
        let v = orbit[0];
        let (emb, above) = x.interval_above(v)?;
        let sub = SubcharTable::build(Arc::clone(emb.sub()), x.n())?;
        let inner = &lefschetz_by_vertices(&above.with_trivial_cocycle(), &sub)? - &BurnsideElement::one(&sub);
        let lv = x.vertex_character(v).pull_back(&emb)?;
        let term = &BurnsideElement::basis(&sub, &lv)? * &inner;
        out = &out - &term.induce(&emb, table)?;
    }
    Ok(out)
}

/// `Ind^G_H` on elements.
pub fn induce_element(emb: &Embedding, a: &BurnsideElement, big: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    a.induce(emb, big)
}

/// `a, b < c, d, e` with trivial action and cocycle; its invariant is `-1`.
pub fn five_point_poset(group: Arc<FiniteGroup>, n: u32) -> Result<MonomialPoset> {
    let mut m = vec![vec![false; 5]; 5];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
        if i < 2 {
            row[2..].iter_mut().for_each(|b| *b = true);
        }
    }
    let action = vec![(0..5).collect(); group.order()];
    MonomialPoset::trivial(group, n, Poset::new(&m)?, &action)
}

/// A monomial poset whose invariant is `a`: positive terms become copies of
/// `(G/U, mu^)`, negative terms copies of `(G/U, mu^) x W`.
pub fn realize(a: &BurnsideElement) -> Result<MonomialPoset> {
    let table = a.table();
    let g = table.group();
    let n = table.n();
    let w = five_point_poset(Arc::clone(g), n)?;
    let mut out = MonomialPoset::empty(Arc::clone(g), n)?;
    for (&c, &k) in a.coeffs() {
        let coset = MonomialPoset::coset(Arc::clone(g), n, table.class_rep(c))?;
        let piece = if k > 0 { coset } else { coset.product(&w)? };
        for _ in 0..k.unsigned_abs() {
            out = out.disjoint_union(&piece)?;
        }
    }
    Ok(out)
}

/// Compares `chi` of all fixed subposets.
pub fn equal_by_marks(x: &MonomialPoset, y: &MonomialPoset, table: &Arc<SubcharTable>) -> Result<bool> {
    Ok(fixed_point_marks(x, table)? == fixed_point_marks(y, table)?)
}

/// Both sides of the two fibre decompositions of a map `X -> Y`.
#[derive(Clone, Debug)]
pub struct QuillenReport {
    pub reduced_source: BurnsideElement,
    pub reduced_target: BurnsideElement,
    /// `reduced(X) + sum_y Ind([G_y, m_y] reduced(f^y) reduced(]y, .[))`, trivial cocycles on the fibres.
    pub upper_side: BurnsideElement,
    pub lower_side: BurnsideElement,
    /// The same sums without the vertex factor and with the fibres' own cocycles.
    pub literal_upper_side: BurnsideElement,
    pub literal_lower_side: BurnsideElement,
    /// Every `reduced(f^y)` (trivial cocycle) vanishes.
    pub upper_fibres_contractible: bool,
    pub lower_fibres_contractible: bool,
}

impl QuillenReport {
    pub fn upper_holds(&self) -> bool {
        self.upper_side == self.reduced_target
    }

    pub fn lower_holds(&self) -> bool {
        self.lower_side == self.reduced_target
    }

    pub fn literal_upper_holds(&self) -> bool {
        self.literal_upper_side == self.reduced_target
    }

    pub fn literal_lower_holds(&self) -> bool {
        self.literal_lower_side == self.reduced_target
    }

    /// When the fibres are contractible the two invariants must agree.
    pub fn fibre_criterion_holds(&self) -> bool {
        let any = self.upper_fibres_contractible || self.lower_fibres_contractible;
        !any || self.reduced_source == self.reduced_target
    }
}

pub fn quillen_decomposition(map: &MonomialPosetMap, table: &Arc<SubcharTable>) -> Result<QuillenReport> {
    let (x, y) = (map.source(), map.target());
    check_table(x, table)?;
    let reduced_source = reduced_lefschetz(x, table)?;
    let reduced_target = reduced_lefschetz(y, table)?;
    let mut sums = [reduced_source.clone(), reduced_source.clone()];
    let mut literal = [reduced_source.clone(), reduced_source.clone()];
    let mut contractible = [true, true];
    for orbit in y.orbits() {
        let v = orbit[0];
        let fibres = [map.fiber_below(v)?, map.fiber_above(v)?];
        let intervals = [y.interval_above(v)?, y.interval_below(v)?];
        for side in 0..2 {
            let (emb, fibre) = &fibres[side];
            let (_, interval) = &intervals[side];
            let sub = SubcharTable::build(Arc::clone(emb.sub()), x.n())?;
            let one = BurnsideElement::one(&sub);
            let vertex = BurnsideElement::basis(&sub, &y.vertex_character(v).pull_back(emb)?)?;
            let f_plain = &lefschetz_by_marks(&fibre.with_trivial_cocycle(), &sub)? - &one;
            let i_plain = &lefschetz_by_marks(&interval.with_trivial_cocycle(), &sub)? - &one;
            if !f_plain.is_zero() {
                contractible[side] = false;
            }
            let term = &(&vertex * &f_plain) * &i_plain;
            sums[side] = &sums[side] + &term.induce(emb, table)?;
            let f_own = &lefschetz_by_marks(fibre, &sub)? - &one;
            let i_own = &lefschetz_by_marks(interval, &sub)? - &one;
            literal[side] = &literal[side] + &(&f_own * &i_own).induce(emb, table)?;
        }
    }
    let [upper_side, lower_side] = sums;
    let [literal_upper_side, literal_lower_side] = literal;
    Ok(QuillenReport {
        reduced_source,
        reduced_target,
        upper_side,
        lower_side,
        literal_upper_side,
        literal_lower_side,
        upper_fibres_contractible: contractible[0],
        lower_fibres_contractible: contractible[1],
    })
}

//! Seeded random instances for property tests and the verification suites.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::monomial::{enumerate_morphisms, MonomialPoset, MonomialPosetMap};
use crate::poset::Poset;
use crate::subchar::{all_characters, SubcharTable, Subcharacter};
use crate::tensor::MonomialBiset;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A disjoint union of coset spaces `G/U_i` with at most `max_points` points.
/// Returns the action rows, the stabiliser character chosen for each orbit
/// representative, and for each point its representative and a transporter.
struct Carrier {
    action: Vec<Vec<usize>>,
    rep: Vec<usize>,
    carrier: Vec<usize>,
}

fn random_carrier(group: &Arc<FiniteGroup>, rng: &mut InstanceRng, max_points: usize) -> Carrier {
    let subs = group.all_subgroups();
    let mut action: Vec<Vec<usize>> = vec![Vec::new(); group.order()];
    let mut rep = Vec::new();
    let mut carrier = Vec::new();
    let target = rng.gen_range(1..=max_points.max(1));
    let mut attempts = 0;
    while rep.len() < target && attempts < 20 {
        attempts += 1;
        let u = subs.choose(rng).expect("at least the trivial subgroup");
        let k = group.order() / u.order();
        if rep.len() + k > max_points {
            continue;
        }
        let set = group.coset_action(u);
        let reps = group.left_transversal(u);
        let base = rep.len();
        for g in group.elements() {
            action[g].extend((0..k).map(|i| base + set.act(g, i)));
        }
        for &t in &reps {
            rep.push(base);
            carrier.push(t);
        }
    }
    Carrier {
        action,
        rep,
        carrier,
    }
}

/// A random G-invariant order in which comparable points lie in orbits listed in increasing order.
fn random_order(group: &FiniteGroup, c: &Carrier, rng: &mut InstanceRng, density: f64) -> Poset {
    let s = c.rep.len();
    let mut leq = vec![false; s * s];
    for x in 0..s {
        leq[x * s + x] = true;
    }
    for x in 0..s {
        if c.rep[x] != x {
            continue;
        }
        for y in 0..s {
            if c.rep[y] > x && rng.gen_bool(density) {
                for g in group.elements() {
                    leq[c.action[g][x] * s + c.action[g][y]] = true;
                }
            }
        }
    }
    for k in 0..s {
        for i in 0..s {
            if !leq[i * s + k] {
                continue;
            }
            for j in 0..s {
                if leq[k * s + j] {
                    leq[i * s + j] = true;
                }
            }
        }
    }
    Poset::from_flat(s, leq)
}

/// Tries to build a cocycle from characters `chi` of the orbit stabilisers and
/// random values on covering pairs; `None` when the choices are inconsistent.
fn try_cocycle(
    group: &Arc<FiniteGroup>,
    n: u32,
    poset: &Poset,
    c: &Carrier,
    chis: &HashMap<usize, Subcharacter>,
    rng: &mut InstanceRng,
    random_covers: bool,
) -> Option<MonomialPoset> {
    let s = poset.size();
    // along(g, x) = chi_r(s_gx^-1 g s_x)
    let along: Vec<Vec<u32>> = group
        .elements()
        .map(|g| {
            (0..s)
                .map(|x| {
                    let gx = c.action[g][x];
                    let inner = group.mul(group.inv(c.carrier[gx]), group.mul(g, c.carrier[x]));
                    chis[&c.rep[x]].value(inner) % n
                })
                .collect()
        })
        .collect();
    let covers: Vec<(usize, usize)> = (0..s)
        .flat_map(|x| (0..s).map(move |y| (x, y)))
        .filter(|&(x, y)| poset.lt(x, y) && !(0..s).any(|z| poset.lt(x, z) && poset.lt(z, y)))
        .collect();
    let mut values: HashMap<(usize, usize), u32> = HashMap::new();
    for &(x, y) in &covers {
        if values.contains_key(&(x, y)) {
            continue;
        }
        let v = if random_covers { rng.gen_range(0..n) } else { 0 };
        for h in group.elements() {
            let (hx, hy) = (c.action[h][x], c.action[h][y]);
            let w = (v + along[h][y] + n - along[h][x]) % n;
            match values.get(&(hx, hy)) {
                Some(&old) if old != w => return None,
                _ => {
                    values.insert((hx, hy), w);
                }
            }
        }
    }
    let list: Vec<(usize, usize, u32)> = values.into_iter().map(|((x, y), v)| (x, y, v)).collect();
    MonomialPoset::from_generators(Arc::clone(group), n, poset.clone(), &c.action, &along, &list).ok()
}

/// A random valid monomial G-poset with at most `max_points` points.
pub fn random_poset(group: &Arc<FiniteGroup>, n: u32, rng: &mut InstanceRng, max_points: usize) -> MonomialPoset {
    let c = random_carrier(group, rng, max_points);
    let density = rng.gen_range(0.2..0.7);
    let poset = random_order(group, &c, rng, density);
    finish(group, n, poset, &c, rng)
}

/// A random discrete monomial G-set.
pub fn random_discrete(group: &Arc<FiniteGroup>, n: u32, rng: &mut InstanceRng, max_points: usize) -> MonomialPoset {
    let c = random_carrier(group, rng, max_points);
    let poset = Poset::discrete(c.rep.len());
    finish(group, n, poset, &c, rng)
}

fn finish(group: &Arc<FiniteGroup>, n: u32, poset: Poset, c: &Carrier, rng: &mut InstanceRng) -> MonomialPoset {
    let s = poset.size();
    let reps: Vec<usize> = (0..s).filter(|&x| c.rep[x] == x).collect();
    let stab = |x: usize| {
        let m: Vec<usize> = group.elements().filter(|&g| c.action[g][x] == x).collect();
        group.subgroup(&m).expect("stabiliser")
    };
    let mut built = None;
    for attempt in 0..6 {
        let random_chars = attempt < 4;
        let chis: HashMap<usize, Subcharacter> = reps
            .iter()
            .map(|&r| {
                let u = stab(r);
                let ch = if random_chars {
                    all_characters(group, &u, n).choose(rng).expect("trivial character").clone()
                } else {
                    Subcharacter::trivial(u)
                };
                (r, ch)
            })
            .collect();
        if let Some(x) = try_cocycle(group, n, &poset, c, &chis, rng, attempt % 2 == 0) {
            built = Some(x);
            break;
        }
    }
    let x = built.unwrap_or_else(|| {
        MonomialPoset::trivial(Arc::clone(group), n, poset, &c.action).expect("trivial cocycle is valid")
    });
    let phi: Vec<u32> = (0..s).map(|_| rng.gen_range(0..n)).collect();
    x.gauge(&phi).expect("one value per point")
}

/// A random element with at most `terms` nonzero coefficients in `[-bound, bound]`.
pub fn random_element(table: &Arc<SubcharTable>, rng: &mut InstanceRng, terms: usize, bound: i64) -> BurnsideElement {
    let k = table.class_count();
    let count = rng.gen_range(0..=terms.min(k));
    let classes: Vec<usize> = (0..k).collect();
    let picked: Vec<(usize, i64)> = classes
        .choose_multiple(rng, count)
        .map(|&c| (c, rng.gen_range(-bound..=bound)))
        .collect();
    BurnsideElement::from_terms(table, picked)
}

/// A random map of monomial posets. Falls back to the projection `Y x Z -> Y`
/// with `Z` trivially cocycled when random pairs admit no maps.
pub fn random_map(group: &Arc<FiniteGroup>, n: u32, rng: &mut InstanceRng, max_points: usize) -> Result<MonomialPosetMap> {
    for _ in 0..8 {
        let x = random_poset(group, n, rng, max_points);
        let y = random_poset(group, n, rng, max_points);
        let maps = enumerate_morphisms(&x, &y)?;
        if let Some(m) = maps.choose(rng) {
            return Ok(m.clone());
        }
    }
    let y = random_poset(group, n, rng, max_points);
    let z = random_poset(group, n, rng, 3).with_trivial_cocycle();
    projection(&y, &z)
}

/// `Y x Z -> Y` for `Z` with trivial cocycle.
pub fn projection(y: &MonomialPoset, z: &MonomialPoset) -> Result<MonomialPosetMap> {
    let p = y.product(z)?;
    let f: Vec<usize> = (0..p.size()).map(|i| i / z.size()).collect();
    let lambda = vec![0; p.size()];
    MonomialPosetMap::new(p, y.clone(), f, lambda)
}

/// A map whose lower fibres `f^y` all have a greatest element: the projection
/// `Y x Z -> Y` where `Z` has a G-fixed maximum.
pub fn contractible_fibre_map(group: &Arc<FiniteGroup>, n: u32, rng: &mut InstanceRng, max_points: usize) -> Result<MonomialPosetMap> {
    let y = random_poset(group, n, rng, max_points);
    let base = random_poset(group, n, rng, 2).with_trivial_cocycle();
    let top = MonomialPoset::point(Arc::clone(group), n)?;
    let z = enumerate_morphisms(&base, &top)?
        .into_iter()
        .find(|m| m.lambda().iter().all(|&v| v == 0))
        .expect("the constant map with zero lambda exists")
        .join();
    projection(&y, &z)
}

/// A random transitive `(G, H)`-biset with at most `max_points` points,
/// left free when asked.
pub fn random_transitive_biset(
    left: &Arc<FiniteGroup>,
    right: &Arc<FiniteGroup>,
    n: u32,
    rng: &mut InstanceRng,
    max_points: usize,
    left_free: bool,
) -> Result<MonomialBiset> {
    let gh = FiniteGroup::direct_product(left, right);
    let k = right.order();
    let subs: Vec<_> = gh
        .all_subgroups()
        .into_iter()
        .filter(|u| gh.order() / u.order() <= max_points)
        .filter(|u| !left_free || u.members().iter().all(|&p| p % k != right.identity() || p == gh.identity()))
        .collect();
    let Some(u) = subs.choose(rng) else {
        return Err(Error::SizeCap {
            what: "smallest biset",
            size: if left_free { left.order() } else { 1 },
            cap: max_points,
        });
    };
    let mu = all_characters(&gh, u, n).choose(rng).expect("trivial character").clone();
    MonomialBiset::from_subcharacter(Arc::clone(left), Arc::clone(right), n, &mu)
}

/// A disjoint union of one or two random transitive bisets.
pub fn random_biset(
    left: &Arc<FiniteGroup>,
    right: &Arc<FiniteGroup>,
    n: u32,
    rng: &mut InstanceRng,
    max_points: usize,
    left_free: bool,
) -> Result<MonomialBiset> {
    let first = random_transitive_biset(left, right, n, rng, max_points, left_free)?;
    let room = max_points.saturating_sub(first.size());
    let smallest = if left_free { left.order() } else { 1 };
    if room >= smallest && rng.gen_bool(0.4) {
        let second = random_transitive_biset(left, right, n, rng, room, left_free)?;
        return first.disjoint_union(&second);
    }
    Ok(first)
}

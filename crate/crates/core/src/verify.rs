//! Named verification suites, one per invariant, on seeded random instances.

use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::burnside::{find_units, mark_matrix, product_marks, BurnsideElement};
use crate::error::{Error, Result};
use crate::fibred::RawFibredSet;
use crate::group::{Embedding, FiniteGroup};
use crate::lefschetz::{
    equal_by_marks, five_point_poset, fixed_point_marks, induce_element, lefschetz, lefschetz_by_marks,
    lefschetz_by_vertices, quillen_decomposition, realize,
};
use crate::monomial::{count_morphisms, MonomialPoset};
use crate::random::{self, random_biset, random_discrete, random_element, random_map, random_poset, InstanceRng};
use crate::subchar::SubcharTable;
use crate::tensor::{
    composition_law, disjoint_union_law, identity_law, non_free_counterexample, product_law,
    realization_independent, representative_independence, tensor_induce_marks, tensor_induce_poset,
    tensor_induce_normalized, tensor_induce_ring_by_marks, bilinear_pairing, pairing_classes, MonomialBiset,
    RepChoice,
};
use crate::subchar::Subcharacter;

/// Suite names with the invariant each one checks.
pub const SUITES: &[(&str, &str)] = &[
    ("ring-product-oracle", "basis products agree with decomposed tensor products of fibred sets"),
    ("mark-convolution", "marks of a product are the convolution of the marks; the mark matrix is triangular"),
    ("lefschetz-discrete", "the invariant of a discrete poset is its fibred class"),
    ("lefschetz-additivity", "the invariant of a disjoint union is the sum"),
    ("lefschetz-multiplicativity", "the invariant of a product is the product"),
    ("minus-one-example", "the five-point poset has invariant -[G,1]"),
    ("realize-round-trip", "the invariant of realize(a) is a"),
    ("equality-criterion", "equal invariants exactly when all fixed subposets have equal Euler characteristic"),
    ("lefschetz-opposite", "a poset and its opposite have the same invariant"),
    ("join-invariance", "the join along a map has the invariant of the target"),
    ("vertex-recursion", "the vertex recursion reproduces the chain definition"),
    ("quillen-decomposition", "both fibre decompositions of the reduced invariant hold"),
    ("induction-compatibility", "induction of posets matches induction in the ring"),
    ("adjunction-cardinality", "maps out of an induced poset match maps into the restriction"),
    ("units", "every unit found has its inverse in the ring"),
    ("tensor-point", "tensor induction sends the point to (point, psi) when stabilisers act trivially, else to the empty poset"),
    ("tensor-empty", "the empty biset induces the constant point"),
    ("tensor-identity", "the identity biset induces the identity"),
    ("tensor-product", "T(X x X') x T(point) = T(X) x T(X') when stabilisers have no characters into C"),
    ("tensor-multiplicative", "T(ab) T(1) = T(a) T(b) when stabilisers have no characters into C, T(1) = [H, psi], and the normalised map is a ring map"),
    ("tensor-disjoint-union", "a disjoint union of bisets induces the product"),
    ("tensor-composition", "composition law for left free bisets, up to the twist by (|G\\U| - 1) psi_V"),
    ("tensor-marks", "the fixed-point formula matches direct fixed subposets"),
    ("tensor-representatives", "the result does not depend on the orbit representatives"),
    ("tensor-realization", "the ring map does not depend on the realization"),
    ("tensor-non-free", "a non left free composite that does not act as the identity"),
    ("tensor-pairing", "the pairing sends units to units, additively in the biset and multiplicatively in the unit"),
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub group: Arc<FiniteGroup>,
    /// Right-hand group for the tensor suites.
    pub right: Arc<FiniteGroup>,
    pub n: u32,
    pub seed: u64,
    pub cases: usize,
}

impl SuiteConfig {
    pub fn new(group: FiniteGroup, n: u32, seed: u64) -> Self {
        Self {
            group: Arc::new(group),
            right: Arc::new(FiniteGroup::cyclic(2).with_name("C2")),
            n,
            seed,
            cases: 20,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub group: String,
    pub n: u32,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

struct Ctx {
    cfg: SuiteConfig,
    table: Arc<SubcharTable>,
}

impl Ctx {
    fn rng(&self, case: usize) -> InstanceRng {
        random::rng(self.cfg.seed.wrapping_mul(1_000_003).wrapping_add(case as u64))
    }

    fn right_table(&self) -> Result<Arc<SubcharTable>> {
        SubcharTable::build(Arc::clone(&self.cfg.right), self.cfg.n)
    }

    fn poset(&self, r: &mut InstanceRng, max: usize) -> MonomialPoset {
        random_poset(&self.cfg.group, self.cfg.n, r, max)
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !SUITES.iter().any(|(s, _)| *s == name) {
        return Err(Error::Input(format!("unknown suite {name:?}")));
    }
    let ctx = Ctx {
        table: SubcharTable::build(Arc::clone(&cfg.group), cfg.n)?,
        cfg: cfg.clone(),
    };
    let mut rep = SuiteReport {
        suite: name.to_string(),
        group: cfg.group.name().to_string(),
        n: cfg.n,
        seed: cfg.seed,
        cases: 0,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    match name {
        "ring-product-oracle" => ring_product_oracle(&ctx, &mut rep)?,
        "mark-convolution" => mark_convolution(&ctx, &mut rep),
        "lefschetz-discrete" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let x = random_discrete(&c.cfg.group, c.cfg.n, r, 8);
            let class = RawFibredSet::from_monomial_set(&x)?.decompose(&c.table)?;
            rep.check(lefschetz(&x, &c.table)?.element == class, || format!("case {i}"));
            Ok(())
        })?,
        "lefschetz-additivity" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let (x, y) = (c.poset(r, 6), c.poset(r, 6));
            let sum = &lefschetz(&x, &c.table)?.element + &lefschetz(&y, &c.table)?.element;
            rep.check(lefschetz(&x.disjoint_union(&y)?, &c.table)?.element == sum, || format!("case {i}"));
            Ok(())
        })?,
        "lefschetz-multiplicativity" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let (x, y) = (c.poset(r, 5), c.poset(r, 4));
            let prod = &lefschetz(&x, &c.table)?.element * &lefschetz(&y, &c.table)?.element;
            rep.check(lefschetz_by_marks(&x.product(&y)?, &c.table)? == prod, || format!("case {i}"));
            Ok(())
        })?,
        "minus-one-example" => {
            let w = five_point_poset(Arc::clone(&cfg.group), cfg.n)?;
            let got = lefschetz(&w, &ctx.table)?.element;
            rep.check(got == -BurnsideElement::one(&ctx.table), || format!("got {got}"));
        }
        "realize-round-trip" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let a = random_element(&c.table, r, 6, 3);
            rep.check(lefschetz(&realize(&a)?, &c.table)?.element == a, || format!("case {i}: {a}"));
            Ok(())
        })?,
        "equality-criterion" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let (x, y) = match i % 3 {
                0 => {
                    let x = c.poset(r, 6);
                    (x.opposite(), x)
                }
                1 => {
                    let m = random_map(&c.cfg.group, c.cfg.n, r, 5)?;
                    (m.target().clone(), m.join())
                }
                _ => (c.poset(r, 6), c.poset(r, 6)),
            };
            let same = lefschetz(&x, &c.table)?.element == lefschetz(&y, &c.table)?.element;
            rep.check(equal_by_marks(&x, &y, &c.table)? == same, || format!("case {i}"));
            Ok(())
        })?,
        "lefschetz-opposite" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let x = c.poset(r, 7);
            let ok = lefschetz(&x.opposite(), &c.table)?.element == lefschetz(&x, &c.table)?.element;
            rep.check(ok, || format!("case {i}"));
            Ok(())
        })?,
        "join-invariance" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let m = random_map(&c.cfg.group, c.cfg.n, r, 5)?;
            let ok = lefschetz_by_marks(&m.join(), &c.table)? == lefschetz_by_marks(m.target(), &c.table)?;
            rep.check(ok, || format!("case {i}"));
            Ok(())
        })?,
        "vertex-recursion" => per_case(&ctx, &mut rep, |c, r, rep, i| {
            let x = c.poset(r, 7);
            rep.check(lefschetz_by_vertices(&x, &c.table)? == lefschetz(&x, &c.table)?.element, || format!("case {i}"));
            Ok(())
        })?,
        "quillen-decomposition" => {
            let mut literal = 0;
            per_case(&ctx, &mut rep, |c, r, rep, i| {
                let m = random_map(&c.cfg.group, c.cfg.n, r, 5)?;
                let q = quillen_decomposition(&m, &c.table)?;
                rep.check(q.upper_holds() && q.lower_holds() && q.fibre_criterion_holds(), || format!("case {i}"));
                if !q.literal_upper_holds() || !q.literal_lower_holds() {
                    literal += 1;
                }
                Ok(())
            })?;
            rep.notes.push(format!("printed form without the vertex factor failed on {literal} maps"));
        }
        "induction-compatibility" => per_subgroup(&ctx, &mut rep, |c, emb, sub, r, rep, i| {
            let x = random_poset(emb.sub(), c.cfg.n, r, 4);
            let lx = lefschetz(&x, sub)?.element;
            let ok = induce_element(emb, &lx, &c.table)? == lefschetz(&MonomialPoset::induce(emb, &x)?, &c.table)?.element;
            rep.check(ok, || format!("case {i}"));
            Ok(())
        })?,
        "adjunction-cardinality" => per_subgroup(&ctx, &mut rep, |c, emb, _, r, rep, i| {
            let x = random_poset(emb.sub(), c.cfg.n, r, 4);
            let y = c.poset(r, 5);
            let lhs = count_morphisms(&MonomialPoset::induce(emb, &x)?, &y)?;
            let rhs = count_morphisms(&x, &y.restrict(emb)?)?;
            rep.check(lhs == rhs, || format!("case {i}: {lhs} vs {rhs}"));
            Ok(())
        })?,
        "units" => {
            let units = find_units(&ctx.table, 2)?;
            for u in &units {
                rep.check(u.unit_inverse().is_some(), || format!("{u} has no inverse"));
            }
            rep.notes.push(format!("{} units", units.len()));
        }
        _ => tensor_suite(name, &ctx, &mut rep)?,
    }
    Ok(rep)
}

fn per_case(
    ctx: &Ctx,
    rep: &mut SuiteReport,
    mut f: impl FnMut(&Ctx, &mut InstanceRng, &mut SuiteReport, usize) -> Result<()>,
) -> Result<()> {
    for i in 0..ctx.cfg.cases {
        let mut r = ctx.rng(i);
        skip_oversized(f(ctx, &mut r, rep, i), rep, i)?;
    }
    Ok(())
}

/// An instance too large to build is skipped with a note, not counted as a failure.
fn skip_oversized(outcome: Result<()>, rep: &mut SuiteReport, i: usize) -> Result<()> {
    match outcome {
        Err(e @ Error::SizeCap { .. }) => {
            rep.notes.push(format!("case {i} skipped: {e}"));
            Ok(())
        }
        other => other,
    }
}

/// Runs the cases over the proper nontrivial subgroups in turn.
fn per_subgroup(
    ctx: &Ctx,
    rep: &mut SuiteReport,
    mut f: impl FnMut(&Ctx, &Embedding, &Arc<SubcharTable>, &mut InstanceRng, &mut SuiteReport, usize) -> Result<()>,
) -> Result<()> {
    let g = &ctx.cfg.group;
    let subs: Vec<_> = g
        .all_subgroups()
        .into_iter()
        .filter(|u| u.order() > 1 && u.order() < g.order())
        .collect();
    let subs = if subs.is_empty() { vec![g.trivial_subgroup()] } else { subs };
    let embs: Vec<(Embedding, Arc<SubcharTable>)> = subs
        .into_iter()
        .map(|u| {
            let e = Embedding::new(Arc::clone(g), u)?;
            let t = SubcharTable::build(Arc::clone(e.sub()), ctx.cfg.n)?;
            Ok((e, t))
        })
        .collect::<Result<_>>()?;
    for i in 0..ctx.cfg.cases {
        let (e, t) = &embs[i % embs.len()];
        let mut r = ctx.rng(i);
        skip_oversized(f(ctx, e, t, &mut r, rep, i), rep, i)?;
    }
    Ok(())
}

fn ring_product_oracle(ctx: &Ctx, rep: &mut SuiteReport) -> Result<()> {
    let t = &ctx.table;
    let k = t.class_count();
    let sets: Vec<RawFibredSet> = (0..k)
        .map(|c| RawFibredSet::basis(Arc::clone(&ctx.cfg.group), ctx.cfg.n, t.class_rep(c)))
        .collect::<Result<_>>()?;
    for i in 0..k {
        for j in i..k {
            let direct = &BurnsideElement::basis_class(t, i) * &BurnsideElement::basis_class(t, j);
            let oracle = sets[i].tensor(&sets[j])?.decompose(t)?;
            rep.check(direct == oracle, || format!("classes {i}, {j}: {direct} vs {oracle}"));
        }
    }
    Ok(())
}

fn mark_convolution(ctx: &Ctx, rep: &mut SuiteReport) {
    let t = &ctx.table;
    let m = mark_matrix(t);
    for (i, row) in m.iter().enumerate() {
        let ok = row[i] > 0 && row[..i].iter().all(|&v| v == 0);
        rep.check(ok, || format!("mark matrix row {i} is not upper triangular with positive diagonal"));
    }
    let mut pointwise_failures = 0;
    for i in 0..ctx.cfg.cases {
        let mut r = ctx.rng(i);
        let a = random_element(t, &mut r, 4, 3);
        let b = random_element(t, &mut r, 4, 3);
        let (ma, mb) = (a.mark_vector(), b.mark_vector());
        let got = (&a * &b).mark_vector();
        rep.check(product_marks(t, &ma, &mb) == got, || format!("case {i}"));
        let pointwise: Vec<i64> = ma.iter().zip(&mb).map(|(x, y)| x * y).collect();
        if pointwise != got {
            pointwise_failures += 1;
        }
    }
    if ctx.cfg.n == 1 {
        rep.check(pointwise_failures == 0, || format!("pointwise law failed on {pointwise_failures} pairs"));
    } else {
        rep.notes.push(format!("pointwise product of marks differs on {pointwise_failures} pairs"));
    }
}

/// `psi(h) = -sum_u lambda(g, h, s, u)` over least orbit representatives `u`,
/// with `s` the representative of `u h` and `g s = u h`.
fn point_character_oracle(u: &MonomialBiset) -> Result<Subcharacter> {
    let (g, h, n) = (u.left(), u.right(), u.n());
    let orbit_min = |p: usize| g.elements().map(|x| u.left_act(x, p)).min().expect("nonempty group");
    let reps: Vec<usize> = (0..u.size()).filter(|&p| orbit_min(p) == p).collect();
    let values: Vec<u32> = h
        .elements()
        .map(|k| {
            let total: i64 = reps
                .iter()
                .map(|&p| {
                    let q = u.right_act(p, k);
                    let s = orbit_min(q);
                    let x = g.elements().find(|&x| u.left_act(x, s) == q).expect("same orbit");
                    u.lambda(x, k, s) as i64
                })
                .sum();
            (-total).rem_euclid(n as i64) as u32
        })
        .collect();
    Subcharacter::new(h, n, h.whole(), &values)
}

fn tensor_suite(name: &str, ctx: &Ctx, rep: &mut SuiteReport) -> Result<()> {
    let (g, h, n) = (&ctx.cfg.group, &ctx.cfg.right, ctx.cfg.n);
    let ht = ctx.right_table()?;
    let biset = |r: &mut InstanceRng, free: bool| random_biset(g, h, n, r, 8, free);
    match name {
        "tensor-point" => per_case(ctx, rep, |_, r, rep, i| {
            let u = biset(r, false)?;
            let t = tensor_induce_poset(&u, &MonomialPoset::point(Arc::clone(g), n)?, RepChoice::Least)?;
            let expected = if u.preserves_point() {
                MonomialPoset::point_with_character(Arc::clone(h), n, &point_character_oracle(&u)?)?
            } else {
                MonomialPoset::empty(Arc::clone(h), n)?
            };
            rep.check(t.poset == expected, || format!("case {i}"));
            Ok(())
        }),
        "tensor-empty" => per_case(ctx, rep, |c, r, rep, i| {
            let e = MonomialBiset::empty(Arc::clone(g), Arc::clone(h), n)?;
            let t = tensor_induce_poset(&e, &c.poset(r, 5), RepChoice::Least)?;
            rep.check(t.poset == MonomialPoset::point(Arc::clone(h), n)?, || format!("case {i}"));
            Ok(())
        }),
        "tensor-identity" => per_case(ctx, rep, |c, r, rep, i| {
            let x = c.poset(r, 5);
            rep.check(identity_law(&x)?, || format!("case {i}"));
            let a = random_element(&c.table, r, 4, 3);
            let id = MonomialBiset::identity(Arc::clone(g), n)?;
            rep.check(tensor_induce_ring_by_marks(&id, &a, &c.table)? == a, || format!("case {i}: {a}"));
            Ok(())
        }),
        "tensor-product" => per_case(ctx, rep, |c, r, rep, i| {
            let u = biset(r, false)?;
            let (x, y) = (c.poset(r, 3), c.poset(r, 2));
            if !u.preserves_point() {
                return Ok(());
            }
            let holds = product_law(&u, &x, &y)?;
            if u.stabilizers_character_free() {
                rep.check(holds, || format!("case {i}"));
            } else if !holds {
                rep.notes.push(format!("case {i}: fails for a biset with a stabiliser character, as expected"));
            }
            Ok(())
        }),
        "tensor-multiplicative" => per_case(ctx, rep, |c, r, rep, i| {
            let u = biset(r, false)?;
            let a = random_element(&c.table, r, 4, 3);
            let b = random_element(&c.table, r, 4, 3);
            let ta = tensor_induce_ring_by_marks(&u, &a, &ht)?;
            let tb = tensor_induce_ring_by_marks(&u, &b, &ht)?;
            let tab = tensor_induce_ring_by_marks(&u, &(&a * &b), &ht)?;
            let one = tensor_induce_ring_by_marks(&u, &BurnsideElement::one(&c.table), &ht)?;
            if !u.preserves_point() {
                rep.check(one.is_zero(), || format!("case {i}: unit"));
                return Ok(());
            }
            let psi = point_character_oracle(&u)?;
            rep.check(one == BurnsideElement::basis(&ht, &psi)?, || format!("case {i}: unit"));
            if u.stabilizers_character_free() {
                rep.check(&tab * &one == &ta * &tb, || format!("case {i}"));
                let na = tensor_induce_normalized(&u, &a, &ht)?;
                let nb = tensor_induce_normalized(&u, &b, &ht)?;
                let nab = tensor_induce_normalized(&u, &(&a * &b), &ht)?;
                rep.check(nab == &na * &nb, || format!("case {i}: normalised"));
                let n1 = tensor_induce_normalized(&u, &BurnsideElement::one(&c.table), &ht)?;
                rep.check(n1 == BurnsideElement::one(&ht), || format!("case {i}: normalised unit"));
            } else if &tab * &one != &ta * &tb {
                rep.notes.push(format!("case {i}: not multiplicative for a biset with a stabiliser character, as expected"));
            }
            Ok(())
        }),
        "tensor-disjoint-union" => per_case(ctx, rep, |c, r, rep, i| {
            let (u, u2) = (random_biset(g, h, n, r, 4, false)?, random_biset(g, h, n, r, 4, false)?);
            let x = c.poset(r, 3);
            let a = random_element(&c.table, r, 4, 3);
            let law = disjoint_union_law(&u, &u2, &x, &a, &ht)?;
            rep.check(law.explicit_isomorphism && law.ring_equal, || format!("case {i}: {law:?}"));
            Ok(())
        }),
        "tensor-composition" => {
            let k = Arc::clone(g);
            let kt = SubcharTable::build(Arc::clone(&k), n)?;
            per_case(ctx, rep, |c, r, rep, i| {
                let u = biset(r, false)?;
                let v = random_biset(h, &k, n, r, 8.max(h.order()), true)?;
                let x = c.poset(r, 3);
                let a = random_element(&c.table, r, 3, 2);
                let law = composition_law(&u, &v, &x, &a, &ht, &kt)?;
                rep.check(law.holds(), || format!("case {i}: {law:?}"));
                Ok(())
            })
        }
        "tensor-marks" => per_case(ctx, rep, |c, r, rep, i| {
            let u = biset(r, false)?;
            let x = c.poset(r, 4);
            let t = tensor_induce_poset(&u, &x, RepChoice::Least)?;
            let direct = fixed_point_marks(&t.poset, &ht)?;
            for (cls, &m) in direct.iter().enumerate() {
                let ghost = tensor_induce_marks(&u, &x, ht.class_rep(cls))?;
                rep.check(ghost == m, || format!("case {i}, class {cls}: {ghost} vs {m}"));
            }
            Ok(())
        }),
        "tensor-representatives" => per_case(ctx, rep, |c, r, rep, i| {
            let u = biset(r, false)?;
            rep.check(representative_independence(&u, &c.poset(r, 4))?, || format!("case {i}"));
            Ok(())
        }),
        "tensor-realization" => per_case(ctx, rep, |c, r, rep, i| {
            let u = random_biset(g, h, n, r, 3, false)?;
            let a = random_element(&c.table, r, 2, 1);
            rep.check(realization_independent(&u, &a, &ht)?, || format!("case {i}: {a}"));
            Ok(())
        }),
        "tensor-non-free" => {
            let r = non_free_counterexample()?;
            rep.check(!r.v_left_free, || "V is left free".into());
            rep.check(r.composite_is_identity, || "composite is not the identity biset".into());
            rep.check(r.composite_acts_as_identity, || "composite does not act as the identity".into());
            rep.check(r.witness.is_some(), || format!("no witness among {} candidates", r.tried));
            if let (Some(w), Some(img)) = (&r.witness, &r.image) {
                rep.notes.push(format!(
                    "witness: {} point(s), vertex characters {:?}; image has {} point(s)",
                    w.size(),
                    (0..w.size()).map(|p| w.vertex_character(p).values_on_members()).collect::<Vec<_>>(),
                    img.size()
                ));
            }
            Ok(())
        }
        "tensor-pairing" => {
            let gh = Arc::new(FiniteGroup::direct_product(g, h));
            let ght = SubcharTable::build(Arc::clone(&gh), n)?;
            let units = find_units(&ctx.table, 2)?;
            let classes = pairing_classes(&ght, g, h)?;
            rep.notes.push(format!("{} of {} biset classes have character-free stabilisers", classes.len(), ght.class_count()));
            per_case(ctx, rep, |_, r, rep, i| {
                let a = &units[i % units.len()];
                let a2 = &units[r.gen_range(0..units.len())];
                let mut combo = || {
                    let mut terms = Vec::new();
                    for &c in &classes {
                        if r.gen_bool(0.3) {
                            terms.push((c, r.gen_range(-2..=2)));
                        }
                    }
                    BurnsideElement::from_terms(&ght, terms)
                };
                let (b, b2) = (combo(), combo());
                let out = bilinear_pairing(&b, a, g, h, &ht)?;
                rep.check(out.unit_inverse().is_some(), || format!("case {i}: {out} is not a unit"));
                let sum = bilinear_pairing(&(&b + &b2), a, g, h, &ht)?;
                rep.check(sum == &out * &bilinear_pairing(&b2, a, g, h, &ht)?, || format!("case {i}: additive in b"));
                let prod = bilinear_pairing(&b, &(a * a2), g, h, &ht)?;
                rep.check(prod == &out * &bilinear_pairing(&b, a2, g, h, &ht)?, || format!("case {i}: multiplicative in a"));
                Ok(())
            })
        }
        _ => unreachable!("suite names are checked first"),
    }
}

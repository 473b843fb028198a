//! JSON formats for groups, subcharacters, ring elements, posets and bisets.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::burnside::{mark_matrix, BurnsideElement};
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_GROUP_CAP};
use crate::lefschetz::LefschetzReport;
use crate::monomial::MonomialPoset;
use crate::poset::Poset;
use crate::subchar::{SubcharTable, Subcharacter};
use crate::tensor::{MonomialBiset, TensorInductionResult};

fn input(e: impl std::fmt::Display) -> Error {
    Error::Input(e.to_string())
}

/// A group given by permutation generators or by its multiplication table.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDef {
    Permutations {
        #[serde(default)]
        name: Option<String>,
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        #[serde(default)]
        name: Option<String>,
        table: Vec<Vec<usize>>,
    },
}

impl GroupDef {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupDef::Permutations { name, degree, generators } => FiniteGroup::from_permutations(
                name.clone().unwrap_or_else(|| "G".into()),
                *degree,
                generators,
                DEFAULT_GROUP_CAP,
            ),
            GroupDef::Table { name, table } => {
                FiniteGroup::from_table(name.clone().unwrap_or_else(|| "G".into()), table)
            }
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDef::Table {
            name: Some(g.name().to_string()),
            table: g.table(),
        }
    }
}

/// A catalog name, a path to a group file, or an inline group.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupDef),
}

impl GroupRef {
    /// Relative paths are looked up from `base`.
    pub fn resolve(&self, base: Option<&Path>) -> Result<FiniteGroup> {
        match self {
            GroupRef::Inline(s) => s.build(),
            GroupRef::Name(name) => {
                if let Some(g) = catalog::by_name(name) {
                    return Ok(g);
                }
                let path = match base {
                    Some(b) => b.join(name),
                    None => Path::new(name).to_path_buf(),
                };
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| input(format!("unknown group {name:?}: {e}")))?;
                parse_group(&text)
            }
        }
    }
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    serde_json::from_str::<GroupDef>(text).map_err(input)?.build()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubcharJson {
    pub subgroup: Vec<usize>,
    /// Residues keyed by element; missing members take the value 0.
    #[serde(default)]
    pub values: BTreeMap<String, u32>,
}

impl SubcharJson {
    pub fn from_subchar(s: &Subcharacter) -> Self {
        Self {
            subgroup: s.subgroup().members().to_vec(),
            values: s
                .subgroup()
                .members()
                .iter()
                .filter(|&&x| s.value(x) != 0)
                .map(|&x| (x.to_string(), s.value(x)))
                .collect(),
        }
    }

    pub fn build(&self, group: &FiniteGroup, n: u32) -> Result<Subcharacter> {
        let mut members = self.subgroup.clone();
        members.sort_unstable();
        members.dedup();
        let sub = group.subgroup(&members)?;
        let mut values = vec![0u32; members.len()];
        for (k, &v) in &self.values {
            let x: usize = k.parse().map_err(|_| input(format!("bad element key {k:?}")))?;
            let i = members
                .binary_search(&x)
                .map_err(|_| input(format!("element {x} is not in the subgroup")))?;
            values[i] = v;
        }
        Subcharacter::new(group, n, sub, &values)
    }
}

pub fn parse_subchar(text: &str, group: &FiniteGroup, n: u32) -> Result<Subcharacter> {
    serde_json::from_str::<SubcharJson>(text).map_err(input)?.build(group, n)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(flatten)]
    pub subchar: SubcharJson,
    pub coeff: i64,
}

pub fn element_to_json(a: &BurnsideElement) -> Value {
    let table = a.table();
    let terms: Vec<TermJson> = a
        .coeffs()
        .iter()
        .map(|(&c, &k)| TermJson {
            subchar: SubcharJson::from_subchar(table.class_rep(c)),
            coeff: k,
        })
        .collect();
    serde_json::to_value(terms).expect("plain data")
}

/// Terms may name any member of a class; repeated classes add up.
pub fn parse_element(text: &str, table: &Arc<SubcharTable>) -> Result<BurnsideElement> {
    let terms: Vec<TermJson> = serde_json::from_str(text).map_err(input)?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let s = t.subchar.build(table.group(), table.n())?;
        out.push((table.class_of(&s)?, t.coeff));
    }
    Ok(BurnsideElement::from_terms(table, out))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleJson {
    pub g: usize,
    pub x: usize,
    pub y: usize,
    pub c: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CocycleJson {
    Shorthand(String),
    Triples(Vec<TripleJson>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub vertices: usize,
    pub leq: Vec<Vec<bool>>,
    pub action: Vec<Vec<usize>>,
    pub cocycle: CocycleJson,
}

impl PosetJson {
    pub fn from_poset(x: &MonomialPoset) -> Self {
        let s = x.size();
        let mut triples = Vec::new();
        for g in x.group().elements() {
            for a in 0..s {
                for b in 0..s {
                    if let Some(c) = x.cocycle(g, a, b) {
                        triples.push(TripleJson { g, x: a, y: b, c });
                    }
                }
            }
        }
        let cocycle = if triples.iter().all(|t| t.c == 0) {
            CocycleJson::Shorthand("trivial".into())
        } else {
            CocycleJson::Triples(triples)
        };
        Self {
            vertices: s,
            leq: x.poset().matrix(),
            action: x.action_rows(),
            cocycle,
        }
    }

    /// Every admissible triple must be listed unless the cocycle is `"trivial"`.
    pub fn build(&self, group: Arc<FiniteGroup>, n: u32) -> Result<MonomialPoset> {
        if self.leq.len() != self.vertices || self.leq.iter().any(|r| r.len() != self.vertices) {
            return Err(input("leq must be a vertices x vertices matrix"));
        }
        let poset = Poset::new(&self.leq)?;
        match &self.cocycle {
            CocycleJson::Shorthand(s) if s == "trivial" => {
                MonomialPoset::trivial(group, n, poset, &self.action)
            }
            CocycleJson::Shorthand(s) => Err(input(format!("unknown cocycle shorthand {s:?}"))),
            CocycleJson::Triples(list) => {
                let mut values: HashMap<(usize, usize, usize), u32> = HashMap::new();
                for t in list {
                    if t.c >= n {
                        return Err(input(format!("residue {} out of range for modulus {n}", t.c)));
                    }
                    if values.insert((t.g, t.x, t.y), t.c).is_some() {
                        return Err(input(format!("triple ({}, {}, {}) listed twice", t.g, t.x, t.y)));
                    }
                }
                let missing = std::cell::Cell::new(None);
                let x = MonomialPoset::new(group, n, poset, &self.action, |g, a, b| match values.get(&(g, a, b)) {
                    Some(&c) => c,
                    None => {
                        if missing.get().is_none() {
                            missing.set(Some((g, a, b)));
                        }
                        0
                    }
                });
                if let Some((g, a, b)) = missing.get() {
                    return Err(input(format!("cocycle value missing for ({g}, {a}, {b})")));
                }
                let x = x?;
                if let Some(t) = list.iter().find(|t| x.cocycle(t.g, t.x, t.y).is_none()) {
                    return Err(input(format!("triple ({}, {}, {}) is not admissible", t.g, t.x, t.y)));
                }
                Ok(x)
            }
        }
    }
}

pub fn poset_to_json(x: &MonomialPoset) -> Value {
    serde_json::to_value(PosetJson::from_poset(x)).expect("plain data")
}

pub fn parse_poset(text: &str, group: Arc<FiniteGroup>, n: u32) -> Result<MonomialPoset> {
    serde_json::from_str::<PosetJson>(text).map_err(input)?.build(group, n)
}

/// A poset file over `left x right` plus the two group references.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BisetJson {
    pub left: GroupRef,
    pub right: GroupRef,
    #[serde(flatten)]
    pub set: PosetJson,
}

pub fn parse_biset(text: &str, n: u32, base: Option<&Path>) -> Result<MonomialBiset> {
    let b: BisetJson = serde_json::from_str(text).map_err(input)?;
    let left = Arc::new(b.left.resolve(base)?);
    let right = Arc::new(b.right.resolve(base)?);
    let gh = Arc::new(FiniteGroup::direct_product(&left, &right));
    let set = b.set.build(gh, n)?;
    MonomialBiset::new(left, right, set)
}

pub fn biset_to_json(b: &MonomialBiset) -> Value {
    let json = BisetJson {
        left: GroupRef::Inline(GroupDef::from_group(b.left())),
        right: GroupRef::Inline(GroupDef::from_group(b.right())),
        set: PosetJson::from_poset(b.set()),
    };
    serde_json::to_value(json).expect("plain data")
}

/// The class list of `ch(G)` in basis order.
pub fn table_to_json(table: &SubcharTable) -> Value {
    let classes: Vec<Value> = (0..table.class_count())
        .map(|c| {
            let info = table.class(c);
            json!({
                "index": c,
                "rep": SubcharJson::from_subchar(table.class_rep(c)),
                "class_size": info.members.len(),
                "normalizer_order": info.normalizer.order(),
            })
        })
        .collect();
    json!({
        "group": table.group().name(),
        "order": table.group().order(),
        "n": table.n(),
        "classes": classes,
    })
}

/// Row `i` holds the marks at class `i` of every basis element.
pub fn marks_to_json(table: &SubcharTable) -> Value {
    let header: Vec<SubcharJson> = (0..table.class_count())
        .map(|c| SubcharJson::from_subchar(table.class_rep(c)))
        .collect();
    json!({ "classes": header, "marks": mark_matrix(table) })
}

pub fn lefschetz_to_json(r: &LefschetzReport) -> Value {
    let table = r.element.table();
    let per_class: Vec<Value> = (0..table.class_count())
        .filter(|&c| r.m[c] != 0 || r.gamma[c] != 0)
        .map(|c| {
            json!({
                "class": SubcharJson::from_subchar(table.class_rep(c)),
                "m": r.m[c],
                "gamma": r.gamma[c],
            })
        })
        .collect();
    json!({
        "element": element_to_json(&r.element),
        "text": r.element.to_string(),
        "classes": per_class,
        "degrees": r.degrees,
    })
}

pub fn tensor_result_to_json(t: &TensorInductionResult) -> Value {
    json!({
        "poset": poset_to_json(&t.poset),
        "representatives": t.reps,
        "maps": t.maps,
    })
}

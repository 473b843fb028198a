//! Plain finite posets, chains and Euler characteristics.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(leq: &[Vec<bool>]) -> Result<Self> {
        let size = leq.len();
        if leq.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidPoset("order matrix is not square".into()));
        }
        let p = Self {
            size,
            leq: leq.iter().flatten().copied().collect(),
        };
        p.check()?;
        Ok(p)
    }

    pub(crate) fn from_flat(size: usize, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), size * size);
        Self { size, leq }
    }

    pub fn discrete(size: usize) -> Self {
        let mut leq = vec![false; size * size];
        for x in 0..size {
            leq[x * size + x] = true;
        }
        Self { size, leq }
    }

    pub(crate) fn check(&self) -> Result<()> {
        let n = self.size;
        for x in 0..n {
            if !self.leq(x, x) {
                return Err(Error::InvalidPoset(format!("not reflexive at {x}")));
            }
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Err(Error::InvalidPoset(format!("not antisymmetric at ({x}, {y})")));
                }
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size.max(1)).take(self.size).map(<[bool]>::to_vec).collect()
    }

    pub fn opposite(&self) -> Self {
        let n = self.size;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[y * n + x] = self.leq(x, y);
            }
        }
        Self { size: n, leq }
    }

    /// The induced subposet on `points`, relabelled `0..points.len()`.
    pub fn induced(&self, points: &[usize]) -> Self {
        let k = points.len();
        let mut leq = vec![false; k * k];
        for (i, &x) in points.iter().enumerate() {
            for (j, &y) in points.iter().enumerate() {
                leq[i * k + j] = self.leq(x, y);
            }
        }
        Self { size: k, leq }
    }

    /// Points in an order compatible with `<` (smaller points first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut pts: Vec<usize> = (0..self.size).collect();
        pts.sort_by_key(|&x| (0..self.size).filter(|&y| self.lt(y, x)).count());
        pts
    }

    /// Entry `k` counts the chains `x_0 < ... < x_k`.
    pub fn chain_counts(&self) -> Vec<u64> {
        let n = self.size;
        if n == 0 {
            return Vec::new();
        }
        // starting[x][k]: chains with k + 1 elements whose least element is x
        let order = self.linear_extension();
        let mut starting = vec![Vec::<u64>::new(); n];
        for &x in order.iter().rev() {
            let mut row = vec![1u64];
            for y in 0..n {
                if self.lt(x, y) {
                    let above = &starting[y];
                    if row.len() < above.len() + 1 {
                        row.resize(above.len() + 1, 0);
                    }
                    for (k, &c) in above.iter().enumerate() {
                        row[k + 1] += c;
                    }
                }
            }
            starting[x] = row;
        }
        let len = starting.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![0u64; len];
        for row in &starting {
            for (k, &c) in row.iter().enumerate() {
                out[k] += c;
            }
        }
        out
    }

    /// `sum_k (-1)^k #{x_0 < ... < x_k}`; the empty poset gives 0.
    pub fn euler_characteristic(&self) -> i64 {
        self.chain_counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Every chain `x_0 < ... < x_k` with `k + 1 = len`, in lexicographic order.
    pub fn chains_of_length(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if len == 0 {
            return out;
        }
        let mut cur = Vec::with_capacity(len);
        for x in 0..self.size {
            cur.push(x);
            self.extend_chains(&mut cur, len, &mut out);
            cur.pop();
        }
        out
    }

    fn extend_chains(&self, cur: &mut Vec<usize>, len: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let last = *cur.last().expect("non-empty");
        for y in 0..self.size {
            if self.lt(last, y) {
                cur.push(y);
                self.extend_chains(cur, len, out);
                cur.pop();
            }
        }
    }

    /// Whether some point is above every other point.
    pub fn has_maximum(&self) -> bool {
        (0..self.size).any(|m| (0..self.size).all(|x| self.leq(x, m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn five_point() -> Poset {
        // a, b < c, d, e
        let mut m = vec![vec![false; 5]; 5];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for low in 0..2 {
            for high in 2..5 {
                m[low][high] = true;
            }
        }
        Poset::new(&m).unwrap()
    }

    #[test]
    fn euler_examples() {
        assert_eq!(Poset::discrete(0).euler_characteristic(), 0);
        assert_eq!(Poset::discrete(1).euler_characteristic(), 1);
        let w = five_point();
        assert_eq!(w.chain_counts(), vec![5, 6]);
        assert_eq!(w.euler_characteristic(), -1);
        assert_eq!(w.chains_of_length(2).len(), 6);
        assert!(w.chains_of_length(3).is_empty());
    }

    #[test]
    fn rejects_cycles() {
        let m = vec![vec![true, true], vec![true, true]];
        assert!(Poset::new(&m).is_err());
        let m = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        assert!(Poset::new(&m).is_err());
    }

    fn arb_poset() -> impl Strategy<Value = Poset> {
        (1usize..7).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                // keep only relations i < j in index order, then close transitively
                let mut leq = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        leq[i * n + j] = i == j || (i < j && bits[i * n + j]);
                    }
                }
                for k in 0..n {
                    for i in 0..n {
                        for j in 0..n {
                            if leq[i * n + k] && leq[k * n + j] {
                                leq[i * n + j] = true;
                            }
                        }
                    }
                }
                Poset::from_flat(n, leq)
            })
        })
    }

    proptest! {
        #[test]
        fn chain_counts_match_enumeration(p in arb_poset()) {
            prop_assert!(p.check().is_ok());
            let counts = p.chain_counts();
            for (k, &c) in counts.iter().enumerate() {
                prop_assert_eq!(p.chains_of_length(k + 1).len() as u64, c);
            }
            prop_assert_eq!(p.opposite().euler_characteristic(), p.euler_characteristic());
        }

        #[test]
        fn cone_is_contractible(p in arb_poset()) {
            // adjoin a top element
            let n = p.size();
            let mut leq = vec![false; (n + 1) * (n + 1)];
            for i in 0..n {
                for j in 0..n {
                    leq[i * (n + 1) + j] = p.leq(i, j);
                }
                leq[i * (n + 1) + n] = true;
            }
            leq[n * (n + 1) + n] = true;
            let cone = Poset::from_flat(n + 1, leq);
            prop_assert!(cone.has_maximum());
            prop_assert_eq!(cone.euler_characteristic(), 1);
        }
    }
}

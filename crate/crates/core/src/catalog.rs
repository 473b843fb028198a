//! Small named groups.

use crate::group::{FiniteGroup, DEFAULT_GROUP_CAP};

/// Names accepted by [`by_name`], in listing order.
pub const NAMES: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "V4", "S3", "D8", "Q8", "A4", "D10", "D12", "S4",
];

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

pub fn klein4() -> FiniteGroup {
    perms("V4", 4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]])
}

pub fn symmetric(k: usize) -> FiniteGroup {
    if k < 2 {
        return FiniteGroup::trivial().with_name(format!("S{k}"));
    }
    let mut swap: Vec<usize> = (0..k).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    perms(&format!("S{k}"), k, &[swap, cycle])
}

pub fn alternating4() -> FiniteGroup {
    perms("A4", 4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
}

/// The dihedral group with `order` elements, acting on `order / 2` points.
pub fn dihedral(order: usize) -> FiniteGroup {
    assert!(order >= 6 && order.is_multiple_of(2), "dihedral order must be even and at least 6");
    let m = order / 2;
    let rot: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
    let refl: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    perms(&format!("D{order}"), m, &[rot, refl])
}

/// The quaternion group, through its regular representation on 8 points.
pub fn quaternion8() -> FiniteGroup {
    perms(
        "Q8",
        8,
        &[vec![1, 3, 5, 6, 2, 7, 0, 4], vec![2, 4, 3, 7, 6, 1, 5, 0]],
    )
}

fn perms(name: &str, degree: usize, gens: &[Vec<usize>]) -> FiniteGroup {
    FiniteGroup::from_permutations(name, degree, gens, DEFAULT_GROUP_CAP)
        .expect("catalog generators are permutations")
}

pub fn by_name(name: &str) -> Option<FiniteGroup> {
    let g = match name {
        "C1" | "1" => FiniteGroup::trivial(),
        "C2" => cyclic(2),
        "C3" => cyclic(3),
        "C4" => cyclic(4),
        "C5" => cyclic(5),
        "C6" => cyclic(6),
        "V4" | "C2xC2" => klein4(),
        "S3" => symmetric(3),
        "D8" => dihedral(8),
        "Q8" => quaternion8(),
        "A4" => alternating4(),
        "D10" => dihedral(10),
        "D12" => dihedral(12),
        "S4" => symmetric(4),
        _ => return None,
    };
    Some(g.with_name(name))
}

pub fn all() -> Vec<FiniteGroup> {
    NAMES.iter().map(|n| by_name(n).expect("listed")).collect()
}

use std::collections::BTreeSet;

use crate::polyform::{Cell, Family, Polyform};

/// Every fixed n-form of the family (distinct up to translation only),
/// grown level by level from single cells.
pub fn enumerate_fixed(family: Family, n: usize) -> Vec<Polyform> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Polyform> = (0..family.cell_types())
        .map(|t| Polyform::new(family, vec![Cell::new(0, 0, t)]).normalized())
        .collect();
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for f in &level {
            let set = f.cell_set();
            for &c in &f.cells {
                for nb in family.neighbors(c) {
                    if set.contains(&nb) || f.cells.iter().any(|&o| family.cells_conflict(o, nb)) {
                        continue;
                    }
                    let mut cells = f.cells.clone();
                    cells.push(nb);
                    next.insert(Polyform::new(family, cells).normalized());
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// One representative per class modulo translation and rotation.
pub fn enumerate_one_sided(family: Family, n: usize) -> Vec<Polyform> {
    let set: BTreeSet<Polyform> = enumerate_fixed(family, n).iter().map(|f| f.canonical()).collect();
    set.into_iter().collect()
}

use std::collections::BTreeSet;

use proptest::prelude::*;

use hingekit::exactnum::ApproxScalar;
use hingekit::polyform::{enumerate_fixed, enumerate_one_sided, gluing_sequence, Cell, Family, Polyform};

type Key = Vec<(i64, i64)>;

fn key_of(pts: &[(f64, f64)]) -> Key {
    let mut k: Key = pts.iter().map(|&(x, y)| ((x * 1e6).round() as i64, (y * 1e6).round() as i64)).collect();
    k.sort();
    k
}

fn reflect(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let t = ((p.0 - a.0) * dx + (p.1 - a.1) * dy) / (dx * dx + dy * dy);
    let foot = (a.0 + t * dx, a.1 + t * dy);
    (2.0 * foot.0 - p.0, 2.0 * foot.1 - p.1)
}

fn half_turn(p: (f64, f64), c: (f64, f64)) -> (f64, f64) {
    (2.0 * c.0 - p.0, 2.0 * c.1 - p.1)
}

fn area(p: &[(f64, f64)]) -> f64 {
    (0..p.len()).map(|i| {
        let (a, b) = (p[i], p[(i + 1) % p.len()]);
        a.0 * b.1 - a.1 * b.0
    }).sum::<f64>().abs() / 2.0
}

/// Overlap test for convex lattice cells of equal shape.
fn overlaps(p: &[(f64, f64)], q: &[(f64, f64)]) -> bool {
    let c = |v: &[(f64, f64)]| {
        let n = v.len() as f64;
        (v.iter().map(|a| a.0).sum::<f64>() / n, v.iter().map(|a| a.1).sum::<f64>() / n)
    };
    let inside = |v: &[(f64, f64)], pt: (f64, f64)| {
        let sides: Vec<f64> = (0..v.len())
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % v.len()]);
                (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0)
            })
            .collect();
        sides.iter().all(|&s| s > 1e-9) || sides.iter().all(|&s| s < -1e-9)
    };
    // Centroid plus the midpoints from it to each vertex: half-squares that
    // share a diagonal have their centroids on each other's boundary.
    let samples = |v: &[(f64, f64)]| {
        let m = c(v);
        let mut s: Vec<(f64, f64)> = v.iter().map(|&(x, y)| ((x + m.0) / 2.0, (y + m.1) / 2.0)).collect();
        s.push(m);
        s
    };
    samples(q).into_iter().any(|pt| inside(p, pt)) || samples(p).into_iter().any(|pt| inside(q, pt))
}

/// Cells as rounded vertex keys, translated so the lowest then leftmost
/// vertex is the origin.
fn normalize(cells: &Vec<Vec<(f64, f64)>>) -> Vec<Key> {
    let r = |v: f64| (v * 1e6).round() as i64;
    let &(mx, my) = cells.iter().flatten().min_by_key(|&&(x, y)| (r(y), r(x))).unwrap();
    let mut out: Vec<Key> =
        cells.iter().map(|c| key_of(&c.iter().map(|&(x, y)| (x - mx, y - my)).collect::<Vec<_>>())).collect();
    out.sort();
    out
}

/// Fixed polyforms as sets of cell polygons up to translation, grown by
/// reflecting cells across their edges (mirror and half-turn images).
fn oracle_fixed(seed: Vec<(f64, f64)>, n: usize) -> BTreeSet<Vec<Key>> {
    let cell_area = area(&seed);
    let mut level: Vec<Vec<Vec<(f64, f64)>>> = vec![vec![seed]];
    let mut seen = BTreeSet::new();
    for _ in 1..n {
        let mut next = Vec::new();
        seen.clear();
        for form in &level {
            for cell in form {
                for i in 0..cell.len() {
                    let (a, b) = (cell[i], cell[(i + 1) % cell.len()]);
                    let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
                    let imgs = [
                        cell.iter().map(|&p| reflect(p, a, b)).collect::<Vec<_>>(),
                        cell.iter().map(|&p| half_turn(p, mid)).collect::<Vec<_>>(),
                    ];
                    for img in imgs {
                        if (area(&img) - cell_area).abs() > 1e-9 || form.iter().any(|c| overlaps(c, &img)) {
                            continue;
                        }
                        let mut g = form.clone();
                        g.push(img);
                        if seen.insert(normalize(&g)) {
                            next.push(g);
                        }
                    }
                }
            }
        }
        level = next;
    }
    level.iter().map(|f| normalize(f)).collect()
}

fn seed(f: Family) -> Vec<(f64, f64)> {
    f.polygon::<ApproxScalar>(Cell::new(0, 0, 0)).to_f64()
}

fn library_keys(forms: &[Polyform]) -> BTreeSet<Vec<Key>> {
    forms
        .iter()
        .map(|f| normalize(&f.cell_polygons::<ApproxScalar>().iter().map(|p| p.to_f64()).collect()))
        .collect()
}

#[test]
fn fixed_counts_match_geometric_oracle() {
    // Oracle outputs, frozen.
    let frozen: [(Family, &[usize]); 4] = [
        (Family::Omino, &[1, 2, 6, 19, 63]),
        (Family::Iamond, &[2, 3, 6, 14, 36]),
        (Family::Hex, &[1, 3, 11, 44, 186]),
        (Family::Abolo, &[4, 10, 32, 117]),
    ];
    for (fam, counts) in frozen {
        for (i, &want) in counts.iter().enumerate() {
            let n = i + 1;
            let forms = enumerate_fixed(fam, n);
            assert_eq!(forms.len(), want, "{fam:?} n={n}");
            // Iamond seeds differ by orientation; the oracle grows from both.
            let mut oracle = oracle_fixed(seed(fam), n);
            if fam == Family::Iamond {
                oracle.extend(oracle_fixed(fam.polygon::<ApproxScalar>(Cell::new(0, 0, 1)).to_f64(), n));
            }
            if fam == Family::Abolo {
                for t in 1..4 {
                    oracle.extend(oracle_fixed(fam.polygon::<ApproxScalar>(Cell::new(0, 0, t)).to_f64(), n));
                }
            }
            assert_eq!(oracle.len(), want, "oracle {fam:?} n={n}");
            assert_eq!(library_keys(&forms), oracle, "{fam:?} n={n}");
        }
    }
}

#[test]
fn one_sided_counts() {
    let expected: [(Family, &[usize]); 3] = [
        (Family::Omino, &[1, 1, 2, 7, 18, 60]),
        (Family::Iamond, &[1, 1, 1, 4, 6, 19]),
        (Family::Hex, &[1, 1, 3, 10, 33]),
    ];
    for (fam, counts) in expected {
        for (i, &want) in counts.iter().enumerate() {
            assert_eq!(enumerate_one_sided(fam, i + 1).len(), want, "{fam:?} n={}", i + 1);
        }
    }
}

#[test]
fn rotation_is_a_lattice_symmetry() {
    for fam in Family::ALL {
        for c in [Cell::new(0, 0, 0), Cell::new(2, -1, 0), Cell::new(-3, 4, fam.cell_types() - 1)] {
            let mut r = c;
            for _ in 0..fam.rotations() {
                r = fam.rotate(r);
            }
            assert_eq!(r, c, "{fam:?} rotations close up");
            let before = fam.polygon::<ApproxScalar>(c).to_f64();
            let after = fam.polygon::<ApproxScalar>(fam.rotate(c)).to_f64();
            let turn = std::f64::consts::TAU / fam.rotations() as f64;
            let rotated: Vec<(f64, f64)> =
                before.iter().map(|&(x, y)| (x * turn.cos() - y * turn.sin(), x * turn.sin() + y * turn.cos())).collect();
            assert_eq!(key_of(&rotated), key_of(&after), "{fam:?} {c:?}");
        }
    }
}

fn arb_form() -> impl Strategy<Value = Polyform> {
    (0usize..4, 1usize..=5, any::<prop::sample::Index>()).prop_map(|(f, n, pick)| {
        let fam = Family::ALL[f];
        let n = if fam == Family::Omino { n } else { n.min(4) };
        let all = enumerate_fixed(fam, n);
        all[pick.index(all.len())].clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_is_rotation_and_translation_invariant(f in arb_form(), dx in -5i32..5, dy in -5i32..5) {
        let moved = Polyform::new(f.family, f.cells.iter().map(|&c| f.family.shift(c, dx, dy)).collect());
        prop_assert_eq!(moved.normalized(), f.normalized());
        prop_assert_eq!(f.rotated().canonical(), f.canonical());
        let c = f.canonical();
        prop_assert_eq!(c.canonical(), c);
    }

    #[test]
    fn adjacency_is_symmetric_and_connected(f in arb_form()) {
        let adj = f.adjacency();
        for (i, ns) in adj.iter().enumerate() {
            for &j in ns {
                prop_assert!(adj[j].contains(&i));
                prop_assert!(f.family.neighbors(f.cells[i]).contains(&f.cells[j]));
            }
        }
        prop_assert!(f.is_connected());
        prop_assert!(f.validate().is_ok());
    }

    #[test]
    fn gluing_sequence_attaches_to_earlier_neighbours(f in arb_form()) {
        let adj = f.adjacency();
        let seq = gluing_sequence(&adj);
        prop_assert_eq!(seq.len(), f.len());
        prop_assert_eq!(seq[0].parent, None);
        let mut placed = vec![false; f.len()];
        placed[seq[0].cell] = true;
        for s in &seq[1..] {
            let p = s.parent.unwrap();
            prop_assert!(placed[p] && !placed[s.cell] && adj[p].contains(&s.cell));
            placed[s.cell] = true;
        }
        // The first cell is a leaf of the spanning tree: it is the parent of
        // exactly the second cell.
        if f.len() > 1 {
            let kids = seq[1..].iter().filter(|s| s.parent == Some(seq[0].cell)).count();
            prop_assert_eq!(kids, 1);
        }
    }
}

#[test]
fn disconnected_forms_are_rejected() {
    let f = Polyform::new(Family::Omino, vec![Cell::new(0, 0, 0), Cell::new(2, 0, 0)]);
    assert!(!f.is_connected());
    assert!(f.validate().is_err());
    let overlapping = Polyform::new(Family::Abolo, vec![Cell::new(0, 0, 0), Cell::new(0, 0, 1)]);
    assert!(overlapping.validate().is_err());
}

fn omino(cells: &[(i32, i32)]) -> Polyform {
    Polyform::new(Family::Omino, cells.iter().map(|&(x, y)| Cell::new(x, y, 0)).collect())
}

#[test]
fn cell_polygons() {
    use hingekit::exactnum::{ExactScalar, Scalar};
    use hingekit::geom::Point;
    type E = ExactScalar;
    let sq = Family::Omino.polygon::<E>(Cell::new(0, 0, 0));
    assert_eq!(sq.0, vec![Point::int(0, 0), Point::int(1, 0), Point::int(1, 1), Point::int(0, 1)]);
    let up = Family::Iamond.polygon::<E>(Cell::new(0, 0, 0));
    assert_eq!(up.0, vec![Point::int(0, 0), Point::int(1, 0), Point::new(E::ratio(1, 2), E::sqrt3().half())]);
    // Half-square cells keep their right angle at the named corner.
    let sw = Family::Abolo.polygon::<E>(Cell::new(0, 0, 0));
    assert_eq!(sw.0, vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)]);
    for fam in Family::ALL {
        for t in 0..fam.cell_types() {
            let p = fam.polygon::<E>(Cell::new(1, -2, t));
            assert!(p.is_ccw() && p.area().is_pos(), "{fam:?} {t}");
        }
    }
}

#[test]
fn adjacency_shapes() {
    let i3 = omino(&[(0, 0), (1, 0), (2, 0)]);
    assert_eq!(i3.adjacency(), vec![vec![1], vec![0, 2], vec![1]]);
    let x = omino(&[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]);
    let mut deg: Vec<usize> = x.adjacency().iter().map(Vec::len).collect();
    deg.sort();
    assert_eq!(deg, vec![1, 1, 1, 1, 4]);
    assert_eq!(omino(&[(0, 0)]).adjacency(), vec![Vec::<usize>::new()]);
    let seq = gluing_sequence(&omino(&[(0, 0), (1, 0)]).adjacency());
    assert_eq!(seq.len(), 2);
    assert_eq!(seq[1].parent, Some(seq[0].cell));
}

#[test]
fn canonical_keys() {
    let l3 = omino(&[(0, 0), (1, 0), (0, 1)]);
    assert_eq!(l3.rotated().canonical(), l3.canonical());
    let l4 = omino(&[(0, 0), (0, 1), (0, 2), (1, 0)]);
    let j4 = omino(&[(1, 0), (1, 1), (1, 2), (0, 0)]);
    assert_ne!(l4.canonical(), j4.canonical());
    let s = omino(&[(0, 0), (1, 0), (1, 1), (2, 1)]);
    let z = omino(&[(1, 0), (2, 0), (0, 1), (1, 1)]);
    assert_ne!(s.canonical(), z.canonical());
}

#[test]
fn regions_and_holes() {
    use hingekit::exactnum::{ExactScalar, Scalar};
    let domino = omino(&[(0, 0), (1, 0)]).region::<ExactScalar>();
    assert_eq!(domino.holes(), 0);
    assert_eq!(domino.area(), ExactScalar::int(2));
    let ring: Vec<(i32, i32)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).filter(|&c| c != (1, 1)).collect();
    let r = omino(&ring).region::<ExactScalar>();
    assert_eq!(r.holes(), 1);
    assert_eq!(r.area(), ExactScalar::int(8));
    for fam in Family::ALL {
        let cell = fam.polygon::<ExactScalar>(Cell::new(0, 0, 0)).area();
        for f in enumerate_fixed(fam, 3) {
            assert_eq!(f.region::<ExactScalar>().area(), cell.mul(&ExactScalar::int(3)));
        }
    }
}

/// Every gluing order over every spanning tree keeps each prefix connected
/// and gives the first cell exactly one child.
#[test]
fn prefixes_over_all_spanning_trees() {
    let shapes: [(&[(i32, i32)], usize); 3] = [
        (&[(0, 0), (1, 0), (2, 0), (1, 1)], 1),
        (&[(0, 0), (1, 0), (0, 1), (1, 1)], 4),
        (&[(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)], 4),
    ];
    for (cells, want) in shapes {
        let t = omino(cells);
        let n = t.len();
        let adj = t.adjacency();
        let edges: Vec<(usize, usize)> = adj
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect();
        let mut trees = 0;
        for mask in 0u32..1 << edges.len() {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let mut tree = vec![Vec::new(); n];
            for (k, &(a, b)) in edges.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    tree[a].push(b);
                    tree[b].push(a);
                }
            }
            if !is_tree(&tree) {
                continue;
            }
            let seq = gluing_sequence(&tree);
            assert_eq!(seq.len(), n);
            for k in 1..=n {
                let prefix = seq[..k].iter().map(|s| t.cells[s.cell]).collect();
                assert!(Polyform::new(Family::Omino, prefix).is_connected());
            }
            trees += 1;
            assert_eq!(seq[1..].iter().filter(|s| s.parent == Some(seq[0].cell)).count(), 1);
        }
        assert_eq!(trees, want, "{cells:?}");
    }
}

fn is_tree(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[test]
fn fixed_sets_are_closed_under_rotation() {
    for fam in Family::ALL {
        let n = if fam == Family::Omino { 6 } else { 4 };
        let forms: BTreeSet<Polyform> = enumerate_fixed(fam, n).into_iter().collect();
        for f in &forms {
            assert!(forms.contains(&f.rotated().normalized()), "{fam:?} {:?}", f.cells);
        }
    }
}

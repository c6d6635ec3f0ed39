use proptest::prelude::*;

use hingekit::dissect::{
    add_midpoint_hinges_derived, chain_to_cycle, chain_to_cycle_derived, concat_extendible, cut_restricted,
    dudeney_chain, dudeney_extendible_chain, h_polyabolo_4n, h_polyomino_2n, h_polyomino_2nm2, h_polyregular_half,
    h_polyregular_half_m1, h_polyregular_kn, h_polyregular_knmk, h_restricted, signature, signatures_equal, Folding,
    Hinge, HingedDissection, Topology,
};
use hingekit::exactnum::{ApproxScalar, ExactScalar, Scalar};
use hingekit::geom::{Point, Polygon};
use hingekit::verify::verify_parts;

type E = ExactScalar;
type A = ApproxScalar;

fn pt(x: i64, y: i64) -> Point<E> {
    Point::int(x, y)
}

fn unit_square() -> Polygon<E> {
    Polygon(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)])
}

/// Same cycle walked the other way round.
fn reversed<S: Scalar>(d: &HingedDissection<S>) -> HingedDissection<S> {
    let n = d.len();
    let pieces = d.pieces.iter().rev().cloned().collect();
    let mut hinges: Vec<Option<Hinge>> = vec![None; d.hinges.len()];
    for h in &d.hinges {
        let (a, b) = (n - 1 - h.b.piece, n - 1 - h.a.piece);
        let slot = if d.topology == Topology::Cycle { a } else { a.min(b) };
        hinges[slot] = Some(Hinge::new(a, h.b.vertex, b, h.a.vertex));
    }
    HingedDissection { pieces, hinges: hinges.into_iter().map(Option::unwrap).collect(), topology: d.topology }
}

fn anchor_points<S: Scalar>(d: &HingedDissection<S>) -> Vec<Point<S>> {
    d.hinges.iter().flat_map(|h| [d.anchor(h.a).clone(), d.anchor(h.b).clone()]).collect()
}

#[test]
fn polyomino_families() {
    let d = h_polyomino_2n::<E>(1).unwrap();
    assert_eq!((d.len(), d.hinges.len()), (2, 2));
    assert_eq!(h_polyomino_2n::<E>(4).unwrap().len(), 8);
    assert_eq!(h_polyomino_2nm2::<E>(2).unwrap().len(), 2);
    assert_eq!(h_polyomino_2nm2::<E>(5).unwrap().len(), 8);
    let a = h_polyomino_2nm2::<E>(5).unwrap();
    let b = h_polyomino_2n::<E>(4).unwrap();
    assert_eq!(a.len(), b.len());
    assert!(!signatures_equal(&a, &b));
}

#[test]
fn polyregular_families() {
    assert_eq!(h_polyregular_kn::<E>(3, 1).unwrap().len(), 3);
    assert_eq!(h_polyregular_kn::<E>(4, 2).unwrap().len(), 8);
    // k = 6: apex angle 60 degrees, so every piece is equilateral.
    for p in &h_polyregular_kn::<E>(6, 1).unwrap().pieces {
        assert_eq!(p.len(), 3);
        let sides: Vec<E> = p.edges().map(|(a, b)| b.sub(a).norm2()).collect();
        assert!(sides.iter().all(|s| s.same(&sides[0])));
    }
    assert_eq!(h_polyregular_knmk::<E>(3, 2).unwrap().len(), 3);
    assert_eq!(h_polyregular_knmk::<E>(3, 3).unwrap().len(), 6);
    assert_eq!(h_polyregular_knmk::<A>(5, 4).unwrap().len(), 15);
    assert!(h_polyregular_knmk::<E>(5, 4).is_err(), "k = 5 has no exact coordinates");
    let m = h_polyregular_half::<E>(3, 1).unwrap();
    assert_eq!(m.len(), 2);
    assert!(m.pieces[0].area().cmp_s(&m.pieces[1].area()) != std::cmp::Ordering::Equal, "one double, one single");
    assert_eq!(h_polyregular_half::<E>(3, 4).unwrap().len(), 8);
    let half4 = h_polyregular_half::<E>(4, 3).unwrap();
    assert_eq!(half4.len(), 6);
    assert!(signatures_equal(&half4, &h_polyomino_2n::<E>(3).unwrap()));
    assert_eq!(h_polyregular_half_m1::<E>(3, 2).unwrap().len(), 2);
    assert_eq!(h_polyregular_half_m1::<E>(3, 4).unwrap().len(), 6);
    assert_eq!(h_polyregular_half_m1::<E>(6, 3).unwrap().len(), 6);
}

#[test]
fn single_triangles_repeat_with_period_half_k() {
    for (k, n) in [(3, 4), (3, 5), (5, 3), (7, 2)] {
        let d = h_polyregular_half::<A>(k, n).unwrap();
        let small = d.pieces.iter().map(|p| p.area().to_f64()).fold(f64::INFINITY, f64::min);
        let singles: Vec<usize> =
            (0..d.len()).filter(|&i| (d.pieces[i].area().to_f64() - small).abs() < 1e-9).collect();
        let period = (k + 1) / 2;
        assert_eq!(singles.len(), n, "k={k} n={n}: one single triangle per copy");
        assert!(singles.iter().all(|&i| i % period == singles[0] % period), "k={k} n={n}: {singles:?}");
    }
}

#[test]
fn polyabolo_family() {
    assert_eq!(h_polyabolo_4n::<E>(1).unwrap().len(), 4);
    let d = h_polyabolo_4n::<E>(3).unwrap();
    assert_eq!(d.len(), 12);
    // Half unit squares have area 1/2; each piece is a quarter of one.
    assert!(d.pieces.iter().all(|p| p.area() == E::ratio(1, 8)));
}

#[test]
fn cut_restricted_examples() {
    let sq = cut_restricted(&unit_square()).unwrap();
    assert_eq!(sq.len(), 4);
    for corner in &unit_square().0 {
        assert_eq!(sq.pieces.iter().filter(|p| p.vertex_index(corner).is_some()).count(), 1);
    }
    let l = Polygon(vec![pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)]);
    let d = cut_restricted(&l).unwrap();
    assert_eq!(d.len(), 6);
    let anchors = anchor_points(&d);
    for (a, b) in l.edges() {
        assert!(anchors.iter().any(|p| p.same(&a.mid(b))), "midpoint of {a:?}-{b:?}");
    }
    assert_eq!(h_restricted(&unit_square(), 2).unwrap().len(), 8);
    let tri = Polygon(vec![pt(0, 0), pt(1, 0), Point::new(E::ratio(1, 2), E::sqrt3().half())]);
    assert!(signatures_equal(&h_restricted(&tri, 1).unwrap(), &cut_restricted(&tri).unwrap()));
    let pent: Polygon<A> = Polygon(
        (0..5)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / 5.0;
                Point::new(ApproxScalar(t.cos()), ApproxScalar(t.sin()))
            })
            .collect(),
    );
    assert_eq!(h_restricted(&pent, 3).unwrap().len(), 15);
}

#[test]
fn restricted_rejects_non_simple_input() {
    let bow = Polygon(vec![pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)]);
    assert!(cut_restricted(&bow).is_err());
    let straight = Polygon(vec![pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 1), pt(0, 1)]);
    assert!(cut_restricted(&straight).is_err());
}

#[test]
fn chain_to_cycle_on_small_chains() {
    let (chain, _, _) = dudeney_chain();
    let c = chain_to_cycle(&chain).unwrap();
    assert!(c.len() <= 9);
    assert_eq!(c.hinges.len(), c.len());
    assert_eq!(c.topology, Topology::Cycle);
    // Two dominoes' worth: one hinge between two squares.
    let two: HingedDissection<E> = HingedDissection::chain(
        vec![(unit_square(), 0, 1), (Polygon(vec![pt(1, 0), pt(2, 0), pt(2, 1), pt(1, 1)]), 0, 0)],
        Topology::Path,
    );
    let c2 = chain_to_cycle(&two).unwrap();
    assert!(c2.len() <= 3 && c2.hinges.len() == c2.len());
    // Cut pieces reassemble each original exactly.
    let d = chain_to_cycle_derived(&two).unwrap();
    for (orig, piece) in two.pieces.iter().enumerate() {
        let area = d
            .dissection
            .pieces
            .iter()
            .zip(&d.origin)
            .filter(|(_, &o)| o == orig)
            .fold(E::zero(), |acc, (p, _)| acc.add(&p.area()));
        assert_eq!(area, piece.area());
    }
}

fn lifted(f: &Folding<A>, origin: &[usize]) -> Folding<A> {
    Folding { polygon: f.polygon.clone(), motions: origin.iter().map(|&o| f.motions[o].clone()).collect() }
}

#[test]
fn midpoint_hinges_on_dudeney_cycle() {
    let (chain, tri, sq) = dudeney_chain();
    let cyc = chain_to_cycle_derived(&chain).unwrap();
    let folds = [lifted(&tri, &cyc.origin), lifted(&sq, &cyc.origin)];
    let m = add_midpoint_hinges_derived(&cyc.dissection, &folds).unwrap();
    let d = &m.dissection;
    assert!(d.len() <= cyc.dissection.len() + 7);
    for f in &folds {
        let motions = m.lift(&f.motions);
        assert!(verify_parts(d, &motions, &hingekit::geom::Region::from_polygon(&f.polygon)).passed());
        let placed: Vec<Point<A>> =
            d.hinges.iter().map(|h| motions[h.a.piece].apply(d.anchor(h.a))).collect();
        for (a, b) in f.polygon.edges() {
            assert!(placed.iter().any(|p| p.same(&a.mid(b))), "hinge at midpoint of {a:?}-{b:?}");
        }
    }
    // Already hinged at every midpoint: nothing to add.
    let folds2 = [lifted(&folds[0], &m.origin), lifted(&folds[1], &m.origin)];
    let again = add_midpoint_hinges_derived(d, &folds2).unwrap();
    assert_eq!(again.dissection.len(), d.len());
}

#[test]
fn extendible_chain() {
    let c = dudeney_extendible_chain();
    c.validate().unwrap();
    assert_eq!(c.chain.len(), 7);
    for f in [&c.p, &c.q] {
        assert!(c.bare_edges(f).is_empty(), "every edge carries a hinge at an endpoint or midpoint");
    }
    assert!(signatures_equal(&concat_extendible(&c, 1).unwrap(), &c.chain));
    assert_eq!(concat_extendible(&c, 4).unwrap().len(), 28);
}

#[test]
fn signature_examples() {
    let d = h_polyomino_2n::<E>(3).unwrap();
    assert!(signatures_equal(&d, &reversed(&d)));
    assert!(!signatures_equal(&d, &h_polyomino_2n::<E>(4).unwrap()));
    for n in 1..=4 {
        assert_eq!(
            signature(&h_polyregular_half::<E>(4, n).unwrap()).key(),
            signature(&h_polyomino_2n::<E>(n).unwrap()).key()
        );
    }
    let k3 = h_polyregular_kn::<E>(3, 2).unwrap();
    assert!(signatures_equal(&k3, &reversed(&k3)));
    assert!(signature(&k3).equivalent(&signature(&reversed(&k3))));
}

fn check_family<S: Scalar>(d: &HingedDissection<S>, want: usize, area: &S) -> Result<(), TestCaseError> {
    prop_assert_eq!(d.len(), want);
    prop_assert!(d.validate().is_ok());
    prop_assert!(d.is_connected());
    prop_assert!(d.total_area().same(area), "area {} vs {}", d.total_area(), area);
    Ok(())
}

fn kgon_area(k: usize) -> f64 {
    let t = std::f64::consts::PI / k as f64;
    k as f64 / (4.0 * t.tan())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn piece_counts_and_areas(n in 1usize..=8, ki in 0usize..6) {
        let k = [3, 4, 5, 6, 8, 12][ki];
        let half = (k + 1) / 2;
        check_family(&h_polyomino_2n::<E>(n).unwrap(), 2 * n, &E::int(n as i64))?;
        check_family(&h_polyabolo_4n::<E>(n).unwrap(), 4 * n, &E::ratio(n as i64, 2))?;
        let area = ApproxScalar(n as f64 * kgon_area(k));
        check_family(&h_polyregular_kn::<A>(k, n).unwrap(), k * n, &area)?;
        check_family(&h_polyregular_half::<A>(k, n).unwrap(), half * n, &area)?;
        if n >= 2 {
            check_family(&h_polyomino_2nm2::<E>(n).unwrap(), 2 * n - 2, &E::int(n as i64))?;
            check_family(&h_polyregular_knmk::<A>(k, n).unwrap(), k * (n - 1), &area)?;
            check_family(&h_polyregular_half_m1::<A>(k, n).unwrap(), half * (n - 1), &area)?;
        }
        let sq = unit_square();
        check_family(&h_restricted(&sq, n.min(4)).unwrap(), 4 * n.min(4), &E::int(n.min(4) as i64))?;
    }

    #[test]
    fn concat_scales_linearly(n in 1usize..=6) {
        let c = dudeney_extendible_chain();
        let d = concat_extendible(&c, n).unwrap();
        prop_assert_eq!(d.len(), 7 * n);
        prop_assert!((d.total_area().to_f64() - n as f64 * c.chain.total_area().to_f64()).abs() < 1e-9);
    }
}

//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hingekit::dissect::{
    chain_to_cycle_derived, concat_extendible, dudeney_chain, dudeney_extendible_chain, h_polyomino_2n,
    h_polyregular_half, h_restricted, piece_token, signature, signatures_equal, Hinge, HingedDissection, Topology,
};
use hingekit::exactnum::{Angle15, ApproxScalar, ExactScalar, RigidMotion, Scalar};
use hingekit::geom::{Point, Polygon, Region};
use hingekit::polyform::{enumerate_fixed, enumerate_restricted, Cell, Family, Polyform};
use hingekit::realize::{
    realize, realize_dual_omino, realize_extendible, realize_polyabolo_as_omino_bridge, realize_restricted,
    FamilyId, Realization,
};
use hingekit::search::{check_pentomino_lower_bound, realizable_set, tetromino_hinging, tromino_hinging};
use hingekit::verify::{chords_noncrossing, verify_configuration, verify_parts};

type E = ExactScalar;
type A = ApproxScalar;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

/// Fixed polyominoes by growing every (n-1)-omino by one neighbouring
/// square, independent of the library's enumerator.
fn oracle_fixed_ominoes(n: usize) -> BTreeSet<Vec<(i32, i32)>> {
    let norm = |v: &BTreeSet<(i32, i32)>| {
        let mx = v.iter().map(|c| c.0).min().unwrap();
        let my = v.iter().map(|c| c.1).min().unwrap();
        v.iter().map(|&(x, y)| (x - mx, y - my)).collect::<Vec<_>>()
    };
    let mut cur: BTreeSet<Vec<(i32, i32)>> = BTreeSet::from([vec![(0, 0)]]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for f in &cur {
            let set: BTreeSet<(i32, i32)> = f.iter().copied().collect();
            for &(x, y) in f {
                for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    let c = (x + dx, y + dy);
                    if !set.contains(&c) {
                        let mut g = set.clone();
                        g.insert(c);
                        next.insert(norm(&g));
                    }
                }
            }
        }
        cur = next;
    }
    cur
}

fn all_verify<S: Scalar>(rs: &[Realization<S>]) -> Option<String> {
    for r in rs {
        let rep = verify_configuration(r);
        if !rep.passed() {
            return Some(format!("{} failed {:?}", r.target.label, rep.failed_checks()));
        }
    }
    None
}

fn one_signature<S: Scalar>(rs: &[Realization<S>]) -> bool {
    rs.windows(2).all(|w| signatures_equal(&w[0].dissection, &w[1].dissection))
}

fn realize_all(fam: FamilyId, n: usize) -> Result<Vec<Realization<E>>, String> {
    let tf = fam.target_family().map_err(|e| e.to_string())?;
    enumerate_fixed(tf, n)
        .iter()
        .map(|t| realize::<E>(fam, t).map_err(|e| format!("{fam} on {:?}: {e}", t.cells)))
        .collect()
}

fn c1() -> Verdict {
    let t = Instant::now();
    let expected = [1, 2, 6, 19, 63, 216];
    let mut notes = Vec::new();
    for n in 1..=6 {
        let oracle = oracle_fixed_ominoes(n);
        let forms = enumerate_fixed(Family::Omino, n);
        let lib: BTreeSet<Vec<(i32, i32)>> = forms.iter().map(|f| f.cells.iter().map(|c| (c.x, c.y)).collect()).collect();
        if oracle.len() != expected[n - 1] || lib != oracle {
            return verdict(false, format!("n={n}: oracle {} forms, library {}", oracle.len(), forms.len()));
        }
        let rs = match realize_all(FamilyId::Polyomino2n, n) {
            Ok(r) => r,
            Err(e) => return verdict(false, e),
        };
        if let Some(e) = all_verify(&rs) {
            return verdict(false, e);
        }
        let h = h_polyomino_2n::<E>(n).unwrap();
        if !rs.iter().all(|r| signatures_equal(&r.dissection, &h)) {
            return verdict(false, format!("n={n}: signatures differ"));
        }
        notes.push(rs.len().to_string());
    }
    let secs = t.elapsed().as_secs_f64();
    verdict(secs < 120.0, format!("{} targets verified exactly, one signature per n, {secs:.1} s", notes.join("/")))
}

fn c2() -> Verdict {
    let mut total = 0;
    for k in [3, 6] {
        for fam in [FamilyId::Kn(k), FamilyId::Knmk(k), FamilyId::Half(k), FamilyId::HalfM1(k)] {
            let from = if matches!(fam, FamilyId::Knmk(_) | FamilyId::HalfM1(_)) { 2 } else { 1 };
            for n in from..=5 {
                let rs = match realize_all(fam, n) {
                    Ok(r) => r,
                    Err(e) => return verdict(false, e),
                };
                if let Some(e) = all_verify(&rs) {
                    return verdict(false, e);
                }
                let half = (k + 1) / 2;
                let want = match fam {
                    FamilyId::Kn(_) => k * n,
                    FamilyId::Knmk(_) => k * (n - 1),
                    FamilyId::Half(_) => half * n,
                    _ => half * (n - 1),
                };
                if rs.iter().any(|r| r.dissection.len() != want) || !one_signature(&rs) {
                    return verdict(false, format!("{fam} n={n}: piece count or signature mismatch"));
                }
                total += rs.len();
            }
        }
    }
    verdict(true, format!("{total} realizations verified; counts kn, k(n-1), ceil(k/2)n, ceil(k/2)(n-1)"))
}

fn c3() -> Verdict {
    for n in 1..=5 {
        let a = h_polyregular_half::<E>(4, n).unwrap();
        let b = h_polyomino_2n::<E>(n).unwrap();
        if signature(&a).key() != signature(&b).key() {
            return verdict(false, format!("n={n}: signatures differ"));
        }
    }
    verdict(true, "half(4, n) and polyomino_2n(n) have identical exact signatures for n = 1..5")
}

fn is_cell_edge_midpoint(p: &Point<E>, cells: &[Polygon<E>]) -> bool {
    cells.iter().any(|c| c.edges().any(|(a, b)| a.mid(b).same(p)))
}

fn c4() -> Verdict {
    let mut cases = BTreeSet::new();
    let mut total = 0;
    for n in 1..=4 {
        let rs = match realize_all(FamilyId::Polyabolo4n, n) {
            Ok(r) => r,
            Err(e) => return verdict(false, e),
        };
        if let Some(e) = all_verify(&rs) {
            return verdict(false, e);
        }
        if !one_signature(&rs) {
            return verdict(false, format!("n={n}: more than one signature"));
        }
        for r in &rs {
            for h in &r.dissection.hinges {
                let p = r.motions[h.a.piece].apply(r.dissection.anchor(h.a));
                if !is_cell_edge_midpoint(&p, &r.target.cells) {
                    return verdict(false, format!("{}: hinge off the cell edge midpoints", r.target.label));
                }
            }
            for s in &r.trace {
                if let Some(c) = s.case.split(':').nth(1) {
                    cases.insert(c.to_string());
                }
            }
        }
        total += rs.len();
    }
    let want = ["hyp-hyp", "leg-leg-parallelogram", "leg-leg-triangle"];
    let ok = want.iter().all(|c| cases.contains(*c));
    verdict(ok, format!("{total} realizations verified; attach cases seen {cases:?}; hinges at cell-edge midpoints only"))
}

fn c5() -> Verdict {
    let t = Instant::now();
    let cert = match check_pentomino_lower_bound() {
        Ok(c) => c,
        Err(e) => return verdict(false, e.to_string()),
    };
    let secs = t.elapsed().as_secs_f64();
    let named = cert.verdicts.iter().all(|v| v.witness().is_some());
    let x_or_t = cert.verdicts.iter().all(|v| v.unrealizable.iter().any(|n| n == "X" || n == "T"));
    let trominoes = enumerate_fixed(Family::Omino, 3);
    let tro = realizable_set(&tromino_hinging(), &trominoes).map(|r| r.len()).unwrap_or(0);
    let tetrominoes = enumerate_fixed(Family::Omino, 4);
    let tet = tetromino_hinging()
        .and_then(|h| realizable_set(&h, &tetrominoes).ok())
        .map(|r| r.len())
        .unwrap_or(0);
    let ok = cert.verdicts.len() == 81 && cert.impossible && named && x_or_t && secs < 60.0 && tro == 6 && tet == 19;
    verdict(
        ok,
        format!(
            "{} hingings, all impossible: {}, each fails on X or T: {x_or_t}, {} nodes in {secs:.1} s; trominoes {tro}/6, tetrominoes {tet}/19",
            cert.verdicts.len(),
            cert.impossible,
            cert.total_nodes
        ),
    )
}

/// Random tree of unit squares: a random polyomino, a random spanning tree
/// of its adjacency, each tree edge hinged at one end of the shared edge,
/// never using a square's corner twice.
fn random_tree_dissection(rng: &mut ChaCha8Rng) -> (HingedDissection<E>, Polyform) {
    loop {
        let n = rng.gen_range(2..=7);
        let mut cells = vec![(0i32, 0i32)];
        while cells.len() < n {
            let &(x, y) = &cells[rng.gen_range(0..cells.len())];
            let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
            if !cells.contains(&(x + dx, y + dy)) {
                cells.push((x + dx, y + dy));
            }
        }
        // Random spanning tree: attach cells in order to a random earlier neighbour.
        let mut edges = Vec::new();
        for j in 1..n {
            let nb: Vec<usize> = (0..j)
                .filter(|&i| (cells[i].0 - cells[j].0).abs() + (cells[i].1 - cells[j].1).abs() == 1)
                .collect();
            if nb.is_empty() {
                break;
            }
            edges.push((nb[rng.gen_range(0..nb.len())], j));
        }
        if edges.len() != n - 1 {
            continue;
        }
        let corners = |c: (i32, i32)| [(c.0, c.1), (c.0 + 1, c.1), (c.0 + 1, c.1 + 1), (c.0, c.1 + 1)];
        let mut used = vec![[false; 4]; n];
        let mut hinges = Vec::new();
        let mut ok = true;
        for &(i, j) in &edges {
            let ci = corners(cells[i]);
            let cj = corners(cells[j]);
            let mut shared: Vec<(usize, usize)> =
                (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).filter(|&(a, b)| ci[a] == cj[b]).collect();
            if rng.gen_bool(0.5) {
                shared.reverse();
            }
            match shared.into_iter().find(|&(a, b)| !used[i][a] && !used[j][b]) {
                Some((a, b)) => {
                    used[i][a] = true;
                    used[j][b] = true;
                    hinges.push(Hinge::new(i, a, j, b));
                }
                None => ok = false,
            }
        }
        if !ok {
            continue;
        }
        let pf = Polyform::new(Family::Omino, cells.iter().map(|&(x, y)| Cell::new(x, y, 0)).collect());
        let pieces = cells.iter().map(|&(x, y)| Family::Omino.polygon(Cell::new(x, y, 0))).collect();
        return (HingedDissection { pieces, hinges, topology: Topology::Tree }, pf);
    }
}

fn c6() -> Verdict {
    let (chain, tri, sq) = dudeney_chain();
    let d = match chain_to_cycle_derived(&chain) {
        Ok(d) => d,
        Err(e) => return verdict(false, e.to_string()),
    };
    let pieces = d.dissection.len();
    let mut folds_ok = true;
    let mut margin = f64::INFINITY;
    for f in [&tri, &sq] {
        let rep = verify_parts(&d.dissection, &d.lift(&f.motions), &Region::from_polygon(&f.polygon));
        folds_ok &= rep.passed();
        if let Some(m) = &rep.margins {
            margin = margin.min(m.min_nonzero);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let mut bound_ok = 0;
    for _ in 0..50 {
        let (h, pf) = random_tree_dissection(&mut rng);
        let n = h.len();
        let Ok(c) = chain_to_cycle_derived(&h) else { continue };
        let id = vec![RigidMotion::<E>::identity(); n];
        if c.dissection.len() <= 3 * n - 3 && verify_parts(&c.dissection, &c.lift(&id), &pf.region()).passed() {
            bound_ok += 1;
        }
    }
    let ok = pieces <= 9 && folds_ok && margin >= 1e-9 && bound_ok == 50;
    verdict(
        ok,
        format!(
            "Dudeney chain -> {pieces} pieces, triangle and square verified (min margin {margin:.2e}); 3n-3 bound held on {bound_ok}/50 random trees"
        ),
    )
}

fn c7() -> Verdict {
    let c = dudeney_extendible_chain();
    for n in 1..=4 {
        match concat_extendible(&c, n) {
            Ok(d) if d.len() == 7 * n => {}
            _ => return verdict(false, format!("n={n}: not 7n pieces")),
        }
    }
    let d4 = concat_extendible(&c, 4).unwrap();
    let tok = |i: usize| {
        let (a, b) = d4.anchors(i);
        piece_token(&d4.pieces[i], a, b)
    };
    let periodic = [10, 17, 24].iter().all(|&i| tok(3).same(&tok(i)));
    let mut margin = f64::INFINITY;
    let mut total = 0;
    for n in 1..=3 {
        for fam in [Family::Iamond, Family::Omino] {
            for t in enumerate_fixed(fam, n) {
                let r: Realization<A> = match realize_extendible(&c, &t) {
                    Ok(r) => r,
                    Err(e) => return verdict(false, format!("{:?}: {e}", t.cells)),
                };
                let rep = verify_configuration(&r);
                if !rep.passed() || r.dissection.len() != 7 * n {
                    return verdict(false, format!("{}: {:?}", r.target.label, rep.failed_checks()));
                }
                margin = margin.min(rep.margins.map(|m| m.min_nonzero).unwrap_or(0.0));
                total += 1;
            }
        }
    }
    verdict(
        periodic && margin >= 1e-9,
        format!("7n pieces for n=1..4; {total} iamond/omino targets verified, min margin {margin:.2e}; pieces 3,10,17,24 congruent: {periodic}"),
    )
}

fn c8() -> Verdict {
    let mut total = 0;
    for n in 1..=2 {
        let mut rs = Vec::new();
        for size in [2 * n, n] {
            for t in enumerate_fixed(Family::Omino, size) {
                match realize_dual_omino::<E>(n, &t) {
                    Ok(r) => rs.push(r),
                    Err(e) => return verdict(false, format!("{:?}: {e}", t.cells)),
                }
            }
        }
        if let Some(e) = all_verify(&rs) {
            return verdict(false, e);
        }
        if rs.iter().any(|r| r.dissection.len() != 4 * n) || !one_signature(&rs) {
            return verdict(false, format!("n={n}: not one 4n-piece path"));
        }
        total += rs.len();
    }
    let (a, b) = match realize_polyabolo_as_omino_bridge::<E>(1) {
        Ok(p) => p,
        Err(e) => return verdict(false, e.to_string()),
    };
    let bridge_ok = a.dissection.len() == 16
        && verify_configuration(&a).passed()
        && verify_configuration(&b).passed()
        && signatures_equal(&a.dissection, &b.dissection);
    verdict(bridge_ok, format!("{total} unit and sqrt2-scale targets from one path per n; bridge(1): {} pieces", a.dissection.len()))
}

fn c9() -> Verdict {
    let pt = |x: i64, y: i64| Point::<E>::int(x, y);
    let tri = Polygon(vec![pt(0, 0), pt(1, 0), Point::new(E::from_ratio(1, 2), E::sqrt3().half())]);
    let sq = Polygon(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]);
    let quad = Polygon(vec![pt(0, 0), pt(4, 0), pt(3, 2), pt(0, 3)]);
    let mut counts = Vec::new();
    for (name, p) in [("triangle", tri), ("square", sq), ("quadrilateral", quad)] {
        let k = p.len();
        let mut per_n = Vec::new();
        for n in 1..=3 {
            let forms = enumerate_restricted(&p, n);
            let h = h_restricted(&p, n).unwrap();
            for f in &forms {
                let r = match realize_restricted(&p, f) {
                    Ok(r) => r,
                    Err(e) => return verdict(false, format!("{name} n={n}: {e}")),
                };
                if r.dissection.len() != k * n || !verify_configuration(&r).passed() {
                    return verdict(false, format!("{name} n={n} {}: failed", f.key()));
                }
                if !signatures_equal(&r.dissection, &h) {
                    return verdict(false, format!("{name} n={n}: dissection differs from h_restricted"));
                }
            }
            per_n.push(forms.len().to_string());
        }
        counts.push(format!("{name} {}", per_n.join("/")));
    }
    verdict(true, format!("all restricted forms realized with kn pieces: {}", counts.join(", ")))
}

/// Two chords cross when exactly one endpoint of one lies strictly inside
/// the arc cut off by the other, walking the circle.
fn oracle_noncrossing(m: usize, chords: &[(usize, usize)]) -> bool {
    for (i, &(a, b)) in chords.iter().enumerate() {
        for &(c, d) in &chords[i + 1..] {
            if [a, b].contains(&c) || [a, b].contains(&d) {
                continue;
            }
            let mut inside = 0;
            let mut k = (a + 1) % m;
            while k != b {
                if k == c || k == d {
                    inside += 1;
                }
                k = (k + 1) % m;
            }
            if inside == 1 {
                return false;
            }
        }
    }
    true
}

fn mutate(r: &Realization<E>, rng: &mut ChaCha8Rng) -> Realization<E> {
    let mut out = r.clone();
    let i = rng.gen_range(0..r.motions.len());
    let m = &r.motions[i];
    out.motions[i] = if rng.gen_bool(0.5) {
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        RigidMotion::translation(Point::int(dx, dy)).compose(m)
    } else {
        let step = if rng.gen_bool(0.5) { 1 } else { -1 };
        // Turn the placed piece by 15° about its first vertex.
        let c = m.apply(r.dissection.pieces[i].vertex(0));
        let rot = RigidMotion::from_angle15(Angle15::new(step), Point::origin());
        let about = RigidMotion::translation(c.clone()).compose(&rot).compose(&RigidMotion::translation(c.neg()));
        about.compose(m)
    };
    out
}

fn c10() -> Verdict {
    let mut pool: Vec<Realization<E>> = Vec::new();
    for (fam, n) in [
        (FamilyId::Polyomino2n, 4),
        (FamilyId::Kn(3), 3),
        (FamilyId::Half(6), 2),
        (FamilyId::Polyabolo4n, 2),
        (FamilyId::Polyomino2nm2, 4),
    ] {
        pool.extend(realize_all(fam, n).unwrap().into_iter().take(8));
    }
    if all_verify(&pool).is_some() {
        return verdict(false, "unperturbed realization fails");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut caught = 0;
    for k in 0..200 {
        let r = &pool[k % pool.len()];
        if !verify_configuration(&mutate(r, &mut rng)).passed() {
            caught += 1;
        }
    }
    let mut configs = 0u64;
    let mut agree = true;
    for m in 2..=6usize {
        let all: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
        let total = 1u32 << all.len();
        for mask in 0..total {
            if mask.count_ones() > 6 {
                continue;
            }
            let chords: Vec<(usize, usize)> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            configs += 1;
            agree &= chords_noncrossing(&chords) == oracle_noncrossing(m, &chords);
        }
    }
    verdict(
        caught == 200 && agree,
        format!("{caught}/200 perturbations caught; chord test agrees with the oracle on {configs} configurations: {agree}"),
    )
}

fn main() {
    let criteria: [(u32, &str, fn() -> Verdict); 10] = [
        (1, "universality, polyominoes", c1),
        (2, "universality, polyiamonds and polyhexes", c2),
        (3, "k = 4 equivalence", c3),
        (4, "polyabolos", c4),
        (5, "pentomino lower bound", c5),
        (6, "chain to cycle", c6),
        (7, "cross-type extendible chain", c7),
        (8, "dual-scale ominoes", c8),
        (9, "restricted polyforms", c9),
        (10, "verifier soundness", c10),
    ];
    let filter: Option<u32> = std::env::args().nth(1).and_then(|a| a.parse().ok());
    let mut failed = 0;
    for (id, name, f) in criteria {
        if filter.is_some_and(|x| x != id) {
            continue;
        }
        let t = Instant::now();
        let v = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            verdict(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        if !v.ok {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {} {name}: {} [{:.1} s]",
            if v.ok { "PASS" } else { "FAIL" },
            v.detail,
            t.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

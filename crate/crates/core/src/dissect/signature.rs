use crate::dissect::{HingedDissection, Topology};
use crate::exactnum::Scalar;
use crate::geom::Polygon;

/// Rotation-invariant description of a piece together with where its
/// hinges sit.
#[derive(Clone, Debug)]
pub struct Token<S> {
    values: Vec<S>,
}

impl<S: Scalar> Token<S> {
    pub fn same(&self, o: &Self) -> bool {
        self.values.len() == o.values.len() && self.values.iter().zip(&o.values).all(|(a, b)| a.same(b))
    }

    pub fn key(&self) -> String {
        self.values.iter().map(|v| v.key()).collect::<Vec<_>>().join(" ")
    }
}

/// Token for a piece entered at vertex `inn` and left at vertex `out`.
/// Straight-through vertices that carry no hinge are ignored.
pub fn piece_token<S: Scalar>(poly: &Polygon<S>, inn: Option<usize>, out: Option<usize>) -> Token<S> {
    let keep: Vec<usize> = inn.iter().chain(out.iter()).copied().collect();
    let (p, map) = poly.strip_collinear(&keep);
    let inn = inn.and_then(|i| map[i]);
    let out = out.and_then(|i| map[i]);
    let n = p.len();
    let start = inn.or(out).unwrap_or_else(|| min_rotation(&p));
    let mut values = vec![
        S::from_int(inn.is_some() as i64),
        S::from_int(n as i64),
        S::from_int(out.map(|o| ((o + n - start) % n) as i64).unwrap_or(-1)),
    ];
    let q = p.rotated_to(start);
    let e: Vec<_> = q.edges().map(|(a, b)| b.sub(a)).collect();
    for i in 0..n {
        let f = &e[(i + 1) % n];
        values.push(e[i].norm2());
        values.push(e[i].dot(f));
        values.push(e[i].cross(f));
    }
    Token { values }
}

fn min_rotation<S: Scalar>(p: &Polygon<S>) -> usize {
    let n = p.len();
    (0..n)
        .min_by_key(|&s| {
            let q = p.rotated_to(s);
            q.edges()
                .map(|(a, b)| b.sub(a).norm2().key())
                .chain(std::iter::once(q.vertex(0).sub(q.vertex(1)).cross(&q.vertex(2).sub(q.vertex(1))).key()))
                .collect::<Vec<_>>()
                .join(",")
        })
        .unwrap_or(0)
}

/// Tokens of a cycle or path dissection in forward and reversed order.
#[derive(Clone, Debug)]
pub struct Signature<S> {
    pub topology: Topology,
    pub forward: Vec<Token<S>>,
    pub backward: Vec<Token<S>>,
}

pub fn signature<S: Scalar>(d: &HingedDissection<S>) -> Signature<S> {
    let n = d.len();
    let mut forward = Vec::with_capacity(n);
    let mut backward = Vec::with_capacity(n);
    for i in 0..n {
        let (inn, out) = d.anchors(i);
        forward.push(piece_token(&d.pieces[i], inn, out));
        backward.push(piece_token(&d.pieces[i], out, inn));
    }
    backward.reverse();
    Signature { topology: d.topology, forward, backward }
}

fn matches_shifted<S: Scalar>(a: &[Token<S>], b: &[Token<S>], cyclic: bool) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let shifts = if cyclic { n } else { 1 };
    (0..shifts).any(|r| (0..n).all(|i| a[i].same(&b[(i + r) % n])))
}

impl<S: Scalar> Signature<S> {
    /// Equality up to cyclic relabelling (cycles) and reversal.
    pub fn equivalent(&self, o: &Self) -> bool {
        if self.topology != o.topology {
            return false;
        }
        let cyclic = self.topology == Topology::Cycle;
        matches_shifted(&self.forward, &o.forward, cyclic)
            || matches_shifted(&self.forward, &o.backward, cyclic)
    }

    /// Canonical string form, meaningful for exact scalars.
    pub fn key(&self) -> String {
        let n = self.forward.len();
        let cyclic = self.topology == Topology::Cycle;
        let shifts = if cyclic { n.max(1) } else { 1 };
        let mut best: Option<String> = None;
        for seq in [&self.forward, &self.backward] {
            for r in 0..shifts {
                let s = (0..n).map(|i| seq[(i + r) % n].key()).collect::<Vec<_>>().join(" | ");
                if best.as_ref().is_none_or(|b| s < *b) {
                    best = Some(s);
                }
            }
        }
        format!("{:?}[{}]", self.topology, best.unwrap_or_default())
    }
}

pub fn signatures_equal<S: Scalar>(a: &HingedDissection<S>, b: &HingedDissection<S>) -> bool {
    signature(a).equivalent(&signature(b))
}

/// True when no two chords strictly interleave. Chords are pairs of
/// positions around a circle; chords sharing an endpoint never cross.
pub fn chords_noncrossing(chords: &[(usize, usize)]) -> bool {
    let norm: Vec<(usize, usize)> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for (i, &(a, b)) in norm.iter().enumerate() {
        for &(c, d) in &norm[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let c_in = a < c && c < b;
            let d_in = a < d && d < b;
            if c_in != d_in {
                return false;
            }
        }
    }
    true
}

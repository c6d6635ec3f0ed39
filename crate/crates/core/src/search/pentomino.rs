//! The twelve free pentominoes by their usual letters.

use crate::polyform::{Cell, Family, Polyform};

pub const PENTOMINO_NAMES: [&str; 12] = ["F", "I", "L", "N", "P", "T", "U", "V", "W", "X", "Y", "Z"];

/// Rows top to bottom.
fn rows(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "F" => &[".##", "##.", ".#."],
        "I" => &["#####"],
        "L" => &["#...", "####"],
        "N" => &[".###", "##.."],
        "P" => &["##", "##", "#."],
        "T" => &["###", ".#.", ".#."],
        "U" => &["#.#", "###"],
        "V" => &["#..", "#..", "###"],
        "W" => &["#..", "##.", ".##"],
        "X" => &[".#.", "###", ".#."],
        "Y" => &[".#..", "####"],
        "Z" => &["##.", ".#.", ".##"],
        _ => return None,
    })
}

/// Representative fixed form of the named pentomino.
pub fn pentomino(name: &str) -> Option<Polyform> {
    let r = rows(name)?;
    let h = r.len() as i32;
    let cells = r
        .iter()
        .enumerate()
        .flat_map(|(row, s)| {
            s.chars().enumerate().filter(|&(_, ch)| ch == '#').map(move |(x, _)| Cell::new(x as i32, h - 1 - row as i32, 0))
        })
        .collect();
    Some(Polyform::new(Family::Omino, cells).normalized())
}

/// Reflection of a polyomino in a vertical line.
pub fn mirrored(p: &Polyform) -> Polyform {
    Polyform::new(p.family, p.cells.iter().map(|c| Cell::new(-c.x, c.y, c.t)).collect()).normalized()
}

/// Representative of the class modulo translation, rotation and reflection.
pub fn free_class(p: &Polyform) -> Polyform {
    p.canonical().min(mirrored(p).canonical())
}

/// Letter of a pentomino, whatever its position.
pub fn pentomino_name(p: &Polyform) -> Option<&'static str> {
    let key = free_class(p);
    PENTOMINO_NAMES.iter().copied().find(|n| pentomino(n).map(|q| free_class(&q)) == Some(key.clone()))
}

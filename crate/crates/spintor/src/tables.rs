//! Plain-text renderings of the stored class tables.

use std::fmt::Write;

use spintor_core::hypersurface::{
    WeingartenType, EMBED_TABLE, RESTRICT_TABLE, RESTRICT_TABLE_BOUNDS,
};
use spintor_core::torsion::tables::{G2_TABLE, SU3_TABLE};
use spintor_core::torsion::{ClassSet, Component};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    Su3,
    G2,
    Embed,
    Restrict,
}

pub fn render(table: Table) -> String {
    match table {
        Table::Su3 => rows(SU3_TABLE.iter().map(|r| (r.class, r.equations))),
        Table::G2 => rows(G2_TABLE.iter().map(|r| (r.class, r.equations))),
        Table::Embed => grid(&Component::SU3, &EMBED_TABLE.map(|r| r.to_vec()), None),
        Table::Restrict => grid(
            &Component::G2,
            &RESTRICT_TABLE.map(|r| r.to_vec()),
            Some(&RESTRICT_TABLE_BOUNDS.map(|r| r.to_vec())),
        ),
    }
}

fn rows<'a>(it: impl Iterator<Item = (ClassSet, &'a str)>) -> String {
    let entries: Vec<(String, &str)> = it.map(|(c, e)| (c.label(), e)).collect();
    let widest = entries.iter().map(|(l, _)| width(l)).max().unwrap_or(0);
    let mut out = String::new();
    for (k, (label, eq)) in entries.iter().enumerate() {
        let pad = widest - width(label);
        writeln!(out, "{:>2}  {label}{}  {eq}", k + 1, " ".repeat(pad)).unwrap();
    }
    out
}

fn cell(c: ClassSet) -> String {
    c.label()
}

/// Display width, ignoring combining marks such as the bar over `χ₁̄`.
fn width(s: &str) -> usize {
    s.chars()
        .filter(|c| !('\u{300}'..='\u{36f}').contains(c))
        .count()
}

/// Rows are Weingarten types. With `bounds`, cells whose customary entry is
/// larger than the sharp one show it in brackets.
fn grid(
    columns: &[Component],
    cells: &[Vec<ClassSet>; 4],
    bounds: Option<&[Vec<ClassSet>; 4]>,
) -> String {
    let mut text: Vec<Vec<String>> = vec![std::iter::once("type".to_string())
        .chain(columns.iter().map(|c| ClassSet::of(&[*c]).label()))
        .collect()];
    for (r, kind) in WeingartenType::ALL.iter().enumerate() {
        let mut row = vec![kind.token().to_string()];
        for (k, &c) in cells[r].iter().enumerate() {
            let mut s = cell(c);
            if let Some(b) = bounds.map(|b| b[r][k]).filter(|b| *b != c) {
                write!(s, " [{}]", cell(b)).unwrap();
            }
            row.push(s);
        }
        text.push(row);
    }
    let widths: Vec<usize> = (0..text[0].len())
        .map(|k| text.iter().map(|r| width(&r[k])).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &text {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - width(s))))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    if bounds.is_some() {
        out.push_str("[..] customary entry where it exceeds the class realized by generic data\n");
    }
    out
}

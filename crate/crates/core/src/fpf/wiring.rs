//! ASCII arc diagrams.
//!
//! Outlets sit on the bottom line as `o`, two columns apart. Each arc is a
//! `+---+` run on some level above; nested arcs sit higher than the arcs they
//! enclose and overlapping arcs never share a level. Legs of higher arcs are
//! drawn as `|` and take precedence where they cross a lower run.
//!
//! ```text
//! +-----+   +---+
//! | +-+ | +-|-+ |
//! o o o o o o o o
//! ```

use super::FpfInvolution;
use crate::error::{Error, Result};

pub fn wiring_ascii(iota: &FpfInvolution) -> String {
    let mut arcs = iota.arcs();
    arcs.sort_by_key(|&(a, b)| (b - a, a));
    let mut levels: Vec<(usize, usize, usize)> = Vec::new();
    for &(a, b) in &arcs {
        let mut level = levels
            .iter()
            .filter(|&&(x, y, _)| a < x && y < b)
            .map(|&(_, _, l)| l + 1)
            .max()
            .unwrap_or(0);
        while levels
            .iter()
            .any(|&(x, y, l)| l == level && x <= b && a <= y)
        {
            level += 1;
        }
        levels.push((a, b, level));
    }
    let height = levels.iter().map(|&(_, _, l)| l + 1).max().unwrap_or(0);
    let width = 2 * iota.size() - 1;
    let mut rows = vec![vec![' '; width]; height];
    for &(a, b, l) in &levels {
        let (xa, xb) = (2 * (a - 1), 2 * (b - 1));
        for x in xa + 1..xb {
            if rows[l][x] == ' ' {
                rows[l][x] = '-';
            }
        }
        rows[l][xa] = '+';
        rows[l][xb] = '+';
        for row in rows.iter_mut().take(l) {
            row[xa] = '|';
            row[xb] = '|';
        }
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        out.push_str(row.iter().collect::<String>().trim_end());
        out.push('\n');
    }
    out.push_str(&vec!["o"; iota.size()].join(" "));
    out.push('\n');
    out
}

/// Inverse of [`wiring_ascii`].
pub fn parse_wiring(text: &str) -> Result<FpfInvolution> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let Some((outlets, arc_rows)) = lines.split_last() else {
        return Err(Error::Parse("empty wiring diagram".into()));
    };
    let size = outlets.chars().filter(|&c| c == 'o').count();
    let mut arcs = Vec::new();
    for row in arc_rows {
        let plugs: Vec<usize> = row
            .char_indices()
            .filter(|&(_, c)| c == '+')
            .map(|(x, _)| x)
            .collect();
        if plugs.len() % 2 != 0 || plugs.iter().any(|x| x % 2 != 0) {
            return Err(Error::Parse(format!("malformed wiring row {row:?}")));
        }
        arcs.extend(plugs.chunks(2).map(|p| (p[0] / 2 + 1, p[1] / 2 + 1)));
    }
    FpfInvolution::from_arcs(size, &arcs)
}

use std::fmt::Write as _;

use zetahyp_core::LowerTriMatrix;

/// Square grid with right-aligned columns, zeros written out above the diagonal.
pub fn grid(m: &LowerTriMatrix) -> String {
    let n = m.dim();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).to_string()).collect())
        .collect();
    let widths: Vec<usize> = (0..n)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

pub fn labelled(label: &str, body: &str) -> String {
    format!("{label}\n{body}")
}

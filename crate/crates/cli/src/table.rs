//! Text rendering of the `⋀^p p+ ⊗ ⋀^q p-` decompositions.

use gspn_core::reptheory::{self, IrrepDecomposition, RepError};

pub struct Row {
    pub p: usize,
    pub q: usize,
    pub decomposition: IrrepDecomposition,
}

/// All bidegrees with `p + q = n(n+1)/2`, from `p = n(n+1)/2` down to `0`.
pub fn ktypes_rows(n: usize) -> Result<Vec<Row>, RepError> {
    let top = n * (n + 1) / 2;
    (0..=top)
        .rev()
        .map(|p| {
            Ok(Row {
                p,
                q: top - p,
                decomposition: reptheory::wedge_pq(n, p, top - p)?,
            })
        })
        .collect()
}

pub fn render_row(r: &Row) -> String {
    let terms: Vec<String> = r
        .decomposition
        .sorted_desc()
        .into_iter()
        .map(|(w, m)| if m == 1 { format!("τ{w}") } else { format!("{m}τ{w}") })
        .collect();
    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" ⊕ ") };
    format!("⋀^{} p+ ⊗ ⋀^{} p- = {rhs}", r.p, r.q)
}

pub fn render(rows: &[Row]) -> String {
    rows.iter().map(|r| render_row(r) + "\n").collect()
}

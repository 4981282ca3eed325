//! r-modular Ferrers diagrams.

use std::fmt;

use serde::Serialize;

use crate::error::{check_modulus, Result};
use crate::partition::Partition;

/// Row `i` holds `q_i` cells equal to `r` followed by one cell `s_i`, where
/// `λ_i = q_i·r + s_i` and `1 <= s_i <= r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularDiagram {
    pub r: u32,
    pub rows: Vec<Vec<u32>>,
}

pub fn modular_diagram(lambda: &Partition, r: u32) -> Result<ModularDiagram> {
    check_modulus(r)?;
    let rows = lambda
        .parts()
        .iter()
        .map(|&p| {
            let s = (p - 1) % r + 1;
            let q = (p - s) / r;
            let mut row = vec![r; q as usize];
            row.push(s);
            row
        })
        .collect();
    Ok(ModularDiagram { r, rows })
}

impl fmt::Display for ModularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.r.to_string().len();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

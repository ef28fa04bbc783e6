//! Printed table values, used only for comparison columns and acceptance
//! checks. Nothing here feeds a computation.

use std::sync::OnceLock;

use series_engine::Which;

const DATA: &str = include_str!("../data/printed_tables.csv");

#[derive(Clone, Debug, PartialEq)]
pub struct PrintedCell {
    pub table: u8,
    pub which: Which,
    pub a: f64,
    /// Column header as printed (a magnitude; table 3 is at `−x`).
    pub x: f64,
    pub exact: f64,
    pub asymptotic: f64,
    pub error: f64,
    /// Signed argument at which the printed values hold.
    pub eval_x: f64,
    /// Empty when the printed cell needs no correction.
    pub erratum: String,
}

impl PrintedCell {
    pub fn nu(&self) -> f64 {
        self.a * self.eval_x.abs()
    }

    pub fn label(&self) -> String {
        format!(
            "table {} {}(a={}, x={})",
            self.table,
            function_name(self.which),
            self.a,
            self.eval_x
        )
    }
}

pub fn function_name(which: Which) -> &'static str {
    match which {
        Which::Bateman => "k",
        Which::Havelock => "h",
    }
}

fn parse() -> Vec<PrintedCell> {
    let mut r = csv::Reader::from_reader(DATA.as_bytes());
    r.records()
        .map(|rec| {
            let rec = rec.expect("embedded table data is valid CSV");
            let num = |i: usize| -> f64 { rec[i].parse().expect("embedded table data is numeric") };
            PrintedCell {
                table: rec[0].parse().expect("table number"),
                which: rec[1].parse().expect("function name"),
                a: num(2),
                x: num(3),
                exact: num(4),
                asymptotic: num(5),
                error: num(6),
                eval_x: num(7),
                erratum: rec[8].to_string(),
            }
        })
        .collect()
}

/// Cells of table `table` (1, 2 or 3) in printed order; all cells for `None`.
pub fn printed_cells(table: Option<u8>) -> Vec<PrintedCell> {
    static CELLS: OnceLock<Vec<PrintedCell>> = OnceLock::new();
    CELLS
        .get_or_init(parse)
        .iter()
        .filter(|c| table.is_none_or(|t| c.table == t))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_file_shape() {
        assert_eq!(printed_cells(None).len(), 20);
        assert_eq!(printed_cells(Some(1)).len(), 6);
        assert_eq!(printed_cells(Some(2)).len(), 6);
        let t3 = printed_cells(Some(3));
        assert_eq!(t3.len(), 8);
        assert!(t3.iter().all(|c| c.eval_x < 0.0));
        assert_eq!(t3.iter().filter(|c| !c.erratum.is_empty()).count(), 4);
    }
}

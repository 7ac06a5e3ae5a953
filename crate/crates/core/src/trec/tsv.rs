//! Tab-separated report writing with the fixed numeric conventions used by
//! every command: 4-decimal scores, 6-decimal matrix cells, scientific
//! notation for small p-values, round-half-away-from-zero.

/// One cell of a report row.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    /// Score-like value, printed with 4 decimals.
    Fixed4(f64),
    /// Matrix cell, printed with 6 decimals.
    Fixed6(f64),
    /// p-value: scientific (`2.1022e-06`) below 1e-4, else 4 decimals.
    PValue(f64),
}

impl Cell {
    pub fn text<S: Into<String>>(s: S) -> Self {
        Cell::Text(s.into())
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Fixed4(x) => format_fixed(*x, 4),
            Cell::Fixed6(x) => format_fixed(*x, 6),
            Cell::PValue(p) => format_pvalue(*p),
        }
    }
}

/// A rectangular table: one header line plus zero or more rows, emitted in
/// the given order.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: Vec<S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }
}

/// Serializes a table as TSV with LF line endings.
pub fn write_tsv_report(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&table.header.join("\t"));
    out.push('\n');
    for row in &table.rows {
        let line: Vec<String> = row.iter().map(Cell::render).collect();
        out.push_str(&line.join("\t"));
        out.push('\n');
    }
    out
}

/// Formats `x` with `decimals` fractional digits, rounding half away from
/// zero on the shortest decimal representation of `x`.
///
/// Rounding the decimal rendering rather than the raw binary value makes
/// `0.95255` print as `0.9526`, matching how the reference tables were
/// produced.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let negative = x.is_sign_negative();
    // Display for f64 is the shortest decimal string that round-trips and
    // never uses exponent notation.
    let s = format!("{}", x.abs());
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i.to_string(), f.to_string()),
        None => (s, String::new()),
    };
    let mut digits: Vec<u8> = int_part.bytes().map(|b| b - b'0').collect();
    let int_len = digits.len();
    let mut frac: Vec<u8> = frac_part.bytes().map(|b| b - b'0').collect();
    let round_up = frac.len() > decimals && frac[decimals] >= 5;
    frac.truncate(decimals);
    while frac.len() < decimals {
        frac.push(0);
    }
    digits.extend_from_slice(&frac);
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let carried = digits.len() - decimals - int_len; // 1 if an extra leading digit appeared
    let split = int_len + carried;
    let int_str: String = digits[..split].iter().map(|d| (d + b'0') as char).collect();
    let frac_str: String = digits[split..].iter().map(|d| (d + b'0') as char).collect();
    let all_zero = digits.iter().all(|&d| d == 0);
    let sign = if negative && !all_zero { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{int_str}")
    } else {
        format!("{sign}{int_str}.{frac_str}")
    }
}

/// p-value rendering: values below 1e-4 in scientific notation with a
/// 4-digit mantissa (`2.1022e-06`), everything else with 4 decimals.
pub fn format_pvalue(p: f64) -> String {
    if p.is_finite() && p > 0.0 && p < 1e-4 {
        // "{:.4e}" renders the exponent without padding ("2.1022e-6");
        // widen it to two digits.
        let s = format!("{p:.4e}");
        match s.split_once('e') {
            Some((mantissa, exp)) => {
                let digits = exp.trim_start_matches('-');
                format!("{mantissa}e-{digits:0>2}")
            }
            None => s,
        }
    } else {
        format_fixed(p, 4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_row_report() {
        let mut t = Table::new(vec!["run", "score"]);
        t.push(vec![Cell::text("run"), Cell::Fixed4(0.48041)]);
        assert_eq!(write_tsv_report(&t), "run\tscore\nrun\t0.4804\n");
    }

    #[test]
    fn empty_table_is_header_only() {
        let t = Table::new(vec!["a", "b"]);
        assert_eq!(write_tsv_report(&t), "a\tb\n");
    }

    #[test]
    fn rounds_half_away_from_zero() {
        assert_eq!(format_fixed(0.95255, 4), "0.9526");
        assert_eq!(format_fixed(-0.95255, 4), "-0.9526");
        assert_eq!(format_fixed(0.00005, 4), "0.0001");
        assert_eq!(format_fixed(2.5e-5, 4), "0.0000");
        assert_eq!(format_fixed(0.99995, 4), "1.0000");
        assert_eq!(format_fixed(9.99995, 4), "10.0000");
        assert_eq!(format_fixed(1.0, 4), "1.0000");
        assert_eq!(format_fixed(0.0, 4), "0.0000");
        assert_eq!(format_fixed(-0.00001, 4), "0.0000");
        assert_eq!(format_fixed(123.0, 0), "123");
        assert_eq!(format_fixed(0.1234565, 6), "0.123457");
    }

    #[test]
    fn pvalue_style() {
        assert_eq!(format_pvalue(0.7819), "0.7819");
        assert_eq!(format_pvalue(0.0431), "0.0431");
        assert_eq!(format_pvalue(2.1022e-6), "2.1022e-06");
        assert_eq!(format_pvalue(1.9769e-4), "0.0002");
        assert_eq!(format_pvalue(7.717e-26), "7.7170e-26");
        assert_eq!(format_pvalue(0.0), "0.0000");
        assert_eq!(format_pvalue(1.0), "1.0000");
    }
}

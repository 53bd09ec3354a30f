use std::io::{self, Write};

use crate::jobs::Row;

pub const COLUMNS: [&str; 8] =
    ["re_s", "im_s", "n", "d", "re_value", "im_value", "abs_err_est", "extra"];

/// 17 significant digits.
fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for r in rows {
        w.write_record([
            sig17(r.re_s),
            sig17(r.im_s),
            r.n.map(|n| n.to_string()).unwrap_or_default(),
            r.d.map(|d| d.to_string()).unwrap_or_default(),
            sig17(r.re_value),
            sig17(r.im_value),
            r.abs_err_est.map(sig17).unwrap_or_default(),
            r.extra.clone(),
        ])?;
    }
    w.flush()
}

/// One JSON object per line.
pub fn write_json<W: Write>(rows: &[Row], mut out: W) -> io::Result<()> {
    for r in rows {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Rounds to the 15 significant digits a double always carries.
fn human(x: f64) -> String {
    let rounded: f64 = format!("{x:.14e}").parse().unwrap_or(x);
    format!("{rounded:?}")
}

/// A lone scalar for reading on a terminal; CSV and JSON keep every bit.
pub fn plain_value(row: &Row) -> String {
    if row.im_value == 0.0 {
        human(row.re_value)
    } else {
        format!("{},{}", human(row.re_value), human(row.im_value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_rounding() {
        assert_eq!(human(1.9999999999999987), "2.0");
        assert_eq!(human(-1.4603545088095868), "-1.46035450880959");
        assert_eq!(human(0.0), "0.0");
    }
}

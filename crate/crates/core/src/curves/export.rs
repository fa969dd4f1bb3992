// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

use crate::error::{Error, Result};
use crate::io::fmt_f64;

use super::curve::DiscreteCurve;

/// Writes `t, y1..yn` followed by the named extra columns, one row per
/// sample. `None` cells are left empty.
pub fn write_curve_csv<W: Write>(
    mut w: W,
    curve: &DiscreteCurve,
    extra: &[(&str, Vec<Option<f64>>)],
) -> Result<()> {
    if let Some((name, col)) = extra.iter().find(|(_, c)| c.len() != curve.len()) {
        return Err(Error::InvalidInput(format!(
            "column `{name}` has {} rows, curve has {}",
            col.len(),
            curve.len()
        )));
    }
    let n = curve.basis().dim();
    let mut header = vec!["t".to_string()];
    header.extend((1..=n).map(|i| format!("y{i}")));
    header.extend(extra.iter().map(|(name, _)| name.to_string()));
    writeln!(w, "{}", header.join(","))?;
    for (k, f) in curve.f_samples().iter().enumerate() {
        let mut row = vec![fmt_f64(curve.time(k))];
        row.extend(f.coeffs().iter().map(|c| fmt_f64(*c)));
        row.extend(extra.iter().map(|(_, col)| col[k].map(fmt_f64).unwrap_or_default()));
        writeln!(w, "{}", row.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{su2, AlgebraElement};
    use std::sync::Arc;

    #[test]
    fn header_and_rows() {
        let b = Arc::new(su2());
        let f = vec![AlgebraElement::basis_vector(b.clone(), 0); 3];
        let c = DiscreteCurve::new(b, 0.0, 0.5, f, None).unwrap();
        let mut out = Vec::new();
        write_curve_csv(&mut out, &c, &[("res_norm", vec![None, Some(0.25), None])]).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "t,y1,y2,y3,res_norm");
        assert_eq!(lines.len(), 4);
        assert!(lines[2].ends_with(",2.5000000000000000e-1"));
        assert!(lines[1].ends_with(','));
        assert!(write_curve_csv(Vec::new(), &c, &[("x", vec![None])]).is_err());
    }
}

//! Report serialization: JSON lines for check reports and CSV for grid
//! sweeps.
//!
//! JSON lines carry `{check_id, params, lhs, rhs, margin, tol, pass}`, one
//! report per line. The CSV has columns `z1_re, z1_im, …, zn_re, zn_im,
//! check_id, lhs, rhs, margin, pass`; reports without a point leave the
//! coordinate cells empty.

use std::io::Write;

use crate::bounds::BoundReport;
use crate::error::Result;

/// Streams reports as JSON lines.
pub struct JsonLinesWriter<W: Write> {
    inner: W,
}

impl<W: Write> JsonLinesWriter<W> {
    pub fn new(inner: W) -> Self {
        Self { inner }
    }

    pub fn write(&mut self, report: &BoundReport) -> Result<()> {
        serde_json::to_writer(&mut self.inner, report)?;
        self.inner.write_all(b"\n")?;
        Ok(())
    }

    pub fn into_inner(mut self) -> Result<W> {
        self.inner.flush()?;
        Ok(self.inner)
    }
}

pub fn write_json_lines<W: Write>(w: W, reports: &[BoundReport]) -> Result<()> {
    let mut out = JsonLinesWriter::new(w);
    for r in reports {
        out.write(r)?;
    }
    out.into_inner()?;
    Ok(())
}

/// Streams reports of an `n`-dimensional grid sweep as CSV.
pub struct SweepCsvWriter<W: Write> {
    inner: csv::Writer<W>,
    n: usize,
}

impl<W: Write> SweepCsvWriter<W> {
    pub fn new(w: W, n: usize) -> Result<Self> {
        let mut inner = csv::Writer::from_writer(w);
        let mut header: Vec<String> = (1..=n)
            .flat_map(|j| [format!("z{j}_re"), format!("z{j}_im")])
            .collect();
        header.extend(["check_id", "lhs", "rhs", "margin", "pass"].map(String::from));
        inner.write_record(&header)?;
        Ok(Self { inner, n })
    }

    pub fn write(&mut self, report: &BoundReport) -> Result<()> {
        let mut row: Vec<String> = match &report.params.z {
            Some(z) => z
                .coords()
                .iter()
                .flat_map(|c| [c.re.to_string(), c.im.to_string()])
                .collect(),
            None => vec![String::new(); 2 * self.n],
        };
        row.push(report.check_id.to_string());
        row.extend([report.lhs, report.rhs, report.margin].map(|v| v.to_string()));
        row.push(report.pass.to_string());
        self.inner.write_record(&row)?;
        Ok(())
    }

    pub fn into_inner(self) -> Result<W> {
        self.inner
            .into_inner()
            .map_err(|e| crate::error::Error::Io(e.into_error()))
    }
}

//! CSV emission. Reals use 17 significant digits.

use std::io::Write;

use natred::region::{RegionCell, SurfaceSample};

use crate::config::InputError;

pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_region<W: Write>(out: W, cells: &[RegionCell]) -> Result<(), InputError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t1", "t2", "sufficient", "necessary", "cad", "solver"])?;
    for c in cells {
        w.write_record([
            real(c.t1),
            real(c.t2),
            c.sufficient.to_string(),
            c.necessary.to_string(),
            c.cad.as_str().to_owned(),
            c.solver.map(|s| s.as_str().to_owned()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_examples<W: Write>(out: W, cells: &[(&str, RegionCell)]) -> Result<(), InputError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["label", "t1", "t2", "sufficient", "necessary", "cad", "solver"])?;
    for (label, c) in cells {
        w.write_record([
            label.to_string(),
            real(c.t1),
            real(c.t2),
            c.sufficient.to_string(),
            c.necessary.to_string(),
            c.cad.as_str().to_owned(),
            c.solver.map(|s| s.as_str().to_owned()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_surface<W: Write>(out: W, samples: &[SurfaceSample]) -> Result<(), InputError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["alpha1", "alpha2", "scalar"])?;
    for s in samples {
        w.write_record([real(s.alpha1), real(s.alpha2), s.scalar.map(real).unwrap_or_default()])?;
    }
    w.flush()?;
    Ok(())
}

use crate::error::{Error, Result};
use crate::spectral::{Real, Spectrum};
use std::path::Path;

/// `index,eigenvalue` rows with 17 significant digits.
pub fn spectrum_to_csv<T: Real>(sp: &Spectrum<T>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["index", "eigenvalue"])
        .expect("in-memory write");
    for (i, v) in sp.values().iter().enumerate() {
        w.write_record([i.to_string(), format!("{:.16e}", v.to_f64_lossy())])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
}

pub fn values_from_csv(text: &str) -> Result<Vec<f64>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| Error::Parse(e.to_string()))?;
    if header != vec!["index", "eigenvalue"] {
        return Err(Error::Parse(format!("unexpected header {header:?}")));
    }
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
        let idx: usize = rec[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad index '{}'", &rec[0])))?;
        if idx != i {
            return Err(Error::Parse(format!("row {i} has index {idx}")));
        }
        out.push(
            rec[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad eigenvalue '{}'", &rec[1])))?,
        );
    }
    Ok(out)
}

pub fn write_spectrum_csv<T: Real>(sp: &Spectrum<T>, path: &Path) -> Result<()> {
    std::fs::write(path, spectrum_to_csv(sp))?;
    Ok(())
}

pub fn read_spectrum_csv(path: &Path) -> Result<Vec<f64>> {
    values_from_csv(&std::fs::read_to_string(path)?)
}

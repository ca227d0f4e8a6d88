use std::io::Write;

use gel_core::entropy::{EntropyReport, Rational};
use gel_core::verify::{round_sig12, Table1Row};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn float(x: f64) -> String {
    format!("{}", round_sig12(x))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn ratio(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Two significant digits, keeping trailing zeros ("0.50", "0.0044").
pub fn two_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0.00".into();
    }
    let digits = 1 - x.abs().log10().floor() as i32;
    let s = format!("{:.*}", digits.max(0) as usize, x);
    // rounding may carry into a new leading digit, e.g. 0.0995 -> 0.100
    let carried = s.parse::<f64>().is_ok_and(|v| v.abs().log10().floor() as i32 > x.abs().log10().floor() as i32);
    if carried && digits > 0 {
        format!("{:.*}", (digits - 1) as usize, x)
    } else {
        s
    }
}

#[derive(Serialize)]
struct RenyiValue {
    alpha: f64,
    entropy: Option<f64>,
}

#[derive(Serialize)]
struct EntropyRecord<'a> {
    graph6: &'a str,
    n: usize,
    m: usize,
    von_neumann: Option<f64>,
    renyi: Vec<RenyiValue>,
    tr2: Option<String>,
    star_test: Option<bool>,
    density_test: Option<bool>,
}

pub struct EntropyWriter<W: Write> {
    format: Format,
    csv: Option<csv::Writer<W>>,
    out: Option<W>,
}

impl<W: Write> EntropyWriter<W> {
    pub fn new(out: W, format: Format, alphas: &[f64]) -> std::io::Result<Self> {
        let mut w = EntropyWriter { format, csv: None, out: None };
        if format == Format::Csv {
            let mut c = csv::Writer::from_writer(out);
            let mut header = vec!["graph6".to_string(), "n".into(), "m".into(), "S".into()];
            header.extend(alphas.iter().map(|a| format!("H_{a}")));
            header.extend(["tr2".into(), "star_test".into(), "density_test".into()]);
            c.write_record(&header)?;
            w.csv = Some(c);
        } else {
            w.out = Some(out);
        }
        Ok(w)
    }

    pub fn write(&mut self, rep: &EntropyReport, n: usize, m: usize) -> std::io::Result<()> {
        let round = |v: Option<f64>| v.map(round_sig12);
        match self.format {
            Format::Json => {
                let rec = EntropyRecord {
                    graph6: &rep.graph6,
                    n,
                    m,
                    von_neumann: round(rep.von_neumann),
                    renyi: rep.renyi.iter().map(|&(alpha, h)| RenyiValue { alpha, entropy: round(h) }).collect(),
                    tr2: rep.tr2.map(ratio),
                    star_test: rep.star_test,
                    density_test: rep.density_test,
                };
                let out = self.out.as_mut().expect("json writer");
                serde_json::to_writer(&mut *out, &rec)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut row = vec![rep.graph6.clone(), n.to_string(), m.to_string(), opt(rep.von_neumann.map(float))];
                row.extend(rep.renyi.iter().map(|&(_, h)| opt(h.map(float))));
                row.extend([opt(rep.tr2.map(ratio)), opt(rep.star_test), opt(rep.density_test)]);
                self.csv.as_mut().expect("csv writer").write_record(&row)?;
                Ok(())
            }
            Format::Text => {
                let out = self.out.as_mut().expect("text writer");
                let na = || "undefined".to_string();
                write!(out, "{}  n={n} m={m} S={}", rep.graph6, rep.von_neumann.map(float).unwrap_or_else(na))?;
                for (a, h) in &rep.renyi {
                    write!(out, " H_{a}={}", h.map(float).unwrap_or_else(na))?;
                }
                let verdict = |v: Option<bool>| match v {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "n/a",
                };
                writeln!(
                    out,
                    " tr2={} star_test={} density_test={}",
                    rep.tr2.map(ratio).unwrap_or_else(na),
                    verdict(rep.star_test),
                    verdict(rep.density_test)
                )
            }
        }
    }

    pub fn finish(self) -> std::io::Result<()> {
        if let Some(mut c) = self.csv {
            c.flush()?;
        }
        if let Some(mut o) = self.out {
            o.flush()?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Table1Record {
    n: usize,
    failures: u64,
    total: u64,
    percentage: serde_json::Number,
}

pub fn write_table1<W: Write>(out: W, rows: &[Table1Row], format: Format) -> std::io::Result<()> {
    let pct = |r: &Table1Row| two_sig(r.fraction());
    match format {
        Format::Json => {
            let recs: Vec<_> = rows
                .iter()
                .map(|r| Table1Record {
                    n: r.n,
                    failures: r.failures,
                    total: r.total,
                    percentage: pct(r).parse().expect("decimal string"),
                })
                .collect();
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &recs)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(out);
            c.write_record(["n", "failures", "total", "percentage"])?;
            for r in rows {
                c.write_record([r.n.to_string(), r.failures.to_string(), r.total.to_string(), pct(r)])?;
            }
            c.flush()
        }
        Format::Text => {
            let mut out = out;
            writeln!(out, "{:>3} {:>10} {:>12} {:>10}", "n", "failures", "connected", "fraction")?;
            for r in rows {
                writeln!(out, "{:>3} {:>10} {:>12} {:>10}", r.n, r.failures, r.total, pct(r))?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_significant_digits() {
        assert_eq!(two_sig(49.0 / 11117.0), "0.0044");
        assert_eq!(two_sig(0.5), "0.50");
        assert_eq!(two_sig(4.0 / 21.0), "0.19");
        assert_eq!(two_sig(16.0 / 853.0), "0.019");
        assert_eq!(two_sig(0.0), "0.00");
        assert_eq!(two_sig(0.0996), "0.10");
    }

    #[test]
    fn floats_have_twelve_digits() {
        assert_eq!(float(1.0 / 3.0), "0.333333333333");
        assert_eq!(float(2.0), "2");
    }
}

use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

/// One computed value from `p`, `pm` or `qm`.
pub struct Single {
    pub m: Option<u64>,
    pub n: u64,
    pub count: BigUint,
}

pub struct Row {
    pub n: u64,
    pub p: BigUint,
    pub p_m: BigUint,
    pub q_m: BigUint,
    pub complement: BigUint,
}

pub fn write_single<W: Write>(out: &mut W, format: OutputFormat, v: &Single) -> io::Result<()> {
    match format {
        OutputFormat::Plain => writeln!(out, "{}", v.count),
        OutputFormat::Csv => match v.m {
            Some(m) => write!(out, "m,n,count\n{m},{},{}\n", v.n, v.count),
            None => write!(out, "n,count\n{},{}\n", v.n, v.count),
        },
        OutputFormat::Json => {
            let mut entry = json!({ "n": v.n, "count": v.count.to_string() });
            if let Some(m) = v.m {
                entry["m"] = json!(m);
            }
            write_json(out, json!({ "results": [entry] }))
        }
    }
}

pub fn write_table<W: Write>(out: &mut W, format: OutputFormat, rows: &[Row]) -> io::Result<()> {
    match format {
        OutputFormat::Plain => {
            for r in rows {
                writeln!(out, "{} {} {} {} {}", r.n, r.p, r.p_m, r.q_m, r.complement)?;
            }
            Ok(())
        }
        OutputFormat::Csv => {
            out.write_all(b"n,p,p_m,q_m,complement\n")?;
            for r in rows {
                writeln!(out, "{},{},{},{},{}", r.n, r.p, r.p_m, r.q_m, r.complement)?;
            }
            Ok(())
        }
        OutputFormat::Json => {
            let results: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "p": r.p.to_string(),
                        "p_m": r.p_m.to_string(),
                        "q_m": r.q_m.to_string(),
                        "complement": r.complement.to_string(),
                    })
                })
                .collect();
            write_json(out, json!({ "results": results }))
        }
    }
}

fn write_json<W: Write>(out: &mut W, value: Value) -> io::Result<()> {
    serde_json::to_writer(&mut *out, &value)?;
    out.write_all(b"\n")
}

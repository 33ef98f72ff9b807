//! Tab-separated results files for enumeration runs, with resume support.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::{classify, CandidateRecord, Flag};
use crate::delsarte::ExponentMatrix;
use crate::error::{Error, Result};

pub const RESULTS_HEADER: &str = "# matrix\tm\tlambda\th20\trho\tflags";

fn format_record(r: &CandidateRecord) -> String {
    let matrix: Vec<String> = r.matrix.flatten().iter().map(u32::to_string).collect();
    let rho = r.picard.map_or_else(|| "-".to_owned(), |p| p.to_string());
    let flags = if r.flags.is_empty() {
        "-".to_owned()
    } else {
        r.flags.iter().map(|f| f.as_str()).collect::<Vec<_>>().join(",")
    };
    format!("{}\t{}\t{}\t{}\t{}\t{}", matrix.join(","), r.m, r.lambda, r.h20, rho, flags)
}

fn parse_record(line: &str, lineno: usize) -> Result<CandidateRecord> {
    let bad = |message: &str| Error::Results { line: lineno, message: message.to_owned() };
    let fields: Vec<&str> = line.split('\t').collect();
    let [matrix, m, lambda, h20, rho, flags] = fields[..] else {
        return Err(bad("expected 6 tab-separated fields"));
    };
    let entries: Vec<u32> =
        matrix.split(',').map(str::parse).collect::<std::result::Result<_, _>>().map_err(|_| bad("bad matrix"))?;
    if entries.len() != 16 {
        return Err(bad("matrix needs 16 entries"));
    }
    let picard = match rho {
        "-" => None,
        s => Some(s.parse().map_err(|_| bad("bad rho"))?),
    };
    let flags = match flags {
        "-" => BTreeSet::new(),
        s => s.split(',').map(|f| Flag::parse(f).ok_or_else(|| bad("unknown flag"))).collect::<Result<_>>()?,
    };
    Ok(CandidateRecord {
        matrix: ExponentMatrix::from_flat(&entries),
        m: m.parse().map_err(|_| bad("bad m"))?,
        lambda: lambda.parse().map_err(|_| bad("bad lambda"))?,
        h20: h20.parse().map_err(|_| bad("bad h20"))?,
        picard,
        flags,
    })
}

pub fn write_results(path: &Path, records: &[CandidateRecord]) -> Result<()> {
    let io = |e: std::io::Error| Error::Results { line: 0, message: e.to_string() };
    let mut w = BufWriter::new(fs::File::create(path).map_err(io)?);
    writeln!(w, "{RESULTS_HEADER}").map_err(io)?;
    for r in records {
        writeln!(w, "{}", format_record(r)).map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Reads a results file. A truncated final line (no trailing newline) is
/// ignored so that interrupted runs can resume.
pub fn read_results(path: &Path) -> Result<Vec<CandidateRecord>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Results { line: 0, message: e.to_string() })?;
    let complete = if text.ends_with('\n') { &text[..] } else { &text[..text.rfind('\n').map_or(0, |i| i + 1)] };
    complete
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
        .map(|(i, l)| parse_record(l, i + 1))
        .collect()
}

/// A classification run over a fixed candidate list, checkpointed to a file.
pub struct EnumerationRun {
    path: PathBuf,
    batch: usize,
}

impl EnumerationRun {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self { path: path.into(), batch: 2048 }
    }

    pub fn with_batch(mut self, batch: usize) -> Self {
        self.batch = batch.max(1);
        self
    }

    /// Classifies every candidate not already in the file, appending in
    /// batches, then rewrites the file sorted by canonical form. Stops early
    /// after `limit` new records if given. Returns the records in file order
    /// and the number classified by this call.
    pub fn run(&self, cands: &[ExponentMatrix], limit: Option<usize>) -> Result<(Vec<CandidateRecord>, usize)> {
        use rayon::prelude::*;
        let io = |e: std::io::Error| Error::Results { line: 0, message: e.to_string() };
        let mut done: BTreeMap<ExponentMatrix, CandidateRecord> = if self.path.exists() {
            read_results(&self.path)?.into_iter().map(|r| (r.matrix, r)).collect()
        } else {
            BTreeMap::new()
        };
        if !self.path.exists() || done.is_empty() {
            write_results(&self.path, &done.values().cloned().collect::<Vec<_>>())?;
        } else {
            // Drop any partial trailing line before appending.
            write_results(&self.path, &done.values().cloned().collect::<Vec<_>>())?;
        }
        let todo: Vec<ExponentMatrix> = cands.iter().filter(|m| !done.contains_key(m)).copied().collect();
        let todo = &todo[..limit.map_or(todo.len(), |l| l.min(todo.len()))];
        for chunk in todo.chunks(self.batch) {
            let recs: Vec<CandidateRecord> = chunk.par_iter().map(classify).collect();
            let mut f = fs::OpenOptions::new().append(true).open(&self.path).map_err(io)?;
            let mut text = String::new();
            for r in &recs {
                text.push_str(&format_record(r));
                text.push('\n');
            }
            f.write_all(text.as_bytes()).map_err(io)?;
            for r in recs {
                done.insert(r.matrix, r);
            }
        }
        let all: Vec<CandidateRecord> = done.into_values().collect();
        write_results(&self.path, &all)?;
        Ok((all, todo.len()))
    }
}

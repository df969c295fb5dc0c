//! Table, JSON and CSV renderers.

use crate::commands::{CliError, Output, Section};
use crate::Format;

pub fn render(out: &Output, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => json(out),
        Format::Csv => csv(out),
        Format::Table => Ok(table(out)),
    }
}

fn json(out: &Output) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(&out.envelope)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn write_aligned(buf: &mut String, headers: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    buf.push_str(&line(headers.to_vec()));
    buf.push('\n');
    for row in rows {
        buf.push_str(&line(row.iter().map(String::as_str).collect()));
        buf.push('\n');
    }
}

fn table(out: &Output) -> String {
    let mut buf = String::new();
    for (n, s) in out.sections.iter().enumerate() {
        if n > 0 {
            buf.push('\n');
        }
        if let Some(t) = &s.title {
            buf.push_str(&format!("# {t}\n"));
        }
        write_aligned(&mut buf, &s.headers, &s.rows);
        for f in &s.footer {
            buf.push_str(f);
            buf.push('\n');
        }
    }
    if !out.envelope.errata.is_empty() {
        buf.push_str(&format!("\n# errata ({})\n", out.envelope.errata.len()));
        let rows: Vec<Vec<String>> = out
            .envelope
            .errata
            .iter()
            .map(|e| {
                vec![
                    e.location.clone(),
                    e.paper_value.clone(),
                    e.computed_value.clone(),
                    e.note.clone(),
                ]
            })
            .collect();
        write_aligned(&mut buf, &["location", "paper", "computed", "note"], &rows);
    }
    buf
}

fn csv_section(headers: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let err = |e: &dyn std::fmt::Display| CliError::Internal(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).map_err(|e| err(&e))?;
    for r in rows {
        w.write_record(r).map_err(|e| err(&e))?;
    }
    let bytes = w.into_inner().map_err(|e| err(&e))?;
    String::from_utf8(bytes).map_err(|e| err(&e))
}

/// One CSV table per section (sections with equal headers are merged), then
/// the errata as a separate table after a blank line.
fn csv(out: &Output) -> Result<String, CliError> {
    let mut merged: Vec<Section> = Vec::new();
    for s in &out.sections {
        match merged.last_mut() {
            Some(m) if m.headers == s.headers => m.rows.extend(s.rows.iter().cloned()),
            _ => merged.push(s.clone()),
        }
    }
    let mut parts = Vec::new();
    for s in &merged {
        parts.push(csv_section(&s.headers, &s.rows)?);
    }
    if !out.envelope.errata.is_empty() {
        let rows: Vec<Vec<String>> = out
            .envelope
            .errata
            .iter()
            .map(|e| {
                vec![
                    e.location.clone(),
                    e.paper_value.clone(),
                    e.computed_value.clone(),
                    e.note.clone(),
                ]
            })
            .collect();
        parts.push(csv_section(
            &["location", "paper", "computed", "note"],
            &rows,
        )?);
    }
    Ok(parts.join("\n"))
}

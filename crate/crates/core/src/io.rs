//! Text formats: group specs, certificate files, result records and the
//! rendered table.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::constructions::{GroupSpec, WreathTop};
use crate::cover::{CoverOutcome, Status};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::solvabilizer::Mode;
use crate::theorems::Certificate;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Splits on `sep` outside any brackets.
fn split_top(text: &str, sep: char) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(format!("unbalanced brackets in `{text}`")));
                }
            }
            c if c == sep && depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced brackets in `{text}`")));
    }
    parts.push(text[start..].trim());
    Ok(parts)
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(format!("expected {what}, found `{s}`")))
}

/// Permutations separated by `;`, padded to a common degree.
fn parse_perm_list(text: &str) -> Result<Vec<Permutation>> {
    let perms: Vec<Permutation> = split_top(text, ';')?
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse_cycles(s, 0))
        .collect::<Result<_>>()?;
    let d = perms.iter().map(|p| p.degree()).max().unwrap_or(0);
    Ok(perms.into_iter().map(|p| p.extended(d)).collect())
}

/// Parses the one-line group syntax, e.g. `pgammal2(9)`,
/// `wreath(psl2(4),2,cycle)` or `product(psl2(7),psl2(9))`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let text = text.trim();
    let lower = text.to_ascii_lowercase();
    if lower == "m10" {
        return Ok(GroupSpec::M10);
    }
    let open = text
        .find('(')
        .ok_or_else(|| parse_err(format!("expected `name(args)`, found `{text}`")))?;
    if !text.ends_with(')') {
        return Err(parse_err(format!(
            "missing closing parenthesis in `{text}`"
        )));
    }
    let name = lower[..open].trim();
    let inner = &text[open + 1..text.len() - 1];
    let args = || split_top(inner, ',');
    let one = |what: &str| -> Result<u64> {
        let a = args()?;
        if a.len() != 1 {
            return Err(parse_err(format!("{name} takes one {what}")));
        }
        parse_num(a[0], what)
    };
    Ok(match name {
        "symmetric" | "sym" => GroupSpec::Symmetric(one("degree")? as usize),
        "alternating" | "alt" => GroupSpec::Alternating(one("degree")? as usize),
        "dihedral" => GroupSpec::Dihedral(one("degree")? as usize),
        "psl2" => GroupSpec::Psl2(one("field order")?),
        "pgl2" => GroupSpec::Pgl2(one("field order")?),
        "pgammal2" => GroupSpec::PGammaL2(one("field order")?),
        "psigmal2" => GroupSpec::PSigmaL2(one("field order")?),
        "gl2" => GroupSpec::Gl2(one("field order")?),
        "sl2" => GroupSpec::Sl2(one("field order")?),
        "suzuki" | "sz" => GroupSpec::Suzuki(one("field order")?),
        "product" => {
            let fs = args()?
                .into_iter()
                .map(parse_group_spec)
                .collect::<Result<Vec<_>>>()?;
            if fs.is_empty() {
                return Err(parse_err("product needs at least one factor"));
            }
            GroupSpec::Product(fs)
        }
        "squished" => {
            let a = args()?;
            if a.len() != 2 {
                return Err(parse_err("squished takes two groups"));
            }
            GroupSpec::Squished(
                Box::new(parse_group_spec(a[0])?),
                Box::new(parse_group_spec(a[1])?),
            )
        }
        "wreath" => {
            let a = args()?;
            if a.len() != 3 {
                return Err(parse_err("wreath takes (base, n, top)"));
            }
            let top = match a[2].to_ascii_lowercase().as_str() {
                "cycle" => WreathTop::Cycle,
                "swap" => WreathTop::Swap,
                "symmetric" => WreathTop::Symmetric,
                t if t.starts_with('[') && t.ends_with(']') => {
                    WreathTop::Generators(parse_perm_list(&a[2][1..a[2].len() - 1])?)
                }
                t => return Err(parse_err(format!("unknown wreath top `{t}`"))),
            };
            GroupSpec::Wreath(
                Box::new(parse_group_spec(a[0])?),
                parse_num(a[1], "block count")?,
                top,
            )
        }
        "raw" => {
            let perms = parse_perm_list(inner)?;
            if perms.is_empty() {
                return Err(Error::EmptyGenerators);
            }
            GroupSpec::Raw(perms)
        }
        _ => return Err(parse_err(format!("unknown group family `{name}`"))),
    })
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Reads a certificate: one permutation per line in 1-based cycle notation,
/// `#` comments, blank lines ignored. Header comments `# group: ..`,
/// `# mode: ..` and `# size: ..` are recognised.
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut group = None;
    let mut mode = Mode::All;
    let mut claimed = None;
    let mut elements = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((key, value)) = comment.split_once(':') {
                let value = value.trim();
                match key.trim().to_ascii_lowercase().as_str() {
                    "group" => group = Some(parse_group_spec(value)?),
                    "mode" => mode = value.parse()?,
                    "size" => claimed = Some(parse_num(value, "size")?),
                    _ => {}
                }
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let p = Permutation::parse_cycles(line, 0)
            .map_err(|e| parse_err(format!("line {}: {e}", lineno + 1)))?;
        elements.push(p);
    }
    Ok(Certificate {
        group,
        mode,
        elements,
        claimed_size: claimed,
    })
}

/// Inverse of [`parse_certificate`].
pub fn render_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    if let Some(g) = &cert.group {
        let _ = writeln!(out, "# group: {g}");
    }
    let _ = writeln!(out, "# mode: {}", cert.mode);
    if let Some(s) = cert.claimed_size {
        let _ = writeln!(out, "# size: {s}");
    }
    for p in &cert.elements {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn read_certificate(path: &Path) -> Result<Certificate> {
    parse_certificate(&std::fs::read_to_string(path)?)
}

/// One solved quantity inside a [`ResultRecord`].
#[derive(Clone, Debug, PartialEq)]
pub struct OutcomeRecord {
    pub status: Status,
    pub lower: usize,
    pub upper: Option<usize>,
    pub nodes: u64,
    pub elapsed_secs: f64,
    pub via_quotient: bool,
    pub certificate: Option<Vec<Permutation>>,
    pub notes: Vec<String>,
}

impl From<&CoverOutcome> for OutcomeRecord {
    fn from(o: &CoverOutcome) -> Self {
        OutcomeRecord {
            status: o.status,
            lower: o.lower,
            upper: o.upper,
            nodes: o.stats.nodes,
            elapsed_secs: o.stats.elapsed.as_secs_f64(),
            via_quotient: o.via_quotient,
            certificate: o.certificate_perms.clone(),
            notes: o.notes.clone(),
        }
    }
}

impl OutcomeRecord {
    /// Table cell: the value, `[a,b]`, or `∞`.
    pub fn cell(&self) -> String {
        match (self.status, self.upper) {
            (Status::Exact, _) => self.lower.to_string(),
            (Status::Interval, Some(u)) => format!("[{},{u}]", self.lower),
            _ => "∞".to_string(),
        }
    }
}

/// Everything recorded for one group.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRecord {
    pub group: String,
    pub name: String,
    pub order: usize,
    pub alpha: Option<OutcomeRecord>,
    pub alpha_inv: Option<OutcomeRecord>,
    pub log: Vec<String>,
    pub engine_version: String,
}

const RECORD_HEADER: &str = "solvcover-result v1";

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Exact => "exact",
        Status::Interval => "interval",
        Status::Infeasible => "infeasible",
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\n', "\\n")
}

fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('n') => out.push('\n'),
                Some(other) => out.push(other),
                None => out.push('\\'),
            }
        } else {
            out.push(c);
        }
    }
    out
}

impl ResultRecord {
    /// Line-oriented `key: value` text; repeated keys form lists.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{RECORD_HEADER}");
        let _ = writeln!(out, "group: {}", escape(&self.group));
        let _ = writeln!(out, "name: {}", escape(&self.name));
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "engine: {}", escape(&self.engine_version));
        for (key, o) in [("alpha", &self.alpha), ("alpha_inv", &self.alpha_inv)] {
            let Some(o) = o else { continue };
            let _ = writeln!(out, "{key}.status: {}", status_word(o.status));
            let _ = writeln!(out, "{key}.lower: {}", o.lower);
            let upper = o.upper.map_or("none".to_string(), |u| u.to_string());
            let _ = writeln!(out, "{key}.upper: {upper}");
            let _ = writeln!(out, "{key}.nodes: {}", o.nodes);
            let _ = writeln!(out, "{key}.elapsed_secs: {}", o.elapsed_secs);
            let _ = writeln!(out, "{key}.via_quotient: {}", o.via_quotient);
            if let Some(c) = &o.certificate {
                let _ = writeln!(out, "{key}.certificate.size: {}", c.len());
                for p in c {
                    let _ = writeln!(out, "{key}.certificate: {p}");
                }
            }
            for n in &o.notes {
                let _ = writeln!(out, "{key}.note: {}", escape(n));
            }
        }
        for l in &self.log {
            let _ = writeln!(out, "log: {}", escape(l));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some(RECORD_HEADER) {
            return Err(parse_err("missing result record header"));
        }
        let mut rec = ResultRecord {
            group: String::new(),
            name: String::new(),
            order: 0,
            alpha: None,
            alpha_inv: None,
            log: Vec::new(),
            engine_version: String::new(),
        };
        let blank = || OutcomeRecord {
            status: Status::Exact,
            lower: 0,
            upper: None,
            nodes: 0,
            elapsed_secs: 0.0,
            via_quotient: false,
            certificate: None,
            notes: Vec::new(),
        };
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(": ")
                .or_else(|| line.strip_suffix(':').map(|k| (k, "")))
                .ok_or_else(|| parse_err(format!("malformed record line `{line}`")))?;
            let (slot, field) = match key.split_once('.') {
                Some(("alpha", f)) => (Some(&mut rec.alpha), f),
                Some(("alpha_inv", f)) => (Some(&mut rec.alpha_inv), f),
                _ => (None, key),
            };
            match slot {
                None => match field {
                    "group" => rec.group = unescape(value),
                    "name" => rec.name = unescape(value),
                    "order" => rec.order = parse_num(value, "order")?,
                    "engine" => rec.engine_version = unescape(value),
                    "log" => rec.log.push(unescape(value)),
                    _ => return Err(parse_err(format!("unknown record key `{key}`"))),
                },
                Some(slot) => {
                    let o = slot.get_or_insert_with(blank);
                    match field {
                        "status" => {
                            o.status = match value {
                                "exact" => Status::Exact,
                                "interval" => Status::Interval,
                                "infeasible" => Status::Infeasible,
                                v => return Err(parse_err(format!("unknown status `{v}`"))),
                            }
                        }
                        "lower" => o.lower = parse_num(value, "lower bound")?,
                        "upper" => {
                            o.upper = if value == "none" {
                                None
                            } else {
                                Some(parse_num(value, "upper bound")?)
                            }
                        }
                        "nodes" => o.nodes = parse_num(value, "node count")?,
                        "elapsed_secs" => o.elapsed_secs = parse_num(value, "seconds")?,
                        "via_quotient" => o.via_quotient = parse_num(value, "boolean")?,
                        "certificate.size" => {
                            o.certificate.get_or_insert_with(Vec::new);
                        }
                        "certificate" => o
                            .certificate
                            .get_or_insert_with(Vec::new)
                            .push(Permutation::parse_cycles(value, 0)?),
                        "note" => o.notes.push(unescape(value)),
                        _ => return Err(parse_err(format!("unknown record key `{key}`"))),
                    }
                }
            }
        }
        // Certificates are stored without trailing fixed points; restore a
        // common degree.
        for o in [&mut rec.alpha, &mut rec.alpha_inv].into_iter().flatten() {
            if let Some(c) = &mut o.certificate {
                let d = c.iter().map(|p| p.degree()).max().unwrap_or(0);
                for p in c.iter_mut() {
                    *p = p.extended(d);
                }
            }
        }
        Ok(rec)
    }
}

/// Reads every record file in `dir`; files without the record header are
/// skipped.
pub fn read_results_dir(dir: &Path) -> Result<Vec<ResultRecord>> {
    let mut out = Vec::new();
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    for p in paths {
        let Ok(text) = std::fs::read_to_string(&p) else {
            continue;
        };
        if text.starts_with(RECORD_HEADER) {
            out.push(
                ResultRecord::from_text(&text)
                    .map_err(|e| parse_err(format!("{}: {e}", p.display())))?,
            );
        }
    }
    Ok(out)
}

fn sorted(records: &[ResultRecord]) -> Vec<&ResultRecord> {
    let mut rows: Vec<&ResultRecord> = records.iter().collect();
    rows.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.name.cmp(&b.name)));
    rows
}

fn cells(r: &ResultRecord) -> [String; 4] {
    let cell = |o: &Option<OutcomeRecord>| o.as_ref().map_or("-".to_string(), |o| o.cell());
    [
        r.order.to_string(),
        r.name.clone(),
        cell(&r.alpha),
        cell(&r.alpha_inv),
    ]
}

/// Aligned `Order | Name | α | α_inv` table sorted by order.
pub fn render_table(records: &[ResultRecord]) -> String {
    let header = ["Order", "Name", "α", "α_inv"].map(String::from);
    let rows: Vec<[String; 4]> = sorted(records).into_iter().map(cells).collect();
    let mut width = header.clone().map(|h| h.chars().count());
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |r: &[String; 4]| {
        let padded: Vec<String> = r
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join(" | ").trim_end().to_string()
    };
    let mut out = line(&header);
    out.push('\n');
    out.push_str(&width.map(|w| "-".repeat(w)).join("-|-"));
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

/// Tab-separated form of [`render_table`].
pub fn render_tsv(records: &[ResultRecord]) -> String {
    let mut out = String::from("order\tname\talpha\talpha_inv\n");
    for r in sorted(records) {
        out.push_str(&cells(r).join("\t"));
        out.push('\n');
    }
    out
}

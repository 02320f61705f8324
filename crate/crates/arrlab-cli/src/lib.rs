//! Command implementations for the `arrlab` binary: JSON I/O around the
//! core library plus the `verify-paper` suite that replays the published
//! computations as one reproducible checklist.

pub mod verify;

use std::fs;
use std::path::Path;

use serde::Serialize;

use arrlab_core::classify::{classify_nine, ClassifyError};
use arrlab_core::geometry::{incidence_of, Arrangement};
use arrlab_core::lattice::{
    find_isomorphism, hirzebruch_filter, profile_of, HirzebruchVerdict, IncidenceStructure,
};
use arrlab_core::moduli::{solve_moduli, ModuliError};
use arrlab_core::{catalog, LatticeError};

/// Exit-code contract shared by every command.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

/// Output of a command: what to print and the process exit code.
pub struct CmdOutput {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> CmdOutput {
    CmdOutput { text, code: EXIT_OK }
}

fn input_error(msg: impl std::fmt::Display) -> CmdOutput {
    CmdOutput { text: format!("error: {msg}"), code: EXIT_INPUT }
}

fn violation(msg: impl std::fmt::Display) -> CmdOutput {
    CmdOutput { text: format!("error: {msg}"), code: EXIT_VIOLATION }
}

/// Reads `ARRLAB_THREADS` as a worker-count cap. The algorithms run on a
/// single worker, which every positive cap permits; the value is
/// validated so misconfiguration fails loudly.
pub fn thread_cap() -> Result<usize, String> {
    match std::env::var("ARRLAB_THREADS") {
        Err(_) => Ok(1),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n.min(1).max(1)),
            _ => Err(format!("ARRLAB_THREADS must be a positive integer, got {raw:?}")),
        },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn cmd_catalog_list(format: Format) -> CmdOutput {
    let entries = catalog::all_entries();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                name: String,
                n: usize,
                field_d: i64,
                notes: String,
            }
            let rows: Vec<Row> = entries
                .iter()
                .map(|e| Row {
                    name: e.name.clone(),
                    n: e.arrangement.n(),
                    field_d: e.arrangement.field_d(),
                    notes: e.notes.clone(),
                })
                .collect();
            ok(to_json(&rows))
        }
        Format::Text => {
            let mut out = String::new();
            for e in &entries {
                out.push_str(&format!(
                    "{:<14} n = {:>2}  Q(sqrt({:>2}))  {}\n",
                    e.name,
                    e.arrangement.n(),
                    e.arrangement.field_d(),
                    e.notes
                ));
            }
            out.push_str(&format!("{} entries", entries.len()));
            ok(out)
        }
    }
}

pub fn cmd_catalog_show(name: &str, format: Format) -> CmdOutput {
    let Some(entry) = catalog::by_name(name) else {
        return input_error(format!(
            "unknown catalog entry {name:?}; try `arrlab catalog list`"
        ));
    };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Shown {
                name: String,
                notes: String,
                arrangement: Arrangement,
                lattice: IncidenceStructure,
            }
            ok(to_json(&Shown {
                name: entry.name,
                notes: entry.notes,
                lattice: incidence_of(&entry.arrangement),
                arrangement: entry.arrangement,
            }))
        }
        Format::Text => {
            let lattice = incidence_of(&entry.arrangement);
            ok(format!(
                "{}\n{}\n\n{:?}\nlattice: {}",
                entry.name,
                entry.notes,
                entry.arrangement,
                serde_json::to_string(&lattice).unwrap()
            ))
        }
    }
}

fn read_file(path: &Path) -> Result<String, CmdOutput> {
    fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn parse_arrangement(path: &Path) -> Result<Arrangement, CmdOutput> {
    let raw = read_file(path)?;
    serde_json::from_str(&raw)
        .map_err(|e| input_error(format!("{}: not a valid arrangement: {e}", path.display())))
}

/// Parses a lattice file, or an arrangement file reduced to its lattice.
fn parse_lattice(path: &Path) -> Result<IncidenceStructure, CmdOutput> {
    let raw = read_file(path)?;
    if let Ok(s) = serde_json::from_str::<IncidenceStructure>(&raw) {
        return Ok(s);
    }
    match serde_json::from_str::<Arrangement>(&raw) {
        Ok(arr) => Ok(incidence_of(&arr)),
        Err(e) => Err(input_error(format!(
            "{}: neither a lattice nor an arrangement: {e}",
            path.display()
        ))),
    }
}

pub fn cmd_incidence(path: &Path) -> CmdOutput {
    let arr = match parse_arrangement(path) {
        Ok(arr) => arr,
        Err(out) => return out,
    };
    let lattice = incidence_of(&arr);
    let profile = match profile_of(&lattice) {
        Ok(p) => p,
        Err(e @ LatticeError::InconsistentStructure) => return violation(e),
        Err(e) => return input_error(e),
    };
    let verdict = hirzebruch_filter(&profile);
    #[derive(Serialize)]
    struct Report {
        lattice: IncidenceStructure,
        profile: arrlab_core::MultiplicityProfile,
        hirzebruch: HirzebruchVerdict,
    }
    ok(to_json(&Report { lattice, profile, hirzebruch: verdict }))
}

pub fn cmd_iso(a: &Path, b: &Path) -> CmdOutput {
    let sa = match parse_lattice(a) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let sb = match parse_lattice(b) {
        Ok(s) => s,
        Err(out) => return out,
    };
    match find_isomorphism(&sa, &sb) {
        Some(iso) => {
            let image: Vec<usize> = iso.perm.iter().map(|&v| v + 1).collect();
            ok(format!(
                "{}",
                image
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ))
        }
        None => CmdOutput { text: "none".into(), code: EXIT_NEGATIVE },
    }
}

pub fn cmd_classify(path: &Path) -> CmdOutput {
    let s = match parse_lattice(path) {
        Ok(s) => s,
        Err(out) => return out,
    };
    match classify_nine(&s) {
        Ok(class) => ok(to_json(&class)),
        Err(e @ ClassifyError::OutsideTheorem { .. }) => violation(e),
        Err(e) => input_error(e),
    }
}

pub fn cmd_moduli(path: &Path) -> CmdOutput {
    let s = match parse_lattice(path) {
        Ok(s) => s,
        Err(out) => return out,
    };
    match solve_moduli(&s) {
        Ok(report) => ok(to_json(&report)),
        Err(e @ ModuliError::Infeasible) => CmdOutput {
            text: format!("error: {e}"),
            code: EXIT_NEGATIVE,
        },
        Err(e) => violation(e),
    }
}

pub fn cmd_verify_paper(skip_slow: bool) -> CmdOutput {
    let report = verify::verify_paper(skip_slow);
    let code = if report.failures() == 0 { EXIT_OK } else { EXIT_VIOLATION };
    CmdOutput { text: report.render(), code }
}

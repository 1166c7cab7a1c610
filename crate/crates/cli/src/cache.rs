//! Persistent p(n) table. A missing file means an empty table; an
//! unreadable or invalid one is reported and then ignored.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::Path;

use pcount_core::PTable;
use tempfile::NamedTempFile;

pub struct Loaded {
    pub table: PTable,
    /// The file existed but could not be used, so it should be rewritten.
    pub stale: bool,
}

pub fn load(path: &Path) -> Loaded {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            return Loaded {
                table: PTable::new(),
                stale: false,
            }
        }
        Err(e) => return rebuild(path, &e),
    };
    match PTable::read_from(BufReader::new(file)) {
        Ok(table) => Loaded {
            table,
            stale: false,
        },
        Err(e) => rebuild(path, &e),
    }
}

fn rebuild(path: &Path, err: &dyn std::fmt::Display) -> Loaded {
    eprintln!(
        "pcount: warning: ignoring cache {}: {err}; rebuilding from scratch",
        path.display()
    );
    Loaded {
        table: PTable::new(),
        stale: true,
    }
}

/// Writes to a temporary file next to `path`, then renames it into place.
pub fn store(path: &Path, table: &PTable) -> io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let tmp = NamedTempFile::new_in(dir)?;
    {
        let mut out = BufWriter::new(tmp.as_file());
        table.write_to(&mut out)?;
        out.flush()?;
    }
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

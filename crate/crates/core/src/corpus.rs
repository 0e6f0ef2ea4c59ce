//! The bundled diagrams. Each is built here from a braid word or a PD
//! code; `export` writes them to disk in the native JSON schema, and
//! `load` reads a directory back.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, EdgeId, OverChoice, Side};

pub const CORPUS_ENV: &str = "FKT_CORPUS_DIR";

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{}: {cause}", path.display())]
    Io { path: PathBuf, cause: io::Error },
    #[error("{}: {cause}", path.display())]
    Diagram { path: PathBuf, cause: DiagramError },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Pd,
}

impl Format {
    /// `.pd` files are PD codes; everything else is JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("pd") => Format::Pd,
            _ => Format::Json,
        }
    }
}

pub const TREFOIL_PD: &str = "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]";
pub const FIGURE_EIGHT_PD: &str = "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]";
pub const KNOT_5_1_PD: &str = "X[1,6,2,7], X[3,8,4,9], X[5,10,6,1], X[7,2,8,3], X[9,4,10,5]";
pub const KNOT_5_2_PD: &str = "X[1,4,2,5], X[3,8,4,9], X[5,10,6,1], X[9,6,10,7], X[7,2,8,3]";
pub const WHITEHEAD_PD: &str = "X[6,1,7,2], X[10,7,5,8], X[4,5,1,6], X[2,10,3,9], X[8,4,9,3]";

/// Names of the two trefoil diagrams related by a single R3 move
/// (`s1 s2 s1 s2` and `s2 s1 s2 s2`).
pub const R3_PAIR: (&str, &str) = ("trefoil_r4", "trefoil_r4_r3");

fn braid(strands: usize, word: &[i32]) -> Diagram {
    Diagram::from_braid(strands, word).expect("bundled braid words are valid")
}

fn pd(code: &str) -> Diagram {
    Diagram::from_pd(code).expect("bundled PD codes are valid")
}

fn kink(positive: bool) -> Diagram {
    let d = Diagram::unknot()
        .flat_r1(EdgeId(0), Side::Left, OverChoice::Over)
        .expect("the unknot has edge 0");
    if (d.writhe() > 0) == positive {
        d
    } else {
        d.mirror()
    }
}

/// Chiral knots from PD codes get their link tag from the writhe sign of
/// the (reduced, alternating) diagram.
fn chiral(d: Diagram, right: &str, left: &str) -> Diagram {
    let tag = if d.writhe() > 0 { right } else { left };
    d.with_link(tag)
}

/// Every bundled diagram, sorted by name.
pub fn builtin() -> Vec<Diagram> {
    let mut all = vec![
        Diagram::unknot().with_name("unknot0").with_link("unknot"),
        kink(true).with_name("unknot1_pos").with_link("unknot"),
        kink(false).with_name("unknot1_neg").with_link("unknot"),
        braid(2, &[1, 1]).with_name("hopf_pos").with_link("hopf+"),
        braid(2, &[-1, -1]).with_name("hopf_neg").with_link("hopf-"),
        braid(2, &[1, 1, 1])
            .with_name("trefoil_r")
            .with_link("trefoil_r"),
        braid(2, &[-1, -1, -1])
            .with_name("trefoil_l")
            .with_link("trefoil_l"),
        braid(3, &[1, 2, 1, 2])
            .with_name(R3_PAIR.0)
            .with_link("trefoil_r"),
        braid(3, &[2, 1, 2, 2])
            .with_name(R3_PAIR.1)
            .with_link("trefoil_r"),
        braid(3, &[-1, -2, -1, -2])
            .with_name("trefoil_l4")
            .with_link("trefoil_l"),
        chiral(pd(TREFOIL_PD), "trefoil_r", "trefoil_l").with_name("trefoil_pd"),
        braid(3, &[1, -2, 1, -2])
            .with_name("figure_eight")
            .with_link("figure_eight"),
        pd(FIGURE_EIGHT_PD)
            .with_name("figure_eight_pd")
            .with_link("figure_eight"),
        braid(2, &[1, 1, 1, 1, 1])
            .with_name("knot_5_1")
            .with_link("5_1"),
        chiral(pd(KNOT_5_1_PD), "5_1", "5_1_mirror").with_name("knot_5_1_pd"),
        chiral(pd(KNOT_5_2_PD), "5_2", "5_2_mirror").with_name("knot_5_2"),
        pd(WHITEHEAD_PD)
            .with_name("whitehead")
            .with_link("whitehead"),
        braid(3, &[1, -2, 1, -2, 1, -2])
            .with_name("borromean")
            .with_link("borromean"),
    ];
    all.sort_by(|a, b| a.name().cmp(&b.name()));
    all
}

pub fn builtin_named(name: &str) -> Option<Diagram> {
    builtin().into_iter().find(|d| d.name() == Some(name))
}

/// `$FKT_CORPUS_DIR`, else the `corpus/` directory of the source tree.
pub fn default_dir() -> PathBuf {
    match std::env::var_os(CORPUS_ENV) {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR"))
            .ancestors()
            .nth(2)
            .expect("the crate sits two levels below the workspace root")
            .join("corpus"),
    }
}

/// Read one diagram file. Diagrams without a name take the file stem.
pub fn load_file(path: &Path, format: Option<Format>) -> Result<Diagram, CorpusError> {
    let text = fs::read_to_string(path).map_err(|cause| CorpusError::Io {
        path: path.into(),
        cause,
    })?;
    let parsed = match format.unwrap_or_else(|| Format::from_path(path)) {
        Format::Json => Diagram::from_json(&text),
        Format::Pd => Diagram::from_pd(&text),
    };
    let d = parsed.map_err(|cause| CorpusError::Diagram {
        path: path.into(),
        cause,
    })?;
    Ok(
        match (d.name(), path.file_stem().and_then(|s| s.to_str())) {
            (None, Some(stem)) => {
                let stem = stem.to_string();
                d.with_name(stem)
            }
            _ => d,
        },
    )
}

/// Every `.json` and `.pd` file in `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<Diagram>, CorpusError> {
    let io_err = |cause| CorpusError::Io {
        path: dir.into(),
        cause,
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io_err)?;
    paths.retain(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("json" | "pd")));
    paths.sort();
    paths.iter().map(|p| load_file(p, None)).collect()
}

pub fn load() -> Result<Vec<Diagram>, CorpusError> {
    load_dir(&default_dir())
}

/// Write the bundled diagrams as `<name>.json` into `dir`.
pub fn export(dir: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    let io_err = |path: &Path| {
        let path = path.to_path_buf();
        move |cause| CorpusError::Io { path, cause }
    };
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut written = Vec::new();
    for d in builtin() {
        let path = dir.join(format!(
            "{}.json",
            d.name().expect("bundled diagrams are named")
        ));
        fs::write(&path, d.to_json_string() + "\n").map_err(io_err(&path))?;
        written.push(path);
    }
    Ok(written)
}

use std::collections::HashMap;

use fkt::corpus::{builtin, default_dir, export, load_dir, load_file, Format, FIGURE_EIGHT_PD};
use fkt::statesum::nabla;
use fkt::HalfLaurent;

#[test]
fn files_match_the_builtin_definitions() {
    let on_disk = load_dir(&default_dir()).unwrap();
    assert_eq!(on_disk, builtin());
}

#[test]
fn required_diagrams_are_bundled() {
    let names: Vec<String> = builtin()
        .iter()
        .filter_map(|d| d.name().map(String::from))
        .collect();
    for required in [
        "unknot0",
        "unknot1_pos",
        "hopf_pos",
        "hopf_neg",
        "trefoil_r",
        "trefoil_l",
        "trefoil_r4",
        "figure_eight",
        "knot_5_1",
        "knot_5_2",
        "whitehead",
        "borromean",
    ] {
        assert!(names.iter().any(|n| n == required), "{required} missing");
    }
}

#[test]
fn same_link_same_nabla() {
    let mut by_link: HashMap<String, HalfLaurent> = HashMap::new();
    for d in builtin() {
        let link = d.link().expect("bundled diagrams are tagged").to_string();
        let n = nabla(&d);
        if let Some(prev) = by_link.get(&link) {
            assert_eq!(prev, &n, "{link}: {:?}", d.name());
        } else {
            by_link.insert(link, n);
        }
    }
}

#[test]
fn export_round_trips() {
    let dir = std::env::temp_dir().join(format!("fkt-corpus-{}", std::process::id()));
    let written = export(&dir).unwrap();
    assert_eq!(written.len(), builtin().len());
    assert_eq!(load_dir(&dir).unwrap(), builtin());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn pd_files_load_by_extension() {
    let dir = std::env::temp_dir().join(format!("fkt-pd-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig8.pd");
    std::fs::write(&path, FIGURE_EIGHT_PD).unwrap();
    assert_eq!(Format::from_path(&path), Format::Pd);
    let d = load_file(&path, None).unwrap();
    assert_eq!(d.name(), Some("fig8"));
    assert_eq!(d.crossing_count(), 4);
    assert!(load_file(&path, Some(Format::Json)).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

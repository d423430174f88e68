use std::path::{Path, PathBuf};
use std::process::Command;

use formindex::harness::catalog::{self, CatalogForm};
use formindex_cli::germfile::{load_germ, parse_germ, save_germ, LoadedForm};
use formindex_cli::run_command;

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

fn germ(name: &str) -> String {
    catalog_dir().join(format!("{name}.germ")).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["formindex".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn catalog_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(catalog_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "germ"))
        .collect();
    files.sort();
    files
}

#[test]
fn save_then_load_is_identity() {
    let files = catalog_files();
    assert!(files.len() >= 10);
    for path in files {
        let g = load_germ(&path).unwrap();
        assert_eq!(parse_germ(&save_germ(&g)).unwrap(), g, "{}", path.display());
    }
}

#[test]
fn files_match_the_shipped_catalog() {
    let cat = catalog::shipped().unwrap();
    let mut matched = 0;
    for path in catalog_files() {
        let file = load_germ(&path).unwrap();
        let Some(entry) = cat.get(&file.name) else { continue };
        matched += 1;
        assert_eq!(file.germ.as_ref(), entry.germ.as_ref(), "{}", file.name);
        for (name, form) in &entry.forms {
            let loaded = &file.form(name).unwrap_or_else(|| panic!("{}: missing form {name}", file.name)).form;
            match (form, loaded) {
                (CatalogForm::Complex(a), LoadedForm::Complex(b)) => assert_eq!(a, b),
                (CatalogForm::Stratum(a), LoadedForm::Stratum(b)) => assert_eq!(a, b),
                _ => panic!("{}: form {name} has the wrong kind", file.name),
            }
        }
    }
    assert!(matched >= 10);
}

#[test]
fn milnor_quadric() {
    let (code, out, _) = run(&["milnor", &germ("quadric")]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "mu = 1"), "{out}");
}

#[test]
fn gsv_cusp_prints_value_and_ideal() {
    let (code, out, _) = run(&["gsv", &germ("a2"), "--form", "dx"]);
    assert_eq!(code, 0);
    assert!(out.contains("gsv = 4") && out.contains("boundary transversality = assumed"), "{out}");
    assert!(out.contains("ideal:\n  y^3 + x^2\n  3*y^2\n"), "{out}");
    let (code, out, _) = run(&["gsv", &germ("a2"), "--form", "dy", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["gsv"], 3);
    assert_eq!(v["gsv_real"], -3);
}

#[test]
fn form_arguments() {
    let (_, out, _) = run(&["index-complex", &germ("smooth-line"), "--form", "d(z^3 + w^2)"]);
    assert!(out.contains("index = 2"), "{out}");
    let (_, out, _) = run(&["index-complex", &germ("smooth-line"), "--form", "[z^2, w]"]);
    assert!(out.contains("index = 2"), "{out}");
    let (_, out, _) = run(&["index-real", &germ("plane-z2")]);
    assert!(out.contains("\nindex = -2\n"), "{out}");
    let (_, out, _) = run(&["index-real", &germ("smooth-line"), "--form", "[z_re, -z_im, w_re, -w_im]"]);
    assert!(out.contains("\nindex = 1\n"), "{out}");
    // z^2 dz alone vanishes along the w axis.
    assert_eq!(run(&["index-real", &germ("smooth-line"), "--form", "omega"]).0, 1);
    let (_, out, _) = run(&["schwartz", &germ("smooth-plane"), "--form", "[z1^2, z2]"]);
    assert!(out.contains("schwartz = 2"), "{out}");
    let (_, out, _) = run(&["radial-extend", &germ("cusp"), "--form", "radial"]);
    assert!(out.contains("extension = 2*x_re*dx_re + 2*x_im*dx_im + 2*y_re*dy_re + 2*y_im*dy_im"), "{out}");
    let (_, out, _) = run(&["colength", &germ("brieskorn-2-3-4")]);
    assert!(out.contains("colength = infinite"), "{out}");
    let (_, out, _) = run(&["colength", &germ("brieskorn-2-3-4"), "--form", "d(z1^2 + z2^3 + z3^4)", "--json"]);
    assert!(out.contains("\"colength\": 6"), "{out}");
    let (_, out, _) = run(&["eu", &germ("quadric"), "--seed", "11"]);
    assert!(out.contains("eu = 0") && out.contains("seed = 11"), "{out}");
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("formindex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    };
    let nonisolated = write("line.germ", "[meta]\nname = line\n[vars]\nnames = x, y\n[f]\nx*y^2\n");
    assert_eq!(run(&["milnor", &nonisolated]).0, 1);
    assert_eq!(run(&["index-complex", &germ("smooth-line"), "--form", "[z_bar, w]"]).0, 1);
    assert_eq!(run(&["milnor", "/no/such/file.germ"]).0, 2);
    let short = write("short.germ", "[meta]\nname = s\n[vars]\nnames = x, y, z\n[f]\nx\n[form]\nname = a\ntag = complex\n1\n0\n");
    let (code, _, err) = run(&["milnor", &short]);
    assert_eq!(code, 2, "{err}");
    let empty = write("empty.germ", "[meta]\nname = e\n[vars]\nnames = x\n[f]\n");
    let (code, _, err) = run(&["milnor", &empty]);
    assert_eq!(code, 2);
    assert!(err.contains("at least one defining equation"), "{err}");
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
    assert_eq!(run(&["verify", "--only", "nonsense"]).0, 2);
    assert_eq!(run(&["milnor", &germ("icis-node"), "--max-steps", "1"]).0, 3);
    assert_eq!(run(&["milnor", &germ("d4"), "--max-degree", "1"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn orderings_agree_on_the_command_line() {
    for name in ["quadric", "d4", "icis-node", "brieskorn-2-3-4"] {
        let a = run(&["milnor", &germ(name), "--ordering", "ds"]);
        let b = run(&["milnor", &germ(name), "--ordering", "Ds"]);
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn verify_subset() {
    let (code, out, _) = run(&["verify", "--only", "milnor", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["theorems"].as_array().unwrap().len(), 1);
    assert_eq!(v["seed"], 7);
}

#[test]
fn verify_matches_golden_and_is_reproducible() {
    let bin = env!("CARGO_BIN_EXE_formindex");
    let once = || Command::new(bin).args(["verify", "--all", "--seed", "7", "--json"]).output().unwrap();
    let (a, b) = (once(), once());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let golden = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/verify_seed7.json")).unwrap();
    assert!(a.stdout == golden, "verify output differs from the golden file");
}

#[test]
fn timings_are_opt_in() {
    let (code, out, _) = run(&["verify", "--only", "complex-real-dictionary", "--json", "--timings"]);
    assert_eq!(code, 0);
    assert!(out.contains("elapsed_ms"));
    let (_, out, _) = run(&["verify", "--only", "complex-real-dictionary", "--json"]);
    assert!(!out.contains("elapsed_ms"));
}

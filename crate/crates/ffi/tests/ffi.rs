use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use adm2_ffi::*;

unsafe fn graph(n: usize, edges: &[usize]) -> *mut Adm2Graph {
    let mut out = ptr::null_mut();
    let status = adm2_graph_from_edges(n, edges.as_ptr(), edges.len() / 2, &mut out);
    assert_eq!(status, Adm2Status::Ok);
    out
}

fn last_error() -> String {
    let message = adm2_last_error_message();
    assert!(!message.is_null());
    unsafe { CStr::from_ptr(message) }
        .to_string_lossy()
        .into_owned()
}

fn clique(n: usize) -> Vec<usize> {
    (0..n)
        .flat_map(|u| (u + 1..n).flat_map(move |v| [u, v]))
        .collect()
}

#[test]
fn decide_and_witness_round_trip() {
    unsafe {
        let k5 = graph(5, &clique(5));
        assert_eq!(adm2_graph_vertex_count(k5), 5);
        assert_eq!(adm2_graph_edge_count(k5), 10);

        let mut answer = false;
        let mut witness = ptr::null_mut();
        assert_eq!(
            adm2_decide(k5, 4, 0, &mut answer, &mut witness),
            Adm2Status::Ok
        );
        assert!(answer);
        assert_eq!(adm2_ordering_len(witness), 5);

        let mut order = [0usize; 5];
        assert_eq!(
            adm2_ordering_copy(witness, order.as_mut_ptr(), 4),
            Adm2Status::BufferTooSmall
        );
        assert_eq!(
            adm2_ordering_copy(witness, order.as_mut_ptr(), 5),
            Adm2Status::Ok
        );
        let mut value = 0;
        assert_eq!(
            adm2_verify_ordering(k5, order.as_ptr(), 5, &mut value),
            Adm2Status::Ok
        );
        assert_eq!(value, 4);
        adm2_ordering_free(witness);

        witness = ptr::NonNull::dangling().as_ptr();
        assert_eq!(
            adm2_decide(k5, 3, 0, &mut answer, &mut witness),
            Adm2Status::Ok
        );
        assert!(!answer);
        assert!(witness.is_null());
        adm2_graph_free(k5);
    }
}

#[test]
fn compute_and_degeneracy() {
    unsafe {
        let cycle: Vec<usize> = (0..100).flat_map(|i| [i, (i + 1) % 100]).collect();
        let c = graph(100, &cycle);
        let mut value = 0;
        let mut witness = ptr::null_mut();
        assert_eq!(adm2_compute(c, 0, &mut value, &mut witness), Adm2Status::Ok);
        assert_eq!(value, 2);
        assert_eq!(adm2_ordering_len(witness), 100);
        assert_eq!(adm2_graph_degeneracy(c, &mut value), Adm2Status::Ok);
        assert_eq!(value, 2);
        adm2_ordering_free(witness);
        adm2_graph_free(c);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            adm2_graph_from_edges(2, [0usize, 5].as_ptr(), 1, &mut out),
            Adm2Status::InvalidArgument
        );
        assert!(last_error().contains("out of range"));
        assert_eq!(
            adm2_graph_from_edges(2, ptr::null(), 1, &mut out),
            Adm2Status::NullPointer
        );

        let mut value = 0;
        assert_eq!(
            adm2_graph_degeneracy(ptr::null(), &mut value),
            Adm2Status::NullPointer
        );
        assert_eq!(adm2_graph_vertex_count(ptr::null()), 0);

        let g = graph(3, &[0, 1, 1, 2]);
        assert_eq!(
            adm2_verify_ordering(g, [0usize, 0, 1].as_ptr(), 3, &mut value),
            Adm2Status::InvalidOrdering
        );
        assert_eq!(
            adm2_verify_ordering(g, [0usize, 1].as_ptr(), 2, &mut value),
            Adm2Status::InvalidOrdering
        );

        let missing = CString::new("/nonexistent/graph.txt").unwrap();
        assert_eq!(
            adm2_graph_load_edge_list(missing.as_ptr(), &mut out),
            Adm2Status::Io
        );
        adm2_graph_free(g);
        adm2_graph_free(ptr::null_mut());
        adm2_ordering_free(ptr::null_mut());
    }
}

#[test]
fn load_from_file_and_time_out() {
    let dir = std::env::temp_dir().join(format!("adm2-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("grid.txt");
    let side = 200;
    let mut text = String::new();
    for r in 0..side {
        for c in 0..side {
            let v = r * side + c;
            if c + 1 < side {
                text.push_str(&format!("{v} {}\n", v + 1));
            }
            if r + 1 < side {
                text.push_str(&format!("{v} {}\n", v + side));
            }
        }
    }
    std::fs::write(&path, text).unwrap();
    let c_path = CString::new(path.to_str().unwrap()).unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            adm2_graph_load_edge_list(c_path.as_ptr(), &mut g),
            Adm2Status::Ok
        );
        assert_eq!(adm2_graph_vertex_count(g), side * side);
        let mut answer = false;
        let status = adm2_decide(g, 3, 1, &mut answer, ptr::null_mut());
        assert!(matches!(status, Adm2Status::Ok | Adm2Status::TimedOut));
        adm2_graph_free(g);
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn status_strings_are_static() {
    let ok = unsafe { CStr::from_ptr(adm2_status_str(Adm2Status::Ok)) };
    assert_eq!(ok.to_str().unwrap(), "ok");
    let timed_out = unsafe { CStr::from_ptr(adm2_status_str(Adm2Status::TimedOut)) };
    assert_eq!(timed_out.to_str().unwrap(), "timed out");
}

#[test]
fn header_lists_every_export() {
    let header = include_str!("../include/adm2.h");
    for name in [
        "adm2_graph_from_edges",
        "adm2_graph_load_edge_list",
        "adm2_graph_free",
        "adm2_graph_vertex_count",
        "adm2_graph_edge_count",
        "adm2_graph_degeneracy",
        "adm2_decide",
        "adm2_compute",
        "adm2_ordering_len",
        "adm2_ordering_copy",
        "adm2_ordering_free",
        "adm2_verify_ordering",
        "adm2_last_error_message",
        "adm2_status_str",
        "ADM2_STATUS_TIMED_OUT",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles examples/smoke.c against the static library and runs it.
#[test]
fn c_smoke_program() {
    let Some(compiler) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary> -> target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let archive = profile_dir.join("libadm2_ffi.a");
    assert!(archive.exists(), "{} not built", archive.display());

    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("adm2_smoke");
    let build = Command::new(compiler)
        .arg(manifest.join("examples/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(
        build.status.success(),
        "{}",
        String::from_utf8_lossy(&build.stderr)
    );

    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(
        String::from_utf8_lossy(&run.stdout),
        "decide K5 p=4: YES\ndecide K5 p=3: NO\nwitness verifies to 4\nadm2 C6 = 2\nout of range: invalid argument\n"
    );
}

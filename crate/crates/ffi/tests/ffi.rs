use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use disclab_ffi::*;

fn last_error() -> String {
    let p = disclab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn new_points(dim: usize, coords: &[f64]) -> *mut DisclabPointSet {
    let mut out = ptr::null_mut();
    let st = unsafe { disclab_points_new(dim, coords.as_ptr(), coords.len() / dim, &mut out) };
    assert_eq!(st, DisclabStatus::Ok);
    out
}

#[test]
fn closed_forms_through_the_abi() {
    let ps = new_points(1, &[0.5]);
    let mut v = 0.0;
    for (kind, want) in [
        (DisclabKind::Extreme, 12f64.powf(-0.5)),
        (DisclabKind::Periodic, 6f64.powf(-0.5)),
        (DisclabKind::Diaphony, std::f64::consts::PI / 3f64.sqrt()),
    ] {
        assert_eq!(unsafe { disclab_l2(ps, kind, &mut v) }, DisclabStatus::Ok);
        assert!((v - want).abs() < 1e-14 * want);
    }
    let (mut sq, mut tail) = (0.0, 0.0);
    assert_eq!(unsafe { disclab_diaphony_truncated(ps, 1000, &mut sq, &mut tail) }, DisclabStatus::Ok);
    assert!(sq <= v * v && v * v <= sq + tail);
    assert_eq!(unsafe { disclab_exact_lp_1d(ps, DisclabKind::Star, 2.0, &mut v) }, DisclabStatus::Ok);
    assert!((v - 12f64.powf(-0.5)).abs() < 1e-15);
    assert_eq!(unsafe { disclab_linf(ps, DisclabKind::Extreme, &mut v) }, DisclabStatus::Ok);
    assert_eq!(v, 1.0);
    unsafe { disclab_points_free(ps) };
}

#[test]
fn monte_carlo_is_seeded() {
    let ps = new_points(2, &[0.1, 0.2, 0.6, 0.7, 0.3, 0.9]);
    let mut a = DisclabMcResult::default();
    let mut b = DisclabMcResult::default();
    unsafe {
        assert_eq!(disclab_mc_lp(ps, DisclabKind::Star, 1.5, 10_000, 3, &mut a), DisclabStatus::Ok);
        assert_eq!(disclab_mc_lp(ps, DisclabKind::Star, 1.5, 10_000, 3, &mut b), DisclabStatus::Ok);
    }
    assert_eq!(a, b);
    assert_eq!((a.samples, a.seed), (10_000, 3));
    let st = unsafe { disclab_mc_lp(ps, DisclabKind::Star, 2.0, 10, 3, &mut a) };
    assert_eq!(st, DisclabStatus::InvalidArgument);
    assert!(last_error().contains("samples"));
    let st = unsafe { disclab_mc_lp(ps, DisclabKind::Diaphony, 2.0, 1000, 3, &mut a) };
    assert_eq!(st, DisclabStatus::InvalidArgument);
    unsafe { disclab_points_free(ps) };
}

#[test]
fn sequences_and_lift() {
    let mut h = ptr::null_mut();
    let bases = [2u32, 3];
    assert_eq!(unsafe { disclab_halton_prefix(bases.as_ptr(), 2, 3, &mut h) }, DisclabStatus::Ok);
    let mut buf = [0.0; 6];
    assert_eq!(unsafe { disclab_points_copy(h, buf.as_mut_ptr(), 6) }, DisclabStatus::Ok);
    assert_eq!(buf, [0.0, 0.0, 0.5, 1.0 / 3.0, 0.25, 2.0 / 3.0]);
    assert_eq!(unsafe { disclab_points_copy(h, buf.as_mut_ptr(), 5) }, DisclabStatus::InvalidArgument);
    let mut l = ptr::null_mut();
    assert_eq!(unsafe { disclab_lift(h, 3, &mut l) }, DisclabStatus::Ok);
    assert_eq!(unsafe { (disclab_points_dim(l), disclab_points_len(l)) }, (3, 3));
    assert_eq!(unsafe { disclab_lift(h, 4, &mut l) }, DisclabStatus::InvalidArgument);
    unsafe {
        disclab_points_free(l);
        disclab_points_free(h);
    }
    let bad = [2u32, 4];
    assert_eq!(unsafe { disclab_halton_prefix(bad.as_ptr(), 2, 3, &mut h) }, DisclabStatus::InvalidArgument);
    assert!(last_error().contains("coprime"));
    let mut x = 0.0;
    assert_eq!(unsafe { disclab_radical_inverse(3, 2, &mut x) }, DisclabStatus::Ok);
    assert_eq!(x, 0.75);
    assert_eq!(unsafe { disclab_radical_inverse(3, 1, &mut x) }, DisclabStatus::InvalidArgument);
}

#[test]
fn errors_and_null_handles() {
    let mut out = ptr::null_mut();
    let coords = [0.2, -0.1];
    assert_eq!(unsafe { disclab_points_new(1, coords.as_ptr(), 2, &mut out) }, DisclabStatus::OutOfRange);
    assert!(out.is_null());
    assert!(last_error().contains("row 2"));
    let mut v = 0.0;
    assert_eq!(unsafe { disclab_l2(ptr::null(), DisclabKind::Star, &mut v) }, DisclabStatus::NullPointer);
    let empty = new_points(2, &[]);
    assert_eq!(unsafe { disclab_l2(empty, DisclabKind::Star, &mut v) }, DisclabStatus::EmptyPointSet);
    let ps = new_points(2, &[0.1; 2 * 65]);
    assert_eq!(unsafe { disclab_linf(ps, DisclabKind::Star, &mut v) }, DisclabStatus::GuardExceeded);
    assert_eq!(unsafe { disclab_exact_lp_1d(ps, DisclabKind::Star, 2.0, &mut v) }, DisclabStatus::DimensionMismatch);
    assert_eq!(unsafe { disclab_l2(ps, DisclabKind::Star, ptr::null_mut()) }, DisclabStatus::NullPointer);
    // success clears the message
    assert_eq!(unsafe { disclab_l2(ps, DisclabKind::Star, &mut v) }, DisclabStatus::Ok);
    assert!(disclab_last_error().is_null());
    unsafe {
        disclab_points_free(ps);
        disclab_points_free(empty);
        disclab_points_free(ptr::null_mut());
    }
    assert_eq!(unsafe { disclab_points_len(ptr::null()) }, 0);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/disclab.h")).unwrap();
    for sym in [
        "disclab_points_new",
        "disclab_points_free",
        "disclab_points_len",
        "disclab_points_dim",
        "disclab_points_copy",
        "disclab_vdc_prefix",
        "disclab_halton_prefix",
        "disclab_lift",
        "disclab_radical_inverse",
        "disclab_l2",
        "disclab_diaphony_truncated",
        "disclab_mc_lp",
        "disclab_exact_lp_1d",
        "disclab_linf",
        "disclab_last_error",
        "typedef struct DisclabPointSet DisclabPointSet",
        "DISCLAB_STATUS_OUT_OF_RANGE = 4",
    ] {
        assert!(header.contains(sym), "{sym} missing from header");
    }
}

/// Compiles tests/c/smoke.c against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let Some(cc) = ["cc", "gcc", "clang"].into_iter().find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    // target/<profile>/deps/ffi-xxxx -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libdisclab_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("disclab_smoke");
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}

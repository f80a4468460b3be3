//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use pspec::bracket::PoissonStructure;
use pspec::parse::load_structure_file;
use pspec::poly::{coeff_int, Coeff, Monomial, Poly};

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn structure_path(name: &str) -> PathBuf {
    manifest_dir().join("structures").join(name)
}

pub fn load(name: &str) -> PoissonStructure {
    load_structure_file(structure_path(name)).expect("bundled structure loads")
}

pub fn bundled() -> Vec<(&'static str, PoissonStructure)> {
    ["qmat.psn", "symm.psn", "detprod.psn", "sumratio.psn"]
        .into_iter()
        .map(|n| (n, load(n)))
        .collect()
}

pub struct CmdResult {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Run the pspec binary from the crate root so bundled structure paths work.
pub fn pspec(args: &[&str]) -> CmdResult {
    pspec_with_env(args, &[])
}

pub fn pspec_with_env(args: &[&str], env: &[(&str, &str)]) -> CmdResult {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pspec"));
    cmd.args(args).current_dir(manifest_dir());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    CmdResult {
        stdout: String::from_utf8(out.stdout).expect("utf8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn rand_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    coeff_int(rng.gen_range(-4i64..=4))
}

pub fn rand_nonzero_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    loop {
        let c = Coeff::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=3).into());
        if !num_traits::Zero::is_zero(&c) {
            return c;
        }
    }
}

pub fn rand_poly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Poly {
    let nterms = rng.gen_range(1..=4);
    let mut p = Poly::zero(nvars);
    for _ in 0..nterms {
        let mut exps = vec![0u32; nvars];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        let c = coeff_int(rng.gen_range(-5i64..=5));
        p = &p + &Poly::from_terms(nvars, [(Monomial::from_exps(exps), c)]);
    }
    p
}

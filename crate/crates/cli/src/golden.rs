//! Reference outputs kept under a versioned directory.

use std::path::Path;

use crate::{main_with_args, write_atomic, CliError, CliResult};

pub const DEFAULT_DIR: &str = "crates/cli/golden/v1";

/// File name and command line (without the program name).
pub const CASES: &[(&str, &[&str])] = &[
    ("seshadri_f36.json", &["seshadri", "--e", "3", "--r", "6", "--L", "6,19,4,4,4,4,4,4", "--json"]),
    ("seshadri_f13.json", &["seshadri", "--e", "1", "--r", "3", "--L", "3,5,2,2,2", "--json"]),
    ("seshadri_f11.json", &["seshadri", "--e", "1", "--r", "1", "--L", "3,4,2", "--json"]),
    (
        "seshadri_f35_on_fiber.json",
        &["seshadri", "--e", "3", "--r", "2", "--L", "4,15,2,1", "--x-position", "on-fiber:1", "--json"],
    ),
    ("ample_f13.json", &["ample", "--e", "1", "--r", "3", "--L", "3,5,2,2,2", "--json"]),
    ("nef_f2_fiber.json", &["nef", "--e", "2", "--r", "0", "--D", "0,1", "--json"]),
    (
        "enumerate_f36x_candidates.json",
        &["enumerate", "--e", "3", "--r", "6", "--with-x", "--filter", "candidates", "--json"],
    ),
    ("enumerate_f13_all.json", &["enumerate", "--e", "1", "--r", "3", "--json"]),
    ("linsys_f3_3_9_2x6.json", &["linsys", "--e", "3", "--a", "3", "--b", "9", "--m", "2,2,2,2,2,2", "--json"]),
    ("linsys_f1_0_1_2.json", &["linsys", "--e", "1", "--a", "0", "--b", "1", "--m", "2", "--json"]),
];

/// Output of one case, as the binary would print it.
pub fn render_case(args: &[&str]) -> CliResult<String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hirzebruch").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    if code != 0 {
        return Err(CliError::Usage(format!(
            "golden case {args:?} exited with {code}: {}",
            String::from_utf8_lossy(&err)
        )));
    }
    Ok(String::from_utf8(out).expect("utf8 output"))
}

/// Write every case. Without `force`, nothing is written if any file exists.
pub fn regenerate(dir: &Path, force: bool) -> CliResult<usize> {
    if !force {
        if let Some((name, _)) = CASES.iter().find(|(n, _)| dir.join(n).exists()) {
            return Err(CliError::GoldenExists(dir.join(name)));
        }
    }
    for (name, args) in CASES {
        write_atomic(&dir.join(name), render_case(args)?.as_bytes())?;
    }
    Ok(CASES.len())
}

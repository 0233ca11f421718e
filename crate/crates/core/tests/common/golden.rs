//! Expected CLI behaviour, one case per command plus the error paths.
//! Arguments naming files are relative to `tests/fixtures`.

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub args: &'static [&'static str],
    pub code: i32,
    pub stdout: &'static str,
    /// Checked as a prefix; empty means stderr must be empty.
    pub stderr: &'static str,
}

const fn ok(args: &'static [&'static str], stdout: &'static str) -> Case {
    Case {
        args,
        code: 0,
        stdout,
        stderr: "",
    }
}

pub const CASES: &[Case] = &[
    ok(&["normalize", "(0,o1|(3,4))"], "(0,o1|(3,1),(1,1))\n"),
    ok(&["normalize", "(2,n2|(5,-3),(2,1),(1,4))"], "(2,n2|(2,1),(5,2),(1,3))\n"),
    ok(&["--porcelain", "normalize", "(0,o1|)"], "normal=(0,o1|(1,0))\nb=0\n"),
    ok(&["sum", "(0,o1|(2,1),(3,-1),(1,2))"], "13/6\n"),
    Case {
        args: &["equiv", "(0,o1|(3,1))", "(0,o1|(3,2))"],
        code: 1,
        stdout: "not equivalent\n",
        stderr: "normal forms differ",
    },
    ok(&["equiv", "(0,o1|(3,4))", "(0,o1|(1,1),(3,1))"], "equivalent\n"),
    ok(&["cover", "(1,n2|(2,1))"], "(0,o1|(2,1),(2,1))\n"),
    ok(
        &["cover", "(3,n2|(3,1),(5,2),(1,1))"],
        "(2,o1|(3,1),(3,1),(5,2),(5,2),(1,1),(1,1))\n",
    ),
    ok(&["quotient", "(0,o1|(3,2),(3,2))"], "(1,n2|(3,2))\n"),
    Case {
        args: &["quotient", "(0,o1|(2,1))"],
        code: 1,
        stdout: "none\n",
        stderr: "not a double cover",
    },
    ok(
        &["pi1", "(1,n2|(2,1))"],
        "x, c1, t\nc1*t*c1^-1*t^-1\nx*t*x^-1*t\nc1^2*t\nc1*x^-2\n",
    ),
    ok(
        &["pi1", "(2,n2|(3,1))"],
        "x, y, c1, t\nc1*t*c1^-1*t^-1\nx*t*x^-1*t\ny*t*y^-1*t^-1\nc1^3*t\nc1*x*y*x^-1*y\n",
    ),
    ok(
        &["pi1", "(1,o1|(3,1))"],
        "a1, b1, c1, t\na1*t*a1^-1*t^-1\nb1*t*b1^-1*t^-1\nc1*t*c1^-1*t^-1\nc1^3*t\nc1*a1*b1*a1^-1*b1^-1\n",
    ),
    ok(
        &["--porcelain", "pi1", "(1,n2|(2,1))"],
        "generators=x,c1,t\nrelator=c1*t*c1^-1*t^-1\nrelator=x*t*x^-1*t\nrelator=c1^2*t\nrelator=c1*x^-2\n",
    ),
    ok(&["orbifold-pi1", "(1,n2|(2,1))"], "x, c1\nc1^2\nc1*x^-2\n"),
    ok(&["h1", "(0,o1|)"], "Z\n"),
    ok(&["h1", "(0,o1|(2,1),(2,1))"], "Z/4\n"),
    ok(&["h1", "(1,n2|(2,1))"], "Z/8\n"),
    ok(&["h1", "(0,o1|(2,1),(3,1),(5,-4))"], "0\n"),
    ok(&["--porcelain", "h1", "(0,o1|(2,1),(2,1))"], "h1=Z/4\nfree_rank=0\ntorsion=4\n"),
    ok(&["snf", "matrix.txt"], "2 6 12\ncokernel Z/2 + Z/6 + Z/12\n"),
    ok(&["validate-action", "swap_z4.json"], "pass\n"),
    ok(&["validate-action", "klein_reflection.json"], "pass\n"),
    Case {
        args: &["validate-action", "swap_z4_broken.json"],
        code: 1,
        stdout: "fail\n",
        stderr: "action laws fail: (b) theta1(gh) = theta1(g) + alpha(g) theta1(h) at g=1 h=1\n",
    },
    Case {
        args: &["--porcelain", "validate-action", "swap_z4_broken.json"],
        code: 1,
        stdout: "valid=false\nlaw=b\ng=1\nh=1\n",
        stderr: "action laws fail",
    },
    Case {
        args: &["validate-action", "decimal.json"],
        code: 2,
        stdout: "",
        stderr: "error: theta1[1]: decimal '0.5' not allowed",
    },
    Case {
        args: &["validate-action", "short_theta1.json"],
        code: 2,
        stdout: "",
        stderr: "error: theta1: expected 2 entries (group order), found 1\n",
    },
    Case {
        args: &["validate-action", "missing.json"],
        code: 2,
        stdout: "",
        stderr: "error: cannot read missing.json",
    },
    ok(&["induced-torus", "torus_z3.json", "1", "1"], "rotation 0 1/3\nsign +1\n"),
    ok(
        &["--det", "induced-torus", "torus_z3.json", "1", "2"],
        "rotation 0 2/3\nsign +1\ngluing [[0,1],[-1,3]]\n",
    ),
    ok(
        &["--porcelain", "--det", "induced-torus", "torus_z3.json", "1", "1"],
        "longitude=0\nmeridian=1/3\nsign=+1\ngluing=[[0,1],[-1,3]]\n",
    ),
    ok(&["check-tau", "sigma_z2.json"], "commutes\n"),
    Case {
        args: &["check-tau", "third_z3.json"],
        code: 1,
        stdout: "fail\n",
        stderr: "not tau-commuting: (i) theta1(g) in {0, 1/2} at g=1\n",
    },
    Case {
        args: &["check-tau", "rotation_z6.json"],
        code: 2,
        stdout: "",
        stderr: "error: symbol (0,o1|(2,1),(3,1)) is not a doubled pair list",
    },
    ok(
        &["project", "sigma_z2.json"],
        r#"{
  "base": "(1,n2|(2,1))",
  "group": "cyclic:2",
  "epsilon": [1,-1],
  "beta_bar": [[1],[-1]],
  "theta2_bar": [["0","0"]]
}
"#,
    ),
    ok(
        &["lift", "prism_z2.json"],
        r#"{
  "symbol": "(0,o1|(2,1),(2,1))",
  "group": "cyclic:2",
  "theta1": ["0","1/2"],
  "alpha": [1,1],
  "beta": [[1,2],[2,1]],
  "theta2": [["0","0"],["0","0"]]
}
"#,
    ),
    ok(
        &["lift", "z2z3_descriptor.json"],
        r#"{
  "symbol": "(0,o1|(2,1),(2,1),(2,1),(2,1),(2,1),(2,1))",
  "group": "product:cyclic:2,cyclic:3",
  "theta1": ["0","0","0","1/2","1/2","1/2"],
  "alpha": [1,1,1,1,1,1],
  "beta": [[1,2,3,4,5,6],[3,4,5,6,1,2],[5,6,1,2,3,4],[1,2,3,4,5,6],[3,4,5,6,1,2],[5,6,1,2,3,4]],
  "theta2": [["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"]]
}
"#,
    ),
    ok(&["obstruction", "1", "2", "3"], "-1 1\n"),
    ok(&["obstruction", "0", "4", "6"], "0 0\n"),
    ok(&["obstruction", "-6", "3"], "-2\n"),
    Case {
        args: &["obstruction", "3", "4", "6"],
        code: 1,
        stdout: "none\n",
        stderr: "gcd of orbit numbers 4,6 does not divide 3\n",
    },
    ok(&["--orbits-extra", "3", "obstruction", "3", "4", "6"], "3 -3 3\n"),
    ok(
        &["--porcelain", "obstruction", "1", "2", "3"],
        "orbits=2,3\nwitness=-1,1\n",
    ),
    ok(&["orbits", "swap_z4.json"], "2\n"),
    ok(&["orbits", "rotation_z6.json"], "1 1\n"),
    ok(
        &["analyze-group", "rotation_z6.json"],
        "n: 6\nalpha_image_order: 1\ntarget: Z_6 x H, |H| = 1\nembedding_ok: true\n",
    ),
    ok(
        &["analyze-group", "klein_reflection.json"],
        "n: 2\nalpha_image_order: 2\ntarget: (Z_2 x H+) x| Z_2, |H+| = 2\nembedding_ok: true\n",
    ),
    ok(
        &["--porcelain", "analyze-group", "z2z3_tau.json"],
        "n=2\nalpha_image_order=1\ntarget=Z_2 x H, |H| = 3\nembedding_ok=true\ntau_target=Z_2 x H, |H| = 3\ntau_embedding_ok=true\n",
    ),
    Case {
        args: &["frobnicate"],
        code: 2,
        stdout: "",
        stderr: "error: unrecognized subcommand",
    },
    Case {
        args: &["normalize", "(0,o1|(2,4))"],
        code: 2,
        stdout: "",
        stderr: "error: ",
    },
];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// Runs the built binary from the fixture directory.
pub fn run_binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_seifert"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("spawn seifert");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Checks one case; `Err` carries a readable mismatch report.
pub fn check(case: &Case) -> Result<(), String> {
    let first = run_binary(case.args);
    let second = run_binary(case.args);
    if first != second {
        return Err(format!("{:?}: output differs between runs", case.args));
    }
    let (code, stdout, stderr) = first;
    if code != case.code {
        return Err(format!("{:?}: exit {code}, expected {}", case.args, case.code));
    }
    if stdout != case.stdout {
        return Err(format!("{:?}: stdout {stdout:?}, expected {:?}", case.args, case.stdout));
    }
    let stderr_ok = if case.stderr.is_empty() {
        stderr.is_empty()
    } else {
        stderr.starts_with(case.stderr)
    };
    if !stderr_ok {
        return Err(format!("{:?}: stderr {stderr:?}, expected prefix {:?}", case.args, case.stderr));
    }
    Ok(())
}

pub const COMMANDS: &[&str] = &[
    "normalize",
    "sum",
    "equiv",
    "cover",
    "quotient",
    "pi1",
    "orbifold-pi1",
    "h1",
    "snf",
    "validate-action",
    "induced-torus",
    "check-tau",
    "project",
    "lift",
    "obstruction",
    "orbits",
    "analyze-group",
];

/// Commands with at least one exit-0 golden case.
pub fn covered_commands() -> Vec<&'static str> {
    COMMANDS
        .iter()
        .copied()
        .filter(|c| CASES.iter().any(|case| case.code == 0 && case.args.contains(c)))
        .collect()
}

// Drives the command-line interface in-process: tabulate, verify, eval.

use finite_cone::cli::run_with;

pub struct CliTranscript {
    /// `(arguments, exit code, stdout, stderr)`.
    pub runs: Vec<(String, u8, String, String)>,
}

pub fn run_example() -> Result<CliTranscript, Box<dyn std::error::Error>> {
    let commands: &[&[&str]] = &[
        &["tabulate", "--family", "uni-N", "-p", "10", "-n", "2"],
        &[
            "tabulate",
            "--family",
            "cone-M",
            "-d",
            "1",
            "--mu",
            "0.5",
            "-p",
            "10",
            "-q",
            "0",
            "-n",
            "1",
            "--convention",
            "paper-gegenbauer",
        ],
        &[
            "tabulate", "--family", "cone-M", "-p", "4", "-q", "0", "-n", "3",
        ],
        &[
            "verify", "--suite", "dims", "--family", "cone-N", "-d", "2", "-p", "25", "-n", "4",
            "--format", "text",
        ],
        &[
            "eval",
            "--family",
            "cone-M",
            "-p",
            "10",
            "-q",
            "0",
            "--convention",
            "paper-gegenbauer",
            "--element",
            "1,1",
            "--point",
            "0.5,1",
        ],
        &[
            "eval",
            "--family",
            "cone-M",
            "-p",
            "10",
            "-q",
            "0",
            "--element",
            "0,0",
            "--point",
            "2,1",
        ],
    ];
    let mut runs = Vec::new();
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(
            std::iter::once("finite-cone").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        let (out, err) = (String::from_utf8(out)?, String::from_utf8(err)?);
        println!(
            "$ finite-cone {}\n{out}{err}[exit {code}]\n",
            args.join(" ")
        );
        runs.push((args.join(" "), code, out, err));
    }
    Ok(CliTranscript { runs })
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example().map(|_| ())
}

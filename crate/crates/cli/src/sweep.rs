use crate::{commands, Cli, Command, Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use cgl_core::io::RunConfig;
use clap::Parser;
use serde::{Deserialize, Serialize};
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Job {
    /// Subcommand words, e.g. `certify ramanujan`.
    command: String,
    #[serde(default)]
    inputs: Vec<String>,
    #[serde(default = "default_true")]
    expect_pass: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Serialize)]
struct JobResult {
    index: usize,
    command: String,
    inputs: Vec<String>,
    expect_pass: bool,
    exit_code: i32,
    pass: bool,
    output_file: Option<String>,
    message: Option<String>,
}

#[derive(Debug, Serialize)]
struct Summary {
    jobs: usize,
    passed: usize,
    failed: usize,
    expected_pass_failures: usize,
    results: Vec<JobResult>,
    pass: bool,
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        message: Some(msg),
        ..Default::default()
    }
}

fn run_job(job: &Job, cfg: &RunConfig) -> Outcome {
    let mut args = vec!["cgl".to_string()];
    args.extend(job.command.split_whitespace().map(str::to_string));
    args.extend(job.inputs.iter().cloned());
    match Cli::try_parse_from(&args) {
        Ok(Cli {
            command: Command::Sweep { .. },
            ..
        }) => usage("sweeps cannot be nested".into()),
        Ok(cli) => commands::execute(cli.command, cfg),
        Err(e) => usage(e.to_string()),
    }
}

pub fn run_sweep(manifest: &Path, cfg: &RunConfig) -> Outcome {
    let text = match std::fs::read_to_string(manifest) {
        Ok(t) => t,
        Err(e) => return usage(format!("cannot read manifest {}: {e}", manifest.display())),
    };
    let jobs: Vec<Job> = match serde_json::from_str(&text) {
        Ok(j) => j,
        Err(e) => return usage(format!("malformed manifest: {e}")),
    };
    if let Err(e) = std::fs::create_dir_all(&cfg.out_dir) {
        return Outcome {
            code: EXIT_FAIL,
            message: Some(e.to_string()),
            ..Default::default()
        };
    }

    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Outcome>>> = Mutex::new((0..jobs.len()).map(|_| None).collect());
    let workers = cfg.effective_workers().min(jobs.len()).max(1);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() {
                    break;
                }
                let o = run_job(&jobs[i], cfg);
                slots
                    .lock()
                    .expect("no worker panics while holding the lock")[i] = Some(o);
            });
        }
    });

    let outcomes = slots.into_inner().expect("workers joined");
    let mut results = Vec::with_capacity(jobs.len());
    for (i, (job, o)) in jobs.iter().zip(outcomes).enumerate() {
        let o = o.expect("every job ran");
        let output_file = match &o.output {
            Some(text) => {
                let name = format!("job-{i:03}.{}", o.extension);
                if let Err(e) = std::fs::write(cfg.out_dir.join(&name), text) {
                    return Outcome {
                        code: EXIT_FAIL,
                        message: Some(e.to_string()),
                        ..Default::default()
                    };
                }
                Some(name)
            }
            None => None,
        };
        results.push(JobResult {
            index: i,
            command: job.command.clone(),
            inputs: job.inputs.clone(),
            expect_pass: job.expect_pass,
            exit_code: o.code,
            pass: o.code == EXIT_PASS,
            output_file,
            message: o.message,
        });
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let expected_pass_failures = results.iter().filter(|r| r.expect_pass && !r.pass).count();
    let summary = Summary {
        jobs: results.len(),
        passed,
        failed: results.len() - passed,
        expected_pass_failures,
        results,
        pass: expected_pass_failures == 0,
    };
    let text = serde_json::to_string_pretty(&summary).expect("summary serializes") + "\n";
    if let Err(e) = std::fs::write(cfg.out_dir.join("summary.json"), &text) {
        return Outcome {
            code: EXIT_FAIL,
            message: Some(e.to_string()),
            ..Default::default()
        };
    }
    Outcome {
        code: if summary.pass { EXIT_PASS } else { EXIT_FAIL },
        output: Some(text),
        message: Some(format!("{}/{} jobs passed", summary.passed, summary.jobs)),
        extension: "json",
        ..Default::default()
    }
}

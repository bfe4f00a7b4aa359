use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Some(n) = std::env::var("POISSON_BIALG_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // the global pool can only be configured once; ignore a second attempt
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
    let out = poisson_bialg_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}

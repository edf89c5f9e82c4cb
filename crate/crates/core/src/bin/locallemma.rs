use clap::Parser;
use locallemma::cli::{self, Cli};

fn main() {
    let args = Cli::parse();
    if let Some(threads) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global()
            .expect("thread pool is configured once");
    }
    let outcome = cli::run(&args);
    if let Some(report) = &outcome.report {
        print!("{}", report.to_json());
    }
    if let Some(err) = &outcome.error {
        eprintln!("error: {err}");
    }
    std::process::exit(outcome.exit_code);
}

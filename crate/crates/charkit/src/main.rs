use clap::Parser;

fn main() {
    // Die quietly on SIGPIPE (e.g. `charkit chartab ... | head`) instead of
    // panicking on the broken-pipe write error.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = charkit::cli::Cli::parse();
    match charkit::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("{err}");
            std::process::exit(err.exit_code());
        }
    }
}

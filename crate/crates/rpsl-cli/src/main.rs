use std::process::ExitCode;

mod app;
mod providers;
mod render;
mod scene;

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`rpsl ast ... | head`) instead of
    // panicking in println!; Rust ignores SIGPIPE by default.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    app::main()
}

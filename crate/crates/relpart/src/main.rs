fn main() {
    // Restore default SIGPIPE handling so `relpart hasse … | head` exits
    // quietly instead of panicking on the closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(relpart::cli_main());
}

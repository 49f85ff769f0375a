fn main() {
    std::process::exit(sdgr::cli::main());
}

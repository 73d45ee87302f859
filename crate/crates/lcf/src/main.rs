fn main() {
    std::process::exit(lcf::cli::main_with(std::env::args_os()));
}

fn main() {
    std::process::exit(ddlpb::cli::run(std::env::args_os()));
}

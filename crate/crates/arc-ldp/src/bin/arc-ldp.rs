fn main() {
    std::process::exit(arc_ldp::cli::run());
}

fn main() {
    std::process::exit(metric_basis::cli::run());
}

fn main() {
    std::process::exit(eisenreduce::cli::run());
}

fn main() {
    std::process::exit(wlinkage::cli::run());
}

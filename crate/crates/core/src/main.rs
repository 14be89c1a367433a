fn main() {
    std::process::exit(dsmaxwell::cli::main());
}

fn main() {
    std::process::exit(hexmin::run(std::env::args_os()));
}

fn main() {
    std::process::exit(qwigner::run_cli());
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (code, out) = golodkit::cli::run(&args);
    if !out.is_empty() {
        if code == 0 {
            print!("{out}");
        } else {
            eprint!("{out}");
        }
    }
    std::process::exit(code);
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    std::process::exit(spa_cli::run(&args, &mut out, &mut err));
}

use std::io::Write;

fn main() {
    if let Some(n) = std::env::var("ARRZETA_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // ignore failure: the pool may already be initialized
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (code, out) = arrzeta::cli::run(std::env::args_os(), &mut std::io::stdin());
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}

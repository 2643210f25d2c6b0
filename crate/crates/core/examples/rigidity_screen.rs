//! Screen the bundled corpus, or a directory given on the command line.
//!
//! ```bash
//! cargo run --release --example rigidity_screen -- path/to/groups --json
//! ```

use std::path::PathBuf;

use wittlab::screen::screen_corpus;

fn main() -> Result<(), wittlab::Error> {
    let mut args = std::env::args().skip(1);
    let dir = args.next().map(PathBuf::from).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/corpus").into());
    let report = screen_corpus(&dir, None)?;
    if args.any(|a| a == "--json") {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_human());
    }
    Ok(())
}

use std::process::ExitCode;

use bundlecalc::cache::Cache;
use bundlecalc::cli::{Cli, Format};
use bundlecalc::{cache_key, execute};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = Cache::from_env();
    let key = cache_key(&cli);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&key)) {
        print!("{hit}");
        return ExitCode::SUCCESS;
    }
    match execute(&cli) {
        Ok(out) => {
            if let Some(c) = &cache {
                c.put(&key, &out);
            }
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("serialisable")),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! Regenerates the checked-in fixture bundles: `cargo run --example write_fixtures -- <dir>`.

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    std::fs::create_dir_all(&dir)?;
    for (name, bundle) in homalg_core::fixtures::library() {
        let path = std::path::Path::new(&dir).join(format!("{name}.json"));
        std::fs::write(&path, bundle.to_json())?;
        println!("{}", path.display());
    }
    Ok(())
}

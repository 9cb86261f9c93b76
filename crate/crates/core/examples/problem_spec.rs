//! Run the JSON problem descriptions in examples/data through the batch
//! front end, printing the text report for each and the JSON for one.

use std::path::Path;

use fibstab::cli::{parse, render, run, Format, RunOptions};

fn main() -> fibstab::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .expect("examples/data exists")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    for f in &files {
        let spec = parse(&std::fs::read_to_string(f).unwrap())?;
        let a = run(&spec, &RunOptions::default())?;
        println!("== {}", f.file_name().unwrap().to_string_lossy());
        print!("{}", render(&a, Format::Text));
        if !a.checks.is_empty() {
            println!("identities checked: {}", a.checks.join(", "));
        }
        println!();
    }
    let spec = parse(&std::fs::read_to_string(dir.join("hirzebruch.json")).unwrap())?;
    print!("{}", render(&run(&spec, &RunOptions::default())?, Format::Json));
    Ok(())
}

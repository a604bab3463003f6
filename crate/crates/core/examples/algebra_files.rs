//! Build a Hopf algebra from a multiplication table, save it as an algebra
//! file, load it back and emit a JSON report.
//!
//!     cargo run --example algebra_files

use hopfkit::constructions::{group_algebra, GroupTable};
use hopfkit::io::{load_algebra, save_algebra, AlgebraDescriptor, Parameters, ReportDocument};
use hopfkit::radford::{run_battery, Battery};
use hopfkit::scalar::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Klein four-group
    let names = ["1", "u", "v", "uv"].map(String::from).to_vec();
    let table = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
    let h = group_algebra(&GroupTable::from_table(names, table)?, &FieldSpec::rationals())?;

    let dir = std::env::temp_dir().join("hopfkit-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("klein.jsonl");
    save_algebra(&h, &path)?;
    print!("{}", std::fs::read_to_string(&path)?);

    let back = load_algebra(&path)?;
    let report = run_battery(&back, Battery::All, None)?;
    let doc = ReportDocument::new(
        AlgebraDescriptor {
            target: path.display().to_string(),
            field: back.field.to_string(),
            dim: Some(back.dim()),
        },
        Battery::All.name(),
        Parameters::default(),
        &report,
    );
    println!("status {}, {} checks", serde_json::to_value(doc.status)?, doc.checks.len());
    Ok(())
}

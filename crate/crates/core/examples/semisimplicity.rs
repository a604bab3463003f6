//! The six-way semisimplicity battery, with the characteristic-p gate: over
//! 𝔽₅ the group algebra kC₅ splits the conditions (F,T,T,F,T,T).
//!
//!     cargo run --example semisimplicity

use hopfkit::constructions::Preset;
use hopfkit::integrals::analyze;
use hopfkit::radford::mainss_battery;
use hopfkit::scalar::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [(&str, Option<FieldSpec>); 4] = [
        ("group:C3", None),
        ("group:S3", None),
        ("sweedler", None),
        ("group:C5", Some(FieldSpec::prime(5)?)),
    ];
    for (target, field) in cases {
        let h = target.parse::<Preset>()?.build(field.as_ref())?;
        let (ints, gl) = analyze(&h)?;
        let r = mainss_battery(&h, &ints, &gl);
        let unanimity = r.get("mainss-unanimity").expect("always reported");
        println!(
            "{target:>9} over {:<5} {:<15} {}",
            h.field.to_string(),
            unanimity.status.to_string(),
            unanimity.detail.as_deref().unwrap_or("")
        );
    }
    Ok(())
}

//! The Nakayama automorphism χ (h⇀λ = λ↼χ(h)), its partner Ω, and the two
//! closed forms of χ in terms of S², α and g.
//!
//!     cargo run --example nakayama -- taft:2

use hopfkit::constructions::Preset;
use hopfkit::integrals::{analyze, chi_closed_form, chi_second_form, nakayama_chi, nakayama_omega};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target = std::env::args().nth(1).unwrap_or_else(|| "taft:2".into());
    let h = target.parse::<Preset>()?.build(None)?;
    let (ints, gl) = analyze(&h)?;

    let chi = nakayama_chi(&h, &ints)?;
    let omega = nakayama_omega(&h, &ints)?;
    for (i, name) in h.basis_names.iter().enumerate() {
        println!(
            "χ({name}) = {:<28} Ω({name}) = {}",
            h.format_vec(&chi.column(i)),
            h.format_vec(&omega.column(i))
        );
    }
    println!("χ = α(h₂)S⁻²(h₁):     {}", chi == chi_closed_form(&h, &gl));
    println!("χ = α(h₁)g⁻¹S²(h₂)g:  {}", chi == chi_second_form(&h, &gl));
    println!("Ω = SχS⁻¹:            {}", omega == h.antipode_power(1).mul(&chi).mul(&h.antipode_power(-1)));
    Ok(())
}

//! Integrals from dual-basis sums with m = S²: r = Σ⟨eⁱ, S²((eᵢ)₁)⟩(eᵢ)₂ is
//! nonzero iff H is cosemisimple, and the functional λ = Σ S²(eᵢ)⇀eⁱ, which
//! is h ↦ Tr(x ↦ hS²(x)), is nonzero iff H is semisimple.
//!
//!     cargo run --example trace_integrals

use hopfkit::constructions::Preset;
use hopfkit::integrals::trace_integrals;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for target in ["group:C4", "group:S3", "sweedler", "taft:3"] {
        let h = target.parse::<Preset>()?.build(None)?;
        let sums = trace_integrals(&h);
        println!("{target}");
        println!("  r = {}", sums.r);
        println!("  t = {}", sums.t);
        println!("  λ = {}", sums.lambda);
        println!("  Λ = {}", sums.big_lambda);
        println!("  Tr(S²) = {}", h.antipode_power(2).trace());
    }
    Ok(())
}

//! Integrals in H and H*, and the distinguished grouplikes α and g.
//!
//!     cargo run --example integrals -- taft:3

use hopfkit::constructions::Preset;
use hopfkit::integrals::analyze;
use hopfkit::radford::{order_of_character, order_of_grouplike};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target = std::env::args().nth(1).unwrap_or_else(|| "sweedler".into());
    let h = target.parse::<Preset>()?.build(None)?;
    let (ints, gl) = analyze(&h)?;

    println!("{target} over {}, dimension {}", h.field, h.dim());
    println!("left integral t   = {}", ints.left_h);
    println!("right integral T  = {}", ints.right_h);
    println!("left integral λ   = {}", ints.left_hstar);
    println!("right integral Λ  = {}", ints.right_hstar);
    println!("ε(t) = {}, λ(1) = {}", ints.left_h.counit(), ints.left_hstar.eval(&h.one())?);

    for (i, name) in h.basis_names.iter().enumerate() {
        println!("α({name}) = {}", gl.alpha.values()[i]);
    }
    println!("g = {}, g⁻¹ = {}", gl.g, gl.g_inv);
    println!("order(α) = {}", order_of_character(&gl.alpha, 64));
    println!("order(g) = {}", order_of_grouplike(&gl.g, 64));
    Ok(())
}

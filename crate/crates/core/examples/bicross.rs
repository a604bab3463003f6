//! The infinite-dimensional co-Frobenius bicrossproduct Tₙ × kA: the right
//! integral Λ = p_{x^{n-1}}⊗p_e, g = c^{n-1}⊗a^{n-1} of infinite order, α of
//! order n, and S⁴ on a window |k| ≤ K.
//!
//!     cargo run --example bicross -- 3 4

use hopfkit::bicross::{
    distinguished_alpha_bicross, distinguished_g_bicross, order_of_antipode_bicross,
    order_of_character_bicross, order_of_grouplike_bicross, verify_s4_bicross, Bicross,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2);
    let window: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let b = Bicross::new(n)?;
    let g = distinguished_g_bicross(&b, window.max(n as i64))?;
    let alpha = distinguished_alpha_bicross(&b, window)?;
    println!("g = {g}");
    println!("α(c⊗e) = {}, α(x⊗e) = {}, α(1⊗a) = {}", alpha.alpha.c, alpha.alpha.x, alpha.alpha.a);
    println!("order(α) = {}", order_of_character_bicross(&b, &alpha.alpha, 100));
    println!("order(g) = {}", order_of_grouplike_bicross(&b, &g, 100));
    println!("order(S) = {} on |k| ≤ {window}", order_of_antipode_bicross(&b, window, 100));
    println!("{}", verify_s4_bicross(&b, window, &alpha, &g));
    Ok(())
}

//! S⁴(h) = g(α⇀h↼α⁻¹)g⁻¹ checked basis-wise, plus the orders of S, S², α, g.
//!
//!     cargo run --example radford_s4 -- taft:4

use hopfkit::constructions::Preset;
use hopfkit::integrals::analyze;
use hopfkit::radford::{antipode_orders, default_order_bound, verify_s4, S4_ITERATIONS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target = std::env::args().nth(1).unwrap_or_else(|| "taft:3".into());
    let h = target.parse::<Preset>()?.build(None)?;
    let (_, gl) = analyze(&h)?;

    let mut report = verify_s4(&h, &gl, S4_ITERATIONS);
    report.extend(antipode_orders(&h, &gl, default_order_bound(&h)));
    println!("{report}");
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}

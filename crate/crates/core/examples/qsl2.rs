//! k[SL_q(2)] over ℚ(q): PBW normal forms, the left integral λ, the Nakayama
//! automorphism χ and the S⁴ formula on a degree window.
//!
//!     cargo run --example qsl2 -- da

use hopfkit::qsl2::{verify_chi_alpha, verify_s4_qsl, Generator, Qsl2};

fn main() {
    let word = std::env::args().nth(1).unwrap_or_else(|| "da".into());
    let h = Qsl2::new();
    let Some(w) = Qsl2::parse_word(&word) else {
        eprintln!("words use the letters a, b, c, d");
        std::process::exit(2);
    };
    let x = h.normal_form(&w);
    println!("{word} = {x}");
    println!("λ({word}) = {}", h.lambda(&x));
    println!("S²({word}) = {}", h.antipode(&x, 2));
    for g in Generator::ALL {
        println!("χ({g}) = {}", h.chi_generator(g));
    }
    let mut r = verify_chi_alpha(&h, 4);
    r.extend(verify_s4_qsl(&h, 4));
    println!("{r}");
}

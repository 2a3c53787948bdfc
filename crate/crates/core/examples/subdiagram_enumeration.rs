//! Configurations of Du Val points obtained as subdiagrams.

use logdp::dynkin::{config_diagram, enumerate_ade_subdiagrams, ConfigName};

fn main() {
    for name in ["A_4", "A_7", "D_4", "E_6", "A_5 A_1"] {
        let c: ConfigName = name.parse().unwrap();
        let subs = enumerate_ade_subdiagrams(&config_diagram(&c).unwrap()).unwrap();
        let list: Vec<String> = subs.iter().map(ToString::to_string).collect();
        println!("{name}: {} configurations", subs.len());
        println!("    {}", list.join(", "));
    }
    let c: ConfigName = "A_3 A_1".parse().unwrap();
    println!("taken twice, {c} becomes {}", c.doubled());
}

//! Checking that weighted configurations of -2 curves are elliptic fibers.

use std::collections::BTreeMap;

use logdp::dynkin::{elliptic_configuration, elliptic_pencil_check, Diagram};

fn main() {
    for name in ["i:3", "ii:5", "iii", "iv", "v"] {
        let (d, m) = elliptic_configuration(name.parse().unwrap()).unwrap();
        let r = elliptic_pencil_check(&d, &m).unwrap();
        println!("{name:<5} curves {:>2}  E^2 = {}  elliptic: {}", d.len(), r.e_square, r.elliptic);
    }
    // an A_3 chain with multiplicities 1,1,1 is not a fiber
    let d = Diagram::from_parts(&[("a", -2), ("b", -2), ("c", -2)], &[("a", "b", 1), ("b", "c", 1)]).unwrap();
    let m: BTreeMap<String, i64> = [("a", 1), ("b", 1), ("c", 1)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let r = elliptic_pencil_check(&d, &m).unwrap();
    println!("chain   E^2 = {}  E.v = {:?}", r.e_square, r.e_dot);
}

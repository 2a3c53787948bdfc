//! Minimal and right resolutions of the index-two points K_n.

use logdp::dynkin::{cg_intersections, gram_matrix, is_negative_definite, kn_minimal, kn_right_resolution};

fn main() {
    for n in 1..=5 {
        let m = kn_minimal(n).unwrap();
        let r = kn_right_resolution(n).unwrap();
        println!("K_{n}: minimal {:?}, right {:?}", m.self_intersections(), r.self_intersections());
        println!("    negative definite: {} / {}", is_negative_definite(&m), is_negative_definite(&r));
        println!("    C_g intersections on the right resolution: {:?}", cg_intersections(&r));
    }
    println!("Gram matrix of the K_2 chain: {:?}", gram_matrix(&kn_minimal(2).unwrap()));
}

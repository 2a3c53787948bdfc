//! Invariants of weighted projective spaces and their hypersurfaces.

use logdp::families::family_catalog;
use logdp::wps::{genus_system_invariants, WeightedSpace};

fn main() {
    for e in family_catalog() {
        let space = WeightedSpace::new(e.weights.clone()).unwrap();
        let ks = space.k_square(&e.degrees).unwrap();
        println!("{:<14} weights {:?} degrees {:?}: K^2 = {}", e.family.name(), e.weights, e.degrees, ks.k_square);
        for s in space.singular_strata().unwrap() {
            println!("    singular stratum {:?} of order {}", s.support, s.order);
        }
    }
    for g in 2..=6 {
        let s = genus_system_invariants(g).unwrap();
        println!("g = {g}: dim|C_g| = {}, C_g^2 = {}, dim|D_g| = {}, D_g^2 = {}", s.dim_cg, s.cg_square, s.dim_dg, s.dg_square);
    }
}

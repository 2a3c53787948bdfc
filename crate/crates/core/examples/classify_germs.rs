//! ADE classification of curve and surface germs at the origin.

use logdp::polyq::{parse_with_vars, var_list};
use logdp::singclass::{classify_germ, milnor_number, DEFAULT_ORDER};

fn main() {
    let curves = var_list(&["x", "y"]);
    let surfaces = var_list(&["x", "y", "z"]);
    for s in ["x^2 + y^5", "x^2*y + y^4", "x^3 + y^4", "x^3 + x*y^3", "x^3 + y^5", "x^4 + y^4"] {
        let f = parse_with_vars(s, &curves).unwrap();
        let t = classify_germ(&f, DEFAULT_ORDER).unwrap();
        println!("{s:<16} {t:<10} milnor {:?}", milnor_number(&f).unwrap().finite());
    }
    for s in ["x^2 + y^2 + z^4", "x*y + z^3 + x^3", "x^2 + y^2*z + z^5", "x^2 + y^3 + z^5", "x^2 + y^3 + z^6"] {
        let f = parse_with_vars(s, &surfaces).unwrap();
        println!("{s:<20} {}", classify_germ(&f, DEFAULT_ORDER).unwrap());
    }
}

//! Rational singular points of plane curves and surfaces.

use logdp::polyq::{parse_with_vars, var_list};
use logdp::singclass::{find_rational_singular_points, Ambient, DEFAULT_ORDER};

fn main() {
    let v = var_list(&["x", "y", "z"]);
    for (s, ambient) in [
        ("(x^2 + y^2 - z^2)*(x - 2*z)*(y - z)", Ambient::Projective),
        ("y^2*z - x^3 - x^2*z", Ambient::Projective),
        ("x^2 + y^2 - z^2 + x*y*z", Ambient::Affine),
    ] {
        let f = parse_with_vars(s, &v).unwrap();
        let r = find_rational_singular_points(&f, ambient, DEFAULT_ORDER).unwrap();
        println!("{s} ({ambient:?}), complete: {}", r.complete);
        for p in r.points {
            let c: Vec<String> = p.coords.iter().map(ToString::to_string).collect();
            println!("    ({}) {:?}", c.join(", "), p.germ_type);
        }
    }
}

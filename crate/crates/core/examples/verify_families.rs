//! Running the family checkers on a few members of each family.

use logdp::families::{verify_g2, verify_g3a, verify_g3b, verify_g4, verify_quintic, FamilyReport};
use logdp::polyq::{parse_with_vars, var_list, Poly};

fn poly(s: &str, vars: &[&str]) -> Poly {
    parse_with_vars(s, &var_list(vars)).unwrap()
}

fn show(label: &str, r: &FamilyReport) {
    let failed = r.failed_condition.as_ref().map(|f| format!(" ({:?}: {})", f.condition, f.detail)).unwrap_or_default();
    println!(
        "{label:<28} {:?}{failed}\n    index {} k {} Du Val {} K-points {}",
        r.verdict, r.index, r.k, r.duval_config, r.index2_config
    );
}

fn main() {
    let xyz = ["x", "y", "z"];
    let xyzt = ["x", "y", "z", "t"];
    show("sextic, Fermat", &verify_g2(&poly("x^6 + y^6 + z^3", &xyz), &[]).unwrap());
    show("sextic, A_5 at the centre", &verify_g2(&poly("z^2*x^2 + y^6 + x^6", &xyz), &[]).unwrap());
    show(
        "sextic, three conics",
        &verify_g2(&poly("(z - x^2 - y^2)*(z - x^2 - 2*y^2)*(z - x^2 - 3*y^2)", &xyz), &[]).unwrap(),
    );
    show("octic", &verify_g3a(&poly("z^2 + x^8 + y^8", &xyz), &[]).unwrap());
    show("octic through the vertex", &verify_g3a(&poly("z*x^4 + y^8", &xyz), &[]).unwrap());
    show("quartic, A_3 at the centre", &verify_g3b(&poly("t*(x^2 + y^2) + x^4 + y^4 + z^4", &xyzt), &[]).unwrap());
    show("quintic", &verify_quintic(&poly("t*x + y^5 + z^5", &xyzt), &[]).unwrap());
    let v5 = ["x", "y", "z", "t", "u"];
    show(
        "quadric and cubic",
        &verify_g4(&poly("x*y + z*t", &v5), &poly("x^3 + y^3 + z^3 + t^3 + u*x", &v5), &[]).unwrap(),
    );
}

//! Exact arithmetic, gcd and resultants over Q.

use logdp::polyq::{parse, parse_with_vars, var_list};

fn main() {
    let v = var_list(&["x", "y"]);
    let f = parse_with_vars("(x - y)^2 * (x + 2*y)", &v).unwrap();
    let g = parse_with_vars("(x - y) * (x^2 + y^2 + 1/3)", &v).unwrap();
    println!("f = {f}");
    println!("g = {g}");
    println!("gcd(f, g) = {}", f.gcd(&g).unwrap());
    println!("f squarefree? {}", f.is_squarefree().unwrap());
    println!("squarefree part of f = {}", f.squarefree_part());

    // eliminating y from a line and a circle leaves the x-coordinates of
    // their common points
    let line = parse_with_vars("y - x", &v).unwrap();
    let circle = parse_with_vars("x^2 + y^2 - 2", &v).unwrap();
    println!("Res_y(line, circle) = {}", line.resultant_by_name(&circle, "y").unwrap());

    match parse("x^2 + * y") {
        Ok(p) => println!("parsed {p}"),
        Err(e) => println!("parse error: {e}"),
    }
}

// Parsing, composing and powering permutations in cycle notation.

use cutgroups::perm::{compose, format_permutation, parse_permutation};
use cutgroups::Permutation;

fn main() -> cutgroups::Result<()> {
    let a = parse_permutation("(1 2 3)", 4)?;
    let b = parse_permutation("(1 2)(3 4)", 4)?;

    // Products act left to right: first a, then b.
    let ab = compose(&a, &b)?;
    println!("{a} * {b} = {ab}");
    println!("{b} * {a} = {}", compose(&b, &a)?);
    println!("inverse of {ab} is {}", ab.inverse());
    println!("{a} conjugated by {b} is {}", a.conjugate_by(&b));
    println!("[{a}, {b}] = {}", a.commutator(&b));

    let x: Permutation = "(1 2 3 4 5 6)(7 8)".parse()?;
    println!("{x} has degree {}, order {}, cycle type {:?}", x.degree(), x.order(), x.cycle_type());
    for k in [-1, 2, 3, 5] {
        println!("  x^{k} = {}", x.pow(k));
    }
    println!("even: {}", x.is_even());
    println!("canonical form of \"( 3 1 2 )\": {}", format_permutation(&parse_permutation("( 3 1 2 )", 3)?));

    for bad in ["(1 2", "(1 1 2)", "(0 1)", "(1 9)"] {
        match parse_permutation(bad, 4) {
            Ok(p) => println!("{bad:?} parsed as {p}"),
            Err(e) => println!("{bad:?} rejected: {e}"),
        }
    }
    Ok(())
}

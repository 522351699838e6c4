//! Prints the JSON documents the command-line tool reads, for a few corpus objects.
//!
//! Redirect one into a file and pass it to `antiprelie check`, `rep-check` and so on.

use antiprelie::corpus;
use antiprelie::io::{print, to_document, OOperatorDoc};
use antiprelie::linalg::Matrix;
use antiprelie::representation::regular_representation;
use antiprelie::scalar::Rational;

fn main() {
    let a2 = corpus::a2::<Rational>();
    print!("{}", print(&to_document(&a2)));
    print!("{}", print(&to_document(&regular_representation(&a2))));
    print!("{}", print(&to_document(&OOperatorDoc(Matrix::<Rational>::identity(2)))));
    print!("{}", print(&to_document(&corpus::a2_right_dendriform::<Rational>())));
}

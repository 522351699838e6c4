//! Counts small anti-pre-Lie algebras over finite fields by exhaustive search.

use antiprelie::scalar::{FiniteField, Fp};
use antiprelie::search::{search_algebras, SearchSpec};

fn count<S: FiniteField>(n: usize) -> String {
    match search_algebras::<S>(n, &SearchSpec::field()) {
        Ok(found) => found.len().to_string(),
        Err(e) => format!("refused ({e})"),
    }
}

fn main() {
    for n in 1..=3 {
        println!("dim {n}: F2 {}, F3 {}", count::<Fp<2>>(n), count::<Fp<3>>(n));
    }
}

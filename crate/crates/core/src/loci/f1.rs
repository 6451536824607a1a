use std::sync::OnceLock;

use super::f1_table::F1_TABLE;
use crate::exact::{Rational, TriPoly, DIHEDRAL_VARS};

/// Plain-text transcription of F1, kept independent of the term table.
const F1_TEXT: &str = include_str!("f1_terms.txt");

/// F1 built from the term table.
pub fn f1_from_table() -> TriPoly {
    TriPoly::from_terms(&F1_TABLE)
}

/// F1 parsed from the plain-text transcription.
pub fn f1_from_text() -> TriPoly {
    TriPoly::parse(F1_TEXT, DIHEDRAL_VARS).expect("F1 text parses")
}

/// The polynomial F1 in `(s2, s3, s4)`.
pub fn f1() -> &'static TriPoly {
    static CELL: OnceLock<TriPoly> = OnceLock::new();
    CELL.get_or_init(f1_from_table)
}

pub fn f1_eval(x: &[Rational; 3]) -> Rational {
    f1().eval(x)
}

/// Hex SHA-256 of the canonical serialization of F1.
pub fn f1_sha256() -> String {
    f1().sha256(DIHEDRAL_VARS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn double_entry_agrees() {
        let a = f1_from_table();
        let b = f1_from_text();
        assert_eq!(a.len(), 116);
        assert_eq!(a, b);
        assert_eq!(a.to_canonical_string(DIHEDRAL_VARS), b.to_canonical_string(DIHEDRAL_VARS));
    }

    #[test]
    fn shape() {
        assert_eq!(f1().degrees(), [13, 8, 6]);
    }

    #[test]
    fn frozen_values() {
        assert_eq!(f1_eval(&[q(1, 1), q(1, 1), q(1, 1)]), q(42216, 1));
        assert_eq!(f1_eval(&[q(1, 1), q(2, 1), q(2, 1)]), q(352000, 1));
        assert_eq!(f1_eval(&[q(0, 1), q(0, 1), q(0, 1)]), q(0, 1));
    }
}

//! Named structure instances with known Casimir constants.

use crate::error::{Error, Result};
use crate::structure::{make_structure, StructureData};

/// `(name, description, n, blocks)`. Kappa values of the symmetric pairs
/// satisfy `Σ d_i (1 - kappa_i) = n / 2`.
const ENTRIES: &[(&str, &str, u32, &[(u32, f64)])] = &[
    ("so6-diag", "SO(6) / (SO(3) x SO(3)), blocks embedded diagonally", 9, &[(3, 0.25), (3, 0.25)]),
    ("su3-so3", "SU(3) / SO(3)", 5, &[(3, 1.0 / 6.0)]),
    ("so6-so5", "SO(6) / SO(5)", 5, &[(10, 0.75)]),
    ("so7-so6", "SO(7) / SO(6)", 6, &[(15, 0.8)]),
    ("su2-u1", "SU(2) / U(1)", 2, &[(1, 0.0)]),
];

pub fn catalog_lookup(name: &str) -> Result<StructureData> {
    ENTRIES
        .iter()
        .find(|(key, ..)| *key == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
        .and_then(|(_, _, n, blocks)| make_structure(*n, blocks))
}

/// All catalog keys with a short description, in catalog order.
pub fn catalog_entries() -> impl Iterator<Item = (&'static str, &'static str)> {
    ENTRIES.iter().map(|(k, desc, ..)| (*k, *desc))
}

/// True when `sd` is the SO(6)/(SO(3)xSO(3)) instance.
pub fn is_so6_diag(sd: &StructureData) -> bool {
    sd.n() == 9
        && sd.len() == 2
        && sd.blocks().iter().all(|b| b.d == 3 && (b.kappa - 0.25).abs() < 1e-15)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so6_diag_entry() {
        let sd = catalog_lookup("so6-diag").unwrap();
        assert_eq!(sd.n(), 9);
        assert_eq!(sd.blocks().len(), 2);
        assert!(sd.blocks().iter().all(|b| b.d == 3 && b.kappa == 0.25));
        assert_eq!(sd.total_dimension(), 15);
        assert!(is_so6_diag(&sd));
    }

    #[test]
    fn unknown_entry() {
        assert_eq!(
            catalog_lookup("nonsense"),
            Err(Error::UnknownCatalogEntry("nonsense".into()))
        );
    }

    #[test]
    fn every_entry_validates() {
        for (name, _) in catalog_entries() {
            let sd = catalog_lookup(name).unwrap();
            // symmetric-space identity used to fill in the constants
            assert!((sd.total_defect() - sd.n() as f64 / 2.0).abs() < 1e-12, "{name}");
        }
    }
}

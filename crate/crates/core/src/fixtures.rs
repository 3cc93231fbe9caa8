//! Published example arrays, embedded from the `fixtures/` directory.

use std::path::PathBuf;

use crate::format::parse_csv;
use crate::grid::SignedArray;

/// Environment variable that points the CLI at an alternative fixtures directory.
pub const FIXTURES_DIR_ENV: &str = "SMA_FIXTURES_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fixture {
    Fig1Sma3x2,
    Fig1Sma3x4,
    Fig1Sma4x2,
    Fig2Ssma4x4,
    Fig2Ssma6x4,
    Fig3Ssma4x6,
    Fig3Ssma6x6,
    Fig4Ssma6x10,
    Fig5Sma5x4,
    Fig5Sma5x6,
    Fig5Heffter5x3,
    Fig6Sma5x8,
    Fig6Heffter5x4,
    Appendix1Sma3x12,
    Appendix1B3x12,
    Appendix1Sma5x12,
    Appendix2Sma3x10,
    Appendix2B3x10,
    Appendix2Sma5x10,
}

macro_rules! fixture_table {
    ($($variant:ident => $name:literal),* $(,)?) => {
        impl Fixture {
            pub const ALL: &'static [Fixture] = &[$(Fixture::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Fixture::$variant => $name,)*
                }
            }

            pub fn csv(self) -> &'static str {
                match self {
                    $(Fixture::$variant => include_str!(concat!("../fixtures/", $name, ".csv")),)*
                }
            }
        }
    };
}

fixture_table! {
    Fig1Sma3x2 => "fig1-sma-3-2",
    Fig1Sma3x4 => "fig1-sma-3-4",
    Fig1Sma4x2 => "fig1-sma-4-2",
    Fig2Ssma4x4 => "fig2-ssma-4-4",
    Fig2Ssma6x4 => "fig2-ssma-6-4",
    Fig3Ssma4x6 => "fig3-ssma-4-6",
    Fig3Ssma6x6 => "fig3-ssma-6-6",
    Fig4Ssma6x10 => "fig4-ssma-6-10",
    Fig5Sma5x4 => "fig5-sma-5-4",
    Fig5Sma5x6 => "fig5-sma-5-6",
    Fig5Heffter5x3 => "fig5-heffter-5-3",
    Fig6Sma5x8 => "fig6-sma-5-8",
    Fig6Heffter5x4 => "fig6-heffter-5-4",
    Appendix1Sma3x12 => "appendix1-sma-3-12",
    Appendix1B3x12 => "appendix1-b-3-12",
    Appendix1Sma5x12 => "appendix1-sma-5-12",
    Appendix2Sma3x10 => "appendix2-sma-3-10",
    Appendix2B3x10 => "appendix2-b-3-10",
    Appendix2Sma5x10 => "appendix2-sma-5-10",
}

impl Fixture {
    pub fn load(self) -> SignedArray {
        parse_csv(self.csv()).unwrap_or_else(|e| panic!("embedded fixture {} is malformed: {e}", self.name()))
    }

    pub fn by_name(name: &str) -> Option<Fixture> {
        let name = name.strip_suffix(".csv").unwrap_or(name);
        Fixture::ALL.iter().copied().find(|f| f.name() == name)
    }

    /// Whether the array is a complete tight SMA (the intermediate `B` arrays
    /// and the Heffter halves are not).
    pub fn is_sma(self) -> bool {
        !matches!(
            self,
            Fixture::Appendix1B3x12 | Fixture::Appendix2B3x10 | Fixture::Fig5Heffter5x3 | Fixture::Fig6Heffter5x4
        )
    }

    /// Arrays published as shiftable.
    pub fn is_shiftable_claim(self) -> bool {
        matches!(
            self,
            Fixture::Fig2Ssma4x4
                | Fixture::Fig2Ssma6x4
                | Fixture::Fig3Ssma4x6
                | Fixture::Fig3Ssma6x6
                | Fixture::Fig4Ssma6x10
        )
    }

    pub fn is_heffter(self) -> bool {
        matches!(self, Fixture::Fig5Heffter5x3 | Fixture::Fig6Heffter5x4)
    }
}

/// Directory to read fixture files from when the override variable is set.
pub fn override_dir() -> Option<PathBuf> {
    std::env::var_os(FIXTURES_DIR_ENV).map(PathBuf::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for f in Fixture::ALL {
            let a = f.load();
            assert!(a.rows() > 0 && a.cols() > 0, "{}", f.name());
            assert_eq!(Fixture::by_name(f.name()), Some(*f));
        }
        assert_eq!(Fixture::ALL.len(), 19);
    }
}

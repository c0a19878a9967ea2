//! An exact-arithmetic laboratory for the counting theory of Severi curves on
//! rational elliptic surfaces.
//!
//! Genus-g bisections of a rational elliptic surface are governed by two
//! intertwined pieces of arithmetic, and this crate computes both of them
//! exactly, then cross-checks one against the other:
//!
//! * **q-series**: truncated power series with arbitrary-precision rational
//!   coefficients ([`qseries`]), including the Eisenstein series E2, E4, E6,
//!   the Jacobi theta function, the Noether-Lefschetz series phi and its
//!   decomposition into excess, nodal, and section-counting parts, and the
//!   conjectural degree series for ordinary and Weierstrass bundles
//!   ([`severi`]).
//! * **E8 lattice data**: brute-force enumeration of lattice vectors by norm,
//!   reflection orbits, the 256 classes of E8/2E8, and the pair-decomposition
//!   counts behind the telltale formulas ([`e8`]).
//!
//! Every identity the series side asserts is verified against the lattice
//! oracle (and vice versa) by the named checks in [`suite`], each producing a
//! [`report::CheckReport`] with the precision used and the first discrepancy
//! on failure. The `severi-lab` binary exposes the same functionality behind
//! the `series`, `e8`, `degrees`, and `verify` verbs; the `examples/`
//! directory demonstrates each capability in isolation.
//!
//! All arithmetic is exact: rational coefficients throughout, integer lattice
//! coordinates (doubled, so half-integer vectors stay integral), and no
//! floating point anywhere.

pub mod cli;
pub mod e8;
pub mod format;
pub mod qseries;
pub mod report;
pub mod severi;
pub mod suite;

/// Shared configuration knobs for the verification suite.
///
/// `precision` is the q-series truncation order used by series-level checks;
/// `norm_cap` bounds the lattice norms the enumeration checks sweep. Both are
/// deliberately configuration, not constants: the identities are checked "to
/// precision N", and every report records the N that was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Truncation order for q-series checks (coefficients 0..=precision).
    pub precision: usize,
    /// Largest lattice norm swept by enumeration checks; must be even.
    pub norm_cap: i64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: 200,
            norm_cap: 60,
        }
    }
}

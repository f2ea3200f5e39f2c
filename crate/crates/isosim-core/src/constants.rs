//! Physical constants (2019 SI exact values where defined, CODATA otherwise).

/// Elementary charge in coulombs (exact by SI definition).
pub const E_CHARGE: f64 = 1.602_176_634e-19;

/// Planck constant in J.s (exact by SI definition).
pub const PLANCK_H: f64 = 6.626_070_15e-34;

/// Reduced Planck constant in J.s.
pub const HBAR: f64 = PLANCK_H / std::f64::consts::TAU;

/// Magnetic flux quantum Phi0 = h/(2e) = 2*pi*hbar/(2e), in webers.
pub const FLUX_QUANTUM: f64 = PLANCK_H / (2.0 * E_CHARGE);

/// Reduced flux quantum phi0 = hbar/(2e) = Phi0/(2*pi), in webers.
pub const REDUCED_FLUX_QUANTUM: f64 = HBAR / (2.0 * E_CHARGE);

/// Vacuum speed of light in m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flux_quantum_relations() {
        // Phi0 = 2*pi*phi0 must hold exactly as built.
        let rel = (FLUX_QUANTUM - std::f64::consts::TAU * REDUCED_FLUX_QUANTUM).abs()
            / FLUX_QUANTUM;
        assert!(rel < 1e-15, "Phi0 != 2*pi*phi0, rel err {rel}");
        // CODATA value 2.067833848e-15 Wb.
        assert!((FLUX_QUANTUM - 2.067_833_848e-15).abs() / FLUX_QUANTUM < 1e-9);
    }
}

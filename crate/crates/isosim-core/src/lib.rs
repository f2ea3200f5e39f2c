//! Circuit-level simulation of nonreciprocal Josephson-junction isolators.
//!
//! The crate models lumped-element microwave circuits containing transmon
//! qubits (Josephson junctions shunted by capacitors) side-coupled to a
//! transmission line, and provides four complementary analyses:
//!
//! * [`linmap`] — per-frequency nodal admittance assembly and small-signal
//!   AC / S-parameter solutions,
//! * [`hbsolver`] — a harmonic-balance engine that finds the periodic steady
//!   state of the driven nonlinear circuit by Newton iteration on node
//!   voltage harmonics, with the junction `i = Ic sin(phi)` nonlinearity
//!   evaluated exactly by time-domain sampling,
//! * [`response`] — the large-signal two-port protocol: forward/backward
//!   transmission, isolation, diode efficiency, and parameter sweeps,
//! * [`quantizer`] — exact diagonalization of the one- and two-transmon
//!   Hamiltonian in a truncated charge basis (eigenvalue / avoided-crossing
//!   analysis),
//! * [`oracle`] — an independent trapezoidal transient integrator used to
//!   cross-validate the harmonic-balance results at selected points.
//!
//! Circuits are described by [`netlist::Netlist`]; the reference Lorentz and
//! Fano isolator circuits are available through
//! [`netlist::reference_lorentz`] and [`netlist::reference_fano`].

pub mod constants;
pub mod hbsolver;
pub mod linmap;
pub mod netlist;
pub mod oracle;
pub mod quantizer;
pub mod response;
pub mod units;

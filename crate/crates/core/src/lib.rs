//! Exact computations for the spherical nilpotent orbits of sl_n(ℝ) and the
//! differential-operator realizations of their unipotent representations.

pub mod exactalg;
pub mod liecore;
pub mod orbitcat;
pub mod parab;
pub mod stab;
pub mod weyl;

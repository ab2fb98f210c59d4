//! Exact verification toolkit for the Galois action on Néron–Severi groups of Dwork quartic
//! surfaces.

pub mod exactalg;
pub mod counting;
pub mod ffield;
pub mod reptheory;
pub mod galoisrep;
pub mod delpezzo;

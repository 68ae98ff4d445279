//! Connection and Green matrices and the linear algebra around them.

mod assembly;
mod dense;
pub mod det;
pub mod minors;

pub use assembly::{
    build_g, build_l, checkerboard, green_star_product, green_star_product_inner, sign_diagonal,
};
pub use dense::Matrix;
pub use det::{
    charpoly, det_dieudonne, det_dieudonne_complex, det_dieudonne_exact, det_exact, rank, Dieudonne,
};
pub use minors::{cauchy_binet_check, fredholm_energy, fredholm_minor_sum, minor_det};

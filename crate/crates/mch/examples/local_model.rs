//! Parabolic cylinder model at the saddles of ξ = 1 for synthetic reflection.

use mch::localmodel::SaddleModel;
use mch::rhfactors::{Reflection, RHFactorization};
use mch::scattering::DiscreteSpectrum;

fn main() -> mch::Result<()> {
    let f = RHFactorization::new(1.0, Reflection::synthetic(0.5, 0.3)?, DiscreteSpectrum::empty(), None, 1e-10)?;
    for m in SaddleModel::from_factorization(&f, 100.0)? {
        println!("xi_j = {:+.6} eta = {:+} nu = {:.5}", m.xi_j, m.eta, m.nu);
        println!("  |beta12|^2 - nu = {:.1e}, beta12 beta21 - nu = {:.1e}", m.beta12.norm_sqr() - m.nu, (m.beta12 * m.beta21 - m.nu).norm());
        println!("  jump identity error {:.1e}", (m.jump_identity(m.xi_j + 0.3)? + m.r_hat.conj()).norm());
        println!("  A = [[0, {:.5}], [{:.5}, 0]]", m.a[(0, 1)], m.a[(1, 0)]);
    }
    Ok(())
}

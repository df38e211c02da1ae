use klcf::neighborhood::{fits_budget, space_factor, NeighborhoodConfig};
use klcf::Algorithm;

/// Automatic choice between the neighborhood and strided solvers.
///
/// Neighborhood indexing is chosen when `k >= 1`,
/// `k * ((k + 1)(ell0 + 1))^(k + 1/2) <= sqrt(max(n1, n2))` and its keyword
/// indexes fit in the memory budget; strided scanning otherwise. The
/// tabulation solvers are never chosen automatically.
pub fn select_algorithm(n1: usize, n2: usize, ell0: usize, k: usize, cfg: &NeighborhoodConfig) -> Algorithm {
    let n = n1.max(n2) as f64;
    if k >= 1 && space_factor(k, ell0) <= n.sqrt() && fits_budget(n1, n2, k, ell0, cfg) {
        Algorithm::Neighborhood
    } else {
        Algorithm::Strided
    }
}

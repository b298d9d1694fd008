//! Committed claim strings attached to report records.

pub const COUNT_GAUSSIAN: &str = "#G(2,n)(F_p) = Gaussian binomial [n,2]_p";
pub const COUNT_SHEAR: &str = "point count is invariant under the pinned unimodular shear";
pub const DIMENSION: &str = "dim Sigma-bar = 11, 12, 9, 8, 5 for genus 4, 5, 6Q, 6C, 8";
pub const DIMENSION_OTHER: &str = "catalog dimension of the auxiliary variety";
pub const SINGULAR_RANK_LOCUS: &str = "Sing Sigma-bar = rank locus Sigma-bar_i at rational points";
pub const SINGULAR_DUAL_PLANE: &str = "P((U5)*) is contained in Sing Sigma-bar (genus 6Q)";
pub const SINGULAR_Y_BLOCK: &str = "Sing Sigma-bar lies in {y = 0} (genus 6C, no stated singular locus)";
pub const SINGULAR_SMOOTH: &str = "smooth variety: no singular rational points";
pub const SINGULAR_UNSTATED: &str = "no stated singular locus: counts only";
pub const FIBERS_OFF_PLANE: &str = "Sigma' -> Sigma-bar is an isomorphism off the exceptional planes";
pub const FIBERS_RANK: &str = "fiber over x = 0 is a point, P1, P2 for rank M_y = 3, 2, 1";
pub const FIBERS_VERONESE: &str = "P1-fibers over Pi-bar lie over a projected Veronese surface (p^2+p+1 points)";
pub const FIBERS_HYPERPLANE: &str = "fiber over Pi-bar_1 cap Pi-bar_2 is B6 cap H_t";
pub const LINALG_EQUIV: &str = "[x + y] in G(2,V) cap P(V' + U) iff x in V2, y in wedge^2 V2 subset U (y != 0)";
pub const LINALG_ZERO_Y: &str = "y = 0: decomposability does not force wedge^2 V2 subset U";
pub const DEGREE_GENUS: &str = "deg = 2g - 2 for the genus 4, 5, 6, 8 anticanonical models";
pub const DEGREE_TABLEAUX: &str = "deg G(2,n) = #SYT(2 x (n-2)) = hook-length count";
pub const CONSTANTS: &str = "d = f_A - (dim A - 2) > 0, dim Sigma = dim A + N, r = dim A + N - 2, half points = l";
pub const NORMAL_BUNDLE: &str = "exceptional normal bundles have degree -2";
pub const BUNDLE_INDEX: &str = "-K_Sigma' = rank(E) H for the projective-bundle model";
pub const PRIMITIVITY: &str = "alpha D . l = -1 forces alpha = 1";
pub const SECTION_GENERIC: &str = "general codimension-(dim - 3) linear section is a threefold";
pub const SECTION_PLANE: &str = "sections through Pi meet Pi-bar in Pi and are smooth off Pi";

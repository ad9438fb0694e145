#ifndef DSRC_TYPES_HPP
#define DSRC_TYPES_HPP

#include <Eigen/Dense>

namespace dsrc {

/// Conserved vector (rho, rho*u, E), flux triple, or source triple.
using Vector3 = Eigen::Vector3d;

/// Per-cell DG coefficients: rows are conserved variables, columns are
/// Legendre modes 0..2 (mode 0 is the cell mean).
using Modes = Eigen::Matrix3d;

}  // namespace dsrc

#endif  // DSRC_TYPES_HPP

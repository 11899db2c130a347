#pragma once

// Strongly convex domains {rho < 0} in C^n given analytically by a defining
// function together with its first and second derivatives.
//
// Conventions used throughout the library:
//  * points are complex column vectors z in C^n;
//  * gradient(z) is the (1,0)-gradient (d rho/d z_1, ..., d rho/d z_n);
//  * real_hessian(z) is the 2n x 2n Hessian in the real coordinates
//    (x_1, y_1, x_2, y_2, ...), z_j = x_j + i y_j.

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "geodisc/circle.hpp"

namespace geodisc {

using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

enum class DomainKind { ball, ellipsoid, perturbed_ball, homotopy, pullback, custom, scaled };

std::string to_string(DomainKind kind);

/// Interface implemented by every defining function.
class DefiningFunction {
public:
    virtual ~DefiningFunction() = default;

    virtual int dimension() const = 0;
    virtual double value(const CVec& z) const = 0;
    virtual CVec gradient(const CVec& z) const = 0;
    virtual RMat real_hessian(const CVec& z) const = 0;
    /// A point with rho < 0, used as the origin of radial boundary sampling.
    virtual CVec interior_point() const = 0;
    virtual DomainKind kind() const = 0;
};

/// Real-valued perturbation term with analytic derivatives.
struct Bump {
    std::string name;
    std::function<double(const CVec&)> value;
    std::function<CVec(const CVec&)> gradient;
    std::function<RMat(const CVec&)> real_hessian;
};

/// Built-in bumps, selectable by name in domain files:
///   "re_z1_squared" Re(z_1^2), "re_z1_z2" Re(z_1 z_2),
///   "re_z1_cubed" Re(z_1^3), "abs_z1_fourth" |z_1|^4.
Bump named_bump(const std::string& name, int dimension);

struct ConvexityCertificate {
    double min_hessian_eigenvalue = 0.0;
    /// Minimum of the Euclidean norm of the real gradient (= 2 |d rho|).
    double min_gradient_norm = 0.0;
    int sample_count = 0;

    bool passes() const { return min_hessian_eigenvalue > 0.0 && min_gradient_norm > 0.0; }
};

/// Immutable, cheaply copyable handle to a defining function.
class ConvexDomain {
public:
    explicit ConvexDomain(std::shared_ptr<const DefiningFunction> impl);

    int dimension() const { return impl_->dimension(); }
    double rho(const CVec& z) const { return impl_->value(z); }
    CVec grad(const CVec& z) const { return impl_->gradient(z); }
    RMat hess(const CVec& z) const { return impl_->real_hessian(z); }
    CVec interior_point() const { return impl_->interior_point(); }
    DomainKind kind() const { return impl_->kind(); }

    const DefiningFunction& impl() const { return *impl_; }
    const std::shared_ptr<const DefiningFunction>& shared() const { return impl_; }

    /// Ball parameters when kind() == ball.
    bool is_ball() const { return kind() == DomainKind::ball; }
    CVec ball_center() const;
    double ball_radius() const;

private:
    std::shared_ptr<const DefiningFunction> impl_;
};

ConvexDomain make_ball(const CVec& center, double radius);
ConvexDomain make_ellipsoid(const std::vector<double>& semi_axes);
/// |z|^2 - 1 + epsilon * bump(z); throws HypothesisViolation when the
/// convexity certificate fails.
ConvexDomain make_perturbed_ball(double epsilon, Bump bump, int dimension);
/// Same domain without the certificate check.
ConvexDomain make_perturbed_ball_unchecked(double epsilon, Bump bump, int dimension);
/// Homothetic copy center + scale * D, defined by scale^2 rho((z - center) / scale).
/// A ball maps to a ball.
ConvexDomain make_scaled(const ConvexDomain& domain, const CVec& center, double scale);
/// (1 - t) rho_a + t rho_b.
ConvexDomain make_homotopy(const ConvexDomain& a, const ConvexDomain& b, double t);
/// Defining function supplied by the caller with analytic derivatives.
ConvexDomain make_custom(int dimension, std::function<double(const CVec&)> value,
                         std::function<CVec(const CVec&)> gradient,
                         std::function<RMat(const CVec&)> real_hessian, CVec interior_point);
/// rho(map(u)) with derivatives by central finite differences. Used for the
/// Lempert-coordinate picture of a domain, where only the map is available.
ConvexDomain make_pullback(const ConvexDomain& target, std::function<CVec(const CVec&)> map,
                           CVec interior_point, double step = 1e-4);

/// Complex second derivatives from a real Hessian:
/// holo(j,k) = d^2 rho / dz_j dz_k,  mixed(j,k) = d^2 rho / dz_j dzbar_k.
struct ComplexHessian {
    Eigen::MatrixXcd holo;
    Eigen::MatrixXcd mixed;
};
ComplexHessian complex_hessian(const RMat& real_hessian);

/// Real 2n-vector (x_1, y_1, ...) of a complex point, and back.
RVec to_real(const CVec& z);
CVec to_complex(const RVec& x);

/// Point on the boundary along the ray origin + t * direction (t > 0), found by
/// bisection to 1e-12. Returns false when the ray does not leave the domain
/// within max_t.
bool radial_boundary_point(const ConvexDomain& domain, const CVec& origin, const CVec& direction,
                           CVec& out, double max_t = 1e3);

/// Quasi-uniform boundary samples: Halton directions mapped radially to rho = 0.
std::vector<CVec> boundary_samples(const ConvexDomain& domain, int count);

ConvexityCertificate certify(const ConvexDomain& domain, int samples);

/// d rho / |d rho| at a boundary point (|rho(z)| < 1e-8).
CVec unit_outward_conormal(const ConvexDomain& domain, const CVec& z);

/// Largest ball (approximately) inscribed in the domain, centred at a sampled
/// centroid. Used as the start of the continuation path.
struct InscribedBall {
    CVec center;
    double radius = 0.0;
};
InscribedBall inscribed_ball(const ConvexDomain& domain, int samples = 400);
/// Distance from an interior point to the boundary, estimated by sampling.
double boundary_distance(const ConvexDomain& domain, const CVec& z, int samples = 400);

}  // namespace geodisc

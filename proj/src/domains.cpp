#include "geodisc/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "geodisc/errors.hpp"

namespace geodisc {

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::ball: return "ball";
        case DomainKind::ellipsoid: return "ellipsoid";
        case DomainKind::perturbed_ball: return "perturbed_ball";
        case DomainKind::homotopy: return "homotopy";
        case DomainKind::pullback: return "pullback";
        case DomainKind::custom: return "custom";
        case DomainKind::scaled: return "scaled";
    }
    return "unknown";
}

RVec to_real(const CVec& z) {
    RVec x(2 * z.size());
    for (Eigen::Index j = 0; j < z.size(); ++j) {
        x(2 * j) = z(j).real();
        x(2 * j + 1) = z(j).imag();
    }
    return x;
}

CVec to_complex(const RVec& x) {
    CVec z(x.size() / 2);
    for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = {x(2 * j), x(2 * j + 1)};
    return z;
}

ComplexHessian complex_hessian(const RMat& h) {
    const Eigen::Index n = h.rows() / 2;
    ComplexHessian out{Eigen::MatrixXcd(n, n), Eigen::MatrixXcd(n, n)};
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double xx = h(2 * j, 2 * k);
            const double yy = h(2 * j + 1, 2 * k + 1);
            const double xy = h(2 * j, 2 * k + 1);
            const double yx = h(2 * j + 1, 2 * k);
            out.holo(j, k) = 0.25 * cplx(xx - yy, -(xy + yx));
            out.mixed(j, k) = 0.25 * cplx(xx + yy, xy - yx);
        }
    }
    return out;
}

namespace {

void require_dimension(int n) {
    if (n < 2) throw PreconditionError("domains live in C^n with n >= 2");
}

class Ball final : public DefiningFunction {
public:
    Ball(CVec center, double radius) : center_(std::move(center)), radius_(radius) {}

    int dimension() const override { return static_cast<int>(center_.size()); }
    double value(const CVec& z) const override { return (z - center_).squaredNorm() - radius_ * radius_; }
    CVec gradient(const CVec& z) const override { return (z - center_).conjugate(); }
    RMat real_hessian(const CVec&) const override {
        return 2.0 * RMat::Identity(2 * dimension(), 2 * dimension());
    }
    CVec interior_point() const override { return center_; }
    DomainKind kind() const override { return DomainKind::ball; }

    const CVec& center() const { return center_; }
    double radius() const { return radius_; }

private:
    CVec center_;
    double radius_;
};

class Ellipsoid final : public DefiningFunction {
public:
    explicit Ellipsoid(std::vector<double> axes) : axes_(std::move(axes)) {}

    int dimension() const override { return static_cast<int>(axes_.size()); }
    double value(const CVec& z) const override {
        double s = -1.0;
        for (int j = 0; j < dimension(); ++j) s += std::norm(z(j)) / (axes_[j] * axes_[j]);
        return s;
    }
    CVec gradient(const CVec& z) const override {
        CVec g(dimension());
        for (int j = 0; j < dimension(); ++j) g(j) = std::conj(z(j)) / (axes_[j] * axes_[j]);
        return g;
    }
    RMat real_hessian(const CVec&) const override {
        RMat h = RMat::Zero(2 * dimension(), 2 * dimension());
        for (int j = 0; j < dimension(); ++j) {
            h(2 * j, 2 * j) = h(2 * j + 1, 2 * j + 1) = 2.0 / (axes_[j] * axes_[j]);
        }
        return h;
    }
    CVec interior_point() const override { return CVec::Zero(dimension()); }
    DomainKind kind() const override { return DomainKind::ellipsoid; }

private:
    std::vector<double> axes_;
};

class PerturbedBall final : public DefiningFunction {
public:
    PerturbedBall(double epsilon, Bump bump, int n) : epsilon_(epsilon), bump_(std::move(bump)), n_(n) {}

    int dimension() const override { return n_; }
    double value(const CVec& z) const override { return z.squaredNorm() - 1.0 + epsilon_ * bump_.value(z); }
    CVec gradient(const CVec& z) const override {
        return CVec(z.conjugate()) + epsilon_ * bump_.gradient(z);
    }
    RMat real_hessian(const CVec& z) const override {
        return 2.0 * RMat::Identity(2 * n_, 2 * n_) + epsilon_ * bump_.real_hessian(z);
    }
    CVec interior_point() const override { return CVec::Zero(n_); }
    DomainKind kind() const override { return DomainKind::perturbed_ball; }

private:
    double epsilon_;
    Bump bump_;
    int n_;
};

class Homotopy final : public DefiningFunction {
public:
    Homotopy(ConvexDomain a, ConvexDomain b, double t) : a_(std::move(a)), b_(std::move(b)), t_(t) {}

    int dimension() const override { return a_.dimension(); }
    double value(const CVec& z) const override { return (1.0 - t_) * a_.rho(z) + t_ * b_.rho(z); }
    CVec gradient(const CVec& z) const override { return (1.0 - t_) * a_.grad(z) + t_ * b_.grad(z); }
    RMat real_hessian(const CVec& z) const override { return (1.0 - t_) * a_.hess(z) + t_ * b_.hess(z); }
    CVec interior_point() const override {
        const CVec pa = a_.interior_point();
        return value(pa) < 0.0 ? pa : b_.interior_point();
    }
    DomainKind kind() const override { return DomainKind::homotopy; }

private:
    ConvexDomain a_;
    ConvexDomain b_;
    double t_;
};

class Custom final : public DefiningFunction {
public:
    Custom(int n, std::function<double(const CVec&)> v, std::function<CVec(const CVec&)> g,
           std::function<RMat(const CVec&)> h, CVec interior)
        : n_(n), v_(std::move(v)), g_(std::move(g)), h_(std::move(h)), interior_(std::move(interior)) {}

    int dimension() const override { return n_; }
    double value(const CVec& z) const override { return v_(z); }
    CVec gradient(const CVec& z) const override { return g_(z); }
    RMat real_hessian(const CVec& z) const override { return h_(z); }
    CVec interior_point() const override { return interior_; }
    DomainKind kind() const override { return DomainKind::custom; }

private:
    int n_;
    std::function<double(const CVec&)> v_;
    std::function<CVec(const CVec&)> g_;
    std::function<RMat(const CVec&)> h_;
    CVec interior_;
};

class Scaled final : public DefiningFunction {
public:
    Scaled(ConvexDomain base, CVec center, double scale)
        : base_(std::move(base)), center_(std::move(center)), scale_(scale) {}

    int dimension() const override { return base_.dimension(); }
    double value(const CVec& z) const override { return scale_ * scale_ * base_.rho(local(z)); }
    CVec gradient(const CVec& z) const override { return scale_ * base_.grad(local(z)); }
    RMat real_hessian(const CVec& z) const override { return base_.hess(local(z)); }
    CVec interior_point() const override { return center_ + scale_ * base_.interior_point(); }
    DomainKind kind() const override { return DomainKind::scaled; }

private:
    CVec local(const CVec& z) const { return (z - center_) / scale_; }

    ConvexDomain base_;
    CVec center_;
    double scale_;
};

class Pullback final : public DefiningFunction {
public:
    Pullback(ConvexDomain target, std::function<CVec(const CVec&)> map, CVec interior, double step)
        : target_(std::move(target)), map_(std::move(map)), interior_(std::move(interior)), step_(step) {}

    int dimension() const override { return target_.dimension(); }
    double value(const CVec& u) const override { return target_.rho(map_(u)); }

    CVec gradient(const CVec& u) const override {
        const RVec x = to_real(u);
        RVec g(x.size());
        for (Eigen::Index a = 0; a < x.size(); ++a) {
            RVec xp = x, xm = x;
            xp(a) += step_;
            xm(a) -= step_;
            g(a) = (real_value(xp) - real_value(xm)) / (2.0 * step_);
        }
        CVec out(dimension());
        for (int j = 0; j < dimension(); ++j) out(j) = 0.5 * cplx(g(2 * j), -g(2 * j + 1));
        return out;
    }

    RMat real_hessian(const CVec& u) const override {
        const RVec x = to_real(u);
        const Eigen::Index m = x.size();
        const double h = step_;
        const double f0 = real_value(x);
        RMat hess(m, m);
        for (Eigen::Index a = 0; a < m; ++a) {
            RVec xp = x, xm = x;
            xp(a) += h;
            xm(a) -= h;
            hess(a, a) = (real_value(xp) - 2.0 * f0 + real_value(xm)) / (h * h);
            for (Eigen::Index b = a + 1; b < m; ++b) {
                RVec pp = x, pm = x, mp = x, mm = x;
                pp(a) += h; pp(b) += h;
                pm(a) += h; pm(b) -= h;
                mp(a) -= h; mp(b) += h;
                mm(a) -= h; mm(b) -= h;
                hess(a, b) = hess(b, a) =
                    (real_value(pp) - real_value(pm) - real_value(mp) + real_value(mm)) / (4.0 * h * h);
            }
        }
        return hess;
    }

    CVec interior_point() const override { return interior_; }
    DomainKind kind() const override { return DomainKind::pullback; }

private:
    double real_value(const RVec& x) const { return value(to_complex(x)); }

    ConvexDomain target_;
    std::function<CVec(const CVec&)> map_;
    CVec interior_;
    double step_;
};

// Radical inverse in base b (Halton sequence component).
double radical_inverse(int index, int base) {
    double result = 0.0;
    double f = 1.0 / base;
    while (index > 0) {
        result += f * (index % base);
        index /= base;
        f /= base;
    }
    return result;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

// Halton point pushed through Box-Muller: quasi-uniform direction on S^{2n-1}.
CVec halton_direction(int index, int n) {
    if (2 * n > static_cast<int>(std::size(kPrimes))) throw PreconditionError("dimension too large for sampling");
    RVec g(2 * n);
    for (int p = 0; p < n; ++p) {
        const double u1 = std::max(radical_inverse(index, kPrimes[2 * p]), 1e-300);
        const double u2 = radical_inverse(index, kPrimes[2 * p + 1]);
        const double r = std::sqrt(-2.0 * std::log(u1));
        g(2 * p) = r * std::cos(2.0 * std::numbers::pi * u2);
        g(2 * p + 1) = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    const CVec d = to_complex(g);
    return d / d.norm();
}

}  // namespace

ConvexDomain::ConvexDomain(std::shared_ptr<const DefiningFunction> impl) : impl_(std::move(impl)) {
    if (!impl_) throw PreconditionError("null defining function");
}

CVec ConvexDomain::ball_center() const {
    const auto* b = dynamic_cast<const Ball*>(impl_.get());
    if (b == nullptr) throw PreconditionError("domain is not a ball");
    return b->center();
}

double ConvexDomain::ball_radius() const {
    const auto* b = dynamic_cast<const Ball*>(impl_.get());
    if (b == nullptr) throw PreconditionError("domain is not a ball");
    return b->radius();
}

Bump named_bump(const std::string& name, int n) {
    require_dimension(n);
    Bump b;
    b.name = name;
    const int m = 2 * n;
    if (name == "re_z1_squared") {
        b.value = [](const CVec& z) { return (z(0) * z(0)).real(); };
        b.gradient = [n](const CVec& z) {
            CVec g = CVec::Zero(n);
            g(0) = z(0);
            return g;
        };
        b.real_hessian = [m](const CVec&) {
            RMat h = RMat::Zero(m, m);
            h(0, 0) = 2.0;
            h(1, 1) = -2.0;
            return h;
        };
    } else if (name == "re_z1_z2") {
        b.value = [](const CVec& z) { return (z(0) * z(1)).real(); };
        b.gradient = [n](const CVec& z) {
            CVec g = CVec::Zero(n);
            g(0) = 0.5 * z(1);
            g(1) = 0.5 * z(0);
            return g;
        };
        b.real_hessian = [m](const CVec&) {
            RMat h = RMat::Zero(m, m);
            h(0, 2) = h(2, 0) = 1.0;
            h(1, 3) = h(3, 1) = -1.0;
            return h;
        };
    } else if (name == "re_z1_cubed") {
        b.value = [](const CVec& z) { return (z(0) * z(0) * z(0)).real(); };
        b.gradient = [n](const CVec& z) {
            CVec g = CVec::Zero(n);
            g(0) = 1.5 * z(0) * z(0);
            return g;
        };
        b.real_hessian = [m](const CVec& z) {
            RMat h = RMat::Zero(m, m);
            const double x = z(0).real(), y = z(0).imag();
            h(0, 0) = 6.0 * x;
            h(1, 1) = -6.0 * x;
            h(0, 1) = h(1, 0) = -6.0 * y;
            return h;
        };
    } else if (name == "abs_z1_fourth") {
        b.value = [](const CVec& z) { return std::norm(z(0)) * std::norm(z(0)); };
        b.gradient = [n](const CVec& z) {
            CVec g = CVec::Zero(n);
            g(0) = 2.0 * std::norm(z(0)) * std::conj(z(0));
            return g;
        };
        b.real_hessian = [m](const CVec& z) {
            RMat h = RMat::Zero(m, m);
            const double x = z(0).real(), y = z(0).imag();
            h(0, 0) = 12.0 * x * x + 4.0 * y * y;
            h(1, 1) = 4.0 * x * x + 12.0 * y * y;
            h(0, 1) = h(1, 0) = 8.0 * x * y;
            return h;
        };
    } else {
        throw PreconditionError("unknown bump '" + name + "'");
    }
    return b;
}

ConvexDomain make_ball(const CVec& center, double radius) {
    require_dimension(static_cast<int>(center.size()));
    if (!(radius > 0.0)) throw PreconditionError("ball radius must be positive");
    return ConvexDomain(std::make_shared<Ball>(center, radius));
}

ConvexDomain make_ellipsoid(const std::vector<double>& semi_axes) {
    require_dimension(static_cast<int>(semi_axes.size()));
    for (double a : semi_axes) {
        if (!(a > 0.0)) throw PreconditionError("ellipsoid semi-axes must be positive");
    }
    return ConvexDomain(std::make_shared<Ellipsoid>(semi_axes));
}

ConvexDomain make_perturbed_ball_unchecked(double epsilon, Bump bump, int dimension) {
    require_dimension(dimension);
    return ConvexDomain(std::make_shared<PerturbedBall>(epsilon, std::move(bump), dimension));
}

ConvexDomain make_perturbed_ball(double epsilon, Bump bump, int dimension) {
    ConvexDomain d = make_perturbed_ball_unchecked(epsilon, std::move(bump), dimension);
    const ConvexityCertificate cert = certify(d, 400);
    if (!cert.passes()) {
        throw HypothesisViolation("perturbed ball fails the convexity certificate (min Hessian eigenvalue " +
                                  std::to_string(cert.min_hessian_eigenvalue) + ")");
    }
    return d;
}

ConvexDomain make_scaled(const ConvexDomain& domain, const CVec& center, double scale) {
    if (!(scale > 0.0)) throw PreconditionError("scale must be positive");
    if (center.size() != domain.dimension()) throw PreconditionError("center dimension does not match the domain");
    if (domain.is_ball()) return make_ball(center + scale * domain.ball_center(), scale * domain.ball_radius());
    return ConvexDomain(std::make_shared<Scaled>(domain, center, scale));
}

ConvexDomain make_homotopy(const ConvexDomain& a, const ConvexDomain& b, double t) {
    if (a.dimension() != b.dimension()) throw PreconditionError("homotopy between domains of different dimension");
    return ConvexDomain(std::make_shared<Homotopy>(a, b, t));
}

ConvexDomain make_custom(int dimension, std::function<double(const CVec&)> value,
                         std::function<CVec(const CVec&)> gradient,
                         std::function<RMat(const CVec&)> real_hessian, CVec interior_point) {
    require_dimension(dimension);
    return ConvexDomain(std::make_shared<Custom>(dimension, std::move(value), std::move(gradient),
                                                 std::move(real_hessian), std::move(interior_point)));
}

ConvexDomain make_pullback(const ConvexDomain& target, std::function<CVec(const CVec&)> map,
                           CVec interior_point, double step) {
    return ConvexDomain(std::make_shared<Pullback>(target, std::move(map), std::move(interior_point), step));
}

bool radial_boundary_point(const ConvexDomain& domain, const CVec& origin, const CVec& direction,
                           CVec& out, double max_t) {
    if (domain.rho(origin) >= 0.0) throw PreconditionError("radial sampling origin is not interior");
    double lo = 0.0;
    double hi = 1e-3;
    while (domain.rho(origin + hi * direction) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > max_t) return false;
    }
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (domain.rho(origin + mid * direction) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (mid == lo && mid == hi) break;
    }
    out = origin + 0.5 * (lo + hi) * direction;
    return true;
}

std::vector<CVec> boundary_samples(const ConvexDomain& domain, int count) {
    const CVec origin = domain.interior_point();
    std::vector<CVec> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        CVec p;
        if (radial_boundary_point(domain, origin, halton_direction(i, domain.dimension()), p)) pts.push_back(p);
    }
    return pts;
}

ConvexityCertificate certify(const ConvexDomain& domain, int samples) {
    if (samples < 100) throw PreconditionError("certify needs at least 100 samples");
    ConvexityCertificate cert;
    cert.min_hessian_eigenvalue = std::numeric_limits<double>::infinity();
    cert.min_gradient_norm = std::numeric_limits<double>::infinity();
    const CVec origin = domain.interior_point();
    bool unbounded = false;
    for (int i = 1; i <= samples; ++i) {
        CVec p;
        if (!radial_boundary_point(domain, origin, halton_direction(i, domain.dimension()), p)) {
            unbounded = true;
            continue;
        }
        Eigen::SelfAdjointEigenSolver<RMat> eig(domain.hess(p), Eigen::EigenvaluesOnly);
        cert.min_hessian_eigenvalue = std::min(cert.min_hessian_eigenvalue, eig.eigenvalues().minCoeff());
        cert.min_gradient_norm = std::min(cert.min_gradient_norm, 2.0 * domain.grad(p).norm());
        ++cert.sample_count;
    }
    if (unbounded) cert.min_gradient_norm = 0.0;  // rays escaping to infinity: not a bounded domain
    if (cert.sample_count == 0) cert.min_hessian_eigenvalue = -std::numeric_limits<double>::infinity();
    return cert;
}

CVec unit_outward_conormal(const ConvexDomain& domain, const CVec& z) {
    if (std::abs(domain.rho(z)) >= 1e-8) throw PreconditionError("unit_outward_conormal: point is not on the boundary");
    const CVec g = domain.grad(z);
    const double norm = g.norm();
    if (norm == 0.0) throw PreconditionError("unit_outward_conormal: vanishing gradient");
    return g / norm;
}

InscribedBall inscribed_ball(const ConvexDomain& domain, int samples) {
    if (domain.is_ball()) return {domain.ball_center(), domain.ball_radius()};
    const std::vector<CVec> pts = boundary_samples(domain, samples);
    if (pts.empty()) throw PreconditionError("inscribed_ball: no boundary samples");
    CVec c = CVec::Zero(domain.dimension());
    for (const auto& p : pts) c += p;
    c /= static_cast<double>(pts.size());
    if (domain.rho(c) >= 0.0) c = domain.interior_point();
    return {c, boundary_distance(domain, c, samples)};
}

double boundary_distance(const ConvexDomain& domain, const CVec& z, int samples) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= samples; ++i) {
        CVec p;
        if (radial_boundary_point(domain, z, halton_direction(i, domain.dimension()), p)) {
            best = std::min(best, (p - z).norm());
        }
    }
    return best;
}

}  // namespace geodisc
